//! Text format: a JSON object with `conductor`, `rank`, `labels`, `t` and `s`, where each s
//! entry is a list of `[num, den, exp]` terms meaning (num/den) * zeta_N^exp.

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::ModularData;
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};

/// An integer that may be written as a JSON number or, when large, a decimal string.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Int {
    Small(i64),
    Big(String),
}

impl Int {
    fn from_big(v: &BigInt) -> Self {
        v.to_i64().map_or_else(|| Int::Big(v.to_string()), Int::Small)
    }

    fn to_big(&self, at: &str) -> Result<BigInt> {
        match self {
            Int::Small(v) => Ok(BigInt::from(*v)),
            Int::Big(s) => s
                .parse()
                .map_err(|_| Error::Parse(format!("{at}: `{s}` is not an integer"))),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    conductor: u64,
    rank: usize,
    labels: Vec<String>,
    t: Vec<i64>,
    s: Vec<Vec<Vec<(Int, Int, i64)>>>,
}

impl ModularData {
    /// Parse the text format. Entries are canonicalized on load.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: Raw = serde_json::from_str(text)
            .map_err(|e| {
                let msg = e.to_string();
                let msg = msg.rsplit_once(" at line ").map_or(msg.as_str(), |(m, _)| m);
                Error::Parse(format!("line {} column {}: {msg}", e.line(), e.column()))
            })?;
        if raw.conductor == 0 {
            return Err(Error::Parse("conductor: must be positive".into()));
        }
        if raw.s.len() != raw.rank {
            return Err(Error::Parse(format!(
                "s: {} rows but rank is {}",
                raw.s.len(),
                raw.rank
            )));
        }
        let n = raw.conductor;
        let mut s = Vec::with_capacity(raw.rank);
        for (i, row) in raw.s.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (j, terms) in row.iter().enumerate() {
                let mut parsed = Vec::with_capacity(terms.len());
                for (k, (num, den, exp)) in terms.iter().enumerate() {
                    let at = format!("s[{i}][{j}] term {k}");
                    let den = den.to_big(&at)?;
                    if den.is_zero() {
                        return Err(Error::Parse(format!("{at}: zero denominator")));
                    }
                    parsed.push((BigRational::new(num.to_big(&at)?, den), *exp));
                }
                out.push(CycNum::from_terms(n, parsed));
            }
            s.push(out);
        }
        ModularData::new(n, raw.labels, s, raw.t).map_err(|e| match e {
            Error::Malformed(m) => Error::Parse(m),
            other => other,
        })
    }

    /// Serialize deterministically, one s row per line.
    pub fn to_json_string(&self) -> String {
        let r = self.rank();
        let mut out = String::new();
        out.push_str("{\n");
        out.push_str(&format!("  \"conductor\": {},\n", self.conductor()));
        out.push_str(&format!("  \"rank\": {r},\n"));
        out.push_str(&format!(
            "  \"labels\": {},\n",
            serde_json::to_string(self.labels()).expect("strings serialize")
        ));
        out.push_str(&format!(
            "  \"t\": {},\n",
            serde_json::to_string(self.t_exponents()).expect("integers serialize")
        ));
        out.push_str("  \"s\": [\n");
        for x in 0..r {
            let row: Vec<Vec<(Int, Int, i64)>> = self
                .s_row(x)
                .iter()
                .map(|v| {
                    v.terms()
                        .into_iter()
                        .map(|(c, e)| (Int::from_big(c.numer()), Int::from_big(c.denom()), e as i64))
                        .collect()
                })
                .collect();
            out.push_str("    ");
            out.push_str(&serde_json::to_string(&row).expect("terms serialize"));
            out.push_str(if x + 1 < r { ",\n" } else { "\n" });
        }
        out.push_str("  ]\n}\n");
        out
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_json_str(&text).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json_string())
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}
