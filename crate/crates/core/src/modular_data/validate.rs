use std::collections::HashMap;

use serde::Serialize;

use super::ModularData;
use crate::cyclotomic::CycNum;

/// One failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Issue {
    pub check: &'static str,
    pub detail: String,
}

/// Outcome of [`ModularData::validate`]; every check runs, failures are collected.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
    /// Charge conjugation read from s^2 / dim(C), when it is a permutation.
    pub charge_conjugation: Option<Vec<usize>>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.issues.is_empty()
    }

    fn fail(&mut self, check: &'static str, detail: impl Into<String>) {
        self.issues.push(Issue {
            check,
            detail: detail.into(),
        });
    }
}

impl ModularData {
    /// Run the full validation contract.
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::default();
        let r = self.rank();
        let n = self.conductor();

        if self.t[0] != 0 {
            rep.fail("twist", "the unit object must have trivial twist");
        }
        let tc = self.twist_conductor();
        if tc != n {
            rep.fail("twist", format!("lcm of twist orders is {tc}, conductor is {n}"));
        }
        if !self.s(0, 0).is_one() {
            rep.fail("unit", "s_00 is not 1");
        }
        for i in 0..r {
            for j in i + 1..r {
                if self.s(i, j) != self.s(j, i) {
                    rep.fail("symmetry", format!("s not symmetric at ({i},{j})"));
                }
            }
        }
        let mut dims_ok = true;
        for (x, d) in self.dims().iter().enumerate() {
            if d.is_zero() {
                rep.fail("dimension", format!("zero dimension at {x}"));
                dims_ok = false;
            } else if !d.is_real() {
                rep.fail("dimension", format!("dimension of {x} is not real"));
                dims_ok = false;
            }
        }

        let dim = self.global_dim();
        let conj: Vec<CycNum> = self.s.iter().map(CycNum::conjugate).collect();
        let mut unitary = true;
        for i in 0..r {
            for j in i..r {
                let v = (0..r).fold(CycNum::zero(n), |acc, k| acc + self.s(i, k) * &conj[j * r + k]);
                let expect = if i == j { dim.clone() } else { CycNum::zero(n) };
                if v != expect {
                    rep.fail("invertibility", format!("(s s*)_({i},{j}) != dim(C) delta"));
                    unitary = false;
                }
            }
        }

        // With s symmetric and s s* = dim(C) I, conj(s) = P s for a permutation P forces
        // s^2 = dim(C) P, since dim(C) is real.
        let symmetric = !rep.issues.iter().any(|i| i.check == "symmetry");
        if unitary && symmetric {
            let rows: HashMap<&[CycNum], usize> = (0..r).map(|i| (self.s_row(i), i)).collect();
            let perm: Option<Vec<usize>> = (0..r)
                .map(|i| rows.get(&conj[i * r..(i + 1) * r]).copied())
                .collect();
            match perm {
                None => rep.fail("charge conjugation", "s^2 / dim(C) is not a permutation matrix"),
                Some(c) => {
                    if (0..r).any(|i| c[c[i]] != i) {
                        rep.fail("charge conjugation", "C^2 != I");
                    }
                    rep.charge_conjugation = Some(c);
                }
            }
        }

        if dims_ok {
            match self.verlinde() {
                Err(e) => rep.fail("verlinde", e.to_string()),
                Ok(f) => {
                    if let Some(c) = &rep.charge_conjugation {
                        if let Some(x) = (0..r).find(|&x| f.dual(x) != c[x]) {
                            rep.fail(
                                "charge conjugation",
                                format!("Verlinde dual of {x} differs from s^2 / dim(C)"),
                            );
                        }
                    }
                }
            }
        }
        rep
    }
}
