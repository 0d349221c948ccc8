//! The full analysis of one piece of modular data, as a serializable report.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::Result;
use crate::galois::{self, GaloisOrbitPartition};
use crate::modular_data::{Issue, ModularData};
use crate::subcat::{ClosureReport, LowerBoundReport, Structure, TwoOrbitDiagnosis};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitSummary {
    pub count: usize,
    /// Orbit sizes joined by '+', e.g. "3+2".
    pub shape: String,
    pub orbits: Vec<Vec<String>>,
    pub transitive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeSummary {
    pub subcategories: usize,
    pub galois_closed: usize,
    pub nondegenerate: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Checks {
    /// None when the rank exceeds the lattice bound.
    pub galois_closure: Option<ClosureReport>,
    pub orbit_lower_bound: LowerBoundReport,
    pub orbitwise_pseudoinvertible: bool,
    pub square_twist_failures: Vec<String>,
    pub dims_ratio_failures: Vec<String>,
    /// Objects where the orbit size and the Verlinde field degree disagree.
    pub field_degree_failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub orbits: OrbitSummary,
    pub pointed_rank: usize,
    pub adjoint_rank: usize,
    pub lattice: Option<LatticeSummary>,
    pub checks: Checks,
    pub diagnosis: Option<Diagnosis>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnosis {
    pub summary: String,
    #[serde(flatten)]
    pub detail: TwoOrbitDiagnosis,
}

/// Everything `mtc report` prints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub input: String,
    pub conductor: u64,
    pub rank: usize,
    pub validation: Vec<Issue>,
    /// Absent when validation fails.
    pub analysis: Option<Analysis>,
}

impl AnalysisReport {
    /// Validation and every structural check passed.
    pub fn passed(&self) -> bool {
        self.validation.is_empty()
            && self.analysis.as_ref().is_some_and(|a| {
                let c = &a.checks;
                c.galois_closure.as_ref().is_none_or(ClosureReport::passed)
                    && c.orbit_lower_bound.holds
                    && c.square_twist_failures.is_empty()
                    && c.dims_ratio_failures.is_empty()
                    && c.field_degree_failures.is_empty()
            })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn summarize_orbits(m: &ModularData, p: &GaloisOrbitPartition) -> OrbitSummary {
    let labels = m.labels();
    OrbitSummary {
        count: p.orbit_count(),
        shape: p
            .orbit_sizes()
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join("+"),
        orbits: p
            .orbits
            .iter()
            .map(|o| o.iter().map(|&x| labels[x].clone()).collect())
            .collect(),
        transitive: p.is_transitive(),
    }
}

/// Run the analysis; `max_rank` bounds the subcategory lattice work.
pub fn analyze(input: &str, m: &ModularData, max_rank: usize) -> Result<AnalysisReport> {
    let validation = m.validate();
    let mut report = AnalysisReport {
        input: input.to_string(),
        conductor: m.conductor(),
        rank: m.rank(),
        validation: validation.issues,
        analysis: None,
    };
    if !report.validation.is_empty() {
        return Ok(report);
    }
    let st = Structure::new(m)?;
    let p = st.partition();
    let within = m.rank() <= max_rank;
    let lattice = if within {
        let subs = st.all_subcategories(max_rank)?;
        Some(LatticeSummary {
            subcategories: subs.len(),
            galois_closed: subs.iter().filter(|d| st.is_galois_closed(d)).count(),
            nondegenerate: subs.iter().filter(|d| st.is_nondegenerate(d)).count(),
        })
    } else {
        None
    };
    let field_degree_failures = (0..m.rank())
        .filter_map(|x| galois::verlinde_field_degree(m, x, p).err().map(|e| e.to_string()))
        .collect();
    let checks = Checks {
        galois_closure: if within { Some(st.check_theorem_galois_closure(max_rank)?) } else { None },
        orbit_lower_bound: st.check_orbit_lower_bound(),
        orbitwise_pseudoinvertible: st.orbitwise_pseudoinvertible(),
        square_twist_failures: galois::square_twist_consistency(m, p).failures,
        dims_ratio_failures: galois::dims_ratio_check(m, p),
        field_degree_failures,
    };
    let diagnosis = if p.orbit_count() == 2 && within {
        let d = st.two_orbit_diagnosis(max_rank)?;
        Some(Diagnosis { summary: d.describe(), detail: d })
    } else {
        None
    };
    report.analysis = Some(Analysis {
        orbits: summarize_orbits(m, p),
        pointed_rank: st.pointed_part().rank(),
        adjoint_rank: st.adjoint_part().rank(),
        lattice,
        checks,
        diagnosis,
    });
    Ok(report)
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        writeln!(out, "input: {}", self.input)?;
        writeln!(out, "conductor {}, rank {}", self.conductor, self.rank)?;
        if !self.validation.is_empty() {
            writeln!(out, "validation: FAIL")?;
            for i in &self.validation {
                writeln!(out, "  [{}] {}", i.check, i.detail)?;
            }
            return f.write_str(&out);
        }
        writeln!(out, "validation: ok")?;
        let a = self.analysis.as_ref().expect("valid data is analyzed");
        let o = &a.orbits;
        let kind = if o.transitive { "transitive".to_string() } else { format!("{} orbits", o.count) };
        writeln!(out, "orbits: {} ({kind})", o.shape)?;
        for orbit in &o.orbits {
            writeln!(out, "  {{{}}}", orbit.join(", "))?;
        }
        writeln!(out, "pointed rank {}, adjoint rank {}", a.pointed_rank, a.adjoint_rank)?;
        match &a.lattice {
            Some(l) => writeln!(
                out,
                "subcategories: {} ({} Galois closed, {} nondegenerate)",
                l.subcategories, l.galois_closed, l.nondegenerate
            )?,
            None => writeln!(out, "subcategories: skipped (rank above bound)")?,
        }
        let c = &a.checks;
        if let Some(g) = &c.galois_closure {
            writeln!(out, "closure <=> integral centralizer: {}", mark(g.passed()))?;
            for msg in &g.failures {
                writeln!(out, "  {msg}")?;
            }
        }
        let lb = &c.orbit_lower_bound;
        writeln!(out, "orbit lower bound {} <= {}: {}", lb.bound, lb.orbit_count, mark(lb.holds))?;
        writeln!(out, "orbitwise pseudoinvertible: {}", c.orbitwise_pseudoinvertible)?;
        writeln!(out, "square twist consistency: {}", mark(c.square_twist_failures.is_empty()))?;
        writeln!(out, "dimension ratios: {}", mark(c.dims_ratio_failures.is_empty()))?;
        writeln!(out, "orbit size = field degree: {}", mark(c.field_degree_failures.is_empty()))?;
        if let Some(d) = &a.diagnosis {
            writeln!(out, "diagnosis: {}", d.summary)?;
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::fixture;

    #[test]
    fn sl2_12_report() {
        let m = fixture("sl2_12_A0").unwrap();
        let r = analyze("sl2_12_A0", &m, 64).unwrap();
        assert!(r.passed(), "{r}");
        let a = r.analysis.as_ref().unwrap();
        assert_eq!(a.orbits.shape, "3+2");
        assert_eq!(a.diagnosis.as_ref().unwrap().summary, "(d) simple, two orbits");
    }

    #[test]
    fn ising_and_fib() {
        let r = analyze("ising", &fixture("ising").unwrap(), 64).unwrap();
        assert_eq!(r.analysis.unwrap().diagnosis.unwrap().detail.clause.letter(), "b");
        let r = analyze("fib", &fixture("fib").unwrap(), 64).unwrap();
        assert!(r.to_string().contains("(transitive)"));
    }

    #[test]
    fn reports_are_deterministic() {
        let m = fixture("so5_3half_ad").unwrap();
        let a = analyze("x", &m, 64).unwrap().to_json();
        let b = analyze("x", &m, 64).unwrap().to_json();
        assert_eq!(a, b);
    }
}
