//! Sets of roots of unity, square Galois orbits, and the t-spectrum tables of the
//! irreducible representations of SL(2, Z/NZ).

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::arith::{gcd, is_prime, legendre, units};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};

/// A set of roots of unity; (n, e) stands for zeta_n^e with gcd(e, n) = 1 and 0 <= e < n.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RootSet {
    elements: BTreeSet<(u64, u64)>,
}

fn lowest_terms(n: u64, e: i64) -> (u64, u64) {
    let e = e.rem_euclid(n as i64) as u64;
    let g = gcd(e, n);
    let order = n / g;
    (order, if order == 1 { 0 } else { e / g })
}

impl RootSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Insert zeta_n^e, reduced to lowest terms.
    pub fn insert(&mut self, n: u64, e: i64) {
        self.elements.insert(lowest_terms(n, e));
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, n: u64, e: i64) -> bool {
        self.elements.contains(&lowest_terms(n, e))
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.elements.iter().copied()
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        RootSet {
            elements: self.elements.union(&other.elements).copied().collect(),
        }
    }

    pub fn is_disjoint(&self, other: &RootSet) -> bool {
        self.elements.is_disjoint(&other.elements)
    }

    /// All products ab with a in self and b in other.
    pub fn product(&self, other: &RootSet) -> RootSet {
        let mut out = RootSet::new();
        for &(n1, e1) in &self.elements {
            for &(n2, e2) in &other.elements {
                let g = gcd(n1, n2);
                let n = n1 / g * n2;
                out.insert(n, (e1 * (n / n1) + e2 * (n / n2)) as i64);
            }
        }
        out
    }

    /// Orbit of one element under zeta -> zeta^(k^2).
    fn square_orbit(n: u64, e: u64) -> BTreeSet<(u64, u64)> {
        units(n)
            .into_iter()
            .map(|k| (n, if n == 1 { 0 } else { (e * (k * k % n)) % n }))
            .collect()
    }

    /// Whether the set is a union of full square Galois orbits.
    pub fn is_square_galois_closed(&self) -> bool {
        self.elements
            .iter()
            .all(|&(n, e)| Self::square_orbit(n, e).is_subset(&self.elements))
    }
}

impl FromIterator<(u64, i64)> for RootSet {
    fn from_iter<I: IntoIterator<Item = (u64, i64)>>(iter: I) -> Self {
        let mut s = RootSet::new();
        for (n, e) in iter {
            s.insert(n, e);
        }
        s
    }
}

/// All n-th roots of unity.
pub fn make_phi(n: u64) -> RootSet {
    (0..n as i64).map(|e| (n, e)).collect()
}

/// Primitive n-th roots of unity.
pub fn make_gamma(n: u64) -> RootSet {
    units(n).into_iter().map(|e| (n, e as i64)).collect()
}

fn check_residue(p: u64, lambda: u32, r: i64) -> Result<()> {
    if !is_prime(p) || lambda == 0 {
        return Err(Error::InvalidParameter(format!("need p prime and lambda >= 1, got p = {p}, lambda = {lambda}")));
    }
    if r.rem_euclid(p as i64) == 0 {
        return Err(Error::InvalidParameter(format!("residue {r} is divisible by {p}")));
    }
    Ok(())
}

/// The square Galois orbit of zeta_{p^lambda}^r.
pub fn make_gamma_res(p: u64, lambda: u32, r: i64) -> Result<RootSet> {
    check_residue(p, lambda, r)?;
    let n = p.pow(lambda);
    Ok(units(n).into_iter().map(|u| (n, r * (u * u % n) as i64)).collect())
}

/// Union of Gamma^r_{p^j} over 0 <= j <= m, with Gamma^r_1 = {1}.
pub fn make_phi_res(p: u64, m: u32, r: i64) -> Result<RootSet> {
    let mut out = make_gamma(1);
    for j in 1..=m {
        out = out.union(&make_gamma_res(p, j, r)?);
    }
    Ok(out)
}

/// Number of orbits of zeta -> zeta^(k^2) meeting the set.
pub fn square_galois_orbit_count(s: &RootSet) -> usize {
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for (n, e) in s.iter() {
        if seen.contains(&(n, e)) {
            continue;
        }
        count += 1;
        seen.extend(RootSet::square_orbit(n, e));
    }
    count
}

/// One term of a printed spectrum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Term {
    Phi { n: u64 },
    Gamma { n: u64 },
    GammaRes { p: u64, lambda: u32, r: i64 },
    PhiRes { p: u64, m: u32, r: i64 },
    /// { zeta_{p^lambda}^{r (x^2 + p^sigma t y^2)} : p does not divide y, p divides x }, p odd.
    OddQuadratic { p: u64, lambda: u32, sigma: u32, r: i64, t: i64 },
    /// { zeta_{2^lambda}^{r (x^2 + 2^sigma y^2)} : x or y odd }.
    TwoQuadratic { lambda: u32, sigma: u32, r: i64 },
}

impl Term {
    pub fn roots(&self) -> Result<RootSet> {
        Ok(match *self {
            Term::Phi { n } => make_phi(n),
            Term::Gamma { n } => make_gamma(n),
            Term::GammaRes { p, lambda, r } => make_gamma_res(p, lambda, r)?,
            Term::PhiRes { p, m, r } => make_phi_res(p, m, r)?,
            Term::OddQuadratic { p, lambda, sigma, r, t } => {
                let n = p.pow(lambda);
                let c = (p.pow(sigma) as i64) * t;
                let mut s = RootSet::new();
                for x in (0..n as i64).step_by(p as usize) {
                    for y in (0..n as i64).filter(|y| y % p as i64 != 0) {
                        s.insert(n, r * (x * x + c * y * y));
                    }
                }
                s
            }
            Term::TwoQuadratic { lambda, sigma, r } => {
                let n = 1u64 << lambda;
                let c = 1i64 << sigma;
                let mut s = RootSet::new();
                for x in 0..n as i64 {
                    for y in 0..n as i64 {
                        if x % 2 == 1 || y % 2 == 1 {
                            s.insert(n, r * (x * x + c * y * y));
                        }
                    }
                }
                s
            }
        })
    }
}

fn pow_label(p: u64, e: u32) -> String {
    if e == 0 {
        "1".to_string()
    } else if e == 1 {
        p.to_string()
    } else {
        format!("{{{p}^{e}}}")
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Phi { n } => write!(f, "Phi_{n}"),
            Term::Gamma { n } => write!(f, "Gamma_{n}"),
            Term::GammaRes { p, lambda, r } => write!(f, "Gamma_{}^{r}", pow_label(*p, *lambda)),
            Term::PhiRes { p, m, r } => write!(f, "Phi_{}^{r}", pow_label(*p, *m)),
            Term::OddQuadratic { p, lambda, sigma, r, t } => write!(
                f,
                "{{z_{}^({r}(x^2+{p}^{sigma}*{t}y^2)) : p|x, p!|y}}",
                pow_label(*p, *lambda)
            ),
            Term::TwoQuadratic { lambda, sigma, r } => write!(
                f,
                "{{z_{}^({r}(x^2+2^{sigma}y^2)) : x or y odd}}",
                pow_label(2, *lambda)
            ),
        }
    }
}

/// The |Gal| column: an exact count or a lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum GalCount {
    Exact(usize),
    AtLeast(usize),
}

/// One instantiated table row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub table: u8,
    pub label: String,
    /// N for the representations of SL(2, Z/NZ) listed in the table.
    pub level: u64,
    pub dim: u64,
    pub spectrum: Vec<Term>,
    /// None where the table prints no value.
    pub multiplicity_free: Option<bool>,
    pub gal: Option<GalCount>,
}

impl TableRow {
    pub fn spectrum_text(&self) -> String {
        self.spectrum
            .iter()
            .map(Term::to_string)
            .collect::<Vec<_>>()
            .join(" u ")
    }
}

struct Builder {
    table: u8,
    level: u64,
    rows: Vec<TableRow>,
}

impl Builder {
    fn new(table: u8, level: u64) -> Self {
        Builder { table, level, rows: Vec::new() }
    }

    fn row(&mut self, label: impl Into<String>, dim: u64, spectrum: Vec<Term>, mf: bool, gal: GalCount) {
        self.rows.push(TableRow {
            table: self.table,
            label: label.into(),
            level: self.level,
            dim,
            spectrum,
            multiplicity_free: Some(mf),
            gal: Some(gal),
        });
    }
}

use GalCount::{AtLeast, Exact};

fn phi(n: u64) -> Term {
    Term::Phi { n }
}

fn gamma(n: u64) -> Term {
    Term::Gamma { n }
}

fn gres(p: u64, lambda: u32, r: i64) -> Term {
    Term::GammaRes { p, lambda, r }
}

fn g2(lambda: u32, r: i64) -> Term {
    gres(2, lambda, r)
}

/// Smallest quadratic residue and non-residue modulo an odd prime.
fn residue_pair(p: u64) -> (i64, i64) {
    let find = |want: i32| (1..p as i64).find(|&r| legendre(r, p) == want).expect("p is an odd prime");
    (find(1), find(-1))
}

/// Table 1, level p.
pub fn table1(p: u64) -> Vec<TableRow> {
    let mut b = Builder::new(1, p);
    let (qr, qn) = residue_pair(p);
    b.row("D_1(chi)", p + 1, vec![phi(p)], false, Exact(3));
    b.row("N_1(chi)", p - 1, vec![gamma(p)], true, Exact(2));
    for r in [qr, qn] {
        b.row(format!("R_1({r},chi_1)"), p.div_ceil(2), vec![gamma(1), gres(p, 1, r)], true, Exact(2));
        b.row(format!("R_1({r},chi_-1)"), (p - 1) / 2, vec![gres(p, 1, r)], true, Exact(1));
    }
    b.row("N_1(chi_1)", p, vec![phi(p)], true, Exact(3));
    b.rows
}

/// Table 2, level p^lambda with lambda >= 2.
pub fn table2(p: u64, lambda: u32) -> Vec<TableRow> {
    let n = p.pow(lambda);
    let mut b = Builder::new(2, n);
    let (qr, qn) = residue_pair(p);
    let big = (p * p - 1) * p.pow(lambda - 2) / 2;
    b.row(format!("D_{lambda}(chi)"), (p + 1) * p.pow(lambda - 1), vec![phi(n)], false, Exact(2 * lambda as usize + 1));
    b.row(format!("N_{lambda}(chi)"), (p - 1) * p.pow(lambda - 1), vec![gamma(n)], true, Exact(2));
    for r in [qr, qn] {
        for t in [qr, qn] {
            for sigma in 1..lambda {
                b.row(
                    format!("R_{lambda}^{sigma}({r},{t},chi)"),
                    big,
                    vec![gres(p, lambda, r), Term::OddQuadratic { p, lambda, sigma, r, t }],
                    sigma == 1,
                    AtLeast(sigma as usize + 1),
                );
            }
        }
        b.row(
            format!("R_{lambda}({r},chi_pm)_1"),
            big,
            vec![gres(p, lambda, r), Term::PhiRes { p, m: lambda - 2, r }],
            lambda == 2 && p == 3,
            Exact(lambda as usize),
        );
    }
    b.rows
}

/// Table 3, level 2.
pub fn table3() -> Vec<TableRow> {
    let mut b = Builder::new(3, 2);
    b.row("C_2=N_1(chi)", 1, vec![gamma(2)], true, Exact(1));
    b.row("N_1(chi_1)", 2, vec![phi(2)], true, Exact(2));
    b.rows
}

/// Table 4, level 4.
pub fn table4() -> Vec<TableRow> {
    let mut b = Builder::new(4, 4);
    b.row("R_2^0(1,1,chi_1)", 3, vec![phi(2), g2(2, 1)], true, Exact(3));
    b.row("R_2^0(3,1,chi_1)", 3, vec![phi(2), g2(2, 3)], true, Exact(3));
    b.row("R_2^0(1,3)_1", 3, vec![gamma(1), gamma(4)], true, Exact(3));
    b.row("C_2 x R_2^0(1,3)_1", 3, vec![gamma(2), gamma(4)], true, Exact(3));
    b.row("N_2(chi)", 2, vec![gamma(4)], true, Exact(2));
    b.row("C_3=R_2^0(3,1,chi)", 1, vec![g2(2, 3)], true, Exact(1));
    b.row("C_4=R_2^0(1,1,chi)", 1, vec![g2(2, 1)], true, Exact(1));
    b.rows
}

/// Spectrum of the one-dimensional C_j.
fn c_j(j: u8) -> Term {
    match j {
        1 => gamma(2),
        2 => gamma(1),
        3 => g2(2, 1),
        _ => g2(2, 3),
    }
}

/// Table 5, level 8.
pub fn table5() -> Vec<TableRow> {
    let mut b = Builder::new(5, 8);
    for (r, t, x, y) in [(1, 1, 1, 3), (1, 3, 1, 7), (3, 3, 3, 5), (5, 1, 5, 7)] {
        b.row(format!("R_3^1({r},{t},chi_1)"), 6, vec![gamma(4), g2(3, x), g2(3, y)], true, Exact(4));
    }
    b.row("R_3^0(1,3,chi_1)_1", 6, vec![phi(2), gamma(8)], true, Exact(6));
    b.row("C_3 x R_3^0(1,3,chi_1)_1", 6, vec![gamma(4), gamma(8)], true, Exact(6));
    b.row("N_3(chi)", 4, vec![g2(3, 1), g2(3, 3), g2(3, 5), g2(3, 7)], true, Exact(4));
    for (j, x, y) in [(1, 3, 5), (2, 1, 7), (3, 1, 3), (4, 5, 7)] {
        b.row(format!("C_{j} x N_3(chi)_+"), 2, vec![g2(3, x), g2(3, y)], true, Exact(2));
    }
    for (sign, low, high) in [("+", [1, 5], [3, 7]), ("-", [3, 7], [1, 5])] {
        for j in 1..=4u8 {
            let [x, y] = if j <= 2 { low } else { high };
            b.row(
                format!("C_{j} x R_3^0(1,3,chi)_{sign}"),
                3,
                vec![c_j(j), g2(3, x), g2(3, y)],
                true,
                Exact(3),
            );
        }
    }
    b.rows
}

/// Table 6, level 16.
pub fn table6() -> Vec<TableRow> {
    let mut b = Builder::new(6, 16);
    b.row("D_4(chi)", 24, vec![phi(16)], false, Exact(12));
    b.row("N_4(chi)", 8, vec![gamma(16)], true, Exact(4));
    for r in [1, 3] {
        for t in [1, 5] {
            let tail = if t == 1 { [g2(3, r), g2(3, 5 * r)] } else { [g2(3, 3 * r), g2(3, 7 * r)] };
            let mut s = vec![g2(4, r), g2(4, 5 * r)];
            s.extend(tail);
            b.row(format!("R_4^0({r},{t},chi)"), 6, s, true, Exact(4));
        }
    }
    let three_dim: [(&str, [(i64, i64); 4]); 4] = [
        ("R_4^0(1,1,chi)_+", [(5, 1), (1, 1), (3, 5), (7, 5)]),
        ("R_4^0(1,1,chi)_-", [(1, 5), (5, 5), (7, 1), (3, 1)]),
        ("R_4^0(3,1,chi)_+", [(7, 3), (3, 3), (5, 7), (1, 7)]),
        ("R_4^0(3,1,chi)_-", [(3, 7), (7, 7), (1, 3), (5, 3)]),
    ];
    for (name, cases) in three_dim {
        for (j, (x, y)) in cases.into_iter().enumerate() {
            b.row(format!("C_{} x {name}", j + 1), 3, vec![g2(3, x), g2(4, y)], true, Exact(2));
        }
    }
    for (t, x, y) in [(3, 3, 5), (7, 1, 7)] {
        b.row(format!("R_4^0(1,{t},chi)_pm"), 6, vec![g2(4, 1), g2(4, 7), g2(3, x), g2(3, y)], true, Exact(4));
    }
    for (r, t, head, q) in [(1, 1, 2, 1), (1, 3, 1, 3), (3, 1, 2, 3), (3, 3, 1, 1)] {
        b.row(
            format!("R_4^2({r},{t},chi)"),
            6,
            vec![gamma(head), g2(2, q), g2(4, r), g2(4, 5 * r)],
            true,
            Exact(4),
        );
    }
    for (r, q) in [(1, 1), (3, 3)] {
        b.row(format!("C_2 x R_4^2({r},3,chi)"), 6, vec![gamma(2), g2(2, q), g2(4, r), g2(4, 5 * r)], true, Exact(4));
    }
    b.row("R_4^2(r,3,chi_1)_1", 6, vec![gamma(1), g2(2, 3), g2(4, 1), g2(4, 5)], true, Exact(4));
    b.row("N_3(chi)_+ x R_4^0(1,7,psi)_+", 12, vec![gamma(2), gamma(4), gamma(16)], false, Exact(7));
    b.rows
}

/// Table 7, level 32.
pub fn table7() -> Vec<TableRow> {
    let mut b = Builder::new(7, 32);
    b.row("D_5(chi)", 48, vec![phi(32)], false, Exact(16));
    b.row("N_5(chi)", 16, vec![gamma(32)], true, Exact(4));
    for r in [1, 3] {
        for t in [1, 5] {
            let tail = if t == 1 { [g2(4, r), g2(4, 5 * r)] } else { [g2(4, 3 * r), g2(4, 7 * r)] };
            let mut s = vec![g2(5, r), g2(5, 5 * r)];
            s.extend(tail);
            b.row(format!("R_5^0({r},{t},chi)"), 12, s, true, Exact(4));
        }
    }
    b.row("R_5^0(1,3,chi)", 24, vec![gamma(32), gamma(8)], false, Exact(8));
    b.row("R_5^0(1,7,chi)", 24, vec![gamma(32), phi(4)], false, Exact(8));
    let r1: [(i64, [i64; 2], i64, i64, i64); 4] = [(1, [1, 5], 3, 1, 3), (3, [1, 3], 7, 3, 5), (5, [1, 5], 3, 5, 7), (7, [1, 3], 7, 1, 7)];
    for (t, rs, second, a, c) in r1 {
        for r in rs {
            b.row(
                format!("R_5^1({r},{t},chi)"),
                12,
                vec![g2(5, 1), g2(5, second), g2(4, a * r), g2(4, c * r)],
                true,
                Exact(4),
            );
        }
    }
    for r in [1, 3] {
        for t in [1, 3, 5, 7] {
            b.row(format!("R_5^2({r},{t},chi)_pm"), 6, vec![gamma(16), g2(5, r)], true, Exact(3));
        }
    }
    for r in [1, 3] {
        b.row(
            format!("R_5^2({r},1,chi)_1"),
            12,
            vec![gamma(1), gamma(2), g2(3, r), g2(3, 5 * r), g2(5, r), g2(5, 5 * r)],
            true,
            Exact(6),
        );
    }
    for r in [1, 3] {
        b.rows.push(TableRow {
            table: 7,
            label: format!("C_3 x R_5^2({r},1,chi)_1"),
            level: 32,
            dim: 12,
            spectrum: vec![gamma(4), g2(3, 3 * r), g2(3, 7 * r), g2(5, r), g2(5, 5 * r)],
            multiplicity_free: None,
            gal: None,
        });
    }
    b.rows
}

/// Table 8, level 2^lambda with lambda >= 6.
pub fn table8(lambda: u32) -> Vec<TableRow> {
    let l = lambda;
    let n = 1u64 << l;
    let mut b = Builder::new(8, n);
    let (full, half, quarter, eighth) = (3 << (l - 1), 3 << (l - 2), 3 << (l - 3), 3 << (l - 4));
    b.row(format!("D_{l}(chi)"), full, vec![phi(n)], false, Exact(4 * (l as usize - 1)));
    b.row(format!("N_{l}(chi)"), 1 << (l - 1), vec![gamma(n)], true, Exact(4));
    b.row(format!("R_{l}^0(1,3,chi)"), half, vec![gamma(n), gamma(n >> 2)], false, Exact(8));
    b.row(format!("R_{l}^0(1,7,chi)"), half, vec![gamma(n), phi(n >> 3)], false, Exact(4 * (l as usize - 3)));
    for r in [1, 3] {
        for t in [1, 5] {
            let tail = if t == 1 { [g2(l - 1, r), g2(l - 1, 5 * r)] } else { [g2(l - 1, 3 * r), g2(l - 1, 7 * r)] };
            let mut s = vec![g2(l, r), g2(l, 5 * r)];
            s.extend(tail);
            b.row(format!("R_{l}^0({r},{t},chi)"), quarter, s, true, Exact(4));
        }
    }
    for r in [1, 3] {
        for t in [3, 7] {
            b.row(
                format!("R_{l}^1({r},{t},chi)"),
                quarter,
                vec![g2(l, r), g2(l, 5 * r), g2(l - 1, r * t), g2(l - 1, 7 * r * t)],
                true,
                Exact(4),
            );
        }
    }
    for r in [1, 5] {
        for t in [1, 5] {
            b.row(
                format!("R_{l}^1({r},{t},chi)"),
                quarter,
                vec![g2(l, r), g2(l, 5 * r), g2(l - 1, r * t), g2(l - 1, 3 * r * t)],
                true,
                Exact(4),
            );
        }
    }
    for r in [1, 3] {
        for t in [1, 3, 5, 7] {
            let mut s = vec![g2(l, r), g2(l, 5 * r), g2(l - 2, r * t), g2(l - 2, 5 * r * t)];
            let gal = match t {
                1 => {
                    s.extend([g2(l - 3, r), g2(l - 3, 5 * r)]);
                    6
                }
                3 => {
                    s.push(gamma(n >> 4));
                    8
                }
                5 => {
                    s.extend([g2(l - 3, 3 * r), g2(l - 3, 7 * r)]);
                    6
                }
                _ => {
                    s.push(phi(n >> 5));
                    if l == 6 {
                        6
                    } else {
                        4 * (l as usize - 6)
                    }
                }
            };
            b.row(format!("R_{l}^2({r},{t},chi)"), quarter, s, false, Exact(gal));
        }
    }
    for sigma in 3..=l - 3 {
        for r in [1, 3, 5, 7] {
            b.row(
                format!("R_{l}^{sigma}({r},t,chi)"),
                eighth,
                vec![Term::TwoQuadratic { lambda: l, sigma, r }],
                false,
                AtLeast(sigma as usize + 1),
            );
        }
    }
    let deep = |r: i64| {
        vec![g2(l, r), g2(l - 2, r), g2(l - 4, r), Term::PhiRes { p: 2, m: l - 6, r }]
    };
    for r in [1, 3, 5, 7] {
        b.row(format!("R_{l}^{}({r},t,chi)", l - 2), eighth, deep(r), false, Exact(l as usize - 2));
    }
    if l >= 7 {
        for r in [1, 3, 5, 7] {
            b.row(format!("R_{l}^{}({r},t,chi_pm1)_1", l - 3), eighth, deep(r), false, Exact(l as usize - 2));
        }
    }
    if l == 6 {
        for r in [1, 3, 5, 7] {
            b.row(format!("R_6^4({r},1,chi_1)_1"), 12, vec![gamma(1), g2(2, r), g2(4, 5 * r), g2(6, r)], true, Exact(4));
        }
        for r in [1, 3, 5, 7] {
            b.row(format!("C_2 x R_6^4({r},t,chi_1)_1"), 12, vec![gamma(2), g2(2, 3 * r), g2(4, 5 * r), g2(6, r)], true, Exact(4));
        }
    }
    b.rows
}

/// Which instantiations to encode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableScope {
    pub odd_primes: Vec<u64>,
    pub table2_lambdas: Vec<u32>,
    pub table8_lambdas: Vec<u32>,
}

impl Default for TableScope {
    fn default() -> Self {
        TableScope {
            odd_primes: vec![3, 5, 7, 11],
            table2_lambdas: vec![2, 3],
            table8_lambdas: vec![6, 7],
        }
    }
}

/// Every encoded row for the scope, in table order.
pub fn all_rows(scope: &TableScope) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for &p in &scope.odd_primes {
        rows.extend(table1(p));
    }
    for &p in &scope.odd_primes {
        for &l in &scope.table2_lambdas {
            rows.extend(table2(p, l));
        }
    }
    rows.extend(table3());
    rows.extend(table4());
    rows.extend(table5());
    rows.extend(table6());
    rows.extend(table7());
    for &l in &scope.table8_lambdas {
        rows.extend(table8(l));
    }
    rows
}

/// Outcome for one row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowCheck {
    pub table: u8,
    pub label: String,
    pub level: u64,
    pub dim: u64,
    pub spectrum_size: usize,
    pub computed_gal: usize,
    pub expected_gal: Option<GalCount>,
    pub multiplicity_free: Option<bool>,
    pub disjoint: bool,
    pub closed: bool,
    pub failures: Vec<String>,
}

impl RowCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Whether the row states anything to compare against.
    pub fn has_claims(&self) -> bool {
        self.expected_gal.is_some() || self.multiplicity_free.is_some()
    }
}

pub fn check_row(row: &TableRow) -> Result<RowCheck> {
    let parts: Vec<RootSet> = row.spectrum.iter().map(Term::roots).collect::<Result<_>>()?;
    let mut disjoint = true;
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            disjoint &= a.is_disjoint(b);
        }
    }
    let set = parts.iter().fold(RootSet::new(), |acc, p| acc.union(p));
    let size = set.len();
    let computed = square_galois_orbit_count(&set);
    let closed = set.is_square_galois_closed();
    let mut failures = Vec::new();
    if !disjoint {
        failures.push("terms overlap".to_string());
    }
    if !closed {
        failures.push("spectrum is not a union of square Galois orbits".to_string());
    }
    match row.gal {
        Some(GalCount::Exact(g)) if g != computed => failures.push(format!("|Gal| printed {g}, computed {computed}")),
        Some(GalCount::AtLeast(g)) if computed < g => failures.push(format!("|Gal| printed >= {g}, computed {computed}")),
        _ => {}
    }
    match row.multiplicity_free {
        Some(true) if size as u64 != row.dim => {
            failures.push(format!("m.f. yes but |spectrum| = {size}, dim = {}", row.dim))
        }
        Some(false) if size as u64 >= row.dim => {
            failures.push(format!("m.f. no but |spectrum| = {size}, dim = {}", row.dim))
        }
        _ => {}
    }
    Ok(RowCheck {
        table: row.table,
        label: row.label.clone(),
        level: row.level,
        dim: row.dim,
        spectrum_size: size,
        computed_gal: computed,
        expected_gal: row.gal,
        multiplicity_free: row.multiplicity_free,
        disjoint,
        closed,
        failures,
    })
}

/// Verification of a list of rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub rows: Vec<RowCheck>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(RowCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RowCheck> {
        self.rows.iter().filter(|r| !r.passed())
    }
}

pub fn verify_tables(rows: &[TableRow]) -> Result<TableReport> {
    Ok(TableReport {
        rows: rows.iter().map(check_row).collect::<Result<_>>()?,
    })
}

/// Rows whose level divides `bound`.
pub fn rows_dividing(scope: &TableScope, bound: u64) -> Vec<TableRow> {
    all_rows(scope)
        .into_iter()
        .filter(|r| bound.is_multiple_of(r.level))
        .collect()
}

/// Result of squaring (zeta_4^k / 2) [[0,d,-d],[d,1,1],[-d,1,1]] with d^2 = 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PsiEReport {
    pub k: u8,
    pub symmetric: bool,
    /// Whether the square is zeta_4^(2k) times the identity.
    pub square_is_expected_scalar: bool,
    pub square_scalar: Option<String>,
}

pub fn psi_e_matrix(k: u8) -> Vec<Vec<CycNum>> {
    let n = 8;
    let d = CycNum::from_int_terms(n, &[(1, 1), (1, 7)]);
    let one = CycNum::one(n);
    let half = CycNum::from_rational(n, &num_rational::BigRational::new(1.into(), 2.into()));
    let scale = &CycNum::root_of_unity(n, 2 * i64::from(k)) * &half;
    let m = [
        [CycNum::zero(n), d.clone(), -&d],
        [d.clone(), one.clone(), one.clone()],
        [-&d, one.clone(), one],
    ];
    m.iter()
        .map(|row| row.iter().map(|x| &scale * x).collect())
        .collect()
}

pub fn psi_e_matrix_check(k: u8) -> PsiEReport {
    let m = psi_e_matrix(k);
    let symmetric = (0..3).all(|i| (0..3).all(|j| m[i][j] == m[j][i]));
    let sq: Vec<Vec<CycNum>> = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| (0..3).fold(CycNum::zero(8), |acc, l| &acc + &(&m[i][l] * &m[l][j])))
                .collect()
        })
        .collect();
    let scalar = sq[0][0].clone();
    let is_scalar = (0..3).all(|i| (0..3).all(|j| if i == j { sq[i][j] == scalar } else { sq[i][j].is_zero() }));
    let expected = CycNum::root_of_unity(8, 4 * i64::from(k));
    PsiEReport {
        k,
        symmetric,
        square_is_expected_scalar: is_scalar && scalar == expected,
        square_scalar: is_scalar.then(|| scalar.to_string()),
    }
}
