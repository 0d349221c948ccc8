//! Fusion coefficients recovered from the s-matrix.

use serde::Serialize;

/// Fusion rules N_{xy}^z with the duality permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionTable {
    rank: usize,
    coeffs: Vec<u32>,
    dual: Vec<usize>,
}

impl FusionTable {
    pub(crate) fn from_coeffs(rank: usize, coeffs: Vec<u32>) -> Self {
        let dual = (0..rank)
            .map(|x| {
                (0..rank)
                    .find(|&y| coeffs[(x * rank + y) * rank] == 1)
                    .unwrap_or(usize::MAX)
            })
            .collect();
        FusionTable { rank, coeffs, dual }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// N_{x,y}^z.
    pub fn n(&self, x: usize, y: usize, z: usize) -> u32 {
        self.coeffs[(x * self.rank + y) * self.rank + z]
    }

    /// The dual object x*, read off from N_{x,y}^0 = delta_{y,x*}.
    pub fn dual(&self, x: usize) -> usize {
        self.dual[x]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    /// The z with N_{x,y}^z > 0.
    pub fn support(&self, x: usize, y: usize) -> impl Iterator<Item = usize> + '_ {
        let base = (x * self.rank + y) * self.rank;
        (0..self.rank).filter(move |&z| self.coeffs[base + z] > 0)
    }

    /// Checks unit, duality and associativity axioms; returns a description of each failure.
    pub fn axiom_failures(&self) -> Vec<String> {
        let r = self.rank;
        let mut out = Vec::new();
        for x in 0..r {
            if self.dual[x] == usize::MAX {
                out.push(format!("object {x} has no dual"));
                continue;
            }
            for z in 0..r {
                let expect = u32::from(x == z);
                if self.n(x, 0, z) != expect || self.n(0, x, z) != expect {
                    out.push(format!("unit law fails at ({x},{z})"));
                }
            }
            for y in 0..r {
                if self.n(x, y, 0) != u32::from(y == self.dual[x]) {
                    out.push(format!("N_({x},{y})^0 is not a duality pairing"));
                }
            }
        }
        let mut lhs = vec![0u64; r];
        let mut rhs = vec![0u64; r];
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    lhs.iter_mut().chain(rhs.iter_mut()).for_each(|c| *c = 0);
                    for w in self.support(x, y) {
                        let m = u64::from(self.n(x, y, w));
                        for v in self.support(w, z) {
                            lhs[v] += m * u64::from(self.n(w, z, v));
                        }
                    }
                    for w in self.support(y, z) {
                        let m = u64::from(self.n(y, z, w));
                        for v in self.support(x, w) {
                            rhs[v] += m * u64::from(self.n(x, w, v));
                        }
                    }
                    if lhs != rhs {
                        out.push(format!("associativity fails at ({x},{y},{z})"));
                    }
                }
            }
        }
        out
    }

    /// Fusion rules of a Deligne product, indexed by i * rank(other) + j.
    pub fn tensor(&self, other: &FusionTable) -> FusionTable {
        let (ra, rb) = (self.rank, other.rank);
        let r = ra * rb;
        let mut coeffs = vec![0u32; r * r * r];
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    coeffs[(x * r + y) * r + z] = self.n(x / rb, y / rb, z / rb)
                        * other.n(x % rb, y % rb, z % rb);
                }
            }
        }
        FusionTable::from_coeffs(r, coeffs)
    }
}
