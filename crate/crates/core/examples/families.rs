//! Building modular data: Fibonacci and Ising variants, the adjoint sl2 family, Deligne
//! products, and the fixture catalog.

use mtc_galois::families::{self, catalog};
use mtc_galois::galois;

fn main() -> mtc_galois::Result<()> {
    for k in 1..=4 {
        let f = families::fibonacci(k)?;
        println!("Fibonacci variant {k}: d = {}, t = {:?} mod 5", f.dims()[1], f.t_exponents());
    }
    for p in [5, 7, 11, 13] {
        let t = families::sl2_level_adjoint(p, 1)?;
        println!("sl2 adjoint p = {p}: rank {}, transitive {}", t.rank(), galois::is_transitive(&t)?);
    }
    let t7 = families::sl2_level_adjoint(7, 1)?;
    println!("orbits of the square of sl2 p = 7: {}", families::transitive_square_orbit_count(&t7)?);
    for (p, n) in [(5, 1), (5, 2), (7, 1)] {
        let m = families::pointed(&[u64::pow(p, n)])?.deligne_product(&families::sl2_level_adjoint(p, 1)?)?;
        println!("Z/{p}^{n} x sl2 p = {p}: {} orbits", galois::orbits(&m)?.orbit_count());
    }
    println!("catalog:");
    for f in catalog() {
        let m = f.build()?;
        println!("  {:<18} rank {:>2}  conductor {:>2}  {:?}", f.name, m.rank(), m.conductor(), f.source);
    }
    Ok(())
}
