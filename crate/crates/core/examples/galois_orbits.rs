//! Galois orbits of simple objects for transcribed s-matrices, with the permutation of
//! every unit and the field degree of each object.

use mtc_galois::families;
use mtc_galois::galois;

fn main() -> mtc_galois::Result<()> {
    for name in ["fib_x_fib", "fib_x_fib_conj", "so5_3half_ad", "sl2_12_A0"] {
        let m = families::fixture(name)?;
        let p = galois::orbits(&m)?;
        println!("{name}: conductor {}, orbits {:?}", m.conductor(), p.orbits);
        for (k, perm) in &p.perm_of_unit {
            println!("  sigma_{k:<2} -> {perm:?}");
        }
        let degrees: Vec<u64> = (0..m.rank())
            .map(|x| galois::verlinde_field_degree(&m, x, &p))
            .collect::<mtc_galois::Result<_>>()?;
        println!("  [L_X:Q] = {degrees:?}");
        let tw = galois::square_twist_consistency(&m, &p);
        println!("  square twist relation holds: {}", tw.passed());
    }
    Ok(())
}
