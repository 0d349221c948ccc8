//! Which factorization shape data with exactly two Galois orbits is consistent with.

use mtc_galois::families;
use mtc_galois::subcat::Structure;

fn main() -> mtc_galois::Result<()> {
    for name in ["pointed_z5", "ising", "ising_x_sl2_7_ad", "fib_x_fib", "fib_x_fib_conj", "sl2_12_A0", "so5_3half_ad"] {
        let m = families::fixture(name)?;
        let st = Structure::new(&m)?;
        match st.two_orbit_diagnosis(64) {
            Ok(d) => println!("{name:<18} {}", d.describe()),
            Err(e) => println!("{name:<18} {e}"),
        }
    }
    Ok(())
}
