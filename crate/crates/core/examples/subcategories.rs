//! Fusion subcategories, centralizers and the Galois-closure criterion.

use mtc_galois::families;
use mtc_galois::subcat::{Structure, DEFAULT_MAX_RANK};

fn main() -> mtc_galois::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "z3_x_fib".into());
    let m = families::fixture(&name)?;
    let st = Structure::new(&m)?;
    let label = |xs: &[usize]| xs.iter().map(|&x| m.labels()[x].as_str()).collect::<Vec<_>>().join(",");
    println!("{name}: pointed part {{{}}}, adjoint part {{{}}}", label(&st.pointed_part().members), label(&st.adjoint_part().members));
    let rep = st.check_theorem_galois_closure(DEFAULT_MAX_RANK)?;
    for row in &rep.rows {
        println!(
            "  D = {{{}}}  C(D) = {{{}}}  Galois closed {:5}  C(D) integral {:5}",
            label(&row.members),
            label(&row.centralizer),
            row.galois_closed,
            row.centralizer_integral
        );
    }
    println!("all checks pass: {}", rep.passed());
    let lb = st.check_orbit_lower_bound();
    println!("orbit lower bound: {} orbits >= {}", lb.orbit_count, lb.bound);
    Ok(())
}
