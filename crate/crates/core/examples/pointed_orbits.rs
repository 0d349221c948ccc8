//! Pointed modular data from a finite abelian group with a quadratic form: orbit counts
//! from the cyclic subgroup formula, and the same counts from the built data.

use mtc_galois::galois;
use mtc_galois::pointed::{
    build_pointed, cyclic_subgroup_count, orbit_form_independence_check, FiniteAbelianGroup, QuadraticForm,
};

fn main() -> mtc_galois::Result<()> {
    println!("groups of order 1800:");
    for a in FiniteAbelianGroup::all_of_order(1800) {
        println!("  {a:<12} {}", cyclic_subgroup_count(&a));
    }

    let a: FiniteAbelianGroup = "2,12".parse()?;
    let q = QuadraticForm::standard(&a);
    let m = build_pointed(&a, &q)?;
    let p = galois::orbits(&m)?;
    println!("{a} with form {q}: {} orbits, {} cyclic subgroups", p.orbit_count(), cyclic_subgroup_count(&a));
    for orbit in &p.orbits {
        let names: Vec<&str> = orbit.iter().map(|&x| m.labels()[x].as_str()).collect();
        println!("  {}", names.join(" "));
    }

    let rep = orbit_form_independence_check(&a, 4096, 1);
    println!(
        "{} nondegenerate forms examined ({}), same partition for all: {}",
        rep.nondegenerate,
        if rep.exhaustive { "all of them" } else { "sampled" },
        rep.passed()
    );
    Ok(())
}
