//! Exact arithmetic in Q(zeta_N): field operations, Galois automorphisms, embeddings and
//! certified signs of real elements.

use mtc_galois::CycNum;

fn main() -> mtc_galois::Result<()> {
    let z5 = CycNum::root_of_unity(5, 1);
    let u = &(&CycNum::one(5) + &z5) + &CycNum::root_of_unity(5, 4);
    println!("u = {u}");
    println!("u^2 - u - 1 = {}", &(&(&u * &u) - &u) - &CycNum::one(5));
    println!("1/u = {}", u.inverse()?);

    // sigma_2 sends the golden ratio to its conjugate
    let su = u.galois_apply(2)?;
    println!("sigma_2(u) = {su}, u * sigma_2(u) = {}", &u * &su);

    let sqrt2 = CycNum::from_int_terms(8, &[(1, 1), (1, 7)]);
    println!("sqrt 2 in Q(zeta_8): {sqrt2}, squared {}", &sqrt2 * &sqrt2);
    let big = sqrt2.embed(24)?;
    let (n, back) = big.minimal_conductor();
    println!("embedded in Q(zeta_24): {big}; back in Q(zeta_{n}): {back}");

    for x in [su.clone(), -&sqrt2, &u - &CycNum::from_integer(5, 2)] {
        println!("sign of {x} = {:?}  (~{:.6})", x.sign_of_real()?, x.to_complex().0);
    }
    Ok(())
}
