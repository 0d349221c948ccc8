//! Validate modular data from a file or a named fixture, and show what a broken file
//! reports.
//!
//!     cargo run --example validate_data -- crates/core/fixtures/so5_3half_ad.mtc

use mtc_galois::families;
use mtc_galois::ModularData;

fn main() -> mtc_galois::Result<()> {
    let m = match std::env::args().nth(1) {
        Some(path) => ModularData::read_file(path)?,
        None => families::fixture("sl2_12_A0")?,
    };
    let rep = m.validate();
    println!("rank {}, conductor {}: {}", m.rank(), m.conductor(), if rep.passed() { "valid" } else { "invalid" });
    println!("global dimension {}", m.global_dim());
    println!("dims {:?}", m.dims().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("charge conjugation {:?}", rep.charge_conjugation);
    let fusion = m.verlinde()?;
    for x in 0..m.rank() {
        for y in x..m.rank() {
            let terms: Vec<String> = fusion
                .support(x, y)
                .map(|z| match fusion.n(x, y, z) {
                    1 => m.labels()[z].clone(),
                    n => format!("{n} {}", m.labels()[z]),
                })
                .collect();
            println!("  {} x {} = {}", m.labels()[x], m.labels()[y], terms.join(" + "));
        }
    }

    // flip one off-diagonal entry
    let text = families::fibonacci(1)?.to_json_string();
    let broken = text.replacen("[[[-1,1,2],[-1,1,3]],[[-1,1,0]]]", "[[[1,1,2],[-1,1,3]],[[-1,1,0]]]", 1);
    for issue in ModularData::from_json_str(&broken)?.validate().issues {
        println!("broken file: [{}] {}", issue.check, issue.detail);
    }
    Ok(())
}
