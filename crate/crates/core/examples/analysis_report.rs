//! The full analysis of one input as text and JSON.
//!
//!     cargo run --example analysis_report -- so5_3half_ad

use mtc_galois::families;
use mtc_galois::report::analyze;
use mtc_galois::ModularData;

fn main() -> mtc_galois::Result<()> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "sl2_12_A0".into());
    let m = if std::path::Path::new(&input).exists() {
        ModularData::read_file(&input)?
    } else {
        families::fixture(&input)?
    };
    let r = analyze(&input, &m, 64)?;
    print!("{r}");
    println!("{}", r.to_json());
    Ok(())
}
