//! Roots of unity, square Galois orbits, the t-spectrum tables, and the 3x3 matrix whose
//! square is a scalar.

use mtc_galois::spectra::{
    make_gamma, make_gamma_res, make_phi, psi_e_matrix_check, rows_dividing, square_galois_orbit_count, verify_tables,
    TableScope,
};

fn main() -> mtc_galois::Result<()> {
    println!("|Phi_7| = {}, square orbits {}", make_phi(7).len(), square_galois_orbit_count(&make_phi(7)));
    println!("Gamma_16 splits into {} square orbits", square_galois_orbit_count(&make_gamma(16)));
    println!("Gamma_{{2^5}}^3 = {:?}", make_gamma_res(2, 5, 3)?.iter().collect::<Vec<_>>());

    let level = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(16);
    let rows = rows_dividing(&TableScope::default(), level);
    let rep = verify_tables(&rows)?;
    for (row, c) in rows.iter().zip(&rep.rows) {
        let status = if !c.has_claims() { "info" } else if c.passed() { "pass" } else { "FAIL" };
        println!("{status} T{} {:<28} dim {:>3} |S| {:>3} |Gal| {:>2}  {}", c.table, c.label, c.dim, c.spectrum_size, c.computed_gal, row.spectrum_text());
    }
    for k in 0..4 {
        let r = psi_e_matrix_check(k);
        println!("k = {k}: symmetric {}, square = {:?} I", r.symmetric, r.square_scalar);
    }
    Ok(())
}
