//! The classical model over 2^S and the epimorphism from U_κ(2^S) onto it.

use ortholog::{build_classical, enumerate_universal, SetLattice, VerifyOptions, DEFAULT_MAX_CARRIER};

fn main() -> ortholog::Result<()> {
    for (ground, kappa) in [(2, 2), (3, 2), (2, 3)] {
        let s = SetLattice::powerset(ground)?;
        let ca = build_classical(&s, kappa)?;
        let u = enumerate_universal(ca.ground().poset().clone(), DEFAULT_MAX_CARRIER)?;
        let epi = ca.epimorphism_e(&u, &VerifyOptions::default())?;
        println!(
            "|S|={ground} kappa={kappa}: {} points, {} boxes-generated sets, {} logic members, laws {}, injective {}",
            ca.ground().points().len(),
            ca.len(),
            u.len(),
            if epi.report.passed() { "hold" } else { "FAIL" },
            epi.injective
        );
    }

    let s = SetLattice::powerset(2)?;
    let ca = build_classical(&s, 2)?;
    let u = enumerate_universal(ca.ground().poset().clone(), DEFAULT_MAX_CARRIER)?;
    let epi = ca.epimorphism_e(&u, &VerifyOptions::default())?;
    for (i, img) in epi.table.iter().enumerate().take(6) {
        println!("  {:<20} -> {}", u.label(i), ca.ground().format_points(img));
    }
    Ok(())
}
