//! Builds U_2(MO2), lists a few members and shows where distributivity fails.

use ortholog::lattice::mo;
use ortholog::{universal_of, VerifyOptions};

fn main() -> ortholog::Result<()> {
    let e = mo(2)?;
    let u = universal_of(&e, 2)?;
    println!("U_2(MO2) has {} members", u.len());
    for i in (0..u.len()).step_by(u.len() / 8) {
        let star = u.star(i).expect("closed under star");
        println!("  {:<28} star {}", u.label(i), u.label(star));
    }

    let opts = VerifyOptions::with_seed(1);
    let axioms = u.verify_logic_axioms(&opts);
    println!("{axioms}");

    let d = u.is_distributive_universal(&opts);
    println!("distributive: {} ({} mode, {} triples)", d.distributive, d.mode, d.checked);
    if let Some([x, y, z]) = d.witness {
        println!("  x = {}\n  y = {}\n  z = {}", u.label(x), u.label(y), u.label(z));
    }
    Ok(())
}
