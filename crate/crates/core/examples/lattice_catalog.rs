//! Lists the built-in ortholattices with their basic properties.
//!
//! `cargo run --example lattice_catalog -- out/` also writes each one as a
//! spec file (`b2.json`, `mo2.json`, ...) into `out/`.

use ortholog::lattice::{benzene, boolean, chain2, mo, validate};

fn main() -> ortholog::Result<()> {
    let lattices = vec![
        chain2(),
        boolean(2)?,
        boolean(3)?,
        boolean(4)?,
        mo(1)?,
        mo(2)?,
        mo(3)?,
        benzene(),
    ];
    let out_dir = std::env::args().nth(1);
    for l in &lattices {
        let spec = l.to_spec();
        // a spec always round-trips through validation
        assert_eq!(validate(&spec)?.labels(), l.labels());
        println!(
            "{:<4} {:>2} elements  distributive={:<5} orthomodular={}",
            l.name(),
            l.len(),
            l.is_distributive(),
            l.is_orthomodular()
        );
        if let Some(w) = l.distributivity_witness() {
            println!("     not distributive at ({}, {}, {})", l.label(w.a), l.label(w.b), l.label(w.c));
        }
        if let Some(dir) = &out_dir {
            let path = std::path::Path::new(dir).join(format!("{}.json", l.name().to_lowercase()));
            std::fs::write(&path, spec.to_json() + "\n")?;
        }
    }
    Ok(())
}
