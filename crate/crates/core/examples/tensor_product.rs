//! B2 ⊗ B2 and its universal morphism into B4, given by the coordinate
//! embeddings a ↦ ab, a' ↦ cd and a ↦ ac, a' ↦ bd.

use ortholog::lattice::boolean;
use ortholog::{build_tensor, TargetPairFile, VerifyOptions, DEFAULT_MAX_CARRIER};

fn main() -> ortholog::Result<()> {
    let b2 = boolean(2)?;
    let t = build_tensor(vec![b2.clone(), b2.clone()], 4096, DEFAULT_MAX_CARRIER)?;
    println!("{} has {} members", t.name(), t.len());
    println!("{}", t.verify_i_alpha());

    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/b2xb2_to_b4.json");
    let pair = TargetPairFile::load(path)?.resolve(&[b2.clone(), b2], 64)?;
    let m = t.universal_morphism(&pair, &VerifyOptions::default())?;
    for (i, &y) in m.table.iter().enumerate() {
        println!("  {:<24} -> {}", t.label(i), pair.target.label(y));
    }
    println!("{}", m.report);
    Ok(())
}
