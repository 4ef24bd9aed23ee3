//! Event space completions of the catalog lattices, and an isomorphism lifted
//! to the completions.

use ortholog::lattice::{benzene, boolean, mo};
use ortholog::{completion_functorial, event_space_completion};

fn main() -> ortholog::Result<()> {
    for l in [boolean(2)?, boolean(3)?, mo(2)?, mo(3)?, benzene()] {
        let c = event_space_completion(&l)?;
        println!(
            "E_{:<4} {} members, isomorphic: {}, inclusion is iso: {}",
            l.name(),
            c.completed.len(),
            c.iso.is_some(),
            c.inclusion_is_iso()
        );
    }
    let lifted = completion_functorial(&boolean(2)?, &mo(1)?)?;
    println!("{}", lifted.report);
    match completion_functorial(&boolean(2)?, &mo(2)?) {
        Err(e) => println!("B2 vs MO2: {e}"),
        Ok(_) => unreachable!("different sizes"),
    }
    Ok(())
}
