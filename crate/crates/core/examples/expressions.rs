//! Parses and evaluates a few expressions in U_2(B2).

use ortholog::lattice::boolean;
use ortholog::{parse, universal_of};

fn main() -> ortholog::Result<()> {
    let u = universal_of(&boolean(2)?, 2)?;
    for src in [
        "(a,1)",
        "star((a,1))",
        "(a,a') | (a',a)",
        "closure((a,a') | (a',a))",
        "coproduct{(a,1), (1,a)}",
        "(a,1) & (1,a)",
        "star(top) | bottom",
    ] {
        let e = parse(src)?;
        let v = e.eval(&u)?;
        let member = if u.index_of(&v).is_some() { "member" } else { "not closed" };
        println!("{src:<28} {:<32} = {:<26} {member}", e.to_string(), u.poset().format_down_set(&v));
    }
    match parse("(a,") {
        Err(e) => println!("(a,  -> {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
