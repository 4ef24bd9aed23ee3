//! Compares the star of random down-sets with its expansion over choice
//! functions, and checks the closure `x ↦ x**`.

use ortholog::lattice::{benzene, boolean};
use ortholog::{build_product, DEFAULT_MAX_EXPANSION};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> ortholog::Result<()> {
    let p = build_product(vec![boolean(2)?, benzene()])?;
    println!("poset {} x {} has {} tuples", p.factors()[0].name(), p.factors()[1].name(), p.len());
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut agree = 0;
    for _ in 0..200 {
        let x = p.sample_down_set(&mut rng);
        let star = p.star(&x);
        let oracle = p.star_choicefn(&x, DEFAULT_MAX_EXPANSION)?;
        assert_eq!(star, oracle, "{}", p.format_down_set(&x));
        let closed = p.closure(&x);
        assert!(p.dleq(&x, &closed));
        assert_eq!(p.closure(&closed), closed);
        agree += 1;
    }
    println!("star agreed with the expansion on {agree} random down-sets");

    let x = p.down_closure_of_letters([p.parse_label("(a,b)")?, p.parse_label("(a',b')")?]);
    println!("x   = {}", p.format_down_set(&x));
    println!("x*  = {}", p.format_down_set(&p.star(&x)));
    println!("x** = {}", p.format_down_set(&p.closure(&x)));
    Ok(())
}
