// Every modulus for which a geometric semigroup has equidistributed gaps,
// plus the embedding-dimension-2 and `k = 2` shortcuts.

use gapdist::equidist::{check_dim2, check_k2, equidist_moduli};
use gapdist::GeometricParams;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (a, b, k) in [(9, 11, 2), (2, 3, 3), (5, 7, 2), (3, 13, 6)] {
        let p = GeometricParams::new(a, b, k)?;
        println!("({a},{b},{k}): {:?}", equidist_moduli(&p)?);
    }
    let p = GeometricParams::new(9, 11, 2)?;
    assert_eq!(equidist_moduli(&p)?, vec![1, 2, 4, 5, 7, 8, 10, 14]);

    let dim2: Vec<u64> = (1..=20).filter(|&m| check_dim2(4, 5, m)).collect();
    println!("<4,5> equidistributed mod {dim2:?}");
    let k2: Vec<u64> = (1..=20).filter(|&m| check_k2(9, 11, m)).collect();
    println!("(9,11,2) by the k = 2 rule, m <= 20: {k2:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
