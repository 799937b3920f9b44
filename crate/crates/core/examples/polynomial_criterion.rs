// Arithmetic in `Z[x]/(x^m - 1)`: the difference polynomial certificate and
// congruence of exponent sequences.

use gapdist::equidist::{
    polynomial_difference, product_congruence_holds, sequences_congruent, sequences_pm_congruent,
    ExponentSequence,
};
use gapdist::poly::{binomial_product, equidist_set_test};
use gapdist::GeometricParams;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = GeometricParams::new(9, 11, 2)?;
    for m in [7, 70] {
        let d = polynomial_difference(&p, m)?;
        println!("L - R mod x^{m} - 1 = {d}");
    }

    println!(
        "(x - 1)(x^2 - 1) mod x^4 - 1 = {}",
        binomial_product(&[1, 2], 4)?
    );
    println!(
        "{{1, 2, 4, 7}} equidistributed mod 2: {}",
        equidist_set_test([1, 2, 4, 7], 2)
    );

    let c = ExponentSequence::new(vec![1, 1, 1, 1], 4);
    let d = ExponentSequence::new(vec![3, 3, 3, 3], 4);
    println!(
        "(1,1,1,1) vs (3,3,3,3) mod 4: congruent {}, pm-congruent {}, equal products {}",
        sequences_congruent(&c, &d)?,
        sequences_pm_congruent(&c, &d)?,
        product_congruence_holds(&c, &d)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
