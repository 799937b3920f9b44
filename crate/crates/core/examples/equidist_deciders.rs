// The three equidistribution deciders side by side.

use gapdist::equidist::{check_theorem, cross_check, satisfied_conditions};
use gapdist::semigroup::DEFAULT_APERY_CAP;
use gapdist::GeometricParams;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = GeometricParams::new(9, 11, 2)?;
    for m in [7, 10, 14, 70] {
        let c = cross_check(&p, m, DEFAULT_APERY_CAP)?;
        println!(
            "(9,11,2) mod {m:>2}: brute {:<5} poly {:<5} theorem {:<5} conditions {:?}",
            c.brute.equidistributed,
            c.polynomial.equidistributed,
            c.theorem.equidistributed,
            satisfied_conditions(&p, m)
        );
        assert!(c.agree());
    }

    // A case where every hypothesis but one divisibility holds.
    let p = GeometricParams::new(11, 14, 2)?;
    let v = check_theorem(&p, 15);
    println!(
        "(11,14,2) mod 15: {} ({:?})",
        v.equidistributed, v.certificate
    );
    assert!(!v.equidistributed);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
