// Gaps, genus, Frobenius number and Apéry tables, for explicit generators
// and for geometric semigroups `<a^k, a^(k-1) b, ..., b^k>`.

use gapdist::semigroup::{
    gaps_divisible_by_formula, genus_geometric_formula, make_geometric, make_semigroup,
};
use gapdist::GeometricParams;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for gens in [vec![3u64, 5], vec![4, 5], vec![6, 9, 20]] {
        let s = make_semigroup(&gens)?;
        println!(
            "<{gens:?}>: genus {}, Frobenius {}, gaps {:?}",
            s.genus(),
            s.frobenius()?,
            s.gaps().as_slice()
        );
        println!(
            "  Apéry table mod {}: {:?}",
            s.apery_base(),
            s.apery_table()
        );
    }

    let p = GeometricParams::new(9, 11, 2)?;
    let s = make_geometric(&p)?;
    println!(
        "geometric {:?}: genus {} (formula {}), Frobenius {}",
        p.generators(),
        s.genus(),
        genus_geometric_formula(&p),
        s.frobenius()?
    );
    assert_eq!(s.genus(), 840);

    // Gaps divisible by d, for d | a.
    let count = s.gaps().as_slice().iter().filter(|&&g| g % 3 == 0).count();
    let formula = gaps_divisible_by_formula(&p, 3)?;
    println!("  gaps divisible by 3: {count} counted, {formula} by formula");
    assert_eq!(formula, (count as u64).into());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
