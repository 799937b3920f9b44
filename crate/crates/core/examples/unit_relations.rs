// Exact products of `1 - zeta_n^a` in `Z[x]/Phi_n(x)`: a subgroup product
// equal to 1, a relation that holds at one conductor but not another, and a
// norm relation.

use gapdist::cycunits::weighted_product_is_one;
use gapdist::cycunits::{bass_relation, lift_unit, subgroup_product, verify_relation, FactorForm};
use gapdist::fixtures::u65_weights;
use gapdist::modmath::{reduce, subgroup_generated};
use gapdist::poly::{cyclotomic_polynomial, one_minus_zeta_power};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("Phi_39(x) = {}", cyclotomic_polynomial(39));
    println!("1 - zeta_39 = {}", one_minus_zeta_power(1, 39));
    let p = subgroup_product(39, &[35], 39, FactorForm::OneMinusZeta)?;
    println!("prod over <35> mod 39 = {p}");

    let gens = [lift_unit(2, 5, 13)? as i128, lift_unit(5, 13, 5)? as i128];
    let h = subgroup_generated(&gens, 65)?;
    println!(
        "H = <{}, {}> in U_65 has order {}",
        gens[0],
        gens[1],
        h.len()
    );
    let w = u65_weights(&h.elements().iter().map(|&x| x as i128).collect::<Vec<_>>());
    let at_13: Vec<(i128, i64)> = w.iter().map(|&(a, k)| (reduce(a, 13) as i128, k)).collect();
    println!(
        "f-weighted product trivial at conductor 65: {}, at 13: {}",
        weighted_product_is_one(&w, 65, FactorForm::ZetaMinusOne),
        weighted_product_is_one(&at_13, 13, FactorForm::ZetaMinusOne)
    );

    let (lhs, rhs) = bass_relation(15, 3)?;
    println!(
        "1 - zeta_15^3 = prod over {rhs:?}: {}",
        verify_relation(&lhs, &rhs, 15)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
