// Feng's criterion for the independence of `T'_m`, with an explicit relation
// behind each of the moduli 95, 105 and 111.

use gapdist::cycunits::{dependent_moduli_up_to, feng_independent, verify_relation};
use gapdist::modmath::{reduce, subgroup_generated};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("dependent up to 120: {:?}", dependent_moduli_up_to(120));
    for m in [39, 40, 95] {
        let r = feng_independent(m)?;
        println!("m = {m}: independent {}", r.independent);
        for p in &r.primes {
            println!(
                "  {}^{}: <-1, p> = U_{}? {}",
                p.prime, p.exponent, p.cofactor, p.generated
            );
        }
    }

    // prod_{g in G} (1 - zeta^g) is fixed by multiplying G by 2, with 2 outside +-G.
    for (m, g) in [(95u64, 4i128), (105, 17), (111, 4)] {
        let h = subgroup_generated(&[g], m)?;
        let lhs: Vec<(i128, u64)> = h.elements().iter().map(|&e| (e as i128, 1)).collect();
        let rhs: Vec<(i128, u64)> = h
            .elements()
            .iter()
            .map(|&e| (reduce(2 * e as i128, m) as i128, 1))
            .collect();
        let holds = verify_relation(&lhs, &rhs, m);
        println!(
            "m = {m}: G = <{g}> of order {}, relation holds: {holds}",
            h.len()
        );
        assert!(holds);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
