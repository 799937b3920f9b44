#![allow(dead_code)]

use std::collections::HashMap;

use gapdist::equidist::{
    check_theorem, product_congruence_holds, sequences_congruent, sequences_pm_congruent,
    ExponentSequence,
};
use gapdist::modmath::{factorize, gcd};
use gapdist::poly::binomial_product;
use gapdist::semigroup::genus_geometric_formula;
use gapdist::GeometricParams;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

/// `(a, b, k)` with `2 <= a < b <= 12`, `gcd(a, b) = 1`, `1 <= k <= 4`, `a^k <= 10^4`.
pub fn sweep_triples() -> Vec<(u64, u64, u32)> {
    let mut out = Vec::new();
    for a in 2..=12u64 {
        for b in a + 1..=12 {
            if gcd(a, b) != 1 {
                continue;
            }
            for k in 1..=4u32 {
                if a.pow(k) <= 10_000 {
                    out.push((a, b, k));
                }
            }
        }
    }
    out
}

pub fn units(m: u64) -> Vec<u64> {
    (0..m).filter(|&x| gcd(x, m) == 1).collect()
}

/// Every multiset of size `n` drawn from `items`, as sorted vectors.
pub fn multisets(items: &[u64], n: usize) -> Vec<Vec<u64>> {
    fn go(items: &[u64], n: usize, start: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, n, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, n, 0, &mut Vec::new(), &mut out);
    out
}

/// Groups exponent lists by their binomial product mod `x^m - 1` and returns
/// the first pair with equal products that `same` rejects.
fn first_collision(
    m: u64,
    lists: Vec<Vec<i128>>,
    same: impl Fn(&ExponentSequence, &ExponentSequence) -> bool,
) -> Option<(Vec<i128>, Vec<i128>)> {
    let mut seen: HashMap<Vec<i128>, Vec<Vec<i128>>> = HashMap::new();
    for list in lists {
        let key = binomial_product(&list, m)
            .expect("small products fit")
            .coeffs()
            .to_vec();
        let bucket = seen.entry(key).or_default();
        let s = ExponentSequence::new(list.clone(), m);
        if let Some(other) = bucket
            .iter()
            .find(|o| !same(&ExponentSequence::new((*o).clone(), m), &s))
        {
            return Some((other.clone(), list));
        }
        bucket.push(list);
    }
    None
}

/// For unit sequences of length `n <= 3` and `m <= 20`, equal products force
/// congruent sequences. Returns the number of sequences examined.
pub fn short_sequences_exhaustive() -> Result<usize, String> {
    let mut examined = 0;
    for m in 1..=20 {
        for n in 1..=3 {
            let lists: Vec<Vec<i128>> = multisets(&units(m), n)
                .into_iter()
                .map(|v| v.into_iter().map(i128::from).collect())
                .collect();
            examined += lists.len();
            if let Some((c, d)) =
                first_collision(m, lists, |c, d| sequences_congruent(c, d).unwrap())
            {
                return Err(format!(
                    "m = {m}: {c:?} and {d:?} have equal products but are not congruent"
                ));
            }
        }
    }
    Ok(examined)
}

/// Symmetrized lists `(c_1, -c_1, ..., c_n, -c_n)` of units, `m <= 40`,
/// `n <= 4`: equal products force congruent multisets. Exhaustive over
/// choices of the `c_i` up to sign.
pub fn symmetric_exhaustive() -> Result<usize, String> {
    let mut examined = 0;
    for m in 3..=40 {
        let reps: Vec<u64> = units(m).into_iter().filter(|&u| u <= m - u).collect();
        for n in 1..=4 {
            let lists: Vec<Vec<i128>> = multisets(&reps, n)
                .into_iter()
                .map(|v| {
                    v.into_iter()
                        .flat_map(|c| [c as i128, -(c as i128)])
                        .collect()
                })
                .collect();
            examined += lists.len();
            if let Some((c, d)) =
                first_collision(m, lists, |c, d| sequences_congruent(c, d).unwrap())
            {
                return Err(format!(
                    "m = {m}: symmetric {c:?} and {d:?} have equal products but are not congruent"
                ));
            }
        }
    }
    Ok(examined)
}

fn symmetrize(v: &[i128]) -> Vec<i128> {
    v.iter().flat_map(|&c| [c, -c]).collect()
}

fn unit_seq(m: u64, n: usize) -> impl Strategy<Value = Vec<i128>> {
    let us = units(m);
    proptest::collection::vec(proptest::sample::select(us), n)
        .prop_map(|v| v.into_iter().map(i128::from).collect())
}

/// Random symmetric pairs over `m <= 40`, `n <= 4`. The second list is either
/// independent or a sign-scrambled copy of the first, so both sides of the
/// implication are exercised.
pub fn symmetric_random(cases: u32) -> Result<(), String> {
    let strategy = (3u64..=40, 1usize..=4).prop_flat_map(|(m, n)| {
        (
            Just(m),
            unit_seq(m, n),
            unit_seq(m, n),
            proptest::collection::vec(any::<bool>(), n),
            any::<bool>(),
        )
    });
    run(cases, strategy, |(m, c, d, flips, copy)| {
        let d: Vec<i128> = if copy {
            c.iter()
                .zip(&flips)
                .map(|(&x, &f)| if f { -x } else { x })
                .collect()
        } else {
            d
        };
        let cs = ExponentSequence::new(symmetrize(&c), m);
        let ds = ExponentSequence::new(symmetrize(&d), m);
        if product_congruence_holds(&cs, &ds).unwrap() {
            prop_assert!(
                sequences_congruent(&cs, &ds).unwrap(),
                "m = {}, c = {:?}, d = {:?}",
                m,
                c,
                d
            );
        }
        Ok(())
    })
}

pub fn prime_powers_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&q| factorize(q).is_prime_power()).collect()
}

/// Prime-power `m <= 49`, unit sequences of length `n <= 4`: equal products
/// force PM-congruent sequences. The second list is random or a signed
/// permutation of the first.
pub fn prime_power_pm_random(cases: u32) -> Result<(), String> {
    let strategy =
        (proptest::sample::select(prime_powers_up_to(49)), 1usize..=4).prop_flat_map(|(m, n)| {
            (
                Just(m),
                unit_seq(m, n),
                unit_seq(m, n),
                proptest::collection::vec(any::<bool>(), n),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
                any::<bool>(),
            )
        });
    run(cases, strategy, |(m, c, d, flips, perm, copy)| {
        let d: Vec<i128> = if copy {
            perm.iter()
                .zip(&flips)
                .map(|(&i, &f)| if f { -c[i] } else { c[i] })
                .collect()
        } else {
            d
        };
        let cs = ExponentSequence::new(c.clone(), m);
        let ds = ExponentSequence::new(d.clone(), m);
        if product_congruence_holds(&cs, &ds).unwrap() {
            prop_assert!(
                sequences_pm_congruent(&cs, &ds).unwrap(),
                "m = {}, c = {:?}, d = {:?}",
                m,
                c,
                d
            );
        }
        Ok(())
    })
}

/// Exhaustive version over multisets of size `n <= max_n` for every prime
/// power `m <= 49`.
pub fn prime_power_pm_exhaustive(max_n: usize) -> Result<usize, String> {
    let mut examined = 0;
    for m in prime_powers_up_to(49) {
        for n in 1..=max_n {
            let lists: Vec<Vec<i128>> = multisets(&units(m), n)
                .into_iter()
                .map(|v| v.into_iter().map(i128::from).collect())
                .collect();
            examined += lists.len();
            if let Some((c, d)) =
                first_collision(m, lists, |c, d| sequences_pm_congruent(c, d).unwrap())
            {
                return Err(format!(
                    "m = {m}: {c:?} and {d:?} have equal products but are not PM-congruent"
                ));
            }
        }
    }
    Ok(examined)
}

/// `check_theorem` is symmetric in `a` and `b` on the sweep.
pub fn symmetry_sweep() -> Result<usize, String> {
    let mut n = 0;
    for (a, b, k) in sweep_triples() {
        let p = GeometricParams::new(a, b, k).unwrap();
        for m in 1..=60 {
            n += 1;
            if check_theorem(&p, m).equidistributed
                != check_theorem(&p.swapped(), m).equidistributed
            {
                return Err(format!("({a},{b},{k}) mod {m} is not symmetric"));
            }
        }
    }
    Ok(n)
}

/// A true verdict implies `m` divides the genus, on the sweep.
pub fn genus_divisibility_sweep() -> Result<usize, String> {
    let mut n = 0;
    for (a, b, k) in sweep_triples() {
        let p = GeometricParams::new(a, b, k).unwrap();
        let genus = genus_geometric_formula(&p);
        for m in 1..=60u64 {
            if check_theorem(&p, m).equidistributed {
                n += 1;
                if &genus % m != 0u32.into() {
                    return Err(format!(
                        "({a},{b},{k}) mod {m}: verdict true but genus {genus}"
                    ));
                }
            }
        }
    }
    Ok(n)
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}
