//! The worked examples, reproduced as named pass/fail checks.
//!
//! Used by `gapdist paper-examples` and by the runnable examples. Each check
//! recomputes its numbers from scratch; nothing is cached between checks.

use serde::Serialize;

use crate::cycunits::{
    bass_relation, dependent_moduli_up_to, lift_unit, subgroup_product, verify_relation,
    verify_subgroup_product_is_one, weighted_product_is_one, FactorForm,
};
use crate::equidist::{
    check_bruteforce, check_dim2, check_polynomial, check_theorem, cross_check, equidist_moduli,
    polynomial_difference, product_congruence_holds, satisfied_conditions, sequences_congruent,
    sequences_pm_congruent, ExponentSequence,
};
use crate::error::Result;
use crate::modmath::{reduce, subgroup_generated};
use crate::semigroup::{
    genus_geometric_formula, make_geometric, make_semigroup, GeometricParams, DEFAULT_APERY_CAP,
};

/// Moduli up to 120 for which the published list says `T'_m` is dependent.
pub const PUBLISHED_DEPENDENT_UP_TO_120: [u64; 10] = [39, 55, 56, 65, 68, 84, 91, 112, 117, 120];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureResult {
    pub name: &'static str,
    pub passed: bool,
    /// Set when the published value is known to disagree with a faithful
    /// computation; such a check is expected to fail.
    pub known_discrepancy: bool,
    pub detail: String,
}

impl FixtureResult {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        FixtureResult {
            name,
            passed,
            known_discrepancy: false,
            detail,
        }
    }

    /// Failed for a reason other than a documented discrepancy.
    pub fn is_unexpected_failure(&self) -> bool {
        !self.passed && !self.known_discrepancy
    }
}

/// The triple `(9, 11, 2)`: genus 840 by formula and by counting.
pub fn genus_840() -> Result<FixtureResult> {
    let p = GeometricParams::new(9, 11, 2)?;
    let formula = genus_geometric_formula(&p);
    let counted = make_geometric(&p)?.genus();
    let passed = formula == 840u32.into() && counted == 840;
    Ok(FixtureResult::new(
        "genus <81,99,121>",
        passed,
        format!("formula {formula}, count {counted}"),
    ))
}

/// Equidistributed mod 7 and 10 but not mod 70, with the exact difference
/// polynomial mod `x^70 - 1`.
pub fn triple_9_11_2() -> Result<FixtureResult> {
    let p = GeometricParams::new(9, 11, 2)?;
    let mut verdicts = Vec::new();
    for m in [7, 10, 70] {
        let c = cross_check(&p, m, DEFAULT_APERY_CAP)?;
        verdicts.push((m, c.agree(), c.theorem.equidistributed));
    }
    let diff = polynomial_difference(&p, 70)?;
    let expected: Vec<(usize, i128)> = vec![
        (1, 1),
        (10, 1),
        (11, -1),
        (20, -1),
        (29, -1),
        (39, 1),
        (52, -1),
        (62, 1),
    ];
    let passed = verdicts == vec![(7, true, true), (10, true, true), (70, true, false)]
        && diff.terms() == expected;
    Ok(FixtureResult::new(
        "(9,11,2) mod 7, 10, 70",
        passed,
        format!("L - R mod x^70 - 1 = {diff}"),
    ))
}

/// `equidist_moduli(9, 11, 2)` is the union of the divisors of 8, 10, 14.
pub fn moduli_9_11_2() -> Result<FixtureResult> {
    let p = GeometricParams::new(9, 11, 2)?;
    let got = equidist_moduli(&p)?;
    let passed = got == vec![1, 2, 4, 5, 7, 8, 10, 14];
    Ok(FixtureResult::new(
        "moduli of (9,11,2)",
        passed,
        format!("{got:?}"),
    ))
}

/// `(1,1,1,1)` and `(3,3,3,3)` mod 4: not congruent, PM-congruent, and the
/// binomial products agree.
pub fn pm_congruence_example() -> Result<FixtureResult> {
    let c = ExponentSequence::new(vec![1, 1, 1, 1], 4);
    let d = ExponentSequence::new(vec![3, 3, 3, 3], 4);
    let congruent = sequences_congruent(&c, &d)?;
    let pm = sequences_pm_congruent(&c, &d)?;
    let product = product_congruence_holds(&c, &d)?;
    let passed = !congruent && pm && product;
    Ok(FixtureResult::new(
        "(1,1,1,1) vs (3,3,3,3) mod 4",
        passed,
        format!("congruent {congruent}, pm-congruent {pm}, products equal {product}"),
    ))
}

/// `prod_{g in <35>} (1 - zeta_39^g) = 1`.
pub fn subgroup_39() -> Result<FixtureResult> {
    let h = subgroup_generated(&[35], 39)?;
    let one = verify_subgroup_product_is_one(39, &[35])?;
    let passed = one && h.elements() == [1, 14, 16, 22, 29, 35];
    Ok(FixtureResult::new(
        "prod over <35> mod 39",
        passed,
        format!("H = {:?}, product is 1: {one}", h.elements()),
    ))
}

/// One family of the seven-condition theorem: both smallest admissible `k`
/// give a true verdict whose smallest condition is `cond`.
fn family(
    a: u64,
    b: u64,
    m: u64,
    cond: u8,
    admissible: impl Fn(u32) -> bool,
) -> Result<(bool, String)> {
    let ks: Vec<u32> = (1..).filter(|&k| admissible(k)).take(2).collect();
    let mut ok = true;
    let mut notes = Vec::new();
    for &k in &ks {
        let p = GeometricParams::new(a, b, k)?;
        let conds = satisfied_conditions(&p, m);
        let agree = check_polynomial(&p, m) && check_theorem(&p, m).equidistributed;
        ok &= agree && conds.first() == Some(&cond);
        notes.push(format!("k={k}: {conds:?}"));
    }
    Ok((ok, format!("({a},{b}) mod {m} -> {}", notes.join(", "))))
}

/// The seven example families, one row each, plus the corrected sixth.
pub fn seven_families() -> Result<Vec<FixtureResult>> {
    const NAMES: [&str; 7] = [
        "family 1: (13,7) mod 3",
        "family 2: (5,11) mod 3, 6 | k",
        "family 3: (5,11) mod 3, 6 | k+1",
        "family 4: (9,4) mod 7, 3 | k",
        "family 5: (3,13) mod 7, 6 | k",
        "family 6: (9,13) mod 7, 3 | k+1",
        "family 7: (3,13) mod 7, 6 | k+1",
    ];
    type Family = (u64, u64, u64, fn(u32) -> bool);
    let specs: [Family; 7] = [
        (13, 7, 3, |_| true),
        (5, 11, 3, |k| k % 6 == 0),
        (5, 11, 3, |k| (k + 1) % 6 == 0),
        (9, 4, 7, |k| k % 3 == 0),
        (3, 13, 7, |k| k % 6 == 0),
        (9, 13, 7, |k| (k + 1) % 3 == 0),
        (3, 13, 7, |k| (k + 1) % 6 == 0),
    ];
    let mut out = Vec::new();
    for (i, (a, b, m, adm)) in specs.into_iter().enumerate() {
        let (ok, detail) = family(a, b, m, i as u8 + 1, adm)?;
        let mut row = FixtureResult::new(NAMES[i], ok, detail);
        // 13 ≡ -1 (mod 7), so b^(k+1) ≡ 1 needs k + 1 even: k = 2 is not
        // equidistributed by any method. The family reads correctly with b = 11.
        row.known_discrepancy = !ok && (a, b) == (9, 13) && {
            let p = GeometricParams::new(9, 13, 2)?;
            satisfied_conditions(&p, 7).is_empty() && !check_polynomial(&p, 7)
        };
        out.push(row);
    }
    let (ok, detail) = family(9, 11, 7, 6, |k| (k + 1) % 3 == 0)?;
    out.push(FixtureResult::new(
        "family 6 with b = 11: (9,11) mod 7, 3 | k+1",
        ok,
        detail,
    ));
    Ok(out)
}

/// `(11, 14, 2)` mod 15 meets every hypothesis but the divisibility one and
/// is not equidistributed.
pub fn near_miss_11_14() -> Result<FixtureResult> {
    let p = GeometricParams::new(11, 14, 2)?;
    let c = cross_check(&p, 15, DEFAULT_APERY_CAP)?;
    let passed = c.agree() && !c.theorem.equidistributed;
    Ok(FixtureResult::new(
        "(11,14,2) mod 15 not equidistributed",
        passed,
        format!(
            "brute {}, poly {}, theorem {}",
            c.brute.equidistributed, c.polynomial.equidistributed, c.theorem.equidistributed
        ),
    ))
}

/// The 16-element `H` in `U_65`, its trivial product, and the weight
/// function `f` that is trivial at conductor 65 but not at 13.
pub fn u65_counterexample() -> Result<FixtureResult> {
    let gens = [lift_unit(2, 5, 13)? as i128, lift_unit(5, 13, 5)? as i128];
    let h = subgroup_generated(&gens, 65)?;
    let h_one = subgroup_product(65, &gens, 65, FactorForm::ZetaMinusOne)?.is_one();
    let weights = u65_weights(&h.elements().iter().map(|&x| x as i128).collect::<Vec<_>>());
    let at_65 = weighted_product_is_one(&weights, 65, FactorForm::ZetaMinusOne);
    let reduced: Vec<(i128, i64)> = weights
        .iter()
        .map(|&(a, w)| (reduce(a, 13) as i128, w))
        .collect();
    let at_13 = weighted_product_is_one(&reduced, 13, FactorForm::ZetaMinusOne);
    let passed = h.len() == 16 && h_one && at_65 && !at_13;
    Ok(FixtureResult::new(
        "U_65 subgroup product",
        passed,
        format!(
            "|H| = {}, prod_H = 1: {h_one}, f at 65 trivial: {at_65}, f at 13 trivial: {at_13}",
            h.len()
        ),
    ))
}

/// `f = 1` on `H`, `-1` on `2H`, 0 elsewhere, as `(a, f(a))` pairs.
pub fn u65_weights(h: &[i128]) -> Vec<(i128, i64)> {
    let mut w: Vec<(i128, i64)> = h.iter().map(|&a| (a, 1)).collect();
    w.extend(h.iter().map(|&a| (reduce(2 * a, 65) as i128, -1)));
    w
}

/// `1 - zeta_15^3 = prod (1 - zeta_15^e)` for `e` in `{6, 11, 1}`.
pub fn bass_15() -> Result<FixtureResult> {
    let (lhs, rhs) = bass_relation(15, 3)?;
    let holds = verify_relation(&lhs, &rhs, 15);
    let passed = holds && rhs == vec![(6, 1), (11, 1), (1, 1)];
    let exps: Vec<i128> = rhs.iter().map(|&(e, _)| e).collect();
    Ok(FixtureResult::new(
        "Bass relation m = 15, l = 3",
        passed,
        format!("exponents {exps:?}, holds {holds}"),
    ))
}

/// `<3,5>` and `<4,5>`: gap sets and the embedding-dimension-2 rule.
pub fn dimension_two() -> Result<FixtureResult> {
    let g35 = make_semigroup(&[3, 5])?.gaps().into_vec();
    let g45 = make_semigroup(&[4, 5])?.gaps().into_vec();
    let e = |gens: &[u64], m| check_bruteforce(gens, m).map(|v| v.equidistributed);
    let passed = g35 == [1, 2, 4, 7]
        && g45 == [1, 2, 3, 6, 7, 11]
        && e(&[3, 5], 2)?
        && e(&[3, 5], 4)?
        && e(&[4, 5], 3)?
        && !e(&[4, 5], 2)?
        && check_dim2(3, 5, 2)
        && check_dim2(3, 5, 4)
        && check_dim2(4, 5, 3)
        && !check_dim2(4, 5, 2);
    Ok(FixtureResult::new(
        "dimension two <3,5>, <4,5>",
        passed,
        format!("gaps {g35:?}, {g45:?}"),
    ))
}

/// The published dependent list up to 120, against the criterion.
///
/// The criterion also flags 95, 105 and 111, each of which carries an exact
/// relation (see `cycunits`), so this row is a known discrepancy.
pub fn feng_list() -> FixtureResult {
    let got = dependent_moduli_up_to(120);
    let passed = got == PUBLISHED_DEPENDENT_UP_TO_120;
    let extra: Vec<u64> = got
        .iter()
        .copied()
        .filter(|m| !PUBLISHED_DEPENDENT_UP_TO_120.contains(m))
        .collect();
    FixtureResult {
        name: "dependent moduli up to 120",
        passed,
        known_discrepancy: !passed && extra == [95, 105, 111],
        detail: format!("computed {got:?}; not in published list: {extra:?}"),
    }
}

/// Every fixture in a fixed order.
pub fn run_all() -> Result<Vec<FixtureResult>> {
    let mut out = vec![
        genus_840()?,
        triple_9_11_2()?,
        moduli_9_11_2()?,
        pm_congruence_example()?,
        subgroup_39()?,
    ];
    out.extend(seven_families()?);
    out.extend([
        near_miss_11_14()?,
        u65_counterexample()?,
        bass_15()?,
        dimension_two()?,
        feng_list(),
    ]);
    Ok(out)
}
