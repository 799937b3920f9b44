//! Deciders for equidistribution of gap sets modulo `m`.
//!
//! Three independent routes are provided for geometric semigroups
//! `<a^k, a^(k-1) b, ..., b^k>`:
//!
//! * [`check_bruteforce`] counts gaps per residue class from the Apéry table;
//! * [`check_polynomial`] tests
//!   `(x-1) prod_{i>=1} (x^(a g_i) - 1) ≡ prod_{i>=0} (x^(g_i) - 1) (mod x^m - 1)`
//!   together with `gcd(ab, m) = 1`;
//! * [`check_theorem`] evaluates seven closed-form residue conditions on
//!   `a`, `b`, `k`, `m`, `r ≡ a^-1 b` and the cyclic group `R = <r>`.
//!
//! The embedding-dimension-2 and `k = 2` specializations, modulus enumeration,
//! and the (PM-)congruence predicates on exponent sequences live here too.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::modmath::{
    factorize, gcd, geometric_sum_mod, mod_inverse, mod_pow, mul_mod, reduce, FACTORIZE_CAP,
};
use crate::poly::{binomial_product, CyclicPoly};
use crate::semigroup::{
    genus_geometric_formula, make_geometric_with_cap, make_semigroup_with_cap, to_u64,
    GeometricParams, NumericalSemigroup, ResidueHistogram, DEFAULT_APERY_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    BruteForce,
    Polynomial,
    Theorem,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::BruteForce => "brute",
            Method::Polynomial => "poly",
            Method::Theorem => "theorem",
        })
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Smallest satisfied condition (1..=7).
    Condition { index: u8 },
    /// No condition holds although `gcd(ab, m) = 1`.
    NoCondition,
    /// `gcd(ab, m) > 1`, which rules out equidistribution.
    GcdObstruction { gcd: u64 },
    /// Gap counts per residue class.
    Histogram { counts: Vec<u64> },
    /// Nonzero terms of `L(x) - R(x)` modulo `x^m - 1`; empty when they agree.
    PolynomialDifference { terms: Vec<(usize, i128)> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquidistVerdict {
    pub equidistributed: bool,
    pub method: Method,
    pub certificate: Certificate,
}

/// Brute force from explicit generators.
pub fn check_bruteforce(gens: &[u64], m: u64) -> Result<EquidistVerdict> {
    check_bruteforce_with_cap(gens, m, DEFAULT_APERY_CAP)
}

pub fn check_bruteforce_with_cap(gens: &[u64], m: u64, cap: u64) -> Result<EquidistVerdict> {
    let s = make_semigroup_with_cap(gens, cap)?;
    Ok(bruteforce_verdict(&s, m))
}

/// Brute force on an already-built semigroup.
pub fn bruteforce_verdict(s: &NumericalSemigroup, m: u64) -> EquidistVerdict {
    let hist: ResidueHistogram = s.gap_residue_histogram(m);
    EquidistVerdict {
        equidistributed: hist.is_equidistributed(),
        method: Method::BruteForce,
        certificate: Certificate::Histogram {
            counts: hist.counts().to_vec(),
        },
    }
}

/// Brute force for a geometric semigroup, building the Apéry table from the
/// product formula.
pub fn check_bruteforce_geometric(
    p: &GeometricParams,
    m: u64,
    cap: u64,
) -> Result<EquidistVerdict> {
    let s = make_geometric_with_cap(p, cap)?;
    Ok(bruteforce_verdict(&s, m))
}

/// The two sides `L(x)` and `R(x)` reduced in `Z[x]/(x^m - 1)`, exponents taken
/// mod `m`.
pub fn polynomial_sides(p: &GeometricParams, m: u64) -> Result<(CyclicPoly, CyclicPoly)> {
    let k = p.k();
    let g: Vec<u64> = (0..=k)
        .map(|i| {
            mul_mod(
                mod_pow(p.a() as i128, (k - i) as u64, m).value(),
                mod_pow(p.b() as i128, i as u64, m).value(),
                m,
            )
        })
        .collect();
    let a = p.a() % m;
    let mut lhs_exps = vec![1i128];
    lhs_exps.extend(g[1..].iter().map(|&gi| mul_mod(a, gi, m) as i128));
    let rhs_exps: Vec<i128> = g.iter().map(|&gi| gi as i128).collect();
    Ok((
        binomial_product(&lhs_exps, m)?,
        binomial_product(&rhs_exps, m)?,
    ))
}

/// `L(x) - R(x)` in `Z[x]/(x^m - 1)`.
pub fn polynomial_difference(p: &GeometricParams, m: u64) -> Result<CyclicPoly> {
    let (l, r) = polynomial_sides(p, m)?;
    l.sub(&r)
}

fn ab_gcd(p: &GeometricParams, m: u64) -> u64 {
    gcd(mul_mod(p.a() % m, p.b() % m, m), m)
}

/// Polynomial criterion: `gcd(ab, m) = 1` and `L ≡ R (mod x^m - 1)`.
pub fn check_polynomial(p: &GeometricParams, m: u64) -> bool {
    polynomial_verdict(p, m).equidistributed
}

pub fn polynomial_verdict(p: &GeometricParams, m: u64) -> EquidistVerdict {
    assert!(m >= 1, "modulus must be positive");
    let g = ab_gcd(p, m);
    if g > 1 {
        return EquidistVerdict {
            equidistributed: false,
            method: Method::Polynomial,
            certificate: Certificate::GcdObstruction { gcd: g },
        };
    }
    // Each side is a product of at most k + 2 binomials: coefficients stay
    // below 2^(k+2) in absolute value, far inside i128 for any k < 120.
    let diff = polynomial_difference(p, m).expect("binomial products fit in i128");
    EquidistVerdict {
        equidistributed: diff.is_zero(),
        method: Method::Polynomial,
        certificate: Certificate::PolynomialDifference {
            terms: diff.terms(),
        },
    }
}

/// Which of the seven closed-form conditions hold, in increasing order.
///
/// Returns an empty list when `gcd(ab, m) > 1`.
pub fn satisfied_conditions(p: &GeometricParams, m: u64) -> Vec<u8> {
    assert!(m >= 1, "modulus must be positive");
    if ab_gcd(p, m) > 1 {
        return Vec::new();
    }
    let k = p.k() as u64;
    let a = p.a() % m;
    let b = p.b() % m;
    let one = 1 % m;
    let minus_one = (m - 1) % m;
    let r = mul_mod(
        mod_inverse(a as i128, m).expect("gcd checked").value(),
        b,
        m,
    );
    let divides = |x: u64| reduce(x as i128, m) == 0;

    let mut out = Vec::new();
    if a == one || b == one {
        out.push(1);
    }
    if a == minus_one && b == minus_one {
        if k.is_multiple_of(2) && divides(k) {
            out.push(2);
        }
        if k % 2 == 1 && divides(k + 1) {
            out.push(3);
        }
    }
    if a != b {
        let pow_one = |e: u64| {
            mod_pow(a as i128, e, m).value() == one && mod_pow(b as i128, e, m).value() == one
        };
        let neg_a = (m - a) % m;
        for (exp, base_idx) in [(k, 4u8), (k + 1, 6u8)] {
            if !pow_one(exp) {
                continue;
            }
            // r^exp ≡ 1 here, so <r> has at most `exp` elements.
            let group = cyclic_subgroup(r, m);
            if group.contains(&a) {
                out.push(base_idx);
            }
            let parity_ok = if base_idx == 4 {
                k.is_multiple_of(2)
            } else {
                k % 2 == 1
            };
            if group.contains(&neg_a)
                && parity_ok
                && geometric_sum_mod(r as i128, exp, m).value() == 0
            {
                out.push(base_idx + 1);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Powers of a unit `r` modulo `m` until they return to 1.
fn cyclic_subgroup(r: u64, m: u64) -> Vec<u64> {
    let one = 1 % m;
    let mut out = vec![one];
    let mut x = r % m;
    while x != one {
        out.push(x);
        x = mul_mod(x, r, m);
    }
    out
}

/// Closed-form decider; reports the smallest satisfied condition.
pub fn check_theorem(p: &GeometricParams, m: u64) -> EquidistVerdict {
    let g = ab_gcd(p, m);
    let certificate = if g > 1 {
        Certificate::GcdObstruction { gcd: g }
    } else {
        match satisfied_conditions(p, m).first() {
            Some(&index) => Certificate::Condition { index },
            None => Certificate::NoCondition,
        }
    };
    EquidistVerdict {
        equidistributed: matches!(certificate, Certificate::Condition { .. }),
        method: Method::Theorem,
        certificate,
    }
}

/// Embedding dimension 2: `<a, b>` is equidistributed mod `m` iff
/// `gcd(ab, m) = 1` and `a ≡ 1` or `b ≡ 1`. If `a` or `b` is 1 there are no
/// gaps at all.
pub fn check_dim2(a: u64, b: u64, m: u64) -> bool {
    assert!(m >= 1 && a >= 1 && b >= 1);
    if a == 1 || b == 1 {
        return true;
    }
    gcd(a, m) == 1 && gcd(b, m) == 1 && (a % m == 1 % m || b % m == 1 % m)
}

/// `k = 2`: `gcd(ab, m) = 1` and `a ≡ 1`, `b ≡ 1`, or `a^3 ≡ ab ≡ 1`.
pub fn check_k2(a: u64, b: u64, m: u64) -> bool {
    assert!(m >= 1 && a > 1 && b > 1);
    let one = 1 % m;
    if gcd(a, m) != 1 || gcd(b, m) != 1 {
        return false;
    }
    let (ar, br) = (a % m, b % m);
    ar == one
        || br == one
        || (mod_pow(ar as i128, 3, m).value() == one && mul_mod(ar, br, m) == one)
}

/// Every `m` for which the gap set of `<Geom(a, b; k)>` is equidistributed.
///
/// Such an `m` divides the genus and is coprime to `ab`, so the candidates are
/// the divisors of the genus; each is decided with [`check_theorem`].
pub fn equidist_moduli(p: &GeometricParams) -> Result<Vec<u64>> {
    let genus: BigUint = genus_geometric_formula(p);
    let g = to_u64(&genus)
        .filter(|&g| g <= FACTORIZE_CAP)
        .ok_or_else(|| Error::CapExceeded {
            what: "genus to factor",
            required: u128::try_from(&genus).unwrap_or(u128::MAX),
            cap: FACTORIZE_CAP as u128,
        })?;
    let mut out: Vec<u64> = factorize(g)
        .divisors()
        .into_iter()
        .filter(|&m| gcd(p.a(), m) == 1 && gcd(p.b(), m) == 1)
        .filter(|&m| check_theorem(p, m).equidistributed)
        .collect();
    if out.first() != Some(&1) {
        out.insert(0, 1);
    }
    Ok(out)
}

/// Verdicts of all three methods on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub brute: EquidistVerdict,
    pub polynomial: EquidistVerdict,
    pub theorem: EquidistVerdict,
}

impl CrossCheck {
    pub fn agree(&self) -> bool {
        self.brute.equidistributed == self.polynomial.equidistributed
            && self.polynomial.equidistributed == self.theorem.equidistributed
    }

    pub fn verdict(&self) -> Option<bool> {
        self.agree().then_some(self.theorem.equidistributed)
    }
}

pub fn cross_check(p: &GeometricParams, m: u64, cap: u64) -> Result<CrossCheck> {
    Ok(CrossCheck {
        brute: check_bruteforce_geometric(p, m, cap)?,
        polynomial: polynomial_verdict(p, m),
        theorem: check_theorem(p, m),
    })
}

/// A sequence of integer exponents considered modulo `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExponentSequence {
    values: Vec<i128>,
    modulus: u64,
}

impl ExponentSequence {
    pub fn new(values: Vec<i128>, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        ExponentSequence { values, modulus }
    }

    pub fn values(&self) -> &[i128] {
        &self.values
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn all_units(&self) -> bool {
        self.values
            .iter()
            .all(|&v| gcd(reduce(v, self.modulus), self.modulus) == 1)
    }

    fn sorted_by<F: Fn(u64) -> u64>(&self, canon: F) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .values
            .iter()
            .map(|&x| canon(reduce(x, self.modulus)))
            .collect();
        v.sort_unstable();
        v
    }
}

fn check_pair(c: &ExponentSequence, d: &ExponentSequence) -> Result<()> {
    if c.len() != d.len() {
        return Err(Error::LengthMismatch {
            left: c.len(),
            right: d.len(),
        });
    }
    if c.modulus != d.modulus {
        return Err(Error::ModulusMismatch {
            left: c.modulus as usize,
            right: d.modulus as usize,
        });
    }
    Ok(())
}

/// Equal as multisets of residues mod `m`.
pub fn sequences_congruent(c: &ExponentSequence, d: &ExponentSequence) -> Result<bool> {
    check_pair(c, d)?;
    Ok(c.sorted_by(|x| x) == d.sorted_by(|x| x))
}

/// Equal as multisets of residues up to sign: each `e` is replaced by
/// `min(e mod m, -e mod m)`.
pub fn sequences_pm_congruent(c: &ExponentSequence, d: &ExponentSequence) -> Result<bool> {
    check_pair(c, d)?;
    let m = c.modulus;
    let canon = |x: u64| x.min((m - x) % m);
    Ok(c.sorted_by(canon) == d.sorted_by(canon))
}

/// `prod (x^(c_i) - 1) ≡ prod (x^(d_i) - 1) (mod x^m - 1)`.
pub fn product_congruence_holds(c: &ExponentSequence, d: &ExponentSequence) -> Result<bool> {
    check_pair(c, d)?;
    Ok(binomial_product(&c.values, c.modulus)? == binomial_product(&d.values, d.modulus)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geom(a: u64, b: u64, k: u32) -> GeometricParams {
        GeometricParams::new(a, b, k).unwrap()
    }

    fn seq(v: &[i128], m: u64) -> ExponentSequence {
        ExponentSequence::new(v.to_vec(), m)
    }

    #[test]
    fn bruteforce_examples() {
        assert!(check_bruteforce(&[81, 99, 121], 7).unwrap().equidistributed);
        assert!(
            !check_bruteforce(&[81, 99, 121], 70)
                .unwrap()
                .equidistributed
        );
        assert!(check_bruteforce(&[4, 5], 1).unwrap().equidistributed);
        assert!(check_bruteforce(&[4, 6], 3).is_err());
    }

    #[test]
    fn polynomial_examples() {
        let p = geom(9, 11, 2);
        assert!(check_polynomial(&p, 10));
        assert!(check_polynomial(&p, 7));
        assert!(!check_polynomial(&p, 70));
        assert_eq!(
            polynomial_difference(&p, 70).unwrap().terms(),
            vec![
                (1, 1),
                (10, 1),
                (11, -1),
                (20, -1),
                (29, -1),
                (39, 1),
                (52, -1),
                (62, 1)
            ]
        );
        assert!(check_polynomial(&geom(5, 7, 3), 1));
        assert!(!check_polynomial(&p, 3));
    }

    #[test]
    fn theorem_example_3_3() {
        let p = geom(9, 11, 2);
        for m in 1..=300u64 {
            let expected = 8 % m == 0 || 10 % m == 0 || 14 % m == 0;
            assert_eq!(check_theorem(&p, m).equidistributed, expected, "m = {m}");
        }
        assert_eq!(check_theorem(&p, 70).certificate, Certificate::NoCondition);
        assert_eq!(
            check_theorem(&p, 33).certificate,
            Certificate::GcdObstruction { gcd: 33 }
        );
        assert_eq!(
            check_theorem(&p, 1).certificate,
            Certificate::Condition { index: 1 }
        );
    }

    #[test]
    fn theorem_families() {
        for k in 1..=8 {
            assert_eq!(satisfied_conditions(&geom(13, 7, k), 3), vec![1]);
        }
        assert_eq!(satisfied_conditions(&geom(5, 11, 6), 3), vec![2]);
        assert_eq!(satisfied_conditions(&geom(5, 11, 4), 3), Vec::<u8>::new());
        assert_eq!(satisfied_conditions(&geom(5, 11, 5), 3), vec![3]);
    }

    #[test]
    fn near_miss_instance() {
        let p = geom(11, 14, 2);
        assert!(!check_theorem(&p, 15).equidistributed);
        assert!(!check_polynomial(&p, 15));
    }

    #[test]
    fn dim2_examples() {
        assert!(check_dim2(3, 5, 2));
        assert!(check_dim2(3, 5, 4));
        assert!(check_dim2(4, 5, 3));
        assert!(!check_dim2(4, 5, 2));
        assert!(check_dim2(1, 6, 4));
    }

    #[test]
    fn k2_examples() {
        assert!(check_k2(9, 11, 14));
        assert!(check_k2(9, 11, 8));
        assert!(!check_k2(9, 11, 70));
    }

    #[test]
    fn moduli_examples() {
        assert_eq!(
            equidist_moduli(&geom(9, 11, 2)).unwrap(),
            vec![1, 2, 4, 5, 7, 8, 10, 14]
        );
        assert_eq!(equidist_moduli(&geom(3, 5, 1)).unwrap(), vec![1, 2, 4]);
        let p = geom(7, 10, 3);
        let genus = to_u64(&genus_geometric_formula(&p)).unwrap();
        assert!(equidist_moduli(&p)
            .unwrap()
            .iter()
            .all(|m| genus.is_multiple_of(*m)));
    }

    #[test]
    fn congruence_examples() {
        let c = seq(&[1, 81 * 11, 9 * 121], 10);
        let d = seq(&[81, 99, 121], 10);
        assert!(sequences_congruent(&c, &d).unwrap());
        assert!(sequences_congruent(&c, &c).unwrap());
        let ones = seq(&[1, 1, 1, 1], 4);
        let threes = seq(&[3, 3, 3, 3], 4);
        assert!(!sequences_congruent(&ones, &threes).unwrap());
        assert!(sequences_pm_congruent(&ones, &threes).unwrap());
        assert!(sequences_pm_congruent(&c, &d).unwrap());
        assert!(!sequences_pm_congruent(&seq(&[2], 7), &seq(&[3], 7)).unwrap());
        assert!(product_congruence_holds(&ones, &threes).unwrap());
        assert!(product_congruence_holds(&c, &c).unwrap());
        assert!(matches!(
            sequences_congruent(&seq(&[1], 5), &seq(&[1, 2], 5)),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        ));
        assert!(product_congruence_holds(&seq(&[1], 5), &seq(&[1], 6)).is_err());
    }

    #[test]
    fn cross_check_agrees_on_example() {
        let p = geom(9, 11, 2);
        for m in [7, 10, 70] {
            let cc = cross_check(&p, m, DEFAULT_APERY_CAP).unwrap();
            assert!(cc.agree(), "m = {m}");
        }
    }
}
