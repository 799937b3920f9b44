//! Cyclotomic units: Feng's independence criterion for
//! `T'_m = { (1 - zeta_m^h) / (1 - zeta_m) : 1 < h < m/2, gcd(h, m) = 1 }`
//! and exact verification of multiplicative relations among the numbers
//! `1 - zeta_n^a` in `Z[x]/Phi_n(x)`.
//!
//! Relations with negative exponents are always rearranged so that both sides
//! carry only positive multiplicities; no inverse is ever computed.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::modmath::{crt_pair, euler_phi, factorize, gcd, reduce, subgroup_generated};
use crate::poly::{one_minus_zeta_power_product, CyclotomicElement};

/// One prime of `m` in a [`FengReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FengPrime {
    pub prime: u64,
    pub exponent: u32,
    /// `m / p^e`.
    pub cofactor: u64,
    /// Whether `-1` and `p` generate the units modulo the cofactor.
    pub generated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FengReport {
    pub m: u64,
    pub independent: bool,
    pub primes: Vec<FengPrime>,
}

/// `T'_m` is independent iff for each `p^e || m`, the unit group modulo
/// `m / p^e` is generated by `-1` and `p`.
pub fn feng_independent(m: u64) -> Result<FengReport> {
    if m < 3 {
        return Err(Error::BadModulus {
            m,
            reason: "must be at least 3",
        });
    }
    if m % 4 == 2 {
        return Err(Error::BadModulus {
            m,
            reason: "must not be 2 mod 4",
        });
    }
    let primes: Vec<FengPrime> = factorize(m)
        .factors()
        .iter()
        .map(|&(p, e)| {
            let cofactor = m / p.pow(e);
            let group = subgroup_generated(&[cofactor as i128 - 1, p as i128], cofactor)
                .expect("p and -1 are units modulo the cofactor");
            FengPrime {
                prime: p,
                exponent: e,
                cofactor,
                generated: group.len() as u64 == euler_phi(cofactor),
            }
        })
        .collect();
    Ok(FengReport {
        m,
        independent: primes.iter().all(|p| p.generated),
        primes,
    })
}

/// Every `3 <= m <= n` with `m ≢ 2 (mod 4)` for which `T'_m` is dependent.
pub fn dependent_moduli_up_to(n: u64) -> Vec<u64> {
    (3..=n)
        .filter(|m| m % 4 != 2)
        .filter(|&m| !feng_independent(m).expect("admissible modulus").independent)
        .collect()
}

/// `(exponent, multiplicity)` pairs describing `prod (1 - zeta^e)^k`.
pub type Exponents = Vec<(i128, u64)>;

/// Sign convention for the factors of a product over a set of exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FactorForm {
    /// `1 - zeta^a`
    OneMinusZeta,
    /// `zeta^a - 1`
    ZetaMinusOne,
}

/// `prod_{a in H} f(zeta_n^a)` where `H` is the subgroup of units mod `m`
/// generated by `gens` and `f` is `1 - z` or `z - 1`. The exponents are
/// reduced mod `n`, so `n` may be any divisor of `m` above 1.
pub fn subgroup_product(
    m: u64,
    gens: &[i128],
    n: u64,
    form: FactorForm,
) -> Result<CyclotomicElement> {
    if n < 2 || !m.is_multiple_of(n) {
        return Err(Error::BadModulus {
            m: n,
            reason: "conductor must be a divisor of m above 1",
        });
    }
    let h = subgroup_generated(gens, m)?;
    let exps: Vec<(i128, u64)> = h.elements().iter().map(|&e| (e as i128, 1)).collect();
    let prod = one_minus_zeta_power_product(&exps, n);
    Ok(match form {
        FactorForm::ZetaMinusOne if h.len() % 2 == 1 => prod.neg(),
        _ => prod,
    })
}

/// Whether `prod_{a in H} (1 - zeta_m^a) = 1` for `H = <gens>` in `U_m`.
pub fn verify_subgroup_product_is_one(m: u64, gens: &[i128]) -> Result<bool> {
    Ok(subgroup_product(m, gens, m, FactorForm::OneMinusZeta)?.is_one())
}

/// Exact equality `prod (1 - zeta_n^e)^k` over `lhs` and `rhs` in `Z[zeta_n]`.
pub fn verify_relation(lhs: &[(i128, u64)], rhs: &[(i128, u64)], n: u64) -> bool {
    one_minus_zeta_power_product(lhs, n) == one_minus_zeta_power_product(rhs, n)
}

/// Whether `prod_a (f(zeta_n^a))^(w_a) = 1` for signed integer weights `w_a`.
///
/// Positive and negative weights are moved to opposite sides; with the
/// `zeta - 1` form each side picks up the sign `(-1)^(total multiplicity)`.
pub fn weighted_product_is_one(weights: &[(i128, i64)], n: u64, form: FactorForm) -> bool {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for &(e, w) in weights {
        match w.signum() {
            1 => pos.push((e, w as u64)),
            -1 => neg.push((e, w.unsigned_abs())),
            _ => {}
        }
    }
    let lhs = one_minus_zeta_power_product(&pos, n);
    let rhs = one_minus_zeta_power_product(&neg, n);
    let flip = match form {
        FactorForm::OneMinusZeta => false,
        FactorForm::ZetaMinusOne => {
            let total: u64 = pos.iter().chain(&neg).map(|&(_, k)| k).sum();
            total % 2 == 1
        }
    };
    if flip {
        lhs == rhs.neg()
    } else {
        lhs == rhs
    }
}

/// The unit `x` modulo `m1 * m2` with `x ≡ r (mod m1)` and `x ≡ 1 (mod m2)`.
pub fn lift_unit(r: i128, m1: u64, m2: u64) -> Result<u64> {
    if gcd(m1, m2) != 1 {
        return Err(Error::BadModulus {
            m: m1 * m2,
            reason: "factors must be coprime",
        });
    }
    if gcd(reduce(r, m1), m1) != 1 {
        return Err(Error::NotAUnit {
            value: r as i64,
            modulus: m1,
        });
    }
    crt_pair(r, m1, 1, m2)
}

/// Exponent lists for the norm-type relation
/// `1 - zeta_m^l = prod_{i=1..d} (1 - zeta_m^((m' i + 1) u))`, where
/// `d = gcd(l, m)`, `m' = m / d` and `u` is a unit with `l ≡ d u (mod m)`.
pub fn bass_relation(m: u64, l: u64) -> Result<(Exponents, Exponents)> {
    if m < 2 || l == 0 || l.is_multiple_of(m) {
        return Err(Error::InvalidParameter {
            name: "l",
            reason: format!("need m >= 2 and l not divisible by m (m = {m}, l = {l})"),
        });
    }
    let d = gcd(l, m);
    let m_prime = m / d;
    let l_prime = (l / d) % m_prime;
    let u = (0..d)
        .map(|j| l_prime + j * m_prime)
        .find(|&u| gcd(u, m) == 1)
        .expect("some lift of a unit mod m' is a unit mod m");
    let lhs = vec![(l as i128, 1)];
    let rhs = (1..=d)
        .map(|i| {
            (
                reduce(((m_prime * i + 1) as i128) * u as i128, m) as i128,
                1,
            )
        })
        .collect();
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn feng_examples() {
        let r = feng_independent(49).unwrap();
        assert!(r.independent);
        assert_eq!(
            r.primes,
            vec![FengPrime {
                prime: 7,
                exponent: 2,
                cofactor: 1,
                generated: true
            }]
        );
        assert!(!feng_independent(39).unwrap().independent);
        assert!(feng_independent(40).unwrap().independent);
        assert!(feng_independent(2).is_err());
        assert!(feng_independent(30).is_err());
        assert!(feng_independent(3).unwrap().independent);
    }

    #[test]
    fn dependent_lists() {
        assert_eq!(
            dependent_moduli_up_to(120),
            vec![39, 55, 56, 65, 68, 84, 91, 95, 105, 111, 112, 117, 120]
        );
        assert!(dependent_moduli_up_to(38).is_empty());
        assert_eq!(dependent_moduli_up_to(39), vec![39]);
    }

    // A subgroup G with prod_G (1 - zeta^g) = prod_{cG} (1 - zeta^h) and
    // c outside +-G gives a nontrivial relation in T'_m.
    #[test]
    fn explicit_relations_for_95_105_111() {
        for (m, g, c) in [(95u64, 4i128, 2u64), (105, 17, 2), (111, 4, 2)] {
            let h = subgroup_generated(&[g], m).unwrap();
            let pm = subgroup_generated(&[g, m as i128 - 1], m).unwrap();
            assert!(!pm.contains(c as i128));
            let lhs: Vec<(i128, u64)> = h.elements().iter().map(|&e| (e as i128, 1)).collect();
            let rhs: Vec<(i128, u64)> = h
                .elements()
                .iter()
                .map(|&e| (reduce(e as i128 * c as i128, m) as i128, 1))
                .collect();
            assert!(verify_relation(&lhs, &rhs, m), "m = {m}");
            assert!(!feng_independent(m).unwrap().independent);
        }
    }

    #[test]
    fn subgroup_products() {
        assert!(verify_subgroup_product_is_one(39, &[35]).unwrap());
        let h = [
            lift_unit(2, 5, 13).unwrap() as i128,
            lift_unit(5, 13, 5).unwrap() as i128,
        ];
        assert_eq!(subgroup_generated(&h, 65).unwrap().len(), 16);
        assert!(verify_subgroup_product_is_one(65, &h).unwrap());
        assert!(!verify_subgroup_product_is_one(13, &[1]).unwrap());
        assert!(verify_subgroup_product_is_one(39, &[4]).is_ok());
        assert!(verify_subgroup_product_is_one(39, &[3]).is_err());
    }

    #[test]
    fn zeta_form_sign() {
        // |H| = 3 for H = <9> mod 13
        let a = subgroup_product(13, &[9], 13, FactorForm::OneMinusZeta).unwrap();
        let b = subgroup_product(13, &[9], 13, FactorForm::ZetaMinusOne).unwrap();
        assert_eq!(a, b.neg());
    }

    #[test]
    fn bass_examples() {
        let (lhs, rhs) = bass_relation(15, 3).unwrap();
        assert_eq!(rhs, vec![(6, 1), (11, 1), (1, 1)]);
        assert!(verify_relation(&lhs, &rhs, 15));
        assert!(verify_relation(&lhs, &lhs, 15));
        assert!(!verify_relation(&[(1, 1)], &[(2, 1)], 15));
        assert!(bass_relation(15, 15).is_err());
    }

    #[test]
    fn lifts() {
        assert_eq!(lift_unit(2, 5, 13).unwrap(), 27);
        assert_eq!(lift_unit(5, 13, 5).unwrap(), 31);
        assert!(lift_unit(5, 10, 3).is_err());
        assert!(lift_unit(2, 6, 4).is_err());
    }
}
