//! Exact integer and residue arithmetic.
//!
//! Every operation reduces through `u128`/`i128` intermediates, so products of
//! two residues below 2^64 never wrap. A modulus of 1 is accepted everywhere
//! and has the single residue 0.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// A residue class `value (mod modulus)` with `0 <= value < modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    /// Reduces an arbitrary signed integer into `[0, m)`.
    pub fn new(x: i128, m: u64) -> Self {
        assert!(m >= 1, "modulus must be positive");
        let value = x.rem_euclid(m as i128) as u64;
        Residue { value, modulus: m }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_one(self) -> bool {
        self.value == 1 % self.modulus
    }
}

impl std::ops::Neg for Residue {
    type Output = Residue;

    fn neg(self) -> Residue {
        Residue::new(-(self.value as i128), self.modulus)
    }
}

impl std::ops::Mul for Residue {
    type Output = Residue;

    fn mul(self, other: Residue) -> Residue {
        debug_assert_eq!(self.modulus, other.modulus);
        Residue {
            value: mul_mod(self.value, other.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

#[inline]
pub(crate) fn mul_mod(x: u64, y: u64, m: u64) -> u64 {
    ((x as u128 * y as u128) % m as u128) as u64
}

/// Reduces a signed integer into `[0, m)`.
#[inline]
pub fn reduce(x: i128, m: u64) -> u64 {
    x.rem_euclid(m as i128) as u64
}

/// `base^exp mod m` by square-and-multiply.
pub fn mod_pow(base: i128, mut exp: u64, m: u64) -> Residue {
    assert!(m >= 1, "modulus must be positive");
    let mut acc = 1 % m;
    let mut sq = reduce(base, m);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, sq, m);
        }
        sq = mul_mod(sq, sq, m);
        exp >>= 1;
    }
    Residue {
        value: acc,
        modulus: m,
    }
}

/// Inverse of `x` modulo `m` via the extended Euclidean algorithm.
pub fn mod_inverse(x: i128, m: u64) -> Result<Residue> {
    assert!(m >= 1, "modulus must be positive");
    let (mut old_r, mut r) = (reduce(x, m) as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    // old_r = gcd(x mod m, m); for m = 1 this is 1 and every x is a unit.
    if old_r != 1 {
        return Err(Error::NotAUnit {
            value: x.clamp(i64::MIN as i128, i64::MAX as i128) as i64,
            modulus: m,
        });
    }
    Ok(Residue::new(old_s, m))
}

/// `(1 + r + ... + r^(terms-1)) mod m`, accumulated by Horner's rule.
pub fn geometric_sum_mod(r: i128, terms: u64, m: u64) -> Residue {
    assert!(m >= 1, "modulus must be positive");
    let r = reduce(r, m);
    let mut acc = 0u64;
    for _ in 0..terms {
        acc = ((acc as u128 * r as u128 + 1) % m as u128) as u64;
    }
    Residue {
        value: acc,
        modulus: m,
    }
}

/// Prime factorization `n = p1^e1 * ... * pl^el`, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimePowerFactorization(Vec<(u64, u32)>);

impl PrimePowerFactorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    /// Reconstructs the factored integer.
    pub fn product(&self) -> u128 {
        self.0.iter().map(|&(p, e)| (p as u128).pow(e)).product()
    }

    /// Maximal prime powers `p^e || n`, in order of the primes.
    pub fn prime_powers(&self) -> Vec<u64> {
        self.0.iter().map(|&(p, e)| p.pow(e)).collect()
    }

    pub fn is_prime_power(&self) -> bool {
        self.0.len() == 1
    }

    /// All positive divisors, sorted ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.0 {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

/// Largest input accepted by [`factorize`].
pub const FACTORIZE_CAP: u64 = 1 << 63;

/// Trial-division factorization. Inputs above 2^63 are rejected.
pub fn factorize(n: u64) -> PrimePowerFactorization {
    assert!(n >= 1, "factorize: n must be positive");
    assert!(n <= FACTORIZE_CAP, "factorize: {n} exceeds 2^63");
    let mut n = n;
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    // 6k +- 1 wheel
    let mut p = 5u64;
    while p.saturating_mul(p) <= n {
        push(p, &mut n);
        push(p + 2, &mut n);
        p += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    PrimePowerFactorization(out)
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in SMALL {
        let mut x = mod_pow(a as i128, d, n).value();
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .factors()
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// The subgroup of the unit group modulo `m` generated by a set of residues.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitSubgroup {
    modulus: u64,
    elements: Vec<u64>,
}

impl UnitSubgroup {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Elements as integers in `[0, m)`, sorted.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: i128) -> bool {
        self.elements
            .binary_search(&reduce(x, self.modulus))
            .is_ok()
    }

    /// The coset `c * self`, sorted.
    pub fn coset(&self, c: i128) -> Vec<u64> {
        let c = reduce(c, self.modulus);
        let mut out: Vec<u64> = self
            .elements
            .iter()
            .map(|&h| mul_mod(h, c, self.modulus))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Closure of `gens ∪ {1}` under multiplication modulo `m`, by breadth-first
/// saturation.
pub fn subgroup_generated(gens: &[i128], m: u64) -> Result<UnitSubgroup> {
    assert!(m >= 1, "modulus must be positive");
    let mut reduced = Vec::with_capacity(gens.len());
    for &g in gens {
        let r = reduce(g, m);
        if gcd(r, m) != 1 {
            return Err(Error::NotAUnit {
                value: g.clamp(i64::MIN as i128, i64::MAX as i128) as i64,
                modulus: m,
            });
        }
        reduced.push(r);
    }
    reduced.sort_unstable();
    reduced.dedup();

    let one = 1 % m;
    let mut seen = vec![false; m as usize];
    let mut queue = VecDeque::from([one]);
    seen[one as usize] = true;
    let mut elements = vec![one];
    while let Some(x) = queue.pop_front() {
        for &g in &reduced {
            let y = mul_mod(x, g, m);
            if !seen[y as usize] {
                seen[y as usize] = true;
                elements.push(y);
                queue.push_back(y);
            }
        }
    }
    elements.sort_unstable();
    Ok(UnitSubgroup {
        modulus: m,
        elements,
    })
}

/// Multiplicative order of a unit `x` modulo `m`.
pub fn multiplicative_order(x: i128, m: u64) -> Result<u64> {
    let x = reduce(x, m);
    if gcd(x, m) != 1 {
        return Err(Error::NotAUnit {
            value: x as i64,
            modulus: m,
        });
    }
    let mut order = 1;
    let mut acc = x % m;
    while acc != 1 % m {
        acc = mul_mod(acc, x, m);
        order += 1;
    }
    Ok(order)
}

/// Chinese remainder lift of `x ≡ r1 (mod m1)`, `x ≡ r2 (mod m2)` for coprime
/// moduli, returned in `[0, m1*m2)`.
pub fn crt_pair(r1: i128, m1: u64, r2: i128, m2: u64) -> Result<u64> {
    let inv = mod_inverse(m1 as i128, m2)?;
    let r1 = reduce(r1, m1) as i128;
    let t = reduce((r2 - r1) * inv.value() as i128, m2) as i128;
    let m = m1 as i128 * m2 as i128;
    Ok(((r1 + m1 as i128 * t).rem_euclid(m)) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_pow_examples() {
        assert_eq!(mod_pow(11, 2, 15).value(), 1);
        assert_eq!(mod_pow(9, 3, 7).value(), 1);
        for m in 2..30u64 {
            for x in 0..m {
                if gcd(x, m) == 1 {
                    assert_eq!(mod_pow(x as i128, 0, m).value(), 1);
                }
            }
        }
        assert_eq!(mod_pow(-2, 3, 7).value(), 6);
        assert_eq!(mod_pow(5, 0, 1).value(), 0);
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(9, 70).unwrap().value(), 39);
        assert_eq!(mod_inverse(1, 13).unwrap().value(), 1);
        assert!(matches!(
            mod_inverse(6, 15),
            Err(Error::NotAUnit {
                value: 6,
                modulus: 15
            })
        ));
        assert_eq!(mod_inverse(-1, 7).unwrap().value(), 6);
        assert_eq!(mod_inverse(4, 1).unwrap().value(), 0);
    }

    #[test]
    fn euler_phi_examples() {
        assert_eq!(euler_phi(39), 24);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(65), 48);
        assert_eq!(euler_phi(2), 1);
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(120).factors(), &[(2, 3), (3, 1), (5, 1)]);
        assert!(factorize(1).factors().is_empty());
        assert_eq!(factorize(39).factors(), &[(3, 1), (13, 1)]);
        assert_eq!(factorize(840).divisors().len(), 32);
    }

    #[test]
    fn factorize_sweep_reconstructs() {
        for n in 1..=1_000_000u64 {
            let f = factorize(n);
            assert_eq!(f.product(), n as u128, "n = {n}");
            if n % 9973 == 0 {
                assert!(f.primes().all(is_prime));
            }
        }
    }

    #[test]
    fn primality_against_sieve() {
        let limit = 20_000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                for j in (i * i..limit).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (n, &p) in sieve.iter().enumerate() {
            assert_eq!(is_prime(n as u64), p, "n = {n}");
        }
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn subgroup_examples() {
        assert_eq!(
            subgroup_generated(&[35], 39).unwrap().elements(),
            &[1, 14, 16, 22, 29, 35]
        );
        assert_eq!(subgroup_generated(&[1], 17).unwrap().elements(), &[1]);
        assert_eq!(subgroup_generated(&[2], 7).unwrap().elements(), &[1, 2, 4]);
        assert!(subgroup_generated(&[3], 15).is_err());
        assert_eq!(subgroup_generated(&[], 1).unwrap().elements(), &[0]);
    }

    #[test]
    fn geometric_sum_examples() {
        assert_eq!(geometric_sum_mod(4, 2, 15).value(), 5);
        assert_eq!(geometric_sum_mod(123, 1, 10).value(), 1);
        assert_eq!(geometric_sum_mod(2, 3, 7).value(), 0);
    }

    #[test]
    fn crt_lifts() {
        assert_eq!(crt_pair(2, 5, 1, 13).unwrap(), 27);
        assert_eq!(crt_pair(1, 5, 5, 13).unwrap(), 31);
    }

    #[test]
    fn orders() {
        assert_eq!(multiplicative_order(9, 7).unwrap(), 3);
        assert_eq!(multiplicative_order(5, 13).unwrap(), 4);
        assert!(multiplicative_order(5, 10).is_err());
    }
}
