//! Exact polynomial arithmetic: the cyclic ring `Z[x]/(x^m - 1)`, cyclotomic
//! polynomials, and the cyclotomic rings `Z[x]/Phi_n(x)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::modmath::{euler_phi, factorize, reduce};

/// Residue in `Z[x]/(x^m - 1)`: coefficient of `x^i` at index `i`, `0 <= i < m`.
///
/// Coefficients are `i128`; every operation is checked and reports
/// [`Error::Overflow`] instead of wrapping.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicPoly {
    coeffs: Vec<i128>,
}

impl CyclicPoly {
    pub fn zero(m: usize) -> Self {
        assert!(m >= 1, "modulus must be positive");
        CyclicPoly { coeffs: vec![0; m] }
    }

    pub fn one(m: usize) -> Self {
        Self::monomial(0, 1, m)
    }

    /// `c * x^(e mod m)`.
    pub fn monomial(e: i128, c: i128, m: usize) -> Self {
        let mut p = Self::zero(m);
        p.coeffs[reduce(e, m as u64) as usize] = c;
        p
    }

    /// Wraps an arbitrary coefficient vector into length `m` (index `i` goes to
    /// `i mod m`).
    pub fn from_coeffs(coeffs: &[i128], m: usize) -> Result<Self> {
        let mut p = Self::zero(m);
        for (i, &c) in coeffs.iter().enumerate() {
            let slot = &mut p.coeffs[i % m];
            *slot = slot
                .checked_add(c)
                .ok_or(Error::Overflow("cyclic coefficients"))?;
        }
        Ok(p)
    }

    pub fn modulus(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i128 {
        self.coeffs[i % self.modulus()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// All coefficients equal, i.e. a multiple of `1 + x + ... + x^(m-1)`.
    pub fn is_constant_vector(&self) -> bool {
        self.coeffs.windows(2).all(|w| w[0] == w[1])
    }

    /// Nonzero terms as `(exponent, coefficient)`, exponent ascending.
    pub fn terms(&self) -> Vec<(usize, i128)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.modulus() != other.modulus() {
            return Err(Error::ModulusMismatch {
                left: self.modulus(),
                right: other.modulus(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        self.zip_with(other, i128::checked_add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        self.zip_with(other, i128::checked_sub)
    }

    fn zip_with(&self, other: &Self, f: fn(i128, i128) -> Option<i128>) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&x, &y)| f(x, y).ok_or(Error::Overflow("cyclic coefficients")))
            .collect::<Result<_>>()?;
        Ok(CyclicPoly { coeffs })
    }

    /// Multiplies by `x^e - 1` in place; `O(m)`.
    pub fn mul_binomial(&mut self, e: i128) -> Result<()> {
        let m = self.modulus();
        let e = reduce(e, m as u64) as usize;
        let old = self.coeffs.clone();
        for (j, slot) in self.coeffs.iter_mut().enumerate() {
            let shifted = old[(j + m - e) % m];
            *slot = shifted
                .checked_sub(old[j])
                .ok_or(Error::Overflow("cyclic coefficients"))?;
        }
        Ok(())
    }
}

impl fmt::Display for CyclicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms().into_iter().map(|(e, c)| (e, c.to_string())))
    }
}

fn write_terms<I: Iterator<Item = (usize, String)>>(
    f: &mut fmt::Formatter<'_>,
    terms: I,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let (neg, mag) = match c.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, c),
        };
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        match (e, mag.as_str()) {
            (0, _) => f.write_str(&mag)?,
            (1, "1") => f.write_str("x")?,
            (1, _) => write!(f, "{mag}x")?,
            (_, "1") => write!(f, "x^{e}")?,
            _ => write!(f, "{mag}x^{e}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Schoolbook product in `Z[x]/(x^m - 1)`.
pub fn cyclic_mul(p: &CyclicPoly, q: &CyclicPoly) -> Result<CyclicPoly> {
    p.check_same(q)?;
    let m = p.modulus();
    let mut out = vec![0i128; m];
    for (i, &a) in p.coeffs.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in q.coeffs.iter().enumerate() {
            if b == 0 {
                continue;
            }
            let slot = &mut out[(i + j) % m];
            let prod = a.checked_mul(b).ok_or(Error::Overflow("cyclic product"))?;
            *slot = slot
                .checked_add(prod)
                .ok_or(Error::Overflow("cyclic product"))?;
        }
    }
    Ok(CyclicPoly { coeffs: out })
}

/// `prod_i (x^(e_i mod m) - 1)` in `Z[x]/(x^m - 1)`.
pub fn binomial_product(exponents: &[i128], m: u64) -> Result<CyclicPoly> {
    let mut p = CyclicPoly::one(m as usize);
    for &e in exponents {
        p.mul_binomial(e)?;
    }
    Ok(p)
}

/// `sum_{t in T} x^(t mod m)`.
pub fn indicator_poly<I: IntoIterator<Item = i128>>(set: I, m: u64) -> CyclicPoly {
    let mut p = CyclicPoly::zero(m as usize);
    for t in set {
        p.coeffs[reduce(t, m) as usize] += 1;
    }
    p
}

/// Whether a finite set is equidistributed mod `m`: its indicator polynomial
/// has all coefficients equal.
pub fn equidist_set_test<I: IntoIterator<Item = i128>>(set: I, m: u64) -> bool {
    indicator_poly(set, m).is_constant_vector()
}

/// The same test in product form: `(x - 1) * sum x^t ≡ 0 (mod x^m - 1)`.
pub fn equidist_set_test_product<I: IntoIterator<Item = i128>>(set: I, m: u64) -> bool {
    let mut p = indicator_poly(set, m);
    p.mul_binomial(1).expect("counts fit in i128");
    p.is_zero()
}

/// Dense integer polynomial with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::from(-1);
        c[n] += 1;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        IntPoly::new(out)
    }

    /// Quotient and remainder on division by a monic polynomial.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        assert!(divisor.coeffs[dd].is_one(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (IntPoly::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let lead = std::mem::take(&mut rem[i]);
            if lead.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs[..dd].iter().enumerate() {
                if !c.is_zero() {
                    rem[i - dd + j] -= &lead * c;
                }
            }
            quot[i - dd] = lead;
        }
        rem.truncate(dd);
        (IntPoly::new(quot), IntPoly::new(rem))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, c.to_string()))
            .collect();
        write_terms(f, terms.into_iter())
    }
}

type Memo = RwLock<HashMap<u64, Arc<IntPoly>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// The `n`-th cyclotomic polynomial, `(x^n - 1) / prod_{d | n, d < n} Phi_d`,
/// memoized across calls.
pub fn cyclotomic_polynomial(n: u64) -> Arc<IntPoly> {
    assert!(n >= 1, "cyclotomic_polynomial: n must be positive");
    if let Some(p) = memo().read().expect("memo lock").get(&n) {
        return Arc::clone(p);
    }
    let mut p = IntPoly::x_pow_minus_one(n as usize);
    for d in factorize(n).divisors() {
        if d == n {
            continue;
        }
        let (q, r) = p.div_rem_monic(&cyclotomic_polynomial(d));
        assert!(r.is_zero(), "Phi_{d} must divide x^{n} - 1 exactly");
        p = q;
    }
    debug_assert_eq!(p.degree(), Some(euler_phi(n) as usize));
    let p = Arc::new(p);
    memo()
        .write()
        .expect("memo lock")
        .entry(n)
        .or_insert_with(|| Arc::clone(&p))
        .clone()
}

/// An element of `Z[zeta_n] = Z[x]/Phi_n(x)`, stored as its reduced
/// representative of degree below `phi(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicElement {
    conductor: u64,
    coeffs: Vec<BigInt>,
}

impl CyclotomicElement {
    pub fn one(n: u64) -> Self {
        reduce_mod_cyclotomic(&IntPoly::one(), n)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Exactly `phi(n)` coefficients.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.conductor)
    }

    pub fn to_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(self.conductor);
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = cyclotomic_mul(&acc, &sq).expect("same conductor");
            }
            e >>= 1;
            if e > 0 {
                sq = cyclotomic_mul(&sq, &sq).expect("same conductor");
            }
        }
        acc
    }

    pub fn neg(&self) -> Self {
        CyclotomicElement {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod Phi_{})", self.to_poly(), self.conductor)
    }
}

/// Remainder of `p` on division by the monic `Phi_n`.
pub fn reduce_mod_cyclotomic(p: &IntPoly, n: u64) -> CyclotomicElement {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.degree().expect("nonzero");
    let (_, r) = p.div_rem_monic(&phi);
    let mut coeffs = r.coeffs;
    coeffs.resize(deg, BigInt::zero());
    CyclotomicElement {
        conductor: n,
        coeffs,
    }
}

pub fn cyclotomic_mul(u: &CyclotomicElement, v: &CyclotomicElement) -> Result<CyclotomicElement> {
    if u.conductor != v.conductor {
        return Err(Error::ConductorMismatch {
            left: u.conductor,
            right: v.conductor,
        });
    }
    Ok(reduce_mod_cyclotomic(
        &u.to_poly().mul(&v.to_poly()),
        u.conductor,
    ))
}

/// `1 - zeta_n^e` as an element of `Z[zeta_n]`.
pub fn one_minus_zeta_power(e: i128, n: u64) -> CyclotomicElement {
    let e = reduce(e, n) as usize;
    let mut c = vec![BigInt::zero(); e + 1];
    c[0] += 1;
    c[e] -= 1;
    reduce_mod_cyclotomic(&IntPoly::new(c), n)
}

/// `prod (1 - zeta_n^e)^mult` over `(e, mult)` pairs.
pub fn one_minus_zeta_power_product(exps: &[(i128, u64)], n: u64) -> CyclotomicElement {
    assert!(n >= 1, "conductor must be positive");
    exps.iter()
        .fold(CyclotomicElement::one(n), |acc, &(e, mult)| {
            let factor = one_minus_zeta_power(e, n).pow(mult);
            cyclotomic_mul(&acc, &factor).expect("same conductor")
        })
}

/// `Phi_n(1)`, handy as an independent check on the construction.
pub fn cyclotomic_value_at_one(n: u64) -> BigInt {
    cyclotomic_polynomial(n).eval(&BigInt::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn cyclic_mul_examples() {
        let m = 9;
        let x = CyclicPoly::monomial(1, 1, m);
        let y = CyclicPoly::monomial(m as i128 - 1, 1, m);
        assert_eq!(cyclic_mul(&x, &y).unwrap(), CyclicPoly::one(m));

        let xm1 = CyclicPoly::from_coeffs(&[-1, 1], m).unwrap();
        let c = CyclicPoly::from_coeffs(&[1; 9], m).unwrap();
        assert!(cyclic_mul(&xm1, &c).unwrap().is_zero());

        let l = binomial_product(&[1, 2, 4], 7).unwrap();
        let r = binomial_product(&[4, 1, 2], 7).unwrap();
        assert_eq!(l, r);

        assert!(matches!(
            cyclic_mul(&CyclicPoly::one(3), &CyclicPoly::one(4)),
            Err(Error::ModulusMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn binomial_product_examples() {
        assert_eq!(
            binomial_product(&[1, 1, 1, 1], 4).unwrap(),
            binomial_product(&[3, 3, 3, 3], 4).unwrap()
        );
        assert_eq!(binomial_product(&[], 5).unwrap(), CyclicPoly::one(5));
        assert_eq!(
            binomial_product(&[891, 1089], 10).unwrap(),
            binomial_product(&[1, 9], 10).unwrap()
        );
        // mul_binomial agrees with general multiplication
        let mut p = binomial_product(&[2, 5], 11).unwrap();
        let q = cyclic_mul(&p, &CyclicPoly::from_coeffs(&[-1, 0, 0, 1], 11).unwrap()).unwrap();
        p.mul_binomial(3).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn indicator_examples() {
        assert_eq!(indicator_poly([1, 2, 4, 7], 2).coeffs(), &[2, 2]);
        assert!(indicator_poly(std::iter::empty(), 6).is_zero());
        assert_eq!(indicator_poly([1, 2, 3, 6, 7, 11], 3).coeffs(), &[2, 2, 2]);
        assert!(equidist_set_test([1, 2, 4, 7], 2));
        assert!(!equidist_set_test([1, 2, 3, 6, 7, 11], 2));
        assert!(equidist_set_test([5, 17, 2], 1));
        assert!(equidist_set_test_product([1, 2, 4, 7], 2));
        assert!(!equidist_set_test_product([1, 2, 3, 6, 7, 11], 2));
    }

    #[test]
    fn display() {
        let p = CyclicPoly::from_coeffs(&[0, 1, 0, -1, 2], 5).unwrap();
        assert_eq!(p.to_string(), "x - x^3 + 2x^4");
        assert_eq!(CyclicPoly::zero(3).to_string(), "0");
        assert_eq!(cyclotomic_polynomial(4).to_string(), "x^2 + 1");
        assert_eq!(cyclotomic_polynomial(1).to_string(), "x - 1");
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(*cyclotomic_polynomial(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), IntPoly::from_i64(&[1, -1, 1]));
        let p39 = cyclotomic_polynomial(39);
        assert_eq!(p39.degree(), Some(24));
        let prod = [1u64, 3, 13, 39]
            .iter()
            .fold(IntPoly::one(), |acc, &d| acc.mul(&cyclotomic_polynomial(d)));
        assert_eq!(prod, IntPoly::x_pow_minus_one(39));
        // Phi_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105)
            .coeffs()
            .iter()
            .any(|c| *c == big(-2)));
    }

    #[test]
    fn reduction_examples() {
        assert!(reduce_mod_cyclotomic(&IntPoly::zero(), 12)
            .coeffs()
            .iter()
            .all(Zero::is_zero));
        let phi = cyclotomic_polynomial(12);
        assert!(reduce_mod_cyclotomic(&phi, 12)
            .coeffs()
            .iter()
            .all(Zero::is_zero));
        // x^n ≡ 1
        for n in [5u64, 12, 15, 39] {
            let mut c = vec![BigInt::zero(); n as usize + 1];
            c[n as usize] = BigInt::one();
            assert!(reduce_mod_cyclotomic(&IntPoly::new(c), n).is_one());
        }
        // p = q * Phi + r reconstruction
        let p = IntPoly::from_i64(&[3, -1, 4, 1, -5, 9, 2, -6, 5, 3, -5, 8, 9, 7]);
        let phi = cyclotomic_polynomial(9);
        let (q, r) = p.div_rem_monic(&phi);
        assert_eq!(q.mul(&phi).sub(&p.sub(&r)), IntPoly::zero());
        assert_eq!(reduce_mod_cyclotomic(&p, 9).to_poly(), r);
    }

    #[test]
    fn cyclotomic_mul_examples() {
        let u = one_minus_zeta_power(2, 7);
        assert_eq!(cyclotomic_mul(&u, &CyclotomicElement::one(7)).unwrap(), u);
        let v = cyclotomic_mul(&one_minus_zeta_power(1, 4), &one_minus_zeta_power(3, 4)).unwrap();
        assert_eq!(v.to_poly(), IntPoly::from_i64(&[2]));
        let norm = one_minus_zeta_power_product(&[(1, 1), (2, 1), (3, 1), (4, 1)], 5);
        assert_eq!(norm.to_poly(), IntPoly::from_i64(&[5]));
        assert!(matches!(
            cyclotomic_mul(&CyclotomicElement::one(5), &CyclotomicElement::one(7)),
            Err(Error::ConductorMismatch { .. })
        ));
        assert!(one_minus_zeta_power_product(&[], 9).is_one());
    }

    #[test]
    fn power_matches_repeated_product() {
        let u = one_minus_zeta_power(4, 21);
        let mut acc = CyclotomicElement::one(21);
        for e in 0..12 {
            assert_eq!(u.pow(e), acc);
            acc = cyclotomic_mul(&acc, &u).unwrap();
        }
    }
}
