//! Numerical semigroups and their Apéry tables.
//!
//! A semigroup is stored as its generators plus the dense Apéry table relative
//! to a fixed nonzero element `t` (entry `j` is the smallest element of `S`
//! congruent to `j` mod `t`). Gaps, genus, the Frobenius number and residue
//! histograms of the gap set are all read off that table without enumerating
//! the semigroup.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::modmath::gcd;

/// Default bound on the length of an Apéry table.
pub const DEFAULT_APERY_CAP: u64 = 10_000_000;

/// Parameters `(a, b, k)` of the geometric semigroup `<a^k, a^(k-1) b, ..., b^k>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GeometricParams {
    a: u64,
    b: u64,
    k: u32,
}

impl GeometricParams {
    /// Validates `a, b > 1`, `k >= 1`, `gcd(a, b) = 1`, and that every
    /// generator fits in a `u64`.
    pub fn new(a: u64, b: u64, k: u32) -> Result<Self> {
        if a <= 1 {
            return Err(invalid("a", format!("must be > 1, got {a}")));
        }
        if b <= 1 {
            return Err(invalid("b", format!("must be > 1, got {b}")));
        }
        if k == 0 {
            return Err(invalid("k", "must be >= 1".to_string()));
        }
        if gcd(a, b) != 1 {
            return Err(Error::NotCoprime {
                gens: vec![a, b],
                gcd: gcd(a, b),
            });
        }
        let p = GeometricParams { a, b, k };
        for i in 0..=k {
            p.try_generator(i)
                .ok_or(Error::Overflow("geometric generator"))?;
        }
        Ok(p)
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The same semigroup with the roles of `a` and `b` exchanged.
    pub fn swapped(&self) -> Self {
        GeometricParams {
            a: self.b,
            b: self.a,
            k: self.k,
        }
    }

    fn try_generator(&self, i: u32) -> Option<u64> {
        self.a
            .checked_pow(self.k - i)?
            .checked_mul(self.b.checked_pow(i)?)
    }

    /// `g_i = a^(k-i) b^i`.
    pub fn generator(&self, i: u32) -> u64 {
        assert!(i <= self.k);
        self.try_generator(i).expect("validated at construction")
    }

    /// `g_0, ..., g_k` in index order.
    pub fn generators(&self) -> Vec<u64> {
        (0..=self.k).map(|i| self.generator(i)).collect()
    }
}

fn invalid(name: &'static str, reason: String) -> Error {
    Error::InvalidParameter { name, reason }
}

/// A numerical semigroup with a dense Apéry table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    base: u64,
    apery: Vec<u64>,
}

/// Builds `<gens>` with the Apéry table relative to the smallest generator.
pub fn make_semigroup(gens: &[u64]) -> Result<NumericalSemigroup> {
    make_semigroup_with_cap(gens, DEFAULT_APERY_CAP)
}

pub fn make_semigroup_with_cap(gens: &[u64], cap: u64) -> Result<NumericalSemigroup> {
    let generators = normalize_generators(gens)?;
    let t = generators[0];
    let apery = shortest_path_apery(&generators, t, cap)?;
    Ok(NumericalSemigroup {
        generators,
        base: t,
        apery,
    })
}

fn normalize_generators(gens: &[u64]) -> Result<Vec<u64>> {
    if gens.is_empty() {
        return Err(invalid("gens", "empty generator list".to_string()));
    }
    if let Some(&z) = gens.iter().find(|&&g| g == 0) {
        return Err(invalid("gens", format!("generator {z} is not positive")));
    }
    let mut generators = gens.to_vec();
    generators.sort_unstable();
    generators.dedup();
    let g = generators.iter().fold(0, |acc, &x| gcd(acc, x));
    if g != 1 {
        return Err(Error::NotCoprime {
            gens: generators,
            gcd: g,
        });
    }
    Ok(generators)
}

/// Smallest element of `<gens>` in each residue class mod `t`, by Dijkstra on
/// the cycle of residues with arcs `j -> j + g` of weight `g`.
fn shortest_path_apery(gens: &[u64], t: u64, cap: u64) -> Result<Vec<u64>> {
    if t > cap {
        return Err(Error::CapExceeded {
            what: "Apéry table length",
            required: t as u128,
            cap: cap as u128,
        });
    }
    let n = t as usize;
    let mut dist = vec![u64::MAX; n];
    let mut done = vec![false; n];
    // Arc lengths reduced once; generators that are multiples of t are loops.
    let arcs: Vec<(usize, u64)> = gens
        .iter()
        .filter(|&&g| g % t != 0)
        .map(|&g| ((g % t) as usize, g))
        .collect();
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0u64, 0usize))]);
    while let Some(Reverse((d, j))) = heap.pop() {
        if done[j] {
            continue;
        }
        done[j] = true;
        for &(step, g) in &arcs {
            let mut next = j + step;
            if next >= n {
                next -= n;
            }
            let nd = d.checked_add(g).ok_or(Error::Overflow("Apéry table"))?;
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    debug_assert!(
        dist.iter().all(|&d| d != u64::MAX),
        "gcd 1 reaches every class"
    );
    Ok(dist)
}

/// Builds the geometric semigroup with its Apéry table relative to `g_0 = a^k`
/// realized as `{ sum_{i=1..k} g_i n_i : 0 <= n_i < a }`.
pub fn make_geometric(p: &GeometricParams) -> Result<NumericalSemigroup> {
    make_geometric_with_cap(p, DEFAULT_APERY_CAP)
}

pub fn make_geometric_with_cap(p: &GeometricParams, cap: u64) -> Result<NumericalSemigroup> {
    let g = p.generators();
    let g0 = g[0];
    if g0 > cap {
        return Err(Error::CapExceeded {
            what: "Apéry table length a^k",
            required: g0 as u128,
            cap: cap as u128,
        });
    }
    let k = p.k() as usize;
    let a = p.a();
    // Largest Apéry element is (a-1) * (g_1 + ... + g_k).
    let top: u128 = (a as u128 - 1) * g[1..].iter().map(|&x| x as u128).sum::<u128>();
    if top > u64::MAX as u128 {
        return Err(Error::Overflow("geometric Apéry table"));
    }
    let steps: Vec<u64> = g[1..].iter().map(|&gi| gi % g0).collect();

    let mut apery = vec![u64::MAX; g0 as usize];
    let mut digits = vec![0u64; k];
    let mut sum = 0u64;
    let mut residue = 0u64;
    loop {
        debug_assert_eq!(
            apery[residue as usize],
            u64::MAX,
            "Apéry residues are distinct"
        );
        apery[residue as usize] = sum;
        // odometer increment over n_1..n_k, least significant digit first
        let mut i = 0;
        loop {
            if i == k {
                let generators = normalize_generators(&g)?;
                return Ok(NumericalSemigroup {
                    generators,
                    base: g0,
                    apery,
                });
            }
            if digits[i] + 1 < a {
                digits[i] += 1;
                sum += g[i + 1];
                residue = (residue + steps[i]) % g0;
                break;
            }
            sum -= (a - 1) * g[i + 1];
            residue =
                (residue + g0 - ((a - 1) as u128 * steps[i] as u128 % g0 as u128) as u64) % g0;
            digits[i] = 0;
            i += 1;
        }
    }
}

impl NumericalSemigroup {
    /// Sorted minimal-first list of the generators supplied (deduplicated).
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// The element `t` the Apéry table is taken relative to.
    pub fn apery_base(&self) -> u64 {
        self.base
    }

    /// Smallest generator.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Apéry table indexed by residue mod `apery_base()`.
    pub fn apery_table(&self) -> &[u64] {
        &self.apery
    }

    /// The Apéry set as a sorted list.
    pub fn apery_set(&self) -> Vec<u64> {
        let mut v = self.apery.clone();
        v.sort_unstable();
        v
    }

    /// Apéry table relative to another nonzero element `t` of the semigroup.
    pub fn apery_relative_to(&self, t: u64, cap: u64) -> Result<Vec<u64>> {
        if t == 0 || !self.contains(t as i128) {
            return Err(invalid(
                "rel",
                format!("{t} is not a nonzero element of the semigroup"),
            ));
        }
        shortest_path_apery(&self.generators, t, cap)
    }

    pub fn contains(&self, n: i128) -> bool {
        if n < 0 {
            return false;
        }
        let t = self.base as i128;
        self.apery[(n % t) as usize] as i128 <= n
    }

    pub fn is_whole(&self) -> bool {
        self.genus() == 0
    }

    /// Number of gaps: the sum of `floor(w / t)` over the Apéry table.
    pub fn genus(&self) -> u64 {
        let t = self.base;
        self.apery.iter().map(|&w| w / t).sum()
    }

    /// Largest gap.
    pub fn frobenius(&self) -> Result<u64> {
        let max = *self.apery.iter().max().expect("table is non-empty");
        if max < self.base {
            return Err(Error::NoGaps);
        }
        Ok(max - self.base)
    }

    /// All gaps, sorted ascending.
    pub fn gaps(&self) -> GapSet {
        let t = self.base;
        let mut gaps = Vec::with_capacity(self.genus() as usize);
        for &w in &self.apery {
            let mut x = w;
            while x >= t {
                x -= t;
                gaps.push(x);
            }
        }
        gaps.sort_unstable();
        GapSet { gaps }
    }

    /// Counts of gaps in each residue class mod `m`.
    ///
    /// Each Apéry element `w` contributes the progression `w - t, w - 2t, ...`
    /// down to its class representative; its residues mod `m` cycle with period
    /// `m / gcd(t, m)`, so one period plus a remainder is scanned.
    pub fn gap_residue_histogram(&self, m: u64) -> ResidueHistogram {
        assert!(m >= 1, "modulus must be positive");
        let t = self.base;
        let mut counts = vec![0u64; m as usize];
        let step = t % m;
        let period = m / gcd(step, m);
        for &w in &self.apery {
            let q = w / t;
            if q == 0 {
                continue;
            }
            let full = q / period;
            let rem = q % period;
            let scan = q.min(period);
            // residue of w - t
            let mut c = (w - t) % m;
            for i in 0..scan {
                counts[c as usize] += full + u64::from(i < rem);
                c = if c >= step { c - step } else { c + m - step };
            }
        }
        ResidueHistogram { modulus: m, counts }
    }
}

/// Sorted gaps of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapSet {
    gaps: Vec<u64>,
}

impl GapSet {
    pub fn as_slice(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    pub fn frobenius(&self) -> Option<u64> {
        self.gaps.last().copied()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.gaps
    }
}

/// Counts of a finite set in each residue class mod `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueHistogram {
    modulus: u64,
    counts: Vec<u64>,
}

impl ResidueHistogram {
    pub fn from_values<I: IntoIterator<Item = u64>>(values: I, m: u64) -> Self {
        let mut counts = vec![0u64; m as usize];
        for v in values {
            counts[(v % m) as usize] += 1;
        }
        ResidueHistogram { modulus: m, counts }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn is_equidistributed(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] == w[1])
    }
}

/// Genus of `<Geom(a, b; k)>` from the closed form
/// `((a-1) b^(k+1) - (b-1) a^(k+1) + (b-a)) / (2 (b-a))`.
pub fn genus_geometric_formula(p: &GeometricParams) -> BigUint {
    let (a, b) = (BigInt::from(p.a()), BigInt::from(p.b()));
    let k = p.k();
    let num = (&a - 1u32) * b.pow(k + 1) - (&b - 1u32) * a.pow(k + 1) + (&b - &a);
    let den = BigInt::from(2) * (&b - &a);
    exact_nonneg_quotient(num, den, "genus formula")
}

/// Number of gaps of `<Geom(a, b; k)>` divisible by `d`, for `d | a`:
/// `((a-1) b^(k+1) - (b-1) a^(k+1) + (b-a) d) / (2 (b-a) d) + b^k (1-d) / (2d)`.
pub fn gaps_divisible_by_formula(p: &GeometricParams, d: u64) -> Result<BigUint> {
    if d == 0 || !p.a().is_multiple_of(d) {
        return Err(Error::NotADivisor { d, a: p.a() });
    }
    let (a, b, d) = (BigInt::from(p.a()), BigInt::from(p.b()), BigInt::from(d));
    let k = p.k();
    let bma = &b - &a;
    // Put both terms over the common denominator 2 (b-a) d.
    let num = (&a - 1u32) * b.pow(k + 1) - (&b - 1u32) * a.pow(k + 1)
        + &bma * &d
        + b.pow(k) * (BigInt::from(1) - &d) * &bma;
    let den = BigInt::from(2) * bma * d;
    Ok(exact_nonneg_quotient(num, den, "divisible-gap formula"))
}

fn exact_nonneg_quotient(num: BigInt, den: BigInt, what: &str) -> BigUint {
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "{what}: division is not exact");
    assert!(!q.is_negative(), "{what}: negative count");
    q.to_biguint().expect("non-negative")
}

/// Converts a formula result to `u64` when it fits.
pub fn to_u64(x: &BigUint) -> Option<u64> {
    x.to_u64()
}
