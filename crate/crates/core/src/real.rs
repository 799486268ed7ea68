//! Real-valued quantities: a tolerance-tagged float for reporting, plus exact
//! decision procedures for the irrational values that actually occur (sums of
//! rational multiples of square roots, and roots of generalized binomials).

use alloc::collections::BTreeMap;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::rational::{gen_binom, ExactRational};

/// Absolute tolerance applied to floating sums and slacks.
pub const ABS_TOL: f64 = 1e-9;
/// Floating slacks below this are re-examined exactly.
pub const NEAR_TIE: f64 = 1e-6;

/// A finite float carrying the absolute tolerance it is compared under.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RealValue {
    pub value: f64,
    pub tolerance: f64,
}

impl RealValue {
    pub fn new(value: f64) -> Self {
        debug_assert!(value.is_finite(), "real values must be finite");
        RealValue { value, tolerance: ABS_TOL }
    }
}

impl fmt::Display for RealValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.9}", self.value)
    }
}

/// Largest squarefree divisor split: `k = s^2 * r` with `r` squarefree.
pub fn squarefree_split(k: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut r = 1u64;
    let mut rest = k;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            r *= p;
        }
        p += 1;
    }
    (s, r * rest)
}

/// A finite sum `sum_r c_r * sqrt(r)` over distinct squarefree radicands `r`.
///
/// Square roots of distinct squarefree integers are linearly independent over
/// the rationals, so equality is decided coefficient-wise; strict comparisons
/// are decided by interval refinement, which terminates when the values differ.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurdSum {
    terms: BTreeMap<u64, ExactRational>,
}

impl SurdSum {
    pub fn zero() -> Self {
        SurdSum::default()
    }

    pub fn rational(c: ExactRational) -> Self {
        let mut s = SurdSum::zero();
        s.add_term(c, 1);
        s
    }

    /// Adds `c * sqrt(k)`.
    pub fn add_term(&mut self, c: ExactRational, k: u64) {
        if c.is_zero() || k == 0 {
            return;
        }
        let (sq, r) = squarefree_split(k);
        let c = c * ExactRational::from(sq);
        let entry = self.terms.entry(r).or_insert_with(ExactRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&r);
        }
    }

    pub fn add(&mut self, other: &SurdSum) {
        for (&r, c) in &other.terms {
            self.add_term(c.clone(), r);
        }
    }

    pub fn scaled(&self, factor: &ExactRational) -> SurdSum {
        let mut out = SurdSum::zero();
        for (&r, c) in &self.terms {
            out.add_term(c * factor, r);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when it is rational.
    pub fn is_rational(&self) -> Option<ExactRational> {
        match self.terms.len() {
            0 => Some(ExactRational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(|(&r, c)| c.to_f64() * libm::sqrt(r as f64)).sum()
    }

    /// `(radicand, coefficient)` pairs in increasing radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &ExactRational)> {
        self.terms.iter().map(|(&r, c)| (r, c))
    }

    /// Rational enclosure `[lo, hi]` using square roots to `bits` binary places.
    fn enclosure(&self, bits: u32) -> (ExactRational, ExactRational) {
        let scale = BigInt::one() << bits;
        let mut lo = ExactRational::zero();
        let mut hi = ExactRational::zero();
        for (&r, c) in &self.terms {
            let (a, b) = if r == 1 {
                (ExactRational::one(), ExactRational::one())
            } else {
                let f = (BigInt::from(r) << (2 * bits)).sqrt();
                (
                    ExactRational::from_bigs(f.clone(), scale.clone()),
                    ExactRational::from_bigs(f + 1, scale.clone()),
                )
            };
            if c.is_negative() {
                lo += c * &b;
                hi += c * &a;
            } else {
                lo += c * &a;
                hi += c * &b;
            }
        }
        (lo, hi)
    }

    /// Exact comparison of two surd sums.
    pub fn cmp_exact(&self, other: &SurdSum) -> Ordering {
        let mut diff = self.clone();
        diff.add(&other.scaled(&ExactRational::from_integer(-1)));
        if diff.is_zero() {
            return Ordering::Equal;
        }
        let mut bits = 64;
        loop {
            let (lo, hi) = diff.enclosure(bits);
            if lo > ExactRational::zero() {
                return Ordering::Greater;
            }
            if hi < ExactRational::zero() {
                return Ordering::Less;
            }
            bits *= 2;
        }
    }
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&r, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match r {
                1 => write!(f, "{c}")?,
                _ => write!(f, "{c}*sqrt({r})")?,
            }
        }
        Ok(())
    }
}

/// Enclosure of the unique root `y >= k - 1` of `gen_binom(y, k) = d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBracket {
    pub lo: ExactRational,
    pub hi: ExactRational,
}

impl RootBracket {
    pub fn exact(v: ExactRational) -> Self {
        RootBracket { lo: v.clone(), hi: v }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint_f64(&self) -> f64 {
        (self.lo.to_f64() + self.hi.to_f64()) / 2.0
    }

    pub fn shift(&self, by: &ExactRational) -> Self {
        RootBracket { lo: &self.lo + by, hi: &self.hi + by }
    }

    /// Componentwise maximum: encloses `max(a, b)`.
    pub fn max(&self, other: &RootBracket) -> RootBracket {
        RootBracket {
            lo: (&self.lo).max(&other.lo).clone(),
            hi: (&self.hi).max(&other.hi).clone(),
        }
    }
}

/// Root of `gen_binom(y, k) = d` on `y >= k - 1`, enclosed to width `2^-bits`.
///
/// The polynomial `y (y-1) ... (y-k+1) - d k!` is monic with integer
/// coefficients, so a rational root is an integer; integer roots are found
/// exactly, all others are bracketed by bisection.
pub fn bracket_gen_binom_root(d: u64, k: u64, bits: u32) -> RootBracket {
    if d == 0 || k == 0 {
        return RootBracket::exact(ExactRational::from_integer(k as i64 - 1));
    }
    let target = ExactRational::from(d);
    // integer search: binom(y, k) is increasing for y >= k - 1 and binom(k, k) = 1 <= d
    let mut y = k;
    loop {
        match gen_binom(&ExactRational::from(y), k).cmp(&target) {
            Ordering::Equal => return RootBracket::exact(ExactRational::from(y)),
            Ordering::Greater => break,
            Ordering::Less => y += 1,
        }
    }
    let mut lo = ExactRational::from(y - 1);
    let mut hi = ExactRational::from(y);
    let width = ExactRational::from_bigs(BigInt::one(), BigInt::one() << bits);
    let two = ExactRational::from_integer(2);
    while &hi - &lo > width {
        let mid = (&lo + &hi) / two.clone();
        match gen_binom(&mid, k).cmp(&target) {
            Ordering::Equal => return RootBracket::exact(mid),
            Ordering::Less => lo = mid,
            Ordering::Greater => hi = mid,
        }
    }
    RootBracket { lo, hi }
}

/// An element `a + b sqrt(d)` of a real quadratic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadratic {
    pub a: ExactRational,
    pub b: ExactRational,
    pub d: u64,
}

impl Quadratic {
    pub fn rational(a: ExactRational, d: u64) -> Self {
        Quadratic { a, b: ExactRational::zero(), d }
    }

    pub fn mul(&self, other: &Quadratic) -> Quadratic {
        debug_assert_eq!(self.d, other.d);
        let d = ExactRational::from(self.d);
        Quadratic {
            a: &self.a * &other.a + &(&self.b * &other.b) * &d,
            b: &self.a * &other.b + &self.b * &other.a,
            d: self.d,
        }
    }

    pub fn add_rational(&self, c: &ExactRational) -> Quadratic {
        Quadratic { a: &self.a + c, b: self.b.clone(), d: self.d }
    }

    pub fn scale(&self, c: &ExactRational) -> Quadratic {
        Quadratic { a: &self.a * c, b: &self.b * c, d: self.d }
    }

    pub fn to_surd(&self) -> SurdSum {
        let mut s = SurdSum::rational(self.a.clone());
        s.add_term(self.b.clone(), self.d);
        s
    }
}

/// The root `y >= 1` of `C(y, 2) = m`, namely `(1 + sqrt(1 + 8m)) / 2`.
pub fn binom2_root(m: u64) -> Quadratic {
    let half = ExactRational::new(1, 2);
    Quadratic { a: half.clone(), b: half, d: 1 + 8 * m }
}

/// `gen_binom(x, k)` evaluated exactly at a quadratic irrational.
pub fn gen_binom_quadratic(x: &Quadratic, k: u64) -> SurdSum {
    let cutoff = SurdSum::rational(ExactRational::from(k) - ExactRational::one());
    if x.to_surd().cmp_exact(&cutoff) == Ordering::Less {
        return SurdSum::zero();
    }
    let mut acc = Quadratic::rational(ExactRational::one(), x.d);
    for j in 0..k {
        acc = acc.mul(&x.add_rational(&ExactRational::from_integer(-(j as i64))));
    }
    acc.scale(&ExactRational::from_big(crate::rational::factorial(k)).recip()).to_surd()
}

/// `Some(r)` when `k = r^2`.
pub fn is_perfect_square(k: u64) -> Option<u64> {
    let r = BigInt::from(k).sqrt().to_u64()?;
    (r * r == k).then_some(r)
}
