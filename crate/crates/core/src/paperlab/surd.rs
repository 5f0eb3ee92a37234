//! Exact arithmetic in `ℤ[√d]` and the closed-form counting formulas.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `a + b√d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurdInt {
    pub a: BigInt,
    pub b: BigInt,
    pub d: u32,
}

impl SurdInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, d: u32) -> Self {
        SurdInt { a: a.into(), b: b.into(), d }
    }

    pub fn integer(a: impl Into<BigInt>, d: u32) -> Self {
        SurdInt::new(a, 0, d)
    }

    /// `√d`.
    pub fn root(d: u32) -> Self {
        SurdInt::new(0, 1, d)
    }

    pub fn conj(&self) -> Self {
        SurdInt { a: self.a.clone(), b: -&self.b, d: self.d }
    }

    /// `a² − d b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - BigInt::from(self.d) * &self.b * &self.b
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = SurdInt::integer(1, self.d);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Exact division by an integer.
    pub fn div_int(&self, k: &BigInt) -> Result<Self> {
        if k.is_zero() || !(&self.a % k).is_zero() || !(&self.b % k).is_zero() {
            return Err(Error::NonExactDivision(format!("({self}) / {k}")));
        }
        Ok(SurdInt { a: &self.a / k, b: &self.b / k, d: self.d })
    }

    /// Exact division by `√d`: `(a + b√d)/√d = b + (a/d)√d`.
    pub fn div_root(&self) -> Result<Self> {
        let d = BigInt::from(self.d);
        if !(&self.a % &d).is_zero() {
            return Err(Error::NonExactDivision(format!("({self}) / √{}", self.d)));
        }
        Ok(SurdInt { a: self.b.clone(), b: &self.a / d, d: self.d })
    }

    pub fn to_integer(&self) -> Result<BigInt> {
        if self.b.is_zero() {
            Ok(self.a.clone())
        } else {
            Err(Error::NonExactDivision(format!("{self} is not an integer")))
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.d, other.d, "mixing radicands √{} and √{}", self.d, other.d);
    }
}

impl fmt::Display for SurdInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{} {sign} {}√{}", self.a, self.b.abs(), self.d)
    }
}

impl Add for &SurdInt {
    type Output = SurdInt;
    fn add(self, o: &SurdInt) -> SurdInt {
        self.check(o);
        SurdInt { a: &self.a + &o.a, b: &self.b + &o.b, d: self.d }
    }
}

impl Sub for &SurdInt {
    type Output = SurdInt;
    fn sub(self, o: &SurdInt) -> SurdInt {
        self.check(o);
        SurdInt { a: &self.a - &o.a, b: &self.b - &o.b, d: self.d }
    }
}

impl Mul for &SurdInt {
    type Output = SurdInt;
    fn mul(self, o: &SurdInt) -> SurdInt {
        self.check(o);
        let d = BigInt::from(self.d);
        SurdInt { a: &self.a * &o.a + d * &self.b * &o.b, b: &self.a * &o.b + &self.b * &o.a, d: self.d }
    }
}

impl Neg for &SurdInt {
    type Output = SurdInt;
    fn neg(self) -> SurdInt {
        SurdInt { a: -&self.a, b: -&self.b, d: self.d }
    }
}

/// The six counting formulas for `A_n²` and `D_n²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    /// (1) `|tilt A_n²| = 2`, `n ≥ 2`.
    TiltA,
    /// (2) `((1+√5)^{n+1} − (1−√5)^{n+1}) / (√5·2^{n+1})`.
    TauTiltA,
    /// (3) `((1+√2)^n − (1−√2)^n) / (2√2)`.
    STauTiltA,
    /// (4) `|tilt D_n²| = 5`.
    TiltD,
    /// (5) `((2√5−1)(1+√5)^{n−1} + (2√5+1)(1−√5)^{n−1}) / (√5·2^{n−1})`.
    TauTiltD,
    /// (6) `((3√2−1)(1+√2)^{n−1} + (3√2+1)(1−√2)^{n−1}) / √2`.
    STauTiltD,
}

impl Formula {
    pub const ALL: [Formula; 6] =
        [Formula::TiltA, Formula::TauTiltA, Formula::STauTiltA, Formula::TiltD, Formula::TauTiltD, Formula::STauTiltD];

    /// Item number in the list of formulas, 1–6.
    pub fn number(self) -> usize {
        Formula::ALL.iter().position(|&f| f == self).expect("listed") + 1
    }

    pub fn from_number(k: usize) -> Result<Self> {
        Formula::ALL.get(k.wrapping_sub(1)).copied().ok_or_else(|| Error::OutOfRange(format!("formula ({k})")))
    }

    /// Smallest `n` the formula is stated for.
    pub fn min_n(self) -> u32 {
        match self {
            Formula::TiltA => 2,
            Formula::TauTiltA | Formula::STauTiltA => 1,
            Formula::TiltD | Formula::TauTiltD | Formula::STauTiltD => 4,
        }
    }
}

/// Evaluates a formula exactly.
pub fn closed_form(formula: Formula, n: u32) -> Result<BigInt> {
    if n < formula.min_n() {
        return Err(Error::OutOfRange(format!(
            "formula ({}) needs n ≥ {}, got {n}",
            formula.number(),
            formula.min_n()
        )));
    }
    let two_pow = |k: u32| BigInt::one() << k as usize;
    let value = match formula {
        Formula::TiltA => SurdInt::integer(2, 1),
        Formula::TiltD => SurdInt::integer(5, 1),
        Formula::TauTiltA => {
            let (p, m) = (SurdInt::new(1, 1, 5), SurdInt::new(1, -1, 5));
            let num = &p.pow(n + 1) - &m.pow(n + 1);
            num.div_root()?.div_int(&two_pow(n + 1))?
        }
        Formula::STauTiltA => {
            let (p, m) = (SurdInt::new(1, 1, 2), SurdInt::new(1, -1, 2));
            let num = &p.pow(n) - &m.pow(n);
            num.div_root()?.div_int(&BigInt::from(2))?
        }
        Formula::TauTiltD => {
            let (p, m) = (SurdInt::new(1, 1, 5), SurdInt::new(1, -1, 5));
            let (c, cc) = (SurdInt::new(-1, 2, 5), SurdInt::new(1, 2, 5));
            let num = &(&c * &p.pow(n - 1)) + &(&cc * &m.pow(n - 1));
            num.div_root()?.div_int(&two_pow(n - 1))?
        }
        Formula::STauTiltD => {
            let (p, m) = (SurdInt::new(1, 1, 2), SurdInt::new(1, -1, 2));
            let (c, cc) = (SurdInt::new(-1, 3, 2), SurdInt::new(1, 3, 2));
            let num = &(&c * &p.pow(n - 1)) + &(&cc * &m.pow(n - 1));
            num.div_root()?
        }
    };
    value.to_integer()
}
