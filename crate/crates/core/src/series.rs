//! Truncated power series with exact rational coefficients.
//!
//! A [`Series`] stores coefficients of `x^(offset + k)` for `k = 0..=order`.
//! The offset is an exact rational so that eta powers keep their
//! `x^(e/24)` factor; coefficients past `order` are unknown, not zero.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `n/d` (always with a denominator).
pub fn fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Formats a rational as `p` when integral, `p/q` otherwise.
pub fn exponent_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        fraction_string(r)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = |reason: &str| Error::Parse {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad("bad numerator"))?;
    let d: BigInt = d.trim().parse().map_err(|_| bad("bad denominator"))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    offset: Rational,
    coeffs: Vec<Rational>,
}

impl Series {
    /// Panics if `coeffs` is empty: a series always knows at least its
    /// leading coefficient.
    pub fn new(offset: Rational, coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        Series { offset, coeffs }
    }

    pub fn from_ints(offset: Rational, coeffs: &[i64]) -> Self {
        Series::new(offset, coeffs.iter().map(|&c| integer(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Series::new(Rational::zero(), vec![Rational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^(offset + k)`.
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn exponent(&self, k: usize) -> Rational {
        &self.offset + integer(k as i64)
    }

    pub fn with_offset(mut self, offset: Rational) -> Self {
        self.offset = offset;
        self
    }

    pub fn truncate(&self, order: usize) -> Series {
        let keep = order.min(self.order()) + 1;
        Series::new(self.offset.clone(), self.coeffs[..keep].to_vec())
    }

    fn combine(&self, other: &Series, negate: bool) -> Result<Series> {
        let gap = &other.offset - &self.offset;
        if !gap.is_integer() {
            return Err(Error::OffsetMismatch {
                left: exponent_string(&self.offset),
                right: exponent_string(&other.offset),
            });
        }
        let gap: i64 = gap.to_integer().try_into().expect("offset gap fits in i64");
        let (lo, lo_neg, hi, hi_neg, shift) = if gap >= 0 {
            (self, false, other, negate, gap as usize)
        } else {
            (other, negate, self, false, (-gap) as usize)
        };
        let top = lo.order().min(hi.order() + shift);
        let mut coeffs = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let mut c = if lo_neg {
                -lo.coeffs[k].clone()
            } else {
                lo.coeffs[k].clone()
            };
            if k >= shift {
                let h = &hi.coeffs[k - shift];
                if hi_neg {
                    c -= h;
                } else {
                    c += h;
                }
            }
            coeffs.push(c);
        }
        Ok(Series::new(lo.offset.clone(), coeffs))
    }

    /// Sum; the offsets must differ by an integer.
    pub fn add(&self, other: &Series) -> Result<Series> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.combine(other, true)
    }

    /// Cauchy product; offsets add.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Series::new(&self.offset + &other.offset, coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series::new(
            self.offset.clone(),
            self.coeffs.iter().map(|x| x * c).collect(),
        )
    }

    pub fn neg(&self) -> Series {
        Series::new(
            self.offset.clone(),
            self.coeffs.iter().map(|x| -x).collect(),
        )
    }

    /// Multiplicative inverse, offset negated.
    pub fn inverse(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &out[n - k];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(Series::new(-self.offset.clone(), out))
    }

    /// Integer power by repeated squaring; negative powers invert first.
    pub fn pow(&self, e: i64) -> Result<Series> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut result = Series::one(self.order()).with_offset(Rational::zero());
        let mut power = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&power);
            }
            k >>= 1;
            if k > 0 {
                power = power.mul(&power);
            }
        }
        Ok(result)
    }

    /// `exp(self)` for a series with offset 0 and zero constant term, via
    /// `n fₙ = Σ k gₖ f_{n−k}`.
    pub fn exp(&self) -> Result<Series> {
        if !self.offset.is_zero() || !self.coeffs[0].is_zero() {
            return Err(Error::NotInvertible);
        }
        let mut f: Vec<Rational> = vec![Rational::one()];
        for n in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * integer(k as i64) * &f[n - k];
                }
            }
            f.push(acc / integer(n as i64));
        }
        Ok(Series::new(Rational::zero(), f))
    }

    /// One line per coefficient: `exponent<TAB>numerator/denominator`,
    /// exponents ascending.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            writeln!(
                out,
                "{}\t{}",
                exponent_string(&self.exponent(k)),
                fraction_string(c)
            )
            .unwrap();
        }
        out
    }

    /// Inverse of [`Series::to_text`].
    pub fn parse_text(text: &str) -> Result<Series> {
        let mut offset = None;
        let mut coeffs = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (e, c) = line.split_once('\t').ok_or_else(|| Error::Parse {
                input: line.to_string(),
                reason: "expected exponent<TAB>coefficient".into(),
            })?;
            let e = parse_rational(e)?;
            let base = offset.get_or_insert_with(|| e.clone());
            if e != &*base + integer(coeffs.len() as i64) {
                return Err(Error::Parse {
                    input: line.to_string(),
                    reason: "exponents must increase by one".into(),
                });
            }
            coeffs.push(parse_rational(c)?);
        }
        let offset = offset.ok_or_else(|| Error::Parse {
            input: text.to_string(),
            reason: "empty series".into(),
        })?;
        Ok(Series::new(offset, coeffs))
    }
}

/// Multiplies integer coefficients in place by `(1 - x^k)^m`, `m ≥ 0`,
/// using the sparse binomial expansion of the factor.
fn mul_binomial_factor(coeffs: &mut [BigInt], k: usize, m: u64) {
    let order = coeffs.len() - 1;
    let terms = (order / k).min(m as usize);
    if terms == 0 {
        return;
    }
    // (-1)^j C(m, j) for j = 0..=terms
    let mut binom = Vec::with_capacity(terms + 1);
    let mut c = BigInt::one();
    binom.push(c.clone());
    for j in 1..=terms {
        c = -c * BigInt::from(m - j as u64 + 1) / BigInt::from(j as u64);
        binom.push(c.clone());
    }
    for n in (k..=order).rev() {
        let mut acc = BigInt::zero();
        for (j, b) in binom.iter().enumerate().skip(1) {
            if j * k > n {
                break;
            }
            acc += b * &coeffs[n - j * k];
        }
        coeffs[n] += acc;
    }
}

/// `∏_{k≥1} (1 - x^k)^m` through `x^order`, offset 0. Negative `m` inverts
/// the positive power.
pub fn power_product(m: i64, order: usize) -> Series {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::one();
    for k in 1..=order {
        mul_binomial_factor(&mut coeffs, k, m.unsigned_abs());
    }
    let s = Series::new(
        Rational::zero(),
        coeffs.into_iter().map(Rational::from_integer).collect(),
    );
    if m < 0 {
        s.inverse().expect("constant term is 1")
    } else {
        s
    }
}

/// `η(x)^e = x^(e/24) ∏ (1 - x^k)^e`.
pub fn eta_power(e: i64, order: usize) -> Series {
    power_product(e, order).with_offset(rational(e, 24))
}

/// `(x^a; x^a)_∞ = ∏_{j≥1} (1 - x^(aj))`.
pub fn pochhammer_inf(a: usize, order: usize) -> Series {
    assert!(a >= 1, "step must be positive");
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::one();
    let mut k = a;
    while k <= order {
        mul_binomial_factor(&mut coeffs, k, 1);
        k += a;
    }
    Series::new(
        Rational::zero(),
        coeffs.into_iter().map(Rational::from_integer).collect(),
    )
}

/// `Σ_{k≥1} x^k / (k (1 - x^k))`, the logarithm of `∏ 1/(1 - x^k)`.
pub fn lambert_log(order: usize) -> Series {
    let mut coeffs = vec![Rational::zero(); order + 1];
    for k in 1..=order {
        let w = rational(1, k as i64);
        for n in (k..=order).step_by(k) {
            coeffs[n] += &w;
        }
    }
    Series::new(Rational::zero(), coeffs)
}

/// `∏ (1 - x^k)^e` computed as `exp(-e · lambert_log)`.
pub fn exp_cross_check(e: i64, order: usize) -> Series {
    lambert_log(order)
        .scale(&integer(-e))
        .exp()
        .expect("lambert log has zero constant term")
}

/// Default sample points for `count` evaluations: consecutive integers
/// centred on zero.
pub fn centered_samples(count: usize) -> Vec<i64> {
    let start = -((count / 2) as i64);
    (0..count as i64).map(|k| start + k).collect()
}

/// The first coefficient where two sampled series disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMismatch {
    pub param: i64,
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyIdentityReport {
    pub order: usize,
    pub degree_bound: usize,
    pub samples: Vec<i64>,
    pub mismatch: Option<PolyMismatch>,
}

impl PolyIdentityReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

pub(crate) fn map_samples<T, F>(samples: &[i64], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(i64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        samples.par_iter().map(|&s| f(s)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        samples.iter().map(|&s| f(s)).collect()
    }
}

fn first_difference(lhs: &Series, rhs: &Series, order: usize, param: i64) -> Option<PolyMismatch> {
    if lhs.offset() != rhs.offset() {
        return Some(PolyMismatch {
            param,
            index: 0,
            lhs: format!("offset {}", exponent_string(lhs.offset())),
            rhs: format!("offset {}", exponent_string(rhs.offset())),
        });
    }
    for k in 0..=order {
        let a = lhs.coeffs().get(k);
        let b = rhs.coeffs().get(k);
        if a.is_none() || a != b {
            let show =
                |c: Option<&Rational>| c.map(fraction_string).unwrap_or_else(|| "unknown".into());
            return Some(PolyMismatch {
                param,
                index: k,
                lhs: show(a),
                rhs: show(b),
            });
        }
    }
    None
}

/// Checks `lhs(t) = rhs(t)` coefficientwise through `x^order` as an identity
/// of polynomials in `t`: the coefficient of `x^m` is assumed to have degree
/// at most `degree_bound(m)`, so agreement at `max_m degree_bound(m) + 1`
/// integer points proves it.
pub fn poly_identity_check<L, R, D>(
    lhs: L,
    rhs: R,
    order: usize,
    degree_bound: D,
) -> PolyIdentityReport
where
    L: Fn(i64) -> Series + Sync + Send,
    R: Fn(i64) -> Series + Sync + Send,
    D: Fn(usize) -> usize,
{
    let bound = (0..=order).map(&degree_bound).max().unwrap_or(0);
    let samples = centered_samples(bound + 1);
    let mismatches = map_samples(&samples, |s| first_difference(&lhs(s), &rhs(s), order, s));
    PolyIdentityReport {
        order,
        degree_bound: bound,
        samples,
        mismatch: mismatches.into_iter().flatten().next(),
    }
}

/// Partition numbers through `order`, read from `∏ 1/(1 - x^k)`.
pub fn partition_numbers(order: usize) -> Vec<BigInt> {
    power_product(-1, order)
        .coeffs()
        .iter()
        .map(|c| c.to_integer())
        .collect()
}

/// Whether every coefficient is an integer.
pub fn is_integral(s: &Series) -> bool {
    s.coeffs().iter().all(|c| c.is_integer())
}

/// Largest absolute coefficient, handy for summaries.
pub fn max_abs_coeff(s: &Series) -> Rational {
    s.coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rational::zero)
}
