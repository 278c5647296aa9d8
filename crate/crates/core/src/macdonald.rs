//! Lattice sums for Macdonald's specialized identities in the affine types
//! A, B, C and BC, compared against powers of the eta function.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::series::{eta_power, exponent_string, integer, rational, Rational, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    BC,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::BC => "BC",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "BC" => Ok(Family::BC),
            _ => Err(Error::Parse {
                input: s.to_string(),
                reason: "family must be one of A, B, C, BC".into(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SumConstraint {
    None,
    SumZero,
    /// `Σ vᵢ ≡ value (mod modulus)`.
    SumCongruence {
        value: i64,
        modulus: i64,
    },
}

/// The congruence data of one lattice sum: `vᵢ ≡ residues[i] (mod modulus)`,
/// optional constraint on `Σ vᵢ`, and the exponent `‖v‖² / divisor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSpec {
    pub family: Family,
    pub t: usize,
    pub modulus: i64,
    pub residues: Vec<i64>,
    pub constraint: SumConstraint,
    pub divisor: i64,
    pub eta_exponent: i64,
}

impl LatticeSpec {
    pub fn new(family: Family, t: usize) -> Result<Self> {
        let ti = t as i64;
        let spec = match family {
            Family::A => {
                if t < 3 || t.is_multiple_of(2) {
                    return Err(Error::Lattice(format!(
                        "family A needs an odd t >= 3, got {t}"
                    )));
                }
                LatticeSpec {
                    family,
                    t,
                    modulus: ti,
                    residues: (0..ti).collect(),
                    constraint: SumConstraint::SumZero,
                    divisor: 2 * ti,
                    eta_exponent: ti * ti - 1,
                }
            }
            Family::C => {
                if t < 2 {
                    return Err(Error::Lattice(format!("family C needs t >= 2, got {t}")));
                }
                LatticeSpec {
                    family,
                    t,
                    modulus: 2 * ti + 2,
                    residues: (1..=ti).collect(),
                    constraint: SumConstraint::None,
                    divisor: 4 * ti + 4,
                    eta_exponent: 2 * ti * ti + ti,
                }
            }
            Family::B => {
                if t < 3 {
                    return Err(Error::Lattice(format!("family B needs t >= 3, got {t}")));
                }
                LatticeSpec {
                    family,
                    t,
                    modulus: 4 * ti - 2,
                    residues: (1..=ti).map(|i| 2 * i - 1).collect(),
                    constraint: SumConstraint::SumCongruence {
                        value: ti * ti,
                        modulus: 8 * ti - 4,
                    },
                    divisor: 8 * (2 * ti - 1),
                    eta_exponent: 2 * ti * ti + ti,
                }
            }
            Family::BC => {
                if t < 1 {
                    return Err(Error::Lattice(format!("family BC needs t >= 1, got {t}")));
                }
                LatticeSpec {
                    family,
                    t,
                    modulus: 4 * ti + 2,
                    residues: (1..=ti).map(|i| 2 * i - 1).collect(),
                    constraint: SumConstraint::None,
                    divisor: 8 * (2 * ti + 1),
                    eta_exponent: 2 * ti * ti - ti,
                }
            }
        };
        Ok(spec)
    }

    /// `eta_exponent / 24`, the smallest exponent in the sum.
    pub fn offset(&self) -> Rational {
        rational(self.eta_exponent, 24)
    }

    pub fn exponent_of(&self, v: &[i64]) -> Rational {
        rational(v.iter().map(|x| x * x).sum(), self.divisor)
    }

    /// Largest `‖v‖²` that can reach `x^(offset + order)`.
    pub fn norm_budget(&self, order: usize) -> i64 {
        let bound = (self.offset() + integer(order as i64)) * integer(self.divisor);
        i64::try_from(bound.floor().to_integer()).expect("norm budget fits in i64")
    }

    fn admits(&self, v: &[i64]) -> bool {
        let sum: i64 = v.iter().sum();
        let residues_ok = v
            .iter()
            .zip(&self.residues)
            .all(|(x, r)| (x - r).rem_euclid(self.modulus) == 0);
        residues_ok
            && match self.constraint {
                SumConstraint::None => true,
                SumConstraint::SumZero => sum == 0,
                SumConstraint::SumCongruence { value, modulus } => {
                    (sum - value).rem_euclid(modulus) == 0
                }
            }
    }

    /// The summand attached to `v`.
    pub fn weight(&self, v: &[i64]) -> BigInt {
        let mut w = BigInt::one();
        match self.family {
            Family::A => {
                for i in 0..v.len() {
                    for j in i + 1..v.len() {
                        w *= BigInt::from(v[i] - v[j]);
                    }
                }
            }
            Family::C | Family::B => {
                for &x in v {
                    w *= BigInt::from(x);
                }
                w *= square_differences(v);
            }
            Family::BC => {
                let sum: i64 = v.iter().sum();
                let half = (sum - self.t as i64) / 2;
                w = square_differences(v);
                if half.is_odd() {
                    w = -w;
                }
            }
        }
        w
    }
}

fn square_differences(v: &[i64]) -> BigInt {
    let mut w = BigInt::one();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            w *= BigInt::from(v[i] * v[i] - v[j] * v[j]);
        }
    }
    w
}

fn product_of_factorials(values: impl Iterator<Item = u64>) -> BigInt {
    let mut acc = BigInt::one();
    for n in values {
        let mut f = BigInt::one();
        for k in 2..=n {
            f *= k;
        }
        acc *= f;
    }
    acc
}

/// The normalizing constant in front of the lattice sum.
pub fn macdonald_constant(family: Family, t: usize) -> Rational {
    let tu = t as u64;
    let (sign_exp, denom) = match family {
        Family::A => ((tu - 1) / 2, product_of_factorials(1..tu)),
        Family::C => (tu / 2, product_of_factorials((1..=tu).map(|k| 2 * k - 1))),
        Family::B => (
            tu / 2,
            product_of_factorials((1..=tu).map(|k| 2 * k - 1))
                * BigInt::from(4).pow((tu * (tu - 1) / 2) as u32),
        ),
        Family::BC => (
            0,
            product_of_factorials((0..tu).map(|k| 2 * k))
                * BigInt::from(2).pow((tu * (tu - 1)) as u32),
        ),
    };
    let sign = if sign_exp % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    Rational::new(sign, denom)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeTerm {
    pub v: Vec<i64>,
    pub exponent: Rational,
    pub weight: BigInt,
}

/// All admissible vectors with `‖v‖² ≤ budget` and nonzero weight.
pub fn lattice_terms_within(spec: &LatticeSpec, budget: i64) -> Vec<LatticeTerm> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(spec.t);
    walk(spec, budget, &mut current, &mut out);
    out
}

/// All admissible vectors contributing through `x^(offset + order)`.
pub fn lattice_terms(spec: &LatticeSpec, order: usize) -> Vec<LatticeTerm> {
    lattice_terms_within(spec, spec.norm_budget(order))
}

fn coordinate_values(residue: i64, modulus: i64, remaining: i64) -> impl Iterator<Item = i64> {
    let bound = remaining.sqrt();
    let start = -bound + (residue + bound).rem_euclid(modulus);
    (0..)
        .map(move |k| start + k * modulus)
        .take_while(move |&v| v <= bound)
        .filter(move |&v| v * v <= remaining)
}

fn walk(spec: &LatticeSpec, remaining: i64, current: &mut Vec<i64>, out: &mut Vec<LatticeTerm>) {
    let i = current.len();
    let squares_matter = matches!(spec.family, Family::B | Family::C | Family::BC);
    if spec.family == Family::A && i + 1 == spec.t {
        // the last coordinate is forced by Σ vᵢ = 0
        let last = -current.iter().sum::<i64>();
        if last * last <= remaining {
            current.push(last);
            emit(spec, current, out);
            current.pop();
        }
        return;
    }
    if i == spec.t {
        emit(spec, current, out);
        return;
    }
    for v in coordinate_values(spec.residues[i], spec.modulus, remaining) {
        if squares_matter && current.iter().any(|&u| u * u == v * v) {
            continue;
        }
        if matches!(spec.family, Family::B | Family::C) && v == 0 {
            continue;
        }
        current.push(v);
        walk(spec, remaining - v * v, current, out);
        current.pop();
    }
}

fn emit(spec: &LatticeSpec, v: &[i64], out: &mut Vec<LatticeTerm>) {
    if !spec.admits(v) {
        return;
    }
    let weight = spec.weight(v);
    if weight.is_zero() {
        return;
    }
    out.push(LatticeTerm {
        v: v.to_vec(),
        exponent: spec.exponent_of(v),
        weight,
    });
}

/// `constant · Σ weight(v) x^(‖v‖²/divisor)` through `x^(offset + order)`.
pub fn macdonald_series(family: Family, t: usize, order: usize) -> Result<Series> {
    let spec = LatticeSpec::new(family, t)?;
    let offset = spec.offset();
    let mut sums = vec![BigInt::zero(); order + 1];
    for term in lattice_terms(&spec, order) {
        let step = &term.exponent - &offset;
        if !step.is_integer() || step.is_negative() {
            return Err(Error::NonIntegralExponent {
                exponent: exponent_string(&term.exponent),
                offset: exponent_string(&offset),
            });
        }
        let k = usize::try_from(step.to_integer()).expect("step fits in usize");
        sums[k] += &term.weight;
    }
    let c = macdonald_constant(family, t);
    let coeffs = sums
        .into_iter()
        .map(|s| Rational::from_integer(s) * &c)
        .collect();
    Ok(Series::new(offset, coeffs))
}

/// Compares the lattice sum with the matching eta power coefficient by
/// coefficient.
pub fn verify_macdonald(family: Family, t: usize, order: usize) -> Result<Report> {
    let spec = LatticeSpec::new(family, t)?;
    let terms = lattice_terms(&spec, order).len();
    let series = macdonald_series(family, t, order)?;
    let expected = eta_power(spec.eta_exponent, order);
    let mut report = Report::new(format!(
        "verify macdonald --family {family} --t {t} --order {order}"
    ));
    report.push(Check::new("lattice terms (nonzero)", terms, terms));
    report.push(Check::new(
        "constant",
        crate::series::fraction_string(&macdonald_constant(family, t)),
        crate::series::fraction_string(&macdonald_constant(family, t)),
    ));
    report.compare_series(&format!("eta^{}", spec.eta_exponent), &expected, &series);
    Ok(report)
}
