//! Compact sets modulo `2t + 2` and the product identity they satisfy.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::One;
use rand::Rng;

use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::series::{integer, rational, Rational};

fn period(t: usize) -> i64 {
    2 * t as i64 + 2
}

/// Whether `elements` is a `(2t+2)`-compact set, and the maximum of each
/// residue class modulo `2t + 2` that occurs in it.
///
/// A compact set contains `-1, …, -(2t+1)`; every other element is a
/// positive non-multiple of `2t + 2`; and it is closed downward within
/// residue classes among the positive integers.
pub fn compact_ops(elements: &BTreeSet<i64>, t: usize) -> (bool, BTreeSet<i64>) {
    let m = period(t);
    let mut by_class: BTreeMap<i64, i64> = BTreeMap::new();
    for &a in elements {
        let slot = by_class.entry(a.rem_euclid(m)).or_insert(a);
        *slot = (*slot).max(a);
    }
    let maxima = by_class.into_values().collect();

    let negatives_present = (1..m).all(|k| elements.contains(&-k));
    let others_ok = elements
        .iter()
        .all(|&a| (-(m - 1)..=-1).contains(&a) || (a >= 1 && a % m != 0));
    let closed = elements
        .iter()
        .filter(|&&b| b > m)
        .all(|&b| elements.contains(&(b - m)));
    (negatives_present && others_ok && closed, maxima)
}

/// A validated `(2t+2)`-compact set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactSet {
    t: usize,
    elements: BTreeSet<i64>,
}

impl CompactSet {
    pub fn new(t: usize, elements: impl IntoIterator<Item = i64>) -> Result<Self> {
        let elements: BTreeSet<i64> = elements.into_iter().collect();
        let (ok, _) = compact_ops(&elements, t);
        if !ok {
            return Err(Error::NotCompact(
                format!("{elements:?}"),
                format!("modulus {}", period(t)),
            ));
        }
        Ok(CompactSet { t, elements })
    }

    /// `{-1, …, -(2t+1)}`.
    pub fn minimal(t: usize) -> Self {
        CompactSet {
            t,
            elements: (1..period(t)).map(|k| -k).collect(),
        }
    }

    /// The compact set generated by the given positive class maxima.
    pub fn from_positive_maxima(t: usize, maxima: impl IntoIterator<Item = i64>) -> Result<Self> {
        let m = period(t);
        let mut elements: BTreeSet<i64> = (1..m).map(|k| -k).collect();
        for top in maxima {
            if top < 1 || top % m == 0 {
                return Err(Error::NotCompact(top.to_string(), format!("modulus {m}")));
            }
            let mut a = top;
            while a >= 1 {
                elements.insert(a);
                a -= m;
            }
        }
        CompactSet::new(t, elements)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn elements(&self) -> &BTreeSet<i64> {
        &self.elements
    }

    pub fn positives(&self) -> impl Iterator<Item = i64> + '_ {
        self.elements.iter().copied().filter(|&a| a > 0)
    }

    pub fn maxima(&self) -> BTreeSet<i64> {
        compact_ops(&self.elements, self.t).1
    }

    /// `-∏_{a>0} (1 - ((2t+2)/a)²)` and `∏_{a ∈ max} (a + 2t + 2)/a`.
    pub fn lemma_sides(&self) -> (Rational, Rational) {
        let m = period(self.t);
        let mut lhs = -Rational::one();
        for a in self.positives() {
            let r = rational(m, a);
            lhs *= Rational::one() - &r * &r;
        }
        let mut rhs = Rational::one();
        for a in self.maxima() {
            rhs *= rational(a + m, a);
        }
        (lhs, rhs)
    }

    /// A random compact set: each nonzero residue class independently gets
    /// either no positive elements or all of them up to a random top
    /// `≤ max_positive`.
    pub fn random<R: Rng + ?Sized>(t: usize, max_positive: i64, rng: &mut R) -> Self {
        let m = period(t);
        let mut tops = Vec::new();
        for class in 1..m {
            let choices = if class > max_positive {
                0
            } else {
                (max_positive - class) / m + 1
            };
            let pick = rng.gen_range(0..=choices);
            if pick > 0 {
                tops.push(class + (pick - 1) * m);
            }
        }
        CompactSet::from_positive_maxima(t, tops).expect("tops are positive non-multiples")
    }
}

impl fmt::Display for CompactSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.elements.iter().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Compares both sides of the compact-set product identity.
pub fn compact_lemma_check(set: &CompactSet) -> Report {
    let (lhs, rhs) = set.lemma_sides();
    let mut report = Report::new(format!("compact-lemma t={} A={set}", set.t));
    report.push(Check::rational(
        format!("product identity for {set}"),
        &lhs,
        &rhs,
    ));
    report
}

/// The product `∏_{a ∈ maxima} (a + 2t + 2)/a` alone, used when only the
/// maxima are known.
pub fn maxima_product(maxima: &BTreeSet<i64>, t: usize) -> Result<Rational> {
    let m = period(t);
    let mut acc = Rational::one();
    for &a in maxima {
        if a == 0 {
            return Err(Error::ZeroDenominator(format!("maximum 0 modulo {m}")));
        }
        acc *= rational(a + m, a);
    }
    Ok(acc)
}

/// `∏_{a ∈ positives} (1 - ((2t+2)/a)²)`.
pub fn square_product(positives: impl IntoIterator<Item = i64>, t: usize) -> Rational {
    let m = integer(period(t));
    positives.into_iter().fold(Rational::one(), |acc, a| {
        let r = &m / integer(a);
        acc * (Rational::one() - &r * &r)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn set(xs: &[i64]) -> BTreeSet<i64> {
        xs.iter().copied().collect()
    }

    #[test]
    fn minimal_set() {
        for t in 1..=4 {
            let a = CompactSet::minimal(t);
            let (ok, maxima) = compact_ops(a.elements(), t);
            assert!(ok);
            assert_eq!(&maxima, a.elements());
            let (lhs, rhs) = a.lemma_sides();
            assert_eq!(lhs, integer(-1));
            assert_eq!(rhs, integer(-1));
        }
    }

    #[test]
    fn worked_instance() {
        let (ok, maxima) = compact_ops(&set(&[-1, -2, -3, 1]), 1);
        assert!(ok);
        assert_eq!(maxima, set(&[1, -2, -1]));
        let a = CompactSet::new(1, [-1, -2, -3, 1]).unwrap();
        let (lhs, rhs) = a.lemma_sides();
        assert_eq!(lhs, integer(15));
        assert_eq!(rhs, integer(15));
        assert!(compact_lemma_check(&a).passed());
    }

    #[test]
    fn axioms() {
        assert!(!compact_ops(&set(&[-1, -3]), 1).0);
        assert!(!compact_ops(&set(&[-1, -2, -3, 4]), 1).0);
        assert!(!compact_ops(&set(&[-1, -2, -3, 5]), 1).0);
        assert!(compact_ops(&set(&[-1, -2, -3, 1, 5]), 1).0);
        assert!(!compact_ops(&set(&[-1, -2, -3, -4]), 1).0);
        assert!(CompactSet::new(1, [-1, -3]).is_err());
        assert!(CompactSet::from_positive_maxima(1, [8]).is_err());
    }

    #[test]
    fn generated_sets_have_the_given_maxima() {
        let a = CompactSet::from_positive_maxima(2, [13, 2]).unwrap();
        assert_eq!(a.positives().collect::<Vec<_>>(), vec![1, 2, 7, 13]);
        assert_eq!(a.maxima(), set(&[13, 2, -3, -2, -1]));
        assert_eq!(maxima_product(&a.maxima(), 2).unwrap(), a.lemma_sides().1);
        assert_eq!(-square_product(a.positives(), 2), a.lemma_sides().0);
    }

    #[test]
    fn seeded_random_sets_satisfy_the_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for t in 1..=4 {
            for _ in 0..50 {
                let a = CompactSet::random(t, 40, &mut rng);
                assert!(a.positives().all(|x| x <= 40));
                let (lhs, rhs) = a.lemma_sides();
                assert_eq!(lhs, rhs, "{a}");
            }
        }
    }

    proptest! {
        #[test]
        fn identity_holds(t in 1usize..5, seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = CompactSet::random(t, 60, &mut rng);
            let (lhs, rhs) = a.lemma_sides();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
