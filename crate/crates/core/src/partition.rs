//! Integer partitions and their Ferrers diagrams.
//!
//! Diagrams are drawn in French convention: row `i` counts from the bottom,
//! column `j` from the left, both starting at 1. The diagonal box `(i, i)`
//! carries the principal hook of row `i`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A sign `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    pub fn parity(k: usize) -> Sign {
        if k.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn of(value: i64) -> Sign {
        if value < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// One box of a Ferrers diagram together with its hook length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoxHook {
    pub row: usize,
    pub col: usize,
    pub hook: usize,
    /// `Minus` for boxes strictly above the diagonal (row > column in
    /// French convention), `Plus` otherwise.
    pub epsilon: Sign,
}

/// Size of the Durfee square and the sign `(-1)^size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Durfee {
    pub size: usize,
    pub sign: Sign,
}

/// Membership in the two symmetric classes used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Classification {
    pub self_conjugate: bool,
    pub doubled_distinct: bool,
}

/// A partition: a finite non-increasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[1] > w[0] {
                return Err(Error::Increasing {
                    prev: w[0],
                    next: w[1],
                });
            }
        }
        if parts.last() == Some(&0) {
            return Err(Error::NonPositivePart(0));
        }
        Ok(Partition { parts })
    }

    /// Validates a list of signed integers, as read from user input.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        if let Some(&bad) = parts.iter().find(|&&p| p <= 0) {
            return Err(Error::NonPositivePart(bad));
        }
        Partition::new(parts.iter().map(|&p| p as usize).collect())
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok(), "{parts:?}");
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let cols = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts: cols }
    }

    /// Every box with its hook length, row by row.
    pub fn hooks(&self) -> Vec<BoxHook> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.weight());
        for (r, &len) in self.parts.iter().enumerate() {
            let row = r + 1;
            for col in 1..=len {
                let arm = len - col;
                let leg = conj.parts[col - 1] - row;
                out.push(BoxHook {
                    row,
                    col,
                    hook: arm + leg + 1,
                    epsilon: if row > col { Sign::Minus } else { Sign::Plus },
                });
            }
        }
        out
    }

    /// The multiset of hook lengths, in row order.
    pub fn hook_lengths(&self) -> Vec<usize> {
        self.hooks().into_iter().map(|b| b.hook).collect()
    }

    pub fn durfee(&self) -> Durfee {
        let size = self
            .parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count();
        Durfee {
            size,
            sign: Sign::parity(size),
        }
    }

    /// Frobenius coordinates `(arms, legs)` of the diagonal boxes.
    pub fn frobenius(&self) -> (Vec<usize>, Vec<usize>) {
        let d = self.durfee().size;
        let conj = self.conjugate();
        let arms = (0..d).map(|i| self.parts[i] - (i + 1)).collect();
        let legs = (0..d).map(|i| conj.parts[i] - (i + 1)).collect();
        (arms, legs)
    }

    /// Rebuilds a partition from strictly decreasing arm and leg lists.
    pub fn from_frobenius(arms: &[usize], legs: &[usize]) -> Result<Self> {
        if arms.len() != legs.len() {
            return Err(Error::BadLength {
                expected: arms.len(),
                got: legs.len(),
            });
        }
        for w in arms.windows(2).chain(legs.windows(2)) {
            if w[1] >= w[0] {
                return Err(Error::NotStrictlyDecreasing {
                    prev: w[0],
                    next: w[1],
                });
            }
        }
        let d = arms.len();
        let mut parts: Vec<usize> = (0..d).map(|i| arms[i] + i + 1).collect();
        let mut row = d + 1;
        loop {
            // column k (1-based) has height legs[k-1] + k
            let len = (0..d).filter(|&k| legs[k] + k + 1 >= row).count();
            if len == 0 {
                break;
            }
            parts.push(len);
            row += 1;
        }
        Ok(Partition::from_parts_unchecked(parts))
    }

    /// Hook lengths of the diagonal boxes, strictly decreasing.
    pub fn principal_hooks(&self) -> Vec<usize> {
        let (arms, legs) = self.frobenius();
        arms.iter().zip(&legs).map(|(a, l)| a + l + 1).collect()
    }

    /// The unique self-conjugate (all hooks odd) or doubled distinct (all
    /// hooks even) partition with the given principal hooks.
    pub fn from_principal_hooks(hooks: &[usize]) -> Result<Self> {
        let mut hs = hooks.to_vec();
        hs.sort_unstable_by(|a, b| b.cmp(a));
        if hs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RepeatedHooks(hooks.to_vec()));
        }
        if hs.contains(&0) {
            return Err(Error::NonPositivePart(0));
        }
        let odd = hs.iter().filter(|&&h| h % 2 == 1).count();
        if odd != 0 && odd != hs.len() {
            return Err(Error::MixedParity(hooks.to_vec()));
        }
        let (arms, legs): (Vec<usize>, Vec<usize>) = hs
            .iter()
            .map(|&h| {
                if h % 2 == 1 {
                    ((h - 1) / 2, (h - 1) / 2)
                } else {
                    (h / 2, h / 2 - 1)
                }
            })
            .unzip();
        Partition::from_frobenius(&arms, &legs)
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Doubled distinct partitions are exactly those whose Frobenius arms
    /// exceed the matching legs by one.
    pub fn is_doubled_distinct(&self) -> bool {
        let (arms, legs) = self.frobenius();
        arms.iter().zip(&legs).all(|(a, l)| *a == l + 1)
    }

    pub fn classify(&self) -> Classification {
        Classification {
            self_conjugate: self.is_self_conjugate(),
            doubled_distinct: self.is_doubled_distinct(),
        }
    }

    /// Inverse of [`DistinctPartition::double`].
    pub fn undouble(&self) -> Option<DistinctPartition> {
        if !self.is_doubled_distinct() {
            return None;
        }
        let parts = self.principal_hooks().into_iter().map(|h| h / 2).collect();
        Some(DistinctPartition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses comma-separated integers, ignoring whitespace and an optional
/// pair of enclosing parentheses.
pub fn parse_int_list(input: &str) -> Result<Vec<i64>> {
    let cleaned: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = cleaned
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(&cleaned);
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.parse::<i64>().map_err(|e| Error::Parse {
                input: input.to_string(),
                reason: e.to_string(),
            })
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::from_signed(&parse_int_list(s)?)
    }
}

/// A partition into distinct parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DistinctPartition {
    parts: Vec<usize>,
}

impl DistinctPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[1] >= w[0] {
                return Err(Error::NotStrictlyDecreasing {
                    prev: w[0],
                    next: w[1],
                });
            }
        }
        if parts.last() == Some(&0) {
            return Err(Error::NonPositivePart(0));
        }
        Ok(DistinctPartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Shifts row `i` of the diagram right by `i`, then adds `parts[i]`
    /// boxes below the diagonal in column `i`. The result has principal
    /// hooks `2 * parts[i]`.
    pub fn double(&self) -> Partition {
        let parts = &self.parts;
        let height = parts
            .iter()
            .enumerate()
            .map(|(c, &p)| c + p)
            .max()
            .unwrap_or(0);
        let rows = (1..=height)
            .map(|r| {
                // shifted row r, plus the boxes added to columns c <= r
                let shifted = parts.get(r - 1).copied().unwrap_or(0);
                let added = parts
                    .iter()
                    .enumerate()
                    .filter(|&(c, &p)| c < r && r <= c + p)
                    .count();
                shifted + added
            })
            .collect();
        Partition::from_parts_unchecked(rows)
    }
}

impl fmt::Display for DistinctPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Partition::from_parts_unchecked(self.parts.clone()).fmt(f)
    }
}

/// Classes of partitions that can be enumerated by weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionClass {
    All,
    Distinct,
    SelfConjugate,
    DoubledDistinct,
}

fn push_partitions(
    n: usize,
    max_part: usize,
    distinct: bool,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for k in (1..=n.min(max_part)).rev() {
        prefix.push(k);
        let next_max = if distinct { k - 1 } else { k };
        push_partitions(n - k, next_max, distinct, prefix, out);
        prefix.pop();
    }
}

/// Part lists of weight `n`, in lexicographically decreasing order.
fn part_lists(n: usize, distinct: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    push_partitions(n, n, distinct, &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight `n` in `class`, each once, in lexicographically
/// decreasing order of their part lists.
pub fn enumerate(class: PartitionClass, n: usize) -> Vec<Partition> {
    match class {
        PartitionClass::All | PartitionClass::Distinct => {
            part_lists(n, class == PartitionClass::Distinct)
                .into_iter()
                .map(Partition::from_parts_unchecked)
                .collect()
        }
        PartitionClass::SelfConjugate => {
            // principal hooks of a self-conjugate partition are distinct odd
            // numbers summing to the weight
            let mut out: Vec<Partition> = part_lists(n, true)
                .into_iter()
                .filter(|hs| hs.iter().all(|h| h % 2 == 1))
                .map(|hs| Partition::from_principal_hooks(&hs).expect("odd distinct hooks"))
                .collect();
            out.sort_unstable_by(|a, b| b.cmp(a));
            out
        }
        PartitionClass::DoubledDistinct => {
            if n % 2 == 1 {
                return Vec::new();
            }
            let mut out: Vec<Partition> = part_lists(n / 2, true)
                .into_iter()
                .map(|parts| DistinctPartition { parts }.double())
                .collect();
            out.sort_unstable_by(|a, b| b.cmp(a));
            out
        }
    }
}

/// All partitions of `class` with weight at most `max_weight`, by weight.
pub fn enumerate_up_to(class: PartitionClass, max_weight: usize) -> Vec<Partition> {
    (0..=max_weight).flat_map(|n| enumerate(class, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(p(&[]).weight(), 0);
        assert_eq!(p(&[7, 5, 3, 2, 2, 1, 1]).weight(), 21);
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(Error::Increasing { .. })
        ));
        assert!(Partition::from_signed(&[3, 0]).is_err());
        assert!(Partition::from_signed(&[3, -1]).is_err());
        assert_eq!("7, 5,3 ".parse::<Partition>().unwrap(), p(&[7, 5, 3]));
        assert_eq!("".parse::<Partition>().unwrap(), p(&[]));
        assert!("2,x".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[5, 3, 1, 1]).conjugate(), p(&[4, 2, 2, 1, 1]));
        let fig = p(&[7, 5, 3, 2, 2, 1, 1]);
        assert_eq!(fig.conjugate(), fig);
    }

    #[test]
    fn hooks_of_small_partitions() {
        let one = p(&[1]).hooks();
        assert_eq!(
            one,
            vec![BoxHook {
                row: 1,
                col: 1,
                hook: 1,
                epsilon: Sign::Plus
            }]
        );
        let h = p(&[2, 1]).hooks();
        let mut lens: Vec<_> = h.iter().map(|b| b.hook).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![1, 1, 3]);
        let above = h.iter().find(|b| b.row == 2 && b.col == 1).unwrap();
        assert_eq!(above.epsilon, Sign::Minus);
        let right = h.iter().find(|b| b.row == 1 && b.col == 2).unwrap();
        assert_eq!(right.epsilon, Sign::Plus);
        assert_eq!(p(&[2]).hook_lengths(), vec![2, 1]);
    }

    #[test]
    fn durfee_squares() {
        assert_eq!(
            p(&[]).durfee(),
            Durfee {
                size: 0,
                sign: Sign::Plus
            }
        );
        assert_eq!(
            p(&[7, 5, 3, 2, 2, 1, 1]).durfee(),
            Durfee {
                size: 3,
                sign: Sign::Minus
            }
        );
        assert_eq!(
            p(&[5, 3, 1, 1]).durfee(),
            Durfee {
                size: 2,
                sign: Sign::Plus
            }
        );
    }

    #[test]
    fn principal_hook_lists() {
        assert_eq!(p(&[7, 5, 3, 2, 2, 1, 1]).principal_hooks(), vec![13, 7, 1]);
        assert_eq!(p(&[5, 3, 1, 1]).principal_hooks(), vec![8, 2]);
        assert!(p(&[]).principal_hooks().is_empty());
        assert_eq!(
            Partition::from_principal_hooks(&[13, 7, 1]).unwrap(),
            p(&[7, 5, 3, 2, 2, 1, 1])
        );
        assert_eq!(
            Partition::from_principal_hooks(&[2, 8]).unwrap(),
            p(&[5, 3, 1, 1])
        );
        assert!(Partition::from_principal_hooks(&[3, 2]).is_err());
        assert!(Partition::from_principal_hooks(&[3, 3]).is_err());
    }

    #[test]
    fn doubling() {
        let d = DistinctPartition::new(vec![4, 1]).unwrap();
        assert_eq!(d.double(), p(&[5, 3, 1, 1]));
        assert_eq!(DistinctPartition::new(vec![1]).unwrap().double(), p(&[2]));
        assert_eq!(DistinctPartition::default().double(), p(&[]));
        assert_eq!(p(&[5, 3, 1, 1]).undouble(), Some(d));
        assert!(DistinctPartition::new(vec![2, 2]).is_err());
    }

    #[test]
    fn classification() {
        let c = p(&[7, 5, 3, 2, 2, 1, 1]).classify();
        assert_eq!((c.self_conjugate, c.doubled_distinct), (true, false));
        let c = p(&[5, 3, 1, 1]).classify();
        assert_eq!((c.self_conjugate, c.doubled_distinct), (false, true));
        let c = p(&[]).classify();
        assert_eq!((c.self_conjugate, c.doubled_distinct), (true, true));
        // principal hook 2 but the leg side is too long
        assert!(!p(&[2, 1, 1]).is_doubled_distinct());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate(PartitionClass::All, 4).len(), 5);
        assert_eq!(enumerate(PartitionClass::DoubledDistinct, 2), vec![p(&[2])]);
        assert_eq!(enumerate(PartitionClass::SelfConjugate, 0), vec![p(&[])]);
        let all4: Vec<_> = enumerate(PartitionClass::All, 4)
            .into_iter()
            .map(|q| q.parts().to_vec())
            .collect();
        assert_eq!(
            all4,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        let pn: Vec<usize> = (0..=10)
            .map(|n| enumerate(PartitionClass::All, n).len())
            .collect();
        assert_eq!(pn, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn class_enumerations_match_filters() {
        for n in 0..=16 {
            let all = enumerate(PartitionClass::All, n);
            let sc: Vec<_> = all
                .iter()
                .filter(|q| q.is_self_conjugate())
                .cloned()
                .collect();
            let dd: Vec<_> = all
                .iter()
                .filter(|q| q.is_doubled_distinct())
                .cloned()
                .collect();
            let distinct: Vec<_> = all
                .iter()
                .filter(|q| q.parts().windows(2).all(|w| w[0] > w[1]))
                .cloned()
                .collect();
            assert_eq!(enumerate(PartitionClass::SelfConjugate, n), sc, "n={n}");
            assert_eq!(enumerate(PartitionClass::DoubledDistinct, n), dd, "n={n}");
            assert_eq!(enumerate(PartitionClass::Distinct, n), distinct, "n={n}");
        }
    }

    #[test]
    fn doubled_distinct_weights_are_even() {
        for n in 0..12 {
            assert!(enumerate(PartitionClass::DoubledDistinct, 2 * n + 1).is_empty());
        }
    }

    #[test]
    fn conjugation_is_an_involution() {
        for q in enumerate_up_to(PartitionClass::All, 30) {
            assert_eq!(q.conjugate().conjugate(), q);
        }
    }

    #[test]
    fn doubling_laws() {
        for d in enumerate_up_to(PartitionClass::Distinct, 20) {
            let d = DistinctPartition::new(d.parts().to_vec()).unwrap();
            let nu = d.double();
            assert_eq!(nu.weight(), 2 * d.weight());
            let twice: Vec<usize> = d.parts().iter().map(|x| 2 * x).collect();
            assert_eq!(nu.principal_hooks(), twice);
            assert_eq!(nu.undouble(), Some(d));
        }
    }

    #[test]
    fn hooks_are_conjugation_invariant() {
        for q in enumerate_up_to(PartitionClass::All, 25) {
            let mut a = q.hook_lengths();
            let mut b = q.conjugate().hook_lengths();
            assert_eq!(a.len(), q.weight());
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
        }
    }
}
