//! t-cores, ribbon removal, and the bijections between cores and integer
//! vectors.
//!
//! [`gks_phi`] reads a t-core off its extended t-residue diagram: the exposed
//! box ending row `i` sits at content `λᵢ − i` (column 0 for rows past the
//! last part), carries label `content mod t`, and lies in region
//! `⌊content / t⌋ + 1`. Entry `k` of the vector is the largest region holding
//! an exposed box labelled `k`.
//!
//! [`varphi`] interleaves the self-conjugate and doubled distinct slices of
//! that vector for a pair of (t+1)-cores; [`DeltaProfile`] carries the
//! per-residue maxima of the pair's principal hooks, which determine the
//! vector through `t + 1 + Δᵢ = σᵢ((2t+2)nᵢ + i)`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{DistinctPartition, Partition, Sign};

/// No hook of `p` equals `t` (equivalently, none is divisible by `t`).
pub fn is_t_core(p: &Partition, t: usize) -> bool {
    assert!(t >= 1, "t must be positive");
    p.hooks().iter().all(|b| b.hook != t)
}

fn check_modulus(t: usize, min: usize) -> Result<()> {
    if t < min {
        return Err(Error::BadModulus { min, got: t });
    }
    Ok(())
}

/// Removes the rim hook attached to box `(row, col)` by moving the bead of
/// `row` down by the hook length in the beta-set of `p`.
fn remove_rim_hook_beta(p: &Partition, row: usize, hook: usize) -> Partition {
    let len = p.len();
    let mut beta: Vec<usize> = p
        .parts()
        .iter()
        .enumerate()
        .map(|(k, &part)| part + len - 1 - k)
        .collect();
    beta[row - 1] -= hook;
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let parts: Vec<usize> = beta
        .iter()
        .enumerate()
        .map(|(k, &b)| b - (len - 1 - k))
        .filter(|&x| x > 0)
        .collect();
    Partition::from_parts_unchecked(parts)
}

/// Removes the rim hook attached to box `(row, col)` by sliding the rows it
/// crosses: each row of the ribbon except the top one takes the length of
/// the row above minus one, and the top row is cut back to `col - 1`.
pub fn remove_rim_hook(p: &Partition, row: usize, col: usize) -> Partition {
    let conj = p.conjugate();
    let top = conj.part(col);
    let mut parts = p.parts().to_vec();
    for r in row..top {
        parts[r - 1] = p.part(r + 1) - 1;
    }
    parts[top - 1] = col - 1;
    parts.retain(|&x| x > 0);
    Partition::from_parts_unchecked(parts)
}

/// The t-core `T(p)`: removes ribbons of length `t` until none is left,
/// always taking the one attached to the lexicographically smallest box.
pub fn t_core_reduce(p: &Partition, t: usize) -> Partition {
    assert!(t >= 1, "t must be positive");
    let mut current = p.clone();
    loop {
        let next = current
            .hooks()
            .into_iter()
            .filter(|b| b.hook == t)
            .min_by_key(|b| (b.row, b.col));
        match next {
            Some(b) => current = remove_rim_hook_beta(&current, b.row, t),
            None => return current,
        }
    }
}

/// Every partition reachable as a terminal state when length-`t` ribbons are
/// removed in every possible order. A single element means the reduction
/// does not depend on the removal order.
pub fn all_reduction_outcomes(p: &Partition, t: usize) -> BTreeSet<Partition> {
    let mut seen = BTreeSet::new();
    let mut outcomes = BTreeSet::new();
    let mut stack = vec![p.clone()];
    while let Some(q) = stack.pop() {
        if !seen.insert(q.clone()) {
            continue;
        }
        let boxes: Vec<_> = q.hooks().into_iter().filter(|b| b.hook == t).collect();
        if boxes.is_empty() {
            outcomes.insert(q);
            continue;
        }
        for b in boxes {
            stack.push(remove_rim_hook(&q, b.row, b.col));
        }
    }
    outcomes
}

/// Which bijection produced a [`CoreVector`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoreKind {
    Gks,
    SelfConjugate,
    DoubledDistinct,
    /// Image of a self-conjugate/doubled distinct pair; `modulus` is `t + 1`.
    Pair,
}

/// Integer vector image of a core (or pair of cores).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreVector {
    pub modulus: usize,
    pub entries: Vec<i64>,
    pub kind: CoreKind,
}

impl CoreVector {
    /// Weight of the preimage, read off the quadratic form of `kind`.
    pub fn weight(&self) -> i64 {
        match self.kind {
            CoreKind::Gks => gks_weight(&self.entries, self.modulus),
            CoreKind::SelfConjugate => sc_weight(&self.entries, self.modulus),
            CoreKind::DoubledDistinct => dd_weight(&self.entries, self.modulus),
            CoreKind::Pair => pair_weight(&self.entries, self.modulus - 1),
        }
    }
}

impl fmt::Display for CoreVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, n) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ")")
    }
}

fn norm2(entries: &[i64]) -> i64 {
    entries.iter().map(|n| n * n).sum()
}

fn dot(coeffs: &[i64], entries: &[i64]) -> i64 {
    coeffs.iter().zip(entries).map(|(c, n)| c * n).sum()
}

/// `(t/2)‖n‖² + b·n` with `b = (0, 1, …, t-1)`.
pub fn gks_weight(entries: &[i64], t: usize) -> i64 {
    let b: Vec<i64> = (0..t as i64).collect();
    (t as i64 * norm2(entries) + 2 * dot(&b, entries)) / 2
}

/// Linear coefficients of the self-conjugate weight form:
/// `(1, 3, …, t-1)` for even `t`, `(2, 4, …, t-1)` for odd `t`.
pub fn sc_linear(t: usize) -> Vec<i64> {
    let start = if t.is_multiple_of(2) { 1 } else { 2 };
    (0..t / 2).map(|k| start + 2 * k as i64).collect()
}

/// Linear coefficients of the doubled distinct weight form:
/// `(2, 4, …, t-2)` for even `t`, `(1, 3, …, t-2)` for odd `t`.
pub fn dd_linear(t: usize) -> Vec<i64> {
    let start = if t.is_multiple_of(2) { 2 } else { 1 };
    (0..(t.max(1) - 1) / 2)
        .map(|k| start + 2 * k as i64)
        .collect()
}

/// `t‖n‖² + c·n`.
pub fn sc_weight(entries: &[i64], t: usize) -> i64 {
    t as i64 * norm2(entries) + dot(&sc_linear(t), entries)
}

/// `t‖n‖² + d·n`.
pub fn dd_weight(entries: &[i64], t: usize) -> i64 {
    t as i64 * norm2(entries) + dot(&dd_linear(t), entries)
}

/// `(t+1)‖n‖² + e·n` with `e = (1, …, t)`.
pub fn pair_weight(entries: &[i64], t: usize) -> i64 {
    let e: Vec<i64> = (1..=t as i64).collect();
    (t as i64 + 1) * norm2(entries) + dot(&e, entries)
}

/// The Garvan–Kim–Stanton vector of a t-core.
pub fn gks_phi(p: &Partition, t: usize) -> Result<CoreVector> {
    check_modulus(t, 1)?;
    if !is_t_core(p, t) {
        return Err(Error::NotCore {
            partition: p.to_string(),
            t,
        });
    }
    let ti = t as i64;
    let mut entries = vec![i64::MIN; t];
    for row in 1..=p.len() + t {
        let content = p.part(row) as i64 - row as i64;
        let label = content.rem_euclid(ti) as usize;
        let region = content.div_euclid(ti) + 1;
        entries[label] = entries[label].max(region);
    }
    Ok(CoreVector {
        modulus: t,
        entries,
        kind: CoreKind::Gks,
    })
}

/// Rebuilds the t-core whose exposed contents in residue class `k` run up
/// to `k + t(n_k - 1)`.
pub fn gks_phi_inv(entries: &[i64], t: usize) -> Result<Partition> {
    check_modulus(t, 1)?;
    if entries.len() != t {
        return Err(Error::BadLength {
            expected: t,
            got: entries.len(),
        });
    }
    let sum: i64 = entries.iter().sum();
    if sum != 0 {
        return Err(Error::NonZeroSum(sum));
    }
    let ti = t as i64;
    let tops: Vec<i64> = entries
        .iter()
        .enumerate()
        .map(|(k, &n)| k as i64 + ti * (n - 1))
        .collect();
    // every integer up to `floor` is an exposed content
    let floor = *tops.iter().min().expect("t >= 1");
    let mut contents: Vec<i64> = tops
        .iter()
        .flat_map(|&top| {
            (0..)
                .map(move |m| top - ti * m)
                .take_while(move |&c| c > floor)
        })
        .collect();
    contents.sort_unstable_by(|a, b| b.cmp(a));
    debug_assert_eq!(floor + contents.len() as i64 + 1, 0, "charge must vanish");
    let parts: Vec<usize> = contents
        .iter()
        .enumerate()
        .map(|(i, &c)| (c + i as i64 + 1) as usize)
        .filter(|&x| x > 0)
        .collect();
    Ok(Partition::from_parts_unchecked(parts))
}

/// Self-conjugate t-core to its last `⌊t/2⌋` GKS entries.
pub fn phi1(p: &Partition, t: usize) -> Result<CoreVector> {
    check_modulus(t, 1)?;
    if !p.is_self_conjugate() {
        return Err(Error::NotSelfConjugate(p.to_string()));
    }
    let full = gks_phi(p, t)?;
    Ok(CoreVector {
        modulus: t,
        entries: full.entries[t - t / 2..].to_vec(),
        kind: CoreKind::SelfConjugate,
    })
}

/// Inverse of [`phi1`]; uses `n_{t-1-k} = -n_k` for self-conjugate cores.
pub fn phi1_inv(entries: &[i64], t: usize) -> Result<Partition> {
    check_modulus(t, 1)?;
    let half = t / 2;
    if entries.len() != half {
        return Err(Error::BadLength {
            expected: half,
            got: entries.len(),
        });
    }
    let mut full = vec![0i64; t];
    for (offset, &n) in entries.iter().enumerate() {
        let k = t - half + offset;
        full[k] = n;
        full[t - 1 - k] = -n;
    }
    gks_phi_inv(&full, t)
}

/// Doubled distinct t-core to its last `⌊(t-1)/2⌋` GKS entries.
pub fn phi2(p: &Partition, t: usize) -> Result<CoreVector> {
    check_modulus(t, 1)?;
    if !p.is_doubled_distinct() {
        return Err(Error::NotDoubledDistinct(p.to_string()));
    }
    let full = gks_phi(p, t)?;
    let len = (t - 1) / 2;
    Ok(CoreVector {
        modulus: t,
        entries: full.entries[t - len..].to_vec(),
        kind: CoreKind::DoubledDistinct,
    })
}

/// Inverse of [`phi2`]; uses `n_0 = 0` and `n_{t-k} = -n_k` for doubled
/// distinct cores.
pub fn phi2_inv(entries: &[i64], t: usize) -> Result<Partition> {
    check_modulus(t, 1)?;
    let len = (t - 1) / 2;
    if entries.len() != len {
        return Err(Error::BadLength {
            expected: len,
            got: entries.len(),
        });
    }
    let mut full = vec![0i64; t];
    for (offset, &n) in entries.iter().enumerate() {
        let k = t - len + offset;
        full[k] = n;
        full[t - k] = -n;
    }
    gks_phi_inv(&full, t)
}

/// A self-conjugate partition paired with a doubled distinct one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PairScDd {
    lambda: Partition,
    mu: Partition,
}

impl PairScDd {
    pub fn new(lambda: Partition, mu: Partition) -> Result<Self> {
        if !lambda.is_self_conjugate() {
            return Err(Error::NotSelfConjugate(lambda.to_string()));
        }
        if !mu.is_doubled_distinct() {
            return Err(Error::NotDoubledDistinct(mu.to_string()));
        }
        Ok(PairScDd { lambda, mu })
    }

    pub fn empty() -> Self {
        PairScDd::default()
    }

    /// The pair whose combined principal hooks are `delta`: odd hooks go to
    /// the self-conjugate side, even hooks to the doubled distinct side.
    pub fn from_principal_hooks(delta: &[usize]) -> Result<Self> {
        let odd: Vec<usize> = delta.iter().copied().filter(|h| h % 2 == 1).collect();
        let even: Vec<usize> = delta.iter().copied().filter(|h| h % 2 == 0).collect();
        Ok(PairScDd {
            lambda: Partition::from_principal_hooks(&odd)?,
            mu: Partition::from_principal_hooks(&even)?,
        })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn weight(&self) -> usize {
        self.lambda.weight() + self.mu.weight()
    }

    /// `δ_λ δ_μ`.
    pub fn sign(&self) -> Sign {
        self.lambda.durfee().sign * self.mu.durfee().sign
    }

    /// The set Δ of principal hooks of both partitions, decreasing.
    pub fn principal_hooks(&self) -> Vec<usize> {
        let mut delta = self.lambda.principal_hooks();
        delta.extend(self.mu.principal_hooks());
        delta.sort_unstable_by(|a, b| b.cmp(a));
        delta
    }

    pub fn is_core_pair(&self, modulus: usize) -> bool {
        is_t_core(&self.lambda, modulus) && is_t_core(&self.mu, modulus)
    }
}

impl fmt::Display for PairScDd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lambda, self.mu)
    }
}

/// Principal hooks of a pair and their maxima per residue class modulo
/// `2t + 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaProfile {
    pub t: usize,
    /// Δ, decreasing.
    pub delta: Vec<usize>,
    /// `delta_i[i - 1] = Δᵢ` for `i = 1..=t`.
    pub delta_i: Vec<i64>,
    pub sigma: Vec<Sign>,
}

impl DeltaProfile {
    /// Recovers `nᵢ` from `t + 1 + Δᵢ = σᵢ((2t+2)nᵢ + i)`.
    pub fn implied_vector(&self) -> Vec<i64> {
        let modulus = self.t as i64 + 1;
        self.delta_i
            .iter()
            .zip(&self.sigma)
            .enumerate()
            .map(|(k, (&d, s))| {
                let i = k as i64 + 1;
                (s.to_i64() * (modulus + d) - i) / (2 * modulus)
            })
            .collect()
    }
}

/// Δ and `Δᵢ = max({h ∈ Δ : h ≡ ±i − t − 1 mod 2t+2} ∪ {i − t − 1})`.
pub fn delta_profile(pair: &PairScDd, t: usize) -> DeltaProfile {
    delta_profile_of(&pair.principal_hooks(), t)
}

pub(crate) fn delta_profile_of(delta: &[usize], t: usize) -> DeltaProfile {
    let modulus = t as i64 + 1;
    let period = 2 * modulus;
    let mut delta_i = Vec::with_capacity(t);
    let mut sigma = Vec::with_capacity(t);
    for i in 1..=t as i64 {
        let plus = (i - modulus).rem_euclid(period);
        let minus = (-i - modulus).rem_euclid(period);
        let best = delta
            .iter()
            .map(|&h| h as i64)
            .filter(|h| {
                let r = h.rem_euclid(period);
                r == plus || r == minus
            })
            .max()
            .unwrap_or(i - modulus);
        delta_i.push(best);
        sigma.push(if best.rem_euclid(period) == plus {
            Sign::Plus
        } else {
            Sign::Minus
        });
    }
    DeltaProfile {
        t,
        delta: delta.to_vec(),
        delta_i,
        sigma,
    }
}

/// Bijection from pairs of (t+1)-cores (self-conjugate, doubled distinct) to
/// `ℤᵗ`, built by interleaving [`phi1`] and [`phi2`].
///
/// When `t + 1` is odd the even positions `n₂, n₄, …` come from `phi1(λ)`
/// and the odd ones from `phi2(μ)`; the roles swap when `t + 1` is even.
pub fn varphi(pair: &PairScDd, t: usize) -> Result<CoreVector> {
    let modulus = t + 1;
    let sc = phi1(pair.lambda(), modulus)?;
    let dd = phi2(pair.mu(), modulus)?;
    let (mut even_src, mut odd_src) = if modulus % 2 == 1 {
        (sc.entries.into_iter(), dd.entries.into_iter())
    } else {
        (dd.entries.into_iter(), sc.entries.into_iter())
    };
    let entries = (1..=t)
        .map(|i| {
            let src = if i % 2 == 0 {
                &mut even_src
            } else {
                &mut odd_src
            };
            src.next().expect("slice lengths add up to t")
        })
        .collect();
    Ok(CoreVector {
        modulus,
        entries,
        kind: CoreKind::Pair,
    })
}

/// Inverse of [`varphi`] through the [`phi1_inv`]/[`phi2_inv`] slices.
pub fn varphi_inv(entries: &[i64], t: usize) -> Result<PairScDd> {
    if entries.len() != t {
        return Err(Error::BadLength {
            expected: t,
            got: entries.len(),
        });
    }
    let modulus = t + 1;
    let evens: Vec<i64> = entries.iter().skip(1).step_by(2).copied().collect();
    let odds: Vec<i64> = entries.iter().step_by(2).copied().collect();
    let (sc, dd) = if modulus % 2 == 1 {
        (evens, odds)
    } else {
        (odds, evens)
    };
    Ok(PairScDd {
        lambda: phi1_inv(&sc, modulus)?,
        mu: phi2_inv(&dd, modulus)?,
    })
}

/// Principal hooks of `varphi_inv(entries)` built one hook at a time:
/// reaching `nᵢ = m > 0` adds a hook of length `(t+1)(2m−1) + i`, reaching
/// `nᵢ = −m` adds `(t+1)(2m−1) − i`.
pub fn principal_hooks_from_vector(entries: &[i64], t: usize) -> Vec<usize> {
    let modulus = t as i64 + 1;
    let mut delta = Vec::new();
    for (k, &n) in entries.iter().enumerate() {
        let i = k as i64 + 1;
        for m in 1..=n.abs() {
            let h = if n > 0 {
                modulus * (2 * m - 1) + i
            } else {
                modulus * (2 * m - 1) - i
            };
            delta.push(h as usize);
        }
    }
    delta.sort_unstable_by(|a, b| b.cmp(a));
    delta
}

/// Inverse of [`varphi`] through the recursive principal-hook description.
pub fn varphi_inv_recursive(entries: &[i64], t: usize) -> Result<PairScDd> {
    if entries.len() != t {
        return Err(Error::BadLength {
            expected: t,
            got: entries.len(),
        });
    }
    PairScDd::from_principal_hooks(&principal_hooks_from_vector(entries, t))
}

/// All `n ∈ ℤᵗ` with `(t+1)‖n‖² + e·n ≤ max_weight`.
pub fn pair_vectors_up_to(t: usize, max_weight: usize) -> Vec<Vec<i64>> {
    let modulus = t as i64 + 1;
    let budget = max_weight as i64;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(t);
    fn walk(
        i: usize,
        t: usize,
        modulus: i64,
        remaining: i64,
        current: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if i > t {
            out.push(current.clone());
            return;
        }
        let ii = i as i64;
        // modulus·n² + i·n ≥ 0 for every integer n since i < modulus
        let bound = (remaining / modulus) + 1;
        for n in -bound..=bound {
            let cost = modulus * n * n + ii * n;
            if cost <= remaining {
                current.push(n);
                walk(i + 1, t, modulus, remaining - cost, current, out);
                current.pop();
            }
        }
    }
    walk(1, t, modulus, budget, &mut current, &mut out);
    out
}

/// The doubled distinct partition whose principal hooks are twice those of
/// the pair.
pub fn pair_to_dd(pair: &PairScDd) -> Partition {
    let halves = pair.principal_hooks();
    DistinctPartition::new(halves)
        .expect("principal hooks of a pair are distinct")
        .double()
}

/// Inverse of [`pair_to_dd`].
pub fn dd_to_pair(nu: &Partition) -> Result<PairScDd> {
    let base = nu
        .undouble()
        .ok_or_else(|| Error::NotDoubledDistinct(nu.to_string()))?;
    PairScDd::from_principal_hooks(base.parts())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_up_to, PartitionClass};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn fig5() -> PairScDd {
        PairScDd::new(p(&[7, 5, 3, 2, 2, 1, 1]), p(&[5, 3, 1, 1])).unwrap()
    }

    #[test]
    fn core_tests() {
        assert!(is_t_core(&p(&[]), 3));
        assert!(is_t_core(&p(&[7, 5, 3, 1, 1]), 3));
        assert!(!is_t_core(&p(&[3]), 3));
    }

    #[test]
    fn reductions() {
        let core = p(&[7, 5, 3, 1, 1]);
        assert_eq!(t_core_reduce(&core, 3), core);
        assert_eq!(t_core_reduce(&p(&[3]), 3), p(&[]));
        let lam = p(&[7, 6, 4, 2, 2, 1]);
        let outcomes = all_reduction_outcomes(&lam, 3);
        assert_eq!(outcomes.len(), 1);
        let reduced = t_core_reduce(&lam, 3);
        assert_eq!(outcomes.into_iter().next().unwrap(), reduced);
        assert_eq!(reduced, p(&[5, 3, 1, 1]));
        assert!(is_t_core(&reduced, 3));
        assert_eq!(reduced.weight() % 3, lam.weight() % 3);
    }

    #[test]
    fn rim_hook_routes_agree() {
        for q in enumerate_up_to(PartitionClass::All, 14) {
            for b in q.hooks() {
                assert_eq!(
                    remove_rim_hook(&q, b.row, b.col),
                    remove_rim_hook_beta(&q, b.row, b.hook),
                    "{q} {b:?}"
                );
            }
        }
    }

    #[test]
    fn gks_examples() {
        let v = gks_phi(&p(&[]), 3).unwrap();
        assert_eq!(v.entries, vec![0, 0, 0]);
        let v = gks_phi(&p(&[7, 5, 3, 1, 1]), 3).unwrap();
        assert_eq!(v.entries, vec![3, -2, -1]);
        assert_eq!(v.weight(), 17);
        let v = gks_phi(&p(&[7, 5, 3, 2, 2, 1, 1]), 3).unwrap();
        assert_eq!(v.entries, vec![3, 0, -3]);
        assert_eq!(
            gks_phi(&p(&[5, 3, 1, 1]), 3).unwrap().entries,
            vec![0, 2, -2]
        );
        assert!(matches!(gks_phi(&p(&[3]), 3), Err(Error::NotCore { .. })));
        assert!(matches!(
            gks_phi_inv(&[1, 0, 0], 3),
            Err(Error::NonZeroSum(1))
        ));
        assert_eq!(gks_phi_inv(&[3, -2, -1], 3).unwrap(), p(&[7, 5, 3, 1, 1]));
    }

    #[test]
    fn phi1_and_phi2_examples() {
        let v = phi1(&p(&[7, 5, 3, 2, 2, 1, 1]), 3).unwrap();
        assert_eq!(v.entries, vec![-3]);
        assert_eq!(v.weight(), 21);
        assert_eq!(3 * 9 + 2 * -3, 21);
        assert_eq!(phi1(&p(&[]), 4).unwrap().entries, vec![0, 0]);
        let v = phi2(&p(&[5, 3, 1, 1]), 3).unwrap();
        assert_eq!(v.entries, vec![-2]);
        assert_eq!(v.weight(), 10);
        assert_eq!(phi2(&p(&[]), 5).unwrap().entries, vec![0, 0]);
        assert!(matches!(phi1(&p(&[2]), 3), Err(Error::NotSelfConjugate(_))));
        assert!(matches!(
            phi2(&p(&[1]), 3),
            Err(Error::NotDoubledDistinct(_))
        ));
        assert!(matches!(phi2(&p(&[2]), 2), Err(Error::NotCore { .. })));
        assert_eq!(phi1_inv(&[-3], 3).unwrap(), p(&[7, 5, 3, 2, 2, 1, 1]));
        assert_eq!(phi2_inv(&[-2], 3).unwrap(), p(&[5, 3, 1, 1]));
    }

    #[test]
    fn linear_forms() {
        assert_eq!(sc_linear(4), vec![1, 3]);
        assert_eq!(sc_linear(5), vec![2, 4]);
        assert_eq!(dd_linear(4), vec![2]);
        assert_eq!(dd_linear(5), vec![1, 3]);
        assert!(dd_linear(2).is_empty());
        assert!(dd_linear(1).is_empty());
    }

    #[test]
    fn delta_profiles() {
        let d = delta_profile(&fig5(), 2);
        assert_eq!(d.delta, vec![13, 8, 7, 2, 1]);
        assert_eq!(d.delta_i, vec![8, 13]);
        let e = delta_profile(&PairScDd::empty(), 4);
        assert_eq!(e.delta_i, vec![-4, -3, -2, -1]);
        assert!(e.sigma.iter().all(|s| *s == Sign::Plus));
        let pair = PairScDd::new(p(&[]), p(&[3, 1])).unwrap();
        let d = delta_profile(&pair, 2);
        assert_eq!(d.delta, vec![4]);
        assert_eq!(d.delta_i, vec![4, -1]);
    }

    #[test]
    fn varphi_examples() {
        let v = varphi(&fig5(), 2).unwrap();
        assert_eq!(v.entries, vec![-2, -3]);
        assert_eq!(v.weight(), 31);
        let d = delta_profile(&fig5(), 2);
        assert_eq!(3 + d.delta_i[0], -(6 * -2 + 1));
        assert_eq!(3 + d.delta_i[1], -(6 * -3 + 2));
        assert_eq!(d.implied_vector(), vec![-2, -3]);
        assert_eq!(varphi_inv(&[0, 0], 2).unwrap(), PairScDd::empty());
        let pair = varphi_inv(&[1, 0], 2).unwrap();
        assert_eq!(pair, PairScDd::new(p(&[]), p(&[3, 1])).unwrap());
        assert_eq!(pair.weight(), 4);
        assert_eq!(varphi_inv_recursive(&[1, 0], 2).unwrap(), pair);
        assert_eq!(varphi_inv(&[-2, -3], 2).unwrap(), fig5());
        assert!(varphi(&PairScDd::new(p(&[]), p(&[2])).unwrap(), 1).is_err());
    }

    #[test]
    fn pair_and_dd() {
        let nu = pair_to_dd(&fig5());
        assert_eq!(nu.principal_hooks(), vec![26, 16, 14, 4, 2]);
        assert_eq!(nu.weight(), 62);
        assert_eq!(nu.durfee().sign, Sign::Minus);
        assert_eq!(dd_to_pair(&nu).unwrap(), fig5());
        assert_eq!(pair_to_dd(&PairScDd::empty()), p(&[]));
        let small = PairScDd::new(p(&[]), p(&[2])).unwrap();
        assert_eq!(pair_to_dd(&small), p(&[3, 1]));
        assert!(dd_to_pair(&p(&[1])).is_err());
    }

    #[test]
    fn pair_vector_budget() {
        let vs = pair_vectors_up_to(2, 4);
        for v in &vs {
            assert!(pair_weight(v, 2) <= 4);
        }
        assert!(vs.contains(&vec![1, 0]));
        assert!(vs.contains(&vec![0, 0]));
        assert_eq!(pair_vectors_up_to(0, 10), vec![Vec::<i64>::new()]);
    }
}
