//! Hook-product sums over partitions and their comparison with eta powers.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::compact::compact_ops;
use crate::cores::{
    delta_profile_of, pair_to_dd, pair_vectors_up_to, varphi, varphi_inv, PairScDd,
};
use crate::error::{Error, Result};
use crate::macdonald::{macdonald_constant, Family};
use crate::partition::{enumerate, enumerate_up_to, Partition, PartitionClass, Sign};
use crate::report::{Check, Report};
use crate::series::{integer, pochhammer_inf, rational, Rational, Series};

fn sign_rational(s: Sign) -> Rational {
    integer(s.to_i64())
}

/// `∏_{h ∈ H(λ)} (1 - z/h²)`.
pub fn no_weight(p: &Partition, z: i64) -> Rational {
    p.hook_lengths().iter().fold(Rational::one(), |acc, &h| {
        let h = h as i64;
        acc * (Rational::one() - rational(z, h * h))
    })
}

/// `Σ_{|λ| ≤ N} x^{|λ|} ∏_{h ∈ H(λ)} (1 - z/h²)`.
pub fn no_rhs(z: i64, order: usize) -> Series {
    let coeffs = (0..=order)
        .map(|n| {
            enumerate(PartitionClass::All, n)
                .iter()
                .fold(Rational::zero(), |acc, p| acc + no_weight(p, z))
        })
        .collect();
    Series::new(Rational::zero(), coeffs)
}

/// `∏_{h ∈ H(ν)} (1 - (2t+2)/(h ε_h))` for a doubled distinct `ν`.
pub fn dd_hook_product(nu: &Partition, t: i64) -> Rational {
    let m = 2 * t + 2;
    nu.hooks().iter().fold(Rational::one(), |acc, b| {
        let signed = b.hook as i64 * b.epsilon.to_i64();
        acc * (Rational::one() - rational(m, signed))
    })
}

/// `Σ_{ν ∈ DD, |ν| ≤ 2N} δ_ν x^{|ν|/2} ∏_{h ∈ H(ν)} (1 - (2t+2)/(h ε_h))`.
pub fn type_c_rhs(t: i64, order: usize) -> Series {
    let coeffs = (0..=order)
        .map(|n| {
            enumerate(PartitionClass::DoubledDistinct, 2 * n)
                .iter()
                .fold(Rational::zero(), |acc, nu| {
                    acc + sign_rational(nu.durfee().sign) * dd_hook_product(nu, t)
                })
        })
        .collect();
    Series::new(Rational::zero(), coeffs)
}

/// `Σ_{λ distinct} (-1)^{#parts} x^{|λ|}`.
pub fn distinct_signed_sum(order: usize) -> Series {
    let coeffs = (0..=order)
        .map(|n| {
            let total: i64 = enumerate(PartitionClass::Distinct, n)
                .iter()
                .map(|d| Sign::parity(d.len()).to_i64())
                .sum();
            integer(total)
        })
        .collect();
    Series::new(Rational::zero(), coeffs)
}

/// The principal-hook product `Q` of a pair: over each `h ∈ Δ`,
/// `(1 - (2t+2)/h)(1 - (t+1)/h) ∏_{j=1}^{h-1} (1 - ((2t+2)/(h + τ_j j))²)`
/// with `τ_j = +1` when `j ∈ Δ` and `-1` otherwise.
pub fn pair_q(pair: &PairScDd, t: i64) -> Rational {
    delta_q(&pair.principal_hooks(), t)
}

fn delta_q(delta: &[usize], t: i64) -> Rational {
    let members: BTreeSet<usize> = delta.iter().copied().collect();
    let big = 2 * t + 2;
    let mut q = Rational::one();
    for &h in delta {
        let hi = h as i64;
        q *= Rational::one() - rational(big, hi);
        q *= Rational::one() - rational(t + 1, hi);
        if q.is_zero() {
            return q;
        }
        for j in 1..h {
            let denom = if members.contains(&j) {
                hi + j as i64
            } else {
                hi - j as i64
            };
            let r = rational(big, denom);
            q *= Rational::one() - &r * &r;
            if q.is_zero() {
                return q;
            }
        }
    }
    q
}

/// All (self-conjugate, doubled distinct) pairs of total weight `n`.
pub fn pairs_of_weight(n: usize) -> Vec<PairScDd> {
    let mut out = Vec::new();
    for a in 0..=n {
        let dds = enumerate(PartitionClass::DoubledDistinct, n - a);
        if dds.is_empty() {
            continue;
        }
        for lambda in enumerate(PartitionClass::SelfConjugate, a) {
            for mu in &dds {
                out.push(PairScDd::new(lambda.clone(), mu.clone()).expect("enumerated classes"));
            }
        }
    }
    out
}

/// `Σ_{(λ,μ)} δ_λ δ_μ x^{|λ|+|μ|} Q(λ, μ)`; with `cores_only` the sum is
/// restricted to pairs of `(t+1)`-cores (requires `t ≥ 1`).
pub fn pair_rhs(t: i64, order: usize, cores_only: bool) -> Series {
    assert!(!cores_only || t >= 1, "core restriction needs t >= 1");
    let coeffs = (0..=order)
        .map(|n| {
            pairs_of_weight(n)
                .iter()
                .filter(|pair| !cores_only || pair.is_core_pair(t as usize + 1))
                .fold(Rational::zero(), |acc, pair| {
                    acc + sign_rational(pair.sign()) * pair_q(pair, t)
                })
        })
        .collect();
    Series::new(Rational::zero(), coeffs)
}

/// Checks that `Q` of a pair equals the hook product of its doubled
/// distinct image, with weights doubling and signs matching.
pub fn bij_product_check(pair: &PairScDd, t: i64) -> Report {
    let nu = pair_to_dd(pair);
    let mut report = Report::new(format!("pair-product {pair} -> {nu} t={t}"));
    report.push(Check::rational(
        "Q equals hook product",
        &pair_q(pair, t),
        &dd_hook_product(&nu, t),
    ));
    report.push(Check::new("weight doubles", 2 * pair.weight(), nu.weight()));
    report.push(Check::new("sign", pair.sign(), nu.durfee().sign));
    report
}

/// `Σ_{ν ∈ DD, |ν| = 2n} 1/∏_{h ∈ H(ν)} h`.
pub fn symplectic_hook_sum(n: usize) -> Rational {
    enumerate(PartitionClass::DoubledDistinct, 2 * n)
        .iter()
        .fold(Rational::zero(), |acc, nu| {
            let prod: BigInt = nu.hook_lengths().iter().map(|&h| BigInt::from(h)).product();
            acc + Rational::new(BigInt::one(), prod)
        })
}

/// `1/(2ⁿ n!)`.
pub fn symplectic_target(n: usize) -> Rational {
    let mut d = BigInt::one();
    for k in 1..=n {
        d *= 2 * k;
    }
    Rational::new(BigInt::one(), d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenfuncMode {
    Enumerate,
    Product,
}

/// Generating function of pairs of `m`-cores (self-conjugate, doubled
/// distinct) by total weight, `m = t + 1 ≥ 1`.
///
/// `Enumerate` walks the vectors of `ℤᵗ` within the weight budget and maps
/// them back through the pair bijection; `Product` uses the closed form
/// `(q²;q²)/(q;q) · (q^m;q^m) · (q^{2m};q^{2m})^{t-1}`.
pub fn genfunc_pair(modulus: usize, order: usize, mode: GenfuncMode) -> Result<Series> {
    if modulus == 0 {
        return Err(Error::BadModulus { min: 1, got: 0 });
    }
    let t = modulus - 1;
    match mode {
        GenfuncMode::Enumerate => {
            let mut counts = vec![0i64; order + 1];
            for v in pair_vectors_up_to(t, order) {
                let w = varphi_inv(&v, t)?.weight();
                if w <= order {
                    counts[w] += 1;
                }
            }
            Ok(Series::new(
                Rational::zero(),
                counts.into_iter().map(integer).collect(),
            ))
        }
        GenfuncMode::Product => {
            let base = pochhammer_inf(2, order)
                .mul(&pochhammer_inf(1, order).inverse()?)
                .mul(&pochhammer_inf(modulus, order));
            let tail = pochhammer_inf(2 * modulus, order).pow(t as i64 - 1)?;
            Ok(base.mul(&tail))
        }
    }
}

/// Outcome of the principal-hook ratio and product checks for one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaRatioOutcome {
    pub report: Report,
    /// Whether the three extra members `h-t-1, h-2t-2, 2h-2t-2` make the
    /// class-maximum set of a compact set with the expected positives.
    pub minus_reading_holds: Option<bool>,
    /// The same with `h-t-1, h-2t+2, 2h-2t+2`.
    pub plus_reading_holds: Option<bool>,
}

fn nonzero(value: Rational, what: &str) -> Result<Rational> {
    if value.is_zero() {
        Err(Error::ZeroDenominator(what.to_string()))
    } else {
        Ok(value)
    }
}

/// `∏_i σ_i(t+1+Δ_i) ∏_{i<j} ((t+1+Δ_i)² − (t+1+Δ_j)²)`.
fn delta_products(delta: &[usize], t: usize) -> Rational {
    let profile = delta_profile_of(delta, t);
    let m = t as i64 + 1;
    let shifted: Vec<i64> = profile.delta_i.iter().map(|d| m + d).collect();
    let mut acc = Rational::one();
    for (s, sigma) in shifted.iter().zip(&profile.sigma) {
        acc *= integer(sigma.to_i64() * s);
    }
    for i in 0..shifted.len() {
        for j in i + 1..shifted.len() {
            acc *= integer(shifted[i] * shifted[i] - shifted[j] * shifted[j]);
        }
    }
    acc
}

/// Whether `members` is the set of class maxima of a compact set whose
/// positive part is `{h + τ_j j : 1 ≤ j < h}`.
fn is_expected_maxima(members: &[i64], h: i64, delta: &BTreeSet<usize>, t: usize) -> bool {
    let m = 2 * t as i64 + 2;
    let as_set: BTreeSet<i64> = members.iter().copied().collect();
    if as_set.len() != members.len() {
        return false;
    }
    let mut generated: BTreeSet<i64> = (1..m).map(|k| -k).collect();
    for &top in &as_set {
        if top >= 1 {
            let mut a = top;
            while a >= 1 {
                generated.insert(a);
                a -= m;
            }
        } else if top <= -m {
            return false;
        }
    }
    let (compact, maxima) = compact_ops(&generated, t);
    let expected_positives: BTreeSet<i64> = (1..h)
        .map(|j| {
            if delta.contains(&(j as usize)) {
                h + j
            } else {
                h - j
            }
        })
        .collect();
    let positives: BTreeSet<i64> = generated.iter().copied().filter(|&a| a > 0).collect();
    compact && maxima == as_set && positives == expected_positives
}

/// Verifies, for a pair of `(t+1)`-cores, the ratio identity obtained by
/// removing the largest principal hook `h`, the description of the
/// compact set attached to that step, and the closed product identity
/// `∏ vᵢ ∏_{i<j} (vᵢ² − v_j²) = δ_λ δ_μ / c · Q` with
/// `vᵢ = (2t+2) nᵢ + i`, `n = varphi(λ, μ)`.
pub fn lemma_ratio_check(pair: &PairScDd, t: usize) -> Result<LemmaRatioOutcome> {
    let n = varphi(pair, t)?;
    let ti = t as i64;
    let m = ti + 1;
    let big = 2 * m;
    let delta = pair.principal_hooks();
    let members: BTreeSet<usize> = delta.iter().copied().collect();
    let mut report = Report::new(format!("lemma-ratio {pair} t={t}"));
    let mut minus_reading_holds = None;
    let mut plus_reading_holds = None;

    if let Some(&h11) = delta.first() {
        let h = h11 as i64;
        let profile = delta_profile_of(&delta, t);
        let hits: Vec<usize> = (0..t).filter(|&k| profile.delta_i[k] == h).collect();
        report.push(Check::new(
            "largest hook sits in exactly one class",
            1,
            hits.len(),
        ));
        if hits.len() == 1 {
            let i0 = hits[0];
            let reduced = &delta[1..];
            let lhs =
                delta_products(&delta, t) / nonzero(delta_products(reduced, t), "reduced product")?;

            let mut rhs = (Rational::one() - rational(big, h)) * (Rational::one() - rational(m, h));
            rhs *= rational(h + m, h - m);
            rhs *= nonzero(rational(h, 1), "h")? / nonzero(integer(h - big), "h-2t-2")?;
            rhs *= rational(2 * h, 2 * h - big);
            let others: Vec<i64> = (0..t)
                .filter(|&k| k != i0)
                .map(|k| profile.delta_i[k])
                .collect();
            for &d in &others {
                let num = integer((h + d + big) * (h - d));
                let den = nonzero(integer((h + d) * (h - d - big)), "ratio factor")?;
                rhs *= num / den;
            }
            report.push(Check::rational("hook removal ratio", &rhs, &lhs));

            let mut base: Vec<i64> = others.iter().flat_map(|&d| [h + d, h - d - big]).collect();
            base.push(h - m);
            let minus = [base.clone(), vec![h - big, 2 * h - big]].concat();
            let plus = [base, vec![h - 2 * ti + 2, 2 * h - 2 * ti + 2]].concat();
            let minus_ok = is_expected_maxima(&minus, h, &members, t);
            minus_reading_holds = Some(minus_ok);
            plus_reading_holds = Some(is_expected_maxima(&plus, h, &members, t));
            report.push(Check::new(
                "class maxima of the removal step",
                true,
                minus_ok,
            ));
        }
    }

    let v: Vec<i64> = n
        .entries
        .iter()
        .enumerate()
        .map(|(k, &nk)| big * nk + k as i64 + 1)
        .collect();
    let mut lhs = Rational::one();
    for &x in &v {
        lhs *= integer(x);
    }
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            lhs *= integer(v[i] * v[i] - v[j] * v[j]);
        }
    }
    let c = macdonald_constant(Family::C, t);
    let rhs = sign_rational(pair.sign()) / c * pair_q(pair, ti);
    report.push(Check::rational(
        "vector product equals signed Q",
        &rhs,
        &lhs,
    ));

    Ok(LemmaRatioOutcome {
        report,
        minus_reading_holds,
        plus_reading_holds,
    })
}

/// All pairs of `(t+1)`-cores with weight at most `max_weight`.
pub fn core_pairs_up_to(t: usize, max_weight: usize) -> Vec<PairScDd> {
    pair_vectors_up_to(t, max_weight)
        .iter()
        .map(|v| varphi_inv(v, t).expect("vector length is t"))
        .filter(|pair| pair.weight() <= max_weight)
        .collect()
}

/// All (self-conjugate, doubled distinct) pairs of weight at most `max`.
pub fn pairs_up_to(max_weight: usize) -> Vec<PairScDd> {
    let scs = enumerate_up_to(PartitionClass::SelfConjugate, max_weight);
    let dds = enumerate_up_to(PartitionClass::DoubledDistinct, max_weight);
    let mut out = Vec::new();
    for lambda in &scs {
        for mu in &dds {
            if lambda.weight() + mu.weight() <= max_weight {
                out.push(PairScDd::new(lambda.clone(), mu.clone()).expect("enumerated classes"));
            }
        }
    }
    out
}
