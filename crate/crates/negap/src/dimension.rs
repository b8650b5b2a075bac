//! Hausdorff dimension machinery.
//!
//! Self-similar sets solve the ratio equation `Σ σ_i^α = 1`
//! ([`solve_moran_eq2`], [`dim_base_s`], [`dim_p_system`]). The restricted
//! nega set is not self-similar: its step ratios depend on the digit-sum
//! parity, so the rank-`k` pre-dimension `α_k` is the root of
//! `Σ_{rank-k} (d(Δ)/d(I₀̄))^α = 1`, evaluated exactly through a 2-state
//! parity transfer matrix ([`alpha_k_transfer`]); the dimension estimate is
//! the liminf of the `α_k` over a trailing window ([`dimension_trace`]).
//! The literal count-weighted product equation is implemented alongside as
//! [`alpha_k_product`] so both forms can be reported side by side. A grid
//! box-counting estimator over enumerated covers serves as an independent
//! numerical check ([`boxcount_estimate`]).

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::cylinder::{omega, Parity};
use crate::error::Result;
use crate::moran::{build_cover, Cover, Geometry};
use crate::params::SystemParams;
use crate::rational::{to_f64, Rational};
use crate::salem::ProbVector;

/// Root and diagnostics of a decreasing-function bisection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverResult {
    pub alpha: f64,
    pub residual: f64,
    pub iterations: u32,
}

const BISECT_TOL: f64 = 1e-13;
const MAX_ITER: u32 = 200;

/// Bisection root of a strictly decreasing `f` with `f(0) ≥ 0`, expanding
/// the upper bracket by doubling until `f` goes negative.
fn bisect_decreasing(f: impl Fn(f64) -> f64) -> SolverResult {
    let mut lo = 0.0f64;
    let f0 = f(0.0);
    if f0 <= 0.0 {
        return SolverResult {
            alpha: 0.0,
            residual: f0.abs(),
            iterations: 0,
        };
    }
    let mut hi = 1.0f64;
    let mut iterations = 0u32;
    while f(hi) > 0.0 {
        hi *= 2.0;
        iterations += 1;
        assert!(hi.is_finite() && hi < 1e9, "failed to bracket a root");
    }
    while hi - lo > BISECT_TOL && iterations < MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let alpha = 0.5 * (lo + hi);
    SolverResult {
        alpha,
        residual: f(alpha).abs(),
        iterations,
    }
}

/// Unique root `α₀` of `Σ σ_i^{α₀} = 1` for contraction ratios
/// `σ_i ∈ (0, 1)`. A single ratio degenerates to `α₀ = 0`.
pub fn solve_moran_eq2(ratios: &[Rational]) -> SolverResult {
    assert!(!ratios.is_empty(), "need at least one ratio");
    let r: Vec<f64> = ratios.iter().map(to_f64).collect();
    assert!(
        r.iter().all(|&x| 0.0 < x && x < 1.0),
        "ratios must lie strictly inside (0, 1)"
    );
    bisect_decreasing(move |a| r.iter().map(|x| x.powf(a)).sum::<f64>() - 1.0)
}

/// Dimension of the base-`s` restricted sets: root of
/// `Σ_{c ∈ Ā} (1/s)^{c·α} = 1`.
pub fn dim_base_s(params: &SystemParams) -> SolverResult {
    let s = params.s() as i64;
    let ratios: Vec<Rational> = params
        .abar()
        .map(|c| Rational::new(1.into(), num_bigint::BigInt::from(s).pow(c)))
        .collect();
    solve_moran_eq2(&ratios)
}

/// Dimension of the self-similar `S_(P,u)`: root of
/// `Σ_{c ∈ Ā} (p_c · p_u^{c−1})^α = 1`. Under the uniform vector the ratios
/// collapse to `s^{−c}` and this coincides with [`dim_base_s`] exactly.
pub fn dim_p_system(params: &SystemParams, pv: &ProbVector) -> SolverResult {
    let ratios: Vec<Rational> = params
        .abar()
        .map(|c| {
            let mut r = pv.p(c).clone();
            for _ in 0..c - 1 {
                r *= pv.p(params.u());
            }
            r
        })
        .collect();
    solve_moran_eq2(&ratios)
}

/// Counts of rank-`n` bases by the parity type of their last step.
///
/// `even`/`odd` count bases by digit-sum parity (`E_n + O_n = (l+m)^n`, with
/// `E_{n+1} = E_n·m + O_n·l` and `O_{n+1} = E_n·l + O_n·m`). The four step
/// types are indexed: 1 = odd parent & odd digit, 2 = even parent & odd
/// digit, 3 = odd parent & even digit, 4 = even parent & even digit;
/// `per_digit[j]` is the count for one digit of the matching parity and
/// `totals[j]` the count over all of them, so `totals[0] + totals[1] =
/// l(l+m)^{n−1}` and `totals[2] + totals[3] = m(l+m)^{n−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityCounts {
    pub n: u32,
    pub even: BigUint,
    pub odd: BigUint,
    pub per_digit: [BigUint; 4],
    pub totals: [BigUint; 4],
}

/// Parity-state counts after `n ≥ 1` steps.
pub fn parity_counts(params: &SystemParams, n: u32) -> ParityCounts {
    assert!(n >= 1);
    let l = BigUint::from(params.l());
    let m = BigUint::from(params.m());
    let mut e = BigUint::one();
    let mut o = BigUint::zero();
    for _ in 0..n - 1 {
        let ne = &e * &m + &o * &l;
        let no = &e * &l + &o * &m;
        e = ne;
        o = no;
    }
    // e, o now hold E_{n−1}, O_{n−1}: the parent counts of the n-th step
    let per_digit = [o.clone(), e.clone(), o.clone(), e.clone()];
    let totals = [&o * &l, &e * &l, &o * &m, &e * &m];
    let even_n = &e * &m + &o * &l;
    let odd_n = &e * &l + &o * &m;
    ParityCounts {
        n,
        even: even_n,
        odd: odd_n,
        per_digit,
        totals,
    }
}

/// The step ratios `ω(σ, c)` for both parity states, as exact rationals.
#[derive(Debug, Clone)]
pub struct StepRatios {
    /// `(c, ω(even, c))` for every `c ∈ Ā`.
    pub from_even: Vec<(u32, Rational)>,
    /// `(c, ω(odd, c))` for every `c ∈ Ā`.
    pub from_odd: Vec<(u32, Rational)>,
}

pub fn step_ratios(geom: &Geometry) -> StepRatios {
    let ratio = |parity: Parity| -> Vec<(u32, Rational)> {
        geom.params()
            .abar()
            .map(|c| (c, omega(geom.params(), geom.pv(), geom.tails(), parity, c)))
            .collect()
    };
    StepRatios {
        from_even: ratio(Parity::Even),
        from_odd: ratio(Parity::Odd),
    }
}

impl StepRatios {
    /// Smallest step ratio: the `c_* > 0` hypothesis of the Moran dimension
    /// theorems.
    pub fn c_star(&self) -> Rational {
        self.from_even
            .iter()
            .chain(self.from_odd.iter())
            .map(|(_, r)| r.clone())
            .min()
            .expect("nonempty")
    }
}

/// `Σ` over all rank-`k` restricted cylinders of `d(Δ)^α` (or of
/// `(d(Δ)/d(I₀̄))^α` when `normalized`), evaluated through the parity
/// transfer matrix: state vector over {even, odd} digit-sum parity, one
/// matrix application per rank.
pub fn transfer_sum(
    geom: &Geometry,
    ratios: &StepRatios,
    alpha: f64,
    k: u32,
    normalized: bool,
) -> f64 {
    let pow = |r: &Rational| to_f64(r).powf(alpha);
    let ee: f64 = ratios
        .from_even
        .iter()
        .filter(|(c, _)| c % 2 == 0)
        .map(|(_, r)| pow(r))
        .sum();
    let eo: f64 = ratios
        .from_even
        .iter()
        .filter(|(c, _)| c % 2 == 1)
        .map(|(_, r)| pow(r))
        .sum();
    let oo: f64 = ratios
        .from_odd
        .iter()
        .filter(|(c, _)| c % 2 == 0)
        .map(|(_, r)| pow(r))
        .sum();
    let oe: f64 = ratios
        .from_odd
        .iter()
        .filter(|(c, _)| c % 2 == 1)
        .map(|(_, r)| pow(r))
        .sum();
    let (mut even, mut odd) = (1.0f64, 0.0f64);
    for _ in 0..k {
        let next_even = even * ee + odd * oe;
        let next_odd = even * eo + odd * oo;
        even = next_even;
        odd = next_odd;
    }
    let mut total = even + odd;
    if !normalized {
        total *= to_f64(&geom.tails().s_bar.diameter()).powf(alpha);
    }
    total
}

/// Brute-force counterpart of [`transfer_sum`]: enumerate the rank-`k` cover
/// and sum the diameters directly.
pub fn brute_force_diameter_sum(
    geom: &Geometry,
    alpha: f64,
    k: u32,
    normalized: bool,
    cap: u128,
) -> Result<f64> {
    let cover = build_cover(geom, k, cap)?;
    let d0 = to_f64(&geom.tails().s_bar.diameter());
    Ok(cover
        .entries
        .iter()
        .map(|e| {
            let d = to_f64(&e.interval.diameter());
            if normalized {
                (d / d0).powf(alpha)
            } else {
                d.powf(alpha)
            }
        })
        .sum())
}

/// The rank-`k` pre-dimension: the root of
/// `Σ_{rank-k} (d(Δ)/d(I₀̄))^α = 1`. Under the uniform vector every step
/// ratio is `s^{−c}` and the root is independent of `k`, equal to the
/// [`dim_base_s`] value.
pub fn alpha_k_transfer(geom: &Geometry, ratios: &StepRatios, k: u32) -> SolverResult {
    assert!(k >= 1);
    bisect_decreasing(|a| transfer_sum(geom, ratios, a, k, true) - 1.0)
}

/// Root of the literal count-weighted product equation
/// `(Σ_{c₁} ω(even,c₁)^α) · Π_{i=2}^k Σ_{c} [O_{i−1} ω(odd,c)^α +
/// E_{i−1} ω(even,c)^α] = 1`, all factors sharing the single exponent `α`.
/// The absolute counts make the factors grow with `i`, so the root drifts;
/// it is reported next to [`alpha_k_transfer`], not used as the dimension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductFormResult {
    pub alpha: f64,
    pub residual: f64,
    pub in_unit_interval: bool,
}

pub fn alpha_k_product(geom: &Geometry, ratios: &StepRatios, k: u32) -> ProductFormResult {
    assert!(k >= 1);
    // parent-state counts E_{i−1}, O_{i−1} for i = 2..=k
    let mut parent_counts: Vec<(f64, f64)> = Vec::new();
    {
        let counts = |i: u32| {
            let pc = parity_counts(geom.params(), i);
            (
                pc.even.to_f64().unwrap_or(f64::INFINITY),
                pc.odd.to_f64().unwrap_or(f64::INFINITY),
            )
        };
        for i in 2..=k {
            parent_counts.push(counts(i - 1));
        }
    }
    // log-space evaluation keeps the count-weighted product finite
    let log_f = |a: f64| -> f64 {
        let pow = |r: &Rational| to_f64(r).powf(a);
        let first: f64 = ratios.from_even.iter().map(|(_, r)| pow(r)).sum();
        let mut total = first.ln();
        for &(e_cnt, o_cnt) in &parent_counts {
            let factor: f64 = ratios
                .from_even
                .iter()
                .map(|(_, r)| e_cnt * pow(r))
                .chain(ratios.from_odd.iter().map(|(_, r)| o_cnt * pow(r)))
                .sum();
            total += factor.ln();
        }
        total
    };
    let sol = bisect_decreasing(log_f);
    ProductFormResult {
        alpha: sol.alpha,
        residual: sol.residual,
        in_unit_interval: sol.alpha <= 1.0 + BISECT_TOL,
    }
}

/// The `α_k` sequence with liminf/limsup estimates over a trailing window
/// and the hypothesis checks of the underlying dimension theorems.
#[derive(Debug, Clone)]
pub struct DimensionTrace {
    pub alphas: Vec<f64>,
    pub residuals: Vec<f64>,
    pub liminf_est: f64,
    pub limsup_est: f64,
    /// Trailing-window width used for the liminf/limsup estimates.
    pub window: u32,
    /// `c_* = min ω(σ, c)`; the dimension formula needs `c_* > 0`.
    pub c_star: f64,
    /// Branching factor `|Ā|`, finite by construction.
    pub branching: u32,
    /// `Σ d(Δ)^{α_*}` at the largest computed rank — the quantity whose
    /// positive finite liminf characterizes an s-set.
    pub sset_sum_at_liminf: f64,
}

/// Compute `α_1..α_{k_max}` via the transfer matrix; estimates take the min
/// and max over the trailing `window` entries (clamped to `k_max`).
pub fn dimension_trace(geom: &Geometry, k_max: u32, window: u32) -> DimensionTrace {
    assert!(k_max >= 2, "need at least two ranks to estimate a trend");
    let ratios = step_ratios(geom);
    let mut alphas = Vec::with_capacity(k_max as usize);
    let mut residuals = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        let sol = alpha_k_transfer(geom, &ratios, k);
        alphas.push(sol.alpha);
        residuals.push(sol.residual);
    }
    let w = window.clamp(1, k_max) as usize;
    let tail = &alphas[alphas.len() - w..];
    let liminf_est = tail.iter().cloned().fold(f64::INFINITY, f64::min);
    let limsup_est = tail.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let c_star = to_f64(&ratios.c_star());
    let sset = transfer_sum(geom, &ratios, liminf_est, k_max, false);
    DimensionTrace {
        alphas,
        residuals,
        liminf_est,
        limsup_est,
        window: w as u32,
        c_star,
        branching: geom.params().abar_len() as u32,
        sset_sum_at_liminf: sset,
    }
}

/// Box-counting fit: `N(ε)` over a geometric ladder of scales and the
/// least-squares slope of `log N` against `log(1/ε)`.
#[derive(Debug, Clone)]
pub struct BoxCountEstimate {
    pub slope: f64,
    pub stderr: f64,
    /// `(ε, N(ε))` pairs actually used.
    pub points: Vec<(f64, u64)>,
    pub window_decades: f64,
    /// Set when the usable scaling window spans fewer than two decades.
    pub narrow_window: bool,
}

/// Count the ε-grid boxes hit by the cover intervals. Endpoints are exact,
/// so a box `[kε, (k+1)ε)` is hit exactly when `⌊lo/ε⌋ ≤ k ≤ ⌊hi/ε⌋`.
pub fn box_count(cover: &Cover, eps: &Rational) -> u64 {
    let mut count: u64 = 0;
    let mut prev_last: Option<num_bigint::BigInt> = None;
    for entry in &cover.entries {
        let mut k0 = (&entry.interval.lo / eps).floor().to_integer();
        let k1 = (&entry.interval.hi / eps).floor().to_integer();
        if let Some(prev) = &prev_last {
            if &k0 <= prev {
                k0 = prev + 1;
            }
        }
        if k0 <= k1 {
            count += (&k1 - &k0 + 1u32).to_u64().expect("box count fits in u64");
            prev_last = Some(k1);
        }
    }
    count
}

/// A geometric ladder of scales from a quarter of the hull diameter down to
/// twice the largest cover interval (halving each step, at most `max_points`).
pub fn default_scales(cover: &Cover, max_points: usize) -> Vec<Rational> {
    let hull = cover.hull().expect("cover is nonempty");
    let max_len = cover
        .entries
        .iter()
        .map(|e| e.interval.diameter())
        .max()
        .expect("cover is nonempty");
    let two = Rational::from_integer(2.into());
    let floor = &two * &max_len;
    let mut eps = hull.diameter() / Rational::from_integer(4.into());
    let mut scales = Vec::new();
    while scales.len() < max_points && eps > floor {
        scales.push(eps.clone());
        eps /= &two;
    }
    while scales.len() < 3 {
        scales.push(eps.clone());
        eps /= &two;
    }
    scales
}

pub fn boxcount_estimate(cover: &Cover, scales: &[Rational]) -> BoxCountEstimate {
    assert!(scales.len() >= 2, "need at least two scales to fit a slope");
    let points: Vec<(f64, u64)> = scales
        .iter()
        .map(|e| (to_f64(e), box_count(cover, e)))
        .collect();
    let xs: Vec<f64> = points.iter().map(|(e, _)| (1.0 / e).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|(_, n)| (*n as f64).ln()).collect();
    let n = xs.len() as f64;
    let xbar = xs.iter().sum::<f64>() / n;
    let ybar = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - xbar).powi(2)).sum();
    let sxy: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - xbar) * (y - ybar))
        .sum();
    let slope = sxy / sxx;
    let resid2: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| {
            let fit = ybar + slope * (x - xbar);
            (y - fit).powi(2)
        })
        .sum();
    let dof = (xs.len().max(3) - 2) as f64;
    let stderr = (resid2 / dof / sxx).sqrt();
    let e_max = points
        .iter()
        .map(|(e, _)| *e)
        .fold(f64::NEG_INFINITY, f64::max);
    let e_min = points.iter().map(|(e, _)| *e).fold(f64::INFINITY, f64::min);
    let window_decades = (e_max / e_min).log10();
    BoxCountEstimate {
        slope,
        stderr,
        points,
        window_decades,
        narrow_window: window_decades < 2.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn eq2_classical_roots() {
        // two half-scale pieces tile the line
        let sol = solve_moran_eq2(&[rat(1, 2), rat(1, 2)]);
        assert!((sol.alpha - 1.0).abs() < 1e-11, "alpha = {}", sol.alpha);
        // classical Cantor set
        let sol = solve_moran_eq2(&[rat(1, 3), rat(1, 3)]);
        assert!((sol.alpha - 2f64.ln() / 3f64.ln()).abs() < 1e-11);
        // single ratio degenerates to zero
        let sol = solve_moran_eq2(&[rat(1, 4)]);
        assert_eq!(sol.alpha, 0.0);
    }

    #[test]
    fn base_s_dim_matches_cubic_root() {
        // s=4, u=0: x + x² + x³ = 1 in x = 4^{−α}
        let params = SystemParams::new(4, 0).unwrap();
        let sol = dim_base_s(&params);
        let x = bisect_decreasing(|t| {
            // decreasing in t after the substitution x = 4^{−t}
            let x = 4f64.powf(-t);
            x + x * x + x * x * x - 1.0
        });
        assert!((sol.alpha - x.alpha).abs() < 1e-10);
        assert!(sol.residual < 1e-10);

        // s=4, u=1: y² + y³ = 1
        let params = SystemParams::new(4, 1).unwrap();
        let sol = dim_base_s(&params);
        assert!((sol.alpha - 0.2028).abs() < 2e-4, "alpha = {}", sol.alpha);
    }

    #[test]
    fn base_s_dim_monotone_in_digit_set() {
        // removing a digit strictly lowers the dimension
        let full = solve_moran_eq2(&[rat(1, 4), rat(1, 16), rat(1, 64)]);
        let less = solve_moran_eq2(&[rat(1, 4), rat(1, 16)]);
        assert!(less.alpha < full.alpha);
    }

    #[test]
    fn p_system_uniform_equals_base_s() {
        for (s, u) in [(4, 0), (5, 2), (6, 5)] {
            let params = SystemParams::new(s, u).unwrap();
            let pv = ProbVector::uniform(s);
            let a5 = dim_base_s(&params);
            let a7 = dim_p_system(&params, &pv);
            assert!((a5.alpha - a7.alpha).abs() < 1e-12);
            assert!(0.0 < a7.alpha && a7.alpha < 1.0);
        }
    }

    #[test]
    fn parity_count_closed_forms() {
        // third and fourth step closed forms, symbolically in (l, m)
        for (s, u) in [(5, 1), (6, 1), (7, 1)] {
            let params = SystemParams::new(s, u).unwrap();
            let (l, m) = (params.l() as u128, params.m() as u128);
            let pc3 = parity_counts(&params, 3);
            let expect3 = [
                2 * l * l * m,
                l * (l * l + m * m),
                2 * l * m * m,
                m * (l * l + m * m),
            ];
            for (j, expected) in expect3.iter().enumerate() {
                assert_eq!(pc3.totals[j], BigUint::from(*expected));
            }
            let pc4 = parity_counts(&params, 4);
            let expect4 = [
                l * l * l * l + 3 * l * l * m * m,
                l * m * m * m + 3 * l * l * l * m,
                l * l * l * m + 3 * l * m * m * m,
                m * m * m * m + 3 * l * l * m * m,
            ];
            for (j, expected) in expect4.iter().enumerate() {
                assert_eq!(pc4.totals[j], BigUint::from(*expected));
            }
            // family totals: l(l+m)^{n-1} odd-step and m(l+m)^{n-1} even-step
            let lm = l + m;
            for n in 1..6u32 {
                let pc = parity_counts(&params, n);
                let pow = lm.pow(n - 1);
                assert_eq!(&pc.totals[0] + &pc.totals[1], BigUint::from(l * pow));
                assert_eq!(&pc.totals[2] + &pc.totals[3], BigUint::from(m * pow));
                assert_eq!(&pc.even + &pc.odd, BigUint::from(lm.pow(n)));
            }
        }
        // l = m = 2 collapses step 3 to all-equal counts 16
        let params = SystemParams::new(6, 1).unwrap();
        let pc = parity_counts(&params, 3);
        for j in 0..4 {
            assert_eq!(pc.totals[j], BigUint::from(16u32));
        }
    }
}
