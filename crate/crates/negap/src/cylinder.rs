//! Exact interval geometry of cylinders in the four systems:
//!
//! * `P` / `NegP`: unrestricted bases over the full alphabet; siblings tile
//!   the parent exactly.
//! * `RestrictedP` / `RestrictedNegP`: bases over `Ā`, where each base digit
//!   stands for a whole `u`-run block; siblings are separated by strict gaps.
//!
//! Restricted nega cylinders resolve through the decomposition
//! `Δ = τ_n + W_n · T`, where `τ_n` is the value of the even-complemented
//! expanded prefix with a zero tail, `W_n` the product of the parity-twisted
//! probabilities over the expanded prefix, and `T` the tail set (`S̄` when the
//! digit sum is even, `S̲` when odd, both delivered by [`crate::moran`]).

use num_traits::One;

use crate::digits::{expand_blocks, BlockSeq, DigitSeq};
use crate::error::{Error, Result};
use crate::params::SystemParams;
use crate::rational::Rational;
use crate::salem::{eval_neg_p, eval_p, ProbVector};

/// A closed interval with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn diameter(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Strict gap between two disjoint intervals (`None` if they touch or
    /// overlap).
    pub fn gap_to(&self, other: &Interval) -> Option<Rational> {
        if self.hi < other.lo {
            Some(&other.lo - &self.hi)
        } else if other.hi < self.lo {
            Some(&self.lo - &other.hi)
        } else {
            None
        }
    }
}

/// Which numeral system a cylinder base lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CylinderSystem {
    /// `Δ^P` over the full alphabet.
    P,
    /// `Δ^{−P}` over the full alphabet.
    NegP,
    /// Block cylinders of `S_(P,u)` — bases over `Ā`.
    RestrictedP,
    /// Block cylinders of `S_(−P,u)` — bases over `Ā`.
    RestrictedNegP,
}

impl CylinderSystem {
    pub fn parse(tag: &str) -> Result<Self> {
        match tag {
            "P" => Ok(CylinderSystem::P),
            "negP" => Ok(CylinderSystem::NegP),
            "SPu" => Ok(CylinderSystem::RestrictedP),
            "SnegPu" => Ok(CylinderSystem::RestrictedNegP),
            other => Err(Error::ParseWord(format!(
                "unknown cylinder system {other:?} (expected P, negP, SPu, SnegPu)"
            ))),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            CylinderSystem::P => "P",
            CylinderSystem::NegP => "negP",
            CylinderSystem::RestrictedP => "SPu",
            CylinderSystem::RestrictedNegP => "SnegPu",
        }
    }
}

/// Tail-set endpoints needed by the restricted-cylinder formulas: the hulls
/// of `S̄_(P,u)` (even-complement words), `S̲_(P,u)` (odd-complement words)
/// and `S_(P,u)` (plain run words).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailSets {
    pub s_bar: Interval,
    pub s_under: Interval,
    pub s_plain: Interval,
}

/// `Δ^P` cylinder: `[eval_p(base·0̄), eval_p(base·(s−1)̄)]`, of diameter
/// `Π p_{c_j}`.
pub fn interval_p(pv: &ProbVector, base: &[u32]) -> Interval {
    let lo = eval_p(pv, &DigitSeq::terminating(base.to_vec()));
    let hi_word = DigitSeq::new(base.to_vec(), vec![pv.s() - 1]);
    let hi = eval_p(pv, &hi_word);
    Interval::new(lo, hi)
}

/// `Δ^{−P}` cylinder, rank `n = base.len()`: the extremal tails alternate
/// with the rank parity — for odd `n` the infimum tail is `(s−1)0(s−1)0…`
/// and the supremum tail `0(s−1)0(s−1)…`, for even `n` the reverse. The
/// diameter is `Π p̃(c_j, j)`.
pub fn interval_neg_p(pv: &ProbVector, base: &[u32]) -> Interval {
    let n = base.len();
    let top = pv.s() - 1;
    let (lo_tail, hi_tail) = if n % 2 == 1 {
        (vec![top, 0], vec![0, top])
    } else {
        (vec![0, top], vec![top, 0])
    };
    let lo = eval_neg_p(pv, &DigitSeq::new(base.to_vec(), lo_tail));
    let hi = eval_neg_p(pv, &DigitSeq::new(base.to_vec(), hi_tail));
    Interval::new(lo, hi)
}

/// Parity-twisted probability of the marker digit at absolute position `i`:
/// `p_u` at odd positions, `p_{s−1−u}` at even ones.
pub fn p_tilde_u(params: &SystemParams, pv: &ProbVector, i: usize) -> Rational {
    pv.p_tilde(params.u(), i).clone()
}

/// The scale factor `W_n` of a restricted nega cylinder: the product of
/// `p̃(w_j, j)` over the expanded prefix `w = expand(base)` — equivalently
/// `Π_j p̃(c_j, N_j)` times the `p̃_u` product over the run positions
/// `{1, …, N−1} \ {N_1, …, N_{n−1}}`, with `N_j` the partial block sums.
pub fn restricted_neg_weight(params: &SystemParams, pv: &ProbVector, base: &[u32]) -> Rational {
    let mut w = Rational::one();
    let mut pos = 0usize;
    for &c in base {
        for _ in 0..c - 1 {
            pos += 1;
            w *= pv.p_tilde(params.u(), pos);
        }
        pos += 1;
        w *= pv.p_tilde(c, pos);
    }
    w
}

/// `τ_n`: the value of the even-complemented expanded prefix padded with
/// zeros, i.e. `eval_p` of `complement_even(expand(base))` truncated to the
/// prefix with a zero tail.
pub fn restricted_neg_tau(
    params: &SystemParams,
    pv: &ProbVector,
    base: &[u32],
) -> Result<Rational> {
    let expanded = expand_blocks(params, &BlockSeq::finite(base.to_vec()))?;
    let tilde: Vec<u32> = expanded
        .prefix()
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            if (i + 1) % 2 == 0 {
                params.complement(d)
            } else {
                d
            }
        })
        .collect();
    Ok(eval_p(pv, &DigitSeq::terminating(tilde)))
}

/// Restricted nega cylinder interval: `τ_n + W_n · [tail set]`, with the
/// tail set chosen by the parity of the digit sum (`S̄` even, `S̲` odd).
pub fn interval_restricted_neg_p(
    params: &SystemParams,
    pv: &ProbVector,
    tails: &TailSets,
    base: &[u32],
) -> Result<Interval> {
    for (i, &c) in base.iter().enumerate() {
        if !params.contains_abar(c) {
            return Err(Error::NotRunStructured {
                position: i + 1,
                reason: format!("base digit {c} is not in the restricted alphabet"),
            });
        }
    }
    let tau = restricted_neg_tau(params, pv, base)?;
    let w = restricted_neg_weight(params, pv, base);
    let digit_sum: u32 = base.iter().sum();
    let tail = if digit_sum % 2 == 0 {
        &tails.s_bar
    } else {
        &tails.s_under
    };
    Ok(Interval::new(
        &tau + &w * &tail.lo,
        tau.clone() + w * &tail.hi,
    ))
}

/// Restricted `Δ^P` block cylinder: self-similar, no parity —
/// `τ^P + W^P · [S_(P,u)]` with `W^P = Π p_{c_j} p_u^{c_j−1}`.
pub fn interval_restricted_p(
    params: &SystemParams,
    pv: &ProbVector,
    tails: &TailSets,
    base: &[u32],
) -> Result<Interval> {
    let expanded = expand_blocks(params, &BlockSeq::finite(base.to_vec()))?;
    let tau = eval_p(pv, &DigitSeq::terminating(expanded.prefix().to_vec()));
    let mut w = Rational::one();
    for &d in expanded.prefix() {
        w *= pv.p(d);
    }
    let tail = &tails.s_plain;
    Ok(Interval::new(
        &tau + &w * &tail.lo,
        tau.clone() + w * &tail.hi,
    ))
}

/// `d(child)/d(parent)` for restricted nega cylinders, defined as the exact
/// quotient of the two interval diameters.
pub fn child_ratio(
    params: &SystemParams,
    pv: &ProbVector,
    tails: &TailSets,
    parent: &[u32],
    next: u32,
) -> Result<Rational> {
    let parent_iv = if parent.is_empty() {
        tails.s_bar.clone()
    } else {
        interval_restricted_neg_p(params, pv, tails, parent)?
    };
    let mut child = parent.to_vec();
    child.push(next);
    let child_iv = interval_restricted_neg_p(params, pv, tails, &child)?;
    Ok(child_iv.diameter() / parent_iv.diameter())
}

/// Parity state of a base: the digit-sum parity that drives the tail set and
/// the next step's twisted probabilities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_sum(base: &[u32]) -> Parity {
        if base.iter().sum::<u32>() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn offset(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn step(self, digit: u32) -> Parity {
        if digit % 2 == 0 {
            self
        } else {
            match self {
                Parity::Even => Parity::Odd,
                Parity::Odd => Parity::Even,
            }
        }
    }
}

/// The probability mass a block step contributes: appending block `c` to a
/// base of digit-sum parity `σ` multiplies `W_n` by
/// `p̃(c, σ+c) · Π_{i=σ+1}^{σ+c−1} p̃(u, i)`.
pub fn step_weight(params: &SystemParams, pv: &ProbVector, parent: Parity, c: u32) -> Rational {
    let off = parent.offset();
    let mut w = Rational::one();
    for i in 1..c as usize {
        w *= pv.p_tilde(params.u(), off + i);
    }
    w * pv.p_tilde(c, off + c as usize)
}

/// The closed-form step ratio `ω(σ, c)`: the step weight times `d(S̄)/d(S̲)`
/// when the step crosses from odd to even parity and its reciprocal when
/// crossing even to odd. This is the four-case table that [`child_ratio`]
/// must equal; the quotient definition is authoritative, the table is the
/// cross-check.
pub fn omega(
    params: &SystemParams,
    pv: &ProbVector,
    tails: &TailSets,
    parent: Parity,
    c: u32,
) -> Rational {
    let w = step_weight(params, pv, parent, c);
    let child = parent.step(c);
    let bar = tails.s_bar.diameter();
    let under = tails.s_under.diameter();
    match (parent, child) {
        (Parity::Odd, Parity::Even) => w * bar / under,
        (Parity::Even, Parity::Odd) => w * under / bar,
        _ => w,
    }
}

/// Which sibling precedes which, and by how much. `left`/`right` are the
/// base digits whose cylinders sit left/right on the line; `gap` is
/// `inf(right) − sup(left)` (strictly positive exactly when the siblings are
/// separated); `predicted_left` applies the case analysis
/// "digit `c` lies left of `c+1` iff (Σ+c even ∧ c > u) ∨ (Σ+c odd ∧ c < u)".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationReport {
    pub c: u32,
    pub left: u32,
    pub right: u32,
    pub gap: Rational,
    pub predicted_left: u32,
}

impl SeparationReport {
    pub fn matches_prediction(&self) -> bool {
        self.left == self.predicted_left
    }
}

/// Compare the restricted nega siblings `parent·c` and `parent·(c+1)` (both
/// digits must lie in `Ā`).
pub fn separation_check(
    params: &SystemParams,
    pv: &ProbVector,
    tails: &TailSets,
    parent: &[u32],
    c: u32,
) -> Result<SeparationReport> {
    if !params.contains_abar(c) || !params.contains_abar(c + 1) {
        return Err(Error::InvalidParams(format!(
            "separation check needs consecutive digits in the restricted alphabet, got {c}, {}",
            c + 1
        )));
    }
    let mut a = parent.to_vec();
    a.push(c);
    let mut b = parent.to_vec();
    b.push(c + 1);
    let ia = interval_restricted_neg_p(params, pv, tails, &a)?;
    let ib = interval_restricted_neg_p(params, pv, tails, &b)?;
    let sum_c = parent.iter().sum::<u32>() + c;
    let c_left = if sum_c % 2 == 0 {
        c > params.u()
    } else {
        c < params.u()
    };
    let (left, right, li, ri) = if ia.lo <= ib.lo {
        (c, c + 1, &ia, &ib)
    } else {
        (c + 1, c, &ib, &ia)
    };
    let gap = &ri.lo - &li.hi;
    Ok(SeparationReport {
        c,
        left,
        right,
        gap,
        predicted_left: if c_left { c } else { c + 1 },
    })
}

/// Do the unrestricted siblings `base·c` and `base·(c+1)` abut exactly?
/// For `P` cylinders the shared endpoint is always `sup(c) = inf(c+1)`; for
/// `NegP` the orientation alternates with the rank parity (odd rank
/// increasing, even rank reversed).
pub fn adjacency_abuts(pv: &ProbVector, system: CylinderSystem, base: &[u32], c: u32) -> bool {
    assert!(c + 1 < pv.s(), "need a right sibling");
    let mut a = base.to_vec();
    a.push(c);
    let mut b = base.to_vec();
    b.push(c + 1);
    match system {
        CylinderSystem::P => {
            let ia = interval_p(pv, &a);
            let ib = interval_p(pv, &b);
            ia.hi == ib.lo
        }
        CylinderSystem::NegP => {
            let ia = interval_neg_p(pv, &a);
            let ib = interval_neg_p(pv, &b);
            if (base.len() + 1) % 2 == 1 {
                ia.hi == ib.lo
            } else {
                ib.hi == ia.lo
            }
        }
        _ => panic!("adjacency applies to the unrestricted systems"),
    }
}
