//! The restricted sets as nested cylinder covers: exact set extrema, rank-`n`
//! covers, and the Lebesgue measure sequence `λ(S_n)` with its geometric
//! decay bound.
//!
//! Set extrema are computed from first principles: the evaluators are
//! lexicographically monotone in the digit word, so the extreme of a set
//! `{eval_p(view(w)) : w admissible}` is attained at the lexicographic
//! extreme of the viewed language. That extreme is produced by a greedy walk
//! on the run-language automaton (state = current `u`-run length and position
//! parity), which is deterministic and therefore eventually periodic — an
//! exact, probability-independent word. The published closed-form endpoint
//! words are also implemented verbatim ([`published_endpoint_word`], [`published_nega_endpoint_word`])
//! and compared against the computed extrema; they agree except at `u = 2`,
//! where their periodic words decode to the inadmissible constant block
//! sequence `2, 2, 2, …` and the computed extrema are strictly wider. The
//! comparison is surfaced by the verification suite rather than silently
//! resolved.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::cylinder::{interval_restricted_neg_p, Interval, Parity, TailSets};
use crate::digits::{contract_blocks, BlockSeq, DigitSeq};
use crate::error::{Error, Result};
use crate::numeral::{eval_nega_s_adic, one_over_s_plus_1};
use crate::params::SystemParams;
use crate::rational::Rational;
use crate::salem::{eval_p, ProbVector};

/// How the run word is viewed before evaluating: plain (`S_(P,u)`), with the
/// even positions complemented (`S̄_(P,u)`, the value set of `Δ^{−P}` run
/// words), or with the odd positions complemented (`S̲_(P,u)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordView {
    Plain,
    ComplementEven,
    ComplementOdd,
}

impl WordView {
    fn apply(self, params: &SystemParams, pos: usize, d: u32) -> u32 {
        match self {
            WordView::Plain => d,
            WordView::ComplementEven if pos % 2 == 0 => params.complement(d),
            WordView::ComplementOdd if pos % 2 == 1 => params.complement(d),
            _ => d,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Inf,
    Sup,
}

/// A lexicographic extreme of a viewed run language: the admissible run word,
/// its viewed digit word, and its block decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalWord {
    pub run_word: DigitSeq,
    pub viewed_word: DigitSeq,
    pub blocks: BlockSeq,
}

/// Greedy lexicographic extremum of `{view(w) : w admissible run word}`.
///
/// From a run of length `r`, the only continuations are the terminal digit
/// `r+1` (when it lies in `Ā`) and another `u` (when some terminal `≥ r+2`
/// exists); the candidate viewed digits are distinct, every reachable state
/// is live, and the deterministic choice makes the word eventually periodic.
pub fn language_extremum(params: &SystemParams, view: WordView, bound: Bound) -> ExtremalWord {
    let u = params.u();
    let max_abar = params
        .abar()
        .max()
        .expect("restricted alphabet is nonempty");
    let mut run: u32 = 0;
    let mut pos: usize = 1;
    let mut seen: HashMap<(u32, usize), usize> = HashMap::new();
    let mut run_digits: Vec<u32> = Vec::new();
    let mut viewed: Vec<u32> = Vec::new();
    loop {
        let key = (run, pos % 2);
        if let Some(&first) = seen.get(&key) {
            let run_word =
                DigitSeq::new(run_digits[..first].to_vec(), run_digits[first..].to_vec());
            let viewed_word = DigitSeq::new(viewed[..first].to_vec(), viewed[first..].to_vec());
            let blocks = contract_blocks(params, &run_word)
                .expect("greedy word is admissible by construction");
            return ExtremalWord {
                run_word,
                viewed_word,
                blocks,
            };
        }
        seen.insert(key, run_digits.len());

        let mut candidates: Vec<u32> = Vec::with_capacity(2);
        if params.contains_abar(run + 1) {
            candidates.push(run + 1);
        }
        if max_abar >= run + 2 {
            candidates.push(u);
        }
        let best = match bound {
            Bound::Sup => candidates
                .into_iter()
                .max_by_key(|&d| view.apply(params, pos, d)),
            Bound::Inf => candidates
                .into_iter()
                .min_by_key(|&d| view.apply(params, pos, d)),
        }
        .expect("every reachable run state has a continuation");
        viewed.push(view.apply(params, pos, best));
        run_digits.push(best);
        run = if best == u { run + 1 } else { 0 };
        pos += 1;
    }
}

/// Which set family an extremum request refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetFamily {
    /// `S̄_(P,u)` — even-complemented run words under `Δ^P`.
    SPuOver,
    /// `S̲_(P,u)` — odd-complemented run words under `Δ^P`.
    SPuUnder,
    /// `S_(P,u)` — plain run words under `Δ^P`.
    SPu,
    /// `S_(−P,u)` — identical to `S̄_(P,u)` as a set of values.
    SNegPu,
    /// `S_(−s,u)` — run words under the base-`(−s)` expansion.
    SNegSu,
}

/// Exact endpoints of a set family, with the periodic words attaining them
/// and a note on how they were produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetExtrema {
    pub lo: Rational,
    pub hi: Rational,
    pub lo_word: DigitSeq,
    pub hi_word: DigitSeq,
    pub source: String,
}

impl SetExtrema {
    pub fn interval(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn diameter(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Exact extrema of a set family under the given probability vector, via the
/// greedy language extremes. The reported words are the viewed digit words
/// (`Δ^P` words), except for `SNegSu` where they are the run words of the
/// base-`(−s)` system.
pub fn set_extrema(params: &SystemParams, pv: &ProbVector, family: SetFamily) -> SetExtrema {
    let eval_view = |view: WordView, bound: Bound| -> (Rational, DigitSeq) {
        let ext = language_extremum(params, view, bound);
        (eval_p(pv, &ext.viewed_word), ext.viewed_word)
    };
    match family {
        SetFamily::SPuOver | SetFamily::SNegPu => {
            let (lo, lo_word) = eval_view(WordView::ComplementEven, Bound::Inf);
            let (hi, hi_word) = eval_view(WordView::ComplementEven, Bound::Sup);
            SetExtrema {
                lo,
                hi,
                lo_word,
                hi_word,
                source: "language extremum over even-complemented run words".to_string(),
            }
        }
        SetFamily::SPuUnder => {
            let (lo, lo_word) = eval_view(WordView::ComplementOdd, Bound::Inf);
            let (hi, hi_word) = eval_view(WordView::ComplementOdd, Bound::Sup);
            SetExtrema {
                lo,
                hi,
                lo_word,
                hi_word,
                source: "language extremum over odd-complemented run words".to_string(),
            }
        }
        SetFamily::SPu => {
            let (lo, lo_word) = eval_view(WordView::Plain, Bound::Inf);
            let (hi, hi_word) = eval_view(WordView::Plain, Bound::Sup);
            SetExtrema {
                lo,
                hi,
                lo_word,
                hi_word,
                source: "language extremum over run words".to_string(),
            }
        }
        SetFamily::SNegSu => {
            // Δ^{−s}_w = 1/(s+1) − Δ^s_{ce(w)}: the nega extremes come from
            // the opposite even-complement extremes.
            let hi_ext = language_extremum(params, WordView::ComplementEven, Bound::Inf);
            let lo_ext = language_extremum(params, WordView::ComplementEven, Bound::Sup);
            let lo = eval_nega_s_adic(params, &lo_ext.run_word);
            let hi = eval_nega_s_adic(params, &hi_ext.run_word);
            debug_assert_eq!(
                hi,
                one_over_s_plus_1(params)
                    - eval_p(&ProbVector::uniform(params.s()), &hi_ext.viewed_word)
            );
            SetExtrema {
                lo,
                hi,
                lo_word: lo_ext.run_word,
                hi_word: hi_ext.run_word,
                source: "language extremum over run words in the nega system".to_string(),
            }
        }
    }
}

/// The published closed-form endpoint words for `S̄_(P,u)` and `S̲_(P,u)`,
/// implemented verbatim from their case tables. They match the computed
/// extrema for every `u ≠ 2`; at `u = 2` their periods decode to the
/// inadmissible block word `(2)^∞` and the computed extrema are strictly
/// wider. Only `SPuOver` (= `SNegPu`) and `SPuUnder` have published tables.
pub fn published_endpoint_word(
    params: &SystemParams,
    family: SetFamily,
    bound: Bound,
) -> Option<DigitSeq> {
    let s = params.s();
    let u = params.u();
    let word = |prefix: Vec<u32>, period: Vec<u32>| Some(DigitSeq::new(prefix, period));
    match (family, bound) {
        (SetFamily::SPuUnder, Bound::Inf) => match u {
            0 => word(vec![s - 2], vec![0, s - 3]),
            1 => word(vec![s - 2, 1, s - 4], vec![1, s - 3]),
            _ => word(vec![], vec![s - 1 - u, 2]),
        },
        (SetFamily::SPuUnder, Bound::Sup) => match u {
            0 | 1 => word(vec![], vec![s - 1 - u, 2]),
            _ => word(vec![s - 2], vec![u, s - 3]),
        },
        (SetFamily::SPuOver, Bound::Inf) | (SetFamily::SNegPu, Bound::Inf) => match u {
            0 | 1 => word(vec![], vec![u, s - 3]),
            _ => word(vec![1], vec![s - 1 - u, 2]),
        },
        (SetFamily::SPuOver, Bound::Sup) | (SetFamily::SNegPu, Bound::Sup) => match u {
            0 => word(vec![1], vec![s - 1, 2]),
            1 => word(vec![1, s - 2, 3], vec![s - 2, 2]),
            _ => word(vec![], vec![u, s - 3]),
        },
        _ => None,
    }
}

/// The published endpoint words of `S_(−s,u)` (base-`(−s)` run words),
/// verbatim; same caveat at `u = 2` as [`published_endpoint_word`].
pub fn published_nega_endpoint_word(params: &SystemParams, bound: Bound) -> DigitSeq {
    let u = params.u();
    match bound {
        Bound::Inf => match u {
            0 => DigitSeq::new(vec![1], vec![0, 2]),
            1 => DigitSeq::new(vec![1, 1, 3], vec![1, 2]),
            _ => DigitSeq::new(vec![], vec![u, 2]),
        },
        Bound::Sup => match u {
            0 | 1 => DigitSeq::new(vec![], vec![u, 2]),
            _ => DigitSeq::new(vec![1], vec![u, 2]),
        },
    }
}

/// A context bundling the system, the probability vector, and the tail-set
/// extrema every restricted-cylinder formula needs.
#[derive(Debug, Clone)]
pub struct Geometry {
    params: SystemParams,
    pv: ProbVector,
    tails: TailSets,
    s_bar: SetExtrema,
    s_under: SetExtrema,
    s_plain: SetExtrema,
}

impl Geometry {
    pub fn new(params: SystemParams, pv: ProbVector) -> Result<Self> {
        if pv.s() != params.s() {
            return Err(Error::InvalidProbVector(format!(
                "probability vector has {} entries but s = {}",
                pv.s(),
                params.s()
            )));
        }
        let s_bar = set_extrema(&params, &pv, SetFamily::SPuOver);
        let s_under = set_extrema(&params, &pv, SetFamily::SPuUnder);
        let s_plain = set_extrema(&params, &pv, SetFamily::SPu);
        let tails = TailSets {
            s_bar: s_bar.interval(),
            s_under: s_under.interval(),
            s_plain: s_plain.interval(),
        };
        Ok(Geometry {
            params,
            pv,
            tails,
            s_bar,
            s_under,
            s_plain,
        })
    }

    pub fn params(&self) -> &SystemParams {
        &self.params
    }

    pub fn pv(&self) -> &ProbVector {
        &self.pv
    }

    pub fn tails(&self) -> &TailSets {
        &self.tails
    }

    pub fn s_bar(&self) -> &SetExtrema {
        &self.s_bar
    }

    pub fn s_under(&self) -> &SetExtrema {
        &self.s_under
    }

    pub fn s_plain(&self) -> &SetExtrema {
        &self.s_plain
    }

    /// Interval of a restricted nega cylinder.
    pub fn interval(&self, base: &[u32]) -> Result<Interval> {
        if base.is_empty() {
            return Ok(self.tails.s_bar.clone());
        }
        interval_restricted_neg_p(&self.params, &self.pv, &self.tails, base)
    }
}

/// One interval of a rank-`n` cover, tagged with its base tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverEntry {
    pub base: Vec<u32>,
    pub interval: Interval,
}

/// All rank-`n` restricted nega cylinders, sorted by left endpoint.
#[derive(Debug, Clone)]
pub struct Cover {
    pub rank: u32,
    pub entries: Vec<CoverEntry>,
    pub total_length: Rational,
}

impl Cover {
    /// Are the intervals pairwise disjoint with strictly positive gaps?
    pub fn strictly_separated(&self) -> bool {
        self.entries
            .windows(2)
            .all(|w| w[0].interval.hi < w[1].interval.lo)
    }

    pub fn hull(&self) -> Option<Interval> {
        let first = self.entries.first()?;
        let last = self.entries.last()?;
        Some(Interval::new(
            first.interval.lo.clone(),
            last.interval.hi.clone(),
        ))
    }
}

/// Enumerate the rank-`n` cover. Refuses when `|Ā|^n` exceeds `cap`.
pub fn build_cover(geom: &Geometry, rank: u32, cap: u128) -> Result<Cover> {
    assert!(rank >= 1, "covers start at rank 1");
    let branch = geom.params().abar_len() as u128;
    let needed = branch.checked_pow(rank).ok_or(Error::CapExceeded {
        needed: u128::MAX,
        cap,
    })?;
    if needed > cap {
        return Err(Error::CapExceeded { needed, cap });
    }
    let digits: Vec<u32> = geom.params().abar().collect();
    let mut entries = Vec::with_capacity(needed as usize);
    let mut idx = vec![0usize; rank as usize];
    'enumerate: loop {
        let base: Vec<u32> = idx.iter().map(|&i| digits[i]).collect();
        let interval = geom.interval(&base)?;
        entries.push(CoverEntry { base, interval });
        // odometer over Ā^rank
        let mut k = rank as usize;
        while k > 0 {
            k -= 1;
            if idx[k] + 1 < digits.len() {
                idx[k] += 1;
                for slot in idx.iter_mut().skip(k + 1) {
                    *slot = 0;
                }
                continue 'enumerate;
            }
        }
        break;
    }
    entries.sort_by(|a, b| a.interval.lo.cmp(&b.interval.lo));
    let total_length: Rational = entries.iter().map(|e| e.interval.diameter()).sum();
    let cover = Cover {
        rank,
        entries,
        total_length,
    };
    debug_assert!(cover.strictly_separated());
    Ok(cover)
}

/// One row of the measure table: exact `λ(S_n)` and the geometric bound
/// `max{λ(I₀̄), λ(I₀̲)} · V^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureRow {
    pub n: u32,
    pub lambda: Rational,
    pub bound: Rational,
}

/// The per-step mass `v(σ) = Σ_{c∈Ā} p̃(c, σ+c) Π p̃(u, ·)` leaving a parity
/// state; both values are strictly below 1, and `V = max(v_even, v_odd)`
/// drives the decay bound.
pub fn v_parity(geom: &Geometry) -> (Rational, Rational) {
    let step = |parity: Parity| -> Rational {
        geom.params()
            .abar()
            .map(|c| crate::cylinder::step_weight(geom.params(), geom.pv(), parity, c))
            .sum()
    };
    (step(Parity::Even), step(Parity::Odd))
}

/// Exact `λ(S_n)` through the two-state parity recursion (the closed-form
/// route, independent of cover enumeration).
pub fn lambda_formula(geom: &Geometry, n: u32) -> Rational {
    let mut even_mass = Rational::one();
    let mut odd_mass = Rational::zero();
    for _ in 0..n {
        let mut next_even = Rational::zero();
        let mut next_odd = Rational::zero();
        for c in geom.params().abar() {
            let from_even = crate::cylinder::step_weight(geom.params(), geom.pv(), Parity::Even, c);
            let from_odd = crate::cylinder::step_weight(geom.params(), geom.pv(), Parity::Odd, c);
            if c % 2 == 0 {
                next_even += &even_mass * from_even;
                next_odd += &odd_mass * from_odd;
            } else {
                next_odd += &even_mass * from_even;
                next_even += &odd_mass * from_odd;
            }
        }
        even_mass = next_even;
        odd_mass = next_odd;
    }
    even_mass * geom.tails().s_bar.diameter() + odd_mass * geom.tails().s_under.diameter()
}

/// The measure sequence `λ(S_1..S_{n_max})` from enumerated cover lengths,
/// with the `B · V^n` bound alongside.
pub fn measure_sequence(geom: &Geometry, n_max: u32, cap: u128) -> Result<Vec<MeasureRow>> {
    let (v_even, v_odd) = v_parity(geom);
    let v = v_even.max(v_odd);
    let b = geom
        .tails()
        .s_bar
        .diameter()
        .max(geom.tails().s_under.diameter());
    let mut rows = Vec::with_capacity(n_max as usize);
    let mut bound = b;
    for n in 1..=n_max {
        bound *= &v;
        let cover = build_cover(geom, n, cap)?;
        rows.push(MeasureRow {
            n,
            lambda: cover.total_length,
            bound: bound.clone(),
        });
    }
    Ok(rows)
}
