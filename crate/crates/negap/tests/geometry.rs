//! Exhaustive small-rank checks of the restricted cylinder geometry: the
//! τ/W endpoint formulas against direct evaluation of extremal words, the
//! diameter quotient against the closed-form step ratios, sibling separation
//! and adjacency, cover nesting, and the measure sequence.

use negap::cylinder::{
    adjacency_abuts, child_ratio, interval_restricted_p, omega, separation_check, CylinderSystem,
    Parity,
};
use negap::digits::{expand_blocks, BlockSeq};
use negap::moran::{
    build_cover, lambda_formula, language_extremum, measure_sequence, v_parity, Bound, Geometry,
    WordView,
};
use negap::numeral::{eval_nega_s_adic, one_over_s_plus_1};
use negap::rational::{rat, Rational};
use negap::salem::{eval_neg_p, eval_p, ProbVector};
use negap::SystemParams;
use num_traits::{One, Zero};

fn bases(params: &SystemParams, rank: u32) -> Vec<Vec<u32>> {
    let digits: Vec<u32> = params.abar().collect();
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..rank {
        out = out
            .iter()
            .flat_map(|b| {
                digits.iter().map(move |&d| {
                    let mut nb = b.clone();
                    nb.push(d);
                    nb
                })
            })
            .collect();
    }
    out
}

fn nonuniform5() -> ProbVector {
    ProbVector::new(vec![
        rat(1, 3),
        rat(1, 5),
        rat(2, 15),
        rat(1, 5),
        rat(2, 15),
    ])
    .unwrap()
}

/// Closed-form endpoint formulas vs direct evaluation of the extremal words:
/// append the parity-appropriate extremal run tail to the expanded base and
/// evaluate through the alternating series — a route that never touches the
/// τ/W decomposition.
#[test]
fn restricted_interval_formula_matches_extremal_words() {
    let params = SystemParams::new(5, 2).unwrap();
    for pv in [ProbVector::uniform(5), nonuniform5()] {
        let geom = Geometry::new(params, pv.clone()).unwrap();
        for rank in 1..=3u32 {
            for base in bases(&params, rank) {
                let formula = geom.interval(&base).unwrap();
                let expanded = expand_blocks(&params, &BlockSeq::finite(base.clone())).unwrap();
                let view = if base.iter().sum::<u32>() % 2 == 0 {
                    WordView::ComplementEven
                } else {
                    WordView::ComplementOdd
                };
                let lo_tail = language_extremum(&params, view, Bound::Inf).run_word;
                let hi_tail = language_extremum(&params, view, Bound::Sup).run_word;
                let n = expanded.prefix().len();
                let lo = eval_neg_p(&pv, &expanded.with_tail(n, lo_tail));
                let hi = eval_neg_p(&pv, &expanded.with_tail(n, hi_tail));
                assert_eq!(formula.lo, lo, "base {base:?} lo");
                assert_eq!(formula.hi, hi, "base {base:?} hi");
            }
        }
    }
}

/// Same two-route check for the self-similar restricted `Δ^P` cylinders.
#[test]
fn restricted_p_interval_matches_extremal_words() {
    let params = SystemParams::new(5, 2).unwrap();
    let pv = nonuniform5();
    let geom = Geometry::new(params, pv.clone()).unwrap();
    for base in bases(&params, 2) {
        let formula = interval_restricted_p(&params, &pv, geom.tails(), &base).unwrap();
        let expanded = expand_blocks(&params, &BlockSeq::finite(base.clone())).unwrap();
        let n = expanded.prefix().len();
        let lo_tail = language_extremum(&params, WordView::Plain, Bound::Inf).run_word;
        let hi_tail = language_extremum(&params, WordView::Plain, Bound::Sup).run_word;
        assert_eq!(formula.lo, eval_p(&pv, &expanded.with_tail(n, lo_tail)));
        assert_eq!(formula.hi, eval_p(&pv, &expanded.with_tail(n, hi_tail)));
    }
}

/// Diameter quotient = closed-form step ratio, and the quotient times the
/// parent diameter reproduces the child exactly.
#[test]
fn child_ratio_matches_omega_exhaustively() {
    let params = SystemParams::new(5, 2).unwrap();
    for pv in [ProbVector::uniform(5), nonuniform5()] {
        let geom = Geometry::new(params, pv.clone()).unwrap();
        for parent_rank in 0..=2u32 {
            for parent in bases(&params, parent_rank) {
                let parent_iv = geom.interval(&parent).unwrap();
                for c in params.abar() {
                    let ratio = child_ratio(&params, &pv, geom.tails(), &parent, c).unwrap();
                    let table = omega(&params, &pv, geom.tails(), Parity::of_sum(&parent), c);
                    assert_eq!(ratio, table, "parent {parent:?} child {c}");
                    let mut child = parent.clone();
                    child.push(c);
                    let child_iv = geom.interval(&child).unwrap();
                    assert_eq!(ratio * parent_iv.diameter(), child_iv.diameter());
                }
            }
        }
    }
}

/// All three separation regimes (u small, middle, large) at s = 6:
/// exhaustive consecutive-sibling gaps at ranks ≤ 2 are strictly positive
/// and land in the predicted orientation.
#[test]
fn separation_regimes_exhaustive() {
    for u in [0u32, 2, 5] {
        let params = SystemParams::new(6, u).unwrap();
        let pv = ProbVector::new(vec![
            rat(1, 4),
            rat(1, 8),
            rat(1, 8),
            rat(1, 6),
            rat(1, 6),
            rat(1, 6),
        ])
        .unwrap();
        let geom = Geometry::new(params, pv.clone()).unwrap();
        let mut checked = 0usize;
        for parent_rank in 0..=2u32 {
            for parent in bases(&params, parent_rank) {
                for c in params.abar() {
                    if !params.contains_abar(c + 1) {
                        continue;
                    }
                    let report = separation_check(&params, &pv, geom.tails(), &parent, c).unwrap();
                    assert!(
                        report.gap > Rational::zero(),
                        "u={u} parent {parent:?} c={c}"
                    );
                    assert!(
                        report.matches_prediction(),
                        "u={u} parent {parent:?} c={c}: left {} predicted {}",
                        report.left,
                        report.predicted_left
                    );
                    checked += 1;
                }
            }
        }
        assert!(checked > 0);
    }
}

/// Unrestricted siblings tile their parent: `P` cylinders always abut in
/// increasing order; `NegP` alternates orientation with rank parity.
#[test]
fn unrestricted_adjacency() {
    let pv = nonuniform5();
    for base in [vec![], vec![2], vec![4, 0], vec![1, 3, 2]] {
        for c in 0..4 {
            assert!(adjacency_abuts(&pv, CylinderSystem::P, &base, c));
            assert!(adjacency_abuts(&pv, CylinderSystem::NegP, &base, c));
        }
    }
}

/// Covers nest, stay strictly separated, and have the advertised count.
#[test]
fn covers_nest_and_separate() {
    for (s, u) in [(5u32, 2u32), (6, 0), (4, 1)] {
        let params = SystemParams::new(s, u).unwrap();
        let geom = Geometry::new(params, ProbVector::uniform(s)).unwrap();
        let mut prev: Option<negap::moran::Cover> = None;
        for rank in 1..=4u32 {
            let cover = build_cover(&geom, rank, 1 << 20).unwrap();
            assert_eq!(cover.entries.len(), params.abar_len().pow(rank));
            assert!(cover.strictly_separated());
            if let Some(prev) = &prev {
                // every child interval nests inside its parent's interval
                for entry in &cover.entries {
                    let parent_base = &entry.base[..entry.base.len() - 1];
                    let parent = prev
                        .entries
                        .iter()
                        .find(|e| e.base == parent_base)
                        .expect("parent present");
                    assert!(parent.interval.contains_interval(&entry.interval));
                }
                assert!(cover.total_length < prev.total_length);
            }
            prev = Some(cover);
        }
    }
}

/// Measure rows: exact lengths agree with the two-state recursion, decrease
/// strictly, and sit below the geometric bound with contraction `V < 1`.
#[test]
fn measure_sequence_bound_and_formula() {
    for (s, u, pv) in [
        (5u32, 2u32, ProbVector::uniform(5)),
        (
            4,
            0,
            ProbVector::new(vec![rat(1, 2), rat(1, 4), rat(1, 8), rat(1, 8)]).unwrap(),
        ),
    ] {
        let params = SystemParams::new(s, u).unwrap();
        let geom = Geometry::new(params, pv).unwrap();
        let (v_even, v_odd) = v_parity(&geom);
        assert!(v_even < Rational::one() && v_odd < Rational::one());
        let rows = measure_sequence(&geom, 6, 1 << 20).unwrap();
        for w in rows.windows(2) {
            assert!(w[1].lambda < w[0].lambda, "λ strictly decreasing");
        }
        for row in &rows {
            assert!(row.lambda <= row.bound, "bound dominates at n={}", row.n);
            assert!(row.lambda > Rational::zero());
            assert_eq!(
                row.lambda,
                lambda_formula(&geom, row.n),
                "formula at n={}",
                row.n
            );
        }
    }
}

/// Uniform vector: the per-step measure ratio is constant (self-similar
/// degeneration) and equals `Σ_{c∈Ā} s^{−c}`; six steps shrink the measure
/// by far more than two orders of magnitude.
#[test]
fn measure_uniform_ratios() {
    let params = SystemParams::new(5, 2).unwrap();
    let geom = Geometry::new(params, ProbVector::uniform(5)).unwrap();
    let rows = measure_sequence(&geom, 6, 1 << 20).unwrap();
    let expected: Rational = params
        .abar()
        .map(|c| Rational::new(1.into(), num_bigint::BigInt::from(5).pow(c)))
        .sum();
    assert_eq!(expected, rat(131, 625));
    for w in rows.windows(2) {
        assert_eq!(&w[1].lambda / &w[0].lambda, expected);
    }
    // frozen from the oracle run: λ(S6)/λ(S1) = (131/625)^5 < 10^{-2}
    let ratio = &rows[5].lambda / &rows[0].lambda;
    assert!(ratio < rat(1, 100));
    assert_eq!(ratio, negap::rational::rat_pow(&rat(131, 625), 5));
}

/// Uniform vector: pushing every cover interval through `y ↦ 1/(s+1) − y`
/// lands exactly on the nega-s cylinder of the same base, evaluated through
/// the base-`(−s)` series — a cross-system route with no `Δ^P` machinery.
#[test]
fn uniform_cover_matches_nega_s_intervals() {
    let params = SystemParams::new(5, 2).unwrap();
    let geom = Geometry::new(params, ProbVector::uniform(5)).unwrap();
    let shift = one_over_s_plus_1(&params);
    for rank in 1..=3u32 {
        let cover = build_cover(&geom, rank, 1 << 20).unwrap();
        for entry in &cover.entries {
            let expanded = expand_blocks(&params, &BlockSeq::finite(entry.base.clone())).unwrap();
            let n = expanded.prefix().len();
            let view = if entry.base.iter().sum::<u32>() % 2 == 0 {
                WordView::ComplementEven
            } else {
                WordView::ComplementOdd
            };
            let lo_tail = language_extremum(&params, view, Bound::Inf).run_word;
            let hi_tail = language_extremum(&params, view, Bound::Sup).run_word;
            // f_l reverses orientation: the image of hi is the nega inf
            let nega_lo = eval_nega_s_adic(&params, &expanded.with_tail(n, hi_tail));
            let nega_hi = eval_nega_s_adic(&params, &expanded.with_tail(n, lo_tail));
            assert_eq!(&shift - &entry.interval.hi, nega_lo);
            assert_eq!(&shift - &entry.interval.lo, nega_hi);
        }
    }
}

/// The rank-1 hull endpoints coincide with the set extrema, and the interval
/// of the empty base is the full set hull.
#[test]
fn rank_one_hull_is_set_hull() {
    let params = SystemParams::new(6, 3).unwrap();
    let geom = Geometry::new(params, nonuniform6()).unwrap();
    let cover = build_cover(&geom, 1, 1 << 10).unwrap();
    let hull = cover.hull().unwrap();
    assert_eq!(hull.lo, geom.s_bar().lo);
    assert_eq!(hull.hi, geom.s_bar().hi);
    let whole = geom.interval(&[]).unwrap();
    assert_eq!(whole.lo, geom.s_bar().lo);
    assert_eq!(whole.hi, geom.s_bar().hi);
}

fn nonuniform6() -> ProbVector {
    ProbVector::new(vec![
        rat(1, 4),
        rat(1, 8),
        rat(1, 8),
        rat(1, 6),
        rat(1, 6),
        rat(1, 6),
    ])
    .unwrap()
}
