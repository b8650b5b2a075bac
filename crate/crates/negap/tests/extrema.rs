//! Set-extrema sweep across bases and markers: the greedy language
//! extrema against the published closed-form endpoint tables (agreeing
//! everywhere except the documented u = 2 rows), frozen reference values,
//! and the cover-hull fixed point.
use negap::moran::{
    published_endpoint_word, published_nega_endpoint_word, set_extrema, Bound, Geometry, SetFamily,
};
use negap::rational::{exact_string, Rational};
use negap::salem::{eval_p, ProbVector};
use negap::SystemParams;

#[test]
fn extrema_sweep_against_published_tables() {
    for (s, u) in [
        (4u32, 0u32),
        (4, 1),
        (4, 2),
        (4, 3),
        (5, 0),
        (5, 1),
        (5, 2),
        (5, 3),
        (5, 4),
        (6, 0),
        (6, 1),
        (6, 2),
        (6, 3),
        (6, 4),
        (6, 5),
        (7, 2),
        (7, 4),
    ] {
        let params = SystemParams::new(s, u).unwrap();
        let pv = ProbVector::uniform(s);
        for family in [SetFamily::SPuOver, SetFamily::SPuUnder] {
            let ext = set_extrema(&params, &pv, family);
            assert!(ext.lo < ext.hi);
            for (bound, word, val) in [
                (Bound::Inf, &ext.lo_word, &ext.lo),
                (Bound::Sup, &ext.hi_word, &ext.hi),
            ] {
                let table = published_endpoint_word(&params, family, bound).unwrap();
                let tval = eval_p(&pv, &table);
                let agree = tval == *val;
                if u == 2 {
                    assert!(
                        !agree,
                        "expected mismatch at u=2: s={s} {family:?} {bound:?}"
                    );
                    println!(
                        "u=2 mismatch s={s} {family:?} {bound:?}: table {} vs true {}",
                        exact_string(&tval),
                        exact_string(val)
                    );
                } else {
                    assert!(
                        agree,
                        "s={s} u={u} {family:?} {bound:?}: table {} ({}) vs computed {} ({})",
                        exact_string(&tval),
                        table.format(s),
                        exact_string(val),
                        word.format(s)
                    );
                }
            }
        }
        // nega-s extrema against the published table
        let nega = set_extrema(&params, &pv, SetFamily::SNegSu);
        let r6_lo = negap::numeral::eval_nega_s_adic(
            &params,
            &published_nega_endpoint_word(&params, Bound::Inf),
        );
        let r6_hi = negap::numeral::eval_nega_s_adic(
            &params,
            &published_nega_endpoint_word(&params, Bound::Sup),
        );
        if u != 2 {
            assert_eq!(nega.lo, r6_lo, "s={s} u={u} inf");
            assert_eq!(nega.hi, r6_hi, "s={s} u={u} sup");
        } else {
            println!(
                "u=2 nega s={s}: table [{}, {}] vs true [{}, {}]",
                exact_string(&r6_lo),
                exact_string(&r6_hi),
                exact_string(&nega.lo),
                exact_string(&nega.hi)
            );
            assert!(nega.lo <= r6_lo && r6_hi <= nega.hi);
        }
    }
    // frozen hand-computed values at s=5, u=2 (uniform)
    let params = SystemParams::new(5, 2).unwrap();
    let pv = ProbVector::uniform(5);
    let sb = set_extrema(&params, &pv, SetFamily::SPuOver);
    assert_eq!(exact_string(&sb.lo), "31/104");
    assert_eq!(exact_string(&sb.hi), "53/104");
    let su = set_extrema(&params, &pv, SetFamily::SPuUnder);
    assert_eq!(exact_string(&su.lo), "51/104");
    assert_eq!(exact_string(&su.hi), "73/104");
    let nega = set_extrema(&params, &pv, SetFamily::SNegSu);
    assert_eq!(exact_string(&nega.lo), "-107/312");
    assert_eq!(exact_string(&nega.hi), "-41/312");

    // fixed point: extrema == rank-1/2 cover hull
    for (s, u) in [(5u32, 2u32), (6, 0), (6, 3), (4, 1)] {
        let params = SystemParams::new(s, u).unwrap();
        let geom = Geometry::new(params, ProbVector::uniform(s)).unwrap();
        for rank in 1..=3u32 {
            let cover = negap::moran::build_cover(&geom, rank, 1_000_000).unwrap();
            let hull = cover.hull().unwrap();
            assert_eq!(hull.lo, geom.s_bar().lo, "s={s} u={u} rank={rank} lo");
            assert_eq!(hull.hi, geom.s_bar().hi, "s={s} u={u} rank={rank} hi");
            assert!(
                cover.strictly_separated(),
                "s={s} u={u} rank={rank} separation"
            );
        }
    }
    // extremal words evaluate inside [0,1] and are admissible
    let w = negap::moran::language_extremum(
        &params,
        negap::moran::WordView::ComplementEven,
        Bound::Sup,
    );
    assert!(negap::digits::digit_membership(&params, &w.run_word).is_ok());
    let one = Rational::from_integer(1.into());
    assert!(eval_p(&pv, &w.viewed_word) <= one);
}
