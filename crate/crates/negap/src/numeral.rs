//! Exact evaluation of base-`s` and base-`(−s)` positional expansions, and
//! the affine identities connecting them.
//!
//! For a word `d₁d₂…` the value is `Σ dₙ · b^{−n}` with `b = s` or `b = −s`.
//! Periodic tails are summed in closed form from the geometric fixed point
//! `tail = head + b^{−L} · tail`, so every eventually periodic word evaluates
//! to an exact rational.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::digits::DigitSeq;
use crate::params::SystemParams;
use crate::rational::{rat_int, Rational};

fn eval_in_base(base: i64, word: &DigitSeq) -> Rational {
    let b = BigInt::from(base);
    // prefix: Σ dᵢ / b^i via Horner from the right
    let mut head = Rational::zero();
    for &d in word.prefix().iter().rev() {
        head = (head + rat_int(d as i64)) / Rational::from_integer(b.clone());
    }
    if word.period().is_empty() {
        return head;
    }
    // one period, also Horner: Σ pᵢ / b^i for i = 1..=L
    let mut per = Rational::zero();
    for &d in word.period().iter().rev() {
        per = (per + rat_int(d as i64)) / Rational::from_integer(b.clone());
    }
    let l = word.period().len() as u32;
    let b_l = Rational::from_integer(b.clone().pow(l));
    // tail value at the period start: t = per + t / b^L
    let tail = per * &b_l / (b_l - Rational::one());
    let b_p = Rational::from_integer(b.pow(word.prefix().len() as u32));
    head + tail / b_p
}

/// `Σ dₙ s^{−n}`, the base-`s` value of the word in `[0, 1]`.
pub fn eval_s_adic(params: &SystemParams, word: &DigitSeq) -> Rational {
    debug_assert!(word.validate(params).is_ok());
    eval_in_base(params.s() as i64, word)
}

/// `Σ dₙ (−s)^{−n}`, the base-`(−s)` value of the word in
/// `[−s/(s+1), 1/(s+1)]`.
pub fn eval_nega_s_adic(params: &SystemParams, word: &DigitSeq) -> Rational {
    debug_assert!(word.validate(params).is_ok());
    eval_in_base(-(params.s() as i64), word)
}

/// `1/(s+1)`: the base-`s` value of the word `0(s−1)0(s−1)…`, and the upper
/// endpoint of the nega range.
pub fn one_over_s_plus_1(params: &SystemParams) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(params.s() as i64 + 1))
}

/// Both sides of the even-complement identity
/// `Σ dₙ(−s)^{−n} = 1/(s+1) − eval_s_adic(complement_even(d))`,
/// each computed by its own route. The two components are equal for every
/// word.
pub fn nega_to_s_identity_check(params: &SystemParams, word: &DigitSeq) -> (Rational, Rational) {
    let lhs = eval_nega_s_adic(params, word);
    let rhs = one_over_s_plus_1(params) - eval_s_adic(params, &word.complement_even(params));
    (lhs, rhs)
}

/// Both sides of the odd-complement identity
/// `Σ dₙ(−s)^{−n} = eval_s_adic(complement_odd(d)) − s/(s+1)`.
pub fn nega_to_s_second_identity_check(
    params: &SystemParams,
    word: &DigitSeq,
) -> (Rational, Rational) {
    let lhs = eval_nega_s_adic(params, word);
    let s = params.s() as i64;
    let shift = Rational::new(BigInt::from(s), BigInt::from(s + 1));
    let rhs = eval_s_adic(params, &word.complement_odd(params)) - shift;
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(s: u32, u: u32) -> SystemParams {
        SystemParams::new(s, u).unwrap()
    }

    #[test]
    fn s_adic_examples() {
        let params = p(4, 0);
        // all-(s−1) digits sum to 1
        assert_eq!(eval_s_adic(&params, &DigitSeq::constant(3)), rat_int(1));
        // single digit
        assert_eq!(
            eval_s_adic(&params, &DigitSeq::parse(4, "2(0)").unwrap()),
            rat(1, 2)
        );
        // mixed prefix + period, checked against the hand-summed closed form
        let params5 = p(5, 2);
        let d = DigitSeq::parse(5, "113(12)").unwrap();
        let expected = rat(1, 5) + rat(1, 25) + rat(3, 125) + rat(7, 3000);
        assert_eq!(eval_s_adic(&params5, &d), expected);
    }

    #[test]
    fn s_adic_matches_partial_sums() {
        // periodic closed form vs 200-term partial sum, gap below 5^{-150}
        let params = p(5, 2);
        let d = DigitSeq::parse(5, "113(12)").unwrap();
        let exact = eval_s_adic(&params, &d);
        let partial = eval_s_adic(&params, &DigitSeq::terminating(d.take(200)));
        let gap = exact - partial;
        assert!(gap >= Rational::zero());
        assert!(gap < Rational::new(BigInt::one(), BigInt::from(5).pow(150)));
    }

    #[test]
    fn nega_examples() {
        let params = p(4, 1);
        assert_eq!(eval_nega_s_adic(&params, &DigitSeq::zero()), rat_int(0));
        assert_eq!(
            eval_nega_s_adic(&params, &DigitSeq::parse(4, "1(0)").unwrap()),
            rat(-1, 4)
        );
        // digits (s−1)0 repeating hit the lower endpoint −s/(s+1)
        assert_eq!(
            eval_nega_s_adic(&params, &DigitSeq::parse(4, "(30)").unwrap()),
            rat(-4, 5)
        );
    }

    #[test]
    fn complement_identities() {
        let params = p(4, 0);
        let (a, b) = nega_to_s_identity_check(&params, &DigitSeq::parse(4, "12(3)").unwrap());
        assert_eq!(a, b);
        let params5 = p(5, 2);
        let (a, b) = nega_to_s_identity_check(&params5, &DigitSeq::zero());
        assert_eq!(a, b);
        assert_eq!(a, rat_int(0));
        let (a, b) =
            nega_to_s_second_identity_check(&params, &DigitSeq::new(vec![2, 0, 1], vec![3, 1]));
        assert_eq!(a, b);
    }
}
