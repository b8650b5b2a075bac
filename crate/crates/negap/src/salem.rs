//! Probability vectors and the Salem-type evaluators built from them: the
//! digit-preserving map `Δ^P` (the cumulative-weight series), the alternating map
//! `Δ^{−P}` with its parity-twisted coefficient tables, the `F̃`/`F̈` word
//! functionals, and greedy digit extraction.
//!
//! All evaluation is exact rational. Floating output is produced only at the
//! CLI boundary: the identities these functions satisfy are algebraic in the
//! `p_i`, and the test surface relies on bit-exact equality.

use num_traits::{One, Signed, Zero};

use crate::digits::DigitSeq;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A strictly positive probability vector `p₀..p_{s−1}` with its cumulative
/// sums `β_k = Σ_{i<k} p_i` (so `β₀ = 0` and `β_{s−1} + p_{s−1} = 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbVector {
    p: Vec<Rational>,
    beta: Vec<Rational>,
}

impl ProbVector {
    pub fn new(p: Vec<Rational>) -> Result<Self> {
        if p.len() < 2 {
            return Err(Error::InvalidProbVector(format!(
                "need at least 2 entries, got {}",
                p.len()
            )));
        }
        if p.iter().any(|x| !x.is_positive()) {
            return Err(Error::InvalidProbVector(
                "all entries must be > 0".to_string(),
            ));
        }
        let total: Rational = p.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidProbVector(format!(
                "entries must sum to 1, got {}",
                total
            )));
        }
        let mut beta = Vec::with_capacity(p.len());
        let mut acc = Rational::zero();
        for x in &p {
            beta.push(acc.clone());
            acc += x;
        }
        Ok(ProbVector { p, beta })
    }

    /// The uniform vector `(1/s, …, 1/s)`, under which every evaluator
    /// degenerates to its base-`s` counterpart.
    pub fn uniform(s: u32) -> Self {
        let w = Rational::new(1.into(), (s as i64).into());
        ProbVector::new(vec![w; s as usize]).expect("uniform vector is valid")
    }

    pub fn s(&self) -> u32 {
        self.p.len() as u32
    }

    pub fn is_uniform(&self) -> bool {
        self.p.iter().all(|x| x == &self.p[0])
    }

    pub fn p(&self, d: u32) -> &Rational {
        &self.p[d as usize]
    }

    pub fn beta(&self, d: u32) -> &Rational {
        &self.beta[d as usize]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.p
    }

    pub fn max_p(&self) -> &Rational {
        self.p.iter().max().expect("nonempty")
    }

    fn complement(&self, d: u32) -> u32 {
        self.s() - 1 - d
    }

    /// `p̃(d, n)`: `p_d` at odd positions, `p_{s−1−d}` at even ones.
    pub fn p_tilde(&self, d: u32, n: usize) -> &Rational {
        if n % 2 == 1 {
            self.p(d)
        } else {
            self.p(self.complement(d))
        }
    }

    /// `β̃(d, n)`: `β_d` at odd positions, `β_{s−1−d}` at even ones.
    pub fn beta_tilde(&self, d: u32, n: usize) -> &Rational {
        if n % 2 == 1 {
            self.beta(d)
        } else {
            self.beta(self.complement(d))
        }
    }

    /// `p̈(d, n) = p̃(d, n+1)`: the opposite parity convention.
    pub fn p_ddot(&self, d: u32, n: usize) -> &Rational {
        self.p_tilde(d, n + 1)
    }

    /// `β̈(d, n) = β̃(d, n+1)`.
    pub fn beta_ddot(&self, d: u32, n: usize) -> &Rational {
        self.beta_tilde(d, n + 1)
    }

    /// The three-case alternating coefficient `δ̃(d, n)`: at odd positions it
    /// is `β_d` (zero when `d = 0`), at even positions the top-tail sum
    /// `p_{s−1−d} + ⋯ + p_{s−1} = 1 − β_{s−1−d}`. Ranges over `[0, 1]`, the
    /// upper end attained only by `d = s−1` at even positions.
    pub fn delta_tilde(&self, d: u32, n: usize) -> Rational {
        if n % 2 == 1 {
            self.beta(d).clone()
        } else {
            Rational::one() - self.beta(self.complement(d))
        }
    }
}

/// Position-parity coefficient tables: `coef[r][d]` and `fac[r][d]` are used
/// at positions `n` with `n mod 2 == r`. Every series here has the shape
/// `Σₙ coef(dₙ, n) Π_{j<n} fac(dⱼ, j)`, and an eventually periodic word sums
/// in closed form through the linear fixed point over one (parity-aligned)
/// period.
struct TwistTables {
    coef: [Vec<Rational>; 2],
    fac: [Vec<Rational>; 2],
}

impl TwistTables {
    fn parity_free(pv: &ProbVector) -> Self {
        TwistTables {
            coef: [pv.beta.clone(), pv.beta.clone()],
            fac: [pv.p.clone(), pv.p.clone()],
        }
    }

    /// `β̃`/`p̃` tables (complement at even positions).
    fn tilde(pv: &ProbVector) -> Self {
        let s = pv.s();
        let comp = |v: &[Rational]| -> Vec<Rational> {
            (0..s).map(|d| v[(s - 1 - d) as usize].clone()).collect()
        };
        TwistTables {
            coef: [comp(&pv.beta), pv.beta.clone()],
            fac: [comp(&pv.p), pv.p.clone()],
        }
    }

    /// `β̈`/`p̈` tables (complement at odd positions).
    fn ddot(pv: &ProbVector) -> Self {
        let s = pv.s();
        let comp = |v: &[Rational]| -> Vec<Rational> {
            (0..s).map(|d| v[(s - 1 - d) as usize].clone()).collect()
        };
        TwistTables {
            coef: [pv.beta.clone(), comp(&pv.beta)],
            fac: [pv.p.clone(), comp(&pv.p)],
        }
    }

    fn eval(&self, word: &DigitSeq) -> Rational {
        // The implicit zero tail of a terminating word carries mass under
        // twisted tables (coef[even][0] = β_{s−1}), so spell it out.
        let word = if word.is_terminating() {
            DigitSeq::new(word.prefix().to_vec(), vec![0, 0])
        } else {
            word.with_even_period()
        };
        let mut acc = Rational::zero();
        let mut prod = Rational::one();
        for (i, &d) in word.prefix().iter().enumerate() {
            let n = i + 1;
            acc += &self.coef[n % 2][d as usize] * &prod;
            prod *= &self.fac[n % 2][d as usize];
        }
        if word.period().is_empty() {
            return acc;
        }
        // one full (even-length) period starting right after the prefix
        let start = word.prefix().len() + 1;
        let mut head = Rational::zero();
        let mut pprod = Rational::one();
        for (i, &d) in word.period().iter().enumerate() {
            let n = start + i;
            head += &self.coef[n % 2][d as usize] * &pprod;
            pprod *= &self.fac[n % 2][d as usize];
        }
        // tail = head + pprod · tail, and pprod < 1 since all p are
        let tail = head / (Rational::one() - pprod);
        acc + prod * tail
    }
}

/// The digit-preserving series `Δ^P`: `β_{d₁} + Σ_{n≥2} β_{dₙ} Π_{j<n} p_{dⱼ}`.
pub fn eval_p(pv: &ProbVector, word: &DigitSeq) -> Rational {
    TwistTables::parity_free(pv).eval(word)
}

/// The distribution function of the digit-preserving random series; it *is*
/// `eval_p` on the same word.
pub fn eval_f_zeta(pv: &ProbVector, word: &DigitSeq) -> Rational {
    eval_p(pv, word)
}

/// The `F̃` word functional: the `β̃`/`p̃` series on the given word. Its
/// argument is the word in the even-twisted coordinates, i.e. it represents
/// `x = Δ^s_{complement_even(d)}`, and satisfies
/// `eval_f_tilde(d) = eval_p(complement_even(d))` exactly.
pub fn eval_f_tilde(pv: &ProbVector, word: &DigitSeq) -> Rational {
    TwistTables::tilde(pv).eval(word)
}

/// The `F̈` word functional: the `β̈`/`p̈` series (odd positions twisted), so
/// `eval_f_ddot(d) = eval_p(complement_odd(d))` exactly.
pub fn eval_f_ddot(pv: &ProbVector, word: &DigitSeq) -> Rational {
    TwistTables::ddot(pv).eval(word)
}

/// The alternating representation `Δ^{−P}`: evaluated through its own
/// twisted-table series (the `β̃`/`p̃` route), which agrees exactly with
/// `eval_p` on the even-complemented word and with the literal alternating
/// series of [`eval_neg_p_partial`].
pub fn eval_neg_p(pv: &ProbVector, word: &DigitSeq) -> Rational {
    eval_f_tilde(pv, word)
}

/// Literal truncation of the alternating three-part series defining
/// `Δ^{−P}`:
/// `β_{d₁} + Σ_{n=2}^{N} (−1)^{n−1} δ̃(dₙ,n) Π_{j<n} p̃(dⱼ,j)
///  + Σ_{2n−1 ≤ N} Π_{j=1}^{2n−1} p̃(dⱼ,j)`.
///
/// This is the transcription oracle for the closed form: exact partial sums,
/// no closed-form shortcuts.
pub fn eval_neg_p_partial(pv: &ProbVector, word: &DigitSeq, terms: usize) -> Rational {
    assert!(terms >= 1);
    let mut total = pv.beta(word.digit(1)).clone();
    let mut prod = Rational::one(); // Π_{j<n} p̃
    let mut odd_products = Rational::zero();
    for n in 1..=terms {
        let d = word.digit(n);
        if n >= 2 {
            let signed = if n % 2 == 0 {
                -pv.delta_tilde(d, n)
            } else {
                pv.delta_tilde(d, n)
            };
            total += signed * &prod;
        }
        prod *= pv.p_tilde(d, n);
        if n % 2 == 1 {
            odd_products += &prod;
        }
    }
    total + odd_products
}

/// A rigorous bound on the truncation error of [`eval_neg_p_partial`]:
/// every dropped term carries the prefix product `Π_{j≤N} p̃(dⱼ,j)`, and the
/// two dropped sums are geometrically dominated, so
/// `|exact − partial| ≤ 2 · Π_{j≤N} p̃ / (1 − max p)`.
pub fn neg_p_truncation_bound(pv: &ProbVector, word: &DigitSeq, terms: usize) -> Rational {
    let mut prod = Rational::one();
    for n in 1..=terms {
        prod *= pv.p_tilde(word.digit(n), n);
    }
    let two = Rational::from_integer(2.into());
    two * prod / (Rational::one() - pv.max_p())
}

/// First `n` digits of `x ∈ [0, 1]` in the `Δ^P` system, by greedy descent:
/// at each step the digit `α` is the largest with `β_α < r` (or `0` when the
/// residual is zero), then `r ← (r − β_α)/p_α`. At exact cylinder boundaries
/// this picks the left, non-terminating branch, so `x = 1/2` under the
/// uniform vector with `s = 4` yields `1, 3, 3, 3, …`.
pub fn extract_p_digits(pv: &ProbVector, x: &Rational, n: usize) -> Vec<u32> {
    assert!(
        !x.is_negative() && *x <= Rational::one(),
        "x must lie in [0, 1]"
    );
    let mut digits = Vec::with_capacity(n);
    let mut r = x.clone();
    for _ in 0..n {
        if r.is_zero() {
            digits.push(0);
            continue;
        }
        let mut a = pv.s() - 1;
        while a > 0 && pv.beta(a) >= &r {
            a -= 1;
        }
        r = (r - pv.beta(a)) / pv.p(a);
        digits.push(a);
    }
    digits
}
