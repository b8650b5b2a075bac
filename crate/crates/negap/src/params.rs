//! The fixed pair `(s, u)` and the alphabets derived from it.

use crate::error::{Error, Result};

/// Base `s ≥ 4` and marker digit `u ∈ [0, s−1]`.
///
/// The full digit alphabet is `A = {0, …, s−1}`. The restricted alphabet
/// `Ā = A \ {0, u}` holds the admissible block values of the run-structured
/// sets: a block of value `α ∈ Ā` expands to `α−1` copies of `u` followed by
/// the digit `α`. `l` and `m` count the odd and even members of `Ā`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SystemParams {
    s: u32,
    u: u32,
}

impl SystemParams {
    pub fn new(s: u32, u: u32) -> Result<Self> {
        if s < 4 {
            return Err(Error::InvalidParams(format!(
                "s must be at least 4, got {s}"
            )));
        }
        if u >= s {
            return Err(Error::InvalidParams(format!(
                "u must lie in [0, {}], got {u}",
                s - 1
            )));
        }
        Ok(SystemParams { s, u })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn u(&self) -> u32 {
        self.u
    }

    /// The full alphabet `A = {0, …, s−1}`.
    pub fn alphabet(&self) -> impl Iterator<Item = u32> {
        0..self.s
    }

    /// The restricted alphabet `Ā = A \ {0, u}`, in increasing order.
    /// Note `|Ā| = s−1` when `u = 0` and `s−2` otherwise.
    pub fn abar(&self) -> impl Iterator<Item = u32> + '_ {
        (1..self.s).filter(move |&d| d != self.u)
    }

    pub fn abar_len(&self) -> usize {
        if self.u == 0 {
            (self.s - 1) as usize
        } else {
            (self.s - 2) as usize
        }
    }

    pub fn contains_abar(&self, d: u32) -> bool {
        d != 0 && d != self.u && d < self.s
    }

    /// Count of odd members of `Ā`.
    pub fn l(&self) -> u32 {
        self.abar().filter(|d| d % 2 == 1).count() as u32
    }

    /// Count of even members of `Ā`.
    pub fn m(&self) -> u32 {
        self.abar().filter(|d| d % 2 == 0).count() as u32
    }

    /// `s−1−d`, the digit complement.
    pub fn complement(&self, d: u32) -> u32 {
        self.s - 1 - d
    }

    pub fn check_digit(&self, d: u32, position: usize) -> Result<()> {
        if d >= self.s {
            Err(Error::DigitOutOfRange {
                digit: d,
                position,
                base: self.s,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_counts() {
        let p = SystemParams::new(5, 2).unwrap();
        assert_eq!(p.abar().collect::<Vec<_>>(), vec![1, 3, 4]);
        assert_eq!(p.l(), 2); // odd members {1, 3}
        assert_eq!(p.m(), 1); // even member {4}
        assert_eq!(p.l() + p.m(), p.abar_len() as u32);

        let p0 = SystemParams::new(4, 0).unwrap();
        assert_eq!(p0.abar().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(p0.abar_len(), 3); // u = 0 removes only one element
        assert_eq!((p0.l(), p0.m()), (2, 1));

        let p1 = SystemParams::new(6, 1).unwrap();
        assert_eq!((p1.l(), p1.m()), (2, 2));
    }

    #[test]
    fn rejects_bad_params() {
        assert!(SystemParams::new(3, 1).is_err());
        assert!(SystemParams::new(4, 4).is_err());
        assert!(SystemParams::new(0, 0).is_err());
    }
}
