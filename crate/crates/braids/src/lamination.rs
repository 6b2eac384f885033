//! Integral laminations of the punctured disk in Dynnikov-style coordinates,
//! and the piecewise-linear braid action on them.
//!
//! A lamination on the `n`-punctured disk is recorded by `2(n-2)` integers
//! `(a_1..a_{n-2}, b_1..b_{n-2})`, one pair per interior puncture. With the
//! punctures on a horizontal line, `b_i` is half the difference of the
//! intersection counts with the vertical lines just left and just right of
//! puncture `i+1`, and `a_i` is half the difference of the counts of strands
//! passing below and above puncture `i+1`. Generator updates are exact
//! integer max-plus formulas, so iteration is exact over any signed scalar.

use crate::error::{Error, Result};
use crate::word::BraidWord;
use num_traits::Signed;

/// Scalar type for lamination coordinates. `i64` is fine for short words and
/// tests; growth estimation iterates hundreds of times and needs `BigInt`.
pub trait CoordScalar: Clone + Ord + Signed + std::fmt::Debug {}
impl<T: Clone + Ord + Signed + std::fmt::Debug> CoordScalar for T {}

fn pos<S: CoordScalar>(x: &S) -> S {
    if x.is_positive() {
        x.clone()
    } else {
        S::zero()
    }
}

fn neg<S: CoordScalar>(x: &S) -> S {
    if x.is_negative() {
        x.clone()
    } else {
        S::zero()
    }
}

/// Coordinates of an integral lamination on the `n`-punctured disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaminationStateOf<S> {
    n: usize,
    a: Vec<S>,
    b: Vec<S>,
}

impl<S: CoordScalar> LaminationStateOf<S> {
    /// The canonical starting lamination: the nested multicurve whose `k`-th
    /// component encircles punctures `1..=k+1`, i.e. `a = 0`, `b = (1,..,1)`.
    /// Every essential curve of the disk crosses one of its components, so a
    /// pseudo-Anosov piece anywhere in the disk stretches this state.
    pub fn canonical(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewStrands { got: n, min: 3 });
        }
        Ok(LaminationStateOf {
            n,
            a: vec![S::zero(); n - 2],
            b: vec![S::one(); n - 2],
        })
    }

    /// The round curve around punctures `i` and `i+1` (`1 <= i <= n-1`).
    pub fn round_curve(n: usize, i: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewStrands { got: n, min: 3 });
        }
        if i < 1 || i >= n {
            return Err(Error::InvalidIndex {
                index: i,
                strands: n,
            });
        }
        let mut state = LaminationStateOf {
            n,
            a: vec![S::zero(); n - 2],
            b: vec![S::zero(); n - 2],
        };
        if i >= 2 {
            state.b[i - 2] = -S::one();
        }
        if i <= n - 2 {
            state.b[i - 1] = S::one();
        }
        Ok(state)
    }

    pub fn from_coords(n: usize, a: Vec<S>, b: Vec<S>) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewStrands { got: n, min: 3 });
        }
        if a.len() != n - 2 || b.len() != n - 2 {
            return Err(Error::InvalidParameter(format!(
                "need {} coordinates per vector for {} strands",
                n - 2,
                n
            )));
        }
        Ok(LaminationStateOf { n, a, b })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn coords_a(&self) -> &[S] {
        &self.a
    }

    pub fn coords_b(&self) -> &[S] {
        &self.b
    }

    /// Interleaved `(a_1..a_{n-2}, b_1..b_{n-2})` copy of the coordinates.
    pub fn coords(&self) -> Vec<S> {
        self.a.iter().chain(self.b.iter()).cloned().collect()
    }

    /// `ℓ¹` norm of the coordinate vector.
    pub fn l1_norm(&self) -> S {
        let mut acc = S::zero();
        for x in self.a.iter().chain(self.b.iter()) {
            acc = acc + x.abs();
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(self.b.iter()).all(|x| x.is_zero())
    }

    /// Half the number of intersections with the vertical line between
    /// punctures `1` and `2`, reconstructed from the coordinates.
    fn nu_first_half(&self) -> S {
        // nu_1/2 = max_i(|a_i| + S_i + b_i^+), S_i = b_1 + .. + b_{i-1};
        // the i = 1 term is >= 0, so the empty-lamination case comes out 0.
        let mut best = S::zero();
        let mut prefix = S::zero();
        for (ai, bi) in self.a.iter().zip(self.b.iter()) {
            let candidate = ai.abs() + prefix.clone() + pos(bi);
            if candidate > best {
                best = candidate;
            }
            prefix = prefix + bi.clone();
        }
        best
    }

    /// Half the intersections with the line between punctures `n-1` and `n`.
    fn nu_last_half(&self) -> S {
        let mut best = S::zero();
        let mut suffix = S::zero();
        for (ai, bi) in self.a.iter().zip(self.b.iter()).rev() {
            suffix = suffix + bi.clone();
            let candidate = ai.abs() + pos(bi) - suffix.clone();
            if candidate > best {
                best = candidate;
            }
        }
        best
    }

    /// Apply one signed generator letter in place.
    pub fn apply_letter(&mut self, g: i64) {
        let n = self.n;
        let i = g.unsigned_abs() as usize;
        debug_assert!(i >= 1 && i < n, "letter out of range");
        // Load the strip pair around punctures (i, i+1); a strip beyond the
        // real range is the phantom strip next to an end puncture, whose
        // coordinates are (0, -nu_1/2) on the left and (0, +nu_{n-1}/2) on
        // the right.
        let (a1, b1) = if i >= 2 {
            (self.a[i - 2].clone(), self.b[i - 2].clone())
        } else {
            (S::zero(), -self.nu_first_half())
        };
        let (a2, b2) = if i <= n - 2 {
            (self.a[i - 1].clone(), self.b[i - 1].clone())
        } else {
            (S::zero(), self.nu_last_half())
        };

        let (a1n, b1n, a2n, b2n) = if g > 0 {
            let c = a1.clone() - a2.clone() - pos(&b2) + neg(&b1);
            (
                a1.clone() - pos(&b1) - pos(&(pos(&b2) + c.clone())),
                b2.clone() + neg(&c),
                a2.clone() - neg(&b2) - neg(&(neg(&b1) - c.clone())),
                b1.clone() - neg(&c),
            )
        } else {
            let d = a1.clone() - a2.clone() + pos(&b2) - neg(&b1);
            (
                a1.clone() + pos(&b1) + pos(&(pos(&b2) - d.clone())),
                b2.clone() - pos(&d),
                a2.clone() + neg(&b2) + neg(&(neg(&b1) + d.clone())),
                b1.clone() + pos(&d),
            )
        };

        if i >= 2 {
            self.a[i - 2] = a1n.clone();
            self.b[i - 2] = b1n.clone();
        }
        if i <= n - 2 {
            self.a[i - 1] = a2n.clone();
            self.b[i - 1] = b2n.clone();
        }
        // A phantom pair is derived data; the update must reproduce the
        // derived values of the image state.
        if i == 1 {
            debug_assert!(a1n.is_zero(), "left phantom strip stays balanced");
            debug_assert_eq!(b1n, -self.nu_first_half(), "left phantom consistency");
        }
        if i == n - 1 {
            debug_assert!(a2n.is_zero(), "right phantom strip stays balanced");
            debug_assert_eq!(b2n, self.nu_last_half(), "right phantom consistency");
        }
    }

    /// Image of this state under the braid (letters applied left to right,
    /// so `act(a·b) = act(b) ∘ act(a)`).
    pub fn act(&self, braid: &BraidWord) -> Result<Self> {
        if braid.strands() != self.n {
            return Err(Error::Mismatch {
                left: braid.strands(),
                right: self.n,
            });
        }
        let mut out = self.clone();
        for &g in braid.letters() {
            out.apply_letter(g);
        }
        Ok(out)
    }
}
