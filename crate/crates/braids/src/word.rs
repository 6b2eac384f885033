//! Braid words: strand count plus a sequence of signed Artin generator letters.
//!
//! Letter `+i` is the right-handed crossing of the strands at positions
//! `i, i+1`; `-i` is its inverse. The empty word is the identity braid.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A braid given as a word in the Artin generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    /// Validating constructor. Every letter `g` must satisfy `1 <= |g| <= n-1`.
    pub fn make(n: usize, letters: impl Into<Vec<i64>>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidStrandCount { got: n, min: 1 });
        }
        let letters = letters.into();
        for (position, &g) in letters.iter().enumerate() {
            if g == 0 || g.unsigned_abs() as usize >= n {
                return Err(Error::InvalidLetter {
                    letter: g,
                    position,
                    strands: n,
                });
            }
        }
        Ok(BraidWord { n, letters })
    }

    /// The identity braid on `n` strands.
    pub fn identity(n: usize) -> Result<Self> {
        Self::make(n, Vec::new())
    }

    /// The positive half twist `Δ_n = (σ_1…σ_{n-1})(σ_1…σ_{n-2})…(σ_1σ_2)σ_1`.
    pub fn half_twist(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidStrandCount { got: n, min: 2 });
        }
        let mut letters = Vec::with_capacity(n * (n - 1) / 2);
        for block in (1..n).rev() {
            for i in 1..=block {
                letters.push(i as i64);
            }
        }
        Self::make(n, letters)
    }

    /// Alternative spelling of the half twist, `σ_{n-1}(σ_{n-2}σ_{n-1})…(σ_1…σ_{n-1})`.
    /// Equal to [`BraidWord::half_twist`] as a braid but not letter-for-letter.
    pub fn half_twist_reversed_form(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidStrandCount { got: n, min: 2 });
        }
        let mut letters = Vec::with_capacity(n * (n - 1) / 2);
        for start in (1..n).rev() {
            for i in start..n {
                letters.push(i as i64);
            }
        }
        Self::make(n, letters)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation: `self` first (bottom), then `other` (top).
    pub fn product(&self, other: &BraidWord) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Mismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// Word inverse: letters reversed with signs flipped.
    pub fn inverse(&self) -> Self {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|g| -g).collect(),
        }
    }

    /// `self` raised to a non-negative power by repetition.
    pub fn power(&self, k: usize) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// The skew involution: reverse the word and replace index `i` by `n-i`.
    pub fn skew(&self) -> Self {
        let n = self.n as i64;
        BraidWord {
            n: self.n,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&g| g.signum() * (n - g.abs()))
                .collect(),
        }
    }

    /// The skew-palindromization `skew(b)·b`, always fixed by `skew`.
    pub fn palindromize(&self) -> Self {
        self.skew().product(self).expect("same strand count")
    }

    /// Sum of the letter signs (the writhe of the word).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|g| g.signum()).sum()
    }

    /// Word-level homogeneity: every generator index occurs with one sign only.
    pub fn is_homogeneous_word(&self) -> bool {
        let mut sign = vec![0i64; self.n];
        for &g in &self.letters {
            let i = g.unsigned_abs() as usize;
            if sign[i] == 0 {
                sign[i] = g.signum();
            } else if sign[i] != g.signum() {
                return false;
            }
        }
        true
    }

    /// The induced permutation, bottom to top: strand starting at position `i`
    /// ends at position `permutation()(i)`.
    pub fn permutation(&self) -> Permutation {
        let mut pos: Vec<usize> = (0..self.n).collect(); // pos[strand] = current position
        for &g in &self.letters {
            let j = g.unsigned_abs() as usize; // crossing at positions j, j+1 (1-based)
            let (s, t) = (find(&pos, j - 1), find(&pos, j));
            pos.swap(s, t);
        }
        Permutation::from_images_zero_based(pos)
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Scan the word with full position tracking. Calls `f(strand_a, strand_b, sign)`
    /// for each letter, where `strand_a`, `strand_b` are the 1-based start indices of
    /// the two strands being crossed and `sign` is the letter sign.
    pub fn scan_crossings(&self, mut f: impl FnMut(usize, usize, i64)) {
        let mut at: Vec<usize> = (0..self.n).collect(); // at[position] = strand
        for &g in &self.letters {
            let j = g.unsigned_abs() as usize;
            f(at[j - 1] + 1, at[j] + 1, g.signum());
            at.swap(j - 1, j);
        }
    }

    /// Positions occupied by the strand with base point `i` (1-based), just
    /// before each letter, plus the final position.
    pub fn strand_trace(&self, i: usize) -> Result<StrandTrace> {
        if i < 1 || i > self.n {
            return Err(Error::InvalidIndex {
                index: i,
                strands: self.n,
            });
        }
        let mut positions = Vec::with_capacity(self.letters.len() + 1);
        let mut p = i;
        for &g in &self.letters {
            positions.push(p);
            let j = g.unsigned_abs() as usize;
            if p == j {
                p = j + 1;
            } else if p == j + 1 {
                p = j;
            }
        }
        positions.push(p);
        Ok(StrandTrace {
            start_index: i,
            positions,
        })
    }

    /// Remove the strand with base point `i`. Letters that involve the tracked
    /// strand are dropped; a surviving letter `±j` keeps its index when the
    /// tracked strand sits at a position `> j+1` and shifts to `±(j-1)` otherwise.
    pub fn delete_strand(&self, i: usize) -> Result<Self> {
        let trace = self.strand_trace(i)?;
        let mut letters = Vec::with_capacity(self.letters.len());
        for (t, &g) in self.letters.iter().enumerate() {
            let j = g.unsigned_abs() as usize;
            let p = trace.positions[t];
            if p == j || p == j + 1 {
                continue;
            }
            if p > j + 1 {
                letters.push(g);
            } else {
                letters.push(g.signum() * (j as i64 - 1));
            }
        }
        Self::make(self.n - 1, letters)
    }

    /// Exact equality in the braid group, decided by comparing the images of
    /// the free-group generators under the Artin action of both words.
    pub fn word_equal(&self, other: &BraidWord) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::Mismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(crate::artin::same_action(self, other))
    }

    /// Parse the canonical ASCII format, e.g. `n=5  3 3 -4 -4`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace().enumerate();
        let (_, head) = tokens.next().ok_or_else(|| Error::Parse {
            at: "start of input".into(),
            message: "expected a header of the form n=<strands>".into(),
        })?;
        let n: usize = head
            .strip_prefix("n=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::Parse {
                at: "token 1".into(),
                message: format!("expected a header of the form n=<strands>, got `{head}`"),
            })?;
        if n < 1 {
            return Err(Error::Parse {
                at: "token 1".into(),
                message: "strand count must be at least 1".into(),
            });
        }
        let mut letters = Vec::new();
        for (idx, tok) in tokens {
            let g: i64 = tok.parse().map_err(|_| Error::Parse {
                at: format!("token {}", idx + 1),
                message: format!("expected a signed integer letter, got `{tok}`"),
            })?;
            if g == 0 {
                return Err(Error::Parse {
                    at: format!("token {}", idx + 1),
                    message: "letter 0 is not a generator".into(),
                });
            }
            if g.unsigned_abs() as usize >= n {
                return Err(Error::Parse {
                    at: format!("token {}", idx + 1),
                    message: format!(
                        "letter {g} out of range for {n} strands (want 1 <= |letter| <= {})",
                        n - 1
                    ),
                });
            }
            letters.push(g);
        }
        Self::make(n, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        for g in &self.letters {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

fn find(pos: &[usize], want: usize) -> usize {
    pos.iter().position(|&p| p == want).expect("position exists")
}

/// Positions of one tracked strand through a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandTrace {
    pub start_index: usize,
    /// Position occupied just before letter `t`; the last entry is the final position.
    pub positions: Vec<usize>,
}

impl StrandTrace {
    pub fn final_position(&self) -> usize {
        *self.positions.last().expect("non-empty")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i64]) -> BraidWord {
        BraidWord::make(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn make_validates() {
        assert!(BraidWord::make(5, vec![3, 3, -4, -4]).is_ok());
        assert!(BraidWord::make(3, vec![]).is_ok());
        assert_eq!(
            BraidWord::make(2, vec![3]),
            Err(Error::InvalidLetter {
                letter: 3,
                position: 0,
                strands: 2
            })
        );
        assert_eq!(
            BraidWord::make(0, vec![]),
            Err(Error::InvalidStrandCount { got: 0, min: 1 })
        );
        assert!(BraidWord::make(4, vec![1, 0, 2]).is_err());
    }

    #[test]
    fn product_and_inverse() {
        let a = w(3, &[1, 1]);
        let b = w(3, &[-2]);
        assert_eq!(a.product(&b).unwrap(), w(3, &[1, 1, -2]));
        assert_eq!(a.inverse(), w(3, &[-1, -1]));
        assert_eq!(w(5, &[3]).inverse(), w(5, &[-3]));
        assert_eq!(
            a.product(&w(4, &[1])),
            Err(Error::Mismatch { left: 3, right: 4 })
        );
        let e = BraidWord::identity(5).unwrap();
        let b5 = w(5, &[3, 3, -4, -4]);
        assert_eq!(e.product(&b5).unwrap(), b5);
    }

    #[test]
    fn skew_matches_worked_example() {
        // skew(σ3² σ4⁻²) = σ1⁻² σ2² in B5, and the palindromization prepends it.
        let b = w(5, &[3, 3, -4, -4]);
        assert_eq!(b.skew(), w(5, &[-1, -1, 2, 2]));
        assert_eq!(b.palindromize(), w(5, &[-1, -1, 2, 2, 3, 3, -4, -4]));
        assert_eq!(b.skew().skew(), b);
        let e = BraidWord::identity(4).unwrap();
        assert_eq!(e.skew(), e);
    }

    #[test]
    fn skew_is_anti_homomorphism_letterwise() {
        let a = w(6, &[1, -3, 5]);
        let b = w(6, &[2, 2, -4]);
        assert_eq!(
            a.product(&b).unwrap().skew(),
            b.skew().product(&a.skew()).unwrap()
        );
    }

    #[test]
    fn half_twist_words() {
        assert_eq!(BraidWord::half_twist(4).unwrap(), w(4, &[1, 2, 3, 1, 2, 1]));
        assert_eq!(BraidWord::half_twist(2).unwrap(), w(2, &[1]));
        assert_eq!(BraidWord::half_twist(3).unwrap(), w(3, &[1, 2, 1]));
        assert_eq!(
            BraidWord::half_twist_reversed_form(4).unwrap(),
            w(4, &[3, 2, 3, 1, 2, 3])
        );
        assert!(BraidWord::half_twist(1).is_err());
        // Δ_n is fixed letter-for-letter by skew on the first displayed form.
        for n in 2..=7 {
            let d = BraidWord::half_twist(n).unwrap();
            assert_eq!(d.exponent_sum(), (n * (n - 1) / 2) as i64);
        }
    }

    #[test]
    fn homogeneity_is_word_level() {
        assert!(w(5, &[1, 3, -2, 3, 3, -2, -2, -2]).is_homogeneous_word());
        assert!(!w(3, &[1, -1]).is_homogeneous_word());
        assert!(BraidWord::identity(4).unwrap().is_homogeneous_word());
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(w(2, &[1]).permutation().cycles(), vec![vec![1, 2]]);
        assert!(w(3, &[1, 1, 1, 1, -2, -2]).is_pure());
        assert!(!w(2, &[1]).is_pure());
        // Δ_5 induces i ↦ 6-i.
        let d5 = BraidWord::half_twist(5).unwrap();
        let p = d5.permutation();
        for i in 1..=5 {
            assert_eq!(p.image_of(i), 6 - i);
        }
        assert!(d5.power(2).is_pure());
    }

    #[test]
    fn permutation_composes_with_product() {
        let a = w(5, &[1, -3, 4]);
        let b = w(5, &[2, 2, -4, 1]);
        let ab = a.product(&b).unwrap();
        let (pa, pb, pab) = (a.permutation(), b.permutation(), ab.permutation());
        for i in 1..=5 {
            assert_eq!(pab.image_of(i), pb.image_of(pa.image_of(i)));
        }
    }

    #[test]
    fn delete_strand_examples() {
        // β = σ3 σ4⁴ σ3³ ∈ B5 loses every letter when the middle strand goes.
        let beta = w(5, &[3, 4, 4, 4, 4, 3, 3, 3]);
        assert_eq!(beta.delete_strand(3).unwrap(), BraidWord::identity(4).unwrap());
        assert_eq!(w(5, &[3, 3, 4]).delete_strand(3).unwrap(), w(4, &[3]));
        // η = σ1⁴ σ2² ∈ B5: dropping the middle strand leaves the base word σ1⁴.
        let eta = w(5, &[1, 1, 1, 1, 2, 2]);
        assert_eq!(eta.delete_strand(3).unwrap(), w(4, &[1, 1, 1, 1]));
        assert!(eta.delete_strand(0).is_err());
        assert!(eta.delete_strand(6).is_err());
        // Deleting from the identity braid.
        assert_eq!(
            BraidWord::identity(5).unwrap().delete_strand(2).unwrap(),
            BraidWord::identity(4).unwrap()
        );
    }

    #[test]
    fn exponent_sum_examples() {
        assert_eq!(w(3, &[1, 1, 1, 1, -2, -2]).exponent_sum(), 2);
        assert_eq!(BraidWord::identity(6).unwrap().exponent_sum(), 0);
        for n in 2..=6 {
            assert_eq!(
                BraidWord::half_twist(n).unwrap().exponent_sum(),
                (n * (n - 1) / 2) as i64
            );
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        let b = BraidWord::parse("n=5  3 3 -4 -4").unwrap();
        assert_eq!(b, w(5, &[3, 3, -4, -4]));
        assert_eq!(b.to_string(), "n=5 3 3 -4 -4");
        assert_eq!(BraidWord::parse("n=4").unwrap(), BraidWord::identity(4).unwrap());
        assert!(matches!(BraidWord::parse("n=5 9"), Err(Error::Parse { .. })));
        assert!(matches!(BraidWord::parse("n=5 0"), Err(Error::Parse { .. })));
        assert!(matches!(BraidWord::parse(""), Err(Error::Parse { .. })));
        assert!(matches!(BraidWord::parse("5 1 2"), Err(Error::Parse { .. })));
        // Positional information names the offending token.
        match BraidWord::parse("n=5 1 2 9") {
            Err(Error::Parse { at, .. }) => assert_eq!(at, "token 4"),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
