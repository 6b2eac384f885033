//! Strand permutations of braids.

use serde::{Deserialize, Serialize};

/// A bijection of `{1..n}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub(crate) fn from_images_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut seen = vec![false; images.len()];
            images.iter().for_each(|&i| seen[i] = true);
            seen.into_iter().all(|s| s)
        });
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based index `i`.
    pub fn image_of(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` followed by `other`: `(self.then(other))(i) = other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// Cycles as sorted-by-minimum lists of 1-based indices, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_invert() {
        let p = Permutation::from_images_zero_based(vec![1, 2, 0]);
        let q = p.inverse();
        assert!(p.then(&q).is_identity());
        assert_eq!(p.image_of(1), 2);
        assert_eq!(q.image_of(2), 1);
    }

    #[test]
    fn cycles_of_half_twist_like_map() {
        // i ↦ 6-i on five symbols.
        let p = Permutation::from_images_zero_based(vec![4, 3, 2, 1, 0]);
        assert_eq!(p.cycles(), vec![vec![1, 5], vec![2, 4], vec![3]]);
    }
}
