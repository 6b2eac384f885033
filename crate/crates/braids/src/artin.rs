//! The Artin action of braids on the free group of the punctured disk.
//!
//! The generator `σ_i` maps `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i` and fixes
//! the other free generators. The induced map `B_n → Aut(F_n)` is faithful, so
//! comparing generator images decides braid-word equality exactly.

use crate::word::BraidWord;

/// A reduced word in the free group `F_n`; letters are `±k` for `1 <= k <= n`.
pub type FreeWord = Vec<i64>;

/// Push one letter onto a reduced word, cancelling if possible.
fn push_reduced(word: &mut FreeWord, letter: i64) {
    if word.last() == Some(&-letter) {
        word.pop();
    } else {
        word.push(letter);
    }
}

fn extend_reduced(word: &mut FreeWord, tail: impl IntoIterator<Item = i64>) {
    for letter in tail {
        push_reduced(word, letter);
    }
}

/// Image of the free letter `g` under the braid letter `s` (a signed generator
/// index), written onto `out`.
fn substitute_letter(out: &mut FreeWord, g: i64, s: i64) {
    let i = s.unsigned_abs() as i64;
    let k = g.abs();
    let image: &[i64] = if s > 0 {
        if k == i {
            &[i, i + 1, -i]
        } else if k == i + 1 {
            &[i]
        } else {
            &[k]
        }
    } else if k == i {
        &[i + 1]
    } else if k == i + 1 {
        &[-(i + 1), i, i + 1]
    } else {
        &[k]
    };
    if g > 0 {
        extend_reduced(out, image.iter().copied());
    } else {
        extend_reduced(out, image.iter().rev().map(|&l| -l));
    }
}

/// Apply one braid letter to a reduced free word.
fn apply_braid_letter(word: &FreeWord, s: i64) -> FreeWord {
    let mut out = FreeWord::with_capacity(word.len() * 2);
    for &g in word {
        substitute_letter(&mut out, g, s);
    }
    out
}

/// Apply a whole braid word (letters left to right, matching the product
/// convention `act(a·b, w) = act(b, act(a, w))`).
pub fn apply_braid(b: &BraidWord, word: &FreeWord) -> FreeWord {
    let mut cur = word.clone();
    for &s in b.letters() {
        cur = apply_braid_letter(&cur, s);
    }
    cur
}

/// Images of all free generators `x_1..x_n` under the braid.
pub fn generator_images(b: &BraidWord) -> Vec<FreeWord> {
    let n = b.strands();
    let mut images: Vec<FreeWord> = (1..=n as i64).map(|k| vec![k]).collect();
    for &s in b.letters() {
        for image in images.iter_mut() {
            *image = apply_braid_letter(image, s);
        }
    }
    images
}

/// Do two same-width braid words induce the same free-group automorphism?
pub fn same_action(a: &BraidWord, b: &BraidWord) -> bool {
    debug_assert_eq!(a.strands(), b.strands());
    generator_images(a) == generator_images(b)
}

/// Cyclically reduce a free word (conjugacy-class normal form up to rotation).
pub fn cyclic_reduce(word: &FreeWord) -> FreeWord {
    let mut reduced = FreeWord::new();
    extend_reduced(&mut reduced, word.iter().copied());
    let mut lo = 0;
    let mut hi = reduced.len();
    while hi - lo >= 2 && reduced[lo] == -reduced[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    reduced[lo..hi].to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::BraidWord;

    fn w(n: usize, letters: &[i64]) -> BraidWord {
        BraidWord::make(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn generator_inverse_cancels() {
        for n in 2..=5 {
            for i in 1..n as i64 {
                let ab = w(n, &[i, -i]);
                let ba = w(n, &[-i, i]);
                let e = BraidWord::identity(n).unwrap();
                assert!(same_action(&ab, &e));
                assert!(same_action(&ba, &e));
            }
        }
    }

    #[test]
    fn braid_relations_hold() {
        assert!(same_action(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])));
        assert!(same_action(&w(5, &[1, 3]), &w(5, &[3, 1])));
        assert!(same_action(&w(5, &[2, 4, 2, -4, -2, -2]), &BraidWord::identity(5).unwrap()));
    }

    #[test]
    fn distinguishes_center_and_twists() {
        let e = BraidWord::identity(4).unwrap();
        let full_twist = BraidWord::half_twist(4).unwrap().power(2);
        assert!(!same_action(&full_twist, &e));
        assert!(!same_action(&w(4, &[1]), &w(4, &[-1])));
        // A Dehn twist about a round curve (σ1²) is not the identity.
        assert!(!same_action(&w(4, &[1, 1]), &e));
    }

    #[test]
    fn half_twist_two_forms_agree() {
        for n in 2..=6 {
            let a = BraidWord::half_twist(n).unwrap();
            let b = BraidWord::half_twist_reversed_form(n).unwrap();
            assert!(same_action(&a, &b));
            assert!(same_action(&a.skew(), &a));
        }
    }

    #[test]
    fn cyclic_reduction() {
        assert_eq!(cyclic_reduce(&vec![1, 2, -1]), vec![2]);
        assert_eq!(cyclic_reduce(&vec![1, -1]), Vec::<i64>::new());
        assert_eq!(cyclic_reduce(&vec![-3, 1, 2, 3]), vec![1, 2]);
    }
}
