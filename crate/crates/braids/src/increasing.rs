//! Certificate calculus for braids that are increasing (or decreasing) at a
//! fixed strand index.
//!
//! The property is established constructively, never decided geometrically:
//! atoms carry known intersection numbers, and certificates compose under
//! the product rule (`u` is additive) and the skew rule (`u` is preserved,
//! the index reflects to `n-i+1`). Each certificate can be cross-checked
//! against the linking sum at its index, which the sign condition on the
//! spanning disk forces to equal `±u`.

use crate::error::{Error, Result};
use crate::linking::linking_sum_at;
use crate::word::BraidWord;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// Which neighbour of the tracked index carries the even-power core.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    /// Core on `σ_{i-1}`.
    Left,
    /// Core on `σ_i`.
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum AtomKind {
    /// `σ_{i∓1}^{2m}` next to the tracked strand, optionally padded by
    /// letters that never meet the tracked strand's disk.
    AdjacentEvenPower { side: Side, half_turns: i64 },
    /// `Δ^p` on an odd number of strands, tracked at the middle.
    HalfTwistPower { power: usize },
    /// A braid whose intersection number is asserted as family data.
    FamilyAsserted { label: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Derivation {
    Atom(AtomKind),
    Product(Box<IncreasingCertificate>, Box<IncreasingCertificate>),
    Skew(Box<IncreasingCertificate>),
}

/// A proof that `braid` is `index`-increasing (or -decreasing) with
/// intersection number `u`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncreasingCertificate {
    pub braid: BraidWord,
    pub index: usize,
    pub u: u64,
    pub direction: Direction,
    pub derivation: Derivation,
}

fn require_fixed(braid: &BraidWord, index: usize) -> Result<()> {
    if index < 1 || index > braid.strands() {
        return Err(Error::InvalidIndex {
            index,
            strands: braid.strands(),
        });
    }
    if braid.permutation().image_of(index) != index {
        return Err(Error::NotFixedStrand { index });
    }
    Ok(())
}

/// Certificate for `σ_i^{2m}` (side `Right`) or `σ_{i-1}^{2m}` (side `Left`)
/// at index `i`, with `u = |m|`.
pub fn atom_adjacent_even_power(
    n: usize,
    i: usize,
    side: Side,
    m: i64,
) -> Result<IncreasingCertificate> {
    atom_adjacent_even_power_with_neutral(n, i, side, m, &[], &[])
}

/// Same atom padded with neutral letters before and after the core. Neutral
/// letters must act strictly away from the tracked strand: indices `>= i+1`
/// for a `Right` core and `<= i-2` for a `Left` core.
pub fn atom_adjacent_even_power_with_neutral(
    n: usize,
    i: usize,
    side: Side,
    m: i64,
    prefix: &[i64],
    suffix: &[i64],
) -> Result<IncreasingCertificate> {
    if m == 0 {
        return Err(Error::InvalidParameter("even power needs m != 0".into()));
    }
    let core_index = match side {
        Side::Right => i as i64,
        Side::Left => i as i64 - 1,
    };
    if core_index < 1 || core_index > n as i64 - 1 || i > n {
        return Err(Error::InvalidIndex { index: i, strands: n });
    }
    for &g in prefix.iter().chain(suffix.iter()) {
        let idx = g.unsigned_abs() as i64;
        let ok = match side {
            Side::Right => idx > i as i64,
            Side::Left => idx <= i as i64 - 2,
        };
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "neutral letter {g} is not clear of the tracked strand {i}"
            )));
        }
    }
    let mut letters: Vec<i64> = prefix.to_vec();
    letters.extend(std::iter::repeat_n(core_index * m.signum(), 2 * m.unsigned_abs() as usize));
    letters.extend_from_slice(suffix);
    let braid = BraidWord::make(n, letters)?;
    require_fixed(&braid, i)?;
    Ok(IncreasingCertificate {
        braid,
        index: i,
        u: m.unsigned_abs(),
        direction: if m > 0 {
            Direction::Increasing
        } else {
            Direction::Decreasing
        },
        derivation: Derivation::Atom(AtomKind::AdjacentEvenPower {
            side,
            half_turns: m,
        }),
    })
}

/// Certificate for `Δ^p` on `2n+1` strands at the middle index, `u = p·n`.
pub fn atom_half_twist_power(n_odd: usize, p: usize) -> Result<IncreasingCertificate> {
    if n_odd.is_multiple_of(2) || n_odd < 3 {
        return Err(Error::NotOddStrands(n_odd));
    }
    if p == 0 {
        return Err(Error::InvalidParameter("half-twist power needs p >= 1".into()));
    }
    let half = (n_odd - 1) / 2;
    let braid = BraidWord::half_twist(n_odd)?.power(p);
    let index = half + 1;
    require_fixed(&braid, index)?;
    Ok(IncreasingCertificate {
        braid,
        index,
        u: (p * half) as u64,
        direction: Direction::Increasing,
        derivation: Derivation::Atom(AtomKind::HalfTwistPower { power: p }),
    })
}

/// Certificate whose intersection number is asserted family data rather than
/// derived; it still must pass [`check_consistency`].
pub fn asserted_certificate(
    braid: BraidWord,
    index: usize,
    u: u64,
    direction: Direction,
    label: impl Into<String>,
) -> Result<IncreasingCertificate> {
    if u == 0 {
        return Err(Error::InvalidParameter(
            "intersection number must be at least 1".into(),
        ));
    }
    require_fixed(&braid, index)?;
    Ok(IncreasingCertificate {
        braid,
        index,
        u,
        direction,
        derivation: Derivation::Atom(AtomKind::FamilyAsserted {
            label: label.into(),
        }),
    })
}

/// Product rule: `u(b·b', i) = u(b, i) + u(b', i)`. Mixing directions is
/// rejected, not cancelled.
pub fn compose_product(
    c1: &IncreasingCertificate,
    c2: &IncreasingCertificate,
) -> Result<IncreasingCertificate> {
    if c1.braid.strands() != c2.braid.strands() {
        return Err(Error::IncompatibleCertificates(format!(
            "strand counts {} and {} differ",
            c1.braid.strands(),
            c2.braid.strands()
        )));
    }
    if c1.index != c2.index {
        return Err(Error::IncompatibleCertificates(format!(
            "indices {} and {} differ",
            c1.index, c2.index
        )));
    }
    if c1.direction != c2.direction {
        return Err(Error::IncompatibleCertificates(
            "directions differ; mixed-direction products are not composed".into(),
        ));
    }
    Ok(IncreasingCertificate {
        braid: c1.braid.product(&c2.braid)?,
        index: c1.index,
        u: c1.u + c2.u,
        direction: c1.direction,
        derivation: Derivation::Product(Box::new(c1.clone()), Box::new(c2.clone())),
    })
}

/// Skew rule: `u(skew(b), n-i+1) = u(b, i)`, direction preserved.
pub fn apply_skew(c: &IncreasingCertificate) -> IncreasingCertificate {
    let n = c.braid.strands();
    IncreasingCertificate {
        braid: c.braid.skew(),
        index: n - c.index + 1,
        u: c.u,
        direction: c.direction,
        derivation: Derivation::Skew(Box::new(c.clone())),
    }
}

/// Cross-validate a certificate: the linking sum at the tracked index must
/// equal `+u` for increasing and `-u` for decreasing braids. One-directional
/// evidence only.
pub fn check_consistency(c: &IncreasingCertificate) -> Result<bool> {
    let sum = linking_sum_at(&c.braid, c.index)?;
    let expected = match c.direction {
        Direction::Increasing => c.u as i64,
        Direction::Decreasing => -(c.u as i64),
    };
    Ok(sum == expected)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i64]) -> BraidWord {
        BraidWord::make(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn adjacent_even_power_atoms() {
        let c = atom_adjacent_even_power(5, 3, Side::Right, 1).unwrap();
        assert_eq!(c.braid, w(5, &[3, 3]));
        assert_eq!((c.u, c.direction), (1, Direction::Increasing));
        assert!(check_consistency(&c).unwrap());

        let c = atom_adjacent_even_power(5, 3, Side::Left, -1).unwrap();
        assert_eq!(c.braid, w(5, &[-2, -2]));
        assert_eq!((c.u, c.direction), (1, Direction::Decreasing));
        assert!(check_consistency(&c).unwrap());

        let c = atom_adjacent_even_power(3, 1, Side::Right, 2).unwrap();
        assert_eq!(c.braid, w(3, &[1, 1, 1, 1]));
        assert_eq!(c.u, 2);
        assert!(check_consistency(&c).unwrap());

        assert!(atom_adjacent_even_power(5, 1, Side::Left, 1).is_err());
        assert!(atom_adjacent_even_power(5, 5, Side::Right, 1).is_err());
        assert!(atom_adjacent_even_power(5, 3, Side::Right, 0).is_err());
    }

    #[test]
    fn neutral_padding() {
        // σ3² σ4⁻² is 3-increasing with u = 1; the σ4⁻² tail stays clear.
        let c =
            atom_adjacent_even_power_with_neutral(5, 3, Side::Right, 1, &[], &[-4, -4]).unwrap();
        assert_eq!(c.braid, w(5, &[3, 3, -4, -4]));
        assert!(check_consistency(&c).unwrap());
        // σ1⁻² σ2² is 3-increasing with u = 1 (left core, neutral prefix).
        let c =
            atom_adjacent_even_power_with_neutral(5, 3, Side::Left, 1, &[-1, -1], &[]).unwrap();
        assert_eq!(c.braid, w(5, &[-1, -1, 2, 2]));
        assert!(check_consistency(&c).unwrap());
        // A letter touching the tracked strand is refused.
        assert!(
            atom_adjacent_even_power_with_neutral(5, 3, Side::Right, 1, &[], &[2]).is_err()
        );
    }

    #[test]
    fn half_twist_atoms() {
        let c = atom_half_twist_power(5, 1).unwrap();
        assert_eq!((c.index, c.u), (3, 2));
        assert!(check_consistency(&c).unwrap());
        assert_eq!(atom_half_twist_power(5, 3).unwrap().u, 6);
        assert_eq!(atom_half_twist_power(7, 1).unwrap().u, 3);
        assert!(check_consistency(&atom_half_twist_power(7, 2).unwrap()).unwrap());
        assert!(matches!(
            atom_half_twist_power(4, 1),
            Err(Error::NotOddStrands(4))
        ));
    }

    #[test]
    fn product_rule_matches_worked_example() {
        // skew(σ3²σ4⁻²) · σ3²σ4⁻² is 3-increasing with u = 1 + 1 = 2.
        let right =
            atom_adjacent_even_power_with_neutral(5, 3, Side::Right, 1, &[], &[-4, -4]).unwrap();
        let left = apply_skew(&right);
        assert_eq!(left.braid, w(5, &[-1, -1, 2, 2]));
        assert_eq!(left.index, 3);
        let both = compose_product(&left, &right).unwrap();
        assert_eq!(both.braid, w(5, &[-1, -1, 2, 2, 3, 3, -4, -4]));
        assert_eq!(both.u, 2);
        assert!(check_consistency(&both).unwrap());
    }

    #[test]
    fn half_twist_additivity() {
        let one = atom_half_twist_power(5, 1).unwrap();
        let two = compose_product(&one, &one).unwrap();
        assert_eq!(two.u, 4);
        assert_eq!(two.braid, BraidWord::half_twist(5).unwrap().power(2));
        assert!(check_consistency(&two).unwrap());
    }

    #[test]
    fn skew_rule() {
        // σ1² in B3 at index 1 reflects to σ2² at index 3.
        let c = atom_adjacent_even_power(3, 1, Side::Right, 1).unwrap();
        let s = apply_skew(&c);
        assert_eq!(s.braid, w(3, &[2, 2]));
        assert_eq!((s.index, s.u), (3, 1));
        assert!(check_consistency(&s).unwrap());
        // Skew is an involution on braid, index and u.
        let ss = apply_skew(&s);
        assert_eq!(ss.braid, c.braid);
        assert_eq!((ss.index, ss.u, ss.direction), (c.index, c.u, c.direction));
        // The middle index is self-dual.
        let mid = atom_half_twist_power(5, 1).unwrap();
        assert_eq!(apply_skew(&mid).index, 3);
        assert_eq!(apply_skew(&mid).braid.word_equal(&mid.braid).unwrap(), true);
    }

    #[test]
    fn palindromization_doubles_u() {
        for (n, i, side, m) in [(5, 3, Side::Right, 1), (7, 4, Side::Left, 2), (9, 5, Side::Right, 3)]
        {
            let c = atom_adjacent_even_power(n, i, side, m).unwrap();
            // Middle index: skew keeps the index, so the product composes.
            let tilde = compose_product(&apply_skew(&c), &c).unwrap();
            assert_eq!(tilde.u, 2 * c.u);
            assert_eq!(tilde.braid, c.braid.palindromize());
            assert!(check_consistency(&tilde).unwrap());
        }
    }

    #[test]
    fn incompatible_compositions_are_rejected() {
        let inc = atom_adjacent_even_power(5, 3, Side::Right, 1).unwrap();
        let dec = atom_adjacent_even_power(5, 3, Side::Left, -1).unwrap();
        assert!(matches!(
            compose_product(&inc, &dec),
            Err(Error::IncompatibleCertificates(_))
        ));
        let other_index = atom_adjacent_even_power(5, 2, Side::Right, 1).unwrap();
        assert!(compose_product(&inc, &other_index).is_err());
        let other_n = atom_adjacent_even_power(7, 3, Side::Right, 1).unwrap();
        assert!(compose_product(&inc, &other_n).is_err());
    }

    #[test]
    fn corrupted_certificate_fails_consistency() {
        let mut c = atom_adjacent_even_power(5, 3, Side::Right, 2).unwrap();
        assert!(check_consistency(&c).unwrap());
        c.u = 5;
        assert!(!check_consistency(&c).unwrap());
        // An index the permutation moves is a hard error.
        let bad = asserted_certificate(w(3, &[1]), 1, 1, Direction::Increasing, "nonsense");
        assert!(matches!(bad, Err(Error::NotFixedStrand { .. })));
    }

    #[test]
    fn certificates_serialize() {
        let right =
            atom_adjacent_even_power_with_neutral(5, 3, Side::Right, 1, &[], &[-4, -4]).unwrap();
        let tilde = compose_product(&apply_skew(&right), &right).unwrap();
        let json = serde_json::to_string(&tilde).unwrap();
        let back: IncreasingCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(tilde, back);
        assert!(json.contains("Skew") && json.contains("AdjacentEvenPower"));
    }
}
