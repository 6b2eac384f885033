//! Constructors for the explicit braid families with bounded normalized
//! entropy, each returned with its increasing-in-the-middle certificate and
//! genus bookkeeping.
//!
//! Every family produces an odd-strand fiber braid `β ∈ B_{2n+1}` that is
//! increasing in the middle, its skew-palindromization (the braid that
//! actually fibers), and the even-strand braid obtained by deleting the
//! middle strand, whose circular plat closure names the base manifold.

use crate::certify::even_power_form_violation;
use crate::error::{Error, Result};
use crate::increasing::{
    asserted_certificate, atom_adjacent_even_power_with_neutral, compose_product, Direction,
    IncreasingCertificate, Side,
};
use crate::linking::linking_sum_at;
use crate::word::BraidWord;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    /// `η(σ1^{2m}, j)`: two-fold cover branched over the `(2m,2)` torus link,
    /// the lens space `L(2m,1)`.
    Lens { m: i64, j: usize },
    /// The trivial-link family over `#_{n-1} S² × S¹`.
    TrivialLink { n: usize, j: usize },
    /// `η(b_m, j)` for the alternating 3-braid `b_m`, a Dehn filling of the
    /// minimally twisted chain link.
    ChainLink { m_vector: Vec<u32>, j: usize },
    /// The disk-twist family `α(p)` inside the fibered cone of the
    /// skew-palindromization of `σ3² σ4`.
    AlphaP { p: usize },
    /// `η(base, j)` for any pure even-power homogeneous base word.
    EtaGeneric { base: BraidWord, j: usize },
}

impl FamilySpec {
    pub fn label(&self) -> String {
        match self {
            FamilySpec::Lens { m, j } => format!("lens(m={m};j={j})"),
            FamilySpec::TrivialLink { n, j } => format!("trivial_link(n={n};j={j})"),
            FamilySpec::ChainLink { m_vector, j } => {
                let ms: Vec<String> = m_vector.iter().map(|m| m.to_string()).collect();
                format!("chain(m=[{}];j={j})", ms.join(";"))
            }
            FamilySpec::AlphaP { p } => format!("alpha(p={p})"),
            FamilySpec::EtaGeneric { base, j } => format!("eta(base={base};j={j})"),
        }
    }
}

/// One constructed family member.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyOutput {
    pub spec: FamilySpec,
    /// Odd-strand braid increasing in the middle.
    pub fiber_braid: BraidWord,
    /// The skew-palindromic braid whose mapping torus fibers.
    pub palindromized: BraidWord,
    /// Fiber braid with its middle strand removed (even strands).
    pub deleted: BraidWord,
    /// `deleted.strands()/2 - 1`.
    pub genus: usize,
    pub certificate: IncreasingCertificate,
    /// Cone class `(x, y)` for disk-twist families.
    pub class_label: Option<(i64, i64)>,
    /// Human-readable name of the base 3-manifold, when the family fixes one.
    pub manifold: Option<String>,
}

/// Genus of the closed surface carried by an even-strand braid.
pub fn genus_of(deleted: &BraidWord) -> Result<usize> {
    let n = deleted.strands();
    if !n.is_multiple_of(2) || n < 4 {
        return Err(Error::InvalidParameter(format!(
            "genus bookkeeping needs an even strand count >= 4, got {n}"
        )));
    }
    Ok(n / 2 - 1)
}

/// Genus reached after `p` disk twists interleaved with `k` half-twist
/// compositions: `g = n + p·u + p·k·n - 1`, so `g ≡ p·u - 1 (mod n)`.
pub fn twisted_fiber_genus(n: u64, u: u64, k: u64, p: u64) -> u64 {
    n + p * u + p * k * n - 1
}

/// `η(b, j) = b̄·σ_n^{2j} ∈ B_{2n+1}` for a pure even-power homogeneous base
/// `b ∈ B_n` covering all generators; increasing in the middle with `u = j`.
pub fn eta(base: &BraidWord, j: usize) -> Result<FamilyOutput> {
    let n = base.strands();
    if n < 2 {
        return Err(Error::InvalidBase(format!(
            "base needs at least 2 strands, got {n}"
        )));
    }
    if j < 1 {
        return Err(Error::InvalidParameter("eta needs j >= 1".into()));
    }
    if let Some(clause) = even_power_form_violation(base) {
        return Err(Error::InvalidBase(clause));
    }
    debug_assert!(base.is_pure(), "even-power words are pure");
    build_eta(FamilySpec::EtaGeneric {
        base: base.clone(),
        j,
    })
}

fn build_eta(spec: FamilySpec) -> Result<FamilyOutput> {
    let (base, j, manifold) = match &spec {
        FamilySpec::EtaGeneric { base, j } => (base.clone(), *j, None),
        FamilySpec::Lens { m, j } => {
            let letters = vec![m.signum(); 2 * m.unsigned_abs() as usize];
            (
                BraidWord::make(2, letters)?,
                *j,
                Some(format!("L({},1)", 2 * m)),
            )
        }
        FamilySpec::ChainLink { m_vector, j } => {
            let mut letters = Vec::new();
            for (idx, &m) in m_vector.iter().enumerate() {
                let gen = if idx % 2 == 0 { 1 } else { 2 };
                letters.extend(std::iter::repeat_n(gen, 2 * m as usize));
            }
            (
                BraidWord::make(3, letters)?,
                *j,
                Some(format!(
                    "Dehn filling of the minimally twisted {}-chain link",
                    m_vector.len()
                )),
            )
        }
        _ => unreachable!("build_eta only handles eta-shaped specs"),
    };
    let n = base.strands();
    let fiber_strands = 2 * n + 1;
    let middle = n + 1;
    let certificate = atom_adjacent_even_power_with_neutral(
        fiber_strands,
        middle,
        Side::Left,
        j as i64,
        base.letters(),
        &[],
    )?;
    let fiber_braid = certificate.braid.clone();
    let palindromized = fiber_braid.product(&fiber_braid.skew())?;
    let deleted = fiber_braid.delete_strand(middle)?;
    debug_assert_eq!(deleted.letters(), base.letters());
    let genus = genus_of(&deleted)?;
    Ok(FamilyOutput {
        spec,
        fiber_braid,
        palindromized,
        deleted,
        genus,
        certificate,
        class_label: None,
        manifold,
    })
}

/// Lens-space family: `η(σ_1^{2m}, j)` over `L(2m, 1)`.
pub fn lens_braid(m: i64, j: usize) -> Result<FamilyOutput> {
    if m == 0 {
        return Err(Error::InvalidParameter("lens family needs m != 0".into()));
    }
    if !(1..=2).contains(&j) {
        return Err(Error::InvalidParameter(format!(
            "lens family needs 1 <= j <= 2, got {j}"
        )));
    }
    build_eta(FamilySpec::Lens { m, j })
}

/// Chain-link family: `η(σ1^{2m1} σ2^{2m2} …, j)` for an alternating
/// positive 3-braid with `2k >= 6` twist regions.
pub fn chain_braid(m_vector: &[u32], j: usize) -> Result<FamilyOutput> {
    if !m_vector.len().is_multiple_of(2) || m_vector.len() < 6 {
        return Err(Error::InvalidParameter(format!(
            "chain family needs an even number >= 6 of twist exponents, got {}",
            m_vector.len()
        )));
    }
    if m_vector.contains(&0) {
        return Err(Error::InvalidParameter(
            "chain family needs every twist exponent positive".into(),
        ));
    }
    if !(1..=3).contains(&j) {
        return Err(Error::InvalidParameter(format!(
            "chain family needs 1 <= j <= 3, got {j}"
        )));
    }
    build_eta(FamilySpec::ChainLink {
        m_vector: m_vector.to_vec(),
        j,
    })
}

/// Trivial-link family over `#_{n-1} S² × S¹`:
/// `β = σ_{n+1}…σ_{2n-1}·σ_{2n}⁴·σ_{2n-1}³…σ_{n+1}³ ∈ B_{2n+1}` with
/// `u(β, n+1) = 2n` and `β• = e_{2n}`; `β_(j) = β·σ_{n+1}^{2j}` for `j < n`.
pub fn trivial_link_beta(n: usize, j: usize) -> Result<FamilyOutput> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "trivial-link family needs n >= 2, got {n}"
        )));
    }
    if !(1..=n).contains(&j) {
        return Err(Error::InvalidParameter(format!(
            "trivial-link family needs 1 <= j <= {n}, got {j}"
        )));
    }
    let strands = 2 * n + 1;
    let middle = n + 1;
    let mut letters: Vec<i64> = (middle as i64..=2 * n as i64 - 1).collect();
    letters.extend(std::iter::repeat_n(2 * n as i64, 4));
    for i in (middle as i64..=2 * n as i64 - 1).rev() {
        letters.extend(std::iter::repeat_n(i, 3));
    }
    let beta = BraidWord::make(strands, letters)?;
    let base_cert = asserted_certificate(
        beta,
        middle,
        2 * n as u64,
        Direction::Increasing,
        format!("trivial-link beta(n={n})"),
    )?;
    let certificate = if j == n {
        base_cert
    } else {
        let twist =
            atom_adjacent_even_power_with_neutral(strands, middle, Side::Right, j as i64, &[], &[])?;
        compose_product(&base_cert, &twist)?
    };
    let fiber_braid = certificate.braid.clone();
    let palindromized = fiber_braid.product(&fiber_braid.skew())?;
    let deleted = fiber_braid.delete_strand(middle)?;
    debug_assert!(deleted.is_empty(), "the deleted trivial-link braid is trivial");
    let genus = genus_of(&deleted)?;
    Ok(FamilyOutput {
        spec: FamilySpec::TrivialLink { n, j },
        fiber_braid,
        palindromized,
        deleted,
        genus,
        certificate,
        class_label: None,
        manifold: Some(format!("#_{} S^2 x S^1", n - 1)),
    })
}

/// Disk-twist family `α(p) = σ3 σ4 … σ_{4+2p} σ_{2+p} ∈ B_{5+2p}`: the class
/// `(1, p)` in the cone of the skew-palindromization of `σ3² σ4`.
pub fn alpha_p(p: usize) -> Result<FamilyOutput> {
    if p < 1 {
        return Err(Error::InvalidParameter("alpha family needs p >= 1".into()));
    }
    let strands = 5 + 2 * p;
    let middle = p + 3;
    let mut letters: Vec<i64> = (3..=(4 + 2 * p) as i64).collect();
    letters.push((2 + p) as i64);
    let fiber_braid = BraidWord::make(strands, letters)?;
    // Increasing in the middle; the sign condition pins u to the linking sum.
    let u = linking_sum_at(&fiber_braid, middle)?;
    debug_assert_eq!(u, 1);
    let certificate = asserted_certificate(
        fiber_braid.clone(),
        middle,
        u as u64,
        Direction::Increasing,
        format!("alpha({p}) disk-twist word"),
    )?;
    let palindromized = fiber_braid.palindromize();
    let deleted = fiber_braid.delete_strand(middle)?;
    let genus = genus_of(&deleted)?;
    // Norm bookkeeping: the class (x, y) lives on a fiber with
    // ||(x,y)|| + 1 strands.
    debug_assert_eq!(strands, genus * 2 + 2 + 1);
    Ok(FamilyOutput {
        spec: FamilySpec::AlphaP { p },
        fiber_braid,
        palindromized,
        deleted,
        genus,
        certificate,
        class_label: Some((1, p as i64)),
        manifold: None,
    })
}
