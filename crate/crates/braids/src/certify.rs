//! Pseudo-Anosov certification for pure braids from linking numbers.
//!
//! A pure braid whose closure-component linking numbers distinguish every
//! proper subset of strands is pseudo-Anosov: equal linking numbers across
//! all pairs would allow periodicity, and a reducing disk would force the
//! linking numbers from outside to be constant on the strands it encloses.
//! The certificate is one-directional: `NotCertified` never means
//! "not pseudo-Anosov".

use crate::error::{Error, Result};
use crate::linking::strand_linking_matrix;
use crate::word::BraidWord;
use serde::{Deserialize, Serialize};

/// Hard cap for the brute-force subset enumeration.
pub const DEFAULT_SUBSET_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    PseudoAnosov,
    NotCertified,
}

/// Why certification failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    /// Every off-diagonal linking number is the same value.
    AllLinkingNumbersEqual,
    /// No triple `(j, i_s, i_t)` distinguishes this subset (1-based strands).
    OffendingSubset(Vec<usize>),
    /// The word fails a clause of the even-power syntactic form.
    SyntacticClause(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certification {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl Certification {
    fn certified() -> Self {
        Certification {
            verdict: Verdict::PseudoAnosov,
            witness: None,
        }
    }

    fn refused(witness: Witness) -> Self {
        Certification {
            verdict: Verdict::NotCertified,
            witness: Some(witness),
        }
    }

    pub fn is_pseudo_anosov(&self) -> bool {
        self.verdict == Verdict::PseudoAnosov
    }
}

/// Periodicity exclusion: a periodic pure braid has all pairwise linking
/// numbers equal, so unequal entries rule periodicity out.
pub fn exclude_periodic(b: &BraidWord) -> Result<bool> {
    if b.strands() < 3 {
        return Err(Error::TooFewStrands {
            got: b.strands(),
            min: 3,
        });
    }
    let lk = crate::linking::linking_matrix(b);
    if !b.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(!lk.off_diagonal_all_equal())
}

/// Full subset criterion with the default cap.
pub fn certify_subset_criterion(b: &BraidWord) -> Result<Certification> {
    certify_subset_criterion_with_cap(b, DEFAULT_SUBSET_CAP)
}

/// Enumerate every proper strand subset `I` with `2 <= |I| < n` and demand a
/// distinguishing triple: some `j` outside `I` and `i_s, i_t` inside with
/// `lk(j, i_s) != lk(j, i_t)`.
pub fn certify_subset_criterion_with_cap(b: &BraidWord, cap: usize) -> Result<Certification> {
    let n = b.strands();
    if n < 3 {
        return Err(Error::TooFewStrands { got: n, min: 3 });
    }
    if n > cap {
        return Err(Error::SubsetBlowup { strands: n, cap });
    }
    let lk = strand_linking_matrix(b)?;

    let reference = lk[0][1];
    let all_equal = (0..n).all(|p| (0..n).all(|q| p == q || lk[p][q] == reference));
    if all_equal {
        return Ok(Certification::refused(Witness::AllLinkingNumbersEqual));
    }

    for mask in 0u32..(1u32 << n) {
        let k = mask.count_ones() as usize;
        if k < 2 || k >= n {
            continue;
        }
        let inside: Vec<usize> = (0..n).filter(|s| mask & (1 << s) != 0).collect();
        let mut found = false;
        'search: for j in 0..n {
            if mask & (1 << j) != 0 {
                continue;
            }
            let first = lk[j][inside[0]];
            for &i in &inside[1..] {
                if lk[j][i] != first {
                    found = true;
                    break 'search;
                }
            }
        }
        if !found {
            return Ok(Certification::refused(Witness::OffendingSubset(
                inside.into_iter().map(|s| s + 1).collect(),
            )));
        }
    }
    Ok(Certification::certified())
}

/// Syntactic check that the word is `σ_{j1}^{2m1} … σ_{jk}^{2mk}`: maximal
/// runs of one signed letter, every run of even length, homogeneous, and the
/// indices cover `1..n-1`. Returns the violated clause on failure.
pub(crate) fn even_power_form_violation(b: &BraidWord) -> Option<String> {
    let n = b.strands();
    let mut runs: Vec<(i64, usize)> = Vec::new();
    for &g in b.letters() {
        match runs.last_mut() {
            Some((letter, count)) if *letter == g => *count += 1,
            _ => runs.push((g, 1)),
        }
    }
    for &(letter, count) in &runs {
        if count % 2 != 0 {
            return Some(format!(
                "run of letter {letter} has odd length {count}; every power must be even"
            ));
        }
    }
    if !b.is_homogeneous_word() {
        return Some("word is not homogeneous".into());
    }
    let mut present = vec![false; n];
    for &(letter, _) in &runs {
        present[letter.unsigned_abs() as usize] = true;
    }
    for i in 1..n {
        if !present[i] {
            return Some(format!("generator {i} does not appear"));
        }
    }
    None
}

/// Fast certificate for words in even-power homogeneous form covering all
/// generators. Purely word-syntactic: braids equal to such a word but not
/// written in the form are not certified by this test.
pub fn certify_even_power_form(b: &BraidWord) -> Result<Certification> {
    if b.strands() < 4 {
        return Err(Error::TooFewStrands {
            got: b.strands(),
            min: 4,
        });
    }
    match even_power_form_violation(b) {
        None => Ok(Certification::certified()),
        Some(clause) => Ok(Certification::refused(Witness::SyntacticClause(clause))),
    }
}
