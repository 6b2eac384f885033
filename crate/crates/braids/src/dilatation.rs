//! Dilatation estimation by iterating the braid action on exact integer
//! lamination coordinates, with a Burau lower bound and normalized entropies.
//!
//! Coordinates of an essential lamination grow like `λ^t` under a
//! pseudo-Anosov braid, so the per-iteration increment of the log `ℓ¹` norm
//! converges to `log λ`. Arithmetic stays exact; logarithms are taken only
//! at readout.

use crate::burau;
use crate::error::{Error, Result};
use crate::word::BraidWord;
use crate::{Coord, LaminationState};
use num_traits::ToPrimitive;
use serde::Serialize;
use std::collections::HashSet;

pub const DEFAULT_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_MAX_ITER: usize = 2000;
/// Width of the sliding window used for the growth-rate readout.
pub const GROWTH_WINDOW: usize = 10;

/// Outcome of one growth-rate estimation run.
#[derive(Debug, Clone, Serialize)]
pub struct DilatationEstimate {
    pub log_lambda: f64,
    pub lambda: f64,
    pub iterations: usize,
    pub tolerance: f64,
    pub burau_lower_bound: f64,
    pub converged: bool,
    /// Per-iteration increments of the log `ℓ¹` norm.
    pub growth_trace: Vec<f64>,
}

/// Canonical starting lamination for the estimator (the nested round
/// multicurve, `a = 0`, `b = 1`).
pub fn lamination_init(n: usize) -> Result<LaminationState> {
    LaminationState::canonical(n)
}

/// Natural log of a positive big integer, exact to f64 precision.
fn log_big(x: &Coord) -> f64 {
    debug_assert!(x.to_f64().is_none_or(|v| v >= 0.0));
    let bits = x.bits();
    if bits <= 53 {
        return x.to_f64().expect("small value fits").ln();
    }
    let shift = bits - 53;
    let top = (x >> shift).to_f64().expect("53 bits fit");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Estimate `log λ(b)` by iterating the action of `b` on the canonical
/// lamination. The estimate is the sliding-window mean increment of the log
/// norm; the run converges when two consecutive window means agree within
/// `tolerance`. An exactly recurring state (periodic braids, including the
/// central full twists) reports zero growth immediately.
pub fn entropy_estimate(
    b: &BraidWord,
    tolerance: f64,
    max_iter: usize,
) -> Result<DilatationEstimate> {
    let n = b.strands();
    if n < 3 {
        return Err(Error::TooFewStrands { got: n, min: 3 });
    }
    if !(tolerance > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    if max_iter == 0 {
        return Err(Error::InvalidParameter("max_iter must be positive".into()));
    }
    let burau_lb = burau::burau_lower_bound(b)?;
    let mut state = lamination_init(n)?;
    let initial_norm = state.l1_norm();
    let recurrence_bound: Coord = &initial_norm * Coord::from(64);

    let mut log_norms = vec![log_big(&initial_norm)];
    let mut growth_trace = Vec::new();
    let mut seen: HashSet<Vec<Coord>> = HashSet::new();
    seen.insert(state.coords());

    let mut window_prev: Option<f64> = None;
    let mut step_history: Vec<f64> = Vec::new();
    let mut converged = false;
    let mut iterations = 0;
    let mut log_lambda = 0.0;

    for t in 1..=max_iter {
        state = state.act(b)?;
        iterations = t;
        let norm = state.l1_norm();
        let log_norm = log_big(&norm);
        growth_trace.push(log_norm - log_norms[t - 1]);
        log_norms.push(log_norm);

        // Exact recurrence means the orbit is finite: zero growth.
        if t <= 600 && norm <= recurrence_bound && !seen.insert(state.coords()) {
            log_lambda = 0.0;
            converged = true;
            break;
        }

        if t >= GROWTH_WINDOW {
            let window = (log_norms[t] - log_norms[t - GROWTH_WINDOW]) / GROWTH_WINDOW as f64;
            if let Some(prev) = window_prev {
                step_history.push((window - prev).abs());
            }
            window_prev = Some(window);
            log_lambda = window.max(0.0);
            // Window means converge geometrically; a step bound alone can
            // leave a tail of step/(1-r), so estimate the decay ratio r from
            // recent steps (max of ratios, capped) and require the implied
            // remaining tail to fall below the tolerance, three times in a
            // row.
            if step_history.len() >= 4 {
                let recent = &step_history[step_history.len().saturating_sub(7)..];
                let mut ratio: f64 = 0.0;
                for pair in recent.windows(2) {
                    if pair[0] > 0.0 {
                        ratio = ratio.max(pair[1] / pair[0]);
                    }
                }
                let ratio = ratio.min(0.99);
                let threshold = tolerance * ((1.0 - ratio) / ratio.max(0.01)).min(1.0);
                let last3 = &step_history[step_history.len() - 3..];
                if last3.iter().all(|&d| d <= threshold) {
                    converged = true;
                    break;
                }
            }
        } else {
            log_lambda = ((log_norms[t] - log_norms[0]) / t as f64).max(0.0);
        }
    }

    Ok(DilatationEstimate {
        log_lambda,
        lambda: log_lambda.exp(),
        iterations,
        tolerance,
        burau_lower_bound: burau_lb,
        converged,
        growth_trace,
    })
}

/// Normalized entropy on the punctured disk: `(n-1)·log λ`.
pub fn normalized_entropy_disk(b: &BraidWord, est: &DilatationEstimate) -> f64 {
    (b.strands() - 1) as f64 * est.log_lambda
}

/// Normalized entropy on the closed surface of genus `strands/2 - 1` carried
/// by an even-strand braid: `(strands - 4)·log λ`.
pub fn normalized_entropy_closed(deleted_strands: usize, est: &DilatationEstimate) -> Result<f64> {
    if !deleted_strands.is_multiple_of(2) || deleted_strands < 6 {
        return Err(Error::InvalidParameter(format!(
            "closed-surface normalization needs an even strand count >= 6, got {deleted_strands}"
        )));
    }
    Ok((deleted_strands - 4) as f64 * est.log_lambda)
}
