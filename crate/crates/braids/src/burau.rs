//! Reduced Burau representation specialized at `t = -1`, and the resulting
//! homological lower bound for the dilatation.
//!
//! At `t = -1` the reduced Burau matrices are integral and unimodular; the
//! spectral radius of the image of a braid bounds its dilatation from below.

use crate::error::{Error, Result};
use crate::word::BraidWord;
use crate::Coord;
use num_traits::{Signed, ToPrimitive, Zero};

/// Dense square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub dim: usize,
    data: Vec<Coord>,
}

impl IntMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut m = IntMatrix {
            dim,
            data: vec![Coord::zero(); dim * dim],
        };
        for i in 0..dim {
            m.data[i * dim + i] = Coord::from(1);
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &Coord {
        &self.data[r * self.dim + c]
    }

    fn set(&mut self, r: usize, c: usize, v: impl Into<Coord>) {
        self.data[r * self.dim + c] = v.into();
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim);
        let dim = self.dim;
        let mut out = IntMatrix {
            dim,
            data: vec![Coord::zero(); dim * dim],
        };
        for r in 0..dim {
            for k in 0..dim {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..dim {
                    let add = a * other.get(k, c);
                    out.data[r * dim + c] += add;
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Coord {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }
}

/// Reduced Burau matrix of one generator letter at `t = -1`.
/// Dimension is `n - 1`; `n = 2` gives the 1×1 identity.
fn generator_matrix(n: usize, g: i64) -> IntMatrix {
    let dim = n - 1;
    let i = g.unsigned_abs() as usize;
    let mut m = IntMatrix::identity(dim);
    if dim == 1 {
        return m; // the single reduced coordinate is fixed up to sign of t
    }
    if g > 0 {
        if i == 1 {
            m.set(1, 0, 1); // row i+1 picks up column i
        } else if i == n - 1 {
            m.set(i - 2, i - 1, -1);
        } else {
            m.set(i - 2, i - 1, -1);
            m.set(i, i - 1, 1);
        }
    } else if i == 1 {
        m.set(1, 0, -1);
    } else if i == n - 1 {
        m.set(i - 2, i - 1, 1);
    } else {
        m.set(i - 2, i - 1, 1);
        m.set(i, i - 1, -1);
    }
    m
}

/// Product of the reduced Burau generator matrices at `t = -1`, letters taken
/// left to right.
pub fn reduced_burau_neg_one(b: &BraidWord) -> Result<IntMatrix> {
    let n = b.strands();
    if n < 2 {
        return Err(Error::TooFewStrands { got: n, min: 2 });
    }
    let mut acc = IntMatrix::identity(n - 1);
    for &g in b.letters() {
        acc = acc.mul(&generator_matrix(n, g));
    }
    Ok(acc)
}

/// Exact characteristic polynomial coefficients `c_0 + c_1 x + ... + x^dim`
/// by the Faddeev–LeVerrier recursion (divisions are exact over the integers).
pub fn char_poly(m: &IntMatrix) -> Vec<Coord> {
    let dim = m.dim;
    let mut coeffs = vec![Coord::zero(); dim + 1];
    coeffs[dim] = Coord::from(1);
    // M_1 = I; M_k = A·M_{k-1} + c_{dim-k+1}·I; c_{dim-k} = -tr(A·M_k)/k.
    let mut mk = IntMatrix::identity(dim);
    for k in 1..=dim {
        if k > 1 {
            mk = m.mul(&mk);
            let c = coeffs[dim - k + 1].clone();
            for i in 0..dim {
                let v = mk.get(i, i) + &c;
                mk.set(i, i, v);
            }
        }
        let t = m.mul(&mk).trace();
        let k_big = Coord::from(k as i64);
        debug_assert!((&t % &k_big).is_zero(), "Faddeev-LeVerrier division is exact");
        coeffs[dim - k] = -(t / k_big);
    }
    coeffs
}

fn poly_degree(p: &[Coord]) -> usize {
    p.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn poly_trim(mut p: Vec<Coord>) -> Vec<Coord> {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_derivative(p: &[Coord]) -> Vec<Coord> {
    if p.len() <= 1 {
        return vec![Coord::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * Coord::from(k as i64))
        .collect()
}

fn big_gcd(a: &Coord, b: &Coord) -> Coord {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn poly_primitive(p: Vec<Coord>) -> Vec<Coord> {
    let p = poly_trim(p);
    let mut content = Coord::zero();
    for c in &p {
        content = big_gcd(&content, c);
    }
    if content.is_zero() || content == Coord::from(1) {
        return p;
    }
    p.into_iter().map(|c| c / &content).collect()
}

/// Pseudo-remainder of `a` by `b` (leading coefficient of `b` scaled in).
fn poly_pseudo_rem(a: &[Coord], b: &[Coord]) -> Vec<Coord> {
    let (da, db) = (poly_degree(a), poly_degree(b));
    let mut r = a.to_vec();
    if da < db {
        return poly_trim(r);
    }
    let lead_b = b[db].clone();
    for k in (db..=da).rev() {
        let lead_r = r[k].clone();
        if lead_r.is_zero() {
            continue;
        }
        for c in r.iter_mut() {
            *c = &*c * &lead_b;
        }
        for j in 0..=db {
            let sub = &lead_r * &b[j];
            r[k - db + j] -= sub;
        }
    }
    r.truncate(db.max(1));
    poly_trim(r)
}

fn poly_gcd(a: &[Coord], b: &[Coord]) -> Vec<Coord> {
    let mut a = poly_primitive(a.to_vec());
    let mut b = poly_primitive(b.to_vec());
    while !(b.len() == 1 && b[0].is_zero()) {
        let r = poly_pseudo_rem(&a, &b);
        a = b;
        b = poly_primitive(r);
    }
    a
}

/// Exact polynomial division, panics unless the division is exact.
fn poly_div_exact(a: &[Coord], b: &[Coord]) -> Vec<Coord> {
    let (da, db) = (poly_degree(a), poly_degree(b));
    assert!(da >= db);
    let mut r = a.to_vec();
    let mut q = vec![Coord::zero(); da - db + 1];
    let lead_b = &b[db];
    for k in (db..=da).rev() {
        if r[k].is_zero() {
            continue;
        }
        debug_assert!((&r[k] % lead_b).is_zero(), "division must be exact");
        let coeff = &r[k] / lead_b;
        for j in 0..=db {
            let sub = &coeff * &b[j];
            r[k - db + j] -= sub;
        }
        q[k - db] = coeff;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()));
    q
}

/// Square-free part `p / gcd(p, p')`: same roots, all simple.
fn square_free_part(p: &[Coord]) -> Vec<Coord> {
    let d = poly_derivative(p);
    let g = poly_gcd(p, &d);
    if poly_degree(&g) == 0 {
        return p.to_vec();
    }
    poly_div_exact(p, &g)
}

fn coord_to_f64(x: &Coord) -> f64 {
    x.to_f64().unwrap_or(if x.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// Spectral radius of a float matrix by scaled repeated squaring:
/// `rho = lim ||A^(2^s)||^(1/2^s)`, accumulated as `sum 2^{-j} log ||B_j||`
/// with `B_{j+1} = (B_j / ||B_j||)^2`. Deterministic; converges for any
/// spectrum (complex pairs and Jordan blocks included); stops when the
/// remaining terms are below `1e-12`.
fn spectral_radius_f64(mut mat: Vec<Vec<f64>>) -> f64 {
    let dim = mat.len();
    if dim == 0 {
        return 0.0;
    }
    let mut log_rho = 0.0;
    let mut weight = 1.0;
    // 100 squarings leave a series tail far below 1e-12 even for Jordan
    // blocks, whose terms decay like j·2^{-j}.
    for _ in 0..100 {
        let norm: f64 = mat
            .iter()
            .flat_map(|row| row.iter())
            .map(|v| v * v)
            .sum::<f64>()
            .sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return if norm == 0.0 { 0.0 } else { f64::INFINITY };
        }
        log_rho += weight * norm.ln();
        let scaled: Vec<Vec<f64>> = mat
            .iter()
            .map(|row| row.iter().map(|v| v / norm).collect())
            .collect();
        let mut next = vec![vec![0.0; dim]; dim];
        for r in 0..dim {
            for k in 0..dim {
                let a = scaled[r][k];
                if a == 0.0 {
                    continue;
                }
                for c in 0..dim {
                    next[r][c] += a * scaled[k][c];
                }
            }
        }
        mat = next;
        weight /= 2.0;
    }
    log_rho.exp()
}

/// Largest root modulus of an integer polynomial. The square-free part is
/// taken first (exact gcd), so the companion matrix handed to the scaled
/// squaring is diagonalizable and the result is accurate to ~1e-12.
pub fn max_root_modulus(coeffs: &[Coord]) -> f64 {
    let p = square_free_part(&poly_trim(coeffs.to_vec()));
    let dim = poly_degree(&p);
    if dim == 0 {
        return 0.0;
    }
    let lead = coord_to_f64(&p[dim]);
    let mut companion = vec![vec![0.0; dim]; dim];
    for r in 1..dim {
        companion[r][r - 1] = 1.0;
    }
    for r in 0..dim {
        companion[r][dim - 1] = -coord_to_f64(&p[r]) / lead;
    }
    spectral_radius_f64(companion)
}

fn to_f64_matrix(m: &IntMatrix) -> Vec<Vec<f64>> {
    // Scale down uniformly when entries exceed f64 range; the spectral
    // radius of the scaled matrix is corrected afterwards by the caller.
    (0..m.dim)
        .map(|r| (0..m.dim).map(|c| coord_to_f64(m.get(r, c))).collect())
        .collect()
}

/// Spectral radius of an integer matrix. Small matrices go through the exact
/// characteristic polynomial; larger ones are measured directly by scaled
/// repeated squaring to the same 1e-9 scale of accuracy.
pub fn spectral_radius(m: &IntMatrix) -> f64 {
    if m.dim == 0 {
        return 1.0;
    }
    if m.dim <= 12 {
        max_root_modulus(&char_poly(m))
    } else {
        spectral_radius_f64(to_f64_matrix(m))
    }
}

/// Homological lower bound for the dilatation: spectral radius of the
/// reduced Burau image at `t = -1`.
pub fn burau_lower_bound(b: &BraidWord) -> Result<f64> {
    if b.strands() < 2 {
        return Err(Error::TooFewStrands {
            got: b.strands(),
            min: 2,
        });
    }
    Ok(spectral_radius(&reduced_burau_neg_one(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i64]) -> BraidWord {
        BraidWord::make(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn burau_matrices_satisfy_braid_relations() {
        for n in 3..=7 {
            for i in 1..n as i64 - 1 {
                let lhs = reduced_burau_neg_one(&w(n, &[i, i + 1, i])).unwrap();
                let rhs = reduced_burau_neg_one(&w(n, &[i + 1, i, i + 1])).unwrap();
                assert_eq!(lhs, rhs, "braid relation i={i}, n={n}");
            }
            for i in 1..n as i64 {
                let prod = reduced_burau_neg_one(&w(n, &[i, -i])).unwrap();
                assert_eq!(prod, IntMatrix::identity(n - 1), "inverse i={i}, n={n}");
                for j in i + 2..n as i64 {
                    let lhs = reduced_burau_neg_one(&w(n, &[i, j])).unwrap();
                    let rhs = reduced_burau_neg_one(&w(n, &[j, i])).unwrap();
                    assert_eq!(lhs, rhs, "far commutation {i},{j}");
                }
            }
        }
    }

    #[test]
    fn figure_eight_monodromy_char_poly() {
        // σ1 σ2⁻¹ in B3 maps to a matrix with characteristic polynomial
        // x² - 3x + 1, whose largest root is (3 + √5)/2.
        let m = reduced_burau_neg_one(&w(3, &[1, -2])).unwrap();
        let coeffs = char_poly(&m);
        let as_i64: Vec<i64> = coeffs.iter().map(|c| i64::try_from(c).unwrap()).collect();
        assert_eq!(as_i64, vec![1, -3, 1]);
        let golden = (3.0 + 5.0_f64.sqrt()) / 2.0;
        assert!((max_root_modulus(&coeffs) - golden).abs() < 1e-9);
        assert!((burau_lower_bound(&w(3, &[1, -2])).unwrap() - golden).abs() < 1e-9);
    }

    #[test]
    fn identity_and_two_strands() {
        for n in 2..=6 {
            let e = BraidWord::identity(n).unwrap();
            assert!((burau_lower_bound(&e).unwrap() - 1.0).abs() < 1e-9);
        }
        assert!((burau_lower_bound(&w(2, &[1])).unwrap() - 1.0).abs() < 1e-9);
        assert!((burau_lower_bound(&w(2, &[1, 1, 1])).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn char_poly_of_identity() {
        let coeffs = char_poly(&IntMatrix::identity(3));
        // (x-1)^3 = x^3 - 3x^2 + 3x - 1
        let as_i64: Vec<i64> = coeffs.iter().map(|c| i64::try_from(c).unwrap()).collect();
        assert_eq!(as_i64, vec![-1, 3, -3, 1]);
    }

    #[test]
    fn spectral_radius_routes_agree() {
        for word in [
            w(5, &[1, -2, 3, -4]),
            w(5, &[1, 1, 2, 2, 3, 3, 4, 4]),
            w(4, &[1, 2, 3, 1, 2, 1]),
            w(6, &[1, -2, 3, -4, 5, 1]),
        ] {
            let m = reduced_burau_neg_one(&word).unwrap();
            let via_poly = max_root_modulus(&char_poly(&m));
            let via_squaring = spectral_radius_f64(to_f64_matrix(&m));
            assert!(
                (via_poly - via_squaring).abs() < 1e-7 * via_poly.max(1.0),
                "{word}: {via_poly} vs {via_squaring}"
            );
        }
    }

    #[test]
    fn periodic_braid_unit_radius() {
        // (σ1 σ2)³ is central; σ1 σ2 is periodic, so the Burau radius is 1.
        let rho = burau_lower_bound(&w(3, &[1, 2])).unwrap();
        assert!((rho - 1.0).abs() < 1e-8, "rho = {rho}");
    }
}
