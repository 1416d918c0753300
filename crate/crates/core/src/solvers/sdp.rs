//! Lovász theta by a dense primal-dual interior-point method.
//!
//! Primal: `max ⟨J, X⟩` subject to `tr X = 1`, `X_ij = 0` on edges, `X ⪰ 0`.
//! Written in standard form `min ⟨C, X⟩, ⟨A_k, X⟩ = b_k` with `C = -J`,
//! `A_0 = I` and `A_e = E_ij + E_ji`. The dual is
//! `max b·y` with `Z = C - Σ y_k A_k ⪰ 0`, so theta is `-y_0`.
//!
//! Steps use the HKM search direction with a Mehrotra predictor-corrector.
//! The optimal `X` yields an orthonormal representation with handle by
//! Gram factorisation.

use faer::{Mat, Side};
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SdpOptions {
    /// Target relative duality gap and objective accuracy.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for SdpOptions {
    fn default() -> Self {
        Self {
            tol: 1e-7,
            max_iter: 100,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThetaCertificate {
    /// Primal objective `Σ X_ij` at the returned matrix, which is made
    /// exactly zero on edges before the value is taken.
    pub value: f64,
    /// Dual objective with `y_0` shifted until the slack is PSD, so an
    /// upper bound on theta.
    pub dual_value: f64,
    pub gap: f64,
    pub iterations: usize,
    /// Row-major `order × order` PSD matrix, trace 1, zero on edges.
    pub psd_matrix: Vec<Vec<f64>>,
    pub handle_vector: Vec<f64>,
    pub unit_vectors: Vec<Vec<f64>>,
    /// Largest `|⟨v_i, v_j⟩|` over edges.
    pub edge_residual: f64,
    /// `|Σ ⟨ψ, v_i⟩² - value|`.
    pub value_residual: f64,
}

impl ThetaCertificate {
    /// Recompute the orthogonal-representation residuals from the vectors.
    pub fn check_vectors(&self, g: &Graph) -> (f64, f64) {
        let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
        let edge = g
            .edges()
            .iter()
            .map(|&(i, j)| dot(&self.unit_vectors[i], &self.unit_vectors[j]).abs())
            .fold(0.0, f64::max);
        let total: f64 = self
            .unit_vectors
            .iter()
            .map(|v| dot(&self.handle_vector, v).powi(2))
            .sum();
        (edge, (total - self.value).abs())
    }
}

/// Sparse symmetric constraint matrix as `(row, col, value)` entries.
type Sparse = Vec<(usize, usize, f64)>;

fn constraints(g: &Graph) -> Vec<Sparse> {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + g.edge_count());
    out.push((0..n).map(|i| (i, i, 1.0)).collect());
    for (i, j) in g.edges() {
        out.push(vec![(i, j, 1.0), (j, i, 1.0)]);
    }
    out
}

/// `⟨A, K⟩` for a possibly non-symmetric `K`, using the symmetric part.
fn apply(a: &Sparse, k: &DMatrix<f64>) -> f64 {
    a.iter()
        .map(|&(r, c, v)| v * 0.5 * (k[(r, c)] + k[(c, r)]))
        .sum()
}

fn adjoint(ops: &[Sparse], y: &DVector<f64>, n: usize) -> DMatrix<f64> {
    let mut out = DMatrix::zeros(n, n);
    for (a, &yk) in ops.iter().zip(y.iter()) {
        for &(r, c, v) in a {
            out[(r, c)] += v * yk;
        }
    }
    out
}

fn symmetrize(m: &DMatrix<f64>) -> DMatrix<f64> {
    (m + m.transpose()) * 0.5
}

fn inner(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    a.component_mul(b).sum()
}

fn to_faer(m: &DMatrix<f64>) -> Mat<f64> {
    Mat::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
}

/// Smallest eigenvalue of a symmetric matrix.
fn min_eigenvalue(m: &DMatrix<f64>) -> Option<f64> {
    let ev = to_faer(m).self_adjoint_eigenvalues(Side::Lower).ok()?;
    ev.first().copied()
}

/// Eigenvalues in ascending order with eigenvectors as columns.
fn eigen(m: &DMatrix<f64>) -> Option<(Vec<f64>, DMatrix<f64>)> {
    let e = to_faer(m).self_adjoint_eigen(Side::Lower).ok()?;
    let (s, u) = (e.S(), e.U());
    let n = m.nrows();
    Some((
        (0..n).map(|k| s[k]).collect(),
        DMatrix::from_fn(n, n, |i, k| u[(i, k)]),
    ))
}

/// Largest `t ∈ (0, ∞]` keeping `X + t·dX ⪰ 0`, from the eigenvalues of
/// `L⁻¹ dX L⁻ᵀ` where `X = L Lᵀ`.
fn max_step(x: &DMatrix<f64>, dx: &DMatrix<f64>) -> Option<f64> {
    let l = x.clone().cholesky()?.l();
    let linv = l.try_inverse()?;
    let m = symmetrize(&(&linv * dx * linv.transpose()));
    let min = min_eigenvalue(&m)?;
    Some(if min >= 0.0 {
        f64::INFINITY
    } else {
        -1.0 / min
    })
}

fn schur(ops: &[Sparse], x: &DMatrix<f64>, zi: &DMatrix<f64>) -> DMatrix<f64> {
    let m = ops.len();
    let mut s = DMatrix::zeros(m, m);
    for k in 0..m {
        for l in k..m {
            // tr(A_k X A_l Z⁻¹) = Σ a_rc · b_pq · X_cp · Zi_qr
            let mut acc = 0.0;
            for &(r, c, a) in &ops[k] {
                for &(p, q, b) in &ops[l] {
                    acc += a * b * x[(c, p)] * zi[(q, r)];
                }
            }
            s[(k, l)] = acc;
            s[(l, k)] = acc;
        }
    }
    s
}

fn solve_spd(m: &DMatrix<f64>, rhs: &DVector<f64>) -> Option<DVector<f64>> {
    match m.clone().cholesky() {
        Some(ch) => Some(ch.solve(rhs)),
        None => m.clone().lu().solve(rhs),
    }
}

pub fn sdp_theta(g: &Graph, opts: &SdpOptions) -> Result<ThetaCertificate> {
    let n = g.order();
    if n == 0 {
        return Err(Error::input("theta needs at least one vertex"));
    }
    let ops = constraints(g);
    let m = ops.len();
    let mut b = DVector::zeros(m);
    b[0] = 1.0;
    let c = -DMatrix::from_element(n, n, 1.0);

    // strictly feasible start: X = I/n, Z = (n+1)I - J
    let mut x = DMatrix::identity(n, n) / n as f64;
    let mut y = DVector::zeros(m);
    y[0] = -(n as f64 + 1.0);
    let mut z = &c - adjoint(&ops, &y, n);

    let scale = 1.0 + n as f64;
    let mut iterations = 0;
    let mut best: Option<(f64, DMatrix<f64>, DVector<f64>)> = None;
    for it in 0..opts.max_iter {
        iterations = it;
        let ax = DVector::from_iterator(m, ops.iter().map(|a| apply(a, &x)));
        let rp = &b - &ax;
        let rd = &c - adjoint(&ops, &y, n) - &z;
        let pobj = inner(&c, &x);
        let dobj = b.dot(&y);
        let gap = inner(&x, &z);
        let rel_gap = gap.abs() / (1.0 + pobj.abs() + dobj.abs());
        let pinf = rp.norm() / 2.0;
        let dinf = rd.norm() / scale;
        let err = rel_gap.max(pinf).max(dinf);
        if best.as_ref().is_none_or(|b| err < b.0) {
            best = Some((err, x.clone(), y.clone()));
        }
        if rel_gap < opts.tol * 1e-2 && pinf < opts.tol * 1e-3 && dinf < opts.tol * 1e-3 {
            break;
        }

        let mu = gap / n as f64;
        let Some(zi) = z.clone().cholesky().map(|ch| ch.inverse()) else {
            break;
        };
        let schur_m = schur(&ops, &x, &zi);

        let direction =
            |target: &DMatrix<f64>| -> Option<(DMatrix<f64>, DVector<f64>, DMatrix<f64>)> {
                // dX = target - X dZ Z⁻¹, dZ = Rd - Aᵀ dy, A(dX) = rp
                let k = target - &x * &rd * &zi;
                let rhs = &rp - DVector::from_iterator(m, ops.iter().map(|a| apply(a, &k)));
                let mut dy = solve_spd(&schur_m, &rhs)?;
                let mut dz = &rd - adjoint(&ops, &dy, n);
                let mut dx = symmetrize(&(target - &x * &dz * &zi));
                // refine against the exact operator; the Schur matrix gets
                // badly conditioned as X loses rank
                for _ in 0..2 {
                    let adx = DVector::from_iterator(m, ops.iter().map(|a| apply(a, &dx)));
                    let r = &rp - adx;
                    if r.amax() <= f64::EPSILON * (1.0 + rp.amax()) {
                        break;
                    }
                    dy += solve_spd(&schur_m, &r)?;
                    dz = &rd - adjoint(&ops, &dy, n);
                    dx = symmetrize(&(target - &x * &dz * &zi));
                }
                Some((dx, dy, dz))
            };

        // predictor
        let Some((dxp, _, dzp)) = direction(&(-&x)) else {
            break;
        };
        let ap = max_step(&x, &dxp).map_or(0.0, |t| t.min(1.0));
        let ad = max_step(&z, &dzp).map_or(0.0, |t| t.min(1.0));
        let mu_aff = inner(&(&x + &dxp * ap), &(&z + &dzp * ad)) / n as f64;
        let sigma = (mu_aff / mu).clamp(0.0, 1.0).powi(3);

        // corrector
        let target = &zi * (sigma * mu) - &x - &dxp * &dzp * &zi;
        let Some((dx, dy, dz)) = direction(&target) else {
            break;
        };
        let gamma = 0.95;
        let ap = max_step(&x, &dx).map_or(0.0, |t| (gamma * t).min(1.0));
        let ad = max_step(&z, &dz).map_or(0.0, |t| (gamma * t).min(1.0));
        if ap == 0.0 && ad == 0.0 {
            break;
        }
        x += &dx * ap;
        x = symmetrize(&x);
        y += &dy * ad;
        z += &dz * ad;
        z = symmetrize(&z);
    }

    let Some((_, x, y)) = best else {
        return Err(Error::Numerical {
            message: "theta SDP ran no iterations".into(),
            lower: 1.0,
            upper: n as f64,
        });
    };
    let x = repair_primal(g, &x);
    let value = x.sum();
    let z = &c - adjoint(&ops, &y, n);
    let shift = (-min_eigenvalue(&z).unwrap_or(f64::NEG_INFINITY)).max(0.0);
    let dual_value = -y[0] + shift;
    if dual_value - value > opts.tol * value.abs().max(1.0) {
        return Err(Error::Numerical {
            message: format!("theta SDP did not converge in {} iterations", opts.max_iter),
            lower: value.min(dual_value),
            upper: value.max(dual_value),
        });
    }
    let Some((handle_vector, unit_vectors)) = representation(&x) else {
        return Err(Error::Numerical {
            message: "eigendecomposition of the theta matrix failed".into(),
            lower: value,
            upper: dual_value,
        });
    };
    let mut cert = ThetaCertificate {
        value,
        dual_value,
        gap: (dual_value - value).abs(),
        iterations,
        psd_matrix: (0..n)
            .map(|i| (0..n).map(|j| x[(i, j)]).collect())
            .collect(),
        handle_vector,
        unit_vectors,
        edge_residual: 0.0,
        value_residual: 0.0,
    };
    let (edge, val) = cert.check_vectors(g);
    cert.edge_residual = edge;
    cert.value_residual = val;
    Ok(cert)
}

/// Nearby exactly feasible primal point: zero on edges, shifted to be
/// positive semidefinite, then scaled back to trace 1.
fn repair_primal(g: &Graph, x: &DMatrix<f64>) -> DMatrix<f64> {
    let n = x.nrows();
    let mut x = symmetrize(x);
    for (i, j) in g.edges() {
        x[(i, j)] = 0.0;
        x[(j, i)] = 0.0;
    }
    let low = min_eigenvalue(&x).unwrap_or(0.0);
    if low < 0.0 {
        for i in 0..n {
            x[(i, i)] -= low;
        }
    }
    let tr = x.trace();
    x / tr
}

/// Unit vectors `v_i` and handle `ψ` from a Gram factor of `X`.
///
/// Vertices with negligible weight get a fresh coordinate of their own,
/// which is orthogonal to everything else and contributes nothing.
fn representation(x: &DMatrix<f64>) -> Option<(Vec<f64>, Vec<Vec<f64>>)> {
    let n = x.nrows();
    let (values, vectors) = eigen(x)?;
    let top = values.iter().copied().fold(0.0, f64::max);
    let keep: Vec<usize> = (0..n).filter(|&k| values[k] > top * 1e-14).collect();
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            keep.iter()
                .map(|&k| vectors[(i, k)] * values[k].sqrt())
                .collect()
        })
        .collect();
    let weak: Vec<usize> = (0..n).filter(|&i| x[(i, i)] < 1e-9).collect();
    let dim = keep.len() + weak.len();

    let mut sum = vec![0.0; dim];
    for row in &rows {
        for (s, v) in sum.iter_mut().zip(row) {
            *s += v;
        }
    }
    let norm = sum.iter().map(|v| v * v).sum::<f64>().sqrt();
    let handle: Vec<f64> = sum.iter().map(|v| v / norm).collect();

    let vectors = rows
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v = vec![0.0; dim];
            if let Some(slot) = weak.iter().position(|&w| w == i) {
                v[keep.len() + slot] = 1.0;
            } else {
                let len = row.iter().map(|a| a * a).sum::<f64>().sqrt();
                for (dst, a) in v.iter_mut().zip(&row) {
                    *dst = a / len;
                }
            }
            v
        })
        .collect();
    Some((handle, vectors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complement, complete, cycle, make_circulant, path};

    fn theta(g: &Graph) -> ThetaCertificate {
        sdp_theta(g, &SdpOptions::default()).unwrap()
    }

    fn assert_certificate(g: &Graph, cert: &ThetaCertificate) {
        assert!(
            cert.edge_residual <= 1e-6,
            "edge residual {}",
            cert.edge_residual
        );
        assert!(
            cert.value_residual <= 1e-6,
            "value residual {}",
            cert.value_residual
        );
        assert!(cert.gap <= 1e-7, "gap {}", cert.gap);
        let tr: f64 = (0..g.order()).map(|i| cert.psd_matrix[i][i]).sum();
        assert!((tr - 1.0).abs() < 1e-9);
        for (i, j) in g.edges() {
            assert!(cert.psd_matrix[i][j].abs() < 1e-9);
        }
    }

    #[test]
    fn pentagon() {
        let g = cycle(5).unwrap();
        let cert = theta(&g);
        assert!((cert.value - 5f64.sqrt()).abs() < 1e-7, "{}", cert.value);
        assert_certificate(&g, &cert);
    }

    #[test]
    fn chsh_graph_and_complement() {
        let m4 = make_circulant(8, &[1, 4]).unwrap();
        let cert = theta(&m4);
        assert!((cert.value - (2.0 + 2f64.sqrt())).abs() < 1e-7);
        assert_certificate(&m4, &cert);
        let ci = make_circulant(8, &[1, 2]).unwrap();
        let cert = theta(&ci);
        assert!((cert.value - (8.0 - 4.0 * 2f64.sqrt())).abs() < 1e-7);
        assert_certificate(&ci, &cert);
    }

    #[test]
    fn complete_and_edgeless() {
        for n in 1..6 {
            let k = complete(n);
            let cert = theta(&k);
            assert!((cert.value - 1.0).abs() < 1e-7);
            assert_certificate(&k, &cert);
            let e = complement(&k);
            assert!((theta(&e).value - n as f64).abs() < 1e-7);
        }
    }

    #[test]
    fn path_puts_no_weight_in_the_middle() {
        let g = path(3);
        let cert = theta(&g);
        assert!((cert.value - 2.0).abs() < 1e-7);
        assert_certificate(&g, &cert);
    }

    #[test]
    fn empty_graph_rejected() {
        assert!(sdp_theta(&Graph::new(0), &SdpOptions::default()).is_err());
    }

    #[test]
    fn iteration_cap_reports_bounds() {
        let g = cycle(5).unwrap();
        let err = sdp_theta(
            &g,
            &SdpOptions {
                tol: 1e-7,
                max_iter: 2,
            },
        )
        .unwrap_err();
        match err {
            Error::Numerical { lower, upper, .. } => {
                assert!(lower <= 5f64.sqrt() + 1e-9 && 5f64.sqrt() <= upper + 1e-9);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
