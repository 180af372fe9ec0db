//! Small dense complex linear algebra used throughout the crate.
//!
//! Everything here is sized for 4x4 problems: a cyclic Jacobi eigensolver for
//! Hermitian matrices, null spaces through the Gram matrix, and the
//! deterministic phase conventions shared by the frame constructions.

use nalgebra::DMatrix;

use crate::{CMat4, CVec4, Cx};

pub(crate) fn max_abs_mat(m: &CMat4) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

pub(crate) fn max_abs_vec(v: &CVec4) -> f64 {
    v.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Returns eigenvalues in ascending order with a unitary matrix of
/// column eigenvectors in the matching order.
///
/// Input is symmetrized first, so small Hermiticity defects are tolerated.
pub(crate) fn hermitian_eigen(g: &DMatrix<Cx>) -> (Vec<f64>, DMatrix<Cx>) {
    let n = g.nrows();
    assert_eq!(n, g.ncols());
    let mut h = DMatrix::<Cx>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            h[(i, j)] = 0.5 * (g[(i, j)] + g[(j, i)].conj());
        }
    }
    let mut v = DMatrix::<Cx>::identity(n, n);
    let scale = h.iter().map(|c| c.norm()).fold(0.0, f64::max).max(1e-300);

    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(h[(p, q)].norm());
            }
        }
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = h[(p, q)];
                let m = apq.norm();
                if m <= 1e-18 * scale {
                    continue;
                }
                let u = apq / m;
                let app = h[(p, p)].re;
                let aqq = h[(q, q)].re;
                let tau = (aqq - app) / (2.0 * m);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Rotation columns: col_p' = c*col_p - s*conj(u)*col_q,
                //                   col_q' = s*u*col_p + c*conj(u)*conj(u)... kept explicit below.
                let jpp = Cx::new(c, 0.0);
                let jpq = Cx::new(s, 0.0);
                let jqp = -u.conj() * s;
                let jqq = u.conj() * c;
                // h <- J^H h J applied on rows/cols p,q.
                for k in 0..n {
                    let hkp = h[(k, p)];
                    let hkq = h[(k, q)];
                    h[(k, p)] = hkp * jpp + hkq * jqp;
                    h[(k, q)] = hkp * jpq + hkq * jqq;
                }
                for k in 0..n {
                    let hpk = h[(p, k)];
                    let hqk = h[(q, k)];
                    h[(p, k)] = jpp.conj() * hpk + jqp.conj() * hqk;
                    h[(q, k)] = jpq.conj() * hpk + jqq.conj() * hqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * jpp + vkq * jqp;
                    v[(k, q)] = vkp * jpq + vkq * jqq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| h[(a, a)].re.partial_cmp(&h[(b, b)].re).unwrap());
    let vals: Vec<f64> = order.iter().map(|&k| h[(k, k)].re).collect();
    let mut vecs = DMatrix::<Cx>::zeros(n, n);
    for (new, &old) in order.iter().enumerate() {
        vecs.set_column(new, &v.column(old));
    }
    (vals, vecs)
}

/// Orthonormal basis (Euclidean) of the joint kernel of the given row
/// covectors: all `v` with `row · v = 0` for every row.
///
/// Works through the Gram matrix `G = Σ rowᴴ row`, whose near-zero eigenpairs
/// are the kernel. `rel_tol` is measured against the largest eigenvalue.
pub(crate) fn row_null_space(rows: &[CVec4], rel_tol: f64) -> Vec<CVec4> {
    row_null_space_with_floor(rows, rel_tol, 0.0)
}

/// Variant with an absolute singular-value floor, for callers whose rows may
/// be uniformly tiny (a shifted matrix near a scalar multiple of identity):
/// directions with residual at most `abs_floor` count as kernel regardless of
/// the largest eigenvalue.
pub(crate) fn row_null_space_with_floor(
    rows: &[CVec4],
    rel_tol: f64,
    abs_floor: f64,
) -> Vec<CVec4> {
    let mut g = DMatrix::<Cx>::zeros(4, 4);
    for r in rows {
        for j in 0..4 {
            for k in 0..4 {
                g[(j, k)] += r[j].conj() * r[k];
            }
        }
    }
    let (vals, vecs) = hermitian_eigen(&g);
    let vmax = vals.iter().cloned().fold(0.0, f64::max).max(1e-300);
    let cutoff = (rel_tol * vmax).max(abs_floor * abs_floor);
    let mut basis = Vec::new();
    for (i, &val) in vals.iter().enumerate() {
        if val <= cutoff {
            let col = vecs.column(i);
            basis.push(CVec4::new(col[0], col[1], col[2], col[3]));
        }
    }
    basis
}

/// Singular values (ascending) of the matrix whose columns are the given
/// vectors, via the Hermitian eigenvalues of `MᴴM`.
pub(crate) fn column_singular_values(cols: &[CVec4]) -> Vec<f64> {
    let n = cols.len();
    let mut g = DMatrix::<Cx>::zeros(n, n);
    for (i, a) in cols.iter().enumerate() {
        for (j, b) in cols.iter().enumerate() {
            // Euclidean Gram: G_ij = aᵢᴴ aⱼ
            let mut s = Cx::new(0.0, 0.0);
            for k in 0..4 {
                s += a[k].conj() * b[k];
            }
            g[(i, j)] = s;
        }
    }
    let (vals, _) = hermitian_eigen(&g);
    vals.iter().map(|v| v.max(0.0).sqrt()).collect()
}

/// Euclidean normalization followed by the crate phase convention: the first
/// coordinate whose modulus exceeds `1e-8` times the largest is rotated to be
/// real positive.
pub(crate) fn phase_normalize(v: &CVec4) -> CVec4 {
    let norm = v.norm();
    if norm == 0.0 {
        return *v;
    }
    let w = v / Cx::new(norm, 0.0);
    let m = max_abs_vec(&w);
    for k in 0..4 {
        if w[k].norm() > 1e-8 * m {
            let phase = w[k] / Cx::new(w[k].norm(), 0.0);
            return w / phase;
        }
    }
    w
}

/// Principal square root: branch with argument in (-pi/2, pi/2].
pub(crate) fn principal_sqrt(z: Cx) -> Cx {
    let r = z.norm().sqrt();
    let mut half = z.arg() / 2.0;
    if half <= -std::f64::consts::FRAC_PI_2 {
        half += std::f64::consts::PI;
    }
    Cx::from_polar(r, half)
}

/// Fourth root of `z` with argument in (-pi/4, pi/4].
pub(crate) fn fourth_root_principal(z: Cx) -> Cx {
    let r = z.norm().powf(0.25);
    let mut quarter = z.arg() / 4.0;
    let q = std::f64::consts::FRAC_PI_4;
    while quarter <= -q {
        quarter += std::f64::consts::FRAC_PI_2;
    }
    while quarter > q {
        quarter -= std::f64::consts::FRAC_PI_2;
    }
    Cx::from_polar(r, quarter)
}

/// Wrap an angle into (-pi, pi].
pub(crate) fn wrap_angle(a: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut x = a % two_pi;
    if x <= -std::f64::consts::PI {
        x += two_pi;
    } else if x > std::f64::consts::PI {
        x -= two_pi;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dmat(entries: &[[Cx; 4]; 4]) -> DMatrix<Cx> {
        DMatrix::from_fn(4, 4, |i, j| entries[i][j])
    }

    #[test]
    fn jacobi_diagonalizes_random_hermitian() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let mut e = [[Cx::new(0.0, 0.0); 4]; 4];
            for i in 0..4 {
                e[i][i] = Cx::new(rng.gen_range(-3.0..3.0), 0.0);
                for j in (i + 1)..4 {
                    let z = Cx::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
                    e[i][j] = z;
                    e[j][i] = z.conj();
                }
            }
            let g = dmat(&e);
            let (vals, vecs) = hermitian_eigen(&g);
            // A V = V diag(vals)
            let mut lam = DMatrix::<Cx>::zeros(4, 4);
            for k in 0..4 {
                lam[(k, k)] = Cx::new(vals[k], 0.0);
            }
            let resid = (&g * &vecs - &vecs * lam).norm();
            assert!(resid < 1e-10, "residual {resid}");
            // unitary
            let eye = DMatrix::<Cx>::identity(4, 4);
            assert!((vecs.adjoint() * &vecs - eye).norm() < 1e-11);
            // ascending
            for k in 1..4 {
                assert!(vals[k] >= vals[k - 1]);
            }
        }
    }

    #[test]
    fn null_space_of_two_rows() {
        let r1 = CVec4::new(
            Cx::new(1.0, 0.0),
            Cx::new(0.0, 0.0),
            Cx::new(0.0, 0.0),
            Cx::new(0.0, 0.0),
        );
        let r2 = CVec4::new(
            Cx::new(0.0, 0.0),
            Cx::new(0.0, 1.0),
            Cx::new(0.0, 0.0),
            Cx::new(0.0, 0.0),
        );
        let basis = row_null_space(&[r1, r2], 1e-12);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(v[0].norm() < 1e-12 && v[1].norm() < 1e-12);
        }
    }

    #[test]
    fn root_branches() {
        let z = Cx::new(-1.0, 1e-12);
        let s = principal_sqrt(z);
        assert!((s * s - z).norm() < 1e-12);
        assert!(s.arg() > 0.0 && s.arg() <= std::f64::consts::FRAC_PI_2 + 1e-9);
        let w = Cx::from_polar(16.0, 3.0);
        let f = fourth_root_principal(w);
        assert!((f.powu(4) - w).norm() < 1e-9);
        assert!(f.arg() > -std::f64::consts::FRAC_PI_4 - 1e-12);
        assert!(f.arg() <= std::f64::consts::FRAC_PI_4 + 1e-12);
    }
}
