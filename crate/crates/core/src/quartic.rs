//! Roots of complex monic quartics via companion-matrix QR iteration.
//!
//! The companion matrix is already upper Hessenberg, so a shifted QR sweep
//! with complex Givens rotations deflates it in a handful of iterations even
//! near repeated roots, where the closed-form resolvent loses digits. One
//! Newton step per root restores the last bits.

use crate::Cx;

const N: usize = 4;

/// Roots of `x^4 + c3 x^3 + c2 x^2 + c1 x + c0`, in no particular order.
pub(crate) fn monic_quartic_roots(c3: Cx, c2: Cx, c1: Cx, c0: Cx) -> [Cx; 4] {
    let mut h = [[Cx::new(0.0, 0.0); N]; N];
    h[0][3] = -c0;
    h[1][3] = -c1;
    h[2][3] = -c2;
    h[3][3] = -c3;
    h[1][0] = Cx::new(1.0, 0.0);
    h[2][1] = Cx::new(1.0, 0.0);
    h[3][2] = Cx::new(1.0, 0.0);

    let mut roots = hessenberg_eigenvalues(h);
    for r in roots.iter_mut() {
        *r = newton_polish(*r, c3, c2, c1, c0);
    }
    roots
}

fn eval(x: Cx, c3: Cx, c2: Cx, c1: Cx, c0: Cx) -> (Cx, Cx) {
    let p = ((x + c3) * x + c2) * x * x + c1 * x + c0;
    let dp = ((4.0 * x + 3.0 * c3) * x + 2.0 * c2) * x + c1;
    (p, dp)
}

fn newton_polish(x0: Cx, c3: Cx, c2: Cx, c1: Cx, c0: Cx) -> Cx {
    let mut x = x0;
    for _ in 0..2 {
        let (p, dp) = eval(x, c3, c2, c1, c0);
        if dp.norm() < 1e-12 * (1.0 + x.norm().powi(3)) {
            break; // near-multiple root: leave the QR value alone
        }
        let step = p / dp;
        if !step.re.is_finite() || !step.im.is_finite() || step.norm() > 0.5 * (1.0 + x.norm()) {
            break;
        }
        x -= step;
    }
    x
}

/// Complex Givens pair (c real, s complex) zeroing `g` in `(f, g)`.
fn givens(f: Cx, g: Cx) -> (f64, Cx) {
    let gn = g.norm();
    if gn == 0.0 {
        return (1.0, Cx::new(0.0, 0.0));
    }
    let fn_ = f.norm();
    if fn_ == 0.0 {
        return (0.0, g.conj() / gn);
    }
    let d = (fn_ * fn_ + gn * gn).sqrt();
    let c = fn_ / d;
    let s = (f / fn_) * (g.conj() / d);
    (c, s)
}

fn hessenberg_eigenvalues(mut h: [[Cx; N]; N]) -> [Cx; 4] {
    let mut eigs = [Cx::new(0.0, 0.0); N];
    let mut hi = N - 1;
    let mut iter_since_deflation = 0usize;
    let scale = h
        .iter()
        .flatten()
        .map(|c| c.norm())
        .fold(0.0f64, f64::max)
        .max(1.0);

    for _total in 0..400 {
        // Zero negligible subdiagonals.
        for k in 1..=hi {
            let small = 1e-16 * (h[k - 1][k - 1].norm() + h[k][k].norm() + scale * 1e-3);
            if h[k][k - 1].norm() <= small {
                h[k][k - 1] = Cx::new(0.0, 0.0);
            }
        }
        // Deflate converged trailing eigenvalues.
        while hi > 0 && h[hi][hi - 1].norm() == 0.0 {
            eigs[hi] = h[hi][hi];
            hi -= 1;
            iter_since_deflation = 0;
        }
        if hi == 0 {
            eigs[0] = h[0][0];
            return eigs;
        }
        // Active window [lo, hi].
        let mut lo = hi;
        while lo > 0 && h[lo][lo - 1].norm() != 0.0 {
            lo -= 1;
        }

        // Wilkinson shift from the trailing 2x2 of the window.
        let a = h[hi - 1][hi - 1];
        let b = h[hi - 1][hi];
        let c2 = h[hi][hi - 1];
        let d = h[hi][hi];
        let tr = a + d;
        let disc = crate::linalg::principal_sqrt((a - d) * (a - d) + 4.0 * b * c2);
        let e1 = (tr + disc) * 0.5;
        let e2 = (tr - disc) * 0.5;
        let mut mu = if (e1 - d).norm() <= (e2 - d).norm() {
            e1
        } else {
            e2
        };
        iter_since_deflation += 1;
        if iter_since_deflation % 12 == 0 {
            // Exceptional shift to break rare cycles.
            mu = d + Cx::new(1.5 * h[hi][hi - 1].norm(), 0.5 * h[hi][hi - 1].norm());
        }

        // Explicit shifted QR on the window: H - mu I = QR, H <- RQ + mu I.
        for k in lo..=hi {
            h[k][k] -= mu;
        }
        let mut rots = Vec::with_capacity(hi - lo);
        for k in lo..hi {
            let (c, s) = givens(h[k][k], h[k + 1][k]);
            // Apply on rows k, k+1.
            for j in k..=hi.min(N - 1) {
                let top = h[k][j];
                let bot = h[k + 1][j];
                h[k][j] = Cx::new(c, 0.0) * top + s * bot;
                h[k + 1][j] = -s.conj() * top + Cx::new(c, 0.0) * bot;
            }
            rots.push((c, s));
        }
        for (idx, (c, s)) in rots.iter().enumerate() {
            let k = lo + idx;
            // Apply on columns k, k+1 (right-multiplication by the adjoint rotation).
            for i in lo..=(k + 1).min(hi) {
                let left = h[i][k];
                let right = h[i][k + 1];
                h[i][k] = left * Cx::new(*c, 0.0) + right * s.conj();
                h[i][k + 1] = -left * *s + right * Cx::new(*c, 0.0);
            }
        }
        for k in lo..=hi {
            h[k][k] += mu;
        }
    }
    // Fall back to whatever the diagonal holds; polish will clean up.
    for k in 0..=hi {
        eigs[k] = h[k][k];
    }
    eigs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_multiset_close(mut got: Vec<Cx>, mut want: Vec<Cx>, tol: f64) {
        assert_eq!(got.len(), want.len());
        while let Some(w) = want.pop() {
            let (idx, dist) = got
                .iter()
                .enumerate()
                .map(|(i, g)| (i, (g - w).norm()))
                .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                .unwrap();
            assert!(dist < tol, "no root near {w} (closest at distance {dist})");
            got.swap_remove(idx);
        }
    }

    fn coeffs_from_roots(r: &[Cx; 4]) -> (Cx, Cx, Cx, Cx) {
        let e1 = r[0] + r[1] + r[2] + r[3];
        let e2 = r[0] * r[1]
            + r[0] * r[2]
            + r[0] * r[3]
            + r[1] * r[2]
            + r[1] * r[3]
            + r[2] * r[3];
        let e3 = r[0] * r[1] * r[2] + r[0] * r[1] * r[3] + r[0] * r[2] * r[3] + r[1] * r[2] * r[3];
        let e4 = r[0] * r[1] * r[2] * r[3];
        (-e1, e2, -e3, e4)
    }

    #[test]
    fn known_factorizations() {
        // (x-2)(x-1/2)(x-1)^2 = x^4 - 4.5x^3 + 7x^2 - 4.5x + 1
        let roots = monic_quartic_roots(
            Cx::new(-4.5, 0.0),
            Cx::new(7.0, 0.0),
            Cx::new(-4.5, 0.0),
            Cx::new(1.0, 0.0),
        );
        assert_multiset_close(
            roots.to_vec(),
            vec![
                Cx::new(2.0, 0.0),
                Cx::new(0.5, 0.0),
                Cx::new(1.0, 0.0),
                Cx::new(1.0, 0.0),
            ],
            1e-7,
        );
        // (x-2i)(x-i/2)(x-1)(x+1): x^4 - 2.5i x^3 - 2x^2 + 2.5i x + 1
        let roots = monic_quartic_roots(
            Cx::new(0.0, -2.5),
            Cx::new(-2.0, 0.0),
            Cx::new(0.0, 2.5),
            Cx::new(1.0, 0.0),
        );
        assert_multiset_close(
            roots.to_vec(),
            vec![
                Cx::new(0.0, 2.0),
                Cx::new(0.0, 0.5),
                Cx::new(1.0, 0.0),
                Cx::new(-1.0, 0.0),
            ],
            1e-9,
        );
    }

    #[test]
    fn random_roots_roundtrip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let rts = [
                Cx::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)),
                Cx::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)),
                Cx::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)),
                Cx::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)),
            ];
            let (c3, c2, c1, c0) = coeffs_from_roots(&rts);
            let got = monic_quartic_roots(c3, c2, c1, c0);
            assert_multiset_close(got.to_vec(), rts.to_vec(), 1e-6);
        }
    }

    #[test]
    fn quadruple_root() {
        // (x-1)^4
        let got = monic_quartic_roots(
            Cx::new(-4.0, 0.0),
            Cx::new(6.0, 0.0),
            Cx::new(-4.0, 0.0),
            Cx::new(1.0, 0.0),
        );
        for r in got {
            assert!((r - Cx::new(1.0, 0.0)).norm() < 2e-3);
        }
    }
}

