//! Classification and normal forms of holomorphic isometries.
//!
//! A loxodromic element of SU(3,1) has eigenvalues
//! `r e^{iθ}, r^{-1} e^{iθ}, e^{iφ}, e^{-i(2θ+φ)}` with `r > 1` and is
//! conjugate to the diagonal normal form `E(r,θ,φ)`. Its characteristic
//! polynomial is `X^4 - τ X^3 + σ X^2 - conj(τ) X + 1` with `τ = tr A` and
//! `σ = (tr²A - tr A²)/2` real, so the whole spectrum is a function of the
//! two trace invariants.

use crate::error::{Error, Result};
use crate::hermitian::{self, BoundaryPoint, GroupElement};
use crate::linalg;
use crate::quartic;
use crate::{CMat4, CVec4, Cx, DEFAULT_TOL, NEAR_PARABOLIC_GUARD};

/// Trace invariants of a group element, with the measured imaginary defect of
/// the (theoretically real) sigma.
#[derive(Debug, Clone, Copy)]
pub struct TraceInvariants {
    pub tau: Cx,
    pub sigma: f64,
    pub sigma_imag_residual: f64,
}

/// `τ = tr A`, `σ = Re((tr²A - tr A²)/2)`.
pub fn trace_invariants(a: &GroupElement) -> TraceInvariants {
    let m = a.matrix();
    let tau = m.trace();
    let tr2 = (m * m).trace();
    let sigma_c = 0.5 * (tau * tau - tr2);
    TraceInvariants {
        tau,
        sigma: sigma_c.re,
        sigma_imag_residual: sigma_c.im.abs(),
    }
}

/// Roots of `X^4 - τ X^3 + σ X^2 - conj(τ) X + 1`, via companion-matrix QR
/// with one Newton polish per root. Their product is 1 up to rounding.
pub fn eigenvalues_from_invariants(tau: Cx, sigma: f64) -> [Cx; 4] {
    quartic::monic_quartic_roots(
        -tau,
        Cx::new(sigma, 0.0),
        -tau.conj(),
        Cx::new(1.0, 0.0),
    )
}

/// The diagonal normal form `E(r,θ,φ)`.
pub fn normal_form(r: f64, theta: f64, phi: f64) -> Result<GroupElement> {
    if !(r > 1.0) {
        return Err(Error::OutOfRegion { r });
    }
    let d = CVec4::new(
        Cx::from_polar(r, theta),
        Cx::from_polar(1.0, phi),
        Cx::from_polar(1.0, -(2.0 * theta + phi)),
        Cx::from_polar(1.0 / r, theta),
    );
    GroupElement::certify_default(CMat4::from_diagonal(&d))
}

/// The exponential-parameter form
/// `E(λ,ψ) = diag(e^λ, e^{-iψ+(conj(λ)-λ)/2}, e^{iψ+(conj(λ)-λ)/2}, e^{-conj(λ)})`.
///
/// Always lies in SU(3,1); `Re λ = 0` gives a boundary elliptic.
pub fn normal_form_exponential(lambda: Cx, psi: f64) -> GroupElement {
    let t = lambda.im;
    let d = CVec4::new(
        lambda.exp(),
        Cx::from_polar(1.0, -(psi + t)),
        Cx::from_polar(1.0, psi - t),
        (-lambda.conj()).exp(),
    );
    GroupElement::certify_default(CMat4::from_diagonal(&d))
        .expect("exponential normal form is in the group by construction")
}

/// Conversion `(r,θ,φ) -> (λ,ψ)` between the two normal-form parameterizations:
/// `λ = ln r + iθ`, `ψ = -(θ + φ)`.
pub fn exponential_parameters(r: f64, theta: f64, phi: f64) -> (Cx, f64) {
    (Cx::new(r.ln(), theta), -(theta + phi))
}

/// Spectrum matched against the loxodromic eigenvalue pattern.
#[derive(Debug, Clone, Copy)]
pub(crate) struct LoxodromicSpectrum {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
    pub attracting: Cx,
    pub repelling: Cx,
    /// Unit eigenvalue assigned to the x-eigenvector (equals `e^{iφ}`).
    pub unit_x: Cx,
    /// Unit eigenvalue assigned to the y-eigenvector (equals `e^{-i(2θ+φ)}`).
    pub unit_y: Cx,
    /// Mismatch of the repelling root and of the complementary unit root
    /// against the pattern.
    pub pattern_residual: f64,
}

/// Label the four roots with the loxodromic pattern.
///
/// θ comes from the largest-modulus root. Of the two unit-modulus roots the
/// φ-label goes to one with argument at most θ when such a root exists, ties
/// and the empty case resolved by the smaller argument.
pub(crate) fn match_loxodromic_pattern(roots: &[Cx; 4]) -> LoxodromicSpectrum {
    let mut idx: Vec<usize> = (0..4).collect();
    idx.sort_by(|&i, &j| roots[i].norm().partial_cmp(&roots[j].norm()).unwrap());
    let repelling = roots[idx[0]];
    let attracting = roots[idx[3]];
    let (mu1, mu2) = (roots[idx[1]], roots[idx[2]]);
    let r = attracting.norm();
    let theta = attracting.arg();

    let (a1, a2) = (mu1.arg(), mu2.arg());
    let phi = match (a1 <= theta, a2 <= theta) {
        (true, true) | (false, false) => a1.min(a2),
        (true, false) => a1,
        (false, true) => a2,
    };
    let unit_x = if (a1 - phi).abs() <= (a2 - phi).abs() {
        mu1
    } else {
        mu2
    };
    let unit_y = if (a1 - phi).abs() <= (a2 - phi).abs() {
        mu2
    } else {
        mu1
    };

    let rep_residual = (repelling - Cx::from_polar(1.0 / r, theta)).norm();
    let other_residual = (unit_y - Cx::from_polar(1.0, -(2.0 * theta + phi))).norm();
    LoxodromicSpectrum {
        r,
        theta,
        phi,
        attracting,
        repelling,
        unit_x,
        unit_y,
        pattern_residual: rep_residual.max(other_residual),
    }
}

/// Classification of an isometry by its fixed points.
#[derive(Debug, Clone)]
pub enum IsometryClass {
    /// Exactly two boundary fixed points, one attracting and one repelling.
    Loxodromic {
        attracting: BoundaryPoint,
        repelling: BoundaryPoint,
        r: f64,
        theta: f64,
        phi: f64,
    },
    /// Fixes a point inside the domain (a negative eigenvector).
    Elliptic {
        interior_fixed: CVec4,
        boundary_fixed: Vec<BoundaryPoint>,
    },
    /// Non-elliptic with a single boundary fixed point.
    Parabolic { fixed: BoundaryPoint },
}

fn eigenvector_by_projection(m: &CMat4, roots: &[Cx; 4], which: usize) -> CVec4 {
    let mut p = CMat4::identity();
    for (j, lam) in roots.iter().enumerate() {
        if j != which {
            p = p * (m - CMat4::from_diagonal_element(*lam));
        }
    }
    let mut best = p.column(0).into_owned();
    for k in 1..4 {
        let col = p.column(k);
        if col.norm() > best.norm() {
            best = col.into_owned();
        }
    }
    CVec4::from(best)
}

/// Classify an isometry through its eigenstructure.
///
/// A root of modulus away from 1 means loxodromic. On the unit side the
/// spectrum is read through root clusters (the cluster mean recovers the
/// digits a multiple root loses in the quartic solve) and the sign of the
/// form on each eigenspace: a negative eigenvector means elliptic, an
/// isotropic one parabolic. Every extracted direction is gated by its actual
/// eigen-residual, so near-parabolic loxodromics are not mistaken for unit
/// spectra; when no reading passes the gates the call refuses with
/// `NearBoundaryAmbiguous`.
pub fn classify_isometry(a: &GroupElement, tol: f64) -> Result<IsometryClass> {
    let ti = trace_invariants(a);
    let roots = eigenvalues_from_invariants(ti.tau, ti.sigma);
    let deviation = roots
        .iter()
        .map(|l| (l.norm() - 1.0).abs())
        .fold(0.0, f64::max);
    let res_tol = 1e-6 * (1.0 + linalg::max_abs_mat(a.matrix()));

    // Well off the unit circle: multiple-root noise cannot reach here.
    if deviation > 1e-3 {
        return loxodromic_class(a, &roots).ok_or(Error::NearBoundaryAmbiguous { deviation });
    }
    if let Some(class) = unit_classification(a, &roots, res_tol) {
        return Ok(class);
    }
    if deviation > tol {
        if let Some(class) = loxodromic_class(a, &roots) {
            return Ok(class);
        }
    }
    Err(Error::NearBoundaryAmbiguous { deviation })
}

fn loxodromic_class(a: &GroupElement, roots: &[Cx; 4]) -> Option<IsometryClass> {
    let spec = match_loxodromic_pattern(roots);
    let att_idx = (0..4)
        .max_by(|&i, &j| roots[i].norm().partial_cmp(&roots[j].norm()).unwrap())
        .unwrap();
    let rep_idx = (0..4)
        .min_by(|&i, &j| roots[i].norm().partial_cmp(&roots[j].norm()).unwrap())
        .unwrap();
    let att = linalg::phase_normalize(&eigenvector_by_projection(a.matrix(), roots, att_idx));
    let rep = linalg::phase_normalize(&eigenvector_by_projection(a.matrix(), roots, rep_idx));
    let res_tol = 1e-6 * (1.0 + linalg::max_abs_mat(a.matrix()));
    let res_a = (a.matrix() * att - att * roots[att_idx]).norm();
    let res_r = (a.matrix() * rep - rep * roots[rep_idx]).norm();
    if res_a > res_tol || res_r > res_tol || att.norm() == 0.0 || rep.norm() == 0.0 {
        return None;
    }
    Some(IsometryClass::Loxodromic {
        attracting: BoundaryPoint::from_lift_unchecked(att),
        repelling: BoundaryPoint::from_lift_unchecked(rep),
        r: spec.r,
        theta: spec.theta,
        phi: spec.phi,
    })
}

/// Refine an m-fold root of the characteristic polynomial: it is a simple
/// root of the (m-1)-th derivative, where Newton converges cleanly.
fn polish_multiple_root(tau: Cx, sigma: f64, mu0: Cx, multiplicity: usize) -> Cx {
    let s = Cx::new(sigma, 0.0);
    let mut mu = mu0;
    match multiplicity {
        1 => {
            for _ in 0..2 {
                let p = mu * mu * mu * mu - tau * mu * mu * mu + s * mu * mu - tau.conj() * mu
                    + Cx::new(1.0, 0.0);
                let dp = 4.0 * mu * mu * mu - 3.0 * tau * mu * mu + 2.0 * s * mu - tau.conj();
                if dp.norm() < 1e-12 {
                    break;
                }
                mu -= p / dp;
            }
        }
        2 => {
            for _ in 0..3 {
                let dp = 4.0 * mu * mu * mu - 3.0 * tau * mu * mu + 2.0 * s * mu - tau.conj();
                let ddp = 12.0 * mu * mu - 6.0 * tau * mu + 2.0 * s;
                if ddp.norm() < 1e-12 {
                    break;
                }
                mu -= dp / ddp;
            }
        }
        3 => {
            for _ in 0..3 {
                let ddp = 12.0 * mu * mu - 6.0 * tau * mu + 2.0 * s;
                let dddp = 24.0 * mu - 6.0 * tau;
                if dddp.norm() < 1e-12 {
                    break;
                }
                mu -= ddp / dddp;
            }
        }
        _ => mu = tau / 4.0,
    }
    mu
}

fn unit_classification(a: &GroupElement, roots: &[Cx; 4], res_tol: f64) -> Option<IsometryClass> {
    let ti = trace_invariants(a);
    // Cluster roots; a multiple root splits by up to ~1e-4 under rounding, so
    // each cluster representative is re-polished at its multiplicity.
    let mut remaining: Vec<Cx> = roots.to_vec();
    let mut clusters: Vec<Cx> = Vec::new();
    while let Some(seed) = remaining.pop() {
        let mut members = vec![seed];
        remaining.retain(|z| {
            if (z - seed).norm() <= 1e-3 {
                members.push(*z);
                false
            } else {
                true
            }
        });
        let mean = members.iter().sum::<Cx>() / members.len() as f64;
        clusters.push(polish_multiple_root(ti.tau, ti.sigma, mean, members.len()));
    }
    if clusters
        .iter()
        .any(|mu| (mu.norm() - 1.0).abs() > 1e-8)
    {
        return None;
    }

    let mut interior: Option<CVec4> = None;
    let mut boundary: Vec<BoundaryPoint> = Vec::new();
    let mut any_direction = false;
    let kernel_floor = 1e-7 * (1.0 + linalg::max_abs_mat(a.matrix()));
    for lambda in &clusters {
        let shifted = a.matrix() - CMat4::from_diagonal_element(*lambda);
        let rows: Vec<CVec4> = (0..4).map(|i| shifted.row(i).transpose()).collect();
        let kernel = linalg::row_null_space_with_floor(&rows, 1e-8, kernel_floor);
        if kernel.is_empty() {
            continue;
        }
        let k = kernel.len();
        let mut g = nalgebra::DMatrix::<Cx>::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                g[(i, j)] = hermitian::herm_form(&kernel[j], &kernel[i]);
            }
        }
        let (vals, vecs) = linalg::hermitian_eigen(&g);
        for (pos, &val) in vals.iter().enumerate() {
            let combo: CVec4 = (0..k)
                .map(|j| kernel[j] * vecs[(j, pos)])
                .fold(CVec4::zeros(), |acc, v| acc + v);
            if combo.norm() < 0.5 {
                continue; // padding artifacts cannot occur, but stay safe
            }
            let dir = linalg::phase_normalize(&combo);
            if (a.matrix() * dir - dir * *lambda).norm() > res_tol {
                return None; // not a true eigendirection: unit reading is wrong
            }
            any_direction = true;
            if val < -1e-7 {
                if interior.is_none() {
                    interior = Some(dir);
                }
            } else if val.abs() <= 1e-7 {
                boundary.push(BoundaryPoint::from_lift_unchecked(dir));
            }
        }
    }
    if !any_direction {
        return None;
    }
    if let Some(fixed) = interior {
        return Some(IsometryClass::Elliptic {
            interior_fixed: fixed,
            boundary_fixed: boundary,
        });
    }
    boundary
        .into_iter()
        .next()
        .map(|fixed| IsometryClass::Parabolic { fixed })
}

/// The eigen-frame presentation `A = C_A E(r,θ,φ) C_A^{-1}`.
///
/// Columns of the frame are `(a_A, x_A, y_A, r_A)`: attracting and repelling
/// null eigenvectors and the two unit positive eigenvectors, normalized so
/// that `<x,x> = <y,y> = 1`, `<r,a> = 1` and `det C_A = 1`. Phases follow the
/// crate convention: first significant coordinate of `a, x, y` real positive,
/// the determinant phase carried jointly by `a` and `r`.
#[derive(Debug, Clone)]
pub struct LoxodromicDecomposition {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
    pub frame: GroupElement,
    /// `max |C E C^{-1} - A|` relative to the magnitude of `A`.
    pub residual: f64,
}

impl LoxodromicDecomposition {
    /// Attracting null eigenvector (eigenvalue `r e^{iθ}`).
    pub fn att(&self) -> CVec4 {
        self.frame.matrix().column(0).into_owned().into()
    }

    /// Unit positive eigenvector for `e^{iφ}`.
    pub fn x(&self) -> CVec4 {
        self.frame.matrix().column(1).into_owned().into()
    }

    /// Unit positive eigenvector for `e^{-i(2θ+φ)}`.
    pub fn y(&self) -> CVec4 {
        self.frame.matrix().column(2).into_owned().into()
    }

    /// Repelling null eigenvector (eigenvalue `r^{-1} e^{iθ}`).
    pub fn rep(&self) -> CVec4 {
        self.frame.matrix().column(3).into_owned().into()
    }

    pub fn att_point(&self) -> BoundaryPoint {
        BoundaryPoint::from_lift_unchecked(self.att())
    }

    pub fn rep_point(&self) -> BoundaryPoint {
        BoundaryPoint::from_lift_unchecked(self.rep())
    }

    /// Rebuild the element `C E C^{-1}`.
    pub fn element(&self) -> GroupElement {
        let e = CMat4::from_diagonal(&CVec4::new(
            Cx::from_polar(self.r, self.theta),
            Cx::from_polar(1.0, self.phi),
            Cx::from_polar(1.0, -(2.0 * self.theta + self.phi)),
            Cx::from_polar(1.0 / self.r, self.theta),
        ));
        let c = self.frame.matrix();
        let cinv = self.frame.inverse();
        GroupElement::from_matrix_unchecked(c * e * cinv.matrix())
    }

    /// Element for a different diagonal in the same frame (twist-bends).
    pub fn element_with_diagonal(&self, diag: &GroupElement) -> GroupElement {
        let c = self.frame.matrix();
        let cinv = self.frame.inverse();
        GroupElement::from_matrix_unchecked(c * diag.matrix() * cinv.matrix())
    }
}

/// Eigenvector for the remaining eigenvalue after projecting out the other
/// three: columns of `Π (A - λ_j I)` span the eigenline when it is simple.
fn projected_eigenvector(m: &CMat4, others: &[Cx; 3]) -> Result<CVec4> {
    let mut p = CMat4::identity();
    for l in others {
        p = p * (m - CMat4::from_diagonal_element(*l));
    }
    let mut best = p.column(0).into_owned();
    for c in 1..4 {
        if p.column(c).norm() > best.norm() {
            best = p.column(c).into_owned();
        }
    }
    if best.norm() == 0.0 {
        return Err(Error::DegenerateUnitEigenvalues);
    }
    Ok(CVec4::from(best) / Cx::new(best.norm(), 0.0))
}

/// Canonical unit orthonormal pair spanning the form-orthogonal complement
/// of two independent null lines.
fn complement_pair(a: &CVec4, r: &CVec4) -> Result<(CVec4, CVec4)> {
    let h = hermitian::h_matrix();
    let rows: Vec<CVec4> = [a, r]
        .iter()
        .map(|c| {
            let hc = h * **c;
            CVec4::new(hc[0].conj(), hc[1].conj(), hc[2].conj(), hc[3].conj())
        })
        .collect();
    let comp = linalg::row_null_space(&rows, 1e-10);
    if comp.len() != 2 {
        return Err(Error::DegenerateUnitEigenvalues);
    }
    let x0 = linalg::phase_normalize(&comp[0]);
    let qx = hermitian::self_pairing(&x0);
    if qx <= 0.0 {
        return Err(Error::NotLoxodromic);
    }
    let x = x0 / Cx::new(qx.sqrt(), 0.0);
    let mut u = comp[1];
    u -= x * hermitian::herm_form(&u, &x);
    let y0 = linalg::phase_normalize(&u);
    let qy = hermitian::self_pairing(&y0);
    if qy <= 0.0 {
        return Err(Error::NotLoxodromic);
    }
    Ok((x, y0 / Cx::new(qy.sqrt(), 0.0)))
}

/// Decompose a loxodromic element into its normal form and eigen-frame.
///
/// Refuses near-parabolic inputs (`r - 1 < 1e-6`). When the two unit
/// eigenvalues coincide exactly (within `1e-10`) the frame is completed with
/// a canonical orthonormal basis of the unit eigenplane, so the diagonal
/// normal forms themselves decompose; in the ill-conditioned band between
/// `1e-10` and `1e-7` separation the operation refuses instead of returning
/// an inaccurate frame.
pub fn decompose_loxodromic(a: &GroupElement) -> Result<LoxodromicDecomposition> {
    let ti = trace_invariants(a);
    let roots = eigenvalues_from_invariants(ti.tau, ti.sigma);
    match classify_isometry(a, DEFAULT_TOL) {
        Ok(IsometryClass::Loxodromic { .. }) => {}
        Ok(_) => return Err(Error::NotLoxodromic),
        Err(e) => return Err(e),
    }
    let mut spec = match_loxodromic_pattern(&roots);
    if spec.r - 1.0 < NEAR_PARABOLIC_GUARD {
        return Err(Error::NearParabolic {
            margin: spec.r - 1.0,
        });
    }
    // A double unit root splits by up to ~1e-7 in the quartic solve, so
    // separations below that are indistinguishable from exact coincidence.
    let delta = (spec.unit_x - spec.unit_y).norm();
    const DEGENERATE_BELOW: f64 = 2e-7;
    const ILL_CONDITIONED_BELOW: f64 = 2e-6;
    if delta > DEGENERATE_BELOW && delta < ILL_CONDITIONED_BELOW {
        return Err(Error::DegenerateUnitEigenvalues);
    }

    let m = a.matrix();
    let att0 = projected_eigenvector(m, &[spec.unit_x, spec.unit_y, spec.repelling])?;
    let rep0 = projected_eigenvector(m, &[spec.attracting, spec.unit_x, spec.unit_y])?;

    let (x, y) = if delta <= DEGENERATE_BELOW {
        // Coinciding unit eigenvalues: recover the double root accurately as
        // the root of the characteristic polynomial's derivative, then take
        // the canonical basis of the eigenplane (the form-orthogonal
        // complement of the two fixed lines).
        let mu = polish_multiple_root(ti.tau, ti.sigma, (spec.unit_x + spec.unit_y) * 0.5, 2);
        spec.phi = mu.arg();
        complement_pair(&att0, &rep0)?
    } else {
        let x0 = projected_eigenvector(m, &[spec.attracting, spec.unit_y, spec.repelling])?;
        let y0 = projected_eigenvector(m, &[spec.attracting, spec.unit_x, spec.repelling])?;
        let x0 = linalg::phase_normalize(&x0);
        let y0 = linalg::phase_normalize(&y0);
        let qx = hermitian::self_pairing(&x0);
        let qy = hermitian::self_pairing(&y0);
        if qx <= 0.0 || qy <= 0.0 {
            return Err(Error::NotLoxodromic);
        }
        (
            x0 / Cx::new(qx.sqrt(), 0.0),
            y0 / Cx::new(qy.sqrt(), 0.0),
        )
    };

    // Remaining normalizations: <r,a> = 1, then the joint a/r phase fixing
    // det = 1 (x and y phases stay put).
    let av = linalg::phase_normalize(&att0);
    let pairing = hermitian::herm_form(&rep0, &av);
    if pairing.norm() < 1e-14 {
        return Err(Error::NotLoxodromic);
    }
    let rv = rep0 / pairing;

    let mut frame = CMat4::from_columns(&[av, x, y, rv]);
    let det = frame.determinant();
    if det.norm() < 1e-12 {
        return Err(Error::DegenerateUnitEigenvalues);
    }
    let lam = linalg::principal_sqrt(Cx::new(1.0, 0.0) / det);
    frame.set_column(0, &(av * lam));
    frame.set_column(3, &(rv * lam));

    let frame = GroupElement::certify(frame, 1e-6)?;
    let decomp = LoxodromicDecomposition {
        r: spec.r,
        theta: spec.theta,
        phi: spec.phi,
        frame,
        residual: 0.0,
    };
    let rebuilt = decomp.element();
    let diff = rebuilt.matrix() - a.matrix();
    let residual = linalg::max_abs_mat(&diff) / (1.0 + linalg::max_abs_mat(a.matrix()));
    Ok(LoxodromicDecomposition { residual, ..decomp })
}

/// Loxodromic conjugacy test: equality of the trace invariants.
pub fn loxodromic_conjugate(a: &GroupElement, b: &GroupElement, tol: f64) -> Result<bool> {
    for g in [a, b] {
        match classify_isometry(g, DEFAULT_TOL)? {
            IsometryClass::Loxodromic { .. } => {}
            _ => return Err(Error::NotLoxodromic),
        }
    }
    let ta = trace_invariants(a);
    let tb = trace_invariants(b);
    Ok((ta.tau - tb.tau).norm() <= tol && (ta.sigma - tb.sigma).abs() <= tol)
}


#[cfg(test)]
mod dbg_tests {
    use super::*;

    #[test]
    fn dbg_unit_cases() {
        let mut t = CMat4::identity();
        t[(0, 3)] = Cx::new(0.0, 1.0);
        let t = GroupElement::certify_default(t).unwrap();
        let ti = trace_invariants(&t);
        let roots = eigenvalues_from_invariants(ti.tau, ti.sigma);
        println!("T roots:");
        for r in roots {
            println!("  {r}   | |.|-1 = {:.3e}", r.norm() - 1.0);
        }
        let mean = roots.iter().sum::<Cx>() / 4.0;
        println!("mean {mean}, |mean|-1 = {:.3e}", mean.norm() - 1.0);
        let res = unit_classification(&t, &roots, 1e-6 * 2.0);
        println!("unit classification: {res:?}");

        let id = GroupElement::identity();
        let ti = trace_invariants(&id);
        let roots = eigenvalues_from_invariants(ti.tau, ti.sigma);
        println!("I roots:");
        for r in roots {
            println!("  {r}");
        }
        let res = unit_classification(&id, &roots, 1e-6 * 2.0);
        println!("unit classification: {res:?}");
    }
}
