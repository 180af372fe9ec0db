//! The Hermitian form of signature (3,1) and the linear algebra it induces.
//!
//! The form is fixed once and for all as
//!
//! ```text
//! <z,w> = w* H z = z1 conj(w4) + z2 conj(w2) + z3 conj(w3) + z4 conj(w1),
//!
//!     H = [ 0 0 0 1 ]
//!         [ 0 1 0 0 ]
//!         [ 0 0 1 0 ]
//!         [ 1 0 0 0 ]
//! ```
//!
//! Negative vectors project to points of the Siegel domain, null vectors to
//! its ideal boundary. A matrix `A` belongs to U(3,1) exactly when
//! `A* H A = H`, equivalently `A^-1 = H^-1 A* H`; adding `det A = 1` gives
//! SU(3,1).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::{CMat4, CVec4, Cx, DEFAULT_TOL};

/// Matrix of the Hermitian form in the fixed basis.
pub fn h_matrix() -> CMat4 {
    let o = Cx::new(0.0, 0.0);
    let l = Cx::new(1.0, 0.0);
    CMat4::new(o, o, o, l, o, l, o, o, o, o, l, o, l, o, o, o)
}

/// The Hermitian pairing `<z,w>`.
#[inline]
pub fn herm_form(z: &CVec4, w: &CVec4) -> Cx {
    z[0] * w[3].conj() + z[1] * w[1].conj() + z[2] * w[2].conj() + z[3] * w[0].conj()
}

/// `<z,z>` is real by conjugate symmetry; this returns its real part.
#[inline]
pub fn self_pairing(z: &CVec4) -> f64 {
    herm_form(z, z).re
}

/// Sign class of a vector with respect to the form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VectorClass {
    Positive,
    Negative,
    Null,
}

/// Classification record: the class, the computed form value and the
/// tolerance that defined the null band.
#[derive(Debug, Clone, Copy)]
pub struct ClassifiedVector {
    pub class: VectorClass,
    pub form_value: f64,
    pub tol_used: f64,
}

/// Classify `z` as positive, negative or null.
///
/// The null band is relative: `|<z,z>| <= tol * |z|^2` counts as null, which
/// keeps the classification invariant under rescaling of the lift.
pub fn classify_vector(z: &CVec4, tol: f64) -> Result<ClassifiedVector> {
    let scale = z.norm_squared();
    if scale == 0.0 {
        return Err(Error::ZeroVector);
    }
    let q = self_pairing(z);
    let band = tol * scale;
    let class = if q.abs() <= band {
        VectorClass::Null
    } else if q > 0.0 {
        VectorClass::Positive
    } else {
        VectorClass::Negative
    };
    Ok(ClassifiedVector {
        class,
        form_value: q,
        tol_used: tol,
    })
}

/// A matrix certified to preserve the form with determinant 1.
#[derive(Debug, Clone)]
pub struct GroupElement {
    matrix: CMat4,
    form_residual: f64,
    det_residual: f64,
}

impl GroupElement {
    /// Certify membership in SU(3,1).
    ///
    /// Both residuals are exposed on success; on failure they ride along in
    /// the error. The form residual is scaled by the squared magnitude of the
    /// matrix so large loxodromics are not penalized.
    pub fn certify(m: CMat4, tol: f64) -> Result<GroupElement> {
        let h = h_matrix();
        let gram = m.adjoint() * h * m - h;
        let scale = 1.0 + linalg::max_abs_mat(&m).powi(2);
        let form_residual = linalg::max_abs_mat(&gram) / scale;
        let det_residual = (m.determinant() - Cx::new(1.0, 0.0)).norm();
        if form_residual <= tol && det_residual <= tol {
            Ok(GroupElement {
                matrix: m,
                form_residual,
                det_residual,
            })
        } else {
            Err(Error::NotInGroup {
                form_residual,
                det_residual,
            })
        }
    }

    /// Certify with the crate default tolerance.
    pub fn certify_default(m: CMat4) -> Result<GroupElement> {
        Self::certify(m, DEFAULT_TOL)
    }

    /// Wrap a matrix that is in the group by construction (products and
    /// conjugates of certified elements). Residuals are measured, not gated.
    pub(crate) fn from_matrix_unchecked(m: CMat4) -> GroupElement {
        let h = h_matrix();
        let gram = m.adjoint() * h * m - h;
        let scale = 1.0 + linalg::max_abs_mat(&m).powi(2);
        GroupElement {
            form_residual: linalg::max_abs_mat(&gram) / scale,
            det_residual: (m.determinant() - Cx::new(1.0, 0.0)).norm(),
            matrix: m,
        }
    }

    pub fn matrix(&self) -> &CMat4 {
        &self.matrix
    }

    pub fn form_residual(&self) -> f64 {
        self.form_residual
    }

    pub fn det_residual(&self) -> f64 {
        self.det_residual
    }

    /// Exact inverse through the form: `A^-1 = H A* H`.
    ///
    /// (`H^-1 = H` for the fixed basis.)
    pub fn inverse(&self) -> GroupElement {
        let h = h_matrix();
        let inv = h * self.matrix.adjoint() * h;
        GroupElement {
            matrix: inv,
            form_residual: self.form_residual,
            det_residual: self.det_residual,
        }
    }

    /// Group product; residuals are re-measured.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let m = self.matrix * other.matrix;
        let h = h_matrix();
        let gram = m.adjoint() * h * m - h;
        let scale = 1.0 + linalg::max_abs_mat(&m).powi(2);
        GroupElement {
            form_residual: linalg::max_abs_mat(&gram) / scale,
            det_residual: (m.determinant() - Cx::new(1.0, 0.0)).norm(),
            matrix: m,
        }
    }

    pub fn apply(&self, v: &CVec4) -> CVec4 {
        self.matrix * v
    }

    pub fn conjugate(&self, by: &GroupElement) -> GroupElement {
        by.compose(self).compose(&by.inverse())
    }

    pub fn identity() -> GroupElement {
        GroupElement {
            matrix: CMat4::identity(),
            form_residual: 0.0,
            det_residual: 0.0,
        }
    }
}

/// A point of the ideal boundary, stored as a null lift and understood
/// projectively.
#[derive(Debug, Clone)]
pub struct BoundaryPoint {
    lift: CVec4,
}

impl BoundaryPoint {
    /// Wrap a lift after checking it is null and nonzero.
    pub fn from_lift(lift: CVec4, tol: f64) -> Result<BoundaryPoint> {
        let c = classify_vector(&lift, tol)?;
        if c.class != VectorClass::Null {
            return Err(Error::NotInClosedDomain {
                defect: c.form_value,
            });
        }
        Ok(BoundaryPoint { lift })
    }

    /// Wrap a lift without the nullity check. For eigenvector lifts that are
    /// null by construction.
    pub(crate) fn from_lift_unchecked(lift: CVec4) -> BoundaryPoint {
        BoundaryPoint { lift }
    }

    pub fn lift(&self) -> &CVec4 {
        &self.lift
    }

    /// The distinguished point at infinity, lift (1,0,0,0).
    pub fn infinity() -> BoundaryPoint {
        BoundaryPoint {
            lift: CVec4::new(
                Cx::new(1.0, 0.0),
                Cx::new(0.0, 0.0),
                Cx::new(0.0, 0.0),
                Cx::new(0.0, 0.0),
            ),
        }
    }

    /// The distinguished origin, lift (0,0,0,1).
    pub fn origin() -> BoundaryPoint {
        BoundaryPoint {
            lift: CVec4::new(
                Cx::new(0.0, 0.0),
                Cx::new(0.0, 0.0),
                Cx::new(0.0, 0.0),
                Cx::new(1.0, 0.0),
            ),
        }
    }

    /// Projective proximity: sine of the Euclidean angle between the lifts.
    pub fn projective_distance(&self, other: &BoundaryPoint) -> f64 {
        projective_sine(&self.lift, &other.lift)
    }

    pub fn rescaled(&self, factor: Cx) -> BoundaryPoint {
        BoundaryPoint {
            lift: self.lift * factor,
        }
    }

    pub fn transformed(&self, g: &GroupElement) -> BoundaryPoint {
        BoundaryPoint {
            lift: g.apply(&self.lift),
        }
    }
}

/// Sine of the angle between two complex lines (Euclidean metric on lifts).
pub(crate) fn projective_sine(a: &CVec4, b: &CVec4) -> f64 {
    let na = a.norm();
    let nb = b.norm();
    if na == 0.0 || nb == 0.0 {
        return 1.0;
    }
    let mut dot = Cx::new(0.0, 0.0);
    for k in 0..4 {
        dot += a[k].conj() * b[k];
    }
    let cos = (dot.norm() / (na * nb)).min(1.0);
    (1.0 - cos * cos).max(0.0).sqrt()
}

/// Standard lift of a Siegel-domain point `(z1,z2,z3)`: append a 1.
///
/// Requires `2 Re z1 + |z2|^2 + |z3|^2 <= 0` up to `tol`; the lift is null
/// exactly on the boundary of the domain.
pub fn standard_lift(z1: Cx, z2: Cx, z3: Cx, tol: f64) -> Result<CVec4> {
    let defect = 2.0 * z1.re + z2.norm_sqr() + z3.norm_sqr();
    let scale = 1.0 + z1.norm() + z2.norm_sqr() + z3.norm_sqr();
    if defect > tol * scale {
        return Err(Error::NotInClosedDomain { defect });
    }
    Ok(CVec4::new(z1, z2, z3, Cx::new(1.0, 0.0)))
}

/// Bergman distance between two negative vectors:
/// `cosh^2(rho/2) = <z,w><w,z> / (<z,z><w,w>)`.
///
/// Independent of lift scaling.
pub fn bergman_distance(z: &CVec4, w: &CVec4, tol: f64) -> Result<f64> {
    for v in [z, w] {
        if classify_vector(v, tol)?.class != VectorClass::Negative {
            return Err(Error::NotNegative);
        }
    }
    let num = herm_form(z, w).norm_sqr();
    let den = self_pairing(z) * self_pairing(w);
    let ratio = (num / den).max(1.0);
    Ok(2.0 * ratio.sqrt().acosh())
}

/// Recover the third column of a group element from columns 1, 2, 4.
///
/// The three admissible columns leave a one-dimensional form-orthogonal
/// complement; the determinant-1 condition fixes the scale of the missing
/// column uniquely.
pub fn complete_frame(c1: &CVec4, c2: &CVec4, c4: &CVec4, tol: f64) -> Result<CVec4> {
    let h = h_matrix();
    // <w, c> = c* H w, so the constraints are rows (H c)* for each given column.
    let rows: Vec<CVec4> = [c1, c2, c4]
        .iter()
        .map(|c| {
            let hc = h * **c;
            CVec4::new(
                hc[0].conj(),
                hc[1].conj(),
                hc[2].conj(),
                hc[3].conj(),
            )
        })
        .collect();
    let kernel = linalg::row_null_space(&rows, tol.max(1e-12));
    if kernel.len() != 1 {
        return Err(Error::DegenerateSpan);
    }
    let w = kernel[0];
    let candidate = CMat4::from_columns(&[*c1, *c2, w, *c4]);
    let d = candidate.determinant();
    if d.norm() < 1e-12 {
        return Err(Error::DegenerateSpan);
    }
    Ok(w / d)
}

/// Build an SU(3,1) frame `(a', x, y, r')` from a non-orthogonal pair of null
/// vectors: `a', r'` are rescalings with `<a',r'> = 1`, while `x, y` are unit
/// positive vectors spanning the form-orthogonal complement of the pair.
///
/// Determinant 1 is enforced by multiplying the whole frame with the fourth
/// root of `1/det` whose argument lies in `(-pi/4, pi/4]`.
pub fn indefinite_gram_schmidt(a: &CVec4, r: &CVec4, tol: f64) -> Result<GroupElement> {
    let s = herm_form(a, r);
    let scale = a.norm() * r.norm();
    if s.norm() <= tol * scale.max(1e-300) {
        return Err(Error::DegeneratePair);
    }
    // The pairing is linear in its first slot, so a/s pairs to 1 with r.
    let a_scaled = a / s;
    debug_assert!((herm_form(&a_scaled, r) - Cx::new(1.0, 0.0)).norm() < 1e-9 * (1.0 + scale));

    let h = h_matrix();
    let rows: Vec<CVec4> = [a, r]
        .iter()
        .map(|c| {
            let hc = h * **c;
            CVec4::new(hc[0].conj(), hc[1].conj(), hc[2].conj(), hc[3].conj())
        })
        .collect();
    let comp = linalg::row_null_space(&rows, 1e-12);
    if comp.len() != 2 {
        return Err(Error::DegeneratePair);
    }
    // Positive-definite Gram-Schmidt inside the complement. Phase convention
    // first, then unit form-norm (a positive real rescale keeps the phase).
    let x0 = linalg::phase_normalize(&comp[0]);
    let q1 = self_pairing(&x0);
    if q1 <= 0.0 {
        return Err(Error::DegeneratePair);
    }
    let x = x0 / Cx::new(q1.sqrt(), 0.0);
    let mut u2 = comp[1];
    u2 -= x * herm_form(&u2, &x);
    let y0 = linalg::phase_normalize(&u2);
    let q2 = self_pairing(&y0);
    if q2 <= 0.0 {
        return Err(Error::DegeneratePair);
    }
    let y = y0 / Cx::new(q2.sqrt(), 0.0);

    let mut frame = CMat4::from_columns(&[a_scaled, x, y, *r]);
    let det = frame.determinant();
    if det.norm() < 1e-12 {
        return Err(Error::DegeneratePair);
    }
    let u = linalg::fourth_root_principal(Cx::new(1.0, 0.0) / det);
    frame *= u;
    GroupElement::certify(frame, 100.0 * tol.max(DEFAULT_TOL))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: [(f64, f64); 4]) -> CVec4 {
        CVec4::new(
            Cx::new(entries[0].0, entries[0].1),
            Cx::new(entries[1].0, entries[1].1),
            Cx::new(entries[2].0, entries[2].1),
            Cx::new(entries[3].0, entries[3].1),
        )
    }

    fn re(x: f64) -> Cx {
        Cx::new(x, 0.0)
    }

    #[test]
    fn form_on_distinguished_points() {
        let o = BoundaryPoint::origin();
        let inf = BoundaryPoint::infinity();
        assert_eq!(herm_form(o.lift(), inf.lift()), re(1.0));
        // <z,z> for z = (-1,1,1,1) is -1+1+1-1 = 0
        let z = v([(-1.0, 0.0), (1.0, 0.0), (1.0, 0.0), (1.0, 0.0)]);
        assert!(self_pairing(&z).abs() < 1e-15);
        // e2 pairs to 1 with itself
        let e2 = v([(0.0, 0.0), (1.0, 0.0), (0.0, 0.0), (0.0, 0.0)]);
        assert_eq!(herm_form(&e2, &e2), re(1.0));
    }

    #[test]
    fn form_is_conjugate_symmetric() {
        let z = v([(0.3, -1.2), (0.5, 0.1), (-0.7, 2.0), (1.1, 0.4)]);
        let w = v([(-0.2, 0.9), (1.5, -0.3), (0.0, 0.8), (-1.0, -0.6)]);
        let zw = herm_form(&z, &w);
        let wz = herm_form(&w, &z);
        assert!((zw - wz.conj()).norm() < 1e-15);
    }

    #[test]
    fn classify_examples() {
        let tol = DEFAULT_TOL;
        assert_eq!(
            classify_vector(&v([(0.0, 0.0), (1.0, 0.0), (0.0, 0.0), (0.0, 0.0)]), tol)
                .unwrap()
                .class,
            VectorClass::Positive
        );
        assert_eq!(
            classify_vector(&v([(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)]), tol)
                .unwrap()
                .class,
            VectorClass::Null
        );
        let neg = classify_vector(&v([(-1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (1.0, 0.0)]), tol)
            .unwrap();
        assert_eq!(neg.class, VectorClass::Negative);
        assert!((neg.form_value + 2.0).abs() < 1e-15);
        assert!(matches!(
            classify_vector(&CVec4::zeros(), tol),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn certify_examples() {
        let d = CMat4::from_diagonal(&CVec4::new(re(2.0), re(1.0), re(1.0), re(0.5)));
        assert!(GroupElement::certify_default(d).is_ok());
        assert!(GroupElement::certify_default(CMat4::identity()).is_ok());
        let bad = CMat4::from_diagonal(&CVec4::new(re(2.0), re(1.0), re(1.0), re(1.0)));
        assert!(matches!(
            GroupElement::certify_default(bad),
            Err(Error::NotInGroup { .. })
        ));
    }

    #[test]
    fn standard_lift_examples() {
        let tol = DEFAULT_TOL;
        let z = standard_lift(re(-1.0), re(1.0), re(1.0), tol).unwrap();
        assert_eq!(z, v([(-1.0, 0.0), (1.0, 0.0), (1.0, 0.0), (1.0, 0.0)]));
        assert_eq!(
            classify_vector(&z, tol).unwrap().class,
            VectorClass::Null
        );
        let w = standard_lift(re(-1.0), re(0.0), re(0.0), tol).unwrap();
        assert_eq!(
            classify_vector(&w, tol).unwrap().class,
            VectorClass::Negative
        );
        assert!(matches!(
            standard_lift(re(1.0), re(0.0), re(0.0), tol),
            Err(Error::NotInClosedDomain { .. })
        ));
    }

    #[test]
    fn bergman_examples() {
        let tol = DEFAULT_TOL;
        let z = v([(-1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        assert!(bergman_distance(&z, &z, tol).unwrap() < 1e-9);
        let w = v([(-2.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.5, 0.0)]);
        let d = bergman_distance(&z, &w, tol).unwrap();
        assert!((d - 2.0 * 2.0f64.ln()).abs() < 1e-12);
        // lift independence
        let w3 = w * Cx::new(0.0, 3.0);
        assert!((bergman_distance(&z, &w3, tol).unwrap() - d).abs() < 1e-12);
        // symmetry
        assert!((bergman_distance(&w, &z, tol).unwrap() - d).abs() < 1e-12);
        let pos = v([(0.0, 0.0), (1.0, 0.0), (0.0, 0.0), (0.0, 0.0)]);
        assert!(matches!(
            bergman_distance(&z, &pos, tol),
            Err(Error::NotNegative)
        ));
    }

    #[test]
    fn complete_frame_identity_and_degenerate() {
        let e1 = v([(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)]);
        let e2 = v([(0.0, 0.0), (1.0, 0.0), (0.0, 0.0), (0.0, 0.0)]);
        let e3 = v([(0.0, 0.0), (0.0, 0.0), (1.0, 0.0), (0.0, 0.0)]);
        let e4 = v([(0.0, 0.0), (0.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        let c3 = complete_frame(&e1, &e2, &e4, DEFAULT_TOL).unwrap();
        assert!((c3 - e3).norm() < 1e-12);
        assert!(matches!(
            complete_frame(&e1, &e2, &e1, DEFAULT_TOL),
            Err(Error::DegenerateSpan)
        ));
    }

    #[test]
    fn gram_schmidt_on_distinguished_pair() {
        let inf = BoundaryPoint::infinity();
        let o = BoundaryPoint::origin();
        let frame = indefinite_gram_schmidt(inf.lift(), o.lift(), DEFAULT_TOL).unwrap();
        // Columns should be (inf, e2, e3, o) up to the documented det-1 scaling.
        let m = frame.matrix();
        assert!(m.column(0).norm() > 0.0);
        assert!(frame.form_residual() < 1e-10);
        assert!(frame.det_residual() < 1e-10);
        assert!(matches!(
            indefinite_gram_schmidt(inf.lift(), inf.lift(), DEFAULT_TOL),
            Err(Error::DegeneratePair)
        ));
    }
}
