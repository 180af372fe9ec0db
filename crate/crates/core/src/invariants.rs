//! Conjugation invariants of boundary configurations and loxodromic pairs.
//!
//! The Koranyi-Riemann cross-ratio of four boundary points is
//!
//! ```text
//! X(z1,z2,z3,z4) = <z3,z1><z4,z2> / (<z4,z1><z3,z2>),
//! ```
//!
//! independent of the lifts. Three orderings survive the symmetries:
//! `X1 = [z1,z2,z3,z4]`, `X2 = [z1,z3,z2,z4]`, `X3 = [z2,z3,z1,z4]`; they
//! satisfy `|X2| = |X1||X3|` and one real inequality, cutting out the
//! five-dimensional cross-ratio variety.
//!
//! For a pair of loxodromics the fixed points produce the pair cross-ratios,
//! Goldman-style eta invariants pair fixed points of one map with a positive
//! eigenvector of the other, and the alpha/beta invariants mix three null
//! eigenvectors with one positive one. Together with the traces they form the
//! 15 real Fenchel-Nielsen coordinates of a non-singular pair.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermitian::{herm_form, BoundaryPoint, GroupElement};
use crate::isometry::{trace_invariants, LoxodromicDecomposition};
use crate::linalg::wrap_angle;
use crate::{CVec4, Cx, REAL_CROSS_RATIO_THRESHOLD};

/// Pairing with its degeneracy scale: `<u,v>` counts as vanishing when its
/// modulus is below `tol * |u| * |v|`.
fn checked_pairing(u: &CVec4, v: &CVec4, tol: f64) -> Result<Cx> {
    let p = herm_form(u, v);
    if p.norm() <= tol * u.norm() * v.norm() {
        return Err(Error::DegeneratePairing);
    }
    Ok(p)
}

fn pairing_vanishes(u: &CVec4, v: &CVec4, tol: f64) -> bool {
    herm_form(u, v).norm() <= tol * u.norm() * v.norm()
}

/// Koranyi-Riemann cross-ratio of four boundary points.
pub fn cross_ratio(
    z1: &BoundaryPoint,
    z2: &BoundaryPoint,
    z3: &BoundaryPoint,
    z4: &BoundaryPoint,
) -> Result<Cx> {
    cross_ratio_lifts(z1.lift(), z2.lift(), z3.lift(), z4.lift(), 1e-12)
}

pub(crate) fn cross_ratio_lifts(
    z1: &CVec4,
    z2: &CVec4,
    z3: &CVec4,
    z4: &CVec4,
    tol: f64,
) -> Result<Cx> {
    let d1 = checked_pairing(z4, z1, tol)?;
    let d2 = checked_pairing(z3, z2, tol)?;
    Ok(herm_form(z3, z1) * herm_form(z4, z2) / (d1 * d2))
}

/// A point of the cross-ratio variety with its two constraint residuals.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CrossRatioTriple {
    pub x1: Cx,
    pub x2: Cx,
    pub x3: Cx,
    /// `||X2| - |X1||X3||` relative to the larger of the two sides.
    pub variety_residual: f64,
    /// `2|X1|^2 Re X3 - (|X1|^2 + |X2|^2 + 1 - 2 Re(X1 + X2))`, nonnegative
    /// on the variety; zero exactly on the complex-line degenerations.
    pub inequality_slack: f64,
}

impl CrossRatioTriple {
    pub fn new(x1: Cx, x2: Cx, x3: Cx) -> CrossRatioTriple {
        let lhs = x2.norm();
        let rhs = x1.norm() * x3.norm();
        let variety_residual = (lhs - rhs).abs() / lhs.max(rhs).max(1e-300);
        let inequality_slack = 2.0 * x1.norm_sqr() * x3.re
            - (x1.norm_sqr() + x2.norm_sqr() + 1.0 - 2.0 * (x1.re + x2.re));
        CrossRatioTriple {
            x1,
            x2,
            x3,
            variety_residual,
            inequality_slack,
        }
    }

    /// Both variety constraints within `tol`.
    pub fn on_variety(&self, tol: f64) -> bool {
        self.variety_residual <= tol && self.inequality_slack >= -tol
    }

    /// Equality case of the inequality: the quadruple degenerates onto a
    /// complex line.
    pub fn equality_case(&self, tol: f64) -> bool {
        self.inequality_slack.abs() <= tol
    }

    /// Left side of the bound `2 Re(X1 + X2) >= 1`.
    pub fn corollary_bound(&self) -> f64 {
        2.0 * (self.x1.re + self.x2.re)
    }

    /// True when every cross-ratio is real within the relative threshold.
    pub fn all_real(&self, tol: f64) -> bool {
        [self.x1, self.x2, self.x3]
            .iter()
            .all(|x| x.im.abs() <= tol * (1.0 + x.norm()))
    }
}

/// The three cross-ratios of an ordered quadruple of distinct boundary
/// points.
pub fn cross_ratio_triple(
    z1: &BoundaryPoint,
    z2: &BoundaryPoint,
    z3: &BoundaryPoint,
    z4: &BoundaryPoint,
) -> Result<CrossRatioTriple> {
    cross_ratio_triple_lifts(z1.lift(), z2.lift(), z3.lift(), z4.lift(), 1e-12)
}

pub(crate) fn cross_ratio_triple_lifts(
    z1: &CVec4,
    z2: &CVec4,
    z3: &CVec4,
    z4: &CVec4,
    tol: f64,
) -> Result<CrossRatioTriple> {
    let x1 = cross_ratio_lifts(z1, z2, z3, z4, tol)?;
    let x2 = cross_ratio_lifts(z1, z3, z2, z4, tol)?;
    let x3 = cross_ratio_lifts(z2, z3, z1, z4, tol)?;
    Ok(CrossRatioTriple::new(x1, x2, x3))
}

/// Cartan's angular invariant
/// `A(z1,z2,z3) = arg(-<z1,z2><z2,z3><z3,z1>)`, valued in `[-pi/2, pi/2]`.
pub fn cartan_invariant(
    z1: &BoundaryPoint,
    z2: &BoundaryPoint,
    z3: &BoundaryPoint,
) -> Result<f64> {
    cartan_invariant_lifts(z1.lift(), z2.lift(), z3.lift(), 1e-12)
}

pub(crate) fn cartan_invariant_lifts(z1: &CVec4, z2: &CVec4, z3: &CVec4, tol: f64) -> Result<f64> {
    let p12 = checked_pairing(z1, z2, tol)?;
    let p23 = checked_pairing(z2, z3, tol)?;
    let p31 = checked_pairing(z3, z1, tol)?;
    Ok((-(p12 * p23 * p31)).arg())
}

/// Residuals of the two Cartan angle relations
/// `A1 + A2 = arg(conj(X1) X2)` and `A1 - A2 = arg(X3)` with
/// `A1 = A(z4,z3,z2)`, `A2 = A(z3,z2,z1)`, both taken modulo 2 pi.
#[derive(Debug, Clone, Copy)]
pub struct AngleRelationResiduals {
    pub sum_residual: f64,
    pub diff_residual: f64,
    /// Set when some cross-ratio sits within a factor 10 of the real-part
    /// threshold; the relations remain asserted but are fragile there.
    pub near_real: bool,
}

/// The angle relations hold only when all three cross-ratios are non-real;
/// on the real locus the call refuses.
pub fn angle_relations(
    z1: &BoundaryPoint,
    z2: &BoundaryPoint,
    z3: &BoundaryPoint,
    z4: &BoundaryPoint,
) -> Result<AngleRelationResiduals> {
    let t = cross_ratio_triple(z1, z2, z3, z4)?;
    let margins: Vec<f64> = [t.x1, t.x2, t.x3]
        .iter()
        .map(|x| x.im.abs() / (1.0 + x.norm()))
        .collect();
    if margins.iter().any(|&m| m <= REAL_CROSS_RATIO_THRESHOLD) {
        return Err(Error::RealCrossRatioCase);
    }
    let near_real = margins
        .iter()
        .any(|&m| m <= 10.0 * REAL_CROSS_RATIO_THRESHOLD);
    let a1 = cartan_invariant(z4, z3, z2)?;
    let a2 = cartan_invariant(z3, z2, z1)?;
    let sum_residual = wrap_angle(a1 + a2 - (t.x1.conj() * t.x2).arg()).abs();
    let diff_residual = wrap_angle(a1 - a2 - t.x3.arg()).abs();
    Ok(AngleRelationResiduals {
        sum_residual,
        diff_residual,
        near_real,
    })
}

/// Where four boundary points sit when their cross-ratios are all real.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coplanarity {
    Chain,
    TotallyReal,
    Generic,
}

/// Real cross-ratios mean the quadruple lies on a chain (`X3 = -X2/X1`) or
/// in a totally real totally geodesic subspace (`X3 = +X2/X1`); otherwise
/// the quadruple is generic.
pub fn coplanarity_classify(
    z1: &BoundaryPoint,
    z2: &BoundaryPoint,
    z3: &BoundaryPoint,
    z4: &BoundaryPoint,
    tol: f64,
) -> Result<Coplanarity> {
    let t = cross_ratio_triple(z1, z2, z3, z4)?;
    if !t.all_real(tol) {
        return Ok(Coplanarity::Generic);
    }
    let ratio = t.x2 / t.x1;
    let chain = (t.x3 + ratio).norm();
    let real = (t.x3 - ratio).norm();
    let scale = tol * (1.0 + t.x3.norm() + ratio.norm());
    match (chain <= scale, real <= scale) {
        (true, false) => Ok(Coplanarity::Chain),
        (false, true) => Ok(Coplanarity::TotallyReal),
        (true, true) => Ok(if chain <= real {
            Coplanarity::Chain
        } else {
            Coplanarity::TotallyReal
        }),
        (false, false) => Err(Error::InconsistentRealTriple { chain, real }),
    }
}

/// The eta/nu invariants of a pair together with the projective zeta_0.
#[derive(Debug, Clone, Copy)]
pub struct EtaSet {
    pub eta1: Cx,
    pub eta2: Cx,
    pub nu1: Cx,
    pub nu2: Cx,
    /// Numerator `<x_B,y_A><y_B,x_A>` of zeta_0.
    pub zeta0_num: Cx,
    /// Denominator `<x_B,x_A><y_B,y_A>` of zeta_0.
    pub zeta0_den: Cx,
}

/// Value of the projective invariant zeta_0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Zeta0 {
    Finite(Cx),
    Infinite,
}

impl EtaSet {
    /// Classify zeta_0 projectively; `None` when numerator and denominator
    /// both vanish.
    pub fn zeta0(&self, tol: f64) -> Option<Zeta0> {
        let scale = tol.max(1e-300);
        if self.zeta0_den.norm() > scale {
            Some(Zeta0::Finite(self.zeta0_num / self.zeta0_den))
        } else if self.zeta0_num.norm() > scale {
            Some(Zeta0::Infinite)
        } else {
            None
        }
    }
}

/// Check the four fixed points of the two decompositions for a projective
/// coincidence; returns the shared point if one exists.
pub(crate) fn shared_fixed_point(
    a: &LoxodromicDecomposition,
    b: &LoxodromicDecomposition,
    tol: f64,
) -> Option<BoundaryPoint> {
    for pa in [a.att(), a.rep()] {
        for pb in [b.att(), b.rep()] {
            if crate::hermitian::projective_sine(&pa, &pb) <= tol {
                return Some(BoundaryPoint::from_lift_unchecked(pa));
            }
        }
    }
    None
}

/// The Goldman-style eta invariants
/// `eta1 = <a_A,x_B><x_B,r_A> / (<a_A,r_A><x_B,x_B>)` and companions, plus
/// zeta_0 in projective form.
pub fn eta_invariants(
    a: &LoxodromicDecomposition,
    b: &LoxodromicDecomposition,
    tol: f64,
) -> Result<EtaSet> {
    if shared_fixed_point(a, b, 1e-12).is_some() {
        return Err(Error::SharedFixedPoint);
    }
    let _ = tol;
    let (aa, xa, ya, ra) = (a.att(), a.x(), a.y(), a.rep());
    let (ab, xb, yb, rb) = (b.att(), b.x(), b.y(), b.rep());

    let eta = |fix_a: &CVec4, fix_r: &CVec4, pos: &CVec4| -> Cx {
        herm_form(fix_a, pos) * herm_form(pos, fix_r)
            / (herm_form(fix_a, fix_r) * herm_form(pos, pos))
    };
    Ok(EtaSet {
        eta1: eta(&aa, &ra, &xb),
        eta2: eta(&aa, &ra, &yb),
        nu1: eta(&ab, &rb, &xa),
        nu2: eta(&ab, &rb, &ya),
        zeta0_num: herm_form(&xb, &ya) * herm_form(&yb, &xa),
        zeta0_den: herm_form(&xb, &xa) * herm_form(&yb, &ya),
    })
}

/// The alpha/beta invariants with their validity tags.
#[derive(Debug, Clone, Copy)]
pub struct AlphaBeta {
    /// `alpha[i-1] = X(r_A, a_A, w_B, a_B)` with `w_B = x_B` (i=1) or `y_B`
    /// (i=2); `None` when a defining pairing degenerates.
    pub alpha: [Option<Cx>; 2],
    pub beta: [Option<Cx>; 2],
    pub chosen_alpha: (u8, Cx),
    pub chosen_beta: (u8, Cx),
}

/// Compute all four alpha/beta invariants and pick the least defined index
/// of each family with modulus above `tol`.
pub fn alpha_beta_invariants(
    a: &LoxodromicDecomposition,
    b: &LoxodromicDecomposition,
    tol: f64,
) -> Result<AlphaBeta> {
    if shared_fixed_point(a, b, 1e-12).is_some() {
        return Err(Error::SharedFixedPoint);
    }
    let (aa, xa, ya, ra) = (a.att(), a.x(), a.y(), a.rep());
    let (ab, xb, yb, rb) = (b.att(), b.x(), b.y(), b.rep());

    let invariant = |fix_r: &CVec4, fix_a: &CVec4, pos: &CVec4, other_a: &CVec4| -> Option<Cx> {
        // X(fix_r, fix_a, pos, other_a):
        //   <pos,fix_r><other_a,fix_a> / (<other_a,fix_r><pos,fix_a>)
        if pairing_vanishes(other_a, fix_r, 1e-12) || pairing_vanishes(pos, fix_a, 1e-12) {
            return None;
        }
        Some(
            herm_form(pos, fix_r) * herm_form(other_a, fix_a)
                / (herm_form(other_a, fix_r) * herm_form(pos, fix_a)),
        )
    };

    let alpha = [
        invariant(&ra, &aa, &xb, &ab),
        invariant(&ra, &aa, &yb, &ab),
    ];
    let beta = [
        invariant(&rb, &ab, &xa, &aa),
        invariant(&rb, &ab, &ya, &aa),
    ];

    let choose = |family: &[Option<Cx>; 2]| -> Option<(u8, Cx)> {
        for (i, v) in family.iter().enumerate() {
            if let Some(value) = v {
                if value.norm() > tol {
                    return Some((i as u8 + 1, *value));
                }
            }
        }
        None
    };
    let chosen_alpha = choose(&alpha).ok_or(Error::NoValidAlpha)?;
    let chosen_beta = choose(&beta).ok_or(Error::NoValidBeta)?;
    Ok(AlphaBeta {
        alpha,
        beta,
        chosen_alpha,
        chosen_beta,
    })
}

/// The full 15-real-parameter coordinate record of a non-singular pair.
#[derive(Debug, Clone, Copy)]
pub struct PairInvariants {
    pub tau_a: Cx,
    pub tau_b: Cx,
    pub sigma_a: f64,
    pub sigma_b: f64,
    pub cross_ratios: CrossRatioTriple,
    pub alpha: (u8, Cx),
    pub beta: (u8, Cx),
}

/// Pair cross-ratios from the fixed points, in the pair ordering
/// `X1 = [a_B, a_A, r_A, r_B]`, `X2 = [a_B, r_A, a_A, r_B]`,
/// `X3 = [a_A, r_A, a_B, r_B]`.
pub fn pair_cross_ratios(
    a: &LoxodromicDecomposition,
    b: &LoxodromicDecomposition,
) -> Result<CrossRatioTriple> {
    cross_ratio_triple_lifts(&b.att(), &a.att(), &a.rep(), &b.rep(), 1e-12)
}

/// Assemble the Fenchel-Nielsen coordinates of a non-singular pair.
///
/// The non-singularity gate lives in [`crate::nonsingular`]; a failure is
/// reported with the violated condition named.
pub fn pair_invariants(a: &GroupElement, b: &GroupElement, tol: f64) -> Result<PairInvariants> {
    let da = crate::isometry::decompose_loxodromic(a)?;
    let db = crate::isometry::decompose_loxodromic(b)?;
    pair_invariants_decomposed(&da, &db, tol)
}

/// Same as [`pair_invariants`] with the decompositions already at hand.
pub fn pair_invariants_decomposed(
    da: &LoxodromicDecomposition,
    db: &LoxodromicDecomposition,
    tol: f64,
) -> Result<PairInvariants> {
    let report = crate::nonsingular::is_nonsingular_decomposed(da, db, tol);
    if !report.overall {
        return Err(Error::NotNonSingular {
            failed: report.failed_conditions(),
        });
    }
    let ab = alpha_beta_invariants(da, db, tol)?;
    let ta = trace_invariants(&da.element());
    let tb = trace_invariants(&db.element());
    Ok(PairInvariants {
        tau_a: ta.tau,
        tau_b: tb.tau,
        sigma_a: ta.sigma,
        sigma_b: tb.sigma,
        cross_ratios: pair_cross_ratios(da, db)?,
        alpha: ab.chosen_alpha,
        beta: ab.chosen_beta,
    })
}

impl PairInvariants {
    /// Largest relative mismatch against another record, over every
    /// coordinate.
    pub fn max_relative_mismatch(&self, other: &PairInvariants) -> f64 {
        let rel = |x: Cx, y: Cx| (x - y).norm() / (1.0 + x.norm().max(y.norm()));
        let rel_f = |x: f64, y: f64| (x - y).abs() / (1.0 + x.abs().max(y.abs()));
        [
            rel(self.tau_a, other.tau_a),
            rel(self.tau_b, other.tau_b),
            rel_f(self.sigma_a, other.sigma_a),
            rel_f(self.sigma_b, other.sigma_b),
            rel(self.cross_ratios.x1, other.cross_ratios.x1),
            rel(self.cross_ratios.x2, other.cross_ratios.x2),
            rel(self.cross_ratios.x3, other.cross_ratios.x3),
            rel(self.alpha.1, other.alpha.1),
            rel(self.beta.1, other.beta.1),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Residuals of the four identities tying eta/nu, alpha/beta and the pair
/// cross-ratios together:
///
/// ```text
/// eta1 conj(a1) + eta2 conj(a2) = -(X2 + conj(X3) conj(X1))
/// nu1 conj(b1)  + nu2 conj(b2)  = -(conj(X2) + X3 conj(X1))
/// eta1/a1 + eta2/a2             = -(conj(X1) + X2/X3)
/// nu1/b1  + nu2/b2              = -(conj(X1) + conj(X2)/conj(X3))
/// ```
pub fn identity_relations(
    a: &LoxodromicDecomposition,
    b: &LoxodromicDecomposition,
    tol: f64,
) -> Result<[f64; 4]> {
    let etas = eta_invariants(a, b, tol)?;
    let ab = alpha_beta_invariants(a, b, tol)?;
    let x = pair_cross_ratios(a, b)?;
    let (a1, a2) = match (ab.alpha[0], ab.alpha[1]) {
        (Some(a1), Some(a2)) => (a1, a2),
        _ => return Err(Error::UndefinedInvariant),
    };
    let (b1, b2) = match (ab.beta[0], ab.beta[1]) {
        (Some(b1), Some(b2)) => (b1, b2),
        _ => return Err(Error::UndefinedInvariant),
    };
    let small = 1e-12;
    if a1.norm() < small
        || a2.norm() < small
        || b1.norm() < small
        || b2.norm() < small
        || x.x3.norm() < small
    {
        return Err(Error::UndefinedInvariant);
    }
    let r1 =
        (etas.eta1 * a1.conj() + etas.eta2 * a2.conj() + x.x2 + x.x3.conj() * x.x1.conj()).norm();
    let r2 =
        (etas.nu1 * b1.conj() + etas.nu2 * b2.conj() + x.x2.conj() + x.x3 * x.x1.conj()).norm();
    let r3 = (etas.eta1 / a1 + etas.eta2 / a2 + x.x1.conj() + x.x2 / x.x3).norm();
    let r4 = (etas.nu1 / b1 + etas.nu2 / b2 + x.x1.conj() + x.x2.conj() / x.x3.conj()).norm();
    Ok([r1, r2, r3, r4])
}
