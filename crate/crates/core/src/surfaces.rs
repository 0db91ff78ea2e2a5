//! Suspensions X = {f + w^q = 0} ⊂ P³ of plane curves of degree q.
//!
//! τ(X) comes from the Thom–Sebastiani product τ(f)·τ(w^q) = (q−1)·τ(f), with the local
//! factor τ(w^q) = q − 1 fixed.

use serde::Serialize;

use crate::bounds::main_lower_bound;
use crate::error::{AlgebraError, BoundsError};
use crate::exactnum::{FieldElement, Rational};
use crate::geometry::{singular_points, Arrangement, ProjPoint};
use crate::jacobian::{certificate_from, defining_polynomial, mdr, tau_hilbert_oracle};
use crate::poly::HomogPoly;

/// A plane curve f of degree q and its suspension F = f + w^q.
#[derive(Clone, Debug)]
pub struct Suspension {
    pub planar: HomogPoly,
    pub surface: HomogPoly,
    pub q: u32,
}

/// F = f + w^q, where q = 2k + d must be the degree of f.
pub fn suspend(f: &HomogPoly, d: u32, k: u32) -> Result<Suspension, AlgebraError> {
    if f.nvars() != 3 {
        return Err(AlgebraError::Variables {
            expected: 3,
            found: f.nvars(),
        });
    }
    let q = 2 * k + d;
    if f.degree() != q {
        return Err(AlgebraError::DegreeMismatch {
            declared: q,
            actual: f.degree(),
        });
    }
    let w = HomogPoly::power_of_variable(f.field(), 4, 3, q);
    Ok(Suspension {
        planar: f.clone(),
        surface: f.with_four_variables().add(&w),
        q,
    })
}

#[derive(Clone, Debug)]
pub struct IsolatedVerdict {
    pub isolated: bool,
    /// Singular points of X, all of the form (p : 0); `None` when f is singular but no
    /// arrangement was supplied to locate its points.
    pub points: Option<Vec<ProjPoint>>,
    /// Every listed point annihilates all four partials of F.
    pub verified: bool,
}

fn lift(p: &ProjPoint) -> [FieldElement; 4] {
    let [x, y, z] = p.coords().clone();
    let zero = x.field().zero();
    [x, y, z, zero]
}

/// ∂_w F = q·w^{q−1} vanishes only on w = 0, where the remaining partials are those of f;
/// so Sing(X) = {(p : 0) : p ∈ Sing(C)}.
pub fn verify_isolated(
    s: &Suspension,
    arr: Option<&Arrangement>,
) -> Result<IsolatedVerdict, AlgebraError> {
    let points = match arr {
        Some(a) => Some(
            singular_points(a)?
                .into_iter()
                .map(|sp| sp.point)
                .collect::<Vec<_>>(),
        ),
        None => match tau_hilbert_oracle(&s.planar) {
            Ok(0) => Some(Vec::new()),
            Ok(_) => None,
            Err(AlgebraError::NonIsolated { .. }) => {
                return Ok(IsolatedVerdict {
                    isolated: false,
                    points: None,
                    verified: false,
                })
            }
            Err(e) => return Err(e),
        },
    };
    let partials: Vec<HomogPoly> = (0..4).map(|i| s.surface.derivative(i)).collect();
    let verified = points.as_ref().is_some_and(|pts| {
        pts.iter().all(|p| {
            let v = lift(p);
            partials.iter().all(|d| d.eval(&v).is_zero())
        })
    });
    Ok(IsolatedVerdict {
        isolated: true,
        points,
        verified,
    })
}

/// τ(X) = (q − 1)·τ(f).
pub fn tau_surface_ts(planar_tau: i64, q: i64) -> i64 {
    (q - 1) * planar_tau
}

/// (2k + d − 1)·main_lower_bound(d, k).
pub fn surface_lower_bound_via_main(d: i64, k: i64) -> Rational {
    Rational::from(2 * k + d - 1) * main_lower_bound(d, k)
}

/// ((q−1)³ − d₁′(q−1)², (q−1)³ − d₁′(q−d₁′−1)(q−1)).
pub fn surface_dpw_window(q: i64, d1_prime: i64) -> Result<(i64, i64), BoundsError> {
    if q < 2 {
        return Err(BoundsError::DegreeTooSmall(q));
    }
    if d1_prime < 0 || d1_prime > q - 1 {
        return Err(BoundsError::MdrOutOfRange {
            m: q,
            d1: d1_prime,
            max: q - 1,
        });
    }
    let c = (q - 1).pow(3);
    Ok((
        c - d1_prime * (q - 1).pow(2),
        c - d1_prime * (q - d1_prime - 1) * (q - 1),
    ))
}

/// Minimal degree of a relation among the four partials of F.
pub fn mdr_surface(f: &HomogPoly) -> Result<u32, AlgebraError> {
    if f.nvars() != 4 {
        return Err(AlgebraError::Variables {
            expected: 4,
            found: f.nvars(),
        });
    }
    mdr(f)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub degree: u32,
    pub surface: String,
    pub singular_points: Vec<String>,
    pub points_verified: bool,
    pub planar_tau: u64,
    pub planar_free: bool,
    pub tau_surface: i64,
    pub lower_bound_via_main: Rational,
    /// τ(X) ≥ the bound; the bound is only claimed for free curves.
    pub meets_lower_bound: bool,
    pub mdr_surface: Option<u32>,
    pub dpw_window: Option<(i64, i64)>,
    pub window_contains_tau: Option<bool>,
}

impl SurfaceReport {
    pub fn passed(&self) -> bool {
        self.points_verified
            && (!self.planar_free || self.meets_lower_bound)
            && self.window_contains_tau != Some(false)
    }
}

/// The suspension pipeline on an arrangement; `with_mdr` adds the 4-variable rank search.
pub fn surface_report(arr: &Arrangement, with_mdr: bool) -> Result<SurfaceReport, AlgebraError> {
    let f = defining_polynomial(arr);
    let s = suspend(&f, arr.d() as u32, arr.k() as u32)?;
    let verdict = verify_isolated(&s, Some(arr))?;
    let (planar_tau, planar_mdr) = rayon::join(|| tau_hilbert_oracle(&f), || mdr(&f));
    let (planar_tau, planar_mdr) = (planar_tau?, planar_mdr?);
    let cert = certificate_from(s.q, planar_mdr, planar_tau);
    let q = s.q as i64;
    let tau_surface = tau_surface_ts(planar_tau as i64, q);
    let lower = surface_lower_bound_via_main(arr.d() as i64, arr.k() as i64);
    let mdr_surface = if with_mdr {
        Some(mdr_surface(&s.surface)?)
    } else {
        None
    };
    let dpw_window = mdr_surface.map(|d| surface_dpw_window(q, d as i64).expect("mdr <= q - 1"));
    Ok(SurfaceReport {
        degree: s.q,
        surface: s.surface.to_string(),
        singular_points: verdict
            .points
            .unwrap_or_default()
            .iter()
            .map(|p| {
                let [x, y, z] = p.coords();
                format!("({x} : {y} : {z} : 0)")
            })
            .collect(),
        points_verified: verdict.verified,
        planar_tau,
        planar_free: cert.is_free,
        tau_surface,
        meets_lower_bound: Rational::from(tau_surface) >= lower,
        lower_bound_via_main: lower,
        mdr_surface,
        window_contains_tau: dpw_window.map(|(lo, hi)| lo <= tau_surface && tau_surface <= hi),
        dpw_window,
    })
}
