//! Jacobian syzygies, minimal degree of Jacobian relations, a Hilbert-function oracle for
//! the total Tjurina number, and the freeness certificate built on the du Plessis–Wall
//! equality.
//!
//! Everything reduces to exact ranks of the multiplication maps
//! `(a_1, …, a_n) ↦ Σ a_i ∂_i f` from `(S_s)^n` into `S_{s+m-1}`.

use serde::Serialize;

use crate::combinatorics::{profile_from_points, tau_combinatorial};
use crate::error::{AlgebraError, GeometryError};
use crate::exactnum::{FieldElement, Rational};
use crate::geometry::{singular_points, Arrangement};
use crate::linalg::{rational_rank, sparse_rank, Scalar, SparseVec};
use crate::poly::{monomial_count, monomial_index, monomials, HomogPoly, Monomial};

/// Product of the line and conic equations.
pub fn defining_polynomial(arr: &Arrangement) -> HomogPoly {
    let field = arr.field();
    let mut f = HomogPoly::from_terms(field, 3, 0, [(Monomial([0; 4]), field.one())]);
    for l in arr.lines() {
        f = f.mul(&HomogPoly::linear_form(l.coeffs()));
    }
    for q in arr.conics() {
        f = f.mul(&HomogPoly::quadratic_form(&q.coefficients()));
    }
    f
}

fn image_vectors<T: Scalar>(
    partials: &[Vec<(Monomial, T)>],
    nvars: usize,
    src_degree: u32,
    tgt_degree: u32,
) -> Vec<SparseVec<T>> {
    let index = monomial_index(nvars, tgt_degree);
    let sources = monomials(nvars, src_degree);
    let mut out = Vec::with_capacity(sources.len() * partials.len());
    for partial in partials {
        for mu in &sources {
            let mut v: SparseVec<T> = partial
                .iter()
                .map(|(m, c)| (index[&mu.mul(m)], c.clone()))
                .collect();
            v.sort_by_key(|(i, _)| *i);
            out.push(v);
        }
    }
    out
}

/// Rank of `(a_i) ↦ Σ a_i ∂_i f` on forms of degree `src_degree`.
pub fn jacobian_image_rank(f: &HomogPoly, src_degree: i64) -> usize {
    if src_degree < 0 || f.degree() == 0 {
        return 0;
    }
    let src = src_degree as u32;
    let tgt = src + f.degree() - 1;
    let n = f.nvars();
    let partials: Vec<HomogPoly> = (0..n).map(|i| f.derivative(i)).collect();
    if partials.iter().all(HomogPoly::has_rational_coefficients) {
        // rank over K of a matrix with entries in Q equals its rank over Q
        let rat: Vec<Vec<(Monomial, Rational)>> = partials
            .iter()
            .map(|p| p.rational_terms().expect("checked rational"))
            .collect();
        let terms: usize = rat.iter().map(Vec::len).sum();
        let dense = 2 * terms > n * monomial_count(n, f.degree() as i64 - 1) as usize;
        rational_rank(image_vectors(&rat, n, src, tgt), dense)
    } else {
        let gen: Vec<Vec<(Monomial, FieldElement)>> = partials
            .iter()
            .map(|p| p.terms().map(|(m, c)| (*m, c.clone())).collect())
            .collect();
        sparse_rank(image_vectors(&gen, n, src, tgt))
    }
}

/// dim AR(f)_r, the space of degree-r syzygies among the partial derivatives.
pub fn syzygy_dimension(f: &HomogPoly, r: i64) -> Result<u64, AlgebraError> {
    if r < 0 {
        return Err(AlgebraError::NegativeDegree(r));
    }
    if f.degree() < 2 {
        return Err(AlgebraError::DegreeTooSmall(f.degree()));
    }
    let n = f.nvars();
    let domain = n as u64 * monomial_count(n, r);
    Ok(domain - jacobian_image_rank(f, r) as u64)
}

/// Minimal degree of a Jacobian relation, searched up to the Koszul degree m − 1.
pub fn mdr(f: &HomogPoly) -> Result<u32, AlgebraError> {
    let m = f.degree();
    if m < 2 {
        return Err(AlgebraError::DegreeTooSmall(m));
    }
    for r in 0..m {
        if syzygy_dimension(f, r as i64)? > 0 {
            return Ok(r);
        }
    }
    Err(AlgebraError::SearchCapExceeded(m - 1))
}

/// dim (S/J_f)_t for a form in three variables.
pub fn jacobian_algebra_dimension(f: &HomogPoly, t: u32) -> u64 {
    let m = f.degree() as i64;
    monomial_count(3, t as i64) - jacobian_image_rank(f, t as i64 - m + 1) as u64
}

/// Degree at which the oracle starts, 3(m − 2).
pub fn oracle_start_degree(m: u32) -> u32 {
    3 * m.saturating_sub(2)
}

/// Total Tjurina number as the stable value of the Hilbert function of S/J_f.
///
/// Starts at `t = 3(m-2)` and returns once two consecutive degrees agree. Fails with
/// [`AlgebraError::NonIsolated`] when no agreement is seen up to `cap` (default `4m`).
pub fn tau_hilbert_oracle_with_cap(f: &HomogPoly, cap: Option<u32>) -> Result<u64, AlgebraError> {
    if f.nvars() != 3 {
        return Err(AlgebraError::Variables {
            expected: 3,
            found: f.nvars(),
        });
    }
    let m = f.degree();
    if m < 2 {
        return Err(AlgebraError::DegreeTooSmall(m));
    }
    let cap = cap.unwrap_or(4 * m);
    let mut t = oracle_start_degree(m);
    let mut history = Vec::new();
    let (mut prev, mut cur) = rayon::join(
        || jacobian_algebra_dimension(f, t),
        || jacobian_algebra_dimension(f, t + 1),
    );
    history.push(prev);
    loop {
        history.push(cur);
        if prev == cur {
            return Ok(cur);
        }
        t += 1;
        if t + 1 > cap {
            let keep = history.len().saturating_sub(4);
            return Err(AlgebraError::NonIsolated {
                cap,
                last: history[keep..].to_vec(),
            });
        }
        prev = cur;
        cur = jacobian_algebra_dimension(f, t + 1);
    }
}

pub fn tau_hilbert_oracle(f: &HomogPoly) -> Result<u64, AlgebraError> {
    tau_hilbert_oracle_with_cap(f, None)
}

/// τ_max(m, d₁) from the du Plessis–Wall theorem; see [`crate::bounds::tau_max_dpw`].
fn tau_max(m: u32, d1: u32) -> i64 {
    crate::bounds::tau_max_dpw(m as i64, d1 as i64).expect("d1 <= m - 1 by construction")
}

/// Result of the freeness test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessReport {
    pub degree: u32,
    pub mdr: u32,
    pub tau_oracle: u64,
    pub tau_max_at_mdr: i64,
    pub is_free: bool,
    pub exponents: Option<(u32, u32)>,
    /// Human-readable witness of the verdict.
    pub witness: String,
}

/// Decides freeness from mdr and the oracle τ alone.
///
/// A free curve has exponents d₁ ≤ d₂ with d₁ + d₂ = m − 1, so mdr ≥ m/2 rules freeness
/// out; otherwise the curve is free iff τ attains τ_max(m, d₁).
pub fn freeness_certificate(f: &HomogPoly) -> Result<FreenessReport, AlgebraError> {
    freeness_certificate_with_cap(f, None)
}

pub fn freeness_certificate_with_cap(
    f: &HomogPoly,
    cap: Option<u32>,
) -> Result<FreenessReport, AlgebraError> {
    let m = f.degree();
    let (d1, tau) = rayon::join(|| mdr(f), || tau_hilbert_oracle_with_cap(f, cap));
    let (d1, tau) = (d1?, tau?);
    Ok(certificate_from(m, d1, tau))
}

/// Freeness verdict from precomputed mdr and τ.
pub fn certificate_from(m: u32, d1: u32, tau: u64) -> FreenessReport {
    let tmax = tau_max(m, d1);
    let (is_free, witness) = if 2 * d1 >= m {
        (
            false,
            format!("mdr {d1} >= m/2 = {m}/2, exceeding the exponent ceiling (m-1)/2"),
        )
    } else if tau as i64 == tmax {
        (
            true,
            format!(
                "tau = {tau} = (m-1)(m-d1-1) + d1^2 = {}*{} + {}",
                m - 1,
                m - d1 - 1,
                d1 * d1
            ),
        )
    } else {
        (false, format!("tau = {tau} < tau_max({m}, {d1}) = {tmax}"))
    };
    FreenessReport {
        degree: m,
        mdr: d1,
        tau_oracle: tau,
        tau_max_at_mdr: tmax,
        is_free,
        exponents: is_free.then(|| (d1, m - 1 - d1)),
        witness,
    }
}

/// Comparison of the oracle τ with the ordinary quasi-homogeneous formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QhVerdict {
    pub tau_oracle: u64,
    pub tau_combinatorial: i64,
    pub passed: bool,
}

pub fn qh_consistency(arr: &Arrangement) -> Result<QhVerdict, AlgebraError> {
    let f = defining_polynomial(arr);
    let points = singular_points(arr).map_err(|e: GeometryError| AlgebraError::Geometry(e))?;
    let profile = profile_from_points(arr.d() as u64, arr.k() as u64, &points);
    let oracle = tau_hilbert_oracle(&f)?;
    Ok(qh_verdict(oracle, tau_combinatorial(&profile)))
}

pub fn qh_verdict(tau_oracle: u64, tau_combinatorial: i64) -> QhVerdict {
    QhVerdict {
        tau_oracle,
        tau_combinatorial,
        passed: tau_oracle as i64 == tau_combinatorial,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::NumberField;

    fn cl5_poly() -> HomogPoly {
        let k = NumberField::rationals();
        HomogPoly::from_int_terms(
            &k,
            3,
            &[([2, 2, 1, 0], 1), ([1, 2, 2, 0], 1), ([2, 1, 2, 0], 1)],
        )
    }

    fn generic4() -> HomogPoly {
        let k = NumberField::rationals();
        // xyz(x + y + z)
        HomogPoly::from_int_terms(
            &k,
            3,
            &[([2, 1, 1, 0], 1), ([1, 2, 1, 0], 1), ([1, 1, 2, 0], 1)],
        )
    }

    fn nodal_cubic() -> HomogPoly {
        let k = NumberField::rationals();
        // z y² − x³ − x² z
        HomogPoly::from_int_terms(
            &k,
            3,
            &[([0, 2, 1, 0], 1), ([3, 0, 0, 0], -1), ([2, 0, 1, 0], -1)],
        )
    }

    #[test]
    fn cl5_syzygies() {
        let f = cl5_poly();
        assert_eq!(syzygy_dimension(&f, 0).unwrap(), 0);
        assert_eq!(syzygy_dimension(&f, 1).unwrap(), 0);
        assert!(syzygy_dimension(&f, 2).unwrap() >= 1);
        assert!(syzygy_dimension(&f, 4).unwrap() >= 3);
        assert_eq!(mdr(&f).unwrap(), 2);
        assert!(syzygy_dimension(&f, -1).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(tau_hilbert_oracle(&cl5_poly()).unwrap(), 12);
        assert_eq!(tau_hilbert_oracle(&nodal_cubic()).unwrap(), 1);
        assert_eq!(tau_hilbert_oracle(&generic4()).unwrap(), 6);
    }

    #[test]
    fn oracle_rejects_non_reduced() {
        let k = NumberField::rationals();
        // x² y z: double line
        let f = HomogPoly::from_int_terms(&k, 3, &[([2, 1, 1, 0], 1)]);
        assert!(matches!(
            tau_hilbert_oracle(&f),
            Err(AlgebraError::NonIsolated { .. })
        ));
    }

    #[test]
    fn certificates() {
        let r = freeness_certificate(&cl5_poly()).unwrap();
        assert!(r.is_free);
        assert_eq!(r.exponents, Some((2, 2)));
        let g = freeness_certificate(&generic4()).unwrap();
        assert_eq!(g.mdr, 2);
        assert_eq!(g.tau_oracle, 6);
        assert!(!g.is_free);
        assert_eq!(g.tau_max_at_mdr, 6);
    }

    #[test]
    fn smooth_conic_has_no_singularities() {
        let k = NumberField::rationals();
        let f = HomogPoly::from_int_terms(
            &k,
            3,
            &[([2, 0, 0, 0], 1), ([0, 2, 0, 0], 1), ([0, 0, 2, 0], -1)],
        );
        assert_eq!(tau_hilbert_oracle(&f).unwrap(), 0);
    }
}
