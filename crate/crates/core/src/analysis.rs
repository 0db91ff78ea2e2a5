//! The full pipeline on one arrangement: geometry, profile, oracle, freeness, bounds.

use serde::Serialize;

use crate::bounds::{bounds_report, discriminant, BoundsContext, BoundsReport, Discriminant};
use crate::combinatorics::{
    naive_count_residual, profile_from_points, tau_combinatorial, MultiplicityProfile,
};
use crate::error::AlgebraError;
use crate::geometry::{singular_locus, verify_ordinary_locus, Arrangement};
use crate::jacobian::{
    certificate_from, defining_polynomial, mdr, tau_hilbert_oracle_with_cap, FreenessReport,
};

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    /// Profile and bounds only.
    pub skip_oracle: bool,
    /// Overrides the Hilbert-function stabilisation cap.
    pub degree_cap: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointSummary {
    pub point: String,
    pub multiplicity: usize,
    pub members: Vec<usize>,
    pub ordinary: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub field: String,
    pub field_note: Option<String>,
    pub degree: u64,
    pub profile: MultiplicityProfile,
    pub naive_count_residual: i64,
    pub max_multiplicity: Option<u32>,
    pub tau_combinatorial: i64,
    pub singular_points: Vec<PointSummary>,
    /// Pairs of members meeting non-transversally.
    pub tangencies: Vec<(usize, usize)>,
    pub all_ordinary: bool,
    pub tau_oracle: Option<u64>,
    pub qh_consistent: Option<bool>,
    pub freeness: Option<FreenessReport>,
    pub discriminant: Option<Discriminant>,
    pub bounds: BoundsReport,
}

impl AnalysisReport {
    /// Every applicable check passed and the profile is a consistent weak type.
    pub fn passed(&self) -> bool {
        self.naive_count_residual == 0
            && self.qh_consistent != Some(false)
            && self.bounds.all_passed()
    }
}

/// Context for the bounds checks from known freeness data.
///
/// For a free curve d₁ solves the exponent quadratic, so when exponents are not supplied
/// they are read off its rational roots.
pub fn context_for(
    profile: &MultiplicityProfile,
    free: bool,
    exponents: Option<(u32, u32)>,
    mdr: Option<u32>,
    tau: Option<i64>,
) -> BoundsContext {
    let exponents = exponents.or_else(|| {
        if !free {
            return None;
        }
        let (a, b) = discriminant(profile).ok()?.roots?;
        let (a, b) = (a.to_i64()?, b.to_i64()?);
        (a >= 0 && b >= 0).then_some((a as u32, b as u32))
    });
    BoundsContext {
        free,
        exponents,
        mdr,
        tau,
    }
}

pub fn analyze(arr: &Arrangement, opts: &AnalyzeOptions) -> Result<AnalysisReport, AlgebraError> {
    let locus = singular_locus(arr)?;
    let verdicts = verify_ordinary_locus(arr, &locus)?;
    let profile = profile_from_points(arr.d() as u64, arr.k() as u64, &locus.points);
    let singular_points: Vec<PointSummary> = locus
        .points
        .iter()
        .zip(&verdicts)
        .map(|(sp, v)| PointSummary {
            point: sp.point.to_string(),
            multiplicity: sp.multiplicity,
            members: sp.incident_members.clone(),
            ordinary: v.ordinary,
        })
        .collect();
    let all_ordinary = verdicts.iter().all(|v| v.ordinary);
    let tau_comb = tau_combinatorial(&profile);

    let freeness = if opts.skip_oracle {
        None
    } else {
        let f = defining_polynomial(arr);
        let (d1, tau) = rayon::join(
            || mdr(&f),
            || tau_hilbert_oracle_with_cap(&f, opts.degree_cap),
        );
        Some(certificate_from(f.degree(), d1?, tau?))
    };
    let tau_oracle = freeness.as_ref().map(|c| c.tau_oracle);
    let ctx = context_for(
        &profile,
        freeness.as_ref().is_some_and(|c| c.is_free),
        freeness.as_ref().and_then(|c| c.exponents),
        freeness.as_ref().map(|c| c.mdr),
        tau_oracle.map(|t| t as i64),
    );
    let field = arr.field();
    let field_note =
        (!field.irreducibility_checked()).then(|| "field irreducibility assumed".to_string());
    Ok(AnalysisReport {
        field: format!("{field:?}"),
        field_note,
        degree: arr.degree() as u64,
        naive_count_residual: naive_count_residual(&profile),
        max_multiplicity: profile.max_multiplicity(),
        tau_combinatorial: tau_comb,
        singular_points,
        tangencies: locus
            .tangencies
            .iter()
            .map(|t| (t.first, t.second))
            .collect(),
        all_ordinary,
        tau_oracle,
        qh_consistent: tau_oracle.map(|t| t as i64 == tau_comb),
        discriminant: discriminant(&profile).ok(),
        bounds: bounds_report(&profile, &ctx),
        freeness,
        profile,
    })
}
