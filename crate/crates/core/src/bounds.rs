//! Inequalities and bound formulas evaluated exactly on multiplicity profiles.
//!
//! Every check produces a [`CheckRecord`] carrying both sides as exact rationals. Checks
//! whose hypotheses do not hold for the input are marked not applicable, never silently
//! dropped.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::combinatorics::{naive_count_residual, tau_combinatorial, MultiplicityProfile};
use crate::error::BoundsError;
use crate::exactnum::{rational_sqrt, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
        })
    }
}

/// One evaluated inequality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub check_id: &'static str,
    pub applicable: bool,
    pub relation: Relation,
    pub lhs: Rational,
    pub rhs: Rational,
    pub passed: bool,
    /// Oriented so that `slack >= 0` iff the inequality holds.
    pub slack: Rational,
    /// floor(rhs) for `<=` and ceil(rhs) for `>=`, when rhs is not an integer.
    pub rhs_rounded: Option<String>,
    pub note: String,
}

impl CheckRecord {
    fn evaluate(id: &'static str, lhs: Rational, relation: Relation, rhs: Rational) -> Self {
        let slack = match relation {
            Relation::Le => &rhs - &lhs,
            Relation::Ge => &lhs - &rhs,
        };
        let rhs_rounded = (!rhs.is_integer()).then(|| match relation {
            Relation::Le => rhs.floor().to_string(),
            Relation::Ge => rhs.ceil().to_string(),
        });
        CheckRecord {
            check_id: id,
            applicable: true,
            relation,
            passed: !slack.is_negative(),
            lhs,
            rhs,
            slack,
            rhs_rounded,
            note: String::new(),
        }
    }

    fn gated(mut self, gate: Result<(), String>) -> Self {
        if let Err(reason) = gate {
            self.applicable = false;
            self.note = reason;
        }
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        let note = note.into();
        if self.note.is_empty() {
            self.note = note;
        } else if !note.is_empty() {
            self.note = format!("{}; {note}", self.note);
        }
        self
    }

    /// An applicable check that does not hold.
    pub fn is_violation(&self) -> bool {
        self.applicable && !self.passed
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match (self.applicable, self.passed) {
            (false, _) => "n/a ",
            (true, true) => "PASS",
            (true, false) => "FAIL",
        };
        write!(
            f,
            "[{verdict}] {:<12} {} {} {}",
            self.check_id, self.lhs, self.relation, self.rhs
        )?;
        if !self.rhs.is_integer() {
            write!(f, " (~{:.4}", self.rhs.to_f64())?;
            if let Some(r) = &self.rhs_rounded {
                write!(f, ", rounded {r}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "  slack {}", self.slack)?;
        if !self.note.is_empty() {
            write!(f, "  [{}]", self.note)?;
        }
        Ok(())
    }
}

/// All records of one analysis, in the fixed order of [`CHECK_IDS`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BoundsReport {
    pub records: Vec<CheckRecord>,
}

pub const CHECK_IDS: [&str; 11] = [
    "hir",
    "rich_points",
    "cor_bbb",
    "jl",
    "m4_lower",
    "main_lower",
    "disc",
    "n5",
    "nn",
    "exp_prod",
    "dpw_max",
];

impl BoundsReport {
    pub fn get(&self, id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.check_id == id)
    }

    /// True when no applicable check fails.
    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| !r.is_violation())
    }
}

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// du Plessis–Wall upper bound τ_max(m, d₁) on the total Tjurina number.
///
/// For d₁ ≥ m/2 the correction term is C(2d₁ − m + 2, 2).
pub fn tau_max_dpw(m: i64, d1: i64) -> Result<i64, BoundsError> {
    if m < 1 {
        return Err(BoundsError::DegreeTooSmall(m));
    }
    if d1 < 0 || d1 > m - 1 {
        return Err(BoundsError::MdrOutOfRange { m, d1, max: m - 1 });
    }
    let base = (m - 1) * (m - d1 - 1) + d1 * d1;
    if 2 * d1 < m {
        Ok(base)
    } else {
        Ok(base - binom2(2 * d1 - m + 2))
    }
}

fn line_gate(p: &MultiplicityProfile) -> Result<(), String> {
    if p.k != 0 {
        return Err("requires a line arrangement (k = 0)".into());
    }
    if p.d < 6 {
        return Err("requires d >= 6".into());
    }
    if let Some((r, _)) = p.counts.iter().find(|(&r, _)| 3 * r as u64 > 2 * p.d) {
        return Err(format!("n_{r} > 0 with {r} > 2d/3"));
    }
    Ok(())
}

/// n₂ + (3/4)n₃ ≥ d + Σ_{r≥5} r(r−4)/2 · n_r.
pub fn hirzebruch_check(p: &MultiplicityProfile) -> CheckRecord {
    let lhs = q(p.n(2) as i64) + frac(3 * p.n(3) as i64, 4);
    let tail: Rational = p
        .counts
        .iter()
        .filter(|(&r, _)| r >= 5)
        .map(|(&r, &n)| frac(r as i64 * (r as i64 - 4) * n as i64, 2))
        .sum();
    let rhs = q(p.d as i64) + tail;
    CheckRecord::evaluate("hir", lhs, Relation::Ge, rhs).gated(line_gate(p))
}

/// n₂ + n₃ + n₄ ≥ d(d+15)/18.
pub fn rich_point_lower_bound(p: &MultiplicityProfile) -> CheckRecord {
    let d = p.d as i64;
    let lhs = q((p.n(2) + p.n(3) + p.n(4)) as i64);
    CheckRecord::evaluate("rich_points", lhs, Relation::Ge, frac(d * (d + 15), 18))
        .gated(line_gate(p))
}

fn m4_gate(p: &MultiplicityProfile, min_d: u64) -> Result<(), String> {
    if p.k != 0 {
        return Err("requires a line arrangement (k = 0)".into());
    }
    if p.d < min_d {
        return Err(format!("requires d >= {min_d}"));
    }
    if p.max_multiplicity() != Some(4) {
        return Err("requires maximal multiplicity 4".into());
    }
    Ok(())
}

/// n₃ + 3n₄ ≤ 4d(d−3)/15 for line arrangements with m(C) = 4.
pub fn quadruple_upper_bound(p: &MultiplicityProfile) -> CheckRecord {
    let d = p.d as i64;
    let lhs = q((p.n(3) + 3 * p.n(4)) as i64);
    CheckRecord::evaluate("cor_bbb", lhs, Relation::Le, frac(4 * d * (d - 3), 15))
        .gated(m4_gate(p, 6))
}

fn free_gate(free: bool) -> Result<(), String> {
    if free {
        Ok(())
    } else {
        Err("requires freeness".into())
    }
}

/// For free line arrangements with m(C) = 4: the cited inequality n₂ + n₃ ≤ 3(d−1)/2
/// (record "jl") and the lower bound (d−1)(d−3)/4 ≤ n₃ + 3n₄ (record "m4_lower").
pub fn free_m4_lower_bound(p: &MultiplicityProfile, assume_free: bool) -> [CheckRecord; 2] {
    let d = p.d as i64;
    let gate = m4_gate(p, 3).and(free_gate(assume_free));
    let jl = CheckRecord::evaluate(
        "jl",
        q((p.n(2) + p.n(3)) as i64),
        Relation::Le,
        frac(3 * (d - 1), 2),
    )
    .gated(gate.clone())
    .with_note("cited inequality, used as a predicate");
    let lower = CheckRecord::evaluate(
        "m4_lower",
        frac((d - 1) * (d - 3), 4),
        Relation::Le,
        q((p.n(3) + 3 * p.n(4)) as i64),
    )
    .gated(gate);
    [jl, lower]
}

/// 3k(k−1) + 3kd + 3(d−1)²/4.
pub fn main_lower_bound(d: i64, k: i64) -> Rational {
    q(3 * k * (k - 1) + 3 * k * d) + frac(3 * (d - 1) * (d - 1), 4)
}

/// τ ≥ main_lower_bound(d, k) for a free arrangement.
pub fn main_lower_check(p: &MultiplicityProfile, tau: i64, free: bool) -> CheckRecord {
    CheckRecord::evaluate(
        "main_lower",
        q(tau),
        Relation::Ge,
        main_lower_bound(p.d as i64, p.k as i64),
    )
    .gated(free_gate(free))
}

/// Discriminant of d₁² − (m−1)d₁ + (Σ(r−1)n_r − d + 1) = 0 and its roots when rational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discriminant {
    pub delta: i64,
    /// ((m−1) − √Δ)/2 and ((m−1) + √Δ)/2 when Δ is a perfect square.
    pub roots: Option<(Rational, Rational)>,
}

pub fn discriminant(p: &MultiplicityProfile) -> Result<Discriminant, BoundsError> {
    let residual = naive_count_residual(p);
    if residual != 0 {
        return Err(BoundsError::NaiveCountViolated(residual));
    }
    let (d, k) = (p.d as i64, p.k as i64);
    let m1 = 2 * k + d - 1;
    let weighted: i64 = p
        .counts
        .iter()
        .map(|(&r, &n)| (r as i64 - 1) * n as i64)
        .sum();
    let delta = m1 * m1 - 4 * (1 - d) - 4 * weighted;
    let roots = rational_sqrt(&q(delta)).map(|s| {
        let half = frac(1, 2);
        ((q(m1) - &s) * &half, (q(m1) + &s) * &half)
    });
    Ok(Discriminant { delta, roots })
}

/// Δ ≥ 0, necessary for freeness.
pub fn discriminant_check(p: &MultiplicityProfile) -> Result<CheckRecord, BoundsError> {
    let disc = discriminant(p)?;
    let note = match &disc.roots {
        Some((a, b)) if a == b => format!("perfect square; double root d1 = {a}"),
        Some((a, b)) => format!("perfect square; roots d1 in {{{a}, {b}}}"),
        None if disc.delta >= 0 => "not a perfect square".to_string(),
        None => String::new(),
    };
    Ok(CheckRecord::evaluate("disc", q(disc.delta), Relation::Ge, q(0)).with_note(note))
}

/// The two intermediate inequalities implied by Δ ≥ 0 and the naive count.
pub fn derivation_chain_check(p: &MultiplicityProfile) -> [CheckRecord; 2] {
    let (d, k) = (p.d as i64, p.k as i64);
    let tail5: i64 = p
        .counts
        .iter()
        .filter(|(&r, _)| r >= 5)
        .map(|(&r, &n)| {
            let r = r as i64;
            (r * r - 5 * r + 4) * n as i64
        })
        .sum();
    let n5 = CheckRecord::evaluate(
        "n5",
        frac(3 * (d - 1), 2) + frac(tail5, 2),
        Relation::Ge,
        q((p.n(2) + p.n(3)) as i64),
    );
    let tail4: i64 = p
        .counts
        .iter()
        .filter(|(&r, _)| r >= 4)
        .map(|(&r, &n)| {
            let r = r as i64;
            (r * r - 3 * r + 2) * n as i64
        })
        .sum();
    let nn = CheckRecord::evaluate(
        "nn",
        frac(4 * k * (k - 1) + 4 * k * d + d * d - 4 * d + 3, 4),
        Relation::Le,
        q(p.n(3) as i64) + frac(tail4, 2),
    );
    [n5, nn]
}

/// d₁d₂ ≤ (d−1)²/4 for a free line arrangement with exponents (d₁, d₂) and n_d = 0.
pub fn exponent_product_bound(d: i64, d1: i64, d2: i64) -> Result<CheckRecord, BoundsError> {
    if d1 + d2 != d - 1 {
        return Err(BoundsError::ExponentSum {
            d1,
            d2,
            expected: d - 1,
        });
    }
    let rec = CheckRecord::evaluate(
        "exp_prod",
        q(d1 * d2),
        Relation::Le,
        frac((d - 1) * (d - 1), 4),
    );
    Ok(if d1 == d2 {
        rec.with_note("equality (d1 = d2)")
    } else {
        rec
    })
}

/// τ ≤ τ_max(m, mdr).
pub fn dpw_max_check(m: i64, mdr: i64, tau: i64) -> Result<CheckRecord, BoundsError> {
    let tmax = tau_max_dpw(m, mdr)?;
    let rec = CheckRecord::evaluate("dpw_max", q(tau), Relation::Le, q(tmax));
    Ok(if 2 * mdr >= m {
        rec.with_note("case b; correction binomial read as C(2*d1 - m + 2, 2)")
    } else {
        rec
    })
}

/// Both sides of the supersolvable feasibility condition at degree d:
/// (d² − 9d + 26)/2 ≤ 4d(d−3)/15.
pub fn supersolvable_condition(d: i64) -> (Rational, Rational, bool) {
    let lhs = frac(d * d - 9 * d + 26, 2);
    let rhs = frac(4 * d * (d - 3), 15);
    let holds = lhs <= rhs;
    (lhs, rhs, holds)
}

/// All d ≥ 6 satisfying [`supersolvable_condition`].
///
/// The difference lhs − rhs is a quadratic in d with positive leading coefficient 7/30,
/// so once d lies past its vertex and the condition fails, it fails for every larger d.
pub fn supersolvable_feasible_degrees() -> BTreeSet<i64> {
    // lhs − rhs = (7/30) d² − (111/30) d + 13, vertex at d = 111/14
    let vertex = frac(111, 14);
    let mut out = BTreeSet::new();
    let mut d = 6;
    loop {
        let (_, _, holds) = supersolvable_condition(d);
        if holds {
            out.insert(d);
        } else if q(d) > vertex {
            break;
        }
        d += 1;
    }
    out
}

/// Facts about the curve beyond its profile that decide which checks apply.
#[derive(Clone, Debug, Default)]
pub struct BoundsContext {
    /// Known or assumed freeness.
    pub free: bool,
    pub exponents: Option<(u32, u32)>,
    pub mdr: Option<u32>,
    /// Total Tjurina number; defaults to the combinatorial value.
    pub tau: Option<i64>,
}

/// Every check, in the order of [`CHECK_IDS`].
pub fn bounds_report(p: &MultiplicityProfile, ctx: &BoundsContext) -> BoundsReport {
    let tau = ctx.tau.unwrap_or_else(|| tau_combinatorial(p));
    let mut records = vec![
        hirzebruch_check(p),
        rich_point_lower_bound(p),
        quadruple_upper_bound(p),
    ];
    records.extend(free_m4_lower_bound(p, ctx.free));
    records.push(main_lower_check(p, tau, ctx.free));
    let disc = match discriminant_check(p) {
        Ok(r) => r.gated(free_gate(ctx.free)),
        Err(e) => CheckRecord::evaluate("disc", q(0), Relation::Ge, q(0)).gated(Err(e.to_string())),
    };
    records.push(disc);
    records.extend(derivation_chain_check(p).map(|r| r.gated(free_gate(ctx.free))));
    let d = p.d as i64;
    let exp = match ctx.exponents {
        Some((d1, d2)) => {
            let gate = if p.k != 0 {
                Err("requires a line arrangement (k = 0)".to_string())
            } else if p.n(p.d as u32) > 0 {
                Err("requires n_d = 0".to_string())
            } else {
                free_gate(ctx.free)
            };
            match (gate, exponent_product_bound(d, d1 as i64, d2 as i64)) {
                (Ok(()), Ok(r)) => r,
                (Err(reason), _) => {
                    CheckRecord::evaluate("exp_prod", q(0), Relation::Le, q(0)).gated(Err(reason))
                }
                (Ok(()), Err(e)) => CheckRecord::evaluate("exp_prod", q(0), Relation::Le, q(0))
                    .gated(Err(e.to_string())),
            }
        }
        None => CheckRecord::evaluate("exp_prod", q(0), Relation::Le, q(0))
            .gated(Err("exponents unknown".into())),
    };
    records.push(exp);
    let m = p.degree() as i64;
    let dpw = match ctx.mdr {
        Some(d1) => dpw_max_check(m, d1 as i64, tau).unwrap_or_else(|e| {
            CheckRecord::evaluate("dpw_max", q(tau), Relation::Le, q(tau)).gated(Err(e.to_string()))
        }),
        None => CheckRecord::evaluate("dpw_max", q(tau), Relation::Le, q(tau))
            .gated(Err("mdr unknown".into())),
    };
    records.push(dpw);
    BoundsReport { records }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein() -> MultiplicityProfile {
        MultiplicityProfile::new(21, 0, [(3, 28), (4, 21)])
    }

    fn dual_hesse() -> MultiplicityProfile {
        MultiplicityProfile::new(9, 0, [(3, 12)])
    }

    fn a1_9() -> MultiplicityProfile {
        MultiplicityProfile::new(9, 0, [(2, 6), (3, 4), (4, 3)])
    }

    fn hesse() -> MultiplicityProfile {
        MultiplicityProfile::new(12, 0, [(2, 12), (4, 9)])
    }

    fn cl5() -> MultiplicityProfile {
        MultiplicityProfile::new(3, 1, [(3, 3)])
    }

    #[test]
    fn tau_max_examples() {
        assert_eq!(tau_max_dpw(9, 4).unwrap(), 48);
        assert_eq!(tau_max_dpw(4, 2).unwrap(), 6);
        assert_eq!(tau_max_dpw(5, 2).unwrap(), 12);
        assert!(tau_max_dpw(5, 5).is_err());
        assert!(tau_max_dpw(5, -1).is_err());
    }

    #[test]
    fn hirzebruch_examples() {
        let r = hirzebruch_check(&klein());
        assert!(r.applicable && r.passed);
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (q(21), q(21)));
        assert_eq!(r.slack, q(0));
        let r = hirzebruch_check(&dual_hesse());
        assert_eq!((r.lhs, r.slack), (q(9), q(0)));
        // a point of multiplicity 5 on 6 lines exceeds 2d/3 = 4
        let r = hirzebruch_check(&MultiplicityProfile::new(6, 0, [(5, 1), (2, 5)]));
        assert!(!r.applicable);
    }

    #[test]
    fn rich_point_examples() {
        let r = rich_point_lower_bound(&klein());
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (q(49), q(42)));
        assert!(r.passed);
        let r = rich_point_lower_bound(&dual_hesse());
        assert_eq!(
            (r.lhs.clone(), r.rhs.clone(), r.slack.clone()),
            (q(12), q(12), q(0))
        );
        let r = rich_point_lower_bound(&MultiplicityProfile::new(6, 0, [(2, 15)]));
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (q(15), q(7)));
        assert!(r.passed && r.applicable);
    }

    #[test]
    fn quadruple_examples() {
        let r = quadruple_upper_bound(&klein());
        assert_eq!(r.lhs, q(91));
        assert_eq!(r.rhs, frac(504, 5));
        assert!(r.passed);
        let r = quadruple_upper_bound(&a1_9());
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (q(13), frac(72, 5)));
        assert!(r.passed);
        let r = quadruple_upper_bound(&hesse());
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (q(27), frac(144, 5)));
        assert_eq!(r.rhs_rounded.as_deref(), Some("28"));
        assert!(r.passed);
        assert!(!quadruple_upper_bound(&dual_hesse()).applicable);
    }

    #[test]
    fn free_m4_examples() {
        let [jl, lower] = free_m4_lower_bound(&a1_9(), true);
        assert_eq!((lower.lhs.clone(), lower.rhs.clone()), (q(12), q(13)));
        assert!(lower.passed && jl.passed);
        let [jl, lower] = free_m4_lower_bound(&klein(), true);
        assert_eq!((jl.lhs.clone(), jl.rhs.clone()), (q(28), q(30)));
        assert_eq!((lower.lhs.clone(), lower.rhs.clone()), (q(90), q(91)));
        assert!(jl.passed && lower.passed);
        let [jl, lower] = free_m4_lower_bound(&hesse(), true);
        assert_eq!((jl.lhs.clone(), jl.rhs.clone()), (q(12), frac(33, 2)));
        assert_eq!((lower.lhs.clone(), lower.rhs.clone()), (frac(99, 4), q(27)));
        assert!(jl.passed && lower.passed);
        let [jl, _] = free_m4_lower_bound(&hesse(), false);
        assert!(!jl.applicable);
    }

    #[test]
    fn main_lower_examples() {
        assert_eq!(main_lower_bound(3, 1), q(12));
        assert_eq!(main_lower_bound(21, 0), q(300));
        assert_eq!(main_lower_bound(9, 0), q(48));
    }

    #[test]
    fn discriminant_examples() {
        let d = discriminant(&dual_hesse()).unwrap();
        assert_eq!(d.delta, 0);
        assert_eq!(d.roots, Some((q(4), q(4))));
        let d = discriminant(&klein()).unwrap();
        assert_eq!(d.delta, 4);
        assert_eq!(d.roots, Some((q(9), q(11))));
        // generic 9 lines
        let generic = MultiplicityProfile::new(9, 0, [(2, 36)]);
        let r = discriminant_check(&generic).unwrap();
        assert_eq!(r.lhs, q(64 + 32 - 144));
        assert!(!r.passed);
        assert!(discriminant(&MultiplicityProfile::new(4, 0, [(2, 5)])).is_err());
    }

    #[test]
    fn derivation_chain_examples() {
        let [n5, _] = derivation_chain_check(&dual_hesse());
        assert_eq!(
            (n5.lhs.clone(), n5.rhs.clone(), n5.slack.clone()),
            (q(12), q(12), q(0))
        );
        let [n5, _] = derivation_chain_check(&klein());
        assert_eq!((n5.lhs.clone(), n5.rhs.clone()), (q(30), q(28)));
        assert!(n5.passed);
        let [_, nn] = derivation_chain_check(&cl5());
        assert_eq!(
            (nn.lhs.clone(), nn.rhs.clone(), nn.slack.clone()),
            (q(3), q(3), q(0))
        );
    }

    #[test]
    fn exponent_product_examples() {
        let r = exponent_product_bound(9, 4, 4).unwrap();
        assert_eq!(
            (r.lhs.clone(), r.rhs.clone(), r.slack.clone()),
            (q(16), q(16), q(0))
        );
        assert!(r.note.contains("equality"));
        let r = exponent_product_bound(21, 9, 11).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (q(99), q(100)));
        let r = exponent_product_bound(7, 1, 5).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (q(5), q(9)));
        assert!(exponent_product_bound(7, 1, 4).is_err());
    }

    #[test]
    fn supersolvable_examples() {
        let set = supersolvable_feasible_degrees();
        assert_eq!(set, BTreeSet::from([6, 7, 8, 9, 10]));
        let (lhs, rhs, holds) = supersolvable_condition(11);
        assert_eq!(lhs, q(24));
        assert_eq!(rhs, frac(352, 15));
        assert!(!holds);
        let (lhs, rhs, holds) = supersolvable_condition(10);
        assert_eq!((lhs, rhs), (q(18), frac(56, 3)));
        assert!(holds);
    }

    #[test]
    fn report_gating() {
        let rep = bounds_report(
            &dual_hesse(),
            &BoundsContext {
                free: true,
                exponents: Some((4, 4)),
                mdr: Some(4),
                tau: Some(48),
            },
        );
        assert_eq!(rep.records.len(), CHECK_IDS.len());
        for (r, id) in rep.records.iter().zip(CHECK_IDS) {
            assert_eq!(r.check_id, id);
        }
        assert!(rep.all_passed());
        assert!(!rep.get("cor_bbb").unwrap().applicable);
        assert!(rep.get("exp_prod").unwrap().applicable);

        let rep = bounds_report(&klein(), &BoundsContext::default());
        assert!(!rep.get("main_lower").unwrap().applicable);
        assert!(rep.get("hir").unwrap().applicable);
    }
}
