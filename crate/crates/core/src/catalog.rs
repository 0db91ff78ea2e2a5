//! Named arrangements with their expected invariants.

use serde::Serialize;

use crate::analysis::{analyze, context_for, AnalysisReport, AnalyzeOptions};
use crate::bounds::{bounds_report, discriminant, BoundsReport, Discriminant};
use crate::combinatorics::{naive_count_residual, tau_combinatorial, MultiplicityProfile};
use crate::error::{AlgebraError, CatalogError};
use crate::exactnum::NumberField;
use crate::format::ArrangementFile;
use crate::geometry::{Arrangement, Conic, Line};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Geometric,
    Combinatorial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub tau: i64,
    pub mdr: Option<u32>,
    pub exponents: Option<(u32, u32)>,
    pub free: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub tier: Tier,
    /// Present for the geometric tier.
    pub arrangement: Option<Arrangement>,
    pub declared_profile: MultiplicityProfile,
    pub expected: Expected,
    pub notes: &'static str,
}

pub const NAMES: [&str; 7] = [
    "triangle",
    "generic4",
    "cl5",
    "dual_hesse",
    "hesse12",
    "a1_9",
    "klein",
];

pub fn catalog_list() -> &'static [&'static str] {
    &NAMES
}

fn rational_lines(field: &NumberField, rows: &[[i64; 3]]) -> Vec<Line> {
    rows.iter()
        .map(|r| Line::new(r.map(|c| field.from_int(c))).expect("nonzero line"))
        .collect()
}

fn geometric(
    name: &'static str,
    arr: Arrangement,
    counts: &[(u32, u64)],
    expected: Expected,
    notes: &'static str,
) -> CatalogEntry {
    let declared = MultiplicityProfile::new(arr.d() as u64, arr.k() as u64, counts.iter().copied());
    CatalogEntry {
        name,
        tier: Tier::Geometric,
        arrangement: Some(arr),
        declared_profile: declared,
        expected,
        notes,
    }
}

fn combinatorial(
    name: &'static str,
    d: u64,
    counts: &[(u32, u64)],
    expected: Expected,
    notes: &'static str,
) -> CatalogEntry {
    CatalogEntry {
        name,
        tier: Tier::Combinatorial,
        arrangement: None,
        declared_profile: MultiplicityProfile::new(d, 0, counts.iter().copied()),
        expected,
        notes,
    }
}

/// The nine lines x − ωⁱy, y − ωⁱz, x − ωⁱz over Q(ω).
pub fn dual_hesse_arrangement() -> Arrangement {
    let k = NumberField::cyclotomic3();
    let w = k.generator();
    let (one, zero) = (k.one(), k.zero());
    let mut lines = Vec::new();
    for (a, b) in [(0, 1), (1, 2), (0, 2)] {
        let mut c = one.clone();
        for _ in 0..3 {
            let mut row = [zero.clone(), zero.clone(), zero.clone()];
            row[a] = one.clone();
            row[b] = -c.clone();
            lines.push(Line::new(row).expect("nonzero line"));
            c = &c * &w;
        }
    }
    Arrangement::new(k, lines, vec![], vec![]).expect("distinct lines")
}

pub fn catalog_get(name: &str) -> Result<CatalogEntry, CatalogError> {
    let q = NumberField::rationals();
    Ok(match name {
        "triangle" => geometric(
            "triangle",
            Arrangement::new(
                q.clone(),
                rational_lines(&q, &[[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
                vec![],
                vec![],
            )
            .expect("valid"),
            &[(2, 3)],
            Expected {
                tau: 3,
                mdr: Some(1),
                exponents: Some((1, 1)),
                free: Some(true),
            },
            "xyz",
        ),
        "generic4" => geometric(
            "generic4",
            Arrangement::new(
                q.clone(),
                rational_lines(&q, &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]),
                vec![],
                vec![],
            )
            .expect("valid"),
            &[(2, 6)],
            Expected {
                tau: 6,
                mdr: Some(2),
                exponents: None,
                free: Some(false),
            },
            "xyz(x+y+z); four lines in general position",
        ),
        "cl5" => {
            let conic = Conic::from_coefficients([0, 0, 0, 1, 1, 1].map(|c| q.from_int(c)))
                .expect("smooth");
            geometric(
                "cl5",
                Arrangement::new(
                    q.clone(),
                    rational_lines(&q, &[[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
                    vec![conic],
                    vec![],
                )
                .expect("valid"),
                &[(3, 3)],
                Expected {
                    tau: 12,
                    mdr: Some(2),
                    exponents: Some((2, 2)),
                    free: Some(true),
                },
                "xyz(xy+yz+zx); the conic passes through the three vertices of the triangle",
            )
        }
        "dual_hesse" => geometric(
            "dual_hesse",
            dual_hesse_arrangement(),
            &[(3, 12)],
            Expected {
                tau: 48,
                mdr: Some(4),
                exponents: Some((4, 4)),
                free: Some(true),
            },
            "(x^3-y^3)(y^3-z^3)(x^3-z^3) over Q(w), w^2+w+1 = 0",
        ),
        "hesse12" => combinatorial(
            "hesse12",
            12,
            &[(2, 12), (4, 9)],
            Expected {
                tau: 93,
                mdr: None,
                exponents: None,
                free: None,
            },
            "n4 = 9 is forced by the naive count 66 = 12 + 6*n4; the source text also states \
             n4 = 4, which is inconsistent with its own value n3 + 3*n4 = 27",
        ),
        "a1_9" => combinatorial(
            "a1_9",
            9,
            &[(2, 6), (3, 4), (4, 3)],
            Expected {
                tau: 49,
                mdr: None,
                exponents: None,
                free: Some(true),
            },
            "free; exponents not recorded, the discriminant roots give (3, 5)",
        ),
        "klein" => combinatorial(
            "klein",
            21,
            &[(3, 28), (4, 21)],
            Expected {
                tau: 301,
                mdr: None,
                exponents: Some((9, 11)),
                free: Some(true),
            },
            "coordinates need Q(zeta_7); shipped as a profile only",
        ),
        other => return Err(CatalogError::Unknown(other.to_string())),
    })
}

impl CatalogEntry {
    /// The entry in arrangement file format; `None` for the combinatorial tier.
    pub fn export(&self) -> Option<ArrangementFile> {
        self.arrangement
            .as_ref()
            .map(ArrangementFile::from_arrangement)
    }
}

/// One expected-versus-actual comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub quantity: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

fn compare<T: PartialEq + std::fmt::Debug>(quantity: &str, expected: T, actual: T) -> Comparison {
    Comparison {
        quantity: quantity.to_string(),
        passed: expected == actual,
        expected: format!("{expected:?}"),
        actual: format!("{actual:?}"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub tier: Tier,
    pub profile: MultiplicityProfile,
    pub notes: String,
    pub comparisons: Vec<Comparison>,
    /// Geometric tier only.
    pub analysis: Option<AnalysisReport>,
    pub discriminant: Option<Discriminant>,
    pub bounds: BoundsReport,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.comparisons.iter().all(|c| c.passed)
            && self.bounds.all_passed()
            && self.analysis.as_ref().is_none_or(AnalysisReport::passed)
    }
}

pub fn verify_entry(name: &str) -> Result<EntryReport, CatalogError> {
    let entry = catalog_get(name)?;
    Ok(verify(&entry).unwrap_or_else(|e| EntryReport {
        name: entry.name.to_string(),
        tier: entry.tier,
        profile: entry.declared_profile.clone(),
        notes: entry.notes.to_string(),
        comparisons: vec![Comparison {
            quantity: "analysis".into(),
            expected: "success".into(),
            actual: e.to_string(),
            passed: false,
        }],
        analysis: None,
        discriminant: None,
        bounds: BoundsReport::default(),
    }))
}

fn verify(entry: &CatalogEntry) -> Result<EntryReport, AlgebraError> {
    let exp = &entry.expected;
    let declared = &entry.declared_profile;
    let mut comparisons = vec![
        compare("naive count residual", 0, naive_count_residual(declared)),
        compare("tau (combinatorial)", exp.tau, tau_combinatorial(declared)),
    ];
    let disc = discriminant(declared).ok();

    let (analysis, bounds) = match &entry.arrangement {
        Some(arr) => {
            let rep = analyze(arr, &AnalyzeOptions::default())?;
            let cert = rep.freeness.as_ref().expect("oracle was run");
            comparisons.push(compare("profile", declared, &rep.profile));
            comparisons.push(compare("all points ordinary", true, rep.all_ordinary));
            comparisons.push(compare(
                "tau (oracle)",
                Some(exp.tau as u64),
                rep.tau_oracle,
            ));
            if let Some(m) = exp.mdr {
                comparisons.push(compare("mdr", m, cert.mdr));
            }
            if let Some(free) = exp.free {
                comparisons.push(compare("free", free, cert.is_free));
            }
            if exp.exponents.is_some() {
                comparisons.push(compare("exponents", exp.exponents, cert.exponents));
            }
            let bounds = rep.bounds.clone();
            (Some(rep), bounds)
        }
        None => {
            let m = declared.degree() as i64;
            if let Some((d1, d2)) = exp.exponents {
                comparisons.push(compare("d1 + d2", m - 1, (d1 + d2) as i64));
                comparisons.push(compare(
                    "tau = (m-1)^2 - d1*d2",
                    exp.tau,
                    (m - 1) * (m - 1) - (d1 * d2) as i64,
                ));
            }
            if exp.free == Some(true) {
                let roots = disc.as_ref().and_then(|d| d.roots.clone());
                comparisons.push(compare(
                    "discriminant is a perfect square",
                    true,
                    roots.is_some(),
                ));
                if let (Some((d1, d2)), Some((a, b))) = (exp.exponents, roots) {
                    comparisons.push(compare(
                        "exponents are the discriminant roots",
                        (d1 as i64, d2 as i64),
                        (a.to_i64().unwrap_or(-1), b.to_i64().unwrap_or(-1)),
                    ));
                }
            }
            let ctx = context_for(
                declared,
                exp.free == Some(true),
                exp.exponents,
                exp.mdr,
                Some(exp.tau),
            );
            (None, bounds_report(declared, &ctx))
        }
    };
    Ok(EntryReport {
        name: entry.name.to_string(),
        tier: entry.tier,
        profile: declared.clone(),
        notes: entry.notes.to_string(),
        comparisons,
        analysis,
        discriminant: disc,
        bounds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    #[test]
    fn lookup() {
        let cl5 = catalog_get("cl5").unwrap();
        assert_eq!(cl5.declared_profile.degree(), 5);
        assert_eq!(cl5.declared_profile.total_points(), 3);
        let klein = catalog_get("klein").unwrap();
        assert_eq!(klein.tier, Tier::Combinatorial);
        assert!(klein.arrangement.is_none());
        assert_eq!(
            catalog_get("nope").unwrap_err(),
            CatalogError::Unknown("nope".into())
        );
        assert_eq!(catalog_list().len(), 7);
    }

    #[test]
    fn declared_profiles_balance() {
        for name in catalog_list() {
            let e = catalog_get(name).unwrap();
            assert_eq!(naive_count_residual(&e.declared_profile), 0, "{name}");
        }
    }

    #[test]
    fn combinatorial_entries_verify() {
        let a = verify_entry("a1_9").unwrap();
        assert!(a.passed(), "{a:?}");
        let m4 = a.bounds.get("m4_lower").unwrap();
        assert!(m4.applicable);
        assert_eq!(
            (m4.lhs.clone(), m4.rhs.clone()),
            (Rational::from(12), Rational::from(13))
        );

        let k = verify_entry("klein").unwrap();
        assert!(k.passed(), "{k:?}");
        let main = k.bounds.get("main_lower").unwrap();
        assert!(main.applicable);
        assert_eq!(
            (main.lhs.clone(), main.rhs.clone()),
            (Rational::from(301), Rational::from(300))
        );

        let h = verify_entry("hesse12").unwrap();
        assert!(h.passed(), "{h:?}");
        let bbb = h.bounds.get("cor_bbb").unwrap();
        assert_eq!(bbb.lhs, Rational::from(27));
        assert_eq!(bbb.rhs_rounded.as_deref(), Some("28"));
    }

    #[test]
    fn small_geometric_entries_verify() {
        for name in ["triangle", "generic4", "cl5"] {
            let r = verify_entry(name).unwrap();
            assert!(r.passed(), "{name}: {r:?}");
        }
    }

    #[test]
    fn dual_hesse_verifies() {
        let r = verify_entry("dual_hesse").unwrap();
        assert!(r.passed(), "{r:?}");
        let exp = r.bounds.get("exp_prod").unwrap();
        assert!(exp.applicable);
        assert_eq!(
            (exp.lhs.clone(), exp.rhs.clone()),
            (Rational::from(16), Rational::from(16))
        );
    }

    #[test]
    fn export_roundtrip() {
        let e = catalog_get("dual_hesse").unwrap();
        let file = e.export().unwrap();
        let arr = file.to_arrangement().unwrap();
        assert_eq!(arr.d(), 9);
        assert_eq!(ArrangementFile::from_arrangement(&arr), file);
        assert!(catalog_get("klein").unwrap().export().is_none());
    }
}
