//! Human-readable output. Approximations appear only next to exact values.

use std::fmt::Write;

use serde::Serialize;

use tjurina_core::analysis::AnalysisReport;
use tjurina_core::bounds::{BoundsReport, Discriminant};
use tjurina_core::catalog::{CatalogEntry, EntryReport, Expected, Tier};
use tjurina_core::combinatorics::{tau_combinatorial, MultiplicityProfile};
use tjurina_core::enumeration::WeakType;
use tjurina_core::format::ArrangementFile;
use tjurina_core::surfaces::SurfaceReport;

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn bounds(out: &mut String, b: &BoundsReport) {
    let _ = writeln!(out, "checks:");
    for r in &b.records {
        let _ = writeln!(out, "  {r}");
    }
}

fn disc(out: &mut String, d: &Option<Discriminant>) {
    match d {
        Some(Discriminant {
            delta,
            roots: Some((a, b)),
        }) => {
            let _ = writeln!(out, "discriminant   {delta}, roots d1 = {a}, {b}");
        }
        Some(Discriminant { delta, roots: None }) => {
            let _ = writeln!(out, "discriminant   {delta}, not a perfect square");
        }
        None => {
            let _ = writeln!(
                out,
                "discriminant   undefined (naive count does not balance)"
            );
        }
    }
}

pub fn analysis(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let p = &r.profile;
    let _ = write!(out, "field          {}", r.field);
    if let Some(note) = &r.field_note {
        let _ = write!(out, "  ({note})");
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "degree         {} (d = {} lines, k = {} conics)",
        r.degree, p.d, p.k
    );
    let _ = writeln!(out, "profile        {p}");
    let _ = writeln!(out, "naive count    residual {}", r.naive_count_residual);
    let _ = writeln!(
        out,
        "m(C)           {}",
        r.max_multiplicity
            .map_or("-".to_string(), |m| m.to_string())
    );
    let _ = writeln!(out, "singular points ({}):", r.singular_points.len());
    for sp in &r.singular_points {
        let _ = writeln!(
            out,
            "  {:<28} multiplicity {}  members {:?}{}",
            sp.point,
            sp.multiplicity,
            sp.members,
            if sp.ordinary { "" } else { "  NOT ORDINARY" }
        );
    }
    for (a, b) in &r.tangencies {
        let _ = writeln!(out, "  tangency between members {a} and {b}");
    }
    let _ = write!(out, "tau            combinatorial {}", r.tau_combinatorial);
    match (r.tau_oracle, r.qh_consistent) {
        (Some(t), Some(ok)) => {
            let _ = writeln!(
                out,
                ", oracle {t} ({})",
                if ok { "consistent" } else { "INCONSISTENT" }
            );
        }
        _ => {
            let _ = writeln!(out, ", oracle skipped");
        }
    }
    if let Some(c) = &r.freeness {
        let _ = writeln!(out, "mdr            {}", c.mdr);
        let _ = writeln!(out, "tau_max(m,d1)  {}", c.tau_max_at_mdr);
        match c.exponents {
            Some((a, b)) => {
                let _ = writeln!(
                    out,
                    "freeness       free, exponents ({a}, {b}); {}",
                    c.witness
                );
            }
            None => {
                let _ = writeln!(out, "freeness       not free; {}", c.witness);
            }
        }
    }
    disc(&mut out, &r.discriminant);
    bounds(&mut out, &r.bounds);
    let _ = writeln!(out, "verdict        {}", verdict(r.passed()));
    out
}

pub fn weak_types(types: &[WeakType], m_max: u32) -> String {
    let mut out = String::new();
    let header: Vec<String> = (2..=m_max).map(|r| format!("n{r}")).collect();
    let _ = writeln!(
        out,
        "{:>4}  {:<24} {:>6}  {:<14} checks",
        "#",
        header.join(","),
        "tau",
        "exponents"
    );
    for (i, w) in types.iter().enumerate() {
        let v: Vec<String> = w.vector(m_max).iter().map(u64::to_string).collect();
        let exps: Vec<String> = w
            .exponent_pairs
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        let _ = writeln!(
            out,
            "{:>4}  {:<24} {:>6}  {:<14} {}",
            i + 1,
            format!("({})", v.join(", ")),
            w.tau,
            exps.join(" "),
            w.satisfied_checks.join(",")
        );
    }
    let mut taus: Vec<i64> = types.iter().map(|w| w.tau).collect();
    taus.sort_unstable();
    taus.dedup();
    let by_tau: Vec<String> = taus
        .iter()
        .map(|t| {
            format!(
                "{} with tau = {t}",
                types.iter().filter(|w| w.tau == *t).count()
            )
        })
        .collect();
    let _ = writeln!(out, "total {} weak types", types.len());
    if !by_tau.is_empty() {
        let _ = writeln!(out, "  {}", by_tau.join(", "));
    }
    out
}

/// Catalog entry as shown by `catalog show --json`.
#[derive(Serialize)]
pub struct EntryView {
    name: &'static str,
    tier: Tier,
    profile: MultiplicityProfile,
    tau_combinatorial: i64,
    expected: Expected,
    notes: &'static str,
    arrangement: Option<ArrangementFile>,
}

impl From<&CatalogEntry> for EntryView {
    fn from(e: &CatalogEntry) -> Self {
        EntryView {
            name: e.name,
            tier: e.tier,
            profile: e.declared_profile.clone(),
            tau_combinatorial: tau_combinatorial(&e.declared_profile),
            expected: e.expected.clone(),
            notes: e.notes,
            arrangement: e.export(),
        }
    }
}

pub fn entry(e: &CatalogEntry) -> String {
    let mut out = String::new();
    let x = &e.expected;
    let _ = writeln!(out, "name           {}", e.name);
    let _ = writeln!(out, "tier           {:?}", e.tier);
    let _ = writeln!(out, "profile        {}", e.declared_profile);
    let _ = writeln!(out, "degree         {}", e.declared_profile.degree());
    let _ = writeln!(out, "tau            {}", x.tau);
    if let Some(m) = x.mdr {
        let _ = writeln!(out, "mdr            {m}");
    }
    if let Some((a, b)) = x.exponents {
        let _ = writeln!(out, "exponents      ({a}, {b})");
    }
    if let Some(free) = x.free {
        let _ = writeln!(out, "free           {free}");
    }
    if let Some(arr) = &e.arrangement {
        let _ = writeln!(out, "field          {:?}", arr.field());
        for l in arr.lines() {
            let _ = writeln!(out, "  line   {l}");
        }
        for q in arr.conics() {
            let _ = writeln!(out, "  conic  {q}");
        }
    }
    let _ = writeln!(out, "notes          {}", e.notes);
    out
}

pub fn entry_report(r: &EntryReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "== {} ({:?}) ==", r.name, r.tier);
    let _ = writeln!(out, "profile        {}", r.profile);
    for c in &r.comparisons {
        let _ = writeln!(
            out,
            "  [{}] {:<40} expected {}, got {}",
            verdict(c.passed),
            c.quantity,
            c.expected,
            c.actual
        );
    }
    match &r.analysis {
        Some(a) => out.push_str(&analysis(a)),
        None => {
            disc(&mut out, &r.discriminant);
            bounds(&mut out, &r.bounds);
        }
    }
    let _ = writeln!(out, "notes          {}", r.notes);
    let _ = writeln!(out, "entry          {}", verdict(r.passed()));
    out
}

pub fn surface(r: &SurfaceReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "surface        {} = 0  (degree {})",
        r.surface, r.degree
    );
    let _ = writeln!(
        out,
        "singular points ({}), all in w = 0{}:",
        r.singular_points.len(),
        if r.points_verified {
            ", verified on all partials"
        } else {
            ""
        }
    );
    for p in &r.singular_points {
        let _ = writeln!(out, "  {p}");
    }
    let _ = writeln!(
        out,
        "planar tau     {} ({})",
        r.planar_tau,
        if r.planar_free {
            "free curve"
        } else {
            "curve not free"
        }
    );
    let _ = writeln!(
        out,
        "tau(X)         {} = ({} - 1) * {}",
        r.tau_surface, r.degree, r.planar_tau
    );
    let _ = writeln!(
        out,
        "lower bound    {} {} {}{}",
        r.tau_surface,
        if r.meets_lower_bound { ">=" } else { "<" },
        r.lower_bound_via_main,
        if r.planar_free {
            ""
        } else {
            "  (bound assumes a free curve)"
        }
    );
    if let (Some(m), Some((lo, hi))) = (r.mdr_surface, r.dpw_window) {
        let _ = writeln!(out, "mdr(F)         {m}");
        let _ = writeln!(
            out,
            "dpw window     {lo} <= {} <= {hi}: {}",
            r.tau_surface,
            verdict(r.window_contains_tau == Some(true))
        );
    }
    let _ = writeln!(out, "verdict        {}", verdict(r.passed()));
    out
}
