//! Weak combinatorial types: multiplicity vectors passing every numerical constraint.

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::context_for;
use crate::bounds::{bounds_report, main_lower_bound};
use crate::combinatorics::{tau_combinatorial, MultiplicityProfile};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeakType {
    pub profile: MultiplicityProfile,
    pub tau: i64,
    pub exponent_pairs: Vec<(u32, u32)>,
    pub satisfied_checks: Vec<&'static str>,
}

impl WeakType {
    /// (n₂, …, n_{m_max}).
    pub fn vector(&self, m_max: u32) -> Vec<u64> {
        (2..=m_max).map(|r| self.profile.n(r)).collect()
    }
}

/// Pairs d₁ ≤ d₂ with d₁ + d₂ = m − 1, d₁ ≥ 1 and τ = (m−1)² − d₁d₂ ≥ `tau_min`,
/// ordered by increasing τ.
///
/// `tau_min` defaults to the ceiling of [`main_lower_bound`].
pub fn feasible_exponent_pairs(d: i64, k: i64, tau_min: Option<i64>) -> Vec<(i64, i64, i64)> {
    let m = 2 * k + d;
    if m < 3 {
        return Vec::new();
    }
    let tau_min = tau_min.unwrap_or_else(|| main_lower_bound(d, k).ceil().to_i64().expect("small"));
    let mut out: Vec<_> = (1..=(m - 1) / 2)
        .map(|d1| {
            let d2 = m - 1 - d1;
            (d1, d2, (m - 1) * (m - 1) - d1 * d2)
        })
        .filter(|&(_, _, tau)| tau >= tau_min)
        .collect();
    out.sort_by_key(|&(_, _, tau)| tau);
    out
}

fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Everything fixed by (d, k, m_max, assume_free).
struct Problem {
    d: u64,
    k: u64,
    m_max: u32,
    free: bool,
    pairs: i64,
    /// Admissible τ when assuming freeness.
    taus: Vec<i64>,
    all_pairs: Vec<(i64, i64, i64)>,
}

impl Problem {
    fn new(d: u64, k: u64, m_max: u32, free: bool) -> Self {
        let (di, ki) = (d as i64, k as i64);
        let all_pairs = feasible_exponent_pairs(di, ki, Some(i64::MIN));
        let taus = feasible_exponent_pairs(di, ki, None)
            .into_iter()
            .map(|(_, _, t)| t)
            .collect();
        Problem {
            d,
            k,
            m_max,
            free,
            pairs: 4 * choose2(ki) + 2 * ki * di + choose2(di),
            taus,
            all_pairs,
        }
    }

    fn tau_cap(&self) -> Option<i64> {
        self.free
            .then(|| self.taus.iter().copied().max().unwrap_or(i64::MIN))
    }

    /// Validates a vector (n₃, …, n_{m_max}) with n₂ forced by the naive count.
    fn accept(&self, upper: &[u64]) -> Option<WeakType> {
        let used: i64 = upper
            .iter()
            .enumerate()
            .map(|(i, &n)| choose2(i as i64 + 3) * n as i64)
            .sum();
        let n2 = self.pairs - used;
        if n2 < 0 || (self.m_max == 2 && n2 == 0) {
            return None;
        }
        let counts = std::iter::once((2, n2 as u64))
            .chain(upper.iter().enumerate().map(|(i, &n)| (i as u32 + 3, n)));
        let profile = MultiplicityProfile::new(self.d, self.k, counts);
        let tau = tau_combinatorial(&profile);
        if self.free && !self.taus.contains(&tau) {
            return None;
        }
        let ctx = context_for(&profile, self.free, None, None, Some(tau));
        let report = bounds_report(&profile, &ctx);
        if !report.all_passed() {
            return None;
        }
        let m1 = (2 * self.k + self.d) as i64 - 1;
        Some(WeakType {
            exponent_pairs: self
                .all_pairs
                .iter()
                .filter(|&&(d1, d2, _)| d1 * d2 == m1 * m1 - tau)
                .map(|&(d1, d2, _)| (d1 as u32, d2 as u32))
                .collect(),
            satisfied_checks: report
                .records
                .iter()
                .filter(|r| r.applicable)
                .map(|r| r.check_id)
                .collect(),
            tau,
            profile,
        })
    }

    /// All survivors with n_{m_max} = `top`.
    fn stratum(&self, top: u64) -> Vec<WeakType> {
        let m = self.m_max as usize;
        if m == 2 {
            return if top as i64 == self.pairs {
                self.accept(&[]).into_iter().collect()
            } else {
                Vec::new()
            };
        }
        let mut upper = vec![0u64; m - 2];
        upper[m - 3] = top;
        let budget = self.pairs - choose2(m as i64) * top as i64;
        if budget < 0 {
            return Vec::new();
        }
        // τ = pairs + Σ_{r≥3} C(r−1, 2)·n_r grows with every n_r, so the τ cap prunes.
        let tau_base = self.pairs + choose2(m as i64 - 1) * top as i64;
        let mut out = Vec::new();
        if m == 4 && self.free {
            // τ − pairs = n₃ + 3n₄ fixes n₃ for each admissible τ
            for &tau in &self.taus {
                let n3 = tau - tau_base;
                if n3 >= 0 && 3 * n3 <= budget {
                    upper[0] = n3 as u64;
                    out.extend(self.accept(&upper));
                }
            }
        } else {
            self.descend(&mut upper, m - 1, budget, tau_base, &mut out);
        }
        out
    }

    /// Fills n_r for r = `r` down to 3.
    fn descend(&self, upper: &mut [u64], r: usize, budget: i64, tau: i64, out: &mut Vec<WeakType>) {
        if r < 3 {
            out.extend(self.accept(upper));
            return;
        }
        let weight = choose2(r as i64);
        let tau_weight = choose2(r as i64 - 1);
        let mut n = 0;
        while weight * n <= budget {
            let t = tau + tau_weight * n;
            if self.tau_cap().is_some_and(|cap| t > cap) {
                break;
            }
            upper[r - 3] = n as u64;
            self.descend(upper, r - 1, budget - weight * n, t, out);
            n += 1;
        }
        upper[r - 3] = 0;
    }
}

/// Every multiplicity vector (n₂, …, n_{m_max}) with n_{m_max} ≥ 1 satisfying the naive
/// count, τ-feasibility when `assume_free`, and every applicable bound. Sorted
/// lexicographically by (n₂, …, n_{m_max}). Empty when `m_max` is out of range.
pub fn enumerate_weak_types(d: u64, k: u64, m_max: u32, assume_free: bool) -> Vec<WeakType> {
    if d < 1 || m_max < 2 || m_max as u64 > d + 2 * k {
        return Vec::new();
    }
    let problem = Problem::new(d, k, m_max, assume_free);
    let max_top = (problem.pairs / choose2(m_max as i64)).max(0) as u64;
    let mut out: Vec<WeakType> = (1..=max_top)
        .into_par_iter()
        .flat_map_iter(|top| problem.stratum(top))
        .collect();
    out.sort_by_cached_key(|w| w.vector(m_max));
    out
}
