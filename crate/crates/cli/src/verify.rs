//! Exact verification suites over every ladder-built function up to a degree.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use clap::ValueEnum;
use legendre_ladder::algebra::{rat, Rational};
use legendre_ladder::ladder::ode_residual_at;
use legendre_ladder::{
    apply_lowering_ground, build, compare_with_classical, ground, hp_inner_product, legendre_poly,
    modified, node_count, ode_residual, ModifiedAlf,
};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Largest residual accepted when the differential equation is evaluated
/// numerically at interior points.
pub const ODE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Annihilation,
    Nodes,
    Ode,
    Orthonormality,
    LegendreCoincidence,
    ClassicalRatio,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Annihilation,
        Suite::Nodes,
        Suite::Ode,
        Suite::Orthonormality,
        Suite::LegendreCoincidence,
        Suite::ClassicalRatio,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Annihilation => "annihilation",
            Suite::Nodes => "nodes",
            Suite::Ode => "ode",
            Suite::Orthonormality => "orthonormality",
            Suite::LegendreCoincidence => "legendre-coincidence",
            Suite::ClassicalRatio => "classical-ratio",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CaseResult {
    pub ell: u32,
    pub n_x: u32,
    pub check: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CaseResult {
    fn new(ell: u32, n_x: u32, check: impl Into<String>, outcome: Result<(), String>) -> Self {
        Self {
            ell,
            n_x,
            check: check.into(),
            passed: outcome.is_ok(),
            detail: outcome.err(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub attempted: usize,
    pub passed: usize,
    pub cases: Vec<CaseResult>,
}

/// Outcome of a verification run. The wall-clock duration is kept out of
/// the serialized form so that identical runs produce identical output.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub lmax: u32,
    pub attempted: usize,
    pub passed: usize,
    pub suites: Vec<SuiteReport>,
    #[serde(skip)]
    pub duration: Duration,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.attempted
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let _ = writeln!(out, "{}: {}/{} passed", s.suite, s.passed, s.attempted);
            for c in s.cases.iter().filter(|c| !c.passed) {
                let _ = writeln!(
                    out,
                    "  FAIL ell={} n_x={} {}: {}",
                    c.ell,
                    c.n_x,
                    c.check,
                    c.detail.as_deref().unwrap_or("")
                );
            }
        }
        let _ = writeln!(out, "total: {}/{} passed", self.passed, self.attempted);
        out
    }
}

fn check(cond: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

fn annihilation(lmax: u32) -> Vec<CaseResult> {
    (0..=lmax)
        .map(|ell| {
            let outcome = apply_lowering_ground(ell, ground(ell).g())
                .map_err(|e| e.to_string())
                .and_then(|f| check(f.is_zero(), || format!("image is {}", f)));
            CaseResult::new(ell, 0, "annihilation", outcome)
        })
        .collect()
}

fn members(lmax: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=lmax).flat_map(|ell| (0..=ell).map(move |n| (ell, n)))
}

fn nodes(lmax: u32) -> Vec<CaseResult> {
    members(lmax)
        .map(|(ell, n)| {
            let outcome = build(ell, i64::from(n)).map_err(|e| e.to_string()).and_then(|f| {
                let count = node_count(&f);
                check(count == n as usize, || format!("{count} interior zeros"))
            });
            CaseResult::new(ell, n, "node count", outcome)
        })
        .collect()
}

fn ode(lmax: u32) -> Vec<CaseResult> {
    let samples: Vec<Rational> = (1..=11).map(|k| rat(k - 6, 6)).collect();
    members(lmax)
        .map(|(ell, n)| {
            let outcome = build(ell, i64::from(n)).map_err(|e| e.to_string()).and_then(|f| {
                let residual = ode_residual(&f);
                check(residual.is_zero(), || format!("residual polynomial {residual}"))?;
                for x in &samples {
                    let r = ode_residual_at(ell, f.g(), x).map_err(|e| e.to_string())?;
                    check(r.abs() < ODE_TOLERANCE, || format!("residual {r:e} at x = {x}"))?;
                }
                Ok(())
            });
            CaseResult::new(ell, n, "ode residual", outcome)
        })
        .collect()
}

fn orthonormality(lmax: u32) -> Vec<CaseResult> {
    let mut cache: HashMap<(u32, u32), ModifiedAlf> = HashMap::new();
    let mut cases = Vec::new();
    for m in 0..=lmax {
        for ell in m..=lmax {
            cache
                .entry((ell, m))
                .or_insert_with(|| modified(ell, m).expect("m <= ell"));
        }
        for ell in m..=lmax {
            for other in ell..=lmax {
                let (a, b) = (&cache[&(ell, m)], &cache[&(other, m)]);
                let outcome = hp_inner_product(&a.g, &b.g)
                    .map_err(|e| e.to_string())
                    .and_then(|ip| {
                        if ell == other {
                            // <F, F> = ip / sqrt(c_a c_b) must equal one
                            check(
                                ip.is_positive() && &ip * &ip == &a.c_squared * &b.c_squared,
                                || format!("normalized square {}", &ip * &ip / (&a.c_squared * &b.c_squared)),
                            )
                        } else {
                            check(ip.is_zero(), || format!("overlap {ip}"))
                        }
                    });
                cases.push(CaseResult::new(
                    ell,
                    ell - m,
                    format!("orthonormality m={m} ell'={other}"),
                    outcome,
                ));
            }
        }
    }
    cases
}

fn legendre_coincidence(lmax: u32) -> Vec<CaseResult> {
    (0..=lmax)
        .map(|ell| {
            let outcome = build(ell, i64::from(ell)).map_err(|e| e.to_string()).and_then(|f| {
                let p = legendre_poly(ell);
                let normalized = f.normalized().ok_or("c_squared is not a perfect square")?;
                check(normalized.half_power == 0 && normalized.poly == p, || {
                    format!("normalized to {normalized}")
                })
            });
            CaseResult::new(ell, ell, "legendre coincidence", outcome)
        })
        .collect()
}

fn classical_ratio(lmax: u32) -> Vec<CaseResult> {
    members(lmax)
        .map(|(ell, n)| {
            let outcome = compare_with_classical(ell, n).map_err(|e| e.to_string()).and_then(|rel| {
                let sq = rel.factor_squared();
                check(sq.is_one(), || format!("squared factor {sq}"))
            });
            CaseResult::new(ell, n, "classical ratio", outcome)
        })
        .collect()
}

fn run_suite(suite: Suite, lmax: u32) -> SuiteReport {
    let mut cases = match suite {
        Suite::Annihilation => annihilation(lmax),
        Suite::Nodes => nodes(lmax),
        Suite::Ode => ode(lmax),
        Suite::Orthonormality => orthonormality(lmax),
        Suite::LegendreCoincidence => legendre_coincidence(lmax),
        Suite::ClassicalRatio => classical_ratio(lmax),
    };
    cases.sort();
    SuiteReport {
        suite,
        attempted: cases.len(),
        passed: cases.iter().filter(|c| c.passed).count(),
        cases,
    }
}

/// Runs the requested suites (all of them when `suites` is empty), one
/// thread per suite, and returns the report sorted by suite.
pub fn run(lmax: u32, suites: &[Suite]) -> RunReport {
    let start = Instant::now();
    let mut selected: Vec<Suite> = if suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        suites.to_vec()
    };
    selected.sort();
    selected.dedup();
    let mut reports: Vec<SuiteReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = selected
            .iter()
            .map(|&s| scope.spawn(move || run_suite(s, lmax)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    });
    reports.sort_by_key(|r| r.suite);
    RunReport {
        lmax,
        attempted: reports.iter().map(|r| r.attempted).sum(),
        passed: reports.iter().map(|r| r.passed).sum(),
        suites: reports,
        duration: start.elapsed(),
    }
}
