//! Verification suites. Each suite checks one family of results against
//! the implementation, exhaustively over bounded algebra batteries or over
//! seeded random formulas, and returns a [`SuiteReport`].

mod algebraic;
mod logical;
mod random;
mod report;

use std::path::PathBuf;
use std::time::Instant;

use crate::algebra::AlgebraFile;
use crate::formula::{parse, Formula};
use crate::ruitenburg::{classify_univariate, verify_appendix, verify_inventory, CanonicalClass, ChiSignature};

pub use algebraic::{suite_core_subalgebra, suite_cores, suite_dense, suite_preservation, suite_wronski};
pub use logical::{suite_calibration, suite_order, suite_substitution};
pub use random::FormulaGen;
pub use report::{CheckRecord, Status, SuiteReport};

pub const SUITE_NAMES: &[&str] = &[
    "appendix",
    "cores",
    "preservation",
    "core-subalgebra",
    "wronski",
    "order",
    "dense",
    "substitution",
    "calibration",
];

/// Bounds and seed for the suites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabConfig {
    pub seed: u64,
    /// Algebra sizes for the core, dense-element and order suites.
    pub core_max_size: usize,
    pub wronski_max_size: usize,
    /// Algebra sizes for the random-formula suites.
    pub fuzz_max_size: usize,
    pub fuzz_formulas: usize,
    pub preservation_max_size: usize,
    pub preservation_formulas: usize,
    /// Rieger-Nishimura levels classified by the appendix suite.
    pub inventory_levels: usize,
    pub glivenko_samples: usize,
    pub soundness_samples: usize,
    pub monotonicity_samples: usize,
    /// Algebra files validated before the suites run.
    pub fixtures: Vec<PathBuf>,
}

impl Default for LabConfig {
    fn default() -> Self {
        LabConfig {
            seed: 0xC41,
            core_max_size: 10,
            wronski_max_size: 8,
            fuzz_max_size: 6,
            fuzz_formulas: 200,
            preservation_max_size: 6,
            preservation_formulas: 40,
            inventory_levels: 8,
            glivenko_samples: 500,
            soundness_samples: 200,
            monotonicity_samples: 100,
            fixtures: Vec::new(),
        }
    }
}

impl LabConfig {
    /// The default configuration with every algebra size bound set to `n`.
    pub fn with_max_size(mut self, n: usize) -> Self {
        assert!(n >= 1, "size bounds must be positive");
        self.core_max_size = n;
        self.wronski_max_size = n;
        self.fuzz_max_size = n;
        self.preservation_max_size = n;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// ⊥, p, ~p, ~~p, p | ~p, T.
pub fn canonical_signatures() -> Vec<ChiSignature> {
    CanonicalClass::ALL
        .iter()
        .map(|c| classify_univariate(&c.formula()).expect("canonical formulas classify"))
        .collect()
}

/// The canonical six plus `~~p -> p`.
pub fn extended_signatures() -> Vec<ChiSignature> {
    let mut sigs = canonical_signatures();
    sigs.push(classify_univariate(&parse("~~p -> p").expect("fixed")).expect("classifies"));
    sigs
}

pub(crate) fn chi_label(sig: &ChiSignature) -> String {
    sig.chi.to_string()
}

pub(crate) fn fixed(text: &str) -> Formula {
    parse(text).expect("fixed formula")
}

pub fn suite_appendix(config: &LabConfig) -> SuiteReport {
    let start = Instant::now();
    let mut report = verify_appendix();
    report.absorb(verify_inventory(config.inventory_levels));
    report.elapsed = start.elapsed();
    report
}

/// Load every configured fixture; a file that fails validation is a failed
/// plumbing check carrying the validation error.
pub fn suite_fixtures(config: &LabConfig) -> SuiteReport {
    let start = Instant::now();
    let mut report = SuiteReport::new("fixtures");
    for path in &config.fixtures {
        let id = format!("load/{}", path.display());
        match AlgebraFile::load(path) {
            Ok(h) => report.check(
                id,
                "plumbing",
                h.satisfies_residuation(),
                format!("{} elements", h.size()),
            ),
            Err(e) => report.check(id, "plumbing", false, e.to_string()),
        }
    }
    report.elapsed = start.elapsed();
    report
}

/// Run one suite by name.
pub fn run_suite(name: &str, config: &LabConfig) -> Option<SuiteReport> {
    let report = match name {
        "appendix" => suite_appendix(config),
        "cores" => suite_cores(config.core_max_size),
        "preservation" => suite_preservation(config),
        "core-subalgebra" => suite_core_subalgebra(config),
        "wronski" => suite_wronski(config),
        "order" => suite_order(config.core_max_size),
        "dense" => suite_dense(config.core_max_size),
        "substitution" => suite_substitution(config),
        "calibration" => suite_calibration(config),
        _ => return None,
    };
    Some(report)
}

/// Every suite in [`SUITE_NAMES`] order, preceded by fixture validation
/// when fixtures are configured.
pub fn run_all(config: &LabConfig) -> Vec<SuiteReport> {
    let mut reports = Vec::new();
    if !config.fixtures.is_empty() {
        reports.push(suite_fixtures(config));
    }
    for name in SUITE_NAMES {
        reports.push(run_suite(name, config).expect("known suite"));
    }
    reports
}

/// Concatenation of several reports under one name.
pub fn merge(name: &str, reports: &[SuiteReport]) -> SuiteReport {
    let mut all = SuiteReport::new(name);
    for r in reports {
        all.absorb(r.clone());
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass_and_are_deterministic() {
        let config = LabConfig::default().with_max_size(4);
        for name in ["cores", "wronski", "dense", "core-subalgebra", "preservation"] {
            let a = run_suite(name, &config).unwrap();
            let b = run_suite(name, &config).unwrap();
            assert!(a.passed(), "{name}: {:?}", a.failures().next());
            assert_eq!(a.to_jsonl(), b.to_jsonl());
        }
        assert!(run_suite("nonexistent", &config).is_none());
    }

    #[test]
    fn missing_fixture_fails_with_message() {
        let mut config = LabConfig::default();
        config.fixtures.push(PathBuf::from("/definitely/missing.json"));
        let report = suite_fixtures(&config);
        assert!(!report.passed());
        assert!(report.checks[0].detail.contains("missing.json"));
    }
}
