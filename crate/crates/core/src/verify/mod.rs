//! The identity catalog and its runner.
//!
//! Every displayed identity of the underlying theory is a named catalog
//! entry.  An entry expands into concrete parameter instances, and each
//! instance is checked exactly (denominator-cleared where schedules apply;
//! never a floating comparison).
//!
//! Corrected-variant protocol: when a printed statement is internally
//! inconsistent, the entry first evaluates the statement as printed, then a
//! single documented minimal correction, and reports
//! `fail-as-printed-pass-corrected` when only the corrected form holds.
//! Corrections are never substituted silently; the suite is an erratum
//! detector as much as a verifier.

mod checks;

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use thiserror::Error;

use crate::pqcore::SymbolTable;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown identity id '{0}'")]
    UnknownId(String),
    #[error("parameters {1} are out of range for '{0}'")]
    ParamsOutOfRange(String, Params),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
    FailAsPrintedPassCorrected,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::FailAsPrintedPassCorrected => "fail-as-printed-pass-corrected",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParamVal {
    Int(i64),
    Tag(&'static str),
}

impl fmt::Display for ParamVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamVal::Int(i) => write!(f, "{}", i),
            ParamVal::Tag(s) => write!(f, "{}", s),
        }
    }
}

/// Ordered parameter list of a check instance.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Params(pub Vec<(&'static str, ParamVal)>);

impl Params {
    pub fn new() -> Self {
        Params(Vec::new())
    }

    pub fn with(mut self, key: &'static str, v: i64) -> Self {
        self.0.push((key, ParamVal::Int(v)));
        self
    }

    pub fn with_tag(mut self, key: &'static str, v: &'static str) -> Self {
        self.0.push((key, ParamVal::Tag(v)));
        self
    }

    pub fn int(&self, key: &str) -> i64 {
        match self.0.iter().find(|(k, _)| *k == key) {
            Some((_, ParamVal::Int(i))) => *i,
            _ => panic!("missing integer parameter '{}'", key),
        }
    }

    pub fn tag(&self, key: &str) -> &'static str {
        match self.0.iter().find(|(k, _)| *k == key) {
            Some((_, ParamVal::Tag(s))) => s,
            _ => panic!("missing tag parameter '{}'", key),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}={}", k, v)?;
        }
        write!(f, ")")
    }
}

/// Result of one instance before timing is attached.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Outcome {
    pub status: Status,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome {
            status: Status::Pass,
            witness: None,
            note: None,
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct CheckReport {
    pub id: String,
    pub params: Params,
    pub status: Status,
    pub witness: Option<Witness>,
    pub note: Option<String>,
    pub ms: u128,
}

/// Suite-level parameters.  Entries derive their own instance ranges from
/// these, clamped to the validity ranges they were stated for.
#[derive(Clone, Copy, Debug)]
pub struct SuiteParams {
    /// Cap on family indices m, n.
    pub max_mn: u32,
    /// Base truncation order for series workspaces.
    pub order: i64,
    /// Degree cap for the ratio variable r.
    pub rorder: i64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            max_mn: 6,
            order: 10,
            rorder: 10,
        }
    }
}

/// Per-worker check context; the symbol table is confined to one worker.
pub struct Ctx {
    pub tbl: SymbolTable,
    pub suite: SuiteParams,
}

impl Ctx {
    pub fn new(suite: SuiteParams) -> Self {
        Ctx {
            tbl: SymbolTable::new(),
            suite,
        }
    }
}

pub struct CatalogEntry {
    pub id: &'static str,
    /// Human-readable source anchor with its verbatim quote.
    pub anchor: &'static str,
    pub instances: fn(&SuiteParams) -> Vec<Params>,
    pub run: fn(&Ctx, &Params) -> Outcome,
}

pub fn catalog() -> &'static [CatalogEntry] {
    checks::CATALOG
}

pub fn find_entry(id: &str) -> Option<&'static CatalogEntry> {
    checks::CATALOG.iter().find(|e| e.id == id)
}

/// Run a single catalog check with explicit parameters.
pub fn run_check(id: &str, params: &Params, suite: &SuiteParams) -> Result<CheckReport, VerifyError> {
    let entry = find_entry(id).ok_or_else(|| VerifyError::UnknownId(id.to_string()))?;
    if !(entry.instances)(suite).iter().any(|p| p == params) {
        return Err(VerifyError::ParamsOutOfRange(id.to_string(), params.clone()));
    }
    let ctx = Ctx::new(*suite);
    Ok(run_instance(&ctx, entry, params))
}

fn run_instance(ctx: &Ctx, entry: &CatalogEntry, params: &Params) -> CheckReport {
    let start = Instant::now();
    let outcome = (entry.run)(ctx, params);
    CheckReport {
        id: entry.id.to_string(),
        params: params.clone(),
        status: outcome.status,
        witness: outcome.witness,
        note: outcome.note,
        ms: start.elapsed().as_millis(),
    }
}

/// Run the whole catalog (optionally filtered by id substring) with the
/// given worker count.  The report order is the catalog order and is
/// independent of `jobs`.
pub fn run_suite(suite: &SuiteParams, filter: Option<&str>, jobs: usize) -> Vec<CheckReport> {
    let work: Vec<(usize, &'static CatalogEntry, Params)> = {
        let mut acc = Vec::new();
        for entry in checks::CATALOG {
            if let Some(f) = filter {
                if !entry.id.contains(f) {
                    continue;
                }
            }
            for params in (entry.instances)(suite) {
                let idx = acc.len();
                acc.push((idx, entry, params));
            }
        }
        acc
    };
    let jobs = jobs.max(1);
    let results: Mutex<Vec<Option<CheckReport>>> = Mutex::new(vec![None; work.len()]);
    let cursor = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| {
                let ctx = Ctx::new(*suite);
                loop {
                    let i = cursor.fetch_add(1, Ordering::Relaxed);
                    if i >= work.len() {
                        break;
                    }
                    let (idx, entry, params) = &work[i];
                    let report = run_instance(&ctx, entry, params);
                    results.lock().unwrap()[*idx] = Some(report);
                }
            });
        }
    });
    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every scheduled instance produces a report"))
        .collect()
}

/// Exit-status rule: only a hard `fail` fails the run (`--strict` also
/// promotes fail-as-printed entries).
pub fn suite_failed(reports: &[CheckReport], strict: bool) -> bool {
    reports.iter().any(|r| {
        r.status == Status::Fail
            || (strict && r.status == Status::FailAsPrintedPassCorrected)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_id_is_rejected() {
        let err = run_check("no.such.check", &Params::new(), &SuiteParams::default());
        assert!(matches!(err, Err(VerifyError::UnknownId(_))));
    }

    #[test]
    fn out_of_range_params_are_rejected() {
        let params = Params::new().with("m", 99).with("n", 0);
        let err = run_check("H.lower.z", &params, &SuiteParams::default());
        assert!(matches!(err, Err(VerifyError::ParamsOutOfRange(..))));
    }

    #[test]
    fn single_check_runs() {
        let params = Params::new().with("m", 2).with("n", 1);
        let rep = run_check("H.lower.z", &params, &SuiteParams::default()).unwrap();
        assert_eq!(rep.status, Status::Pass);
    }

    #[test]
    fn parallel_run_equals_serial_run() {
        let suite = SuiteParams {
            max_mn: 2,
            order: 6,
            rorder: 6,
        };
        let serial = run_suite(&suite, Some("H.lower"), 1);
        let parallel = run_suite(&suite, Some("H.lower"), 4);
        assert_eq!(serial.len(), parallel.len());
        for (a, b) in serial.iter().zip(parallel.iter()) {
            assert_eq!(a.id, b.id);
            assert_eq!(a.params, b.params);
            assert_eq!(a.status, b.status);
            assert_eq!(a.witness, b.witness);
        }
    }

    #[test]
    fn desk_scale_suite_has_no_hard_failures() {
        let suite = SuiteParams {
            max_mn: 2,
            order: 6,
            rorder: 6,
        };
        let reports = run_suite(&suite, None, 2);
        assert!(!reports.is_empty());
        for r in &reports {
            assert_ne!(
                r.status,
                Status::Fail,
                "{} {} failed: {:?} {:?}",
                r.id,
                r.params,
                r.witness,
                r.note
            );
        }
        assert!(!suite_failed(&reports, false));
    }
}
