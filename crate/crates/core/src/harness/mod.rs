//! Executable checks over a catalog of rings.
//!
//! Each registered check states one claim about the ring classes and
//! evaluates it on every applicable catalog ring (or pair of rings), on
//! rings derived from catalog rings within the size budget, or both. A check
//! whose hypotheses hold nowhere is skipped; a failing check carries a
//! counterexample whose facts can be recomputed from ring specs alone.

mod catalog;
mod checks;
mod replay;

pub use catalog::{Catalog, CatalogError, CatalogRing, EntryReport, EntryStatus, DEFAULT_CATALOG};
pub use replay::{evaluate_property, replay, resolve, ReplayError};

use std::collections::HashMap;
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::construct::GroupRing;
use crate::{ElementId, Limits, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

/// A recomputable observation: `property` of `ring` (or of `element` in it)
/// evaluated to `observed`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub ring: String,
    pub element: Option<ElementId>,
    pub property: String,
    pub observed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Catalog rings the failing instance was formed from.
    pub inputs: Vec<String>,
    /// Ring on which the claim failed.
    pub ring: String,
    pub elements: Vec<ElementId>,
    pub facts: Vec<Fact>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckVerdict {
    pub id: &'static str,
    pub ring: String,
    pub outcome: Outcome,
    pub detail: String,
    pub counterexample: Option<Counterexample>,
    pub runtime_ms: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    /// Evaluated once per catalog ring.
    Ring,
    /// Evaluated once per unordered pair of distinct catalog rings.
    Pair,
}

type RingBody = fn(&Context, &CatalogRing, &mut Run) -> Result<(), Counterexample>;
type PairBody = fn(&Context, &CatalogRing, &CatalogRing, &mut Run) -> Result<(), Counterexample>;

#[derive(Clone, Copy)]
pub(crate) enum Body {
    Ring(RingBody),
    Pair(PairBody),
}

#[derive(Clone, Copy, Serialize)]
pub struct CheckDescriptor {
    pub id: &'static str,
    /// The claim, stated on finite rings.
    pub statement: &'static str,
    /// When the check applies.
    pub applicability: &'static str,
    pub scope: Scope,
    #[serde(skip)]
    pub(crate) body: Body,
}

impl std::fmt::Debug for CheckDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckDescriptor").field("id", &self.id).finish()
    }
}

pub fn registry() -> &'static [CheckDescriptor] {
    checks::REGISTRY
}

pub fn descriptor(id: &str) -> Option<&'static CheckDescriptor> {
    registry().iter().find(|c| c.id == id)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown check `{0}`")]
pub struct UnknownCheck(pub String);

/// Accumulates the instances a check body evaluated.
#[derive(Debug, Default)]
pub struct Run {
    instances: Vec<String>,
    skipped: Vec<String>,
}

impl Run {
    pub(crate) fn instance(&mut self, what: impl Into<String>) {
        self.instances.push(what.into());
    }

    pub(crate) fn skipped(&mut self, why: impl Into<String>) {
        self.skipped.push(why.into());
    }
}

/// Catalog rings plus a shared cache of derived rings.
pub struct Context {
    pub rings: Vec<CatalogRing>,
    pub budget: usize,
    pub pair_budget: usize,
    pub limits: Limits,
    derived: Mutex<HashMap<String, Ring>>,
    group_rings: Mutex<HashMap<String, GroupRing>>,
}

impl Context {
    pub fn new(rings: Vec<CatalogRing>, budget: usize, pair_budget: usize, limits: Limits) -> Self {
        Context {
            rings,
            budget,
            pair_budget,
            limits,
            derived: Mutex::new(HashMap::new()),
            group_rings: Mutex::new(HashMap::new()),
        }
    }

    /// Builds (or reuses) a derived ring. `Ok(None)` when `order` is above
    /// `budget`; construction errors become counterexamples.
    pub(crate) fn derive(
        &self,
        label: &str,
        order: u128,
        budget: usize,
        inputs: &[&str],
        build: impl FnOnce() -> crate::Result<Ring>,
    ) -> Result<Option<Ring>, Counterexample> {
        if order > budget as u128 {
            return Ok(None);
        }
        if let Some(r) = self.derived.lock().unwrap().get(label) {
            return Ok(Some(r.clone()));
        }
        let ring = build().map_err(|e| construction_failure(label, inputs, &e.to_string()))?;
        self.derived
            .lock()
            .unwrap()
            .entry(label.to_string())
            .or_insert_with(|| ring.clone());
        Ok(Some(ring))
    }

    pub(crate) fn derive_group_ring(
        &self,
        label: &str,
        order: u128,
        inputs: &[&str],
        build: impl FnOnce() -> crate::Result<GroupRing>,
    ) -> Result<Option<GroupRing>, Counterexample> {
        if order > self.budget as u128 {
            return Ok(None);
        }
        if let Some(g) = self.group_rings.lock().unwrap().get(label) {
            return Ok(Some(g.clone()));
        }
        let gr = build().map_err(|e| construction_failure(label, inputs, &e.to_string()))?;
        self.group_rings
            .lock()
            .unwrap()
            .entry(label.to_string())
            .or_insert_with(|| gr.clone());
        Ok(Some(gr))
    }
}

fn construction_failure(label: &str, inputs: &[&str], error: &str) -> Counterexample {
    Counterexample {
        inputs: inputs.iter().map(|s| s.to_string()).collect(),
        ring: label.to_string(),
        elements: Vec::new(),
        facts: Vec::new(),
        detail: format!("construction failed: {error}"),
    }
}

fn finish(
    id: &'static str,
    ring: String,
    result: Result<(), Counterexample>,
    run: Run,
    start: Instant,
) -> CheckVerdict {
    let runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    let (outcome, detail, counterexample) = match result {
        Err(cx) => (Outcome::Fail, cx.detail.clone(), Some(cx)),
        Ok(()) if run.instances.is_empty() => {
            let why = if run.skipped.is_empty() {
                "hypotheses do not apply".to_string()
            } else {
                run.skipped.join("; ")
            };
            (Outcome::Skip, why, None)
        }
        Ok(()) => (
            Outcome::Pass,
            format!("{} instance(s): {}", run.instances.len(), run.instances.join("; ")),
            None,
        ),
    };
    CheckVerdict {
        id,
        ring,
        outcome,
        detail,
        counterexample,
        runtime_ms,
    }
}

fn skip(id: &'static str, ring: String, why: &str) -> CheckVerdict {
    CheckVerdict {
        id,
        ring,
        outcome: Outcome::Skip,
        detail: why.to_string(),
        counterexample: None,
        runtime_ms: 0.0,
    }
}

enum Task<'a> {
    Ring(&'a CheckDescriptor, usize),
    Pair(&'a CheckDescriptor, usize, usize),
    NoPairs(&'a CheckDescriptor),
}

fn tasks<'a>(ctx: &Context, checks: &[&'a CheckDescriptor]) -> Vec<Task<'a>> {
    let n = ctx.rings.len();
    let mut out = Vec::new();
    for &c in checks {
        match c.scope {
            Scope::Ring => out.extend((0..n).map(|i| Task::Ring(c, i))),
            Scope::Pair if n < 2 => out.push(Task::NoPairs(c)),
            Scope::Pair => {
                for i in 0..n {
                    for j in i + 1..n {
                        out.push(Task::Pair(c, i, j));
                    }
                }
            }
        }
    }
    out
}

fn run_task(ctx: &Context, task: &Task) -> CheckVerdict {
    let start = Instant::now();
    let mut run = Run::default();
    match *task {
        Task::Ring(c, i) => {
            let r = &ctx.rings[i];
            let Body::Ring(body) = c.body else { unreachable!() };
            let result = body(ctx, r, &mut run);
            finish(c.id, r.label.clone(), result, run, start)
        }
        Task::Pair(c, i, j) => {
            let (a, b) = (&ctx.rings[i], &ctx.rings[j]);
            let Body::Pair(body) = c.body else { unreachable!() };
            let result = body(ctx, a, b, &mut run);
            finish(c.id, format!("{} , {}", a.label, b.label), result, run, start)
        }
        Task::NoPairs(c) => skip(c.id, String::new(), "needs at least two catalog rings to form pairs"),
    }
}

/// Runs the given checks over the context, in registry-then-catalog order.
pub fn run_checks(ctx: &Context, ids: &[&str]) -> Result<Vec<CheckVerdict>, UnknownCheck> {
    let checks = ids
        .iter()
        .map(|id| descriptor(id).ok_or_else(|| UnknownCheck(id.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let tasks = tasks(ctx, &checks);
    Ok(tasks.par_iter().map(|t| run_task(ctx, t)).collect())
}

/// Runs one check over the context.
pub fn run_check(ctx: &Context, id: &str) -> Result<Vec<CheckVerdict>, UnknownCheck> {
    run_checks(ctx, &[id])
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub budget: usize,
    pub pair_budget: usize,
    pub catalog: Vec<EntryReport>,
    pub verdicts: Vec<CheckVerdict>,
    pub counts: Counts,
    pub exit_code: i32,
}

impl SuiteReport {
    /// Verdicts of one check.
    pub fn verdicts_of<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a CheckVerdict> + 'a {
        self.verdicts.iter().filter(move |v| v.id == id)
    }

    /// `pass` / `fail` / `skip` summary per check id, in registry order.
    pub fn per_check(&self) -> Vec<(&'static str, Counts)> {
        registry()
            .iter()
            .filter(|c| self.verdicts.iter().any(|v| v.id == c.id))
            .map(|c| (c.id, count(self.verdicts_of(c.id))))
            .collect()
    }
}

fn count<'a>(verdicts: impl Iterator<Item = &'a CheckVerdict>) -> Counts {
    let mut counts = Counts::default();
    for v in verdicts {
        match v.outcome {
            Outcome::Pass => counts.pass += 1,
            Outcome::Fail => counts.fail += 1,
            Outcome::Skip => counts.skip += 1,
        }
    }
    counts
}

/// Builds and audits catalog rings. Entries above the budget are gated.
pub fn prepare(catalog: &Catalog) -> (Vec<EntryReport>, Context) {
    let limits = catalog.limits();
    let built: Vec<(EntryReport, Option<CatalogRing>)> = catalog
        .specs
        .par_iter()
        .map(|spec| {
            let text = spec.to_string();
            if spec.order_bound() > catalog.budget as u128 {
                let report = EntryReport {
                    spec: text,
                    status: EntryStatus::Gated,
                    order: None,
                    audit_exhaustive: None,
                    detail: Some(format!(
                        "order bound {} exceeds budget {}",
                        spec.order_bound(),
                        catalog.budget
                    )),
                };
                return (report, None);
            }
            match spec.build(&limits) {
                Ok(ring) => audit_entry(text, ring),
                Err(e) => (
                    EntryReport {
                        spec: text,
                        status: EntryStatus::Error,
                        order: None,
                        audit_exhaustive: None,
                        detail: Some(e.to_string()),
                    },
                    None,
                ),
            }
        })
        .collect();
    let mut reports = Vec::new();
    let mut rings = Vec::new();
    for (report, ring) in built {
        reports.push(report);
        rings.extend(ring);
    }
    let ctx = Context::new(rings, catalog.budget, catalog.pair_budget, limits);
    (reports, ctx)
}

/// Audits an already-built ring for inclusion in a context.
pub fn audit_entry(label: String, ring: Ring) -> (EntryReport, Option<CatalogRing>) {
    let audit = ring.audit();
    let mut report = EntryReport {
        spec: label.clone(),
        status: EntryStatus::Built,
        order: Some(ring.order()),
        audit_exhaustive: Some(audit.exhaustive),
        detail: None,
    };
    match audit.violation {
        None => (report, Some(CatalogRing { label, ring })),
        Some(v) => {
            report.status = EntryStatus::AuditFailed;
            report.detail = Some(format!(
                "ring axiom `{}` fails at {:?}; checks on this ring are skipped",
                v.law,
                v.elements.iter().map(|e| e.0).collect::<Vec<_>>()
            ));
            (report, None)
        }
    }
}

/// Runs the checks `ids` (all when empty) and assembles the report.
pub fn suite_from(entries: Vec<EntryReport>, ctx: &Context, ids: &[&str]) -> Result<SuiteReport, UnknownCheck> {
    let all: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let ids = if ids.is_empty() { &all[..] } else { ids };
    let mut verdicts = run_checks(ctx, ids)?;
    for e in entries.iter().filter(|e| e.status == EntryStatus::AuditFailed) {
        for id in ids {
            verdicts.push(skip(
                descriptor(id).map_or("", |d| d.id),
                e.spec.clone(),
                "ring axiom audit failed",
            ));
        }
    }
    let counts = count(verdicts.iter());
    let exit_code = if entries.iter().any(|e| e.status == EntryStatus::Error) {
        2
    } else if counts.fail > 0 || entries.iter().any(|e| e.status == EntryStatus::AuditFailed) {
        1
    } else {
        0
    };
    Ok(SuiteReport {
        budget: ctx.budget,
        pair_budget: ctx.pair_budget,
        catalog: entries,
        verdicts,
        counts,
        exit_code,
    })
}

/// All registered checks over a catalog.
pub fn run_suite(catalog: &Catalog) -> SuiteReport {
    let (entries, ctx) = prepare(catalog);
    suite_from(entries, &ctx, &[]).expect("registry ids are known")
}
