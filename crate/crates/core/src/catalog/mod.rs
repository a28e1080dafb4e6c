//! Identity catalog: closed-form equalities checked as two independently computed
//! sides plus a tolerance, run as a batch with a serializable report.
//!
//! Printed forms that turn out to be wrong are kept and fail; a corrected companion
//! (id suffix `c`) sits next to each. Parametrized identities register one entry per
//! parameter value, with the value in brackets after the family id.

mod entries;
mod support;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use rug::Float;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::precision::{pow10, sci, PrecisionContext};

pub use entries::builtin_entries;

/// Classification used by `verify --tag`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tag {
    Quadrature,
    Series,
    DoubleIntegral,
    Limit,
    /// Excluded from `--all` unless slow entries are requested.
    Slow,
}

impl Tag {
    pub const ALL: [Tag; 5] = [Tag::Quadrature, Tag::Series, Tag::DoubleIntegral, Tag::Limit, Tag::Slow];

    pub fn label(self) -> &'static str {
        match self {
            Tag::Quadrature => "quadrature",
            Tag::Series => "series",
            Tag::DoubleIntegral => "double_integral",
            Tag::Limit => "limit",
            Tag::Slow => "slow",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Tag::ALL
            .into_iter()
            .find(|t| t.label() == s)
            .ok_or_else(|| Error::UnknownSelector(format!("tag {s:?}")))
    }
}

type SideFn = Arc<dyn Fn(&PrecisionContext) -> Result<Float> + Send + Sync>;

/// One side of an identity: a route label and a deferred computation.
#[derive(Clone)]
pub struct Side {
    pub route: &'static str,
    eval: SideFn,
}

impl Side {
    pub fn new(route: &'static str, f: impl Fn(&PrecisionContext) -> Result<Float> + Send + Sync + 'static) -> Self {
        Side { route, eval: Arc::new(f) }
    }

    pub fn eval(&self, ctx: &PrecisionContext) -> Result<Float> {
        (self.eval)(ctx)
    }
}

impl fmt::Debug for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Side").field("route", &self.route).finish()
    }
}

/// Accepted |lhs − rhs|.
#[derive(Debug, Clone, PartialEq)]
pub enum Tolerance {
    /// 10^{−(target − 5)} from the context.
    Default,
    /// 10^{−digits}, with the reason it is looser or fixed.
    Fixed { digits: i32, why: &'static str },
}

impl Tolerance {
    pub fn value(&self, ctx: &PrecisionContext) -> Float {
        match self {
            Tolerance::Default => ctx.identity_tolerance(),
            Tolerance::Fixed { digits, .. } => pow10(ctx.prec(), -digits),
        }
    }
}

#[derive(Debug, Clone)]
pub struct IdentityEntry {
    pub id: String,
    pub description: String,
    /// Neutral label naming the result being checked.
    pub paper_anchor: &'static str,
    pub lhs: Side,
    pub rhs: Side,
    pub tolerance: Tolerance,
    pub tags: Vec<Tag>,
    /// Evaluate at no more than this many target digits (costly 2-D quadrature).
    pub max_target: Option<u32>,
    /// Known discrepancy between the printed form and the numbers, if any.
    pub note: Option<&'static str>,
}

impl IdentityEntry {
    pub fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        paper_anchor: &'static str,
        tags: &[Tag],
        lhs: Side,
        rhs: Side,
    ) -> Self {
        IdentityEntry {
            id: id.into(),
            description: description.into(),
            paper_anchor,
            lhs,
            rhs,
            tolerance: Tolerance::Default,
            tags: tags.to_vec(),
            max_target: None,
            note: None,
        }
    }

    pub fn tolerance(mut self, digits: i32, why: &'static str) -> Self {
        self.tolerance = Tolerance::Fixed { digits, why };
        self
    }

    pub fn max_target(mut self, digits: u32) -> Self {
        self.max_target = Some(digits);
        self
    }

    pub fn note(mut self, note: &'static str) -> Self {
        self.note = Some(note);
        self
    }

    pub fn has_tag(&self, tag: Tag) -> bool {
        self.tags.contains(&tag)
    }

    /// Family id: the id without a bracketed parameter.
    pub fn family(&self) -> &str {
        self.id.split('[').next().unwrap_or(&self.id)
    }

    fn context(&self, ctx: &PrecisionContext) -> PrecisionContext {
        match self.max_target {
            Some(m) if ctx.target_digits() > m => PrecisionContext::for_target(m),
            _ => *ctx,
        }
    }
}

/// Audited set of entries in registration order.
#[derive(Debug, Clone)]
pub struct Catalog {
    entries: Vec<IdentityEntry>,
}

impl Catalog {
    /// Rejects duplicate ids, empty anchors and entries whose two sides share a route.
    pub fn new(entries: Vec<IdentityEntry>) -> Result<Self> {
        let mut seen = HashSet::new();
        for e in &entries {
            if !seen.insert(e.id.clone()) {
                return Err(Error::Registry(format!("duplicate id {}", e.id)));
            }
            if e.paper_anchor.trim().is_empty() {
                return Err(Error::Registry(format!("{} has no anchor", e.id)));
            }
            if e.lhs.route == e.rhs.route {
                return Err(Error::Registry(format!("{}: both sides use route {}", e.id, e.lhs.route)));
            }
        }
        Ok(Catalog { entries })
    }

    pub fn builtin() -> Self {
        Catalog::new(builtin_entries()).expect("builtin catalog passes its own audit")
    }

    pub fn entries(&self) -> &[IdentityEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries chosen by `filter`, in registration order, and the number skipped as slow.
    pub fn select(&self, filter: &Filter) -> Result<(Vec<&IdentityEntry>, usize)> {
        let chosen: Vec<&IdentityEntry> = match &filter.selector {
            Selector::All => self.entries.iter().collect(),
            Selector::Tag(t) => self.entries.iter().filter(|e| e.has_tag(*t)).collect(),
            Selector::Id(id) => {
                let exact: Vec<_> = self.entries.iter().filter(|e| &e.id == id).collect();
                if exact.is_empty() {
                    self.entries.iter().filter(|e| e.family() == id).collect()
                } else {
                    exact
                }
            }
        };
        if chosen.is_empty() {
            return Err(Error::UnknownSelector(filter.selector.to_string()));
        }
        let drop_slow = matches!(filter.selector, Selector::All) && !filter.include_slow;
        if !drop_slow {
            return Ok((chosen, 0));
        }
        let total = chosen.len();
        let kept: Vec<_> = chosen.into_iter().filter(|e| !e.has_tag(Tag::Slow)).collect();
        let skipped = total - kept.len();
        Ok((kept, skipped))
    }
}

/// Which entries to run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selector {
    All,
    Tag(Tag),
    /// Exact id, or a family id matching all its parameter instances.
    Id(String),
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::All => f.write_str("all"),
            Selector::Tag(t) => write!(f, "tag:{t}"),
            Selector::Id(id) => f.write_str(id),
        }
    }
}

impl FromStr for Selector {
    type Err = Error;

    /// `all`, `tag:<name>` or an id.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::UnknownSelector(String::new()));
        }
        if s == "all" {
            return Ok(Selector::All);
        }
        if let Some(t) = s.strip_prefix("tag:") {
            return Ok(Selector::Tag(t.parse()?));
        }
        Ok(Selector::Id(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filter {
    pub selector: Selector,
    /// Run slow-tagged entries under `Selector::All`. Tag and id selectors always run them.
    pub include_slow: bool,
}

impl Filter {
    pub fn all() -> Self {
        Filter { selector: Selector::All, include_slow: false }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(Filter { selector: s.parse()?, include_slow: false })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportContext {
    pub digits: u32,
}

/// Outcome of one entry. Numbers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryOutcome {
    pub id: String,
    pub paper_anchor: String,
    pub description: String,
    pub lhs_route: String,
    pub rhs_route: String,
    pub lhs: String,
    pub rhs: String,
    pub abs_error: String,
    pub tolerance: String,
    pub pass: bool,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// `total` counts selected entries including skipped ones: total = passed + failed + skipped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub context: ReportContext,
    pub entries: Vec<EntryOutcome>,
    pub summary: Summary,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn outcome(&self, id: &str) -> Option<&EntryOutcome> {
        self.entries.iter().find(|e| e.id == id)
    }
}

fn run_entry(e: &IdentityEntry, ctx: &PrecisionContext) -> EntryOutcome {
    let c = e.context(ctx);
    let digits = c.target_digits() as usize + 5;
    let start = Instant::now();
    let (lhs, rhs) = rayon::join(|| e.lhs.eval(&c), || e.rhs.eval(&c));
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let tol = e.tolerance.value(&c);
    let show = |r: &Result<Float>| match r {
        Ok(v) => sci(v, digits),
        Err(_) => "error".to_string(),
    };
    let (abs_error, pass, error) = match (&lhs, &rhs) {
        (Ok(a), Ok(b)) => {
            let d = Float::with_val(c.prec(), a - b).abs();
            let pass = d <= tol;
            (sci(&d, 3), pass, None)
        }
        (l, r) => {
            let msg = [("lhs", l), ("rhs", r)]
                .iter()
                .filter_map(|(side, res)| res.as_ref().err().map(|e| format!("{side}: {e}")))
                .collect::<Vec<_>>()
                .join("; ");
            ("n/a".to_string(), false, Some(msg))
        }
    };
    EntryOutcome {
        id: e.id.clone(),
        paper_anchor: e.paper_anchor.to_string(),
        description: e.description.clone(),
        lhs_route: e.lhs.route.to_string(),
        rhs_route: e.rhs.route.to_string(),
        lhs: show(&lhs),
        rhs: show(&rhs),
        abs_error,
        tolerance: sci(&tol, 1),
        pass,
        elapsed_ms,
        error,
        note: e.note.map(str::to_string),
    }
}

/// Runs the selected entries concurrently. A failing or erroring entry never stops the
/// batch; the report keeps registration order.
pub fn run_catalog(catalog: &Catalog, filter: &Filter, ctx: &PrecisionContext) -> Result<IdentityReport> {
    let (chosen, skipped) = catalog.select(filter)?;
    let entries: Vec<EntryOutcome> = chosen.par_iter().map(|e| run_entry(e, ctx)).collect();
    let passed = entries.iter().filter(|o| o.pass).count();
    let summary = Summary { total: entries.len() + skipped, passed, failed: entries.len() - passed, skipped };
    Ok(IdentityReport { context: ReportContext { digits: ctx.target_digits() }, entries, summary })
}
