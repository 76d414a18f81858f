//! Command line plumbing: field flags, page selection, JSON documents, charts and tables,
//! and the verification suites.

pub mod chart;
pub mod document;
pub mod suites;
pub mod table;

use crate::diffrules::{d1_ruleset, higher_ruleset, RuleError};
use crate::emcoeffs::{FieldError, FieldId};
use crate::gradedalg::Window;
use crate::sliceassembly::{e1_page, Page, Spectrum};
use crate::ssengine::engine::e2;
use crate::ssengine::{assemble_pi, extension_rules, run, EngineError, PiCell, PiTable, RunStatus};

pub use chart::{render_svg, ChartSpec, Glyph};
pub use document::{PageDocument, SCHEMA};
pub use table::{page_markdown, pi_markdown};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("--field {0} needs --q")]
    MissingQ(String),
    #[error("--q and --support only apply to fq, qq and q")]
    StrayFlag,
    #[error("unknown field {0:?}; expected c, fq, qq, q2, r or q")]
    UnknownField(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("empty range {0}..{1}")]
    EmptyRange(i32, i32),
    #[error("E∞ of {0} is not certified: {1}")]
    NotCertified(String, String),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Rule(#[from] RuleError),
}

pub fn field_from_flags(kind: &str, q: Option<u64>, support: &[u32]) -> Result<FieldId, CliError> {
    let plain = |f: FieldId| if q.is_some() || !support.is_empty() { Err(CliError::StrayFlag) } else { Ok(f) };
    match kind {
        "c" => plain(FieldId::AlgClosed),
        "q2" => plain(FieldId::Q2),
        "r" => plain(FieldId::R),
        "fq" => Ok(FieldId::fq(q.ok_or_else(|| CliError::MissingQ(kind.into()))?)?),
        "qq" => Ok(FieldId::qq(q.ok_or_else(|| CliError::MissingQ(kind.into()))?)?),
        "q" if q.is_some() => Err(CliError::StrayFlag),
        "q" => Ok(FieldId::rationals(support)?),
        other => Err(CliError::UnknownField(other.into())),
    }
}

/// Parse `a..b` (inclusive); a single integer is a one-point range.
pub fn parse_range(text: &str) -> Result<(i32, i32), String> {
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a.trim().parse::<i32>(), b.trim().parse::<i32>()),
        None => (text.trim().parse::<i32>(), text.trim().parse::<i32>()),
    };
    match (a, b) {
        (Ok(a), Ok(b)) => Ok((a, b)),
        _ => Err(format!("expected a..b, got {text:?}")),
    }
}

pub fn window(s: (i32, i32), f: (i32, i32), w: (i32, i32)) -> Result<Window, CliError> {
    for r in [s, f, w] {
        if r.0 > r.1 {
            return Err(CliError::EmptyRange(r.0, r.1));
        }
    }
    Ok(Window::new(s, f, w))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PageSel {
    E1,
    E2,
    Infinity,
}

#[derive(Clone, Debug)]
pub struct Computed {
    pub page: Page,
    pub document: PageDocument,
    /// homotopy groups, for E∞ only
    pub pi: Option<PiTable>,
}

pub fn compute(field: &FieldId, spectrum: Spectrum, sel: PageSel, w: Window, rule_file: Option<&str>) -> Result<Computed, CliError> {
    let d1: Vec<String> = d1_ruleset(field, spectrum).rules.iter().map(|r| r.describe()).collect();
    match sel {
        PageSel::E1 => {
            let page = e1_page(field, spectrum, w)?;
            let document = PageDocument::from_page(&page, false, vec![], d1);
            Ok(Computed { page, document, pi: None })
        }
        PageSel::E2 => {
            let page = e2(field, spectrum, w)?;
            let document = PageDocument::from_page(&page, false, vec![], d1);
            Ok(Computed { page, document, pi: None })
        }
        PageSel::Infinity => {
            let higher = higher_ruleset(field, spectrum, rule_file)?;
            let res = run(field, spectrum, w, &higher)?;
            let RunStatus::Certified(cert) = &res.status else {
                return Err(CliError::NotCertified(
                    format!("{spectrum} over {field}"),
                    "higher differentials need a rule file (--rules); the E_2 page is available with --page 2".into(),
                ));
            };
            let page = res.last.clone();
            let mut prov = d1;
            for rs in &higher.rules {
                prov.extend(rs.rules.iter().map(|r| r.describe()));
            }
            let exts = extension_rules(field, spectrum, (w.s.lo, w.s.hi), (w.w.lo, w.w.hi));
            prov.extend(exts.iter().map(|e| format!("extension {} : {}", e.label.ascii(), e.reason)));
            let pi = assemble_pi(&page, &exts)?;
            let document = PageDocument::from_page(&page, true, vec![cert.clone()], prov);
            Ok(Computed { page, document, pi: Some(pi) })
        }
    }
}

/// A window covering every filtration that can contribute to stem s and weight w.
pub fn pi_window(field: &FieldId, s: i32, w: i32) -> Window {
    let extra = if matches!(field, FieldId::R | FieldId::Q(_)) { 32 } else { 6 };
    Window::new((s, s), (0, (s + extra).max(extra)), (w, w))
}

pub fn pi_cell(field: &FieldId, spectrum: Spectrum, s: i32, w: i32, rule_file: Option<&str>) -> Result<PiCell, CliError> {
    let c = compute(field, spectrum, PageSel::Infinity, pi_window(field, s, w), rule_file)?;
    Ok(c.pi.and_then(|t| t.at(s, w).cloned()).unwrap_or_default())
}
