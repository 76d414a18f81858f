//! Page turning, runs and collapse certificates.

use crate::diffrules::{apply_rules, HigherRules, HigherStatus, RuleError};
use crate::emcoeffs::FieldId;
use crate::gradedalg::{homology, AlgError, Graded, Hom, Range, Window};
use crate::sliceassembly::{d_shift, e1_page, Page, Spectrum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Rule(#[from] RuleError),
    #[error("higher-differential rule file is empty; refusing to certify E∞ for {0}")]
    EmptyRuleFile(String),
    #[error("window {0:?} is too small to hold a page")]
    EmptyWindow(Window),
    #[error("extension rule references a class absent from E∞: {0}")]
    AbsentClass(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertKind {
    /// no d_r, r >= from, has nonzero source and target inside the window
    DegreeVanishing { from: u32 },
    /// reason recorded with the rule set
    Cited(String),
    /// the remaining differentials were supplied by a rule file
    External(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseCertificate {
    pub field: FieldId,
    pub spectrum: Spectrum,
    pub window: Window,
    pub page: u32,
    pub kind: CertKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RunStatus {
    Certified(CollapseCertificate),
    /// E_2 computed, higher differentials unknown
    E2Only,
}

#[derive(Clone, Debug)]
pub struct RunResult {
    pub pages: Vec<Page>,
    /// the last page computed; E∞ when certified
    pub last: Page,
    pub status: RunStatus,
}

impl RunResult {
    pub fn einf(&self) -> Option<&Page> {
        matches!(self.status, RunStatus::Certified(_)).then_some(&self.last)
    }
}

/// Largest window on which E_{r+1} is determined by a page E_r on `w`.
pub fn shrink(w: Window, r: u32) -> Window {
    let h = 2 * r as i32 + 1;
    let flo = if w.f.lo <= 0 { w.f.lo } else { w.f.lo + h };
    Window { s: Range::new(w.s.lo + 1, w.s.hi - 1), f: Range::new(flo, w.f.hi - h), w: w.w }
}

/// Smallest window whose page determines the next page on `w`.
pub fn enlarge(w: Window, r: u32) -> Window {
    let h = 2 * r as i32 + 1;
    let flo = if w.f.lo <= 0 { w.f.lo } else { (w.f.lo - h).max(0) };
    Window { s: Range::new(w.s.lo - 1, w.s.hi + 1), f: Range::new(flo, w.f.hi + h), w: w.w }
}

/// E_{r+1} from E_r and its differential.
pub fn turn_page(page: &Page, diff: &Hom) -> Result<Page, EngineError> {
    let window = shrink(page.window, page.r);
    if window.s.lo > window.s.hi || window.f.lo > window.f.hi {
        return Err(EngineError::EmptyWindow(page.window));
    }
    let mut groups = Graded::new();
    for (d, _) in page.groups.range(..) {
        if !window.contains(*d) {
            continue;
        }
        let h = homology(&page.groups, diff, diff, *d)?;
        if !h.is_empty() {
            groups.insert(*d, h);
        }
    }
    let r = page.r + 1;
    Ok(Page { field: page.field.clone(), spectrum: page.spectrum, r, window, groups, diff: Hom::new(d_shift(r)) })
}

pub fn restrict(page: &Page, w: Window) -> Page {
    let groups = page.groups.iter().filter(|(d, _)| w.contains(**d)).map(|(d, g)| (*d, g.clone())).collect();
    let mut diff = Hom::new(page.diff.shift);
    for (d, m) in &page.diff.blocks {
        if w.contains(*d) && w.contains(d.add(page.diff.shift)) {
            diff.blocks.insert(*d, m.clone());
        }
    }
    Page { groups, diff, window: w, ..page.clone() }
}

/// True when no d_r with from <= r <= rmax has a nonzero source and a nonzero target inside the window.
pub fn degree_vanishing(page: &Page, from: u32, rmax: u32) -> bool {
    for r in from..=rmax {
        let sh = d_shift(r);
        for d in page.groups.keys() {
            let t = d.add(sh);
            if page.window.contains(t) && page.groups.contains_key(&t) {
                return false;
            }
        }
    }
    true
}

pub fn default_rmax(w: Window) -> u32 {
    ((w.f.hi - w.f.lo).max(0) / 2 + 1) as u32
}

/// Run the spectral sequence on a window, through the higher rules where needed.
pub fn run(field: &FieldId, spectrum: Spectrum, window: Window, higher: &HigherRules) -> Result<RunResult, EngineError> {
    let last_rule = higher.rules.iter().map(|r| r.r).max().unwrap_or(1);
    let mut big = window;
    for r in (1..=last_rule).rev() {
        big = enlarge(big, r);
    }
    let e1 = e1_page(field, spectrum, big)?;
    let mut pages = vec![e1.clone()];
    let mut cur = turn_page(&e1, &e1.diff)?;
    for r in 2..=last_rule {
        let diff = match higher.rules.iter().find(|x| x.r == r) {
            Some(rs) => apply_rules(&cur, rs)?,
            None => Hom::new(d_shift(r)),
        };
        cur.diff = diff.clone();
        pages.push(cur.clone());
        cur = turn_page(&cur, &diff)?;
    }
    let last = restrict(&cur, window);
    pages.push(last.clone());
    let pages: Vec<Page> = pages.iter().map(|p| restrict(p, window)).collect();
    let from = last.r;
    let cert = |kind| CollapseCertificate { field: field.clone(), spectrum, window, page: from, kind };
    let status = match &higher.status {
        HigherStatus::Absent => RunStatus::E2Only,
        HigherStatus::Loaded if higher.rules.iter().all(|r| r.rules.is_empty()) => {
            return Err(EngineError::EmptyRuleFile(format!("{spectrum} over {field}")));
        }
        HigherStatus::Loaded => {
            if degree_vanishing(&last, from, default_rmax(window)) {
                RunStatus::Certified(cert(CertKind::DegreeVanishing { from }))
            } else {
                let prov = higher.rules.iter().flat_map(|r| r.rules.iter().map(|x| x.provenance.clone())).collect();
                RunStatus::Certified(cert(CertKind::External(prov)))
            }
        }
        HigherStatus::None(why) => {
            if degree_vanishing(&last, from, default_rmax(window)) {
                RunStatus::Certified(cert(CertKind::DegreeVanishing { from }))
            } else {
                RunStatus::Certified(cert(CertKind::Cited(why.clone())))
            }
        }
    };
    Ok(RunResult { pages, last, status })
}

/// Convenience: E_2 pages never need rule files.
pub fn e2(field: &FieldId, spectrum: Spectrum, window: Window) -> Result<Page, EngineError> {
    let e1 = e1_page(field, spectrum, enlarge(window, 1))?;
    Ok(restrict(&turn_page(&e1, &e1.diff)?, window))
}
