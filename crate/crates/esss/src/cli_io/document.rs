//! Versioned JSON form of a page.

use crate::emcoeffs::FieldId;
use crate::gradedalg::{Graded, Hom, Mat, Summand, TriDeg, Window};
use crate::sliceassembly::{Page, Spectrum};
use crate::ssengine::CollapseCertificate;
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "esss-page/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeGroup {
    pub deg: TriDeg,
    pub summands: Vec<Summand>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeBlock {
    /// source tridegree
    pub deg: TriDeg,
    pub matrix: Mat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Differential {
    pub shift: TriDeg,
    pub blocks: Vec<DegreeBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageDocument {
    pub schema: String,
    pub field: FieldId,
    pub spectrum: Spectrum,
    /// page number; `None` for E∞
    pub r: Option<u32>,
    pub window: Window,
    pub groups: Vec<DegreeGroup>,
    pub differential: Option<Differential>,
    pub certificates: Vec<CollapseCertificate>,
    pub provenance: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("unsupported schema {0:?}, expected {SCHEMA:?}")]
    Schema(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl PageDocument {
    /// `infinite` drops the differential and records the page as E∞.
    pub fn from_page(page: &Page, infinite: bool, certificates: Vec<CollapseCertificate>, provenance: Vec<String>) -> PageDocument {
        let groups = page
            .groups
            .iter()
            .filter(|(_, g)| !g.is_empty())
            .map(|(d, g)| DegreeGroup { deg: *d, summands: g.clone() })
            .collect();
        let differential = (!infinite).then(|| Differential {
            shift: page.diff.shift,
            blocks: page
                .diff
                .blocks
                .iter()
                .filter(|(_, m)| !m.is_zero())
                .map(|(d, m)| DegreeBlock { deg: *d, matrix: m.clone() })
                .collect(),
        });
        PageDocument {
            schema: SCHEMA.into(),
            field: page.field.clone(),
            spectrum: page.spectrum,
            r: (!infinite).then_some(page.r),
            window: page.window,
            groups,
            differential,
            certificates,
            provenance,
        }
    }

    /// Back to a page; zero groups and zero blocks are not stored.
    pub fn to_page(&self) -> Page {
        let groups: Graded = self.groups.iter().map(|g| (g.deg, g.summands.clone())).collect();
        let diff = match &self.differential {
            Some(d) => Hom { shift: d.shift, blocks: d.blocks.iter().map(|b| (b.deg, b.matrix.clone())).collect() },
            None => Hom::new(TriDeg::default()),
        };
        Page { field: self.field.clone(), spectrum: self.spectrum, r: self.r.unwrap_or(0), window: self.window, groups, diff }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("page documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<PageDocument, DocumentError> {
        let doc: PageDocument = serde_json::from_str(text)?;
        if doc.schema != SCHEMA {
            return Err(DocumentError::Schema(doc.schema));
        }
        Ok(doc)
    }
}

/// Pages compare equal after dropping empty groups and zero blocks.
pub fn normalized(page: &Page) -> Page {
    let mut p = page.clone();
    p.groups.retain(|_, g| !g.is_empty());
    p.diff.blocks.retain(|_, m| !m.is_zero());
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sliceassembly::e1_page;

    #[test]
    fn round_trip() {
        let w = Window::new((-2, 8), (0, 8), (-4, 4));
        for f in [FieldId::AlgClosed, FieldId::fq(3).unwrap(), FieldId::rationals(&[3]).unwrap()] {
            let p = e1_page(&f, Spectrum::L, w).unwrap();
            let doc = PageDocument::from_page(&p, false, vec![], vec!["d1 rules".into()]);
            let back = PageDocument::from_json(&doc.to_json()).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_page(), normalized(&p));
        }
    }
}
