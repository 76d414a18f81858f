//! Higher differentials: none where the pages leave no room, user-supplied rule files otherwise.

use super::rules::{RuleError, RuleSet};
use super::template::parse_rule_file;
use crate::emcoeffs::FieldId;
use crate::sliceassembly::Spectrum;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HigherStatus {
    /// no higher differentials, with the reason
    None(String),
    /// rules read from a file
    Loaded,
    /// higher differentials exist but no rules were supplied
    Absent,
}

#[derive(Clone, Debug)]
pub struct HigherRules {
    pub rules: Vec<RuleSet>,
    pub status: HigherStatus,
}

/// Whether higher differentials over this field must come from external data.
pub fn needs_external(field: &FieldId, spectrum: Spectrum) -> bool {
    spectrum == Spectrum::L && matches!(field, FieldId::R | FieldId::Q(_))
}

pub fn higher_ruleset(field: &FieldId, spectrum: Spectrum, file: Option<&str>) -> Result<HigherRules, RuleError> {
    if !needs_external(field, spectrum) {
        let why = match (field, spectrum) {
            (FieldId::Q2, Spectrum::L) => "every potential higher differential hits an eta-periodic class or leaves the unit",
            (FieldId::Q(_), Spectrum::Kq) => "no room for longer differentials; E_2^+ embeds in the odd local places",
            _ => "no room for higher differentials",
        };
        return Ok(HigherRules { rules: vec![], status: HigherStatus::None(why.into()) });
    }
    let Some(text) = file else {
        return Ok(HigherRules { rules: vec![], status: HigherStatus::Absent });
    };
    let parsed = parse_rule_file(text)?;
    let mut pages: Vec<u32> = parsed.iter().map(|r| r.page).collect();
    pages.sort_unstable();
    pages.dedup();
    let rules = pages
        .into_iter()
        .map(|r| RuleSet {
            field: field.clone(),
            spectrum,
            r,
            rules: parsed.iter().filter(|x| x.page == r).cloned().collect(),
        })
        .collect();
    Ok(HigherRules { rules, status: HigherStatus::Loaded })
}
