//! Homotopy groups from E∞: filtration columns glued by extension rules.

use super::engine::EngineError;
use crate::emcoeffs::ring::x_q;
use crate::emcoeffs::FieldId;
use crate::gradedalg::{Label, Monomial, Order, Unit};
use crate::numthy::s_q;
use crate::sliceassembly::{Page, Spectrum};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExtKind {
    /// multiplication by h on the top multiple of lhs hits rhs, where h acts as 2
    HiddenH,
    /// h times the top multiple of lhs is rhs, h not acting as 2: only the h-torsion changes
    HTorsion,
    /// an additive relation 2^m lhs = rhs
    Additive,
}

/// Glues the top nonzero multiple of the E∞ class `lhs` to the class `rhs` in the same
/// stem and weight; the resulting cyclic summand is named `label`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionRule {
    pub kind: ExtKind,
    pub lhs: Monomial,
    pub rhs: Monomial,
    pub label: Monomial,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiEntry {
    pub order: Order,
    pub name: Label,
    /// filtration of the E∞ class carrying the generator
    pub f: i32,
    /// degree of h-torsion, `None` for infinite
    pub htors: Option<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiCell {
    pub entries: Vec<PiEntry>,
    /// set when the group is only known up to an extension the engine cannot resolve
    pub unresolved: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiTable {
    pub field: FieldId,
    pub spectrum: Spectrum,
    pub cells: BTreeMap<(i32, i32), PiCell>,
}

impl PiTable {
    pub fn at(&self, s: i32, w: i32) -> Option<&PiCell> {
        self.cells.get(&(s, w))
    }
}

fn with_pi(m: Monomial) -> Monomial {
    let unit = match m.unit {
        Unit::One => Unit::Pi,
        Unit::U => Unit::PiU,
        u => panic!("no pi multiple of unit {u:?}"),
    };
    Monomial { unit, ..m }
}

/// Extension rules whose lhs lies in the given stem and weight ranges.
pub fn extension_rules(field: &FieldId, spectrum: Spectrum, srange: (i32, i32), wrange: (i32, i32)) -> Vec<ExtensionRule> {
    let mut out = Vec::new();
    let (q, pis) = match field {
        FieldId::AlgClosed => (None, vec![false]),
        FieldId::Fq(q) => (Some(*q), vec![false]),
        FieldId::Qq(q) => (Some(*q), vec![false, true]),
        FieldId::Q2 if spectrum == Spectrum::L => (None, vec![false]),
        _ => return out,
    };
    let kmax = (srange.1.max(0) / 8 + 1) as u32;
    let imax = (srange.1 - wrange.0 + 4).max(0) as u32;
    let inside = |m: Monomial| {
        let d = m.tridegree();
        (srange.0..=srange.1).contains(&d.s) && (wrange.0..=wrange.1).contains(&d.w)
    };
    let mut push = |kind, lhs: Monomial, rhs: Monomial, label: Monomial, reason: &str| {
        if inside(lhs) {
            out.push(ExtensionRule { kind, lhs, rhs, label, reason: reason.into() });
        }
    };
    for &pi in &pis {
        let y = |m: Monomial| if pi { with_pi(m) } else { m };
        for k in 0..=kmax {
            if let Some(q) = q {
                let kind = if q.residue() == 1 { ExtKind::HiddenH } else { ExtKind::HTorsion };
                for i in (0..=imax).filter(|&i| (2..=3).contains(&s_q(q, i as u64))) {
                    let lhs = y(x_q(q).with_v(2 * k + 1).with_tau(i).with_two(1));
                    let rhs = y(Monomial::one().with_v(2 * k).with_h1(3).with_tau(i + 2));
                    push(kind, lhs, rhs, lhs, "comparison with the motivic Adams spectral sequence");
                    if spectrum == Spectrum::L {
                        let (lhs, rhs) = (lhs.with_iota(true), rhs.with_iota(true));
                        push(kind, lhs, rhs, lhs, "image of the kq extension under the boundary map");
                    }
                }
            }
            if spectrum == Spectrum::L {
                let imax_c = if *field == FieldId::AlgClosed { imax } else { 0 };
                for i in 0..=imax_c {
                    let lhs = y(Monomial::one().with_iota(true).with_v(2 * k + 1).with_tau(i));
                    let rhs = y(Monomial::one().with_v(2 * k).with_h1(3).with_tau(i + 1));
                    let why = if *field == FieldId::Q2 {
                        "relation 4 iota v1^{4k+2} = h1^3 tau v1^{4k}, forced by the order-8 class over the rationals"
                    } else {
                        "relation 4 iota v1^{4k+2} = h1^3 tau v1^{4k}"
                    };
                    push(ExtKind::Additive, lhs.with_two(1), rhs, lhs, why);
                }
                if let Some(q) = q {
                    for i in (0..=imax).filter(|&i| s_q(q, i as u64) > 3) {
                        let lhs = y(x_q(q).with_iota(true).with_v(2 * k + 1).with_tau(i));
                        let rhs = y(x_q(q).with_v(2 * k).with_h1(3).with_tau(i + 1));
                        push(ExtKind::Additive, lhs.with_two(1), rhs, lhs, "x_q-linearity of the algebraically closed relation");
                    }
                }
            }
        }
    }
    out
}

fn extensions_are_listed(field: &FieldId) -> bool {
    !matches!(field, FieldId::R | FieldId::Q(_))
}

/// Assemble homotopy groups from an E∞ page.
pub fn assemble_pi(einf: &Page, exts: &[ExtensionRule]) -> Result<PiTable, EngineError> {
    let mut cells: BTreeMap<(i32, i32), PiCell> = BTreeMap::new();
    for (d, g) in &einf.groups {
        let cell = cells.entry((d.s, d.w)).or_default();
        for s in g {
            cell.entries.push(PiEntry { order: s.order, name: s.name.clone(), f: d.f, htors: s.order.exponent() });
        }
    }
    for r in exts {
        let (ld, rd) = (r.lhs.tridegree(), r.rhs.tridegree());
        if !einf.window.contains(ld) || !einf.window.contains(rd) {
            continue;
        }
        let cell = cells.get_mut(&(ld.s, ld.w)).ok_or_else(|| EngineError::AbsentClass(r.lhs.to_string()))?;
        let find = |m: Monomial, f: i32| cell.entries.iter().position(|e| e.f == f && e.name.single() == Some(m));
        let li = find(r.lhs, ld.f).ok_or_else(|| EngineError::AbsentClass(r.lhs.to_string()))?;
        let ri = find(r.rhs, rd.f).ok_or_else(|| EngineError::AbsentClass(r.rhs.to_string()))?;
        let (Some(a), Some(b)) = (cell.entries[li].order.exponent(), cell.entries[ri].order.exponent()) else {
            return Err(EngineError::AbsentClass(format!("{} glued to a free class", r.lhs)));
        };
        let e = &mut cell.entries[li];
        e.htors = Some(a + b);
        if r.kind == ExtKind::HTorsion {
            continue;
        }
        e.order = Order::Tor(a + b);
        e.name = Label::mono(r.label);
        cell.entries.remove(ri);
    }
    if !extensions_are_listed(&einf.field) {
        for cell in cells.values_mut() {
            let mut fs: Vec<i32> = cell.entries.iter().map(|e| e.f).collect();
            fs.sort_unstable();
            fs.dedup();
            if fs.len() > 1 {
                let (lo, hi) = (min_log(&cell.entries), sum_log(&cell.entries));
                cell.unresolved = Some(format!(
                    "UNRESOLVED: extension across filtrations {fs:?}; largest cyclic order between 2^{lo} and 2^{hi}"
                ));
            }
        }
    }
    cells.retain(|_, c| !c.entries.is_empty());
    Ok(PiTable { field: einf.field.clone(), spectrum: einf.spectrum, cells })
}

fn min_log(v: &[PiEntry]) -> u32 {
    v.iter().filter_map(|e| e.order.exponent()).max().unwrap_or(0)
}

fn sum_log(v: &[PiEntry]) -> u32 {
    v.iter().filter_map(|e| e.order.exponent()).sum()
}

/// Group string of a cell, with the unresolved marker appended when present.
pub fn cell_string(cell: &PiCell, uni: bool) -> String {
    let parts: Vec<String> = cell
        .entries
        .iter()
        .map(|e| {
            let name = if uni { e.name.to_string() } else { e.name.ascii() };
            format!("{}{{{}}}", e.order.group_string(uni), name)
        })
        .collect();
    let mut s = if parts.is_empty() { "0".to_string() } else { parts.join(if uni { " ⊕ " } else { " (+) " }) };
    if let Some(u) = &cell.unresolved {
        s.push_str(" [");
        s.push_str(u);
        s.push(']');
    }
    s
}
