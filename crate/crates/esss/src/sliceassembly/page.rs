//! E_1 pages of kq and L.

use super::slices::{psi_exponent, slices_l};
use crate::emcoeffs::{coeff_basis, hz_basis, ring::mod2_basis, FieldId};
use crate::gradedalg::{hom_kernel_cokernel, AlgError, Graded, Hom, Label, Mat, Order, Summand, TriDeg, Window};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Spectrum {
    Kq,
    L,
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Spectrum::Kq => "kq",
            Spectrum::L => "L",
        })
    }
}

/// Tridegree of iota.
pub const IOTA: TriDeg = TriDeg { s: -1, f: 1, w: 0 };

/// Shift of d_r.
pub fn d_shift(r: u32) -> TriDeg {
    TriDeg::new(-1, 2 * r as i32 + 1, 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Page {
    pub field: FieldId,
    pub spectrum: Spectrum,
    pub r: u32,
    pub window: Window,
    pub groups: Graded,
    pub diff: Hom,
}

impl Page {
    pub fn at(&self, d: TriDeg) -> &[Summand] {
        self.groups.get(&d).map_or(&[], |v| v.as_slice())
    }
}

/// E_1(kq) at a tridegree: coefficients of the cells h1^a v1^{2k}.
pub fn e1_kq(field: &FieldId, d: TriDeg) -> Vec<Summand> {
    let mut out = Vec::new();
    let Some(c) = d.slice() else { return out };
    if c < 0 {
        return out;
    }
    for a in (0..=c.min(d.f)).filter(|a| (c - a) % 2 == 0) {
        let k = ((c - a) / 2) as u32;
        let (sg, wg) = (a - d.f, d.w - c);
        let gens: Vec<(Order, _)> = if a == 0 {
            hz_basis(field, sg, wg)
        } else {
            mod2_basis(field, sg, wg).into_iter().map(|m| (Order::Tor(1), m)).collect()
        };
        for (o, g) in gens {
            out.push(Summand::new(o, Label::mono(g.with_h1(a as u32).with_v(k)), d));
        }
    }
    out
}

fn cell_exponent(s: &Summand) -> Option<u32> {
    let m = s.name.single()?;
    (m.h1 == 0 && m.v >= 1).then(|| psi_exponent(m.v))
}

/// Kernel of psi^3 - 1 on E_1(kq) at d (diagonal on cells).
pub fn kernel_part(kq: &[Summand]) -> Vec<Summand> {
    let mut out = Vec::new();
    for s in kq {
        match (cell_exponent(s), s.order) {
            (None, _) => out.push(s.clone()),
            (Some(_), Order::Free) => {}
            (Some(n), Order::Tor(e)) => {
                let m = s.name.single().unwrap().with_two(e.saturating_sub(n));
                out.push(Summand::new(Order::Tor(e.min(n)), Label::mono(m), s.deg));
            }
        }
    }
    out
}

/// Cokernel of psi^3 - 1 on E_1(kq) at d, shifted by iota.
pub fn cokernel_part(kq: &[Summand]) -> Vec<Summand> {
    let mut out = Vec::new();
    for s in kq {
        let o = match (cell_exponent(s), s.order) {
            (None, o) => o,
            (Some(n), Order::Free) => Order::Tor(n),
            (Some(n), Order::Tor(e)) => Order::Tor(e.min(n)),
        };
        let m = s.name.single().unwrap().with_iota(true);
        out.push(Summand::new(o, Label::mono(m), s.deg.add(IOTA)));
    }
    out
}

/// E_1(L) at d: K(d) followed by iota C(d - |iota|).
pub fn e1_l(field: &FieldId, d: TriDeg) -> Vec<Summand> {
    let mut v = kernel_part(&e1_kq(field, d));
    v.extend(cokernel_part(&e1_kq(field, d.sub(IOTA))));
    v
}

pub fn e1_groups(field: &FieldId, spectrum: Spectrum, d: TriDeg) -> Vec<Summand> {
    match spectrum {
        Spectrum::Kq => e1_kq(field, d),
        Spectrum::L => e1_l(field, d),
    }
}

/// Orders of E_1(L) at d computed from the slices of L.
pub fn e1_l_from_slices(field: &FieldId, d: TriDeg) -> Vec<Order> {
    let Some(c) = d.slice() else { return vec![] };
    if c < 0 {
        return vec![];
    }
    let mut out = Vec::new();
    for cell in slices_l(c as u32) {
        let (a, b) = cell.shift;
        for (o, _) in coeff_basis(field, cell.coeff_modulus(), d.s - a, d.w - b) {
            out.push(o);
        }
    }
    out
}

/// Kernel and cokernel of psi^3 - 1 on E_1(kq) at d, through the general kernel/cokernel routine.
pub fn kc_by_smith(field: &FieldId, d: TriDeg) -> Result<(Vec<Summand>, Vec<Summand>), AlgError> {
    let g = e1_kq(field, d);
    let mut m = Mat::zeros(g.len(), g.len());
    for (j, s) in g.iter().enumerate() {
        if let Some(n) = cell_exponent(s) {
            m[(j, j)] = 1i128 << n;
        }
    }
    let mut gr = Graded::new();
    gr.insert(d, g);
    let mut h = Hom::new(TriDeg::new(0, 0, 0));
    h.blocks.insert(d, m);
    hom_kernel_cokernel(&gr, &gr, &h, d)
}

/// The E_1 page on a window, with d_1 from the generator rules.
pub fn e1_page(field: &FieldId, spectrum: Spectrum, window: Window) -> Result<Page, crate::diffrules::RuleError> {
    let mut groups = Graded::new();
    for d in window.degrees() {
        let g = e1_groups(field, spectrum, d);
        if !g.is_empty() {
            groups.insert(d, g);
        }
    }
    let mut page = Page { field: field.clone(), spectrum, r: 1, window, groups, diff: Hom::new(d_shift(1)) };
    let rules = crate::diffrules::d1_ruleset(field, spectrum);
    page.diff = crate::diffrules::apply_rules(&page, &rules)?;
    Ok(page)
}
