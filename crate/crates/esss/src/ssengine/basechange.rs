//! Comparison maps between fields: base change to the algebraic closure, and the
//! Hasse map from the rationals to its completions.

use super::engine::{enlarge, EngineError};
use crate::diffrules::{matrix_by_names, RuleError};
use crate::emcoeffs::ring::pi_x_q;
use crate::emcoeffs::FieldId;
use crate::gradedalg::hom::{homology_sq, kernel_cokernel};
use crate::gradedalg::{Label, Mat, Monomial, Order, Summand, TriDeg, Unit, Window};
use crate::sliceassembly::{d_shift, e1_page, Page, Spectrum};

fn c(u: Unit, r: u32, t: u32) -> Monomial {
    Monomial::coeff(u, r, t)
}

/// Image of a coefficient basis element (integral when `integral`) under a comparison map.
/// Over the rationals the maps are the components of the Hasse map onto the real
/// place and onto the pi-divisible parts at the finite places.
pub fn coefficient_map(src: &FieldId, dst: &FieldId, g: Monomial, integral: bool) -> Option<Vec<Monomial>> {
    use Unit::*;
    let t = g.tau;
    let out = match (src, dst) {
        (FieldId::Fq(_) | FieldId::Qq(_) | FieldId::R | FieldId::Q2, FieldId::AlgClosed) => {
            if g.unit == One && g.rho == 0 {
                vec![g]
            } else {
                vec![]
            }
        }
        (FieldId::Qq(a), FieldId::Fq(b)) if a == b => match g.unit {
            Pi | PiU => vec![],
            _ => vec![g],
        },
        (FieldId::Q(_), FieldId::R) => match g.unit {
            One => vec![g],
            A(_) if !integral || t % 2 == 0 => vec![c(One, 2, t)],
            _ => vec![],
        },
        (FieldId::Q(_), FieldId::Q2) => match g.unit {
            One if g.rho <= 2 => vec![g],
            Two => vec![c(Pi, 0, t)],
            // reduces to (a_p + rho^2) tau^t
            A(_) if integral && t % 2 == 1 => vec![c(One, 2, t)],
            // odd p as a square class of Q_2: rho for -1, u for 5
            Br(p) => {
                let mut v = vec![];
                if p % 4 == 3 {
                    v.push(c(One, 1, t));
                }
                if p % 8 == 3 || p % 8 == 5 {
                    v.push(c(U, 0, t));
                }
                v
            }
            _ => vec![],
        },
        (FieldId::Q(s), FieldId::Qq(q)) if s.contains(&(q.q() as u32)) => {
            let p = q.q() as u32;
            match g.unit {
                Br(x) if x == p => vec![c(Pi, 0, t)],
                A(x) if x == p => vec![pi_x_q(*q).with_tau(t)],
                _ => vec![],
            }
        }
        _ => return None,
    };
    Some(out)
}

pub fn supported(src: &FieldId, dst: &FieldId) -> bool {
    coefficient_map(src, dst, Monomial::one(), true).is_some()
}

/// The comparison map on E_1 at one tridegree.
pub fn comparison_matrix(src: &Page, dst: &Page, d: TriDeg) -> Result<Mat, RuleError> {
    let (a, b) = (src.at(d), dst.at(d));
    matrix_by_names(a, b, d, |m| {
        let g = m.coeff_part();
        let img = coefficient_map(&src.field, &dst.field, g, m.h1 == 0).unwrap_or_default();
        let terms = img
            .into_iter()
            .map(|x| (1, x.with_h1(m.h1).with_v(m.v).with_iota(m.iota)))
            .collect();
        Ok(Some((format!("{} -> {}", src.field, dst.field), terms)))
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComparisonReport {
    pub checked: usize,
    /// tridegrees where the map fails to commute with d_1
    pub not_chain: Vec<TriDeg>,
    pub not_injective_e1: Vec<TriDeg>,
    pub not_injective_e2: Vec<TriDeg>,
}

impl ComparisonReport {
    pub fn ok(&self, injective: bool) -> bool {
        self.not_chain.is_empty() && (!injective || (self.not_injective_e1.is_empty() && self.not_injective_e2.is_empty()))
    }
}

fn blocks(page: &Page, d: TriDeg) -> (Mat, Mat) {
    let sh = d_shift(1);
    let (a, b, cc) = (page.at(d.sub(sh)), page.at(d), page.at(d.add(sh)));
    (page.diff.block(d.sub(sh), b.len(), a.len()), page.diff.block(d, cc.len(), b.len()))
}

fn dummy(orders: &[Order], d: TriDeg) -> Vec<Summand> {
    orders.iter().map(|o| Summand::new(*o, Label(vec![]), d)).collect()
}

fn injective(src: &[Summand], tgt: &[Summand], m: &Mat, d: TriDeg) -> Result<bool, EngineError> {
    let (k, _) = kernel_cokernel(src, tgt, m, d)?;
    Ok(k.gens.is_empty())
}

/// Compare E_1 and E_2 of `src` with the product of the `dst` fields on a window.
pub fn compare(src: &FieldId, dsts: &[FieldId], spectrum: Spectrum, window: Window) -> Result<ComparisonReport, EngineError> {
    let big = enlarge(window, 1);
    let sp = e1_page(src, spectrum, big)?;
    let dp: Vec<Page> = dsts.iter().map(|f| e1_page(f, spectrum, big)).collect::<Result<_, _>>()?;
    let sh = d_shift(1);
    let mut rep = ComparisonReport::default();
    for d in window.degrees() {
        let a = sp.at(d);
        if a.is_empty() {
            continue;
        }
        rep.checked += 1;
        let (f_in, f_out) = blocks(&sp, d);
        let hq = homology_sq(sp.at(d.sub(sh)), a, sp.at(d.add(sh)), &f_in, &f_out, d)?;
        let mut all_tgt: Vec<Summand> = Vec::new();
        let mut rows: Vec<Vec<i128>> = Vec::new();
        let mut e2_tgt: Vec<Order> = Vec::new();
        let mut e2_rows: Vec<Vec<i128>> = Vec::new();
        let mut chain_ok = true;
        for p in &dp {
            let m = comparison_matrix(&sp, p, d)?;
            let b = p.at(d);
            all_tgt.extend(b.iter().cloned());
            for i in 0..m.rows {
                rows.push(m.row(i));
            }
            let next = d.add(sh);
            if window.contains(next) {
                let m2 = comparison_matrix(&sp, p, next)?;
                let (_, g_out) = blocks(p, d);
                let lhs = m2.mul(&f_out);
                let rhs = g_out.mul(&m);
                let tgt = p.at(next);
                for i in 0..lhs.rows {
                    for j in 0..lhs.cols {
                        if tgt[i].order.reduce(lhs[(i, j)] - rhs[(i, j)]) != 0 {
                            chain_ok = false;
                        }
                    }
                }
            }
            let (g_in, g_out) = blocks(p, d);
            let hp = homology_sq(p.at(d.sub(sh)), b, p.at(d.add(sh)), &g_in, &g_out, d)?;
            e2_tgt.extend(hp.orders());
            let mut cols: Vec<Vec<i128>> = Vec::new();
            for (_, v) in &hq.gens {
                cols.push(hp.coords(&m.mul_vec(v))?);
            }
            for i in 0..hp.gens.len() {
                e2_rows.push(cols.iter().map(|c| c[i]).collect());
            }
        }
        if !chain_ok {
            rep.not_chain.push(d);
        }
        let m = if rows.is_empty() { Mat::zeros(0, a.len()) } else { Mat::from_rows(&rows) };
        if !injective(a, &all_tgt, &m, d)? {
            rep.not_injective_e1.push(d);
        }
        let e2_src = dummy(&hq.orders(), d);
        if !e2_src.is_empty() {
            let m = if e2_rows.is_empty() { Mat::zeros(0, e2_src.len()) } else { Mat::from_rows(&e2_rows) };
            if !injective(&e2_src, &dummy(&e2_tgt, d), &m, d)? {
                rep.not_injective_e2.push(d);
            }
        }
    }
    Ok(rep)
}

/// The places used by the Hasse check: the reals, Q_2 and Q_p for p in the support.
pub fn places(support: &[u32]) -> Vec<FieldId> {
    let mut v = vec![FieldId::R, FieldId::Q2];
    v.extend(support.iter().map(|&p| FieldId::qq(p as u64).unwrap()));
    v
}
