//! Mod 2 motivic cohomology of the base field as a ring with Steenrod action,
//! and the integral classes, on named monomial bases.

use super::field::FieldId;
use crate::gradedalg::{Monomial, Unit};
use crate::numthy::OddPrimePower;

fn q3(q: OddPrimePower) -> bool {
    q.residue() == 3
}

/// The class x_q (a unit of degree (-1,-1), or rho when q is 3 mod 4).
pub fn x_q(q: OddPrimePower) -> Monomial {
    if q3(q) {
        Monomial::coeff(Unit::One, 1, 0)
    } else {
        Monomial::coeff(Unit::U, 0, 0)
    }
}

/// pi x_q over Q_q.
pub fn pi_x_q(q: OddPrimePower) -> Monomial {
    if q3(q) {
        Monomial::coeff(Unit::Pi, 1, 0)
    } else {
        Monomial::coeff(Unit::PiU, 0, 0)
    }
}

/// (unit, allowed rho powers) of the mod 2 basis; `None` means unbounded.
fn mod2_units(field: &FieldId) -> Vec<(Unit, Option<u32>)> {
    use Unit::*;
    match field {
        FieldId::AlgClosed => vec![(One, Some(0))],
        FieldId::Fq(q) if q3(*q) => vec![(One, Some(1))],
        FieldId::Fq(_) => vec![(One, Some(0)), (U, Some(0))],
        FieldId::Qq(q) if q3(*q) => vec![(One, Some(1)), (Pi, Some(1))],
        FieldId::Qq(_) => vec![(One, Some(0)), (U, Some(0)), (Pi, Some(0)), (PiU, Some(0))],
        FieldId::Q2 => vec![(One, Some(2)), (U, Some(0)), (Pi, Some(0))],
        FieldId::R => vec![(One, None)],
        FieldId::Q(s) => {
            let mut v = vec![(One, None), (Two, Some(0))];
            v.extend(s.iter().map(|&p| (Br(p), Some(0))));
            v.extend(s.iter().map(|&p| (A(p), Some(0))));
            v
        }
    }
}

/// Basis of the mod 2 coefficients in bidegree (s, w).
pub fn mod2_basis(field: &FieldId, s: i32, w: i32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if w > s {
        return out;
    }
    let tau = (s - w) as u32;
    for (u, cap) in mod2_units(field) {
        let (us, _) = Monomial::coeff(u, 0, 0).coeff_bideg();
        let b = us - s;
        if b < 0 || cap.map_or(false, |c| b > c as i32) {
            continue;
        }
        out.push(Monomial::coeff(u, b as u32, tau));
    }
    out
}

/// Multiply a mod 2 coefficient basis element by rho^j, as a sum of basis elements.
pub fn rho_mul(field: &FieldId, m: Monomial, j: u32) -> Vec<Monomial> {
    if j == 0 {
        return vec![m];
    }
    let with = |u: Unit, r: u32| vec![Monomial::coeff(u, r, m.tau)];
    let capped = |cap: u32| if m.rho + j <= cap { with(m.unit, m.rho + j) } else { vec![] };
    match field {
        FieldId::AlgClosed => vec![],
        FieldId::Fq(q) | FieldId::Qq(q) => {
            if q3(*q) && matches!(m.unit, Unit::One | Unit::Pi) {
                capped(1)
            } else {
                vec![]
            }
        }
        FieldId::Q2 => match m.unit {
            Unit::One => capped(2),
            _ => vec![],
        },
        FieldId::R => with(Unit::One, m.rho + j),
        FieldId::Q(_) => match m.unit {
            Unit::One => with(Unit::One, m.rho + j),
            Unit::A(_) => with(Unit::One, j + 2),
            Unit::Br(p) if p % 4 == 3 && j == 1 => {
                vec![Monomial::coeff(Unit::One, 2, m.tau), Monomial::coeff(Unit::A(p), 0, m.tau)]
            }
            _ => vec![],
        },
    }
}

fn with_tau(v: Vec<Monomial>, tau: u32) -> Vec<Monomial> {
    v.into_iter().map(|m| m.with_tau(tau)).collect()
}

/// Sq^1 of a mod 2 coefficient basis element.
pub fn sq1(field: &FieldId, m: Monomial) -> Vec<Monomial> {
    if m.tau % 2 == 0 {
        return vec![];
    }
    with_tau(rho_mul(field, m, 1), m.tau - 1)
}

/// Sq^2 of a mod 2 coefficient basis element.
pub fn sq2(field: &FieldId, m: Monomial) -> Vec<Monomial> {
    let i = m.tau as u64;
    if i < 2 || (i * (i - 1) / 2) % 2 == 0 {
        return vec![];
    }
    with_tau(rho_mul(field, m, 2), m.tau - 1)
}

/// (Sq^2 + rho Sq^1) of a mod 2 coefficient basis element.
pub fn sq2_rho_sq1(field: &FieldId, m: Monomial) -> Vec<Monomial> {
    let i = m.tau as u64;
    if i < 1 || (i * (i + 1) / 2) % 2 == 0 {
        return vec![];
    }
    with_tau(rho_mul(field, m, 2), m.tau - 1)
}

/// Sq^3 Sq^1 of a mod 2 coefficient basis element.
pub fn sq3sq1(field: &FieldId, m: Monomial) -> Vec<Monomial> {
    if m.tau % 4 != 3 {
        return vec![];
    }
    with_tau(rho_mul(field, m, 4), m.tau - 3)
}

/// tau times a mod 2 basis element (zero where tau does not act on that unit).
pub fn tau_mul(field: &FieldId, m: Monomial) -> Vec<Monomial> {
    let t = m.with_tau(m.tau + 1);
    let ok = mod2_basis(field, t.coeff_bideg().0, t.coeff_bideg().1).contains(&t);
    if ok {
        vec![t]
    } else {
        vec![]
    }
}

/// Reduction mod 2 of an integral generator.
pub fn pr(field: &FieldId, m: Monomial) -> Vec<Monomial> {
    if m.two > 0 {
        return vec![];
    }
    let m = m.coeff_part();
    match (field, m.unit) {
        (FieldId::Q(_), Unit::A(_)) if m.tau % 2 == 1 => vec![m, Monomial::coeff(Unit::One, 2, m.tau)],
        _ => vec![m],
    }
}

/// The integral class of order two reducing to a given mod 2 sum, if one exists.
pub fn lift(field: &FieldId, terms: &[Monomial]) -> Option<Monomial> {
    if terms.is_empty() {
        return None;
    }
    let (s, w) = terms[0].coeff_bideg();
    hz_basis(field, s, w)
        .into_iter()
        .find(|(o, g)| *o == crate::gradedalg::Order::Tor(1) && {
            let mut a = pr(field, *g);
            let mut b = terms.to_vec();
            a.sort();
            b.sort();
            a == b
        })
        .map(|(_, g)| g)
}

pub use super::modules::hz_basis;
