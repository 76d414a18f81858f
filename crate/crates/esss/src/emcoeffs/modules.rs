//! Closed forms for the homotopy of HZ/2, HZ and HZ/2^n over each base field.

use super::field::FieldId;
use super::ring::{mod2_basis, pi_x_q, x_q};
use crate::gradedalg::{Monomial, Order, Unit};
use crate::numthy::{s_q, OddPrimePower};

/// Coefficient modulus: 2^n, or the integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Modulus {
    Two(u32),
    Integral,
}

fn three() -> OddPrimePower {
    OddPrimePower::new(3).unwrap()
}

fn nu(n: u64) -> u32 {
    n.trailing_zeros()
}

fn c(u: Unit, r: u32, t: u32) -> Monomial {
    Monomial::coeff(u, r, t)
}

/// Generators of pi_{s,w} HZ with their orders.
pub fn hz_basis(field: &FieldId, s: i32, w: i32) -> Vec<(Order, Monomial)> {
    use Unit::*;
    let mut out = Vec::new();
    let free = Order::Free;
    let tor = Order::Tor;
    if w > s {
        return out;
    }
    match field {
        FieldId::AlgClosed => {
            if s == 0 {
                out.push((free, c(One, 0, (-w) as u32)));
            }
        }
        FieldId::Fq(q) | FieldId::Qq(q) => {
            if (s, w) == (0, 0) {
                out.push((free, Monomial::one()));
            }
            if s == -1 && w <= -1 {
                let i = (-1 - w) as u32;
                out.push((tor(s_q(*q, i as u64)), x_q(*q).with_tau(i)));
            }
            if matches!(field, FieldId::Qq(_)) {
                if (s, w) == (-1, -1) {
                    out.push((free, c(Pi, 0, 0)));
                }
                if s == -2 && w <= -2 {
                    let i = (-2 - w) as u32;
                    out.push((tor(s_q(*q, i as u64)), pi_x_q(*q).with_tau(i)));
                }
            }
        }
        FieldId::Q2 => match s {
            0 if w == 0 => out.push((free, Monomial::one())),
            -1 if w == -1 => {
                out.push((free, c(U, 0, 0)));
                out.push((free, c(Pi, 0, 0)));
                out.push((tor(1), c(One, 1, 0)));
            }
            -1 => {
                let m = (-1 - w) as u32;
                let (y, z) = if m % 2 == 1 { (c(U, 0, m), c(Pi, 0, m)) } else { (c(Pi, 0, m), c(One, 1, m)) };
                out.push((free, y));
                out.push((tor(s_q(three(), m as u64)), z));
            }
            -2 if w <= -2 => {
                let m = (-2 - w) as u32;
                out.push((tor(s_q(three(), m as u64)), c(One, 2, m)));
            }
            _ => {}
        },
        FieldId::R | FieldId::Q(_) => {
            let is_q = matches!(field, FieldId::Q(_));
            let t = s - w;
            if s == 0 && t % 2 == 0 && (!is_q || t == 0) {
                out.push((free, c(One, 0, t as u32)));
            }
            if s < 0 && t % 2 == 0 {
                out.push((tor(1), c(One, (-s) as u32, t as u32)));
            }
            if is_q && s == -1 {
                let m = (-1 - w) as u32;
                if m % 2 == 0 {
                    out.push((free, c(Two, 0, m)));
                } else {
                    out.push((tor(3 + nu((m as u64 + 1) / 2)), c(Two, 0, m)));
                }
                if w == -1 {
                    out.extend(field.support().iter().map(|&p| (free, c(Br(p), 0, 0))));
                }
            }
            if is_q && s == -2 {
                let r = (-2 - w) as u32;
                for &p in field.support() {
                    let pp = OddPrimePower::new(p as u64).unwrap();
                    out.push((tor(s_q(pp, r as u64)), c(A(p), 0, r)));
                }
            }
        }
    }
    out
}

/// The mod 2 class whose Bockstein tower ends on a torsion integral generator.
pub fn tower_source(field: &FieldId, g: Monomial) -> Monomial {
    use Unit::*;
    let t = g.tau + 1;
    match (field, g.unit) {
        (FieldId::Fq(_) | FieldId::Qq(_), U | One) => c(One, 0, t),
        (FieldId::Qq(_), Pi | PiU) => c(Pi, 0, t),
        (FieldId::Q2, Pi) => c(One, 0, t),
        (FieldId::Q2, One) if g.rho == 1 => c(One, 0, t),
        (FieldId::Q2, One) if g.tau % 2 == 1 => c(U, 0, t),
        (FieldId::Q2, One) => c(One, 1, t),
        (FieldId::Q(_), Two) => c(One, 0, t),
        (FieldId::Q(_), A(p)) => c(Br(p), 0, t),
        (_, One) => c(One, g.rho - 1, t),
        _ => panic!("no tower ends on {g}"),
    }
}

/// Generators of pi_{s,w} of HZ/2^n (or HZ), with orders.
///
/// Cokernel classes keep their integral names. Kernel classes are named
/// 2^{n-e} x where x is the top of the Bockstein tower.
pub fn coeff_basis(field: &FieldId, modulus: Modulus, s: i32, w: i32) -> Vec<(Order, Monomial)> {
    let n = match modulus {
        Modulus::Integral => return hz_basis(field, s, w),
        Modulus::Two(1) => return mod2_basis(field, s, w).into_iter().map(|m| (Order::Tor(1), m)).collect(),
        Modulus::Two(n) => n,
    };
    let mut out = Vec::new();
    for (o, g) in hz_basis(field, s, w) {
        let e = o.exponent().map_or(n, |e| e.min(n));
        out.push((Order::Tor(e), g));
    }
    for (o, g) in hz_basis(field, s - 1, w) {
        if let Some(e) = o.exponent() {
            let e = e.min(n);
            out.push((Order::Tor(e), tower_source(field, g).with_two(n - e)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(v: &[(Order, Monomial)]) -> String {
        v.iter().map(|(o, m)| format!("{}{{{}}}", o.group_string(true), m)).collect::<Vec<_>>().join(" ⊕ ")
    }

    #[test]
    fn examples() {
        let f5 = FieldId::fq(5).unwrap();
        assert_eq!(show(&coeff_basis(&f5, Modulus::Integral, -1, -1)), "ℤ/4{u}");
        let v = coeff_basis(&FieldId::Q2, Modulus::Two(1), -2, -3);
        assert_eq!(show(&v), "ℤ/2{ρ²τ}");
        let f3 = FieldId::fq(3).unwrap();
        assert_eq!(show(&coeff_basis(&f3, Modulus::Two(2), 0, -1)), "ℤ/2{2τ}");
    }

    #[test]
    fn mod2_ranks_agree() {
        let fields = [
            FieldId::AlgClosed,
            FieldId::fq(3).unwrap(),
            FieldId::fq(5).unwrap(),
            FieldId::qq(3).unwrap(),
            FieldId::qq(5).unwrap(),
            FieldId::Q2,
            FieldId::R,
            FieldId::rationals(&[3, 5]).unwrap(),
        ];
        for f in &fields {
            for s in -4..=0 {
                for w in -8..=0 {
                    let a = coeff_basis(f, Modulus::Two(1), s, w).len();
                    let mut b = 0;
                    for (o, _) in hz_basis(f, s, w) {
                        let _ = o;
                        b += 1;
                    }
                    b += hz_basis(f, s - 1, w).iter().filter(|(o, _)| *o != Order::Free).count();
                    assert_eq!(a, b, "{f} ({s},{w})");
                }
            }
        }
    }
}
