//! Slices of kq and L, the Adams operation on slices, and its kernel/cokernel families.

use crate::emcoeffs::{hz_basis, FieldId, Modulus};
use crate::gradedalg::{Mat, Monomial, Order};
use crate::numthy::a_q;
use serde::{Deserialize, Serialize};
use std::fmt;

/// One wedge summand Σ^{a,b} HA of a slice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceSummand {
    pub shift: (i32, i32),
    /// exponent m of Z/2^m, `None` for Z
    pub modulus: Option<u32>,
    /// the generating monomial in h1 and v1^2 (kq only)
    pub cell: Option<(u32, u32)>,
}

impl SliceSummand {
    pub fn coeff_modulus(&self) -> Modulus {
        self.modulus.map_or(Modulus::Integral, Modulus::Two)
    }
}

impl fmt::Display for SliceSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.shift;
        let sus = if (a, b) == (0, 0) { String::new() } else { format!("Σ^{{{a},{b}}}") };
        match self.modulus {
            None => write!(f, "{sus}Hℤ"),
            Some(m) => write!(f, "{sus}Hℤ/{}", 1u128 << m),
        }
    }
}

/// s_c kq: h1^a v1^{2k} with a + 2k = c.
pub fn slices_kq(c: u32) -> Vec<SliceSummand> {
    (0..=c)
        .rev()
        .filter(|a| (c - a) % 2 == 0)
        .map(|a| {
            let k = (c - a) / 2;
            SliceSummand {
                shift: ((a + 4 * k) as i32, c as i32),
                modulus: if a == 0 { None } else { Some(1) },
                cell: Some((a, k)),
            }
        })
        .collect()
}

/// s_c L.
pub fn slices_l(c: u32) -> Vec<SliceSummand> {
    if c == 0 {
        return vec![
            SliceSummand { shift: (-1, 0), modulus: None, cell: None },
            SliceSummand { shift: (0, 0), modulus: None, cell: None },
        ];
    }
    let c = c as i32;
    let mut v: Vec<SliceSummand> =
        (-1..=c - 2).map(|i| SliceSummand { shift: (c + i, c), modulus: Some(1), cell: None }).collect();
    v.push(SliceSummand { shift: (2 * c - 1, c), modulus: Some(a_q(c as u32).unwrap()), cell: None });
    v
}

/// Exponent N with psi^3 - 1 acting as 2^N on the integral cell v1^{2k}, k >= 1.
pub fn psi_exponent(k: u32) -> u32 {
    k.trailing_zeros() + 3
}

/// psi^3 - 1 on the summands of s_c kq, as a diagonal integer matrix
/// (the multiplier on each cell's coefficients).
pub fn psi3_on_slices(c: u32) -> Mat {
    let cells = slices_kq(c);
    let mut m = Mat::zeros(cells.len(), cells.len());
    for (j, cell) in cells.iter().enumerate() {
        if let Some((0, k)) = cell.cell {
            if k >= 1 {
                m[(j, j)] = 1i128 << psi_exponent(k);
            }
        }
    }
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KcKind {
    K,
    C,
}

/// One member of a kernel or cokernel family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KcSummand {
    /// coefficient bidegree (s, w)
    pub coeff: (i32, i32),
    pub order: Order,
    pub name: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KcFamily {
    pub field: FieldId,
    pub k: u32,
    pub kind: KcKind,
    pub summands: Vec<KcSummand>,
}

/// Kernel and cokernel of psi^3 - 1 on the negative-stem integral coefficients
/// of the cell v1^{2k}, for tau-powers up to `imax`.
pub fn kc_families(field: &FieldId, k: u32, imax: u32) -> (KcFamily, KcFamily) {
    let mut kf = Vec::new();
    let mut cf = Vec::new();
    for s in [-1, -2] {
        for w in (s - imax as i32..=s).rev() {
            for (o, g) in hz_basis(field, s, w) {
                let name = g.with_v(k);
                if k == 0 {
                    kf.push(KcSummand { coeff: (s, w), order: o, name });
                    cf.push(KcSummand { coeff: (s, w), order: o, name });
                    continue;
                }
                let n = psi_exponent(k);
                match o {
                    Order::Free => cf.push(KcSummand { coeff: (s, w), order: Order::Tor(n), name }),
                    Order::Tor(e) => {
                        let t = e.saturating_sub(n);
                        kf.push(KcSummand { coeff: (s, w), order: Order::Tor(e.min(n)), name: name.with_two(t) });
                        cf.push(KcSummand { coeff: (s, w), order: Order::Tor(e.min(n)), name });
                    }
                }
            }
        }
    }
    (
        KcFamily { field: field.clone(), k, kind: KcKind::K, summands: kf },
        KcFamily { field: field.clone(), k, kind: KcKind::C, summands: cf },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(v: &[SliceSummand]) -> String {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
    }

    #[test]
    fn slice_lists() {
        assert_eq!(show(&slices_kq(0)), "Hℤ");
        assert_eq!(show(&slices_kq(2)), "Σ^{2,2}Hℤ/2, Σ^{4,2}Hℤ");
        assert_eq!(show(&slices_kq(3)), "Σ^{3,3}Hℤ/2, Σ^{5,3}Hℤ/2");
        assert_eq!(show(&slices_l(0)), "Σ^{-1,0}Hℤ, Hℤ");
        assert_eq!(show(&slices_l(1)), "Σ^{0,1}Hℤ/2, Σ^{1,1}Hℤ/2");
        assert_eq!(show(&slices_l(2)), "Σ^{1,2}Hℤ/2, Σ^{2,2}Hℤ/2, Σ^{3,2}Hℤ/8");
    }

    #[test]
    fn psi() {
        let m = psi3_on_slices(2);
        assert_eq!(m[(1, 1)], 8);
        assert_eq!(m[(0, 0)], 0);
        assert!(psi3_on_slices(1).is_zero());
        assert_eq!(psi3_on_slices(4)[(2, 2)], 16);
    }

    #[test]
    fn kc_examples() {
        let f3 = FieldId::fq(3).unwrap();
        let (k, c) = kc_families(&f3, 1, 3);
        let ki = k.summands.iter().find(|x| x.name.tau == 3).unwrap();
        assert_eq!((ki.order, ki.name.to_string()), (Order::Tor(3), "2ρv₁²τ³".to_string()));
        let ci = c.summands.iter().find(|x| x.name.tau == 3).unwrap();
        assert_eq!(ci.order, Order::Tor(3));
        let f5 = FieldId::fq(5).unwrap();
        let (k, c) = kc_families(&f5, 1, 0);
        assert_eq!(k.summands[0].order, Order::Tor(2));
        assert_eq!(c.summands[0].order, Order::Tor(2));
    }
}
