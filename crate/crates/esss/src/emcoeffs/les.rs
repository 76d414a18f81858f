//! pi(HZ/2^n) from the long exact sequence of multiplication by 2^n on HZ.

use super::field::FieldId;
use super::modules::hz_basis;
use crate::gradedalg::{hom_kernel_cokernel, AlgError, Graded, Hom, Label, Mat, Summand, TriDeg};

fn graded_hz(field: &FieldId, s: i32, w: i32) -> Vec<Summand> {
    hz_basis(field, s, w)
        .into_iter()
        .map(|(o, m)| Summand::new(o, Label::mono(m), TriDeg::new(s, 0, w)))
        .collect()
}

/// coker(2^n on pi_{s,w} HZ) and ker(2^n on pi_{s-1,w} HZ), the two ends of the sequence.
pub fn les_oracle(field: &FieldId, n: u32, s: i32, w: i32) -> Result<(Vec<Summand>, Vec<Summand>), AlgError> {
    let mut g = Graded::new();
    let mut h = Hom::new(TriDeg::new(0, 0, 0));
    for ss in [s, s - 1] {
        let d = TriDeg::new(ss, 0, w);
        let gs = graded_hz(field, ss, w);
        let k = gs.len();
        let mut m = Mat::identity(k);
        for i in 0..k {
            m.data[i * k + i] = 1i128 << n;
        }
        h.blocks.insert(d, m);
        g.insert(d, gs);
    }
    let (_, cok) = hom_kernel_cokernel(&g, &g, &h, TriDeg::new(s, 0, w))?;
    let (ker, _) = hom_kernel_cokernel(&g, &g, &h, TriDeg::new(s - 1, 0, w))?;
    Ok((cok, ker))
}
