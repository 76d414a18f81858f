//! Independent computation of pi_{s,w}(HZ/2^n) from a small Bockstein spectral
//! sequence: E_1 = mod 2 coefficients tensor F_2[h0]/(h0^n), with the differentials
//! read off the Bockstein towers of the base field.

use super::field::FieldId;
use super::ring::{mod2_basis, pi_x_q, x_q};
use crate::gradedalg::{Label, Monomial, Order, Unit};
use crate::numthy::{s_q, OddPrimePower};

fn c(u: Unit, r: u32, t: u32) -> Monomial {
    Monomial::coeff(u, r, t)
}

/// Page and target of the Bockstein differential on a mod 2 basis element.
pub fn bockstein_rule(field: &FieldId, m: Monomial) -> Option<(u32, Vec<Monomial>)> {
    use Unit::*;
    let i = m.tau;
    if i == 0 {
        return None;
    }
    let nu = |x: u32| x.trailing_zeros();
    match field {
        FieldId::AlgClosed => None,
        FieldId::Fq(q) | FieldId::Qq(q) => {
            let r = s_q(*q, (i - 1) as u64);
            match (m.unit, m.rho) {
                (One, 0) => Some((r, vec![x_q(*q).with_tau(i - 1)])),
                (Pi, 0) => Some((r, vec![pi_x_q(*q).with_tau(i - 1)])),
                _ => None,
            }
        }
        FieldId::Q2 => match (m.unit, m.rho, i % 2) {
            (One, 0, 1) => Some((1, vec![c(One, 1, i - 1)])),
            (One, 1, 1) => Some((1, vec![c(One, 2, i - 1)])),
            (One, 0, 0) => Some((3 + nu(i / 2), vec![c(Pi, 0, i - 1)])),
            (U, 0, 0) => Some((3 + nu(i / 2), vec![c(One, 2, i - 1)])),
            _ => None,
        },
        FieldId::R => (i % 2 == 1).then(|| (1, vec![c(One, m.rho + 1, i - 1)])),
        FieldId::Q(_) => match m.unit {
            One if i % 2 == 1 => Some((1, vec![c(One, m.rho + 1, i - 1)])),
            One if m.rho == 0 => Some((3 + nu(i / 2), vec![c(Two, 0, i - 1)])),
            A(_) if i % 2 == 1 => Some((1, vec![c(One, 3, i - 1)])),
            Br(p) if p % 4 == 3 && i % 2 == 1 => Some((1, vec![c(One, 2, i - 1), c(A(p), 0, i - 1)])),
            Br(p) => {
                let pp = OddPrimePower::new(p as u64).unwrap();
                let mut t = vec![c(A(p), 0, i - 1)];
                if (i - 1) % 2 == 1 {
                    t.push(c(One, 2, i - 1));
                }
                Some((s_q(pp, (i - 1) as u64), t))
            }
            _ => None,
        },
    }
}

/// Subspace of F_2^d, kept in reduced echelon form on bitmasks.
#[derive(Clone, Debug, Default)]
struct Sub {
    rows: Vec<u64>,
}

impl Sub {
    fn reduce(&self, mut v: u64) -> u64 {
        for &r in &self.rows {
            let p = 63 - r.leading_zeros();
            if v >> p & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    fn add(&mut self, v: u64) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let p = 63 - v.leading_zeros();
        for r in self.rows.iter_mut() {
            if *r >> p & 1 == 1 {
                *r ^= v;
            }
        }
        self.rows.push(v);
        self.rows.sort_unstable_by(|a, b| b.cmp(a));
        true
    }

    fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn full(d: usize) -> Sub {
        let mut s = Sub::default();
        for j in 0..d {
            s.add(1 << j);
        }
        s
    }

    fn join(&self, o: &Sub) -> Sub {
        let mut s = self.clone();
        for &r in &o.rows {
            s.add(r);
        }
        s
    }
}

/// Elements x of `z` with f(x) in `b`.
fn preimage(z: &Sub, b: &Sub, f: impl Fn(u64) -> u64) -> Sub {
    let mut pairs: Vec<(u64, u64)> = z.rows.iter().map(|&x| (b.reduce(f(x)), x)).collect();
    let mut out = Sub::default();
    let mut i = 0;
    while i < pairs.len() {
        let (y, x) = pairs[i];
        if y == 0 {
            out.add(x);
            i += 1;
            continue;
        }
        let p = 63 - y.leading_zeros();
        for k in i + 1..pairs.len() {
            if pairs[k].0 >> p & 1 == 1 {
                pairs[k] = (b.reduce(pairs[k].0 ^ y), pairs[k].1 ^ x);
            }
        }
        i += 1;
    }
    out
}

struct Column {
    basis: Vec<Monomial>,
    z: Vec<Sub>,
    b: Vec<Sub>,
}

fn encode(basis: &[Monomial], terms: &[Monomial]) -> u64 {
    let mut v = 0;
    for t in terms {
        let j = basis.iter().position(|m| m == t).unwrap_or_else(|| panic!("{t} not in basis"));
        v ^= 1 << j;
    }
    v
}

/// pi_{s,w}(HZ/2^n) at all stems s in [smin, 0] of a weight w, as (order, name) lists.
/// `n = None` computes the integral groups.
pub fn mass_oracle(field: &FieldId, n: Option<u32>, w: i32, smin: i32) -> Vec<(i32, Vec<(Order, Label)>)> {
    let cutoff = n.unwrap_or(48) as usize;
    let lo = smin - 1;
    let stems: Vec<i32> = (lo..=1).collect();
    let mut cols: Vec<Column> = stems
        .iter()
        .map(|&s| {
            let basis = mod2_basis(field, s, w);
            let d = basis.len();
            Column { basis, z: vec![Sub::full(d); cutoff], b: vec![Sub::default(); cutoff] }
        })
        .collect();
    let rules: Vec<Vec<Option<(u32, u64)>>> = (0..cols.len())
        .map(|k| {
            cols[k]
                .basis
                .iter()
                .map(|&m| {
                    let rule = bockstein_rule(field, m).filter(|_| k > 0);
                    rule.map(|(r, t)| (r, encode(&cols[k - 1].basis, &t)))
                })
                .collect()
        })
        .collect();
    let maxr = rules.iter().flatten().flatten().map(|x| x.0).max().unwrap_or(0);
    for r in 1..=maxr {
        let dmat = |k: usize, x: u64| -> u64 {
            let mut y = 0;
            for (j, rule) in rules[k].iter().enumerate() {
                if x >> j & 1 == 1 {
                    if let Some((rr, t)) = rule {
                        if *rr == r {
                            y ^= t;
                        }
                    }
                }
            }
            y
        };
        let old: Vec<(Vec<Sub>, Vec<Sub>)> = cols.iter().map(|c| (c.z.clone(), c.b.clone())).collect();
        for k in 0..cols.len() {
            for j in 0..cutoff {
                let t = j + r as usize;
                if k > 0 && t < cutoff {
                    cols[k].z[j] = preimage(&old[k].0[j], &old[k - 1].1[t], |x| dmat(k, x));
                }
                if k + 1 < cols.len() && j >= r as usize {
                    for &x in &old[k + 1].0[j - r as usize].rows {
                        let y = dmat(k + 1, x);
                        cols[k].b[j].add(y);
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for (k, &s) in stems.iter().enumerate() {
        if s < smin || s > 0 {
            continue;
        }
        out.push((s, towers(&cols[k], n.is_none())));
    }
    out
}

fn towers(col: &Column, integral: bool) -> Vec<(Order, Label)> {
    let jmax = col.z.len();
    let rank = |j: i64, k: usize| -> usize {
        if j < 0 || j as usize + k >= jmax {
            return 0;
        }
        let (z, b) = (&col.z[j as usize], &col.b[j as usize + k]);
        z.join(b).dim() - b.dim()
    };
    let starts = if integral { jmax / 2 } else { jmax };
    let mut out = Vec::new();
    for j in 0..starts {
        let ji = j as i64;
        let mut lengths = Vec::new();
        for l in 1..=(jmax - j) {
            let a = rank(ji, l - 1) as i64 - rank(ji - 1, l) as i64;
            let b = rank(ji, l) as i64 - rank(ji - 1, l + 1) as i64;
            for _ in 0..(a - b) {
                lengths.push(l);
            }
        }
        if lengths.is_empty() {
            continue;
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        let reps = representatives(col, j, lengths.len());
        for (idx, l) in lengths.into_iter().enumerate() {
            let order = if integral && j + l == jmax { Order::Free } else { Order::Tor(l as u32) };
            let name = match reps.get(idx) {
                Some(&(v, _)) => name_of(&col.basis, v, j as u32),
                None => Label(vec![]),
            };
            out.push((order, name));
        }
    }
    out
}

/// Tower bottoms at filtration j, longest towers first.
fn representatives(col: &Column, j: usize, want: usize) -> Vec<(u64, usize)> {
    let mut span = col.b[j].clone();
    if j > 0 {
        span = span.join(&col.z[j - 1]);
    }
    let d = col.basis.len();
    let mut cands: Vec<u64> = (0..d).map(|i| 1u64 << i).collect();
    cands.extend(col.z[j].rows.iter().copied());
    let mut reps = Vec::new();
    for v in cands {
        if reps.len() == want {
            break;
        }
        if !col.z[j].contains(v) || span.contains(v) {
            continue;
        }
        span.add(v);
        let mut len = 0;
        while j + len < col.z.len() && !col.b[j + len].contains(v) {
            len += 1;
        }
        reps.push((v, len));
    }
    reps.sort_by(|a, b| b.1.cmp(&a.1));
    reps
}

fn name_of(basis: &[Monomial], v: u64, two: u32) -> Label {
    Label(
        (0..basis.len())
            .filter(|&i| v >> i & 1 == 1)
            .map(|i| (1, basis[i].with_two(two)))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::emcoeffs::modules::{coeff_basis, Modulus};

    #[test]
    fn f5_integral() {
        let f5 = FieldId::fq(5).unwrap();
        let v = mass_oracle(&f5, None, -1, -2);
        let at = |s: i32| v.iter().find(|x| x.0 == s).unwrap().1.clone();
        assert_eq!(at(-1).len(), 1);
        assert_eq!(at(-1)[0].0, Order::Tor(2));
        assert!(at(0).is_empty());
    }

    #[test]
    fn matches_closed_form_small() {
        let fields = [FieldId::fq(3).unwrap(), FieldId::Q2, FieldId::R, FieldId::rationals(&[3, 5]).unwrap()];
        for f in &fields {
            for n in [None, Some(1), Some(2), Some(4)] {
                for w in -6..=0 {
                    for (s, got) in mass_oracle(f, n, w, -4) {
                        let m = n.map_or(Modulus::Integral, Modulus::Two);
                        let mut a: Vec<Order> = got.iter().map(|x| x.0).collect();
                        let mut b: Vec<Order> = coeff_basis(f, m, s, w).iter().map(|x| x.0).collect();
                        a.sort();
                        b.sort();
                        assert_eq!(a, b, "{f} n={n:?} ({s},{w})");
                    }
                }
            }
        }
    }
}
