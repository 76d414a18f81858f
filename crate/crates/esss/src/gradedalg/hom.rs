//! Kernels, cokernels and homology of maps between sums of cyclic groups.

use super::group::{Order, Summand, TriDeg};
use super::mat::{kernel_lattice, snf, Lattice, Mat};
use super::monomial::{Label, Monomial};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("window underflow at {0}: enlarge the window")]
    WindowUnderflow(TriDeg),
    #[error("not a complex at {deg}: d∘d is nonzero on {generator}")]
    NotAComplex { deg: TriDeg, generator: String },
    #[error("map is not well defined on {generator} at {deg}")]
    IllDefined { deg: TriDeg, generator: String },
    #[error("vector is not a cycle")]
    NotACycle,
}

/// Groups indexed by tridegree.
pub type Graded = BTreeMap<TriDeg, Vec<Summand>>;

/// A degree-shifting homomorphism: one matrix per source degree
/// (rows index target summands, columns source summands).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hom {
    pub shift: TriDeg,
    pub blocks: BTreeMap<TriDeg, Mat>,
}

impl Default for TriDeg {
    fn default() -> Self {
        TriDeg::new(0, 0, 0)
    }
}

impl Hom {
    pub fn new(shift: TriDeg) -> Hom {
        Hom { shift, blocks: BTreeMap::new() }
    }

    /// Matrix at a source degree, zero if absent.
    pub fn block(&self, d: TriDeg, rows: usize, cols: usize) -> Mat {
        match self.blocks.get(&d) {
            Some(m) => {
                assert_eq!((m.rows, m.cols), (rows, cols), "block shape mismatch at {d}");
                m.clone()
            }
            None => Mat::zeros(rows, cols),
        }
    }
}

pub fn moduli(s: &[Summand]) -> Vec<i128> {
    s.iter().map(|x| x.order.modulus()).collect()
}

fn unit_vec(n: usize, j: usize, c: i128) -> Vec<i128> {
    let mut v = vec![0; n];
    v[j] = c;
    v
}

fn relations(orders: &[i128]) -> Vec<Vec<i128>> {
    let n = orders.len();
    orders
        .iter()
        .enumerate()
        .filter(|(_, &m)| m != 0)
        .map(|(j, &m)| unit_vec(n, j, m))
        .collect()
}

/// {x in Z^n : m x lies in the relation lattice of the target}.
pub fn preimage_lattice(n: usize, m: &Mat, target: &[i128]) -> Lattice {
    if m.rows == 0 {
        let id: Vec<Vec<i128>> = (0..n).map(|j| unit_vec(n, j, 1)).collect();
        return Lattice::span(n, &id);
    }
    let mut diag = Mat::zeros(m.rows, m.rows);
    for (i, &t) in target.iter().enumerate() {
        diag[(i, i)] = t;
    }
    let big = m.hcat(&diag);
    let gens: Vec<Vec<i128>> = kernel_lattice(&big).into_iter().map(|v| v[..n].to_vec()).collect();
    Lattice::span(n, &gens)
}

fn inv_mod(u: i128, e: u32) -> i128 {
    let m = 1i128 << e;
    let u = u.rem_euclid(m);
    let mut x = 1i128;
    // Newton iteration for the inverse of an odd number mod 2^e
    for _ in 0..7 {
        x = (x * (2 - u * x)).rem_euclid(m);
    }
    debug_assert_eq!((x * u).rem_euclid(m), 1 % m);
    x
}

/// A subquotient Z of Z^n: cycles modulo boundaries, decomposed into cyclic summands.
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub n: usize,
    /// generators in ambient coordinates, with their orders
    pub gens: Vec<(Order, Vec<i128>)>,
    cycles: Lattice,
    u: Mat,
    keep: Vec<usize>,
    scale: Vec<i128>,
}

impl Subquotient {
    pub fn new(cycles: Lattice, boundaries: &[Vec<i128>]) -> Result<Subquotient, AlgError> {
        let n = cycles.n;
        let r = cycles.rank();
        let mut cols = Vec::with_capacity(boundaries.len());
        for b in boundaries {
            cols.push(cycles.solve(b).ok_or(AlgError::NotACycle)?);
        }
        let t = Mat::from_cols(r, &cols);
        let sm = snf(&t);
        let basis = Mat::from_cols(n, &cycles.basis);
        let mut gens = Vec::new();
        let mut keep = Vec::new();
        for i in 0..r {
            let d = if i < sm.rank { sm.d[(i, i)] } else { 0 };
            if let Some(o) = Order::from_modulus(d) {
                gens.push((o, basis.mul_vec(&sm.u_inv.col(i))));
                keep.push(i);
            }
        }
        let scale = vec![1; gens.len()];
        let mut sq = Subquotient { n, gens, cycles, u: sm.u, keep, scale };
        sq.prefer_monomials();
        Ok(sq)
    }

    fn raw_coords(&self, x: &[i128]) -> Result<Vec<i128>, AlgError> {
        let z = self.cycles.solve(x).ok_or(AlgError::NotACycle)?;
        let uz = self.u.mul_vec(&z);
        Ok(self
            .keep
            .iter()
            .zip(&self.gens)
            .zip(&self.scale)
            .map(|((&i, (o, _)), &s)| o.reduce(uz[i] * s))
            .collect())
    }

    /// Coordinates of a cycle in the generator basis (reduced mod orders).
    pub fn coords(&self, x: &[i128]) -> Result<Vec<i128>, AlgError> {
        self.raw_coords(x)
    }

    pub fn orders(&self) -> Vec<Order> {
        self.gens.iter().map(|g| g.0).collect()
    }

    /// Replace generators by multiples 2^t e_j of ambient basis vectors where possible.
    fn prefer_monomials(&mut self) {
        let maxe = self.gens.iter().filter_map(|g| g.0.exponent()).max().unwrap_or(0) + 6;
        for gi in 0..self.gens.len() {
            let cur = &self.gens[gi].1;
            if cur.iter().filter(|&&x| x != 0).count() == 1 && cur.iter().all(|&x| x >= 0) {
                let c = cur.iter().copied().find(|&x| x != 0).unwrap();
                if c.count_ones() == 1 {
                    continue;
                }
            }
            let order = self.gens[gi].0;
            'search: for t in 0..=maxe {
                for j in 0..self.n {
                    let cand = unit_vec(self.n, j, 1i128 << t);
                    let Ok(c) = self.raw_coords(&cand) else { continue };
                    let others_zero = c.iter().enumerate().all(|(k, &x)| k == gi || x == 0);
                    let u = c[gi];
                    let unit = match order {
                        Order::Free => u == 1 || u == -1,
                        Order::Tor(_) => u % 2 != 0,
                    };
                    if others_zero && unit {
                        let inv = match order {
                            Order::Free => u,
                            Order::Tor(e) => inv_mod(u, e),
                        };
                        self.scale[gi] = order.reduce(self.scale[gi] * inv);
                        self.gens[gi].1 = cand;
                        break 'search;
                    }
                }
            }
        }
    }
}

/// Name of an ambient vector, given the names and orders of the ambient basis.
pub fn name_vector(v: &[i128], basis: &[Summand]) -> Label {
    let mut terms: Vec<(i128, Monomial)> = Vec::new();
    for (j, &c) in v.iter().enumerate() {
        let c = basis[j].order.reduce(c);
        if c == 0 {
            continue;
        }
        for &(bc, m) in &basis[j].name.0 {
            terms.push((bc * c, m));
        }
    }
    if terms.len() == 1 {
        let (c, m) = terms[0];
        let t = c.unsigned_abs().trailing_zeros();
        return Label::mono(m.times_two(t));
    }
    Label(terms)
}

fn ambient_to_summands(sq: &Subquotient, basis: &[Summand], deg: TriDeg) -> Vec<Summand> {
    sq.gens.iter().map(|(o, v)| Summand::new(*o, name_vector(v, basis), deg)).collect()
}

/// Kernel and cokernel of `m : src -> tgt`, as subquotients of the source and target.
pub fn kernel_cokernel(
    src: &[Summand],
    tgt: &[Summand],
    m: &Mat,
    deg: TriDeg,
) -> Result<(Subquotient, Subquotient), AlgError> {
    let (a, b) = (moduli(src), moduli(tgt));
    let lat = preimage_lattice(src.len(), m, &b);
    for (j, r) in relations(&a).iter().enumerate() {
        if !lat.contains(r) {
            return Err(AlgError::IllDefined { deg, generator: src[j].name.to_string() });
        }
    }
    let ker = Subquotient::new(lat, &relations(&a))?;
    let full: Vec<Vec<i128>> = (0..tgt.len()).map(|j| unit_vec(tgt.len(), j, 1)).collect();
    let mut bnd: Vec<Vec<i128>> = (0..m.cols).map(|j| m.col(j)).collect();
    bnd.extend(relations(&b));
    let cok = Subquotient::new(Lattice::span(tgt.len(), &full), &bnd)?;
    Ok((ker, cok))
}

/// Kernel and cokernel of a Hom at one source degree, with named generators.
pub fn hom_kernel_cokernel(
    src: &Graded,
    tgt: &Graded,
    h: &Hom,
    d: TriDeg,
) -> Result<(Vec<Summand>, Vec<Summand>), AlgError> {
    let s = src.get(&d).ok_or(AlgError::WindowUnderflow(d))?;
    let td = d.add(h.shift);
    let t = tgt.get(&td).ok_or(AlgError::WindowUnderflow(td))?;
    let m = h.block(d, t.len(), s.len());
    let (k, c) = kernel_cokernel(s, t, &m, d)?;
    Ok((ambient_to_summands(&k, s, d), ambient_to_summands(&c, t, td)))
}

/// Homology at the middle of `a --f--> b --g--> c`.
pub fn homology_sq(
    a: &[Summand],
    b: &[Summand],
    c: &[Summand],
    f: &Mat,
    g: &Mat,
    deg: TriDeg,
) -> Result<Subquotient, AlgError> {
    let lat = preimage_lattice(b.len(), g, &moduli(c));
    let mut bnd: Vec<Vec<i128>> = Vec::new();
    for j in 0..f.cols {
        let col = f.col(j);
        if !lat.contains(&col) {
            return Err(AlgError::NotAComplex { deg, generator: a[j].name.to_string() });
        }
        bnd.push(col);
    }
    bnd.extend(relations(&moduli(b)));
    Subquotient::new(lat, &bnd)
}

/// Homology at `deg` of `d_in` (into deg) and `d_out` (out of deg), with named generators.
pub fn homology(groups: &Graded, d_in: &Hom, d_out: &Hom, deg: TriDeg) -> Result<Vec<Summand>, AlgError> {
    let b = groups.get(&deg).ok_or(AlgError::WindowUnderflow(deg))?;
    let ad = deg.sub(d_in.shift);
    let cd = deg.add(d_out.shift);
    let empty = Vec::new();
    let a = groups.get(&ad).unwrap_or(&empty);
    let c = groups.get(&cd).unwrap_or(&empty);
    let f = d_in.block(ad, b.len(), a.len());
    let g = d_out.block(deg, c.len(), b.len());
    let sq = homology_sq(a, b, c, &f, &g, deg)?;
    Ok(ambient_to_summands(&sq, b, deg))
}
