//! Generator names: monomials in tau, rho, h1, v1^2, iota and unit symbols.

use serde::{Deserialize, Serialize};
use std::fmt;

/// The non-rho unit part of a coefficient class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Unit {
    One,
    U,
    Pi,
    /// pi times u (only where u exists)
    PiU,
    /// [2] over the rationals
    Two,
    /// [p] over the rationals
    Br(u32),
    /// a_p over the rationals
    A(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    /// leading factor 2^two
    pub two: u32,
    pub iota: bool,
    pub unit: Unit,
    pub rho: u32,
    /// exponent k of v1^{2k}
    pub v: u32,
    pub h1: u32,
    pub tau: u32,
}

impl Default for Monomial {
    fn default() -> Self {
        Monomial { two: 0, iota: false, unit: Unit::One, rho: 0, v: 0, h1: 0, tau: 0 }
    }
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn coeff(unit: Unit, rho: u32, tau: u32) -> Monomial {
        Monomial { unit, rho, tau, ..Monomial::default() }
    }

    pub fn with_two(mut self, t: u32) -> Monomial {
        self.two = t;
        self
    }

    pub fn times_two(mut self, t: u32) -> Monomial {
        self.two += t;
        self
    }

    pub fn with_iota(mut self, on: bool) -> Monomial {
        self.iota = on;
        self
    }

    pub fn with_h1(mut self, a: u32) -> Monomial {
        self.h1 = a;
        self
    }

    pub fn with_v(mut self, k: u32) -> Monomial {
        self.v = k;
        self
    }

    pub fn with_tau(mut self, i: u32) -> Monomial {
        self.tau = i;
        self
    }

    /// The coefficient part (unit, rho, tau), dropping h1, v1, iota and the 2-power.
    pub fn coeff_part(self) -> Monomial {
        Monomial::coeff(self.unit, self.rho, self.tau)
    }

    /// (s, w) bidegree of the coefficient part.
    pub fn coeff_bideg(self) -> (i32, i32) {
        let (us, uw) = match self.unit {
            Unit::One => (0, 0),
            Unit::U | Unit::Pi | Unit::Two | Unit::Br(_) => (-1, -1),
            Unit::PiU | Unit::A(_) => (-2, -2),
        };
        (us - self.rho as i32, uw - self.rho as i32 - self.tau as i32)
    }

    /// (s, f, w) of h1^a v1^{2k} g, shifted by iota when present.
    pub fn tridegree(self) -> super::group::TriDeg {
        let (sg, wg) = self.coeff_bideg();
        let (a, k, i) = (self.h1 as i32, self.v as i32, self.iota as i32);
        super::group::TriDeg::new(a + 4 * k + sg - i, a - sg + i, a + 2 * k + wg)
    }

    pub fn ascii(&self) -> String {
        render(self, false)
    }
}

fn sup(n: u32) -> String {
    const D: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| D[c.to_digit(10).unwrap() as usize]).collect()
}

fn sub(n: u32) -> String {
    const D: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string().chars().map(|c| D[c.to_digit(10).unwrap() as usize]).collect()
}

fn render(m: &Monomial, uni: bool) -> String {
    let mut parts: Vec<String> = Vec::new();
    let pw = |base: &str, e: u32| -> String {
        match (e, uni) {
            (1, _) => base.to_string(),
            (_, true) => format!("{base}{}", sup(e)),
            (_, false) => format!("{base}^{e}"),
        }
    };
    if m.two > 0 {
        parts.push((1u128 << m.two).to_string());
    }
    if m.iota {
        parts.push(if uni { "ι".into() } else { "iota".into() });
    }
    match m.unit {
        Unit::One => {}
        Unit::U => parts.push("u".into()),
        Unit::Pi => parts.push(if uni { "π".into() } else { "pi".into() }),
        Unit::PiU => parts.push(if uni { "πu".into() } else { "pi u".into() }),
        Unit::Two => parts.push("[2]".into()),
        Unit::Br(p) => parts.push(format!("[{p}]")),
        Unit::A(p) => parts.push(if uni { format!("a{}", sub(p)) } else { format!("a_{p}") }),
    }
    if m.rho > 0 {
        parts.push(pw(if uni { "ρ" } else { "rho" }, m.rho));
    }
    if m.v > 0 {
        parts.push(if uni { format!("v₁{}", sup(2 * m.v)) } else { format!("v1^{}", 2 * m.v) });
    }
    if m.h1 > 0 {
        parts.push(pw(if uni { "h₁" } else { "h1" }, m.h1));
    }
    if m.tau > 0 {
        parts.push(pw(if uni { "τ" } else { "tau" }, m.tau));
    }
    if parts.is_empty() {
        return "1".into();
    }
    if uni {
        parts.concat()
    } else {
        parts.join(" ")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(self, true))
    }
}

/// A generator name: an integer combination of monomials, usually a single term.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Label(pub Vec<(i128, Monomial)>);

impl Label {
    pub fn mono(m: Monomial) -> Label {
        Label(vec![(1, m)])
    }

    pub fn single(&self) -> Option<Monomial> {
        match self.0.as_slice() {
            [(1, m)] => Some(*m),
            _ => None,
        }
    }

    fn render(&self, uni: bool) -> String {
        let mut out = String::new();
        for (i, (c, m)) in self.0.iter().enumerate() {
            let body = render(m, uni);
            let (neg, a) = (*c < 0, c.unsigned_abs());
            if i > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            if a != 1 {
                out.push_str(&a.to_string());
                out.push(if uni { '·' } else { '*' });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn ascii(&self) -> String {
        self.render(false)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(true))
    }
}
