//! Cyclic summands, tridegrees and windows.

use super::monomial::Label;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TriDeg {
    pub s: i32,
    pub f: i32,
    pub w: i32,
}

impl TriDeg {
    pub const fn new(s: i32, f: i32, w: i32) -> TriDeg {
        TriDeg { s, f, w }
    }

    /// Slice index (s+f)/2, if integral.
    pub fn slice(self) -> Option<i32> {
        if (self.s + self.f).rem_euclid(2) == 0 {
            Some((self.s + self.f) / 2)
        } else {
            None
        }
    }

    pub fn add(self, o: TriDeg) -> TriDeg {
        TriDeg::new(self.s + o.s, self.f + o.f, self.w + o.w)
    }

    pub fn sub(self, o: TriDeg) -> TriDeg {
        TriDeg::new(self.s - o.s, self.f - o.f, self.w - o.w)
    }
}

impl fmt::Display for TriDeg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.s, self.f, self.w)
    }
}

/// Closed integer interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Range {
    pub lo: i32,
    pub hi: i32,
}

impl Range {
    pub const fn new(lo: i32, hi: i32) -> Range {
        Range { lo, hi }
    }

    pub fn contains(self, x: i32) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn iter(self) -> impl Iterator<Item = i32> {
        self.lo..=self.hi
    }

    pub fn widen(self, by: i32) -> Range {
        Range::new(self.lo - by, self.hi + by)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub s: Range,
    pub f: Range,
    pub w: Range,
}

impl Window {
    pub const fn new(s: (i32, i32), f: (i32, i32), w: (i32, i32)) -> Window {
        Window { s: Range::new(s.0, s.1), f: Range::new(f.0, f.1), w: Range::new(w.0, w.1) }
    }

    pub fn contains(&self, d: TriDeg) -> bool {
        self.s.contains(d.s) && self.f.contains(d.f) && self.w.contains(d.w)
    }

    /// Tridegrees with s+f even, in (s, f, w) lexicographic order.
    pub fn degrees(&self) -> Vec<TriDeg> {
        let mut out = Vec::new();
        for s in self.s.iter() {
            for f in self.f.iter() {
                if (s + f).rem_euclid(2) != 0 {
                    continue;
                }
                for w in self.w.iter() {
                    out.push(TriDeg::new(s, f, w));
                }
            }
        }
        out
    }
}

/// Order of a cyclic summand: Z (2-locally) or Z/2^e.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Order {
    Tor(u32),
    Free,
}

impl Order {
    /// Relation modulus: 0 for free, 2^e otherwise.
    pub fn modulus(self) -> i128 {
        match self {
            Order::Free => 0,
            Order::Tor(e) => 1i128 << e,
        }
    }

    pub fn from_modulus(d: i128) -> Option<Order> {
        if d == 0 {
            return Some(Order::Free);
        }
        let e = d.unsigned_abs().trailing_zeros();
        if e == 0 {
            None
        } else {
            Some(Order::Tor(e))
        }
    }

    pub fn reduce(self, x: i128) -> i128 {
        match self {
            Order::Free => x,
            Order::Tor(e) => x.rem_euclid(1i128 << e),
        }
    }

    pub fn exponent(self) -> Option<u32> {
        match self {
            Order::Free => None,
            Order::Tor(e) => Some(e),
        }
    }

    pub fn group_string(self, uni: bool) -> String {
        match (self, uni) {
            (Order::Free, true) => "ℤ".into(),
            (Order::Free, false) => "Z".into(),
            (Order::Tor(e), true) => format!("ℤ/{}", 1u128 << e),
            (Order::Tor(e), false) => format!("Z/{}", 1u128 << e),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Summand {
    pub order: Order,
    pub name: Label,
    pub deg: TriDeg,
}

impl Summand {
    pub fn new(order: Order, name: Label, deg: TriDeg) -> Summand {
        Summand { order, name, deg }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{{}}}", self.order.group_string(true), self.name)
    }
}

/// Multiset of orders, the isomorphism invariant of a 2-local group.
pub fn order_profile(summands: &[Summand]) -> Vec<Order> {
    let mut v: Vec<Order> = summands.iter().map(|x| x.order).collect();
    v.sort();
    v
}

/// (log2 of torsion order, free rank).
pub fn size(orders: &[Order]) -> (u32, u32) {
    let mut t = 0;
    let mut r = 0;
    for o in orders {
        match o {
            Order::Free => r += 1,
            Order::Tor(e) => t += e,
        }
    }
    (t, r)
}

/// Direct sum rendering like "Z{1} + Z/2{iota h1 tau}".
pub fn group_string(summands: &[Summand], uni: bool) -> String {
    if summands.is_empty() {
        return "0".into();
    }
    let sep = if uni { " ⊕ " } else { " + " };
    summands
        .iter()
        .map(|x| {
            let name = if uni { x.name.to_string() } else { x.name.ascii() };
            format!("{}{{{}}}", x.order.group_string(uni), name)
        })
        .collect::<Vec<_>>()
        .join(sep)
}

/// A direct sum of cyclic groups over a window, kept in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupWindow {
    pub window: Window,
    pub summands: Vec<Summand>,
}

impl GroupWindow {
    pub fn new(window: Window, mut summands: Vec<Summand>) -> GroupWindow {
        for x in &summands {
            assert!(window.contains(x.deg), "summand {} at {} outside window", x, x.deg);
        }
        summands.sort_by(|a, b| (a.deg, &a.name).cmp(&(b.deg, &b.name)));
        GroupWindow { window, summands }
    }

    pub fn at(&self, d: TriDeg) -> Vec<&Summand> {
        self.summands.iter().filter(|x| x.deg == d).collect()
    }
}
