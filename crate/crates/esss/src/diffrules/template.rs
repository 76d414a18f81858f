//! Monomial templates with linear exponents, used by rule files.
//!
//! Line format: `d{r}: <source> [if <condition>] -> <coefficient> <target> # <provenance>`.
//! Templates are space separated factors: `iota`, `u`, `pi`, `[p]`, `a_p`, `2^E`,
//! `rho^E`, `v1^E`, `h1^E`, `tau^E`, where E is an integer or a linear expression
//! such as `4k+2` in one variable. Conditions are `and`-separated comparisons
//! (`i >= 1`, `k % 2 == 1`).

use super::rules::{GeneratorRule, RuleBody, RuleError};
use crate::gradedalg::{Monomial, Unit};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lin {
    pub coef: i64,
    pub var: Option<String>,
    pub off: i64,
}

impl Lin {
    fn constant(c: i64) -> Lin {
        Lin { coef: 0, var: None, off: c }
    }

    fn eval(&self, b: &Binding) -> Option<i64> {
        match &self.var {
            None => Some(self.off),
            Some(v) => Some(self.coef * b.get(v)? + self.off),
        }
    }

    /// Bind the variable so that the expression equals x.
    fn unify(&self, x: i64, b: &mut Binding) -> bool {
        match &self.var {
            None => self.off == x,
            Some(v) => {
                let d = x - self.off;
                if self.coef == 0 || d % self.coef != 0 || d / self.coef < 0 {
                    return false;
                }
                let val = d / self.coef;
                match b.get(v) {
                    Some(&old) => old == val,
                    None => {
                        b.insert(v.clone(), val);
                        true
                    }
                }
            }
        }
    }
}

type Binding = BTreeMap<String, i64>;

fn parse_lin(s: &str) -> Result<Lin, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let s = s.trim_start_matches('{').trim_end_matches('}').to_string();
    if s.is_empty() {
        return Err("empty exponent".into());
    }
    let mut lin = Lin { coef: 0, var: None, off: 0 };
    let mut rest = s.as_str();
    let mut sign = 1;
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
            sign = 1;
            continue;
        }
        if let Some(r) = rest.strip_prefix('-') {
            rest = r;
            sign = -1;
            continue;
        }
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = &rest[..end];
        rest = &rest[end..];
        let split = term.find(|c: char| c.is_ascii_alphabetic()).unwrap_or(term.len());
        let (num, var) = term.split_at(split);
        let num = num.trim_end_matches('*');
        let n: i64 = if num.is_empty() { 1 } else { num.parse().map_err(|_| format!("bad number {num:?}"))? };
        if var.is_empty() {
            lin.off += sign * n;
        } else {
            if !var.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(format!("bad variable {var:?}"));
            }
            if lin.var.as_deref().map_or(false, |v| v != var) {
                return Err("exponents may use one variable".into());
            }
            lin.var = Some(var.to_string());
            lin.coef += sign * n;
        }
        sign = 1;
    }
    Ok(lin)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Template {
    pub two: Lin,
    pub iota: bool,
    pub unit: Unit,
    pub rho: Lin,
    /// exponent of v1 (twice the v1^2 power)
    pub v1: Lin,
    pub h1: Lin,
    pub tau: Lin,
}

fn parse_template(s: &str) -> Result<Template, String> {
    let zero = || Lin::constant(0);
    let mut t = Template { two: zero(), iota: false, unit: Unit::One, rho: zero(), v1: zero(), h1: zero(), tau: zero() };
    for tok in s.split_whitespace() {
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => (b, Some(parse_lin(e)?)),
            None => (tok, None),
        };
        let e = || exp.clone().unwrap_or(Lin::constant(1));
        match base {
            "1" => {}
            "iota" => t.iota = true,
            "u" => t.unit = Unit::U,
            "pi" => t.unit = Unit::Pi,
            "2" => t.two = e(),
            "rho" => t.rho = e(),
            "v1" => t.v1 = exp.clone().ok_or("v1 needs an exponent")?,
            "h1" => t.h1 = e(),
            "tau" => t.tau = e(),
            b if b.starts_with('[') && b.ends_with(']') => {
                let p: u32 = b[1..b.len() - 1].parse().map_err(|_| format!("bad prime in {b}"))?;
                t.unit = if p == 2 { Unit::Two } else { Unit::Br(p) };
            }
            b if b.starts_with("a_") => t.unit = Unit::A(b[2..].parse().map_err(|_| format!("bad prime in {b}"))?),
            other => return Err(format!("unknown factor {other:?}")),
        }
    }
    Ok(t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Cmp {
    Ge,
    Le,
    Gt,
    Lt,
    Eq,
    Ne,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cond {
    lhs: Lin,
    modulus: Option<i64>,
    cmp: Cmp,
    rhs: i64,
}

fn parse_cond(s: &str) -> Result<Vec<Cond>, String> {
    let mut out = Vec::new();
    for atom in s.split(" and ").flat_map(|a| a.split(',')) {
        let atom = atom.trim();
        if atom.is_empty() {
            continue;
        }
        let ops = [(">=", Cmp::Ge), ("<=", Cmp::Le), ("==", Cmp::Eq), ("!=", Cmp::Ne), (">", Cmp::Gt), ("<", Cmp::Lt)];
        let (pos, len, cmp) = ops
            .iter()
            .find_map(|(o, c)| atom.find(o).map(|p| (p, o.len(), c.clone())))
            .ok_or_else(|| format!("no comparison in {atom:?}"))?;
        let (l, r) = (&atom[..pos], &atom[pos + len..]);
        let rhs: i64 = r.trim().parse().map_err(|_| format!("bad bound {r:?}"))?;
        let (lhs, modulus) = match l.split_once('%') {
            Some((a, m)) => (parse_lin(a)?, Some(m.trim().parse().map_err(|_| format!("bad modulus {m:?}"))?)),
            None => (parse_lin(l)?, None),
        };
        out.push(Cond { lhs, modulus, cmp, rhs });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemplateRule {
    pub src: Template,
    pub cond: Vec<Cond>,
    pub coef: i128,
    pub tgt: Template,
}

impl TemplateRule {
    /// Variable binding under which the source template equals m (iota ignored).
    pub fn bind(&self, m: &Monomial) -> Option<Binding> {
        let t = &self.src;
        if t.unit != m.unit {
            return None;
        }
        let mut b = Binding::new();
        let pairs = [(&t.two, m.two), (&t.rho, m.rho), (&t.v1, 2 * m.v), (&t.h1, m.h1), (&t.tau, m.tau)];
        for (l, x) in pairs {
            if !l.unify(x as i64, &mut b) {
                return None;
            }
        }
        for c in &self.cond {
            let mut x = c.lhs.eval(&b)?;
            if let Some(md) = c.modulus {
                x = x.rem_euclid(md);
            }
            let ok = match c.cmp {
                Cmp::Ge => x >= c.rhs,
                Cmp::Le => x <= c.rhs,
                Cmp::Gt => x > c.rhs,
                Cmp::Lt => x < c.rhs,
                Cmp::Eq => x == c.rhs,
                Cmp::Ne => x != c.rhs,
            };
            if !ok {
                return None;
            }
        }
        Some(b)
    }

    pub fn apply(&self, m: Monomial) -> Vec<(i128, Monomial)> {
        let Some(b) = self.bind(&m) else { return vec![] };
        let t = &self.tgt;
        let ev = |l: &Lin| l.eval(&b).filter(|&x| x >= 0).map(|x| x as u32);
        let (Some(two), Some(rho), Some(v1), Some(h1), Some(tau)) = (ev(&t.two), ev(&t.rho), ev(&t.v1), ev(&t.h1), ev(&t.tau))
        else {
            return vec![];
        };
        if v1 % 2 != 0 || self.coef == 0 {
            return vec![];
        }
        let out = Monomial::coeff(t.unit, rho, tau).with_v(v1 / 2).with_h1(h1).with_iota(t.iota);
        vec![(self.coef << two, out)]
    }
}

/// Parse a higher-differential rule file.
pub fn parse_rule_file(text: &str) -> Result<Vec<GeneratorRule>, RuleError> {
    let mut rules = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| RuleError::Parse { line: ln + 1, msg };
        let (body, prov) = line.split_once('#').ok_or_else(|| err("missing provenance".into()))?;
        let prov = prov.trim();
        if prov.is_empty() {
            return Err(err("empty provenance".into()));
        }
        let (head, rest) = body.split_once(':').ok_or_else(|| err("expected d<r>:".into()))?;
        let page: u32 = head
            .trim()
            .strip_prefix('d')
            .and_then(|r| r.trim_matches(['{', '}']).parse().ok())
            .ok_or_else(|| err(format!("bad page {head:?}")))?;
        if page < 2 {
            return Err(err("rule files describe d_r for r >= 2".into()));
        }
        let (lhs, rhs) = rest.split_once("->").ok_or_else(|| err("missing ->".into()))?;
        let (src, cond) = match lhs.split_once(" if ") {
            Some((s, c)) => (s, c),
            None => (lhs, ""),
        };
        let rhs = rhs.trim();
        let (coef, tgt) = match rhs.split_once(char::is_whitespace) {
            Some((c, t)) if c.parse::<i128>().is_ok() => (c.parse().unwrap(), t),
            _ => return Err(err("target needs an integer coefficient".into())),
        };
        let src_t = parse_template(src).map_err(err)?;
        let tr = TemplateRule {
            src: src_t.clone(),
            cond: parse_cond(cond).map_err(err)?,
            coef,
            tgt: parse_template(tgt).map_err(err)?,
        };
        rules.push(GeneratorRule {
            page,
            iota: src_t.iota,
            source: src.trim().into(),
            condition: cond.trim().into(),
            target: tgt.trim().into(),
            provenance: prov.into(),
            body: RuleBody::Template(tr),
        });
    }
    Ok(rules)
}
