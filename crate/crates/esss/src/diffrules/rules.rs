//! Generator-level d_1 rules and their application to pages.

use super::template::TemplateRule;
use crate::emcoeffs::ring::{lift, pr, sq2, sq2_rho_sq1, sq3sq1, tau_mul};
use crate::emcoeffs::FieldId;
use crate::gradedalg::{AlgError, Hom, Mat, Monomial, Order, Summand, TriDeg};
use crate::sliceassembly::{d_shift, Page, Spectrum};
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RuleError {
    #[error("generator {generator} at {deg} is matched by several rules: {rules:?}")]
    Ambiguous { deg: TriDeg, generator: String, rules: Vec<String> },
    #[error("rule {rule} sends {generator} to {target}, which is not a generator at {deg}")]
    MissingTarget { deg: TriDeg, rule: String, generator: String, target: String },
    #[error("page {page} does not match rule set page {rules}")]
    PageMismatch { page: u32, rules: u32 },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Alg(#[from] AlgError),
}

type Matcher = fn(&Monomial) -> bool;
type Action = fn(&FieldId, Monomial) -> Vec<(i128, Monomial)>;

#[derive(Clone, Debug)]
pub enum RuleBody {
    Builtin { matches: Matcher, act: Action },
    Template(TemplateRule),
}

#[derive(Clone, Debug)]
pub struct GeneratorRule {
    pub page: u32,
    /// applies to iota classes (L only)
    pub iota: bool,
    pub source: String,
    pub condition: String,
    pub target: String,
    pub provenance: String,
    pub body: RuleBody,
}

impl GeneratorRule {
    pub fn matches(&self, m: &Monomial) -> bool {
        match &self.body {
            RuleBody::Builtin { matches, .. } => matches(m),
            RuleBody::Template(t) => t.bind(m).is_some(),
        }
    }

    /// Targets of a generator (given without iota); builtin rules keep the iota part of the source.
    pub fn apply(&self, field: &FieldId, m: Monomial) -> Vec<(i128, Monomial)> {
        match &self.body {
            RuleBody::Builtin { act, .. } => act(field, m).into_iter().map(|(c, t)| (c, t.with_iota(self.iota))).collect(),
            RuleBody::Template(t) => t.apply(m),
        }
    }

    pub fn describe(&self) -> String {
        let io = if self.iota { "iota " } else { "" };
        let cond = if self.condition.is_empty() { String::new() } else { format!(" if {}", self.condition) };
        format!("d{}: {io}{}{cond} -> {io}{} # {}", self.page, self.source, self.target, self.provenance)
    }
}

#[derive(Clone, Debug)]
pub struct RuleSet {
    pub field: FieldId,
    pub spectrum: Spectrum,
    pub r: u32,
    pub rules: Vec<GeneratorRule>,
}

fn collect(terms: Vec<Monomial>) -> Vec<(i128, Monomial)> {
    let mut m: BTreeMap<Monomial, i128> = BTreeMap::new();
    for t in terms {
        *m.entry(t).or_default() += 1;
    }
    m.into_iter().filter(|(_, c)| c % 2 != 0).map(|(t, _)| (1, t)).collect()
}

fn put(out: &mut Vec<Monomial>, v: Vec<Monomial>, a: u32, k: u32) {
    out.extend(v.into_iter().map(|x| x.with_h1(a).with_v(k)));
}

/// d_1 on a generator h1^a v1^{2k} g of E_1(kq).
pub fn kq_d1(field: &FieldId, g: Monomial) -> Vec<(i128, Monomial)> {
    let (a, k, x) = (g.h1, g.v, g.coeff_part());
    let mut out = Vec::new();
    if a == 0 {
        let xb = pr(field, x);
        if k % 2 == 1 {
            for t in &xb {
                put(&mut out, tau_mul(field, *t), 3, k - 1);
            }
        }
        for t in &xb {
            put(&mut out, sq2(field, *t), 1, k);
        }
        return collect(out);
    }
    if k % 2 == 1 {
        put(&mut out, tau_mul(field, x), a + 3, k - 1);
        put(&mut out, sq2_rho_sq1(field, x), a + 1, k);
    } else {
        put(&mut out, sq2(field, x), a + 1, k);
    }
    let t = sq3sq1(field, x);
    if a >= 2 {
        put(&mut out, t, a - 1, k + 1);
    } else if !t.is_empty() {
        let z = lift(field, &t).unwrap_or_else(|| panic!("no integral class reduces to Sq3Sq1 {x}"));
        out.push(z.with_v(k + 1));
    }
    collect(out)
}

fn rule(iota: bool, source: &str, cond: &str, target: &str, why: &str, matches: Matcher) -> GeneratorRule {
    GeneratorRule {
        page: 1,
        iota,
        source: source.into(),
        condition: cond.into(),
        target: target.into(),
        provenance: why.into(),
        body: RuleBody::Builtin { matches, act: kq_d1 },
    }
}

fn kq_rules(iota: bool) -> Vec<GeneratorRule> {
    vec![
        rule(iota, "v1^{2k} g", "a = 0, k even", "h1 v1^{2k} Sq2(pr g)", "integral cell, Sq2 component only", |m| {
            m.h1 == 0 && m.v % 2 == 0
        }),
        rule(
            iota,
            "v1^{2k} g",
            "a = 0, k odd",
            "h1^3 v1^{2k-2} tau pr(g) + h1 v1^{2k} Sq2(pr g)",
            "integral cell, tau-multiplication and Sq2 components",
            |m| m.h1 == 0 && m.v % 2 == 1,
        ),
        rule(
            iota,
            "h1 v1^{2k} g",
            "k even",
            "h1^2 v1^{2k} Sq2 g + v1^{2k+2} dSq2Sq1 g",
            "mod 2 cell adjacent to an integral cell",
            |m| m.h1 == 1 && m.v % 2 == 0,
        ),
        rule(
            iota,
            "h1 v1^{2k} g",
            "k odd",
            "h1^4 v1^{2k-2} tau g + h1^2 v1^{2k} (Sq2 + rho Sq1) g + v1^{2k+2} dSq2Sq1 g",
            "mod 2 cell adjacent to an integral cell",
            |m| m.h1 == 1 && m.v % 2 == 1,
        ),
        rule(
            iota,
            "h1^a v1^{2k} g",
            "a >= 2, k even",
            "h1^{a+1} v1^{2k} Sq2 g + h1^{a-1} v1^{2k+2} Sq3Sq1 g",
            "mod 2 cell",
            |m| m.h1 >= 2 && m.v % 2 == 0,
        ),
        rule(
            iota,
            "h1^a v1^{2k} g",
            "a >= 2, k odd",
            "h1^{a+3} v1^{2k-2} tau g + h1^{a+1} v1^{2k} (Sq2 + rho Sq1) g + h1^{a-1} v1^{2k+2} Sq3Sq1 g",
            "mod 2 cell",
            |m| m.h1 >= 2 && m.v % 2 == 1,
        ),
    ]
}

/// The d_1 rule set. For L the same rules act on kernel classes and, through the
/// cokernel projection, on iota classes.
pub fn d1_ruleset(field: &FieldId, spectrum: Spectrum) -> RuleSet {
    let mut rules = kq_rules(false);
    if spectrum == Spectrum::L {
        rules.extend(kq_rules(true));
    }
    RuleSet { field: field.clone(), spectrum, r: 1, rules }
}

/// Matrix of a map given on generator names. `f` receives the source name without its
/// 2-power and returns integer combinations of target names (iota included);
/// the 2-power of the source and target names is accounted for here.
pub fn matrix_by_names(
    src: &[Summand],
    tgt: &[Summand],
    deg: TriDeg,
    mut f: impl FnMut(Monomial) -> Result<Option<(String, Vec<(i128, Monomial)>)>, RuleError>,
) -> Result<Mat, RuleError> {
    let mut index: HashMap<Monomial, (usize, u32, Order)> = HashMap::new();
    for (i, t) in tgt.iter().enumerate() {
        if let Some(m) = t.name.single() {
            index.insert(m.with_two(0), (i, m.two, t.order));
        }
    }
    let mut mat = Mat::zeros(tgt.len(), src.len());
    for (j, s) in src.iter().enumerate() {
        let Some(m) = s.name.single() else { continue };
        let Some((why, terms)) = f(m.with_two(0))? else { continue };
        for (c, t) in terms {
            let Some(&(i, two, order)) = index.get(&t) else {
                return Err(RuleError::MissingTarget { deg, rule: why, generator: m.to_string(), target: t.to_string() });
            };
            let c = c << m.two;
            if c % (1i128 << two) != 0 {
                return Err(AlgError::IllDefined { deg, generator: m.to_string() }.into());
            }
            mat[(i, j)] = order.reduce(mat[(i, j)] + (c >> two));
        }
    }
    Ok(mat)
}

/// The differential of a rule set on a page. Generators matched by no rule go to zero.
pub fn apply_rules(page: &Page, rules: &RuleSet) -> Result<Hom, RuleError> {
    if page.r != rules.r {
        return Err(RuleError::PageMismatch { page: page.r, rules: rules.r });
    }
    let shift = d_shift(page.r);
    let mut hom = Hom::new(shift);
    for (d, src) in &page.groups {
        let td = d.add(shift);
        let Some(tgt) = page.groups.get(&td) else { continue };
        if !page.window.contains(td) {
            continue;
        }
        let mat = matrix_by_names(src, tgt, *d, |m| {
            let base = m.with_iota(false);
            let hits: Vec<&GeneratorRule> =
                rules.rules.iter().filter(|r| r.iota == m.iota && r.matches(&base)).collect();
            match hits.as_slice() {
                [] => Ok(None),
                [r] => Ok(Some((r.describe(), r.apply(&page.field, base)))),
                many => Err(RuleError::Ambiguous {
                    deg: *d,
                    generator: m.to_string(),
                    rules: many.iter().map(|r| r.describe()).collect(),
                }),
            }
        })?;
        if !mat.is_zero() {
            hom.blocks.insert(*d, mat);
        }
    }
    Ok(hom)
}

/// Check d∘d = 0 wherever both maps are defined on the page.
pub fn check_dd_zero(page: &Page) -> Result<usize, AlgError> {
    let sh = page.diff.shift;
    let mut checked = 0;
    for (d, m1) in &page.diff.blocks {
        let d2 = d.add(sh);
        let Some(m2) = page.diff.blocks.get(&d2) else { continue };
        let tgt = page.at(d2.add(sh));
        let prod = m2.mul(m1);
        for i in 0..prod.rows {
            for j in 0..prod.cols {
                if tgt[i].order.reduce(prod[(i, j)]) != 0 {
                    return Err(AlgError::NotAComplex { deg: *d, generator: page.at(*d)[j].name.to_string() });
                }
            }
        }
        checked += 1;
    }
    Ok(checked)
}
