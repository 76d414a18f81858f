//! Verification suites behind `esss check`.

use super::{compute, page_markdown, pi_cell, pi_markdown, render_svg, ChartSpec, CliError, PageSel};
use crate::diffrules::check_dd_zero;
use crate::emcoeffs::les::les_oracle;
use crate::emcoeffs::oracle::mass_oracle;
use crate::emcoeffs::{coeff_basis, FieldId, Modulus};
use crate::gradedalg::{Order, Window};
use crate::numthy::{bernoulli_denom_two_parts, nu2};
use crate::sliceassembly::{e1_page, Spectrum};
use crate::ssengine::{compare, places};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    /// the statement being checked
    pub claim: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckLine {
    fn new(name: impl Into<String>, claim: &str, pass: bool, detail: impl Into<String>) -> CheckLine {
        CheckLine { name: name.into(), claim: claim.into(), pass, detail: detail.into() }
    }

    pub fn render(&self) -> String {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            format!("{tag} {} ({})", self.name, self.claim)
        } else {
            format!("{tag} {} ({}): {}", self.name, self.claim, self.detail)
        }
    }
}

pub fn all_pass(lines: &[CheckLine]) -> bool {
    lines.iter().all(|l| l.pass)
}

/// The ten field instances used throughout the checks.
pub fn standard_fields() -> Vec<FieldId> {
    vec![
        FieldId::AlgClosed,
        FieldId::fq(3).unwrap(),
        FieldId::fq(5).unwrap(),
        FieldId::fq(7).unwrap(),
        FieldId::fq(13).unwrap(),
        FieldId::qq(3).unwrap(),
        FieldId::qq(5).unwrap(),
        FieldId::Q2,
        FieldId::R,
        FieldId::rationals(&[3, 5, 7]).unwrap(),
    ]
}

fn sorted(mut v: Vec<Order>) -> Vec<Order> {
    v.sort();
    v
}

/// Bockstein spectral sequence and long exact sequence against the closed forms for HZ/2^n.
pub fn oracles(wmin: i32, smin: i32) -> Vec<CheckLine> {
    let mut out = Vec::new();
    for f in standard_fields() {
        let mut bad = Vec::new();
        for n in [Some(1), Some(2), Some(3), Some(4), None] {
            let m = n.map_or(Modulus::Integral, Modulus::Two);
            for w in wmin..=0 {
                for (s, got) in mass_oracle(&f, n, w, smin) {
                    let a = sorted(got.iter().map(|x| x.0).collect());
                    let b = sorted(coeff_basis(&f, m, s, w).iter().map(|x| x.0).collect());
                    if a != b {
                        bad.push(format!("n={n:?} ({s},{w})"));
                    }
                }
            }
        }
        out.push(CheckLine::new(format!("bockstein {}", f.short()), "mass oracle equals closed form", bad.is_empty(), bad.join(", ")));
    }
    for f in [FieldId::AlgClosed, FieldId::R] {
        let mut bad = Vec::new();
        for n in 1..=4 {
            for w in wmin..=0 {
                for s in smin..=0 {
                    let ok = match les_oracle(&f, n, s, w) {
                        Ok((c, k)) => {
                            let a = sorted(c.iter().chain(&k).map(|x| x.order).collect());
                            a == sorted(coeff_basis(&f, Modulus::Two(n), s, w).iter().map(|x| x.0).collect())
                        }
                        Err(_) => false,
                    };
                    if !ok {
                        bad.push(format!("n={n} ({s},{w})"));
                    }
                }
            }
        }
        out.push(CheckLine::new(format!("les {}", f.short()), "long exact sequence equals closed form", bad.is_empty(), bad.join(", ")));
    }
    out
}

pub fn ddzero(w: Window) -> Vec<CheckLine> {
    let mut out = Vec::new();
    for f in standard_fields() {
        for sp in [Spectrum::Kq, Spectrum::L] {
            let (pass, detail) = match e1_page(&f, sp, w) {
                Ok(p) => match check_dd_zero(&p) {
                    Ok(n) => (true, format!("{n} composites")),
                    Err(e) => (false, e.to_string()),
                },
                Err(e) => (false, e.to_string()),
            };
            out.push(CheckLine::new(format!("ddzero {} {sp}", f.short()), "d1 squares to zero", pass, detail));
        }
    }
    out
}

pub fn hasse(support: &[u32], w: Window) -> Vec<CheckLine> {
    let mut out = Vec::new();
    let q = match FieldId::rationals(support) {
        Ok(q) => q,
        Err(e) => return vec![CheckLine::new("hasse", "support is valid", false, e.to_string())],
    };
    for sp in [Spectrum::Kq, Spectrum::L] {
        match compare(&q, &places(support), sp, w) {
            Ok(r) => {
                let fmt = |v: &Vec<crate::gradedalg::TriDeg>| v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ");
                out.push(CheckLine::new(format!("hasse {sp} chain"), "local maps commute with d1", r.not_chain.is_empty(), fmt(&r.not_chain)));
                out.push(CheckLine::new(
                    format!("hasse {sp} E1"),
                    "E1 injects into the product of completions",
                    r.not_injective_e1.is_empty(),
                    format!("{} tridegrees {}", r.checked, fmt(&r.not_injective_e1)),
                ));
                out.push(CheckLine::new(
                    format!("hasse {sp} E2"),
                    "E2 injects into the product of completions",
                    r.not_injective_e2.is_empty(),
                    fmt(&r.not_injective_e2),
                ));
            }
            Err(e) => out.push(CheckLine::new(format!("hasse {sp}"), "comparison runs", false, e.to_string())),
        }
    }
    out
}

/// pi_{4k-1,2k}(L) has a cyclic summand at least as large as the 2-part of denom(B_2k/4k).
pub fn bernoulli(kmax: u64, fields: &[FieldId]) -> Vec<CheckLine> {
    let bounds = bernoulli_denom_two_parts(kmax);
    let mut out = Vec::new();
    for (k, &b) in (1..=kmax).zip(&bounds) {
        let formula = 1u64 << (nu2(k).unwrap() + 3);
        out.push(CheckLine::new(format!("bernoulli bound k={k}"), "2-part equals 2^(nu(k)+3)", b == formula, format!("{b}")));
    }
    for f in fields {
        let mut bad = Vec::new();
        for (k, &b) in (1..=kmax).zip(&bounds) {
            let (s, w) = (4 * k as i32 - 1, 2 * k as i32);
            match pi_cell(f, Spectrum::L, s, w, None) {
                Ok(cell) => {
                    let best = cell.entries.iter().filter_map(|e| e.order.exponent()).max().map_or(0, |e| 1u64 << e);
                    if best < b || cell.unresolved.is_some() {
                        bad.push(format!("k={k}: largest {best} < {b}"));
                    }
                }
                Err(e) => bad.push(format!("k={k}: {e}")),
            }
        }
        out.push(CheckLine::new(
            format!("bernoulli {} k<={kmax}", f.short()),
            "summand of order at least the Bernoulli 2-part",
            bad.is_empty(),
            bad.join(", "),
        ));
    }
    out
}

pub struct Golden {
    pub file: &'static str,
    pub expected: &'static str,
    pub render: fn() -> Result<String, CliError>,
}

fn c_kq_e2() -> Result<String, CliError> {
    let c = compute(&FieldId::AlgClosed, Spectrum::Kq, PageSel::E2, Window::new((0, 12), (0, 12), (-4, 8)), None)?;
    Ok(page_markdown(&c.page, "E2 of kq over F̄"))
}

fn f5_l_pi() -> Result<String, CliError> {
    let f = FieldId::fq(5).unwrap();
    let c = compute(&f, Spectrum::L, PageSel::Infinity, Window::new((-2, 12), (0, 18), (-4, 8)), None)?;
    Ok(pi_markdown(&c.pi.expect("E∞ carries a table"), "homotopy of L over F_5"))
}

fn c_kq_e1_svg() -> Result<String, CliError> {
    let c = compute(&FieldId::AlgClosed, Spectrum::Kq, PageSel::E1, Window::new((0, 12), (0, 12), (-2, 8)), None)?;
    Ok(render_svg(&ChartSpec::for_page(&c.page, "E1 of kq over F̄"), &c.page))
}

pub fn golden_files() -> Vec<Golden> {
    vec![
        Golden { file: "c_kq_e2.md", expected: include_str!("../../golden/c_kq_e2.md"), render: c_kq_e2 },
        Golden { file: "f5_l_pi.md", expected: include_str!("../../golden/f5_l_pi.md"), render: f5_l_pi },
        Golden { file: "c_kq_e1.svg", expected: include_str!("../../golden/c_kq_e1.svg"), render: c_kq_e1_svg },
    ]
}

pub fn goldens() -> Vec<CheckLine> {
    golden_files()
        .into_iter()
        .map(|g| match (g.render)() {
            Ok(text) => {
                let first = text.lines().zip(g.expected.lines()).position(|(a, b)| a != b);
                let detail = match first {
                    _ if text == g.expected => String::new(),
                    Some(i) => format!("first difference at line {}", i + 1),
                    None => "length differs".into(),
                };
                CheckLine::new(format!("golden {}", g.file), "output matches the frozen file", text == g.expected, detail)
            }
            Err(e) => CheckLine::new(format!("golden {}", g.file), "output matches the frozen file", false, e.to_string()),
        })
        .collect()
}
