//! Markdown tables for pages and homotopy groups.

use crate::gradedalg::group_string;
use crate::sliceassembly::Page;
use crate::ssengine::PiTable;
use std::fmt::Write;

pub fn page_markdown(page: &Page, title: &str) -> String {
    let mut out = format!("## {title}\n\n| (s, f, w) | group |\n|---|---|\n");
    for (d, g) in &page.groups {
        if !g.is_empty() {
            writeln!(out, "| ({}, {}, {}) | {} |", d.s, d.f, d.w, group_string(g, true)).unwrap();
        }
    }
    out
}

/// One row per generator: name, (s, w), order and filtration, h-torsion degree.
pub fn pi_markdown(t: &PiTable, title: &str) -> String {
    let mut out = format!("## {title}\n\n| generator | degree | constraints | 𝗁-torsion |\n|---|---|---|---|\n");
    for ((s, w), cell) in &t.cells {
        for (k, e) in cell.entries.iter().enumerate() {
            let mut cons = format!("{}, f = {}", e.order.group_string(true), e.f);
            if k == 0 {
                if let Some(u) = &cell.unresolved {
                    cons.push_str("; ");
                    cons.push_str(u);
                }
            }
            let h = e.htors.map_or("∞".to_string(), |h| h.to_string());
            writeln!(out, "| {} | ({s}, {w}) | {cons} | {h} |", e.name).unwrap();
        }
    }
    out
}
