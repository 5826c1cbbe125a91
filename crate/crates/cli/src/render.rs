//! Plain-text tables. Chains render as `{1, 2, 3}` here and as `{1,2,3}` in
//! JSON.

use std::fmt::Write;
use std::path::Path;

use grcat_core::theorems::BrauerThrallReport;
use grcat_core::{CategorySpec, Chain, MeasureTable, Report, ValidationReport};
use serde::Serialize;

fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                let pad = w - cell.chars().count();
                s.push_str(cell);
                s.push_str(&" ".repeat(pad + 2));
            }
        }
        let mut s = s.trim_end().to_string();
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn chain_line(chain: &[Chain]) -> String {
    chain.iter().map(Chain::to_string).collect::<Vec<_>>().join(" < ")
}

pub fn validation(spec: &CategorySpec, report: &ValidationReport) -> String {
    if report.ok {
        return format!("{}: ok\n", spec.name());
    }
    let mut out = format!("{}: {} violation(s)\n", spec.name(), report.violations.len());
    for v in &report.violations {
        let _ = writeln!(out, "  [{}] {}", v.rule, v.message);
    }
    out
}

pub fn measure_table(spec: &CategorySpec, table: &MeasureTable) -> String {
    let rows: Vec<Vec<String>> = spec
        .ids()
        .iter()
        .enumerate()
        .map(|(i, id)| {
            vec![
                id.to_string(),
                spec.theta_at(i).to_string(),
                table.measure(id).expect("every object measured").to_string(),
            ]
        })
        .collect();
    let mut out = aligned(&["object", "length", "GR measure"], &rows);
    let _ = writeln!(out, "GR chain: {}", chain_line(&table.gr_chain));
    out
}

#[derive(Serialize)]
pub struct MeasureRow {
    object: String,
    length: u32,
    measure: Chain,
}

#[derive(Serialize)]
pub struct MeasureJson {
    name: String,
    rows: Vec<MeasureRow>,
    gr_chain: Vec<Chain>,
    blocks: Vec<(Chain, Vec<String>)>,
}

pub fn measure_json(spec: &CategorySpec, table: &MeasureTable) -> MeasureJson {
    MeasureJson {
        name: spec.name().to_string(),
        rows: spec
            .ids()
            .iter()
            .enumerate()
            .map(|(i, id)| MeasureRow {
                object: id.to_string(),
                length: spec.theta_at(i),
                measure: table.measure(id).expect("every object measured").clone(),
            })
            .collect(),
        gr_chain: table.gr_chain.clone(),
        blocks: table
            .blocks
            .iter()
            .map(|(c, ids)| (c.clone(), ids.iter().map(ToString::to_string).collect()))
            .collect(),
    }
}

pub fn reports(reports: &[Report]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(
            out,
            "suite {}: {} pass, {} fail, {} skipped",
            r.suite, r.summary.pass, r.summary.fail, r.summary.skipped
        );
        let rows: Vec<Vec<String>> = r
            .checks
            .iter()
            .map(|c| {
                vec![
                    format!("  {}", c.id),
                    c.status.as_str().to_string(),
                    c.evaluated.to_string(),
                    c.note.clone().unwrap_or_default(),
                ]
            })
            .collect();
        out.push_str(&aligned(&["  check", "status", "evaluated", "note"], &rows));
        for c in &r.checks {
            for w in &c.witnesses {
                let _ = writeln!(
                    out,
                    "    {} witness [{}]: {}",
                    c.id,
                    w.objects.join(", "),
                    w.detail
                );
            }
        }
    }
    out
}

pub fn brauer_thrall(r: &BrauerThrallReport) -> String {
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::new();
    let _ = writeln!(out, "# {}", r.header);
    let _ = writeln!(
        out,
        "{} indecomposables; max length {}; GR chain of length {}; {}",
        r.indecomposables,
        r.max_theta,
        r.gr_chain_length,
        match (r.finite_type, r.models_infinite) {
            (true, false) => "finite type",
            (true, true) => "finite type (finite window of an infinite-type category)",
            (false, _) => "not finite type",
        }
    );
    let _ = writeln!(out, "name: {}", r.name);
    let _ = writeln!(out, "GR chain: {}", chain_line(&r.gr_chain));
    if let Some(top) = &r.top_measure {
        let _ = writeln!(out, "top measure: {top}");
    }
    out.push_str("blocks:\n");
    let rows: Vec<Vec<String>> = r
        .blocks
        .iter()
        .map(|b| {
            vec![
                format!("  {}", b.measure),
                b.theta.iter().map(u32::to_string).collect::<Vec<_>>().join(","),
                b.objects
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", "),
            ]
        })
        .collect();
    out.push_str(&aligned(&["  measure", "length", "objects"], &rows));
    let _ = writeln!(out, "finite type: {}", yes_no(r.finite_type));
    let _ = writeln!(
        out,
        "models an infinite-type category: {}",
        yes_no(r.models_infinite)
    );
    let _ = writeln!(
        out,
        "bounded-length signature: {}",
        if r.bounded_length_signature {
            format!(
                "yes ({} indecomposables, lengths <= {})",
                r.indecomposables, r.max_theta
            )
        } else {
            "no".to_string()
        }
    );
    let _ = writeln!(
        out,
        "block lengths nondecreasing: {}",
        yes_no(r.block_thetas_nondecreasing)
    );
    out.push_str(&reports(std::slice::from_ref(&r.checks)));
    out
}

#[derive(Serialize)]
pub struct Generated {
    pub name: String,
    pub path: String,
    pub indecomposables: usize,
    pub inflations: usize,
    pub conflations: usize,
}

pub fn generated(spec: &CategorySpec, path: &Path) -> Generated {
    Generated {
        name: spec.name().to_string(),
        path: path.display().to_string(),
        indecomposables: spec.len(),
        inflations: spec.inflations().len(),
        conflations: spec.conflations().len(),
    }
}
