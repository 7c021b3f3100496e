//! Plain-text reports. Field order is fixed and every line is
//! `key value…`, so output is stable across runs and easy to re-check with
//! an external script.

use std::fmt::Write as _;

use crate::census::{canonical_form, CensusResult};
use crate::gamma::{AssociativityReport, GammaGroupoid};
use crate::green::{CongruenceReport, EggBox, ElementSet, Partition, Relation, Side};
use crate::gsg::{serialize_gsg, DisplayNames};
use crate::maps::{LemmaCertificate, Mapping, TheoremCertificate, Witness};

fn set(names: &DisplayNames, s: &ElementSet) -> String {
    let items: Vec<String> = s.iter().map(|x| names.element(x)).collect();
    format!("{{{}}}", items.join(" "))
}

fn mapping(names: &DisplayNames, m: &Mapping) -> String {
    m.pairs()
        .iter()
        .map(|&(x, y)| format!("{}->{}", names.element(x), names.element(y)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn witness(names: &DisplayNames, w: &Witness) -> String {
    format!("{} {}", names.op(w.op), names.ext(w.elem))
}

pub fn validation(g: &GammaGroupoid, names: &DisplayNames, report: &AssociativityReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n {}", g.n());
    let _ = writeln!(out, "k {}", g.k());
    let _ = writeln!(out, "equations {}", report.equations_checked);
    let _ = writeln!(out, "violations {}", report.violations.len());
    for v in &report.violations {
        let (a, b, c) = (names.element(v.a), names.element(v.b), names.element(v.c));
        let (gamma, mu) = (names.op(v.gamma), names.op(v.mu));
        let _ = writeln!(
            out,
            "violation ({a} {gamma} {b}) {mu} {c} = {} but {a} {gamma} ({b} {mu} {c}) = {}",
            names.element(v.lhs),
            names.element(v.rhs)
        );
    }
    let _ = writeln!(
        out,
        "status {}",
        if report.holds() { "gamma-semigroup" } else { "not-associative" }
    );
    out
}

pub fn partition(names: &DisplayNames, rel: Relation, p: &Partition) -> String {
    let classes: Vec<String> = p.classes().iter().map(|c| set(names, c)).collect();
    format!("{rel} {}\n", classes.join(" "))
}

pub fn ideal(names: &DisplayNames, a: usize, side: Side, ideal: &ElementSet) -> String {
    let tag = match side {
        Side::Right => "R",
        Side::Left => "L",
    };
    format!("{tag}({}) {}\n", names.element(a), set(names, ideal))
}

pub fn congruence(names: &DisplayNames, report: &CongruenceReport) -> String {
    let mut out = String::new();
    let kind = match report.relation {
        Relation::R => "left",
        _ => "right",
    };
    let _ = writeln!(
        out,
        "{} {}-congruence {}",
        report.relation,
        kind,
        if report.holds() { "holds" } else { "fails" }
    );
    for v in &report.violations {
        let _ = writeln!(
            out,
            "violation a={} b={} c={} op={}",
            names.element(v.a),
            names.element(v.b),
            names.element(v.c),
            names.op(v.op)
        );
    }
    out
}

/// One stanza per block: R-classes label the rows, L-classes the columns,
/// `.` marks an empty cell.
pub fn eggbox(names: &DisplayNames, eb: &EggBox) -> String {
    let mut out = String::new();
    for (i, block) in eb.blocks.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "block {} {}x{} {}",
            i,
            block.r_classes.len(),
            block.l_classes.len(),
            set(names, &block.elements())
        );
        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend(block.l_classes.iter().map(|c| format!("L{}", set(names, c))));
        grid.push(header);
        for (r, row) in block.r_classes.iter().zip(&block.cells) {
            let mut line = vec![format!("R{}", set(names, r))];
            line.extend(row.iter().map(|cell| {
                if cell.is_empty() {
                    ".".to_string()
                } else {
                    set(names, cell)
                }
            }));
            grid.push(line);
        }
        let cols = grid[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|c| grid.iter().map(|row| row[c].chars().count()).max().unwrap_or(0))
            .collect();
        for row in &grid {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", cells.join(" | ").trim_end());
        }
    }
    if !eb.rol_symmetric {
        let _ = writeln!(out, "warning R∘L differs from L∘R on this instance");
    }
    out
}

pub fn lemma(names: &DisplayNames, cert: &LemmaCertificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "lemma {} {}", names.element(cert.a), names.element(cert.b));
    let _ = writeln!(out, "right_witness {}", witness(names, &cert.right_witness));
    let _ = writeln!(out, "back_witness {}", witness(names, &cert.back_witness));
    let _ = writeln!(out, "sigma {}", mapping(names, &cert.sigma));
    let _ = writeln!(out, "sigma_prime {}", mapping(names, &cert.sigma_prime));
    let _ = writeln!(out, "well_defined {}", cert.checks.well_defined);
    let _ = writeln!(out, "mutually_inverse {}", cert.checks.mutually_inverse);
    let _ = writeln!(out, "r_class_preserving {}", cert.checks.r_class_preserving);
    out
}

pub fn theorem(names: &DisplayNames, cert: &TheoremCertificate) -> String {
    let mut out = String::new();
    let w = &cert.witnesses;
    let _ = writeln!(
        out,
        "theorem {} {} via {}",
        names.element(cert.a),
        names.element(cert.c),
        names.element(cert.b)
    );
    let _ = writeln!(out, "s {}", witness(names, &w.s));
    let _ = writeln!(out, "s_prime {}", witness(names, &w.s_prime));
    let _ = writeln!(out, "t {}", witness(names, &w.t));
    let _ = writeln!(out, "t_prime {}", witness(names, &w.t_prime));
    let _ = writeln!(out, "h_a {}", set(names, &cert.h_a));
    let _ = writeln!(out, "h_c {}", set(names, &cert.h_c));
    let _ = writeln!(out, "sigma {}", mapping(names, &cert.sigma));
    let _ = writeln!(out, "sigma_prime {}", mapping(names, &cert.sigma_prime));
    let _ = writeln!(out, "well_defined_sigma {}", cert.checks.well_defined_sigma);
    let _ = writeln!(out, "well_defined_sigma_prime {}", cert.checks.well_defined_sigma_prime);
    let _ = writeln!(out, "mutually_inverse {}", cert.checks.mutually_inverse);
    out
}

pub fn census_summary(result: &CensusResult) -> String {
    format!(
        "n {}\nk {}\nmode {}\ncount {}\n",
        result.n, result.k, result.mode, result.count
    )
}

/// File name of the `i`-th emitted representative.
pub fn census_file_name(i: usize) -> String {
    format!("rep_{i:06}.gsg")
}

/// Manifest listing every emitted file with its canonical key.
pub fn census_manifest(result: &CensusResult) -> String {
    let mut out = census_summary(result);
    if let Some(reps) = &result.representatives {
        for (i, g) in reps.iter().enumerate() {
            let _ = writeln!(out, "{} {}", census_file_name(i), canonical_form(g).to_hex());
        }
    }
    out
}

/// `(file name, .gsg text)` for every emitted representative.
pub fn census_files(result: &CensusResult) -> Vec<(String, String)> {
    result
        .representatives
        .iter()
        .flatten()
        .enumerate()
        .map(|(i, g)| {
            let text = serialize_gsg(g, &DisplayNames::default()).expect("no names to check");
            (census_file_name(i), text)
        })
        .collect()
}
