//! Subcommand implementations shared by the binary and the acceptance suite.
//!
//! Every command returns typed rows (serialized for `--output json`), an
//! aligned text table, and whether the output matches the embedded tables.

use std::collections::BTreeSet;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use primcone::bwb::{euler_characteristic_check, line_bundle_cohomology, CohomologyResult, ParabolicData};
use primcone::detcone::deform::{first_order_triviality, ParameterSampler, DEFAULT_SEED};
use primcone::detcone::{default_window, flatness_check, graded_t1, hankel_ideal, segre_veronese_ideal, FlatnessReport, GradedVectorDims};
use primcone::hilbclass::{candidate_fixtures, classify, enumerate_candidates, hilbert_fixtures, sweep_types, HilbRow};
use primcone::jordan::xref::{row as xref_row, XrefRow};
use primcone::jordan::{describe, JordanDescriptor, JordanLabel};
use primcone::rootdata::{format_weight, parse_cartan_type, parse_weight, CartanType, RootSystem};
use primcone::t1class::{classify_t1, T1Row};

pub const JORDAN_SAMPLES: usize = 200;

pub struct Report<T> {
    pub rows: T,
    pub table: String,
    /// False when the output disagrees with the expected table.
    pub matches: bool,
    pub mismatches: Vec<String>,
}

impl<T: Serialize> Report<T> {
    pub fn json(&self) -> String {
        serde_json::to_string_pretty(&self.rows).expect("rows serialize")
    }
}

/// Left-aligned columns separated by two spaces.
pub fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let s: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}", w = *w)).collect();
        s.join("  ").trim_end().to_string()
    };
    let mut out = vec![line(header.iter().map(|h| h.to_string()).collect())];
    out.extend(rows.iter().map(|r| line(r.clone())));
    out.join("\n") + "\n"
}

pub fn classify_hilbert(max_rank: usize) -> Result<Report<Vec<HilbRow>>> {
    let rows: Vec<HilbRow> = classify(max_rank)?.iter().map(|(c, r)| HilbRow::new(c, r)).collect();
    let mut mismatches = Vec::new();
    let mut expected: BTreeSet<(String, Vec<i64>)> = BTreeSet::new();
    for ct in sweep_types(max_rank) {
        for f in hilbert_fixtures().iter().filter(|f| f.selector.matches(&ct)) {
            for l in f.lambdas_at(ct.rank()) {
                expected.insert((ct.to_string(), l));
            }
        }
    }
    for r in &rows {
        let key = (r.cartan_type.clone(), r.lambda.clone());
        let want = usize::from(expected.contains(&key));
        if r.total != want {
            mismatches.push(format!("{} {}: total {} expected {want}", r.cartan_type, format_weight(&r.lambda), r.total));
        }
    }
    for (t, l) in &expected {
        if !rows.iter().any(|r| &r.cartan_type == t && &r.lambda == l) {
            mismatches.push(format!("{t} {}: listed case missing from the candidates", format_weight(l)));
        }
    }
    let table = render_table(
        &["type", "lambda", "dim0", "dim-lambda", "total", "case"],
        &rows
            .iter()
            .map(|r| {
                vec![
                    r.cartan_type.clone(),
                    format_weight(&r.lambda),
                    r.dim0.to_string(),
                    r.dim_minus_lambda.to_string(),
                    r.total.to_string(),
                    r.hilb_label.clone().unwrap_or_default(),
                ]
            })
            .collect::<Vec<_>>(),
    );
    Ok(Report { matches: mismatches.is_empty(), rows, table, mismatches })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateRow {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub lambda: Vec<i64>,
    pub label: Option<String>,
    pub decompositions: Vec<String>,
}

/// Candidates for one type, or for every simple type up to rank 8 plus `A1xA1`.
pub fn candidates(ct: Option<&CartanType>) -> Report<Vec<CandidateRow>> {
    let types = match ct {
        Some(t) => vec![t.clone()],
        None => sweep_types(8),
    };
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for t in &types {
        let n = t.rank();
        let found = enumerate_candidates(t);
        for f in candidate_fixtures().iter().filter(|f| f.selector.matches(t)) {
            let Some(l) = f.lambda_at(n) else { continue };
            match found.iter().find(|c| c.lambda == l) {
                None => mismatches.push(format!("{t} {}: {} not found", format_weight(&l), f.label)),
                Some(c) => {
                    let want: BTreeSet<_> = f.decompositions_at(n).unwrap_or_default().into_iter().collect();
                    let have: BTreeSet<_> = c.decompositions.iter().cloned().collect();
                    if want != have {
                        mismatches.push(format!("{t} {}: decompositions differ from {}", format_weight(&l), f.label));
                    }
                }
            }
        }
        for c in found {
            if c.paper_label.is_none() {
                mismatches.push(format!("{t} {}: not in the list", format_weight(&c.lambda)));
            }
            rows.push(CandidateRow {
                cartan_type: t.to_string(),
                decompositions: c.decompositions.iter().map(|d| d.render(n)).collect(),
                label: c.paper_label,
                lambda: c.lambda,
            });
        }
    }
    let table = render_table(
        &["type", "lambda", "label", "decompositions"],
        &rows
            .iter()
            .map(|r| vec![r.cartan_type.clone(), format_weight(&r.lambda), r.label.clone().unwrap_or_default(), r.decompositions.join("; ")])
            .collect::<Vec<_>>(),
    );
    Report { matches: mismatches.is_empty(), rows, table, mismatches }
}

pub fn classify_t1_table(max_rank: usize) -> Result<Report<Vec<T1Row>>> {
    let rows: Vec<T1Row> = classify_t1(max_rank)?.iter().map(|(c, r)| T1Row::new(c, r)).collect();
    let mismatches: Vec<String> = rows
        .iter()
        .filter(|r| !r.matches_theorem)
        .map(|r| format!("{} {}: {:?} disagrees with the table", r.cartan_type, format_weight(&r.lambda), r.tag))
        .collect();
    let table = render_table(
        &["type", "lambda", "tag", "pieces", "total"],
        &rows
            .iter()
            .map(|r| {
                let pieces: Vec<String> = r.pieces.iter().map(|p| format!("V{}:{}", format_weight(&p.weight), p.dim)).collect();
                vec![r.cartan_type.clone(), format_weight(&r.lambda), format!("{:?}", r.tag), pieces.join(" + "), r.total.to_string()]
            })
            .collect::<Vec<_>>(),
    );
    Ok(Report { matches: mismatches.is_empty(), rows, table, mismatches })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BwbRow {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub parabolic: Vec<i64>,
    pub weight: Vec<i64>,
    pub cohomology: CohomologyResult,
    pub euler_characteristic: i128,
}

pub fn bwb(type_str: &str, parabolic: &str, weight: &str) -> Result<Report<BwbRow>> {
    let ct = parse_cartan_type(type_str)?;
    let rs = RootSystem::build(&ct);
    let lambda = parse_weight(parabolic)?;
    let mu = parse_weight(weight)?;
    let p = ParabolicData::from_weight(&rs, &lambda)?;
    let cohomology = line_bundle_cohomology(&p, &mu)?;
    let euler_characteristic = euler_characteristic_check(&p, &mu)?;
    let signed = match &cohomology {
        CohomologyResult::AllZero => 0,
        CohomologyResult::Concentrated { degree, dimension, .. } => {
            if degree % 2 == 0 {
                *dimension as i128
            } else {
                -(*dimension as i128)
            }
        }
    };
    let mismatches = if signed == euler_characteristic { Vec::new() } else { vec![format!("Euler characteristic {euler_characteristic} vs {signed}")] };
    let shown = match &cohomology {
        CohomologyResult::AllZero => "all zero".to_string(),
        CohomologyResult::Concentrated { degree, highest_weight, dimension } => {
            format!("H^{degree} = V{} (dim {dimension})", format_weight(highest_weight))
        }
    };
    let row = BwbRow { cartan_type: ct.to_string(), parabolic: lambda, weight: mu, cohomology, euler_characteristic };
    let table = render_table(
        &["type", "parabolic", "weight", "cohomology", "euler"],
        &[vec![row.cartan_type.clone(), format_weight(&row.parabolic), format_weight(&row.weight), shown, euler_characteristic.to_string()]],
    );
    Ok(Report { matches: mismatches.is_empty(), rows: row, table, mismatches })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ConeFamily {
    Hankel { m: usize },
    Segre { m: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeRow {
    pub cone: ConeFamily,
    pub window: (i64, i64),
    pub dims: GradedVectorDims,
    pub total: u64,
}

/// `lo..hi` or `lo..=hi`, both inclusive.
pub fn parse_window(s: &str) -> Result<(i64, i64)> {
    let (a, b) = s.split_once("..").ok_or_else(|| anyhow!("window must look like -4..2"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let lo: i64 = a.trim().parse().context("window start")?;
    let hi: i64 = b.trim().parse().context("window end")?;
    if lo > hi {
        bail!("empty window {lo}..{hi}");
    }
    Ok((lo, hi))
}

pub fn t1_cone(cone: ConeFamily, window: Option<(i64, i64)>) -> Result<Report<ConeRow>> {
    let (ideal, m) = match cone {
        ConeFamily::Hankel { m } => (hankel_ideal(m)?, m),
        ConeFamily::Segre { m, n } => (segre_veronese_ideal(m, n)?, m),
    };
    let w = window.unwrap_or_else(|| {
        let d = default_window(m);
        (*d.start(), *d.end())
    });
    let dims = graded_t1(&ideal, w.0..=w.1)?;
    let total = dims.total();
    let mut rows: Vec<Vec<String>> = dims.dims.iter().filter(|(_, v)| **v > 0).map(|(d, v)| vec![d.to_string(), v.to_string()]).collect();
    rows.push(vec!["total".into(), total.to_string()]);
    let table = render_table(&["degree", "dim"], &rows);
    Ok(Report { rows: ConeRow { cone, window: w, dims, total }, table, matches: true, mismatches: Vec::new() })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TrivialityRow {
    pub samples: usize,
    pub zero_is_trivial: bool,
    pub nonzero_trivial: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatnessRow {
    pub flatness: FlatnessReport,
    pub triviality: TrivialityRow,
}

pub fn flatness(m: usize, n: usize, samples: usize, triviality_samples: usize, seed: Option<u64>) -> Result<Report<FlatnessRow>> {
    let seed = seed.unwrap_or(DEFAULT_SEED);
    let report = flatness_check(m, n, samples, seed)?;
    let zero = vec![vec![primcone::linalg::q(0); m - 1]; n + 1];
    let zero_is_trivial = first_order_triviality(m, n, &zero)?;
    let mut sampler = ParameterSampler::new(seed ^ 0x7121);
    let mut nonzero_trivial = 0;
    let mut drawn = 0;
    while drawn < triviality_samples {
        let Some(s) = sampler.nonzero_matrix(m, n) else { break };
        drawn += 1;
        nonzero_trivial += usize::from(first_order_triviality(m, n, &s)?);
    }
    let mut mismatches = Vec::new();
    if !report.minors_are_groebner {
        mismatches.push("minors fail the S-pair criterion".into());
    }
    if !report.flat {
        mismatches.push("leading monomials depend on the parameters".into());
    }
    if !zero_is_trivial {
        mismatches.push("the zero direction is not trivial".into());
    }
    // For n = 0 nonzero directions may be trivial (the conic), so nothing is claimed.
    if n >= 1 && nonzero_trivial > 0 {
        mismatches.push(format!("{nonzero_trivial} nonzero directions are trivial"));
    }
    let table = render_table(
        &["m", "n", "samples", "groebner", "flat", "trivial(0)", "trivial(nonzero)"],
        &[vec![
            m.to_string(),
            n.to_string(),
            report.samples_checked.to_string(),
            report.minors_are_groebner.to_string(),
            report.flat.to_string(),
            zero_is_trivial.to_string(),
            format!("{nonzero_trivial}/{triviality_samples}"),
        ]],
    );
    let triviality = TrivialityRow { samples: triviality_samples, zero_is_trivial, nonzero_trivial };
    Ok(Report { matches: mismatches.is_empty(), rows: FlatnessRow { flatness: report, triviality }, table, mismatches })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct JordanRow {
    #[serde(flatten)]
    pub descriptor: JordanDescriptor,
    pub identity_violations: usize,
    pub xref: XrefRow,
}

pub fn jordan_check(labels: &[JordanLabel], seed: Option<u64>) -> Result<Report<Vec<JordanRow>>> {
    let seed = seed.unwrap_or(DEFAULT_SEED);
    let mut rows = Vec::new();
    for &l in labels {
        let (descriptor, identity_violations) = describe(l, JORDAN_SAMPLES, seed)?;
        rows.push(JordanRow { descriptor, identity_violations, xref: xref_row(&l) });
    }
    let mismatches: Vec<String> = rows
        .iter()
        .filter(|r| r.identity_violations > 0 || !r.descriptor.trace_form_nondegenerate)
        .map(|r| format!("{}: {} identity violations, trace form nondegenerate {}", r.descriptor.label, r.identity_violations, r.descriptor.trace_form_nondegenerate))
        .collect();
    let table = render_table(
        &["label", "dim", "rank", "identity", "trace form", "symmetric", "hilbert"],
        &rows
            .iter()
            .map(|r| {
                let sym: Vec<String> = r
                    .xref
                    .symmetric
                    .iter()
                    .map(|s| match &s.condition {
                        Some(c) => format!("{} [{}, {c}]", s.case, s.group),
                        None => format!("{} [{}]", s.case, s.group),
                    })
                    .collect();
                vec![
                    r.descriptor.label.clone(),
                    r.descriptor.dim.to_string(),
                    r.descriptor.rank.to_string(),
                    format!("{}/{} ok", r.descriptor.samples_checked - r.identity_violations, r.descriptor.samples_checked),
                    if r.descriptor.trace_form_nondegenerate { "nondegenerate".into() } else { "degenerate".into() },
                    sym.join(", "),
                    r.xref.hilbert_cases().join(", "),
                ]
            })
            .collect::<Vec<_>>(),
    );
    Ok(Report { matches: mismatches.is_empty(), rows, table, mismatches })
}
