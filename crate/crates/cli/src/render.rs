//! Output rendering in three formats: compact single-line JSON, CSV with
//! fixed headers, and aligned plain-text tables. Every renderer is a pure
//! function of its input, so repeated invocations are byte-identical.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use noetherline::doublecover::ConstructionCertificate;
use noetherline::family::ChainAuditReport;
use noetherline::hirzebruch::CohomologyTable;
use noetherline::identities::Check;
use noetherline::SurfaceDivisorClass;

use crate::OutputFormat;

/// Fixed CSV column set for certificates; the full detail lives in JSON.
const CERT_CSV_HEADER: &str = "e,a,region,kobayashi,K3,pg,k,degSigma,slack";

/// Row order of the probe matrix: the divisors in the order they are built.
const PROBE_DIVISORS: [&str; 5] = ["H", "M", "E0", "K_Y", "3H-K_Y"];
/// Column order of the probe matrix: fiber of the cover, then the two
/// rulings inside the section surface.
const PROBE_CURVES: [&str; 3] = ["C", "l_E0", "s_E0"];

pub fn json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string(value).expect("report types serialize");
    text.push('\n');
    text
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

/// Quote a CSV field if it contains a comma, quote, or newline.
fn csv_field(raw: &str) -> String {
    if raw.contains([',', '"', '\n']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}

/// Render rows as space-aligned columns. `right` marks columns padded on
/// the left (numeric columns); the final column is never padded.
fn aligned(rows: &[Vec<String>], right: &[bool]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            let pad = " ".repeat(widths[i].saturating_sub(cell.len()));
            if *right.get(i).unwrap_or(&false) {
                line.push_str(&pad);
                line.push_str(cell);
            } else if i + 1 < row.len() {
                line.push_str(cell);
                line.push_str(&pad);
            } else {
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn certificate_csv_row(cert: &ConstructionCertificate) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}",
        cert.e,
        cert.a,
        cert.region,
        cert.kobayashi,
        cert.k_cubed,
        cert.p_g,
        cert.k,
        cert.deg_sigma,
        cert.noether_slack
    )
}

pub fn certificates_csv(certs: &[ConstructionCertificate]) -> String {
    let mut out = String::from(CERT_CSV_HEADER);
    out.push('\n');
    for cert in certs {
        out.push_str(&certificate_csv_row(cert));
        out.push('\n');
    }
    out
}

pub fn certificate_table(cert: &ConstructionCertificate) -> String {
    let summands = &cert.pushforward_summands;
    let rows: Vec<Vec<String>> = vec![
        vec!["e".into(), cert.e.to_string()],
        vec!["a".into(), cert.a.to_string()],
        vec!["region".into(), cert.region.to_string()],
        vec!["kobayashi subfamily".into(), yes_no(cert.kobayashi).into()],
        vec!["K^3".into(), cert.k_cubed.to_string()],
        vec!["p_g".into(), cert.p_g.to_string()],
        vec!["k".into(), cert.k.to_string()],
        vec!["deg Sigma".into(), cert.deg_sigma.to_string()],
        vec!["E0^3".into(), cert.e0_cubed.to_string()],
        vec!["H^2.E0".into(), cert.h2e0.to_string()],
        vec!["H.M.E0".into(), cert.hme0.to_string()],
        vec!["M^2.E0".into(), cert.m2e0.to_string()],
        vec!["H|_E0".into(), cert.h_restricted_to_e0.to_string()],
        vec!["E0|_E0".into(), cert.e0_restricted_to_e0.to_string()],
        vec!["M|_E0".into(), cert.m_restricted_to_e0.to_string()],
        vec!["T|_E".into(), cert.t_restricted_to_e.to_string()],
        vec![
            "pushforward summands".into(),
            format!("{}; {}", summands[0], summands[1]),
        ],
        vec!["noether slack".into(), cert.noether_slack.to_string()],
    ];
    let mut out = aligned(&rows, &[false, false]);
    out.push('\n');
    out.push_str(&probe_matrix(&cert.curve_probe_table));
    out
}

pub fn certificates_table(certs: &[ConstructionCertificate]) -> String {
    let mut rows: Vec<Vec<String>> = vec![CERT_CSV_HEADER.split(',').map(str::to_string).collect()];
    for cert in certs {
        rows.push(
            certificate_csv_row(cert)
                .split(',')
                .map(str::to_string)
                .collect(),
        );
    }
    aligned(
        &rows,
        &[true, true, false, false, true, true, true, true, true],
    )
}

fn probe_matrix(table: &BTreeMap<String, i64>) -> String {
    let mut rows: Vec<Vec<String>> = vec![std::iter::once("divisor".to_string())
        .chain(PROBE_CURVES.iter().map(|c| format!(".{c}")))
        .collect()];
    for divisor in PROBE_DIVISORS {
        let mut row = vec![divisor.to_string()];
        for curve in PROBE_CURVES {
            let value = table
                .get(&format!("{divisor}.{curve}"))
                .expect("probe table covers every divisor/curve pair");
            row.push(value.to_string());
        }
        rows.push(row);
    }
    aligned(&rows, &[false, true, true, true])
}

pub fn probes(e: i64, a: i64, table: &BTreeMap<String, i64>, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json(&serde_json::json!({
            "e": e,
            "a": a,
            "probes": table,
        })),
        OutputFormat::Csv => {
            let mut out = String::from("divisor,probe,value\n");
            for divisor in PROBE_DIVISORS {
                for curve in PROBE_CURVES {
                    let value = table
                        .get(&format!("{divisor}.{curve}"))
                        .expect("probe table covers every divisor/curve pair");
                    let _ = writeln!(out, "{divisor},{curve},{value}");
                }
            }
            out
        }
        OutputFormat::Table => {
            let mut out = format!("probe pairings at (e, a) = ({e}, {a})\n");
            out.push_str(&probe_matrix(table));
            out
        }
    }
}

pub fn cohomology(
    alpha: i64,
    beta: i64,
    e: i64,
    table: &CohomologyTable,
    format: OutputFormat,
) -> String {
    let class = SurfaceDivisorClass::from_ints(alpha, beta);
    let nef = class.is_nef(e).expect("concrete class");
    let very_ample = class.is_very_ample(e).expect("concrete class");
    match format {
        OutputFormat::Json => json(&serde_json::json!({
            "alpha": alpha,
            "beta": beta,
            "e": e,
            "h0": table.h0,
            "h1": table.h1,
            "h2": table.h2,
            "chi": table.chi,
            "nef": nef,
            "very_ample": very_ample,
        })),
        OutputFormat::Csv => {
            let mut out = String::from("alpha,beta,e,h0,h1,h2,chi,nef,very_ample\n");
            let _ = writeln!(
                out,
                "{alpha},{beta},{e},{},{},{},{},{nef},{very_ample}",
                table.h0, table.h1, table.h2, table.chi
            );
            out
        }
        OutputFormat::Table => {
            let rows: Vec<Vec<String>> = vec![
                vec!["class".into(), class.to_string()],
                vec!["surface".into(), format!("Sigma_{e}")],
                vec!["h^0".into(), table.h0.to_string()],
                vec!["h^1".into(), table.h1.to_string()],
                vec!["h^2".into(), table.h2.to_string()],
                vec!["chi".into(), table.chi.to_string()],
                vec!["nef".into(), yes_no(nef).into()],
                vec!["very ample".into(), yes_no(very_ample).into()],
            ];
            aligned(&rows, &[false, false])
        }
    }
}

pub fn audit(report: &ChainAuditReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json(report),
        OutputFormat::Csv => {
            let mut out = String::from("link,left,right,slack,tight\n");
            for link in &report.links {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    link.name, link.left, link.right, link.slack, link.tight
                );
            }
            out
        }
        OutputFormat::Table => {
            let mut rows: Vec<Vec<String>> = vec![vec![
                "link".into(),
                "left".into(),
                "right".into(),
                "slack".into(),
                "tight".into(),
            ]];
            for link in &report.links {
                rows.push(vec![
                    link.name.to_string(),
                    link.left.to_string(),
                    link.right.to_string(),
                    link.slack.to_string(),
                    yes_no(link.tight).into(),
                ]);
            }
            let mut out = format!("inequality chain at p_g = {}\n", report.p_g);
            out.push_str(&aligned(&rows, &[false, true, true, true, false]));
            let _ = writeln!(out, "all tight: {}", yes_no(report.all_tight));
            out
        }
    }
}

pub fn identities(checks: &[Check], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json(&checks),
        OutputFormat::Csv => {
            let mut out = String::from("name,passed,detail\n");
            for check in checks {
                let _ = writeln!(
                    out,
                    "{},{},{}",
                    check.name,
                    check.passed,
                    csv_field(&check.detail)
                );
            }
            out
        }
        OutputFormat::Table => {
            let mut out = String::new();
            for check in checks {
                if check.passed {
                    let _ = writeln!(out, "PASS {}", check.name);
                } else {
                    let _ = writeln!(out, "FAIL {} ({})", check.name, check.detail);
                }
            }
            let passed = checks.iter().filter(|c| c.passed).count();
            let _ = writeln!(out, "{} checks, {} passed", checks.len(), passed);
            out
        }
    }
}
