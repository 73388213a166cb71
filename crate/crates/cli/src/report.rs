//! Report rendering: aligned text for humans, JSON as the contract,
//! CSV for sweep tabulation. All three are deterministic functions of
//! the run configuration and verdicts.

use std::collections::BTreeMap;

use eil_core::enumerate::GraphStream;
use eil_core::verify::{Certificate, Verdict};
use eil_core::{graph6, Graph, IndexValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl std::fmt::Display for Format {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Format::Text => write!(f, "text"),
            Format::Json => write!(f, "json"),
            Format::Csv => write!(f, "csv"),
        }
    }
}

type Config = BTreeMap<String, String>;

fn config_line(config: &Config) -> String {
    let body: Vec<String> = config.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("# config: {}\n", body.join(" "))
}

fn compact_params(params: &BTreeMap<String, String>) -> String {
    let body: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    body.join(";")
}

// ---------------------------------------------------------------------------
// verdicts
// ---------------------------------------------------------------------------

pub fn render_verdicts(verdicts: &[Verdict], format: Format) -> String {
    match format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(verdicts).expect("verdicts serialize");
            text.push('\n');
            text
        }
        Format::Csv => {
            let mut text =
                String::from("claim,params,pass,scanned,witnesses,counterexamples,runtime_ms\n");
            for v in verdicts {
                text.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    v.claim.name(),
                    compact_params(&v.params),
                    v.pass,
                    v.scanned,
                    v.witnesses.len(),
                    v.counterexamples.len(),
                    v.runtime_ms
                ));
            }
            text
        }
        Format::Text => {
            let mut text = String::new();
            if let Some(first) = verdicts.first() {
                text.push_str(&config_line(&first.params));
            }
            // Keys that vary per verdict within a sweep.
            const CLAIM_KEYS: [&str; 8] = ["n", "k", "mode", "a", "trials", "seed", "x", "y"];
            for v in verdicts {
                let shown: Vec<String> = CLAIM_KEYS
                    .iter()
                    .filter_map(|key| v.params.get(*key).map(|val| format!("{key}={val}")))
                    .collect();
                text.push_str(&format!(
                    "{} {} {}scanned={} witnesses={} counterexamples={}\n",
                    v.claim.name(),
                    if v.pass { "pass" } else { "FAIL" },
                    if shown.is_empty() {
                        String::new()
                    } else {
                        format!("{} ", shown.join(" "))
                    },
                    v.scanned,
                    v.witnesses.len(),
                    v.counterexamples.len(),
                ));
                for (label, certs) in [
                    ("witness", &v.witnesses),
                    ("counterexample", &v.counterexamples),
                ] {
                    for (i, cert) in certs.iter().enumerate() {
                        text.push_str(&format!("  {label}[{i}]: {}\n", cert_line(cert)));
                    }
                }
                for (key, value) in &v.notes {
                    text.push_str(&format!("  note: {key}={value}\n"));
                }
            }
            let passed = verdicts.iter().filter(|v| v.pass).count();
            text.push_str(&format!("summary: {passed}/{} pass\n", verdicts.len()));
            text
        }
    }
}

fn cert_line(cert: &Certificate) -> String {
    let mut parts = Vec::new();
    if let Some(g6) = &cert.graph6 {
        parts.push(format!("graph6={g6}"));
    }
    if let Some(aso) = cert.aso {
        parts.push(format!("aso={aso}"));
    }
    parts.push(format!("bound={}", cert.bound));
    parts.push(format!("slack={}", cert.slack));
    if let Some(extremal) = cert.is_extremal {
        parts.push(format!("extremal={extremal}"));
    }
    if let Some(location) = &cert.location {
        parts.push(format!("at={location}"));
    }
    parts.join(" ")
}

// ---------------------------------------------------------------------------
// compute / construct / enumerate
// ---------------------------------------------------------------------------

#[derive(serde::Serialize)]
pub struct ComputeRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub aso: IndexValue,
    pub so: IndexValue,
}

pub fn render_compute(config: &Config, rows: &[ComputeRow], format: Format) -> String {
    match format {
        Format::Json => {
            let doc = serde_json::json!({ "config": config, "results": rows });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("rows serialize")
            )
        }
        Format::Csv => {
            let mut text = String::from("graph6,n,m,aso,so\n");
            for row in rows {
                text.push_str(&format!(
                    "{},{},{},{},{}\n",
                    row.graph6, row.n, row.m, row.aso, row.so
                ));
            }
            text
        }
        Format::Text => {
            let mut text = config_line(config);
            for row in rows {
                text.push_str(&format!(
                    "graph6={} n={} m={} aso={} so={}\n",
                    row.graph6, row.n, row.m, row.aso, row.so
                ));
            }
            text
        }
    }
}

#[derive(serde::Serialize)]
pub struct ConstructRow {
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub graph6: String,
    pub degrees: Vec<usize>,
    pub aso: Option<IndexValue>,
}

pub fn render_construct(config: &Config, row: &ConstructRow, format: Format) -> String {
    match format {
        Format::Json => {
            let doc = serde_json::json!({ "config": config, "result": row });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("row serializes")
            )
        }
        Format::Csv => {
            let aso = row
                .aso
                .map(|v| v.to_string())
                .unwrap_or_else(|| "undefined".into());
            format!(
                "family,n,m,graph6,aso\n{},{},{},{},{}\n",
                row.family, row.n, row.m, row.graph6, aso
            )
        }
        Format::Text => {
            let aso = row
                .aso
                .map(|v| v.to_string())
                .unwrap_or_else(|| "undefined".into());
            let degrees: Vec<String> = row.degrees.iter().map(|d| d.to_string()).collect();
            format!(
                "{}family={} n={} m={} graph6={} degrees=[{}] aso={}\n",
                config_line(config),
                row.family,
                row.n,
                row.m,
                row.graph6,
                degrees.join(","),
                aso
            )
        }
    }
}

pub fn render_stream(config: &Config, stream: &GraphStream, format: Format) -> String {
    match format {
        Format::Json => {
            let graphs: Vec<String> = stream.iter().map(graph6::encode).collect();
            let doc = serde_json::json!({
                "config": config,
                "class": stream.class(),
                "n": stream.order(),
                "count": stream.len(),
                "graphs": graphs,
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("stream serializes")
            )
        }
        Format::Csv => {
            let mut text = String::from("graph6,n,m\n");
            for g in stream {
                text.push_str(&format!(
                    "{},{},{}\n",
                    graph6::encode(g),
                    g.order(),
                    g.size()
                ));
            }
            text
        }
        Format::Text => {
            // The text form is exactly the spool format, reusable as a cache file.
            let mut buffer = Vec::new();
            stream.write_to(&mut buffer).expect("writing to memory");
            String::from_utf8(buffer).expect("graph6 is ASCII")
        }
    }
}

pub fn render_labeled(
    config: &Config,
    class: &str,
    n: usize,
    graphs: &[Graph],
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let codes: Vec<String> = graphs.iter().map(graph6::encode).collect();
            let doc = serde_json::json!({
                "config": config,
                "class": class,
                "n": n,
                "count": graphs.len(),
                "graphs": codes,
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("labeled serializes")
            )
        }
        Format::Csv => {
            let mut text = String::from("graph6,n,m\n");
            for g in graphs {
                text.push_str(&format!(
                    "{},{},{}\n",
                    graph6::encode(g),
                    g.order(),
                    g.size()
                ));
            }
            text
        }
        Format::Text => {
            let mut text = format!(">>class={class};n={n};count={}\n", graphs.len());
            for g in graphs {
                text.push_str(&graph6::encode(g));
                text.push('\n');
            }
            text
        }
    }
}
