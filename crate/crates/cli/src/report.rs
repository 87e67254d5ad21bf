//! Report schema and emitters.
//!
//! Integers that can exceed 53 bits (discriminants, primes, invariants,
//! seeds) are serialized as decimal strings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: String,
    pub command: String,
    pub params: Params,
    pub payload: Payload,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub field: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub primes: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max: Option<String>,
    pub seed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Groups {
        punctured: bool,
        groups: Vec<GroupEntry>,
        stable_tail: GroupEntry,
    },
    Pairing {
        basis: Vec<String>,
        torsion_generators: Vec<String>,
        entries: Vec<PairingEntry>,
    },
    Legendre {
        rows: Vec<LegendreRow>,
    },
    Verify {
        records: Vec<Record>,
    },
    Torsors {
        torsors: Vec<TorsorEntry>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupEntry {
    pub degree: String,
    pub invariants: Vec<String>,
    pub order: String,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingEntry {
    pub y: String,
    pub z: String,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegendreRow {
    pub p: String,
    pub q: String,
    pub legendre_pq: i32,
    pub legendre_qp: i32,
    pub cup_pq_vanishes: bool,
    pub cup_qp_vanishes: bool,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsorEntry {
    pub disc: String,
    pub field: String,
    pub ramified: Vec<String>,
    pub real_sign: String,
}

impl Report {
    pub fn new(command: &str, params: Params, payload: Payload) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            params,
            payload,
        }
    }

    /// Whether every check in the payload passed.
    pub fn passed(&self) -> bool {
        match &self.payload {
            Payload::Legendre { rows } => rows.iter().all(|r| r.agree),
            Payload::Verify { records } => records.iter().all(|r| r.pass),
            _ => true,
        }
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Tsv => self.to_tsv(),
        }
    }

    pub fn parse_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    fn to_tsv(&self) -> String {
        let mut out = String::new();
        let mut line = |cells: &[&str]| {
            out.push_str(&cells.join("\t"));
            out.push('\n');
        };
        match &self.payload {
            Payload::Groups { groups, stable_tail, .. } => {
                line(&["degree", "invariants", "order", "description"]);
                for g in groups.iter().chain(std::iter::once(stable_tail)) {
                    line(&[&g.degree, &g.invariants.join(","), &g.order, &g.description]);
                }
            }
            Payload::Pairing { entries, .. } => {
                line(&["y", "z", "values"]);
                for e in entries {
                    line(&[&e.y, &e.z, &e.values.join(",")]);
                }
            }
            Payload::Legendre { rows } => {
                line(&["p", "q", "legendre_pq", "legendre_qp", "cup_pq_vanishes", "cup_qp_vanishes", "agree"]);
                for r in rows {
                    let cells = [
                        r.p.clone(),
                        r.q.clone(),
                        r.legendre_pq.to_string(),
                        r.legendre_qp.to_string(),
                        r.cup_pq_vanishes.to_string(),
                        r.cup_qp_vanishes.to_string(),
                        r.agree.to_string(),
                    ];
                    let refs: Vec<&str> = cells.iter().map(String::as_str).collect();
                    line(&refs);
                }
            }
            Payload::Verify { records } => {
                line(&["name", "pass", "detail"]);
                for r in records {
                    line(&[&r.name, if r.pass { "true" } else { "false" }, &r.detail]);
                }
            }
            Payload::Torsors { torsors } => {
                line(&["disc", "field", "ramified", "real_sign"]);
                for t in torsors {
                    line(&[&t.disc, &t.field, &t.ramified.join(","), &t.real_sign]);
                }
            }
        }
        let mut header = String::new();
        let _ = writeln!(header, "# schema_version={} command={}", self.schema_version, self.command);
        header + &out
    }
}
