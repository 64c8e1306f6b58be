//! Serialization of censuses, overcount tables, orbit listings, and
//! classification tables to JSON, CSV, and markdown. JSON is the machine
//! format of record: field order is fixed by struct declaration order and
//! all counts are emitted as exact decimal numbers, so identical inputs
//! serialize byte-identically.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::atlas::{CellClassStatus, CellComplexSummary};
use crate::census::Census;
use crate::error::{Error, Result};
use crate::identity::OvercountTable;
use crate::tiling::Tiling;

/// Arbitrary-precision integer that serializes as a bare JSON number.
#[derive(Clone, Debug)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serde_json::Number::from_str(&self.0.to_string())
            .map_err(serde::ser::Error::custom)?
            .serialize(serializer)
    }
}

#[derive(Serialize)]
pub struct CountRow {
    pub lambda: String,
    pub a: JsonInt,
}

/// Payload of the `count` command: shape counts only.
#[derive(Serialize)]
pub struct CountDoc {
    pub n: u32,
    pub total: JsonInt,
    pub shapes: Vec<CountRow>,
}

#[derive(Serialize)]
pub struct FiberDoc {
    pub nu: String,
    pub a: JsonInt,
    pub ae: JsonInt,
}

#[derive(Serialize)]
pub struct CensusShapeDoc {
    pub lambda: String,
    pub a: JsonInt,
    pub ae: JsonInt,
    pub fibers: Vec<FiberDoc>,
}

/// Census export: `{"n":…, "shapes":[{"lambda":…, "a":…, "ae":…,
/// "fibers":[{"nu":…, "a":…, "ae":…}]}]}`.
#[derive(Serialize)]
pub struct CensusDoc {
    pub n: u32,
    pub shapes: Vec<CensusShapeDoc>,
}

impl CensusDoc {
    pub fn from_census(census: &Census) -> Self {
        CensusDoc {
            n: census.n,
            shapes: census
                .shapes
                .iter()
                .map(|(shape, entry)| CensusShapeDoc {
                    lambda: shape.to_string(),
                    a: JsonInt(entry.count.clone()),
                    ae: JsonInt(entry.class_count.clone()),
                    fibers: entry
                        .fibers
                        .iter()
                        .map(|(nu, fe)| FiberDoc {
                            nu: nu.to_string(),
                            a: JsonInt(fe.count.clone()),
                            ae: JsonInt(fe.class_count.clone()),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ClassDoc {
    pub size: JsonInt,
    pub representative: String,
}

/// Payload of the `classes` command.
#[derive(Serialize)]
pub struct ClassesDoc {
    pub n: u32,
    pub lambda: String,
    pub a: JsonInt,
    pub ae: JsonInt,
    pub classes: Vec<ClassDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fibers: Option<Vec<FiberDoc>>,
}

/// Payload of the `fvector` command.
#[derive(Serialize)]
pub struct FVectorDoc {
    pub n: u32,
    pub f: Vec<JsonInt>,
    pub euler: JsonInt,
}

#[derive(Serialize)]
pub struct OrbitDoc {
    pub size: usize,
    pub representative: String,
}

/// Payload of the `orbits` command.
#[derive(Serialize)]
pub struct OrbitsDoc {
    pub n: u32,
    pub group: String,
    pub orbit_count: usize,
    pub orbits: Vec<OrbitDoc>,
}

impl OrbitsDoc {
    pub fn new(n: u32, group: &str, orbits: &[Vec<Tiling>]) -> Self {
        OrbitsDoc {
            n,
            group: group.to_string(),
            orbit_count: orbits.len(),
            orbits: orbits
                .iter()
                .map(|o| OrbitDoc {
                    size: o.len(),
                    representative: o[0].to_string(),
                })
                .collect(),
        }
    }
}

/// Overcount table export: `μ` rows, `ν` columns, string partition keys.
#[derive(Serialize)]
pub struct OvercountTableDoc {
    pub mu: Vec<String>,
    pub nu: Vec<String>,
    pub of: Vec<Vec<JsonInt>>,
}

impl OvercountTableDoc {
    pub fn from_table(table: &OvercountTable) -> Self {
        OvercountTableDoc {
            mu: table.rows.iter().map(|m| m.to_string()).collect(),
            nu: table.cols.iter().map(|m| m.to_string()).collect(),
            of: table
                .cells
                .iter()
                .map(|row| row.iter().map(|c| JsonInt(c.value.clone())).collect())
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct CellEntryDoc {
    pub mu: String,
    pub possible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cell_type: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<JsonInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<String>>,
}

#[derive(Serialize)]
pub struct DimensionDoc {
    pub dim: usize,
    pub entries: Vec<CellEntryDoc>,
}

/// Payload of the `cells` command.
#[derive(Serialize)]
pub struct CellsDoc {
    pub n: u32,
    pub f_vector: Vec<JsonInt>,
    pub euler: JsonInt,
    pub dims: Vec<DimensionDoc>,
}

/// Renders the product decomposition of a cell type, e.g. `K3 x K2^2`.
pub fn cell_type_name(factors: &[usize]) -> String {
    if factors.is_empty() {
        return "1".into();
    }
    let mut pieces: Vec<String> = Vec::new();
    let mut i = 0;
    while i < factors.len() {
        let v = factors[i];
        let mut m = 0;
        while i < factors.len() && factors[i] == v {
            m += 1;
            i += 1;
        }
        pieces.push(if m == 1 {
            format!("K{v}")
        } else {
            format!("K{v}^{m}")
        });
    }
    pieces.join(" x ")
}

impl CellsDoc {
    pub fn from_summary(summary: &CellComplexSummary) -> Self {
        CellsDoc {
            n: summary.n,
            f_vector: summary.f_vector.iter().map(|v| JsonInt(v.clone())).collect(),
            euler: JsonInt(summary.euler.clone()),
            dims: summary
                .dims
                .iter()
                .map(|row| DimensionDoc {
                    dim: row.dim,
                    entries: row
                        .entries
                        .iter()
                        .map(|e| match &e.status {
                            CellClassStatus::Impossible => CellEntryDoc {
                                mu: e.mu.to_string(),
                                possible: false,
                                lambda: None,
                                cell_type: None,
                                count: None,
                                representatives: None,
                            },
                            CellClassStatus::Present {
                                lambda,
                                count,
                                factors,
                                representatives,
                            } => CellEntryDoc {
                                mu: e.mu.to_string(),
                                possible: true,
                                lambda: Some(lambda.to_string()),
                                cell_type: Some(cell_type_name(factors)),
                                count: Some(JsonInt(count.clone())),
                                representatives: Some(
                                    representatives.iter().map(|t| t.to_string()).collect(),
                                ),
                            },
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

/// Classification table as a markdown table mirroring the per-dimension
/// layout: one column per `(dimension, μ)` slot, dimensions descending.
pub fn cells_markdown(summary: &CellComplexSummary) -> String {
    let mut cols: Vec<(usize, &crate::atlas::CellClassEntry)> = Vec::new();
    for row in summary.dims.iter().rev() {
        for e in &row.entries {
            cols.push((row.dim, e));
        }
    }
    let mut lines = Vec::new();
    let render =
        |label: &str, f: &dyn Fn(&(usize, &crate::atlas::CellClassEntry)) -> String| -> String {
            let mut cells = vec![label.to_string()];
            cells.extend(cols.iter().map(f));
            format!("| {} |", cells.join(" | "))
        };
    lines.push(render("dim", &|(d, _)| d.to_string()));
    lines.push(format!("|{}|", vec!["---"; cols.len() + 1].join("|")));
    lines.push(render("mu", &|(_, e)| e.mu.to_string()));
    lines.push(render("lambda", &|(_, e)| match &e.status {
        CellClassStatus::Impossible => "impossible".into(),
        CellClassStatus::Present { lambda, .. } => lambda.to_string(),
    }));
    lines.push(render("cell type", &|(_, e)| match &e.status {
        CellClassStatus::Impossible => "-".into(),
        CellClassStatus::Present { factors, .. } => cell_type_name(factors),
    }));
    lines.push(render("count", &|(_, e)| match &e.status {
        CellClassStatus::Impossible => "0".into(),
        CellClassStatus::Present { count, .. } => count.to_string(),
    }));
    lines.push(render("representatives", &|(_, e)| match &e.status {
        CellClassStatus::Impossible => "-".into(),
        CellClassStatus::Present { representatives, .. } => representatives
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join("; "),
    }));
    lines.join("\n") + "\n"
}

fn csv_to_string(records: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for rec in records {
        w.write_record(&rec)
            .map_err(|e| Error::Usage(format!("csv write: {e}")))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Usage(format!("csv flush: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Usage(format!("csv utf8: {e}")))
}

/// Census (or count) rows as CSV with columns `n, lambda, nu, a, ae`.
/// Shape-level rows leave `nu` empty; `ae` is empty when unknown.
pub fn census_csv(census: &Census) -> Result<String> {
    let mut rows = vec![header()];
    for (shape, entry) in &census.shapes {
        rows.push(vec![
            census.n.to_string(),
            shape.to_string(),
            String::new(),
            entry.count.to_string(),
            entry.class_count.to_string(),
        ]);
        for (nu, fe) in &entry.fibers {
            rows.push(vec![
                census.n.to_string(),
                shape.to_string(),
                nu.to_string(),
                fe.count.to_string(),
                fe.class_count.to_string(),
            ]);
        }
    }
    csv_to_string(rows)
}

fn header() -> Vec<String> {
    ["n", "lambda", "nu", "a", "ae"].map(String::from).to_vec()
}

/// The `count` payload as CSV using the census column layout.
pub fn count_csv(doc: &CountDoc) -> Result<String> {
    let mut rows = vec![header()];
    for row in &doc.shapes {
        rows.push(vec![
            doc.n.to_string(),
            row.lambda.clone(),
            String::new(),
            row.a.0.to_string(),
            String::new(),
        ]);
    }
    csv_to_string(rows)
}

/// The `classes` payload as CSV using the census column layout.
pub fn classes_csv(doc: &ClassesDoc) -> Result<String> {
    let mut rows = vec![header()];
    rows.push(vec![
        doc.n.to_string(),
        doc.lambda.clone(),
        String::new(),
        doc.a.0.to_string(),
        doc.ae.0.to_string(),
    ]);
    if let Some(fibers) = &doc.fibers {
        for f in fibers {
            rows.push(vec![
                doc.n.to_string(),
                doc.lambda.clone(),
                f.nu.clone(),
                f.a.0.to_string(),
                f.ae.0.to_string(),
            ]);
        }
    }
    csv_to_string(rows)
}

/// Overcount table as CSV: first column `mu`, one column per `ν`.
pub fn overcount_csv(table: &OvercountTable) -> Result<String> {
    let mut head = vec!["mu".to_string()];
    head.extend(table.cols.iter().map(|c| c.to_string()));
    let mut rows = vec![head];
    for (mu, row) in table.rows.iter().zip(&table.cells) {
        let mut rec = vec![mu.to_string()];
        rec.extend(row.iter().map(|c| c.value.to_string()));
        rows.push(rec);
    }
    csv_to_string(rows)
}

/// f-vector as CSV with columns `n, dim, f`.
pub fn fvector_csv(doc: &FVectorDoc) -> Result<String> {
    let mut rows = vec![["n", "dim", "f"].map(String::from).to_vec()];
    for (dim, v) in doc.f.iter().enumerate() {
        rows.push(vec![doc.n.to_string(), dim.to_string(), v.0.to_string()]);
    }
    csv_to_string(rows)
}

/// Orbits as CSV with columns `n, group, size, representative`.
pub fn orbits_csv(doc: &OrbitsDoc) -> Result<String> {
    let mut rows = vec![["n", "group", "size", "representative"].map(String::from).to_vec()];
    for o in &doc.orbits {
        rows.push(vec![
            doc.n.to_string(),
            doc.group.clone(),
            o.size.to_string(),
            o.representative.clone(),
        ]);
    }
    csv_to_string(rows)
}
