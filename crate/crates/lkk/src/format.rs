//! File formats: the graph JSON schema, the plain-text matrix format for
//! `snf`, and the optional config file. Output is canonical: fixed key
//! order, arrays in input order, integers as decimal strings where they
//! can exceed machine width, and no floating-point anywhere.

use anyhow::{anyhow, bail, Context, Result};
use lkk_core::graph::{Edge, WeightedGraph};
use lkk_core::group::Group;
use lkk_core::int_mat::IntMatrix;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFile {
    pub free_rank: usize,
    #[serde(default)]
    pub torsion: Vec<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeFile {
    pub id: String,
    pub src: String,
    pub dst: String,
    /// Defaults to the generator vector [1, 0, ...] when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphFile {
    pub group: GroupFile,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeFile>,
}

impl GraphFile {
    pub fn parse(text: &str) -> Result<GraphFile> {
        serde_json::from_str(text).context("malformed graph JSON")
    }

    /// Build the graph; structural problems (bad group, wrong weight
    /// length) come back as violation strings.
    pub fn to_graph(&self) -> std::result::Result<WeightedGraph, Vec<String>> {
        let group = Group::new(self.group.free_rank, self.group.torsion.clone())
            .map_err(|e| vec![format!("group: {e}")])?;
        let mut violations = Vec::new();
        let mut edges = Vec::new();
        for e in &self.edges {
            let coords = match &e.weight {
                Some(w) => w.clone(),
                None => {
                    let mut g = vec![0i64; group.dim()];
                    if !g.is_empty() {
                        g[0] = 1;
                    }
                    g
                }
            };
            match group.element(coords) {
                Ok(weight) => edges.push(Edge {
                    id: e.id.clone(),
                    src: e.src.clone(),
                    dst: e.dst.clone(),
                    weight,
                }),
                Err(err) => violations.push(format!("edge {}: {err}", e.id)),
            }
        }
        if !violations.is_empty() {
            return Err(violations);
        }
        Ok(WeightedGraph::new(group, self.vertices.clone(), edges))
    }

    pub fn from_graph(g: &WeightedGraph) -> GraphFile {
        GraphFile {
            group: GroupFile {
                free_rank: g.group().free_rank(),
                torsion: g.group().torsion().to_vec(),
            },
            vertices: g.vertices().to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeFile {
                    id: e.id.clone(),
                    src: e.src.clone(),
                    dst: e.dst.clone(),
                    weight: Some(e.weight.coords().to_vec()),
                })
                .collect(),
        }
    }
}

/// Read a graph file from disk, reporting violations as one error.
pub fn load_graph(path: &str) -> Result<WeightedGraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    let file = GraphFile::parse(&text)?;
    let graph = file
        .to_graph()
        .map_err(|v| anyhow!("invalid graph data: {}", v.join("; ")))?;
    let violations = graph.validate();
    if !violations.is_empty() {
        bail!("invalid graph: {}", violations.join("; "));
    }
    Ok(graph)
}

/// Matrix text format: first line `rows cols`, then rows of
/// whitespace-separated decimal integers of arbitrary length.
pub fn parse_matrix_text(text: &str) -> Result<IntMatrix> {
    let mut tokens = text.split_whitespace();
    let rows: usize = tokens
        .next()
        .ok_or_else(|| anyhow!("missing row count"))?
        .parse()
        .context("row count")?;
    let cols: usize = tokens
        .next()
        .ok_or_else(|| anyhow!("missing column count"))?
        .parse()
        .context("column count")?;
    let mut entries = Vec::with_capacity(rows * cols);
    for _ in 0..rows * cols {
        let tok = tokens.next().ok_or_else(|| {
            anyhow!("expected {} entries, found {}", rows * cols, entries.len())
        })?;
        entries.push(BigInt::from_str(tok).with_context(|| format!("bad integer {tok}"))?);
    }
    if tokens.next().is_some() {
        bail!("trailing data after {} matrix entries", rows * cols);
    }
    Ok(IntMatrix::from_entries(rows, cols, entries))
}

pub fn matrix_to_rows(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
        .collect()
}

/// Runtime defaults, overridable by a config file and per-flag.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default)]
pub struct Config {
    pub degree_bound_default: i64,
    pub coeff_bound_default: u64,
    pub truncation_radius_default: i64,
    pub prime_bound_default: u64,
    /// 0 = automatic.
    pub jobs: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            degree_bound_default: 4,
            coeff_bound_default: 3,
            truncation_radius_default: 8,
            prime_bound_default: 13,
            jobs: 0,
        }
    }
}

impl Config {
    pub fn load(path: Option<&str>) -> Result<Config> {
        match path {
            None => Ok(Config::default()),
            Some(p) => {
                let text = std::fs::read_to_string(p).with_context(|| format!("reading {p}"))?;
                let config: Config = serde_json::from_str(&text).context("malformed config")?;
                if config.degree_bound_default <= 0
                    || config.coeff_bound_default == 0
                    || config.truncation_radius_default <= 0
                    || config.prime_bound_default == 0
                {
                    bail!("config bounds must be positive");
                }
                Ok(config)
            }
        }
    }
}

/// Canonical serialization used for every report: pretty JSON with a
/// trailing newline, struct key order fixed by declaration.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}
