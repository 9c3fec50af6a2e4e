//! Parallel corpus sweeps: an ordered parallel map over the corpus with a
//! deterministic merge, so reports are byte-identical for any worker
//! count.

use anyhow::Result;
use lkk_core::enumerate::{
    generate_corpus, run_checks, Check, CheckConfig, CorpusSpec, GraphReport,
};
use lkk_core::graph::WeightedGraph;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Serialize)]
pub struct SweepGraphEntry {
    pub index: usize,
    pub adjacency: Vec<Vec<u64>>,
    pub vertices: usize,
    pub edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub battery_digest: Option<String>,
    pub failures: Vec<String>,
}

#[derive(Serialize)]
pub struct SweepReport {
    pub max_vertices: usize,
    pub max_multiplicity: u64,
    pub include_sinks: bool,
    pub canonical_only: bool,
    pub checks: Vec<String>,
    pub graph_count: usize,
    pub graphs: Vec<SweepGraphEntry>,
    /// Graphs sharing identical battery digests, grouped; indices refer to
    /// the corpus order. Present only when the battery check ran.
    pub collision_classes: Vec<Vec<usize>>,
    pub failures: Vec<String>,
}

/// Square adjacency count matrix of a standard-graded corpus graph.
fn adjacency_of(g: &WeightedGraph) -> Vec<Vec<u64>> {
    let n = g.vertices().len();
    let mut m = vec![vec![0u64; n]; n];
    for e in g.edges() {
        let i = g.vertex_index(&e.src).expect("corpus graph");
        let j = g.vertex_index(&e.dst).expect("corpus graph");
        m[i][j] += 1;
    }
    m
}

pub fn run_sweep(
    spec: &CorpusSpec,
    checks: &[Check],
    config: &CheckConfig,
    jobs: usize,
) -> Result<SweepReport> {
    let corpus = generate_corpus(spec).map_err(|e| anyhow::anyhow!("{e}"))?;
    let reports: Vec<GraphReport> = if jobs == 1 {
        corpus
            .iter()
            .enumerate()
            .map(|(i, g)| run_checks(i, g, checks, config))
            .collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| anyhow::anyhow!("thread pool: {e}"))?;
        pool.install(|| {
            corpus
                .par_iter()
                .enumerate()
                .map(|(i, g)| run_checks(i, g, checks, config))
                .collect()
        })
    };

    let mut collision_map: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    let mut failures = Vec::new();
    for r in &reports {
        if let Some(d) = &r.battery_digest {
            collision_map.entry(d.clone()).or_default().push(r.index);
        }
        for f in &r.failures {
            failures.push(format!("graph {}: {f}", r.index));
        }
    }
    let mut collision_classes: Vec<Vec<usize>> = collision_map.into_values().collect();
    collision_classes.sort_by_key(|class| class[0]);

    let graphs = corpus
        .iter()
        .zip(&reports)
        .map(|(g, r)| SweepGraphEntry {
            index: r.index,
            adjacency: adjacency_of(g),
            vertices: r.vertices,
            edges: r.edges,
            battery_digest: r.battery_digest.clone(),
            failures: r.failures.clone(),
        })
        .collect();

    Ok(SweepReport {
        max_vertices: spec.max_vertices,
        max_multiplicity: spec.max_edge_multiplicity,
        include_sinks: spec.include_sinks,
        canonical_only: spec.canonical_only,
        checks: checks.iter().map(|c| c.name().to_string()).collect(),
        graph_count: corpus.len(),
        graphs,
        collision_classes,
        failures,
    })
}
