//! The ten-vertex worked example, embedded so the reproduction command and
//! the golden tests read the same data files.

use crate::error::Result;
use crate::extension::AnchorPolicy;
use crate::graph::Graph;
use crate::io::NamedWalks;
use crate::proximity::{build_average_proximity, AverageProximity, PipelineConfig};
use crate::rational::{parse_rational, q, Q};
use crate::walk::{IndexSet, WeightScheme};

pub const GRAPH: &str = include_str!("../data/example_graph.txt");
pub const WALKS: &str = include_str!("../data/example_walks.txt");
pub const TABLE: &str = include_str!("../data/example_table.tsv");

pub const REFERENCES: [&str; 3] = ["w1", "w2", "w3"];
pub const CANDIDATES: [&str; 3] = ["w4", "w5", "w6"];
pub const ASSIGNMENTS: [(&str, &str); 3] = [("w4", "w1"), ("w5", "w2"), ("w6", "w3")];
pub const TARGET: &str = "v10";
pub const EXPLORED: [&str; 8] = ["v1", "v2", "v3", "v4", "v5", "v8", "v9", "v10"];

#[derive(Debug, Clone, PartialEq)]
pub struct ExpectedEntry {
    pub candidate: String,
    pub reference: String,
    pub exact: Q,
    pub rendered: String,
}

pub fn expected_table() -> Vec<ExpectedEntry> {
    TABLE
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            ExpectedEntry {
                candidate: f[0].to_owned(),
                reference: f[1].to_owned(),
                exact: parse_rational(f[2]).expect("fixture table holds exact rationals"),
                rendered: f[3].to_owned(),
            }
        })
        .collect()
}

pub fn graph() -> Graph {
    Graph::parse(GRAPH).expect("embedded graph is valid")
}

pub fn walks(g: &Graph) -> NamedWalks {
    NamedWalks::parse(g, WALKS).expect("embedded walks are valid")
}

/// Known vertices other than the target anchor the extension.
pub fn anchor_policy(g: &Graph) -> AnchorPolicy {
    AnchorPolicy::Excluding(vec![g.vertex(TARGET).expect("target in graph")])
}

pub fn config(g: &Graph) -> PipelineConfig {
    PipelineConfig {
        scheme: WeightScheme::dyadic(),
        alpha: q(1, 2),
        anchors: anchor_policy(g),
        lip_constant: None,
        base: None,
    }
}

#[derive(Debug, Clone)]
pub struct Reproduction {
    /// `(candidate, reference, P)` in table order.
    pub table: Vec<(String, String, Q)>,
    /// `(candidate, assigned reference)`.
    pub assignments: Vec<(String, String)>,
}

pub fn build<'g>(g: &'g Graph, walks: &NamedWalks, config: &PipelineConfig) -> Result<AverageProximity<'g>> {
    let refs: Vec<_> = walks.select(&REFERENCES)?.into_iter().map(|(_, w)| w).collect();
    build_average_proximity(g, &refs, None, config)
}

pub fn reproduce(g: &Graph, config: &PipelineConfig) -> Result<Reproduction> {
    let walks = walks(g);
    let avg = build(g, &walks, config)?;
    let refs = walks.select(&REFERENCES)?;
    let all = IndexSet::all();
    let mut table = Vec::new();
    let mut assignments = Vec::new();
    for (cname, cand) in walks.select(&CANDIDATES)? {
        for (rname, r) in &refs {
            table.push((cname.clone(), rname.clone(), avg.model.proximity(&cand, r, &all)));
        }
        let k = avg.model.classify(&cand, &refs.iter().map(|(_, w)| w.clone()).collect::<Vec<_>>(), &all)?;
        assignments.push((cname, refs[k].0.clone()));
    }
    Ok(Reproduction { table, assignments })
}
