//! The average-proximity construction from a set of exploratory walks:
//!
//! 1. known values `phi_0(v) = d(v, target) - d(start, target)` on every
//!    visited vertex, extended to the whole graph by the blended
//!    McShane/Whitney formula;
//! 2. coefficients recovered from observed singleton proximities for every
//!    unordered pair of exploratory walks and averaged index by index, or
//!    `s = 1` when nothing was observed;
//! 3. the canonical proximity assembled from both.

use num_traits::{One, Zero};

use super::recover::recover_entry;
use super::weights::average_defined;
use super::{ProximityModel, SingletonProximity, WeightSequence};
use crate::error::{Error, Result};
use crate::evaluation::Evaluation;
use crate::extension::{AnchorPolicy, PartialEvaluation};
use crate::graph::{Graph, Vertex};
use crate::rational::{q, Q};
use crate::walk::{Walk, WeightScheme};

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub scheme: WeightScheme,
    pub alpha: Q,
    pub anchors: AnchorPolicy,
    /// Extension constant; defaults to the norm of the known values.
    pub lip_constant: Option<Q>,
    /// Base vertex of the evaluation; defaults to the common start.
    pub base: Option<Vertex>,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            scheme: WeightScheme::dyadic(),
            alpha: q(1, 2),
            anchors: AnchorPolicy::All,
            lip_constant: None,
            base: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct AverageProximity<'g> {
    pub model: ProximityModel<'g>,
    pub known: PartialEvaluation<'g>,
    pub start: Vertex,
    pub target: Vertex,
    /// Recovered coefficients per unordered pair `(a, b)` of exploratory
    /// walks, `a < b`; empty when no proximities were observed.
    pub per_pair: Vec<(usize, usize, WeightSequence)>,
}

/// Visited vertices in order of first visit across `walks`.
pub fn visited_vertices(walks: &[Walk]) -> Vec<Vertex> {
    let mut out = Vec::new();
    for w in walks {
        for v in w.visited() {
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

/// Progress-to-target values `d(v, target) - d(base, target)` on the visited
/// vertices of `walks` (plus the base). The walks must share their final
/// vertex, and their start too unless `base` is given.
pub fn progress_evaluation<'g>(
    g: &'g Graph,
    walks: &[Walk],
    base: Option<Vertex>,
) -> Result<(PartialEvaluation<'g>, Vertex, Vertex)> {
    let first = walks.first().ok_or(Error::EmptyInput("exploratory walks"))?;
    let (start, target) = (base.unwrap_or_else(|| first.start()), first.tail());
    for w in walks {
        if base.is_none() && w.start() != start {
            return Err(Error::MismatchedEndpoints {
                expected: g.label(start).to_owned(),
                found: g.label(w.start()).to_owned(),
            });
        }
        if w.tail() != target {
            return Err(Error::MismatchedEndpoints {
                expected: g.label(target).to_owned(),
                found: g.label(w.tail()).to_owned(),
            });
        }
    }
    let phi0 = Evaluation::distance_to_target(g, start, target);
    let known = PartialEvaluation::restrict(&phi0, &visited_vertices(walks))?;
    debug_assert!(known.value(start).is_some());
    Ok((known, start, target))
}

pub fn build_average_proximity<'g>(
    g: &'g Graph,
    explored: &[Walk],
    observed: Option<&dyn SingletonProximity>,
    config: &PipelineConfig,
) -> Result<AverageProximity<'g>> {
    let (known, start, target) = progress_evaluation(g, explored, config.base)?;
    let k = config.lip_constant.clone().unwrap_or_else(|| known.restricted_norm().clone());
    let phi = known.extend(&config.alpha, &k, &config.anchors)?;

    let mut per_pair = Vec::new();
    let weights = match observed {
        None => WeightSequence::ones(),
        Some(oracle) => {
            // Past the longest prefix every exploratory walk sits at its
            // tail, so one more index determines the constant tail weight.
            let horizon = explored.iter().map(|w| w.horizon()).max().unwrap_or(0);
            let mut columns = Vec::new();
            let mut tails = Vec::new();
            for a in 0..explored.len() {
                for b in a + 1..explored.len() {
                    let (w1, w2) = (explored[a].as_seq(), explored[b].as_seq());
                    if w1 == w2 {
                        continue;
                    }
                    let column = (1..=horizon)
                        .map(|i| recover_entry(&oracle.singleton(w1, w2, i), &phi, &config.scheme, w1, w2, i))
                        .collect::<Result<Vec<_>>>()?;
                    let i = horizon + 1;
                    let tail = recover_entry(&oracle.singleton(w1, w2, i), &phi, &config.scheme, w1, w2, i)?;
                    let seq = WeightSequence::new(
                        column.iter().map(|s| s.clone().unwrap_or_else(Q::zero)).collect(),
                        tail.clone().unwrap_or_else(Q::zero),
                    )?;
                    per_pair.push((a, b, seq));
                    columns.push(column);
                    tails.push(tail);
                }
            }
            average_defined(&columns, &tails, horizon)
        }
    };
    debug_assert!(weights.prefix.iter().all(|s| s >= &Q::zero()));
    let model = ProximityModel::tight(config.scheme.clone(), phi, weights);
    Ok(AverageProximity { model, known, start, target, per_pair })
}

impl AverageProximity<'_> {
    /// True when the model uses the unit coefficients of the from-scratch
    /// branch.
    pub fn unit_weights(&self) -> bool {
        self.model.weights().prefix.iter().all(One::is_one) && self.model.weights().tail_value.is_one()
    }
}
