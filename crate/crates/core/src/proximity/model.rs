use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::WeightSequence;
use crate::error::{Error, Result};
use crate::evaluation::Evaluation;
use crate::graph::Graph;
use crate::rational::{format_exact, parse_rational, serde_exact, Q};
use crate::walk::series::{weighted_sum, Shape};
use crate::walk::{IndexSet, VertexSeq, WeightScheme};

/// A proximity in canonical form,
/// `P(w1, w2, A) = sum_{i in A} tau_i s_i |phi(w1(i)) - phi(w2(i))|`,
/// with every `s_i <= bound`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProximityModel<'g> {
    scheme: WeightScheme,
    evaluation: Evaluation<'g>,
    weights: WeightSequence,
    bound: Q,
}

impl<'g> ProximityModel<'g> {
    pub fn new(scheme: WeightScheme, evaluation: Evaluation<'g>, weights: WeightSequence, bound: Q) -> Result<Self> {
        let max_weight = weights.sup();
        if bound < max_weight {
            return Err(Error::BoundTooSmall { bound, max_weight });
        }
        Ok(ProximityModel { scheme, evaluation, weights, bound })
    }

    /// Model whose bound is the largest weight.
    pub fn tight(scheme: WeightScheme, evaluation: Evaluation<'g>, weights: WeightSequence) -> Self {
        let bound = weights.sup();
        ProximityModel { scheme, evaluation, weights, bound }
    }

    pub fn scheme(&self) -> &WeightScheme {
        &self.scheme
    }

    pub fn evaluation(&self) -> &Evaluation<'g> {
        &self.evaluation
    }

    pub fn weights(&self) -> &WeightSequence {
        &self.weights
    }

    pub fn bound(&self) -> &Q {
        &self.bound
    }

    pub fn graph(&self) -> &'g Graph {
        self.evaluation.graph()
    }

    /// Same model with every weight and the bound multiplied by `factor > 0`.
    pub fn rescaled(&self, factor: &Q) -> Self {
        ProximityModel {
            scheme: self.scheme.clone(),
            evaluation: self.evaluation.clone(),
            weights: self.weights.scaled(factor),
            bound: &self.bound * factor,
        }
    }

    pub fn proximity(&self, w1: &VertexSeq, w2: &VertexSeq, set: &IndexSet) -> Q {
        let horizon = w1.horizon().max(w2.horizon()).max(self.weights.horizon());
        let phi = &self.evaluation;
        weighted_sum(&self.scheme, set, Shape::constant_after(horizon), |i| {
            self.weights.at(i) * (phi.value(w1.at(i)) - phi.value(w2.at(i))).abs()
        })
    }

    /// Index of the reference closest to `w`; ties go to the earliest one.
    pub fn classify<W: AsRef<VertexSeq>>(&self, w: &VertexSeq, refs: &[W], set: &IndexSet) -> Result<usize> {
        let mut best: Option<(usize, Q)> = None;
        for (k, r) in refs.iter().enumerate() {
            let p = self.proximity(w, r.as_ref(), set);
            if best.as_ref().is_none_or(|(_, b)| p < *b) {
                best = Some((k, p));
            }
        }
        best.map(|(k, _)| k).ok_or(Error::EmptyInput("reference walks"))
    }

    /// One cluster per reference, holding indices into `walks`.
    pub fn partition<W: AsRef<VertexSeq>, R: AsRef<VertexSeq>>(
        &self,
        walks: &[W],
        refs: &[R],
        set: &IndexSet,
    ) -> Result<Vec<Vec<usize>>> {
        if refs.is_empty() {
            return Err(Error::EmptyInput("reference walks"));
        }
        let mut clusters = vec![Vec::new(); refs.len()];
        for (n, w) in walks.iter().enumerate() {
            clusters[self.classify(w.as_ref(), refs, set)?].push(n);
        }
        Ok(clusters)
    }

    pub fn to_record(&self) -> ModelRecord {
        let g = self.graph();
        ModelRecord {
            scheme: self.scheme.clone(),
            evaluation: EvaluationRecord {
                base: g.label(self.evaluation.base()).to_owned(),
                values: g
                    .vertices()
                    .map(|v| (g.label(v).to_owned(), format_exact(self.evaluation.value(v))))
                    .collect(),
            },
            weights: self.weights.clone(),
            bound: self.bound.clone(),
        }
    }

    pub fn from_record(g: &'g Graph, record: &ModelRecord) -> Result<Self> {
        let WeightScheme::Geometric { ratio } = &record.scheme;
        let scheme = WeightScheme::geometric(ratio.clone())?;
        let base = g.vertex(&record.evaluation.base)?;
        let mut values: Vec<Option<Q>> = vec![None; g.vertex_count()];
        for (label, text) in &record.evaluation.values {
            let value = parse_rational(text).ok_or_else(|| Error::Model(format!("bad value `{text}`")))?;
            values[g.vertex(label)?.index()] = Some(value);
        }
        let values = g
            .vertices()
            .zip(values)
            .map(|(v, x)| x.ok_or_else(|| Error::MissingValue(g.label(v).to_owned())))
            .collect::<Result<Vec<_>>>()?;
        let evaluation = Evaluation::new(g, base, values)?;
        let weights = WeightSequence::new(record.weights.prefix.clone(), record.weights.tail_value.clone())?;
        ProximityModel::new(scheme, evaluation, weights, record.bound.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_record()).expect("model record serializes")
    }

    pub fn from_json(g: &'g Graph, text: &str) -> Result<Self> {
        let record: ModelRecord = serde_json::from_str(text).map_err(|e| Error::Model(e.to_string()))?;
        ProximityModel::from_record(g, &record)
    }
}

/// Serialized form of a [`ProximityModel`]; rationals are exact strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelRecord {
    pub scheme: WeightScheme,
    pub evaluation: EvaluationRecord,
    pub weights: WeightSequence,
    #[serde(with = "serde_exact")]
    pub bound: Q,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationRecord {
    pub base: String,
    /// `(vertex, value)` pairs in vertex order.
    pub values: Vec<(String, String)>,
}
