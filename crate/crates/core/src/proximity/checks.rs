//! Exact inequality checks for canonical proximities.

use std::fmt::Write as _;

use num_traits::Zero;

use super::ProximityModel;
use crate::error::{Error, Result};
use crate::rational::{format_exact, render_decimal, Q};
use crate::walk::{d_tau_restricted, IndexSet, VertexSeq};

/// A pair of sequences and an index set, with a display label.
#[derive(Debug, Clone)]
pub struct Sample {
    pub label: String,
    pub w1: VertexSeq,
    pub w2: VertexSeq,
    pub set: IndexSet,
}

impl Sample {
    pub fn new(label: impl Into<String>, w1: &VertexSeq, w2: &VertexSeq, set: IndexSet) -> Self {
        Sample { label: label.into(), w1: w1.clone(), w2: w2.clone(), set }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckRow {
    pub label: String,
    pub lhs: Q,
    pub rhs: Q,
    pub pass: bool,
}

impl CheckRow {
    fn le(label: impl Into<String>, lhs: Q, rhs: Q) -> Self {
        let pass = lhs <= rhs;
        CheckRow { label: label.into(), lhs, rhs, pass }
    }

    fn eq(label: impl Into<String>, lhs: Q, rhs: Q) -> Self {
        let pass = lhs == rhs;
        CheckRow { label: label.into(), lhs, rhs, pass }
    }

    pub fn margin(&self) -> Q {
        &self.rhs - &self.lhs
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct CheckReport {
    pub rows: Vec<CheckRow>,
}

impl CheckReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn first_failure(&self) -> Option<&CheckRow> {
        self.rows.iter().find(|r| !r.pass)
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.rows.extend(other.rows);
    }

    /// `pair, lhs, rhs, pass` rows; values in exact form, or rounded when
    /// `decimals` is given.
    pub fn to_tsv(&self, decimals: Option<usize>) -> String {
        let fmt = |x: &Q| match decimals {
            Some(d) => render_decimal(x, d),
            None => format_exact(x),
        };
        let mut out = String::from("pair\tlhs\trhs\tpass\n");
        for r in &self.rows {
            let _ = writeln!(out, "{}\t{}\t{}\t{}", r.label, fmt(&r.lhs), fmt(&r.rhs), r.pass);
        }
        out
    }
}

/// `P(w1, w2, A) <= ||phi||_Lip * K * sum_{i in A} tau_i d(w1(i), w2(i))`.
pub fn domination_report(m: &ProximityModel<'_>, samples: &[Sample]) -> CheckReport {
    let factor = m.evaluation().lipschitz_norm() * m.bound();
    let rows = samples
        .iter()
        .map(|s| {
            let lhs = m.proximity(&s.w1, &s.w2, &s.set);
            let rhs = &factor * d_tau_restricted(m.scheme(), m.graph(), &s.w1, &s.w2, &s.set);
            CheckRow::le(&s.label, lhs, rhs)
        })
        .collect();
    CheckReport { rows }
}

pub fn check_domination(m: &ProximityModel<'_>, samples: &[Sample]) -> Result<CheckReport> {
    let report = domination_report(m, samples);
    if let Some(r) = report.first_failure() {
        return Err(Error::DominationViolated { label: r.label.clone(), lhs: r.lhs.clone(), rhs: r.rhs.clone() });
    }
    Ok(report)
}

/// For each family, `sum_k P(w1_k, w2_k, A_k) <= K sum_k P_phi(w1_k, w2_k, A_k)`
/// where `P_phi` is the unweighted measure of the model's own evaluation.
/// When `||phi||_Lip <= 1` the right side is the sup-norm expression of the
/// 1-concavity inequality evaluated at a point of the unit ball, so a pass
/// certifies that inequality for the family; otherwise it certifies it with
/// constant `K ||phi||_Lip` (apply the check to `phi / ||phi||_Lip`).
pub fn concavity_witness_report(m: &ProximityModel<'_>, families: &[Vec<Sample>]) -> CheckReport {
    let phi = m.evaluation();
    let rows = families
        .iter()
        .map(|family| {
            let mut lhs = Q::zero();
            let mut measure = Q::zero();
            for s in family {
                lhs += m.proximity(&s.w1, &s.w2, &s.set);
                measure += phi.abs_pairing(m.scheme(), &s.w1, &s.w2, &s.set);
            }
            let label = family.iter().map(|s| s.label.as_str()).collect::<Vec<_>>().join("+");
            CheckRow::le(if label.is_empty() { "(empty)".to_owned() } else { label }, lhs, m.bound() * measure)
        })
        .collect();
    CheckReport { rows }
}

pub fn check_concavity_witness(m: &ProximityModel<'_>, families: &[Vec<Sample>]) -> Result<CheckReport> {
    let report = concavity_witness_report(m, families);
    if let Some(r) = report.first_failure() {
        return Err(Error::WitnessCheckFailed { lhs: r.lhs.clone(), rhs: r.rhs.clone() });
    }
    Ok(report)
}

/// Pseudometric axioms for `P(., ., A)` over every pair and triple of
/// `walks`: zero diagonal, symmetry and the triangle inequality.
pub fn pseudometric_report(m: &ProximityModel<'_>, walks: &[(String, VertexSeq)], set: &IndexSet) -> CheckReport {
    let n = walks.len();
    let table: Vec<Vec<Q>> = (0..n)
        .map(|a| (0..n).map(|b| m.proximity(&walks[a].1, &walks[b].1, set)).collect())
        .collect();
    let mut rows = Vec::new();
    for a in 0..n {
        rows.push(CheckRow::eq(format!("diag({})", walks[a].0), table[a][a].clone(), Q::zero()));
        for b in a + 1..n {
            let label = format!("sym({},{})", walks[a].0, walks[b].0);
            rows.push(CheckRow::eq(label, table[a][b].clone(), table[b][a].clone()));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a == c || b == a || b == c {
                    continue;
                }
                let label = format!("tri({},{},{})", walks[a].0, walks[b].0, walks[c].0);
                rows.push(CheckRow::le(label, table[a][c].clone(), &table[a][b] + &table[b][c]));
            }
        }
    }
    CheckReport { rows }
}
