use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{qi, serde_exact, Q};

/// Non-negative per-index coefficients `s_i`, constant past the prefix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSequence {
    #[serde(with = "serde_exact::vec")]
    pub prefix: Vec<Q>,
    #[serde(with = "serde_exact")]
    pub tail_value: Q,
}

impl WeightSequence {
    pub fn new(prefix: Vec<Q>, tail_value: Q) -> Result<Self> {
        if let Some(i) = prefix.iter().position(Signed::is_negative) {
            return Err(Error::NegativeProximity { index: i + 1, value: prefix[i].clone() });
        }
        if tail_value.is_negative() {
            return Err(Error::NegativeProximity { index: prefix.len() + 1, value: tail_value });
        }
        Ok(WeightSequence { prefix, tail_value })
    }

    pub fn constant(value: Q) -> Self {
        WeightSequence { prefix: Vec::new(), tail_value: value }
    }

    pub fn ones() -> Self {
        WeightSequence::constant(Q::one())
    }

    pub fn at(&self, i: usize) -> &Q {
        assert!(i >= 1, "weights are indexed from 1");
        self.prefix.get(i - 1).unwrap_or(&self.tail_value)
    }

    pub fn horizon(&self) -> usize {
        self.prefix.len()
    }

    /// `sup_i s_i`, attained since the sequence is eventually constant.
    pub fn sup(&self) -> Q {
        self.prefix.iter().chain(std::iter::once(&self.tail_value)).max().cloned().unwrap_or_else(Q::zero)
    }

    pub fn scaled(&self, factor: &Q) -> Self {
        WeightSequence {
            prefix: self.prefix.iter().map(|s| s * factor).collect(),
            tail_value: &self.tail_value * factor,
        }
    }
}

/// Index-wise arithmetic mean; shorter prefixes are padded with their tail.
pub fn average_weights(sequences: &[WeightSequence]) -> Result<WeightSequence> {
    if sequences.is_empty() {
        return Err(Error::EmptyInput("weight sequences"));
    }
    let n = qi(sequences.len() as i64);
    let horizon = sequences.iter().map(WeightSequence::horizon).max().unwrap_or(0);
    let prefix = (1..=horizon).map(|i| sequences.iter().map(|s| s.at(i)).sum::<Q>() / &n).collect();
    let tail_value = sequences.iter().map(|s| &s.tail_value).sum::<Q>() / &n;
    Ok(WeightSequence { prefix, tail_value })
}

/// Mean over the defined entries only; an index nobody determines gets 0.
pub(crate) fn average_defined(columns: &[Vec<Option<Q>>], tails: &[Option<Q>], horizon: usize) -> WeightSequence {
    let mean = |values: Vec<&Q>| {
        if values.is_empty() {
            Q::zero()
        } else {
            let n = qi(values.len() as i64);
            values.into_iter().sum::<Q>() / n
        }
    };
    let prefix = (0..horizon)
        .map(|i| mean(columns.iter().filter_map(|c| c.get(i).and_then(Option::as_ref)).collect()))
        .collect();
    let tail_value = mean(tails.iter().filter_map(Option::as_ref).collect());
    WeightSequence { prefix, tail_value }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn indexing_and_sup() {
        let s = WeightSequence::new(vec![qi(2), q(1, 2)], qi(1)).unwrap();
        assert_eq!(s.at(1), &qi(2));
        assert_eq!(s.at(2), &q(1, 2));
        assert_eq!(s.at(40), &qi(1));
        assert_eq!(s.sup(), qi(2));
        assert!(WeightSequence::new(vec![qi(-1)], qi(0)).is_err());
    }

    #[test]
    fn averaging() {
        let one = WeightSequence::ones();
        assert_eq!(average_weights(std::slice::from_ref(&one)).unwrap(), one);
        let zero = WeightSequence::constant(qi(0));
        assert_eq!(average_weights(&[one.clone(), zero]).unwrap(), WeightSequence::constant(q(1, 2)));
        assert!(matches!(average_weights(&[]), Err(Error::EmptyInput(_))));

        let a = WeightSequence::new(vec![qi(3)], qi(1)).unwrap();
        let b = WeightSequence::new(vec![qi(0), qi(0), qi(5)], qi(0)).unwrap();
        let m = average_weights(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(m.prefix, vec![q(3, 2), q(1, 2), qi(3)]);
        assert_eq!(m.tail_value, q(1, 2));
        assert!(m.sup() <= a.sup().max(b.sup()));
    }

    #[test]
    fn defined_mean_skips_gaps() {
        let cols = vec![vec![Some(qi(2)), None], vec![Some(qi(4)), None]];
        let m = average_defined(&cols, &[None, Some(qi(3))], 2);
        assert_eq!(m.prefix, vec![qi(3), qi(0)]);
        assert_eq!(m.tail_value, qi(3));
    }
}
