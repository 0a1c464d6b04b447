use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite or cofinite set of positive integers.
///
/// This is the smallest algebra of index sets that contains the singletons
/// and is closed under complement, union and intersection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IndexSet {
    Finite(BTreeSet<usize>),
    /// Everything except the listed indices.
    Cofinite(BTreeSet<usize>),
}

fn checked(indices: impl IntoIterator<Item = usize>) -> Result<BTreeSet<usize>> {
    let set: BTreeSet<usize> = indices.into_iter().collect();
    if set.contains(&0) {
        return Err(Error::ZeroIndex);
    }
    Ok(set)
}

impl IndexSet {
    pub fn all() -> Self {
        IndexSet::Cofinite(BTreeSet::new())
    }

    pub fn empty() -> Self {
        IndexSet::Finite(BTreeSet::new())
    }

    pub fn singleton(i: usize) -> Result<Self> {
        IndexSet::finite([i])
    }

    pub fn finite(indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        Ok(IndexSet::Finite(checked(indices)?))
    }

    pub fn cofinite(excluded: impl IntoIterator<Item = usize>) -> Result<Self> {
        Ok(IndexSet::Cofinite(checked(excluded)?))
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, IndexSet::Finite(s) if s.is_empty())
    }

    pub fn is_all(&self) -> bool {
        matches!(self, IndexSet::Cofinite(s) if s.is_empty())
    }

    pub fn contains(&self, i: usize) -> bool {
        match self {
            IndexSet::Finite(s) => s.contains(&i),
            IndexSet::Cofinite(c) => i >= 1 && !c.contains(&i),
        }
    }

    /// Largest index that is explicitly listed (members or exclusions).
    pub fn max_listed(&self) -> usize {
        match self {
            IndexSet::Finite(s) | IndexSet::Cofinite(s) => s.iter().next_back().copied().unwrap_or(0),
        }
    }

    pub fn complement(&self) -> Self {
        match self {
            IndexSet::Finite(s) => IndexSet::Cofinite(s.clone()),
            IndexSet::Cofinite(s) => IndexSet::Finite(s.clone()),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        use IndexSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a | b),
            (Finite(a), Cofinite(c)) | (Cofinite(c), Finite(a)) => Cofinite(c - a),
            (Cofinite(a), Cofinite(b)) => Cofinite(a & b),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        use IndexSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a & b),
            (Finite(a), Cofinite(c)) | (Cofinite(c), Finite(a)) => Finite(a - c),
            (Cofinite(a), Cofinite(b)) => Cofinite(a | b),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: &BTreeSet<usize>| s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        match self {
            s if s.is_all() => write!(f, "all"),
            IndexSet::Finite(s) => write!(f, "{{{}}}", list(s)),
            IndexSet::Cofinite(s) => write!(f, "~{{{}}}", list(s)),
        }
    }
}

impl FromStr for IndexSet {
    type Err = Error;

    /// Accepts `all`, `{}`, `{1,2,5}` and `~{3}`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "all" {
            return Ok(IndexSet::all());
        }
        let (cofinite, body) = match text.strip_prefix('~') {
            Some(rest) => (true, rest.trim()),
            None => (false, text),
        };
        let inner = body
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .ok_or_else(|| Error::parse(0, format!("bad index set `{text}`")))?;
        let mut indices = Vec::new();
        for item in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let i: usize = item.parse().map_err(|_| Error::parse(0, format!("bad index `{item}`")))?;
            indices.push(i);
        }
        if cofinite {
            IndexSet::cofinite(indices)
        } else {
            IndexSet::finite(indices)
        }
    }
}
