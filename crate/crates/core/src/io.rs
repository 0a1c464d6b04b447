//! Text formats for walks, evaluations and observed singleton proximities.
//!
//! * walks: `<name>: <v_1> <v_2> ... <v_k>`; the walk stays at `v_k` forever
//! * evaluations: a `base <vertex>` header, then `<vertex> <rational>` lines
//! * singletons: `<walk_a> <walk_b> <index> <rational>`
//!
//! `#` starts a comment in every format.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::evaluation::Evaluation;
use crate::extension::PartialEvaluation;
use crate::graph::Graph;
use crate::proximity::SingletonTable;
use crate::rational::{format_exact, parse_rational, Q};
use crate::walk::Walk;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(n, raw)| (n + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Walks in file order, addressable by name.
#[derive(Debug, Clone, Default)]
pub struct NamedWalks {
    entries: Vec<(String, Walk)>,
}

impl NamedWalks {
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let mut entries: Vec<(String, Walk)> = Vec::new();
        for (n, line) in content_lines(text) {
            let (name, body) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(n, "expected `<name>: <vertices>`"))?;
            let name = name.trim();
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(Error::parse(n, format!("bad walk name `{name}`")));
            }
            if entries.iter().any(|(existing, _)| existing == name) {
                return Err(Error::parse(n, format!("duplicate walk name `{name}`")));
            }
            let labels: Vec<&str> = body.split_whitespace().collect();
            if labels.is_empty() {
                return Err(Error::parse(n, format!("walk `{name}` lists no vertices")));
            }
            let walk = Walk::from_labels(g, &labels).map_err(|e| match e {
                Error::NotAWalk { .. } => Error::parse(n, format!("walk `{name}`: {e}")),
                other => other,
            })?;
            entries.push((name.to_owned(), walk));
        }
        Ok(NamedWalks { entries })
    }

    pub fn push(&mut self, name: impl Into<String>, walk: Walk) {
        self.entries.push((name.into(), walk));
    }

    pub fn get(&self, name: &str) -> Result<&Walk> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, w)| w)
            .ok_or_else(|| Error::UnknownWalk(name.to_owned()))
    }

    /// Looks up several names, keeping their order.
    pub fn select<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<(String, Walk)>> {
        names.iter().map(|n| Ok((n.as_ref().to_owned(), self.get(n.as_ref())?.clone()))).collect()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn entries(&self) -> &[(String, Walk)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn render(&self, g: &Graph) -> String {
        let mut out = String::new();
        for (name, w) in &self.entries {
            let _ = writeln!(out, "{name}: {}", w.labels(g).join(" "));
        }
        out
    }
}

/// Evaluation file contents before they are bound to a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationDoc {
    pub base: String,
    pub values: Vec<(String, Q)>,
}

impl EvaluationDoc {
    pub fn parse(text: &str) -> Result<Self> {
        let mut base = None;
        let mut values = Vec::new();
        for (n, line) in content_lines(text) {
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["base", v] => {
                    if base.replace((*v).to_owned()).is_some() {
                        return Err(Error::parse(n, "repeated `base` header"));
                    }
                }
                [v, x] => {
                    let value =
                        parse_rational(x).ok_or_else(|| Error::parse(n, format!("bad rational `{x}`")))?;
                    values.push(((*v).to_owned(), value));
                }
                _ => return Err(Error::parse(n, "expected `<vertex> <rational>`")),
            }
        }
        let base = base.ok_or_else(|| Error::parse(0, "missing `base <vertex>` header"))?;
        Ok(EvaluationDoc { base, values })
    }

    pub fn partial<'g>(&self, g: &'g Graph) -> Result<PartialEvaluation<'g>> {
        let pairs = self.values.iter().map(|(l, x)| Ok((g.vertex(l)?, x.clone()))).collect::<Result<Vec<_>>>()?;
        PartialEvaluation::new(g, g.vertex(&self.base)?, pairs)
    }

    pub fn total<'g>(&self, g: &'g Graph) -> Result<Evaluation<'g>> {
        let p = self.partial(g)?;
        let values = g
            .vertices()
            .map(|v| p.value(v).cloned().ok_or_else(|| Error::MissingValue(g.label(v).to_owned())))
            .collect::<Result<Vec<_>>>()?;
        Evaluation::new(g, p.base(), values)
    }

    pub fn render(g: &Graph, phi: &Evaluation<'_>) -> String {
        let mut out = format!("base {}\n", g.label(phi.base()));
        for v in g.vertices() {
            let _ = writeln!(out, "{} {}", g.label(v), format_exact(phi.value(v)));
        }
        out
    }
}

pub fn parse_singletons(walks: &NamedWalks, text: &str) -> Result<SingletonTable> {
    let mut table = SingletonTable::new();
    for (n, line) in content_lines(text) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b, i, x] = fields.as_slice() else {
            return Err(Error::parse(n, "expected `<walk_a> <walk_b> <index> <rational>`"));
        };
        let i: usize = i.parse().map_err(|_| Error::parse(n, format!("bad index `{i}`")))?;
        if i == 0 {
            return Err(Error::ZeroIndex);
        }
        let value = parse_rational(x).ok_or_else(|| Error::parse(n, format!("bad rational `{x}`")))?;
        table.insert(walks.get(a)?, walks.get(b)?, i, value);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proximity::SingletonProximity;
    use crate::rational::{q, qi};

    fn example() -> Graph {
        Graph::parse(include_str!("../data/example_graph.txt")).unwrap()
    }

    #[test]
    fn example_walk_file() {
        let g = example();
        let walks = NamedWalks::parse(&g, include_str!("../data/example_walks.txt")).unwrap();
        assert_eq!(walks.names().collect::<Vec<_>>(), ["w1", "w2", "w3", "w4", "w5", "w6"]);
        assert_eq!(walks.get("w3").unwrap().horizon(), 3);
        assert!(walks.get("w9").unwrap_err().is_lookup());
        let again = NamedWalks::parse(&g, &walks.render(&g)).unwrap();
        assert_eq!(again.entries(), walks.entries());
    }

    #[test]
    fn bad_walk_files() {
        let g = example();
        assert!(matches!(NamedWalks::parse(&g, "w1 v1 v2"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(NamedWalks::parse(&g, "a: v1\na: v2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(NamedWalks::parse(&g, "a: v1 v10"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(NamedWalks::parse(&g, "a:"), Err(Error::Parse { .. })));
        assert!(NamedWalks::parse(&g, "a: v1 vX").unwrap_err().is_lookup());
    }

    #[test]
    fn evaluation_file() {
        let g = example();
        let doc = EvaluationDoc::parse("# partial\nbase v1\nv1 0\nv10 -3\nv9 -2.0\nv2 0/5").unwrap();
        assert_eq!(doc.base, "v1");
        let p = doc.partial(&g).unwrap();
        assert_eq!(p.domain().len(), 4);
        assert_eq!(p.value(g.vertex("v9").unwrap()), Some(&qi(-2)));
        assert!(matches!(doc.total(&g), Err(Error::MissingValue(_))));

        let phi = Evaluation::distance_to_target(&g, g.vertex("v1").unwrap(), g.vertex("v10").unwrap());
        let text = EvaluationDoc::render(&g, &phi);
        assert_eq!(EvaluationDoc::parse(&text).unwrap().total(&g).unwrap(), phi);

        assert!(EvaluationDoc::parse("v1 0").is_err());
        assert!(EvaluationDoc::parse("base v1\nv1 zero").is_err());
    }

    #[test]
    fn singleton_file() {
        let g = example();
        let walks = NamedWalks::parse(&g, include_str!("../data/example_walks.txt")).unwrap();
        let t = parse_singletons(&walks, "w1 w2 2 1/4\n").unwrap();
        assert_eq!(t.singleton(walks.get("w2").unwrap(), walks.get("w1").unwrap(), 2), q(1, 4));
        assert!(parse_singletons(&walks, "w1 w2 0 1").is_err());
        assert!(parse_singletons(&walks, "w1 w7 1 1").unwrap_err().is_lookup());
    }
}
