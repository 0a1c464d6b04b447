//! McShane and Whitney extensions of an evaluation known on part of the
//! graph, blended as `alpha * F^M + (1 - alpha) * F^W`.
//!
//! `F^M(x) = max_y { f(y) - K d(x, y) }` is the smallest and
//! `F^W(x) = min_y { f(y) + K d(x, y) }` the largest K-Lipschitz extension
//! of `f` from the anchor set. With `alpha = 1` the blend is pure McShane.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::evaluation::Evaluation;
use crate::graph::{Graph, Vertex};
use crate::rational::{qi, Q};

/// Which known vertices feed the extension formulas.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum AnchorPolicy {
    /// Every vertex with a known value.
    #[default]
    All,
    /// Known vertices except the listed ones (typically walk targets). The
    /// excluded vertices keep their known values in the extension.
    Excluding(Vec<Vertex>),
}

impl AnchorPolicy {
    /// Parses `all` or `minus:<v,...>`.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "all" {
            return Ok(AnchorPolicy::All);
        }
        let list = text
            .strip_prefix("minus:")
            .ok_or_else(|| Error::parse(0, format!("bad anchor policy `{text}`")))?;
        let vertices = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|l| g.vertex(l))
            .collect::<Result<Vec<_>>>()?;
        Ok(AnchorPolicy::Excluding(vertices))
    }

    pub fn render(&self, g: &Graph) -> String {
        match self {
            AnchorPolicy::All => "all".to_owned(),
            AnchorPolicy::Excluding(vs) => {
                format!("minus:{}", vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(","))
            }
        }
    }
}

/// An evaluation known only on a subset of the vertices.
#[derive(Debug, Clone)]
pub struct PartialEvaluation<'g> {
    graph: &'g Graph,
    base: Vertex,
    known: Vec<Option<Q>>,
    domain: Vec<Vertex>,
    norm: Q,
}

/// The two extremal extensions at one vertex and the anchors attaining them.
#[derive(Debug, Clone, PartialEq)]
pub struct Extremes {
    pub mcshane: Q,
    pub mcshane_anchor: Vertex,
    pub whitney: Q,
    pub whitney_anchor: Vertex,
}

fn lipschitz_on(graph: &Graph, known: &[Option<Q>], domain: &[Vertex]) -> Q {
    let mut best = Q::zero();
    for (k, &u) in domain.iter().enumerate() {
        for &v in &domain[k + 1..] {
            let fu = known[u.index()].as_ref().expect("domain vertex has a value");
            let fv = known[v.index()].as_ref().expect("domain vertex has a value");
            let ratio = (fu - fv).abs() / qi(graph.distance(u, v) as i64);
            if ratio > best {
                best = ratio;
            }
        }
    }
    best
}

impl<'g> PartialEvaluation<'g> {
    pub fn new(graph: &'g Graph, base: Vertex, values: impl IntoIterator<Item = (Vertex, Q)>) -> Result<Self> {
        let mut known = vec![None; graph.vertex_count()];
        let mut domain = Vec::new();
        for (v, value) in values {
            if !graph.contains(v) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
            if known[v.index()].is_none() {
                domain.push(v);
            }
            known[v.index()] = Some(value);
        }
        match known.get(base.index()) {
            None => return Err(Error::UnknownVertex(base.to_string())),
            Some(None) => return Err(Error::MissingValue(graph.label(base).to_owned())),
            Some(Some(b)) if !b.is_zero() => {
                return Err(Error::NonZeroBase { vertex: graph.label(base).to_owned(), value: b.clone() })
            }
            Some(Some(_)) => {}
        }
        domain.sort();
        let norm = lipschitz_on(graph, &known, &domain);
        Ok(PartialEvaluation { graph, base, known, domain, norm })
    }

    /// Restricts a total evaluation to `domain` (the base vertex is always kept).
    pub fn restrict(phi: &Evaluation<'g>, domain: &[Vertex]) -> Result<Self> {
        let base = phi.base();
        let pairs = std::iter::once(base).chain(domain.iter().copied()).map(|v| (v, phi.value(v).clone()));
        PartialEvaluation::new(phi.graph(), base, pairs)
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn base(&self) -> Vertex {
        self.base
    }

    /// Known vertices in vertex order.
    pub fn domain(&self) -> &[Vertex] {
        &self.domain
    }

    pub fn value(&self, v: Vertex) -> Option<&Q> {
        self.known.get(v.index()).and_then(Option::as_ref)
    }

    /// Lipschitz constant of the known values, `max |f(u) - f(v)| / d(u, v)`.
    pub fn restricted_norm(&self) -> &Q {
        &self.norm
    }

    pub fn anchors(&self, policy: &AnchorPolicy) -> Vec<Vertex> {
        match policy {
            AnchorPolicy::All => self.domain.clone(),
            AnchorPolicy::Excluding(out) => self.domain.iter().copied().filter(|v| !out.contains(v)).collect(),
        }
    }

    fn check_constant(&self, k: &Q) -> Result<()> {
        if k < &self.norm {
            return Err(Error::BadConstant { given: k.clone(), required: self.norm.clone() });
        }
        Ok(())
    }

    /// Both extremal extensions at `v`, with the anchors attaining them.
    pub fn extremes(&self, v: Vertex, k: &Q, policy: &AnchorPolicy) -> Result<Extremes> {
        self.check_constant(k)?;
        let anchors = self.anchors(policy);
        let mut best: Option<Extremes> = None;
        for y in anchors {
            let f = self.known[y.index()].as_ref().expect("anchor has a value");
            let reach = k * qi(self.graph.distance(v, y) as i64);
            let low = f - &reach;
            let high = f + &reach;
            match &mut best {
                None => {
                    best = Some(Extremes { mcshane: low, mcshane_anchor: y, whitney: high, whitney_anchor: y });
                }
                Some(e) => {
                    if low > e.mcshane {
                        e.mcshane = low;
                        e.mcshane_anchor = y;
                    }
                    if high < e.whitney {
                        e.whitney = high;
                        e.whitney_anchor = y;
                    }
                }
            }
        }
        best.ok_or(Error::EmptyInput("anchor set"))
    }

    pub fn mcshane(&self, v: Vertex, k: &Q, policy: &AnchorPolicy) -> Result<Q> {
        Ok(self.extremes(v, k, policy)?.mcshane)
    }

    pub fn whitney(&self, v: Vertex, k: &Q, policy: &AnchorPolicy) -> Result<Q> {
        Ok(self.extremes(v, k, policy)?.whitney)
    }

    /// Value of the blended extension at a single vertex (known vertices
    /// keep their value).
    pub fn extend_at(&self, v: Vertex, alpha: &Q, k: &Q, policy: &AnchorPolicy) -> Result<Q> {
        check_alpha(alpha)?;
        if let Some(known) = self.value(v) {
            self.check_constant(k)?;
            return Ok(known.clone());
        }
        let e = self.extremes(v, k, policy)?;
        Ok(alpha * e.mcshane + (Q::one() - alpha) * e.whitney)
    }

    /// Total evaluation `alpha F^M + (1 - alpha) F^W`, agreeing with the
    /// known values on the domain.
    pub fn extend(&self, alpha: &Q, k: &Q, policy: &AnchorPolicy) -> Result<Evaluation<'g>> {
        let values = self
            .graph
            .vertices()
            .map(|v| self.extend_at(v, alpha, k, policy))
            .collect::<Result<Vec<_>>>()?;
        Evaluation::new(self.graph, self.base, values)
    }

    /// [`extend`](Self::extend) with the tightest admissible constant.
    pub fn extend_tight(&self, alpha: &Q, policy: &AnchorPolicy) -> Result<Evaluation<'g>> {
        self.extend(alpha, &self.norm.clone(), policy)
    }
}

fn check_alpha(alpha: &Q) -> Result<()> {
    if alpha.is_negative() || alpha > &Q::one() {
        return Err(Error::BadAlpha(alpha.clone()));
    }
    Ok(())
}
