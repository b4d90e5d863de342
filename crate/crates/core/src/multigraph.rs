//! Loopless multigraphs and generators for the families studied here.
//!
//! Vertices are 1-based (`x1..xn`). Parallel edges are distinct [`Edge`]
//! values told apart by their `copy` counter, so a coloring can address
//! every copy individually.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A 1-based vertex label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub id: usize,
    pub u: VertexId,
    pub v: VertexId,
    pub copy: usize,
}

impl Edge {
    /// Endpoints as an unordered pair, smaller label first.
    pub fn key(&self) -> (usize, usize) {
        let (a, b) = (self.u.0, self.v.0);
        if a < b {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Complete,
    CompleteBipartite,
    Path,
    Cycle,
    Star,
    Wheel,
    Tree,
    Custom,
}

/// Which generator produced a graph, and with what parameters.
///
/// Parameter layouts: `Complete` is `[n, lambda]`, `CompleteBipartite` is
/// `[m, n, lambda]`, `Tree` is `[n, seed]`, the simple families are `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: Vec<usize>) -> Self {
        Self { kind, params }
    }

    /// Regenerate the graph this spec describes. `Custom` cannot be rebuilt.
    pub fn generate(&self) -> Result<Multigraph> {
        let p = &self.params;
        let need = |k: usize| -> Result<()> {
            if p.len() == k {
                Ok(())
            } else {
                Err(invalid(format!(
                    "family {:?} takes {k} parameters, got {}",
                    self.kind,
                    p.len()
                )))
            }
        };
        match self.kind {
            FamilyKind::Complete => {
                need(2)?;
                complete(p[0], p[1])
            }
            FamilyKind::CompleteBipartite => {
                need(3)?;
                complete_bipartite(p[0], p[1], p[2])
            }
            FamilyKind::Path => {
                need(1)?;
                path(p[0])
            }
            FamilyKind::Cycle => {
                need(1)?;
                cycle(p[0])
            }
            FamilyKind::Star => {
                need(1)?;
                star(p[0])
            }
            FamilyKind::Wheel => {
                need(1)?;
                wheel(p[0])
            }
            FamilyKind::Tree => {
                need(2)?;
                random_tree(p[0], p[1] as u64)
            }
            FamilyKind::Custom => Err(invalid("custom graphs cannot be regenerated")),
        }
    }
}

/// Loopless multigraph on vertices `1..=n` with densely numbered edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
    family: Option<FamilySpec>,
    /// incident edge ids per vertex, index 0 unused
    incidence: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<Edge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<FamilySpec>,
}

impl TryFrom<RawGraph> for Multigraph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Multigraph::from_raw_edges(raw.n, raw.edges, raw.family)
    }
}

impl From<Multigraph> for RawGraph {
    fn from(g: Multigraph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges,
            family: g.family,
        }
    }
}

impl Multigraph {
    fn from_raw_edges(n: usize, edges: Vec<Edge>, family: Option<FamilySpec>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut incidence = vec![Vec::new(); n + 1];
        for (i, e) in edges.iter().enumerate() {
            if e.id != i {
                return Err(Error::InvalidGraph(format!(
                    "edge ids must be 0..{} in order, found {} at position {i}",
                    edges.len(),
                    e.id
                )));
            }
            for x in [e.u, e.v] {
                if x.0 == 0 || x.0 > n {
                    return Err(Error::InvalidGraph(format!(
                        "edge {i} uses vertex {} outside 1..={n}",
                        x.0
                    )));
                }
            }
            if e.u == e.v {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} is a loop at {}",
                    e.u
                )));
            }
            let (a, b) = e.key();
            if !seen.insert((a, b, e.copy)) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {{x{a}, x{b}}} copy {}",
                    e.copy
                )));
            }
            incidence[e.u.0].push(i);
            incidence[e.v.0].push(i);
        }
        Ok(Self {
            n,
            edges,
            family,
            incidence,
        })
    }

    /// Build a graph from unordered vertex pairs. Repeated pairs become
    /// parallel edges with increasing `copy`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut copies: HashMap<(usize, usize), usize> = HashMap::new();
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(id, &(u, v))| {
                let key = if u < v { (u, v) } else { (v, u) };
                let c = copies.entry(key).or_insert(0);
                let copy = *c;
                *c += 1;
                Edge {
                    id,
                    u: VertexId(u),
                    v: VertexId(v),
                    copy,
                }
            })
            .collect();
        Self::from_raw_edges(n, edges, Some(FamilySpec::new(FamilyKind::Custom, vec![])))
    }

    fn build(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize, usize)>,
        family: FamilySpec,
    ) -> Self {
        let edges = pairs
            .into_iter()
            .enumerate()
            .map(|(id, (u, v, copy))| Edge {
                id,
                u: VertexId(u),
                v: VertexId(v),
                copy,
            })
            .collect();
        Self::from_raw_edges(n, edges, Some(family)).expect("generator produced an invalid graph")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Option<&Edge> {
        self.edges.get(id)
    }

    pub fn family(&self) -> Option<&FamilySpec> {
        self.family.as_ref()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=self.n).map(VertexId)
    }

    fn check_vertex(&self, x: VertexId) -> Result<()> {
        if x.0 == 0 || x.0 > self.n {
            Err(Error::UnknownVertex(x.0))
        } else {
            Ok(())
        }
    }

    /// |E(x)|, parallel edges counted separately.
    pub fn degree(&self, x: VertexId) -> Result<usize> {
        self.check_vertex(x)?;
        Ok(self.incidence[x.0].len())
    }

    /// E(x), ordered by edge id.
    pub fn incident_edges(&self, x: VertexId) -> Result<Vec<Edge>> {
        self.check_vertex(x)?;
        Ok(self.incidence[x.0].iter().map(|&i| self.edges[i]).collect())
    }

    pub(crate) fn incident_ids(&self, x: usize) -> &[usize] {
        &self.incidence[x]
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Whether all vertices with at least one edge lie in one component.
    pub fn is_connected_ignoring_isolated(&self) -> bool {
        let Some(start) = (1..=self.n).find(|&x| !self.incidence[x].is_empty()) else {
            return true;
        };
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(x) = stack.pop() {
            for &e in &self.incidence[x] {
                let y = self.edges[e].other(VertexId(x)).0;
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (1..=self.n).all(|x| seen[x] || self.incidence[x].is_empty())
    }

    pub fn is_eulerian(&self) -> bool {
        self.incidence.iter().all(|inc| inc.len() % 2 == 0) && self.is_connected_ignoring_isolated()
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 2
            && self.edges.len() == self.n - 1
            && self.incidence[1..].iter().all(|inc| !inc.is_empty())
            && self.is_connected_ignoring_isolated()
    }

    /// Whether the graph is exactly one cycle through all `n >= 3` vertices.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3
            && self.edges.len() == self.n
            && self.incidence[1..].iter().all(|inc| inc.len() == 2)
            && self.is_connected_ignoring_isolated()
    }
}

/// Free-function form of [`Multigraph::degree`].
pub fn degree(g: &Multigraph, x: VertexId) -> Result<usize> {
    g.degree(x)
}

/// Free-function form of [`Multigraph::incident_edges`].
pub fn incident_edges(g: &Multigraph, x: VertexId) -> Result<Vec<Edge>> {
    g.incident_edges(x)
}

/// Connected (ignoring isolated vertices) with every degree even.
pub fn is_eulerian(g: &Multigraph) -> bool {
    g.is_eulerian()
}

/// `lambda` parallel copies of every edge of K_n. Edges are numbered copy by
/// copy, pairs in lexicographic order within a copy.
pub fn complete(n: usize, lambda: usize) -> Result<Multigraph> {
    if n < 2 {
        return Err(invalid(format!("complete graph needs n >= 2, got {n}")));
    }
    if lambda < 1 {
        return Err(invalid("lambda must be at least 1"));
    }
    let pairs = (0..lambda)
        .flat_map(move |c| (1..n).flat_map(move |i| ((i + 1)..=n).map(move |j| (i, j, c))));
    Ok(Multigraph::build(
        n,
        pairs,
        FamilySpec::new(FamilyKind::Complete, vec![n, lambda]),
    ))
}

/// `lambda`-fold K_{m,n}: parts `1..=m` and `m+1..=m+n`.
pub fn complete_bipartite(m: usize, n: usize, lambda: usize) -> Result<Multigraph> {
    if m < 1 || n < 1 || lambda < 1 {
        return Err(invalid(format!(
            "complete bipartite graph needs m, n, lambda >= 1, got {m}, {n}, {lambda}"
        )));
    }
    let pairs = (0..lambda)
        .flat_map(move |c| (1..=m).flat_map(move |i| (1..=n).map(move |j| (i, m + j, c))));
    Ok(Multigraph::build(
        m + n,
        pairs,
        FamilySpec::new(FamilyKind::CompleteBipartite, vec![m, n, lambda]),
    ))
}

/// P_n: edges {x_i, x_{i+1}}.
pub fn path(n: usize) -> Result<Multigraph> {
    if n < 2 {
        return Err(invalid(format!("path needs n >= 2, got {n}")));
    }
    Ok(Multigraph::build(
        n,
        (1..n).map(|i| (i, i + 1, 0)),
        FamilySpec::new(FamilyKind::Path, vec![n]),
    ))
}

/// C_n: the path plus the closing edge {x_n, x_1}.
pub fn cycle(n: usize) -> Result<Multigraph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(Multigraph::build(
        n,
        (1..n).map(|i| (i, i + 1, 0)).chain([(n, 1, 0)]),
        FamilySpec::new(FamilyKind::Cycle, vec![n]),
    ))
}

/// S_n: hub x1 joined to n leaves x2..x_{n+1}.
pub fn star(n: usize) -> Result<Multigraph> {
    if n < 1 {
        return Err(invalid("star needs at least one leaf"));
    }
    Ok(Multigraph::build(
        n + 1,
        (2..=n + 1).map(|i| (1, i, 0)),
        FamilySpec::new(FamilyKind::Star, vec![n]),
    ))
}

/// W_n: hub x1, rim cycle x2..x_n. Spokes first, then rim edges
/// {x_i, x_{i+1}} for i = 2..n-1, then the closing edge {x_n, x_2}.
pub fn wheel(n: usize) -> Result<Multigraph> {
    if n < 4 {
        return Err(invalid(format!("wheel needs n >= 4, got {n}")));
    }
    let spokes = (2..=n).map(|i| (1, i, 0));
    let rim = (2..n).map(|i| (i, i + 1, 0)).chain([(n, 2, 0)]);
    Ok(Multigraph::build(
        n,
        spokes.chain(rim),
        FamilySpec::new(FamilyKind::Wheel, vec![n]),
    ))
}

/// Random labelled tree on `n` vertices, decoded from a seeded Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Multigraph> {
    if n < 2 {
        return Err(invalid(format!("tree needs n >= 2, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
    let pairs = prufer_decode(n, &code);
    Ok(Multigraph::build(
        n,
        pairs.into_iter().map(|(u, v)| (u, v, 0)),
        FamilySpec::new(FamilyKind::Tree, vec![n, seed as usize]),
    ))
}

fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut remaining = vec![1usize; n + 1];
    for &x in code {
        remaining[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (1..=n).filter(|&x| remaining[x] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in code {
        let leaf = leaves
            .pop_first()
            .expect("Prüfer decoding always has a leaf");
        edges.push((leaf.min(x), leaf.max(x)));
        remaining[x] -= 1;
        if remaining[x] == 1 {
            leaves.insert(x);
        }
    }
    let a = leaves.pop_first().expect("two leaves remain");
    let b = leaves.pop_first().expect("two leaves remain");
    edges.push((a, b));
    edges
}

/// Random connected eulerian multigraph traced as a closed walk of
/// `edge_count` steps over at most `max_vertices` vertices. Vertices are
/// relabelled in order of first visit, so none is isolated.
pub fn random_eulerian(max_vertices: usize, edge_count: usize, seed: u64) -> Result<Multigraph> {
    if edge_count < 2 {
        return Err(invalid("a closed walk needs at least 2 edges"));
    }
    if max_vertices < 2 || (edge_count > 2 && max_vertices < 3) {
        return Err(invalid("too few vertices for a loopless closed walk"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut walk = vec![1usize];
    for step in 1..edge_count {
        let prev = walk[step - 1];
        let last = step == edge_count - 1;
        let next = loop {
            let y = rng.gen_range(1..=max_vertices);
            if y != prev && !(last && y == walk[0]) {
                break y;
            }
        };
        walk.push(next);
    }
    let mut label = HashMap::new();
    for &x in &walk {
        let next = label.len() + 1;
        label.entry(x).or_insert(next);
    }
    let pairs: Vec<(usize, usize)> = (0..edge_count)
        .map(|i| (label[&walk[i]], label[&walk[(i + 1) % edge_count]]))
        .collect();
    let mut g = Multigraph::from_pairs(label.len(), &pairs)?;
    g.family = Some(FamilySpec::new(
        FamilyKind::Custom,
        vec![max_vertices, edge_count, seed as usize],
    ));
    Ok(g)
}
