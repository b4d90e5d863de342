//! Exact search for homogeneous colorings.
//!
//! [`feasible`] decides whether an `m`-homogeneous coloring exists by
//! complete backtracking, so a negative answer is a proof of nonexistence.
//! [`chi_tilde`] scans `m = 2, 3, ...` and stops at the first feasible value.
//!
//! Feasibility is not monotone in `m`: W5 has a 2-homogeneous coloring but
//! no 3-homogeneous one. The index therefore cannot be found by bisection;
//! every `m` below the answer is refuted individually.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homogeneity::{verify, EdgeColoring};
use crate::multigraph::Multigraph;

pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;
pub const DEFAULT_EXHAUSTIVE_BOUND: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Abort with [`Error::BudgetExceeded`] after this many search nodes.
    pub node_budget: Option<u64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            node_budget: Some(DEFAULT_NODE_BUDGET),
        }
    }
}

impl SolverConfig {
    pub fn with_budget(budget: u64) -> Self {
        Self {
            node_budget: Some(budget),
        }
    }

    pub fn unbounded() -> Self {
        Self { node_budget: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibilityResult {
    pub feasible: bool,
    pub witness: Option<EdgeColoring>,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiTildeResult {
    #[serde(rename = "chi_tilde")]
    pub value: usize,
    pub witness: EdgeColoring,
    /// Every `m` in `2..value`, each refuted by exhaustive search.
    #[serde(rename = "refuted")]
    pub infeasible_below: Vec<usize>,
    #[serde(rename = "nodes")]
    pub nodes_explored: u64,
}

/// Backtracking state for a single `m`.
struct Search<'g> {
    g: &'g Multigraph,
    m: usize,
    /// `q_x` and `ceil(d_x / m)` per vertex
    lo: Vec<usize>,
    hi: Vec<usize>,
    /// `counts[x * m + (k - 1)]`
    counts: Vec<usize>,
    /// unassigned incident edges
    rem: Vec<usize>,
    /// colors still owed to reach `lo` at each vertex
    deficit: Vec<usize>,
    /// per color: bounds on the final sum of counts over all vertices
    sum_min: Vec<usize>,
    sum_max: Vec<usize>,
    colors: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Multigraph, m: usize, budget: Option<u64>) -> Self {
        let n = g.vertex_count();
        let mut lo = vec![0; n + 1];
        let mut hi = vec![0; n + 1];
        let mut rem = vec![0; n + 1];
        let mut deficit = vec![0; n + 1];
        for x in 1..=n {
            let d = g.incident_ids(x).len();
            lo[x] = d / m;
            hi[x] = d.div_ceil(m);
            rem[x] = d;
            deficit[x] = m * lo[x];
        }
        let mut s = Self {
            g,
            m,
            lo,
            hi,
            counts: vec![0; (n + 1) * m],
            rem,
            deficit,
            sum_min: vec![0; m],
            sum_max: vec![0; m],
            colors: vec![0; g.edge_count()],
            nodes: 0,
            budget,
        };
        for x in 1..=n {
            s.add_sum_bounds(x, true);
        }
        s
    }

    fn add_sum_bounds(&mut self, x: usize, add: bool) {
        for k in 0..self.m {
            let c = self.counts[x * self.m + k];
            let low = c.max(self.lo[x]);
            let high = (c + self.rem[x]).min(self.hi[x]);
            if add {
                self.sum_min[k] += low;
                self.sum_max[k] += high;
            } else {
                self.sum_min[k] -= low;
                self.sum_max[k] -= high;
            }
        }
    }

    /// Add (`delta = true`) or remove one occurrence of color `k` at `x`.
    fn touch(&mut self, x: usize, k: usize, add: bool) {
        self.add_sum_bounds(x, false);
        let slot = x * self.m + k - 1;
        if add {
            if self.counts[slot] < self.lo[x] {
                self.deficit[x] -= 1;
            }
            self.counts[slot] += 1;
            self.rem[x] -= 1;
        } else {
            self.counts[slot] -= 1;
            self.rem[x] += 1;
            if self.counts[slot] < self.lo[x] {
                self.deficit[x] += 1;
            }
        }
        self.add_sum_bounds(x, true);
    }

    fn vertex_ok(&self, x: usize, k: usize) -> bool {
        self.counts[x * self.m + k - 1] <= self.hi[x] && self.deficit[x] <= self.rem[x]
    }

    /// Every color class is a set of edges, so its count summed over all
    /// vertices is even. Prune when the bounds pin that sum to an odd value
    /// or leave no even value in range.
    fn parity_ok(&self) -> bool {
        (0..self.m).all(|k| {
            let (a, b) = (self.sum_min[k], self.sum_max[k]);
            a <= b && !(a == b && a % 2 == 1)
        })
    }

    fn root_ok(&self) -> bool {
        (1..=self.g.vertex_count()).all(|x| self.deficit[x] <= self.rem[x]) && self.parity_ok()
    }

    /// Depth-first over edges in id order. `used` is the highest color
    /// introduced so far; a new color may only be `used + 1`.
    fn extend(&mut self, edge: usize, used: usize) -> Result<bool> {
        if edge == self.colors.len() {
            return Ok(true);
        }
        let e = self.g.edges()[edge];
        let (u, v) = (e.u.0, e.v.0);
        let top = (used + 1).min(self.m);
        for k in 1..=top {
            self.nodes += 1;
            if let Some(budget) = self.budget {
                if self.nodes > budget {
                    return Err(Error::BudgetExceeded { budget });
                }
            }
            self.touch(u, k, true);
            self.touch(v, k, true);
            if self.vertex_ok(u, k) && self.vertex_ok(v, k) && self.parity_ok() {
                self.colors[edge] = k;
                if self.extend(edge + 1, used.max(k))? {
                    return Ok(true);
                }
            }
            self.touch(v, k, false);
            self.touch(u, k, false);
        }
        Ok(false)
    }
}

/// Decide whether `g` has an `m`-homogeneous coloring.
pub fn feasible(g: &Multigraph, m: usize) -> Result<FeasibilityResult> {
    feasible_with(g, m, &SolverConfig::default())
}

pub fn feasible_with(g: &Multigraph, m: usize, config: &SolverConfig) -> Result<FeasibilityResult> {
    if m < 2 {
        return Err(Error::TooFewColors(m));
    }
    let mut search = Search::new(g, m, config.node_budget);
    // edge 0 is fixed to color 1 by the canonical ordering (used = 0)
    let found = search.root_ok() && search.extend(0, 0)?;
    let witness = if found {
        let c = EdgeColoring::new(m, search.colors.clone())?;
        debug_assert!(verify(g, &c).map(|r| r.ok).unwrap_or(false));
        Some(c)
    } else {
        None
    };
    Ok(FeasibilityResult {
        feasible: found,
        witness,
        nodes_explored: search.nodes,
    })
}

/// Greedy proper edge coloring in edge-id order, each edge taking the
/// smallest color free at both endpoints. Returns the colors and the number
/// of colors used.
pub fn greedy_proper_coloring(g: &Multigraph) -> (Vec<usize>, usize) {
    let mut colors = vec![0; g.edge_count()];
    let mut used = 0;
    for e in g.edges() {
        let taken: Vec<usize> = [e.u.0, e.v.0]
            .iter()
            .flat_map(|&x| g.incident_ids(x).iter().map(|&f| colors[f]))
            .collect();
        let k = (1..).find(|k| !taken.contains(k)).expect("unbounded range");
        colors[e.id] = k;
        used = used.max(k);
    }
    (colors, used)
}

/// The homogeneous chromatic index: the least `m >= 2` admitting an
/// `m`-homogeneous coloring.
pub fn chi_tilde(g: &Multigraph) -> Result<ChiTildeResult> {
    chi_tilde_with(g, &SolverConfig::default())
}

pub fn chi_tilde_with(g: &Multigraph, config: &SolverConfig) -> Result<ChiTildeResult> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    // A proper coloring is homogeneous for any m at least its color count,
    // so the scan never goes past `upper`.
    let (greedy, used) = greedy_proper_coloring(g);
    let upper = used.max(2);
    let mut refuted = Vec::new();
    let mut nodes = 0;
    for m in 2..upper {
        let remaining = config.node_budget.map(|b| b.saturating_sub(nodes));
        let r = feasible_with(
            g,
            m,
            &SolverConfig {
                node_budget: remaining,
            },
        )
        .map_err(|e| match e {
            Error::BudgetExceeded { .. } => Error::BudgetExceeded {
                budget: config.node_budget.unwrap_or(u64::MAX),
            },
            other => other,
        })?;
        nodes += r.nodes_explored;
        if let Some(witness) = r.witness {
            return Ok(ChiTildeResult {
                value: m,
                witness,
                infeasible_below: refuted,
                nodes_explored: nodes,
            });
        }
        refuted.push(m);
    }
    Ok(ChiTildeResult {
        value: upper,
        witness: EdgeColoring::new(upper, greedy)?,
        infeasible_below: refuted,
        nodes_explored: nodes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExhaustiveCheck {
    pub holds: bool,
    pub colorings_checked: u64,
    pub counterexample: Option<EdgeColoring>,
}

/// Evaluate `predicate` on every 2-coloring of `g`'s edges, stopping at the
/// first failure. Refuses graphs with more than `bound` edges.
pub fn all_colorings_property(
    g: &Multigraph,
    bound: usize,
    mut predicate: impl FnMut(&EdgeColoring) -> bool,
) -> Result<ExhaustiveCheck> {
    let edges = g.edge_count();
    if edges > bound || edges >= 64 {
        return Err(Error::ExhaustiveBoundExceeded { edges, bound });
    }
    let mut checked = 0;
    for mask in 0u64..(1u64 << edges) {
        let colors = (0..edges).map(|i| ((mask >> i) & 1) as usize + 1).collect();
        let c = EdgeColoring::new(2, colors)?;
        checked += 1;
        if !predicate(&c) {
            return Ok(ExhaustiveCheck {
                holds: false,
                colorings_checked: checked,
                counterexample: Some(c),
            });
        }
    }
    Ok(ExhaustiveCheck {
        holds: true,
        colorings_checked: checked,
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homogeneity::{count_monochromatic_vertices, is_proper};
    use crate::multigraph::{complete, cycle, path, star, wheel};

    #[test]
    fn wheel5_is_not_monotone() {
        let w5 = wheel(5).unwrap();
        let two = feasible(&w5, 2).unwrap();
        assert!(two.feasible);
        assert!(verify(&w5, two.witness.as_ref().unwrap()).unwrap().ok);
        let three = feasible(&w5, 3).unwrap();
        assert!(!three.feasible);
        assert!(three.witness.is_none());
    }

    #[test]
    fn triangle_needs_three() {
        let c3 = cycle(3).unwrap();
        assert!(!feasible(&c3, 2).unwrap().feasible);
        let r = chi_tilde(&c3).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.infeasible_below, vec![2]);
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = path(3).unwrap();
        assert_eq!(feasible(&g, 1), Err(Error::TooFewColors(1)));
        let empty = Multigraph::from_pairs(3, &[]).unwrap();
        assert_eq!(chi_tilde(&empty), Err(Error::EmptyGraph));
    }

    #[test]
    fn first_edge_gets_color_one() {
        let g = complete(6, 1).unwrap();
        let r = feasible(&g, 2).unwrap();
        assert_eq!(r.witness.unwrap().color(0), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let g = complete(7, 1).unwrap();
        let r = feasible_with(&g, 3, &SolverConfig::with_budget(3));
        assert_eq!(r, Err(Error::BudgetExceeded { budget: 3 }));
    }

    #[test]
    fn deterministic_witness() {
        let g = wheel(7).unwrap();
        assert_eq!(chi_tilde(&g).unwrap(), chi_tilde(&g).unwrap());
    }

    #[test]
    fn greedy_is_proper() {
        for g in [complete(6, 1).unwrap(), wheel(8).unwrap(), star(5).unwrap()] {
            let (colors, used) = greedy_proper_coloring(&g);
            let c = EdgeColoring::new(used.max(2), colors).unwrap();
            assert!(is_proper(&g, &c).unwrap());
            assert!(verify(&g, &c).unwrap().ok);
        }
    }

    #[test]
    fn odd_cycles_have_odd_monochromatic_count() {
        let g = cycle(5).unwrap();
        let r = all_colorings_property(&g, DEFAULT_EXHAUSTIVE_BOUND, |c| {
            count_monochromatic_vertices(&g, c).unwrap() % 2 == 1
        })
        .unwrap();
        assert!(r.holds);
        assert_eq!(r.colorings_checked, 32);

        let g = cycle(4).unwrap();
        let r = all_colorings_property(&g, DEFAULT_EXHAUSTIVE_BOUND, |c| {
            count_monochromatic_vertices(&g, c).unwrap() % 2 == 1
        })
        .unwrap();
        assert!(!r.holds);

        let big = cycle(17).unwrap();
        assert!(matches!(
            all_colorings_property(&big, DEFAULT_EXHAUSTIVE_BOUND, |_| true),
            Err(Error::ExhaustiveBoundExceeded {
                edges: 17,
                bound: 16
            })
        ));
    }
}
