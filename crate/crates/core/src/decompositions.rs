//! Hamiltonian cycle decompositions of K_n for odd n.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// `(n - 1) / 2` edge-disjoint Hamiltonian cycles covering K_n, each given as
/// a vertex sequence of length `n` (the closing edge is implicit).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamiltonianDecomposition {
    pub n: usize,
    pub cycles: Vec<Vec<usize>>,
}

impl HamiltonianDecomposition {
    /// Edges of cycle `index` in traversal order, as unordered pairs with the
    /// smaller label first.
    pub fn cycle_edges(&self, index: usize) -> Vec<(usize, usize)> {
        cycle_edges(&self.cycles[index])
    }
}

pub(crate) fn cycle_edges(seq: &[usize]) -> Vec<(usize, usize)> {
    (0..seq.len())
        .map(|i| {
            let (a, b) = (seq[i], seq[(i + 1) % seq.len()]);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// Walecki's construction.
///
/// Points `0..n-1` sit on a circle and `n` is the fixed centre. The base
/// cycle zig-zags across the circle, `0, 1, -1, 2, -2, ...`, and returns
/// through the centre. Rotating it by `k = 0..(n-3)/2` gives the remaining
/// cycles. Point `p` is labelled `p + 1`.
pub fn walecki_decompose(n: usize) -> Result<HamiltonianDecomposition> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(invalid(format!(
            "Hamiltonian decomposition needs odd n >= 3, got {n}"
        )));
    }
    let ring = n - 1;
    let half = ring / 2;
    let zigzag: Vec<usize> = (0..ring)
        .map(|t| {
            if t % 2 == 1 {
                t.div_ceil(2)
            } else {
                (ring - t / 2) % ring
            }
        })
        .collect();
    let cycles = (0..half)
        .map(|k| {
            zigzag
                .iter()
                .map(|&p| (p + k) % ring + 1)
                .chain([n])
                .collect()
        })
        .collect();
    Ok(HamiltonianDecomposition { n, cycles })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionDefect {
    BadOrder(usize),
    WrongCycleCount { expected: usize, found: usize },
    NotHamiltonian { cycle: usize },
    RepeatedEdge { cycle: usize, edge: (usize, usize) },
    MissingEdges(usize),
}

impl fmt::Display for DecompositionDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BadOrder(n) => write!(f, "order {n} is not an odd integer >= 3"),
            Self::WrongCycleCount { expected, found } => {
                write!(f, "expected {expected} cycles, found {found}")
            }
            Self::NotHamiltonian { cycle } => {
                write!(f, "cycle {cycle} does not visit every vertex exactly once")
            }
            Self::RepeatedEdge { cycle, edge } => {
                write!(
                    f,
                    "edge {{x{}, x{}}} reused in cycle {cycle}",
                    edge.0, edge.1
                )
            }
            Self::MissingEdges(k) => write!(f, "{k} edges of K_n are not covered"),
        }
    }
}

/// Check Hamiltonicity, edge-disjointness and coverage, reporting the first
/// defect found.
pub fn check_decomposition(
    d: &HamiltonianDecomposition,
) -> std::result::Result<(), DecompositionDefect> {
    let n = d.n;
    if n < 3 || n.is_multiple_of(2) {
        return Err(DecompositionDefect::BadOrder(n));
    }
    let expected = (n - 1) / 2;
    if d.cycles.len() != expected {
        return Err(DecompositionDefect::WrongCycleCount {
            expected,
            found: d.cycles.len(),
        });
    }
    let mut used = HashSet::with_capacity(n * (n - 1) / 2);
    for (i, seq) in d.cycles.iter().enumerate() {
        let mut seen = vec![false; n + 1];
        let hamiltonian = seq.len() == n
            && seq
                .iter()
                .all(|&x| (1..=n).contains(&x) && !std::mem::replace(&mut seen[x], true));
        if !hamiltonian {
            return Err(DecompositionDefect::NotHamiltonian { cycle: i });
        }
        for edge in cycle_edges(seq) {
            if !used.insert(edge) {
                return Err(DecompositionDefect::RepeatedEdge { cycle: i, edge });
            }
        }
    }
    let total = n * (n - 1) / 2;
    if used.len() != total {
        return Err(DecompositionDefect::MissingEdges(total - used.len()));
    }
    Ok(())
}

pub fn verify_decomposition(d: &HamiltonianDecomposition) -> bool {
    check_decomposition(d).is_ok()
}
