//! Closed-form homogeneous colorings for the families with a known index.
//!
//! Each constructor returns the coloring of the graph built by the matching
//! generator in [`crate::multigraph`] (for example `color_complete_even(n)`
//! colors `complete(n, 1)`), tagged with the result it realizes.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::decompositions::{cycle_edges, walecki_decompose};
use crate::error::{invalid, Error, Result};
use crate::homogeneity::EdgeColoring;
use crate::multigraph::{self, Multigraph, VertexId};
use crate::solver;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// K_n, n even: parity of i + j.
    CompleteEven,
    /// K_n, n = 1 mod 4.
    CompleteOneModFour,
    /// K_n, n = 3 mod 4, three colors.
    CompleteThreeModFour,
    /// lambda-fold K_n.
    LambdaComplete,
    Tree,
    /// lambda-fold K_{m,n}.
    CompleteBipartite,
    Wheel,
    Path,
    Cycle,
    /// Delta/2 colors on an eulerian graph.
    Eulerian,
}

impl Theorem {
    pub const ALL: [Theorem; 10] = [
        Theorem::CompleteEven,
        Theorem::CompleteOneModFour,
        Theorem::CompleteThreeModFour,
        Theorem::LambdaComplete,
        Theorem::Tree,
        Theorem::CompleteBipartite,
        Theorem::Wheel,
        Theorem::Path,
        Theorem::Cycle,
        Theorem::Eulerian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::CompleteEven => "complete-even",
            Theorem::CompleteOneModFour => "complete-1mod4",
            Theorem::CompleteThreeModFour => "complete-3mod4",
            Theorem::LambdaComplete => "lambda-complete",
            Theorem::Tree => "tree",
            Theorem::CompleteBipartite => "complete-bipartite",
            Theorem::Wheel => "wheel",
            Theorem::Path => "path",
            Theorem::Cycle => "cycle",
            Theorem::Eulerian => "eulerian",
        }
    }
}

impl Serialize for Theorem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| invalid(format!("unknown theorem '{s}'")))
    }
}

/// Which of several alternative colorings a theorem offers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// The only coloring on offer.
    Standard,
    /// Whole cycles of a Hamiltonian decomposition get one color each.
    Cycles,
    /// Color by cyclic distance between labels.
    Circulant,
    /// Color by label residues mod 3.
    Residue,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Standard => "standard",
            Variant::Cycles => "cycles",
            Variant::Circulant => "circulant",
            Variant::Residue => "residue",
        }
    }
}

impl Serialize for Variant {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Variant::Standard,
            Variant::Cycles,
            Variant::Circulant,
            Variant::Residue,
        ]
        .into_iter()
        .find(|v| v.name() == s)
        .ok_or_else(|| invalid(format!("unknown variant '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionResult {
    #[serde(flatten)]
    pub coloring: EdgeColoring,
    pub theorem: Theorem,
    pub variant: Variant,
}

impl ConstructionResult {
    fn new(coloring: EdgeColoring, theorem: Theorem, variant: Variant) -> Self {
        Self {
            coloring,
            theorem,
            variant,
        }
    }
}

/// Symmetric color table over the pairs of K_n.
struct PairColors {
    n: usize,
    m: usize,
    table: Vec<usize>,
}

impl PairColors {
    fn from_fn(n: usize, m: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = vec![0; (n + 1) * (n + 1)];
        for i in 1..=n {
            for j in (i + 1)..=n {
                let c = f(i, j);
                table[i * (n + 1) + j] = c;
                table[j * (n + 1) + i] = c;
            }
        }
        Self { n, m, table }
    }

    fn from_cycles(n: usize, m: usize, cycles: &[(Vec<usize>, Vec<usize>)]) -> Self {
        let mut table = vec![0; (n + 1) * (n + 1)];
        for (seq, colors) in cycles {
            for ((a, b), &c) in cycle_edges(seq).into_iter().zip(colors) {
                table[a * (n + 1) + b] = c;
                table[b * (n + 1) + a] = c;
            }
        }
        Self { n, m, table }
    }

    fn get(&self, i: usize, j: usize) -> usize {
        self.table[i * (self.n + 1) + j]
    }

    fn coloring(&self, g: &Multigraph) -> Result<EdgeColoring> {
        EdgeColoring::from_fn(g, self.m, |e| self.get(e.u.0, e.v.0))
    }
}

fn cyclic_distance(i: usize, j: usize, n: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(n - d)
}

/// 1 when `i + j` is odd, 2 otherwise.
fn parity_rule(i: usize, j: usize) -> usize {
    if (i + j) % 2 == 1 {
        1
    } else {
        2
    }
}

/// 1, 2, 3 for `i + j` congruent to 2, 1, 0 mod 3.
fn residue_rule(i: usize, j: usize) -> usize {
    match (i + j) % 3 {
        2 => 1,
        1 => 2,
        _ => 3,
    }
}

fn swap12(c: usize) -> usize {
    3 - c
}

/// Whole-cycle coloring: cycle `k` of the Walecki decomposition gets
/// `colors_of_cycle(k)` on every edge.
fn cycle_blocks(n: usize, m: usize, color_of_cycle: impl Fn(usize) -> usize) -> Result<PairColors> {
    let d = walecki_decompose(n)?;
    let cycles: Vec<_> = d
        .cycles
        .into_iter()
        .enumerate()
        .map(|(k, seq)| {
            let c = color_of_cycle(k);
            (seq, vec![c; n])
        })
        .collect();
    Ok(PairColors::from_cycles(n, m, &cycles))
}

fn check_complete_order(n: usize, residue: usize, min: usize) -> Result<()> {
    if n < min || n % 4 != residue {
        return Err(invalid(format!(
            "n = {n} must satisfy n >= {min} and n = {residue} mod 4"
        )));
    }
    Ok(())
}

/// Variants available for K_n with n = 1 mod 4.
pub fn variants_1mod4() -> &'static [Variant] {
    &[Variant::Cycles, Variant::Circulant]
}

/// Variants available for K_n with n = 3 mod 4, by subcase n mod 12.
pub fn variants_3mod4(n: usize) -> &'static [Variant] {
    match n % 12 {
        7 => &[Variant::Cycles, Variant::Circulant],
        11 => &[Variant::Residue],
        3 if n >= 7 => &[Variant::Cycles, Variant::Residue],
        3 => &[Variant::Residue],
        _ => &[],
    }
}

/// The formula-based coloring for each n = 3 mod 4 subcase.
pub fn default_variant_3mod4(n: usize) -> Variant {
    if n % 12 == 7 {
        Variant::Circulant
    } else {
        Variant::Residue
    }
}

fn pairs_even(n: usize) -> PairColors {
    PairColors::from_fn(n, 2, parity_rule)
}

fn pairs_1mod4(n: usize, variant: Variant) -> Result<PairColors> {
    match variant {
        Variant::Cycles => {
            let quarter = (n - 1) / 4;
            cycle_blocks(n, 2, |k| if k < quarter { 1 } else { 2 })
        }
        Variant::Circulant => {
            let h = (n - 1) / 4;
            Ok(PairColors::from_fn(n, 2, |i, j| {
                if cyclic_distance(i, j, n) <= h {
                    1
                } else {
                    2
                }
            }))
        }
        other => Err(invalid(format!(
            "variant '{other}' is not available for n = 1 mod 4"
        ))),
    }
}

fn pairs_3mod4(n: usize, variant: Variant) -> Result<PairColors> {
    if !variants_3mod4(n).contains(&variant) {
        return Err(invalid(format!(
            "variant '{variant}' is not available for n = {n} (n mod 12 = {})",
            n % 12
        )));
    }
    match (n % 12, variant) {
        (7, Variant::Cycles) => {
            let per_color = (n - 1) / 6;
            cycle_blocks(n, 3, |k| k / per_color + 1)
        }
        (7, Variant::Circulant) => {
            let h = (n - 7) / 12;
            Ok(PairColors::from_fn(n, 3, |i, j| {
                let d = cyclic_distance(i, j, n);
                if d <= 2 * h + 1 {
                    1
                } else if d <= 4 * h + 2 {
                    2
                } else {
                    3
                }
            }))
        }
        (11, _) => Ok(PairColors::from_fn(n, 3, |i, j| {
            // i < j, so only j can be the special vertex x_n
            if j == n {
                match i % 3 {
                    1 => 1,
                    2 => 2,
                    _ => 3,
                }
            } else {
                residue_rule(i, j)
            }
        })),
        (3, Variant::Residue) => Ok(PairColors::from_fn(n, 3, residue_rule)),
        (3, Variant::Cycles) => {
            let h = (n - 3) / 12;
            let d = walecki_decompose(n)?;
            let last = d.cycles.len() - 1;
            let cycles: Vec<_> = d
                .cycles
                .into_iter()
                .enumerate()
                .map(|(k, seq)| {
                    if k < last {
                        let c = k / (2 * h) + 1;
                        (seq, vec![c; n])
                    } else {
                        // start at the lowest label, then 1,2,...,1,2,3
                        let start = seq.iter().position(|&x| x == 1).unwrap_or(0);
                        let mut rotated = seq[start..].to_vec();
                        rotated.extend_from_slice(&seq[..start]);
                        let colors = (0..n)
                            .map(|t| if t == n - 1 { 3 } else { t % 2 + 1 })
                            .collect();
                        (rotated, colors)
                    }
                })
                .collect();
            Ok(PairColors::from_cycles(n, 3, &cycles))
        }
        _ => unreachable!("variant checked above"),
    }
}

/// K_n, n >= 4 even: color 1 when `i + j` is odd, 2 otherwise.
pub fn color_complete_even(n: usize) -> Result<ConstructionResult> {
    if n < 4 || n % 2 == 1 {
        return Err(invalid(format!("n = {n} must be even and at least 4")));
    }
    let g = multigraph::complete(n, 1)?;
    Ok(ConstructionResult::new(
        pairs_even(n).coloring(&g)?,
        Theorem::CompleteEven,
        Variant::Standard,
    ))
}

/// K_n, n = 1 mod 4, two colors with `(n-1)/2` of each at every vertex.
pub fn color_complete_1mod4(n: usize, variant: Variant) -> Result<ConstructionResult> {
    check_complete_order(n, 1, 5)?;
    let g = multigraph::complete(n, 1)?;
    Ok(ConstructionResult::new(
        pairs_1mod4(n, variant)?.coloring(&g)?,
        Theorem::CompleteOneModFour,
        variant,
    ))
}

/// K_n, n = 3 mod 4, three colors. The available variants depend on
/// `n mod 12`; see [`variants_3mod4`].
pub fn color_complete_3mod4(n: usize, variant: Variant) -> Result<ConstructionResult> {
    check_complete_order(n, 3, 3)?;
    let g = multigraph::complete(n, 1)?;
    Ok(ConstructionResult::new(
        pairs_3mod4(n, variant)?.coloring(&g)?,
        Theorem::CompleteThreeModFour,
        variant,
    ))
}

/// lambda-fold K_n with the default single-copy colorings.
pub fn color_lambda_complete(n: usize, lambda: usize) -> Result<ConstructionResult> {
    color_lambda_complete_with(n, lambda, None)
}

/// lambda-fold K_n. `variant` picks the single-copy coloring for odd `n`
/// where there is a choice; `None` takes the formula-based one.
///
/// Copies are distributed by copy index:
/// - n even: odd copies get the parity coloring, even copies its 1/2 swap;
/// - n = 1 mod 4: every copy gets the same coloring;
/// - n = 3 mod 4, lambda even: even copies all 1, odd copies all 2;
/// - n = 3 mod 4, lambda odd: copy `t` gets `c`, `c` under (1 3 2), or `c`
///   under (1 2 3) for `t mod 3 = 0, 1, 2`, except n = 7 mod 12 where `c`
///   is already balanced and used for every copy.
pub fn color_lambda_complete_with(
    n: usize,
    lambda: usize,
    variant: Option<Variant>,
) -> Result<ConstructionResult> {
    let g = multigraph::complete(n, lambda)?;
    let (coloring, variant) = if n.is_multiple_of(2) {
        let base = pairs_even(n);
        let c = EdgeColoring::from_fn(&g, 2, |e| {
            let k = base.get(e.u.0, e.v.0);
            if e.copy % 2 == 0 {
                swap12(k)
            } else {
                k
            }
        })?;
        (c, Variant::Standard)
    } else if n % 4 == 1 {
        let variant = variant.unwrap_or(Variant::Circulant);
        let base = pairs_1mod4(n, variant)?;
        (base.coloring(&g)?, variant)
    } else if lambda.is_multiple_of(2) {
        let c = EdgeColoring::from_fn(&g, 2, |e| e.copy % 2 + 1)?;
        (c, Variant::Standard)
    } else {
        let variant = variant.unwrap_or_else(|| default_variant_3mod4(n));
        let base = pairs_3mod4(n, variant)?;
        // (1 3 2): 1->3->2->1 and (1 2 3): 1->2->3->1
        const P132: [usize; 3] = [3, 1, 2];
        const P123: [usize; 3] = [2, 3, 1];
        let rotate = n % 12 != 7;
        let c = EdgeColoring::from_fn(&g, 3, |e| {
            let k = base.get(e.u.0, e.v.0);
            match (rotate, e.copy % 3) {
                (true, 1) => P132[k - 1],
                (true, 2) => P123[k - 1],
                _ => k,
            }
        })?;
        (c, variant)
    };
    Ok(ConstructionResult::new(
        coloring,
        Theorem::LambdaComplete,
        variant,
    ))
}

/// Two colors on a tree, following the pendant-vertex induction: strip
/// leaves until a single edge is left, color it 1, then re-attach leaves in
/// reverse order, giving each restored edge the color that is rarer at its
/// inner endpoint (1 on ties).
pub fn color_tree(g: &Multigraph) -> Result<ConstructionResult> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..=n)
        .map(|x| if x == 0 { 0 } else { g.incident_ids(x).len() })
        .collect();
    let mut removed = vec![false; g.edge_count()];
    let mut leaves: BTreeSet<usize> = (1..=n).filter(|&x| degree[x] == 1).collect();
    let mut stack = Vec::with_capacity(n);
    let mut alive = n;
    while alive > 2 {
        let leaf = leaves
            .pop_first()
            .expect("a tree with 3+ vertices has a leaf");
        let e = *g
            .incident_ids(leaf)
            .iter()
            .find(|&&e| !removed[e])
            .expect("leaf keeps one edge");
        removed[e] = true;
        let inner = g.edges()[e].other(VertexId(leaf)).0;
        degree[leaf] = 0;
        degree[inner] -= 1;
        if degree[inner] == 1 {
            leaves.insert(inner);
        }
        stack.push((e, inner));
        alive -= 1;
    }
    let base = (0..g.edge_count())
        .find(|&e| !removed[e])
        .expect("one edge remains");
    let mut colors = vec![0; g.edge_count()];
    let mut counts = vec![[0usize; 2]; n + 1];
    let mut paint = |e: usize, c: usize, counts: &mut Vec<[usize; 2]>| {
        colors[e] = c;
        let edge = g.edges()[e];
        counts[edge.u.0][c - 1] += 1;
        counts[edge.v.0][c - 1] += 1;
    };
    paint(base, 1, &mut counts);
    while let Some((e, inner)) = stack.pop() {
        let [ones, twos] = counts[inner];
        let c = if twos < ones { 2 } else { 1 };
        paint(e, c, &mut counts);
    }
    Ok(ConstructionResult::new(
        EdgeColoring::new(2, colors)?,
        Theorem::Tree,
        Variant::Standard,
    ))
}

/// lambda-fold K_{m,n}: color 1 when `i + j` is even, with `i`, `j` counted
/// within their parts. Even copies use this coloring, odd copies its swap.
pub fn color_complete_bipartite(
    m_part: usize,
    n_part: usize,
    lambda: usize,
) -> Result<ConstructionResult> {
    let g = multigraph::complete_bipartite(m_part, n_part, lambda)?;
    let c = EdgeColoring::from_fn(&g, 2, |e| {
        let (a, b) = e.key();
        let (i, j) = (a, b - m_part);
        let k = if (i + j) % 2 == 0 { 1 } else { 2 };
        if e.copy % 2 == 0 {
            k
        } else {
            swap12(k)
        }
    })?;
    Ok(ConstructionResult::new(
        c,
        Theorem::CompleteBipartite,
        Variant::Standard,
    ))
}

/// W_n with hub x1. Spoke {x1, x_i} is 1 for even i; rim edge
/// {x_i, x_{i+1}} is 1 for odd i; the closing edge {x_n, x_2} is 1 for odd n.
pub fn color_wheel(n: usize) -> Result<ConstructionResult> {
    let g = multigraph::wheel(n)?;
    let c = EdgeColoring::from_fn(&g, 2, |e| {
        let (a, b) = e.key();
        let bit = if a == 1 {
            b % 2 == 0
        } else if (a, b) == (2, n) {
            // x_n already sees its spoke and {x_{n-1}, x_n} in one color
            n % 2 == 1
        } else {
            a % 2 == 1
        };
        if bit {
            1
        } else {
            2
        }
    })?;
    Ok(ConstructionResult::new(
        c,
        Theorem::Wheel,
        Variant::Standard,
    ))
}

/// P_n colored 1, 2, 1, 2, ... along the path.
pub fn color_path(n: usize) -> Result<ConstructionResult> {
    let g = multigraph::path(n)?;
    let c = EdgeColoring::from_fn(&g, 2, |e| e.id % 2 + 1)?;
    Ok(ConstructionResult::new(c, Theorem::Path, Variant::Standard))
}

/// C_n alternating for even n; for odd n three colors, 1, 2, ..., 1, 2, 3.
pub fn color_cycle(n: usize) -> Result<ConstructionResult> {
    let g = multigraph::cycle(n)?;
    let c = if n.is_multiple_of(2) {
        EdgeColoring::from_fn(&g, 2, |e| e.id % 2 + 1)?
    } else {
        EdgeColoring::from_fn(&g, 3, |e| if e.id == n - 1 { 3 } else { e.id % 2 + 1 })?
    };
    Ok(ConstructionResult::new(
        c,
        Theorem::Cycle,
        Variant::Standard,
    ))
}

/// A `Delta/2`-homogeneous coloring of an eulerian graph, found by the exact
/// solver. Requires `Delta >= 4` so that at least two colors are used.
///
/// Not every eulerian graph has one. Each color class contributes an even
/// total to the per-vertex counts, so when the balanced counts are forced
/// and sum to an odd number no coloring exists: three triangles chained at
/// shared vertices (degrees 2,2,4,2,4,2,2) is the smallest simple example.
/// Such inputs return [`Error::NoHomogeneousColoring`].
pub fn color_eulerian(g: &Multigraph) -> Result<ConstructionResult> {
    color_eulerian_with(g, &solver::SolverConfig::default())
}

pub fn color_eulerian_with(
    g: &Multigraph,
    config: &solver::SolverConfig,
) -> Result<ConstructionResult> {
    if !g.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    let delta = g.max_degree();
    if delta < 4 {
        return Err(invalid(format!(
            "maximum degree {delta} gives fewer than 2 colors"
        )));
    }
    let found = solver::feasible_with(g, delta / 2, config)?;
    let witness = found
        .witness
        .ok_or(Error::NoHomogeneousColoring { m: delta / 2 })?;
    Ok(ConstructionResult::new(
        witness,
        Theorem::Eulerian,
        Variant::Standard,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homogeneity::{spectrum, verify};
    use crate::multigraph::{complete, complete_bipartite, cycle, path, random_tree, star, wheel};
    use std::collections::BTreeMap;

    fn color_of(g: &Multigraph, c: &EdgeColoring, a: usize, b: usize) -> usize {
        let e = g.edges().iter().find(|e| e.key() == (a, b)).unwrap();
        c.color(e.id)
    }

    #[test]
    fn complete_even_k4_by_formula() {
        let g = complete(4, 1).unwrap();
        let r = color_complete_even(4).unwrap();
        for (a, b) in [(1, 2), (1, 4), (2, 3), (3, 4)] {
            assert_eq!(color_of(&g, &r.coloring, a, b), 1);
        }
        for (a, b) in [(1, 3), (2, 4)] {
            assert_eq!(color_of(&g, &r.coloring, a, b), 2);
        }
        let s = spectrum(&g, &r.coloring, VertexId(1)).unwrap();
        assert_eq!(s.counts, BTreeMap::from([(1, 2), (2, 1)]));
        assert!(
            verify(
                &complete(10, 1).unwrap(),
                &color_complete_even(10).unwrap().coloring
            )
            .unwrap()
            .ok
        );
    }

    #[test]
    fn complete_even_rejects() {
        assert!(color_complete_even(5).is_err());
        assert!(color_complete_even(2).is_err());
    }

    #[test]
    fn k5_circulant_and_cycles() {
        let g = complete(5, 1).unwrap();
        let r = color_complete_1mod4(5, Variant::Circulant).unwrap();
        for e in g.edges() {
            let d = cyclic_distance(e.u.0, e.v.0, 5);
            assert_eq!(r.coloring.color(e.id), if d == 1 { 1 } else { 2 });
        }
        for x in g.vertices() {
            let s = spectrum(&g, &r.coloring, x).unwrap();
            assert_eq!(s.counts, BTreeMap::from([(1, 2), (2, 2)]));
        }
        let r = color_complete_1mod4(5, Variant::Cycles).unwrap();
        assert!(verify(&g, &r.coloring).unwrap().ok);
        assert_eq!(r.coloring.colors().iter().filter(|&&c| c == 1).count(), 5);
    }

    #[test]
    fn k13_both_variants() {
        let g = complete(13, 1).unwrap();
        for v in variants_1mod4() {
            let r = color_complete_1mod4(13, *v).unwrap();
            let report = verify(&g, &r.coloring).unwrap();
            assert!(report.ok);
            assert!(report
                .spectra
                .iter()
                .all(|s| s.count(1) == 6 && s.count(2) == 6));
        }
        assert!(color_complete_1mod4(7, Variant::Circulant).is_err());
        assert!(color_complete_1mod4(9, Variant::Residue).is_err());
    }

    #[test]
    fn k7_circulant_by_distance() {
        let g = complete(7, 1).unwrap();
        let r = color_complete_3mod4(7, Variant::Circulant).unwrap();
        for e in g.edges() {
            assert_eq!(r.coloring.color(e.id), cyclic_distance(e.u.0, e.v.0, 7));
        }
        let report = verify(&g, &r.coloring).unwrap();
        assert!(report.ok);
        for s in report.spectra {
            assert_eq!(s.counts, BTreeMap::from([(1, 2), (2, 2), (3, 2)]));
        }
    }

    #[test]
    fn k11_residue_spectra() {
        let g = complete(11, 1).unwrap();
        let r = color_complete_3mod4(11, Variant::Residue).unwrap();
        let report = verify(&g, &r.coloring).unwrap();
        assert!(report.ok);
        for s in report.spectra {
            assert_eq!(s.shape(3), vec![4, 3, 3]);
        }
        assert!(color_complete_3mod4(11, Variant::Cycles).is_err());
    }

    #[test]
    fn k15_cycles_variant() {
        let g = complete(15, 1).unwrap();
        let r = color_complete_3mod4(15, Variant::Cycles).unwrap();
        let report = verify(&g, &r.coloring).unwrap();
        assert!(report.ok);
        for s in report.spectra {
            assert_eq!(s.shape(3), vec![5, 5, 4]);
        }
    }

    #[test]
    fn k3_only_residue() {
        assert!(color_complete_3mod4(3, Variant::Cycles).is_err());
        let r = color_complete_3mod4(3, Variant::Residue).unwrap();
        let g = complete(3, 1).unwrap();
        assert!(verify(&g, &r.coloring).unwrap().ok);
        assert!(color_complete_3mod4(5, Variant::Residue).is_err());
    }

    #[test]
    fn lambda_two_triangles() {
        let g = complete(3, 2).unwrap();
        let r = color_lambda_complete(3, 2).unwrap();
        assert_eq!(r.coloring.m(), 2);
        for x in g.vertices() {
            let s = spectrum(&g, &r.coloring, x).unwrap();
            assert_eq!(s.counts, BTreeMap::from([(1, 2), (2, 2)]));
        }
        // each copy is monochromatic, the two copies differ
        for copy in 0..2 {
            let cs: BTreeSet<usize> = g
                .edges()
                .iter()
                .filter(|e| e.copy == copy)
                .map(|e| r.coloring.color(e.id))
                .collect();
            assert_eq!(cs.len(), 1);
        }
    }

    #[test]
    fn lambda_three_k7() {
        let r = color_lambda_complete(7, 3).unwrap();
        assert_eq!(r.coloring.m(), 3);
        assert!(verify(&complete(7, 3).unwrap(), &r.coloring).unwrap().ok);
    }

    #[test]
    fn lambda_rotates_colors_for_n11() {
        let g = complete(11, 3).unwrap();
        let r = color_lambda_complete(11, 3).unwrap();
        let base = color_complete_3mod4(11, Variant::Residue).unwrap().coloring;
        let per_copy = 55;
        for e in g.edges() {
            let k = base.color(e.id % per_copy);
            let expected = match e.copy {
                0 => k,
                1 => [3, 1, 2][k - 1],
                _ => [2, 3, 1][k - 1],
            };
            assert_eq!(r.coloring.color(e.id), expected);
        }
        assert!(verify(&g, &r.coloring).unwrap().ok);
    }

    #[test]
    fn lambda_one_delegates() {
        let a = color_lambda_complete(9, 1).unwrap();
        let b = color_complete_1mod4(9, Variant::Circulant).unwrap();
        assert_eq!(a.coloring, b.coloring);
        assert_eq!(color_lambda_complete(7, 1).unwrap().coloring.m(), 3);
        assert_eq!(color_lambda_complete(6, 1).unwrap().coloring.m(), 2);
        assert!(color_lambda_complete(1, 2).is_err());
        assert!(color_lambda_complete(4, 0).is_err());
    }

    #[test]
    fn lambda_k2() {
        let g = complete(2, 5).unwrap();
        let r = color_lambda_complete(2, 5).unwrap();
        assert!(verify(&g, &r.coloring).unwrap().ok);
    }

    #[test]
    fn tree_cases() {
        let r = color_tree(&path(3).unwrap()).unwrap();
        let mut cs = r.coloring.colors().to_vec();
        cs.sort_unstable();
        assert_eq!(cs, vec![1, 2]);

        let s5 = star(5).unwrap();
        let r = color_tree(&s5).unwrap();
        let hub = spectrum(&s5, &r.coloring, VertexId(1)).unwrap();
        assert_eq!(hub.shape(2), vec![3, 2]);

        let t = random_tree(40, 11).unwrap();
        assert!(verify(&t, &color_tree(&t).unwrap().coloring).unwrap().ok);

        assert_eq!(color_tree(&cycle(4).unwrap()), Err(Error::NotATree));
        let k2 = path(2).unwrap();
        assert_eq!(color_tree(&k2).unwrap().coloring.colors(), &[1]);
    }

    #[test]
    fn bipartite_cases() {
        let g = complete_bipartite(2, 2, 1).unwrap();
        let r = color_complete_bipartite(2, 2, 1).unwrap();
        assert_eq!(color_of(&g, &r.coloring, 1, 3), 1);
        assert_eq!(color_of(&g, &r.coloring, 2, 4), 1);
        assert_eq!(color_of(&g, &r.coloring, 1, 4), 2);
        assert_eq!(color_of(&g, &r.coloring, 2, 3), 2);

        let g = complete_bipartite(2, 3, 1).unwrap();
        let r = color_complete_bipartite(2, 3, 1).unwrap();
        let report = verify(&g, &r.coloring).unwrap();
        assert!(report.ok);
        assert_eq!(report.spectra[0].shape(2), vec![2, 1]);
        assert_eq!(report.spectra[1].shape(2), vec![2, 1]);

        let r = color_complete_bipartite(1, 1, 3).unwrap();
        assert_eq!(r.coloring.colors(), &[1, 2, 1]);
    }

    #[test]
    fn wheel_matches_figure() {
        let g = wheel(5).unwrap();
        let r = color_wheel(5).unwrap();
        let expect = [
            ((1, 2), 1),
            ((1, 3), 2),
            ((1, 4), 1),
            ((1, 5), 2),
            ((2, 3), 2),
            ((3, 4), 1),
            ((4, 5), 2),
            ((2, 5), 1),
        ];
        for ((a, b), c) in expect {
            assert_eq!(color_of(&g, &r.coloring, a, b), c, "edge x{a}x{b}");
        }
        assert!(
            verify(&wheel(4).unwrap(), &color_wheel(4).unwrap().coloring)
                .unwrap()
                .ok
        );
    }

    #[test]
    fn wheel6_closing_edge() {
        let g = wheel(6).unwrap();
        let r = color_wheel(6).unwrap();
        // x6 has spoke 1 and rim x5x6 = 1, so the closing edge must be 2
        assert_eq!(color_of(&g, &r.coloring, 2, 6), 2);
        assert!(verify(&g, &r.coloring).unwrap().ok);
    }

    #[test]
    fn paths_and_cycles() {
        assert_eq!(color_path(4).unwrap().coloring.colors(), &[1, 2, 1]);
        let c6 = color_cycle(6).unwrap();
        assert_eq!(c6.coloring.colors(), &[1, 2, 1, 2, 1, 2]);
        let c5 = color_cycle(5).unwrap();
        assert_eq!(c5.coloring.m(), 3);
        assert_eq!(c5.coloring.colors(), &[1, 2, 1, 2, 3]);
        let report = verify(&cycle(5).unwrap(), &c5.coloring).unwrap();
        assert!(report.ok);
        assert!(report.spectra.iter().all(|s| s.counts.len() == 2));
        assert!(color_cycle(2).is_err());
        assert!(color_path(1).is_err());
    }

    #[test]
    fn eulerian_small() {
        let r = color_eulerian(&complete(5, 1).unwrap()).unwrap();
        assert_eq!(r.coloring.m(), 2);
        assert!(verify(&complete(5, 1).unwrap(), &r.coloring).unwrap().ok);
        assert_eq!(color_eulerian(&path(3).unwrap()), Err(Error::NotEulerian));
        assert!(matches!(
            color_eulerian(&cycle(5).unwrap()),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn eulerian_parity_obstruction() {
        let chain = Multigraph::from_pairs(
            7,
            &[
                (1, 2),
                (2, 3),
                (3, 1),
                (3, 4),
                (4, 5),
                (5, 3),
                (5, 6),
                (6, 7),
                (7, 5),
            ],
        )
        .unwrap();
        assert!(chain.is_eulerian());
        assert_eq!(
            color_eulerian(&chain),
            Err(Error::NoHomogeneousColoring { m: 2 })
        );
        let octahedron = Multigraph::from_pairs(
            6,
            &[
                (1, 3),
                (1, 4),
                (1, 5),
                (1, 6),
                (2, 3),
                (2, 4),
                (2, 5),
                (2, 6),
                (3, 5),
                (3, 6),
                (4, 5),
                (4, 6),
            ],
        )
        .unwrap();
        let r = color_eulerian(&octahedron).unwrap();
        assert!(verify(&octahedron, &r.coloring).unwrap().ok);
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.name().parse::<Theorem>().unwrap(), t);
        }
        assert!("nope".parse::<Theorem>().is_err());
        assert_eq!("cycles".parse::<Variant>().unwrap(), Variant::Cycles);
    }
}
