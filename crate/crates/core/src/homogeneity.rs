//! Homogeneity of an edge-coloring.
//!
//! A coloring with `m` colors is homogeneous when, at every vertex of degree
//! `d = m*q + r`, the incident edges split into `r` color classes of size
//! `q + 1` and `m - r` classes of size `q`. Since the class sizes sum to
//! `d`, this holds exactly when every color occurs `q` or `q + 1` times at
//! the vertex, which is what [`verify`] checks.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multigraph::{Multigraph, VertexId};

/// A total assignment of colors `1..=m` to edge ids `0..|E|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct EdgeColoring {
    m: usize,
    colors: Vec<usize>,
}

#[derive(Deserialize)]
struct RawColoring {
    m: usize,
    colors: Vec<usize>,
}

impl TryFrom<RawColoring> for EdgeColoring {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<Self> {
        EdgeColoring::new(raw.m, raw.colors)
    }
}

impl EdgeColoring {
    /// Colors are indexed by edge id. Fails when `m < 2` or a color falls
    /// outside `1..=m`.
    pub fn new(m: usize, colors: Vec<usize>) -> Result<Self> {
        if m < 2 {
            return Err(Error::TooFewColors(m));
        }
        if let Some((edge, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > m) {
            return Err(Error::ColorOutOfRange { edge, color, m });
        }
        Ok(Self { m, colors })
    }

    /// Color every edge of `g` with `f(edge)`.
    pub fn from_fn(
        g: &Multigraph,
        m: usize,
        f: impl FnMut(&crate::multigraph::Edge) -> usize,
    ) -> Result<Self> {
        Self::new(m, g.edges().iter().map(f).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, edge: usize) -> usize {
        self.colors[edge]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Relabel colors: color `k` becomes `perm[k - 1]`. `perm` must be a
    /// permutation of `1..=m`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=self.m).collect::<Vec<_>>() {
            return Err(crate::error::invalid(format!(
                "{perm:?} is not a permutation of 1..={}",
                self.m
            )));
        }
        Ok(Self {
            m: self.m,
            colors: self.colors.iter().map(|&c| perm[c - 1]).collect(),
        })
    }

    fn check_against(&self, g: &Multigraph) -> Result<()> {
        if self.colors.len() != g.edge_count() {
            return Err(Error::ColoringMismatch {
                expected: g.edge_count(),
                found: self.colors.len(),
            });
        }
        Ok(())
    }
}

/// Color counts over E(x) together with `d = m*q + r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSpectrum {
    pub vertex: VertexId,
    pub d: usize,
    pub q: usize,
    pub r: usize,
    /// Only colors that actually occur at the vertex are listed.
    pub counts: BTreeMap<usize, usize>,
}

impl VertexSpectrum {
    pub fn count(&self, color: usize) -> usize {
        self.counts.get(&color).copied().unwrap_or(0)
    }

    /// Per-color counts over all `m` colors, unused colors included, sorted
    /// in decreasing order.
    pub fn shape(&self, m: usize) -> Vec<usize> {
        let mut s: Vec<usize> = (1..=m).map(|k| self.count(k)).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    /// `floor(d/m)` and `ceil(d/m)`, a single value when `m` divides `d`.
    pub fn allowed(&self) -> Vec<usize> {
        if self.r == 0 {
            vec![self.q]
        } else {
            vec![self.q, self.q + 1]
        }
    }

    fn first_violation(&self, m: usize) -> Option<Violation> {
        (1..=m).find_map(|k| {
            let count = self.count(k);
            let allowed = self.allowed();
            (!allowed.contains(&count)).then_some(Violation {
                vertex: self.vertex,
                color: k,
                count,
                allowed,
            })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub vertex: VertexId,
    pub color: usize,
    pub count: usize,
    pub allowed: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneityReport {
    pub ok: bool,
    pub m: usize,
    pub spectra: Vec<VertexSpectrum>,
    pub first_violation: Option<Violation>,
}

fn spectrum_unchecked(g: &Multigraph, c: &EdgeColoring, x: VertexId) -> VertexSpectrum {
    let ids = g.incident_ids(x.0);
    let d = ids.len();
    let mut counts = BTreeMap::new();
    for &e in ids {
        *counts.entry(c.color(e)).or_insert(0) += 1;
    }
    VertexSpectrum {
        vertex: x,
        d,
        q: d / c.m(),
        r: d % c.m(),
        counts,
    }
}

/// Color counts at a single vertex.
pub fn spectrum(g: &Multigraph, c: &EdgeColoring, x: VertexId) -> Result<VertexSpectrum> {
    c.check_against(g)?;
    g.degree(x)?;
    Ok(spectrum_unchecked(g, c, x))
}

/// Check that `c` is an `m`-homogeneous coloring of `g`.
pub fn verify(g: &Multigraph, c: &EdgeColoring) -> Result<HomogeneityReport> {
    c.check_against(g)?;
    let spectra: Vec<VertexSpectrum> = g.vertices().map(|x| spectrum_unchecked(g, c, x)).collect();
    let first_violation = spectra.iter().find_map(|s| s.first_violation(c.m()));
    Ok(HomogeneityReport {
        ok: first_violation.is_none(),
        m: c.m(),
        spectra,
        first_violation,
    })
}

/// Whether no two edges sharing a vertex have the same color.
pub fn is_proper(g: &Multigraph, c: &EdgeColoring) -> Result<bool> {
    c.check_against(g)?;
    Ok(g.vertices().all(|x| {
        let mut seen = vec![false; c.m() + 1];
        g.incident_ids(x.0).iter().all(|&e| {
            let k = c.color(e);
            !std::mem::replace(&mut seen[k], true)
        })
    }))
}

/// Number of vertices of a 2-colored cycle whose two edges share a color.
pub fn count_monochromatic_vertices(cycle: &Multigraph, c: &EdgeColoring) -> Result<usize> {
    if !cycle.is_cycle() {
        return Err(Error::NotACycle);
    }
    if c.m() != 2 {
        return Err(crate::error::invalid(format!(
            "monochromatic counting needs m = 2, got {}",
            c.m()
        )));
    }
    c.check_against(cycle)?;
    Ok(cycle
        .vertices()
        .filter(|x| {
            let ids = cycle.incident_ids(x.0);
            c.color(ids[0]) == c.color(ids[1])
        })
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{complete, cycle, path, star, wheel, Multigraph};

    /// W5 as drawn: spokes x2..x5 get 1,2,1,2; rim x2x3=2, x3x4=1, x4x5=2, x5x2=1.
    fn w5_figure(g: &Multigraph) -> EdgeColoring {
        EdgeColoring::from_fn(g, 2, |e| match e.key() {
            (1, 2) | (1, 4) => 1,
            (1, 3) | (1, 5) => 2,
            (2, 3) => 2,
            (3, 4) => 1,
            (4, 5) => 2,
            (2, 5) => 1,
            other => panic!("unexpected edge {other:?}"),
        })
        .unwrap()
    }

    #[test]
    fn wheel_figure_verifies() {
        let g = wheel(5).unwrap();
        let report = verify(&g, &w5_figure(&g)).unwrap();
        assert!(report.ok);
        assert_eq!(report.spectra.len(), 5);
        assert_eq!(report.spectra[0].counts, BTreeMap::from([(1, 2), (2, 2)]));
    }

    #[test]
    fn monochrome_triangle_fails_everywhere() {
        let g = cycle(3).unwrap();
        let c = EdgeColoring::new(2, vec![1, 1, 1]).unwrap();
        let report = verify(&g, &c).unwrap();
        assert!(!report.ok);
        for s in &report.spectra {
            assert_eq!((s.d, s.q, s.r), (2, 1, 0));
            assert_eq!(s.count(1), 2);
        }
        let v = report.first_violation.unwrap();
        assert_eq!(v.vertex, VertexId(1));
        assert_eq!(v.count, 2);
        assert_eq!(v.color, 1);
        assert_eq!(v.allowed, vec![1]);
    }

    #[test]
    fn k4_parity_coloring_by_hand() {
        let g = complete(4, 1).unwrap();
        let c =
            EdgeColoring::from_fn(&g, 2, |e| if (e.u.0 + e.v.0) % 2 == 1 { 1 } else { 2 }).unwrap();
        let report = verify(&g, &c).unwrap();
        assert!(report.ok);
        for s in &report.spectra {
            assert_eq!(s.counts, BTreeMap::from([(1, 2), (2, 1)]));
        }
    }

    #[test]
    fn star_hub_spectrum() {
        let g = star(5).unwrap();
        let c = EdgeColoring::new(2, vec![1, 2, 1, 2, 1]).unwrap();
        let s = spectrum(&g, &c, VertexId(1)).unwrap();
        assert_eq!(s.counts, BTreeMap::from([(1, 3), (2, 2)]));
        assert_eq!((s.q, s.r), (2, 1));
    }

    #[test]
    fn isolated_vertex_is_vacuous() {
        let g = Multigraph::from_pairs(3, &[(1, 2)]).unwrap();
        let c = EdgeColoring::new(2, vec![1]).unwrap();
        let s = spectrum(&g, &c, VertexId(3)).unwrap();
        assert!(s.counts.is_empty());
        assert_eq!((s.d, s.q, s.r), (0, 0, 0));
        assert!(verify(&g, &c).unwrap().ok);
    }

    #[test]
    fn coloring_validation() {
        assert_eq!(EdgeColoring::new(1, vec![1]), Err(Error::TooFewColors(1)));
        assert!(matches!(
            EdgeColoring::new(2, vec![1, 3]),
            Err(Error::ColorOutOfRange {
                edge: 1,
                color: 3,
                m: 2
            })
        ));
        assert!(EdgeColoring::new(2, vec![0]).is_err());
        let g = path(3).unwrap();
        let short = EdgeColoring::new(2, vec![1]).unwrap();
        assert_eq!(
            verify(&g, &short).unwrap_err(),
            Error::ColoringMismatch {
                expected: 2,
                found: 1
            }
        );
        let json = r#"{"m": 2, "colors": [1, 5]}"#;
        assert!(serde_json::from_str::<EdgeColoring>(json).is_err());
    }

    #[test]
    fn properness() {
        let p3 = path(3).unwrap();
        assert!(is_proper(&p3, &EdgeColoring::new(2, vec![1, 2]).unwrap()).unwrap());
        let c3 = cycle(3).unwrap();
        assert!(!is_proper(&c3, &EdgeColoring::new(2, vec![1, 2, 1]).unwrap()).unwrap());

        // K4 1-factorization: {12,34}, {13,24}, {14,23}
        let k4 = complete(4, 1).unwrap();
        let c = EdgeColoring::from_fn(&k4, 3, |e| match e.key() {
            (1, 2) | (3, 4) => 1,
            (1, 3) | (2, 4) => 2,
            _ => 3,
        })
        .unwrap();
        assert!(is_proper(&k4, &c).unwrap());
        assert!(verify(&k4, &c).unwrap().ok);
    }

    #[test]
    fn monochromatic_counts() {
        let c3 = cycle(3).unwrap();
        let all1 = EdgeColoring::new(2, vec![1, 1, 1]).unwrap();
        assert_eq!(count_monochromatic_vertices(&c3, &all1).unwrap(), 3);

        // rim order: x1x2, x2x3, x3x4, x4x5, x5x1. Same-colored neighbours at
        // x2 (1,1), x4 (2,2) and x1 (x5x1=1, x1x2=1).
        let c5 = cycle(5).unwrap();
        let c = EdgeColoring::new(2, vec![1, 1, 2, 2, 1]).unwrap();
        assert_eq!(count_monochromatic_vertices(&c5, &c).unwrap(), 3);

        let c4 = cycle(4).unwrap();
        let alt = EdgeColoring::new(2, vec![1, 2, 1, 2]).unwrap();
        assert_eq!(count_monochromatic_vertices(&c4, &alt).unwrap(), 0);
        assert!(verify(&c4, &alt).unwrap().ok);
    }

    #[test]
    fn monochromatic_count_rejects_bad_input() {
        let p = path(4).unwrap();
        let c = EdgeColoring::new(2, vec![1, 1, 1]).unwrap();
        assert_eq!(count_monochromatic_vertices(&p, &c), Err(Error::NotACycle));
        let c3 = cycle(3).unwrap();
        let three = EdgeColoring::new(3, vec![1, 2, 3]).unwrap();
        assert!(matches!(
            count_monochromatic_vertices(&c3, &three),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn permutation_rejects_non_permutations() {
        let c = EdgeColoring::new(3, vec![1, 2, 3]).unwrap();
        assert_eq!(c.permuted(&[3, 1, 2]).unwrap().colors(), &[3, 1, 2]);
        assert!(c.permuted(&[1, 1, 2]).is_err());
        assert!(c.permuted(&[1, 2]).is_err());
    }
}
