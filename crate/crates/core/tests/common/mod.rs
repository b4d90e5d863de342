//! Test-only oracles, written independently of the library's verifier and
//! search.

#![allow(dead_code)]

use hecolor::Multigraph;

/// The partition form of homogeneity: with `d = m*q + r`, exactly `r`
/// colors occur `q + 1` times at the vertex and the other `m - r` occur `q`
/// times.
pub fn partition_exists(g: &Multigraph, colors: &[usize], m: usize) -> bool {
    let mut counts = vec![vec![0usize; m]; g.vertex_count() + 1];
    for e in g.edges() {
        let k = colors[e.id] - 1;
        counts[e.u.0][k] += 1;
        counts[e.v.0][k] += 1;
    }
    counts.iter().skip(1).all(|row| {
        let d: usize = row.iter().sum();
        let (q, r) = (d / m, d % m);
        let high = row.iter().filter(|&&c| c == q + 1).count();
        let low = row.iter().filter(|&&c| c == q).count();
        high == r && low == m - r
    })
}

/// Try every one of the `m^|E|` colorings.
pub fn naive_feasible(g: &Multigraph, m: usize) -> bool {
    let e = g.edge_count();
    let mut colors = vec![1usize; e];
    loop {
        if partition_exists(g, &colors, m) {
            return true;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == e {
                return false;
            }
            if colors[i] < m {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
            i += 1;
        }
    }
}

/// Monochromatic vertices of a cycle given as edge colors in traversal
/// order: vertex `i + 1` sits between edges `i` and `i + 1`.
pub fn monochromatic_by_walk(colors: &[usize]) -> usize {
    let n = colors.len();
    (0..n).filter(|&i| colors[i] == colors[(i + 1) % n]).count()
}

/// Every family instance with at most `max_edges` edges that the small
/// parameter ranges below produce.
pub fn small_family_graphs(max_edges: usize) -> Vec<(String, Multigraph)> {
    use hecolor::multigraph::*;
    let mut out = Vec::new();
    let mut push = |name: String, g: Multigraph| {
        if g.edge_count() <= max_edges {
            out.push((name, g));
        }
    };
    for n in 2..=5 {
        for lambda in 1..=max_edges {
            if let Ok(g) = complete(n, lambda) {
                push(format!("{lambda}K{n}"), g);
            }
        }
    }
    for a in 1..=max_edges {
        for b in a..=max_edges {
            for lambda in 1..=max_edges {
                if a * b * lambda <= max_edges {
                    push(
                        format!("{lambda}K{a},{b}"),
                        complete_bipartite(a, b, lambda).unwrap(),
                    );
                }
            }
        }
    }
    for n in 2..=max_edges + 1 {
        push(format!("P{n}"), path(n).unwrap());
        push(format!("S{n}"), star(n).unwrap());
        if n >= 3 {
            push(format!("C{n}"), cycle(n).unwrap());
        }
        if n >= 4 {
            push(format!("W{n}"), wheel(n).unwrap());
        }
        for seed in 0..3 {
            push(format!("T{n}#{seed}"), random_tree(n, seed).unwrap());
        }
    }
    out
}
