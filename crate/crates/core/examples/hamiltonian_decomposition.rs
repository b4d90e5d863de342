//! Split K_n (n odd) into (n-1)/2 edge-disjoint Hamiltonian cycles.

use hecolor::decompositions::{check_decomposition, walecki_decompose};

fn main() -> hecolor::Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(9);
    let d = walecki_decompose(n)?;
    for (i, cycle) in d.cycles.iter().enumerate() {
        let labels: Vec<String> = cycle.iter().map(|v| format!("x{v}")).collect();
        println!("H{}: {}", i + 1, labels.join(" "));
    }
    match check_decomposition(&d) {
        Ok(()) => println!("valid decomposition of K{n}"),
        Err(defect) => println!("defect: {defect}"),
    }
    Ok(())
}
