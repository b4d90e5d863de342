//! Exact search for m-homogeneous colorings. W_5 has a 2-coloring and a
//! 4-coloring but no 3-coloring, so feasibility is not monotone in m.

use hecolor::multigraph::{complete, wheel};
use hecolor::solver::{chi_tilde, feasible, feasible_with, SolverConfig};
use hecolor::Error;

fn main() -> hecolor::Result<()> {
    let w5 = wheel(5)?;
    for m in 2..=5 {
        let r = feasible(&w5, m)?;
        println!(
            "W5, m = {m}: feasible = {:<5} ({} nodes)",
            r.feasible, r.nodes_explored
        );
    }

    let k7 = complete(7, 1)?;
    let r = chi_tilde(&k7)?;
    println!(
        "K7: chi_tilde = {}, refuted {:?}, witness {:?}",
        r.value,
        r.infeasible_below,
        r.witness.colors()
    );

    let k9 = complete(9, 2)?;
    match feasible_with(&k9, 3, &SolverConfig::with_budget(10)) {
        Err(Error::BudgetExceeded { budget }) => {
            println!("2K9, m = 3: gave up after {budget} nodes")
        }
        other => println!("2K9, m = 3: {:?}", other.map(|r| r.feasible)),
    }
    Ok(())
}
