//! lambda-fold complete graphs: an even number of copies always needs only
//! two colors, while an odd number of copies of K_n with n = 3 mod 4 needs three.

use hecolor::constructions::color_lambda_complete;
use hecolor::homogeneity::verify;
use hecolor::multigraph::complete;
use hecolor::solver::chi_tilde;

fn main() -> hecolor::Result<()> {
    println!(
        "{:>3} {:>6} {:>10} {:>10}",
        "n", "lambda", "built m", "chi_tilde"
    );
    for n in [3, 4, 5, 7] {
        for lambda in 1..=3 {
            let g = complete(n, lambda)?;
            let r = color_lambda_complete(n, lambda)?;
            assert!(verify(&g, &r.coloring)?.ok);
            let exact = chi_tilde(&g)?;
            println!(
                "{n:>3} {lambda:>6} {:>10} {:>10}",
                r.coloring.m(),
                exact.value
            );
        }
    }
    Ok(())
}
