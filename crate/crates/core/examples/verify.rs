//! Runs the built-in self-check and reports the first counterexample.

use epw_lattice::verify::{run_checks, standard_checks};

fn main() -> std::io::Result<()> {
    let n_max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);
    match run_checks(&standard_checks(), n_max, &mut std::io::stdout().lock())? {
        None => println!("all checks passed"),
        Some((name, msg)) => {
            eprintln!("{name}: {msg}");
            std::process::exit(3);
        }
    }
    Ok(())
}
