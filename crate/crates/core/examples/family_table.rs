//! The even family of degrees 8n^2 + 16n + 10, printed as CSV.

use epw_lattice::cli::family_table;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(8);
    family_table(1, n_max)?.write_csv(&mut std::io::stdout().lock())?;
    Ok(())
}
