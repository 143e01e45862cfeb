//! Negative Pell equation y^2 - D x^2 = -1 via continued fractions.

use epw_lattice::pell::{cf_expansion, enumerate_negative, is_solvable_negative, prime_criterion};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(13u64);
    let cf = cf_expansion(d)?;
    println!("sqrt({d}) = [{}; {:?}], period {}", cf.a0, cf.period, cf.period_len());
    if is_solvable_negative(d)? {
        for (k, s) in enumerate_negative(d, 4)?.iter().enumerate() {
            println!("  #{k}: (y, x) = {s}");
        }
    } else {
        println!("  no solutions");
    }

    let split: Vec<u64> = (2..60).filter(|&p| prime_criterion(p).unwrap_or(false)).collect();
    println!("primes below 60 with a solution: {split:?}");
    Ok(())
}
