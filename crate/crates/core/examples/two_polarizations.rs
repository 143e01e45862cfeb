//! Lattice checks ruling out two degree 10 polarizations on one K3.

use epw_lattice::catalog::r_lattice;
use epw_lattice::family::{
    k3_embedding_sufficient, r0_discriminant_obstruction, reflected_discriminant_inequality,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=5 {
        let o = r0_discriminant_obstruction(n)?;
        let embeds = k3_embedding_sufficient(&r_lattice(n));
        let strict = (1..n + 10).all(|fh| reflected_discriminant_inequality(n, fh).map(|r| r.strict).unwrap_or(false));
        println!(
            "n={n}: disc R = {:>4}, r=0 excluded {}, embeds in K3 {}, reflected inequality strict {}",
            o.disc_r, o.contradiction_r0, embeds, strict
        );
    }
    Ok(())
}
