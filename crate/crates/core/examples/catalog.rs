//! Invariants of the named lattices.

use epw_lattice::{catalog_report, CatalogId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["U", "E8", "A1(-2)", "I22_2", "LAMBDA2", "LAMBDA0", "K3", "NS_HILB(10)", "R(1)", "NS3(1)", "PI(1)"] {
        let id: CatalogId = name.parse()?;
        let r = catalog_report(id)?;
        println!("{:<12} rank {:>2}  disc {:>5}  sig {:<9} even {}", id.to_string(), r.rank, r.discriminant.to_string(), r.signature.to_string(), r.even);
    }
    Ok(())
}
