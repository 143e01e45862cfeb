//! The involution of a degree d double EPW sextic acting on its
//! rank two Neron-Severi lattice.

use epw_lattice::family::epw_involution;
use epw_lattice::LatticeVector;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (d, m) in [(10, 2), (34, 4), (74, 6)] {
        let rep = epw_involution(d, m)?;
        println!("d={d}, m={m}");
        println!("  gram:\n{}", rep.lattice.gram());
        println!("  gamma = {}", rep.gamma);
        println!("  j(h) = {}  j(delta) = {}", rep.image_of_h, rep.image_of_delta);
        println!("  j^2 = 1: {}", rep.matrix.compose(&rep.matrix).is_identity());
        let h = LatticeVector::from_i64(&[1, 0]);
        let jh = rep.matrix.apply(&h)?;
        println!("  (jh, jh) = {}", rep.lattice.square(&jh)?);
    }
    Ok(())
}
