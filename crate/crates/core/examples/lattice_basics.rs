//! Gram matrices, invariants, reflections and orthogonal complements.

use epw_lattice::{Lattice, LatticeVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l = Lattice::from_i64(&[[2, 1, 0], [1, -2, 3], [0, 3, 4]])?;
    println!("gram:\n{}", l.gram());
    println!("rank {} disc {} signature {} even {}", l.rank(), l.discriminant(), l.signature(), l.is_even());

    let e = LatticeVector::from_i64(&[1, 0, 0]);
    let s = l.reflection(&e)?;
    let x = LatticeVector::from_i64(&[0, 1, 1]);
    println!("s_e{} = {}", x, s.apply(&x)?);
    println!("s_e is an isometry: {}", l.is_isometry(s.matrix())?);

    let perp = l.orthogonal_complement(&e)?;
    println!("e-perp basis: {}", perp.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
    println!("e-perp gram:\n{}", l.induced_gram(&perp)?.gram());
    Ok(())
}
