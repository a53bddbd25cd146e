//! Lattice points of a polytope recovered from the cells of a subdivision.

use delzant::lattice::frac;
use delzant::polyhedra::catalog;
use delzant::random;
use delzant::subdivision::{glue_count_check, is_admissible, Subdivision};

fn main() -> delzant::Result<()> {
    let triangle = catalog::triangle(4);
    let s = Subdivision::from_hyperplanes(2, &[(vec![1, 0], frac(3, 2)), (vec![1, 1], frac(5, 2))])?;
    println!("{} cells, admissible: {}", s.len(), is_admissible(&s, &triangle)?);
    let r = glue_count_check(&triangle, &s)?;
    println!("{} points, alternating sum {}", r.total, r.alternating);

    let mut rng = random::rng(3);
    let p = random::lattice_polytope(&mut rng, 3)?;
    let s = random::admissible_split(&mut rng, &p)?;
    let r = glue_count_check(&p, &s)?;
    println!("random 3d polytope: {} = {} over {} cells", r.total, r.alternating, s.len());
    Ok(())
}
