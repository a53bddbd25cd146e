//! Counting vertices whose tangent weights all pair negatively with a
//! generic direction.

use delzant::characters::{toric_fixed_point_data, vertex_multiplicity, Bundle};
use delzant::counting::localized_vertex_multiplicity;
use delzant::lattice::RationalVector;
use delzant::random;

fn main() -> delzant::Result<()> {
    let mut rng = random::rng(0);
    for dim in 1..=3 {
        let p = random::lattice_polytope(&mut rng, dim)?;
        let xi = random::generic_direction(&mut rng, &p)?;
        let (vertex, n) = localized_vertex_multiplicity(&p, 1, &xi)?;
        println!("dim {dim}, xi {xi:?}: {n} vertex at {vertex}");
        let rigid = toric_fixed_point_data(&p, Bundle::Rigid)?;
        let m = vertex_multiplicity(&rigid, &RationalVector::zeros(dim), &xi)?;
        println!("  rigid bundle, weight 0: {m}");
    }
    Ok(())
}
