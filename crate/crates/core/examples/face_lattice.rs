//! Open faces of the square pyramid and where its excess jumps.

use delzant::polyhedra::{catalog, ExcessDecomposition, FaceLattice};

fn main() -> delzant::Result<()> {
    let pyramid = catalog::egyptian_pyramid();
    let lattice = FaceLattice::new(&pyramid)?;
    for (i, face) in lattice.faces().iter().enumerate() {
        println!("tight {:?}  dim {}  excess {}", face.tight, face.dim, lattice.excess(i));
    }
    let dec = ExcessDecomposition::new(&lattice);
    println!("{} pieces, depth {}", dec.len(), dec.depth());
    Ok(())
}
