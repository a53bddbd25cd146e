//! Weyl characters, tensor products and the induction map.

use delzant::characters::{multiply_g, weyl_character, GCharacter};
use delzant::roots::{RootSystem, RootType};

fn main() -> delzant::Result<()> {
    let g2 = RootSystem::new(RootType::G2);
    let chi = weyl_character(&g2, &[1, 0])?;
    println!("G2 (1,0) has dimension {} with {} distinct weights", chi.total(), chi.len());

    let a2 = RootSystem::new(RootType::A2);
    let three = GCharacter::irreducible(vec![1, 0])?;
    let bar = GCharacter::irreducible(vec![0, 1])?;
    print!("3 x 3bar =\n{}", multiply_g(&a2, &three, &bar)?);

    for mu in [[-1, 0], [-2, 1], [-3, 1], [1, -3]] {
        match a2.induce(&mu) {
            None => println!("Ind {mu:?} = 0"),
            Some((sign, nu)) => println!("Ind {mu:?} = {sign} chi{nu:?}"),
        }
    }
    Ok(())
}
