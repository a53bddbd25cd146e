//! The rho-shifted action on antidominant weights and the walls they sit on.

use delzant::roots::{format_weight, RootSystem, RootType, Wall};

fn main() -> delzant::Result<()> {
    let b2 = RootSystem::new(RootType::B2);
    for lambda in [[0, 0], [1, 0], [0, 1], [2, 1], [2, 2]] {
        let wall = Wall::of_weight(&lambda);
        let result = b2.reflect(&lambda)?;
        let shown = match result {
            Some((w, nu)) => format!("w = {:?}, image {}", b2.elements[w].word, format_weight(&nu)),
            None => "no reflection".to_string(),
        };
        println!("lambda {} on wall {wall}: {shown}", format_weight(&lambda));
    }
    Ok(())
}
