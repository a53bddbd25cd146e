//! The wall-dual subdivision of the plane for A2 and its Euler identity.

use delzant::lattice::{frac, RationalVector};
use delzant::roots::{RootSystem, RootType};
use delzant::subdivision::{dual_subdivision, euler_check, validate, Coverage};

fn main() -> delzant::Result<()> {
    let a2 = RootSystem::new(RootType::A2);
    let d = dual_subdivision(&a2, &RationalVector(vec![frac(1, 3), frac(2, 5)]))?;
    let s = d.subdivision()?;
    for (i, c) in d.cells.iter().enumerate() {
        println!("sigma {} tau {}: codim {}", c.sigma, c.tau, s.codim(i));
    }
    println!("valid: {}", validate(&s, Coverage::AllSpace)?.is_valid());
    println!("euler identity at 100 points: {}", euler_check(&s, 100, 0).holds());
    Ok(())
}
