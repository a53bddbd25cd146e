//! Both ways of making the excess constant, applied to the square pyramid.

use delzant::desingularize::{canonical_desingularization, depth, shift_desingularization, Shift};
use delzant::polyhedra::{catalog, format::write_lpoly};

fn main() -> delzant::Result<()> {
    let pyramid = catalog::egyptian_pyramid();
    println!("depth before: {}", depth(&pyramid)?);

    let trace = canonical_desingularization(&pyramid)?;
    for step in &trace.steps {
        println!("blew up face {:?} with label {} (epsilon {})", step.target, step.added, step.epsilon);
    }
    print!("{}", write_lpoly(&trace.result));
    println!("depth after: {}", depth(&trace.result)?);

    let shifted = shift_desingularization(&pyramid, &Shift::Auto)?;
    print!("shifted:\n{}", write_lpoly(&shifted));
    Ok(())
}
