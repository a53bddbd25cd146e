//! Ehrhart quasi-polynomials and reciprocity.

use delzant::counting::{count_points, ehrhart_fit, reciprocity_check, Region};
use delzant::polyhedra::catalog;

fn main() -> delzant::Result<()> {
    let half = catalog::half_interval();
    let qp = ehrhart_fit(&half, 8)?;
    print!("[0, 1/2]:\n{qp}");

    let pyramid = catalog::egyptian_pyramid();
    for m in 1..=3 {
        println!(
            "pyramid m={m}: {} points, {} interior",
            count_points(&pyramid, m, Region::Closed)?,
            count_points(&pyramid, m, Region::Interior)?
        );
    }
    let report = reciprocity_check(&pyramid, 6)?;
    print!("{}", report.quasi_polynomial);
    println!("reciprocity holds: {}", report.holds());
    Ok(())
}
