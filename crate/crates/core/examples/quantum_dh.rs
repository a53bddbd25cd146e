//! Period and degree of dilation counts for rational polytopes.

use delzant::characters::quantum_dh_check;
use delzant::polyhedra::catalog;

fn main() -> delzant::Result<()> {
    for (name, p) in [("[0,1/2]", catalog::half_interval()), ("weighted triangle", catalog::weighted_triangle())] {
        let r = quantum_dh_check(&p, &vec![0; p.dim()], 12)?;
        println!("{name}: degree {} period {} (l = {})", r.quasi_polynomial.degree, r.quasi_polynomial.period, r.l);
        print!("{}", r.quasi_polynomial);
    }
    Ok(())
}
