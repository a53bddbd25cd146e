//! The inverse bundle on the orbit through 2rho in type A1 has invariant part -1.

use delzant::characters::verify_vergne;

fn main() -> delzant::Result<()> {
    let r = verify_vergne()?;
    print!("toric character:\n{}", r.toric_character);
    println!("total: {}", r.toric_total);
    print!("from toric counting:\n{}", r.from_toric);
    print!("from induction:\n{}", r.from_induction);
    print!("from reflection:\n{}", r.from_reflection);
    println!("all agree: {}", r.passed());
    Ok(())
}
