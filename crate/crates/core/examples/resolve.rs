//! Taylor and Scarf complexes, and a cut-open Taylor complex that stops
//! being a resolution.
//!
//! cargo run --example resolve

use monres::complex::{acyclicity_failure, compose_zero, rank_profile, scarf_complex, taylor_complex, LabeledComplex};
use monres::MonIdeal;

fn show(name: &str, c: &LabeledComplex, ideal: &MonIdeal) -> monres::Result<()> {
    let profile = rank_profile(c)?;
    println!("{name}: faces {:?}", c.face_counts());
    println!("  d o d = 0        {}", compose_zero(c));
    match acyclicity_failure(c, ideal)? {
        None => println!("  acyclic below every lcm"),
        Some(b) => println!("  homology below {b}"),
    }
    println!("  ranks {:?}  rank-exact {}", profile.ranks, profile.rank_exact);
    Ok(())
}

fn main() -> monres::Result<()> {
    let m2 = MonIdeal::maximal_power(2, 2)?;
    let taylor = taylor_complex(&m2)?;
    show("Taylor(m^2)", &taylor, &m2)?;
    show("Scarf(m^2)", &scarf_complex(&m2)?, &m2)?;
    show("Taylor(m^2) minus edge {0,1}", &taylor.without_face(&[0, 1])?, &m2)?;

    let i = MonIdeal::from_u64s(2, &[&[3, 0], &[1, 1], &[0, 2]])?;
    show("Scarf(x^3, xy, y^2)", &scarf_complex(&i)?, &i)?;
    Ok(())
}
