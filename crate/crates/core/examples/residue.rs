//! Candidate support of the residue current and the duality check.
//!
//! cargo run --example residue

use monres::complex::{koszul_complex, taylor_complex};
use monres::residue::{annihilator, residue_current};
use monres::{Exponent, MonIdeal};

fn main() -> monres::Result<()> {
    let m2 = MonIdeal::maximal_power(2, 2)?;
    let r = residue_current(&taylor_complex(&m2)?, &m2)?;
    println!("Taylor(m^2)");
    for c in &r.components {
        println!("  face {:?}  alpha {}  {:?}", c.vertices, c.alpha, c.status);
    }
    println!("  annihilator {}", annihilator(&r)?);
    println!("  irreducible components {:?}", m2.irreducible_decomposition()?.iter().map(|a| a.to_string()).collect::<Vec<_>>());

    let beta = Exponent::from([2, 3]);
    let ci = MonIdeal::pure_powers(&beta)?;
    let r = residue_current(&koszul_complex(&beta)?, &ci)?;
    println!("Koszul(2,3)");
    for c in &r.components {
        println!("  alpha {}  {:?}", c.alpha, c.status);
    }
    println!("  annihilator {}", annihilator(&r)?);
    Ok(())
}
