//! Normal fans and their regular refinements.
//!
//! cargo run --example fan

use monres::fan::{divisor_table, normal_fan, regularize};
use monres::MonIdeal;

fn main() -> monres::Result<()> {
    let ideals = [
        MonIdeal::from_u64s(2, &[&[3, 0], &[0, 2]])?,
        MonIdeal::from_u64s(2, &[&[5, 0], &[1, 1], &[0, 4]])?,
        MonIdeal::from_u64s(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]])?,
    ];
    for ideal in &ideals {
        let fan = normal_fan(ideal)?;
        let regular = regularize(&fan)?;
        println!("{ideal}");
        println!("  normal fan regular: {}", fan.is_regular());
        println!("  {} rays after refinement, {} cones", regular.rays.len(), regular.cones.len());
        if ideal.dim() == 2 {
            println!("  consecutive determinants {:?}", regular.consecutive_determinants());
        }
        for row in divisor_table(&regular, ideal)? {
            println!("  {}  r {}  ord(dz) {}{}", row.rho, row.r, row.ord_dz, if row.is_rees { "  rees" } else { "" });
        }
    }
    Ok(())
}
