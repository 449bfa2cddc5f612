//! Integral closure of a few planar ideals and the facets that cut them out.
//!
//! cargo run --example closure

use monres::newton::{compact_facets, integral_closure};
use monres::MonIdeal;

fn main() -> monres::Result<()> {
    let cases: [&[&[u64]]; 4] = [
        &[&[2, 0], &[1, 1], &[0, 2]],
        &[&[2, 0], &[0, 2]],
        &[&[3, 0], &[0, 3]],
        &[&[4, 0], &[1, 2], &[0, 3]],
    ];
    for gens in cases {
        let ideal = MonIdeal::from_u64s(2, gens)?;
        let closure = integral_closure(&ideal)?;
        println!("{ideal}");
        println!("  closure  {closure}");
        println!("  closed   {}", closure == ideal);
        for f in compact_facets(&ideal)?.facets {
            println!("  facet    <{}, a> >= {}", f.normal, f.offset);
        }
    }
    Ok(())
}
