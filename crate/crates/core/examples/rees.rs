//! Rees valuations: one monomial valuation per compact facet.
//!
//! cargo run --example rees

use monres::newton::{ideal_order, rees_valuations};
use monres::{Exponent, MonIdeal};

fn main() -> monres::Result<()> {
    let ideals = [
        MonIdeal::from_u64s(2, &[&[2, 0], &[1, 1], &[0, 3]])?,
        MonIdeal::pure_powers(&Exponent::from([2, 3]))?,
        MonIdeal::pure_powers(&Exponent::from([4, 6]))?,
        MonIdeal::maximal_power(3, 2)?,
    ];
    for ideal in &ideals {
        println!("{ideal}");
        for (rho, r) in rees_valuations(ideal)? {
            // the order is attained on the facet's generators
            let orders: Vec<_> = ideal
                .gens()
                .iter()
                .map(|g| monres::newton::ord(&rho, g).map(|o| o.to_string()))
                .collect::<monres::Result<_>>()?;
            assert_eq!(ideal_order(&rho, ideal)?, r);
            println!("  ray {rho}  r = {r}  orders on generators [{}]", orders.join(", "));
        }
    }
    Ok(())
}
