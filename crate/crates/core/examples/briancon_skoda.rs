//! The inclusion closure(I)^nu ⊆ I with nu = min(n, #generators), and why
//! nu cannot be lowered in general.
//!
//! cargo run --example briancon_skoda

use monres::certify::{briancon_skoda_exponent, briancon_skoda_inclusion};
use monres::MonIdeal;

fn main() -> monres::Result<()> {
    let ideals = [
        MonIdeal::from_u64s(2, &[&[2, 0], &[0, 2]])?,
        MonIdeal::from_u64s(2, &[&[5, 0], &[0, 3]])?,
        MonIdeal::from_u64s(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]])?,
    ];
    for ideal in &ideals {
        let nu = briancon_skoda_exponent(ideal);
        println!("{ideal}  nu = {nu}");
        for k in 1..=nu {
            println!("  closure^{k} inside: {}", briancon_skoda_inclusion(ideal, k)?);
        }
    }
    Ok(())
}
