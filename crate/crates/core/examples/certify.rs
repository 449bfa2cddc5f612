//! Smallness certificates: the closedness decision with its evidence.
//!
//! cargo run --example certify

use monres::certify::{certify_ideal, smallness_report, Outcome};
use monres::complex::ComplexKind;
use monres::MonIdeal;

fn main() -> monres::Result<()> {
    let ideals = [
        MonIdeal::maximal_power(2, 2)?,
        MonIdeal::from_u64s(2, &[&[3, 0], &[2, 1], &[0, 2]])?,
        MonIdeal::from_u64s(2, &[&[2, 0], &[0, 2]])?,
        MonIdeal::maximal_power(3, 2)?,
    ];
    for ideal in &ideals {
        let report = certify_ideal(ideal, ComplexKind::Taylor)?;
        println!("{ideal}  closed = {}", report.closed);
        for c in &report.components {
            match &c.outcome {
                Outcome::Certified(cert) => {
                    cert.verify()?;
                    println!(
                        "  alpha {}  ray {}  k {}  beta {}  a {} <= r {}",
                        c.alpha, cert.rho, cert.k, cert.beta, cert.a, cert.r
                    );
                }
                Outcome::Failed(w) => {
                    for o in &w.rays {
                        println!("  alpha {}  blocked on {}: ord {} >= r {}", c.alpha, o.rho, o.ord_alpha_minus_one, o.r);
                    }
                }
            }
        }
        if report.closed {
            let table = smallness_report(ideal)?;
            println!("  divisor rays in the regular refinement: {}", table.divisors.len());
        }
    }
    Ok(())
}
