//! Smallness certificates for the residue components of an Artinian monomial
//! ideal, and the integral-closedness decision built from them.
//!
//! For a candidate component with label `alpha` the engine looks for a Rees
//! ray `rho` with
//!
//! ```text
//! ord_rho(z^{alpha-1}) < ord_rho(I) = r.
//! ```
//!
//! Given such a ray it sets `gamma_j = prod_{i != j} rho_i`, takes the least
//! `k` with `k * gamma >= alpha`, puts `beta = k * gamma`, and evaluates
//!
//! ```text
//! a = n * ord_rho(m^beta) - ord_rho(z^{beta-alpha}) - ord_rho(dz),   ord_rho(dz) = |rho| - 1.
//! ```
//!
//! Since `m^beta` has `rho` as its unique Rees valuation, `n * ord_rho(m^beta)
//! = <rho, beta>`, so `a = ord_rho(z^{alpha-1}) + 1 <= r`. An ideal is closed
//! iff every candidate component admits a certificate.
//!
//! Only the chosen ray's exponent has to satisfy `a <= r`: along the other
//! divisors the exponent can be raised freely without changing the
//! restricted current, so the report lists exactly one bound per component.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{build_complex, ComplexKind};
use crate::fan::{divisor_table, normal_fan, regularize, DivisorRow};
use crate::ideal::{Exponent, MonIdeal};
use crate::newton::{integral_closure, is_integrally_closed, ord, rees_valuations, Ray};
use crate::residue::residue_current;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub alpha: Exponent,
    pub rho: Ray,
    #[serde(with = "crate::serde_big::uint")]
    pub r: BigUint,
    #[serde(with = "crate::serde_big::uint")]
    pub ord_alpha_minus_one: BigUint,
    pub gamma: Exponent,
    #[serde(with = "crate::serde_big::uint")]
    pub k: BigUint,
    pub beta: Exponent,
    /// `ord_rho(m^beta)`.
    #[serde(with = "crate::serde_big::uint")]
    pub ord_pure_powers: BigUint,
    #[serde(with = "crate::serde_big::uint")]
    pub ord_dz: BigUint,
    #[serde(with = "crate::serde_big::int")]
    pub a: BigInt,
}

impl Certificate {
    /// Re-checks the defining inequalities and identities.
    pub fn verify(&self) -> Result<()> {
        let n = self.alpha.dim();
        let fail = |what: &str| Err(Error::Invariant(format!("certificate for {}: {what}", self.alpha)));
        if self.ord_alpha_minus_one >= self.r {
            return fail("ord(alpha - 1) is not below r");
        }
        if !self.alpha.divides(&self.beta) {
            return fail("beta does not dominate alpha");
        }
        if BigUint::from(n) * &self.ord_pure_powers != ord(&self.rho, &self.beta)? {
            return fail("n * ord(m^beta) differs from ord(beta)");
        }
        let bound = BigInt::from(self.ord_alpha_minus_one.clone()) + 1;
        if self.a > bound || bound > BigInt::from(self.r.clone()) {
            return fail("a <= ord(alpha - 1) + 1 <= r fails");
        }
        Ok(())
    }
}

/// Per-ray data explaining why no certificate exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayOrder {
    pub rho: Ray,
    #[serde(with = "crate::serde_big::uint")]
    pub ord_alpha_minus_one: BigUint,
    #[serde(with = "crate::serde_big::uint")]
    pub r: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureWitness {
    pub alpha: Exponent,
    pub rays: Vec<RayOrder>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Outcome {
    Certified(Certificate),
    Failed(FailureWitness),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub vertices: Vec<usize>,
    pub alpha: Exponent,
    pub outcome: Outcome,
}

impl ComponentReport {
    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.outcome {
            Outcome::Certified(c) => Some(c),
            Outcome::Failed(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&FailureWitness> {
        match &self.outcome {
            Outcome::Failed(w) => Some(w),
            Outcome::Certified(_) => None,
        }
    }
}

/// Two exponents reported for `(z_1^l, ..., z_n^l)`: the improved one
/// `(n-1)l + 1`, and `nl - n + 1` from the Bochner-Martinelli bound minus
/// the order of `dz`. They agree only when `l = n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualPowerExponents {
    pub l: u64,
    pub improved: u64,
    pub bochner_martinelli: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertReport {
    pub ideal: MonIdeal,
    pub complex: ComplexKind,
    pub closed: bool,
    pub rees: Vec<ReesValuation>,
    pub components: Vec<ComponentReport>,
    pub provably_zero: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub equal_powers: Option<EqualPowerExponents>,
}

/// A Rees valuation with its ideal order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesValuation {
    pub rho: Ray,
    #[serde(with = "crate::serde_big::uint")]
    pub r: BigUint,
}

impl CertReport {
    pub fn certificates(&self) -> impl Iterator<Item = &Certificate> {
        self.components.iter().filter_map(ComponentReport::certificate)
    }

    pub fn witnesses(&self) -> impl Iterator<Item = &FailureWitness> {
        self.components.iter().filter_map(ComponentReport::witness)
    }
}

fn certificate_on(alpha: &Exponent, rho: &Ray, r: &BigUint, below: &Exponent) -> Result<Certificate> {
    let n = alpha.dim();
    if !rho.is_strictly_positive() {
        return Err(Error::Invariant(format!("Rees ray {rho} has a zero entry")));
    }
    let gamma = Exponent::new(
        (0..n)
            .map(|j| {
                rho.coords()
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .map(|(_, c)| c.clone())
                    .product()
            })
            .collect(),
    );
    let k = alpha
        .coords()
        .iter()
        .zip(gamma.coords())
        .map(|(a, g)| a.div_ceil(g))
        .max()
        .unwrap_or_default()
        .max(BigUint::one());
    let beta = gamma.scale(&k);
    let ord_pure_powers = rho
        .coords()
        .iter()
        .zip(beta.coords())
        .map(|(r, b)| r * b)
        .min()
        .unwrap_or_default();
    let excess = beta
        .checked_sub(alpha)
        .ok_or_else(|| Error::Invariant("beta below alpha".into()))?;
    let ord_dz = rho.ord_dz();
    let a = BigInt::from(BigUint::from(n) * &ord_pure_powers)
        - BigInt::from(ord(rho, &excess)?)
        - BigInt::from(ord_dz.clone());
    let cert = Certificate {
        alpha: alpha.clone(),
        rho: rho.clone(),
        r: r.clone(),
        ord_alpha_minus_one: ord(rho, below)?,
        gamma,
        k,
        beta,
        ord_pure_powers,
        ord_dz,
        a,
    };
    cert.verify()?;
    Ok(cert)
}

/// Picks the qualifying Rees ray with the largest deficit `r - ord(alpha-1)`,
/// breaking ties by the lexicographically smallest ray.
fn choose_certificate(
    alpha: &Exponent,
    ideal: &MonIdeal,
    rees: &[(Ray, BigUint)],
) -> Result<std::result::Result<Certificate, FailureWitness>> {
    alpha.check_dim(ideal.dim())?;
    let below = alpha.checked_sub(&Exponent::ones(ideal.dim())).ok_or_else(|| {
        Error::Precondition(format!("label {alpha} has a zero entry; its component vanishes"))
    })?;
    if ideal.contains(&below)? {
        return Err(Error::Precondition(format!(
            "z^(alpha-1) lies in the ideal for alpha = {alpha}; the component is provably zero"
        )));
    }
    let mut orders = Vec::with_capacity(rees.len());
    let mut best: Option<(BigUint, &Ray, &BigUint)> = None;
    for (rho, r) in rees {
        let o = ord(rho, &below)?;
        if o < *r {
            let deficit = r - &o;
            let better = match &best {
                None => true,
                Some((d, b, _)) => match deficit.cmp(d) {
                    Ordering::Greater => true,
                    Ordering::Equal => rho < *b,
                    Ordering::Less => false,
                },
            };
            if better {
                best = Some((deficit, rho, r));
            }
        }
        orders.push(RayOrder {
            rho: rho.clone(),
            ord_alpha_minus_one: o,
            r: r.clone(),
        });
    }
    match best {
        Some((_, rho, r)) => Ok(Ok(certificate_on(alpha, rho, r, &below)?)),
        None => Ok(Err(FailureWitness {
            alpha: alpha.clone(),
            rays: orders,
        })),
    }
}

/// Certificate for the component labeled `alpha`, if some Rees ray qualifies.
pub fn find_certificate(alpha: &Exponent, ideal: &MonIdeal) -> Result<Option<Certificate>> {
    let rees = rees_valuations(ideal)?;
    Ok(choose_certificate(alpha, ideal, &rees)?.ok())
}

fn equal_powers(ideal: &MonIdeal) -> Option<EqualPowerExponents> {
    let n = ideal.dim();
    if ideal.num_gens() != n || ideal.is_unit() {
        return None;
    }
    let l = ideal.pure_power_exponent(0)?.to_u64()?;
    if (0..n).any(|i| ideal.pure_power_exponent(i).and_then(ToPrimitive::to_u64) != Some(l)) {
        return None;
    }
    let n = n as u64;
    Some(EqualPowerExponents {
        l,
        improved: (n - 1) * l + 1,
        bochner_martinelli: n * l - n + 1,
    })
}

/// Runs the certificate engine on every candidate component of the residue
/// of the chosen cellular resolution.
pub fn certify_ideal(ideal: &MonIdeal, kind: ComplexKind) -> Result<CertReport> {
    ideal.require_artinian()?;
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let complex = build_complex(ideal, kind)?;
    let residue = residue_current(&complex, ideal)?;
    let rees = rees_valuations(ideal)?;
    let mut components = Vec::new();
    let mut provably_zero = 0;
    for c in &residue.components {
        if !c.is_candidate() {
            provably_zero += 1;
            continue;
        }
        let outcome = match choose_certificate(&c.alpha, ideal, &rees)? {
            Ok(cert) => Outcome::Certified(cert),
            Err(w) => Outcome::Failed(w),
        };
        components.push(ComponentReport {
            vertices: c.vertices.clone(),
            alpha: c.alpha.clone(),
            outcome,
        });
    }
    components.sort_by(|a, b| a.alpha.cmp(&b.alpha).then_with(|| a.vertices.cmp(&b.vertices)));
    let closed = components.iter().all(|c| c.certificate().is_some());
    Ok(CertReport {
        ideal: ideal.clone(),
        complex: kind,
        closed,
        rees: rees
            .into_iter()
            .map(|(rho, r)| ReesValuation { rho, r })
            .collect(),
        components,
        provably_zero,
        equal_powers: equal_powers(ideal),
    })
}

/// Whether the certificate decision agrees with the Newton-polyhedron test.
pub fn cross_validate(ideal: &MonIdeal) -> Result<bool> {
    let report = certify_ideal(ideal, ComplexKind::Taylor)?;
    Ok(report.closed == is_integrally_closed(ideal)?)
}

/// `closure(I)^nu ⊆ I`.
pub fn briancon_skoda_inclusion(ideal: &MonIdeal, nu: u32) -> Result<bool> {
    let closure = integral_closure(ideal)?;
    ideal.contains_ideal(&closure.power(nu)?)
}

/// Exponent used by [`briancon_skoda_check`]: `min(n, number of generators)`.
pub fn briancon_skoda_exponent(ideal: &MonIdeal) -> u32 {
    ideal.dim().min(ideal.num_gens()) as u32
}

pub fn briancon_skoda_check(ideal: &MonIdeal) -> Result<bool> {
    ideal.require_artinian()?;
    briancon_skoda_inclusion(ideal, briancon_skoda_exponent(ideal))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallnessRow {
    pub alpha: Exponent,
    pub rho: Ray,
    #[serde(with = "crate::serde_big::int")]
    pub a: BigInt,
    #[serde(with = "crate::serde_big::uint")]
    pub r: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallnessReport {
    pub ideal: MonIdeal,
    /// False when the fan module does not cover this dimension; the divisor
    /// table then lists only the Rees rays.
    pub fan_available: bool,
    pub divisors: Vec<DivisorRow>,
    pub components: Vec<SmallnessRow>,
}

/// Divisor table of a regular refinement together with the `(a, r)` pair of
/// each certified component on its chosen Rees ray.
pub fn smallness_report(ideal: &MonIdeal) -> Result<SmallnessReport> {
    let report = certify_ideal(ideal, ComplexKind::Taylor)?;
    if !report.closed {
        return Err(Error::NotIntegrallyClosed);
    }
    let (fan_available, divisors) = match normal_fan(ideal) {
        Ok(fan) => (true, divisor_table(&regularize(&fan)?, ideal)?),
        Err(Error::UnsupportedDimension(_)) => (
            false,
            report
                .rees
                .iter()
                .map(|v| DivisorRow {
                    rho: v.rho.clone(),
                    r: v.r.clone(),
                    ord_dz: v.rho.ord_dz(),
                    is_rees: true,
                })
                .collect(),
        ),
        Err(e) => return Err(e),
    };
    let components = report
        .certificates()
        .map(|c| SmallnessRow {
            alpha: c.alpha.clone(),
            rho: c.rho.clone(),
            a: c.a.clone(),
            r: c.r.clone(),
        })
        .collect::<Vec<_>>();
    if components.iter().any(|c| c.a > BigInt::from(c.r.clone())) {
        return Err(Error::Invariant("certified exponent exceeds its bound".into()));
    }
    debug_assert!(components.iter().all(|c| !c.r.is_zero()));
    Ok(SmallnessReport {
        ideal: ideal.clone(),
        fan_available,
        divisors,
        components,
    })
}
