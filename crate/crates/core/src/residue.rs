//! Combinatorial support of the residue current of a cellular resolution.
//!
//! For an Artinian monomial ideal the current lives in top degree `n`: one
//! component `c_tau R_alpha` for each face `tau` of `K_n`, where `z^alpha` is
//! the label of `tau` and
//!
//! ```text
//! R_alpha = dbar(1/z_n^{alpha_n}) ∧ ... ∧ dbar(1/z_1^{alpha_1}).
//! ```
//!
//! The coefficients `c_tau` are not computed. Instead each component is
//! classified: if `z^{alpha-1}` lies in the ideal then `c_tau` must vanish,
//! otherwise the component is kept as a candidate. Monomials act on `R_alpha`
//! by lowering exponents, so `z^beta R_alpha = 0` exactly when some
//! `beta_i >= alpha_i`.

use serde::{Deserialize, Serialize};

use crate::complex::{is_cellular_resolution, LabeledComplex};
use crate::ideal::{Exponent, MonIdeal};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoeffStatus {
    CandidateNonzero,
    ProvablyZero,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueComponent {
    /// Index of the face in `K_n`.
    pub face: usize,
    pub vertices: Vec<usize>,
    pub alpha: Exponent,
    pub status: CoeffStatus,
}

impl ResidueComponent {
    pub fn is_candidate(&self) -> bool {
        self.status == CoeffStatus::CandidateNonzero
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalResidue {
    #[serde(rename = "n")]
    pub dim: usize,
    pub components: Vec<ResidueComponent>,
}

impl FormalResidue {
    pub fn candidates(&self) -> impl Iterator<Item = &ResidueComponent> {
        self.components.iter().filter(|c| c.is_candidate())
    }
}

/// Classifies a top-degree label. A zero coordinate makes `R_alpha` itself
/// vanish, since `dbar(1/z_i^0) = 0`.
pub fn classify(alpha: &Exponent, ideal: &MonIdeal) -> Result<CoeffStatus> {
    match alpha.checked_sub(&Exponent::ones(alpha.dim())) {
        None => Ok(CoeffStatus::ProvablyZero),
        Some(below) if ideal.contains(&below)? => Ok(CoeffStatus::ProvablyZero),
        Some(_) => Ok(CoeffStatus::CandidateNonzero),
    }
}

/// One component per face of `K_n`.
pub fn residue_current(complex: &LabeledComplex, ideal: &MonIdeal) -> Result<FormalResidue> {
    ideal.require_artinian()?;
    if !is_cellular_resolution(complex, ideal)? {
        return Err(Error::NotAResolution);
    }
    let n = ideal.dim();
    let components = complex
        .faces(n)
        .iter()
        .enumerate()
        .map(|(face, f)| {
            Ok(ResidueComponent {
                face,
                vertices: f.vertices.clone(),
                alpha: f.label.clone(),
                status: classify(&f.label, ideal)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FormalResidue { dim: n, components })
}

/// `z^beta * R_alpha = 0`, i.e. some `beta_i >= alpha_i`.
pub fn monomial_annihilates(beta: &Exponent, alpha: &Exponent) -> Result<bool> {
    beta.check_dim(alpha.dim())?;
    Ok(beta
        .coords()
        .iter()
        .zip(alpha.coords())
        .any(|(b, a)| b >= a))
}

/// Intersection of `m^alpha` over the candidate components.
pub fn annihilator(residue: &FormalResidue) -> Result<MonIdeal> {
    let parts = residue
        .candidates()
        .map(|c| MonIdeal::pure_powers(&c.alpha))
        .collect::<Result<Vec<_>>>()?;
    if parts.is_empty() {
        return Err(Error::EmptySupport);
    }
    MonIdeal::intersect_all(residue.dim, &parts)
}

/// Whether the annihilator of the residue equals `ideal`.
pub fn duality_check(complex: &LabeledComplex, ideal: &MonIdeal) -> Result<bool> {
    Ok(annihilator(&residue_current(complex, ideal)?)? == *ideal)
}
