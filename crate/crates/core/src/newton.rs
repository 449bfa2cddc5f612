//! Newton polyhedra of monomial ideals, their compact facets, the associated
//! monomial (Rees) valuations, and integral closure.
//!
//! For an Artinian ideal `I` the Newton polyhedron `NP(I)` is the convex hull
//! of the generator exponents plus the positive orthant. Its compact facets
//! have strictly positive primitive inward normals `rho`, and
//!
//! ```text
//! a ∈ NP(I)  <=>  <rho, a> >= min_g <rho, g>   for every compact facet normal rho.
//! ```
//!
//! These normals are exactly the Rees valuations of `I`, and the lattice points
//! of `NP(I)` are the exponents of the integral closure.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ideal::{box_points, Exponent, MonIdeal};
use crate::linalg::cofactor_normal;
use crate::{Error, Result};

/// Primitive non-negative lattice vector; defines the monomial valuation
/// `ord_rho(z^a) = <rho, a>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Exponent", into = "Exponent")]
pub struct Ray(Vec<BigUint>);

impl Ray {
    /// Builds the primitive vector on the ray through `coords`.
    pub fn new(coords: Vec<BigUint>) -> Result<Self> {
        let g = coords.iter().fold(BigUint::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return Err(Error::Input("ray must have a nonzero entry".into()));
        }
        Ok(Ray(coords.into_iter().map(|c| c / &g).collect()))
    }

    pub fn from_u64s(coords: &[u64]) -> Result<Self> {
        Ray::new(coords.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Unit coordinate vector `e_axis`.
    pub fn axis(n: usize, axis: usize) -> Self {
        let mut v = vec![BigUint::zero(); n];
        v[axis] = BigUint::one();
        Ray(v)
    }

    fn from_signed(v: &[BigInt]) -> Option<Self> {
        if v.iter().any(|x| x.sign() == Sign::Minus) {
            return None;
        }
        Ray::new(v.iter().map(|x| x.magnitude().clone()).collect()).ok()
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigUint] {
        &self.0
    }

    pub fn to_signed(&self) -> Vec<BigInt> {
        self.0.iter().map(|c| BigInt::from(c.clone())).collect()
    }

    /// `|rho| = rho_1 + ... + rho_n`.
    pub fn weight(&self) -> BigUint {
        self.0.iter().sum()
    }

    /// Order of vanishing of `dz_1 ∧ ... ∧ dz_n` along the toric divisor of
    /// this ray: `|rho| - 1`.
    pub fn ord_dz(&self) -> BigUint {
        self.weight() - 1u32
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.0.iter().all(|c| !c.is_zero())
    }
}

impl TryFrom<Exponent> for Ray {
    type Error = Error;

    fn try_from(e: Exponent) -> Result<Self> {
        let coords = e.into_coords();
        let ray = Ray::new(coords.clone())?;
        if ray.0 != coords {
            return Err(Error::Input(format!("ray {coords:?} is not primitive")));
        }
        Ok(ray)
    }
}

impl From<Ray> for Exponent {
    fn from(r: Ray) -> Self {
        Exponent::new(r.0)
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// `ord_rho(z^a) = <rho, a>`.
pub fn ord(rho: &Ray, a: &Exponent) -> Result<BigUint> {
    a.check_dim(rho.dim())?;
    Ok(rho.0.iter().zip(a.coords()).map(|(r, x)| r * x).sum())
}

/// `ord_rho(I) = min over generators g of <rho, g>`.
pub fn ideal_order(rho: &Ray, ideal: &MonIdeal) -> Result<BigUint> {
    ideal.require_nonzero()?;
    if rho.dim() != ideal.dim() {
        return Err(Error::DimensionMismatch {
            expected: ideal.dim(),
            found: rho.dim(),
        });
    }
    let mut best: Option<BigUint> = None;
    for g in ideal.gens() {
        let v = ord(rho, g)?;
        if best.as_ref().is_none_or(|b| v < *b) {
            best = Some(v);
        }
    }
    Ok(best.expect("nonzero ideal has generators"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactFacet {
    pub normal: Ray,
    #[serde(with = "crate::serde_big::uint")]
    pub offset: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonPolyhedron {
    #[serde(rename = "n")]
    pub dim: usize,
    pub facets: Vec<CompactFacet>,
}

impl NewtonPolyhedron {
    /// Lattice-point membership through the compact facet inequalities.
    pub fn contains(&self, a: &Exponent) -> Result<bool> {
        a.check_dim(self.dim)?;
        for f in &self.facets {
            if ord(&f.normal, a)? < f.offset {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Compact facets of `NP(I)` in lexicographic order of their normals.
///
/// Every `n`-subset of generators that spans a hyperplane with a strictly
/// positive normal supporting all generators determines a compact facet;
/// subsets on the same facet are deduplicated by normal.
pub fn compact_facets(ideal: &MonIdeal) -> Result<NewtonPolyhedron> {
    ideal.require_artinian()?;
    let n = ideal.dim();
    let gens = ideal.gens();
    let signed: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|g| g.coords().iter().map(|c| BigInt::from(c.clone())).collect())
        .collect();
    let mut found: BTreeMap<Ray, BigUint> = BTreeMap::new();
    for subset in (0..gens.len()).combinations(n) {
        let base = &signed[subset[0]];
        let diffs: Vec<Vec<BigInt>> = subset[1..]
            .iter()
            .map(|&i| signed[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let mut normal = if n == 1 {
            vec![BigInt::one()]
        } else {
            cofactor_normal(&diffs, n)
        };
        if normal.iter().all(|x| !x.is_positive()) {
            normal.iter_mut().for_each(|x| *x = -x.clone());
        }
        let Some(rho) = Ray::from_signed(&normal) else {
            continue;
        };
        if !rho.is_strictly_positive() || found.contains_key(&rho) {
            continue;
        }
        let offset = ord(&rho, &gens[subset[0]])?;
        let supports_all = gens
            .iter()
            .map(|g| ord(&rho, g))
            .collect::<Result<Vec<_>>>()?
            .iter()
            .all(|v| *v >= offset);
        if supports_all {
            found.insert(rho, offset);
        }
    }
    Ok(NewtonPolyhedron {
        dim: n,
        facets: found
            .into_iter()
            .map(|(normal, offset)| CompactFacet { normal, offset })
            .collect(),
    })
}

/// Rees valuations `(rho, ord_rho(I))`, one per compact facet.
pub fn rees_valuations(ideal: &MonIdeal) -> Result<Vec<(Ray, BigUint)>> {
    Ok(compact_facets(ideal)?
        .facets
        .into_iter()
        .map(|f| (f.normal, f.offset))
        .collect())
}

/// Minimal generators of the lattice points of `NP(I)`.
///
/// Minimal lattice points of `NP(I)` lie in the box below the componentwise
/// maximum of the generators, so only that box is scanned.
pub fn integral_closure(ideal: &MonIdeal) -> Result<MonIdeal> {
    let np = compact_facets(ideal)?;
    let upper = ideal.bounding_exponent().to_u64s()?;
    let mut points = Vec::new();
    for a in box_points(&upper)? {
        if np.contains(&a)? {
            points.push(a);
        }
    }
    MonIdeal::new(ideal.dim(), points)
}

pub fn is_integrally_closed(ideal: &MonIdeal) -> Result<bool> {
    Ok(integral_closure(ideal)? == *ideal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u64]]) -> MonIdeal {
        MonIdeal::from_u64s(n, gens).unwrap()
    }

    fn ray(v: &[u64]) -> Ray {
        Ray::from_u64s(v).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn valuation_orders() {
        assert_eq!(ord(&ray(&[2, 3]), &Exponent::from([1, 1])).unwrap(), big(5));
        assert_eq!(ord(&ray(&[1, 1]), &Exponent::from([0, 0])).unwrap(), big(0));
        assert_eq!(ord(&ray(&[1, 0]), &Exponent::from([3, 7])).unwrap(), big(3));
        let ci = ideal(2, &[&[3, 0], &[0, 2]]);
        assert_eq!(ideal_order(&ray(&[2, 3]), &ci).unwrap(), big(6));
        assert_eq!(ideal_order(&ray(&[1, 0]), &ci).unwrap(), big(0));
        let m2 = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(ideal_order(&ray(&[1, 1]), &m2).unwrap(), big(2));
        assert_eq!(ideal_order(&ray(&[1, 1]), &MonIdeal::zero(2)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn rays_are_primitive() {
        assert_eq!(ray(&[4, 6]), ray(&[2, 3]));
        assert!(Ray::from_u64s(&[0, 0]).is_err());
        assert!(Ray::try_from(Exponent::from([2, 4])).is_err());
        assert_eq!(ray(&[2, 3]).ord_dz(), big(4));
    }

    #[test]
    fn facets_of_small_ideals() {
        let m2 = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let np = compact_facets(&m2).unwrap();
        assert_eq!(np.facets, vec![CompactFacet { normal: ray(&[1, 1]), offset: big(2) }]);

        let ci = ideal(2, &[&[3, 0], &[0, 2]]);
        let np = compact_facets(&ci).unwrap();
        assert_eq!(np.facets, vec![CompactFacet { normal: ray(&[2, 3]), offset: big(6) }]);

        let two = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        let np = compact_facets(&two).unwrap();
        assert_eq!(
            np.facets,
            vec![
                CompactFacet { normal: ray(&[1, 1]), offset: big(2) },
                CompactFacet { normal: ray(&[2, 1]), offset: big(3) },
            ]
        );
        assert_eq!(
            compact_facets(&ideal(2, &[&[2, 0], &[1, 1]])),
            Err(Error::NotArtinian)
        );
    }

    #[test]
    fn one_variable_is_total() {
        let i = ideal(1, &[&[5]]);
        assert_eq!(rees_valuations(&i).unwrap(), vec![(ray(&[1]), big(5))]);
        assert!(is_integrally_closed(&i).unwrap());
    }

    #[test]
    fn closures() {
        let ci = ideal(2, &[&[2, 0], &[0, 2]]);
        let m2 = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(integral_closure(&ci).unwrap(), m2);
        assert_eq!(integral_closure(&m2).unwrap(), m2);
        let ci32 = ideal(2, &[&[3, 0], &[0, 2]]);
        assert_eq!(
            integral_closure(&ci32).unwrap(),
            ideal(2, &[&[3, 0], &[2, 1], &[0, 2]])
        );
        assert!(is_integrally_closed(&m2).unwrap());
        assert!(!is_integrally_closed(&ci).unwrap());
        assert_eq!(integral_closure(&MonIdeal::unit(2)).unwrap(), MonIdeal::unit(2));
    }

    #[test]
    fn rees_examples() {
        let ci32 = ideal(2, &[&[3, 0], &[0, 2]]);
        assert_eq!(rees_valuations(&ci32).unwrap(), vec![(ray(&[2, 3]), big(6))]);
        for l in 1..=4u64 {
            let a = MonIdeal::pure_powers(&Exponent::from([l, l, l])).unwrap();
            assert_eq!(rees_valuations(&a).unwrap(), vec![(ray(&[1, 1, 1]), big(l))]);
        }
    }
}
