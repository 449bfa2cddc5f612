//! Exponent vectors and monomial ideals.
//!
//! A monomial ideal in `n` variables is stored as the antichain of its minimal
//! exponent vectors. The empty antichain is the zero ideal and `{0}` is the
//! unit ideal. All coordinates are arbitrary-precision so that powers and
//! valuation offsets never overflow.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Upper bound on the number of lattice points scanned by box enumerations.
pub const MAX_BOX_POINTS: u64 = 20_000_000;

/// Exponent vector `a` of the monomial `z^a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Exponent(#[serde(with = "crate::serde_big::uint_vec")] Vec<BigUint>);

impl Exponent {
    pub fn new(coords: Vec<BigUint>) -> Self {
        Exponent(coords)
    }

    pub fn from_u64s(coords: &[u64]) -> Self {
        Exponent(coords.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Exponent(vec![BigUint::zero(); n])
    }

    /// The all-ones vector `(1, ..., 1)`.
    pub fn ones(n: usize) -> Self {
        Exponent(vec![BigUint::one(); n])
    }

    /// `k * e_i`.
    pub fn pure(n: usize, axis: usize, k: BigUint) -> Self {
        let mut v = vec![BigUint::zero(); n];
        v[axis] = k;
        Exponent(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigUint] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigUint> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Total degree `|a| = a_1 + ... + a_n`.
    pub fn degree(&self) -> BigUint {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`, i.e. `z^self` divides `z^other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum (the lcm exponent).
    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.max(b).clone())
                .collect(),
        )
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, or `None` when some coordinate would go negative.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        if !other.divides(self) {
            return None;
        }
        Some(Exponent(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn scale(&self, k: &BigUint) -> Exponent {
        Exponent(self.0.iter().map(|a| a * k).collect())
    }

    pub(crate) fn check_dim(&self, n: usize) -> Result<()> {
        if self.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.dim(),
            });
        }
        Ok(())
    }

    /// Coordinates as machine integers, for lattice enumeration.
    pub fn to_u64s(&self) -> Result<Vec<u64>> {
        self.0
            .iter()
            .map(|c| {
                c.to_u64()
                    .ok_or_else(|| Error::EnumerationTooLarge(format!("coordinate {c}")))
            })
            .collect()
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl<const N: usize> From<[u64; N]> for Exponent {
    fn from(v: [u64; N]) -> Self {
        Exponent::from_u64s(&v)
    }
}

impl From<Vec<u64>> for Exponent {
    fn from(v: Vec<u64>) -> Self {
        Exponent::from_u64s(&v)
    }
}

/// All lattice points of the box `[0, upper]` (inclusive), in lexicographic order.
pub(crate) fn box_points(upper: &[u64]) -> Result<impl Iterator<Item = Exponent>> {
    let mut count: u64 = 1;
    for &u in upper {
        count = count
            .checked_mul(u + 1)
            .filter(|&c| c <= MAX_BOX_POINTS)
            .ok_or_else(|| Error::EnumerationTooLarge(format!("box below {upper:?}")))?;
    }
    let ranges: Vec<_> = upper.iter().map(|&u| 0..=u).collect();
    Ok(ranges
        .into_iter()
        .multi_cartesian_product()
        .map(|v| Exponent::from_u64s(&v)))
}

/// Monomial ideal given by its minimal generators.
///
/// Generators are kept in descending lexicographic order, so `(x^3, xy, y^2)`
/// lists `x^3` first. Vertex numbering of cell complexes follows this order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonIdeal {
    #[serde(rename = "n")]
    dim: usize,
    #[serde(rename = "generators")]
    gens: Vec<Exponent>,
}

impl MonIdeal {
    /// Minimalizes `raw` into an antichain of generators.
    pub fn new(dim: usize, raw: impl IntoIterator<Item = Exponent>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let raw: Vec<Exponent> = raw.into_iter().collect();
        for e in &raw {
            e.check_dim(dim)?;
        }
        Ok(MonIdeal {
            dim,
            gens: minimal_elements(raw),
        })
    }

    pub fn from_u64s(dim: usize, raw: &[&[u64]]) -> Result<Self> {
        MonIdeal::new(dim, raw.iter().map(|v| Exponent::from_u64s(v)))
    }

    pub fn zero(dim: usize) -> Self {
        MonIdeal { dim, gens: vec![] }
    }

    pub fn unit(dim: usize) -> Self {
        MonIdeal {
            dim,
            gens: vec![Exponent::zero(dim)],
        }
    }

    /// `m^beta = (z_1^{beta_1}, ..., z_n^{beta_n})`.
    pub fn pure_powers(beta: &Exponent) -> Result<Self> {
        let n = beta.dim();
        MonIdeal::new(
            n,
            beta.coords()
                .iter()
                .enumerate()
                .map(|(i, b)| Exponent::pure(n, i, b.clone())),
        )
    }

    /// `m^l`: all monomials of total degree `l` in `n` variables.
    pub fn maximal_power(n: usize, l: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let upper = vec![l; n];
        let gens = box_points(&upper)?.filter(|e| e.degree() == BigUint::from(l));
        MonIdeal::new(n, gens)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Exponent::is_zero)
    }

    fn check_same_dim(&self, other: &MonIdeal) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub(crate) fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(())
    }

    pub(crate) fn require_artinian(&self) -> Result<()> {
        if !self.is_artinian()? {
            return Err(Error::NotArtinian);
        }
        Ok(())
    }

    /// Whether `z^a` lies in the ideal.
    pub fn contains(&self, a: &Exponent) -> Result<bool> {
        a.check_dim(self.dim)?;
        Ok(self.gens.iter().any(|g| g.divides(a)))
    }

    /// `other ⊆ self`, tested generator-wise.
    pub fn contains_ideal(&self, other: &MonIdeal) -> Result<bool> {
        self.check_same_dim(other)?;
        Ok(other.gens.iter().all(|g| self.gens.iter().any(|h| h.divides(g))))
    }

    /// True iff every variable has a pure power among the generators.
    pub fn is_artinian(&self) -> Result<bool> {
        self.require_nonzero()?;
        if self.is_unit() {
            return Ok(true);
        }
        Ok((0..self.dim).all(|i| self.pure_power_exponent(i).is_some()))
    }

    /// Smallest `k` with `z_i^k` a generator.
    pub fn pure_power_exponent(&self, axis: usize) -> Option<&BigUint> {
        self.gens
            .iter()
            .find(|g| {
                g.coords()
                    .iter()
                    .enumerate()
                    .all(|(j, c)| j == axis || c.is_zero())
            })
            .map(|g| &g.coords()[axis])
    }

    pub fn intersect(&self, other: &MonIdeal) -> Result<MonIdeal> {
        self.check_same_dim(other)?;
        let raw = self
            .gens
            .iter()
            .cartesian_product(&other.gens)
            .map(|(g, h)| g.lcm(h));
        MonIdeal::new(self.dim, raw)
    }

    /// Intersection of a family of ideals; the empty family gives the unit ideal.
    pub fn intersect_all<'a>(
        dim: usize,
        ideals: impl IntoIterator<Item = &'a MonIdeal>,
    ) -> Result<MonIdeal> {
        ideals
            .into_iter()
            .try_fold(MonIdeal::unit(dim), |acc, i| acc.intersect(i))
    }

    pub fn product(&self, other: &MonIdeal) -> Result<MonIdeal> {
        self.check_same_dim(other)?;
        let raw = self
            .gens
            .iter()
            .cartesian_product(&other.gens)
            .map(|(g, h)| g.add(h));
        MonIdeal::new(self.dim, raw)
    }

    pub fn power(&self, k: u32) -> Result<MonIdeal> {
        if k == 0 {
            return Err(Error::Precondition("power exponent must be positive".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Componentwise maximum over the generators.
    pub fn bounding_exponent(&self) -> Exponent {
        self.gens
            .iter()
            .fold(Exponent::zero(self.dim), |acc, g| acc.lcm(g))
    }

    pub fn standard_monomials(&self) -> Result<StdMonomialSet> {
        self.require_artinian()?;
        let upper = self.bounding_exponent().to_u64s()?;
        let mut monomials = Vec::new();
        for a in box_points(&upper)? {
            if !self.gens.iter().any(|g| g.divides(&a)) {
                monomials.push(a);
            }
        }
        Ok(StdMonomialSet { monomials })
    }

    /// Exponents `alpha` with `I = ⋂ m^alpha`, one per maximal standard monomial.
    pub fn irreducible_decomposition(&self) -> Result<Vec<Exponent>> {
        let std = self.standard_monomials()?;
        let ones = Exponent::ones(self.dim);
        Ok(std.maximal().into_iter().map(|s| s.add(&ones)).collect())
    }
}

impl fmt::Display for MonIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "<{}>", self.gens.iter().join(", "))
    }
}

/// Divisibility-minimal elements, deduplicated, in descending lex order.
pub fn minimal_elements(raw: Vec<Exponent>) -> Vec<Exponent> {
    let mut sorted: Vec<Exponent> = raw
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    // Sorting by degree first lets each element be checked only against kept ones.
    sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    let mut kept: Vec<Exponent> = Vec::new();
    for e in sorted {
        if !kept.iter().any(|k| k.divides(&e)) {
            kept.push(e);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

/// The monomials outside an Artinian ideal, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StdMonomialSet {
    monomials: Vec<Exponent>,
}

impl StdMonomialSet {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, a: &Exponent) -> bool {
        self.monomials.binary_search(a).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Exponent> {
        self.monomials.iter()
    }

    /// Elements not strictly below any other element.
    pub fn maximal(&self) -> Vec<Exponent> {
        self.monomials
            .iter()
            .filter(|s| {
                (0..s.dim()).all(|i| {
                    let mut up = (*s).clone().into_coords();
                    up[i] += 1u32;
                    !self.contains(&Exponent::new(up))
                })
            })
            .cloned()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u64]]) -> MonIdeal {
        MonIdeal::from_u64s(n, gens).unwrap()
    }

    fn gens(i: &MonIdeal) -> Vec<Vec<u64>> {
        i.gens().iter().map(|g| g.to_u64s().unwrap()).collect()
    }

    #[test]
    fn minimalize_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[2, 2]]);
        assert_eq!(gens(&i), vec![vec![2, 0], vec![1, 1]]);
        let u = ideal(2, &[&[0, 0]]);
        assert!(u.is_unit());
        assert_eq!(gens(&u), vec![vec![0, 0]]);
        let m2 = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(gens(&m2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        let again = MonIdeal::new(2, m2.gens().to_vec()).unwrap();
        assert_eq!(again, m2);
    }

    #[test]
    fn minimalize_rejects_mixed_dimensions() {
        let err = MonIdeal::new(2, vec![Exponent::from([1, 0]), Exponent::from([1])]);
        assert_eq!(
            err,
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(MonIdeal::new(0, vec![]), Err(Error::ZeroDimension));
    }

    #[test]
    fn membership() {
        let m2 = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert!(m2.contains(&Exponent::from([1, 1])).unwrap());
        let ci = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(!ci.contains(&Exponent::from([1, 1])).unwrap());
        let j = ideal(2, &[&[3, 0], &[0, 2]]);
        assert!(!j.contains(&Exponent::from([2, 1])).unwrap());
        assert!(j.contains(&Exponent::from([1])).is_err());
    }

    #[test]
    fn artinian() {
        assert!(ideal(2, &[&[2, 0], &[0, 2]]).is_artinian().unwrap());
        assert!(!ideal(2, &[&[2, 0], &[1, 1]]).is_artinian().unwrap());
        assert!(MonIdeal::unit(3).is_artinian().unwrap());
        assert_eq!(MonIdeal::zero(2).is_artinian(), Err(Error::ZeroIdeal));
    }

    #[test]
    fn intersections() {
        let a = ideal(2, &[&[2, 0], &[0, 1]]);
        let b = ideal(2, &[&[1, 0], &[0, 2]]);
        // pairwise maxima: (2,0),(2,2),(1,1),(0,2)
        assert_eq!(
            gens(&a.intersect(&b).unwrap()),
            vec![vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        assert_eq!(a.intersect(&MonIdeal::unit(2)).unwrap(), a);
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert!(a.intersect(&MonIdeal::unit(3)).is_err());
    }

    #[test]
    fn powers() {
        let m2 = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(
            gens(&m2.power(2).unwrap()),
            vec![vec![4, 0], vec![3, 1], vec![2, 2], vec![1, 3], vec![0, 4]]
        );
        assert_eq!(m2.power(1).unwrap(), m2);
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(m.power(2).unwrap(), m2);
        assert!(m.power(0).is_err());
        assert_eq!(MonIdeal::maximal_power(2, 2).unwrap(), m2);
    }

    #[test]
    fn standard_monomial_sets() {
        let m2 = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let s = m2.standard_monomials().unwrap();
        let got: Vec<_> = s.iter().map(|e| e.to_u64s().unwrap()).collect();
        assert_eq!(got, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        assert_eq!(ideal(2, &[&[1, 0], &[0, 1]]).standard_monomials().unwrap().len(), 1);
        assert!(MonIdeal::unit(2).standard_monomials().unwrap().is_empty());
        assert_eq!(
            ideal(2, &[&[2, 0], &[1, 1]]).standard_monomials(),
            Err(Error::NotArtinian)
        );
    }

    #[test]
    fn irreducible_components() {
        let decomp = |i: MonIdeal| -> Vec<Vec<u64>> {
            let mut v: Vec<_> = i
                .irreducible_decomposition()
                .unwrap()
                .iter()
                .map(|e| e.to_u64s().unwrap())
                .collect();
            v.sort();
            v
        };
        assert_eq!(decomp(ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(decomp(ideal(2, &[&[2, 0], &[0, 2]])), vec![vec![2, 2]]);
        assert_eq!(decomp(ideal(2, &[&[1, 0], &[0, 1]])), vec![vec![1, 1]]);
    }
}
