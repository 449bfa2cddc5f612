//! Normal fans of Newton polyhedra and their regular refinements.
//!
//! A regular fan with support `R^n_+` that contains every compact-facet normal
//! as a ray gives a toric log-resolution; each ray `rho` is an exceptional
//! divisor whose order is the monomial valuation `ord_rho`. Only rays and
//! cones are modeled here.
//!
//! In the plane the refinement is the continued-fraction (Hirzebruch-Jung)
//! subdivision and is canonical. In dimension three non-regular cones are
//! star-subdivided at the smallest lattice point of their fundamental
//! parallelepiped until every cone is unimodular.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ideal::{box_points, Exponent, MonIdeal};
use crate::linalg::{det, maximal_minor_gcd, rank};
use crate::newton::{compact_facets, ideal_order, Ray};
use crate::{Error, Result};

/// Default iteration cap for three-dimensional refinement.
pub const DEFAULT_ITERATION_CAP: usize = 10_000;

/// Simplicial cone given by indices into the fan's ray list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cone {
    pub rays: Vec<usize>,
}

impl Cone {
    pub fn dimension(&self) -> usize {
        self.rays.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    #[serde(rename = "n")]
    pub dim: usize,
    pub rays: Vec<Ray>,
    pub cones: Vec<Cone>,
}

impl Fan {
    fn ray_rows(&self, cone: &Cone) -> Vec<Vec<BigInt>> {
        cone.rays.iter().map(|&i| self.rays[i].to_signed()).collect()
    }

    /// Determinants of consecutive rays, for planar fans in angular order.
    pub fn consecutive_determinants(&self) -> Vec<BigInt> {
        self.rays
            .windows(2)
            .map(|w| det2(&w[0].to_signed(), &w[1].to_signed()))
            .collect()
    }

    pub fn is_regular(&self) -> bool {
        self.cones.iter().all(|c| is_regular(c, self))
    }
}

fn det2(u: &[BigInt], v: &[BigInt]) -> BigInt {
    &u[0] * &v[1] - &u[1] * &v[0]
}

fn angular_cmp(u: &Ray, v: &Ray) -> Ordering {
    match det2(&u.to_signed(), &v.to_signed()).sign() {
        Sign::Plus => Ordering::Less,
        Sign::Minus => Ordering::Greater,
        Sign::NoSign => Ordering::Equal,
    }
}

fn check_dim(n: usize) -> Result<()> {
    if n == 2 || n == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(n))
    }
}

/// Normal fan of `NP(I)` restricted to the positive orthant.
pub fn normal_fan(ideal: &MonIdeal) -> Result<Fan> {
    check_dim(ideal.dim())?;
    let np = compact_facets(ideal)?;
    let n = ideal.dim();
    if n == 2 {
        let mut rays: Vec<Ray> = np.facets.iter().map(|f| f.normal.clone()).collect();
        rays.sort_by(angular_cmp);
        rays.insert(0, Ray::axis(2, 0));
        rays.push(Ray::axis(2, 1));
        let cones = (0..rays.len() - 1)
            .map(|i| Cone { rays: vec![i, i + 1] })
            .collect();
        return Ok(Fan { dim: 2, rays, cones });
    }

    // Facets of NP(I): coordinate hyperplanes and the compact facets.
    let mut rays: Vec<Ray> = (0..n).map(|i| Ray::axis(n, i)).collect();
    let mut offsets: Vec<BigUint> = vec![BigUint::zero(); n];
    for f in &np.facets {
        rays.push(f.normal.clone());
        offsets.push(f.offset.clone());
    }
    let signed: Vec<Vec<BigInt>> = rays.iter().map(Ray::to_signed).collect();
    let mut cones: BTreeSet<Cone> = BTreeSet::new();
    for g in ideal.gens() {
        let on: Vec<usize> = (0..rays.len())
            .filter(|&i| {
                let v: BigUint = rays[i].coords().iter().zip(g.coords()).map(|(r, x)| r * x).sum();
                v == offsets[i]
            })
            .collect();
        let rows: Vec<Vec<BigInt>> = on.iter().map(|&i| signed[i].clone()).collect();
        if rank(&rows) < n {
            continue;
        }
        for tri in triangulate_cone(&on, &signed)? {
            cones.insert(tri);
        }
    }
    Ok(canonical(Fan {
        dim: n,
        rays,
        cones: cones.into_iter().collect(),
    }))
}

/// Fan triangulation of a pointed 3-dimensional cone from its extreme rays.
fn triangulate_cone(members: &[usize], signed: &[Vec<BigInt>]) -> Result<Vec<Cone>> {
    if members.len() == 3 {
        let mut rays = members.to_vec();
        rays.sort_unstable();
        return Ok(vec![Cone { rays }]);
    }
    let d3 = |a: usize, b: usize, c: usize| {
        det(&[signed[a].clone(), signed[b].clone(), signed[c].clone()])
    };
    let mut neighbours: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (x, &a) in members.iter().enumerate() {
        for &b in &members[x + 1..] {
            let signs: BTreeSet<Sign> = members
                .iter()
                .filter(|&&c| c != a && c != b)
                .map(|&c| d3(a, b, c).sign())
                .collect();
            if signs.len() == 1 && !signs.contains(&Sign::NoSign) {
                neighbours.entry(a).or_default().push(b);
                neighbours.entry(b).or_default().push(a);
            }
        }
    }
    if members.iter().any(|m| neighbours.get(m).map_or(0, Vec::len) != 2) {
        return Err(Error::Invariant("vertex cone is not a pointed polygonal cone".into()));
    }
    let start = *members.iter().min().expect("nonempty");
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = neighbours[&start][0];
    while cur != start {
        cycle.push(cur);
        let next = neighbours[&cur].iter().copied().find(|&x| x != prev).expect("degree 2");
        prev = cur;
        cur = next;
    }
    Ok((1..cycle.len() - 1)
        .map(|i| {
            let mut rays = vec![cycle[0], cycle[i], cycle[i + 1]];
            rays.sort_unstable();
            Cone { rays }
        })
        .collect())
}

/// Sorts rays (angular order in the plane, lexicographic otherwise) and
/// renumbers the cones accordingly.
fn canonical(fan: Fan) -> Fan {
    let mut order: Vec<usize> = (0..fan.rays.len()).collect();
    if fan.dim == 2 {
        order.sort_by(|&a, &b| angular_cmp(&fan.rays[a], &fan.rays[b]));
    } else {
        order.sort_by(|&a, &b| fan.rays[a].cmp(&fan.rays[b]));
    }
    let mut position = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    let rays = order.iter().map(|&i| fan.rays[i].clone()).collect();
    let mut cones: Vec<Cone> = fan
        .cones
        .into_iter()
        .map(|c| {
            let mut r: Vec<usize> = c.rays.iter().map(|&i| position[i]).collect();
            r.sort_unstable();
            Cone { rays: r }
        })
        .collect();
    cones.sort();
    cones.dedup();
    Fan {
        dim: fan.dim,
        rays,
        cones,
    }
}

/// A cone is regular when its rays extend to a lattice basis: unit
/// determinant in full dimension, unit maximal-minor gcd otherwise.
pub fn is_regular(cone: &Cone, fan: &Fan) -> bool {
    let rows = fan.ray_rows(cone);
    if rows.len() == fan.dim {
        det(&rows).abs().is_one()
    } else {
        maximal_minor_gcd(&rows).is_one()
    }
}

/// Rays inserted by the continued-fraction subdivision of the planar cone
/// spanned by `u` and `v` (`det(u, v) > 0`), in angular order.
pub fn hirzebruch_jung_rays(u: &Ray, v: &Ray) -> Result<Vec<Ray>> {
    let mut out = Vec::new();
    let mut a = u.to_signed();
    let b = v.to_signed();
    loop {
        let d = det2(&a, &b);
        if !d.is_positive() {
            return Err(Error::Precondition(format!("cone <{u}, {v}> is not positively oriented")));
        }
        if d.is_one() {
            break;
        }
        // The lattice point w = (j*a + b)/d with 0 < j < d has det(a, w) = 1.
        let j = (1..)
            .map(BigInt::from)
            .take_while(|j| *j < d)
            .find(|j| a.iter().zip(&b).all(|(x, y)| (j * x + y).is_multiple_of(&d)))
            .ok_or_else(|| Error::Invariant("no continued-fraction step".into()))?;
        let w: Vec<BigInt> = a.iter().zip(&b).map(|(x, y)| (&j * x + y) / &d).collect();
        out.push(Ray::new(w.iter().map(|x| x.magnitude().clone()).collect())?);
        a = w;
    }
    Ok(out)
}

pub fn regularize(fan: &Fan) -> Result<Fan> {
    regularize_with_cap(fan, DEFAULT_ITERATION_CAP)
}

/// Refines `fan` until every maximal cone is regular. Existing rays are kept.
pub fn regularize_with_cap(fan: &Fan, cap: usize) -> Result<Fan> {
    check_dim(fan.dim)?;
    if fan.dim == 2 {
        let mut rays = fan.rays.clone();
        for c in &fan.cones {
            let (mut u, mut v) = (&fan.rays[c.rays[0]], &fan.rays[c.rays[1]]);
            if angular_cmp(u, v) == Ordering::Greater {
                std::mem::swap(&mut u, &mut v);
            }
            rays.extend(hirzebruch_jung_rays(u, v)?);
        }
        rays.sort_by(angular_cmp);
        rays.dedup();
        let cones = (0..rays.len() - 1)
            .map(|i| Cone { rays: vec![i, i + 1] })
            .collect();
        return Ok(Fan { dim: 2, rays, cones });
    }

    let mut rays = fan.rays.clone();
    let mut cones = fan.cones.clone();
    let mut iterations = 0;
    while let Some(bad) = cones.iter().find(|c| !is_regular_rows(&rows_of(&rays, c))) {
        iterations += 1;
        if iterations > cap {
            return Err(Error::IterationCap(cap));
        }
        let w = parallelepiped_point(&rows_of(&rays, bad))?;
        let w_signed: Vec<BigInt> = w.coords().iter().map(|c| BigInt::from(c.clone())).collect();
        let new_index = rays.len();
        rays.push(Ray::new(w.into_coords())?);
        let mut next = Vec::with_capacity(cones.len() + 2);
        for c in cones {
            match barycentric(&rows_of(&rays, &c), &w_signed) {
                Some(lambda) => {
                    for (i, l) in lambda.iter().enumerate() {
                        if !l.is_zero() {
                            let mut r = c.rays.clone();
                            r[i] = new_index;
                            r.sort_unstable();
                            next.push(Cone { rays: r });
                        }
                    }
                }
                None => next.push(c),
            }
        }
        cones = next;
    }
    Ok(canonical(Fan {
        dim: fan.dim,
        rays,
        cones,
    }))
}

fn rows_of(rays: &[Ray], cone: &Cone) -> Vec<Vec<BigInt>> {
    cone.rays.iter().map(|&i| rays[i].to_signed()).collect()
}

fn is_regular_rows(rows: &[Vec<BigInt>]) -> bool {
    det(rows).abs().is_one()
}

/// Scaled barycentric coordinates `lambda_i * det` of `w` in the cone spanned
/// by `rows`, normalized to the sign of `det`; `None` if `w` lies outside.
fn barycentric(rows: &[Vec<BigInt>], w: &[BigInt]) -> Option<Vec<BigInt>> {
    let d = det(rows);
    let mut out = Vec::with_capacity(rows.len());
    for i in 0..rows.len() {
        let mut m = rows.to_vec();
        m[i] = w.to_vec();
        let l = det(&m) * d.signum();
        if l.is_negative() {
            return None;
        }
        out.push(l);
    }
    Some(out)
}

/// Nonzero lattice point of `{sum lambda_i r_i : 0 <= lambda_i < 1}` with the
/// smallest coordinate sum (ties broken lexicographically).
fn parallelepiped_point(rows: &[Vec<BigInt>]) -> Result<Exponent> {
    let d = det(rows).abs();
    let upper: Vec<u64> = (0..rows.len())
        .map(|c| {
            let s: BigInt = rows.iter().map(|r| r[c].clone()).sum();
            u64::try_from(s).map_err(|_| Error::EnumerationTooLarge("parallelepiped".into()))
        })
        .collect::<Result<_>>()?;
    let mut best: Option<(BigUint, Exponent)> = None;
    for p in box_points(&upper)? {
        if p.is_zero() {
            continue;
        }
        let signed: Vec<BigInt> = p.coords().iter().map(|c| BigInt::from(c.clone())).collect();
        let Some(lambda) = barycentric(rows, &signed) else {
            continue;
        };
        if lambda.iter().any(|l| *l >= d) {
            continue;
        }
        let key = p.degree();
        if best.as_ref().is_none_or(|(k, e)| key < *k || (key == *k && p < *e)) {
            best = Some((key, p));
        }
    }
    best.map(|(_, p)| p)
        .ok_or_else(|| Error::Invariant("non-regular cone without interior lattice point".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorRow {
    pub rho: Ray,
    #[serde(with = "crate::serde_big::uint")]
    pub r: BigUint,
    #[serde(with = "crate::serde_big::uint")]
    pub ord_dz: BigUint,
    pub is_rees: bool,
}

/// One row per ray of `fan`: the ideal's order, the order of `dz`, and
/// whether the ray is a Rees valuation of the ideal.
pub fn divisor_table(fan: &Fan, ideal: &MonIdeal) -> Result<Vec<DivisorRow>> {
    let rees: BTreeSet<Ray> = compact_facets(ideal)?
        .facets
        .into_iter()
        .map(|f| f.normal)
        .collect();
    fan.rays
        .iter()
        .map(|rho| {
            Ok(DivisorRow {
                rho: rho.clone(),
                r: ideal_order(rho, ideal)?,
                ord_dz: rho.ord_dz(),
                is_rees: rees.contains(rho),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ray(v: &[u64]) -> Ray {
        Ray::from_u64s(v).unwrap()
    }

    fn rays(f: &Fan) -> Vec<Vec<u64>> {
        f.rays
            .iter()
            .map(|r| Exponent::from(r.clone()).to_u64s().unwrap())
            .collect()
    }

    fn ideal(n: usize, gens: &[&[u64]]) -> MonIdeal {
        MonIdeal::from_u64s(n, gens).unwrap()
    }

    #[test]
    fn planar_normal_fans() {
        let m2 = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let f = normal_fan(&m2).unwrap();
        assert_eq!(rays(&f), vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
        assert_eq!(f.cones, vec![Cone { rays: vec![0, 1] }, Cone { rays: vec![1, 2] }]);
        let f = normal_fan(&ideal(2, &[&[3, 0], &[0, 2]])).unwrap();
        assert_eq!(rays(&f), vec![vec![1, 0], vec![2, 3], vec![0, 1]]);
        let f = normal_fan(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(rays(&f), vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
        let f = normal_fan(&ideal(2, &[&[2, 0], &[1, 1], &[0, 3]])).unwrap();
        assert_eq!(rays(&f), vec![vec![1, 0], vec![2, 1], vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn unsupported_dimensions() {
        let i = MonIdeal::pure_powers(&Exponent::from([1, 1, 1, 1])).unwrap();
        assert_eq!(normal_fan(&i), Err(Error::UnsupportedDimension(4)));
        assert_eq!(normal_fan(&ideal(1, &[&[2]])), Err(Error::UnsupportedDimension(1)));
    }

    #[test]
    fn regularity() {
        let fan = Fan {
            dim: 2,
            rays: vec![ray(&[1, 0]), ray(&[0, 1]), ray(&[2, 3]), ray(&[1, 1])],
            cones: vec![],
        };
        assert!(is_regular(&Cone { rays: vec![0, 1] }, &fan));
        assert!(!is_regular(&Cone { rays: vec![0, 2] }, &fan));
        assert!(is_regular(&Cone { rays: vec![3, 2] }, &fan));
        let fan3 = Fan {
            dim: 3,
            rays: vec![ray(&[1, 1, 0]), ray(&[1, 0, 1]), ray(&[1, 2, 3])],
            cones: vec![],
        };
        assert!(is_regular(&Cone { rays: vec![0, 1] }, &fan3));
        assert!(!is_regular(&Cone { rays: vec![0, 1, 2] }, &fan3));
    }

    #[test]
    fn continued_fraction_steps() {
        let got = hirzebruch_jung_rays(&ray(&[1, 0]), &ray(&[1, 5])).unwrap();
        let expected: Vec<Ray> = (1..5).map(|j| ray(&[1, j])).collect();
        assert_eq!(got, expected);
        let f = normal_fan(&ideal(2, &[&[3, 0], &[0, 2]])).unwrap();
        let r = regularize(&f).unwrap();
        assert_eq!(
            rays(&r),
            vec![vec![1, 0], vec![1, 1], vec![2, 3], vec![1, 2], vec![0, 1]]
        );
        assert!(r.consecutive_determinants().iter().all(One::is_one));
        assert_eq!(regularize(&r).unwrap(), r);
    }

    #[test]
    fn divisor_rows() {
        let i = ideal(2, &[&[3, 0], &[0, 2]]);
        let table = divisor_table(&regularize(&normal_fan(&i).unwrap()).unwrap(), &i).unwrap();
        let row = table.iter().find(|r| r.rho == ray(&[2, 3])).unwrap();
        assert_eq!((row.r.clone(), row.ord_dz.clone(), row.is_rees), (6u32.into(), 4u32.into(), true));
        let row = table.iter().find(|r| r.rho == ray(&[1, 0])).unwrap();
        assert_eq!((row.r.clone(), row.ord_dz.clone(), row.is_rees), (0u32.into(), 0u32.into(), false));
    }

    #[test]
    fn three_dimensional_fans() {
        let i = MonIdeal::pure_powers(&Exponent::from([2, 2, 2])).unwrap();
        let f = normal_fan(&i).unwrap();
        assert_eq!(f.rays.len(), 4);
        assert_eq!(f.cones.len(), 3);
        assert!(f.is_regular());

        let j = MonIdeal::pure_powers(&Exponent::from([2, 3, 4])).unwrap();
        let f = normal_fan(&j).unwrap();
        assert!(!f.is_regular());
        let r = regularize(&f).unwrap();
        assert!(r.is_regular());
        for ray in &f.rays {
            assert!(r.rays.contains(ray));
        }
    }
}
