//! Labeled simplicial cell complexes and the monomial complexes they define.
//!
//! Faces are subsets of generator indices. A face with `k` vertices sits in
//! homological degree `k` and is labeled by the lcm of its vertex labels; the
//! empty face is the single element of degree 0 with label `0`. The
//! differential sends `e_tau` to
//!
//! ```text
//! sum over facets tau' of tau:  sign(tau', tau) * z^(m_tau - m_tau') * e_tau'
//! ```
//!
//! with the alternating simplicial sign: dropping the vertex at position `i`
//! of the sorted vertex list contributes `(-1)^i`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ideal::{Exponent, MonIdeal};
use crate::linalg;
use crate::{Error, Result};

/// Default cap on the number of generators of a Taylor complex.
pub const DEFAULT_GENERATOR_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    #[default]
    Taylor,
    Scarf,
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComplexKind::Taylor => "taylor",
            ComplexKind::Scarf => "scarf",
        })
    }
}

impl std::str::FromStr for ComplexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "taylor" => Ok(ComplexKind::Taylor),
            "scarf" => Ok(ComplexKind::Scarf),
            other => Err(Error::Input(format!("unknown complex kind {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Sorted generator indices; this order fixes the orientation.
    pub vertices: Vec<usize>,
    pub label: Exponent,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.vertices.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FaceId {
    pub degree: usize,
    pub index: usize,
}

/// A boundary entry: index of a facet in the previous degree and its sign.
pub type SignedFacet = (usize, i8);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledComplex {
    dim: usize,
    generators: Vec<Exponent>,
    /// `faces[k]` is `K_k`; `faces[0] = [∅]`.
    faces: Vec<Vec<Face>>,
    /// `boundary[k][j]` lists the facets of `faces[k][j]`; `boundary[0]` is empty.
    boundary: Vec<Vec<Vec<SignedFacet>>>,
}

impl LabeledComplex {
    /// Builds a simplicial complex on `generators` from its nonempty faces.
    ///
    /// The face set must be closed under taking nonempty subfaces.
    pub fn from_faces(dim: usize, generators: Vec<Exponent>, faces: Vec<Vec<usize>>) -> Result<Self> {
        for g in &generators {
            g.check_dim(dim)?;
        }
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        for mut f in faces {
            f.sort_unstable();
            f.dedup();
            if f.is_empty() {
                continue;
            }
            if let Some(&bad) = f.iter().find(|&&v| v >= generators.len()) {
                return Err(Error::InvalidFace(format!("vertex {bad} out of range")));
            }
            set.insert(f);
        }
        let top = set.iter().map(Vec::len).max().unwrap_or(0);
        let mut by_degree: Vec<Vec<Vec<usize>>> = vec![Vec::new(); top + 1];
        by_degree[0].push(Vec::new());
        for f in set.iter() {
            by_degree[f.len()].push(f.clone());
        }
        let mut faces: Vec<Vec<Face>> = Vec::with_capacity(top + 1);
        let mut boundary: Vec<Vec<Vec<SignedFacet>>> = vec![Vec::new()];
        for (k, list) in by_degree.into_iter().enumerate() {
            let labeled: Vec<Face> = list
                .into_iter()
                .map(|vertices| {
                    let label = vertices
                        .iter()
                        .fold(Exponent::zero(dim), |acc, &v| acc.lcm(&generators[v]));
                    Face { vertices, label }
                })
                .collect();
            if k > 0 {
                let index: HashMap<&[usize], usize> = faces[k - 1]
                    .iter()
                    .enumerate()
                    .map(|(i, f)| (f.vertices.as_slice(), i))
                    .collect();
                let mut bd = Vec::with_capacity(labeled.len());
                for face in &labeled {
                    let mut entries = Vec::with_capacity(k);
                    for drop in 0..k {
                        let facet: Vec<usize> = face
                            .vertices
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != drop)
                            .map(|(_, &v)| v)
                            .collect();
                        let Some(&j) = index.get(facet.as_slice()) else {
                            return Err(Error::InvalidFace(format!(
                                "face {:?} is missing its facet {:?}",
                                face.vertices, facet
                            )));
                        };
                        entries.push((j, if drop % 2 == 0 { 1 } else { -1 }));
                    }
                    bd.push(entries);
                }
                boundary.push(bd);
            }
            faces.push(labeled);
        }
        Ok(LabeledComplex {
            dim,
            generators,
            faces,
            boundary,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    /// Highest homological degree `N`.
    pub fn top_degree(&self) -> usize {
        self.faces.len() - 1
    }

    /// Faces of `K_k`; empty when `k` exceeds the top degree.
    pub fn faces(&self, k: usize) -> &[Face] {
        self.faces.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id.degree][id.index]
    }

    pub fn num_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Module ranks `|K_0|, ..., |K_N|`.
    pub fn face_counts(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn facets_of(&self, id: FaceId) -> &[SignedFacet] {
        if id.degree == 0 {
            return &[];
        }
        &self.boundary[id.degree][id.index]
    }

    /// Flips one boundary sign. Only meant for building broken fixtures.
    pub fn flip_boundary_sign(&mut self, id: FaceId, position: usize) {
        let entry = &mut self.boundary[id.degree][id.index][position];
        entry.1 = -entry.1;
    }

    /// The same complex with `vertices` and every face containing it removed.
    pub fn without_face(&self, vertices: &[usize]) -> Result<Self> {
        let mut target = vertices.to_vec();
        target.sort_unstable();
        let keep = self
            .faces
            .iter()
            .skip(1)
            .flatten()
            .filter(|f| !target.iter().all(|v| f.vertices.binary_search(v).is_ok()))
            .map(|f| f.vertices.clone())
            .collect();
        LabeledComplex::from_faces(self.dim, self.generators.clone(), keep)
    }
}

fn check_gen_cap(ideal: &MonIdeal, cap: usize) -> Result<()> {
    ideal.require_nonzero()?;
    if ideal.num_gens() > cap {
        return Err(Error::GeneratorCap {
            count: ideal.num_gens(),
            cap,
        });
    }
    Ok(())
}

fn all_subsets(r: usize) -> Vec<Vec<usize>> {
    (1u64..(1u64 << r))
        .map(|mask| (0..r).filter(|&i| mask >> i & 1 == 1).collect())
        .collect()
}

/// Full simplex on the minimal generators.
pub fn taylor_complex(ideal: &MonIdeal) -> Result<LabeledComplex> {
    taylor_complex_with_cap(ideal, DEFAULT_GENERATOR_CAP)
}

pub fn taylor_complex_with_cap(ideal: &MonIdeal, cap: usize) -> Result<LabeledComplex> {
    check_gen_cap(ideal, cap)?;
    let r = ideal.num_gens();
    LabeledComplex::from_faces(ideal.dim(), ideal.gens().to_vec(), all_subsets(r))
}

/// Faces of the Taylor complex whose label no other Taylor face shares.
pub fn scarf_complex(ideal: &MonIdeal) -> Result<LabeledComplex> {
    scarf_complex_with_cap(ideal, DEFAULT_GENERATOR_CAP)
}

pub fn scarf_complex_with_cap(ideal: &MonIdeal, cap: usize) -> Result<LabeledComplex> {
    let taylor = taylor_complex_with_cap(ideal, cap)?;
    let mut counts: HashMap<&Exponent, usize> = HashMap::new();
    for f in taylor.faces.iter().flatten() {
        *counts.entry(&f.label).or_default() += 1;
    }
    let unique: Vec<Vec<usize>> = taylor
        .faces
        .iter()
        .skip(1)
        .flatten()
        .filter(|f| counts[&f.label] == 1)
        .map(|f| f.vertices.clone())
        .collect();
    LabeledComplex::from_faces(ideal.dim(), ideal.gens().to_vec(), unique)
}

/// Koszul complex of `z_1^{beta_1}, ..., z_n^{beta_n}`, realized as the Taylor
/// complex of `m^beta`.
pub fn koszul_complex(beta: &Exponent) -> Result<LabeledComplex> {
    if beta.dim() == 0 {
        return Err(Error::ZeroDimension);
    }
    if beta.coords().iter().any(Zero::is_zero) {
        return Err(Error::Precondition(format!(
            "Koszul exponents must be positive, got {beta}"
        )));
    }
    taylor_complex(&MonIdeal::pure_powers(beta)?)
}

pub fn build_complex(ideal: &MonIdeal, kind: ComplexKind) -> Result<LabeledComplex> {
    match kind {
        ComplexKind::Taylor => taylor_complex(ideal),
        ComplexKind::Scarf => scarf_complex(ideal),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMonomial {
    pub sign: i8,
    pub exponent: Exponent,
}

/// Matrix of `phi_k`: rows index `K_{k-1}`, columns index `K_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Option<SignedMonomial>>>,
}

impl MonomialMatrix {
    pub fn get(&self, row: usize, col: usize) -> Option<&SignedMonomial> {
        self.entries[row][col].as_ref()
    }

    /// Integer matrix obtained by substituting `z_i = point[i]`.
    pub fn evaluate(&self, point: &[u64]) -> Result<Vec<Vec<BigInt>>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, row) in self.entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if let Some(e) = e {
                    let mut v = BigInt::from(e.sign);
                    for (p, x) in point.iter().zip(e.exponent.coords()) {
                        let x = x.to_u32().ok_or_else(|| {
                            Error::EnumerationTooLarge(format!("evaluation exponent {x}"))
                        })?;
                        v *= BigInt::from(*p).pow(x);
                    }
                    out[r][c] = v;
                }
            }
        }
        Ok(out)
    }
}

pub fn boundary_matrix(complex: &LabeledComplex, k: usize) -> Result<MonomialMatrix> {
    let top = complex.top_degree();
    if k == 0 || k > top {
        return Err(Error::DegreeOutOfRange { degree: k, top });
    }
    let rows = complex.faces[k - 1].len();
    let cols = complex.faces[k].len();
    let mut entries = vec![vec![None; cols]; rows];
    for (c, face) in complex.faces[k].iter().enumerate() {
        for &(r, sign) in &complex.boundary[k][c] {
            let facet = &complex.faces[k - 1][r];
            let exponent = face.label.checked_sub(&facet.label).ok_or_else(|| {
                Error::Invariant(format!(
                    "label {} does not divide {}",
                    facet.label, face.label
                ))
            })?;
            entries[r][c] = Some(SignedMonomial { sign, exponent });
        }
    }
    Ok(MonomialMatrix {
        rows,
        cols,
        entries,
    })
}

/// Whether `phi_k ∘ phi_{k+1} = 0` for all `k`, as polynomial matrices.
pub fn compose_zero(complex: &LabeledComplex) -> bool {
    for k in 1..complex.top_degree() {
        for (j, face) in complex.faces[k + 1].iter().enumerate() {
            let mut acc: BTreeMap<(usize, Exponent), i64> = BTreeMap::new();
            for &(mid, s1) in &complex.boundary[k + 1][j] {
                let mid_face = &complex.faces[k][mid];
                let Some(e1) = face.label.checked_sub(&mid_face.label) else {
                    return false;
                };
                for &(low, s2) in &complex.boundary[k][mid] {
                    let Some(e2) = mid_face.label.checked_sub(&complex.faces[k - 1][low].label)
                    else {
                        return false;
                    };
                    *acc.entry((low, e1.add(&e2))).or_default() += i64::from(s1 * s2);
                }
            }
            if acc.values().any(|&v| v != 0) {
                return false;
            }
        }
    }
    true
}

/// The lcm-lattice of the generators (all lcms of nonempty subsets).
pub fn lcm_lattice(generators: &[Exponent]) -> BTreeSet<Exponent> {
    let mut lattice: BTreeSet<Exponent> = generators.iter().cloned().collect();
    let mut frontier: Vec<Exponent> = lattice.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in generators {
                let l = a.lcm(g);
                if lattice.insert(l.clone()) {
                    next.push(l);
                }
            }
        }
        frontier = next;
    }
    lattice
}

/// Whether the subcomplex `{tau : label(tau) <= bound}` has vanishing reduced
/// homology over Q. The subcomplex with no vertices counts as acyclic.
fn subcomplex_acyclic(complex: &LabeledComplex, bound: &Exponent) -> bool {
    let members: Vec<Vec<usize>> = complex
        .faces
        .iter()
        .map(|list| {
            list.iter()
                .enumerate()
                .filter(|(_, f)| f.label.divides(bound))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    if members.get(1).is_none_or(Vec::is_empty) {
        return true;
    }
    let mut ranks = vec![0usize; members.len() + 1];
    for k in 1..members.len() {
        let pos: HashMap<usize, usize> = members[k - 1]
            .iter()
            .enumerate()
            .map(|(p, &i)| (i, p))
            .collect();
        let mut m = vec![vec![BigInt::zero(); members[k].len()]; members[k - 1].len()];
        for (c, &j) in members[k].iter().enumerate() {
            for &(r, s) in &complex.boundary[k][j] {
                if let Some(&p) = pos.get(&r) {
                    m[p][c] = BigInt::from(s);
                }
            }
        }
        ranks[k] = linalg::rank(&m);
    }
    (0..members.len()).all(|k| members[k].len() == ranks[k] + ranks[k + 1])
}

fn check_vertices(complex: &LabeledComplex, ideal: &MonIdeal) -> Result<()> {
    let a: BTreeSet<&Exponent> = complex.generators.iter().collect();
    let b: BTreeSet<&Exponent> = ideal.gens().iter().collect();
    if complex.dim != ideal.dim() || a != b || complex.generators.len() != ideal.num_gens() {
        return Err(Error::VertexMismatch);
    }
    Ok(())
}

/// The first lcm-lattice element (in lexicographic order) whose subcomplex is
/// not acyclic, or `None` when the complex resolves `ideal`.
pub fn acyclicity_failure(complex: &LabeledComplex, ideal: &MonIdeal) -> Result<Option<Exponent>> {
    check_vertices(complex, ideal)?;
    if !compose_zero(complex) {
        return Err(Error::Precondition("boundary maps do not compose to zero".into()));
    }
    let lattice: Vec<Exponent> = lcm_lattice(ideal.gens()).into_iter().collect();
    let bad: Vec<&Exponent> = lattice
        .par_iter()
        .filter(|b| !subcomplex_acyclic(complex, b))
        .collect();
    Ok(bad.first().map(|b| (*b).clone()))
}

/// Acyclicity criterion for labeled complexes: every `K_{<=b}` is acyclic.
pub fn is_cellular_resolution(complex: &LabeledComplex, ideal: &MonIdeal) -> Result<bool> {
    Ok(acyclicity_failure(complex, ideal)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankProfile {
    /// `|K_0|, ..., |K_N|`.
    pub module_ranks: Vec<usize>,
    /// `rho_1, ..., rho_N`.
    pub ranks: Vec<usize>,
    /// `rho_k + rho_{k+1} = |K_k|` for every `k >= 1`.
    pub rank_exact: bool,
}

impl RankProfile {
    /// `rho_k`, zero outside `1..=N`.
    pub fn rho(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        self.ranks.get(k - 1).copied().unwrap_or(0)
    }
}

fn first_primes(count: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(count);
    let mut c = 2u64;
    while primes.len() < count {
        if primes.iter().all(|p| !c.is_multiple_of(*p)) {
            primes.push(c);
        }
        c += 1;
    }
    primes
}

/// Evaluation points used by [`rank_profile`]: three disjoint runs of
/// consecutive primes.
pub fn evaluation_points(n: usize) -> [Vec<u64>; 3] {
    let p = first_primes(3 * n);
    [p[..n].to_vec(), p[n..2 * n].to_vec(), p[2 * n..].to_vec()]
}

/// Ranks of the differentials, computed exactly at three prime-coordinate
/// points which must agree.
pub fn rank_profile(complex: &LabeledComplex) -> Result<RankProfile> {
    let top = complex.top_degree();
    let points = evaluation_points(complex.dim);
    let mut ranks = Vec::with_capacity(top);
    for k in 1..=top {
        let m = boundary_matrix(complex, k)?;
        let mut seen: Option<usize> = None;
        for p in &points {
            let r = linalg::rank(&m.evaluate(p)?);
            match seen {
                None => seen = Some(r),
                Some(s) if s != r => {
                    return Err(Error::Invariant(format!(
                        "rank of phi_{k} depends on the evaluation point ({s} vs {r})"
                    )))
                }
                _ => {}
            }
        }
        ranks.push(seen.unwrap_or(0));
    }
    let module_ranks = complex.face_counts();
    let rho = |k: usize| if k >= 1 && k <= top { ranks[k - 1] } else { 0 };
    let rank_exact = (1..=top).all(|k| rho(k) + rho(k + 1) == module_ranks[k]);
    Ok(RankProfile {
        module_ranks,
        ranks,
        rank_exact,
    })
}

/// Labels of `K_k`, for reports.
pub fn labels(complex: &LabeledComplex, k: usize) -> Vec<Exponent> {
    complex.faces(k).iter().map(|f| f.label.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u64]]) -> MonIdeal {
        MonIdeal::from_u64s(n, gens).unwrap()
    }

    fn m2() -> MonIdeal {
        ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
    }

    fn exps(v: &[&[u64]]) -> Vec<Exponent> {
        v.iter().map(|e| Exponent::from_u64s(e)).collect()
    }

    #[test]
    fn taylor_shapes() {
        let t = taylor_complex(&m2()).unwrap();
        assert_eq!(t.num_faces(), 8);
        assert_eq!(t.face_counts(), vec![1, 3, 3, 1]);
        assert_eq!(labels(&t, 2), exps(&[&[2, 1], &[2, 2], &[1, 2]]));
        assert_eq!(labels(&t, 3), exps(&[&[2, 2]]));
        let single = taylor_complex(&ideal(2, &[&[2, 0], &[0, 0]])).unwrap();
        assert_eq!(single.face_counts(), vec![1, 1]);
        let x2 = taylor_complex(&ideal(1, &[&[2]])).unwrap();
        assert_eq!(labels(&x2, 1), exps(&[&[2]]));
    }

    #[test]
    fn taylor_cap() {
        let big = MonIdeal::maximal_power(2, 5).unwrap();
        assert_eq!(
            taylor_complex_with_cap(&big, 4),
            Err(Error::GeneratorCap { count: 6, cap: 4 })
        );
        assert_eq!(taylor_complex(&MonIdeal::zero(2)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn scarf_shapes() {
        let s = scarf_complex(&ideal(2, &[&[3, 0], &[1, 1], &[0, 2]])).unwrap();
        let verts = |k| s.faces(k).iter().map(|f| f.vertices.clone()).collect::<Vec<_>>();
        assert_eq!(verts(1), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(verts(2), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(s.top_degree(), 2);

        let ci = scarf_complex(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(ci.face_counts(), vec![1, 2, 1]);

        let s = scarf_complex(&m2()).unwrap();
        assert_eq!(labels(&s, 2), exps(&[&[2, 1], &[1, 2]]));
    }

    #[test]
    fn koszul_shapes() {
        let k = koszul_complex(&Exponent::from([2, 3])).unwrap();
        assert_eq!(labels(&k, 1), exps(&[&[2, 0], &[0, 3]]));
        assert_eq!(labels(&k, 2), exps(&[&[2, 3]]));
        let k3 = koszul_complex(&Exponent::from([1, 1, 1])).unwrap();
        assert_eq!(k3.num_faces(), 8);
        assert!(koszul_complex(&Exponent::from([0, 1])).is_err());
    }

    #[test]
    fn boundary_entries() {
        let k = koszul_complex(&Exponent::from([2, 3])).unwrap();
        let d1 = boundary_matrix(&k, 1).unwrap();
        assert_eq!(
            d1.get(0, 0),
            Some(&SignedMonomial { sign: 1, exponent: Exponent::from([2, 0]) })
        );
        assert_eq!(
            d1.get(0, 1),
            Some(&SignedMonomial { sign: 1, exponent: Exponent::from([0, 3]) })
        );
        let d2 = boundary_matrix(&k, 2).unwrap();
        let on_x = d2.get(0, 0).unwrap();
        let on_y = d2.get(1, 0).unwrap();
        assert_eq!(on_x.exponent, Exponent::from([0, 3]));
        assert_eq!(on_y.exponent, Exponent::from([2, 0]));
        assert_eq!(on_x.sign, -on_y.sign);

        let t = taylor_complex(&m2()).unwrap();
        let d2 = boundary_matrix(&t, 2).unwrap();
        // column 0 is the edge {g1, g2} with label (2,1)
        let a = d2.get(0, 0).unwrap();
        let b = d2.get(1, 0).unwrap();
        assert_eq!(a.exponent, Exponent::from([0, 1]));
        assert_eq!(b.exponent, Exponent::from([1, 0]));
        assert_eq!(a.sign, -b.sign);
        assert_eq!(
            boundary_matrix(&t, 4),
            Err(Error::DegreeOutOfRange { degree: 4, top: 3 })
        );
        assert!(boundary_matrix(&t, 0).is_err());
    }

    #[test]
    fn compositions() {
        let t = taylor_complex(&m2()).unwrap();
        assert!(compose_zero(&t));
        assert!(compose_zero(&koszul_complex(&Exponent::from([2, 3])).unwrap()));
        let mut broken = t.clone();
        broken.flip_boundary_sign(FaceId { degree: 2, index: 0 }, 0);
        assert!(!compose_zero(&broken));
    }

    #[test]
    fn resolutions() {
        let t = taylor_complex(&m2()).unwrap();
        assert!(is_cellular_resolution(&t, &m2()).unwrap());
        let i = ideal(2, &[&[3, 0], &[1, 1], &[0, 2]]);
        assert!(is_cellular_resolution(&scarf_complex(&i).unwrap(), &i).unwrap());
        let cut = t.without_face(&[0, 1]).unwrap();
        assert_eq!(cut.face_counts(), vec![1, 3, 2]);
        assert_eq!(
            acyclicity_failure(&cut, &m2()).unwrap(),
            Some(Exponent::from([2, 1]))
        );
        let other = taylor_complex(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(is_cellular_resolution(&other, &m2()), Err(Error::VertexMismatch));
    }

    #[test]
    fn rank_profiles() {
        let k = koszul_complex(&Exponent::from([2, 3])).unwrap();
        let p = rank_profile(&k).unwrap();
        assert_eq!(p.ranks, vec![1, 1]);
        assert!(p.rank_exact);
        let p = rank_profile(&taylor_complex(&m2()).unwrap()).unwrap();
        assert_eq!(p.module_ranks, vec![1, 3, 3, 1]);
        assert_eq!(p.ranks, vec![1, 2, 1]);
        assert!(p.rank_exact);
        let single = taylor_complex(&ideal(2, &[&[1, 1]])).unwrap();
        assert_eq!(rank_profile(&single).unwrap().rho(1), 1);
    }

    #[test]
    fn faces_must_be_closed() {
        let g = exps(&[&[1, 0], &[0, 1]]);
        assert!(matches!(
            LabeledComplex::from_faces(2, g.clone(), vec![vec![0, 1], vec![0]]),
            Err(Error::InvalidFace(_))
        ));
        assert!(LabeledComplex::from_faces(2, g, vec![vec![0, 1], vec![0], vec![1]]).is_ok());
    }
}
