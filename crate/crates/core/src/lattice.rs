//! Supports, offspring sets and the lattice of invariant faces.
//!
//! A face of the simplex is identified with its vertex set. It is invariant
//! when its linear span is a subalgebra, i.e. when it contains the offspring
//! of every pair of its vertices.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{pairs, InheritanceTensor, Vector};
use crate::bernstein;
use crate::error::{Error, Result};
use crate::par::{self, Execution};

/// Largest `n` for which faces are enumerated.
pub const MAX_FACE_N: usize = 20;

/// Sorted, duplicate-free set of 0-based basis indices. Displayed 1-based.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new() -> Self {
        IndexSet(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        IndexSet((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> Self {
        IndexSet((0..64).filter(|i| mask >> i & 1 == 1).collect())
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &i| m | 1 << i)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }

    /// Position of `i` within the set.
    pub fn position(&self, i: usize) -> Option<usize> {
        self.0.binary_search(&i).ok()
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        IndexSet(v)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn support(x: &Vector) -> IndexSet {
    IndexSet(x.support())
}

fn check_guard(n: usize) -> Result<()> {
    if n > MAX_FACE_N {
        return Err(Error::GuardExceeded {
            what: "n",
            value: n,
            limit: MAX_FACE_N,
        });
    }
    Ok(())
}

/// Offspring masks of all basis pairs, `masks[i][k]`.
fn pair_masks(a: &InheritanceTensor) -> Vec<Vec<u64>> {
    let n = a.dim();
    let mut masks = vec![vec![0u64; n]; n];
    for (i, k) in pairs(n) {
        let m = a.row(i, k).iter().fold(0u64, |m, (j, _)| m | 1 << j);
        masks[i][k] = m;
        masks[k][i] = m;
    }
    masks
}

fn offspring_mask(masks: &[Vec<u64>], f: &[usize]) -> u64 {
    let mut out = 0;
    for (x, &i) in f.iter().enumerate() {
        for &k in &f[x..] {
            out |= masks[i][k];
        }
    }
    out
}

/// Union of the supports of `e_i e_k` over `i, k ∈ F`.
pub fn offspring_set(a: &InheritanceTensor, f: &IndexSet) -> IndexSet {
    let n = a.dim();
    let mut out = Vec::new();
    for (x, i) in f.iter().enumerate() {
        for k in f.as_slice()[x..].iter().copied() {
            if i < n && k < n {
                out.extend(a.row(i, k).iter().map(|(j, _)| *j));
            }
        }
    }
    out.into_iter().collect()
}

pub fn is_invariant_face(a: &InheritanceTensor, f: &IndexSet) -> bool {
    !f.is_empty() && offspring_set(a, f).is_subset(f)
}

/// The restriction to an invariant face, re-indexed in increasing order.
pub fn restrict(a: &InheritanceTensor, f: &IndexSet) -> Result<InheritanceTensor> {
    if let Some(&bad) = f.as_slice().iter().find(|&&i| i >= a.dim()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            n: a.dim(),
        });
    }
    if !is_invariant_face(a, f) {
        return Err(Error::NotInvariantFace(f.clone()));
    }
    let mut b = InheritanceTensor::builder(f.len())?;
    let v = f.as_slice();
    for (x, &i) in v.iter().enumerate() {
        for (y, &k) in v.iter().enumerate().skip(x) {
            for (j, p) in a.row(i, k) {
                let z = f.position(*j).expect("offspring stay in an invariant face");
                b.insert(x, y, z, p.clone())?;
            }
        }
    }
    b.build()
}

/// Restriction is constant: every pairwise product is the same vector.
fn restriction_is_constant(a: &InheritanceTensor, f: &IndexSet) -> bool {
    let v = f.as_slice();
    let first = a.row(v[0], v[0]);
    v.iter()
        .enumerate()
        .all(|(x, &i)| v[x..].iter().all(|&k| a.row(i, k) == first))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceRecord {
    pub vertices: IndexSet,
    pub invariant: bool,
    pub essential: bool,
    /// Rank of the restriction minus one; present for essential faces of
    /// Bernstein algebras.
    pub cell_dim: Option<usize>,
    pub constant: bool,
}

/// All nonempty invariant faces, ordered by size and then lexicographically.
pub fn invariant_faces(a: &InheritanceTensor) -> Result<Vec<FaceRecord>> {
    invariant_faces_with(a, Execution::available())
}

pub fn invariant_faces_with(a: &InheritanceTensor, exec: Execution) -> Result<Vec<FaceRecord>> {
    enumerate_faces(a, exec, bernstein::is_bernstein(a))
}

/// Invariant faces without cell dimensions.
pub(crate) fn invariant_vertex_sets(
    a: &InheritanceTensor,
    exec: Execution,
) -> Result<Vec<IndexSet>> {
    Ok(enumerate_faces(a, exec, false)?
        .into_iter()
        .map(|f| f.vertices)
        .collect())
}

fn enumerate_faces(
    a: &InheritanceTensor,
    exec: Execution,
    bernstein: bool,
) -> Result<Vec<FaceRecord>> {
    let n = a.dim();
    check_guard(n)?;
    let masks = pair_masks(a);
    let total = 1u64 << n;
    let mut faces = par::range_filter_map(exec, 1..total, |mask| {
        let v: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        // closure with early exit on the first escaping product
        let mut offspring = 0u64;
        for (x, &i) in v.iter().enumerate() {
            for &k in &v[x..] {
                let m = masks[i][k];
                if m & !mask != 0 {
                    return None;
                }
                offspring |= m;
            }
        }
        let vertices = IndexSet(v);
        let essential = offspring == mask;
        let constant = restriction_is_constant(a, &vertices);
        let cell_dim = if essential && bernstein {
            let r = restrict(a, &vertices).ok()?;
            Some(bernstein::type_unchecked(&r).ok()?.m - 1)
        } else {
            None
        };
        Some(FaceRecord {
            vertices,
            invariant: true,
            essential,
            cell_dim,
            constant,
        })
    });
    if bernstein && faces.iter().any(|f| f.essential && f.cell_dim.is_none()) {
        return Err(Error::InvariantViolation(
            "a restriction of a Bernstein algebra failed to decompose".into(),
        ));
    }
    faces.sort_by(|x, y| (x.vertices.len(), &x.vertices).cmp(&(y.vertices.len(), &y.vertices)));
    Ok(faces)
}

/// Counts derived from the face list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FaceSummary {
    pub invariant: usize,
    pub essential: usize,
    pub constant: usize,
    /// Cell dimension to number of essential faces of that dimension.
    pub cell_dims: BTreeMap<usize, usize>,
}

pub fn summarize(faces: &[FaceRecord]) -> FaceSummary {
    let mut s = FaceSummary::default();
    for f in faces {
        s.invariant += 1;
        s.essential += usize::from(f.essential);
        s.constant += usize::from(f.constant);
        if let Some(d) = f.cell_dim {
            *s.cell_dims.entry(d).or_default() += 1;
        }
    }
    s
}

/// Minimal elements of the face list under inclusion.
pub fn minimal_faces(faces: &[FaceRecord]) -> Vec<&FaceRecord> {
    faces
        .iter()
        .filter(|f| {
            !faces
                .iter()
                .any(|g| g.vertices.len() < f.vertices.len() && g.vertices.is_subset(&f.vertices))
        })
        .collect()
}

/// Offspring set of all basis vectors: the support of the image.
pub fn greatest_offspring_face(a: &InheritanceTensor) -> IndexSet {
    offspring_set(a, &IndexSet::full(a.dim()))
}

/// The offspring set of the basis idempotents is everything.
pub fn is_grounded(a: &InheritanceTensor) -> bool {
    offspring_set(a, &bernstein::basis_idempotents(a)) == IndexSet::full(a.dim())
}

/// `F'` for every subset `F` given as a bitmask; used by lattice checks.
pub fn offspring_of_mask(a: &InheritanceTensor, mask: u64) -> u64 {
    let f = IndexSet::from_mask(mask);
    offspring_mask(&pair_masks(a), f.as_slice())
}

/// Subsets `F` violating `F'' = F'`, over every nonempty subset.
pub fn offspring_idempotence_failures(a: &InheritanceTensor) -> Result<Vec<IndexSet>> {
    let n = a.dim();
    check_guard(n)?;
    let masks = pair_masks(a);
    let of = |mask: u64| {
        let v: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        offspring_mask(&masks, &v)
    };
    Ok(par::range_filter_map(
        Execution::available(),
        1..1u64 << n,
        |mask| {
            let once = of(mask);
            (of(once) != once).then(|| IndexSet::from_mask(mask))
        },
    ))
}

/// Shape of the offspring subalgebra of two basis idempotents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OffspringKind {
    Unit,
    ExtendedMendel,
    Quadrille,
    /// Restriction not normal; no shape is asserted.
    NotNormal,
    Other,
}

impl OffspringKind {
    pub fn name(self) -> &'static str {
        match self {
            OffspringKind::Unit => "unit",
            OffspringKind::ExtendedMendel => "extended_mendel",
            OffspringKind::Quadrille => "quadrille",
            OffspringKind::NotNormal => "not_normal",
            OffspringKind::Other => "other",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairOffspring {
    pub pair: (usize, usize),
    pub face: IndexSet,
    pub rank: usize,
    pub kind: OffspringKind,
    pub violation: Option<String>,
}

/// For every pair of distinct basis idempotents: the offspring subalgebra,
/// its rank (at most 3) and, when normal, its shape, which must be a unit
/// algebra of dimension 2, an extended Mendel algebra of dimension 3 or a
/// quadrille of dimension 4.
pub fn offspring_rank_bound_check(a: &InheritanceTensor) -> Result<Vec<PairOffspring>> {
    if !bernstein::is_bernstein(a) {
        return Err(Error::NotBernstein);
    }
    let idem: Vec<usize> = bernstein::basis_idempotents(a).iter().collect();
    let mut out = Vec::new();
    for (x, &i) in idem.iter().enumerate() {
        for &k in &idem[x + 1..] {
            let face = offspring_set(a, &IndexSet::from_iter([i, k]));
            let r = restrict(a, &face)?;
            let rank = bernstein::type_unchecked(&r)?.m;
            let kind = if !crate::normality::is_normal(&r).is_normal() {
                OffspringKind::NotNormal
            } else {
                match crate::classify::recognize_unchecked(&r)? {
                    crate::classify::Classification::Unit { n: 2 } => OffspringKind::Unit,
                    crate::classify::Classification::ExtendedMendel { params, .. }
                        if params.m == 2 && params.delta() == 1 =>
                    {
                        OffspringKind::ExtendedMendel
                    }
                    crate::classify::Classification::ExtendedQuadrille { labeling }
                        if labeling.nu == 2 && labeling.nu_bar == 2 =>
                    {
                        OffspringKind::Quadrille
                    }
                    _ => OffspringKind::Other,
                }
            };
            let violation = if rank > 3 {
                Some(format!(
                    "offspring subalgebra of e_{} and e_{} has rank {rank}",
                    i + 1,
                    k + 1
                ))
            } else if kind == OffspringKind::Other {
                Some(format!(
                    "normal offspring subalgebra of e_{} and e_{} is neither unit, extended Mendel nor quadrille",
                    i + 1,
                    k + 1
                ))
            } else {
                None
            };
            out.push(PairOffspring {
                pair: (i, k),
                face,
                rank,
                kind,
                violation,
            });
        }
    }
    Ok(out)
}
