//! Recognition of regular normal stochastic Bernstein algebras as extended
//! Mendel or extended quadrille algebras, with the projection `B` and the
//! pool machinery used to recover parameters.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::algebra::{pairs, unit_product, InheritanceTensor, Vector};
use crate::bernstein::{self, AlgebraType, RegularityVerdict};
use crate::error::{Error, Result};
use crate::families::{self, ExtendedMendelParams, GridLabeling};
use crate::lattice::IndexSet;
use crate::linalg;
use crate::normality;
use crate::par::Execution;
use crate::rational::{int, Rational};

pub use crate::families::{
    extended_mendel as gen_extended_mendel, extended_quadrille as gen_extended_quadrille,
    hardy_weinberg as gen_hardy_weinberg,
};

/// `Bx = 2ex - (2ex)_a e` for the basis idempotent `e = e_a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionB {
    pub index: usize,
    /// `columns[k] = B e_k`.
    pub columns: Vec<Vector>,
    pub rank: usize,
    /// Vertices of `Im B ∩ Δ`, normalized to weight 1, in lexicographic
    /// order of their max-one scaling.
    pub b: Vec<Vector>,
}

impl ProjectionB {
    pub fn apply(&self, x: &Vector) -> Vector {
        let mut out = Vector::zeros(x.dim());
        for (c, col) in x.coords().iter().zip(&self.columns) {
            if !c.is_zero() {
                out.add_scaled(c, col);
            }
        }
        out
    }
}

/// Projection associated with the basis idempotent `e_index`.
pub fn projection_b(a: &InheritanceTensor, index: usize) -> Result<ProjectionB> {
    if !bernstein::is_bernstein(a) {
        return Err(Error::NotBernstein);
    }
    projection_b_unchecked(a, index)
}

pub(crate) fn projection_b_unchecked(a: &InheritanceTensor, index: usize) -> Result<ProjectionB> {
    let n = a.dim();
    if index >= n {
        return Err(Error::IndexOutOfRange { index, n });
    }
    let e = Vector::basis(n, index);
    if !a.is_idempotent(&e) {
        return Err(Error::NotIdempotent);
    }
    let two = int(2);
    let columns: Vec<Vector> = (0..n)
        .map(|k| {
            let mut v = a.mul_unchecked(&e, &Vector::basis(n, k)).scale(&two);
            let along = v[index].clone();
            v.add_scaled(&-along, &e);
            v
        })
        .collect();
    let coords: Vec<Vec<Rational>> = columns.iter().map(|c| c.coords().to_vec()).collect();
    let image: Vec<Vec<Rational>> = linalg::independent_subset(&coords, n)
        .into_iter()
        .map(|i| coords[i].clone())
        .collect();
    let b = linalg::extreme_rays(&image, n, Execution::Sequential)
        .into_iter()
        .map(|ray| {
            let v = Vector::new(ray);
            let w = v.weight();
            v.scale(&(Rational::from_integer(1.into()) / w))
        })
        .collect();
    Ok(ProjectionB {
        index,
        rank: image.len(),
        columns,
        b,
    })
}

/// Failed identities of a projection; empty when all hold.
pub fn projection_failures(a: &InheritanceTensor, pb: &ProjectionB, t: AlgebraType) -> Vec<String> {
    let n = a.dim();
    let e = Vector::basis(n, pb.index);
    let mut out = Vec::new();
    if pb.rank + 1 != t.m {
        out.push(format!("rank of B is {} but m - 1 = {}", pb.rank, t.m - 1));
    }
    if !pb.columns[pb.index].is_zero() {
        out.push("Be != 0".into());
    }
    if pb.columns.iter().any(|c| !c[pb.index].is_zero()) {
        out.push("Im B is not orthogonal to e".into());
    }
    for (i, bi) in pb.b.iter().enumerate() {
        if a.mul_unchecked(&e, bi) != unit_product(&e, bi) {
            out.push(format!("e b_{} != (e + b_{})/2", i + 1, i + 1));
        }
        for (k, bk) in pb.b.iter().enumerate().skip(i) {
            if pb.apply(&a.mul_unchecked(bi, bk)) != unit_product(bi, bk) {
                out.push(format!(
                    "B(b_{} b_{}) != (b_{} + b_{})/2",
                    i + 1,
                    k + 1,
                    i + 1,
                    k + 1
                ));
            }
        }
    }
    out
}

/// For each `b_i`, the unique basis idempotent `e_j` (`j != index`) with
/// `B e_j` a positive multiple of `b_i`; `None` where none or several exist.
pub fn b_pairing(a: &InheritanceTensor, pb: &ProjectionB) -> Vec<Option<usize>> {
    let idem = bernstein::basis_idempotents(a);
    pb.b.iter()
        .map(|bi| {
            let hits: Vec<usize> = idem
                .iter()
                .filter(|&j| j != pb.index && positive_multiple(&pb.columns[j], bi))
                .collect();
            (hits.len() == 1).then(|| hits[0])
        })
        .collect()
}

fn positive_multiple(v: &Vector, b: &Vector) -> bool {
    let Some(p) = b.coords().iter().position(|x| !x.is_zero()) else {
        return false;
    };
    let lambda = &v[p] / &b[p];
    lambda.is_positive() && b.scale(&lambda) == *v
}

/// Pool of `e_j` and its two `R`-orthogonality classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoolEntry {
    pub index: usize,
    /// `P(e_j) = {k : R(e_j, e_k) = 0}`, containing `j` itself.
    pub pool: IndexSet,
    pub punctured: IndexSet,
    /// Classes of `k ~ l ⟺ R(e_k, e_l) = 0` on the punctured pool.
    pub classes: Vec<IndexSet>,
}

impl PoolEntry {
    /// `(m_j, m̄_j)`: class sizes plus one.
    pub fn class_dims(&self) -> (usize, usize) {
        let size = |c: Option<&IndexSet>| c.map_or(0, IndexSet::len) + 1;
        (size(self.classes.first()), size(self.classes.get(1)))
    }
}

fn r_zero(a: &InheritanceTensor, j: usize, k: usize) -> bool {
    let n = a.dim();
    a.product(j, k) == unit_product(&Vector::basis(n, j), &Vector::basis(n, k))
}

/// Pool of `e_j` in the pure case (all basis vectors idempotent).
pub fn pool(a: &InheritanceTensor, j: usize) -> Result<PoolEntry> {
    let n = a.dim();
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, n });
    }
    if bernstein::basis_idempotents(a).len() != n {
        return Err(Error::MixedCase);
    }
    let pool: IndexSet = (0..n).filter(|&k| r_zero(a, j, k)).collect();
    let punctured: IndexSet = pool.iter().filter(|&k| k != j).collect();
    let mut classes: Vec<IndexSet> = Vec::new();
    for k in punctured.iter() {
        if classes.iter().any(|c| c.contains(k)) {
            continue;
        }
        classes.push(
            punctured
                .iter()
                .filter(|&l| l == k || r_zero(a, k, l))
                .collect(),
        );
    }
    // equivalence: disjoint classes, R = 0 inside, R != 0 across
    for (x, c) in classes.iter().enumerate() {
        for (y, d) in classes.iter().enumerate() {
            for k in c.iter() {
                for l in d.iter() {
                    if k != l && (x == y) != r_zero(a, k, l) {
                        return Err(Error::InvariantViolation(format!(
                            "R-orthogonality is not an equivalence on the punctured pool of e_{}",
                            j + 1
                        )));
                    }
                }
            }
        }
    }
    Ok(PoolEntry {
        index: j,
        pool,
        punctured,
        classes,
    })
}

/// Pools of every basis vector, checked against the pure-case invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoolStructure {
    pub m: usize,
    pub entries: Vec<PoolEntry>,
}

pub fn pool_structure(a: &InheritanceTensor) -> Result<PoolStructure> {
    let t = bernstein::algebra_type(a)?;
    pool_structure_unchecked(a, t)
}

fn pool_structure_unchecked(a: &InheritanceTensor, t: AlgebraType) -> Result<PoolStructure> {
    let n = a.dim();
    let entries = (0..n).map(|j| pool(a, j)).collect::<Result<Vec<_>>>()?;
    let fail = |msg: String| Err(Error::InvariantViolation(msg));
    let mut dims = None;
    for p in &entries {
        let j = p.index + 1;
        if p.punctured.len() + 1 != t.m {
            return fail(format!(
                "punctured pool of e_{j} has {} elements, expected m - 1 = {}",
                p.punctured.len(),
                t.m - 1
            ));
        }
        if p.classes.len() != 2 {
            return fail(format!(
                "punctured pool of e_{j} splits into {} classes, expected exactly two",
                p.classes.len()
            ));
        }
        let (mj, mbar) = p.class_dims();
        if mj + mbar != t.m + 1 || mj * mbar != n {
            return fail(format!(
                "class dimensions ({mj}, {mbar}) of e_{j} violate m_j + m̄_j = m + 1, m_j m̄_j = n"
            ));
        }
        let sorted = (mj.min(mbar), mj.max(mbar));
        if *dims.get_or_insert(sorted) != sorted {
            return fail(format!(
                "class dimensions of e_{j} differ from those of e_1"
            ));
        }
    }
    Ok(PoolStructure { m: t.m, entries })
}

/// Outcome of recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Constant {
        value: Vector,
    },
    Unit {
        n: usize,
    },
    /// `relabeling[new] = old`: idempotents first, both groups ascending.
    ExtendedMendel {
        params: ExtendedMendelParams,
        relabeling: Vec<usize>,
    },
    ExtendedQuadrille {
        labeling: GridLabeling,
    },
    Unclassified {
        diagnostics: Vec<String>,
    },
}

impl Classification {
    pub fn tag(&self) -> &'static str {
        match self {
            Classification::Constant { .. } => "Constant",
            Classification::Unit { .. } => "Unit",
            Classification::ExtendedMendel { .. } => "ExtendedMendel",
            Classification::ExtendedQuadrille { .. } => "ExtendedQuadrille",
            Classification::Unclassified { .. } => "Unclassified",
        }
    }

    pub fn is_classified(&self) -> bool {
        !matches!(self, Classification::Unclassified { .. })
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Constant { value } => write!(f, "Constant {value}"),
            Classification::Unit { n } => write!(f, "Unit(n={n})"),
            Classification::ExtendedMendel { params, .. } => write!(f, "ExtendedMendel({params})"),
            Classification::ExtendedQuadrille { labeling } => {
                write!(f, "ExtendedQuadrille({}, {})", labeling.nu, labeling.nu_bar)
            }
            Classification::Unclassified { diagnostics } => {
                write!(f, "Unclassified: {}", diagnostics.join("; "))
            }
        }
    }
}

fn unclassified(msg: impl Into<String>) -> Classification {
    Classification::Unclassified {
        diagnostics: vec![msg.into()],
    }
}

/// `a` relabeled so that new index `x` is old index `perm[x]`.
pub fn permute(a: &InheritanceTensor, perm: &[usize]) -> Result<InheritanceTensor> {
    let n = a.dim();
    let mut inverse = vec![0; n];
    for (new, &old) in perm.iter().enumerate() {
        inverse[old] = new;
    }
    let mut b = InheritanceTensor::builder(n)?;
    for (x, y) in pairs(n) {
        for (j, p) in a.row(perm[x], perm[y]) {
            b.insert(x, y, inverse[*j], p.clone())?;
        }
    }
    b.build()
}

fn is_constant(a: &InheritanceTensor) -> bool {
    let first = a.row(0, 0);
    pairs(a.dim()).all(|(i, k)| a.row(i, k) == first)
}

fn is_unit(a: &InheritanceTensor) -> bool {
    pairs(a.dim()).all(|(i, k)| r_zero(a, i, k))
}

/// Recognizes a Bernstein algebra; non-regular or non-normal ones, and any
/// failed structural check, come back as `Unclassified`.
pub fn recognize(a: &InheritanceTensor) -> Result<Classification> {
    if !bernstein::is_bernstein(a) {
        return Err(Error::NotBernstein);
    }
    recognize_unchecked(a)
}

pub(crate) fn recognize_unchecked(a: &InheritanceTensor) -> Result<Classification> {
    let p = bernstein::checked_decomposition(a)?;
    recognize_at(a, p.algebra_type(), bernstein::consistent_at(a, &p)?)
}

/// Recognition from a precomputed type and agreeing regularity verdict.
pub(crate) fn recognize_at(
    a: &InheritanceTensor,
    t: AlgebraType,
    verdict: RegularityVerdict,
) -> Result<Classification> {
    if is_constant(a) {
        return Ok(Classification::Constant {
            value: a.product(0, 0),
        });
    }
    if is_unit(a) {
        return Ok(Classification::Unit { n: a.dim() });
    }
    let mut diagnostics = Vec::new();
    if !verdict.regular() {
        diagnostics.push("not regular".to_string());
    }
    let normal = normality::is_normal(a);
    for w in &normal.witnesses {
        diagnostics.push(format!("not normal: {w}"));
    }
    if !diagnostics.is_empty() {
        return Ok(Classification::Unclassified { diagnostics });
    }
    let rho = bernstein::basis_idempotents(a).len();
    Ok(if rho == a.dim() {
        recognize_pure(a, t)?
    } else {
        recognize_mixed(a, t, rho)?
    })
}

fn recognize_pure(a: &InheritanceTensor, t: AlgebraType) -> Result<Classification> {
    let n = a.dim();
    let structure = match pool_structure_unchecked(a, t) {
        Ok(s) => s,
        Err(Error::InvariantViolation(msg)) => return Ok(unclassified(msg)),
        Err(e) => return Err(e),
    };
    let first = &structure.entries[0];
    // the class holding the smallest index of the punctured pool is row 1
    let (row, col) = if first.classes[0].as_slice()[0] < first.classes[1].as_slice()[0] {
        (&first.classes[0], &first.classes[1])
    } else {
        (&first.classes[1], &first.classes[0])
    };
    let (nu, nu_bar) = (col.len() + 1, row.len() + 1);
    let mut cells = vec![None; n];
    cells[0] = Some((0, 0));
    for (h, idx) in row.iter().enumerate() {
        cells[idx] = Some((0, h + 1));
    }
    for (g, idx) in col.iter().enumerate() {
        cells[idx] = Some((g + 1, 0));
    }
    let e0 = Vector::basis(n, 0);
    for (g, ig) in col.iter().enumerate() {
        for (h, ih) in row.iter().enumerate() {
            let v = &a.product(ig, ih).scale(&int(2)) - &e0;
            let support = v.support();
            if support.len() != 1 || v[support[0]] != int(1) {
                return Ok(unclassified(format!(
                    "2 e_{} e_{} - e_1 is not a basis vector",
                    ig + 1,
                    ih + 1
                )));
            }
            let target = support[0];
            if cells[target].is_some() {
                return Ok(unclassified(format!(
                    "grid cell ({}, {}) collides with an already placed index",
                    g + 2,
                    h + 2
                )));
            }
            cells[target] = Some((g + 1, h + 1));
        }
    }
    let Some(cells) = cells.into_iter().collect::<Option<Vec<_>>>() else {
        return Ok(unclassified("grid labeling does not cover every index"));
    };
    let labeling = GridLabeling { nu, nu_bar, cells };
    match families::extended_quadrille_labeled(&labeling) {
        Ok(regen) if regen == *a => Ok(Classification::ExtendedQuadrille { labeling }),
        Ok(_) => Ok(unclassified(
            "regenerated grid algebra differs from the input",
        )),
        Err(e) => Ok(unclassified(e.to_string())),
    }
}

fn recognize_mixed(a: &InheritanceTensor, t: AlgebraType, rho: usize) -> Result<Classification> {
    let n = a.dim();
    if rho != t.m {
        return Ok(unclassified(format!(
            "{rho} basis idempotents but rank m = {}",
            t.m
        )));
    }
    let idem = bernstein::basis_idempotents(a);
    let others: Vec<usize> = (0..n).filter(|&i| !idem.contains(i)).collect();
    let mut relabeling: Vec<usize> = idem.iter().collect();
    relabeling.extend(&others);
    let mut pairs_new = Vec::new();
    let (mut alpha, mut beta) = (Vec::new(), Vec::new());
    for &j in &others {
        let marked: Vec<usize> = a
            .product(j, j)
            .support()
            .into_iter()
            .filter(|&x| x != j)
            .collect();
        if marked.len() != 2 || !marked.iter().all(|&x| idem.contains(x)) {
            return Ok(unclassified(format!(
                "support of e_{0}^2 minus e_{0} is not a pair of basis idempotents",
                j + 1
            )));
        }
        let (i, k) = (marked[0], marked[1]);
        let row = a.row(i, k);
        if row.iter().any(|(x, _)| *x != i && *x != k && *x != j) {
            return Ok(unclassified(format!(
                "e_{} e_{} leaves the span of e_{}, e_{}, e_{}",
                i + 1,
                k + 1,
                i + 1,
                k + 1,
                j + 1
            )));
        }
        let pos = |x: usize| idem.position(x).expect("idempotent index");
        pairs_new.push((pos(i), pos(k)));
        alpha.push(a.entry(i, k, i));
        beta.push(a.entry(i, k, k));
    }
    let params = ExtendedMendelParams::new(rho, pairs_new, alpha, beta);
    let regen = match families::extended_mendel(&params) {
        Ok(r) => r,
        Err(e) => return Ok(unclassified(e.to_string())),
    };
    if permute(a, &relabeling)? != regen {
        return Ok(unclassified(
            "regenerated extended Mendel algebra differs from the input",
        ));
    }
    Ok(Classification::ExtendedMendel { params, relabeling })
}

/// Whether an instance is consistent with "Bernstein and ultranormal
/// implies regular".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainTheoremReport {
    pub bernstein: bool,
    pub ultranormal: bool,
    /// Present for Bernstein inputs.
    pub regular: Option<bool>,
    pub holds: bool,
    /// The full tensor of a violating instance.
    pub counterexample: Option<InheritanceTensor>,
}

impl MainTheoremReport {
    pub fn from_verdicts(
        a: &InheritanceTensor,
        bernstein: bool,
        ultranormal: bool,
        regular: Option<bool>,
    ) -> Self {
        let holds = !(bernstein && ultranormal && regular == Some(false));
        MainTheoremReport {
            bernstein,
            ultranormal,
            regular,
            holds,
            counterexample: (!holds).then(|| a.clone()),
        }
    }

    pub fn status(&self) -> &'static str {
        match (self.holds, self.bernstein && self.ultranormal) {
            (false, _) => "violated",
            (true, true) => "holds",
            (true, false) => "vacuous",
        }
    }
}

pub fn main_theorem_check(a: &InheritanceTensor) -> Result<MainTheoremReport> {
    let b = bernstein::is_bernstein(a);
    let u = normality::is_ultranormal(a)?.ultranormal;
    let r = if b {
        Some(bernstein::regularity_unchecked(a)?.regular())
    } else {
        None
    };
    Ok(MainTheoremReport::from_verdicts(a, b, u, r))
}

/// `s(xy) = s(x) s(y)`: a scalar check used by identity suites.
pub fn weight_is_multiplicative(a: &InheritanceTensor, x: &Vector, y: &Vector) -> bool {
    a.mul_unchecked(x, y).weight() == x.weight() * y.weight()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SimplexPoint;
    use crate::rational::ratio;

    fn e(n: usize, i: usize) -> Vector {
        Vector::basis(n, i)
    }

    #[test]
    fn mendel_projection() {
        let m = families::mendel();
        let pb = projection_b(&m, 0).unwrap();
        assert_eq!(pb.columns[1], e(3, 2).scale(&int(2)));
        assert_eq!(pb.columns[2], e(3, 2));
        assert_eq!(pb.rank, 1);
        assert_eq!(pb.b, vec![e(3, 2)]);
        let t = bernstein::algebra_type(&m).unwrap();
        assert!(projection_failures(&m, &pb, t).is_empty());
        assert_eq!(b_pairing(&m, &pb), vec![Some(1)]);
        assert_eq!(m.product(0, 2), unit_product(&e(3, 0), &e(3, 2)));
    }

    #[test]
    fn unit_projection() {
        let u = families::unit(4).unwrap();
        let pb = projection_b(&u, 0).unwrap();
        assert_eq!(pb.rank, 3);
        for k in 1..4 {
            assert_eq!(pb.columns[k], e(4, k));
        }
        assert_eq!(pb.b.len(), 3);
        let mut b = pb.b.clone();
        b.sort_by_key(|x| x.support());
        assert_eq!(b, vec![e(4, 1), e(4, 2), e(4, 3)]);
    }

    #[test]
    fn projection_needs_idempotent() {
        assert_eq!(
            projection_b(&families::mendel(), 2),
            Err(Error::NotIdempotent)
        );
    }

    #[test]
    fn quadrille_pools() {
        let q = families::quadrille();
        let p = pool(&q, 0).unwrap();
        assert_eq!(p.pool, IndexSet::from_iter([0, 2, 3]));
        assert_eq!(p.punctured.len(), 2);
        assert_eq!(p.classes.len(), 2);
        let s = pool_structure(&families::extended_quadrille(2, 3).unwrap()).unwrap();
        for entry in &s.entries {
            let (a, b) = entry.class_dims();
            assert_eq!(a * b, 6);
        }
        assert_eq!(pool(&families::mendel(), 0), Err(Error::MixedCase));
    }

    #[test]
    fn quadrille_recognition() {
        match recognize(&families::quadrille()).unwrap() {
            Classification::ExtendedQuadrille { labeling } => {
                assert_eq!(labeling, families::quadrille_labeling());
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn row_major_grid_round_trips() {
        for (nu, nb) in [(2, 3), (3, 2), (3, 4)] {
            let c = recognize(&families::extended_quadrille(nu, nb).unwrap()).unwrap();
            assert_eq!(
                c,
                Classification::ExtendedQuadrille {
                    labeling: GridLabeling::row_major(nu, nb)
                }
            );
        }
    }

    #[test]
    fn mendel_round_trip() {
        let p = ExtendedMendelParams::new(
            3,
            vec![(0, 2), (1, 2)],
            vec![ratio(1, 4), int(0)],
            vec![ratio(1, 8), ratio(1, 3)],
        );
        let a = families::extended_mendel(&p).unwrap();
        match recognize(&a).unwrap() {
            Classification::ExtendedMendel { params, relabeling } => {
                assert_eq!(params, p);
                assert_eq!(relabeling, vec![0, 1, 2, 3, 4]);
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn permuted_mendel_is_recognized() {
        let a = permute(&families::mendel(), &[2, 0, 1]).unwrap();
        match recognize(&a).unwrap() {
            Classification::ExtendedMendel { relabeling, .. } => {
                assert_eq!(relabeling, vec![1, 2, 0])
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn unit_and_constant() {
        assert_eq!(
            recognize(&families::unit(3).unwrap()).unwrap(),
            Classification::Unit { n: 3 }
        );
        let c = SimplexPoint::barycenter(2);
        assert_eq!(
            recognize(&families::constant(&c)).unwrap().tag(),
            "Constant"
        );
    }

    #[test]
    fn non_regular_is_unclassified() {
        let a = InheritanceTensor::from_products(3, |i, k| match (i, k) {
            (0, 0) => e(3, 0),
            (1, 1) => e(3, 1),
            (0, 1) => unit_product(&e(3, 0), &e(3, 1)),
            (0, 2) => e(3, 1),
            _ => e(3, 0),
        })
        .unwrap();
        let c = recognize(&a).unwrap();
        assert_eq!(c.tag(), "Unclassified");
    }

    #[test]
    fn main_theorem_examples() {
        let r = main_theorem_check(&families::quadrille()).unwrap();
        assert!(r.holds && r.status() == "holds");
        let c = families::constant(&SimplexPoint::barycenter(2));
        let r = main_theorem_check(&c).unwrap();
        assert!(r.holds && !r.ultranormal);
        assert_eq!(r.status(), "vacuous");
    }

    #[test]
    fn injected_violation_is_reported() {
        let a = families::mendel();
        let r = MainTheoremReport::from_verdicts(&a, true, true, Some(false));
        assert!(!r.holds);
        assert_eq!(r.status(), "violated");
        assert_eq!(r.counterexample, Some(a));
    }
}
