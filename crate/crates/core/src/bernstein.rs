//! Bernstein property, Peirce decomposition, type `(m, delta)` and the
//! regularity criteria.
//!
//! For a nonzero idempotent `e` of a Bernstein algebra, `y -> 2ey` is a
//! projection of the barideal `ker s`; its image is `U` and its kernel `W`.
//! The rank is `m = dim U + 1` and the defect is `delta = dim W`.

use std::fmt;

use num_traits::{One, ToPrimitive};

use crate::algebra::{pairs, unit_product, InheritanceTensor, SimplexPoint, Vector};
use crate::error::{Error, Result};
use crate::forms;
use crate::lattice::IndexSet;
use crate::linalg;
use crate::quartic;
use crate::rational::{common_denominator, half, int, Rational};
use crate::sample::Sampler;

/// Seed of the second idempotent used to cross-check the type.
pub const TYPE_CROSS_CHECK_SEED: u64 = 0x5eed_0001;

/// `(x^2)^2 = s(x)^2 x^2` holds identically.
pub fn is_bernstein(a: &InheritanceTensor) -> bool {
    quartic::residual_vanishes(a)
}

/// `x^2` for a simplex point `x`, an idempotent of weight 1 in a Bernstein
/// algebra.
pub fn principal_idempotent(a: &InheritanceTensor, x: &SimplexPoint) -> Result<Vector> {
    if !is_bernstein(a) {
        return Err(Error::NotBernstein);
    }
    let sq = a.multiply(x.as_vector(), x.as_vector())?;
    debug_assert!(a.is_idempotent(&sq));
    Ok(sq)
}

/// `A = Lin{e} ⊕ U ⊕ W` relative to an idempotent `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeirceDecomposition {
    pub idempotent: Vector,
    pub u_basis: Vec<Vector>,
    pub w_basis: Vec<Vector>,
}

impl PeirceDecomposition {
    pub fn algebra_type(&self) -> AlgebraType {
        AlgebraType {
            m: self.u_basis.len() + 1,
            delta: self.w_basis.len(),
        }
    }
}

/// Rank and defect, `m + delta = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraType {
    pub m: usize,
    pub delta: usize,
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.delta)
    }
}

/// Peirce decomposition relative to a nonzero idempotent of weight 1.
///
/// The barideal is spanned by `e_k - e_0`; `U` is the column space and `W`
/// the kernel of `y -> 2ey` on it, both found by exact elimination.
pub fn peirce_decompose(a: &InheritanceTensor, e: &Vector) -> Result<PeirceDecomposition> {
    if e.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: e.dim(),
        });
    }
    if !e.weight().is_one() || !a.is_idempotent(e) {
        return Err(Error::NotIdempotent);
    }
    let n = a.dim();
    let two = int(2);
    let bari: Vec<Vector> = (1..n)
        .map(|k| &Vector::basis(n, k) - &Vector::basis(n, 0))
        .collect();
    let images: Vec<Vector> = bari
        .iter()
        .map(|b| a.mul_unchecked(e, b).scale(&two))
        .collect();
    let image_coords: Vec<Vec<Rational>> = images.iter().map(|v| v.coords().to_vec()).collect();
    let u_basis: Vec<Vector> = linalg::independent_subset(&image_coords, n)
        .into_iter()
        .map(|i| images[i].clone())
        .collect();
    // kernel of the n x (n-1) matrix whose columns are the images
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|r| images.iter().map(|v| v[r].clone()).collect())
        .collect();
    let w_basis: Vec<Vector> = linalg::null_space(&rows, n - 1)
        .into_iter()
        .map(|c| {
            let mut w = Vector::zeros(n);
            for (ck, b) in c.iter().zip(&bari) {
                w.add_scaled(ck, b);
            }
            w
        })
        .collect();
    for u in &u_basis {
        if a.mul_unchecked(e, u).scale(&two) != *u {
            return Err(Error::InvariantViolation(
                "multiplication by 2e is not a projection of the barideal".into(),
            ));
        }
    }
    Ok(PeirceDecomposition {
        idempotent: e.clone(),
        u_basis,
        w_basis,
    })
}

/// Type at a given idempotent, skipping the Bernstein check.
pub(crate) fn type_at(a: &InheritanceTensor, e: &Vector) -> Result<AlgebraType> {
    peirce_decompose(a, e).map(|p| p.algebra_type())
}

pub(crate) fn barycenter_idempotent(a: &InheritanceTensor) -> Vector {
    let x = Vector::barycenter(a.dim());
    a.mul_unchecked(&x, &x)
}

/// Peirce decomposition at the squared barycenter, with its type
/// cross-checked at a seeded idempotent.
pub(crate) fn checked_decomposition(a: &InheritanceTensor) -> Result<PeirceDecomposition> {
    let p = peirce_decompose(a, &barycenter_idempotent(a))?;
    let at_center = p.algebra_type();
    let x = Sampler::new(TYPE_CROSS_CHECK_SEED).simplex_point(a.dim());
    let x = x.as_vector();
    let at_random = type_at(a, &a.mul_unchecked(x, x))?;
    if at_center != at_random {
        return Err(Error::InvariantViolation(format!(
            "type {at_center} at the barycenter idempotent differs from {at_random} at a sampled idempotent"
        )));
    }
    Ok(p)
}

/// Type of an algebra already known to be Bernstein.
pub(crate) fn type_unchecked(a: &InheritanceTensor) -> Result<AlgebraType> {
    checked_decomposition(a).map(|p| p.algebra_type())
}

/// Type `(m, delta)` computed at the squared barycenter and cross-checked at
/// a second, seeded idempotent.
pub fn algebra_type(a: &InheritanceTensor) -> Result<AlgebraType> {
    if !is_bernstein(a) {
        return Err(Error::NotBernstein);
    }
    type_unchecked(a)
}

/// Equivalent characterizations of regularity for Bernstein algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegularityCriterion {
    /// `dim J = m`.
    InvariantDimension,
    /// `UW = 0` and `W^2 = 0`.
    PeirceProducts,
    /// `2(e_i e_k)e_l = e_i e_l + e_k e_l` for all basis triples, the
    /// polarization of `x^2 y = s(x) xy`.
    PolarizedIdentity,
}

impl RegularityCriterion {
    pub const ALL: [RegularityCriterion; 3] = [
        RegularityCriterion::InvariantDimension,
        RegularityCriterion::PeirceProducts,
        RegularityCriterion::PolarizedIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RegularityCriterion::InvariantDimension => "invariant_dimension",
            RegularityCriterion::PeirceProducts => "peirce_products",
            RegularityCriterion::PolarizedIdentity => "polarized_identity",
        }
    }
}

/// Outcome of each regularity criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularityVerdict {
    pub invariant_dimension: bool,
    pub peirce_products: bool,
    pub polarized_identity: bool,
}

impl RegularityVerdict {
    pub fn get(&self, c: RegularityCriterion) -> bool {
        match c {
            RegularityCriterion::InvariantDimension => self.invariant_dimension,
            RegularityCriterion::PeirceProducts => self.peirce_products,
            RegularityCriterion::PolarizedIdentity => self.polarized_identity,
        }
    }

    pub fn agree(&self) -> bool {
        self.invariant_dimension == self.peirce_products
            && self.peirce_products == self.polarized_identity
    }

    pub fn regular(&self) -> bool {
        self.invariant_dimension && self.peirce_products && self.polarized_identity
    }
}

fn by_invariant_dimension(a: &InheritanceTensor, t: AlgebraType) -> bool {
    forms::invariant_space(a).len() == t.m
}

fn by_peirce_products(a: &InheritanceTensor, p: &PeirceDecomposition) -> bool {
    let uw = p
        .u_basis
        .iter()
        .all(|u| p.w_basis.iter().all(|w| a.mul_unchecked(u, w).is_zero()));
    let ww = p.w_basis.iter().enumerate().all(|(i, w)| {
        p.w_basis[i..]
            .iter()
            .all(|w2| a.mul_unchecked(w, w2).is_zero())
    });
    uw && ww
}

fn by_polarized_identity(a: &InheritanceTensor) -> bool {
    polarized_identity_scaled(a).unwrap_or_else(|| polarized_identity_exact(a))
}

/// `2 sum_j q_{ik,j} q_{jl,t} = D (q_{il,t} + q_{kl,t})` with `q = D p` in
/// `i128`; `None` on overflow.
fn polarized_identity_scaled(a: &InheritanceTensor) -> Option<bool> {
    let n = a.dim();
    let d = common_denominator(a.entries().map(|(_, _, _, p)| p)).to_i128()?;
    let mut q = vec![0i128; n * n * n];
    for (i, k, j, p) in a.entries() {
        let v = (p * Rational::from_integer(d.into()))
            .to_integer()
            .to_i128()?;
        q[(i * n + k) * n + j] = v;
        q[(k * n + i) * n + j] = v;
    }
    let at = |i: usize, k: usize| &q[(i * n + k) * n..(i * n + k + 1) * n];
    let mut lhs = vec![0i128; n];
    for (i, k) in pairs(n) {
        for l in 0..n {
            lhs.iter_mut().for_each(|v| *v = 0);
            for (j, &c) in at(i, k).iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (t, &r) in at(j, l).iter().enumerate() {
                    lhs[t] = lhs[t].checked_add(c.checked_mul(r)?)?;
                }
            }
            for ((x, p), q) in lhs.iter().zip(at(i, l)).zip(at(k, l)) {
                if x.checked_mul(2)? != d.checked_mul(p.checked_add(*q)?)? {
                    return Some(false);
                }
            }
        }
    }
    Some(true)
}

fn polarized_identity_exact(a: &InheritanceTensor) -> bool {
    let n = a.dim();
    let products: Vec<Vec<Vector>> = (0..n)
        .map(|i| (0..n).map(|k| a.product(i, k)).collect())
        .collect();
    let two = int(2);
    pairs(n).all(|(i, k)| {
        (0..n).all(|l| {
            let lhs = a
                .mul_unchecked(&products[i][k], &Vector::basis(n, l))
                .scale(&two);
            lhs == &products[i][l] + &products[k][l]
        })
    })
}

/// One criterion, for an algebra already known to be Bernstein.
pub(crate) fn criterion_unchecked(a: &InheritanceTensor, c: RegularityCriterion) -> Result<bool> {
    Ok(match c {
        RegularityCriterion::InvariantDimension => by_invariant_dimension(a, type_unchecked(a)?),
        RegularityCriterion::PeirceProducts => {
            by_peirce_products(a, &peirce_decompose(a, &barycenter_idempotent(a))?)
        }
        RegularityCriterion::PolarizedIdentity => by_polarized_identity(a),
    })
}

pub fn regular_by(a: &InheritanceTensor, c: RegularityCriterion) -> Result<bool> {
    if !is_bernstein(a) {
        return Err(Error::NotBernstein);
    }
    criterion_unchecked(a, c)
}

/// All three criteria, each computed independently, without requiring
/// them to agree.
pub fn regularity_criteria(a: &InheritanceTensor) -> Result<RegularityVerdict> {
    if !is_bernstein(a) {
        return Err(Error::NotBernstein);
    }
    verdict_unchecked(a)
}

pub(crate) fn verdict_unchecked(a: &InheritanceTensor) -> Result<RegularityVerdict> {
    Ok(verdict_at(a, &checked_decomposition(a)?))
}

/// All three criteria from an already checked decomposition.
pub(crate) fn verdict_at(a: &InheritanceTensor, p: &PeirceDecomposition) -> RegularityVerdict {
    RegularityVerdict {
        invariant_dimension: by_invariant_dimension(a, p.algebra_type()),
        peirce_products: by_peirce_products(a, p),
        polarized_identity: by_polarized_identity(a),
    }
}

pub(crate) fn consistent(v: RegularityVerdict) -> Result<RegularityVerdict> {
    if !v.agree() {
        return Err(Error::InvariantViolation(format!(
            "regularity criteria disagree: invariant_dimension={}, peirce_products={}, polarized_identity={}",
            v.invariant_dimension, v.peirce_products, v.polarized_identity
        )));
    }
    Ok(v)
}

pub(crate) fn regularity_unchecked(a: &InheritanceTensor) -> Result<RegularityVerdict> {
    verdict_unchecked(a).and_then(consistent)
}

pub(crate) fn consistent_at(
    a: &InheritanceTensor,
    p: &PeirceDecomposition,
) -> Result<RegularityVerdict> {
    consistent(verdict_at(a, p))
}

/// Runs all three criteria; disagreement is an internal error.
pub fn regularity(a: &InheritanceTensor) -> Result<RegularityVerdict> {
    if !is_bernstein(a) {
        return Err(Error::NotBernstein);
    }
    regularity_unchecked(a)
}

pub fn is_regular(a: &InheritanceTensor) -> Result<bool> {
    regularity(a).map(|v| v.regular())
}

/// Sufficient test from a single idempotent: `(e_i e_k) e = (e_i e + e_k e)/2`
/// for all basis pairs implies regularity. One-directional.
pub fn regular_via_idempotent(a: &InheritanceTensor, e: &Vector) -> bool {
    let n = a.dim();
    let side: Vec<Vector> = (0..n)
        .map(|i| a.mul_unchecked(&Vector::basis(n, i), e))
        .collect();
    pairs(n).all(|(i, k)| {
        let lhs = a.mul_unchecked(&a.product(i, k), e);
        lhs == (&side[i] + &side[k]).scale(&half())
    })
}

/// Indices `i` with `e_i e_i = e_i`.
pub fn basis_idempotents(a: &InheritanceTensor) -> IndexSet {
    IndexSet::from_iter((0..a.dim()).filter(|&i| {
        let row = a.row(i, i);
        row.len() == 1 && row[0].0 == i
    }))
}

/// `A^2 = A`: the pairwise products span the whole space.
pub fn is_nuclear(a: &InheritanceTensor) -> bool {
    let n = a.dim();
    let products: Vec<Vec<Rational>> = pairs(n)
        .map(|(i, k)| a.product(i, k).into_coords())
        .collect();
    linalg::rank(&products, n) == n
}

/// Identities satisfied by nonzero idempotents of a Bernstein algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdempotentIdentity {
    /// `z1 z3 = (z1 + z3)/2` and `z2 z3 = (z2 + z3)/2` for `z3 = z1 z2`.
    ProductMidpoints,
    /// `z3^2 = z1/4 + z2/4 + z3/2` for `z3 = z1 z2`.
    ProductSquare,
    /// `R(z1z2, z3z4) + R(z1z3, z2z4) + R(z1z4, z2z3) = 0`.
    FourTerm,
    /// `2R(z1z2, z1z3) + R(z1, z2z3) = 0`.
    ThreeTerm,
    /// `R(z1z2, w1w2) = -(R(z1,z2) + R(w1,w2))/2` when every `R(z_i, w_j) = 0`.
    OrthogonalPairs,
    /// `R(z1z2, w) = -R(z1,z2)/2` when `R(z1,w) = R(z2,w) = 0`.
    OrthogonalSingle,
}

impl IdempotentIdentity {
    pub const ALL: [IdempotentIdentity; 6] = [
        IdempotentIdentity::ProductMidpoints,
        IdempotentIdentity::ProductSquare,
        IdempotentIdentity::FourTerm,
        IdempotentIdentity::ThreeTerm,
        IdempotentIdentity::OrthogonalPairs,
        IdempotentIdentity::OrthogonalSingle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdempotentIdentity::ProductMidpoints => "product_midpoints",
            IdempotentIdentity::ProductSquare => "product_square",
            IdempotentIdentity::FourTerm => "four_term",
            IdempotentIdentity::ThreeTerm => "three_term",
            IdempotentIdentity::OrthogonalPairs => "orthogonal_pairs",
            IdempotentIdentity::OrthogonalSingle => "orthogonal_single",
        }
    }
}

/// One identity evaluated on (part of) the argument tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: IdempotentIdentity,
    /// Positions in the argument tuple the identity was applied to.
    pub args: Vec<usize>,
    /// `false` when the identity's hypothesis fails; no residual then.
    pub applicable: bool,
    pub residual: Option<Vector>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.residual.as_ref().is_none_or(Vector::is_zero)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_zero(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn applicable(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| c.applicable)
    }
}

/// Evaluates every identity applicable to the tuple `z`:
/// with two arguments the product identities on `(z1, z2)`; with three also
/// the three-term identity and the single-orthogonal one with `w = z3`; with
/// four also the four-term identity and the pair-orthogonal one with
/// `(w1, w2) = (z3, z4)`.
pub fn verify_idempotent_identities(a: &InheritanceTensor, z: &[Vector]) -> Result<IdentityReport> {
    if !is_bernstein(a) {
        return Err(Error::NotBernstein);
    }
    identities_unchecked(a, z)
}

pub(crate) fn identities_unchecked(a: &InheritanceTensor, z: &[Vector]) -> Result<IdentityReport> {
    for v in z {
        if v.dim() != a.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                found: v.dim(),
            });
        }
        if !a.is_idempotent(v) {
            return Err(Error::NotIdempotent);
        }
    }
    let mul = |x: &Vector, y: &Vector| a.mul_unchecked(x, y);
    let r = |x: &Vector, y: &Vector| a.r_unchecked(x, y);
    let mut checks = Vec::new();
    let mut push = |identity, args: &[usize], residual: Option<Vector>| {
        checks.push(IdentityCheck {
            identity,
            args: args.to_vec(),
            applicable: residual.is_some(),
            residual,
        })
    };

    if z.len() >= 2 {
        let (z1, z2) = (&z[0], &z[1]);
        let z3 = mul(z1, z2);
        let mid1 = &mul(z1, &z3) - &unit_product(z1, &z3);
        let mid2 = &mul(z2, &z3) - &unit_product(z2, &z3);
        let mut midpoints = mid1;
        // both halves must vanish; report them stacked
        midpoints = Vector::new(
            midpoints
                .into_coords()
                .into_iter()
                .chain(mid2.into_coords())
                .collect(),
        );
        push(
            IdempotentIdentity::ProductMidpoints,
            &[0, 1],
            Some(midpoints),
        );
        let mut expected = z1.scale(&Rational::new(1.into(), 4.into()));
        expected.add_scaled(&Rational::new(1.into(), 4.into()), z2);
        expected.add_scaled(&half(), &z3);
        push(
            IdempotentIdentity::ProductSquare,
            &[0, 1],
            Some(&mul(&z3, &z3) - &expected),
        );
    }
    if z.len() >= 3 {
        let (z1, z2, z3) = (&z[0], &z[1], &z[2]);
        let mut res = r(&mul(z1, z2), &mul(z1, z3)).scale(&int(2));
        res = &res + &r(z1, &mul(z2, z3));
        push(IdempotentIdentity::ThreeTerm, &[0, 1, 2], Some(res));

        let w = z3;
        let hyp = r(z1, w).is_zero() && r(z2, w).is_zero();
        let residual = hyp.then(|| {
            let mut res = r(&mul(z1, z2), w);
            res.add_scaled(&half(), &r(z1, z2));
            res
        });
        push(IdempotentIdentity::OrthogonalSingle, &[0, 1, 2], residual);
    }
    if z.len() >= 4 {
        let (z1, z2, z3, z4) = (&z[0], &z[1], &z[2], &z[3]);
        let res = &(&r(&mul(z1, z2), &mul(z3, z4)) + &r(&mul(z1, z3), &mul(z2, z4)))
            + &r(&mul(z1, z4), &mul(z2, z3));
        push(IdempotentIdentity::FourTerm, &[0, 1, 2, 3], Some(res));

        let (w1, w2) = (z3, z4);
        let hyp = [z1, z2]
            .iter()
            .all(|zi| [w1, w2].iter().all(|wj| r(zi, wj).is_zero()));
        let residual = hyp.then(|| {
            let mut res = r(&mul(z1, z2), &mul(w1, w2));
            res.add_scaled(&half(), &r(z1, z2));
            res.add_scaled(&half(), &r(w1, w2));
            res
        });
        push(IdempotentIdentity::OrthogonalPairs, &[0, 1, 2, 3], residual);
    }
    Ok(IdentityReport { checks })
}

/// Aggregate of the identity checks over many tuples.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IdentitySuite {
    pub tuples: usize,
    /// Applicable evaluations per identity.
    pub applicable: std::collections::BTreeMap<IdempotentIdentity, usize>,
    /// Tuples (0-based basis indices) with a nonzero residual.
    pub failures: Vec<(Vec<usize>, IdempotentIdentity)>,
}

impl IdentitySuite {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, tuple: &[usize], report: &IdentityReport) {
        self.tuples += 1;
        for c in report.applicable() {
            *self.applicable.entry(c.identity).or_default() += 1;
            if !c.passed() {
                self.failures.push((tuple.to_vec(), c.identity));
            }
        }
    }
}

/// Every ordered 4-tuple of basis idempotents, with repetition.
pub fn basis_idempotent_suite(
    a: &InheritanceTensor,
    exec: crate::par::Execution,
) -> Result<IdentitySuite> {
    if !is_bernstein(a) {
        return Err(Error::NotBernstein);
    }
    let n = a.dim();
    let idem: Vec<usize> = basis_idempotents(a).iter().collect();
    let r = idem.len();
    let tuples: Vec<Vec<usize>> = (0..r.pow(4))
        .map(|mut t| {
            (0..4)
                .map(|_| {
                    let i = idem[t % r];
                    t /= r;
                    i
                })
                .collect()
        })
        .collect();
    let reports = crate::par::map_collect(exec, &tuples, |t| {
        let z: Vec<Vector> = t.iter().map(|&i| Vector::basis(n, i)).collect();
        identities_unchecked(a, &z)
    });
    let mut suite = IdentitySuite::default();
    for (t, rep) in tuples.iter().zip(reports) {
        suite.absorb(t, &rep?);
    }
    Ok(suite)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::rational::ratio;
    use num_traits::Zero;

    fn e(n: usize, i: usize) -> Vector {
        Vector::basis(n, i)
    }

    fn segment_map() -> InheritanceTensor {
        let mut b = InheritanceTensor::builder(2).unwrap();
        b.insert(0, 0, 0, int(1)).unwrap();
        b.insert(1, 1, 1, int(1)).unwrap();
        b.insert(0, 1, 1, int(1)).unwrap();
        b.build().unwrap()
    }

    #[test]
    fn bernstein_examples() {
        assert!(is_bernstein(&families::hardy_weinberg()));
        let c =
            SimplexPoint::new(Vector::new(vec![ratio(1, 3), ratio(1, 6), ratio(1, 2)])).unwrap();
        assert!(is_bernstein(&families::constant(&c)));
        assert!(!is_bernstein(&segment_map()));
    }

    #[test]
    fn principal_idempotent_examples() {
        let hw = families::hardy_weinberg();
        let e = principal_idempotent(&hw, &SimplexPoint::barycenter(3)).unwrap();
        assert_eq!(e, Vector::new(vec![ratio(1, 4), ratio(1, 4), ratio(1, 2)]));

        let u = families::unit(4).unwrap();
        let x = SimplexPoint::new(Vector::new(vec![
            ratio(1, 2),
            ratio(1, 4),
            ratio(1, 8),
            ratio(1, 8),
        ]))
        .unwrap();
        assert_eq!(&principal_idempotent(&u, &x).unwrap(), x.as_vector());

        let c = SimplexPoint::new(Vector::new(vec![ratio(2, 3), ratio(1, 3)])).unwrap();
        let ca = families::constant(&c);
        assert_eq!(
            &principal_idempotent(&ca, &SimplexPoint::barycenter(2)).unwrap(),
            c.as_vector()
        );

        assert_eq!(
            principal_idempotent(&segment_map(), &SimplexPoint::barycenter(2)),
            Err(Error::NotBernstein)
        );
    }

    #[test]
    fn peirce_dimensions() {
        let m = families::mendel();
        let p = peirce_decompose(&m, &e(3, 0)).unwrap();
        assert_eq!((p.u_basis.len(), p.w_basis.len()), (1, 1));
        for u in &p.u_basis {
            assert!(u.weight().is_zero());
            assert_eq!(m.mul_unchecked(&e(3, 0), u).scale(&int(2)), *u);
        }
        for w in &p.w_basis {
            assert!(w.weight().is_zero());
            assert!(m.mul_unchecked(&e(3, 0), w).is_zero());
        }
        // U = Lin{e3 - e1}, W = Lin{e1 + e2 - 2e3}
        let u = &p.u_basis[0];
        assert!(u[1].is_zero());
        assert_eq!(u[2], -u[0].clone());
        let w = &p.w_basis[0];
        assert_eq!(&w[0], &w[1]);
        assert_eq!(w[2], -(&w[0] * int(2)));

        let un = families::unit(5).unwrap();
        let p = peirce_decompose(&un, &e(5, 2)).unwrap();
        assert_eq!((p.u_basis.len(), p.w_basis.len()), (4, 0));

        let c =
            SimplexPoint::new(Vector::new(vec![ratio(1, 4), ratio(1, 4), ratio(1, 2)])).unwrap();
        let ca = families::constant(&c);
        let p = peirce_decompose(&ca, c.as_vector()).unwrap();
        assert_eq!((p.u_basis.len(), p.w_basis.len()), (0, 2));
    }

    #[test]
    fn peirce_rejects_non_idempotents() {
        let m = families::mendel();
        assert_eq!(peirce_decompose(&m, &e(3, 2)), Err(Error::NotIdempotent));
        assert_eq!(
            peirce_decompose(&m, &Vector::zeros(3)),
            Err(Error::NotIdempotent)
        );
        assert!(matches!(
            peirce_decompose(&m, &e(2, 0)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn types_of_named_algebras() {
        assert_eq!(
            algebra_type(&families::mendel()).unwrap(),
            AlgebraType { m: 2, delta: 1 }
        );
        assert_eq!(
            algebra_type(&families::quadrille()).unwrap(),
            AlgebraType { m: 3, delta: 1 }
        );
        for (nu, nb) in [(2, 3), (3, 3), (2, 4)] {
            let t = algebra_type(&families::extended_quadrille(nu, nb).unwrap()).unwrap();
            assert_eq!(
                t,
                AlgebraType {
                    m: nu + nb - 1,
                    delta: (nu - 1) * (nb - 1)
                }
            );
        }
        assert_eq!(algebra_type(&segment_map()), Err(Error::NotBernstein));
    }

    #[test]
    fn mendel_and_quadrille_are_regular() {
        for a in [families::mendel(), families::quadrille()] {
            let v = regularity(&a).unwrap();
            assert!(v.regular() && v.agree());
            for c in RegularityCriterion::ALL {
                assert!(regular_by(&a, c).unwrap());
            }
        }
    }

    #[test]
    fn mendel_polarized_witness() {
        let m = families::mendel();
        let lhs = m.mul_unchecked(&m.product(0, 1), &e(3, 2)).scale(&int(2));
        let expected = Vector::new(vec![ratio(1, 2), ratio(1, 2), int(1)]);
        assert_eq!(lhs, expected);
        assert_eq!(&m.product(0, 2) + &m.product(1, 2), expected);
    }

    #[test]
    fn retract_onto_unit_edge_is_not_regular() {
        // e1, e2 span a unit subalgebra; e3 products land on that edge
        let a = InheritanceTensor::from_products(3, |i, k| match (i, k) {
            (0, 0) => e(3, 0),
            (1, 1) => e(3, 1),
            (0, 1) => (&e(3, 0) + &e(3, 1)).scale(&half()),
            (0, 2) => e(3, 1),
            (1, 2) => e(3, 0),
            _ => e(3, 0),
        })
        .unwrap();
        assert!(is_bernstein(&a));
        assert_eq!(algebra_type(&a).unwrap(), AlgebraType { m: 2, delta: 1 });
        let v = regularity(&a).unwrap();
        assert!(!v.regular());
        assert!(v.agree());
        assert!(!is_nuclear(&a));
    }

    #[test]
    fn scaled_polarization_matches_exact() {
        for f in crate::fixtures::corpus() {
            let a = &f.tensor;
            assert_eq!(
                polarized_identity_scaled(a),
                Some(polarized_identity_exact(a)),
                "{}",
                f.name
            );
        }
    }

    #[test]
    fn single_idempotent_test() {
        let m = families::mendel();
        assert!(regular_via_idempotent(&m, &e(3, 0)));
        let q = families::quadrille();
        assert!(regular_via_idempotent(&q, &barycenter_idempotent(&q)));
    }

    #[test]
    fn basis_idempotent_examples() {
        assert_eq!(
            basis_idempotents(&families::mendel()),
            IndexSet::from_iter([0, 1])
        );
        assert_eq!(
            basis_idempotents(&families::extended_quadrille(2, 3).unwrap()).len(),
            6
        );
        let c = SimplexPoint::new(Vector::new(vec![ratio(1, 2), ratio(1, 2)])).unwrap();
        assert!(basis_idempotents(&families::constant(&c)).is_empty());
    }

    #[test]
    fn quadrille_four_term_identity() {
        let q = families::quadrille();
        let z: Vec<Vector> = (0..4).map(|i| e(4, i)).collect();
        let rep = verify_idempotent_identities(&q, &z).unwrap();
        let four = rep
            .checks
            .iter()
            .find(|c| c.identity == IdempotentIdentity::FourTerm)
            .unwrap();
        assert!(four.residual.as_ref().unwrap().is_zero());
        assert!(rep.all_zero());
    }

    #[test]
    fn equal_arguments_give_zero_residuals() {
        let m = families::mendel();
        let z = vec![e(3, 1); 4];
        let rep = verify_idempotent_identities(&m, &z).unwrap();
        assert!(rep.all_zero());
        assert_eq!(rep.applicable().count(), 6);
    }

    #[test]
    fn mendel_product_identities() {
        let m = families::mendel();
        let rep = verify_idempotent_identities(&m, &[e(3, 0), e(3, 1)]).unwrap();
        assert_eq!(rep.checks.len(), 2);
        assert!(rep.all_zero());
        assert_eq!(
            verify_idempotent_identities(&m, &[e(3, 0), e(3, 2)]),
            Err(Error::NotIdempotent)
        );
    }

    #[test]
    fn nuclear_examples() {
        assert!(is_nuclear(&families::mendel()));
        assert!(is_nuclear(&families::unit(3).unwrap()));
        let c = SimplexPoint::new(Vector::new(vec![ratio(1, 2), ratio(1, 2)])).unwrap();
        assert!(!is_nuclear(&families::constant(&c)));
    }
}
