//! The three normality conditions on the coordinate quadratic forms
//! `x'_j = Σ p_{ik,j} x_i x_k`, and ultranormality.
//!
//! Internal irreducibility: every `x'_j` depends only on `x_i + x_k` and the
//! remaining coordinates iff it is unchanged by `(x_i, x_k) -> (x_i + t,
//! x_k - t)`. Expanding, the coefficients of `x_i^2`, `x_i x_k`, `x_k^2`
//! (in the symmetric normalization `p_{ik,j}`) must coincide, and so must
//! those of `x_i x_l` and `x_k x_l` for every other `l`.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{pairs, InheritanceTensor};
use crate::error::Result;
use crate::lattice::{self, IndexSet};
use crate::par::{self, Execution};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    Nondegenerate,
    ExternallyIrreducible,
    InternallyIrreducible,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::Nondegenerate => "nondegenerate",
            Condition::ExternallyIrreducible => "externally_irreducible",
            Condition::InternallyIrreducible => "internally_irreducible",
        }
    }
}

/// A condition failure and the 0-based indices responsible for it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Witness {
    pub condition: Condition,
    pub indices: Vec<usize>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{} fails at ({})", self.condition.name(), idx.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityReport {
    pub nondegenerate: bool,
    pub externally_irreducible: bool,
    pub internally_irreducible: bool,
    pub witnesses: Vec<Witness>,
}

impl NormalityReport {
    pub fn is_normal(&self) -> bool {
        self.nondegenerate && self.externally_irreducible && self.internally_irreducible
    }
}

/// Coefficient vector of `x'_j` over the pairs `i <= k`.
fn coordinate_forms(a: &InheritanceTensor) -> Vec<Vec<Rational>> {
    let n = a.dim();
    let mut forms = vec![Vec::with_capacity(crate::algebra::pair_count(n)); n];
    for (i, k) in pairs(n) {
        for (j, form) in forms.iter_mut().enumerate() {
            form.push(a.entry(i, k, j));
        }
    }
    forms
}

/// Scaled so the first nonzero coefficient is 1; the zero form stays zero.
fn normalized(form: &[Rational]) -> Vec<Rational> {
    match form.iter().find(|c| !c.is_zero()) {
        Some(lead) => form.iter().map(|c| c / lead).collect(),
        None => form.to_vec(),
    }
}

pub fn nondegeneracy_witnesses(a: &InheritanceTensor) -> Vec<Witness> {
    coordinate_forms(a)
        .iter()
        .enumerate()
        .filter(|(_, f)| f.iter().all(Zero::is_zero))
        .map(|(j, _)| Witness {
            condition: Condition::Nondegenerate,
            indices: vec![j],
        })
        .collect()
}

/// Pairs `j1 < j2` whose coordinate forms are proportional. A zero form is
/// proportional to every form.
pub fn external_witnesses(a: &InheritanceTensor) -> Vec<Witness> {
    let forms: Vec<Vec<Rational>> = coordinate_forms(a).iter().map(|f| normalized(f)).collect();
    let zero = |f: &[Rational]| f.iter().all(Zero::is_zero);
    let mut out = Vec::new();
    for j1 in 0..forms.len() {
        for j2 in j1 + 1..forms.len() {
            if zero(&forms[j1]) || zero(&forms[j2]) || forms[j1] == forms[j2] {
                out.push(Witness {
                    condition: Condition::ExternallyIrreducible,
                    indices: vec![j1, j2],
                });
            }
        }
    }
    out
}

/// Whether every coordinate form depends on `x_i, x_k` only through
/// `x_i + x_k`.
pub fn pair_is_reducible(a: &InheritanceTensor, i: usize, k: usize) -> bool {
    let n = a.dim();
    if i == k {
        return false;
    }
    let block = a.row(i, i) == a.row(i, k) && a.row(i, k) == a.row(k, k);
    block
        && (0..n)
            .filter(|&l| l != i && l != k)
            .all(|l| a.row(i, l) == a.row(k, l))
}

pub fn internal_witnesses(a: &InheritanceTensor) -> Vec<Witness> {
    let n = a.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for k in i + 1..n {
            if pair_is_reducible(a, i, k) {
                out.push(Witness {
                    condition: Condition::InternallyIrreducible,
                    indices: vec![i, k],
                });
            }
        }
    }
    out
}

pub fn is_nondegenerate(a: &InheritanceTensor) -> bool {
    nondegeneracy_witnesses(a).is_empty()
}

pub fn is_externally_irreducible(a: &InheritanceTensor) -> bool {
    external_witnesses(a).is_empty()
}

pub fn is_internally_irreducible(a: &InheritanceTensor) -> bool {
    internal_witnesses(a).is_empty()
}

pub fn is_normal(a: &InheritanceTensor) -> NormalityReport {
    let nd = nondegeneracy_witnesses(a);
    let ext = external_witnesses(a);
    let int = internal_witnesses(a);
    NormalityReport {
        nondegenerate: nd.is_empty(),
        externally_irreducible: ext.is_empty(),
        internally_irreducible: int.is_empty(),
        witnesses: nd.into_iter().chain(ext).chain(int).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UltranormalityReport {
    pub ultranormal: bool,
    /// Invariant faces with a non-normal restriction, smallest first.
    pub failing_faces: Vec<(IndexSet, NormalityReport)>,
}

pub fn is_ultranormal(a: &InheritanceTensor) -> Result<UltranormalityReport> {
    is_ultranormal_with(a, Execution::available())
}

pub fn is_ultranormal_with(a: &InheritanceTensor, exec: Execution) -> Result<UltranormalityReport> {
    let vertex_sets = lattice::invariant_vertex_sets(a, exec)?;
    let failing = par::filter_map_collect(exec, &vertex_sets, |f| {
        let r = lattice::restrict(a, f).expect("listed faces are invariant");
        let rep = is_normal(&r);
        (!rep.is_normal()).then(|| (f.clone(), rep))
    });
    Ok(UltranormalityReport {
        ultranormal: failing.is_empty(),
        failing_faces: failing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{SimplexPoint, Vector};
    use crate::families;
    use crate::rational::{int, ratio};

    fn reducible_fixture() -> InheritanceTensor {
        let v = |a: Rational, b: Rational, c: Rational| Vector::new(vec![a, b, c]);
        InheritanceTensor::from_products(3, |i, k| match (i, k) {
            (0, 0) | (0, 1) | (1, 1) => v(ratio(1, 2), ratio(1, 2), int(0)),
            (2, 2) => v(int(0), int(0), int(1)),
            _ => v(ratio(1, 4), ratio(1, 4), ratio(1, 2)),
        })
        .unwrap()
    }

    #[test]
    fn named_algebras_are_normal() {
        for a in [
            families::quadrille(),
            families::hardy_weinberg(),
            families::unit(4).unwrap(),
        ] {
            let rep = is_normal(&a);
            assert!(rep.is_normal(), "{rep:?}");
            assert!(rep.witnesses.is_empty());
        }
    }

    #[test]
    fn constant_vertex_is_degenerate() {
        let c = families::constant(&SimplexPoint::vertex(2, 0));
        let rep = is_normal(&c);
        assert!(!rep.nondegenerate);
        assert!(rep.witnesses.contains(&Witness {
            condition: Condition::Nondegenerate,
            indices: vec![1],
        }));
    }

    #[test]
    fn constant_normal_only_in_dimension_one() {
        assert!(is_normal(&families::constant(&SimplexPoint::vertex(1, 0))).is_normal());
        assert!(!is_normal(&families::constant(&SimplexPoint::barycenter(2))).is_normal());
    }

    #[test]
    fn identical_forms_are_proportional() {
        let a = InheritanceTensor::from_products(3, |i, k| {
            if i == 2 && k == 2 {
                Vector::basis(3, 2)
            } else {
                Vector::new(vec![ratio(1, 2), ratio(1, 2), int(0)])
            }
        })
        .unwrap();
        let w = external_witnesses(&a);
        assert_eq!(w[0].indices, vec![0, 1]);
    }

    #[test]
    fn reducible_pair_is_found() {
        let a = reducible_fixture();
        let rep = is_normal(&a);
        assert!(!rep.internally_irreducible);
        let w: Vec<_> = rep
            .witnesses
            .iter()
            .filter(|w| w.condition == Condition::InternallyIrreducible)
            .collect();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].indices, vec![0, 1]);
        assert_eq!(w[0].to_string(), "internally_irreducible fails at (1, 2)");
    }

    #[test]
    fn hardy_weinberg_internally_irreducible() {
        assert!(is_internally_irreducible(&families::hardy_weinberg()));
    }

    #[test]
    fn family_members_are_ultranormal() {
        for a in [
            families::quadrille(),
            families::mendel(),
            families::extended_quadrille(2, 3).unwrap(),
        ] {
            assert!(is_ultranormal(&a).unwrap().ultranormal);
        }
    }

    #[test]
    fn constant_edge_breaks_ultranormality() {
        // {1,2} carries the constant restriction c = e_1
        let a = InheritanceTensor::from_products(3, |i, k| match (i, k) {
            (2, 2) => Vector::basis(3, 2),
            (0, 2) | (1, 2) => Vector::new(vec![ratio(1, 2), int(0), ratio(1, 2)]),
            _ => Vector::basis(3, 0),
        })
        .unwrap();
        let rep = is_ultranormal(&a).unwrap();
        assert!(!rep.ultranormal);
        let faces: Vec<IndexSet> = rep.failing_faces.iter().map(|(f, _)| f.clone()).collect();
        assert!(faces.contains(&IndexSet::from_iter([0, 1])));
    }
}
