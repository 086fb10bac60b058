//! A deterministic corpus of tensors for cross-checking the library:
//! family members, Bernstein algebras that are not regular, and operators
//! that are not Bernstein at all.

use crate::algebra::{unit_product, InheritanceTensor, SimplexPoint, Vector};
use crate::families::{self, ExtendedMendelParams};
use crate::rational::{int, ratio, Rational};
use crate::sample::Sampler;

/// Seed of the randomly drawn members of the corpus.
pub const CORPUS_SEED: u64 = 20_240_229;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixtureKind {
    /// Constant, unit, extended Mendel or extended quadrille algebra.
    Family,
    /// Bernstein, built to be typically non-regular.
    Retract,
    NotBernstein,
    /// Negative control for normality; Bernstein as it happens.
    Reducible,
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub kind: FixtureKind,
    pub tensor: InheritanceTensor,
}

impl Fixture {
    fn new(name: impl Into<String>, kind: FixtureKind, tensor: InheritanceTensor) -> Self {
        Fixture {
            name: name.into(),
            kind,
            tensor,
        }
    }
}

/// `V(a, b) = (a^2, 1 - a^2)` on the segment.
pub fn segment_square() -> InheritanceTensor {
    InheritanceTensor::from_products(2, |i, k| match (i, k) {
        (0, 0) => Vector::basis(2, 0),
        _ => Vector::basis(2, 1),
    })
    .expect("valid tensor")
}

/// Three types where `e_1, e_2` can be merged: every coordinate form depends
/// on `x_1, x_2` only through `x_1 + x_2`.
pub fn internally_reducible() -> InheritanceTensor {
    let v = |a: Rational, b: Rational, c: Rational| Vector::new(vec![a, b, c]);
    InheritanceTensor::from_products(3, |i, k| match (i, k) {
        (0, 0) | (0, 1) | (1, 1) => v(ratio(1, 2), ratio(1, 2), int(0)),
        (2, 2) => v(int(0), int(0), int(1)),
        _ => v(ratio(1, 4), ratio(1, 4), ratio(1, 2)),
    })
    .expect("valid tensor")
}

/// Unit algebra on the first `face` types; every other product is an
/// arbitrary stochastic vector supported on that face. The square of any
/// point lies in the unit face, so `(x^2)^2 = s(x)^2 x^2`.
pub fn retract(n: usize, face: usize, sampler: &mut Sampler) -> InheritanceTensor {
    InheritanceTensor::from_products(n, |i, k| {
        if i < face && k < face {
            unit_product(&Vector::basis(n, i), &Vector::basis(n, k))
        } else {
            let on_face = sampler.boundary_point(face).into_vector();
            let mut coords = on_face.into_coords();
            coords.resize(n, int(0));
            Vector::new(coords)
        }
    })
    .expect("valid tensor")
}

/// The three-type retract with `e_1 e_3 = e_2`, `e_2 e_3 = e_3^2 = e_1`.
pub fn small_retract() -> InheritanceTensor {
    let e = |i| Vector::basis(3, i);
    InheritanceTensor::from_products(3, |i, k| match (i, k) {
        (0, 0) => e(0),
        (1, 1) => e(1),
        (0, 1) => unit_product(&e(0), &e(1)),
        (0, 2) => e(1),
        _ => e(0),
    })
    .expect("valid tensor")
}

/// Uniformly random stochastic tensor with small denominators.
pub fn random_stochastic(n: usize, sampler: &mut Sampler) -> InheritanceTensor {
    InheritanceTensor::from_products(n, |_, _| sampler.boundary_point(n).into_vector())
        .expect("valid tensor")
}

fn mendel_params(
    m: usize,
    pairs: &[(usize, usize)],
    sampler: &mut Sampler,
) -> ExtendedMendelParams {
    let values = families::mendel_grid_values(8);
    let mut pick = || values[sampler.index(values.len())].clone();
    let alpha = pairs.iter().map(|_| pick()).collect();
    let beta = pairs.iter().map(|_| pick()).collect();
    ExtendedMendelParams::new(m, pairs.to_vec(), alpha, beta)
}

/// Family members only.
pub fn family_corpus() -> Vec<Fixture> {
    let mut s = Sampler::new(CORPUS_SEED);
    let mut out = vec![
        Fixture::new("mendel", FixtureKind::Family, families::mendel()),
        Fixture::new("quadrille", FixtureKind::Family, families::quadrille()),
    ];
    for n in 1..=8 {
        out.push(Fixture::new(
            format!("unit({n})"),
            FixtureKind::Family,
            families::unit(n).expect("n > 0"),
        ));
        out.push(Fixture::new(
            format!("constant({n}, barycenter)"),
            FixtureKind::Family,
            families::constant(&SimplexPoint::barycenter(n)),
        ));
        out.push(Fixture::new(
            format!("constant({n}, vertex)"),
            FixtureKind::Family,
            families::constant(&SimplexPoint::vertex(n, n - 1)),
        ));
        out.push(Fixture::new(
            format!("constant({n}, sampled)"),
            FixtureKind::Family,
            families::constant(&s.boundary_point(n)),
        ));
    }
    for nu in 2..=4 {
        for nb in 2..=4 {
            out.push(Fixture::new(
                format!("eqalgebra({nu}, {nb})"),
                FixtureKind::Family,
                families::extended_quadrille(nu, nb).expect("sides >= 2"),
            ));
        }
    }
    let pair_sets: [(usize, &[(usize, usize)]); 8] = [
        (2, &[(0, 1)]),
        (3, &[(0, 1)]),
        (3, &[(1, 2)]),
        (3, &[(0, 1), (0, 2)]),
        (3, &[(0, 1), (0, 2), (1, 2)]),
        (4, &[(0, 3)]),
        (4, &[(0, 1), (2, 3)]),
        (4, &[(0, 1), (1, 2), (2, 3)]),
    ];
    for (m, pairs) in pair_sets {
        for _ in 0..4 {
            let p = mendel_params(m, pairs, &mut s);
            let t = families::extended_mendel(&p).expect("grid parameters are admissible");
            out.push(Fixture::new(
                format!("emalgebra {p}"),
                FixtureKind::Family,
                t,
            ));
        }
    }
    out
}

/// The whole corpus: families, retracts and non-Bernstein operators.
pub fn corpus() -> Vec<Fixture> {
    let mut out = family_corpus();
    let mut s = Sampler::new(CORPUS_SEED ^ 0xfeed);
    out.push(Fixture::new(
        "small retract",
        FixtureKind::Retract,
        small_retract(),
    ));
    for n in 3..=6 {
        for face in 2..n {
            for r in 0..2 {
                out.push(Fixture::new(
                    format!("retract({n}, {face}) #{r}"),
                    FixtureKind::Retract,
                    retract(n, face, &mut s),
                ));
            }
        }
    }
    out.push(Fixture::new(
        "segment square",
        FixtureKind::NotBernstein,
        segment_square(),
    ));
    out.push(Fixture::new(
        "internally reducible",
        FixtureKind::Reducible,
        internally_reducible(),
    ));
    for n in 2..=5 {
        for r in 0..5 {
            out.push(Fixture::new(
                format!("random({n}) #{r}"),
                FixtureKind::NotBernstein,
                random_stochastic(n, &mut s),
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernstein::is_bernstein;

    #[test]
    fn corpus_is_large_and_labeled_correctly() {
        let c = corpus();
        assert!(c.len() >= 100, "{}", c.len());
        for f in &c {
            let b = is_bernstein(&f.tensor);
            match f.kind {
                FixtureKind::Family | FixtureKind::Retract | FixtureKind::Reducible => {
                    assert!(b, "{}", f.name)
                }
                FixtureKind::NotBernstein => assert!(!b, "{}", f.name),
            }
        }
    }

    #[test]
    fn corpus_is_deterministic() {
        let a: Vec<_> = corpus().into_iter().map(|f| f.tensor).collect();
        let b: Vec<_> = corpus().into_iter().map(|f| f.tensor).collect();
        assert_eq!(a, b);
    }
}
