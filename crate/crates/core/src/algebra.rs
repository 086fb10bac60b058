//! Stochastic algebras given by inheritance coefficients.
//!
//! An [`InheritanceTensor`] holds `p[ik][j]`, the probability that parents of
//! types `i` and `k` produce an offspring of type `j`. The same numbers are
//! the structure constants of a commutative algebra, `e_i e_k = sum_j p[ik][j] e_j`,
//! and the evolutionary operator is squaring on the simplex.
//!
//! Indices are 0-based throughout the library.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{half, Rational};

/// A coordinate vector in `Q^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Vector(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![Rational::zero(); n])
    }

    /// The basis vector `e_i`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rational::one();
        v
    }

    /// The barycenter `(1/n, ..., 1/n)`.
    pub fn barycenter(n: usize) -> Self {
        let w = Rational::new(1.into(), (n as i64).into());
        Vector(vec![w; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    /// Coordinate sum `s(x)`.
    pub fn weight(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn scale(&self, factor: &Rational) -> Vector {
        Vector(self.0.iter().map(|x| x * factor).collect())
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, factor: &Rational, other: &Vector) {
        debug_assert_eq!(self.dim(), other.dim());
        if factor.is_zero() {
            return;
        }
        for (x, y) in self.0.iter_mut().zip(&other.0) {
            if !y.is_zero() {
                *x += factor * y;
            }
        }
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Indices of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

impl Index<usize> for Vector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl From<Vec<Rational>> for Vector {
    fn from(coords: Vec<Rational>) -> Self {
        Vector(coords)
    }
}

impl Add for &Vector {
    type Output = Vector;

    fn add(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;

    fn sub(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;

    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Vector> for &Rational {
    type Output = Vector;

    fn mul(self, rhs: &Vector) -> Vector {
        rhs.scale(self)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// A point of the probability simplex: nonnegative with weight exactly 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexPoint(Vector);

impl SimplexPoint {
    pub fn new(v: Vector) -> Result<Self> {
        if v.dim() == 0 {
            return Err(Error::EmptyDimension);
        }
        if !v.is_nonnegative() {
            return Err(Error::NotSimplexPoint(format!(
                "negative coordinate in {v}"
            )));
        }
        if !v.weight().is_one() {
            return Err(Error::NotSimplexPoint(format!(
                "weight of {v} is {}",
                v.weight()
            )));
        }
        Ok(SimplexPoint(v))
    }

    pub fn barycenter(n: usize) -> Self {
        SimplexPoint(Vector::barycenter(n))
    }

    pub fn vertex(n: usize, i: usize) -> Self {
        SimplexPoint(Vector::basis(n, i))
    }

    pub fn as_vector(&self) -> &Vector {
        &self.0
    }

    pub fn into_vector(self) -> Vector {
        self.0
    }
}

/// Number of unordered pairs `i <= k` over `n` types.
pub fn pair_count(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Position of the pair `(min(i,k), max(i,k))` in the order (0,0),(0,1),…,(n-1,n-1).
pub fn pair_index(n: usize, i: usize, k: usize) -> usize {
    let (i, k) = if i <= k { (i, k) } else { (k, i) };
    i * (2 * n - i + 1) / 2 + (k - i)
}

/// All pairs `i <= k` in storage order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i..n).map(move |k| (i, k)))
}

/// Symmetric nonnegative structure constants with stochastic rows.
///
/// Storage is sparse: for each pair `i <= k` only the offspring types with
/// positive probability are kept, sorted by type. Construction validates
/// nonnegativity and that every row sums to exactly 1; afterwards the value
/// is immutable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InheritanceTensor {
    n: usize,
    rows: Vec<Vec<(usize, Rational)>>,
}

/// Collects coefficients before validation.
#[derive(Debug, Clone)]
pub struct TensorBuilder {
    n: usize,
    rows: Vec<Vec<(usize, Rational)>>,
}

impl TensorBuilder {
    /// Sets `p[ik][j]`. Pairs are symmetric, so `(k,i)` addresses the same
    /// entry. Setting an entry twice is an error.
    pub fn insert(&mut self, i: usize, k: usize, j: usize, value: Rational) -> Result<&mut Self> {
        for index in [i, k, j] {
            if index >= self.n {
                return Err(Error::IndexOutOfRange { index, n: self.n });
            }
        }
        let (i, k) = if i <= k { (i, k) } else { (k, i) };
        let row = &mut self.rows[pair_index(self.n, i, k)];
        if row.iter().any(|(t, _)| *t == j) {
            return Err(Error::DuplicateEntry { i, k, j });
        }
        row.push((j, value));
        Ok(self)
    }

    /// Sets the whole offspring distribution of a pair.
    pub fn set_product(&mut self, i: usize, k: usize, product: &Vector) -> Result<&mut Self> {
        if product.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: product.dim(),
            });
        }
        for (j, v) in product.coords().iter().enumerate() {
            if !v.is_zero() {
                self.insert(i, k, j, v.clone())?;
            }
        }
        Ok(self)
    }

    pub fn build(self) -> Result<InheritanceTensor> {
        let n = self.n;
        let mut rows = Vec::with_capacity(self.rows.len());
        for ((i, k), mut row) in pairs(n).zip(self.rows) {
            if let Some((j, value)) = row.iter().find(|(_, v)| v.is_negative()) {
                return Err(Error::NegativeEntry {
                    i,
                    k,
                    j: *j,
                    value: value.clone(),
                });
            }
            row.retain(|(_, v)| !v.is_zero());
            row.sort_by_key(|(j, _)| *j);
            let sum: Rational = row.iter().map(|(_, v)| v).sum();
            if !sum.is_one() {
                return Err(Error::NotStochastic { i, k, sum });
            }
            rows.push(row);
        }
        Ok(InheritanceTensor { n, rows })
    }
}

impl InheritanceTensor {
    pub fn builder(n: usize) -> Result<TensorBuilder> {
        if n == 0 {
            return Err(Error::EmptyDimension);
        }
        Ok(TensorBuilder {
            n,
            rows: vec![Vec::new(); pair_count(n)],
        })
    }

    /// Builds a tensor from a multiplication table `(i, k) -> e_i e_k`,
    /// queried once per pair `i <= k`.
    pub fn from_products(
        n: usize,
        mut product: impl FnMut(usize, usize) -> Vector,
    ) -> Result<Self> {
        let mut builder = Self::builder(n)?;
        for (i, k) in pairs(n) {
            builder.set_product(i, k, &product(i, k))?;
        }
        builder.build()
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `p[ik][j]`, symmetric in `(i, k)`.
    pub fn entry(&self, i: usize, k: usize, j: usize) -> Rational {
        self.row(i, k)
            .iter()
            .find(|(t, _)| *t == j)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Sparse offspring distribution of the pair `(i, k)`.
    pub fn row(&self, i: usize, k: usize) -> &[(usize, Rational)] {
        &self.rows[pair_index(self.n, i, k)]
    }

    /// The product `e_i e_k` as a dense vector.
    pub fn product(&self, i: usize, k: usize) -> Vector {
        let mut v = Vector::zeros(self.n);
        for (j, p) in self.row(i, k) {
            v.0[*j] = p.clone();
        }
        v
    }

    /// Nonzero entries `(i, k, j, p)` with `i <= k`, sorted.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        pairs(self.n)
            .zip(&self.rows)
            .flat_map(|((i, k), row)| row.iter().map(move |(j, p)| (i, k, *j, p)))
    }

    fn check_dim(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: v.dim(),
            });
        }
        Ok(())
    }

    /// Bilinear product `xy = sum_{i,k} x_i y_k e_i e_k`.
    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.n);
        let sy: Vec<usize> = y.support();
        for (i, xi) in x.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &k in &sy {
                let coef = xi * &y.0[k];
                for (j, p) in &self.rows[pair_index(self.n, i, k)] {
                    out.0[*j] += &coef * p;
                }
            }
        }
        out
    }

    /// One generation of the evolutionary operator, `x -> x^2`.
    pub fn evolve(&self, x: &SimplexPoint) -> Result<SimplexPoint> {
        let v = self.multiply(x.as_vector(), x.as_vector())?;
        Ok(SimplexPoint(v))
    }

    /// Deviation from the unit product: `R(x,y) = 2xy - s(y)x - s(x)y`.
    pub fn r_op(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.r_unchecked(x, y))
    }

    pub(crate) fn r_unchecked(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = self
            .mul_unchecked(x, y)
            .scale(&Rational::from_integer(2.into()));
        out.add_scaled(&-y.weight(), x);
        out.add_scaled(&-x.weight(), y);
        out
    }

    /// Whether `v` is a nonzero idempotent (`v v = v`).
    pub fn is_idempotent(&self, v: &Vector) -> bool {
        v.dim() == self.n && !v.is_zero() && self.mul_unchecked(v, v) == *v
    }
}

/// Weight functional `s(x) = sum_i x_i`.
pub fn weight(x: &Vector) -> Rational {
    x.weight()
}

/// The unit product `(s(y)x + s(x)y)/2`.
pub fn unit_product(x: &Vector, y: &Vector) -> Vector {
    let mut out = x.scale(&(y.weight() * half()));
    out.add_scaled(&(x.weight() * half()), y);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::rational::{int, ratio};

    fn v(coords: &[(i64, i64)]) -> Vector {
        Vector::new(coords.iter().map(|&(a, b)| ratio(a, b)).collect())
    }

    #[test]
    fn pair_indexing_is_dense_and_symmetric() {
        let n = 5;
        let idx: Vec<usize> = pairs(n).map(|(i, k)| pair_index(n, i, k)).collect();
        assert_eq!(idx, (0..pair_count(n)).collect::<Vec<_>>());
        assert_eq!(pair_index(n, 3, 1), pair_index(n, 1, 3));
    }

    #[test]
    fn mendel_product_of_homozygotes_is_heterozygote() {
        let a = families::mendel();
        assert_eq!(
            a.multiply(&Vector::basis(3, 0), &Vector::basis(3, 1))
                .unwrap(),
            Vector::basis(3, 2)
        );
    }

    #[test]
    fn unit_algebra_products_are_midpoints() {
        let a = families::unit(4).unwrap();
        for (i, k) in pairs(4) {
            let expected = (&Vector::basis(4, i) + &Vector::basis(4, k)).scale(&half());
            assert_eq!(a.product(i, k), expected);
        }
    }

    #[test]
    fn quadrille_cross_product() {
        // labels: 0=e11, 1=e22, 2=e12, 3=e21
        let a = families::quadrille();
        let p = a
            .multiply(&Vector::basis(4, 0), &Vector::basis(4, 1))
            .unwrap();
        assert_eq!(p, v(&[(0, 1), (0, 1), (1, 2), (1, 2)]));
    }

    #[test]
    fn evolve_examples() {
        let hw = families::hardy_weinberg();
        let x = SimplexPoint::new(v(&[(1, 4), (1, 4), (1, 2)])).unwrap();
        assert_eq!(hw.evolve(&x).unwrap(), x);

        let q = families::quadrille();
        let x = SimplexPoint::new(v(&[(1, 2), (1, 2), (0, 1), (0, 1)])).unwrap();
        let quarter = SimplexPoint::new(v(&[(1, 4), (1, 4), (1, 4), (1, 4)])).unwrap();
        assert_eq!(q.evolve(&x).unwrap(), quarter);

        let id = families::unit(3).unwrap();
        let x = SimplexPoint::new(v(&[(1, 5), (3, 5), (1, 5)])).unwrap();
        assert_eq!(id.evolve(&x).unwrap(), x);
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight(SimplexPoint::barycenter(7).as_vector()), int(1));
        assert_eq!(
            weight(&(&Vector::basis(3, 0) - &Vector::basis(3, 2))),
            int(0)
        );
        assert_eq!(weight(&v(&[(1, 2), (1, 3)])), ratio(5, 6));
    }

    #[test]
    fn r_op_examples() {
        let m = families::mendel();
        let e = |i| Vector::basis(3, i);
        let expected = &(&e(2).scale(&int(2)) - &e(0)) - &e(1);
        assert_eq!(m.r_op(&e(0), &e(1)).unwrap(), expected);
        assert!(m.r_op(&e(0), &e(0)).unwrap().is_zero());

        let u = families::unit(3).unwrap();
        let x = v(&[(1, 2), (-3, 1), (2, 7)]);
        let y = v(&[(5, 1), (1, 9), (0, 1)]);
        assert!(u.r_op(&x, &y).unwrap().is_zero());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let m = families::mendel();
        let err = m
            .multiply(&Vector::zeros(2), &Vector::zeros(3))
            .unwrap_err();
        assert_eq!(
            err,
            Error::DimensionMismatch {
                expected: 3,
                found: 2
            }
        );
        assert!(m.r_op(&Vector::zeros(3), &Vector::zeros(4)).is_err());
    }

    #[test]
    fn builder_validation() {
        let mut b = InheritanceTensor::builder(2).unwrap();
        b.insert(0, 0, 0, int(1)).unwrap();
        b.insert(1, 1, 1, int(1)).unwrap();
        b.insert(0, 1, 0, ratio(3, 4)).unwrap();
        assert_eq!(
            b.clone().build().unwrap_err(),
            Error::NotStochastic {
                i: 0,
                k: 1,
                sum: ratio(3, 4)
            }
        );
        assert_eq!(
            b.insert(1, 0, 0, ratio(1, 4)).unwrap_err(),
            Error::DuplicateEntry { i: 0, k: 1, j: 0 }
        );
        b.insert(1, 0, 1, ratio(1, 4)).unwrap();
        let t = b.build().unwrap();
        assert_eq!(t.entry(1, 0, 1), ratio(1, 4));
        assert_eq!(t.entry(0, 1, 1), ratio(1, 4));

        let mut neg = InheritanceTensor::builder(1).unwrap();
        neg.insert(0, 0, 0, int(-1)).unwrap();
        assert!(matches!(neg.build(), Err(Error::NegativeEntry { .. })));
        assert!(matches!(
            InheritanceTensor::builder(1)
                .unwrap()
                .insert(0, 2, 0, int(1)),
            Err(Error::IndexOutOfRange { index: 2, n: 1 })
        ));
        assert_eq!(
            InheritanceTensor::builder(0).unwrap_err(),
            Error::EmptyDimension
        );
    }

    #[test]
    fn simplex_point_validation() {
        assert!(SimplexPoint::new(v(&[(1, 2), (1, 3)])).is_err());
        assert!(SimplexPoint::new(v(&[(3, 2), (-1, 2)])).is_err());
        assert!(SimplexPoint::new(Vector::zeros(0)).is_err());
    }
}
