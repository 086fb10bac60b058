//! Exact linear algebra over the rationals.
//!
//! Rows are cleared of denominators and reduced with fraction-free integer
//! elimination (each row is kept primitive), so no pivot tolerance exists.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::par::{self, Execution};
use crate::rational::{common_denominator, Rational};

/// Reduced row echelon form with integer entries.
///
/// Every pivot column is zero outside its pivot row. Rows are primitive and
/// pivots are positive.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of `{v : M v = 0}`, one vector per free column in ascending order.
    pub fn null_space(&self) -> Vec<Vec<Rational>> {
        let pivot_set: BTreeSet<usize> = self.pivots.iter().copied().collect();
        (0..self.ncols)
            .filter(|c| !pivot_set.contains(c))
            .map(|free| {
                let mut v = vec![Rational::zero(); self.ncols];
                v[free] = Rational::from_integer(1.into());
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[free].is_zero() {
                        v[p] = -Rational::new(row[free].clone(), row[p].clone());
                    }
                }
                v
            })
            .collect()
    }
}

fn primitive(row: &mut [BigInt]) {
    let content = row
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::zero(), |g, x| g.gcd(x));
    if content > BigInt::from(1) {
        for x in row.iter_mut() {
            *x /= &content;
        }
    }
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let den = common_denominator(row);
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    primitive(&mut out);
    out
}

/// Fraction-free reduction of a rational matrix given by rows.
pub fn echelon(rows: &[Vec<Rational>], ncols: usize) -> Echelon {
    let mut mat: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            debug_assert_eq!(r.len(), ncols);
            integer_row(r)
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == mat.len() {
            break;
        }
        // smallest nonzero magnitude keeps the entries short
        let Some(pivot_row) = (top..mat.len())
            .filter(|&r| !mat[r][col].is_zero())
            .min_by(|&a, &b| mat[a][col].abs().cmp(&mat[b][col].abs()))
        else {
            continue;
        };
        mat.swap(top, pivot_row);
        if mat[top][col].is_negative() {
            mat[top].iter_mut().for_each(|x| *x = -&*x);
        }
        let (head, tail) = mat.split_at_mut(top);
        let (pivot, rest) = tail.split_first_mut().unwrap();
        for row in head.iter_mut().chain(rest.iter_mut()) {
            if row[col].is_zero() {
                continue;
            }
            let g = row[col].gcd(&pivot[col]);
            let row_mul = &pivot[col] / &g;
            let piv_mul = &row[col] / &g;
            for (x, p) in row.iter_mut().zip(pivot.iter()) {
                *x = &*x * &row_mul - p * &piv_mul;
            }
            primitive(row);
        }
        pivots.push(col);
        top += 1;
    }
    mat.truncate(top);
    Echelon {
        rows: mat,
        pivots,
        ncols,
    }
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    echelon(rows, ncols).rank()
}

pub fn null_space(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    echelon(rows, ncols).null_space()
}

/// Indices of a maximal linearly independent subset of `vectors`, chosen
/// greedily from the front.
pub fn independent_subset(vectors: &[Vec<Rational>], dim: usize) -> Vec<usize> {
    // column pivots of the matrix whose columns are the vectors
    let rows: Vec<Vec<Rational>> = (0..dim)
        .map(|r| vectors.iter().map(|v| v[r].clone()).collect())
        .collect();
    echelon(&rows, vectors.len()).pivots
}

/// A solution of `sum_l coeffs[l] * vectors[l] = target`, or `None` if the
/// target is outside the span. Unique when the vectors are independent.
pub fn coordinates_in(vectors: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let dim = target.len();
    let k = vectors.len();
    let rows: Vec<Vec<Rational>> = (0..dim)
        .map(|r| {
            let mut row: Vec<Rational> = vectors.iter().map(|v| v[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let ech = echelon(&rows, k + 1);
    if ech.pivots.contains(&k) {
        return None;
    }
    // free columns (dependent vectors) get coefficient zero
    let mut out = vec![Rational::zero(); k];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        out[p] = Rational::new(row[k].clone(), row[p].clone());
    }
    Some(out)
}

/// All `size`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if size > n {
        return out;
    }
    let mut current: Vec<usize> = (0..size).collect();
    loop {
        out.push(current.clone());
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - size {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        current[i] += 1;
        for j in i + 1..size {
            current[j] = current[j - 1] + 1;
        }
    }
}

fn scale_to_max_one(v: &[Rational]) -> Vec<Rational> {
    let max = v.iter().max().cloned().unwrap_or_else(Rational::zero);
    v.iter().map(|x| x / &max).collect()
}

/// Extreme rays of the pointed cone `span(basis) ∩ {a >= 0}`.
///
/// A ray is cut out by `d - 1` coordinate equalities `a_i = 0` that leave a
/// one-dimensional subspace; every such choice is tried. Rays are returned
/// scaled so that their largest coordinate is 1, in lexicographic order.
/// The basis vectors must be linearly independent.
pub fn extreme_rays(basis: &[Vec<Rational>], n: usize, exec: Execution) -> Vec<Vec<Rational>> {
    let d = basis.len();
    if d == 0 {
        return Vec::new();
    }
    // coordinate i of the subspace as a linear form on coefficient space
    let coord_rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| basis.iter().map(|b| b[i].clone()).collect())
        .collect();
    let combos = combinations(n, d - 1);
    let found = par::filter_map_collect(exec, &combos, |zeros| {
        let rows: Vec<Vec<Rational>> = zeros.iter().map(|&i| coord_rows[i].clone()).collect();
        let ech = echelon(&rows, d);
        if ech.rank() != d - 1 {
            return None;
        }
        let coeffs = ech.null_space().pop()?;
        let mut a = vec![Rational::zero(); n];
        for (c, b) in coeffs.iter().zip(basis) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in a.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        let has_pos = a.iter().any(|x| x.is_positive());
        let has_neg = a.iter().any(|x| x.is_negative());
        match (has_pos, has_neg) {
            (true, false) => Some(scale_to_max_one(&a)),
            (false, true) => Some(scale_to_max_one(&a.iter().map(|x| -x).collect::<Vec<_>>())),
            _ => None,
        }
    });
    found
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Nonnegative coefficients expressing `target` as a conic combination of
/// `generators`, or `None` if it lies outside their cone.
///
/// Carathéodory: a conic combination exists iff one exists over some
/// linearly independent subset, so independent subsets are searched in
/// increasing size and solved exactly.
pub fn conic_combination(
    generators: &[Vec<Rational>],
    target: &[Rational],
) -> Option<Vec<Rational>> {
    let k = generators.len();
    if target.iter().all(|x| x.is_zero()) {
        return Some(vec![Rational::zero(); k]);
    }
    let dim = target.len();
    for size in 1..=k.min(dim) {
        for subset in combinations(k, size) {
            let chosen: Vec<Vec<Rational>> =
                subset.iter().map(|&i| generators[i].clone()).collect();
            if independent_subset(&chosen, dim).len() != size {
                continue;
            }
            let Some(coeffs) = coordinates_in(&chosen, target) else {
                continue;
            };
            if coeffs.iter().all(|c| !c.is_negative()) {
                let mut out = vec![Rational::zero(); k];
                for (&i, c) in subset.iter().zip(coeffs) {
                    out[i] = c;
                }
                return Some(out);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rank_and_null_space_of_small_matrix() {
        let rows = vec![r(&[1, 2, 3]), r(&[2, 4, 6]), r(&[1, 0, 1])];
        let ech = echelon(&rows, 3);
        assert_eq!(ech.rank(), 2);
        let ns = ech.null_space();
        assert_eq!(ns.len(), 1);
        for row in &rows {
            let dot: Rational = row.iter().zip(&ns[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn fractional_rows_reduce_exactly() {
        let rows = vec![
            vec![ratio(1, 3), ratio(1, 6)],
            vec![ratio(2, 3), ratio(1, 3)],
        ];
        assert_eq!(rank(&rows, 2), 1);
        assert_eq!(null_space(&rows, 2), vec![vec![ratio(-1, 2), int(1)]]);
    }

    #[test]
    fn combinations_enumerate_lexicographically() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert!(combinations(2, 3).is_empty());
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn rays_of_positive_quadrant() {
        let basis = vec![r(&[1, 0]), r(&[0, 1])];
        assert_eq!(
            extreme_rays(&basis, 2, Execution::Sequential),
            vec![r(&[0, 1]), r(&[1, 0])]
        );
    }

    #[test]
    fn rays_of_square_cone_in_four_space() {
        // a1 + a2 = a3 + a4 inside R^4_+: four rays e1+e3, e1+e4, e2+e3, e2+e4
        let basis = null_space(&[r(&[1, 1, -1, -1])], 4);
        let rays = extreme_rays(&basis, 4, Execution::Parallel);
        assert_eq!(
            rays,
            vec![
                r(&[0, 1, 0, 1]),
                r(&[0, 1, 1, 0]),
                r(&[1, 0, 0, 1]),
                r(&[1, 0, 1, 0])
            ]
        );
    }

    #[test]
    fn conic_membership() {
        let gens = vec![r(&[1, 0]), r(&[1, 1])];
        assert_eq!(conic_combination(&gens, &r(&[2, 1])), Some(r(&[1, 1])));
        assert_eq!(conic_combination(&gens, &r(&[0, 1])), None);
        assert_eq!(conic_combination(&gens, &r(&[0, 0])), Some(r(&[0, 0])));
    }

    #[test]
    fn coordinates_outside_span() {
        let vs = vec![r(&[1, 0, 0])];
        assert_eq!(coordinates_in(&vs, &r(&[0, 1, 0])), None);
        assert_eq!(coordinates_in(&vs, &r(&[3, 0, 0])), Some(r(&[3])));
    }
}
