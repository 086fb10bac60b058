//! Generators for the canonical algebras: constant, unit, Mendel
//! (Hardy–Weinberg), extended Mendel and extended quadrille.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{InheritanceTensor, SimplexPoint, Vector};
use crate::error::{Error, Result};
use crate::rational::{half, int, ratio, Rational};

/// `x' = s(x)^2 c` for a fixed simplex point `c`.
pub fn constant(c: &SimplexPoint) -> InheritanceTensor {
    let c = c.as_vector().clone();
    InheritanceTensor::from_products(c.dim(), |_, _| c.clone())
        .expect("constant rows are stochastic")
}

/// The identity map written quadratically, `e_i e_k = (e_i + e_k)/2`.
pub fn unit(n: usize) -> Result<InheritanceTensor> {
    InheritanceTensor::from_products(n, |i, k| midpoint(n, i, k))
}

fn midpoint(n: usize, i: usize, k: usize) -> Vector {
    (&Vector::basis(n, i) + &Vector::basis(n, k)).scale(&half())
}

/// Hardy–Weinberg operator on genotypes (AA, aa, Aa).
pub fn hardy_weinberg() -> InheritanceTensor {
    mendel()
}

/// The Mendel algebra: `e1^2 = e1`, `e2^2 = e2`, `e1 e2 = e3`,
/// `e_i e3 = (e_i + e3)/2`, `e3^2 = e1/4 + e2/4 + e3/2`.
pub fn mendel() -> InheritanceTensor {
    let params = ExtendedMendelParams::new(2, vec![(0, 1)], vec![int(0)], vec![int(0)]);
    extended_mendel(&params).expect("Mendel parameters are valid")
}

/// Parameters of an extended Mendel algebra of type `(m, delta)`.
///
/// Types `0..m` are idempotent; type `m + j` is the offspring of the marked
/// pair `pairs[j] = (i_j, k_j)` with `e_{i_j} e_{k_j} = alpha_j e_{i_j} +
/// beta_j e_{k_j} + gamma_j e_{m+j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedMendelParams {
    pub m: usize,
    pub pairs: Vec<(usize, usize)>,
    pub alpha: Vec<Rational>,
    pub beta: Vec<Rational>,
}

impl ExtendedMendelParams {
    pub fn new(
        m: usize,
        pairs: Vec<(usize, usize)>,
        alpha: Vec<Rational>,
        beta: Vec<Rational>,
    ) -> Self {
        ExtendedMendelParams {
            m,
            pairs,
            alpha,
            beta,
        }
    }

    pub fn delta(&self) -> usize {
        self.pairs.len()
    }

    pub fn dim(&self) -> usize {
        self.m + self.pairs.len()
    }

    pub fn gamma(&self, j: usize) -> Rational {
        Rational::one() - &self.alpha[j] - &self.beta[j]
    }

    /// `c_j = (1/2 - alpha_j) / gamma_j`, so that `alpha_j + c_j gamma_j = 1/2`.
    pub fn c(&self, j: usize) -> Rational {
        (half() - &self.alpha[j]) / self.gamma(j)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        if self.m == 0 {
            return bad("rank m must be positive".into());
        }
        let delta = self.delta();
        if self.alpha.len() != delta || self.beta.len() != delta {
            return bad(format!(
                "expected {delta} alpha and beta values, got {} and {}",
                self.alpha.len(),
                self.beta.len()
            ));
        }
        let mut seen = BTreeSet::new();
        for (j, &(i, k)) in self.pairs.iter().enumerate() {
            if !(i < k && k < self.m) {
                return bad(format!(
                    "pair {j} = ({}, {}) must satisfy 1 <= i < k <= m",
                    i + 1,
                    k + 1
                ));
            }
            if !seen.insert((i, k)) {
                return bad(format!(
                    "pairs must be distinct; ({}, {}) repeats",
                    i + 1,
                    k + 1
                ));
            }
        }
        for j in 0..delta {
            let (a, b) = (&self.alpha[j], &self.beta[j]);
            if a < &Rational::zero() || b < &Rational::zero() {
                return bad(format!("alpha_{0} and beta_{0} must be nonnegative", j + 1));
            }
            let gamma = self.gamma(j);
            if gamma <= Rational::zero() {
                return bad(format!(
                    "gamma_{} = 1 - alpha - beta = {gamma} must be positive",
                    j + 1
                ));
            }
            let c = self.c(j);
            if c <= Rational::zero() || c >= Rational::one() {
                return bad(format!(
                    "c_{0} = (1/2 - alpha_{0})/gamma_{0} = {c} must lie in (0, 1); \
                     alpha_{0} + c_{0} gamma_{0} = beta_{0} + (1 - c_{0}) gamma_{0} = 1/2 has no admissible solution",
                    j + 1
                ));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ExtendedMendelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={}", self.m)?;
        for (j, (i, k)) in self.pairs.iter().enumerate() {
            write!(
                f,
                " ({},{}):{}/{}",
                i + 1,
                k + 1,
                self.alpha[j],
                self.beta[j]
            )?;
        }
        Ok(())
    }
}

/// Extended Mendel algebra of type `(m, delta)`.
pub fn extended_mendel(params: &ExtendedMendelParams) -> Result<InheritanceTensor> {
    params.validate()?;
    let m = params.m;
    let n = params.dim();
    let e = |i: usize| Vector::basis(n, i);

    // products among the idempotents
    let idem = |i: usize, k: usize| -> Vector {
        if i == k {
            return e(i);
        }
        let (lo, hi) = (i.min(k), i.max(k));
        match params.pairs.iter().position(|&p| p == (lo, hi)) {
            Some(j) => {
                let mut v = e(lo).scale(&params.alpha[j]);
                v.add_scaled(&params.beta[j], &e(hi));
                v.add_scaled(&params.gamma(j), &e(m + j));
                v
            }
            None => midpoint(n, i, k),
        }
    };
    let c: Vec<Rational> = (0..params.delta()).map(|j| params.c(j)).collect();
    let c_bar: Vec<Rational> = c.iter().map(|x| Rational::one() - x).collect();

    InheritanceTensor::from_products(n, |i, k| match (i < m, k < m) {
        (true, true) => idem(i, k),
        (true, false) => {
            let j = k - m;
            let (pi, pk) = params.pairs[j];
            let mut v = idem(i, pi).scale(&c[j]);
            v.add_scaled(&c_bar[j], &idem(i, pk));
            v
        }
        (false, true) => unreachable!("pairs are visited with i <= k"),
        (false, false) => {
            let (j, l) = (i - m, k - m);
            let (ij, kj) = params.pairs[j];
            let (il, kl) = params.pairs[l];
            let mut v = idem(ij, il).scale(&(&c[j] * &c[l]));
            v.add_scaled(&(&c[j] * &c_bar[l]), &idem(ij, kl));
            v.add_scaled(&(&c_bar[j] * &c[l]), &idem(kj, il));
            v.add_scaled(&(&c_bar[j] * &c_bar[l]), &idem(kj, kl));
            v
        }
    })
}

/// Assignment of basis indices to cells `(row, col)` of a `nu x nu_bar` grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridLabeling {
    pub nu: usize,
    pub nu_bar: usize,
    /// `cells[index] = (row, col)`, 0-based.
    pub cells: Vec<(usize, usize)>,
}

impl GridLabeling {
    /// Index `g * nu_bar + h` holds cell `(g, h)`.
    pub fn row_major(nu: usize, nu_bar: usize) -> Self {
        GridLabeling {
            nu,
            nu_bar,
            cells: (0..nu)
                .flat_map(|g| (0..nu_bar).map(move |h| (g, h)))
                .collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.nu < 2 || self.nu_bar < 2 {
            return Err(Error::InvalidParameters(format!(
                "grid {}x{} needs both sides >= 2",
                self.nu, self.nu_bar
            )));
        }
        let distinct: BTreeSet<_> = self.cells.iter().collect();
        let in_range = self
            .cells
            .iter()
            .all(|&(g, h)| g < self.nu && h < self.nu_bar);
        if self.cells.len() != self.nu * self.nu_bar
            || distinct.len() != self.cells.len()
            || !in_range
        {
            return Err(Error::InvalidParameters(
                "grid labeling is not a bijection".into(),
            ));
        }
        Ok(())
    }

    /// Inverse map `(row, col) -> index`.
    pub fn index_of(&self) -> Vec<Vec<usize>> {
        let mut out = vec![vec![usize::MAX; self.nu_bar]; self.nu];
        for (idx, &(g, h)) in self.cells.iter().enumerate() {
            out[g][h] = idx;
        }
        out
    }

    pub fn transposed(&self) -> Self {
        GridLabeling {
            nu: self.nu_bar,
            nu_bar: self.nu,
            cells: self.cells.iter().map(|&(g, h)| (h, g)).collect(),
        }
    }
}

/// Extended quadrille algebra on a grid labeling:
/// `e_{gh} e_{ik} = (e_{gk} + e_{ih})/2`, i.e. `X' = p ⊗ q` with row sums
/// `p` and column sums `q`.
pub fn extended_quadrille_labeled(labeling: &GridLabeling) -> Result<InheritanceTensor> {
    labeling.validate()?;
    let n = labeling.cells.len();
    let index = labeling.index_of();
    InheritanceTensor::from_products(n, |a, b| {
        let (g, h) = labeling.cells[a];
        let (i, k) = labeling.cells[b];
        midpoint(n, index[g][k], index[i][h])
    })
}

/// Extended quadrille algebra with the row-major labeling.
pub fn extended_quadrille(nu: usize, nu_bar: usize) -> Result<InheritanceTensor> {
    extended_quadrille_labeled(&GridLabeling::row_major(nu, nu_bar))
}

/// Labeling of the 2x2 quadrille: types (11, 22, 12, 21).
pub fn quadrille_labeling() -> GridLabeling {
    GridLabeling {
        nu: 2,
        nu_bar: 2,
        cells: vec![(0, 0), (1, 1), (0, 1), (1, 0)],
    }
}

/// The quadrille map `x'_1 = p1 q1, x'_2 = p2 q2, x'_3 = p1 q2, x'_4 = p2 q1`.
pub fn quadrille() -> InheritanceTensor {
    extended_quadrille_labeled(&quadrille_labeling()).expect("quadrille labeling is valid")
}

/// The `(alpha, beta)` values admissible for a marked pair when both have
/// denominators at most `max_den`: `0 <= alpha, beta < 1/2` (this is
/// equivalent to `gamma > 0` and `0 < c < 1`). Sorted ascending.
pub fn mendel_grid_values(max_den: i64) -> Vec<Rational> {
    let values: BTreeSet<Rational> = (1..=max_den)
        .flat_map(|den| (0..den).map(move |num| ratio(num, den)))
        .filter(|v| v < &half())
        .collect();
    values.into_iter().collect()
}
