//! Invariant linear forms `f(x^2) = f(x)` on the simplex, the cone of
//! nonnegative ones and its canonical extreme rays.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{pairs, InheritanceTensor, SimplexPoint};
use crate::bernstein;
use crate::error::{Error, Result};
use crate::linalg;
use crate::par::Execution;
use crate::rational::{format_rational, half, Rational};

/// Largest `dim J` accepted by the cone enumeration.
pub const MAX_CONE_DIM: usize = 12;
/// Largest `n` accepted by the cone enumeration.
pub const MAX_CONE_N: usize = 20;

/// `f(x) = Σ a_i x_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    pub coeffs: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        LinearForm { coeffs }
    }

    /// The weight form `s = (1, …, 1)`.
    pub fn weight(n: usize) -> Self {
        LinearForm::new(vec![Rational::one(); n])
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| *c >= Rational::zero())
    }

    /// `f(e_i e_k) = (a_i + a_k)/2` for every basis pair.
    pub fn is_invariant(&self, a: &InheritanceTensor) -> bool {
        pairs(a.dim()).all(|(i, k)| {
            let lhs: Rational = a.row(i, k).iter().map(|(j, p)| p * &self.coeffs[*j]).sum();
            lhs == (&self.coeffs[i] + &self.coeffs[k]) * half()
        })
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Extreme rays of the cone of nonnegative invariant forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalConeBasis {
    pub rays: Vec<LinearForm>,
    pub dim_j: usize,
}

impl CanonicalConeBasis {
    pub fn r(&self) -> usize {
        self.rays.len()
    }

    /// `r = dim J`: the rays are linearly independent.
    pub fn is_minihedral(&self) -> bool {
        self.r() == self.dim_j
    }
}

/// Basis of `J`: the null space of `Σ_j p_{ik,j} a_j - (a_i + a_k)/2 = 0`.
pub fn invariant_space(a: &InheritanceTensor) -> Vec<LinearForm> {
    let n = a.dim();
    let rows: Vec<Vec<Rational>> = pairs(n)
        .map(|(i, k)| {
            let mut row = vec![Rational::zero(); n];
            for (j, p) in a.row(i, k) {
                row[*j] += p;
            }
            row[i] -= half();
            row[k] -= half();
            row
        })
        .collect();
    linalg::null_space(&rows, n)
        .into_iter()
        .map(LinearForm::new)
        .collect()
}

pub fn canonical_cone_basis(a: &InheritanceTensor) -> Result<CanonicalConeBasis> {
    canonical_cone_basis_with(a, Execution::available())
}

/// Cone rays with an explicit execution strategy.
pub fn canonical_cone_basis_with(
    a: &InheritanceTensor,
    exec: Execution,
) -> Result<CanonicalConeBasis> {
    let n = a.dim();
    if n > MAX_CONE_N {
        return Err(Error::GuardExceeded {
            what: "n",
            value: n,
            limit: MAX_CONE_N,
        });
    }
    let basis: Vec<Vec<Rational>> = invariant_space(a).into_iter().map(|f| f.coeffs).collect();
    if basis.len() > MAX_CONE_DIM {
        return Err(Error::GuardExceeded {
            what: "dim J",
            value: basis.len(),
            limit: MAX_CONE_DIM,
        });
    }
    let rays = linalg::extreme_rays(&basis, n, exec)
        .into_iter()
        .map(LinearForm::new)
        .collect();
    Ok(CanonicalConeBasis {
        rays,
        dim_j: basis.len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneStructure {
    Elementary,
    NonElementary,
    NotRegular,
}

impl GeneStructure {
    pub fn name(self) -> &'static str {
        match self {
            GeneStructure::Elementary => "elementary",
            GeneStructure::NonElementary => "non_elementary",
            GeneStructure::NotRegular => "not_regular",
        }
    }
}

/// Elementary iff regular with `r = dim J`, non-elementary iff regular with
/// `r > dim J`; non-Bernstein algebras count as not regular.
pub fn gene_structure_kind(a: &InheritanceTensor) -> Result<GeneStructure> {
    if !bernstein::is_bernstein(a) || !bernstein::regularity_unchecked(a)?.regular() {
        return Ok(GeneStructure::NotRegular);
    }
    let cone = canonical_cone_basis(a)?;
    Ok(if cone.is_minihedral() {
        GeneStructure::Elementary
    } else {
        GeneStructure::NonElementary
    })
}

/// `f(V(x)) = f(x)` at a simplex point.
pub fn preserved_at(a: &InheritanceTensor, f: &LinearForm, x: &SimplexPoint) -> Result<bool> {
    let y = a.evolve(x)?;
    Ok(f.eval(y.as_vector().coords()) == f.eval(x.as_vector().coords()))
}
