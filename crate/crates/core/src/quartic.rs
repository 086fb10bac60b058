//! Symbolic expansion of `(x^2)^2 - s(x)^2 x^2`.
//!
//! Polynomials are keyed by sorted index multisets, so two expansions agree
//! iff their coefficient tables are equal. The factor 2 of an off-diagonal
//! monomial `x_a x_b` is applied when the quadratic forms are built; the
//! products below are then plain polynomial multiplication.

use std::collections::{BTreeMap, HashMap};

use num_traits::{ToPrimitive, Zero};

use crate::algebra::{pair_count, pairs, InheritanceTensor};
use crate::rational::{common_denominator, int, Rational};

type QuadraticForm = BTreeMap<[usize; 2], Rational>;

/// Degree-4 form: sorted multisets `{i,k,l,m}` to nonzero coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QuarticForm {
    terms: BTreeMap<[usize; 4], Rational>,
}

impl QuarticForm {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x_i x_k x_l x_m` (indices in any order).
    pub fn coefficient(&self, mut key: [usize; 4]) -> Rational {
        key.sort_unstable();
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize; 4], &Rational)> {
        self.terms.iter()
    }

    fn add_product(&mut self, factor: &Rational, a: &QuadraticForm, b: &QuadraticForm) {
        for (ka, ca) in a {
            let scaled = factor * ca;
            for (kb, cb) in b {
                let mut key = [ka[0], ka[1], kb[0], kb[1]];
                key.sort_unstable();
                let entry = self.terms.entry(key).or_insert_with(Rational::zero);
                *entry += &scaled * cb;
            }
        }
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }
}

/// Residual of the Bernstein identity, one quartic form per output coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernsteinResidual {
    pub coords: Vec<QuarticForm>,
}

impl BernsteinResidual {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(QuarticForm::is_zero)
    }

    /// Number of nonzero coefficients across all coordinates.
    pub fn nonzero_terms(&self) -> usize {
        self.coords.iter().map(QuarticForm::len).sum()
    }
}

/// Coordinates of `x^2` as quadratic forms in `x`.
fn square_forms(a: &InheritanceTensor) -> Vec<QuadraticForm> {
    let n = a.dim();
    let two = int(2);
    let mut forms = vec![QuadraticForm::new(); n];
    for (i, k) in pairs(n) {
        for (j, p) in a.row(i, k) {
            let c = if i == k { p.clone() } else { p * &two };
            forms[*j].insert([i, k], c);
        }
    }
    forms
}

/// Expands `(x^2)^2 - s(x)^2 x^2` coordinate by coordinate.
pub fn expand_bernstein_residual(a: &InheritanceTensor) -> BernsteinResidual {
    let n = a.dim();
    let two = int(2);
    let sq = square_forms(a);
    let mut coords = vec![QuarticForm::default(); n];

    // (x^2)^2_t = sum_{j<=l} w_jl p[jl][t] Q_j Q_l
    for (j, l) in pairs(n) {
        let row = a.row(j, l);
        if row.is_empty() || sq[j].is_empty() || sq[l].is_empty() {
            continue;
        }
        let mut prod = QuarticForm::default();
        prod.add_product(&int(1), &sq[j], &sq[l]);
        let w = if j == l { int(1) } else { two.clone() };
        for (t, p) in row {
            let factor = &w * p;
            for (key, c) in &prod.terms {
                let entry = coords[*t].terms.entry(*key).or_insert_with(Rational::zero);
                *entry += &factor * c;
            }
        }
    }

    let s2: QuadraticForm = pairs(n)
        .map(|(i, k)| ([i, k], if i == k { int(1) } else { two.clone() }))
        .collect();
    for (t, form) in coords.iter_mut().enumerate() {
        form.add_product(&int(-1), &s2, &sq[t]);
        form.prune();
    }
    BernsteinResidual { coords }
}

/// Whether the residual vanishes, decided in 128-bit integers after
/// clearing denominators; `None` if any intermediate value overflows.
///
/// With `D` the common denominator, `q_t = D (x^2)_t` and `P = D p`, the
/// scaled residual is `Σ_{j<=l} w_{jl} P_{jl,t} q_j q_l - D^2 s^2 q_t` with
/// `w = 1` on the diagonal and 2 off it.
pub(crate) fn residual_vanishes_scaled(a: &InheritanceTensor) -> Option<bool> {
    let n = a.dim();
    let d = common_denominator(a.entries().map(|(_, _, _, p)| p)).to_i128()?;
    let scaled = |p: &Rational| {
        (p * Rational::from_integer(d.into()))
            .to_integer()
            .to_i128()
    };

    let pc = pair_count(n);
    let pair_list: Vec<(usize, usize)> = pairs(n).collect();
    // monomial index of the product of two pair monomials
    let mut mono_of: HashMap<[usize; 4], usize> = HashMap::new();
    let mut table = vec![0usize; pc * pc];
    for (x, &(i, k)) in pair_list.iter().enumerate() {
        for (y, &(l, m)) in pair_list.iter().enumerate() {
            let mut key = [i, k, l, m];
            key.sort_unstable();
            let next = mono_of.len();
            table[x * pc + y] = *mono_of.entry(key).or_insert(next);
        }
    }
    let monos = mono_of.len();

    let mut q = vec![Vec::<(usize, i128)>::new(); n];
    let mut big_p = vec![Vec::<(usize, i128)>::new(); pc];
    for (x, &(i, k)) in pair_list.iter().enumerate() {
        for (j, p) in a.row(i, k) {
            let v = scaled(p)?;
            big_p[x].push((*j, v));
            q[*j].push((x, if i == k { v } else { v.checked_mul(2)? }));
        }
    }

    let mut residual = vec![vec![0i128; monos]; n];
    let mut prod = vec![0i128; monos];
    for (x, &(j, l)) in pair_list.iter().enumerate() {
        if big_p[x].is_empty() || q[j].is_empty() || q[l].is_empty() {
            continue;
        }
        prod.iter_mut().for_each(|v| *v = 0);
        for &(y1, c1) in &q[j] {
            for &(y2, c2) in &q[l] {
                let slot = &mut prod[table[y1 * pc + y2]];
                *slot = slot.checked_add(c1.checked_mul(c2)?)?;
            }
        }
        let w: i128 = if j == l { 1 } else { 2 };
        for &(t, pv) in &big_p[x] {
            let factor = pv.checked_mul(w)?;
            for (r, &c) in residual[t].iter_mut().zip(&prod) {
                if c != 0 {
                    *r = r.checked_add(factor.checked_mul(c)?)?;
                }
            }
        }
    }
    let d2 = d.checked_mul(d)?;
    for (t, res) in residual.iter_mut().enumerate() {
        for &(y2, c2) in &q[t] {
            let c2 = c2.checked_mul(d2)?;
            for (y1, &(i, k)) in pair_list.iter().enumerate() {
                let s = if i == k { c2 } else { c2.checked_mul(2)? };
                let slot = &mut res[table[y1 * pc + y2]];
                *slot = slot.checked_sub(s)?;
            }
        }
    }
    Some(residual.iter().all(|r| r.iter().all(|&c| c == 0)))
}

/// `(x^2)^2 = s(x)^2 x^2` identically; integer fast path with an exact
/// rational fallback.
pub fn residual_vanishes(a: &InheritanceTensor) -> bool {
    residual_vanishes_scaled(a).unwrap_or_else(|| expand_bernstein_residual(a).is_zero())
}
