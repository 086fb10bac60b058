//! Parameter grids over the two canonical families and the verification
//! harness run on every grid point.
//!
//! Pairs with `delta >= 2` are not swept over the full Cartesian product of
//! `(alpha, beta)` values. Instead the `t`-th point assigns grid value
//! `(t + j * STRIDE) mod V` to pair `j`, so every pair runs through every
//! admissible value once and neighbouring pairs are decorrelated.

use std::fmt;

use crate::algebra::InheritanceTensor;
use crate::bernstein::{self, AlgebraType, RegularityVerdict};
use crate::classify::{self, Classification};
use crate::error::Result;
use crate::families::{self, ExtendedMendelParams, GridLabeling};
use crate::lattice;
use crate::linalg::combinations;
use crate::normality;
use crate::par::{self, Execution};
use crate::rational::Rational;

/// Offset between consecutive pairs in the cyclic assignment.
pub const STRIDE: usize = 37;

/// One grid point of either family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GridPoint {
    ExtendedMendel(ExtendedMendelParams),
    ExtendedQuadrille { nu: usize, nu_bar: usize },
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridPoint::ExtendedMendel(p) => write!(f, "emalgebra {p}"),
            GridPoint::ExtendedQuadrille { nu, nu_bar } => write!(f, "eqalgebra {nu}x{nu_bar}"),
        }
    }
}

/// Admissible `(alpha, beta)` pairs with denominators at most `max_den`.
pub fn mendel_value_pairs(max_den: i64) -> Vec<(Rational, Rational)> {
    let values = families::mendel_grid_values(max_den);
    values
        .iter()
        .flat_map(|a| values.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

/// Extended Mendel grid for the given ranks, every distinct-pair set of
/// size at most `max_delta`.
pub fn emalgebra_grid(ms: &[usize], max_delta: usize, max_den: i64) -> Vec<GridPoint> {
    let values = mendel_value_pairs(max_den);
    let mut out = Vec::new();
    for &m in ms {
        let all_pairs: Vec<(usize, usize)> = (0..m)
            .flat_map(|i| (i + 1..m).map(move |k| (i, k)))
            .collect();
        for delta in 0..=max_delta.min(all_pairs.len()) {
            for chosen in combinations(all_pairs.len(), delta) {
                let pairs: Vec<(usize, usize)> = chosen.iter().map(|&c| all_pairs[c]).collect();
                let count = if delta == 0 { 1 } else { values.len() };
                for t in 0..count {
                    let pick = |j: usize| &values[(t + j * STRIDE) % values.len()];
                    let alpha = (0..delta).map(|j| pick(j).0.clone()).collect();
                    let beta = (0..delta).map(|j| pick(j).1.clone()).collect();
                    out.push(GridPoint::ExtendedMendel(ExtendedMendelParams::new(
                        m,
                        pairs.clone(),
                        alpha,
                        beta,
                    )));
                }
            }
        }
    }
    out
}

pub fn eqalgebra_grid(nus: &[usize]) -> Vec<GridPoint> {
    nus.iter()
        .flat_map(|&nu| {
            nus.iter()
                .map(move |&nu_bar| GridPoint::ExtendedQuadrille { nu, nu_bar })
        })
        .collect()
}

/// Results of the full check battery on one grid point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointOutcome {
    pub point: GridPoint,
    pub algebra_type: Option<AlgebraType>,
    pub bernstein: bool,
    pub regularity: Option<RegularityVerdict>,
    pub normal: bool,
    pub ultranormal: bool,
    pub grounded: bool,
    pub nuclear: bool,
    pub recognized: bool,
    pub anomalies: Vec<String>,
}

impl PointOutcome {
    pub fn passed(&self) -> bool {
        self.anomalies.is_empty()
    }
}

fn generate(point: &GridPoint) -> Result<InheritanceTensor> {
    match point {
        GridPoint::ExtendedMendel(p) => families::extended_mendel(p),
        GridPoint::ExtendedQuadrille { nu, nu_bar } => families::extended_quadrille(*nu, *nu_bar),
    }
}

fn expected_type(point: &GridPoint) -> AlgebraType {
    match point {
        GridPoint::ExtendedMendel(p) => AlgebraType {
            m: p.m,
            delta: p.delta(),
        },
        GridPoint::ExtendedQuadrille { nu, nu_bar } => AlgebraType {
            m: nu + nu_bar - 1,
            delta: (nu - 1) * (nu_bar - 1),
        },
    }
}

fn round_trip(point: &GridPoint, a: &InheritanceTensor, c: &Classification) -> bool {
    match (point, c) {
        (GridPoint::ExtendedMendel(p), Classification::ExtendedMendel { params, .. }) => {
            params == p
        }
        (GridPoint::ExtendedMendel(p), Classification::Unit { n }) => p.delta() == 0 && *n == p.m,
        (
            GridPoint::ExtendedQuadrille { nu, nu_bar },
            Classification::ExtendedQuadrille { labeling },
        ) => {
            let sides = (labeling.nu, labeling.nu_bar);
            (sides == (*nu, *nu_bar) || sides == (*nu_bar, *nu))
                && families::extended_quadrille_labeled(labeling).as_ref() == Ok(a)
        }
        _ => false,
    }
}

/// Generates the point's algebra and runs every check on it.
pub fn evaluate(point: &GridPoint) -> PointOutcome {
    let mut out = PointOutcome {
        point: point.clone(),
        algebra_type: None,
        bernstein: false,
        regularity: None,
        normal: false,
        ultranormal: false,
        grounded: false,
        nuclear: false,
        recognized: false,
        anomalies: Vec::new(),
    };
    let a = match generate(point) {
        Ok(a) => a,
        Err(e) => {
            out.anomalies.push(format!("generation failed: {e}"));
            return out;
        }
    };
    if let Err(e) = run_checks(point, &a, &mut out) {
        out.anomalies.push(format!("check failed: {e}"));
    }
    out
}

fn run_checks(point: &GridPoint, a: &InheritanceTensor, out: &mut PointOutcome) -> Result<()> {
    out.bernstein = bernstein::is_bernstein(a);
    if !out.bernstein {
        out.anomalies.push("not Bernstein".into());
        return Ok(());
    }
    let p = bernstein::checked_decomposition(a)?;
    let t = p.algebra_type();
    out.algebra_type = Some(t);
    if t != expected_type(point) {
        out.anomalies
            .push(format!("type {t} differs from {}", expected_type(point)));
    }
    let v = bernstein::verdict_at(a, &p);
    out.regularity = Some(v);
    for c in bernstein::RegularityCriterion::ALL {
        if !v.get(c) {
            out.anomalies
                .push(format!("regularity criterion {} fails", c.name()));
        }
    }
    out.normal = normality::is_normal(a).is_normal();
    if !out.normal {
        out.anomalies.push("not normal".into());
    }
    out.ultranormal = normality::is_ultranormal_with(a, Execution::Sequential)?.ultranormal;
    if !out.ultranormal {
        out.anomalies.push("not ultranormal".into());
    }
    out.grounded = lattice::is_grounded(a);
    if !out.grounded {
        out.anomalies.push("not grounded".into());
    }
    out.nuclear = bernstein::is_nuclear(a);
    if !out.nuclear {
        out.anomalies.push("not nuclear".into());
    }
    let c = classify::recognize_at(a, t, bernstein::consistent(v)?)?;
    out.recognized = round_trip(point, a, &c);
    if !out.recognized {
        out.anomalies
            .push(format!("recognition did not round trip: {c}"));
    }
    Ok(())
}

/// Aggregate over a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SweepSummary {
    pub points: usize,
    pub passed: usize,
    pub anomalies: Vec<PointOutcome>,
}

impl SweepSummary {
    pub fn all_passed(&self) -> bool {
        self.anomalies.is_empty()
    }
}

pub fn evaluate_all(points: &[GridPoint], exec: Execution) -> Vec<PointOutcome> {
    par::map_collect(exec, points, evaluate)
}

pub fn summarize(outcomes: Vec<PointOutcome>) -> SweepSummary {
    let points = outcomes.len();
    let anomalies: Vec<PointOutcome> = outcomes.into_iter().filter(|o| !o.passed()).collect();
    SweepSummary {
        points,
        passed: points - anomalies.len(),
        anomalies,
    }
}

pub fn run_sweep(points: &[GridPoint], exec: Execution) -> SweepSummary {
    summarize(evaluate_all(points, exec))
}

/// The labeling recognized for a grid point, if any.
pub fn recognized_labeling(nu: usize, nu_bar: usize) -> Result<Option<GridLabeling>> {
    let a = families::extended_quadrille(nu, nu_bar)?;
    Ok(match classify::recognize_unchecked(&a)? {
        Classification::ExtendedQuadrille { labeling } => Some(labeling),
        _ => None,
    })
}
