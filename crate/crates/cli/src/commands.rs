use std::collections::BTreeMap;
use std::path::Path;

use bernstein_core::bernstein::{self, IdempotentIdentity};
use bernstein_core::classify;
use bernstein_core::families::{self, ExtendedMendelParams};
use bernstein_core::rational::parse_rational;
use bernstein_core::sample::Sampler;
use bernstein_core::sweep::{self, GridPoint};
use bernstein_core::{Execution, InheritanceTensor, Rational, SimplexPoint, Vector};
use sha2::{Digest, Sha256};

use crate::document::OperatorDocument;
use crate::error::CliError;
use crate::report::{
    self, AnomalyJson, CheckJson, GroupJson, IdentitiesReport, Provenance, SweepReport, TOOL,
};

/// A validated input file and its content hash.
pub struct Input {
    pub tensor: InheritanceTensor,
    pub provenance: Provenance,
}

pub fn load(path: &Path, max_n: usize) -> Result<Input, CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::io(path, e))?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|e| CliError::Schema(format!("{}: not UTF-8: {e}", path.display())))?;
    let doc = OperatorDocument::parse(text)?;
    if doc.n > max_n {
        return Err(CliError::Guard(format!(
            "n = {} exceeds --max-n {max_n}",
            doc.n
        )));
    }
    Ok(Input {
        tensor: doc.to_tensor()?,
        provenance: Provenance::new(hex::encode(Sha256::digest(&bytes))),
    })
}

pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn check_identities(
    input: Input,
    samples: usize,
    seed: u64,
) -> Result<IdentitiesReport, CliError> {
    let a = &input.tensor;
    let n = a.dim();
    let mut rng = Sampler::new(seed);
    let mut notices = Vec::new();

    let mut weight = CheckJson::new("weight_multiplicative");
    for s in 0..samples {
        let (x, y) = (rng.vector(n), rng.vector(n));
        weight.record(classify::weight_is_multiplicative(a, &x, &y), || {
            vec![s + 1]
        });
    }
    let mut checks = vec![weight];

    let is_b = bernstein::is_bernstein(a);
    if is_b {
        let mut quartic = CheckJson::new("bernstein_identity");
        for s in 0..samples {
            let x = rng.vector(n);
            let x2 = a.multiply(&x, &x)?;
            let w = x.weight();
            quartic.record(a.multiply(&x2, &x2)? == x2.scale(&(&w * &w)), || {
                vec![s + 1]
            });
        }
        checks.push(quartic);
        let suite = bernstein::basis_idempotent_suite(a, Execution::available())?;
        checks.extend(report::suite_checks(&suite));
        let mut sampled: BTreeMap<IdempotentIdentity, CheckJson> = IdempotentIdentity::ALL
            .iter()
            .map(|&id| {
                (
                    id,
                    CheckJson::new(format!("sampled_idempotents/{}", id.name())),
                )
            })
            .collect();
        for s in 0..samples {
            let z: Vec<Vector> = (0..4)
                .map(|_| bernstein::principal_idempotent(a, &rng.simplex_point(n)))
                .collect::<Result<_, _>>()?;
            for c in bernstein::verify_idempotent_identities(a, &z)?.applicable() {
                sampled
                    .get_mut(&c.identity)
                    .expect("all identities listed")
                    .record(c.passed(), || vec![s + 1]);
            }
        }
        checks.extend(sampled.into_values());
    } else {
        notices.push("not Bernstein: idempotent identity checks skipped".to_string());
    }
    let passed = checks.iter().all(|c| c.failures == 0);
    Ok(IdentitiesReport {
        provenance: input.provenance,
        n,
        samples,
        seed,
        bernstein: is_b,
        notices,
        checks,
        passed,
    })
}

/// Parameters of `generate`, as given on the command line.
#[derive(Debug, Default, Clone)]
pub struct GenerateArgs {
    pub n: Option<usize>,
    pub c: Option<String>,
    pub m: Option<usize>,
    pub pairs: Vec<String>,
    pub alpha: Option<String>,
    pub beta: Option<String>,
    pub nu: Option<usize>,
    pub nu_bar: Option<usize>,
}

fn required<T>(value: Option<T>, flag: &str, family: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Schema(format!("{family} requires --{flag}")))
}

fn rational_list(text: &str, flag: &str) -> Result<Vec<Rational>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            parse_rational(s)
                .ok_or_else(|| CliError::Schema(format!("--{flag}: cannot parse {s:?}")))
        })
        .collect()
}

/// `"1,2"` or `"1,2;1,3"`, 1-based.
fn pair_list(items: &[String]) -> Result<Vec<(usize, usize)>, CliError> {
    let mut out = Vec::new();
    for item in items
        .iter()
        .flat_map(|s| s.split(';'))
        .filter(|s| !s.trim().is_empty())
    {
        let parts: Vec<&str> = item.split(',').map(str::trim).collect();
        let parsed: Vec<usize> = parts.iter().filter_map(|p| p.parse().ok()).collect();
        match parsed.as_slice() {
            [i, k] if parts.len() == 2 && *i >= 1 && *k >= 1 => out.push((i - 1, k - 1)),
            _ => {
                return Err(CliError::Schema(format!(
                    "--pairs: expected \"i,k\" with i, k >= 1, got {item:?}"
                )))
            }
        }
    }
    Ok(out)
}

pub fn generate(family: &str, args: &GenerateArgs) -> Result<InheritanceTensor, CliError> {
    Ok(match family {
        "hardy-weinberg" => families::hardy_weinberg(),
        "mendel" => families::mendel(),
        "quadrille" => families::quadrille(),
        "unit" => families::unit(required(args.n, "n", family)?)?,
        "constant" => {
            let c = match (&args.c, args.n) {
                (Some(c), _) => SimplexPoint::new(Vector::new(rational_list(c, "c")?))
                    .map_err(|e| CliError::Schema(format!("--c: {e}")))?,
                (None, Some(n)) if n > 0 => SimplexPoint::barycenter(n),
                _ => {
                    return Err(CliError::Schema(
                        "constant requires --c or a positive --n".into(),
                    ))
                }
            };
            families::constant(&c)
        }
        "emalgebra" => {
            let pairs = pair_list(&args.pairs)?;
            let alpha = rational_list(args.alpha.as_deref().unwrap_or(""), "alpha")?;
            let beta = rational_list(args.beta.as_deref().unwrap_or(""), "beta")?;
            let params =
                ExtendedMendelParams::new(required(args.m, "m", family)?, pairs, alpha, beta);
            families::extended_mendel(&params)?
        }
        "eqalgebra" => families::extended_quadrille(
            required(args.nu, "nu", family)?,
            required(args.nu_bar, "nubar", family)?,
        )?,
        other => return Err(CliError::Schema(format!("unknown family {other:?}"))),
    })
}

fn usize_list(text: &str, flag: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| CliError::Schema(format!("--{flag}: cannot parse {s:?}")))
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct SweepArgs {
    pub family: String,
    pub m: String,
    pub max_delta: usize,
    pub max_den: i64,
    pub nu: String,
}

fn group_key(p: &GridPoint) -> (&'static str, usize, usize) {
    match p {
        GridPoint::ExtendedMendel(p) => ("emalgebra", p.m, p.delta()),
        GridPoint::ExtendedQuadrille { nu, nu_bar } => {
            ("eqalgebra", nu + nu_bar - 1, (nu - 1) * (nu_bar - 1))
        }
    }
}

pub fn sweep(args: &SweepArgs) -> Result<SweepReport, CliError> {
    if args.max_den < 1 {
        return Err(CliError::Schema("--max-den must be positive".into()));
    }
    let ms = usize_list(&args.m, "m")?;
    let nus = usize_list(&args.nu, "nu")?;
    if let Some(&m) = ms.iter().find(|&&m| m == 0) {
        return Err(CliError::Schema(format!("--m: rank {m} must be positive")));
    }
    if let Some(&nu) = nus.iter().find(|&&nu| nu < 2) {
        return Err(CliError::Schema(format!(
            "--nu: side {nu} must be at least 2"
        )));
    }
    let mut grid = BTreeMap::new();
    grid.insert("family", args.family.clone());
    let mut points = Vec::new();
    if matches!(args.family.as_str(), "emalgebra" | "both") {
        points.extend(sweep::emalgebra_grid(&ms, args.max_delta, args.max_den));
        grid.insert("m", args.m.clone());
        grid.insert("max_delta", args.max_delta.to_string());
        grid.insert("max_den", args.max_den.to_string());
    }
    if matches!(args.family.as_str(), "eqalgebra" | "both") {
        points.extend(sweep::eqalgebra_grid(&nus));
        grid.insert("nu", args.nu.clone());
    }
    let outcomes = sweep::evaluate_all(&points, Execution::available());
    let mut groups: BTreeMap<(&'static str, usize, usize), (usize, usize)> = BTreeMap::new();
    for o in &outcomes {
        let g = groups.entry(group_key(&o.point)).or_default();
        g.0 += 1;
        g.1 += usize::from(o.passed());
    }
    let summary = sweep::summarize(outcomes);
    Ok(SweepReport {
        tool: TOOL,
        version: env!("CARGO_PKG_VERSION"),
        grid,
        points: summary.points,
        passed: summary.passed,
        groups: groups
            .into_iter()
            .map(|((family, m, delta), (points, passed))| GroupJson {
                family,
                m,
                delta,
                points,
                passed,
            })
            .collect(),
        anomalies: summary
            .anomalies
            .iter()
            .map(|o| AnomalyJson {
                point: o.point.to_string(),
                anomalies: o.anomalies.clone(),
            })
            .collect(),
    })
}
