use serde_json::{json, Value};

use skewcodes::codes::{self_dual_constant_check, self_dual_constant_list};
use skewcodes::decomp::{verify_decomposition_theorem, verify_dual_theorem};
use skewcodes::examples::{example_f25, example_f49, example_f9, example_n7, f25, f27, f9, factorization_identities};
use skewcodes::gray::{check_commutation, Identity};
use skewcodes::json::encode_relem;
use skewcodes::{GaloisField, RElem, RingR, ShiftKind, SkewCode};

use crate::commands::gcd;
use crate::report::Outcome;
use crate::{to_value, CliError};

pub const SUITES: [&str; 7] = [
    "gray-commutation",
    "ret1",
    "ret2",
    "decomposition",
    "dual",
    "self-dual-constants",
    "factorizations",
];

/// Named code instances: the input code, or the worked examples.
fn instances(input: Option<&SkewCode>) -> Result<Vec<(String, SkewCode)>, CliError> {
    Ok(match input {
        Some(c) => vec![("input".into(), c.clone())],
        None => vec![
            ("example 1".into(), example_f25()?),
            ("example 2".into(), example_f9()?),
            ("example 3".into(), example_f49()?),
            ("example 4".into(), example_n7()?),
        ],
    })
}

fn alpha_json(r: RElem) -> Value {
    to_value(&encode_relem(r))
}

fn gray_commutation(trials: usize, seed: u64, input: Option<&SkewCode>) -> Result<Vec<Value>, CliError> {
    let mut runs: Vec<(Identity, GaloisField, usize, RElem)> = Vec::new();
    match input {
        Some(code) => {
            for which in [Identity::SigmaPi4, Identity::TauOmega4] {
                runs.push((which, code.field().clone(), code.n(), code.alpha()));
            }
            if code.field().k() == 3 {
                runs.push((Identity::PermutedSigma4, code.field().clone(), code.n(), code.alpha()));
            }
        }
        None => {
            for field in [f9(), f25()] {
                let ring = RingR::new(field.clone());
                for n in [3, 4, 6] {
                    for alpha in [ring.one(), ring.from_int(-1), ring.from_ints(1, 0, 0, -2)] {
                        for which in [Identity::SigmaPi4, Identity::TauOmega4] {
                            runs.push((which, field.clone(), n, alpha));
                        }
                    }
                }
            }
            let f = f27();
            let one = RingR::new(f.clone()).one();
            runs.push((Identity::PermutedSigma4, f, 5, one));
        }
    }
    runs.into_iter()
        .enumerate()
        .map(|(i, (which, field, n, alpha))| {
            let r = check_commutation(which, &field, n, alpha, trials, seed.wrapping_add(i as u64))?;
            Ok(json!({
                "identity": which.name(),
                "q": field.order(),
                "n": n,
                "alpha": alpha_json(alpha),
                "trials": r.trials,
                "pass": r.pass,
                "counterexample": r.counterexample.map(|w| w.into_iter().map(alpha_json).collect::<Vec<_>>()),
            }))
        })
        .collect()
}

/// Untwisted constacyclic closure when `gcd(n, k) = 1`.
fn ret1(input: Option<&SkewCode>) -> Result<Vec<Value>, CliError> {
    instances(input)?
        .into_iter()
        .map(|(name, code)| {
            let g = gcd(code.n(), code.field().k());
            let closed = if g == 1 { Some(code.is_closed_under(&ShiftKind::Constacyclic(code.alpha()))?) } else { None };
            Ok(json!({
                "instance": name,
                "gcd_n_k": g,
                "applicable": g == 1,
                "closed": closed,
                "pass": closed != Some(false),
            }))
        })
        .collect()
}

/// Quasi-twist closure of index `gcd(n, k)`.
fn ret2(input: Option<&SkewCode>) -> Result<Vec<Value>, CliError> {
    instances(input)?
        .into_iter()
        .map(|(name, code)| {
            let l = gcd(code.n(), code.field().k());
            let closed = code.is_closed_under(&ShiftKind::QuasiTwist { l, alpha: code.alpha() })?;
            Ok(json!({ "instance": name, "index": l, "closed": closed, "pass": closed }))
        })
        .collect()
}

fn decomposition(input: Option<&SkewCode>) -> Result<Vec<Value>, CliError> {
    instances(input)?
        .into_iter()
        .map(|(name, code)| {
            let r = verify_decomposition_theorem(&code)?;
            Ok(json!({
                "instance": name,
                "pass": r.closed && r.consistent,
                "report": to_value(&r),
            }))
        })
        .collect()
}

fn dual(input: Option<&SkewCode>) -> Result<Vec<Value>, CliError> {
    instances(input)?
        .into_iter()
        .map(|(name, code)| {
            if !code.ring().is_unit(code.alpha()) {
                return Ok(json!({
                    "instance": name,
                    "applicable": false,
                    "note": "shift constant is not a unit",
                    "pass": true,
                }));
            }
            let r = verify_dual_theorem(&code)?;
            let pass = r.components_match.iter().all(|&b| b)
                && r.cardinality_product_ok
                && r.constacyclic_under_inverse != Some(false);
            Ok(json!({ "instance": name, "applicable": true, "pass": pass, "report": to_value(&r) }))
        })
        .collect()
}

/// Exhaustively over `F_9` and `F_25`: the units passing the component test are exactly the listed sixteen.
fn self_dual_constants() -> Result<Vec<Value>, CliError> {
    [f9(), f25()]
        .into_iter()
        .map(|field| {
            let ring = RingR::new(field.clone());
            let elems: Vec<_> = field.elements().collect();
            let mut passing = 0usize;
            for &a in &elems {
                for &b in &elems {
                    for &c in &elems {
                        for &d in &elems {
                            let r = RElem::new(a, b, c, d);
                            if ring.is_unit(r) && self_dual_constant_check(&ring, r)? {
                                passing += 1;
                            }
                        }
                    }
                }
            }
            let mut list = self_dual_constant_list(&ring);
            list.sort();
            list.dedup();
            Ok(json!({
                "q": field.order(),
                "passing_units": passing,
                "distinct_listed": list.len(),
                "pass": passing == 16 && list.len() == 16,
            }))
        })
        .collect()
}

fn factorizations() -> Vec<Value> {
    factorization_identities()
        .into_iter()
        .map(|c| json!({ "identity": c.name, "pass": c.holds }))
        .collect()
}

/// Runs the named suites. Unknown names are rejected before anything runs.
pub fn verify_suite(names: &[String], trials: usize, seed: u64, input: Option<&SkewCode>) -> Result<Outcome, CliError> {
    if let Some(bad) = names.iter().find(|n| !SUITES.contains(&n.as_str())) {
        return Err(CliError::UnknownSuite(bad.clone()));
    }
    let mut suites = Vec::new();
    let mut all = true;
    for name in names {
        let checks = match name.as_str() {
            "gray-commutation" => gray_commutation(trials, seed, input)?,
            "ret1" => ret1(input)?,
            "ret2" => ret2(input)?,
            "decomposition" => decomposition(input)?,
            "dual" => dual(input)?,
            "self-dual-constants" => self_dual_constants()?,
            "factorizations" => factorizations(),
            _ => unreachable!("names checked above"),
        };
        let pass = checks.iter().all(|c| c["pass"] == json!(true));
        all &= pass;
        suites.push(json!({ "suite": name, "pass": pass, "checks": checks }));
    }
    let field = match input {
        Some(code) => to_value(code.field().spec()),
        None if names.is_empty() => Value::Null,
        None => json!([f9(), f25(), f27(), skewcodes::examples::f49()]
            .iter()
            .map(|f| to_value(f.spec()))
            .collect::<Vec<_>>()),
    };
    let mut out = Outcome::new(field, json!({ "suites": suites, "pass": all }));
    out.verified = all;
    Ok(out)
}
