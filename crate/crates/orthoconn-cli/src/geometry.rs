//! `ball`, `sphere` and `basis --family ball|sphere`.

use orthoconn::ball_sphere::ball::ball_basis_all;
use orthoconn::ball_sphere::sphere::{sphere_basis_all, sphere_expand};
use orthoconn::ball_sphere::{
    ball_connection, ball_connection_gram, sphere_connection, sphere_connection_gram, verify_ball_blocks,
    verify_ball_connection, verify_ball_equivalence, verify_ball_orthogonality, verify_sphere_basis,
    verify_sphere_connection, BallKappa,
};
use orthoconn::simplex_jacobi::enumerate_basis;
use orthoconn::{Kappa, Permutation, QSqrtQ};
use serde_json::{json, Value};

use crate::cli::{GeometryArgs, Method, Verb};
use crate::discrete::compare;
use crate::io::{self, csv_grid, grid, strings, usage, Artifact, CliResult};
use crate::verify::reports_artifact;

fn head(family: &str, k: &Kappa, d: usize, n: usize) -> Value {
    json!({ "family": family, "d": d, "n": n, "kappa": strings(k.values()) })
}

/// Ball parameters `kappa_1..kappa_{d+1}` for the ball in `R^d`.
pub fn ball(a: &GeometryArgs) -> CliResult<Artifact> {
    let k = io::kappa(&a.kappa, a.d)?;
    let d = k.d();
    let bk = BallKappa { kappa: k.clone() };
    let mut doc = head("ball", &k, d, a.n);
    if a.verb == Verb::Basis && a.tau.is_some() {
        return Err(usage("--tau is not used by basis"));
    }
    match a.verb {
        Verb::Basis => ball_basis(&bk, a.n),
        Verb::Connect => {
            let t = io::tau(a.tau.as_deref().ok_or_else(|| usage("ball connect needs --tau"))?, d)?;
            let order = enumerate_basis(a.n, d);
            let closed = || -> CliResult<Vec<Vec<QSqrtQ>>> {
                order.iter().map(|x| order.iter().map(|y| Ok(ball_connection(&t, x, y, &bk)?)).collect()).collect()
            };
            let (shown, other) = match a.method {
                Method::Gram => (ball_connection_gram(&t, &bk, a.n)?, None),
                Method::Closed => (closed()?, None),
                Method::Both => (ball_connection_gram(&t, &bk, a.n)?, Some(closed()?)),
            };
            doc["tau"] = json!(t.to_string());
            doc["order"] = json!(order);
            doc["normalized"] = json!(grid(&shown));
            let csv = csv_grid(&order, &shown);
            Ok(compare("ball-connect", doc, csv, &order, &shown, other.as_deref(), "parity blocks"))
        }
        Verb::Verify => {
            let mut reps = vec![verify_ball_orthogonality(&bk, a.n)?];
            for alpha in enumerate_basis(a.n, d) {
                reps.push(verify_ball_equivalence(&alpha, &bk)?.1);
            }
            for t in io::taus(a.tau.as_deref(), d)? {
                reps.push(verify_ball_connection(&t, &bk, a.n)?);
                reps.push(verify_ball_blocks(&t, &bk, a.n)?);
            }
            Ok(reports_artifact("ball-verify", doc, reps))
        }
    }
}

pub fn ball_basis(bk: &BallKappa<orthoconn::Rational>, n: usize) -> CliResult<Artifact> {
    let k = &bk.kappa;
    let mut doc = head("ball", k, k.d(), n);
    let mut csv = String::from("alpha,exp,coef\n");
    let mut polys = Vec::new();
    for (alpha, p) in ball_basis_all(n, bk)? {
        let full = p.expand();
        for (e, c) in full.sorted_terms() {
            csv.push_str(&format!("\"{alpha:?}\",\"{e:?}\",{c}\n"));
        }
        polys.push(json!({ "alpha": alpha, "eps": p.eps, "core": p.core, "poly": full }));
    }
    doc["polynomials"] = Value::Array(polys);
    Ok(Artifact::new("ball-basis", doc).with_csv(csv))
}

/// Sphere parameters `kappa_1..kappa_{d+1}` for the sphere in `R^{d+1}`.
pub fn sphere(a: &GeometryArgs) -> CliResult<Artifact> {
    let k = io::kappa(&a.kappa, a.d)?;
    let d = k.d();
    let mut doc = head("sphere", &k, d, a.n);
    if a.verb == Verb::Basis && a.tau.is_some() {
        return Err(usage("--tau is not used by basis"));
    }
    match a.verb {
        Verb::Basis => sphere_basis(&k, a.n),
        Verb::Connect => {
            let t = io::tau(a.tau.as_deref().ok_or_else(|| usage("sphere connect needs --tau"))?, d + 1)?;
            let (labels, gram) = sphere_connection_gram(&t, &k, a.n)?;
            let closed = || -> CliResult<Vec<Vec<QSqrtQ>>> {
                labels
                    .iter()
                    .map(|(nu, e)| {
                        labels.iter().map(|(mu, f)| Ok(sphere_connection(&t, (nu, e), (mu, f), &k)?)).collect()
                    })
                    .collect()
            };
            let (shown, other) = match a.method {
                Method::Gram => (gram, None),
                Method::Closed => (closed()?, None),
                Method::Both => (gram, Some(closed()?)),
            };
            doc["tau"] = json!(t.to_string());
            doc["order"] = json!(labels.iter().map(|(nu, e)| json!({ "nu": nu, "eps": e })).collect::<Vec<_>>());
            doc["normalized"] = json!(grid(&shown));
            let csv = csv_grid(&labels, &shown);
            Ok(compare("sphere-connect", doc, csv, &labels, &shown, other.as_deref(), "parity blocks"))
        }
        Verb::Verify => {
            let mut reps = vec![verify_sphere_basis(&k, a.n)?];
            let taus = match a.tau.as_deref() {
                Some(s) => vec![io::tau(s, d + 1)?],
                None if d < 3 => Permutation::all(d + 1),
                None => Vec::new(),
            };
            for t in taus {
                reps.push(verify_sphere_connection(&t, &k, a.n)?);
            }
            Ok(reports_artifact("sphere-verify", doc, reps))
        }
    }
}

pub fn sphere_basis(k: &Kappa, n: usize) -> CliResult<Artifact> {
    let mut doc = head("sphere", k, k.d(), n);
    let mut csv = String::from("nu,eps,exp,coef\n");
    let mut polys = Vec::new();
    for (nu, eps, p) in sphere_basis_all(n, k)? {
        let full = sphere_expand(&p, n)?;
        for (e, c) in full.sorted_terms() {
            csv.push_str(&format!("\"{nu:?}\",\"{eps:?}\",\"{e:?}\",{c}\n"));
        }
        polys.push(json!({ "nu": nu, "eps": eps, "core": p.core, "poly": full }));
    }
    doc["polynomials"] = Value::Array(polys);
    Ok(Artifact::new("sphere-basis", doc).with_csv(csv))
}
