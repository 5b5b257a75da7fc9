//! `racah`, `hahn` and `kraw`.

use orthoconn::closed_forms::general::is_prefix_cycle;
use orthoconn::closed_forms::NO_CLOSED_FORM;
use orthoconn::discrete::hahn::{
    hahn_connection, hahn_connection_gram, hahn_lattice, hahn_multi, verify_hahn_connection, verify_hahn_generating,
    verify_hahn_orthogonality, HahnContext,
};
use orthoconn::discrete::krawtchouk::{
    kraw_cc_cyclic, kraw_connection_gram, kraw_points, krawtchouk_multi, verify_kraw_duality,
    verify_kraw_orthogonality, KrawContext, KrawCyclicForm,
};
use orthoconn::racah::{
    dual_map, racah_lattice, racah_multi, racah_norm_sq, racah_weight_multi, verify_conjugation, verify_duality,
    verify_orthogonality_multi, RacahParamsMulti,
};
use orthoconn::simplex_jacobi::{enumerate_basis, enumerate_upto};
use orthoconn::{MultiIndex, Permutation, QSqrtQ, Rational, Report};
use serde_json::{json, Value};

use crate::cli::{HahnArgs, KrawArgs, Method, RacahArgs, RacahVerb, Verb};
use crate::io::{self, csv_grid, grid, naturals, strings, usage, Artifact, CliResult};
use crate::verify::reports_artifact;

pub fn racah(a: &RacahArgs) -> CliResult<Artifact> {
    let beta = io::rationals(&a.beta)?;
    io::check_len("beta", &beta, a.d.map(|d| d + 2))?;
    let p = RacahParamsMulti::new(beta.clone(), a.big_n)?;
    let d = p.d();
    let nus = match &a.nu {
        Some(s) => vec![naturals(s)?],
        None => enumerate_upto(a.big_n, d),
    };
    let xs = match &a.x {
        Some(s) => vec![naturals(s)?],
        None => racah_lattice(d, a.big_n),
    };
    let head = json!({ "d": d, "N": a.big_n, "beta": strings(&beta) });
    let (stem, rows): (&str, Vec<Value>) = match a.verb {
        RacahVerb::Eval => {
            let mut rows = Vec::new();
            for nu in &nus {
                for x in &xs {
                    rows.push(json!({ "nu": nu, "x": x, "value": racah_multi(nu, x, &p)?.to_string() }));
                }
            }
            ("racah-eval", rows)
        }
        RacahVerb::Weight => (
            "racah-weight",
            xs.iter()
                .map(|x| Ok(json!({ "x": x, "weight": racah_weight_multi(x, &p)?.to_string() })))
                .collect::<CliResult<_>>()?,
        ),
        RacahVerb::Norm => (
            "racah-norm",
            nus.iter()
                .map(|nu| Ok(json!({ "nu": nu, "norm_sq": racah_norm_sq(nu, &p)?.to_string() })))
                .collect::<CliResult<_>>()?,
        ),
        RacahVerb::Dual => {
            let (Some(_), Some(_)) = (&a.nu, &a.x) else {
                return Err(usage("racah dual needs --nu and --x"));
            };
            let (xt, nt, pt) = dual_map(&xs[0], &nus[0], &p)?;
            let row = json!({ "x": xs[0], "nu": nus[0], "dual_x": xt, "dual_nu": nt, "dual_beta": strings(&pt.beta) });
            ("racah-dual", vec![row])
        }
        RacahVerb::Verify => {
            let reps = vec![verify_orthogonality_multi(&p)?, verify_duality(&p)?, verify_conjugation(&p)?];
            return Ok(reports_artifact("racah-verify", head, reps));
        }
    };
    let mut doc = head;
    doc["rows"] = Value::Array(rows);
    Ok(Artifact::new(stem, doc))
}

fn values_table(points: &[MultiIndex], order: &[MultiIndex], mut f: impl FnMut(&[usize], &[usize]) -> orthoconn::Result<Rational>) -> CliResult<(Value, String)> {
    let mut polys = Vec::new();
    let mut csv = String::from("nu,x,value\n");
    for nu in order {
        let mut vals = Vec::new();
        for x in points {
            let v = f(nu, x)?;
            csv.push_str(&format!("\"{nu:?}\",\"{x:?}\",{v}\n"));
            vals.push(json!({ "x": x, "value": v.to_string() }));
        }
        polys.push(json!({ "nu": nu, "values": vals }));
    }
    Ok((Value::Array(polys), csv))
}

pub fn hahn(a: &HahnArgs) -> CliResult<Artifact> {
    let k = io::kappa(&a.kappa, a.d)?;
    let d = k.d();
    let ctx = HahnContext::new(k.clone(), a.big_n)?;
    let mut doc = json!({ "d": d, "N": a.big_n, "kappa": strings(k.values()), "n": a.n });
    match a.verb {
        Verb::Basis => {
            let (polys, csv) = values_table(&hahn_lattice(d + 1, a.big_n), &enumerate_basis(a.n, d), |nu, x| hahn_multi(nu, x, &ctx))?;
            doc["polynomials"] = polys;
            Ok(Artifact::new("hahn-basis", doc).with_csv(csv))
        }
        Verb::Connect => {
            let t = io::tau(a.tau.as_deref().ok_or_else(|| usage("hahn connect needs --tau"))?, d + 1)?;
            let order = enumerate_basis(a.n, d);
            let closed = || -> CliResult<Vec<Vec<Rational>>> {
                order.iter().map(|nu| order.iter().map(|mu| Ok(hahn_connection(&t, nu, mu, &k)?)).collect()).collect()
            };
            let (entries, other) = match a.method {
                Method::Gram => (hahn_connection_gram(&t, &ctx, a.n)?, None),
                Method::Closed => (closed()?, None),
                Method::Both => (hahn_connection_gram(&t, &ctx, a.n)?, Some(closed()?)),
            };
            doc["tau"] = json!(t.to_string());
            doc["order"] = json!(order);
            doc["entries"] = json!(grid(&entries));
            let csv = csv_grid(&order, &entries);
            Ok(compare("hahn-connect", doc, csv, &order, &entries, other.as_deref(), "simplex bridge"))
        }
        Verb::Verify => {
            let mut reps = vec![verify_hahn_orthogonality(&ctx, a.n)?, verify_hahn_generating(&ctx, a.n)?];
            for t in io::taus(a.tau.as_deref(), d + 1)? {
                reps.push(verify_hahn_connection(&t, &k, a.n, &[a.big_n])?);
            }
            Ok(reports_artifact("hahn-verify", doc, reps))
        }
    }
}

pub fn kraw(a: &KrawArgs) -> CliResult<Artifact> {
    let rho = io::rationals(&a.rho)?;
    io::check_len("rho", &rho, a.d)?;
    let d = rho.len();
    let ctx = KrawContext::new(rho.clone(), a.big_n)?;
    let mut doc = json!({ "d": d, "N": a.big_n, "rho": strings(&rho), "n": a.n });
    match a.verb {
        Verb::Basis => {
            let (polys, csv) = values_table(&kraw_points(d, a.big_n), &enumerate_basis(a.n, d), |nu, x| krawtchouk_multi(nu, x, &ctx))?;
            doc["polynomials"] = polys;
            Ok(Artifact::new("kraw-basis", doc).with_csv(csv))
        }
        Verb::Connect => {
            let t = io::tau(a.tau.as_deref().ok_or_else(|| usage("kraw connect needs --tau"))?, d + 1)?;
            let order = enumerate_basis(a.n, d);
            let (raw, hat) = kraw_connection_gram(&t, &ctx, a.n)?;
            let closed = || -> CliResult<(Vec<Vec<QSqrtQ>>, &'static str)> {
                if !is_prefix_cycle(&t) {
                    return Ok((hat.clone(), NO_CLOSED_FORM));
                }
                let m = order
                    .iter()
                    .map(|nu| order.iter().map(|mu| Ok(kraw_cc_cyclic(KrawCyclicForm::Hat, nu, mu, &rho)?)).collect())
                    .collect::<CliResult<_>>()?;
                Ok((m, "cyclic Krawtchouk form"))
            };
            doc["tau"] = json!(t.to_string());
            doc["order"] = json!(order);
            let (shown, other, tag) = match a.method {
                Method::Gram => {
                    doc["entries"] = json!(grid(&raw));
                    (hat.clone(), None, "")
                }
                Method::Closed => {
                    let (m, tag) = closed()?;
                    (m, None, tag)
                }
                Method::Both => {
                    doc["entries"] = json!(grid(&raw));
                    let (m, tag) = closed()?;
                    (hat.clone(), Some(m), tag)
                }
            };
            doc["normalized"] = json!(grid(&shown));
            if !tag.is_empty() {
                doc["provenance"] = json!(tag);
            }
            let csv = csv_grid(&order, &shown);
            Ok(compare("kraw-connect", doc, csv, &order, &shown, other.as_deref(), tag))
        }
        Verb::Verify => {
            let mut reps = vec![verify_kraw_orthogonality(&ctx)?, verify_kraw_duality(&ctx)?];
            if d >= 2 {
                let t = Permutation::cycle_prefix(d + 1, d);
                let (_, hat) = kraw_connection_gram(&t, &ctx, a.n)?;
                let order = enumerate_basis(a.n, d);
                let mut rep = Report::new(format!("cyclic Krawtchouk form vs Gram tau={t} n={}", a.n));
                for (i, nu) in order.iter().enumerate() {
                    for (j, mu) in order.iter().enumerate() {
                        for form in [KrawCyclicForm::Hat, KrawCyclicForm::Tilde] {
                            let v = kraw_cc_cyclic(form, nu, mu, &rho)?;
                            rep.check(v == hat[i][j], || format!("{form:?} {nu:?},{mu:?}: {v} != gram {}", hat[i][j]));
                        }
                    }
                }
                reps.push(rep);
            }
            Ok(reports_artifact("kraw-verify", doc, reps))
        }
    }
}

/// Attaches agreement, diff artifact and failure when a second route was computed.
pub fn compare<L: std::fmt::Debug, T: PartialEq + std::fmt::Display>(
    stem: &str,
    mut doc: Value,
    csv: String,
    order: &[L],
    first: &[Vec<T>],
    second: Option<&[Vec<T>]>,
    second_name: &str,
) -> Artifact {
    let mut diff = Vec::new();
    if let Some(s) = second {
        for (i, a) in order.iter().enumerate() {
            for (j, b) in order.iter().enumerate() {
                if first[i][j] != s[i][j] {
                    diff.push(format!("{a:?},{b:?}: gram {} {second_name} {}", first[i][j], s[i][j]));
                }
            }
        }
        doc["agree"] = json!(diff.is_empty());
    }
    let mut art = Artifact::new(stem, doc).with_csv(csv);
    if !diff.is_empty() {
        art.failure = Some(format!("{} entries differ between gram and {second_name}", diff.len()));
        art.extra.push((format!("{stem}-diff.txt"), diff.join("\n") + "\n"));
    }
    art
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mismatch_sets_failure_and_diff() {
        let order = vec![vec![1usize, 0], vec![0, 1]];
        let a = vec![vec![1, 0], vec![0, 1]];
        let b = vec![vec![1, 0], vec![2, 1]];
        let art = compare("t", json!({}), String::new(), &order, &a, Some(&b), "other");
        assert_eq!(art.json["agree"], json!(false));
        assert!(art.failure.is_some());
        assert_eq!(art.extra.len(), 1);
        assert!(art.extra[0].1.starts_with("[0, 1],[1, 0]: gram 0 other 2"));
        let ok = compare("t", json!({}), String::new(), &order, &a, Some(&a), "other");
        assert!(ok.failure.is_none() && ok.extra.is_empty());
    }
}
