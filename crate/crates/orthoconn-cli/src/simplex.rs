//! `basis --family simplex` and `connect`.

use orthoconn::closed_forms::closed_matrix;
use orthoconn::connection::gram_connection;
use orthoconn::simplex_jacobi::{enumerate_basis, jacobi_simplex_basis, norm_a, permute_vars};
use orthoconn::{ConnMatrixQ, Kappa, Permutation, QSqrtQ};
use serde_json::{json, Value};

use crate::cli::{ConnectArgs, Method};
use crate::io::{self, csv_grid, grid, strings, Artifact, CliResult};

/// `P_nu^kappa`, or `P_nu^{tau kappa}(tau x)` when `tau` is given.
pub fn basis(d: Option<usize>, n: usize, kappa: &str, tau: Option<&str>) -> CliResult<Artifact> {
    let k = io::kappa(kappa, d)?;
    let d = k.d();
    let t = match tau {
        Some(s) => io::tau(s, d + 1)?,
        None => Permutation::identity(d + 1),
    };
    let tk = k.permuted(&t);
    let mut polys = Vec::new();
    let mut csv = String::from("nu,exp,coef\n");
    for nu in enumerate_basis(n, d) {
        let p = permute_vars(&jacobi_simplex_basis(&nu, &tk)?, &t)?;
        for (e, c) in p.sorted_terms() {
            csv.push_str(&format!("\"{nu:?}\",\"{e:?}\",{c}\n"));
        }
        polys.push(json!({ "nu": nu, "norm": norm_a(&nu, &tk).to_string(), "poly": p }));
    }
    let doc = json!({
        "family": "simplex",
        "d": d,
        "n": n,
        "kappa": strings(k.values()),
        "tau": t.to_string(),
        "polynomials": polys,
    });
    Ok(Artifact::new("basis", doc).with_csv(csv))
}

pub fn connect(a: &ConnectArgs) -> CliResult<Artifact> {
    let k = io::kappa(&a.kappa, a.d)?;
    let t = io::tau(&a.tau, k.d() + 1)?;
    let n = a.n;
    let (primary, provenance, failure, diff) = match a.method {
        Method::Gram => (gram_connection(&t, &k, n)?.normalize(), None, None, None),
        Method::Closed => {
            let c = closed_matrix(&t, &k, n)?;
            (c.matrix, Some(c.provenance), None, None)
        }
        Method::Both => {
            let g = gram_connection(&t, &k, n)?.normalize();
            let c = closed_matrix(&t, &k, n)?;
            let diff = diff_report(&g, &c.matrix, &c.provenance);
            let failure = (!diff.is_empty()).then(|| format!("{} entries differ between gram and closed", diff.len()));
            (g, Some(c.provenance), failure, Some(diff))
        }
    };
    Ok(render(&primary, &k, a, provenance, failure, diff))
}

fn render(
    m: &ConnMatrixQ,
    k: &Kappa,
    a: &ConnectArgs,
    provenance: Option<Vec<Vec<String>>>,
    failure: Option<String>,
    diff: Option<Vec<String>>,
) -> Artifact {
    let norm = m.normalized_entries();
    let mut doc = json!({
        "d": m.d,
        "n": m.n,
        "kappa": strings(k.values()),
        "tau": m.tau.to_string(),
        "method": format!("{:?}", a.method).to_lowercase(),
        "order": m.order,
        "entries": grid(&m.entries),
    });
    let obj = doc.as_object_mut().expect("object literal");
    if a.normalized {
        obj.insert("normalized".into(), json!(grid(&norm)));
    }
    if let Some(p) = provenance {
        obj.insert("provenance".into(), json!(p));
    }
    if let Some(d) = &diff {
        obj.insert("agree".into(), Value::Bool(d.is_empty()));
    }
    let csv = if a.normalized { csv_grid(&m.order, &norm) } else { csv_grid(&m.order, &m.entries) };
    let mut art = Artifact::new("connect", doc).with_csv(csv);
    if let Some(d) = diff.filter(|d| !d.is_empty()) {
        art.extra.push(("connect-diff.txt".into(), d.join("\n") + "\n"));
    }
    art.failure = failure;
    art
}

/// One line per entry where the routes disagree, raw or normalized.
fn diff_report(g: &ConnMatrixQ, c: &ConnMatrixQ, prov: &[Vec<String>]) -> Vec<String> {
    let gn = g.normalized_entries();
    let cn: Vec<Vec<QSqrtQ>> = c.normalized_entries();
    let mut out = Vec::new();
    for (i, nu) in g.order.iter().enumerate() {
        for (j, mu) in g.order.iter().enumerate() {
            if g.entries[i][j] != c.entries[i][j] || gn[i][j] != cn[i][j] {
                out.push(format!(
                    "{nu:?},{mu:?}: gram {} ({}) closed {} ({}) via {}",
                    g.entries[i][j], gn[i][j], c.entries[i][j], cn[i][j], prov[i][j]
                ));
            }
        }
    }
    out
}
