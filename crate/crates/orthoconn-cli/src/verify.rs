//! `verify --suite NAME`.

use std::time::Instant;

use orthoconn::ball_sphere::{example_910_check, verify_disk_polar, verify_sphere_basis};
use orthoconn::closed_forms::{closed_form_entry, verify_closed_against, verify_sum_identity};
use orthoconn::connection::{gram_connection, verify_convolution, verify_inverse, verify_orthogonality, verify_reconstruction};
use orthoconn::simplex_jacobi::enumerate_basis;
use orthoconn::suites::{self, Sampler, CRITERIA};
use orthoconn::{Kappa, Permutation, Report};
use clap::ValueEnum;
use serde_json::{json, Value};

use crate::cli::{Suite, VerifyArgs};
use crate::io::{self, strings, usage, Artifact, CliResult};

/// JSON `{..head, passed, reports}` and a CSV summary; fails when any report does.
pub fn reports_artifact(stem: &str, mut head: Value, reps: Vec<Report>) -> Artifact {
    let passed = reps.iter().all(Report::passed);
    let mut csv = String::from("name,checked,failures,passed\n");
    for r in &reps {
        csv.push_str(&format!("\"{}\",{},{},{}\n", r.name.replace('"', "'"), r.checked, r.failures.len(), r.passed()));
    }
    let failing: Vec<String> = reps.iter().filter(|r| !r.passed()).map(Report::summary).collect();
    head["passed"] = json!(passed);
    head["reports"] = json!(reps);
    let mut a = Artifact::new(stem, head).with_csv(csv);
    if !passed {
        a.failure = Some(failing.join("; "));
    }
    a
}

/// Explicit `--kappa`, else `d + 1` entries sampled from `--seed`.
fn kappa_or_sample(a: &VerifyArgs, len: Option<usize>) -> CliResult<Kappa> {
    match &a.kappa {
        Some(s) => {
            let k = io::kappa(s, a.d)?;
            if let Some(l) = len.filter(|&l| l != k.d() + 1) {
                return Err(usage(format!("--kappa needs {l} entries for this suite")));
            }
            Ok(k)
        }
        None => Ok(Sampler::new(a.seed).kappa(len.unwrap_or(a.d.unwrap_or(2) + 1))),
    }
}

pub fn verify(a: &VerifyArgs) -> CliResult<Artifact> {
    let name = a.suite.to_possible_value().expect("no skipped variants").get_name().to_string();
    let mut head = json!({ "suite": name, "seed": a.seed });
    let mut reps = Vec::new();
    match a.suite {
        Suite::Orthogonality | Suite::Reconstruction | Suite::Inverse | Suite::ClosedVsGram => {
            let k = kappa_or_sample(a, None)?;
            let n = a.n.unwrap_or(2);
            let mut skipped = Vec::new();
            for t in io::taus(a.tau.as_deref(), k.d() + 1)? {
                match a.suite {
                    Suite::Orthogonality => reps.push(verify_orthogonality(&gram_connection(&t, &k, n)?)),
                    Suite::Reconstruction => reps.push(verify_reconstruction(&gram_connection(&t, &k, n)?)?),
                    Suite::Inverse => reps.push(verify_inverse(&k, &t, n)?),
                    _ => {
                        let first = &enumerate_basis(n, k.d())[0];
                        if closed_form_entry(&t, first, first, k.values())?.is_none() {
                            skipped.push(t.to_string());
                            continue;
                        }
                        reps.push(verify_closed_against(&gram_connection(&t, &k, n)?.normalize())?);
                    }
                }
            }
            head["kappa"] = json!(strings(k.values()));
            head["n"] = json!(n);
            if !skipped.is_empty() {
                head["skipped_no_closed_form"] = json!(skipped);
            }
        }
        Suite::Convolution => {
            let k = kappa_or_sample(a, None)?;
            let m = k.d() + 1;
            let n = a.n.unwrap_or(2);
            let pairs: Vec<(Permutation, Permutation)> = match (&a.tau, &a.tau2) {
                (Some(t1), Some(t2)) => vec![(io::tau(t1, m)?, io::tau(t2, m)?)],
                (None, None) => {
                    let mut s = Sampler::new(a.seed);
                    (0..6).map(|_| (s.permutation(m), s.permutation(m))).collect()
                }
                _ => return Err(usage("convolution needs both --tau and --tau2, or neither")),
            };
            for (t1, t2) in &pairs {
                reps.push(verify_convolution(&k, t1, t2, n)?);
            }
            head["kappa"] = json!(strings(k.values()));
            head["n"] = json!(n);
        }
        Suite::SumIdentity => match &a.kappa {
            Some(_) => {
                let k = kappa_or_sample(a, Some(3))?;
                for n in 0..=a.n.unwrap_or(4) {
                    reps.push(verify_sum_identity(k.values(), n)?);
                }
            }
            None => reps.push(suites::sum_identity_suite(a.n.unwrap_or(6))?),
        },
        Suite::Racah => reps.push(suites::racah_suite(100, a.seed)?),
        Suite::Hahn => reps.push(suites::hahn_suite()?),
        Suite::Kraw => reps.push(suites::kraw_suite(10, a.seed)?),
        Suite::Ball => reps.push(suites::ball_suite(a.n.unwrap_or(4))?),
        Suite::Disk => {
            let mu = match &a.mu {
                Some(s) => io::rationals(s)?.into_iter().next().ok_or_else(|| usage("--mu is empty"))?,
                None => Sampler::new(a.seed).kappa_entry(),
            };
            for n in 0..=a.n.unwrap_or(4) {
                reps.push(verify_disk_polar(n, &mu)?.1);
            }
            head["mu"] = json!(mu.to_string());
        }
        Suite::Sphere => {
            let k = kappa_or_sample(a, None)?;
            for n in 0..=a.n.unwrap_or(3) {
                reps.push(verify_sphere_basis(&k, n)?);
            }
            head["kappa"] = json!(strings(k.values()));
        }
        Suite::Example910 => reps.push(example_910_check(a.n.unwrap_or(3))?),
        Suite::Dimensions => reps.push(suites::dimension_suite()?),
        Suite::Acceptance => {
            let ks: Vec<usize> = match a.criterion {
                Some(c) if (1..=CRITERIA.len()).contains(&c) => vec![c],
                Some(c) => return Err(usage(format!("no acceptance criterion {c}; use 1 to {}", CRITERIA.len()))),
                None => (1..=CRITERIA.len()).collect(),
            };
            let mut sink = Vec::new();
            for k in ks {
                let start = Instant::now();
                let r = suites::acceptance(k, a.seed, &mut sink)?;
                eprintln!("{} ({:.1}s)", r.summary(), start.elapsed().as_secs_f64());
                reps.push(r);
            }
        }
    }
    Ok(reports_artifact("verify", head, reps))
}
