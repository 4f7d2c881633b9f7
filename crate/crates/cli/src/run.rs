//! Command dispatch: every public operation behind a machine-readable
//! report and the exit-code convention
//! (0 holds/success, 1 fails with witness, 2 unknown/budget, 3 input
//! error).

use prosset::budget::Budget;
use prosset::homotopy::{twisted_pro_cohomology, we_check_b, we_check_c, we_check_d};
use prosset::lifting::{has_rlp, solve_lift, LiftingSquare, NThreshold};
use prosset::model::{
    factor_cofib_trivfib, factor_we, is_strong_fibration, mapping_space, postnikov, we_check_e,
    NFunction,
};
use prosset::pro::{is_pro_iso, pro_hom, ProObject, SSetCat};
use prosset::simplicial::homology::{homology_range, Coefficients};
use prosset::verdict::Verdict;
use serde_json::{json, Value};

use crate::schema::{self, Document, Payload, VerdictDto};

pub struct Flags {
    pub dim_bound: Option<usize>,
    pub budget: u64,
    pub rlp_max_dim: Option<usize>,
    pub seed: u64,
    pub n_max: usize,
    pub step_budget: usize,
    pub degree: usize,
    pub modulus: Option<i128>,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            dim_bound: None,
            budget: 50_000_000,
            rlp_max_dim: None,
            seed: 0,
            n_max: 1,
            step_budget: 6,
            degree: 1,
            modulus: None,
        }
    }
}

pub struct Outcome {
    pub report: Value,
    pub exit: i32,
}

fn verdict_exit(v: &Verdict) -> i32 {
    match v {
        Verdict::Holds => 0,
        Verdict::Fails { .. } => 1,
        Verdict::Unknown { .. } => 2,
    }
}

fn input_error(msg: String) -> Outcome {
    Outcome {
        report: json!({ "error": msg }),
        exit: 3,
    }
}

fn report(command: &str, flags: &Flags, body: Value, exit: i32) -> Outcome {
    let report = json!({
        "schema_version": schema::SCHEMA_VERSION,
        "command": command,
        "flags": {
            "dim_bound": flags.dim_bound,
            "budget": flags.budget,
            "rlp_max_dim": flags.rlp_max_dim,
            "seed": flags.seed,
            "n_max": flags.n_max,
            "step_budget": flags.step_budget,
            "degree": flags.degree,
            "modulus": flags.modulus.map(|m| m.to_string()),
        },
        "result": body,
    });
    Outcome { report, exit }
}

fn want_sset(doc: &Document) -> Result<prosset::simplicial::TruncatedSSet, String> {
    match &doc.payload {
        Payload::Sset(x) => Ok(x.clone()),
        _ => Err("expected an sset document".into()),
    }
}

fn want_map(doc: &Document) -> Result<prosset::simplicial::SSetMap, String> {
    match &doc.payload {
        Payload::SsetMap(f) => Ok(f.clone()),
        _ => Err("expected an sset_map document".into()),
    }
}

fn want_pro(doc: &Document) -> Result<ProObject<SSetCat>, String> {
    match &doc.payload {
        Payload::ProSpace(dto) => dto.clone().into_pro(),
        Payload::Sset(x) => Ok(ProObject::constant(x.clone())),
        _ => Err("expected a pro_space document".into()),
    }
}

fn want_level(doc: &Document) -> Result<prosset::pro::LevelMap<SSetCat>, String> {
    match &doc.payload {
        Payload::LevelMap(dto) => dto.clone().into_level(),
        Payload::SsetMap(f) => prosset::pro::LevelMap::new(
            ProObject::constant(f.source.clone()),
            ProObject::constant(f.target.clone()),
            vec![f.clone()],
        ),
        _ => Err("expected a level_map document".into()),
    }
}

pub fn run(command: &str, inputs: &[Document], flags: &Flags) -> Outcome {
    let budget = Budget::new(flags.budget);
    match command {
        "homology" => {
            let x = match inputs.first().ok_or_else(|| "homology needs an sset".to_string()).and_then(want_sset) {
                Ok(x) => x,
                Err(e) => return input_error(e),
            };
            let coeff = match flags.modulus {
                None => Coefficients::Integers,
                Some(p) => Coefficients::Mod(p),
            };
            let max_degree = flags.dim_bound.unwrap_or(x.dim_bound());
            let groups = homology_range(&x, max_degree, coeff);
            let body = json!({
                "groups": groups.iter().map(|h| json!({
                    "group": h.group.to_string(),
                    "reliable": h.reliable,
                })).collect::<Vec<_>>(),
            });
            report(command, flags, body, 0)
        }
        "pro-hom" => {
            let (x, y) = match (
                inputs.first().ok_or_else(|| "pro-hom needs two pro-spaces".to_string()).and_then(want_pro),
                inputs.get(1).ok_or_else(|| "pro-hom needs two pro-spaces".to_string()).and_then(want_pro),
            ) {
                (Ok(x), Ok(y)) => (x, y),
                (Err(e), _) | (_, Err(e)) => return input_error(e),
            };
            match pro_hom(&x, &y, &budget) {
                Ok(maps) => report(command, flags, json!({ "count": maps.len() }), 0),
                Err(e) => report(command, flags, json!({ "unknown": e.to_string() }), 2),
            }
        }
        "is-pro-iso" => {
            let f = match inputs.first().ok_or_else(|| "is-pro-iso needs a level map".to_string()).and_then(want_level)
            {
                Ok(f) => f,
                Err(e) => return input_error(e),
            };
            match is_pro_iso(&f, &budget) {
                Ok((v, _)) => {
                    let exit = verdict_exit(&v);
                    report(command, flags, json!({ "verdict": VerdictDto::from(&v) }), exit)
                }
                Err(e) => report(command, flags, json!({ "unknown": e.to_string() }), 2),
            }
        }
        "we-check" => input_error("we-check requires a mode: we-check-b|c|d|e".into()),
        "we-check-b" => {
            let f = match inputs.first().ok_or_else(|| "we-check-b needs a level map".to_string()).and_then(want_level)
            {
                Ok(f) => f,
                Err(e) => return input_error(e),
            };
            let (v, trace) = we_check_b(&f, flags.n_max, &budget);
            let exit = verdict_exit(&v);
            let body = json!({
                "verdict": VerdictDto::from(&v),
                "trace": trace.entries.iter().map(|(n, s, v)| json!({
                    "degree": n, "level": s, "verdict": VerdictDto::from(v),
                })).collect::<Vec<_>>(),
            });
            report(command, flags, body, exit)
        }
        "we-check-c" => {
            let f = match inputs.first().ok_or_else(|| "we-check-c needs a level map".to_string()).and_then(want_level)
            {
                Ok(f) => f,
                Err(e) => return input_error(e),
            };
            let mut systems = Vec::new();
            for doc in &inputs[1..] {
                match &doc.payload {
                    Payload::LocalSystem(dto) => match dto.clone().into_system() {
                        Ok(pair) => systems.push(pair),
                        Err(e) => return input_error(e),
                    },
                    _ => return input_error("extra inputs must be local systems".into()),
                }
            }
            let v = we_check_c(&f, &systems, flags.degree, &budget);
            let exit = verdict_exit(&v);
            report(
                command,
                flags,
                json!({
                    "verdict": VerdictDto::from(&v),
                    "family_size": systems.len(),
                    "holds_is_relative_to_family": true,
                }),
                exit,
            )
        }
        "we-check-d" => {
            let f = match inputs.first().ok_or_else(|| "we-check-d needs a level map".to_string()).and_then(want_level)
            {
                Ok(f) => f,
                Err(e) => return input_error(e),
            };
            let (v, witness) = we_check_d(&f);
            let exit = verdict_exit(&v);
            report(
                command,
                flags,
                json!({ "verdict": VerdictDto::from(&v), "witness_degrees": witness }),
                exit,
            )
        }
        "we-check-e" => {
            let f = match inputs.first().ok_or_else(|| "we-check-e needs a level map".to_string()).and_then(want_level)
            {
                Ok(f) => f,
                Err(e) => return input_error(e),
            };
            let v = we_check_e(&f, true, &budget);
            let exit = verdict_exit(&v);
            report(command, flags, json!({ "verdict": VerdictDto::from(&v) }), exit)
        }
        "factor-we" | "factor-cofib" => {
            let f = match inputs.first().ok_or_else(|| "factor needs a level map".to_string()).and_then(want_level) {
                Ok(f) => f,
                Err(e) => return input_error(e),
            };
            let result = if command == "factor-we" {
                factor_we(&f, flags.step_budget, &budget)
            } else {
                factor_cofib_trivfib(&f, flags.step_budget, &budget)
            };
            match result {
                Ok(r) => {
                    let composite = r.composite_is(&f);
                    let verified = r.verified();
                    let exit = if composite && verified {
                        0
                    } else if composite {
                        2
                    } else {
                        1
                    };
                    let body = json!({
                        "composite_exact": composite,
                        "reports": r.reports.iter().map(|rep| json!({
                            "family": rep.family.to_string(),
                            "max_dim": rep.max_dim,
                            "tested_squares": rep.tested_squares,
                            "verdict": VerdictDto::from(&rep.verdict),
                        })).collect::<Vec<_>>(),
                        "attachments": r.certificates.iter()
                            .map(|c| c.attachments.len()).collect::<Vec<_>>(),
                    });
                    report(command, flags, body, exit)
                }
                Err(e) => report(command, flags, json!({ "unknown": e.to_string() }), 2),
            }
        }
        "lift" => {
            // Inputs: i, p, top, bottom as sset maps.
            let maps: Result<Vec<_>, _> = inputs.iter().map(want_map).collect();
            let maps = match maps {
                Ok(m) if m.len() == 4 => m,
                Ok(_) => return input_error("lift needs i, p, top, bottom".into()),
                Err(e) => return input_error(e),
            };
            let square = match LiftingSquare::new(
                maps[0].clone(),
                maps[1].clone(),
                maps[2].clone(),
                maps[3].clone(),
            ) {
                Ok(sq) => sq,
                Err(e) => return input_error(e),
            };
            match solve_lift(&square, &budget) {
                Ok(Some(h)) => report(
                    command,
                    flags,
                    json!({ "lift_found": true, "lift": serde_json::to_value(&h).unwrap() }),
                    0,
                ),
                Ok(None) => report(command, flags, json!({ "lift_found": false }), 1),
                Err(e) => report(command, flags, json!({ "unknown": e.to_string() }), 2),
            }
        }
        "strong-fib" => {
            let f = match inputs.first().ok_or_else(|| "strong-fib needs a level map".to_string()).and_then(want_level)
            {
                Ok(f) => f,
                Err(e) => return input_error(e),
            };
            let n = NFunction::heights(&f.source.index);
            let max_dim = flags.rlp_max_dim.unwrap_or_else(|| {
                f.source
                    .fibers
                    .iter()
                    .map(|x| x.dim_bound())
                    .min()
                    .unwrap_or(0)
                    + 1
            });
            let v = is_strong_fibration(&f, &n, max_dim, &budget);
            let exit = verdict_exit(&v);
            report(
                command,
                flags,
                json!({ "verdict": VerdictDto::from(&v), "max_dim": max_dim }),
                exit,
            )
        }
        "postnikov" => {
            let x = match inputs.first().ok_or_else(|| "postnikov needs a pro-space".to_string()).and_then(want_pro) {
                Ok(x) => x,
                Err(e) => return input_error(e),
            };
            match postnikov(&x, true, &budget) {
                Ok(p) => {
                    let body = json!({
                        "stage_count": p.degree_count(),
                        "index_size": p.object.index.len(),
                        "exact": p.exact,
                    });
                    report(command, flags, body, 0)
                }
                Err(e) => report(command, flags, json!({ "unknown": e.to_string() }), 2),
            }
        }
        "map-space" => {
            let (x, y) = match (
                inputs.first().ok_or_else(|| "map-space needs two pro-spaces".to_string()).and_then(want_pro),
                inputs.get(1).ok_or_else(|| "map-space needs two pro-spaces".to_string()).and_then(want_pro),
            ) {
                (Ok(x), Ok(y)) => (x, y),
                (Err(e), _) | (_, Err(e)) => return input_error(e),
            };
            match mapping_space(&x, &y, flags.n_max, &budget) {
                Ok(m) => {
                    let counts: Vec<usize> =
                        (0..=flags.n_max).map(|k| m.simplex_count(k)).collect();
                    report(command, flags, json!({ "simplex_counts": counts }), 0)
                }
                Err(e) => report(command, flags, json!({ "unknown": e }), 2),
            }
        }
        "twisted-cohomology" => {
            let x = match inputs.first().ok_or_else(|| "needs a pro-space".to_string()).and_then(want_pro) {
                Ok(x) => x,
                Err(e) => return input_error(e),
            };
            let (level, system) = match inputs.get(1) {
                Some(Document {
                    payload: Payload::LocalSystem(dto),
                    ..
                }) => match dto.clone().into_system() {
                    Ok(p) => p,
                    Err(e) => return input_error(e),
                },
                _ => return input_error("second input must be a local system".into()),
            };
            match twisted_pro_cohomology(&x, level, &system, flags.degree) {
                Ok(h) => report(
                    command,
                    flags,
                    json!({ "group": h.group.to_string(), "reliable": h.reliable }),
                    0,
                ),
                Err(e) => input_error(e),
            }
        }
        "rlp" => {
            let p = match inputs.first().ok_or_else(|| "rlp needs an sset map".to_string()).and_then(want_map) {
                Ok(p) => p,
                Err(e) => return input_error(e),
            };
            let max_dim = flags
                .rlp_max_dim
                .unwrap_or(p.source.dim_bound().min(p.target.dim_bound()) + 1);
            let n = flags
                .modulus
                .map(|m| NThreshold::Finite(m as i64))
                .unwrap_or(NThreshold::Infinity);
            match has_rlp(&p, n, max_dim, &budget) {
                Ok(r) => {
                    let exit = verdict_exit(&r.verdict);
                    report(
                        command,
                        flags,
                        json!({
                            "verdict": VerdictDto::from(&r.verdict),
                            "tested_squares": r.tested_squares,
                            "max_dim": r.max_dim,
                        }),
                        exit,
                    )
                }
                Err(e) => report(command, flags, json!({ "unknown": e.to_string() }), 2),
            }
        }
        "verify-certificates" => {
            let mut checked = 0usize;
            for doc in inputs {
                if let Payload::Certificate(c) = &doc.payload {
                    if let Err(e) = c.certificate.verify(&c.composite) {
                        return report(
                            command,
                            flags,
                            json!({ "verdict": VerdictDto::Fails { witness: e } }),
                            1,
                        );
                    }
                    checked += 1;
                }
            }
            report(
                command,
                flags,
                json!({ "verdict": VerdictDto::Holds, "checked": checked }),
                0,
            )
        }
        "corpus-gen" => {
            // Handled in main (needs the profile argument), kept here for
            // completeness of the command list.
            input_error("corpus-gen is handled with --profile".into())
        }
        other => input_error(format!("unknown command {other:?}")),
    }
}
