use finf_core::qdet::f_infinity_qdet;
use finf_core::traces::{compare_truncations, f_infinity, mmr_report, verify_factorization, verify_symmetry_ado, Agreement};
use finf_core::BraidWord;
use rayon::prelude::*;
use serde_json::json;

use crate::args::{Engine, Output, Suite, VerifyArgs};
use crate::compute::finf_raw;
use crate::CliError;

struct Check {
    name: String,
    passed: bool,
    detail: String,
}

impl Check {
    fn agreement(name: String, a: Agreement, bound: u32) -> Self {
        let detail = match a {
            Agreement::Exact => "exact".to_string(),
            Agreement::ModIdeal => format!("equal modulo I_{}", bound + 1),
            Agreement::Differ => "differ".to_string(),
        };
        Check { name, passed: a.holds(), detail }
    }
}

fn engines(braid: &BraidWord, bound: u32) -> Result<Vec<Check>, CliError> {
    let trace = finf_raw(braid, bound, Engine::Trace)?.value;
    let mut out = Vec::new();
    for e in [Engine::Statesum, Engine::Homological] {
        let v = finf_raw(braid, bound, e)?.value;
        out.push(Check { name: format!("trace = {}", e.name()), passed: v == trace, detail: "raw, exact".into() });
    }
    let q = f_infinity_qdet(braid, bound)?.value;
    let norm = f_infinity(braid, bound, true)?.value;
    out.push(Check::agreement("trace = qdet (normalized)".into(), compare_truncations(&norm, &q, bound), bound));
    Ok(out)
}

fn markov(braid: &BraidWord, bound: u32) -> Result<Vec<Check>, CliError> {
    let base = f_infinity(braid, bound, true)?.value;
    let n = braid.strands();
    let mut moves: Vec<(String, BraidWord)> = Vec::new();
    for i in 1..n as i32 {
        for s in [1, -1] {
            let g = BraidWord::new(n, vec![s * i])?;
            moves.push((format!("conjugate by {}", s * i), braid.conjugate_by(&g)));
        }
    }
    moves.push(("stabilize +".into(), braid.stabilize(1)));
    moves.push(("stabilize -".into(), braid.stabilize(-1)));
    moves
        .par_iter()
        .map(|(name, b)| {
            let v = f_infinity(b, bound, true)?.value;
            Ok(Check::agreement(name.clone(), compare_truncations(&base, &v, bound), bound))
        })
        .collect()
}

fn ado_checks(braid: &BraidWord) -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    for r in [2, 3] {
        out.push(Check { name: format!("ADO symmetry r={r}"), passed: verify_symmetry_ado(braid, r)?, detail: String::new() });
        out.push(Check { name: format!("ADO/Jones factorization r={r}"), passed: verify_factorization(braid, r)?, detail: String::new() });
    }
    Ok(out)
}

fn mmr(braid: &BraidWord, bound: u32) -> Result<Vec<Check>, CliError> {
    let rep = mmr_report(braid, bound)?;
    Ok(vec![Check {
        name: "MMR at q = 1".into(),
        passed: rep.holds(),
        detail: format!("T·A(s²) - s^{} divisible by (s - s⁻¹)^{} (need {})", rep.c, rep.order, rep.required),
    }])
}

pub fn run(a: &VerifyArgs, braid: &BraidWord) -> Result<bool, CliError> {
    braid.check_knot()?;
    let b = a.bound;
    let mut checks = Vec::new();
    let all = a.suite == Suite::All;
    if all || a.suite == Suite::Engines {
        checks.extend(engines(braid, b)?);
    }
    if all || a.suite == Suite::Markov {
        checks.extend(markov(braid, b)?);
    }
    if all || a.suite == Suite::Ado {
        checks.extend(ado_checks(braid)?);
    }
    if all || a.suite == Suite::Mmr {
        checks.extend(mmr(braid, b)?);
    }
    let ok = checks.iter().all(|c| c.passed);
    match a.output {
        Output::Text => {
            for c in &checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    println!("{mark}  {}", c.name);
                } else {
                    println!("{mark}  {}  ({})", c.name, c.detail);
                }
            }
        }
        Output::Json => {
            let list: Vec<_> = checks.iter().map(|c| json!({"check": c.name, "passed": c.passed, "detail": c.detail})).collect();
            let env = json!({"braid": braid.to_string(), "strands": braid.strands(), "B": b, "passed": ok, "checks": list});
            println!("{}", serde_json::to_string_pretty(&env).expect("serializable"));
        }
    }
    Ok(ok)
}
