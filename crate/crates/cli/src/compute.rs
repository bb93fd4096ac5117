use finf_core::qdet::{ado_qdet, alexander_qdet, f_infinity_qdet};
use finf_core::rings::json::{bivariate_to_json, cyclotomic_laurent_to_json, q_poly_to_json, univariate_to_json};
use finf_core::rings::specialize_s;
use finf_core::statesum::{braid_closure_diagram, f_infinity_statesum};
use finf_core::traces::{ado, ado_raw, alexander, colored_jones, colored_jones_raw, f_infinity, homological_form, TruncatedSeries};
use finf_core::{BivariateLaurent, BraidWord, CyclotomicLaurent, UnivariateLaurent};
use serde_json::{json, Map, Value as Json};

use crate::args::{ComputeArgs, Engine, Invariant, Output};
use crate::CliError;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Bivariate(BivariateLaurent),
    /// Polynomial in `q`.
    Jones(UnivariateLaurent),
    /// Polynomial in `s` over `ℤ[ζ_{2r}]`.
    Ado(CyclotomicLaurent, u32),
    /// Polynomial in `t`.
    Alexander(UnivariateLaurent),
}

impl Value {
    pub fn render(&self) -> String {
        match self {
            Value::Bivariate(p) => p.render(),
            Value::Jones(p) => p.render("q"),
            Value::Ado(p, r) => render_ado(p, *r),
            Value::Alexander(p) => p.render("t"),
        }
    }

    pub fn to_json(&self) -> Json {
        match self {
            Value::Bivariate(p) => bivariate_to_json(p),
            Value::Jones(p) => q_poly_to_json(p),
            Value::Ado(p, r) => cyclotomic_laurent_to_json(p, 2 * r),
            Value::Alexander(p) => univariate_to_json(p),
        }
    }

    /// The first term (in the output order) on which two values differ.
    pub fn first_difference(&self, other: &Self) -> String {
        match (self, other) {
            (Value::Bivariate(a), Value::Bivariate(b)) => {
                let d = a - b;
                let first = d.terms().next().map_or("none".into(), |(e, c)| format!("q^{} s^{}: {c}", e[0], e[1]));
                first
            }
            (Value::Jones(a), Value::Jones(b)) | (Value::Alexander(a), Value::Alexander(b)) => {
                let d = a - b;
                let first = d.terms().next().map_or("none".into(), |(e, c)| format!("degree {e}: {c}"));
                first
            }
            (Value::Ado(a, _), Value::Ado(b, _)) => {
                let d = a - b;
                let first = d.terms().next().map_or("none".into(), |(e, c)| format!("s^{e}: {c}"));
                first
            }
            _ => "values of different kinds".into(),
        }
    }
}

fn render_ado(p: &CyclotomicLaurent, r: u32) -> String {
    if p.terms().next().is_none() {
        return "0".into();
    }
    let parts: Vec<String> = p.terms().rev().map(|(e, c)| format!("({c})·s^{e}")).collect();
    format!("{} (z = exp(iπ/{r}))", parts.join(" + "))
}

pub struct Params {
    pub bound: Option<u32>,
    pub color: Option<u32>,
    pub r: Option<u32>,
}

impl Params {
    pub fn from_args(a: &ComputeArgs) -> Result<Self, CliError> {
        let p = Params { bound: a.bound, color: a.color, r: a.r };
        let (need, name) = match a.invariant {
            Invariant::Finf => (p.bound.is_some(), "--B"),
            Invariant::Jones => (p.color.is_some(), "--N"),
            Invariant::Ado => (p.r.is_some(), "--r"),
            Invariant::Alexander => (true, ""),
        };
        if !need {
            return Err(CliError::Usage(format!("{} needs {name}", a.invariant.name())));
        }
        let stray = [
            (p.bound.is_some() && a.invariant != Invariant::Finf, "--B only applies to finf"),
            (p.color.is_some() && a.invariant != Invariant::Jones, "--N only applies to jones"),
            (p.r.is_some() && a.invariant != Invariant::Ado, "--r only applies to ado"),
        ];
        if let Some((_, msg)) = stray.iter().find(|(bad, _)| *bad) {
            return Err(CliError::Usage(msg.to_string()));
        }
        if p.r == Some(0) {
            return Err(CliError::Usage("--r must be positive".into()));
        }
        Ok(p)
    }

    pub fn to_json(&self) -> Json {
        let mut m = Map::new();
        if let Some(b) = self.bound {
            m.insert("B".into(), json!(b));
        }
        if let Some(n) = self.color {
            m.insert("N".into(), json!(n));
        }
        if let Some(r) = self.r {
            m.insert("r".into(), json!(r));
        }
        Json::Object(m)
    }
}

pub fn engines_for(inv: Invariant) -> &'static [Engine] {
    match inv {
        Invariant::Finf | Invariant::Jones => &[Engine::Trace, Engine::Statesum, Engine::Homological, Engine::Qdet],
        Invariant::Ado | Invariant::Alexander => &[Engine::Trace, Engine::Qdet],
    }
}

/// `F∞` truncated at `bound` by one of the engines, raw.
pub fn finf_raw(braid: &BraidWord, bound: u32, engine: Engine) -> Result<TruncatedSeries, CliError> {
    let w = braid.writhe();
    Ok(match engine {
        Engine::Trace => f_infinity(braid, bound, false)?,
        Engine::Statesum => {
            braid.check_knot()?;
            let mut t = f_infinity_statesum(&braid_closure_diagram(braid)?, bound)?;
            t.strands = braid.strands();
            t
        }
        Engine::Homological => homological_form(braid, bound)?,
        Engine::Qdet => {
            let t = f_infinity_qdet(braid, bound)?;
            TruncatedSeries { value: t.value.shift(&[0, w]), normalized: false, ..t }
        }
        Engine::All => unreachable!("expanded by the caller"),
    })
}

pub fn compute(braid: &BraidWord, inv: Invariant, engine: Engine, p: &Params, normalize: bool) -> Result<Value, CliError> {
    if !engines_for(inv).contains(&engine) {
        return Err(CliError::Usage(format!("engine {} does not compute {}", engine.name(), inv.name())));
    }
    let w = braid.writhe();
    Ok(match inv {
        Invariant::Finf => {
            let t = finf_raw(braid, p.bound.expect("checked"), engine)?;
            Value::Bivariate(if normalize { t.normalize().value } else { t.value })
        }
        Invariant::Jones => {
            let n = p.color.expect("checked");
            let v = match engine {
                Engine::Trace if normalize => colored_jones(braid, n)?,
                Engine::Trace => colored_jones_raw(braid, n)?,
                // truncation errors lie in I_{N+1}, which vanishes at s = q^N
                _ => {
                    let t = finf_raw(braid, n, engine)?;
                    let t = if normalize { t.normalize() } else { t };
                    specialize_s(&t.value, n as i32)
                }
            };
            Value::Jones(v)
        }
        Invariant::Ado => {
            let r = p.r.expect("checked");
            let v = match engine {
                Engine::Trace if normalize => ado(braid, r)?.value,
                Engine::Trace => ado_raw(braid, r)?.value,
                _ => {
                    let v = ado_qdet(braid, r)?.value;
                    if normalize { v } else { v.shift(&(-(r as i32 - 1) * w)) }
                }
            };
            Value::Ado(v, r)
        }
        Invariant::Alexander => Value::Alexander(match engine {
            Engine::Trace => alexander(braid)?,
            _ => alexander_qdet(braid)?,
        }),
    })
}

pub fn run(a: &ComputeArgs, braid: &BraidWord) -> Result<bool, CliError> {
    let params = Params::from_args(a)?;
    let engines: Vec<Engine> = if a.engine == Engine::All { engines_for(a.invariant).to_vec() } else { vec![a.engine] };
    let mut results = Vec::new();
    for &e in &engines {
        results.push((e, compute(braid, a.invariant, e, &params, a.normalize)?));
    }
    let (_, first) = &results[0];
    let disagreements: Vec<(Engine, String)> = results[1..]
        .iter()
        .filter(|(_, v)| v != first)
        .map(|(e, v)| (*e, first.first_difference(v)))
        .collect();
    match a.output {
        Output::Json => {
            let mut env = json!({
                "invariant": a.invariant.name(),
                "braid": braid.to_string(),
                "strands": braid.strands(),
                "writhe": braid.writhe(),
                "params": params.to_json(),
                "normalized": a.normalize && a.invariant != Invariant::Alexander,
                "engine": a.engine.name(),
                "value": first.to_json(),
            });
            if a.engine == Engine::All {
                env["agreement"] = json!(results
                    .iter()
                    .map(|(e, v)| (e.name().to_string(), json!(v == first)))
                    .collect::<Map<_, _>>());
            }
            println!("{}", serde_json::to_string_pretty(&env).expect("serializable"));
        }
        Output::Text => {
            println!("{} of [{}] on {} strands, writhe {}", a.invariant.name(), braid, braid.strands(), braid.writhe());
            if a.engine == Engine::All {
                for (e, v) in &results {
                    println!("  {:<12} {}", e.name(), if v == first { "agrees" } else { "DIFFERS" });
                }
            }
            println!("{}", first.render());
        }
    }
    for (e, d) in &disagreements {
        eprintln!("engine {} differs from {}: first differing term {d}", e.name(), engines[0].name());
    }
    Ok(disagreements.is_empty())
}
