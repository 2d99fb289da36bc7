//! JSON records for neurons, networks and solutions.
//!
//! Rationals are written as strings (`"3"`, `"-2/5"`); on input, decimal
//! strings and plain JSON numbers are also accepted and parsed exactly.
//!
//! ```json
//! {"weights": ["1", "1", "-1"], "bias": "0"}
//! {"input_width": 3, "layers": [[{"weights": [1, 1, -1], "bias": 0}]]}
//! {"kind": "parity", "parameters": {"n": 3}, "v": ["1", "1", "-1", "1"], "mu": "0"}
//! ```

use serde_json::{json, Map, Value};

use crate::boolean_core::{Sign, SignVector};
use crate::error::{Error, Result};
use crate::network::LayeredNetwork;
use crate::neuron::{BinaryNeuron, Neuron};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::solutions::{Encoder, Solution};

fn parse_err(field: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{field}: {msg}"))
}

fn nested(field: &str, e: Error) -> Error {
    match e {
        Error::Parse(msg) => parse_err(field, msg),
        other => parse_err(field, other),
    }
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str, ctx: &str) -> Result<&'a Value> {
    obj.get(name).ok_or_else(|| parse_err(&join(ctx, name), "missing field"))
}

fn join(ctx: &str, name: &str) -> String {
    if ctx.is_empty() {
        name.to_string()
    } else {
        format!("{ctx}.{name}")
    }
}

fn object<'a>(v: &'a Value, ctx: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| parse_err(if ctx.is_empty() { "record" } else { ctx }, "expected an object"))
}

fn array<'a>(v: &'a Value, ctx: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(ctx, "expected a list"))
}

fn rational_value(v: &Value, ctx: &str) -> Result<Rational> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        _ => return Err(parse_err(ctx, "expected a rational string or number")),
    };
    parse_rational(&text).map_err(|e| nested(ctx, e))
}

fn rationals(v: &Value, ctx: &str) -> Result<Vec<Rational>> {
    array(v, ctx)?.iter().enumerate().map(|(i, x)| rational_value(x, &format!("{ctx}[{i}]"))).collect()
}

fn count(v: &Value, ctx: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| parse_err(ctx, "expected a nonnegative integer"))
}

fn rational_strings(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(format_rational(x))).collect())
}

pub fn neuron_to_value(nr: &Neuron) -> Value {
    json!({ "weights": rational_strings(nr.weights()), "bias": format_rational(nr.bias()) })
}

fn neuron_from(v: &Value, ctx: &str) -> Result<Neuron> {
    let obj = object(v, ctx)?;
    let weights = rationals(field(obj, "weights", ctx)?, &join(ctx, "weights"))?;
    let bias = rational_value(field(obj, "bias", ctx)?, &join(ctx, "bias"))?;
    Neuron::new(weights, bias).map_err(|e| parse_err(if ctx.is_empty() { "neuron" } else { ctx }, e))
}

pub fn neuron_from_value(v: &Value) -> Result<Neuron> {
    neuron_from(v, "")
}

pub fn network_to_value(net: &LayeredNetwork) -> Value {
    let layers = net
        .layers()
        .iter()
        .map(|layer| Value::Array(layer.iter().map(|bn| neuron_to_value(&bn.to_neuron())).collect()))
        .collect();
    json!({ "input_width": net.input_width(), "layers": Value::Array(layers) })
}

/// Parses a network; every neuron must have ±1 weights and a canonical bias.
pub fn network_from_value(v: &Value) -> Result<LayeredNetwork> {
    let obj = object(v, "")?;
    let input_width = count(field(obj, "input_width", "")?, "input_width")?;
    let layers = array(field(obj, "layers", "")?, "layers")?
        .iter()
        .enumerate()
        .map(|(i, layer)| {
            array(layer, &format!("layers[{i}]"))?
                .iter()
                .enumerate()
                .map(|(j, nv)| {
                    let ctx = format!("layers[{i}][{j}]");
                    let nr = neuron_from(nv, &ctx)?;
                    binary_neuron(&nr).map_err(|e| Error::Domain(format!("{ctx}: {e}")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    LayeredNetwork::new(input_width, layers)
}

fn binary_neuron(nr: &Neuron) -> Result<BinaryNeuron> {
    if !nr.is_binary() {
        return Err(Error::Domain("network neurons need ±1 weights".into()));
    }
    let theta = nr
        .bias()
        .is_integer()
        .then(|| num_traits::ToPrimitive::to_i64(&nr.bias().to_integer()))
        .flatten()
        .ok_or_else(|| Error::Domain("network neurons need a canonical integer bias".into()))?;
    let signs: Vec<Sign> = nr.weights().iter().map(Sign::of).collect();
    BinaryNeuron::new(SignVector::from_signs(&signs)?, theta)
}

fn encoder_to_parts(e: &Encoder) -> (&'static str, Value) {
    let params = match e {
        Encoder::Identity { n } | Encoder::Parity { n } | Encoder::PuncturedHadamard { n } => json!({ "n": n }),
        Encoder::Constant { target, m } => json!({ "m": m, "target": neuron_to_value(target) }),
        Encoder::Replication { inner, copies } => {
            let (kind, parameters) = encoder_to_parts(inner);
            json!({ "copies": copies, "inner": { "kind": kind, "parameters": parameters } })
        }
        Encoder::GeneralizedParity { weights } => json!({ "weights": weights }),
    };
    (e.kind_name(), params)
}

fn encoder_from_parts(kind: &Value, params: &Value, ctx: &str) -> Result<Encoder> {
    let kind_ctx = join(ctx, "kind");
    let kind = kind.as_str().ok_or_else(|| parse_err(&kind_ctx, "expected a string"))?;
    let pctx = join(ctx, "parameters");
    let obj = object(params, &pctx)?;
    let get_count = |name: &str| count(field(obj, name, &pctx)?, &join(&pctx, name));
    Ok(match kind {
        "identity" => Encoder::Identity { n: get_count("n")? },
        "parity" => Encoder::Parity { n: get_count("n")? },
        "fourier" => Encoder::PuncturedHadamard { n: get_count("n")? },
        "constant" => Encoder::Constant {
            m: get_count("m")?,
            target: neuron_from(field(obj, "target", &pctx)?, &join(&pctx, "target"))?,
        },
        "replication" => {
            let ictx = join(&pctx, "inner");
            let inner = object(field(obj, "inner", &pctx)?, &ictx)?;
            Encoder::Replication {
                copies: get_count("copies")?,
                inner: Box::new(encoder_from_parts(
                    field(inner, "kind", &ictx)?,
                    field(inner, "parameters", &ictx)?,
                    &ictx,
                )?),
            }
        }
        "gen-parity" => {
            let wctx = join(&pctx, "weights");
            let weights = array(field(obj, "weights", &pctx)?, &wctx)?
                .iter()
                .enumerate()
                .map(|(i, w)| w.as_i64().ok_or_else(|| parse_err(&format!("{wctx}[{i}]"), "expected an integer")))
                .collect::<Result<_>>()?;
            Encoder::GeneralizedParity { weights }
        }
        other => return Err(parse_err(&kind_ctx, format!("unknown solution kind {other:?}"))),
    })
}

pub fn solution_to_value(sol: &Solution) -> Value {
    let (kind, parameters) = encoder_to_parts(sol.encoder());
    json!({ "kind": kind, "parameters": parameters, "v": rational_strings(sol.v()), "mu": format_rational(sol.mu()) })
}

pub fn solution_from_value(v: &Value) -> Result<Solution> {
    let obj = object(v, "")?;
    let encoder = encoder_from_parts(field(obj, "kind", "")?, field(obj, "parameters", "")?, "")?;
    let coded = rationals(field(obj, "v", "")?, "v")?;
    let mu = rational_value(field(obj, "mu", "")?, "mu")?;
    Solution::new(encoder, coded, mu).map_err(|e| parse_err("solution", e))
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

pub fn parse_neuron(text: &str) -> Result<Neuron> {
    neuron_from_value(&parse_json(text)?)
}

pub fn parse_network(text: &str) -> Result<LayeredNetwork> {
    network_from_value(&parse_json(text)?)
}

pub fn parse_solution(text: &str) -> Result<Solution> {
    solution_from_value(&parse_json(text)?)
}

pub fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values always serialize")
}
