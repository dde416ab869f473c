//! Browser bindings for the entropy metrics: three interactive operations
//! behind a single static page.
//!
//! Every export returns a JSON string the page parses and draws onto
//! canvases; errors surface as JavaScript exceptions carrying the library's
//! error message. The `*_impl` functions hold the logic and stay free of
//! JavaScript types so they can be tested natively.

use wasm_bindgen::prelude::*;

use pegs_core::{
    csv, henon_sweep, lorenz, mmspe, mpe_graph, permutation_entropy, EntropyParams, Graph,
    HenonSweepConfig, LorenzParams,
};

/// Append a finite float as a JSON number (f64 Display is valid JSON).
fn push_num(out: &mut String, v: f64) {
    out.push_str(&v.to_string());
}

/// Sweep the Henon map parameter `a`, scoring each grid point with the
/// product-graph metric, the per-channel metric, and the pooled marginal
/// metric.
///
/// Returns `[{ "a": .., "mpeg": .., "pe_x": .., "mmspe": .. }, ..]` with
/// nulls for diverged grid points.
#[wasm_bindgen]
pub fn henon_sweep_json(
    a_min: f64,
    a_max: f64,
    points: u32,
    m: u32,
    delay: u32,
) -> Result<String, JsValue> {
    henon_sweep_impl(a_min, a_max, points, m, delay).map_err(|e| JsValue::from_str(&e))
}

fn henon_sweep_impl(
    a_min: f64,
    a_max: f64,
    points: u32,
    m: u32,
    delay: u32,
) -> Result<String, String> {
    if points == 0 || points > 20_000 {
        return Err("points must be in 1..=20000".to_string());
    }
    let params = EntropyParams::new(m as usize, delay as usize).map_err(|e| e.to_string())?;
    let step = if points > 1 && a_max > a_min {
        (a_max - a_min) / (points - 1) as f64
    } else {
        1.0
    };
    let config = HenonSweepConfig {
        a_min,
        a_max,
        step,
        params,
        ..HenonSweepConfig::standard()
    };
    let sweep = henon_sweep(&config).map_err(|e| e.to_string())?;

    let mut out = String::from("[");
    for (i, point) in sweep.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str("{\"a\":");
        push_num(&mut out, point.a);
        match point.metrics {
            Some(metrics) => {
                out.push_str(",\"mpeg\":");
                push_num(&mut out, metrics.mpe_graph);
                out.push_str(",\"pe_x\":");
                push_num(&mut out, metrics.pe_x);
                out.push_str(",\"mmspe\":");
                push_num(&mut out, metrics.mmspe);
            }
            None => out.push_str(",\"mpeg\":null,\"pe_x\":null,\"mmspe\":null"),
        }
        out.push('}');
    }
    out.push(']');
    Ok(out)
}

/// Integrate the Lorenz system and score the resulting three-channel
/// signal over the complete interaction graph at embedding dimensions 3
/// through 7.
///
/// Returns `{ "x": [..], "z": [..], "entropies": [{ "m": .., "value": .. },
/// ..] }` where `x`/`z` are the trajectory projection (thinned for
/// drawing when long).
#[wasm_bindgen]
pub fn lorenz_mpe_json(rho: f64, seconds: f64, dt: f64) -> Result<String, JsValue> {
    lorenz_mpe_impl(rho, seconds, dt).map_err(|e| JsValue::from_str(&e))
}

fn lorenz_mpe_impl(rho: f64, seconds: f64, dt: f64) -> Result<String, String> {
    if !(seconds.is_finite() && seconds > 0.0 && seconds <= 200.0) {
        return Err("seconds must be in (0, 200]".to_string());
    }
    if !(dt.is_finite() && (1e-4..=0.5).contains(&dt)) {
        return Err("dt must be in [0.0001, 0.5]".to_string());
    }
    let steps = (seconds / dt).round() as usize + 1;
    if steps > 200_000 {
        return Err(format!(
            "seconds/dt gives {steps} samples; keep it at or below 200000"
        ));
    }
    let u = lorenz(&LorenzParams {
        rho,
        dt,
        steps,
        transient: 0,
        init: [-8.0, 9.0, 25.0],
        ..LorenzParams::default()
    })
    .map_err(|e| e.to_string())?;

    let interaction = Graph::complete(3).map_err(|e| e.to_string())?;
    let mut out = String::from("{\"x\":[");
    let n = u.num_samples();
    let stride = (n / 4000).max(1);
    for (count, t) in (0..n).step_by(stride).enumerate() {
        if count > 0 {
            out.push(',');
        }
        push_num(&mut out, u.sample(t, 0));
    }
    out.push_str("],\"z\":[");
    for (count, t) in (0..n).step_by(stride).enumerate() {
        if count > 0 {
            out.push(',');
        }
        push_num(&mut out, u.sample(t, 2));
    }
    out.push_str("],\"entropies\":[");
    for (i, m) in (3..=7).enumerate() {
        let params = EntropyParams::new(m, 1).map_err(|e| e.to_string())?;
        let value = mpe_graph(&u, &interaction, params).map_err(|e| e.to_string())?;
        if i > 0 {
            out.push(',');
        }
        out.push_str("{\"m\":");
        out.push_str(&m.to_string());
        out.push_str(",\"value\":");
        push_num(&mut out, value);
        out.push('}');
    }
    out.push_str("]}");
    Ok(out)
}

/// Score a pasted CSV signal: classical entropy per channel, the pooled
/// marginal metric, and the product-graph metric over an optional pasted
/// interaction matrix (complete graph when blank).
///
/// Returns `{ "channels": .., "samples": .., "graph": "..", "pe": [..],
/// "mmspe": .., "mpeg": .. }`.
#[wasm_bindgen]
pub fn compute_metrics_json(
    signal_csv: &str,
    graph_csv: &str,
    m: u32,
    delay: u32,
) -> Result<String, JsValue> {
    compute_metrics_impl(signal_csv, graph_csv, m, delay).map_err(|e| JsValue::from_str(&e))
}

fn compute_metrics_impl(
    signal_csv: &str,
    graph_csv: &str,
    m: u32,
    delay: u32,
) -> Result<String, String> {
    let params = EntropyParams::new(m as usize, delay as usize).map_err(|e| e.to_string())?;
    let u = csv::parse_signal_csv(signal_csv).map_err(|e| e.to_string())?;
    let p = u.num_channels();
    let (interaction, graph_label) = if graph_csv.trim().is_empty() {
        (
            Graph::complete(p).map_err(|e| e.to_string())?,
            format!("complete:{p}"),
        )
    } else {
        let g = csv::parse_adjacency_csv(graph_csv).map_err(|e| e.to_string())?;
        if g.num_vertices() != p {
            return Err(format!(
                "interaction matrix is {0}x{0} but the signal has {1} channels",
                g.num_vertices(),
                p
            ));
        }
        (g, "custom".to_string())
    };

    let mut out = String::from("{\"channels\":");
    out.push_str(&p.to_string());
    out.push_str(",\"samples\":");
    out.push_str(&u.num_samples().to_string());
    out.push_str(",\"graph\":\"");
    out.push_str(&graph_label);
    out.push_str("\",\"pe\":[");
    for s in 0..p {
        if s > 0 {
            out.push(',');
        }
        let value = permutation_entropy(u.channel(s), params).map_err(|e| e.to_string())?;
        push_num(&mut out, value);
    }
    out.push_str("],\"mmspe\":");
    push_num(&mut out, mmspe(&u, params).map_err(|e| e.to_string())?);
    out.push_str(",\"mpeg\":");
    push_num(
        &mut out,
        mpe_graph(&u, &interaction, params).map_err(|e| e.to_string())?,
    );
    out.push('}');
    Ok(out)
}
