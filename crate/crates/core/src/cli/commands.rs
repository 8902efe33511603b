use std::io::Write;

use serde_json::{json, Value};

use super::mapfile::{entry_json, parse_map};
use super::{JobConfig, EXIT_DISAGREE, EXIT_OK};
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, RingSpec};
use crate::manifolds::{bounds_check, compile, corank, eval_structural, parse_expr, realize, realize_dim3_mod2};
use crate::skewmap::{
    isotropy_index, map_bounds, rank_set_with_witnesses, Bounds, IsotropyReport, Method, RankSet, SkewBilinearMap,
    Subspace,
};

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("plain JSON") + "\n"
}

fn rank_set_json(s: &RankSet) -> Value {
    Value::from(s.values().to_vec())
}

fn bounds_json(b: &Bounds) -> Value {
    json!({ "exception": b.exception, "hi": b.hi, "lo": b.lo })
}

fn subspace_json(h: &Subspace) -> Value {
    let ring = h.ring();
    Value::Array(
        h.basis_vectors().iter().map(|r| Value::Array(r.iter().map(|a| entry_json(ring, a)).collect())).collect(),
    )
}

fn verdict_json(agree: Option<bool>) -> Value {
    match agree {
        Some(true) => json!("AGREE"),
        Some(false) => json!("DISAGREE"),
        None => Value::Null,
    }
}

fn verdict_text(agree: bool) -> &'static str {
    if agree {
        "AGREE"
    } else {
        "DISAGREE"
    }
}

fn line(s: &mut String, key: &str, value: impl std::fmt::Display) {
    s.push_str(&format!("{key:<11} {value}\n"));
}

/// Exact rank set by enumeration over finite fields, interval report
/// otherwise. Budget errors propagate.
fn oracle(phi: &SkewBilinearMap, config: &JobConfig) -> Result<IsotropyReport> {
    if phi.ring().is_finite() {
        let (set, witnesses) = rank_set_with_witnesses(phi, config.limits())?;
        let h = set.max();
        return Ok(IsotropyReport { h_lower: h, h_upper: h, rank_set: Some(set), witnesses, method: Method::BruteForce });
    }
    Ok(isotropy_index(phi, &config.isotropy_options()))
}

fn oracle_json(r: &IsotropyReport) -> Value {
    json!({
        "h_interval": [r.h_lower, r.h_upper],
        "method": r.method.tag(),
        "rank_set": r.rank_set.as_ref().map_or(Value::Null, rank_set_json),
    })
}

fn oracle_agrees(r: &IsotropyReport, set: &RankSet) -> bool {
    let h = set.max();
    r.h_lower <= h && h <= r.h_upper && r.rank_set.as_ref().is_none_or(|s| s == set)
}

fn oracle_text(r: &IsotropyReport) -> String {
    match &r.rank_set {
        Some(s) if r.is_exact() => format!("{s} via {}", r.method),
        _ => format!("h in [{}, {}] via {}", r.h_lower, r.h_upper, r.method),
    }
}

pub fn cmd_eval(config: &JobConfig, text: &str, out: &mut dyn Write) -> Result<i32> {
    let expr = parse_expr(text)?;
    let ring = config.ring_or_rationals();
    let ev = eval_structural(&expr, &ring)?;
    let bc = bounds_check(&expr, &ring)?;
    let report = if config.brute_check || config.witnesses {
        Some(oracle(&compile(&expr, &ring)?, config)?)
    } else {
        None
    };
    let agree = if config.brute_check { report.as_ref().map(|r| oracle_agrees(r, &ev.rank_set)) } else { None };

    if config.json {
        let mut v = json!({
            "b1": ev.b1,
            "bounds": bounds_json(&bc.bounds),
            "corank": ev.corank,
            "h": ev.h,
            "h_interval": [ev.h, ev.h],
            "oracle": if config.brute_check { report.as_ref().map_or(Value::Null, oracle_json) } else { Value::Null },
            "rank_set": rank_set_json(&ev.rank_set),
            "verdict": verdict_json(agree),
        });
        if let Some(r) = report.as_ref().filter(|_| config.witnesses) {
            v["witnesses"] = Value::Array(r.witnesses.iter().map(subspace_json).collect());
        }
        emit(out, &pretty(&v))?;
    } else {
        let mut s = String::new();
        line(&mut s, "expression", &expr);
        line(&mut s, "ring", &ring);
        line(&mut s, "b1", ev.b1);
        line(&mut s, "rank set", &ev.rank_set);
        line(&mut s, "h", ev.h);
        if let Some(c) = ev.corank {
            line(&mut s, "corank", c);
        }
        let b = &bc.bounds;
        let range = if b.exception { format!("h <= {} (exception: lower bound dropped)", b.hi) } else { format!("{} <= h <= {}", b.lo, b.hi) };
        line(
            &mut s,
            "bounds",
            format!("{range} [b2={}, k={}, surjective={}]: {}", bc.b2, bc.k, bc.surjective, if bc.pass { "pass" } else { "FAIL" }),
        );
        for e in &ev.exceptions_applied {
            line(&mut s, "exception", e);
        }
        if let (Some(r), Some(a)) = (&report, agree) {
            line(&mut s, "oracle", format!("{}: {}", oracle_text(r), verdict_text(a)));
        }
        if let Some(r) = report.as_ref().filter(|_| config.witnesses) {
            for w in &r.witnesses {
                line(&mut s, "witness", format!("rank {} {w}", w.dim()));
            }
        }
        emit(out, &s)?;
    }
    Ok(if agree == Some(false) { EXIT_DISAGREE } else { EXIT_OK })
}

fn convert_map(phi: &SkewBilinearMap, target: &RingSpec) -> Result<SkewBilinearMap> {
    if phi.ring() == target {
        return Ok(phi.clone());
    }
    let from = phi.ring();
    let gram = phi
        .gram()
        .iter()
        .map(|g| {
            let rows = g.row_vecs().iter().map(|r| r.iter().map(|a| target.convert(a, from)).collect()).collect::<Result<_>>()?;
            Matrix::from_rows(target, phi.dim_l(), rows)
        })
        .collect::<Result<_>>()?;
    SkewBilinearMap::new(target, phi.dim_l(), gram)
}

pub fn cmd_map(config: &JobConfig, text: &str, out: &mut dyn Write) -> Result<i32> {
    let mut phi = parse_map(text)?;
    if let Some(r) = &config.ring {
        phi = convert_map(&phi, r)?;
    }
    let report = oracle(&phi, config)?;
    let b = map_bounds(&phi);
    let k = phi.kernel().dim();
    // enumeration checked against the bounds it must satisfy
    let agree = (config.brute_check && phi.ring().is_finite()).then(|| {
        let h = report.h_lower;
        h <= b.hi && (phi.ring().characteristic() == 2 || b.lo <= h)
    });

    if config.json {
        let mut v = json!({
            "bounds": bounds_json(&b),
            "dim_l": phi.dim_l(),
            "dim_v": phi.dim_v(),
            "h": report.h(),
            "h_interval": [report.h_lower, report.h_upper],
            "kernel_dim": k,
            "method": report.method.tag(),
            "rank_set": report.rank_set.as_ref().map_or(Value::Null, rank_set_json),
            "ring": phi.ring().to_string(),
            "verdict": verdict_json(agree),
        });
        if config.witnesses {
            v["witnesses"] = Value::Array(report.witnesses.iter().map(subspace_json).collect());
        }
        emit(out, &pretty(&v))?;
    } else {
        let mut s = String::new();
        line(&mut s, "ring", phi.ring());
        line(&mut s, "n, m", format!("{}, {}", phi.dim_l(), phi.dim_v()));
        line(&mut s, "kernel", k);
        line(&mut s, "method", report.method);
        match (&report.rank_set, report.h()) {
            (Some(set), _) => line(&mut s, "rank set", set),
            (None, _) => line(&mut s, "rank set", "unknown"),
        }
        match report.h() {
            Some(h) => line(&mut s, "h", h),
            None => line(&mut s, "h", format!("in [{}, {}]", report.h_lower, report.h_upper)),
        }
        let range = if b.exception { format!("h <= {} (exception)", b.hi) } else { format!("{} <= h <= {}", b.lo, b.hi) };
        line(&mut s, "bounds", range);
        if let Some(a) = agree {
            line(&mut s, "verdict", verdict_text(a));
        }
        if config.witnesses {
            for w in &report.witnesses {
                line(&mut s, "witness", format!("rank {} {w}", w.dim()));
            }
        }
        emit(out, &s)?;
    }
    Ok(if agree == Some(false) { EXIT_DISAGREE } else { EXIT_OK })
}

pub fn cmd_realize(config: &JobConfig, h: u64, b: u64, out: &mut dyn Write) -> Result<i32> {
    let gf2 = RingSpec::prime_field(2).expect("2 is prime");
    let requested = config.ring_or_rationals();
    let (expr, char2_only, ring) = if config.dim3_mod2 {
        let ring = if requested.characteristic() == 2 { requested } else { gf2 };
        (realize_dim3_mod2(h, b)?, true, ring)
    } else {
        let r = realize(h, b)?;
        let ring = if r.char2_only && requested.characteristic() != 2 { gf2 } else { requested };
        (r.expr, r.char2_only, ring)
    };
    let ev = eval_structural(&expr, &ring)?;
    let verified = ev.h == h && ev.b1 == b;
    let report = if config.brute_check { Some(oracle(&compile(&expr, &ring)?, config)?) } else { None };
    let agree = report.as_ref().map(|r| oracle_agrees(r, &ev.rank_set));

    if config.json {
        let v = json!({
            "b1": ev.b1,
            "char2_only": char2_only,
            "corank": corank(&expr),
            "expr": expr.to_string(),
            "h": ev.h,
            "oracle": report.as_ref().map_or(Value::Null, oracle_json),
            "rank_set": rank_set_json(&ev.rank_set),
            "ring": ring.to_string(),
            "verdict": verdict_json(agree),
            "verified": verified,
        });
        emit(out, &pretty(&v))?;
    } else {
        let mut s = format!("{expr}\n");
        let status = if verified { "verified" } else { "MISMATCH" };
        line(&mut s, status, format!("h={} b1={} over {ring} (rank set {}, corank {})", ev.h, ev.b1, ev.rank_set, corank(&expr)));
        if char2_only {
            line(&mut s, "note", "holds in characteristic 2 only");
        }
        if let (Some(r), Some(a)) = (&report, agree) {
            line(&mut s, "oracle", format!("{}: {}", oracle_text(r), verdict_text(a)));
        }
        emit(out, &s)?;
    }
    Ok(if verified && agree != Some(false) { EXIT_OK } else { EXIT_DISAGREE })
}
