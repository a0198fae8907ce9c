//! Rendering of engine results: a JSON value for structured mode plus a
//! plain-text block. JSON maps are sorted-key, so serialization is
//! deterministic.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use theta_core::branching::TauClassification;
use theta_core::characters::InfCharTransfer;
use theta_core::verify::CheckResult;
use theta_core::{
    DecompositionList, FormalCharacter, IrrepLabel, PairingReport, PiTable, RootSystem, Systems,
    TauLabel, ThetaKTypeLift, ThetaSo2Lift, ThetaSupport, Weight,
};

/// A rendered result: structured value plus human-readable text.
pub struct Rendered {
    pub value: Value,
    pub text: String,
}

fn big(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn weight_str(w: &Weight) -> Value {
    json!(w.to_string())
}

fn rep_value(systems: &Systems, rep: &IrrepLabel) -> Value {
    let dim = theta_core::weyl_dim(systems.get(rep.system), rep).ok();
    let mut v = json!({
        "system": rep.system.to_string(),
        "highest_weight": rep.highest_weight.to_string(),
    });
    if let Some(d) = dim {
        v["dim"] = big(&d);
    }
    v
}

fn tau_value(tau: &TauLabel, mult: u64) -> Value {
    json!({"m": tau.m, "n": tau.n, "mult": mult})
}

pub fn render_dim(rep: &IrrepLabel, dim: &BigUint) -> Rendered {
    Rendered {
        value: json!({"dim": big(dim)}),
        text: format!("dim {} = {}", rep, dim),
    }
}

pub fn render_weights(sys: &RootSystem, rep: &IrrepLabel, chr: &FormalCharacter) -> Rendered {
    let mut rows = Vec::new();
    let mut text = format!("weights of {} (dim {}):\n", rep, chr.dim(sys));
    for (w, &m) in chr.dominant_mults().iter().rev() {
        let orbit = sys.orbit_size(w);
        rows.push(json!({
            "weight": w.to_string(),
            "mult": m,
            "orbit": orbit,
        }));
        text.push_str(&format!("  [{}] mult {} orbit {}\n", w, m, orbit));
    }
    text.push_str("(dominant weights; the full multiset is their Weyl orbits)");
    Rendered {
        value: json!({
            "dim": big(&chr.dim(sys)),
            "dominant_weights": rows,
        }),
        text,
    }
}

pub fn render_decomposition(systems: &Systems, dec: &DecompositionList) -> (Value, String) {
    let entries: Vec<Value> = dec
        .entries
        .iter()
        .map(|(label, m)| {
            let mut v = rep_value(systems, label);
            v["mult"] = json!(m);
            v
        })
        .collect();
    let total = dec.total_dim(systems).expect("valid entries");
    let value = json!({
        "entries": entries,
        "total_dim": big(&total),
    });
    (value, format!("{dec}  (total dim {total})"))
}

pub fn render_tensor(
    systems: &Systems,
    a: &IrrepLabel,
    b: &IrrepLabel,
    dec: &DecompositionList,
) -> Rendered {
    let (value, text) = render_decomposition(systems, dec);
    Rendered {
        value,
        text: format!("{a} (x) {b} = {text}"),
    }
}

pub fn render_branch(
    systems: &Systems,
    rep: &IrrepLabel,
    embedding: &str,
    dec: &DecompositionList,
    tc: &TauClassification,
) -> Rendered {
    let (dec_value, dec_text) = render_decomposition(systems, dec);
    let classified: Vec<Value> = tc.classified.iter().map(|(t, m)| tau_value(t, *m)).collect();
    let failures: Vec<Value> = tc
        .failures
        .iter()
        .map(|(l, m)| json!({"highest_weight": l.highest_weight.to_string(), "mult": m}))
        .collect();
    let text = format!(
        "{rep} restricted along {embedding}:\n  {dec_text}\n  as tau types: {tc}{}",
        if tc.is_total() { "" } else { "  [non-tau constituents!]" }
    );
    Rendered {
        value: json!({
            "decomposition": dec_value,
            "tau_classification": {
                "classified": classified,
                "failures": failures,
                "total": tc.is_total(),
            },
        }),
        text,
    }
}

pub fn render_infchar(rep: &IrrepLabel, ic: &Weight) -> Rendered {
    Rendered {
        value: json!({"infinitesimal_character": ic.to_string()}),
        text: format!("infinitesimal character of {} = {}", rep, ic),
    }
}

pub fn render_infchar_transfer(x: &theta_core::Rat, t: &InfCharTransfer) -> Rendered {
    let mut text = format!("sl2 parameter {x} -> F4 infinitesimal character {}", t.raw);
    if t.raw != t.dominant {
        text.push_str(&format!("  (dominant representative {})", t.dominant));
    }
    if t.singular {
        text.push_str("  [singular: on a chamber wall]");
    }
    if t.nonpositive_warning {
        text.push_str("  [warning: nonpositive parameter, reported unnormalized]");
    }
    Rendered {
        value: json!({
            "raw": weight_str(&t.raw),
            "dominant": weight_str(&t.dominant),
            "singular": t.singular,
            "nonpositive_warning": t.nonpositive_warning,
        }),
        text,
    }
}

pub fn render_lift_ktype(lift: &ThetaKTypeLift) -> Rendered {
    Rendered {
        value: json!({
            "m": lift.m,
            "n": lift.n,
            "generator_so2_weight": lift.generator_so2_weight,
            "pair": {
                "lowest": lift.sl2sl2_pair.lowest,
                "highest": lift.sl2sl2_pair.highest,
            },
        }),
        text: format!(
            "lift of tau({},{}) = delta({}) (x) delta-bar({}), generator SO(2)-weight {}",
            lift.m,
            lift.n,
            lift.sl2sl2_pair.lowest,
            -lift.sl2sl2_pair.highest,
            lift.generator_so2_weight
        ),
    }
}

pub fn render_lift_so2(k: i64, lift: &ThetaSo2Lift) -> Rendered {
    let bound: Vec<String> = lift.ktype_bound.iter().map(|t| t.to_string()).collect();
    let mut text = format!(
        "lift of SO(2)-type ({k}): m = {}, K-type bound {}",
        lift.m,
        bound.join(" + ")
    );
    if lift.m > 0 {
        text.push_str(&format!(
            "  (recomputed from branching {} to B4)",
            lift.d5_label
        ));
    }
    if lift.out_of_theorem_scope {
        text.push_str(
            "  [m < 0: below-range type; bound is the trivial K-type, vanishing \
             is out of theorem scope]",
        );
    }
    Rendered {
        value: json!({
            "k": k,
            "m": lift.m,
            "ktype_bound": bound,
            "d5_label": {
                "system": lift.d5_label.system.to_string(),
                "highest_weight": lift.d5_label.highest_weight.to_string(),
            },
            "out_of_theorem_scope": lift.out_of_theorem_scope,
        }),
        text,
    }
}

pub fn render_theta_support(sigma: &theta_core::So2Support, support: &ThetaSupport) -> Rendered {
    let minimal = support.minimal_m();
    Rendered {
        value: json!({
            "sigma": sigma.to_string(),
            "rule": support.describe(),
            "vanishes": support.is_empty(),
            "minimal_m": minimal,
        }),
        text: format!("K-type support of the lift of {sigma}: {}", support.describe()),
    }
}

pub fn render_match(report: &PairingReport) -> Rendered {
    let mut text = format!("lowest-type matching for {}:\n", report.sigma);
    match report.minimal_m {
        Some(m) => {
            text.push_str(&format!(
                "  minimal m = {m}, lowest K-type {}\n",
                report.lowest_ktype.expect("present with minimal_m")
            ));
            text.push_str(&format!(
                "  Hom chain dimensions {:?}; smaller-type dimensions {:?}\n",
                report.hom_chain_dims, report.smaller_type_dims
            ));
        }
        None => text.push_str("  lift is zero (no qualifying SO(2)-type)\n"),
    }
    text.push_str(&format!("  support rule: {}\n", report.ktype_support_rule));
    for reason in &report.reasons {
        text.push_str(&format!("  - {reason}\n"));
    }
    text.push_str(&format!("verdict: {}", report.verdict));
    Rendered {
        value: json!({
            "sigma": report.sigma.to_string(),
            "minimal_m": report.minimal_m,
            "lowest_ktype": report.lowest_ktype.map(|t| t.to_string()),
            "hom_chain_dims": report.hom_chain_dims,
            "smaller_type_dims": report.smaller_type_dims,
            "ktype_support_rule": report.ktype_support_rule,
            "verdict": report.verdict.to_string(),
            "reasons": report.reasons,
        }),
        text,
    }
}

pub fn render_pi_table(table: &PiTable) -> Rendered {
    let mut rows = Vec::new();
    let mut text = String::from(
        "n | sl2 factor | parameter | dim | infinitesimal character | K-types\n",
    );
    for row in &table.rows {
        rows.push(json!({
            "n": row.n,
            "delta_lowest_weight": row.delta_lowest_weight,
            "hc_param": row.hc_param.to_string(),
            "dim": big(&row.dim),
            "infchar": row.infchar.to_string(),
            "tau_list": row.tau_list.iter().map(|(t, m)| tau_value(t, *m)).collect::<Vec<_>>(),
            "tau_closure_ok": row.tau_closure_ok,
        }));
        text.push_str(&format!(
            "{} | delta({}) | {} | {} | ({}) | {}{}\n",
            row.n,
            row.delta_lowest_weight,
            row.hc_param,
            row.dim,
            row.infchar,
            row.tau_list_description(),
            if row.tau_closure_ok { "" } else { "  [closure FAILED]" }
        ));
    }
    Rendered {
        value: json!({"rows": rows}),
        text,
    }
}

pub fn render_sl2_rank(n: i64, m: i64, degree: usize, depth: usize, rank: usize) -> Rendered {
    let free_count = (degree + 1) * (degree + 2) / 2;
    Rendered {
        value: json!({
            "n": n,
            "m": m,
            "degree": degree,
            "depth": depth,
            "rank": rank,
            "free_module_count": free_count,
            "matches_free_count": rank == free_count,
        }),
        text: format!(
            "filtration rank of delta({n}) (x) delta-bar({m}) at degree {degree} \
             (depth {depth}): {rank}; free-module count {free_count} -> {}",
            if rank == free_count { "match" } else { "MISMATCH" }
        ),
    }
}

pub fn render_verify(profile: theta_core::Profile, checks: &[(CheckResult, u128)]) -> Rendered {
    let all_passed = checks.iter().all(|(c, _)| c.passed);
    let mut rows = Vec::new();
    let mut text = format!("verification profile: {profile}\n");
    for (check, elapsed_ms) in checks {
        rows.push(json!({
            "id": check.id,
            "description": check.description,
            "passed": check.passed,
            "details": check.details,
            "elapsed_ms": *elapsed_ms as u64,
        }));
        text.push_str(&format!(
            "  [{}] {} ({} ms): {}\n",
            if check.passed { "pass" } else { "FAIL" },
            check.id,
            elapsed_ms,
            check.description
        ));
        if !check.passed {
            for d in &check.details {
                text.push_str(&format!("      {d}\n"));
            }
        }
    }
    text.push_str(if all_passed {
        "all checks passed"
    } else {
        "SOME CHECKS FAILED"
    });
    Rendered {
        value: json!({
            "profile": profile.to_string(),
            "checks": rows,
            "all_passed": all_passed,
        }),
        text,
    }
}

