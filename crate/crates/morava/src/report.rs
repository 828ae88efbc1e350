//! JSON renderings of core results.

use serde_json::{json, Value};

use morava_core::cp_module::{cohomology_dims, decompose, is_permutation_module, CpModule};
use morava_core::group::{
    abelian_invariants, center, conjugacy_classes, derived_subgroup, ChiStrategy, Fingerprint, Group, GroupConfig,
    GroupError,
};
use morava_core::poly::{GroebnerBasis, GroebnerConfig, GroebnerStats, Homogeneity, MonomialOrder, QuotientDimension};
use morava_core::verifier::{FamilyClassification, VerificationReport, VerifyOptions};

/// Top-level report. Keys are sorted, so identical inputs give identical
/// bytes once `timings` is dropped.
pub fn envelope(command: &str, config: Value, result: Value, verified: bool, total_ms: Option<f64>) -> Value {
    let mut out = json!({
        "tool": { "name": env!("CARGO_PKG_NAME"), "version": env!("CARGO_PKG_VERSION") },
        "command": command,
        "config": config,
        "result": result,
        "verdict": if verified { "ok" } else { "mismatch" },
    });
    if let Some(ms) = total_ms {
        out["timings"] = json!({ "total_ms": ms });
    }
    out
}

pub fn order_name(order: MonomialOrder) -> &'static str {
    match order {
        MonomialOrder::Grevlex => "grevlex",
        MonomialOrder::Lex => "lex",
    }
}

pub fn dimension(d: QuotientDimension) -> Value {
    match d {
        QuotientDimension::Finite(n) => json!(n),
        QuotientDimension::Infinite => json!("infinite"),
    }
}

pub fn homogeneity(h: &Homogeneity) -> Value {
    match h {
        Homogeneity::Zero => json!({ "homogeneous": true, "zero": true }),
        Homogeneity::Homogeneous(d) => json!({ "homogeneous": true, "degree": d }),
        Homogeneity::Mixed(ds) => json!({ "homogeneous": false, "degrees": ds }),
    }
}

pub fn strategy(s: ChiStrategy) -> &'static str {
    match s {
        ChiStrategy::Naive => "naive",
        ChiStrategy::Chained => "chained",
    }
}

pub fn stats(s: &GroebnerStats) -> Value {
    json!({
        "pairs_considered": s.pairs_considered,
        "pairs_reduced": s.pairs_reduced,
        "zero_reductions": s.zero_reductions,
        "reduction_steps": s.reduction_steps,
    })
}

pub fn groebner_config(c: &GroebnerConfig) -> Value {
    json!({ "max_reduction_steps": c.max_reduction_steps, "max_basis_size": c.max_basis_size })
}

pub fn group_config(c: &GroupConfig) -> Value {
    json!({
        "max_order": c.max_order,
        "iso_max_order": c.iso_max_order,
        "exhaustive_check_limit": c.exhaustive_check_limit,
        "random_associativity_triples": c.random_associativity_triples,
        "tuple_budget": c.tuple_budget,
    })
}

pub fn verify_options(o: &VerifyOptions) -> Value {
    json!({
        "order": order_name(o.order),
        "exclude": o.exclude,
        "groebner": groebner_config(&o.groebner),
        "group": group_config(&o.group),
        "max_iter": o.max_iter,
        "reducers": o.reducers,
    })
}

pub fn fingerprint(f: &Fingerprint) -> Value {
    json!({
        "order": f.order,
        "exponent": f.exponent,
        "abelianization": f.abelianization,
        "center": f.center,
        "central_quotient_order": f.central_quotient_order,
        "central_quotient": f.central_quotient,
        "central_quotient_abelianization": f.central_quotient_abelianization,
        "class_sizes": f.class_sizes,
        "order_histogram": f.order_histogram,
        "squares": f.squares,
    })
}

pub fn group_info(g: &Group, config: &GroupConfig) -> Result<Value, GroupError> {
    let classes = conjugacy_classes(g);
    let gens: Vec<Value> = g
        .generator_names()
        .iter()
        .zip(g.generators())
        .map(|(n, &x)| json!({ "name": n, "order": g.element_order(x) }))
        .collect();
    Ok(json!({
        "order": g.order(),
        "generators": gens,
        "abelian": g.is_abelian(),
        "exponent": g.exponent(),
        "conjugacy_classes": classes.len(),
        "class_representatives": classes.iter().map(|c| g.element_word(c[0])).collect::<Vec<_>>(),
        "center_order": center(g).order(),
        "derived_subgroup_order": derived_subgroup(g).order(),
        "abelianization": abelian_invariants(g, config)?,
        "fingerprint": fingerprint(&morava_core::group::fingerprint(g)),
    }))
}

pub fn groebner(gb: &GroebnerBasis, stats_: &GroebnerStats, listing_limit: usize) -> Value {
    let ring = gb.ring();
    let dim = gb.quotient_dimension();
    let standard = match dim {
        QuotientDimension::Finite(n) if n as usize <= listing_limit => gb
            .standard_monomials(listing_limit)
            .map(|ms| ms.iter().map(|m| ring.fmt_monomial(m)).collect::<Vec<_>>()),
        _ => None,
    };
    json!({
        "variables": ring.variables().iter().map(|v| json!({ "name": v.name, "degree": v.degree })).collect::<Vec<_>>(),
        "basis": gb.generators().iter().map(|f| ring.to_string(f)).collect::<Vec<_>>(),
        "basis_size": gb.len(),
        "quotient_dimension": dimension(dim),
        "standard_monomials": standard,
        "audit": match gb.audit() {
            Ok(()) => "passed".to_string(),
            Err(e) => e.to_string(),
        },
        "stats": stats(stats_),
    })
}

pub fn verification(r: &VerificationReport) -> Value {
    json!({
        "presentation": r.presentation,
        "p": r.p,
        "s": r.s,
        "order": order_name(r.order),
        "excluded_relations": r.excluded_relations,
        "fixed_points": r.fixed_points.iter().map(|f| json!({
            "var": f.var,
            "value": f.value,
            "value_at_v1": f.value_at_v1,
            "iterations": f.iterations,
            "residual": f.residual,
            "residual_is_zero": f.residual_is_zero,
        })).collect::<Vec<_>>(),
        "homogeneity": r.homogeneity.iter().map(|h| {
            let mut v = homogeneity(&h.homogeneity);
            v["label"] = json!(h.label);
            v
        }).collect::<Vec<_>>(),
        "all_homogeneous": r.all_homogeneous,
        "ideal_generators": r.ideal_generators,
        "basis_size": r.basis_size,
        "groebner_stats": stats(&r.groebner_stats),
        "basis_audit_passed": r.basis_audit_passed,
        "quotient_dimension": dimension(r.quotient_dimension),
        "chi": r.chi,
        "chi_strategy": r.chi_strategy.map(strategy),
        "matched": r.matched,
        "standard_monomials": r.standard_monomials,
        "unbounded_variables": r.unbounded_variables,
        "extra_relations": r.extra_relations.iter().map(|e| json!({
            "relation": e.relation,
            "normal_form": e.normal_form,
            "in_ideal": e.in_ideal,
        })).collect::<Vec<_>>(),
    })
}

/// Everything a verification run has to get right for exit code 0.
pub fn verification_passed(r: &VerificationReport) -> bool {
    r.matched
        && r.all_homogeneous
        && r.basis_audit_passed
        && r.all_extra_relations_hold()
        && r.fixed_points.iter().all(|f| f.residual_is_zero)
}

pub fn family(c: &FamilyClassification) -> Value {
    json!({
        "n": c.n,
        "order": c.order,
        "actions_considered": c.actions_considered,
        "class_count": c.classes.len(),
        "classes": c.classes.iter().map(|k| json!({
            "representative": k.representative,
            "members": k.members,
            "fingerprint": fingerprint(&k.fingerprint),
        })).collect::<Vec<_>>(),
    })
}

pub fn module(m: &CpModule, max_degree: usize) -> Value {
    let d = decompose(m);
    let blocks: Vec<Value> = (1..=m.p() as usize)
        .filter(|&k| d.count(k) > 0)
        .map(|k| json!({ "size": k, "count": d.count(k) }))
        .collect();
    json!({
        "p": m.p(),
        "dim": m.dim(),
        "blocks": blocks,
        "block_sizes": d.block_sizes(),
        "free_rank": d.free_rank(),
        "trivial_rank": d.trivial_rank(),
        "permutation_module": is_permutation_module(m),
        "cohomology_dims": cohomology_dims(m, max_degree),
    })
}
