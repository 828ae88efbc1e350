use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{GradedVariable, ImplicitDefinition, RingPresentation};
use crate::group::{g36_spec, GroupSource};

fn var(name: &str, degree: i64) -> GradedVariable {
    GradedVariable {
        name: name.to_string(),
        degree,
    }
}

/// `v*sum(i=1..s-1, w^(2^s-2^i)*z^(2^(i-1)))`
fn tail(w: &str, z: &str) -> String {
    format!("v*sum(i=1..s-1, {w}^(2^s-2^i)*{z}^(2^(i-1)))")
}

/// `w + z1 + v*sum(...)`
fn chern(w: &str, z1: &str, z2: &str) -> String {
    format!("{w} + {z1} + {}", tail(w, z2))
}

/// The presentation of K(s)^*(BG) for the order-32 group `G36` at p = 2.
///
/// Generators `a, b, c` have degree 2 and `x2, y2, T` degree 4; `x1, y1`
/// (degree 2) are defined implicitly and eliminated.
pub fn g36_presentation() -> RingPresentation {
    let cx = chern("c", "x1", "x2");
    let cy = chern("c", "y1", "y2");
    let ay = chern("a", "y1", "y2");
    let bx = chern("b", "x1", "x2");
    let relations = vec![
        "a^(2^s)".to_string(),
        "b^(2^s)".to_string(),
        "c^(2^s)".to_string(),
        format!("c*({cx})"),
        format!("c*({cy})"),
        format!("a*({ay})"),
        format!("b*({bx})"),
        format!("({cy})*({bx}) + v*b^(2^s-1)*T"),
        format!("({cx})*({ay}) + v*a^(2^s-1)*T"),
        format!("T^2 + T*x1*y1 + x2*y1*({cy}) + x1*y2*({cx})"),
        format!("T*({bx}) + v*b^(2^s-1)*x2*(c + y1)"),
        format!("T*({ay}) + v*a^(2^s-1)*y2*(c + x1)"),
        "c*T".to_string(),
        "v^2*x2^(2^s) + c^2 + b*c".to_string(),
        "v^2*y2^(2^s) + a^2 + a*c".to_string(),
    ];
    RingPresentation {
        name: "g36".to_string(),
        p: 2,
        variables: vec![
            var("a", 2),
            var("b", 2),
            var("c", 2),
            var("x2", 4),
            var("y2", 4),
            var("T", 4),
            var("x1", 2),
            var("y1", 2),
        ],
        relations,
        implicit: vec![
            ImplicitDefinition {
                var: "x1".to_string(),
                equation: "v*(x2 + v*x1*x2^(2^(s-1)))^(2^(s-1)) + b".to_string(),
            },
            ImplicitDefinition {
                var: "y1".to_string(),
                equation: "v*(y2 + v*y1*y2^(2^(s-1)))^(2^(s-1)) + c".to_string(),
            },
        ],
        reducers: Some(vec![0, 1, 2, 13, 14]),
        extra_relations: vec![
            "a^2*c + a*c^2".to_string(),
            "b^2*c + b*c^2".to_string(),
            "x1^(2^s) + b^(2^(s-1))*c^(2^(s-1))".to_string(),
            "y1^(2^s) + a^(2^(s-1))*c^(2^(s-1))".to_string(),
        ],
        group: Some(GroupSource::Polycyclic(g36_spec())),
    }
}

/// `K(s)^*[u1, ..., uk] / (u_i^(p^(n_i s)))` for the abelian p-group
/// `C_{p^n_1} x ... x C_{p^n_k}`.
pub fn abelian_presentation(p: u32, exponents: &[u32]) -> RingPresentation {
    let variables = (1..=exponents.len()).map(|i| var(&format!("u{i}"), 2)).collect();
    let relations = exponents
        .iter()
        .enumerate()
        .map(|(i, n)| format!("u{}^(p^({n}*s))", i + 1))
        .collect();
    let factors: Vec<GroupSource> = exponents
        .iter()
        .map(|&n| GroupSource::Cyclic { order: p.pow(n) })
        .collect();
    let name = exponents
        .iter()
        .map(|&n| format!("C{}", p.pow(n)))
        .collect::<Vec<_>>()
        .join("x");
    RingPresentation {
        name,
        p,
        variables,
        relations,
        implicit: Vec::new(),
        reducers: None,
        extra_relations: Vec::new(),
        group: Some(GroupSource::Product(factors)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::RelationTemplate;

    #[test]
    fn g36_templates_are_canonical() {
        let pres = g36_presentation();
        pres.validate().unwrap();
        assert_eq!(pres.relations.len(), 15);
        assert_eq!(pres.implicit.len(), 2);
        let all = pres
            .relations
            .iter()
            .chain(&pres.extra_relations)
            .chain(pres.implicit.iter().map(|d| &d.equation));
        for t in all {
            assert_eq!(RelationTemplate::parse(t).unwrap().to_string(), *t);
        }
        assert_eq!(
            pres.relations[3],
            "c*(c + x1 + v*sum(i=1..s-1, c^(2^s-2^i)*x2^(2^(i-1))))"
        );
    }

    #[test]
    fn abelian_names() {
        let pres = abelian_presentation(2, &[1, 1]);
        assert_eq!(pres.name, "C2xC2");
        assert_eq!(pres.relations, ["u1^(p^(1*s))", "u2^(p^(1*s))"]);
    }
}
