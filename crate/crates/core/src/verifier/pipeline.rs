use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{RingPresentation, VerifyError};
use crate::dsl::RelationTemplate;
use crate::field::Fp;
use crate::group::{build_source, commuting_tuple_class_count, ChiStrategy, GroupConfig};
use crate::poly::{
    buchberger, solve_fixed_point, CoefficientSpec, GroebnerBasis, GroebnerConfig, GroebnerStats, Homogeneity,
    MonomialOrder, PolyRing, Polynomial, QuotientDimension, Variable,
};

/// Knobs for [`build_ideal`] and [`verify_rank`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Monomial order of the final ring.
    pub order: MonomialOrder,
    /// Relation indices left out of the ideal (after elimination).
    pub exclude: Vec<usize>,
    pub groebner: GroebnerConfig,
    pub group: GroupConfig,
    /// Fixed-point iteration cap; `4 s` when absent.
    pub max_iter: Option<usize>,
    /// Overrides the presentation's reducer list, in the given order.
    pub reducers: Option<Vec<usize>>,
    /// Standard monomials listed in a mismatch report, at most.
    pub standard_monomial_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            order: MonomialOrder::Grevlex,
            exclude: Vec::new(),
            groebner: GroebnerConfig::default(),
            group: GroupConfig::default(),
            max_iter: None,
            reducers: None,
            standard_monomial_limit: 4096,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointReport {
    pub var: String,
    /// The solution with `v` kept.
    pub value: String,
    /// The solution at `v = 1`.
    pub value_at_v1: String,
    pub iterations: usize,
    /// Normal form of `value - E(value)` modulo the reducers.
    pub residual: String,
    pub residual_is_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneityEntry {
    pub label: String,
    pub homogeneity: Homogeneity,
}

/// The relations of a presentation at a fixed `s`, with the implicit
/// variables eliminated and `v = 1`.
#[derive(Clone, Debug)]
pub struct EliminatedIdeal {
    pub spec: CoefficientSpec,
    /// Declared variables followed by `v`.
    pub full_ring: PolyRing,
    /// Declared variables minus the implicit ones.
    pub ring: PolyRing,
    pub reducers: GroebnerBasis,
    /// Solutions in `full_ring`, keyed by variable index.
    pub solutions: Vec<(usize, Polynomial)>,
    pub fixed_points: Vec<FixedPointReport>,
    pub homogeneity: Vec<HomogeneityEntry>,
    /// One generator per relation, in `ring`.
    pub generators: Vec<Polynomial>,
}

impl EliminatedIdeal {
    pub fn all_homogeneous(&self) -> bool {
        self.homogeneity.iter().all(|h| h.homogeneity.is_homogeneous())
    }

    /// Instantiates `template`, substitutes the solutions, and sets `v = 1`.
    pub fn eliminate(&self, template: &str) -> Result<Polynomial, VerifyError> {
        let f = RelationTemplate::parse(template)?.instantiate(&self.spec, &self.full_ring)?;
        self.to_final(&self.full_ring.substitute(&f, &self.solutions).poly)
    }

    fn to_final(&self, f: &Polynomial) -> Result<Polynomial, VerifyError> {
        let v = self.full_ring.nvars() - 1;
        let g = self.full_ring.specialize(f, v, 1);
        let map = self.full_ring.name_mapping(&self.ring);
        Ok(self.full_ring.map_into(&g, &self.ring, &map)?)
    }
}

/// Instantiates the presentation at `s`, solves the implicit definitions by
/// fixed-point iteration modulo the reducers (with `v` kept as a variable),
/// records homogeneity of everything along the way, substitutes, and sets
/// `v = 1`.
pub fn build_ideal(pres: &RingPresentation, s: u32, options: &VerifyOptions) -> Result<EliminatedIdeal, VerifyError> {
    pres.validate()?;
    let spec = CoefficientSpec::new(pres.p as u64, s)?;
    let field = Fp::new(pres.p as u64).map_err(crate::poly::CoefficientError::from)?;
    let mut vars: Vec<Variable> = pres.variables.iter().map(|v| Variable::new(v.name.clone(), v.degree)).collect();
    vars.push(Variable::new("v", spec.v_degree()));
    let full_ring = PolyRing::new(field, vars, MonomialOrder::Grevlex)?;
    let implicit: Vec<usize> = pres
        .implicit
        .iter()
        .map(|d| full_ring.var_index(&d.var).expect("validated"))
        .collect();
    let final_vars: Vec<Variable> = pres
        .variables
        .iter()
        .filter(|v| !pres.implicit.iter().any(|d| d.var == v.name))
        .map(|v| Variable::new(v.name.clone(), v.degree))
        .collect();
    let ring = PolyRing::new(field, final_vars, options.order)?;

    let mut homogeneity = Vec::new();
    let mut relations = Vec::with_capacity(pres.relations.len());
    for (i, t) in pres.relations.iter().enumerate() {
        let f = RelationTemplate::parse(t)?.instantiate(&spec, &full_ring)?;
        homogeneity.push(HomogeneityEntry {
            label: format!("relation {i}"),
            homogeneity: full_ring.homogeneity(&f),
        });
        relations.push(f);
    }

    let reducer_idx: Vec<usize> = match options.reducers.as_ref().or(pres.reducers.as_ref()) {
        Some(r) => r.clone(),
        None => (0..relations.len())
            .filter(|&i| !implicit.iter().any(|&k| relations[i].contains_var(k)))
            .collect(),
    };
    if let Some(&i) = reducer_idx.iter().find(|&&i| i >= relations.len()) {
        return Err(VerifyError::InvalidPresentation(format!("reducer index {i} out of range")));
    }
    let reducer_polys: Vec<Polynomial> = reducer_idx.iter().map(|&i| relations[i].clone()).collect();
    for (&i, f) in reducer_idx.iter().zip(&reducer_polys) {
        if let Some(&k) = implicit.iter().find(|&&k| f.contains_var(k)) {
            return Err(VerifyError::InvalidPresentation(format!(
                "reducer {i} involves the implicit variable {}",
                full_ring.variables()[k].name
            )));
        }
    }
    let (reducers, _) = buchberger(&full_ring, &reducer_polys, &options.groebner)?;

    let max_iter = options.max_iter.unwrap_or(4 * s as usize);
    let mut solutions: Vec<(usize, Polynomial)> = Vec::new();
    let mut equations = Vec::new();
    for (d, &k) in pres.implicit.iter().zip(&implicit) {
        let eq = RelationTemplate::parse(&d.equation)?.instantiate(&spec, &full_ring)?;
        let defining = full_ring.sub(&full_ring.var(k), &eq);
        homogeneity.push(HomogeneityEntry {
            label: format!("definition of {}", d.var),
            homogeneity: full_ring.homogeneity(&defining),
        });
        let eq = full_ring.substitute(&eq, &solutions).poly;
        let fp = solve_fixed_point(k, &eq, &reducers, max_iter)?;
        log::debug!("{} stabilized after {} iterations", d.var, fp.iterates.len() - 1);
        homogeneity.push(HomogeneityEntry {
            label: format!("solution for {}", d.var),
            homogeneity: full_ring.homogeneity(&fp.value),
        });
        solutions.push((k, fp.value.clone()));
        equations.push((fp.iterates.len() - 1, eq));
    }

    let mut ideal = EliminatedIdeal {
        spec,
        full_ring: full_ring.clone(),
        ring,
        reducers,
        solutions: solutions.clone(),
        fixed_points: Vec::new(),
        homogeneity: Vec::new(),
        generators: Vec::new(),
    };

    for ((d, (k, value)), (iterations, eq)) in pres.implicit.iter().zip(&solutions).zip(&equations) {
        let back = full_ring.substitute(eq, &solutions).poly;
        let residual = ideal.reducers.normal_form(&full_ring.sub(value, &back));
        homogeneity.push(HomogeneityEntry {
            label: format!("residual for {}", d.var),
            homogeneity: full_ring.homogeneity(&residual),
        });
        debug_assert_eq!(*k, full_ring.var_index(&d.var).unwrap());
        ideal.fixed_points.push(FixedPointReport {
            var: d.var.clone(),
            value: full_ring.to_string(value),
            value_at_v1: ideal.ring.to_string(&ideal.to_final(value)?),
            iterations: *iterations,
            residual: full_ring.to_string(&residual),
            residual_is_zero: residual.is_zero(),
        });
    }

    for (i, f) in relations.iter().enumerate() {
        let g = full_ring.substitute(f, &solutions).poly;
        homogeneity.push(HomogeneityEntry {
            label: format!("relation {i} after elimination"),
            homogeneity: full_ring.homogeneity(&g),
        });
        ideal.generators.push(ideal.to_final(&g)?);
    }
    ideal.homogeneity = homogeneity;
    Ok(ideal)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtraRelation {
    pub relation: String,
    pub normal_form: String,
    pub in_ideal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub presentation: String,
    pub p: u32,
    pub s: u32,
    pub order: MonomialOrder,
    pub excluded_relations: Vec<usize>,
    pub fixed_points: Vec<FixedPointReport>,
    pub homogeneity: Vec<HomogeneityEntry>,
    pub all_homogeneous: bool,
    pub ideal_generators: usize,
    pub basis_size: usize,
    pub groebner_stats: GroebnerStats,
    pub basis_audit_passed: bool,
    pub quotient_dimension: QuotientDimension,
    pub chi: Option<u64>,
    pub chi_strategy: Option<ChiStrategy>,
    /// Quotient dimension is finite and equal to `chi`.
    pub matched: bool,
    /// On a finite mismatch, the standard monomials (up to the limit).
    pub standard_monomials: Option<Vec<String>>,
    /// Variables with no pure power among the leading monomials.
    pub unbounded_variables: Vec<String>,
    pub extra_relations: Vec<ExtraRelation>,
}

impl VerificationReport {
    pub fn all_extra_relations_hold(&self) -> bool {
        self.extra_relations.iter().all(|r| r.in_ideal)
    }
}

fn basis_of(ideal: &EliminatedIdeal, options: &VerifyOptions) -> Result<(GroebnerBasis, GroebnerStats, usize), VerifyError> {
    let gens: Vec<Polynomial> = ideal
        .generators
        .iter()
        .enumerate()
        .filter(|(i, _)| !options.exclude.contains(i))
        .map(|(_, g)| g.clone())
        .collect();
    let n = gens.len();
    let (gb, stats) = buchberger(&ideal.ring, &gens, &options.groebner)?;
    Ok((gb, stats, n))
}

fn extras(pres: &RingPresentation, ideal: &EliminatedIdeal, gb: &GroebnerBasis) -> Result<Vec<ExtraRelation>, VerifyError> {
    pres.extra_relations
        .iter()
        .map(|t| {
            let f = ideal.eliminate(t)?;
            let nf = gb.normal_form(&f);
            Ok(ExtraRelation {
                relation: t.clone(),
                normal_form: ideal.ring.to_string(&nf),
                in_ideal: nf.is_zero(),
            })
        })
        .collect()
}

/// Normal forms of the presentation's extra relations against the Gröbner
/// basis of the ideal.
pub fn verify_extra_relations(
    pres: &RingPresentation,
    s: u32,
    options: &VerifyOptions,
) -> Result<Vec<ExtraRelation>, VerifyError> {
    let ideal = build_ideal(pres, s, options)?;
    let (gb, _, _) = basis_of(&ideal, options)?;
    extras(pres, &ideal, &gb)
}

/// Builds the ideal, computes its Gröbner basis and quotient dimension, and
/// compares with the commuting-tuple count of the attached group. A mismatch
/// is reported, never corrected.
pub fn verify_rank(pres: &RingPresentation, s: u32, options: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    let ideal = build_ideal(pres, s, options)?;
    let (gb, stats, ngens) = basis_of(&ideal, options)?;
    let dim = gb.quotient_dimension();
    log::info!("{} at s = {s}: basis of {} elements, dimension {:?}", pres.name, gb.len(), dim);

    let (chi, chi_strategy) = match &pres.group {
        Some(src) => {
            let g = build_source(src, &options.group)?;
            let (n, how) = commuting_tuple_class_count(&g, s, &options.group)?;
            (Some(n), Some(how))
        }
        None => (None, None),
    };
    let matched = matches!((dim, chi), (QuotientDimension::Finite(d), Some(c)) if d == c);

    let leads = gb.leading_monomials();
    let unbounded_variables = (0..ideal.ring.nvars())
        .filter(|&i| !leads.iter().any(|m| m.pure_power_var() == Some(i) || m.is_one()))
        .map(|i| ideal.ring.variables()[i].name.clone())
        .collect();
    let standard_monomials = if matched {
        None
    } else {
        gb.standard_monomials(options.standard_monomial_limit)
            .map(|ms| ms.iter().map(|m| ideal.ring.fmt_monomial(m)).collect())
    };
    if !matched {
        log::warn!("{} at s = {s}: dimension {:?} does not match chi = {:?}", pres.name, dim, chi);
    }

    Ok(VerificationReport {
        presentation: pres.name.clone(),
        p: pres.p,
        s,
        order: options.order,
        excluded_relations: options.exclude.clone(),
        fixed_points: ideal.fixed_points.clone(),
        all_homogeneous: ideal.all_homogeneous(),
        homogeneity: ideal.homogeneity.clone(),
        ideal_generators: ngens,
        basis_size: gb.len(),
        groebner_stats: stats,
        basis_audit_passed: gb.audit().is_ok(),
        quotient_dimension: dim,
        chi,
        chi_strategy,
        matched,
        standard_monomials,
        unbounded_variables,
        extra_relations: extras(pres, &ideal, &gb)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::{abelian_presentation, g36_presentation};

    #[test]
    fn g36_fixed_points_at_s2() {
        let ideal = build_ideal(&g36_presentation(), 2, &VerifyOptions::default()).unwrap();
        let fx = &ideal.fixed_points[0];
        assert_eq!(fx.var, "x1");
        assert_eq!(fx.value_at_v1, "b^3*c + x2^2 + b");
        assert!(fx.residual_is_zero);
        let fy = &ideal.fixed_points[1];
        assert_eq!(fy.value_at_v1, "a*c^3 + y2^2 + c");
        assert!(fy.residual_is_zero);
        assert!(ideal.all_homogeneous(), "{:?}", ideal.homogeneity);
        assert_eq!(ideal.ring.to_string(&ideal.generators[0]), "a^4");
        assert_eq!(ideal.ring.to_string(&ideal.generators[12]), "c*T");
    }

    #[test]
    fn g36_rank_at_s2() {
        let r = verify_rank(&g36_presentation(), 2, &VerifyOptions::default()).unwrap();
        assert!(r.matched, "{r:?}");
        assert!(r.basis_audit_passed);
        assert!(r.all_extra_relations_hold(), "{:?}", r.extra_relations);
    }

    #[test]
    fn deleting_a_relation_makes_the_quotient_infinite() {
        let opts = VerifyOptions {
            exclude: alloc::vec![13],
            ..VerifyOptions::default()
        };
        let r = verify_rank(&g36_presentation(), 2, &opts).unwrap();
        assert_eq!(r.quotient_dimension, QuotientDimension::Infinite);
        assert!(!r.matched);
        assert_eq!(r.unbounded_variables, ["x2"]);
    }

    #[test]
    fn abelian_rank() {
        let r = verify_rank(&abelian_presentation(2, &[1, 1]), 2, &VerifyOptions::default()).unwrap();
        assert_eq!(r.quotient_dimension, QuotientDimension::Finite(16));
        assert_eq!(r.chi, Some(16));
        assert!(r.matched);
    }

    #[test]
    fn a_alone_is_not_in_the_ideal() {
        let mut pres = g36_presentation();
        pres.extra_relations = alloc::vec!["a".into()];
        let out = verify_extra_relations(&pres, 2, &VerifyOptions::default()).unwrap();
        assert!(!out[0].in_ideal);
        assert_eq!(out[0].normal_form, "a");
    }
}
