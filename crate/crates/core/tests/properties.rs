use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use morava_core::cp_module::{cohomology_dims, decompose, tensor_diagonal, CpModule};
use morava_core::dsl::{ExpoExpr, Expr, Param, RelationTemplate};
use morava_core::field::Fp;
use morava_core::group::{
    build_group, build_source, commuting_tuple_class_count, conjugacy_classes, family_spec, fingerprint,
    g36_spec, induce_character, is_isomorphic, subgroup_generated, Character, Group, GroupConfig, GroupSource,
    GroupSpec,
};
use morava_core::poly::{
    buchberger, CoefficientSpec, GroebnerConfig, Monomial, MonomialOrder, PolyRing, Polynomial, Variable,
};

const NAMES: [&str; 3] = ["x", "y", "z"];

fn ring(p: u64, order: MonomialOrder) -> PolyRing {
    let vars = NAMES.iter().zip([1, 2, 3]).map(|(n, d)| Variable::new(*n, d)).collect();
    PolyRing::new(Fp::new(p).unwrap(), vars, order).unwrap()
}

type Terms = Vec<([u16; 3], u32)>;

fn terms(max_exp: u16, max_len: usize) -> impl Strategy<Value = Terms> {
    prop::collection::vec(([0..=max_exp, 0..=max_exp, 0..=max_exp], 0u32..5), 0..=max_len)
}

fn poly(r: &PolyRing, t: &Terms) -> Polynomial {
    r.from_terms(t.iter().map(|(e, c)| (Monomial::from_exponents(e), *c)))
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7])
}

proptest! {
    #[test]
    fn ring_axioms(p in prime(), a in terms(3, 5), b in terms(3, 5), c in terms(3, 5)) {
        let r = ring(p, MonomialOrder::Grevlex);
        let (f, g, h) = (poly(&r, &a), poly(&r, &b), poly(&r, &c));
        prop_assert_eq!(r.add(&f, &g), r.add(&g, &f));
        prop_assert_eq!(r.mul(&f, &g), r.mul(&g, &f));
        prop_assert_eq!(r.mul(&r.mul(&f, &g), &h), r.mul(&f, &r.mul(&g, &h)));
        prop_assert_eq!(r.mul(&f, &r.add(&g, &h)), r.add(&r.mul(&f, &g), &r.mul(&f, &h)));
        prop_assert_eq!(r.mul(&f, &r.one()), f.clone());
        prop_assert!(r.sub(&f, &f).is_zero());
        prop_assert!(r.add(&f, &r.neg(&f)).is_zero());
    }

    #[test]
    fn frobenius_is_additive(p in prime(), a in terms(3, 5), b in terms(3, 5)) {
        let r = ring(p, MonomialOrder::Grevlex);
        let (f, g) = (poly(&r, &a), poly(&r, &b));
        prop_assert_eq!(r.frobenius(&r.add(&f, &g)), r.add(&r.frobenius(&f), &r.frobenius(&g)));
        prop_assert_eq!(r.frobenius(&f), r.pow(&f, p));
    }

    #[test]
    fn product_degree_adds(p in prime(), a in terms(3, 4), b in terms(3, 4)) {
        let r = ring(p, MonomialOrder::Grevlex);
        let (f, g) = (poly(&r, &a), poly(&r, &b));
        for (m, _) in r.mul(&f, &g).terms() {
            let d = r.monomial_degree(m);
            let found = f
                .terms()
                .iter()
                .any(|(m1, _)| g.terms().iter().any(|(m2, _)| r.monomial_degree(m1) + r.monomial_degree(m2) == d));
            prop_assert!(found);
        }
    }

    #[test]
    fn identity_substitution(p in prime(), a in terms(3, 6)) {
        let r = ring(p, MonomialOrder::Lex);
        let f = poly(&r, &a);
        let bindings: Vec<_> = (0..3).map(|i| (i, r.var(i))).collect();
        let out = r.substitute(&f, &bindings);
        prop_assert_eq!(out.poly, f);
        prop_assert!(out.mismatches.is_empty());
    }

    #[test]
    fn substitution_is_a_homomorphism(p in prime(), a in terms(2, 4), b in terms(2, 4), bx in terms(1, 3)) {
        let r = ring(p, MonomialOrder::Grevlex);
        let (f, g) = (poly(&r, &a), poly(&r, &b));
        let bind = vec![(0, poly(&r, &bx))];
        let s = |h: &Polynomial| r.substitute(h, &bind).poly;
        prop_assert_eq!(s(&r.mul(&f, &g)), r.mul(&s(&f), &s(&g)));
        prop_assert_eq!(s(&r.add(&f, &g)), r.add(&s(&f), &s(&g)));
    }
}

fn zero_dimensional(p: u64, order: MonomialOrder, extra: &[Terms]) -> (PolyRing, Vec<Polynomial>) {
    let r = ring(p, order);
    let mut gens: Vec<Polynomial> = (0..3)
        .map(|i| {
            let mut e = [0u16; 3];
            e[i] = 3;
            r.term(Monomial::from_exponents(&e), 1)
        })
        .collect();
    gens.extend(extra.iter().map(|t| poly(&r, t)));
    (r, gens)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_properties(p in prime(), extra in prop::collection::vec(terms(2, 3), 1..3),
                              a in terms(4, 6), b in terms(4, 6), mult in terms(2, 3)) {
        let (r, gens) = zero_dimensional(p, MonomialOrder::Grevlex, &extra);
        let (gb, _) = buchberger(&r, &gens, &GroebnerConfig::default()).unwrap();
        prop_assert!(gb.audit().is_ok());
        let (f, g) = (poly(&r, &a), poly(&r, &b));
        let nf = gb.normal_form(&f);
        prop_assert_eq!(gb.normal_form(&nf), nf.clone());
        prop_assert!(gb.normal_form(&r.sub(&f, &nf)).is_zero());
        prop_assert_eq!(gb.normal_form(&r.add(&f, &g)), r.add(&nf, &gb.normal_form(&g)));
        for (m, _) in nf.terms() {
            prop_assert!(gb.is_standard(m));
        }
        let member = r.mul(&poly(&r, &mult), &gens[gens.len() - 1]);
        prop_assert!(gb.normal_form(&member).is_zero());
    }

    #[test]
    fn dimension_is_order_independent(p in prime(), extra in prop::collection::vec(terms(2, 3), 1..3)) {
        let (r1, g1) = zero_dimensional(p, MonomialOrder::Grevlex, &extra);
        let (r2, g2) = zero_dimensional(p, MonomialOrder::Lex, &extra);
        let (b1, _) = buchberger(&r1, &g1, &GroebnerConfig::default()).unwrap();
        let (b2, _) = buchberger(&r2, &g2, &GroebnerConfig::default()).unwrap();
        prop_assert_eq!(b1.quotient_dimension(), b2.quotient_dimension());
        for g in &g1 {
            prop_assert!(b2.normal_form(&r2.reorder(g)).is_zero());
        }
    }

    #[test]
    fn reduced_basis_ignores_generator_order(p in prime(), extra in prop::collection::vec(terms(2, 3), 1..4), seed: u64) {
        let (r, mut gens) = zero_dimensional(p, MonomialOrder::Grevlex, &extra);
        let (b1, _) = buchberger(&r, &gens, &GroebnerConfig::default()).unwrap();
        gens.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let (b2, _) = buchberger(&r, &gens, &GroebnerConfig::default()).unwrap();
        prop_assert_eq!(b1.generators(), b2.generators());
    }
}

// Relation-language round trip.

fn expo() -> impl Strategy<Value = ExpoExpr> {
    let leaf = prop_oneof![
        (0u64..20).prop_map(ExpoExpr::Int),
        Just(ExpoExpr::Param(Param::S)),
        Just(ExpoExpr::Param(Param::P)),
        Just(ExpoExpr::Index("i".into())),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ExpoExpr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ExpoExpr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ExpoExpr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| ExpoExpr::Pow(Box::new(a), Box::new(b))),
        ]
    })
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["a", "b", "x2", "T", "v"]).prop_map(|n| Expr::Var(n.into())),
        (0u64..10).prop_map(Expr::Int),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), expo()).prop_map(|(a, e)| Expr::Pow(Box::new(a), e)),
            (expo(), expo(), inner).prop_map(|(lower, upper, body)| Expr::Sum {
                index: "i".into(),
                lower,
                upper,
                body: Box::new(body),
            }),
        ]
    })
}

proptest! {
    #[test]
    fn templates_round_trip(ast in expr()) {
        let t = RelationTemplate::from_ast(ast);
        let text = t.to_string();
        let back = RelationTemplate::parse(&text).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, t);
    }

    #[test]
    fn instantiation_respects_arithmetic(a in terms(2, 3), b in terms(2, 3), s in 2u32..4) {
        let r = ring(2, MonomialOrder::Grevlex);
        let (f, g) = (poly(&r, &a), poly(&r, &b));
        let spec = CoefficientSpec::new(2, s).unwrap();
        let text = format!("({})*({}) + ({})^(2^s)", r.to_string(&f), r.to_string(&g), r.to_string(&f));
        let got = RelationTemplate::parse(&text).unwrap().instantiate(&spec, &r).unwrap();
        prop_assert_eq!(got, r.add(&r.mul(&f, &g), &r.pow(&f, 1 << s)));
    }
}

// Groups.

fn corpus() -> Vec<Group> {
    let config = GroupConfig::default();
    let specs = [
        g36_spec(),
        family_spec(1, [0, 1, 1, 0]).unwrap(),
        family_spec(2, [1, 1, 0, 3]).unwrap(),
        family_spec(2, [3, 0, 0, 3]).unwrap(),
        GroupSpec::new()
            .generator("x", 2)
            .generator("y", 2)
            .generator("z", 2)
            .conjugation("y", "z", "x*y")
            .unwrap()
            .power("y", "x")
            .unwrap()
            .power("z", "x")
            .unwrap(),
    ];
    let mut out: Vec<Group> = specs.iter().map(|s| build_group(s, &config).unwrap()).collect();
    out.push(
        build_source(
            &GroupSource::Product(vec![GroupSource::Cyclic { order: 4 }, GroupSource::Cyclic { order: 2 }]),
            &config,
        )
        .unwrap(),
    );
    out
}

/// The same group with its elements renumbered by a random permutation
/// fixing the identity.
fn relabel(g: &Group, seed: u64) -> Group {
    let n = g.order();
    let mut perm: Vec<u32> = (1..n as u32).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    perm.insert(0, 0);
    let mut table = vec![0u32; n * n];
    for x in 0..n as u32 {
        for y in 0..n as u32 {
            table[perm[x as usize] as usize * n + perm[y as usize] as usize] = perm[g.mul(x, y) as usize];
        }
    }
    Group::from_table(n, table, &GroupConfig::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn fingerprint_survives_relabeling(seed: u64) {
        for g in corpus() {
            let h = relabel(&g, seed);
            prop_assert_eq!(fingerprint(&g), fingerprint(&h));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn isomorphism_is_reflexive_and_symmetric(seed: u64) {
        let config = GroupConfig::default();
        let groups = corpus();
        for g in &groups {
            prop_assert!(is_isomorphic(g, &relabel(g, seed), &config).unwrap());
        }
        for g in &groups {
            for h in &groups {
                let gh = is_isomorphic(g, h, &config).unwrap();
                prop_assert_eq!(gh, is_isomorphic(h, g, &config).unwrap());
                if gh {
                    prop_assert_eq!(fingerprint(g), fingerprint(h));
                }
            }
        }
    }
}

#[test]
fn class_equation_and_chi() {
    let config = GroupConfig::default();
    for g in corpus() {
        let classes = conjugacy_classes(&g);
        assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), g.order());
        assert!(classes.iter().all(|c| g.order() % c.len() == 0));
        assert_eq!(commuting_tuple_class_count(&g, 1, &config).unwrap().0, classes.len() as u64);
        if g.is_abelian() {
            for s in 1..=3 {
                assert_eq!(commuting_tuple_class_count(&g, s, &config).unwrap().0, (g.order() as u64).pow(s));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn induced_trivial_characters(picks in prop::collection::vec(0usize..32, 1..3)) {
        let g = build_group(&g36_spec(), &GroupConfig::default()).unwrap();
        let elems: Vec<u32> = picks.iter().map(|&i| i as u32).collect();
        let h = subgroup_generated(&g, &elems);
        let index = h.index() as i64;
        let ind = induce_character(&Character::trivial(h));
        prop_assert!(ind.is_class_function(&g));
        prop_assert_eq!(ind.value(g.identity()).as_integer(), Some(index));
    }
}

// C_p-modules.

fn module(p: u32, sizes: &[usize]) -> CpModule {
    let mut it = sizes.iter().map(|&k| CpModule::jordan_block(p, k).unwrap());
    let first = it.next().unwrap();
    it.fold(first, |acc, m| acc.direct_sum(&m).unwrap())
}

fn blocks(p: u32) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=p as usize, 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tensor_properties(p in prop::sample::select(vec![2u32, 3, 5]), b1 in blocks(5), b2 in blocks(5)) {
        let clamp = |b: &[usize]| b.iter().map(|&k| k.min(p as usize)).collect::<Vec<_>>();
        let (m1, m2) = (module(p, &clamp(&b1)), module(p, &clamp(&b2)));
        let t12 = tensor_diagonal(&m1, &m2).unwrap();
        let t21 = tensor_diagonal(&m2, &m1).unwrap();
        prop_assert_eq!(t12.dim(), m1.dim() * m2.dim());
        prop_assert_eq!(decompose(&t12), decompose(&t21));
        let one = CpModule::trivial(p, 1).unwrap();
        prop_assert_eq!(decompose(&tensor_diagonal(&m1, &one).unwrap()), decompose(&m1));
        let free = CpModule::free(p, 1).unwrap();
        let tf = decompose(&tensor_diagonal(&m1, &free).unwrap());
        prop_assert_eq!(tf.free_rank(), m1.dim());
        let h = cohomology_dims(&t12, 6);
        prop_assert_eq!(&h[1..3], &h[3..5]);
        prop_assert_eq!(&h[3..5], &h[5..7]);
    }
}
