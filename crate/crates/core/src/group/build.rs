use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::spec::{family_spec, GroupSource, GroupSpec, Word};
use super::{GroupConfig, GroupError};

/// A finite group given by its full Cayley table. Index 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    /// Normal-form exponent vector of each element.
    element_names: Vec<Vec<u32>>,
    generator_names: Vec<String>,
    generator_orders: Vec<u32>,
    generators: Vec<u32>,
}

impl Group {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order as u32
    }

    /// `x^-1 * g * x`.
    #[inline]
    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(self.inv(x), g), x)
    }

    #[inline]
    pub fn commutes(&self, a: u32, b: u32) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn pow(&self, g: u32, e: i64) -> u32 {
        let base = if e < 0 { self.inv(g) } else { g };
        let mut r = 0;
        for _ in 0..e.unsigned_abs() {
            r = self.mul(r, base);
        }
        r
    }

    pub fn element_order(&self, g: u32) -> u64 {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        self.elements().map(|g| self.element_order(g)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.commutes(a, b)))
    }

    pub fn element_name(&self, g: u32) -> &[u32] {
        &self.element_names[g as usize]
    }

    /// `g` written as a normal-form word, e.g. `b^2*a*c`.
    pub fn element_word(&self, g: u32) -> String {
        let mut parts = Vec::new();
        for (name, &e) in self.generator_names.iter().zip(&self.element_names[g as usize]) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<u32> {
        self.generator_names
            .iter()
            .position(|n| n == name)
            .map(|i| self.generators[i])
    }

    /// Evaluates a word in the named generators.
    pub fn eval_word(&self, w: &Word) -> Result<u32, GroupError> {
        let mut r = 0;
        for (name, e) in &w.0 {
            let g = self
                .generator(name)
                .ok_or_else(|| GroupError::UnknownGenerator(name.clone()))?;
            r = self.mul(r, self.pow(g, *e));
        }
        Ok(r)
    }

    /// Builds a group from a complete multiplication table, checking the
    /// group axioms. Element names default to `[index]`.
    pub fn from_table(order: usize, table: Vec<u32>, config: &GroupConfig) -> Result<Group, GroupError> {
        if order == 0 || table.len() != order * order {
            return Err(GroupError::InvalidInput("table size does not match order".into()));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(GroupError::InvalidInput("table entry out of range".into()));
        }
        let mut g = Group {
            order,
            table,
            inverses: vec![0; order],
            element_names: (0..order as u32).map(|i| vec![i]).collect(),
            generator_names: Vec::new(),
            generator_orders: Vec::new(),
            generators: Vec::new(),
        };
        for x in 0..order as u32 {
            if g.mul(0, x) != x || g.mul(x, 0) != x {
                return Err(GroupError::InconsistentPresentation("index 0 is not the identity".into()));
            }
        }
        g.fill_inverses()?;
        g.check_associativity(config)?;
        g.generators = small_generating_set(&g);
        g.generator_names = (0..g.generators.len()).map(|i| format!("g{i}")).collect();
        g.generator_orders = g.generators.iter().map(|&x| g.element_order(x) as u32).collect();
        Ok(g)
    }

    fn fill_inverses(&mut self) -> Result<(), GroupError> {
        for x in 0..self.order as u32 {
            let row = &self.table[x as usize * self.order..(x as usize + 1) * self.order];
            let y = row.iter().position(|&v| v == 0).ok_or_else(|| {
                GroupError::InconsistentPresentation(format!("element {x} has no inverse"))
            })? as u32;
            if self.mul(y, x) != 0 {
                return Err(GroupError::InconsistentPresentation(format!(
                    "element {x} has no two-sided inverse"
                )));
            }
            self.inverses[x as usize] = y;
        }
        Ok(())
    }

    /// Exhaustive up to `config.exhaustive_check_limit`, random triples above.
    pub fn check_associativity(&self, config: &GroupConfig) -> Result<(), GroupError> {
        let n = self.order as u32;
        let bad = |a: u32, b: u32, c: u32| {
            GroupError::InconsistentPresentation(format!("associativity fails for ({a}, {b}, {c})"))
        };
        if self.order <= config.exhaustive_check_limit {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(bad(a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..config.random_associativity_triples {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(bad(a, b, c));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Greedy generating set: repeatedly adds the smallest-index element of
/// largest order outside the current subgroup.
pub(crate) fn small_generating_set(g: &Group) -> Vec<u32> {
    let mut gens = Vec::new();
    let mut inside = vec![false; g.order];
    inside[0] = true;
    let mut orders: Vec<(u64, u32)> = g.elements().map(|x| (g.element_order(x), x)).collect();
    orders.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for (_, x) in orders {
        if inside[x as usize] {
            continue;
        }
        gens.push(x);
        let closure = super::structure::closure(g, &gens);
        inside.iter_mut().for_each(|b| *b = false);
        for e in closure {
            inside[e as usize] = true;
        }
        if inside.iter().all(|&b| b) {
            break;
        }
    }
    gens
}

/// Builds the group of a polycyclic presentation by iterated cyclic
/// extension `G_j = G_{j-1} . <g_j>`, each element stored as the normal form
/// `g_1^{e_1} ... g_k^{e_k}` with `0 <= e_i < order(g_i)`.
///
/// For every step the conjugation action of `g_j` must be an automorphism of
/// `G_{j-1}` fixing the power `w = g_j^{m}` and whose m-th power is
/// conjugation by `w`; violations are reported as inconsistent. The finished
/// table is then checked against every declared relation and for
/// associativity.
pub fn build_group(spec: &GroupSpec, config: &GroupConfig) -> Result<Group, GroupError> {
    spec.validate()?;
    let total: u64 = spec.generators.iter().map(|g| g.order as u64).product();
    if total > config.max_order as u64 {
        return Err(GroupError::SizeLimit {
            order: total,
            limit: config.max_order as u64,
        });
    }

    // G_0 is trivial
    let mut cur = Group {
        order: 1,
        table: vec![0],
        inverses: vec![0],
        element_names: vec![Vec::new()],
        generator_names: Vec::new(),
        generator_orders: Vec::new(),
        generators: Vec::new(),
    };

    for (j, decl) in spec.generators.iter().enumerate() {
        let n = cur.order;
        let m = decl.order as usize;

        // phi(x) = g_j^-1 x g_j on the earlier generators
        let mut phi_gen = cur.generators.clone();
        for r in spec.conjugations.iter().filter(|r| r.actor == decl.name) {
            let idx = cur.generator_names.iter().position(|x| *x == r.acted).unwrap();
            phi_gen[idx] = cur.eval_word(&r.image)?;
        }
        let phi: Vec<u32> = (0..n)
            .map(|x| {
                cur.element_names[x]
                    .iter()
                    .zip(&phi_gen)
                    .fold(0, |acc, (&e, &img)| cur.mul(acc, cur.pow(img, e as i64)))
            })
            .collect();

        let inconsistent = |msg: String| GroupError::InconsistentPresentation(format!("at generator {}: {msg}", decl.name));
        // phi must be a bijective homomorphism
        let mut seen = vec![false; n];
        for &y in &phi {
            if core::mem::replace(&mut seen[y as usize], true) {
                return Err(inconsistent("conjugation action is not injective".into()));
            }
        }
        for x in 0..n as u32 {
            for y in 0..n as u32 {
                if phi[cur.mul(x, y) as usize] != cur.mul(phi[x as usize], phi[y as usize]) {
                    return Err(inconsistent("conjugation action is not a homomorphism".into()));
                }
            }
        }
        let w = match spec.powers.iter().find(|r| r.generator == decl.name) {
            Some(r) => cur.eval_word(&r.word)?,
            None => 0,
        };
        if phi[w as usize] != w {
            return Err(inconsistent("the power is not fixed by the action".into()));
        }
        // phi^m must be conjugation by w
        let mut phim: Vec<u32> = (0..n as u32).collect();
        for _ in 0..m {
            phim = phim.iter().map(|&x| phi[x as usize]).collect();
        }
        for x in 0..n as u32 {
            if phim[x as usize] != cur.conj(x, w) {
                return Err(inconsistent(format!("the action to the power {m} is not conjugation by the power")));
            }
        }

        // psi = phi^-1, i.e. psi(y) = g y g^-1; psis[e] = psi^e
        let mut psi = vec![0u32; n];
        for (x, &y) in phi.iter().enumerate() {
            psi[y as usize] = x as u32;
        }
        let mut psis: Vec<Vec<u32>> = Vec::with_capacity(m);
        psis.push((0..n as u32).collect());
        for e in 1..m {
            let prev = &psis[e - 1];
            psis.push(prev.iter().map(|&x| psi[x as usize]).collect());
        }

        // (x g^e)(y g^f) = x psi^e(y) g^(e+f), folding g^m = w
        let new_order = n * m;
        let mut table = vec![0u32; new_order * new_order];
        for e in 0..m {
            for x in 0..n {
                let left = x + n * e;
                let row = &mut table[left * new_order..(left + 1) * new_order];
                for f in 0..m {
                    for y in 0..n {
                        let mut prod = cur.mul(x as u32, psis[e][y]);
                        let mut k = e + f;
                        if k >= m {
                            k -= m;
                            prod = cur.mul(prod, w);
                        }
                        row[y + n * f] = prod + (n * k) as u32;
                    }
                }
            }
        }
        let mut element_names = Vec::with_capacity(new_order);
        for e in 0..m {
            for x in 0..n {
                let mut v = cur.element_names[x].clone();
                v.push(e as u32);
                element_names.push(v);
            }
        }
        let mut generators: Vec<u32> = cur.generators.clone();
        generators.push(n as u32);
        let mut names = cur.generator_names.clone();
        names.push(decl.name.clone());
        let mut orders = cur.generator_orders.clone();
        orders.push(decl.order);
        cur = Group {
            order: new_order,
            table,
            inverses: vec![0; new_order],
            element_names,
            generator_names: names,
            generator_orders: orders,
            generators,
        };
        cur.fill_inverses()?;
        debug_assert_eq!(cur.generators.len(), j + 1);
    }

    verify_relations(&cur, spec)?;
    cur.check_associativity(config)?;
    Ok(cur)
}

/// Checks every declared relation of `spec` in the Cayley table, including
/// the implicit commutation of pairs with no conjugation rule.
pub fn verify_relations(g: &Group, spec: &GroupSpec) -> Result<(), GroupError> {
    let fail = |msg: String| Err(GroupError::InconsistentPresentation(msg));
    for (i, decl) in spec.generators.iter().enumerate() {
        let x = g.generators[i];
        let power = match spec.powers.iter().find(|r| r.generator == decl.name) {
            Some(r) => g.eval_word(&r.word)?,
            None => 0,
        };
        if g.pow(x, decl.order as i64) != power {
            return fail(format!("{}^{} relation fails", decl.name, decl.order));
        }
        if g.element_order(x) != decl.order as u64 && power == 0 {
            return fail(format!("{} does not have order {}", decl.name, decl.order));
        }
        for (k, actor) in spec.generators.iter().enumerate().skip(i + 1) {
            let y = g.generators[k];
            let expected = match spec
                .conjugations
                .iter()
                .find(|r| r.acted == decl.name && r.actor == actor.name)
            {
                Some(r) => g.eval_word(&r.image)?,
                None => x,
            };
            if g.conj(x, y) != expected {
                return fail(format!("conjugation of {} by {} fails", decl.name, actor.name));
            }
        }
    }
    Ok(())
}

/// Direct product with componentwise multiplication. Element `(x, y)` has
/// index `x + |g1| * y`.
pub fn direct_product(g1: &Group, g2: &Group, config: &GroupConfig) -> Result<Group, GroupError> {
    let (n1, n2) = (g1.order, g2.order);
    let order = n1 as u64 * n2 as u64;
    if order > config.max_order as u64 {
        return Err(GroupError::SizeLimit {
            order,
            limit: config.max_order as u64,
        });
    }
    let n = n1 * n2;
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        let (a1, a2) = ((a % n1) as u32, (a / n1) as u32);
        for b in 0..n {
            let (b1, b2) = ((b % n1) as u32, (b / n1) as u32);
            table[a * n + b] = g1.mul(a1, b1) + n1 as u32 * g2.mul(a2, b2);
        }
    }
    let inverses = (0..n)
        .map(|a| g1.inv((a % n1) as u32) + n1 as u32 * g2.inv((a / n1) as u32))
        .collect();
    let element_names = (0..n)
        .map(|a| {
            let mut v = g1.element_names[a % n1].clone();
            v.extend_from_slice(&g2.element_names[a / n1]);
            v
        })
        .collect();
    let mut names = g1.generator_names.clone();
    for nm in &g2.generator_names {
        let mut cand = nm.clone();
        let mut k = 2;
        while names.contains(&cand) {
            cand = format!("{nm}_{k}");
            k += 1;
        }
        names.push(cand);
    }
    let mut generators = g1.generators.clone();
    generators.extend(g2.generators.iter().map(|&y| y * n1 as u32));
    let mut orders = g1.generator_orders.clone();
    orders.extend_from_slice(&g2.generator_orders);
    Ok(Group {
        order: n,
        table,
        inverses,
        element_names,
        generator_names: names,
        generator_orders: orders,
        generators,
    })
}

/// Builds any [`GroupSource`].
pub fn build_source(src: &GroupSource, config: &GroupConfig) -> Result<Group, GroupError> {
    match src {
        GroupSource::Polycyclic(spec) => build_group(spec, config),
        GroupSource::Family { n, matrix } => build_group(&family_spec(*n, *matrix)?, config),
        GroupSource::Cyclic { order } => build_group(&GroupSpec::cyclic(*order), config),
        GroupSource::Product(factors) => {
            let mut it = factors.iter();
            let first = it
                .next()
                .ok_or_else(|| GroupError::InvalidInput("product with no factors".into()))?;
            let mut g = build_source(first, config)?;
            for f in it {
                let h = build_source(f, config)?;
                g = direct_product(&g, &h, config)?;
            }
            Ok(g)
        }
    }
}
