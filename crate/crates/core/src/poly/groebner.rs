//! Buchberger's algorithm with the Gebauer–Möller pair criteria, normal forms,
//! and standard-monomial counting.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use super::ring::{PolyRing, Polynomial};
use super::PolyError;

/// Work caps for [`buchberger`]. Exceeding either is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    pub max_reduction_steps: u64,
    pub max_basis_size: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_reduction_steps: 1_000_000,
            max_basis_size: 10_000,
        }
    }
}

impl GroebnerConfig {
    pub fn unlimited() -> Self {
        GroebnerConfig {
            max_reduction_steps: u64::MAX,
            max_basis_size: usize::MAX,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GroebnerStats {
    pub pairs_considered: usize,
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub reduction_steps: u64,
}

/// A reduced Gröbner basis: monic, leading monomials pairwise non-divisible,
/// tails fully reduced. Generators are sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: PolyRing,
    generators: Vec<Polynomial>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientDimension {
    Finite(u64),
    Infinite,
}

impl QuotientDimension {
    pub fn finite(&self) -> Option<u64> {
        match self {
            QuotientDimension::Finite(n) => Some(*n),
            QuotientDimension::Infinite => None,
        }
    }
}

#[inline]
fn support_mask(m: &Monomial) -> u32 {
    let mut mask = 0u32;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            mask |= 1 << i;
        }
    }
    mask
}

/// Divisor lookup over a list of leading monomials.
struct Divisors {
    leads: Vec<(Monomial, u32, usize)>,
}

impl Divisors {
    fn new() -> Self {
        Divisors { leads: Vec::new() }
    }

    fn push(&mut self, m: Monomial, idx: usize) {
        self.leads.push((m, support_mask(&m), idx));
    }

    #[inline]
    fn find(&self, m: &Monomial) -> Option<usize> {
        let mask = support_mask(m);
        self.leads
            .iter()
            .find(|(l, lmask, _)| lmask & !mask == 0 && l.divides(m))
            .map(|(_, _, i)| *i)
    }
}

struct Budget {
    steps: u64,
    cap: u64,
}

impl Budget {
    #[inline]
    fn tick(&mut self) -> Result<(), PolyError> {
        self.steps += 1;
        if self.steps > self.cap {
            Err(PolyError::BudgetExceeded {
                what: "reduction steps",
                limit: self.cap,
            })
        } else {
            Ok(())
        }
    }
}

/// Full reduction of `f` by the polynomials `basis[i]` listed in `divisors`.
fn reduce_with(
    ring: &PolyRing,
    f: &Polynomial,
    basis: &[Polynomial],
    divisors: &Divisors,
    budget: &mut Budget,
) -> Result<Polynomial, PolyError> {
    let fp = ring.field();
    let mut rem = f.clone();
    let mut done: Vec<(Monomial, u32)> = Vec::new();
    loop {
        // find the first reducible term; everything before it is final
        let terms = rem.terms();
        let mut hit = None;
        for (k, (m, _)) in terms.iter().enumerate() {
            if let Some(i) = divisors.find(m) {
                hit = Some((k, i));
                break;
            }
        }
        let Some((k, i)) = hit else {
            done.extend_from_slice(terms);
            break;
        };
        done.extend_from_slice(&terms[..k]);
        let (m, c) = terms[k];
        let g = &basis[i];
        let (gm, gc) = *g.leading_term().expect("zero polynomial in basis");
        let q = gm.quotient_of(&m);
        let factor = fp.neg(fp.mul(c, fp.inv(gc)));
        let tail = Polynomial::from_sorted_unchecked(terms[k..].to_vec());
        rem = ring.add_scaled(&tail, g, factor, &q);
        budget.tick()?;
    }
    Ok(Polynomial::from_sorted_unchecked(done))
}

fn make_monic(ring: &PolyRing, f: &Polynomial) -> Polynomial {
    let c = f.leading_coeff();
    if c == 1 || c == 0 {
        f.clone()
    } else {
        ring.scale(f, ring.field().inv(c))
    }
}

/// The S-polynomial of `f` and `g`.
pub fn s_polynomial(ring: &PolyRing, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let fp = ring.field();
    let (fm, fc) = *f.leading_term().expect("zero polynomial");
    let (gm, gc) = *g.leading_term().expect("zero polynomial");
    let l = fm.lcm(&gm);
    let a = ring.mul_term(f, &fm.quotient_of(&l), fp.inv(fc));
    ring.add_scaled(&a, g, fp.neg(fp.inv(gc)), &gm.quotient_of(&l))
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u32,
}

impl Pair {
    fn new(polys: &[Polynomial], i: usize, j: usize) -> Pair {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let lcm = polys[i]
            .leading_monomial()
            .unwrap()
            .lcm(polys[j].leading_monomial().unwrap());
        Pair {
            i,
            j,
            lcm,
            degree: lcm.total_degree(),
        }
    }

    fn key(&self) -> (u32, usize, usize) {
        (self.degree, self.i, self.j)
    }
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
///
/// S-pairs are selected by ascending total degree of their lcm, ties broken
/// by pair index; the result is deterministic for a fixed input order.
pub fn buchberger(
    ring: &PolyRing,
    gens: &[Polynomial],
    config: &GroebnerConfig,
) -> Result<(GroebnerBasis, GroebnerStats), PolyError> {
    let mut stats = GroebnerStats::default();
    let mut budget = Budget {
        steps: 0,
        cap: config.max_reduction_steps,
    };
    let mut polys: Vec<Polynomial> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let lm = |polys: &[Polynomial], i: usize| *polys[i].leading_monomial().unwrap();

    let insert = |h: Polynomial,
                      polys: &mut Vec<Polynomial>,
                      active: &mut Vec<usize>,
                      pairs: &mut Vec<Pair>|
     -> Result<(), PolyError> {
        if active.len() + 1 > config.max_basis_size {
            return Err(PolyError::BudgetExceeded {
                what: "basis size",
                limit: config.max_basis_size as u64,
            });
        }
        let hi = polys.len();
        polys.push(h);
        let hm = lm(polys, hi);

        let mut c: VecDeque<Pair> = active.iter().map(|&g| Pair::new(polys, g, hi)).collect();
        let mut d: Vec<Pair> = Vec::new();
        while let Some(p) = c.pop_front() {
            let g1 = if p.i == hi { p.j } else { p.i };
            let coprime = lm(polys, g1).is_coprime(&hm);
            if coprime
                || (!c.iter().any(|q| q.lcm.divides(&p.lcm))
                    && !d.iter().any(|q| q.lcm.divides(&p.lcm)))
            {
                d.push(p);
            }
        }
        d.retain(|p| {
            let g1 = if p.i == hi { p.j } else { p.i };
            !lm(polys, g1).is_coprime(&hm)
        });
        pairs.retain(|p| {
            !(hm.divides(&p.lcm)
                && lm(polys, p.i).lcm(&hm) != p.lcm
                && lm(polys, p.j).lcm(&hm) != p.lcm)
        });
        pairs.extend(d);
        active.retain(|&g| !hm.divides(&lm(polys, g)));
        active.push(hi);
        Ok(())
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let h = make_monic(ring, g);
        insert(h, &mut polys, &mut active, &mut pairs)?;
    }

    while !pairs.is_empty() {
        let (k, _) = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| p.key())
            .unwrap();
        let pair = pairs.swap_remove(k);
        stats.pairs_considered += 1;
        let s = s_polynomial(ring, &polys[pair.i], &polys[pair.j]);
        let mut divisors = Divisors::new();
        for &a in &active {
            divisors.push(lm(&polys, a), a);
        }
        let h = reduce_with(ring, &s, &polys, &divisors, &mut budget)?;
        stats.pairs_reduced += 1;
        if h.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        let h = make_monic(ring, &h);
        insert(h, &mut polys, &mut active, &mut pairs)?;
    }

    // minimal basis, then interreduce tails
    let mut minimal: Vec<Polynomial> = Vec::new();
    for &a in &active {
        let m = lm(&polys, a);
        let redundant = active.iter().any(|&b| {
            b != a && {
                let bm = lm(&polys, b);
                bm.divides(&m) && (bm != m || b < a)
            }
        });
        if !redundant {
            minimal.push(polys[a].clone());
        }
    }
    let order = ring.order();
    minimal.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let mut divisors = Divisors::new();
        for (i, g) in minimal.iter().enumerate() {
            if i != k {
                divisors.push(*g.leading_monomial().unwrap(), i);
            }
        }
        let r = reduce_with(ring, &minimal[k], &minimal, &divisors, &mut budget)?;
        reduced.push(make_monic(ring, &r));
    }
    stats.reduction_steps = budget.steps;
    Ok((
        GroebnerBasis {
            ring: ring.clone(),
            generators: reduced,
        },
        stats,
    ))
}

impl GroebnerBasis {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| *g.leading_monomial().unwrap())
            .collect()
    }

    fn divisors(&self) -> Divisors {
        let mut d = Divisors::new();
        for (i, g) in self.generators.iter().enumerate() {
            d.push(*g.leading_monomial().unwrap(), i);
        }
        d
    }

    /// The fully reduced remainder of `f`; zero iff `f` lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let mut budget = Budget {
            steps: 0,
            cap: u64::MAX,
        };
        reduce_with(&self.ring, f, &self.generators, &self.divisors(), &mut budget)
            .expect("unbounded reduction cannot exceed its budget")
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        self.divisors().find(m).is_none()
    }

    /// Number of standard monomials, i.e. the F_p-dimension of the quotient.
    pub fn quotient_dimension(&self) -> QuotientDimension {
        let n = self.ring.nvars();
        let leads = self.leading_monomials();
        if leads.iter().any(|m| m.is_one()) {
            return QuotientDimension::Finite(0);
        }
        for i in 0..n {
            if !leads.iter().any(|m| m.pure_power_var() == Some(i)) {
                return QuotientDimension::Infinite;
            }
        }
        let divisors = self.divisors();
        let mut count = 0u64;
        walk_staircase(&divisors, n, 0, Monomial::one(), &mut |_| count += 1);
        QuotientDimension::Finite(count)
    }

    /// All standard monomials in ascending monomial order, or `None` when
    /// there are infinitely many or more than `limit`.
    pub fn standard_monomials(&self, limit: usize) -> Option<Vec<Monomial>> {
        let n = self.ring.nvars();
        match self.quotient_dimension() {
            QuotientDimension::Infinite => None,
            QuotientDimension::Finite(d) if d as usize > limit => None,
            QuotientDimension::Finite(_) => {
                let divisors = self.divisors();
                let mut out = Vec::new();
                if !self.leading_monomials().iter().any(|m| m.is_one()) {
                    walk_staircase(&divisors, n, 0, Monomial::one(), &mut |m| out.push(m));
                }
                let order = self.order();
                out.sort_by(|a, b| order.cmp(a, b));
                Some(out)
            }
        }
    }

    /// Checks the defining properties: monic, reduced, and every S-polynomial
    /// reduces to zero. Returns the first violation found.
    pub fn audit(&self) -> Result<(), AuditFailure> {
        let leads = self.leading_monomials();
        for (i, g) in self.generators.iter().enumerate() {
            if g.leading_coeff() != 1 {
                return Err(AuditFailure::NotMonic(i));
            }
            for (j, m) in leads.iter().enumerate() {
                if i != j && g.terms().iter().any(|(t, _)| m.divides(t)) {
                    return Err(AuditFailure::NotReduced(i, j));
                }
            }
        }
        for i in 0..self.generators.len() {
            for j in (i + 1)..self.generators.len() {
                if leads[i].is_coprime(&leads[j]) {
                    // product criterion: always reduces to zero
                    continue;
                }
                let s = s_polynomial(&self.ring, &self.generators[i], &self.generators[j]);
                if !self.normal_form(&s).is_zero() {
                    return Err(AuditFailure::SPolynomial(i, j));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AuditFailure {
    #[error("generator {0} is not monic")]
    NotMonic(usize),
    #[error("a term of generator {0} is divisible by the leading monomial of generator {1}")]
    NotReduced(usize, usize),
    #[error("S-polynomial of generators {0} and {1} does not reduce to zero")]
    SPolynomial(usize, usize),
}

/// Depth-first walk over the standard monomials. Divisibility is monotone, so
/// each exponent loop stops at the first non-standard monomial.
fn walk_staircase(
    divisors: &Divisors,
    nvars: usize,
    var: usize,
    m: Monomial,
    visit: &mut dyn FnMut(Monomial),
) {
    debug_assert!(nvars <= MAX_VARS);
    if var == nvars {
        visit(m);
        return;
    }
    let mut cur = m;
    loop {
        if divisors.find(&cur).is_some() {
            break;
        }
        walk_staircase(divisors, nvars, var + 1, cur, visit);
        cur.set_exp(var, cur.exp(var) + 1);
    }
}
