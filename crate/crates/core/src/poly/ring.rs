use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write};

use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use super::PolyError;
use crate::field::Fp;

/// A graded polynomial variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub degree: i64,
}

impl Variable {
    pub fn new(name: impl Into<String>, degree: i64) -> Self {
        Variable {
            name: name.into(),
            degree,
        }
    }
}

/// A sparse polynomial over F_p.
///
/// Terms are kept sorted in strictly descending order under the owning ring's
/// monomial order, with no zero coefficients. A `Polynomial` does not carry its
/// ring; every operation goes through a [`PolyRing`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn leading_term(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> u32 {
        self.terms.first().map_or(0, |t| t.1)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(i) > 0)
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coeff(&self, m: &Monomial) -> u32 {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map_or(0, |(_, c)| *c)
    }

    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, u32)>) -> Self {
        Polynomial { terms }
    }
}

/// Degree structure of a polynomial under the ring's grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(i64),
    /// Distinct degrees present, ascending.
    Mixed(Vec<i64>),
}

impl Homogeneity {
    pub fn is_homogeneous(&self) -> bool {
        !matches!(self, Homogeneity::Mixed(_))
    }
}

/// A binding whose degree disagrees with the variable it replaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeMismatch {
    pub variable: String,
    pub expected: i64,
    pub found: Homogeneity,
}

/// Result of [`PolyRing::substitute`]: the substituted polynomial plus the
/// degree-mismatch warnings raised along the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substituted {
    pub poly: Polynomial,
    pub mismatches: Vec<DegreeMismatch>,
}

/// F_p[x_0, ..., x_{n-1}] with a grading and a monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: Fp,
    vars: Vec<Variable>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: Fp, vars: Vec<Variable>, order: MonomialOrder) -> Result<Self, PolyError> {
        if vars.len() > MAX_VARS {
            return Err(PolyError::TooManyVariables(vars.len()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].iter().any(|w| w.name == v.name) {
                return Err(PolyError::DuplicateVariable(v.name.clone()));
            }
        }
        Ok(PolyRing { field, vars, order })
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    /// Same variables and field under another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        PolyRing {
            order,
            ..self.clone()
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        self.term(Monomial::one(), self.field.from_i64(c))
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars(), "variable index out of range");
        self.term(Monomial::var(i, 1), 1)
    }

    pub fn term(&self, m: Monomial, c: u32) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial::from_sorted_unchecked(alloc::vec![(m, c)])
        }
    }

    /// Builds a polynomial from unsorted terms, combining duplicates.
    pub fn from_terms<I>(&self, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Monomial, u32)>,
    {
        let mut v: Vec<(Monomial, u32)> = terms.into_iter().collect();
        self.normalize(&mut v);
        Polynomial::from_sorted_unchecked(v)
    }

    fn normalize(&self, v: &mut Vec<(Monomial, u32)>) {
        let order = self.order;
        v.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(v.len());
        for (m, c) in v.drain(..) {
            let c = c % self.field.characteristic();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = self.field.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        *v = out;
    }

    /// Re-sorts a polynomial produced under a different order of the same variables.
    pub fn reorder(&self, f: &Polynomial) -> Polynomial {
        self.from_terms(f.terms().iter().copied())
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_scaled(f, g, 1, &Monomial::one())
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_scaled(f, g, self.field.neg(1), &Monomial::one())
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.scale(f, self.field.neg(1))
    }

    pub fn scale(&self, f: &Polynomial, c: u32) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial::from_sorted_unchecked(
            f.terms
                .iter()
                .map(|&(m, a)| (m, self.field.mul(a, c)))
                .collect(),
        )
    }

    /// `f * c * m`.
    pub fn mul_term(&self, f: &Polynomial, m: &Monomial, c: u32) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 {
            return Polynomial::zero();
        }
        // multiplication by a monomial preserves any admissible order
        Polynomial::from_sorted_unchecked(
            f.terms
                .iter()
                .map(|(t, a)| (t.mul(m), self.field.mul(*a, c)))
                .collect(),
        )
    }

    /// `f + c * m * g` by a single merge pass.
    pub fn add_scaled(&self, f: &Polynomial, g: &Polynomial, c: u32, m: &Monomial) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 || g.is_zero() {
            return f.clone();
        }
        let fp = self.field;
        let (a, b) = (&f.terms, &g.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let bm = b[j].0.mul(m);
            match self.order.cmp(&a[i].0, &bm) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm, fp.mul(b[j].1, c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = fp.add(a[i].1, fp.mul(b[j].1, c));
                    if s != 0 {
                        out.push((bm, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(t, x)| (t.mul(m), fp.mul(*x, c))));
        Polynomial::from_sorted_unchecked(out)
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        if f.is_zero() || g.is_zero() {
            return Polynomial::zero();
        }
        let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        if small.len() == 1 {
            let (m, c) = small.terms[0];
            return self.mul_term(large, &m, c);
        }
        let mut v = Vec::with_capacity(f.len() * g.len());
        for (m1, c1) in &f.terms {
            for (m2, c2) in &g.terms {
                v.push((m1.mul(m2), self.field.mul(*c1, *c2)));
            }
        }
        self.normalize(&mut v);
        Polynomial::from_sorted_unchecked(v)
    }

    /// `f^p`, which in characteristic p acts termwise.
    pub fn frobenius(&self, f: &Polynomial) -> Polynomial {
        let p = self.field.characteristic();
        // c^p = c in F_p and m -> m^p preserves the order
        Polynomial::from_sorted_unchecked(f.terms.iter().map(|(m, c)| (m.pow(p), *c)).collect())
    }

    pub fn pow(&self, f: &Polynomial, e: u64) -> Polynomial {
        if e == 0 {
            return self.one();
        }
        if f.len() == 1 {
            let (m, c) = f.terms[0];
            let e32 = u32::try_from(e).expect("exponent overflow");
            return self.term(m.pow(e32), self.field.pow(c, e));
        }
        let p = self.field.characteristic() as u64;
        if e % p == 0 {
            return self.frobenius(&self.pow(f, e / p));
        }
        let half = self.pow(f, e / 2);
        let sq = self.mul(&half, &half);
        if e % 2 == 1 {
            self.mul(&sq, f)
        } else {
            sq
        }
    }

    /// Simultaneous substitution `x_i -> binding_i`.
    ///
    /// Bindings whose degree differs from the replaced variable's declared
    /// degree are still applied; each is reported in `mismatches` and logged.
    pub fn substitute(&self, f: &Polynomial, bindings: &[(usize, Polynomial)]) -> Substituted {
        let mut mismatches = Vec::new();
        for (i, b) in bindings {
            let expected = self.vars[*i].degree;
            let found = self.homogeneity(b);
            let ok = match found {
                Homogeneity::Zero => true,
                Homogeneity::Homogeneous(d) => d == expected,
                Homogeneity::Mixed(_) => false,
            };
            if !ok {
                log::warn!(
                    "binding for {} has degree {:?}, expected {}",
                    self.vars[*i].name,
                    found,
                    expected
                );
                mismatches.push(DegreeMismatch {
                    variable: self.vars[*i].name.clone(),
                    expected,
                    found,
                });
            }
        }
        if bindings.is_empty() {
            return Substituted {
                poly: f.clone(),
                mismatches,
            };
        }
        // per binding, cache of computed powers
        let mut cache: Vec<Vec<(u16, Polynomial)>> = alloc::vec![Vec::new(); bindings.len()];
        let mut acc: Vec<(Monomial, u32)> = Vec::new();
        for (m, c) in &f.terms {
            let mut rest = *m;
            let mut prod = self.term(Monomial::one(), *c);
            for (k, (i, b)) in bindings.iter().enumerate() {
                let e = m.exp(*i);
                rest.set_exp(*i, 0);
                if e == 0 {
                    continue;
                }
                let pw = match cache[k].iter().find(|(x, _)| *x == e) {
                    Some((_, p)) => p.clone(),
                    None => {
                        let p = self.pow(b, e as u64);
                        cache[k].push((e, p.clone()));
                        p
                    }
                };
                prod = self.mul(&prod, &pw);
                if prod.is_zero() {
                    break;
                }
            }
            acc.extend(prod.terms.into_iter().map(|(t, x)| (t.mul(&rest), x)));
        }
        Substituted {
            poly: self.from_terms(acc),
            mismatches,
        }
    }

    /// Sets variable `i` to the constant `c`.
    pub fn specialize(&self, f: &Polynomial, i: usize, c: i64) -> Polynomial {
        let c = self.field.from_i64(c);
        self.from_terms(f.terms.iter().map(|(m, a)| {
            let e = m.exp(i);
            let mut m2 = *m;
            m2.set_exp(i, 0);
            (m2, self.field.mul(*a, self.field.pow(c, e as u64)))
        }))
    }

    /// Moves `f` into `target`, sending variable `i` to `mapping[i]`.
    /// Fails if `f` involves a variable mapped to `None`.
    pub fn map_into(
        &self,
        f: &Polynomial,
        target: &PolyRing,
        mapping: &[Option<usize>],
    ) -> Result<Polynomial, PolyError> {
        let mut terms = Vec::with_capacity(f.len());
        for (m, c) in &f.terms {
            let mut t = Monomial::one();
            for i in 0..self.nvars() {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                match mapping.get(i).copied().flatten() {
                    Some(j) => t.set_exp(j, t.exp(j) + e),
                    None => return Err(PolyError::UnmappedVariable(self.vars[i].name.clone())),
                }
            }
            terms.push((t, *c));
        }
        Ok(target.from_terms(terms))
    }

    /// Mapping by variable name into `target`, for [`PolyRing::map_into`].
    pub fn name_mapping(&self, target: &PolyRing) -> Vec<Option<usize>> {
        self.vars.iter().map(|v| target.var_index(&v.name)).collect()
    }

    pub fn monomial_degree(&self, m: &Monomial) -> i64 {
        self.vars
            .iter()
            .enumerate()
            .map(|(i, v)| m.exp(i) as i64 * v.degree)
            .sum()
    }

    pub fn homogeneity(&self, f: &Polynomial) -> Homogeneity {
        let mut degs: Vec<i64> = f.terms.iter().map(|(m, _)| self.monomial_degree(m)).collect();
        degs.sort_unstable();
        degs.dedup();
        match degs.len() {
            0 => Homogeneity::Zero,
            1 => Homogeneity::Homogeneous(degs[0]),
            _ => Homogeneity::Mixed(degs),
        }
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for (i, v) in self.vars.iter().enumerate() {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(&v.name);
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    /// Renders `f` in the relation-language syntax, e.g. `a^2*c + a*c^2`.
    pub fn display<'a>(&'a self, f: &'a Polynomial) -> DisplayPoly<'a> {
        DisplayPoly { ring: self, poly: f }
    }
}

pub struct DisplayPoly<'a> {
    ring: &'a PolyRing,
    poly: &'a Polynomial,
}

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if *c == 1 {
                f.write_str(&self.ring.fmt_monomial(m))?;
            } else {
                write!(f, "{}*{}", c, self.ring.fmt_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl PolyRing {
    pub fn to_string(&self, f: &Polynomial) -> String {
        self.display(f).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ring2() -> PolyRing {
        let vars = ["b", "c", "x1", "x2", "v"]
            .iter()
            .zip([2, 2, 2, 4, -6])
            .map(|(n, d)| Variable::new(*n, d))
            .collect();
        PolyRing::new(Fp::new(2).unwrap(), vars, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn frobenius_in_char_two() {
        let r = ring2();
        let (c, x1) = (r.var(1), r.var(2));
        let s = r.add(&c, &x1);
        let sq = r.mul(&s, &s);
        assert_eq!(sq, r.add(&r.mul(&c, &c), &r.mul(&x1, &x1)));
        assert_eq!(r.pow(&s, 2), sq);
        assert_eq!(r.mul(&s, &r.one()), s);
    }

    #[test]
    fn square_of_c2_plus_bc() {
        let r = ring2();
        let (b, c) = (r.var(0), r.var(1));
        let f = r.add(&r.mul(&c, &c), &r.mul(&b, &c));
        let expected = r.add(&r.pow(&c, 4), &r.mul(&r.pow(&b, 2), &r.pow(&c, 2)));
        assert_eq!(r.pow(&f, 2), expected);
        assert_eq!(r.to_string(&expected), "b^2*c^2 + c^4");
    }

    #[test]
    fn substitute_x1_squared() {
        let r = ring2();
        let x1 = r.var(2);
        let f = r.mul(&x1, &x1);
        let binding = r.add(&r.var(0), &r.mul(&r.var(4), &r.pow(&r.var(3), 2)));
        let out = r.substitute(&f, &[(2, binding)]);
        assert!(out.mismatches.is_empty());
        let expected = r.add(
            &r.pow(&r.var(0), 2),
            &r.mul(&r.pow(&r.var(4), 2), &r.pow(&r.var(3), 4)),
        );
        assert_eq!(out.poly, expected);
    }

    #[test]
    fn substitute_identity_and_mismatch() {
        let r = ring2();
        let f = r.add(&r.var(0), &r.pow(&r.var(2), 3));
        assert_eq!(r.substitute(&f, &[(2, r.var(2))]).poly, f);
        // x1 has degree 2, x2 has degree 4
        let out = r.substitute(&f, &[(2, r.var(3))]);
        assert_eq!(out.mismatches.len(), 1);
        assert_eq!(out.mismatches[0].found, Homogeneity::Homogeneous(4));
        assert_eq!(out.poly, r.add(&r.var(0), &r.pow(&r.var(3), 3)));
    }

    #[test]
    fn homogeneity_with_negative_degree() {
        let r = ring2();
        // b + v*x2^2 has degree 2 since deg v = -6
        let f = r.add(&r.var(0), &r.mul(&r.var(4), &r.pow(&r.var(3), 2)));
        assert_eq!(r.homogeneity(&f), Homogeneity::Homogeneous(2));
        let g = r.add(&f, &r.var(3));
        assert_eq!(r.homogeneity(&g), Homogeneity::Mixed(vec![2, 4]));
    }

    #[test]
    fn specialize_and_map() {
        let r = ring2();
        let f = r.add(&r.var(0), &r.mul(&r.var(4), &r.pow(&r.var(3), 2)));
        let g = r.specialize(&f, 4, 1);
        let target = PolyRing::new(
            r.field(),
            vec![Variable::new("b", 2), Variable::new("x2", 4)],
            MonomialOrder::Grevlex,
        )
        .unwrap();
        let h = r.map_into(&g, &target, &r.name_mapping(&target)).unwrap();
        assert_eq!(target.to_string(&h), "x2^2 + b");
        assert!(r.map_into(&f, &target, &r.name_mapping(&target)).is_err());
    }

    #[test]
    fn subtraction_mod_three() {
        let r = PolyRing::new(Fp::new(3).unwrap(), vec![Variable::new("x", 1)], MonomialOrder::Lex)
            .unwrap();
        let x = r.var(0);
        let f = r.sub(&r.zero(), &x);
        assert_eq!(r.to_string(&f), "2*x");
        assert!(r.add(&f, &x).is_zero());
        // (x+1)^3 = x^3 + 1
        let g = r.pow(&r.add(&x, &r.one()), 3);
        assert_eq!(r.to_string(&g), "x^3 + 1");
    }
}
