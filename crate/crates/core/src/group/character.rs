use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{Group, GroupError, Subgroup};

/// An exact element of `Z[zeta_m]`, stored as its coefficient vector in the
/// basis `1, zeta, ..., zeta^(phi(m)-1)` after reduction modulo the
/// cyclotomic polynomial. Equal values have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicSum {
    m: u32,
    coeffs: Vec<i64>,
}

/// Integer coefficients of the m-th cyclotomic polynomial, lowest first.
fn cyclotomic_poly(m: u32) -> Vec<i64> {
    // x^m - 1 divided by Phi_d for all proper divisors d
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            num = exact_div(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len() - dd];
    for k in (0..q.len()).rev() {
        let c = r[k + dd];
        q[k] = c;
        for (i, &d) in den.iter().enumerate() {
            r[k + i] -= c * d;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

impl CyclotomicSum {
    pub fn zero(m: u32) -> Self {
        Self::from_exponent_counts(m, &vec![0; m as usize])
    }

    /// `zeta_m^k`.
    pub fn root(m: u32, k: u32) -> Self {
        let mut counts = vec![0i64; m as usize];
        counts[(k % m) as usize] = 1;
        Self::from_exponent_counts(m, &counts)
    }

    /// `sum_k counts[k] * zeta_m^k`.
    pub fn from_exponent_counts(m: u32, counts: &[i64]) -> Self {
        assert!(m >= 1 && counts.len() == m as usize);
        let phi = cyclotomic_poly(m);
        let deg = phi.len() - 1;
        let mut r = counts.to_vec();
        for k in (deg..r.len()).rev() {
            let c = r[k];
            if c != 0 {
                for (i, &d) in phi.iter().enumerate() {
                    r[k - deg + i] -= c * d;
                }
            }
        }
        r.truncate(deg);
        CyclotomicSum { m, coeffs: r }
    }

    pub fn modulus(&self) -> u32 {
        self.m
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        if self.coeffs.iter().skip(1).all(|&c| c == 0) {
            Some(self.coeffs.first().copied().unwrap_or(0))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "cyclotomic sums over different roots of unity");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        CyclotomicSum { m: self.m, coeffs }
    }
}

impl fmt::Display for CyclotomicSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => write!(f, "z{}^{k}", self.m)?,
                _ => write!(f, "{a}*z{}^{k}", self.m)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A linear character of a subgroup with values in the m-th roots of unity:
/// `chi(h) = zeta_m^e(h)`.
#[derive(Clone, Debug)]
pub struct Character<'g> {
    subgroup: Subgroup<'g>,
    m: u32,
    /// Indexed by parent element; entries outside the subgroup are unused.
    exponents: Vec<u32>,
}

impl<'g> Character<'g> {
    /// Extends prescribed values on generators of `subgroup` multiplicatively.
    /// Fails if the values are not consistent with a homomorphism or the
    /// generators do not generate the subgroup.
    pub fn from_generators(subgroup: Subgroup<'g>, m: u32, values: &[(u32, u32)]) -> Result<Self, GroupError> {
        if m == 0 {
            return Err(GroupError::NotACharacter("root-of-unity order must be positive".into()));
        }
        let g = subgroup.parent();
        let unset = u32::MAX;
        let mut exps = vec![unset; g.order()];
        exps[0] = 0;
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            for &(s, e) in values {
                if !subgroup.contains(s) {
                    return Err(GroupError::NotACharacter(alloc::format!(
                        "element {} is not in the subgroup",
                        g.element_word(s)
                    )));
                }
                let y = g.mul(x, s);
                let v = (exps[x as usize] + e % m) % m;
                if exps[y as usize] == unset {
                    exps[y as usize] = v;
                    queue.push_back(y);
                } else if exps[y as usize] != v {
                    return Err(GroupError::NotACharacter(alloc::format!(
                        "values are not multiplicative at {}",
                        g.element_word(y)
                    )));
                }
            }
        }
        if subgroup.elements().iter().any(|&h| exps[h as usize] == unset) {
            return Err(GroupError::NotACharacter("the listed elements do not generate the subgroup".into()));
        }
        Ok(Character {
            subgroup,
            m,
            exponents: exps,
        })
    }

    pub fn trivial(subgroup: Subgroup<'g>) -> Self {
        let n = subgroup.parent().order();
        Character {
            subgroup,
            m: 1,
            exponents: vec![0; n],
        }
    }

    pub fn subgroup(&self) -> &Subgroup<'g> {
        &self.subgroup
    }

    pub fn value_order(&self) -> u32 {
        self.m
    }

    /// The exponent `e(h)` with `chi(h) = zeta_m^e(h)`.
    pub fn exponent(&self, h: u32) -> Option<u32> {
        self.subgroup.contains(h).then(|| self.exponents[h as usize])
    }

    pub fn is_multiplicative(&self) -> bool {
        let g = self.subgroup.parent();
        let hs = self.subgroup.elements();
        hs.iter().all(|&x| {
            hs.iter().all(|&y| {
                self.exponents[g.mul(x, y) as usize] == (self.exponents[x as usize] + self.exponents[y as usize]) % self.m
            })
        })
    }
}

/// A function on the parent group with exact cyclotomic values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    values: Vec<CyclotomicSum>,
}

impl ClassFunction {
    pub fn value(&self, g: u32) -> &CyclotomicSum {
        &self.values[g as usize]
    }

    pub fn values(&self) -> &[CyclotomicSum] {
        &self.values
    }

    pub fn degree(&self) -> i64 {
        self.values[0].as_integer().expect("value at the identity is an integer")
    }

    pub fn is_class_function(&self, g: &Group) -> bool {
        g.elements()
            .all(|x| g.generators().iter().all(|&t| self.values[g.conj(x, t) as usize] == self.values[x as usize]))
    }
}

/// `Ind(chi)(g) = sum over coset reps t with t^-1 g t in H of chi(t^-1 g t)`.
pub fn induce_character(chi: &Character<'_>) -> ClassFunction {
    let h = chi.subgroup();
    let g = h.parent();
    let m = chi.m;
    let values = g
        .elements()
        .map(|x| {
            let mut counts = vec![0i64; m as usize];
            for &t in h.coset_reps() {
                let y = g.conj(x, t);
                if h.contains(y) {
                    counts[chi.exponents[y as usize] as usize] += 1;
                }
            }
            CyclotomicSum::from_exponent_counts(m, &counts)
        })
        .collect();
    ClassFunction { values }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| alloc::format!("{v}")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::group::{build_group, conjugacy_classes, g36_spec, subgroup_generated, GroupConfig};

    #[test]
    fn cyclotomic_canonical_form() {
        assert_eq!(cyclotomic_poly(1), [-1, 1]);
        assert_eq!(cyclotomic_poly(4), [1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), [1, -1, 1]);
        // i + (-i) = 0
        let i = CyclotomicSum::root(4, 1);
        let minus_i = CyclotomicSum::root(4, 3);
        assert!(i.add(&minus_i).is_zero());
        // 1 + w + w^2 = 0 for a primitive cube root
        let s = CyclotomicSum::from_exponent_counts(3, &[1, 1, 1]);
        assert!(s.is_zero());
        assert_eq!(CyclotomicSum::root(2, 1).as_integer(), Some(-1));
        assert_eq!(CyclotomicSum::from_exponent_counts(4, &[0, 2, 1, 0]).to_string(), "-1 + 2*z4^1");
    }

    #[test]
    fn induced_from_maximal_abelian_subgroup() {
        let cfg = GroupConfig::default();
        let g = build_group(&g36_spec(), &cfg).unwrap();
        let (a, b, c) = (g.generator("a").unwrap(), g.generator("b").unwrap(), g.generator("c").unwrap());
        let a2 = g.mul(a, a);
        let h = subgroup_generated(&g, &[b, a2, c]);
        let lambda = Character::from_generators(h.clone(), 4, &[(b, 1), (a2, 0), (c, 0)]).unwrap();
        assert!(lambda.is_multiplicative());
        let ind = induce_character(&lambda);
        assert_eq!(ind.degree(), 2);
        assert!(ind.value(b).is_zero());
        assert!(ind.is_class_function(&g));
        // direct summation with coset reps {1, a}
        let direct = CyclotomicSum::root(4, lambda.exponent(b).unwrap())
            .add(&CyclotomicSum::root(4, lambda.exponent(g.conj(b, a)).unwrap()));
        assert_eq!(*ind.value(b), direct);

        let triv = induce_character(&Character::trivial(h.clone()));
        for x in g.elements() {
            let expected = if h.contains(x) { 2 } else { 0 };
            assert_eq!(triv.value(x).as_integer(), Some(expected));
        }
        // constant on classes
        for class in conjugacy_classes(&g) {
            assert!(class.iter().all(|&x| ind.value(x) == ind.value(class[0])));
        }
    }

    #[test]
    fn inconsistent_values_are_rejected() {
        let cfg = GroupConfig::default();
        let g = build_group(&g36_spec(), &cfg).unwrap();
        let b = g.generator("b").unwrap();
        let h = subgroup_generated(&g, &[b]);
        // b has order 4, so chi(b) cannot be a primitive 8th root
        assert!(Character::from_generators(h, 8, &[(b, 1)]).is_err());
    }
}
