use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::ast::{ExpoExpr, Expr, Param};
use super::DslError;
use crate::poly::{CoefficientSpec, PolyRing, Polynomial};

struct Env<'a> {
    spec: &'a CoefficientSpec,
    ring: &'a PolyRing,
    indices: Vec<(String, i64)>,
}

impl Env<'_> {
    fn param(&self, p: Param) -> i64 {
        match p {
            Param::S => self.spec.s() as i64,
            Param::P => self.spec.p() as i64,
        }
    }

    fn index(&self, name: &str) -> Option<i64> {
        self.indices.iter().rev().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    fn eval(&self, e: &ExpoExpr) -> Result<i64, DslError> {
        let overflow = || DslError::ExponentOverflow(e.to_string());
        Ok(match e {
            ExpoExpr::Int(n) => i64::try_from(*n).map_err(|_| overflow())?,
            ExpoExpr::Param(p) => self.param(*p),
            ExpoExpr::Index(name) => self
                .index(name)
                .ok_or_else(|| DslError::UnknownName(name.clone()))?,
            ExpoExpr::Add(a, b) => self.eval(a)?.checked_add(self.eval(b)?).ok_or_else(overflow)?,
            ExpoExpr::Sub(a, b) => self.eval(a)?.checked_sub(self.eval(b)?).ok_or_else(overflow)?,
            ExpoExpr::Mul(a, b) => self.eval(a)?.checked_mul(self.eval(b)?).ok_or_else(overflow)?,
            ExpoExpr::Pow(a, b) => {
                let base = self.eval(a)?;
                let exp = self.eval(b)?;
                if exp < 0 {
                    return Err(DslError::NegativeExponent {
                        expr: b.to_string(),
                        value: exp,
                    });
                }
                let exp = u32::try_from(exp).map_err(|_| overflow())?;
                base.checked_pow(exp).ok_or_else(overflow)?
            }
        })
    }

    fn poly(&mut self, e: &Expr) -> Result<Polynomial, DslError> {
        let ring = self.ring;
        Ok(match e {
            Expr::Var(name) => {
                if let Some(i) = ring.var_index(name) {
                    ring.var(i)
                } else if let Some(v) = self.index(name) {
                    ring.constant(v)
                } else if let Some(p) = Param::from_name(name) {
                    ring.constant(self.param(p))
                } else {
                    return Err(DslError::UnknownName(name.clone()));
                }
            }
            Expr::Int(n) => {
                let p = ring.field().characteristic() as u64;
                ring.constant((n % p) as i64)
            }
            Expr::Add(a, b) => {
                let x = self.poly(a)?;
                ring.add(&x, &self.poly(b)?)
            }
            Expr::Sub(a, b) => {
                let x = self.poly(a)?;
                ring.sub(&x, &self.poly(b)?)
            }
            Expr::Mul(a, b) => {
                let x = self.poly(a)?;
                if x.is_zero() {
                    // still resolve names so errors do not depend on values
                    self.poly(b)?;
                    return Ok(x);
                }
                ring.mul(&x, &self.poly(b)?)
            }
            Expr::Pow(base, exp) => {
                let x = self.poly(base)?;
                let k = self.eval(exp)?;
                if k < 0 {
                    return Err(DslError::NegativeExponent {
                        expr: exp.to_string(),
                        value: k,
                    });
                }
                if k > u16::MAX as i64 {
                    return Err(DslError::ExponentOverflow(exp.to_string()));
                }
                ring.pow(&x, k as u64)
            }
            Expr::Sum {
                index,
                lower,
                upper,
                body,
            } => {
                if ring.var_index(index).is_some()
                    || Param::from_name(index).is_some()
                    || self.index(index).is_some()
                {
                    return Err(DslError::ShadowedName(index.clone()));
                }
                let lo = self.eval(lower)?;
                let hi = self.eval(upper)?;
                let mut acc = ring.zero();
                // empty range: the sum is zero
                for i in lo..=hi {
                    self.indices.push((index.clone(), i));
                    let term = self.poly(body);
                    self.indices.pop();
                    acc = ring.add(&acc, &term?);
                }
                acc
            }
        })
    }
}

pub(super) fn instantiate(e: &Expr, spec: &CoefficientSpec, ring: &PolyRing) -> Result<Polynomial, DslError> {
    let rp = ring.field().characteristic();
    if rp != spec.p() {
        return Err(DslError::CharacteristicMismatch { ring: rp, spec: spec.p() });
    }
    Env {
        spec,
        ring,
        indices: Vec::new(),
    }
    .poly(e)
}

#[cfg(test)]
mod tests {
    use crate::dsl::{DslError, RelationTemplate};
    use crate::field::Fp;
    use crate::poly::{CoefficientSpec, MonomialOrder, PolyRing, Variable};
    use alloc::vec;

    fn ring() -> PolyRing {
        let vars = vec![
            Variable::new("a", 2),
            Variable::new("c", 2),
            Variable::new("x2", 4),
            Variable::new("v", -6),
        ];
        PolyRing::new(Fp::new(2).unwrap(), vars, MonomialOrder::Grevlex).unwrap()
    }

    fn inst(src: &str, s: u32) -> Result<alloc::string::String, DslError> {
        let r = ring();
        let t = RelationTemplate::parse(src)?;
        let f = t.instantiate(&CoefficientSpec::new(2, s).unwrap(), &r)?;
        Ok(r.to_string(&f))
    }

    #[test]
    fn power_of_s() {
        assert_eq!(inst("a^(2^s)", 2).unwrap(), "a^4");
        assert_eq!(inst("a^(2^s)", 3).unwrap(), "a^8");
    }

    #[test]
    fn sums_expand() {
        let src = "v*sum(i=1..s-1, c^(2^s-2^i)*x2^(2^(i-1)))";
        assert_eq!(inst(src, 2).unwrap(), "c^2*x2*v");
        assert_eq!(inst(src, 3).unwrap(), "c^6*x2*v + c^4*x2^2*v");
        // empty range
        assert_eq!(inst("sum(i=2..1, a)", 2).unwrap(), "0");
    }

    #[test]
    fn errors_at_instantiation() {
        assert_eq!(inst("a + q", 2), Err(DslError::UnknownName("q".into())));
        assert_eq!(inst("a^(j)", 2), Err(DslError::UnknownName("j".into())));
        assert!(matches!(
            inst("a^(s-3)", 2),
            Err(DslError::NegativeExponent { value: -1, .. })
        ));
        assert_eq!(inst("sum(a=1..2, c)", 2), Err(DslError::ShadowedName("a".into())));
        assert_eq!(inst("sum(s=1..2, c)", 2), Err(DslError::ShadowedName("s".into())));
        assert!(matches!(inst("a^(2^70)", 2), Err(DslError::ExponentOverflow(_))));
    }

    #[test]
    fn minus_folds_mod_p() {
        assert_eq!(inst("a - a", 2).unwrap(), "0");
        assert_eq!(inst("3*a - c", 2).unwrap(), "a + c");
        assert_eq!(inst("sum(i=1..3, i*a)", 2).unwrap(), "0");
    }
}
