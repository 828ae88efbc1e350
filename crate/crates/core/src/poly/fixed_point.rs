use alloc::vec::Vec;

use super::groebner::GroebnerBasis;
use super::ring::Polynomial;
use super::PolyError;

/// A solution of `var = E(var, ...)` modulo a reducer ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPoint {
    pub value: Polynomial,
    /// Iterates `var_0, var_1, ...` up to and including the fixed point.
    pub iterates: Vec<Polynomial>,
}

/// Solves the implicit equation `var = equation(var)` by iterating
/// `var_{k+1} = NF(equation(var_k))` from `var_0 = NF(equation(0))`.
///
/// `reducers` must live in the same ring as `equation` and must not involve
/// `var`. Converges when `var` only occurs in terms that are pushed deeper
/// into the nilpotent part of the quotient by each substitution.
pub fn solve_fixed_point(
    var: usize,
    equation: &Polynomial,
    reducers: &GroebnerBasis,
    max_iter: usize,
) -> Result<FixedPoint, PolyError> {
    let ring = reducers.ring();
    let step = |x: &Polynomial| reducers.normal_form(&ring.substitute(equation, &[(var, x.clone())]).poly);
    let mut cur = step(&ring.zero());
    let mut iterates = alloc::vec![cur.clone()];
    for _ in 0..max_iter {
        let next = step(&cur);
        iterates.push(next.clone());
        if next == cur {
            return Ok(FixedPoint { value: cur, iterates });
        }
        cur = next;
    }
    Err(PolyError::NoStabilization {
        var: ring.variables()[var].name.clone(),
        iterations: max_iter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::poly::{buchberger, GroebnerConfig, MonomialOrder, PolyRing, Variable};
    use alloc::vec;

    fn ring() -> PolyRing {
        let vars = vec![
            Variable::new("b", 2),
            Variable::new("c", 2),
            Variable::new("x2", 4),
            Variable::new("x1", 2),
            Variable::new("v", -6),
        ];
        PolyRing::new(Fp::new(2).unwrap(), vars, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn no_recursion_is_one_step() {
        let r = ring();
        let (gb, _) = buchberger(&r, &[r.pow(&r.var(0), 4)], &GroebnerConfig::default()).unwrap();
        let fp = solve_fixed_point(3, &r.var(0), &gb, 8).unwrap();
        assert_eq!(fp.value, r.var(0));
        assert_eq!(fp.iterates.len(), 2);
    }

    #[test]
    fn runaway_iteration_is_reported() {
        let r = ring();
        // x1 = x1^2 + b with nothing nilpotent: b, b+b^2, ... grows forever
        let eq = r.add(&r.pow(&r.var(3), 2), &r.var(0));
        let (gb, _) = buchberger(&r, &[r.pow(&r.var(1), 4)], &GroebnerConfig::default()).unwrap();
        assert!(matches!(
            solve_fixed_point(3, &eq, &gb, 8),
            Err(PolyError::NoStabilization { iterations: 8, .. })
        ));
    }
}
