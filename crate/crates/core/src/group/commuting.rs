use alloc::vec;
use alloc::vec::Vec;

use super::{Group, GroupConfig, GroupError};

/// How [`commuting_tuple_class_count`] chose to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChiStrategy {
    /// Every s-tuple enumerated, orbits counted by Burnside's lemma.
    Naive,
    /// Class representatives chained through centralizers.
    Chained,
}

fn check_s(s: u32) -> Result<(), GroupError> {
    if s == 0 {
        return Err(GroupError::InvalidInput("tuple length s must be positive".into()));
    }
    Ok(())
}

/// Number of orbits of pairwise-commuting s-tuples under simultaneous
/// conjugation. Enumerates all `|G|^s` tuples when that fits
/// `config.tuple_budget`, and otherwise uses
/// `chi_s(G) = sum over class reps g of chi_{s-1}(C_G(g))`.
pub fn commuting_tuple_class_count(g: &Group, s: u32, config: &GroupConfig) -> Result<(u64, ChiStrategy), GroupError> {
    check_s(s)?;
    let tuples = (g.order() as u128).saturating_pow(s);
    if tuples <= config.tuple_budget as u128 {
        commuting_tuple_class_count_naive(g, s, config).map(|n| (n, ChiStrategy::Naive))
    } else {
        chained(g, s, config).map(|n| (n, ChiStrategy::Chained))
    }
}

/// Direct enumeration of all `|G|^s` tuples. Fails if that exceeds the
/// budget.
pub fn commuting_tuple_class_count_naive(g: &Group, s: u32, config: &GroupConfig) -> Result<u64, GroupError> {
    check_s(s)?;
    let n = g.order();
    let tuples = (n as u128).saturating_pow(s);
    if tuples > config.tuple_budget as u128 {
        return Err(GroupError::BudgetExceeded {
            attempted: tuples,
            limit: config.tuple_budget,
        });
    }
    log::debug!("enumerating {tuples} tuples");
    // Burnside: orbits = (1/|G|) * sum over commuting tuples of |C(tuple)|
    let mut total: u128 = 0;
    let mut tuple = vec![0u32; s as usize];
    'outer: loop {
        let commuting = (0..tuple.len()).all(|i| (0..i).all(|j| g.commutes(tuple[i], tuple[j])));
        if commuting {
            let cent = g.elements().filter(|&t| tuple.iter().all(|&x| g.commutes(x, t))).count();
            total += cent as u128;
        }
        for slot in tuple.iter_mut() {
            *slot += 1;
            if (*slot as usize) < n {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    debug_assert_eq!(total % n as u128, 0);
    u64::try_from(total / n as u128).map_err(|_| GroupError::InvalidInput("count overflows u64".into()))
}

struct Chain<'a> {
    g: &'a Group,
    nodes: u64,
    limit: u64,
}

impl Chain<'_> {
    /// chi_k of the subgroup with the given elements.
    fn count(&mut self, sub: &[u32], k: u32) -> Result<u64, GroupError> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(GroupError::BudgetExceeded {
                attempted: self.nodes as u128,
                limit: self.limit,
            });
        }
        if k == 0 {
            return Ok(1);
        }
        let g = self.g;
        let abelian = sub.iter().all(|&a| sub.iter().all(|&b| g.commutes(a, b)));
        if abelian {
            return (sub.len() as u64)
                .checked_pow(k)
                .ok_or_else(|| GroupError::InvalidInput("count overflows u64".into()));
        }
        let mut in_sub = vec![false; g.order()];
        for &x in sub {
            in_sub[x as usize] = true;
        }
        let mut seen = vec![false; g.order()];
        let mut total = 0u64;
        for &x in sub {
            if seen[x as usize] {
                continue;
            }
            for &t in sub {
                seen[g.conj(x, t) as usize] = true;
            }
            let cent: Vec<u32> = sub.iter().copied().filter(|&y| g.commutes(x, y)).collect();
            total = total
                .checked_add(self.count(&cent, k - 1)?)
                .ok_or_else(|| GroupError::InvalidInput("count overflows u64".into()))?;
        }
        Ok(total)
    }
}

fn chained(g: &Group, s: u32, config: &GroupConfig) -> Result<u64, GroupError> {
    let all: Vec<u32> = g.elements().collect();
    let mut chain = Chain {
        g,
        nodes: 0,
        limit: config.tuple_budget,
    };
    chain.count(&all, s)
}

/// Centralizer chaining regardless of the tuple count.
pub fn commuting_tuple_class_count_chained(g: &Group, s: u32, config: &GroupConfig) -> Result<u64, GroupError> {
    check_s(s)?;
    chained(g, s, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, conjugacy_classes, direct_product, g36_spec, GroupSpec};

    fn cfg() -> GroupConfig {
        GroupConfig::default()
    }

    #[test]
    fn abelian_counts_are_powers() {
        let c2 = build_group(&GroupSpec::cyclic(2), &cfg()).unwrap();
        let v = direct_product(&c2, &c2, &cfg()).unwrap();
        assert_eq!(commuting_tuple_class_count(&v, 2, &cfg()).unwrap().0, 16);
        for s in 1..=3 {
            assert_eq!(commuting_tuple_class_count_naive(&v, s, &cfg()).unwrap(), 4u64.pow(s));
            assert_eq!(commuting_tuple_class_count_chained(&v, s, &cfg()).unwrap(), 4u64.pow(s));
        }
    }

    #[test]
    fn s_one_counts_classes() {
        let g = build_group(&g36_spec(), &cfg()).unwrap();
        let k = conjugacy_classes(&g).len() as u64;
        assert_eq!(commuting_tuple_class_count_naive(&g, 1, &cfg()).unwrap(), k);
        assert_eq!(commuting_tuple_class_count_chained(&g, 1, &cfg()).unwrap(), k);
    }

    #[test]
    fn strategies_agree_on_g36() {
        let g = build_group(&g36_spec(), &cfg()).unwrap();
        for s in 2..=3 {
            assert_eq!(
                commuting_tuple_class_count_naive(&g, s, &cfg()).unwrap(),
                commuting_tuple_class_count_chained(&g, s, &cfg()).unwrap()
            );
        }
        let small = GroupConfig {
            tuple_budget: 1000,
            ..cfg()
        };
        assert_eq!(
            commuting_tuple_class_count_naive(&g, 2, &small),
            Err(GroupError::BudgetExceeded {
                attempted: 1024,
                limit: 1000
            })
        );
        let (n, how) = commuting_tuple_class_count(&g, 2, &small).unwrap();
        assert_eq!(how, ChiStrategy::Chained);
        assert_eq!(n, commuting_tuple_class_count_naive(&g, 2, &cfg()).unwrap());
    }

    #[test]
    fn zero_length_tuples_are_rejected() {
        let g = build_group(&GroupSpec::cyclic(2), &cfg()).unwrap();
        assert!(commuting_tuple_class_count(&g, 0, &cfg()).is_err());
    }
}
