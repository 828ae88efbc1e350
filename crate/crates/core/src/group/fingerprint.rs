use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::structure::abelian_type;
use super::{abelian_invariants, center, conjugacy_classes, quotient, Group, GroupConfig};

/// Isomorphism invariants. Equal fingerprints are necessary, not sufficient,
/// for isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub order: u64,
    pub exponent: u64,
    pub abelianization: Vec<u64>,
    pub center: Vec<u64>,
    pub central_quotient_order: u64,
    /// Type of `G/Z` when it is abelian.
    pub central_quotient: Option<Vec<u64>>,
    pub central_quotient_abelianization: Vec<u64>,
    /// Sorted conjugacy class sizes.
    pub class_sizes: Vec<u64>,
    /// `(element order, count)`, ascending.
    pub order_histogram: Vec<(u64, u64)>,
    pub squares: u64,
}

pub fn fingerprint(g: &Group) -> Fingerprint {
    let config = GroupConfig::default();
    let z = center(g);
    let zg = z.to_group(&config).expect("the centre is a group");
    let q = quotient(&z, &config).expect("the centre is normal");
    let mut class_sizes: Vec<u64> = conjugacy_classes(g).iter().map(|c| c.len() as u64).collect();
    class_sizes.sort_unstable();
    let mut hist = BTreeMap::new();
    for x in g.elements() {
        *hist.entry(g.element_order(x)).or_insert(0u64) += 1;
    }
    let mut squares: Vec<u32> = g.elements().map(|x| g.mul(x, x)).collect();
    squares.sort_unstable();
    squares.dedup();
    Fingerprint {
        order: g.order() as u64,
        exponent: g.exponent(),
        abelianization: abelian_invariants(g, &config).expect("abelianization"),
        center: abelian_type(&zg).expect("the centre is abelian"),
        central_quotient_order: q.order() as u64,
        central_quotient: abelian_type(&q),
        central_quotient_abelianization: abelian_invariants(&q, &config).expect("abelianization"),
        class_sizes,
        order_histogram: hist.into_iter().collect(),
        squares: squares.len() as u64,
    }
}
