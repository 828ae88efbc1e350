use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::build::small_generating_set;
use super::{center, conjugacy_classes, derived_subgroup, fingerprint, Group, GroupConfig, GroupError};

/// Per-element invariants preserved by every isomorphism.
fn signatures(g: &Group) -> Vec<[u64; 5]> {
    let n = g.order();
    let mut class_size = vec![0u64; n];
    for class in conjugacy_classes(g) {
        for &x in &class {
            class_size[x as usize] = class.len() as u64;
        }
    }
    let mut roots = vec![0u64; n];
    for x in g.elements() {
        roots[g.mul(x, x) as usize] += 1;
    }
    let z = center(g);
    let d = derived_subgroup(g);
    g.elements()
        .map(|x| {
            let mut k = 1;
            let mut y = x;
            while !z.contains(y) {
                y = g.mul(y, x);
                k += 1;
            }
            [
                g.element_order(x),
                class_size[x as usize],
                roots[x as usize],
                k,
                d.contains(x) as u64,
            ]
        })
        .collect()
}

struct Search<'a> {
    g1: &'a Group,
    g2: &'a Group,
    gens: Vec<u32>,
    candidates: Vec<Vec<u32>>,
    images: Vec<u32>,
}

impl Search<'_> {
    /// Extends the assignment of the first `images.len()` generators to the
    /// subgroup they generate. `None` if it is not an injective
    /// homomorphism there.
    fn extend(&self) -> Option<Vec<u32>> {
        let unset = u32::MAX;
        let mut map = vec![unset; self.g1.order()];
        let mut used = vec![false; self.g2.order()];
        map[0] = 0;
        used[0] = true;
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            let fx = map[x as usize];
            for (&s, &t) in self.gens.iter().zip(&self.images) {
                let y = self.g1.mul(x, s);
                let fy = self.g2.mul(fx, t);
                let cur = map[y as usize];
                if cur == unset {
                    if core::mem::replace(&mut used[fy as usize], true) {
                        return None;
                    }
                    map[y as usize] = fy;
                    queue.push_back(y);
                } else if cur != fy {
                    return None;
                }
            }
        }
        Some(map)
    }

    fn run(&mut self) -> Option<Vec<u32>> {
        let k = self.images.len();
        if k == self.gens.len() {
            return self.extend();
        }
        for idx in 0..self.candidates[k].len() {
            let t = self.candidates[k][idx];
            self.images.push(t);
            if self.extend().is_some() {
                if let Some(m) = self.run() {
                    return Some(m);
                }
            }
            self.images.pop();
        }
        None
    }
}

/// An isomorphism `g1 -> g2` as the image of every element, if one exists.
pub fn find_isomorphism(g1: &Group, g2: &Group, config: &GroupConfig) -> Result<Option<Vec<u32>>, GroupError> {
    for g in [g1, g2] {
        if g.order() > config.iso_max_order {
            return Err(GroupError::SizeLimit {
                order: g.order() as u64,
                limit: config.iso_max_order as u64,
            });
        }
    }
    if g1.order() != g2.order() || fingerprint(g1) != fingerprint(g2) {
        return Ok(None);
    }
    let (s1, s2) = (signatures(g1), signatures(g2));
    let mut gens = small_generating_set(g1);
    let count = |x: u32| s2.iter().filter(|&&s| s == s1[x as usize]).count();
    // most constrained generators first
    gens.sort_by_key(|&x| (count(x), x));
    let candidates = gens
        .iter()
        .map(|&x| g2.elements().filter(|&y| s2[y as usize] == s1[x as usize]).collect())
        .collect();
    let mut search = Search {
        g1,
        g2,
        gens,
        candidates,
        images: Vec::new(),
    };
    Ok(search.run())
}

pub fn is_isomorphic(g1: &Group, g2: &Group, config: &GroupConfig) -> Result<bool, GroupError> {
    Ok(find_isomorphism(g1, g2, config)?.is_some())
}
