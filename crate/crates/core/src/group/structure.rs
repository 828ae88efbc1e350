use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{Group, GroupConfig, GroupError};

/// Sorted elements of the subgroup generated by `gens`.
pub(crate) fn closure(g: &Group, gens: &[u32]) -> Vec<u32> {
    let mut inside = vec![false; g.order()];
    inside[0] = true;
    let mut queue = VecDeque::from([0u32]);
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if !inside[y as usize] {
                inside[y as usize] = true;
                queue.push_back(y);
            }
        }
    }
    (0..g.order() as u32).filter(|&x| inside[x as usize]).collect()
}

/// A subgroup of a fixed parent group, with the smallest element of each left
/// coset `tH` as its representative.
#[derive(Clone, Debug)]
pub struct Subgroup<'g> {
    parent: &'g Group,
    elements: Vec<u32>,
    member: Vec<bool>,
    coset_reps: Vec<u32>,
}

impl<'g> Subgroup<'g> {
    fn from_elements(parent: &'g Group, elements: Vec<u32>) -> Self {
        let mut member = vec![false; parent.order()];
        for &x in &elements {
            member[x as usize] = true;
        }
        let mut covered = vec![false; parent.order()];
        let mut coset_reps = Vec::new();
        for t in parent.elements() {
            if covered[t as usize] {
                continue;
            }
            coset_reps.push(t);
            for &h in &elements {
                covered[parent.mul(t, h) as usize] = true;
            }
        }
        Subgroup {
            parent,
            elements,
            member,
            coset_reps,
        }
    }

    pub fn parent(&self) -> &'g Group {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.coset_reps.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn coset_reps(&self) -> &[u32] {
        &self.coset_reps
    }

    pub fn contains(&self, x: u32) -> bool {
        self.member[x as usize]
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.parent;
        self.elements
            .iter()
            .all(|&a| self.elements.iter().all(|&b| g.commutes(a, b)))
    }

    pub fn is_normal(&self) -> bool {
        let g = self.parent;
        g.generators()
            .iter()
            .all(|&t| self.elements.iter().all(|&h| self.contains(g.conj(h, t))))
    }

    /// The subgroup as a group in its own right; element `k` corresponds to
    /// `self.elements()[k]`.
    pub fn to_group(&self, config: &GroupConfig) -> Result<Group, GroupError> {
        let n = self.order();
        let mut pos = vec![u32::MAX; self.parent.order()];
        for (k, &x) in self.elements.iter().enumerate() {
            pos[x as usize] = k as u32;
        }
        let mut table = Vec::with_capacity(n * n);
        for &a in &self.elements {
            for &b in &self.elements {
                table.push(pos[self.parent.mul(a, b) as usize]);
            }
        }
        Group::from_table(n, table, config)
    }
}

pub fn subgroup_generated<'g>(g: &'g Group, elems: &[u32]) -> Subgroup<'g> {
    Subgroup::from_elements(g, closure(g, elems))
}

/// Conjugacy classes, each sorted, listed by smallest element.
pub fn conjugacy_classes(g: &Group) -> Vec<Vec<u32>> {
    let mut seen = vec![false; g.order()];
    let mut classes = Vec::new();
    for x in g.elements() {
        if seen[x as usize] {
            continue;
        }
        let mut class = Vec::new();
        for t in g.elements() {
            let y = g.conj(x, t);
            if !seen[y as usize] {
                seen[y as usize] = true;
                class.push(y);
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

pub fn centralizer<'g>(g: &'g Group, x: u32) -> Subgroup<'g> {
    let elements = g.elements().filter(|&y| g.commutes(x, y)).collect();
    Subgroup::from_elements(g, elements)
}

pub fn center(g: &Group) -> Subgroup<'_> {
    let elements = g
        .elements()
        .filter(|&y| g.generators().iter().all(|&s| g.commutes(s, y)))
        .collect();
    Subgroup::from_elements(g, elements)
}

pub fn derived_subgroup(g: &Group) -> Subgroup<'_> {
    let mut comms = Vec::new();
    for a in g.elements() {
        for &b in g.generators() {
            let c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
            comms.push(c);
        }
    }
    comms.sort_unstable();
    comms.dedup();
    // the normal closure of [G, S] for a generating set S is G'
    let mut sub = closure(g, &comms);
    loop {
        let mut extra: Vec<u32> = sub.clone();
        for &h in &sub {
            for &t in g.generators() {
                extra.push(g.conj(h, t));
            }
        }
        let next = closure(g, &extra);
        if next.len() == sub.len() {
            break;
        }
        sub = next;
    }
    Subgroup::from_elements(g, sub)
}

/// `G/N` for a normal subgroup `N`. Coset `k` of the quotient is the coset of
/// `n.coset_reps()[k]`.
pub fn quotient(n: &Subgroup<'_>, config: &GroupConfig) -> Result<Group, GroupError> {
    if !n.is_normal() {
        return Err(GroupError::InvalidInput("quotient by a subgroup that is not normal".into()));
    }
    let g = n.parent();
    let mut label = vec![0u32; g.order()];
    for (k, &t) in n.coset_reps().iter().enumerate() {
        for &h in n.elements() {
            label[g.mul(t, h) as usize] = k as u32;
        }
    }
    let reps = n.coset_reps();
    let m = reps.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in reps {
        for &b in reps {
            table.push(label[g.mul(a, b) as usize]);
        }
    }
    Group::from_table(m, table, config)
}

/// Invariant-factor-free type of an abelian group: the prime-power orders of
/// its cyclic factors, ascending. `None` for non-abelian groups.
pub fn abelian_type(g: &Group) -> Option<Vec<u64>> {
    if !g.is_abelian() {
        return None;
    }
    let n = g.order() as u64;
    let orders: Vec<u64> = g.elements().map(|x| g.element_order(x)).collect();
    let mut out = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while rest > 1 {
        if rest % p != 0 {
            p += 1;
            continue;
        }
        let mut pk = 1;
        while rest % p == 0 {
            rest /= p;
            pk *= p;
        }
        // a_k = #{x in the p-part : x^(p^k) = 1}; factors of order >= p^k
        // number log_p(a_k / a_{k-1})
        let mut prev = 1u64;
        let mut q = p;
        let mut counts = Vec::new();
        while q <= pk {
            let a = orders.iter().filter(|&&o| q % o == 0).count() as u64;
            let mut r = a / prev;
            let mut e = 0;
            while r > 1 {
                r /= p;
                e += 1;
            }
            counts.push(e);
            prev = a;
            q *= p;
        }
        // counts[k-1] = number of factors of order >= p^k
        let mut power = p;
        for k in 0..counts.len() {
            let next = counts.get(k + 1).copied().unwrap_or(0);
            for _ in 0..counts[k] - next {
                out.push(power);
            }
            power *= p;
        }
    }
    out.sort_unstable();
    Some(out)
}

/// Type of the abelianization `G/G'`.
pub fn abelian_invariants(g: &Group, config: &GroupConfig) -> Result<Vec<u64>, GroupError> {
    if g.is_abelian() {
        return Ok(abelian_type(g).unwrap());
    }
    let q = quotient(&derived_subgroup(g), config)?;
    Ok(abelian_type(&q).expect("abelianization is abelian"))
}
