use alloc::vec::Vec;

use crate::group::{
    build_group, family_matrices, family_spec, fingerprint, is_isomorphic, Fingerprint, Group, GroupConfig,
    GroupError,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyClass {
    pub representative: [u64; 4],
    pub members: Vec<[u64; 4]>,
    pub fingerprint: Fingerprint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyClassification {
    pub n: u32,
    pub order: u64,
    pub actions_considered: usize,
    pub classes: Vec<FamilyClass>,
}

/// Sorts the groups `(C_{2^n} x C_{2^n}) x| C_2` over all involutive actions
/// into isomorphism classes: bucket by fingerprint, then compare with each
/// class representative in the bucket.
pub fn classify_family(n: u32, config: &GroupConfig) -> Result<FamilyClassification, GroupError> {
    if n == 0 || n > 6 {
        return Err(GroupError::InvalidInput(alloc::format!("family parameter n = {n} outside 1..=6")));
    }
    let order = 1u64 << (2 * n + 1);
    if order > config.iso_max_order as u64 {
        return Err(GroupError::SizeLimit {
            order,
            limit: config.iso_max_order as u64,
        });
    }
    let matrices = family_matrices(n);
    let mut classes: Vec<FamilyClass> = Vec::new();
    let mut reps: Vec<Group> = Vec::new();
    for m in &matrices {
        let g = build_group(&family_spec(n, *m)?, config)?;
        let f = fingerprint(&g);
        let mut found = None;
        for (k, class) in classes.iter().enumerate() {
            if class.fingerprint == f && is_isomorphic(&g, &reps[k], config)? {
                found = Some(k);
                break;
            }
        }
        match found {
            Some(k) => classes[k].members.push(*m),
            None => {
                log::debug!("new class with representative {m:?}");
                classes.push(FamilyClass {
                    representative: *m,
                    members: alloc::vec![*m],
                    fingerprint: f,
                });
                reps.push(g);
            }
        }
    }
    Ok(FamilyClassification {
        n,
        order,
        actions_considered: matrices.len(),
        classes,
    })
}
