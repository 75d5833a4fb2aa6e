//! Isomorphism of finite EDS by exhaustive relabeling. Carriers are small
//! (n ≤ 4 in the classification work), so the canonical form is simply the
//! minimum over all n! relabelings of the concatenated row-major tables.

use crate::eds::{FiniteEds, Sym};
use crate::error::{EdsError, Result};

/// All permutations of {0,…,n−1} in lexicographic order of one-line notation.
pub fn permutations(n: usize) -> Vec<Vec<Sym>> {
    let mut cur: Vec<Sym> = (0..n as Sym).collect();
    let mut out = vec![cur.clone()];
    // next_permutation loop
    while let Some(i) = (0..n.saturating_sub(1))
        .rev()
        .find(|&i| cur[i] < cur[i + 1])
    {
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
    out
}

fn flat(eds: &FiniteEds) -> Vec<Sym> {
    eds.tables()
        .iter()
        .flat_map(|t| t.entries().iter().copied())
        .collect()
}

/// Minimum over all relabelings of the concatenated row-major table tuple.
pub fn canonical_form(eds: &FiniteEds) -> Vec<Sym> {
    permutations(eds.size())
        .iter()
        .map(|p| flat(&eds.relabel(p)))
        .min()
        .unwrap()
}

/// Returns the lexicographically smallest relabeling σ with
/// σ(x∘y) = σ(x)∘σ(y) for all four operations, if one exists.
pub fn are_isomorphic(e1: &FiniteEds, e2: &FiniteEds) -> Option<Vec<Sym>> {
    if e1.size() != e2.size() {
        return None;
    }
    let target = flat(e2);
    permutations(e1.size())
        .into_iter()
        .find(|p| flat(&e1.relabel(p)) == target)
}

/// Partitions `items` into isomorphism classes. Representatives are the
/// canonical-minimal members; classes are ordered by canonical form.
pub fn reduce_up_to_iso(items: &[FiniteEds]) -> Result<Vec<(FiniteEds, usize)>> {
    let Some(first) = items.first() else {
        return Ok(Vec::new());
    };
    if items.iter().any(|e| e.size() != first.size()) {
        return Err(EdsError::MixedSizes);
    }
    let mut classes: std::collections::BTreeMap<Vec<Sym>, usize> =
        std::collections::BTreeMap::new();
    for e in items {
        *classes.entry(canonical_form(e)).or_insert(0) += 1;
    }
    let n = first.size();
    Ok(classes
        .into_iter()
        .map(|(form, count)| {
            let rep = eds_from_flat(n, &form);
            (rep, count)
        })
        .collect())
}

pub(crate) fn eds_from_flat(n: usize, flat: &[Sym]) -> FiniteEds {
    let cells = n * n;
    let t =
        |i: usize| crate::eds::OpTable::new(n, flat[i * cells..(i + 1) * cells].to_vec()).unwrap();
    FiniteEds::new(t(0), t(1), t(2), t(3)).unwrap()
}
