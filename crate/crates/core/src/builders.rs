//! Standard EDS constructions: matching extensions of diassociative
//! semigroups, family structures over associative semigroups, morphism-type
//! triangles, and the star construction over a group.

use crate::eds::{FiniteEds, OpTable, Sym};
use crate::error::{EdsError, Result};

#[derive(Clone, Debug)]
pub enum StandardKind {
    /// EDS(Ω): α←β=α, α→β=β, α◁β=β, α▷β=α on a bare set.
    Matching { size: usize },
    /// EDS(Ω,←,→): the matching triangles over a given diassociative pair.
    MatchingOver { left: OpTable, right: OpTable },
    /// EDS(Ω,⋆,⋆): family structure over an associative semigroup.
    Family { star: OpTable },
    /// EDS(Ω,←,→,φ_◁,φ_▷): α◁β=φ_◁(β), α▷β=φ_▷(α) for a pair of
    /// diassociative semigroup morphisms with φ∘φ' = φ for all four combinations.
    Morphism {
        left: OpTable,
        right: OpTable,
        phi_tri_left: Vec<Sym>,
        phi_tri_right: Vec<Sym>,
    },
    /// EDS*(H,⋆,K,θ) on H×K over a group (H,⋆) and θ: K→H.
    Star {
        group: OpTable,
        k_size: usize,
        theta: Vec<Sym>,
    },
}

pub fn build_standard(kind: StandardKind) -> Result<FiniteEds> {
    match kind {
        StandardKind::Matching { size } => build_matching(size),
        StandardKind::MatchingOver { left, right } => build_matching_over(left, right),
        StandardKind::Family { star } => build_family(star),
        StandardKind::Morphism {
            left,
            right,
            phi_tri_left,
            phi_tri_right,
        } => build_morphism(left, right, &phi_tri_left, &phi_tri_right),
        StandardKind::Star {
            group,
            k_size,
            theta,
        } => build_star(group, k_size, &theta),
    }
}

fn check_diassociative(left: &OpTable, right: &OpTable) -> Result<()> {
    if left.size() != right.size() {
        return Err(EdsError::MixedSizes);
    }
    let n = left.size() as Sym;
    for a in 0..n {
        for b in 0..n {
            for g in 0..n {
                let ok = left.get(left.get(a, b), g) == left.get(a, left.get(b, g))
                    && left.get(left.get(a, b), g) == left.get(a, right.get(b, g))
                    && left.get(right.get(a, b), g) == right.get(a, left.get(b, g))
                    && right.get(right.get(a, b), g) == right.get(left.get(a, b), g)
                    && right.get(right.get(a, b), g) == right.get(a, right.get(b, g));
                if !ok {
                    return Err(EdsError::NotDiassociative(a, b, g));
                }
            }
        }
    }
    Ok(())
}

pub fn build_matching(size: usize) -> Result<FiniteEds> {
    if size == 0 || size > Sym::MAX as usize {
        return Err(EdsError::UnsupportedSize(format!("{size}")));
    }
    let left = OpTable::from_fn(size, |a, _| a);
    let right = OpTable::from_fn(size, |_, b| b);
    build_matching_over(left, right)
}

pub fn build_matching_over(left: OpTable, right: OpTable) -> Result<FiniteEds> {
    check_diassociative(&left, &right)?;
    let n = left.size();
    let tl = OpTable::from_fn(n, |_, b| b);
    let tr = OpTable::from_fn(n, |a, _| a);
    FiniteEds::new(left, right, tl, tr)
}

pub fn build_family(star: OpTable) -> Result<FiniteEds> {
    if let Some((a, b, c)) = star.is_associative() {
        return Err(EdsError::NotAssociative(a, b, c));
    }
    let n = star.size();
    let tl = OpTable::from_fn(n, |_, b| b);
    let tr = OpTable::from_fn(n, |a, _| a);
    FiniteEds::new(star.clone(), star, tl, tr)
}

pub fn build_morphism(
    left: OpTable,
    right: OpTable,
    phi_tl: &[Sym],
    phi_tr: &[Sym],
) -> Result<FiniteEds> {
    check_diassociative(&left, &right)?;
    let n = left.size();
    for phi in [phi_tl, phi_tr] {
        if phi.len() != n || phi.iter().any(|&x| x as usize >= n) {
            return Err(EdsError::Structural(format!(
                "morphism map must list {n} in-range images"
            )));
        }
    }
    let pl = |x: Sym| phi_tl[x as usize];
    let pr = |x: Sym| phi_tr[x as usize];
    // idempotence / absorption conditions
    for x in 0..n as Sym {
        if pl(pl(x)) != pl(x) || pl(pr(x)) != pl(x) {
            return Err(EdsError::MorphismViolation(format!(
                "phi_tri_left is not absorbed at symbol {x}"
            )));
        }
        if pr(pr(x)) != pr(x) || pr(pl(x)) != pr(x) {
            return Err(EdsError::MorphismViolation(format!(
                "phi_tri_right is not absorbed at symbol {x}"
            )));
        }
    }
    // morphism conditions for both operations
    for a in 0..n as Sym {
        for b in 0..n as Sym {
            if pl(left.get(a, b)) != left.get(pl(a), pl(b))
                || pl(right.get(a, b)) != right.get(pl(a), pl(b))
            {
                return Err(EdsError::MorphismViolation(format!(
                    "phi_tri_left fails to commute with the operations at ({a},{b})"
                )));
            }
            if pr(left.get(a, b)) != left.get(pr(a), pr(b))
                || pr(right.get(a, b)) != right.get(pr(a), pr(b))
            {
                return Err(EdsError::MorphismViolation(format!(
                    "phi_tri_right fails to commute with the operations at ({a},{b})"
                )));
            }
        }
    }
    let tl = OpTable::from_fn(n, |_, b| pl(b));
    let tr = OpTable::from_fn(n, |a, _| pr(a));
    FiniteEds::new(left, right, tl, tr)
}

/// Unit and inverses of a finite group table, or an error with a witness.
fn group_unit_and_inverses(t: &OpTable) -> Result<(Sym, Vec<Sym>)> {
    if let Some((a, b, c)) = t.is_associative() {
        return Err(EdsError::NotAssociative(a, b, c));
    }
    let n = t.size() as Sym;
    let unit = (0..n)
        .find(|&e| (0..n).all(|x| t.get(e, x) == x && t.get(x, e) == x))
        .ok_or_else(|| EdsError::NotAGroup("no unit element".into()))?;
    let mut inv = Vec::with_capacity(n as usize);
    for x in 0..n {
        let ix = (0..n)
            .find(|&y| t.get(x, y) == unit && t.get(y, x) == unit)
            .ok_or_else(|| EdsError::NotAGroup(format!("symbol {x} has no inverse")))?;
        inv.push(ix);
    }
    Ok((unit, inv))
}

/// EDS*(H,⋆,K,θ) on H×K, carrier index (h,k) ↦ h·|K| + k:
///   (α,α')←(β,β') = (α,α')          (α,α')→(β,β') = (β,β')
///   (α,α')◁(β,β') = (α⁻¹⋆β, β')     (α,α')▷(β,β') = (θ(β')⋆β⁻¹⋆α, α')
pub fn build_star(group: OpTable, k_size: usize, theta: &[Sym]) -> Result<FiniteEds> {
    let (_, inv) = group_unit_and_inverses(&group)?;
    let h = group.size();
    if k_size == 0 {
        return Err(EdsError::UnsupportedSize("empty K".into()));
    }
    if theta.len() != k_size || theta.iter().any(|&x| (x as usize) >= h) {
        return Err(EdsError::Structural(format!(
            "theta must list {k_size} images in the group"
        )));
    }
    let n = h * k_size;
    if n > Sym::MAX as usize {
        return Err(EdsError::UnsupportedSize(format!("{n}")));
    }
    let split = |x: Sym| ((x as usize / k_size) as Sym, (x as usize % k_size) as Sym);
    let fuse = |h_part: Sym, k_part: Sym| (h_part as usize * k_size + k_part as usize) as Sym;
    let left = OpTable::from_fn(n, |a, _| a);
    let right = OpTable::from_fn(n, |_, b| b);
    let tl = OpTable::from_fn(n, |a, b| {
        let (ah, _) = split(a);
        let (bh, bk) = split(b);
        fuse(group.get(inv[ah as usize], bh), bk)
    });
    let tr = OpTable::from_fn(n, |a, b| {
        let (ah, ak) = split(a);
        let (bh, bk) = split(b);
        let th = theta[bk as usize];
        fuse(group.get(group.get(th, inv[bh as usize]), ah), ak)
    });
    FiniteEds::new(left, right, tl, tr)
}

/// Cyclic group table (ℤ/nℤ, +).
pub fn cyclic_group(n: usize) -> OpTable {
    OpTable::from_fn(n, |a, b| ((a as usize + b as usize) % n) as Sym)
}
