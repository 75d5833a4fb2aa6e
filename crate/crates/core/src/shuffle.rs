//! (k,l)-shuffles and the decoration-transport map they act through.
//!
//! A (k,l)-shuffle is a permutation of {1,…,k+l} increasing on the first k
//! and the last l positions. The preimage of 1 splits the set into the
//! `≺`-shuffles (σ(1)=1) and the `≻`-shuffles (σ(k+1)=1). The transport map
//! D^{k,l}_σ rewrites a vector of k+l−1 edge types (the left factor's spine
//! types, the product type in slot k, then the right factor's spine types)
//! into the spine types of the shuffled ladder.

use crate::eds::{FiniteEds, Sym};
use crate::error::{EdsError, Result};

/// All (k,l)-shuffles, as one-line images [σ(1),…,σ(k+l)] with values 1-based.
pub fn shuffles(k: usize, l: usize) -> Vec<Vec<u8>> {
    let total = k + l;
    let mut out = Vec::new();
    // choose the image positions of the first block
    let mut combo: Vec<usize> = (1..=k).collect();
    loop {
        let mut sigma = vec![0u8; total];
        let chosen: std::collections::BTreeSet<usize> = combo.iter().copied().collect();
        for (i, &p) in combo.iter().enumerate() {
            sigma[i] = p as u8;
        }
        let mut rest: Vec<usize> = (1..=total).filter(|p| !chosen.contains(p)).collect();
        rest.sort_unstable();
        for (j, p) in rest.into_iter().enumerate() {
            sigma[k + j] = p as u8;
        }
        out.push(sigma);
        // next combination of size k from {1..=total}
        if k == 0 {
            break;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] < total - (k - 1 - i) {
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
    out
}

pub fn is_shuffle(k: usize, l: usize, sigma: &[u8]) -> bool {
    if sigma.len() != k + l {
        return false;
    }
    let mut seen = vec![false; k + l + 1];
    for &v in sigma {
        let v = v as usize;
        if v == 0 || v > k + l || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    sigma[..k].windows(2).all(|w| w[0] < w[1]) && sigma[k..].windows(2).all(|w| w[0] < w[1])
}

/// Shuffles with σ(1) = 1 (empty when k = 0).
pub fn sh_prec(k: usize, l: usize) -> Vec<Vec<u8>> {
    shuffles(k, l)
        .into_iter()
        .filter(|s| k >= 1 && s[0] == 1)
        .collect()
}

/// Shuffles with σ(k+1) = 1 (empty when l = 0).
pub fn sh_succ(k: usize, l: usize) -> Vec<Vec<u8>> {
    shuffles(k, l)
        .into_iter()
        .filter(|s| l >= 1 && s[k] == 1)
        .collect()
}

/// The transport map D^{k,l}_σ applied to `types` (length k+l−1).
///
/// The recursion follows the comb structure of the products: peeling the
/// root branch of the `≺` factor pairs `←`/`◁` with a `≺`-continuation and
/// `→`/`▷` with a `≻`-continuation, and symmetrically on the `≻` side.
pub fn d_map(eds: &FiniteEds, k: usize, l: usize, sigma: &[u8], types: &[Sym]) -> Result<Vec<Sym>> {
    if !is_shuffle(k, l, sigma) {
        return Err(EdsError::Precondition(format!(
            "{sigma:?} is not a ({k},{l})-shuffle"
        )));
    }
    if k + l == 0 || types.len() != k + l - 1 {
        return Err(EdsError::Precondition(format!(
            "expected {} types, got {}",
            (k + l).saturating_sub(1),
            types.len()
        )));
    }
    for &t in types {
        eds.check_sym(t)?;
    }
    Ok(d_map_inner(eds, k, l, sigma, types))
}

fn d_map_inner(eds: &FiniteEds, k: usize, l: usize, sigma: &[u8], types: &[Sym]) -> Vec<Sym> {
    if k == 0 || l == 0 {
        return types.to_vec();
    }
    if sigma[0] == 1 {
        // ≺-shuffle
        if k == 1 {
            return types.to_vec();
        }
        let sub: Vec<u8> = sigma[1..].iter().map(|&v| v - 1).collect();
        let a2 = types[0];
        let prod = types[k - 1]; // slot k−1 holds the product type
        let (head, new_prod) = if sub[0] == 1 {
            (eds.l(a2, prod), eds.tl(a2, prod))
        } else {
            (eds.r(a2, prod), eds.tr(a2, prod))
        };
        let mut rest: Vec<Sym> = types[1..].to_vec();
        rest[k - 2] = new_prod;
        let mut out = vec![head];
        out.extend(d_map_inner(eds, k - 1, l, &sub, &rest));
        out
    } else {
        // ≻-shuffle
        if l == 1 {
            // rotation: the product type moves to the front
            let mut out = vec![types[k - 1]];
            out.extend_from_slice(&types[..k - 1]);
            return out;
        }
        let sub: Vec<u8> = sigma[..k]
            .iter()
            .chain(&sigma[k + 1..])
            .map(|&v| v - 1)
            .collect();
        let prod = types[k - 1];
        let b2 = types[k];
        let (head, new_prod) = if k >= 1 && sub[0] == 1 {
            (eds.l(prod, b2), eds.tl(prod, b2))
        } else {
            (eds.r(prod, b2), eds.tr(prod, b2))
        };
        let mut rest: Vec<Sym> = Vec::with_capacity(types.len() - 1);
        rest.extend_from_slice(&types[..k - 1]);
        rest.push(new_prod);
        rest.extend_from_slice(&types[k + 1..]);
        let mut out = vec![head];
        out.extend(d_map_inner(eds, k, l - 1, &sub, &rest));
        out
    }
}
