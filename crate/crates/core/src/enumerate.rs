//! Exhaustive enumeration of diassociative semigroups and EDS on small
//! carriers. The search fills table cells one at a time and prunes on every
//! axiom instance whose arguments are already decided; the (←,→) candidate
//! space is split into independent work units processed in parallel.

use crate::eds::{FiniteEds, OpTable, Sym};
use crate::error::{EdsError, Result};
use crate::iso::{canonical_form, reduce_up_to_iso};
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumFilter {
    /// Enumerate only the (←,→) fragment; skips the ◁/▷ search entirely.
    /// Results are returned as their matching extensions (α◁β=β, α▷β=α),
    /// which is a count- and isomorphism-faithful representation.
    pub diassociative_only: bool,
    pub nondegenerate_only: bool,
    pub commutative_only: bool,
    pub up_to_iso: bool,
}

#[derive(Clone, Debug)]
pub struct EnumResult {
    pub items: Vec<FiniteEds>,
    /// Present when `up_to_iso` was requested; aligned with `items`.
    pub class_sizes: Option<Vec<usize>>,
}

impl EnumResult {
    pub fn total(&self) -> usize {
        match &self.class_sizes {
            Some(sizes) => sizes.iter().sum(),
            None => self.items.len(),
        }
    }
}

#[derive(Clone)]
struct Partial {
    n: usize,
    // four tables as Option cells, row-major: left, right, tri_left, tri_right
    tabs: [Vec<Option<Sym>>; 4],
}

impl Partial {
    fn new(n: usize) -> Self {
        Partial {
            n,
            tabs: std::array::from_fn(|_| vec![None; n * n]),
        }
    }

    #[inline]
    fn get(&self, t: usize, a: Sym, b: Sym) -> Option<Sym> {
        self.tabs[t][a as usize * self.n + b as usize]
    }
}

// table ids
const L: usize = 0;
const R: usize = 1;
const TL: usize = 2;
const TR: usize = 3;

/// One equation side: a nested application bottoming out in table lookups.
/// Returns None when some needed cell is still unassigned.
macro_rules! ev {
    ($p:expr, $t:expr, $a:expr, $b:expr) => {
        match ($a, $b) {
            (Some(x), Some(y)) => $p.get($t, x, y),
            _ => None,
        }
    };
}

/// Checks every axiom instance whose cells are all decided.
/// `extended` controls whether the ◁/▷ axioms are evaluated.
fn consistent(p: &Partial, extended: bool) -> bool {
    let n = p.n as Sym;
    for a in 0..n {
        for b in 0..n {
            for g in 0..n {
                let (sa, sb, sg) = (Some(a), Some(b), Some(g));
                let lab = ev!(p, L, sa, sb);
                let rab = ev!(p, R, sa, sb);
                let lbg = ev!(p, L, sb, sg);
                let rbg = ev!(p, R, sb, sg);
                // eq 1: (α←β)←γ = α←(β←γ) = α←(β→γ)
                let e1a = ev!(p, L, lab, sg);
                let e1b = ev!(p, L, sa, lbg);
                let e1c = ev!(p, L, sa, rbg);
                if neq(e1a, e1b) || neq(e1a, e1c) || neq(e1b, e1c) {
                    return false;
                }
                // eq 2: (α→β)←γ = α→(β←γ)
                if neq(ev!(p, L, rab, sg), ev!(p, R, sa, lbg)) {
                    return false;
                }
                // eq 3: (α→β)→γ = (α←β)→γ = α→(β→γ)
                let e3a = ev!(p, R, rab, sg);
                let e3b = ev!(p, R, lab, sg);
                let e3c = ev!(p, R, sa, rbg);
                if neq(e3a, e3b) || neq(e3a, e3c) || neq(e3b, e3c) {
                    return false;
                }
                if !extended {
                    continue;
                }
                let tlab = ev!(p, TL, sa, sb);
                let trab = ev!(p, TR, sa, sb);
                // eq 4: α▷(β←γ) = α▷β
                if neq(ev!(p, TR, sa, lbg), trab) {
                    return false;
                }
                // eq 5: (α→β)◁γ = β◁γ
                if neq(ev!(p, TL, rab, sg), ev!(p, TL, sb, sg)) {
                    return false;
                }
                let t6 = ev!(p, TL, lab, sg); // (α←β)◁γ
                                              // eq 6: (α◁β)←((α←β)◁γ) = α◁(β←γ)
                if neq(ev!(p, L, tlab, t6), ev!(p, TL, sa, lbg)) {
                    return false;
                }
                // eq 7: (α◁β)◁((α←β)◁γ) = β◁γ
                if neq(ev!(p, TL, tlab, t6), ev!(p, TL, sb, sg)) {
                    return false;
                }
                // eq 8: (α◁β)→((α←β)◁γ) = α◁(β→γ)
                if neq(ev!(p, R, tlab, t6), ev!(p, TL, sa, rbg)) {
                    return false;
                }
                // eq 9: (α◁β)▷((α←β)◁γ) = β▷γ
                if neq(ev!(p, TR, tlab, t6), ev!(p, TR, sb, sg)) {
                    return false;
                }
                let t10 = ev!(p, TR, sa, rbg); // α▷(β→γ)
                let trbg = ev!(p, TR, sb, sg); // β▷γ
                                               // eq 10: (α▷(β→γ))←(β▷γ) = (α←β)▷γ
                if neq(ev!(p, L, t10, trbg), ev!(p, TR, lab, sg)) {
                    return false;
                }
                // eq 11: (α▷(β→γ))◁(β▷γ) = α◁β
                if neq(ev!(p, TL, t10, trbg), tlab) {
                    return false;
                }
                // eq 12: (α▷(β→γ))→(β▷γ) = (α→β)▷γ
                if neq(ev!(p, R, t10, trbg), ev!(p, TR, rab, sg)) {
                    return false;
                }
                // eq 13: (α▷(β→γ))▷(β▷γ) = α▷β
                if neq(ev!(p, TR, t10, trbg), trab) {
                    return false;
                }
            }
        }
    }
    true
}

#[inline]
fn neq(x: Option<Sym>, y: Option<Sym>) -> bool {
    matches!((x, y), (Some(a), Some(b)) if a != b)
}

/// Partial-injectivity of the pair maps, used by the nondegenerate filter.
fn phi_injective_so_far(p: &Partial) -> bool {
    let n = p.n;
    for (op, tri) in [(L, TL), (R, TR)] {
        let mut seen = vec![false; n * n];
        for i in 0..n * n {
            if let (Some(x), Some(y)) = (p.tabs[op][i], p.tabs[tri][i]) {
                let key = x as usize * n + y as usize;
                if seen[key] {
                    return false;
                }
                seen[key] = true;
            }
        }
    }
    true
}

fn search_tables(
    p: &mut Partial,
    order: &[(usize, usize)],
    pos: usize,
    extended: bool,
    inject: bool,
    out: &mut Vec<Partial>,
) {
    if pos == order.len() {
        out.push(p.clone());
        return;
    }
    let (t, cell) = order[pos];
    for v in 0..p.n as Sym {
        p.tabs[t][cell] = Some(v);
        if consistent(p, extended) && (!inject || phi_injective_so_far(p)) {
            search_tables(p, order, pos + 1, extended, inject, out);
        }
    }
    p.tabs[t][cell] = None;
}

fn finish(p: &Partial) -> FiniteEds {
    let n = p.n;
    let take = |t: usize| OpTable::new(n, p.tabs[t].iter().map(|c| c.unwrap()).collect()).unwrap();
    FiniteEds::new(take(L), take(R), take(TL), take(TR)).unwrap()
}

/// Complete, duplicate-free enumeration of the structures on {0,…,n−1}
/// passing `filter`, in canonical-form order.
pub fn enumerate_eds(n: usize, filter: &EnumFilter) -> Result<EnumResult> {
    if n == 0 {
        return Err(EdsError::UnsupportedSize("0".into()));
    }
    if n > 3 && !(n == 4 && filter.nondegenerate_only) {
        return Err(EdsError::UnsupportedSize(format!(
            "{n} (only n <= 3, or n = 4 with the nondegenerate filter)"
        )));
    }

    // Cell order: left and right tables interleaved row-major.
    let cells = n * n;
    let mut di_order = Vec::with_capacity(2 * cells);
    for i in 0..cells {
        di_order.push((L, i));
        di_order.push((R, i));
    }

    // Work units: assignments of the first left/right cell pair.
    let seeds: Vec<(Sym, Sym)> = (0..n as Sym)
        .flat_map(|a| (0..n as Sym).map(move |b| (a, b)))
        .collect();

    let inject = filter.nondegenerate_only;
    let di_only = filter.diassociative_only;

    let mut results: Vec<FiniteEds> = seeds
        .par_iter()
        .flat_map(|&(v1, v2)| {
            let mut p = Partial::new(n);
            p.tabs[L][0] = Some(v1);
            p.tabs[R][0] = Some(v2);
            let mut di = Vec::new();
            if consistent(&p, false) {
                search_tables(&mut p, &di_order, 2, false, false, &mut di);
            }
            let mut found = Vec::new();
            for pair in di {
                if di_only {
                    // represent the diassociative semigroup by its matching extension
                    let mut q = pair.clone();
                    for a in 0..n {
                        for b in 0..n {
                            q.tabs[TL][a * n + b] = Some(b as Sym);
                            q.tabs[TR][a * n + b] = Some(a as Sym);
                        }
                    }
                    found.push(finish(&q));
                    continue;
                }
                let mut tri_order = Vec::with_capacity(2 * cells);
                for i in 0..cells {
                    tri_order.push((TL, i));
                    tri_order.push((TR, i));
                }
                let mut full = Vec::new();
                let mut q = pair.clone();
                search_tables(&mut q, &tri_order, 0, true, inject, &mut full);
                found.extend(full.iter().map(finish));
            }
            found
        })
        .collect();

    if filter.nondegenerate_only {
        results.retain(crate::nondegen::is_nondegenerate);
    }
    if filter.commutative_only {
        results.retain(|e| e.is_commutative());
    }

    results.sort_by_cached_key(|e| {
        let mut key = canonical_form(e);
        key.extend(e.tables().iter().flat_map(|t| t.entries().iter().copied()));
        key
    });
    results.dedup();

    if filter.up_to_iso {
        let classes = reduce_up_to_iso(&results)?;
        let (items, sizes): (Vec<_>, Vec<_>) = classes.into_iter().unzip();
        Ok(EnumResult {
            items,
            class_sizes: Some(sizes),
        })
    } else {
        Ok(EnumResult {
            items: results,
            class_sizes: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_family, build_matching, build_star, cyclic_group};
    use crate::catalog::catalog2;
    use crate::eds::is_eds;
    use crate::iso::are_isomorphic;

    #[test]
    fn n2_counts_match_the_classification() {
        let all = enumerate_eds(2, &EnumFilter::default()).unwrap();
        assert_eq!(all.items.len(), 45);
        assert!(all.items.iter().all(is_eds));

        let di = enumerate_eds(
            2,
            &EnumFilter {
                diassociative_only: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(di.items.len(), 13);

        let classes = enumerate_eds(
            2,
            &EnumFilter {
                up_to_iso: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(classes.items.len(), 24);
        assert_eq!(
            classes.class_sizes.as_ref().unwrap().iter().sum::<usize>(),
            45
        );

        let di_classes = enumerate_eds(
            2,
            &EnumFilter {
                diassociative_only: true,
                up_to_iso: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(di_classes.items.len(), 8);
    }

    #[test]
    fn n2_matches_brute_force_over_all_four_tuples() {
        use crate::eds::{check_eds, CheckMode, OpTable};
        let tables: Vec<OpTable> = (0..16u8)
            .map(|bits| OpTable::from_fn(2, |a, b| (bits >> (a * 2 + b)) & 1))
            .collect();
        let mut brute = Vec::new();
        for l in &tables {
            for r in &tables {
                for tl in &tables {
                    for tr in &tables {
                        let e =
                            FiniteEds::new(l.clone(), r.clone(), tl.clone(), tr.clone()).unwrap();
                        if check_eds(&e, CheckMode::Pointwise).passed() {
                            brute.push(e);
                        }
                    }
                }
            }
        }
        let mut enumerated = enumerate_eds(2, &EnumFilter::default()).unwrap().items;
        let key = |e: &FiniteEds| {
            e.tables()
                .iter()
                .flat_map(|t| t.entries().to_vec())
                .collect::<Vec<_>>()
        };
        brute.sort_by_key(key);
        enumerated.sort_by_key(key);
        assert_eq!(brute, enumerated);
    }

    #[test]
    fn n2_class_representatives_match_the_catalog() {
        let classes = enumerate_eds(
            2,
            &EnumFilter {
                up_to_iso: true,
                ..Default::default()
            },
        )
        .unwrap();
        let cat = catalog2();
        for rep in &classes.items {
            let matches: Vec<&str> = cat
                .iter()
                .filter(|c| are_isomorphic(rep, c).is_some())
                .map(|c| c.label.as_deref().unwrap())
                .collect();
            assert_eq!(matches.len(), 1, "representative matches {matches:?}");
        }
    }

    #[test]
    fn filters_commute_with_enumeration() {
        let all = enumerate_eds(2, &EnumFilter::default()).unwrap().items;
        let nd_direct = enumerate_eds(
            2,
            &EnumFilter {
                nondegenerate_only: true,
                ..Default::default()
            },
        )
        .unwrap()
        .items;
        let nd_post: Vec<_> = all
            .iter()
            .filter(|e| crate::nondegen::is_nondegenerate(e))
            .cloned()
            .collect();
        assert_eq!(nd_direct, nd_post);
        // 7 raw nondegenerate structures, falling into the 4 classes
        assert_eq!(nd_direct.len(), 7);
        let nd_classes = enumerate_eds(
            2,
            &EnumFilter {
                nondegenerate_only: true,
                up_to_iso: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(nd_classes.items.len(), 4);

        let comm_direct = enumerate_eds(
            2,
            &EnumFilter {
                commutative_only: true,
                ..Default::default()
            },
        )
        .unwrap()
        .items;
        let comm_post: Vec<_> = all.iter().filter(|e| e.is_commutative()).cloned().collect();
        assert_eq!(comm_direct, comm_post);
    }

    #[test]
    fn n3_nondegenerate_classes_are_the_four_standard_constructions() {
        let classes = enumerate_eds(
            3,
            &EnumFilter {
                nondegenerate_only: true,
                up_to_iso: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(classes.items.len(), 4);
        let expected = [
            build_matching(3).unwrap(),
            build_family(cyclic_group(3)).unwrap(),
            build_star(cyclic_group(3), 1, &[0]).unwrap(),
            build_star(cyclic_group(3), 1, &[1]).unwrap(),
        ];
        for rep in &classes.items {
            let hits = expected
                .iter()
                .filter(|e| are_isomorphic(rep, e).is_some())
                .count();
            assert_eq!(hits, 1);
        }
    }

    #[test]
    fn guards_reject_unsupported_sizes() {
        assert!(enumerate_eds(0, &EnumFilter::default()).is_err());
        assert!(enumerate_eds(4, &EnumFilter::default()).is_err());
        assert!(enumerate_eds(5, &EnumFilter::default()).is_err());
    }
}
