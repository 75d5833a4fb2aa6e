//! The two half-products on typed trees: the recursive form that peels the
//! root of one factor, and the combinatorial shuffle form that grafts both
//! factors' comb branches onto a zigzag ladder. They agree whenever the
//! symbol tables form an EDS, and that agreement is exactly what the test
//! suites pin down.

use crate::eds::{FiniteEds, Side, Sym};
use crate::error::Result;
use crate::lincomb::LinComb;
use crate::scalar::{Rat, Scalar};
use crate::shuffle::{d_map, sh_prec, sh_succ};
use crate::tree::{left_comb_decomposition, node, right_comb_decomposition, Leaf, TypedTree};

pub type TreePoly<S> = LinComb<TypedTree, S>;

/// x ≺_a y on basis trees (both nonempty); coefficients are multiplicities.
pub fn prec_basis(eds: &FiniteEds, t: &TypedTree, a: Sym, u: &TypedTree) -> Vec<(TypedTree, u32)> {
    let TypedTree::Node(l, lt, rt, r) = t else {
        panic!("prec_basis on the trivial tree");
    };
    match rt {
        // (T₁ ∨^lt_∅ |) ≺_a u = T₁ ∨^lt_a u
        None => vec![(node((**l).clone(), *lt, Some(a), u.clone()), 1)],
        Some(b) => {
            let mut out = Vec::new();
            for (sub, c) in prec_basis(eds, r, eds.tl(*b, a), u) {
                push(
                    &mut out,
                    node((**l).clone(), *lt, Some(eds.l(*b, a)), sub),
                    c,
                );
            }
            for (sub, c) in succ_basis(eds, r, eds.tr(*b, a), u) {
                push(
                    &mut out,
                    node((**l).clone(), *lt, Some(eds.r(*b, a)), sub),
                    c,
                );
            }
            out
        }
    }
}

/// t ≻_a u on basis trees (both nonempty).
pub fn succ_basis(eds: &FiniteEds, t: &TypedTree, a: Sym, u: &TypedTree) -> Vec<(TypedTree, u32)> {
    let TypedTree::Node(l, lt, rt, r) = u else {
        panic!("succ_basis on the trivial tree");
    };
    match lt {
        // t ≻_a (| ∨^∅_rt T₂) = t ∨^a_rt T₂
        None => vec![(node(t.clone(), Some(a), *rt, (**r).clone()), 1)],
        Some(b) => {
            let mut out = Vec::new();
            for (sub, c) in succ_basis(eds, t, eds.tr(a, *b), l) {
                push(
                    &mut out,
                    node(sub, Some(eds.r(a, *b)), *rt, (**r).clone()),
                    c,
                );
            }
            for (sub, c) in prec_basis(eds, t, eds.tl(a, *b), l) {
                push(
                    &mut out,
                    node(sub, Some(eds.l(a, *b)), *rt, (**r).clone()),
                    c,
                );
            }
            out
        }
    }
}

fn push(out: &mut Vec<(TypedTree, u32)>, t: TypedTree, c: u32) {
    match out.iter_mut().find(|(u, _)| *u == t) {
        Some((_, k)) => *k += c,
        None => out.push((t, c)),
    }
}

pub fn product_basis(
    eds: &FiniteEds,
    side: Side,
    a: Sym,
    t: &TypedTree,
    u: &TypedTree,
) -> Vec<(TypedTree, u32)> {
    match side {
        Side::Prec => prec_basis(eds, t, a, u),
        Side::Succ => succ_basis(eds, t, a, u),
    }
}

/// Bilinear extension of the recursive product to formal combinations.
/// Supports must consist of nonempty trees.
pub fn typed_product<S: Scalar>(
    eds: &FiniteEds,
    side: Side,
    a: Sym,
    x: &TreePoly<S>,
    y: &TreePoly<S>,
) -> Result<TreePoly<S>> {
    eds.check_sym(a)?;
    let mut out = TreePoly::zero();
    for (t, c) in x.iter() {
        for (u, d) in y.iter() {
            let cd = c.mul(d);
            for (prod, mult) in product_basis(eds, side, a, t, u) {
                out.add_term(prod, cd.mul_nat(mult));
            }
        }
    }
    Ok(out)
}

/// Shuffle form of the product: decompose `t` as a right comb and `u` as a
/// left comb, then sum the decorated ladders over the matching shuffles.
pub fn shuffle_product_trees(
    eds: &FiniteEds,
    side: Side,
    a: Sym,
    t: &TypedTree,
    u: &TypedTree,
) -> Result<TreePoly<Rat>> {
    eds.check_sym(a)?;
    if t.is_leaf() || u.is_leaf() {
        return Err(crate::error::EdsError::Precondition(
            "shuffle product needs nonempty trees".into(),
        ));
    }
    let dx = right_comb_decomposition(t);
    let dy = left_comb_decomposition(u);
    let k = dx.arity();
    let l = dy.arity();
    let mut types: Vec<Sym> = dx.spine_types.clone();
    types.push(a);
    types.extend(&dy.spine_types);
    let branches: Vec<(Option<Sym>, TypedTree)> = dx
        .branches
        .iter()
        .chain(dy.branches.iter())
        .cloned()
        .collect();
    let sigmas = match side {
        Side::Prec => sh_prec(k, l),
        Side::Succ => sh_succ(k, l),
    };
    let mut out = TreePoly::zero();
    for sigma in sigmas {
        let transported = d_map(eds, k, l, &sigma, &types)?;
        out.add_term(
            ladder_tree(&sigma, k, &transported, &branches),
            Rat::from_integer(1),
        );
    }
    Ok(out)
}

/// Builds the tree T_σ: a zigzag ladder of k+l vertices (vertex 1 at the
/// root), vertex i carrying branch σ⁻¹(i) on the left when σ⁻¹(i) ≤ k and on
/// the right otherwise; the edge between vertices i and i+1 has type
/// `types[i-1]`.
fn ladder_tree(
    sigma: &[u8],
    k: usize,
    types: &[Sym],
    branches: &[(Option<Sym>, TypedTree)],
) -> TypedTree {
    let total = sigma.len();
    let mut inv = vec![0usize; total + 1];
    for (i, &s) in sigma.iter().enumerate() {
        inv[s as usize] = i + 1;
    }
    let mut cur: Option<TypedTree> = None;
    for i in (1..=total).rev() {
        let j = inv[i];
        let (bt, branch) = branches[j - 1].clone();
        let graft_left = j <= k;
        cur = Some(match cur {
            None => {
                if graft_left {
                    node(branch, bt, None, Leaf)
                } else {
                    node(Leaf, None, bt, branch)
                }
            }
            Some(rest) => {
                let spine = Some(types[i - 1]);
                if graft_left {
                    node(branch, bt, spine, rest)
                } else {
                    node(rest, spine, bt, branch)
                }
            }
        });
    }
    cur.unwrap()
}

/// A failed identity: (identity id, witness triple, symbol pair).
pub type IdentityWitness<B> = (u8, (B, B, B), (Sym, Sym));

/// First violation of the three dendriform identities on basis-tree triples
/// with total degree up to `bound`, or None. Checks all symbol pairs.
pub fn dendriform_violation(eds: &FiniteEds, bound: usize) -> Option<IdentityWitness<TypedTree>> {
    use rayon::prelude::*;
    let omega = eds.size();
    let basis: Vec<Vec<TypedTree>> = (0..bound)
        .map(|n| crate::tree::enumerate_basis(omega, n + 1))
        .collect();
    let mut triples = Vec::new();
    for da in 1..=bound.saturating_sub(2) {
        for db in 1..=bound - da - 1 {
            for dc in 1..=bound - da - db {
                for x in &basis[da - 1] {
                    for y in &basis[db - 1] {
                        for z in &basis[dc - 1] {
                            triples.push((x.clone(), y.clone(), z.clone()));
                        }
                    }
                }
            }
        }
    }
    triples
        .par_iter()
        .filter_map(|(x, y, z)| check_triple(eds, x, y, z))
        .min_by_key(|(id, trip, pair)| (*id, format!("{trip:?}{pair:?}")))
}

fn check_triple(
    eds: &FiniteEds,
    x: &TypedTree,
    y: &TypedTree,
    z: &TypedTree,
) -> Option<IdentityWitness<TypedTree>> {
    let one = Rat::from_integer(1);
    let px = TreePoly::term(x.clone(), one);
    let py = TreePoly::term(y.clone(), one);
    let pz = TreePoly::term(z.clone(), one);
    let mul =
        |side, s, a: &TreePoly<Rat>, b: &TreePoly<Rat>| typed_product(eds, side, s, a, b).unwrap();
    for a in eds.syms() {
        for b in eds.syms() {
            // (x ≺_a y) ≺_b z = x ≺_{a←b} (y ≺_{a◁b} z) + x ≺_{a→b} (y ≻_{a▷b} z)
            let lhs1 = mul(Side::Prec, b, &mul(Side::Prec, a, &px, &py), &pz);
            let rhs1 = mul(
                Side::Prec,
                eds.l(a, b),
                &px,
                &mul(Side::Prec, eds.tl(a, b), &py, &pz),
            )
            .add(&mul(
                Side::Prec,
                eds.r(a, b),
                &px,
                &mul(Side::Succ, eds.tr(a, b), &py, &pz),
            ));
            if lhs1 != rhs1 {
                return Some((41, (x.clone(), y.clone(), z.clone()), (a, b)));
            }
            // x ≻_a (y ≺_b z) = (x ≻_a y) ≺_b z
            let lhs2 = mul(Side::Succ, a, &px, &mul(Side::Prec, b, &py, &pz));
            let rhs2 = mul(Side::Prec, b, &mul(Side::Succ, a, &px, &py), &pz);
            if lhs2 != rhs2 {
                return Some((42, (x.clone(), y.clone(), z.clone()), (a, b)));
            }
            // x ≻_a (y ≻_b z) = (x ≻_{a▷b} y) ≻_{a→b} z + (x ≺_{a◁b} y) ≻_{a←b} z
            let lhs3 = mul(Side::Succ, a, &px, &mul(Side::Succ, b, &py, &pz));
            let rhs3 = mul(
                Side::Succ,
                eds.r(a, b),
                &mul(Side::Succ, eds.tr(a, b), &px, &py),
                &pz,
            )
            .add(&mul(
                Side::Succ,
                eds.l(a, b),
                &mul(Side::Prec, eds.tl(a, b), &px, &py),
                &pz,
            ));
            if lhs3 != rhs3 {
                return Some((43, (x.clone(), y.clone(), z.clone()), (a, b)));
            }
        }
    }
    None
}

/// Compares the recursive and shuffle products on all basis pairs with
/// total degree up to `bound`; returns the first disagreement.
pub fn shuffle_recursive_disagreement(
    eds: &FiniteEds,
    bound: usize,
) -> Option<(Side, Sym, TypedTree, TypedTree)> {
    let omega = eds.size();
    let basis: Vec<Vec<TypedTree>> = (0..bound)
        .map(|n| crate::tree::enumerate_basis(omega, n + 1))
        .collect();
    for da in 1..bound {
        for db in 1..=bound - da {
            for t in &basis[da - 1] {
                for u in &basis[db - 1] {
                    for a in eds.syms() {
                        for side in [Side::Prec, Side::Succ] {
                            let rec: TreePoly<Rat> = typed_product(
                                eds,
                                side,
                                a,
                                &TreePoly::term(t.clone(), Rat::from_integer(1)),
                                &TreePoly::term(u.clone(), Rat::from_integer(1)),
                            )
                            .unwrap();
                            let sh = shuffle_product_trees(eds, side, a, t, u).unwrap();
                            if rec != sh {
                                return Some((side, a, t.clone(), u.clone()));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_family, build_matching, cyclic_group};
    use crate::catalog::{catalog2, catalog_entry};
    use crate::tree::single;

    fn one() -> Rat {
        Rat::from_integer(1)
    }

    fn poly(t: TypedTree) -> TreePoly<Rat> {
        TreePoly::term(t, one())
    }

    // the five typed trees with three internal vertices, by their two types
    fn comb_ll(x: Sym, y: Sym) -> TypedTree {
        node(node(single(), Some(y), None, Leaf), Some(x), None, Leaf)
    }
    fn tree_lr(x: Sym, y: Sym) -> TypedTree {
        node(node(Leaf, None, Some(y), single()), Some(x), None, Leaf)
    }
    fn tree_rl(x: Sym, y: Sym) -> TypedTree {
        node(Leaf, None, Some(x), node(single(), Some(y), None, Leaf))
    }
    fn comb_rr(x: Sym, y: Sym) -> TypedTree {
        node(Leaf, None, Some(x), node(Leaf, None, Some(y), single()))
    }
    fn balanced(x: Sym, y: Sym) -> TypedTree {
        node(single(), Some(x), Some(y), single())
    }

    fn left_comb(a: Sym) -> TypedTree {
        node(single(), Some(a), None, Leaf)
    }
    fn right_comb(a: Sym) -> TypedTree {
        node(Leaf, None, Some(a), single())
    }

    #[test]
    fn degree_two_products() {
        let e = catalog_entry("F5").unwrap();
        for a in e.syms() {
            let s = typed_product(&e, Side::Succ, a, &poly(single()), &poly(single())).unwrap();
            assert_eq!(s, poly(left_comb(a)));
            let p = typed_product(&e, Side::Prec, a, &poly(single()), &poly(single())).unwrap();
            assert_eq!(p, poly(right_comb(a)));
        }
    }

    #[test]
    fn general_products_on_three_vertices() {
        // ∨ ≻_α (left comb β) = comb(α→β, α▷β) + mixed(α←β, α◁β)
        for e in catalog2() {
            for a in e.syms() {
                for b in e.syms() {
                    let got =
                        typed_product(&e, Side::Succ, a, &poly(single()), &poly(left_comb(b)))
                            .unwrap();
                    let mut want = poly(comb_ll(e.r(a, b), e.tr(a, b)));
                    want.add_term(tree_lr(e.l(a, b), e.tl(a, b)), one());
                    assert_eq!(got, want, "{:?} a={a} b={b}", e.label);
                }
            }
        }
    }

    #[test]
    fn intro_table_for_the_matching_structure() {
        let e = build_matching(2).unwrap();
        for a in e.syms() {
            for b in e.syms() {
                let m = |side, s, x: &TypedTree, y: &TypedTree| {
                    typed_product::<Rat>(&e, side, s, &poly(x.clone()), &poly(y.clone())).unwrap()
                };
                let v = single();
                assert_eq!(m(Side::Succ, a, &v, &v), poly(left_comb(a)));
                assert_eq!(m(Side::Prec, a, &v, &v), poly(right_comb(a)));
                let mut two = poly(comb_ll(b, a));
                two.add_term(tree_lr(a, b), one());
                assert_eq!(m(Side::Succ, a, &v, &left_comb(b)), two);
                assert_eq!(m(Side::Prec, a, &v, &left_comb(b)), poly(tree_rl(a, b)));
                assert_eq!(m(Side::Succ, a, &v, &right_comb(b)), poly(balanced(a, b)));
                assert_eq!(m(Side::Prec, a, &v, &right_comb(b)), poly(comb_rr(a, b)));
                assert_eq!(m(Side::Succ, b, &left_comb(a), &v), poly(comb_ll(b, a)));
                assert_eq!(m(Side::Prec, b, &left_comb(a), &v), poly(balanced(a, b)));
                let mut two2 = poly(comb_rr(a, b));
                two2.add_term(tree_rl(b, a), one());
                assert_eq!(m(Side::Prec, b, &right_comb(a), &v), two2);
                assert_eq!(m(Side::Succ, b, &right_comb(a), &v), poly(tree_lr(b, a)));
            }
        }
    }

    #[test]
    fn intro_table_for_the_family_structure() {
        for n in [2usize, 3] {
            let e = build_family(cyclic_group(n)).unwrap();
            let star = |a: Sym, b: Sym| ((a as usize + b as usize) % n) as Sym;
            for a in e.syms() {
                for b in e.syms() {
                    let m = |side, s, x: &TypedTree, y: &TypedTree| {
                        typed_product::<Rat>(&e, side, s, &poly(x.clone()), &poly(y.clone()))
                            .unwrap()
                    };
                    let v = single();
                    assert_eq!(m(Side::Succ, a, &v, &v), poly(left_comb(a)));
                    assert_eq!(m(Side::Prec, a, &v, &v), poly(right_comb(a)));
                    let mut two = poly(comb_ll(star(a, b), a));
                    two.add_term(tree_lr(star(a, b), b), one());
                    assert_eq!(m(Side::Succ, a, &v, &left_comb(b)), two);
                    assert_eq!(m(Side::Prec, a, &v, &left_comb(b)), poly(tree_rl(a, b)));
                    assert_eq!(m(Side::Succ, a, &v, &right_comb(b)), poly(balanced(a, b)));
                    assert_eq!(m(Side::Prec, a, &v, &right_comb(b)), poly(comb_rr(a, b)));
                    assert_eq!(m(Side::Succ, b, &left_comb(a), &v), poly(comb_ll(b, a)));
                    assert_eq!(m(Side::Prec, b, &left_comb(a), &v), poly(balanced(a, b)));
                    let mut two2 = poly(comb_rr(star(a, b), b));
                    two2.add_term(tree_rl(star(a, b), a), one());
                    assert_eq!(m(Side::Prec, b, &right_comb(a), &v), two2);
                    assert_eq!(m(Side::Succ, b, &right_comb(a), &v), poly(tree_lr(b, a)));
                }
            }
        }
    }

    #[test]
    fn grading_is_additive() {
        let e = catalog_entry("H2").unwrap();
        for t in crate::tree::enumerate_basis(2, 2) {
            for u in crate::tree::enumerate_basis(2, 2) {
                let p = typed_product::<Rat>(&e, Side::Prec, 1, &poly(t.clone()), &poly(u.clone()))
                    .unwrap();
                assert!(p.iter().all(|(tree, _)| tree.degree() == 4));
            }
        }
    }

    #[test]
    fn dendriform_identities_hold_on_catalog_and_fail_on_corruption() {
        for e in catalog2() {
            assert!(dendriform_violation(&e, 4).is_none(), "{:?}", e.label);
        }
        let f3 = catalog_entry("F3").unwrap();
        let bad = FiniteEds::new(
            f3.left.clone(),
            f3.right.clone(),
            crate::eds::OpTable::from_fn(2, |a, b| a ^ b),
            f3.tri_right.clone(),
        )
        .unwrap();
        assert!(!crate::eds::is_eds(&bad));
        let v = dendriform_violation(&bad, 4);
        assert!(v.is_some());
    }

    #[test]
    fn every_non_eds_table_is_refuted_by_a_small_triple() {
        // sampled four-tuples of tables on two symbols that fail the axioms
        // must also fail the dendriform identities at some small triple
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xbad5eed);
        let mut checked = 0;
        while checked < 40 {
            let mut table = || crate::eds::OpTable::from_fn(2, |_, _| rng.gen_range(0..2) as Sym);
            let e = FiniteEds::new(table(), table(), table(), table()).unwrap();
            if crate::eds::is_eds(&e) {
                continue;
            }
            assert!(dendriform_violation(&e, 4).is_some());
            checked += 1;
        }
    }

    #[test]
    fn shuffle_equals_recursive_on_small_pairs() {
        for e in catalog2() {
            assert!(
                shuffle_recursive_disagreement(&e, 4).is_none(),
                "{:?}",
                e.label
            );
        }
    }

    #[test]
    fn opposite_structure_mirrors_products() {
        for label in ["F5", "B2", "H2"] {
            let e = catalog_entry(label).unwrap();
            let o = e.opposite();
            for t in crate::tree::enumerate_basis(2, 2) {
                for u in crate::tree::enumerate_basis(2, 1) {
                    for a in e.syms() {
                        let lhs = typed_product::<Rat>(
                            &e,
                            Side::Prec,
                            a,
                            &poly(t.clone()),
                            &poly(u.clone()),
                        )
                        .unwrap()
                        .map_basis(|x| x.mirror());
                        let rhs = typed_product::<Rat>(
                            &o,
                            Side::Succ,
                            a,
                            &poly(u.mirror()),
                            &poly(t.mirror()),
                        )
                        .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}
