//! Dendriform structure on KΩ ⊗ A and its coproducts.
//!
//! For nondegenerate Ω the space KΩ ⊗ KT⁺ is freely generated by the
//! elements α ⊗ (one-vertex tree), which forces a unique coproduct with
//! primitive generators; that recursive construction is the normative one
//! here. The admissible-cut formula is implemented verbatim alongside it
//! and compared per structure: the two agree whenever ↶ is the left
//! projection (the F-family cases and every star construction) and differ
//! elsewhere, in which case [`compare_tree_coproducts`] returns the
//! differing terms rather than failing.
//!
//! The same split appears on words: the normative coproduct is recursive
//! from freeness (commutative case), while the plain deconcatenation
//! formula keeps the left-leg types untransported and is reported against
//! it.

use crate::eds::{FiniteEds, Side, Sym};
use crate::error::{EdsError, Result};
use crate::lincomb::LinComb;
use crate::nondegen::{derived_ops, DerivedOps};
use crate::scalar::{rat, Rat, Scalar};
use crate::tree::{node, single, Leaf, TypedTree};
use crate::word::TypedWord;
use std::collections::HashMap;

/// Element of KΩ ⊗ A for a based algebra A.
pub type Extended<B, S> = LinComb<(Sym, B), S>;

/// Element of (KΩ ⊗ A) ⊗ (KΩ ⊗ A).
pub type TensorPoly<B, S> = LinComb<((Sym, B), (Sym, B)), S>;

type Ext<B> = Extended<B, Rat>;
type Tens<B> = TensorPoly<B, Rat>;

/// A basis carrying the two half-products: typed trees or typed words.
pub trait OmegaBasis: Ord + Clone {
    fn mul_basis(eds: &FiniteEds, side: Side, a: Sym, x: &Self, y: &Self) -> Vec<(Self, u32)>;
    fn degree(&self) -> usize;
}

impl OmegaBasis for TypedTree {
    fn mul_basis(eds: &FiniteEds, side: Side, a: Sym, x: &Self, y: &Self) -> Vec<(Self, u32)> {
        crate::tree_product::product_basis(eds, side, a, x, y)
    }
    fn degree(&self) -> usize {
        TypedTree::degree(self)
    }
}

impl OmegaBasis for TypedWord {
    fn mul_basis(eds: &FiniteEds, side: Side, a: Sym, x: &Self, y: &Self) -> Vec<(Self, u32)> {
        crate::word::word_product_basis(eds, side, a, x, y)
    }
    fn degree(&self) -> usize {
        self.len()
    }
}

/// The scalar-extension product on KΩ ⊗ A:
///   (α⊗x) ≺ (β⊗y) = (α←β) ⊗ (x ≺_{α◁β} y)
///   (α⊗x) ≻ (β⊗y) = (α→β) ⊗ (x ≻_{α▷β} y)
pub fn ext_product<B: OmegaBasis, S: Scalar>(
    eds: &FiniteEds,
    side: Side,
    x: &Extended<B, S>,
    y: &Extended<B, S>,
) -> Result<Extended<B, S>> {
    let mut out = Extended::zero();
    for ((a, xb), c) in x.iter() {
        eds.check_sym(*a)?;
        for ((b, yb), d) in y.iter() {
            let (outer, inner) = match side {
                Side::Prec => (eds.l(*a, *b), eds.tl(*a, *b)),
                Side::Succ => (eds.r(*a, *b), eds.tr(*a, *b)),
            };
            let cd = c.mul(d);
            for (prod, mult) in B::mul_basis(eds, side, inner, xb, yb) {
                out.add_term((outer, prod), cd.mul_nat(mult));
            }
        }
    }
    Ok(out)
}

/// The associative product · = ≺ + ≻ on KΩ ⊗ A.
pub fn ext_dot<B: OmegaBasis, S: Scalar>(
    eds: &FiniteEds,
    x: &Extended<B, S>,
    y: &Extended<B, S>,
) -> Result<Extended<B, S>> {
    Ok(ext_product(eds, Side::Prec, x, y)?.add(&ext_product(eds, Side::Succ, x, y)?))
}

fn tensor<B: Ord + Clone>(x: &Ext<B>, y: &Ext<B>) -> Tens<B> {
    let mut out = Tens::zero();
    for (k1, c) in x.iter() {
        for (k2, d) in y.iter() {
            out.add_term((k1.clone(), k2.clone()), c * d);
        }
    }
    out
}

fn unit_term<B: Ord + Clone>(b: &(Sym, B)) -> Ext<B> {
    Ext::term(b.clone(), rat(1))
}

/// Dendriform-bialgebra expansion of Δ(x ≺ y) from Δx and Δy:
/// x⊗y + x'≺y ⊗ x'' + x' ⊗ x''·y + x≺y' ⊗ y'' + x'≺y' ⊗ x''·y''.
pub fn delta_of_prec<B: OmegaBasis>(
    eds: &FiniteEds,
    x: &Ext<B>,
    y: &Ext<B>,
    dx: &Tens<B>,
    dy: &Tens<B>,
) -> Result<Tens<B>> {
    let mut out = tensor(x, y);
    for ((x1, x2), c) in dx.iter() {
        let u1 = unit_term(x1);
        let u2 = unit_term(x2);
        out.add_assign(&tensor(&ext_product(eds, Side::Prec, &u1, y)?, &u2).scale(c));
        out.add_assign(&tensor(&u1, &ext_dot(eds, &u2, y)?).scale(c));
    }
    for ((y1, y2), c) in dy.iter() {
        let u1 = unit_term(y1);
        let u2 = unit_term(y2);
        out.add_assign(&tensor(&ext_product(eds, Side::Prec, x, &u1)?, &u2).scale(c));
    }
    for ((x1, x2), c) in dx.iter() {
        for ((y1, y2), d) in dy.iter() {
            let t = tensor(
                &ext_product(eds, Side::Prec, &unit_term(x1), &unit_term(y1))?,
                &ext_dot(eds, &unit_term(x2), &unit_term(y2))?,
            );
            out.add_assign(&t.scale(&(c * d)));
        }
    }
    Ok(out)
}

/// Dendriform-bialgebra expansion of Δ(x ≻ y):
/// y⊗x + x'≻y ⊗ x'' + y' ⊗ x·y'' + x≻y' ⊗ y'' + x'≻y' ⊗ x''·y''.
pub fn delta_of_succ<B: OmegaBasis>(
    eds: &FiniteEds,
    x: &Ext<B>,
    y: &Ext<B>,
    dx: &Tens<B>,
    dy: &Tens<B>,
) -> Result<Tens<B>> {
    let mut out = tensor(y, x);
    for ((x1, x2), c) in dx.iter() {
        let u1 = unit_term(x1);
        let u2 = unit_term(x2);
        out.add_assign(&tensor(&ext_product(eds, Side::Succ, &u1, y)?, &u2).scale(c));
    }
    for ((y1, y2), c) in dy.iter() {
        let u1 = unit_term(y1);
        let u2 = unit_term(y2);
        out.add_assign(&tensor(&u1, &ext_dot(eds, x, &u2)?).scale(c));
        out.add_assign(&tensor(&ext_product(eds, Side::Succ, x, &u1)?, &u2).scale(c));
    }
    for ((x1, x2), c) in dx.iter() {
        for ((y1, y2), d) in dy.iter() {
            let t = tensor(
                &ext_product(eds, Side::Succ, &unit_term(x1), &unit_term(y1))?,
                &ext_dot(eds, &unit_term(x2), &unit_term(y2))?,
            );
            out.add_assign(&t.scale(&(c * d)));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// The recursive coproduct on trees
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TreeCoproductMode {
    /// Normative: recursion through the forced factorizations.
    Recursive,
    /// The admissible-cut sum, taken verbatim.
    Cuts,
}

/// Coproduct engine for one nondegenerate structure; memoizes the recursive
/// coproduct of basis elements.
pub struct TreeCoproduct<'a> {
    eds: &'a FiniteEds,
    ops: DerivedOps,
    memo: HashMap<(Sym, TypedTree), Tens<TypedTree>>,
}

impl<'a> TreeCoproduct<'a> {
    pub fn new(eds: &'a FiniteEds) -> Result<Self> {
        Ok(TreeCoproduct {
            eds,
            ops: derived_ops(eds)?,
            memo: HashMap::new(),
        })
    }

    pub fn derived(&self) -> &DerivedOps {
        &self.ops
    }

    /// Δ(α ⊗ T), recursively. Generators are primitive; a tree T₁∨^β_γ T₂
    /// factors as ((β▶α)⊗T₁) ≻ ((β↷α)↶γ ⊗ ∨) ≺ ((α◀γ)⊗T₂), with the degenerate
    /// variants when a subtree is trivial, and Δ follows by compatibility.
    pub fn recursive_basis(&mut self, alpha: Sym, t: &TypedTree) -> Result<Tens<TypedTree>> {
        if let Some(hit) = self.memo.get(&(alpha, t.clone())) {
            return Ok(hit.clone());
        }
        let TypedTree::Node(l, lt, rt, r) = t else {
            return Err(EdsError::Structural("coproduct of the trivial tree".into()));
        };
        let res = match (lt, rt) {
            (None, None) => Tens::zero(),
            (None, Some(g)) => {
                // α⊗(|∨^∅_γ T₂) = ((α↶γ)⊗∨) ≺ ((α◀γ)⊗T₂), left factor primitive
                let x = Ext::term((self.ops.cl(alpha, *g), single()), rat(1));
                let yk = (self.ops.bl(alpha, *g), (**r).clone());
                let dy = self.recursive_basis(yk.0, &yk.1)?;
                delta_of_prec(self.eds, &x, &unit_term(&yk), &Tens::zero(), &dy)?
            }
            (Some(b), None) => {
                // α⊗(T₁∨^β_∅ |) = ((β▶α)⊗T₁) ≻ ((β↷α)⊗∨), right factor primitive
                let xk = (self.ops.br(*b, alpha), (**l).clone());
                let y = Ext::term((self.ops.cr(*b, alpha), single()), rat(1));
                let dx = self.recursive_basis(xk.0, &xk.1)?;
                delta_of_succ(self.eds, &unit_term(&xk), &y, &dx, &Tens::zero())?
            }
            (Some(b), Some(g)) => {
                // α⊗(T₁∨^β_γ T₂) = U ≺ C with U = (α↶γ)⊗(T₁∨^β_∅ |), C = (α◀γ)⊗T₂
                let uk = (
                    self.ops.cl(alpha, *g),
                    node((**l).clone(), Some(*b), None, Leaf),
                );
                let ck = (self.ops.bl(alpha, *g), (**r).clone());
                let du = self.recursive_basis(uk.0, &uk.1)?;
                let dc = self.recursive_basis(ck.0, &ck.1)?;
                delta_of_prec(self.eds, &unit_term(&uk), &unit_term(&ck), &du, &dc)?
            }
        };
        self.memo.insert((alpha, t.clone()), res.clone());
        Ok(res)
    }

    pub fn recursive(&mut self, x: &Ext<TypedTree>) -> Result<Tens<TypedTree>> {
        let mut out = Tens::zero();
        for ((a, t), c) in x.clone().into_iter_terms() {
            out.add_assign(&self.recursive_basis(a, &t)?.scale(&c));
        }
        Ok(out)
    }

    /// Admissible-cut coproduct of a basis element.
    pub fn cuts_basis(&self, alpha: Sym, t: &TypedTree) -> Result<Tens<TypedTree>> {
        let edges = internal_edges(t);
        let mut out = Tens::zero();
        for cut in antichains(&edges) {
            let mut sorted = cut.clone();
            sorted.sort_by_key(planar_key);
            let mut right: Option<Ext<TypedTree>> = None;
            for path in &sorted {
                let piece = Ext::term(
                    (
                        chain_type(&self.ops, t, path, alpha),
                        subtree_at(t, path).clone(),
                    ),
                    rat(1),
                );
                right = Some(match right {
                    None => piece,
                    Some(acc) => ext_dot(self.eds, &acc, &piece)?,
                });
            }
            let trunk = Ext::term((alpha, remove_subtrees(t, &cut)), rat(1));
            out.add_assign(&tensor(&trunk, &right.unwrap()));
        }
        Ok(out)
    }

    pub fn cuts(&self, x: &Ext<TypedTree>) -> Result<Tens<TypedTree>> {
        let mut out = Tens::zero();
        for ((a, t), c) in x.iter() {
            out.add_assign(&self.cuts_basis(*a, t)?.scale(c));
        }
        Ok(out)
    }
}

/// Coproduct on KΩ ⊗ KT⁺; errors on degenerate structures.
pub fn coproduct_tree(
    eds: &FiniteEds,
    mode: TreeCoproductMode,
    x: &Ext<TypedTree>,
) -> Result<Tens<TypedTree>> {
    let mut engine = TreeCoproduct::new(eds)?;
    match mode {
        TreeCoproductMode::Recursive => engine.recursive(x),
        TreeCoproductMode::Cuts => engine.cuts(x),
    }
}

/// An internal edge, addressed by the root-to-child path ('false' = left).
pub type EdgePath = Vec<bool>;

fn internal_edges(t: &TypedTree) -> Vec<EdgePath> {
    let mut out = Vec::new();
    fn walk(t: &TypedTree, prefix: &mut EdgePath, out: &mut Vec<EdgePath>) {
        let TypedTree::Node(l, _, _, r) = t else {
            return;
        };
        if !l.is_leaf() {
            prefix.push(false);
            out.push(prefix.clone());
            walk(l, prefix, out);
            prefix.pop();
        }
        if !r.is_leaf() {
            prefix.push(true);
            out.push(prefix.clone());
            walk(r, prefix, out);
            prefix.pop();
        }
    }
    walk(t, &mut Vec::new(), &mut out);
    out
}

/// Nonempty subsets no member of which is an ancestor of another.
fn antichains(edges: &[EdgePath]) -> Vec<Vec<EdgePath>> {
    let mut out = Vec::new();
    let m = edges.len();
    for mask in 1u32..(1 << m) {
        let subset: Vec<EdgePath> = (0..m)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| edges[i].clone())
            .collect();
        let ok = subset
            .iter()
            .all(|a| subset.iter().all(|b| a == b || !is_prefix(a, b)));
        if ok {
            out.push(subset);
        }
    }
    out
}

fn is_prefix(a: &EdgePath, b: &EdgePath) -> bool {
    a.len() < b.len() && b[..a.len()] == a[..]
}

fn planar_key(path: &EdgePath) -> Vec<u8> {
    path.iter().map(|&right| right as u8).collect()
}

fn subtree_at<'t>(t: &'t TypedTree, path: &EdgePath) -> &'t TypedTree {
    let mut cur = t;
    for &right in path {
        let TypedTree::Node(l, _, _, r) = cur else {
            unreachable!();
        };
        cur = if right { r } else { l };
    }
    cur
}

fn remove_subtrees(t: &TypedTree, cut: &[EdgePath]) -> TypedTree {
    fn rec(t: &TypedTree, cut: &[EdgePath], prefix: &mut EdgePath) -> TypedTree {
        let TypedTree::Node(l, lt, rt, r) = t else {
            return Leaf;
        };
        prefix.push(false);
        let cut_l = cut.iter().any(|p| p == prefix);
        let new_l = if cut_l { Leaf } else { rec(l, cut, prefix) };
        prefix.pop();
        prefix.push(true);
        let cut_r = cut.iter().any(|p| p == prefix);
        let new_r = if cut_r { Leaf } else { rec(r, cut, prefix) };
        prefix.pop();
        node(
            new_l.clone(),
            if new_l.is_leaf() { None } else { *lt },
            if new_r.is_leaf() { None } else { *rt },
            new_r,
        )
    }
    rec(t, cut, &mut Vec::new())
}

/// Transported type of the subtree below `path`: the composite of
/// φ^▶ (left steps) and φ^◀ (right steps) along the root-to-edge path,
/// applied to α.
fn chain_type(ops: &DerivedOps, t: &TypedTree, path: &EdgePath, alpha: Sym) -> Sym {
    let mut cur = t;
    let mut c = alpha;
    for &right in path {
        let TypedTree::Node(l, lt, rt, r) = cur else {
            unreachable!();
        };
        if right {
            c = ops.bl(c, rt.expect("internal edge must carry a type"));
            cur = r;
        } else {
            c = ops.br(lt.expect("internal edge must carry a type"), c);
            cur = l;
        }
    }
    c
}

/// One differing coproduct value between the recursive and cut forms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiscrepancyRecord {
    pub label: String,
    pub alpha: Sym,
    pub tree: TypedTree,
    pub recursive: Tens<TypedTree>,
    pub cuts: Tens<TypedTree>,
}

/// Renders a tensor as `coef · (sym ⊗ basis) ⊗ (sym ⊗ basis) + …` in
/// canonical term order.
pub fn format_tensor<B: Ord + Clone>(
    d: &TensorPoly<B, Rat>,
    show: impl Fn(&B) -> String,
) -> String {
    if d.is_zero() {
        return "0".into();
    }
    d.iter()
        .map(|(((s1, b1), (s2, b2)), c)| {
            format!(
                "{} · ({} ⊗ {}) ⊗ ({} ⊗ {})",
                crate::scalar::rat_to_string(c),
                s1,
                show(b1),
                s2,
                show(b2)
            )
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl std::fmt::Display for DiscrepancyRecord {
    /// The line-oriented record `(eds, tree, alpha, recursive_term, cuts_term)`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {})",
            self.label,
            self.tree,
            self.alpha,
            format_tensor(&self.recursive, |t| t.to_string()),
            format_tensor(&self.cuts, |t| t.to_string()),
        )
    }
}

/// Compares the two coproduct constructions on all basis elements with up
/// to `bound` internal vertices.
pub fn compare_tree_coproducts(eds: &FiniteEds, bound: usize) -> Result<Vec<DiscrepancyRecord>> {
    let mut engine = TreeCoproduct::new(eds)?;
    let label = eds.label_or("eds");
    let mut out = Vec::new();
    for n in 1..=bound {
        for t in crate::tree::enumerate_basis(eds.size(), n) {
            for a in eds.syms() {
                let rec = engine.recursive_basis(a, &t)?;
                let cut = engine.cuts_basis(a, &t)?;
                if rec != cut {
                    out.push(DiscrepancyRecord {
                        label: label.clone(),
                        alpha: a,
                        tree: t.clone(),
                        recursive: rec,
                        cuts: cut,
                    });
                }
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Coproducts on words
// ---------------------------------------------------------------------------

/// Normative word coproduct (nondegenerate & commutative): recursion via the
/// forced factorization α₁⊗(v₁·w) = ((α₁↶α₂)⊗v₁) ≺ ((α₁◀α₂)⊗w).
pub fn coproduct_word(eds: &FiniteEds, x: &Ext<TypedWord>) -> Result<Tens<TypedWord>> {
    if !eds.is_commutative() {
        return Err(EdsError::Precondition(
            "word coproduct requires a commutative structure".into(),
        ));
    }
    let ops = derived_ops(eds)?;
    let mut out = Tens::zero();
    for ((a, w), c) in x.iter() {
        out.add_assign(&word_delta_basis(eds, &ops, *a, w)?.scale(c));
    }
    Ok(out)
}

fn word_delta_basis(
    eds: &FiniteEds,
    ops: &DerivedOps,
    alpha: Sym,
    w: &TypedWord,
) -> Result<Tens<TypedWord>> {
    if w.len() == 1 {
        return Ok(Tens::zero());
    }
    let a2 = w.types()[0];
    let head = TypedWord::single(w.letters()[0]);
    let tail = TypedWord::new(w.letters()[1..].to_vec(), w.types()[1..].to_vec()).unwrap();
    let x = Ext::term((ops.cl(alpha, a2), head), rat(1));
    let yk = (ops.bl(alpha, a2), tail);
    let dy = word_delta_basis(eds, ops, yk.0, &yk.1)?;
    delta_of_prec(eds, &x, &unit_term(&yk), &Tens::zero(), &dy)
}

/// The deconcatenation formula: left legs keep their types, the right leg's
/// leading type is the left-nested ◀-chain α₁◀α₂◀…◀α_{i+1}. Requires
/// nondegeneracy only; agreement with [`coproduct_word`] holds exactly when
/// ↶ is the left projection.
pub fn coproduct_word_deconcat(eds: &FiniteEds, x: &Ext<TypedWord>) -> Result<Tens<TypedWord>> {
    let ops = derived_ops(eds)?;
    let mut out = Tens::zero();
    for ((alpha, w), c) in x.iter() {
        let n = w.len();
        for i in 1..n {
            let left =
                TypedWord::new(w.letters()[..i].to_vec(), w.types()[..i - 1].to_vec()).unwrap();
            let right = TypedWord::new(w.letters()[i..].to_vec(), w.types()[i..].to_vec()).unwrap();
            let mut chain = *alpha;
            for j in 0..i {
                chain = ops.bl(chain, w.types()[j]);
            }
            out.add_term(((*alpha, left), (chain, right)), *c);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Compatibility checking
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Algebra {
    Trees,
    Words,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CompatViolation {
    /// (side, x, y) where Δ(x side y) differs from the bialgebra expansion;
    /// basis elements are printed through Debug.
    Compatibility {
        side: Side,
        x: String,
        y: String,
        got: String,
        want: String,
    },
    Coassociativity {
        element: String,
    },
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BialgebraReport {
    pub coassociative: bool,
    pub compatible: bool,
    pub violations: Vec<CompatViolation>,
    /// Two distinct generator pairs with equal ≺-products, exhibited when
    /// φ_← is not injective (and the analogue for φ_→ / ≻): the concrete
    /// obstruction to any coproduct with primitive generators.
    pub obstruction: Option<ObstructionWitness>,
}

impl BialgebraReport {
    pub fn passed(&self) -> bool {
        self.coassociative && self.compatible && self.obstruction.is_none()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ObstructionWitness {
    pub side: Side,
    pub first_pair: (Sym, Sym),
    pub second_pair: (Sym, Sym),
    /// The common product of the two generator pairs, printed.
    pub product: String,
}

/// Exhibits two distinct generator pairs (α,β) ≠ (α',β') whose ≺-products
/// of generators coincide in KΩ ⊗ KT⁺, when φ_← (or φ_→, via ≻) is not
/// injective.
pub fn generator_collision(eds: &FiniteEds) -> Option<ObstructionWitness> {
    for (side, phi) in [
        (
            Side::Prec,
            Box::new(|a, b| eds.phi_left(a, b)) as Box<dyn Fn(Sym, Sym) -> (Sym, Sym)>,
        ),
        (Side::Succ, Box::new(|a, b| eds.phi_right(a, b))),
    ] {
        let mut seen: HashMap<(Sym, Sym), (Sym, Sym)> = HashMap::new();
        for a in eds.syms() {
            for b in eds.syms() {
                let img = phi(a, b);
                if let Some(&first) = seen.get(&img) {
                    // confirm with the actual products of generators
                    let g = |s: Sym| Ext::<TypedTree>::term((s, single()), rat(1));
                    let p1 = ext_product(eds, side, &g(first.0), &g(first.1)).unwrap();
                    let p2 = ext_product(eds, side, &g(a), &g(b)).unwrap();
                    debug_assert_eq!(p1, p2);
                    return Some(ObstructionWitness {
                        side,
                        first_pair: first,
                        second_pair: (a, b),
                        product: format_tensor_leg(&p1),
                    });
                }
                seen.insert(img, (a, b));
            }
        }
    }
    None
}

fn format_tensor_leg(x: &Ext<TypedTree>) -> String {
    x.iter()
        .map(|((s, t), c)| format!("{} · ({s} ⊗ {t})", crate::scalar::rat_to_string(c)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Verifies coassociativity and both bialgebra compatibility identities on
/// all basis elements/pairs up to total degree `bound`.
///
/// For degenerate structures the report instead carries the generator-pair
/// obstruction. For non-commutative nondegenerate structures on words the
/// deconcatenation coproduct is used and its concrete compatibility
/// violation is reported (its existence is what rules a coproduct out).
pub fn check_bialgebra_compat(eds: &FiniteEds, algebra: Algebra, bound: usize) -> BialgebraReport {
    if derived_ops(eds).is_err() {
        return BialgebraReport {
            coassociative: false,
            compatible: false,
            violations: Vec::new(),
            obstruction: generator_collision(eds),
        };
    }
    match algebra {
        Algebra::Trees => {
            let mut engine = TreeCoproduct::new(eds).unwrap();
            let basis: Vec<(Sym, TypedTree)> = (1..=bound)
                .flat_map(|n| {
                    crate::tree::enumerate_basis(eds.size(), n)
                        .into_iter()
                        .flat_map(|t| eds.syms().map(move |s| (s, t.clone())))
                        .collect::<Vec<_>>()
                })
                .collect();
            check_compat_generic(eds, basis, bound, move |_, x| engine.recursive(x).unwrap())
        }
        Algebra::Words => {
            let commutative = eds.is_commutative();
            let ops = derived_ops(eds).unwrap();
            let basis: Vec<(Sym, TypedWord)> = (1..=bound)
                .flat_map(|n| {
                    crate::word::enumerate_words(2, eds.size(), n)
                        .into_iter()
                        .flat_map(|w| eds.syms().map(move |s| (s, w.clone())))
                        .collect::<Vec<_>>()
                })
                .collect();
            check_compat_generic(eds, basis, bound, move |e, x| {
                if commutative {
                    let mut out = Tens::zero();
                    for ((a, w), c) in x.iter() {
                        out.add_assign(&word_delta_basis(e, &ops, *a, w).unwrap().scale(c));
                    }
                    out
                } else {
                    coproduct_word_deconcat(e, x).unwrap()
                }
            })
        }
    }
}

fn check_compat_generic<B: OmegaBasis + std::fmt::Debug>(
    eds: &FiniteEds,
    basis: Vec<(Sym, B)>,
    bound: usize,
    mut delta: impl FnMut(&FiniteEds, &Ext<B>) -> Tens<B>,
) -> BialgebraReport {
    let mut report = BialgebraReport {
        coassociative: true,
        compatible: true,
        violations: Vec::new(),
        obstruction: None,
    };
    // coassociativity on single basis elements
    for k in &basis {
        let x = unit_term(k);
        let d = delta(eds, &x);
        type Tensor3<B> = LinComb<((Sym, B), (Sym, B), (Sym, B)), Rat>;
        let mut lhs: Tensor3<B> = LinComb::zero();
        let mut rhs = lhs.clone();
        for ((k1, k2), c) in d.iter() {
            for ((k11, k12), e) in delta(eds, &unit_term(k1)).iter() {
                lhs.add_term((k11.clone(), k12.clone(), k2.clone()), c * e);
            }
            for ((k21, k22), e) in delta(eds, &unit_term(k2)).iter() {
                rhs.add_term((k1.clone(), k21.clone(), k22.clone()), c * e);
            }
        }
        if lhs != rhs {
            report.coassociative = false;
            report.violations.push(CompatViolation::Coassociativity {
                element: format!("{k:?}"),
            });
        }
    }
    // the two compatibility identities on pairs within the degree bound
    for k1 in &basis {
        for k2 in &basis {
            if k1.1.degree() + k2.1.degree() > bound {
                continue;
            }
            let x = unit_term(k1);
            let y = unit_term(k2);
            let dx = delta(eds, &x);
            let dy = delta(eds, &y);
            for side in [Side::Prec, Side::Succ] {
                let got = delta(eds, &ext_product(eds, side, &x, &y).unwrap());
                let want = match side {
                    Side::Prec => delta_of_prec(eds, &x, &y, &dx, &dy).unwrap(),
                    Side::Succ => delta_of_succ(eds, &x, &y, &dx, &dy).unwrap(),
                };
                if got != want {
                    report.compatible = false;
                    report.violations.push(CompatViolation::Compatibility {
                        side,
                        x: format!("{k1:?}"),
                        y: format!("{k2:?}"),
                        got: format!("{:?}", got.sub(&want)),
                        want: String::new(),
                    });
                    if report.violations.len() > 8 {
                        return report;
                    }
                }
            }
        }
    }
    report
}
