//! The nonsymmetric operad of typed trees: composition through the tree
//! products, associative and dendriform arity-2 elements, brute-force
//! classification over prime fields, and the arity-3 dimension of the
//! Koszul dual presentation.

use crate::eds::{FiniteEds, Side, Sym};
use crate::error::{EdsError, Result};
use crate::linalg;
use crate::scalar::{rat, rat_to_string, Fp, Rat, Scalar};
use crate::tree::{node, single, Leaf, TypedTree};
use crate::tree_product::{typed_product, TreePoly};
use rand::Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Catalan numbers; dim P(n) = Catalan(n)·ω^{n−1}.
pub fn catalan(n: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..n as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// The operad identity I = the one-vertex tree.
pub fn identity_tree() -> TypedTree {
    single()
}

/// ≺_α as a basis tree: the two-vertex right comb with inner type α.
pub fn prec_generator(a: Sym) -> TypedTree {
    node(Leaf, None, Some(a), single())
}

/// ≻_α as a basis tree: the two-vertex left comb with inner type α.
pub fn succ_generator(a: Sym) -> TypedTree {
    node(single(), Some(a), None, Leaf)
}

/// Scalars with a way to build the multiplicative unit from a sample value
/// (needed because the prime field carries a runtime modulus).
pub trait OneLike: Scalar {
    fn one_like(sample: &Self) -> Self;
    fn one_default() -> Option<Self>;
}

impl OneLike for Rat {
    fn one_like(_: &Self) -> Self {
        rat(1)
    }
    fn one_default() -> Option<Self> {
        Some(rat(1))
    }
}

impl OneLike for Fp {
    fn one_like(sample: &Self) -> Self {
        Fp::new(1, sample.modulus())
    }
    fn one_default() -> Option<Self> {
        None
    }
}

/// A homogeneous element of the operad: a combination of trees with a fixed
/// number of internal vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OperadElement<S: Scalar> {
    arity: usize,
    value: TreePoly<S>,
}

impl<S: Scalar> OperadElement<S> {
    pub fn new(arity: usize, value: TreePoly<S>) -> Result<Self> {
        if value.iter().any(|(t, _)| t.degree() != arity) {
            return Err(EdsError::Structural(
                "operad element support must be homogeneous".into(),
            ));
        }
        Ok(OperadElement { arity, value })
    }

    pub fn from_tree(t: TypedTree, coef: S) -> Self {
        OperadElement {
            arity: t.degree(),
            value: TreePoly::term(t, coef),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn value(&self) -> &TreePoly<S> {
        &self.value
    }
}

/// Operadic composition t∘(args…), multilinear in everything.
///
/// On a basis tree T = T₁∨^α_β T₂ with i internal vertices in T₁, the
/// recursion substitutes `args[i]` at the root and the remaining blocks into
/// the subtrees: (T₁∘left) ≻_α `args[i]` ≺_β (T₂∘right).
pub fn compose<S: Scalar>(
    eds: &FiniteEds,
    t: &OperadElement<S>,
    args: &[OperadElement<S>],
) -> Result<OperadElement<S>> {
    if args.len() != t.arity {
        return Err(EdsError::ArityMismatch {
            expected: t.arity,
            got: args.len(),
        });
    }
    let out_arity: usize = args.iter().map(|a| a.arity).sum();
    let mut out = TreePoly::zero();
    for (tree, c) in t.value.iter() {
        let partial = compose_basis(eds, tree, args)?;
        for (u, d) in partial.iter() {
            out.add_term(u.clone(), c.mul(d));
        }
    }
    OperadElement::new(out_arity, out)
}

fn compose_basis<S: Scalar>(
    eds: &FiniteEds,
    t: &TypedTree,
    args: &[OperadElement<S>],
) -> Result<TreePoly<S>> {
    let TypedTree::Node(l, lt, rt, r) = t else {
        return Err(EdsError::Structural(
            "cannot compose at the trivial tree".into(),
        ));
    };
    let i = l.degree();
    let mut acc = args[i].value.clone();
    if let Some(a) = lt {
        let left_val = compose_basis(eds, l, &args[..i])?;
        acc = typed_product(eds, Side::Succ, *a, &left_val, &acc)?;
    }
    if let Some(b) = rt {
        let right_val = compose_basis(eds, r, &args[i + 1..])?;
        acc = typed_product(eds, Side::Prec, *b, &acc, &right_val)?;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Arity-2 elements
// ---------------------------------------------------------------------------

/// A coefficient vector over the generators {≺_α, ≻_α}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arity2Element<S: Scalar> {
    coeffs: BTreeMap<(Side, Sym), S>,
}

impl<S: Scalar> Default for Arity2Element<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> Arity2Element<S> {
    pub fn zero() -> Self {
        Arity2Element {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_coeffs(coeffs: impl IntoIterator<Item = ((Side, Sym), S)>) -> Self {
        let mut out = Self::zero();
        for ((side, a), v) in coeffs {
            out.set(side, a, v);
        }
        out
    }

    pub fn set(&mut self, side: Side, a: Sym, coef: S) {
        if coef.is_zero() {
            self.coeffs.remove(&(side, a));
        } else {
            self.coeffs.insert((side, a), coef);
        }
    }

    pub fn coeff(&self, side: Side, a: Sym) -> Option<&S> {
        self.coeffs.get(&(side, a))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Side, Sym), &S)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((side, a), c) in other.iter() {
            let sum = match out.coeff(*side, *a) {
                Some(x) => x.add(c),
                None => c.clone(),
            };
            out.set(*side, *a, sum);
        }
        out
    }

    pub fn to_operad_element(&self) -> OperadElement<S> {
        let mut value = TreePoly::zero();
        for ((side, a), c) in self.iter() {
            let t = match side {
                Side::Prec => prec_generator(*a),
                Side::Succ => succ_generator(*a),
            };
            value.add_term(t, c.clone());
        }
        OperadElement { arity: 2, value }
    }
}

fn cmul<S: Scalar>(x: Option<&S>, y: Option<&S>) -> Option<S> {
    match (x, y) {
        (Some(a), Some(b)) => Some(a.mul(b)),
        _ => None,
    }
}

fn cmul_o<S: Scalar>(x: Option<S>, y: Option<S>) -> Option<S> {
    match (x, y) {
        (Some(a), Some(b)) => Some(a.mul(&b)),
        _ => None,
    }
}

fn cadd<S: Scalar>(x: Option<S>, y: Option<S>) -> Option<S> {
    match (x, y) {
        (Some(a), Some(b)) => Some(a.add(&b)),
        (Some(a), None) | (None, Some(a)) => Some(a),
        (None, None) => None,
    }
}

fn ceq<S: Scalar>(x: &Option<S>, y: &Option<S>) -> bool {
    match (x, y) {
        (Some(a), Some(b)) => a == b,
        (Some(a), None) | (None, Some(a)) => a.is_zero(),
        (None, None) => true,
    }
}

// ---------------------------------------------------------------------------
// Associativity
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AssocMode {
    /// Coefficient equations over all symbol pairs; the nondegenerate
    /// simplification is taken when the structure admits it.
    Equations,
    /// Explicitly compare m∘(m,I) with m∘(I,m) via operadic composition.
    Composition,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AssocReport {
    pub associative: bool,
    /// (equation family, symbol pair) of each failed equation.
    pub witnesses: Vec<(&'static str, (Sym, Sym))>,
}

pub fn check_associative<S: OneLike>(
    eds: &FiniteEds,
    m: &Arity2Element<S>,
    mode: AssocMode,
) -> AssocReport {
    match mode {
        AssocMode::Composition => {
            let trivially = AssocReport {
                associative: true,
                witnesses: Vec::new(),
            };
            let Some((_, sample)) = m.iter().next() else {
                return trivially;
            };
            let me = m.to_operad_element();
            let id = OperadElement::from_tree(identity_tree(), S::one_like(sample));
            let lhs = compose(eds, &me, &[me.clone(), id.clone()]).unwrap();
            let rhs = compose(eds, &me, &[id, me.clone()]).unwrap();
            let associative = lhs == rhs;
            AssocReport {
                associative,
                witnesses: if associative {
                    Vec::new()
                } else {
                    vec![("composition", (0, 0))]
                },
            }
        }
        AssocMode::Equations => {
            if crate::nondegen::is_nondegenerate(eds) {
                check_assoc_nondegenerate(eds, m)
            } else {
                check_assoc_general(eds, m)
            }
        }
    }
}

/// Coefficient equations in the general (possibly degenerate) case:
/// for all (u,v),
///   b_u·b_v = Σ_{φ_→(α,β)=(u,v)} b_α·b_β      a_u·a_v = Σ_{φ_←(α,β)=(u,v)} a_α·a_β
///   b_u·a_v = Σ_{φ_←(α,β)=(u,v)} b_α·b_β      a_u·b_v = Σ_{φ_→(α,β)=(u,v)} a_α·a_β
pub fn check_assoc_general<S: Scalar>(eds: &FiniteEds, m: &Arity2Element<S>) -> AssocReport {
    let a = |x: Sym| m.coeff(Side::Prec, x);
    let b = |x: Sym| m.coeff(Side::Succ, x);
    let mut witnesses = Vec::new();
    let pre_l = preimages(eds, true);
    let pre_r = preimages(eds, false);
    for u in eds.syms() {
        for v in eds.syms() {
            let key = (u as usize) * eds.size() + v as usize;
            let sum_bb_r = sum_prod2(&pre_r[key], |x, y| cmul(b(x), b(y)));
            let sum_aa_l = sum_prod2(&pre_l[key], |x, y| cmul(a(x), a(y)));
            let sum_bb_l = sum_prod2(&pre_l[key], |x, y| cmul(b(x), b(y)));
            let sum_aa_r = sum_prod2(&pre_r[key], |x, y| cmul(a(x), a(y)));
            if !ceq(&cmul(b(u), b(v)), &sum_bb_r) {
                witnesses.push(("b.b = sum_r b.b", (u, v)));
            }
            if !ceq(&cmul(a(u), a(v)), &sum_aa_l) {
                witnesses.push(("a.a = sum_l a.a", (u, v)));
            }
            if !ceq(&cmul(b(u), a(v)), &sum_bb_l) {
                witnesses.push(("b.a = sum_l b.b", (u, v)));
            }
            if !ceq(&cmul(a(u), b(v)), &sum_aa_r) {
                witnesses.push(("a.b = sum_r a.a", (u, v)));
            }
        }
    }
    AssocReport {
        associative: witnesses.is_empty(),
        witnesses,
    }
}

/// Nondegenerate simplification: for all (α,β),
///   b_{α→β}·b_{α▷β} = b_α·b_β      a_{α←β}·a_{α◁β} = a_α·a_β
///   b_{α←β}·a_{α◁β} = b_α·b_β      a_{α→β}·b_{α▷β} = a_α·a_β
pub fn check_assoc_nondegenerate<S: Scalar>(eds: &FiniteEds, m: &Arity2Element<S>) -> AssocReport {
    let a = |x: Sym| m.coeff(Side::Prec, x);
    let b = |x: Sym| m.coeff(Side::Succ, x);
    let mut witnesses = Vec::new();
    for x in eds.syms() {
        for y in eds.syms() {
            let bb = cmul(b(x), b(y));
            let aa = cmul(a(x), a(y));
            if !ceq(&cmul(b(eds.r(x, y)), b(eds.tr(x, y))), &bb) {
                witnesses.push(("b_r.b_tr = b.b", (x, y)));
            }
            if !ceq(&cmul(a(eds.l(x, y)), a(eds.tl(x, y))), &aa) {
                witnesses.push(("a_l.a_tl = a.a", (x, y)));
            }
            if !ceq(&cmul(b(eds.l(x, y)), a(eds.tl(x, y))), &bb) {
                witnesses.push(("b_l.a_tl = b.b", (x, y)));
            }
            if !ceq(&cmul(a(eds.r(x, y)), b(eds.tr(x, y))), &aa) {
                witnesses.push(("a_r.b_tr = a.a", (x, y)));
            }
        }
    }
    AssocReport {
        associative: witnesses.is_empty(),
        witnesses,
    }
}

fn preimages(eds: &FiniteEds, left: bool) -> Vec<Vec<(Sym, Sym)>> {
    let n = eds.size();
    let mut out = vec![Vec::new(); n * n];
    for a in eds.syms() {
        for b in eds.syms() {
            let (u, v) = if left {
                eds.phi_left(a, b)
            } else {
                eds.phi_right(a, b)
            };
            out[(u as usize) * n + v as usize].push((a, b));
        }
    }
    out
}

fn sum_prod2<S: Scalar>(pairs: &[(Sym, Sym)], f: impl Fn(Sym, Sym) -> Option<S>) -> Option<S> {
    let mut acc: Option<S> = None;
    for &(x, y) in pairs {
        acc = cadd(acc, f(x, y));
    }
    acc
}

// ---------------------------------------------------------------------------
// Dendriform pairs
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DendReport {
    pub dendriform: bool,
    pub witnesses: Vec<(&'static str, (Sym, Sym))>,
}

/// Evaluates the thirteen coefficient equation families equivalent to the
/// three dendriform relations for the candidate pair (≺, ≻) with
/// ≺ = Σ a_α ≺_α + b_α ≻_α and ≻ = Σ c_α ≺_α + d_α ≻_α.
pub fn check_dendriform_pair<S: Scalar>(
    eds: &FiniteEds,
    p: &Arity2Element<S>,
    s: &Arity2Element<S>,
) -> DendReport {
    let a = |x: Sym| p.coeff(Side::Prec, x);
    let b = |x: Sym| p.coeff(Side::Succ, x);
    let c = |x: Sym| s.coeff(Side::Prec, x);
    let d = |x: Sym| s.coeff(Side::Succ, x);
    let bd = |x: Sym| cadd(b(x).cloned(), d(x).cloned());
    let ac = |x: Sym| cadd(a(x).cloned(), c(x).cloned());
    let pre_l = preimages(eds, true);
    let pre_r = preimages(eds, false);
    let mut witnesses = Vec::new();
    let n = eds.size();
    for u in eds.syms() {
        for v in eds.syms() {
            let key = (u as usize) * n + v as usize;
            let checks: [(&'static str, Option<S>, Option<S>); 13] = [
                (
                    "b.b = sum_r b(b+d)",
                    cmul(b(u), b(v)),
                    sum_prod2(&pre_r[key], |x, y| cmul_o(b(x).cloned(), bd(y))),
                ),
                (
                    "a(a+c) = sum_l a.a",
                    cmul_o(a(u).cloned(), ac(v)),
                    sum_prod2(&pre_l[key], |x, y| cmul(a(x), a(y))),
                ),
                (
                    "b.a = sum_l b(b+d)",
                    cmul(b(u), a(v)),
                    sum_prod2(&pre_l[key], |x, y| cmul_o(b(x).cloned(), bd(y))),
                ),
                (
                    "a(b+d) = sum_r a.a",
                    cmul_o(a(u).cloned(), bd(v)),
                    sum_prod2(&pre_r[key], |x, y| cmul(a(x), a(y))),
                ),
                ("b.c = 0", cmul(b(u), c(v)), None),
                (
                    "0 = sum_l d.b",
                    None,
                    sum_prod2(&pre_l[key], |x, y| cmul(d(x), b(y))),
                ),
                (
                    "b.d = sum_r d.b",
                    cmul(b(u), d(v)),
                    sum_prod2(&pre_r[key], |x, y| cmul(d(x), b(y))),
                ),
                (
                    "0 = sum_r c.a",
                    None,
                    sum_prod2(&pre_r[key], |x, y| cmul(c(x), a(y))),
                ),
                (
                    "c.a = sum_l c.a",
                    cmul(c(u), a(v)),
                    sum_prod2(&pre_l[key], |x, y| cmul(c(x), a(y))),
                ),
                (
                    "c.c = sum_l (a+c)c",
                    cmul(c(u), c(v)),
                    sum_prod2(&pre_l[key], |x, y| cmul_o(ac(x), c(y).cloned())),
                ),
                (
                    "d(b+d) = sum_r d.d",
                    cmul_o(d(u).cloned(), bd(v)),
                    sum_prod2(&pre_r[key], |x, y| cmul(d(x), d(y))),
                ),
                (
                    "c.d = sum_r (a+c)c",
                    cmul(c(u), d(v)),
                    sum_prod2(&pre_r[key], |x, y| cmul_o(ac(x), c(y).cloned())),
                ),
                (
                    "d(a+c) = sum_l d.d",
                    cmul_o(d(u).cloned(), ac(v)),
                    sum_prod2(&pre_l[key], |x, y| cmul(d(x), d(y))),
                ),
            ];
            for (name, lhs, rhs) in checks {
                if !ceq(&lhs, &rhs) {
                    witnesses.push((name, (u, v)));
                }
            }
        }
    }
    DendReport {
        dendriform: witnesses.is_empty(),
        witnesses,
    }
}

/// Cross-check by composing the three dendriform relations directly.
pub fn check_dendriform_pair_composition<S: OneLike>(
    eds: &FiniteEds,
    p: &Arity2Element<S>,
    s: &Arity2Element<S>,
) -> bool {
    let Some((_, sample)) = p.iter().chain(s.iter()).next() else {
        return true;
    };
    let id = OperadElement::from_tree(identity_tree(), S::one_like(sample));
    let pe = p.to_operad_element();
    let se = s.to_operad_element();
    let sum = p.add(s).to_operad_element();
    let c = |x: &OperadElement<S>, l: &OperadElement<S>, r: &OperadElement<S>| {
        compose(eds, x, &[l.clone(), r.clone()]).unwrap()
    };
    c(&pe, &pe, &id) == c(&pe, &id, &sum)
        && c(&pe, &se, &id) == c(&se, &id, &pe)
        && c(&se, &id, &se) == c(&se, &sum, &id)
}

// ---------------------------------------------------------------------------
// Brute-force search over F_p
// ---------------------------------------------------------------------------

/// All associative arity-2 elements over F_p, found by exhausting the
/// p^(2|Ω|) coefficient cube. Guarded to keep the cube below 10^7.
pub fn solve_associative_fp(eds: &FiniteEds, p: u64) -> Result<Vec<Arity2Element<Fp>>> {
    let n = eds.size();
    let dims = 2 * n;
    if (p as f64).powi(dims as i32) > 1e7 {
        return Err(EdsError::GuardExceeded(format!(
            "{p}^{dims} coefficient assignments exceed the 10^7 guard"
        )));
    }
    let total = (0..dims).fold(1u64, |acc, _| acc * p);
    let sides: Vec<(Side, Sym)> = (0..n as Sym)
        .map(|a| (Side::Prec, a))
        .chain((0..n as Sym).map(|a| (Side::Succ, a)))
        .collect();
    let mut found: Vec<(u64, Arity2Element<Fp>)> = (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let mut m = Arity2Element::zero();
            let mut rem = code;
            for &(side, a) in &sides {
                let v = rem % p;
                rem /= p;
                if v != 0 {
                    m.set(side, a, Fp::new(v as i64, p));
                }
            }
            check_assoc_general(eds, &m)
                .associative
                .then_some((code, m))
        })
        .collect();
    found.sort_by_key(|(code, _)| *code);
    Ok(found.into_iter().map(|(_, m)| m).collect())
}

/// Seeded pseudorandom arity-2 element over F_p (coefficients uniform,
/// including zero).
pub fn random_arity2_fp(eds: &FiniteEds, p: u64, rng: &mut impl Rng) -> Arity2Element<Fp> {
    let mut m = Arity2Element::zero();
    for side in [Side::Prec, Side::Succ] {
        for a in eds.syms() {
            let v = rng.gen_range(0..p);
            if v != 0 {
                m.set(side, a, Fp::new(v as i64, p));
            }
        }
    }
    m
}

// ---------------------------------------------------------------------------
// Koszul dual, arity 3
// ---------------------------------------------------------------------------

/// Dimension of the arity-3 component of the Koszul dual: the free binary
/// operad on {⊣_α, ⊢_α} has 8|Ω|² arity-3 compositions, and the dual's
/// relations contribute 5|Ω|² relation vectors; the dimension is the
/// codimension of their span by exact elimination. Equals 3|Ω|² + 2·corank.
pub fn koszul_dual_dim3(eds: &FiniteEds) -> usize {
    let n = eds.size();
    // basis: slot 0 = x∘(y,I), slot 1 = x∘(I,y); generators indexed by
    // kind (0 = ⊣, 1 = ⊢) and symbol.
    let gen = |kind: usize, s: Sym| kind * n + s as usize;
    let idx = |slot: usize, g1: usize, g2: usize| (slot * 2 * n + g1) * 2 * n + g2;
    let ncols = 8 * n * n;
    let mut rows: Vec<Vec<(usize, Rat)>> = Vec::with_capacity(5 * n * n);
    let (dash, vdash) = (0, 1);
    for a in eds.syms() {
        for b in eds.syms() {
            let (l, r, tl, tr) = (eds.l(a, b), eds.r(a, b), eds.tl(a, b), eds.tr(a, b));
            // ⊣_β∘(⊣_α,I) = ⊣_{α←β}∘(I,⊣_{α◁β}) = ⊣_{α→β}∘(I,⊢_{α▷β})
            rows.push(vec![
                (idx(0, gen(dash, b), gen(dash, a)), rat(1)),
                (idx(1, gen(dash, l), gen(dash, tl)), rat(-1)),
            ]);
            rows.push(vec![
                (idx(1, gen(dash, l), gen(dash, tl)), rat(1)),
                (idx(1, gen(dash, r), gen(vdash, tr)), rat(-1)),
            ]);
            // ⊢_β∘(I,⊣_α) = ⊣_α∘(⊢_β,I)
            rows.push(vec![
                (idx(1, gen(vdash, b), gen(dash, a)), rat(1)),
                (idx(0, gen(dash, a), gen(vdash, b)), rat(-1)),
            ]);
            // ⊢_α∘(I,⊢_β) = ⊢_{α→β}∘(⊢_{α▷β},I) = ⊢_{α←β}∘(⊣_{α◁β},I)
            rows.push(vec![
                (idx(1, gen(vdash, a), gen(vdash, b)), rat(1)),
                (idx(0, gen(vdash, r), gen(vdash, tr)), rat(-1)),
            ]);
            rows.push(vec![
                (idx(0, gen(vdash, r), gen(vdash, tr)), rat(1)),
                (idx(0, gen(vdash, l), gen(dash, tl)), rat(-1)),
            ]);
        }
    }
    ncols - linalg::sparse_rank(&rows, ncols)
}

// ---------------------------------------------------------------------------
// Generation / freeness spot check
// ---------------------------------------------------------------------------

/// Dimensions, degree by degree up to `max_deg`, of the span of all
/// dendriform words in the generators α ⊗ (one-vertex tree) inside
/// KΩ ⊗ KT⁺. The free object has |Ω|·Catalan(n)·|Ω|^{n−1} in degree n.
pub fn generation_span_dims(eds: &FiniteEds, max_deg: usize) -> Vec<usize> {
    use crate::bialgebra::{ext_product, Extended};
    let omega = eds.size();
    let gens: Vec<Extended<TypedTree, Rat>> = eds
        .syms()
        .map(|s| Extended::term((s, single()), rat(1)))
        .collect();
    let mut by_degree: Vec<Vec<Extended<TypedTree, Rat>>> = vec![gens];
    for deg in 2..=max_deg {
        let mut level = Vec::new();
        for split in 1..deg {
            for x in &by_degree[split - 1] {
                for y in &by_degree[deg - split - 1] {
                    for side in [Side::Prec, Side::Succ] {
                        level.push(ext_product(eds, side, x, y).unwrap());
                    }
                }
            }
        }
        by_degree.push(level);
    }
    by_degree
        .iter()
        .enumerate()
        .map(|(d, vectors)| {
            let basis = crate::tree::enumerate_basis(omega, d + 1);
            let index: BTreeMap<(Sym, TypedTree), usize> = basis
                .into_iter()
                .flat_map(|t| eds.syms().map(move |s| (s, t.clone())))
                .enumerate()
                .map(|(i, k)| (k, i))
                .collect();
            let ncols = index.len();
            let rows: Vec<Vec<(usize, Rat)>> = vectors
                .iter()
                .map(|v| v.iter().map(|(k, c)| (index[k], *c)).collect())
                .collect();
            linalg::sparse_rank(&rows, ncols)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Arity-2 literal: prec:<sym>=<coef>,succ:<sym>=<coef>,...
// ---------------------------------------------------------------------------

pub fn parse_arity2(input: &str) -> Result<Arity2Element<Rat>> {
    let mut out = Arity2Element::zero();
    if input.trim() == "0" {
        return Ok(out);
    }
    for (i, part) in input.split(',').enumerate() {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let err = |msg: String| EdsError::Parse {
            line: 1,
            col: i + 1,
            msg,
        };
        let (side_str, rest) = part
            .split_once(':')
            .ok_or_else(|| err(format!("expected `side:sym=coef`, got `{part}`")))?;
        let side = match side_str {
            "prec" => Side::Prec,
            "succ" => Side::Succ,
            other => return Err(err(format!("unknown side `{other}`"))),
        };
        let (sym_str, coef_str) = rest
            .split_once('=')
            .ok_or_else(|| err(format!("missing `=` in `{part}`")))?;
        let sym: Sym = sym_str
            .parse()
            .map_err(|_| err(format!("`{sym_str}` is not a symbol")))?;
        let coef =
            parse_rat(coef_str).ok_or_else(|| err(format!("bad coefficient `{coef_str}`")))?;
        let cur = out.coeff(side, sym).cloned().unwrap_or_else(|| rat(0));
        out.set(side, sym, cur + coef);
    }
    Ok(out)
}

fn parse_rat(s: &str) -> Option<Rat> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().ok()?;
            let d: i64 = d.trim().parse().ok()?;
            (d != 0).then(|| Rat::new(n, d))
        }
        None => s.trim().parse::<i64>().ok().map(Rat::from_integer),
    }
}

pub fn format_arity2(m: &Arity2Element<Rat>) -> String {
    if m.is_zero() {
        return "0".to_string();
    }
    m.iter()
        .map(|((side, a), c)| format!("{side}:{a}={}", rat_to_string(c)))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn format_arity2_fp(m: &Arity2Element<Fp>) -> String {
    if m.is_zero() {
        return "0".to_string();
    }
    m.iter()
        .map(|((side, a), c)| format!("{side}:{a}={}", c.value()))
        .collect::<Vec<_>>()
        .join(",")
}
