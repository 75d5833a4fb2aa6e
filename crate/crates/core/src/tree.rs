//! Plane binary trees with typed internal edges: the basis of the free
//! dendriform structures built in this crate.
//!
//! Edge types are optional precisely because an edge to a leaf carries no
//! type; the invariant "type present ⇔ child is internal" is enforced by
//! [`graft`] and by the literal parser.

use crate::eds::Sym;
use crate::error::{EdsError, Result};
use std::fmt;

/// A plane binary tree whose internal edges carry symbols.
///
/// The derived `Ord` is the structural order used everywhere: leaf < node,
/// nodes lexicographically by (left, left type, right type, right).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TypedTree {
    Leaf,
    Node(Box<TypedTree>, Option<Sym>, Option<Sym>, Box<TypedTree>),
}

pub use TypedTree::Leaf;

/// The unique tree with one internal vertex.
pub fn single() -> TypedTree {
    TypedTree::Node(Box::new(Leaf), None, None, Box::new(Leaf))
}

pub(crate) fn node(l: TypedTree, lt: Option<Sym>, rt: Option<Sym>, r: TypedTree) -> TypedTree {
    TypedTree::Node(Box::new(l), lt, rt, Box::new(r))
}

/// Grafts `t1` and `t2` under a new root with edge types `a`, `b`.
/// A type must be present exactly when the corresponding child is internal.
pub fn graft(t1: TypedTree, a: Option<Sym>, b: Option<Sym>, t2: TypedTree) -> Result<TypedTree> {
    if a.is_some() != (t1 != Leaf) {
        return Err(EdsError::Structural(
            "left edge type must be present iff the left child is not a leaf".into(),
        ));
    }
    if b.is_some() != (t2 != Leaf) {
        return Err(EdsError::Structural(
            "right edge type must be present iff the right child is not a leaf".into(),
        ));
    }
    Ok(node(t1, a, b, t2))
}

impl TypedTree {
    /// Number of internal vertices.
    pub fn degree(&self) -> usize {
        match self {
            Leaf => 0,
            TypedTree::Node(l, _, _, r) => 1 + l.degree() + r.degree(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        *self == Leaf
    }

    /// Left-right mirror image (types travel with their edges).
    pub fn mirror(&self) -> TypedTree {
        match self {
            Leaf => Leaf,
            TypedTree::Node(l, lt, rt, r) => node(r.mirror(), *rt, *lt, l.mirror()),
        }
    }

    /// Largest symbol appearing on an edge, if any.
    pub fn max_sym(&self) -> Option<Sym> {
        match self {
            Leaf => None,
            TypedTree::Node(l, lt, rt, r) => [*lt, *rt, l.max_sym(), r.max_sym()]
                .into_iter()
                .flatten()
                .max(),
        }
    }
}

/// All typed trees with `n` internal vertices over `omega` symbols.
/// Their number is Catalan(n)·omega^(n−1) for n ≥ 1.
pub fn enumerate_basis(omega: usize, n: usize) -> Vec<TypedTree> {
    if n == 0 {
        return vec![Leaf];
    }
    let mut out = Vec::new();
    for left_deg in 0..n {
        let rights = enumerate_basis(omega, n - 1 - left_deg);
        for l in enumerate_basis(omega, left_deg) {
            let ltypes: Vec<Option<Sym>> = if l.is_leaf() {
                vec![None]
            } else {
                (0..omega).map(|t| Some(t as Sym)).collect()
            };
            for r in &rights {
                let rtypes: Vec<Option<Sym>> = if r.is_leaf() {
                    vec![None]
                } else {
                    (0..omega).map(|t| Some(t as Sym)).collect()
                };
                for &lt in &ltypes {
                    for &rt in &rtypes {
                        out.push(node(l.clone(), lt, rt, r.clone()));
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Comb decompositions
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CombSide {
    Right,
    Left,
}

/// Decomposition of a nonempty tree along its right (or left) spine:
/// vertex i carries the branch `branches[i]` and the spine edge between
/// vertices i and i+1 carries `spine_types[i]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CombDecomposition {
    pub side: CombSide,
    pub spine_types: Vec<Sym>,
    pub branches: Vec<(Option<Sym>, TypedTree)>,
}

impl CombDecomposition {
    pub fn arity(&self) -> usize {
        self.branches.len()
    }

    pub fn reassemble(&self) -> TypedTree {
        let k = self.branches.len();
        assert!(k >= 1 && self.spine_types.len() == k - 1);
        let mut cur: Option<TypedTree> = None;
        for i in (0..k).rev() {
            let (bt, branch) = self.branches[i].clone();
            cur = Some(match cur {
                None => match self.side {
                    CombSide::Right => node(branch, bt, None, Leaf),
                    CombSide::Left => node(Leaf, None, bt, branch),
                },
                Some(rest) => match self.side {
                    CombSide::Right => node(branch, bt, Some(self.spine_types[i]), rest),
                    CombSide::Left => node(rest, Some(self.spine_types[i]), bt, branch),
                },
            });
        }
        cur.unwrap()
    }
}

/// Right comb decomposition of a nonempty tree.
pub fn right_comb_decomposition(t: &TypedTree) -> CombDecomposition {
    let mut branches = Vec::new();
    let mut spine = Vec::new();
    let mut cur = t;
    loop {
        let TypedTree::Node(l, lt, rt, r) = cur else {
            panic!("decomposition of the trivial tree");
        };
        branches.push((*lt, (**l).clone()));
        if r.is_leaf() {
            break;
        }
        spine.push(rt.expect("internal right child must carry a type"));
        cur = r;
    }
    CombDecomposition {
        side: CombSide::Right,
        spine_types: spine,
        branches,
    }
}

/// Left comb decomposition of a nonempty tree.
pub fn left_comb_decomposition(t: &TypedTree) -> CombDecomposition {
    let mut branches = Vec::new();
    let mut spine = Vec::new();
    let mut cur = t;
    loop {
        let TypedTree::Node(l, lt, rt, r) = cur else {
            panic!("decomposition of the trivial tree");
        };
        branches.push((*rt, (**r).clone()));
        if l.is_leaf() {
            break;
        }
        spine.push(lt.expect("internal left child must carry a type"));
        cur = l;
    }
    CombDecomposition {
        side: CombSide::Left,
        spine_types: spine,
        branches,
    }
}

// ---------------------------------------------------------------------------
// Literal syntax: `.` is a leaf, `( <tree> <type|-> <type|-> <tree> )` a node.
// ---------------------------------------------------------------------------

impl fmt::Display for TypedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf => write!(f, "."),
            TypedTree::Node(l, lt, rt, r) => {
                let ty = |t: &Option<Sym>| match t {
                    Some(v) => v.to_string(),
                    None => "-".to_string(),
                };
                write!(f, "( {} {} {} {} )", l, ty(lt), ty(rt), r)
            }
        }
    }
}

/// Splits a literal into tokens; parentheses need no surrounding whitespace.
fn tokenize(input: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in input.chars() {
        match ch {
            '(' | ')' => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
                out.push(ch.to_string());
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

pub fn parse_tree(input: &str) -> Result<TypedTree> {
    let owned = tokenize(input);
    let tokens: Vec<&str> = owned.iter().map(|s| s.as_str()).collect();
    let mut pos = 0;
    let tree = parse_tree_tokens(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(EdsError::Parse {
            line: 1,
            col: pos + 1,
            msg: "trailing tokens after tree literal".into(),
        });
    }
    Ok(tree)
}

fn parse_tree_tokens(tokens: &[&str], pos: &mut usize) -> Result<TypedTree> {
    let err = |pos: usize, msg: &str| EdsError::Parse {
        line: 1,
        col: pos + 1,
        msg: msg.into(),
    };
    let Some(&tok) = tokens.get(*pos) else {
        return Err(err(*pos, "unexpected end of tree literal"));
    };
    *pos += 1;
    match tok {
        "." => Ok(Leaf),
        "(" => {
            let l = parse_tree_tokens(tokens, pos)?;
            let lt = parse_type_token(tokens, pos)?;
            let rt = parse_type_token(tokens, pos)?;
            let r = parse_tree_tokens(tokens, pos)?;
            match tokens.get(*pos) {
                Some(&")") => {
                    *pos += 1;
                    graft(l, lt, rt, r)
                }
                _ => Err(err(*pos, "expected `)`")),
            }
        }
        other => Err(err(*pos - 1, &format!("unexpected token `{other}`"))),
    }
}

fn parse_type_token(tokens: &[&str], pos: &mut usize) -> Result<Option<Sym>> {
    let Some(&tok) = tokens.get(*pos) else {
        return Err(EdsError::Parse {
            line: 1,
            col: *pos + 1,
            msg: "expected a type symbol or `-`".into(),
        });
    };
    *pos += 1;
    if tok == "-" {
        return Ok(None);
    }
    tok.parse::<Sym>().map(Some).map_err(|_| EdsError::Parse {
        line: 1,
        col: *pos,
        msg: format!("`{tok}` is not a type symbol"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basis_counts_follow_catalan_times_powers() {
        assert_eq!(enumerate_basis(2, 1).len(), 1);
        assert_eq!(enumerate_basis(2, 2).len(), 4);
        assert_eq!(enumerate_basis(2, 3).len(), 20);
        assert_eq!(enumerate_basis(2, 4).len(), 14 * 8);
        assert_eq!(enumerate_basis(3, 3).len(), 5 * 9);
        assert_eq!(enumerate_basis(7, 1).len(), 1);
    }

    #[test]
    fn graft_enforces_the_type_invariant() {
        assert_eq!(graft(Leaf, None, None, Leaf).unwrap(), single());
        assert!(graft(Leaf, Some(0), None, Leaf).is_err());
        assert!(graft(single(), None, None, Leaf).is_err());
        let comb = graft(single(), Some(1), None, Leaf).unwrap();
        assert_eq!(comb.degree(), 2);
    }

    #[test]
    fn literal_examples() {
        // the documented left-comb example, with and without spacing
        let t = parse_tree("((. - - .) 0 - .)").unwrap();
        assert_eq!(t, node(single(), Some(0), None, Leaf));
        assert_eq!(parse_tree("( ( . - - . ) 0 - . )").unwrap(), t);
        assert_eq!(t.to_string(), "( ( . - - . ) 0 - . )");
        assert_eq!(parse_tree(".").unwrap(), Leaf);
        // type on a leaf edge is rejected
        assert!(parse_tree("( . 0 - . )").is_err());
    }

    fn arb_tree(omega: u8) -> impl Strategy<Value = TypedTree> {
        let leaf = Just(Leaf).boxed();
        leaf.prop_recursive(4, 24, 4, move |inner| {
            (inner.clone(), 0..omega, 0..omega, inner)
                .prop_map(move |(l, lt, rt, r)| {
                    let ltype = if l.is_leaf() { None } else { Some(lt) };
                    let rtype = if r.is_leaf() { None } else { Some(rt) };
                    node(l, ltype, rtype, r)
                })
                .boxed()
        })
    }

    proptest! {
        #[test]
        fn literal_round_trip(t in arb_tree(3)) {
            let back = parse_tree(&t.to_string()).unwrap();
            prop_assert_eq!(back, t);
        }

        #[test]
        fn comb_decompositions_reassemble(t in arb_tree(3)) {
            prop_assume!(!t.is_leaf());
            prop_assert_eq!(right_comb_decomposition(&t).reassemble(), t.clone());
            prop_assert_eq!(left_comb_decomposition(&t).reassemble(), t);
        }

        #[test]
        fn mirror_is_an_involution(t in arb_tree(3)) {
            prop_assert_eq!(t.mirror().mirror(), t);
        }
    }
}
