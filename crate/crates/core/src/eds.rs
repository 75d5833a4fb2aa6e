//! Finite extended diassociative semigroups as operation tables.
//!
//! An EDS is a carrier {0,…,n−1} with four binary operations `←`, `→`, `◁`,
//! `▷` subject to thirteen axiom families: the five diassociative identities
//! on (`←`, `→`) plus eight mixed identities tying in `◁` and `▷`. The same
//! axioms can be stated as five equalities of self-maps of Ω³ built from the
//! pair maps φ_← and φ_→; both formulations are implemented and cross-checked.

use crate::error::{EdsError, Result};
use std::fmt;

/// Symbol of the carrier set, canonicalized to 0-based indices.
/// Named catalog labels map a↦0, b↦1, c↦2.
pub type Sym = u8;

/// A total binary operation on {0,…,n−1}, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OpTable {
    size: usize,
    entries: Vec<Sym>,
}

impl OpTable {
    pub fn new(size: usize, entries: Vec<Sym>) -> Result<Self> {
        if size == 0 || size > Sym::MAX as usize {
            return Err(EdsError::Structural(format!(
                "carrier size {size} out of supported range"
            )));
        }
        if entries.len() != size * size {
            return Err(EdsError::Structural(format!(
                "expected {} entries for a {size}x{size} table, got {}",
                size * size,
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&e| (e as usize) >= size) {
            return Err(EdsError::SymbolOutOfRange { sym: bad, size });
        }
        Ok(OpTable { size, entries })
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(Sym, Sym) -> Sym) -> Self {
        let entries = (0..size)
            .flat_map(|a| (0..size).map(move |b| (a, b)))
            .map(|(a, b)| f(a as Sym, b as Sym))
            .collect();
        OpTable::new(size, entries).expect("from_fn produced an out-of-range entry")
    }

    #[inline]
    pub fn get(&self, a: Sym, b: Sym) -> Sym {
        self.entries[a as usize * self.size + b as usize]
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entries(&self) -> &[Sym] {
        &self.entries
    }

    pub fn is_associative(&self) -> Option<(Sym, Sym, Sym)> {
        let n = self.size as Sym;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.get(self.get(a, b), c) != self.get(a, self.get(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Relabels the table by the bijection `perm` (new = `perm[old]`).
    pub fn relabel(&self, perm: &[Sym]) -> OpTable {
        let mut inv = vec![0 as Sym; self.size];
        for (old, &new) in perm.iter().enumerate() {
            inv[new as usize] = old as Sym;
        }
        OpTable::from_fn(self.size, |a, b| {
            perm[self.get(inv[a as usize], inv[b as usize]) as usize]
        })
    }
}

/// A finite carrier with the four operation tables of an extended
/// diassociative semigroup candidate. Construction only enforces structural
/// sanity; run [`check_eds`] to validate the axioms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteEds {
    size: usize,
    pub left: OpTable,
    pub right: OpTable,
    pub tri_left: OpTable,
    pub tri_right: OpTable,
    pub label: Option<String>,
}

impl FiniteEds {
    pub fn new(
        left: OpTable,
        right: OpTable,
        tri_left: OpTable,
        tri_right: OpTable,
    ) -> Result<Self> {
        let size = left.size();
        if [&right, &tri_left, &tri_right]
            .iter()
            .any(|t| t.size() != size)
        {
            return Err(EdsError::Structural(
                "the four tables must share one carrier size".into(),
            ));
        }
        Ok(FiniteEds {
            size,
            left,
            right,
            tri_left,
            tri_right,
            label: None,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn label_or(&self, default: &str) -> String {
        self.label.clone().unwrap_or_else(|| default.to_string())
    }

    #[inline]
    pub fn l(&self, a: Sym, b: Sym) -> Sym {
        self.left.get(a, b)
    }
    #[inline]
    pub fn r(&self, a: Sym, b: Sym) -> Sym {
        self.right.get(a, b)
    }
    #[inline]
    pub fn tl(&self, a: Sym, b: Sym) -> Sym {
        self.tri_left.get(a, b)
    }
    #[inline]
    pub fn tr(&self, a: Sym, b: Sym) -> Sym {
        self.tri_right.get(a, b)
    }

    pub fn syms(&self) -> impl Iterator<Item = Sym> + Clone {
        0..self.size as Sym
    }

    pub fn check_sym(&self, a: Sym) -> Result<()> {
        if (a as usize) < self.size {
            Ok(())
        } else {
            Err(EdsError::SymbolOutOfRange {
                sym: a,
                size: self.size,
            })
        }
    }

    /// φ_←(α,β) = (α←β, α◁β).
    #[inline]
    pub fn phi_left(&self, a: Sym, b: Sym) -> (Sym, Sym) {
        (self.l(a, b), self.tl(a, b))
    }

    /// φ_→(α,β) = (α→β, α▷β).
    #[inline]
    pub fn phi_right(&self, a: Sym, b: Sym) -> (Sym, Sym) {
        (self.r(a, b), self.tr(a, b))
    }

    /// The opposite structure: ←/→ and ◁/▷ swapped with flipped arguments.
    /// An involution; the result is an EDS iff the input is.
    pub fn opposite(&self) -> FiniteEds {
        let n = self.size;
        let out = FiniteEds {
            size: n,
            left: OpTable::from_fn(n, |a, b| self.r(b, a)),
            right: OpTable::from_fn(n, |a, b| self.l(b, a)),
            tri_left: OpTable::from_fn(n, |a, b| self.tr(b, a)),
            tri_right: OpTable::from_fn(n, |a, b| self.tl(b, a)),
            label: self.label.as_ref().map(|l| format!("{l}^op")),
        };
        out
    }

    /// Commutative means α→β = β←α and α▷β = β◁α for all α, β.
    pub fn is_commutative(&self) -> bool {
        self.syms().all(|a| {
            self.syms()
                .all(|b| self.r(a, b) == self.l(b, a) && self.tr(a, b) == self.tl(b, a))
        })
    }

    pub fn tables(&self) -> [&OpTable; 4] {
        [&self.left, &self.right, &self.tri_left, &self.tri_right]
    }

    pub fn relabel(&self, perm: &[Sym]) -> FiniteEds {
        FiniteEds {
            size: self.size,
            left: self.left.relabel(perm),
            right: self.right.relabel(perm),
            tri_left: self.tri_left.relabel(perm),
            tri_right: self.tri_right.relabel(perm),
            label: self.label.clone(),
        }
    }
}

/// Which of the two half-products an operation refers to.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Side {
    /// ≺
    Prec,
    /// ≻
    Succ,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Prec => write!(f, "prec"),
            Side::Succ => write!(f, "succ"),
        }
    }
}

/// Which formulation of the axioms to evaluate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckMode {
    /// The thirteen pointwise equation families over all triples.
    Pointwise,
    /// The five equalities of maps Ω³ → Ω³ built from φ_← and φ_→.
    MapForm,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AxiomId {
    /// Pointwise axiom 1..=13.
    Eq(u8),
    /// Map-form equation 34..=38.
    Map(u8),
    /// Derived-operation identity 1..=15 (nondegenerate structures).
    Derived(u8),
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomId::Eq(k) => write!(f, "{k}"),
            AxiomId::Map(k) => write!(f, "{k}"),
            AxiomId::Derived(k) => write!(f, "derived.{k}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub axiom: AxiomId,
    pub witness: (Sym, Sym, Sym),
    pub lhs: Sym,
    pub rhs: Sym,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Validates the axioms. Reports at most one witness per axiom, the first
/// in lexicographic (α,β,γ) order.
pub fn check_eds(eds: &FiniteEds, mode: CheckMode) -> AxiomReport {
    match mode {
        CheckMode::Pointwise => check_pointwise(eds),
        CheckMode::MapForm => check_map_form(eds),
    }
}

type PointwiseEq = fn(&FiniteEds, Sym, Sym, Sym) -> [(Sym, Sym); 2];

// Each axiom evaluates to up to two (lhs, rhs) pairs; axioms 1 and 3
// each bundle two equalities.
fn pointwise_equations() -> [PointwiseEq; 13] {
    [
        |e, a, b, g| {
            let l = e.l(e.l(a, b), g);
            [(l, e.l(a, e.l(b, g))), (l, e.l(a, e.r(b, g)))]
        },
        |e, a, b, g| {
            let p = (e.l(e.r(a, b), g), e.r(a, e.l(b, g)));
            [p, p]
        },
        |e, a, b, g| {
            let l = e.r(e.r(a, b), g);
            [(l, e.r(e.l(a, b), g)), (l, e.r(a, e.r(b, g)))]
        },
        |e, a, b, g| {
            let p = (e.tr(a, e.l(b, g)), e.tr(a, b));
            [p, p]
        },
        |e, a, b, g| {
            let p = (e.tl(e.r(a, b), g), e.tl(b, g));
            [p, p]
        },
        |e, a, b, g| {
            let p = (e.l(e.tl(a, b), e.tl(e.l(a, b), g)), e.tl(a, e.l(b, g)));
            [p, p]
        },
        |e, a, b, g| {
            let p = (e.tl(e.tl(a, b), e.tl(e.l(a, b), g)), e.tl(b, g));
            [p, p]
        },
        |e, a, b, g| {
            let p = (e.r(e.tl(a, b), e.tl(e.l(a, b), g)), e.tl(a, e.r(b, g)));
            [p, p]
        },
        |e, a, b, g| {
            let p = (e.tr(e.tl(a, b), e.tl(e.l(a, b), g)), e.tr(b, g));
            [p, p]
        },
        |e, a, b, g| {
            let p = (e.l(e.tr(a, e.r(b, g)), e.tr(b, g)), e.tr(e.l(a, b), g));
            [p, p]
        },
        |e, a, b, g| {
            let p = (e.tl(e.tr(a, e.r(b, g)), e.tr(b, g)), e.tl(a, b));
            [p, p]
        },
        |e, a, b, g| {
            let p = (e.r(e.tr(a, e.r(b, g)), e.tr(b, g)), e.tr(e.r(a, b), g));
            [p, p]
        },
        |e, a, b, g| {
            let p = (e.tr(e.tr(a, e.r(b, g)), e.tr(b, g)), e.tr(a, b));
            [p, p]
        },
    ]
}

fn check_pointwise(eds: &FiniteEds) -> AxiomReport {
    let mut violations = Vec::new();
    for (i, eq) in pointwise_equations().iter().enumerate() {
        'axiom: for a in eds.syms() {
            for b in eds.syms() {
                for g in eds.syms() {
                    for (lhs, rhs) in eq(eds, a, b, g) {
                        if lhs != rhs {
                            violations.push(Violation {
                                axiom: AxiomId::Eq(i as u8 + 1),
                                witness: (a, b, g),
                                lhs,
                                rhs,
                            });
                            break 'axiom;
                        }
                    }
                }
            }
        }
    }
    AxiomReport { violations }
}

type Triple = (Sym, Sym, Sym);
type TripleMap<'a> = Box<dyn Fn(Triple) -> Triple + 'a>;

fn check_map_form(eds: &FiniteEds) -> AxiomReport {
    // Building blocks acting on triples: φ on positions (1,2) or (2,3), and
    // the swap τ on positions (1,2) or (2,3).
    let pl12 = |e: &FiniteEds, (a, b, g): Triple| {
        let (x, y) = e.phi_left(a, b);
        (x, y, g)
    };
    let pl23 = |e: &FiniteEds, (a, b, g): Triple| {
        let (x, y) = e.phi_left(b, g);
        (a, x, y)
    };
    let pr12 = |e: &FiniteEds, (a, b, g): Triple| {
        let (x, y) = e.phi_right(a, b);
        (x, y, g)
    };
    let pr23 = |e: &FiniteEds, (a, b, g): Triple| {
        let (x, y) = e.phi_right(b, g);
        (a, x, y)
    };
    let t12 = |(a, b, g): Triple| (b, a, g);
    let t23 = |(a, b, g): Triple| (a, g, b);

    let sides: [(u8, TripleMap, TripleMap); 5] = [
        (
            34,
            Box::new(move |t| t12(pl23(eds, t12(pr12(eds, t))))),
            Box::new(move |t| pr12(eds, pl23(eds, t))),
        ),
        (
            35,
            Box::new(move |t| pl23(eds, t12(pl23(eds, t12(pl12(eds, t)))))),
            Box::new(move |t| pl12(eds, pl23(eds, t))),
        ),
        (
            36,
            Box::new(move |t| pr23(eds, t12(pl23(eds, t12(pl12(eds, t)))))),
            Box::new(move |t| pl12(eds, pr23(eds, t))),
        ),
        (
            37,
            Box::new(move |t| pl23(eds, pr12(eds, pr23(eds, t)))),
            Box::new(move |t| pr12(eds, t23(pl12(eds, t)))),
        ),
        (
            38,
            Box::new(move |t| pr23(eds, pr12(eds, pr23(eds, t)))),
            Box::new(move |t| pr12(eds, t23(pr12(eds, t)))),
        ),
    ];

    let mut violations = Vec::new();
    for (id, lhs_map, rhs_map) in &sides {
        'axiom: for a in eds.syms() {
            for b in eds.syms() {
                for g in eds.syms() {
                    let lhs = lhs_map((a, b, g));
                    let rhs = rhs_map((a, b, g));
                    if lhs != rhs {
                        // report the first differing coordinate
                        let (l, r) = if lhs.0 != rhs.0 {
                            (lhs.0, rhs.0)
                        } else if lhs.1 != rhs.1 {
                            (lhs.1, rhs.1)
                        } else {
                            (lhs.2, rhs.2)
                        };
                        violations.push(Violation {
                            axiom: AxiomId::Map(*id),
                            witness: (a, b, g),
                            lhs: l,
                            rhs: r,
                        });
                        break 'axiom;
                    }
                }
            }
        }
    }
    AxiomReport { violations }
}

/// True iff the structure satisfies all EDS axioms.
pub fn is_eds(eds: &FiniteEds) -> bool {
    check_eds(eds, CheckMode::Pointwise).passed()
}

// ---------------------------------------------------------------------------
// Text format
//
//   eds <n> [label]
//   left
//   <n rows of n integers>
//   right
//   ...
//   tri_left
//   ...
//   tri_right
//   ...
// ---------------------------------------------------------------------------

pub fn format_eds(eds: &FiniteEds) -> String {
    let mut out = String::new();
    match &eds.label {
        Some(l) => out.push_str(&format!("eds {} {}\n", eds.size, l)),
        None => out.push_str(&format!("eds {}\n", eds.size)),
    }
    for (name, table) in [
        ("left", &eds.left),
        ("right", &eds.right),
        ("tri_left", &eds.tri_left),
        ("tri_right", &eds.tri_right),
    ] {
        out.push_str(name);
        out.push('\n');
        for a in 0..eds.size {
            let row: Vec<String> = (0..eds.size)
                .map(|b| table.get(a as Sym, b as Sym).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn parse_eds(input: &str) -> Result<FiniteEds> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());

    let (lineno, header) = lines.next().ok_or_else(|| parse_err(1, 1, "empty input"))?;
    let mut head = header.split_whitespace();
    if head.next() != Some("eds") {
        return Err(parse_err(lineno, 1, "expected header `eds <n> [label]`"));
    }
    let size: usize = head
        .next()
        .ok_or_else(|| parse_err(lineno, 1, "missing carrier size"))?
        .parse()
        .map_err(|_| parse_err(lineno, 1, "carrier size is not a number"))?;
    if size == 0 || size > Sym::MAX as usize {
        return Err(parse_err(lineno, 1, "carrier size out of range"));
    }
    let rest: Vec<&str> = head.collect();
    let label = if rest.is_empty() {
        None
    } else {
        Some(rest.join(" "))
    };

    let mut tables = Vec::with_capacity(4);
    for expected in ["left", "right", "tri_left", "tri_right"] {
        let (lineno, name) = lines
            .next()
            .ok_or_else(|| parse_err(0, 1, format!("missing `{expected}` block")))?;
        if name.trim() != expected {
            return Err(parse_err(
                lineno,
                1,
                format!(
                    "expected block header `{expected}`, found `{}`",
                    name.trim()
                ),
            ));
        }
        let mut entries = Vec::with_capacity(size * size);
        for _ in 0..size {
            let (lineno, row) = lines
                .next()
                .ok_or_else(|| parse_err(0, 1, format!("missing row in `{expected}` block")))?;
            let mut col = 1;
            let mut count = 0;
            for tok in row.split_whitespace() {
                col = row.find(tok).map(|i| i + 1).unwrap_or(col);
                let v: usize = tok
                    .parse()
                    .map_err(|_| parse_err(lineno, col, format!("`{tok}` is not an integer")))?;
                if v >= size {
                    return Err(parse_err(
                        lineno,
                        col,
                        format!("entry {v} out of range [0,{size})"),
                    ));
                }
                entries.push(v as Sym);
                count += 1;
            }
            if count != size {
                return Err(parse_err(
                    lineno,
                    1,
                    format!("expected {size} entries per row, found {count}"),
                ));
            }
        }
        tables.push(OpTable::new(size, entries)?);
    }
    if lines.next().is_some() {
        return Err(parse_err(0, 1, "trailing content after tri_right block"));
    }

    let tr = tables.pop().unwrap();
    let tl = tables.pop().unwrap();
    let r = tables.pop().unwrap();
    let l = tables.pop().unwrap();
    let eds = FiniteEds::new(l, r, tl, tr)?;
    Ok(match label {
        Some(lab) => eds.with_label(lab),
        None => eds,
    })
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> EdsError {
    EdsError::Parse {
        line,
        col,
        msg: msg.into(),
    }
}
