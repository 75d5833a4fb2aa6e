//! The 24 isomorphism-class representatives of two-element extended
//! diassociative semigroups, under their conventional labels A1…H2
//! (carrier {a,b} canonicalized to a=0, b=1).

use crate::eds::{FiniteEds, OpTable, Sym};

fn table(rows: [[Sym; 2]; 2]) -> OpTable {
    OpTable::new(2, vec![rows[0][0], rows[0][1], rows[1][0], rows[1][1]]).unwrap()
}

// The six products seen as ◁ / ▷ in the classification.
fn m_a() -> OpTable {
    table([[0, 0], [0, 0]])
}
fn m_b() -> OpTable {
    table([[1, 1], [1, 1]])
}
/// α◁β = β
fn tl_std() -> OpTable {
    table([[0, 1], [0, 1]])
}
/// α▷β = α
fn tr_std() -> OpTable {
    table([[0, 0], [1, 1]])
}
fn m_1() -> OpTable {
    table([[0, 1], [1, 0]])
}
fn m_2() -> OpTable {
    table([[1, 0], [0, 1]])
}

// Diassociative pairs (←, →) of the eight families.
fn star_a() -> OpTable {
    table([[0, 0], [0, 0]])
}
fn star_c() -> OpTable {
    table([[0, 0], [0, 1]])
}
fn star_e() -> OpTable {
    table([[0, 0], [1, 1]])
}
fn star_g() -> OpTable {
    table([[0, 1], [0, 1]])
}
fn star_h() -> OpTable {
    table([[0, 1], [1, 0]])
}

/// All 24 class representatives, in label order A1…H2.
pub fn catalog2() -> Vec<FiniteEds> {
    let mk = |label: &str, l: OpTable, r: OpTable, tl: OpTable, tr: OpTable| {
        FiniteEds::new(l, r, tl, tr).unwrap().with_label(label)
    };
    vec![
        mk("A1", star_a(), star_a(), m_a(), m_a()),
        mk("A2", star_a(), star_a(), tl_std(), tr_std()),
        mk("B1", star_a(), star_g(), m_a(), m_a()),
        mk("B2", star_a(), star_g(), tl_std(), tr_std()),
        mk("C1", star_c(), star_c(), m_a(), m_a()),
        mk("C2", star_c(), star_c(), m_a(), m_b()),
        mk("C3", star_c(), star_c(), tl_std(), tr_std()),
        mk("C4", star_c(), star_c(), m_b(), m_a()),
        mk("C5", star_c(), star_c(), m_b(), m_b()),
        mk("D1", star_e(), star_a(), m_a(), m_a()),
        mk("D2", star_e(), star_a(), tl_std(), tr_std()),
        mk("E1", star_e(), star_e(), m_a(), m_a()),
        mk("E2", star_e(), star_e(), m_a(), m_b()),
        mk("E3", star_e(), star_e(), tl_std(), tr_std()),
        mk("F1", star_e(), star_g(), m_a(), m_a()),
        mk("F2", star_e(), star_g(), m_a(), m_b()),
        mk("F3", star_e(), star_g(), tl_std(), tr_std()),
        mk("F4", star_e(), star_g(), m_1(), m_1()),
        mk("F5", star_e(), star_g(), m_1(), m_2()),
        mk("G1", star_g(), star_g(), m_a(), m_a()),
        mk("G2", star_g(), star_g(), m_a(), m_b()),
        mk("G3", star_g(), star_g(), tl_std(), tr_std()),
        mk("H1", star_h(), star_h(), m_a(), m_a()),
        mk("H2", star_h(), star_h(), tl_std(), tr_std()),
    ]
}

pub fn catalog_entry(label: &str) -> Option<FiniteEds> {
    catalog2()
        .into_iter()
        .find(|e| e.label.as_deref() == Some(label))
}

/// Printed corank table for the 24 classes.
pub fn catalog_coranks() -> Vec<(&'static str, usize)> {
    vec![
        ("A1", 3),
        ("A2", 1),
        ("B1", 2),
        ("B2", 0),
        ("C1", 2),
        ("C2", 2),
        ("C3", 0),
        ("C4", 2),
        ("C5", 2),
        ("D1", 2),
        ("D2", 0),
        ("E1", 2),
        ("E2", 2),
        ("E3", 0),
        ("F1", 1),
        ("F2", 1),
        ("F3", 0),
        ("F4", 0),
        ("F5", 0),
        ("G1", 2),
        ("G2", 2),
        ("G3", 0),
        ("H1", 2),
        ("H2", 0),
    ]
}

/// The labels of the nondegenerate classes.
pub const NONDEGENERATE_LABELS: [&str; 4] = ["F3", "F4", "F5", "H2"];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eds::{check_eds, CheckMode};

    #[test]
    fn has_24_entries_all_valid() {
        let cat = catalog2();
        assert_eq!(cat.len(), 24);
        for e in &cat {
            assert!(check_eds(e, CheckMode::Pointwise).passed(), "{:?}", e.label);
        }
    }

    #[test]
    fn f5_uses_m1_m2() {
        let f5 = catalog_entry("F5").unwrap();
        assert_eq!(f5.tri_left, m_1());
        assert_eq!(f5.tri_right, m_2());
        assert_eq!(f5.left, star_e());
        assert_eq!(f5.right, star_g());
    }
}
