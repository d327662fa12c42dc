//! Variable identities for the model's complex coordinates.
//!
//! Each variable is one of `u`/`v`, tagged with a set index (which copy of
//! the system it belongs to), a doublet index (1 or 2), a color index
//! (1..=n), and a conjugation flag. Conjugated variables are independent
//! symbols: nothing in the exact layer ever computes one from the other.

use std::fmt;

use serde::{Deserialize, Serialize};

/// The two doublet letters.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Letter {
    U,
    V,
}

impl Letter {
    fn as_str(self) -> &'static str {
        match self {
            Letter::U => "u",
            Letter::V => "v",
        }
    }
}

/// Identity of a single complex variable.
///
/// Field order fixes the derived lexicographic ordering to
/// `(set, conjugated, letter, doublet, color)`, which in turn fixes the
/// canonical monomial and operator term order everywhere downstream. Do not
/// reorder fields.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct VarId {
    pub set: u8,
    pub conjugated: bool,
    pub letter: Letter,
    pub doublet: u8,
    pub color: u8,
}

impl VarId {
    pub fn new(set: u8, letter: Letter, doublet: u8, color: u8, conjugated: bool) -> Self {
        debug_assert!(set >= 1, "set indices are 1-based");
        debug_assert!(doublet == 1 || doublet == 2, "doublet must be 1 or 2");
        debug_assert!(color >= 1, "color indices are 1-based");
        Self { set, conjugated, letter, doublet, color }
    }

    /// Convenience constructor for an unconjugated `u` variable.
    pub fn u(set: u8, doublet: u8, color: u8) -> Self {
        Self::new(set, Letter::U, doublet, color, false)
    }

    /// Convenience constructor for an unconjugated `v` variable.
    pub fn v(set: u8, doublet: u8, color: u8) -> Self {
        Self::new(set, Letter::V, doublet, color, false)
    }

    /// The conjugate symbol (same slot, flipped conjugation flag).
    pub fn conj(self) -> Self {
        Self { conjugated: !self.conjugated, ..self }
    }

    /// All `8 * n * sets` variables of a model, in canonical order.
    pub fn all(n: u8, sets: u8) -> Vec<VarId> {
        let mut out = Vec::with_capacity(8 * n as usize * sets as usize);
        for set in 1..=sets {
            for conjugated in [false, true] {
                for letter in [Letter::U, Letter::V] {
                    for doublet in 1..=2 {
                        for color in 1..=n {
                            out.push(VarId::new(set, letter, doublet, color, conjugated));
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for VarId {
    /// Renders as `letter[*](set)doublet.color`, e.g. `u(1)2.1` or `v*(2)1.3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}({}){}.{}",
            self.letter.as_str(),
            if self.conjugated { "*" } else { "" },
            self.set,
            self.doublet,
            self.color
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_count_is_eight_n_per_set() {
        assert_eq!(VarId::all(1, 1).len(), 8);
        assert_eq!(VarId::all(2, 1).len(), 16);
        assert_eq!(VarId::all(2, 2).len(), 32);
        assert_eq!(VarId::all(6, 1).len(), 48);
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let vars = VarId::all(3, 2);
        let mut sorted = vars.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(vars, sorted);
    }

    #[test]
    fn conjugation_is_an_involution() {
        let v = VarId::v(1, 2, 3);
        assert_ne!(v, v.conj());
        assert_eq!(v, v.conj().conj());
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(VarId::u(1, 2, 1).to_string(), "u(1)2.1");
        assert_eq!(VarId::v(2, 1, 3).conj().to_string(), "v*(2)1.3");
    }
}
