//! Fixed registry of formal parameters.
//!
//! Registry order is the lexicographic variable order of [`MultiPoly`](super::MultiPoly).

use std::fmt;

use crate::error::{Error, Result};

/// Number of registered parameters.
pub const NPARAMS: usize = 26;

const NAMES: [&str; NPARAMS] = [
    "lam", "a", "a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2", "b3", "eps1", "eps2", "eps3", "c1",
    "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9", "c10", "c11", "c12",
];

/// Commuting formal symbol, identified by its registry slot.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Param(u8);

impl Param {
    pub const LAMBDA: Param = Param(0);
    pub const A: Param = Param(1);

    /// Weyl-reflection parameter a₁…a₆.
    pub fn weyl(k: usize) -> Param {
        assert!((1..=6).contains(&k), "weyl parameter index out of range");
        Param(1 + k as u8)
    }

    pub fn b(k: usize) -> Param {
        assert!((1..=3).contains(&k));
        Param(7 + k as u8)
    }

    pub fn eps(k: usize) -> Param {
        assert!((1..=3).contains(&k));
        Param(10 + k as u8)
    }

    /// Generic functional coefficient c₁…c₁₂.
    pub fn generic(k: usize) -> Param {
        assert!((1..=12).contains(&k), "generic coefficient index out of range");
        Param(13 + k as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Param {
        assert!(i < NPARAMS);
        Param(i as u8)
    }

    pub fn name(self) -> &'static str {
        NAMES[self.index()]
    }

    /// Looks up a symbol by name. Accepts `λ` and `lambda` for `lam`.
    pub fn lookup(name: &str) -> Result<Param> {
        let canonical = match name {
            "λ" | "lambda" => "lam",
            "ε1" => "eps1",
            "ε2" => "eps2",
            "ε3" => "eps3",
            other => other,
        };
        NAMES
            .iter()
            .position(|n| *n == canonical)
            .map(|i| Param(i as u8))
            .ok_or_else(|| Error::UnknownParameter(name.to_string()))
    }

    /// Only the Weyl block (a₁…a₆, b₁…b₃) admits negative exponents.
    pub fn is_laurent(self) -> bool {
        (2..=10).contains(&self.0)
    }

    pub fn all() -> impl Iterator<Item = Param> {
        (0..NPARAMS).map(Param::from_index)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut v: Vec<_> = NAMES.to_vec();
        v.sort_unstable();
        v.dedup();
        assert_eq!(v.len(), NPARAMS);
    }

    #[test]
    fn lookup_round_trip() {
        for p in Param::all() {
            assert_eq!(Param::lookup(p.name()).unwrap(), p);
        }
        assert_eq!(Param::lookup("λ").unwrap(), Param::LAMBDA);
        assert!(matches!(Param::lookup("zeta"), Err(Error::UnknownParameter(_))));
    }

    #[test]
    fn laurent_block() {
        assert!(Param::weyl(1).is_laurent());
        assert!(Param::b(3).is_laurent());
        assert!(!Param::A.is_laurent());
        assert!(!Param::generic(1).is_laurent());
    }
}
