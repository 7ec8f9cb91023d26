//! Transcribed r-matrices and functionals, the expression grammar, comparison and repair.

mod compare;
pub mod emit;
mod eval;
mod parser;
mod repair;

use std::collections::BTreeSet;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::arith::Param;
use crate::error::{Error, Result};
use crate::lie::{basis_index, Element, LieAlgebra};
use crate::wedge::BiVector;

pub use compare::{compare_up_to_scalar, Comparison};
pub use eval::{eval, parse_expression, Value};
pub use parser::{parse_ast, parse_at, Expr};
pub use repair::{find_repairs, Edit, Repair, RepairScope};

/// The catalog shipped with the crate.
pub const DEFAULT_CATALOG: &str = include_str!("../../data/catalog.txt");

/// Parabolic family an entry belongs to.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    /// P(−2,−3), d = 12
    D12,
    /// P(1), d = 10
    P1,
    /// P(3), d = 10
    P3,
    /// inside B₊, d = 8
    D8,
}

impl Family {
    /// Negative simple roots adjoined to B₊.
    pub fn extra_roots(self) -> &'static [&'static str] {
        match self {
            Family::D12 => &["em2", "em3"],
            Family::P1 => &["em1"],
            Family::P3 => &["em3"],
            Family::D8 => &[],
        }
    }

    pub fn carrier_dim(self) -> usize {
        match self {
            Family::D12 => 12,
            Family::P1 | Family::P3 => 10,
            Family::D8 => 8,
        }
    }

    /// Basis indices of B₊ together with the adjoined roots (before closure).
    pub fn generating_set(self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..9).collect();
        v.extend(self.extra_roots().iter().filter_map(|n| basis_index(n)));
        v
    }

    fn of_name(name: &str) -> Option<Family> {
        match name {
            "r12" => Some(Family::D12),
            n if n.starts_with("r10_1") || n.starts_with("g1") => Some(Family::P1),
            n if n.starts_with("r10_3") || n.starts_with("g3") => Some(Family::P3),
            n if n.starts_with("r8_") => Some(Family::D8),
            _ => None,
        }
    }
}

/// Claims attached to an entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub cybe: bool,
    pub real_star3: bool,
    pub real_star4: bool,
    pub carrier_dim: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum EntryValue {
    RMatrix(BiVector),
    /// Coefficients of the dual basis vectors.
    Functional(Element),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub source: String,
    pub line: usize,
    pub ast: Expr,
    pub value: EntryValue,
    pub family: Family,
    pub parameters: BTreeSet<Param>,
    pub expected: Expected,
}

impl CatalogEntry {
    pub fn rmatrix(&self) -> Option<&BiVector> {
        match &self.value {
            EntryValue::RMatrix(r) => Some(r),
            EntryValue::Functional(_) => None,
        }
    }

    pub fn functional(&self) -> Option<&Element> {
        match &self.value {
            EntryValue::Functional(f) => Some(f),
            EntryValue::RMatrix(_) => None,
        }
    }

    /// `g1a` ↦ `r10_1a`; `None` for r-matrices.
    pub fn partner_name(&self) -> Option<String> {
        self.name.strip_prefix('g').map(|rest| format!("r10_{rest}"))
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    /// Hex SHA-256 of the catalog text.
    pub hash: String,
}

impl Catalog {
    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownEntry(name.to_string()))
    }

    pub fn rmatrices(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(|e| e.rmatrix().is_some())
    }

    pub fn functionals(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(|e| e.functional().is_some())
    }
}

/// Parses catalog text; any malformed entry is an error.
pub fn parse_catalog(g: &LieAlgebra, text: &str) -> Result<Catalog> {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let (lhs, rhs) = content
            .split_once('=')
            .ok_or_else(|| Error::Parse { line, column: 1, message: "expected `name = expression`".into() })?;
        let name = lhs.trim().to_string();
        if entries.iter().any(|e| e.name == name) {
            return Err(Error::Catalog(format!("duplicate entry `{name}` on line {line}")));
        }
        let family = Family::of_name(&name)
            .ok_or_else(|| Error::Catalog(format!("entry `{name}` on line {line} has no known family")))?;
        let column = lhs.chars().count() + 2;
        let ast = parse_at(rhs, line, column)?;
        let value = match eval(g, &ast)? {
            Value::BiVector(r) => EntryValue::RMatrix(r),
            Value::Dual(f) => EntryValue::Functional(f),
            other => {
                return Err(Error::Catalog(format!("entry `{name}` evaluates to a {}", other.kind())));
            }
        };
        let (parameters, carrier) = match &value {
            EntryValue::RMatrix(r) => (r.params(), r.carrier_dim()),
            EntryValue::Functional(f) => (f.terms().flat_map(|(_, c)| c.params()).collect(), 0),
        };
        if matches!(value, EntryValue::RMatrix(_)) && carrier != family.carrier_dim() {
            return Err(Error::Catalog(format!(
                "entry `{name}` has carrier dimension {carrier}, expected {}",
                family.carrier_dim()
            )));
        }
        let d8 = family == Family::D8;
        entries.push(CatalogEntry {
            name,
            source: rhs.trim().to_string(),
            line,
            ast,
            value,
            family,
            parameters,
            expected: Expected { cybe: true, real_star3: d8, real_star4: false, carrier_dim: family.carrier_dim() },
        });
    }
    let hash = Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
    Ok(Catalog { entries, hash })
}

pub fn load_catalog(g: &LieAlgebra) -> Result<Catalog> {
    parse_catalog(g, DEFAULT_CATALOG)
}

pub fn load_catalog_file(g: &LieAlgebra, path: &Path) -> Result<Catalog> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_catalog(g, &text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::sl4;

    #[test]
    fn shipped_catalog_loads() {
        let c = load_catalog(sl4()).unwrap();
        assert_eq!(c.rmatrices().count(), 13);
        assert_eq!(c.functionals().count(), 10);
        assert_eq!(c.get("r12").unwrap().rmatrix().unwrap().carrier_dim(), 12);
        assert_eq!(c.get("g3d").unwrap().partner_name().as_deref(), Some("r10_3d"));
        assert_eq!(c.hash.len(), 64);
    }

    #[test]
    fn round_trip_on_all_entries() {
        let g = sl4();
        for e in load_catalog(g).unwrap().entries {
            let v = eval(g, &e.ast).unwrap();
            let once = v.to_string();
            let again = parse_expression(g, &once).unwrap();
            assert_eq!(again, v, "{}", e.name);
            assert_eq!(again.to_string(), once, "{}", e.name);
        }
    }

    #[test]
    fn bad_lines_are_located() {
        let g = sl4();
        match parse_catalog(g, "r8_1 = e4^e3 - e5^e1 + a*h2^e6 + h6^e6\nr8_2 = e1 ^ e77") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 13)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_catalog(g, "r8_1 = e1^e2"), Err(Error::Catalog(_))));
        assert!(matches!(load_catalog(g).unwrap().get("r9"), Err(Error::UnknownEntry(_))));
    }
}
