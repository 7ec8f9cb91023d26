//! Deciding which form of each catalog r-matrix downstream checks use.

use std::collections::BTreeMap;

use crate::arith::{MultiPoly, Param};
use crate::catalog::{compare_up_to_scalar, find_repairs, Catalog, CatalogEntry, Family, Repair, RepairScope};
use crate::error::{Error, Result};
use crate::frobenius::{borel_plus, parabolic, rmatrix_from_functional, Functional, Subalgebra};
use crate::lie::{LieAlgebra, BASIS_NAMES};
use crate::wedge::{cybe_residual, BiVector, CybeResidual};

/// Parabolic subalgebra of a catalog family.
pub fn family_subalgebra(g: &LieAlgebra, family: Family) -> Result<Subalgebra> {
    if family == Family::D8 {
        Ok(borel_plus(g))
    } else {
        parabolic(g, family.extra_roots())
    }
}

/// Functional partner of an r-matrix: `r10_1a` ↦ `g1a`.
pub fn functional_partner(name: &str) -> Option<String> {
    name.strip_prefix("r10_").map(|rest| format!("g{rest}"))
}

#[derive(Clone, Debug)]
pub struct Adjudication {
    pub name: String,
    pub verbatim: BiVector,
    pub residual: CybeResidual,
    pub repairs: Vec<Repair>,
    /// Index into `repairs` of the preferred repair.
    pub chosen: Option<usize>,
    /// Why the chosen repair was preferred.
    pub reason: Option<String>,
}

impl Adjudication {
    pub fn verbatim_passes(&self) -> bool {
        self.residual.is_solution
    }

    /// Verbatim form if it passes, otherwise the chosen repair.
    pub fn value(&self) -> Option<&BiVector> {
        if self.verbatim_passes() {
            Some(&self.verbatim)
        } else {
            self.chosen.map(|k| &self.repairs[k].value)
        }
    }

    pub fn chosen_repair(&self) -> Option<&Repair> {
        self.chosen.map(|k| &self.repairs[k])
    }
}

fn specialize(r: &BiVector, params: &BTreeMap<Param, MultiPoly>) -> Result<BiVector> {
    if params.is_empty() {
        Ok(r.clone())
    } else {
        r.substitute_all(params)
    }
}

/// Checks CYBE verbatim; on failure searches minimal repairs and prefers
/// the one reproduced by the entry's functional, if there is one.
pub fn adjudicate(
    g: &LieAlgebra,
    catalog: &Catalog,
    entry: &CatalogEntry,
    params: &BTreeMap<Param, MultiPoly>,
) -> Result<Adjudication> {
    let verbatim = specialize(
        entry.rmatrix().ok_or_else(|| Error::Type(format!("{} is not an r-matrix", entry.name)))?,
        params,
    )?;
    let residual = cybe_residual(g, &verbatim)?;
    let mut adj =
        Adjudication { name: entry.name.clone(), verbatim, residual, repairs: Vec::new(), chosen: None, reason: None };
    if adj.residual.is_solution {
        return Ok(adj);
    }
    let sub = family_subalgebra(g, entry.family)?;
    let pool = sub.members.iter().map(|&k| BASIS_NAMES[k].to_string()).collect();
    let mut repairs = find_repairs(g, &entry.ast, &RepairScope::new(pool))?;
    for r in &mut repairs {
        r.value = specialize(&r.value, params)?;
    }
    adj.repairs = repairs;
    if adj.repairs.is_empty() {
        return Ok(adj);
    }
    adj.chosen = Some(0);
    adj.reason = Some("first minimal repair in search order".into());
    let derived = functional_partner(&entry.name)
        .and_then(|f| catalog.get(&f).ok())
        .and_then(|f| f.functional().cloned())
        .map(|coeffs| rmatrix_from_functional(g, &Functional::new(entry.name.clone(), coeffs), &sub))
        .transpose()?
        .and_then(|d| d.rmatrix());
    if let Some(d) = derived {
        if let Some(k) = adj.repairs.iter().position(|r| compare_up_to_scalar(&r.value, &d).matched) {
            adj.chosen = Some(k);
            adj.reason = Some("reproduced by the inverse form of the functional".into());
        }
    }
    Ok(adj)
}
