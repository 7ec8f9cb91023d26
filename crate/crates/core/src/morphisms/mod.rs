//! Stars, Weyl reflections, the diagram flip and the checks built on them.

mod builders;
mod checks;

use std::fmt;

use crate::arith::{ConjRule, MultiPoly, Param};
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra, BASIS_NAMES, DIM};
use crate::wedge::BiVector;

pub use builders::{
    build_beta, build_star_case_i, build_star_case_ii, build_weyl_reflection, theta, weyl_lift, weyl_lifts,
    WeylLift, STAR4_EPSILONS,
};
pub use checks::{
    commute_check, conj_rules, real_form_eigencheck, reality_check, reality_search, tensor_square_apply,
    CommuteOutcome, Eigen, EigenReport, Reality, RealityOutcome,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MapKind {
    Automorphism,
    AntiAutomorphism,
}

impl MapKind {
    pub fn name(self) -> &'static str {
        match self {
            MapKind::Automorphism => "automorphism",
            MapKind::AntiAutomorphism => "anti-automorphism",
        }
    }
}

/// A map of sl(4) given by the images of the basis vectors.
#[derive(Clone)]
pub struct AlgebraMap<'g> {
    g: &'g LieAlgebra,
    name: String,
    images: Vec<Element>,
    antilinear: bool,
    kind: MapKind,
}

impl<'g> AlgebraMap<'g> {
    /// Builds the map and verifies the declared kind on every basis pair.
    pub fn new(
        g: &'g LieAlgebra,
        name: impl Into<String>,
        images: Vec<Element>,
        antilinear: bool,
        kind: MapKind,
    ) -> Result<Self> {
        if images.len() != DIM {
            return Err(Error::Internal(format!("expected {DIM} images, got {}", images.len())));
        }
        let map = AlgebraMap { g, name: name.into(), images, antilinear, kind };
        if let Some((i, j)) = map.kind_violation()? {
            return Err(Error::KindViolation {
                kind: kind.name(),
                x: BASIS_NAMES[i].to_string(),
                y: BASIS_NAMES[j].to_string(),
            });
        }
        Ok(map)
    }

    pub fn algebra(&self) -> &'g LieAlgebra {
        self.g
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_antilinear(&self) -> bool {
        self.antilinear
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn image(&self, k: usize) -> &Element {
        &self.images[k]
    }

    /// Dense matrix: column k holds the image of basis vector k.
    pub fn matrix(&self) -> Vec<Vec<MultiPoly>> {
        (0..DIM).map(|row| (0..DIM).map(|col| self.images[col].coeff(row)).collect()).collect()
    }

    /// Applies the map; an antilinear map conjugates coefficients under `rule` first.
    pub fn apply_with(&self, x: &Element, rule: &ConjRule) -> Result<Element> {
        let mut out = self.g.zero();
        for (k, c) in x.terms() {
            let c = if self.antilinear { c.conj(rule)? } else { c.clone() };
            out.add_assign(&self.images[k].scale(&c))?;
        }
        Ok(out)
    }

    /// Applies the map with all parameters treated as real.
    pub fn apply(&self, x: &Element) -> Result<Element> {
        self.apply_with(x, &ConjRule::real())
    }

    /// First basis pair violating the declared kind.
    pub fn kind_violation(&self) -> Result<Option<(usize, usize)>> {
        for i in 0..DIM {
            for j in 0..DIM {
                let lhs = self.apply(&self.g.bracket(&self.g.basis(i), &self.g.basis(j))?)?;
                let rhs = match self.kind {
                    MapKind::Automorphism => self.g.bracket(&self.images[i], &self.images[j])?,
                    MapKind::AntiAutomorphism => self.g.bracket(&self.images[j], &self.images[i])?,
                };
                if lhs != rhs {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    /// `self ∘ other`. Linearity and kind compose in the usual way.
    pub fn compose(&self, other: &AlgebraMap<'g>, name: impl Into<String>) -> Result<AlgebraMap<'g>> {
        let images = other.images.iter().map(|y| self.apply(y)).collect::<Result<Vec<_>>>()?;
        let kind = if self.kind == other.kind { MapKind::Automorphism } else { MapKind::AntiAutomorphism };
        AlgebraMap::new(self.g, name, images, self.antilinear != other.antilinear, kind)
    }

    /// True when applying the map twice gives the identity.
    pub fn is_involutive(&self) -> Result<bool> {
        for k in 0..DIM {
            if self.apply(&self.images[k])? != self.g.basis(k) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Substitutes values for the parameters appearing in the images.
    pub fn specialize(&self, p: Param, value: &MultiPoly) -> Result<AlgebraMap<'g>> {
        let images = self.images.iter().map(|x| x.map_coeffs(|c| c.substitute(p, value))).collect::<Result<_>>()?;
        AlgebraMap::new(self.g, self.name.clone(), images, self.antilinear, self.kind)
    }

    /// Applies the map to both legs of a bivector.
    pub fn apply_bivector(&self, r: &BiVector, rule: &ConjRule) -> Result<BiVector> {
        tensor_square_apply(self, r, rule)
    }
}

impl fmt::Display for AlgebraMap<'_> {
    /// One `generator -> image` line per basis vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, img) in self.images.iter().enumerate() {
            writeln!(f, "{} -> {}", BASIS_NAMES[k], img)?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraMap<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraMap")
            .field("name", &self.name)
            .field("antilinear", &self.antilinear)
            .field("kind", &self.kind)
            .finish()
    }
}
