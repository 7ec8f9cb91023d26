//! Commutation, eigenvalue and reality tests.

use super::builders::theta;
use super::AlgebraMap;
use crate::arith::{ConjRule, MultiPoly, Param, Scalar};
use crate::error::Result;
use crate::lie::{Element, BASIS_NAMES, DIM};
use crate::wedge::{wedge, BiVector};

/// Parameter conjugation rules for the Weyl parameters: all real,
/// ā₁ = a₃ with ā₂ = a₂, and the unitary rule āᵢ = aᵢ⁻¹.
pub fn conj_rules() -> Vec<ConjRule> {
    let a = |k| MultiPoly::param(Param::weyl(k));
    let inv = |k| MultiPoly::param_pow(Param::weyl(k), -1).expect("Laurent");
    vec![
        ConjRule::real(),
        ConjRule::new("b1*=b3").with(Param::weyl(1), a(3)).with(Param::weyl(3), a(1)).with(Param::weyl(2), a(2)),
        ConjRule::new("unitary").with(Param::weyl(1), inv(1)).with(Param::weyl(2), inv(2)).with(Param::weyl(3), inv(3)),
    ]
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommuteOutcome {
    pub commutes: bool,
    /// Basis vectors on which φ∘∗ and ∗∘φ differ.
    pub failing: Vec<&'static str>,
}

/// Compares φ(x*) with (φx)* on every basis vector.
pub fn commute_check(phi: &AlgebraMap<'_>, star: &AlgebraMap<'_>, rule: &ConjRule) -> Result<CommuteOutcome> {
    let mut failing = Vec::new();
    for k in 0..DIM {
        let lhs = phi.apply_with(star.image(k), rule)?;
        let rhs = star.apply_with(phi.image(k), rule)?;
        if lhs != rhs {
            failing.push(BASIS_NAMES[k]);
        }
    }
    Ok(CommuteOutcome { commutes: failing.is_empty(), failing })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Eigen {
    pub name: String,
    pub image: Element,
    /// c with X* = c·X.
    pub star_eigenvalue: Option<Scalar>,
    /// −c, the θ eigenvalue.
    pub theta_eigenvalue: Option<Scalar>,
    /// When X is not an eigenvector: some Y in the family with X* = c·Y.
    pub partner: Option<(String, Scalar)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenReport {
    pub entries: Vec<Eigen>,
    /// Every generator is a θ-eigenvector with eigenvalue ±1.
    pub all_unit: bool,
    /// The θ eigenvalue is the same for all generators.
    pub uniform: bool,
}

/// Star eigenvalues of a family of generators.
pub fn real_form_eigencheck(gens: &[(&str, Element)], star: &AlgebraMap<'_>) -> Result<EigenReport> {
    let mut entries = Vec::with_capacity(gens.len());
    for (name, x) in gens {
        let image = star.apply(x)?;
        let star_eigenvalue = if x.is_zero() { None } else { image.ratio_to(x) };
        let theta_eigenvalue = star_eigenvalue.as_ref().map(|c| -c.clone());
        let partner = if star_eigenvalue.is_some() {
            None
        } else {
            gens.iter().find_map(|(n, y)| image.ratio_to(y).map(|c| (n.to_string(), c)))
        };
        entries.push(Eigen { name: name.to_string(), image, star_eigenvalue, theta_eigenvalue, partner });
    }
    let unit = |c: &Scalar| c.is_one() || (-c.clone()).is_one();
    let all_unit = entries.iter().all(|e| e.theta_eigenvalue.as_ref().is_some_and(unit));
    let uniform = all_unit && entries.windows(2).all(|w| w[0].theta_eigenvalue == w[1].theta_eigenvalue);
    Ok(EigenReport { entries, all_unit, uniform })
}

/// (φ⊗φ) r, with coefficient conjugation for antilinear φ.
pub fn tensor_square_apply(phi: &AlgebraMap<'_>, r: &BiVector, rule: &ConjRule) -> Result<BiVector> {
    let g = phi.algebra();
    let mut out = BiVector::zero(g.id());
    for (&(i, j), c) in r.terms() {
        let c = if phi.is_antilinear() { c.conj(rule)? } else { c.clone() };
        out.add_assign(&wedge(phi.image(i), phi.image(j))?.scale(&c))?;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reality {
    Real,
    AntiReal,
    Neither,
}

impl Reality {
    pub fn name(self) -> &'static str {
        match self {
            Reality::Real => "real",
            Reality::AntiReal => "anti-real",
            Reality::Neither => "neither",
        }
    }
}

/// Compares (θ⊗θ) r with ±r, θ = −∗.
pub fn reality_check(r: &BiVector, star: &AlgebraMap<'_>, rule: &ConjRule) -> Result<Reality> {
    let t = tensor_square_apply(&theta(star)?, r, rule)?;
    Ok(if t == *r {
        Reality::Real
    } else if t == -r {
        Reality::AntiReal
    } else {
        Reality::Neither
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RealityOutcome {
    pub verdict: Reality,
    /// Parameter rule under which the verdict holds.
    pub rule: ConjRule,
}

/// Tries every assignment of each free parameter as real or purely
/// imaginary, real first; returns the first verdict other than `Neither`.
pub fn reality_search(r: &BiVector, star: &AlgebraMap<'_>) -> Result<RealityOutcome> {
    let params: Vec<Param> = r.params().into_iter().collect();
    for mask in 0u32..(1 << params.len()) {
        let mut rule = ConjRule::new("");
        let mut label = Vec::new();
        for (n, &p) in params.iter().enumerate() {
            let imaginary = mask >> n & 1 == 1;
            if imaginary {
                rule = rule.with(p, -MultiPoly::param(p));
            }
            label.push(format!("{p} {}", if imaginary { "imaginary" } else { "real" }));
        }
        rule.label = if label.is_empty() { "real".into() } else { label.join(", ") };
        let verdict = reality_check(r, star, &rule)?;
        if verdict != Reality::Neither {
            return Ok(RealityOutcome { verdict, rule });
        }
    }
    Ok(RealityOutcome { verdict: Reality::Neither, rule: ConjRule::real() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_expression;
    use crate::lie::sl4;
    use crate::morphisms::{build_beta, build_star_case_i, weyl_lift, weyl_lifts};

    fn bv(src: &str) -> BiVector {
        parse_expression(sl4(), src).unwrap().into_bivector().unwrap()
    }

    #[test]
    fn sigma1_alone_never_commutes_with_star3() {
        let g = sl4();
        let star = build_star_case_i(g).unwrap();
        for lift in weyl_lifts(g, &[1]).unwrap() {
            for rule in conj_rules() {
                assert!(!commute_check(&lift.map, &star, &rule).unwrap().commutes);
            }
        }
    }

    #[test]
    fn beta_commutes_with_star3() {
        let g = sl4();
        let star = build_star_case_i(g).unwrap();
        let out = commute_check(&build_beta(g).unwrap(), &star, &ConjRule::real()).unwrap();
        assert!(out.commutes, "{:?}", out.failing);
    }

    #[test]
    fn identity_transport() {
        let g = sl4();
        let id = crate::morphisms::AlgebraMap::new(
            g,
            "id",
            (0..DIM).map(|k| g.basis(k)).collect(),
            false,
            crate::morphisms::MapKind::Automorphism,
        )
        .unwrap();
        let r = bv("e4^e3 - e5^e1 + a*h2^e6 + h6^e6");
        assert_eq!(tensor_square_apply(&id, &r, &ConjRule::real()).unwrap(), r);
    }

    #[test]
    fn sigma13_carries_r8() {
        let g = sl4();
        let r1 = bv("e4^e3 - e5^e1 + a*h2^e6 + 1/2*h6^e6");
        let r2 = bv("e5^em3 - e4^em1 + 1/2*h2^e2 + a*h6^e2");
        let s13 = weyl_lift(g, &[1, 3]).unwrap().map;
        let image = tensor_square_apply(&s13, &r1, &ConjRule::real()).unwrap();
        let expected = r2.scale(&MultiPoly::param(Param::weyl(2)));
        assert_eq!(image, expected);
    }

    #[test]
    fn zero_is_real() {
        let g = sl4();
        let star = build_star_case_i(g).unwrap();
        assert_eq!(reality_check(&BiVector::zero(g.id()), &star, &ConjRule::real()).unwrap(), Reality::Real);
    }

    #[test]
    fn r8_is_anti_real_under_star3() {
        let g = sl4();
        let star = build_star_case_i(g).unwrap();
        let r = bv("e4^e3 - e5^e1 + a*h2^e6 + h6^e6");
        assert_eq!(reality_search(&r, &star).unwrap().verdict, Reality::AntiReal);
    }
}
