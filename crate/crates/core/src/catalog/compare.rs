//! Equality of bivectors up to a global factor and a signed relabelling of parameters.

use std::collections::BTreeMap;

use crate::arith::{MultiPoly, Param};
use crate::wedge::BiVector;

#[derive(Clone, Debug, PartialEq)]
pub struct Comparison {
    pub matched: bool,
    /// `(num, den)` with `den·r = num·s'`, where `s'` is `s` after `parameter_map`.
    pub scalar: Option<(MultiPoly, MultiPoly)>,
    /// Images of the parameters of `s`; empty for the identity.
    pub parameter_map: Option<BTreeMap<Param, MultiPoly>>,
}

impl Comparison {
    fn none() -> Self {
        Comparison { matched: false, scalar: None, parameter_map: None }
    }

    /// `num/den` as text, or `num` alone when `den = 1`.
    pub fn scalar_text(&self) -> Option<String> {
        self.scalar.as_ref().map(|(n, d)| if *d == MultiPoly::one() { format!("{n}") } else { format!("({n})/({d})") })
    }

    pub fn map_text(&self) -> Option<String> {
        self.parameter_map.as_ref().map(|m| {
            if m.is_empty() {
                "identity".to_string()
            } else {
                m.iter().map(|(p, v)| format!("{p} -> {v}")).collect::<Vec<_>>().join(", ")
            }
        })
    }

    /// True when matched with a constant factor and the identity parameter map.
    pub fn is_plain_scalar(&self) -> bool {
        self.matched
            && self.parameter_map.as_ref().is_some_and(BTreeMap::is_empty)
            && self.scalar.as_ref().is_some_and(|(n, d)| n.is_constant() && d.is_constant())
    }
}

/// Ratio `r = (num/den)·s` if it exists, reduced when the division is exact.
fn ratio(r: &BiVector, s: &BiVector) -> Option<(MultiPoly, MultiPoly)> {
    if r.is_zero() || s.is_zero() || r.terms().map(|(k, _)| k).ne(s.terms().map(|(k, _)| k)) {
        return None;
    }
    let (k0, s0) = s.terms().next()?;
    let r0 = r.coeff(*k0);
    for (k, sk) in s.terms() {
        if &r.coeff(*k) * s0 != sk * &r0 {
            return None;
        }
    }
    match r0.div_exact(s0) {
        Ok(q) => Some((q, MultiPoly::one())),
        Err(_) => Some((r0, s0.clone())),
    }
}

fn assignments(sources: &[Param], targets: &[Param]) -> Vec<BTreeMap<Param, MultiPoly>> {
    // Every injective map p ↦ ±q, identity-first ordering.
    let mut out = vec![BTreeMap::new()];
    for &p in sources {
        let mut next = Vec::new();
        for partial in &out {
            let mut choices: Vec<MultiPoly> = vec![MultiPoly::param(p)];
            for &q in targets {
                if q != p {
                    choices.push(MultiPoly::param(q));
                }
            }
            let negated: Vec<MultiPoly> = choices.iter().map(|c| -c).collect();
            choices.extend(negated);
            for c in choices {
                let used = partial.values().any(|v: &MultiPoly| v.params() == c.params());
                if used {
                    continue;
                }
                let mut m = partial.clone();
                m.insert(p, c);
                next.push(m);
            }
        }
        out = next;
    }
    out
}

/// Finds c ≠ 0 and a map of the parameters of `s` with `r = c·s` after substitution.
pub fn compare_up_to_scalar(r: &BiVector, s: &BiVector) -> Comparison {
    if r.algebra() != s.algebra() {
        return Comparison::none();
    }
    if r.is_zero() && s.is_zero() {
        return Comparison {
            matched: true,
            scalar: Some((MultiPoly::one(), MultiPoly::one())),
            parameter_map: Some(BTreeMap::new()),
        };
    }
    let sources: Vec<Param> = s.params().into_iter().collect();
    let mut targets: Vec<Param> = r.params().into_iter().collect();
    for p in &sources {
        if !targets.contains(p) {
            targets.push(*p);
        }
    }
    for map in assignments(&sources, &targets) {
        let Ok(mapped) = s.substitute_all(&map) else { continue };
        if let Some(c) = ratio(r, &mapped) {
            let identity = map.iter().all(|(p, v)| *v == MultiPoly::param(*p));
            let parameter_map = if identity { BTreeMap::new() } else { map };
            return Comparison { matched: true, scalar: Some(c), parameter_map: Some(parameter_map) };
        }
    }
    Comparison::none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Scalar;
    use crate::catalog::parse_expression;
    use crate::lie::sl4;

    fn bv(src: &str) -> BiVector {
        parse_expression(sl4(), src).unwrap().into_bivector().unwrap()
    }

    #[test]
    fn reflexive_and_scaled() {
        let r = bv("e4^e3 - e5^e1 + a*h2^e6 + h6^e6");
        let c = compare_up_to_scalar(&r, &r);
        assert!(c.is_plain_scalar());
        assert_eq!(c.scalar_text().as_deref(), Some("1"));
        let c = compare_up_to_scalar(&r.scale_scalar(&Scalar::from_int(2)), &r);
        assert_eq!(c.scalar.unwrap().0, MultiPoly::int(2));
    }

    #[test]
    fn parameter_relabel() {
        let r = bv("e1^e2 + a*h1^e3");
        let s = bv("e1^e2 - lam*h1^e3");
        let c = compare_up_to_scalar(&r, &s);
        assert!(c.matched);
        assert_eq!(c.parameter_map.unwrap()[&Param::LAMBDA], -MultiPoly::param(Param::A));
    }

    #[test]
    fn polynomial_factor() {
        let r = bv("a*e1^e2 + a*h1^e3");
        let s = bv("e1^e2 + h1^e3");
        let c = compare_up_to_scalar(&r, &s);
        assert_eq!(c.scalar.unwrap().0, MultiPoly::param(Param::A));
    }

    #[test]
    fn mismatch() {
        assert!(!compare_up_to_scalar(&bv("e1^e2"), &bv("e1^e3")).matched);
        assert!(!compare_up_to_scalar(&bv("e1^e2 + h1^e3"), &bv("e1^e2 - h1^e3")).matched);
    }
}
