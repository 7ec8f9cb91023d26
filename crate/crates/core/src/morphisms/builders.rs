//! Constructors for the stars, Weyl-word lifts, the diagram flip and θ.

use std::collections::BTreeMap;

use super::{AlgebraMap, MapKind};
use crate::arith::{MultiPoly, Param};
use crate::error::{Error, Result};
use crate::lie::{basis_index, Element, LieAlgebra, BASIS_NAMES, DIM};

/// The admissible sign triples for the second star.
pub const STAR4_EPSILONS: [[i8; 3]; 3] = [[1, -1, 1], [-1, 1, -1], [-1, -1, -1]];

/// Composite roots as brackets of earlier ones: (x, y, z) with [x, y] ∝ z.
const COMPOSITES: [(&str, &str, &str); 6] = [
    ("e1", "e2", "e4"),
    ("e2", "e3", "e5"),
    ("e4", "e3", "e6"),
    ("em2", "em1", "em4"),
    ("em3", "em2", "em5"),
    ("em3", "em4", "em6"),
];

const SIMPLE: [&str; 6] = ["e1", "e2", "e3", "em1", "em2", "em3"];

fn idx(name: &str) -> usize {
    basis_index(name).expect("fixed basis name")
}

/// Completes images of the simple root vectors (and optionally the Cartans)
/// to all of sl(4), as an automorphism or an anti-automorphism.
fn extend(g: &LieAlgebra, mut images: Vec<Option<Element>>, kind: MapKind) -> Result<Vec<Element>> {
    let ordered = |a: &Element, b: &Element| match kind {
        MapKind::Automorphism => g.bracket(a, b),
        MapKind::AntiAutomorphism => g.bracket(b, a),
    };
    for (x, y, z) in COMPOSITES {
        let (ix, iy, iz) = (idx(x), idx(y), idx(z));
        let c = g.bracket(&g.basis(ix), &g.basis(iy))?.ratio_to(&g.basis(iz)).ok_or_else(|| {
            Error::Internal(format!("[{x}, {y}] is not a multiple of {z}"))
        })?;
        let (Some(fx), Some(fy)) = (&images[ix], &images[iy]) else {
            return Err(Error::Internal(format!("missing image for {x} or {y}")));
        };
        images[iz] = Some(ordered(fx, fy)?.scale_scalar(&c.inv()?));
    }
    for j in 1..=3 {
        if images[j - 1].is_some() {
            continue;
        }
        let (ie, ief) = (idx(&format!("e{j}")), idx(&format!("em{j}")));
        let c = g.bracket(&g.basis(ie), &g.basis(ief))?.ratio_to(&g.basis(j - 1)).ok_or_else(|| {
            Error::Internal(format!("[e{j}, em{j}] is not a multiple of h{j}"))
        })?;
        let (Some(fe), Some(ff)) = (&images[ie], &images[ief]) else {
            return Err(Error::Internal(format!("missing image for e{j} or em{j}")));
        };
        images[j - 1] = Some(ordered(fe, ff)?.scale_scalar(&c.inv()?));
    }
    images
        .into_iter()
        .enumerate()
        .map(|(k, x)| x.ok_or_else(|| Error::Internal(format!("no image for {}", BASIS_NAMES[k]))))
        .collect()
}

fn signed(g: &LieAlgebra, name: &str, sign: i64) -> Element {
    g.basis(idx(name)).scale(&MultiPoly::int(sign))
}

/// Star with (B±)* ⊂ B±: h_j* = −h_{4−j}, e_{±j}* = e_{±(4−j)}.
pub fn build_star_case_i(g: &LieAlgebra) -> Result<AlgebraMap<'_>> {
    let mut images: Vec<Option<Element>> = vec![None; DIM];
    for j in 1..=3 {
        let f = 4 - j;
        images[j - 1] = Some(signed(g, &format!("h{f}"), -1));
        images[idx(&format!("e{j}"))] = Some(signed(g, &format!("e{f}"), 1));
        images[idx(&format!("em{j}"))] = Some(signed(g, &format!("em{f}"), 1));
    }
    let images = extend(g, images, MapKind::AntiAutomorphism)?;
    AlgebraMap::new(g, "star3", images, true, MapKind::AntiAutomorphism)
}

/// Star with (B±)* ⊂ B∓: h_j* = h_j, e_{±j}* = ε_j e_{∓j}.
pub fn build_star_case_ii(g: &LieAlgebra, eps: [i8; 3]) -> Result<AlgebraMap<'_>> {
    if !STAR4_EPSILONS.contains(&eps) {
        return Err(Error::InvalidEpsilon(eps));
    }
    let mut images: Vec<Option<Element>> = vec![None; DIM];
    for j in 1..=3 {
        let e = i64::from(eps[j - 1]);
        images[j - 1] = Some(g.basis(j - 1));
        images[idx(&format!("e{j}"))] = Some(signed(g, &format!("em{j}"), e));
        images[idx(&format!("em{j}"))] = Some(signed(g, &format!("e{j}"), e));
    }
    let images = extend(g, images, MapKind::AntiAutomorphism)?;
    let name = format!("star4({},{},{})", eps[0], eps[1], eps[2]);
    AlgebraMap::new(g, name, images, true, MapKind::AntiAutomorphism)
}

/// θ = −∗, an antilinear automorphism.
pub fn theta<'g>(star: &AlgebraMap<'g>) -> Result<AlgebraMap<'g>> {
    if !star.is_antilinear() || star.kind() != MapKind::AntiAutomorphism {
        return Err(Error::Type(format!("{} is not an antilinear anti-automorphism", star.name())));
    }
    let images = star.images.iter().map(|x| -x).collect();
    AlgebraMap::new(star.algebra(), format!("theta[{}]", star.name()), images, true, MapKind::Automorphism)
}

// Roots in simple-root coordinates, indexed by |β| = 1..6.
const ROOTS: [[i32; 3]; 6] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1], [1, 1, 1]];
const CARTAN: [[i32; 3]; 3] = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]];

fn reflect(i: usize, v: [i32; 3]) -> [i32; 3] {
    let pairing: i32 = (0..3).map(|j| v[j] * CARTAN[j][i - 1]).sum();
    let mut w = v;
    w[i - 1] -= pairing;
    w
}

/// (|β|, sign) of a root vector in simple-root coordinates.
fn root_label(v: [i32; 3]) -> (usize, i32) {
    for (k, r) in ROOTS.iter().enumerate() {
        if *r == v {
            return (k + 1, 1);
        }
        if r.map(|x| -x) == v {
            return (k + 1, -1);
        }
    }
    unreachable!("Weyl group preserves the root system")
}

/// Torus character a_k with a₄ = a₁a₂, a₅ = a₂a₃, a₆ = a₁a₂a₃.
fn torus(k: usize) -> MultiPoly {
    let a = |j| MultiPoly::param(Param::weyl(j));
    match k {
        1..=3 => a(k),
        4 => a(1) * a(2),
        5 => a(2) * a(3),
        _ => a(1) * a(2) * a(3),
    }
}

fn inverse_torus(k: usize) -> MultiPoly {
    let inv = |j| MultiPoly::param_pow(Param::weyl(j), -1).expect("Weyl parameters are Laurent");
    match k {
        1..=3 => inv(k),
        4 => inv(1) * inv(2),
        5 => inv(2) * inv(3),
        _ => inv(1) * inv(2) * inv(3),
    }
}

/// A signed lift of a Weyl word.
#[derive(Clone, Debug)]
pub struct WeylLift<'g> {
    pub word: Vec<usize>,
    /// Signs on the images of e1, e2, e3, em1, em2, em3.
    pub signs: [i8; 6],
    pub map: AlgebraMap<'g>,
}

fn word_name(word: &[usize]) -> String {
    format!("sigma{}", word.iter().map(|i| i.to_string()).collect::<String>())
}

fn candidate(g: &LieAlgebra, word: &[usize], signs: [i8; 6]) -> Result<(Vec<Element>, String)> {
    let mut images: Vec<Option<Element>> = vec![None; DIM];
    for (n, name) in SIMPLE.iter().enumerate() {
        let (j, s) = (n % 3 + 1, if n < 3 { 1 } else { -1 });
        let mut v = ROOTS[j - 1].map(|x| s * x);
        for &i in word.iter().rev() {
            v = reflect(i, v);
        }
        let (k, sb) = root_label(v);
        let target = if sb > 0 { format!("e{k}") } else { format!("em{k}") };
        let coeff = if sb > 0 { torus(k) } else { inverse_torus(k) };
        let coeff = coeff.scale(&i64::from(signs[n]).into());
        images[idx(name)] = Some(g.basis(idx(&target)).scale(&coeff));
    }
    Ok((extend(g, images, MapKind::Automorphism)?, word_name(word)))
}

fn sign_choices() -> impl Iterator<Item = [i8; 6]> {
    // Lexicographic with + before −.
    (0u32..64).map(|mask| std::array::from_fn(|n| if mask >> (5 - n) & 1 == 1 { -1 } else { 1 }))
}

/// Every sign choice making the lifted word an automorphism.
pub fn weyl_lifts<'g>(g: &'g LieAlgebra, word: &[usize]) -> Result<Vec<WeylLift<'g>>> {
    if word.iter().any(|i| !(1..=3).contains(i)) {
        return Err(Error::Internal(format!("reflection index out of range in {word:?}")));
    }
    let mut out = Vec::new();
    for signs in sign_choices() {
        let (images, name) = candidate(g, word, signs)?;
        match AlgebraMap::new(g, name, images, false, MapKind::Automorphism) {
            Ok(map) => out.push(WeylLift { word: word.to_vec(), signs, map }),
            Err(Error::KindViolation { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// The first automorphic lift of a Weyl word, in sign order with + first.
pub fn weyl_lift<'g>(g: &'g LieAlgebra, word: &[usize]) -> Result<WeylLift<'g>> {
    if let Some(l) = weyl_lifts(g, word)?.into_iter().next() {
        return Ok(l);
    }
    let (images, name) = candidate(g, word, [1; 6])?;
    let probe = AlgebraMap { g, name, images, antilinear: false, kind: MapKind::Automorphism };
    let (i, j) = probe.kind_violation()?.unwrap_or((0, 0));
    Err(Error::NoAutomorphismCompletion(BASIS_NAMES[i].to_string(), BASIS_NAMES[j].to_string()))
}

/// σ_i, optionally with a₁, a₂, a₃ specialised. Values for a₄..a₆, if given,
/// must agree with the products a₁a₂, a₂a₃, a₁a₂a₃.
pub fn build_weyl_reflection<'g>(
    g: &'g LieAlgebra,
    i: usize,
    params: &BTreeMap<Param, MultiPoly>,
) -> Result<AlgebraMap<'g>> {
    let value = |k: usize| params.get(&Param::weyl(k)).cloned().unwrap_or_else(|| MultiPoly::param(Param::weyl(k)));
    for (k, (x, y, z)) in [(4, (1, 2, 0)), (5, (2, 3, 0)), (6, (1, 2, 3))] {
        if let Some(v) = params.get(&Param::weyl(k)) {
            let mut prod = &value(x) * &value(y);
            if z != 0 {
                prod = &prod * &value(z);
            }
            if *v != prod {
                return Err(Error::Type(format!("a{k} = {v} violates the product constraint ({prod})")));
            }
        }
    }
    let mut map = weyl_lift(g, &[i])?.map;
    for k in 1..=3 {
        if let Some(v) = params.get(&Param::weyl(k)) {
            map = map.specialize(Param::weyl(k), v)?;
        }
    }
    Ok(map)
}

/// Diagram flip α₁ ↔ α₃ with the printed images of the simple root vectors;
/// the composite images follow from the automorphism property.
pub fn build_beta(g: &LieAlgebra) -> Result<AlgebraMap<'_>> {
    let mut images: Vec<Option<Element>> = vec![None; DIM];
    for (x, y) in [("e1", "e3"), ("e2", "e2"), ("e3", "e1"), ("em1", "em3"), ("em2", "em2"), ("em3", "em1")] {
        images[idx(x)] = Some(g.basis(idx(y)));
    }
    let images = extend(g, images, MapKind::Automorphism)?;
    AlgebraMap::new(g, "beta", images, false, MapKind::Automorphism)
}
