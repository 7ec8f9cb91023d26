//! Canonically ordered elements of Λ²g and Λ³g.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::arith::{MultiPoly, Param, Scalar};
use crate::catalog::emit::coeff_prefix;
use crate::error::{Error, Result};
use crate::lie::{AlgebraId, Element, BASIS_NAMES};

/// Σ_{i<j} c_ij x_i∧x_j with x∧y = x⊗y − y⊗x.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiVector {
    alg: AlgebraId,
    coeffs: BTreeMap<(usize, usize), MultiPoly>,
}

/// Σ_{i<j<k} c_ijk x_i∧x_j∧x_k; the stored coefficient is the tensor entry at the sorted triple.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TriVector {
    alg: AlgebraId,
    coeffs: BTreeMap<(usize, usize, usize), MultiPoly>,
}

fn accumulate<K: Ord + Copy>(map: &mut BTreeMap<K, MultiPoly>, key: K, c: &MultiPoly, s: &Scalar) {
    let slot = map.entry(key).or_default();
    slot.add_scaled(c, s);
    if slot.is_zero() {
        map.remove(&key);
    }
}

/// Sorts a triple and returns the permutation sign, or `None` on a repeated index.
pub(crate) fn sort3(i: usize, j: usize, k: usize) -> Option<((usize, usize, usize), i64)> {
    if i == j || j == k || i == k {
        return None;
    }
    let mut v = [i, j, k];
    let mut sign = 1;
    for a in 0..3 {
        for b in 0..2 - a {
            if v[b] > v[b + 1] {
                v.swap(b, b + 1);
                sign = -sign;
            }
        }
    }
    Some(((v[0], v[1], v[2]), sign))
}

macro_rules! common_impl {
    ($t:ident, $k:ty) => {
        impl $t {
            pub fn zero(alg: AlgebraId) -> Self {
                $t { alg, coeffs: BTreeMap::new() }
            }

            pub fn algebra(&self) -> AlgebraId {
                self.alg
            }

            pub fn is_zero(&self) -> bool {
                self.coeffs.is_empty()
            }

            pub fn len(&self) -> usize {
                self.coeffs.len()
            }

            pub fn is_empty(&self) -> bool {
                self.coeffs.is_empty()
            }

            pub fn terms(&self) -> impl Iterator<Item = (&$k, &MultiPoly)> {
                self.coeffs.iter()
            }

            pub fn coeff(&self, key: $k) -> MultiPoly {
                self.coeffs.get(&key).cloned().unwrap_or_default()
            }

            pub fn add_assign(&mut self, rhs: &Self) -> Result<()> {
                self.add_scaled(rhs, &Scalar::one())
            }

            /// `self += s·rhs`
            pub fn add_scaled(&mut self, rhs: &Self, s: &Scalar) -> Result<()> {
                if rhs.alg != self.alg {
                    return Err(Error::MixedAlgebra);
                }
                for (k, c) in &rhs.coeffs {
                    accumulate(&mut self.coeffs, *k, c, s);
                }
                Ok(())
            }

            pub fn scale(&self, c: &MultiPoly) -> Self {
                let coeffs = self
                    .coeffs
                    .iter()
                    .map(|(k, v)| (*k, v * c))
                    .filter(|(_, v)| !v.is_zero())
                    .collect();
                $t { alg: self.alg, coeffs }
            }

            pub fn scale_scalar(&self, c: &Scalar) -> Self {
                self.scale(&MultiPoly::constant(c.clone()))
            }

            pub fn map_coeffs(&self, mut f: impl FnMut(&MultiPoly) -> Result<MultiPoly>) -> Result<Self> {
                let mut coeffs = BTreeMap::new();
                for (k, v) in &self.coeffs {
                    let p = f(v)?;
                    if !p.is_zero() {
                        coeffs.insert(*k, p);
                    }
                }
                Ok($t { alg: self.alg, coeffs })
            }

            pub fn substitute(&self, p: Param, value: &MultiPoly) -> Result<Self> {
                self.map_coeffs(|c| c.substitute(p, value))
            }

            pub fn substitute_all(&self, map: &BTreeMap<Param, MultiPoly>) -> Result<Self> {
                self.map_coeffs(|c| c.substitute_all(map))
            }

            /// Parameters occurring in any coefficient.
            pub fn params(&self) -> BTreeSet<Param> {
                self.coeffs.values().flat_map(|c| c.params()).collect()
            }

            /// Homogeneous components by degree in `p`.
            pub fn split_by_degree(&self, p: Param) -> BTreeMap<i32, Self> {
                let mut out: BTreeMap<i32, Self> = BTreeMap::new();
                for (k, v) in &self.coeffs {
                    for (d, part) in v.split_by_degree(p) {
                        out.entry(d).or_insert_with(|| $t::zero(self.alg)).coeffs.insert(*k, part);
                    }
                }
                out
            }

            /// Constant `c` with `self = c·other`, if one exists.
            pub fn ratio_to(&self, other: &Self) -> Option<Scalar> {
                if other.is_zero() || self.coeffs.keys().ne(other.coeffs.keys()) {
                    return None;
                }
                let (k, o) = other.coeffs.iter().next()?;
                let c = self.coeffs[k].as_constant()?.checked_div(&o.as_constant()?).ok()?;
                (other.scale_scalar(&c) == *self).then_some(c)
            }
        }

        impl<'a> std::ops::Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                let mut out = self.clone();
                out.add_assign(rhs).expect("mixed-algebra addition");
                out
            }
        }

        impl<'a> std::ops::Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                let mut out = self.clone();
                out.add_scaled(rhs, &-Scalar::one()).expect("mixed-algebra subtraction");
                out
            }
        }

        impl std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                self.scale_scalar(&-Scalar::one())
            }
        }

        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{self}")
            }
        }
    };
}

common_impl!(BiVector, (usize, usize));
common_impl!(TriVector, (usize, usize, usize));

impl BiVector {
    /// Adds `c·x_i∧x_j` (any order; i = j contributes nothing).
    pub fn add_pair(&mut self, i: usize, j: usize, c: &MultiPoly) {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => accumulate(&mut self.coeffs, (i, j), c, &Scalar::one()),
            std::cmp::Ordering::Greater => accumulate(&mut self.coeffs, (j, i), c, &-Scalar::one()),
            std::cmp::Ordering::Equal => {}
        }
    }

    pub fn from_pairs(alg: AlgebraId, pairs: impl IntoIterator<Item = (usize, usize, MultiPoly)>) -> Self {
        let mut r = BiVector::zero(alg);
        for (i, j, c) in pairs {
            r.add_pair(i, j, &c);
        }
        r
    }

    /// Basis elements with nonzero incidence.
    pub fn carrier(&self) -> BTreeSet<usize> {
        self.coeffs.keys().flat_map(|&(i, j)| [i, j]).collect()
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier().len()
    }

    /// Full antisymmetric tensor entries (i, j, c) with T[j][i] = −T[i][j].
    pub fn tensor_entries(&self) -> Vec<(usize, usize, MultiPoly)> {
        let mut out = Vec::with_capacity(2 * self.coeffs.len());
        for (&(i, j), c) in &self.coeffs {
            out.push((i, j, c.clone()));
            out.push((j, i, -c));
        }
        out
    }
}

impl TriVector {
    /// Adds `c·x_i∧x_j∧x_k` (any order; repeated indices contribute nothing).
    pub fn add_triple(&mut self, i: usize, j: usize, k: usize, c: &MultiPoly) {
        if let Some((key, sign)) = sort3(i, j, k) {
            accumulate(&mut self.coeffs, key, c, &Scalar::from_int(sign));
        }
    }

    pub(crate) fn from_canonical(alg: AlgebraId, coeffs: BTreeMap<(usize, usize, usize), MultiPoly>) -> Self {
        debug_assert!(coeffs.iter().all(|(&(i, j, k), c)| i < j && j < k && !c.is_zero()));
        TriVector { alg, coeffs }
    }
}

/// x∧y
pub fn wedge(x: &Element, y: &Element) -> Result<BiVector> {
    if x.algebra() != y.algebra() {
        return Err(Error::MixedAlgebra);
    }
    let mut r = BiVector::zero(x.algebra());
    for (i, a) in x.terms() {
        for (j, b) in y.terms() {
            r.add_pair(i, j, &(a * b));
        }
    }
    Ok(r)
}

/// x∧r for an Element x and BiVector r.
pub fn wedge_bivector(x: &Element, r: &BiVector) -> Result<TriVector> {
    if x.algebra() != r.algebra() {
        return Err(Error::MixedAlgebra);
    }
    let mut t = TriVector::zero(x.algebra());
    for (i, a) in x.terms() {
        for (&(j, k), b) in r.terms() {
            t.add_triple(i, j, k, &(a * b));
        }
    }
    Ok(t)
}

/// x∧y∧z
pub fn wedge3(x: &Element, y: &Element, z: &Element) -> Result<TriVector> {
    wedge_bivector(x, &wedge(y, z)?)
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = (String, &'a MultiPoly)>,
) -> fmt::Result {
    let mut first = true;
    for (name, c) in items {
        let (neg, body) = coeff_prefix(c);
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        match body {
            None => f.write_str(&name)?,
            Some(b) => write!(f, "{b}*{name}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for BiVector {
    /// Grammar form, e.g. `e3^e4 - a*h2^e6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().map(|(&(i, j), c)| (format!("{}^{}", BASIS_NAMES[i], BASIS_NAMES[j]), c)))
    }
}

impl fmt::Display for TriVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .map(|(&(i, j, k), c)| (format!("{}^{}^{}", BASIS_NAMES[i], BASIS_NAMES[j], BASIS_NAMES[k]), c)),
        )
    }
}
