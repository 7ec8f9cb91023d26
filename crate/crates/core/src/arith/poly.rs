//! Sparse multivariate (partly Laurent) polynomials over Q(i).
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors over the parameter
//! registry, so iteration order is lexicographic in registry order and
//! equality is structural. Zero coefficients are never stored.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::param::{Param, NPARAMS};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Exponent vector; negative entries only in the Laurent block.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial([i16; NPARAMS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NPARAMS]);

    pub fn var(p: Param, e: i32) -> Result<Monomial> {
        let mut m = Monomial::ONE;
        m.set(p, e)?;
        Ok(m)
    }

    pub fn exp(&self, p: Param) -> i32 {
        self.0[p.index()] as i32
    }

    fn set(&mut self, p: Param, e: i32) -> Result<()> {
        if e < 0 && !p.is_laurent() {
            return Err(Error::NegativeExponent(p.name().to_string()));
        }
        self.0[p.index()] = i16::try_from(e).map_err(|_| Error::Internal("exponent overflow".into()))?;
        Ok(())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i32 {
        self.0.iter().map(|&e| e as i32).sum()
    }

    pub fn product(&self, other: &Monomial) -> Monomial {
        self.mul(other)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0.iter()) {
            *o += *e;
        }
        out
    }

    /// `self / other` if the quotient is a legal monomial.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = *self;
        for (i, (o, e)) in out.0.iter_mut().zip(other.0.iter()).enumerate() {
            *o -= *e;
            if *o < 0 && !Param::from_index(i).is_laurent() {
                return None;
            }
        }
        Some(out)
    }

    pub fn vars(&self) -> impl Iterator<Item = (Param, i32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (Param::from_index(i), e as i32))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, e) in self.vars() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}**{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Conjugation rule for parameters under an antilinear map.
///
/// Parameters not listed are treated as real.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConjRule {
    images: BTreeMap<Param, MultiPoly>,
    pub label: String,
}

impl ConjRule {
    pub fn real() -> Self {
        ConjRule { images: BTreeMap::new(), label: "real".into() }
    }

    pub fn new(label: &str) -> Self {
        ConjRule { images: BTreeMap::new(), label: label.into() }
    }

    pub fn with(mut self, p: Param, image: MultiPoly) -> Self {
        self.images.insert(p, image);
        self
    }

    pub fn image(&self, p: Param) -> MultiPoly {
        self.images.get(&p).cloned().unwrap_or_else(|| MultiPoly::param(p))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Param, &MultiPoly)> {
        self.images.iter()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = MultiPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::ONE, c);
        }
        p
    }

    pub fn int(n: i64) -> Self {
        MultiPoly::constant(Scalar::from_int(n))
    }

    pub fn param(p: Param) -> Self {
        MultiPoly::term(Scalar::one(), Monomial::var(p, 1).expect("positive exponent"))
    }

    /// `p^e`; negative `e` only for Laurent parameters.
    pub fn param_pow(p: Param, e: i32) -> Result<Self> {
        Ok(MultiPoly::term(Scalar::one(), Monomial::var(p, e)?))
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut p = MultiPoly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// The value if the polynomial has no parameter dependence.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// Single term `c·m`, if that is the whole polynomial.
    pub fn as_monomial(&self) -> Option<(&Monomial, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn params(&self) -> BTreeSet<Param> {
        self.terms.keys().flat_map(|m| m.vars().map(|(p, _)| p)).collect()
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }

    /// `self += c·rhs`
    pub fn add_scaled(&mut self, rhs: &MultiPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &rhs.terms {
            self.add_term(*m, v * c);
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replace `p` by `value` everywhere. Negative powers of `p` require
    /// `value` to be a single invertible term.
    pub fn substitute(&self, p: Param, value: &MultiPoly) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        let mut cache: BTreeMap<i32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(p);
            let mut rest = *m;
            rest.0[p.index()] = 0;
            let factor = match cache.get(&e) {
                Some(f) => f.clone(),
                None => {
                    let f = value.int_pow(e)?;
                    cache.insert(e, f.clone());
                    f
                }
            };
            out.add_assign_ref(&(&MultiPoly::term(c.clone(), rest) * &factor));
        }
        Ok(out)
    }

    pub fn substitute_all(&self, map: &BTreeMap<Param, MultiPoly>) -> Result<MultiPoly> {
        let mut out = self.clone();
        // Simultaneous substitution: images never contain the substituted symbols
        // twice over because we go through fresh placeholders when they do.
        let overlapping = map.values().any(|v| v.params().iter().any(|q| map.contains_key(q)));
        if !overlapping {
            for (p, v) in map {
                out = out.substitute(*p, v)?;
            }
            return Ok(out);
        }
        let mut placeholders = Vec::new();
        let free: Vec<Param> = (1..=12)
            .map(Param::generic)
            .filter(|q| !self.params().contains(q) && !map.values().any(|v| v.params().contains(q)))
            .collect();
        if free.len() < map.len() {
            return Err(Error::Internal("no free placeholders for simultaneous substitution".into()));
        }
        for ((p, _), tmp) in map.iter().zip(free.iter()) {
            out = out.substitute(*p, &MultiPoly::param(*tmp))?;
            placeholders.push(*tmp);
        }
        for ((_, v), tmp) in map.iter().zip(placeholders) {
            out = out.substitute(tmp, v)?;
        }
        Ok(out)
    }

    /// Integer power, inverting single-term values for negative exponents.
    pub fn int_pow(&self, e: i32) -> Result<MultiPoly> {
        if e >= 0 {
            return Ok(self.pow(e as u32));
        }
        let (m, c) = self.as_monomial().ok_or_else(|| {
            Error::NotInvertible(format!("cannot invert non-monomial {self} for a negative power"))
        })?;
        let mut inv = Monomial::ONE;
        for (q, k) in m.vars() {
            inv.set(q, -k)?;
        }
        Ok(MultiPoly::term(c.inv()?, inv).pow((-e) as u32))
    }

    pub fn eval(&self, point: &BTreeMap<Param, Scalar>) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (p, e) in m.vars() {
                let v = point.get(&p).ok_or_else(|| Error::UnknownParameter(p.name().to_string()))?;
                t = &t * &v.pow(e)?;
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Complex conjugation of coefficients combined with the parameter rule.
    pub fn conj(&self, rule: &ConjRule) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.conj());
            for (p, e) in m.vars() {
                t = &t * &rule.image(p).int_pow(e)?;
            }
            out.add_assign_ref(&t);
        }
        Ok(out)
    }

    pub fn degree_in(&self, p: Param) -> i32 {
        self.terms.keys().map(|m| m.exp(p)).max().unwrap_or(0)
    }

    /// Homogeneous components by degree in `p` (each keeps its `p^k` factor).
    pub fn split_by_degree(&self, p: Param) -> BTreeMap<i32, MultiPoly> {
        let mut out: BTreeMap<i32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exp(p)).or_default().add_term(*m, c.clone());
        }
        out
    }

    /// Leading term in lexicographic registry order.
    fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Exact division; errors when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        let (dm, dc) = divisor.leading().ok_or(Error::DivisionByZero)?;
        if let Some(c) = divisor.as_constant() {
            return Ok(self.scale(&c.inv()?));
        }
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        let mut guard = 0usize;
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            guard += 1;
            if guard > 1_000_000 {
                return Err(Error::NotInvertible("division did not terminate".into()));
            }
            let qm = rm
                .div(dm)
                .ok_or_else(|| Error::NotInvertible(format!("{divisor} does not divide {self}")))?;
            let qc = rc.checked_div(dc)?;
            let t = MultiPoly::term(qc, qm);
            rem.sub_assign_ref(&(&t * divisor));
            quot.add_assign_ref(&t);
        }
        Ok(quot)
    }

    fn fmt_coeff_term(f: &mut fmt::Formatter<'_>, c: &Scalar, m: &Monomial) -> fmt::Result {
        let complex = !c.is_real() && !num_traits::Zero::is_zero(c.re());
        if m.is_one() {
            if complex {
                write!(f, "({c})")
            } else {
                write!(f, "{c}")
            }
        } else if c.is_one() {
            write!(f, "{m}")
        } else if complex {
            write!(f, "({c})*{m}")
        } else {
            write!(f, "{c}*{m}")
        }
    }
}

impl fmt::Display for MultiPoly {
    /// Highest monomial first, e.g. `lam**2 - 1`, `1/2*a + i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative_leading();
            let shown = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            MultiPoly::fmt_coeff_term(f, &shown, m)?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<Scalar> for MultiPoly {
    fn from(c: Scalar) -> Self {
        MultiPoly::constant(c)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: MultiPoly) -> MultiPoly {
        self.sub_assign_ref(&rhs);
        self
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam() -> MultiPoly {
        MultiPoly::param(Param::LAMBDA)
    }

    #[test]
    fn difference_of_squares() {
        let one = MultiPoly::one();
        let p = &(&lam() + &one) * &(&lam() - &one);
        let expected = &lam().pow(2) - &one;
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "lam**2 - 1");
    }

    #[test]
    fn substitution_annihilates() {
        let p = &MultiPoly::param(Param::A) * &lam();
        assert!(p.substitute(Param::A, &MultiPoly::zero()).unwrap().is_zero());
    }

    #[test]
    fn negative_exponents_only_in_weyl_block() {
        assert!(MultiPoly::param_pow(Param::weyl(1), -1).is_ok());
        assert!(matches!(MultiPoly::param_pow(Param::A, -1), Err(Error::NegativeExponent(_))));
        let a1 = MultiPoly::param(Param::weyl(1));
        let inv = a1.int_pow(-1).unwrap();
        assert_eq!(&a1 * &inv, MultiPoly::one());
    }

    #[test]
    fn conj_with_rule() {
        let a1 = Param::weyl(1);
        let a3 = Param::weyl(3);
        let p = MultiPoly::param(a1).scale(&Scalar::i());
        let rule = ConjRule::new("swap").with(a1, MultiPoly::param(a3)).with(a3, MultiPoly::param(a1));
        assert_eq!(p.conj(&rule).unwrap(), MultiPoly::param(a3).scale(&-Scalar::i()));
        assert_eq!(p.conj(&ConjRule::real()).unwrap(), MultiPoly::param(a1).scale(&-Scalar::i()));
    }

    #[test]
    fn exact_division() {
        let a = MultiPoly::param(Param::A);
        let p = &(&a + &lam()) * &(&a - &MultiPoly::int(2));
        assert_eq!(p.div_exact(&(&a + &lam())).unwrap(), &a - &MultiPoly::int(2));
        assert!(p.div_exact(&(&a + &MultiPoly::int(7))).is_err());
    }

    #[test]
    fn degree_split() {
        let p = &(&lam().pow(2) + &lam()) + &MultiPoly::param(Param::A);
        let parts = p.split_by_degree(Param::LAMBDA);
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[&0], MultiPoly::param(Param::A));
        assert_eq!(parts.values().fold(MultiPoly::zero(), |acc, q| &acc + q), p);
    }
}
