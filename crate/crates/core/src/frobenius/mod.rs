//! Parabolic subalgebras, Frobenius functionals and their r-matrices.

mod pfaffian;

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::arith::{linalg, MultiPoly, Param, Scalar};
use crate::error::{Error, Result};
use crate::lie::{basis_index, Element, LieAlgebra, BASIS_NAMES};
use crate::wedge::{cybe_vanishes, BiVector};

pub use pfaffian::pfaffian;

/// A span of basis vectors closed under the bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    pub name: String,
    /// Basis indices in increasing order.
    pub members: Vec<usize>,
    pub closed: bool,
}

impl Subalgebra {
    pub fn dim(&self) -> usize {
        self.members.len()
    }

    pub fn is_even(&self) -> bool {
        self.dim().is_multiple_of(2)
    }

    pub fn contains(&self, k: usize) -> bool {
        self.members.binary_search(&k).is_ok()
    }

    pub fn member_names(&self) -> Vec<&'static str> {
        self.members.iter().map(|&k| BASIS_NAMES[k]).collect()
    }
}

impl fmt::Display for Subalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = span({})", self.name, self.member_names().join(", "))
    }
}

/// Bracket closure of a set of basis vectors.
pub fn closure(g: &LieAlgebra, name: impl Into<String>, generators: &[usize]) -> Subalgebra {
    let mut members: BTreeSet<usize> = generators.iter().copied().collect();
    loop {
        let mut next = members.clone();
        for &i in &members {
            for &j in &members {
                next.extend(g.structure(i, j).iter().map(|(k, _)| *k));
            }
        }
        if next == members {
            break;
        }
        members = next;
    }
    let members: Vec<usize> = members.into_iter().collect();
    let closed = members
        .iter()
        .all(|&i| members.iter().all(|&j| g.structure(i, j).iter().all(|(k, _)| members.contains(k))));
    Subalgebra { name: name.into(), members, closed }
}

pub fn borel_plus(g: &LieAlgebra) -> Subalgebra {
    closure(g, "B+", &(0..9).collect::<Vec<_>>())
}

/// Closure of B₊ together with the given negative roots, e.g. `["em2", "em3"]`.
pub fn parabolic(g: &LieAlgebra, extra: &[&str]) -> Result<Subalgebra> {
    let mut gens: Vec<usize> = (0..9).collect();
    for name in extra {
        gens.push(basis_index(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?);
    }
    let label = extra.iter().map(|n| n.trim_start_matches("em")).collect::<Vec<_>>().join(",");
    Ok(closure(g, format!("P({label})"), &gens))
}

/// Parabolic by name: `P1`, `P2`, `P3`, `P23` (also written `P(-2,-3)`) or `B+`.
pub fn parabolic_by_name(g: &LieAlgebra, name: &str) -> Result<Subalgebra> {
    let key: String = name.chars().filter(|c| c.is_ascii_digit() || *c == '+').collect();
    let roots: Vec<String> = match key.as_str() {
        "+" => return Ok(borel_plus(g)),
        "" => return Err(Error::Type(format!("unknown parabolic `{name}`"))),
        digits => digits.chars().map(|c| format!("em{c}")).collect(),
    };
    if roots.iter().any(|r| !matches!(r.as_str(), "em1" | "em2" | "em3")) {
        return Err(Error::Type(format!("unknown parabolic `{name}`")));
    }
    let refs: Vec<&str> = roots.iter().map(String::as_str).collect();
    parabolic(g, &refs)
}

/// A dual vector Σ c_k x_k*.
#[derive(Clone, Debug, PartialEq)]
pub struct Functional {
    pub name: String,
    pub coeffs: Element,
}

impl Functional {
    pub fn new(name: impl Into<String>, coeffs: Element) -> Self {
        Functional { name: name.into(), coeffs }
    }

    /// ⟨g*, x⟩.
    pub fn pair(&self, x: &Element) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for (k, c) in x.terms() {
            let f = self.coeffs.coeff(k);
            if !f.is_zero() {
                acc.add_assign_ref(&(&f * c));
            }
        }
        acc
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<(String, &MultiPoly)> =
            self.coeffs.terms().map(|(k, c)| (format!("{}*", BASIS_NAMES[k]), c)).collect();
        if items.is_empty() {
            return f.write_str("0");
        }
        crate::catalog::emit::write_linear(f, &items)
    }
}

/// B(xᵢ, xⱼ) on the members of a subalgebra.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewForm {
    pub members: Vec<usize>,
    pub matrix: Vec<Vec<MultiPoly>>,
}

impl SkewForm {
    /// Entry for basis indices (not positions).
    pub fn at(&self, x: usize, y: usize) -> Option<&MultiPoly> {
        let i = self.members.iter().position(|&k| k == x)?;
        let j = self.members.iter().position(|&k| k == y)?;
        Some(&self.matrix[i][j])
    }

    fn constant_matrix(&self) -> Option<linalg::Matrix> {
        self.matrix.iter().map(|row| row.iter().map(MultiPoly::as_constant).collect()).collect()
    }
}

/// B(x, y) = ⟨g*, [x, y]⟩, with the 2-cocycle identity checked on all member triples.
pub fn form_from_functional(g: &LieAlgebra, f: &Functional, p: &Subalgebra) -> Result<SkewForm> {
    if !p.closed {
        return Err(Error::Type(format!("{} is not closed", p.name)));
    }
    if let Some(k) = f.coeffs.support().find(|k| !p.contains(*k)) {
        return Err(Error::Type(format!("{} pairs with {} outside {}", f.name, BASIS_NAMES[k], p.name)));
    }
    let b = |x: &Element, y: &Element| -> Result<MultiPoly> { Ok(f.pair(&g.bracket(x, y)?)) };
    let basis: Vec<Element> = p.members.iter().map(|&k| g.basis(k)).collect();
    let matrix = basis
        .iter()
        .map(|x| basis.iter().map(|y| b(x, y)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let m = basis.len();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let (x, y, z) = (&basis[i], &basis[j], &basis[k]);
                let mut s = b(&g.bracket(x, y)?, z)?;
                s.add_assign_ref(&b(&g.bracket(y, z)?, x)?);
                s.add_assign_ref(&b(&g.bracket(z, x)?, y)?);
                if !s.is_zero() {
                    return Err(Error::Internal(format!("cocycle identity fails for {}", f.name)));
                }
            }
        }
    }
    Ok(SkewForm { members: p.members.clone(), matrix })
}

/// r = Σ r^{ij} xᵢ∧xⱼ with r^{ij} b_{jk} = δ, as `numerator / denominator`.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivedRMatrix {
    pub numerator: BiVector,
    pub denominator: MultiPoly,
}

impl DerivedRMatrix {
    /// The r-matrix itself when the denominator is a constant.
    pub fn rmatrix(&self) -> Option<BiVector> {
        let d = self.denominator.as_constant()?;
        Some(self.numerator.scale_scalar(&d.inv().ok()?))
    }
}

/// Inverts the form of `f` on `p` and checks CYBE for the result.
pub fn rmatrix_from_functional(g: &LieAlgebra, f: &Functional, p: &Subalgebra) -> Result<DerivedRMatrix> {
    let form = form_from_functional(g, f, p)?;
    let singular = || Error::SingularForm(f.name.clone());
    let pf = pfaffian(&form.matrix)?;
    if pf.is_zero() {
        return Err(singular());
    }
    let m = form.members.len();
    let (entries, denominator): (Vec<Vec<MultiPoly>>, MultiPoly) = match form.constant_matrix() {
        Some(c) => {
            let inv = linalg::inverse(&c).map_err(|_| singular())?;
            (inv.into_iter().map(|row| row.into_iter().map(MultiPoly::from).collect()).collect(), MultiPoly::one())
        }
        None => {
            // adj(B)/det(B), with det = Pf² and every adjugate entry divisible by Pf.
            let mut adj = vec![vec![MultiPoly::zero(); m]; m];
            for i in 0..m {
                for j in 0..m {
                    let minor: Vec<Vec<MultiPoly>> = (0..m)
                        .filter(|&r| r != j)
                        .map(|r| (0..m).filter(|&c| c != i).map(|c| form.matrix[r][c].clone()).collect())
                        .collect();
                    let d = linalg::bareiss_det(&minor)?;
                    let d = if (i + j) % 2 == 1 { -d } else { d };
                    adj[i][j] = d.div_exact(&pf)?;
                }
            }
            (adj, pf.clone())
        }
    };
    let numerator = BiVector::from_pairs(
        g.id(),
        (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).map(|(i, j)| {
            (form.members[i], form.members[j], entries[i][j].clone())
        }),
    );
    check_inverse(&form, &entries, &denominator)?;
    if !cybe_vanishes(g, &numerator)? {
        return Err(Error::Internal(format!("B⁻¹ of {} violates CYBE", f.name)));
    }
    Ok(DerivedRMatrix { numerator, denominator })
}

/// Σ_j r^{ij} b_{jk} = δ·denominator.
fn check_inverse(form: &SkewForm, r: &[Vec<MultiPoly>], denominator: &MultiPoly) -> Result<()> {
    let m = form.members.len();
    for i in 0..m {
        for k in 0..m {
            let mut acc = MultiPoly::zero();
            for j in 0..m {
                if !r[i][j].is_zero() && !form.matrix[j][k].is_zero() {
                    acc.add_assign_ref(&(&r[i][j] * &form.matrix[j][k]));
                }
            }
            let expected = if i == k { denominator.clone() } else { MultiPoly::zero() };
            if acc != expected {
                return Err(Error::Internal("r·B is not the identity".into()));
            }
        }
    }
    Ok(())
}

/// Pfaffian of the form of the generic functional Σ c_k x_k* on `p`.
/// Returns `(exists, pfaffian)`; `exists` is false iff the polynomial is zero.
pub fn generic_nonexistence(g: &LieAlgebra, p: &Subalgebra) -> Result<(bool, MultiPoly)> {
    if !p.is_even() {
        return Err(Error::OddDimension(p.dim()));
    }
    if p.dim() > 12 {
        return Err(Error::Internal(format!("only 12 generic coefficients are registered, {} needed", p.dim())));
    }
    let coeffs = Element::from_coeffs(
        g.id(),
        p.members.iter().enumerate().map(|(n, &k)| (k, MultiPoly::param(Param::generic(n + 1)))),
    );
    let form = form_from_functional(g, &Functional::new("generic", coeffs), p)?;
    let pf = pfaffian(&form.matrix)?;
    Ok((!pf.is_zero(), pf))
}

/// Nondegenerate 0/1 functionals supported on subsets of `pool`, in subset order.
pub fn functional_search(g: &LieAlgebra, p: &Subalgebra, pool: &[usize]) -> Result<Vec<Functional>> {
    if !p.is_even() {
        return Err(Error::OddDimension(p.dim()));
    }
    if pool.len() > 12 {
        return Err(Error::Internal(format!("pool of {} exceeds 12", pool.len())));
    }
    let found: Vec<Option<Functional>> = (1u32..(1 << pool.len()))
        .into_par_iter()
        .map(|mask| -> Result<Option<Functional>> {
            let coeffs = Element::from_coeffs(
                g.id(),
                pool.iter().enumerate().filter(|(n, _)| mask >> n & 1 == 1).map(|(_, &k)| (k, MultiPoly::one())),
            );
            let f = Functional::new("candidate", coeffs);
            let form = form_from_functional(g, &f, p)?;
            Ok((!pfaffian(&form.matrix)?.is_zero()).then(|| Functional::new(f.to_string(), f.coeffs)))
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// Pf of the form of `f` on `p`, as a constant when it is one.
pub fn constant_pfaffian(g: &LieAlgebra, f: &Functional, p: &Subalgebra) -> Result<Option<Scalar>> {
    Ok(pfaffian(&form_from_functional(g, f, p)?.matrix)?.as_constant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_expression;
    use crate::catalog::Value;
    use crate::lie::sl4;

    fn functional(src: &str) -> Functional {
        match parse_expression(sl4(), src).unwrap() {
            Value::Dual(x) => Functional::new(src, x),
            other => panic!("not a functional: {other}"),
        }
    }

    #[test]
    fn dimensions() {
        let g = sl4();
        assert_eq!(borel_plus(g).dim(), 9);
        assert_eq!(parabolic(g, &["em1"]).unwrap().dim(), 10);
        let p23 = parabolic(g, &["em2", "em3"]).unwrap();
        assert_eq!(p23.dim(), 12);
        assert!(p23.contains(basis_index("em5").unwrap()));
        assert!(p23.closed);
        assert_eq!(parabolic_by_name(g, "P(-2,-3)").unwrap(), p23);
        assert_eq!(parabolic_by_name(g, "P3").unwrap().dim(), 10);
        assert!(parabolic_by_name(g, "P7").is_err());
    }

    #[test]
    fn form_entries() {
        let g = sl4();
        let p1 = parabolic(g, &["em1"]).unwrap();
        let form = form_from_functional(g, &functional("e5* + e4* + e1*"), &p1).unwrap();
        let (e1, h1) = (basis_index("e1").unwrap(), basis_index("h1").unwrap());
        assert_eq!(form.at(e1, h1), Some(&MultiPoly::int(-2)));
        assert!(form.at(e1, e1).unwrap().is_zero());
    }

    #[test]
    fn g1a_inverts_to_cybe_solution() {
        let g = sl4();
        let p1 = parabolic(g, &["em1"]).unwrap();
        let d = rmatrix_from_functional(g, &functional("e5* + e4* + e1*"), &p1).unwrap();
        assert_eq!(d.denominator, MultiPoly::one());
        assert_eq!(d.rmatrix().unwrap().carrier_dim(), 10);
    }

    #[test]
    fn parametric_functional_inverts() {
        let g = sl4();
        let p1 = parabolic(g, &["em1"]).unwrap();
        let d = rmatrix_from_functional(g, &functional("a*e5* + e4* + e1*"), &p1).unwrap();
        assert!(!d.denominator.is_constant());
    }

    #[test]
    fn singular_functional() {
        let g = sl4();
        let p1 = parabolic(g, &["em1"]).unwrap();
        assert_eq!(
            rmatrix_from_functional(g, &functional("e1*"), &p1).unwrap_err(),
            Error::SingularForm("e1*".into())
        );
    }

    #[test]
    fn support_outside_is_rejected() {
        let g = sl4();
        let p1 = parabolic(g, &["em1"]).unwrap();
        assert!(matches!(form_from_functional(g, &functional("em2*"), &p1), Err(Error::Type(_))));
    }

    #[test]
    fn odd_borel_rejected() {
        let g = sl4();
        assert_eq!(generic_nonexistence(g, &borel_plus(g)).unwrap_err(), Error::OddDimension(9));
    }

    #[test]
    fn empty_pool() {
        let g = sl4();
        let p1 = parabolic(g, &["em1"]).unwrap();
        assert!(functional_search(g, &p1, &[]).unwrap().is_empty());
    }
}
