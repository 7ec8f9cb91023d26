//! Minimal-edit search for transcriptions that fail CYBE.
//!
//! Edits act on the syntax tree of one top-level summand: rescale the
//! summand, change one integer coefficient of a linear combination, or
//! rename one generator. Depth-1 edits are tried first; pairs only when no
//! single edit works. The catalog itself is never modified.

use std::fmt;

use rayon::prelude::*;

use super::eval::{eval, Value};
use super::parser::Expr;
use crate::arith::Scalar;
use crate::error::Result;
use crate::lie::LieAlgebra;
use crate::wedge::{cybe_vanishes, BiVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Edit {
    Scale { summand: usize, factor: Scalar },
    Coefficient { summand: usize, site: usize, generator: String, from: i64, to: i64 },
    Relabel { summand: usize, site: usize, from: String, to: String },
}

impl Edit {
    fn summand(&self) -> usize {
        match self {
            Edit::Scale { summand, .. } | Edit::Coefficient { summand, .. } | Edit::Relabel { summand, .. } => *summand,
        }
    }

    fn conflicts(&self, other: &Edit) -> bool {
        match (self, other) {
            (Edit::Scale { summand: a, .. }, Edit::Scale { summand: b, .. }) => a == b,
            (Edit::Coefficient { summand: a, site: s, .. }, Edit::Coefficient { summand: b, site: t, .. })
            | (Edit::Relabel { summand: a, site: s, .. }, Edit::Relabel { summand: b, site: t, .. }) => a == b && s == t,
            _ => false,
        }
    }
}

impl fmt::Display for Edit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edit::Scale { summand, factor } => write!(f, "summand {}: multiply by {factor}", summand + 1),
            Edit::Coefficient { summand, generator, from, to, .. } => {
                write!(f, "summand {}: coefficient of {generator} {from} -> {to}", summand + 1)
            }
            Edit::Relabel { summand, from, to, .. } => write!(f, "summand {}: {from} -> {to}", summand + 1),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Repair {
    pub edits: Vec<Edit>,
    pub expr: Expr,
    pub value: BiVector,
}

impl Repair {
    pub fn describe(&self) -> String {
        self.edits.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
    }
}

#[derive(Clone, Debug)]
pub struct RepairScope {
    pub max_depth: usize,
    pub scales: Vec<Scalar>,
    pub coefficients: Vec<i64>,
    /// Generator names a relabel may introduce.
    pub relabel_pool: Vec<String>,
}

impl RepairScope {
    pub fn new(relabel_pool: Vec<String>) -> Self {
        let scales = [(-1, 1), (2, 1), (1, 2), (-2, 1), (-1, 2), (3, 1), (1, 3), (-3, 1), (-1, 3)]
            .iter()
            .map(|&(p, q)| Scalar::ratio(p, q))
            .collect();
        RepairScope { max_depth: 2, scales, coefficients: (-3..=3).collect(), relabel_pool }
    }
}

/// (coefficient, generator) for `g`, `-g`, `c*g`, `-(c*g)`.
fn linear_member(e: &Expr) -> Option<(i64, &str)> {
    match e {
        Expr::Gen(n) => Some((1, n)),
        Expr::Neg(inner) => linear_member(inner).map(|(c, n)| (-c, n)),
        Expr::Mul(a, b) => match (a.as_ref(), b.as_ref()) {
            (Expr::Int(c), Expr::Gen(n)) => Some((*c, n)),
            _ => None,
        },
        _ => None,
    }
}

fn make_member(c: i64, name: &str) -> Expr {
    let g = Expr::Gen(name.to_string());
    match c {
        1 => g,
        -1 => Expr::Neg(Box::new(g)),
        c if c > 0 => Expr::Mul(Box::new(Expr::Int(c)), Box::new(g)),
        c => Expr::Neg(Box::new(Expr::Mul(Box::new(Expr::Int(-c)), Box::new(g)))),
    }
}

/// Visits linear-combination members in DFS order; `f` may rewrite the member.
fn for_each_member(e: &mut Expr, counter: &mut usize, f: &mut dyn FnMut(usize, &mut Vec<Expr>, usize)) {
    match e {
        Expr::Sum(items) => {
            let mut k = 0;
            while k < items.len() {
                if linear_member(&items[k]).is_some() {
                    let site = *counter;
                    *counter += 1;
                    let before = items.len();
                    f(site, items, k);
                    if items.len() < before {
                        continue;
                    }
                } else {
                    for_each_member(&mut items[k], counter, f);
                }
                k += 1;
            }
        }
        Expr::Neg(a) | Expr::Pow(a, _) => for_each_member(a, counter, f),
        Expr::Mul(a, b) | Expr::Div(a, b) => {
            for_each_member(a, counter, f);
            for_each_member(b, counter, f);
        }
        Expr::Wedge(v) => v.iter_mut().for_each(|x| for_each_member(x, counter, f)),
        _ => {}
    }
}

fn for_each_gen(e: &mut Expr, counter: &mut usize, f: &mut dyn FnMut(usize, &mut String)) {
    match e {
        Expr::Gen(n) => {
            f(*counter, n);
            *counter += 1;
        }
        Expr::Neg(a) | Expr::Pow(a, _) => for_each_gen(a, counter, f),
        Expr::Mul(a, b) | Expr::Div(a, b) => {
            for_each_gen(a, counter, f);
            for_each_gen(b, counter, f);
        }
        Expr::Sum(v) | Expr::Wedge(v) => v.iter_mut().for_each(|x| for_each_gen(x, counter, f)),
        _ => {}
    }
}

fn scalar_expr(c: &Scalar) -> Expr {
    let re = c.re();
    let abs = if re < &num_rational::BigRational::from_integer(0.into()) { -re.clone() } else { re.clone() };
    let n: i64 = num_traits::ToPrimitive::to_i64(abs.numer()).unwrap_or(1);
    let d: i64 = num_traits::ToPrimitive::to_i64(abs.denom()).unwrap_or(1);
    let base = if d == 1 { Expr::Int(n) } else { Expr::Div(Box::new(Expr::Int(n)), Box::new(Expr::Int(d))) };
    if c.is_negative_leading() {
        Expr::Neg(Box::new(base))
    } else {
        base
    }
}

fn summands_of(e: &Expr) -> Vec<Expr> {
    match e {
        Expr::Sum(v) => v.clone(),
        other => vec![other.clone()],
    }
}

fn enumerate_edits(summands: &[Expr], scope: &RepairScope) -> Vec<Edit> {
    let mut out = Vec::new();
    for (k, s) in summands.iter().enumerate() {
        for factor in &scope.scales {
            out.push(Edit::Scale { summand: k, factor: factor.clone() });
        }
        let mut members = Vec::new();
        for_each_member(&mut s.clone(), &mut 0, &mut |site, items, idx| {
            if let Some((c, n)) = linear_member(&items[idx]) {
                members.push((site, c, n.to_string()));
            }
        });
        for (site, c, n) in members {
            for &to in &scope.coefficients {
                if to != c {
                    out.push(Edit::Coefficient { summand: k, site, generator: n.clone(), from: c, to });
                }
            }
        }
        let mut gens = Vec::new();
        for_each_gen(&mut s.clone(), &mut 0, &mut |site, n| gens.push((site, n.clone())));
        for (site, n) in gens {
            for to in &scope.relabel_pool {
                if *to != n {
                    out.push(Edit::Relabel { summand: k, site, from: n.clone(), to: to.clone() });
                }
            }
        }
    }
    out
}

fn apply(summands: &[Expr], edits: &[&Edit]) -> Expr {
    let mut parts: Vec<Expr> = summands.to_vec();
    // Relabels leave the tree shape alone; coefficient edits may drop a
    // member, so they run afterwards and from the highest site down.
    for e in edits {
        if let Edit::Relabel { summand, site, to, .. } = e {
            for_each_gen(&mut parts[*summand], &mut 0, &mut |s, n| {
                if s == *site {
                    *n = to.clone();
                }
            });
        }
    }
    let mut coeff_edits: Vec<&&Edit> = edits.iter().filter(|e| matches!(e, Edit::Coefficient { .. })).collect();
    coeff_edits.sort_by_key(|e| match e {
        Edit::Coefficient { site, .. } => std::cmp::Reverse(*site),
        _ => unreachable!(),
    });
    for e in coeff_edits {
        if let Edit::Coefficient { summand, site, to, .. } = e {
            for_each_member(&mut parts[*summand], &mut 0, &mut |s, items, idx| {
                if s == *site {
                    let (_, n) = linear_member(&items[idx]).expect("member");
                    let n = n.to_string();
                    if *to == 0 && items.len() > 1 {
                        items.remove(idx);
                    } else {
                        items[idx] = make_member(*to, &n);
                    }
                }
            });
        }
    }
    for e in edits {
        if let Edit::Scale { summand, factor } = e {
            let inner = std::mem::replace(&mut parts[*summand], Expr::Int(0));
            parts[*summand] = Expr::Mul(Box::new(scalar_expr(factor)), Box::new(inner));
        }
    }
    if parts.len() == 1 {
        parts.pop().expect("one summand")
    } else {
        Expr::Sum(parts)
    }
}

fn try_edits(g: &LieAlgebra, summands: &[Expr], edits: &[&Edit]) -> Option<Repair> {
    let expr = apply(summands, edits);
    let Ok(Value::BiVector(r)) = eval(g, &expr) else { return None };
    if r.is_zero() || !cybe_vanishes(g, &r).unwrap_or(false) {
        return None;
    }
    Some(Repair { edits: edits.iter().map(|e| (*e).clone()).collect(), expr, value: r })
}

/// All repairs of minimal depth (empty if the entry already solves CYBE or nothing works).
pub fn find_repairs(g: &LieAlgebra, ast: &Expr, scope: &RepairScope) -> Result<Vec<Repair>> {
    let original = eval(g, ast)?.into_bivector()?;
    if cybe_vanishes(g, &original)? {
        return Ok(Vec::new());
    }
    let summands = summands_of(ast);
    let edits = enumerate_edits(&summands, scope);
    if scope.max_depth >= 1 {
        let found: Vec<Repair> = edits.par_iter().filter_map(|e| try_edits(g, &summands, &[e])).collect();
        if !found.is_empty() {
            return Ok(found);
        }
    }
    if scope.max_depth >= 2 {
        let pairs: Vec<(usize, usize)> = (0..edits.len())
            .flat_map(|i| (i + 1..edits.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| !edits[i].conflicts(&edits[j]))
            .filter(|&(i, j)| edits[i].summand() != edits[j].summand() || !matches!(edits[i], Edit::Scale { .. }))
            .collect();
        let found: Vec<Repair> =
            pairs.par_iter().filter_map(|&(i, j)| try_edits(g, &summands, &[&edits[i], &edits[j]])).collect();
        return Ok(found);
    }
    Ok(Vec::new())
}
