//! Typed evaluation of syntax trees.

use std::fmt;

use crate::arith::{MultiPoly, Scalar};
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra};
use crate::wedge::{wedge, wedge_bivector, BiVector, TriVector};

use super::parser::{parse_ast, Expr};

/// Result of evaluating an expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(MultiPoly),
    Element(Element),
    BiVector(BiVector),
    TriVector(TriVector),
    /// Dual vector Σ c_k x_k*, stored by its coefficients.
    Dual(Element),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Element(_) => "element",
            Value::BiVector(_) => "bivector",
            Value::TriVector(_) => "trivector",
            Value::Dual(_) => "functional",
        }
    }

    pub fn into_bivector(self) -> Result<BiVector> {
        match self {
            Value::BiVector(r) => Ok(r),
            other => Err(Error::Type(format!("expected a bivector, found a {}", other.kind()))),
        }
    }

    fn scale(self, c: &MultiPoly) -> Value {
        match self {
            Value::Scalar(p) => Value::Scalar(&p * c),
            Value::Element(x) => Value::Element(x.scale(c)),
            Value::BiVector(r) => Value::BiVector(r.scale(c)),
            Value::TriVector(t) => Value::TriVector(t.scale(c)),
            Value::Dual(x) => Value::Dual(x.scale(c)),
        }
    }
}

impl fmt::Display for Value {
    /// Canonical emission in the grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(p) => write!(f, "{p}"),
            Value::Element(x) => write!(f, "{x}"),
            Value::BiVector(r) => write!(f, "{r}"),
            Value::TriVector(t) => write!(f, "{t}"),
            Value::Dual(x) => {
                let items: Vec<(String, &MultiPoly)> = x
                    .terms()
                    .map(|(k, c)| (format!("{}*", crate::lie::BASIS_NAMES[k]), c))
                    .collect();
                if items.is_empty() {
                    return f.write_str("0");
                }
                super::emit::write_linear(f, &items)
            }
        }
    }
}

fn type_error<T>(op: &str, a: &Value, b: &Value) -> Result<T> {
    Err(Error::Type(format!("cannot {op} a {} and a {}", a.kind(), b.kind())))
}

fn add(a: Value, b: Value) -> Result<Value> {
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x + &y),
        (Value::Element(mut x), Value::Element(y)) => {
            x.add_assign(&y)?;
            Value::Element(x)
        }
        (Value::BiVector(mut x), Value::BiVector(y)) => {
            x.add_assign(&y)?;
            Value::BiVector(x)
        }
        (Value::TriVector(mut x), Value::TriVector(y)) => {
            x.add_assign(&y)?;
            Value::TriVector(x)
        }
        (Value::Dual(mut x), Value::Dual(y)) => {
            x.add_assign(&y)?;
            Value::Dual(x)
        }
        (a, b) => return type_error("add", &a, &b),
    })
}

fn wedge_values(a: Value, b: Value) -> Result<Value> {
    Ok(match (a, b) {
        (Value::Element(x), Value::Element(y)) => Value::BiVector(wedge(&x, &y)?),
        (Value::Element(x), Value::BiVector(r)) => Value::TriVector(wedge_bivector(&x, &r)?),
        // r∧z = z∧r for r of even degree
        (Value::BiVector(r), Value::Element(z)) => Value::TriVector(wedge_bivector(&z, &r)?),
        (a, b) => return type_error("wedge", &a, &b),
    })
}

pub fn eval(g: &LieAlgebra, e: &Expr) -> Result<Value> {
    Ok(match e {
        Expr::Int(n) => Value::Scalar(MultiPoly::int(*n)),
        Expr::I => Value::Scalar(MultiPoly::constant(Scalar::i())),
        Expr::Param(p) => Value::Scalar(MultiPoly::param(*p)),
        Expr::Gen(name) => Value::Element(g.generator(name)?),
        Expr::Dual(name) => Value::Dual(g.generator(name)?),
        Expr::Neg(inner) => eval(g, inner)?.scale(&MultiPoly::int(-1)),
        Expr::Sum(parts) => {
            let mut acc: Option<Value> = None;
            for p in parts {
                let v = eval(g, p)?;
                acc = Some(match acc {
                    None => v,
                    Some(a) => add(a, v)?,
                });
            }
            acc.ok_or_else(|| Error::Internal("empty sum".into()))?
        }
        Expr::Mul(a, b) => match (eval(g, a)?, eval(g, b)?) {
            (Value::Scalar(c), v) | (v, Value::Scalar(c)) => v.scale(&c),
            (a, b) => return type_error("multiply", &a, &b),
        },
        Expr::Div(a, b) => {
            let num = eval(g, a)?;
            match eval(g, b)? {
                Value::Scalar(d) => {
                    let c = d.as_constant().ok_or_else(|| Error::Type(format!("division by non-constant {d}")))?;
                    num.scale(&MultiPoly::constant(c.inv()?))
                }
                other => return type_error("divide", &num, &other),
            }
        }
        Expr::Wedge(parts) => {
            let mut it = parts.iter();
            let mut acc = eval(g, it.next().ok_or_else(|| Error::Internal("empty wedge".into()))?)?;
            for p in it {
                acc = wedge_values(acc, eval(g, p)?)?;
            }
            acc
        }
        Expr::Pow(base, k) => match eval(g, base)? {
            Value::Scalar(p) => Value::Scalar(p.int_pow(*k)?),
            other => return Err(Error::Type(format!("cannot raise a {} to a power", other.kind()))),
        },
    })
}

/// Parses and evaluates `src` in `g`.
pub fn parse_expression(g: &LieAlgebra, src: &str) -> Result<Value> {
    eval(g, &parse_ast(src)?)
}
