//! Emitter for the expression grammar.

use std::fmt;

use crate::arith::MultiPoly;

/// Writes `Σ c·name` in grammar form, e.g. `1/2*h1 + i*e4 - (a + 1)*e6`.
pub fn write_linear(f: &mut fmt::Formatter<'_>, items: &[(String, &MultiPoly)]) -> fmt::Result {
    for (k, (name, c)) in items.iter().enumerate() {
        let (neg, body) = coeff_prefix(c);
        match (k, neg) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        match body {
            None => f.write_str(name)?,
            Some(b) => write!(f, "{b}*{name}")?,
        }
    }
    Ok(())
}

/// Splits a coefficient into a sign and an optional factor text (`None` for ±1).
pub fn coeff_prefix(c: &MultiPoly) -> (bool, Option<String>) {
    if let Some((m, s)) = c.as_monomial() {
        let neg = s.is_negative_leading();
        let s = if neg { -s } else { s.clone() };
        let complex = !s.is_real() && !num_traits::Zero::is_zero(s.re());
        let text = match (m.is_one(), s.is_one(), complex) {
            (true, true, _) => None,
            (true, false, false) => Some(s.to_string()),
            (true, false, true) => Some(format!("({s})")),
            (false, true, _) => Some(m.to_string()),
            (false, false, false) => Some(format!("{s}*{m}")),
            (false, false, true) => Some(format!("({s})*{m}")),
        };
        (neg, text)
    } else {
        (false, Some(format!("({c})")))
    }
}
