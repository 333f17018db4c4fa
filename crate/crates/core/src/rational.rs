//! Rational helpers shared by every module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational coefficient.
pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn sign(exp: usize) -> Q {
    if exp.is_multiple_of(2) {
        Q::one()
    } else {
        -Q::one()
    }
}

/// Renders in lowest terms: `p/q`, or `p` when the denominator is one.
pub fn render(c: &Q) -> String {
    c.to_string()
}

pub fn parse(s: &str) -> Result<Q> {
    s.trim()
        .parse::<Q>()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))
}

/// Writes `coef·body`, leaving out a unit coefficient. Used by the text
/// renderers of every element type.
pub(crate) fn write_terms<'a, I>(
    f: &mut std::fmt::Formatter<'_>,
    sep: &str,
    terms: I,
) -> std::fmt::Result
where
    I: IntoIterator<Item = (&'a Q, String)>,
{
    let mut first = true;
    for (c, body) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        if abs.is_one() {
            write!(f, "{body}")?;
        } else if body.is_empty() || body == "1" {
            write!(f, "{abs}")?;
        } else {
            write!(f, "{abs}{sep}{body}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Splits a rendered sum back into signed `(coefficient, body)` pairs. The
/// coefficient is recognised as a leading rational followed by `sep`.
pub(crate) fn split_terms(s: &str, sep: &str) -> Result<Vec<(Q, String)>> {
    let s = s.trim();
    if s == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    let mut negative = false;
    let bytes: Vec<char> = s.chars().collect();
    let mut chunks: Vec<(bool, String)> = Vec::new();
    let mut i = 0;
    // leading sign
    if bytes.first() == Some(&'-') {
        negative = true;
        i = 1;
        start = 1;
    }
    while i < bytes.len() {
        let ch = bytes[i];
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 && bytes[i - 1] == ' ' => {
                let chunk: String = bytes[start..i].iter().collect();
                chunks.push((negative, chunk));
                negative = ch == '-';
                start = i + 1;
            }
            _ => {}
        }
        i += 1;
    }
    let chunk: String = bytes[start..].iter().collect();
    chunks.push((negative, chunk));

    for (neg, chunk) in chunks {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            return Err(Error::Parse(format!("empty term in `{s}`")));
        }
        let (coef, body) = match chunk.split_once(sep) {
            Some((head, rest)) if parse(head).is_ok() => (parse(head)?, rest.trim().to_string()),
            _ => match parse(chunk) {
                Ok(c) => (c, String::new()),
                Err(_) => (Q::one(), chunk.to_string()),
            },
        };
        out.push((if neg { -coef } else { coef }, body));
    }
    Ok(out)
}
