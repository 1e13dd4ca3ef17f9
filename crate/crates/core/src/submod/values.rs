use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::order::format::{content_lines, parse_index};
use crate::order::Lattice;
use crate::Elem;

/// One exact value per lattice element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValueTable {
    values: Vec<BigRational>,
}

impl ValueTable {
    pub fn new(values: Vec<BigRational>) -> Self {
        ValueTable { values }
    }

    pub fn from_integers<I, T>(values: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        ValueTable {
            values: values.into_iter().map(|v| BigRational::from_integer(v.into())).collect(),
        }
    }

    pub fn from_fn(n: usize, f: impl Fn(Elem) -> BigRational) -> Self {
        ValueTable {
            values: (0..n).map(f).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, e: Elem) -> &BigRational {
        &self.values[e]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Fails unless the table has one entry per element of `lattice`.
    pub fn check_len(&self, lattice: &Lattice) -> Result<()> {
        if self.len() == lattice.len() {
            Ok(())
        } else {
            Err(Error::TableSize {
                got: self.len(),
                expected: lattice.len(),
            })
        }
    }

    /// Elements sorted by value, ties by index.
    pub fn argsort(&self) -> Vec<Elem> {
        let mut order: Vec<Elem> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.values[a].cmp(&self.values[b]).then(a.cmp(&b)));
        order
    }

    pub fn max(&self) -> Option<&BigRational> {
        self.values.iter().max()
    }

    pub fn is_injective(&self) -> bool {
        let mut v: Vec<&BigRational> = self.values.iter().collect();
        v.sort();
        v.windows(2).all(|w| w[0] != w[1])
    }
}

/// Parses `p/q` or an integer. Decimal and exponent notation are refused.
pub fn parse_rational(tok: &str) -> std::result::Result<BigRational, String> {
    let (num, den) = match tok.split_once('/') {
        Some((n, d)) => (n, d),
        None => (tok, "1"),
    };
    let num = BigInt::from_str(num.trim()).map_err(|_| format!("not an exact rational: {tok:?}"))?;
    let den = BigInt::from_str(den.trim()).map_err(|_| format!("not an exact rational: {tok:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {tok:?}"));
    }
    Ok(BigRational::new(num, den))
}

pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses a `.vals` file: lines `<element> <value>` covering each of the
/// `n` elements exactly once.
pub fn parse_values(text: &str, n: usize) -> Result<ValueTable> {
    let mut values: Vec<Option<BigRational>> = vec![None; n];
    for (line, content) in content_lines(text) {
        let toks: Vec<&str> = content.split_whitespace().collect();
        let [idx, val] = toks.as_slice() else {
            return Err(Error::parse(line, format!("expected `<element> <value>`, got {content:?}")));
        };
        let e = parse_index(idx, line)?;
        if e >= n {
            return Err(Error::parse(line, format!("element {e} out of range for {n} elements")));
        }
        let v = parse_rational(val).map_err(|m| Error::parse(line, m))?;
        if values[e].replace(v).is_some() {
            return Err(Error::parse(line, format!("element {e} given twice")));
        }
    }
    let missing: Vec<Elem> = (0..n).filter(|&e| values[e].is_none()).collect();
    if !missing.is_empty() {
        return Err(Error::parse(0, format!("no value for elements {missing:?}")));
    }
    Ok(ValueTable::new(values.into_iter().map(Option::unwrap).collect()))
}

pub fn write_values(t: &ValueTable) -> String {
    let mut out = String::new();
    for (e, v) in t.values.iter().enumerate() {
        let _ = writeln!(out, "{e} {}", format_rational(v));
    }
    out
}
