use std::fmt;

use crate::error::{Error, Result};

/// A positive squarefree integer; `1` stands for the rationals themselves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SqfInt(u64);

impl SqfInt {
    pub const ONE: SqfInt = SqfInt(1);

    pub fn new(value: u64) -> Result<Self> {
        match squarefree_decompose(value)? {
            (s, 1) => Ok(s),
            _ => Err(Error::invalid(format!("{value} is not squarefree"))),
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_one(self) -> bool {
        self.0 == 1
    }
}

impl fmt::Display for SqfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Writes `n = s * m^2` with `s` squarefree.
pub fn squarefree_decompose(n: u64) -> Result<(SqfInt, u64)> {
    if n == 0 {
        return Err(Error::invalid("squarefree decomposition of 0"));
    }
    let mut rest = n;
    let mut s = 1u64;
    let mut m = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        m *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    s *= rest;
    Ok((SqfInt(s), m))
}
