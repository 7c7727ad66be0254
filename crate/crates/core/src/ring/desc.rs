use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::is_prime_u64;

/// Descriptor of a ring in the effective tier, with the CLI grammar
/// `Z`, `Q`, `Fp(p)`, `Zmod(n)`, `Zloc(p)`, `FpX(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingDesc {
    PrimeField(u64),
    Rationals,
    Integers,
    IntegersLocalized(u64),
    IntegersMod(u64),
    PolyOverPrimeField(u64),
}

impl RingDesc {
    /// Checks the parameter constraints (p prime, n at least 2).
    pub fn validate(self) -> Result<Self> {
        match self {
            RingDesc::PrimeField(p) | RingDesc::IntegersLocalized(p) | RingDesc::PolyOverPrimeField(p) => {
                if !is_prime_u64(p) {
                    return Err(Error::UnsupportedRing(format!("{p} is not prime")));
                }
                if p > u32::MAX as u64 {
                    return Err(Error::UnsupportedRing(format!("prime {p} too large")));
                }
            }
            RingDesc::IntegersMod(n) => {
                if n < 2 {
                    return Err(Error::UnsupportedRing(format!("modulus {n} must be at least 2")));
                }
            }
            RingDesc::Rationals | RingDesc::Integers => {}
        }
        Ok(self)
    }
}

impl fmt::Display for RingDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDesc::PrimeField(p) => write!(f, "Fp({p})"),
            RingDesc::Rationals => write!(f, "Q"),
            RingDesc::Integers => write!(f, "Z"),
            RingDesc::IntegersLocalized(p) => write!(f, "Zloc({p})"),
            RingDesc::IntegersMod(n) => write!(f, "Zmod({n})"),
            RingDesc::PolyOverPrimeField(p) => write!(f, "FpX({p})"),
        }
    }
}

impl FromStr for RingDesc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "Z" => return Ok(RingDesc::Integers),
            "Q" => return Ok(RingDesc::Rationals),
            _ => {}
        }
        let bad = || Error::UnsupportedRing(format!("malformed ring descriptor `{s}`"));
        let open = s.find('(').ok_or_else(bad)?;
        if !s.ends_with(')') {
            return Err(bad());
        }
        let head = &s[..open];
        let arg: u64 = s[open + 1..s.len() - 1].trim().parse().map_err(|_| bad())?;
        let desc = match head {
            "Fp" => RingDesc::PrimeField(arg),
            "Zmod" => RingDesc::IntegersMod(arg),
            "Zloc" => RingDesc::IntegersLocalized(arg),
            "FpX" => RingDesc::PolyOverPrimeField(arg),
            _ => return Err(bad()),
        };
        desc.validate()
    }
}
