//! Labels for the indecomposable `D4`-modules.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An element of `Z/2Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Z2(u8);

impl Z2 {
    pub const ZERO: Z2 = Z2(0);
    pub const ONE: Z2 = Z2(1);

    /// Reduces any integer mod 2.
    pub fn new(v: i64) -> Z2 {
        Z2(v.rem_euclid(2) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// `(-1)^r`.
    pub fn sign(self) -> i64 {
        if self.0 == 0 {
            1
        } else {
            -1
        }
    }

    /// The residue whose sign is `sign`; `sign` must be `±1`.
    pub fn from_sign(sign: i64) -> Z2 {
        debug_assert!(sign == 1 || sign == -1);
        if sign == 1 {
            Z2::ZERO
        } else {
            Z2::ONE
        }
    }

    pub fn flip(self) -> Z2 {
        Z2(1 - self.0)
    }
}

impl Add for Z2 {
    type Output = Z2;
    fn add(self, rhs: Z2) -> Z2 {
        Z2((self.0 + rhs.0) % 2)
    }
}

impl Add<u32> for Z2 {
    type Output = Z2;
    fn add(self, rhs: u32) -> Z2 {
        Z2(((self.0 as u32 + rhs) % 2) as u8)
    }
}

impl TryFrom<u8> for Z2 {
    type Error = String;
    fn try_from(v: u8) -> Result<Z2, String> {
        match v {
            0 | 1 => Ok(Z2(v)),
            _ => Err(format!("residue mod 2 must be 0 or 1, got {v}")),
        }
    }
}

impl From<Z2> for u8 {
    fn from(r: Z2) -> u8 {
        r.0
    }
}

impl fmt::Display for Z2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A point of the projective line over `Q`: a rational number or `∞`.
///
/// Finite points sort by value and `∞` sorts last. `BigRational` keeps its
/// values in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EtaParam {
    Finite(BigRational),
    Infinity,
}

impl EtaParam {
    pub fn finite(num: i64, den: i64) -> EtaParam {
        EtaParam::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn integer(v: i64) -> EtaParam {
        EtaParam::Finite(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, EtaParam::Infinity)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EtaParseError {
    #[error("malformed projective parameter `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

impl FromStr for EtaParam {
    type Err = EtaParseError;

    fn from_str(s: &str) -> Result<EtaParam, EtaParseError> {
        let t = s.trim();
        if t == "oo" {
            return Ok(EtaParam::Infinity);
        }
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| EtaParseError::Malformed(s.to_string()))?;
        if den.starts_with('-') || den.starts_with('+') {
            return Err(EtaParseError::Malformed(s.to_string()));
        }
        let den: BigInt = den
            .parse()
            .map_err(|_| EtaParseError::Malformed(s.to_string()))?;
        if den.is_zero() {
            return Err(EtaParseError::ZeroDenominator(s.to_string()));
        }
        Ok(EtaParam::Finite(BigRational::new(num, den)))
    }
}

impl fmt::Display for EtaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EtaParam::Infinity => write!(f, "oo"),
            EtaParam::Finite(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            EtaParam::Finite(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

impl Serialize for EtaParam {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for EtaParam {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<EtaParam, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The isomorphism class of one indecomposable `D4`-module.
///
/// `s >= 1` for the last four variants; `Ω⁰V(r)` is always written as
/// `SimpleOne(r)` (see [`ModuleLabel::omega`]). The derived order is the
/// canonical one used for printing: variant (in declaration order), then `s`,
/// then `r`, then `eta`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ModuleLabel {
    /// `V(r)`, one-dimensional simple.
    SimpleOne { r: Z2 },
    /// `V(2,r)`, two-dimensional simple projective.
    SimpleTwo { r: Z2 },
    /// `Ω^s V(r)`, of `(s+1, s)`-type.
    Syzygy { s: u32, r: Z2 },
    /// `Ω^{-s} V(r)`, of `(s, s+1)`-type.
    Cosyzygy { s: u32, r: Z2 },
    /// `M_s(r, η)`, of `(s, s)`-type.
    Band { s: u32, r: Z2, eta: EtaParam },
    /// `P(r)`, the projective cover of `V(r)`.
    Projective { r: Z2 },
}

impl ModuleLabel {
    pub fn v(r: u8) -> ModuleLabel {
        ModuleLabel::SimpleOne {
            r: Z2::new(r as i64),
        }
    }

    pub fn t(r: u8) -> ModuleLabel {
        ModuleLabel::SimpleTwo {
            r: Z2::new(r as i64),
        }
    }

    pub fn p(r: u8) -> ModuleLabel {
        ModuleLabel::Projective {
            r: Z2::new(r as i64),
        }
    }

    /// `Ω^n V(r)` for any integer `n`, with `Ω⁰V(r) = V(r)`.
    pub fn omega(n: i64, r: Z2) -> ModuleLabel {
        match n.cmp(&0) {
            Ordering::Equal => ModuleLabel::SimpleOne { r },
            Ordering::Greater => ModuleLabel::Syzygy { s: n as u32, r },
            Ordering::Less => ModuleLabel::Cosyzygy { s: (-n) as u32, r },
        }
    }

    pub fn band(s: u32, r: u8, eta: EtaParam) -> ModuleLabel {
        ModuleLabel::Band {
            s,
            r: Z2::new(r as i64),
            eta,
        }
    }

    pub fn r(&self) -> Z2 {
        match self {
            ModuleLabel::SimpleOne { r }
            | ModuleLabel::SimpleTwo { r }
            | ModuleLabel::Projective { r }
            | ModuleLabel::Syzygy { r, .. }
            | ModuleLabel::Cosyzygy { r, .. }
            | ModuleLabel::Band { r, .. } => *r,
        }
    }

    /// The label with `r` shifted by `shift`; `s` and `eta` are kept.
    pub fn twist(&self, shift: Z2) -> ModuleLabel {
        let mut out = self.clone();
        match &mut out {
            ModuleLabel::SimpleOne { r }
            | ModuleLabel::SimpleTwo { r }
            | ModuleLabel::Projective { r }
            | ModuleLabel::Syzygy { r, .. }
            | ModuleLabel::Cosyzygy { r, .. }
            | ModuleLabel::Band { r, .. } => *r = *r + shift,
        }
        out
    }

    /// Checks `s >= 1` where it applies.
    pub fn is_valid(&self) -> bool {
        match self {
            ModuleLabel::Syzygy { s, .. }
            | ModuleLabel::Cosyzygy { s, .. }
            | ModuleLabel::Band { s, .. } => *s >= 1,
            _ => true,
        }
    }

    /// The variant name used in JSON output.
    pub fn kind_name(&self) -> &'static str {
        match self {
            ModuleLabel::SimpleOne { .. } => "SimpleOne",
            ModuleLabel::SimpleTwo { .. } => "SimpleTwo",
            ModuleLabel::Syzygy { .. } => "Syzygy",
            ModuleLabel::Cosyzygy { .. } => "Cosyzygy",
            ModuleLabel::Band { .. } => "Band",
            ModuleLabel::Projective { .. } => "Projective",
        }
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleLabel::SimpleOne { r } => write!(f, "V({r})"),
            ModuleLabel::SimpleTwo { r } => write!(f, "V(2,{r})"),
            ModuleLabel::Projective { r } => write!(f, "P({r})"),
            ModuleLabel::Syzygy { s, r } => write!(f, "O^{s}V({r})"),
            ModuleLabel::Cosyzygy { s, r } => write!(f, "O^-{s}V({r})"),
            ModuleLabel::Band { s, r, eta } => write!(f, "M_{s}({r},{eta})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_arithmetic() {
        assert_eq!(Z2::ONE + Z2::ONE, Z2::ZERO);
        assert_eq!(Z2::new(-3), Z2::ONE);
        assert_eq!(Z2::ONE + 3u32, Z2::ZERO);
        assert_eq!(Z2::ONE.sign(), -1);
        assert!(Z2::try_from(2u8).is_err());
    }

    #[test]
    fn eta_parse_and_order() {
        assert_eq!("oo".parse::<EtaParam>().unwrap(), EtaParam::Infinity);
        assert_eq!("10/14".parse::<EtaParam>().unwrap(), EtaParam::finite(5, 7));
        assert_eq!("-2".parse::<EtaParam>().unwrap(), EtaParam::integer(-2));
        assert!("1/0".parse::<EtaParam>().is_err());
        assert!("1/-2".parse::<EtaParam>().is_err());
        assert!("abc".parse::<EtaParam>().is_err());
        let mut v = vec![
            EtaParam::Infinity,
            EtaParam::integer(1),
            EtaParam::finite(5, 7),
            EtaParam::integer(-2),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                EtaParam::integer(-2),
                EtaParam::finite(5, 7),
                EtaParam::integer(1),
                EtaParam::Infinity
            ]
        );
        assert_eq!(EtaParam::finite(-6, 4).to_string(), "-3/2");
    }

    #[test]
    fn omega_zero_is_simple() {
        assert_eq!(ModuleLabel::omega(0, Z2::ONE), ModuleLabel::v(1));
        assert_eq!(
            ModuleLabel::omega(-2, Z2::ZERO),
            ModuleLabel::Cosyzygy { s: 2, r: Z2::ZERO }
        );
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![
            ModuleLabel::p(0),
            ModuleLabel::band(1, 0, EtaParam::Infinity),
            ModuleLabel::band(1, 0, EtaParam::integer(3)),
            ModuleLabel::omega(-1, Z2::ZERO),
            ModuleLabel::omega(2, Z2::ZERO),
            ModuleLabel::omega(1, Z2::ONE),
            ModuleLabel::t(1),
            ModuleLabel::v(1),
            ModuleLabel::v(0),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|l| l.to_string()).collect();
        assert_eq!(
            shown,
            [
                "V(0)",
                "V(1)",
                "V(2,1)",
                "O^1V(1)",
                "O^2V(0)",
                "O^-1V(0)",
                "M_1(0,3)",
                "M_1(0,oo)",
                "P(0)"
            ]
        );
    }
}
