//! Exact arithmetic in the groups `Z_q`, `q ∈ {2, 4, 6, …} ∪ {∞}`.
//!
//! `Z_∞` is the integers. Only even and infinite moduli exist here: those
//! are the only values the fundamental group of the Lagrangian Grassmann
//! bundle of a simply connected almost complex surface can take.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Modulus {
    Finite(u64),
    Infinite,
}

impl Modulus {
    pub fn finite(q: i64) -> Result<Self> {
        if q >= 2 && q % 2 == 0 {
            Ok(Modulus::Finite(q as u64))
        } else {
            Err(Error::InvalidModulus(q))
        }
    }

    pub fn value(self) -> Option<u64> {
        match self {
            Modulus::Finite(q) => Some(q),
            Modulus::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Modulus::Finite(_))
    }

    /// `q/2`, or `None` for `q = ∞`.
    pub fn half(self) -> Option<u64> {
        self.value().map(|q| q / 2)
    }

    /// Elements of order dividing two: `{0, q/2}`, or `{0}` when `q = ∞`.
    pub fn ord2_subgroup(self) -> Vec<CycElem> {
        match self {
            Modulus::Finite(q) => vec![CycElem::zero(self), CycElem::from_u64(q / 2, self)],
            Modulus::Infinite => vec![CycElem::zero(self)],
        }
    }

    /// All elements, in increasing canonical order. Infinite groups are refused.
    pub fn elements(self) -> Result<Vec<CycElem>> {
        match self {
            Modulus::Finite(q) => Ok((0..q).map(|v| CycElem::from_u64(v, self)).collect()),
            Modulus::Infinite => Err(Error::Infinite("Z_inf".into())),
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::Finite(q) => write!(f, "{q}"),
            Modulus::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Modulus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Modulus::Finite(q) => s.serialize_u64(*q),
            Modulus::Infinite => s.serialize_none(),
        }
    }
}

impl<'de> Deserialize<'de> for Modulus {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match Option::<i64>::deserialize(d)? {
            None => Ok(Modulus::Infinite),
            Some(q) => Modulus::finite(q).map_err(de::Error::custom),
        }
    }
}

/// An element of `Z_q` held by its least nonnegative residue (any integer
/// when `q = ∞`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycElem {
    modulus: Modulus,
    value: BigInt,
}

impl CycElem {
    pub fn zero(modulus: Modulus) -> Self {
        CycElem {
            modulus,
            value: BigInt::zero(),
        }
    }

    fn from_u64(v: u64, modulus: Modulus) -> Self {
        CycElem {
            modulus,
            value: BigInt::from(v),
        }
    }

    pub fn new(value: impl Into<BigInt>, modulus: Modulus) -> Self {
        reduce(value, modulus)
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.value.to_i64()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, other: &CycElem) -> Result<CycElem> {
        self.check(other)?;
        Ok(reduce(&self.value + &other.value, self.modulus))
    }

    pub fn neg(&self) -> CycElem {
        reduce(-&self.value, self.modulus)
    }

    pub fn double(&self) -> CycElem {
        reduce(&self.value * 2, self.modulus)
    }

    /// Membership in `2Z_q`, the image of `x ↦ 2x`.
    pub fn in_even_subgroup(&self) -> bool {
        // For even q the residue class of 2y mod q is even, and conversely.
        self.value.is_even()
    }

    pub fn in_ord2_subgroup(&self) -> bool {
        match self.modulus {
            Modulus::Finite(q) => self.value.is_zero() || self.value == BigInt::from(q / 2),
            Modulus::Infinite => self.value.is_zero(),
        }
    }

    /// Image under the unique surjection `Z_q → Z_2`.
    pub fn mod2(&self) -> CycElem {
        reduce(self.value.clone(), Modulus::Finite(2))
    }

    fn check(&self, other: &CycElem) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(
                self.modulus.to_string(),
                other.modulus.to_string(),
            ))
        }
    }
}

pub fn add(a: &CycElem, b: &CycElem) -> Result<CycElem> {
    a.add(b)
}

/// Canonical image of `n` in `Z_q`; the identity when `q = ∞`.
pub fn reduce(n: impl Into<BigInt>, q: Modulus) -> CycElem {
    let n = n.into();
    let value = match q {
        Modulus::Finite(q) => n.mod_floor(&BigInt::from(q)),
        Modulus::Infinite => n,
    };
    CycElem { modulus: q, value }
}

pub fn even_subgroup_contains(x: &CycElem) -> bool {
    x.in_even_subgroup()
}

pub fn ord2_subgroup(q: Modulus) -> Vec<CycElem> {
    q.ord2_subgroup()
}

pub fn mod2_reduction(x: &CycElem) -> CycElem {
    x.mod2()
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum WireInt {
    Small(i64),
    Big(String),
}

impl WireInt {
    pub(crate) fn from_bigint(v: &BigInt) -> Self {
        match v.to_i64() {
            Some(x) => WireInt::Small(x),
            None => WireInt::Big(v.to_string()),
        }
    }

    pub(crate) fn into_bigint(self) -> std::result::Result<BigInt, String> {
        match self {
            WireInt::Small(x) => Ok(BigInt::from(x)),
            WireInt::Big(s) => s.parse().map_err(|_| format!("not an integer: {s}")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CycWire {
    q: Modulus,
    v: WireInt,
}

impl Serialize for CycElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycWire {
            q: self.modulus,
            v: WireInt::from_bigint(&self.value),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = CycWire::deserialize(d)?;
        let v = w.v.into_bigint().map_err(de::Error::custom)?;
        Ok(reduce(v, w.q))
    }
}
