//! Closed surfaces, their first (co)homology in fixed coordinates, and the
//! Maslov-index sets `I_q(Σ) = {λ ∈ H¹(Σ, Z_q) : λ mod 2 = w₁(Σ)}`.
//!
//! Coordinates on `H₁(Σ, Z)` follow the normal forms
//! `T²#…#T²`, `T²#…#T²#K²` and `T²#…#T²#RP²`: free factors first, the
//! torsion factor (present iff Σ is nonorientable) last. For the Klein
//! bottle summand the last free factor is the orientation-reversing
//! generator, so `w₁` reads `(0, …, 0, 1 | 0)` in the even-genus case and
//! `(0, …, 0 | 1)` in the odd-genus case.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclic::{CycElem, Modulus};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Surface {
    pub orientable: bool,
    pub genus: u32,
}

/// Sign of `(-1)^χ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Surface {
    pub const SPHERE: Surface = Surface {
        orientable: true,
        genus: 0,
    };
    pub const TORUS: Surface = Surface {
        orientable: true,
        genus: 1,
    };
    pub const PROJECTIVE_PLANE: Surface = Surface {
        orientable: false,
        genus: 1,
    };
    pub const KLEIN_BOTTLE: Surface = Surface {
        orientable: false,
        genus: 2,
    };

    pub fn orientable(genus: u32) -> Self {
        Surface {
            orientable: true,
            genus,
        }
    }

    pub fn nonorientable(genus: u32) -> Result<Self> {
        Surface {
            orientable: false,
            genus,
        }
        .validated()
    }

    pub fn validated(self) -> Result<Self> {
        if !self.orientable && self.genus == 0 {
            return Err(Error::InvalidSurface(
                "nonorientable surface needs genus >= 1".into(),
            ));
        }
        Ok(self)
    }

    /// The surface with Euler characteristic `chi` and given orientability, if any.
    pub fn with_euler_char(orientable: bool, chi: i64) -> Option<Self> {
        if orientable {
            (chi <= 2 && chi % 2 == 0).then(|| Surface::orientable(((2 - chi) / 2) as u32))
        } else {
            (chi <= 1).then(|| Surface {
                orientable: false,
                genus: (2 - chi) as u32,
            })
        }
    }

    pub fn euler_char(&self) -> i64 {
        let g = self.genus as i64;
        if self.orientable {
            2 - 2 * g
        } else {
            2 - g
        }
    }

    /// `(ε, ±)`: ε = 1 iff orientable, sign of `(-1)^χ`.
    pub fn params(&self) -> (u8, Sign) {
        let eps = u8::from(self.orientable);
        let sign = if self.euler_char().rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        };
        (eps, sign)
    }

    /// Number of coordinates of `H¹(Σ, Z_q)` in the fixed factor order.
    pub fn h1_rank(&self) -> usize {
        if self.orientable {
            2 * self.genus as usize
        } else {
            self.genus as usize
        }
    }

    pub fn free_rank(&self) -> usize {
        if self.orientable {
            2 * self.genus as usize
        } else {
            self.genus as usize - 1
        }
    }

    pub fn has_torsion(&self) -> bool {
        !self.orientable
    }

    /// `w₁(Σ)` evaluated on each `H₁` generator, in coordinate order.
    pub fn w1_pattern(&self) -> Vec<u8> {
        let mut w = vec![0u8; self.h1_rank()];
        if !self.orientable {
            if self.genus.is_multiple_of(2) {
                let n = w.len();
                w[n - 2] = 1;
            } else {
                *w.last_mut()
                    .expect("nonorientable surface has a torsion coordinate") = 1;
            }
        }
        w
    }

    /// `Σ # Σ′` for orientable `Σ′`.
    pub fn connected_sum(&self, other: &Surface) -> Result<Surface> {
        if !other.orientable {
            return Err(Error::InvalidSurface(
                "connected sum is only supported with an orientable second summand".into(),
            ));
        }
        Ok(if self.orientable {
            Surface::orientable(self.genus + other.genus)
        } else {
            Surface {
                orientable: false,
                genus: self.genus + 2 * other.genus,
            }
        })
    }

    /// `Σ # RP²`.
    pub fn add_crosscap(&self) -> Surface {
        if self.orientable {
            Surface {
                orientable: false,
                genus: 2 * self.genus + 1,
            }
        } else {
            Surface {
                orientable: false,
                genus: self.genus + 1,
            }
        }
    }

    pub fn iq_set(&self, q: Modulus) -> IqDescriptor {
        iq_set(self, q)
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.orientable, self.genus) {
            (true, 0) => write!(f, "S2"),
            (true, 1) => write!(f, "T2"),
            (true, g) => write!(f, "{g}T2"),
            (false, 1) => write!(f, "RP2"),
            (false, 2) => write!(f, "K2"),
            (false, g) => write!(f, "{g}RP2"),
        }
    }
}

/// Parses `or:<genus>`, `nonor:<genus>` or one of the names `S2`, `T2`, `RP2`, `K2`.
pub fn parse_surface(spec: &str) -> Result<Surface> {
    let spec = spec.trim();
    let named = match spec {
        "S2" => Some(Surface::SPHERE),
        "T2" => Some(Surface::TORUS),
        "RP2" => Some(Surface::PROJECTIVE_PLANE),
        "K2" => Some(Surface::KLEIN_BOTTLE),
        _ => None,
    };
    if let Some(s) = named {
        return Ok(s);
    }
    let bad = || {
        Error::InvalidSurface(format!(
            "'{spec}': expected or:<genus>, nonor:<genus>, S2, T2, RP2 or K2"
        ))
    };
    let (kind, genus) = spec.split_once(':').ok_or_else(bad)?;
    let genus: u32 = genus.parse().map_err(|_| bad())?;
    match kind {
        "or" => Ok(Surface::orientable(genus)),
        "nonor" => Surface::nonorientable(genus),
        _ => Err(bad()),
    }
}

pub fn euler_char(s: &Surface) -> i64 {
    s.euler_char()
}

pub fn params(s: &Surface) -> (u8, Sign) {
    s.params()
}

/// An element of `H¹(Σ, Z_q)` in the fixed coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexClass {
    q: Modulus,
    coords: Vec<CycElem>,
}

impl IndexClass {
    pub fn new(q: Modulus, coords: Vec<CycElem>) -> Result<Self> {
        if let Some(c) = coords.iter().find(|c| c.modulus() != q) {
            return Err(Error::ModulusMismatch(
                q.to_string(),
                c.modulus().to_string(),
            ));
        }
        Ok(IndexClass { q, coords })
    }

    pub fn from_ints(q: Modulus, values: &[i64]) -> Self {
        IndexClass {
            q,
            coords: values.iter().map(|&v| CycElem::new(v, q)).collect(),
        }
    }

    /// Checks that this class is an element of `H¹(Σ, Z_q)`.
    pub fn for_surface(self, surface: &Surface) -> Result<Self> {
        if self.coords.len() != surface.h1_rank() {
            return Err(Error::InvalidIndex(format!(
                "{} coordinates given, {surface} needs {}",
                self.coords.len(),
                surface.h1_rank()
            )));
        }
        if surface.has_torsion() && !self.coords.last().expect("nonempty").in_ord2_subgroup() {
            return Err(Error::InvalidIndex(
                "torsion coordinate must have order <= 2".into(),
            ));
        }
        Ok(self)
    }

    pub fn modulus(&self) -> Modulus {
        self.q
    }

    pub fn coords(&self) -> &[CycElem] {
        &self.coords
    }

    pub fn to_i64s(&self) -> Vec<i64> {
        self.coords
            .iter()
            .map(|c| c.to_i64().expect("coordinate fits in i64"))
            .collect()
    }

    /// Value on the torsion generator of `H₁`, the last coordinate.
    pub fn torsion_coord(&self) -> Option<&CycElem> {
        self.coords.last()
    }

    pub fn mod2(&self) -> Vec<u8> {
        self.coords
            .iter()
            .map(|c| u8::from(!c.mod2().is_zero()))
            .collect()
    }

    /// Coordinatewise reduction `Z_∞ → Z_q`.
    pub fn reduce(&self, q: Modulus) -> Result<IndexClass> {
        if self.q != Modulus::Infinite {
            return Err(Error::InvalidArgument(
                "only Z-valued classes can be reduced".into(),
            ));
        }
        Ok(IndexClass {
            q,
            coords: self
                .coords
                .iter()
                .map(|c| CycElem::new(c.value().clone(), q))
                .collect(),
        })
    }
}

impl fmt::Display for IndexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct IndexWire {
    q: Modulus,
    coords: Vec<crate::cyclic::WireInt>,
}

impl Serialize for IndexClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IndexWire {
            q: self.q,
            coords: self
                .coords
                .iter()
                .map(|c| crate::cyclic::WireInt::from_bigint(c.value()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IndexClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = IndexWire::deserialize(d)?;
        let coords = w
            .coords
            .into_iter()
            .map(|v| v.into_bigint().map(|b| CycElem::new(b, w.q)))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(IndexClass { q: w.q, coords })
    }
}

/// The set allowed for one coordinate of `I_q(Σ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Constraint {
    /// `2Z_q`
    Even,
    /// `Z_q ∖ 2Z_q`
    Odd,
    /// `(Z_q)_ord2 ∩ 2Z_q`
    Ord2Even,
    /// `(Z_q)_ord2 ∖ 2Z_q`
    Ord2Odd,
    /// `{0}`; only produced as the image of a reduction map.
    Zero,
}

impl Constraint {
    pub fn contains(self, x: &CycElem) -> bool {
        match self {
            Constraint::Even => x.in_even_subgroup(),
            Constraint::Odd => !x.in_even_subgroup(),
            Constraint::Ord2Even => x.in_ord2_subgroup() && x.in_even_subgroup(),
            Constraint::Ord2Odd => x.in_ord2_subgroup() && !x.in_even_subgroup(),
            Constraint::Zero => x.is_zero(),
        }
    }

    /// Members in increasing order, for finite `q`.
    pub fn members(self, q: Modulus) -> Result<Vec<CycElem>> {
        match (self, q) {
            (Constraint::Zero, _) => Ok(vec![CycElem::zero(q)]),
            (Constraint::Ord2Even | Constraint::Ord2Odd, _) => Ok(q
                .ord2_subgroup()
                .into_iter()
                .filter(|x| self.contains(x))
                .collect()),
            (_, Modulus::Infinite) => Err(Error::Infinite(format!("{self:?} subset of Z"))),
            (_, Modulus::Finite(_)) => Ok(q
                .elements()?
                .into_iter()
                .filter(|x| self.contains(x))
                .collect()),
        }
    }

    /// `None` means infinitely many.
    pub fn cardinality(self, q: Modulus) -> Option<u128> {
        match (self, q) {
            (Constraint::Even | Constraint::Odd, Modulus::Infinite) => None,
            (Constraint::Even | Constraint::Odd, Modulus::Finite(q)) => Some(q as u128 / 2),
            _ => Some(self.members(q).expect("finite constraint").len() as u128),
        }
    }

    /// Parity forced on members by this constraint.
    pub fn parity(self) -> u8 {
        match self {
            Constraint::Odd | Constraint::Ord2Odd => 1,
            Constraint::Even | Constraint::Ord2Even | Constraint::Zero => 0,
        }
    }
}

/// `I_q(Σ)` (or a subset of it) as a product of per-coordinate constraints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IqDescriptor {
    pub q: Modulus,
    pub factors: Vec<Constraint>,
    pub empty: bool,
}

impl IqDescriptor {
    pub fn new(q: Modulus, factors: Vec<Constraint>) -> Self {
        let empty = factors.iter().any(|c| c.cardinality(q) == Some(0));
        IqDescriptor { q, factors, empty }
    }

    pub fn contains(&self, x: &IndexClass) -> bool {
        x.modulus() == self.q
            && x.coords().len() == self.factors.len()
            && self
                .factors
                .iter()
                .zip(x.coords())
                .all(|(c, v)| c.contains(v))
    }

    /// `None` when infinite.
    pub fn cardinality(&self) -> Option<u128> {
        if self.empty {
            return Some(0);
        }
        self.factors
            .iter()
            .try_fold(1u128, |acc, c| c.cardinality(self.q).map(|n| acc * n))
    }

    /// All members in lexicographic order.
    pub fn enumerate(&self) -> Result<Vec<IndexClass>> {
        if !self.q.is_finite() && !self.empty {
            return Err(Error::Infinite("I_q with q = inf".into()));
        }
        if self.empty {
            return Ok(Vec::new());
        }
        let choices = self
            .factors
            .iter()
            .map(|c| c.members(self.q))
            .collect::<Result<Vec<_>>>()?;
        let mut out = vec![Vec::new()];
        for options in &choices {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<CycElem>| {
                    options.iter().map(move |o| {
                        let mut p = prefix.clone();
                        p.push(o.clone());
                        p
                    })
                })
                .collect();
        }
        Ok(out
            .into_iter()
            .map(|coords| IndexClass { q: self.q, coords })
            .collect())
    }

    /// Concatenation `self × other`.
    pub fn product(&self, other: &IqDescriptor) -> Result<IqDescriptor> {
        if self.q != other.q {
            return Err(Error::ModulusMismatch(
                self.q.to_string(),
                other.q.to_string(),
            ));
        }
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Ok(IqDescriptor::new(self.q, factors))
    }

    pub fn is_subset_of(&self, other: &IqDescriptor) -> bool {
        if self.empty {
            return true;
        }
        if other.empty {
            return false;
        }
        self.q == other.q
            && self.factors.len() == other.factors.len()
            && self.factors.iter().zip(&other.factors).all(|(a, b)| {
                a == b
                    || match (a.members(self.q), b.members(self.q)) {
                        (Ok(xs), _) => xs.iter().all(|x| b.contains(x)),
                        (Err(_), _) => false,
                    }
            })
    }

    /// Equality of the described sets (two empty sets are equal).
    pub fn same_set(&self, other: &IqDescriptor) -> bool {
        (self.empty && other.empty) || (self.is_subset_of(other) && other.is_subset_of(self))
    }
}

/// `I_q(Σ)` in product form.
pub fn iq_set(surface: &Surface, q: Modulus) -> IqDescriptor {
    let g = surface.genus as usize;
    let factors = if surface.orientable {
        vec![Constraint::Even; 2 * g]
    } else if g.is_multiple_of(2) {
        let mut f = vec![Constraint::Even; g - 2];
        f.push(Constraint::Odd);
        f.push(Constraint::Ord2Even);
        f
    } else {
        let mut f = vec![Constraint::Even; g - 1];
        f.push(Constraint::Ord2Odd);
        f
    };
    IqDescriptor::new(q, factors)
}

pub fn iq_enumerate(surface: &Surface, q: Modulus) -> Result<Vec<IndexClass>> {
    if !q.is_finite() {
        return Err(Error::Infinite(format!("I_inf({surface})")));
    }
    iq_set(surface, q).enumerate()
}

/// `I_q(Σ # Σ′) = I_q(Σ′) × I_q(Σ)` for orientable `Σ′`, with the factors of
/// `Σ′` (all free) placed ahead of those of `Σ` so the torsion coordinate
/// stays last.
pub fn connected_sum_iq(first: &Surface, second: &Surface, q: Modulus) -> Result<IqDescriptor> {
    if !second.orientable {
        return Err(Error::InvalidSurface(
            "second summand must be orientable".into(),
        ));
    }
    iq_set(second, q).product(&iq_set(first, q))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionImage {
    pub surjective: bool,
    pub image: IqDescriptor,
}

/// Image of the coordinatewise reduction `I_∞(Σ) → I_q(Σ)`.
pub fn modq_reduction_image(surface: &Surface, q: Modulus) -> Result<ReductionImage> {
    if !q.is_finite() {
        return Err(Error::InvalidArgument(
            "reduction target must be a finite modulus".into(),
        ));
    }
    let source = iq_set(surface, Modulus::Infinite);
    let target = iq_set(surface, q);
    // Z → Z_q and Z∖2Z → Z_q∖2Z_q are onto; the torsion factors of I_∞ are
    // Z_ord2 ∩ 2Z = {0} and Z_ord2 ∖ 2Z = ∅.
    let image_factors: Vec<Constraint> = source
        .factors
        .iter()
        .map(|c| match c {
            Constraint::Ord2Even => Constraint::Zero,
            other => *other,
        })
        .collect();
    let mut image = IqDescriptor::new(q, image_factors);
    image.empty = source.empty;
    let surjective = image.same_set(&target);
    Ok(ReductionImage { surjective, image })
}

/// Closed-form surjectivity criterion: orientable, or `χ − q/2` odd.
pub fn reduction_surjective_closed_form(surface: &Surface, q: u64) -> bool {
    surface.orientable || (surface.euler_char() - (q / 2) as i64).rem_euclid(2) == 1
}
