//! Existence of totally real immersions and embeddings, the realizable
//! index-degree set `Z(Σ, M)`, and mod-2 degree bookkeeping for blow-ups.

mod table;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use table::{table1, table2, Table1, Table1Row, Table2, Table2Row};

use crate::cyclic::Modulus;
use crate::error::{Error, Result};
use crate::surface::{iq_set, IndexClass, IqDescriptor, Surface};
use crate::target::{self, d_set, DegreeClass, DegreeSet, Ring, Target};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "YES",
            Decision::No => "NO",
            Decision::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Existence {
    pub value: Decision,
    pub reason: String,
}

impl Existence {
    fn new(value: Decision, reason: impl Into<String>) -> Self {
        Existence {
            value,
            reason: reason.into(),
        }
    }

    fn yes(reason: impl Into<String>) -> Self {
        Self::new(Decision::Yes, reason)
    }

    fn no(reason: impl Into<String>) -> Self {
        Self::new(Decision::No, reason)
    }

    fn unknown(reason: impl Into<String>) -> Self {
        Self::new(Decision::Unknown, reason)
    }

    pub fn is_yes(&self) -> bool {
        self.value == Decision::Yes
    }
}

pub fn immersion_exists(s: &Surface, t: &Target) -> Existence {
    if !t.is_spin() {
        return Existence::yes("every closed surface immerses totally really in a non-spin target");
    }
    if s.euler_char() % 2 == 0 {
        Existence::yes("spin target and even Euler characteristic")
    } else {
        Existence::no("spin target: totally real immersions need even Euler characteristic")
    }
}

pub fn embedding_exists(s: &Surface, t: &Target) -> Existence {
    let chi = s.euler_char();
    let chi4 = chi.rem_euclid(4);
    if *s == Surface::TORUS {
        return Existence::yes("the torus embeds totally really in every target");
    }
    if s.orientable {
        let sphere = s.genus == 0;
        return match t {
            Target::C2 | Target::CP2 | Target::Blowup(1) if sphere => {
                Existence::no("no degree class of a sphere satisfies d.d = -2 inside Ker c1")
            }
            Target::CP1xCP1 | Target::Blowup(_) if sphere => Existence::yes(
                "the sphere has a degree class with d.d = -2 inside Ker c1 and embeds",
            ),
            Target::Blowup(m) if *m >= 10 => Existence::unknown(
                "orientable genus >= 2 in a blow-up of at least ten points is not decided",
            ),
            _ => Existence::no("negative Euler characteristic: the degree system has no solution"),
        };
    }
    match t {
        Target::C2 if chi4 == 0 => {
            Existence::yes("nonorientable with Euler characteristic divisible by 4")
        }
        Target::C2 => Existence::no("Pontryagin square vanishes, so chi must be 0 mod 4"),
        Target::CP2 if chi4 <= 1 => Existence::yes("nonorientable with chi = 0 or 1 mod 4"),
        Target::CP2 => Existence::no("the squares of mod 2 classes in CP2 are 0 and 1 mod 4"),
        Target::Blowup(1) if chi4 != 2 => {
            Existence::yes("nonorientable with chi odd or divisible by 4")
        }
        Target::Blowup(1) => Existence::no("no mod 2 class in CP2#1 has square 2 mod 4"),
        Target::CP1xCP1 if chi % 2 == 0 => {
            Existence::yes("nonorientable with even Euler characteristic")
        }
        Target::CP1xCP1 => Existence::no("spin target: odd Euler characteristic is excluded"),
        Target::Blowup(_) => {
            Existence::yes("every nonorientable surface embeds once two points are blown up")
        }
    }
}

/// An element of `I_q(Σ) × D^ε_±(M)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexDegreePair {
    pub index: IndexClass,
    pub degree: DegreeClass,
}

impl IndexDegreePair {
    pub fn new(index: IndexClass, degree: DegreeClass) -> Self {
        IndexDegreePair { index, degree }
    }
}

/// Largest `Z(Σ, M)` that is listed pair by pair.
pub const ENUMERATION_LIMIT: u128 = 1 << 16;

/// `Z(Σ, M)` as a product set, possibly cut in half by the torsion/kernel coupling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZSet {
    pub surface: Surface,
    pub target: Target,
    pub iq: IqDescriptor,
    pub degrees: DegreeSet,
    /// Whether a zero torsion index is tied to a degree in the mod 2 image of `Ker c₁`.
    pub coupled: bool,
    pairs: Option<Vec<IndexDegreePair>>,
}

impl ZSet {
    pub fn contains(&self, pair: &IndexDegreePair) -> bool {
        let in_d =
            target::d_set_contains(&self.target, &self.surface, &pair.degree).unwrap_or(false);
        if !(in_d && self.iq.contains(&pair.index)) {
            return false;
        }
        !self.coupled || self.coupling_holds(pair)
    }

    fn coupling_holds(&self, pair: &IndexDegreePair) -> bool {
        let torsion_zero = pair.index.torsion_coord().is_none_or(|c| c.is_zero());
        let in_kernel = target::ker_c1_mod2(&self.target, &pair.degree).unwrap_or(false);
        torsion_zero == in_kernel
    }

    /// Pairs in order, when the set is finite and small enough.
    pub fn pairs(&self) -> Option<&[IndexDegreePair]> {
        self.pairs.as_deref()
    }

    pub fn is_finite(&self) -> bool {
        self.is_empty() || (self.iq.cardinality().is_some() && self.degrees.cardinality().is_some())
    }

    pub fn is_empty(&self) -> bool {
        self.iq.empty || self.degrees.is_empty() || self.pairs.as_ref().is_some_and(Vec::is_empty)
    }

    /// `None` when infinite.
    pub fn cardinality(&self) -> Option<u128> {
        if self.is_empty() {
            return Some(0);
        }
        let full = self.iq.cardinality()? * self.degrees.cardinality()?;
        if let Some(p) = &self.pairs {
            return Some(p.len() as u128);
        }
        Some(if self.coupled { full / 2 } else { full })
    }

    /// All pairs, or an error for infinite or oversized sets.
    pub fn enumerate(&self) -> Result<Vec<IndexDegreePair>> {
        if let Some(p) = &self.pairs {
            return Ok(p.clone());
        }
        match self.cardinality() {
            None => Err(Error::Infinite(format!(
                "Z({}, {})",
                self.surface, self.target
            ))),
            Some(n) => Err(Error::TooLarge(n, ENUMERATION_LIMIT)),
        }
    }
}

fn coupled_case(s: &Surface, q: Modulus) -> bool {
    !s.orientable && s.euler_char() % 2 == 0 && q.value().is_some_and(|q| q % 4 == 0)
}

/// The product description only, without listing pairs.
fn z_descriptor(s: &Surface, t: &Target) -> ZSet {
    let iq = iq_set(s, t.q());
    let degrees = d_set(t, s);
    let coupled = coupled_case(s, t.q());
    ZSet {
        surface: *s,
        target: *t,
        iq,
        degrees,
        coupled,
        pairs: None,
    }
}

pub fn z_set(s: &Surface, t: &Target) -> ZSet {
    let mut z = z_descriptor(s, t);
    if z.iq.empty || z.degrees.is_empty() {
        z.pairs = Some(Vec::new());
        return z;
    }
    let small = matches!(
        (z.iq.cardinality(), z.degrees.cardinality()),
        (Some(a), Some(b)) if a * b <= ENUMERATION_LIMIT
    );
    if small {
        let indices = z.iq.enumerate().expect("finite index set");
        let degrees = z
            .degrees
            .finite_members()
            .expect("finite degree set")
            .to_vec();
        let pairs = indices
            .iter()
            .flat_map(|i| {
                degrees
                    .iter()
                    .map(move |d| IndexDegreePair::new(i.clone(), d.clone()))
            })
            .filter(|p| !z.coupled || z.coupling_holds(p))
            .collect();
        z.pairs = Some(pairs);
    }
    z
}

fn check_in_z(s: &Surface, t: &Target, pair: &IndexDegreePair) -> Result<()> {
    if pair.degree.ring != Ring::for_surface(s) || pair.degree.check(t).is_err() {
        return Err(Error::NotInZ(format!(
            "degree {} has the wrong shape for {s} in {t}",
            pair.degree
        )));
    }
    if !z_descriptor(s, t).contains(pair) {
        return Err(Error::NotInZ(format!(
            "({}, {}) for {s} in {t}",
            pair.index, pair.degree
        )));
    }
    Ok(())
}

/// The extra constraint on degrees of embeddings: `d·d = −χ` for orientable
/// surfaces, `d² = χ mod 4` (Pontryagin square) otherwise.
pub fn embedding_admissible(s: &Surface, t: &Target, pair: &IndexDegreePair) -> Result<bool> {
    check_in_z(s, t, pair)?;
    degree_admissible(s, t, &pair.degree)
}

/// The degree half of [`embedding_admissible`], without the membership check.
pub fn degree_admissible(s: &Surface, t: &Target, d: &DegreeClass) -> Result<bool> {
    let chi = s.euler_char();
    if s.orientable {
        Ok(target::intersection(t, d, d)? == -chi)
    } else {
        Ok(i64::from(target::pontryagin_square(t, d)?) == chi.rem_euclid(4))
    }
}

pub fn realized_by_embedding(s: &Surface, t: &Target, pair: &IndexDegreePair) -> Result<Existence> {
    if !embedding_admissible(s, t, pair)? {
        return Ok(Existence::no(
            "the degree violates the embedding constraint",
        ));
    }
    let decided = "every admissible pair is realized by an embedding";
    Ok(match t {
        Target::C2 | Target::CP2 | Target::CP1xCP1 => Existence::yes(decided),
        Target::Blowup(m) if *m <= 8 => Existence::yes(decided),
        Target::Blowup(m) if !s.orientable && *m <= 11 => Existence::yes(decided),
        Target::Blowup(9) if *s == Surface::TORUS => {
            Existence::yes("degrees (3s; s,...,s) of tori in CP2#9 are all realized")
        }
        Target::Blowup(9) if *s == Surface::SPHERE => Existence::unknown(
            "spheres in CP2#9: the degree system is solved but realization is open",
        ),
        Target::Blowup(_) => Existence::unknown("outside the range where realization is decided"),
    })
}

/// `(d, s)`: the `CP²` component mod 2 and the number of odd exceptional components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TotalMod2Degree {
    pub d: u8,
    pub s: u32,
}

impl fmt::Display for TotalMod2Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.d, self.s)
    }
}

pub fn total_mod2_degree(t: &Target, d: &DegreeClass) -> Result<TotalMod2Degree> {
    if !matches!(t, Target::Blowup(_)) {
        return Err(Error::InvalidTarget(format!(
            "total mod 2 degree needs a blow-up, got {t}"
        )));
    }
    let mu = d.reduce_mod2();
    mu.check(t)?;
    let c = mu.components();
    Ok(TotalMod2Degree {
        d: c[0] as u8,
        s: c[1..].iter().sum::<i64>() as u32,
    })
}

/// `d − s − χ ≡ 0 mod 4`, for nonorientable surfaces and the sphere.
pub fn degree_congruence(s: &Surface, tmd: &TotalMod2Degree) -> Result<bool> {
    if s.orientable && s.genus > 0 {
        return Err(Error::InvalidSurface(format!(
            "{s}: constraint holds only for nonorientable surfaces and S2"
        )));
    }
    Ok((i64::from(tmd.d) - i64::from(tmd.s) - s.euler_char()).rem_euclid(4) == 0)
}

/// Blowing up a point on the surface: `(m, Σ, d, s) ↦ (m+1, Σ#RP², d, s+1)`.
pub fn blowup_step(m: u32, s: &Surface, tmd: &TotalMod2Degree) -> (u32, Surface, TotalMod2Degree) {
    (
        m + 1,
        s.add_crosscap(),
        TotalMod2Degree {
            d: tmd.d,
            s: tmd.s + 1,
        },
    )
}
