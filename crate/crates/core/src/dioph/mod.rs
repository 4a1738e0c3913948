//! The degree system of an embedded totally real sphere or torus in `CP²#m(-CP²)`:
//!
//! ```text
//! q₁ + … + q_m = 3d,     q₁² + … + q_m² = d² + χ.
//! ```
//!
//! The first equation says the class `(d; q)` lies in `Ker c₁`, the second
//! that its self-intersection is `−χ`.

pub mod solver;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use solver::{solver, solvers, BoxSearch, DiophSolver, Pruned};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiophInstance {
    pub m: u32,
    pub chi: i64,
}

impl DiophInstance {
    pub fn new(m: u32, chi: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("m must be at least 1".into()));
        }
        Ok(DiophInstance { m, chi })
    }
}

/// `d = 3s + r` with `r ∈ {−1, 0, 1}`.
pub fn dsr(d: i64) -> (i64, i64) {
    let s = (d + 1).div_euclid(3);
    (s, d - 3 * s)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiophSolution {
    pub d: i64,
    pub q: Vec<i64>,
}

impl DiophSolution {
    pub fn new(d: i64, q: Vec<i64>) -> Self {
        DiophSolution { d, q }
    }

    pub fn s(&self) -> i64 {
        dsr(self.d).0
    }

    pub fn r(&self) -> i64 {
        dsr(self.d).1
    }

    /// `|q − s·1|²`.
    pub fn ell(&self) -> i64 {
        let s = self.s();
        self.q.iter().map(|x| (x - s) * (x - s)).sum()
    }

    pub fn m(&self) -> usize {
        self.q.len()
    }

    /// Sorted descending, `d` kept.
    pub fn sorted(&self) -> DiophSolution {
        let mut q = self.q.clone();
        q.sort_unstable_by(|a, b| b.cmp(a));
        DiophSolution { d: self.d, q }
    }

    pub fn negated(&self) -> DiophSolution {
        DiophSolution {
            d: -self.d,
            q: self.q.iter().map(|x| -x).collect(),
        }
    }

    fn key(&self) -> (i64, &[i64]) {
        (self.d, &self.q)
    }
}

impl fmt::Display for DiophSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q: Vec<String> = self.q.iter().map(ToString::to_string).collect();
        write!(f, "({}; {})", self.d, q.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct SolutionWire {
    d: i64,
    q: Vec<i64>,
    #[serde(default, skip_deserializing)]
    s: i64,
    #[serde(default, skip_deserializing)]
    r: i64,
    #[serde(default, skip_deserializing)]
    ell: i64,
}

impl Serialize for DiophSolution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SolutionWire {
            d: self.d,
            q: self.q.clone(),
            s: self.s(),
            r: self.r(),
            ell: self.ell(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DiophSolution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = SolutionWire::deserialize(d)?;
        Ok(DiophSolution { d: w.d, q: w.q })
    }
}

pub fn is_solution(inst: &DiophInstance, sol: &DiophSolution) -> bool {
    sol.q.len() == inst.m as usize
        && sol.q.iter().sum::<i64>() == 3 * sol.d
        && sol.q.iter().map(|x| x * x).sum::<i64>() == sol.d * sol.d + inst.chi
}

/// Sort descending, then pick the larger of the tuple and its negation.
pub fn canonicalize(sol: &DiophSolution) -> DiophSolution {
    let a = sol.sorted();
    let b = sol.negated().sorted();
    if a.key() >= b.key() {
        a
    } else {
        b
    }
}

/// Largest orbit [`trivial_modifications`] will list.
pub const ORBIT_LIMIT: u128 = 1_000_000;

fn multinomial(counts: &[usize]) -> u128 {
    let mut total = 0u128;
    let mut acc = 1u128;
    for &c in counts {
        for i in 1..=c as u128 {
            total += 1;
            acc = acc.saturating_mul(total) / i;
        }
    }
    acc
}

fn next_permutation(v: &mut [i64]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All tuples of length `target_m` obtained by permuting, flipping the global
/// sign, and inserting or deleting zeros. Sorted, without repeats.
pub fn trivial_modifications(sol: &DiophSolution, target_m: usize) -> Result<Vec<DiophSolution>> {
    let nonzero: Vec<i64> = sol.q.iter().copied().filter(|&x| x != 0).collect();
    if nonzero.len() > target_m {
        return Err(Error::InvalidArgument(format!(
            "{} nonzero entries do not fit in length {target_m}",
            nonzero.len()
        )));
    }
    let mut base = nonzero;
    base.resize(target_m, 0);
    let mut counts = std::collections::BTreeMap::new();
    for x in &base {
        *counts.entry(*x).or_insert(0usize) += 1;
    }
    let size = multinomial(&counts.values().copied().collect::<Vec<_>>());
    if size > ORBIT_LIMIT {
        return Err(Error::TooLarge(2 * size, 2 * ORBIT_LIMIT));
    }
    let mut out = Vec::new();
    for seed in [
        DiophSolution::new(sol.d, base.clone()),
        DiophSolution::new(sol.d, base).negated(),
    ] {
        let mut q = seed.q;
        q.sort_unstable();
        loop {
            out.push(DiophSolution::new(seed.d, q.clone()));
            if !next_permutation(&mut q) {
                break;
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Every solution with `d_min ≤ d ≤ d_max`, each sorted descending, ordered by `d`.
pub fn solve_all(inst: &DiophInstance, d_min: i64, d_max: i64) -> Result<Vec<DiophSolution>> {
    solve_all_with(&Pruned, inst, d_min, d_max)
}

pub fn solve_all_with(
    solver: &dyn DiophSolver,
    inst: &DiophInstance,
    d_min: i64,
    d_max: i64,
) -> Result<Vec<DiophSolution>> {
    if d_min > d_max {
        return Err(Error::InvalidArgument(format!(
            "empty range [{d_min}, {d_max}]"
        )));
    }
    if inst.m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let mut out = Vec::new();
    for d in d_min..=d_max {
        let mut qs = solver.solve_d(inst, d);
        qs.sort_unstable_by(|a, b| b.cmp(a));
        out.extend(qs.into_iter().map(|q| DiophSolution::new(d, q)));
    }
    Ok(out)
}

/// The unique sorted solution for `m = 9`, `χ = 2`.
pub fn nine_blowup_sphere_solution(d: i64) -> DiophSolution {
    let (s, r) = dsr(d);
    let q = match r {
        0 => [vec![s + 1], vec![s; 7], vec![s - 1]].concat(),
        1 => [vec![s + 1; 3], vec![s; 6]].concat(),
        _ => [vec![s; 6], vec![s - 1; 3]].concat(),
    };
    DiophSolution::new(d, q)
}

/// Explicit solution families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// `(0; 0, …, 0)` with `χ = 0`.
    Zero { m: u32 },
    /// `(d; 1, …, 1)` with `m = 3d`, `χ = (3 − d)d`.
    Ones { d: i64 },
    /// `(d; d − 1, 1, …, 1)` with `m = 2d + 2`, `χ = 2`.
    Conic { d: i64 },
    /// `(3c + 1 + 2ε; c, c, c, c + ε (six times), 3)` with `m = 10`, `χ = 8 − 2ε − 6c`.
    TenA { c: i64, eps: u8 },
    /// `(3c + 4; c + 2, c, c + 1 (seven times), 3)` with `m = 10`, `χ = 4 − 6c`.
    TenB { c: i64 },
}

pub fn family_solution(family: Family) -> Result<(DiophInstance, DiophSolution)> {
    let bad = |what: &str| {
        Err(Error::InvalidArgument(format!(
            "{what} out of range for {family:?}"
        )))
    };
    match family {
        Family::Zero { m } => {
            if m == 0 {
                return bad("m");
            }
            Ok((
                DiophInstance { m, chi: 0 },
                DiophSolution::new(0, vec![0; m as usize]),
            ))
        }
        Family::Ones { d } => {
            if d < 1 {
                return bad("d");
            }
            Ok((
                DiophInstance {
                    m: 3 * d as u32,
                    chi: (3 - d) * d,
                },
                DiophSolution::new(d, vec![1; 3 * d as usize]),
            ))
        }
        Family::Conic { d } => {
            if d < 0 {
                return bad("d");
            }
            let q = [vec![d - 1], vec![1; 2 * d as usize + 1]].concat();
            Ok((
                DiophInstance {
                    m: 2 * d as u32 + 2,
                    chi: 2,
                },
                DiophSolution::new(d, q),
            ))
        }
        Family::TenA { c, eps } => {
            if c < 2 || eps > 1 {
                return bad("c or eps");
            }
            let e = i64::from(eps);
            let q = [vec![c; 3], vec![c + e; 6], vec![3]].concat();
            Ok((
                DiophInstance {
                    m: 10,
                    chi: 8 - 2 * e - 6 * c,
                },
                DiophSolution::new(3 * c + 1 + 2 * e, q),
            ))
        }
        Family::TenB { c } => {
            if c < 1 {
                return bad("c");
            }
            let q = [vec![c + 2, c], vec![c + 1; 7], vec![3]].concat();
            Ok((
                DiophInstance {
                    m: 10,
                    chi: 4 - 6 * c,
                },
                DiophSolution::new(3 * c + 4, q),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sol(d: i64, q: &[i64]) -> DiophSolution {
        DiophSolution::new(d, q.to_vec())
    }

    #[test]
    fn solution_checks() {
        assert!(is_solution(
            &DiophInstance { m: 3, chi: 2 },
            &sol(1, &[1, 1, 1])
        ));
        assert!(is_solution(
            &DiophInstance { m: 9, chi: 0 },
            &sol(3, &[1; 9])
        ));
        assert!(!is_solution(
            &DiophInstance { m: 2, chi: 2 },
            &sol(0, &[1, 1])
        ));
        assert!(!is_solution(
            &DiophInstance { m: 4, chi: 2 },
            &sol(1, &[1, 1, 1])
        ));
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(canonicalize(&sol(0, &[-1, 1])), sol(0, &[1, -1]));
        assert_eq!(canonicalize(&sol(-1, &[-1, -1, -1])), sol(1, &[1, 1, 1]));
        let c = canonicalize(&sol(-2, &[0, -1, 3, -4]));
        assert_eq!(canonicalize(&c), c);
    }

    #[test]
    fn residue_split() {
        assert_eq!(dsr(7), (2, 1));
        assert_eq!(dsr(5), (2, -1));
        assert_eq!(dsr(-1), (0, -1));
        assert_eq!(dsr(-2), (-1, 1));
        assert_eq!(dsr(0), (0, 0));
    }

    #[test]
    fn orbits() {
        let o = trivial_modifications(&sol(0, &[1, -1]), 3).unwrap();
        assert!(o.contains(&sol(0, &[1, -1, 0])));
        assert!(o.contains(&sol(0, &[-1, 1, 0])));
        assert!(o.contains(&sol(0, &[0, -1, 1])));
        assert_eq!(o.len(), 6);
        let inst = DiophInstance { m: 3, chi: 2 };
        assert!(o.iter().all(|s| is_solution(&inst, s)));

        let o = trivial_modifications(&sol(1, &[1, 1, 1]), 3).unwrap();
        assert_eq!(o, vec![sol(-1, &[-1, -1, -1]), sol(1, &[1, 1, 1])]);
        assert!(trivial_modifications(&sol(1, &[1, 1, 1]), 2).is_err());
        assert_eq!(
            trivial_modifications(&sol(1, &[1, 1, 1, 0, 0]), 3)
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn closed_form_at_nine() {
        assert_eq!(
            nine_blowup_sphere_solution(0),
            sol(0, &[1, 0, 0, 0, 0, 0, 0, 0, -1])
        );
        assert_eq!(
            nine_blowup_sphere_solution(1),
            sol(1, &[1, 1, 1, 0, 0, 0, 0, 0, 0])
        );
        assert_eq!(
            nine_blowup_sphere_solution(-1),
            sol(-1, &[0, 0, 0, 0, 0, 0, -1, -1, -1])
        );
        assert_eq!(
            nine_blowup_sphere_solution(7),
            sol(7, &[3, 3, 3, 2, 2, 2, 2, 2, 2])
        );
    }

    #[test]
    fn solver_examples() {
        let nine = DiophInstance { m: 9, chi: 2 };
        assert_eq!(
            solve_all(&nine, 7, 7).unwrap(),
            vec![nine_blowup_sphere_solution(7)]
        );
        for chi in [-2, -4, -6] {
            assert!(solve_all(&DiophInstance { m: 9, chi }, -20, 20)
                .unwrap()
                .is_empty());
        }
        let ten = DiophInstance { m: 10, chi: -2 };
        let found = solve_all(&ten, 7, 7).unwrap();
        assert!(found.contains(&sol(7, &[3, 3, 2, 2, 2, 2, 2, 2, 2, 1])));
        assert!(solve_all(&nine, 2, 1).is_err());
    }

    #[test]
    fn families() {
        let (inst, s) = family_solution(Family::Conic { d: 3 }).unwrap();
        assert_eq!(
            (inst, s.clone()),
            (
                DiophInstance { m: 8, chi: 2 },
                sol(3, &[2, 1, 1, 1, 1, 1, 1, 1])
            )
        );
        let (inst, s2) = family_solution(Family::Ones { d: 2 }).unwrap();
        assert_eq!(
            (inst, s2),
            (DiophInstance { m: 6, chi: 2 }, sol(2, &[1; 6]))
        );
        let (inst, s3) = family_solution(Family::Zero { m: 5 }).unwrap();
        assert_eq!(
            (inst, s3),
            (DiophInstance { m: 5, chi: 0 }, sol(0, &[0; 5]))
        );
        for f in [
            Family::TenA { c: 2, eps: 0 },
            Family::TenA { c: 5, eps: 1 },
            Family::TenB { c: 1 },
            Family::TenB { c: 4 },
        ] {
            let (inst, s) = family_solution(f).unwrap();
            assert!(is_solution(&inst, &s), "{f:?}");
        }
        assert!(family_solution(Family::TenA { c: 1, eps: 0 }).is_err());
        assert!(family_solution(Family::Ones { d: 0 }).is_err());
        assert!(family_solution(Family::Conic { d: -1 }).is_err());
    }

    #[test]
    fn json_fields() {
        let text = serde_json::to_string(&nine_blowup_sphere_solution(7)).unwrap();
        assert_eq!(
            text,
            r#"{"d":7,"q":[3,3,3,2,2,2,2,2,2],"s":2,"r":1,"ell":3}"#
        );
    }
}
