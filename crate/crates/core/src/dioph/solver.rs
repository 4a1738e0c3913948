use std::collections::BTreeMap;

use super::{dsr, DiophInstance};

/// Finds every tuple `q₁ ≥ … ≥ q_m` with `Σq = 3d` and `Σq² = d² + χ` for one `d`.
pub trait DiophSolver: Send + Sync {
    fn name(&self) -> &'static str;

    /// Solutions for a single `d`, each sorted descending, in decreasing
    /// lexicographic order.
    fn solve_d(&self, inst: &DiophInstance, d: i64) -> Vec<Vec<i64>>;
}

/// Shifted partition search.
///
/// Writes `q = p + s·1` with `d = 3s + r`, so that `|p|² = (m−9)s² + r² + χ`
/// stays small, and walks descending `p` under sum, sum-of-squares, parity
/// and Cauchy–Schwarz bounds.
pub struct Pruned;

/// Every non-increasing tuple in the box `|q_j| ≤ |d| + |χ| + 1`.
pub struct BoxSearch;

pub fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as i64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

fn feasible(k: i64, sum: i64, sq: i64, upper: i64) -> bool {
    if k == 0 {
        return sum == 0 && sq == 0;
    }
    sq >= 0
        && (sum - sq).rem_euclid(2) == 0
        && sum * sum <= k * sq
        && sum <= k * upper
        && sum >= -k * isqrt(sq)
}

fn descend(k: i64, sum: i64, sq: i64, upper: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if !feasible(k, sum, sq, upper) {
        return;
    }
    if k == 0 {
        out.push(prefix.clone());
        return;
    }
    let hi = upper.min(isqrt(sq));
    // the largest entry is at least the average
    let lo = sum.div_euclid(k) + i64::from(sum.rem_euclid(k) != 0);
    let mut v = hi;
    while v >= lo {
        prefix.push(v);
        descend(k - 1, sum - v, sq - v * v, v, prefix, out);
        prefix.pop();
        v -= 1;
    }
}

impl DiophSolver for Pruned {
    fn name(&self) -> &'static str {
        "pruned"
    }

    fn solve_d(&self, inst: &DiophInstance, d: i64) -> Vec<Vec<i64>> {
        let m = i64::from(inst.m);
        if m <= 9 && (9 - m) * d * d > m * inst.chi {
            return Vec::new();
        }
        let (s, r) = dsr(d);
        let ell = (m - 9) * s * s + r * r + inst.chi;
        if ell < 0 {
            return Vec::new();
        }
        let mut ps = Vec::new();
        descend(
            m,
            3 * d - m * s,
            ell,
            isqrt(ell),
            &mut Vec::with_capacity(m as usize),
            &mut ps,
        );
        ps.into_iter()
            .map(|p| p.into_iter().map(|x| x + s).collect())
            .collect()
    }
}

impl DiophSolver for BoxSearch {
    fn name(&self) -> &'static str {
        "box"
    }

    fn solve_d(&self, inst: &DiophInstance, d: i64) -> Vec<Vec<i64>> {
        let bound = d.abs() + inst.chi.abs() + 1;
        let m = inst.m as usize;
        let mut out = Vec::new();
        let mut q = vec![bound; m];
        loop {
            if q.iter().sum::<i64>() == 3 * d
                && q.iter().map(|x| x * x).sum::<i64>() == d * d + inst.chi
            {
                out.push(q.clone());
            }
            // next non-increasing tuple in decreasing lexicographic order
            let Some(i) = (0..m).rev().find(|&i| q[i] > -bound) else {
                break;
            };
            q[i] -= 1;
            for j in i + 1..m {
                q[j] = q[i];
            }
        }
        out
    }
}

/// Solvers by name.
pub fn solvers() -> BTreeMap<&'static str, Box<dyn DiophSolver>> {
    let all: Vec<Box<dyn DiophSolver>> = vec![Box::new(Pruned), Box::new(BoxSearch)];
    all.into_iter().map(|s| (s.name(), s)).collect()
}

pub fn solver(name: &str) -> Option<Box<dyn DiophSolver>> {
    solvers().remove(name)
}
