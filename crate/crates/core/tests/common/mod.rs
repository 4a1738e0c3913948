//! Independent reference computations used by the integration tests.
#![allow(dead_code)]

use totreal::surface::Surface;
use totreal::target::Target;

/// Every `q₁ ≥ … ≥ q_m` with `|q_j| ≤ |d| + |χ| + 1`, `Σq = 3d`, `Σq² = d² + χ`,
/// found by plain recursion with no pruning.
pub fn naive_dioph(m: usize, chi: i64, d: i64) -> Vec<Vec<i64>> {
    fn rec(
        m: usize,
        bound: i64,
        max: i64,
        cur: &mut Vec<i64>,
        d: i64,
        chi: i64,
        out: &mut Vec<Vec<i64>>,
    ) {
        if cur.len() == m {
            let sum: i64 = cur.iter().sum();
            let sq: i64 = cur.iter().map(|x| x * x).sum();
            if sum == 3 * d && sq == d * d + chi {
                out.push(cur.clone());
            }
            return;
        }
        for v in (-bound..=max).rev() {
            cur.push(v);
            rec(m, bound, v, cur, d, chi, out);
            cur.pop();
        }
    }
    let bound = d.abs() + chi.abs() + 1;
    let mut out = Vec::new();
    rec(m, bound, bound, &mut Vec::new(), d, chi, &mut out);
    out.sort();
    out
}

/// The closed-form solution for nine blow-ups and `χ = 2`, typed from the table
/// `(s+1, s⁷, s−1)`, `(s+1)³ s⁶`, `s⁶ (s−1)³` for `d = 3s, 3s+1, 3s−1`.
pub fn nine_point_sphere(d: i64) -> Vec<i64> {
    let s = (d as f64 / 3.0).round() as i64;
    let mut q = match d - 3 * s {
        0 => {
            let mut v = vec![s + 1];
            v.extend(std::iter::repeat_n(s, 7));
            v.push(s - 1);
            v
        }
        1 => {
            let mut v = vec![s + 1; 3];
            v.extend(std::iter::repeat_n(s, 6));
            v
        }
        -1 => {
            let mut v = vec![s; 6];
            v.extend(std::iter::repeat_n(s - 1, 3));
            v
        }
        _ => unreachable!(),
    };
    q.sort_by(|a, b| b.cmp(a));
    q
}

/// `w₁` on the generators `(a₁, b₁, …)`, `(c₁, …, c_{g−1}, torsion)`:
/// in the even-genus normal form `T²#…#K²` the Klein-bottle generator reversing
/// orientation is the last free one, in the odd-genus form `T²#…#RP²` it is
/// the torsion element.
pub fn w1(s: &Surface) -> Vec<i64> {
    if s.orientable {
        return vec![0; 2 * s.genus as usize];
    }
    let g = s.genus as usize;
    let mut w = vec![0; g];
    if g.is_multiple_of(2) {
        w[g - 2] = 1;
    } else {
        w[g - 1] = 1;
    }
    w
}

/// All homomorphisms `H₁(Σ) → Z_q` whose mod 2 reduction is `w₁`,
/// lexicographically sorted.
pub fn brute_iq(s: &Surface, q: i64) -> Vec<Vec<i64>> {
    let free = if s.orientable {
        2 * s.genus as usize
    } else {
        s.genus as usize - 1
    };
    let torsion: Vec<i64> = if s.orientable { vec![] } else { vec![0, q / 2] };
    let mut all: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..free {
        all = all
            .into_iter()
            .flat_map(|p| (0..q).map(move |v| [p.clone(), vec![v]].concat()))
            .collect();
    }
    if !s.orientable {
        all = all
            .into_iter()
            .flat_map(|p| torsion.iter().map(move |&v| [p.clone(), vec![v]].concat()))
            .collect();
    }
    let w = w1(s);
    let mut out: Vec<Vec<i64>> = all
        .into_iter()
        .filter(|v| v.iter().zip(&w).all(|(x, y)| x.rem_euclid(2) == *y))
        .collect();
    out.sort();
    out
}

/// Totally real immersion exists.
pub fn immerses(s: &Surface, t: &Target) -> bool {
    match t {
        Target::C2 | Target::CP1xCP1 => s.euler_char() % 2 == 0,
        _ => true,
    }
}

/// Totally real embedding exists, for blow-ups of at most nine points.
pub fn embeds(s: &Surface, t: &Target) -> bool {
    let chi = s.euler_char();
    let chi4 = chi.rem_euclid(4);
    if s.orientable {
        return match s.genus {
            1 => true,
            0 => matches!(t, Target::CP1xCP1) || matches!(t, Target::Blowup(m) if *m >= 2),
            _ => false,
        };
    }
    match t {
        Target::C2 => chi4 == 0,
        Target::CP2 => chi4 == 0 || chi4 == 1,
        Target::Blowup(1) => chi4 != 2,
        Target::CP1xCP1 => chi % 2 == 0,
        Target::Blowup(_) => true,
    }
}

/// Integral self-intersection, written from the intersection forms directly.
pub fn self_intersection(t: &Target, c: &[i64]) -> i64 {
    match t {
        Target::C2 => 0,
        Target::CP2 => c[0] * c[0],
        Target::CP1xCP1 => 2 * c[0] * c[1],
        Target::Blowup(_) => c[0] * c[0] - c[1..].iter().map(|x| x * x).sum::<i64>(),
    }
}

/// Table 2 as printed; `None` is a blank cell.
pub fn table2_golden() -> Vec<Vec<Option<(u8, u32)>>> {
    let c = |d, s| Some((d, s));
    vec![
        vec![None, None, c(0, 0), c(0, 1), c(0, 2)],
        vec![c(0, 2), c(0, 3), c(0, 4), c(0, 5), c(0, 6)],
        vec![c(0, 6), c(0, 7), c(0, 8), c(0, 9), c(0, 10)],
        vec![c(0, 10), c(0, 11), None, None, None],
        vec![None, c(1, 0), c(1, 1), c(1, 2), c(1, 3)],
        vec![c(1, 3), c(1, 4), c(1, 5), c(1, 6), c(1, 7)],
    ]
}

/// Table 1 summary rows: target, immersion, orientable embedding, nonorientable embedding.
pub fn table1_golden() -> Vec<[&'static str; 4]> {
    vec![
        ["C2", "chi even", "T2 only", "chi divisible by 4"],
        ["CP2", "all", "T2 only", "chi = 0 or 1 mod 4"],
        ["CP2#1", "all", "T2 only", "chi odd or divisible by 4"],
        ["CP1xCP1", "chi even", "S2, T2 only", "chi even"],
        ["CP2#m, 2<=m<=9", "all", "S2, T2 only", "all"],
    ]
}

/// `Z(K², CP¹×CP¹)`: index `(λ, torsion)` and degree `(a, b)` mod 2.
pub fn klein_quadric_golden() -> Vec<(Vec<i64>, Vec<i64>)> {
    let mut out = Vec::new();
    for i in [vec![1, 0], vec![3, 0]] {
        for d in [vec![0, 0], vec![1, 1]] {
            out.push((i.clone(), d));
        }
    }
    for i in [vec![1, 2], vec![3, 2]] {
        for d in [vec![1, 0], vec![0, 1]] {
            out.push((i.clone(), d));
        }
    }
    out.sort();
    out
}

pub fn surfaces_with_chi_within(bound: i64) -> Vec<Surface> {
    let mut v = Vec::new();
    let mut g = 0;
    while 2 - 2 * g as i64 >= -bound {
        v.push(Surface::orientable(g));
        g += 1;
    }
    let mut g = 1;
    while 2 - g as i64 >= -bound {
        v.push(Surface::nonorientable(g).unwrap());
        g += 1;
    }
    v
}
