mod common;

use totreal::classify::{
    degree_admissible, embedding_admissible, embedding_exists, immersion_exists,
    realized_by_embedding, z_set, Decision, IndexDegreePair,
};
use totreal::cyclic::Modulus;
use totreal::dioph::{solve_all, DiophInstance};
use totreal::surface::{IndexClass, Surface};
use totreal::target::{c1_eval, d_set, DegreeClass, DegreeSet, Target};
use totreal::Error;

fn spheres_and_tori() -> [Surface; 2] {
    [Surface::SPHERE, Surface::TORUS]
}

/// An orientable degree `(d; q₁, …, q_m)` is admissible exactly when
/// `q` solves the system `Σq = 3d`, `Σq² = d² + χ`.
#[test]
fn orientable_admissibility_is_the_diophantine_system() {
    for m in 1..=5u32 {
        let t = Target::Blowup(m);
        for s in spheres_and_tori() {
            let chi = s.euler_char();
            let sols = solve_all(&DiophInstance::new(m, chi).unwrap(), -6, 6).unwrap();
            let bound = 7;
            let mut found = 0;
            let mut stack = vec![vec![]];
            while let Some(prefix) = stack.pop() {
                if prefix.len() == m as usize + 1 {
                    let d = prefix[0];
                    let degree = DegreeClass::integral(&prefix);
                    let in_d = c1_eval(&t, &degree).unwrap() == 0;
                    let admissible = in_d && degree_admissible(&s, &t, &degree).unwrap();
                    let mut sorted = prefix[1..].to_vec();
                    sorted.sort_by(|a, b| b.cmp(a));
                    let solves = sols.iter().any(|x| x.d == d && x.q == sorted);
                    assert_eq!(admissible, solves, "{s} in {t}: {prefix:?}");
                    found += usize::from(admissible);
                    continue;
                }
                let lim = if prefix.is_empty() { 6 } else { bound };
                for v in -lim..=lim {
                    let mut p = prefix.clone();
                    p.push(v);
                    stack.push(p);
                }
            }
            let expected = sols.iter().map(|x| trivial_count(&x.q)).sum::<usize>();
            assert_eq!(found, expected, "{s} in {t}");
        }
    }
}

/// Distinct orderings of `q`.
fn trivial_count(q: &[i64]) -> usize {
    let mut counts = std::collections::BTreeMap::new();
    for x in q {
        *counts.entry(x).or_insert(0usize) += 1;
    }
    let fact = |n: usize| (1..=n).product::<usize>();
    fact(q.len()) / counts.values().map(|&c| fact(c)).product::<usize>()
}

#[test]
fn embeddings_are_immersions() {
    let mut targets = vec![Target::C2, Target::CP2, Target::CP1xCP1];
    targets.extend((1..=12).map(Target::Blowup));
    for t in &targets {
        for s in common::surfaces_with_chi_within(20) {
            if embedding_exists(&s, t).value == Decision::Yes {
                assert_eq!(immersion_exists(&s, t).value, Decision::Yes, "{s} in {t}");
            }
        }
    }
}

#[test]
fn coupled_z_sets_are_half_the_product() {
    for g in [2, 4, 6] {
        let s = Surface::nonorientable(g).unwrap();
        let z = z_set(&s, &Target::CP1xCP1);
        let iq = common::brute_iq(&s, 4).len() as u128;
        assert!(z.coupled);
        assert_eq!(z.cardinality(), Some(iq * 4 / 2), "{s}");
        assert_eq!(z.pairs().unwrap().len() as u128, iq * 2);
    }
    let z = z_set(&Surface::nonorientable(3).unwrap(), &Target::CP1xCP1);
    assert!(!z.coupled);
}

#[test]
fn uncoupled_z_sets_are_full_products() {
    for t in [Target::CP2, Target::Blowup(2), Target::Blowup(3)] {
        for g in 1..=4 {
            let s = Surface::nonorientable(g).unwrap();
            let z = z_set(&s, &t);
            assert!(!z.coupled, "{s} in {t}");
            let iq = z.iq.cardinality().unwrap();
            let deg = d_set(&t, &s).cardinality().unwrap();
            assert_eq!(z.cardinality(), Some(iq * deg));
        }
    }
}

#[test]
fn large_degree_sets_are_described_not_listed() {
    let s = Surface::nonorientable(3).unwrap();
    let t = Target::blowup(40).unwrap();
    assert!(matches!(d_set(&t, &s), DegreeSet::W2Level { .. }));
    let z = z_set(&s, &t);
    assert!(z.pairs().is_none());
    assert!(z.enumerate().is_err());
}

#[test]
fn pairs_outside_z_are_rejected() {
    let s = Surface::KLEIN_BOTTLE;
    let t = Target::CP1xCP1;
    let q4 = Modulus::finite(4).unwrap();
    let bad = IndexDegreePair::new(
        IndexClass::from_ints(q4, &[1, 0]),
        DegreeClass::mod2(&[1, 0]),
    );
    assert!(matches!(
        embedding_admissible(&s, &t, &bad),
        Err(Error::NotInZ(_))
    ));
    let odd_square = IndexDegreePair::new(
        IndexClass::from_ints(q4, &[1, 0]),
        DegreeClass::mod2(&[1, 1]),
    );
    assert!(!embedding_admissible(&s, &t, &odd_square).unwrap());
    assert_eq!(
        realized_by_embedding(&s, &t, &odd_square).unwrap().value,
        Decision::No
    );
    let zero = IndexDegreePair::new(
        IndexClass::from_ints(q4, &[1, 0]),
        DegreeClass::mod2(&[0, 0]),
    );
    assert!(embedding_admissible(&s, &t, &zero).unwrap());
    assert_eq!(
        realized_by_embedding(&s, &t, &zero).unwrap().value,
        Decision::Yes
    );
}

#[test]
fn admissible_squares_match_euler_characteristic() {
    for t in [
        Target::CP2,
        Target::Blowup(1),
        Target::Blowup(4),
        Target::CP1xCP1,
    ] {
        for g in 1..=6 {
            let s = Surface::nonorientable(g).unwrap();
            for p in z_set(&s, &t).pairs().unwrap() {
                let ok = embedding_admissible(&s, &t, p).unwrap();
                let sq = common::self_intersection(&t, p.degree.components()).rem_euclid(4);
                assert_eq!(
                    ok,
                    sq == s.euler_char().rem_euclid(4),
                    "{s} in {t}: {}",
                    p.degree
                );
            }
        }
    }
}

#[test]
fn embedding_exists_iff_an_admissible_pair_exists() {
    let mut targets = vec![Target::C2, Target::CP2, Target::CP1xCP1];
    targets.extend((1..=5).map(Target::Blowup));
    for t in &targets {
        for g in 1..=5 {
            let s = Surface::nonorientable(g).unwrap();
            let z = z_set(&s, t);
            let any = match z.pairs() {
                Some(pairs) => pairs
                    .iter()
                    .any(|p| embedding_admissible(&s, t, p).unwrap()),
                // Infinite index set, uncoupled: any admissible degree will do.
                None => {
                    !z.iq.empty
                        && d_set(t, &s)
                            .finite_members()
                            .unwrap()
                            .iter()
                            .any(|d| degree_admissible(&s, t, d).unwrap())
                }
            };
            assert_eq!(
                any,
                embedding_exists(&s, t).value == Decision::Yes,
                "{s} in {t}"
            );
        }
    }
}
