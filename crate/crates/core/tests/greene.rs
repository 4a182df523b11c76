use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shapekit::oracles::{greene_by_unions, greene_report, Family, GREENE_MAX_N};
use shapekit::{schensted_shape, Permutation};

fn all_perms(n: usize) -> Vec<Permutation> {
    let mut word: Vec<u32> = (0..n as u32).collect();
    let mut out = vec![Permutation::from_zero_based(word.clone()).unwrap()];
    // lexicographic successor
    loop {
        let Some(i) = (1..n).rev().find(|&i| word[i - 1] < word[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| word[j] > word[i - 1]).unwrap();
        word.swap(i - 1, j);
        word[i..].reverse();
        out.push(Permutation::from_zero_based(word.clone()).unwrap());
    }
}

fn check_against_unions(p: &Permutation) {
    let report = greene_report(p).unwrap();
    for i in 1..=p.len() {
        assert_eq!(
            report.increasing[i - 1],
            greene_by_unions(p, i, Family::Increasing).unwrap(),
            "{p} i={i}"
        );
        assert_eq!(
            report.decreasing[i - 1],
            greene_by_unions(p, i, Family::Decreasing).unwrap(),
            "{p} i={i}"
        );
    }
}

#[test]
fn enumeration_sizes() {
    let counts: Vec<usize> = (0..=6).map(|n| all_perms(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 24, 120, 720]);
}

#[test]
fn subset_scan_matches_explicit_unions_exhaustively() {
    for n in 0..=6 {
        all_perms(n).iter().for_each(check_against_unions);
    }
}

#[test]
fn subset_scan_matches_explicit_unions_at_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in [7, 8] {
        for _ in 0..10 {
            let mut w: Vec<u32> = (0..n).collect();
            w.shuffle(&mut rng);
            check_against_unions(&Permutation::from_zero_based(w).unwrap());
        }
    }
}

#[test]
fn greene_at_the_scan_limit() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut w: Vec<u32> = (0..GREENE_MAX_N as u32).collect();
    w.shuffle(&mut rng);
    let p = Permutation::from_zero_based(w).unwrap();
    let d = schensted_shape(&p);
    let r = greene_report(&p).unwrap();
    for i in 1..=p.len() {
        assert_eq!(r.increasing[i - 1], d.partial_sum(i));
        assert_eq!(r.decreasing[i - 1], d.conjugate().partial_sum(i));
    }
    let too_big = Permutation::identity(GREENE_MAX_N + 1);
    assert!(greene_report(&too_big).is_err());
}
