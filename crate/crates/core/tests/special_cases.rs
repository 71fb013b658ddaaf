use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tstr::oracle::brute_tstr;
use tstr::selection::{solve_few_distinct, solve_p_equals_n};
use tstr::{Cost, Instance};

/// Rows where the coordinates flagged in `small` take values from a set of
/// two, the other one from `0..=12`; intervals are repaired to `lo <= hi`.
fn few_distinct_instance(rng: &mut ChaCha8Rng, n: usize, small: [bool; 3]) -> Instance {
    let pick = |rng: &mut ChaCha8Rng, s: bool| -> Cost {
        if s {
            [2, 7][rng.gen_range(0..2)]
        } else {
            rng.gen_range(0..=12)
        }
    };
    let rows: Vec<(Cost, Cost, Cost)> = (0..n)
        .map(|_| {
            let c = pick(rng, small[0]);
            let mut lo = pick(rng, small[1]);
            let mut hi = pick(rng, small[2]);
            if lo > hi {
                if small[1] && small[2] {
                    std::mem::swap(&mut lo, &mut hi);
                } else if small[1] {
                    hi += lo;
                } else {
                    lo = lo.min(hi);
                }
            }
            (c, lo, hi)
        })
        .collect();
    let p = rng.gen_range(1..n);
    Instance::selection_from_rows(&rows, p).unwrap()
}

#[test]
fn few_distinct_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for small in [
        [true, true, false],
        [true, false, true],
        [false, true, true],
    ] {
        for _ in 0..80 {
            let n = rng.gen_range(2..=7);
            let inst = few_distinct_instance(&mut rng, n, small);
            let (z, x) = solve_few_distinct(&inst, 2).unwrap();
            let (opt, _) = brute_tstr(&inst).unwrap();
            assert_eq!(z, opt, "{small:?} {inst:?} picked {x}");
        }
    }
}

#[test]
fn p_equals_n_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let rows: Vec<(Cost, Cost, Cost)> = (0..n)
            .map(|_| {
                let lo = rng.gen_range(0..=10);
                (rng.gen_range(0..=12), lo, lo + rng.gen_range(0..=6))
            })
            .collect();
        let inst = Instance::selection_from_rows(&rows, n).unwrap();
        let x = solve_p_equals_n(&inst).unwrap();
        let z = tstr::regret::max_regret(&inst, &x).unwrap().value;
        assert_eq!(z, brute_tstr(&inst).unwrap().0, "{inst:?}");
    }
}
