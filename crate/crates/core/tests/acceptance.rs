//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs with `cargo test --test acceptance`.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tstr::engine::{solve_colgen, ColGenOptions};
use tstr::generate::{random_selection, random_sp};
use tstr::model_io::parse_instance_file;
use tstr::oracle::{
    brute_inc, brute_opt, brute_tstr, brute_z, hamiltonian_path_exists, partition_exists,
};
use tstr::regret::midpoint_heuristic;
use tstr::selection::{
    coefficients, enumerate_pi_profiles, four_items_instance, greedy_from_seed, max_regret,
    solve_exact, solve_greedy, solve_p_pi, AlphaSet, GreedyOptions, PiProfile,
};
use tstr::shortest_path::{
    gen_hamiltonian_inc, gen_partition_regret, gen_partition_tstr, solve_inc_relaxed, solve_tst_sp,
    Variant,
};
use tstr::{BinaryVector, Cost, Instance, Scenario};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn within(started: Instant, limit: Duration) -> Check {
    let spent = started.elapsed();
    ensure!(spent < limit, "took {spent:?}, limit {limit:?}");
    Ok(format!("{:.2}s", spent.as_secs_f64()))
}

fn bits(s: &str) -> BinaryVector {
    BinaryVector::parse(s).unwrap()
}

fn four_items_reproduction() -> Check {
    let started = Instant::now();
    let inst = four_items_instance();
    let prof = PiProfile::new(&AlphaSet::new(&inst), 2, 6);
    let table = coefficients(&inst, &prof);
    let expected: [(i64, [i64; 4]); 7] = [
        (-2, [5, 0, 3, 11]),
        (1, [4, -1, 2, 10]),
        (3, [2, -3, 2, 10]),
        (5, [0, -3, 0, 10]),
        (8, [-3, -3, -3, 10]),
        (11, [-6, -3, -6, 10]),
        (11, [-7, -3, -6, 10]),
    ];
    let got: Vec<(i64, Vec<i64>)> = table.rows.iter().map(|r| (r.nu, r.omega.clone())).collect();
    let want: Vec<(i64, Vec<i64>)> = expected.iter().map(|(nu, w)| (*nu, w.to_vec())).collect();
    ensure!(got == want, "coefficient rows {got:?}");
    let p_pi = solve_p_pi(&inst, &prof).map_err(|e| e.to_string())?;
    ensure!(p_pi == (2, bits("0110")), "P(pi) gave {p_pi:?}");
    let exact = solve_exact(&inst).map_err(|e| e.to_string())?;
    ensure!(
        (exact.value, &exact.x) == (2, &bits("0110")),
        "exact gave {} at {}",
        exact.value,
        exact.x
    );
    let greedy = solve_greedy(&inst, &GreedyOptions::default()).map_err(|e| e.to_string())?;
    ensure!(
        (greedy.value, &greedy.x) == (2, &bits("0110")),
        "greedy gave {} at {}",
        greedy.value,
        greedy.x
    );
    within(started, Duration::from_secs(1))
}

fn selection_oracle_equivalence() -> Check {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let count = 200;
    for seed in 0..count {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(1..=n);
        let inst = random_selection(n, p, 20, seed).map_err(|e| e.to_string())?;
        for _ in 0..3 {
            let x = BinaryVector::from_bits((0..n).map(|_| rng.gen_bool(0.4)).collect());
            if x.count_ones() > p {
                continue;
            }
            let fast = max_regret(&inst, &x).map_err(|e| e.to_string())?.value;
            let brute = brute_z(&inst, &x).map_err(|e| e.to_string())?.value;
            ensure!(
                fast == brute,
                "seed {seed}: Z({x}) fast {fast} brute {brute}"
            );
        }
        let opt = brute_tstr(&inst).map_err(|e| e.to_string())?.0;
        let exact = solve_exact(&inst).map_err(|e| e.to_string())?.value;
        let cg = solve_colgen(&inst, &ColGenOptions::default())
            .map_err(|e| e.to_string())?
            .value;
        ensure!(
            exact == opt && cg == opt,
            "seed {seed}: exact {exact} colgen {cg} brute {opt}"
        );
    }
    within(started, Duration::from_secs(60)).map(|t| format!("{count} instances, {t}"))
}

/// `max(f + g) + max(f + h) <= max f + max(f + g + h)`.
fn exchange_holds(f: &[i64], g: &[i64], h: &[i64]) -> bool {
    let max = |v: Vec<i64>| v.into_iter().max().unwrap();
    let fg = max(f.iter().zip(g).map(|(a, b)| a + b).collect());
    let fh = max(f.iter().zip(h).map(|(a, b)| a + b).collect());
    let fgh = max((0..f.len()).map(|k| f[k] + g[k] + h[k]).collect());
    fg + fh <= max(f.to_vec()) + fgh
}

fn nonincreasing(rng: &mut ChaCha8Rng, len: usize) -> Vec<i64> {
    let mut v: Vec<i64> = (0..len).map(|_| rng.gen_range(-20..=20)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn property_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut omega_checks = 0u64;
    let mut instances = Vec::new();
    for seed in 0..40 {
        let n = rng.gen_range(2..=8);
        let p = rng.gen_range(1..=n);
        instances.push(random_selection(n, p, 20, 1000 + seed).map_err(|e| e.to_string())?);
    }
    let tables: Vec<_> = instances
        .iter()
        .flat_map(|inst| {
            enumerate_pi_profiles(inst)
                .into_iter()
                .map(move |prof| coefficients(inst, &prof))
        })
        .collect();
    for t in &tables {
        let n = t.rows[0].omega.len();
        for i in 0..n {
            for w in t.rows.windows(2) {
                omega_checks += 1;
                ensure!(
                    w[1].omega[i] <= w[0].omega[i],
                    "omega increases for item {i} in profile {:?}",
                    t.profile
                );
            }
        }
    }
    for k in 0..10_000 {
        let t = &tables[rng.gen_range(0..tables.len())];
        let n = t.rows[0].omega.len();
        let j = rng.gen_range(0..n);
        let y: Vec<usize> = (0..n).filter(|&i| i != j && rng.gen_bool(0.5)).collect();
        let x: Vec<usize> = y.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        let with =
            |s: &[usize]| -> Vec<usize> { s.iter().copied().chain(std::iter::once(j)).collect() };
        let lhs = t.f_of(&with(&y)) - t.f_of(&y);
        let rhs = t.f_of(&with(&x)) - t.f_of(&x);
        ensure!(
            lhs >= rhs,
            "triple {k}: X={x:?} Y={y:?} j={j}: {lhs} < {rhs}"
        );
    }
    for k in 0..10_000 {
        let len = rng.gen_range(1..=12);
        let f: Vec<i64> = (0..len).map(|_| rng.gen_range(-20..=20)).collect();
        let g = nonincreasing(&mut rng, len);
        let h = nonincreasing(&mut rng, len);
        ensure!(
            exchange_holds(&f, &g, &h),
            "triple {k}: f={f:?} g={g:?} h={h:?}"
        );
    }
    Ok(format!(
        "{omega_checks} omega steps, 10000 supermodular and 10000 exchange triples"
    ))
}

fn random_scenario(rng: &mut ChaCha8Rng, inst: &Instance) -> Scenario {
    Scenario(
        inst.uncertainty()
            .intervals()
            .iter()
            .map(|iv| rng.gen_range(iv.lo..=iv.hi))
            .collect(),
    )
}

fn shortest_path_enumeration() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let count = 120;
    for seed in 0..count {
        let nodes = rng.gen_range(2..=6);
        let arcs = rng.gen_range(nodes - 1..=12);
        let variant = if seed % 2 == 0 {
            Variant::Simple
        } else {
            Variant::Relaxed
        };
        let inst = random_sp(nodes, arcs, 15, variant, seed).map_err(|e| e.to_string())?;
        let c = random_scenario(&mut rng, &inst);
        let tst = solve_tst_sp(&inst, &c).map_err(|e| e.to_string())?.1;
        let opt = brute_opt(&inst, &c).map_err(|e| e.to_string())?;
        ensure!(tst == opt, "seed {seed}: TSt {tst}, enumeration {opt}");
        let relaxed = inst.as_graph().unwrap().with_variant(Variant::Relaxed);
        let inst = Instance::shortest_path(
            inst.first_stage().to_vec(),
            inst.uncertainty().intervals().to_vec(),
            relaxed,
        )
        .map_err(|e| e.to_string())?;
        let xs = inst
            .oracle()
            .first_stage_solutions(&inst, 1 << 20)
            .map_err(|e| e.to_string())?;
        for x in (0..4).map(|_| &xs[rng.gen_range(0..xs.len())]) {
            let inc = solve_inc_relaxed(&inst, x, &c)
                .map_err(|e| e.to_string())?
                .1;
            let brute = brute_inc(&inst, x, &c).map_err(|e| e.to_string())?;
            ensure!(
                inc == brute,
                "seed {seed}: Inc({x}) {inc}, enumeration {brute}"
            );
        }
    }
    Ok(format!("{count} graphs"))
}

fn reductions() -> Check {
    let started = Instant::now();
    for (a, yes) in [(vec![1, 1], true), (vec![1, 3], false)] {
        let b: Cost = a.iter().sum::<Cost>() / 2;
        for variant in [Variant::Simple, Variant::Relaxed] {
            let inst = gen_partition_tstr(&a, variant).map_err(|e| e.to_string())?;
            let opt = brute_tstr(&inst).map_err(|e| e.to_string())?.0;
            ensure!(
                (opt <= 3 * b as i64) == yes,
                "partition gadget {a:?} {variant}: optimum {opt}, 3b = {}",
                3 * b
            );
        }
    }
    let mut lists = Vec::new();
    for len in 2..=3u32 {
        for code in 0..4u32.pow(len) {
            lists.push(
                (0..len)
                    .map(|k| (code / 4u32.pow(k) % 4 + 1) as Cost)
                    .collect::<Vec<_>>(),
            );
        }
    }
    let mut checked = 0;
    for a in lists.iter().filter(|a| a.iter().sum::<Cost>() % 2 == 0) {
        let b = (a.iter().sum::<Cost>() / 2) as i64;
        for variant in [Variant::Simple, Variant::Relaxed] {
            let (inst, x) = gen_partition_regret(a, variant).map_err(|e| e.to_string())?;
            let z = brute_z(&inst, &x).map_err(|e| e.to_string())?.value;
            ensure!(
                (z >= b) == partition_exists(a),
                "regret gadget {a:?} {variant}: Z(0) = {z}, b = {b}"
            );
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut graphs = 0;
    for nodes in 2..=5usize {
        let all: Vec<(usize, usize)> = (0..nodes)
            .flat_map(|i| (0..nodes).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .collect();
        let samples = if all.len() <= 12 { 1 << all.len() } else { 400 };
        for k in 0..samples {
            let arcs: Vec<(usize, usize)> = if all.len() <= 12 {
                all.iter()
                    .enumerate()
                    .filter(|(e, _)| k >> e & 1 == 1)
                    .map(|(_, &a)| a)
                    .collect()
            } else {
                let density = rng.gen_range(0.15..0.6);
                all.iter()
                    .copied()
                    .filter(|_| rng.gen_bool(density))
                    .collect()
            };
            let (inst, x) =
                gen_hamiltonian_inc(nodes, &arcs, 0, nodes - 1).map_err(|e| e.to_string())?;
            let c = inst.uncertainty().lower();
            let inc = tstr::shortest_path::solve_inc_simple(&inst, &x, &c)
                .map_err(|e| e.to_string())?
                .1;
            ensure!(
                (inc == 0) == hamiltonian_path_exists(nodes, &arcs, 0, nodes - 1),
                "{nodes} nodes {arcs:?}: Inc {inc}"
            );
            graphs += 1;
        }
    }
    within(started, Duration::from_secs(120))
        .map(|t| format!("{checked} partition inputs, {graphs} digraphs, {t}"))
}

fn negative_witnesses() -> Check {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/instances/midpoint_gap.json");
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let (inst, _) = parse_instance_file(&text).map_err(|e| e.to_string())?;
    let mid = midpoint_heuristic(&inst).map_err(|e| e.to_string())?;
    let z_mid = brute_z(&inst, &mid).map_err(|e| e.to_string())?.value;
    let opt = brute_tstr(&inst).map_err(|e| e.to_string())?.0;
    ensure!(
        opt > 0 && z_mid > 100 * opt,
        "midpoint Z {z_mid} against optimum {opt}"
    );

    let t = four_items_instance();
    let forced = enumerate_pi_profiles(&t)
        .iter()
        .map(|prof| greedy_from_seed(&coefficients(&t, prof), &[0], true).value)
        .min()
        .unwrap();
    let opt1 = brute_tstr(&t).map_err(|e| e.to_string())?.0;
    ensure!(
        forced == 4 && opt1 == 2,
        "greedy seeded with item 1 gave {forced}, optimum {opt1}"
    );
    Ok(format!(
        "midpoint {z_mid} vs {opt}; seeded greedy {forced} vs {opt1}"
    ))
}

fn time_max_regret(n: usize) -> Duration {
    let inst = random_selection(n, n / 2, 1000, n as u64).unwrap();
    let x = BinaryVector::from_indices(n, (0..n / 4).map(|k| 2 * k));
    (0..3)
        .map(|_| {
            let started = Instant::now();
            max_regret(&inst, &x).unwrap();
            started.elapsed()
        })
        .min()
        .unwrap()
}

fn performance() -> Check {
    let times: Vec<Duration> = [500, 1000, 2000]
        .iter()
        .map(|&n| time_max_regret(n))
        .collect();
    let ratios: Vec<f64> = times
        .windows(2)
        .map(|w| w[1].as_secs_f64() / w[0].as_secs_f64())
        .collect();
    let summary = format!("{:?}, growth {:.2} and {:.2}", times, ratios[0], ratios[1]);
    ensure!(
        times[2] < Duration::from_secs(1),
        "n = 2000 too slow: {summary}"
    );
    ensure!(
        ratios.iter().all(|&r| r <= 4.5),
        "growth too steep: {summary}"
    );
    Ok(summary)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("four-item example", four_items_reproduction),
        ("selection oracle equivalence", selection_oracle_equivalence),
        ("property suite", property_suite),
        ("shortest path enumeration", shortest_path_enumeration),
        ("reduction soundness", reductions),
        ("negative witnesses", negative_witnesses),
        ("max regret performance", performance),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
