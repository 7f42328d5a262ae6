use lmax::binpack::{pack, to_scheduling_instance, Strategy as PackStrategy};
use lmax::feasibility::{build_layers, two_machine_table};
use lmax::{
    brute_force_all_orders_feasible, brute_force_feasible, brute_force_min_bins,
    brute_force_min_lmax, edd_order, evaluate_schedule, feasible_general, feasible_two_machines,
    generate_random, min_bins, min_lmax, probe, search_bounds, shift_deadlines, Assignment,
    BinPackInstance, GenParams, Instance, MachinePark, Time, DEFAULT_MEMORY_CAP_BITS,
};
use proptest::prelude::*;

fn instance_strategy(
    max_n: usize,
    max_m: usize,
    max_work: Time,
    max_deadline: Time,
    max_rate: Time,
) -> impl Strategy<Value = Instance> {
    (
        prop::collection::vec(1..=max_rate, 1..=max_m),
        prop::collection::vec((0..=max_work, 0..=max_deadline), 0..=max_n),
    )
        .prop_map(|(rates, jobs)| Instance::new(MachinePark::new(rates).unwrap(), jobs).unwrap())
}

fn pairs(instance: &Instance) -> Vec<(Time, Time)> {
    instance
        .jobs()
        .iter()
        .map(|j| (j.work, j.deadline))
        .collect()
}

fn with_jobs(instance: &Instance, jobs: Vec<(Time, Time)>) -> Instance {
    Instance::new(instance.machines().clone(), jobs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn edd_order_is_a_sorted_permutation(i in instance_strategy(12, 3, 9, 30, 3)) {
        let order = edd_order(&i);
        let mut sorted = order.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (0..i.num_jobs()).collect::<Vec<_>>());
        for w in order.windows(2) {
            let (a, b) = (&i.jobs()[w[0]], &i.jobs()[w[1]]);
            prop_assert!((a.deadline, a.id) < (b.deadline, b.id));
        }
    }

    #[test]
    fn evaluation_ignores_job_list_order(
        i in instance_strategy(10, 3, 9, 30, 3),
        seed in any::<u64>(),
        raw in prop::collection::vec(any::<usize>(), 10),
    ) {
        let n = i.num_jobs();
        let m = i.num_machines();
        let assignment = Assignment::new((0..n).map(|k| raw[k] % m).collect());
        let mut perm: Vec<usize> = (0..n).collect();
        // deterministic shuffle from the seed
        let mut s = seed;
        for k in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(k, (s >> 33) as usize % (k + 1));
        }
        let jobs = pairs(&i);
        let permuted = with_jobs(&i, perm.iter().map(|&k| jobs[k]).collect());
        let permuted_assignment = Assignment::new(perm.iter().map(|&k| assignment.machine_of[k]).collect());
        let a = evaluate_schedule(&i, &assignment).unwrap();
        let b = evaluate_schedule(&permuted, &permuted_assignment).unwrap();
        prop_assert_eq!(a.lmax, b.lmax);
        prop_assert_eq!(a.per_machine_completion, b.per_machine_completion);

        let fa = feasible_general(&i).unwrap().feasible;
        let fb = feasible_general(&permuted).unwrap().feasible;
        prop_assert_eq!(fa, fb);
    }

    #[test]
    fn shifting_moves_lateness_by_the_shift(
        i in instance_strategy(10, 3, 9, 30, 3),
        raw in prop::collection::vec(any::<usize>(), 10),
        x in -50i64..50,
    ) {
        let m = i.num_machines();
        let assignment = Assignment::new((0..i.num_jobs()).map(|k| raw[k] % m).collect());
        let before = evaluate_schedule(&i, &assignment).unwrap().lmax;
        let after = evaluate_schedule(&shift_deadlines(&i, x).unwrap(), &assignment).unwrap().lmax;
        prop_assert_eq!(after, before.map(|l| l - x));
    }

    #[test]
    fn unit_rates_complete_at_total_work(
        i in instance_strategy(10, 4, 9, 30, 1),
        raw in prop::collection::vec(any::<usize>(), 10),
    ) {
        let m = i.num_machines();
        let assignment = Assignment::new((0..i.num_jobs()).map(|k| raw[k] % m).collect());
        let report = evaluate_schedule(&i, &assignment).unwrap();
        for (j, &c) in report.per_machine_completion.iter().enumerate() {
            let work: Time = i.jobs().iter().filter(|job| assignment.machine_of[job.id] == j).map(|job| job.work).sum();
            prop_assert_eq!(c, work);
        }
    }

    #[test]
    fn relaxing_deadlines_keeps_feasibility(i in instance_strategy(8, 3, 5, 15, 3)) {
        if feasible_general(&i).unwrap().feasible {
            prop_assert!(feasible_general(&shift_deadlines(&i, 1).unwrap()).unwrap().feasible);
        }
    }

    #[test]
    fn general_dp_matches_oracle(i in instance_strategy(8, 3, 5, 20, 3)) {
        let r = feasible_general(&i).unwrap();
        prop_assert_eq!(r.feasible, brute_force_feasible(&i, 0).unwrap());
        if let Some(w) = r.witness {
            prop_assert!(evaluate_schedule(&i, &w).unwrap().lmax.is_none_or(|l| l <= 0));
        }
    }

    #[test]
    fn optimum_and_certificate(i in instance_strategy(7, 3, 5, 20, 3)) {
        let r = min_lmax(&i).unwrap();
        let oracle = brute_force_min_lmax(&i).unwrap();
        prop_assert_eq!(r.lmax, oracle.lmax);
        if let Some(l) = r.lmax {
            prop_assert_eq!(evaluate_schedule(&i, &r.assignment).unwrap().lmax, Some(l));
            prop_assert!(probe(&i, l).unwrap().feasible);
            prop_assert!(!probe(&i, l - 1).unwrap().feasible);
            prop_assert!(brute_force_feasible(&i, l).unwrap());
            prop_assert!(!brute_force_feasible(&i, l - 1).unwrap());
        }
    }

    #[test]
    fn upper_bound_is_always_feasible(i in instance_strategy(12, 3, 9, 30, 4)) {
        if i.num_jobs() > 0 {
            let b = search_bounds(&i).unwrap();
            prop_assert!(b.lo <= b.hi);
            prop_assert!(probe(&i, b.hi).unwrap().feasible);
            prop_assert!(!probe(&i, b.lo - 1).unwrap().feasible);
        }
    }

    #[test]
    fn instance_text_round_trips(i in instance_strategy(10, 4, 50, 80, 5)) {
        prop_assert_eq!(Instance::parse(&i.to_string()).unwrap(), i);
    }

    #[test]
    fn bin_packing_text_round_trips(sizes in prop::collection::vec(1i64..=9, 0..10), extra in 0i64..5) {
        let bp = BinPackInstance::new(sizes, 9 + extra).unwrap();
        prop_assert_eq!(BinPackInstance::parse(&bp.to_string()).unwrap(), bp);
    }
}

#[test]
fn edd_dominance_on_random_instances() {
    let mut checked = 0;
    for seed in 0..400 {
        let i = generate_random(&GenParams {
            n: (seed % 7) as usize,
            m: 1 + (seed % 3) as usize,
            max_work: 4,
            max_deadline: 12,
            max_rate: 2,
            seed,
        })
        .unwrap();
        assert_eq!(
            brute_force_all_orders_feasible(&i).unwrap(),
            brute_force_feasible(&i, 0).unwrap(),
            "{i}"
        );
        checked += 1;
    }
    assert_eq!(checked, 400);
}

#[test]
fn thousand_witnesses_validate() {
    let mut feasible = 0;
    let mut seed = 0u64;
    while feasible < 1000 {
        let i = generate_random(&GenParams {
            n: 1 + (seed % 10) as usize,
            m: 1 + (seed % 3) as usize,
            max_work: 5,
            max_deadline: 30,
            max_rate: 3,
            seed,
        })
        .unwrap();
        seed += 1;
        let r = feasible_general(&i).unwrap();
        if let Some(w) = r.witness {
            let lmax = evaluate_schedule(&i, &w).unwrap().lmax.unwrap();
            assert!(lmax <= 0, "seed {} gives lateness {lmax}", seed - 1);
            feasible += 1;
        }
    }
}

/// Specialisation agreement and work/time table equivalence for two
/// identical machines, over every instance with n <= 3, 0 <= t <= 4,
/// 0 <= d <= 8. Larger n (up to 8) is covered by the seeded test below and by
/// the acceptance grid.
#[test]
fn two_machine_table_matches_work_layers_exhaustively() {
    let choices: Vec<(Time, Time)> = (0..=4).flat_map(|t| (0..=8).map(move |d| (t, d))).collect();
    let park = MachinePark::identical(2).unwrap();
    let mut count = 0;
    for n in 0..=3usize {
        let total = choices.len().pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let jobs: Vec<_> = (0..n)
                .map(|_| {
                    let j = choices[c % choices.len()];
                    c /= choices.len();
                    j
                })
                .collect();
            let i = Instance::new(park.clone(), jobs).unwrap();
            check_two_machine_agreement(&i);
            count += 1;
        }
    }
    assert_eq!(count, 1 + 45 + 45 * 45 + 45 * 45 * 45);
}

#[test]
fn two_machine_table_matches_work_layers_random() {
    for seed in 0..3000 {
        let i = generate_random(&GenParams {
            n: (seed % 9) as usize,
            m: 2,
            max_work: 4,
            max_deadline: 8,
            max_rate: 1,
            seed,
        })
        .unwrap();
        check_two_machine_agreement(&i);
    }
}

fn check_two_machine_agreement(i: &Instance) {
    let two = feasible_two_machines(i).unwrap();
    let general = feasible_general(i).unwrap();
    assert_eq!(two.feasible, general.feasible, "{i}");
    if let Some(w) = two.witness {
        assert!(evaluate_schedule(i, &w)
            .unwrap()
            .lmax
            .is_none_or(|l| l <= 0));
    }

    let time_table = two_machine_table(i, DEFAULT_MEMORY_CAP_BITS).unwrap();
    let work_table = build_layers(i, DEFAULT_MEMORY_CAP_BITS).unwrap();
    for (row, layer) in work_table.layers().iter().enumerate() {
        let cells: Vec<usize> = layer.true_cells().into_iter().map(|c| c[0]).collect();
        assert_eq!(cells, time_table.row_times(row), "row {row} of {i}");
    }
    // the work table stops after an empty layer; the time table must be empty there too
    for row in work_table.layers().len()..time_table.num_rows() {
        assert!(time_table.row_times(row).is_empty());
    }
}

#[test]
fn probe_is_monotone_in_the_bound() {
    for seed in 0..300 {
        let i = generate_random(&GenParams {
            n: 1 + (seed % 6) as usize,
            m: 1 + (seed % 3) as usize,
            max_work: 6,
            max_deadline: 20,
            max_rate: 3,
            seed,
        })
        .unwrap();
        let b = search_bounds(&i).unwrap();
        let sweep: Vec<bool> = (b.lo - 1..=b.hi)
            .map(|l| probe(&i, l).unwrap().feasible)
            .collect();
        let first = sweep.iter().position(|&f| f).unwrap();
        assert!(sweep[first..].iter().all(|&f| f), "seed {seed}");
    }
}

#[test]
fn reduction_matches_exhaustive_packing() {
    for seed in 0..200 {
        let bp = lmax::generate_bin_packing(1 + (seed % 7) as usize, 6, 10, seed).unwrap();
        let best = brute_force_min_bins(&bp).unwrap();
        for m in 1..=bp.num_items() {
            let feasible = feasible_general(&to_scheduling_instance(&bp, m).unwrap())
                .unwrap()
                .feasible;
            assert_eq!(feasible, m >= best, "seed {seed}, m {m}, {bp:?}");
        }
        assert!(min_bins(&bp).unwrap() >= bp.volume_bound());
        let scan = pack(&bp, PackStrategy::Scan, DEFAULT_MEMORY_CAP_BITS).unwrap();
        let bisect = pack(&bp, PackStrategy::Bisect, DEFAULT_MEMORY_CAP_BITS).unwrap();
        assert_eq!(scan.bins, best);
        assert_eq!(bisect.bins, best);
        for p in [scan, bisect] {
            let mut loads = vec![0; p.bins];
            for (&s, &b) in bp.item_sizes().iter().zip(&p.bin_of) {
                loads[b] += s;
            }
            assert!(loads.iter().all(|&l| l <= bp.bin_capacity()));
        }
    }
}

#[test]
fn first_fit_decreasing_is_an_upper_bound() {
    for seed in 0..200 {
        let bp = lmax::generate_bin_packing(1 + (seed % 8) as usize, 8, 12, seed).unwrap();
        let mut sizes = bp.item_sizes().to_vec();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let mut bins: Vec<Time> = Vec::new();
        for s in sizes {
            match bins.iter_mut().find(|l| **l + s <= bp.bin_capacity()) {
                Some(l) => *l += s,
                None => bins.push(s),
            }
        }
        assert!(min_bins(&bp).unwrap() <= bins.len());
    }
}

#[test]
fn generator_golden_instance() {
    let i = generate_random(&GenParams {
        n: 5,
        m: 2,
        max_work: 6,
        max_deadline: 10,
        max_rate: 1,
        seed: 1,
    })
    .unwrap();
    let golden = include_str!("data/golden/gen_n5_m2_seed1.out");
    assert_eq!(i.to_string(), golden);
}
