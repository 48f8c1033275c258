use irregular_core::cubic::{is_state0, solve_cubic_with, CubicOptions};
use irregular_core::generators::random_regular;
use irregular_core::irregularity::a_scaled;

#[test]
fn random_cubic_hosts_reach_state0() {
    for n in [2usize, 4, 6, 8, 10, 12, 20, 50] {
        for seed in 0..300 {
            let g = random_regular(n, 3, seed).unwrap();
            let (h, stats) = solve_cubic_with(&g, CubicOptions { verify_index: true })
                .unwrap_or_else(|e| panic!("n={n} seed={seed}: {e}"));
            let a = a_scaled::<i64>(&g, &h).unwrap();
            assert_eq!(a.entries, stats.final_a.to_vec());
            assert!(is_state0(&stats.final_a), "n={n} seed={seed}: {:?}", stats.final_a);
        }
    }
}
