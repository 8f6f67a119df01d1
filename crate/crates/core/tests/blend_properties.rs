mod common;

use blendifs_core::blend::{discrete_attractor, error_bound_tight, error_bound_worst};
use blendifs_core::metrics::hausdorff_sets;
use blendifs_core::presets::{sierpinski_maple, sierpinski_maple_shear};
use blendifs_core::rng::SplitMix64;
use blendifs_core::{blend_approx, choose_parameters, generate_theta, BlendingSequence, DiscreteSet, Grid};
use common::{iterate_to_fixed_set, random_set, unit_grid};
use proptest::prelude::*;

const SQRT2: f64 = std::f64::consts::SQRT_2;

#[test]
fn constant_recipes_recover_the_attractors() {
    // A discrete fixed set Y = r(F(Y)) lies within ε/(1−λ) of the attractor,
    // and the constant blend within its worst bound, so the two are within
    // 2ε/(1−λ) + λ^k·diam of each other. The fixed set is grown from a
    // single cell so it shares nothing with the blend's full-grid seed.
    let sys = sierpinski_maple_shear();
    let grid = unit_grid(512);
    let k = 30;
    for i in 1..=3 {
        let ifs = sys.system(i).unwrap();
        let blend = discrete_attractor(&sys, &grid, i, k).unwrap();
        let fp = ifs.maps()[0].fixed_point().unwrap();
        let seed = grid.discretize(&[fp]).unwrap();
        let (fixed, _) = iterate_to_fixed_set(&grid, ifs, seed, 200);
        let d = hausdorff_sets(&blend.output, &fixed).unwrap().symmetric;
        let lambda = ifs.lambda_r();
        let tol = 2.0 * grid.epsilon() / (1.0 - lambda) + lambda.powi(k as i32) * SQRT2;
        assert!(d <= tol, "system {i}: {d} > {tol}");
    }
}

#[test]
fn blends_do_not_depend_on_the_seed_set() {
    let sys = sierpinski_maple();
    let grid = unit_grid(256);
    let mut rng = SplitMix64::new(5);
    for seed in 0..12 {
        let theta = generate_theta(seed, 20, 2).unwrap();
        let a = blend_approx(&sys, &grid, &theta, &DiscreteSet::full(grid)).unwrap();
        let z = random_set(&mut rng, grid, 1 + seed as usize);
        let b = blend_approx(&sys, &grid, &theta, &z).unwrap();
        let d = hausdorff_sets(&a.output, &b.output).unwrap().symmetric;
        assert!(d <= 2.0 * a.error_bound_worst, "seed {seed}: {d}");
    }
}

#[test]
fn blends_are_continuous_in_the_recipe() {
    let sys = sierpinski_maple();
    let grid = unit_grid(256);
    for seed in 0..12u64 {
        let theta = generate_theta(seed, 20, 2).unwrap();
        let p = (seed as usize % 15) + 3;
        let mut other = theta.symbols()[..p].to_vec();
        other.extend(generate_theta(seed + 1000, 20 - p, 2).unwrap().symbols());
        let other = BlendingSequence::new(other, 2).unwrap();
        let full = DiscreteSet::full(grid);
        let a = blend_approx(&sys, &grid, &theta, &full).unwrap();
        let b = blend_approx(&sys, &grid, &other, &full).unwrap();
        let d = hausdorff_sets(&a.output, &b.output).unwrap().symmetric;
        let bound = 2.0 * a.error_bound_worst + sys.lambda_script_r().powi(p as i32) * SQRT2;
        assert!(d <= bound, "prefix {p}: {d} > {bound}");
    }
}

#[test]
fn chosen_parameters_certify_the_target() {
    let sys = sierpinski_maple();
    let p = choose_parameters(0.1, &sys).unwrap();
    assert_eq!((p.k, p.m_min), (15, 71));
    let grid = Grid::new(sys.bbox(), p.m_min).unwrap();
    assert!(grid.epsilon() <= p.epsilon_max);
    let theta = generate_theta(3, p.k, 2).unwrap();
    let r = blend_approx(&sys, &grid, &theta, &DiscreteSet::full(grid)).unwrap();
    assert!(r.error_bound_worst <= 0.1, "{}", r.error_bound_worst);
}

#[test]
fn chosen_parameters_for_several_targets() {
    let sys = sierpinski_maple();
    for delta in [0.5, 0.2, 0.05, 0.02, 0.01] {
        let p = choose_parameters(delta, &sys).unwrap();
        let grid = Grid::new(sys.bbox(), p.m_min).unwrap();
        let worst = error_bound_worst(0.8, p.k, SQRT2, grid.epsilon());
        assert!(worst <= delta, "{delta}: {worst}");
        // one step shorter no longer meets the first half of the budget
        if p.k > 1 {
            assert!(0.8f64.powi(p.k as i32 - 1) * SQRT2 >= delta / 2.0);
        }
    }
}

proptest! {
    #[test]
    fn tight_bound_never_exceeds_worst(symbols in prop::collection::vec(1..=3usize, 1..60), m in 1u32..5000) {
        let lambdas = [0.5, 0.8, 0.5435];
        let factors: Vec<f64> = symbols.iter().map(|&s| lambdas[s - 1]).collect();
        let eps = SQRT2 / (2.0 * m as f64);
        let tight = error_bound_tight(&factors, SQRT2, eps);
        let worst = error_bound_worst(0.8, symbols.len(), SQRT2, eps);
        prop_assert!(tight <= worst + 1e-15);
    }

    #[test]
    fn generated_recipes_stay_in_range(seed in any::<u64>(), len in 1usize..200, n in 1usize..9) {
        let t = generate_theta(seed, len, n).unwrap();
        prop_assert_eq!(t.len(), len);
        prop_assert!(t.symbols().iter().all(|&s| (1..=n).contains(&s)));
    }
}
