//! Property tests for the algebraic structure of the discrete operators and
//! the limiter.

use std::sync::Arc;

use proptest::prelude::*;

use pbedg::assembly::AssemblyOptions;
use pbedg::basis::{moment_weights, DgSolution};
use pbedg::kernels::{builtin_aggregation, builtin_breakage, KernelSet};
use pbedg::limiter::{Limiter, LimiterConfig};
use pbedg::{Basis, DgData, Mesh};

const KERNELS: [&str; 5] = ["constant", "additive", "free_molecule", "brownian", "gravitational"];

/// Cell widths in `[0.2, 1]`, rescaled to `[0, v_max]`.
fn mesh_strategy() -> impl Strategy<Value = Arc<Mesh>> {
    (prop::collection::vec(0.2..1.0f64, 2..7), 1.0..15.0f64).prop_map(|(widths, v_max)| {
        let total: f64 = widths.iter().sum();
        let mut edges = vec![0.0];
        let mut acc = 0.0;
        for w in &widths[..widths.len() - 1] {
            acc += w / total * v_max;
            edges.push(acc);
        }
        edges.push(v_max);
        Arc::new(Mesh::from_edges(edges).unwrap())
    })
}

fn rate(data: &DgData, c: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; c.len()];
    data.apply_rhs(c, 0.0, &mut out);
    out
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    let scale = a.iter().chain(b).map(|x| x.abs()).fold(1.0, f64::max);
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol * scale)
}

fn coeff_vec(len: usize, seed: u64) -> Vec<f64> {
    // Cheap deterministic pseudo-random coefficients in [-1, 1].
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    (0..len)
        .map(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Pure aggregation is a symmetric quadratic form: it is homogeneous of
    /// degree two and obeys the parallelogram identity.
    #[test]
    fn aggregation_operator_is_quadratic(
        mesh in mesh_strategy(),
        k in 1usize..3,
        kernel in 0usize..KERNELS.len(),
        seed in any::<u64>(),
        scale in -3.0..3.0f64,
    ) {
        let basis = Basis::new(k).unwrap();
        let kernels = KernelSet {
            aggregation: Some(builtin_aggregation(KERNELS[kernel], 1.0).unwrap()),
            ..KernelSet::default()
        };
        let data = DgData::build(mesh.clone(), basis, kernels, AssemblyOptions::for_degree(k)).unwrap();
        let len = mesh.num_cells() * basis.len();
        let c = coeff_vec(len, seed);
        let d = coeff_vec(len, seed ^ 0x9e37_79b9_7f4a_7c15);

        let lc = rate(&data, &c);
        let scaled: Vec<f64> = c.iter().map(|x| scale * x).collect();
        let expected: Vec<f64> = lc.iter().map(|x| scale * scale * x).collect();
        prop_assert!(close(&rate(&data, &scaled), &expected, 1e-12));

        let sum: Vec<f64> = c.iter().zip(&d).map(|(a, b)| a + b).collect();
        let diff: Vec<f64> = c.iter().zip(&d).map(|(a, b)| a - b).collect();
        let ld = rate(&data, &d);
        let lhs: Vec<f64> = rate(&data, &sum).iter().zip(rate(&data, &diff)).map(|(a, b)| a + b).collect();
        let rhs: Vec<f64> = lc.iter().zip(&ld).map(|(a, b)| 2.0 * (a + b)).collect();
        prop_assert!(close(&lhs, &rhs, 1e-12));
    }

    /// Pure breakage is linear.
    #[test]
    fn breakage_operator_is_linear(
        mesh in mesh_strategy(),
        k in 1usize..4,
        seed in any::<u64>(),
        a in -3.0..3.0f64,
    ) {
        let basis = Basis::new(k).unwrap();
        let kernels = KernelSet {
            breakage: Some(builtin_breakage("uniform_linear", 1.0).unwrap()),
            ..KernelSet::default()
        };
        let data = DgData::build(mesh.clone(), basis, kernels, AssemblyOptions::for_degree(k)).unwrap();
        let len = mesh.num_cells() * basis.len();
        let c = coeff_vec(len, seed);
        let d = coeff_vec(len, !seed);
        let combo: Vec<f64> = c.iter().zip(&d).map(|(x, y)| x + a * y).collect();
        let expected: Vec<f64> = rate(&data, &c).iter().zip(rate(&data, &d)).map(|(x, y)| x + a * y).collect();
        prop_assert!(close(&rate(&data, &combo), &expected, 1e-12));
    }

    /// Evaluating the right-hand side twice gives bit-identical results.
    #[test]
    fn rhs_is_deterministic(mesh in mesh_strategy(), seed in any::<u64>()) {
        let basis = Basis::new(2).unwrap();
        let kernels = KernelSet {
            aggregation: Some(builtin_aggregation("brownian", 1.0).unwrap()),
            breakage: Some(builtin_breakage("uniform_linear", 1.0).unwrap()),
            ..KernelSet::default()
        };
        let data = DgData::build(mesh.clone(), basis, kernels, AssemblyOptions::for_degree(2)).unwrap();
        let c = coeff_vec(mesh.num_cells() * basis.len(), seed);
        prop_assert_eq!(rate(&data, &c), rate(&data, &c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// The limiter keeps the chosen cell moment, removes negative values at
    /// the sample points and is idempotent.
    #[test]
    fn limiter_properties(
        k in 1usize..5,
        s in 0usize..2,
        left in 0.0..50.0f64,
        width in 1e-3..5.0f64,
        coeffs in prop::collection::vec(-1.0..1.0f64, 5),
        lift in 0.0..3.0f64,
    ) {
        let basis = Basis::new(k).unwrap();
        let limiter = Limiter::new(
            LimiterConfig { enabled: true, s, dense_sampling: false },
            basis,
            k + 2,
        ).unwrap();
        let mesh = Mesh::from_edges(vec![left, left + width]).unwrap();
        let mut c: Vec<f64> = coeffs[..basis.len()].to_vec();
        // Shift upwards so that the cell moment is nonnegative.
        c[0] = c[0].abs() + lift + c[1..].iter().map(|x| x.abs()).sum::<f64>() * 0.5;

        let mut w = vec![0.0; basis.len()];
        moment_weights(&mesh, basis, 0, s, &mut w);
        let moment = |c: &[f64]| c.iter().zip(&w).map(|(a, b)| a * b).sum::<f64>();
        prop_assume!(moment(&c) > 0.0);
        let before = moment(&c);

        let original = c.clone();
        let changed = limiter.limit_cell(&mesh, 0, &mut c, 0.0).unwrap();
        let m_scale = w.iter().zip(&c).map(|(a, b)| (a * b).abs()).sum::<f64>().max(before.abs());
        prop_assert!((moment(&c) - before).abs() <= 1e-13 * m_scale);
        prop_assert!(limiter.cell_min(&c) >= -1e-13 * c[0].abs());
        if !changed {
            prop_assert_eq!(&c, &original);
        }

        let once = c.clone();
        limiter.limit_cell(&mesh, 0, &mut c, 0.0).unwrap();
        prop_assert!(close(&c, &once, 1e-14));
    }

    /// Projection reproduces polynomials of degree at most `k` exactly.
    #[test]
    fn projection_reproduces_polynomials(
        mesh in mesh_strategy(),
        k in 1usize..5,
        poly in prop::collection::vec(-1.0..1.0f64, 5),
        probe in 0.0..1.0f64,
    ) {
        let basis = Basis::new(k).unwrap();
        let p = |v: f64| poly[..=k].iter().rev().fold(0.0, |acc, a| acc * v + a);
        let sol = DgSolution::project(mesh.clone(), basis, k + 2, p).unwrap();
        let v = probe * mesh.v_max();
        let scale = poly.iter().map(|a| a.abs()).sum::<f64>() * mesh.v_max().max(1.0).powi(k as i32);
        prop_assert!((sol.eval_global(v).unwrap() - p(v)).abs() <= 1e-12 * scale.max(1.0));
    }
}
