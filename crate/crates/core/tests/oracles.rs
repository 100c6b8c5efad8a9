//! FFT-based operators against direct O(N^2) sums, plus frozen reference
//! numbers for an ideal chirp.

use std::f64::consts::PI;

use nlfm_pia::analysis::{self, AnalysisReport};
use nlfm_pia::pia::{adjoint_transform, forward_transform, DftOperator};
use nlfm_pia::{Complex64, DesignParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

fn direct_forward(x: &[Complex64], k: usize) -> Vec<Complex64> {
    (0..k)
        .map(|kk| {
            x.iter()
                .enumerate()
                .map(|(n, &v)| {
                    v * Complex64::from_polar(1.0, -2.0 * PI * ((kk * n) % k) as f64 / k as f64)
                })
                .sum()
        })
        .collect()
}

fn direct_adjoint(y: &[Complex64], n: usize) -> Vec<Complex64> {
    let k = y.len();
    (0..n)
        .map(|nn| {
            y.iter()
                .enumerate()
                .map(|(kk, &v)| {
                    v * Complex64::from_polar(1.0, 2.0 * PI * ((kk * nn) % k) as f64 / k as f64)
                })
                .sum()
        })
        .collect()
}

fn direct_acf(x: &[Complex64]) -> Vec<f64> {
    (0..x.len())
        .map(|tau| {
            (tau..x.len())
                .map(|n| x[n] * x[n - tau].conj())
                .sum::<Complex64>()
                .norm()
        })
        .collect()
}

fn rel_err(got: &[Complex64], want: &[Complex64]) -> f64 {
    assert_eq!(got.len(), want.len());
    let scale = want
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    got.iter()
        .zip(want)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
        / scale
}

const SIZES: [usize; 9] = [1, 2, 3, 7, 16, 31, 64, 129, 256];

#[test]
fn forward_matches_direct_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in SIZES {
        for k in [n, 2 * n, 3 * n + 1] {
            let x = random_vec(&mut rng, n);
            let err = rel_err(&forward_transform(&x, k).unwrap(), &direct_forward(&x, k));
            assert!(err < 1e-9, "N={n} K={k}: {err:e}");
        }
    }
}

#[test]
fn adjoint_matches_direct_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in SIZES {
        for k in [n, 2 * n, 3 * n + 1] {
            let y = random_vec(&mut rng, k);
            let err = rel_err(&adjoint_transform(&y, n).unwrap(), &direct_adjoint(&y, n));
            assert!(err < 1e-9, "N={n} K={k}: {err:e}");
        }
    }
}

#[test]
fn acf_matches_direct_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for n in SIZES {
        let x = random_vec(&mut rng, n);
        let got = analysis::autocorrelation_magnitude(&x);
        let want = direct_acf(&x);
        let scale = want[0];
        let err = got
            .iter()
            .zip(&want)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
            / scale;
        assert!(err < 1e-9, "N={n}: {err:e}");
    }
}

#[test]
fn operator_is_inner_product_adjoint() {
    // <W x, y> = <x, W^H y>
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let op = DftOperator::new(96, 40).unwrap();
    let x = random_vec(&mut rng, 40);
    let y = random_vec(&mut rng, 96);
    let lhs: Complex64 = op
        .forward(&x)
        .unwrap()
        .iter()
        .zip(&y)
        .map(|(a, b)| a * b.conj())
        .sum();
    let rhs: Complex64 = x
        .iter()
        .zip(&op.adjoint(&y).unwrap())
        .map(|(a, b)| a * b.conj())
        .sum();
    assert!((lhs - rhs).norm() < 1e-9 * lhs.norm().max(1.0));
}

fn ideal_chirp(p: &DesignParams) -> Vec<Complex64> {
    let rate = PI * p.bandwidth / p.pulse_width;
    p.time_grid()
        .iter()
        .map(|&t| Complex64::from_polar(1.0, rate * t * t))
        .collect()
}

#[test]
fn ideal_chirp_metrics_match_frozen_values() {
    let p = DesignParams::baseline();
    let x = ideal_chirp(&p);
    let report = AnalysisReport::new(&x, p.sample_rate);
    assert_eq!(analysis::mainlobe_end(&report.acf_db), Some(10));
    assert!((report.psl_db.unwrap() - -13.373867299681038).abs() < 1e-8);
    assert!((report.isl_db.unwrap() - -0.1575279935203708).abs() < 1e-8);
    assert!((report.mainlobe_width_samples - 8.767348344230689).abs() < 1e-8);
}

#[test]
fn ideal_chirp_acf_db_matches_direct_sum() {
    let p = DesignParams::baseline();
    let x = ideal_chirp(&p);
    let direct = direct_acf(&x);
    let got = analysis::autocorrelation(&x);
    for (tau, (g, d)) in got.iter().zip(&direct).enumerate().step_by(7) {
        let want = 20.0 * (d / direct[0]).log10();
        assert!((g - want).abs() < 1e-6, "lag {tau}: {g} vs {want}");
    }
}
