//! The zero-padded DFT operator: column orthogonality and the closed-form
//! least-squares estimate it allows.

use nlfm_pia::pia::{error_functional, ls_estimate, DftOperator};
use nlfm_pia::Complex64;

fn main() -> nlfm_pia::Result<()> {
    let (k, n) = (16, 6);
    let op = DftOperator::new(k, n)?;

    let x: Vec<Complex64> = (0..n)
        .map(|i| Complex64::from_polar(1.0, 0.7 * (i * i) as f64))
        .collect();
    let back = op.adjoint(&op.forward(&x)?)?;
    let dev = back
        .iter()
        .zip(&x)
        .map(|(b, v)| (b - v * k as f64).norm())
        .fold(0.0, f64::max);
    println!("max |W^H W x - K x| = {dev:.2e}");

    // A measurement vector that no length-6 signal reproduces exactly.
    let y: Vec<Complex64> = (0..k)
        .map(|i| Complex64::new((i as f64).cos(), (0.3 * i as f64).sin()))
        .collect();
    let ls = ls_estimate(&y, &op)?;
    let best = error_functional(&y, &ls, &op)?;
    println!("error at LS estimate: {best:.6}");
    for eps in [1e-1, 1e-2, 1e-3] {
        let nudged: Vec<Complex64> = ls.iter().map(|v| v + Complex64::new(eps, -eps)).collect();
        let e = error_functional(&y, &nudged, &op)?;
        println!(
            "  nudged by {eps:.0e}: {e:.6} (+{:.3e}, predicted {:.3e})",
            e - best,
            2.0 * eps * eps * (k * n) as f64
        );
    }
    Ok(())
}
