//! Quick timing probe for the dense kernels the verification sweeps lean on.
//! Run: cargo run --release -p locallaw --example perf_probe

use std::time::Instant;

use nalgebra::{Complex, DMatrix};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    for &n in &[512usize, 1024] {
        let a = DMatrix::<f64>::from_fn(n, n, |_, _| rng.gen::<f64>() - 0.5);
        let sym = (&a + a.transpose()) * 0.5;

        let t = Instant::now();
        let b = &sym * &sym;
        let gemm = t.elapsed().as_secs_f64();
        println!(
            "n={n} dgemm: {:.3}s  ({:.2} GFlop/s)  [{:.3e}]",
            gemm,
            2.0 * (n as f64).powi(3) / gemm / 1e9,
            b[(0, 0)]
        );

        let t = Instant::now();
        let eig = sym.clone().symmetric_eigen();
        let te = t.elapsed().as_secs_f64();
        println!("n={n} symmetric_eigen (with vectors): {:.3}s [{:.3e}]", te, eig.eigenvalues[0]);

        let t = Instant::now();
        let ev = sym.clone().symmetric_eigenvalues();
        let tv = t.elapsed().as_secs_f64();
        println!("n={n} symmetric_eigenvalues: {:.3}s [{:.3e}]", tv, ev[0]);

        let nc = n / 2;
        let c = DMatrix::<Complex<f64>>::from_fn(nc, nc, |i, j| {
            Complex::new(sym[(i, j)], sym[(j, i)] * 0.5)
        });
        let shifted = &c + DMatrix::identity(nc, nc) * Complex::new(0.0, 3.0);
        let t = Instant::now();
        let inv = shifted.lu().try_inverse().unwrap();
        let tl = t.elapsed().as_secs_f64();
        println!("n={nc} complex LU inverse: {:.3}s [{:.3e}]", tl, inv[(0, 0)].re);
    }
}
