//! Solve ∇²u = s for a narrow Gaussian source on [-2,2]² at two resolutions
//! and report the residual and the cross-resolution agreement.

use spectral::fourier2d::{Grid2D, GridMeta};
use spectral::pde::{poisson_residual, solve_poisson, PoissonProblem};

fn main() {
    let mut coarse: Option<Grid2D> = None;
    for n in [64usize, 128] {
        let meta = GridMeta::square(n, -2.0, 2.0);
        let source = Grid2D::from_fn(meta, |x, y| (-(x * x + y * y) / 0.01).exp());
        let solution = solve_poisson(&PoissonProblem { source: source.clone() }).unwrap();
        let residual = poisson_residual(&solution, &source).unwrap();
        println!("n = {n:>3}: max |u| = {:.6}, residual = {residual:.3e}", solution.max_abs());
        if let Some(prev) = &coarse {
            let factor = n / prev.meta.nx;
            let mut max_diff = 0.0f64;
            for k in 0..prev.meta.ny {
                for j in 0..prev.meta.nx {
                    let a = prev.values[prev.meta.idx(j, k)];
                    let b = solution.values[meta.idx(j * factor, k * factor)];
                    max_diff = max_diff.max((a - b).norm());
                }
            }
            println!("max difference on shared points vs n = {}: {max_diff:.3e}", prev.meta.nx);
        }
        coarse = Some(solution);
    }
}
