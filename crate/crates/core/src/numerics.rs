//! Small numerical utilities: adaptive quadrature and least-squares lines.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Adaptive Simpson quadrature of a complex-valued integrand on [a, b] to
/// absolute tolerance `tol` (applied to real and imaginary parts jointly).
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, tol: f64) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    const MAX_DEPTH: u32 = 60;
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    simpson_rec(&f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH)
}

/// Real-valued wrapper around [`adaptive_simpson`].
pub fn adaptive_simpson_real<F>(f: F, a: f64, b: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    adaptive_simpson(|x| Complex64::new(f(x), 0.0), a, b, tol).map(|z| z.re)
}

fn simpson(a: f64, b: f64, fa: Complex64, fm: Complex64, fb: Complex64) -> Complex64 {
    (fa + 4.0 * fm + fb) * ((b - a) / 6.0)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: Complex64,
    fm: Complex64,
    fb: Complex64,
    whole: Complex64,
    tol: f64,
    depth: u32,
) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.norm() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::QuadratureNonConvergence { tolerance: tol, a, b });
    }
    let l = simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)?;
    let r = simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)?;
    Ok(l + r)
}

/// Least-squares fit of y = slope·x + intercept. Returns (slope, intercept).
pub fn fit_line(xs: &[f64], ys: &[f64]) -> Result<(f64, f64)> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::FitFailure {
            reason: format!("need ≥2 paired points, got {} and {}", xs.len(), ys.len()),
        });
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::FitFailure {
            reason: "degenerate abscissae (zero variance)".into(),
        });
    }
    let slope = sxy / sxx;
    Ok((slope, my - slope * mx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn simpson_integrates_gaussian() {
        // ∫ exp(-x²/2)/√(2π) over [-10, 10] = 1
        let v = adaptive_simpson_real(
            |x| (-0.5 * x * x).exp() / (2.0 * PI).sqrt(),
            -10.0,
            10.0,
            1e-12,
        )
        .unwrap();
        assert!((v - 1.0).abs() < 1e-11, "got {v}");
    }

    #[test]
    fn simpson_integrates_oscillatory_complex() {
        // ∫₀^{2π} e^{i 7 x} dx = 0
        let v = adaptive_simpson(
            |x| Complex64::new(0.0, 7.0 * x).exp(),
            0.0,
            2.0 * PI,
            1e-12,
        )
        .unwrap();
        assert!(v.norm() < 1e-10, "got {v}");
    }

    #[test]
    fn line_fit_recovers_slope() {
        let xs: Vec<f64> = (0..50).map(|i| i as f64 * 0.1).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x - 2.0).collect();
        let (slope, intercept) = fit_line(&xs, &ys).unwrap();
        assert!((slope - 3.0).abs() < 1e-12);
        assert!((intercept + 2.0).abs() < 1e-12);
    }
}
