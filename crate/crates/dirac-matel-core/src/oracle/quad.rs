//! Panel-based Gauss-Legendre quadrature with nested error estimates.
//! Deliberately simple and slow: this is the reference engine.

use alloc::vec;
use alloc::vec::Vec;

use crate::fmath::Float;
use crate::Complex;

use super::OracleError;

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess
        let mut z = (core::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = 0.0;
            for j in 0..n {
                let p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j as f64 + 1.0) * z * p1 - j as f64 * p2) / (j as f64 + 1.0);
            }
            pp = n as f64 * (z * p0 - p1) / (z * z - 1.0);
            let z1 = z;
            z -= p0 / pp;
            if (z - z1).abs() < 1e-15 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

fn panel_integral<F: FnMut(f64) -> Complex>(
    f: &mut F,
    a: f64,
    b: f64,
    nodes: &(Vec<f64>, Vec<f64>),
) -> Complex {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = Complex::new(0.0, 0.0);
    for (&x, &w) in nodes.0.iter().zip(nodes.1.iter()) {
        acc += f(mid + half * x) * w;
    }
    acc * half
}

/// Integrate `f` over `[a, b]` adaptively; returns value and error estimate.
/// Error per panel is the difference between 31- and 15-point rules.
pub fn adaptive<F: FnMut(f64) -> Complex>(
    f: &mut F,
    panels: &[(f64, f64)],
    rel_tol: f64,
    max_subdivisions: usize,
) -> Result<(Complex, f64), OracleError> {
    let hi_rule = gauss_legendre(31);
    let lo_rule = gauss_legendre(15);
    struct Piece {
        a: f64,
        b: f64,
        value: Complex,
        err: f64,
    }
    let mut pieces: Vec<Piece> = Vec::new();
    let mut eval = |f: &mut F, a: f64, b: f64| -> Piece {
        let hi = panel_integral(f, a, b, &hi_rule);
        let lo = panel_integral(f, a, b, &lo_rule);
        Piece {
            a,
            b,
            value: hi,
            err: (hi - lo).norm(),
        }
    };
    for &(a, b) in panels {
        pieces.push(eval(f, a, b));
    }
    for _ in 0..max_subdivisions {
        let total: Complex = pieces.iter().map(|p| p.value).sum();
        let err: f64 = pieces.iter().map(|p| p.err).sum();
        if err <= rel_tol * total.norm().max(1e-300) || err < 1e-305 {
            return Ok((total, err));
        }
        // split the worst panel
        let (worst, _) = pieces
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .expect("nonempty");
        let Piece { a, b, .. } = pieces[worst];
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break; // panel no longer splittable at f64 resolution
        }
        pieces[worst] = eval(f, a, mid);
        pieces.push(eval(f, mid, b));
    }
    let total: Complex = pieces.iter().map(|p| p.value).sum();
    let err: f64 = pieces.iter().map(|p| p.err).sum();
    if err <= rel_tol.max(1e-10) * total.norm().max(1e-300) {
        Ok((total, err))
    } else {
        Err(OracleError::NoConvergence {
            achieved: err / total.norm().max(1e-300),
        })
    }
}

/// Build panels on [0, upper] that are geometrically refined toward the
/// origin (mild power singularities) and capped by a half-period length
/// when an oscillation hint is given.
pub fn radial_panels(upper: f64, oscillation_period: Option<f64>) -> Vec<(f64, f64)> {
    let mut edges = vec![0.0];
    let mut x = upper * 1e-14;
    while x < upper {
        edges.push(x);
        x *= 4.0;
    }
    edges.push(upper);
    let mut panels = Vec::new();
    let cap = oscillation_period.map(|p| 0.5 * p).unwrap_or(f64::INFINITY);
    for pair in edges.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if b - a <= cap {
            panels.push((a, b));
        } else {
            let n = ((b - a) / cap).ceil() as usize;
            let h = (b - a) / n as f64;
            for i in 0..n {
                panels.push((a + i as f64 * h, a + (i + 1) as f64 * h));
            }
        }
    }
    panels
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_nodes_integrate_polynomials_exactly() {
        let (x, w) = gauss_legendre(8);
        // int_{-1}^{1} x^14 dx = 2/15
        let v: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(14)).sum();
        assert!((v - 2.0 / 15.0).abs() < 1e-14);
    }

    #[test]
    fn adaptive_handles_exponential() {
        let mut f = |r: f64| Complex::new((-r).exp(), 0.0);
        let panels = radial_panels(60.0, None);
        let (v, e) = adaptive(&mut f, &panels, 1e-13, 200).unwrap();
        assert!((v.re - 1.0).abs() < 1e-12, "got {} err {}", v.re, e);
    }

    #[test]
    fn adaptive_handles_mild_singularity() {
        // int_0^1 r^{-0.3} dr = 1/0.7
        let mut f = |r: f64| Complex::new(r.powf(-0.3), 0.0);
        let panels = radial_panels(1.0, None);
        let (v, _) = adaptive(&mut f, &panels, 1e-12, 400).unwrap();
        assert!((v.re - 1.0 / 0.7).abs() < 1e-9, "got {}", v.re);
    }
}
