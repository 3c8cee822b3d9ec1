//! Deterministic polynomial root finding for characteristic equations.
//!
//! Durand–Kerner simultaneous iteration from a fixed ring of starting points,
//! followed by a few Newton steps per root. Good to ~1e-12 relative accuracy
//! on the simple-root polynomials produced by the recurrence catalog; the
//! dominance certificates downstream use far looser 1e-9 thresholds.

use num::complex::Complex64;

/// Evaluate the monic polynomial x^D + tail[0]·x^(D−1) + … + tail[D−1] at z.
fn eval(tail: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for &t in tail {
        acc = acc * z + t;
    }
    acc
}

/// Evaluate the derivative of the same polynomial at z.
fn eval_deriv(tail: &[f64], z: Complex64) -> Complex64 {
    let d = tail.len();
    let mut acc = Complex64::new(d as f64, 0.0);
    for (i, &t) in tail.iter().enumerate().take(d.saturating_sub(1)) {
        acc = acc * z + (d - 1 - i) as f64 * t;
    }
    acc
}

/// |p(z)| for the monic polynomial described by `tail`.
pub fn residual(tail: &[f64], z: Complex64) -> f64 {
    eval(tail, z).norm()
}

/// All `tail.len()` complex roots of x^D + tail[0]·x^(D−1) + … + tail[D−1],
/// sorted by decreasing modulus (ties broken by real part, then imaginary
/// part). Fully deterministic.
pub fn roots_monic(tail: &[f64]) -> Vec<Complex64> {
    let d = tail.len();
    if d == 0 {
        return Vec::new();
    }
    // Cauchy bound: every root has modulus < 1 + max |coefficient|.
    let bound = 1.0 + tail.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut roots: Vec<Complex64> = (0..d)
        .map(|k| {
            // Fixed angular offset breaks the symmetry of real polynomials.
            let theta = 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.4;
            0.9 * bound * Complex64::new(theta.cos(), theta.sin())
        })
        .collect();
    for _ in 0..2000 {
        let mut max_step = 0.0f64;
        for k in 0..d {
            let zk = roots[k];
            let mut denom = Complex64::new(1.0, 0.0);
            for (j, &zj) in roots.iter().enumerate() {
                if j != k {
                    denom *= zk - zj;
                }
            }
            if denom.norm() == 0.0 {
                // Collided iterates: nudge deterministically and retry later.
                roots[k] = zk + Complex64::new(1e-8, 1e-8);
                max_step = f64::MAX;
                continue;
            }
            let step = eval(tail, zk) / denom;
            roots[k] = zk - step;
            max_step = max_step.max(step.norm() / zk.norm().max(1.0));
        }
        if max_step < 1e-15 {
            break;
        }
    }
    // Newton polish sharpens simple roots to full precision.
    for z in roots.iter_mut() {
        for _ in 0..8 {
            let dp = eval_deriv(tail, *z);
            if dp.norm() < 1e-300 {
                break;
            }
            let step = eval(tail, *z) / dp;
            *z -= step;
            if step.norm() <= 1e-16 * z.norm().max(1.0) {
                break;
            }
        }
    }
    roots.sort_by(|a, b| {
        (-a.norm(), a.re, a.im)
            .partial_cmp(&(-b.norm(), b.re, b.im))
            .expect("finite root coordinates")
    });
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plastic_root_to_full_precision() {
        // x^3 − x − 1: real root is the plastic ratio.
        let tail = [0.0, -1.0, -1.0];
        let roots = roots_monic(&tail);
        assert_eq!(roots.len(), 3);
        assert!((roots[0].re - 1.324_717_957_244_746).abs() < 1e-12);
        assert!(roots[0].im.abs() < 1e-12);
        assert!(roots[1].norm() < 1.0 && roots[2].norm() < 1.0);
        for z in &roots {
            assert!(residual(&tail, *z) < 1e-10);
        }
    }

    #[test]
    fn factors_through_zero_roots() {
        // x^2 − 3x = x(x − 3)
        let roots = roots_monic(&[-3.0, 0.0]);
        assert!((roots[0].re - 3.0).abs() < 1e-12);
        assert!(roots[1].norm() < 1e-12);
    }

    #[test]
    fn quintic_characteristic_is_accurate() {
        // x^5 − 2x^4 − x − 1 = (x^3 − x^2 − 2x − 1)(x^2 − x + 1)
        let tail = [-2.0, 0.0, 0.0, -1.0, -1.0];
        let roots = roots_monic(&tail);
        assert!((roots[0].re - 2.147_899_035_704_789).abs() < 1e-10);
        assert!(roots[0].im.abs() < 1e-12);
        for z in &roots {
            assert!(residual(&tail, *z) < 1e-9);
        }
        // the x^2 − x + 1 factor contributes the second-largest conjugate
        // pair, of modulus exactly 1
        assert!((roots[1].norm() - 1.0).abs() < 1e-9);
        assert!((roots[2].norm() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn double_root_is_located() {
        // (x − 1)^2; linear convergence still lands well inside 1e-6.
        let roots = roots_monic(&[-2.0, 1.0]);
        assert!((roots[0].re - 1.0).abs() < 1e-6);
        assert!((roots[1].re - 1.0).abs() < 1e-6);
    }

    #[test]
    fn sorted_by_decreasing_modulus() {
        let roots = roots_monic(&[0.0, -7.0, 6.0]); // x^3 − 7x + 6 = (x−1)(x−2)(x+3)
        let mods: Vec<f64> = roots.iter().map(|z| z.norm()).collect();
        assert!(mods[0] >= mods[1] && mods[1] >= mods[2]);
        assert!((roots[0].re + 3.0).abs() < 1e-10);
        assert!((roots[1].re - 2.0).abs() < 1e-10);
        assert!((roots[2].re - 1.0).abs() < 1e-10);
    }

    #[test]
    fn empty_tail_has_no_roots() {
        assert!(roots_monic(&[]).is_empty());
    }
}
