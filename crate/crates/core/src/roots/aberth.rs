//! Simultaneous root iteration (Aberth–Ehrlich) in f64, followed by Newton
//! polishing with double-double evaluation.

use num_bigint::BigInt;
use num_complex::Complex64;

use super::dd::{horner, CDD, DD};

pub const MAX_ITERATIONS: usize = 200;

/// Starting points and iteration state for one polynomial.
pub struct Solver {
    /// f64 coefficients, constant term first, monic.
    monic: Vec<Complex64>,
    /// Exact integer coefficients as double-doubles, constant term first.
    exact: Vec<DD>,
}

pub struct Outcome {
    pub roots: Vec<Complex64>,
    pub converged: bool,
    pub iterations: usize,
}

impl Solver {
    pub fn new(int_coeffs: &[BigInt]) -> Self {
        let exact: Vec<DD> = int_coeffs.iter().map(DD::from_bigint).collect();
        let lead = exact.last().expect("nonconstant").to_f64();
        let monic = exact
            .iter()
            .map(|c| Complex64::new(c.to_f64() / lead, 0.0))
            .collect();
        Self { monic, exact }
    }

    fn degree(&self) -> usize {
        self.monic.len() - 1
    }

    /// `2 max_k |a_{n-k}|^{1/k}` for the monic polynomial.
    fn root_bound(&self) -> f64 {
        let n = self.degree();
        (1..=n)
            .map(|k| self.monic[n - k].norm().powf(1.0 / k as f64))
            .fold(0.0, f64::max)
            * 2.0
    }

    /// `Σ |a_k| |z|^k` for the monic coefficients.
    fn scale_at(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.monic.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
    }

    fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for c in self.monic.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// Aberth iteration from a circle around the centroid of the roots,
    /// rotated by `phase` radians.
    pub fn solve(&self, phase: f64) -> Outcome {
        let n = self.degree();
        if n == 1 {
            return Outcome {
                roots: vec![-self.monic[0]],
                converged: true,
                iterations: 0,
            };
        }
        let center = -self.monic[n - 1] / n as f64;
        let radius = self.root_bound().max(1e-3) * 0.5;
        let mut z: Vec<Complex64> = (0..n)
            .map(|k| {
                let theta = std::f64::consts::TAU * k as f64 / n as f64 + phase + 0.4;
                center + Complex64::from_polar(radius, theta)
            })
            .collect();
        let mut done = vec![false; n];
        for iter in 1..=MAX_ITERATIONS {
            for k in 0..n {
                if done[k] {
                    continue;
                }
                let (p, dp) = self.eval_with_derivative(z[k]);
                if p.norm() <= 8.0 * n as f64 * f64::EPSILON * self.scale_at(z[k]) {
                    done[k] = true;
                    continue;
                }
                let ratio = p / dp;
                let sum: Complex64 = (0..n)
                    .filter(|&j| j != k)
                    .map(|j| (z[k] - z[j]).inv())
                    .sum();
                let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
                if !w.re.is_finite() || !w.im.is_finite() {
                    // coincident iterates: nudge apart
                    let nudge = Complex64::new(1e-8, 1e-8) * (1.0 + z[k].norm());
                    z[k] += nudge;
                    continue;
                }
                z[k] -= w;
                if w.norm() <= 1e-14 * (1.0 + z[k].norm()) {
                    done[k] = true;
                }
            }
            if done.iter().all(|&d| d) {
                return Outcome {
                    roots: z,
                    converged: true,
                    iterations: iter,
                };
            }
        }
        Outcome {
            roots: z,
            converged: false,
            iterations: MAX_ITERATIONS,
        }
    }

    /// Newton steps with the value computed in double-double precision.
    pub fn polish(&self, z: Complex64) -> Complex64 {
        let mut x = CDD::new(z.re, z.im);
        for _ in 0..4 {
            let p = horner(&self.exact, x).to_c64();
            let (_, dp) = self.eval_with_derivative(x.to_c64());
            let lead = self.exact.last().unwrap().to_f64();
            let step = p / (dp * lead);
            if !step.re.is_finite() || !step.im.is_finite() {
                break;
            }
            x = x.add_c64(-step);
            if step.norm() <= 1e-30 * (1.0 + z.norm()) {
                break;
            }
        }
        x.to_c64()
    }

    /// Newton on the real line for a root known to be real.
    pub fn polish_real(&self, x: f64) -> f64 {
        self.polish(Complex64::new(x, 0.0)).re
    }

    /// `|p(z)| / Σ |a_k| |z|^k`, with `p(z)` in double-double.
    pub fn relative_residual(&self, z: Complex64) -> f64 {
        relative_residual(&self.exact, z)
    }
}

pub fn relative_residual(exact: &[DD], z: Complex64) -> f64 {
    let v = horner(exact, CDD::new(z.re, z.im)).to_c64().norm();
    let r = z.norm();
    let scale = exact
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * r + c.to_f64().abs());
    if scale == 0.0 {
        0.0
    } else {
        v / scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn sorted(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        v
    }

    #[test]
    fn quadratic_and_cubic() {
        // m^2 + 1
        let s = Solver::new(&ints(&[1, 0, 1]));
        let out = s.solve(0.0);
        assert!(out.converged);
        let r = sorted(out.roots.iter().map(|&z| s.polish(z)).collect());
        assert!((r[0] - Complex64::new(0.0, -1.0)).norm() < 1e-14);
        assert!((r[1] - Complex64::new(0.0, 1.0)).norm() < 1e-14);
        // (m+1)(m+2)(m+3)
        let s = Solver::new(&ints(&[6, 11, 6, 1]));
        let r = sorted(s.solve(0.3).roots.iter().map(|&z| s.polish(z)).collect());
        for (k, z) in r.iter().enumerate() {
            assert!((z - Complex64::new(-3.0 + k as f64, 0.0)).norm() < 1e-13);
            assert!(s.relative_residual(*z) < 1e-15);
        }
    }

    #[test]
    fn wilkinson_like_degree_twelve() {
        // Π_{k=1}^{12} (m + k)
        let mut c = vec![BigInt::from(1)];
        for k in 1..=12i64 {
            let mut next = vec![BigInt::from(0); c.len() + 1];
            for (i, a) in c.iter().enumerate() {
                next[i] += a * k;
                next[i + 1] += a;
            }
            c = next;
        }
        let s = Solver::new(&c);
        let out = s.solve(0.0);
        assert!(out.converged);
        let r = sorted(out.roots.iter().map(|&z| s.polish(z)).collect());
        for (k, z) in r.iter().enumerate() {
            assert!((z.re + 12.0 - k as f64).abs() < 1e-9, "{z}");
            assert!(s.relative_residual(*z) < 1e-10);
        }
    }
}
