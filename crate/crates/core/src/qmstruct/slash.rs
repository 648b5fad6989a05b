//! Floating-point check of the A-action: (h|A)(τ) = 64·(8τ)⁻³·h(−1/(8τ)).

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::ops::{a_matrix, Convention};
use crate::error::{Error, Result};
use crate::qseries::{cuspform_basis, QSeries};

#[derive(Clone, Debug, Serialize)]
pub struct SlashVerdict {
    pub tau: (f64, f64),
    pub terms: usize,
    pub tail_bound: f64,
    pub residual_column: f64,
    pub residual_row: f64,
    /// The convention whose residual is below tolerance, if exactly one is.
    pub convention: Option<Convention>,
}

impl SlashVerdict {
    pub fn pass(&self) -> bool {
        self.convention.is_some()
    }
}

fn coeffs_f64(s: &QSeries, n: usize) -> Vec<(i64, f64)> {
    s.terms().take(n).map(|(e, c)| (e.to_integer(), c.to_f64().unwrap_or(f64::NAN))).collect()
}

fn eval(c: &[(i64, f64)], tau: Complex64) -> Complex64 {
    let q = (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * tau).exp();
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &(_, a)| acc * q + a) * q.powi(c[0].0 as i32)
}

/// Bound on Σ_{n>N} |a_n||q|ⁿ from the growth rate of the last half of
/// the coefficients.
fn tail_bound(c: &[(i64, f64)], qabs: f64) -> f64 {
    let half = c.len() / 2;
    let rate =
        c[half..].iter().filter(|(_, a)| *a != 0.0).map(|&(n, a)| a.abs().powf(1.0 / n as f64)).fold(1.0f64, f64::max);
    let x = rate * qabs;
    if x >= 1.0 {
        return f64::INFINITY;
    }
    let n = c.last().map(|t| t.0).unwrap_or(0) + 1;
    x.powi(n as i32) / (1.0 - x)
}

pub fn numeric_slash_check(tau: Complex64, terms: usize, tol: f64) -> Result<SlashVerdict> {
    if tau.im <= 0.0 {
        return Err(Error::NotInUpperHalfPlane);
    }
    let (h1, h2) = cuspform_basis(terms)?;
    slash_check_with(&h1, &h2, tau, terms, tol)
}

pub fn slash_check_with(h1: &QSeries, h2: &QSeries, tau: Complex64, terms: usize, tol: f64) -> Result<SlashVerdict> {
    if tau.im <= 0.0 {
        return Err(Error::NotInUpperHalfPlane);
    }
    let (c1, c2) = (coeffs_f64(h1, terms), coeffs_f64(h2, terms));
    let atau = -1.0 / (tau * 8.0);
    let qmax = (-2.0 * std::f64::consts::PI * tau.im.min(atau.im)).exp();
    let tail = tail_bound(&c1, qmax).max(tail_bound(&c2, qmax));
    let factor = 64.0 * (tau * 8.0).powi(-3);
    let weighted = tail * factor.norm().max(1.0);
    if weighted.is_nan() || weighted >= tol / 10.0 {
        return Err(Error::TailTooLarge { bound: tail, limit: tol / 10.0 });
    }
    let lhs = [factor * eval(&c1, atau), factor * eval(&c2, atau)];
    let h = [eval(&c1, tau), eval(&c2, tau)];

    let a = a_matrix();
    let entry = |i: usize, j: usize| a.entry(i, j).to_complex();
    let residual = |conv: Convention| -> f64 {
        (0..2)
            .map(|j| {
                // coordinates of h_j | A
                let coord = |k: usize| match conv {
                    Convention::Column => entry(k, j),
                    Convention::Row => entry(j, k),
                };
                let rhs = coord(0) * h[0] + coord(1) * h[1];
                (lhs[j] - rhs).norm() / rhs.norm().max(1e-300)
            })
            .fold(0.0, f64::max)
    };
    let (rc, rr) = (residual(Convention::Column), residual(Convention::Row));
    let convention = match (rc < tol, rr < tol) {
        (true, false) => Some(Convention::Column),
        (false, true) => Some(Convention::Row),
        _ => None,
    };
    Ok(SlashVerdict {
        tau: (tau.re, tau.im),
        terms,
        tail_bound: tail,
        residual_column: rc,
        residual_row: rr,
        convention,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_convention_at_two_points() {
        let (h1, h2) = cuspform_basis(400).unwrap();
        for tau in [Complex64::new(0.1, 0.4), Complex64::new(0.0, 0.5f64.sqrt() / 2.0)] {
            let v = slash_check_with(&h1, &h2, tau, 400, 1e-6).unwrap();
            assert_eq!(v.convention, Some(Convention::Column), "{v:?}");
        }
    }

    #[test]
    fn lower_half_plane_is_rejected() {
        let (h1, h2) = cuspform_basis(10).unwrap();
        assert!(matches!(
            slash_check_with(&h1, &h2, Complex64::new(0.0, -1.0), 10, 1e-6),
            Err(Error::NotInUpperHalfPlane)
        ));
    }
}
