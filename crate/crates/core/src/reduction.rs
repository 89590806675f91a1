//! The reduction chain behind the closed-form minimal spread.
//!
//! Three stages take the full maximization over the simplex down to one
//! scalar variable: an averaging inequality shows the middle coordinates of
//! an optimal point can be taken constant, the cosine quotient is rewritten
//! in terms of `(x, z, y) = (min, middle block, max)`, and fixing `x = 0`
//! leaves the one-dimensional function `Q(y)` whose derivative factors with
//! four real roots. The maximizer on the constraint interval is `y = 2/n`.

use serde::Serialize;

use crate::{Error, Result};

/// Inputs of the averaging inequality: minimize `||x - gamma * 1||^2`.
#[derive(Debug, Clone)]
pub struct AveragingProblem {
    gamma: f64,
    x: Vec<f64>,
}

impl AveragingProblem {
    pub fn new(gamma: f64, x: Vec<f64>) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self { gamma, x })
    }

    pub fn m(&self) -> usize {
        self.x.len()
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }
}

/// Result of averaging: the constant vector `y`, and `h` evaluated on both
/// sides. Replacing a vector by its coordinate average never increases the
/// distance to any constant vector, so `h_y <= h_x`.
#[derive(Debug, Clone)]
pub struct AveragedVector {
    pub y: Vec<f64>,
    pub h_x: f64,
    pub h_y: f64,
}

/// Project `x` onto the span of the all-ones vector and evaluate
/// `h(v) = ||v - gamma * 1||^2` on both the input and its average.
pub fn average_vector(prob: &AveragingProblem) -> AveragedVector {
    let eta = prob.x.iter().sum::<f64>() / prob.m() as f64;
    let y = vec![eta; prob.m()];
    let h = |v: &[f64]| -> f64 { v.iter().map(|&c| (c - prob.gamma).powi(2)).sum() };
    AveragedVector {
        h_x: h(&prob.x),
        h_y: h(&y),
        y,
    }
}

/// A simplex point split into its extremes and middle block:
/// `x` the minimum coordinate, `y` the maximum, `z` the remaining `n - 2`
/// coordinates, and `zeta = (1 - x - y) / (n - 2)` their optimal constant
/// value.
#[derive(Debug, Clone)]
pub struct ReducedProfile {
    n: usize,
    x: f64,
    y: f64,
    z: Vec<f64>,
    zeta: f64,
}

impl ReducedProfile {
    /// Validate `(x, z, y)` as a reduced profile; `n = z.len() + 2`.
    pub fn new(x: f64, z: Vec<f64>, y: f64) -> Result<Self> {
        let n = z.len() + 2;
        if n < 3 {
            return Err(Error::BadDimension { n, min: 3 });
        }
        if !x.is_finite() || !y.is_finite() || z.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidProfile {
                reason: "non-finite entry",
            });
        }
        if x < 0.0 || y > 1.0 {
            return Err(Error::InvalidProfile {
                reason: "extremes outside [0, 1]",
            });
        }
        let third = 1.0 / n as f64;
        if !(x < third && third < y) {
            return Err(Error::InvalidProfile {
                reason: "requires x < 1/n < y strictly",
            });
        }
        if z.iter().any(|&v| v < x || v > y) {
            return Err(Error::InvalidProfile {
                reason: "middle coordinate outside [x, y]",
            });
        }
        let z_sum: f64 = z.iter().sum();
        if (z_sum - (1.0 - x - y)).abs() > 1e-10 {
            return Err(Error::InvalidProfile {
                reason: "middle block does not sum to 1 - x - y",
            });
        }
        let zeta = (1.0 - x - y) / (n as f64 - 2.0);
        Ok(Self { n, x, y, z, zeta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> &[f64] {
        &self.z
    }

    pub fn zeta(&self) -> f64 {
        self.zeta
    }

    /// Reassemble the profile into the simplex point `(x, z..., y)`.
    pub fn assemble(&self) -> Result<crate::SimplexPoint> {
        let mut coords = Vec::with_capacity(self.n);
        coords.push(self.x);
        coords.extend_from_slice(&self.z);
        coords.push(self.y);
        crate::SimplexPoint::new(&coords)
    }
}

/// The spread cosine of the assembled point, computed directly in profile
/// coordinates:
///
/// ```text
/// sum_i (y - z_i)(z_i - x)
/// ------------------------------------------------------------------
/// sqrt(x^2 + |z|^2 + (n+1) y^2 - 2y) sqrt((n+1) x^2 - 2x + |z|^2 + y^2)
/// ```
///
/// This route never builds the chord endpoints, so it serves as an algebraic
/// cross-check of the spread module. A radicand at or below zero means `x`
/// or `y` sits at the uniform value, where the quotient is undefined.
pub fn cos_quotient_reduced(profile: &ReducedProfile) -> Result<f64> {
    let n = profile.n as f64;
    let (x, y) = (profile.x, profile.y);
    let z_norm_sq: f64 = profile.z.iter().map(|&v| v * v).sum();
    let numerator: f64 = profile.z.iter().map(|&v| (y - v) * (v - x)).sum();
    let r1 = x * x + z_norm_sq + (n + 1.0) * y * y - 2.0 * y;
    let r2 = (n + 1.0) * x * x - 2.0 * x + z_norm_sq + y * y;
    if r1 <= 0.0 {
        return Err(Error::DegenerateDenominator { value: r1 });
    }
    if r2 <= 0.0 {
        return Err(Error::DegenerateDenominator { value: r2 });
    }
    Ok((numerator / (r1.sqrt() * r2.sqrt())).clamp(-1.0, 1.0))
}

/// The optimal middle block for fixed extremes.
#[derive(Debug, Clone)]
pub struct MiddleBlock {
    pub z: Vec<f64>,
    pub z_norm_sq: f64,
}

/// The constant middle block `z = zeta * 1`, `zeta = (1 - x - y) / (n - 2)`,
/// which maximizes the reduced quotient over the feasible set for fixed
/// `(x, y)`. Feasibility of the pair means `zeta` lands in `[x, y]`,
/// equivalently `(n-1) x + y <= 1 <= x + (n-1) y`.
pub fn optimal_middle_block(n: usize, x: f64, y: f64) -> Result<MiddleBlock> {
    if n < 3 {
        return Err(Error::BadDimension { n, min: 3 });
    }
    let uniform = 1.0 / n as f64;
    if !(0.0..uniform).contains(&x) {
        return Err(Error::OutOfDomain {
            what: "x",
            value: x,
            lo: 0.0,
            hi: uniform,
        });
    }
    if !(y > uniform && y <= 1.0) {
        return Err(Error::OutOfDomain {
            what: "y",
            value: y,
            lo: uniform,
            hi: 1.0,
        });
    }
    let rest = 1.0 - x - y;
    let zeta = rest / (n as f64 - 2.0);
    if zeta < x || zeta > y {
        return Err(Error::InfeasiblePair { zeta, x, y });
    }
    Ok(MiddleBlock {
        z: vec![zeta; n - 2],
        z_norm_sq: rest * rest / (n as f64 - 2.0),
    })
}

/// `Q(y)` and its derivative at one point.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct QEval {
    pub n: usize,
    pub y: f64,
    pub q_value: f64,
    pub q_prime: f64,
}

/// Evaluate the scalar reduction
///
/// ```text
/// Q(y) = ((n-1)y - 1)^2 (1-y)^2 /
///        [((1-y)^2 + (n-2)(n+1)y^2 - 2(n-2)y) ((1-y)^2 + (n-2)y^2)]
/// ```
///
/// on its constraint interval `1/(n-1) <= y <= 1`, together with the factored
/// closed form of `Q'(y)`. `Q` is the squared spread cosine of the point
/// `(0, zeta, ..., zeta, y)` with `zeta = (1-y)/(n-2)`.
pub fn q_eval(n: usize, y: f64) -> Result<QEval> {
    if n < 3 {
        return Err(Error::BadDimension { n, min: 3 });
    }
    let nf = n as f64;
    let lo = 1.0 / (nf - 1.0);
    if !(y >= lo && y <= 1.0) {
        return Err(Error::OutOfDomain {
            what: "y",
            value: y,
            lo,
            hi: 1.0,
        });
    }
    let one_my = 1.0 - y;
    let num = ((nf - 1.0) * y - 1.0).powi(2) * one_my.powi(2);
    let d1 = one_my.powi(2) + (nf - 2.0) * (nf + 1.0) * y * y - 2.0 * (nf - 2.0) * y;
    let d2 = one_my.powi(2) + (nf - 2.0) * y * y;
    let q_value = num / (d1 * d2);

    // Factored closed form of the derivative; its denominator factors are the
    // expanded forms of d1 and d2.
    let quad = (nf - 1.0).powi(2) * y * y - nf * y + 1.0;
    let p_num =
        2.0 * (nf - 2.0) * quad * ((nf - 1.0) * y - 1.0) * (nf * y - 2.0) * (y - 1.0) * y;
    let e1 = (nf * nf - nf - 1.0) * y * y + 2.0 * (1.0 - nf) * y + 1.0;
    let e2 = (nf - 1.0) * y * y - 2.0 * y + 1.0;
    let q_prime = p_num / (e1 * e1 * e2 * e2);

    Ok(QEval {
        n,
        y,
        q_value,
        q_prime,
    })
}

/// The roots of `Q'` for dimension `n`.
#[derive(Debug, Clone, Serialize)]
pub struct QRoots {
    pub n: usize,
    /// All real roots, ascending: `0, 1/(n-1), 2/n, 1`.
    pub real_roots: [f64; 4],
    /// Discriminant `-(3n-2)(n-2)` of the remaining quadratic factor;
    /// negative for `n >= 3`, so its two roots form a complex pair.
    pub complex_pair_discriminant: f64,
}

impl QRoots {
    /// The root that maximizes `Q` on `[1/(n-1), 1]`.
    pub fn maximizer(&self) -> f64 {
        self.real_roots[2]
    }
}

/// The analytic roots of `Q'`: four real (`0`, the two constraint endpoints,
/// and the maximizer `2/n`) plus a complex pair whose discriminant is
/// reported.
pub fn q_roots(n: usize) -> Result<QRoots> {
    if n < 3 {
        return Err(Error::BadDimension { n, min: 3 });
    }
    let nf = n as f64;
    Ok(QRoots {
        n,
        real_roots: [0.0, 1.0 / (nf - 1.0), 2.0 / nf, 1.0],
        complex_pair_discriminant: -((3.0 * nf - 2.0) * (nf - 2.0)),
    })
}

/// Confirm that both denominator factors of `Q` are strictly positive on the
/// closed constraint interval, i.e. that `Q` has no singularity there.
///
/// Each factor is an upward parabola in `y`; it suffices to check the value
/// at its vertex (clamped into the interval) and at both endpoints.
pub fn q_singularity_free(n: usize) -> bool {
    if n < 3 {
        return false;
    }
    let nf = n as f64;
    let lo = 1.0 / (nf - 1.0);
    let d1 = |y: f64| (1.0 - y).powi(2) + (nf - 2.0) * (nf + 1.0) * y * y - 2.0 * (nf - 2.0) * y;
    let d2 = |y: f64| (1.0 - y).powi(2) + (nf - 2.0) * y * y;
    // Vertex of a1*y^2 + b1*y + c sits at -b/(2a).
    let v1 = (nf - 1.0) / (nf * nf - nf - 1.0);
    let v2 = 1.0 / (nf - 1.0);
    [lo, 1.0, v1.clamp(lo, 1.0)].iter().all(|&y| d1(y) > 0.0)
        && [lo, 1.0, v2.clamp(lo, 1.0)].iter().all(|&y| d2(y) > 0.0)
}
