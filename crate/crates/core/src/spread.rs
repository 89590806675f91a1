//! Maximal chords through the uniform point and the angle spread they span.
//!
//! For `p != u` the line through `u` and `p` meets the simplex boundary at
//! two points `a` and `b`; `[a, b]` is the longest segment inside the simplex
//! containing both `u` and `p`. The spread of `p` is the angle between the
//! position vectors `a` and `b`, and its cosine is maximized (the angle
//! minimized) at `(n-2)/(n+2)` over all `p`.

use serde::Serialize;

use crate::simplex::{cosine_between, SimplexPoint, UNIFORM_EPS};
use crate::{Error, Result};

/// The maximal chord `[a, b]` of the simplex through `u` and `p`.
///
/// `a` is the endpoint reached by moving from `p` through `u` (the zero lands
/// on the index of the largest coordinate of `p`); `b` is reached by moving
/// from `u` through `p` (the zero lands on the index of the smallest
/// coordinate). `lambda_minus` and `lambda_plus` are the chord parameters in
/// `q(t) = u + t (p - u)`, reported for diagnostics; the endpoints themselves
/// are computed from cancellation-free coordinate formulas.
#[derive(Debug, Clone, Serialize)]
pub struct SegmentExtension {
    pub a: SimplexPoint,
    pub b: SimplexPoint,
    pub lambda_minus: f64,
    pub lambda_plus: f64,
    pub idx_min: usize,
    pub idx_max: usize,
}

/// The spread of a point: cosine, angle, and the chord that realizes them.
#[derive(Debug, Clone, Serialize)]
pub struct SpreadResult {
    pub cosine: f64,
    pub angle_radians: f64,
    pub extension: SegmentExtension,
}

/// The closed-form minimal spread for dimension `n`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MinAngleBound {
    pub cosine: f64,
    pub angle_radians: f64,
}

/// Witnesses attaining the minimal spread: `cos_spread(p_star)` equals the
/// closed-form bound, with chord endpoints `a_star` and `b_star`.
#[derive(Debug, Clone, Serialize)]
pub struct OptimalPair {
    pub a_star: SimplexPoint,
    pub b_star: SimplexPoint,
    pub p_star: SimplexPoint,
}

/// Compute the maximal chord of the simplex through `u` and `p`.
///
/// The endpoints are built from `a_i = (p_max - p_i) / (n p_max - 1)` and
/// `b_i = (p_i - p_min) / (1 - n p_min)`, which stay accurate for `p` close
/// to `u` where the equivalent `u + lambda (p - u)` form multiplies a huge
/// `lambda` by a tiny direction.
pub fn extend_segment(p: &SimplexPoint) -> Result<SegmentExtension> {
    if p.is_uniform(UNIFORM_EPS) {
        return Err(Error::UniformInput { eps: UNIFORM_EPS });
    }
    let coords = p.coords();
    let n = p.dim() as f64;
    let idx_min = p.argmin();
    let idx_max = p.argmax();
    let p_min = coords[idx_min];
    let p_max = coords[idx_max];

    let lambda_minus = 1.0 / (1.0 - n * p_max);
    let lambda_plus = 1.0 / (1.0 - n * p_min);

    let down = n * p_max - 1.0; // > 0 since p_max > 1/n
    let up = 1.0 - n * p_min; // > 0 since p_min < 1/n
    let a_raw: Vec<f64> = coords.iter().map(|&pi| (p_max - pi) / down).collect();
    let b_raw: Vec<f64> = coords.iter().map(|&pi| (pi - p_min) / up).collect();

    // The raw sums equal 1 up to the residual of p's own normalization, which
    // the divisor can amplify when p sits close to u; divide it out before the
    // sum-tolerance gate in SimplexPoint::new.
    let a = SimplexPoint::new(&normalized(a_raw))?;
    let b = SimplexPoint::new(&normalized(b_raw))?;

    Ok(SegmentExtension {
        a,
        b,
        lambda_minus,
        lambda_plus,
        idx_min,
        idx_max,
    })
}

fn normalized(mut v: Vec<f64>) -> Vec<f64> {
    let total: f64 = v.iter().sum();
    for c in &mut v {
        *c /= total;
    }
    v
}

/// Cosine and angle of the spread of `p`, i.e. of its maximal chord.
pub fn cos_spread(p: &SimplexPoint) -> Result<SpreadResult> {
    let extension = extend_segment(p)?;
    let cosine = cosine_between(extension.a.coords(), extension.b.coords())?;
    Ok(SpreadResult {
        cosine,
        angle_radians: cosine.acos(),
        extension,
    })
}

/// The closed-form minimal spread `arccos((n-2)/(n+2))` for `n >= 3`.
///
/// In dimension 2 every non-uniform point spans the whole simplex and the
/// spread is constantly `pi/2`; that degenerate value is only returned when
/// the caller opts in via `allow_n2`, otherwise `n < 3` is rejected.
pub fn min_angle_bound(n: usize, allow_n2: bool) -> Result<MinAngleBound> {
    if n == 2 && allow_n2 {
        return Ok(MinAngleBound {
            cosine: 0.0,
            angle_radians: std::f64::consts::FRAC_PI_2,
        });
    }
    if n < 3 {
        return Err(Error::BadDimension { n, min: 3 });
    }
    let cosine = (n as f64 - 2.0) / (n as f64 + 2.0);
    Ok(MinAngleBound {
        cosine,
        angle_radians: cosine.acos(),
    })
}

/// The witnesses of the minimal spread:
/// `a* = (2, 1, ..., 1, 0) / n`, `b* = p* = (0, 1, ..., 1, 2) / n`.
pub fn optimal_pair(n: usize) -> Result<OptimalPair> {
    if n < 3 {
        return Err(Error::BadDimension { n, min: 3 });
    }
    let nf = n as f64;
    let mut a = vec![1.0 / nf; n];
    a[0] = 2.0 / nf;
    a[n - 1] = 0.0;
    let mut b = vec![1.0 / nf; n];
    b[0] = 0.0;
    b[n - 1] = 2.0 / nf;
    let b_star = SimplexPoint::from_normalized(b);
    Ok(OptimalPair {
        a_star: SimplexPoint::from_normalized(a),
        p_star: b_star.clone(),
        b_star,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point(coords: &[f64]) -> SimplexPoint {
        SimplexPoint::new(coords).unwrap()
    }

    fn assert_close(actual: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(actual.len(), expected.len());
        for (i, (&a, &e)) in actual.iter().zip(expected).enumerate() {
            assert!(
                (a - e).abs() <= tol,
                "coordinate {i}: {a} vs {e} (tol {tol})"
            );
        }
    }

    #[test]
    fn extends_interior_point() {
        // Expected chord confirmed by the boundary line-search oracle in the
        // integration tests; values frozen here.
        let ext = extend_segment(&point(&[0.2, 0.3, 0.5])).unwrap();
        assert_close(ext.a.coords(), &[0.6, 0.4, 0.0], 1e-12);
        assert_close(ext.b.coords(), &[0.0, 0.25, 0.75], 1e-12);
        assert!((ext.lambda_minus + 2.0).abs() < 1e-12);
        assert!((ext.lambda_plus - 2.5).abs() < 1e-12);
        assert_eq!(ext.idx_min, 0);
        assert_eq!(ext.idx_max, 2);
    }

    #[test]
    fn boundary_point_extends_to_itself_on_one_side() {
        let third = 1.0 / 3.0;
        let p = point(&[0.0, third, 2.0 * third]);
        let ext = extend_segment(&p).unwrap();
        assert_close(ext.a.coords(), &[2.0 * third, third, 0.0], 1e-15);
        assert_close(ext.b.coords(), p.coords(), 1e-15);
    }

    #[test]
    fn uniform_point_is_rejected() {
        let u = SimplexPoint::uniform(3).unwrap();
        assert!(matches!(
            extend_segment(&u),
            Err(Error::UniformInput { .. })
        ));
        assert!(matches!(cos_spread(&u), Err(Error::UniformInput { .. })));
    }

    #[test]
    fn zero_coordinates_of_endpoints_are_exact() {
        let ext = extend_segment(&point(&[0.1, 0.25, 0.25, 0.4])).unwrap();
        assert_eq!(ext.a.coords()[ext.idx_max], 0.0);
        assert_eq!(ext.b.coords()[ext.idx_min], 0.0);
    }

    #[test]
    fn spread_of_witness_is_one_fifth() {
        let third = 1.0 / 3.0;
        let spread = cos_spread(&point(&[0.0, third, 2.0 * third])).unwrap();
        assert!((spread.cosine - 0.2).abs() < 1e-15);
        assert!((spread.angle_radians - 0.2f64.acos()).abs() < 1e-15);
    }

    #[test]
    fn spread_of_interior_point_matches_frozen_value() {
        // 0.1 / sqrt(0.325), confirmed against the reduced-quotient route.
        let spread = cos_spread(&point(&[0.2, 0.3, 0.5])).unwrap();
        assert!((spread.cosine - 0.175_411_603_861_405_83).abs() < 1e-12);
    }

    #[test]
    fn spread_of_five_dimensional_witness_is_three_sevenths() {
        let p = point(&[0.4, 0.2, 0.2, 0.2, 0.0]);
        let spread = cos_spread(&p).unwrap();
        assert!((spread.cosine - 3.0 / 7.0).abs() < 1e-14);
    }

    #[test]
    fn angle_is_arccos_of_cosine() {
        let spread = cos_spread(&point(&[0.05, 0.3, 0.65])).unwrap();
        assert!((spread.angle_radians - spread.cosine.acos()).abs() <= 1e-12);
    }

    #[test]
    fn two_dimensional_chord_is_the_whole_simplex() {
        let spread = cos_spread(&point(&[0.3, 0.7])).unwrap();
        assert_eq!(spread.cosine, 0.0);
        assert_close(spread.extension.a.coords(), &[1.0, 0.0], 1e-15);
        assert_close(spread.extension.b.coords(), &[0.0, 1.0], 1e-15);
    }

    #[test]
    fn bound_values() {
        let b3 = min_angle_bound(3, false).unwrap();
        assert!((b3.cosine - 0.2).abs() < 1e-15);
        assert!((b3.angle_radians - 1.369_438_406_004_566).abs() < 1e-12);

        let b4 = min_angle_bound(4, false).unwrap();
        assert!((b4.cosine - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn bound_is_strictly_increasing_in_dimension() {
        for n in 3..100 {
            let lo = min_angle_bound(n, false).unwrap();
            let hi = min_angle_bound(n + 1, false).unwrap();
            assert!(hi.cosine > lo.cosine);
            assert!(hi.angle_radians < lo.angle_radians);
        }
    }

    #[test]
    fn bound_dimension_gate() {
        assert!(matches!(
            min_angle_bound(2, false),
            Err(Error::BadDimension { n: 2, min: 3 })
        ));
        let planar = min_angle_bound(2, true).unwrap();
        assert_eq!(planar.cosine, 0.0);
        assert_eq!(planar.angle_radians, std::f64::consts::FRAC_PI_2);
        assert!(matches!(min_angle_bound(1, true), Err(Error::BadDimension { .. })));
    }

    #[test]
    fn optimal_pair_witnesses() {
        let third = 1.0 / 3.0;
        let opt = optimal_pair(3).unwrap();
        assert_close(opt.a_star.coords(), &[2.0 * third, third, 0.0], 1e-16);
        assert_close(opt.b_star.coords(), &[0.0, third, 2.0 * third], 1e-16);
        assert_eq!(opt.p_star.coords(), opt.b_star.coords());

        let opt4 = optimal_pair(4).unwrap();
        assert_close(opt4.a_star.coords(), &[0.5, 0.25, 0.25, 0.0], 1e-16);
        assert!(matches!(optimal_pair(2), Err(Error::BadDimension { .. })));
    }

    #[test]
    fn optimal_pair_attains_the_bound() {
        for n in [3usize, 4, 7, 12] {
            let opt = optimal_pair(n).unwrap();
            let spread = cos_spread(&opt.p_star).unwrap();
            let bound = min_angle_bound(n, false).unwrap();
            assert!(
                (spread.cosine - bound.cosine).abs() <= 1e-12,
                "n={n}: {} vs {}",
                spread.cosine,
                bound.cosine
            );
            // The chord of p* is the witness pair itself.
            assert_close(spread.extension.a.coords(), opt.a_star.coords(), 1e-15);
            assert_close(spread.extension.b.coords(), opt.b_star.coords(), 1e-15);
        }
    }

    #[test]
    fn tie_breaking_picks_smallest_indices() {
        let ext = extend_segment(&point(&[0.5, 0.5, 0.0, 0.0])).unwrap();
        assert_eq!(ext.idx_max, 0);
        assert_eq!(ext.idx_min, 2);
        assert_eq!(ext.a.coords()[0], 0.0);
        assert_eq!(ext.b.coords()[2], 0.0);
    }

    #[test]
    fn near_uniform_point_still_extends_cleanly() {
        // Just outside the exclusion radius; the coordinate formulas must not
        // lose the direction to cancellation.
        let t = 1e-8;
        let third = 1.0 / 3.0;
        let p = point(&[third + t, third, third - t]);
        let ext = extend_segment(&p).unwrap();
        let sum_a: f64 = ext.a.coords().iter().sum();
        let sum_b: f64 = ext.b.coords().iter().sum();
        assert!((sum_a - 1.0).abs() < 1e-9);
        assert!((sum_b - 1.0).abs() < 1e-9);
        // Direction check: b - a is parallel to p - u.
        let u = 1.0 / 3.0;
        let d: Vec<f64> = p.coords().iter().map(|&c| c - u).collect();
        let chord: Vec<f64> = ext
            .b
            .coords()
            .iter()
            .zip(ext.a.coords())
            .map(|(&bi, &ai)| bi - ai)
            .collect();
        let cos = crate::simplex::cosine_between(&chord, &d).unwrap();
        assert!((cos - 1.0).abs() < 1e-9);
    }
}
