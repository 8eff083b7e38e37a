//! Real roots of a monic cubic x³ + b x² + c x + d.

use std::f64::consts::PI;

/// Relative band around a vanishing discriminant treated as a repeated root.
const DEGENERATE_DISCRIMINANT: f64 = 1e-12;

/// All real roots, ascending, each polished by Newton steps on the original
/// polynomial.
pub fn real_roots(b: f64, c: f64, d: f64) -> Vec<f64> {
    // x = t − b/3 gives t³ + p t + q = 0
    let shift = b / 3.0;
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);
    let band = DEGENERATE_DISCRIMINANT * ((p / 3.0).abs().powi(3) + (q / 2.0).powi(2));

    let mut roots = if p < 0.0 && disc <= band {
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        (0..3)
            .map(|k| m * (theta - 2.0 * PI * k as f64 / 3.0).cos())
            .collect::<Vec<_>>()
    } else if disc > 0.0 {
        let s = disc.sqrt();
        vec![(-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt()]
    } else {
        vec![0.0]
    };

    for t in roots.iter_mut() {
        let mut x = *t - shift;
        for _ in 0..3 {
            let f = ((x + b) * x + c) * x + d;
            let df = (3.0 * x + 2.0 * b) * x + c;
            if df == 0.0 {
                break;
            }
            let nx = x - f / df;
            if !nx.is_finite() {
                break;
            }
            x = nx;
        }
        *t = x;
    }
    roots.sort_by(f64::total_cmp);
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_roots(got: &[f64], want: &[f64]) {
        assert_eq!(got.len(), want.len(), "{got:?} vs {want:?}");
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-12, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn three_distinct_roots() {
        // (x-1)(x-2)(x+3) = x³ - 7x + 6
        assert_roots(&real_roots(0.0, -7.0, 6.0), &[-3.0, 1.0, 2.0]);
        // (x-0.5)(x+0.5)x
        assert_roots(&real_roots(0.0, -0.25, 0.0), &[-0.5, 0.0, 0.5]);
    }

    #[test]
    fn repeated_roots() {
        // (x-1)²(x+2) = x³ - 3x + 2
        let r = real_roots(0.0, -3.0, 2.0);
        assert_eq!(r.len(), 3);
        assert!((r[0] + 2.0).abs() < 1e-12);
        assert!((r[1] - 1.0).abs() < 1e-6 && (r[2] - 1.0).abs() < 1e-6);
        // (x-2)³
        let r = real_roots(-6.0, 12.0, -8.0);
        assert!(r.iter().all(|x| (x - 2.0).abs() < 1e-5), "{r:?}");
    }

    #[test]
    fn single_real_root() {
        // (x-1)(x²+1) = x³ - x² + x - 1
        assert_roots(&real_roots(-1.0, 1.0, -1.0), &[1.0]);
    }
}
