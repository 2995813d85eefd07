//! Quadratic root extraction without catastrophic cancellation.
//!
//! The larger-magnitude root comes from `q = -(b + sign(b) sqrt(disc)) / 2`,
//! the other from the product of the roots `c / q`.

use num_complex::Complex64;

/// Real roots of `a t^2 + b t + c`, ascending. A double root is returned
/// twice. `None` when the discriminant is negative or `a == 0`.
pub fn real_roots(a: f64, b: f64, c: f64) -> Option<(f64, f64)> {
    if a == 0.0 {
        return None;
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return None;
    }
    let q = -0.5 * (b + disc.sqrt().copysign(b));
    if q == 0.0 {
        // b == 0 and c == 0.
        return Some((0.0, 0.0));
    }
    let r0 = q / a;
    let r1 = c / q;
    Some((r0.min(r1), r0.max(r1)))
}

/// Both complex roots of `a z^2 + b z + c` with `a != 0`; the first has the
/// larger magnitude.
pub fn complex_roots(a: Complex64, b: Complex64, c: Complex64) -> (Complex64, Complex64) {
    let disc = b * b - 4.0 * a * c;
    let mut s = disc.sqrt();
    // Pick the branch that adds to b rather than cancelling it.
    if (b.conj() * s).re < 0.0 {
        s = -s;
    }
    let q = -0.5 * (b + s);
    if q == Complex64::new(0.0, 0.0) {
        return (q, q);
    }
    (q / a, c / q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_roots_basic() {
        assert_eq!(real_roots(1.0, -3.0, 2.0), Some((1.0, 2.0)));
        assert_eq!(real_roots(1.0, 0.0, 1.0), None);
        assert_eq!(real_roots(0.0, 1.0, 1.0), None);
        assert_eq!(real_roots(2.0, 0.0, 0.0), Some((0.0, 0.0)));
    }

    #[test]
    fn real_roots_avoid_cancellation() {
        // Roots 1e-9 and 1e9: the naive formula loses the small one.
        let (r0, r1) = real_roots(1.0, -(1e9 + 1e-9), 1.0).unwrap();
        assert!((r0 - 1e-9).abs() < 1e-24);
        assert!((r1 - 1e9).abs() < 1e-6);
    }

    #[test]
    fn complex_roots_match_expansion() {
        let (z1, z2) = (Complex64::new(0.3, -1.2), Complex64::new(-2.0, 0.25));
        let a = Complex64::new(1.5, 0.5);
        let b = -a * (z1 + z2);
        let c = a * z1 * z2;
        let (r1, r2) = complex_roots(a, b, c);
        let ok = ((r1 - z1).norm() < 1e-14 && (r2 - z2).norm() < 1e-14)
            || ((r1 - z2).norm() < 1e-14 && (r2 - z1).norm() < 1e-14);
        assert!(ok, "{r1} {r2}");
    }

    #[test]
    fn complex_double_root_at_zero() {
        let zero = Complex64::new(0.0, 0.0);
        assert_eq!(
            complex_roots(Complex64::new(3.0, 0.0), zero, zero),
            (zero, zero)
        );
    }
}
