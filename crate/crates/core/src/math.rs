//! Scalar helpers and bracketed root finding.
//!
//! `core` has no transcendental functions, so everything goes through `libm`.

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn cbrt(x: f64) -> f64 {
    libm::cbrt(x)
}

#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

#[inline]
pub fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

pub fn powi(mut base: f64, mut exp: u32) -> f64 {
    let mut acc = 1.0;
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= base;
        }
        base *= base;
        exp >>= 1;
    }
    acc
}

pub const PI: f64 = core::f64::consts::PI;

/// A root located inside a sign-change bracket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
    pub iterations: usize,
}

/// Bisection on `[lo, hi]` where `f(lo)` and `f(hi)` have opposite signs (or one is zero),
/// down to a bracket of width `tol`, followed by up to three Newton steps that are only
/// accepted when they stay inside the bracket and shrink `|f|`.
pub fn bisect(f: &mut impl FnMut(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> Root {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Root {
            value: lo,
            lo,
            hi: lo,
            iterations: 0,
        };
    }
    if fhi == 0.0 {
        return Root {
            value: hi,
            lo: hi,
            hi,
            iterations: 0,
        };
    }
    let mut iterations = 0;
    while hi - lo > tol && iterations < 200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        iterations += 1;
        if fm == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    let (blo, bhi) = (lo, hi);
    let mut x = 0.5 * (lo + hi);
    let mut fx = f(x);
    for _ in 0..3 {
        if fx == 0.0 {
            break;
        }
        let h = 1e-7 * (1.0 + x.abs());
        let d = (f(x + h) - f(x - h)) / (2.0 * h);
        if !d.is_finite() || d == 0.0 {
            break;
        }
        let next = x - fx / d;
        if !(next >= blo && next <= bhi) {
            break;
        }
        let fnext = f(next);
        iterations += 1;
        if fnext.abs() < fx.abs() {
            x = next;
            fx = fnext;
        } else {
            break;
        }
    }
    Root {
        value: x,
        lo: blo,
        hi: bhi,
        iterations,
    }
}

/// Largest root of `f` in `(lo, hi]`, found by scanning downward from `hi` in `steps`
/// equal slices until a sign change appears, then bisecting that slice.
///
/// Returns `None` when no sign change is seen. Tangential roots are not detected.
pub fn largest_root(
    mut f: impl FnMut(f64) -> f64,
    lo: f64,
    hi: f64,
    steps: usize,
    tol: f64,
) -> Option<Root> {
    let h = (hi - lo) / steps as f64;
    let mut right = hi;
    let mut fr = f(right);
    if fr == 0.0 {
        return Some(Root {
            value: hi,
            lo: hi,
            hi,
            iterations: 0,
        });
    }
    for k in 1..=steps {
        let left = if k == steps { lo } else { hi - h * k as f64 };
        let fl = f(left);
        if fl == 0.0 {
            if k == steps {
                return None;
            }
            return Some(Root {
                value: left,
                lo: left,
                hi: left,
                iterations: 0,
            });
        }
        if fl.is_finite() && fr.is_finite() && (fl < 0.0) != (fr < 0.0) {
            return Some(bisect(&mut f, left, right, tol));
        }
        right = left;
        fr = fl;
    }
    None
}

/// Smallest root of `f` in `[lo, hi)`, scanning upward.
pub fn smallest_root(
    mut f: impl FnMut(f64) -> f64,
    lo: f64,
    hi: f64,
    steps: usize,
    tol: f64,
) -> Option<Root> {
    let h = (hi - lo) / steps as f64;
    let mut left = lo;
    let mut fl = f(left);
    for k in 1..=steps {
        let right = if k == steps { hi } else { lo + h * k as f64 };
        let fr = f(right);
        if fl.is_finite() && fr.is_finite() && (fl < 0.0) != (fr < 0.0) {
            return Some(bisect(&mut f, left, right, tol));
        }
        left = right;
        fl = fr;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn largest_root_skips_interior_roots() {
        // (x-1)(x-2)(x-3): largest root 3.
        let r = largest_root(
            |x| (x - 1.0) * (x - 2.0) * (x - 3.0),
            0.0,
            10.0,
            1000,
            1e-13,
        )
        .unwrap();
        assert!((r.value - 3.0).abs() < 1e-12);
        assert!(r.lo <= 3.0 && 3.0 <= r.hi);
    }

    #[test]
    fn smallest_root_picks_first_sign_change() {
        let r = smallest_root(|x| (x - 0.25) * (x - 0.75), 0.0, 1.0, 100, 1e-14).unwrap();
        assert!((r.value - 0.25).abs() < 1e-12);
    }

    #[test]
    fn no_sign_change_gives_none() {
        assert!(largest_root(|x| x * x + 1.0, -5.0, 5.0, 100, 1e-12).is_none());
    }

    #[test]
    fn powi_matches_repeated_multiplication() {
        assert_eq!(powi(2.0, 10), 1024.0);
        assert_eq!(powi(1.5, 0), 1.0);
        assert!((powi(1.1, 7) - 1.1f64.powi(7)).abs() < 1e-14);
    }
}
