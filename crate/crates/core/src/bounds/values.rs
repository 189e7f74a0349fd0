use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Surd};

fn pow<S: Scalar>(x: &S, k: u32) -> S {
    (0..k).fold(S::one(), |acc, _| acc * x)
}

fn all_positive<S: Scalar>(xs: &[&S]) -> bool {
    xs.iter().all(|x| x.sign() == Ordering::Greater)
}

/// `(|A|^{1/d} + |B|^{1/d})^d`.
///
/// Exact for `d <= 2` (the planar value is `a + b + 2 sqrt(ab)`); higher
/// dimensions are evaluated in `f64`.
pub fn bm_bound<S: Scalar>(vol_a: &S, vol_b: &S, d: u32) -> Result<Surd<S>> {
    if d == 0 {
        return Err(Error::PreconditionViolated("dimension must be at least 1".into()));
    }
    if !all_positive(&[vol_a, vol_b]) {
        return Err(Error::NonPositiveVolume);
    }
    Ok(match d {
        1 => Surd::from_scalar(vol_a.clone() + vol_b),
        2 => Surd::new(
            vol_a.clone() + vol_b,
            S::from_int(2),
            vol_a.clone() * vol_b,
        ),
        _ => {
            let e = 1.0 / f64::from(d);
            let v = (vol_a.to_f64().powf(e) + vol_b.to_f64().powf(e)).powi(d as i32);
            Surd::from_scalar(S::approx_from_f64(v))
        }
    })
}

/// `(M^{1/(d-1)} + N^{1/(d-1)})^{d-1} (|A|/M + |B|/N)`.
///
/// Exact for `d <= 3`: rational in the plane and `k (M + N + 2 sqrt(MN))` in
/// space. `d = 1` falls back to the Brunn-Minkowski value.
pub fn bonnesen_value<S: Scalar>(vol_a: &S, vol_b: &S, m: &S, n: &S, d: u32) -> Result<Surd<S>> {
    if d <= 1 {
        return bm_bound(vol_a, vol_b, d);
    }
    if !all_positive(&[vol_a, vol_b, m, n]) {
        return Err(Error::NonPositiveInput);
    }
    let k = vol_a.clone() / m + vol_b.clone() / n;
    Ok(match d {
        2 => Surd::from_scalar((m.clone() + n) * &k),
        3 => Surd::new(
            (m.clone() + n) * &k,
            S::from_int(2) * &k,
            m.clone() * n,
        ),
        _ => {
            let e = 1.0 / f64::from(d - 1);
            let v = (m.to_f64().powf(e) + n.to_f64().powf(e)).powi(d as i32 - 1) * k.to_f64();
            Surd::from_scalar(S::approx_from_f64(v))
        }
    })
}

/// Sign of `x - y` for two surds.
///
/// Exact whenever at most one distinct radical occurs, which covers every
/// planar comparison; otherwise decided in `f64` with a relative margin of
/// `1e-12` (values closer than that compare equal).
pub fn compare_surds<S: Scalar>(x: &Surd<S>, y: &Surd<S>) -> Ordering {
    let no_root = |s: &Surd<S>| {
        s.coeff.sign() == Ordering::Equal || s.radicand.sign() == Ordering::Equal
    };
    if no_root(y) {
        return Surd::new(x.base.clone() - &y.base, x.coeff.clone(), x.radicand.clone()).sign();
    }
    if no_root(x) {
        return Surd::new(x.base.clone() - &y.base, -y.coeff.clone(), y.radicand.clone()).sign();
    }
    if x.radicand == y.radicand {
        return Surd::new(
            x.base.clone() - &y.base,
            x.coeff.clone() - &y.coeff,
            x.radicand.clone(),
        )
        .sign();
    }
    let (a, b) = (x.to_f64(), y.to_f64());
    let margin = 1e-12 * a.abs().max(b.abs()).max(1.0);
    if a > b + margin {
        Ordering::Greater
    } else if a < b - margin {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

/// `(bonnesen >= brunn_minkowski, equality condition holds)`.
///
/// The two bounds coincide exactly when `M |B|^{(d-1)/d} = N |A|^{(d-1)/d}`,
/// tested in the root-free form `M^d |B|^{d-1} = N^d |A|^{d-1}`.
pub fn refinement_compare<S: Scalar>(
    vol_a: &S,
    vol_b: &S,
    m: &S,
    n: &S,
    d: u32,
) -> Result<(bool, bool)> {
    let bm = bm_bound(vol_a, vol_b, d)?;
    let bon = bonnesen_value(vol_a, vol_b, m, n, d)?;
    let dominates = compare_surds(&bon, &bm) != Ordering::Less;
    if d <= 1 {
        return Ok((dominates, true));
    }
    let lhs = pow(m, d) * pow(vol_b, d - 1);
    let rhs = pow(n, d) * pow(vol_a, d - 1);
    Ok((dominates, lhs.tol_eq(&rhs)))
}
