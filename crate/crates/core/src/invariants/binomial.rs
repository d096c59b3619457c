//! Exact integer fits of eventually polynomial series in the binomial basis.

use serde::Serialize;

use crate::error::{Error, Result};

/// Number of extra points, before the interpolation window, that a fit
/// must reproduce.
pub const STABILIZATION_WINDOW: usize = 3;

/// Consecutive values `h(n0), h(n0+1), …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegerSeries {
    start: u64,
    values: Vec<u64>,
}

impl IntegerSeries {
    pub fn new(start: u64, values: Vec<u64>) -> IntegerSeries {
        IntegerSeries { start, values }
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    /// Index of the last value; `None` when empty.
    pub fn end(&self) -> Option<u64> {
        (!self.values.is_empty()).then(|| self.start + self.values.len() as u64 - 1)
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, n: u64) -> Option<u64> {
        let i = n.checked_sub(self.start)?;
        self.values.get(usize::try_from(i).ok()?).copied()
    }
}

/// `P(n) = Σ_i (-1)^i c_i C(n+s-i, s-i)` together with the least `n*` from
/// which it matched its source series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialPolynomial {
    degree: usize,
    coefficients: Vec<i64>,
    stable_from: u64,
}

impl BinomialPolynomial {
    pub fn new(coefficients: Vec<i64>, stable_from: u64) -> BinomialPolynomial {
        assert!(!coefficients.is_empty(), "at least one coefficient");
        BinomialPolynomial {
            degree: coefficients.len() - 1,
            coefficients,
            stable_from,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `c_0, …, c_s`.
    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn stable_from(&self) -> u64 {
        self.stable_from
    }

    pub fn eval(&self, n: u64) -> Result<i128> {
        let s = self.degree;
        let mut total: i128 = 0;
        for (i, &c) in self.coefficients.iter().enumerate() {
            let k = (s - i) as u64;
            let term = (c as i128)
                .checked_mul(binomial(n + k, k)?)
                .ok_or(Error::Overflow("binomial evaluation"))?;
            total = if i % 2 == 0 { total.checked_add(term) } else { total.checked_sub(term) }
                .ok_or(Error::Overflow("binomial evaluation"))?;
        }
        Ok(total)
    }
}

/// `C(n, k)` in 128-bit arithmetic.
pub fn binomial(n: u64, k: u64) -> Result<i128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for j in 0..k {
        acc = acc
            .checked_mul((n - j) as i128)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (j as i128 + 1);
    }
    Ok(acc)
}

fn not_stabilized(series: &IntegerSeries) -> Error {
    Error::NotStabilized {
        nmax: series.end().unwrap_or(series.start()),
        values: series.values().to_vec(),
    }
}

/// Fits a degree-`s` polynomial through the last `s+1` values by iterated
/// backward differences, then requires it to reproduce the preceding
/// [`STABILIZATION_WINDOW`] values.
pub fn fit_binomial(series: &IntegerSeries, s: usize) -> Result<BinomialPolynomial> {
    let len = series.len();
    if len < s + 1 + STABILIZATION_WINDOW {
        return Err(not_stabilized(series));
    }
    let first = len - 1 - s;
    let base = series.start() + first as u64;
    let mut window: Vec<i128> = series.values()[first..].iter().map(|&v| v as i128).collect();
    let mut coefficients = Vec::with_capacity(s + 1);
    for i in 0..=s {
        let k = s - i;
        // k-th backward difference at the top of the window
        let mut diff: i128 = 0;
        for j in 0..=k {
            let term = binomial(k as u64, j as u64)?
                .checked_mul(window[s - j])
                .ok_or(Error::Overflow("finite difference"))?;
            diff = if j % 2 == 0 { diff.checked_add(term) } else { diff.checked_sub(term) }
                .ok_or(Error::Overflow("finite difference"))?;
        }
        let c = if i % 2 == 0 { diff } else { -diff };
        for (p, v) in window.iter_mut().enumerate() {
            let b = binomial(base + p as u64 + k as u64, k as u64)?;
            *v = v
                .checked_sub(diff.checked_mul(b).ok_or(Error::Overflow("finite difference"))?)
                .ok_or(Error::Overflow("finite difference"))?;
        }
        coefficients.push(i64::try_from(c).map_err(|_| Error::Overflow("binomial coefficient"))?);
    }
    let mut fit = BinomialPolynomial::new(coefficients, base);
    let matches = |idx: usize| -> Result<bool> {
        Ok(fit.eval(series.start() + idx as u64)? == series.values()[idx] as i128)
    };
    for idx in first - STABILIZATION_WINDOW..first {
        if !matches(idx)? {
            return Err(not_stabilized(series));
        }
    }
    let mut from = first - STABILIZATION_WINDOW;
    while from > 0 && matches(from - 1)? {
        from -= 1;
    }
    fit.stable_from = series.start() + from as u64;
    Ok(fit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn series(f: impl Fn(u64) -> u64, n: u64) -> IntegerSeries {
        IntegerSeries::new(0, (0..=n).map(f).collect())
    }

    fn choose(n: u64, k: u64) -> u64 {
        binomial(n, k).unwrap() as u64
    }

    #[test]
    fn constant_series() {
        let fit = fit_binomial(&series(|_| 2, 6), 0).unwrap();
        assert_eq!(fit.coefficients(), [2]);
        assert_eq!(fit.stable_from(), 0);
    }

    #[test]
    fn polynomial_ring_in_two_variables() {
        let fit = fit_binomial(&series(|n| choose(n + 2, 2), 8), 2).unwrap();
        assert_eq!(fit.coefficients(), [1, 0, 0]);
    }

    #[test]
    fn shifted_binomial_with_constant() {
        // C(n+1,2) + 1 = C(n+2,2) - C(n+1,1) + 1
        let fit = fit_binomial(&series(|n| choose(n + 1, 2) + 1, 8), 2).unwrap();
        assert_eq!(fit.coefficients(), [1, 1, 1]);
        let fit = fit_binomial(&series(|n| n + 1, 8), 1).unwrap();
        assert_eq!(fit.coefficients(), [1, 0]);
    }

    #[test]
    fn late_stabilization_is_located() {
        let s = IntegerSeries::new(0, vec![9, 7, 3, 4, 5, 6, 7, 8, 9]);
        let fit = fit_binomial(&s, 1).unwrap();
        assert_eq!(fit.stable_from(), 2);
        // P(n) = n + 1 = C(n+1,1) - 0
        assert_eq!(fit.coefficients(), [1, 0]);
    }

    #[test]
    fn too_short_or_unstable() {
        let s = IntegerSeries::new(0, vec![1, 2, 3]);
        assert!(matches!(fit_binomial(&s, 1), Err(Error::NotStabilized { .. })));
        let s = IntegerSeries::new(0, vec![1, 2, 4, 8, 16, 32]);
        assert!(matches!(fit_binomial(&s, 1), Err(Error::NotStabilized { nmax: 5, .. })));
    }

    #[test]
    fn nonzero_start() {
        let s = IntegerSeries::new(5, (5..12).map(|n| 3 * n + 1).collect());
        let fit = fit_binomial(&s, 1).unwrap();
        assert_eq!(fit.stable_from(), 5);
        for n in 5..12 {
            assert_eq!(fit.eval(n).unwrap(), (3 * n + 1) as i128);
        }
    }

    proptest! {
        #[test]
        fn round_trip_and_shift_consistency(
            coeffs in proptest::collection::vec(-20i64..20, 1..5),
            noise in proptest::collection::vec(0u64..50, 0..3),
        ) {
            let s = coeffs.len() - 1;
            let mut c = coeffs.clone();
            c[0] = c[0].abs() + 1;
            let n_end = (s + 10) as u64;
            // shift the constant term so the series stays nonnegative
            let p = BinomialPolynomial::new(c.clone(), 0);
            let lift = (0..=n_end).map(|n| p.eval(n).unwrap()).min().unwrap().min(0);
            let mut shifted = c;
            shifted[s] += if s % 2 == 0 { -lift as i64 } else { lift as i64 };
            let q = BinomialPolynomial::new(shifted.clone(), 0);
            let mut vals: Vec<u64> = (0..=n_end).map(|n| q.eval(n).unwrap() as u64).collect();
            for (i, bump) in noise.iter().enumerate() {
                vals[i] += bump + 1;
            }
            let series = IntegerSeries::new(0, vals.clone());
            let fit = fit_binomial(&series, s).unwrap();
            prop_assert_eq!(fit.coefficients(), &shifted[..]);
            prop_assert_eq!(fit.stable_from(), noise.len() as u64);
            for n in fit.stable_from()..=n_end {
                prop_assert_eq!(fit.eval(n).unwrap(), vals[n as usize] as i128);
            }
            let tail = IntegerSeries::new(1, vals[1..].to_vec());
            let refit = fit_binomial(&tail, s).unwrap();
            prop_assert_eq!(refit.coefficients(), fit.coefficients());
        }
    }
}
