//! The AR(p)-error regression model: backshift filtering, residuals,
//! innovations, and the normal and Student-t conditional log-likelihoods.
//!
//! The first p observations are always conditioned on, never modeled, so the
//! effective sample size is T = N - p throughout.

use nalgebra::{DMatrix, DVector};

use crate::data::ParameterState;
use crate::error::{Error, Result};
use crate::special::ln_gamma;

/// Applies the AR filter: out[k] = series[p+k] - sum_j phi[j] * series[p+k-j].
///
/// The first p entries of the series are consumed as lags, so the output has
/// length N - p.
pub fn ar_filter(series: &[f64], phi: &[f64]) -> Result<Vec<f64>> {
    let p = phi.len();
    if series.len() <= p && p > 0 {
        return Err(Error::Dimension(format!(
            "series of length {} cannot be filtered at AR order {}",
            series.len(),
            p
        )));
    }
    let t_len = series.len() - p;
    let mut out = Vec::with_capacity(t_len);
    for k in 0..t_len {
        let mut v = series[p + k];
        for (j, &c) in phi.iter().enumerate() {
            v -= c * series[p + k - j - 1];
        }
        out.push(v);
    }
    Ok(out)
}

/// Filters a column in place into `out` without allocating.
pub(crate) fn ar_filter_into(series: &[f64], phi: &[f64], out: &mut [f64]) {
    let p = phi.len();
    debug_assert_eq!(out.len(), series.len() - p);
    for (k, slot) in out.iter_mut().enumerate() {
        let mut v = series[p + k];
        for (j, &c) in phi.iter().enumerate() {
            v -= c * series[p + k - j - 1];
        }
        *slot = v;
    }
}

/// Filters the response and every design column with the same AR polynomial,
/// producing the transformed regression problem on T = N - p rows.
pub fn filter_design(
    y: &DVector<f64>,
    design: &DMatrix<f64>,
    phi: &[f64],
) -> Result<(DVector<f64>, DMatrix<f64>)> {
    let p = phi.len();
    let n = y.len();
    if n <= p {
        return Err(Error::Dimension(format!(
            "N = {n} must exceed AR order {p}"
        )));
    }
    let t_len = n - p;
    let fy = DVector::from_vec(ar_filter(y.as_slice(), phi)?);
    let mut fx = DMatrix::zeros(t_len, design.ncols());
    for j in 0..design.ncols() {
        let col: Vec<f64> = design.column(j).iter().copied().collect();
        let mut out = vec![0.0; t_len];
        ar_filter_into(&col, phi, &mut out);
        fx.column_mut(j).copy_from_slice(&out);
    }
    Ok((fy, fx))
}

/// Regression residuals e_t = y_t - x_t' beta over all N observations.
pub fn residuals(y: &DVector<f64>, design: &DMatrix<f64>, beta: &DVector<f64>) -> Result<DVector<f64>> {
    if design.ncols() != beta.len() {
        return Err(Error::Dimension(format!(
            "design has {} columns but beta has {} entries",
            design.ncols(),
            beta.len()
        )));
    }
    if design.nrows() != y.len() {
        return Err(Error::Dimension(format!(
            "design has {} rows but response has {}",
            design.nrows(),
            y.len()
        )));
    }
    Ok(y - design * beta)
}

/// Whitened innovations a_t = e_t - sum_j phi_j e_{t-j}, length T = N - p.
pub fn innovations(
    y: &DVector<f64>,
    design: &DMatrix<f64>,
    beta: &DVector<f64>,
    phi: &[f64],
) -> Result<Vec<f64>> {
    let e = residuals(y, design, beta)?;
    ar_filter(e.as_slice(), phi)
}

/// Log of the t-density normalizing constant,
/// c_nu = Gamma((nu+1)/2) nu^{nu/2} / (sqrt(pi) Gamma(nu/2)),
/// evaluated in log space so large nu does not overflow.
pub fn ln_c_nu(nu: f64) -> f64 {
    assert!(nu > 0.0, "nu must be positive");
    ln_gamma((nu + 1.0) / 2.0) + 0.5 * nu * nu.ln()
        - 0.5 * std::f64::consts::PI.ln()
        - ln_gamma(nu / 2.0)
}

/// Normalizing terms of the t density for a given nu.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TLikelihoodTerms {
    pub c_nu: f64,
    pub log_c_nu: f64,
}

impl TLikelihoodTerms {
    pub fn new(nu: f64) -> Self {
        let log_c_nu = ln_c_nu(nu);
        Self { c_nu: log_c_nu.exp(), log_c_nu }
    }
}

/// Conditional normal log-likelihood of the innovations, constant included:
/// -(T/2) ln(2 pi) - (T/2) ln sigma2 - (1/(2 sigma2)) sum a_t^2.
pub fn normal_loglik_innovations(a: &[f64], sigma2: f64) -> Result<f64> {
    if !(sigma2 > 0.0) {
        return Err(Error::InvalidModel(format!("sigma2 must be positive, got {sigma2}")));
    }
    let t_len = a.len() as f64;
    let ss: f64 = a.iter().map(|v| v * v).sum();
    Ok(-0.5 * t_len * (2.0 * std::f64::consts::PI).ln() - 0.5 * t_len * sigma2.ln()
        - 0.5 * ss / sigma2)
}

/// Conditional t log-likelihood of the innovations:
/// T ln c_nu - (T/2) ln sigma2 - ((nu+1)/2) sum ln[nu + a_t^2 / sigma2].
pub fn t_loglik_innovations(a: &[f64], sigma2: f64, nu: f64) -> Result<f64> {
    if !(sigma2 > 0.0) {
        return Err(Error::InvalidModel(format!("sigma2 must be positive, got {sigma2}")));
    }
    if !(nu > 0.0) {
        return Err(Error::InvalidModel(format!("nu must be positive, got {nu}")));
    }
    let t_len = a.len() as f64;
    let mut sum = 0.0;
    for &v in a {
        sum += (nu + v * v / sigma2).ln();
    }
    Ok(t_len * ln_c_nu(nu) - 0.5 * t_len * sigma2.ln() - 0.5 * (nu + 1.0) * sum)
}

/// Normal conditional log-likelihood at a parameter state.
pub fn normal_loglik(
    y: &DVector<f64>,
    design: &DMatrix<f64>,
    state: &ParameterState,
) -> Result<f64> {
    let a = innovations(y, design, &state.beta, state.phi.as_slice())?;
    normal_loglik_innovations(&a, state.sigma2)
}

/// Student-t conditional log-likelihood at a parameter state.
pub fn t_loglik(y: &DVector<f64>, design: &DMatrix<f64>, state: &ParameterState) -> Result<f64> {
    let nu = state
        .nu
        .ok_or_else(|| Error::InvalidModel("t likelihood requires nu".into()))?;
    let a = innovations(y, design, &state.beta, state.phi.as_slice())?;
    t_loglik_innovations(&a, state.sigma2, nu)
}

/// Analytic gradient of the t log-likelihood with respect to
/// (beta, phi, sigma2), in that order. nu is held fixed.
pub fn t_loglik_grad(
    y: &DVector<f64>,
    design: &DMatrix<f64>,
    state: &ParameterState,
) -> Result<DVector<f64>> {
    let nu = state
        .nu
        .ok_or_else(|| Error::InvalidModel("t likelihood requires nu".into()))?;
    let sigma2 = state.sigma2;
    if !(sigma2 > 0.0) || !(nu > 0.0) {
        return Err(Error::InvalidModel("sigma2 and nu must be positive".into()));
    }
    let p = state.phi.len();
    let m = design.ncols();
    let e = residuals(y, design, &state.beta)?;
    let a = ar_filter(e.as_slice(), state.phi.as_slice())?;
    let (_, fx) = filter_design(y, design, state.phi.as_slice())?;
    let t_len = a.len();

    let mut grad = DVector::zeros(m + p + 1);
    let mut sum_sigma = 0.0;
    for (k, &ak) in a.iter().enumerate() {
        let d = nu + ak * ak / sigma2;
        let w = ak / d;
        // d a_t / d beta_i = -filtered x_{t,i}
        for i in 0..m {
            grad[i] += w * fx[(k, i)];
        }
        // d a_t / d phi_j = -e_{t-j}
        for j in 0..p {
            grad[m + j] += w * e[p + k - j - 1];
        }
        sum_sigma += ak * ak / d;
    }
    let scale = (nu + 1.0) / sigma2;
    for i in 0..m + p {
        grad[i] *= scale;
    }
    grad[m + p] = -0.5 * t_len as f64 / sigma2 + 0.5 * (nu + 1.0) / (sigma2 * sigma2) * sum_sigma;
    Ok(grad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn ar_filter_identity_at_p0() {
        assert_eq!(ar_filter(&[1.0, 2.0, 3.0], &[]).unwrap(), vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn ar_filter_hand_values() {
        let out = ar_filter(&[1.0, 2.0, 3.0], &[0.5]).unwrap();
        assert_relative_eq!(out[0], 1.5);
        assert_relative_eq!(out[1], 2.0);
        let out = ar_filter(&[1.0, 2.0, 3.0, 4.0], &[0.8, -0.2]).unwrap();
        assert_relative_eq!(out[0], 1.6, epsilon = 1e-12);
        assert_relative_eq!(out[1], 2.0, epsilon = 1e-12);
    }

    #[test]
    fn ar_filter_rejects_short_series() {
        assert!(ar_filter(&[1.0], &[0.5, 0.2]).is_err());
    }

    #[test]
    fn residuals_hand_values() {
        let y = DVector::from_vec(vec![3.0, 5.0]);
        let x = DMatrix::from_vec(2, 1, vec![1.0, 2.0]);
        let e = residuals(&y, &x, &DVector::from_vec(vec![2.0])).unwrap();
        assert_eq!(e.as_slice(), &[1.0, 1.0]);

        let zero = residuals(
            &DVector::zeros(2),
            &DMatrix::from_element(2, 1, 1.0),
            &DVector::zeros(1),
        )
        .unwrap();
        assert!(zero.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn residuals_exact_fit_is_zero() {
        let x = DMatrix::from_vec(3, 1, vec![1.0, 2.0, 3.0]);
        let beta = DVector::from_vec(vec![0.7]);
        let y = &x * &beta;
        let e = residuals(&y, &x, &beta).unwrap();
        assert!(e.iter().all(|&v| v.abs() < 1e-15));
    }

    #[test]
    fn residuals_dimension_error() {
        let y = DVector::zeros(2);
        let x = DMatrix::zeros(2, 2);
        assert!(residuals(&y, &x, &DVector::zeros(1)).is_err());
    }

    #[test]
    fn innovations_two_routes_agree() {
        // filter-then-subtract vs subtract-then-filter
        let y = DVector::from_vec(vec![1.0, 2.0, -1.0, 0.5, 3.0]);
        let x = DMatrix::from_vec(5, 2, vec![1.0, 0.3, -2.0, 1.1, 0.9, 0.2, 2.0, -0.4, 0.6, 1.5]);
        let beta = DVector::from_vec(vec![0.4, -1.2]);
        let phi = [0.8, -0.2];

        let a1 = innovations(&y, &x, &beta, &phi).unwrap();
        let (fy, fx) = filter_design(&y, &x, &phi).unwrap();
        let a2 = &fy - &fx * &beta;
        for (u, v) in a1.iter().zip(a2.iter()) {
            assert_relative_eq!(u, v, epsilon = 1e-12);
        }
    }

    #[test]
    fn innovations_p0_equal_residuals() {
        let y = DVector::from_vec(vec![1.0, 4.0]);
        let x = DMatrix::from_vec(2, 1, vec![1.0, 2.0]);
        let beta = DVector::from_vec(vec![1.0]);
        let a = innovations(&y, &x, &beta, &[]).unwrap();
        let e = residuals(&y, &x, &beta).unwrap();
        assert_eq!(a.as_slice(), e.as_slice());
    }

    #[test]
    fn innovations_hand_value() {
        // e = [1, 2, 3], phi = 0.5 -> a = [1.5, 2.0]
        let y = DVector::from_vec(vec![1.0, 2.0, 3.0]);
        let x = DMatrix::from_element(3, 1, 0.0);
        let a = innovations(&y, &x, &DVector::zeros(1), &[0.5]).unwrap();
        assert_eq!(a, vec![1.5, 2.0]);
    }

    #[test]
    fn normal_loglik_single_point() {
        let ll = normal_loglik_innovations(&[0.0], 1.0).unwrap();
        assert_relative_eq!(ll, -0.5 * (2.0 * std::f64::consts::PI).ln(), epsilon = 1e-12);
        assert_relative_eq!(ll, -0.918_938_533_204_672_7, epsilon = 1e-10);
    }

    #[test]
    fn normal_loglik_sigma_doubling() {
        let a = [0.0, 0.0, 0.0];
        let l1 = normal_loglik_innovations(&a, 1.0).unwrap();
        let l2 = normal_loglik_innovations(&a, 2.0).unwrap();
        assert_relative_eq!(l1 - l2, 1.5 * 2.0_f64.ln(), epsilon = 1e-12);
    }

    #[test]
    fn normal_loglik_matches_density_sum() {
        // independent oracle: sum of ln N(a_t; 0, sigma2)
        let a = [0.3, -1.2, 0.7, 2.4, -0.1];
        let sigma2 = 1.7;
        let oracle: f64 = a
            .iter()
            .map(|&v| {
                -0.5 * (2.0 * std::f64::consts::PI * sigma2).ln() - v * v / (2.0 * sigma2)
            })
            .sum();
        let ll = normal_loglik_innovations(&a, sigma2).unwrap();
        assert_relative_eq!(ll, oracle, epsilon = 1e-10);
    }

    #[test]
    fn normal_loglik_rejects_bad_sigma() {
        assert!(normal_loglik_innovations(&[0.0], 0.0).is_err());
        assert!(normal_loglik_innovations(&[0.0], -1.0).is_err());
    }

    #[test]
    fn t_loglik_cauchy_at_zero() {
        let ll = t_loglik_innovations(&[0.0], 1.0, 1.0).unwrap();
        assert_relative_eq!(ll, (1.0 / std::f64::consts::PI).ln(), epsilon = 1e-12);
        assert_relative_eq!(ll, -1.144_729_885_849_400_2, epsilon = 1e-10);
    }

    #[test]
    fn t_loglik_matches_density_sum() {
        // location-scale t density oracle via ln_gamma
        let a = [0.6, -0.9, 1.8, 0.05];
        let sigma2: f64 = 0.8;
        let nu: f64 = 4.5;
        let sigma = sigma2.sqrt();
        let oracle: f64 = a
            .iter()
            .map(|&v| {
                let z = v / sigma;
                ln_gamma((nu + 1.0) / 2.0)
                    - ln_gamma(nu / 2.0)
                    - 0.5 * (nu * std::f64::consts::PI).ln()
                    - sigma.ln()
                    - 0.5 * (nu + 1.0) * (1.0 + z * z / nu).ln()
            })
            .sum();
        let ll = t_loglik_innovations(&a, sigma2, nu).unwrap();
        assert_relative_eq!(ll, oracle, epsilon = 1e-10);
    }

    #[test]
    fn t_loglik_normal_limit() {
        let a = [0.4, -1.1, 0.9, 2.2, -0.3, 0.8];
        let ll_t = t_loglik_innovations(&a, 1.3, 1e6).unwrap();
        let ll_n = normal_loglik_innovations(&a, 1.3).unwrap();
        assert!((ll_t - ll_n).abs() / a.len() as f64 < 1e-4);
    }

    #[test]
    fn t_loglik_grad_matches_finite_differences() {
        let y = DVector::from_vec(vec![0.5, 1.9, -0.7, 2.2, 0.1, -1.4, 0.9, 1.1]);
        let x = DMatrix::from_fn(8, 2, |i, j| ((i * 3 + j * 7) % 5) as f64 * 0.4 - 1.0);
        let mut seed = 12345u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        for _ in 0..10 {
            let state = ParameterState::new(
                DVector::from_vec(vec![next(), next()]),
                DVector::from_vec(vec![0.6 * next()]),
                0.5 + next().abs() + 0.2,
                Some(3.0 + 2.0 * next().abs()),
            );
            let grad = t_loglik_grad(&y, &x, &state).unwrap();
            let h = 1e-6;
            let mut idx = 0;
            let mut check = |fd: f64| {
                let g = grad[idx];
                let denom = g.abs().max(fd.abs()).max(1e-8);
                assert!(
                    (g - fd).abs() / denom < 1e-5,
                    "component {idx}: analytic {g} vs fd {fd}"
                );
                idx += 1;
            };
            for i in 0..2 {
                let mut up = state.clone();
                up.beta[i] += h;
                let mut dn = state.clone();
                dn.beta[i] -= h;
                check((t_loglik(&y, &x, &up).unwrap() - t_loglik(&y, &x, &dn).unwrap()) / (2.0 * h));
            }
            let mut up = state.clone();
            up.phi[0] += h;
            let mut dn = state.clone();
            dn.phi[0] -= h;
            check((t_loglik(&y, &x, &up).unwrap() - t_loglik(&y, &x, &dn).unwrap()) / (2.0 * h));
            let mut up = state.clone();
            up.sigma2 += h;
            let mut dn = state.clone();
            dn.sigma2 -= h;
            check((t_loglik(&y, &x, &up).unwrap() - t_loglik(&y, &x, &dn).unwrap()) / (2.0 * h));
        }
    }

    #[test]
    fn ln_c_nu_positive_finite_over_range() {
        for &nu in &[1e-2, 0.5, 1.0, 3.0, 10.0, 100.0, 1000.0] {
            let v = ln_c_nu(nu);
            assert!(v.is_finite());
            assert!(TLikelihoodTerms::new(nu).c_nu > 0.0);
        }
    }

    proptest! {
        #[test]
        fn ar_filter_is_linear(
            u in proptest::collection::vec(-10.0f64..10.0, 6),
            v in proptest::collection::vec(-10.0f64..10.0, 6),
            a in -3.0f64..3.0,
            b in -3.0f64..3.0,
            phi1 in -0.95f64..0.95,
            phi2 in -0.5f64..0.5,
        ) {
            let phi = [phi1, phi2];
            let combo: Vec<f64> = u.iter().zip(&v).map(|(x, y)| a * x + b * y).collect();
            let lhs = ar_filter(&combo, &phi).unwrap();
            let fu = ar_filter(&u, &phi).unwrap();
            let fv = ar_filter(&v, &phi).unwrap();
            for k in 0..lhs.len() {
                prop_assert!((lhs[k] - (a * fu[k] + b * fv[k])).abs() < 1e-12 * (1.0 + lhs[k].abs()));
            }
        }
    }
}
