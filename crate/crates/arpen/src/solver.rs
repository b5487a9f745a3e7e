//! The two estimation engines: the normal-error LQA iterator and the
//! Student-t ECM algorithm, sharing the phi and sigma^2 update machinery.
//!
//! Both engines cycle through closed-form block updates until the parameter
//! change drops below `eta`. Coefficients whose magnitude falls below
//! `prune_eps` are fixed at exact zero and never re-enter within a fit. For
//! the t family the E-step weights S1 downweight outlying innovations, which
//! is where the robustness comes from.

use nalgebra::{DMatrix, DVector};

use crate::data::{ErrorFamily, ModelSpec, ParameterState, TimeSeriesDataset};
use crate::error::{Error, Result};
use crate::model::{
    ar_filter, filter_design, normal_loglik_innovations, residuals, t_loglik_innovations,
};
use crate::penalty::{lqa_matrix, penalty_value, LqaMatrix, PenaltySpec};
use crate::special::digamma;
use crate::tuning::bic_value;

/// Floor applied to sigma^2 so degenerate exact fits cannot divide by zero.
pub const SIGMA2_FLOOR: f64 = 1e-12;

/// Starting point for the iteration.
#[derive(Debug, Clone)]
pub enum Init {
    /// Unpenalized least squares for beta (ridge-stabilized if singular),
    /// phi = 0, sigma^2 from the OLS residual variance.
    OlsStart,
    Custom(ParameterState),
}

/// Iteration controls shared by both solvers.
#[derive(Debug, Clone)]
pub struct SolverOptions {
    /// Convergence tolerance on the parameter change per sweep.
    pub eta: f64,
    pub max_iter: usize,
    /// Magnitude below which a penalized coefficient is pruned to exact zero.
    pub prune_eps: f64,
    /// Bisection bracket for the degrees-of-freedom update.
    pub nu_bracket: (f64, f64),
    pub init: Init,
    /// Record the per-iteration objective (descent/ascent diagnostics).
    pub keep_trace: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            eta: 1e-6,
            max_iter: 500,
            prune_eps: 1e-6,
            nu_bracket: (0.5, 200.0),
            init: Init::OlsStart,
            keep_trace: false,
        }
    }
}

impl SolverOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.eta > 0.0) {
            return Err(Error::InvalidOptions(format!("eta must be positive, got {}", self.eta)));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidOptions("max_iter must be at least 1".into()));
        }
        if !(self.prune_eps > 0.0) {
            return Err(Error::InvalidOptions(format!(
                "prune_eps must be positive, got {}",
                self.prune_eps
            )));
        }
        let (lo, hi) = self.nu_bracket;
        if !(lo > 0.0 && lo < hi) {
            return Err(Error::InvalidOptions(format!(
                "nu bracket must satisfy 0 < low < high, got ({lo}, {hi})"
            )));
        }
        Ok(())
    }
}

/// Conditional expectations from the E-step of the t ECM.
#[derive(Debug, Clone, PartialEq)]
pub struct EStepWeights {
    /// E(u_t | data) = (nu + 1) / (nu + kappa_t^2); small for outliers.
    pub s1: Vec<f64>,
    /// E(ln u_t | data).
    pub s2: Vec<f64>,
    /// Standardized squared innovations a_t^2 / sigma^2.
    pub kappa2: Vec<f64>,
}

/// Outcome of the degrees-of-freedom update.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuUpdate {
    pub value: f64,
    /// False when the score kept one sign over the bracket and an endpoint
    /// was returned instead of a root.
    pub bracketed: bool,
}

/// A fitted model with its diagnostics.
#[derive(Debug, Clone)]
pub struct FitResult {
    pub state: ParameterState,
    /// Final E-step weights (t families only).
    pub weights: Option<EStepWeights>,
    pub iterations: usize,
    pub converged: bool,
    /// Unpenalized conditional log-likelihood at the final state.
    pub loglik: f64,
    pub bic: f64,
    /// True for coefficients still free; pruned coefficients are exact zeros.
    pub active_set: Vec<bool>,
    pub stationarity_ok: bool,
    /// Per-iteration penalized objective when requested. For the normal
    /// solver this is 0.5 * sum a_t^2 + T * penalty (non-increasing); for the
    /// t solver it is the penalized log-likelihood (non-decreasing).
    pub trace: Option<Vec<f64>>,
}

impl FitResult {
    /// Count of free parameters: nonzero betas + p + 1 for sigma^2
    /// (+1 when nu was estimated).
    pub fn df(&self) -> usize {
        let nonzero = self.state.beta.iter().filter(|&&b| b != 0.0).count();
        nonzero + self.state.phi.len() + 1
    }
}

/// Solves [X'WX + T Omega] beta = X'W y over the active coefficients; pruned
/// coefficients come back as exact zeros. `omega` must have one entry per
/// column of `filtered_x`.
pub fn beta_update(
    filtered_x: &DMatrix<f64>,
    filtered_y: &DVector<f64>,
    omega: &LqaMatrix,
    weights: Option<&[f64]>,
    t_len: usize,
) -> Result<DVector<f64>> {
    let m = filtered_x.ncols();
    if omega.len() != m {
        return Err(Error::Dimension(format!(
            "omega has {} entries for {} columns",
            omega.len(),
            m
        )));
    }
    if filtered_x.nrows() != filtered_y.len() {
        return Err(Error::Dimension("filtered design and response disagree".into()));
    }
    if let Some(w) = weights {
        if w.len() != filtered_y.len() {
            return Err(Error::Dimension("weight vector length mismatch".into()));
        }
    }
    let active: Vec<usize> = (0..m).filter(|&j| omega.active[j]).collect();
    let mut beta = DVector::zeros(m);
    if active.is_empty() {
        return Ok(beta);
    }
    let k = active.len();
    let rows = filtered_y.len();
    let mut gram = DMatrix::zeros(k, k);
    let mut moment = DVector::zeros(k);
    for (ia, &a) in active.iter().enumerate() {
        let col_a = filtered_x.column(a);
        for (ib, &b) in active.iter().enumerate().take(ia + 1) {
            let col_b = filtered_x.column(b);
            let mut s = 0.0;
            match weights {
                Some(w) => {
                    for t in 0..rows {
                        s += w[t] * col_a[t] * col_b[t];
                    }
                }
                None => {
                    for t in 0..rows {
                        s += col_a[t] * col_b[t];
                    }
                }
            }
            gram[(ia, ib)] = s;
            gram[(ib, ia)] = s;
        }
        let mut s = 0.0;
        match weights {
            Some(w) => {
                for t in 0..rows {
                    s += w[t] * col_a[t] * filtered_y[t];
                }
            }
            None => {
                for t in 0..rows {
                    s += col_a[t] * filtered_y[t];
                }
            }
        }
        moment[ia] = s;
        gram[(ia, ia)] += t_len as f64 * omega.diag[a];
    }

    let solved = nalgebra::Cholesky::new(gram.clone())
        .map(|ch| ch.solve(&moment))
        .or_else(|| gram.clone().lu().solve(&moment));
    let solution = match solved {
        Some(s) if s.iter().all(|v| v.is_finite()) => s,
        _ => {
            let columns = dependent_columns(&gram, &active);
            return Err(Error::Singular { columns });
        }
    };
    for (ia, &a) in active.iter().enumerate() {
        beta[a] = solution[ia];
    }
    Ok(beta)
}

/// Identifies linearly dependent columns of the Gram matrix by Gaussian
/// elimination with a relative pivot threshold; indices reported in the
/// original design's numbering.
fn dependent_columns(gram: &DMatrix<f64>, active: &[usize]) -> Vec<usize> {
    let k = gram.nrows();
    let mut a = gram.clone();
    let scale = (0..k).map(|i| a[(i, i)].abs()).fold(0.0, f64::max).max(1e-300);
    let mut dependent = Vec::new();
    for j in 0..k {
        let pivot = a[(j, j)];
        if pivot.abs() <= 1e-12 * scale {
            dependent.push(active[j]);
            continue;
        }
        for i in (j + 1)..k {
            let f = a[(i, j)] / pivot;
            for c in j..k {
                a[(i, c)] -= f * a[(j, c)];
            }
        }
    }
    if dependent.is_empty() {
        // fall back to reporting everything rather than nothing
        dependent = active.to_vec();
    }
    dependent
}

/// Weighted Yule-Walker-style update for the AR coefficients from the
/// current residuals: phi = R_s^{-1} R_0s.
pub fn phi_update(e: &[f64], p: usize, weights: Option<&[f64]>) -> Result<Vec<f64>> {
    if p == 0 {
        return Ok(Vec::new());
    }
    let n = e.len();
    if n <= 2 * p {
        return Err(Error::Dimension(format!(
            "need more than 2p = {} residuals for the AR update, got {n}",
            2 * p
        )));
    }
    let t_len = n - p;
    if let Some(w) = weights {
        if w.len() != t_len {
            return Err(Error::Dimension("weight vector length mismatch".into()));
        }
    }
    let mut r = DMatrix::zeros(p, p);
    let mut r0 = DVector::zeros(p);
    for k in 0..t_len {
        let w = weights.map_or(1.0, |w| w[k]);
        let et = e[p + k];
        for j in 0..p {
            let ej = e[p + k - j - 1];
            r0[j] += w * et * ej;
            for l in j..p {
                r[(j, l)] += w * ej * e[p + k - l - 1];
            }
        }
    }
    for j in 0..p {
        for l in 0..j {
            r[(j, l)] = r[(l, j)];
        }
    }
    let solved = nalgebra::Cholesky::new(r.clone())
        .map(|ch| ch.solve(&r0))
        .or_else(|| r.lu().solve(&r0));
    match solved {
        Some(s) if s.iter().all(|v| v.is_finite()) => Ok(s.iter().copied().collect()),
        _ => Err(Error::DegenerateResiduals),
    }
}

/// Scale update: the (weighted) mean squared innovation, floored at
/// `SIGMA2_FLOOR` so later divisions stay finite.
pub fn sigma2_update(innovations: &[f64], weights: Option<&[f64]>) -> f64 {
    let t_len = innovations.len();
    debug_assert!(t_len >= 1);
    let mut s = 0.0;
    match weights {
        Some(w) => {
            for (a, &wt) in innovations.iter().zip(w) {
                s += wt * a * a;
            }
        }
        None => {
            for a in innovations {
                s += a * a;
            }
        }
    }
    (s / t_len as f64).max(SIGMA2_FLOOR)
}

/// E-step expectations for the t family at the current parameters.
pub fn estep(innovations: &[f64], sigma2: f64, nu: f64) -> Result<EStepWeights> {
    if !(sigma2 > 0.0) || !(nu > 0.0) {
        return Err(Error::InvalidModel("estep requires sigma2 > 0 and nu > 0".into()));
    }
    let dg = digamma((nu + 1.0) / 2.0);
    let mut s1 = Vec::with_capacity(innovations.len());
    let mut s2 = Vec::with_capacity(innovations.len());
    let mut kappa2 = Vec::with_capacity(innovations.len());
    for &a in innovations {
        let k2 = a * a / sigma2;
        kappa2.push(k2);
        s1.push((nu + 1.0) / (nu + k2));
        s2.push(dg - (0.5 * (nu + k2)).ln());
    }
    Ok(EStepWeights { s1, s2, kappa2 })
}

/// Lean S1-only E-step used inside the fixed-nu sweep.
fn estep_s1(innovations: &[f64], sigma2: f64, nu: f64, out: &mut Vec<f64>) {
    out.clear();
    for &a in innovations {
        out.push((nu + 1.0) / (nu + a * a / sigma2));
    }
}

/// Solves the degrees-of-freedom score equation
/// DG(nu/2) - ln(nu/2) - 1 + mean(s1) - mean(s2) = 0 by bisection.
pub fn nu_update(weights: &EStepWeights, bracket: (f64, f64)) -> Result<NuUpdate> {
    let (lo, hi) = bracket;
    if !(lo > 0.0 && lo < hi) {
        return Err(Error::InvalidOptions(format!("invalid nu bracket ({lo}, {hi})")));
    }
    let t_len = weights.s1.len() as f64;
    let mean_s1: f64 = weights.s1.iter().sum::<f64>() / t_len;
    let mean_s2: f64 = weights.s2.iter().sum::<f64>() / t_len;
    let g = |nu: f64| digamma(nu / 2.0) - (nu / 2.0).ln() - 1.0 + mean_s1 - mean_s2;

    let (mut a, mut b) = (lo, hi);
    let (ga, gb) = (g(a), g(b));
    if ga == 0.0 {
        return Ok(NuUpdate { value: a, bracketed: true });
    }
    if gb == 0.0 {
        return Ok(NuUpdate { value: b, bracketed: true });
    }
    if ga.signum() == gb.signum() {
        let value = if ga.abs() <= gb.abs() { a } else { b };
        return Ok(NuUpdate { value, bracketed: false });
    }
    let mut ga = ga;
    loop {
        let mid = 0.5 * (a + b);
        let gm = g(mid);
        if gm.abs() < 1e-8 || (b - a) < 1e-8 {
            return Ok(NuUpdate { value: mid, bracketed: true });
        }
        if gm.signum() == ga.signum() {
            a = mid;
            ga = gm;
        } else {
            b = mid;
        }
    }
}

struct Prepared {
    design: DMatrix<f64>,
    penalized: Vec<bool>,
    t_len: usize,
}

fn prepare(dataset: &TimeSeriesDataset, model: &ModelSpec) -> Result<Prepared> {
    model.validate(dataset)?;
    let design = dataset.design(model.intercept);
    let mut penalized = vec![true; design.ncols()];
    if model.intercept {
        penalized[0] = false;
    }
    Ok(Prepared { design, penalized, t_len: dataset.n() - model.p })
}

fn initial_state(
    y: &DVector<f64>,
    design: &DMatrix<f64>,
    model: &ModelSpec,
    options: &SolverOptions,
) -> Result<ParameterState> {
    match &options.init {
        Init::Custom(state) => {
            if state.beta.len() != design.ncols() || state.phi.len() != model.p {
                return Err(Error::Dimension("custom init has wrong dimensions".into()));
            }
            let mut s = state.clone();
            if s.nu.is_none() {
                s.nu = model.family.initial_nu();
            }
            Ok(s)
        }
        Init::OlsStart => {
            let m = design.ncols();
            let mut gram = DMatrix::zeros(m, m);
            let mut moment = DVector::zeros(m);
            for i in 0..m {
                for j in 0..=i {
                    let s = design.column(i).dot(&design.column(j));
                    gram[(i, j)] = s;
                    gram[(j, i)] = s;
                }
                moment[i] = design.column(i).dot(y);
            }
            let beta = match nalgebra::Cholesky::new(gram.clone()) {
                Some(ch) => ch.solve(&moment),
                None => {
                    // ridge stabilization for collinear or wide designs
                    let scale = (0..m).map(|i| gram[(i, i)]).fold(0.0, f64::max).max(1.0);
                    for i in 0..m {
                        gram[(i, i)] += 1e-8 * scale;
                    }
                    nalgebra::Cholesky::new(gram)
                        .ok_or(Error::Singular { columns: (0..m).collect() })?
                        .solve(&moment)
                }
            };
            let e = y - design * &beta;
            let p = model.p;
            let resid: Vec<f64> = e.iter().skip(p).copied().collect();
            let sigma2 = sigma2_update(&resid, None);
            Ok(ParameterState::new(
                beta,
                DVector::zeros(p),
                sigma2,
                model.family.initial_nu(),
            ))
        }
    }
}

/// Applies the prune mask: inactive coefficients forced to exact zero.
fn apply_active(beta: &mut DVector<f64>, active: &[bool]) {
    for (i, &keep) in active.iter().enumerate() {
        if !keep {
            beta[i] = 0.0;
        }
    }
}

/// Builds the full-width LQA matrix for the design: penalized coefficients get
/// their LQA entries, unpenalized ones (the intercept) a zero entry that is
/// always active. Null penalties skip pruning entirely so lambda = 0
/// reproduces the unpenalized fit.
fn omega_for(
    penalty: &PenaltySpec,
    beta: &DVector<f64>,
    penalized: &[bool],
    active: &[bool],
    prune_eps: f64,
) -> Result<LqaMatrix> {
    let m = beta.len();
    if penalty.is_null() {
        let mut full = LqaMatrix::zeros(m);
        full.active.copy_from_slice(active);
        return Ok(full);
    }
    let idx: Vec<usize> = (0..m).filter(|&i| penalized[i] && active[i]).collect();
    let sub: Vec<f64> = idx.iter().map(|&i| beta[i]).collect();
    let lqa = lqa_matrix(penalty, &sub, prune_eps)?;
    let mut full = LqaMatrix { diag: vec![0.0; m], active: active.to_vec() };
    for (k, &i) in idx.iter().enumerate() {
        full.diag[i] = lqa.diag[k];
        full.active[i] = lqa.active[k];
    }
    Ok(full)
}

fn penalized_beta(beta: &DVector<f64>, penalized: &[bool]) -> Vec<f64> {
    beta.iter()
        .zip(penalized)
        .filter_map(|(&b, &p)| p.then_some(b))
        .collect()
}

/// Normal-error penalized fit via iterated LQA updates.
pub fn fit_normal(
    dataset: &TimeSeriesDataset,
    model: &ModelSpec,
    penalty: &PenaltySpec,
    options: &SolverOptions,
) -> Result<FitResult> {
    options.validate()?;
    penalty.validate()?;
    if model.family.is_t() {
        return Err(Error::InvalidModel("fit_normal requires the normal family".into()));
    }
    let prep = prepare(dataset, model)?;
    let y = &dataset.y;
    let mut state = initial_state(y, &prep.design, model, options)?;
    let mut active = vec![true; prep.design.ncols()];
    let mut trace = options.keep_trace.then(Vec::new);
    let mut converged = false;
    let mut iterations = 0;

    for _ in 0..options.max_iter {
        iterations += 1;
        let phi: Vec<f64> = state.phi.iter().copied().collect();
        let (fy, fx) = filter_design(y, &prep.design, &phi)?;
        let omega = omega_for(penalty, &state.beta, &prep.penalized, &active, options.prune_eps)?;
        active.copy_from_slice(&omega.active);

        let mut beta = beta_update(&fx, &fy, &omega, None, prep.t_len)?;
        apply_active(&mut beta, &active);
        let e = residuals(y, &prep.design, &beta)?;
        let phi_new = phi_update(e.as_slice(), model.p, None)?;
        let a = ar_filter(e.as_slice(), &phi_new)?;
        let sigma2 = sigma2_update(&a, None);

        let new_state =
            ParameterState::new(beta, DVector::from_vec(phi_new), sigma2, None);
        if let Some(tr) = trace.as_mut() {
            let ss: f64 = a.iter().map(|v| v * v).sum();
            let pen = penalty_value(penalty, &penalized_beta(&new_state.beta, &prep.penalized))?;
            tr.push(0.5 * ss + prep.t_len as f64 * pen);
        }
        let delta = new_state.distance(&state);
        state = new_state;
        if delta < options.eta {
            converged = true;
            break;
        }
    }

    let phi: Vec<f64> = state.phi.iter().copied().collect();
    let a = crate::model::innovations(y, &prep.design, &state.beta, &phi)?;
    let loglik = normal_loglik_innovations(&a, state.sigma2)?;
    let stationarity_ok = state.is_stationary();
    let mut result = FitResult {
        state,
        weights: None,
        iterations,
        converged,
        loglik,
        bic: 0.0,
        active_set: active,
        stationarity_ok,
        trace,
    };
    result.bic = bic_value(loglik, result.df(), prep.t_len);
    Ok(result)
}

/// Student-t penalized fit via the ECM algorithm.
///
/// Each sweep runs: E-step; beta CM-step with the LQA penalty scaled by the
/// current sigma^2 (the exact maximizer of the penalized Q, which keeps the
/// penalized log-likelihood monotone); then the phi, sigma^2 and, when
/// requested, nu CM-steps.
pub fn fit_t_ecm(
    dataset: &TimeSeriesDataset,
    model: &ModelSpec,
    penalty: &PenaltySpec,
    options: &SolverOptions,
) -> Result<FitResult> {
    options.validate()?;
    penalty.validate()?;
    let estimate_nu = match model.family {
        ErrorFamily::Normal => {
            return Err(Error::InvalidModel("fit_t_ecm requires a t family".into()))
        }
        ErrorFamily::TFixed(_) => false,
        ErrorFamily::TEstimated(_) => true,
    };
    let prep = prepare(dataset, model)?;
    let y = &dataset.y;
    let mut state = initial_state(y, &prep.design, model, options)?;
    if state.nu.is_none() {
        return Err(Error::InvalidModel("t fit requires an initial nu".into()));
    }
    let mut active = vec![true; prep.design.ncols()];
    let mut trace = options.keep_trace.then(Vec::new);
    let mut converged = false;
    let mut iterations = 0;
    let mut s1 = Vec::new();

    for _ in 0..options.max_iter {
        iterations += 1;
        let nu = state.nu.unwrap();
        let phi: Vec<f64> = state.phi.iter().copied().collect();
        let (fy, fx) = filter_design(y, &prep.design, &phi)?;
        // innovations at the current parameters drive the E-step
        let a_cur = &fy - &fx * &state.beta;
        let full = if estimate_nu {
            // the nu CM-step needs the full expectations
            let w = estep(a_cur.as_slice(), state.sigma2, nu)?;
            s1.clear();
            s1.extend_from_slice(&w.s1);
            Some(w)
        } else {
            estep_s1(a_cur.as_slice(), state.sigma2, nu, &mut s1);
            None
        };
        let new_state = sweep_t(
            y, model, penalty, options, &prep, &state, &fy, &fx, &mut active, &s1,
            full.as_ref(),
        )?;
        let delta = new_state.distance(&state);
        if let Some(tr) = trace.as_mut() {
            let phi: Vec<f64> = new_state.phi.iter().copied().collect();
            let a = crate::model::innovations(y, &prep.design, &new_state.beta, &phi)?;
            let ll = t_loglik_innovations(&a, new_state.sigma2, new_state.nu.unwrap())?;
            let pen = penalty_value(penalty, &penalized_beta(&new_state.beta, &prep.penalized))?;
            tr.push(ll - prep.t_len as f64 * pen);
        }
        state = new_state;
        if delta < options.eta {
            converged = true;
            break;
        }
    }

    let phi: Vec<f64> = state.phi.iter().copied().collect();
    let a = crate::model::innovations(y, &prep.design, &state.beta, &phi)?;
    let loglik = t_loglik_innovations(&a, state.sigma2, state.nu.unwrap())?;
    let weights = Some(estep(&a, state.sigma2, state.nu.unwrap())?);
    let stationarity_ok = state.is_stationary();
    let mut result = FitResult {
        state,
        weights,
        iterations,
        converged,
        loglik,
        bic: 0.0,
        active_set: active,
        stationarity_ok,
        trace,
    };
    let df = result.df() + usize::from(estimate_nu);
    result.bic = bic_value(loglik, df, prep.t_len);
    Ok(result)
}

#[allow(clippy::too_many_arguments)]
fn sweep_t(
    y: &DVector<f64>,
    model: &ModelSpec,
    penalty: &PenaltySpec,
    options: &SolverOptions,
    prep: &Prepared,
    state: &ParameterState,
    fy: &DVector<f64>,
    fx: &DMatrix<f64>,
    active: &mut [bool],
    s1: &[f64],
    full_weights: Option<&EStepWeights>,
) -> Result<ParameterState> {
    let mut omega = omega_for(penalty, &state.beta, &prep.penalized, active, options.prune_eps)?;
    active.copy_from_slice(&omega.active);
    // scale by the current sigma^2: exact CM-step of the penalized Q
    for d in omega.diag.iter_mut() {
        *d *= state.sigma2;
    }

    let mut beta = beta_update(fx, fy, &omega, Some(s1), prep.t_len)?;
    apply_active(&mut beta, active);
    let e = residuals(y, &prep.design, &beta)?;
    let phi_new = phi_update(e.as_slice(), model.p, Some(s1))?;
    let a = ar_filter(e.as_slice(), &phi_new)?;
    let sigma2 = sigma2_update(&a, Some(s1));
    let nu = match full_weights {
        Some(w) => nu_update(w, options.nu_bracket)?.value,
        None => state.nu.unwrap(),
    };

    Ok(ParameterState::new(beta, DVector::from_vec(phi_new), sigma2, Some(nu)))
}

/// Dispatches on the model family.
pub fn fit(
    dataset: &TimeSeriesDataset,
    model: &ModelSpec,
    penalty: &PenaltySpec,
    options: &SolverOptions,
) -> Result<FitResult> {
    match model.family {
        ErrorFamily::Normal => fit_normal(dataset, model, penalty, options),
        _ => fit_t_ecm(dataset, model, penalty, options),
    }
}
