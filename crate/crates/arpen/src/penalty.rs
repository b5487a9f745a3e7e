//! Penalty functions, their derivatives, and the LQA diagonal matrix shared
//! by both solvers.
//!
//! The SCAD middle branch uses the continuity-corrected quadratic
//! -(b^2 - 2 a l b + l^2) / (2(a - 1)), which agrees with the l|b| branch at
//! |b| = l and with the constant (a+1)l^2/2 branch at |b| = a l.

use crate::error::{Error, Result};

/// Which penalty to apply, with its hyperparameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PenaltySpec {
    None,
    Lasso { lambda: f64 },
    Scad { lambda: f64, alpha: f64 },
    Bridge { lambda: f64, gamma: f64 },
    Ridge { lambda: f64 },
    ElasticNet { lambda1: f64, lambda2: f64 },
}

impl PenaltySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidPenalty(msg));
        match *self {
            PenaltySpec::None => Ok(()),
            PenaltySpec::Lasso { lambda } | PenaltySpec::Ridge { lambda } => {
                if lambda < 0.0 || !lambda.is_finite() {
                    bad(format!("lambda must be non-negative, got {lambda}"))
                } else {
                    Ok(())
                }
            }
            PenaltySpec::Scad { lambda, alpha } => {
                if lambda < 0.0 || !lambda.is_finite() {
                    bad(format!("lambda must be non-negative, got {lambda}"))
                } else if alpha <= 2.0 || !alpha.is_finite() {
                    bad(format!("scad alpha must exceed 2, got {alpha}"))
                } else {
                    Ok(())
                }
            }
            PenaltySpec::Bridge { lambda, gamma } => {
                if lambda < 0.0 || !lambda.is_finite() {
                    bad(format!("lambda must be non-negative, got {lambda}"))
                } else if gamma <= 0.0 || gamma > 2.0 || !gamma.is_finite() {
                    bad(format!("bridge gamma must lie in (0, 2], got {gamma}"))
                } else {
                    Ok(())
                }
            }
            PenaltySpec::ElasticNet { lambda1, lambda2 } => {
                if lambda1 < 0.0 || lambda2 < 0.0 || !lambda1.is_finite() || !lambda2.is_finite() {
                    bad(format!(
                        "elastic-net lambdas must be non-negative, got ({lambda1}, {lambda2})"
                    ))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// True when every hyperparameter is zero, i.e. the penalty vanishes.
    pub fn is_null(&self) -> bool {
        match *self {
            PenaltySpec::None => true,
            PenaltySpec::Lasso { lambda }
            | PenaltySpec::Ridge { lambda }
            | PenaltySpec::Scad { lambda, .. }
            | PenaltySpec::Bridge { lambda, .. } => lambda == 0.0,
            PenaltySpec::ElasticNet { lambda1, lambda2 } => lambda1 == 0.0 && lambda2 == 0.0,
        }
    }

    fn value_at(&self, b: f64) -> f64 {
        let b = b.abs();
        match *self {
            PenaltySpec::None => 0.0,
            PenaltySpec::Lasso { lambda } => lambda * b,
            PenaltySpec::Ridge { lambda } => lambda * b * b,
            PenaltySpec::Bridge { lambda, gamma } => lambda * b.powf(gamma),
            PenaltySpec::ElasticNet { lambda1, lambda2 } => lambda1 * b + lambda2 * b * b,
            PenaltySpec::Scad { lambda, alpha } => {
                if b <= lambda {
                    lambda * b
                } else if b <= alpha * lambda {
                    -(b * b - 2.0 * alpha * lambda * b + lambda * lambda) / (2.0 * (alpha - 1.0))
                } else {
                    (alpha + 1.0) * lambda * lambda / 2.0
                }
            }
        }
    }
}

/// Total penalty over a coefficient vector.
pub fn penalty_value(spec: &PenaltySpec, beta: &[f64]) -> Result<f64> {
    spec.validate()?;
    Ok(beta.iter().map(|&b| spec.value_at(b)).sum())
}

/// Derivative of the per-coefficient penalty at a nonzero magnitude,
/// the p'(|beta|) consumed by the LQA approximation.
pub fn penalty_deriv(spec: &PenaltySpec, abs_beta: f64) -> Result<f64> {
    spec.validate()?;
    if !(abs_beta > 0.0) {
        return Err(Error::InvalidPenalty(format!(
            "penalty derivative is only defined at nonzero magnitudes, got {abs_beta}"
        )));
    }
    Ok(match *spec {
        PenaltySpec::None => 0.0,
        PenaltySpec::Lasso { lambda } => lambda,
        PenaltySpec::Ridge { lambda } => 2.0 * lambda * abs_beta,
        PenaltySpec::Bridge { lambda, gamma } => lambda * gamma * abs_beta.powf(gamma - 1.0),
        PenaltySpec::ElasticNet { lambda1, lambda2 } => lambda1 + 2.0 * lambda2 * abs_beta,
        PenaltySpec::Scad { lambda, alpha } => {
            if abs_beta <= lambda {
                lambda
            } else if abs_beta <= alpha * lambda {
                (alpha * lambda - abs_beta) / (alpha - 1.0)
            } else {
                0.0
            }
        }
    })
}

/// Diagonal of the local quadratic approximation, one entry per penalized
/// coefficient. Coefficients at or below `prune_eps` in magnitude are marked
/// inactive and held at exact zero for the rest of the fit.
#[derive(Debug, Clone, PartialEq)]
pub struct LqaMatrix {
    pub diag: Vec<f64>,
    pub active: Vec<bool>,
}

impl LqaMatrix {
    /// All-zero diagonal with everything active (the unpenalized case).
    pub fn zeros(len: usize) -> Self {
        Self { diag: vec![0.0; len], active: vec![true; len] }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }
}

/// Builds the LQA diagonal p'(|beta_i|)/|beta_i| at the current iterate.
pub fn lqa_matrix(spec: &PenaltySpec, beta0: &[f64], prune_eps: f64) -> Result<LqaMatrix> {
    spec.validate()?;
    if !(prune_eps > 0.0) {
        return Err(Error::InvalidPenalty(format!(
            "prune_eps must be positive, got {prune_eps}"
        )));
    }
    let mut diag = Vec::with_capacity(beta0.len());
    let mut active = Vec::with_capacity(beta0.len());
    for &b in beta0 {
        let mag = b.abs();
        if mag <= prune_eps {
            diag.push(0.0);
            active.push(false);
        } else {
            diag.push(penalty_deriv(spec, mag)? / mag);
            active.push(true);
        }
    }
    Ok(LqaMatrix { diag, active })
}
