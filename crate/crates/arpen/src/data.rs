//! Core domain types: datasets, model specifications, and parameter states.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// A time-ordered response vector with its covariate matrix.
///
/// Row order is time order; reordering rows invalidates the dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeriesDataset {
    pub y: DVector<f64>,
    pub x: DMatrix<f64>,
    pub column_names: Option<Vec<String>>,
}

impl TimeSeriesDataset {
    pub fn new(y: DVector<f64>, x: DMatrix<f64>) -> Result<Self> {
        Self::with_names(y, x, None)
    }

    pub fn with_names(
        y: DVector<f64>,
        x: DMatrix<f64>,
        column_names: Option<Vec<String>>,
    ) -> Result<Self> {
        if y.is_empty() {
            return Err(Error::Dimension("response vector is empty".into()));
        }
        if x.ncols() == 0 {
            return Err(Error::Dimension("covariate matrix has no columns".into()));
        }
        if x.nrows() != y.len() {
            return Err(Error::Dimension(format!(
                "covariate matrix has {} rows but response has {}",
                x.nrows(),
                y.len()
            )));
        }
        if y.iter().any(|v| !v.is_finite()) || x.iter().any(|v| !v.is_finite()) {
            return Err(Error::Dimension("dataset contains non-finite values".into()));
        }
        if let Some(names) = &column_names {
            if names.len() != x.ncols() {
                return Err(Error::Dimension(format!(
                    "{} column names for {} columns",
                    names.len(),
                    x.ncols()
                )));
            }
        }
        Ok(Self { y, x, column_names })
    }

    /// Number of observations.
    pub fn n(&self) -> usize {
        self.y.len()
    }

    /// Number of covariates (excluding any intercept).
    pub fn m(&self) -> usize {
        self.x.ncols()
    }

    /// The design matrix actually used by a fit: the covariates, with a
    /// leading column of ones when an intercept is requested.
    pub fn design(&self, intercept: bool) -> DMatrix<f64> {
        if intercept {
            let mut d = DMatrix::zeros(self.n(), self.m() + 1);
            d.column_mut(0).fill(1.0);
            d.view_mut((0, 1), (self.n(), self.m())).copy_from(&self.x);
            d
        } else {
            self.x.clone()
        }
    }
}

/// Innovation distribution assumed for the whitened errors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ErrorFamily {
    Normal,
    /// Student t with degrees of freedom held fixed (robustness tuning parameter).
    TFixed(f64),
    /// Student t with the degrees of freedom estimated from this start value.
    TEstimated(f64),
}

impl ErrorFamily {
    pub fn is_t(&self) -> bool {
        !matches!(self, ErrorFamily::Normal)
    }

    pub fn initial_nu(&self) -> Option<f64> {
        match self {
            ErrorFamily::Normal => None,
            ErrorFamily::TFixed(nu) | ErrorFamily::TEstimated(nu) => Some(*nu),
        }
    }
}

/// AR order, error family, and intercept flag for a fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelSpec {
    pub p: usize,
    pub family: ErrorFamily,
    pub intercept: bool,
}

impl ModelSpec {
    pub fn new(p: usize, family: ErrorFamily, intercept: bool) -> Self {
        Self { p, family, intercept }
    }

    pub fn validate(&self, dataset: &TimeSeriesDataset) -> Result<()> {
        let coefs = dataset.m() + usize::from(self.intercept);
        if dataset.n() <= self.p + coefs {
            return Err(Error::InsufficientData(format!(
                "N = {} must exceed p + coefficient count = {}",
                dataset.n(),
                self.p + coefs
            )));
        }
        if let Some(nu) = self.family.initial_nu() {
            if !(nu > 0.0) || !nu.is_finite() {
                return Err(Error::InvalidModel(format!("nu must be positive, got {nu}")));
            }
        }
        Ok(())
    }
}

/// A full parameter point: regression coefficients, AR coefficients, scale,
/// and (for t families) degrees of freedom.
#[derive(Debug, Clone, PartialEq)]
pub struct ParameterState {
    /// Length M, or M + 1 with an intercept (intercept first).
    pub beta: DVector<f64>,
    pub phi: DVector<f64>,
    pub sigma2: f64,
    pub nu: Option<f64>,
}

impl ParameterState {
    pub fn new(beta: DVector<f64>, phi: DVector<f64>, sigma2: f64, nu: Option<f64>) -> Self {
        Self { beta, phi, sigma2, nu }
    }

    /// Spectral radius of the AR companion matrix; < 1 means the AR polynomial
    /// has all roots outside the unit circle.
    pub fn ar_spectral_radius(&self) -> f64 {
        let p = self.phi.len();
        if p == 0 {
            return 0.0;
        }
        let mut companion = DMatrix::zeros(p, p);
        for j in 0..p {
            companion[(0, j)] = self.phi[j];
        }
        for i in 1..p {
            companion[(i, i - 1)] = 1.0;
        }
        companion
            .complex_eigenvalues()
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Stationarity of the AR error process. Violations during iteration are
    /// diagnostics, never hard errors.
    pub fn is_stationary(&self) -> bool {
        self.ar_spectral_radius() < 1.0
    }

    /// Euclidean distance between two states over (beta, phi, sigma2, nu),
    /// used for the convergence criterion.
    pub fn distance(&self, other: &ParameterState) -> f64 {
        let mut s = (self.sigma2 - other.sigma2).powi(2);
        s += (&self.beta - &other.beta).norm_squared();
        s += (&self.phi - &other.phi).norm_squared();
        if let (Some(a), Some(b)) = (self.nu, other.nu) {
            s += (a - b).powi(2);
        }
        s.sqrt()
    }
}
