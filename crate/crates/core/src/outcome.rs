use num_complex::Complex64;

use crate::{Error, Result};

/// How an [`EvalOutcome::error_bound`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// A proven truncation or remainder inequality (plus a rounding allowance).
    Certified,
    /// First-omitted-term style estimate.
    Heuristic,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::Certified => "certified",
            BoundKind::Heuristic => "heuristic",
        }
    }
}

/// The evaluation route that produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Direct,
    EulerMaclaurin,
    Series,
    NegIntClosedForm,
    Jonquiere,
    Lindelof,
    Multisection,
    Asymptotic,
    Quadrature,
    Zastavnyi,
    SummationByParts,
    HartmanWintner,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::EulerMaclaurin => "euler_maclaurin",
            Method::Series => "series",
            Method::NegIntClosedForm => "neg_int_closed_form",
            Method::Jonquiere => "jonquiere",
            Method::Lindelof => "lindelof",
            Method::Multisection => "multisection",
            Method::Asymptotic => "asymptotic",
            Method::Quadrature => "quadrature",
            Method::Zastavnyi => "zastavnyi",
            Method::SummationByParts => "summation_by_parts",
            Method::HartmanWintner => "hartman_wintner",
        }
    }
}

/// Value plus error bound, the return type of every evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOutcome {
    pub value: Complex64,
    pub error_bound: f64,
    pub bound_kind: BoundKind,
    pub terms_used: usize,
    pub method: Method,
}

impl EvalOutcome {
    /// Builds an outcome, rejecting non-finite values or bounds.
    pub(crate) fn new(
        value: Complex64,
        error_bound: f64,
        bound_kind: BoundKind,
        terms_used: usize,
        method: Method,
    ) -> Result<Self> {
        if !(value.re.is_finite() && value.im.is_finite()) {
            return Err(Error::Overflow(alloc::format!(
                "{} produced a non-finite value",
                method.as_str()
            )));
        }
        if !error_bound.is_finite() || error_bound < 0.0 {
            return Err(Error::Convergence(alloc::format!(
                "{} produced an unusable error bound {error_bound:e}",
                method.as_str()
            )));
        }
        Ok(EvalOutcome {
            value,
            error_bound,
            bound_kind,
            terms_used,
            method,
        })
    }

    /// Real part as an outcome of its own (the bound carries over).
    pub fn re(&self) -> EvalOutcome {
        EvalOutcome {
            value: Complex64::new(self.value.re, 0.0),
            ..*self
        }
    }

    /// Imaginary part as a real-valued outcome.
    pub fn im(&self) -> EvalOutcome {
        EvalOutcome {
            value: Complex64::new(self.value.im, 0.0),
            ..*self
        }
    }
}
