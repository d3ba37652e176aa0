//! Real polynomials with ascending coefficients.

use std::fmt;

use num_complex::Complex64;

use crate::error::OdeError;

#[derive(Debug, Clone, PartialEq)]
pub struct RealPolynomial {
    coefficients: Vec<f64>,
}

impl RealPolynomial {
    /// Trailing zeros are dropped, so the last stored coefficient is the
    /// leading one.
    pub fn new(mut coefficients: Vec<f64>) -> Result<Self, OdeError> {
        if let Some(c) = coefficients.iter().find(|c| !c.is_finite()) {
            return Err(OdeError::InvalidInput(format!(
                "coefficient {c} is not finite"
            )));
        }
        while coefficients.last() == Some(&0.0) {
            coefficients.pop();
        }
        Ok(RealPolynomial { coefficients })
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn leading(&self) -> f64 {
        self.coefficients.last().copied().unwrap_or(0.0)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coefficients
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn eval_real(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> RealPolynomial {
        RealPolynomial {
            coefficients: self
                .coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        }
    }

    /// Polynomial with every coefficient multiplied by `s`.
    pub fn scaled(&self, s: f64) -> RealPolynomial {
        RealPolynomial::new(self.coefficients.iter().map(|c| c * s).collect())
            .expect("finite coefficients stay finite")
    }
}

impl fmt::Display for RealPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Physicists' Hermite polynomial `H_n`.
pub fn hermite(n: usize) -> RealPolynomial {
    let mut prev = vec![1.0];
    if n == 0 {
        return RealPolynomial::new(prev).expect("finite");
    }
    let mut cur = vec![0.0, 2.0];
    for k in 1..n {
        // H_{k+1} = 2z H_k - 2k H_{k-1}
        let mut next = vec![0.0; k + 2];
        for (i, &c) in cur.iter().enumerate() {
            next[i + 1] += 2.0 * c;
        }
        for (i, &c) in prev.iter().enumerate() {
            next[i] -= 2.0 * k as f64 * c;
        }
        prev = cur;
        cur = next;
    }
    RealPolynomial::new(cur).expect("finite")
}

/// The potential `1 - z^2 + 2n` for which `H_n(z) exp(-z^2/2)` solves
/// `w'' + P w = 0`.
pub fn hermite_potential(n: usize) -> RealPolynomial {
    RealPolynomial::new(vec![1.0 + 2.0 * n as f64, 0.0, -1.0]).expect("finite")
}
