//! Core data types: fuzzy elements, labeled patterns, and real sequences.

use crate::error::Error;

/// Slack allowed on the constraint mu + nu <= 1.
pub const ELEMENT_TOLERANCE: f64 = 1e-12;

/// A membership/non-membership pair with mu, nu in [0, 1] and mu + nu <= 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AifsElement {
    mu: f64,
    nu: f64,
}

impl AifsElement {
    /// The implicit origin element prepended to every pattern.
    pub const BASELINE: AifsElement = AifsElement { mu: 0.0, nu: 0.0 };

    pub fn new(mu: f64, nu: f64) -> Result<Self, Error> {
        if !(0.0..=1.0).contains(&mu) {
            return Err(Error::InvalidElement {
                mu,
                nu,
                reason: "membership outside [0, 1]",
            });
        }
        if !(0.0..=1.0).contains(&nu) {
            return Err(Error::InvalidElement {
                mu,
                nu,
                reason: "non-membership outside [0, 1]",
            });
        }
        if mu + nu > 1.0 + ELEMENT_TOLERANCE {
            return Err(Error::InvalidElement {
                mu,
                nu,
                reason: "mu + nu exceeds 1",
            });
        }
        Ok(AifsElement { mu, nu })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Hesitancy margin 1 - (mu + nu).
    pub fn pi(&self) -> f64 {
        1.0 - (self.mu + self.nu)
    }

    pub fn pair(&self) -> (f64, f64) {
        (self.mu, self.nu)
    }
}

/// A labeled, non-empty sequence of elements over a feature universe.
#[derive(Clone, Debug, PartialEq)]
pub struct AifsPattern {
    label: String,
    elements: Vec<AifsElement>,
}

impl AifsPattern {
    pub fn new(label: impl Into<String>, elements: Vec<AifsElement>) -> Result<Self, Error> {
        if elements.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(AifsPattern {
            label: label.into(),
            elements,
        })
    }

    pub fn from_pairs(label: impl Into<String>, pairs: &[(f64, f64)]) -> Result<Self, Error> {
        let elements = pairs
            .iter()
            .map(|&(mu, nu)| AifsElement::new(mu, nu))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(label, elements)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn elements(&self) -> &[AifsElement] {
        &self.elements
    }

    /// Number of features.
    pub fn k(&self) -> usize {
        self.elements.len()
    }

    pub fn pairs(&self) -> Vec<(f64, f64)> {
        self.elements.iter().map(AifsElement::pair).collect()
    }

    /// Checks mu + nu = 1 at every position, within `tol`.
    pub fn check_fuzzy(&self, tol: f64) -> Result<(), Error> {
        for (index, e) in self.elements.iter().enumerate() {
            let sum = e.mu() + e.nu();
            if (sum - 1.0).abs() > tol {
                return Err(Error::NotFuzzy { index, sum });
            }
        }
        Ok(())
    }
}

/// A non-empty sequence of reals in [0, 1].
#[derive(Clone, Debug, PartialEq)]
pub struct RealSequence {
    values: Vec<f64>,
}

impl RealSequence {
    pub fn new(values: Vec<f64>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (index, &value) in values.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::ValueOutOfRange { index, value });
            }
        }
        Ok(RealSequence { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Embeds each value v as the element (v, 0).
    pub fn embed_membership(&self, label: &str) -> AifsPattern {
        let pairs: Vec<(f64, f64)> = self.values.iter().map(|&v| (v, 0.0)).collect();
        AifsPattern::from_pairs(label, &pairs).expect("values in [0, 1] embed as valid elements")
    }

    /// Embeds each value v as the element (0, v).
    pub fn embed_nonmembership(&self, label: &str) -> AifsPattern {
        let pairs: Vec<(f64, f64)> = self.values.iter().map(|&v| (0.0, v)).collect();
        AifsPattern::from_pairs(label, &pairs).expect("values in [0, 1] embed as valid elements")
    }
}
