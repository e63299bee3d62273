//! Dense univariate polynomials in `x`, the dehomogenised side of the
//! construction.

use std::fmt;

use crate::field::{FieldElement, FieldSpec};

/// Polynomial with ascending coefficients; trailing zeros are trimmed, so
/// the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnivariatePoly {
    field: FieldSpec,
    coeffs: Vec<FieldElement>,
}

impl UnivariatePoly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UnivariatePoly { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Self {
        UnivariatePoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::monomial(field, 0)
    }

    /// `x^k`.
    pub fn monomial(field: FieldSpec, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = field.one();
        UnivariatePoly { field, coeffs }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^j`, zero past the degree.
    pub fn coeff(&self, j: usize) -> FieldElement {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// `x^k * self`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UnivariatePoly {
            field: self.field,
            coeffs,
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|j| &self.coeff(j) - &other.coeff(j)).collect();
        Self::new(self.field, coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|j| &self.coeff(j) + &other.coeff(j)).collect();
        Self::new(self.field, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Self::new(self.field, coeffs)
    }

    /// Reversal `x^deg * p(1/x)` taken at the given formal degree.
    pub fn reciprocal(&self, deg: usize) -> Self {
        let coeffs = (0..=deg).map(|j| self.coeff(deg - j)).collect();
        Self::new(self.field, coeffs)
    }

    /// True when `sum_j p_j s_{j+i-deg} = 0` for every `deg <= i < s.len()`.
    pub fn annihilates(&self, s: &[FieldElement]) -> bool {
        let Some(deg) = self.degree() else {
            return false;
        };
        (deg..s.len()).all(|i| {
            self.coeffs
                .iter()
                .enumerate()
                .fold(self.field.zero(), |acc, (j, c)| {
                    &acc + &(c * &s[j + i - deg])
                })
                .is_zero()
        })
    }

    /// Ascending coefficients as canonical strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

fn write_power(out: &mut String, var: &str, k: usize) {
    match k {
        0 => {}
        1 => out.push_str(var),
        _ => {
            out.push_str(var);
            out.push('^');
            out.push_str(&k.to_string());
        }
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut s = c.to_string();
            let negative = s.starts_with('-');
            if negative {
                s.remove(0);
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if k == 0 {
                out.push_str(&s);
            } else {
                if s != "1" {
                    out.push_str(&s);
                    out.push('*');
                }
                write_power(&mut out, "x", k);
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field)
    }
}

pub(crate) fn write_monomial(out: &mut String, x: usize, z: usize) {
    write_power(out, "x", x);
    if x > 0 && z > 0 {
        out.push('*');
    }
    write_power(out, "z", z);
}
