//! Inverse forms in `K[x^-1, z^-1]`, the contraction action of forms on
//! them, and the correspondence with finite sequences.
//!
//! An inverse form of total degree `m <= 0` is stored like a [`Form`] but
//! indexed from the bottom: `coeffs[k]` is `F_{m+k}`, the coefficient of
//! `x^(m+k) z^(-k)`. So `coeffs[0]` multiplies `x^m` and `coeffs[-m]` is
//! `F_0`, the coefficient of `z^m`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::forms::Form;

/// A nonzero inverse form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct InverseForm {
    m: i64,
    coeffs: Vec<FieldElement>,
}

impl InverseForm {
    /// `coeffs[k] = F_{m+k}` for `k = 0..=-m`.
    pub fn new(m: i64, coeffs: Vec<FieldElement>) -> Result<Self> {
        if m > 0 || coeffs.len() as i64 != 1 - m {
            return Err(Error::Malformed(format!(
                "inverse form of degree {m} needs {} coefficients, got {}",
                1 - m.min(0),
                coeffs.len()
            )));
        }
        if coeffs.iter().all(FieldElement::is_zero) {
            return Err(Error::ZeroForm);
        }
        Ok(InverseForm { m, coeffs })
    }

    fn from_dense(m: i64, coeffs: Vec<FieldElement>) -> Option<Self> {
        if coeffs.iter().all(FieldElement::is_zero) {
            None
        } else {
            Some(InverseForm { m, coeffs })
        }
    }

    /// `c * x^m`.
    pub fn x_power(m: i64, c: FieldElement) -> Result<Self> {
        let mut coeffs = vec![c.field().zero(); (1 - m).max(1) as usize];
        coeffs[0] = c;
        InverseForm::new(m, coeffs)
    }

    pub fn field(&self) -> FieldSpec {
        self.coeffs[0].field()
    }

    /// Total degree `m = |F|`.
    pub fn degree(&self) -> i64 {
        self.m
    }

    /// Coefficients `F_m, ..., F_0`.
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// `F_j`, the coefficient of `x^j z^(m-j)`; zero outside `m..=0`.
    pub fn coeff(&self, j: i64) -> FieldElement {
        if j < self.m || j > 0 {
            return self.field().zero();
        }
        self.coeffs[(j - self.m) as usize].clone()
    }

    /// Order `v = max { j : F_j != 0 }`.
    pub fn order(&self) -> i64 {
        let k = self
            .coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("inverse forms are nonzero");
        self.m + k as i64
    }

    /// Augmentation `a ⌣ F = a x^(m-1) + F z^(-1)`.
    pub fn augment(&self, a: FieldElement) -> InverseForm {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(a);
        coeffs.extend(self.coeffs.iter().cloned());
        InverseForm {
            m: self.m - 1,
            coeffs,
        }
    }

    /// Inverse subform `F^(i)` for `m <= i <= v`: the part of `F` carried by
    /// `F_i, ..., F_0`, of total degree `i`.
    pub fn subform(&self, i: i64) -> Result<InverseForm> {
        let v = self.order();
        if i < self.m || i > v {
            return Err(Error::IndexOutOfRange {
                index: i,
                lo: self.m,
                hi: v,
            });
        }
        Ok(InverseForm {
            m: i,
            coeffs: self.coeffs[(i - self.m) as usize..].to_vec(),
        })
    }

    /// Reads the form back as a sequence: `s_j = F_{-j}`.
    pub fn to_sequence(&self) -> Sequence {
        Sequence {
            field: self.field(),
            terms: self.coeffs.iter().rev().cloned().collect(),
        }
    }

    /// Contraction `phi ∘ F`, computed as the convolution coefficients
    /// `[phi·F]_i` for `d <= i <= 0`, `d = |phi| + m`. `None` is zero.
    pub fn contract(&self, phi: &Form) -> Option<InverseForm> {
        let d = phi.degree() as i64 + self.m;
        if d > 0 {
            return None;
        }
        let coeffs = (d..=0).map(|i| self.product_coeff(phi, i)).collect();
        InverseForm::from_dense(d, coeffs)
    }

    /// `[phi·F]_i = sum_{j+k=i} phi_j F_k`.
    pub(crate) fn product_coeff(&self, phi: &Form, i: i64) -> FieldElement {
        let e = phi.degree() as i64;
        // m <= i - j <= 0 and 0 <= j <= e
        let lo = i.max(0);
        let hi = (i - self.m).min(e);
        let mut acc = self.field().zero();
        for j in lo..=hi {
            let c = phi.coeff(j as usize);
            if !c.is_zero() {
                acc = &acc + &(c * &self.coeffs[(i - j - self.m) as usize]);
            }
        }
        acc
    }

    /// True when `phi ∘ F = 0`.
    pub fn annihilated_by(&self, phi: &Form) -> bool {
        self.contract(phi).is_none()
    }
}

/// `contract(phi, F)`.
pub fn contract(phi: &Form, f: &InverseForm) -> Option<InverseForm> {
    f.contract(phi)
}

/// Membership of `phi` in the annihilator ideal of `F`.
pub fn annihilates(phi: &Form, f: &InverseForm) -> bool {
    f.annihilated_by(phi)
}

impl fmt::Display for InverseForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for j in self.m..=0 {
            let c = self.coeff(j);
            if c.is_zero() {
                continue;
            }
            let mut s = c.to_string();
            if c.is_negative() {
                s.remove(0);
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let zx = self.m - j;
            let mut mono = String::new();
            if j != 0 {
                mono.push_str(&format!("x^{j}"));
            }
            if zx != 0 {
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(&format!("z^{zx}"));
            }
            if mono.is_empty() {
                out.push_str(&s);
            } else {
                if s != "1" {
                    out.push_str(&s);
                    out.push('*');
                }
                out.push_str(&mono);
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for InverseForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InverseForm({self} over {})", self.field())
    }
}

/// A finite sequence `s_0, ..., s_{n-1}` over a field, `n >= 1`.
///
/// All-zero sequences are representable; they have no inverse form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sequence {
    field: FieldSpec,
    terms: Vec<FieldElement>,
}

impl Sequence {
    pub fn new(field: FieldSpec, terms: Vec<FieldElement>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptySequence);
        }
        if terms.iter().any(|t| t.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Sequence { field, terms })
    }

    pub fn from_i64s(field: FieldSpec, values: &[i64]) -> Result<Self> {
        Sequence::new(field, values.iter().map(|&v| field.from_i64(v)).collect())
    }

    /// Comma-separated canonical element strings, e.g. `1,0,0,1`.
    pub fn parse(field: FieldSpec, text: &str) -> Result<Self> {
        let terms = text
            .split(',')
            .map(|t| field.parse(t))
            .collect::<Result<Vec<_>>>()?;
        Sequence::new(field, terms)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[FieldElement] {
        &self.terms
    }

    pub fn is_trivial(&self) -> bool {
        self.terms.iter().all(FieldElement::is_zero)
    }

    /// `v(s) = min { i : s_i != 0 }`.
    pub fn order(&self) -> Option<usize> {
        self.terms.iter().position(|t| !t.is_zero())
    }

    /// Prefix `s_0..s_k`.
    pub fn prefix(&self, k: usize) -> Sequence {
        Sequence {
            field: self.field,
            terms: self.terms[..=k].to_vec(),
        }
    }

    /// The inverse form `sum_{i=1-n}^{0} s_{-i} x^i z^(1-n-i)`.
    pub fn to_inverse_form(&self) -> Result<InverseForm> {
        from_sequence(self)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sequence({self} over {})", self.field)
    }
}

/// Inverse form of a nontrivial sequence; degree `1 - n`, `F_{-j} = s_j`.
pub fn from_sequence(s: &Sequence) -> Result<InverseForm> {
    if s.is_trivial() {
        return Err(Error::AllZeroSequence);
    }
    let n = s.len() as i64;
    Ok(InverseForm {
        m: 1 - n,
        coeffs: s.terms.iter().rev().cloned().collect(),
    })
}
