//! JSON shapes for forms, inverse forms, bases, traces and minimal
//! polynomials. Field elements travel as canonical strings.

use serde::{Deserialize, Serialize};

use crate::bm::MinPolyResult;
use crate::engine::{AnnihilatorBasis, TraceRow};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::forms::Form;
use crate::inverse::InverseForm;
use crate::univariate::UnivariatePoly;

fn parse_all(field: FieldSpec, cs: &[String]) -> Result<Vec<FieldElement>> {
    cs.iter().map(|c| field.parse(c)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub deg: usize,
    pub coeffs: Vec<String>,
}

impl From<&Form> for FormJson {
    fn from(f: &Form) -> Self {
        FormJson {
            deg: f.degree(),
            coeffs: f.to_strings(),
        }
    }
}

impl FormJson {
    pub fn to_form(&self, field: FieldSpec) -> Result<Form> {
        if self.coeffs.len() != self.deg + 1 {
            return Err(Error::Malformed(format!(
                "form of degree {} needs {} coefficients, got {}",
                self.deg,
                self.deg + 1,
                self.coeffs.len()
            )));
        }
        Form::new(parse_all(field, &self.coeffs)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseFormJson {
    pub m: i64,
    pub coeffs: Vec<String>,
}

impl From<&InverseForm> for InverseFormJson {
    fn from(f: &InverseForm) -> Self {
        InverseFormJson {
            m: f.degree(),
            coeffs: f.coeffs().iter().map(ToString::to_string).collect(),
        }
    }
}

impl InverseFormJson {
    pub fn to_inverse_form(&self, field: FieldSpec) -> Result<InverseForm> {
        InverseForm::new(self.m, parse_all(field, &self.coeffs)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub field: String,
    pub m: i64,
    pub lambda: usize,
    pub degree_tuple: Vec<i64>,
    pub dim: usize,
    pub reduced: bool,
    pub profile: Vec<usize>,
    pub basis: Vec<FormJson>,
    pub min_poly: Vec<String>,
}

impl From<&AnnihilatorBasis> for BasisJson {
    fn from(b: &AnnihilatorBasis) -> Self {
        BasisJson {
            field: b.field.to_string(),
            m: b.m,
            lambda: b.lambda,
            degree_tuple: b.dtuple.clone(),
            dim: b.dim,
            reduced: b.reduced,
            profile: b.profile.clone(),
            basis: b.basis.iter().map(FormJson::from).collect(),
            min_poly: b.min_poly().to_strings(),
        }
    }
}

impl BasisJson {
    pub fn field_spec(&self) -> Result<FieldSpec> {
        self.field.parse()
    }

    pub fn forms(&self) -> Result<Vec<Form>> {
        let field = self.field_spec()?;
        self.basis.iter().map(|f| f.to_form(field)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRowJson {
    pub m: i64,
    pub basis: Vec<FormJson>,
    pub degree_tuple: Vec<i64>,
}

impl From<&TraceRow> for TraceRowJson {
    fn from(r: &TraceRow) -> Self {
        TraceRowJson {
            m: r.m,
            basis: r.basis.iter().map(FormJson::from).collect(),
            degree_tuple: r.degree_tuple.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinPolyJson {
    pub field: String,
    /// Ascending coefficients.
    pub mu1: Vec<String>,
    pub mu2: Vec<String>,
    pub lc: usize,
    pub profile: Vec<usize>,
    pub degenerate: bool,
}

impl MinPolyJson {
    pub fn new(field: FieldSpec, r: &MinPolyResult) -> Self {
        MinPolyJson {
            field: field.to_string(),
            mu1: r.mu1.to_strings(),
            mu2: r.mu2.to_strings(),
            lc: r.lc,
            profile: r.profile.clone(),
            degenerate: r.degenerate,
        }
    }

    pub fn mu1(&self) -> Result<UnivariatePoly> {
        let field: FieldSpec = self.field.parse()?;
        Ok(UnivariatePoly::new(field, parse_all(field, &self.mu1)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bm::minimal_polynomial;
    use crate::engine::{run, EngineOptions};
    use crate::inverse::{from_sequence, Sequence};

    fn example() -> Sequence {
        Sequence::from_i64s(FieldSpec::gf2(), &[1, 0, 0, 1, 1, 0, 1, 0]).unwrap()
    }

    #[test]
    fn basis_json_layout() {
        let b = run(
            &from_sequence(&example()).unwrap(),
            EngineOptions::reduced(),
        )
        .unwrap();
        let text = serde_json::to_string(&BasisJson::from(&b)).unwrap();
        assert!(text.starts_with(
            r#"{"field":"gf2","m":-7,"lambda":4,"degree_tuple":[-7,-5,-2,1],"dim":20,"reduced":true,"profile":[1,1,1,3,3,3,4,4],"basis":[{"deg":4,"coeffs":["1","1","0","0","1"]}"#
        ));
        assert!(text.ends_with(r#""min_poly":["1","1","0","0","1"]}"#));
        let back: BasisJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.forms().unwrap(), b.basis);
    }

    #[test]
    fn inverse_form_json_round_trip() {
        let f = from_sequence(&example()).unwrap();
        let j = InverseFormJson::from(&f);
        assert_eq!(j.m, -7);
        assert_eq!(j.coeffs, ["0", "1", "0", "1", "1", "0", "0", "1"]);
        assert_eq!(j.to_inverse_form(FieldSpec::gf2()).unwrap(), f);
        let bad = InverseFormJson {
            m: -2,
            coeffs: vec!["1".into()],
        };
        assert!(bad.to_inverse_form(FieldSpec::gf2()).is_err());
    }

    #[test]
    fn form_json_checks_length() {
        let bad = FormJson {
            deg: 2,
            coeffs: vec!["1".into()],
        };
        assert!(matches!(
            bad.to_form(FieldSpec::gf2()),
            Err(Error::Malformed(_))
        ));
        let q = FormJson {
            deg: 1,
            coeffs: vec!["2/5".into(), "1".into()],
        };
        assert_eq!(FormJson::from(&q.to_form(FieldSpec::Rational).unwrap()), q);
    }

    #[test]
    fn min_poly_json() {
        let j = MinPolyJson::new(FieldSpec::gf2(), &minimal_polynomial(&example()));
        assert_eq!(j.mu1, ["1", "1", "0", "0", "1"]);
        assert_eq!(j.mu1().unwrap().to_string(), "x^4+x+1");
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(serde_json::from_str::<MinPolyJson>(&text).unwrap(), j);
    }
}
