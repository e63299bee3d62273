//! Minimal polynomials of finite sequences, computed directly on the terms.
//!
//! This is the dehomogenised shadow of the engine: `μ1` tracks `f1` and
//! `μ2` tracks `f2`, with `d = deg μ2 - deg μ1` and no last-length-change
//! bookkeeping.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::inverse::Sequence;
use crate::univariate::UnivariatePoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinPolyResult {
    /// Monic minimal polynomial.
    pub mu1: UnivariatePoly,
    /// The auxiliary polynomial at termination.
    pub mu2: UnivariatePoly,
    /// Linear complexity, `deg mu1`.
    pub lc: usize,
    /// Linear complexity of `s_0..s_k` for every `k`.
    pub profile: Vec<usize>,
    /// Set for an all-zero input, where `mu1 = 1`.
    pub degenerate: bool,
}

/// `Δ1 = sum_j [mu1]_j s_{j+i-deg mu1}`.
pub fn seq_discrepancy(mu1: &UnivariatePoly, s: &Sequence, i: usize) -> Result<FieldElement> {
    let deg = mu1.degree().ok_or(Error::ZeroForm)?;
    let n = s.len();
    if i < deg || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            lo: deg as i64,
            hi: n as i64 - 1,
        });
    }
    let terms = s.terms();
    Ok(mu1
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(s.field().zero(), |acc, (j, c)| {
            &acc + &(c * &terms[j + i - deg])
        }))
}

pub fn minimal_polynomial(s: &Sequence) -> MinPolyResult {
    let field = s.field();
    let n = s.len();
    let Some(v) = s.order() else {
        return MinPolyResult {
            mu1: UnivariatePoly::one(field),
            mu2: UnivariatePoly::one(field),
            lc: 0,
            profile: vec![0; n],
            degenerate: true,
        };
    };
    let mut mu1 = UnivariatePoly::monomial(field, v + 1);
    let mut mu2 = UnivariatePoly::one(field);
    // s_v rather than 1, so non-monic leading terms need no rescaling
    let mut delta2 = s.terms()[v].clone();
    let mut d = -(v as i64);
    let mut profile = vec![0; v];
    profile.push(v + 1);

    for i in v + 1..n {
        let delta1 = seq_discrepancy(&mu1, s, i).expect("i > deg mu1 during the loop");
        if !delta1.is_zero() {
            let q = delta1
                .checked_div(&delta2)
                .expect("stored discrepancy is never zero");
            if d <= 0 {
                mu1 = mu1.sub(&mu2.shift((-d) as usize).scale(&q));
            } else {
                let psi = mu1.clone();
                mu1 = mu1.shift(d as usize).sub(&mu2.scale(&q));
                mu2 = psi;
                delta2 = delta1;
                d = -d;
            }
        }
        d += 1;
        profile.push(mu1.degree().unwrap_or(0));
    }
    let lc = mu1.degree().unwrap_or(0);
    MinPolyResult {
        mu1,
        mu2,
        lc,
        profile,
        degenerate: false,
    }
}

pub fn linear_complexity_profile(s: &Sequence) -> Vec<usize> {
    minimal_polynomial(s).profile
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn seq(p: u32, v: &[i64]) -> Sequence {
        Sequence::from_i64s(FieldSpec::Prime(p), v).unwrap()
    }

    fn poly(p: u32, cs: &[i64]) -> UnivariatePoly {
        let f = FieldSpec::Prime(p);
        UnivariatePoly::new(f, cs.iter().map(|&c| f.from_i64(c)).collect())
    }

    #[test]
    fn discrepancy_examples() {
        let s = seq(2, &[1, 0, 0, 1, 1, 0, 1, 0]);
        assert!(seq_discrepancy(&poly(2, &[0, 1]), &s, 3).unwrap().is_one());
        assert!(seq_discrepancy(&poly(2, &[1, 0, 0, 1]), &s, 4)
            .unwrap()
            .is_one());
        assert!(seq_discrepancy(&poly(2, &[0, 1]), &seq(2, &[1, 0]), 1)
            .unwrap()
            .is_zero());
        assert!(matches!(
            seq_discrepancy(&poly(2, &[0, 1]), &s, 8),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(seq_discrepancy(&poly(2, &[1, 0, 0, 1]), &s, 2).is_err());
    }

    #[test]
    fn worked_example() {
        let r = minimal_polynomial(&seq(2, &[1, 0, 0, 1, 1, 0, 1, 0]));
        assert_eq!(r.mu1.to_string(), "x^4+x+1");
        assert_eq!(r.lc, 4);
        assert_eq!(r.profile, vec![1, 1, 1, 3, 3, 3, 4, 4]);
        // deg mu1 + deg mu2 = 2 - D_2 = 7
        assert_eq!(r.mu2.degree(), Some(3));
        assert!(!r.degenerate);
    }

    #[test]
    fn short_inputs() {
        let r = minimal_polynomial(&seq(2, &[1]));
        assert_eq!(r.mu1.to_string(), "x");
        assert_eq!(r.profile, vec![1]);
        let r = minimal_polynomial(&seq(2, &[1, 0, 0, 0]));
        assert_eq!((r.mu1.to_string(), r.lc), ("x".to_string(), 1));
        assert_eq!(linear_complexity_profile(&seq(2, &[1])), vec![1]);
    }

    #[test]
    fn zero_prefix_and_all_zero() {
        let r = minimal_polynomial(&seq(3, &[0, 0, 2, 1]));
        assert_eq!(r.profile[..2], [0, 0]);
        assert_eq!(r.profile[2], 3);
        assert!(r.mu1.annihilates(seq(3, &[0, 0, 2, 1]).terms()));
        let z = minimal_polynomial(&seq(5, &[0, 0, 0]));
        assert!(z.degenerate);
        assert_eq!(z.lc, 0);
        assert!(z.mu1.is_monic() && z.mu1.degree() == Some(0));
    }

    #[test]
    fn non_monic_leading_term() {
        let s = seq(5, &[2, 1, 3, 4, 0, 2]);
        let r = minimal_polynomial(&s);
        assert!(r.mu1.is_monic());
        assert!(r.mu1.annihilates(s.terms()));
    }

    #[test]
    fn gf3_profile_jumps() {
        let r = minimal_polynomial(&seq(3, &[1, 2, 1, 2]));
        assert_eq!((r.lc, r.profile), (1, vec![1, 1, 1, 1]));
        let r = minimal_polynomial(&seq(3, &[1, 0, 0, 1, 0, 0]));
        assert_eq!(r.profile, vec![1, 1, 1, 3, 3, 3]);
        assert_eq!(r.mu1.to_string(), "x^3+2");
        for (k, w) in r.profile.windows(2).enumerate() {
            if w[1] != w[0] {
                assert_eq!(w[1], k + 2 - w[0]);
            }
        }
    }
}
