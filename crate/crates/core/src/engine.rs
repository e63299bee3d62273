//! The inductive construction of the annihilator ideal's Gröbner basis.
//!
//! Starting from `F^(v) = F_v x^v`, whose annihilator is `<x^(1-v), z>`,
//! each coefficient `a = F_i` (for `i = v-1` down to `m`) augments the
//! inverse form and updates the viable pair `(f1, f2)` together with the
//! full basis tuple and the degree tuple recording where the length of
//! `f1` changed. The first two basis elements are always the viable pair.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::forms::{ominus, rem, Form, Monomial};
use crate::inverse::InverseForm;
use crate::univariate::UnivariatePoly;

/// Knobs for [`run`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineOptions {
    /// Keep the basis reduced after every step.
    pub reduced: bool,
    /// Record a snapshot of the basis and degree tuple after every step.
    pub trace: bool,
    /// Check viability and the stored denominator after every step.
    pub check_invariants: bool,
    /// Skip the GF(2) shortcut `q = 1` and always divide.
    pub generic_arithmetic: bool,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            reduced: false,
            trace: false,
            check_invariants: cfg!(debug_assertions),
            generic_arithmetic: false,
        }
    }
}

impl EngineOptions {
    pub fn reduced() -> Self {
        EngineOptions {
            reduced: true,
            ..Default::default()
        }
    }
}

/// A viable ordered pair for `I_F`, `|F| = m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViablePair {
    pub f1: Form,
    pub f2: Form,
    pub m: i64,
}

impl ViablePair {
    /// `d = |f2| - |f1|`.
    pub fn gap(&self) -> i64 {
        self.f2.degree() as i64 - self.f1.degree() as i64
    }

    /// `λ_F = |f1|`.
    pub fn lambda(&self) -> usize {
        self.f1.degree()
    }

    /// Structural viability: both monic, `z ∤ f1`, `z | f2` and
    /// `|f1| + |f2| = 2 - m`.
    pub fn check(&self) -> Result<()> {
        let fail = |what: &str| {
            Err(Error::InvariantViolation(format!(
                "pair ({}, {}) at m = {}: {what}",
                self.f1, self.f2, self.m
            )))
        };
        if !self.f1.is_monic() || !self.f2.is_monic() {
            return fail("not monic");
        }
        if self.f1.z_valuation() != 0 {
            return fail("z divides f1");
        }
        if self.f2.z_valuation() == 0 {
            return fail("z does not divide f2");
        }
        if (self.f1.degree() + self.f2.degree()) as i64 != 2 - self.m {
            return fail("degrees do not sum to 2 - m");
        }
        Ok(())
    }
}

/// What happened in the most recent step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepInfo {
    /// Discrepancy `Δ1 = Δ(f1; a ⌣ F)`.
    pub delta1: FieldElement,
    /// `q = Δ1 / denom` (zero when `Δ1 = 0`).
    pub q: FieldElement,
    /// Gap `d` before the step.
    pub gap_before: i64,
    /// `Δ1 != 0` and `d > 0`: the basis grew by one element.
    pub active: bool,
    /// Whether reduction replaced `f1` by its remainder modulo `f2`.
    pub reduced_f1: bool,
}

/// One row of the construction table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRow {
    pub m: i64,
    pub basis: Vec<Form>,
    pub degree_tuple: Vec<i64>,
}

/// The running construction for the subform of degree `m`.
#[derive(Debug, Clone)]
pub struct EngineState {
    basis: Vec<Form>,
    dtuple: Vec<i64>,
    denom: FieldElement,
    form: InverseForm,
    v: i64,
    profile: Vec<usize>,
    trace: Option<Vec<TraceRow>>,
    last: Option<StepInfo>,
    options: EngineOptions,
}

/// Discrepancy `Δ(phi; G) = [phi·G]_{|phi|+|G|}`, zero when
/// `|phi| + |G| > 0`.
pub fn discrepancy(phi: &Form, g: &InverseForm) -> FieldElement {
    let d = phi.degree() as i64 + g.degree();
    if d > 0 {
        return g.field().zero();
    }
    g.product_coeff(phi, d)
}

/// Base case `F = lc·x^v`: basis `(x^(1-v), z)`, degree tuple `(v, v+1)`.
pub fn init_state(v: i64, lc: FieldElement) -> Result<EngineState> {
    init_state_with(v, lc, EngineOptions::default())
}

pub fn init_state_with(v: i64, lc: FieldElement, options: EngineOptions) -> Result<EngineState> {
    if v > 0 {
        return Err(Error::IndexOutOfRange {
            index: v,
            lo: i64::MIN,
            hi: 0,
        });
    }
    let field = lc.field();
    let form = InverseForm::x_power(v, lc.clone())?;
    let lambda = (1 - v) as usize;
    let basis = vec![
        Form::monomial(field, Monomial::new(lambda, 0)),
        Form::monomial(field, Monomial::new(0, 1)),
    ];
    let dtuple = vec![v, v + 1];
    let trace = options.trace.then(|| {
        vec![TraceRow {
            m: v,
            basis: basis.clone(),
            degree_tuple: dtuple.clone(),
        }]
    });
    Ok(EngineState {
        basis,
        dtuple,
        denom: lc,
        form,
        v,
        profile: vec![lambda],
        trace,
        last: None,
        options,
    })
}

impl EngineState {
    pub fn field(&self) -> FieldSpec {
        self.denom.field()
    }

    /// Degree of the inverse form served by the current state.
    pub fn m(&self) -> i64 {
        self.form.degree()
    }

    /// Order of the inverse form (fixed by the base case).
    pub fn v(&self) -> i64 {
        self.v
    }

    pub fn f1(&self) -> &Form {
        &self.basis[0]
    }

    pub fn f2(&self) -> &Form {
        &self.basis[1]
    }

    pub fn pair(&self) -> ViablePair {
        ViablePair {
            f1: self.basis[0].clone(),
            f2: self.basis[1].clone(),
            m: self.m(),
        }
    }

    pub fn basis(&self) -> &[Form] {
        &self.basis
    }

    pub fn degree_tuple(&self) -> &[i64] {
        &self.dtuple
    }

    /// Stored denominator for the next quotient `q = Δ1 / denom`.
    pub fn denom(&self) -> &FieldElement {
        &self.denom
    }

    /// The inverse form processed so far.
    pub fn inverse_form(&self) -> &InverseForm {
        &self.form
    }

    /// `|f1|` after the base case and after every step.
    pub fn profile(&self) -> &[usize] {
        &self.profile
    }

    pub fn last_step(&self) -> Option<&StepInfo> {
        self.last.as_ref()
    }

    pub fn trace(&self) -> Option<&[TraceRow]> {
        self.trace.as_deref()
    }

    pub fn gap(&self) -> i64 {
        self.f2().degree() as i64 - self.f1().degree() as i64
    }

    fn quotient(&self, delta1: &FieldElement) -> Result<FieldElement> {
        if delta1.is_zero() {
            return Ok(self.field().zero());
        }
        if self.field().is_gf2() && !self.options.generic_arithmetic {
            return Ok(self.field().one());
        }
        delta1.checked_div(&self.denom)
    }

    /// Absorbs the next coefficient `a`, moving from `F` to `a ⌣ F`.
    pub fn step(mut self, a: FieldElement) -> Result<EngineState> {
        let g = self.form.augment(a);
        let delta1 = discrepancy(self.f1(), &g);
        if self.options.check_invariants {
            // the stored denominator is Δ(f2; G) along the whole construction
            let delta2 = discrepancy(self.f2(), &g);
            if delta2 != self.denom || self.denom.is_zero() {
                return Err(Error::InvariantViolation(format!(
                    "stored denominator {:?} but Δ(f2; G) = {:?}",
                    self.denom, delta2
                )));
            }
        }
        let q = self.quotient(&delta1)?;
        let gap_before = self.gap();
        let active = !delta1.is_zero() && gap_before > 0;
        let g1 = ominus(self.f1(), self.f2(), &q)?;
        let z = Monomial::new(0, 1);

        let old_basis = std::mem::take(&mut self.basis);
        let old_d = std::mem::take(&mut self.dtuple);
        let mut basis = Vec::with_capacity(old_basis.len() + 1);
        let mut dtuple = Vec::with_capacity(old_d.len() + 1);
        basis.push(g1);
        dtuple.push(g.degree());
        if active {
            basis.extend(old_basis.iter().map(|f| f.mul_monomial(z)));
            dtuple.extend(old_d.iter().copied());
            self.denom = delta1.clone();
        } else {
            basis.extend(old_basis[1..].iter().map(|f| f.mul_monomial(z)));
            dtuple.extend(old_d[1..].iter().copied());
        }
        self.basis = basis;
        self.dtuple = dtuple;
        self.form = g;
        self.last = Some(StepInfo {
            delta1,
            q,
            gap_before,
            active,
            reduced_f1: false,
        });
        if self.options.reduced {
            self = reduce_basis(self);
        }
        if self.options.check_invariants {
            self.pair().check()?;
        }
        self.profile.push(self.f1().degree());
        if let Some(rows) = self.trace.as_mut() {
            rows.push(TraceRow {
                m: self.form.degree(),
                basis: self.basis.clone(),
                degree_tuple: self.dtuple.clone(),
            });
        }
        Ok(self)
    }

    /// Packages the current state as the finished basis.
    pub fn finish(&self) -> AnnihilatorBasis {
        AnnihilatorBasis {
            field: self.field(),
            basis: self.basis.clone(),
            dtuple: self.dtuple.clone(),
            m: self.m(),
            v: self.v,
            lambda: self.f1().degree(),
            profile: self.profile.clone(),
            dim: self.f1().degree() * self.f2().degree(),
            reduced: self.options.reduced,
        }
    }
}

/// Replaces `f1` by `rem(f1, [f2])` when `LM(f2)` divides a monomial of
/// `f1`. On a state whose basis was reduced before its last step, the
/// result is the reduced Gröbner basis.
pub fn reduce_basis(mut state: EngineState) -> EngineState {
    let lm2 = state.f2().lm();
    if state.f1().terms().any(|(_, m)| lm2.divides(m)) {
        let r = rem(state.f1(), &state.basis[1..2])
            .expect("f1 has a leading monomial that f2 cannot reduce");
        state.basis[0] = r;
        if let Some(info) = state.last.as_mut() {
            info.reduced_f1 = true;
        }
    }
    state
}

/// The finished construction for an inverse form `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorBasis {
    pub field: FieldSpec,
    /// Gröbner basis in strictly decreasing lex order of leading terms.
    pub basis: Vec<Form>,
    /// Degree tuple, same length as `basis`.
    pub dtuple: Vec<i64>,
    /// Total degree of `F`.
    pub m: i64,
    /// Order of `F`.
    pub v: i64,
    /// `λ_F = |f1|`.
    pub lambda: usize,
    /// `λ_i` for `i = v, v-1, ..., m`.
    pub profile: Vec<usize>,
    pub dim: usize,
    pub reduced: bool,
}

/// Runs the construction over all coefficients of `F`.
pub fn run(f: &InverseForm, options: EngineOptions) -> Result<AnnihilatorBasis> {
    Ok(run_state(f, options)?.finish())
}

/// Like [`run`] but returns the final state (with its trace, if requested).
pub fn run_state(f: &InverseForm, options: EngineOptions) -> Result<EngineState> {
    let v = f.order();
    let mut state = init_state_with(v, f.coeff(v), options)?;
    for i in (f.degree()..v).rev() {
        state = state.step(f.coeff(i))?;
    }
    Ok(state)
}

/// Whether the first element generates the only monic annihilating form of
/// its degree with a pure x-power leading term, plus the second annihilator
/// witnessing non-uniqueness of `f2` when `d > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Uniqueness {
    pub f1_unique: bool,
    pub witness: Option<Form>,
}

impl AnnihilatorBasis {
    pub fn f1(&self) -> &Form {
        &self.basis[0]
    }

    pub fn f2(&self) -> &Form {
        &self.basis[1]
    }

    /// `d = |f2| - |f1|`.
    pub fn gap(&self) -> i64 {
        self.f2().degree() as i64 - self.f1().degree() as i64
    }

    /// `λ_j` read off the profile for `m <= j <= v`, with `λ_{v+1} = 0`.
    pub fn lambda_at(&self, j: i64) -> Option<usize> {
        if j == self.v + 1 {
            return Some(0);
        }
        if j < self.m || j > self.v {
            return None;
        }
        self.profile.get((self.v - j) as usize).copied()
    }

    /// `dim_K R/I_F = |f1|·|f2|`.
    pub fn dimension(&self) -> usize {
        self.f1().degree() * self.f2().degree()
    }

    /// `sum_{i>=2} (D_i - D_{i-1}) λ_{D_{i-1}}`, the staircase as a stack of
    /// rectangles.
    pub fn rectangle_sum(&self) -> Option<usize> {
        self.dtuple
            .windows(2)
            .map(|w| Some((w[1] - w[0]) as usize * self.lambda_at(w[0])?))
            .sum()
    }

    /// Leading exponents `e(F_i)` read from the forms.
    pub fn staircase(&self) -> Vec<Monomial> {
        self.basis.iter().map(Form::lm).collect()
    }

    /// Leading exponents predicted from the degree tuple and profile:
    /// `(λ_{D_i}, D_i - m)`.
    pub fn predicted_staircase(&self) -> Option<Vec<Monomial>> {
        self.dtuple
            .iter()
            .map(|&d| Some(Monomial::new(self.lambda_at(d)?, (d - self.m) as usize)))
            .collect()
    }

    /// The dehomogenised `f1`, a minimal polynomial of the sequence.
    pub fn min_poly(&self) -> UnivariatePoly {
        self.f1().dehomogenize()
    }

    /// Fast reducedness check: only `f2` can reduce a monomial of `f1`.
    pub fn is_reduced(&self) -> bool {
        is_reduced_pair(&self.basis)
    }

    /// `f1` unique iff `|f1| < |f2|`; witness `f1 z^d - f2` when `d > 0`.
    pub fn classify_uniqueness(&self) -> Uniqueness {
        let d = self.gap();
        let witness = (d > 0).then(|| {
            self.f1()
                .mul_monomial(Monomial::new(0, d as usize))
                .sub(self.f2())
                .expect("f1 z^d and f2 have different leading terms")
        });
        Uniqueness {
            f1_unique: d > 0,
            witness,
        }
    }

    /// `z`-valuation of `F_i` equals `D_i - m` for every `i`.
    pub fn factor_check(&self) -> bool {
        self.basis
            .iter()
            .zip(&self.dtuple)
            .all(|(f, &d)| f.z_valuation() as i64 == d - self.m)
    }

    /// Each interior `D_i` is the least `j` with `λ_{D_{i-1}} > λ_j`.
    pub fn next_degree_check(&self) -> bool {
        let c = self.dtuple.len();
        (1..c.saturating_sub(1)).all(|i| {
            let Some(prev) = self.lambda_at(self.dtuple[i - 1]) else {
                return false;
            };
            let least =
                (self.m..=self.v + 1).find(|&j| self.lambda_at(j).is_some_and(|l| prev > l));
            least == Some(self.dtuple[i])
        })
    }
}

/// Reducedness checked on `f1` against `LM(f2)` only. Valid for bases
/// produced by the construction, where no other element can reduce.
pub fn is_reduced_pair(basis: &[Form]) -> bool {
    match basis {
        [f1, f2, ..] => {
            let lm2 = f2.lm();
            !f1.terms().any(|(_, m)| lm2.divides(m))
        }
        _ => true,
    }
}

/// Reducedness by definition: no monomial of any element is divisible by
/// the leading monomial of another element.
pub fn is_reduced_full(basis: &[Form]) -> bool {
    basis.iter().enumerate().all(|(i, g)| {
        g.terms().all(|(_, m)| {
            basis
                .iter()
                .enumerate()
                .all(|(j, h)| i == j || !h.lm().divides(m))
        })
    })
}
