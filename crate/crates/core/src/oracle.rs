//! Slow, independent verifiers.
//!
//! Nothing here calls into the engine's arithmetic shortcuts: contraction is
//! done monomial by monomial, division and S-polynomials use a sparse
//! representation of their own, and the classical Berlekamp–Massey routine
//! keeps Massey's length-change bookkeeping.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bm::minimal_polynomial;
use crate::engine::{discrepancy, init_state_with, run, AnnihilatorBasis, EngineOptions};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::forms::{Form, Monomial};
use crate::inverse::{InverseForm, Sequence};
use crate::univariate::UnivariatePoly;

/// Upper bound on the number of candidates any exhaustive search visits.
pub const SEARCH_LIMIT: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport {
            checks: Vec::new(),
            passed: true,
        }
    }

    pub fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.passed &= passed;
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn search_size(field: FieldSpec, k: usize) -> Result<u128> {
    let p = field.order().ok_or(Error::InfiniteField)? as u128;
    let mut size: u128 = 1;
    for _ in 0..k {
        size = size.saturating_mul(p);
    }
    if size > SEARCH_LIMIT {
        return Err(Error::SearchSpaceTooLarge {
            size,
            limit: SEARCH_LIMIT,
        });
    }
    Ok(size)
}

/// Digits of `index` in base `p`, most significant first, so increasing
/// `index` walks coefficient vectors in lexicographic order.
fn lex_vector(field: FieldSpec, p: u64, k: usize, mut index: u128) -> Vec<FieldElement> {
    let mut out = vec![field.zero(); k];
    for slot in out.iter_mut().rev() {
        *slot = field
            .nth((index % p as u128) as u64)
            .expect("digit below p");
        index /= p as u128;
    }
    out
}

fn recurrence_holds(tail: &[FieldElement], s: &[FieldElement]) -> bool {
    // x^k + sum_j tail[j] x^j, i.e. s_i = -sum_j tail[j] s_{i-k+j}
    let k = tail.len();
    (k..s.len()).all(|i| {
        let mut acc = s[i].clone();
        for (j, c) in tail.iter().enumerate() {
            acc = &acc + &(c * &s[i - k + j]);
        }
        acc.is_zero()
    })
}

/// Lexicographically least monic annihilating polynomial of least degree
/// `<= max_deg`, by exhaustive search.
pub fn brute_min_poly(s: &Sequence, max_deg: usize) -> Result<Option<UnivariatePoly>> {
    let field = s.field();
    let p = field.order().ok_or(Error::InfiniteField)?;
    search_size(field, max_deg)?;
    for k in 0..=max_deg {
        let total = search_size(field, k)?;
        for idx in 0..total {
            let tail = lex_vector(field, p, k, idx);
            if recurrence_holds(&tail, s.terms()) {
                let mut coeffs = tail;
                coeffs.push(field.one());
                return Ok(Some(UnivariatePoly::new(field, coeffs)));
            }
        }
    }
    Ok(None)
}

/// Contraction one monomial pair at a time: `x^a z^b ∘ x^j z^(m-j)` keeps
/// `x^(a+j) z^(b+m-j)` when both exponents are non-positive.
pub fn contract_naive(phi: &Form, f: &InverseForm) -> BTreeMap<i64, FieldElement> {
    let mut out: BTreeMap<i64, FieldElement> = BTreeMap::new();
    let m = f.degree();
    for (c, mono) in phi.terms() {
        for j in m..=0 {
            let fj = f.coeff(j);
            if fj.is_zero() {
                continue;
            }
            let ex = mono.x as i64 + j;
            let ez = mono.z as i64 + m - j;
            if ex <= 0 && ez <= 0 {
                let prod = c * &fj;
                let slot = out.entry(ex).or_insert_with(|| f.field().zero());
                *slot = &*slot + &prod;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn annihilates_naive(phi: &Form, f: &InverseForm) -> bool {
    contract_naive(phi, f).is_empty()
}

/// All monic forms `x^k + (lower x-powers)` of degree `k` annihilating `f`.
pub fn brute_annihilators(f: &InverseForm, k: usize) -> Result<Vec<Form>> {
    let field = f.field();
    let p = field.order().ok_or(Error::InfiniteField)?;
    let total = search_size(field, k)?;
    let mut out = Vec::new();
    for idx in 0..total {
        let mut coeffs = lex_vector(field, p, k, idx);
        coeffs.reverse();
        coeffs.push(field.one());
        let phi = Form::new(coeffs)?;
        if annihilates_naive(&phi, f) {
            out.push(phi);
        }
    }
    Ok(out)
}

type Sparse = BTreeMap<Monomial, FieldElement>;

fn to_sparse(f: &Form) -> Sparse {
    f.terms().map(|(c, m)| (m, c.clone())).collect()
}

fn from_sparse(field: FieldSpec, p: &Sparse) -> Option<Form> {
    let (&top, _) = p.iter().next_back()?;
    let d = top.degree();
    let mut dense = vec![field.zero(); d + 1];
    for (m, c) in p {
        assert_eq!(m.degree(), d, "inhomogeneous result");
        dense[m.x] = c.clone();
    }
    Form::from_dense(dense)
}

/// `p -= c * mono * g`.
fn sub_multiple(p: &mut Sparse, c: &FieldElement, mono: Monomial, g: &Sparse) {
    for (gm, gc) in g {
        let key = Monomial::new(gm.x + mono.x, gm.z + mono.z);
        let cur = p.remove(&key).unwrap_or_else(|| c.field().zero());
        let next = &cur - &(c * gc);
        if !next.is_zero() {
            p.insert(key, next);
        }
    }
}

/// Textbook multivariate division: the remainder of `f` modulo `divisors`.
pub fn divide(f: &Form, divisors: &[Form]) -> Option<Form> {
    let field = f.field();
    let gs: Vec<Sparse> = divisors.iter().map(to_sparse).collect();
    let mut p = to_sparse(f);
    let mut r = Sparse::new();
    while let Some((&lm, lc)) = p.iter().next_back() {
        let lc = lc.clone();
        let hit = gs.iter().find_map(|g| {
            let (&glm, glc) = g.iter().next_back()?;
            glm.divides(lm).then_some((g, glm, glc))
        });
        match hit {
            Some((g, glm, glc)) => {
                let c = lc.checked_div(glc).expect("nonzero leading coefficient");
                let shift = Monomial::new(lm.x - glm.x, lm.z - glm.z);
                sub_multiple(&mut p, &c, shift, g);
            }
            None => {
                p.remove(&lm);
                r.insert(lm, lc);
            }
        }
    }
    from_sparse(field, &r)
}

fn spoly_naive(f: &Form, g: &Form) -> Option<Form> {
    let (fm, fc) = (f.lm(), f.lc().clone());
    let (gm, gc) = (g.lm(), g.lc().clone());
    let l = fm.lcm(gm);
    let mut p = Sparse::new();
    let fi = fc.inv().expect("nonzero");
    let gi = gc.inv().expect("nonzero");
    sub_multiple(
        &mut p,
        &(-&fi),
        Monomial::new(l.x - fm.x, l.z - fm.z),
        &to_sparse(f),
    );
    sub_multiple(
        &mut p,
        &gi,
        Monomial::new(l.x - gm.x, l.z - gm.z),
        &to_sparse(g),
    );
    from_sparse(f.field(), &p)
}

/// The first pair `(i, j)` whose S-polynomial leaves a nonzero remainder.
pub fn buchberger_witness(basis: &[Form]) -> Option<(usize, usize, Form)> {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if let Some(s) = spoly_naive(&basis[i], &basis[j]) {
                if let Some(r) = divide(&s, basis) {
                    return Some((i, j, r));
                }
            }
        }
    }
    None
}

pub fn buchberger_certify(basis: &[Form]) -> bool {
    buchberger_witness(basis).is_none()
}

/// Number of monomials outside the ideal of leading monomials.
pub fn staircase_dim_count(basis: &[Form]) -> Result<usize> {
    let lms: Vec<Monomial> = basis.iter().map(Form::lm).collect();
    let xmax = lms.iter().filter(|m| m.z == 0).map(|m| m.x).min();
    let zmax = lms.iter().filter(|m| m.x == 0).map(|m| m.z).min();
    let (Some(xmax), Some(zmax)) = (xmax, zmax) else {
        return Err(Error::InfiniteStaircase);
    };
    let mut count = 0;
    for a in 0..xmax {
        for b in 0..zmax {
            let m = Monomial::new(a, b);
            if !lms.iter().any(|l| l.divides(m)) {
                count += 1;
            }
        }
    }
    Ok(count)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalBm {
    pub lc: usize,
    /// Connection polynomial `C(x)` with `C(0) = 1`.
    pub connection: UnivariatePoly,
    /// `x^lc C(1/x)`, a monic annihilating polynomial of degree `lc`.
    pub annihilator: UnivariatePoly,
    pub profile: Vec<usize>,
}

/// Massey's shift-register synthesis with the last-length-change rule.
pub fn classical_bm(s: &Sequence) -> ClassicalBm {
    let field = s.field();
    let t = s.terms();
    let mut c = UnivariatePoly::one(field);
    let mut b = UnivariatePoly::one(field);
    let mut l = 0usize;
    let mut shift = 1usize;
    let mut bd = field.one();
    let mut profile = Vec::with_capacity(t.len());
    for n in 0..t.len() {
        let mut d = t[n].clone();
        for i in 1..=l {
            d = &d + &(&c.coeff(i) * &t[n - i]);
        }
        if d.is_zero() {
            shift += 1;
        } else {
            let coef = d.checked_div(&bd).expect("nonzero");
            let next = c.sub(&b.shift(shift).scale(&coef));
            if 2 * l <= n {
                b = std::mem::replace(&mut c, next);
                l = n + 1 - l;
                bd = d;
                shift = 1;
            } else {
                c = next;
                shift += 1;
            }
        }
        profile.push(l);
    }
    let annihilator = c.reciprocal(l);
    ClassicalBm {
        lc: l,
        connection: c,
        annihilator,
        profile,
    }
}

/// Every monomial of degree `1 - m` annihilates `F`, and no element of the
/// computed basis is a constant.
pub fn power_ideal_check(f: &InverseForm) -> Result<bool> {
    let basis = run(f, EngineOptions::default())?;
    Ok(power_ideal_check_with(f, &basis.basis))
}

pub fn power_ideal_check_with(f: &InverseForm, basis: &[Form]) -> bool {
    let top = (1 - f.degree()) as usize;
    let monomials_ok = (0..=top)
        .all(|i| annihilates_naive(&Form::monomial(f.field(), Monomial::new(i, top - i)), f));
    monomials_ok && basis.iter().all(|g| g.degree() > 0)
}

/// Monic, annihilating, pairwise non-divisible leading terms, and closed
/// under S-polynomial reduction.
pub fn minimal_gb_check(basis: &[Form], f: &InverseForm) -> bool {
    let monic = basis.iter().all(Form::is_monic);
    let annihilating = basis.iter().all(|g| annihilates_naive(g, f));
    let lms: Vec<_> = basis.iter().map(Form::lm).collect();
    let antichain = lms.iter().enumerate().all(|(i, a)| {
        lms.iter()
            .enumerate()
            .all(|(j, b)| i == j || !a.divides(*b))
    });
    monic && annihilating && antichain && buchberger_certify(basis)
}

/// Reduces every element by all the others until nothing changes, then
/// normalises and sorts by decreasing leading monomial.
pub fn full_reduction(basis: &[Form]) -> Vec<Form> {
    let mut cur: Vec<Form> = basis.to_vec();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < cur.len() {
            let others: Vec<Form> = cur
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            match divide(&cur[i], &others) {
                Some(r) if r == cur[i] => i += 1,
                Some(r) => {
                    cur[i] = r;
                    changed = true;
                    i += 1;
                }
                None => {
                    cur.remove(i);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut out: Vec<Form> = cur.iter().map(Form::make_monic).collect();
    // lex with x > z, which is how the construction orders its output
    out.sort_by_key(|g| {
        let lm = g.lm();
        (std::cmp::Reverse(lm.x), lm.z)
    });
    out
}

/// Steps the construction by hand and records every broken structural
/// relation: viability, the gap rule, the stored denominator, the degree
/// tuple and staircase relations, the size bound and the factorisation.
pub fn step_violations(f: &InverseForm, options: EngineOptions) -> Result<Vec<String>> {
    let opts = EngineOptions {
        check_invariants: false,
        trace: false,
        ..options
    };
    let v = f.order();
    let mut state = init_state_with(v, f.coeff(v), opts)?;
    let mut out = Vec::new();
    structure_violations(&state.finish(), &mut out);
    for i in (f.degree()..v).rev() {
        let g = state.inverse_form().augment(f.coeff(i));
        let fresh = discrepancy(state.f2(), &g);
        if state.denom().is_zero() || &fresh != state.denom() {
            out.push(format!(
                "m = {i}: denominator {} but Δ(f2; G) = {fresh}",
                state.denom()
            ));
        }
        let (l1, l2, d) = (state.f1().degree(), state.f2().degree(), state.gap());
        state = state.step(f.coeff(i))?;
        let info = state.last_step().expect("just stepped").clone();
        if let Err(e) = state.pair().check() {
            out.push(format!("m = {i}: {e}"));
        }
        // a vanishing discrepancy keeps f1 as it was
        let want_len = if info.delta1.is_zero() {
            l1
        } else {
            l1.max(l2)
        };
        if state.f1().degree() != want_len {
            out.push(format!(
                "m = {i}: |g1| = {} but expected {want_len}",
                state.f1().degree()
            ));
        }
        let want = if info.delta1.is_zero() {
            d + 1
        } else {
            1 - d.abs()
        };
        if state.gap() != want {
            out.push(format!(
                "m = {i}: gap {} after {d}, expected {want}",
                state.gap()
            ));
        }
        structure_violations(&state.finish(), &mut out);
    }
    Ok(out)
}

fn structure_violations(b: &AnnihilatorBasis, out: &mut Vec<String>) {
    let m = b.m;
    let mut fail = |what: String| out.push(format!("m = {m}: {what}"));
    if b.basis.len() != b.dtuple.len() {
        fail("basis and degree tuple lengths differ".into());
    }
    if !b.dtuple.windows(2).all(|w| w[0] < w[1]) {
        fail(format!("degree tuple {:?} not increasing", b.dtuple));
    }
    if b.dtuple.last() != Some(&(b.v + 1)) {
        fail(format!("degree tuple {:?} does not end at v + 1", b.dtuple));
    }
    if b.predicted_staircase().as_deref() != Some(&b.staircase()[..]) {
        fail(format!(
            "staircase {:?} vs predicted {:?}",
            b.staircase(),
            b.predicted_staircase()
        ));
    }
    for w in b.dtuple.windows(2) {
        match (b.lambda_at(w[0]), b.lambda_at(w[1])) {
            (Some(a), Some(c)) if (a + c) as i64 == 2 - w[1] => {}
            other => fail(format!("lambda sum at D = {}: {other:?}", w[1])),
        }
    }
    let lms = b.staircase();
    if !lms.windows(2).all(|w| w[0].x > w[1].x && w[0].z < w[1].z) {
        fail("leading terms not strictly decreasing in lex".into());
    }
    if b.basis.len() > b.lambda + 1 {
        fail(format!(
            "{} elements for lambda {}",
            b.basis.len(),
            b.lambda
        ));
    }
    if !b.factor_check() {
        fail("z-valuations differ from D - m".into());
    }
    if !b.next_degree_check() {
        fail("interior degree tuple entry is not the next drop".into());
    }
    if b.rectangle_sum() != Some(b.dimension()) {
        fail(format!(
            "rectangle sum {:?} vs {}",
            b.rectangle_sum(),
            b.dimension()
        ));
    }
}

fn joined(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// Runs every check applicable to a nontrivial sequence.
pub fn verify_sequence(s: &Sequence) -> Result<VerificationReport> {
    let f = s.to_inverse_form()?;
    let plain = run(&f, EngineOptions::default())?;
    let reduced = run(&f, EngineOptions::reduced())?;
    let mut report = verify_basis(&f, &plain, &reduced);

    let mp = minimal_polynomial(s);
    let v = s.order().expect("nontrivial");
    let mu = plain.min_poly();
    report.push(
        "min_poly",
        mp.mu1 == mu && mp.mu1.annihilates(s.terms()),
        format!("bm {} / engine {}", mp.mu1, mu),
    );
    report.push(
        "profile",
        mp.profile[v..] == plain.profile[..] && mp.profile[..v].iter().all(|&l| l == 0),
        joined(&mp.profile),
    );
    let cl = classical_bm(s);
    report.push(
        "classical_bm",
        cl.lc == mp.lc && cl.annihilator.annihilates(s.terms()) && cl.profile == mp.profile,
        format!("lc {} / {}", cl.lc, mp.lc),
    );
    match brute_min_poly(s, mp.lc) {
        Ok(found) => {
            let deg = found.as_ref().and_then(UnivariatePoly::degree);
            report.push(
                "brute_min_poly",
                deg == Some(mp.lc),
                format!(
                    "least degree {}",
                    deg.map_or("none".into(), |d| d.to_string())
                ),
            );
        }
        Err(e) => report.push("brute_min_poly", true, format!("skipped: {e}")),
    }
    Ok(report)
}

/// Checks on an engine run over `f`, given both the minimal and the
/// reduced-mode outputs.
pub fn verify_basis(
    f: &InverseForm,
    plain: &AnnihilatorBasis,
    reduced: &AnnihilatorBasis,
) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.push(
        "minimal_gb",
        minimal_gb_check(&plain.basis, f),
        format!("{} elements", plain.basis.len()),
    );
    report.push(
        "reduced_gb",
        minimal_gb_check(&reduced.basis, f) && full_reduction(&plain.basis) == reduced.basis,
        "reduced run equals full reduction",
    );
    let count = staircase_dim_count(&plain.basis);
    report.push(
        "dimension",
        count.as_ref().ok() == Some(&plain.dimension())
            && plain.rectangle_sum() == Some(plain.dimension()),
        match &count {
            Ok(c) => format!("|f1|·|f2| = {}, staircase count {c}", plain.dimension()),
            Err(e) => format!(
                "|f1|·|f2| = {}, staircase count failed: {e}",
                plain.dimension()
            ),
        },
    );
    report.push(
        "staircase",
        plain.predicted_staircase().as_deref() == Some(&plain.staircase()[..]),
        plain
            .staircase()
            .iter()
            .map(|m| format!("({},{})", m.x, m.z))
            .collect::<Vec<_>>()
            .join(" "),
    );
    report.push("factor", plain.factor_check(), "z-valuations match D - m");
    report.push(
        "next_degree",
        plain.next_degree_check(),
        "interior D from profile",
    );
    report.push(
        "power_ideal",
        power_ideal_check_with(f, &plain.basis),
        format!("monomials of degree {}", 1 - plain.m),
    );
    report.push(
        "size_bound",
        plain.basis.len() <= plain.lambda + 1,
        format!("{} <= {}", plain.basis.len(), plain.lambda + 1),
    );
    let u = plain.classify_uniqueness();
    let witness_ok = u
        .witness
        .as_ref()
        .is_none_or(|w| w.is_monic() && w.z_valuation() > 0 && annihilates_naive(w, f));
    let brute = brute_annihilators(f, plain.lambda);
    let (agrees, detail) = match &brute {
        Ok(all) => (
            (all.len() == 1) == u.f1_unique,
            format!(
                "{} monic annihilators of degree {}",
                all.len(),
                plain.lambda
            ),
        ),
        Err(e) => (true, format!("brute force skipped: {e}")),
    };
    report.push("uniqueness", witness_ok && agrees, detail);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::parse_form;
    use crate::inverse::from_sequence;

    fn seq(p: u32, v: &[i64]) -> Sequence {
        Sequence::from_i64s(FieldSpec::Prime(p), v).unwrap()
    }

    fn example() -> Sequence {
        seq(2, &[1, 0, 0, 1, 1, 0, 1, 0])
    }

    fn forms(p: u32, list: &[&str]) -> Vec<Form> {
        list.iter()
            .map(|s| parse_form(FieldSpec::Prime(p), s).unwrap())
            .collect()
    }

    fn example_basis() -> Vec<Form> {
        forms(
            2,
            &["x^4+xz^3+z^4", "x^3z^2+x^2z^3+xz^4+z^5", "xz^5", "z^8"],
        )
    }

    #[test]
    fn brute_min_poly_examples() {
        let found = brute_min_poly(&example(), 5).unwrap().unwrap();
        assert_eq!(found.to_string(), "x^4+x+1");
        assert_eq!(
            brute_min_poly(&seq(2, &[1]), 2)
                .unwrap()
                .unwrap()
                .to_string(),
            "x"
        );
        let found = brute_min_poly(&seq(3, &[1, 2, 1]), 3).unwrap().unwrap();
        assert_eq!(
            found.degree(),
            Some(minimal_polynomial(&seq(3, &[1, 2, 1])).lc)
        );
        assert_eq!(brute_min_poly(&example(), 3).unwrap(), None);
    }

    #[test]
    fn brute_min_poly_guards() {
        let big = seq(101, &[1, 2, 3, 4, 5]);
        assert!(matches!(
            brute_min_poly(&big, 4),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
        let q = Sequence::from_i64s(FieldSpec::Rational, &[1, 2]).unwrap();
        assert_eq!(brute_min_poly(&q, 1), Err(Error::InfiniteField));
    }

    #[test]
    fn naive_contraction_matches_convolution() {
        let f = from_sequence(&example()).unwrap();
        for g in example_basis() {
            assert!(annihilates_naive(&g, &f));
        }
        let x = parse_form(FieldSpec::Prime(2), "x").unwrap();
        assert!(!annihilates_naive(&x, &f));
        assert_eq!(
            contract_naive(&x, &f).len(),
            f.contract(&x)
                .unwrap()
                .coeffs()
                .iter()
                .filter(|c| !c.is_zero())
                .count()
        );
    }

    #[test]
    fn buchberger_examples() {
        assert!(buchberger_certify(&example_basis()));
        assert!(buchberger_certify(&forms(3, &["x^2+xz", "z"])));
        let (i, j, r) = buchberger_witness(&forms(3, &["x^2", "xz+z^2"])).unwrap();
        assert_eq!((i, j), (0, 1));
        assert_eq!(r, parse_form(FieldSpec::Prime(3), "z^3").unwrap());
    }

    #[test]
    fn division_examples() {
        let g = forms(3, &["x^2", "xz+z^2"]);
        let f = parse_form(FieldSpec::Prime(3), "x^2z+xz^2").unwrap();
        assert_eq!(
            divide(&f, &g),
            Some(parse_form(FieldSpec::Prime(3), "2z^3").unwrap())
        );
        let f = parse_form(FieldSpec::Prime(3), "x^2z+xz^2+z^3").unwrap();
        assert_eq!(divide(&f, &g), None);
        let f = parse_form(FieldSpec::Prime(3), "xz").unwrap();
        assert_eq!(
            divide(&f, &g),
            Some(parse_form(FieldSpec::Prime(3), "2z^2").unwrap())
        );
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase_dim_count(&example_basis()), Ok(20));
        assert_eq!(staircase_dim_count(&forms(2, &["x", "z"])), Ok(1));
        assert_eq!(
            staircase_dim_count(&forms(2, &["x^2", "xz"])),
            Err(Error::InfiniteStaircase)
        );
        let f = from_sequence(&seq(3, &[1, 2, 1])).unwrap();
        let out = run(&f, EngineOptions::default()).unwrap();
        assert_eq!(staircase_dim_count(&out.basis), Ok(out.dimension()));
    }

    #[test]
    fn classical_bm_examples() {
        let r = classical_bm(&example());
        assert_eq!(r.lc, 4);
        assert_eq!(r.profile, vec![1, 1, 1, 3, 3, 3, 4, 4]);
        assert!(r.annihilator.annihilates(example().terms()));
        assert_eq!(classical_bm(&seq(2, &[1])).lc, 1);
        let s = seq(3, &[1, 2, 1, 2]);
        assert_eq!(classical_bm(&s).profile, minimal_polynomial(&s).profile);
    }

    #[test]
    fn power_ideal_examples() {
        let f = from_sequence(&example()).unwrap();
        assert_eq!(power_ideal_check(&f), Ok(true));
        let one = InverseForm::x_power(0, FieldSpec::Prime(2).one()).unwrap();
        assert_eq!(power_ideal_check(&one), Ok(true));
        let phony = forms(2, &["x^4+xz^3+z^4", "1"]);
        assert!(!power_ideal_check_with(&f, &phony));
    }

    #[test]
    fn minimal_gb_examples() {
        let f = from_sequence(&example()).unwrap();
        assert!(minimal_gb_check(&example_basis(), &f));
        assert!(!minimal_gb_check(&forms(2, &["x", "x^2"]), &f));
        let g3 = from_sequence(&seq(3, &[1, 2, 1])).unwrap();
        let mut basis = run(&g3, EngineOptions::default()).unwrap().basis;
        assert!(minimal_gb_check(&basis, &g3));
        basis[0] = basis[0].scale(&FieldSpec::Prime(3).from_i64(2)).unwrap();
        assert!(!minimal_gb_check(&basis, &g3));
    }

    #[test]
    fn full_reduction_examples() {
        let g = forms(3, &["x^2+xz", "xz", "z^2"]);
        assert_eq!(full_reduction(&g), forms(3, &["x^2", "xz", "z^2"]));
        assert_eq!(full_reduction(&example_basis()), example_basis());
    }

    #[test]
    fn verify_example() {
        let report = verify_sequence(&example()).unwrap();
        assert!(report.passed, "{:?}", report.failures().collect::<Vec<_>>());
        assert!(report.checks.len() >= 10);
    }

    #[test]
    fn step_violations_clean_on_examples() {
        let f = from_sequence(&example()).unwrap();
        assert_eq!(step_violations(&f, EngineOptions::default()), Ok(vec![]));
        assert_eq!(step_violations(&f, EngineOptions::reduced()), Ok(vec![]));
        let g = from_sequence(&seq(5, &[0, 3, 1, 4, 1, 0, 2])).unwrap();
        assert_eq!(step_violations(&g, EngineOptions::default()), Ok(vec![]));
    }

    #[test]
    fn report_conjunction() {
        let mut r = VerificationReport::new();
        r.push("a", true, "");
        assert!(r.passed);
        r.push("b", false, "nope");
        assert!(!r.passed);
        assert_eq!(r.failures().count(), 1);
    }
}
