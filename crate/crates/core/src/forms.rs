//! Forms (homogeneous polynomials) in `K[x, z]` under grlex with `x > z`.
//!
//! A form of degree `d` is stored densely by x-degree: `coeffs[j]` is the
//! coefficient of `x^j z^(d-j)`. Within a form every monomial has the same
//! total degree, so grlex reduces to comparing x-degrees. The zero
//! polynomial is never a [`Form`]; operations that may produce it return
//! `Option<Form>`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::univariate::{write_monomial, UnivariatePoly};

/// `x^x z^z`. `Ord` is grlex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: usize,
    pub z: usize,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, z: 0 };

    pub fn new(x: usize, z: usize) -> Self {
        Monomial { x, z }
    }

    pub fn degree(self) -> usize {
        self.x + self.z
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.x <= other.x && self.z <= other.z
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial::new(self.x.max(other.x), self.z.max(other.z))
    }

    /// `self / other`, if exact.
    pub fn checked_div(self, other: Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial::new(self.x - other.x, self.z - other.z))
    }
}

/// Graded-lexicographic comparison with `x > z`.
pub fn grlex_cmp(a: Monomial, b: Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.x.cmp(&b.x))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grlex_cmp(*self, *other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.x == 0 && self.z == 0 {
            return f.write_str("1");
        }
        let mut s = String::new();
        write_monomial(&mut s, self.x, self.z);
        f.write_str(&s)
    }
}

/// A nonzero form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    coeffs: Vec<FieldElement>,
}

impl Form {
    /// Builds a form from `coeffs[j]` = coefficient of `x^j z^(len-1-j)`.
    pub fn new(coeffs: Vec<FieldElement>) -> Result<Form> {
        Form::from_dense(coeffs).ok_or(Error::ZeroForm)
    }

    /// Like [`Form::new`] but maps the all-zero vector to `None`.
    pub fn from_dense(coeffs: Vec<FieldElement>) -> Option<Form> {
        if coeffs.iter().all(FieldElement::is_zero) {
            return None;
        }
        debug_assert!(coeffs.windows(2).all(|w| w[0].field() == w[1].field()));
        Some(Form { coeffs })
    }

    /// `c * x^m.x * z^m.z`.
    pub fn term(c: FieldElement, m: Monomial) -> Result<Form> {
        let mut coeffs = vec![c.field().zero(); m.degree() + 1];
        coeffs[m.x] = c;
        Form::new(coeffs)
    }

    /// The monic monomial `x^m.x * z^m.z`.
    pub fn monomial(field: FieldSpec, m: Monomial) -> Form {
        Form::term(field.one(), m).expect("one is nonzero")
    }

    pub fn field(&self) -> FieldSpec {
        self.coeffs[0].field()
    }

    /// Total degree `|phi|`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^j z^(deg-j)`.
    pub fn coeff(&self, j: usize) -> &FieldElement {
        &self.coeffs[j]
    }

    /// Nonzero terms in decreasing grlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&FieldElement, Monomial)> + '_ {
        let d = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(j, c)| (c, Monomial::new(j, d - j)))
    }

    fn top_index(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("forms are nonzero")
    }

    /// Leading coefficient and leading monomial under grlex.
    pub fn leading(&self) -> (&FieldElement, Monomial) {
        let j = self.top_index();
        (&self.coeffs[j], Monomial::new(j, self.degree() - j))
    }

    pub fn lm(&self) -> Monomial {
        self.leading().1
    }

    pub fn lc(&self) -> &FieldElement {
        self.leading().0
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_one()
    }

    /// Monic with a pure x-power leading monomial.
    pub fn in_phi(&self) -> bool {
        self.is_monic() && self.lm().z == 0
    }

    /// Largest `p` with `z^p | self`.
    pub fn z_valuation(&self) -> usize {
        // z^p divides the form iff the top p x-positions vanish
        self.degree() - self.top_index()
    }

    /// `(self / z^p, p)` with `p` the z-valuation.
    pub fn split_z(&self) -> (Form, usize) {
        let p = self.z_valuation();
        let cofactor = Form {
            coeffs: self.coeffs[..self.coeffs.len() - p].to_vec(),
        };
        (cofactor, p)
    }

    /// `self / z` when `z | self`.
    pub fn div_z(&self) -> Option<Form> {
        (self.z_valuation() > 0).then(|| Form {
            coeffs: self.coeffs[..self.degree()].to_vec(),
        })
    }

    /// `self * x^m.x * z^m.z`.
    pub fn mul_monomial(&self, m: Monomial) -> Form {
        let zero = self.field().zero();
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + m.degree());
        coeffs.extend(std::iter::repeat_n(zero.clone(), m.x));
        coeffs.extend(self.coeffs.iter().cloned());
        coeffs.extend(std::iter::repeat_n(zero, m.z));
        Form { coeffs }
    }

    pub fn scale(&self, c: &FieldElement) -> Option<Form> {
        Form::from_dense(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn make_monic(&self) -> Form {
        let inv = self.lc().inv().expect("leading coefficient is nonzero");
        self.scale(&inv).expect("unit multiple of a nonzero form")
    }

    pub fn neg(&self) -> Form {
        Form {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Product of forms: degrees add, coefficients convolve by x-degree.
    pub fn mul(&self, other: &Form) -> Form {
        let field = self.field();
        let mut coeffs = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        // a product of nonzero polynomials over a field is nonzero
        Form { coeffs }
    }

    /// Sum of two forms of equal degree.
    pub fn add(&self, other: &Form) -> Option<Form> {
        assert_eq!(
            self.degree(),
            other.degree(),
            "adding forms of different degree"
        );
        Form::from_dense(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Difference of two forms of equal degree.
    pub fn sub(&self, other: &Form) -> Option<Form> {
        assert_eq!(
            self.degree(),
            other.degree(),
            "subtracting forms of different degree"
        );
        Form::from_dense(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// `phi(x, 1)`.
    pub fn dehomogenize(&self) -> UnivariatePoly {
        // every x^j z^(d-j) collapses onto x^j, so positions carry over
        UnivariatePoly::new(self.field(), self.coeffs.clone())
    }

    /// Coefficient strings `c_0..c_d`.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Display with a nontrivial z-power pulled out when the cofactor has
    /// several terms, e.g. `(x^3+x^2*z+x*z^2+z^3)*z^2`.
    pub fn display_factored(&self) -> String {
        let (cofactor, p) = self.split_z();
        if p == 0 || cofactor.terms().count() < 2 {
            return self.to_string();
        }
        let mut s = format!("({cofactor})*");
        write_monomial(&mut s, 0, p);
        s
    }
}

/// `f1 ⊖ f2 = x^max(d,0) f1 - q x^(-min(d,0)) f2` with `d = |f2| - |f1|`.
///
/// `q = 0` stands for a vanishing discrepancy and returns `f1` unchanged.
pub fn ominus(f1: &Form, f2: &Form, q: &FieldElement) -> Result<Form> {
    if q.is_zero() {
        return Ok(f1.clone());
    }
    let d = f2.degree() as i64 - f1.degree() as i64;
    let up = d.max(0) as usize;
    let down = (-d.min(0)) as usize;
    let lhs = f1.mul_monomial(Monomial::new(up, 0));
    let rhs = f2.mul_monomial(Monomial::new(down, 0));
    let rhs = rhs
        .scale(q)
        .ok_or_else(|| Error::ZeroResult("q * f2 vanished".into()))?;
    lhs.sub(&rhs)
        .ok_or_else(|| Error::ZeroResult(format!("({f1}) ⊖ ({f2}) with q = {q}")))
}

/// Remainder of grlex division of `phi` by `divisors`.
///
/// Repeatedly picks the grlex-greatest monomial of the running polynomial
/// that some leading monomial divides, and cancels it with the first such
/// divisor in list order. Divisors must be monic.
pub fn rem(phi: &Form, divisors: &[Form]) -> Option<Form> {
    let d = phi.degree();
    let mut cur: Vec<FieldElement> = phi.coeffs.clone();
    let lms: Vec<Monomial> = divisors.iter().map(Form::lm).collect();
    debug_assert!(divisors.iter().all(Form::is_monic));
    // positions only ever decrease, so a single top-down sweep suffices:
    // cancelling at x^j touches only x-positions below j
    for j in (0..=d).rev() {
        if cur[j].is_zero() {
            continue;
        }
        let m = Monomial::new(j, d - j);
        let Some(k) = lms.iter().position(|lm| lm.divides(m)) else {
            continue;
        };
        let g = &divisors[k];
        let shift = m.checked_div(lms[k]).expect("divides");
        let c = cur[j].clone();
        // g * shift has its leading term at x^j; x-positions of g at or
        // below its own leading position land at or below j
        for (i, gc) in g.coeffs.iter().enumerate() {
            if gc.is_zero() {
                continue;
            }
            let pos = i + shift.x;
            cur[pos] = &cur[pos] - &(&c * gc);
        }
        debug_assert!(cur[j].is_zero());
    }
    Form::from_dense(cur)
}

/// S-polynomial `(L/LT(phi)) phi - (L/LT(psi)) psi`, `L = lcm(LM phi, LM psi)`.
pub fn s_poly(phi: &Form, psi: &Form) -> Option<Form> {
    let (a, ma) = phi.leading();
    let (b, mb) = psi.leading();
    let l = ma.lcm(mb);
    let left = phi
        .mul_monomial(l.checked_div(ma).expect("lcm"))
        .scale(&a.inv().expect("nonzero lc"))?;
    let right = psi
        .mul_monomial(l.checked_div(mb).expect("lcm"))
        .scale(&b.inv().expect("nonzero lc"))?;
    left.sub(&right)
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, m) in self.terms() {
            let mut s = c.to_string();
            if c.is_negative() {
                s.remove(0);
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if m.degree() == 0 {
                out.push_str(&s);
                continue;
            }
            if s != "1" {
                out.push_str(&s);
                out.push('*');
            }
            write_monomial(&mut out, m.x, m.z);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form({self} over {})", self.field())
    }
}

/// Parses forms written as sums of terms like `3*x^2*z`, `x^3z^2` or
/// `(x^3+x^2z+xz^2+z^3)z^2`. The result must be homogeneous and nonzero.
pub fn parse_form(field: FieldSpec, s: &str) -> Result<Form> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = FormParser {
        field,
        chars: &chars,
        pos: 0,
    };
    let terms = p.expr()?;
    if p.pos != chars.len() {
        return Err(p.error());
    }
    sum_terms(field, terms)?.ok_or(Error::ZeroForm)
}

type Terms = Vec<(FieldElement, Monomial)>;

fn sum_terms(field: FieldSpec, terms: Terms) -> Result<Option<Form>> {
    let Some(deg) = terms.first().map(|(_, m)| m.degree()) else {
        return Ok(None);
    };
    let mut coeffs = vec![field.zero(); deg + 1];
    for (c, m) in terms {
        if m.degree() != deg {
            return Err(Error::Malformed("form is not homogeneous".into()));
        }
        coeffs[m.x] = &coeffs[m.x] + &c;
    }
    Ok(Form::from_dense(coeffs))
}

struct FormParser<'a> {
    field: FieldSpec,
    chars: &'a [char],
    pos: usize,
}

impl FormParser<'_> {
    fn error(&self) -> Error {
        let s: String = self.chars.iter().collect();
        Error::Malformed(format!("cannot parse form {s:?} at offset {}", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn expr(&mut self) -> Result<Terms> {
        let mut out = Terms::new();
        let mut negate = self.eat('-');
        loop {
            for (c, m) in self.term()? {
                out.push((if negate { -&c } else { c }, m));
            }
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(out);
            }
        }
    }

    fn term(&mut self) -> Result<Terms> {
        let mut coeff = self.field.one();
        let mut any = false;
        if let Some(num) = self.number() {
            let text = if self.eat('/') {
                let den = self.number().ok_or_else(|| self.error())?;
                format!("{num}/{den}")
            } else {
                num
            };
            coeff = self.field.parse(&text)?;
            any = true;
            self.eat('*');
        }
        let mut terms = vec![(coeff, Monomial::ONE)];
        if self.eat('(') {
            let inner = self.expr()?;
            if !self.eat(')') {
                return Err(self.error());
            }
            let c = terms[0].0.clone();
            terms = inner.into_iter().map(|(a, m)| (&a * &c, m)).collect();
            any = true;
            self.eat('*');
        }
        let mut shift = Monomial::ONE;
        while let Some(v) = self.peek().filter(|c| *c == 'x' || *c == 'z') {
            self.pos += 1;
            let k = if self.eat('^') {
                self.number()
                    .ok_or_else(|| self.error())?
                    .parse::<usize>()
                    .map_err(|_| self.error())?
            } else {
                1
            };
            if v == 'x' {
                shift.x += k;
            } else {
                shift.z += k;
            }
            any = true;
            self.eat('*');
        }
        if !any {
            return Err(self.error());
        }
        Ok(terms
            .into_iter()
            .map(|(c, m)| (c, Monomial::new(m.x + shift.x, m.z + shift.z)))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::Prime(p)
    }

    fn f(field: FieldSpec, s: &str) -> Form {
        parse_form(field, s).unwrap()
    }

    #[test]
    fn grlex_examples() {
        assert_eq!(
            grlex_cmp(Monomial::new(2, 0), Monomial::new(0, 2)),
            Ordering::Greater
        );
        assert_eq!(
            grlex_cmp(Monomial::new(1, 1), Monomial::new(2, 0)),
            Ordering::Less
        );
        assert_eq!(
            grlex_cmp(Monomial::new(0, 3), Monomial::new(2, 0)),
            Ordering::Greater
        );
        assert_eq!(
            grlex_cmp(Monomial::new(1, 1), Monomial::new(1, 1)),
            Ordering::Equal
        );
    }

    #[test]
    fn parse_and_display() {
        let g = gf(2);
        assert_eq!(f(g, "x^4+xz^3+z^4").to_string(), "x^4+x*z^3+z^4");
        assert_eq!(
            f(g, "(x^3+x^2z+xz^2+z^3)z^2").to_string(),
            "x^3*z^2+x^2*z^3+x*z^4+z^5"
        );
        assert_eq!(
            f(g, "x^3*z^2+x^2*z^3+x*z^4+z^5").display_factored(),
            "(x^3+x^2*z+x*z^2+z^3)*z^2"
        );
        assert_eq!(f(g, "x*z^5").display_factored(), "x*z^5");
        assert_eq!(f(g, "z^8").display_factored(), "z^8");
        assert_eq!(f(g, "1").to_string(), "1");
        let q = FieldSpec::Rational;
        assert_eq!(f(q, "2/5x - 3z").to_string(), "2/5*x-3*z");
        assert_eq!(f(q, "-x^2+xz").to_string(), "-x^2+x*z");
        assert!(parse_form(g, "x+z^2").is_err());
        assert!(parse_form(g, "x+x").is_err());
        assert!(parse_form(g, "x+").is_err());
        assert!(parse_form(g, "").is_err());
    }

    #[test]
    fn leading_examples() {
        let cubic = f(gf(2), "x^3+z^3");
        let (c, m) = cubic.leading();
        assert!(c.is_one());
        assert_eq!(m, Monomial::new(3, 0));
        let phi = f(gf(2), "x^3z^2+x^2z^3+xz^4+z^5");
        assert_eq!(phi.lm(), Monomial::new(3, 2));
        assert!(phi.is_monic());
        let psi = f(gf(5), "3x^2z");
        assert_eq!(psi.leading().0, &gf(5).from_i64(3));
        assert_eq!(psi.lm(), Monomial::new(2, 1));
        assert_eq!(Form::new(vec![gf(3).zero(); 3]), Err(Error::ZeroForm));
    }

    #[test]
    fn mul_examples() {
        let g = gf(2);
        assert_eq!(f(g, "x+z").mul(&f(g, "x+z")), f(g, "x^2+z^2"));
        assert_eq!(
            f(g, "z").mul(&f(g, "x^3+x^2z+xz^2+z^3")),
            f(g, "x^3z+x^2z^2+xz^3+z^4")
        );
        let phi = f(gf(7), "3x^2+xz+5z^2");
        assert_eq!(f(gf(7), "1").mul(&phi), phi);
    }

    #[test]
    fn ominus_examples() {
        let g = gf(2);
        let one = g.one();
        assert_eq!(
            ominus(&f(g, "x"), &f(g, "z^3"), &one).unwrap(),
            f(g, "x^3+z^3")
        );
        assert_eq!(
            ominus(&f(g, "x^3+x^2z+xz^2+z^3"), &f(g, "xz^3"), &one).unwrap(),
            f(g, "x^4+x^3z+x^2z^2")
        );
        let f1 = f(g, "x^3+z^3");
        assert_eq!(ominus(&f1, &f(g, "z^7"), &g.zero()).unwrap(), f1);
        // d <= 0 branch: x^0 f1 - q x^{-d} f2
        assert_eq!(
            ominus(&f(g, "x^3+z^3"), &f(g, "xz"), &one).unwrap(),
            f(g, "x^3+x^2z+z^3")
        );
        assert!(matches!(
            ominus(&f(g, "x"), &f(g, "x"), &one),
            Err(Error::ZeroResult(_))
        ));
    }

    #[test]
    fn rem_examples() {
        let g = gf(2);
        let phi = f(g, "x^4+x^3z+x^2z^2");
        assert_eq!(rem(&phi, &[f(g, "xz^4")]), Some(phi));
        assert_eq!(rem(&f(g, "x^2z"), &[f(g, "xz")]), None);
        let psi = f(g, "x^3+x^2z+z^3");
        assert_eq!(rem(&psi, &[f(g, "xz^2")]), Some(psi));
        // first divisor in list order wins at the greatest reducible monomial
        let q = FieldSpec::Rational;
        let r = rem(&f(q, "x^2+xz+z^2"), &[f(q, "xz+z^2"), f(q, "z^2")]).unwrap();
        assert_eq!(r, f(q, "x^2"));
        let r = rem(&f(q, "x^2+xz+z^2"), &[f(q, "z^2"), f(q, "xz+z^2")]).unwrap();
        assert_eq!(r, f(q, "x^2"));
        let r = rem(&f(q, "x^2+2xz"), &[f(q, "xz-z^2")]).unwrap();
        assert_eq!(r, f(q, "x^2+2z^2"));
    }

    #[test]
    fn s_poly_examples() {
        let g = gf(2);
        assert_eq!(s_poly(&f(g, "x"), &f(g, "z")), None);
        assert_eq!(s_poly(&f(g, "x^3+z^3"), &f(g, "xz")), Some(f(g, "z^4")));
        let phi = f(gf(5), "2x^2+xz+z^2");
        assert_eq!(s_poly(&phi, &phi), None);
    }

    #[test]
    fn dehomogenize_examples() {
        let g = gf(2);
        assert_eq!(f(g, "x^4+xz^3+z^4").dehomogenize().to_string(), "x^4+x+1");
        assert_eq!(f(g, "z^5").dehomogenize().to_string(), "1");
        assert_eq!(f(g, "x^3+x^2z+z^3").dehomogenize().to_string(), "x^3+x^2+1");
    }

    #[test]
    fn z_valuation_examples() {
        let g = gf(2);
        let phi = f(g, "x^3z^2+x^2z^3+xz^4+z^5");
        assert_eq!(phi.z_valuation(), 2);
        let (cof, p) = phi.split_z();
        assert_eq!((cof, p), (f(g, "x^3+x^2z+xz^2+z^3"), 2));
        assert_eq!(f(g, "x^4+xz^3+z^4").z_valuation(), 0);
        assert_eq!(f(g, "z^8").z_valuation(), 8);
        assert_eq!(f(g, "z^8").div_z(), Some(f(g, "z^7")));
        assert_eq!(f(g, "x").div_z(), None);
    }

    fn field_strategy() -> impl Strategy<Value = FieldSpec> {
        prop_oneof![Just(gf(2)), Just(gf(3)), Just(gf(101))]
    }

    fn form_strategy(field: FieldSpec, max_deg: usize) -> impl Strategy<Value = Form> {
        let p = field.order().unwrap() as i64;
        (0..=max_deg)
            .prop_flat_map(move |d| proptest::collection::vec(0..p, d + 1))
            .prop_filter_map("nonzero", move |cs| {
                Form::from_dense(cs.into_iter().map(|c| field.from_i64(c)).collect())
            })
    }

    fn monic_z_free(field: FieldSpec) -> impl Strategy<Value = Form> {
        form_strategy(field, 6).prop_map(move |phi| {
            let mut cs = phi.coeffs().to_vec();
            cs.push(field.one());
            Form::new(cs).unwrap()
        })
    }

    fn monic_z_divisible(field: FieldSpec) -> impl Strategy<Value = Form> {
        form_strategy(field, 6).prop_map(|phi| phi.make_monic().mul_monomial(Monomial::new(0, 1)))
    }

    fn pair_in(field: FieldSpec) -> impl Strategy<Value = (Form, Form, Form, FieldSpec)> {
        (
            form_strategy(field, 5),
            form_strategy(field, 5),
            form_strategy(field, 5),
            Just(field),
        )
    }

    proptest! {
        #[test]
        fn ominus_leading_monomial(
            (f1, f2, q) in field_strategy().prop_flat_map(|k| (
                monic_z_free(k),
                monic_z_divisible(k),
                (1..k.order().unwrap() as i64).prop_map(move |c| k.from_i64(c)),
            ))
        ) {
            let g = ominus(&f1, &f2, &q).unwrap();
            let d = f2.degree() as i64 - f1.degree() as i64;
            prop_assert!(g.is_monic());
            prop_assert_eq!(g.degree(), f1.degree().max(f2.degree()));
            prop_assert_eq!(g.lm(), Monomial::new(f1.degree() + d.max(0) as usize, 0));
        }

        #[test]
        fn mul_ring_laws((a, b, c, _k) in field_strategy().prop_flat_map(pair_in)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b).degree(), a.degree() + b.degree());
            prop_assert_eq!(
                a.mul(&b).dehomogenize(),
                a.dehomogenize().mul(&b.dehomogenize())
            );
            for k in 0..3 {
                let shifted = a.mul_monomial(Monomial::new(0, k));
                prop_assert_eq!(shifted.z_valuation(), a.z_valuation() + k);
            }
        }

        #[test]
        fn rem_is_idempotent_and_irreducible(
            (phi, g1, g2, _k) in field_strategy().prop_flat_map(|k| (
                form_strategy(k, 8),
                form_strategy(k, 4).prop_map(|g| g.make_monic()),
                form_strategy(k, 4).prop_map(|g| g.make_monic()),
                Just(k),
            ))
        ) {
            let divisors = vec![g1, g2];
            let r = rem(&phi, &divisors);
            if let Some(r) = &r {
                for (_, m) in r.terms() {
                    prop_assert!(divisors.iter().all(|g| !g.lm().divides(m)));
                }
                let again = rem(r, &divisors);
                prop_assert_eq!(again.as_ref(), Some(r));
            }
        }
    }
}
