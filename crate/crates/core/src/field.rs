//! Exact coefficient fields: prime fields GF(p) with `p < 2^31` and the
//! rationals, behind one element type.
//!
//! Binary operations on elements of different fields are a caller bug and
//! panic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

const MAX_MODULUS: u64 = 1 << 31;

/// Which field the coefficients live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u32),
    Rational,
}

impl FieldSpec {
    /// GF(p); fails unless `p` is prime and below 2^31.
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn rational() -> Self {
        FieldSpec::Rational
    }

    pub fn gf2() -> Self {
        FieldSpec::Prime(2)
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(self) -> Option<u64> {
        match self {
            FieldSpec::Prime(p) => Some(p as u64),
            FieldSpec::Rational => None,
        }
    }

    pub fn is_gf2(self) -> bool {
        self == FieldSpec::Prime(2)
    }

    pub fn zero(self) -> FieldElement {
        match self {
            FieldSpec::Prime(p) => FieldElement::modular(0, p),
            FieldSpec::Rational => FieldElement::rat(BigRational::zero()),
        }
    }

    pub fn one(self) -> FieldElement {
        match self {
            FieldSpec::Prime(p) => FieldElement::modular(1, p),
            FieldSpec::Rational => FieldElement::rat(BigRational::one()),
        }
    }

    pub fn from_i64(self, n: i64) -> FieldElement {
        match self {
            FieldSpec::Prime(p) => FieldElement::modular(n.rem_euclid(p as i64) as u32, p),
            FieldSpec::Rational => FieldElement::rat(BigRational::from_integer(n.into())),
        }
    }

    /// The `k`-th element in a fixed enumeration of a finite field
    /// (`0, 1, ..., p-1`). Used by exhaustive searches.
    pub fn nth(self, k: u64) -> Option<FieldElement> {
        match self {
            FieldSpec::Prime(p) if k < p as u64 => Some(FieldElement::modular(k as u32, p)),
            _ => None,
        }
    }

    /// Parses a canonical element string: an integer for GF(p) (reduced mod
    /// p), or `a` / `a/b` for the rationals.
    pub fn parse(self, s: &str) -> Result<FieldElement> {
        let t = s.trim();
        let bad = || Error::ParseElement {
            input: s.to_string(),
            field: self.to_string(),
        };
        match self {
            FieldSpec::Prime(p) => {
                let n: BigInt = t.parse().map_err(|_| bad())?;
                let r = ((n % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                let v: u32 = r.try_into().map_err(|_| bad())?;
                Ok(FieldElement::modular(v, p))
            }
            FieldSpec::Rational => {
                let value = match t.split_once('/') {
                    Some((num, den)) => {
                        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
                        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
                        if den.is_zero() {
                            return Err(Error::DivisionByZero);
                        }
                        BigRational::new(num, den)
                    }
                    None => BigRational::from_integer(t.parse().map_err(|_| bad())?),
                };
                Ok(FieldElement::rat(value))
            }
        }
    }
}

/// `make_field`: build a field from its kind.
pub fn make_field(prime: Option<u64>) -> Result<FieldSpec> {
    match prime {
        Some(p) => FieldSpec::prime(p),
        None => Ok(FieldSpec::Rational),
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "gf{p}"),
            FieldSpec::Rational => write!(f, "q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// `gf<p>` or `q`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" {
            return Ok(FieldSpec::Rational);
        }
        let digits = t
            .strip_prefix("gf")
            .ok_or_else(|| Error::ParseField(s.to_string()))?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::ParseField(s.to_string()));
        }
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::NonPrimeModulus(u64::MAX))?;
        FieldSpec::prime(p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Mod { value: u32, p: u32 },
    Rat(BigRational),
}

/// An element of a [`FieldSpec`], always held in canonical form: a residue
/// in `0..p`, or a fraction in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    repr: Repr,
}

impl FieldElement {
    fn modular(value: u32, p: u32) -> Self {
        debug_assert!(value < p);
        FieldElement {
            repr: Repr::Mod { value, p },
        }
    }

    fn rat(value: BigRational) -> Self {
        // BigRational::new reduces and fixes the sign of the denominator
        FieldElement {
            repr: Repr::Rat(value),
        }
    }

    pub fn field(&self) -> FieldSpec {
        match &self.repr {
            Repr::Mod { p, .. } => FieldSpec::Prime(*p),
            Repr::Rat(_) => FieldSpec::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Mod { value, .. } => *value == 0,
            Repr::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Mod { value, .. } => *value == 1,
            Repr::Rat(r) => r.is_one(),
        }
    }

    /// Residue for GF(p) elements.
    pub fn residue(&self) -> Option<u32> {
        match &self.repr {
            Repr::Mod { value, .. } => Some(*value),
            Repr::Rat(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rat(r) => Some(r),
            Repr::Mod { .. } => None,
        }
    }

    /// True when the canonical string starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        matches!(&self.repr, Repr::Rat(r) if r.is_negative())
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.repr {
            Repr::Mod { value, p } => FieldElement::modular(inv_mod(*value, *p), *p),
            Repr::Rat(r) => FieldElement::rat(r.recip()),
        })
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        Ok(self * &rhs.inv()?)
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // extended Euclid on (a, p)
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i64) as u32
}

fn mismatch(a: &FieldElement, b: &FieldElement) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: &FieldElement) -> FieldElement {
        match (&self.repr, &rhs.repr) {
            (Repr::Mod { value: a, p }, Repr::Mod { value: b, p: q }) if p == q => {
                FieldElement::modular(((*a as u64 + *b as u64) % *p as u64) as u32, *p)
            }
            (Repr::Rat(a), Repr::Rat(b)) => FieldElement::rat(a + b),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: &FieldElement) -> FieldElement {
        match (&self.repr, &rhs.repr) {
            (Repr::Mod { value: a, p }, Repr::Mod { value: b, p: q }) if p == q => {
                FieldElement::modular(((*a as u64 + (*p - *b) as u64) % *p as u64) as u32, *p)
            }
            (Repr::Rat(a), Repr::Rat(b)) => FieldElement::rat(a - b),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: &FieldElement) -> FieldElement {
        match (&self.repr, &rhs.repr) {
            (Repr::Mod { value: a, p }, Repr::Mod { value: b, p: q }) if p == q => {
                FieldElement::modular(((*a as u64 * *b as u64) % *p as u64) as u32, *p)
            }
            (Repr::Rat(a), Repr::Rat(b)) => FieldElement::rat(a * b),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        match &self.repr {
            Repr::Mod { value, p } => FieldElement::modular((*p - *value) % *p, *p),
            Repr::Rat(r) => FieldElement::rat(-r),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Mod { value, .. } => write!(f, "{value}"),
            Repr::Rat(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self, self.field())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn make_field_examples() {
        assert_eq!(make_field(Some(2)).unwrap(), FieldSpec::Prime(2));
        assert_eq!(make_field(Some(4)), Err(Error::NonPrimeModulus(4)));
        assert_eq!(make_field(None).unwrap(), FieldSpec::Rational);
        assert_eq!(make_field(Some(2)), make_field(Some(2)));
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(0).is_err());
        assert!(FieldSpec::prime(2_147_483_647).is_ok());
        assert!(FieldSpec::prime(1 << 31).is_err());
        assert!(FieldSpec::prime(65_537).is_ok());
        assert!(FieldSpec::prime(65_535).is_err());
    }

    #[test]
    fn parse_field_strings() {
        assert_eq!("gf2".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        assert_eq!("gf101".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(101));
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert!(matches!(
            "gf4".parse::<FieldSpec>(),
            Err(Error::NonPrimeModulus(4))
        ));
        assert!("gf".parse::<FieldSpec>().is_err());
        assert!("z5".parse::<FieldSpec>().is_err());
        assert!("gf-3".parse::<FieldSpec>().is_err());
        for f in [FieldSpec::Prime(7), FieldSpec::Rational] {
            assert_eq!(f.to_string().parse::<FieldSpec>().unwrap(), f);
        }
    }

    #[test]
    fn inverse_examples() {
        let gf5 = FieldSpec::Prime(5);
        assert_eq!(gf5.from_i64(2).inv().unwrap(), gf5.from_i64(3));
        let gf2 = FieldSpec::gf2();
        assert_eq!(gf2.one().inv().unwrap(), gf2.one());
        let q = FieldSpec::Rational;
        assert_eq!(
            q.parse("3/4").unwrap().inv().unwrap(),
            q.parse("4/3").unwrap()
        );
        assert_eq!(gf5.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(q.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn exhaustive_inverse_gf_small() {
        for p in [2u32, 3, 5, 7, 101] {
            let f = FieldSpec::Prime(p);
            for a in 1..p {
                let x = f.from_i64(a as i64);
                assert!((&x * &x.inv().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn canonical_strings() {
        let q = FieldSpec::Rational;
        assert_eq!(q.parse("4/-6").unwrap().to_string(), "-2/3");
        assert_eq!(q.parse("10/5").unwrap().to_string(), "2");
        assert_eq!(q.parse(" 0/7 ").unwrap().to_string(), "0");
        assert_eq!(q.parse("1/0"), Err(Error::DivisionByZero));
        let gf7 = FieldSpec::Prime(7);
        assert_eq!(gf7.parse("-1").unwrap().to_string(), "6");
        assert_eq!(
            gf7.parse("100000000000000000000").unwrap(),
            gf7.from_i64(100_000_000_000_000_000_000i128.rem_euclid(7) as i64)
        );
        assert!(gf7.parse("1/2").is_err());
        assert!(gf7.parse("x").is_err());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics() {
        let _ = FieldSpec::Prime(3).one() + FieldSpec::Prime(5).one();
    }

    fn elem(field: FieldSpec) -> BoxedStrategy<FieldElement> {
        match field {
            FieldSpec::Prime(p) => (0..p as i64).prop_map(move |v| field.from_i64(v)).boxed(),
            FieldSpec::Rational => (-50i64..50, 1i64..20)
                .prop_map(|(n, d)| FieldSpec::Rational.parse(&format!("{n}/{d}")).unwrap())
                .boxed(),
        }
    }

    fn check_axioms(a: &FieldElement, b: &FieldElement, c: &FieldElement) {
        assert_eq!(&(a + b) + c, a + &(b + c));
        assert_eq!(&(a * b) * c, a * &(b * c));
        assert_eq!(a + b, b + a);
        assert_eq!(a * b, b * a);
        assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        assert!((a + &(-a)).is_zero());
        assert_eq!(a - b, a + &(-b));
        if !a.is_zero() {
            assert!((a * &a.inv().unwrap()).is_one());
        }
        // canonical form survives a print/parse round trip
        let f = a.field();
        let once = f.parse(&a.to_string()).unwrap();
        assert_eq!(&once, a);
        assert_eq!(f.parse(&once.to_string()).unwrap(), once);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn axioms_gf2(a in elem(FieldSpec::Prime(2)), b in elem(FieldSpec::Prime(2)), c in elem(FieldSpec::Prime(2))) {
            check_axioms(&a, &b, &c);
        }

        #[test]
        fn axioms_gf3(a in elem(FieldSpec::Prime(3)), b in elem(FieldSpec::Prime(3)), c in elem(FieldSpec::Prime(3))) {
            check_axioms(&a, &b, &c);
        }

        #[test]
        fn axioms_gf101(a in elem(FieldSpec::Prime(101)), b in elem(FieldSpec::Prime(101)), c in elem(FieldSpec::Prime(101))) {
            check_axioms(&a, &b, &c);
        }

        #[test]
        fn axioms_rational(a in elem(FieldSpec::Rational), b in elem(FieldSpec::Rational), c in elem(FieldSpec::Rational)) {
            check_axioms(&a, &b, &c);
        }
    }
}
