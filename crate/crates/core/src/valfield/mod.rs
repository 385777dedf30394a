//! Exact arithmetic over discretely valued fields.
//!
//! Two fields are supported: `Q` with a p-adic valuation, and `Q(t)` with the
//! t-adic valuation. Valuations live in [`ExtRat`], which is `Q ∪ {+∞}` plus a
//! flag value used when a linear form multiplies `+∞` by a negative number.

mod parse;
mod poly;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use parse::ParseError;
pub use poly::Poly;

/// An element of `Q ∪ {+∞}`, extended by a `NegInfFlag` value.
///
/// `NegInfFlag` only arises from [`ext_combine`] when a negative coefficient
/// meets `+∞`; every comparison predicate used by the classifier treats it as
/// "condition violated".
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtRat {
    Finite(BigRational),
    Infinity,
    NegInfFlag,
}

impl ExtRat {
    pub fn zero() -> Self {
        ExtRat::Finite(BigRational::zero())
    }

    pub fn int(n: i64) -> Self {
        ExtRat::Finite(BigRational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        ExtRat::Finite(BigRational::new(n.into(), d.into()))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRat::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            ExtRat::Finite(q) => Some(q),
            _ => None,
        }
    }

    /// `self >= 0`; false for the flag value.
    pub fn is_nonneg(&self) -> bool {
        match self {
            ExtRat::Finite(q) => !q.is_negative(),
            ExtRat::Infinity => true,
            ExtRat::NegInfFlag => false,
        }
    }

    /// `self > 0`; false for the flag value.
    pub fn is_pos(&self) -> bool {
        match self {
            ExtRat::Finite(q) => q.is_positive(),
            ExtRat::Infinity => true,
            ExtRat::NegInfFlag => false,
        }
    }

    /// `self == 0`.
    pub fn is_zero(&self) -> bool {
        matches!(self, ExtRat::Finite(q) if q.is_zero())
    }

    /// Multiplication by an exact rational, with `+∞` absorbing for `c > 0`.
    pub fn scale(&self, c: &BigRational) -> ExtRat {
        ext_combine(&[(c.clone(), self.clone())])
    }

    pub fn min(self, other: ExtRat) -> ExtRat {
        if self <= other {
            self
        } else {
            other
        }
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order `NegInfFlag < Finite < Infinity`.
impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtRat::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Infinity, Infinity) | (NegInfFlag, NegInfFlag) => Ordering::Equal,
            (Infinity, _) | (_, NegInfFlag) => Ordering::Greater,
            (NegInfFlag, _) | (_, Infinity) => Ordering::Less,
        }
    }
}

impl Add for ExtRat {
    type Output = ExtRat;
    fn add(self, rhs: ExtRat) -> ExtRat {
        let one = BigRational::one();
        ext_combine(&[(one.clone(), self), (one, rhs)])
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Finite(q) if q.is_integer() => write!(f, "{}", q.numer()),
            ExtRat::Finite(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            ExtRat::Infinity => write!(f, "+inf"),
            ExtRat::NegInfFlag => write!(f, "-inf"),
        }
    }
}

/// Evaluates the linear form `Σ cᵢ·vᵢ` over extended values.
///
/// A term `c·(+∞)` with `c < 0` (or any nonzero multiple of the flag) yields
/// `NegInfFlag`; otherwise a term `c·(+∞)` with `c > 0` yields `+∞`. Zero
/// coefficients contribute nothing.
pub fn ext_combine(terms: &[(BigRational, ExtRat)]) -> ExtRat {
    let mut sum = BigRational::zero();
    let mut infinite = false;
    for (c, v) in terms {
        if c.is_zero() {
            continue;
        }
        match v {
            ExtRat::Finite(q) => sum += c * q,
            ExtRat::Infinity if c.is_positive() => infinite = true,
            ExtRat::Infinity | ExtRat::NegInfFlag => return ExtRat::NegInfFlag,
        }
    }
    if infinite {
        ExtRat::Infinity
    } else {
        ExtRat::Finite(sum)
    }
}

/// Exponent of the prime `p` in a nonzero integer.
pub fn padic_valuation_int(n: &BigInt, p: &BigInt) -> BigInt {
    assert!(!n.is_zero(), "p-adic valuation of zero integer");
    let mut n = n.abs();
    let mut k = BigInt::zero();
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

/// Exponent of `p` in a nonzero reduced rational.
pub fn padic_valuation_rational(x: &BigRational, p: &BigInt) -> BigInt {
    padic_valuation_int(x.numer(), p) - padic_valuation_int(x.denom(), p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    /// `Q` with the valuation `v_p`.
    PAdic { p: u64 },
    /// `Q(t)` with `v(t) = 1`.
    TAdic,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
}

/// A discretely valued field in which every computation is exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValuedField {
    kind: FieldKind,
}

impl ValuedField {
    pub fn padic(p: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(ValuedField {
            kind: FieldKind::PAdic { p },
        })
    }

    pub fn tadic() -> Self {
        ValuedField {
            kind: FieldKind::TAdic,
        }
    }

    pub fn kind(&self) -> &FieldKind {
        &self.kind
    }

    /// Characteristic of the residue field: `p`, or 0 for `Q(t)`.
    pub fn residue_char(&self) -> u64 {
        match self.kind {
            FieldKind::PAdic { p } => p,
            FieldKind::TAdic => 0,
        }
    }

    /// The valuation of `x`.
    ///
    /// On `Q(t)` with a p-adic field the Gauss extension (minimum coefficient
    /// valuation) is used, so the map is total; on `Q` with the t-adic field
    /// every nonzero rational is a unit.
    pub fn val(&self, x: &ValuedScalar) -> ExtRat {
        if x.is_zero() {
            return ExtRat::Infinity;
        }
        let v: BigInt = match (&self.kind, x) {
            (FieldKind::PAdic { p }, ValuedScalar::Rational(q)) => {
                padic_valuation_rational(q, &BigInt::from(*p))
            }
            (FieldKind::PAdic { p }, ValuedScalar::Function(f)) => {
                let p = BigInt::from(*p);
                f.num.content_valuation(&p).unwrap() - f.den.content_valuation(&p).unwrap()
            }
            (FieldKind::TAdic, ValuedScalar::Rational(_)) => BigInt::zero(),
            (FieldKind::TAdic, ValuedScalar::Function(f)) => {
                BigInt::from(f.num.t_order().unwrap()) - BigInt::from(f.den.t_order().unwrap())
            }
        };
        ExtRat::Finite(BigRational::from_integer(v))
    }

    /// Parses a scalar literal: integers, fractions, and (t-adic only)
    /// polynomials or ratios of polynomials in `t`.
    pub fn parse(&self, s: &str) -> Result<ValuedScalar, ParseError> {
        let allow_t = matches!(self.kind, FieldKind::TAdic);
        parse::parse_scalar(s, allow_t)
    }
}

impl fmt::Display for ValuedField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::PAdic { p } => write!(f, "Q with v_{p}"),
            FieldKind::TAdic => write!(f, "Q(t) with v_t"),
        }
    }
}

/// A ratio of polynomials in `t`.
///
/// Reduction is lazy: common powers of `t` are always cancelled (they are all
/// the valuation sees), a constant denominator is folded into the numerator,
/// and an exactly dividing denominator is removed. Full gcd reduction happens
/// only in [`RatFunc::reduced`].
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        RatFunc { num, den }.tidy()
    }

    pub fn poly(num: Poly) -> Self {
        RatFunc {
            num,
            den: Poly::one(),
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn tidy(mut self) -> Self {
        if self.num.is_zero() {
            self.den = Poly::one();
            return self;
        }
        let k = self.num.t_order().unwrap().min(self.den.t_order().unwrap());
        if k > 0 {
            self.num = self.num.shift_down(k);
            self.den = self.den.shift_down(k);
        }
        if self.den.is_constant() {
            let c = self.den.constant_term().recip();
            self.num = self.num.scale(&c);
            self.den = Poly::one();
        } else if self.den.degree() <= self.num.degree() {
            let (q, r) = self.num.div_rem(&self.den);
            if r.is_zero() {
                self.num = q;
                self.den = Poly::one();
            }
        }
        self
    }

    /// Fully reduced form with a monic denominator.
    pub fn reduced(&self) -> RatFunc {
        let g = self.num.gcd(&self.den);
        let num = self.num.div_rem(&g).0;
        let den = self.den.div_rem(&g).0;
        let lead = den.leading().unwrap().recip();
        RatFunc {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.constant_term() / self.den.constant_term())
        } else {
            None
        }
    }

    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    fn add(&self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    fn mul(&self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    fn recip(&self) -> RatFunc {
        assert!(!self.num.is_zero(), "division by zero");
        RatFunc::new(self.den.clone(), self.num.clone())
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        if r.den == Poly::one() {
            write!(f, "{}", r.num)
        } else {
            write!(f, "({})/({})", r.num, r.den)
        }
    }
}

/// An exact element of `Q` or `Q(t)`.
///
/// Arithmetic between a rational and a function promotes the rational to a
/// constant function. Equality is mathematical equality, independent of
/// representation.
#[derive(Clone, Debug)]
pub enum ValuedScalar {
    Rational(BigRational),
    Function(RatFunc),
}

impl ValuedScalar {
    pub fn zero() -> Self {
        ValuedScalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        ValuedScalar::Rational(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        ValuedScalar::Rational(BigRational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        ValuedScalar::Rational(BigRational::new(n.into(), d.into()))
    }

    pub fn rational(q: BigRational) -> Self {
        ValuedScalar::Rational(q)
    }

    pub fn t() -> Self {
        ValuedScalar::Function(RatFunc::poly(Poly::t()))
    }

    pub fn poly(p: Poly) -> Self {
        ValuedScalar::Function(RatFunc::poly(p))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ValuedScalar::Rational(q) => q.is_zero(),
            ValuedScalar::Function(f) => f.is_zero(),
        }
    }

    pub fn pow(&self, k: u32) -> ValuedScalar {
        (0..k).fold(ValuedScalar::one(), |acc, _| &acc * self)
    }

    pub fn checked_div(&self, rhs: &ValuedScalar) -> Option<ValuedScalar> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    /// Collapses constant functions to rationals.
    pub fn simplify(self) -> ValuedScalar {
        match &self {
            ValuedScalar::Function(f) => match f.as_constant() {
                Some(c) => ValuedScalar::Rational(c),
                None => self,
            },
            _ => self,
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            ValuedScalar::Rational(q) => Some(q.clone()),
            ValuedScalar::Function(f) => f.as_constant(),
        }
    }

    fn as_function(&self) -> RatFunc {
        match self {
            ValuedScalar::Rational(q) => RatFunc::poly(Poly::constant(q.clone())),
            ValuedScalar::Function(f) => f.clone(),
        }
    }
}

impl PartialEq for ValuedScalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ValuedScalar::Rational(a), ValuedScalar::Rational(b)) => a == b,
            _ => self.as_function() == other.as_function(),
        }
    }
}

impl Eq for ValuedScalar {}

impl From<i64> for ValuedScalar {
    fn from(n: i64) -> Self {
        ValuedScalar::int(n)
    }
}

impl From<BigRational> for ValuedScalar {
    fn from(q: BigRational) -> Self {
        ValuedScalar::Rational(q)
    }
}

impl fmt::Display for ValuedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValuedScalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            ValuedScalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            ValuedScalar::Function(r) => write!(f, "{r}"),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $rat:expr, $func:expr) => {
        impl $trait for &ValuedScalar {
            type Output = ValuedScalar;
            fn $method(self, rhs: &ValuedScalar) -> ValuedScalar {
                match (self, rhs) {
                    (ValuedScalar::Rational(a), ValuedScalar::Rational(b)) => {
                        ValuedScalar::Rational($rat(a, b))
                    }
                    _ => ValuedScalar::Function($func(&self.as_function(), &rhs.as_function())),
                }
            }
        }

        impl $trait for ValuedScalar {
            type Output = ValuedScalar;
            fn $method(self, rhs: ValuedScalar) -> ValuedScalar {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&ValuedScalar> for ValuedScalar {
            type Output = ValuedScalar;
            fn $method(self, rhs: &ValuedScalar) -> ValuedScalar {
                (&self).$method(rhs)
            }
        }
    };
}

scalar_binop!(
    Add,
    add,
    |a: &BigRational, b: &BigRational| a + b,
    |a: &RatFunc, b: &RatFunc| a.add(b)
);
scalar_binop!(
    Sub,
    sub,
    |a: &BigRational, b: &BigRational| a - b,
    |a: &RatFunc, b: &RatFunc| a.add(&b.neg())
);
scalar_binop!(
    Mul,
    mul,
    |a: &BigRational, b: &BigRational| a * b,
    |a: &RatFunc, b: &RatFunc| a.mul(b)
);
scalar_binop!(
    Div,
    div,
    |a: &BigRational, b: &BigRational| {
        assert!(!b.is_zero(), "division by zero");
        a / b
    },
    |a: &RatFunc, b: &RatFunc| a.mul(&b.recip())
);

impl Neg for &ValuedScalar {
    type Output = ValuedScalar;
    fn neg(self) -> ValuedScalar {
        match self {
            ValuedScalar::Rational(q) => ValuedScalar::Rational(-q),
            ValuedScalar::Function(f) => ValuedScalar::Function(f.neg()),
        }
    }
}

impl Neg for ValuedScalar {
    type Output = ValuedScalar;
    fn neg(self) -> ValuedScalar {
        -&self
    }
}
