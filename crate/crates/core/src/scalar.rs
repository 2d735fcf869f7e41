//! Exact arithmetic in the rational function field `Q(q)`.
//!
//! Elements are stored as `num / den` with both parts Laurent polynomials in
//! `q` over `Q`. The canonical form moves every power of `q` into the
//! numerator, so the denominator is an ordinary polynomial with a nonzero
//! constant term; that constant term is normalized to `1` and the fraction is
//! reduced by a polynomial gcd. Two equal field elements therefore have equal
//! representations and `==` is structural.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("specialization point {0} is a pole")]
    Pole(Rational),
    #[error("cannot specialize at q = 0")]
    ZeroPoint,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Minimal field interface shared by `Rational` and `RatFunc`, so the sparse
/// matrix and elimination code can be written once.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + Zero + One + 'static {
    fn from_i64(n: i64) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn inv(&self) -> Option<Self>;
}

impl Field for Rational {
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer power of a rational; negative exponents invert.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    let mut acc = Rational::one();
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}

/// Laurent polynomial in `q` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !Zero::is_zero(&c) {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// `q^exp` with coefficient 1.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: Rational) {
        if Zero::is_zero(&c) {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if Zero::is_zero(slot) {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if Zero::is_zero(s) {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn eval(&self, point: &Rational) -> Result<Rational, ScalarError> {
        if self.min_exp().is_some_and(|e| e < 0) && Zero::is_zero(point) {
            return Err(ScalarError::ZeroPoint);
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.coeffs {
            acc += c * rat_pow(point, *e);
        }
        Ok(acc)
    }

    /// `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    fn add_poly(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }

    fn neg_poly(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    fn mul_poly(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Strip the lowest power of `q`, returning `(k, p)` with `self = q^k p`
    /// and `p(0) != 0`.
    fn split_q_power(&self) -> (i64, Self) {
        match self.min_exp() {
            Some(k) => (k, self.shift(-k)),
            None => (0, Self::zero()),
        }
    }

    /// Euclidean division of ordinary polynomials (all exponents >= 0).
    fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let dmax = divisor.max_exp().expect("nonzero divisor");
        let lead = divisor.coeff(dmax);
        let mut quot = Self::zero();
        let mut rem = self.clone();
        while let Some(rmax) = rem.max_exp() {
            if rmax < dmax {
                break;
            }
            let c = rem.coeff(rmax) / &lead;
            let t = Self::monomial(c, rmax - dmax);
            rem = rem.add_poly(&divisor.mul_poly(&t).neg_poly());
            quot = quot.add_poly(&t);
        }
        (quot, rem)
    }

    /// Monic gcd of ordinary polynomials.
    fn poly_gcd(a: &Self, b: &Self) -> Self {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = x.divrem(&y);
            x = y;
            y = r;
        }
        match x.max_exp() {
            Some(m) => {
                let lead = x.coeff(m);
                x.scale(&lead.recip())
            }
            None => x,
        }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let var = match *e {
                0 => String::new(),
                1 => "q".to_string(),
                k => format!("q^{k}"),
            };
            if var.is_empty() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{}*{var}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

/// Element of `Q(q)` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self { num, den };
        }
        let (dk, den0) = den.split_q_power();
        let num = num.shift(-dk);
        let (nk, num0) = num.split_q_power();
        let g = LaurentPoly::poly_gcd(&num0, &den0);
        let (num0, den0) = if g.max_exp() == Some(0) {
            (num0, den0)
        } else {
            (num0.divrem(&g).0, den0.divrem(&g).0)
        };
        let c0 = den0.coeff(0);
        let inv = c0.recip();
        Self {
            num: num0.shift(nk).scale(&inv),
            den: den0.scale(&inv),
        }
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(<Rational as Field>::from_i64(n))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(k: i64) -> Self {
        Self::from_poly(LaurentPoly::q_pow(k))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalized(
            self.num.mul_poly(&rhs.den),
            self.den.mul_poly(&rhs.num),
        ))
    }

    pub fn pow(&self, exp: i64) -> Result<Self, ScalarError> {
        let base = if exp < 0 {
            Self::one().checked_div(self)?
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact value at `q = point`.
    pub fn specialize(&self, point: &Rational) -> Result<Rational, ScalarError> {
        if Zero::is_zero(point) {
            return Err(ScalarError::ZeroPoint);
        }
        let d = self.den.eval(point)?;
        if Zero::is_zero(&d) {
            return Err(ScalarError::Pole(point.clone()));
        }
        Ok(self.num.eval(point)? / d)
    }

    /// `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        Self::normalized(self.num.bar(), self.den.bar())
    }
}

/// Quantum integer `[n]_q = (q^n - q^{-n}) / (q - q^{-1})`.
pub fn qint(n: i64) -> RatFunc {
    let sign = if n < 0 { -1 } else { 1 };
    let n = n.abs();
    let p = LaurentPoly::from_terms((0..n).map(|k| (n - 1 - 2 * k, <Rational as Field>::from_i64(sign))));
    RatFunc::from_poly(p)
}

/// `q - q^{-1}`.
pub fn q_minus_qinv() -> RatFunc {
    RatFunc::from_poly(LaurentPoly::from_terms([(1, Rational::one()), (-1, -Rational::one())]))
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(self.num.add_poly(&rhs.num));
        }
        if self.den == rhs.den {
            return RatFunc::normalized(self.num.add_poly(&rhs.num), self.den.clone());
        }
        RatFunc::normalized(
            self.num.mul_poly(&rhs.den).add_poly(&rhs.num.mul_poly(&self.den)),
            self.den.mul_poly(&rhs.den),
        )
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: self.num.neg_poly(),
            den: self.den.clone(),
        }
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(self.num.mul_poly(&rhs.num));
        }
        RatFunc::normalized(self.num.mul_poly(&rhs.num), self.den.mul_poly(&rhs.den))
    }
}

/// Panics on division by zero, like integer division; use
/// [`RatFunc::checked_div`] when the divisor may vanish.
impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl Field for RatFunc {
    fn from_i64(n: i64) -> Self {
        RatFunc::from_int(n)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        RatFunc::one().checked_div(self).ok()
    }
}

// ---------------------------------------------------------------------------
// Parsing. Accepts the rendered form plus ordinary infix arithmetic:
// integers, `q`, `+ - * /`, `^` with an integer exponent, parentheses.

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, ScalarError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => {}
            'q' => out.push(Tok::Q),
            '+' => out.push(Tok::Plus),
            '-' => out.push(Tok::Minus),
            '*' => out.push(Tok::Star),
            '/' => out.push(Tok::Slash),
            '^' => out.push(Tok::Caret),
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            d if d.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = chars[start..=i].iter().collect();
                out.push(Tok::Int(lit.parse().expect("digits")));
            }
            other => return Err(ScalarError::Parse(format!("unexpected character '{other}'"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<RatFunc, ScalarError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    acc = acc.checked_div(&self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, ScalarError> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc, ScalarError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let exp = match self.bump() {
            Some(Tok::Int(n)) => n
                .to_i64()
                .ok_or_else(|| ScalarError::Parse("exponent too large".into()))?,
            _ => return Err(ScalarError::Parse("expected integer exponent".into())),
        };
        base.pow(if neg { -exp } else { exp })
    }

    fn atom(&mut self) -> Result<RatFunc, ScalarError> {
        match self.bump() {
            Some(Tok::Int(n)) => Ok(RatFunc::from_rational(Rational::from_integer(n))),
            Some(Tok::Q) => Ok(RatFunc::q()),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(ScalarError::Parse("expected ')'".into())),
                }
            }
            other => Err(ScalarError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

impl FromStr for RatFunc {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            toks: tokenize(s)?,
            pos: 0,
        };
        if p.toks.is_empty() {
            return Err(ScalarError::Parse("empty expression".into()));
        }
        let v = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(ScalarError::Parse(format!("trailing input in '{s}'")));
        }
        Ok(v)
    }
}

/// Parse a rational such as `7/5`, `-3` or `2`.
pub fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n
        .parse()
        .map_err(|_| ScalarError::Parse(format!("bad rational '{s}'")))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| ScalarError::Parse(format!("bad rational '{s}'")))?;
    if d.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

pub fn format_rational(r: &Rational) -> String {
    fmt_rational(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn qint_small_values() {
        assert_eq!(qint(2), p("q + q^-1"));
        assert_eq!(qint(0), RatFunc::zero());
        assert_eq!(qint(1), RatFunc::one());
        assert_eq!(qint(3), p("q^2 + 1 + q^-2"));
    }

    #[test]
    fn qint_matches_quotient_definition() {
        for n in -6..=6 {
            let direct = p(&format!("(q^{n} - q^{})/(q - q^-1)", -n));
            assert_eq!(qint(n), direct, "n = {n}");
        }
    }

    #[test]
    fn arith_examples() {
        let d = q_minus_qinv();
        assert_eq!(&d / &d, RatFunc::one());
        assert_eq!(&qint(2) * &d, p("q^2 - q^-2"));
        assert_eq!(&RatFunc::q() + &(-RatFunc::q()), RatFunc::zero());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            RatFunc::one().checked_div(&RatFunc::zero()),
            Err(ScalarError::DivisionByZero)
        );
        assert!(RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn specialize_examples() {
        assert_eq!(qint(2).specialize(&rat(2, 1)).unwrap(), rat(5, 2));
        assert_eq!(q_minus_qinv().specialize(&rat(1, 1)).unwrap(), rat(0, 1));
        let f = p("1/(q - 1)");
        assert_eq!(f.specialize(&rat(1, 1)), Err(ScalarError::Pole(rat(1, 1))));
        assert_eq!(qint(2).specialize(&rat(0, 1)), Err(ScalarError::ZeroPoint));
    }

    #[test]
    fn canonical_form_moves_q_powers_to_numerator() {
        let f = p("1/(q^3 + q^2)");
        assert_eq!(f.denom(), &p("1 + q").numer().clone());
        assert_eq!(f.numer(), &LaurentPoly::q_pow(-2));
        // reduction by gcd
        let g = p("(q^2 - 1)/(q - 1)");
        assert_eq!(g, p("q + 1"));
        assert!(g.is_laurent());
        // denominators are normalized to constant term 1
        let h = p("2/(3 + 6*q)");
        assert_eq!(h.denom().coeff(0), rat(1, 1));
        assert_eq!(h, p("(2/3)/(1 + 2*q)"));
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "q^2 - q^-2",
            "(q^2 - q^-2)/(q - q^-1)",
            "-3/2*q^-1 + 7",
            "(q)/(q^2 + 1)",
            "0",
            "-q",
        ] {
            let v = p(s);
            let shown = v.to_string();
            assert_eq!(p(&shown), v, "{s} rendered as {shown}");
        }
        assert_eq!(qint(2).to_string(), "q + q^-1");
        assert_eq!(p("(q^2 - q^-2)/(q - q^-1)").to_string(), "q + q^-1");
    }

    #[test]
    fn parse_errors() {
        assert!("q +".parse::<RatFunc>().is_err());
        assert!("x".parse::<RatFunc>().is_err());
        assert!("".parse::<RatFunc>().is_err());
        assert!("(q".parse::<RatFunc>().is_err());
        assert!(matches!("1/0".parse::<RatFunc>(), Err(ScalarError::DivisionByZero)));
    }

    #[test]
    fn bar_involution() {
        let f = p("(q^3 + 2)/(q - 5)");
        assert_eq!(f.bar().bar(), f);
        assert_eq!(qint(4).bar(), qint(4));
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("7/5").unwrap(), rat(7, 5));
        assert_eq!(parse_rational(" -3 ").unwrap(), rat(-3, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a").is_err());
    }
}
