//! Canonical sparse polynomials in the two indeterminates `e` and `a`,
//! with arbitrary-precision integer coefficients.
//!
//! Invariant: the term map never stores a zero coefficient, so structural
//! equality is polynomial equality, `is_zero` is emptiness, and a constant
//! is a map with at most the unit monomial. Monomials are ordered
//! lexicographically with the degree in `a` dominating; rendering walks that
//! order descending, so `8*a - 4*e - 6` is the canonical form of that
//! polynomial and re-parsing a rendering is the identity.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exponents of one monomial `a^a_exp * e^e_exp`.
///
/// Field order matters: the derived `Ord` compares `a_exp` first, which is
/// exactly the canonical term order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Monomial {
    a_exp: u32,
    e_exp: u32,
}

impl Monomial {
    const UNIT: Monomial = Monomial { a_exp: 0, e_exp: 0 };
}

/// An exact coefficient: an integer, or a polynomial in `e` and `a`.
///
/// Constants are the special case of a polynomial supported on the unit
/// monomial, so symbolic and concrete computations share one code path.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Coefficient {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Coefficient {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Coefficient::default()
    }

    /// The constant 1.
    pub fn one() -> Self {
        Coefficient::constant(1)
    }

    /// A constant polynomial.
    pub fn constant(n: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        let n = n.into();
        if !n.is_zero() {
            terms.insert(Monomial::UNIT, n);
        }
        Coefficient { terms }
    }

    /// The indeterminate `e`.
    pub fn var_e() -> Self {
        Coefficient::monomial(1, 1, 0)
    }

    /// The indeterminate `a`.
    pub fn var_a() -> Self {
        Coefficient::monomial(1, 0, 1)
    }

    /// `coeff * e^e_exp * a^a_exp`.
    pub fn monomial(coeff: impl Into<BigInt>, e_exp: u32, a_exp: u32) -> Self {
        let mut terms = BTreeMap::new();
        let coeff = coeff.into();
        if !coeff.is_zero() {
            terms.insert(Monomial { a_exp, e_exp }, coeff);
        }
        Coefficient { terms }
    }

    /// True exactly when this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no indeterminate occurs (including the zero polynomial).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::UNIT)
    }

    /// The value of a constant polynomial, `None` if symbolic.
    pub fn as_integer(&self) -> Option<BigInt> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.terms
                .get(&Monomial::UNIT)
                .cloned()
                .unwrap_or_else(BigInt::zero),
        )
    }

    /// The value of a constant polynomial as `i64`, `None` if symbolic or
    /// out of range.
    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|n| i64::try_from(n).ok())
    }

    /// True when at most one monomial is present.
    pub fn is_single_term(&self) -> bool {
        self.terms.len() <= 1
    }

    /// Sign of the leading (largest) monomial; false for the zero polynomial.
    pub fn is_leading_negative(&self) -> bool {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
    }

    /// Largest exponent of `e` (0 for constants and the zero polynomial).
    pub fn degree_e(&self) -> u32 {
        self.terms.keys().map(|m| m.e_exp).max().unwrap_or(0)
    }

    /// Largest exponent of `a` (0 for constants and the zero polynomial).
    pub fn degree_a(&self) -> u32 {
        self.terms.keys().map(|m| m.a_exp).max().unwrap_or(0)
    }

    /// Substitute integers for the indeterminates.
    ///
    /// Substitution is a ring homomorphism: it commutes with `+` and `*`.
    pub fn evaluate(&self, e_val: i64, a_val: i64) -> BigInt {
        let e_val = BigInt::from(e_val);
        let a_val = BigInt::from(a_val);
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            acc += c * e_val.pow(m.e_exp) * a_val.pow(m.a_exp);
        }
        acc
    }

    /// Exact division by a nonzero integer; `None` when any coefficient is
    /// not divisible.
    pub fn div_exact(&self, n: i64) -> Option<Coefficient> {
        assert!(n != 0, "division by zero");
        let n = BigInt::from(n);
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if (c % &n).is_zero() {
                terms.insert(*m, c / &n);
            } else {
                return None;
            }
        }
        Some(Coefficient { terms })
    }

    fn insert_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::constant(n)
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        for (m, c) in &rhs.terms {
            self.insert_term(*m, c.clone());
        }
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(mut self, rhs: Coefficient) -> Coefficient {
        self += &rhs;
        self
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        Coefficient { terms }
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self + &(-rhs)
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: Coefficient) -> Coefficient {
        &self - &rhs
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        let mut out = Coefficient::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m = Monomial {
                    a_exp: m1.a_exp + m2.a_exp,
                    e_exp: m1.e_exp + m2.e_exp,
                };
                out.insert_term(m, c1 * c2);
            }
        }
        out
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        &self * &rhs
    }
}

impl Mul<i64> for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: i64) -> Coefficient {
        self * &Coefficient::constant(rhs)
    }
}

// ---- Rendering ----

fn push_monomial(out: &mut String, magnitude: &BigInt, m: Monomial) {
    let mut parts: Vec<String> = Vec::new();
    if !magnitude.is_one() || m == Monomial::UNIT {
        parts.push(magnitude.to_string());
    }
    for (var, exp) in [("a", m.a_exp), ("e", m.e_exp)] {
        match exp {
            0 => {}
            1 => parts.push(var.to_string()),
            k => parts.push(format!("{var}^{k}")),
        }
    }
    out.push_str(&parts.join("*"));
}

impl fmt::Display for Coefficient {
    /// Canonical text form, e.g. `8*a - 4*e - 6`; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            push_monomial(&mut out, &c.abs(), *m);
        }
        f.write_str(&out)
    }
}

// ---- Parsing ----

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    Int(BigInt),
    Var(char),
    Star,
    Caret,
    Plus,
    Minus,
}

fn tokenize(input: &str) -> Result<Vec<Token>, Error> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(c) = chars.peek().filter(|c| c.is_ascii_digit()) {
                    digits.push(*c);
                    chars.next();
                }
                let n = digits
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad integer literal `{digits}`")))?;
                tokens.push(Token::Int(n));
            }
            'e' | 'a' => {
                tokens.push(Token::Var(ch));
                chars.next();
            }
            '*' => {
                tokens.push(Token::Star);
                chars.next();
            }
            '^' => {
                tokens.push(Token::Caret);
                chars.next();
            }
            '+' => {
                tokens.push(Token::Plus);
                chars.next();
            }
            '-' => {
                tokens.push(Token::Minus);
                chars.next();
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character `{other}` in polynomial"
                )))
            }
        }
    }
    Ok(tokens)
}

/// Parser over the grammar
/// `poly := [sign] term ((`+`|`-`) term)*`,
/// `term := factor (`*` factor)*`,
/// `factor := integer | var (`^` integer)?`, `var := e | a`.
struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_exponent(&mut self) -> Result<u32, Error> {
        match self.next() {
            Some(Token::Int(n)) => {
                u32::try_from(n).map_err(|_| Error::Parse("exponent out of range".to_string()))
            }
            _ => Err(Error::Parse(
                "expected integer exponent after `^`".to_string(),
            )),
        }
    }

    fn parse_factor(&mut self) -> Result<Coefficient, Error> {
        match self.next() {
            Some(Token::Int(n)) => Ok(Coefficient::constant(n)),
            Some(Token::Var(v)) => {
                let exp = if self.peek() == Some(&Token::Caret) {
                    self.next();
                    self.parse_exponent()?
                } else {
                    1
                };
                Ok(match v {
                    'e' => Coefficient::monomial(1, exp, 0),
                    _ => Coefficient::monomial(1, 0, exp),
                })
            }
            other => Err(Error::Parse(format!(
                "expected integer or indeterminate, found {other:?}"
            ))),
        }
    }

    fn parse_term(&mut self) -> Result<Coefficient, Error> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(&Token::Star) {
            self.next();
            acc = &acc * &self.parse_factor()?;
        }
        Ok(acc)
    }

    fn parse_poly(&mut self) -> Result<Coefficient, Error> {
        let mut acc = Coefficient::zero();
        let mut sign = match self.peek() {
            Some(Token::Minus) => {
                self.next();
                -1
            }
            Some(Token::Plus) => {
                self.next();
                1
            }
            _ => 1,
        };
        loop {
            let term = self.parse_term()?;
            acc += &(&term * sign);
            match self.next() {
                None => return Ok(acc),
                Some(Token::Plus) => sign = 1,
                Some(Token::Minus) => sign = -1,
                Some(other) => {
                    return Err(Error::Parse(format!(
                        "expected `+` or `-` between terms, found {other:?}"
                    )))
                }
            }
        }
    }
}

impl FromStr for Coefficient {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let tokens = tokenize(s)?;
        if tokens.is_empty() {
            return Err(Error::Parse("empty polynomial".to_string()));
        }
        Parser { tokens, pos: 0 }.parse_poly()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Coefficient {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_rendering_orders_a_before_e() {
        let poly =
            &(&Coefficient::var_a() * 8) - &(&Coefficient::var_e() * 4) - Coefficient::constant(6);
        assert_eq!(poly.to_string(), "8*a - 4*e - 6");
    }

    #[test]
    fn rendering_handles_units_powers_and_zero() {
        assert_eq!(Coefficient::zero().to_string(), "0");
        assert_eq!(Coefficient::constant(-7).to_string(), "-7");
        assert_eq!(p("a - e").to_string(), "a - e");
        assert_eq!(p("-a").to_string(), "-a");
        assert_eq!(p("2*a*e + a^2 - e^2").to_string(), "a^2 + 2*a*e - e^2");
        assert_eq!(p("3*a - e - 2").to_string(), "3*a - e - 2");
    }

    #[test]
    fn addition_cancels_exactly() {
        let sum = &p("3*a - 2*e - 2") + &p("2*e + 2");
        assert_eq!(sum.to_string(), "3*a");
        let diff = &p("8*a - 4*e - 6") - &p("8*a - 4*e - 6");
        assert!(diff.is_zero());
    }

    #[test]
    fn noether_line_combination_vanishes() {
        // 3*K^3 - 4*p_g + 10 with K^3 = 8a - 4e - 6 and p_g = 6a - 3e - 2.
        let combo =
            &(&p("8*a - 4*e - 6") * 3) - &(&p("6*a - 3*e - 2") * 4) + Coefficient::constant(10);
        assert!(combo.is_zero());
    }

    #[test]
    fn evaluate_matches_known_members() {
        assert_eq!(p("8*a - 4*e - 6").evaluate(3, 3), BigInt::from(6));
        assert_eq!(p("6*a - 3*e - 2").evaluate(0, 2), BigInt::from(10));
        assert_eq!(p("2*a - e").evaluate(3, 3), BigInt::from(3));
        assert_eq!(p("a^2*e").evaluate(2, 5), BigInt::from(50));
    }

    #[test]
    fn constants_expose_integer_views() {
        assert_eq!(Coefficient::constant(9).as_i64(), Some(9));
        assert_eq!(Coefficient::zero().as_i64(), Some(0));
        assert_eq!(p("a").as_i64(), None);
        assert!(!p("a").is_constant());
        assert!(p("-6").is_constant());
    }

    #[test]
    fn div_exact_requires_divisibility() {
        assert_eq!(
            p("8*a - 4*e - 6").div_exact(2).unwrap().to_string(),
            "4*a - 2*e - 3"
        );
        assert_eq!(p("8*a - 4*e - 6").div_exact(4), None);
        assert!(Coefficient::zero().div_exact(5).unwrap().is_zero());
    }

    #[test]
    fn parser_round_trips_canonical_forms() {
        for text in [
            "8*a - 4*e - 6",
            "0",
            "-a",
            "a^2 + 2*a*e - e^2",
            "5",
            "-2*a*e",
        ] {
            assert_eq!(p(text).to_string(), text);
        }
    }

    #[test]
    fn parser_accepts_loose_spacing_and_repeated_factors() {
        assert_eq!(p("  8*a-4*e-6 "), p("8*a - 4*e - 6"));
        assert_eq!(p("2*3*a"), p("6*a"));
        assert_eq!(p("a*a*e"), p("a^2*e"));
        assert_eq!(p("+4"), Coefficient::constant(4));
    }

    #[test]
    fn parser_rejects_malformed_input() {
        assert!("".parse::<Coefficient>().is_err());
        assert!("b + 1".parse::<Coefficient>().is_err());
        assert!("2a".parse::<Coefficient>().is_err());
        assert!("a ^".parse::<Coefficient>().is_err());
        assert!("3 * ".parse::<Coefficient>().is_err());
        assert!("1 + + 2".parse::<Coefficient>().is_err());
    }

    #[test]
    fn degrees_track_largest_exponents() {
        assert_eq!(p("a^3*e - e^2").degree_a(), 3);
        assert_eq!(p("a^3*e - e^2").degree_e(), 2);
        assert_eq!(Coefficient::zero().degree_a(), 0);
    }
}
