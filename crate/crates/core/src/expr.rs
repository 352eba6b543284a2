//! Text syntax for algebra elements and functionals.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^*']
//! atom   := scalar | 'I' | 'T(' int ')' | 'T*(' int ')' | '(' expr ')'
//! scalar := rat [('+' | '-') rat 'i']
//! rat    := int ['/' int]
//! ```
//!
//! A scalar swallows a following `± rat i` greedily, so `1/2 + 3i` is one
//! complex number while `1/2 + 3` is a sum.

use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Signed, Zero};

use crate::dual::Functional;
use crate::error::{Error, Result};
use crate::free::FreeElement;
use crate::scalar::GaussianRational;
use crate::semigroup::NumericalSemigroup;
use crate::translation::PartialTranslation;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Scalar(GaussianRational),
    Identity,
    Gen(i64),
    GenStar(i64),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Star(Box<Expr>),
    Paren(Box<Expr>),
}

impl Expr {
    /// Evaluates in `ℂ[Σ]`; each product of monomials collapses to a single
    /// basis monomial.
    pub fn to_free(&self, s: &NumericalSemigroup) -> Result<FreeElement> {
        Ok(match self {
            Expr::Scalar(c) => FreeElement::identity(s).scale(c),
            Expr::Identity => FreeElement::identity(s),
            Expr::Gen(a) => FreeElement::monomial(&PartialTranslation::elementary(s, *a, false)?),
            Expr::GenStar(a) => FreeElement::monomial(&PartialTranslation::elementary(s, *a, true)?),
            Expr::Add(l, r) => l.to_free(s)?.add(&r.to_free(s)?)?,
            Expr::Sub(l, r) => l.to_free(s)?.sub(&r.to_free(s)?)?,
            Expr::Mul(l, r) => l.to_free(s)?.multiply(&r.to_free(s)?)?,
            Expr::Star(x) => x.to_free(s)?.adjoint(),
            Expr::Paren(x) => x.to_free(s)?,
        })
    }
}

fn fmt_rat(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// `re` or `re±|im|i`, always re-parsable as a single scalar.
pub struct ScalarSyntax<'a>(pub &'a GaussianRational);

impl fmt::Display for ScalarSyntax<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let GaussianRational { re, im } = self.0;
        fmt_rat(re, f)?;
        if !im.is_zero() {
            write!(f, "{}", if im.is_negative() { "-" } else { "+" })?;
            fmt_rat(&im.abs(), f)?;
            write!(f, "i")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Scalar(c) => write!(f, "{}", ScalarSyntax(c)),
            Expr::Identity => write!(f, "I"),
            Expr::Gen(a) => write!(f, "T({a})"),
            Expr::GenStar(a) => write!(f, "T*({a})"),
            Expr::Add(l, r) => write!(f, "{l} + {r}"),
            Expr::Sub(l, r) => write!(f, "{l} - {r}"),
            Expr::Mul(l, r) => write!(f, "{l}*{r}"),
            Expr::Star(x) => write!(f, "{x}^*"),
            Expr::Paren(x) => write!(f, "({x})"),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self { text, pos: 0 }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.error(format!("expected '{token}'"))
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return self.error("unexpected trailing input");
        }
        Ok(())
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        self.pos += len;
        (len > 0).then(|| &self.text[start..start + len])
    }

    fn int(&mut self, signed: bool) -> Result<BigInt> {
        self.skip_ws();
        let negative = signed && self.rest().starts_with('-');
        if negative {
            self.pos += 1;
        }
        match self.digits() {
            Some(d) => {
                let n: BigInt = d.parse().expect("ascii digits");
                Ok(if negative { -n } else { n })
            }
            None => self.error("expected an integer"),
        }
    }

    fn small_int(&mut self, signed: bool) -> Result<i64> {
        let start = self.pos;
        let n = self.int(signed)?;
        i64::try_from(n).or_else(|_| {
            self.pos = start;
            self.error("integer out of range")
        })
    }

    fn rat(&mut self, signed: bool) -> Result<BigRational> {
        let num = self.int(signed)?;
        if self.eat("/") {
            self.skip_ws();
            let offset = self.pos;
            let den = self.int(false)?;
            if den.is_zero() {
                return Err(Error::DivisionByZero { offset });
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn starts_rat(&mut self, signed: bool) -> bool {
        self.skip_ws();
        let r = self.rest();
        let r = if signed { r.strip_prefix('-').unwrap_or(r) } else { r };
        r.starts_with(|c: char| c.is_ascii_digit())
    }

    fn scalar(&mut self) -> Result<GaussianRational> {
        let re = self.rat(true)?;
        let save = self.pos;
        let sign = if self.eat("+") {
            Some(false)
        } else if self.eat("-") {
            Some(true)
        } else {
            None
        };
        if let Some(negative) = sign {
            if self.starts_rat(false) {
                if let Ok(im) = self.rat(false) {
                    if self.rest().starts_with('i') {
                        self.pos += 1;
                        let im = if negative { -im } else { im };
                        return Ok(GaussianRational::new(re, im));
                    }
                }
            }
        }
        self.pos = save;
        Ok(GaussianRational::new(re, BigRational::zero()))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut left = self.term()?;
        loop {
            if self.eat("+") {
                left = Expr::Add(Box::new(left), Box::new(self.term()?));
            } else if self.eat("-") {
                left = Expr::Sub(Box::new(left), Box::new(self.term()?));
            } else {
                return Ok(left);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut left = self.factor()?;
        while self.eat("*") {
            left = Expr::Mul(Box::new(left), Box::new(self.factor()?));
        }
        Ok(left)
    }

    fn factor(&mut self) -> Result<Expr> {
        let atom = self.atom()?;
        if self.eat("^*") {
            Ok(Expr::Star(Box::new(atom)))
        } else {
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        if self.starts_rat(true) {
            return Ok(Expr::Scalar(self.scalar()?));
        }
        if self.eat("T*(") {
            let a = self.small_int(true)?;
            self.expect(")")?;
            return Ok(Expr::GenStar(a));
        }
        if self.eat("T(") {
            let a = self.small_int(true)?;
            self.expect(")")?;
            return Ok(Expr::Gen(a));
        }
        if self.eat("I") {
            return Ok(Expr::Identity);
        }
        if self.eat("(") {
            let inner = self.expr()?;
            self.expect(")")?;
            return Ok(Expr::Paren(Box::new(inner)));
        }
        self.error("expected a scalar, 'I', 'T(', 'T*(' or '('")
    }

    fn functional(&mut self) -> Result<Functional> {
        if self.eat("haar") {
            return Ok(crate::dual::haar());
        }
        if self.eat("w[") {
            let a = self.small_int(true)?;
            self.expect(",")?;
            let b = self.small_int(true)?;
            self.expect("]")?;
            return Ok(Functional::MatrixCoeff { a, b });
        }
        if self.eat("pm(") {
            let p = self.small_int(true)?;
            let q = if self.eat("/") {
                self.skip_ws();
                let offset = self.pos;
                let q = self.small_int(false)?;
                if q == 0 {
                    return Err(Error::DivisionByZero { offset });
                }
                q
            } else {
                1
            };
            self.expect(")")?;
            return Ok(Functional::point_mass(Rational64::new(p, q)));
        }
        if self.eat("conv(") {
            let f = self.functional()?;
            self.expect(",")?;
            let g = self.functional()?;
            self.expect(")")?;
            return Ok(crate::dual::convolve(&f, &g));
        }
        if self.eat("lin(") {
            let mut terms = Vec::new();
            let mut negate = false;
            loop {
                let c = self.scalar()?;
                self.expect("*")?;
                let f = self.functional()?;
                terms.push((if negate { -c } else { c }, f));
                if self.eat("+") {
                    negate = false;
                } else if self.eat("-") {
                    negate = true;
                } else {
                    break;
                }
            }
            self.expect(")")?;
            return Ok(Functional::LinCombo(terms));
        }
        self.error("expected 'haar', 'w[', 'pm(', 'conv(' or 'lin('")
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_functional(text: &str) -> Result<Functional> {
    let mut p = Parser::new(text);
    let f = p.functional()?;
    p.finish()?;
    Ok(f)
}

/// Parses and evaluates in `ℂ[Σ]`.
pub fn parse_free(text: &str, s: &NumericalSemigroup) -> Result<FreeElement> {
    parse(text)?.to_free(s)
}
