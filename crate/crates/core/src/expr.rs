//! Object expressions over fusion data.
//!
//! ```text
//! sum     := product ('+' product)*
//! product := power ('*' power)*
//! power   := atom ('^' integer)?
//! atom    := label | integer atom | 'zero' | '(' sum ')'
//! ```
//!
//! `*` is the tensor product and is evaluated left-nested; `2tau` is `tau + tau`.

use std::fmt;

use crate::fusion::{FusionData, FusionError, Object};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObjectExpr {
    Zero,
    Simple(String),
    Scaled(u128, Box<ObjectExpr>),
    Sum(Box<ObjectExpr>, Box<ObjectExpr>),
    Product(Box<ObjectExpr>, Box<ObjectExpr>),
    Power(Box<ObjectExpr>, u32),
}

impl ObjectExpr {
    pub fn parse(text: &str) -> Result<ObjectExpr, FusionError> {
        let tokens = tokenize(text)?;
        let mut p = Parser { tokens, pos: 0 };
        let e = p.sum()?;
        if p.pos != p.tokens.len() {
            return Err(FusionError::Parse(format!("unexpected `{}` in `{text}`", p.tokens[p.pos])));
        }
        Ok(e)
    }

    pub fn evaluate(&self, fd: &FusionData) -> Result<Object, FusionError> {
        Ok(match self {
            ObjectExpr::Zero => fd.zero_object(),
            ObjectExpr::Simple(s) => fd.simple(fd.index_of(s)?),
            ObjectExpr::Scaled(m, e) => {
                let x = e.evaluate(fd)?;
                x.iter().map(|v| v.checked_mul(*m).ok_or(FusionError::Overflow)).collect::<Result<_, _>>()?
            }
            ObjectExpr::Sum(a, b) => {
                let (a, b) = (a.evaluate(fd)?, b.evaluate(fd)?);
                a.iter().zip(&b).map(|(x, y)| x.checked_add(*y).ok_or(FusionError::Overflow)).collect::<Result<_, _>>()?
            }
            ObjectExpr::Product(a, b) => fd.tensor(&a.evaluate(fd)?, &b.evaluate(fd)?)?,
            ObjectExpr::Power(a, n) => fd.power(&a.evaluate(fd)?, *n)?,
        })
    }
}

/// Parses and evaluates in one step.
pub fn evaluate(fd: &FusionData, text: &str) -> Result<Object, FusionError> {
    ObjectExpr::parse(text)?.evaluate(fd)
}

impl fmt::Display for ObjectExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectExpr::Zero => write!(f, "zero"),
            ObjectExpr::Simple(s) => write!(f, "{s}"),
            ObjectExpr::Scaled(m, e) => write!(f, "{m}({e})"),
            ObjectExpr::Sum(a, b) => write!(f, "({a} + {b})"),
            ObjectExpr::Product(a, b) => write!(f, "({a} * {b})"),
            ObjectExpr::Power(a, n) => write!(f, "({a})^{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Label(String),
    Number(u128),
    Plus,
    Star,
    Caret,
    Open,
    Close,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Label(s) => write!(f, "{s}"),
            Token::Number(n) => write!(f, "{n}"),
            Token::Plus => write!(f, "+"),
            Token::Star => write!(f, "*"),
            Token::Caret => write!(f, "^"),
            Token::Open => write!(f, "("),
            Token::Close => write!(f, ")"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>, FusionError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' | '*' | '^' | '(' | ')' => {
                chars.next();
                out.push(match c {
                    '+' => Token::Plus,
                    '*' => Token::Star,
                    '^' => Token::Caret,
                    '(' => Token::Open,
                    _ => Token::Close,
                });
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    s.push(d);
                    chars.next();
                }
                let n = s.parse().map_err(|_| FusionError::Parse(format!("number `{s}` too large")))?;
                out.push(Token::Number(n));
            }
            c if c.is_alphanumeric() || c == '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                    s.push(d);
                    chars.next();
                }
                out.push(Token::Label(s));
            }
            other => return Err(FusionError::Parse(format!("unexpected character `{other}`"))),
        }
    }
    if out.is_empty() {
        return Err(FusionError::Parse("empty expression".into()));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<ObjectExpr, FusionError> {
        let mut e = self.product()?;
        while self.eat(&Token::Plus) {
            e = ObjectExpr::Sum(Box::new(e), Box::new(self.product()?));
        }
        Ok(e)
    }

    fn product(&mut self) -> Result<ObjectExpr, FusionError> {
        let mut e = self.power()?;
        while self.eat(&Token::Star) {
            e = ObjectExpr::Product(Box::new(e), Box::new(self.power()?));
        }
        Ok(e)
    }

    fn power(&mut self) -> Result<ObjectExpr, FusionError> {
        let base = self.atom()?;
        if self.eat(&Token::Caret) {
            match self.tokens.get(self.pos).cloned() {
                Some(Token::Number(n)) => {
                    self.pos += 1;
                    let n = u32::try_from(n).map_err(|_| FusionError::Parse("exponent too large".into()))?;
                    return Ok(ObjectExpr::Power(Box::new(base), n));
                }
                _ => return Err(FusionError::Parse("`^` must be followed by an integer".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ObjectExpr, FusionError> {
        let tok = self.tokens.get(self.pos).cloned().ok_or_else(|| FusionError::Parse("unexpected end of expression".into()))?;
        self.pos += 1;
        match tok {
            Token::Label(s) if s == "zero" => Ok(ObjectExpr::Zero),
            Token::Label(s) => Ok(ObjectExpr::Simple(s)),
            // a number directly before an atom is a multiplicity, otherwise a label such as `1`
            Token::Number(m) => match self.peek() {
                Some(Token::Label(_) | Token::Open) => Ok(ObjectExpr::Scaled(m, Box::new(self.atom()?))),
                _ => Ok(ObjectExpr::Simple(m.to_string())),
            },
            Token::Open => {
                let e = self.sum()?;
                if !self.eat(&Token::Close) {
                    return Err(FusionError::Parse("missing `)`".into()));
                }
                Ok(e)
            }
            other => Err(FusionError::Parse(format!("unexpected `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::bundled;

    #[test]
    fn fibonacci_expressions() {
        let fd = bundled("fibonacci").unwrap();
        assert_eq!(evaluate(&fd, "tau").unwrap(), vec![0, 1]);
        assert_eq!(evaluate(&fd, "tau+tau").unwrap(), vec![0, 2]);
        assert_eq!(evaluate(&fd, "2tau").unwrap(), vec![0, 2]);
        assert_eq!(evaluate(&fd, "tau^3").unwrap(), vec![1, 2]);
        assert_eq!(evaluate(&fd, "tau*tau*tau").unwrap(), vec![1, 2]);
        assert_eq!(evaluate(&fd, "(1 + tau) * tau").unwrap(), vec![1, 2]);
        assert_eq!(evaluate(&fd, "zero").unwrap(), vec![0, 0]);
        assert_eq!(evaluate(&fd, "tau^0").unwrap(), vec![1, 0]);
        assert_eq!(evaluate(&fd, "1").unwrap(), vec![1, 0]);
        assert_eq!(evaluate(&fd, "1 + 2(1 + tau)").unwrap(), vec![3, 2]);
    }

    #[test]
    fn precedence() {
        let fd = bundled("fibonacci").unwrap();
        // tau + tau*tau = tau + (1 + tau)
        assert_eq!(evaluate(&fd, "tau + tau*tau").unwrap(), vec![1, 2]);
        // tau*tau^2 = tau * (1 + tau) = 1 + 2tau
        assert_eq!(evaluate(&fd, "tau*tau^2").unwrap(), vec![1, 2]);
    }

    #[test]
    fn errors() {
        let fd = bundled("fibonacci").unwrap();
        assert!(matches!(evaluate(&fd, "sigma"), Err(FusionError::UnknownSimple(_))));
        for bad in ["", "tau +", "(tau", "tau ^ x", "tau $", "tau tau"] {
            assert!(matches!(evaluate(&fd, bad), Err(FusionError::Parse(_))), "{bad}");
        }
    }
}
