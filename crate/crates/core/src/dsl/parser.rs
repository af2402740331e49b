//! Recursive-descent parser for the series expression language.
//!
//! ```text
//! expr   := term (("+"|"-") term)*
//! term   := factor (("*"|"/") factor)*
//! factor := base ("^" sint)?
//! base   := INT | "q" "^" UINT | poch | theta | gfref | subst | "(" expr ")" | "-" base
//! poch   := "poch" "(" ("-")? "q" "^" UINT "," "q" "^" UINT ")"
//! gfref  := "gf" "(" NAME ")"
//! subst  := "subst" "(" expr "," ("-")? "q" "^" UINT ")"
//! theta  := "theta" "{" NAME "in" ("Z"|"N") "}" "(" iexpr ";" iexpr ")"
//! iexpr  := iterm (("+"|"-") iterm)*
//! iterm  := ifact ("*" ifact | "div" UINT)*
//! ifact  := INT | NAME | "ceil2" "(" iexpr ")" | "(-1)" "^" ifact | "(" iexpr ")"
//! ```
//!
//! The exponent of `(-1)^` is any `ifact`, so both `(-1)^(n)` and
//! `(-1)^ceil2(n)` are accepted.

use num_bigint::BigInt;
use num_traits::Zero;

use super::ast::{Expr, IntExpr, ThetaExpr};
use super::lexer::{lex, Token, TokenKind};
use super::ParseError;
use crate::partitions::FunctionId;
use crate::series::Sign;
use crate::theta::Domain;

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let tokens = lex(src)?;
    let mut p = Parser { tokens, pos: 0 };
    let expr = p.expr()?;
    p.expect_eof(&["+", "-", "*", "/", "^"])?;
    Ok(expr)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_is(&self, text: &str) -> bool {
        let t = self.peek();
        t.kind != TokenKind::Eof && t.kind != TokenKind::Int && t.text == text
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.kind != TokenKind::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError::syntax(self.peek(), expected)
    }

    fn eat(&mut self, text: &str) -> bool {
        if self.peek_is(text) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, text: &str) -> Result<(), ParseError> {
        if self.eat(text) {
            Ok(())
        } else {
            Err(self.error(&[text]))
        }
    }

    fn expect_eof(&self, continuations: &[&str]) -> Result<(), ParseError> {
        if self.peek().kind == TokenKind::Eof {
            Ok(())
        } else {
            let mut expected = continuations.to_vec();
            expected.push("end of input");
            Err(self.error(&expected))
        }
    }

    fn uint(&mut self) -> Result<(BigInt, usize), ParseError> {
        let t = self.peek();
        if t.kind != TokenKind::Int {
            return Err(self.error(&["integer"]));
        }
        let t = self.bump();
        let v = t
            .text
            .parse::<BigInt>()
            .expect("lexer only emits digit runs");
        Ok((v, t.offset))
    }

    /// An unsigned integer that must be at least 1 and fit in `usize`.
    fn positive(&mut self) -> Result<usize, ParseError> {
        let (v, offset) = self.uint()?;
        match usize::try_from(&v) {
            Ok(k) if k >= 1 => Ok(k),
            _ => Err(ParseError::out_of_range(offset, &v)),
        }
    }

    /// `("-")? "q" "^" UINT`
    fn signed_q_power(&mut self) -> Result<(Sign, usize), ParseError> {
        let sign = if self.eat("-") {
            Sign::Minus
        } else {
            Sign::Plus
        };
        self.expect("q")?;
        self.expect("^")?;
        Ok((sign, self.positive()?))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat("+") {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat("-") {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat("*") {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat("/") {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if !self.eat("^") {
            return Ok(base);
        }
        let negative = self.eat("-");
        let (v, offset) = self.uint()?;
        let v = if negative { -v } else { v };
        let k = i64::try_from(&v).map_err(|_| ParseError::out_of_range(offset, &v))?;
        Ok(Expr::Pow(Box::new(base), k))
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        let t = self.peek().clone();
        match (t.kind, t.text.as_str()) {
            (TokenKind::Int, _) => Ok(Expr::Int(self.uint()?.0)),
            (TokenKind::Keyword, "q") => {
                self.bump();
                self.expect("^")?;
                Ok(Expr::QPow(self.positive()?))
            }
            (TokenKind::Keyword, "poch") => {
                self.bump();
                self.expect("(")?;
                let (sign, a) = self.signed_q_power()?;
                self.expect(",")?;
                self.expect("q")?;
                self.expect("^")?;
                let b = self.positive()?;
                self.expect(")")?;
                Ok(Expr::Poch { sign, a, b })
            }
            (TokenKind::Keyword, "gf") => {
                self.bump();
                self.expect("(")?;
                let name = self.peek().clone();
                if name.kind != TokenKind::Name {
                    return Err(self.error(&["function name"]));
                }
                self.bump();
                let id = name
                    .text
                    .parse::<FunctionId>()
                    .map_err(|_| ParseError::unknown_function(name.offset, &name.text))?;
                self.expect(")")?;
                Ok(Expr::Gf(id))
            }
            (TokenKind::Keyword, "subst") => {
                self.bump();
                self.expect("(")?;
                let inner = self.expr()?;
                self.expect(",")?;
                let (sign, k) = self.signed_q_power()?;
                self.expect(")")?;
                Ok(Expr::Subst {
                    expr: Box::new(inner),
                    k,
                    sign,
                })
            }
            (TokenKind::Keyword, "theta") => {
                self.bump();
                self.theta().map(|t| Expr::Theta(Box::new(t)))
            }
            (TokenKind::Symbol, "(") => {
                self.bump();
                let inner = self.expr()?;
                self.expect(")")?;
                Ok(inner)
            }
            (TokenKind::Symbol, "-") => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.base()?)))
            }
            _ => Err(self.error(&["integer", "q", "poch", "theta", "gf", "subst", "(", "-"])),
        }
    }

    fn theta(&mut self) -> Result<ThetaExpr, ParseError> {
        self.expect("{")?;
        let var = self.peek().clone();
        if var.kind != TokenKind::Name {
            return Err(self.error(&["variable name"]));
        }
        self.bump();
        self.expect("in")?;
        let domain = if self.eat("Z") {
            Domain::AllIntegers
        } else if self.eat("N") {
            Domain::NonNegative
        } else {
            return Err(self.error(&["Z", "N"]));
        };
        self.expect("}")?;
        self.expect("(")?;
        let weight = self.iexpr(&var.text)?;
        self.expect(";")?;
        let exponent = self.iexpr(&var.text)?;
        self.expect(")")?;
        Ok(ThetaExpr {
            var: var.text,
            domain,
            weight,
            exponent,
        })
    }

    fn iexpr(&mut self, var: &str) -> Result<IntExpr, ParseError> {
        let mut lhs = self.iterm(var)?;
        loop {
            if self.eat("+") {
                lhs = IntExpr::Add(Box::new(lhs), Box::new(self.iterm(var)?));
            } else if self.eat("-") {
                lhs = IntExpr::Sub(Box::new(lhs), Box::new(self.iterm(var)?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn iterm(&mut self, var: &str) -> Result<IntExpr, ParseError> {
        let mut lhs = self.ifact(var)?;
        loop {
            if self.eat("*") {
                lhs = IntExpr::Mul(Box::new(lhs), Box::new(self.ifact(var)?));
            } else if self.eat("div") {
                let (d, offset) = self.uint()?;
                if d.is_zero() {
                    return Err(ParseError::out_of_range(offset, &d));
                }
                lhs = IntExpr::Div(Box::new(lhs), d);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn ifact(&mut self, var: &str) -> Result<IntExpr, ParseError> {
        let t = self.peek().clone();
        match (t.kind, t.text.as_str()) {
            (TokenKind::Int, _) => Ok(IntExpr::Lit(self.uint()?.0)),
            (TokenKind::Name, name) => {
                if name != var {
                    return Err(ParseError::unbound_variable(t.offset, name));
                }
                self.bump();
                Ok(IntExpr::Var(t.text))
            }
            (TokenKind::Keyword, "ceil2") => {
                self.bump();
                self.expect("(")?;
                let inner = self.iexpr(var)?;
                self.expect(")")?;
                Ok(IntExpr::Ceil2(Box::new(inner)))
            }
            (TokenKind::Symbol, "(") => {
                self.bump();
                if self.eat("-") {
                    let one = self.peek().clone();
                    if !(one.kind == TokenKind::Int && one.text == "1") {
                        return Err(self.error(&["1"]));
                    }
                    self.bump();
                    self.expect(")")?;
                    self.expect("^")?;
                    return Ok(IntExpr::AltSign(Box::new(self.ifact(var)?)));
                }
                let inner = self.iexpr(var)?;
                self.expect(")")?;
                Ok(inner)
            }
            _ => Err(self.error(&["integer", "variable", "ceil2", "(", "(-1)"])),
        }
    }
}
