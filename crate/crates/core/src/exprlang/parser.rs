//! Tokenizer and recursive-descent parser.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' unary)?
//! primary := number | ident | func '(' expr ')' | '(' expr ')'
//! ```
//!
//! `^` binds tighter than unary minus and associates to the right, so
//! `-x^2` is `-(x^2)` and `a^b^c` is `a^(b^c)`.

use super::ast::{BinOp, Expr, Func};
use super::ExprError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(v) => format!("number {v}"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' | b'.' => {
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        while j < bytes.len() && bytes[j].is_ascii_digit() {
                            j += 1;
                        }
                        i = j;
                    }
                }
                let text = &src[start..i];
                match text.parse::<f64>() {
                    Ok(v) if v.is_finite() => {
                        out.push((Tok::Num(v), start));
                        continue;
                    }
                    _ => {
                        return Err(ExprError::Syntax {
                            offset: start,
                            expected: vec!["finite number".into()],
                            found: format!("`{text}`"),
                        })
                    }
                }
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(src[start..i].to_owned()), start));
                continue;
            }
            _ => {
                let ch = src[start..].chars().next().unwrap_or('?');
                return Err(ExprError::Syntax {
                    offset: start,
                    expected: vec!["operator, number, identifier or parenthesis".into()],
                    found: format!("`{ch}`"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

const OPERAND: [&str; 4] = ["number", "identifier", "`(`", "`-`"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ExprError {
        ExprError::Syntax {
            offset: self.offset(),
            expected: expected.iter().map(|s| (*s).to_owned()).collect(),
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ExprError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.primary()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let exponent = self.unary()?;
            return Ok(Expr::binary(BinOp::Pow, base, exponent));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        match self.peek().clone() {
            Tok::Num(v) => {
                self.bump();
                Ok(Expr::Number(v))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::Ident(name) => {
                let (_, at) = self.bump();
                if *self.peek() == Tok::LParen {
                    let func = Func::from_name(&name)
                        .ok_or(ExprError::UnknownFunction { name, offset: at })?;
                    self.bump();
                    let arg = self.expr()?;
                    self.expect(Tok::RParen, "`)`")?;
                    return Ok(Expr::call(func, arg));
                }
                if Func::from_name(&name).is_some() {
                    return Err(self.error(&["`(`"]));
                }
                Ok(if name == "x" { Expr::Var } else { Expr::Param(name) })
            }
            _ => Err(self.error(&OPERAND)),
        }
    }
}

/// Parses an expression in `x` and named parameters.
pub fn parse(source: &str) -> Result<Expr, ExprError> {
    let mut p = Parser {
        toks: tokenize(source)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(v: f64) -> Expr {
        Expr::Number(v)
    }

    #[test]
    fn vanishing_mass_expression() {
        let e = parse("alpha^2/(x^2+q)").unwrap();
        let expected = Expr::binary(
            BinOp::Div,
            Expr::binary(BinOp::Pow, Expr::param("alpha"), num(2.0)),
            Expr::binary(
                BinOp::Add,
                Expr::binary(BinOp::Pow, Expr::Var, num(2.0)),
                Expr::param("q"),
            ),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn function_call_node() {
        let e = parse("tanhq(alpha*x)^2").unwrap();
        let expected = Expr::binary(
            BinOp::Pow,
            Expr::call(
                Func::TanhQ,
                Expr::binary(BinOp::Mul, Expr::param("alpha"), Expr::Var),
            ),
            num(2.0),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn dangling_operator_reports_offset() {
        match parse("2+*3") {
            Err(ExprError::Syntax {
                offset, expected, ..
            }) => {
                assert_eq!(offset, 2);
                assert!(expected.iter().any(|e| e == "number"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_function() {
        assert_eq!(
            parse("1 + foo(x)"),
            Err(ExprError::UnknownFunction {
                name: "foo".into(),
                offset: 4
            })
        );
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse("-x^2").unwrap(),
            Expr::Neg(Box::new(Expr::binary(BinOp::Pow, Expr::Var, num(2.0))))
        );
        assert_eq!(
            parse("2^3^2").unwrap(),
            Expr::binary(
                BinOp::Pow,
                num(2.0),
                Expr::binary(BinOp::Pow, num(3.0), num(2.0))
            )
        );
        assert_eq!(
            parse("1-2-3").unwrap(),
            Expr::binary(
                BinOp::Sub,
                Expr::binary(BinOp::Sub, num(1.0), num(2.0)),
                num(3.0)
            )
        );
        assert_eq!(
            parse("x^-1").unwrap(),
            Expr::binary(BinOp::Pow, Expr::Var, Expr::Neg(Box::new(num(1.0))))
        );
    }

    #[test]
    fn scientific_literals() {
        assert_eq!(parse("1.5e-3").unwrap(), num(1.5e-3));
        assert_eq!(parse(".25E+2").unwrap(), num(25.0));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse("(x"), Err(ExprError::Syntax { offset: 2, .. })));
        assert!(matches!(parse("x)"), Err(ExprError::Syntax { offset: 1, .. })));
        assert!(matches!(parse("exp x"), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse("x $ 2"), Err(ExprError::Syntax { offset: 2, .. })));
        assert!(matches!(parse(""), Err(ExprError::Syntax { offset: 0, .. })));
        assert!(matches!(parse("1e999"), Err(ExprError::Syntax { .. })));
    }
}
