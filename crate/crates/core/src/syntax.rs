//! Text syntax for formulas, arrow terms and term files.
//!
//! Formulas: identifiers are letters, `~A` negates, `A /\ B` and `A \/ B`
//! combine. A binary operand that is itself binary must be parenthesized.
//!
//! Terms: `name(A, B, ...)` is a generator, `f . g` is `f` after `g`
//! (right associative), `f /\ g` and `f \/ g` are tensors and bind tighter
//! than `.`, although the printer still parenthesizes a tensor next to `.`.
//! A bare identifier refers to an earlier definition.
//!
//! Files: a sequence of `name := term;` with `#` or `//` line comments.
//! The Unicode spellings `¬ ∧ ∨ ∘` are accepted as well.

use std::fmt;

use thiserror::Error;

use crate::formula::{Connective, Formula, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected {}; found {found}", expected.join(" or "))]
    Unexpected { expected: Vec<String>, found: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{name}` takes {expected} formula arguments, got {found}")]
    WrongArity { name: String, expected: usize, found: usize },
    #[error("undefined name `{0}`")]
    UnknownName(String),
    #[error("`{0}` is already defined")]
    DuplicateName(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{pos}: {kind}")]
pub struct ParseError {
    pub pos: Pos,
    pub kind: ParseErrorKind,
}

/// Surface syntax of an arrow term, before generator names and references
/// are resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Gen { name: String, args: Vec<Formula>, pos: Pos },
    Ref { name: String, pos: Pos },
    Comp(Box<Expr>, Box<Expr>),
    Tensor(Connective, Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn pos(&self) -> Pos {
        match self {
            Expr::Gen { pos, .. } | Expr::Ref { pos, .. } => *pos,
            Expr::Comp(f, _) | Expr::Tensor(_, f, _) => f.pos(),
        }
    }

    /// Names referenced by the expression, in order of first appearance.
    pub fn references(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_refs(&mut out);
        out
    }

    fn collect_refs(&self, out: &mut Vec<String>) {
        match self {
            Expr::Gen { .. } => {}
            Expr::Ref { name, .. } => {
                if !out.contains(name) {
                    out.push(name.clone());
                }
            }
            Expr::Comp(f, g) | Expr::Tensor(_, f, g) => {
                f.collect_refs(out);
                g.collect_refs(out);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Definition {
    pub name: String,
    pub pos: Pos,
    pub body: Expr,
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Semi,
    Assign,
    And,
    Or,
    Not,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{}`", s),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Assign => f.write_str("`:=`"),
            Tok::And => f.write_str("`/\\`"),
            Tok::Or => f.write_str("`\\/`"),
            Tok::Not => f.write_str("`~`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let mut line = 1;
    let mut col = 1;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column: col };
        let next = chars.get(i + 1).copied();
        let mut width = 1;
        let tok = match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => None,
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            '/' if next == Some('/') => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            '/' if next == Some('\\') => {
                width = 2;
                Some(Tok::And)
            }
            '\\' if next == Some('/') => {
                width = 2;
                Some(Tok::Or)
            }
            ':' if next == Some('=') => {
                width = 2;
                Some(Tok::Assign)
            }
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            '.' | '∘' => Some(Tok::Dot),
            ';' => Some(Tok::Semi),
            '~' | '¬' => Some(Tok::Not),
            '∧' => Some(Tok::And),
            '∨' => Some(Tok::Or),
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i + width < chars.len()
                    && (chars[i + width].is_ascii_alphanumeric() || chars[i + width] == '_')
                {
                    width += 1;
                }
                Some(Tok::Ident(chars[start..start + width].iter().collect()))
            }
            other => {
                return Err(ParseError {
                    pos,
                    kind: ParseErrorKind::Unexpected {
                        expected: vec!["a token".into()],
                        found: format!("`{}`", other),
                    },
                })
            }
        };
        if let Some(t) = tok {
            out.push((t, pos));
        }
        i += width;
        col += width;
    }
    out.push((Tok::Eof, Pos { line, column: col }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Parser, ParseError> {
        Ok(Parser { toks: lex(src)?, at: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek2(&self) -> &Tok {
        let i = (self.at + 1).min(self.toks.len() - 1);
        &self.toks[i].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> ParseError {
        ParseError {
            pos: self.pos(),
            kind: ParseErrorKind::Unexpected {
                expected: expected.iter().map(|s| s.to_string()).collect(),
                found: self.peek().to_string(),
            },
        }
    }

    fn expect(&mut self, tok: Tok, expected: &[&str]) -> Result<Pos, ParseError> {
        if *self.peek() == tok {
            Ok(self.bump().1)
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn binop(&self) -> Option<Connective> {
        match self.peek() {
            Tok::And => Some(Connective::And),
            Tok::Or => Some(Connective::Or),
            _ => None,
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let left = self.formula_unary()?;
        match self.binop() {
            Some(c) => {
                self.bump();
                let right = self.formula_unary()?;
                Ok(Formula::binary(c, left, right))
            }
            None => Ok(left),
        }
    }

    fn formula_unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(Formula::neg(self.formula_unary()?))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Atom(Letter::new(&name).expect("lexer yields identifiers")))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                self.expect(Tok::RParen, &["`)`", "`/\\`", "`\\/`"])?;
                Ok(inner)
            }
            _ => Err(self.unexpected(&["a letter", "`~`", "`(`"])),
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let left = self.tensor()?;
        if *self.peek() == Tok::Dot {
            self.bump();
            let right = self.term()?;
            Ok(Expr::Comp(Box::new(left), Box::new(right)))
        } else {
            Ok(left)
        }
    }

    fn tensor(&mut self) -> Result<Expr, ParseError> {
        let left = self.primary()?;
        match self.binop() {
            Some(c) => {
                self.bump();
                let right = self.primary()?;
                Ok(Expr::Tensor(c, Box::new(left), Box::new(right)))
            }
            None => Ok(left),
        }
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                if *self.peek() != Tok::LParen {
                    return Ok(Expr::Ref { name, pos });
                }
                self.bump();
                let mut args = vec![self.formula()?];
                loop {
                    match self.peek() {
                        Tok::Comma => {
                            self.bump();
                            args.push(self.formula()?);
                        }
                        Tok::RParen => {
                            self.bump();
                            break;
                        }
                        _ => return Err(self.unexpected(&["`,`", "`)`", "`/\\`", "`\\/`"])),
                    }
                }
                Ok(Expr::Gen { name, args, pos })
            }
            Tok::LParen => {
                self.bump();
                let inner = self.term()?;
                self.expect(Tok::RParen, &["`)`", "`.`", "`/\\`", "`\\/`"])?;
                Ok(inner)
            }
            _ => Err(self.unexpected(&["a generator", "a name", "`(`"])),
        }
    }

    fn end(&self, expected: &[&str]) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }
}

pub fn parse_formula(src: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(src)?;
    let a = p.formula()?;
    p.end(&["end of input", "`/\\`", "`\\/`"])?;
    Ok(a)
}

pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(src)?;
    let e = p.term()?;
    p.end(&["end of input", "`.`", "`/\\`", "`\\/`"])?;
    Ok(e)
}

/// Parses `name := term;` statements. Names are not resolved here.
pub fn parse_definitions(src: &str) -> Result<Vec<Definition>, ParseError> {
    let mut p = Parser::new(src)?;
    let mut out: Vec<Definition> = Vec::new();
    loop {
        let pos = p.pos();
        let name = match p.peek().clone() {
            Tok::Eof => break,
            Tok::Ident(name) if *p.peek2() == Tok::Assign => name,
            Tok::Ident(_) => {
                p.bump();
                return Err(p.unexpected(&["`:=`"]));
            }
            _ => return Err(p.unexpected(&["a definition name", "end of input"])),
        };
        p.bump();
        p.bump();
        let body = p.term()?;
        p.expect(Tok::Semi, &["`;`", "`.`", "`/\\`", "`\\/`"])?;
        if out.iter().any(|d| d.name == name) {
            return Err(ParseError { pos, kind: ParseErrorKind::DuplicateName(name) });
        }
        out.push(Definition { name, pos, body });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_round_trip() {
        for s in ["p", "~p", "~~p", "p /\\ (q \\/ r)", "~(p /\\ q) \\/ ~r", "(p /\\ q) \\/ r"] {
            assert_eq!(parse_formula(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn formula_unicode() {
        assert_eq!(parse_formula("¬p ∧ (q ∨ r)").unwrap().to_string(), "~p /\\ (q \\/ r)");
    }

    #[test]
    fn chained_binary_needs_parentheses() {
        let err = parse_formula("p /\\ q /\\ r").unwrap_err();
        assert_eq!(err.pos, Pos { line: 1, column: 8 });
        match err.kind {
            ParseErrorKind::Unexpected { found, .. } => assert_eq!(found, "`/\\`"),
            k => panic!("{:?}", k),
        }
    }

    #[test]
    fn negation_binds_tightest() {
        let a = parse_formula("~p /\\ q").unwrap();
        assert_eq!(a, Formula::conj(Formula::neg(Formula::atom("p")), Formula::atom("q")));
    }

    #[test]
    fn term_shapes() {
        let e = parse_expr("id(p) . id(p)").unwrap();
        assert!(matches!(e, Expr::Comp(..)));
        let e = parse_expr("f /\\ g . h").unwrap();
        match e {
            Expr::Comp(l, _) => assert!(matches!(*l, Expr::Tensor(..))),
            _ => panic!(),
        }
    }

    #[test]
    fn definitions_with_comments() {
        let src = "# a comment\nd1 := dist(p, q, r); // trailing\nd2 := d1 . id(p /\\ (q \\/ r));\n";
        let defs = parse_definitions(src).unwrap();
        assert_eq!(defs.len(), 2);
        assert_eq!(defs[1].pos, Pos { line: 3, column: 1 });
        assert_eq!(defs[1].body.references(), vec!["d1".to_string()]);
    }

    #[test]
    fn duplicate_definition() {
        let err = parse_definitions("a := id(p);\na := id(q);").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DuplicateName("a".into()));
    }

    #[test]
    fn missing_semicolon_reports_expected_set() {
        let err = parse_definitions("a := id(p)").unwrap_err();
        match err.kind {
            ParseErrorKind::Unexpected { expected, found } => {
                assert!(expected.contains(&"`;`".to_string()));
                assert_eq!(found, "end of input");
            }
            k => panic!("{:?}", k),
        }
    }
}
