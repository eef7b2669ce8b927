//! Hand-written lexer and recursive-descent parser for the KB format.
//!
//! ```text
//! # comment
//! Penguin <= Bird.
//! T(Bird) <= Fly.
//! (Bird and not Fly)(tweety).
//! likes(tweety, opus).
//! ```
//!
//! Precedence is `not` > `and` > `or`; chains of `and`/`or` associate to the
//! left. Quantifier bodies bind like `not`: `exists r.A and B` is
//! `(exists r.A) and B`.

use crate::concept::Concept;
use crate::error::{Error, Result};
use crate::kb::{DefeasibleInclusion, KnowledgeBase, Query, QueryLhs, StrictInclusion};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Subsumed,
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

const KEYWORDS: &[&str] = &["Top", "Bot", "not", "and", "or", "exists", "forall", "T"];

fn lex(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    let (mut line, mut column) = (1, 1);

    while let Some(&c) = chars.peek() {
        let (start_line, start_col) = (line, column);
        let push = |out: &mut Vec<Token>, tok| {
            out.push(Token {
                tok,
                line: start_line,
                column: start_col,
            })
        };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                column = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                column += 1;
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                }
            }
            '(' | ')' | ',' | '.' => {
                chars.next();
                column += 1;
                let tok = match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    _ => Tok::Dot,
                };
                push(&mut out, tok);
            }
            '<' => {
                chars.next();
                column += 1;
                if chars.peek() != Some(&'=') {
                    return Err(syntax(start_line, start_col, "expected `<=`"));
                }
                chars.next();
                column += 1;
                push(&mut out, Tok::Subsumed);
            }
            c if c.is_ascii_alphabetic() => {
                let mut ident = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        ident.push(c);
                        chars.next();
                        column += 1;
                    } else {
                        break;
                    }
                }
                push(&mut out, Tok::Ident(ident));
            }
            other => {
                return Err(syntax(
                    line,
                    column,
                    &format!("unexpected character `{other}`"),
                ));
            }
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

fn syntax(line: usize, column: usize, message: &str) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.to_string(),
    }
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Comma => "`,`".into(),
        Tok::Dot => "`.`".into(),
        Tok::Subsumed => "`<=`".into(),
        Tok::Eof => "end of input".into(),
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(input: &str) -> Result<Self> {
        Ok(Parser {
            tokens: lex(input)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[i].tok
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: &str) -> Error {
        let t = &self.tokens[self.pos];
        syntax(t.line, t.column, message)
    }

    fn unexpected(&self, expected: &str) -> Error {
        self.error_here(&format!(
            "expected {expected}, found {}",
            describe(self.peek())
        ))
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.advance();
            Ok(())
        } else {
            Err(self.unexpected(&describe(&tok)))
        }
    }

    /// A non-keyword identifier.
    fn name(&mut self, what: &str) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                self.advance();
                Ok(s)
            }
            _ => Err(self.unexpected(what)),
        }
    }

    fn at_typicality(&self) -> bool {
        self.is_keyword("T") && *self.peek_at(1) == Tok::LParen
    }

    fn concept(&mut self) -> Result<Concept> {
        let mut c = self.conjunction()?;
        while self.is_keyword("or") {
            self.advance();
            c = Concept::or(c, self.conjunction()?);
        }
        Ok(c)
    }

    fn conjunction(&mut self) -> Result<Concept> {
        let mut c = self.unary()?;
        while self.is_keyword("and") {
            self.advance();
            c = Concept::and(c, self.unary()?);
        }
        Ok(c)
    }

    fn unary(&mut self) -> Result<Concept> {
        if self.is_keyword("not") {
            self.advance();
            return Ok(Concept::not(self.unary()?));
        }
        if self.is_keyword("exists") || self.is_keyword("forall") {
            let universal = self.is_keyword("forall");
            self.advance();
            let role = self.name("a role name")?;
            self.expect(Tok::Dot)?;
            let body = self.unary()?;
            return Ok(if universal {
                Concept::forall(role, body)
            } else {
                Concept::exists(role, body)
            });
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Concept> {
        match self.peek().clone() {
            Tok::LParen => {
                self.advance();
                let c = self.concept()?;
                self.expect(Tok::RParen)?;
                Ok(c)
            }
            Tok::Ident(s) if s == "Top" => {
                self.advance();
                Ok(Concept::Top)
            }
            Tok::Ident(s) if s == "Bot" => {
                self.advance();
                Ok(Concept::Bot)
            }
            Tok::Ident(s) if s == "T" => Err(self.error_here(
                "the typicality operator may only appear as the whole left-hand side of an inclusion",
            )),
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                self.advance();
                Ok(Concept::Atom(s))
            }
            _ => Err(self.unexpected("a concept")),
        }
    }

    /// `T(C)` at the current position, returning `C`.
    fn typical_lhs(&mut self) -> Result<Concept> {
        self.advance();
        self.expect(Tok::LParen)?;
        let c = self.concept()?;
        self.expect(Tok::RParen)?;
        if self.is_keyword("and") || self.is_keyword("or") {
            return Err(self.error_here(
                "the typicality operator may only appear as the whole left-hand side of an inclusion",
            ));
        }
        Ok(c)
    }

    fn statement(&mut self, kb: &mut KnowledgeBase) -> Result<()> {
        if self.at_typicality() {
            let subject = self.typical_lhs()?;
            self.expect(Tok::Subsumed)?;
            let aspect = self.concept()?;
            self.expect(Tok::Dot)?;
            kb.add_defeasible(DefeasibleInclusion::new(subject, aspect));
            return Ok(());
        }

        let role_assertion = matches!(self.peek(), Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()))
            && *self.peek_at(1) == Tok::LParen
            && matches!(self.peek_at(2), Tok::Ident(_))
            && *self.peek_at(3) == Tok::Comma;
        if role_assertion {
            let role = self.name("a role name")?;
            self.expect(Tok::LParen)?;
            let a = self.name("an individual name")?;
            self.expect(Tok::Comma)?;
            let b = self.name("an individual name")?;
            self.expect(Tok::RParen)?;
            self.expect(Tok::Dot)?;
            kb.add_role_assertion(role, a, b);
            return Ok(());
        }

        let lhs = self.concept()?;
        match self.peek() {
            Tok::Subsumed => {
                self.advance();
                let rhs = self.concept()?;
                self.expect(Tok::Dot)?;
                kb.add_strict(StrictInclusion::new(lhs, rhs));
            }
            Tok::LParen => {
                self.advance();
                let individual = self.name("an individual name")?;
                self.expect(Tok::RParen)?;
                self.expect(Tok::Dot)?;
                kb.add_concept_assertion(lhs, individual);
            }
            _ => return Err(self.unexpected("`<=` or an assertion")),
        }
        Ok(())
    }

    fn finish(&mut self) -> Result<()> {
        if *self.peek() == Tok::Dot {
            self.advance();
        }
        match self.peek() {
            Tok::Eof => Ok(()),
            _ => Err(self.unexpected("end of input")),
        }
    }
}

/// Parses a knowledge base. Duplicate statements are collapsed and the
/// concept, role and individual namespaces are checked for clashes.
pub fn parse_kb(text: &str) -> Result<KnowledgeBase> {
    let mut p = Parser::new(text)?;
    let mut kb = KnowledgeBase::new();
    while *p.peek() != Tok::Eof {
        p.statement(&mut kb)?;
    }
    kb.check_namespaces()?;
    Ok(kb)
}

pub fn parse_concept(text: &str) -> Result<Concept> {
    let mut p = Parser::new(text)?;
    let c = p.concept()?;
    match p.peek() {
        Tok::Eof => Ok(c),
        _ => Err(p.unexpected("end of input")),
    }
}

/// Parses `T(C) <= D` or `C <= D`; a trailing `.` is accepted.
pub fn parse_query(text: &str) -> Result<Query> {
    let mut p = Parser::new(text)?;
    let lhs = if p.at_typicality() {
        QueryLhs::Typical(p.typical_lhs()?)
    } else {
        QueryLhs::Plain(p.concept()?)
    };
    p.expect(Tok::Subsumed)?;
    let rhs = p.concept()?;
    p.finish()?;
    Ok(Query { lhs, rhs })
}
