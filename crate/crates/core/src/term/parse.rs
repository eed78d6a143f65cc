//! Recursive-descent parser for the concrete term syntax.
//!
//! ```text
//! term    := sum
//! sum     := prod (("+" | "-") prod)*
//! prod    := prefix ("*" prefix)*
//! prefix  := "-" prefix | postfix
//! postfix := atom ("'")*
//! atom    := "0" | "1" | "S(" term ")" | "P(" term ")" | "(" term ")" | digits
//! digits  := "0" "1"+            (signatures with unary append only)
//! ```
//!
//! Rule patterns additionally admit lowercase identifiers as variables.

use std::fmt;

use super::{Signature, Symbol, Term};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{kind} at offset {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken { found: String, expected: &'static str },
    UnexpectedEnd { expected: &'static str },
    /// The symbol exists in the grammar but not in the target signature.
    SignatureViolation { symbol: Symbol, signature: String },
    DigitsWithoutAppend,
    VariableInTerm(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character `{c}`"),
            ParseErrorKind::UnexpectedToken { found, expected } => {
                write!(f, "expected {expected}, found `{found}`")
            }
            ParseErrorKind::UnexpectedEnd { expected } => {
                write!(f, "expected {expected}, found end of input")
            }
            ParseErrorKind::SignatureViolation { symbol, signature } => {
                write!(f, "symbol `{symbol}` is not in the {signature} signature")
            }
            ParseErrorKind::DigitsWithoutAppend => {
                f.write_str("digit strings need a signature with unary append")
            }
            ParseErrorKind::VariableInTerm(v) => {
                write!(f, "variable `{v}` is not allowed in a ground term")
            }
        }
    }
}

/// Parse tree shared by ground terms and rule patterns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tree {
    Var(String),
    App(Symbol, Vec<Tree>),
}

impl Tree {
    fn into_term(self) -> Term {
        match self {
            Tree::Var(v) => unreachable!("variable `{v}` survived ground parsing"),
            Tree::App(sym, children) => {
                let children = children.into_iter().map(Tree::into_term).collect();
                Term::from_parts(sym, children).expect("parser builds nodes with correct arity")
            }
        }
    }
}

pub fn parse_term(text: &str, sig: &Signature) -> Result<Term, ParseError> {
    parse_tree(text, sig, false).map(Tree::into_term)
}

pub(crate) fn parse_tree(text: &str, sig: &Signature, allow_vars: bool) -> Result<Tree, ParseError> {
    let tokens = lex(text, allow_vars)?;
    let mut p = Parser {
        tokens,
        at: 0,
        sig,
        end: text.len(),
    };
    let tree = p.sum()?;
    match p.peek() {
        None => Ok(tree),
        Some((tok, off)) => Err(ParseError {
            offset: off,
            kind: ParseErrorKind::UnexpectedToken {
                found: tok.to_string(),
                expected: "end of input",
            },
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Zero,
    One,
    Digits(usize),
    Plus,
    Dash,
    Star,
    Quote,
    LParen,
    RParen,
    S,
    P,
    Ident(String),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Zero => f.write_str("0"),
            Tok::One => f.write_str("1"),
            Tok::Digits(n) => write!(f, "0{}", "1".repeat(*n)),
            Tok::Plus => f.write_str("+"),
            Tok::Dash => f.write_str("-"),
            Tok::Star => f.write_str("*"),
            Tok::Quote => f.write_str("'"),
            Tok::LParen => f.write_str("("),
            Tok::RParen => f.write_str(")"),
            Tok::S => f.write_str("S"),
            Tok::P => f.write_str("P"),
            Tok::Ident(s) => f.write_str(s),
        }
    }
}

fn lex(text: &str, allow_vars: bool) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((off, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0' => {
                let mut ones = 0;
                while chars.next_if(|&(_, c)| c == '1').is_some() {
                    ones += 1;
                }
                if ones == 0 {
                    Tok::Zero
                } else {
                    Tok::Digits(ones)
                }
            }
            '1' => Tok::One,
            '+' => Tok::Plus,
            '-' | '−' => Tok::Dash,
            '*' | '·' => Tok::Star,
            '\'' | '′' => Tok::Quote,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'S' => Tok::S,
            'P' => Tok::P,
            c if c.is_ascii_lowercase() => {
                let mut name = String::from(c);
                while let Some((_, c)) =
                    chars.next_if(|&(_, c)| c.is_ascii_alphanumeric() || c == '_')
                {
                    name.push(c);
                }
                if !allow_vars {
                    return Err(ParseError {
                        offset: off,
                        kind: ParseErrorKind::VariableInTerm(name),
                    });
                }
                Tok::Ident(name)
            }
            c => {
                return Err(ParseError {
                    offset: off,
                    kind: ParseErrorKind::UnexpectedChar(c),
                })
            }
        };
        out.push((tok, off));
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Tok, usize)>,
    at: usize,
    sig: &'a Signature,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<(&Tok, usize)> {
        self.tokens.get(self.at).map(|(t, o)| (t, *o))
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.tokens.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn node(&self, sym: Symbol, offset: usize, children: Vec<Tree>) -> Result<Tree, ParseError> {
        if !self.sig.contains(sym) {
            return Err(ParseError {
                offset,
                kind: ParseErrorKind::SignatureViolation {
                    symbol: sym,
                    signature: self.sig.to_string(),
                },
            });
        }
        Ok(Tree::App(sym, children))
    }

    fn sum(&mut self) -> Result<Tree, ParseError> {
        let mut left = self.prod()?;
        loop {
            let sym = match self.peek() {
                Some((Tok::Plus, _)) => Symbol::Plus,
                Some((Tok::Dash, _)) => Symbol::Minus,
                _ => return Ok(left),
            };
            let (_, off) = self.bump().expect("peeked");
            let right = self.prod()?;
            left = self.node(sym, off, vec![left, right])?;
        }
    }

    fn prod(&mut self) -> Result<Tree, ParseError> {
        let mut left = self.prefix()?;
        while let Some((Tok::Star, off)) = self.peek() {
            self.bump();
            let right = self.prefix()?;
            left = self.node(Symbol::Times, off, vec![left, right])?;
        }
        Ok(left)
    }

    fn prefix(&mut self) -> Result<Tree, ParseError> {
        if let Some((Tok::Dash, off)) = self.peek() {
            self.bump();
            let inner = self.prefix()?;
            return self.node(Symbol::Neg, off, vec![inner]);
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Tree, ParseError> {
        let mut t = self.atom()?;
        while let Some((Tok::Quote, off)) = self.peek() {
            self.bump();
            t = self.node(Symbol::Append, off, vec![t])?;
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Tree, ParseError> {
        const EXPECTED: &str = "a term";
        let Some((tok, off)) = self.bump() else {
            return Err(ParseError {
                offset: self.end,
                kind: ParseErrorKind::UnexpectedEnd { expected: EXPECTED },
            });
        };
        match tok {
            Tok::Zero => self.node(Symbol::Zero, off, vec![]),
            Tok::One => self.node(Symbol::One, off, vec![]),
            Tok::Digits(n) => {
                if !self.sig.contains(Symbol::Append) {
                    return Err(ParseError {
                        offset: off,
                        kind: ParseErrorKind::DigitsWithoutAppend,
                    });
                }
                let mut t = self.node(Symbol::Zero, off, vec![])?;
                for _ in 0..n {
                    t = Tree::App(Symbol::Append, vec![t]);
                }
                Ok(t)
            }
            Tok::S | Tok::P => {
                let sym = if tok == Tok::S { Symbol::Succ } else { Symbol::Pred };
                self.expect(Tok::LParen, "`(`")?;
                let inner = self.sum()?;
                self.expect(Tok::RParen, "`)`")?;
                self.node(sym, off, vec![inner])
            }
            Tok::LParen => {
                let inner = self.sum()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::Ident(name) => Ok(Tree::Var(name)),
            other => Err(ParseError {
                offset: off,
                kind: ParseErrorKind::UnexpectedToken {
                    found: other.to_string(),
                    expected: EXPECTED,
                },
            }),
        }
    }

    fn expect(&mut self, want: Tok, expected: &'static str) -> Result<(), ParseError> {
        match self.bump() {
            Some((t, _)) if t == want => Ok(()),
            Some((t, off)) => Err(ParseError {
                offset: off,
                kind: ParseErrorKind::UnexpectedToken {
                    found: t.to_string(),
                    expected,
                },
            }),
            None => Err(ParseError {
                offset: self.end,
                kind: ParseErrorKind::UnexpectedEnd { expected },
            }),
        }
    }
}
