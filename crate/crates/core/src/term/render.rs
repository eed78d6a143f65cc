use std::fmt;
use std::str::FromStr;

use super::{Symbol, Term};

/// Output style for terms and patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Style {
    /// Every compound node parenthesized.
    Full,
    /// Grammar precedence; negated operands of infix operators keep their
    /// parentheses, as in `(-011)+01`.
    #[default]
    Minimal,
    /// Minimal, with unary numerals written as digit strings (`011`).
    Compact,
}

impl FromStr for Style {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full" => Ok(Style::Full),
            "minimal" => Ok(Style::Minimal),
            "compact" => Ok(Style::Compact),
            _ => Err(format!("unknown style `{s}` (expected full, minimal or compact)")),
        }
    }
}

impl fmt::Display for Style {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Style::Full => "full",
            Style::Minimal => "minimal",
            Style::Compact => "compact",
        })
    }
}

/// Read-only view of a node, shared by terms and rule patterns.
pub(crate) enum Shape<'a, T: ?Sized> {
    Var(&'a str),
    App(Symbol, Vec<&'a T>),
}

pub(crate) trait Shaped {
    fn shape(&self) -> Shape<'_, Self>;
}

pub fn render_term(t: &Term, style: Style) -> String {
    render_shape(t, style)
}

pub(crate) fn render_shape<T: Shaped>(t: &T, style: Style) -> String {
    match style {
        Style::Full => full(t),
        Style::Minimal => minimal(t, false).0,
        Style::Compact => minimal(t, true).0,
    }
}

const SUM: u8 = 1;
const PROD: u8 = 2;
const PREFIX: u8 = 3;
const POSTFIX: u8 = 4;
const ATOM: u8 = 5;

fn full<T: Shaped>(t: &T) -> String {
    match t.shape() {
        Shape::Var(v) => v.to_string(),
        Shape::App(sym, c) => match sym {
            Symbol::Zero => "0".into(),
            Symbol::One => "1".into(),
            Symbol::Neg => format!("(-{})", full(c[0])),
            Symbol::Append => format!("{}'", full(c[0])),
            Symbol::Succ => format!("S({})", full(c[0])),
            Symbol::Pred => format!("P({})", full(c[0])),
            Symbol::Plus => format!("({}+{})", full(c[0]), full(c[1])),
            Symbol::Times => format!("({}*{})", full(c[0]), full(c[1])),
            Symbol::Minus => format!("({}-{})", full(c[0]), full(c[1])),
        },
    }
}

/// Number of appends above a `0`, if the node is a unary numeral `0'…'`.
fn numeral<T: Shaped>(t: &T) -> Option<usize> {
    let mut n = 0;
    let mut cur = t;
    loop {
        match cur.shape() {
            Shape::App(Symbol::Zero, _) => return Some(n),
            Shape::App(Symbol::Append, c) => {
                n += 1;
                cur = c[0];
            }
            _ => return None,
        }
    }
}

fn minimal<T: Shaped>(t: &T, compact: bool) -> (String, u8) {
    if compact {
        if let Some(n) = numeral(t).filter(|&n| n > 0) {
            return (format!("0{}", "1".repeat(n)), ATOM);
        }
    }
    // Operand that must bind at least as tightly as `min`; negations inside
    // infix operands are always bracketed.
    let operand = |c: &T, min: u8, bracket_neg: bool| {
        let (s, lvl) = minimal(c, compact);
        if lvl < min || (bracket_neg && lvl == PREFIX) {
            format!("({s})")
        } else {
            s
        }
    };
    match t.shape() {
        Shape::Var(v) => (v.to_string(), ATOM),
        Shape::App(sym, c) => match sym {
            Symbol::Zero => ("0".into(), ATOM),
            Symbol::One => ("1".into(), ATOM),
            Symbol::Succ => (format!("S({})", minimal(c[0], compact).0), ATOM),
            Symbol::Pred => (format!("P({})", minimal(c[0], compact).0), ATOM),
            Symbol::Append => (format!("{}'", operand(c[0], POSTFIX, false)), POSTFIX),
            Symbol::Neg => (format!("-{}", operand(c[0], POSTFIX, false)), PREFIX),
            Symbol::Plus | Symbol::Minus => {
                let op = if sym == Symbol::Plus { '+' } else { '-' };
                let l = operand(c[0], SUM, true);
                let r = operand(c[1], PROD, true);
                (format!("{l}{op}{r}"), SUM)
            }
            Symbol::Times => {
                let l = operand(c[0], PROD, true);
                let r = operand(c[1], POSTFIX, true);
                (format!("{l}*{r}"), PROD)
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::{parse_term, Signature};

    #[test]
    fn spec_examples() {
        let t = Term::plus(Term::plus(Term::One, Term::One), Term::One);
        assert_eq!(render_term(&t, Style::Full), "((1+1)+1)");
        let two = Term::append(Term::append(Term::Zero));
        assert_eq!(render_term(&two, Style::Compact), "011");
        let m1 = Term::neg(Term::append(Term::Zero));
        assert_eq!(render_term(&m1, Style::Compact), "-01");
    }

    #[test]
    fn minimal_uses_conventional_layout() {
        let sig = Signature::RING_EXT;
        for text in [
            "(-(1+1))+1",
            "0+(-(1+1))",
            "-((-0)+(1+1))",
            "1+(1+1)",
            "(1+1)*(1+1)",
            "1*(1*1)",
            "-(-1)",
            "0-(-1)",
            "0-1-1",
            "0-(1-1)",
            "P(0+1)*1",
        ] {
            let t = parse_term(text, &sig).unwrap();
            assert_eq!(render_term(&t, Style::Minimal), text);
        }
    }

    #[test]
    fn compact_only_abbreviates_numerals() {
        let sig = Signature::UNARY;
        let t = parse_term("((-011)')+0", &sig).unwrap();
        assert_eq!(render_term(&t, Style::Compact), "(-011)'+0");
        assert_eq!(render_term(&t, Style::Minimal), "(-0'')'+0");
        assert_eq!(render_term(&Term::Zero, Style::Compact), "0");
        let u = parse_term("(0+0)'", &sig).unwrap();
        assert_eq!(render_term(&u, Style::Compact), "(0+0)'");
    }

    #[test]
    fn full_style_round_trips() {
        let sig = Signature::SUCCESSOR_EXT;
        let t = parse_term("S(-S(0))-P(0)*0", &sig).unwrap();
        let s = render_term(&t, Style::Full);
        assert_eq!(s, "(S((-S(0)))-(P(0)*0))");
        assert_eq!(parse_term(&s, &sig).unwrap(), t);
    }
}
