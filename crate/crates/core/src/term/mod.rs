//! Ground terms over the arithmetic signatures, with positions, a parser and
//! a printer.

mod parse;
mod position;
mod render;
mod signature;

use std::fmt;
use std::sync::Arc;

pub use parse::{parse_term, ParseError, ParseErrorKind};
pub(crate) use parse::{parse_tree, Tree};
pub use position::{Position, PositionError};
pub use render::{render_term, Style};
pub(crate) use render::{render_shape, Shape, Shaped};
pub use signature::{Signature, SignatureId};

/// A function symbol of the combined signature.
///
/// The declaration order doubles as the lexicographic order used when
/// enumerating terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Symbol {
    Zero,
    One,
    Neg,
    Append,
    Succ,
    Pred,
    Plus,
    Times,
    Minus,
}

impl Symbol {
    pub const ALL: [Symbol; 9] = [
        Symbol::Zero,
        Symbol::One,
        Symbol::Neg,
        Symbol::Append,
        Symbol::Succ,
        Symbol::Pred,
        Symbol::Plus,
        Symbol::Times,
        Symbol::Minus,
    ];

    pub fn arity(self) -> usize {
        match self {
            Symbol::Zero | Symbol::One => 0,
            Symbol::Neg | Symbol::Append | Symbol::Succ | Symbol::Pred => 1,
            Symbol::Plus | Symbol::Times | Symbol::Minus => 2,
        }
    }

    /// Concrete syntax of the symbol, as used in diagnostics.
    pub fn name(self) -> &'static str {
        match self {
            Symbol::Zero => "0",
            Symbol::One => "1",
            Symbol::Neg => "-x",
            Symbol::Append => "x'",
            Symbol::Succ => "S",
            Symbol::Pred => "P",
            Symbol::Plus => "+",
            Symbol::Times => "*",
            Symbol::Minus => "x-y",
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite ground term.
///
/// Children are reference counted, so cloning a term and rebuilding the
/// spine above a rewritten position share every untouched subtree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Zero,
    One,
    Neg(Arc<Term>),
    Append(Arc<Term>),
    Succ(Arc<Term>),
    Pred(Arc<Term>),
    Plus(Arc<Term>, Arc<Term>),
    Times(Arc<Term>, Arc<Term>),
    Minus(Arc<Term>, Arc<Term>),
}

impl Term {
    #[allow(clippy::should_implement_trait)]
    pub fn neg(t: Term) -> Term {
        Term::Neg(Arc::new(t))
    }

    pub fn append(t: Term) -> Term {
        Term::Append(Arc::new(t))
    }

    pub fn succ(t: Term) -> Term {
        Term::Succ(Arc::new(t))
    }

    pub fn pred(t: Term) -> Term {
        Term::Pred(Arc::new(t))
    }

    pub fn plus(l: Term, r: Term) -> Term {
        Term::Plus(Arc::new(l), Arc::new(r))
    }

    pub fn times(l: Term, r: Term) -> Term {
        Term::Times(Arc::new(l), Arc::new(r))
    }

    pub fn minus(l: Term, r: Term) -> Term {
        Term::Minus(Arc::new(l), Arc::new(r))
    }

    /// Builds a node from its head symbol and children.
    ///
    /// Returns `None` when the number of children does not match the arity.
    pub fn from_parts(sym: Symbol, mut children: Vec<Term>) -> Option<Term> {
        if children.len() != sym.arity() {
            return None;
        }
        let r = children.pop();
        let l = children.pop();
        Some(match sym {
            Symbol::Zero => Term::Zero,
            Symbol::One => Term::One,
            Symbol::Neg => Term::neg(r?),
            Symbol::Append => Term::append(r?),
            Symbol::Succ => Term::succ(r?),
            Symbol::Pred => Term::pred(r?),
            Symbol::Plus => Term::plus(l?, r?),
            Symbol::Times => Term::times(l?, r?),
            Symbol::Minus => Term::minus(l?, r?),
        })
    }

    pub fn symbol(&self) -> Symbol {
        match self {
            Term::Zero => Symbol::Zero,
            Term::One => Symbol::One,
            Term::Neg(_) => Symbol::Neg,
            Term::Append(_) => Symbol::Append,
            Term::Succ(_) => Symbol::Succ,
            Term::Pred(_) => Symbol::Pred,
            Term::Plus(..) => Symbol::Plus,
            Term::Times(..) => Symbol::Times,
            Term::Minus(..) => Symbol::Minus,
        }
    }

    pub fn arity(&self) -> usize {
        self.symbol().arity()
    }

    /// The `i`-th child, counting from 1.
    pub fn child(&self, i: usize) -> Option<&Term> {
        match (self, i) {
            (Term::Neg(c) | Term::Append(c) | Term::Succ(c) | Term::Pred(c), 1) => Some(c),
            (Term::Plus(l, _) | Term::Times(l, _) | Term::Minus(l, _), 1) => Some(l),
            (Term::Plus(_, r) | Term::Times(_, r) | Term::Minus(_, r), 2) => Some(r),
            _ => None,
        }
    }

    pub fn children(&self) -> impl Iterator<Item = &Term> + '_ {
        (1..=self.arity()).filter_map(move |i| self.child(i))
    }

    /// Copy of `self` with the `i`-th child (1-based) replaced.
    pub(crate) fn with_child(&self, i: usize, new: Term) -> Option<Term> {
        let new = Arc::new(new);
        Some(match (self, i) {
            (Term::Neg(_), 1) => Term::Neg(new),
            (Term::Append(_), 1) => Term::Append(new),
            (Term::Succ(_), 1) => Term::Succ(new),
            (Term::Pred(_), 1) => Term::Pred(new),
            (Term::Plus(_, r), 1) => Term::Plus(new, r.clone()),
            (Term::Plus(l, _), 2) => Term::Plus(l.clone(), new),
            (Term::Times(_, r), 1) => Term::Times(new, r.clone()),
            (Term::Times(l, _), 2) => Term::Times(l.clone(), new),
            (Term::Minus(_, r), 1) => Term::Minus(new, r.clone()),
            (Term::Minus(l, _), 2) => Term::Minus(l.clone(), new),
            _ => return None,
        })
    }

    /// Node count.
    pub fn size(&self) -> usize {
        1 + self.children().map(Term::size).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children().map(Term::depth).max().unwrap_or(0)
    }

    /// Largest number of `*` nodes on any root-to-leaf path.
    pub fn product_depth(&self) -> usize {
        let below = self.children().map(Term::product_depth).max().unwrap_or(0);
        below + usize::from(matches!(self, Term::Times(..)))
    }

    /// The first symbol (in pre-order) that is not part of `sig`.
    pub fn foreign_symbol(&self, sig: &Signature) -> Option<Symbol> {
        if !sig.contains(self.symbol()) {
            return Some(self.symbol());
        }
        self.children().find_map(|c| c.foreign_symbol(sig))
    }

    pub fn is_valid_for(&self, sig: &Signature) -> bool {
        self.foreign_symbol(sig).is_none()
    }

    /// Every position of the term in pre-order, root first.
    pub fn positions(&self) -> Vec<Position> {
        let mut out = Vec::with_capacity(self.size());
        let mut path = Vec::new();
        collect_positions(self, &mut path, &mut out);
        out
    }

    pub fn subterm_at(&self, p: &Position) -> Result<&Term, PositionError> {
        let mut cur = self;
        for (depth, &i) in p.indices().iter().enumerate() {
            cur = cur
                .child(i)
                .ok_or_else(|| PositionError::new(p.clone(), depth))?;
        }
        Ok(cur)
    }

    pub fn graft_at(&self, p: &Position, r: Term) -> Result<Term, PositionError> {
        graft(self, p.indices(), r).ok_or_else(|| {
            let valid = (0..p.len())
                .take_while(|&d| self.subterm_at(&p.prefix(d + 1)).is_ok())
                .count();
            PositionError::new(p.clone(), valid)
        })
    }
}

fn graft(t: &Term, path: &[usize], r: Term) -> Option<Term> {
    match path.split_first() {
        None => Some(r),
        Some((&i, rest)) => {
            let child = t.child(i)?;
            let new = graft(child, rest, r)?;
            t.with_child(i, new)
        }
    }
}

fn collect_positions(t: &Term, path: &mut Vec<usize>, out: &mut Vec<Position>) {
    out.push(Position::from_indices(path.clone()));
    for i in 1..=t.arity() {
        path.push(i);
        collect_positions(t.child(i).expect("index within arity"), path, out);
        path.pop();
    }
}

/// Free function form of [`Term::subterm_at`].
pub fn subterm_at<'t>(t: &'t Term, p: &Position) -> Result<&'t Term, PositionError> {
    t.subterm_at(p)
}

/// Free function form of [`Term::graft_at`].
pub fn graft_at(t: &Term, p: &Position, r: Term) -> Result<Term, PositionError> {
    t.graft_at(p, r)
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_term(self, Style::Minimal))
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_term(self, Style::Full))
    }
}

impl Shaped for Term {
    fn shape(&self) -> Shape<'_, Self> {
        Shape::App(self.symbol(), self.children().collect())
    }
}
