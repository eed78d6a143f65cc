use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::term::{parse_tree, render_shape, Shape, Shaped, Signature, Style, Symbol, Term, Tree};

/// A term with variables, used on both sides of a rule.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Pattern {
    Var(String),
    App(Symbol, Vec<Pattern>),
}

/// Variable assignment produced by matching.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Binding(BTreeMap<String, Term>);

impl Binding {
    pub fn new() -> Binding {
        Binding::default()
    }

    pub fn get(&self, var: &str) -> Option<&Term> {
        self.0.get(var)
    }

    pub fn insert(&mut self, var: impl Into<String>, t: Term) {
        self.0.insert(var.into(), t);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Term)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (var, t)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{var} := {t}")?;
        }
        f.write_str("}")
    }
}

impl Pattern {
    pub fn parse(text: &str, sig: &Signature) -> Result<Pattern> {
        Ok(Pattern::from_tree(parse_tree(text, sig, true)?))
    }

    fn from_tree(tree: Tree) -> Pattern {
        match tree {
            Tree::Var(v) => Pattern::Var(v),
            Tree::App(sym, c) => Pattern::App(sym, c.into_iter().map(Pattern::from_tree).collect()),
        }
    }

    /// Variables in order of first occurrence, with repetitions.
    pub fn var_occurrences(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.walk_vars(&mut out);
        out
    }

    fn walk_vars<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Pattern::Var(v) => out.push(v),
            Pattern::App(_, c) => c.iter().for_each(|p| p.walk_vars(out)),
        }
    }

    pub fn vars(&self) -> BTreeSet<&str> {
        self.var_occurrences().into_iter().collect()
    }

    pub fn is_linear(&self) -> bool {
        let occ = self.var_occurrences();
        occ.len() == occ.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        let mut out = BTreeSet::new();
        self.walk_symbols(&mut out);
        out
    }

    fn walk_symbols(&self, out: &mut BTreeSet<Symbol>) {
        if let Pattern::App(sym, c) = self {
            out.insert(*sym);
            c.iter().for_each(|p| p.walk_symbols(out));
        }
    }

    /// Replaces every occurrence of one symbol by another of the same arity.
    pub fn rename_symbol(&self, from: Symbol, to: Symbol) -> Pattern {
        match self {
            Pattern::Var(v) => Pattern::Var(v.clone()),
            Pattern::App(sym, c) => Pattern::App(
                if *sym == from { to } else { *sym },
                c.iter().map(|p| p.rename_symbol(from, to)).collect(),
            ),
        }
    }

    /// Applies a binding. `None` if a variable is unbound.
    pub fn instantiate(&self, b: &Binding) -> Option<Term> {
        match self {
            Pattern::Var(v) => b.get(v).cloned(),
            Pattern::App(sym, c) => {
                let children = c
                    .iter()
                    .map(|p| p.instantiate(b))
                    .collect::<Option<Vec<_>>>()?;
                Term::from_parts(*sym, children)
            }
        }
    }

    pub fn render(&self, style: Style) -> String {
        render_shape(self, style)
    }
}

impl Shaped for Pattern {
    fn shape(&self) -> Shape<'_, Self> {
        match self {
            Pattern::Var(v) => Shape::Var(v),
            Pattern::App(sym, c) => Shape::App(*sym, c.iter().collect()),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Style::Minimal))
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One-way matching of `p` against the ground term `t`.
pub fn match_pattern(p: &Pattern, t: &Term) -> Option<Binding> {
    let mut b = Binding::new();
    match_into(p, t, &mut b).then_some(b)
}

pub(crate) fn match_into(p: &Pattern, t: &Term, b: &mut Binding) -> bool {
    match p {
        Pattern::Var(v) => match b.get(v) {
            Some(bound) => bound == t,
            None => {
                b.insert(v.clone(), t.clone());
                true
            }
        },
        Pattern::App(sym, c) => {
            *sym == t.symbol()
                && c
                    .iter()
                    .enumerate()
                    .all(|(i, p)| match_into(p, t.child(i + 1).expect("same arity"), b))
        }
    }
}

/// An oriented equation `lhs -> rhs`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    id: String,
    lhs: Pattern,
    rhs: Pattern,
}

impl Rule {
    pub fn new(id: impl Into<String>, lhs: Pattern, rhs: Pattern) -> Result<Rule> {
        let id = id.into();
        let invalid = |reason: String| Error::InvalidRule {
            id: id.clone(),
            reason,
        };
        if let Pattern::Var(v) = &lhs {
            return Err(invalid(format!("left-hand side is the lone variable {v}")));
        }
        let lhs_vars = lhs.vars();
        if let Some(v) = rhs.vars().into_iter().find(|v| !lhs_vars.contains(v)) {
            return Err(invalid(format!("variable {v} occurs only on the right")));
        }
        Ok(Rule { id, lhs, rhs })
    }

    /// Parses `lhs -> rhs` over the given signature.
    pub fn parse(id: impl Into<String>, text: &str, sig: &Signature) -> Result<Rule> {
        let id = id.into();
        let (l, r) = text.split_once("->").ok_or_else(|| Error::InvalidRule {
            id: id.clone(),
            reason: "missing `->`".into(),
        })?;
        Rule::new(id, Pattern::parse(l, sig)?, Pattern::parse(r, sig)?)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn lhs(&self) -> &Pattern {
        &self.lhs
    }

    pub fn rhs(&self) -> &Pattern {
        &self.rhs
    }

    pub fn is_left_linear(&self) -> bool {
        self.lhs.is_linear()
    }

    /// Contractum of `t` when the left-hand side matches it.
    pub fn apply(&self, t: &Term) -> Option<Term> {
        let b = match_pattern(&self.lhs, t)?;
        Some(self.rhs.instantiate(&b).expect("rhs variables are bound by lhs"))
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

impl fmt::Debug for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.id, self)
    }
}
