use std::fmt;
use std::str::FromStr;

/// A path from the root: 1-based child indices, rendered `e` for the root
/// and `1.2` otherwise.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position(Vec<usize>);

impl Position {
    pub fn root() -> Position {
        Position(Vec::new())
    }

    pub fn from_indices(indices: Vec<usize>) -> Position {
        Position(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    /// Depth below the root.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Same as [`Position::is_root`].
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, i: usize) -> Position {
        let mut v = self.0.clone();
        v.push(i);
        Position(v)
    }

    /// The first `n` steps of the path.
    pub fn prefix(&self, n: usize) -> Position {
        Position(self.0[..n.min(self.0.len())].to_vec())
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(".")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Position {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "e" || s == "ε" {
            return Ok(Position::root());
        }
        s.split('.')
            .map(|part| match part.parse::<usize>() {
                Ok(i) if i >= 1 => Ok(i),
                _ => Err(format!("bad position `{s}`: expected `e` or dotted 1-based indices")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Position)
    }
}

impl serde::Serialize for Position {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("position {position} is not valid for the term (only its first {valid} step(s) exist)")]
pub struct PositionError {
    position: Position,
    valid: usize,
}

impl PositionError {
    pub(crate) fn new(position: Position, valid: usize) -> PositionError {
        PositionError { position, valid }
    }

    pub fn position(&self) -> &Position {
        &self.position
    }

    /// Length of the longest prefix of the position that exists in the term.
    pub fn valid_prefix(&self) -> usize {
        self.valid
    }
}
