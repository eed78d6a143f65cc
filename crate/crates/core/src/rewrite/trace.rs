//! Reduction traces and their JSON-lines form.
//!
//! A trace file holds a header `{"initial": …, "system": …}`, one line per
//! step `{"step": k, "rule": …, "pos": …, "from": …, "to": …}` and a footer
//! `{"final": …, "steps": k}`. Terms are written in minimal style.

use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::catalog::{get_system, System};
use crate::term::{parse_term, render_term, Position, Style, Term};

use super::rewrite_at;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    pub rule_id: String,
    pub position: Position,
    pub before: Term,
    pub after: Term,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub system: String,
    pub initial: Term,
    pub steps: Vec<StepRecord>,
    pub final_term: Term,
}

#[derive(Serialize, Deserialize)]
struct Header {
    initial: String,
    system: String,
}

#[derive(Serialize, Deserialize)]
struct StepLine {
    step: usize,
    rule: String,
    pos: String,
    from: String,
    to: String,
}

#[derive(Serialize, Deserialize)]
struct Footer {
    #[serde(rename = "final")]
    final_term: String,
    steps: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum ReplayError {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {message}")]
    Mismatch { line: usize, message: String },
}

fn show(t: &Term) -> String {
    render_term(t, Style::Minimal)
}

impl Trace {
    /// Checks that consecutive steps chain and end at `final_term`.
    pub fn is_chained(&self) -> bool {
        let mut cur = &self.initial;
        for s in &self.steps {
            if &s.before != cur {
                return false;
            }
            cur = &s.after;
        }
        cur == &self.final_term
    }

    pub fn write_jsonl<W: Write>(&self, mut w: W) -> io::Result<()> {
        line(
            &mut w,
            &Header {
                initial: show(&self.initial),
                system: self.system.clone(),
            },
        )?;
        for (k, s) in self.steps.iter().enumerate() {
            line(
                &mut w,
                &StepLine {
                    step: k + 1,
                    rule: s.rule_id.clone(),
                    pos: s.position.to_string(),
                    from: show(&s.before),
                    to: show(&s.after),
                },
            )?;
        }
        line(
            &mut w,
            &Footer {
                final_term: show(&self.final_term),
                steps: self.steps.len(),
            },
        )
    }

    pub fn to_jsonl(&self) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("JSON is UTF-8")
    }

    /// Re-executes a trace file with `rewrite_at`, checking every recorded
    /// term along the way. Returns the rebuilt trace.
    pub fn replay<R: BufRead>(r: R) -> Result<Trace, ReplayError> {
        let mut lines = Vec::new();
        for (i, l) in r.lines().enumerate() {
            let l = l?;
            if !l.trim().is_empty() {
                lines.push((i + 1, l));
            }
        }
        let malformed = |line: usize, message: String| ReplayError::Malformed { line, message };
        let mismatch = |line: usize, message: String| ReplayError::Mismatch { line, message };

        let Some(((hl, header), rest)) = lines.split_first() else {
            return Err(malformed(1, "empty trace".into()));
        };
        let header: Header =
            serde_json::from_str(header).map_err(|e| malformed(*hl, format!("bad header: {e}")))?;
        let sys: &System = get_system(&header.system).map_err(|e| malformed(*hl, e.to_string()))?;
        let parse = |line: usize, text: &str| {
            parse_term(text, sys.signature()).map_err(|e| malformed(line, format!("`{text}`: {e}")))
        };
        let initial = parse(*hl, &header.initial)?;

        let Some(((fl, footer), step_lines)) = rest.split_last() else {
            return Err(malformed(*hl, "missing footer".into()));
        };
        let mut steps = Vec::new();
        let mut cur = initial.clone();
        for (line, text) in step_lines {
            let s: StepLine =
                serde_json::from_str(text).map_err(|e| malformed(*line, format!("bad step: {e}")))?;
            if s.step != steps.len() + 1 {
                return Err(mismatch(*line, format!("expected step {}, found {}", steps.len() + 1, s.step)));
            }
            if parse(*line, &s.from)? != cur {
                return Err(mismatch(*line, format!("`from` is {} but the replay is at {}", s.from, show(&cur))));
            }
            let pos: Position = s.pos.parse().map_err(|e| malformed(*line, e))?;
            let next = rewrite_at(sys, &cur, &pos, &s.rule).map_err(|e| mismatch(*line, e.to_string()))?;
            if parse(*line, &s.to)? != next {
                return Err(mismatch(*line, format!("`to` is {} but {} at {} gives {}", s.to, s.rule, s.pos, show(&next))));
            }
            steps.push(StepRecord {
                rule_id: s.rule,
                position: pos,
                before: cur,
                after: next.clone(),
            });
            cur = next;
        }
        let footer: Footer =
            serde_json::from_str(footer).map_err(|e| malformed(*fl, format!("bad footer: {e}")))?;
        if footer.steps != steps.len() {
            return Err(mismatch(*fl, format!("footer counts {} steps, found {}", footer.steps, steps.len())));
        }
        if parse(*fl, &footer.final_term)? != cur {
            return Err(mismatch(*fl, format!("`final` is {} but the replay ends at {}", footer.final_term, show(&cur))));
        }
        Ok(Trace {
            system: sys.id().to_string(),
            initial,
            steps,
            final_term: cur,
        })
    }
}

fn line<W: Write, T: Serialize>(w: &mut W, v: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *w, v)?;
    w.write_all(b"\n")
}
