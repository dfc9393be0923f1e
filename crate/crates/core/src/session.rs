//! Term files: sequences of `name := term;` definitions, where later
//! definitions may use earlier names.

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::arrows::{elaborate, ArrowType, Term, Theory, TheoryViolation, TypeError};
use crate::syntax::{parse_definitions, ParseError, ParseErrorKind};

#[derive(Debug, Error)]
pub enum SessionError {
    #[error("{}: {source}", file.display())]
    Parse { file: PathBuf, source: ParseError },
    #[error("{}: {source}", file.display())]
    Io { file: PathBuf, source: std::io::Error },
    #[error("{}:{line}: {name}: {source}", file.display())]
    Type { name: String, file: PathBuf, line: usize, source: TypeError },
    #[error("{}:{line}: {name}: {source}", file.display())]
    Theory { name: String, file: PathBuf, line: usize, source: TheoryViolation },
}

/// A definition after name resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Named {
    pub name: String,
    pub term: Term,
    pub file: PathBuf,
    pub line: usize,
}

/// Loaded definitions, in order, with unique names.
#[derive(Clone, Debug)]
pub struct Session {
    pub theory: Theory,
    pub definitions: Vec<Named>,
}

impl Default for Session {
    fn default() -> Session {
        Session::new(Theory::PnNeg)
    }
}

impl Session {
    pub fn new(theory: Theory) -> Session {
        Session { theory, definitions: Vec::new() }
    }

    pub fn get(&self, name: &str) -> Option<&Term> {
        self.definitions.iter().find(|d| d.name == name).map(|d| &d.term)
    }

    pub fn load_file(&mut self, path: &Path) -> Result<(), SessionError> {
        let src = std::fs::read_to_string(path)
            .map_err(|source| SessionError::Io { file: path.to_path_buf(), source })?;
        self.load_str(&src, path)
    }

    /// Adds the definitions of `src`; `origin` names it in messages.
    pub fn load_str(&mut self, src: &str, origin: &Path) -> Result<(), SessionError> {
        let parse = |source| SessionError::Parse { file: origin.to_path_buf(), source };
        for def in parse_definitions(src).map_err(parse)? {
            if self.get(&def.name).is_some() {
                return Err(parse(ParseError {
                    pos: def.pos,
                    kind: ParseErrorKind::DuplicateName(def.name),
                }));
            }
            let term = elaborate(&def.body, &|n| self.get(n).cloned()).map_err(parse)?;
            self.definitions.push(Named {
                name: def.name,
                term,
                file: origin.to_path_buf(),
                line: def.pos.line,
            });
        }
        Ok(())
    }

    /// Parses a term that may refer to loaded definitions.
    pub fn parse_term(&self, src: &str) -> Result<Term, ParseError> {
        let e = crate::syntax::parse_expr(src)?;
        elaborate(&e, &|n| self.get(n).cloned())
    }

    /// Types of all definitions, stopping at the first type or theory error.
    pub fn check(&self) -> Result<Vec<(String, ArrowType)>, SessionError> {
        self.definitions
            .iter()
            .map(|d| {
                let ty = d
                    .term
                    .type_of()
                    .map_err(|source| SessionError::Type {
                        name: d.name.clone(),
                        file: d.file.clone(),
                        line: d.line,
                        source,
                    })?;
                if let Some(source) = d.term.theory_violation(self.theory) {
                    return Err(SessionError::Theory {
                        name: d.name.clone(),
                        file: d.file.clone(),
                        line: d.line,
                        source,
                    });
                }
                Ok((d.name.clone(), ty))
            })
            .collect()
    }
}
