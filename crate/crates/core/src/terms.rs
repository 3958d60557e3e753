//! Signatures, term trees, identities and the concrete term grammar.
//!
//! The grammar is
//!
//! ```text
//! term     := IDENT | IDENT "(" term ("," term)* ")"
//! IDENT    := [A-Za-z_][A-Za-z0-9_']*
//! identity := term "=" term
//! ```
//!
//! An identifier declared in the signature is an operation symbol (nullary
//! symbols are written without parentheses); every other identifier is a
//! variable.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Returns true if `name` matches `[A-Za-z_][A-Za-z0-9_']*`.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("invalid operation symbol name {0:?}")]
    InvalidName(String),
    #[error("operation symbol {0:?} declared twice")]
    Duplicate(String),
}

/// Operation symbols with their arities, kept in name order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Signature {
    ops: BTreeMap<String, usize>,
}

impl Signature {
    pub fn new<I, S>(ops: I) -> Result<Self, SignatureError>
    where
        I: IntoIterator<Item = (S, usize)>,
        S: Into<String>,
    {
        let mut map = BTreeMap::new();
        for (name, arity) in ops {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(SignatureError::InvalidName(name));
            }
            if map.insert(name.clone(), arity).is_some() {
                return Err(SignatureError::Duplicate(name));
            }
        }
        Ok(Signature { ops: map })
    }

    /// The Boolean-algebra signature `{and:2, or:2, not:1, zero:0, one:0}`.
    pub fn boolean() -> Self {
        Signature::new([("and", 2), ("or", 2), ("not", 1), ("zero", 0), ("one", 0)])
            .expect("static signature")
    }

    pub fn arity(&self, symbol: &str) -> Option<usize> {
        self.ops.get(symbol).copied()
    }

    pub fn contains(&self, symbol: &str) -> bool {
        self.ops.contains_key(symbol)
    }

    /// Symbols with arities in name order.
    pub fn ops(&self) -> impl Iterator<Item = (&str, usize)> + '_ {
        self.ops.iter().map(|(k, &v)| (k.as_str(), v))
    }

    /// Position of `symbol` in name order.
    pub fn position(&self, symbol: &str) -> Option<usize> {
        self.ops.keys().position(|k| k == symbol)
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn has_constants(&self) -> bool {
        self.ops.values().any(|&a| a == 0)
    }

    pub fn has_non_constant(&self) -> bool {
        self.ops.values().any(|&a| a >= 1)
    }
}

/// A term tree: a variable or an operation symbol applied to subterms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(name: &str) -> Self {
        Term::Var(name.to_string())
    }

    pub fn app(symbol: &str, args: Vec<Term>) -> Self {
        Term::App(symbol.to_string(), args)
    }

    pub fn constant(symbol: &str) -> Self {
        Term::App(symbol.to_string(), Vec::new())
    }

    /// Variables have depth 0; an application is one deeper than its deepest
    /// argument, so constants have depth 1.
    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::App(_, args) => 1 + args.iter().map(Term::depth).max().unwrap_or(0),
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    pub fn contains_var(&self, name: &str) -> bool {
        match self {
            Term::Var(v) => v == name,
            Term::App(_, args) => args.iter().any(|a| a.contains_var(name)),
        }
    }

    /// Checks that every application matches `sig` and that no variable
    /// shadows a symbol.
    pub fn check(&self, sig: &Signature) -> Result<(), ParseError> {
        match self {
            Term::Var(v) => {
                if sig.contains(v) {
                    Err(ParseError::Arity {
                        symbol: v.clone(),
                        expected: sig.arity(v).unwrap_or(0),
                        found: 0,
                    })
                } else {
                    Ok(())
                }
            }
            Term::App(s, args) => {
                let expected = sig.arity(s).ok_or_else(|| ParseError::UnknownSymbol(s.clone()))?;
                if expected != args.len() {
                    return Err(ParseError::Arity {
                        symbol: s.clone(),
                        expected,
                        found: args.len(),
                    });
                }
                args.iter().try_for_each(|a| a.check(sig))
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::App(s, args) if args.is_empty() => f.write_str(s),
            Term::App(s, args) => {
                write!(f, "{s}(")?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// An equation `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Identity { lhs, rhs }
    }

    /// Variables of both sides, sorted by name.
    pub fn variables(&self) -> Vec<String> {
        let mut vars = self.lhs.variables();
        vars.extend(self.rhs.variables());
        vars.into_iter().collect()
    }

    /// Regular identities have the same variables on both sides.
    pub fn is_regular(&self) -> bool {
        self.lhs.variables() == self.rhs.variables()
    }

    pub fn flipped(&self) -> Identity {
        Identity::new(self.rhs.clone(), self.lhs.clone())
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

pub fn variables(t: &Term) -> BTreeSet<String> {
    t.variables()
}

pub fn is_regular(id: &Identity) -> bool {
    id.is_regular()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("symbol {symbol:?} expects {expected} argument(s), found {found}")]
    Arity {
        symbol: String,
        expected: usize,
        found: usize,
    },
    #[error("unknown operation symbol {0:?}")]
    UnknownSymbol(String),
    #[error("constant {symbol:?} is written without parentheses, found {found} argument(s)")]
    ConstantApplied { symbol: String, found: usize },
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    sig: &'a Signature,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let mut len = 0;
        for (k, c) in rest.char_indices() {
            let ok = if k == 0 {
                c.is_ascii_alphabetic() || c == '_'
            } else {
                c.is_ascii_alphanumeric() || c == '_' || c == '\''
            };
            if !ok {
                break;
            }
            len = k + c.len_utf8();
        }
        if len == 0 {
            return match rest.chars().next() {
                Some(c) => self.syntax(format!("expected identifier, found {c:?}")),
                None => self.syntax("expected identifier, found end of input"),
            };
        }
        self.pos += len;
        Ok(rest[..len].to_string())
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let name = self.ident()?;
        let open = self.peek() == Some('(');
        match self.sig.arity(&name) {
            None if open => Err(ParseError::UnknownSymbol(name)),
            None => Ok(Term::Var(name)),
            Some(0) if open => {
                let found = self.args()?.len();
                Err(ParseError::ConstantApplied { symbol: name, found })
            }
            Some(0) => Ok(Term::App(name, Vec::new())),
            Some(expected) if !open => Err(ParseError::Arity {
                symbol: name,
                expected,
                found: 0,
            }),
            Some(expected) => {
                let args = self.args()?;
                if args.len() != expected {
                    return Err(ParseError::Arity {
                        symbol: name,
                        expected,
                        found: args.len(),
                    });
                }
                Ok(Term::App(name, args))
            }
        }
    }

    /// Parses `"(" term ("," term)* ")"`. An empty list is accepted here so
    /// that `c()` gets its own error.
    fn args(&mut self) -> Result<Vec<Term>, ParseError> {
        self.pos += 1; // '('
        if self.peek() == Some(')') {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut args = vec![self.term()?];
        loop {
            match self.peek() {
                Some(',') => {
                    self.pos += 1;
                    args.push(self.term()?);
                }
                Some(')') => {
                    self.pos += 1;
                    return Ok(args);
                }
                Some(c) => return self.syntax(format!("expected ',' or ')', found {c:?}")),
                None => return self.syntax("unclosed '('"),
            }
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.syntax(format!("unexpected trailing {c:?}")),
        }
    }
}

/// Parses a term over `sig`; identifiers not declared in `sig` are variables.
pub fn parse_term(text: &str, sig: &Signature) -> Result<Term, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let mut p = Parser {
        src: text,
        pos: 0,
        sig,
    };
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// Parses `term = term`.
pub fn parse_identity(text: &str, sig: &Signature) -> Result<Identity, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let mut p = Parser {
        src: text,
        pos: 0,
        sig,
    };
    let lhs = p.term()?;
    match p.peek() {
        Some('=') => p.pos += 1,
        Some(c) => return p.syntax(format!("expected '=', found {c:?}")),
        None => return p.syntax("expected '=', found end of input"),
    }
    let rhs = p.term()?;
    p.finish()?;
    Ok(Identity::new(lhs, rhs))
}

/// All terms over `sig` and `vars` of depth at most `max_depth`, ordered by
/// depth, then symbol name, then children (compared by their position in
/// this same order). Variables keep the order given in `vars`.
pub fn enumerate_terms(sig: &Signature, vars: &[&str], max_depth: usize) -> Vec<Term> {
    let mut out: Vec<Term> = vars.iter().map(|v| Term::var(v)).collect();
    // out[prev_start..below] holds exactly the terms of depth `depth - 1`
    let mut prev_start = 0;
    let mut below = out.len();
    for depth in 1..=max_depth {
        let mut level = Vec::new();
        for (symbol, arity) in sig.ops() {
            if arity == 0 {
                if depth == 1 {
                    level.push(Term::constant(symbol));
                }
                continue;
            }
            for_each_tuple(below, arity, |idx| {
                if idx.iter().any(|&k| k >= prev_start) {
                    let args = idx.iter().map(|&k| out[k].clone()).collect();
                    level.push(Term::App(symbol.to_string(), args));
                }
            });
        }
        out.extend(level);
        prev_start = below;
        below = out.len();
    }
    out
}

/// Calls `f` on every tuple in `[0, n)^k` in lexicographic order.
pub(crate) fn for_each_tuple(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k == 0 {
        f(&[]);
        return;
    }
    if n == 0 {
        return;
    }
    let mut idx = vec![0usize; k];
    loop {
        f(&idx);
        let mut pos = k;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
        }
    }
}
