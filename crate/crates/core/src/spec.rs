//! Ring-spec grammar: parsing, printing and building.
//!
//! ```text
//! spec  := "Z" INT | "M" INT "(" spec ")" | "T" INT "(" spec ["," endo] ")"
//!        | "TE(" spec ")" | "DT(" spec ")" | "K(" INT ")(" spec ")"
//!        | "FM" INT "(" INT ")(" spec ")" | "prod(" spec {"," spec} ")"
//!        | "GR(" spec "," group ")" | "quotpoly(" spec "," INT ")"
//!        | "sub(" spec [";" elt {"," elt}] ")" | "cmat(" spec ";" row {";" row} ")"
//! endo  := "id" | "swap"
//! group := "C" INT {"x" "C" INT}
//! row   := cell {"," cell};  cell := "R" | "0" | INT "R"
//! elt   := element id | element literal such as "[[0,1],[1,1]]"
//! ```
//!
//! Whitespace is ignored everywhere. `T2(R)` is the full upper triangular
//! ring; `T2(R,id)` is the skew triangular ring with constant diagonal.

use std::fmt;

use thiserror::Error;

use crate::construct::{self, Cell, EndoName, FiniteGroup, GroupRing};
use crate::{Limits, Ring, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Zn(u32),
    Matrix {
        n: usize,
        base: Box<RingSpec>,
    },
    Triangular {
        n: usize,
        base: Box<RingSpec>,
        endo: Option<EndoName>,
    },
    TrivialExtension(Box<RingSpec>),
    DoubleTrivialExtension(Box<RingSpec>),
    Ks {
        s: u64,
        base: Box<RingSpec>,
    },
    FormalMatrix {
        n: usize,
        s: u64,
        base: Box<RingSpec>,
    },
    Product(Vec<RingSpec>),
    GroupRing {
        base: Box<RingSpec>,
        group: Vec<u32>,
    },
    QuotPoly {
        base: Box<RingSpec>,
        n: usize,
    },
    Subring {
        base: Box<RingSpec>,
        gens: Vec<String>,
    },
    Constrained {
        base: Box<RingSpec>,
        rows: Vec<Vec<Cell>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("syntax error at column {}: {message}", position + 1)]
    Syntax { position: usize, message: String },
    #[error("cannot build `{fragment}`: {source}")]
    Build { fragment: String, source: RingError },
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zn(n) => write!(f, "Z{n}"),
            RingSpec::Matrix { n, base } => write!(f, "M{n}({base})"),
            RingSpec::Triangular { n, base, endo: None } => write!(f, "T{n}({base})"),
            RingSpec::Triangular { n, base, endo: Some(e) } => write!(f, "T{n}({base},{})", e.as_str()),
            RingSpec::TrivialExtension(b) => write!(f, "TE({b})"),
            RingSpec::DoubleTrivialExtension(b) => write!(f, "DT({b})"),
            RingSpec::Ks { s, base } => write!(f, "K({s})({base})"),
            RingSpec::FormalMatrix { n, s, base } => write!(f, "FM{n}({s})({base})"),
            RingSpec::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|s| s.to_string()).collect();
                write!(f, "prod({})", parts.join(","))
            }
            RingSpec::GroupRing { base, group } => {
                let g: Vec<String> = group.iter().map(|n| format!("C{n}")).collect();
                write!(f, "GR({base},{})", g.join("x"))
            }
            RingSpec::QuotPoly { base, n } => write!(f, "quotpoly({base},{n})"),
            RingSpec::Subring { base, gens } if gens.is_empty() => write!(f, "sub({base})"),
            RingSpec::Subring { base, gens } => write!(f, "sub({base};{})", gens.join(",")),
            RingSpec::Constrained { base, rows } => {
                let rows: Vec<String> = rows
                    .iter()
                    .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
                    .collect();
                write!(f, "cmat({base};{})", rows.join(";"))
            }
        }
    }
}

impl std::str::FromStr for RingSpec {
    type Err = SpecError;
    fn from_str(s: &str) -> Result<Self, SpecError> {
        parse_spec(s)
    }
}

pub fn parse_spec(text: &str) -> Result<RingSpec, SpecError> {
    let chars: Vec<(usize, char)> = text.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut p = Parser {
        chars,
        pos: 0,
        end: text.chars().count(),
    };
    let spec = p.spec()?;
    if p.pos < p.chars.len() {
        return p.fail("unexpected trailing input");
    }
    Ok(spec)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

const MAX_INT: u64 = 1 << 32;

impl Parser {
    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |c| c.0)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, SpecError> {
        let found = match self.peek() {
            Some(c) => format!(" (found `{c}`)"),
            None => " (found end of input)".to_string(),
        };
        Err(SpecError::Syntax {
            position: self.column(),
            message: format!("{}{found}", message.into()),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        let n = kw.chars().count();
        if self.pos + n > self.chars.len() {
            return false;
        }
        let matches = self.chars[self.pos..self.pos + n].iter().map(|c| c.1).eq(kw.chars());
        if matches {
            self.pos += n;
        }
        matches
    }

    fn expect(&mut self, c: char) -> Result<(), SpecError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected `{c}`"))
        }
    }

    fn int(&mut self) -> Result<u64, SpecError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected an integer");
        }
        let digits: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        match digits.parse::<u64>() {
            Ok(v) if v < MAX_INT => Ok(v),
            _ => {
                self.pos = start;
                self.fail("integer too large")
            }
        }
    }

    fn size(&mut self) -> Result<usize, SpecError> {
        let start = self.pos;
        let n = self.int()?;
        if n == 0 {
            self.pos = start;
            return self.fail("size must be at least 1");
        }
        Ok(n as usize)
    }

    fn boxed(&mut self) -> Result<Box<RingSpec>, SpecError> {
        Ok(Box::new(self.spec()?))
    }

    fn spec(&mut self) -> Result<RingSpec, SpecError> {
        if self.eat_keyword("TE(") {
            let b = self.boxed()?;
            self.expect(')')?;
            return Ok(RingSpec::TrivialExtension(b));
        }
        if self.eat_keyword("DT(") {
            let b = self.boxed()?;
            self.expect(')')?;
            return Ok(RingSpec::DoubleTrivialExtension(b));
        }
        if self.eat_keyword("FM") {
            let n = self.size()?;
            self.expect('(')?;
            let s = self.int()?;
            self.expect(')')?;
            self.expect('(')?;
            let base = self.boxed()?;
            self.expect(')')?;
            return Ok(RingSpec::FormalMatrix { n, s, base });
        }
        if self.eat_keyword("K(") {
            let s = self.int()?;
            self.expect(')')?;
            self.expect('(')?;
            let base = self.boxed()?;
            self.expect(')')?;
            return Ok(RingSpec::Ks { s, base });
        }
        if self.eat_keyword("prod(") {
            let mut fs = vec![self.spec()?];
            while self.peek() == Some(',') {
                self.pos += 1;
                fs.push(self.spec()?);
            }
            self.expect(')')?;
            if fs.len() < 2 {
                return self.fail("prod needs at least two factors");
            }
            return Ok(RingSpec::Product(fs));
        }
        if self.eat_keyword("GR(") {
            let base = self.boxed()?;
            self.expect(',')?;
            let group = self.group()?;
            self.expect(')')?;
            return Ok(RingSpec::GroupRing { base, group });
        }
        if self.eat_keyword("quotpoly(") {
            let base = self.boxed()?;
            self.expect(',')?;
            let n = self.size()?;
            self.expect(')')?;
            return Ok(RingSpec::QuotPoly { base, n });
        }
        if self.eat_keyword("sub(") {
            let base = self.boxed()?;
            let mut gens = Vec::new();
            if self.peek() == Some(';') {
                self.pos += 1;
                gens.push(self.element()?);
                while self.peek() == Some(',') {
                    self.pos += 1;
                    gens.push(self.element()?);
                }
            }
            self.expect(')')?;
            return Ok(RingSpec::Subring { base, gens });
        }
        if self.eat_keyword("cmat(") {
            let base = self.boxed()?;
            let mut rows = Vec::new();
            while self.peek() == Some(';') {
                self.pos += 1;
                let mut row = vec![self.cell()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    row.push(self.cell()?);
                }
                rows.push(row);
            }
            if rows.is_empty() {
                return self.fail("cmat needs at least one row of cells");
            }
            if rows.iter().any(|r| r.len() != rows.len()) {
                return self.fail("cmat cells must form a square");
            }
            self.expect(')')?;
            return Ok(RingSpec::Constrained { base, rows });
        }
        if self.eat_keyword("M") {
            let n = self.size()?;
            self.expect('(')?;
            let base = self.boxed()?;
            self.expect(')')?;
            return Ok(RingSpec::Matrix { n, base });
        }
        if self.eat_keyword("T") {
            let n = self.size()?;
            self.expect('(')?;
            let base = self.boxed()?;
            let mut endo = None;
            if self.peek() == Some(',') {
                self.pos += 1;
                endo = Some(if self.eat_keyword("id") {
                    EndoName::Id
                } else if self.eat_keyword("swap") {
                    EndoName::Swap
                } else {
                    return self.fail("expected endomorphism `id` or `swap`");
                });
            }
            self.expect(')')?;
            return Ok(RingSpec::Triangular { n, base, endo });
        }
        if self.eat_keyword("Z") {
            let start = self.pos;
            let n = self.int()?;
            if n < 2 {
                self.pos = start;
                return self.fail("Z needs a modulus of at least 2");
            }
            return Ok(RingSpec::Zn(n as u32));
        }
        self.fail("expected a ring spec")
    }

    fn group(&mut self) -> Result<Vec<u32>, SpecError> {
        let mut out = Vec::new();
        loop {
            if !self.eat_keyword("C") {
                return self.fail("expected a cyclic group `C<n>`");
            }
            out.push(self.size()? as u32);
            if !self.eat_keyword("x") {
                return Ok(out);
            }
        }
    }

    fn cell(&mut self) -> Result<Cell, SpecError> {
        if self.eat_keyword("R") {
            return Ok(Cell::Full);
        }
        let start = self.pos;
        let k = self.int()?;
        if self.eat_keyword("R") {
            return Ok(Cell::Multiple(k as u32));
        }
        if k == 0 {
            return Ok(Cell::Zero);
        }
        self.pos = start;
        self.fail("expected a cell `R`, `0` or `<k>R`")
    }

    /// An element literal: balanced brackets, ending at a top-level `,` or `)`.
    fn element(&mut self) -> Result<String, SpecError> {
        let start = self.pos;
        let mut depth = 0i32;
        while let Some(c) = self.peek() {
            match c {
                '[' | '(' => depth += 1,
                ']' | ')' if depth > 0 => depth -= 1,
                ',' | ')' if depth == 0 => break,
                ']' => return self.fail("unbalanced `]` in element"),
                c if c.is_ascii_alphanumeric() || c == '-' || c == ',' => {}
                _ => return self.fail("unexpected character in element"),
            }
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected an element");
        }
        if depth != 0 {
            return self.fail("unbalanced brackets in element");
        }
        Ok(self.chars[start..self.pos].iter().map(|c| c.1).collect())
    }
}

fn cap(n: u128) -> u128 {
    n.min(u64::MAX as u128)
}

fn pow(b: u128, e: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = cap(acc.saturating_mul(b));
    }
    acc
}

impl RingSpec {
    /// Upper bound on the order, computed without building anything.
    pub fn order_bound(&self) -> u128 {
        match self {
            RingSpec::Zn(n) => *n as u128,
            RingSpec::Matrix { n, base } => pow(base.order_bound(), n * n),
            RingSpec::Triangular { n, base, endo: None } => pow(base.order_bound(), n * (n + 1) / 2),
            RingSpec::Triangular { n, base, .. } => pow(base.order_bound(), *n),
            RingSpec::TrivialExtension(b) => pow(b.order_bound(), 2),
            RingSpec::DoubleTrivialExtension(b) | RingSpec::Ks { base: b, .. } => pow(b.order_bound(), 4),
            RingSpec::FormalMatrix { n, base, .. } => pow(base.order_bound(), n * n),
            RingSpec::Product(fs) => fs.iter().fold(1, |acc, f| cap(acc.saturating_mul(f.order_bound()))),
            RingSpec::GroupRing { base, group } => {
                let g = group.iter().fold(1u128, |acc, &n| cap(acc.saturating_mul(n as u128)));
                pow(base.order_bound(), g.min(usize::MAX as u128) as usize)
            }
            RingSpec::QuotPoly { base, n } => pow(base.order_bound(), *n),
            RingSpec::Subring { base, .. } => base.order_bound(),
            RingSpec::Constrained { base, rows } => {
                let cells = rows.iter().flatten().filter(|c| **c != Cell::Zero).count();
                pow(base.order_bound(), cells)
            }
        }
    }

    /// Direct sub-specs.
    pub fn children(&self) -> Vec<&RingSpec> {
        match self {
            RingSpec::Zn(_) => vec![],
            RingSpec::Product(fs) => fs.iter().collect(),
            RingSpec::Matrix { base, .. }
            | RingSpec::Triangular { base, .. }
            | RingSpec::Ks { base, .. }
            | RingSpec::FormalMatrix { base, .. }
            | RingSpec::GroupRing { base, .. }
            | RingSpec::QuotPoly { base, .. }
            | RingSpec::Subring { base, .. }
            | RingSpec::Constrained { base, .. } => vec![base],
            RingSpec::TrivialExtension(b) | RingSpec::DoubleTrivialExtension(b) => vec![b],
        }
    }

    fn wrap(&self, source: RingError) -> SpecError {
        SpecError::Build {
            fragment: self.to_string(),
            source,
        }
    }

    pub fn build(&self, limits: &Limits) -> Result<Ring, SpecError> {
        if let RingSpec::GroupRing { .. } = self {
            return self.build_group_ring(limits).map(|g| g.ring);
        }
        let bound = self.order_bound();
        if bound > limits.order_cap as u128 && !matches!(self, RingSpec::Subring { .. } | RingSpec::Constrained { .. })
        {
            return Err(self.wrap(RingError::OrderCap {
                order: bound,
                cap: limits.order_cap,
            }));
        }
        let w = |e| self.wrap(e);
        match self {
            RingSpec::Zn(n) => construct::zn(*n, limits).map_err(w),
            RingSpec::Matrix { n, base } => construct::matrix(&base.build(limits)?, *n, limits).map_err(w),
            RingSpec::Triangular { n, base, endo } => {
                let b = base.build(limits)?;
                match endo {
                    None => construct::triangular(&b, *n, limits).map_err(w),
                    Some(e) => {
                        let alpha = construct::named_endomorphism(&b, *e).map_err(w)?;
                        construct::skew_triangular(&b, *n, &alpha, limits).map_err(w)
                    }
                }
            }
            RingSpec::TrivialExtension(b) => construct::trivial_extension(&b.build(limits)?, limits).map_err(w),
            RingSpec::DoubleTrivialExtension(b) => construct::dt_extension(&b.build(limits)?, limits).map_err(w),
            RingSpec::Ks { s, base } => {
                let b = base.build(limits)?;
                construct::k_s_ring(&b, b.int(*s as i64), limits).map_err(w)
            }
            RingSpec::FormalMatrix { n, s, base } => {
                let b = base.build(limits)?;
                construct::formal_matrix(&b, *n, b.int(*s as i64), limits).map_err(w)
            }
            RingSpec::Product(fs) => {
                let rings = fs.iter().map(|f| f.build(limits)).collect::<Result<Vec<_>, _>>()?;
                construct::product(&rings, limits).map_err(w)
            }
            RingSpec::GroupRing { .. } => unreachable!(),
            RingSpec::QuotPoly { base, n } => construct::quot_poly(&base.build(limits)?, *n, limits).map_err(w),
            RingSpec::Subring { base, gens } => {
                let b = base.build(limits)?;
                let ids = gens
                    .iter()
                    .map(|g| b.parse_element(g))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(w)?;
                b.subring_generated(&ids).map_err(w)
            }
            RingSpec::Constrained { base, rows } => {
                let b = base.build(limits)?;
                let cells: Vec<Cell> = rows.iter().flatten().copied().collect();
                construct::entry_constrained(&b, rows.len(), &cells, limits).map_err(w)
            }
        }
    }

    /// Builds a group ring spec with its augmentation data.
    pub fn build_group_ring(&self, limits: &Limits) -> Result<GroupRing, SpecError> {
        let RingSpec::GroupRing { base, group } = self else {
            return Err(self.wrap(RingError::InvalidGroup("not a group ring spec".into())));
        };
        let bound = self.order_bound();
        if bound > limits.order_cap as u128 {
            return Err(self.wrap(RingError::OrderCap {
                order: bound,
                cap: limits.order_cap,
            }));
        }
        let b = base.build(limits)?;
        let g = FiniteGroup::cyclic_product(group).map_err(|e| self.wrap(e))?;
        construct::group_ring(&b, &g, limits).map_err(|e| self.wrap(e))
    }
}

/// Parses and builds in one step.
pub fn build_ring(text: &str, limits: &Limits) -> Result<Ring, SpecError> {
    parse_spec(text)?.build(limits)
}
