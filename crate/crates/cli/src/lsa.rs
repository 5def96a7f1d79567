//! The `.lsa` text format.
//!
//! ```text
//! lsa 1
//! name H(1,0)       # optional
//! even 3
//! odd 0
//! char 0            # optional; 0 = rationals, otherwise a prime p > 3
//! [1,2] = 3:1       # [x1,x2] = 1*x3
//! ```
//!
//! Indices are 1-based and global: `1..=even` are the even basis vectors,
//! the rest are odd. Each bracket line lists `k:coef` terms; coefficients
//! are integers or `num/den`. A bracket `[i,j]` implies `[j,i]` by graded
//! skew-symmetry, so only one of the two needs to be written. Writing both
//! is allowed when they agree.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use supertensor::exactlin::LinAlgError;
use supertensor::superalg::Violation;
use supertensor::{Field, LieSuperAlgebra, Scalar, SuperDim};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LsaError {
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    Invalid(Vec<LocatedViolation>),
}

/// A failed axiom together with the lines that declared the brackets involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocatedViolation {
    pub violation: Violation,
    pub lines: Vec<usize>,
}

impl fmt::Display for LsaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LsaError::Syntax { line, column, message } => write!(f, "line {line}, column {column}: {message}"),
            LsaError::Invalid(vs) => {
                writeln!(f, "structure constants violate the axioms:")?;
                for v in vs {
                    let at: Vec<String> = v.lines.iter().map(|l| l.to_string()).collect();
                    if at.is_empty() {
                        writeln!(f, "  {}", v.violation)?;
                    } else {
                        writeln!(f, "  line {}: {}", at.join(", "), v.violation)?;
                    }
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for LsaError {}

struct Cursor<'a> {
    text: &'a str,
    line: usize,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, LsaError> {
        Err(LsaError::Syntax {
            line: self.line,
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with([' ', '\t']) {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    fn expect(&mut self, c: char) -> Result<(), LsaError> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    /// Next run of characters up to whitespace or one of `stops`.
    fn word(&mut self, stops: &[char]) -> (usize, &'a str) {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let len = rest
            .find(|c: char| c.is_whitespace() || stops.contains(&c))
            .unwrap_or(rest.len());
        self.pos += len;
        (start, &rest[..len])
    }

    fn number(&mut self, what: &str, stops: &[char]) -> Result<usize, LsaError> {
        let (start, w) = self.word(stops);
        w.parse().or_else(|_| {
            self.pos = start;
            self.err(format!("expected {what}, found {w:?}"))
        })
    }

    fn index(&mut self, total: usize, stops: &[char]) -> Result<usize, LsaError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let i = self.number("a basis index", stops)?;
        if i == 0 || i > total {
            self.pos = start;
            return self.err(format!("index {i} out of range 1..={total}"));
        }
        Ok(i - 1)
    }
}

/// A bracket line: its line number and the `(k, coef)` terms it lists.
type Declared = (usize, Vec<(usize, Scalar)>);

struct Header {
    name: Option<String>,
    even: Option<usize>,
    odd: Option<usize>,
    field: Field,
}

/// Parses and validates an algebra. `default_name` is used when the file has no `name` line.
pub fn parse_algebra(text: &str, default_name: &str) -> Result<LieSuperAlgebra, LsaError> {
    let mut header = Header {
        name: None,
        even: None,
        odd: None,
        field: Field::Rational,
    };
    let mut seen_tag = false;
    let mut seen_char = false;
    let mut given: BTreeMap<(usize, usize), Declared> = BTreeMap::new();

    for (n, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut cur = Cursor {
            text: content,
            line: n + 1,
            pos: 0,
        };
        if cur.at_end() {
            continue;
        }
        if !seen_tag {
            let (kw_start, kw) = cur.word(&[]);
            if kw != "lsa" {
                cur.pos = kw_start;
                return cur.err("file must start with 'lsa 1'");
            }
            let start = cur.pos;
            if cur.number("a format version", &[])? != 1 {
                cur.pos = start;
                return cur.err("unsupported format version");
            }
            seen_tag = true;
        } else if content.trim_start().starts_with('[') {
            let (Some(even), Some(odd)) = (header.even, header.odd) else {
                return cur.err("'even' and 'odd' must be declared before brackets");
            };
            let total = even + odd;
            cur.expect('[')?;
            let i = cur.index(total, &[','])?;
            cur.expect(',')?;
            let j = cur.index(total, &[']'])?;
            cur.expect(']')?;
            cur.expect('=')?;
            let mut terms: Vec<(usize, Scalar)> = Vec::new();
            while !cur.at_end() {
                let k_start = cur.pos;
                let k = cur.index(total, &[':'])?;
                cur.expect(':')?;
                let (c_start, c) = cur.word(&[]);
                let coef = header.field.parse_scalar(c).or_else(|e| {
                    cur.pos = c_start;
                    cur.err(e.to_string())
                })?;
                if terms.iter().any(|(kk, _)| *kk == k) {
                    cur.pos = k_start;
                    return cur.err(format!("duplicate entry for [{},{}] on index {}", i + 1, j + 1, k + 1));
                }
                terms.push((k, coef));
            }
            if given.contains_key(&(i, j)) {
                return cur.err(format!("bracket [{},{}] given twice", i + 1, j + 1));
            }
            given.insert((i, j), (n + 1, terms));
        } else {
            let (kw_start, kw) = cur.word(&[]);
            match kw {
                "name" => {
                    let rest = cur.text[cur.pos..].trim();
                    if rest.is_empty() {
                        return cur.err("'name' needs a value");
                    }
                    header.name = Some(rest.to_string());
                    continue;
                }
                "even" | "odd" | "char" if !given.is_empty() => {
                    cur.pos = kw_start;
                    return cur.err(format!("'{kw}' must come before the brackets"));
                }
                "even" | "odd" => {
                    let slot = if kw == "even" {
                        &mut header.even
                    } else {
                        &mut header.odd
                    };
                    if slot.is_some() {
                        cur.pos = kw_start;
                        return cur.err(format!("'{kw}' declared twice"));
                    }
                    *slot = Some(cur.number("a dimension", &[])?);
                }
                "char" => {
                    if seen_char {
                        cur.pos = kw_start;
                        return cur.err("'char' declared twice");
                    }
                    let start = {
                        cur.skip_ws();
                        cur.pos
                    };
                    let p = cur.number("a characteristic", &[])? as u64;
                    header.field = Field::from_characteristic(p).or_else(|e: LinAlgError| {
                        cur.pos = start;
                        cur.err(e.to_string())
                    })?;
                    seen_char = true;
                }
                _ => {
                    cur.pos = kw_start;
                    return cur.err(format!("unknown directive {kw:?}"));
                }
            }
        }
        if !cur.at_end() {
            return cur.err("unexpected trailing text");
        }
    }

    let last = text.lines().count().max(1);
    let missing = |what: &str| LsaError::Syntax {
        line: last,
        column: 1,
        message: format!("missing '{what}' line"),
    };
    if !seen_tag {
        return Err(missing("lsa 1"));
    }
    let even = header.even.ok_or_else(|| missing("even"))?;
    let odd = header.odd.ok_or_else(|| missing("odd"))?;
    let dim = SuperDim::new(even, odd);
    let f = header.field;
    let t = dim.total();
    let parity_odd = |i: usize| i >= even;

    let mut consts = vec![f.zero(); t * t * t];
    let mut source_line = BTreeMap::new();
    for (&(i, j), (line, terms)) in &given {
        for (k, c) in terms {
            consts[(i * t + j) * t + k] = c.clone();
        }
        source_line.insert((i, j), *line);
    }
    for (&(i, j), (line, terms)) in &given {
        if i == j || given.contains_key(&(j, i)) {
            continue;
        }
        let s = supertensor::exactlin::sign(f, !(parity_odd(i) && parity_odd(j)));
        for (k, c) in terms {
            consts[(j * t + i) * t + k] = &s * c;
        }
        source_line.insert((j, i), *line);
    }

    let name = header.name.unwrap_or_else(|| default_name.to_string());
    let alg = LieSuperAlgebra::from_constants(name, f, dim, consts).expect("table sized from the header");
    let violations = alg.validate();
    if violations.is_empty() {
        return Ok(alg);
    }
    let located = violations
        .into_iter()
        .map(|v| {
            let mut lines: Vec<usize> = v
                .pairs()
                .into_iter()
                .flat_map(|(a, b)| [source_line.get(&(a, b)).copied(), source_line.get(&(b, a)).copied()])
                .flatten()
                .collect();
            lines.sort_unstable();
            lines.dedup();
            LocatedViolation { violation: v, lines }
        })
        .collect();
    Err(LsaError::Invalid(located))
}

/// Writes `l` in `.lsa` form, one line per nonzero bracket `[i,j]` with `i ≤ j`.
pub fn render(l: &LieSuperAlgebra) -> String {
    let d = l.dim();
    let mut out = String::new();
    writeln!(out, "lsa 1").unwrap();
    writeln!(out, "name {}", l.name()).unwrap();
    writeln!(out, "even {}", d.even).unwrap();
    writeln!(out, "odd {}", d.odd).unwrap();
    writeln!(out, "char {}", l.field().characteristic()).unwrap();
    let t = l.total();
    for i in 0..t {
        for j in i..t {
            let terms: Vec<String> = (0..t)
                .filter(|&k| !l.constant(i, j, k).is_zero())
                .map(|k| format!("{}:{}", k + 1, l.constant(i, j, k)))
                .collect();
            if !terms.is_empty() {
                writeln!(out, "[{},{}] = {}", i + 1, j + 1, terms.join(" ")).unwrap();
            }
        }
    }
    out
}
