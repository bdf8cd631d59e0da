//! Plain-text generator-matrix files.
//!
//! Format: one header line `p=.. h=.. [modulus=c0,c1,...,ch] n=.. k=..`
//! followed by k rows of n element literals separated by whitespace.
//! The modulus is the comma-separated coefficient list of the field's
//! irreducible polynomial, constant term first; when omitted, the field's
//! canonical default modulus is used. Blank lines and lines starting with
//! `#` are ignored. Serialization always emits the modulus and canonical
//! element literals, so `serialize(parse(text)) == text` for files already
//! in that shape.

use hullforge::{Field, FieldElement, LinearCode, Matrix};
use std::fmt;

/// Errors surfaced by the command-line layer. `exit_code` maps them onto
/// the documented exit-status contract: bad usage exits 2, everything
/// else (parse, domain, IO failures) exits 1.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input text; `line` and `col` are 1-based.
    Parse { line: usize, col: usize, msg: String },
    /// An error from the core library.
    Domain(hullforge::Error),
    /// A file could not be read or written.
    Io(String),
    /// Command misuse detected after argument parsing.
    Usage(String),
}

pub type CliResult<T> = Result<T, CliError>;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { line, col, msg } => {
                write!(f, "parse error at line {line}, column {col}: {msg}")
            }
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(m) => write!(f, "{m}"),
            CliError::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl From<hullforge::Error> for CliError {
    fn from(e: hullforge::Error) -> Self {
        CliError::Domain(e)
    }
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse { line, col, msg: msg.into() }
}

/// Lines that carry content: skips blanks and `#` comments, keeping
/// 1-based line numbers.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        if t.is_empty() || t.starts_with('#') {
            None
        } else {
            Some((i + 1, l))
        }
    })
}

/// Whitespace-separated tokens of a line with their 1-based character
/// columns.
fn tokens_with_cols(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (line[..s].chars().count() + 1, t))
        .collect()
}

struct Header {
    p: u32,
    h: u32,
    modulus: Option<Vec<u32>>,
    n: usize,
    k: usize,
}

fn parse_header(line_no: usize, line: &str) -> CliResult<Header> {
    let toks = tokens_with_cols(line);
    let mut pairs = Vec::new();
    for (col, tok) in &toks {
        let (key, val) = tok
            .split_once('=')
            .ok_or_else(|| parse_err(line_no, *col, format!("expected key=value, got '{tok}'")))?;
        pairs.push((*col, key, val));
    }
    let keys: Vec<&str> = pairs.iter().map(|&(_, k, _)| k).collect();
    if keys != ["p", "h", "n", "k"] && keys != ["p", "h", "modulus", "n", "k"] {
        return Err(parse_err(
            line_no,
            toks.first().map_or(1, |&(c, _)| c),
            "header must be `p=.. h=.. [modulus=c0,c1,...,ch] n=.. k=..`",
        ));
    }
    let int = |col: usize, key: &str, val: &str| -> CliResult<u64> {
        val.parse::<u64>()
            .map_err(|_| parse_err(line_no, col, format!("{key} must be an unsigned integer, got '{val}'")))
    };
    let mut p = 0u32;
    let mut h = 0u32;
    let mut modulus = None;
    let mut n = 0usize;
    let mut k = usize::MAX;
    for (col, key, val) in pairs {
        match key {
            "p" => p = int(col, key, val)? as u32,
            "h" => h = int(col, key, val)? as u32,
            "modulus" => {
                let mut coeffs = Vec::new();
                for part in val.split(',') {
                    coeffs.push(int(col, "modulus coefficient", part)? as u32);
                }
                modulus = Some(coeffs);
            }
            "n" => n = int(col, key, val)? as usize,
            "k" => {
                k = int(col, key, val)? as usize;
                if k == 0 {
                    return Err(parse_err(line_no, col, "k must be at least 1"));
                }
            }
            _ => unreachable!(),
        }
        if key == "n" && n == 0 {
            return Err(parse_err(line_no, col, "n must be at least 1"));
        }
    }
    Ok(Header { p, h, modulus, n, k })
}

/// Parse a code file into a `LinearCode` over the declared field.
pub fn parse_code_file(text: &str) -> CliResult<LinearCode> {
    let mut lines = significant_lines(text);
    let (hno, hline) = lines
        .next()
        .ok_or_else(|| parse_err(1, 1, "empty file: missing header line"))?;
    let header = parse_header(hno, hline)?;
    let field = Field::new(header.p, header.h, header.modulus.as_deref())?;

    let mut rows: Vec<Vec<FieldElement>> = Vec::with_capacity(header.k);
    let mut last_line = hno;
    for r in 0..header.k {
        let (lno, line) = lines.next().ok_or_else(|| {
            parse_err(
                last_line + 1,
                1,
                format!("expected {} generator rows, found {r}", header.k),
            )
        })?;
        last_line = lno;
        let toks = tokens_with_cols(line);
        if toks.len() != header.n {
            return Err(parse_err(
                lno,
                toks.first().map_or(1, |&(c, _)| c),
                format!("row has {} entries, expected n={}", toks.len(), header.n),
            ));
        }
        let mut row = Vec::with_capacity(header.n);
        for (col, tok) in toks {
            let v = field
                .parse(tok)
                .map_err(|_| parse_err(lno, col, format!("bad element literal '{tok}'")))?;
            row.push(v);
        }
        rows.push(row);
    }
    if let Some((lno, _)) = lines.next() {
        return Err(parse_err(
            lno,
            1,
            format!("unexpected extra line after {} generator rows", header.k),
        ));
    }
    Ok(LinearCode::new(field, &Matrix::from_rows(&rows))?)
}

/// Serialize a code in canonical form: explicit modulus, reduced generator
/// rows, canonical element literals, one trailing newline per line.
pub fn serialize_code(code: &LinearCode) -> String {
    let f = code.field();
    let modulus = f
        .modulus()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let mut out = format!(
        "p={} h={} modulus={} n={} k={}\n",
        f.p(),
        f.h(),
        modulus,
        code.n(),
        code.k()
    );
    for r in 0..code.k() {
        let row: Vec<String> = code.generator().row(r).iter().map(|&x| f.format(x)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
