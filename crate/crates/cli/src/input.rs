//! Sectioned input files.
//!
//! ```text
//! # comments run to end of line
//! [presentation]
//! generators 2
//! names e f
//! relation e^2 - f
//!
//! [brackets]
//! {e,f} = e
//!
//! [lie_algebra]
//! dimension 3
//! names e h f
//! level 1
//! constant h e e 2        # [h, e] = 2 e
//!
//! [options]
//! order 2
//! ```

use std::collections::BTreeMap;

use lisse_core::arith::{parse_polynomial, parse_scalar, Polynomial, Scalar, VarNames};
use lisse_core::models::LieAlgebraData;
use lisse_core::vpa::PoissonStructure;
use lisse_core::{Error, Presentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for InputError {}

impl InputError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        InputError { line, column, message: message.into() }
    }

    fn from_core(err: Error, line: usize, column: usize) -> Self {
        match err.at(line, column.saturating_sub(1)) {
            Error::Parse { line, column, message } => InputError { line, column, message },
            other => InputError::new(line, column, other.to_string()),
        }
    }
}

/// One `key rest...` line with the 1-based column of `rest`.
#[derive(Clone, Debug)]
struct Entry {
    line: usize,
    key_column: usize,
    key: String,
    rest_column: usize,
    rest: String,
}

#[derive(Clone, Debug, Default)]
pub struct InputFile {
    presentation: Vec<Entry>,
    brackets: Vec<Entry>,
    lie_algebra: Vec<Entry>,
    options: Vec<Entry>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Presentation,
    Brackets,
    LieAlgebra,
    Options,
}

impl InputFile {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let mut file = InputFile::default();
        let mut section = Section::None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim_end();
            let indent = trimmed.len() - trimmed.trim_start().len();
            let body = trimmed.trim_start();
            if body.is_empty() {
                continue;
            }
            if let Some(name) = body.strip_prefix('[') {
                let Some(name) = name.strip_suffix(']') else {
                    return Err(InputError::new(line, indent + 1, "unterminated section header"));
                };
                section = match name.trim() {
                    "presentation" => Section::Presentation,
                    "brackets" => Section::Brackets,
                    "lie_algebra" => Section::LieAlgebra,
                    "options" => Section::Options,
                    other => return Err(InputError::new(line, indent + 2, format!("unknown section `{other}`"))),
                };
                continue;
            }
            let entry = if section == Section::Brackets {
                Entry { line, key_column: indent + 1, key: String::new(), rest_column: indent + 1, rest: body.to_string() }
            } else {
                let key_len = body.find(char::is_whitespace).unwrap_or(body.len());
                let after = &body[key_len..];
                let gap = after.len() - after.trim_start().len();
                Entry {
                    line,
                    key_column: indent + 1,
                    key: body[..key_len].to_string(),
                    rest_column: indent + key_len + gap + 1,
                    rest: after.trim().to_string(),
                }
            };
            match section {
                Section::None => return Err(InputError::new(line, indent + 1, "content before the first section header")),
                Section::Presentation => file.presentation.push(entry),
                Section::Brackets => file.brackets.push(entry),
                Section::LieAlgebra => file.lie_algebra.push(entry),
                Section::Options => file.options.push(entry),
            }
        }
        Ok(file)
    }

    pub fn has_presentation(&self) -> bool {
        !self.presentation.is_empty()
    }

    pub fn has_brackets(&self) -> bool {
        !self.brackets.is_empty()
    }

    pub fn has_lie_algebra(&self) -> bool {
        !self.lie_algebra.is_empty()
    }

    /// Generator count and names from the presentation section.
    fn generators(&self) -> Result<(u32, VarNames), InputError> {
        let mut count: Option<(u32, usize, usize)> = None;
        let mut names = VarNames::default();
        for e in &self.presentation {
            match e.key.as_str() {
                "generators" => {
                    let n = e.rest.parse::<u32>().map_err(|_| {
                        InputError::new(e.line, e.rest_column, format!("expected a generator count, found `{}`", e.rest))
                    })?;
                    count = Some((n, e.line, e.rest_column));
                }
                "names" => {
                    let list: Vec<String> = e.rest.split_whitespace().map(str::to_string).collect();
                    names = VarNames::new(list).map_err(|err| InputError::from_core(err, e.line, e.rest_column))?;
                }
                "relation" => {}
                other => return Err(InputError::new(e.line, e.key_column, format!("unknown presentation key `{other}`"))),
            }
        }
        let n = match count {
            Some((n, line, col)) => {
                if !names.is_empty() && names.len() != n as usize {
                    return Err(InputError::new(line, col, format!("{} names given for {n} generators", names.len())));
                }
                n
            }
            None if !names.is_empty() => names.len() as u32,
            None => {
                let line = self.presentation.first().map_or(1, |e| e.line);
                return Err(InputError::new(line, 1, "presentation needs `generators N` or `names ...`"));
            }
        };
        if n == 0 {
            return Err(InputError::new(1, 1, "at least one generator is required"));
        }
        Ok((n, names))
    }

    pub fn presentation(&self) -> Result<Presentation, InputError> {
        let (n, names) = self.generators()?;
        let mut relations = Vec::new();
        let mut first_line = None;
        for e in self.presentation.iter().filter(|e| e.key == "relation") {
            first_line.get_or_insert((e.line, e.rest_column));
            let p = parse_polynomial(&e.rest, &names).map_err(|err| InputError::from_core(err, e.line, e.rest_column))?;
            if p.max_level() > 1 || p.variables().iter().any(|v| v.generator > n) {
                return Err(InputError::new(e.line, e.rest_column, format!("relation must use the {n} base generators")));
            }
            relations.push(p);
        }
        let (line, col) = first_line.unwrap_or((1, 1));
        Presentation::new(n, relations)
            .and_then(|p| p.with_names(names))
            .map_err(|err| InputError::from_core(err, line, col))
    }

    /// Names for rendering: presentation names, else Lie algebra names.
    pub fn names(&self) -> VarNames {
        if let Ok((_, names)) = self.generators() {
            return names;
        }
        self.lie_algebra()
            .ok()
            .and_then(|d| VarNames::new(d.names().to_vec()).ok())
            .unwrap_or_default()
    }

    /// Bracket table; unvalidated.
    pub fn brackets(&self) -> Result<(PoissonStructure, VarNames), InputError> {
        let (n, names) = if self.has_presentation() { self.generators()? } else { (0, VarNames::default()) };
        let mut entries = Vec::new();
        let mut highest = n;
        for e in &self.brackets {
            let text = &e.rest;
            let err = |col: usize, msg: &str| InputError::new(e.line, e.rest_column + col, msg.to_string());
            if !text.starts_with('{') {
                return Err(err(0, "expected `{a,b} = polynomial`"));
            }
            let close = text.find('}').ok_or_else(|| err(0, "missing `}`"))?;
            let inner = &text[1..close];
            let Some((a, b)) = inner.split_once(',') else {
                return Err(err(1, "expected two generators separated by `,`"));
            };
            let ga = generator_ref(a.trim(), &names).ok_or_else(|| err(1, &format!("unknown generator `{}`", a.trim())))?;
            let b_col = 1 + a.len() + 1;
            let gb = generator_ref(b.trim(), &names).ok_or_else(|| err(b_col, &format!("unknown generator `{}`", b.trim())))?;
            let after = &text[close + 1..];
            let eq = after.find('=').ok_or_else(|| err(close + 1, "missing `=`"))?;
            if !after[..eq].trim().is_empty() {
                return Err(err(close + 1, "expected `=` after the bracket"));
            }
            let rhs = &after[eq + 1..];
            let rhs_col = close + 1 + eq + 1 + (rhs.len() - rhs.trim_start().len());
            let p = parse_polynomial(rhs.trim(), &names)
                .map_err(|er| InputError::from_core(er, e.line, e.rest_column + rhs_col))?;
            if p.max_level() > 1 {
                return Err(err(rhs_col, "bracket values must use base generators"));
            }
            highest = highest.max(ga).max(gb).max(p.variables().iter().map(|v| v.generator).max().unwrap_or(0));
            entries.push((ga, gb, p, e.line, e.rest_column));
        }
        if n > 0 && highest > n {
            let line = self.brackets.first().map_or(1, |e| e.line);
            return Err(InputError::new(line, 1, format!("bracket table mentions generator {highest} beyond the {n} declared")));
        }
        let count = if n > 0 { n } else { highest.max(1) };
        let (line, col) = entries.first().map_or((1, 1), |e| (e.3, e.4));
        let ps = PoissonStructure::new(count, entries.into_iter().map(|(a, b, p, _, _)| (a, b, p)))
            .map_err(|err| InputError::from_core(err, line, col))?;
        Ok((ps, names))
    }

    pub fn lie_algebra(&self) -> Result<LieAlgebraData, InputError> {
        let mut dim: Option<u32> = None;
        let mut names: Option<Vec<String>> = None;
        let mut level: Option<Scalar> = None;
        let mut constants = Vec::new();
        for e in &self.lie_algebra {
            match e.key.as_str() {
                "dimension" => {
                    dim = Some(e.rest.parse().map_err(|_| {
                        InputError::new(e.line, e.rest_column, format!("expected a dimension, found `{}`", e.rest))
                    })?)
                }
                "names" => names = Some(e.rest.split_whitespace().map(str::to_string).collect()),
                "level" => level = Some(parse_scalar(&e.rest).map_err(|er| InputError::from_core(er, e.line, e.rest_column))?),
                "constant" => constants.push(e),
                other => return Err(InputError::new(e.line, e.key_column, format!("unknown lie_algebra key `{other}`"))),
            }
        }
        let first = self.lie_algebra.first().map_or(1, |e| e.line);
        let d = match (dim, &names) {
            (Some(d), _) => d,
            (None, Some(n)) => n.len() as u32,
            (None, None) => return Err(InputError::new(first, 1, "lie_algebra needs `dimension` or `names`")),
        };
        let names = names.unwrap_or_else(|| (1..=d).map(|i| format!("x{i}")).collect());
        let lookup = |tok: &str| -> Option<u32> {
            if let Some(i) = names.iter().position(|n| n == tok) {
                return Some(i as u32 + 1);
            }
            tok.parse::<u32>().ok().filter(|i| (1..=d).contains(i))
        };
        let mut triples = Vec::new();
        for e in constants {
            let tokens = tokens_with_columns(&e.rest);
            if tokens.len() != 4 {
                return Err(InputError::new(e.line, e.rest_column, "expected `constant i j k value`"));
            }
            let mut idx = [0u32; 3];
            for t in 0..3 {
                let (col, tok) = tokens[t];
                idx[t] = lookup(tok).ok_or_else(|| {
                    InputError::new(e.line, e.rest_column + col, Error::UnknownBasisName(tok.to_string()).to_string())
                })?;
            }
            let (col, tok) = tokens[3];
            let value = parse_scalar(tok).map_err(|er| InputError::from_core(er, e.line, e.rest_column + col))?;
            triples.push((idx[0], idx[1], idx[2], value));
        }
        let data = LieAlgebraData::new(d, names, triples).map_err(|er| InputError::new(first, 1, er.to_string()))?;
        Ok(match level {
            Some(k) => data.with_level(k),
            None => data,
        })
    }

    /// `[options]` as key to (line, column, value).
    pub fn options(&self) -> Result<BTreeMap<String, (usize, usize, String)>, InputError> {
        const KNOWN: [&str; 10] = ["order", "cutoff", "samples", "seed", "max-weight", "c", "minimal", "root", "power", "format"];
        let mut out = BTreeMap::new();
        for e in &self.options {
            if !KNOWN.contains(&e.key.as_str()) {
                return Err(InputError::new(e.line, e.key_column, format!("unknown option `{}`", e.key)));
            }
            out.insert(e.key.clone(), (e.line, e.rest_column, e.rest.clone()));
        }
        Ok(out)
    }
}

fn generator_ref(tok: &str, names: &VarNames) -> Option<u32> {
    if let Some(i) = names.lookup(tok) {
        return Some(i);
    }
    let digits = tok.strip_prefix('x').unwrap_or(tok);
    digits.parse::<u32>().ok().filter(|&i| i > 0)
}

fn tokens_with_columns(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(st)) => {
                out.push((st, &s[st..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(st) = start {
        out.push((st, &s[st..]));
    }
    out
}

/// Renders with names when they cover every generator.
pub fn render(p: &Polynomial, names: &VarNames) -> String {
    if names.is_empty() || p.variables().iter().any(|v| v.generator as usize > names.len()) {
        p.to_string()
    } else {
        p.display_with(names).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sections() {
        let f = InputFile::parse("[presentation]\ngenerators 1\nrelation x1^2  # square\n[options]\norder 3\n").unwrap();
        let p = f.presentation().unwrap();
        assert_eq!(p.relations(), &[Polynomial::x(1, 1).pow(2)]);
        assert_eq!(f.options().unwrap()["order"].2, "3");
    }

    #[test]
    fn positions_point_at_the_problem() {
        let f = InputFile::parse("[presentation]\ngenerators 1\nrelation x1 + * 2\n").unwrap();
        let err = f.presentation().unwrap_err();
        assert_eq!((err.line, err.column), (3, 15));
        let err = InputFile::parse("[nonsense]\n").unwrap_err();
        assert_eq!((err.line, err.column), (1, 2));
        let err = InputFile::parse("generators 2\n").unwrap_err();
        assert_eq!(err.line, 1);
    }

    #[test]
    fn brackets_by_name() {
        let f = InputFile::parse("[presentation]\nnames e h f\n[brackets]\n{e,f} = h\n{h,e} = 2*e\n").unwrap();
        let (ps, _) = f.brackets().unwrap();
        assert_eq!(ps.generator_bracket(1, 3), Polynomial::x(2, 1));
        assert_eq!(ps.generator_bracket(1, 2), Polynomial::x(1, 1).scale(&lisse_core::arith::int(-2)));
        let bad = InputFile::parse("[presentation]\nnames e h f\n[brackets]\n{e,q} = h\n").unwrap();
        let err = bad.brackets().unwrap_err();
        assert_eq!((err.line, err.column), (4, 4));
    }

    #[test]
    fn lie_algebra_section() {
        let text = "[lie_algebra]\nnames e h f\nconstant h e e 2\nconstant h f f -2\nconstant e f h 1\n";
        let data = InputFile::parse(text).unwrap().lie_algebra().unwrap();
        assert_eq!(data, LieAlgebraData::sl2());
        let bad = InputFile::parse("[lie_algebra]\nnames e h f\nconstant h q e 2\n").unwrap();
        let err = bad.lie_algebra().unwrap_err();
        assert_eq!((err.line, err.column), (3, 12));
    }
}
