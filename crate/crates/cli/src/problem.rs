//! Sectioned problem files.
//!
//! ```text
//! [ring]
//! variables = x, y, z, w
//! [variety]
//! g1 = x^2 + y^2 + z^2 + w^2
//! [function]
//! f = x
//! [options]
//! seed = 42
//! ```
//!
//! `#` starts a comment. The variety section holds either `key = expr` lines
//! or the single token `ambient`.

use std::collections::HashSet;

use germlab_core::{parse_polynomial, Poly, RingSpec};
use thiserror::Error;

pub const DEFAULT_SEED: u64 = 42;

/// A location-tagged validation failure; line and column are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ProblemError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn fail<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ProblemError> {
    Err(ProblemError { line, column, message: message.into() })
}

#[derive(Debug, Clone)]
pub enum Variety {
    Ambient,
    Equations(Vec<(String, Poly)>),
}

#[derive(Debug, Clone)]
pub struct Problem {
    pub ring: RingSpec,
    pub variety: Option<Variety>,
    pub function: Option<Poly>,
    pub seed: u64,
    pub perturb: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Section {
    Ring,
    Variety,
    Function,
    Options,
}

/// A `key = value` entry with the position of its value.
struct Entry<'a> {
    line: usize,
    key: &'a str,
    key_col: usize,
    value: &'a str,
    value_col: usize,
}

/// Keys accepted by the `perturb` option.
pub const PERTURBABLE: &[&str] = &[
    "mu_f",
    "mu_x",
    "tau_x",
    "mu_x_f",
    "mu_x_p",
    "mu_br",
    "mu_br_rel",
    "tau_br",
    "gsv",
    "eu_x",
    "eu_fx",
    "brasselet",
    "polar_md",
    "c1",
    "c2",
];

fn column_of(line: &str, part: &str) -> usize {
    // `part` is a subslice of `line`
    line[..part.as_ptr() as usize - line.as_ptr() as usize].chars().count() + 1
}

pub fn parse_problem(text: &str) -> Result<Problem, ProblemError> {
    let mut seen: HashSet<Section> = HashSet::new();
    let mut current: Option<Section> = None;
    let mut ring_entries = Vec::new();
    let mut variety_entries = Vec::new();
    let mut ambient: Option<usize> = None;
    let mut function_entries = Vec::new();
    let mut option_entries = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let col = column_of(raw, trimmed);
        if let Some(rest) = trimmed.strip_prefix('[') {
            let Some(name) = rest.strip_suffix(']') else {
                return fail(line_no, col, "unterminated section header");
            };
            let section = match name.trim() {
                "ring" => Section::Ring,
                "variety" => Section::Variety,
                "function" => Section::Function,
                "options" => Section::Options,
                other => return fail(line_no, col + 1, format!("unknown section `{other}`")),
            };
            if !seen.insert(section) {
                return fail(line_no, col, format!("duplicate section `{}`", name.trim()));
            }
            current = Some(section);
            continue;
        }
        let Some(section) = current else {
            return fail(line_no, col, "entry outside of any section");
        };
        if section == Section::Variety && trimmed == "ambient" {
            ambient = Some(line_no);
            continue;
        }
        let Some(eq) = trimmed.find('=') else {
            return fail(line_no, col, "expected `key = value`");
        };
        let key = trimmed[..eq].trim_end();
        if key.is_empty() {
            return fail(line_no, col, "missing key before `=`");
        }
        let after = &trimmed[eq + 1..];
        let value = after.trim();
        let value_col = if value.is_empty() { column_of(raw, after) } else { column_of(raw, value) };
        let entry = Entry { line: line_no, key, key_col: col, value, value_col };
        match section {
            Section::Ring => ring_entries.push(entry),
            Section::Variety => variety_entries.push(entry),
            Section::Function => function_entries.push(entry),
            Section::Options => option_entries.push(entry),
        }
    }

    check_unique_keys(&ring_entries)?;
    check_unique_keys(&variety_entries)?;
    check_unique_keys(&function_entries)?;
    check_unique_keys(&option_entries)?;

    let ring = parse_ring(&ring_entries, seen.contains(&Section::Ring))?;

    let variety = match (ambient, variety_entries.is_empty()) {
        (Some(line), false) => return fail(line, 1, "`ambient` cannot be combined with equations"),
        (Some(_), true) => Some(Variety::Ambient),
        (None, false) => {
            let mut eqs = Vec::new();
            for e in &variety_entries {
                let p = parse_expr(e, &ring)?;
                if p.is_zero() {
                    return fail(e.line, e.value_col, "generator is zero");
                }
                if p.is_unit() {
                    return fail(e.line, e.value_col, "generator does not vanish at the origin");
                }
                eqs.push((e.key.to_string(), p));
            }
            Some(Variety::Equations(eqs))
        }
        (None, true) if seen.contains(&Section::Variety) => {
            return fail(text.lines().count().max(1), 1, "variety section is empty (use `ambient` for the whole space)")
        }
        (None, true) => None,
    };

    let function = match function_entries.as_slice() {
        [] => None,
        [e] => {
            if e.key != "f" {
                return fail(e.line, e.key_col, format!("unknown key `{}` (expected `f`)", e.key));
            }
            let p = parse_expr(e, &ring)?;
            if p.is_unit() {
                return fail(e.line, e.value_col, "f does not vanish at the origin");
            }
            Some(p)
        }
        [_, e, ..] => return fail(e.line, e.key_col, "function section takes a single entry `f`"),
    };

    let mut seed = DEFAULT_SEED;
    let mut perturb = None;
    for e in &option_entries {
        match e.key {
            "seed" => match e.value.parse::<u64>() {
                Ok(v) => seed = v,
                Err(_) => {
                    return fail(e.line, e.value_col, format!("seed must be a non-negative integer, got `{}`", e.value))
                }
            },
            "perturb" => {
                if !PERTURBABLE.contains(&e.value) {
                    return fail(e.line, e.value_col, format!("cannot perturb `{}`", e.value));
                }
                perturb = Some(e.value.to_string());
            }
            other => return fail(e.line, e.key_col, format!("unknown option `{other}`")),
        }
    }

    Ok(Problem { ring, variety, function, seed, perturb })
}

fn check_unique_keys(entries: &[Entry<'_>]) -> Result<(), ProblemError> {
    let mut keys = HashSet::new();
    for e in entries {
        if !keys.insert(e.key) {
            return fail(e.line, e.key_col, format!("duplicate key `{}`", e.key));
        }
    }
    Ok(())
}

fn parse_ring(entries: &[Entry<'_>], present: bool) -> Result<RingSpec, ProblemError> {
    if !present {
        return fail(1, 1, "missing [ring] section");
    }
    let mut vars = None;
    for e in entries {
        if e.key != "variables" {
            return fail(e.line, e.key_col, format!("unknown key `{}` (expected `variables`)", e.key));
        }
        vars = Some(e);
    }
    let Some(e) = vars else {
        return fail(1, 1, "missing `variables` in [ring]");
    };
    let names: Vec<&str> = e.value.split(',').map(str::trim).collect();
    RingSpec::new(&names).or_else(|err| fail(e.line, e.value_col, err.to_string()))
}

fn parse_expr(e: &Entry<'_>, ring: &RingSpec) -> Result<Poly, ProblemError> {
    parse_polynomial(e.value, ring).or_else(|err| fail(e.line, e.value_col + err.column - 1, err.kind.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SPHERE: &str = "[ring]\nvariables = x, y, z, w\n[variety]\ng1 = x^2 + y^2 + z^2 + w^2\n[function]\nf = x\n[options]\nseed = 42\n";

    #[test]
    fn parses_normative_example() {
        let p = parse_problem(SPHERE).unwrap();
        assert_eq!(p.ring.nvars(), 4);
        assert!(matches!(p.variety, Some(Variety::Equations(ref v)) if v.len() == 1));
        assert!(p.function.is_some());
        assert_eq!(p.seed, 42);
    }

    #[test]
    fn ambient_token() {
        let p = parse_problem("[ring]\nvariables = x, y\n[variety]\nambient\n[function]\nf = x^3 + y^2\n").unwrap();
        assert!(matches!(p.variety, Some(Variety::Ambient)));
    }

    #[test]
    fn expression_errors_carry_position() {
        let err = parse_problem("[ring]\nvariables = x, y\n[variety]\ng1 = x + 2y\n").unwrap_err();
        assert_eq!((err.line, err.column), (4, 10));
        let err = parse_problem("[ring]\nvariables = x, y\n[variety]\ng1 =   x + w\n").unwrap_err();
        assert_eq!(err.line, 4);
        assert_eq!(err.column, 12);
        assert!(err.message.contains("unknown variable"));
    }

    #[test]
    fn structural_errors() {
        for (text, line) in [
            ("[ring]\nvariables = x\n[ring]\n", 3),
            ("x = 1\n", 1),
            ("[ring]\nvariables = x\n[stuff]\n", 3),
            ("[ring]\nvariables = x, x\n", 2),
            ("[ring]\nvariables = x\n[variety]\ng = x + 1\n", 4),
            ("[ring]\nvariables = x\n[options]\nseed = -3\n", 4),
            ("[ring]\nvariables = x\n[variety]\nambient\ng = x\n", 4),
        ] {
            assert_eq!(parse_problem(text).unwrap_err().line, line, "{text}");
        }
    }
}
