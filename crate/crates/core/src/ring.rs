use std::fmt;

use crate::error::Error;

/// The ambient ring: an ordered list of variable names over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    variables: Vec<String>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingSpec {
    pub fn new<S: AsRef<str>>(variables: &[S]) -> Result<Self, Error> {
        if variables.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        let mut names: Vec<String> = Vec::with_capacity(variables.len());
        for v in variables {
            let v = v.as_ref().trim();
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if names.iter().any(|n| n == v) {
                return Err(Error::InvalidRing(format!("variable `{v}` declared twice")));
            }
            names.push(v.to_string());
        }
        Ok(RingSpec { variables: names })
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.variables[i]
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.variables.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_names() {
        assert!(RingSpec::new(&["x", "y"]).is_ok());
        assert!(RingSpec::new(&["x", "x"]).is_err());
        assert!(RingSpec::new(&["2x"]).is_err());
        assert!(RingSpec::new(&[""]).is_err());
        assert!(RingSpec::new::<&str>(&[]).is_err());
        assert!(RingSpec::new(&["x_1", "Y2"]).is_ok());
    }
}
