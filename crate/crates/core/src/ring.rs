use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// A polynomial ring F_p[x_1, ..., x_n] with named variables.
///
/// Every polynomial carries an `Arc<Ring>`; operations on polynomials from
/// structurally different rings are rejected.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    field: PrimeField,
    names: Vec<String>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(p: u64, names: &[S]) -> Result<Arc<Ring>> {
        let field = PrimeField::new(p)?;
        if names.is_empty() {
            return Err(Error::NoVariables);
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref();
            if !is_identifier(name) {
                return Err(Error::InvalidVariable(name.to_string()));
            }
            if !seen.insert(name) {
                return Err(Error::DuplicateVariable(name.to_string()));
            }
            out.push(name.to_string());
        }
        Ok(Arc::new(Ring { field, names: out }))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The ring with one extra trailing variable. The name is `base`, or
    /// `base` followed by underscores until it no longer clashes.
    pub fn extended(&self, base: &str) -> Arc<Ring> {
        let mut name = base.to_string();
        while self.names.contains(&name) {
            name.push('_');
        }
        let mut names = self.names.clone();
        names.push(name);
        Arc::new(Ring {
            field: self.field,
            names,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction() {
        let r = Ring::new(5, &["x1", "x2", "x3", "x4", "x5"]).unwrap();
        assert_eq!(r.nvars(), 5);
        assert_eq!(r.characteristic(), 5);
        let r = Ring::new(2, &["x"]).unwrap();
        assert_eq!(r.nvars(), 1);
        assert_eq!(Ring::new(4, &["x"]).unwrap_err(), Error::NotPrime(4));
        assert_eq!(
            Ring::new(3, &["x", "x"]).unwrap_err(),
            Error::DuplicateVariable("x".into())
        );
        assert!(Ring::new(3, &["1x"]).is_err());
        assert_eq!(Ring::new::<&str>(3, &[]).unwrap_err(), Error::NoVariables);
    }

    #[test]
    fn extension_avoids_clashes() {
        let r = Ring::new(3, &["t", "x"]).unwrap();
        let e = r.extended("t");
        assert_eq!(e.names(), &["t", "x", "t_"]);
    }
}
