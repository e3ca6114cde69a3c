use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Named variables of a polynomial ring, optionally with one integer torus
/// weight per variable.
///
/// Contexts are cheap to clone and compare equal when they carry the same
/// names and weights.
#[derive(Clone)]
pub struct RingContext(Arc<ContextInner>);

#[derive(PartialEq, Eq)]
struct ContextInner {
    names: Vec<String>,
    weights: Option<Vec<i64>>,
}

impl RingContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        Self::build(names, None)
    }

    pub fn with_weights<S: AsRef<str>>(names: &[S], weights: &[i64]) -> Result<Self> {
        Self::build(names, Some(weights.to_vec()))
    }

    fn build<S: AsRef<str>>(names: &[S], weights: Option<Vec<i64>>) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().trim().to_string()).collect();
        let mut seen = HashSet::new();
        for name in &names {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!("bad variable name `{name}`")));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
        }
        if let Some(w) = &weights {
            if w.len() != names.len() {
                return Err(Error::InvalidRing(format!(
                    "{} weights for {} variables",
                    w.len(),
                    names.len()
                )));
            }
        }
        Ok(RingContext(Arc::new(ContextInner { names, weights })))
    }

    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn weights(&self) -> Option<&[i64]> {
        self.0.weights.as_deref()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    pub fn require_index(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// A new context with `extra` prepended to the variable list. Fresh
    /// variables get weight zero when the ring is weighted.
    pub fn prepend(&self, extra: &[&str]) -> Result<RingContext> {
        let mut names: Vec<String> = extra.iter().map(|s| s.to_string()).collect();
        names.extend(self.0.names.iter().cloned());
        let weights = self.0.weights.as_ref().map(|w| {
            let mut out = vec![0; extra.len()];
            out.extend_from_slice(w);
            out
        });
        Self::build(&names, weights)
    }

    /// A variable name not yet used in this ring.
    pub fn fresh_name(&self, stem: &str) -> String {
        let mut k = 0usize;
        loop {
            let candidate = if k == 0 { stem.to_string() } else { format!("{stem}{k}") };
            if self.index_of(&candidate).is_none() {
                return candidate;
            }
            k += 1;
        }
    }

    /// Same ring with variables listed in `perm` order (`perm[k]` is the old
    /// index of new variable `k`).
    pub fn permuted(&self, perm: &[usize]) -> Result<RingContext> {
        let names: Vec<String> = perm.iter().map(|&i| self.0.names[i].clone()).collect();
        let weights = self.0.weights.as_ref().map(|w| perm.iter().map(|&i| w[i]).collect());
        Self::build(&names, weights)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for RingContext {}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring[{}]", self.0.names.join(", "))?;
        if let Some(w) = &self.0.weights {
            write!(f, " weights {w:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_weights() {
        assert!(RingContext::new(&["x", "x"]).is_err());
        assert!(RingContext::new(&["x", ""]).is_err());
        assert!(RingContext::new(&["1x"]).is_err());
        assert!(RingContext::with_weights(&["x", "y"], &[1]).is_err());
        let r = RingContext::with_weights(&["x", "y"], &[1, -1]).unwrap();
        assert_eq!(r.weights(), Some(&[1, -1][..]));
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let r = RingContext::new(&["t", "t1"]).unwrap();
        assert_eq!(r.fresh_name("t"), "t2");
        let ext = r.prepend(&["s"]).unwrap();
        assert_eq!(ext.names(), &["s", "t", "t1"]);
    }
}
