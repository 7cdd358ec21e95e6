//! Symbol tables for multivariate polynomials.
//!
//! A table is immutable after creation: every polynomial over it carries
//! exponent vectors of exactly `table.len()` entries, so the arity of all
//! monomials is pinned. Widening the symbol set is an explicit re-embedding
//! of polynomials into a new table, never a silent extension.

use std::fmt;
use std::sync::Arc;

use super::ArithError;

/// Index of a symbol inside its [`SymbolTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolId(pub(crate) u32);

impl SymbolId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An ordered set of unique symbol names; indices are dense from 0.
#[derive(Debug, PartialEq, Eq)]
pub struct SymbolTable {
    names: Vec<String>,
}

impl SymbolTable {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>, ArithError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(ArithError::DuplicateSymbol { name: n.clone() });
            }
        }
        Ok(Arc::new(SymbolTable { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn id(&self, name: &str) -> Option<SymbolId> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| SymbolId(i as u32))
    }

    /// Like [`SymbolTable::id`] but with a descriptive error.
    pub fn require(&self, name: &str) -> Result<SymbolId, ArithError> {
        self.id(name).ok_or_else(|| ArithError::UnknownSymbol {
            name: name.to_string(),
        })
    }

    pub fn name(&self, id: SymbolId) -> &str {
        &self.names[id.index()]
    }

    pub fn symbols(&self) -> impl Iterator<Item = SymbolId> + '_ {
        (0..self.names.len() as u32).map(SymbolId)
    }
}

impl fmt::Display for SymbolTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names.join(", "))
    }
}
