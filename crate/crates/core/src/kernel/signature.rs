use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Name of the distinguished equality predicate.
pub const EQUALITY: &str = "=";

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolId(pub u32);

impl SymbolId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum SymbolKind {
    Function,
    Predicate,
}

impl fmt::Display for SymbolKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolKind::Function => f.write_str("function"),
            SymbolKind::Predicate => f.write_str("predicate"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolInfo {
    pub name: String,
    pub arity: usize,
    pub kind: SymbolKind,
}

/// A symbol was used with an arity or kind different from its first use.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("symbol `{name}` used as {found_kind}/{found_arity} but already declared as {kind}/{arity}")]
pub struct SignatureError {
    pub name: String,
    pub arity: usize,
    pub kind: SymbolKind,
    pub found_arity: usize,
    pub found_kind: SymbolKind,
}

/// Symbol table for one prover run. Ids are dense and never reused.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    symbols: Vec<SymbolInfo>,
    by_name: HashMap<String, SymbolId>,
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id for `name`, declaring it on first use.
    pub fn intern(
        &mut self,
        name: &str,
        arity: usize,
        kind: SymbolKind,
    ) -> Result<SymbolId, SignatureError> {
        if let Some(&id) = self.by_name.get(name) {
            let info = &self.symbols[id.index()];
            if info.arity != arity || info.kind != kind {
                return Err(SignatureError {
                    name: name.to_string(),
                    arity: info.arity,
                    kind: info.kind,
                    found_arity: arity,
                    found_kind: kind,
                });
            }
            return Ok(id);
        }
        let id = SymbolId(self.symbols.len() as u32);
        self.symbols.push(SymbolInfo {
            name: name.to_string(),
            arity,
            kind,
        });
        self.by_name.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn equality(&mut self) -> SymbolId {
        self.intern(EQUALITY, 2, SymbolKind::Predicate)
            .expect("`=` is reserved for the binary equality predicate")
    }

    pub fn lookup(&self, name: &str) -> Option<SymbolId> {
        self.by_name.get(name).copied()
    }

    pub fn equality_id(&self) -> Option<SymbolId> {
        self.lookup(EQUALITY)
    }

    pub fn is_equality(&self, id: SymbolId) -> bool {
        self.symbols[id.index()].name == EQUALITY
    }

    pub fn info(&self, id: SymbolId) -> &SymbolInfo {
        &self.symbols[id.index()]
    }

    pub fn name(&self, id: SymbolId) -> &str {
        &self.symbols[id.index()].name
    }

    pub fn arity(&self, id: SymbolId) -> usize {
        self.symbols[id.index()].arity
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (SymbolId, &SymbolInfo)> {
        self.symbols
            .iter()
            .enumerate()
            .map(|(i, info)| (SymbolId(i as u32), info))
    }
}
