use std::sync::Arc;

use super::YDModule;
use crate::error::{Error, Result};
use crate::groupdata::ThreeCocycle;

/// An ordered θ-tuple of absolutely simple modules over one cocycle.
#[derive(Debug, Clone)]
pub struct ModuleTuple {
    entries: Vec<Arc<YDModule>>,
}

impl ModuleTuple {
    pub fn new(entries: Vec<YDModule>) -> Result<Self> {
        Self::from_shared(entries.into_iter().map(Arc::new).collect())
    }

    pub fn from_shared(entries: Vec<Arc<YDModule>>) -> Result<Self> {
        let first = entries.first().ok_or_else(|| Error::Invalid("a tuple needs at least one module".into()))?;
        let c = Arc::clone(first.cocycle());
        for m in &entries {
            if !Arc::ptr_eq(m.cocycle(), &c) {
                return Err(Error::Invalid(format!("module {} uses a different cocycle", m.name())));
            }
            if !m.is_simple() {
                return Err(Error::Invalid(format!("module {} is not simple", m.name())));
            }
        }
        Ok(ModuleTuple { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> &Arc<YDModule> {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[Arc<YDModule>] {
        &self.entries
    }

    pub fn cocycle(&self) -> &Arc<ThreeCocycle> {
        self.entries[0].cocycle()
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|m| m.name().to_string()).collect()
    }
}
