use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::Result;
use crate::ydmod::{iso_test, Fingerprint, ModuleTuple, YDModule};

/// An isomorphism class of tuples: the ordered list of module class ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleClass {
    pub id: usize,
    pub modules: Vec<usize>,
    pub fingerprints: Vec<Fingerprint>,
}

#[derive(Default)]
struct Inner {
    modules: Vec<Arc<YDModule>>,
    fingerprints: Vec<Fingerprint>,
    labels: Vec<String>,
    classes: Vec<TupleClass>,
    index: HashMap<Vec<usize>, usize>,
}

/// Append-only registry of simple-module classes and tuple classes.
///
/// A module is matched against stored representatives with the same
/// fingerprint by an intertwiner solve; the first representative of each
/// class is kept and later used to rebuild canonical tuples.
#[derive(Default)]
pub struct Catalog {
    inner: RwLock<Inner>,
}

impl Catalog {
    pub fn new() -> Self {
        Self::default()
    }

    /// A catalog whose first module classes are `seeds`, labelled by their
    /// names.
    pub fn seeded(seeds: impl IntoIterator<Item = Arc<YDModule>>) -> Result<Self> {
        let cat = Self::new();
        for m in seeds {
            cat.module_class(&m)?;
        }
        Ok(cat)
    }

    fn find(inner: &Inner, m: &YDModule, fp: &Fingerprint) -> Result<Option<usize>> {
        for (k, rep) in inner.modules.iter().enumerate() {
            if &inner.fingerprints[k] == fp && iso_test(rep, m)?.is_some() {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    /// Class id of `m`, registering a new class if needed.
    pub fn module_class(&self, m: &Arc<YDModule>) -> Result<usize> {
        let fp = m.fingerprint();
        if let Some(k) = Self::find(&self.inner.read().expect("catalog lock"), m, &fp)? {
            return Ok(k);
        }
        let mut inner = self.inner.write().expect("catalog lock");
        if let Some(k) = Self::find(&inner, m, &fp)? {
            return Ok(k);
        }
        let mut label = m.name().to_string();
        while inner.labels.contains(&label) {
            label.push('\'');
        }
        inner.modules.push(Arc::clone(m));
        inner.fingerprints.push(fp);
        inner.labels.push(label);
        Ok(inner.modules.len() - 1)
    }

    pub fn classify(&self, t: &ModuleTuple) -> Result<TupleClass> {
        let ids = t.entries().iter().map(|m| self.module_class(m)).collect::<Result<Vec<_>>>()?;
        {
            let inner = self.inner.read().expect("catalog lock");
            if let Some(&c) = inner.index.get(&ids) {
                return Ok(inner.classes[c].clone());
            }
        }
        let mut inner = self.inner.write().expect("catalog lock");
        if let Some(&c) = inner.index.get(&ids) {
            return Ok(inner.classes[c].clone());
        }
        let class = TupleClass {
            id: inner.classes.len(),
            fingerprints: ids.iter().map(|&k| inner.fingerprints[k].clone()).collect(),
            modules: ids.clone(),
        };
        inner.index.insert(ids, class.id);
        inner.classes.push(class.clone());
        Ok(class)
    }

    pub fn module_label(&self, id: usize) -> String {
        self.inner.read().expect("catalog lock").labels[id].clone()
    }

    pub fn module(&self, id: usize) -> Arc<YDModule> {
        Arc::clone(&self.inner.read().expect("catalog lock").modules[id])
    }

    pub fn module_count(&self) -> usize {
        self.inner.read().expect("catalog lock").modules.len()
    }

    pub fn class(&self, id: usize) -> TupleClass {
        self.inner.read().expect("catalog lock").classes[id].clone()
    }

    pub fn class_count(&self) -> usize {
        self.inner.read().expect("catalog lock").classes.len()
    }

    /// `(M1,M4,M5)`-style label.
    pub fn class_label(&self, class: &TupleClass) -> String {
        let inner = self.inner.read().expect("catalog lock");
        let names: Vec<&str> = class.modules.iter().map(|&k| inner.labels[k].as_str()).collect();
        format!("({})", names.join(","))
    }

    /// The tuple of stored representatives of `class`.
    pub fn representative(&self, class: &TupleClass) -> Result<ModuleTuple> {
        let inner = self.inner.read().expect("catalog lock");
        ModuleTuple::from_shared(class.modules.iter().map(|&k| Arc::clone(&inner.modules[k])).collect())
    }
}
