//! Process-wide memo tables shared by concurrent workers.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use crate::error::Result;

/// Many readers, insert-if-absent writers. The value is computed outside
/// the lock, so recursive lookups never deadlock; if two workers race on
/// the same key the first insertion wins and both see the same value.
pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo { map: RwLock::new(HashMap::new()) }
    }

    pub(crate) fn get_or_try_insert<F>(&self, key: &K, compute: F) -> Result<Arc<V>>
    where
        F: FnOnce() -> Result<V>,
    {
        if let Some(v) = self.map.read().expect("memo lock poisoned").get(key) {
            return Ok(Arc::clone(v));
        }
        let value = Arc::new(compute()?);
        let mut map = self.map.write().expect("memo lock poisoned");
        Ok(Arc::clone(map.entry(key.clone()).or_insert(value)))
    }
}
