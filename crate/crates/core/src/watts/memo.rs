use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

/// A thread-safe cache of fallible computations.
pub(crate) struct Memo<K, V> {
    map: Mutex<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo { map: Mutex::new(HashMap::new()) }
    }

    pub(crate) fn get_or_try<E>(&self, key: &K, build: impl FnOnce() -> Result<V, E>) -> Result<Arc<V>, E> {
        if let Some(v) = self.map.lock().expect("cache lock").get(key) {
            return Ok(v.clone());
        }
        // build outside the lock; builders may recurse into the same cache
        let v = Arc::new(build()?);
        self.map.lock().expect("cache lock").entry(key.clone()).or_insert_with(|| v.clone());
        Ok(v)
    }
}

impl<K: Eq + Hash + Clone, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo::new()
    }
}
