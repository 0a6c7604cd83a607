use std::hash::{BuildHasherDefault, Hasher};

/// FxHash-style multiply-xor hasher for the hot maps in the expansion
/// engines. Keys there are short byte strings, where SipHash overhead
/// dominates profile time.
#[derive(Default)]
pub struct FxHasher {
    hash: u64,
}

const SEED: u64 = 0x51_7c_c1_b7_27_22_0a_95;

impl Hasher for FxHasher {
    #[inline]
    fn write(&mut self, bytes: &[u8]) {
        let mut chunks = bytes.chunks_exact(8);
        for c in &mut chunks {
            self.write_u64(u64::from_le_bytes(c.try_into().unwrap()));
        }
        let mut tail = 0u64;
        for (i, &b) in chunks.remainder().iter().enumerate() {
            tail |= (b as u64) << (8 * i);
        }
        if !chunks.remainder().is_empty() {
            self.write_u64(tail);
        }
    }

    #[inline]
    fn write_u64(&mut self, n: u64) {
        self.hash = (self.hash.rotate_left(5) ^ n).wrapping_mul(SEED);
    }

    #[inline]
    fn finish(&self) -> u64 {
        self.hash
    }
}

pub type FxBuildHasher = BuildHasherDefault<FxHasher>;
pub type FxHashMap<K, V> = std::collections::HashMap<K, V, FxBuildHasher>;

/// Sharded mutex-protected hash map; the global polynomial caches admit
/// concurrent readers and writers from rayon workers.
pub struct ShardedCache<K, V> {
    shards: Vec<std::sync::Mutex<FxHashMap<K, V>>>,
}

impl<K: std::hash::Hash + Eq + Clone, V: Clone> ShardedCache<K, V> {
    pub fn new() -> Self {
        ShardedCache {
            shards: (0..16).map(|_| std::sync::Mutex::new(FxHashMap::default())).collect(),
        }
    }

    fn shard(&self, key: &K) -> &std::sync::Mutex<FxHashMap<K, V>> {
        use std::hash::{BuildHasher, Hash};
        let mut h = FxBuildHasher::default().build_hasher();
        key.hash(&mut h);
        &self.shards[(h.finish() as usize) % self.shards.len()]
    }

    pub fn get(&self, key: &K) -> Option<V> {
        self.shard(key).lock().unwrap().get(key).cloned()
    }

    /// Looks up `key`, computing and inserting it on a miss. The closure
    /// runs outside the shard lock so workers can fill distinct keys in
    /// parallel; a racing duplicate insert is harmless (same value).
    pub fn get_or_insert_with<F: FnOnce() -> V>(&self, key: &K, f: F) -> V {
        if let Some(v) = self.get(key) {
            return v;
        }
        let v = f();
        self.shard(key).lock().unwrap().insert(key.clone(), v.clone());
        v
    }

    /// Fallible version of [`ShardedCache::get_or_insert_with`].
    pub fn try_get_or_insert_with<E, F: FnOnce() -> std::result::Result<V, E>>(
        &self,
        key: &K,
        f: F,
    ) -> std::result::Result<V, E> {
        if let Some(v) = self.get(key) {
            return Ok(v);
        }
        let v = f()?;
        self.shard(key).lock().unwrap().insert(key.clone(), v.clone());
        Ok(v)
    }
}

impl<K: std::hash::Hash + Eq + Clone, V: Clone> Default for ShardedCache<K, V> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sharded_cache_round_trip() {
        let cache: ShardedCache<u32, String> = ShardedCache::new();
        assert_eq!(cache.get(&7), None);
        let v = cache.get_or_insert_with(&7, || "seven".to_string());
        assert_eq!(v, "seven");
        assert_eq!(cache.get(&7), Some("seven".to_string()));
    }
}
