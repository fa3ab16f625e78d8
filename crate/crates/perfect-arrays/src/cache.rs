//! Process-wide cache of cyclotomic zero tests, one per modulus.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use perfect_arrays_core::ZeroTest;

static CACHE: OnceLock<RwLock<HashMap<u32, Arc<ZeroTest>>>> = OnceLock::new();

pub fn zero_test(modulus: u32) -> Arc<ZeroTest> {
    let cache = CACHE.get_or_init(Default::default);
    if let Some(test) = cache
        .read()
        .unwrap_or_else(|e| e.into_inner())
        .get(&modulus)
    {
        return Arc::clone(test);
    }
    let mut map = cache.write().unwrap_or_else(|e| e.into_inner());
    Arc::clone(
        map.entry(modulus)
            .or_insert_with(|| Arc::new(ZeroTest::new(modulus))),
    )
}
