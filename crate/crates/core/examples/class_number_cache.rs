//! Persist class numbers between runs.
//!
//! cargo run --example class_number_cache

use qrdist::{run_range, ClassNumberCache, RunConfig};

fn main() -> qrdist::Result<()> {
    let dir = tempfile::tempdir()?;
    let path = dir.path().join("h.csv");

    let mut cache = ClassNumberCache::new();
    let added = cache.fill(&[-7, -23, -39, -52, -163])?;
    cache.save(&path)?;
    println!(
        "stored {added} class numbers:\n{}",
        std::fs::read_to_string(&path)?
    );

    let cfg = RunConfig {
        cache_path: Some(path.clone()),
        ..RunConfig::default()
    };
    run_range(5, 2_000, &cfg)?;
    let cache = ClassNumberCache::load(&path)?;
    println!("after a run over [5, 2000): {} entries", cache.len());
    Ok(())
}
