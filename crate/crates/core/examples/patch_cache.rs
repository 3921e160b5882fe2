//! Generate graphs by target name, with an on-disk cache.

use cutlattice::cli::{generate, Cache, GenOptions};
use cutlattice::skeletons::DEFAULT_VERTEX_CAP;

pub fn main() {
    let dir = std::env::temp_dir().join(format!("cutlattice-example-{}", std::process::id()));
    let cache = Cache::new(&dir);
    let opts = GenOptions { radius: 2, margin: None, vertex_cap: DEFAULT_VERTEX_CAP };
    let (first, hit) = cache.load_or_generate("{5,4}", opts).unwrap();
    println!("first call hit: {hit}, {} bytes", first.len());
    let (second, hit) = cache.load_or_generate("{5,4}", opts).unwrap();
    println!("second call hit: {hit}, same text: {}", first == second);
    println!("fresh generation agrees: {}", generate("{5,4}", opts).unwrap().to_json() == first);
    std::fs::remove_dir_all(&dir).unwrap();
}
