//! Shared inputs for the engine benchmarks: deterministic matrix generation
//! and the standard session setup, kept out of the bench harness so the
//! benches stay declarative.

use num_bigint::BigInt;

use herbert_core::engine::Engine;
use herbert_core::matrix::IntMatrix;

/// Splitmix-style generator; good enough to produce stable bench inputs.
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// A deterministic `rows × cols` matrix with entries in `[−bound, bound]`.
pub fn random_matrix(rows: usize, cols: usize, bound: i64, seed: u64) -> IntMatrix {
    let mut state = seed;
    IntMatrix::from_fn(rows, cols, |_, _| {
        let span = (2 * bound + 1) as u64;
        BigInt::from((splitmix64(&mut state) % span) as i64 - bound)
    })
}

/// A cache-less engine with the default pivot seed, so every bench measures
/// real work instead of disk reads.
pub fn bench_engine() -> Engine {
    Engine::new(None, 0)
}
