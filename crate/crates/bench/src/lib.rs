//! Inputs shared by the benchmarks.

use linksig_core::num_bigint::BigInt;
use linksig_core::SeifertMatrix;

/// Grows `s` by `steps` row extensions with a deterministic, non-trivial
/// extension vector. The result is S-equivalent to `s`.
pub fn grown(s: &SeifertMatrix, steps: usize) -> SeifertMatrix {
    let mut cur = s.clone();
    for k in 0..steps {
        let xi: Vec<BigInt> = (0..cur.dim())
            .map(|i| BigInt::from(((i * 7 + k * 3) % 5) as i64 - 2))
            .collect();
        cur = cur
            .row_extension(&xi)
            .expect("extension vector has matching length");
    }
    cur
}
