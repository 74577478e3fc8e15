//! Inputs shared by the benchmarks.

/// Reduced slopes `p/q` with `q` in `1..=max` and `p/q < bound`, in a fixed
/// order.
pub fn slopes_below(bound: i64, max: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for q in 1..=max {
        for p in -max..=max {
            if gcd(p, q) == 1 && p < bound * q {
                out.push((p, q));
            }
        }
    }
    out
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Text of the four-strand braid whose closure double-covers the family's
/// open book, raised to the power `n`.
pub fn family_braid(n: u32) -> String {
    format!("( s1 s2^-1 s3 ( s1 s2 )^-6 )^{n}")
}
