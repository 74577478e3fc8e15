#![allow(dead_code)]

pub mod goeritz;

use twistcalc::slope_calculus::Slope;
use twistcalc::surgery_twists::{twist_once, ContactSign};

/// Independent reduction oracle: twist along `floor(x) + 1` until the
/// meridian is reached. Returns the slopes visited.
pub fn greedy_trace(s: &Slope) -> Vec<Slope> {
    let mut out = vec![s.clone()];
    let mut cur = s.clone();
    while !cur.is_meridian() {
        let along = Slope::integer(cur.value().floor() + 1);
        cur = twist_once(&cur, &along, ContactSign::Plus);
        out.push(cur.clone());
        assert!(out.len() < 100_000, "greedy oracle did not terminate");
    }
    out
}

/// `(p, q)` pairs with `|p|, |q| <= bound`, `q > 0`, reduced.
pub fn reduced_pairs(bound: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for q in 1..=bound {
        for p in -bound..=bound {
            if num_integer::gcd(p, q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}
