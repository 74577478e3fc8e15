//! Link determinants from the Goeritz matrix of a closed braid diagram.
//!
//! Columns `0..=m` are the regions between consecutive strands, `m` the
//! strand count. Even columns are white. A crossing `s_j` with `j` odd joins
//! the white columns `j - 1` and `j + 1`; with `j` even it cuts column `j`
//! into pieces, one per `s_j` letter around the closure, and joins the two
//! pieces it separates.

use std::collections::HashMap;

/// `|det|` of the reduced Goeritz matrix. `letters` are `(index, +-1)`.
pub fn goeritz_determinant(strands: usize, letters: &[(usize, i64)]) -> i128 {
    let mut counts = vec![0usize; strands + 1];
    for &(j, _) in letters {
        counts[j] += 1;
    }
    let mut node: HashMap<(usize, usize), usize> = HashMap::new();
    for col in (0..=strands).step_by(2) {
        for piece in 0..counts[col].max(1) {
            let id = node.len();
            node.insert((col, piece), id);
        }
    }
    let piece_at = |col: usize, seen: &[usize]| -> usize {
        if counts[col] == 0 {
            0
        } else {
            seen[col] % counts[col]
        }
    };

    let size = node.len();
    let mut g = vec![vec![0i128; size]; size];
    let mut seen = vec![0usize; strands + 1];
    for &(j, e) in letters {
        let sign = e.signum() as i128;
        let (u, v, eta) = if j % 2 == 1 {
            let u = node[&(j - 1, piece_at(j - 1, &seen))];
            let v = node[&(j + 1, piece_at(j + 1, &seen))];
            (u, v, sign)
        } else {
            let c = counts[j];
            let u = node[&(j, seen[j] % c)];
            let v = node[&(j, (seen[j] + 1) % c)];
            (u, v, -sign)
        };
        if j % 2 == 0 {
            seen[j] += 1;
        }
        if u != v {
            g[u][v] -= eta;
            g[v][u] -= eta;
        }
    }
    for (i, row) in g.iter_mut().enumerate() {
        let off: i128 = row
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, v)| v)
            .sum();
        row[i] = -off;
    }
    let reduced: Vec<Vec<i128>> = g[1..].iter().map(|r| r[1..].to_vec()).collect();
    determinant(reduced).abs()
}

fn determinant(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}
