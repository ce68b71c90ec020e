//! Small combinatorial enumeration helpers shared across modules.

use alloc::vec::Vec;

/// All k-element subsets of `0..n`, each sorted ascending, in lexicographic
/// order. Intended for desk-scale n only.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k as isize - 1;
        while i >= 0 && cur[i as usize] == n - k + i as usize {
            i -= 1;
        }
        if i < 0 {
            return out;
        }
        let i = i as usize;
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
