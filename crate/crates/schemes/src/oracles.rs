//! Independent reference implementations used to cross-check the scheme
//! gallery. Everything here is written in plain first-order style (loops,
//! arrays, direct recursion) so that agreement with the scheme-based
//! versions is meaningful evidence, not a tautology.

use std::collections::HashMap;

use crate::fix::Mu;
use crate::functors::{TreeF, TreeSig};

/// Sorted copy via the standard library sort.
pub fn sort_oracle(xs: &[i64]) -> Vec<i64> {
    let mut v = xs.to_vec();
    v.sort();
    v
}

/// Longest strictly increasing subsequence length by trying all `2^n`
/// subsequences. Exponential — keep `n` small.
pub fn lis_brute(xs: &[i64]) -> usize {
    let n = xs.len();
    assert!(n <= 20, "brute-force LIS is exponential");
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let mut prev: Option<i64> = None;
        let mut len = 0;
        let mut ok = true;
        for (i, &x) in xs.iter().enumerate() {
            if mask & (1 << i) == 0 {
                continue;
            }
            if let Some(p) = prev {
                if x <= p {
                    ok = false;
                    break;
                }
            }
            prev = Some(x);
            len += 1;
        }
        if ok && len > best {
            best = len;
        }
    }
    best
}

/// Longest common subsequence length by the classic quadratic table.
pub fn lcs_dp(a: &[u8], b: &[u8]) -> usize {
    let (n, m) = (a.len(), b.len());
    let mut table = vec![vec![0usize; m + 1]; n + 1];
    for i in (0..n).rev() {
        for j in (0..m).rev() {
            table[i][j] = if a[i] == b[j] {
                table[i + 1][j + 1] + 1
            } else {
                table[i + 1][j].max(table[i][j + 1])
            };
        }
    }
    table[0][0]
}

/// Run-length decoding by direct expansion.
pub fn rld_expand(pairs: &[(u64, char)]) -> String {
    let mut out = String::new();
    for &(n, c) in pairs {
        for _ in 0..n {
            out.push(c);
        }
    }
    out
}

/// Iterative Fibonacci: `fib(0) = 0`, `fib(1) = 1`.
pub fn fib_iter(n: u64) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        let next = a + b;
        a = b;
        b = next;
    }
    a
}

/// Iterative factorial: `factorial(0) = 1`.
pub fn factorial_iter(n: u64) -> u64 {
    (1..=n).product()
}

/// Ackermann by memoized recurrence. Only sensible for small `m`.
pub fn ack_oracle(m: u64, n: u64) -> u64 {
    fn go(m: u64, n: u64, memo: &mut HashMap<(u64, u64), u64>) -> u64 {
        if let Some(&v) = memo.get(&(m, n)) {
            return v;
        }
        let v = if m == 0 {
            n + 1
        } else if n == 0 {
            go(m - 1, 1, memo)
        } else {
            let inner = go(m, n - 1, memo);
            go(m - 1, inner, memo)
        };
        memo.insert((m, n), v);
        v
    }
    go(m, n, &mut HashMap::new())
}

/// Merge two sorted sequences by the textbook two-finger walk.
pub fn merge_oracle(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Word count via the standard whitespace splitter.
pub fn wc_oracle(s: &str) -> usize {
    s.split_whitespace().count()
}

/// Is the tree perfect (all leaves at the same depth, every node with either
/// zero or two children)? Direct recursion returning the height on success.
pub fn perfect_oracle(t: &Mu<TreeSig<i64>>) -> bool {
    fn height_if_perfect(t: &Mu<TreeSig<i64>>) -> Option<u64> {
        match t.layer() {
            TreeF::Empty => Some(0),
            TreeF::Node(l, _, r) => {
                let hl = height_if_perfect(l)?;
                let hr = height_if_perfect(r)?;
                (hl == hr).then_some(hl + 1)
            }
        }
    }
    height_if_perfect(t).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_known_values() {
        assert_eq!(lis_brute(&[1, 6, -5, 4, 2, 3, 9]), 4);
        assert_eq!(lcs_dp(b"abcbdab", b"bdcaba"), 4);
        assert_eq!(rld_expand(&[(3, 'a'), (1, 'b')]), "aaab");
        assert_eq!(fib_iter(10), 55);
        assert_eq!(factorial_iter(5), 120);
        assert_eq!(ack_oracle(2, 3), 9);
        assert_eq!(ack_oracle(3, 3), 61);
        assert_eq!(merge_oracle(&[1, 3], &[2, 4]), vec![1, 2, 3, 4]);
        assert_eq!(wc_oracle("  two  words \n"), 2);
    }
}
