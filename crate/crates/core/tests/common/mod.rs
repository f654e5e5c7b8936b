//! Reference computations that share no code with the library: plain part
//! vectors, the pentagonal recurrence, and the cell maps rewritten as
//! arithmetic on multiplicities.
#![allow(dead_code)]

use std::collections::BTreeMap;

/// p(0..=n) from Euler's pentagonal recurrence.
pub fn pentagonal_counts(n: usize) -> Vec<u64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for i in 1..=n {
        let mut sum = 0i64;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            sum += sign * p[i - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                sum += sign * p[i - g2];
            }
        }
        p[i] = sum;
    }
    p.into_iter().map(|v| v as u64).collect()
}

/// Every partition of `n` as a descending part list, by recursion on the
/// largest part.
pub fn brute_partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, max: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in (1..=max.min(rest)).rev() {
            prefix.push(first);
            go(rest - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn mults(parts: &[u64]) -> BTreeMap<u64, u64> {
    let mut m = BTreeMap::new();
    for &v in parts {
        *m.entry(v).or_insert(0) += 1;
    }
    m
}

pub fn to_parts(m: &BTreeMap<u64, u64>) -> Vec<u64> {
    let mut out: Vec<u64> = m
        .iter()
        .flat_map(|(&v, &c)| std::iter::repeat(v).take(c as usize))
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn odd_base(v: u64) -> (u64, u32) {
    let mut x = v;
    let mut j = 0;
    while x % 2 == 0 {
        x /= 2;
        j += 1;
    }
    (x, j)
}

/// Multiplicities of `x * 2^c`, grouped by odd base `x`, as dense vectors in `c`.
fn columns(parts: &[u64]) -> BTreeMap<u64, Vec<u64>> {
    let mut out: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for (v, c) in mults(parts) {
        let (x, j) = odd_base(v);
        let col = out.entry(x).or_default();
        if col.len() <= j as usize {
            col.resize(j as usize + 1, 0);
        }
        col[j as usize] = c;
    }
    out
}

fn from_columns(cols: BTreeMap<u64, Vec<u64>>) -> Vec<u64> {
    let mut m = BTreeMap::new();
    for (x, col) in cols {
        for (c, &count) in col.iter().enumerate() {
            if count > 0 {
                m.insert(x << c, count);
            }
        }
    }
    to_parts(&m)
}

fn bit(m: u64, i: usize) -> u64 {
    if i >= 64 { 0 } else { (m >> i) & 1 }
}

/// Even-parts map on multiplicities: m'_c = 2 m_{c+1} + bit_c(m_0).
pub fn thm3_arith(parts: &[u64]) -> Vec<u64> {
    let cols = columns(parts)
        .into_iter()
        .map(|(x, m)| {
            let get = |c: usize| m.get(c).copied().unwrap_or(0);
            let width = m.len().max(64 - get(0).leading_zeros() as usize) + 1;
            let new: Vec<u64> = (0..width).map(|c| 2 * get(c + 1) + bit(get(0), c)).collect();
            (x, new)
        })
        .collect();
    from_columns(cols)
}

/// Valuation map with the identity block on multiplicities:
/// m'_c = 2^p m_{c+p} + (m_c mod 2^p if c < p else sum_{r<p} bit_c(m_r) 2^r).
pub fn thm5_arith(parts: &[u64], p: usize) -> Vec<u64> {
    let cols = columns(parts)
        .into_iter()
        .map(|(x, m)| {
            let get = |c: usize| m.get(c).copied().unwrap_or(0);
            let width = m.len() + 64;
            let new: Vec<u64> = (0..width)
                .map(|c| {
                    let low = if c < p {
                        get(c) % (1 << p)
                    } else {
                        (0..p).map(|r| bit(get(r), c) << r).sum()
                    };
                    (get(c + p) << p) + low
                })
                .collect();
            (x, new)
        })
        .collect();
    from_columns(cols)
}

pub fn is_odd(parts: &[u64]) -> bool {
    parts.iter().all(|v| v % 2 == 1)
}

pub fn is_distinct(parts: &[u64]) -> bool {
    let m = mults(parts);
    m.len() == parts.len()
}
