//! Exact matrix rank over Q and over prime fields.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank over Q by fraction-free (Bareiss) elimination.
///
/// Runs in `i64` with checked arithmetic and restarts in arbitrary precision
/// if an intermediate minor overflows.
pub fn rank_rational(entries: &[i64], rows: usize, cols: usize) -> usize {
    debug_assert_eq!(entries.len(), rows * cols);
    match bareiss_i64(entries.to_vec(), rows, cols) {
        Some(rank) => rank,
        None => bareiss_big(entries, rows, cols),
    }
}

fn bareiss_i64(mut a: Vec<i64>, rows: usize, cols: usize) -> Option<usize> {
    let mut rank = 0;
    let mut prev: i64 = 1;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if p != rank {
            for j in col..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let pivot = a[rank * cols + col];
        for r in rank + 1..rows {
            let lead = a[r * cols + col];
            for j in col + 1..cols {
                let num = pivot
                    .checked_mul(a[r * cols + j])?
                    .checked_sub(lead.checked_mul(a[rank * cols + j])?)?;
                a[r * cols + j] = num / prev;
            }
            a[r * cols + col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(entries: &[i64], rows: usize, cols: usize) -> usize {
    let mut a: Vec<BigInt> = entries.iter().map(|&x| BigInt::from(x)).collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in col..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let pivot = a[rank * cols + col].clone();
        for r in rank + 1..rows {
            let lead = a[r * cols + col].clone();
            for j in col + 1..cols {
                let num = &pivot * &a[r * cols + j] - &lead * &a[rank * cols + j];
                a[r * cols + j] = num / &prev;
            }
            a[r * cols + col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank over GF(p) for an odd or even prime `p < 2^32`.
pub fn rank_mod_p(entries: &[i64], rows: usize, cols: usize, p: u32) -> usize {
    if p == 2 {
        return rank_gf2(entries, rows, cols);
    }
    let p = u64::from(p);
    let mut a: Vec<u64> = entries
        .iter()
        .map(|&x| x.rem_euclid(p as i64) as u64)
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if piv != rank {
            for j in col..cols {
                a.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = pow_mod(a[rank * cols + col], p - 2, p);
        for j in col..cols {
            a[rank * cols + j] = a[rank * cols + j] * inv % p;
        }
        for r in rank + 1..rows {
            let factor = a[r * cols + col];
            if factor == 0 {
                continue;
            }
            for j in col..cols {
                let sub = factor * a[rank * cols + j] % p;
                a[r * cols + j] = (a[r * cols + j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// GF(2) rank with rows packed into 64-bit words.
pub fn rank_gf2(entries: &[i64], rows: usize, cols: usize) -> usize {
    let words = cols.div_ceil(64);
    let mut packed: Vec<Vec<u64>> = (0..rows)
        .map(|r| {
            let mut row = vec![0u64; words];
            for c in 0..cols {
                if entries[r * cols + c] & 1 != 0 {
                    row[c / 64] |= 1 << (c % 64);
                }
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(piv) = (rank..rows).find(|&r| packed[r][w] & bit != 0) else {
            continue;
        };
        packed.swap(piv, rank);
        let (head, tail) = packed.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if row[w] & bit != 0 {
                for (x, y) in row.iter_mut().zip(pivot_row) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = u64::from(p);
    (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}
