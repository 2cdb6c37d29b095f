//! Quantifier elimination for linear systems over GF(2).
//!
//! Variables are eliminated innermost first. Projecting out an existential
//! variable is one pivot step of Gaussian elimination. Once every inner
//! variable is gone the system is a linear system over the outer ones, and a
//! universal variable with a nonzero coefficient in any remaining equation
//! makes it fail for one of its two values.

use super::PrefixInfo;

struct Row {
    bits: Vec<u64>,
    parity: bool,
}

impl Row {
    fn has(&self, v: usize) -> bool {
        (self.bits[v / 64] >> (v % 64)) & 1 == 1
    }

    fn add(&mut self, o: &Row) {
        for (a, b) in self.bits.iter_mut().zip(&o.bits) {
            *a ^= b;
        }
        self.parity ^= o.parity;
    }

    fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }
}

pub(crate) fn solve(info: &PrefixInfo, equations: &[(Vec<usize>, bool)]) -> bool {
    let n = info.len();
    let words = n.div_ceil(64).max(1);
    let mut rows: Vec<Row> = equations
        .iter()
        .map(|(vars, parity)| {
            let mut bits = vec![0u64; words];
            for &v in vars {
                bits[v / 64] ^= 1 << (v % 64);
            }
            Row {
                bits,
                parity: *parity,
            }
        })
        .collect();

    for v in (0..n).rev() {
        let Some(p) = rows.iter().position(|r| r.has(v)) else {
            continue;
        };
        if info.is_universal(v) {
            return false;
        }
        let pivot = rows.swap_remove(p);
        for r in rows.iter_mut().filter(|r| r.has(v)) {
            r.add(&pivot);
        }
        if rows.iter().any(|r| r.is_zero() && r.parity) {
            return false;
        }
        rows.retain(|r| !r.is_zero());
    }
    rows.iter().all(|r| !r.parity)
}
