use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Signed Stirling numbers of the first kind `s(r, k)` for `r ≤ max`.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(max: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for r in 0..max {
            let prev = &rows[r];
            let row: Vec<BigInt> = (0..=r + 1)
                .map(|k| {
                    let left = if k >= 1 {
                        prev[k - 1].clone()
                    } else {
                        BigInt::zero()
                    };
                    let right = prev.get(k).cloned().unwrap_or_default();
                    left - BigInt::from(r) * right
                })
                .collect();
            rows.push(row);
        }
        Self { rows }
    }

    pub fn max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `s(r, k)`; zero outside `0 ≤ k ≤ r`. Panics if `r` exceeds the table.
    pub fn get(&self, r: usize, k: usize) -> BigInt {
        self.rows[r].get(k).cloned().unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let s = StirlingTable::new(5);
        let row4: Vec<i64> = (0..=4).map(|k| s.get(4, k).try_into().unwrap()).collect();
        assert_eq!(row4, vec![0, -6, 11, -6, 1]);
        assert_eq!(s.get(0, 0), BigInt::one());
        assert_eq!(s.get(3, 7), BigInt::zero());
    }

    #[test]
    fn rows_are_falling_factorial_coefficients() {
        // Σ_k s(r,k) x^k = x(x−1)…(x−r+1)
        let s = StirlingTable::new(8);
        for r in 0..=8usize {
            for x in -3i64..=10 {
                let lhs: BigInt = (0..=r)
                    .map(|k| s.get(r, k) * BigInt::from(x).pow(k as u32))
                    .sum();
                let rhs: BigInt = (0..r as i64).map(|i| BigInt::from(x - i)).product();
                assert_eq!(lhs, rhs, "r={r} x={x}");
            }
        }
    }
}
