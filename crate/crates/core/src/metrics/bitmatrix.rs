use rayon::prelude::*;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Boolean matrix with rows packed into 64-bit words.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|j| if self.get(i, j) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(WORD);
        BitMatrix {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Matrix with entry `(i, j)` equal to `f(i, j)`.
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool + Sync) -> Self {
        let mut m = Self::zeros(rows, cols);
        let stride = m.stride;
        if stride > 0 {
            m.words.par_chunks_mut(stride).enumerate().for_each(|(i, row)| {
                for j in 0..cols {
                    if f(i, j) {
                        row[j / WORD] |= 1 << (j % WORD);
                    }
                }
            });
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.words[i * self.stride + j / WORD] >> (j % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let w = &mut self.words[i * self.stride + j / WORD];
        if value {
            *w |= 1 << (j % WORD);
        } else {
            *w &= !(1 << (j % WORD));
        }
    }

    fn row_words(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }

    /// Column indices of the set bits of row `i`, ascending.
    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row_words(i).iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * WORD + t)
            })
        })
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Boolean product: bit `(i, j)` is set iff some `k` has `self[i,k]` and
    /// `other[k,j]`. Each set bit of a row ORs one packed row of `other`.
    pub fn product(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        let stride = out.stride;
        if stride > 0 {
            out.words.par_chunks_mut(stride).enumerate().for_each(|(i, acc)| {
                for k in self.row_ones(i) {
                    for (a, b) in acc.iter_mut().zip(other.row_words(k)) {
                        *a |= *b;
                    }
                }
            });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(a: &BitMatrix, b: &BitMatrix) -> BitMatrix {
        BitMatrix::from_fn(a.rows(), b.cols(), |i, j| (0..a.cols()).any(|k| a.get(i, k) && b.get(k, j)))
    }

    #[test]
    fn identity_and_zero() {
        let x = BitMatrix::from_fn(70, 70, |i, j| (i * 7 + j * 3) % 5 == 0);
        assert_eq!(BitMatrix::identity(70).product(&x).unwrap(), x);
        assert_eq!(BitMatrix::zeros(70, 70).product(&x).unwrap(), BitMatrix::zeros(70, 70));
    }

    #[test]
    fn rectangular_against_naive() {
        let a = BitMatrix::from_fn(13, 130, |i, j| (i * 31 + j * 17) % 11 == 0);
        let b = BitMatrix::from_fn(130, 67, |i, j| (i * 5 + j * 13) % 7 == 0);
        assert_eq!(a.product(&b).unwrap(), naive(&a, &b));
        assert!(matches!(b.product(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn row_ones_lists_bits() {
        let mut m = BitMatrix::zeros(2, 200);
        for j in [0, 63, 64, 199] {
            m.set(1, j, true);
        }
        assert_eq!(m.row_ones(1).collect::<Vec<_>>(), vec![0, 63, 64, 199]);
        assert_eq!(m.row_ones(0).count(), 0);
        m.set(1, 63, false);
        assert_eq!(m.count_ones(), 3);
    }
}
