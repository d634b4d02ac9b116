//! Finite-type Cartan data.
//!
//! Roots are numbered from 1 in the order the matrix rows are given. The
//! builtin tables use the orderings below; `d` is the minimal symmetrizer.
//!
//! | type | matrix                      | d         |
//! |------|-----------------------------|-----------|
//! | A2   | `[[2,-1],[-1,2]]`           | `(1,1)`   |
//! | B2   | `[[2,-1],[-2,2]]`           | `(2,1)`   |
//! | C2   | `[[2,-2],[-1,2]]`           | `(1,2)`   |
//! | G2   | `[[2,-1],[-3,2]]`           | `(3,1)`   |

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::CartanError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'A' => Some(Series::A),
            'B' => Some(Series::B),
            'C' => Some(Series::C),
            'D' => Some(Series::D),
            'G' => Some(Series::G),
            _ => None,
        }
    }
}

/// A symmetrizable Cartan matrix with its symmetrizing factors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CartanData {
    matrix: Vec<Vec<i32>>,
    symmetrizers: Vec<u32>,
}

impl CartanData {
    /// Validates and wraps a user-supplied matrix.
    pub fn new(matrix: Vec<Vec<i32>>, symmetrizers: Vec<u32>) -> Result<Self, CartanError> {
        let r = matrix.len();
        if r == 0 || symmetrizers.len() != r || matrix.iter().any(|row| row.len() != r) {
            return Err(CartanError::Shape(r));
        }
        for &d in &symmetrizers {
            if !(1..=3).contains(&d) {
                return Err(CartanError::Symmetrizer(d));
            }
        }
        for a in 0..r {
            if matrix[a][a] != 2 {
                return Err(CartanError::Diagonal(a + 1));
            }
            for b in 0..r {
                if a == b {
                    continue;
                }
                if matrix[a][b] > 0 {
                    return Err(CartanError::PositiveOffDiagonal(a + 1, b + 1));
                }
                if (matrix[a][b] == 0) != (matrix[b][a] == 0) {
                    return Err(CartanError::ZeroPattern(a + 1, b + 1));
                }
                if symmetrizers[a] as i32 * matrix[a][b] != symmetrizers[b] as i32 * matrix[b][a] {
                    return Err(CartanError::NotSymmetrizable(a + 1, b + 1));
                }
            }
        }
        Ok(CartanData {
            matrix,
            symmetrizers,
        })
    }

    /// Standard finite-type matrix for `series` and `rank`.
    pub fn builtin(series: Series, rank: usize) -> Result<Self, CartanError> {
        let invalid = CartanError::InvalidType {
            series: series.letter(),
            rank,
        };
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::G => rank == 2,
        };
        if !ok {
            return Err(invalid);
        }
        let mut m = vec![vec![0i32; rank]; rank];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        let chain = |m: &mut Vec<Vec<i32>>, upto: usize| {
            for i in 0..upto.saturating_sub(1) {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        };
        let d = match series {
            Series::A => {
                chain(&mut m, rank);
                vec![1; rank]
            }
            Series::B => {
                chain(&mut m, rank);
                m[rank - 1][rank - 2] = -2;
                let mut d = vec![2; rank];
                d[rank - 1] = 1;
                d
            }
            Series::C => {
                chain(&mut m, rank);
                m[rank - 2][rank - 1] = -2;
                let mut d = vec![1; rank];
                d[rank - 1] = 2;
                d
            }
            Series::D => {
                // chain 1..n-1, with n attached to n-2
                chain(&mut m, rank - 1);
                m[rank - 1][rank - 3] = -1;
                m[rank - 3][rank - 1] = -1;
                vec![1; rank]
            }
            Series::G => {
                m[0][1] = -1;
                m[1][0] = -3;
                vec![3, 1]
            }
        };
        Self::new(m, d)
    }

    /// Block-diagonal sum, e.g. `A1 x A1`.
    pub fn direct_sum(&self, other: &CartanData) -> CartanData {
        let (r1, r2) = (self.rank(), other.rank());
        let mut m = vec![vec![0i32; r1 + r2]; r1 + r2];
        for (row, src) in m.iter_mut().zip(&self.matrix) {
            row[..r1].copy_from_slice(src);
        }
        for (row, src) in m[r1..].iter_mut().zip(&other.matrix) {
            row[r1..].copy_from_slice(src);
        }
        let mut d = self.symmetrizers.clone();
        d.extend_from_slice(&other.symmetrizers);
        CartanData {
            matrix: m,
            symmetrizers: d,
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.matrix
    }

    pub fn symmetrizers(&self) -> &[u32] {
        &self.symmetrizers
    }

    fn check(&self, alpha: usize) -> Result<usize, CartanError> {
        if alpha == 0 || alpha > self.rank() {
            Err(CartanError::IndexOutOfRange(alpha, self.rank()))
        } else {
            Ok(alpha - 1)
        }
    }

    /// `a_(alpha,beta)`, 1-based.
    pub fn entry(&self, alpha: usize, beta: usize) -> Result<i32, CartanError> {
        Ok(self.matrix[self.check(alpha)?][self.check(beta)?])
    }

    /// `d_alpha`, 1-based.
    pub fn symmetrizer(&self, alpha: usize) -> Result<u32, CartanError> {
        Ok(self.symmetrizers[self.check(alpha)?])
    }

    /// The symmetric pairing `(alpha, beta) = d_alpha a_(alpha,beta)`.
    pub fn pairing(&self, alpha: usize, beta: usize) -> Result<i32, CartanError> {
        let (a, b) = (self.check(alpha)?, self.check(beta)?);
        Ok(self.symmetrizers[a] as i32 * self.matrix[a][b])
    }
}

impl fmt::Debug for CartanData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CartanData")
            .field("matrix", &self.matrix)
            .field("symmetrizers", &self.symmetrizers)
            .finish()
    }
}
