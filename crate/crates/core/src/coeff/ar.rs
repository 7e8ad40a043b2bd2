use crate::kernel::{int, Rational};
use crate::{Error, Result};

/// The truncated algebra `𝔞_r = 𝔙₊ / 𝔙₊^{(r)}` with basis `d̄_0, …, d̄_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArDescriptor {
    pub r: usize,
}

impl ArDescriptor {
    pub fn new(r: usize) -> Self {
        Self { r }
    }

    pub fn dim(&self) -> usize {
        self.r + 1
    }

    pub fn bracket(&self, i: usize, j: usize) -> Result<Option<(Rational, usize)>> {
        ar_bracket(i, j, self.r)
    }
}

/// `[d̄_i, d̄_j]` in `𝔞_r` as `(coefficient, index)`, or `None` when the
/// bracket is zero (diagonal, or `i + j > r`).
pub fn ar_bracket(i: usize, j: usize, r: usize) -> Result<Option<(Rational, usize)>> {
    for idx in [i, j] {
        if idx > r {
            return Err(Error::IndexOutOfRange {
                index: idx,
                rank: r,
            });
        }
    }
    if i + j > r || i == j {
        return Ok(None);
    }
    Ok(Some((int(j as i64 - i as i64), i + j)))
}
