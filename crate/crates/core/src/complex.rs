//! Chain complexes of exact matrices and their homology dimensions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// A bounded chain complex `C_0 ← C_1 ← …` with `diffs[m]: C_{m+1} → C_m`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub field: Field,
    pub dims: Vec<usize>,
    pub diffs: Vec<Matrix>,
}

impl ChainComplex {
    /// Build and verify shapes and `d∘d = 0` exactly.
    pub fn new(field: Field, dims: Vec<usize>, diffs: Vec<Matrix>) -> Result<Self> {
        if diffs.len() + 1 != dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} spaces vs {} differentials",
                dims.len(),
                diffs.len()
            )));
        }
        for (m, d) in diffs.iter().enumerate() {
            if d.nrows() != dims[m] || d.ncols() != dims[m + 1] {
                return Err(Error::DimensionMismatch(format!(
                    "differential {} has shape {}×{}, expected {}×{}",
                    m + 1,
                    d.nrows(),
                    d.ncols(),
                    dims[m],
                    dims[m + 1]
                )));
            }
        }
        for m in 0..diffs.len().saturating_sub(1) {
            let composite = diffs[m].mul(&diffs[m + 1]);
            if composite.rank() != 0 {
                return Err(Error::Other(format!("d∘d ≠ 0 at degree {}", m + 2)));
            }
        }
        Ok(ChainComplex { field, dims, diffs })
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    /// Homology dimensions in degrees `0..=max_deg`; the top degree of the
    /// stored complex is treated as truncated, so ask one degree less than
    /// what was built.
    pub fn homology_dims(&self, max_deg: usize) -> Vec<usize> {
        assert!(max_deg < self.dims.len());
        let ranks: Vec<usize> = self.diffs.iter().map(|d| d.rank()).collect();
        (0..=max_deg)
            .map(|m| {
                let r_in = if m == 0 { 0 } else { ranks[m - 1] };
                let r_out = if m < ranks.len() { ranks[m] } else { 0 };
                self.dims[m] - r_in - r_out
            })
            .collect()
    }

    /// Euler characteristic of the stored complex.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(m, d)| if m % 2 == 0 { *d as i64 } else { -(*d as i64) })
            .sum()
    }
}

/// Homology dimensions per degree, with an exhaustion marker: when false,
/// degrees beyond the table may be nonzero (a search bound was hit).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyTable {
    pub dims: Vec<usize>,
    pub exhausted: bool,
}

impl HomologyTable {
    pub fn max_degree(&self) -> usize {
        self.dims.len() - 1
    }

    /// Degrees `from..` are all zero in the table.
    pub fn vanishes_from(&self, from: usize) -> bool {
        self.dims.iter().skip(from).all(|d| *d == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_nonzero_composite() {
        let f = Field::Rational;
        let id = Matrix::identity(f, 1);
        let err = ChainComplex::new(f, vec![1, 1, 1], vec![id.clone(), id]).unwrap_err();
        assert!(matches!(err, Error::Other(_)));
    }

    #[test]
    fn exact_complex_has_zero_euler_characteristic_and_homology() {
        let f = Field::Rational;
        // 0 -> k -> k -> 0 with the identity in the middle
        let c = ChainComplex::new(f, vec![1, 1], vec![Matrix::identity(f, 1)]).unwrap();
        assert_eq!(c.euler_characteristic(), 0);
        assert_eq!(c.homology_dims(0), vec![0]);
    }
}
