//! Seifert matrices, S-equivalence moves, and linking matrices.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::hermitian::{symmetric_signature, InertiaTriple};
use crate::matrix::Matrix;
use crate::{Error, Result};

/// Pairwise linking numbers keyed by 1-based `(i, j)` with `i < j`.
pub type LinkingNumbers = BTreeMap<(usize, usize), BigInt>;

/// A square integer matrix together with the declared number of link
/// components. The matrix alone does not determine the component count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Matrix<BigInt>,
    components: usize,
    name: Option<String>,
}

impl SeifertMatrix {
    pub fn new(entries: Matrix<BigInt>, components: usize) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::NotSquare {
                rows: entries.rows(),
                cols: entries.cols(),
            });
        }
        if components == 0 {
            return Err(Error::ZeroComponents);
        }
        Ok(Self {
            entries,
            components,
            name: None,
        })
    }

    pub fn from_i64(rows: &[&[i64]], components: usize) -> Result<Self> {
        Self::new(Matrix::from_i64(rows)?, components)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn entries(&self) -> &Matrix<BigInt> {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// `S - S^T`, the intersection form.
    pub fn antisymmetric_part(&self) -> Matrix<BigInt> {
        &self.entries - &self.entries.transpose()
    }

    /// `S + S^T`.
    pub fn symmetric_part(&self) -> Matrix<BigInt> {
        &self.entries + &self.entries.transpose()
    }

    /// Dimension of `ker(S - S^T)`.
    pub fn boundary_nullity(&self) -> usize {
        self.antisymmetric_part().to_rational().nullity()
    }

    /// A Seifert matrix of an `r`-component link has `nullity(S - S^T) = r - 1`.
    /// Returns a message when the declared component count disagrees.
    pub fn consistency_warning(&self) -> Option<String> {
        let nullity = self.boundary_nullity();
        (nullity + 1 != self.components).then(|| {
            format!(
                "nullity of S - S^T is {nullity}, but {} components were declared (expected {})",
                self.components,
                self.components - 1
            )
        })
    }

    fn with_entries(&self, entries: Matrix<BigInt>) -> Self {
        Self {
            entries,
            components: self.components,
            name: self.name.clone(),
        }
    }

    /// Row extension
    ///
    /// ```text
    /// [ S  0  0 ]
    /// [ ξ  0  0 ]
    /// [ 0  1  0 ]
    /// ```
    pub fn row_extension(&self, xi: &[BigInt]) -> Result<Self> {
        let n = self.dim();
        if xi.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: xi.len(),
            });
        }
        let m = Matrix::from_fn(n + 2, n + 2, |i, j| match (i, j) {
            (i, j) if i < n && j < n => self.entries[(i, j)].clone(),
            (i, j) if i == n && j < n => xi[j].clone(),
            (i, j) if i == n + 1 && j == n => BigInt::one(),
            _ => BigInt::zero(),
        });
        Ok(self.with_entries(m))
    }

    /// Column extension, the transpose pattern of [`Self::row_extension`]:
    ///
    /// ```text
    /// [ S  ξ^T 0 ]
    /// [ 0  0   1 ]
    /// [ 0  0   0 ]
    /// ```
    pub fn column_extension(&self, xi: &[BigInt]) -> Result<Self> {
        let n = self.dim();
        if xi.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: xi.len(),
            });
        }
        let m = Matrix::from_fn(n + 2, n + 2, |i, j| match (i, j) {
            (i, j) if i < n && j < n => self.entries[(i, j)].clone(),
            (i, j) if i < n && j == n => xi[i].clone(),
            (i, j) if i == n && j == n + 1 => BigInt::one(),
            _ => BigInt::zero(),
        });
        Ok(self.with_entries(m))
    }

    /// Inverse of [`Self::row_extension`]. The last two rows and columns must
    /// match the extension pattern exactly.
    pub fn row_contraction(&self) -> Result<Self> {
        let n = self
            .dim()
            .checked_sub(2)
            .ok_or(Error::ContractionPattern("row"))?;
        let e = &self.entries;
        let ok = (0..n + 2).all(|i| {
            (n..n + 2).all(|j| {
                let want = i64::from(i == n + 1 && j == n);
                e[(i, j)] == BigInt::from(want)
            })
        }) && (0..n).all(|j| e[(n + 1, j)].is_zero());
        if !ok {
            return Err(Error::ContractionPattern("row"));
        }
        Ok(self.with_entries(e.principal_submatrix(&(0..n).collect::<Vec<_>>())))
    }

    /// Inverse of [`Self::column_extension`].
    pub fn column_contraction(&self) -> Result<Self> {
        self.transposed()
            .row_contraction()
            .map(|s| s.transposed())
            .map_err(|_| Error::ContractionPattern("column"))
    }

    /// The extension vector `ξ` of a matrix with the row-extension pattern.
    pub fn row_extension_vector(&self) -> Result<Vec<BigInt>> {
        self.row_contraction()?;
        let n = self.dim() - 2;
        Ok(self.entries.row(n)[..n].to_vec())
    }

    fn transposed(&self) -> Self {
        self.with_entries(self.entries.transpose())
    }

    /// `P^T S P` for a unimodular `P`.
    pub fn congruence(&self, p: &Matrix<BigInt>) -> Result<Self> {
        if !p.is_square() {
            return Err(Error::NotSquare {
                rows: p.rows(),
                cols: p.cols(),
            });
        }
        if p.rows() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: p.rows(),
            });
        }
        let det = p.determinant();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(Box::new(det)));
        }
        Ok(self.with_entries(&(&p.transpose() * &self.entries) * p))
    }
}

/// Symmetric `r × r` matrix with off-diagonal linking numbers and diagonal
/// entries making every row sum to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingMatrix {
    entries: Matrix<BigInt>,
}

impl LinkingMatrix {
    pub fn entries(&self) -> &Matrix<BigInt> {
        &self.entries
    }

    pub fn components(&self) -> usize {
        self.entries.rows()
    }

    pub fn inertia(&self) -> InertiaTriple {
        symmetric_signature(&self.entries.to_rational())
    }

    pub fn signature(&self) -> i64 {
        self.inertia().signature()
    }
}

/// Principal `(r-1) × (r-1)` minor of a linking matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallLinkingMatrix {
    entries: Matrix<BigInt>,
    removed_index: usize,
}

impl SmallLinkingMatrix {
    pub fn entries(&self) -> &Matrix<BigInt> {
        &self.entries
    }

    /// 1-based index of the deleted row and column.
    pub fn removed_index(&self) -> usize {
        self.removed_index
    }

    pub fn inertia(&self) -> InertiaTriple {
        symmetric_signature(&self.entries.to_rational())
    }

    pub fn signature(&self) -> i64 {
        self.inertia().signature()
    }
}

/// Builds the linking matrix from 1-based pairwise linking numbers. Missing
/// pairs count as zero.
pub fn linking_matrix(lk: &LinkingNumbers, r: usize) -> Result<LinkingMatrix> {
    if r == 0 {
        return Err(Error::ZeroComponents);
    }
    let mut m = Matrix::<BigInt>::zeros(r, r);
    for (&(i, j), v) in lk {
        if !(1 <= i && i < j && j <= r) {
            return Err(Error::LinkingKey {
                key: format!("{i},{j}"),
                reason: format!("need 1 <= i < j <= {r}"),
            });
        }
        m[(i - 1, j - 1)] = v.clone();
        m[(j - 1, i - 1)] = v.clone();
    }
    for i in 0..r {
        let off: BigInt = (0..r).filter(|&j| j != i).map(|j| m[(i, j)].clone()).sum();
        m[(i, i)] = -off;
    }
    Ok(LinkingMatrix { entries: m })
}

/// Deletes row and column `k` (1-based).
pub fn small_linking_matrix(a: &LinkingMatrix, k: usize) -> Result<SmallLinkingMatrix> {
    let r = a.components();
    if k == 0 || k > r {
        return Err(Error::IndexOutOfRange { index: k, len: r });
    }
    let keep: Vec<usize> = (0..r).filter(|&i| i != k - 1).collect();
    Ok(SmallLinkingMatrix {
        entries: a.entries.principal_submatrix(&keep),
        removed_index: k,
    })
}
