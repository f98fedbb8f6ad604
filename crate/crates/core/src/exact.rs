//! Exact rational linear algebra.
//!
//! Everything here works over `BigRational`; there is no floating point
//! anywhere in the crate. The two workhorses are [`SymmetricForm::signature`],
//! which diagonalises a symmetric form by congruence, and [`kernel_basis`],
//! which returns an integral basis of the null space of a rational matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always kept in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Shorthand for `n / d` as a [`Rational`].
///
/// Panics if `d == 0`.
pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `sign(x)` with `sign(0) = 0`.
pub fn sign<T: Signed>(x: &T) -> i64 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Counts of positive, negative and null directions of a real symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SignatureTriple {
    pub positive: usize,
    pub negative: usize,
    pub null: usize,
}

impl SignatureTriple {
    pub fn new(positive: usize, negative: usize, null: usize) -> Self {
        Self {
            positive,
            negative,
            null,
        }
    }

    /// `positive - negative`.
    pub fn value(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.null
    }
}

impl std::ops::Add for SignatureTriple {
    type Output = SignatureTriple;

    fn add(self, rhs: Self) -> Self {
        SignatureTriple::new(
            self.positive + rhs.positive,
            self.negative + rhs.negative,
            self.null + rhs.null,
        )
    }
}

/// A symmetric bilinear form given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricForm {
    entries: Vec<Vec<Rational>>,
}

impl SymmetricForm {
    /// Builds a form, checking the matrix is square and symmetric.
    pub fn new(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: format!("{n} columns"),
                    found: format!("{} in row {i}", row.len()),
                });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            entries: vec![vec![Rational::zero(); dim]; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &SymmetricForm) -> SymmetricForm {
        let (n, m) = (self.dim(), other.dim());
        let mut entries = vec![vec![Rational::zero(); n + m]; n + m];
        for i in 0..n {
            entries[i][..n].clone_from_slice(&self.entries[i]);
        }
        for i in 0..m {
            entries[n + i][n..].clone_from_slice(&other.entries[i]);
        }
        SymmetricForm { entries }
    }

    /// The congruent form `Pᵀ M P` for a `dim × k` matrix `P`.
    pub fn congruent(&self, p: &[Vec<Rational>]) -> Result<SymmetricForm> {
        let n = self.dim();
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                expected: format!("{n} rows"),
                found: format!("{}", p.len()),
            });
        }
        let k = p.first().map_or(0, Vec::len);
        let mp: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        (0..n).fold(Rational::zero(), |acc, l| {
                            acc + &self.entries[i][l] * &p[l][j]
                        })
                    })
                    .collect()
            })
            .collect();
        let entries = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| (0..n).fold(Rational::zero(), |acc, l| acc + &p[l][i] * &mp[l][j]))
                    .collect()
            })
            .collect();
        SymmetricForm::new(entries)
    }

    /// Sylvester signature by symmetric Gaussian congruence.
    ///
    /// A nonzero diagonal pivot is eliminated whenever one exists. If the
    /// active block has zero diagonal but a nonzero entry `b` at `(i, j)`, the
    /// hyperbolic block `[[0, b], [b, 0]]` is split off, contributing one
    /// positive and one negative direction.
    pub fn signature(&self) -> SignatureTriple {
        let mut m = self.entries.clone();
        let mut active: Vec<usize> = (0..self.dim()).collect();
        let mut out = SignatureTriple::default();

        while !active.is_empty() {
            if let Some(pos) = active.iter().position(|&i| !m[i][i].is_zero()) {
                let p = active.swap_remove(pos);
                let d = m[p][p].clone();
                if d.is_positive() {
                    out.positive += 1;
                } else {
                    out.negative += 1;
                }
                for &k in &active {
                    if m[k][p].is_zero() {
                        continue;
                    }
                    let f = &m[k][p] / &d;
                    for &l in &active {
                        let delta = &f * &m[p][l];
                        m[k][l] -= delta;
                    }
                }
                continue;
            }

            let pair = active.iter().enumerate().find_map(|(a, &i)| {
                active[a + 1..]
                    .iter()
                    .position(|&j| !m[i][j].is_zero())
                    .map(|b| (a, a + 1 + b))
            });
            let Some((ai, aj)) = pair else {
                out.null += active.len();
                break;
            };
            let (i, j) = (active[ai], active[aj]);
            let b = m[i][j].clone();
            // remove the larger position first so the smaller stays valid
            active.swap_remove(aj);
            active.swap_remove(ai);
            out.positive += 1;
            out.negative += 1;
            let rows: Vec<(usize, Rational, Rational)> = active
                .iter()
                .map(|&k| (k, m[k][i].clone(), m[k][j].clone()))
                .collect();
            for (k, ki, kj) in &rows {
                for (l, li, lj) in &rows {
                    let delta = (ki * lj + kj * li) / &b;
                    m[*k][*l] -= delta;
                }
            }
        }
        out
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
fn row_reduce(m: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in c..cols {
                    let delta = &f * &m[r][k];
                    m[i][k] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn check_width(m: &[Vec<Rational>], cols: usize) {
    for row in m {
        assert_eq!(row.len(), cols, "ragged matrix row");
    }
}

pub fn rank(m: &[Vec<Rational>], cols: usize) -> usize {
    check_width(m, cols);
    let mut work = m.to_vec();
    row_reduce(&mut work, cols).len()
}

/// Integral basis of `{ v : M v = 0 }` for a `rows × cols` rational matrix.
///
/// Each vector is the rational null vector scaled by the lcm of its
/// denominators and divided by the gcd of its entries. Panics on ragged input.
pub fn kernel_basis(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<BigInt>> {
    check_width(m, cols);
    let mut work = m.to_vec();
    let pivots = row_reduce(&mut work, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();

    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -work[r][f].clone();
            }
            clear_denominators(&v)
        })
        .collect()
}

/// Primitive integer vector proportional to `v`.
pub fn clear_denominators(v: &[Rational]) -> Vec<BigInt> {
    let l = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

pub(crate) fn to_rational_rows(m: &[Vec<BigInt>]) -> Vec<Vec<Rational>> {
    m.iter()
        .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    fn apply(m: &[Vec<Rational>], v: &[BigInt]) -> Vec<Rational> {
        m.iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * Rational::from_integer(b.clone()))
            })
            .collect()
    }

    #[test]
    fn zero_form_is_null() {
        assert_eq!(SymmetricForm::zero(3).signature(), SignatureTriple::new(0, 0, 3));
    }

    #[test]
    fn diagonal_signs() {
        let f = SymmetricForm::from_integers(&[vec![2, 0], vec![0, -3]]).unwrap();
        assert_eq!(f.signature(), SignatureTriple::new(1, 1, 0));
    }

    #[test]
    fn sigma_matrix_of_minus_identity_case() {
        // [[-2c, a-d], [a-d, 2b]] at (a, b, c, d) = (0, 1, -1, 0)
        let f = SymmetricForm::from_integers(&[vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(f.signature(), SignatureTriple::new(2, 0, 0));
    }

    #[test]
    fn hyperbolic_block() {
        let f = SymmetricForm::from_integers(&[vec![0, 3, 1], vec![3, 0, 0], vec![1, 0, 0]]).unwrap();
        let s = f.signature();
        assert_eq!(s, SignatureTriple::new(1, 1, 1));
        let f = SymmetricForm::from_integers(&[
            vec![0, 1, 0, 0],
            vec![1, 0, 0, 0],
            vec![0, 0, 0, -2],
            vec![0, 0, -2, 0],
        ])
        .unwrap();
        assert_eq!(f.signature(), SignatureTriple::new(2, 2, 0));
    }

    #[test]
    fn rank_deficient_form() {
        // rank 1, positive
        let f = SymmetricForm::from_integers(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(f.signature(), SignatureTriple::new(1, 0, 1));
    }

    #[test]
    fn non_symmetric_rejected() {
        let err = SymmetricForm::from_integers(&[vec![1, 2], vec![3, 4]]).unwrap_err();
        assert_eq!(err, Error::NotSymmetric { row: 0, col: 1 });
        assert!(SymmetricForm::from_integers(&[vec![1, 2]]).is_err());
    }

    #[test]
    fn direct_sum_adds() {
        let a = SymmetricForm::from_integers(&[vec![0, 1], vec![1, 0]]).unwrap();
        let b = SymmetricForm::from_integers(&[vec![-5]]).unwrap();
        assert_eq!(a.direct_sum(&b).signature(), a.signature() + b.signature());
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert!(kernel_basis(&q(&[&[1, 0], &[0, 1]]), 2).is_empty());
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let k = kernel_basis(&q(&[&[0, 0], &[0, 0]]), 2);
        assert_eq!(k.len(), 2);
        assert_eq!(rank(&to_rational_rows(&k), 2), 2);
    }

    #[test]
    fn kernel_single_relation() {
        let k = kernel_basis(&q(&[&[1, 1]]), 2);
        assert_eq!(k, vec![vec![BigInt::from(-1), BigInt::from(1)]]);
    }

    #[test]
    fn kernel_vectors_are_integral_and_annihilated() {
        let m: Vec<Vec<Rational>> = vec![
            vec![rational(1, 2), rational(1, 3), int(0), int(1)],
            vec![int(1), rational(2, 3), int(0), int(2)],
        ];
        let k = kernel_basis(&m, 4);
        assert_eq!(k.len(), 4 - rank(&m, 4));
        for v in &k {
            assert!(apply(&m, v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn sign_of_zero_is_zero() {
        assert_eq!(sign(&BigInt::zero()), 0);
        assert_eq!(sign(&BigInt::from(-7)), -1);
        assert_eq!(sign(&int(3)), 1);
    }
}
