//! Integer matrices and the integral symplectic group `Sp(2g; Z)`.
//!
//! Coordinates are taken in a symplectic basis `A_1..A_g, B_1..B_g` with
//! `⟨A_i, B_j⟩ = δ_ij`, and the pairing is `⟨u, v⟩ = uᵀ J v` for
//! `J = [[0, I_g], [-I_g, 0]]`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Handedness switch for Dehn twists.
///
/// The right-handed twist along a curve of class `v` acts on homology by
/// `x ↦ x + TWIST_SIGN · ⟨x, v⟩ · v`. With `-1`, the twist along `A_1` is
/// `[[1, 1], [0, 1]]` and along `B_1` is `[[1, 0], [-1, 1]]`, which are the
/// generator matrices of the shipped genus-1 presentation.
pub const TWIST_SIGN: i64 = -1;

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: format!("{c} columns"),
                found: format!("{} in row {i}", row.len()),
            });
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from small integers; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .expect("ragged matrix literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Rows as `i64`, or `None` if some entry does not fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToPrimitive::to_i64).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// Largest absolute value of an entry.
    pub fn height(&self) -> BigInt {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    /// Parses the text format `"1,1;0,1"` (rows split by `;`, entries by `,`)
    /// or a JSON array of arrays.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('[') {
            let rows: Vec<Vec<serde_json::Value>> = serde_json::from_str(text)?;
            let mut out = Vec::with_capacity(rows.len());
            for (i, row) in rows.iter().enumerate() {
                let mut r = Vec::with_capacity(row.len());
                for (j, v) in row.iter().enumerate() {
                    let parsed = match v {
                        serde_json::Value::Number(n) => n.to_string().parse::<BigInt>().ok(),
                        _ => None,
                    };
                    let x = parsed.ok_or_else(|| {
                        Error::parse(i, format!("entry ({i}, {j}) is not an integer: {v}"))
                    })?;
                    r.push(x);
                }
                out.push(r);
            }
            return Self::from_rows(out).map_err(|e| Error::parse(0, e.to_string()));
        }

        let mut rows = Vec::new();
        let mut offset = 0;
        for row_text in text.split(';') {
            let mut row = Vec::new();
            let mut entry_offset = offset;
            for entry in row_text.split(',') {
                let t = entry.trim();
                let pos = entry_offset + (entry.len() - entry.trim_start().len());
                let x: BigInt = t
                    .parse()
                    .map_err(|_| Error::parse(pos, format!("expected an integer, found `{t}`")))?;
                row.push(x);
                entry_offset += entry.len() + 1;
            }
            if let Some(first) = rows.first().map(Vec::len) {
                if row.len() != first {
                    return Err(Error::parse(
                        offset,
                        format!("row has {} entries, expected {first}", row.len()),
                    ));
                }
            }
            rows.push(row);
            offset += row_text.len() + 1;
        }
        Self::from_rows(rows)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }
}

/// Text format, e.g. `1,1;0,1`.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(";")?;
            }
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// The standard symplectic form `J = [[0, I_g], [-I_g, 0]]`.
pub fn standard_j(g: usize) -> IntMatrix {
    let mut j = IntMatrix::zeros(2 * g, 2 * g);
    for i in 0..g {
        j[(i, g + i)] = BigInt::one();
        j[(g + i, i)] = -BigInt::one();
    }
    j
}

/// Whether `a` is a `2g × 2g` matrix with `ᵗA J A = J`.
pub fn is_symplectic(a: &IntMatrix, g: usize) -> Result<bool> {
    if a.rows() != 2 * g || a.cols() != 2 * g {
        return Err(Error::DimensionMismatch {
            expected: format!("{0}x{0}", 2 * g),
            found: format!("{}x{}", a.rows(), a.cols()),
        });
    }
    let j = standard_j(g);
    Ok(&(&a.transpose() * &j) * a == j)
}

/// Element of `Sp(2g; Z)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymplecticMatrix {
    genus: usize,
    matrix: IntMatrix,
}

impl SymplecticMatrix {
    /// Validates `ᵗA J A = J`; the genus is read off the size.
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() || !matrix.rows().is_multiple_of(2) || matrix.rows() == 0 {
            return Err(Error::DimensionMismatch {
                expected: "a nonempty 2g x 2g matrix".into(),
                found: format!("{}x{}", matrix.rows(), matrix.cols()),
            });
        }
        let genus = matrix.rows() / 2;
        if !is_symplectic(&matrix, genus)? {
            return Err(Error::NotSymplectic {
                identity: "ᵗA J A = J".into(),
            });
        }
        Ok(Self { genus, matrix })
    }

    /// Like [`SymplecticMatrix::new`] but also checks the expected genus.
    pub fn with_genus(matrix: IntMatrix, genus: usize) -> Result<Self> {
        if matrix.rows() != 2 * genus || matrix.cols() != 2 * genus {
            return Err(Error::DimensionMismatch {
                expected: format!("{0}x{0}", 2 * genus),
                found: format!("{}x{}", matrix.rows(), matrix.cols()),
            });
        }
        Self::new(matrix)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(IntMatrix::parse(text)?)
    }

    pub(crate) fn new_unchecked(genus: usize, matrix: IntMatrix) -> Self {
        debug_assert_eq!(matrix.rows(), 2 * genus);
        Self { genus, matrix }
    }

    pub fn identity(genus: usize) -> Self {
        Self::new_unchecked(genus, IntMatrix::identity(2 * genus))
    }

    pub fn minus_identity(genus: usize) -> Self {
        Self::new_unchecked(genus, IntMatrix::identity(2 * genus).neg())
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.matrix
    }

    /// `A⁻¹ = -J ᵗA J`, exact over the integers.
    pub fn inverse(&self) -> Self {
        let j = standard_j(self.genus);
        let inv = (&(&j * &self.matrix.transpose()) * &j).neg();
        Self::new_unchecked(self.genus, inv)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.genus != rhs.genus {
            return Err(Error::GenusMismatch {
                left: self.genus,
                right: rhs.genus,
            });
        }
        Ok(Self::new_unchecked(self.genus, &self.matrix * &rhs.matrix))
    }

    /// `C A C⁻¹`.
    pub fn conjugate_by(&self, c: &Self) -> Self {
        &(c * self) * &c.inverse()
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::identity(self.genus), |acc, _| &acc * &base)
    }
}

impl Mul for &SymplecticMatrix {
    type Output = SymplecticMatrix;

    /// Panics on genus mismatch; use [`SymplecticMatrix::checked_mul`] otherwise.
    fn mul(self, rhs: &SymplecticMatrix) -> SymplecticMatrix {
        self.checked_mul(rhs).expect("genus mismatch in product")
    }
}

impl fmt::Display for SymplecticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix.fmt(f)
    }
}

impl fmt::Debug for SymplecticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sp{}[{}]", 2 * self.genus, self.matrix)
    }
}

/// A class in `H_1(Σ_g; Z)` written in the symplectic basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    coords: Vec<BigInt>,
}

impl HomologyClass {
    pub fn new(coords: Vec<BigInt>) -> Result<Self> {
        if coords.is_empty() || !coords.len().is_multiple_of(2) {
            return Err(Error::DimensionMismatch {
                expected: "even, nonzero length".into(),
                found: coords.len().to_string(),
            });
        }
        Ok(Self { coords })
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `A_i` (0-based `i`).
    pub fn a(genus: usize, i: usize) -> Self {
        let mut coords = vec![BigInt::zero(); 2 * genus];
        coords[i] = BigInt::one();
        Self { coords }
    }

    /// `B_i` (0-based `i`).
    pub fn b(genus: usize, i: usize) -> Self {
        let mut coords = vec![BigInt::zero(); 2 * genus];
        coords[genus + i] = BigInt::one();
        Self { coords }
    }

    pub fn genus(&self) -> usize {
        self.coords.len() / 2
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// `⟨self, other⟩ = ᵗself J other`.
    pub fn pairing(&self, other: &Self) -> BigInt {
        assert_eq!(self.coords.len(), other.coords.len());
        let g = self.genus();
        (0..g).fold(BigInt::zero(), |acc, i| {
            acc + &self.coords[i] * &other.coords[g + i] - &self.coords[g + i] * &other.coords[i]
        })
    }

    pub fn image(&self, a: &SymplecticMatrix) -> Self {
        Self {
            coords: a.matrix().apply(&self.coords),
        }
    }
}

fn signed_transvection(v: &HomologyClass, sign: i64) -> Result<SymplecticMatrix> {
    if v.is_zero() {
        return Err(Error::Domain("transvection along the zero class".into()));
    }
    let g = v.genus();
    let n = 2 * g;
    // column j of the map is e_j + sign·⟨e_j, v⟩·v
    let jv = standard_j(g).apply(v.coords());
    let mut m = IntMatrix::identity(n);
    for i in 0..n {
        for (j, jvj) in jv.iter().enumerate() {
            m[(i, j)] += &v.coords()[i] * jvj * sign;
        }
    }
    Ok(SymplecticMatrix::new_unchecked(g, m))
}

/// The transvection `x ↦ x + ⟨x, v⟩ v`.
pub fn transvection(v: &HomologyClass) -> Result<SymplecticMatrix> {
    signed_transvection(v, 1)
}

/// Action on homology of the right-handed Dehn twist along a curve of class `v`.
pub fn dehn_twist(v: &HomologyClass) -> Result<SymplecticMatrix> {
    signed_transvection(v, TWIST_SIGN)
}

/// Deterministic pseudo-random element of `Sp(2g; Z)`: a product of
/// `word_length` transvections, each possibly inverted, drawn from a fixed
/// generating set.
pub fn random_symplectic(genus: usize, word_length: usize, seed: u64) -> SymplecticMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_symplectic_with(genus, word_length, &mut rng)
}

pub fn random_symplectic_with<R: Rng + ?Sized>(
    genus: usize,
    word_length: usize,
    rng: &mut R,
) -> SymplecticMatrix {
    let generators = standard_generators(genus);
    let mut acc = SymplecticMatrix::identity(genus);
    for _ in 0..word_length {
        let (t, t_inv) = &generators[rng.gen_range(0..generators.len())];
        acc = if rng.gen_bool(0.5) { &acc * t } else { &acc * t_inv };
    }
    acc
}

/// Transvections along `A_i`, `B_i` and the mixing classes `B_i - B_{i+1}`,
/// paired with their inverses. The mixing classes make the generated
/// subgroup all of `Sp(2g; Z)` rather than `SL(2; Z)^g`.
fn standard_generators(genus: usize) -> Vec<(SymplecticMatrix, SymplecticMatrix)> {
    let mut classes = Vec::new();
    for i in 0..genus {
        classes.push(HomologyClass::a(genus, i));
        classes.push(HomologyClass::b(genus, i));
        if i + 1 < genus {
            let mut c = HomologyClass::b(genus, i).coords;
            c[genus + i + 1] = -BigInt::one();
            classes.push(HomologyClass { coords: c });
        }
    }
    classes
        .iter()
        .map(|v| {
            let t = transvection(v).expect("basis classes are nonzero");
            let inv = t.inverse();
            (t, inv)
        })
        .collect()
}
