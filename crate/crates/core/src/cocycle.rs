//! The signature cocycle `τ_g^sp` on `Sp(2g; Z)`.
//!
//! For `A, B ∈ Sp(2g; Z)` let
//!
//! ```text
//! V_{A,B} = { (x, y) ∈ Q^{2g} ⊕ Q^{2g} : (A⁻¹ - I) x + (B - I) y = 0 }
//! ⟨(x, y), (x', y')⟩ = ᵗ(x + y) J (I - B) y'
//! ```
//!
//! The pairing is symmetric on `V_{A,B}`, and `τ(A, B)` is its signature.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{kernel_basis, to_rational_rows, Rational, SignatureTriple, SymmetricForm};
use crate::symplectic::{standard_j, IntMatrix, SymplecticMatrix};

/// Integral basis of `V_{A,B}`; each vector is `(x, y)` of length `4g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VSpace {
    genus: usize,
    basis: Vec<Vec<BigInt>>,
}

impl VSpace {
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    fn x(&self, i: usize) -> &[BigInt] {
        &self.basis[i][..2 * self.genus]
    }

    fn y(&self, i: usize) -> &[BigInt] {
        &self.basis[i][2 * self.genus..]
    }
}

fn same_genus(a: &SymplecticMatrix, b: &SymplecticMatrix) -> Result<usize> {
    if a.genus() != b.genus() {
        return Err(Error::GenusMismatch {
            left: a.genus(),
            right: b.genus(),
        });
    }
    Ok(a.genus())
}

/// Kernel of the `2g × 4g` block matrix `[A⁻¹ - I | B - I]`.
pub fn v_space(a: &SymplecticMatrix, b: &SymplecticMatrix) -> Result<VSpace> {
    let g = same_genus(a, b)?;
    let n = 2 * g;
    let id = IntMatrix::identity(n);
    let left = a.inverse().matrix().sub(&id);
    let right = b.matrix().sub(&id);
    let block: Vec<Vec<BigInt>> = (0..n)
        .map(|i| left.row(i).iter().chain(right.row(i)).cloned().collect())
        .collect();
    let basis = kernel_basis(&to_rational_rows(&block), 2 * n);
    Ok(VSpace { genus: g, basis })
}

/// The Gram matrix of the raw pairing on the basis of `V_{A,B}`.
fn gram(space: &VSpace, b: &SymplecticMatrix) -> Vec<Vec<BigInt>> {
    let g = space.genus();
    let w = &standard_j(g) * &IntMatrix::identity(2 * g).sub(b.matrix());
    let images: Vec<Vec<BigInt>> = (0..space.dim()).map(|j| w.apply(space.y(j))).collect();
    (0..space.dim())
        .map(|i| {
            let sum: Vec<BigInt> = space
                .x(i)
                .iter()
                .zip(space.y(i))
                .map(|(x, y)| x + y)
                .collect();
            images
                .iter()
                .map(|wj| sum.iter().zip(wj).fold(BigInt::zero(), |acc, (s, t)| acc + s * t))
                .collect()
        })
        .collect()
}

/// The form `⟨ , ⟩_{A,B}` on `V_{A,B}`.
///
/// The pairing must already be symmetric on the computed basis; a failure
/// means the basis is wrong and is reported as [`Error::Internal`].
pub fn meyer_form(a: &SymplecticMatrix, b: &SymplecticMatrix) -> Result<SymmetricForm> {
    let space = v_space(a, b)?;
    let raw = gram(&space, b);
    let n = raw.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if raw[i][j] != raw[j][i] {
                return Err(Error::Internal(format!(
                    "pairing on V_(A,B) not symmetric at ({i}, {j}) for A = {a}, B = {b}"
                )));
            }
        }
    }
    // already symmetric, so the symmetrisation (G + Gᵀ)/2 is G itself
    let entries = raw
        .into_iter()
        .map(|r| r.into_iter().map(Rational::from_integer).collect())
        .collect();
    SymmetricForm::new(entries)
}

/// Full signature triple of `⟨ , ⟩_{A,B}`.
pub fn tau_triple(a: &SymplecticMatrix, b: &SymplecticMatrix) -> Result<SignatureTriple> {
    Ok(meyer_form(a, b)?.signature())
}

/// `τ_g^sp(A, B)`.
pub fn tau_sp(a: &SymplecticMatrix, b: &SymplecticMatrix) -> Result<i64> {
    Ok(tau_triple(a, b)?.value())
}

/// `σ(α) = τ_1(α, -I)` for `α ∈ SL(2; Z)`.
pub fn sigma_defect_via_tau(alpha: &SymplecticMatrix) -> Result<i64> {
    if alpha.genus() != 1 {
        return Err(Error::UnsupportedGenus {
            genus: alpha.genus(),
            reason: "the signature defect σ is defined on SL(2; Z) only".into(),
        });
    }
    tau_sp(alpha, &SymplecticMatrix::minus_identity(1))
}
