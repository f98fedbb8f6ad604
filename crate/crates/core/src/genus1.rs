//! Closed-form Meyer function of genus 1.
//!
//! `φ_1(α) = -Ψ(α)/3 + σ(α)·(1 + sign(a + d))/2` where `Ψ` is the Rademacher
//! function and `σ(α)` the signature of `[[-2c, a - d], [a - d, 2b]]`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{sign, Rational, SymmetricForm};
use crate::symplectic::{IntMatrix, SymplecticMatrix};

/// `[[a, b], [c, d]]` with `ad - bc = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SL2Element {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl SL2Element {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        if &a * &d - &b * &c != BigInt::one() {
            return Err(Error::NotSymplectic {
                identity: "ad - bc = 1".into(),
            });
        }
        Ok(Self { a, b, c, d })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self::from_i64(1, 0, 0, 1).unwrap()
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn inverse(&self) -> Self {
        Self {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    pub fn to_symplectic(&self) -> SymplecticMatrix {
        let m = IntMatrix::from_rows(vec![
            vec![self.a.clone(), self.b.clone()],
            vec![self.c.clone(), self.d.clone()],
        ])
        .expect("2x2");
        SymplecticMatrix::new_unchecked(1, m)
    }
}

impl TryFrom<&SymplecticMatrix> for SL2Element {
    type Error = Error;

    fn try_from(m: &SymplecticMatrix) -> Result<Self> {
        if m.genus() != 1 {
            return Err(Error::UnsupportedGenus {
                genus: m.genus(),
                reason: "expected an element of SL(2; Z)".into(),
            });
        }
        let x = m.matrix();
        Ok(Self {
            a: x[(0, 0)].clone(),
            b: x[(0, 1)].clone(),
            c: x[(1, 0)].clone(),
            d: x[(1, 1)].clone(),
        })
    }
}

impl TryFrom<SymplecticMatrix> for SL2Element {
    type Error = Error;

    fn try_from(m: SymplecticMatrix) -> Result<Self> {
        SL2Element::try_from(&m)
    }
}

impl std::ops::Mul for &SL2Element {
    type Output = SL2Element;

    fn mul(self, r: &SL2Element) -> SL2Element {
        SL2Element {
            a: &self.a * &r.a + &self.b * &r.c,
            b: &self.a * &r.b + &self.b * &r.d,
            c: &self.c * &r.a + &self.d * &r.c,
            d: &self.c * &r.b + &self.d * &r.d,
        }
    }
}

impl fmt::Display for SL2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for SL2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SL2[{self}]")
    }
}

/// `((x))`: `x - ⌊x⌋ - 1/2` off the integers, `0` on them.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        x - x.floor() - Rational::new(BigInt::one(), BigInt::from(2))
    }
}

/// Numerator of `((p/q))` over the denominator `2|q|`.
fn sawtooth_numerator(p: &BigInt, q: &BigInt) -> BigInt {
    let (p, q) = if q.is_negative() { (-p, -q) } else { (p.clone(), q.clone()) };
    let r = p.mod_floor(&q);
    if r.is_zero() {
        BigInt::zero()
    } else {
        BigInt::from(2) * r - q
    }
}

/// Dedekind sum `s(a, c) = Σ_{k mod |c|} ((ak/c)) ((k/c))` by direct summation.
///
/// The summands keep the sign of `c`; `k` runs over `0..|c|`.
pub fn dedekind_sum(a: &BigInt, c: &BigInt) -> Result<Rational> {
    if c.is_zero() {
        return Err(Error::Domain("Dedekind sum s(a, 0) is undefined".into()));
    }
    let n = c.abs();
    let mut acc = BigInt::zero();
    let mut k = BigInt::zero();
    while k < n {
        acc += sawtooth_numerator(&(a * &k), c) * sawtooth_numerator(&k, c);
        k += 1;
    }
    Ok(Rational::new(acc, BigInt::from(4) * &n * &n))
}

/// `s(a, c)` through the reciprocity law and the Euclidean algorithm.
///
/// Agrees with [`dedekind_sum`] everywhere but runs in `O(log |c|)` steps,
/// which matters for products of long words where `|c|` grows quickly.
pub fn dedekind_sum_euclid(a: &BigInt, c: &BigInt) -> Result<Rational> {
    if c.is_zero() {
        return Err(Error::Domain("Dedekind sum s(a, 0) is undefined".into()));
    }
    // s(a, -c) = s(a, c) and s(ha, hc) = s(a, c)
    let mut c = c.abs();
    let g = a.gcd(&c);
    let mut a = a / &g;
    c /= &g;

    let twelve = BigInt::from(12);
    let mut total = Rational::zero();
    let mut flip = false;
    loop {
        a = a.mod_floor(&c);
        if a.is_zero() {
            // c == 1 here since gcd(a, c) = 1
            break;
        }
        // s(a, c) = -1/4 + (a/c + c/a + 1/(ac))/12 - s(c, a)
        let ac = &a * &c;
        let term = Rational::new(BigInt::from(-1), BigInt::from(4))
            + Rational::new(&a * &a + &c * &c + BigInt::one(), &ac * &twelve);
        if flip {
            total -= term;
        } else {
            total += term;
        }
        flip = !flip;
        std::mem::swap(&mut a, &mut c);
    }
    Ok(total)
}

/// Rademacher function `Ψ`.
pub fn rademacher(alpha: &SL2Element) -> Rational {
    let (a, b, c, d) = (&alpha.a, &alpha.b, &alpha.c, &alpha.d);
    if c.is_zero() {
        // d = ±1
        return Rational::new(b.clone(), d.clone());
    }
    let tr = a + d;
    let s = dedekind_sum_euclid(a, c).expect("c is nonzero");
    let sc = sign(c);
    Rational::new(tr.clone(), c.clone())
        - s * Rational::from_integer(BigInt::from(12 * sc))
        - Rational::from_integer(BigInt::from(3 * sign(&(c * &tr))))
}

/// `σ(α)`: signature of `[[-2c, a - d], [a - d, 2b]]`.
pub fn sigma_defect(alpha: &SL2Element) -> i64 {
    let (a, b, c, d) = (&alpha.a, &alpha.b, &alpha.c, &alpha.d);
    let two = BigInt::from(2);
    let off = Rational::from_integer(a - d);
    let form = SymmetricForm::new(vec![
        vec![Rational::from_integer(-(&two * c)), off.clone()],
        vec![off, Rational::from_integer(&two * b)],
    ])
    .expect("symmetric by construction");
    form.signature().value()
}

/// Meyer function of genus 1, valued in `(1/3)Z`.
pub fn phi1(alpha: &SL2Element) -> Result<Rational> {
    let psi = rademacher(alpha);
    let sigma = sigma_defect(alpha);
    let weight = 1 + sign(&alpha.trace());
    let value = -psi / Rational::from_integer(BigInt::from(3))
        + Rational::new(BigInt::from(sigma * weight), BigInt::from(2));
    if !(&value * Rational::from_integer(BigInt::from(3))).is_integer() {
        return Err(Error::Internal(format!(
            "φ_1({alpha}) = {value} is not in (1/3)Z"
        )));
    }
    Ok(value)
}

/// [`phi1`] on a genus-1 symplectic matrix.
pub fn phi1_matrix(m: &SymplecticMatrix) -> Result<Rational> {
    phi1(&SL2Element::try_from(m)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rational};

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn sawtooth_values() {
        assert_eq!(sawtooth(&int(0)), int(0));
        assert_eq!(sawtooth(&int(-4)), int(0));
        assert_eq!(sawtooth(&rational(1, 3)), rational(-1, 6));
        assert_eq!(sawtooth(&rational(-1, 3)), rational(1, 6));
        assert_eq!(sawtooth(&rational(7, 2)), int(0));
    }

    #[test]
    fn dedekind_examples() {
        for a in -5..=5 {
            assert_eq!(dedekind_sum(&big(a), &big(1)).unwrap(), int(0));
        }
        for c in [-7, -1, 2, 9] {
            assert_eq!(dedekind_sum(&big(0), &big(c)).unwrap(), int(0));
        }
        assert_eq!(dedekind_sum(&big(1), &big(3)).unwrap(), rational(1, 18));
        assert!(dedekind_sum(&big(1), &big(0)).is_err());
        assert!(dedekind_sum_euclid(&big(1), &big(0)).is_err());
    }

    #[test]
    fn dedekind_sum_matches_sawtooth_definition() {
        for c in [-6i64, -5, -1, 1, 4, 7] {
            for a in -8i64..=8 {
                let direct: Rational = (0..c.abs())
                    .map(|k| sawtooth(&rational(a * k, c)) * sawtooth(&rational(k, c)))
                    .sum();
                assert_eq!(dedekind_sum(&big(a), &big(c)).unwrap(), direct, "s({a}, {c})");
            }
        }
    }

    #[test]
    fn euclid_agrees_with_direct_sum() {
        for c in -40i64..=40 {
            if c == 0 {
                continue;
            }
            for a in -45i64..=45 {
                assert_eq!(
                    dedekind_sum_euclid(&big(a), &big(c)).unwrap(),
                    dedekind_sum(&big(a), &big(c)).unwrap(),
                    "s({a}, {c})"
                );
            }
        }
    }

    #[test]
    fn rademacher_examples() {
        assert_eq!(rademacher(&SL2Element::identity()), int(0));
        assert_eq!(rademacher(&SL2Element::from_i64(1, 1, 0, 1).unwrap()), int(1));
        assert_eq!(rademacher(&SL2Element::from_i64(0, 1, -1, 0).unwrap()), int(0));
        assert_eq!(rademacher(&SL2Element::from_i64(-1, 3, 0, -1).unwrap()), int(-3));
    }

    #[test]
    fn phi1_examples() {
        assert_eq!(phi1(&SL2Element::identity()).unwrap(), int(0));
        assert_eq!(phi1(&SL2Element::from_i64(1, 1, 0, 1).unwrap()).unwrap(), rational(2, 3));
        assert_eq!(phi1(&SL2Element::from_i64(1, -1, 0, 1).unwrap()).unwrap(), rational(-2, 3));
        assert_eq!(phi1(&SL2Element::from_i64(-1, 0, 0, -1).unwrap()).unwrap(), int(0));
        assert_eq!(phi1(&SL2Element::from_i64(1, 0, -1, 1).unwrap()).unwrap(), rational(2, 3));
    }

    #[test]
    fn hyperbolic_shortcut() {
        // trace 3
        let alpha = SL2Element::from_i64(2, 1, 1, 1).unwrap();
        assert_eq!(phi1(&alpha).unwrap(), -rademacher(&alpha) / int(3));
    }

    #[test]
    fn sigma_matches_tau() {
        use crate::cocycle::sigma_defect_via_tau;
        for (a, b, c, d) in [(1, 1, 0, 1), (1, -1, 0, 1), (2, 1, 1, 1), (0, 1, -1, 0), (-1, 0, 0, -1)] {
            let alpha = SL2Element::from_i64(a, b, c, d).unwrap();
            assert_eq!(sigma_defect(&alpha), sigma_defect_via_tau(&alpha.to_symplectic()).unwrap());
        }
    }

    #[test]
    fn rejects_bad_determinant() {
        assert!(SL2Element::from_i64(2, 0, 0, 2).is_err());
    }
}
