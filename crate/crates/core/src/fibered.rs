//! Signatures of fibered 4-manifolds of genus 1 and 2.
//!
//! A fiber germ carries its counter-clockwise boundary monodromy and the
//! signature of its disk neighbourhood. Its local signature is
//! `φ_g(monodromy) + Sign(neighbourhood)`, and over a closed base these sum
//! to the signature of the total space. The module also carries the Euler,
//! Horikawa and geography bookkeeping that goes with it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Deserialize;

use crate::data::DataSet;
use crate::error::{Error, Result};
use crate::exact::{int, Rational};
use crate::genus1::phi1_matrix;
use crate::presentations::{total_exponent, Presentation, SynthesizedMeyerFunction, Word};
use crate::symplectic::SymplecticMatrix;

/// Orientation of germ monodromies taken from the Kodaira table: the germ's
/// boundary monodromy is its positive twist factorisation raised to this
/// power. With `-1` an `I_1` germ has monodromy `[[1, -1], [0, 1]]`, and twelve
/// of them give the rational elliptic surface signature `-8`.
pub const BOUNDARY_ORIENTATION: i64 = -1;

fn unsupported(genus: usize) -> Error {
    Error::UnsupportedGenus {
        genus,
        reason: if genus >= 3 {
            "the signature class has infinite order for genus >= 3, so no Meyer function exists".into()
        } else {
            "genus must be 1 or 2".into()
        },
    }
}

/// The Meyer function of genus 1 or 2 together with the presentation used to read words.
#[derive(Debug, Clone)]
pub struct MeyerFunction {
    genus: usize,
    presentation: Presentation,
    synthesized: Option<SynthesizedMeyerFunction>,
}

impl MeyerFunction {
    /// Genus 1 uses the closed form; genus 2 the function synthesised from the
    /// shipped presentation of `M_2`.
    pub fn for_genus(genus: usize) -> Result<Self> {
        Self::from_data(genus, &DataSet::embedded())
    }

    pub fn from_data(genus: usize, data: &DataSet) -> Result<Self> {
        match genus {
            1 => Ok(Self {
                genus,
                presentation: data.sl2z.clone(),
                synthesized: None,
            }),
            2 => Ok(Self {
                genus,
                presentation: data.genus2.clone(),
                synthesized: Some(data.genus2.synthesize_meyer()?),
            }),
            g => Err(unsupported(g)),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn eval(&self, w: &Word) -> Result<Rational> {
        match &self.synthesized {
            Some(phi) => phi.eval(w),
            None => phi1_matrix(&self.presentation.evaluate(w)?),
        }
    }
}

/// Signature of a genus-`g` surface bundle over a compact surface, from the
/// monodromies around its boundary circles.
pub fn signature_over_surface(genus: usize, boundary_monodromies: &[Word]) -> Result<Rational> {
    let phi = MeyerFunction::for_genus(genus)?;
    boundary_monodromies.iter().map(|w| phi.eval(w)).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberGerm {
    pub monodromy: Word,
    pub neighborhood_signature: i64,
    pub label: String,
}

impl FiberGerm {
    pub fn new(monodromy: Word, neighborhood_signature: i64, label: impl Into<String>) -> Self {
        Self {
            monodromy,
            neighborhood_signature,
            label: label.into(),
        }
    }

    pub fn general() -> Self {
        Self::new(Word::empty(), 0, "general fiber")
    }
}

/// `φ_g(x_b) + Sign(f⁻¹(Δ))` for one germ.
pub fn local_signature(germ: &FiberGerm, genus: usize) -> Result<Rational> {
    local_signature_with(germ, &MeyerFunction::for_genus(genus)?)
}

pub fn local_signature_with(germ: &FiberGerm, phi: &MeyerFunction) -> Result<Rational> {
    Ok(phi.eval(&germ.monodromy)? + int(germ.neighborhood_signature))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrationDescription {
    pub genus: usize,
    pub base_genus: usize,
    pub germs: Vec<FiberGerm>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FibrationFile {
    genus: usize,
    base_genus: usize,
    germs: Vec<GermFile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GermFile {
    monodromy: String,
    neighborhood_signature: i64,
    #[serde(default)]
    label: String,
}

/// Per-germ and total signatures of a fibration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureReport {
    pub local: Vec<(String, Rational)>,
    pub total: BigInt,
}

impl FibrationDescription {
    /// Reads the fibration file format. Monodromies are words in the genus's
    /// presentation, or `kodaira:<type>` references for genus 1.
    pub fn from_json(text: &str, data: &DataSet) -> Result<Self> {
        let file: FibrationFile = serde_json::from_str(text)?;
        let presentation = data.presentation(file.genus).ok_or_else(|| unsupported(file.genus))?;
        let germs = file
            .germs
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let monodromy = match g.monodromy.trim().strip_prefix("kodaira:") {
                    Some(name) => {
                        if file.genus != 1 {
                            return Err(Error::Domain(format!(
                                "germ {i}: Kodaira references need genus 1"
                            )));
                        }
                        data.kodaira.fiber(name)?.monodromy
                    }
                    None => presentation.parse_word(&g.monodromy).map_err(|e| match e {
                        Error::Parse { position, message } => Error::Parse {
                            position,
                            message: format!("germ {i}: {message}"),
                        },
                        other => other,
                    })?,
                };
                Ok(FiberGerm {
                    monodromy,
                    neighborhood_signature: g.neighborhood_signature,
                    label: if g.label.is_empty() { format!("germ {i}") } else { g.label.clone() },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            genus: file.genus,
            base_genus: file.base_genus,
            germs,
        })
    }

    /// Product of the germ monodromies, in germ order.
    pub fn monodromy_product(&self) -> Word {
        self.germs
            .iter()
            .fold(Word::empty(), |acc, g| acc.concat(&g.monodromy))
    }

    /// Necessary conditions for the germs to close up over the base.
    ///
    /// Over a sphere the product of monodromies must map to the identity of
    /// `Sp(2g; Z)`. Over any base the product must be a product of
    /// commutators, so its total exponent vanishes in the abelianisation.
    pub fn check_closed(&self, presentation: &Presentation) -> Result<()> {
        let product = self.monodromy_product();
        if self.base_genus == 0 && !presentation.evaluate(&product)?.is_identity() {
            return Err(Error::NotClosed(
                "product of germ monodromies is not the identity in Sp(2g; Z)".into(),
            ));
        }
        if let Some(order) = presentation.abelianization_order() {
            let alpha = BigInt::from(total_exponent(&product));
            let vanishes = if order.is_zero() { alpha.is_zero() } else { alpha.is_multiple_of(&order) };
            if !vanishes {
                return Err(Error::NotClosed(format!(
                    "product of germ monodromies has exponent sum {alpha}, nonzero modulo {order}"
                )));
            }
        }
        Ok(())
    }
}

/// `Sign(E) = Σ_b σ(F_b)`; must come out integral.
pub fn total_signature(fd: &FibrationDescription) -> Result<BigInt> {
    Ok(signature_report(fd, &DataSet::embedded())?.total)
}

pub fn signature_report(fd: &FibrationDescription, data: &DataSet) -> Result<SignatureReport> {
    let phi = MeyerFunction::from_data(fd.genus, data)?;
    fd.check_closed(phi.presentation())?;
    let local = fd
        .germs
        .iter()
        .map(|g| Ok((g.label.clone(), local_signature_with(g, &phi)?)))
        .collect::<Result<Vec<_>>>()?;
    let total: Rational = local.iter().map(|(_, s)| s.clone()).sum();
    if !total.is_integer() {
        return Err(Error::NonIntegerTotal(total.to_string()));
    }
    Ok(SignatureReport {
        local,
        total: total.to_integer(),
    })
}

/// `ε(F_b) = χ(f⁻¹(b)) - (2 - 2g)`.
pub fn euler_contribution(chi_singular_fiber: i64, genus: i64) -> i64 {
    chi_singular_fiber - (2 - 2 * genus)
}

/// `χ(E) = (2 - 2g)(2 - 2g(B)) + Σ ε(F_b)`.
pub fn total_euler(genus: i64, base_genus: i64, contributions: &[i64]) -> i64 {
    (2 - 2 * genus) * (2 - 2 * base_genus) + contributions.iter().sum::<i64>()
}

/// Local signature of a hyperelliptic germ from its Horikawa index `H` and
/// Euler contribution `ε`: `(g H - (g + 1) ε) / (2g + 1)`.
pub fn sigma_alg_hyperelliptic(horikawa_index: &Rational, eps: i64, genus: i64) -> Result<Rational> {
    if genus < 1 {
        return Err(Error::Domain("genus must be at least 1".into()));
    }
    Ok((int(genus) * horikawa_index - int((genus + 1) * eps)) / int(2 * genus + 1))
}

/// Total Horikawa index `Σ H(F_b) = K²_{E/B} - (4(g - 1)/g) χ_f`.
pub fn horikawa_total(k_rel_sq: i64, chi_f: &Rational, genus: i64) -> Result<Rational> {
    if genus < 2 {
        return Err(Error::Domain(
            "the hyperelliptic slope equality needs genus >= 2".into(),
        ));
    }
    Ok(int(k_rel_sq) - Rational::new(BigInt::from(4 * (genus - 1)), BigInt::from(genus)) * chi_f)
}

/// The Chern numbers of a complex surface and the pair `(Sign, χ_top)` they determine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Geography {
    pub signature: Rational,
    pub euler: Rational,
}

/// `(K², χ(O)) ↦ (Sign, χ)` via `Sign = (K² - 2χ)/3` and `χ(O) = (K² + χ)/12`.
pub fn geography_convert(k_sq: &Rational, chi_struct: &Rational) -> Geography {
    let euler = int(12) * chi_struct - k_sq;
    let signature = k_sq - int(8) * chi_struct;
    Geography { signature, euler }
}

/// Inverse of [`geography_convert`]: returns `(K², χ(O))`.
pub fn geography_invert(g: &Geography) -> (Rational, Rational) {
    let k_sq = int(2) * &g.euler + int(3) * &g.signature;
    let chi_struct = (&g.euler + &g.signature) / int(4);
    (k_sq, chi_struct)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistKind {
    NonSeparating,
    /// Separating curve cutting off genus `h` and `g - h`.
    Separating(u32),
}

/// Value of the hyperelliptic Meyer function on a right-handed Dehn twist:
/// `(g + 1)/(2g + 1)` or `-4h(g - h)/(2g + 1)`.
pub fn hyperelliptic_twist_value(genus: u32, kind: TwistKind) -> Result<Rational> {
    if genus < 1 {
        return Err(Error::Domain("genus must be at least 1".into()));
    }
    let g = i64::from(genus);
    let den = BigInt::from(2 * g + 1);
    match kind {
        TwistKind::NonSeparating => Ok(Rational::new(BigInt::from(g + 1), den)),
        TwistKind::Separating(h) if h >= 1 && h < genus => {
            let h = i64::from(h);
            Ok(Rational::new(BigInt::from(-4 * h * (g - h)), den))
        }
        TwistKind::Separating(h) => Err(Error::Domain(format!(
            "separating twist needs 1 <= h <= g - 1, got h = {h} for g = {genus}"
        ))),
    }
}

/// One row of the Kodaira table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KodairaFiber {
    pub name: String,
    /// Factorisation into right-handed twists `a`, `b`.
    pub positive_word: Word,
    pub monodromy: Word,
    pub euler: i64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct KodairaEntry {
    name: String,
    word: String,
    repeat: Option<String>,
    euler: i64,
    trace: i64,
    order: Option<u32>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct KodairaFile {
    presentation: String,
    fibers: Vec<KodairaEntry>,
}

/// Kodaira's singular elliptic fibers and their monodromies in `SL(2; Z)`.
#[derive(Debug, Clone)]
pub struct KodairaTable {
    entries: Vec<KodairaEntry>,
    presentation: Presentation,
}

fn matrix_order(m: &SymplecticMatrix, max: u32) -> Option<u32> {
    let mut p = m.clone();
    for k in 1..=max {
        if p.is_identity() {
            return Some(k);
        }
        p = &p * m;
    }
    None
}

impl KodairaTable {
    /// Loads and checks each entry: the word's trace (and order, for the
    /// finite-order types) and that the Euler number equals the number of
    /// twists in the factorisation.
    pub fn from_json(text: &str, sl2z: &Presentation) -> Result<Self> {
        let file: KodairaFile = serde_json::from_str(text)?;
        if file.presentation != "sl2z" || sl2z.genus() != 1 {
            return Err(Error::Domain(format!(
                "Kodaira table must be written over the genus-1 presentation, found `{}`",
                file.presentation
            )));
        }
        let table = Self {
            entries: file.fibers,
            presentation: sl2z.clone(),
        };
        for e in &table.entries {
            let samples: &[u32] = if e.repeat.is_some() { &[0, 1, 2, 5] } else { &[0] };
            for &n in samples {
                let fiber = table.build(e, n)?;
                let m = table.presentation.evaluate(&fiber.positive_word)?;
                let trace = m.matrix().trace();
                if trace != BigInt::from(e.trace) {
                    return Err(Error::Domain(format!(
                        "Kodaira {}: trace {trace}, table says {}",
                        fiber.name, e.trace
                    )));
                }
                if let Some(order) = e.order {
                    if matrix_order(&m, 12) != Some(order) {
                        return Err(Error::Domain(format!("Kodaira {}: wrong order", fiber.name)));
                    }
                }
                if fiber.positive_word.len() as i64 != fiber.euler {
                    return Err(Error::Domain(format!(
                        "Kodaira {}: Euler number {} but {} twists",
                        fiber.name,
                        fiber.euler,
                        fiber.positive_word.len()
                    )));
                }
            }
        }
        Ok(table)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.name.as_str())
    }

    fn build(&self, e: &KodairaEntry, n: u32) -> Result<KodairaFiber> {
        let mut positive = self.presentation.parse_word(&e.word)?;
        let name = match &e.repeat {
            Some(r) => {
                let rep = self.presentation.parse_word(r)?;
                positive = positive.concat(&rep.pow(i64::from(n)));
                e.name.replace('n', &n.to_string())
            }
            None => e.name.clone(),
        };
        Ok(KodairaFiber {
            name,
            monodromy: positive.pow(BOUNDARY_ORIENTATION),
            euler: e.euler + i64::from(n) * i64::from(e.repeat.is_some()),
            positive_word: positive,
        })
    }

    /// Looks up `I_3`, `I3`, `I_0*`, `II*`, ...
    pub fn fiber(&self, name: &str) -> Result<KodairaFiber> {
        let name = name.trim();
        let unknown = || Error::Domain(format!("unknown Kodaira type `{name}`"));
        if let Some(e) = self.entries.iter().find(|e| e.repeat.is_none() && e.name == name) {
            return self.build(e, 0);
        }
        let rest = name.strip_prefix('I').ok_or_else(unknown)?;
        let rest = rest.strip_prefix('_').unwrap_or(rest);
        let (digits, star) = match rest.strip_suffix('*') {
            Some(d) => (d, true),
            None => (rest, false),
        };
        let n: u32 = digits.parse().map_err(|_| unknown())?;
        let family = if star { "I_n*" } else { "I_n" };
        let e = self.entries.iter().find(|e| e.name == family).ok_or_else(unknown)?;
        self.build(e, n)
    }

    pub fn monodromy_matrix(&self, name: &str) -> Result<SymplecticMatrix> {
        self.presentation.evaluate(&self.fiber(name)?.monodromy)
    }
}

/// `φ_1` of a parabolic germ `[[1, -n], [0, 1]]`, handy for checking tables.
pub fn parabolic_phi(n: i64) -> Result<Rational> {
    let m = SymplecticMatrix::new(crate::symplectic::IntMatrix::from_i64(&[&[1, -n], &[0, 1]]))?;
    phi1_matrix(&m)
}

impl SignatureReport {
    pub fn total_rational(&self) -> Rational {
        Rational::from_integer(self.total.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    fn words(p: &Presentation, ws: &[&str]) -> Vec<Word> {
        ws.iter().map(|w| p.parse_word(w).unwrap()).collect()
    }

    #[test]
    fn surface_signature_basics() {
        for g in [1, 2] {
            assert_eq!(signature_over_surface(g, &[]).unwrap(), int(0));
            assert_eq!(signature_over_surface(g, &[Word::empty()]).unwrap(), int(0));
        }
        let p = Presentation::sl2z();
        let x = p.parse_word("a b b A b").unwrap();
        assert_eq!(signature_over_surface(1, &[x.clone(), x.inverse()]).unwrap(), int(0));
        let p2 = Presentation::genus2();
        let y = p2.parse_word("c1 c3 c4^-1 c2").unwrap();
        assert_eq!(signature_over_surface(2, &[y.clone(), y.inverse()]).unwrap(), int(0));
        let err = signature_over_surface(3, &[]).unwrap_err();
        assert!(err.to_string().contains("infinite order"), "{err}");
    }

    #[test]
    fn local_signatures() {
        assert_eq!(local_signature(&FiberGerm::general(), 1).unwrap(), int(0));
        assert_eq!(local_signature(&FiberGerm::general(), 2).unwrap(), int(0));
        let p = Presentation::sl2z();
        let germ = FiberGerm::new(p.parse_word("A").unwrap(), 0, "I_1");
        assert_eq!(local_signature(&germ, 1).unwrap(), rational(-2, 3));
        let conj = FiberGerm::new(germ.monodromy.conjugate_by(&p.parse_word("b a B").unwrap()), 0, "I_1'");
        assert_eq!(local_signature(&conj, 1).unwrap(), rational(-2, 3));
        assert!(local_signature(&germ, 4).is_err());
    }

    #[test]
    fn rational_elliptic_surface() {
        let p = Presentation::sl2z();
        let germs = words(&p, &["A", "B"])
            .into_iter()
            .cycle()
            .take(12)
            .enumerate()
            .map(|(i, w)| FiberGerm::new(w, 0, format!("I_1 #{i}")))
            .collect();
        let fd = FibrationDescription {
            genus: 1,
            base_genus: 0,
            germs,
        };
        assert_eq!(total_signature(&fd).unwrap(), BigInt::from(-8));
        assert_eq!(total_euler(1, 0, &[1; 12]), 12);
        let geo = geography_convert(&int(0), &int(1));
        assert_eq!((geo.signature, geo.euler), (int(-8), int(12)));
    }

    #[test]
    fn closedness_enforced() {
        let p = Presentation::sl2z();
        let fd = FibrationDescription {
            genus: 1,
            base_genus: 0,
            germs: vec![FiberGerm::new(p.parse_word("A").unwrap(), 0, "")],
        };
        assert!(matches!(total_signature(&fd), Err(Error::NotClosed(_))));
        // over a torus a single I_1 is still not a commutator
        let fd = FibrationDescription { base_genus: 1, ..fd };
        assert!(matches!(total_signature(&fd), Err(Error::NotClosed(_))));
        let empty = FibrationDescription {
            genus: 2,
            base_genus: 3,
            germs: vec![],
        };
        assert_eq!(total_signature(&empty).unwrap(), BigInt::zero());
    }

    #[test]
    fn euler_bookkeeping() {
        assert_eq!(euler_contribution(0, 1), 0);
        assert_eq!(euler_contribution(-2, 2), 0);
        assert_eq!(euler_contribution(1, 1), 1);
        assert_eq!(euler_contribution(0, 2), 2);
        assert_eq!(total_euler(1, 1, &[]), 0);
        assert_eq!(total_euler(2, 2, &[]), 4);
    }

    #[test]
    fn algebraic_local_signature() {
        assert_eq!(sigma_alg_hyperelliptic(&int(0), 0, 2).unwrap(), int(0));
        assert_eq!(sigma_alg_hyperelliptic(&int(0), 1, 2).unwrap(), rational(-3, 5));
        assert_eq!(sigma_alg_hyperelliptic(&int(1), 1, 1).unwrap(), rational(-1, 3));
        assert!(sigma_alg_hyperelliptic(&int(1), 1, 0).is_err());
    }

    #[test]
    fn horikawa() {
        assert_eq!(horikawa_total(2, &int(1), 2).unwrap(), int(0));
        assert_eq!(horikawa_total(4, &int(1), 2).unwrap(), int(2));
        assert_eq!(horikawa_total(9, &int(4), 3).unwrap(), rational(-5, 3));
        assert!(horikawa_total(0, &int(1), 1).is_err());
    }

    #[test]
    fn geography() {
        let g = geography_convert(&int(16), &int(2));
        assert_eq!(g.signature, int(0));
        assert_eq!(geography_invert(&g), (int(16), int(2)));
    }

    #[test]
    fn twist_values() {
        assert_eq!(hyperelliptic_twist_value(2, TwistKind::NonSeparating).unwrap(), rational(3, 5));
        assert_eq!(hyperelliptic_twist_value(2, TwistKind::Separating(1)).unwrap(), rational(-4, 5));
        assert_eq!(hyperelliptic_twist_value(1, TwistKind::NonSeparating).unwrap(), rational(2, 3));
        assert_eq!(
            hyperelliptic_twist_value(1, TwistKind::NonSeparating).unwrap(),
            phi1_matrix(&Presentation::sl2z().matrices()[0]).unwrap()
        );
        assert!(hyperelliptic_twist_value(3, TwistKind::Separating(0)).is_err());
        assert!(hyperelliptic_twist_value(3, TwistKind::Separating(3)).is_err());
        assert_eq!(hyperelliptic_twist_value(4, TwistKind::Separating(2)).unwrap(), rational(-16, 9));
    }

    #[test]
    fn kodaira_table() {
        let data = DataSet::embedded();
        let t = &data.kodaira;
        let i1 = t.monodromy_matrix("I_1").unwrap();
        assert_eq!(i1.matrix(), &crate::symplectic::IntMatrix::from_i64(&[&[1, -1], &[0, 1]]));
        assert_eq!(t.fiber("I3").unwrap().euler, 3);
        assert_eq!(t.fiber("I_2*").unwrap().euler, 8);
        assert_eq!(t.fiber("II*").unwrap().euler, 10);
        assert!(t.fiber("V").is_err());
        assert!(t.fiber("I_x").is_err());
        // φ_1 + Sign(nbhd) = -(2/3) ε for I_n, with Sign(nbhd) = -(n - 1)
        for n in 1..6 {
            let f = t.fiber(&format!("I_{n}")).unwrap();
            let germ = FiberGerm::new(f.monodromy, -(n - 1), f.name);
            assert_eq!(local_signature(&germ, 1).unwrap(), rational(-2 * n, 3));
        }
        assert_eq!(parabolic_phi(1).unwrap(), rational(-2, 3));
    }

    #[test]
    fn fibration_file() {
        let text = r#"{"genus": 1, "base_genus": 0, "germs": [
            {"monodromy": "kodaira:II", "neighborhood_signature": 0, "label": "cusp"},
            {"monodromy": "kodaira:II*", "neighborhood_signature": -8, "label": "E8"}
        ]}"#;
        let fd = FibrationDescription::from_json(text, &DataSet::embedded()).unwrap();
        assert_eq!(fd.germs.len(), 2);
        let report = signature_report(&fd, &DataSet::embedded()).unwrap();
        assert_eq!(report.total, BigInt::from(-8));
        let bad = r#"{"genus": 1, "base_genus": 0, "germs": [{"monodromy": "a x", "neighborhood_signature": 0}]}"#;
        assert!(FibrationDescription::from_json(bad, &DataSet::embedded()).unwrap_err().is_parse());
        let g3 = r#"{"genus": 3, "base_genus": 0, "germs": []}"#;
        assert!(matches!(
            FibrationDescription::from_json(g3, &DataSet::embedded()),
            Err(Error::UnsupportedGenus { .. })
        ));
    }
}
