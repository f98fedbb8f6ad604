//! Words, group presentations, and Meyer functions built from them.
//!
//! Given a presentation `1 → R → F → G → 1` and the pull-back `z` of the
//! signature cocycle, the 1-cochain
//!
//! ```text
//! c(x_1 ⋯ x_m) = Σ_j z(x_1 ⋯ x_{j-1}, x_j)
//! ```
//!
//! satisfies `c(xy) = c(x) + c(y) + z(x, y)`. The order of `[z]` is read off a
//! linear system in the values `c(r)` on relators, and a Meyer function on `G`
//! is `φ(x) = -c(x) + Σ q_i e_i^*(x)` for a rational solution `q`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::Deserialize;

use crate::cocycle::tau_sp;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::symplectic::{IntMatrix, SymplecticMatrix};

const SL2Z_JSON: &str = include_str!("../data/sl2z.json");
const GENUS2_JSON: &str = include_str!("../data/genus2.json");

/// One generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Self { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Self {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    /// `+1` or `-1`.
    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// Element of the free group on the generators, as written (not reduced).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn generator(i: usize) -> Self {
        Self {
            letters: vec![Letter::new(i, false)],
        }
    }

    /// Word from `(generator, ±1)` pairs.
    pub fn from_signed(pairs: &[(usize, i8)]) -> Self {
        Self {
            letters: pairs.iter().map(|&(g, s)| Letter::new(g, s < 0)).collect(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { letters }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Self { letters }
    }

    /// `y x y⁻¹` for `x = self`.
    pub fn conjugate_by(&self, y: &Word) -> Self {
        y.concat(self).concat(&y.inverse())
    }

    /// Inserts `l l⁻¹` before position `pos`.
    pub fn insert_cancelling_pair(&self, pos: usize, l: Letter) -> Self {
        let mut letters = self.letters.clone();
        letters.splice(pos..pos, [l, l.inv()]);
        Self { letters }
    }

    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self { letters: out }
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }

    /// Parses word syntax against the generator names.
    ///
    /// Tokens are whitespace separated. A token is a generator name, `1` for
    /// the empty word, or a parenthesised subword; any of these may carry an
    /// integer exponent `^k`. A single uppercase letter stands for the
    /// inverse of the matching lowercase generator.
    pub fn parse(text: &str, names: &[String]) -> Result<Self> {
        let mut parser = WordParser {
            text,
            pos: 0,
            names,
        };
        let w = parser.sequence()?;
        parser.skip_ws();
        if parser.pos < text.len() {
            return Err(Error::parse(parser.pos, "unbalanced `)`"));
        }
        Ok(w)
    }

    /// Canonical text, one token per letter; `1` for the empty word.
    pub fn format(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let name = &names[l.generator];
            if !l.inverse {
                out.push_str(name);
            } else if let Some(short) = uppercase_shorthand(name, names) {
                out.push(short);
            } else {
                let _ = write!(out, "{name}^-1");
            }
        }
        out
    }

    /// Pseudo-random word of the given length over `generator_count` letters and inverses.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, generator_count: usize, len: usize) -> Self {
        Self {
            letters: (0..len)
                .map(|_| Letter::new(rng.gen_range(0..generator_count), rng.gen_bool(0.5)))
                .collect(),
        }
    }
}

fn uppercase_shorthand(name: &str, names: &[String]) -> Option<char> {
    let mut chars = name.chars();
    let c = chars.next()?;
    if chars.next().is_some() || !c.is_ascii_lowercase() {
        return None;
    }
    let up = c.to_ascii_uppercase();
    if names.iter().any(|n| n.len() == 1 && n.starts_with(up)) {
        None
    } else {
        Some(up)
    }
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

struct WordParser<'a> {
    text: &'a str,
    pos: usize,
    names: &'a [String],
}

impl WordParser<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn sequence(&mut self) -> Result<Word> {
        let mut out = Word::empty();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(')') => return Ok(out),
                Some(_) => {
                    let item = self.item()?;
                    out.letters.extend(item.letters);
                }
            }
        }
    }

    fn item(&mut self) -> Result<Word> {
        let start = self.pos;
        let atom = if self.peek() == Some('(') {
            self.pos += 1;
            let inner = self.sequence()?;
            if self.peek() != Some(')') {
                return Err(Error::parse(start, "unclosed `(`"));
            }
            self.pos += 1;
            inner
        } else {
            let tok_end = self.text[self.pos..]
                .find(|c: char| !is_name_char(c))
                .map_or(self.text.len(), |i| self.pos + i);
            if tok_end == self.pos {
                return Err(Error::parse(
                    self.pos,
                    format!("unexpected character `{}`", self.peek().unwrap()),
                ));
            }
            let tok = &self.text[self.pos..tok_end];
            self.pos = tok_end;
            self.resolve(tok, start)?
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            let exp_start = self.pos;
            let end = self.text[self.pos..]
                .char_indices()
                .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && (c == '-' || c == '+'))))
                .map_or(self.text.len(), |(i, _)| self.pos + i);
            let k: i64 = self.text[exp_start..end]
                .parse()
                .map_err(|_| Error::parse(exp_start, "expected an integer exponent after `^`"))?;
            self.pos = end;
            return Ok(atom.pow(k));
        }
        Ok(atom)
    }

    fn resolve(&self, tok: &str, pos: usize) -> Result<Word> {
        if let Some(i) = self.names.iter().position(|n| n == tok) {
            return Ok(Word::generator(i));
        }
        if tok == "1" {
            return Ok(Word::empty());
        }
        let mut chars = tok.chars();
        if let (Some(c), None) = (chars.next(), chars.next()) {
            if c.is_ascii_uppercase() {
                let lower = c.to_ascii_lowercase().to_string();
                if let Some(i) = self.names.iter().position(|n| *n == lower) {
                    return Ok(Word::generator(i).inverse());
                }
            }
        }
        Err(Error::Parse {
            position: pos,
            message: format!("unknown generator `{tok}`"),
        })
    }
}

/// Signed number of occurrences of generator `i`.
pub fn exponent_sum(w: &Word, i: usize) -> i64 {
    w.letters
        .iter()
        .filter(|l| l.generator == i)
        .map(|l| l.exponent())
        .sum()
}

/// The homomorphism `α` sending every generator to `1`.
pub fn total_exponent(w: &Word) -> i64 {
    w.letters.iter().map(|l| l.exponent()).sum()
}

/// A presentation together with a representation into `Sp(2g; Z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    genus: usize,
    generator_names: Vec<String>,
    matrices: Vec<SymplecticMatrix>,
    inverses: Vec<SymplecticMatrix>,
    relators: Vec<Word>,
    relator_sources: Vec<String>,
    artin: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationFile {
    genus: usize,
    generators: Vec<String>,
    matrices: BTreeMap<String, Vec<Vec<i64>>>,
    relators: Vec<String>,
    artin: bool,
}

impl Presentation {
    /// Builds and validates a presentation.
    ///
    /// Every relator must evaluate to the identity. When `artin` is set, the
    /// braid relators `x y x (y x y)⁻¹` present among the relators must connect
    /// all generators.
    pub fn new(
        genus: usize,
        generator_names: Vec<String>,
        matrices: Vec<SymplecticMatrix>,
        relators: Vec<Word>,
        artin: bool,
    ) -> Result<Self> {
        let sources = relators.iter().map(|r| r.format(&generator_names)).collect();
        Self::with_sources(genus, generator_names, matrices, relators, sources, artin)
    }

    fn with_sources(
        genus: usize,
        generator_names: Vec<String>,
        matrices: Vec<SymplecticMatrix>,
        relators: Vec<Word>,
        relator_sources: Vec<String>,
        artin: bool,
    ) -> Result<Self> {
        if genus == 0 {
            return Err(Error::Domain("genus must be positive".into()));
        }
        if generator_names.is_empty() {
            return Err(Error::Domain("presentation has no generators".into()));
        }
        for (i, name) in generator_names.iter().enumerate() {
            if name.is_empty() || !name.chars().all(is_name_char) || name == "1" {
                return Err(Error::Domain(format!("invalid generator name `{name}`")));
            }
            if generator_names[..i].contains(name) {
                return Err(Error::Domain(format!("duplicate generator name `{name}`")));
            }
        }
        if matrices.len() != generator_names.len() {
            return Err(Error::DimensionMismatch {
                expected: format!("{} generator matrices", generator_names.len()),
                found: matrices.len().to_string(),
            });
        }
        for m in &matrices {
            if m.genus() != genus {
                return Err(Error::GenusMismatch {
                    left: genus,
                    right: m.genus(),
                });
            }
        }
        let inverses = matrices.iter().map(SymplecticMatrix::inverse).collect();
        let p = Self {
            genus,
            generator_names,
            matrices,
            inverses,
            relators,
            relator_sources,
            artin,
        };
        for (index, r) in p.relators.iter().enumerate() {
            if !p.evaluate(r)?.is_identity() {
                return Err(Error::BadRelator {
                    index,
                    word: p.relator_sources[index].clone(),
                });
            }
        }
        if artin && !p.braid_graph_connected() {
            return Err(Error::Domain(
                "artin flag set but braid relators do not connect all generators".into(),
            ));
        }
        Ok(p)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PresentationFile = serde_json::from_str(text)?;
        let mut matrices = Vec::with_capacity(file.generators.len());
        for name in &file.generators {
            let rows = file
                .matrices
                .get(name)
                .ok_or_else(|| Error::Domain(format!("no matrix for generator `{name}`")))?;
            let m = IntMatrix::from_rows(
                rows.iter()
                    .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                    .collect(),
            )?;
            matrices.push(SymplecticMatrix::with_genus(m, file.genus).map_err(|e| match e {
                Error::NotSymplectic { identity } => Error::NotSymplectic {
                    identity: format!("{identity} for generator `{name}`"),
                },
                other => other,
            })?);
        }
        if let Some(extra) = file.matrices.keys().find(|k| !file.generators.contains(k)) {
            return Err(Error::UnknownGenerator(extra.clone()));
        }
        let relators = file
            .relators
            .iter()
            .map(|r| Word::parse(r, &file.generators))
            .collect::<Result<Vec<_>>>()?;
        Self::with_sources(
            file.genus,
            file.generators,
            matrices,
            relators,
            file.relators,
            file.artin,
        )
    }

    /// Serialises in the canonical layout read by [`Presentation::from_json`].
    ///
    /// Relators keep the text they were parsed from.
    pub fn to_json(&self) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("string serialisation");
        let mut out = String::from("{\n");
        let _ = writeln!(out, "  \"genus\": {},", self.genus);
        let names: Vec<String> = self.generator_names.iter().map(|n| q(n)).collect();
        let _ = writeln!(out, "  \"generators\": [{}],", names.join(", "));
        out.push_str("  \"matrices\": {\n");
        for (i, (name, m)) in self.generator_names.iter().zip(&self.matrices).enumerate() {
            let rows: Vec<String> = m
                .matrix()
                .to_rows()
                .iter()
                .map(|r| {
                    let entries: Vec<String> = r.iter().map(ToString::to_string).collect();
                    format!("[{}]", entries.join(", "))
                })
                .collect();
            let sep = if i + 1 < self.matrices.len() { "," } else { "" };
            let _ = writeln!(out, "    {}: [{}]{sep}", q(name), rows.join(", "));
        }
        out.push_str("  },\n");
        if self.relator_sources.is_empty() {
            out.push_str("  \"relators\": [],\n");
        } else {
            out.push_str("  \"relators\": [\n");
            for (i, r) in self.relator_sources.iter().enumerate() {
                let sep = if i + 1 < self.relator_sources.len() { "," } else { "" };
                let _ = writeln!(out, "    {}{sep}", q(r));
            }
            out.push_str("  ],\n");
        }
        let _ = writeln!(out, "  \"artin\": {}", self.artin);
        out.push_str("}\n");
        out
    }

    /// `M_1 ≅ SL(2; Z)` on the twist pair `a, b` with relators
    /// `a b a = b a b` and `(a b a)^4 = 1`.
    pub fn sl2z() -> Self {
        Self::from_json(SL2Z_JSON).expect("shipped SL(2; Z) presentation is valid")
    }

    /// `M_2` on the chain twists `c1..c5` (Birman-Hilden relators).
    pub fn genus2() -> Self {
        Self::from_json(GENUS2_JSON).expect("shipped genus-2 presentation is valid")
    }

    pub fn shipped_json(genus: usize) -> Option<&'static str> {
        match genus {
            1 => Some(SL2Z_JSON),
            2 => Some(GENUS2_JSON),
            _ => None,
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn matrices(&self) -> &[SymplecticMatrix] {
        &self.matrices
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn is_artin(&self) -> bool {
        self.artin
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|n| n == name)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        Word::parse(text, &self.generator_names)
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.format(&self.generator_names)
    }

    fn check_indices(&self, w: &Word) -> Result<()> {
        match w.max_generator() {
            Some(i) if i >= self.generator_count() => Err(Error::IndexOutOfRange {
                index: i,
                count: self.generator_count(),
            }),
            _ => Ok(()),
        }
    }

    fn letter_matrix(&self, l: Letter) -> &SymplecticMatrix {
        if l.inverse {
            &self.inverses[l.generator]
        } else {
            &self.matrices[l.generator]
        }
    }

    /// Image of `w` in `Sp(2g; Z)`; the empty word maps to the identity.
    pub fn evaluate(&self, w: &Word) -> Result<SymplecticMatrix> {
        self.check_indices(w)?;
        Ok(w.letters
            .iter()
            .fold(SymplecticMatrix::identity(self.genus), |acc, &l| {
                &acc * self.letter_matrix(l)
            }))
    }

    /// `c(w) = Σ_j τ(ρ(x_1 ⋯ x_{j-1}), ρ(x_j))`.
    pub fn cochain_c(&self, w: &Word) -> Result<i64> {
        self.check_indices(w)?;
        let mut prefix = SymplecticMatrix::identity(self.genus);
        let mut total = 0i64;
        for &l in &w.letters {
            let m = self.letter_matrix(l);
            total += tau_sp(&prefix, m)?;
            prefix = &prefix * m;
        }
        Ok(total)
    }

    fn braid_graph_connected(&self) -> bool {
        let n = self.generator_count();
        let mut adj = vec![Vec::new(); n];
        for r in &self.relators {
            if let Some((x, y)) = braid_pair(r) {
                adj[x].push(y);
                adj[y].push(x);
            }
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Order of the abelianisation for an Artin-type presentation: the gcd of
    /// `α(r)` over the relators (`0` meaning infinite cyclic).
    pub fn abelianization_order(&self) -> Option<BigInt> {
        if !self.artin {
            return None;
        }
        Some(
            self.relators
                .iter()
                .fold(BigInt::zero(), |acc, r| acc.gcd(&BigInt::from(total_exponent(r)))),
        )
    }

    /// Order of the pulled-back signature class.
    ///
    /// For Artin-type presentations the unknowns collapse to a single ratio
    /// `m/n` against `α`; otherwise every generator gets its own coefficient.
    pub fn class_order(&self) -> Result<ClassOrder> {
        let c_values = self
            .relators
            .iter()
            .map(|r| self.cochain_c(r).map(BigInt::from))
            .collect::<Result<Vec<_>>>()?;
        let columns: Vec<Vec<BigInt>> = if self.artin {
            vec![self.relators.iter().map(|r| total_exponent(r).into()).collect()]
        } else {
            (0..self.generator_count())
                .map(|i| self.relators.iter().map(|r| exponent_sum(r, i).into()).collect())
                .collect()
        };
        let Some((n, solution)) = minimal_multiplier(&columns, &c_values) else {
            return Ok(ClassOrder::Unbounded);
        };
        let (coefficients, m) = if self.artin {
            let q = solution[0].clone();
            let m = (&q * Rational::from_integer(n.clone())).to_integer();
            (vec![q; self.generator_count()], Some(m))
        } else {
            (solution, None)
        };
        let order = FiniteOrder { n, m, coefficients };
        self.verify_order(&order, &c_values)?;
        Ok(ClassOrder::Finite(order))
    }

    fn verify_order(&self, order: &FiniteOrder, c_values: &[BigInt]) -> Result<()> {
        let n = Rational::from_integer(order.n.clone());
        for (r, c) in self.relators.iter().zip(c_values) {
            let rhs: Rational = order
                .coefficients
                .iter()
                .enumerate()
                .map(|(i, q)| q * Rational::from_integer(exponent_sum(r, i).into()))
                .sum();
            if Rational::from_integer(c.clone()) != rhs {
                return Err(Error::Internal("class order solution fails a relator".into()));
            }
        }
        if order.coefficients.iter().any(|q| !(q * &n).is_integer()) {
            return Err(Error::Internal("class order coefficients not in (1/n)Z".into()));
        }
        if let Some(m) = &order.m {
            // n·c(r) = m·α(r), and no proper divisor of n admits an integer m
            for (r, c) in self.relators.iter().zip(c_values) {
                if &order.n * c != m * BigInt::from(total_exponent(r)) {
                    return Err(Error::Internal("n·c(r) != m·α(r)".into()));
                }
            }
            if !m.is_zero() && !m.gcd(&order.n).is_one() {
                return Err(Error::Internal("m/n not reduced".into()));
            }
        }
        Ok(())
    }

    /// Meyer function on `G` whose coboundary is the pulled-back cocycle.
    pub fn synthesize_meyer(&self) -> Result<SynthesizedMeyerFunction> {
        match self.class_order()? {
            ClassOrder::Finite(order) => Ok(SynthesizedMeyerFunction {
                presentation: self.clone(),
                order,
            }),
            ClassOrder::Unbounded => Err(Error::NoMeyerFunction),
        }
    }
}

/// `Some((x, y))` if `r` freely reduces to `x y x y⁻¹ x⁻¹ y⁻¹` or its inverse.
fn braid_pair(r: &Word) -> Option<(usize, usize)> {
    let reduced = r.free_reduce();
    for w in [reduced.clone(), reduced.inverse()] {
        let l = w.letters();
        if l.len() == 6 && l[..3].iter().all(|x| !x.inverse) && l[3..].iter().all(|x| x.inverse) {
            let (x, y) = (l[0].generator, l[1].generator);
            if x != y
                && l[2].generator == x
                && l[3].generator == y
                && l[4].generator == x
                && l[5].generator == y
            {
                return Some((x, y));
            }
        }
    }
    None
}

/// Smallest `n ≥ 1` such that `n·c` lies in the integer span of `columns`,
/// together with a rational solution `q` of `Σ q_k column_k = c` with `n·q`
/// integral. `None` if `c` is not even in the rational span.
fn minimal_multiplier(columns: &[Vec<BigInt>], c: &[BigInt]) -> Option<(BigInt, Vec<Rational>)> {
    let rows = c.len();
    let k = columns.len();
    // work with columns as vectors; track the unimodular transform
    let mut cols: Vec<Vec<BigInt>> = columns.to_vec();
    let mut transform: Vec<Vec<BigInt>> = (0..k)
        .map(|i| (0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for row in 0..rows {
        if rank == k {
            break;
        }
        // gcd-combine columns rank..k on this row into column `rank`
        for j in (rank + 1)..k {
            if cols[j][row].is_zero() {
                continue;
            }
            let a = cols[rank][row].clone();
            let b = cols[j][row].clone();
            let e = a.extended_gcd(&b);
            let (g, x, y) = (e.gcd, e.x, e.y);
            let (ua, ub) = (&a / &g, &b / &g);
            // [col_r, col_j] ← [x col_r + y col_j, -ub col_r + ua col_j]
            combine(&mut cols, rank, j, &x, &y, &ub, &ua);
            combine(&mut transform, rank, j, &x, &y, &ub, &ua);
        }
        if !cols[rank][row].is_zero() {
            if cols[rank][row].is_negative() {
                for v in cols[rank].iter_mut().chain(transform[rank].iter_mut()) {
                    *v = -&*v;
                }
            }
            pivots.push(row);
            rank += 1;
        }
    }

    // forward substitution on H y = c
    let mut y: Vec<Rational> = Vec::with_capacity(rank);
    for (t, &row) in pivots.iter().enumerate() {
        let partial: Rational = (0..t)
            .map(|s| Rational::from_integer(cols[s][row].clone()) * &y[s])
            .sum();
        y.push((Rational::from_integer(c[row].clone()) - partial) / Rational::from_integer(cols[t][row].clone()));
    }
    for (row, cr) in c.iter().enumerate() {
        let value: Rational = (0..rank)
            .map(|s| Rational::from_integer(cols[s][row].clone()) * &y[s])
            .sum();
        if value != Rational::from_integer(cr.clone()) {
            return None;
        }
    }
    let n = y.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let q = (0..k)
        .map(|i| {
            (0..rank)
                .map(|s| Rational::from_integer(transform[s][i].clone()) * &y[s])
                .sum()
        })
        .collect();
    Some((n, q))
}

fn combine(
    cols: &mut [Vec<BigInt>],
    r: usize,
    j: usize,
    x: &BigInt,
    y: &BigInt,
    ub: &BigInt,
    ua: &BigInt,
) {
    let (cr, cj) = (cols[r].clone(), cols[j].clone());
    cols[r] = cr.iter().zip(&cj).map(|(p, q)| x * p + y * q).collect();
    cols[j] = cr.iter().zip(&cj).map(|(p, q)| -(ub * p) + ua * q).collect();
}

/// Result of [`Presentation::class_order`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassOrder {
    Finite(FiniteOrder),
    /// No rational solution: the class has infinite order.
    Unbounded,
}

impl ClassOrder {
    pub fn order(&self) -> Option<u64> {
        match self {
            ClassOrder::Finite(o) => o.n.to_u64(),
            ClassOrder::Unbounded => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteOrder {
    /// Order of the class.
    pub n: BigInt,
    /// Numerator of the common ratio `c(r)/α(r) = m/n` (Artin-type presentations only).
    pub m: Option<BigInt>,
    /// Per-generator coefficients `q_i`; `φ(x) = -c(x) + Σ q_i e_i^*(x)`.
    pub coefficients: Vec<Rational>,
}

/// `φ(x) = -c(x) + Σ q_i e_i^*(x)` on words of a presentation.
#[derive(Debug, Clone)]
pub struct SynthesizedMeyerFunction {
    presentation: Presentation,
    order: FiniteOrder,
}

impl SynthesizedMeyerFunction {
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn order(&self) -> &FiniteOrder {
        &self.order
    }

    pub fn n(&self) -> &BigInt {
        &self.order.n
    }

    pub fn m(&self) -> Option<&BigInt> {
        self.order.m.as_ref()
    }

    pub fn eval(&self, w: &Word) -> Result<Rational> {
        let c = self.presentation.cochain_c(w)?;
        let linear: Rational = self
            .order
            .coefficients
            .iter()
            .enumerate()
            .map(|(i, q)| q * Rational::from_integer(exponent_sum(w, i).into()))
            .sum();
        Ok(linear - Rational::from_integer(c.into()))
    }

    pub fn eval_str(&self, text: &str) -> Result<Rational> {
        self.eval(&self.presentation.parse_word(text)?)
    }
}
