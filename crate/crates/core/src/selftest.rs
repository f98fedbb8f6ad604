//! Randomised invariant suites behind `meyer --selftest`.

use std::thread;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cocycle::{sigma_defect_via_tau, tau_sp};
use crate::data::DataSet;
use crate::exact::{int, Rational};
use crate::fibered::{geography_convert, geography_invert};
use crate::genus1::{dedekind_sum, phi1_matrix, sigma_defect, SL2Element};
use crate::presentations::{Letter, Presentation, Word};
use crate::symplectic::{random_symplectic_with, SymplecticMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Suite {
    name: String,
    cases: usize,
    failures: Vec<String>,
}

impl Suite {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        }
    }

    fn fail(&mut self, e: crate::Error) {
        self.cases += 1;
        if self.failures.len() < 5 {
            self.failures.push(e.to_string());
        }
    }

    fn done(self) -> SuiteReport {
        SuiteReport {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
        }
    }
}

fn random_word(rng: &mut ChaCha8Rng, p: &Presentation, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::random(rng, p.generator_count(), len)
}

fn cocycle_axioms(genus: usize, trials: usize, seed: u64) -> SuiteReport {
    let mut s = Suite::new(format!("cocycle axioms, genus {genus}"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let [a, b, c] = [(); 3].map(|_| random_symplectic_with(genus, 8, &mut rng));
        let t = |x: &SymplecticMatrix, y: &SymplecticMatrix| tau_sp(x, y);
        let run = || -> crate::Result<Vec<(bool, &'static str)>> {
            let id = SymplecticMatrix::identity(genus);
            let ab = &a * &b;
            let bc = &b * &c;
            let cinv = c.inverse();
            Ok(vec![
                (t(&ab, &c)? + t(&a, &b)? == t(&a, &bc)? + t(&b, &c)?, "cocycle"),
                (t(&a, &id)? == 0 && t(&id, &a)? == 0 && t(&a, &a.inverse())? == 0, "normalisation"),
                (t(&a.inverse(), &b.inverse())? == -t(&a, &b)?, "inversion"),
                (t(&a, &b)? == t(&b, &a)?, "symmetry"),
                (t(&(&(&c * &a) * &cinv), &(&(&c * &b) * &cinv))? == t(&a, &b)?, "conjugation"),
                (t(&a, &b)?.unsigned_abs() as usize <= 4 * genus, "bound"),
            ])
        };
        match run() {
            Ok(results) => {
                for (ok, what) in results {
                    s.check(ok, || format!("{what} fails for A = {a}, B = {b}, C = {c}"));
                }
            }
            Err(e) => s.fail(e),
        }
    }
    s.done()
}

fn coboundary(p: &Presentation, trials: usize, seed: u64) -> SuiteReport {
    let mut s = Suite::new("tau = coboundary of phi_1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let x = p.evaluate(&random_word(&mut rng, p, 20)).expect("generators in range");
        let y = p.evaluate(&random_word(&mut rng, p, 20)).expect("generators in range");
        let run = || -> crate::Result<bool> {
            let lhs = int(tau_sp(&x, &y)?);
            Ok(lhs == phi1_matrix(&x)? - phi1_matrix(&(&x * &y))? + phi1_matrix(&y)?)
        };
        match run() {
            Ok(ok) => s.check(ok, || format!("fails for {x}, {y}")),
            Err(e) => s.fail(e),
        }
    }
    s.done()
}

fn synthesized_genus1(p: &Presentation, trials: usize, seed: u64) -> SuiteReport {
    let mut s = Suite::new("synthesized phi = closed-form phi_1");
    let phi = match p.synthesize_meyer() {
        Ok(phi) => phi,
        Err(e) => {
            s.fail(e);
            return s.done();
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let w = random_word(&mut rng, p, 16);
        let run = || -> crate::Result<bool> { Ok(phi.eval(&w)? == phi1_matrix(&p.evaluate(&w)?)?) };
        match run() {
            Ok(ok) => s.check(ok, || format!("differs on {}", p.format_word(&w))),
            Err(e) => s.fail(e),
        }
    }
    s.done()
}

fn genus2_denominators(p: &Presentation, trials: usize, seed: u64) -> SuiteReport {
    let mut s = Suite::new("5 phi_2 is integral");
    let phi = match p.synthesize_meyer() {
        Ok(phi) => phi,
        Err(e) => {
            s.fail(e);
            return s.done();
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let w = random_word(&mut rng, p, 12);
        match phi.eval(&w) {
            Ok(v) => s.check((v.clone() * int(5)).is_integer(), || {
                format!("phi_2({}) = {v}", p.format_word(&w))
            }),
            Err(e) => s.fail(e),
        }
    }
    s.done()
}

fn defect_identity(trials: usize, seed: u64) -> SuiteReport {
    let mut s = Suite::new("sigma via tau = 2x2 signature");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let m = random_symplectic_with(1, 12, &mut rng);
        let alpha = SL2Element::try_from(&m).expect("genus 1");
        match sigma_defect_via_tau(&m) {
            Ok(v) => s.check(v == sigma_defect(&alpha), || format!("fails for {m}")),
            Err(e) => s.fail(e),
        }
    }
    s.done()
}

fn dedekind(max_c: i64) -> SuiteReport {
    let mut s = Suite::new(format!("Dedekind reciprocity, c <= {max_c}"));
    for c in 2..=max_c {
        for a in 1..c {
            if a.gcd(&c) != 1 {
                continue;
            }
            let (ba, bc) = (BigInt::from(a), BigInt::from(c));
            let run = || -> crate::Result<bool> {
                let lhs = dedekind_sum(&ba, &bc)? + dedekind_sum(&bc, &ba)?;
                let rhs = Rational::new(BigInt::from(a * a + c * c + 1), BigInt::from(12 * a * c))
                    - Rational::new(BigInt::from(1), BigInt::from(4));
                let periodic = dedekind_sum(&(&ba + &bc), &bc)? == dedekind_sum(&ba, &bc)?;
                Ok(lhs == rhs && periodic)
            };
            match run() {
                Ok(ok) => s.check(ok, || format!("fails at a = {a}, c = {c}")),
                Err(e) => s.fail(e),
            }
        }
    }
    s.done()
}

fn free_reduction(p: &Presentation, trials: usize, seed: u64) -> SuiteReport {
    let mut s = Suite::new(format!("free-reduction invariance, genus {}", p.genus()));
    let phi = p.synthesize_meyer().ok();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let w = random_word(&mut rng, p, 12);
        let pos = rng.gen_range(0..=w.len());
        let l = Letter::new(rng.gen_range(0..p.generator_count()), rng.gen_bool(0.5));
        let padded = w.insert_cancelling_pair(pos, l);
        let run = || -> crate::Result<bool> {
            let mut ok = p.evaluate(&w)? == p.evaluate(&padded)?
                && p.cochain_c(&w)? == p.cochain_c(&padded)?
                && p.cochain_c(&padded.free_reduce())? == p.cochain_c(&w)?;
            if let Some(phi) = &phi {
                ok &= phi.eval(&w)? == phi.eval(&padded)?;
            }
            Ok(ok)
        };
        match run() {
            Ok(ok) => s.check(ok, || format!("fails on {}", p.format_word(&w))),
            Err(e) => s.fail(e),
        }
    }
    s.done()
}

fn geography(trials: usize, seed: u64) -> SuiteReport {
    let mut s = Suite::new("geography round trip");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let k = int(rng.gen_range(-1000..=1000));
        let chi = int(rng.gen_range(-1000..=1000));
        let back = geography_invert(&geography_convert(&k, &chi));
        s.check(back == (k.clone(), chi.clone()), || format!("fails at ({k}, {chi})"));
    }
    s.done()
}

/// Runs every suite, each on its own thread, with seeds derived from `seed`.
pub fn run(seed: u64, data: &DataSet) -> Vec<SuiteReport> {
    let (g1, g2) = (&data.sl2z, &data.genus2);
    thread::scope(|scope| {
        let handles = vec![
            scope.spawn(move || cocycle_axioms(1, 60, seed)),
            scope.spawn(move || cocycle_axioms(2, 40, seed.wrapping_add(1))),
            scope.spawn(move || cocycle_axioms(3, 20, seed.wrapping_add(2))),
            scope.spawn(move || coboundary(g1, 300, seed.wrapping_add(3))),
            scope.spawn(move || synthesized_genus1(g1, 200, seed.wrapping_add(4))),
            scope.spawn(move || genus2_denominators(g2, 100, seed.wrapping_add(5))),
            scope.spawn(move || defect_identity(200, seed.wrapping_add(6))),
            scope.spawn(|| dedekind(60)),
            scope.spawn(move || free_reduction(g1, 200, seed.wrapping_add(7))),
            scope.spawn(move || free_reduction(g2, 60, seed.wrapping_add(8))),
            scope.spawn(move || geography(500, seed.wrapping_add(9))),
        ];
        handles
            .into_iter()
            .map(|h| h.join().expect("suite panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        for report in run(7, &DataSet::embedded()) {
            assert!(report.passed(), "{}: {:?}", report.name, report.failures);
            assert!(report.cases > 0, "{}", report.name);
        }
    }
}
