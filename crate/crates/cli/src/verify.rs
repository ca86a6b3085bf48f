//! Property suites behind `dyckperm verify`.
//!
//! Every (suite, n) pair is an independent task. Sizes up to a per-suite
//! limit are checked exhaustively; larger sizes are sampled from a ChaCha
//! stream keyed by the seed, the suite and n, so reports do not depend on
//! scheduling.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use dyckperm::bijection::{inverse_symmetry_holds, nu_inv_global, rc_symmetry_holds};
use dyckperm::involution::oracle;
use dyckperm::poset::leq_oracle;
use dyckperm::{
    catalan, is_admissible, kreweras, lambda_map, leq, lprime, mu_map, nu, nu_inv, Corpus,
    DyckPath, Error, PathPair, Pattern, Permutation,
};

use crate::args::Suite;

const SAMPLES: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub suite: &'static str,
    pub n: usize,
    pub mode: Mode,
    pub passed: bool,
    pub checked: u64,
    pub violations: u64,
    pub detail: String,
    pub counterexample: Option<String>,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            Mode::Exhaustive => "exhaustive",
            Mode::Sampled => "sampled",
        };
        write!(
            f,
            "{} {:<12} n={:<2} {:<10} {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.n,
            mode,
            self.detail
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "; counterexample: {}", c)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct Config {
    pub n_max: usize,
    pub suites: Vec<Suite>,
    pub jobs: usize,
    pub seed: u64,
    pub cap: usize,
}

pub fn run(config: &Config) -> Result<Vec<Outcome>, Error> {
    if config.n_max > config.cap {
        return Err(Error::SizeCap {
            n: config.n_max,
            cap: config.cap,
        });
    }
    let suites: BTreeSet<Suite> = if config.suites.contains(&Suite::All) {
        Suite::EACH.into_iter().collect()
    } else {
        config.suites.iter().copied().collect()
    };
    let tasks: Vec<(Suite, usize)> = suites
        .iter()
        .flat_map(|&s| (1..=config.n_max).map(move |n| (s, n)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::InternalConsistency(format!("worker pool: {}", e)))?;
    let seed = config.seed;
    Ok(pool.install(|| {
        tasks
            .par_iter()
            .map(|&(suite, n)| check(suite, n, seed))
            .collect()
    }))
}

pub fn check(suite: Suite, n: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((suite as u64) << 32 | n as u64);
    match suite {
        Suite::All => unreachable!("expanded by run"),
        Suite::Counts => counts(n, &mut rng),
        Suite::Involutions => involutions(n),
        Suite::MuLprime => mu_is_lprime_of_lambda(n),
        Suite::Image => image_equality(n, &mut rng),
        Suite::Roundtrip => roundtrip(n, &mut rng),
        Suite::PosetOracle => poset_oracle(n, &mut rng),
        Suite::Symmetries => symmetries(n, &mut rng),
        Suite::Multiplicativity => multiplicativity(n, &mut rng),
        Suite::OrderCriterion => order_criterion(n, &mut rng),
    }
}

/// Running tally: how many cases were examined, how many failed, and the
/// first failure.
#[derive(Default)]
struct Tally {
    checked: u64,
    violations: u64,
    first: Option<String>,
}

impl Tally {
    fn record(&mut self, failure: Option<String>) {
        self.checked += 1;
        if let Some(f) = failure {
            self.violations += 1;
            self.first.get_or_insert(f);
        }
    }

    fn finish(self, suite: Suite, n: usize, mode: Mode, detail: String) -> Outcome {
        let detail = if self.violations == 0 {
            detail
        } else {
            format!(
                "{}; {} of {} cases violated",
                detail, self.violations, self.checked
            )
        };
        Outcome {
            suite: suite.name(),
            n,
            mode,
            passed: self.violations == 0,
            checked: self.checked,
            violations: self.violations,
            detail,
            counterexample: self.first,
        }
    }
}

fn fail_if(bad: bool, msg: impl FnOnce() -> String) -> Option<String> {
    bad.then(msg)
}

fn corpus() -> Corpus {
    Corpus::with_cap(usize::MAX)
}

fn all_perms(n: usize) -> Vec<Permutation> {
    corpus().permutations(n).expect("uncapped").collect()
}

fn avoiders(n: usize, pattern: Pattern) -> Vec<Permutation> {
    corpus().avoiding(n, pattern).expect("uncapped").collect()
}

fn all_paths(n: usize) -> Vec<DyckPath> {
    corpus().dyck_paths(n).expect("uncapped").collect()
}

fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Permutation::new(v).expect("shuffle of 1..n")
}

fn random_path(n: usize, rng: &mut ChaCha8Rng) -> DyckPath {
    // λ is onto, so this reaches every path (not uniformly)
    lambda_map(&random_perm(n, rng))
}

fn perms_for(n: usize, limit: usize, rng: &mut ChaCha8Rng) -> (Mode, Vec<Permutation>) {
    if n <= limit {
        (Mode::Exhaustive, all_perms(n))
    } else {
        (
            Mode::Sampled,
            (0..SAMPLES).map(|_| random_perm(n, rng)).collect(),
        )
    }
}

fn counts(n: usize, rng: &mut ChaCha8Rng) -> Outcome {
    let mut t = Tally::default();
    let c123 = avoiders(n, Pattern::P123).len() as u128;
    t.record(fail_if(c123 != catalan(n), || {
        format!("|S_{}(123)| = {} but C_{} = {}", n, c123, n, catalan(n))
    }));
    let paths = all_paths(n).len() as u128;
    t.record(fail_if(paths != catalan(n), || {
        format!(
            "{} Dyck paths of semilength {}, expected {}",
            paths,
            n,
            catalan(n)
        )
    }));
    let fast = avoiders(n, Pattern::P1234).len();
    let pattern = Pattern::P1234.as_permutation();
    let mode = if n <= 8 {
        let generic = corpus()
            .permutations(n)
            .expect("uncapped")
            .filter(|s| !s.contains_pattern(&pattern))
            .count();
        t.record(fail_if(fast != generic, || {
            format!(
                "LIS generator gives {}, pattern search gives {}",
                fast, generic
            )
        }));
        Mode::Exhaustive
    } else {
        for _ in 0..SAMPLES {
            let s = random_perm(n, rng);
            t.record(fail_if(
                s.avoids_1234() == s.contains_pattern(&pattern),
                || format!("σ = {}: LIS test and pattern search disagree", s),
            ));
        }
        Mode::Sampled
    };
    let detail = format!("|S_n(123)| = {}, |S_n(1234)| = {}", c123, fast);
    t.finish(Suite::Counts, n, mode, detail)
}

fn involutions(n: usize) -> Outcome {
    let mut t = Tally::default();
    let paths = all_paths(n);
    for p in &paths {
        let l = kreweras(p);
        let lp = lprime(p);
        t.record(fail_if(kreweras(&l) != *p, || {
            format!("L(L({})) = {}", p, kreweras(&l))
        }));
        t.record(fail_if(lprime(&lp) != *p, || {
            format!("L′(L′({})) = {}", p, lprime(&lp))
        }));
        t.record(fail_if(oracle::kreweras(p).as_ref() != Some(&l), || {
            format!(
                "L({}): code formula {} vs geometric {:?}",
                p,
                l,
                oracle::kreweras(p)
            )
        }));
        t.record(fail_if(oracle::lprime(p).as_ref() != Some(&lp), || {
            format!(
                "L′({}): code formula {} vs geometric {:?}",
                p,
                lp,
                oracle::lprime(p)
            )
        }));
    }
    let detail = format!("{} paths", paths.len());
    t.finish(Suite::Involutions, n, Mode::Exhaustive, detail)
}

fn mu_is_lprime_of_lambda(n: usize) -> Outcome {
    let mut t = Tally::default();
    let avoid = avoiders(n, Pattern::P123);
    for s in &avoid {
        let mu = mu_map(s);
        let image = lprime(&lambda_map(s));
        t.record(fail_if(mu != image, || {
            format!("σ = {}: μ = {}, L′(λ) = {}", s, mu, image)
        }));
    }
    let detail = format!("μ = L′∘λ on {} avoiders of 123", avoid.len());
    t.finish(Suite::MuLprime, n, Mode::Exhaustive, detail)
}

fn admissible_or_err(pair: &PathPair) -> Result<bool, String> {
    is_admissible(pair).map_err(|e| format!("{}: {}", pair, e))
}

fn image_equality(n: usize, rng: &mut ChaCha8Rng) -> Outcome {
    let mut t = Tally::default();
    if n <= 7 {
        let avoid = avoiders(n, Pattern::P1234);
        let image: BTreeSet<PathPair> = avoid.iter().map(nu).collect();
        t.record(fail_if(image.len() != avoid.len(), || {
            format!(
                "{} avoiders but {} distinct images",
                avoid.len(),
                image.len()
            )
        }));
        let paths = all_paths(n);
        let mut admissible = 0usize;
        for p in &paths {
            for q in &paths {
                let pair = PathPair::new(p.clone(), q.clone()).expect("same semilength");
                match admissible_or_err(&pair) {
                    Ok(a) => {
                        admissible += usize::from(a);
                        let inside = image.contains(&pair);
                        t.record(fail_if(a != inside, || {
                            format!("{}: admissible = {}, in image = {}", pair, a, inside)
                        }));
                    }
                    Err(e) => t.record(Some(e)),
                }
            }
        }
        let detail = format!(
            "image size {}, admissible pairs {}",
            image.len(),
            admissible
        );
        t.finish(Suite::Image, n, Mode::Exhaustive, detail)
    } else {
        for _ in 0..SAMPLES {
            let alpha = random_perm(n, rng).canonical_representative();
            let pair = nu(&alpha);
            t.record(match admissible_or_err(&pair) {
                Ok(a) => fail_if(!a, || format!("ν({}) = {} is not admissible", alpha, pair)),
                Err(e) => Some(e),
            });
            let p = random_path(n, rng);
            let q = random_path(n, rng);
            let pair = PathPair::new(p, q).expect("same semilength");
            t.record(match admissible_or_err(&pair) {
                Ok(true) => match nu_inv(&pair) {
                    Ok(a) => fail_if(nu(&a) != pair, || format!("ν(ν⁻¹({})) = {}", pair, nu(&a))),
                    Err(e) => Some(format!("{}: {}", pair, e)),
                },
                Ok(false) => None,
                Err(e) => Some(e),
            });
        }
        t.finish(
            Suite::Image,
            n,
            Mode::Sampled,
            "image ⊆ admissible ⊆ image".into(),
        )
    }
}

fn roundtrip(n: usize, rng: &mut ChaCha8Rng) -> Outcome {
    let mut t = Tally::default();
    let (mode, alphas) = if n <= 8 {
        (Mode::Exhaustive, avoiders(n, Pattern::P1234))
    } else {
        let sample = (0..SAMPLES)
            .map(|_| random_perm(n, rng).canonical_representative())
            .collect();
        (Mode::Sampled, sample)
    };
    for a in &alphas {
        let pair = nu(a);
        t.record(match nu_inv(&pair) {
            Ok(back) => fail_if(&back != a, || format!("ν⁻¹(ν({})) = {}", a, back)),
            Err(e) => Some(format!("ν⁻¹(ν({})): {}", a, e)),
        });
        t.record(match nu_inv_global(&pair) {
            Ok(back) => fail_if(&back != a, || {
                format!("global merge on ν({}) gives {}", a, back)
            }),
            Err(e) => Some(format!("global merge on ν({}): {}", a, e)),
        });
    }
    let detail = format!("{} avoiders of 1234", alphas.len());
    t.finish(Suite::Roundtrip, n, mode, detail)
}

fn poset_oracle(n: usize, rng: &mut ChaCha8Rng) -> Outcome {
    let mut t = Tally::default();
    let compare = |t: &mut Tally, p: &DyckPath, q: &DyckPath| {
        let fast = leq(p, q);
        let slow = leq_oracle(p, q);
        t.record(fail_if(fast != slow, || {
            format!("{} ≤ {}: direct {:?}, closure {:?}", p, q, fast, slow)
        }));
    };
    let mode = if n <= 6 {
        let paths = all_paths(n);
        for p in &paths {
            for q in &paths {
                compare(&mut t, p, q);
            }
        }
        Mode::Exhaustive
    } else {
        for _ in 0..SAMPLES {
            let p = random_path(n, rng);
            let q = random_path(n, rng);
            compare(&mut t, &p, &q);
            // a comparable pair is far likelier along a chain of covers
            if let Some(up) = dyckperm::poset::upper_covers(&p).choose(rng) {
                compare(&mut t, &p, up);
            }
        }
        Mode::Sampled
    };
    let detail = format!("{} ordered pairs", t.checked);
    t.finish(Suite::PosetOracle, n, mode, detail)
}

fn symmetries(n: usize, rng: &mut ChaCha8Rng) -> Outcome {
    let mut t = Tally::default();
    let (mode, perms) = perms_for(n, 7, rng);
    for s in &perms {
        let pair = nu(s);
        t.record(fail_if(!rc_symmetry_holds(s), || {
            format!("σ = {}: ν(σ^rc) is not the swapped pair", s)
        }));
        t.record(fail_if(!inverse_symmetry_holds(s), || {
            format!("σ = {}: ν(σ⁻¹) is not the mirrored pair", s)
        }));
        if s.reverse_complement() == *s {
            t.record(fail_if(pair.first != pair.second, || {
                format!("σ = {} is rc-invariant but ν(σ) = {}", s, pair)
            }));
        }
        if s.inverse() == *s {
            t.record(fail_if(pair.reversed() != pair, || {
                format!("σ = {} is an involution but ν(σ) = {}", s, pair)
            }));
        }
        // the converses hold on 1234-avoiders
        if s.avoids_1234() {
            let rc = pair.first == pair.second;
            t.record(fail_if(rc != (s.reverse_complement() == *s), || {
                format!("α = {}: L = R is {} but α^rc = α is {}", s, rc, !rc)
            }));
            let sym = pair.reversed() == pair;
            t.record(fail_if(sym != (s.inverse() == *s), || {
                format!(
                    "α = {}: symmetric paths is {} but α⁻¹ = α is {}",
                    s, sym, !sym
                )
            }));
        }
    }
    let detail = format!("{} permutations", perms.len());
    t.finish(Suite::Symmetries, n, mode, detail)
}

fn multiplicativity(n: usize, rng: &mut ChaCha8Rng) -> Outcome {
    let mut t = Tally::default();
    let (mode, perms) = perms_for(n, 7, rng);
    for s in &perms {
        let comps = s.right_connected_components();
        let lam = DyckPath::concat_all(&comps.iter().map(lambda_map).collect::<Vec<_>>());
        let mu = DyckPath::concat_all(&comps.iter().rev().map(mu_map).collect::<Vec<_>>());
        t.record(fail_if(lam != lambda_map(s), || {
            format!(
                "σ = {}: λ(σ) = {}, product over components = {}",
                s,
                lambda_map(s),
                lam
            )
        }));
        t.record(fail_if(mu != mu_map(s), || {
            format!("σ = {}: μ(σ) = {}, reversed product = {}", s, mu_map(s), mu)
        }));
    }
    let detail = format!(
        "{} permutations; μ multiplies in reverse component order",
        perms.len()
    );
    t.finish(Suite::Multiplicativity, n, mode, detail)
}

fn shown(r: &Result<bool, String>) -> String {
    match r {
        Ok(b) => b.to_string(),
        Err(e) => format!("error ({})", e),
    }
}

fn order_criterion(n: usize, rng: &mut ChaCha8Rng) -> Outcome {
    let mut t = Tally::default();
    let mut compare = |s: &Permutation,
                       u: &Permutation,
                       ls: &DyckPath,
                       lu: &DyckPath,
                       ms: &DyckPath,
                       mu: &DyckPath| {
        let intrinsic = s.leq_lambda(u).map_err(|e| e.to_string());
        let paths = leq(ls, lu).map_err(|e| e.to_string());
        t.record(fail_if(intrinsic != paths, || {
            format!(
                "σ = {}, τ = {}: minima criterion {}, λ(σ) ≤ λ(τ) {}",
                s,
                u,
                shown(&intrinsic),
                shown(&paths)
            )
        }));
        let intrinsic = s.leq_mu(u).map_err(|e| e.to_string());
        let paths = leq(ms, mu).map_err(|e| e.to_string());
        t.record(fail_if(intrinsic != paths, || {
            format!(
                "σ = {}, τ = {}: maxima criterion {}, μ(σ) ≤ μ(τ) {}",
                s,
                u,
                shown(&intrinsic),
                shown(&paths)
            )
        }));
    };
    let mode = if n <= 6 {
        let perms = all_perms(n);
        let lam: Vec<_> = perms.iter().map(lambda_map).collect();
        let mus: Vec<_> = perms.iter().map(mu_map).collect();
        for i in 0..perms.len() {
            for j in 0..perms.len() {
                compare(&perms[i], &perms[j], &lam[i], &lam[j], &mus[i], &mus[j]);
            }
        }
        Mode::Exhaustive
    } else {
        for _ in 0..SAMPLES {
            let s = random_perm(n, rng);
            // pull τ toward σ so that comparable pairs actually occur
            let mut v = s.values().to_vec();
            let swaps = rng.gen_range(0..=2);
            for _ in 0..swaps {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                v.swap(i, j);
            }
            let u = Permutation::new(v).expect("transposed permutation");
            compare(
                &s,
                &u,
                &lambda_map(&s),
                &lambda_map(&u),
                &mu_map(&s),
                &mu_map(&u),
            );
        }
        Mode::Sampled
    };
    let detail = format!("{} comparisons", t.checked);
    t.finish(Suite::OrderCriterion, n, mode, detail)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn image_suite_reports_image_size() {
        let out = check(Suite::Image, 5, 0);
        assert!(out.passed, "{}", out);
        assert!(out.detail.contains("image size 103"), "{}", out.detail);
    }

    #[test]
    fn sampling_is_reproducible() {
        let a = check(Suite::Symmetries, 9, 7);
        let b = check(Suite::Symmetries, 9, 7);
        assert_eq!(a.mode, Mode::Sampled);
        assert_eq!(a.detail, b.detail);
        assert_eq!(a.checked, b.checked);
    }

    #[test]
    fn cap_is_enforced() {
        let config = Config {
            n_max: 11,
            suites: vec![Suite::Counts],
            jobs: 1,
            seed: 0,
            cap: 10,
        };
        assert_eq!(run(&config).err(), Some(Error::SizeCap { n: 11, cap: 10 }));
    }

    #[test]
    fn literal_minima_criterion_fails_at_two() {
        let out = check(Suite::OrderCriterion, 2, 0);
        assert!(!out.passed);
        assert_eq!(out.violations, 2);
    }
}
