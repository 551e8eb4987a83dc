//! Named self-check suites, run by `rmtori verify`.
//!
//! Each suite returns one [`Check`] per property; a build is healthy when
//! every check of `all` passes.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::{Integer, Rational};

use crate::bej::BejSpec;
use crate::cf::{pell_check, PeriodicCF, QuadCoeffs};
use crate::error::{Error, Result};
use crate::exact::QuadraticSurd;
use crate::surface::{
    minimal_model_theta, palindrome_shape, section_verify, tate_shioda_check, CFSection, CMSpec,
    LegendreSurface, CLASS_NUMBER_ONE_TABLE,
};

pub const SUITES: [&str; 7] = [
    "figure2",
    "roundtrip",
    "bej",
    "surface",
    "minimal",
    "palindrome",
    "picard",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// The property held and, for timed checks, finished within `limit`.
    pub passed: bool,
    pub detail: String,
    pub elapsed: Option<Duration>,
    pub limit: Option<Duration>,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
            elapsed: None,
            limit: None,
        }
    }

    fn timed(
        name: &str,
        passed: bool,
        detail: impl Into<String>,
        elapsed: Duration,
        limit: Duration,
    ) -> Self {
        Check {
            passed: passed && elapsed < limit,
            elapsed: Some(elapsed),
            limit: Some(limit),
            ..Check::new(name, passed, detail)
        }
    }
}

impl Check {
    fn with_elapsed(mut self, elapsed: Duration) -> Self {
        self.elapsed = Some(elapsed);
        self
    }
}

/// Runs one suite by name, or every suite for `"all"`.
pub fn run_suite(name: &str) -> Result<Vec<Check>> {
    match name {
        "all" => Ok(SUITES
            .iter()
            .flat_map(|s| run_suite(s).expect("known suite"))
            .collect()),
        "figure2" => Ok(vec![figure2()]),
        "roundtrip" => Ok(roundtrip()),
        "bej" => Ok(vec![bej_scan()]),
        "surface" => Ok(vec![surface()]),
        "minimal" => Ok(vec![minimal()]),
        "palindrome" => Ok(vec![palindrome()]),
        "picard" => Ok(vec![picard()]),
        other => Err(Error::OutOfRange(format!(
            "unknown suite {other:?}; expected all or one of {}",
            SUITES.join(", ")
        ))),
    }
}

/// Canonical surds with `|a| <= 1000`, `b = ±1`, `1 <= c <= 1000` and a
/// non-square radicand up to 10^6.
pub fn random_surds(seed: u64, count: usize) -> Vec<QuadraticSurd> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a: i64 = rng.gen_range(-1000..=1000);
            let b: i64 = if rng.gen() { 1 } else { -1 };
            let c: i64 = rng.gen_range(1..=1000);
            loop {
                let delta: i64 = rng.gen_range(2..=1_000_000);
                if let Ok(x) = QuadraticSurd::new(a, b, c, delta) {
                    break x;
                }
            }
        })
        .collect()
}

/// Canonical periodic fractions with `N <= 5`, `1 <= k <= 6` and entries of
/// absolute value at most 20.
pub fn random_cfs(seed: u64, count: usize) -> Vec<PeriodicCF> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(0..=5usize);
        let k = rng.gen_range(1..=6usize);
        let preperiod: Vec<i64> = (0..n)
            .map(|i| {
                if i == 0 {
                    rng.gen_range(-20..=20)
                } else {
                    rng.gen_range(1..=20)
                }
            })
            .collect();
        let period: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=20)).collect();
        let cf = PeriodicCF::new(preperiod, period).expect("non-empty period");
        if cf.is_canonical() {
            out.push(cf);
        }
    }
    out
}

/// Determinant, Pell identity, fixed point and root-of-coefficients for
/// one fraction; `Err` names the first law that fails.
pub fn word_laws(cf: &PeriodicCF) -> std::result::Result<(), String> {
    let word = cf.matrix_word();
    let expected_det = if cf.k().is_multiple_of(2) { 1 } else { -1 };
    if word.det() != expected_det {
        return Err(format!("{cf}: det {} != (-1)^{}", word.det(), cf.k()));
    }
    let coeffs = QuadCoeffs::from_matrix(&word).map_err(|e| format!("{cf}: {e}"))?;
    if !pell_check(&coeffs, &word, cf.k()) {
        return Err(format!("{cf}: Pell identity fails"));
    }
    let theta = cf.evaluate().map_err(|e| format!("{cf}: {e}"))?;
    if word.apply(&theta).map_err(|e| format!("{cf}: {e}"))? != theta {
        return Err(format!("{cf}: word does not fix its value"));
    }
    if !coeffs.vanishes_at(&theta) {
        return Err(format!("{cf}: value is not a root of {coeffs}"));
    }
    Ok(())
}

fn figure2() -> Check {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (d, cf_text, picard) in CLASS_NUMBER_ONE_TABLE {
        let row = CMSpec::new(d, 1).expect("table D are square-free").row();
        if row.cf.to_string() != cf_text || row.picard != picard {
            failures.push(format!("D={d}: got {} rho={}", row.cf, row.picard));
        }
    }
    let detail = if failures.is_empty() {
        "8 rows match".to_string()
    } else {
        failures.join("; ")
    };
    Check::timed(
        "figure2",
        failures.is_empty(),
        detail,
        start.elapsed(),
        Duration::from_secs(1),
    )
}

fn roundtrip() -> Vec<Check> {
    let start = Instant::now();
    let surds = random_surds(0x5eed_0001, 1000);
    let mut expansions = Vec::with_capacity(surds.len());
    let mut bad_surds = 0usize;
    for x in &surds {
        let cf = PeriodicCF::expand(x);
        if cf.evaluate().as_ref() != Ok(x) {
            bad_surds += 1;
        }
        expansions.push(cf);
    }
    let cfs = random_cfs(0x5eed_0002, 1000);
    let bad_cfs = cfs
        .iter()
        .filter(|c| c.evaluate().map(|x| PeriodicCF::expand(&x)).as_ref() != Ok(*c))
        .count();
    let elapsed = start.elapsed();

    let law_start = Instant::now();
    let law_failures: Vec<String> = cfs
        .iter()
        .chain(&expansions)
        .filter_map(|c| word_laws(c).err())
        .collect();
    let law_elapsed = law_start.elapsed();

    vec![
        Check::timed(
            "roundtrip",
            bad_surds == 0 && bad_cfs == 0,
            format!("{bad_surds}/1000 surd and {bad_cfs}/1000 fraction mismatches"),
            elapsed,
            Duration::from_secs(30),
        ),
        Check::new(
            "word-laws",
            law_failures.is_empty(),
            format!(
                "{} failures over 2000 fractions{}",
                law_failures.len(),
                law_failures
                    .first()
                    .map(|f| format!("; first: {f}"))
                    .unwrap_or_default()
            ),
        )
        .with_elapsed(law_elapsed),
    ]
}

fn bej_scan() -> Check {
    let start = Instant::now();
    let spec = BejSpec::new(QuadCoeffs::new(1, 0, -2).expect("valid"), 1, 1).expect("valid");
    let points = spec.enumerate(12).expect("bound >= 1");
    let conic = spec.conic();
    let has_witness = points.iter().any(|p| {
        p.entries == [Integer::from(1), Integer::from(2)]
            && p.projection == (Integer::from(1), Integer::from(1))
    });
    let on_conic = points
        .iter()
        .all(|p| conic.contains(&p.projection.0, &p.projection.1));
    Check::timed(
        "bej",
        has_witness && on_conic,
        format!(
            "{} members, witness (1,2)->(1,1): {has_witness}, all on conic: {on_conic}",
            points.len()
        ),
        start.elapsed(),
        Duration::from_secs(5),
    )
}

fn surface() -> Check {
    let start = Instant::now();
    let ts: Vec<Rational> = (3..=12).map(Rational::from).collect();
    let rows = section_verify(&CFSection::example(), &LegendreSurface::example(), &ts);
    let ok = rows.len() == 10
        && rows
            .iter()
            .all(|r| r.equivalent && r.tail_equal && r.error.is_none());
    let literal = rows.iter().filter(|r| r.literal_equal).count();
    Check::timed(
        "surface",
        ok,
        format!(
            "t=3..12 equivalent and equal to the periodic tail; literally equal at {literal} of 10"
        ),
        start.elapsed(),
        Duration::from_secs(1),
    )
}

fn minimal() -> Check {
    let mut failures = Vec::new();
    for p in 1..=50 {
        let p = Integer::from(p);
        match minimal_model_theta(&p) {
            Ok(theta) => {
                let square = theta.square();
                let expected = Rational::from(Integer::from(p.square_ref()) + 1u32);
                if square != (expected, Rational::new()) {
                    failures.push(format!("p={p}: square mismatch"));
                }
            }
            Err(e) => failures.push(format!("p={p}: {e}")),
        }
    }
    let section = CFSection::new(
        vec![crate::exact::IntPolynomial::linear(0)],
        vec![crate::exact::IntPolynomial::new([0, 2])],
    )
    .expect("valid");
    let picard_ok = section.picard() == 2;
    Check::new(
        "minimal",
        failures.is_empty() && picard_ok,
        if failures.is_empty() {
            format!(
                "[p;2p]^2 = 1+p^2 for p=1..50; picard [t;2t] = {}",
                section.picard()
            )
        } else {
            failures.join("; ")
        },
    )
}

fn palindrome() -> Check {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut tested = 0;
    for d in 2..=200u32 {
        let Ok(spec) = CMSpec::new(d, 1) else {
            continue;
        };
        tested += 1;
        let sqrt_cf = PeriodicCF::expand(&QuadraticSurd::sqrt(d).expect("square-free"));
        if !palindrome_shape(&sqrt_cf, false) {
            failures.push(format!("sqrt({d}) = {sqrt_cf}"));
        }
        if d % 4 == 1 && !spec.row().palindrome_ok {
            failures.push(format!("(1+sqrt({d}))/2 = {}", spec.row().cf));
        }
    }
    let detail = if failures.is_empty() {
        format!("{tested} square-free D <= 200")
    } else {
        failures.join("; ")
    };
    Check::timed(
        "palindrome",
        failures.is_empty(),
        detail,
        start.elapsed(),
        Duration::from_secs(5),
    )
}

fn picard() -> Check {
    let rho = CFSection::example().picard();
    let ts = tate_shioda_check(3, 1, &[]);
    Check::new(
        "picard",
        rho == 3 && ts,
        format!("rho([t-1;1,t-2]) = {rho}; 3 = 1 + 2 + 0: {ts}"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_canonical_and_deterministic() {
        let cfs = random_cfs(1, 50);
        assert!(cfs.iter().all(PeriodicCF::is_canonical));
        assert_eq!(cfs, random_cfs(1, 50));
        let surds = random_surds(1, 20);
        assert_eq!(surds, random_surds(1, 20));
        assert!(surds.iter().all(|x| *x.c() >= 1));
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("nope"), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn quick_suites_pass() {
        for suite in ["figure2", "bej", "surface", "minimal", "picard"] {
            for check in run_suite(suite).unwrap() {
                assert!(check.passed, "{}: {}", check.name, check.detail);
            }
        }
    }
}
