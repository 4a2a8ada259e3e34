//! The `verify` subcommand: oracle equivalence, the consistency sweep, and
//! seeded random identity checks. Deterministic for a fixed seed.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quotcoh_core::binomial::choose_signed;
use quotcoh_core::formulas::{consistency_sweep, SweepRanges};
use quotcoh_core::graded::GradedDim;
use quotcoh_core::oracle;

use crate::error::CliError;

pub fn run(max_dim: usize, max_k: usize, seed: u64) -> Result<String, CliError> {
    if max_dim > oracle::MAX_ELEMENTS || max_k > oracle::MAX_POWER {
        return Err(CliError::config(format!(
            "verify bounds exceed the oracle guards: max-dim <= {}, max-k <= {}",
            oracle::MAX_ELEMENTS,
            oracle::MAX_POWER
        )));
    }
    let mut lines = Vec::new();
    let mut total = 0usize;

    let sweep = oracle::equivalence_sweep(max_dim, -2, 3, max_k)
        .map_err(|e| CliError::config(e.to_string()))?;
    if let Some(mismatch) = sweep.mismatches.first() {
        return Err(CliError::Failure {
            message: format!(
                "oracle equivalence failed; first counterexample: {}",
                serde_json::to_string(mismatch).expect("mismatch serializes")
            ),
        });
    }
    total += sweep.checks;
    lines.push(format!(
        "oracle equivalence (dim <= {max_dim}, degrees [-2,3], k <= {max_k}): {} checks, 0 mismatches",
        sweep.checks
    ));

    let report = consistency_sweep(&SweepRanges::default());
    if !report.all_passed() {
        let first = report
            .sections
            .iter()
            .flat_map(|s| s.failures.iter())
            .next()
            .cloned()
            .unwrap_or_default();
        return Err(CliError::Failure {
            message: format!("consistency sweep failed; first counterexample: {first}"),
        });
    }
    total += report.total_checks();
    lines.push(format!(
        "consistency sweep (default ranges): {} checks, 0 failures",
        report.total_checks()
    ));

    let random_checks = random_identities(seed)?;
    total += random_checks;
    lines.push(format!(
        "random identities (seed {seed}): {random_checks} checks, 0 failures"
    ));

    lines.push(format!("all {total} checks passed"));
    Ok(lines.join("\n") + "\n")
}

fn random_graded(rng: &mut ChaCha8Rng) -> GradedDim {
    let entries = rng.gen_range(0..=6);
    GradedDim::from_pairs((0..entries).map(|_| (rng.gen_range(-3..=3i64), rng.gen_range(1..=2u64))))
}

fn random_identities(seed: u64) -> Result<usize, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = 0usize;
    let fail = |what: &str, a: &GradedDim, b: &GradedDim| CliError::Failure {
        message: format!(
            "random identity failed: {what}; inputs {} and {}",
            serde_json::to_string(a).expect("serializes"),
            serde_json::to_string(b).expect("serializes"),
        ),
    };
    for _ in 0..500 {
        let a = random_graded(&mut rng);
        let b = random_graded(&mut rng);
        if a.tensor(&b) != b.tensor(&a) {
            return Err(fail("tensor commutativity", &a, &b));
        }
        checks += 1;
        if a.direct_sum(&b) != b.direct_sum(&a) {
            return Err(fail("direct-sum commutativity", &a, &b));
        }
        checks += 1;
        let k = rng.gen_range(0..=6i64);
        if a.dual().sym_power(k) != a.sym_power(k).dual()
            || a.dual().ext_power(k) != a.ext_power(k).dual()
        {
            return Err(fail("power-dual commutation", &a, &b));
        }
        checks += 1;
        let chi = a.euler();
        let sym_expected = choose_signed(&(chi.clone() + BigInt::from(k) - 1), k as u64);
        if a.sym_power(k).euler() != sym_expected
            || a.ext_power(k).euler() != choose_signed(&chi, k as u64)
        {
            return Err(fail("Euler binomial identity", &a, &b));
        }
        checks += 1;
    }
    Ok(checks)
}
