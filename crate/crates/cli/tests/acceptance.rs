//! Acceptance checks, one line per criterion. Runs as a plain binary so the
//! lines show up in `cargo test` output.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cosprod_core::analytic::{
    cos_approx, exp_approx, lambda_direct, ln_approx, neg_log_s_series, partial_product,
    rearrangement_check,
};
use cosprod_core::arith::pi_constant;
use cosprod_core::recurrence::{
    bernoulli_numbers, euler_coefficients, lambda_closed_form, tangent_coefficients,
};
use cosprod_core::series::{ode_residual, picard_fixed_point, OddSeries};
use cosprod_core::{BoundedReal, Dyadic, Error, ExactRational};

type Outcome = Result<String, String>;

fn q(p: i64, d: i64) -> ExactRational {
    ExactRational::ratio(p, d)
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn lib<T>(r: Result<T, Error>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

// ---------------------------------------------------------------- oracles

/// Tangent numbers `T_1, T_3, …` (`tan x = Σ T_{2k−1} x^(2k−1)/(2k−1)!`) by
/// the integer boustrophedon recurrence.
fn tangent_numbers(count: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::from(0); count + 1];
    t[1] = BigInt::from(1);
    for k in 2..=count {
        t[k] = &t[k - 1] * (k - 1);
    }
    for k in 2..=count {
        for j in k..=count {
            t[j] = &t[j - 1] * (j - k) + &t[j] * (j - k + 2);
        }
    }
    t.split_off(1)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// π to 60 decimals, as a rational interval.
fn pi_interval() -> (ExactRational, ExactRational) {
    let digits = "3141592653589793238462643383279502884197169399375105820974944";
    let scale = BigInt::from(10).pow(60);
    let lo = ExactRational::new(digits.parse::<BigInt>().unwrap(), scale.clone()).unwrap();
    let hi = &lo + &ExactRational::new(1, scale).unwrap();
    (lo, hi)
}

/// `√3/2` to within `2^(−bits)` from below, by integer square root.
fn sqrt3_over_2(bits: u64) -> ExactRational {
    let r = (BigUint::from(3u32) << (2 * bits)).sqrt();
    ExactRational::new(BigInt::from(r), BigInt::from(1) << (bits + 1)).unwrap()
}

/// `½·ln(4/3) = atanh(1/7)` bracketed by an exact partial sum and a geometric
/// bound on the rest.
fn half_ln_four_thirds() -> (ExactRational, ExactRational) {
    let mut sum = ExactRational::zero();
    let mut power = q(1, 7);
    for j in 0..50 {
        sum = sum + &power * &q(1, 2 * j + 1);
        power = &power * &q(1, 49);
    }
    let rest = &power * &q(49, 48);
    (sum.clone(), sum + rest)
}

fn interval_inside(x: &BoundedReal, lo: &ExactRational, hi: &ExactRational) -> bool {
    x.lower().to_rational() <= *lo && *hi <= x.upper().to_rational()
}

// ---------------------------------------------------------------- criteria

fn coefficient_cross_check() -> Outcome {
    let c = lib(euler_coefficients(25))?;
    let first = [q(1, 2), q(1, 6), q(1, 15), q(17, 630)];
    ensure(c.as_slice()[..4] == first, "first four coefficients")?;

    // Half the tangent coefficients, straight from the Bernoulli numbers.
    let b = bernoulli_numbers(50);
    for m in 1..=25 {
        let two_m = 2 * m;
        let four_m = BigInt::from(1) << two_m;
        let mut t = b.get(two_m).unwrap()
            * &ExactRational::new(&four_m * (&four_m - 1), factorial(two_m)).unwrap();
        if m % 2 == 0 {
            t = -t;
        }
        ensure(
            *c.get(m).unwrap() == &t * &q(1, 2),
            format!("Bernoulli route, m = {m}"),
        )?;
    }
    ensure(
        lib(tangent_coefficients(25))?
            .iter()
            .zip(c.as_slice())
            .all(|(t, c)| *t == c.scale(2)),
        "tangent_coefficients",
    )?;
    // And from the integer tangent numbers, which share nothing with either.
    for (m, t) in tangent_numbers(25)
        .into_iter()
        .enumerate()
        .map(|(i, t)| (i + 1, t))
    {
        let oracle = ExactRational::new(t, factorial(2 * m - 1) * 2).unwrap();
        ensure(
            *c.get(m).unwrap() == oracle,
            format!("tangent numbers, m = {m}"),
        )?;
    }
    Ok("25/25 terms equal; starts 1/2, 1/6, 1/15, 17/630".into())
}

fn fixed_point_equivalence() -> Outcome {
    let t = lib(picard_fixed_point(25))?;
    let table = lib(euler_coefficients(25))?;
    ensure(
        t == OddSeries::from_table(&table),
        "Picard fixed point differs from the recurrence",
    )?;
    let r = ode_residual(&t);
    ensure(r.vanishes(), "residual has a nonzero coefficient")?;
    let degree = r.zero_through_degree().unwrap_or(0);
    ensure(
        degree >= 48,
        format!("residual zero only through degree {degree}"),
    )?;
    Ok(format!(
        "25 coefficients equal; residual zero through degree {degree}"
    ))
}

fn lambda_closed_forms() -> Outcome {
    let expected = [q(1, 8), q(1, 96), q(1, 960)];
    let (pi_lo, pi_hi) = pi_interval();
    let mut details = Vec::new();
    for (m, q_m) in (1..=3).zip(expected) {
        ensure(lib(lambda_closed_form(m))? == q_m, format!("q_{m}"))?;
        let e = 2 * m as u32;
        let (lo, hi) = (&pi_lo.pow(e) * &q_m, &pi_hi.pow(e) * &q_m);
        let est = lib(lambda_direct(m, 1_000_000, 128))?;
        ensure(
            interval_inside(&est.bracket(), &lo, &hi),
            format!("m = {m} not bracketed"),
        )?;
        let reported = (est.value.abs_error() + &est.tail_bound).to_f64();
        if m == 1 {
            ensure(
                reported <= 3e-7,
                format!("m = 1 bound {reported:.2e} > 3e-7"),
            )?;
        }
        details.push(format!("m={m} bound {reported:.1e}"));
    }
    Ok(format!("1/8, 1/96, 1/960; {}", details.join(", ")))
}

fn product_identity() -> Outcome {
    let mut details = Vec::new();
    for n in [q(2, 1), q(3, 1), q(3, 2), q(10, 1)] {
        let p = lib(partial_product(&n, 100_000, 128))?;
        let x = pi_constant(160).mul_rational(&n.scale(2).recip().unwrap());
        let cosine = cos_approx(&x, 128);
        let enc = p.enclosure();
        let gap = (enc.value() - cosine.value()).abs();
        let allowed = enc.abs_error() + cosine.abs_error();
        ensure(
            gap <= allowed,
            format!("n = {n}: gap exceeds the reported bounds"),
        )?;
        details.push(format!("n={n} gap {:.1e}", gap.to_f64()));
    }
    // Against √3/2 directly.
    let p = lib(partial_product(&q(3, 1), 100_000, 128))?;
    let dev = (&p.value.value().to_rational() - &sqrt3_over_2(200)).abs();
    let oracle_err = ExactRational::new(1, BigInt::from(1) << 200).unwrap();
    let dev_upper = &(&dev + &p.value.abs_error().to_rational()) + &oracle_err;
    ensure(
        dev_upper < q(1, 100_000),
        "n = 3 deviation from √3/2 is not below 1e-5",
    )?;
    let shown = Dyadic::from_rational_ceil(&dev_upper, 32).to_f64();
    details.push(format!("n=3 vs sqrt(3)/2 {shown:.2e}"));
    Ok(details.join(", "))
}

fn log_series_identity() -> Outcome {
    let x = pi_constant(160).mul_rational(&q(1, 6));
    let v = lib(neg_log_s_series(&x, 30, 128))?;
    let (lo, hi) = half_ln_four_thirds();
    ensure(
        interval_inside(&v, &lo, &hi),
        "−ln(√3/2) outside the reported interval",
    )?;
    let b = v.abs_error().to_f64();
    ensure(b <= 1e-8, format!("bound {b:.2e} > 1e-8"))?;
    Ok(format!("value {}, bound {b:.1e}", v.value().to_decimal(12)))
}

fn rearrangement() -> Outcome {
    let r = lib(rearrangement_check(&q(3, 1), 1000, 20, 128))?;
    ensure(r.overlap(), "row and column intervals are disjoint")?;
    let (a, b) = (r.row_order(), r.column_order());
    Ok(format!(
        "rows {} ± {:.1e}, columns {} ± {:.1e}",
        a.value().to_decimal(8),
        a.abs_error().to_f64(),
        b.value().to_decimal(8),
        b.abs_error().to_f64()
    ))
}

/// A reported interval and the centre of a recomputation at 4× precision and
/// 10× terms.
type Trial = (String, BoundedReal, BoundedReal);

fn random_n(rng: &mut ChaCha8Rng) -> ExactRational {
    let den = rng.gen_range(1..=6);
    q(rng.gen_range(den + 1..=20 * den), den)
}

fn trials(rng: &mut ChaCha8Rng) -> Result<Vec<Trial>, String> {
    let mut out = Vec::new();
    for _ in 0..30 {
        let (m, n, p) = (
            rng.gen_range(1..=6),
            rng.gen_range(1..=2000),
            rng.gen_range(24..=128),
        );
        let a = lib(lambda_direct(m, n, p))?.bracket();
        let b = lib(lambda_direct(m, 10 * n, 4 * p))?.bracket();
        out.push((format!("lambda m={m} N={n} p={p}"), a, b));
    }
    for _ in 0..30 {
        let (nn, count, p) = (
            random_n(rng),
            rng.gen_range(1..=2000),
            rng.gen_range(24..=128),
        );
        let a = lib(partial_product(&nn, count, p))?.enclosure();
        let b = lib(partial_product(&nn, 10 * count, 4 * p))?.enclosure();
        out.push((format!("product n={nn} N={count} p={p}"), a, b));
    }
    for _ in 0..30 {
        let (nn, order, p) = (
            random_n(rng),
            rng.gen_range(1..=30),
            rng.gen_range(24..=128),
        );
        let x = |bits| pi_constant(bits + 16).mul_rational(&nn.scale(2).recip().unwrap());
        let a = lib(neg_log_s_series(&x(p), order, p))?;
        let b = lib(neg_log_s_series(&x(4 * p), 10 * order, 4 * p))?;
        out.push((format!("log series n={nn} M={order} p={p}"), a, b));
    }
    for _ in 0..15 {
        let p = rng.gen_range(24..=128);
        let arg = q(rng.gen_range(-4000..=4000), rng.gen_range(1..=100));
        let x = |bits| BoundedReal::from_rational(&arg, bits);
        let c = (cos_approx(&x(p), p), cos_approx(&x(4 * p), 4 * p));
        out.push((format!("cos {arg} p={p}"), c.0, c.1));
        let small = q(rng.gen_range(-300..=300), rng.gen_range(1..=10));
        let y = |bits| BoundedReal::from_rational(&small, bits);
        let e = (exp_approx(&y(p), p), exp_approx(&y(4 * p), 4 * p));
        out.push((format!("exp {small} p={p}"), e.0, e.1));
        let pos = q(rng.gen_range(1..=1_000_000), rng.gen_range(1..=1000));
        let z = |bits| BoundedReal::from_rational(&pos, bits);
        let l = (lib(ln_approx(&z(p), p))?, lib(ln_approx(&z(4 * p), 4 * p))?);
        out.push((format!("ln {pos} p={p}"), l.0, l.1));
    }
    for _ in 0..10 {
        let (nn, rows, order, p) = (
            random_n(rng),
            rng.gen_range(1..=60),
            rng.gen_range(1..=8),
            rng.gen_range(24..=96),
        );
        let a = lib(rearrangement_check(&nn, rows, order, p))?;
        let b = lib(rearrangement_check(&nn, 10 * rows, 10 * order, 4 * p))?;
        let label = format!("rearrangement n={nn} rows={rows} M={order} p={p}");
        out.push((format!("{label} [rows]"), a.row_order(), b.row_order()));
        out.push((
            format!("{label} [columns]"),
            a.column_order(),
            b.column_order(),
        ));
    }
    Ok(out)
}

fn bound_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0dd_c05);
    let all = trials(&mut rng)?;
    let failures: Vec<&str> = all
        .iter()
        .filter(|(_, reported, better)| !reported.contains_dyadic(better.value()))
        .map(|(label, _, _)| label.as_str())
        .collect();
    ensure(
        all.len() >= 100,
        format!("only {} configurations", all.len()),
    )?;
    if let Some(first) = failures.first() {
        return Err(format!("{} failures, first: {first}", failures.len()));
    }
    Ok(format!("{} configurations, 0 failures", all.len()))
}

fn edge_cases() -> Outcome {
    for count in [1, 2, 3, 10, 1000, 100_000] {
        let p = lib(partial_product(&q(1, 1), count, 128))?;
        ensure(
            p.value.value().is_zero() && p.value.is_exact(),
            format!("n = 1, N = {count}"),
        )?;
    }
    let half_pi = pi_constant(160).mul_pow2(-1);
    let outside = [
        half_pi.clone(),
        -&half_pi,
        &half_pi * &BoundedReal::from_int(3, 160),
        BoundedReal::from_int(2, 64),
    ];
    for x in outside {
        ensure(
            matches!(neg_log_s_series(&x, 30, 128), Err(Error::Domain(_))),
            "series accepted |x| ≥ π/2",
        )?;
    }
    let status = Command::new(env!("CARGO_BIN_EXE_cosprod"))
        .args(["verify", "--n", "1"])
        .output()
        .map_err(|e| e.to_string())?
        .status
        .code();
    ensure(
        status == Some(cosprod::exit::DOMAIN),
        format!("verify --n 1 exited with {status:?}"),
    )?;
    Ok("product at n=1 is exactly 0; |x| ≥ π/2 rejected; verify --n 1 exits 3".into())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    check: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion {
            id: 1,
            name: "coefficient cross-verification",
            limit: secs(5),
            check: coefficient_cross_check,
        },
        Criterion {
            id: 2,
            name: "fixed-point equivalence",
            limit: secs(10),
            check: fixed_point_equivalence,
        },
        Criterion {
            id: 3,
            name: "lambda closed forms",
            limit: secs(30),
            check: lambda_closed_forms,
        },
        Criterion {
            id: 4,
            name: "product identity",
            limit: secs(60),
            check: product_identity,
        },
        Criterion {
            id: 5,
            name: "log-series identity",
            limit: secs(5),
            check: log_series_identity,
        },
        Criterion {
            id: 6,
            name: "rearrangement consistency",
            limit: secs(30),
            check: rearrangement,
        },
        Criterion {
            id: 7,
            name: "bound soundness",
            limit: None,
            check: bound_soundness,
        },
        Criterion {
            id: 8,
            name: "edge cases",
            limit: None,
            check: edge_cases,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut result = (c.check)();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&result, c.limit) {
            if elapsed > limit {
                result = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {}: {tag}  {} ({:.2?}): {detail}",
            c.id, c.name, elapsed
        );
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
