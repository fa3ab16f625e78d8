//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test -p perfect-arrays --test acceptance`.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_complex::Complex64;
use perfect_arrays::formats::{read_array, to_canonical_json};
use perfect_arrays::render::{render, RenderSpec};
use perfect_arrays::{bench, fft, parallel, sweep, Backend};
use perfect_arrays_core::association::{associate, associate_per_axis};
use perfect_arrays_core::checkers::{aop_check, gaop_check};
use perfect_arrays_core::constructions::{
    chu, floor2d, floor_nd, frank, gfrank, gmilewski, gmilewski_generator,
};
use perfect_arrays_core::correlation::{autocorrelation, cross_correlation};
use perfect_arrays_core::{ChuVariant, CyclotomicValue, ExponentArray, IndexOrigin, ShiftVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn close(z: Complex64, re: f64, im: f64) -> bool {
    (z.re - re).abs() <= 1e-9 && (z.im - im).abs() <= 1e-9
}

fn frank16() -> Outcome {
    let s = frank(4).map_err(|e| e.to_string())?;
    ensure(
        s.exponents() == [0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 0, 2, 0, 3, 2, 1],
        || format!("frank(4) = {s:?}"),
    )?;
    let report = aop_check(&s, 4).map_err(|e| e.to_string())?;
    ensure(report.pairs.len() == 6, || {
        format!("{} pairs", report.pairs.len())
    })?;
    ensure(
        report.pairs.iter().all(|p| p.zero_shifts == 4) && report.holds,
        || "a column pair correlates".into(),
    )?;
    // Printed column autocorrelations. They are the values at the reflected
    // shift -s of sum_i a_i conj(a_{i+s}), i.e. their complex conjugates.
    type Column = (&'static [i64], [(f64, f64); 4]);
    let printed: [Column; 4] = [
        (&[0, 0, 0, 0], [(4., 0.), (4., 0.), (4., 0.), (4., 0.)]),
        (&[0, 1, 2, 3], [(4., 0.), (0., 4.), (-4., 0.), (0., -4.)]),
        (&[0, 2, 0, 2], [(4., 0.), (-4., 0.), (4., 0.), (-4., 0.)]),
        (&[0, 3, 2, 1], [(4., 0.), (0., -4.), (-4., 0.), (0., 4.)]),
    ];
    let assoc = associate(&s, 4).map_err(|e| e.to_string())?;
    for ((_, column), (expected_col, values)) in assoc.subarrays().iter().zip(printed) {
        ensure(
            column
                .exponents()
                .iter()
                .map(|&e| i64::from(e))
                .eq(expected_col.iter().copied()),
            || format!("column {:?}", column.exponents()),
        )?;
        let table = autocorrelation(column);
        for (s, (re, im)) in values.iter().enumerate() {
            let at_minus_s = table
                .value_at(&ShiftVector(vec![-(s as i64)]))
                .map_err(|e| e.to_string())?;
            ensure(close(at_minus_s, *re, *im), || {
                format!("theta_{expected_col:?}(-{s}) = {at_minus_s}")
            })?;
        }
    }
    Ok(
        "sequence, 6 orthogonal column pairs, 4 column autocorrelations (printed values = θ(−s))"
            .into(),
    )
}

fn nine_by_nine() -> Outcome {
    let s = gfrank(3, 2, IndexOrigin::One).map_err(|e| e.to_string())?;
    let printed = read_array(&fixture("gfrank_3_2.json")).map_err(|e| e.to_string())?;
    ensure(s == printed, || {
        "gfrank(3,2) differs from the printed matrix".into()
    })?;
    let assoc = associate(&s, 3).map_err(|e| e.to_string())?;
    let a = assoc.subarray(&[1, 1]).map_err(|e| e.to_string())?;
    let b = assoc.subarray(&[0, 2]).map_err(|e| e.to_string())?;
    ensure(
        a.exponents() == [2, 1, 0, 1, 0, 2, 0, 2, 1]
            && b.exponents() == [1, 1, 1, 2, 2, 2, 0, 0, 0],
        || "printed sub-arrays differ".into(),
    )?;
    let cross = cross_correlation(&a, &b).map_err(|e| e.to_string())?;
    ensure(
        cross.exact().unwrap().iter().all(CyclotomicValue::is_zero),
        || "S'[1,1] and S'[0,2] correlate".into(),
    )?;
    let report = gaop_check(&s, 3).map_err(|e| e.to_string())?;
    ensure(
        report.pairs.len() == 36 && report.pairs.iter().all(|p| p.orthogonal()),
        || format!("{} pairs, not all orthogonal", report.pairs.len()),
    )?;
    let table = report.summary_table.as_ref().ok_or("no summary table")?;
    let values = table.exact().ok_or("summary table is not exact")?;
    ensure(table.shape() == [3, 3], || {
        format!("summary shape {:?}", table.shape())
    })?;
    ensure(values[0].coeffs() == [81, 0, 0], || {
        format!("peak {:?}", values[0].coeffs())
    })?;
    ensure(values[1..].iter().all(CyclotomicValue::is_zero), || {
        "nonzero off-peak sum".into()
    })?;
    ensure(report.holds, || "GAOP does not hold".into())?;
    Ok("matrix equal, 36/36 pairs orthogonal, summary [[81,0,0],[0,0,0],[0,0,0]]".into())
}

fn reference_parity() -> Outcome {
    let cases = [
        ("gfrank_2_4.json", gfrank(2, 4, IndexOrigin::One)),
        ("floor2d_2.json", floor2d(2, IndexOrigin::One, false)),
    ];
    for (name, generated) in cases {
        let generated = generated.map_err(|e| e.to_string())?;
        let printed = std::fs::read_to_string(fixture(name)).map_err(|e| e.to_string())?;
        ensure(to_canonical_json(&generated) == printed, || {
            format!("{name} differs")
        })?;
    }
    Ok("gfrank(2,4) (4x4x4x4) and floor2d(2) (8x8) byte-identical to the fixtures".into())
}

fn perfection_grid() -> Outcome {
    let grid = sweep::acceptance_grid();
    for c in &grid {
        let a = c.generate().map_err(|e| format!("{c}: {e}"))?;
        let verdict = parallel::is_perfect(&a);
        ensure(verdict.is_perfect(), || {
            format!("{c} not perfect, witness {:?}", verdict.witness())
        })?;
    }
    Ok(format!("{} constructions perfect (exact)", grid.len()))
}

fn negative_controls() -> Outcome {
    let mut failures = Vec::new();
    let mut details = Vec::new();
    for (name, a) in [
        ("floor2d(3)", floor2d(3, IndexOrigin::One, true)),
        ("floor_nd(3,1)", floor_nd(3, 1, IndexOrigin::One, true)),
        (
            "[0,0,0,1,0]",
            ExponentArray::new(2, vec![5], &[0, 0, 0, 1, 0]),
        ),
    ] {
        let a = a.map_err(|e| e.to_string())?;
        match parallel::is_perfect(&a).witness() {
            Some(w) => details.push(format!("{name} witness {:?}", w.0)),
            None => failures.push(format!("{name} is perfect")),
        }
    }
    let chu4 = aop_check(&chu(4, 1).map_err(|e| e.to_string())?, 2).map_err(|e| e.to_string())?;
    if chu4.holds {
        failures.push("chu(4) has the AOP for d=2 (columns [0,4],[1,1] over 8 roots are orthogonal and complementary)".into());
    } else {
        details.push("chu(4) lacks the AOP".into());
    }
    if failures.is_empty() {
        Ok(details.join("; "))
    } else {
        Err(format!(
            "{}; passed: {}",
            failures.join("; "),
            details.join("; ")
        ))
    }
}

fn theorem_chain() -> Outcome {
    let mut checked = 0;
    for c in sweep::acceptance_grid() {
        let a = c.generate().map_err(|e| format!("{c}: {e}"))?;
        let Some(d) = c.divisor() else { continue };
        let Ok(report) = gaop_check(&a, d) else {
            continue;
        };
        ensure(report.holds, || format!("{c}: GAOP fails for d={d}"))?;
        let assoc = associate(&a, d).map_err(|e| e.to_string())?;
        let verdict = parallel::is_perfect(assoc.base());
        ensure(verdict.is_perfect(), || {
            format!(
                "{c}: associated array not perfect at {:?}",
                verdict.witness()
            )
        })?;
        checked += 1;
    }
    Ok(format!(
        "{checked} entries: GAOP holds and the associated array is perfect"
    ))
}

fn odd_gmilewski_generator() -> Outcome {
    let g = gmilewski_generator(3, 1, 1, 1, ChuVariant::Triangular, IndexOrigin::Zero)
        .map_err(|e| e.to_string())?;
    ensure(g.shape() == [9, 3] && g.modulus() == 9, || {
        format!("shape {:?} modulus {}", g.shape(), g.modulus())
    })?;
    ensure(parallel::is_perfect(&g).is_perfect(), || {
        "generator not perfect".into()
    })?;
    Ok("9x3 generator over 9 roots perfect".into())
}

fn random_shape(rng: &mut ChaCha8Rng, max_volume: usize) -> Vec<usize> {
    loop {
        let dims = rng.random_range(1..=3);
        let shape: Vec<usize> = (0..dims)
            .map(|_| rng.random_range(1..=[4096, 64, 16][dims - 1]))
            .collect();
        if shape.iter().product::<usize>() <= max_volume {
            return shape;
        }
    }
}

fn backend_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = 0.0f64;
    let mut zero_checks = 0usize;
    for i in 0..200 {
        let shape = random_shape(&mut rng, 4096);
        let r = rng.random_range(1..=24);
        let a = bench::random_array(&shape, r, &mut rng).map_err(|e| e.to_string())?;
        let b = if i % 2 == 0 {
            a.clone()
        } else {
            bench::random_array(&shape, r, &mut rng).map_err(|e| e.to_string())?
        };
        let exact = parallel::cross_correlation(&a, &b).map_err(|e| e.to_string())?;
        let approx = fft::cross_correlation(&a, &b, Backend::Fft).map_err(|e| e.to_string())?;
        let dev = fft::max_deviation(&exact, &approx);
        ensure(dev <= 1e-6 * a.volume() as f64, || {
            format!("shape {shape:?} r={r}: deviation {dev:e}")
        })?;
        worst = worst.max(dev / a.volume() as f64);
        for v in exact.exact().unwrap() {
            ensure(v.is_zero() == (v.to_complex().norm() < 1e-9), || {
                format!("is_zero disagrees on {v:?}")
            })?;
            zero_checks += 1;
        }
    }
    for _ in 0..10_000 {
        let r = rng.random_range(1..=24);
        let coeffs: Vec<i64> = (0..r).map(|_| rng.random_range(-8..=8)).collect();
        let v = CyclotomicValue::from_coeffs(coeffs).map_err(|e| e.to_string())?;
        ensure(v.is_zero() == (v.to_complex().norm() < 1e-9), || {
            format!("is_zero disagrees on {v:?}")
        })?;
        zero_checks += 1;
    }
    Ok(format!(
        "200 arrays, max deviation {worst:.2e}·volume; {zero_checks} zero tests consistent"
    ))
}

fn structural_round_trips() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..1000 {
        let dims = rng.random_range(1..=3);
        let divisors: Vec<usize> = (0..dims).map(|_| rng.random_range(1..=3)).collect();
        let shape: Vec<usize> = divisors
            .iter()
            .map(|d| d * rng.random_range(1..=3))
            .collect();
        let r = rng.random_range(1..=16);
        let a = bench::random_array(&shape, r, &mut rng).map_err(|e| e.to_string())?;
        let assoc = associate_per_axis(&a, &divisors).map_err(|e| e.to_string())?;
        ensure(assoc.concatenate() == a, || {
            format!("concatenate(associate) != id for {shape:?}")
        })?;
        let rebuilt = perfect_arrays_core::AssociatedArray::from_base(assoc.base().clone())
            .map_err(|e| e.to_string())?;
        ensure(rebuilt.concatenate() == a, || "from_base round trip".into())?;
        let flat = a.flatten_row_major();
        ensure(
            flat.reshape(shape.clone()).map_err(|e| e.to_string())? == a,
            || "reshape(flatten) != id".into(),
        )?;
        ensure(flat.exponents() == a.exponents(), || {
            "flatten reorders".into()
        })?;
    }
    Ok("1000 random arrays".into())
}

fn render_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let input = fixture("floor2d_2.json");
    let mut outputs = Vec::new();
    for i in 0..2 {
        let out = dir.path().join(format!("{i}.pgm"));
        let status = Command::new(env!("CARGO_BIN_EXE_perfect-arrays"))
            .args([
                "render",
                input.to_str().unwrap(),
                "-o",
                out.to_str().unwrap(),
            ])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(status.status.success(), || {
            String::from_utf8_lossy(&status.stderr).into_owned()
        })?;
        outputs.push(std::fs::read(&out).map_err(|e| e.to_string())?);
    }
    ensure(outputs[0] == outputs[1], || {
        "renders differ between runs".into()
    })?;
    let expected = std::fs::read(fixture("floor2d_2.pgm")).map_err(|e| e.to_string())?;
    ensure(outputs[0] == expected, || {
        "render differs from the fixture".into()
    })?;
    Ok(format!(
        "{} bytes, identical across runs and to the fixture",
        expected.len()
    ))
}

fn showcases() -> Outcome {
    let big_floor = floor2d(22, IndexOrigin::One, false).map_err(|e| e.to_string())?;
    let big_gm = gmilewski(4, 2, 2, 1, ChuVariant::Triangular, IndexOrigin::Zero, false)
        .map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let (i, j) = (rng.random_range(0..968usize), rng.random_range(0..968usize));
        let want = ((i as u64 + 1) * (j as u64 + 1) / 44 % 22) as u32;
        ensure(big_floor.get(&[i, j]) == want, || {
            format!("floor2d(22) at ({i},{j})")
        })?;
        let (x, y) = (
            rng.random_range(0..1024usize),
            rng.random_range(0..1024usize),
        );
        let (q0, s0, q1, s1) = (
            (x / 16) as u64,
            (x % 16) as u64,
            (y / 16) as u64,
            (y % 16) as u64,
        );
        let want =
            ((8 * (q0 * (q0 + 1) + q1 * (q1 + 1)) + s0 * s1 + q0 * s0 + q1 * s1) % 64) as u32;
        ensure(big_gm.get(&[x, y]) == want, || {
            format!("gmilewski(4,2,2) at ({x},{y})")
        })?;
    }
    let bytes = render(&big_floor, &RenderSpec::default()).map_err(|e| e.to_string())?;
    ensure(bytes.starts_with(b"P2\n968 968\n"), || {
        "bad render header".into()
    })?;
    Ok("968x968/22 and 1024x1024/64 spot-checked (100 entries each), 968x968 render done".into())
}

fn main() -> ExitCode {
    type Criterion = (&'static str, &'static str, fn() -> Outcome, Duration);
    let criteria: [Criterion; 10] = [
        (
            "1",
            "Frank-16 AOP reproduction",
            frank16,
            Duration::from_secs(1),
        ),
        (
            "2",
            "9x9 GAOP reproduction",
            nine_by_nine,
            Duration::from_secs(1),
        ),
        (
            "3",
            "reference array parity",
            reference_parity,
            Duration::from_secs(1),
        ),
        (
            "4",
            "perfection grid",
            perfection_grid,
            Duration::from_secs(300),
        ),
        (
            "5",
            "negative controls",
            negative_controls,
            Duration::from_secs(10),
        ),
        (
            "6",
            "theorem chain",
            theorem_chain,
            Duration::from_secs(600),
        ),
        (
            "7",
            "odd-r generalized Milewski generator",
            odd_gmilewski_generator,
            Duration::from_secs(5),
        ),
        (
            "8",
            "backend agreement",
            backend_agreement,
            Duration::from_secs(120),
        ),
        (
            "9",
            "structural round trips",
            structural_round_trips,
            Duration::from_secs(30),
        ),
        (
            "10",
            "render determinism",
            render_determinism,
            Duration::from_secs(1),
        ),
    ];
    let mut failed = 0;
    for (id, name, check, budget) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over the {budget:?} budget")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "{} criterion {id:>2} {name} ({:.3} s) — {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    let start = Instant::now();
    match showcases() {
        Ok(d) => println!(
            "note large showcases ({:.3} s) — {d}",
            start.elapsed().as_secs_f64()
        ),
        Err(e) => {
            failed += 1;
            println!("FAIL large showcases — {e}");
        }
    }
    println!("{} of 10 criteria passed", 10 - failed.min(10));
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
