//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::f64::consts::PI;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use legendre_ladder::algebra::rat_int;
use legendre_ladder::electrostatics::{
    direct_coulomb, loop_dipole_potential, loop_reference, sphere_potential, ChargeSystem,
    CurrentLoop, Expansion, FieldPoint, PointCharge, Units,
};
use legendre_ladder::{build, compare_with_classical, rodrigues_alf};
use legendre_ladder_cli::figure::sign_changes;
use legendre_ladder_cli::verify::{self, Suite};
use num_traits::Signed;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite_outcome(suite: Suite, lmax: u32) -> Outcome {
    let report = verify::run(lmax, &[suite]);
    let failures: Vec<String> = report.suites[0]
        .cases
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("ell={} n_x={} {}: {}", c.ell, c.n_x, c.check, c.detail.clone().unwrap_or_default()))
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("{} exact cases", report.attempted))
}

fn timed(limit_s: f64, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let detail = f()?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < limit_s, || format!("took {secs:.2} s, limit {limit_s} s"))?;
    Ok(format!("{detail}, {secs:.3} s"))
}

fn annihilation() -> Outcome {
    timed(1.0, || suite_outcome(Suite::Annihilation, 50))
}

fn construction_matches_rodrigues() -> Outcome {
    timed(30.0, || {
        let mut cases = 0;
        for ell in 0..=20u32 {
            for n in 0..=ell {
                let rel = compare_with_classical(ell, n).map_err(|e| e.to_string())?;
                let f = build(ell, i64::from(n)).map_err(|e| e.to_string())?;
                let target = rodrigues_alf(ell, ell - n).map_err(|e| e.to_string())?.form.poly;
                ensure(f.g().poly == target.scale(&rel.ratio), || format!("ell={ell} n_x={n} not proportional"))?;
                let lhs = &f.g().poly * &f.g().poly;
                let rhs = (&target * &target).scale(f.c_squared());
                ensure(lhs == rhs, || format!("ell={ell} n_x={n}: squared normalization differs"))?;
                cases += 1;
            }
        }
        Ok(format!("{cases} exact cases"))
    })
}

fn legendre_coincidence() -> Outcome {
    suite_outcome(Suite::LegendreCoincidence, 25)
}

fn node_law() -> Outcome {
    suite_outcome(Suite::Nodes, 20)
}

fn ode() -> Outcome {
    suite_outcome(Suite::Ode, 15)
}

fn orthonormality() -> Outcome {
    suite_outcome(Suite::Orthonormality, 12)
}

fn normalization_constants() -> Outcome {
    let c1 = build(1, 1).map_err(|e| e.to_string())?;
    ensure(c1.constants() == [rat_int(4)], || format!("C(1,1) = {:?}", c1.constants()))?;
    let c2 = build(2, 2).map_err(|e| e.to_string())?;
    ensure(c2.constants() == [rat_int(16), rat_int(36)], || {
        format!("C(2,1), C(2,2) = {:?}", c2.constants())
    })?;
    let mut count = 0;
    for ell in 0..=25u32 {
        let f = build(ell, i64::from(ell)).map_err(|e| e.to_string())?;
        for (j, c) in f.constants().iter().enumerate() {
            ensure(c.is_positive(), || format!("C({ell},{}) = {c}", j + 1))?;
            count += 1;
        }
    }
    Ok(format!("C(1,1)=4, C(2,1)=16, C(2,2)=36, {count} constants positive"))
}

fn sphere() -> Outcome {
    let (q, radius, e0): (f64, f64, f64) = (2.5e-9, 0.1, 3.0e4);
    let k = Units::Si.coulomb_constant();
    let scale = k * q.abs() / radius + e0.abs() * radius;
    let mut worst = 0.0f64;
    for i in 0..100 {
        let p = FieldPoint::new(radius, PI * (f64::from(i) / 99.0), 0.0).map_err(|e| e.to_string())?;
        let v = sphere_potential(q, radius, e0, &p, Units::Si).map_err(|e| e.to_string())?;
        worst = worst.max((v - k * q / radius).abs() / scale);
    }
    ensure(worst < 1e-12, || format!("surface deviation {worst:e}"))?;
    let mut coulomb = 0.0f64;
    for &(r, theta) in &[(0.1, 0.3), (0.5, 1.0), (3.0, 2.9)] {
        let p = FieldPoint::new(r, theta, 0.0).map_err(|e| e.to_string())?;
        let v = sphere_potential(q, radius, 0.0, &p, Units::Si).map_err(|e| e.to_string())?;
        let want = k * q / r;
        coulomb = coulomb.max(((v - want) / want).abs());
    }
    ensure(coulomb <= 2.0 * f64::EPSILON, || format!("zero-field deviation {coulomb:e}"))?;
    Ok(format!("surface deviation {worst:.2e}, zero-field deviation {coulomb:.2e}"))
}

fn five_charges() -> ChargeSystem {
    ChargeSystem::new(vec![
        PointCharge::new(1.0e-9, [0.0, 0.0, 0.02]).unwrap(),
        PointCharge::new(-0.5e-9, [0.015, -0.01, 0.005]).unwrap(),
        PointCharge::new(2.0e-9, [-0.012, 0.008, -0.01]).unwrap(),
        PointCharge::new(-0.75e-9, [0.005, 0.018, 0.0]).unwrap(),
        PointCharge::new(1.25e-9, [-0.003, -0.011, -0.016]).unwrap(),
    ])
    .unwrap()
}

fn scalar_multipole() -> Outcome {
    timed(5.0, || {
        let sys = five_charges();
        let d = sys.extent();
        let e = Expansion::new(20, Units::Si).map_err(|e| e.to_string())?;
        let mut worst = 0.0f64;
        let mut worst_ratio = 0.0f64;
        for &(theta, phi) in &[(0.0, 0.0), (0.4, 0.3), (1.1, 2.0), (PI / 2.0, -1.2), (2.3, 4.0), (PI, 0.0)] {
            let p = FieldPoint::new(3.0 * d, theta, phi).map_err(|e| e.to_string())?;
            let want = direct_coulomb(&sys, &p, Units::Si).map_err(|e| e.to_string())?;
            let at = |lmax| e.scalar(&sys, &p, lmax).map(|s| s.value).map_err(|e| e.to_string());
            let (v10, v20) = (at(10)?, at(20)?);
            let rel = ((v20 - want) / want).abs();
            ensure(rel < 1e-8, || format!("theta={theta}: relative error {rel:e}"))?;
            let ratio = (v20 - want).abs() / (v10 - want).abs();
            let bound = 10.0 * (d / p.r).powi(8);
            ensure(ratio < bound, || format!("theta={theta}: error ratio {ratio:e} >= {bound:e}"))?;
            worst = worst.max(rel);
            worst_ratio = worst_ratio.max(ratio);
        }
        Ok(format!("max relative error {worst:.2e}, max error ratio {worst_ratio:.2e}"))
    })
}

fn azimuthal_rel(got: [f64; 3], want: [f64; 3], p: &FieldPoint) -> f64 {
    let e = p.azimuthal_unit();
    let along = |v: [f64; 3]| v[0] * e[0] + v[1] * e[1] + v[2] * e[2];
    ((along(got) - along(want)) / along(want)).abs()
}

fn vector_multipole() -> Outcome {
    let lp = CurrentLoop::new(0.1, 2.0).map_err(|e| e.to_string())?;
    let e = Expansion::new(25, Units::Si).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for &(theta, phi) in &[(PI / 3.0, 0.0), (0.2, 1.0), (PI / 2.0, 2.5), (2.6, -0.7)] {
        let p = FieldPoint::new(5.0 * lp.radius, theta, phi).map_err(|e| e.to_string())?;
        let got = e.vector_loop(&lp, &p, 25, 512).map_err(|e| e.to_string())?.value;
        let want = loop_reference(&lp, &p, 512, Units::Si).map_err(|e| e.to_string())?;
        let rel = azimuthal_rel(got, want, &p);
        ensure(rel < 1e-8, || format!("theta={theta}: relative error {rel:e}"))?;
        worst = worst.max(rel);
    }

    let unit_loop = CurrentLoop::new(1.0, 1.0).map_err(|e| e.to_string())?;
    let dimless = Expansion::new(25, Units::Dimensionless).map_err(|e| e.to_string())?;
    let mut axis = 0.0f64;
    for &(r, theta) in &[(5.0, 0.0), (5.0, PI), (12.0, 0.0)] {
        let p = FieldPoint::new(r, theta, 0.0).map_err(|e| e.to_string())?;
        let v = dimless.vector_loop(&unit_loop, &p, 25, 512).map_err(|e| e.to_string())?.value;
        axis = axis.max(v.iter().fold(0.0f64, |m, c| m.max(c.abs())));
    }
    ensure(axis < 1e-14, || format!("on-axis magnitude {axis:e}"))?;

    let mut far = 0.0f64;
    for &theta in &[0.3, PI / 2.0, 2.0] {
        let p = FieldPoint::new(20.0 * lp.radius, theta, 0.0).map_err(|e| e.to_string())?;
        let a = e.vector_loop(&lp, &p, 25, 512).map_err(|e| e.to_string())?.azimuthal(&p);
        let dipole = loop_dipole_potential(&lp, &p, Units::Si);
        let rel = ((a - dipole) / dipole).abs();
        ensure(rel < 0.01, || format!("theta={theta}: dipole mismatch {rel:e}"))?;
        far = far.max(rel);
    }
    Ok(format!("max relative error {worst:.2e}, on-axis {axis:.2e}, dipole mismatch {far:.2e}"))
}

fn parse_csv(text: &str) -> Result<Vec<Vec<f64>>, String> {
    let mut lines = text.lines();
    let width = lines.next().ok_or("empty CSV")?.split(',').count();
    let mut columns = vec![Vec::new(); width - 1];
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        ensure(fields.len() == width, || format!("ragged row `{line}`"))?;
        for (col, field) in columns.iter_mut().zip(&fields[1..]) {
            col.push(field.parse::<f64>().map_err(|e| format!("`{field}`: {e}"))?);
        }
    }
    Ok(columns)
}

fn figure_counts(panel: &str) -> Result<Vec<usize>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_legendre-ladder"))
        .args(["figure", "--panel", panel])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("{panel}: exit {}", out.status))?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    Ok(parse_csv(&text)?.iter().map(|c| sign_changes(c)).collect())
}

fn figure() -> Outcome {
    let mut summary = Vec::new();
    for ell in 0..=4usize {
        let counts = figure_counts(&format!("mode-{ell}"))?;
        ensure(counts == (0..=ell).collect::<Vec<_>>(), || format!("mode-{ell}: {counts:?}"))?;
        summary.push(format!("mode-{ell} {counts:?}"));
    }
    let counts = figure_counts("oscillator")?;
    ensure(counts == vec![0, 1, 2, 3, 4], || format!("oscillator: {counts:?}"))?;
    summary.push(format!("oscillator {counts:?}"));
    Ok(summary.join(", "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("annihilation of nodeless functions, ell <= 50", annihilation),
        ("construction proportional to Rodrigues form, ell <= 20", construction_matches_rodrigues),
        ("top member equals the Legendre polynomial, ell <= 25", legendre_coincidence),
        ("node count equals n_x, ell <= 20", node_law),
        ("differential equation satisfied, ell <= 15", ode),
        ("unit-norm functions orthonormal, ell <= 12", orthonormality),
        ("normalization constants", normalization_constants),
        ("conducting sphere in a uniform field", sphere),
        ("scalar multipole expansion", scalar_multipole),
        ("current loop vector potential", vector_multipole),
        ("figure node patterns", figure),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS: {name} ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL: {name} ({detail})", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
