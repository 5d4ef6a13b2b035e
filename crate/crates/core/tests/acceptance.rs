//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any FAIL.

use spectral_zeta::experiments::{
    cofactor_determinant, complete_graph_spectrum, cycle_spectrum, dense_laplacian_eigenvalues, euler_closed_form,
    euler_value_recovery, laplacian_from_edges, rh_ratio_experiment, spanning_trees, torus2d_logdet_limit,
    verlinde_dimension,
};
use spectral_zeta::heat::heat_trace_z;
use spectral_zeta::identities::{
    check_nilsson_identity, check_padic_kernels, check_poisson_circle, check_xi_circle, check_xi_p, check_xi_z,
    default_poisson_positions, default_strip_grid, default_xi_circle_grid, default_xi_z_grid, random_grid,
    xi_circle_deviation, DEFAULT_PADIC_TIMES, DEFAULT_PADIC_VALUATIONS, DEFAULT_POISSON_TIMES,
};
use spectral_zeta::mellin::{mellin_zeta, zeta_prime_at_zero};
use spectral_zeta::specialfn::make_character;
use spectral_zeta::zetas::{
    finite_graph_zeta, tree_measure_moment, zeta_cycle, zeta_tree, zeta_tree_spectral_measure, zeta_z, zeta_zd,
};
use spectral_zeta::{ComplexScalar, QuadratureSpec, Result, Route, ZetaSpace};
use std::time::{Duration, Instant};

fn c(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}

fn sci(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| format!("{v:.2e}")).collect();
    format!("[{}]", parts.join(", "))
}

/// A criterion's verdict and the evidence behind it.
struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        passed,
        detail: detail.into(),
    })
}

fn closed_form_vs_definition() -> Result<Outcome> {
    let grid = default_strip_grid(ZetaSpace::Z);
    let trace = heat_trace_z();
    let spec = QuadratureSpec::default();
    let complex_points = grid.iter().filter(|s| s.im != 0.0).count();
    let mut worst = 0f64;
    for &s in &grid {
        worst = worst.max((zeta_z(s)? - mellin_zeta(&trace, s, &spec)?).norm());
    }
    outcome(
        grid.len() == 20 && complex_points > 0 && worst < 1e-8,
        format!(
            "{} points ({complex_points} complex), max |closed − mellin| = {worst:.2e}",
            grid.len()
        ),
    )
}

fn xi_z_symmetry() -> Result<Outcome> {
    let r = check_xi_z(&default_xi_z_grid(), 1e-10)?;
    outcome(r.passed && r.points_checked == 231, r.to_string())
}

fn central_binomial_and_catalan() -> Result<Outcome> {
    let (mut binom, mut catalan) = (1u64, 1u64);
    let mut worst = 0f64;
    let mut exact = true;
    for n in 0..=10u64 {
        if n > 0 {
            binom = binom * (2 * n) * (2 * n - 1) / (n * n);
            catalan = catalan * 2 * (2 * n - 1) / (n + 1);
        }
        let z = zeta_z(c(-(n as f64), 0.0))?;
        worst = worst.max((z.re - binom as f64).abs()).max(z.im.abs());
        exact &= (z.re / (n + 1) as f64).round() as u64 == catalan;
    }
    outcome(
        worst < 1e-9 && exact,
        format!("n = 0..10: max rounding distance {worst:.2e}, Catalan numbers exact: {exact}"),
    )
}

fn cycle_special_values() -> Result<Outcome> {
    let mut worst = 0f64;
    for n in 2..=50usize {
        let nf = n as f64;
        let n2 = nf * nf;
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let dense = dense_laplacian_eigenvalues(&laplacian_from_edges(n, &edges)?)?;
        for (s, expected) in [(1.0, (n2 - 1.0) / 12.0), (2.0, (n2 - 1.0) * (n2 + 11.0) / 720.0)] {
            let closed = zeta_cycle(n, c(s, 0.0));
            let eigen = finite_graph_zeta(&dense, c(s, 0.0));
            let scale = expected.max(1.0);
            worst = worst
                .max((closed - expected).norm() / scale)
                .max((eigen - expected).norm() / scale);
        }
    }
    outcome(
        worst < 1e-10,
        format!(
            "n = 2..50, s = 1, 2: closed form and dense eigenvalue sums, max deviation {worst:.2e} (relative above 1)"
        ),
    )
}

fn verlinde_integrality() -> Result<Outcome> {
    let mut worst = 0f64;
    let mut count = 0;
    for g in 2..=5 {
        for m in 1..=10 {
            worst = worst.max(verlinde_dimension(g, m)?.distance);
            count += 1;
        }
    }
    let spot = (verlinde_dimension(2, 1)?.nearest, verlinde_dimension(2, 2)?.nearest);
    outcome(
        count == 40 && worst < 1e-6 && spot == (4, 10),
        format!(
            "{count} values, max distance to an integer {worst:.2e}, (g,m) = (2,1) → {}, (2,2) → {}",
            spot.0, spot.1
        ),
    )
}

fn euler_recovery() -> Result<Outcome> {
    let schedule: Vec<u64> = (2..=60).chain([100, 500, 1000]).collect();
    let mut worst = 0f64;
    for m in [1, 2] {
        for r in euler_value_recovery(m, &schedule)? {
            let exact = euler_closed_form(m, r.n).expect("closed form for m ≤ 2");
            worst = worst.max((r.value.re - exact).abs());
        }
    }
    let limit = euler_value_recovery(3, &[1000])?[0].abs_error;
    outcome(
        worst < 1e-12 && limit < 1e-6,
        format!("m = 1, 2 vs rational closed form: max {worst:.2e}; m = 3, n = 1000 limit error {limit:.2e}"),
    )
}

fn poisson_summation() -> Result<Outcome> {
    let r = check_poisson_circle(&DEFAULT_POISSON_TIMES, &default_poisson_positions(), 1e-12)?;
    outcome(r.passed, r.to_string())
}

fn circle_xi_symmetry() -> Result<Outcome> {
    let zero = c(0.5, 14.134725);
    let grid = default_xi_circle_grid();
    let r = check_xi_circle(&grid, 1e-9)?;
    let at_zero = xi_circle_deviation(zero)?;
    let near_zero_ok = grid.contains(&zero) && at_zero.is_some_and(|d| d < 1e-9);
    outcome(
        r.passed && near_zero_ok,
        format!(
            "{r}; at 0.5+14.134725i: {}",
            at_zero.map_or("skipped".into(), |d| format!("{d:.2e}"))
        ),
    )
}

fn zd_cross_route() -> Result<Outcome> {
    let mut worst = 0f64;
    for d in [2, 3] {
        for s in [c(0.3, 0.0), c(0.5, 0.0), c(0.25, 1.0)] {
            let a = zeta_zd(d, s, Route::Mellin)?;
            let b = zeta_zd(d, s, Route::Lauricella)?;
            worst = worst.max((a - b).norm());
        }
    }
    outcome(
        worst < 1e-6,
        format!("d = 2, 3 at s = 0.3, 0.5, 0.25+i: max |mellin − lauricella| = {worst:.2e}"),
    )
}

fn tree_cross_route() -> Result<Outcome> {
    let mut worst = 0f64;
    let mut moments = 0f64;
    for q in [2, 3] {
        for s in [0.5, 1.0, 2.0] {
            let a = zeta_tree(q, c(s, 0.0))?;
            let b = zeta_tree_spectral_measure(q, c(s, 0.0))?;
            worst = worst.max((a - b).norm());
        }
        moments = moments
            .max((tree_measure_moment(q, 0)? - 1.0).abs())
            .max((tree_measure_moment(q, 2)? - (q + 1) as f64).abs());
    }
    outcome(
        worst < 1e-6 && moments < 1e-10,
        format!("q = 2, 3: max |picard − measure| = {worst:.2e}; moments 0 and 2 off by {moments:.2e}"),
    )
}

fn padic_checks() -> Result<Outcome> {
    let kernels = check_padic_kernels(&[2, 3, 5], &DEFAULT_PADIC_VALUATIONS, &DEFAULT_PADIC_TIMES, 1e-10)?;
    let grid = random_grid(50, 20_240_611);
    let mut xi_ok = true;
    let mut xi_worst = 0f64;
    for p in [2, 3, 5, 7] {
        let r = check_xi_p(p, &grid, 1e-12)?;
        xi_ok &= r.passed && r.points_checked == 50;
        xi_worst = xi_worst.max(r.max_abs_deviation);
    }
    let nilsson = check_nilsson_identity(2, 0, 5.0, 1e-10)?;
    outcome(
        kernels.passed && xi_ok && nilsson.passed,
        format!(
            "kernels {:.2e} on {} points; xi_p symmetry at 50 random points, p = 2, 3, 5, 7: {xi_worst:.2e}; nilsson {:.2e}",
            kernels.max_abs_deviation, kernels.points_checked, nilsson.max_abs_deviation
        ),
    )
}

fn integer_laplacian(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut l = vec![vec![0i64; n]; n];
    for &(i, j) in edges {
        l[i][i] += 1;
        l[j][j] += 1;
        l[i][j] -= 1;
        l[j][i] -= 1;
    }
    l
}

fn determinants() -> Result<Outcome> {
    let mut ok = true;
    for n in 3..=12usize {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let spectrum = cycle_spectrum(n)?;
        let cofactor = cofactor_determinant(&integer_laplacian(n, &edges))?;
        let det = (-zeta_prime_at_zero(spectrum.nonzero_eigenvalues())?).exp();
        let product: f64 = spectrum.nonzero_eigenvalues().iter().product();
        ok &= spanning_trees(&spectrum)? == n as u64
            && cofactor == n as i128
            && det.round() == product.round()
            && det.round() as u128 == (n * n) as u128;
    }
    let k4_edges: Vec<_> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
    let k4 = complete_graph_spectrum(4)?;
    let k4_cofactor = cofactor_determinant(&integer_laplacian(4, &k4_edges))?;
    let k4_det = (-zeta_prime_at_zero(k4.nonzero_eigenvalues())?).exp();
    let k4_trees = spanning_trees(&k4)?;
    ok &= k4_trees == 16 && k4_cofactor == 16 && k4_det.round() == 64.0;
    outcome(
        ok,
        format!("cycles n = 3..12 give n trees and Πλ′ = n²; K4 gives {k4_trees} trees, cofactor {k4_cofactor}, det {k4_det:.12}"),
    )
}

fn torus_logdet() -> Result<Outcome> {
    let rows = torus2d_logdet_limit(&[16, 32, 64, 128])?;
    let errors: Vec<f64> = rows.iter().map(|r| r.abs_error).collect();
    let decreasing = errors.windows(2).all(|w| w[1] < w[0]);
    outcome(
        decreasing && errors[3] < 1e-3,
        format!("errors at n = 16, 32, 64, 128: {}", sci(&errors)),
    )
}

fn rh_ratio() -> Result<Outcome> {
    const ROUND_OFF: f64 = 1e-12;
    let chi = make_character(5, 2)?;
    let schedule = [10, 100, 1000];
    let on_line: Vec<f64> = rh_ratio_experiment(&chi, c(0.5, 10.0), &schedule, false)?
        .iter()
        .map(|r| r.abs_error)
        .collect();
    // on the critical line the ratio is 1 for every n, so the deviation sits at
    // round-off; off the line it must strictly decrease
    let on_line_ok = on_line[2] < 0.01 && on_line.windows(2).all(|w| w[1] < w[0] || w[1] <= ROUND_OFF);
    let off_line: Vec<f64> = rh_ratio_experiment(&chi, c(0.3, 10.0), &schedule, false)?
        .iter()
        .map(|r| r.abs_error)
        .collect();
    let off_line_ok = off_line.windows(2).all(|w| w[1] < w[0]);
    outcome(
        on_line_ok && off_line_ok,
        format!(
            "deviation at s = 0.5+10i: {}; at s = 0.3+10i: {}",
            sci(&on_line),
            sci(&off_line)
        ),
    )
}

type Criterion = (&'static str, fn() -> Result<Outcome>, Option<Duration>);

fn main() {
    let criteria: [Criterion; 14] = [
        (
            "closed form vs heat-trace Mellin transform for ζ_ℤ",
            closed_form_vs_definition,
            Some(Duration::from_secs(10)),
        ),
        ("ξ_ℤ functional equation", xi_z_symmetry, Some(Duration::from_secs(1))),
        (
            "ζ_ℤ(−n) = C(2n,n) and Catalan numbers",
            central_binomial_and_catalan,
            None,
        ),
        ("cycle special values at s = 1, 2", cycle_special_values, None),
        ("Verlinde integrality", verlinde_integrality, None),
        ("Euler value recovery", euler_recovery, None),
        ("Poisson summation for circle heat kernels", poisson_summation, None),
        ("completed circle zeta symmetry", circle_xi_symmetry, None),
        (
            "ℤ^d Mellin vs Lauricella",
            zd_cross_route,
            Some(Duration::from_secs(60)),
        ),
        ("tree Picard vs spectral measure", tree_cross_route, None),
        ("p-adic kernels, ξ_p symmetry, Nilsson identity", padic_checks, None),
        ("spanning trees and determinants", determinants, None),
        (
            "ℤ² log-determinant limit 4G/π",
            torus_logdet,
            Some(Duration::from_secs(30)),
        ),
        ("L-function ratio experiment", rh_ratio, Some(Duration::from_secs(10))),
    ];
    let mut failures = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = match result {
            Ok(o) => (o.passed, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if let Some(limit) = limit {
            if elapsed > *limit {
                passed = false;
                detail.push_str(&format!("; exceeded the {limit:?} budget"));
            }
        }
        failures += usize::from(!passed);
        println!(
            "{} {:>2}. {name}: {detail} [{:.2}s]",
            if passed { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "acceptance: {}/{} criteria pass",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
