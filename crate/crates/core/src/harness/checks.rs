use rand::Rng;
use serde::Serialize;
use std::path::PathBuf;
use std::time::Instant;

use super::{count_hits, estimate_fdd_batch, lln_topline, render_svg, verify_arches, Model, VerificationReport};
use crate::correspondences::{
    drs, drs_inverse, rs, rs_inverse, rsk, rsk_inverse, LatticeConfiguration, Permutation, PointConfiguration,
};
use crate::exactlaw::{
    diagram_levels, fdd_continuous, fdd_discrete, km_block_exact, marginal_continuous, normalization_discrete,
    plancherel_schur_exact, poisson_tail_bound, power_sum_diagnostic, Direction, FddQuery, Pin,
};
use crate::numeric::exact_rational;
use crate::partitions::{
    count_ssyt, dim_skew_standard, dim_standard, enumerate_ssyt, enumerate_standard, EnumerationCap, SkewShape,
    YoungDiagram,
};
use crate::sampling::{sample_poisson_square, RngSpec};
use crate::trajectories::{curve_process, diagram_at, full_trajectory};
use crate::Result;

/// Shared parameters for registry checks.
#[derive(Clone, Debug)]
pub struct CheckContext {
    pub seed: u64,
    pub stream: u64,
    /// Multiplier on every Monte-Carlo sample count; runtime limits are only
    /// enforced at scale 1 or below.
    pub sample_scale: f64,
    pub threshold: f64,
    /// Directory for rendered artifacts, if any.
    pub out_dir: Option<PathBuf>,
}

impl Default for CheckContext {
    fn default() -> Self {
        CheckContext { seed: 2024, stream: 0, sample_scale: 1.0, threshold: super::DEFAULT_THRESHOLD, out_dir: None }
    }
}

impl CheckContext {
    pub fn rng(&self, salt: u64) -> RngSpec {
        RngSpec::new(self.seed, self.stream).substream(salt)
    }

    pub fn samples(&self, n: u64) -> u64 {
        ((n as f64 * self.sample_scale).round() as u64).max(1)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: String,
    pub criterion: u32,
    pub passed: bool,
    pub details: Vec<String>,
    pub reports: Vec<VerificationReport>,
    pub elapsed_secs: f64,
}

type CheckFn = fn(&CheckContext, &mut Outcome) -> Result<()>;

/// A registered verification, one per acceptance criterion.
#[derive(Clone, Copy)]
pub struct Check {
    pub id: &'static str,
    pub criterion: u32,
    pub title: &'static str,
    pub time_limit_secs: Option<f64>,
    run: CheckFn,
}

/// Mutable scratch for a running check.
#[derive(Default)]
pub struct Outcome {
    passed: bool,
    details: Vec<String>,
    reports: Vec<VerificationReport>,
}

impl Outcome {
    fn require(&mut self, ok: bool, detail: String) {
        self.passed &= ok;
        self.details.push(format!("{} {detail}", if ok { "ok  " } else { "FAIL" }));
    }

    fn reports(&mut self, reports: Vec<VerificationReport>) {
        for r in reports {
            let detail = format!(
                "{}: {}/{} = {:.6} vs {:.6} (z = {:.2})",
                r.name, r.hits, r.samples, r.empirical, r.exact, r.z_score
            );
            self.require(r.pass, detail);
            self.reports.push(r);
        }
    }
}

impl Check {
    pub fn run(&self, ctx: &CheckContext) -> CheckOutcome {
        let start = Instant::now();
        let mut out = Outcome { passed: true, ..Default::default() };
        if let Err(e) = (self.run)(ctx, &mut out) {
            out.require(false, format!("error: {e}"));
        }
        let elapsed = start.elapsed().as_secs_f64();
        if let Some(limit) = self.time_limit_secs {
            if ctx.sample_scale <= 1.0 {
                out.require(elapsed < limit, format!("runtime {elapsed:.2}s < {limit}s"));
            }
        }
        CheckOutcome {
            id: self.id.to_string(),
            criterion: self.criterion,
            passed: out.passed,
            details: out.details,
            reports: out.reports,
            elapsed_secs: elapsed,
        }
    }
}

pub fn registry() -> Vec<Check> {
    vec![
        Check { id: "bijections", criterion: 1, title: "RS, dRS and RSK round trips", time_limit_secs: Some(10.0), run: bijections },
        Check { id: "dimensions", criterion: 2, title: "determinant counts against enumeration", time_limit_secs: Some(60.0), run: dimensions },
        Check { id: "curve-identity", criterion: 3, title: "rectangle RS shapes equal the diagram process", time_limit_secs: None, run: curve_identity },
        Check { id: "continuous-fdd", criterion: 4, title: "continuous finite-dimensional law by Monte Carlo", time_limit_secs: Some(120.0), run: continuous_fdd },
        Check { id: "marginals", criterion: 5, title: "single-time marginals", time_limit_secs: None, run: marginals },
        Check { id: "karlin-macgregor", criterion: 6, title: "path determinants equal skew Schur values", time_limit_secs: None, run: karlin_macgregor },
        Check { id: "arches", criterion: 7, title: "non-intersecting arches against frozen-line ensemble", time_limit_secs: None, run: arches },
        Check { id: "discrete-fdd", criterion: 8, title: "lattice finite-dimensional law and normalization", time_limit_secs: None, run: discrete_fdd },
        Check { id: "discrete-limit", criterion: 9, title: "lattice law converges to the continuous law", time_limit_secs: None, run: discrete_limit },
        Check { id: "lln", criterion: 10, title: "top-line law of large numbers", time_limit_secs: None, run: lln },
        Check { id: "figure", criterion: 11, title: "theta = 40 ensemble rendering", time_limit_secs: Some(5.0), run: figure },
    ]
}

fn d(rows: &[u32]) -> YoungDiagram {
    YoungDiagram::new(rows.to_vec()).expect("literal partition")
}

fn pins(list: &[(f64, &[u32])]) -> Vec<Pin> {
    list.iter().map(|&(t, r)| Pin::new(t, d(r))).collect()
}

fn random_configuration<R: Rng>(rng: &mut R, theta: f64, max_points: usize) -> PointConfiguration {
    loop {
        let n = rng.gen_range(0..=max_points);
        let pts = (0..n).map(|_| (theta * rng.gen::<f64>(), theta * rng.gen::<f64>())).collect();
        if let Ok(c) = PointConfiguration::new(theta, pts) {
            return c;
        }
    }
}

fn bijections(ctx: &CheckContext, out: &mut Outcome) -> Result<()> {
    let mut perms = 0;
    let mut failures = 0;
    for n in 0..=7 {
        for p in Permutation::all(n) {
            let (a, b) = rs(&p);
            perms += 1;
            failures += (rs_inverse(&a, &b)? != p) as usize;
        }
    }
    out.require(failures == 0, format!("RS round trip on {perms} permutations, {failures} failures"));

    let mut rng = ctx.rng(1).rng();
    let mut failures = 0;
    for _ in 0..10_000 {
        let theta = rng.gen_range(0.5..3.0);
        let c = random_configuration(&mut rng, theta, 10);
        failures += (drs_inverse(&drs(&c))? != c) as usize;
    }
    out.require(failures == 0, format!("dRS round trip on 10000 configurations, {failures} failures"));

    let mut count = 0;
    let mut failures = 0;
    for a in 0..=4u64 {
        for b in 0..=4 - a {
            for c in 0..=4 - a - b {
                for e in 0..=4 - a - b - c {
                    let m = LatticeConfiguration::new(1.0, 2, vec![vec![a, b], vec![c, e]])?;
                    count += 1;
                    failures += (rsk_inverse(&rsk(&m), 1.0)? != m) as usize;
                }
            }
        }
    }
    for _ in 0..10_000 {
        let counts = (0..3).map(|_| (0..3).map(|_| rng.gen_range(0..4u64)).collect()).collect();
        let m = LatticeConfiguration::new(2.0, 3, counts)?;
        count += 1;
        failures += (rsk_inverse(&rsk(&m), 2.0)? != m) as usize;
    }
    out.require(failures == 0, format!("RSK round trip on {count} matrices, {failures} failures"));
    Ok(())
}

fn dimensions(_: &CheckContext, out: &mut Outcome) -> Result<()> {
    let cap = EnumerationCap::default();
    let mut checked = 0;
    let mut failures = 0;
    for lambda in YoungDiagram::partitions_up_to(8) {
        let n = enumerate_standard(&SkewShape::straight(lambda.clone()), cap)?.len();
        checked += 1;
        failures += (dim_standard(&lambda) != n.into()) as usize;
    }
    out.require(failures == 0, format!("hook lengths on {checked} diagrams, {failures} mismatches"));

    let (mut checked, mut failures) = (0, 0);
    for outer in YoungDiagram::partitions_up_to(8) {
        for inner in outer.subdiagrams() {
            let s = SkewShape::new(outer.clone(), inner)?;
            checked += 1;
            failures += (dim_skew_standard(&s) != enumerate_standard(&s, cap)?.len().into()) as usize;
        }
    }
    out.require(failures == 0, format!("skew determinants on {checked} shapes, {failures} mismatches"));

    let (mut checked, mut failures) = (0, 0);
    for outer in YoungDiagram::partitions_up_to(6) {
        for inner in outer.subdiagrams() {
            let s = SkewShape::new(outer.clone(), inner)?;
            for k in 1..=4 {
                checked += 1;
                failures += (count_ssyt(&s, k)? != enumerate_ssyt(&s, k, cap)?.len().into()) as usize;
            }
        }
    }
    out.require(failures == 0, format!("semistandard determinants on {checked} cases, {failures} mismatches"));
    Ok(())
}

fn curve_identity(ctx: &CheckContext, out: &mut Outcome) -> Result<()> {
    let mut rng = ctx.rng(3).rng();
    let (mut compared, mut failures) = (0, 0);
    for _ in 0..1000 {
        let c = random_configuration(&mut rng, 1.0, 5);
        let pair = drs(&c);
        let mut times: Vec<f64> = (0..50).map(|j| -1.0 + 2.0 * j as f64 / 49.0).collect();
        times.extend(full_trajectory(&pair).events().iter().map(|e| e.time));
        for t in times {
            compared += 1;
            failures += (curve_process(&c, t)? != diagram_at(&pair, t)?) as usize;
        }
    }
    out.require(failures == 0, format!("{compared} comparisons over 1000 configurations, {failures} mismatches"));
    Ok(())
}

fn continuous_queries() -> Result<Vec<FddQuery>> {
    let sets: [&[(f64, &[u32])]; 7] = [
        &[(0.0, &[])],
        &[(0.0, &[1])],
        &[(-0.5, &[1]), (0.0, &[1])],
        &[(-0.5, &[1]), (0.0, &[1]), (0.5, &[1])],
        &[(0.0, &[2])],
        &[(0.0, &[1, 1])],
        &[(-0.25, &[1]), (0.0, &[2]), (0.5, &[1])],
    ];
    sets.iter().map(|s| FddQuery::continuous(1.0, pins(s))).collect()
}

fn continuous_fdd(ctx: &CheckContext, out: &mut Outcome) -> Result<()> {
    let reports = estimate_fdd_batch(&continuous_queries()?, ctx.samples(1_000_000), ctx.rng(4), ctx.threshold)?;
    out.reports(reports);
    Ok(())
}

fn marginals(ctx: &CheckContext, out: &mut Outcome) -> Result<()> {
    let theta = 1.0;
    for t in [-0.5, 0.25] {
        let mut worst: f64 = 0.0;
        for lambda in YoungDiagram::partitions_up_to(3) {
            let mut sum = 0.0;
            for nu in lambda.superdiagrams_up_to(25) {
                let list = if t < 0.0 {
                    vec![Pin::new(t, lambda.clone()), Pin::new(0.0, nu)]
                } else {
                    vec![Pin::new(0.0, nu), Pin::new(t, lambda.clone())]
                };
                sum += fdd_continuous(&FddQuery::continuous(theta, list)?)?.probability();
            }
            worst = worst.max((sum - marginal_continuous(&lambda, t, theta)?.probability()).abs());
        }
        let tail = poisson_tail_bound(theta * theta, 25);
        out.require(
            worst <= 1e-8,
            format!("summed law over |nu| <= 25 at t = {t}: max error {worst:.2e} (omitted mass <= {tail:.1e})"),
        );
    }

    let small = YoungDiagram::partitions_up_to(2);
    let times = [-0.5, 0.25];
    let sets: Vec<Vec<Pin>> =
        times.iter().flat_map(|&t| small.iter().map(move |l| vec![Pin::new(t, l.clone())])).collect();
    let samples = ctx.samples(1_000_000);
    let rng = ctx.rng(5);
    let hits = count_hits(Model::Continuous, theta, &sets, samples, rng, true)?;
    let mut reports = Vec::new();
    for (set, h) in sets.iter().zip(hits) {
        let (t, l) = (set[0].time, &set[0].diagram);
        let exact = marginal_continuous(l, t, theta)?.probability();
        let name = format!("marginal theta={theta} t={t} {l}");
        reports.push(VerificationReport::one_sided(name, h, samples, exact, ctx.threshold, rng));
    }
    out.reports(reports);
    Ok(())
}

fn karlin_macgregor(_: &CheckContext, out: &mut Outcome) -> Result<()> {
    let times = [exact_rational(1.0 / 4.0), exact_rational(2.0), exact_rational(0.625)];
    let (mut checked, mut failures) = (0, 0);
    for outer in YoungDiagram::partitions_up_to(6) {
        for inner in outer.subdiagrams() {
            let s = SkewShape::new(outer.clone(), inner.clone())?;
            for t in &times {
                let want = plancherel_schur_exact(&s, t)?;
                for lines in [outer.num_rows(), outer.num_rows() + 2] {
                    let (lo, hi) = (diagram_levels(&inner, lines), diagram_levels(&outer, lines));
                    checked += 2;
                    failures += (km_block_exact(&lo, &hi, t, Direction::Up)? != want) as usize;
                    failures += (km_block_exact(&hi, &lo, t, Direction::Down)? != want) as usize;
                }
            }
        }
    }
    out.require(failures == 0, format!("{checked} exact determinant comparisons, {failures} mismatches"));
    Ok(())
}

fn arches(ctx: &CheckContext, out: &mut Outcome) -> Result<()> {
    let samples = ctx.samples(100_000);
    for (n, salt) in [(1usize, 71u64), (2, 72)] {
        let reports = verify_arches(0.5, n, &[-0.25, 0.0, 0.25], samples, ctx.rng(salt), ctx.threshold)?;
        out.require(!reports.is_empty(), format!("N = {n}: {} target tuples compared", reports.len()));
        out.reports(reports);
    }
    Ok(())
}

fn discrete_fdd(ctx: &CheckContext, out: &mut Outcome) -> Result<()> {
    let (theta, k) = (0.5, 2);
    let sets: [&[(f64, &[u32])]; 6] = [
        &[(0.0, &[])],
        &[(0.0, &[1])],
        &[(-0.25, &[1]), (0.0, &[1])],
        &[(0.0, &[2])],
        &[(0.0, &[1, 1])],
        &[(-0.25, &[1]), (0.0, &[2]), (0.1, &[1])],
    ];
    let queries: Vec<FddQuery> = sets.iter().map(|s| FddQuery::discrete(theta, k, pins(s))).collect::<Result<_>>()?;
    out.reports(estimate_fdd_batch(&queries, ctx.samples(1_000_000), ctx.rng(8), ctx.threshold)?);

    let (total, tail) = normalization_discrete(theta, k, 20)?;
    out.require(
        (total - 1.0).abs() <= 1e-6 + tail,
        format!("sum over |nu| <= 20 = {total:.12} (omitted mass <= {tail:.1e})"),
    );
    Ok(())
}

fn discrete_limit(_: &CheckContext, out: &mut Outcome) -> Result<()> {
    let ks = [10u32, 100, 1000, 10_000];
    let sets: [&[(f64, &[u32])]; 2] = [&[(0.0, &[1])], &[(-0.5, &[1]), (0.0, &[1])]];
    for s in sets {
        let limit = fdd_continuous(&FddQuery::continuous(1.0, pins(s))?)?.probability();
        let errs: Vec<f64> = ks
            .iter()
            .map(|&k| Ok((fdd_discrete(&FddQuery::discrete(1.0, k, pins(s))?)?.probability() - limit).abs()))
            .collect::<Result<_>>()?;
        let monotone = errs.windows(2).all(|w| w[1] < w[0]);
        let last = errs[ks.len() - 1];
        out.require(
            monotone && last <= 1e-3,
            format!(
                "pins {s:?}: errors [{}] at k = {ks:?}",
                errs.iter().map(|e| format!("{e:.3e}")).collect::<Vec<_>>().join(", ")
            ),
        );
    }

    for (rows, target) in [(&[1u32, 1][..], (1.0f64 / 3.0).powi(2)), (&[2u32][..], 0.0)] {
        let lambda = d(rows);
        let errs: Vec<f64> = ks
            .iter()
            .map(|&k| {
                let (finite, exponential) = power_sum_diagnostic(&lambda, 1.0, k, 0.0, 1.0 / 3.0);
                debug_assert_eq!(exponential, target);
                (finite - exponential).abs()
            })
            .collect();
        let scaled: Vec<f64> = errs.iter().zip(ks).map(|(e, k)| e * k as f64).collect();
        let bounded = scaled.iter().all(|&s| s <= 1.0) && errs.windows(2).all(|w| w[1] < w[0]);
        out.require(bounded, format!("power sum {lambda}: k * error = {scaled:.3?}"));
    }
    Ok(())
}

fn lln(ctx: &CheckContext, out: &mut Outcome) -> Result<()> {
    let taus = [0.0, 0.5, -0.5, 0.99, -0.99];
    let rows = lln_topline(100.0, &taus, 20, ctx.rng(10))?;
    for r in rows {
        let (ok, band) = if r.tau.abs() > 0.9 {
            ((r.mean_ratio - r.limit).abs() <= 0.1, "0.1 absolute".to_string())
        } else {
            (r.relative_error <= 0.05, "5%".to_string())
        };
        out.require(
            ok,
            format!(
                "tau = {}: mean M(1; tau theta)/theta = {:.4}, limit {:.4}, relative error {:.2}% (band {band})",
                r.tau,
                r.mean_ratio,
                r.limit,
                100.0 * r.relative_error
            ),
        );
    }
    Ok(())
}

fn figure(ctx: &CheckContext, out: &mut Outcome) -> Result<()> {
    let config = sample_poisson_square(40.0, ctx.rng(11))?;
    let n = config.len();
    out.require((1440..=1760).contains(&n), format!("point count {n} in [1440, 1760]"));
    let tr = full_trajectory(&drs(&config));
    let (svg, summary) = render_svg(&tr, 0);
    let top = summary.max_value.unwrap_or(0);
    out.require((65..=95).contains(&top), format!("top line maximum {top} in [65, 95]"));
    let ordered = tr.events().iter().all(|e| {
        let rows = e.diagram.num_rows() + 1;
        (1..rows).all(|i| e.diagram.row(i - 1) as i64 - (i as i64) > e.diagram.row(i) as i64 - (i as i64 + 1))
    });
    out.require(ordered && summary.non_intersecting, format!("{} lines strictly ordered at all events", summary.lines_drawn));
    out.require(svg.matches("<polyline").count() == summary.lines_drawn, "svg has one polyline per line".into());
    if let Some(dir) = &ctx.out_dir {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("ensemble-theta40.svg"), svg)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_covers_every_criterion() {
        let r = registry();
        let mut ids: Vec<u32> = r.iter().map(|c| c.criterion).collect();
        ids.sort();
        assert_eq!(ids, (1..=11).collect::<Vec<_>>());
        let mut names: Vec<&str> = r.iter().map(|c| c.id).collect();
        names.dedup();
        assert_eq!(names.len(), 11);
    }

    #[test]
    fn cheap_checks_pass() {
        let ctx = CheckContext::default();
        for c in registry().into_iter().filter(|c| ["karlin-macgregor", "discrete-limit"].contains(&c.id)) {
            let o = c.run(&ctx);
            assert!(o.passed, "{:?}", o.details);
        }
    }
}
