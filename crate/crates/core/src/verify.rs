//! The acceptance checks, shared by the integration tests and `lwc verify`.
//!
//! Every check is deterministic: all randomness comes from fixed seeds, and
//! parallel loops draw from per-index streams.

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng as _;
use rayon::prelude::*;

use crate::colored::{
    color_graph, estimate_alpha_h, is_colored_graph, mcb, sample_cm, Color, ColorSet, ColoredDegreeSequence,
};
use crate::entropy::{
    chi2_leq, growth_gap, measure_degree_stats, rate_i_pdq, rate_lambda, rate_lambda_at, s_value,
    shannon_entropy, AverageDegreeVector, Provenance, RateInputs,
};
use crate::enumerate::{enumerate_graphs, enumerate_marked, type_class_size, Limits};
use crate::graph::{canonicalize, DegreeSequence, MarkedGraph, RootedMarkedGraph};
use crate::measure::{
    check_unimodular, empirical_distribution, empirical_distribution_truncated, levy_prokhorov,
    levy_prokhorov_brute_force, LocalMeasure,
};
use crate::rational::{integer, ratio, to_f64, Rational};
use crate::sampler::{
    mixture_identity_check, random_girth_graph, random_marked_graph, sample_uniform_graph, sample_uniform_marked,
    CountVectors, ModelParams, DEFAULT_MAX_ATTEMPTS,
};
use crate::stats::standard_error;
use crate::surgery::modify_graph;
use crate::transport::{transport_case_m1, transport_case_p1, transport_general, DegreeMatrix, TargetDegrees};
use crate::{seeded_rng, stream_rng, Result};

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub number: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

impl CriterionOutcome {
    /// `PASS  3  sampler uniformity: ...`
    pub fn line(&self) -> String {
        format!(
            "{}  {:>2}  {}: {} ({} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.number,
            self.title,
            self.detail,
            self.millis
        )
    }
}

pub const TITLES: [&str; 10] = [
    "counting identity",
    "mixture identity",
    "sampler uniformity",
    "LP oracle equivalence",
    "unimodularity of empirical measures",
    "reconstruction from colored degrees",
    "mass transport postconditions",
    "surgery pipeline",
    "alpha_h positivity",
    "rate-function algebra",
];

/// Runs criterion `number` (1-based). Errors count as failures.
pub fn run(number: usize) -> CriterionOutcome {
    let start = Instant::now();
    let result = match number {
        1 => counting_identity(),
        2 => mixture_identity(),
        3 => sampler_uniformity(),
        4 => lp_oracle(),
        5 => unimodularity(),
        6 => reconstruction(),
        7 => transport(),
        8 => surgery(),
        9 => alpha_h(),
        10 => rate_algebra(),
        _ => panic!("there is no criterion {number}"),
    };
    let (passed, detail) = match result {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionOutcome { number, title: TITLES[number - 1], passed, detail, millis: start.elapsed().as_millis() }
}

pub fn run_all() -> Vec<CriterionOutcome> {
    (1..=TITLES.len()).map(run).collect()
}

type Check = Result<(bool, String)>;

fn degrees(v: &[usize]) -> DegreeSequence {
    DegreeSequence::new(v.to_vec()).expect("fixed sequences have even sums")
}

/// Count vectors for `|Ξ| = 2` from `(m(a,a), m(a,b), m(b,b))`.
fn two_marks(u: Vec<u64>, aa: u64, ab: u64, bb: u64) -> Result<CountVectors> {
    CountVectors::new(u, vec![vec![aa, ab], vec![ab, bb]])
}

/// The fixed instance grid for the counting identity.
pub fn counting_grid() -> Result<Vec<(DegreeSequence, CountVectors)>> {
    let mut grid = Vec::new();
    let seqs: [&[usize]; 8] = [
        &[1, 1],
        &[2, 2, 2],
        &[1, 1, 1, 1],
        &[2, 1, 1],
        &[3, 1, 1, 1],
        &[2, 2, 1, 1],
        &[2, 2, 2, 2, 2],
        &[3, 3, 2, 2, 1, 1],
    ];
    for s in seqs {
        let ell = degrees(s);
        let n = s.len() as u64;
        let e = s.iter().sum::<usize>() as u64 / 2;
        grid.push((ell.clone(), CountVectors::new(vec![n], vec![vec![e]])?));
        let half = n / 2;
        grid.push((ell.clone(), two_marks(vec![half, n - half], e, 0, 0)?));
        grid.push((ell.clone(), two_marks(vec![n - 1, 1], e - e / 2, e / 2, 0)?));
        if e >= 2 {
            grid.push((ell, two_marks(vec![1, n - 1], e - 2, 1, 1)?));
        }
    }
    Ok(grid)
}

fn counting_identity() -> Check {
    let grid = counting_grid()?;
    let failures: Vec<String> = grid
        .par_iter()
        .map(|(ell, cv)| -> Result<Option<String>> {
            let enumerated = enumerate_marked(ell, cv, false)?.count;
            let graphs = enumerate_graphs(ell)?.count;
            let leq: Vec<u64> = cv.m_leq().into_iter().map(|(_, c)| c).collect();
            let formula = graphs * type_class_size(cv.u()) * type_class_size(&leq) * (BigUint::one() << cv.off_diagonal_total());
            Ok((enumerated != formula).then(|| format!("{:?}: {enumerated} vs {formula}", ell.as_slice())))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok((failures.is_empty(), format!("{} instances, {} mismatches {:?}", grid.len(), failures.len(), failures)))
}

fn mixture_identity() -> Check {
    let instances = [
        (degrees(&[1, 1]), ModelParams::new(vec![ratio(1, 2), ratio(1, 2)], vec![ratio(1, 2), ratio(1, 2)])?),
        (degrees(&[1, 1, 1, 1]), ModelParams::new(vec![ratio(1, 3), ratio(2, 3)], vec![ratio(1, 2), ratio(1, 2)])?),
        (degrees(&[2, 2, 1, 1]), ModelParams::new(vec![integer(1)], vec![ratio(1, 4), ratio(3, 4)])?),
    ];
    let mut detail = Vec::new();
    let mut product = true;
    let mut conditional = true;
    for (ell, params) in &instances {
        let r = mixture_identity_check(ell, params, &Limits::default())?;
        product &= r.product_holds();
        conditional &= r.conditional_holds();
        let first = r
            .first_product_violation
            .as_ref()
            .map(|v| format!(", first lhs {} rhs {}", v.lhs, v.rhs))
            .unwrap_or_default();
        detail.push(format!(
            "{:?}: {} outcomes, product form violated on {}{first}, conditional form violated on {}",
            ell.as_slice(),
            r.outcomes,
            r.product_violations,
            r.conditional_violations
        ));
    }
    Ok((product, format!("literal product identity {}; uniform-class form {}; {}", ok(product), ok(conditional), detail.join("; "))))
}

fn ok(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn graph_key(g: &MarkedGraph) -> String {
    format!("{:?}|{:?}", g.vertex_marks(), g.edges().collect::<Vec<_>>())
}

/// Checks empirical frequencies against the uniform law over `members`.
fn frequency_check(members: &[MarkedGraph], samples: &[MarkedGraph]) -> (bool, f64) {
    let mut counts: HashMap<String, u64> = members.iter().map(|g| (graph_key(g), 0)).collect();
    let mut stray = 0;
    for g in samples {
        match counts.get_mut(&graph_key(g)) {
            Some(c) => *c += 1,
            None => stray += 1,
        }
    }
    let p = 1.0 / members.len() as f64;
    let trials = samples.len() as u64;
    let se = standard_error(p, trials);
    let worst = counts.values().map(|&c| ((c as f64 / trials as f64) - p).abs() / se).fold(0.0, f64::max);
    (stray == 0 && worst < 4.0, worst)
}

const UNIFORMITY_SAMPLES: u64 = 100_000;

fn sampler_uniformity() -> Check {
    let ell = degrees(&[1, 1, 1, 1]);
    let members = enumerate_graphs(&ell)?.members.expect("graph enumeration lists members");
    let samples = (0..UNIFORMITY_SAMPLES)
        .into_par_iter()
        .map(|t| sample_uniform_graph(&ell, &mut stream_rng(31, t), DEFAULT_MAX_ATTEMPTS))
        .collect::<Result<Vec<_>>>()?;
    let (plain, worst_plain) = frequency_check(&members, &samples);

    let cv = two_marks(vec![3, 1], 1, 0, 1)?;
    let marked = enumerate_marked(&ell, &cv, true)?.members.expect("members were requested");
    let samples = (0..UNIFORMITY_SAMPLES)
        .into_par_iter()
        .map(|t| sample_uniform_marked(&ell, &cv, &mut stream_rng(32, t), DEFAULT_MAX_ATTEMPTS))
        .collect::<Result<Vec<_>>>()?;
    let (marked_ok, worst_marked) = frequency_check(&marked, &samples);
    Ok((
        plain && marked_ok,
        format!(
            "{} graphs, worst deviation {worst_plain:.2} SE; {} marked outcomes, worst deviation {worst_marked:.2} SE",
            members.len(),
            marked.len()
        ),
    ))
}

/// A random measure with at most `max_support` atoms drawn from small graphs.
pub fn random_measure(rng: &mut crate::Rng, max_support: usize) -> Result<LocalMeasure> {
    let k = rng.gen_range(1..=max_support);
    let mut atoms = Vec::with_capacity(k);
    for _ in 0..k {
        let n = rng.gen_range(1..=6);
        let density = rng.gen_range(0.3..1.0);
        let g = random_marked_graph(rng, n, 3, 2, 2, density);
        let v = rng.gen_range(0..n);
        let class = if rng.gen_bool(0.5) {
            canonicalize(&g.rooted_component(v), None)
        } else {
            let r = rng.gen_range(0..3);
            canonicalize(&g.ball(v, r), Some(r))
        };
        atoms.push((class, integer(rng.gen_range(1..=6))));
    }
    let total: Rational = atoms.iter().map(|(_, w)| w.clone()).sum();
    LocalMeasure::new(atoms.into_iter().map(|(c, w)| (c, w / &total)))
}

fn lp_oracle() -> Check {
    let results = (0..200u64)
        .into_par_iter()
        .map(|t| -> Result<bool> {
            let mut rng = stream_rng(41, t);
            let mu = random_measure(&mut rng, 8)?;
            let nu = random_measure(&mut rng, 8)?;
            Ok(levy_prokhorov(&mu, &nu) == levy_prokhorov_brute_force(&mu, &nu)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let bad = results.iter().filter(|&&r| !r).count();
    Ok((bad == 0, format!("200 pairs, {bad} disagreements")))
}

/// The point mass at the 2-edge path rooted at an endpoint.
pub fn path_endpoint_measure() -> Result<LocalMeasure> {
    let path = MarkedGraph::unmarked(3, &[(0, 1), (1, 2)])?;
    Ok(LocalMeasure::dirac(canonicalize(&RootedMarkedGraph::new(path, 0)?, None)))
}

fn unimodularity() -> Check {
    let results = (0..500u64)
        .into_par_iter()
        .map(|t| -> Result<bool> {
            let mut rng = stream_rng(51, t);
            let n = rng.gen_range(1..=30);
            let density = rng.gen_range(0.2..1.0);
            let g = random_marked_graph(&mut rng, n, 4, 2, 2, density);
            Ok(check_unimodular(&empirical_distribution(&g)?).unimodular)
        })
        .collect::<Result<Vec<_>>>()?;
    let bad = results.iter().filter(|&&r| !r).count();
    let crafted = check_unimodular(&path_endpoint_measure()?);
    let crafted_ok = !crafted.unimodular && crafted.witness.is_some();
    Ok((
        bad == 0 && crafted_ok,
        format!("500 empirical measures, {bad} rejected; path endpoint point mass rejected with witness: {crafted_ok}"),
    ))
}

/// Samples `H` from the colored configuration model of `C(g)` until its
/// colorblind graph is simple with girth above `2k + 1`, and returns
/// `MCB_τ(H)` with the attempt count.
pub fn reconstruct(g: &MarkedGraph, k: usize, rng: &mut crate::Rng, max_attempts: u64) -> Result<(MarkedGraph, u64)> {
    let (colored, _) = color_graph(g, k)?;
    let d = colored.colored_degrees();
    for attempt in 1..=max_attempts {
        let h = sample_cm(&d, rng)?;
        if is_colored_graph(&h, 2 * k + 1) {
            return Ok((mcb(g.vertex_marks(), &h)?, attempt));
        }
    }
    Err(crate::Error::AttemptsExhausted { attempts: max_attempts })
}

fn reconstruction() -> Check {
    let results = (0..50u64)
        .into_par_iter()
        .map(|t| -> Result<(usize, u64)> {
            let mut rng = stream_rng(61, t);
            let k = 1 + (t % 2) as usize;
            let n = 50 + 50 * (t % 6) as usize;
            let g = random_girth_graph(&mut rng, n, 3, 2 * k + 1, 2, 2, 0.5);
            let (out, attempts) = reconstruct(&g, k, &mut rng, DEFAULT_MAX_ATTEMPTS)?;
            let differing = (0..n)
                .filter(|&v| canonicalize(&g.ball(v, k), Some(k)) != canonicalize(&out.ball(v, k), Some(k)))
                .count();
            Ok((differing, attempts))
        })
        .collect::<Result<Vec<_>>>()?;
    let bad: usize = results.iter().map(|r| r.0).sum();
    let attempts: u64 = results.iter().map(|r| r.1).sum();
    Ok((bad == 0, format!("50 pairs, {bad} vertices with a different depth-k class, {attempts} CM samples in total")))
}

/// A random `𝔇_n` instance with `p` singleton and `m` pair rows, entries
/// below `l_max`, and a target differing from `deg A` in at most `s` columns.
pub fn random_transport_instance(
    rng: &mut crate::Rng,
    p: usize,
    m: usize,
    n: usize,
    l_max: u64,
    s: usize,
) -> Result<(DegreeMatrix, TargetDegrees)> {
    let mut rows: Vec<Vec<u64>> = (0..p + 2 * m).map(|_| (0..n).map(|_| rng.gen_range(0..=l_max)).collect()).collect();
    for row in rows.iter_mut().take(p) {
        if row.iter().sum::<u64>() % 2 == 1 {
            let j = row.iter().position(|&x| x > 0).expect("odd sum has a positive entry");
            row[j] -= 1;
        }
    }
    for i in 0..m {
        let (a, b) = (p + 2 * i, p + 2 * i + 1);
        let (sa, sb): (u64, u64) = (rows[a].iter().sum(), rows[b].iter().sum());
        let (hi, mut excess) = if sa > sb { (a, sa - sb) } else { (b, sb - sa) };
        for x in rows[hi].iter_mut() {
            let take = excess.min(*x);
            *x -= take;
            excess -= take;
        }
    }
    let a = DegreeMatrix::new(p, m, rows)?;
    let mut beta = a.column_degrees();
    let mut cols: Vec<usize> = (0..n).collect();
    cols.shuffle(rng);
    let big_m = (p + 2 * m) as u64 * l_max + 2;
    for &j in cols.iter().take(s) {
        beta[j] = rng.gen_range(0..=big_m);
    }
    if beta.iter().sum::<u64>() % 2 == 1 {
        let j = cols[0];
        beta[j] = if beta[j] > 0 { beta[j] - 1 } else { 1 };
    }
    Ok((a, TargetDegrees::new(beta)?))
}

fn transport() -> Check {
    let example = DegreeMatrix::new(0, 1, vec![vec![1, 1], vec![1, 1]])?;
    let out = transport_case_m1(&example, &TargetDegrees::new(vec![2, 4])?)?;
    let example_ok = out.rows() == [vec![1, 2], vec![1, 2]];

    let failures: Vec<String> = (0..1000u64)
        .into_par_iter()
        .map(|t| -> Result<Option<String>> {
            let mut rng = stream_rng(71, t);
            let (p, m) = match t % 3 {
                0 => (1, 0),
                1 => (0, 1),
                _ => (rng.gen_range(1..=3), rng.gen_range(1..=3)),
            };
            let n = rng.gen_range(10..=60);
            let s = rng.gen_range(0..=(n / (p + m + 2)).min(4));
            let l_max = rng.gen_range(1..=3);
            let (a, beta) = random_transport_instance(&mut rng, p, m, n, l_max, s)?;
            let out = transport_general(&a, &beta)?;
            let direct = match (p, m) {
                (1, 0) => Some(transport_case_p1(&a, &beta)?),
                (0, 1) => Some(transport_case_m1(&a, &beta)?),
                _ => None,
            };
            let mut problems = Vec::new();
            if out.matrix.check_membership().is_err() {
                problems.push("membership");
            }
            if out.matrix.column_degrees() != beta.as_slice() {
                problems.push("column sums");
            }
            if out.matrix.max_entry() > beta.max() {
                problems.push("entry bound");
            }
            if !out.within_bound() {
                problems.push("change bound");
            }
            if direct.is_some_and(|d| d != out.matrix) {
                problems.push("case solver disagrees");
            }
            Ok((!problems.is_empty()).then(|| format!("instance {t}: {}", problems.join(", "))))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok((
        example_ok && failures.is_empty(),
        format!("2x2 example reproduced: {example_ok}; 1000 instances, {} failures {:?}", failures.len(), failures),
    ))
}

fn surgery() -> Check {
    let mut rng = seeded_rng(81);
    let n = 200;
    let k = 1;
    let gamma = random_girth_graph(&mut rng, n, 3, 2 * k + 1, 2, 2, 0.7);
    let mut ell = gamma.degrees();
    let v = (0..n).min_by_key(|&v| (ell[v], v)).expect("graph is nonempty");
    ell[v] += 2;
    let (out, report) = modify_graph(&gamma, &degrees(&ell), k, &mut rng, DEFAULT_MAX_ATTEMPTS)?;
    let exact = out.degrees() == ell;
    let lp = levy_prokhorov(&empirical_distribution_truncated(&out, k)?, &empirical_distribution_truncated(&gamma, k)?);
    let displacement = ratio(report.modified_vertices as i64, n as i64);
    let within = report.modified_vertices as u64 <= report.propagated_bound;
    Ok((
        exact && report.degree_exact && lp <= displacement && within,
        format!(
            "degree exact {exact}; d_LP {} <= {} = modified/n: {}; modified {} <= propagated bound {}: {within}; {} CM attempts",
            lp,
            displacement,
            lp <= displacement,
            report.modified_vertices,
            report.propagated_bound,
            report.attempts
        ),
    ))
}

/// Two vertex kinds alternating: kind A has two half-edges of the diagonal
/// color `(0,0)` and one of `(0,1)`; kind B has two of `(1,1)` and one of
/// `(1,0)`.
pub fn alpha_profile(n: usize) -> Result<ColoredDegreeSequence> {
    let cs = ColorSet::new(2)?;
    let (c00, c01, c10, c11) = (cs.color(0, 0), cs.color(0, 1), cs.color(1, 0), cs.color(1, 1));
    let rows = (0..n)
        .map(|v| {
            let pairs: [(Color, u64); 2] = if v % 2 == 0 { [(c00, 2), (c01, 1)] } else { [(c11, 2), (c10, 1)] };
            pairs.into_iter().collect()
        })
        .collect();
    ColoredDegreeSequence::new(cs, rows)
}

pub const ALPHA_TRIALS: u64 = 10_000;

fn alpha_h() -> Check {
    let mut estimates = Vec::new();
    for (i, n) in [200, 400, 800].into_iter().enumerate() {
        estimates.push((n, estimate_alpha_h(&alpha_profile(n)?, 3, ALPHA_TRIALS, 91 + i as u64)?));
    }
    let positive = estimates.iter().all(|(_, e)| e.estimate > 0.0);
    let overlap = estimates.iter().all(|(_, a)| estimates.iter().all(|(_, b)| a.overlaps(b)));
    let parts: Vec<String> =
        estimates.iter().map(|(n, e)| format!("n={n}: {:.4} [{:.4}, {:.4}]", e.estimate, e.ci.0, e.ci.1)).collect();
    Ok((positive && overlap, format!("{}; all positive {positive}; pairwise overlap {overlap}", parts.join(", "))))
}

fn rate_algebra() -> Check {
    let mut checks: Vec<(&str, bool)> = Vec::new();
    checks.push(("s(e)=0", s_value(std::f64::consts::E).abs() < 1e-12));
    checks.push(("s(1)=1/2", (s_value(1.0) - 0.5).abs() < 1e-12));
    checks.push(("H(uniform2)=log 2", (shannon_entropy(&[0.5, 0.5]) - std::f64::consts::LN_2).abs() < 1e-12));

    // U(4-cycle) with alternating vertex marks and one edge mark, d = 2.
    let cycle = MarkedGraph::unmarked(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])?.with_vertex_marks(vec![0, 1, 0, 1])?;
    let mu = empirical_distribution(&cycle)?;
    let stats = measure_degree_stats(&mu, 2, 1)?;
    let upper = std::f64::consts::LN_2 + s_value(2.0);
    let inputs = |p: &str| {
        RateInputs::parse(&format!(
            "P = {p}\nvartheta = 1/2,1/2\nchi = 1\nSigma = {}\nJ1 = -0.3\nprovenance = supplied\n",
            upper - 0.25
        ))
    };
    let matched = inputs("2:1")?;
    let dvec = AverageDegreeVector::new(stats.dvec_f64())?;
    let i = rate_i_pdq(matched.j1, matched.sigma, &dvec, &stats.pi_f64(), &mu, &matched.p)?;
    let leq: Vec<f64> = stats.deg_leq.iter().map(|x| to_f64(x) / 2.0).collect();
    let forced = leq == chi2_leq(&[1.0]) && stats.pi_f64() == [0.5, 0.5];
    let lambda = rate_lambda(&matched, &mu)?;
    checks.push(("lambda = I at chi2 and vartheta", forced && lambda == i && matched.provenance == Provenance::Supplied));
    let alpha = vec![integer(1)];
    checks.push(("infimum attained at the forced point", rate_lambda_at(&matched, &mu, &alpha, &stats.pi)? == lambda));
    checks.push(("lambda infinite when deg != d", rate_lambda(&inputs("3:1")?, &mu)? == f64::INFINITY));

    // Growth of |G_{m,u}|: one edge mark with d = 1, vertex marks uniform on two.
    let dvec = AverageDegreeVector::new(vec![vec![1.0]])?;
    let gaps: Vec<f64> = [4u64, 6, 8]
        .iter()
        .map(|&n| -> Result<f64> {
            let cv = CountVectors::new(vec![n / 2, n / 2], vec![vec![n / 2]])?;
            Ok(growth_gap(n as usize, &cv, &[0.5, 0.5], &dvec))
        })
        .collect::<Result<_>>()?;
    let trend = gaps.windows(2).all(|w| w[1] <= w[0]);
    checks.push(("class-size gap nonincreasing", trend));
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    Ok((
        failed.is_empty(),
        format!("{} checks, failed {:?}; gaps/n at n=4,6,8: {:.4}, {:.4}, {:.4}", checks.len(), failed, gaps[0], gaps[1], gaps[2]),
    ))
}
