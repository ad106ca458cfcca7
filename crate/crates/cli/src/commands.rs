use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use rayon::prelude::*;

use lwc::colored::{estimate_alpha_h, parse_cds, write_cds};
use lwc::entropy::{measure_degree_stats, rate_i_pdq, rate_lambda, AverageDegreeVector, Provenance, RateInputs};
use lwc::enumerate::{enumerate_graphs_with, enumerate_marked_with, Limits};
use lwc::graph::{infer_alphabets, parse_graph, write_graph, DegreeSequence, MarkAlphabets, MarkedGraph};
use lwc::measure::{levy_prokhorov, levy_prokhorov_brute_force, parse_measure};
use lwc::rational::format as fmt_rational;
use lwc::sampler::{sample_iid_marked, sample_uniform_graph, sample_uniform_marked, Model, SamplerConfig};
use lwc::surgery::modify_graph;
use lwc::transport::{modify_colored_degrees, parse_beta, parse_dmat, transport_general, write_dmat};
use lwc::verify;

use crate::{CmArgs, Command, DistanceArgs, EntropyArgs, EnumerateArgs, SampleArgs, SurgeryArgs, TransportArgs, VerifyArgs};

pub fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Sample(a) => sample(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Distance(a) => distance(a),
        Command::Entropy(a) => entropy(a),
        Command::Transport(a) => transport(a),
        Command::Surgery(a) => surgery(a),
        Command::Cm(a) => cm(a),
        Command::Verify(a) => return verify_suite(a),
    }?;
    Ok(ExitCode::SUCCESS)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// An inline list like `2,2,2`, or else a file in the degree format.
fn degrees_arg(arg: &str) -> Result<DegreeSequence> {
    let inline = !arg.is_empty() && arg.chars().all(|c| c.is_ascii_digit() || c == ',' || c == ' ');
    let text = if inline && !Path::new(arg).exists() { arg.to_string() } else { read(Path::new(arg))? };
    Ok(DegreeSequence::parse(&text)?)
}

fn print(out: &str) {
    print!("{out}");
}

fn sample(a: SampleArgs) -> Result<()> {
    let config = SamplerConfig::parse(&read(&a.config)?)?;
    let ell = match (&config.degrees, &config.degrees_file) {
        (Some(d), _) => d.clone(),
        (None, Some(file)) => {
            let base = a.config.parent().map(Path::to_path_buf).unwrap_or_default();
            DegreeSequence::parse(&read(&base.join(file))?)?
        }
        (None, None) => bail!("configuration has no degree sequence"),
    };
    let Some(seed) = a.seed.or(config.seed) else {
        bail!(lwc::Error::InvalidInput("a seed is required (configuration `seed` or --seed)".into()));
    };
    let trials = a.trials.unwrap_or(config.trials);
    let graphs = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = lwc::stream_rng(seed, t);
            match config.model {
                Model::Uniform => sample_uniform_graph(&ell, &mut rng, config.max_attempts),
                Model::Iid => sample_iid_marked(
                    &ell,
                    config.params.as_ref().expect("checked when parsing"),
                    &mut rng,
                    config.max_attempts,
                ),
                Model::Marked => sample_uniform_marked(
                    &ell,
                    config.counts.as_ref().expect("checked when parsing"),
                    &mut rng,
                    config.max_attempts,
                ),
            }
        })
        .collect::<lwc::Result<Vec<MarkedGraph>>>()?;
    let mut out = String::new();
    if a.csv {
        out.push_str("trial,n,edges,max_degree\n");
        for (t, g) in graphs.iter().enumerate() {
            writeln!(out, "{t},{},{},{}", g.n(), g.edge_count(), g.max_degree())?;
        }
    } else {
        for (t, g) in graphs.iter().enumerate() {
            writeln!(out, "# sample {t}")?;
            out.push_str(&write_graph(g, &config.alphabets));
        }
    }
    print(&out);
    Ok(())
}

fn enumerate(a: EnumerateArgs) -> Result<()> {
    let ell = degrees_arg(&a.degrees)?;
    let limits = Limits { max_n: a.cap, ..Limits::default() };
    let (result, alphabets) = match &a.marks {
        None => (enumerate_graphs_with(&ell, &limits)?, MarkAlphabets::new(["o"], ["o"])?),
        Some(path) => {
            let mut text = read(path)?;
            // The marks file only needs theta, xi, u and m.
            if !text.lines().any(|l| l.trim_start().starts_with("degrees")) {
                text.push_str(&format!("\ndegrees = {}\n", join(ell.as_slice())));
            }
            if !text.lines().any(|l| l.trim_start().starts_with("model")) {
                text.push_str("model = marked\n");
            }
            let config = SamplerConfig::parse(&text)?;
            let Some(cv) = config.counts else { bail!(lwc::Error::InvalidInput("marks file needs u and m".into())) };
            (enumerate_marked_with(&ell, &cv, a.members, &limits)?, config.alphabets)
        }
    };
    let mut out = format!("count={}\n", result.count);
    if a.members {
        for g in result.members.unwrap_or_default() {
            out.push_str(&write_graph(&g, &alphabets));
        }
    }
    print(&out);
    Ok(())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn distance(a: DistanceArgs) -> Result<()> {
    let mu = parse_measure(&read(&a.first)?)?;
    let nu = parse_measure(&read(&a.second)?)?;
    let d = if a.brute_force { levy_prokhorov_brute_force(&mu, &nu)? } else { levy_prokhorov(&mu, &nu) };
    println!("{}", fmt_rational(&d));
    Ok(())
}

fn entropy(a: EntropyArgs) -> Result<()> {
    let inputs = RateInputs::parse(&read(&a.inputs)?)?;
    let mu = parse_measure(&read(&a.measure)?)?;
    let stats = measure_degree_stats(&mu, inputs.vartheta.len(), inputs.chi.len())?;
    let mut out = String::new();
    writeln!(out, "d={}", fmt_rational(&inputs.mean_degree()))?;
    writeln!(out, "deg_mu={}", fmt_rational(&stats.deg))?;
    writeln!(out, "pi_mu={}", stats.pi.iter().map(fmt_rational).collect::<Vec<_>>().join(","))?;
    let provenance = match inputs.provenance {
        Provenance::Supplied => "supplied",
        Provenance::Estimate => "estimate",
    };
    writeln!(out, "provenance={provenance}")?;
    if let Ok(dvec) = AverageDegreeVector::new(stats.dvec_f64()) {
        let i = rate_i_pdq(inputs.j1, inputs.sigma, &dvec, &stats.pi_f64(), &mu, &inputs.p)?;
        writeln!(out, "I_PdQ={i}")?;
    }
    writeln!(out, "lambda={}", rate_lambda(&inputs, &mu)?)?;
    print(&out);
    Ok(())
}

fn transport(a: TransportArgs) -> Result<()> {
    let mut out = String::new();
    match (&a.matrix, &a.beta, &a.colored, &a.degrees) {
        (Some(m), Some(b), _, _) => {
            let matrix = parse_dmat(&read(m)?)?;
            let beta = parse_beta(&read(b)?)?;
            let r = transport_general(&matrix, &beta)?;
            out.push_str(&write_dmat(&r.matrix));
            let changed: Vec<usize> = r.changed_columns.iter().map(|j| j + 1).collect();
            writeln!(out, "# disagreements={}", r.disagreements)?;
            writeln!(out, "# changed_columns={}", join(&changed))?;
            writeln!(out, "# bound={}", r.bound)?;
        }
        (_, _, Some(c), Some(d)) => {
            let cds = parse_cds(&read(c)?)?;
            let ell = degrees_arg(d)?;
            let r = modify_colored_degrees(&cds, &ell)?;
            out.push_str(&write_cds(&r.sequence));
            let changed: Vec<usize> = r.changed_vertices.iter().map(|v| v + 1).collect();
            writeln!(out, "# changed_vertices={}", join(&changed))?;
            writeln!(out, "# bound={}", r.bound)?;
        }
        _ => bail!(lwc::Error::InvalidInput("give --matrix with --beta, or --colored with --degrees".into())),
    }
    print(&out);
    Ok(())
}

fn surgery(a: SurgeryArgs) -> Result<()> {
    let text = read(&a.graph)?;
    let alphabets = infer_alphabets(&text)?;
    let gamma = parse_graph(&text, &alphabets)?;
    let ell = degrees_arg(&a.degrees)?;
    let mut rng = lwc::seeded_rng(a.seed);
    let (out, report) = modify_graph(&gamma, &ell, a.k, &mut rng, a.max_attempts)?;
    write(&a.out, &write_graph(&out, &alphabets))?;
    print(&report.to_text());
    Ok(())
}

fn write(path: &PathBuf, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn cm(a: CmArgs) -> Result<()> {
    let d = parse_cds(&read(&a.cds)?)?;
    let e = estimate_alpha_h(&d, a.h, a.trials, a.seed)?;
    println!("n,h,trials,successes,estimate,ci_low,ci_high");
    println!("{},{},{},{},{},{},{}", d.n(), a.h, e.trials, e.successes, e.estimate, e.ci.0, e.ci.1);
    Ok(())
}

const SUITE_NAMES: [&str; 10] =
    ["counting", "mixture", "sampler", "lp", "unimodular", "reconstruction", "transport", "surgery", "alpha", "rates"];

fn suite(spec: &str) -> Result<Vec<usize>> {
    if spec == "all" {
        return Ok((1..=SUITE_NAMES.len()).collect());
    }
    spec.split(',')
        .map(str::trim)
        .map(|s| {
            SUITE_NAMES
                .iter()
                .position(|&n| n == s)
                .map(|i| i + 1)
                .or_else(|| s.parse().ok().filter(|n| (1..=SUITE_NAMES.len()).contains(n)))
                .ok_or_else(|| lwc::Error::InvalidInput(format!("unknown suite {s:?}")).into())
        })
        .collect()
}

fn csv_field(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn verify_suite(a: VerifyArgs) -> Result<ExitCode> {
    let numbers = suite(&a.suite)?;
    let mut failed = 0;
    if a.csv {
        println!("criterion,title,status,millis,detail");
    }
    for n in numbers {
        let o = verify::run(n);
        failed += usize::from(!o.passed);
        if a.csv {
            let status = if o.passed { "PASS" } else { "FAIL" };
            println!("{},{},{status},{},{}", o.number, csv_field(o.title), o.millis, csv_field(&o.detail));
        } else {
            println!("{}", o.line());
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}
