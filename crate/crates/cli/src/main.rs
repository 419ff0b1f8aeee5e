//! `lexlift`: construct, verify, count, and export neighborly polytopes
//! inscribed on the unit sphere, all in exact rational arithmetic.
//!
//! Exit codes: 0 every check passed, 1 a verification failed, 2 the input
//! was unusable, 3 an internal invariant was breached.

mod jobfile;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use jobfile::{read_job, write_job, JobFile};
use lexlift::{
    construct_neighborly, count_labeled_types, delaunay_triangulation, enumeration_specs,
    final_stage_ball_lifting, inscribed_realization, is_general_position, lower_bound,
    placing_triangulation, verify_certificate, verify_inscribed, verify_lift, Error, FacetSet,
    KBody, Lifting, PermutationChoice, PointConfiguration, Result, SignChoice, Triangulation,
};

#[derive(Parser)]
#[command(
    name = "lexlift",
    version,
    about = "Neighborly polytopes inscribed on the sphere, via exact lexicographic liftings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a construction spec and write its certificate.
    Construct {
        /// Job file of kind `pipeline_spec`.
        spec: PathBuf,
        /// Where to write the certificate job file.
        out: PathBuf,
        /// Also build an inscribed realization, written next to the
        /// certificate with an `.inscribed.json` suffix.
        #[arg(long)]
        inscribe: bool,
        /// Override the spec's seed for the added-point draws.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Verify the claims of a job file; flags add further checks.
    Verify {
        file: PathBuf,
        /// Check that the file's boundary is K-neighborly.
        #[arg(long, value_name = "K")]
        neighborly: Option<usize>,
        /// For a certificate: build and verify an inscribed realization.
        #[arg(long)]
        inscribed: bool,
        /// Check that the Delaunay triangulation of the lifted
        /// configuration equals its insertion-order triangulation.
        #[arg(long = "delaunay-eq")]
        delaunay_eq: bool,
        /// Check unit-ball compatibility of a lifting (or of the final
        /// stage of a certificate).
        #[arg(long)]
        lift: bool,
    },
    /// Count distinct labeled boundaries over a family of specs.
    Count {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        points: usize,
        /// Which relabelings of the seed configuration to run:
        /// `all` or `random:K`.
        #[arg(long, default_value = "all")]
        perms: String,
        /// Which first-lift sign vectors to run: `positive` or `all`.
        #[arg(long, default_value = "positive")]
        signs: String,
        /// Worker threads (defaults to all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Seed for sampled relabelings and added-point draws.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Export coordinates (and facets, if present) for other tools.
    Export {
        file: PathBuf,
        out: PathBuf,
        /// `off` (Geomview OFF / nOFF) or `json-approx`.
        #[arg(long, default_value = "off")]
        format: String,
        /// Decimal digits for approximated coordinates.
        #[arg(long, default_value_t = 12)]
        digits: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct { spec, out, inscribe, seed } => construct(&spec, &out, inscribe, seed),
        Command::Verify { file, neighborly, inscribed, delaunay_eq, lift } => {
            verify(&file, neighborly, inscribed, delaunay_eq, lift)
        }
        Command::Count { dim, points, perms, signs, jobs, seed } => {
            count(dim, points, &perms, &signs, jobs, seed)
        }
        Command::Export { file, out, format, digits } => export(&file, &out, &format, digits),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::VerificationFailed(_) => 1,
                Error::InternalInvariant(_) => 3,
                _ => 2,
            })
        }
    }
}

fn construct(spec_path: &Path, out: &Path, inscribe: bool, seed: Option<u64>) -> Result<()> {
    let job = read_job(spec_path)?;
    let kind = job.kind();
    let JobFile::PipelineSpec(mut spec) = job else {
        return Err(Error::InvalidParameter(format!(
            "construct needs a pipeline_spec job file, got {kind}"
        )));
    };
    if let Some(seed) = seed {
        spec.seed = seed;
    }
    let cert = construct_neighborly(&spec)?;
    println!(
        "certificate: {} vertices in dimension {}, {} facets, {}-neighborly",
        cert.points,
        cert.dim,
        cert.facets.facets.len(),
        cert.neighborly
    );
    write_job(out, &JobFile::Certificate(cert.clone()))?;
    println!("wrote {}", out.display());
    if inscribe {
        let realization = inscribed_realization(&cert)?;
        let sibling = out.with_extension("inscribed.json");
        write_job(&sibling, &JobFile::InscribedRealization(realization))?;
        println!("wrote {}", sibling.display());
    }
    Ok(())
}

fn require_pass(passed: bool, what: &str) -> Result<()> {
    if passed {
        println!("{what}: PASS");
        Ok(())
    } else {
        Err(Error::VerificationFailed(what.into()))
    }
}

fn structural_triangulation_check(t: &Triangulation) -> Result<()> {
    for cell in &t.cells {
        let mut sorted = cell.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted != *cell || cell.len() != t.dim + 1 {
            return Err(Error::VerificationFailed(format!(
                "cell {cell:?} is not a sorted set of {} labels",
                t.dim + 1
            )));
        }
        if cell.iter().any(|l| t.unused.contains(l)) {
            return Err(Error::VerificationFailed(format!(
                "cell {cell:?} touches a label marked unused"
            )));
        }
    }
    Ok(())
}

fn structural_facet_check(f: &FacetSet) -> Result<()> {
    for facet in &f.facets {
        let mut sorted = facet.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted != *facet || facet.len() != f.dim {
            return Err(Error::VerificationFailed(format!(
                "facet {facet:?} is not a sorted set of {} labels",
                f.dim
            )));
        }
    }
    Ok(())
}

fn boundary_of(job: &JobFile) -> Option<&FacetSet> {
    match job {
        JobFile::FacetSet(f) => Some(f),
        JobFile::Certificate(c) => Some(&c.facets),
        JobFile::InscribedRealization(r) => Some(&r.facets),
        _ => None,
    }
}

fn delaunay_equals_placing(lifting: &Lifting, what: &str) -> Result<()> {
    let lifted = lifting.lifted_configuration()?;
    require_pass(
        delaunay_triangulation(&lifted)? == placing_triangulation(&lifted)?,
        what,
    )
}

fn verify(
    file: &Path,
    neighborly: Option<usize>,
    inscribed: bool,
    delaunay_eq: bool,
    lift: bool,
) -> Result<()> {
    let job = read_job(file)?;
    match &job {
        JobFile::PointConfiguration(config) => {
            require_pass(is_general_position(config)?, "general position")?;
        }
        JobFile::PipelineSpec(spec) => {
            construct_neighborly(spec)?;
            require_pass(true, "spec constructs")?;
        }
        JobFile::Triangulation(t) => {
            structural_triangulation_check(t)?;
            require_pass(true, "triangulation structure")?;
        }
        JobFile::FacetSet(f) => {
            structural_facet_check(f)?;
            require_pass(true, "facet structure")?;
        }
        JobFile::Lifting(l) => {
            require_pass(verify_lift(l, None)?, "lifting conditions")?;
        }
        JobFile::Certificate(c) => {
            verify_certificate(c)?;
            require_pass(true, "certificate replay")?;
        }
        JobFile::InscribedRealization(r) => {
            require_pass(verify_inscribed(r, &r.facets)?, "inscribed realization")?;
        }
    }

    if let Some(k) = neighborly {
        if let Some(boundary) = boundary_of(&job) {
            require_pass(boundary.is_k_neighborly(k)?, &format!("{k}-neighborly"))?;
        } else if let JobFile::Triangulation(t) = &job {
            let level = (t.dim + 1) / 2;
            if k != level {
                return Err(Error::InvalidParameter(format!(
                    "triangulations of dimension {} are checked at neighborliness {level}",
                    t.dim
                )));
            }
            require_pass(
                lexlift::is_neighborly_triangulation(t)?,
                &format!("{k}-neighborly triangulation"),
            )?;
        } else {
            return Err(Error::InvalidParameter(format!(
                "--neighborly does not apply to a {} job file",
                job.kind()
            )));
        }
    }

    if inscribed {
        match &job {
            JobFile::Certificate(c) => {
                inscribed_realization(c)?;
                require_pass(true, "inscribed realization")?;
            }
            JobFile::InscribedRealization(_) => {} // already the default check
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "--inscribed does not apply to a {} job file",
                    job.kind()
                )));
            }
        }
    }

    if delaunay_eq {
        match &job {
            JobFile::Lifting(l) => delaunay_equals_placing(l, "delaunay equals placing")?,
            JobFile::Certificate(c) => delaunay_equals_placing(
                &final_stage_ball_lifting(c)?,
                "final-stage delaunay equals placing",
            )?,
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "--delaunay-eq does not apply to a {} job file",
                    job.kind()
                )));
            }
        }
    }

    if lift {
        match &job {
            JobFile::Lifting(l) => {
                require_pass(
                    verify_lift(l, Some(&KBody::unit_ball()))?,
                    "unit-ball compatibility",
                )?;
            }
            JobFile::Certificate(c) => {
                final_stage_ball_lifting(c)?;
                require_pass(true, "final stage lifts ball-compatibly")?;
            }
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "--lift does not apply to a {} job file",
                    job.kind()
                )));
            }
        }
    }
    Ok(())
}

fn count(
    dim: usize,
    points: usize,
    perms: &str,
    signs: &str,
    jobs: Option<usize>,
    seed: u64,
) -> Result<()> {
    let permutations = match perms {
        "all" => PermutationChoice::All,
        other => match other.strip_prefix("random:").and_then(|k| k.parse().ok()) {
            Some(k) => PermutationChoice::Random(k),
            None => {
                return Err(Error::InvalidParameter(format!(
                    "--perms must be `all` or `random:K`, got `{other}`"
                )));
            }
        },
    };
    let signs = match signs {
        "positive" => SignChoice::Positive,
        "all" => SignChoice::All,
        other => {
            return Err(Error::InvalidParameter(format!(
                "--signs must be `positive` or `all`, got `{other}`"
            )));
        }
    };
    let specs = enumeration_specs(dim, points, permutations, signs, seed)?;
    let report = match jobs {
        Some(workers) => rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("cannot start {workers} workers: {e}")))?
            .install(|| count_labeled_types(dim, points, &specs)),
        None => count_labeled_types(dim, points, &specs),
    }?;

    println!("specs evaluated: {}", specs.len());
    println!("construction errors: {}", report.errors.len());
    for (index, message) in report.errors.iter().take(5) {
        println!("  spec {index} failed: {message}");
    }
    println!("distinct labeled types: {}", report.types.len());
    match lower_bound(points, dim) {
        Ok(bound) => println!("counting lower bound: {bound}"),
        Err(_) => println!("counting lower bound: undefined for this dimension"),
    }
    for (i, (facets, witness)) in report.types.iter().enumerate() {
        let spec_json = serde_json::to_string(witness)
            .map_err(|e| Error::InvalidParameter(format!("cannot serialize witness: {e}")))?;
        println!("type {}: {} facets, witness: {spec_json}", i + 1, facets.facets.len());
    }
    Ok(())
}

fn export(file: &Path, out: &Path, format: &str, digits: usize) -> Result<()> {
    if !(1..=17).contains(&digits) {
        return Err(Error::InvalidParameter(
            "--digits must be between 1 and 17".into(),
        ));
    }
    let job = read_job(file)?;
    let (vertices, facets): (PointConfiguration, Option<FacetSet>) = match &job {
        JobFile::PointConfiguration(c) => (c.clone(), None),
        JobFile::Lifting(l) => (l.lifted_configuration()?, None),
        JobFile::Certificate(c) => (c.final_config.clone(), Some(c.facets.clone())),
        JobFile::InscribedRealization(r) => (r.vertices.clone(), Some(r.facets.clone())),
        other => {
            return Err(Error::InvalidParameter(format!(
                "export needs coordinates; a {} job file has none",
                other.kind()
            )));
        }
    };
    let text = match format {
        "off" => render_off(&vertices, facets.as_ref(), digits)?,
        "json-approx" => render_json_approx(&vertices, facets.as_ref(), digits)?,
        other => {
            return Err(Error::InvalidParameter(format!(
                "--format must be `off` or `json-approx`, got `{other}`"
            )));
        }
    };
    std::fs::write(out, text)
        .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", out.display())))?;
    println!("wrote {}", out.display());
    Ok(())
}

fn render_off(
    vertices: &PointConfiguration,
    facets: Option<&FacetSet>,
    digits: usize,
) -> Result<String> {
    let labels = vertices.labels();
    let index_of = |label| labels.iter().position(|&l| l == label);
    let facet_rows = facets.map(|f| &f.facets);
    let facet_count = facet_rows.map_or(0, |rows| rows.len());

    let mut text = String::new();
    if vertices.dim() == 3 {
        text.push_str("OFF\n");
    } else {
        text.push_str(&format!("nOFF\n{}\n", vertices.dim()));
    }
    text.push_str(&format!("{} {} 0\n", vertices.len(), facet_count));
    for label in &labels {
        let coords: Vec<String> = vertices
            .point(*label)?
            .coords
            .iter()
            .map(|c| format!("{:.*}", digits, c.to_f64()))
            .collect();
        text.push_str(&coords.join(" "));
        text.push('\n');
    }
    if let Some(rows) = facet_rows {
        for facet in rows {
            let mut row = format!("{}", facet.len());
            for label in facet {
                let index = index_of(*label).ok_or_else(|| {
                    Error::InvalidLabels(format!("facet label {label} has no vertex"))
                })?;
                row.push_str(&format!(" {index}"));
            }
            text.push_str(&row);
            text.push('\n');
        }
    }
    Ok(text)
}

fn render_json_approx(
    vertices: &PointConfiguration,
    facets: Option<&FacetSet>,
    digits: usize,
) -> Result<String> {
    let scale = 10f64.powi(digits as i32);
    let labels = vertices.labels();
    let mut rows = Vec::with_capacity(labels.len());
    for label in &labels {
        let coords: Vec<f64> = vertices
            .point(*label)?
            .coords
            .iter()
            .map(|c| (c.to_f64() * scale).round() / scale)
            .collect();
        rows.push(coords);
    }
    let value = serde_json::json!({
        "dim": vertices.dim(),
        "labels": labels,
        "vertices": rows,
        "facets": facets.map(|f| f.facets.iter().cloned().collect::<Vec<_>>()),
    });
    let mut text = serde_json::to_string_pretty(&value)
        .map_err(|e| Error::InvalidParameter(format!("cannot serialize export: {e}")))?;
    text.push('\n');
    Ok(text)
}
