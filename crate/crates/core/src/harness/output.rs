use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::run::{run_batch, BatchResult, RunMetrics};
use super::stats::BatchSummary;
use super::ScenarioConfig;
use crate::error::SimError;
use crate::metrics::TickMetrics;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const MANIFEST_FILE: &str = "manifest.toml";

/// Enough to regenerate every output file of a run or batch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub version: String,
    pub base_seed: u64,
    pub runs: usize,
    pub seeds: Vec<u64>,
    pub config: ScenarioConfig,
}

impl Manifest {
    pub fn new(config: &ScenarioConfig, runs: usize, base_seed: u64) -> Self {
        Manifest {
            version: VERSION.to_string(),
            base_seed,
            runs,
            seeds: (0..runs as u64).map(|i| base_seed.wrapping_add(i)).collect(),
            config: config.clone(),
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("manifest always serializes")
    }

    pub fn parse(text: &str) -> Result<Manifest, SimError> {
        let m: Manifest =
            toml::from_str(text).map_err(|e| SimError::Constraint(format!("manifest: {}", e.message().trim())))?;
        m.config.validate()?;
        if m.runs == 0 || m.seeds.len() != m.runs {
            return Err(SimError::Constraint("manifest: seeds do not match runs".into()));
        }
        Ok(m)
    }

    pub fn read(path: &Path) -> Result<Manifest, SimError> {
        let text = fs::read_to_string(path).map_err(|e| SimError::io(path, e))?;
        Manifest::parse(&text)
    }
}

fn csv_err(path: &Path, e: csv::Error) -> SimError {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => SimError::io(path, io),
        other => SimError::Output {
            path: path.to_path_buf(),
            message: format!("{other:?}"),
        },
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, SimError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| SimError::io(path, e))
}

pub fn write_run_csv<W: Write>(out: W, rows: &[TickMetrics]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(TickMetrics::header())?;
    for m in rows {
        w.write_record(m.record())?;
    }
    w.flush()?;
    Ok(())
}

/// `tick` followed by `<column>_mean`, `<column>_sd`, `<column>_ci95` for
/// every other numeric column.
pub fn write_summary_csv<W: Write>(out: W, summary: &BatchSummary) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["tick".to_string()];
    for c in &summary.columns[1..] {
        header.extend([format!("{c}_mean"), format!("{c}_sd"), format!("{c}_ci95")]);
    }
    w.write_record(&header)?;
    for row in &summary.rows {
        let mut r = vec![row[0].mean.to_string()];
        for s in &row[1..] {
            r.extend([s.mean.to_string(), s.sd.to_string(), s.ci95.to_string()]);
        }
        w.write_record(&r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_scalars_csv<W: Write>(out: W, summary: &BatchSummary) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["metric", "mean", "sd", "ci95", "runs"])?;
    for (name, s) in summary.scalars() {
        w.write_record([
            name.to_string(),
            s.mean.to_string(),
            s.sd.to_string(),
            s.ci95.to_string(),
            summary.runs.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn write_with<F>(path: PathBuf, f: F) -> Result<(), SimError>
where
    F: FnOnce(&mut BufWriter<File>) -> csv::Result<()>,
{
    let mut file = create(&path)?;
    f(&mut file).map_err(|e| csv_err(&path, e))?;
    file.flush().map_err(|e| SimError::io(&path, e))
}

/// Write `run_<i>.csv` per run, `summary.csv`, `scalars.csv` and the
/// manifest into `out_dir`, creating it if needed. Returns the paths written.
pub fn write_outputs(out_dir: &Path, manifest: &Manifest, result: &BatchResult) -> Result<Vec<PathBuf>, SimError> {
    fs::create_dir_all(out_dir).map_err(|e| SimError::io(out_dir, e))?;
    let mut written = Vec::new();
    for (i, run) in result.runs.iter().enumerate() {
        let path = out_dir.join(format!("run_{i}.csv"));
        write_with(path.clone(), |f| write_run_csv(f, &run.rows))?;
        written.push(path);
    }
    let path = out_dir.join("summary.csv");
    write_with(path.clone(), |f| write_summary_csv(f, &result.summary))?;
    written.push(path);
    let path = out_dir.join("scalars.csv");
    write_with(path.clone(), |f| write_scalars_csv(f, &result.summary))?;
    written.push(path);
    let path = out_dir.join(MANIFEST_FILE);
    fs::write(&path, manifest.to_toml()).map_err(|e| SimError::io(&path, e))?;
    written.push(path);
    Ok(written)
}

/// Rerun whatever a manifest describes.
pub fn replay_manifest(manifest: &Manifest, threads: Option<usize>) -> Result<BatchResult, SimError> {
    if manifest.version != VERSION {
        return Err(SimError::Constraint(format!(
            "manifest was written by version {}, this is {VERSION}",
            manifest.version
        )));
    }
    run_batch(&manifest.config, manifest.runs, manifest.base_seed, threads)
}

/// Wrap a single run so it can go through [`write_outputs`].
pub fn single_result(run: RunMetrics) -> BatchResult {
    let summary = super::stats::summarize(std::slice::from_ref(&run));
    BatchResult {
        summary,
        runs: vec![run],
    }
}
