use super::run::RunMetrics;
use crate::epidemic::Compartment;
use crate::metrics::TickMetrics;

/// Normal-approximation 95% quantile.
pub const Z95: f64 = 1.96;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Stat {
    pub mean: f64,
    /// Sample standard deviation; zero for a single value.
    pub sd: f64,
    pub ci95: f64,
}

impl Stat {
    pub fn of(values: &[f64]) -> Stat {
        let n = values.len();
        if n == 0 {
            return Stat::default();
        }
        let mean = values.iter().sum::<f64>() / n as f64;
        if n == 1 {
            return Stat {
                mean,
                sd: 0.0,
                ci95: 0.0,
            };
        }
        let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
        let sd = var.sqrt();
        Stat {
            mean,
            sd,
            ci95: Z95 * sd / (n as f64).sqrt(),
        }
    }

    pub fn lower(&self) -> f64 {
        self.mean - self.ci95
    }

    pub fn upper(&self) -> f64 {
        self.mean + self.ci95
    }

    pub fn overlaps(&self, other: &Stat) -> bool {
        self.lower() <= other.upper() && other.lower() <= self.upper()
    }
}

/// Whole-run scalars of one run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunScalars {
    pub peak_infected: f64,
    pub peak_tick: f64,
    pub deaths: f64,
}

impl RunScalars {
    pub const NAMES: [&'static str; 3] = ["peak_infected", "peak_tick", "deaths"];

    pub fn of(rows: &[TickMetrics]) -> RunScalars {
        let mut peak = 0;
        let mut peak_tick = 0;
        for m in rows {
            if m.infected > peak {
                peak = m.infected;
                peak_tick = m.tick;
            }
        }
        RunScalars {
            peak_infected: peak as f64,
            peak_tick: peak_tick as f64,
            deaths: rows.last().map_or(0, |m| m.compartment(Compartment::Dead)) as f64,
        }
    }

    fn values(&self) -> [f64; 3] {
        [self.peak_infected, self.peak_tick, self.deaths]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BatchSummary {
    pub runs: usize,
    pub columns: Vec<String>,
    /// `rows[tick][column]`.
    pub rows: Vec<Vec<Stat>>,
    pub peak_infected: Stat,
    pub peak_tick: Stat,
    pub deaths: Stat,
}

impl BatchSummary {
    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Mean of one column at every tick.
    pub fn means(&self, name: &str) -> Vec<f64> {
        let c = self.column(name).unwrap_or_else(|| panic!("no column {name}"));
        self.rows.iter().map(|r| r[c].mean).collect()
    }

    pub fn scalars(&self) -> [(&'static str, Stat); 3] {
        [
            ("peak_infected", self.peak_infected),
            ("peak_tick", self.peak_tick),
            ("deaths", self.deaths),
        ]
    }
}

/// Fold runs in the order given.
pub fn summarize(runs: &[RunMetrics]) -> BatchSummary {
    let columns = TickMetrics::numeric_columns();
    let ticks = runs.iter().map(|r| r.rows.len()).min().unwrap_or(0);
    let per_run: Vec<Vec<Vec<f64>>> = runs
        .iter()
        .map(|r| r.rows[..ticks].iter().map(|m| m.numeric_values()).collect())
        .collect();
    let rows = (0..ticks)
        .map(|t| {
            (0..columns.len())
                .map(|c| {
                    let v: Vec<f64> = per_run.iter().map(|r| r[t][c]).collect();
                    Stat::of(&v)
                })
                .collect()
        })
        .collect();
    let scalars: Vec<[f64; 3]> = runs.iter().map(|r| RunScalars::of(&r.rows).values()).collect();
    let stat = |k: usize| Stat::of(&scalars.iter().map(|s| s[k]).collect::<Vec<_>>());
    BatchSummary {
        runs: runs.len(),
        columns,
        rows,
        peak_infected: stat(0),
        peak_tick: stat(1),
        deaths: stat(2),
    }
}
