//! Parallel evaluation of graph instances with a persistent cache.

use std::collections::HashSet;
use std::path::PathBuf;
use std::sync::mpsc;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use distpoly::families::{FamilyKind, FamilyParams, FamilySpec};
use distpoly::graph::{canonical_graph6, Graph};
use distpoly::spectra::{expected_peak, ExpectedPeak};

use crate::cache::{Cache, CacheError};
use crate::record::{analyze_graph, Checks, ReportRecord};

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error("parallelism must be at least 1")]
    ZeroJobs,
    #[error("could not start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// One graph to analyse, or a description of why it could not be built.
#[derive(Clone, Debug)]
pub struct Instance {
    pub family: String,
    pub graph: Result<Graph, String>,
    pub expected: Option<ExpectedPeak>,
}

impl Instance {
    pub fn new(family: impl Into<String>, graph: Graph) -> Self {
        Instance { family: family.into(), graph: Ok(graph), expected: None }
    }

    pub fn from_spec(spec: &FamilySpec) -> Self {
        Instance {
            family: spec.descriptor(),
            graph: spec.build().map_err(|e| e.to_string()),
            expected: expected_peak(spec),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub jobs: usize,
    pub cache: Option<PathBuf>,
    pub checks: Checks,
    /// Keep per-record wall-clock times in the output.
    pub timing: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { jobs: 1, cache: None, checks: Checks::default(), timing: false }
    }
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    /// One record per distinct graph, sorted by key.
    pub records: Vec<ReportRecord>,
    pub computed: usize,
    pub cached: usize,
    /// Bytes of a partial cache line discarded on open.
    pub discarded_bytes: usize,
}

/// Every combination of the given parameter values, in the order
/// t, k, ell, d, q, b, n. Empty lists leave the parameter unset.
pub fn family_grid(kind: FamilyKind, values: &[(&'static str, Vec<usize>)]) -> Vec<FamilySpec> {
    let mut grid = vec![FamilyParams::default()];
    for (name, options) in values {
        if options.is_empty() {
            continue;
        }
        grid = grid
            .into_iter()
            .flat_map(|p| {
                options.iter().map(move |&v| {
                    let mut q = p.clone();
                    match *name {
                        "t" => q.t = Some(v),
                        "k" => q.k = Some(v),
                        "ell" => q.ell = Some(v),
                        "d" => q.d = Some(v),
                        "q" => q.q = Some(v),
                        "b" => q.b = Some(v),
                        "n" => q.n = Some(v),
                        other => panic!("unknown family parameter {other}"),
                    }
                    q
                })
            })
            .collect();
    }
    grid.into_iter().map(|params| FamilySpec::new(kind, params)).collect()
}

/// Analyses every instance once per isomorphism class. Cached records are
/// reused when they carry every requested check; new records are appended
/// to the cache by a single writer as workers finish. The result does not
/// depend on `jobs`.
pub fn run_sweep(instances: Vec<Instance>, options: &SweepOptions) -> Result<SweepOutcome, SweepError> {
    if options.jobs == 0 {
        return Err(SweepError::ZeroJobs);
    }
    let mut cache = options.cache.as_deref().map(Cache::open).transpose()?;
    let discarded_bytes = cache.as_ref().map_or(0, Cache::discarded_bytes);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(options.jobs).build()?;

    let keyed: Vec<(String, Instance)> = pool.install(|| {
        instances
            .into_par_iter()
            .map(|inst| {
                let key = match &inst.graph {
                    Ok(g) => canonical_graph6(g),
                    Err(_) => format!("!{}", inst.family),
                };
                (key, inst)
            })
            .collect()
    });

    let mut seen = HashSet::new();
    let mut records = Vec::new();
    let mut todo = Vec::new();
    let mut cached = 0;
    for (key, inst) in keyed {
        if !seen.insert(key.clone()) {
            continue;
        }
        let graph = match &inst.graph {
            Ok(g) => g,
            Err(e) => {
                records.push(ReportRecord::failure(key, 0, inst.family.clone(), e.clone()));
                continue;
            }
        };
        let hit = cache
            .as_ref()
            .and_then(|c| c.get(&key))
            .filter(|r| !options.checks.hierarchy || r.hierarchy.is_some() || r.error.is_some());
        match hit {
            Some(r) => {
                let mut r = r.clone();
                finish(&mut r, &inst, options.timing);
                records.push(r);
                cached += 1;
            }
            None => todo.push((key, graph.clone(), inst)),
        }
    }

    let computed = todo.len();
    let fresh: Result<Vec<ReportRecord>, CacheError> = std::thread::scope(|scope| {
        let (tx, rx) = mpsc::channel::<ReportRecord>();
        let writer = scope.spawn(move || -> Result<Vec<ReportRecord>, CacheError> {
            let mut out = Vec::new();
            for record in rx {
                if let Some(c) = cache.as_mut() {
                    c.append(&record)?;
                }
                out.push(record);
            }
            Ok(out)
        });
        pool.install(|| {
            todo.par_iter().for_each_with(tx, |tx, (key, graph, inst)| {
                let start = Instant::now();
                let mut r = analyze_graph(graph, key.clone(), inst.family.clone(), &options.checks);
                r.timing_ms = Some(start.elapsed().as_millis() as u64);
                // a closed channel means the writer failed; its error is reported below
                let _ = tx.send(r);
            });
        });
        writer.join().expect("cache writer panicked")
    });

    let by_key: std::collections::HashMap<&str, &Instance> =
        todo.iter().map(|(k, _, inst)| (k.as_str(), inst)).collect();
    for mut r in fresh? {
        let inst = by_key[r.key.as_str()];
        finish(&mut r, inst, options.timing);
        records.push(r);
    }
    records.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(SweepOutcome { records, computed, cached, discarded_bytes })
}

fn finish(r: &mut ReportRecord, inst: &Instance, timing: bool) {
    r.family = inst.family.clone();
    if r.error.is_none() {
        r.apply_expectation(inst.expected);
    }
    if !timing {
        r.timing_ms = None;
    }
}
