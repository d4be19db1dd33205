//! Sampling random mixed graphs and counting simple cliques, cliques and
//! graphs with `χₛ = 2`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decision::{decide_chi_s_two_with, is_clique, is_simple_clique_with};
use crate::families::{random_mixed_with, FamilyError};
use crate::graph::Colour;
use crate::par::Execution;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub m: Colour,
    pub n: Colour,
    pub order: usize,
    pub p: f64,
    pub samples: usize,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub simple_cliques: usize,
    pub cliques: usize,
    pub chi_s_two: usize,
}

impl ExperimentReport {
    pub const CSV_HEADER: &'static str = "m,n,v,p,samples,seed,simple_cliques,cliques,chi_s_two,simple_clique_fraction";

    pub fn simple_clique_fraction(&self) -> f64 {
        if self.config.samples == 0 {
            0.0
        } else {
            self.simple_cliques as f64 / self.config.samples as f64
        }
    }

    pub fn csv_row(&self) -> String {
        let c = &self.config;
        format!(
            "{},{},{},{},{},{},{},{},{},{:.4}",
            c.m,
            c.n,
            c.order,
            c.p,
            c.samples,
            c.seed,
            self.simple_cliques,
            self.cliques,
            self.chi_s_two,
            self.simple_clique_fraction()
        )
    }
}

/// The generator for sample `i`: stream `i` of the seeded ChaCha8 generator.
pub fn sample_rng(seed: u64, i: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    rng
}

/// Samples are independent substreams, so the counts do not depend on `exec`.
pub fn run_experiment(config: &ExperimentConfig, exec: Execution) -> Result<ExperimentReport, FamilyError> {
    // Validate parameters once, even when there are no samples.
    random_mixed_with(config.m, config.n, config.order, config.p, &mut sample_rng(config.seed, 0))?;
    let flags = exec.map_range(config.samples, |i| {
        let g = random_mixed_with(config.m, config.n, config.order, config.p, &mut sample_rng(config.seed, i))
            .expect("parameters validated");
        let simple = is_simple_clique_with(&g, Execution::Sequential);
        (simple, is_clique(&g), decide_chi_s_two_with(&g, Execution::Sequential).answer)
    });
    Ok(ExperimentReport {
        config: *config,
        simple_cliques: flags.iter().filter(|f| f.0).count(),
        cliques: flags.iter().filter(|f| f.1).count(),
        chi_s_two: flags.iter().filter(|f| f.2).count(),
    })
}
