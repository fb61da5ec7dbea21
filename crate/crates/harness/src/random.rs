//! Seeded `G(n, p)` sampling with rejection against [`Filters`].

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use stabcds::{Graph, MAX_VERTICES};

use crate::enumerate::pairs;
use crate::error::HarnessError;
use crate::filters::{Facts, Filters};

pub const DEFAULT_MAX_ATTEMPTS: u64 = 100_000;

/// Vertex count: a fixed order or an inclusive range drawn uniformly per
/// attempt.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Order {
    Fixed(usize),
    Range([usize; 2]),
}

impl Order {
    pub fn bounds(self) -> (usize, usize) {
        match self {
            Order::Fixed(n) => (n, n),
            Order::Range([lo, hi]) => (lo, hi),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomModel {
    pub n: Order,
    pub p: f64,
    pub samples: u64,
    pub seed: u64,
    /// Attempts allowed per accepted sample.
    #[serde(default = "default_max_attempts")]
    pub max_attempts: u64,
}

fn default_max_attempts() -> u64 {
    DEFAULT_MAX_ATTEMPTS
}

impl RandomModel {
    pub fn validate(&self) -> Result<(), HarnessError> {
        let (lo, hi) = self.n.bounds();
        if lo > hi || hi > MAX_VERTICES {
            return Err(HarnessError::InvalidSpec(format!(
                "random order range [{lo}, {hi}] must be nondecreasing and at most {MAX_VERTICES}"
            )));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(HarnessError::InvalidSpec(format!(
                "edge probability {} is outside [0, 1]",
                self.p
            )));
        }
        if self.max_attempts == 0 {
            return Err(HarnessError::InvalidSpec(
                "max_attempts must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SamplingStats {
    pub attempts: u64,
    pub accepted: u64,
    /// Rejected attempts keyed by the first filter they failed.
    pub rejected: BTreeMap<String, u64>,
}

impl SamplingStats {
    pub fn rejection_rate(&self) -> f64 {
        if self.attempts == 0 {
            0.0
        } else {
            (self.attempts - self.accepted) as f64 / self.attempts as f64
        }
    }
}

/// One raw `G(n, p)` draw; edges are decided in graph6 pair order.
pub fn sample_gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut rows = vec![0u64; n];
    for (i, j) in pairs(n) {
        if rng.gen_bool(p) {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
    }
    Graph::from_adjacency(rows).expect("sampled rows are symmetric")
}

/// Stream of accepted samples. Yields an error and stops once a single
/// sample uses up `max_attempts`.
pub struct RandomFiltered {
    model: RandomModel,
    filters: Filters,
    rng: ChaCha8Rng,
    stats: SamplingStats,
    done: bool,
}

impl RandomFiltered {
    pub fn stats(&self) -> &SamplingStats {
        &self.stats
    }

    pub fn into_stats(self) -> SamplingStats {
        self.stats
    }
}

impl Iterator for RandomFiltered {
    type Item = Result<Graph, HarnessError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done || self.stats.accepted == self.model.samples {
            return None;
        }
        let (lo, hi) = self.model.n.bounds();
        for _ in 0..self.model.max_attempts {
            self.stats.attempts += 1;
            let n = self.rng.gen_range(lo..=hi);
            let g = sample_gnp(&mut self.rng, n, self.model.p);
            match self.filters.evaluate(&Facts::new(&g)) {
                Ok(()) => {
                    self.stats.accepted += 1;
                    return Some(Ok(g));
                }
                Err(r) => *self.stats.rejected.entry(r.to_string()).or_default() += 1,
            }
        }
        self.done = true;
        Some(Err(HarnessError::AttemptsExhausted {
            attempts: self.model.max_attempts,
        }))
    }
}

pub fn random_filtered(
    model: &RandomModel,
    filters: &Filters,
) -> Result<RandomFiltered, HarnessError> {
    model.validate()?;
    filters.validate()?;
    Ok(RandomFiltered {
        rng: ChaCha8Rng::seed_from_u64(model.seed),
        model: model.clone(),
        filters: filters.clone(),
        stats: SamplingStats::default(),
        done: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(n: Order, p: f64, samples: u64) -> RandomModel {
        RandomModel {
            n,
            p,
            samples,
            seed: 7,
            max_attempts: 1000,
        }
    }

    #[test]
    fn same_seed_same_stream() {
        let m = model(Order::Fixed(8), 0.5, 20);
        let f = Filters {
            connected: Some(true),
            alpha_eq: Some(3),
            forbidden_cycles: vec![7],
            ..Filters::default()
        };
        let a: Vec<_> = random_filtered(&m, &f)
            .unwrap()
            .map(Result::unwrap)
            .collect();
        let b: Vec<_> = random_filtered(&m, &f)
            .unwrap()
            .map(Result::unwrap)
            .collect();
        assert_eq!(a.len(), 20);
        assert_eq!(a, b);
        assert!(a.iter().all(|g| f.accepts(g)));
    }

    #[test]
    fn impossible_filter_exhausts_attempts() {
        let m = model(Order::Fixed(3), 0.0, 1);
        let f = Filters {
            alpha_eq: Some(2),
            ..Filters::default()
        };
        let mut it = random_filtered(&m, &f).unwrap();
        assert!(matches!(
            it.next(),
            Some(Err(HarnessError::AttemptsExhausted { attempts: 1000 }))
        ));
        assert!(it.next().is_none());
        assert_eq!(it.stats().accepted, 0);
        assert_eq!(it.stats().rejected["alpha"], 1000);
    }

    #[test]
    fn unfiltered_stream_and_ranges() {
        let m = model(Order::Range([2, 5]), 0.3, 50);
        let mut it = random_filtered(&m, &Filters::default()).unwrap();
        let gs: Vec<_> = it.by_ref().map(Result::unwrap).collect();
        assert_eq!(gs.len(), 50);
        assert!(gs.iter().all(|g| (2..=5).contains(&g.order())));
        assert_eq!(it.stats().attempts, 50);
        assert_eq!(it.stats().rejection_rate(), 0.0);
        assert!(gs.iter().any(|g| g.order() == 2) && gs.iter().any(|g| g.order() == 5));
    }

    #[test]
    fn bad_models_rejected() {
        assert!(model(Order::Fixed(4), 1.5, 1).validate().is_err());
        assert!(model(Order::Range([5, 4]), 0.5, 1).validate().is_err());
        assert!(model(Order::Fixed(65), 0.5, 1).validate().is_err());
    }

    #[test]
    fn complete_and_edgeless_extremes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(sample_gnp(&mut rng, 6, 1.0), Graph::complete(6).unwrap());
        assert_eq!(sample_gnp(&mut rng, 6, 0.0).edge_count(), 0);
    }
}
