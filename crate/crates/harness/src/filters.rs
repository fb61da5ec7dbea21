//! Graph-class filters and the per-graph facts they are evaluated on.

use std::cell::OnceCell;
use std::fmt;

use serde::{Deserialize, Serialize};
use stabcds::invariants::{self, Claw};
use stabcds::Graph;

use crate::error::HarnessError;

/// Lazily computed invariants of one graph, shared by filters and checks.
pub struct Facts<'a> {
    pub graph: &'a Graph,
    connected: OnceCell<bool>,
    alpha: OnceCell<usize>,
    claw: OnceCell<Option<Claw>>,
    c5: OnceCell<bool>,
    c7: OnceCell<bool>,
}

impl<'a> Facts<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        Facts {
            graph,
            connected: OnceCell::new(),
            alpha: OnceCell::new(),
            claw: OnceCell::new(),
            c5: OnceCell::new(),
            c7: OnceCell::new(),
        }
    }

    pub fn connected(&self) -> bool {
        *self.connected.get_or_init(|| self.graph.is_connected())
    }

    pub fn alpha(&self) -> usize {
        *self
            .alpha
            .get_or_init(|| invariants::independence_number(self.graph))
    }

    pub fn claw_free(&self) -> bool {
        self.claw
            .get_or_init(|| invariants::find_claw(self.graph))
            .is_none()
    }

    /// Whether the graph has an induced cycle of length `k >= 4`.
    pub fn has_induced_cycle(&self, k: usize) -> bool {
        let find = || {
            invariants::find_induced_cycle(self.graph, k)
                .expect("filter cycle lengths are validated")
                .is_some()
        };
        match k {
            5 => *self.c5.get_or_init(find),
            7 => *self.c7.get_or_init(find),
            _ => find(),
        }
    }

    /// Connected, stability number 2, no induced C5.
    pub fn theorem1_class(&self) -> bool {
        self.connected() && self.alpha() == 2 && !self.has_induced_cycle(5)
    }

    /// Connected, claw-free, stability number 3, no induced C7.
    pub fn theorem2_class(&self) -> bool {
        self.connected() && self.alpha() == 3 && self.claw_free() && !self.has_induced_cycle(7)
    }

    /// Connected, stability number 3, no induced C7.
    pub fn quarter_class(&self) -> bool {
        self.connected() && self.alpha() == 3 && !self.has_induced_cycle(7)
    }

    /// Stability number at most 3, no induced C7.
    pub fn certificate_class(&self) -> bool {
        self.graph.order() > 0 && self.alpha() <= 3 && !self.has_induced_cycle(7)
    }
}

/// Class restrictions applied before any check. Unset fields do not filter.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Filters {
    pub connected: Option<bool>,
    pub alpha_eq: Option<usize>,
    pub alpha_le: Option<usize>,
    pub claw_free: Option<bool>,
    /// Lengths of induced cycles that must be absent.
    pub forbidden_cycles: Vec<usize>,
}

/// First filter a graph failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rejection {
    Connectivity,
    Alpha,
    Claw,
    InducedCycle(usize),
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::Connectivity => write!(f, "connectivity"),
            Rejection::Alpha => write!(f, "alpha"),
            Rejection::Claw => write!(f, "claw"),
            Rejection::InducedCycle(k) => write!(f, "induced_c{k}"),
        }
    }
}

impl Filters {
    /// Connected, stability number 2, no induced C5.
    pub fn theorem1_class() -> Self {
        Filters {
            connected: Some(true),
            alpha_eq: Some(2),
            forbidden_cycles: vec![5],
            ..Filters::default()
        }
    }

    /// Connected, claw-free, stability number 3, no induced C7.
    pub fn theorem2_class() -> Self {
        Filters {
            connected: Some(true),
            alpha_eq: Some(3),
            claw_free: Some(true),
            forbidden_cycles: vec![7],
            ..Filters::default()
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if let (Some(eq), Some(le)) = (self.alpha_eq, self.alpha_le) {
            if eq > le {
                return Err(HarnessError::InvalidSpec(format!(
                    "alpha_eq = {eq} contradicts alpha_le = {le}"
                )));
            }
        }
        if let Some(&k) = self.forbidden_cycles.iter().find(|&&k| k < 4) {
            return Err(HarnessError::InvalidSpec(format!(
                "forbidden induced cycle length {k} is below 4"
            )));
        }
        Ok(())
    }

    pub fn is_empty(&self) -> bool {
        *self == Filters::default()
    }

    /// Cheapest tests first.
    pub fn evaluate(&self, facts: &Facts<'_>) -> Result<(), Rejection> {
        if let Some(want) = self.connected {
            if facts.connected() != want {
                return Err(Rejection::Connectivity);
            }
        }
        if self.alpha_eq.is_some() || self.alpha_le.is_some() {
            let a = facts.alpha();
            if self.alpha_eq.is_some_and(|k| a != k) || self.alpha_le.is_some_and(|k| a > k) {
                return Err(Rejection::Alpha);
            }
        }
        if let Some(want) = self.claw_free {
            if facts.claw_free() != want {
                return Err(Rejection::Claw);
            }
        }
        for &k in &self.forbidden_cycles {
            if facts.has_induced_cycle(k) {
                return Err(Rejection::InducedCycle(k));
            }
        }
        Ok(())
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        self.evaluate(&Facts::new(g)).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn seven_cycle_is_filtered_by_forbidden_cycle() {
        let f = Filters {
            forbidden_cycles: vec![7],
            ..Filters::default()
        };
        assert_eq!(
            f.evaluate(&Facts::new(&cycle(7))),
            Err(Rejection::InducedCycle(7))
        );
        assert!(f.accepts(&cycle(6)));
    }

    #[test]
    fn theorem_classes() {
        assert!(Filters::theorem2_class().accepts(&cycle(6)));
        assert!(!Filters::theorem2_class().accepts(&cycle(7)));
        assert!(Filters::theorem1_class().accepts(&cycle(4)));
        assert_eq!(
            Filters::theorem1_class().evaluate(&Facts::new(&cycle(5))),
            Err(Rejection::InducedCycle(5))
        );
        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            Filters::theorem1_class().evaluate(&Facts::new(&two)),
            Err(Rejection::Connectivity)
        );
    }

    #[test]
    fn inconsistent_filters_rejected() {
        let f = Filters {
            alpha_eq: Some(3),
            alpha_le: Some(2),
            ..Filters::default()
        };
        assert!(f.validate().is_err());
        let f = Filters {
            forbidden_cycles: vec![3],
            ..Filters::default()
        };
        assert!(f.validate().is_err());
        assert!(Filters::theorem2_class().validate().is_ok());
    }
}
