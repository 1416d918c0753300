//! Measurement events, the exclusivity relation and scenario builders.
//!
//! An event `a,b|x,y` assigns outcomes to compatible tests. Tests are
//! namespaced by a copy index so that events from independent copies of an
//! experiment never share a test.

mod assignment;
mod builders;
mod json;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use assignment::{
    assignment_value, check_e, pr_box_assignment, product_assignment, Admissibility,
    ProbabilityAssignment, Weight, WeightRepr, REAL_SLACK,
};
pub use builders::{chsh_scenario, kcbs_scenario, product_scenario, single_event_scenario};
pub use json::{parse_assignment, parse_scenario, AssignmentJson, EventJson, ScenarioJson};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TestId {
    pub copy: u32,
    pub test: u32,
}

impl TestId {
    pub fn new(copy: u32, test: u32) -> Self {
        Self { copy, test }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Event {
    label: String,
    assignments: BTreeMap<TestId, u32>,
}

impl Event {
    pub fn new<I>(label: impl Into<String>, assignments: I) -> Result<Self>
    where
        I: IntoIterator<Item = (TestId, u32)>,
    {
        let label = label.into();
        let mut map = BTreeMap::new();
        for (t, outcome) in assignments {
            if map.insert(t, outcome).is_some() {
                return Err(Error::input(format!(
                    "event {label:?} assigns test {}:{} twice",
                    t.copy, t.test
                )));
            }
        }
        if map.is_empty() {
            return Err(Error::input(format!("event {label:?} has no assignments")));
        }
        Ok(Self {
            label,
            assignments: map,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn assignments(&self) -> &BTreeMap<TestId, u32> {
        &self.assignments
    }

    pub fn outcome(&self, test: TestId) -> Option<u32> {
        self.assignments.get(&test).copied()
    }

    pub fn copies(&self) -> impl Iterator<Item = u32> + '_ {
        let mut last = None;
        self.assignments.keys().filter_map(move |t| {
            if last == Some(t.copy) {
                return None;
            }
            last = Some(t.copy);
            Some(t.copy)
        })
    }

    /// Same event moved `offset` copies up.
    pub(crate) fn shifted(&self, offset: u32) -> Event {
        Event {
            label: self.label.clone(),
            assignments: self
                .assignments
                .iter()
                .map(|(t, &o)| (TestId::new(t.copy + offset, t.test), o))
                .collect(),
        }
    }
}

/// Two events are exclusive when some shared test has differing outcomes.
pub fn are_exclusive(e1: &Event, e2: &Event) -> bool {
    e1.assignments
        .iter()
        .any(|(t, &o)| e2.assignments.get(t).is_some_and(|&o2| o2 != o))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scenario {
    name: String,
    events: Vec<Event>,
}

impl Scenario {
    /// Build a scenario; labels and assignment patterns must be unique.
    pub fn new(name: impl Into<String>, events: Vec<Event>) -> Result<Self> {
        if events.is_empty() {
            return Err(Error::input("scenario has no events"));
        }
        let mut labels: Vec<&str> = events.iter().map(Event::label).collect();
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::input(format!("duplicate event label {:?}", w[0])));
        }
        let mut patterns: Vec<&BTreeMap<TestId, u32>> =
            events.iter().map(Event::assignments).collect();
        patterns.sort();
        if patterns.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input("two events have identical assignments"));
        }
        Ok(Self {
            name: name.into(),
            events,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub(crate) fn max_copy(&self) -> u32 {
        self.events
            .iter()
            .flat_map(|e| e.assignments.keys().map(|t| t.copy))
            .max()
            .unwrap_or(0)
    }

    /// One vertex per event in list order, labelled by the event.
    pub fn exclusivity_graph(&self) -> Graph {
        let n = self.events.len();
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if are_exclusive(&self.events[i], &self.events[j]) {
                    g.link(i, j);
                }
            }
        }
        g.set_labels_unchecked(Some(self.events.iter().map(|e| e.label.clone()).collect()));
        g
    }
}
