//! Scenario and assignment JSON.
//!
//! ```json
//! {"name": "KCBS", "events": [{"label": "0,1|0,1", "copy": 0, "assignments": {"0": 0, "1": 1}}]}
//! ```
//!
//! Assignment keys are test identifiers inside the event's `copy`. Events
//! spanning several copies (product scenarios) use `"copy:test"` keys.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};

use super::assignment::WeightRepr;
use super::{Event, ProbabilityAssignment, Scenario, TestId, Weight};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioJson {
    pub name: String,
    pub events: Vec<EventJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventJson {
    pub label: String,
    #[serde(default)]
    pub copy: u32,
    #[serde(deserialize_with = "unique_keys")]
    pub assignments: BTreeMap<String, u32>,
}

/// Map deserialisation that rejects repeated keys instead of overwriting.
fn unique_keys<'de, D>(deserializer: D) -> std::result::Result<BTreeMap<String, u32>, D::Error>
where
    D: Deserializer<'de>,
{
    struct UniqueKeys;

    impl<'de> Visitor<'de> for UniqueKeys {
        type Value = BTreeMap<String, u32>;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("a map from test identifiers to outcomes")
        }

        fn visit_map<A: MapAccess<'de>>(
            self,
            mut access: A,
        ) -> std::result::Result<Self::Value, A::Error> {
            let mut out = BTreeMap::new();
            while let Some((k, v)) = access.next_entry::<String, u32>()? {
                if out.contains_key(&k) {
                    return Err(serde::de::Error::custom(format!("duplicate test id {k:?}")));
                }
                out.insert(k, v);
            }
            Ok(out)
        }
    }

    deserializer.deserialize_map(UniqueKeys)
}

impl From<&Event> for EventJson {
    fn from(e: &Event) -> Self {
        let copies: Vec<u32> = e.copies().collect();
        let (copy, assignments) = if copies.len() == 1 {
            (
                copies[0],
                e.assignments()
                    .iter()
                    .map(|(t, &o)| (t.test.to_string(), o))
                    .collect(),
            )
        } else {
            (
                0,
                e.assignments()
                    .iter()
                    .map(|(t, &o)| (format!("{}:{}", t.copy, t.test), o))
                    .collect(),
            )
        };
        EventJson {
            label: e.label().to_owned(),
            copy,
            assignments,
        }
    }
}

impl TryFrom<&EventJson> for Event {
    type Error = Error;

    fn try_from(json: &EventJson) -> Result<Event> {
        let bad = |k: &str| Error::input(format!("bad test id {k:?} in event {:?}", json.label));
        let mut pairs = Vec::with_capacity(json.assignments.len());
        for (key, &outcome) in &json.assignments {
            let id = match key.split_once(':') {
                Some((c, t)) => TestId::new(
                    c.trim().parse().map_err(|_| bad(key))?,
                    t.trim().parse().map_err(|_| bad(key))?,
                ),
                None => TestId::new(json.copy, key.trim().parse().map_err(|_| bad(key))?),
            };
            pairs.push((id, outcome));
        }
        Event::new(json.label.clone(), pairs)
    }
}

impl From<&Scenario> for ScenarioJson {
    fn from(s: &Scenario) -> Self {
        ScenarioJson {
            name: s.name().to_owned(),
            events: s.events().iter().map(EventJson::from).collect(),
        }
    }
}

impl TryFrom<&ScenarioJson> for Scenario {
    type Error = Error;

    fn try_from(json: &ScenarioJson) -> Result<Scenario> {
        let events = json
            .events
            .iter()
            .map(Event::try_from)
            .collect::<Result<Vec<_>>>()?;
        Scenario::new(json.name.clone(), events)
    }
}

impl Scenario {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ScenarioJson::from(self))
            .expect("scenario json is serializable")
    }
}

pub fn parse_scenario(text: &str) -> Result<Scenario> {
    let json: ScenarioJson = serde_json::from_str(text)?;
    Scenario::try_from(&json)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AssignmentJson {
    pub weights: Vec<WeightRepr>,
}

impl From<&ProbabilityAssignment> for AssignmentJson {
    fn from(a: &ProbabilityAssignment) -> Self {
        AssignmentJson {
            weights: a.weights().iter().map(WeightRepr::from).collect(),
        }
    }
}

impl ProbabilityAssignment {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&AssignmentJson::from(self)).expect("assignment json is serializable")
    }
}

/// Weights given as `"p/q"` or decimal strings are kept exact; bare JSON
/// numbers become floating-point weights.
pub fn parse_assignment(text: &str) -> Result<ProbabilityAssignment> {
    let json: AssignmentJson = serde_json::from_str(text)?;
    let weights = json
        .weights
        .iter()
        .map(Weight::try_from)
        .collect::<Result<Vec<_>>>()?;
    ProbabilityAssignment::new(weights)
}
