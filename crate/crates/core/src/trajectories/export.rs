//! Event-list trajectories and their JSON/CSV encodings.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

use super::check_time;
use crate::partitions::YoungDiagram;
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EventKind {
    Start,
    /// Takes effect at its time (inclusive).
    Grow,
    /// Takes effect just after its time.
    Shrink,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct TrajectoryEvent {
    pub time: f64,
    pub kind: EventKind,
    pub diagram: YoungDiagram,
}

impl TrajectoryEvent {
    fn applies_at(&self, t: f64) -> bool {
        match self.kind {
            EventKind::Start | EventKind::Grow => self.time <= t,
            EventKind::Shrink => self.time < t,
        }
    }
}

/// A piecewise-constant diagram path on `[-θ, θ]`, stored as events.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawTrajectory")]
pub struct DiagramTrajectory {
    theta: f64,
    events: Vec<TrajectoryEvent>,
}

#[derive(Deserialize)]
struct RawTrajectory {
    theta: f64,
    events: Vec<TrajectoryEvent>,
}

impl TryFrom<RawTrajectory> for DiagramTrajectory {
    type Error = Error;
    fn try_from(r: RawTrajectory) -> Result<Self> {
        DiagramTrajectory::new(r.theta, r.events)
    }
}

/// One row of the line-ensemble CSV.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct LineChange {
    pub line: usize,
    pub time: f64,
    pub value: i64,
}

impl DiagramTrajectory {
    pub fn new(theta: f64, events: Vec<TrajectoryEvent>) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidParameter(format!("trajectory: {m}")));
        if !(theta.is_finite() && theta > 0.0) {
            return bad("theta must be positive");
        }
        match events.first() {
            Some(e) if e.kind == EventKind::Start && e.time == -theta && e.diagram.is_empty() => {}
            _ => return bad("must begin with an empty start event at -theta"),
        }
        for w in events.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            check_time(b.time, theta)?;
            if b.time < a.time {
                return bad("event times must be sorted");
            }
            match b.kind {
                EventKind::Start => return bad("only the first event may be a start"),
                EventKind::Grow => {
                    if a.kind == EventKind::Shrink || b.time > 0.0 {
                        return bad("growth after shrinking or at positive time");
                    }
                    if !b.diagram.contains(&a.diagram) || b.diagram == a.diagram {
                        return bad("growth must add boxes");
                    }
                }
                EventKind::Shrink => {
                    if b.time < 0.0 {
                        return bad("shrinking at negative time");
                    }
                    if !a.diagram.contains(&b.diagram) || b.diagram == a.diagram {
                        return bad("shrink must remove boxes");
                    }
                }
            }
        }
        Ok(DiagramTrajectory { theta, events })
    }

    pub(crate) fn from_events_unchecked(theta: f64, events: Vec<TrajectoryEvent>) -> Self {
        debug_assert!(DiagramTrajectory::new(theta, events.clone()).is_ok());
        DiagramTrajectory { theta, events }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn events(&self) -> &[TrajectoryEvent] {
        &self.events
    }

    /// Number of events after the start.
    pub fn change_count(&self) -> usize {
        self.events.len() - 1
    }

    pub fn value_at(&self, t: f64) -> Result<&YoungDiagram> {
        check_time(t, self.theta)?;
        let idx = self.events.partition_point(|e| e.applies_at(t));
        Ok(&self.events[idx - 1].diagram)
    }

    /// The largest diagram reached (the value at `t = 0`).
    pub fn peak(&self) -> &YoungDiagram {
        self.events
            .iter()
            .map(|e| &e.diagram)
            .max_by_key(|d| d.size())
            .expect("start event")
    }

    /// Per-line changes `(line, time, new value)` in event order.
    pub fn line_changes(&self) -> Vec<LineChange> {
        let mut out = Vec::new();
        for w in self.events.windows(2) {
            let (prev, next) = (&w[0].diagram, &w[1].diagram);
            let rows = prev.num_rows().max(next.num_rows());
            for i in 0..rows {
                if prev.row(i) != next.row(i) {
                    out.push(LineChange {
                        line: i + 1,
                        time: w[1].time,
                        value: next.row(i) as i64 - (i as i64 + 1),
                    });
                }
            }
        }
        out
    }

    /// CSV with header `line_index,event_time,new_value`, step changes only.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("line_index,event_time,new_value\n");
        for c in self.line_changes() {
            writeln!(s, "{},{},{}", c.line, c.time, c.value).unwrap();
        }
        s
    }

    /// Rebuilds a trajectory from [`to_csv`](Self::to_csv) output. Consecutive
    /// rows sharing a time and direction form one event.
    pub fn from_csv(text: &str, theta: f64) -> Result<Self> {
        let parse_err = |line: usize, m: &str| Error::Parse(format!("csv line {line}: {m}"));
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, h)) if h.trim() == "line_index,event_time,new_value" => {}
            _ => return Err(parse_err(1, "missing header")),
        }
        let mut rows: Vec<u32> = Vec::new();
        let mut events = vec![TrajectoryEvent {
            time: -theta,
            kind: EventKind::Start,
            diagram: YoungDiagram::empty(),
        }];
        let mut pending: Option<(f64, EventKind)> = None;
        let flush = |rows: &Vec<u32>, pending: Option<(f64, EventKind)>, events: &mut Vec<TrajectoryEvent>| -> Result<()> {
            if let Some((time, kind)) = pending {
                events.push(TrajectoryEvent {
                    time,
                    kind,
                    diagram: YoungDiagram::new(rows.clone())?,
                });
            }
            Ok(())
        };
        for (no, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let f: Vec<&str> = line.split(',').map(str::trim).collect();
            if f.len() != 3 {
                return Err(parse_err(no + 1, "expected three fields"));
            }
            let idx: usize = f[0].parse().map_err(|_| parse_err(no + 1, "bad line_index"))?;
            let time: f64 = f[1].parse().map_err(|_| parse_err(no + 1, "bad event_time"))?;
            let value: i64 = f[2].parse().map_err(|_| parse_err(no + 1, "bad new_value"))?;
            if idx == 0 {
                return Err(parse_err(no + 1, "line_index starts at 1"));
            }
            let len = value + idx as i64;
            if len < 0 {
                return Err(parse_err(no + 1, "negative row length"));
            }
            if rows.len() < idx {
                rows.resize(idx, 0);
            }
            let kind = if len as u32 > rows[idx - 1] {
                EventKind::Grow
            } else {
                EventKind::Shrink
            };
            if pending != Some((time, kind)) {
                flush(&rows, pending, &mut events)?;
                pending = Some((time, kind));
            }
            rows[idx - 1] = len as u32;
        }
        flush(&rows, pending, &mut events)?;
        DiagramTrajectory::new(theta, events)
    }
}
