use super::{check_time, grow_time, shrink_time, DiagramTrajectory, EventKind, TrajectoryEvent};
use crate::correspondences::DecoratedTableauPair;
use crate::partitions::YoungDiagram;
use crate::{Error, Result};

/// Number of left decorations whose cells are present at `t <= 0`, or right
/// decorations present at `t >= 0`.
fn present_count(pair: &DecoratedTableauPair, t: f64) -> usize {
    let theta = pair.theta();
    if t <= 0.0 {
        pair.left_decorations()
            .partition_point(|&d| grow_time(d, theta) <= t)
    } else {
        pair.right_decorations()
            .partition_point(|&d| shrink_time(d, theta) >= t)
    }
}

/// The Young diagram process of a decorated pair at time `t ∈ [-θ, θ]`.
pub fn diagram_at(pair: &DecoratedTableauPair, t: f64) -> Result<YoungDiagram> {
    check_time(t, pair.theta())?;
    let m = present_count(pair, t) as u32;
    Ok(if t <= 0.0 {
        pair.left().shape_of_prefix(m)
    } else {
        pair.right().shape_of_prefix(m)
    })
}

/// Line `i` (1-based) of the line ensemble: `λ_i(t) - i`.
pub fn line_at(pair: &DecoratedTableauPair, i: usize, t: f64) -> Result<i64> {
    if i == 0 {
        return Err(Error::InvalidParameter("line index starts at 1".into()));
    }
    let d = diagram_at(pair, t)?;
    Ok(d.row(i - 1) as i64 - i as i64)
}

/// Event list of the Young diagram process: a start at `-θ`, one growth per
/// left decoration and one shrink per right decoration.
pub fn full_trajectory(pair: &DecoratedTableauPair) -> DiagramTrajectory {
    let theta = pair.theta();
    let n = pair.size();
    let mut events = Vec::with_capacity(2 * n + 1);
    events.push(TrajectoryEvent {
        time: -theta,
        kind: EventKind::Start,
        diagram: YoungDiagram::empty(),
    });
    for (j, &d) in pair.left_decorations().iter().enumerate() {
        events.push(TrajectoryEvent {
            time: grow_time(d, theta),
            kind: EventKind::Grow,
            diagram: pair.left().shape_of_prefix(j as u32 + 1),
        });
    }
    for (j, &d) in pair.right_decorations().iter().enumerate().rev() {
        events.push(TrajectoryEvent {
            time: shrink_time(d, theta),
            kind: EventKind::Shrink,
            diagram: pair.right().shape_of_prefix(j as u32),
        });
    }
    DiagramTrajectory::from_events_unchecked(theta, events)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondences::{drs, PointConfiguration};
    use crate::partitions::StandardTableau;

    fn example_left() -> (StandardTableau, Vec<f64>) {
        (
            StandardTableau::new(vec![vec![1, 2, 4], vec![3, 5], vec![6]]).unwrap(),
            vec![0.02, 0.03, 0.05, 0.07, 0.11, 0.13],
        )
    }

    fn example_pair() -> DecoratedTableauPair {
        let (t, d) = example_left();
        DecoratedTableauPair::new(1.0, t.clone(), d, t, vec![0.1, 0.2, 0.3, 0.4, 0.5, 0.6]).unwrap()
    }

    #[test]
    fn endpoints_and_centre() {
        let pair = example_pair();
        assert!(diagram_at(&pair, -1.0).unwrap().is_empty());
        assert!(diagram_at(&pair, 1.0).unwrap().is_empty());
        assert_eq!(diagram_at(&pair, 0.0).unwrap().rows(), &[3, 2, 1]);
        assert!(diagram_at(&pair, 1.5).is_err());
        assert!(diagram_at(&pair, f64::NAN).is_err());
    }

    #[test]
    fn worked_tableau_at_early_time() {
        let pair = example_pair();
        assert_eq!(diagram_at(&pair, -1.0 + 0.06).unwrap().rows(), &[2, 1]);
    }

    #[test]
    fn lines() {
        let pair = example_pair();
        for i in 1..6 {
            assert_eq!(line_at(&pair, i, -1.0).unwrap(), -(i as i64));
        }
        assert_eq!(line_at(&pair, 5, 0.0).unwrap(), -5);
        assert_eq!(line_at(&pair, 1, 0.0).unwrap(), 2);
        assert!(line_at(&pair, 0, 0.0).is_err());
        let one = drs(&PointConfiguration::new(1.0, vec![(0.3, 0.6)]).unwrap());
        assert_eq!(line_at(&one, 1, 0.0).unwrap(), 0);
    }

    #[test]
    fn trajectory_events() {
        let empty = drs(&PointConfiguration::new(2.0, vec![]).unwrap());
        let tr = full_trajectory(&empty);
        assert_eq!(tr.events().len(), 1);
        assert_eq!(tr.events()[0].time, -2.0);

        let (a, b) = (0.3, 0.6);
        let one = drs(&PointConfiguration::new(1.0, vec![(a, b)]).unwrap());
        let tr = full_trajectory(&one);
        let times: Vec<f64> = tr.events().iter().skip(1).map(|e| e.time).collect();
        assert_eq!(times, vec![b - 1.0, 1.0 - a]);
        assert_eq!(full_trajectory(&example_pair()).change_count(), 12);
    }

    #[test]
    fn shrinking_cell_present_at_event_time() {
        let one = drs(&PointConfiguration::new(1.0, vec![(0.3, 0.6)]).unwrap());
        assert_eq!(diagram_at(&one, 1.0 - 0.3).unwrap().size(), 1);
        assert_eq!(diagram_at(&one, 0.6 - 1.0).unwrap().size(), 1);
        assert_eq!(diagram_at(&one, 0.6 - 1.0 - 1e-9).unwrap().size(), 0);
    }
}
