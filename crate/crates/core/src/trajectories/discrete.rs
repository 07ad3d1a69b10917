use super::lattice::lattice_points_upto;
use super::{check_time, DiagramTrajectory, EventKind, TrajectoryEvent};
use crate::correspondences::SemistandardPair;
use crate::partitions::YoungDiagram;
use crate::{Error, Result};

fn check_bound(pair: &SemistandardPair, k: u32) -> Result<()> {
    if pair.bound() > k {
        return Err(Error::InvalidParameter(format!(
            "tableau bound {} exceeds lattice size {k}",
            pair.bound()
        )));
    }
    Ok(())
}

/// Lattice-discretized diagram process: cells with `entry·θ/k <= θ + t` on the
/// left branch and `entry·θ/k <= θ - t` on the right branch.
pub fn discrete_diagram_at(
    pair: &SemistandardPair,
    theta: f64,
    k: u32,
    t: f64,
) -> Result<YoungDiagram> {
    check_time(t, theta)?;
    check_bound(pair, k)?;
    Ok(if t <= 0.0 {
        pair.left().shape_of_prefix(lattice_points_upto(theta, k, theta + t))
    } else {
        pair.right().shape_of_prefix(lattice_points_upto(theta, k, theta - t))
    })
}

pub fn discrete_line_at(
    pair: &SemistandardPair,
    theta: f64,
    k: u32,
    i: usize,
    t: f64,
) -> Result<i64> {
    if i == 0 {
        return Err(Error::InvalidParameter("line index starts at 1".into()));
    }
    let d = discrete_diagram_at(pair, theta, k, t)?;
    Ok(d.row(i - 1) as i64 - i as i64)
}

/// Event list of the discretized process. Several boxes may appear or vanish
/// at one lattice time.
pub fn discrete_trajectory(pair: &SemistandardPair, theta: f64, k: u32) -> Result<DiagramTrajectory> {
    check_bound(pair, k)?;
    let step = theta / k as f64;
    let has = |rows: &[Vec<u32>], e: u32| rows.iter().flatten().any(|&v| v == e);
    let mut events = vec![TrajectoryEvent {
        time: -theta,
        kind: EventKind::Start,
        diagram: YoungDiagram::empty(),
    }];
    for e in 1..=k {
        if has(pair.left().rows(), e) {
            events.push(TrajectoryEvent {
                time: e as f64 * step - theta,
                kind: EventKind::Grow,
                diagram: pair.left().shape_of_prefix(e),
            });
        }
    }
    for e in (1..=k).rev() {
        if has(pair.right().rows(), e) {
            events.push(TrajectoryEvent {
                time: theta - e as f64 * step,
                kind: EventKind::Shrink,
                diagram: pair.right().shape_of_prefix(e - 1),
            });
        }
    }
    Ok(DiagramTrajectory::from_events_unchecked(theta, events))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondences::{rsk, LatticeConfiguration};
    use crate::partitions::SemistandardTableau;

    fn example_pair() -> SemistandardPair {
        let t = SemistandardTableau::new(vec![vec![1, 2, 2], vec![3, 4]], 4).unwrap();
        SemistandardPair::new(t.clone(), t).unwrap()
    }

    #[test]
    fn worked_semistandard_tableau() {
        let pair = example_pair();
        let theta = 1.0;
        assert_eq!(discrete_diagram_at(&pair, theta, 4, 0.0).unwrap().rows(), &[3, 2]);
        assert!(discrete_diagram_at(&pair, theta, 4, -theta).unwrap().is_empty());
        assert!(discrete_diagram_at(&pair, theta, 4, theta).unwrap().is_empty());
        let t = -theta + 2.0 * theta / 4.0;
        assert_eq!(discrete_diagram_at(&pair, theta, 4, t).unwrap().rows(), &[3]);
        assert!(discrete_diagram_at(&pair, theta, 3, 0.0).is_err());
    }

    #[test]
    fn trajectory_matches_pointwise_evaluation() {
        let m = LatticeConfiguration::new(1.5, 3, vec![vec![1, 0, 2], vec![0, 1, 1], vec![3, 0, 0]])
            .unwrap();
        let pair = rsk(&m);
        let tr = discrete_trajectory(&pair, 1.5, 3).unwrap();
        for s in 0..=60 {
            let t = -1.5 + s as f64 * 0.05 + 0.0123;
            if t > 1.5 {
                break;
            }
            assert_eq!(tr.value_at(t).unwrap(), &discrete_diagram_at(&pair, 1.5, 3, t).unwrap());
        }
        assert_eq!(discrete_line_at(&pair, 1.5, 3, 1, -1.5).unwrap(), -1);
    }
}
