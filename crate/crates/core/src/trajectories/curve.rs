use super::{check_time, grow_time, shrink_time};
use crate::correspondences::{associated_permutation, insertion_shape, PointConfiguration};
use crate::partitions::YoungDiagram;
use crate::Result;

/// Shape of RS applied to the points inside the rectangle `[0, u(t)] × [0, v(t)]`
/// with `u = θ, v = θ + t` for `t <= 0` and `u = θ - t, v = θ` for `t >= 0`.
///
/// Rectangle membership is tested as `y - θ <= t` (resp. `θ - x >= t`), the
/// same expressions used for trajectory event times.
pub fn curve_process(config: &PointConfiguration, t: f64) -> Result<YoungDiagram> {
    let theta = config.theta();
    check_time(t, theta)?;
    let inside: Vec<(f64, f64)> = config
        .points()
        .iter()
        .copied()
        .filter(|&(x, y)| {
            if t <= 0.0 {
                grow_time(y, theta) <= t
            } else {
                shrink_time(x, theta) >= t
            }
        })
        .collect();
    let restricted = PointConfiguration::new(theta, inside).expect("subset of a valid configuration");
    let sigma = associated_permutation(&restricted);
    Ok(insertion_shape(sigma.one_line().iter().copied()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondences::{drs, rs};

    #[test]
    fn degenerate_and_full_rectangles() {
        let c = PointConfiguration::new(1.0, vec![(0.1, 0.7), (0.5, 0.2), (0.8, 0.9)]).unwrap();
        assert!(curve_process(&c, -1.0).unwrap().is_empty());
        assert!(curve_process(&c, 1.0).unwrap().is_empty());
        let (p, _) = rs(&associated_permutation(&c));
        assert_eq!(&curve_process(&c, 0.0).unwrap(), p.shape());
        assert!(curve_process(&c, 1.01).is_err());
    }

    #[test]
    fn agrees_with_trajectory_on_a_grid() {
        let c = PointConfiguration::new(
            1.0,
            vec![(0.1, 0.7), (0.5, 0.2), (0.8, 0.9), (0.3, 0.35), (0.65, 0.05)],
        )
        .unwrap();
        let pair = drs(&c);
        for s in 0..=40 {
            let t = -1.0 + s as f64 / 20.0;
            assert_eq!(curve_process(&c, t).unwrap(), super::super::diagram_at(&pair, t).unwrap());
        }
    }
}
