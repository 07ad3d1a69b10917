//! Counting points of the lattice `{θ/k, 2θ/k, …, θ}`.
//!
//! Positions are compared after scaling by `k/θ`; values within `1e-9` of an
//! integer snap to it so that lattice-exact inputs such as `θ + t` with
//! `t = -θ/2` are counted consistently by samplers and exact evaluators.

const SNAP: f64 = 1e-9;

/// `#{e ∈ 1..=k : e·θ/k <= x}`.
pub fn lattice_points_upto(theta: f64, k: u32, x: f64) -> u32 {
    if x <= 0.0 {
        return 0;
    }
    let v = x * k as f64 / theta;
    let r = v.round();
    let f = if (v - r).abs() <= SNAP * r.abs().max(1.0) { r } else { v.floor() };
    f.clamp(0.0, k as f64) as u32
}

/// `|L ∩ (x, y]|` for the lattice `L = {θ/k, …, θ}`; zero when `y <= x`.
pub fn lattice_count(theta: f64, k: u32, x: f64, y: f64) -> u32 {
    lattice_points_upto(theta, k, y).saturating_sub(lattice_points_upto(theta, k, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_open_counting() {
        assert_eq!(lattice_count(1.0, 4, 0.0, 1.0), 4);
        assert_eq!(lattice_count(1.0, 4, 0.0, 0.5), 2);
        assert_eq!(lattice_count(1.0, 4, 0.25, 0.5), 1);
        assert_eq!(lattice_count(1.0, 4, 0.26, 0.5), 1);
        assert_eq!(lattice_count(1.0, 4, 0.24, 0.5), 2);
        assert_eq!(lattice_count(1.0, 4, 0.5, 0.5), 0);
    }

    #[test]
    fn lattice_exact_inputs_snap() {
        // 0.1 * 30 is not exactly 3 in floating point
        assert_eq!(lattice_points_upto(1.0, 30, 0.1), 3);
        let theta = 0.7;
        for e in 0..=10u32 {
            let x = e as f64 * theta / 10.0;
            assert_eq!(lattice_points_upto(theta, 10, x), e);
        }
        assert_eq!(lattice_points_upto(0.5, 2, 0.5 - 0.25), 1);
    }
}
