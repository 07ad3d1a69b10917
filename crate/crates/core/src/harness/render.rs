use serde::Serialize;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::trajectories::DiagramTrajectory;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Csv,
}

impl FromStr for RenderFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "svg" => Ok(RenderFormat::Svg),
            "csv" => Ok(RenderFormat::Csv),
            other => Err(Error::InvalidParameter(format!("unknown render format {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RenderSummary {
    pub theta: f64,
    pub lines_drawn: usize,
    /// Highest value reached by the top line (its value at `t = 0`).
    pub max_value: Option<i64>,
    pub non_intersecting: bool,
}

/// Step vertices `(t, value)` of line `i` (1-based) from `-θ` to `θ`.
fn line_vertices(tr: &DiagramTrajectory, i: usize) -> Vec<(f64, i64)> {
    let theta = tr.theta();
    let mut v = -(i as i64);
    let mut pts = vec![(-theta, v)];
    for c in tr.line_changes().into_iter().filter(|c| c.line == i) {
        pts.push((c.time, v));
        pts.push((c.time, c.value));
        v = c.value;
    }
    pts.push((theta, v));
    pts
}

fn line_count(tr: &DiagramTrajectory, top_lines: usize) -> usize {
    if top_lines == 0 {
        tr.peak().num_rows()
    } else {
        top_lines
    }
}

fn summarize(tr: &DiagramTrajectory, lines: usize) -> RenderSummary {
    let non_intersecting = tr.events().iter().all(|e| {
        (1..lines).all(|i| e.diagram.row(i - 1) as i64 - i as i64 > e.diagram.row(i) as i64 - i as i64 - 1)
    });
    RenderSummary {
        theta: tr.theta(),
        lines_drawn: lines,
        max_value: (lines > 0).then(|| tr.peak().row(0) as i64 - 1),
        non_intersecting,
    }
}

pub fn render_svg(tr: &DiagramTrajectory, top_lines: usize) -> (String, RenderSummary) {
    const W: f64 = 960.0;
    const H: f64 = 600.0;
    const M: f64 = 48.0;
    let lines = line_count(tr, top_lines);
    let summary = summarize(tr, lines);
    let theta = tr.theta();
    let hi = summary.max_value.unwrap_or(0).max(1) as f64;
    let lo = -(lines.max(1) as f64);
    let x = |t: f64| M + (t + theta) / (2.0 * theta) * (W - 2.0 * M);
    let y = |v: f64| H - M - (v - lo) / (hi - lo) * (H - 2.0 * M);

    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#).unwrap();
    writeln!(s, r#"<rect x="0" y="0" width="{W}" height="{H}" fill="white"/>"#).unwrap();
    writeln!(s, r#"<g stroke="black" stroke-width="1" fill="none">"#).unwrap();
    writeln!(s, r#"<line x1="{M}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#, y(0.0), W - M, y(0.0)).unwrap();
    writeln!(s, r#"<line x1="{:.2}" y1="{M}" x2="{:.2}" y2="{:.2}" stroke-dasharray="4 4"/>"#, x(0.0), x(0.0), H - M).unwrap();
    writeln!(s, "</g>").unwrap();
    writeln!(s, r#"<g font-family="sans-serif" font-size="12" text-anchor="middle">"#).unwrap();
    for (t, label) in [(-theta, format!("-{theta}")), (0.0, "0".to_string()), (theta, format!("{theta}"))] {
        writeln!(s, r#"<text x="{:.2}" y="{:.2}">{label}</text>"#, x(t), H - M / 3.0).unwrap();
    }
    writeln!(s, "</g>").unwrap();
    writeln!(s, r#"<g stroke="steelblue" stroke-width="1" fill="none">"#).unwrap();
    for i in 1..=lines {
        let pts: Vec<String> = line_vertices(tr, i)
            .into_iter()
            .map(|(t, v)| format!("{:.2},{:.2}", x(t), y(v as f64)))
            .collect();
        writeln!(s, r#"<polyline points="{}"/>"#, pts.join(" ")).unwrap();
    }
    writeln!(s, "</g>\n</svg>").unwrap();
    (s, summary)
}

/// `line_index,event_time,new_value` rows for the selected lines.
pub fn render_csv(tr: &DiagramTrajectory, top_lines: usize) -> (String, RenderSummary) {
    let lines = line_count(tr, top_lines);
    let mut s = String::from("line_index,event_time,new_value\n");
    for c in tr.line_changes().into_iter().filter(|c| c.line <= lines) {
        writeln!(s, "{},{},{}", c.line, c.time, c.value).unwrap();
    }
    (s, summarize(tr, lines))
}

/// Writes the ensemble picture of `tr` to `out`. `top_lines = 0` selects
/// every line that moves.
pub fn render_ensemble(
    tr: &DiagramTrajectory,
    top_lines: usize,
    format: RenderFormat,
    out: &Path,
) -> Result<RenderSummary> {
    let (text, summary) = match format {
        RenderFormat::Svg => render_svg(tr, top_lines),
        RenderFormat::Csv => render_csv(tr, top_lines),
    };
    std::fs::write(out, text)?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondences::{drs, PointConfiguration};
    use crate::trajectories::full_trajectory;

    #[test]
    fn empty_trajectory_has_axes_only() {
        let tr = full_trajectory(&drs(&PointConfiguration::new(2.0, vec![]).unwrap()));
        let (svg, summary) = render_svg(&tr, 0);
        assert_eq!(svg.matches("<polyline").count(), 0);
        assert!(svg.contains("<line"));
        assert_eq!(summary.lines_drawn, 0);
        assert_eq!(summary.max_value, None);
    }

    #[test]
    fn csv_matches_trajectory_export() {
        let c = PointConfiguration::new(1.0, vec![(0.1, 0.7), (0.5, 0.2), (0.8, 0.9), (0.3, 0.35)]).unwrap();
        let tr = full_trajectory(&drs(&c));
        let (csv, summary) = render_csv(&tr, 0);
        assert_eq!(csv, tr.to_csv());
        assert!(summary.non_intersecting);
        assert_eq!(DiagramTrajectory::from_csv(&csv, 1.0).unwrap(), tr);
        let (svg, s) = render_svg(&tr, 0);
        assert_eq!(svg.matches("<polyline").count(), s.lines_drawn);
        assert_eq!(s.lines_drawn, tr.peak().num_rows());
    }

    #[test]
    fn formats() {
        assert_eq!("SVG".parse::<RenderFormat>().unwrap(), RenderFormat::Svg);
        assert!("png".parse::<RenderFormat>().is_err());
    }
}
