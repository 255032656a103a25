//! Run reports and artifact writers. Outputs are deterministic: maps are
//! ordered, rationals render as reduced fractions with the sign on the
//! numerator, and the decimal forms are rendering-only companions.

use crate::geometry::RatPolytope;
use crate::rational::{decimal_string, fraction_string, Rat};
use num_traits::ToPrimitive;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Hard checks drive the exit code; soft rows are informational.
    pub hard: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub instance: String,
    pub checks: Vec<CheckResult>,
    pub values: BTreeMap<String, serde_json::Value>,
    pub artifacts: Vec<String>,
}

impl RunReport {
    pub fn new(command: impl Into<String>, instance: impl Into<String>) -> RunReport {
        RunReport {
            command: command.into(),
            instance: instance.into(),
            checks: vec![],
            values: BTreeMap::new(),
            artifacts: vec![],
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            passed,
            hard: true,
            detail: detail.into(),
        });
    }

    pub fn info(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            passed,
            hard: false,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, checks: Vec<CheckResult>) {
        self.checks.extend(checks);
    }

    pub fn value_rat(&mut self, key: impl Into<String>, r: &Rat) {
        self.values.insert(key.into(), rat_entry(r));
    }

    pub fn value_text(&mut self, key: impl Into<String>, text: impl Into<String>) {
        self.values
            .insert(key.into(), serde_json::Value::String(text.into()));
    }

    pub fn value_json(&mut self, key: impl Into<String>, v: serde_json::Value) {
        self.values.insert(key.into(), v);
    }

    /// Record an artifact by its path relative to the output directory, so
    /// reports are byte-identical across output locations.
    pub fn artifact(&mut self, rel: impl Into<String>) {
        self.artifacts.push(rel.into());
        self.artifacts.sort();
    }

    pub fn hard_failures(&self) -> usize {
        self.checks.iter().filter(|c| c.hard && !c.passed).count()
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.hard_failures() > 0)
    }

    pub fn print_summary(&self) {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let kind = if c.hard { "" } else { " (info)" };
            println!("{status}{kind}: {} — {}", c.name, c.detail);
        }
        let failures = self.hard_failures();
        if failures == 0 {
            println!("ok: {} checks, 0 hard failures", self.checks.len());
        } else {
            println!("FAILED: {failures} hard failures out of {} checks", self.checks.len());
        }
    }

    pub fn write(&self, out_dir: &Path) -> std::io::Result<PathBuf> {
        fs::create_dir_all(out_dir)?;
        let path = out_dir.join("report.json");
        let json = serde_json::to_string_pretty(self).expect("report serializes");
        fs::write(&path, json + "\n")?;
        Ok(path)
    }
}

/// `{"fraction": "p/q", "decimal": "0.5"}`.
pub fn rat_entry(r: &Rat) -> serde_json::Value {
    serde_json::json!({
        "fraction": fraction_string(r),
        "decimal": decimal_string(r),
    })
}

/// Write a CSV table; all cells are preformatted strings.
pub fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let mut f = fs::File::create(path)?;
    writeln!(f, "{}", header.join(","))?;
    for row in rows {
        writeln!(f, "{}", row.join(","))?;
    }
    Ok(())
}

/// Write a polytope as the interchange JSON object.
pub fn write_body_json(path: &Path, body: &RatPolytope) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let json = serde_json::to_string_pretty(&body.to_json()).expect("body serializes");
    fs::write(path, json + "\n")
}

/// Render nested bodies (ambient dimension one or two) to a small SVG.
/// Floating point appears here only to place coordinates on the canvas.
pub fn write_bodies_svg(path: &Path, bodies: &[(String, &RatPolytope)]) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    const W: f64 = 640.0;
    const PAD: f64 = 40.0;
    let palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    let mut dim = 1usize;
    for (_, b) in bodies {
        dim = dim.max(b.ambient_dim());
        for v in b.vertices() {
            for i in 0..b.ambient_dim() {
                let x = v.get(i).to_f64().unwrap_or(0.0);
                lo[i] = lo[i].min(x);
                hi[i] = hi[i].max(x);
            }
        }
    }
    if dim > 2 {
        return Err(std::io::Error::other("svg rendering supports dimension <= 2"));
    }
    for i in 0..2 {
        if !lo[i].is_finite() || hi[i] - lo[i] < 1e-9 {
            lo[i] = lo[i].min(0.0) - 0.5;
            hi[i] = hi[i].max(0.0) + 0.5;
        }
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]);
    let scale = (W - 2.0 * PAD) / span;
    let map = |x: f64, y: f64| -> (f64, f64) {
        (
            PAD + (x - lo[0]) * scale,
            W - PAD - (y - lo[1]) * scale,
        )
    };
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {W} {W}\">\n"
    ));
    svg.push_str(&format!(
        "<rect width=\"{W}\" height=\"{W}\" fill=\"white\"/>\n"
    ));
    for (idx, (label, body)) in bodies.iter().enumerate() {
        let color = palette[idx % palette.len()];
        if body.is_empty() {
            continue;
        }
        if body.ambient_dim() == 1 {
            let y = 0.15 * (idx as f64 + 1.0);
            let a = body.vertices().first().unwrap().get(0).to_f64().unwrap_or(0.0);
            let b = body.vertices().last().unwrap().get(0).to_f64().unwrap_or(0.0);
            let (x1, y1) = map(a, y);
            let (x2, _) = map(b, y);
            svg.push_str(&format!(
                "<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y1:.2}\" \
                 stroke=\"{color}\" stroke-width=\"4\"/>\n"
            ));
            svg.push_str(&format!(
                "<text x=\"{:.2}\" y=\"{:.2}\" fill=\"{color}\" font-size=\"14\">{label}</text>\n",
                x2 + 8.0,
                y1 + 4.0
            ));
        } else {
            let mut pts: Vec<(f64, f64)> = body
                .vertices()
                .iter()
                .map(|v| {
                    (
                        v.get(0).to_f64().unwrap_or(0.0),
                        v.get(1).to_f64().unwrap_or(0.0),
                    )
                })
                .collect();
            let cx = pts.iter().map(|p| p.0).sum::<f64>() / pts.len() as f64;
            let cy = pts.iter().map(|p| p.1).sum::<f64>() / pts.len() as f64;
            pts.sort_by(|a, b| {
                let aa = (a.1 - cy).atan2(a.0 - cx);
                let bb = (b.1 - cy).atan2(b.0 - cx);
                aa.partial_cmp(&bb).unwrap_or(std::cmp::Ordering::Equal)
            });
            let path_points: Vec<String> = pts
                .iter()
                .map(|(x, y)| {
                    let (px, py) = map(*x, *y);
                    format!("{px:.2},{py:.2}")
                })
                .collect();
            svg.push_str(&format!(
                "<polygon points=\"{}\" fill=\"{color}\" fill-opacity=\"0.15\" \
                 stroke=\"{color}\" stroke-width=\"2\"/>\n",
                path_points.join(" ")
            ));
            let (lx, ly) = map(cx, cy);
            svg.push_str(&format!(
                "<text x=\"{:.2}\" y=\"{:.2}\" fill=\"{color}\" font-size=\"14\">{label}</text>\n",
                lx,
                ly - 6.0 * idx as f64
            ));
        }
    }
    svg.push_str("</svg>\n");
    fs::write(path, svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::RatVec;
    use crate::rational::rat;

    #[test]
    fn report_exit_codes_follow_hard_checks() {
        let mut r = RunReport::new("verify", "test");
        r.check("a", true, "fine");
        r.info("b", false, "informational only");
        assert_eq!(r.exit_code(), 0);
        r.check("c", false, "broken");
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.hard_failures(), 1);
    }

    #[test]
    fn rational_rendering_in_reports() {
        let e = rat_entry(&rat(-4, 8));
        assert_eq!(e["fraction"], "-1/2");
        assert_eq!(e["decimal"], "-0.500000");
    }

    #[test]
    fn artifacts_write_deterministically() {
        let dir = tempfile::tempdir().unwrap();
        let mut r = RunReport::new("body", "test");
        r.value_rat("volume", &rat(1, 2));
        let p1 = r.write(dir.path()).unwrap();
        let first = std::fs::read_to_string(&p1).unwrap();
        let p2 = r.write(dir.path()).unwrap();
        assert_eq!(first, std::fs::read_to_string(&p2).unwrap());

        let body = RatPolytope::from_points(&[
            RatVec::from_ints(&[0, 0]),
            RatVec::from_ints(&[1, 0]),
            RatVec::from_ints(&[0, 1]),
        ])
        .unwrap();
        let svg_path = dir.path().join("plots/bodies.svg");
        write_bodies_svg(&svg_path, &[("simplex".to_string(), &body)]).unwrap();
        let svg = std::fs::read_to_string(&svg_path).unwrap();
        assert!(svg.contains("<polygon"));
        write_body_json(&dir.path().join("bodies/b.json"), &body).unwrap();
        let parsed: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(dir.path().join("bodies/b.json")).unwrap())
                .unwrap();
        assert_eq!(parsed["vertices"].as_array().unwrap().len(), 3);
        assert_eq!(parsed["vertices"][0][0][1], serde_json::json!(1));
    }
}
