use std::fmt::Write as _;

use hodokit::trajectory::HodographSample;
use serde::{Deserialize, Serialize};

pub const CSV_HEADER: &str = "theta,u0,ux,uy,uz,ur,utheta,r,x,y,tau,t,energy_residual,norm_residual";

/// Flat sample record; the JSON form of one CSV row.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampleRow {
    pub theta: f64,
    pub u0: f64,
    pub ux: f64,
    pub uy: f64,
    pub uz: f64,
    pub ur: f64,
    pub utheta: f64,
    pub r: f64,
    pub x: f64,
    pub y: f64,
    pub tau: f64,
    pub t: f64,
    pub energy_residual: f64,
    pub norm_residual: f64,
}

impl From<&HodographSample> for SampleRow {
    fn from(s: &HodographSample) -> Self {
        let [u0, ux, uy, uz] = s.u.to_array();
        SampleRow {
            theta: s.theta,
            u0,
            ux,
            uy,
            uz,
            ur: s.u_r,
            utheta: s.u_theta,
            r: s.r,
            x: s.x,
            y: s.y,
            tau: s.tau,
            t: s.t,
            energy_residual: s.energy_residual,
            norm_residual: s.norm_residual,
        }
    }
}

impl SampleRow {
    fn values(&self) -> [f64; 14] {
        [
            self.theta,
            self.u0,
            self.ux,
            self.uy,
            self.uz,
            self.ur,
            self.utheta,
            self.r,
            self.x,
            self.y,
            self.tau,
            self.t,
            self.energy_residual,
            self.norm_residual,
        ]
    }
}

/// 15 significant digits in scientific notation.
pub fn num(x: f64) -> String {
    format!("{x:.14e}")
}

pub fn samples_csv(rows: &[SampleRow]) -> String {
    let mut out = String::with_capacity(rows.len() * 14 * 22);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.values().iter().map(|&v| num(v)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn samples_json(rows: &[SampleRow]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("plain data serializes");
    s.push('\n');
    s
}

fn coord(x: f64) -> String {
    format!("{x:.11e}")
}

fn panel(out: &mut String, title: &str, offset: f64, pts: &[(f64, f64)]) {
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for &(x, y) in pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let pad = 0.05 * (x1 - x0).max(y1 - y0).max(1e-12);
    let (x0, x1, y0, y1) = (x0 - pad, x1 + pad, y0 - pad, y1 + pad);
    // y grows upward in the plot, downward in SVG
    let _ = writeln!(
        out,
        "<svg x=\"{offset}\" y=\"0\" width=\"400\" height=\"400\" viewBox=\"{} {} {} {}\">",
        coord(x0),
        coord(-y1),
        coord(x1 - x0),
        coord(y1 - y0)
    );
    let _ = writeln!(out, "<title>{title}</title>");
    let stroke = coord(0.002 * (x1 - x0).max(y1 - y0));
    let _ = writeln!(
        out,
        "<line x1=\"{}\" y1=\"0\" x2=\"{}\" y2=\"0\" stroke=\"black\" stroke-width=\"{stroke}\"/>",
        coord(x0),
        coord(x1)
    );
    let _ = writeln!(
        out,
        "<line x1=\"0\" y1=\"{}\" x2=\"0\" y2=\"{}\" stroke=\"black\" stroke-width=\"{stroke}\"/>",
        coord(-y1),
        coord(-y0)
    );
    let points: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", coord(x), coord(-y))).collect();
    let _ = writeln!(
        out,
        "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"{stroke}\" points=\"{}\"/>",
        points.join(" ")
    );
    out.push_str("</svg>\n");
}

/// Hodograph projection `(u_x, u_y)` on the left, orbit `(x, y)` on the right.
pub fn samples_svg(rows: &[SampleRow]) -> String {
    let mut out = String::new();
    out.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\">\n");
    let hodo: Vec<(f64, f64)> = rows.iter().map(|r| (r.ux, r.uy)).collect();
    let orbit: Vec<(f64, f64)> = rows.iter().map(|r| (r.x, r.y)).collect();
    panel(&mut out, "hodograph u_x-u_y", 0.0, &hodo);
    panel(&mut out, "orbit x-y", 400.0, &orbit);
    out.push_str("</svg>\n");
    out
}
