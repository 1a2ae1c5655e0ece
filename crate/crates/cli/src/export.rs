//! Root scatter export: CSV rows or a deterministic SVG.

use std::fmt::Write;

use num_complex::Complex64;

use ehrhart_core::roots::{RootKind, RootSet, CSV_HEADER};

use crate::cache::CacheRecord;
use crate::Failure;

pub fn csv(records: &[&CacheRecord]) -> Result<String, Failure> {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for rec in records {
        for row in rec.root_set()?.csv_rows(&rec.graph_key, &rec.kind) {
            out.push_str(&row);
            out.push('\n');
        }
    }
    Ok(out)
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const PAD: f64 = 40.0;

/// Scatter of every root in the complex plane. The viewport is the data's
/// bounding box widened to whole units and always contains the origin.
pub fn svg(records: &[&CacheRecord], title: &str, half_line: bool) -> Result<String, Failure> {
    let mut points: Vec<(Complex64, bool)> = Vec::new();
    for rec in records {
        let rs: RootSet = rec.root_set()?;
        for r in &rs.roots {
            points.push((r.value, r.kind == RootKind::ExactInteger));
        }
    }
    let re_min = points.iter().map(|p| p.0.re).fold(-1.0, f64::min).floor() - 1.0;
    let re_max = points.iter().map(|p| p.0.re).fold(0.0, f64::max).ceil() + 1.0;
    let im_max = points.iter().map(|p| p.0.im.abs()).fold(0.0, f64::max).ceil() + 1.0;
    let sx = (WIDTH - 2.0 * PAD) / (re_max - re_min);
    let sy = (HEIGHT - 2.0 * PAD) / (2.0 * im_max);
    let x = |re: f64| PAD + (re - re_min) * sx;
    let y = |im: f64| HEIGHT / 2.0 - im * sy;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(s, r#"<text x="{PAD}" y="24" font-family="sans-serif" font-size="14">{}</text>"#, escape(title));
    let line = |s: &mut String, x1: f64, y1: f64, x2: f64, y2: f64, style: &str| {
        let _ = writeln!(s, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" {style}/>"#);
    };
    line(&mut s, x(re_min), y(0.0), x(re_max), y(0.0), r#"stroke="black""#);
    line(&mut s, x(0.0), y(im_max), x(0.0), y(-im_max), r#"stroke="black""#);
    if half_line {
        line(&mut s, x(-0.5), y(im_max), x(-0.5), y(-im_max), r#"stroke="gray" stroke-dasharray="4 4""#);
    }
    for k in (re_min as i64)..=(re_max as i64) {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="10" text-anchor="middle">{k}</text>"#,
            x(k as f64),
            y(0.0) + 14.0
        );
    }
    for (z, integer) in &points {
        let colour = if *integer { "#d62728" } else { "#1f77b4" };
        let _ = writeln!(s, r#"<circle cx="{:.2}" cy="{:.2}" r="2.5" fill="{colour}"/>"#, x(z.re), y(z.im));
    }
    s.push_str("</svg>\n");
    Ok(s)
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
