//! SVG plots of success frequency against `p`.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::sweep::{h1_threshold, pi1_threshold};

#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    /// Only rows with this check; all checks when `None`.
    pub check: Option<String>,
    pub width: u32,
    pub height: u32,
    pub title: String,
}

impl Default for PlotSpec {
    fn default() -> Self {
        PlotSpec { check: None, width: 720, height: 440, title: "success frequency".into() }
    }
}

const MARGIN: f64 = 56.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

/// Series key: `(check, n)`; points `p -> (successes, trials)`.
type Series = BTreeMap<(String, u32), BTreeMap<u64, (f64, u64, u64)>>;

fn read_series(csv_text: &str, spec: &PlotSpec) -> Result<Series> {
    let mut r = csv::Reader::from_reader(csv_text.as_bytes());
    let headers = r.headers().map_err(|e| Error::Io(e.to_string()))?.clone();
    let col = |name: &str| {
        headers.iter().position(|h| h == name).ok_or_else(|| Error::MissingColumn(name.to_string()))
    };
    let (cn, cp, cc, co) = (col("n")?, col("p")?, col("check")?, col("outcome")?);
    let mut series = Series::new();
    let mut rows = 0;
    for rec in r.records() {
        let rec = rec.map_err(|e| Error::Io(e.to_string()))?;
        rows += 1;
        let check = rec.get(cc).unwrap_or_default().to_string();
        if spec.check.as_ref().is_some_and(|c| *c != check) {
            continue;
        }
        let bad = |what: &str| Error::Parse { line: rows + 1, msg: format!("bad {what}") };
        let n: u32 = rec.get(cn).unwrap_or_default().parse().map_err(|_| bad("n"))?;
        let p: f64 = rec.get(cp).unwrap_or_default().parse().map_err(|_| bad("p"))?;
        let entry = series.entry((check, n)).or_default().entry(p.to_bits()).or_insert((p, 0, 0));
        entry.1 += (rec.get(co) == Some("true")) as u64;
        entry.2 += 1;
    }
    if rows == 0 || series.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(series)
}

/// Frequency-vs-`p` curves, one per `(check, n)`, with dashed guides at
/// `2 ln n / n` and `sqrt(3 ln n / n)` for each `n`.
pub fn plot_svg(csv_text: &str, spec: &PlotSpec) -> Result<String> {
    let series = read_series(csv_text, spec)?;
    let ns: Vec<u32> = {
        let mut v: Vec<u32> = series.keys().map(|k| k.1).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let pmax = series
        .values()
        .flat_map(|pts| pts.values().map(|v| v.0))
        .fold(0.0f64, f64::max);
    let xmax = if pmax > 0.0 { pmax * 1.05 } else { 1.0 };
    let (w, h) = (spec.width as f64, spec.height as f64);
    let x = |p: f64| MARGIN + (w - 2.0 * MARGIN) * p / xmax;
    let y = |f: f64| h - MARGIN - (h - 2.0 * MARGIN) * f;
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#, w, h, w, h);
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(s, r#"<text x="{}" y="24" font-size="15" text-anchor="middle">{}</text>"#, w / 2.0, escape(&spec.title));
    let _ = writeln!(
        s,
        r#"<path d="M{:.1} {:.1} L{:.1} {:.1} L{:.1} {:.1}" fill="none" stroke="black"/>"#,
        x(0.0), y(1.0), x(0.0), y(0.0), x(xmax), y(0.0)
    );
    for k in 0..=4 {
        let f = k as f64 / 4.0;
        let _ = writeln!(s, r#"<text x="{:.1}" y="{:.1}" font-size="11" text-anchor="end">{f}</text>"#, x(0.0) - 6.0, y(f) + 4.0);
        let p = xmax * f;
        let _ = writeln!(s, r#"<text x="{:.1}" y="{:.1}" font-size="11" text-anchor="middle">{p:.3}</text>"#, x(p), y(0.0) + 16.0);
    }
    let _ = writeln!(s, r##"<line class="half" x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="#999" stroke-dasharray="2 3"/>"##, x(0.0), y(0.5), x(xmax), y(0.5));
    let _ = writeln!(s, r#"<text x="{:.1}" y="{:.1}" font-size="12" text-anchor="middle">p (guides: 2 ln n / n, sqrt(3 ln n / n), natural log)</text>"#, w / 2.0, h - 12.0);
    for (i, &n) in ns.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        for (g, label) in [(h1_threshold(n), "2ln n/n"), (pi1_threshold(n), "sqrt(3ln n/n)")] {
            if g <= xmax {
                let _ = writeln!(
                    s,
                    r#"<line class="guide" x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="{color}" stroke-dasharray="6 4"><title>n={n}: {label}</title></line>"#,
                    x(g), y(0.0), x(g), y(1.0)
                );
            }
        }
    }
    for (j, ((check, n), pts)) in series.iter().enumerate() {
        let ci = ns.binary_search(n).unwrap_or(0);
        let color = COLORS[ci % COLORS.len()];
        let coords: Vec<(f64, f64)> =
            pts.values().map(|&(p, succ, tot)| (x(p), y(succ as f64 / tot as f64))).collect();
        let poly: Vec<String> = coords.iter().map(|(a, b)| format!("{a:.1},{b:.1}")).collect();
        let _ = writeln!(s, r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#, poly.join(" "));
        for (a, b) in &coords {
            let _ = writeln!(s, r#"<circle cx="{a:.1}" cy="{b:.1}" r="3" fill="{color}"/>"#);
        }
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" font-size="11" fill="{color}">{} n={n}</text>"#,
            w - MARGIN - 150.0,
            MARGIN + 14.0 * j as f64,
            escape(check)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEADER: &str = "n,p,trial,seed,f2,check,outcome,detail,ms\n";

    #[test]
    fn two_points_two_markers() {
        let csv = format!("{HEADER}20,0,0,1,0,sc_certify,false,x,\n20,1,0,1,1140,sc_certify,true,certified,\n");
        let svg = plot_svg(&csv, &PlotSpec::default()).unwrap();
        assert_eq!(svg.matches("<circle").count(), 2);
        assert!(svg.matches(r#"class="guide""#).count() >= 2);
    }

    #[test]
    fn empty_and_missing() {
        assert_eq!(plot_svg(HEADER, &PlotSpec::default()), Err(Error::EmptyInput));
        assert_eq!(plot_svg("n,p\n1,0.5\n", &PlotSpec::default()), Err(Error::MissingColumn("check".into())));
    }
}
