use std::fmt::Write as _;
use std::fs;

use crate::campaign::CampaignResult;
use crate::config::{ExperimentConfig, LabError};

/// Most panels drawn in `gallery.svg`.
pub const MAX_PANELS: usize = 50;

/// Outlines drawn in one gallery cell: typically `A`, `B` and `A + B`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Panel {
    pub title: String,
    pub shapes: Vec<Vec<[f64; 2]>>,
}

const CELL: f64 = 220.0;
const PAD: f64 = 14.0;
const COLUMNS: usize = 5;
const COLORS: [&str; 3] = ["#1f5fbf", "#c0392b", "#555555"];

fn draw_panel(svg: &mut String, panel: &Panel, col: usize, row: usize) {
    let pts = panel.shapes.iter().flatten();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in pts {
        x0 = x0.min(p[0]);
        y0 = y0.min(p[1]);
        x1 = x1.max(p[0]);
        y1 = y1.max(p[1]);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let scale = (CELL - 2.0 * PAD) / span;
    let (ox, oy) = (col as f64 * CELL, row as f64 * CELL);
    let _ = writeln!(
        svg,
        r##"<rect x="{ox:.1}" y="{oy:.1}" width="{CELL:.1}" height="{CELL:.1}" fill="none" stroke="#dddddd"/>"##
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" font-size="10" font-family="monospace">{}</text>"#,
        ox + 4.0,
        oy + 11.0,
        panel.title
    );
    for (i, shape) in panel.shapes.iter().enumerate() {
        let points: Vec<String> = shape
            .iter()
            .map(|p| {
                let x = ox + PAD + (p[0] - x0) * scale;
                let y = oy + CELL - PAD - (p[1] - y0) * scale;
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(
            svg,
            r#"<polygon points="{}" fill="none" stroke="{}" stroke-width="1"/>"#,
            points.join(" "),
            COLORS[i % COLORS.len()]
        );
    }
}

/// Gallery of at most [`MAX_PANELS`] panels, with fixed float formatting.
pub fn render_gallery(panels: &[&Panel]) -> String {
    let shown = &panels[..panels.len().min(MAX_PANELS)];
    let rows = shown.len().div_ceil(COLUMNS).max(1);
    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\">\n",
        COLUMNS as f64 * CELL,
        rows as f64 * CELL
    );
    for (i, p) in shown.iter().enumerate() {
        draw_panel(&mut svg, p, i % COLUMNS, i / COLUMNS);
    }
    svg.push_str("</svg>\n");
    svg
}

pub fn write_outputs(config: &ExperimentConfig, result: &CampaignResult) -> Result<(), LabError> {
    let dir = &config.output_dir;
    fs::create_dir_all(dir)?;

    let mut csv = csv::Writer::from_path(dir.join("reports.csv"))?;
    csv.write_record(&result.header)?;
    for o in &result.outcomes {
        csv.write_record(&o.row)?;
    }
    csv.flush()?;

    let records: Vec<&serde_json::Value> = result.outcomes.iter().map(|o| &o.record).collect();
    let json = serde_json::to_string_pretty(&records).expect("records serialize");
    fs::write(dir.join("verdicts.json"), json + "\n")?;

    let panels: Vec<&Panel> = result.outcomes.iter().filter_map(|o| o.panel.as_ref()).collect();
    fs::write(dir.join("gallery.svg"), render_gallery(&panels))?;

    let summary = serde_json::to_string_pretty(&result.summary).expect("summary serializes");
    fs::write(dir.join("summary.json"), summary + "\n")?;
    Ok(())
}
