//! JSON and CSV rendering.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use banach_core::ConstantEstimate;
use serde::Serialize;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
struct Document<'a, C: Serialize, R: Serialize> {
    tool_version: &'static str,
    config: &'a C,
    results: &'a [R],
}

/// `{tool_version, config, results}` as pretty JSON with a trailing newline.
pub fn json_document<C: Serialize, R: Serialize>(config: &C, results: &[R]) -> String {
    let doc = Document { tool_version: TOOL_VERSION, config, results };
    let mut s = serde_json::to_string_pretty(&doc).expect("report values serialize");
    s.push('\n');
    s
}

/// Sweep table: `t,value,theta_x,theta_y,grid_n`, 17 significant digits, LF endings.
pub fn sweep_csv(rows: &[(f64, ConstantEstimate)]) -> String {
    let mut s = String::from("t,value,theta_x,theta_y,grid_n\n");
    for (t, e) in rows {
        writeln!(s, "{:.16e},{:.16e},{:.16e},{:.16e},{}", t, e.value, e.witness.x.theta, e.witness.y.theta, e.grid_n)
            .expect("writing to a String");
    }
    s
}

/// Prints `text` and writes it to `out` when given.
pub fn emit(text: &str, out: Option<&Path>) -> std::io::Result<()> {
    print!("{text}");
    if let Some(path) = out {
        fs::write(path, text)?;
    }
    Ok(())
}
