use serde_json::Value;
use sp4coh::cohomology::SymbolicCount;
use sp4coh::Rat;

/// Integers as JSON numbers when they fit in `i64`, anything else as a
/// `"p/q"` string.
pub fn rat_json(r: &Rat) -> Value {
    match r.to_i64() {
        Some(v) if r.is_integer() => Value::from(v),
        _ => Value::String(r.to_string()),
    }
}

pub fn count_json(c: &SymbolicCount) -> Value {
    serde_json::to_value(c).expect("counts serialize")
}

/// Renders with `z = 2 zeta`, the convention of the reference tables.
pub fn table_notation(c: &SymbolicCount) -> String {
    let Some(value) = c.resolved() else {
        let z = &c.zeta_coeff / &Rat::from(2);
        let mut out = if z == Rat::one() {
            "z".to_string()
        } else if z == -Rat::one() {
            "-z".to_string()
        } else {
            format!("{z}z")
        };
        if c.constant.is_negative() {
            out.push_str(&c.constant.to_string());
        } else if !c.constant.is_zero() {
            out.push_str(&format!("+{}", c.constant));
        }
        return out;
    };
    value.to_string()
}

/// Right-aligned columns separated by two spaces.
pub fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| rows.iter().filter_map(|r| r.get(j)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{}{s}", " ".repeat(w - s.chars().count())))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
