use crate::partition::{Node, Partition};

/// Widest row drawn before truncating.
pub const MAX_COLUMNS: usize = 40;

/// Draws a Young diagram row by row, one `[..]` cell per node, with the
/// text of each cell produced by `label`. Labels are padded to a common
/// width.
pub fn diagram<F>(lambda: &Partition, label: F) -> String
where
    F: Fn(Node) -> String,
{
    if lambda.is_empty() {
        return "-\n".to_string();
    }
    let labels: Vec<Vec<String>> = (1..=lambda.len())
        .map(|i| {
            (1..=lambda.part(i).min(MAX_COLUMNS))
                .map(|j| label(Node::new(i, j)))
                .collect()
        })
        .collect();
    let width = labels.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    for (i, row) in labels.iter().enumerate() {
        for cell in row {
            out.push('[');
            out.push_str(&format!("{cell:>width$}"));
            out.push(']');
        }
        let hidden = lambda.part(i + 1).saturating_sub(MAX_COLUMNS);
        if hidden > 0 {
            out.push_str(&format!(" ... (+{hidden})"));
        }
        out.push('\n');
    }
    out
}

pub fn blank_diagram(lambda: &Partition) -> String {
    diagram(lambda, |_| " ".to_string())
}

/// Hook lengths as a right-aligned table; with `divisor`, entries it
/// divides are flagged with `*`.
pub fn hook_rows(rows: &[Vec<usize>], divisor: Option<usize>) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|row| row.iter().map(|&h| hook_cell(h, divisor)).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    if rows.is_empty() {
        out.push_str("-\n");
    }
    out
}

pub fn hook_cell(h: usize, divisor: Option<usize>) -> String {
    match divisor {
        Some(d) if h.is_multiple_of(d) => format!("{h}*"),
        Some(_) => format!("{h} "),
        None => h.to_string(),
    }
}
