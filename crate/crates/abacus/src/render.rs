use crate::AbacusConfig;

/// One row per level from `N` downwards in the display (top to bottom),
/// `b` for a bead and `.` for an empty position.
pub fn render(a: &AbacusConfig) -> String {
    let mut out = String::new();
    let header: Vec<String> = (0..a.runners).map(|r| r.to_string()).collect();
    out.push_str(&header.join(" "));
    out.push('\n');
    for lv in a.truncation..=a.max_level() {
        let row: Vec<&str> = (0..a.runners as i64)
            .map(|r| if a.beads.contains(&a.position(lv, r)) { "b" } else { "." })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Rows without header or spacing, e.g. `["bbbb", "..b."]`.
pub fn rows(a: &AbacusConfig) -> Vec<String> {
    (a.truncation..=a.max_level())
        .map(|lv| {
            (0..a.runners as i64)
                .map(|r| if a.beads.contains(&a.position(lv, r)) { 'b' } else { '.' })
                .collect()
        })
        .collect()
}
