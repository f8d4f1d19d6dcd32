//! Plain aligned tables.

pub fn render(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut all: Vec<Vec<String>> = Vec::new();
    if !header.is_empty() {
        all.push(header.iter().map(|s| s.to_string()).collect());
    }
    all.extend(rows);
    let cols = all.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| all.iter().filter_map(|r| r.get(j)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &all {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, c)| format!("{c:>w$}", w = widths[j]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn key_values(pairs: &[(&str, String)]) -> String {
    let w = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs.iter().map(|(k, v)| format!("{k:<w$}  {v}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_aligned_columns() {
        let t = render(&["n", "a"], vec![vec!["1".into(), "-24".into()], vec!["10".into(), "5".into()]]);
        assert_eq!(t, " n    a\n 1  -24\n10    5\n");
        assert_eq!(key_values(&[("ab", "1".into()), ("c", "2".into())]), "ab  1\nc   2\n");
    }
}
