//! Arc diagrams for link patterns: vertices on a line, one arc per
//! consecutive pair in a block.

use std::fmt::Write;

use springer_core::LinkPattern;

const UNIT: f64 = 40.0;
const MARGIN: f64 = 20.0;

/// Text rendering. Arcs are stacked so that an arc sits above every arc
/// whose span overlaps and is shorter.
pub fn ascii(pattern: &LinkPattern) -> String {
    let n = pattern.n();
    if n == 0 {
        return String::from("(empty)\n");
    }
    let cell = n.to_string().len() + 2;
    let anchor = |i: usize| (i - 1) * cell + 1;
    let width = n * cell;

    let mut arcs = pattern.arcs();
    arcs.sort_by_key(|&(a, b)| (b - a, a));
    let mut levels: Vec<usize> = Vec::with_capacity(arcs.len());
    for (k, &(a, b)) in arcs.iter().enumerate() {
        let below = arcs[..k]
            .iter()
            .zip(&levels)
            .filter(|(&(c, d), _)| c <= b && a <= d)
            .map(|(_, &l)| l)
            .max()
            .unwrap_or(0);
        levels.push(below + 1);
    }
    let height = levels.iter().copied().max().unwrap_or(0);

    let mut grid = vec![vec![' '; width]; height];
    for (&(a, b), &level) in arcs.iter().zip(&levels) {
        let top = height - level;
        let (x1, x2) = (anchor(a), anchor(b));
        for cell in &mut grid[top][x1 + 1..x2] {
            if *cell == ' ' {
                *cell = '-';
            }
        }
        grid[top][x1] = '+';
        grid[top][x2] = '+';
        for row in grid.iter_mut().skip(top + 1) {
            for x in [x1, x2] {
                row[x] = match row[x] {
                    '-' => '|',
                    ' ' => '|',
                    other => other,
                };
            }
        }
    }

    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let mut labels = vec![' '; width];
    for i in 1..=n {
        for (k, ch) in i.to_string().chars().enumerate() {
            labels[anchor(i) + k] = ch;
        }
    }
    out.push_str(labels.iter().collect::<String>().trim_end());
    out.push('\n');
    out
}

/// Standalone SVG 1.1 document. The arc from `pred(i)` to `i` is a
/// semicircle of radius `(i - pred(i)) * unit / 2`.
pub fn svg(pattern: &LinkPattern, stroke_width: f64) -> String {
    let n = pattern.n();
    let max_span = pattern.arcs().iter().map(|&(a, b)| b - a).max().unwrap_or(0);
    let radius_max = max_span as f64 * UNIT / 2.0;
    let width = (n.max(1) + 1) as f64 * UNIT;
    let baseline = MARGIN + radius_max;
    let height = baseline + MARGIN + 16.0;
    let x = |i: usize| i as f64 * UNIT;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"  <title>{pattern}</title>"#);
    let _ = writeln!(
        out,
        r#"  <g fill="none" stroke="black" stroke-width="{stroke_width}">"#
    );
    for (a, b) in pattern.arcs() {
        let r = (b - a) as f64 * UNIT / 2.0;
        let _ = writeln!(
            out,
            r#"    <path d="M {} {baseline} A {r} {r} 0 0 1 {} {baseline}"/>"#,
            x(a),
            x(b)
        );
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, r#"  <g fill="black" font-family="monospace" font-size="12" text-anchor="middle">"#);
    for i in 1..=n {
        let _ = writeln!(out, r#"    <circle cx="{}" cy="{baseline}" r="3"/>"#, x(i));
        let _ = writeln!(out, r#"    <text x="{}" y="{}">{i}</text>"#, x(i), baseline + 16.0);
    }
    let _ = writeln!(out, "  </g>");
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> LinkPattern {
        s.parse().unwrap()
    }

    #[test]
    fn ascii_nested() {
        let text = ascii(&pat("1 4 | 2 3"));
        assert_eq!(text, " +--------+\n |  +--+  |\n 1  2  3  4\n");
    }

    #[test]
    fn ascii_without_arcs() {
        assert_eq!(ascii(&pat("1 | 2")), " 1  2\n");
    }

    #[test]
    fn svg_radii() {
        let doc = svg(&pat("1 2 5 | 3 4 | 6 7"), 1.5);
        assert!(doc.starts_with("<?xml"));
        assert!(doc.contains(r#"<path d="M 80 80 A 60 60 0 0 1 200 80"/>"#), "{doc}");
        assert_eq!(doc.matches("<path").count(), 4);
        assert_eq!(doc.matches("<circle").count(), 7);
    }
}
