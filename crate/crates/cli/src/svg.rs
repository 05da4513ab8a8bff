use std::fmt::Write;

use pfib_core::FibWord;

/// Pixels per unit cell.
const CELL: u32 = 20;
const MARGIN: u32 = 2;

/// Standalone SVG with one unit square per cell. Column `j` occupies
/// `x in [j, j+1]`; rows are stacked from the bottom edge.
pub fn render(w: &FibWord) -> String {
    let heights = w.digits();
    let cols = heights.len() as u32;
    let top = heights.iter().copied().max().unwrap_or(0) as u32;
    let width = cols * CELL + 2 * MARGIN;
    let height = top * CELL + 2 * MARGIN;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, "  <title>p={} word {w}</title>", w.p());
    let _ = writeln!(
        s,
        r##"  <g fill="#9ecae1" stroke="#08306b" stroke-width="1">"##
    );
    for (j, &h) in heights.iter().enumerate() {
        for i in 0..u32::from(h) {
            let x = MARGIN + j as u32 * CELL;
            let y = MARGIN + (top - 1 - i) * CELL;
            let _ = writeln!(
                s,
                r#"    <rect x="{x}" y="{y}" width="{CELL}" height="{CELL}"/>"#
            );
        }
    }
    s.push_str("  </g>\n</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_square_per_cell() {
        let w = FibWord::parse(3, "321").unwrap();
        let svg = render(&w);
        assert_eq!(svg.matches("<rect").count(), 6);
        assert!(svg.contains(r#"width="64" height="64""#));
        // lowest cell of the first column sits on the bottom row
        assert!(svg.contains(r#"<rect x="2" y="42""#));
    }

    #[test]
    fn empty_word_is_an_empty_drawing() {
        let svg = render(&FibWord::empty(2));
        assert_eq!(svg.matches("<rect").count(), 0);
    }
}
