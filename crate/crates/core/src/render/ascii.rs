use super::{check_shape, Alignment, RenderError, RenderSpec};
use crate::eca::EcaDiagram;
use crate::engine::Pyramid;
use crate::pattern::HighlightMask;

const LIT: char = '#';
const UNLIT: char = '.';

/// One line per generation, cells separated by a space. Centered output
/// indents generation `t` by `t` half-cells so each child sits between its
/// parents.
pub fn render_ascii(
    pyramid: &Pyramid,
    mask: Option<&HighlightMask>,
    spec: &RenderSpec,
) -> Result<String, RenderError> {
    check_shape(pyramid, mask)?;
    let glyphs_only = mask.is_some() && spec.blank_unmatched;
    let cell_width = if glyphs_only {
        1
    } else {
        pyramid
            .rows()
            .iter()
            .flat_map(|r| r.iter())
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
    };

    let mut out = String::new();
    for (t, row) in pyramid.rows().iter().enumerate() {
        let indent = match spec.alignment {
            Alignment::Centered => t * (cell_width + 1) / 2,
            Alignment::Left => 0,
        };
        out.extend(std::iter::repeat_n(' ', indent));
        for (i, &value) in row.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let lit = mask.and_then(|m| m.get(t, i));
            match lit {
                Some(true) => out.extend(std::iter::repeat_n(LIT, cell_width)),
                Some(false) if glyphs_only => out.push(UNLIT),
                _ => out.push_str(&format!("{value:>cell_width$}")),
            }
        }
        out.push('\n');
    }
    Ok(out)
}

/// `#` for 1, `.` for 0, no separators.
pub fn render_eca_ascii(diagram: &EcaDiagram) -> String {
    let mut out = String::with_capacity(diagram.height() * (diagram.width() + 1));
    for row in diagram.rows() {
        out.extend(row.iter().map(|&b| if b == 1 { LIT } else { UNLIT }));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eca::{eca_evolve, rule_table, Boundary};
    use crate::engine::{evolve, Row};
    use crate::pattern::{highlight_pyramid, Pattern};

    fn pyr(cells: &[u64]) -> Pyramid {
        evolve(&Row::new(cells.to_vec()).unwrap())
    }

    #[test]
    fn two_cells_centered() {
        let out = render_ascii(&pyr(&[2, 0]), None, &RenderSpec::default()).unwrap();
        assert_eq!(out, "2 0\n 2\n");
    }

    #[test]
    fn left_aligned() {
        let spec = RenderSpec::default().with_alignment(Alignment::Left);
        let out = render_ascii(&pyr(&[2, 0, 5]), None, &spec).unwrap();
        assert_eq!(out, "2 0 5\n2 5\n3\n");
    }

    #[test]
    fn multi_digit_cells_are_padded() {
        let out = render_ascii(&pyr(&[10, 2]), None, &RenderSpec::default()).unwrap();
        assert_eq!(out, "10  2\n  8\n");
    }

    #[test]
    fn masked_cells_use_glyph() {
        let p = pyr(&[1, 1]);
        let mask = highlight_pyramid(&p, &Pattern::new(vec![0]).unwrap());
        let out = render_ascii(&p, Some(&mask), &RenderSpec::default()).unwrap();
        assert_eq!(out, "1 1\n #\n");
        let blank = RenderSpec::default().with_blank_unmatched(true);
        assert_eq!(render_ascii(&p, Some(&mask), &blank).unwrap(), ". .\n #\n");
    }

    #[test]
    fn eca_rows() {
        let d = eca_evolve(
            &Row::new(vec![0, 1, 0]).unwrap(),
            &rule_table(90).unwrap(),
            0,
            Boundary::ZeroPadded,
        )
        .unwrap();
        assert_eq!(render_eca_ascii(&d), ".#.\n");
    }
}
