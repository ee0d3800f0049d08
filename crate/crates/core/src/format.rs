//! Plain-text instance and hypergraph formats.
//!
//! Instance files hold one curve per line, `color;x,y x,y ...`, with each
//! coordinate written as an integer `p` or a fraction `p/q`. A line holding
//! only `---` separates the shape family (first) from the connector family
//! (second). Text after `#` is a comment. [`print_instance`] emits the
//! canonical form, and parsing canonical text and printing it again
//! reproduces it byte for byte.
//!
//! Hypergraph files hold one hyperedge per line as whitespace-separated
//! vertex ids.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::{Color, Curve, CurveFamily, Point, Rational};

/// A shape family and an optional connector family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub shapes: CurveFamily,
    pub connectors: Option<CurveFamily>,
}

impl Instance {
    pub fn shapes_only(shapes: CurveFamily) -> Self {
        Instance {
            shapes,
            connectors: None,
        }
    }

    pub fn with_connectors(shapes: CurveFamily, connectors: CurveFamily) -> Self {
        Instance {
            shapes,
            connectors: Some(connectors),
        }
    }
}

fn parse_rational(text: &str) -> std::result::Result<Rational, String> {
    let valid = |s: &str| {
        let digits = s.strip_prefix('-').unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    let ok = match text.split_once('/') {
        Some((p, q)) => valid(p) && !q.is_empty() && q.bytes().all(|b| b.is_ascii_digit()),
        None => valid(text),
    };
    if !ok {
        return Err(format!("malformed rational `{text}`"));
    }
    Rational::from_str(text).map_err(|_| format!("malformed rational `{text}`"))
}

pub fn parse_point(text: &str) -> std::result::Result<Point, String> {
    let (x, y) = text
        .split_once(',')
        .ok_or_else(|| format!("expected `x,y`, found `{text}`"))?;
    Ok(Point::new(parse_rational(x)?, parse_rational(y)?))
}

fn parse_curve(line: &str, line_no: usize) -> Result<Curve> {
    let (color, rest) = line
        .split_once(';')
        .ok_or_else(|| Error::parse(line_no, 1, "expected `color;` prefix"))?;
    let color = Color::from_str(color.trim()).map_err(|m| Error::parse(line_no, 1, m))?;
    let mut vertices = Vec::new();
    let base = color.name().len() + 2;
    let mut col = base;
    for token in rest.split(' ') {
        if token.is_empty() {
            col += 1;
            continue;
        }
        let p = parse_point(token).map_err(|m| Error::parse(line_no, col, m))?;
        vertices.push(p);
        col += token.len() + 1;
    }
    Curve::new(vertices, color).map_err(|e| Error::parse(line_no, base, e.to_string()))
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut families: Vec<Vec<Curve>> = vec![Vec::new()];
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim_end();
        if line.trim().is_empty() {
            continue;
        }
        if line.trim() == "---" {
            if families.len() == 2 {
                return Err(Error::parse(line_no, 1, "at most two families are allowed"));
            }
            families.push(Vec::new());
            continue;
        }
        families
            .last_mut()
            .unwrap()
            .push(parse_curve(line.trim_start(), line_no)?);
    }
    let mut it = families.into_iter();
    let shapes = CurveFamily::shapes(it.next().unwrap());
    let connectors = it.next().map(CurveFamily::connectors);
    Ok(Instance { shapes, connectors })
}

pub fn format_curve(c: &Curve) -> String {
    let mut s = String::new();
    s.push_str(c.color().name());
    s.push(';');
    for (i, p) in c.vertices().iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        write!(s, "{p}").unwrap();
    }
    s
}

pub fn print_instance(inst: &Instance) -> String {
    let mut out = String::new();
    for c in inst.shapes.iter() {
        out.push_str(&format_curve(c));
        out.push('\n');
    }
    if let Some(conn) = &inst.connectors {
        out.push_str("---\n");
        for c in conn.iter() {
            out.push_str(&format_curve(c));
            out.push('\n');
        }
    }
    out
}

/// Parses a hypergraph file into hyperedges of vertex ids.
pub fn parse_hyperedges(text: &str) -> Result<Vec<Vec<u32>>> {
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut edge = Vec::new();
        let mut col = 1;
        for token in line.split(' ') {
            if !token.trim().is_empty() {
                let v = token
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| Error::parse(idx + 1, col, format!("bad vertex id `{token}`")))?;
                edge.push(v);
            }
            col += token.len() + 1;
        }
        if !edge.is_empty() {
            edges.push(edge);
        }
    }
    Ok(edges)
}

pub fn print_hyperedges<'a>(edges: impl IntoIterator<Item = &'a Vec<u32>>) -> String {
    let mut out = String::new();
    for e in edges {
        let line: Vec<String> = e.iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const SAMPLE: &str = "red;0,0 2,0\nblue;1,-1 1/2,1\n---\nneutral;-3/4,5 7,5 7,6\n";

    #[test]
    fn canonical_text_round_trips() {
        let inst = parse_instance(SAMPLE).unwrap();
        assert_eq!(inst.shapes.len(), 2);
        assert_eq!(inst.connectors.as_ref().unwrap().len(), 1);
        assert_eq!(print_instance(&inst), SAMPLE);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# header\n\nred;0,0 1,0 # trailing\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(print_instance(&inst), "red;0,0 1,0\n");
        assert!(inst.connectors.is_none());
    }

    #[test]
    fn empty_connector_family_survives() {
        let text = "red;0,0 1,0\n---\n";
        assert_eq!(print_instance(&parse_instance(text).unwrap()), text);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_instance("red;0,0 1,0\nblue;0,0 x,1\n") {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(column, 10);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_instance("green;0,0 1,1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(parse_instance("red;0,0 1/0,1").is_err());
        assert!(parse_instance("red;0,0").is_err());
    }

    #[test]
    fn hyperedge_file() {
        let edges = parse_hyperedges("1 2 3\n# c\n\n4\n").unwrap();
        assert_eq!(edges, vec![vec![1, 2, 3], vec![4]]);
        assert_eq!(print_hyperedges(&edges), "1 2 3\n4\n");
        assert!(parse_hyperedges("1 a").is_err());
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(
            coords in prop::collection::vec((-50i64..50, 1i64..7, -50i64..50, 1i64..7), 1..6)
        ) {
            // Each curve is a two-point segment with distinct rational endpoints.
            let mut curves = Vec::new();
            for (i, (xn, xd, yn, yd)) in coords.iter().enumerate() {
                let a = Point::new(Rational::new((*xn).into(), (*xd).into()), Rational::new((*yn).into(), (*yd).into()));
                let b = Point::new(&a.x + Rational::from_integer(1.into()), a.y.clone());
                let color = [Color::Red, Color::Blue, Color::Neutral][i % 3];
                curves.push(Curve::segment(a, b, color).unwrap());
            }
            let split = curves.len() / 2;
            let conn = curves.split_off(split);
            let inst = Instance::with_connectors(CurveFamily::shapes(curves), CurveFamily::connectors(conn));
            let text = print_instance(&inst);
            let back = parse_instance(&text).unwrap();
            prop_assert_eq!(&back, &inst);
            prop_assert_eq!(print_instance(&back), text);
        }
    }
}
