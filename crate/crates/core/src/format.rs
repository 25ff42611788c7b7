//! Text formats: a hand-writable edge list and graph6.
//!
//! Edge list: the first non-comment line holds the vertex count `n`, each
//! following line one `u v` pair. Anything after `#` on a line is ignored,
//! as are blank lines.
//!
//! graph6: the size header `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed six bits per byte, most significant first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::forest::Forest;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
    /// graph6 if the first line starts with a byte >= 63 and is not a list
    /// of whitespace-separated integers, otherwise edge list.
    Auto,
}

pub fn parse_forest(text: &[u8], format: Format) -> Result<Forest> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text),
        Format::Auto => match detect(text) {
            Format::Graph6 => parse_graph6(text),
            _ => parse_edge_list(text),
        },
    }
}

pub fn detect(text: &[u8]) -> Format {
    let first = text
        .split(|&b| b == b'\n')
        .map(|l| l.trim_ascii())
        .find(|l| !l.is_empty());
    let Some(line) = first else {
        return Format::EdgeList;
    };
    if line.starts_with(b">>graph6<<") {
        return Format::Graph6;
    }
    let numeric = line
        .split(|b| b.is_ascii_whitespace())
        .filter(|t| !t.is_empty())
        .all(|t| t.iter().all(u8::is_ascii_digit));
    if line[0] >= 63 && !numeric {
        Format::Graph6
    } else {
        Format::EdgeList
    }
}

pub fn parse_edge_list(text: &[u8]) -> Result<Forest> {
    let text = std::str::from_utf8(text).map_err(|e| Error::Malformed {
        line: 0,
        message: e.to_string(),
    })?;
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace().map(|t| {
            t.parse::<usize>().map_err(|_| Error::Malformed {
                line: lineno,
                message: format!("expected a natural number, found {t:?}"),
            })
        });
        let malformed = |message: &str| Error::Malformed {
            line: lineno,
            message: message.to_string(),
        };
        match n {
            None => {
                n = Some(fields.next().transpose()?.expect("nonempty line"));
                if fields.next().is_some() {
                    return Err(malformed("header must contain only the vertex count"));
                }
            }
            Some(_) => {
                let u = fields.next().transpose()?.expect("nonempty line");
                let v = fields
                    .next()
                    .transpose()?
                    .ok_or_else(|| malformed("edge needs two endpoints"))?;
                if fields.next().is_some() {
                    return Err(malformed("edge has more than two endpoints"));
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or_else(|| Error::Malformed {
        line: 0,
        message: "missing vertex count".into(),
    })?;
    Forest::from_edges(n, edges)
}

pub fn to_edge_list(f: &Forest) -> String {
    let mut out = format!("{}\n", f.vertex_count());
    for (u, v) in f.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes the first graph6 record in `text`. An optional `>>graph6<<`
/// header is skipped.
pub fn parse_graph6(text: &[u8]) -> Result<Forest> {
    let line = text
        .split(|&b| b == b'\n')
        .map(|l| l.trim_ascii())
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::Malformed {
            line: 1,
            message: "empty graph6 input".into(),
        })?;
    let line = line.strip_prefix(b">>graph6<<").unwrap_or(line);
    let (n, edges) = decode_graph6(line)?;
    Forest::from_edges(n, edges)
}

/// Raw graph6 decoding without the acyclicity check.
pub fn decode_graph6(bytes: &[u8]) -> Result<(usize, Vec<(usize, usize)>)> {
    let malformed = |message: String| Error::Malformed { line: 1, message };
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!(
            "byte {b} outside the graph6 range 63..=126"
        )));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = match bytes {
        [] => return Err(malformed("missing size header".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(malformed("truncated 36-bit size header".into()));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| (acc << 6) | six(b));
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed("truncated 18-bit size header".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | six(b));
            (n, &rest[3..])
        }
        [b, rest @ ..] => (six(*b), rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = six(body[k / 6]);
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && six(body[k / 6]) & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(malformed("nonzero padding bits".into()));
    }
    Ok((n, edges))
}

pub fn to_graph6(f: &Forest) -> String {
    let n = f.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut body = vec![0u8; bits.div_ceil(6)];
    for (u, v) in f.edges() {
        // u < v, column v, row u
        let k = v * (v - 1) / 2 + u;
        body[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(body.into_iter().map(|b| b + 63));
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{path, star};

    #[test]
    fn edge_list_single_edge() {
        let f = parse_forest(b"2\n0 1\n", Format::EdgeList).unwrap();
        assert_eq!(f.vertex_count(), 2);
        assert_eq!(f.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn edge_list_triangle_rejected() {
        assert_eq!(
            parse_forest(b"3\n0 1\n1 2\n0 2\n", Format::EdgeList),
            Err(Error::CycleDetected(0, 2))
        );
    }

    #[test]
    fn edge_list_comments_and_errors() {
        let f = parse_edge_list(b"# a path\n3 # vertices\n\n0 1\n1 2 # last\n").unwrap();
        assert_eq!(f, path(3));
        assert!(matches!(
            parse_edge_list(b"3\n0 x\n"),
            Err(Error::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list(b"3\n0\n"),
            Err(Error::Malformed { line: 2, .. })
        ));
        assert!(matches!(parse_edge_list(b""), Err(Error::Malformed { .. })));
        assert!(matches!(
            parse_edge_list(b"2\n0 5\n"),
            Err(Error::OutOfRange { vertex: 5, .. })
        ));
        assert_eq!(
            parse_edge_list(b"2\n0 1\n1 0\n"),
            Err(Error::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn graph6_star() {
        // K_{1,4} with center 4
        let f = parse_forest(b"D?{", Format::Graph6).unwrap();
        assert_eq!(
            f,
            Forest::from_edges(5, [(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap()
        );
        assert_eq!(to_graph6(&star(4)), "Ds_");
        assert_eq!(to_graph6(&f), "D?{");
    }

    #[test]
    fn graph6_rejects_bad_input() {
        assert!(parse_graph6(b"D?").is_err());
        assert!(parse_graph6(b"D?{?").is_err());
        assert!(parse_graph6(b"A\x20").is_err());
        // K3
        assert_eq!(parse_graph6(b"Bw"), Err(Error::CycleDetected(1, 2)));
        // padding bit set: n = 2 uses one bit
        assert!(parse_graph6(b"A?").is_ok());
        assert!(parse_graph6(b"A_").is_ok());
        assert!(parse_graph6(b"A`").is_err());
        assert!(parse_graph6(b"A@").is_err());
    }

    #[test]
    fn graph6_long_header() {
        let f = path(100);
        let s = to_graph6(&f);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63 + 1, 63 + 36]);
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), f);
    }

    #[test]
    fn auto_detection() {
        assert_eq!(detect(b"D?{\n"), Format::Graph6);
        assert_eq!(detect(b"2\n0 1\n"), Format::EdgeList);
        assert_eq!(detect(b"# comment\n2\n"), Format::EdgeList);
        assert_eq!(detect(b"@"), Format::Graph6);
        assert_eq!(parse_forest(b"Ds_", Format::Auto).unwrap(), star(4));
        assert_eq!(
            parse_forest(b">>graph6<<Ds_", Format::Auto).unwrap(),
            star(4)
        );
    }
}
