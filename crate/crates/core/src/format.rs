//! Text formats for trigraphs and thickening maps.
//!
//! Trigraph files start with `trigraph <n>` followed by one `<u> <v>
//! strong|semi` line per adjacent pair; unlisted pairs are strongly
//! antiadjacent. Map files start with `thickening <n_reduced> <n_original>`
//! followed by `<v'>: <v1> <v2> ...` for every reduced vertex in order.
//! In both, `#` starts a comment and blank lines are ignored.

use std::fmt::Write as _;

use crate::antithicken::ThickeningMap;
use crate::error::{Error, Result};
use crate::set::VertexSet;
use crate::trigraph::{Adjacency, Trigraph, TrigraphBuilder};

/// Largest vertex count accepted by [`parse_trigraph`]; trigraphs are
/// stored as dense matrices.
pub const MAX_VERTICES: usize = 16_384;

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn number(line: usize, field: &str, what: &str) -> Result<usize> {
    field
        .parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {field:?}")))
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
    arity: usize,
) -> Result<(usize, Vec<usize>)> {
    let (line, body) = lines
        .next()
        .ok_or_else(|| Error::parse(1, format!("missing `{keyword}` header")))?;
    let mut fields = body.split_whitespace();
    if fields.next() != Some(keyword) {
        return Err(Error::parse(line, format!("expected `{keyword}` header")));
    }
    let values = fields
        .map(|f| number(line, f, "a vertex count"))
        .collect::<Result<Vec<_>>>()?;
    if values.len() != arity {
        return Err(Error::parse(line, format!("`{keyword}` header takes {arity} count(s)")));
    }
    Ok((line, values))
}

pub fn parse_trigraph(text: &str) -> Result<Trigraph> {
    let mut lines = content_lines(text);
    let (head, counts) = header(&mut lines, "trigraph", 1)?;
    let n = counts[0];
    if n > MAX_VERTICES {
        return Err(Error::parse(head, format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
    }
    let mut builder = TrigraphBuilder::new(n);
    let mut semi_line: Vec<Option<usize>> = vec![None; n];
    for (line, body) in lines {
        let fields: Vec<&str> = body.split_whitespace().collect();
        let [u, v, kind] = fields.as_slice() else {
            return Err(Error::parse(line, "expected `<u> <v> strong|semi`"));
        };
        let (u, v) = (number(line, u, "a vertex")?, number(line, v, "a vertex")?);
        let value = match *kind {
            "strong" => Adjacency::Strong,
            "semi" => Adjacency::Semi,
            other => {
                return Err(Error::parse(
                    line,
                    format!("unknown adjacency {other:?} (expected strong or semi)"),
                ))
            }
        };
        builder
            .set(u, v, value)
            .map_err(|e| Error::parse(line, e.to_string()))?;
        if value == Adjacency::Semi {
            for w in [u, v] {
                if let Some(first) = semi_line[w].replace(line) {
                    return Err(Error::parse(
                        line,
                        format!("vertex {w} is already in the semiedge on line {first}"),
                    ));
                }
            }
        }
    }
    builder.build()
}

pub fn serialize_trigraph(g: &Trigraph) -> String {
    let mut out = format!("trigraph {}\n", g.n());
    for (u, v, a) in g.adjacent_pairs() {
        writeln!(out, "{u} {v} {}", a.name()).unwrap();
    }
    out
}

pub fn parse_map(text: &str) -> Result<ThickeningMap> {
    let mut lines = content_lines(text);
    let (head, counts) = header(&mut lines, "thickening", 2)?;
    let (reduced, original) = (counts[0], counts[1]);
    let mut parts = Vec::with_capacity(reduced);
    let mut last = head;
    for (line, body) in lines {
        last = line;
        let (key, rest) = body
            .split_once(':')
            .ok_or_else(|| Error::parse(line, "expected `<v'>: <v1> <v2> ...`"))?;
        let key = number(line, key.trim(), "a reduced vertex")?;
        if key != parts.len() {
            return Err(Error::parse(line, format!("expected reduced vertex {}, found {key}", parts.len())));
        }
        let part = rest
            .split_whitespace()
            .map(|f| number(line, f, "a vertex"))
            .collect::<Result<Vec<_>>>()?;
        let set = VertexSet::from(part.clone());
        if set.len() != part.len() {
            return Err(Error::parse(line, "repeated vertex in part"));
        }
        parts.push(set);
    }
    if parts.len() != reduced {
        return Err(Error::parse(last, format!("expected {reduced} parts, found {}", parts.len())));
    }
    ThickeningMap::new(original, parts).map_err(|e| Error::parse(last, e.to_string()))
}

pub fn serialize_map(map: &ThickeningMap) -> String {
    let mut out = format!("thickening {} {}\n", map.source_n(), map.target_n());
    for (i, part) in map.parts().iter().enumerate() {
        write!(out, "{i}:").unwrap();
        for v in part.iter() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}
