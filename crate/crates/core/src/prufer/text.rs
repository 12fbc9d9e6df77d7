//! Line formats for Husimi graphs and their codes.
//!
//! ```text
//! graph := n ';' [ block { ',' block } ]        e.g.  3; {1,2},{2,3}
//! block := '{' vertex { ',' vertex } '}'
//! code  := 'lambda:' seq ';' 'pi:' parts      e.g.  lambda: 2; pi: {1}|{3}
//! seq   := '-' | vertex { ',' vertex }
//! parts := '-' | block { '|' block }
//! ```
//!
//! Whitespace between tokens is ignored.

use std::collections::BTreeSet;

use super::{HusimiGraph, PruferCode, VertexSet};
use crate::error::{Error, Result};

fn format_set(s: &VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

pub fn format_blocks(h: &HusimiGraph) -> String {
    let blocks: Vec<String> = h.blocks().iter().map(format_set).collect();
    if blocks.is_empty() {
        format!("{};", h.vertices())
    } else {
        format!("{}; {}", h.vertices(), blocks.join(","))
    }
}

pub fn format_code(c: &PruferCode) -> String {
    let lambda = if c.lambda.is_empty() {
        "-".to_string()
    } else {
        c.lambda.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    };
    let pi = if c.pi.is_empty() {
        "-".to_string()
    } else {
        c.pi.iter().map(format_set).collect::<Vec<_>>().join("|")
    };
    format!("lambda: {lambda}; pi: {pi}")
}

fn parse_vertex(tok: &str) -> Result<usize> {
    tok.trim()
        .parse::<usize>()
        .map_err(|_| Error::Domain(format!("'{}' is not a vertex label", tok.trim())))
}

/// Parses a run of `{...}` groups separated by `sep`.
fn parse_sets(s: &str, sep: char) -> Result<Vec<VertexSet>> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = s;
    loop {
        let rest_trim = rest.trim_start();
        let body = rest_trim
            .strip_prefix('{')
            .ok_or_else(|| Error::Domain(format!("expected '{{' at '{rest_trim}'")))?;
        let close = body
            .find('}')
            .ok_or_else(|| Error::Domain("unclosed '{'".into()))?;
        let inner = &body[..close];
        let set: VertexSet = if inner.trim().is_empty() {
            BTreeSet::new()
        } else {
            inner.split(',').map(parse_vertex).collect::<Result<_>>()?
        };
        if set.len() != inner.split(',').filter(|t| !t.trim().is_empty()).count() {
            return Err(Error::Domain(format!("repeated vertex in {{{inner}}}")));
        }
        out.push(set);
        let after = body[close + 1..].trim_start();
        if after.is_empty() {
            break;
        }
        rest = after
            .strip_prefix(sep)
            .ok_or_else(|| Error::Domain(format!("expected '{sep}' at '{after}'")))?;
    }
    Ok(out)
}

/// Parses `n; {..},{..}` into a validated Husimi graph.
pub fn parse_blocks(line: &str) -> Result<HusimiGraph> {
    let (n, rest) = line
        .split_once(';')
        .ok_or_else(|| Error::Domain("expected 'n; blocks'".into()))?;
    let n = n
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::Domain(format!("'{}' is not a vertex count", n.trim())))?;
    HusimiGraph::new(n, parse_sets(rest, ',')?)
}

/// Parses `lambda: ..; pi: ..`. Shape checks are left to decoding.
pub fn parse_code(line: &str) -> Result<PruferCode> {
    let (lhs, rhs) = line
        .split_once(';')
        .ok_or_else(|| Error::Domain("expected 'lambda: ..; pi: ..'".into()))?;
    let lambda_body = lhs
        .trim()
        .strip_prefix("lambda:")
        .ok_or_else(|| Error::Domain("missing 'lambda:'".into()))?
        .trim();
    let pi_body = rhs
        .trim()
        .strip_prefix("pi:")
        .ok_or_else(|| Error::Domain("missing 'pi:'".into()))?;
    let lambda = if lambda_body.is_empty() || lambda_body == "-" {
        Vec::new()
    } else {
        lambda_body.split(',').map(parse_vertex).collect::<Result<_>>()?
    };
    let parts = parse_sets(pi_body, '|')?;
    let pi: BTreeSet<VertexSet> = parts.iter().cloned().collect();
    if pi.len() != parts.len() {
        return Err(Error::Domain("repeated part".into()));
    }
    Ok(PruferCode { lambda, pi })
}
