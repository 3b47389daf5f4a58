//! Text formats for instances and orientations.
//!
//! An instance file has a header `n m`, then `m` edge lines `u v` (or
//! `u v d` for an edge directed u -> v), then a line with the trail count `t`
//! and `t` trail lines `k e_1 ... e_k` in walk order. Blank lines and lines
//! starting with `#` are ignored.
//!
//! An orientation file is either the single line `INFEASIBLE`, or `FEASIBLE`
//! followed by one `edge_id tail head` line per edge. A self-loop reads back
//! as `Forward`; its direction never matters.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Direction, EdgeState, MultiGraph, Orientation, VertexId};
use crate::instance::{Instance, Solution};
use crate::trails::{canonical_walk, TrailPartition};

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    /// Next meaningful line as (1-based line number, tokens).
    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, line) in self.inner.by_ref() {
            self.last = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Some((i + 1, line.split_whitespace().collect()));
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        let last = self.last;
        self.next()
            .ok_or_else(|| parse_error(last + 1, format!("unexpected end of input, expected {what}")))
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(line: usize, token: &str, what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("{what}: expected a non-negative integer, got {token:?}")))
}

fn arity(line: usize, tokens: &[&str], allowed: &[usize], what: &str) -> Result<()> {
    if allowed.contains(&tokens.len()) {
        Ok(())
    } else {
        Err(parse_error(
            line,
            format!("{what}: expected {allowed:?} fields, got {}", tokens.len()),
        ))
    }
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = Lines::new(text);
    let (ln, tok) = lines.expect("header \"n m\"")?;
    arity(ln, &tok, &[2], "header")?;
    let n = number(ln, tok[0], "vertex count")?;
    let m = number(ln, tok[1], "edge count")?;

    let mut g = MultiGraph::new(n);
    for _ in 0..m {
        let (ln, tok) = lines.expect("an edge line")?;
        arity(ln, &tok, &[2, 3], "edge")?;
        let u = number(ln, tok[0], "endpoint")?;
        let v = number(ln, tok[1], "endpoint")?;
        if u >= n || v >= n {
            return Err(parse_error(ln, format!("endpoint out of range (n = {n})")));
        }
        match tok.get(2) {
            None => g.add_edge(u, v),
            Some(&"d") => g.add_fixed_edge(u, v),
            Some(other) => return Err(parse_error(ln, format!("unknown edge marker {other:?}"))),
        }
        .map_err(|e| parse_error(ln, e.to_string()))?;
    }

    let (ln, tok) = lines.expect("trail count")?;
    arity(ln, &tok, &[1], "trail count")?;
    let t = number(ln, tok[0], "trail count")?;
    let mut trails = Vec::with_capacity(t.min(m));
    let mut seen = vec![false; m];
    for _ in 0..t {
        let (ln, tok) = lines.expect("a trail line")?;
        let k = number(ln, tok[0], "trail length")?;
        if k == 0 {
            return Err(parse_error(ln, "empty trail"));
        }
        if tok.len() != k + 1 {
            return Err(parse_error(
                ln,
                format!("trail declares {k} edges but lists {}", tok.len() - 1),
            ));
        }
        let mut trail = Vec::with_capacity(k);
        for token in &tok[1..] {
            let e = number(ln, token, "edge index")?;
            if e >= m {
                return Err(parse_error(ln, format!("edge {e} out of range (m = {m})")));
            }
            if !g.edge(e).state.is_undirected() {
                return Err(parse_error(ln, format!("edge {e} is directed and cannot be in a trail")));
            }
            if std::mem::replace(&mut seen[e], true) {
                return Err(parse_error(ln, format!("edge {e} appears in more than one place")));
            }
            trail.push(e);
        }
        if canonical_walk(&g, &trail).is_none() {
            return Err(parse_error(ln, "consecutive edges do not share a vertex"));
        }
        trails.push(trail);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_error(ln, "trailing content after the last trail"));
    }
    if let Some(e) = g.undirected_edges().find(|&e| !seen[e]) {
        return Err(parse_error(lines.last, format!("undirected edge {e} is in no trail")));
    }
    Ok(Instance {
        graph: g,
        trails: TrailPartition::new(trails),
    })
}

pub fn format_instance(inst: &Instance) -> String {
    let g = &inst.graph;
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for (_, rec) in g.edges() {
        if rec.state == EdgeState::Undirected {
            let _ = writeln!(out, "{} {}", rec.tail, rec.head);
        } else {
            let (u, v) = rec.arc().expect("directed edge");
            let _ = writeln!(out, "{u} {v} d");
        }
    }
    let _ = writeln!(out, "{}", inst.trails.len());
    for trail in &inst.trails.trails {
        let _ = write!(out, "{}", trail.len());
        for e in trail {
            let _ = write!(out, " {e}");
        }
        out.push('\n');
    }
    out
}

/// Every edge of `g` as `edge_id tail head`, undirected edges taken from `o`.
/// Fails if an undirected edge has no direction.
pub fn format_solution(g: &MultiGraph, sol: &Solution) -> Result<String> {
    let o = match sol {
        Solution::Infeasible => return Ok("INFEASIBLE\n".into()),
        Solution::Feasible(o) => o,
    };
    let mut out = String::from("FEASIBLE\n");
    for (e, rec) in g.edges() {
        let (u, v) = match rec.arc() {
            Some(arc) => arc,
            None => rec.endpoints_along(o.get(e).ok_or(Error::InvalidEdge(e))?),
        };
        let _ = writeln!(out, "{e} {u} {v}");
    }
    Ok(out)
}

/// Reads an orientation file against the instance it answers. Lines may come
/// in any order but every edge must appear exactly once with its own
/// endpoints, and directed edges must keep their direction.
pub fn parse_solution(text: &str, g: &MultiGraph) -> Result<Solution> {
    let mut lines = Lines::new(text);
    let (ln, tok) = lines.expect("FEASIBLE or INFEASIBLE")?;
    match tok.as_slice() {
        ["INFEASIBLE"] => {
            return match lines.next() {
                Some((ln, _)) => Err(parse_error(ln, "content after INFEASIBLE")),
                None => Ok(Solution::Infeasible),
            }
        }
        ["FEASIBLE"] => {}
        _ => return Err(parse_error(ln, "expected FEASIBLE or INFEASIBLE")),
    }
    let m = g.edge_count();
    let mut o = Orientation::with_capacity(m);
    let mut seen = vec![false; m];
    let mut count = 0;
    while let Some((ln, tok)) = lines.next() {
        arity(ln, &tok, &[3], "orientation line")?;
        let e = number(ln, tok[0], "edge id")?;
        let u: VertexId = number(ln, tok[1], "tail")?;
        let v: VertexId = number(ln, tok[2], "head")?;
        if e >= m {
            return Err(parse_error(ln, format!("edge {e} out of range (m = {m})")));
        }
        if std::mem::replace(&mut seen[e], true) {
            return Err(parse_error(ln, format!("edge {e} listed twice")));
        }
        count += 1;
        let rec = g.edge(e);
        let dir = if (u, v) == (rec.tail, rec.head) {
            Direction::Forward
        } else if (u, v) == (rec.head, rec.tail) {
            Direction::Reversed
        } else {
            return Err(parse_error(ln, format!("edge {e} joins {} and {}, not {u} and {v}", rec.tail, rec.head)));
        };
        match rec.arc() {
            None => o.set(e, dir),
            Some(arc) if arc != (u, v) => {
                return Err(parse_error(ln, format!("edge {e} is directed {} -> {}", arc.0, arc.1)))
            }
            Some(_) => {}
        }
    }
    if count != m {
        return Err(parse_error(
            lines.last,
            format!("orientation lists {count} edges, instance has {m}"),
        ));
    }
    Ok(Solution::Feasible(o))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::generate::{cycle, fig1};

    #[test]
    fn instance_round_trip() {
        for inst in [fig1(), cycle(3), cycle(1)] {
            let text = format_instance(&inst);
            assert_eq!(parse_instance(&text).unwrap(), inst);
        }
    }

    #[test]
    fn reports_line_of_bad_trail() {
        let text = "3 3\n0 1\n1 2\n2 0\n\n2\n2 0 1\n2 2 0x\n";
        match parse_instance(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 8),
            other => panic!("{other:?}"),
        }
        let text = "3 3\n0 1\n1 2\n2 0\n1\n2 0 1\n";
        assert!(matches!(parse_instance(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn rejects_directed_edge_in_trail() {
        let text = "2 2\n0 1 d\n1 0\n1\n2 0 1\n";
        let err = parse_instance(text).unwrap_err().to_string();
        assert!(err.contains("line 5") && err.contains("directed"), "{err}");
    }

    #[test]
    fn solution_round_trip() {
        let inst = cycle(3);
        let o: Orientation = (0..3).map(|e| (e, Direction::Reversed)).collect();
        let sol = Solution::Feasible(o);
        let text = format_solution(&inst.graph, &sol).unwrap();
        assert_eq!(text, "FEASIBLE\n0 1 0\n1 2 1\n2 0 2\n");
        assert_eq!(parse_solution(&text, &inst.graph).unwrap(), sol);
        assert_eq!(parse_solution("INFEASIBLE\n", &inst.graph).unwrap(), Solution::Infeasible);
        assert!(parse_solution("FEASIBLE\n0 0 1\n", &inst.graph).is_err());
    }
}
