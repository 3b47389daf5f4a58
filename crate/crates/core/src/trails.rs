//! Trails and trail partitions.
//!
//! A trail is stored as its edge sequence. The vertex walk is recovered from
//! the graph: it starts at the tail of the first edge when that works and at
//! the head otherwise. A trail's direction is `Forward` when it is traversed
//! along this canonical walk.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Direction, EdgeId, MultiGraph, Orientation, VertexId};

/// An edge sequence together with the vertex walk it traces.
/// `verts.len() == edges.len() + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    pub edges: Vec<EdgeId>,
    pub verts: Vec<VertexId>,
}

impl Walk {
    pub fn empty(at: VertexId) -> Self {
        Walk {
            edges: Vec::new(),
            verts: vec![at],
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> VertexId {
        self.verts[0]
    }

    pub fn end(&self) -> VertexId {
        *self.verts.last().expect("walk has at least one vertex")
    }

    pub fn reversed(&self) -> Walk {
        let mut edges = self.edges.clone();
        let mut verts = self.verts.clone();
        edges.reverse();
        verts.reverse();
        Walk { edges, verts }
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn extend(&mut self, other: &Walk) {
        debug_assert_eq!(self.end(), other.start());
        self.edges.extend_from_slice(&other.edges);
        self.verts.extend_from_slice(&other.verts[1..]);
    }

    /// Direction in which `o` traverses the walk, judged by the first non-loop
    /// edge it assigns. `None` if it assigns no non-loop edge of the walk.
    pub fn direction_in(&self, g: &MultiGraph, o: &Orientation) -> Option<Direction> {
        (0..self.len()).find_map(|i| {
            let e = self.edges[i];
            if g.edge(e).is_loop() {
                return None;
            }
            let d = o.get(e)?;
            Some(Direction::from_forward(d == self.edge_direction(g, i, Direction::Forward)))
        })
    }

    /// Assigns every unassigned edge of the walk so that it is traversed in
    /// the direction `o` already uses, or forward if there is none.
    pub fn complete_in(&self, g: &MultiGraph, o: &mut Orientation) {
        let dir = self.direction_in(g, o).unwrap_or(Direction::Forward);
        for i in 0..self.len() {
            if o.get(self.edges[i]).is_none() {
                o.set(self.edges[i], self.edge_direction(g, i, dir));
            }
        }
    }

    /// Direction of edge `i` of the walk when the walk is traversed in `dir`.
    pub fn edge_direction(&self, g: &MultiGraph, i: usize, dir: Direction) -> Direction {
        let rec = g.edge(self.edges[i]);
        let along = rec.tail == self.verts[i];
        Direction::from_forward(along).flipped_if(!dir.is_forward())
    }
}

/// Walk traced by `edges` when starting from `start`, if it is one.
pub fn walk_from(g: &MultiGraph, edges: &[EdgeId], start: VertexId) -> Option<Walk> {
    let mut verts = Vec::with_capacity(edges.len() + 1);
    verts.push(start);
    let mut at = start;
    for &e in edges {
        let rec = g.get_edge(e)?;
        if rec.tail == at {
            at = rec.head;
        } else if rec.head == at {
            at = rec.tail;
        } else {
            return None;
        }
        verts.push(at);
    }
    Some(Walk {
        edges: edges.to_vec(),
        verts,
    })
}

/// The canonical walk of a nonempty edge sequence, or `None` if consecutive
/// edges do not connect.
pub fn canonical_walk(g: &MultiGraph, edges: &[EdgeId]) -> Option<Walk> {
    let first = g.get_edge(*edges.first()?)?;
    walk_from(g, edges, first.tail).or_else(|| walk_from(g, edges, first.head))
}

/// Both walks an edge sequence may trace (they differ only for sequences
/// whose first edges run back and forth between the same two vertices).
fn candidate_walks(g: &MultiGraph, edges: &[EdgeId]) -> Vec<Walk> {
    let Some(first) = edges.first().and_then(|&e| g.get_edge(e)) else {
        return Vec::new();
    };
    let mut out = Vec::with_capacity(2);
    out.extend(walk_from(g, edges, first.tail));
    if first.head != first.tail {
        out.extend(walk_from(g, edges, first.head));
    }
    out
}

/// Whether the assigned edges of `edges` all follow one traversal of the
/// trail. Unassigned edges and self-loops impose nothing.
pub fn is_trail_consistent(g: &MultiGraph, edges: &[EdgeId], o: &Orientation) -> bool {
    candidate_walks(g, edges).iter().any(|w| {
        [Direction::Forward, Direction::Reversed].iter().any(|&dir| {
            (0..w.len()).all(|i| {
                let e = w.edges[i];
                if g.edge(e).is_loop() {
                    return true;
                }
                match o.get(e) {
                    None => true,
                    Some(d) => d == w.edge_direction(g, i, dir),
                }
            })
        })
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TrailPartition {
    pub trails: Vec<Vec<EdgeId>>,
}

impl TrailPartition {
    pub fn new(trails: Vec<Vec<EdgeId>>) -> Self {
        TrailPartition { trails }
    }

    /// Every live undirected edge as its own trail.
    pub fn singletons(g: &MultiGraph) -> Self {
        TrailPartition {
            trails: g.undirected_edges().map(|e| vec![e]).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.trails.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trails.is_empty()
    }

    /// Trail index of every edge, `None` for edges in no trail.
    pub fn trail_of(&self, edge_count: usize) -> Vec<Option<usize>> {
        let mut of = vec![None; edge_count];
        for (t, trail) in self.trails.iter().enumerate() {
            for &e in trail {
                if e < edge_count {
                    of[e] = Some(t);
                }
            }
        }
        of
    }

    /// Checks that the trails partition the live undirected edges of `g` and
    /// that each is a walk without repeated edges. The error names the first
    /// violation found.
    pub fn check(&self, g: &MultiGraph) -> Result<()> {
        self.checked_walks(g).map(|_| ())
    }

    /// `check` followed by `walks`, in one pass.
    pub fn checked_walks(&self, g: &MultiGraph) -> Result<Vec<Walk>> {
        let mut walks = Vec::with_capacity(self.trails.len());
        let mut seen = vec![false; g.edge_count()];
        for (t, trail) in self.trails.iter().enumerate() {
            if trail.is_empty() {
                return Err(Error::InvalidTrails(format!("trail {t} is empty")));
            }
            for &e in trail {
                let Some(rec) = g.get_edge(e) else {
                    return Err(Error::InvalidTrails(format!(
                        "trail {t} uses missing edge {e}"
                    )));
                };
                if !rec.state.is_undirected() {
                    return Err(Error::InvalidTrails(format!(
                        "trail {t} uses directed edge {e}"
                    )));
                }
                if std::mem::replace(&mut seen[e], true) {
                    return Err(Error::InvalidTrails(format!(
                        "edge {e} repeated (second use in trail {t})"
                    )));
                }
            }
            let Some(w) = canonical_walk(g, trail) else {
                return Err(Error::InvalidTrails(format!(
                    "trail {t} is not a walk: consecutive edges do not share a vertex"
                )));
            };
            walks.push(w);
        }
        if let Some(e) = g.undirected_edges().find(|&e| !seen[e]) {
            return Err(Error::InvalidTrails(format!("edge {e} is in no trail")));
        }
        Ok(walks)
    }

    pub fn is_valid(&self, g: &MultiGraph) -> bool {
        self.check(g).is_ok()
    }

    /// Canonical walks of all trails. Assumes `check` passed.
    pub fn walks(&self, g: &MultiGraph) -> Vec<Walk> {
        self.trails
            .iter()
            .map(|t| canonical_walk(g, t).expect("trail partition was validated"))
            .collect()
    }

    /// Edge orientation induced by one direction per trail.
    pub fn orientation(&self, g: &MultiGraph, dirs: &[Direction]) -> Orientation {
        let mut o = Orientation::with_capacity(g.edge_count());
        for (walk, &dir) in self.walks(g).iter().zip(dirs) {
            for i in 0..walk.len() {
                o.set(walk.edges[i], walk.edge_direction(g, i, dir));
            }
        }
        o
    }

    /// Whether every trail is consistently directed by `o`.
    pub fn is_consistent(&self, g: &MultiGraph, o: &Orientation) -> bool {
        self.trails.iter().all(|t| is_trail_consistent(g, t, o))
    }
}

impl fmt::Display for TrailPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.trails.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            let ids: Vec<String> = t.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", ids.join(","))?;
        }
        Ok(())
    }
}

/// `validate_trails`: whether `p` is a valid trail partition of `g`.
pub fn validate_trails(g: &MultiGraph, p: &TrailPartition) -> bool {
    p.is_valid(g)
}
