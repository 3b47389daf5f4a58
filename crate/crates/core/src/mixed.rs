//! Trail orientation for mixed multigraphs.
//!
//! Forced trails are oriented first. When nothing is forced, the lowest
//! remaining trail is oriented forward, which is always safe in that
//! situation.

use crate::connectivity::{bridge_mask, is_strongly_connected, is_strongly_connected_without};
use crate::error::{Error, Result};
use crate::graph::{Direction, EdgeId, EdgeState, MultiGraph, Orientation};
use crate::instance::Solution;
use crate::trails::{TrailPartition, Walk};

/// Which orientations of a single undirected edge keep the graph strongly
/// connected once the edge is directed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Forced {
    Forward,
    Reversed,
    /// Not forced: the graph stays strongly connected without the edge.
    Either,
    /// Neither direction keeps the graph strongly connected.
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ForcedStatus {
    pub edge: EdgeId,
    pub forced_direction: Forced,
}

impl ForcedStatus {
    pub fn is_forced(&self) -> bool {
        self.forced_direction != Forced::Either
    }
}

fn oriented(dir: Direction) -> EdgeState {
    match dir {
        Direction::Forward => EdgeState::OrientedForward,
        Direction::Reversed => EdgeState::OrientedReversed,
    }
}

/// Classification of every live undirected edge, in id order.
pub fn forced_edges(g: &MultiGraph) -> Vec<ForcedStatus> {
    let mut work = g.clone();
    let undirected: Vec<EdgeId> = g.undirected_edges().collect();
    undirected
        .into_iter()
        .map(|e| {
            let forced_direction = if is_strongly_connected_without(&work, Some(e)) {
                Forced::Either
            } else {
                let mut ok = [false; 2];
                for (i, dir) in [Direction::Forward, Direction::Reversed].into_iter().enumerate() {
                    work.set_state(e, oriented(dir));
                    ok[i] = is_strongly_connected(&work);
                }
                work.set_state(e, EdgeState::Undirected);
                match ok {
                    [true, false] => Forced::Forward,
                    [false, true] => Forced::Reversed,
                    [true, true] => Forced::Either,
                    [false, false] => Forced::Neither,
                }
            };
            ForcedStatus {
                edge: e,
                forced_direction,
            }
        })
        .collect()
}

/// Strongly connected, and still so after deleting any one undirected edge.
/// When this holds, any orientation of any single trail extends to a strong
/// trail orientation.
pub fn check_robust(g: &MultiGraph) -> bool {
    is_strongly_connected(g)
        && g
            .undirected_edges()
            .all(|e| is_strongly_connected_without(g, Some(e)))
}

/// Sets the states of a trail's edges for traversal direction `dir`.
fn apply_walk(g: &mut MultiGraph, walk: &Walk, dir: Direction) {
    for i in 0..walk.len() {
        let d = walk.edge_direction(g, i, dir);
        g.set_state(walk.edges[i], oriented(d));
    }
}

fn clear_walk(g: &mut MultiGraph, walk: &Walk) {
    for &e in &walk.edges {
        g.set_state(e, EdgeState::Undirected);
    }
}

/// Strong trail orientation of a mixed multigraph, or `Infeasible`.
///
/// Fixed and already oriented edges are kept as they are; the trails must
/// cover exactly the undirected edges.
pub fn orient_mixed(g: &MultiGraph, p: &TrailPartition) -> Result<Solution> {
    p.check(g)?;
    if bridge_mask(g).contains(&true) || !is_strongly_connected(g) {
        return Ok(Solution::Infeasible);
    }
    let mut work = g.clone();
    let walks = p.walks(g);
    let trail_of = p.trail_of(g.edge_count());
    let mut remaining = vec![true; walks.len()];
    let mut left = walks.len();
    while left > 0 {
        let forced = work
            .undirected_edges()
            .find(|&e| !is_strongly_connected_without(&work, Some(e)));
        let t = match forced {
            Some(e) => {
                let t = trail_of[e].expect("undirected edges are in trails");
                let mut done = false;
                for dir in [Direction::Forward, Direction::Reversed] {
                    apply_walk(&mut work, &walks[t], dir);
                    if is_strongly_connected(&work) {
                        done = true;
                        break;
                    }
                }
                if !done {
                    clear_walk(&mut work, &walks[t]);
                    return Ok(Solution::Infeasible);
                }
                t
            }
            None => {
                let t = remaining.iter().position(|&r| r).unwrap();
                apply_walk(&mut work, &walks[t], Direction::Forward);
                t
            }
        };
        remaining[t] = false;
        left -= 1;
    }
    let mut o = Orientation::with_capacity(g.edge_count());
    for e in g.undirected_edges() {
        let dir = match work.edge(e).state {
            EdgeState::OrientedForward => Direction::Forward,
            EdgeState::OrientedReversed => Direction::Reversed,
            other => unreachable!("trail edge left in state {other:?}"),
        };
        o.set(e, dir);
    }
    Ok(Solution::Feasible(o))
}

/// Orients trail `t` in direction `dir` and completes the rest with
/// `orient_mixed`. The result, if feasible, covers every undirected edge.
pub fn extend_trail_orientation(
    g: &MultiGraph,
    p: &TrailPartition,
    t: usize,
    dir: Direction,
) -> Result<Solution> {
    p.check(g)?;
    if t >= p.len() {
        return Err(Error::Precondition(format!("no trail {t}")));
    }
    let walk = &p.walks(g)[t];
    let mut residual = g.clone();
    apply_walk(&mut residual, walk, dir);
    let rest = TrailPartition::new(
        p.trails
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != t)
            .map(|(_, tr)| tr.clone())
            .collect(),
    );
    let sol = orient_mixed(&residual, &rest)?;
    Ok(match sol {
        Solution::Infeasible => Solution::Infeasible,
        Solution::Feasible(mut o) => {
            for i in 0..walk.len() {
                o.set(walk.edges[i], walk.edge_direction(g, i, dir));
            }
            Solution::Feasible(o)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::generate::{cycle, fig1};
    use crate::oracle::verify::verify;

    #[test]
    fn fig1_is_infeasible_with_conflicting_forced_edges() {
        let inst = fig1();
        assert_eq!(orient_mixed(&inst.graph, &inst.trails).unwrap(), Solution::Infeasible);
        let forced = forced_edges(&inst.graph);
        assert_eq!(
            forced,
            vec![
                ForcedStatus { edge: 0, forced_direction: Forced::Reversed },
                ForcedStatus { edge: 1, forced_direction: Forced::Forward },
            ]
        );
        // forward along the trail a-b-c orients both edges forward
        let walk = &inst.trails.walks(&inst.graph)[0];
        assert_eq!(walk.verts, vec![0, 1, 2]);
        assert!(!check_robust(&inst.graph));
    }

    #[test]
    fn undirected_triangle_has_no_forced_edges() {
        let g = cycle(3).graph;
        assert!(forced_edges(&g).iter().all(|s| !s.is_forced()));
    }

    #[test]
    fn single_undirected_edge_across_a_directed_cut_is_forced_back() {
        // V1 = {0, 1}, V2 = {2, 3}; directed 0->1, 1->0, 2->3, 3->2, 1->2
        // plus undirected (0, 3): it must run from V2 to V1
        let mut g = MultiGraph::new(4);
        for (a, b) in [(0, 1), (1, 0), (2, 3), (3, 2), (1, 2)] {
            g.add_fixed_edge(a, b).unwrap();
        }
        let e = g.add_edge(0, 3).unwrap();
        let s = forced_edges(&g);
        assert_eq!(s, vec![ForcedStatus { edge: e, forced_direction: Forced::Reversed }]);
        let p = TrailPartition::singletons(&g);
        let o = orient_mixed(&g, &p).unwrap().into_orientation().unwrap();
        assert_eq!(o.get(e), Some(Direction::Reversed));
    }

    #[test]
    fn directed_triangle_with_chord() {
        let mut g = MultiGraph::new(3);
        for (a, b) in [(0, 1), (1, 2), (2, 0)] {
            g.add_fixed_edge(a, b).unwrap();
        }
        let chord = g.add_edge(0, 2).unwrap();
        let p = TrailPartition::singletons(&g);
        let o = orient_mixed(&g, &p).unwrap().into_orientation().unwrap();
        assert!(verify(&g, &p, &o).is_pass());
        for dir in [Direction::Forward, Direction::Reversed] {
            let o: Orientation = [(chord, dir)].into_iter().collect();
            assert!(verify(&g, &p, &o).is_pass());
        }
        assert!(check_robust(&g));
    }

    #[test]
    fn robustness_predicate() {
        let k4 = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert!(check_robust(&k4));
        // an undirected path is strongly connected as a mixed graph, so C4
        // minus any edge still is
        assert!(check_robust(&cycle(4).graph));
        let path = MultiGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(!check_robust(&path));
        let mut g = MultiGraph::new(2);
        g.add_fixed_edge(0, 1).unwrap();
        g.add_edge(0, 1).unwrap();
        assert!(!check_robust(&g));
    }

    #[test]
    fn any_trail_direction_extends_on_robust_graph() {
        let k4 = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        let p = TrailPartition::new(vec![vec![0, 3, 5], vec![1], vec![2], vec![4]]);
        for t in 0..p.len() {
            for dir in [Direction::Forward, Direction::Reversed] {
                let o = extend_trail_orientation(&k4, &p, t, dir)
                    .unwrap()
                    .into_orientation()
                    .unwrap();
                assert!(verify(&k4, &p, &o).is_pass());
            }
        }
    }

    #[test]
    fn bridges_in_underlying_graph_are_rejected() {
        let mut g = MultiGraph::new(2);
        g.add_fixed_edge(0, 1).unwrap();
        g.add_fixed_edge(1, 0).unwrap();
        assert!(orient_mixed(&g, &TrailPartition::default()).unwrap().is_feasible());
        let mut g = MultiGraph::new(3);
        g.add_fixed_edge(0, 1).unwrap();
        g.add_fixed_edge(1, 0).unwrap();
        g.add_edge(1, 2).unwrap();
        let p = TrailPartition::singletons(&g);
        assert_eq!(orient_mixed(&g, &p).unwrap(), Solution::Infeasible);
    }

    #[test]
    fn agrees_with_brute_force_on_tiny_mixed_graphs() {
        use crate::oracle::generate::{gen_instances, InstanceSpec};
        use crate::oracle::verify::brute_force_feasible;
        let spec = InstanceSpec::Exhaustive {
            max_vertices: 3,
            max_edges: 4,
            directions: true,
            up_to_isomorphism: true,
        };
        for inst in gen_instances(&spec).unwrap() {
            let ours = orient_mixed(&inst.graph, &inst.trails).unwrap();
            let oracle = brute_force_feasible(&inst.graph, &inst.trails, 20).unwrap();
            assert_eq!(ours.is_feasible(), oracle.is_feasible(), "{inst:?}");
            if let Some(o) = ours.orientation() {
                assert!(verify(&inst.graph, &inst.trails, o).is_pass());
            }
        }
    }
}
