mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use trail_orient::connectivity::{
    components_without, find_bridges, is_strongly_connected, is_two_edge_connected,
};
use trail_orient::io::{format_instance, format_solution, parse_instance, parse_solution};
use trail_orient::linear::orient_linear;
use trail_orient::oracle::generate::{gen_instances, random_trail_partition, InstanceSpec};
use trail_orient::oracle::verify::verify;
use trail_orient::{naive, Instance, MultiGraph, VertexId};

/// Connected multigraph: vertex `v > 0` hangs off `parents[v - 1] % v`, then
/// extra edges (possibly loops and parallels). `directed[i]` fixes edge `i`.
#[derive(Clone, Debug)]
struct Shape {
    n: usize,
    parents: Vec<usize>,
    extra: Vec<(usize, usize)>,
    directed: Vec<bool>,
}

impl Shape {
    fn build(&self, with_directions: bool) -> MultiGraph {
        let mut edges: Vec<(VertexId, VertexId)> =
            self.parents.iter().enumerate().map(|(i, &p)| (p % (i + 1), i + 1)).collect();
        edges.extend(self.extra.iter().map(|&(u, v)| (u % self.n, v % self.n)));
        let mut g = MultiGraph::new(self.n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            if with_directions && self.directed.get(i).copied().unwrap_or(false) {
                g.add_fixed_edge(u, v).unwrap();
            } else {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }
}

fn shape(max_n: usize, max_extra: usize) -> impl Strategy<Value = Shape> {
    (1..=max_n).prop_flat_map(move |n| {
        (
            Just(n),
            proptest::collection::vec(0..max_n, n - 1),
            proptest::collection::vec((0..max_n, 0..max_n), 0..=max_extra),
            proptest::collection::vec(proptest::bool::weighted(0.3), n - 1 + max_extra),
        )
            .prop_map(|(n, parents, extra, directed)| Shape {
                n,
                parents,
                extra,
                directed,
            })
    })
}

fn instance(g: MultiGraph, seed: u64) -> Instance {
    let p = random_trail_partition(&g, &mut ChaCha8Rng::seed_from_u64(seed));
    Instance::new(g, p).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn instance_files_round_trip(s in shape(8, 8), directions in any::<bool>(), seed in any::<u64>()) {
        let inst = instance(s.build(directions), seed);
        let text = format_instance(&inst);
        prop_assert_eq!(parse_instance(&text).unwrap(), inst);
    }

    #[test]
    fn orientations_verify_and_round_trip(s in shape(10, 10), seed in any::<u64>()) {
        let inst = instance(s.build(false), seed);
        let (g, p) = (&inst.graph, &inst.trails);
        let sol = orient_linear(g, p).unwrap();
        prop_assert_eq!(sol.is_feasible(), is_two_edge_connected(g));
        prop_assert_eq!(naive::orient_trails(g, p).unwrap().is_feasible(), sol.is_feasible());
        if let Some(o) = sol.orientation() {
            prop_assert!(verify(g, p, o).is_pass());
            // reversing a strong orientation keeps it strong
            prop_assert!(verify(g, p, &o.reverse_all()).is_pass());
        }
        // a self-loop reads back as Forward whichever way it was assigned
        let text = format_solution(g, &sol).unwrap();
        let back = parse_solution(&text, g).unwrap();
        prop_assert_eq!(back.is_feasible(), sol.is_feasible());
        if let (Some(a), Some(b)) = (back.orientation(), sol.orientation()) {
            for (e, rec) in g.edges() {
                if !rec.is_loop() {
                    prop_assert_eq!(a.get(e), b.get(e));
                }
            }
            prop_assert!(verify(g, p, a).is_pass());
        }
    }

    #[test]
    fn applied_trails_are_directed_trails(s in shape(10, 10), seed in any::<u64>()) {
        let inst = instance(s.build(false), seed);
        let (g, p) = (&inst.graph, &inst.trails);
        if let Some(o) = naive::orient_trails(g, p).unwrap().orientation() {
            let d = g.apply_orientation(o).unwrap();
            for trail in &p.trails {
                // each edge starts where the previous one ended, reading the
                // trail in its listed order or backwards
                let arcs: Vec<_> = trail.iter().map(|&e| d.edge(e).arc().unwrap()).collect();
                let forward = arcs.windows(2).all(|w| w[0].1 == w[1].0);
                let backward = arcs.windows(2).all(|w| w[1].1 == w[0].0);
                prop_assert!(forward || backward, "{:?}", arcs);
            }
        }
    }

    #[test]
    fn bridges_match_deletion(s in shape(7, 4)) {
        let g = s.build(false);
        let (base, _) = components_without(&g, &vec![false; g.edge_count()]);
        let mut expected = Vec::new();
        for e in 0..g.edge_count() {
            let mut skip = vec![false; g.edge_count()];
            skip[e] = true;
            if components_without(&g, &skip).0 > base {
                expected.push(e);
            }
        }
        prop_assert_eq!(find_bridges(&g), expected);
    }

    #[test]
    fn contraction_keeps_strong_connectivity(s in shape(8, 10), mask in any::<u16>()) {
        let g = s.build(true);
        let block: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assume!(!block.is_empty());
        let (q, map) = g.contract(&block).unwrap();
        prop_assert_eq!(q.vertex_count(), g.vertex_count() + 1 - block.len());
        for (e, rec) in g.edges() {
            let inside = block.contains(&rec.tail) && block.contains(&rec.head);
            prop_assert_eq!(q.is_live(e), !inside);
            if !inside {
                let r = q.edge(e);
                prop_assert_eq!((r.tail, r.head), (map[rec.tail], map[rec.head]));
            }
        }
        if is_strongly_connected(&g) {
            prop_assert!(is_strongly_connected(&q));
        }
    }

    /// With a cut (A, B) crossed by exactly one arc A -> B and at least one
    /// arc B -> A, the digraph is strong iff both G/A and G/B are.
    #[test]
    fn strong_connectivity_splits_at_one_way_cuts(
        na in 1..6usize,
        nb in 1..6usize,
        inner in proptest::collection::vec((0..12usize, 0..12usize), 0..16),
        out_arc in (0..6usize, 0..6usize),
        back in proptest::collection::vec((0..6usize, 0..6usize), 1..4),
    ) {
        // A is 0..na, B is na..na + nb
        let mut d = MultiGraph::new(na + nb);
        for &(u, v) in &inner {
            let (u, v) = if u % 2 == 0 {
                (u % na, v % na)
            } else {
                (na + u % nb, na + v % nb)
            };
            d.add_fixed_edge(u, v).unwrap();
        }
        d.add_fixed_edge(out_arc.0 % na, na + out_arc.1 % nb).unwrap();
        for &(u, v) in &back {
            d.add_fixed_edge(na + u % nb, v % na).unwrap();
        }
        let a: Vec<VertexId> = (0..na).collect();
        let b: Vec<VertexId> = (na..na + nb).collect();
        let (ga, _) = d.contract(&a).unwrap();
        let (gb, _) = d.contract(&b).unwrap();
        prop_assert_eq!(
            is_strongly_connected(&d),
            is_strongly_connected(&ga) && is_strongly_connected(&gb)
        );
    }
}

#[test]
fn generators_are_seed_deterministic() {
    let specs = [
        InstanceSpec::RandomCubic { n: 200, seed: 4 },
        InstanceSpec::RandomTwoEdgeConnected {
            n: 12,
            extra_edges: 5,
            loops: true,
            count: 20,
            seed: 4,
        },
        InstanceSpec::MixedRandom {
            n: 8,
            extra_edges: 4,
            directed_percent: 30,
            motifs: true,
            count: 20,
            seed: 4,
        },
    ];
    for spec in specs {
        let a: Vec<_> = gen_instances(&spec).unwrap().collect();
        let b: Vec<_> = gen_instances(&spec).unwrap().collect();
        assert_eq!(a, b, "{spec:?}");
    }
}

#[test]
fn larger_random_graphs_match_two_edge_connectivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for i in 0..300 {
        let n = 10 + i % 40;
        let g = common::random_connected(n, n / 2 + i % 7, &mut rng);
        let p = random_trail_partition(&g, &mut rng);
        let expected = is_two_edge_connected(&g);
        for sol in [naive::orient_trails(&g, &p).unwrap(), orient_linear(&g, &p).unwrap()] {
            assert_eq!(sol.is_feasible(), expected);
            if let Some(o) = sol.orientation() {
                assert!(verify(&g, &p, o).is_pass());
            }
        }
    }
}
