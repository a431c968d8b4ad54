//! Constructors for the graph families and operations used as evidence:
//! webs, antiwebs, holes, antiholes, line graphs, ear-built hypomatchable
//! graphs, node stretchings, strip compositions, the minimal seeds G_LT and
//! G_EMN, and a seeded claw-free sampler for corpus building.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphError, NodeSet, Result};

/// Antiweb A(n,k): nodes 0..n-1, edges ij iff k <= |i-j| <= n-k.
pub fn antiweb(n: usize, k: usize) -> Result<Graph> {
    if k < 1 || 2 * k > n {
        return Err(GraphError::InvalidInput(format!(
            "antiweb requires 1 <= k and 2k <= n, got n={}, k={}",
            n, k
        )));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = j - i;
            if d >= k && d <= n - k {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Web W(n,k): nodes 0..n-1 on a circle, edges ij iff the circular distance
/// of i and j is at most k. Equivalently the complement of the antiweb
/// A(n,k+1) whenever that antiweb exists; the indexing follows the web
/// literature, so W(10,2) is the 10-node, 20-edge web with stability
/// number 3 and W(7,2) is the odd antihole on 7 nodes.
pub fn web(n: usize, k: usize) -> Result<Graph> {
    if k < 1 || 2 * k > n {
        return Err(GraphError::InvalidInput(format!(
            "web requires 1 <= k and 2k <= n, got n={}, k={}",
            n, k
        )));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = (j - i).min(n - (j - i));
            if d <= k {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Odd hole C_{2k+1}, k >= 2.
pub fn odd_hole(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(GraphError::InvalidInput("odd_hole requires k >= 2".into()));
    }
    Graph::cycle(2 * k + 1)
}

/// Odd antihole, the complement of C_{2k+1}, k >= 2.
pub fn odd_antihole(k: usize) -> Result<Graph> {
    Ok(odd_hole(k)?.complement())
}

/// Line graph: one node per edge of the root (lexicographic edge order),
/// adjacency iff the edges share an endpoint.
pub fn line_graph(h: &Graph) -> Result<Graph> {
    let root_edges = h.edges();
    if root_edges.is_empty() {
        return Err(GraphError::InvalidInput(
            "line_graph requires a root graph with at least one edge".into(),
        ));
    }
    let n = root_edges.len();
    let mut edges = Vec::new();
    for i in 0..n {
        let (a, b) = root_edges[i];
        for (j, &(c, d)) in root_edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// An odd ear: an odd-edge-count path glued between two distinct existing
/// nodes. `length` counts edges; internal nodes are appended.
#[derive(Clone, Copy, Debug)]
pub struct Ear {
    pub a: usize,
    pub b: usize,
    pub length: usize,
}

/// Recipe for a 2-connected hypomatchable graph: an odd cycle plus odd ears.
#[derive(Clone, Debug)]
pub struct EarDecompositionSpec {
    pub initial_cycle: usize,
    pub ears: Vec<Ear>,
}

/// Build the root graph from an ear decomposition and verify the result is
/// hypomatchable (every one-node deletion has a perfect matching).
pub fn hypomatchable_from_ears(spec: &EarDecompositionSpec) -> Result<Graph> {
    let c = spec.initial_cycle;
    if c < 3 || c % 2 == 0 {
        return Err(GraphError::InvalidInput(format!(
            "initial cycle length must be odd and >= 3, got {}",
            c
        )));
    }
    let mut n = c;
    let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    for ear in &spec.ears {
        if ear.length % 2 == 0 || ear.length == 0 {
            return Err(GraphError::InvalidInput(format!(
                "ear must have an odd number of edges, got {}",
                ear.length
            )));
        }
        if ear.a == ear.b || ear.a >= n || ear.b >= n {
            return Err(GraphError::InvalidInput(format!(
                "ear endpoints must be distinct existing nodes, got {} and {} with {} nodes",
                ear.a, ear.b, n
            )));
        }
        if ear.length == 1 {
            if edges.contains(&(ear.a.min(ear.b), ear.a.max(ear.b))) {
                return Err(GraphError::InvalidInput(format!(
                    "chord ear {}-{} duplicates an existing edge",
                    ear.a, ear.b
                )));
            }
            edges.push((ear.a.min(ear.b), ear.a.max(ear.b)));
        } else {
            let mut prev = ear.a;
            for step in 0..ear.length - 1 {
                let fresh = n + step;
                edges.push((prev.min(fresh), prev.max(fresh)));
                prev = fresh;
            }
            edges.push((prev.min(ear.b), prev.max(ear.b)));
            n += ear.length - 1;
        }
    }
    let g = Graph::from_edges(n, &edges)?;
    for v in 0..n {
        if !g.delete_node(v)?.has_perfect_matching() {
            return Err(GraphError::InvalidInput(format!(
                "ear decomposition does not yield a hypomatchable graph (deleting node {} leaves no perfect matching)",
                v
            )));
        }
    }
    Ok(g)
}

/// Recipe for a node stretching: a target node and a bipartition of its
/// neighborhood into two nonempty parts.
#[derive(Clone, Copy, Debug)]
pub struct StretchSpec {
    pub v: usize,
    pub a1: NodeSet,
    pub a2: NodeSet,
}

/// Replace `v` by the path v1 - w - v2 with v_i joined to A_i. v1 keeps v's
/// id, w and v2 take ids n and n+1.
pub fn node_stretching(g: &Graph, spec: &StretchSpec) -> Result<Graph> {
    let n = g.node_count();
    if spec.v >= n {
        return Err(GraphError::InvalidInput(format!("node {} out of range", spec.v)));
    }
    let nv = g.neighbors(spec.v);
    if spec.a1.is_empty()
        || spec.a2.is_empty()
        || spec.a1.0 & spec.a2.0 != 0
        || spec.a1.0 | spec.a2.0 != nv.0
    {
        return Err(GraphError::InvalidInput(format!(
            "({:?}, {:?}) is not a partition of N({}) = {:?} into nonempty parts",
            spec.a1, spec.a2, spec.v, nv
        )));
    }
    let w = n;
    let v2 = n + 1;
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| a != spec.v && b != spec.v)
        .collect();
    for u in spec.a1.iter() {
        edges.push((u.min(spec.v), u.max(spec.v)));
    }
    for u in spec.a2.iter() {
        edges.push((u, v2));
    }
    edges.push((spec.v, w));
    edges.push((w, v2));
    Graph::from_edges(n + 2, &edges)
}

/// All node stretchings of `v`: one per unordered bipartition of N(v).
pub fn all_stretchings(g: &Graph, v: usize) -> Result<Vec<Graph>> {
    let nv: Vec<usize> = g.neighbors(v).iter().collect();
    let d = nv.len();
    if d < 2 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    // fix nv[0] in A1 to avoid mirrored partitions
    for mask in 0..(1u64 << (d - 1)) {
        let mut a1 = NodeSet::singleton(nv[0]);
        let mut a2 = NodeSet::EMPTY;
        for (i, &u) in nv.iter().enumerate().skip(1) {
            if mask >> (i - 1) & 1 == 1 {
                a1.insert(u);
            } else {
                a2.insert(u);
            }
        }
        if a2.is_empty() {
            continue;
        }
        out.push(node_stretching(g, &StretchSpec { v, a1, a2 })?);
    }
    Ok(out)
}

/// The odd antihole complement-of-C5 on nodes 1..5 used by both seeds:
/// edges 13, 14, 24, 25, 35.
fn seed_antihole_edges() -> Vec<(usize, usize)> {
    vec![(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]
}

/// The 6-node minimally LS+-imperfect seed with deg(v) = 4: node 0 is
/// adjacent to 1,2,3,4 of the antihole on 1..5.
pub fn g_lt() -> Graph {
    let mut edges = seed_antihole_edges();
    edges.extend([(0, 1), (0, 2), (0, 3), (0, 4)]);
    Graph::from_edges(6, &edges).expect("static graph")
}

/// The 6-node minimally LS+-imperfect seed with deg(v) = 3: node 0 is
/// adjacent to 1,2,4 (its non-neighbors 3,5 are adjacent in the antihole).
pub fn g_emn() -> Graph {
    let mut edges = seed_antihole_edges();
    edges.extend([(0, 1), (0, 2), (0, 4)]);
    Graph::from_edges(6, &edges).expect("static graph")
}

/// Compose two strips: drop the designated simplicial nodes and join the
/// neighborhoods of a1 with a2 and of b1 with b2. g1-remnant ids first.
pub fn strip_composition(
    g1: &Graph,
    a1: usize,
    b1: usize,
    g2: &Graph,
    a2: usize,
    b2: usize,
) -> Result<Graph> {
    for (g, a, b, name) in [(g1, a1, b1, "first"), (g2, a2, b2, "second")] {
        if a == b || a >= g.node_count() || b >= g.node_count() {
            return Err(GraphError::InvalidInput(format!(
                "designated nodes of the {} strip must be distinct in-range nodes",
                name
            )));
        }
        for v in [a, b] {
            if !g.is_clique(g.neighbors(v)) {
                return Err(GraphError::InvalidInput(format!(
                    "node {} of the {} strip is not simplicial",
                    v, name
                )));
            }
        }
    }
    let remnant = |g: &Graph, a: usize, b: usize| -> Vec<usize> {
        (0..g.node_count()).filter(|&v| v != a && v != b).collect()
    };
    let r1 = remnant(g1, a1, b1);
    let r2 = remnant(g2, a2, b2);
    let n = r1.len() + r2.len();
    let pos1: std::collections::HashMap<usize, usize> =
        r1.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let pos2: std::collections::HashMap<usize, usize> =
        r2.iter().enumerate().map(|(i, &v)| (v, r1.len() + i)).collect();
    let mut edges = Vec::new();
    for (u, v) in g1.edges() {
        if let (Some(&pu), Some(&pv)) = (pos1.get(&u), pos1.get(&v)) {
            edges.push((pu, pv));
        }
    }
    for (u, v) in g2.edges() {
        if let (Some(&pu), Some(&pv)) = (pos2.get(&u), pos2.get(&v)) {
            edges.push((pu, pv));
        }
    }
    let cross = |na: NodeSet, nb: NodeSet, edges: &mut Vec<(usize, usize)>| {
        for u in na.iter() {
            if let Some(&pu) = pos1.get(&u) {
                for v in nb.iter() {
                    if let Some(&pv) = pos2.get(&v) {
                        let e = (pu.min(pv), pu.max(pv));
                        if !edges.contains(&e) {
                            edges.push(e);
                        }
                    }
                }
            }
        }
    };
    cross(g1.neighbors(a1), g2.neighbors(a2), &mut edges);
    cross(g1.neighbors(b1), g2.neighbors(b2), &mut edges);
    Graph::from_edges(n, &edges)
}

/// Deterministic claw-free sampler. Mixes line graphs, webs, and joins of an
/// odd antihole with a clique, plus plain rejection sampling; the output is
/// always checked claw-free.
pub fn random_claw_free(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 || n > 14 {
        return Err(GraphError::InvalidInput(
            "random_claw_free supports 1 <= n <= 14".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32));
    for attempt in 0..10_000 {
        let recipe = if attempt < 40 { rng.gen_range(0..4) } else { 3 };
        let candidate: Option<Graph> = match recipe {
            0 => random_line_graph(n, &mut rng),
            1 if n >= 2 => {
                let k = rng.gen_range(1..=n / 2);
                web(n, k).ok()
            }
            2 if n >= 5 => {
                let k = rng.gen_range(2..=(n - 1) / 2);
                odd_antihole(k)
                    .ok()
                    .zip(Graph::complete(n - 2 * k - 1).ok())
                    .and_then(|(hole, rest)| hole.complete_join(&rest).ok())
            }
            _ => {
                let p: f64 = rng.gen_range(0.35..0.9);
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edges(n, &edges).ok()
            }
        };
        if let Some(g) = candidate {
            if g.node_count() == n && g.is_claw_free() {
                return Ok(g);
            }
        }
    }
    // dense graphs are claw-free less often at larger n, but the complete
    // graph always is
    Graph::complete(n)
}

fn random_line_graph(n: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    // choose a root with exactly n edges
    let mut root_n = 3;
    while root_n * (root_n - 1) / 2 < n {
        root_n += 1;
    }
    root_n = rng.gen_range(root_n..=(root_n + 3).min(14));
    if root_n * (root_n - 1) / 2 < n {
        return None;
    }
    let mut pairs: Vec<(usize, usize)> = (0..root_n)
        .flat_map(|u| (u + 1..root_n).map(move |v| (u, v)))
        .collect();
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.gen_range(0..=i));
    }
    let root = Graph::from_edges(root_n, &pairs[..n]).ok()?;
    line_graph(&root).ok()
}
