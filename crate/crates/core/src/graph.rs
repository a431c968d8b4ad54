//! Exact finite simple graphs on up to 32 nodes, backed by per-node
//! adjacency bitsets. All operations return fresh values; graphs are
//! immutable after construction.

use std::fmt;

use thiserror::Error;

/// Hard cap on node count. Everything downstream assumes bitsets fit in a u64
/// and exact searches stay cheap.
pub const MAX_NODES: usize = 32;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, GraphError>;

/// A set of node ids of some host graph, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NodeSet(pub u64);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn singleton(v: usize) -> Self {
        NodeSet(1 << v)
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = 0u64;
        for v in iter {
            s |= 1 << v;
        }
        NodeSet(s)
    }

    pub fn full(n: usize) -> Self {
        if n == 64 {
            NodeSet(u64::MAX)
        } else {
            NodeSet((1u64 << n) - 1)
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(&self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite simple graph with dense 0-based node ids.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({};", self.n)?;
        for (u, v) in self.edges() {
            write!(f, " {}-{}", u, v)?;
        }
        write!(f, ")")
    }
}

impl Graph {
    /// Graph with `n` nodes and no edges.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_NODES {
            return Err(GraphError::Capacity(format!(
                "{} nodes exceeds the cap of {}",
                n, MAX_NODES
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        if n >= 3 {
            for u in 0..n {
                g.add_edge(u, (u + 1) % n)?;
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 1..n {
            g.add_edge(u - 1, u)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::InvalidInput(format!(
                "edge ({},{}) out of range for {} nodes",
                u, v, self.n
            )));
        }
        if u == v {
            return Err(GraphError::InvalidInput(format!("loop at node {}", u)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> NodeSet {
        NodeSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn nodes(&self) -> NodeSet {
        NodeSet::full(self.n)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut rest = self.adj[u] >> (u + 1) << (u + 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Complement on the same node set.
    pub fn complement(&self) -> Graph {
        let full = NodeSet::full(self.n).0;
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced on `s`, nodes relabeled 0..|s|-1 preserving id order.
    pub fn induced_subgraph(&self, s: NodeSet) -> Result<Graph> {
        if !s.is_subset_of(self.nodes()) {
            return Err(GraphError::InvalidInput(format!(
                "node set {:?} not contained in 0..{}",
                s, self.n
            )));
        }
        let ids: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(ids.len())?;
        for (i, &u) in ids.iter().enumerate() {
            for (j, &v) in ids.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    pub fn delete_node(&self, v: usize) -> Result<Graph> {
        let mut s = self.nodes();
        s.remove(v);
        self.induced_subgraph(s)
    }

    /// Disjoint union plus all edges between the two parts; `self` ids first.
    pub fn complete_join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v)?;
        }
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v)?;
            }
        }
        Ok(g)
    }

    /// Disjoint union without cross edges; `self` ids first.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v)?;
        }
        Ok(g)
    }

    /// True iff no node has three pairwise non-adjacent neighbors.
    pub fn is_claw_free(&self) -> bool {
        for v in 0..self.n {
            let nb: Vec<usize> = self.neighbors(v).iter().collect();
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &c in nb.iter().skip(j + 1) {
                        if !self.has_edge(a, c) && !self.has_edge(b, c) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// True iff every neighborhood splits into two cliques, i.e. the
    /// complement of every induced neighborhood is bipartite.
    pub fn is_quasi_line(&self) -> bool {
        for v in 0..self.n {
            let h = self
                .induced_subgraph(self.neighbors(v))
                .expect("neighborhood is a valid node set");
            if !h.complement().is_bipartite() {
                return false;
            }
        }
        true
    }

    /// Two-coloring by BFS over every component.
    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// A two-coloring (sides as node sets) if one exists.
    pub fn bipartition(&self) -> Option<(NodeSet, NodeSet)> {
        let mut color = vec![-1i8; self.n];
        let mut sides = (NodeSet::EMPTY, NodeSet::EMPTY);
        for start in 0..self.n {
            if color[start] >= 0 {
                continue;
            }
            color[start] = 0;
            sides.0.insert(start);
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for w in self.neighbors(u).iter() {
                    if color[w] < 0 {
                        color[w] = 1 - color[u];
                        if color[w] == 0 {
                            sides.0.insert(w);
                        } else {
                            sides.1.insert(w);
                        }
                        queue.push(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(sides)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = NodeSet::singleton(0);
        let mut stack = vec![0usize];
        while let Some(u) = stack.pop() {
            for w in self.neighbors(u).iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == self.n
    }

    /// Whether `s` is a clique.
    pub fn is_clique(&self, s: NodeSet) -> bool {
        s.iter().all(|u| {
            let rest = NodeSet(s.0 & !(1 << u) & !self.adj[u]);
            rest.is_empty()
        })
    }

    /// Whether `s` is a stable set.
    pub fn is_stable(&self, s: NodeSet) -> bool {
        s.iter().all(|u| self.adj[u] & s.0 == 0)
    }

    /// Exact maximum stable set size, by branch and bound over bitsets.
    pub fn stability_number(&self) -> Result<usize> {
        if self.n > MAX_NODES {
            return Err(GraphError::Capacity(format!(
                "stability_number capped at n <= {}",
                MAX_NODES
            )));
        }
        fn mis(g: &Graph, candidates: u64, best: &mut usize, current: usize) {
            if current + candidates.count_ones() as usize <= *best {
                return;
            }
            if candidates == 0 {
                *best = (*best).max(current);
                return;
            }
            // branch on a candidate of maximum remaining degree
            let v = {
                let mut best_v = candidates.trailing_zeros() as usize;
                let mut best_deg = 0usize;
                let mut bits = candidates;
                while bits != 0 {
                    let u = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let d = (g.adj[u] & candidates).count_ones() as usize;
                    if d > best_deg {
                        best_deg = d;
                        best_v = u;
                    }
                }
                best_v
            };
            // include v
            mis(g, candidates & !(1 << v) & !g.adj[v], best, current + 1);
            // exclude v
            mis(g, candidates & !(1 << v), best, current);
        }
        let mut best = 0usize;
        mis(self, NodeSet::full(self.n).0, &mut best, 0);
        Ok(best)
    }

    /// All stable sets including the empty set, sorted by bitmask value.
    pub fn enumerate_stable_sets(&self) -> Result<Vec<NodeSet>> {
        if self.n > 24 {
            return Err(GraphError::Capacity(
                "enumerate_stable_sets capped at n <= 24".into(),
            ));
        }
        let mut out = Vec::new();
        fn rec(g: &Graph, next: usize, chosen: u64, forbidden: u64, out: &mut Vec<NodeSet>) {
            out.push(NodeSet(chosen));
            for v in next..g.n {
                if forbidden >> v & 1 == 0 {
                    rec(g, v + 1, chosen | 1 << v, forbidden | 1 << v | g.adj[v], out);
                }
            }
        }
        rec(self, 0, 0, 0, &mut out);
        out.sort();
        Ok(out)
    }

    /// All inclusion-maximal cliques, via Bron-Kerbosch with pivoting.
    /// Output sorted by bitmask value.
    pub fn enumerate_maximal_cliques(&self) -> Result<Vec<NodeSet>> {
        if self.n > 24 {
            return Err(GraphError::Capacity(
                "enumerate_maximal_cliques capped at n <= 24".into(),
            ));
        }
        let mut out = Vec::new();
        fn bk(g: &Graph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<NodeSet>) {
            if p == 0 && x == 0 {
                out.push(NodeSet(r));
                return;
            }
            // pivot: node of p|x with most neighbors in p
            let mut pivot = 0usize;
            let mut best = usize::MAX;
            let mut bits = p | x;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let missing = (p & !g.adj[u]).count_ones() as usize;
                if missing < best {
                    best = missing;
                    pivot = u;
                }
            }
            let mut cand = p & !g.adj[pivot];
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                bk(g, r | 1 << v, p & g.adj[v], x & g.adj[v], out);
                p &= !(1 << v);
                x |= 1 << v;
            }
        }
        if self.n > 0 {
            bk(self, 0, NodeSet::full(self.n).0, 0, &mut out);
        }
        out.sort();
        Ok(out)
    }

    /// Whether the graph has a perfect matching (exact backtracking; used by
    /// the hypomatchability checks on small root graphs).
    pub fn has_perfect_matching(&self) -> bool {
        if self.n % 2 == 1 {
            return false;
        }
        fn rec(g: &Graph, unmatched: u64) -> bool {
            if unmatched == 0 {
                return true;
            }
            let u = unmatched.trailing_zeros() as usize;
            let mut cand = g.adj[u] & unmatched;
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                if rec(g, unmatched & !(1 << u) & !(1 << v)) {
                    return true;
                }
            }
            false
        }
        rec(self, NodeSet::full(self.n).0)
    }

    /// Edge-preserving bijection test by backtracking with degree and
    /// neighbor-degree pruning.
    pub fn is_isomorphic_to(&self, other: &Graph) -> Result<bool> {
        if self.n > 16 || other.n > 16 {
            return Err(GraphError::Capacity(
                "isomorphism test capped at n <= 16".into(),
            ));
        }
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        let inv = |g: &Graph| -> Vec<(usize, Vec<usize>)> {
            (0..g.n)
                .map(|v| {
                    let mut nd: Vec<usize> =
                        g.neighbors(v).iter().map(|w| g.degree(w)).collect();
                    nd.sort_unstable();
                    (g.degree(v), nd)
                })
                .collect()
        };
        let inv1 = inv(self);
        let inv2 = inv(other);
        {
            let mut s1 = inv1.clone();
            let mut s2 = inv2.clone();
            s1.sort();
            s2.sort();
            if s1 != s2 {
                return Ok(false);
            }
        }
        // map[u] = image of u in other, or usize::MAX
        fn rec(
            g1: &Graph,
            g2: &Graph,
            inv1: &[(usize, Vec<usize>)],
            inv2: &[(usize, Vec<usize>)],
            map: &mut Vec<usize>,
            used: &mut u64,
            u: usize,
        ) -> bool {
            if u == g1.n {
                return true;
            }
            for w in 0..g2.n {
                if *used >> w & 1 == 1 || inv1[u] != inv2[w] {
                    continue;
                }
                let ok = (0..u).all(|p| g1.has_edge(p, u) == g2.has_edge(map[p], w));
                if ok {
                    map[u] = w;
                    *used |= 1 << w;
                    if rec(g1, g2, inv1, inv2, map, used, u + 1) {
                        return true;
                    }
                    *used &= !(1 << w);
                    map[u] = usize::MAX;
                }
            }
            false
        }
        let mut map = vec![usize::MAX; self.n];
        let mut used = 0u64;
        Ok(rec(self, other, &inv1, &inv2, &mut map, &mut used, 0))
    }

    /// Relabel nodes by `perm` (node v of self becomes perm[v]).
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(GraphError::InvalidInput("permutation length mismatch".into()));
        }
        let edges: Vec<(usize, usize)> =
            self.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.n, &edges)
    }

    /// Parse the edge-list text format: line 1 = "n m", then m lines "u v"
    /// with 0 <= u < v < n. Duplicate or out-of-range edges are rejected.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or(GraphError::Parse { line: 1, msg: "missing header".into() })?;
        let parts: Vec<&str> = header.split(' ').collect();
        if parts.len() != 2 {
            return Err(GraphError::Parse {
                line: 1,
                msg: format!("expected \"n m\", got {:?}", header),
            });
        }
        let parse_num = |s: &str, line: usize| -> Result<usize> {
            s.parse().map_err(|_| GraphError::Parse {
                line,
                msg: format!("not a number: {:?}", s),
            })
        };
        let n = parse_num(parts[0], 1)?;
        let m = parse_num(parts[1], 1)?;
        let mut g = Graph::empty(n)?;
        let mut count = 0usize;
        for (idx, line) in lines {
            let lineno = idx + 1;
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split(' ').collect();
            if parts.len() != 2 {
                return Err(GraphError::Parse {
                    line: lineno,
                    msg: format!("expected \"u v\", got {:?}", line),
                });
            }
            let u = parse_num(parts[0], lineno)?;
            let v = parse_num(parts[1], lineno)?;
            if u >= v {
                return Err(GraphError::Parse {
                    line: lineno,
                    msg: format!("edges must satisfy u < v, got {} {}", u, v),
                });
            }
            if v >= n {
                return Err(GraphError::Parse {
                    line: lineno,
                    msg: format!("node {} out of range for n = {}", v, n),
                });
            }
            if g.has_edge(u, v) {
                return Err(GraphError::Parse {
                    line: lineno,
                    msg: format!("duplicate edge {} {}", u, v),
                });
            }
            g.add_edge(u, v).map_err(|e| GraphError::Parse {
                line: lineno,
                msg: e.to_string(),
            })?;
            count += 1;
        }
        if count != m {
            return Err(GraphError::Parse {
                line: 1,
                msg: format!("header declares {} edges, found {}", m, count),
            });
        }
        Ok(g)
    }

    /// Emit the edge-list text format (LF line endings, trailing newline).
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_is_empty() {
        let k3 = Graph::complete(3).unwrap();
        let c = k3.complement();
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.node_count(), 3);
    }

    #[test]
    fn complement_is_involution() {
        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(c7.complement().complement(), c7);
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5).unwrap();
        // explicit relabeling 0,2,4,1,3
        let relabeled = c5.relabeled(&[0, 2, 4, 1, 3]).unwrap();
        assert_eq!(relabeled, c5.complement());
        assert!(c5.is_isomorphic_to(&c5.complement()).unwrap());
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let p3 = c5.induced_subgraph(NodeSet::from_iter([0, 1, 2])).unwrap();
        assert_eq!(p3, Graph::path(3).unwrap());
        assert_eq!(c5.induced_subgraph(c5.nodes()).unwrap(), c5);
        assert!(c5.induced_subgraph(NodeSet::from_iter([0, 7])).is_err());
    }

    #[test]
    fn complete_join_examples() {
        let k1 = Graph::complete(1).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        let wheel = k1.complete_join(&c5).unwrap();
        assert_eq!(wheel.node_count(), 6);
        assert_eq!(wheel.edge_count(), 10);
        assert_eq!(wheel.degree(0), 5);

        let claw = k1.complete_join(&Graph::empty(3).unwrap()).unwrap();
        assert!(!claw.is_claw_free());
        assert_eq!(claw.stability_number().unwrap(), 3);
    }

    #[test]
    fn claw_free_checks() {
        assert!(Graph::cycle(5).unwrap().is_claw_free());
        assert!(Graph::complete(6).unwrap().is_claw_free());
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!claw.is_claw_free());
    }

    #[test]
    fn quasi_line_checks() {
        assert!(Graph::complete(5).unwrap().is_quasi_line());
        let wheel = Graph::complete(1)
            .unwrap()
            .complete_join(&Graph::cycle(5).unwrap())
            .unwrap();
        assert!(!wheel.is_quasi_line()); // hub neighborhood complement is C5
        assert!(wheel.is_claw_free());
    }

    #[test]
    fn stability_numbers() {
        assert_eq!(Graph::cycle(5).unwrap().stability_number().unwrap(), 2);
        assert_eq!(Graph::cycle(9).unwrap().stability_number().unwrap(), 4);
        assert_eq!(Graph::complete(7).unwrap().stability_number().unwrap(), 1);
        assert_eq!(Graph::empty(6).unwrap().stability_number().unwrap(), 6);
    }

    #[test]
    fn stable_set_enumeration() {
        let e2 = Graph::empty(2).unwrap();
        assert_eq!(e2.enumerate_stable_sets().unwrap().len(), 4);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.enumerate_stable_sets().unwrap().len(), 11);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.enumerate_stable_sets().unwrap().len(), 5);
    }

    #[test]
    fn stable_sets_match_alpha_small() {
        for g in [
            Graph::cycle(7).unwrap(),
            Graph::path(6).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::cycle(9).unwrap().complement(),
        ] {
            let max = g
                .enumerate_stable_sets()
                .unwrap()
                .iter()
                .map(|s| s.len())
                .max()
                .unwrap();
            assert_eq!(max, g.stability_number().unwrap());
        }
    }

    #[test]
    fn maximal_cliques() {
        let c5 = Graph::cycle(5).unwrap();
        let cliques = c5.enumerate_maximal_cliques().unwrap();
        assert_eq!(cliques.len(), 5);
        assert!(cliques.iter().all(|c| c.len() == 2));

        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            k4.enumerate_maximal_cliques().unwrap(),
            vec![NodeSet::full(4)]
        );

        let wheel = Graph::complete(1)
            .unwrap()
            .complete_join(&Graph::cycle(5).unwrap())
            .unwrap();
        let tri = wheel.enumerate_maximal_cliques().unwrap();
        assert_eq!(tri.len(), 5);
        assert!(tri.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn isomorphism_examples() {
        let c6 = Graph::cycle(6).unwrap();
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!c6.is_isomorphic_to(&two_triangles).unwrap());

        let g = Graph::cycle(7).unwrap().complement();
        let relabeled = g.relabeled(&[3, 5, 0, 1, 6, 2, 4]).unwrap();
        assert!(g.is_isomorphic_to(&relabeled).unwrap());
    }

    #[test]
    fn perfect_matching() {
        assert!(Graph::cycle(6).unwrap().has_perfect_matching());
        assert!(!Graph::cycle(5).unwrap().has_perfect_matching());
        assert!(!Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap().has_perfect_matching());
        assert!(Graph::path(4).unwrap().has_perfect_matching());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_parse_examples() {
        let g = Graph::parse_edge_list("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3).unwrap());

        // rejections
        assert!(Graph::parse_edge_list("3 1\n1 0\n").is_err()); // u >= v
        assert!(Graph::parse_edge_list("3 1\n0 3\n").is_err()); // out of range
        assert!(Graph::parse_edge_list("3 2\n0 1\n0 1\n").is_err()); // duplicate
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err()); // count mismatch
    }

    #[test]
    fn capacity_errors() {
        assert!(Graph::empty(40).is_err());
        let g = Graph::empty(30).unwrap();
        assert!(g.enumerate_stable_sets().is_err());
        assert!(g.is_isomorphic_to(&g).is_err());
    }
}
