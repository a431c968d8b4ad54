//! Rank, clique family and joined antiweb inequalities, plus recognition of
//! joined antiweb constraints among STAB facets. A graph is joined a-perfect
//! when every nontrivial facet of its stable set polytope is a joined
//! antiweb constraint.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::generators;
use crate::graph::{Graph, GraphError, NodeSet};
use crate::polytope::{self, LinearInequality, PolytopeError, Rational};

#[derive(Debug, Error)]
pub enum IneqError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

pub type Result<T> = std::result::Result<T, IneqError>;

fn rat(n: i64) -> Rational {
    BigRational::from_integer(n.into())
}

/// Rank inequality x(S) <= alpha(G[S]).
pub fn rank_inequality(g: &Graph, s: NodeSet) -> Result<LinearInequality> {
    if s.len() == 0 {
        return Err(IneqError::InvalidInput("empty support".into()));
    }
    let alpha = g.induced_subgraph(s)?.stability_number()?;
    let mut coeffs = vec![Rational::zero(); g.node_count()];
    for v in s.iter() {
        coeffs[v] = Rational::one();
    }
    Ok(LinearInequality::new(coeffs, rat(alpha as i64)))
}

/// A family of cliques with an integer parameter p < |F|.
#[derive(Clone, Debug)]
pub struct CliqueFamilySpec {
    pub cliques: Vec<NodeSet>,
    pub p: usize,
}

/// Clique family inequality: with nF = |F|, r = nF mod p, W the nodes in at
/// least p members of F and W_o the nodes in exactly p-1 members,
/// (p-r) x(W) + (p-r-1) x(W_o) <= (p-r) floor(nF/p).
pub fn clique_family_inequality(g: &Graph, spec: &CliqueFamilySpec) -> Result<LinearInequality> {
    let nf = spec.cliques.len();
    if spec.p == 0 || spec.p >= nf {
        return Err(IneqError::InvalidInput(format!(
            "parameter p = {} must satisfy 1 <= p < |F| = {}",
            spec.p, nf
        )));
    }
    for q in &spec.cliques {
        if !g.is_clique(*q) {
            return Err(IneqError::InvalidInput(format!(
                "family member {:?} is not a clique",
                q
            )));
        }
    }
    let p = spec.p;
    let r = nf % p;
    let mut count = vec![0usize; g.node_count()];
    for q in &spec.cliques {
        for v in q.iter() {
            count[v] += 1;
        }
    }
    let mut coeffs = vec![Rational::zero(); g.node_count()];
    for (v, &c) in count.iter().enumerate() {
        if c >= p {
            coeffs[v] = rat((p - r) as i64);
        } else if c + 1 == p {
            coeffs[v] = rat((p - r - 1) as i64);
        }
    }
    let rhs = rat(((p - r) * (nf / p)) as i64);
    Ok(LinearInequality::new(coeffs, rhs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartKind {
    Clique,
    Antiweb { n: usize, k: usize },
}

#[derive(Clone, Debug)]
pub struct Part {
    pub nodes: NodeSet,
    pub kind: PartKind,
    pub alpha: usize,
}

/// A complete-join decomposition of a node set into antiwebs and a clique.
#[derive(Clone, Debug)]
pub struct JoinedAntiwebDecomposition {
    pub support: NodeSet,
    pub parts: Vec<Part>,
}

impl JoinedAntiwebDecomposition {
    fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = NodeSet(0);
        for part in &self.parts {
            if part.nodes.len() == 0 {
                return Err(IneqError::InvalidInput("empty part".into()));
            }
            for v in part.nodes.iter() {
                if seen.contains(v) {
                    return Err(IneqError::InvalidInput("parts overlap".into()));
                }
                seen.insert(v);
            }
            let induced = g.induced_subgraph(part.nodes)?;
            match part.kind {
                PartKind::Clique => {
                    if !g.is_clique(part.nodes) || part.alpha != 1 {
                        return Err(IneqError::InvalidInput(
                            "declared clique part is not a clique".into(),
                        ));
                    }
                }
                PartKind::Antiweb { n, k } => {
                    let template = generators::antiweb(n, k)?;
                    if !induced.is_isomorphic_to(&template)? || part.alpha != k {
                        return Err(IneqError::InvalidInput(format!(
                            "declared antiweb({}, {}) part does not match",
                            n, k
                        )));
                    }
                }
            }
        }
        if seen != self.support {
            return Err(IneqError::InvalidInput(
                "parts do not partition the support".into(),
            ));
        }
        for (i, a) in self.parts.iter().enumerate() {
            for b in self.parts.iter().skip(i + 1) {
                for u in a.nodes.iter() {
                    for v in b.nodes.iter() {
                        if !g.has_edge(u, v) {
                            return Err(IneqError::InvalidInput(format!(
                                "parts are not completely joined: missing edge {} {}",
                                u.min(v),
                                u.max(v)
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Joined antiweb inequality: sum over parts of (1/alpha(part)) x(part) <= 1,
/// rescaled to coprime integers.
pub fn joined_antiweb_inequality(
    g: &Graph,
    d: &JoinedAntiwebDecomposition,
) -> Result<LinearInequality> {
    d.validate(g)?;
    let mut coeffs = vec![Rational::zero(); g.node_count()];
    for part in &d.parts {
        let c = Rational::new(1.into(), (part.alpha as i64).into());
        for v in part.nodes.iter() {
            coeffs[v] = c.clone();
        }
    }
    Ok(LinearInequality::new(coeffs, Rational::one()))
}

/// Scan all feasible k for an isomorphism with antiweb(n, k).
pub fn recognize_antiweb(g: &Graph) -> Result<Option<(usize, usize)>> {
    let n = g.node_count();
    if n > 14 {
        return Err(IneqError::InvalidInput(
            "antiweb recognition capped at 14 nodes".into(),
        ));
    }
    for k in 1..=n / 2 {
        let template = generators::antiweb(n, k)?;
        if g.edge_count() == template.edge_count() && g.is_isomorphic_to(&template)? {
            return Ok(Some((n, k)));
        }
    }
    Ok(None)
}

/// Connected components of the complement of G[support], as sets of host
/// node ids. This is the unique finest partition into completely joined
/// parts.
pub fn co_components(g: &Graph, support: NodeSet) -> Vec<NodeSet> {
    let mut remaining: Vec<usize> = support.iter().collect();
    let mut comps = Vec::new();
    while let Some(start) = remaining.pop() {
        let mut comp = NodeSet::singleton(start);
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            remaining.retain(|&v| {
                if !g.has_edge(u, v) {
                    comp.insert(v);
                    queue.push(v);
                    false
                } else {
                    true
                }
            });
        }
        comps.push(comp);
    }
    comps.sort_by_key(|c| c.0);
    comps
}

/// Try to read an inequality as a joined antiweb constraint of g. Positive
/// scalings of the same inequality give identical results. Singleton
/// co-components of the support merge into the clique part.
pub fn recognize_joined_antiweb(
    g: &Graph,
    ineq: &LinearInequality,
) -> Result<Option<JoinedAntiwebDecomposition>> {
    if g.node_count() > 14 {
        return Err(IneqError::InvalidInput(
            "recognition capped at 14 nodes".into(),
        ));
    }
    let rhs = ineq.rhs();
    if !rhs.is_positive() || ineq.coeffs().iter().any(|c| c.is_negative()) {
        return Ok(None);
    }
    let support = NodeSet::from_iter(ineq.support());
    if support.len() == 0 {
        return Ok(None);
    }
    let mut parts = Vec::new();
    let mut clique_nodes = NodeSet(0);
    for comp in co_components(g, support) {
        if comp.len() == 1 {
            for v in comp.iter() {
                clique_nodes.insert(v);
            }
            continue;
        }
        let induced = g.induced_subgraph(comp)?;
        let Some((n, k)) = recognize_antiweb(&induced)? else {
            return Ok(None);
        };
        parts.push(Part { nodes: comp, kind: PartKind::Antiweb { n, k }, alpha: k });
    }
    if clique_nodes.len() > 0 {
        parts.push(Part { nodes: clique_nodes, kind: PartKind::Clique, alpha: 1 });
    }
    // coefficient pattern: scaled so rhs becomes 1, each node of a part with
    // stability number a must carry coefficient 1/a, i.e. coeff * a = rhs
    for part in &parts {
        let alpha = rat(part.alpha as i64);
        for v in part.nodes.iter() {
            if &(&ineq.coeffs()[v] * &alpha) != rhs {
                return Ok(None);
            }
        }
    }
    Ok(Some(JoinedAntiwebDecomposition { support, parts }))
}

/// Verdict of the joined a-perfectness decision, with the facet evidence.
#[derive(Clone, Debug)]
pub struct JoinedAPerfectReport {
    pub joined_a_perfect: bool,
    pub recognized: Vec<(LinearInequality, JoinedAntiwebDecomposition)>,
    pub unrecognized: Vec<LinearInequality>,
}

/// Decide joined a-perfectness: enumerate the facets of STAB(g), drop the
/// nonnegativity facets, and demand that every remaining facet is a joined
/// antiweb constraint.
pub fn is_joined_a_perfect(g: &Graph) -> Result<JoinedAPerfectReport> {
    if g.node_count() > 12 {
        return Err(IneqError::InvalidInput(
            "joined a-perfectness decision capped at 12 nodes".into(),
        ));
    }
    let hull = polytope::facets(&polytope::stab_vertices(g)?)?;
    let mut recognized = Vec::new();
    let mut unrecognized = Vec::new();
    for facet in hull.ineqs {
        if facet.is_nonnegativity() {
            continue;
        }
        match recognize_joined_antiweb(g, &facet)? {
            Some(d) => recognized.push((facet, d)),
            None => unrecognized.push(facet),
        }
    }
    Ok(JoinedAPerfectReport {
        joined_a_perfect: unrecognized.is_empty(),
        recognized,
        unrecognized,
    })
}
