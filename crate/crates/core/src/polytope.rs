//! Exact rational polyhedral kernel: ESTAB/QSTAB inequality systems, STAB
//! vertex sets, and conversion between vertex and facet descriptions by the
//! double description method over arbitrary-precision rationals. No
//! floating-point geometry anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub type Rational = BigRational;

/// Hull computations (double description) are capped at this dimension.
pub const MAX_HULL_DIM: usize = 12;

#[derive(Debug, Error)]
pub enum PolytopeError {
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("unsupported input: {0}")]
    UnsupportedInput(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T> = std::result::Result<T, PolytopeError>;

/// A linear inequality `coeffs . x <= rhs` over exact rationals, kept in
/// canonical form: all entries are coprime integers (the scaling factor is
/// positive, so the inequality's meaning is unchanged).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearInequality {
    coeffs: Vec<Rational>,
    rhs: Rational,
}

impl LinearInequality {
    pub fn new(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        let mut ineq = LinearInequality { coeffs, rhs };
        ineq.canonicalize();
        ineq
    }

    pub fn from_integers(coeffs: &[i64], rhs: i64) -> Self {
        Self::new(
            coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect(),
            Rational::from_integer(rhs.into()),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn rhs(&self) -> &Rational {
        &self.rhs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Node indices with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }

    pub fn is_full_support(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_zero())
    }

    /// Whether this is a nonnegativity constraint `-x_i <= 0`.
    pub fn is_nonnegativity(&self) -> bool {
        self.rhs.is_zero()
            && self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
            && self.coeffs.iter().all(|c| !c.is_positive())
    }

    pub fn satisfied_by(&self, point: &[Rational]) -> bool {
        self.evaluate(point) <= self.rhs
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .zip(point)
            .map(|(c, x)| c * x)
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Coefficients and rhs as f64, in canonical integer scaling.
    pub fn as_f64(&self) -> (Vec<f64>, f64) {
        let to_f = |r: &Rational| -> f64 {
            // canonical entries are integers, well within f64 range at desk scale
            let num = r.numer();
            num.to_string().parse::<f64>().unwrap_or(f64::NAN)
        };
        (self.coeffs.iter().map(to_f).collect(), to_f(&self.rhs))
    }

    fn canonicalize(&mut self) {
        let mut denom_lcm = BigInt::one();
        let mut numer_gcd = BigInt::zero();
        for r in self.coeffs.iter().chain(std::iter::once(&self.rhs)) {
            denom_lcm = denom_lcm.lcm(r.denom());
            numer_gcd = numer_gcd.gcd(r.numer());
        }
        if numer_gcd.is_zero() {
            return; // all-zero inequality, leave as is
        }
        let scale = Rational::new(denom_lcm, numer_gcd); // positive
        for r in self.coeffs.iter_mut() {
            *r *= &scale;
        }
        self.rhs *= &scale;
    }
}

impl std::fmt::Display for LinearInequality {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.coeffs {
            write!(f, "{} ", c.numer())?;
        }
        write!(f, "<= {}", self.rhs.numer())
    }
}

impl std::fmt::Debug for LinearInequality {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}]", self)
    }
}

/// Vertex description: a list of pairwise distinct rational points.
#[derive(Clone, Debug)]
pub struct VPolytope {
    pub dim: usize,
    pub vertices: Vec<Vec<Rational>>,
}

/// Facet description: an irredundant list of canonical inequalities.
#[derive(Clone, Debug)]
pub struct HPolytope {
    pub dim: usize,
    pub ineqs: Vec<LinearInequality>,
}

impl HPolytope {
    pub fn contains(&self, point: &[Rational]) -> bool {
        self.ineqs.iter().all(|q| q.satisfied_by(point))
    }
}

/// Edge relaxation ESTAB(G): box constraints plus one inequality per edge.
pub fn estab(g: &Graph) -> HPolytope {
    let n = g.node_count();
    let mut ineqs = Vec::new();
    for i in 0..n {
        let mut c = vec![Rational::zero(); n];
        c[i] = -Rational::one();
        ineqs.push(LinearInequality::new(c.clone(), Rational::zero()));
        c[i] = Rational::one();
        ineqs.push(LinearInequality::new(c, Rational::one()));
    }
    for (u, v) in g.edges() {
        let mut c = vec![Rational::zero(); n];
        c[u] = Rational::one();
        c[v] = Rational::one();
        ineqs.push(LinearInequality::new(c, Rational::one()));
    }
    HPolytope { dim: n, ineqs }
}

/// Clique relaxation QSTAB(G): nonnegativity plus one inequality per maximal
/// clique.
pub fn qstab(g: &Graph) -> Result<HPolytope> {
    let n = g.node_count();
    let mut ineqs = Vec::new();
    for i in 0..n {
        let mut c = vec![Rational::zero(); n];
        c[i] = -Rational::one();
        ineqs.push(LinearInequality::new(c, Rational::zero()));
    }
    for clique in g.enumerate_maximal_cliques()? {
        let mut c = vec![Rational::zero(); n];
        for v in clique.iter() {
            c[v] = Rational::one();
        }
        ineqs.push(LinearInequality::new(c, Rational::one()));
    }
    Ok(HPolytope { dim: n, ineqs })
}

/// STAB(G) as the convex hull generators: 0/1 incidence vectors of all
/// stable sets.
pub fn stab_vertices(g: &Graph) -> Result<VPolytope> {
    let n = g.node_count();
    let vertices = g
        .enumerate_stable_sets()?
        .into_iter()
        .map(|s| {
            (0..n)
                .map(|i| if s.contains(i) { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    Ok(VPolytope { dim: n, vertices })
}

// ---------------------------------------------------------------------------
// Double description over integers
// ---------------------------------------------------------------------------

fn normalize_ray(ray: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in ray.iter() {
        g = g.gcd(x);
    }
    if g > BigInt::one() {
        for x in ray.iter_mut() {
            *x /= &g;
        }
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Row-reduce over rationals to pick `d` linearly independent rows, in the
/// given order. Returns their indices, or None if the rank is deficient.
fn independent_rows(rows: &[Vec<BigInt>], d: usize) -> Option<Vec<usize>> {
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    let mut picked = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut v: Vec<Rational> =
            row.iter().map(|x| Rational::from_integer(x.clone())).collect();
        for b in &basis {
            let lead = b.iter().position(|x| !x.is_zero()).unwrap();
            if !v[lead].is_zero() {
                let f = v[lead].clone() / b[lead].clone();
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi -= &f * bi;
                }
            }
        }
        if v.iter().any(|x| !x.is_zero()) {
            basis.push(v);
            picked.push(idx);
            if picked.len() == d {
                return Some(picked);
            }
        }
    }
    None
}

/// Solve the d x d rational system B x = e_j for each j and scale the
/// solutions to integer rays of the simplicial cone {y : B y >= 0}.
fn simplicial_rays(b_rows: &[&Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let d = b_rows.len();
    // Gauss-Jordan on [B | I]
    let mut aug: Vec<Vec<Rational>> = b_rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational> =
                row.iter().map(|x| Rational::from_integer(x.clone())).collect();
            r.extend((0..d).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !aug[r][col].is_zero()).expect("invertible");
        aug.swap(col, pivot);
        let p = aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..d {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..2 * d {
                    let sub = &f * &aug[col][c];
                    aug[r][c] -= sub;
                }
            }
        }
    }
    // column j of the inverse is the ray with B ray = e_j
    (0..d)
        .map(|j| {
            let col: Vec<Rational> = (0..d).map(|i| aug[i][d + j].clone()).collect();
            let lcm = col
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let mut ray: Vec<BigInt> =
                col.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
            normalize_ray(&mut ray);
            ray
        })
        .collect()
}

/// Zero-set bitmask over inserted rows.
#[derive(Clone, PartialEq, Eq)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn new(words: usize) -> Self {
        ZeroSet(vec![0; words])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn intersect(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn contains_all(&self, other: &ZeroSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| b & !a == 0)
    }
}

struct Ray {
    vec: Vec<BigInt>,
    zeros: ZeroSet,
}

/// Extreme rays of the pointed cone {y in R^d : rows . y >= 0}, by
/// incremental double description with the combinatorial adjacency test.
/// Rows are inserted in lexicographic order. Errors if the cone is not
/// pointed (row rank < d).
fn extreme_rays(mut rows: Vec<Vec<BigInt>>) -> Result<Vec<Vec<BigInt>>> {
    let d = rows.first().map(|r| r.len()).unwrap_or(0);
    if d == 0 {
        return Err(PolytopeError::UnsupportedInput("empty system".into()));
    }
    rows.sort();
    rows.dedup();
    let basis_idx = independent_rows(&rows, d).ok_or_else(|| {
        PolytopeError::UnsupportedInput(
            "cone is not pointed (input not full-dimensional)".into(),
        )
    })?;
    let words = rows.len().div_ceil(64);
    let b_rows: Vec<&Vec<BigInt>> = basis_idx.iter().map(|&i| &rows[i]).collect();
    let mut rays: Vec<Ray> = simplicial_rays(&b_rows)
        .into_iter()
        .enumerate()
        .map(|(j, vec)| {
            let mut zeros = ZeroSet::new(words);
            // basis row j evaluates to det > 0 on ray j, 0 on the others
            for (pos, &row) in basis_idx.iter().enumerate() {
                if pos != j {
                    zeros.set(row);
                }
            }
            Ray { vec, zeros }
        })
        .collect();

    let in_basis: Vec<bool> = {
        let mut b = vec![false; rows.len()];
        for &i in &basis_idx {
            b[i] = true;
        }
        b
    };

    for t in 0..rows.len() {
        if in_basis[t] {
            continue;
        }
        let row = &rows[t];
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.vec)).collect();
        if values.iter().all(|v| !v.is_negative()) {
            for (ray, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    ray.zeros.set(t);
                }
            }
            continue;
        }
        let pos: Vec<usize> =
            (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> =
            (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        let mut new_rays: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.intersect(&rays[q].zeros);
                let adjacent = rays.iter().enumerate().all(|(i, r)| {
                    i == p || i == q || !r.zeros.contains_all(&common)
                });
                if !adjacent {
                    continue;
                }
                let sp = &values[p];
                let sq = &values[q]; // negative
                let mut vec: Vec<BigInt> = rays[p]
                    .vec
                    .iter()
                    .zip(&rays[q].vec)
                    .map(|(pv, qv)| sp * qv - sq * pv)
                    .collect();
                normalize_ray(&mut vec);
                let mut zeros = common.clone();
                zeros.set(t);
                new_rays.push(Ray { vec, zeros });
            }
        }
        let mut kept: Vec<Ray> = Vec::new();
        for (i, ray) in rays.into_iter().enumerate() {
            if !values[i].is_negative() {
                let mut ray = ray;
                if values[i].is_zero() {
                    ray.zeros.set(t);
                }
                kept.push(ray);
            }
        }
        kept.extend(new_rays);
        rays = kept;
    }
    Ok(rays.into_iter().map(|r| r.vec).collect())
}

fn row_from_rationals(values: &[Rational]) -> Vec<BigInt> {
    let lcm = values.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    values.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Irredundant facet list of the convex hull of `v.vertices`, via double
/// description on the polar-side cone. The polytope must be
/// full-dimensional.
pub fn facets(v: &VPolytope) -> Result<HPolytope> {
    if v.dim > MAX_HULL_DIM {
        return Err(PolytopeError::Capacity(format!(
            "facet enumeration capped at dimension {}",
            MAX_HULL_DIM
        )));
    }
    if v.vertices.is_empty() {
        return Err(PolytopeError::UnsupportedInput("no vertices".into()));
    }
    let n = v.dim;
    // cone of valid inequalities: {(a, b) : a . vertex <= b for all vertices}
    let rows: Vec<Vec<BigInt>> = v
        .vertices
        .iter()
        .map(|vert| {
            let mut vals: Vec<Rational> = vert.iter().map(|x| -x).collect();
            vals.push(Rational::one());
            row_from_rationals(&vals)
        })
        .collect();
    let rays = extreme_rays(rows)?;
    let mut ineqs: Vec<LinearInequality> = rays
        .into_iter()
        .filter(|ray| ray[..n].iter().any(|c| !c.is_zero()))
        .map(|ray| {
            LinearInequality::new(
                ray[..n].iter().map(|c| Rational::from_integer(c.clone())).collect(),
                Rational::from_integer(ray[n].clone()),
            )
        })
        .collect();
    ineqs.sort();
    ineqs.dedup();
    Ok(HPolytope { dim: n, ineqs })
}

/// Vertices of a bounded full-dimensional H-polytope, by double description
/// on the homogenization cone.
pub fn vertices(h: &HPolytope) -> Result<VPolytope> {
    if h.dim > MAX_HULL_DIM {
        return Err(PolytopeError::Capacity(format!(
            "vertex enumeration capped at dimension {}",
            MAX_HULL_DIM
        )));
    }
    let n = h.dim;
    let mut rows: Vec<Vec<BigInt>> = h
        .ineqs
        .iter()
        .map(|q| {
            let mut vals = vec![q.rhs().clone()];
            vals.extend(q.coeffs().iter().map(|c| -c));
            row_from_rationals(&vals)
        })
        .collect();
    let mut x0_row = vec![BigInt::zero(); n + 1];
    x0_row[0] = BigInt::one();
    rows.push(x0_row);
    let rays = extreme_rays(rows)?;
    let mut verts = Vec::new();
    for ray in rays {
        if ray[0].is_zero() {
            return Err(PolytopeError::UnsupportedInput(
                "polytope is unbounded".into(),
            ));
        }
        let x0 = Rational::from_integer(ray[0].clone());
        verts.push(
            ray[1..]
                .iter()
                .map(|c| Rational::from_integer(c.clone()) / x0.clone())
                .collect::<Vec<Rational>>(),
        );
    }
    verts.sort();
    verts.dedup();
    Ok(VPolytope { dim: n, vertices: verts })
}

/// Exact maximum of `objective . x` over a bounded H-polytope, by vertex
/// enumeration.
pub fn max_over(h: &HPolytope, objective: &[Rational]) -> Result<Rational> {
    let v = vertices(h)?;
    v.vertices
        .iter()
        .map(|vert| {
            objective
                .iter()
                .zip(vert)
                .map(|(c, x)| c * x)
                .fold(Rational::zero(), |a, b| a + b)
        })
        .max()
        .ok_or_else(|| PolytopeError::UnsupportedInput("empty polytope".into()))
}

/// Whether STAB(G) has a full-support facet.
pub fn is_facet_defining_graph(g: &Graph) -> Result<bool> {
    let hull = facets(&stab_vertices(g)?)?;
    Ok(hull.ineqs.iter().any(|q| q.is_full_support()))
}
