//! Sublevel-set persistent homology of a piecewise-linear function on the
//! circle.
//!
//! The filtration is the lower-star filtration of the N-cycle graph: vertex
//! `i` enters at `f(i)`, the edge `{i, i+1 mod N}` enters at the larger of
//! its endpoint values. Degree-0 finite pairs come from a union-find sweep
//! with the elder rule; the one edge that closes the cycle creates the single
//! essential degree-1 class, and the surviving component is the essential
//! degree-0 class born at the global minimum. No other homology exists for a
//! 1-complex homeomorphic to the circle.
//!
//! Ties are broken by the total order `(value, vertex index)`, a symbolic
//! perturbation that makes the sweep deterministic. Reported births and
//! deaths are the true values, and zero-persistence pairs are discarded.

use crate::error::{Error, Result};
use crate::function::CircularFunction;

/// A persistence diagram: finite degree-0 pairs plus the essential classes
/// in degrees 0 and 1. Essential classes never die; they are stored as bare
/// birth values so no floating-point infinity ever appears.
#[derive(Debug, Clone, PartialEq)]
pub struct PersistenceDiagram {
    finite_deg0: Vec<(f64, f64)>,
    essential_deg0: Vec<f64>,
    essential_deg1: Vec<f64>,
}

impl PersistenceDiagram {
    /// Builds a diagram from raw parts, validating finiteness and
    /// `birth <= death`, and sorting everything into canonical order so equal
    /// multisets compare equal.
    ///
    /// Diagrams computed by [`sublevel_diagram`] always have strict
    /// `birth < death`; pairs with `birth == death` are accepted here because
    /// they are legitimate (zero-persistence) matching inputs.
    pub fn new(
        finite_deg0: Vec<(f64, f64)>,
        essential_deg0: Vec<f64>,
        essential_deg1: Vec<f64>,
    ) -> Result<Self> {
        for &(b, d) in &finite_deg0 {
            if !b.is_finite() || !d.is_finite() {
                return Err(Error::InvalidParameter {
                    what: format!("non-finite diagram point ({b}, {d})"),
                });
            }
            if b > d {
                return Err(Error::InvalidParameter {
                    what: format!("diagram point ({b}, {d}) has birth > death"),
                });
            }
        }
        for &b in essential_deg0.iter().chain(&essential_deg1) {
            if !b.is_finite() {
                return Err(Error::InvalidParameter {
                    what: format!("non-finite essential birth {b}"),
                });
            }
        }
        let mut diagram = Self {
            finite_deg0,
            essential_deg0,
            essential_deg1,
        };
        diagram.sort_canonical();
        Ok(diagram)
    }

    fn sort_canonical(&mut self) {
        self.finite_deg0
            .sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
        self.essential_deg0.sort_by(f64::total_cmp);
        self.essential_deg1.sort_by(f64::total_cmp);
    }

    /// Finite `(birth, death)` pairs in degree 0, sorted by birth then death.
    pub fn finite_deg0(&self) -> &[(f64, f64)] {
        &self.finite_deg0
    }

    /// Births of essential degree-0 classes, sorted.
    pub fn essential_deg0(&self) -> &[f64] {
        &self.essential_deg0
    }

    /// Births of essential degree-1 classes, sorted.
    pub fn essential_deg1(&self) -> &[f64] {
        &self.essential_deg1
    }
}

/// Union-find over vertex indices with path compression and union by size.
struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        Self {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    fn find(&mut self, mut id: usize) -> usize {
        let mut root = id;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[id] != root {
            let next = self.parent[id];
            self.parent[id] = root;
            id = next;
        }
        root
    }

    /// Unites two roots, returning the new root. Callers resolve seniority.
    fn union_roots(&mut self, a: usize, b: usize) -> usize {
        debug_assert_ne!(a, b);
        let (big, small) = if self.size[a] >= self.size[b] { (a, b) } else { (b, a) };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        big
    }
}

/// Computes the sublevel-set persistence diagram of a circular function.
pub fn sublevel_diagram(phi: &CircularFunction) -> PersistenceDiagram {
    let n = phi.len();
    let values = phi.values();

    // Vertex seniority: smaller (value, index) is older.
    let older = |a: usize, b: usize| -> usize {
        if values[a].total_cmp(&values[b]).then(a.cmp(&b)) == std::cmp::Ordering::Less {
            a
        } else {
            b
        }
    };

    // Edge i spans {i, i+1 mod n} and enters at the larger endpoint value.
    let mut edges: Vec<usize> = (0..n).collect();
    let edge_value = |i: usize| values[i].max(values[(i + 1) % n]);
    edges.sort_by(|&a, &b| edge_value(a).total_cmp(&edge_value(b)).then(a.cmp(&b)));

    let mut uf = UnionFind::new(n);
    // senior[root] = oldest vertex of that component.
    let mut senior: Vec<usize> = (0..n).collect();

    let mut finite = Vec::new();
    let mut essential_deg1 = Vec::new();

    for e in edges {
        let level = edge_value(e);
        let ra = uf.find(e);
        let rb = uf.find((e + 1) % n);
        if ra == rb {
            // The cycle closes exactly once; this is the essential loop.
            essential_deg1.push(level);
            continue;
        }
        let sa = senior[ra];
        let sb = senior[rb];
        let elder = older(sa, sb);
        let younger = if elder == sa { sb } else { sa };
        // Elder rule: the younger component dies at this edge's level.
        if values[younger] < level {
            finite.push((values[younger], level));
        }
        let root = uf.union_roots(ra, rb);
        senior[root] = elder;
    }

    let essential_deg0 = vec![phi.min_value()];
    PersistenceDiagram::new(finite, essential_deg0, essential_deg1)
        .expect("sweep produces finite values with birth < death")
}

/// Degree-0 persistent Betti number `beta(u, v)`: the number of connected
/// components of the sublevel set at `u` that are still distinct in the
/// sublevel set at `v`.
///
/// Brute-force oracle, independent of [`sublevel_diagram`]: builds the
/// sublevel complex at `v` by direct union-find and counts distinct roots
/// among vertices present at `u`.
pub fn persistent_betti(phi: &CircularFunction, u: f64, v: f64) -> Result<usize> {
    if u > v {
        return Err(Error::InvalidLevelPair { lower: u, upper: v });
    }
    let n = phi.len();
    let values = phi.values();

    let mut uf = UnionFind::new(n);
    for i in 0..n {
        let j = (i + 1) % n;
        if values[i].max(values[j]) <= v {
            let (ra, rb) = (uf.find(i), uf.find(j));
            if ra != rb {
                uf.union_roots(ra, rb);
            }
        }
    }

    let mut roots: Vec<usize> = (0..n)
        .filter(|&i| values[i] <= u)
        .map(|i| uf.find(i))
        .collect();
    roots.sort_unstable();
    roots.dedup();
    Ok(roots.len())
}
