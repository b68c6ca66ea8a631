//! The matching (bottleneck) distance between persistence diagrams.
//!
//! The finite part minimizes, over bijections of the diagonal-augmented point
//! sets, the maximum per-pair cost: point-to-point costs the sup-norm distance
//! `max(|b1 - b2|, |d1 - d2|)`, point-to-diagonal costs half the persistence.
//! The optimum is always one of the finitely many achievable pairwise costs,
//! so the search is a binary search over that candidate set with feasibility
//! decided by Hopcroft-Karp maximum matching; the result is exact, not
//! tolerance-limited.
//!
//! Essential classes match only essential classes of the same degree: births
//! are sorted and paired in order, and a multiplicity mismatch is an error.
//! [`bottleneck_bruteforce`] enumerates every partial matching on small
//! instances and serves as an independent oracle.

use crate::error::{Error, Result};
use crate::persistence::PersistenceDiagram;

/// Cap on combined finite points accepted by the exhaustive matcher.
pub const BRUTEFORCE_CAP: usize = 8;

/// One side of a pairing entry: a finite point (by index in its diagram) or
/// the diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairingEnd {
    Point(usize),
    Diagonal,
}

/// Outcome of a bottleneck computation.
#[derive(Debug, Clone)]
pub struct MatchingResult {
    /// `max(finite_cost, essential_cost_deg0, essential_cost_deg1)`.
    pub distance: f64,
    /// Minimax cost of the finite-part matching alone.
    pub finite_cost: f64,
    /// Largest birth difference among sorted essential degree-0 classes.
    pub essential_cost_deg0: f64,
    /// Largest birth difference among sorted essential degree-1 classes.
    pub essential_cost_deg1: f64,
    /// A finite-part matching achieving `finite_cost`. Left ends index the
    /// first diagram, right ends the second; diagonal-to-diagonal fillers are
    /// omitted.
    pub pairing: Vec<(PairingEnd, PairingEnd)>,
}

#[inline]
fn point_cost(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).abs().max((a.1 - b.1).abs())
}

#[inline]
fn diagonal_cost(p: (f64, f64)) -> f64 {
    (p.1 - p.0) / 2.0
}

/// Per-degree essential cost: births are already sorted in the diagram's
/// canonical order, pair them up and take the largest difference.
fn essential_cost(a: &[f64], b: &[f64], degree: u8) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::EssentialMismatch {
            degree,
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max))
}

/// Bipartite maximum matching (Hopcroft-Karp). `adj[i]` lists the right
/// vertices reachable from left vertex `i`; returns `match_right` where
/// `match_right[j]` is the left partner of right vertex `j` or `usize::MAX`.
fn hopcroft_karp(adj: &[Vec<usize>], right_count: usize) -> Vec<usize> {
    const FREE: usize = usize::MAX;
    let left_count = adj.len();
    let mut match_left = vec![FREE; left_count];
    let mut match_right = vec![FREE; right_count];
    let mut dist = vec![0usize; left_count];
    let mut queue = std::collections::VecDeque::new();

    loop {
        // BFS layering from free left vertices.
        queue.clear();
        for i in 0..left_count {
            if match_left[i] == FREE {
                dist[i] = 0;
                queue.push_back(i);
            } else {
                dist[i] = usize::MAX;
            }
        }
        let mut found_augmenting = false;
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                let partner = match_right[j];
                if partner == FREE {
                    found_augmenting = true;
                } else if dist[partner] == usize::MAX {
                    dist[partner] = dist[i] + 1;
                    queue.push_back(partner);
                }
            }
        }
        if !found_augmenting {
            break;
        }
        // DFS along layered augmenting paths.
        for i in 0..left_count {
            if match_left[i] == FREE {
                augment(i, adj, &mut match_left, &mut match_right, &mut dist);
            }
        }
    }
    match_right
}

fn augment(
    i: usize,
    adj: &[Vec<usize>],
    match_left: &mut [usize],
    match_right: &mut [usize],
    dist: &mut [usize],
) -> bool {
    const FREE: usize = usize::MAX;
    for &j in &adj[i] {
        let partner = match_right[j];
        if partner == FREE
            || (dist[partner] == dist[i].wrapping_add(1)
                && augment(partner, adj, match_left, match_right, dist))
        {
            match_left[i] = j;
            match_right[j] = i;
            return true;
        }
    }
    dist[i] = usize::MAX;
    false
}

/// The augmented bipartite instance for one diagram pair's finite parts.
struct FiniteInstance {
    p1: Vec<(f64, f64)>,
    p2: Vec<(f64, f64)>,
}

impl FiniteInstance {
    fn new(d1: &PersistenceDiagram, d2: &PersistenceDiagram) -> Self {
        Self {
            p1: d1.finite_deg0().to_vec(),
            p2: d2.finite_deg0().to_vec(),
        }
    }

    fn total(&self) -> usize {
        self.p1.len() + self.p2.len()
    }

    /// Left side: points of the first diagram then n2 diagonal slots.
    /// Right side: points of the second diagram then n1 diagonal slots.
    fn edge_allowed(&self, i: usize, j: usize, threshold: f64) -> bool {
        let n1 = self.p1.len();
        let n2 = self.p2.len();
        match (i < n1, j < n2) {
            (true, true) => point_cost(self.p1[i], self.p2[j]) <= threshold,
            (true, false) => diagonal_cost(self.p1[i]) <= threshold,
            (false, true) => diagonal_cost(self.p2[j]) <= threshold,
            (false, false) => true,
        }
    }

    fn adjacency(&self, threshold: f64) -> Vec<Vec<usize>> {
        let m = self.total();
        (0..m)
            .map(|i| (0..m).filter(|&j| self.edge_allowed(i, j, threshold)).collect())
            .collect()
    }

    fn feasible(&self, threshold: f64) -> bool {
        let m = self.total();
        let match_right = hopcroft_karp(&self.adjacency(threshold), m);
        match_right.iter().filter(|&&x| x != usize::MAX).count() == m
    }

    /// Every achievable pairwise cost: point-to-point costs, each point's
    /// diagonal cost, and zero.
    fn candidates(&self) -> Vec<f64> {
        let mut c = vec![0.0];
        for &p in &self.p1 {
            c.push(diagonal_cost(p));
            for &q in &self.p2 {
                c.push(point_cost(p, q));
            }
        }
        for &q in &self.p2 {
            c.push(diagonal_cost(q));
        }
        c.sort_by(f64::total_cmp);
        c.dedup();
        c
    }
}

/// Exact bottleneck (matching) distance between two diagrams.
pub fn bottleneck(d1: &PersistenceDiagram, d2: &PersistenceDiagram) -> Result<MatchingResult> {
    let essential_cost_deg0 = essential_cost(d1.essential_deg0(), d2.essential_deg0(), 0)?;
    let essential_cost_deg1 = essential_cost(d1.essential_deg1(), d2.essential_deg1(), 1)?;

    let instance = FiniteInstance::new(d1, d2);
    let (finite_cost, pairing) = if instance.total() == 0 {
        (0.0, Vec::new())
    } else {
        let candidates = instance.candidates();
        // Smallest candidate for which a perfect matching exists.
        let mut lo = 0usize;
        let mut hi = candidates.len() - 1;
        debug_assert!(instance.feasible(candidates[hi]));
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if instance.feasible(candidates[mid]) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let cost = candidates[lo];
        let match_right = hopcroft_karp(&instance.adjacency(cost), instance.total());
        let n1 = instance.p1.len();
        let n2 = instance.p2.len();
        let mut pairing = Vec::new();
        for (j, &i) in match_right.iter().enumerate() {
            debug_assert_ne!(i, usize::MAX);
            let left = if i < n1 {
                PairingEnd::Point(i)
            } else {
                PairingEnd::Diagonal
            };
            let right = if j < n2 {
                PairingEnd::Point(j)
            } else {
                PairingEnd::Diagonal
            };
            if left != PairingEnd::Diagonal || right != PairingEnd::Diagonal {
                pairing.push((left, right));
            }
        }
        pairing.sort_by_key(|entry| match entry.0 {
            PairingEnd::Point(i) => (0, i),
            PairingEnd::Diagonal => (1, usize::MAX),
        });
        (cost, pairing)
    };

    Ok(MatchingResult {
        distance: finite_cost.max(essential_cost_deg0).max(essential_cost_deg1),
        finite_cost,
        essential_cost_deg0,
        essential_cost_deg1,
        pairing,
    })
}

/// Exhaustive bottleneck distance for small instances: enumerates every
/// injective partial matching with diagonal completion. Independent of the
/// candidate-set search; rejects instances with more than [`BRUTEFORCE_CAP`]
/// combined finite points.
pub fn bottleneck_bruteforce(d1: &PersistenceDiagram, d2: &PersistenceDiagram) -> Result<f64> {
    let essential_cost_deg0 = essential_cost(d1.essential_deg0(), d2.essential_deg0(), 0)?;
    let essential_cost_deg1 = essential_cost(d1.essential_deg1(), d2.essential_deg1(), 1)?;

    let p1 = d1.finite_deg0();
    let p2 = d2.finite_deg0();
    let total = p1.len() + p2.len();
    if total > BRUTEFORCE_CAP {
        return Err(Error::TooLarge {
            points: total,
            cap: BRUTEFORCE_CAP,
        });
    }

    let mut best = f64::INFINITY;
    let mut used = vec![false; p2.len()];
    explore(p1, p2, 0, &mut used, 0.0, &mut best);

    Ok(best.max(essential_cost_deg0).max(essential_cost_deg1))
}

fn explore(
    p1: &[(f64, f64)],
    p2: &[(f64, f64)],
    index: usize,
    used: &mut [bool],
    current_max: f64,
    best: &mut f64,
) {
    if current_max >= *best {
        return;
    }
    if index == p1.len() {
        let mut finish = current_max;
        for (j, &q) in p2.iter().enumerate() {
            if !used[j] {
                finish = finish.max(diagonal_cost(q));
            }
        }
        if finish < *best {
            *best = finish;
        }
        return;
    }
    let p = p1[index];
    // Send this point to the diagonal.
    explore(p1, p2, index + 1, used, current_max.max(diagonal_cost(p)), best);
    // Or to any unused point of the other diagram.
    for j in 0..p2.len() {
        if !used[j] {
            used[j] = true;
            explore(p1, p2, index + 1, used, current_max.max(point_cost(p, p2[j])), best);
            used[j] = false;
        }
    }
}
