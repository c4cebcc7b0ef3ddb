//! Rank functions and irreducible components.
//!
//! A rank function bounds the arrow ranks of a module: `r(a) + r(b) <= d(i)`
//! at every monochromatic junction, with the degenerate bounds
//! `r(a) <= min(d(ta), d(ha))` where a partner is missing. Maximal rank
//! functions index the irreducible components `mod(A, d, r)`; the regular
//! one, when it exists, is recursively determined by `d` and is unique.

use crate::error::{Error, Result};
use crate::quiver::{DimVec, GentleAlgebra};

/// Arrow-indexed rank bounds, in arrow file order.
pub type RankFn = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankViolation {
    pub detail: String,
}

/// Checks every pair and degenerate inequality; empty report means valid.
pub fn rank_violations(a: &GentleAlgebra, d: &DimVec, r: &RankFn) -> Vec<RankViolation> {
    let q = a.quiver();
    let mut out = Vec::new();
    for (idx, ar) in q.arrows().iter().enumerate() {
        let bound = d[ar.tail].min(d[ar.head]);
        if r[idx] > bound {
            out.push(RankViolation {
                detail: format!(
                    "r({}) = {} exceeds min(d({}), d({})) = {}",
                    ar.name,
                    r[idx],
                    q.vertex_name(ar.tail),
                    q.vertex_name(ar.head),
                    bound
                ),
            });
        }
    }
    for &(x, y) in a.relation_pairs() {
        let junction = q.arrow(x).head;
        if r[x] + r[y] > d[junction] {
            out.push(RankViolation {
                detail: format!(
                    "r({}) + r({}) = {} exceeds d({}) = {}",
                    q.arrow(x).name,
                    q.arrow(y).name,
                    r[x] + r[y],
                    q.vertex_name(junction),
                    d[junction]
                ),
            });
        }
    }
    out
}

pub fn is_rank_function(a: &GentleAlgebra, d: &DimVec, r: &RankFn) -> bool {
    rank_violations(a, d, r).is_empty()
}

/// All valid tuples for one color path, by depth-first search along the path.
fn color_tuples(a: &GentleAlgebra, d: &DimVec, color: usize) -> Vec<Vec<usize>> {
    let q = a.quiver();
    let path = a.color_path(color);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(path.len());
    fn rec(
        q: &crate::quiver::ColoredQuiver,
        path: &[usize],
        d: &DimVec,
        pos: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == path.len() {
            out.push(current.clone());
            return;
        }
        let arrow = q.arrow(path[pos]);
        let mut bound = d[arrow.tail].min(d[arrow.head]);
        if pos > 0 {
            // junction constraint with the previous arrow of this color
            bound = bound.min(d[arrow.tail] - current[pos - 1]);
        }
        for v in 0..=bound {
            current.push(v);
            rec(q, path, d, pos + 1, current, out);
            current.pop();
        }
    }
    rec(q, path, d, 0, &mut current, &mut out);
    out
}

fn maximal_of(tuples: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    'next: for t in &tuples {
        for u in &tuples {
            if u != t && t.iter().zip(u).all(|(a, b)| a <= b) {
                continue 'next; // dominated
            }
        }
        out.push(t.clone());
    }
    out
}

fn assemble(a: &GentleAlgebra, per_color: &[Vec<usize>]) -> RankFn {
    let mut r = vec![0usize; a.n_arrows()];
    for (color, tuple) in per_color.iter().enumerate() {
        for (pos, &arrow) in a.color_path(color).iter().enumerate() {
            r[arrow] = tuple[pos];
        }
    }
    r
}

fn cartesian(a: &GentleAlgebra, parts: &[Vec<Vec<usize>>]) -> Vec<RankFn> {
    let mut out = Vec::new();
    let mut choice: Vec<Vec<usize>> = Vec::new();
    fn rec(
        a: &GentleAlgebra,
        parts: &[Vec<Vec<usize>>],
        pos: usize,
        choice: &mut Vec<Vec<usize>>,
        out: &mut Vec<RankFn>,
    ) {
        if pos == parts.len() {
            out.push(assemble(a, choice));
            return;
        }
        for t in &parts[pos] {
            choice.push(t.clone());
            rec(a, parts, pos + 1, choice, out);
            choice.pop();
        }
    }
    rec(a, parts, 0, &mut choice, &mut out);
    out
}

/// Every valid rank function for `d` (exhaustive; the constraints decouple
/// per color path, so this is a product of small per-color searches).
pub fn all_rank_functions(a: &GentleAlgebra, d: &DimVec) -> Vec<RankFn> {
    let parts: Vec<Vec<Vec<usize>>> = (0..a.quiver().n_colors())
        .map(|c| color_tuples(a, d, c))
        .collect();
    let mut out = cartesian(a, &parts);
    out.sort();
    out
}

/// The complete antichain of maximal rank functions, sorted lexicographically
/// in arrow file order. The constraint system is a product over color paths,
/// so the maximal set is the product of per-color maximal antichains.
pub fn maximal_rank_functions(a: &GentleAlgebra, d: &DimVec) -> Vec<RankFn> {
    let parts: Vec<Vec<Vec<usize>>> = (0..a.quiver().n_colors())
        .map(|c| maximal_of(color_tuples(a, d, c)))
        .collect();
    let mut out = cartesian(a, &parts);
    out.sort();
    out
}

/// Regularity criterion: through every vertex, each incident color covers the
/// full fiber (`r(in) + r(out) = d(i)`, missing arrows counting 0 — this
/// includes the endpoint equalities of every color path), and every vertex
/// incident to fewer than two colors has `d(i) = 0`. Every graph vertex then
/// has degree exactly two, so all components are cycles.
pub fn is_regular(a: &GentleAlgebra, d: &DimVec, r: &RankFn) -> bool {
    if !is_rank_function(a, d, r) {
        return false;
    }
    for v in 0..a.n_vertices() {
        let colors = a.colors_at(v);
        if colors.len() < 2 && d[v] != 0 {
            return false;
        }
        for &s in colors {
            let rin = a.in_arrow_of_color(v, s).map_or(0, |x| r[x]);
            let rout = a.out_arrow_of_color(v, s).map_or(0, |x| r[x]);
            if rin + rout != d[v] {
                return false;
            }
        }
    }
    true
}

/// The unique candidate regular rank function: along each color path set
/// `r(a_1) = d(i_0)` and `r(a_(j+1)) = d(i_j) - r(a_j)`. A negative step
/// aborts immediately; the result is returned only if it is a valid rank
/// function satisfying the full regularity criterion.
pub fn regular_rank_function(a: &GentleAlgebra, d: &DimVec) -> Option<RankFn> {
    let q = a.quiver();
    let mut r = vec![0usize; a.n_arrows()];
    for path in a.color_paths() {
        let mut prev: usize = 0;
        for (pos, &arrow) in path.iter().enumerate() {
            let tail = q.arrow(arrow).tail;
            let value = if pos == 0 {
                d[tail]
            } else {
                let avail = d[tail];
                if prev > avail {
                    return None; // recursion step goes negative
                }
                avail - prev
            };
            r[arrow] = value;
            prev = value;
        }
    }
    if is_rank_function(a, d, &r) && is_regular(a, d, &r) {
        Some(r)
    } else {
        None
    }
}

/// The pair `(d, r)` naming a component `mod(A, d, r)`, with lazily filled
/// classification flags.
#[derive(Debug, Clone)]
pub struct ComponentDescriptor {
    pub dim: DimVec,
    pub rank: RankFn,
    pub is_maximal: Option<bool>,
    pub is_regular: Option<bool>,
    pub is_indecomposable: Option<bool>,
}

impl ComponentDescriptor {
    pub fn new(a: &GentleAlgebra, dim: DimVec, rank: RankFn) -> Result<Self> {
        let violations = rank_violations(a, &dim, &rank);
        if let Some(v) = violations.first() {
            return Err(Error::InvalidRankFunction(v.detail.clone()));
        }
        Ok(ComponentDescriptor {
            dim,
            rank,
            is_maximal: None,
            is_regular: None,
            is_indecomposable: None,
        })
    }

    pub fn check_maximal(&mut self, a: &GentleAlgebra) -> bool {
        let maximal = maximal_rank_functions(a, &self.dim).contains(&self.rank);
        self.is_maximal = Some(maximal);
        maximal
    }

    pub fn check_regular(&mut self, a: &GentleAlgebra) -> bool {
        let reg = is_regular(a, &self.dim, &self.rank);
        self.is_regular = Some(reg);
        reg
    }
}
