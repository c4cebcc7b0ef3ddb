//! Up-and-down graphs and generic modules.
//!
//! For a gentle algebra, a dimension vector `d`, a rank function `r`, and a
//! sign function `eps`, the graph `Gamma(d, r, eps)` has vertices `v_j^i`
//! (`j = 1..d(i)`) and arrows `f_j^a` (`j = 1..r(a)`) with
//!
//! ```text
//! t f_j^a = v_j^ta            if eps(ta, c(a)) = +1,   else v_(d(ta)-j+1)^ta
//! h f_j^a = v_(d(ha)-j+1)^ha  if eps(ha, c(a)) = +1,   else v_j^ha
//! ```
//!
//! Every graph vertex meets at most two arrows, so components are chains
//! (strings) or cycles (bands); they induce the generic decomposition of
//! `mod(A, d, r)`, and pushing a one-dimensional graph representation forward
//! along the projection to the quiver yields the generic module, with one
//! parameter per band.

use crate::error::{Error, Result};
use crate::exact::{MultiPoly, PolyMatrix, PolyRing, QMatrix, Rational};
use crate::quiver::{DimVec, GentleAlgebra};
use crate::rank::{rank_violations, RankFn};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Signs on the incidence pairs (vertex, color); the two colors at a
/// bichromatic vertex carry opposite signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignFunction {
    values: BTreeMap<(usize, usize), i8>,
}

impl SignFunction {
    /// The canonical choice: at every vertex the lexicographically smallest
    /// incident color name gets +1; a lone color gets +1.
    pub fn default_for(a: &GentleAlgebra) -> Self {
        let mut values = BTreeMap::new();
        for v in 0..a.n_vertices() {
            for (k, &s) in a.colors_at(v).iter().enumerate() {
                // colors_at is sorted by name
                values.insert((v, s), if k == 0 { 1 } else { -1 });
            }
        }
        SignFunction { values }
    }

    /// Applies `(vertex, color) -> sign` overrides on top of the default,
    /// forcing the opposite sign on the complementary color of each touched
    /// bichromatic vertex. Conflicting overrides are rejected.
    pub fn with_overrides(
        a: &GentleAlgebra,
        overrides: &[(usize, usize, i8)],
    ) -> Result<Self> {
        let mut sf = Self::default_for(a);
        let mut pinned: BTreeMap<(usize, usize), i8> = BTreeMap::new();
        for &(v, s, sign) in overrides {
            if !a.colors_at(v).contains(&s) {
                return Err(Error::InvalidSignFunction(format!(
                    "color \"{}\" is not incident to vertex \"{}\"",
                    a.quiver().color_name(s),
                    a.quiver().vertex_name(v)
                )));
            }
            if let Some(&prev) = pinned.get(&(v, s)) {
                if prev != sign {
                    return Err(Error::InvalidSignFunction(format!(
                        "conflicting signs at vertex \"{}\", color \"{}\"",
                        a.quiver().vertex_name(v),
                        a.quiver().color_name(s)
                    )));
                }
            }
            pinned.insert((v, s), sign);
            sf.values.insert((v, s), sign);
            for &other in a.colors_at(v) {
                if other != s {
                    if let Some(&prev) = pinned.get(&(v, other)) {
                        if prev != -sign {
                            return Err(Error::InvalidSignFunction(format!(
                                "conflicting signs at vertex \"{}\"",
                                a.quiver().vertex_name(v)
                            )));
                        }
                    }
                    sf.values.insert((v, other), -sign);
                }
            }
        }
        debug_assert!(sf.is_valid(a));
        Ok(sf)
    }

    pub fn get(&self, vertex: usize, color: usize) -> i8 {
        *self
            .values
            .get(&(vertex, color))
            .expect("sign queried off the incidence set")
    }

    pub fn is_valid(&self, a: &GentleAlgebra) -> bool {
        for v in 0..a.n_vertices() {
            let colors = a.colors_at(v);
            for &s in colors {
                match self.values.get(&(v, s)) {
                    Some(&x) if x == 1 || x == -1 => {}
                    _ => return false,
                }
            }
            if colors.len() == 2
                && self.get(v, colors[0]) == self.get(v, colors[1])
            {
                return false;
            }
        }
        true
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &i8)> {
        self.values.iter()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GVertex {
    /// Quiver vertex.
    pub q: usize,
    /// 1-based fiber index `j`.
    pub level: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GArrow {
    /// Quiver arrow.
    pub qa: usize,
    /// 1-based index `j <= r(a)`.
    pub level: usize,
    /// Index into `UpDownGraph::vertices`.
    pub tail: usize,
    pub head: usize,
}

#[derive(Debug, Clone)]
pub struct UpDownGraph {
    pub dim: DimVec,
    pub rank: RankFn,
    pub vertices: Vec<GVertex>,
    pub arrows: Vec<GArrow>,
    offsets: Vec<usize>,
}

impl UpDownGraph {
    pub fn vertex_index(&self, q: usize, level: usize) -> usize {
        self.offsets[q] + level - 1
    }

    /// Incident graph arrows (both directions) at a graph vertex.
    pub fn incident(&self, gv: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&i| self.arrows[i].tail == gv || self.arrows[i].head == gv)
            .collect()
    }
}

/// Builds `Gamma(Q, c, d, r, eps)`; rejects invalid rank functions.
pub fn updown_graph(
    a: &GentleAlgebra,
    d: &DimVec,
    r: &RankFn,
    eps: &SignFunction,
) -> Result<UpDownGraph> {
    if let Some(v) = rank_violations(a, d, r).first() {
        return Err(Error::InvalidRankFunction(v.detail.clone()));
    }
    let q = a.quiver();
    let mut offsets = Vec::with_capacity(a.n_vertices());
    let mut vertices = Vec::new();
    for (i, &di) in d.iter().enumerate() {
        offsets.push(vertices.len());
        for j in 1..=di {
            vertices.push(GVertex { q: i, level: j });
        }
    }
    let graph_stub = UpDownGraph {
        dim: d.clone(),
        rank: r.clone(),
        vertices,
        arrows: Vec::new(),
        offsets,
    };
    let mut arrows = Vec::new();
    for (ai, ar) in q.arrows().iter().enumerate() {
        for j in 1..=r[ai] {
            let tail_level = if eps.get(ar.tail, ar.color) == 1 {
                j
            } else {
                d[ar.tail] - j + 1
            };
            let head_level = if eps.get(ar.head, ar.color) == 1 {
                d[ar.head] - j + 1
            } else {
                j
            };
            arrows.push(GArrow {
                qa: ai,
                level: j,
                tail: graph_stub.vertex_index(ar.tail, tail_level),
                head: graph_stub.vertex_index(ar.head, head_level),
            });
        }
    }
    let g = UpDownGraph {
        arrows,
        ..graph_stub
    };
    // the rank inequalities force degree <= 2; anything else is a bug
    for gv in 0..g.vertices.len() {
        debug_assert!(g.incident(gv).len() <= 2, "graph vertex degree exceeds 2");
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ComponentKind {
    Band,
    String,
}

impl std::fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ComponentKind::Band => write!(f, "band"),
            ComponentKind::String => write!(f, "string"),
        }
    }
}

/// Canonical walk word: arrow tokens with a direction flag, lexicographically
/// minimized over the two end-to-end traversals (strings) or over all
/// rotations of both directions (bands). A trivial string records its quiver
/// vertex instead.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Word {
    pub tokens: Vec<(usize, bool)>,
    pub lone_vertex: Option<usize>,
}

impl Word {
    pub fn render(&self, a: &GentleAlgebra) -> String {
        if let Some(v) = self.lone_vertex {
            return format!("[{}]", a.quiver().vertex_name(v));
        }
        self.tokens
            .iter()
            .map(|&(arrow, fwd)| {
                let name = &a.quiver().arrow(arrow).name;
                if fwd {
                    name.clone()
                } else {
                    format!("{name}-")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Debug, Clone)]
pub struct GraphComponent {
    pub kind: ComponentKind,
    /// Graph vertex indices, in walk order.
    pub gvertices: Vec<usize>,
    /// Graph arrow indices, in walk order.
    pub garrows: Vec<usize>,
    /// Induced dimension vector (graph vertices over each quiver vertex).
    pub dim: DimVec,
    /// Induced rank function (graph arrows over each quiver arrow).
    pub rank: RankFn,
    pub word: Word,
}

/// Partition of the graph into strings and bands, ordered by canonical word
/// (ties broken by smallest graph vertex).
pub fn classify_components(a: &GentleAlgebra, g: &UpDownGraph) -> Vec<GraphComponent> {
    let n = g.vertices.len();
    let mut seen = vec![false; n];
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, ga) in g.arrows.iter().enumerate() {
        incident[ga.tail].push(i);
        if ga.head != ga.tail {
            incident[ga.head].push(i);
        }
    }
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        // collect the connected component
        let mut stack = vec![start];
        seen[start] = true;
        let mut verts = vec![start];
        let mut arrows = Vec::new();
        while let Some(v) = stack.pop() {
            for &e in &incident[v] {
                if !arrows.contains(&e) {
                    arrows.push(e);
                }
                let other = if g.arrows[e].tail == v {
                    g.arrows[e].head
                } else {
                    g.arrows[e].tail
                };
                if !seen[other] {
                    seen[other] = true;
                    verts.push(other);
                    stack.push(other);
                }
            }
        }
        let kind = if arrows.len() == verts.len() {
            ComponentKind::Band
        } else {
            debug_assert_eq!(arrows.len() + 1, verts.len(), "component is not a chain");
            ComponentKind::String
        };
        let (walk_vertices, walk_arrows) = order_walk(g, &incident, &verts, kind);
        let word = canonical_word(g, &walk_vertices, &walk_arrows, kind);
        let mut dim = vec![0usize; a.n_vertices()];
        for &v in &walk_vertices {
            dim[g.vertices[v].q] += 1;
        }
        let mut rank = vec![0usize; a.n_arrows()];
        for &e in &walk_arrows {
            rank[g.arrows[e].qa] += 1;
        }
        components.push(GraphComponent {
            kind,
            gvertices: walk_vertices,
            garrows: walk_arrows,
            dim,
            rank,
            word,
        });
    }
    components.sort_by(|x, y| {
        x.word
            .cmp(&y.word)
            .then_with(|| x.gvertices.iter().min().cmp(&y.gvertices.iter().min()))
    });
    components
}

/// Orders a component's vertices and arrows along the walk. Strings start
/// from an endpoint; bands start anywhere.
fn order_walk(
    g: &UpDownGraph,
    incident: &[Vec<usize>],
    verts: &[usize],
    kind: ComponentKind,
) -> (Vec<usize>, Vec<usize>) {
    let start = match kind {
        ComponentKind::String => verts
            .iter()
            .copied()
            .filter(|&v| incident[v].len() <= 1)
            .min()
            .unwrap_or(verts[0]),
        ComponentKind::Band => *verts.iter().min().unwrap(),
    };
    let mut walk_vertices = vec![start];
    let mut walk_arrows = Vec::new();
    let mut current = start;
    let mut used_edge: Option<usize> = None;
    loop {
        let next_edge = incident[current]
            .iter()
            .copied()
            .find(|&e| Some(e) != used_edge && !walk_arrows.contains(&e));
        let Some(e) = next_edge else { break };
        walk_arrows.push(e);
        let other = if g.arrows[e].tail == current {
            g.arrows[e].head
        } else {
            g.arrows[e].tail
        };
        if other == start && walk_arrows.len() == verts.len() {
            break; // band closed
        }
        walk_vertices.push(other);
        used_edge = Some(e);
        current = other;
    }
    (walk_vertices, walk_arrows)
}

fn canonical_word(
    g: &UpDownGraph,
    walk_vertices: &[usize],
    walk_arrows: &[usize],
    kind: ComponentKind,
) -> Word {
    if walk_arrows.is_empty() {
        return Word {
            tokens: Vec::new(),
            lone_vertex: Some(g.vertices[walk_vertices[0]].q),
        };
    }
    // tokens in walk order: (quiver arrow, traversed tail->head?)
    let tokens: Vec<(usize, bool)> = walk_arrows
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let from = walk_vertices[i];
            (g.arrows[e].qa, g.arrows[e].tail == from)
        })
        .collect();
    let reversed: Vec<(usize, bool)> = tokens.iter().rev().map(|&(a, f)| (a, !f)).collect();
    let best = match kind {
        ComponentKind::String => std::cmp::min(tokens, reversed),
        ComponentKind::Band => {
            let mut best: Option<Vec<(usize, bool)>> = None;
            for cand in [tokens, reversed] {
                for shift in 0..cand.len() {
                    let mut rot = cand.clone();
                    rot.rotate_left(shift);
                    if best.as_ref().is_none_or(|b| rot < *b) {
                        best = Some(rot);
                    }
                }
            }
            best.unwrap()
        }
    };
    Word {
        tokens: best,
        lone_vertex: None,
    }
}

#[derive(Debug, Clone)]
pub struct DecompEntry {
    pub kind: ComponentKind,
    pub word: Word,
    pub dim: DimVec,
    pub rank: RankFn,
    pub multiplicity: usize,
}

#[derive(Debug, Clone)]
pub struct GenericDecomposition {
    pub entries: Vec<DecompEntry>,
    /// Raised when two components share (dim, rank) but have different
    /// words; such summands are reported separately, never merged.
    pub warnings: Vec<String>,
}

impl GenericDecomposition {
    pub fn band_entries(&self) -> impl Iterator<Item = &DecompEntry> {
        self.entries
            .iter()
            .filter(|e| e.kind == ComponentKind::Band)
    }
}

/// Groups the components of `Gamma(d, r, eps)` by canonical word.
pub fn generic_decomposition(
    a: &GentleAlgebra,
    d: &DimVec,
    r: &RankFn,
    eps: &SignFunction,
) -> Result<GenericDecomposition> {
    let g = updown_graph(a, d, r, eps)?;
    let components = classify_components(a, &g);
    let mut entries: Vec<DecompEntry> = Vec::new();
    for c in &components {
        match entries.iter_mut().find(|e| e.word == c.word) {
            Some(e) => {
                debug_assert_eq!(e.dim, c.dim);
                debug_assert_eq!(e.rank, c.rank);
                e.multiplicity += 1;
            }
            None => entries.push(DecompEntry {
                kind: c.kind,
                word: c.word.clone(),
                dim: c.dim.clone(),
                rank: c.rank.clone(),
                multiplicity: 1,
            }),
        }
    }
    let mut warnings = Vec::new();
    for (i, x) in entries.iter().enumerate() {
        for y in entries.iter().skip(i + 1) {
            if x.dim == y.dim && x.rank == y.rank {
                warnings.push(format!(
                    "distinct words \"{}\" and \"{}\" share (d, r); kept separate",
                    x.word.render(a),
                    y.word.render(a)
                ));
            }
        }
    }
    Ok(GenericDecomposition { entries, warnings })
}

/// Number of band summands counted with multiplicity; this is the
/// transcendence degree of the field of rational invariants of
/// `mod(A, d, r)`.
pub fn transcendence_degree(
    a: &GentleAlgebra,
    d: &DimVec,
    r: &RankFn,
    eps: &SignFunction,
) -> Result<usize> {
    Ok(generic_decomposition(a, d, r, eps)?
        .band_entries()
        .map(|e| e.multiplicity)
        .sum())
}

/// Band parameter: a named indeterminate or a nonzero rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LambdaValue {
    Var(String),
    Rat(Rational),
}

/// Graph sinks on a band, sorted by (quiver vertex, level); the base point
/// `Theta(b)` defaults to the smallest. Every sink has exactly one incoming
/// arrow whose head sign is -1, which is where the parameter lands.
pub fn band_sinks(g: &UpDownGraph, band: &GraphComponent) -> Vec<usize> {
    let mut sinks: Vec<usize> = band
        .gvertices
        .iter()
        .copied()
        .filter(|&v| {
            band.garrows
                .iter()
                .all(|&e| g.arrows[e].tail != v || g.arrows[e].head == v)
        })
        .collect();
    sinks.sort_by_key(|&v| (g.vertices[v].q, g.vertices[v].level));
    sinks
}

pub fn canonical_basepoints(g: &UpDownGraph, bands: &[&GraphComponent]) -> Vec<usize> {
    bands
        .iter()
        .map(|b| {
            *band_sinks(g, b)
                .first()
                .expect("a band over an acyclic quiver has a sink")
        })
        .collect()
}

/// An explicit module: one polynomial matrix per arrow, of shape
/// `d(ha) x d(ta)`, with basis `v_1^i, ..., v_d(i)^i` at each vertex.
#[derive(Debug, Clone)]
pub struct Representation {
    pub dims: DimVec,
    pub mats: Vec<PolyMatrix>,
    ring: PolyRing,
}

impl Representation {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn new(ring: PolyRing, dims: DimVec, mats: Vec<PolyMatrix>) -> Self {
        Representation { dims, mats, ring }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Product of arrow matrices along a path (identity for the empty path
    /// at `fallback_vertex`).
    pub fn path_matrix(&self, path: &[usize], fallback_vertex: usize) -> PolyMatrix {
        if path.is_empty() {
            return PolyMatrix::identity(&self.ring, self.dims[fallback_vertex]);
        }
        let mut m = self.mats[path[0]].clone();
        for &a in &path[1..] {
            m = self.mats[a].mul(&m);
        }
        m
    }

    /// All relation products vanish.
    pub fn satisfies_relations(&self, a: &GentleAlgebra) -> bool {
        a.relation_pairs()
            .iter()
            .all(|&(x, y)| self.mats[y].mul(&self.mats[x]).is_zero())
    }

    pub fn specialize(&self, assign: &BTreeMap<String, Rational>) -> Result<QRep> {
        let mats = self
            .mats
            .iter()
            .map(|m| m.specialize(assign))
            .collect::<Result<Vec<_>>>()?;
        Ok(QRep {
            dims: self.dims.clone(),
            mats,
        })
    }

    pub fn cast(&self, ring: &PolyRing) -> Result<Representation> {
        let mats = self
            .mats
            .iter()
            .map(|m| m.cast(ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation {
            dims: self.dims.clone(),
            mats,
            ring: ring.clone(),
        })
    }

    /// Block-diagonal sum; both sides must share the variable context.
    pub fn direct_sum(&self, other: &Representation) -> Representation {
        assert!(self.ring == other.ring, "direct sum needs one variable context");
        Representation {
            dims: self
                .dims
                .iter()
                .zip(&other.dims)
                .map(|(a, b)| a + b)
                .collect(),
            mats: self
                .mats
                .iter()
                .zip(&other.mats)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
            ring: self.ring.clone(),
        }
    }
}

/// A fully rational module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QRep {
    pub dims: DimVec,
    pub mats: Vec<QMatrix>,
}

impl QRep {
    pub fn zero(a: &GentleAlgebra) -> Self {
        QRep {
            dims: vec![0; a.n_vertices()],
            mats: a
                .quiver()
                .arrows()
                .iter()
                .map(|_| QMatrix::zero(0, 0))
                .collect(),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn path_matrix(&self, path: &[usize], fallback_vertex: usize) -> QMatrix {
        if path.is_empty() {
            return QMatrix::identity(self.dims[fallback_vertex]);
        }
        let mut m = self.mats[path[0]].clone();
        for &a in &path[1..] {
            m = self.mats[a].mul(&m);
        }
        m
    }

    pub fn satisfies_relations(&self, a: &GentleAlgebra) -> bool {
        a.relation_pairs()
            .iter()
            .all(|&(x, y)| self.mats[y].mul(&self.mats[x]).is_zero())
    }

    pub fn direct_sum(&self, other: &QRep) -> QRep {
        QRep {
            dims: self
                .dims
                .iter()
                .zip(&other.dims)
                .map(|(a, b)| a + b)
                .collect(),
            mats: self
                .mats
                .iter()
                .zip(&other.mats)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
        }
    }

    /// Base change `M(a) -> g(ha) M(a) g(ta)^(-1)`.
    pub fn conjugate(&self, a: &GentleAlgebra, g: &[QMatrix]) -> QRep {
        let inverses: Vec<QMatrix> = g
            .iter()
            .map(|m| m.inverse().expect("conjugating matrix must be invertible"))
            .collect();
        QRep {
            dims: self.dims.clone(),
            mats: a
                .quiver()
                .arrows()
                .iter()
                .enumerate()
                .map(|(i, ar)| g[ar.head].mul(&self.mats[i]).mul(&inverses[ar.tail]))
                .collect(),
        }
    }
}

/// The up-and-down module of a graph: entries are 1, except that the arrow
/// entering the base point of band `b` with head sign -1 carries the band
/// parameter.
pub fn updown_module(
    a: &GentleAlgebra,
    g: &UpDownGraph,
    eps: &SignFunction,
    components: &[GraphComponent],
    basepoints: &[usize],
    lambdas: &[LambdaValue],
) -> Result<Representation> {
    let bands: Vec<&GraphComponent> = components
        .iter()
        .filter(|c| c.kind == ComponentKind::Band)
        .collect();
    if basepoints.len() != bands.len() || lambdas.len() != bands.len() {
        return Err(Error::MissingLambda(format!(
            "expected {} band parameters",
            bands.len()
        )));
    }
    for (i, b) in bands.iter().enumerate() {
        if !b.gvertices.contains(&basepoints[i]) {
            return Err(Error::InvalidSignFunction(format!(
                "base point {} is not on band {}",
                basepoints[i], i
            )));
        }
        if !band_sinks(g, b).contains(&basepoints[i]) {
            return Err(Error::InvalidSignFunction(format!(
                "base point for band {} must be a graph sink",
                i + 1
            )));
        }
        if let LambdaValue::Rat(x) = &lambdas[i] {
            if x.is_zero() {
                return Err(Error::DegenerateLambda(format!("b{}", i + 1)));
            }
        }
    }
    let vars: Vec<String> = lambdas
        .iter()
        .filter_map(|l| match l {
            LambdaValue::Var(v) => Some(v.clone()),
            LambdaValue::Rat(_) => None,
        })
        .collect();
    let ring = PolyRing::new(vars);
    let lambda_polys: Vec<MultiPoly> = lambdas
        .iter()
        .map(|l| match l {
            LambdaValue::Var(v) => ring.var(v),
            LambdaValue::Rat(x) => ring.constant(x.clone()),
        })
        .collect();

    // which graph arrow carries each band's parameter
    let mut special: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, b) in bands.iter().enumerate() {
        let theta = basepoints[i];
        let carrier = b.garrows.iter().copied().find(|&e| {
            let ga = &g.arrows[e];
            let ar = a.quiver().arrow(ga.qa);
            ga.head == theta && eps.get(ar.head, ar.color) == -1
        });
        match carrier {
            Some(e) => {
                special.insert(e, i);
            }
            None => {
                return Err(Error::InvalidSignFunction(format!(
                    "base point of band {} has no incoming arrow with head sign -1",
                    i + 1
                )))
            }
        }
    }

    let q = a.quiver();
    let mut mats: Vec<PolyMatrix> = q
        .arrows()
        .iter()
        .map(|ar| PolyMatrix::zero(&ring, g.dim[ar.head], g.dim[ar.tail]))
        .collect();
    for (e, ga) in g.arrows.iter().enumerate() {
        let row = g.vertices[ga.head].level - 1;
        let col = g.vertices[ga.tail].level - 1;
        let value = match special.get(&e) {
            Some(&band) => lambda_polys[band].clone(),
            None => ring.one(),
        };
        mats[ga.qa].set(row, col, value);
    }
    let rep = Representation::new(ring, g.dim.clone(), mats);
    debug_assert!(rep.satisfies_relations(a));
    Ok(rep)
}

/// Convenience: graph, components, canonical base points, and module in one
/// call, with symbolic parameters `l1, l2, ...` unless `lambdas` is given.
#[derive(Debug)]
pub struct UpDownData {
    pub graph: UpDownGraph,
    pub components: Vec<GraphComponent>,
    pub basepoints: Vec<usize>,
    pub module: Representation,
}

pub fn updown_data(
    a: &GentleAlgebra,
    d: &DimVec,
    r: &RankFn,
    eps: &SignFunction,
    lambdas: Option<Vec<LambdaValue>>,
) -> Result<UpDownData> {
    let graph = updown_graph(a, d, r, eps)?;
    let components = classify_components(a, &graph);
    let bands: Vec<&GraphComponent> = components
        .iter()
        .filter(|c| c.kind == ComponentKind::Band)
        .collect();
    let basepoints = canonical_basepoints(&graph, &bands);
    let lambdas = lambdas.unwrap_or_else(|| {
        (0..bands.len())
            .map(|i| LambdaValue::Var(format!("l{}", i + 1)))
            .collect()
    });
    let module = updown_module(a, &graph, eps, &components, &basepoints, &lambdas)?;
    Ok(UpDownData {
        graph,
        components,
        basepoints,
        module,
    })
}
