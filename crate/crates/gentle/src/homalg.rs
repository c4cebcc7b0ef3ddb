//! Exact homological linear algebra: projective modules, Hom spaces,
//! minimal projective presentations, the explicit band presentation, and
//! Ext^1 dimensions.
//!
//! Projectives of a gentle algebra have the usual monomial basis: the
//! ideal-avoiding paths out of the base vertex, with arrows acting by left
//! concatenation. General presentations are computed by the cover-of-top
//! construction over the rationals; for a regular pair `(d, r)` the band
//! presentation is assembled directly from the up-and-down graph, with the
//! band parameters kept symbolic.

use crate::error::{Error, Result};
use crate::exact::{MultiPoly, PolyRing, QMatrix, Rational};
use crate::quiver::{DimVec, GentleAlgebra, Path};
use crate::rank::RankFn;
use crate::updown::{
    band_sinks, classify_components, updown_graph, ComponentKind, GraphComponent, LambdaValue,
    QRep, SignFunction, UpDownGraph,
};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// The indecomposable projective at a vertex: ideal-avoiding paths out of
/// the base, graded by head vertex.
#[derive(Debug, Clone)]
pub struct ProjectiveModule {
    pub base: usize,
    /// All ideal-avoiding paths with tail `base`, sorted by length then by
    /// arrow indices; the first is the trivial path.
    pub paths: Vec<Path>,
    /// Indices into `paths`, grouped by head vertex.
    pub by_vertex: Vec<Vec<usize>>,
}

impl ProjectiveModule {
    pub fn dims(&self) -> DimVec {
        self.by_vertex.iter().map(|v| v.len()).collect()
    }

    /// Position of `path` within its head vertex block.
    pub fn local_index(&self, a: &GentleAlgebra, path: &Path) -> Option<usize> {
        let head = a.path_head(path, self.base);
        self.by_vertex[head]
            .iter()
            .position(|&i| self.paths[i] == *path)
    }

    /// The projective as an explicit module; action matrices are 0/1 with at
    /// most one 1 per column.
    pub fn to_qrep(&self, a: &GentleAlgebra) -> QRep {
        let dims = self.dims();
        let mats = a
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, ar)| {
                let mut m = QMatrix::zero(dims[ar.head], dims[ar.tail]);
                for (col, &pi) in self.by_vertex[ar.tail].iter().enumerate() {
                    let mut longer = self.paths[pi].clone();
                    longer.push(ai);
                    if a.path_avoids_ideal(&longer) {
                        let row = self
                            .local_index(a, &longer)
                            .expect("extended path is in the basis");
                        m.set(row, col, Rational::one());
                    }
                }
                m
            })
            .collect();
        QRep { dims, mats }
    }
}

pub fn projective_module(a: &GentleAlgebra, base: usize) -> Result<ProjectiveModule> {
    if base >= a.n_vertices() {
        return Err(Error::UnknownVertex(format!("#{base}")));
    }
    let mut paths: Vec<Path> = vec![Vec::new()];
    let mut frontier: Vec<Path> = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            let head = a.path_head(p, base);
            for ai in a.out_arrows(head) {
                let mut longer = p.clone();
                longer.push(ai);
                if a.path_avoids_ideal(&longer) {
                    next.push(longer);
                }
            }
        }
        next.sort();
        paths.extend(next.iter().cloned());
        frontier = next;
    }
    let mut by_vertex = vec![Vec::new(); a.n_vertices()];
    for (i, p) in paths.iter().enumerate() {
        by_vertex[a.path_head(p, base)].push(i);
    }
    Ok(ProjectiveModule {
        base,
        paths,
        by_vertex,
    })
}

/// Basis of the space of module morphisms `M -> N`: vertex-wise matrix
/// tuples satisfying all intertwining equations exactly.
#[derive(Debug, Clone)]
pub struct HomBasis {
    pub basis: Vec<Vec<QMatrix>>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn hom_space(a: &GentleAlgebra, m: &QRep, n: &QRep) -> HomBasis {
    let nv = a.n_vertices();
    let mut offsets = vec![0usize; nv + 1];
    for i in 0..nv {
        offsets[i + 1] = offsets[i] + n.dims[i] * m.dims[i];
    }
    let unknowns = offsets[nv];
    let var = |i: usize, r: usize, c: usize| offsets[i] + r * m.dims[i] + c;

    let total_rows: usize = a
        .quiver()
        .arrows()
        .iter()
        .map(|ar| n.dims[ar.head] * m.dims[ar.tail])
        .sum();
    let mut system = QMatrix::zero(total_rows, unknowns);
    let mut row = 0;
    for (ai, ar) in a.quiver().arrows().iter().enumerate() {
        // phi(ha) M(a) - N(a) phi(ta) = 0
        for p in 0..n.dims[ar.head] {
            for q in 0..m.dims[ar.tail] {
                for k in 0..m.dims[ar.head] {
                    let coeff = m.mats[ai].get(k, q);
                    if !coeff.is_zero() {
                        let j = var(ar.head, p, k);
                        let v = system.get(row, j).clone() + coeff;
                        system.set(row, j, v);
                    }
                }
                for k in 0..n.dims[ar.tail] {
                    let coeff = n.mats[ai].get(p, k);
                    if !coeff.is_zero() {
                        let j = var(ar.tail, k, q);
                        let v = system.get(row, j).clone() - coeff;
                        system.set(row, j, v);
                    }
                }
                row += 1;
            }
        }
    }
    let kernel = system.right_kernel();
    let basis = kernel
        .into_iter()
        .map(|vec| {
            (0..nv)
                .map(|i| QMatrix::from_fn(n.dims[i], m.dims[i], |r, c| vec[var(i, r, c)].clone()))
                .collect()
        })
        .collect();
    HomBasis { basis }
}

pub fn hom_dim(a: &GentleAlgebra, m: &QRep, n: &QRep) -> usize {
    hom_space(a, m, n).dim()
}

/// A formal sum of paths with polynomial coefficients; one matrix entry of
/// the presentation map `F`.
pub type PathSum = Vec<(MultiPoly, Path)>;

/// A projective presentation `P1 --F--> P0 -> X -> 0`. Slots hold base
/// vertices; `entries[u][s]` is the component of `F` from the `P1` slot `s`
/// into the `P0` slot `u`, a sum of paths running from `p0[u]` to `p1[s]`.
#[derive(Debug, Clone)]
pub struct ProjectivePresentation {
    pub ring: PolyRing,
    pub p0: Vec<usize>,
    pub p1: Vec<usize>,
    pub entries: Vec<Vec<PathSum>>,
    pub minimal: bool,
    /// Graph provenance when built from an up-and-down graph: the source and
    /// sink graph vertices backing the slots.
    pub p0_gvertices: Option<Vec<usize>>,
    pub p1_gvertices: Option<Vec<usize>>,
}

impl ProjectivePresentation {
    /// Multiplicity of each `P_v` in `P0` minus its multiplicity in `P1`.
    pub fn weight(&self, n_vertices: usize) -> Vec<i64> {
        let mut theta = vec![0i64; n_vertices];
        for &x in &self.p0 {
            theta[x] += 1;
        }
        for &x in &self.p1 {
            theta[x] -= 1;
        }
        theta
    }

    /// Re-expresses all entry coefficients in another ring.
    pub fn cast_ring(&self, ring: &PolyRing) -> Result<ProjectivePresentation> {
        let mut out = self.clone();
        out.ring = ring.clone();
        for row in &mut out.entries {
            for cell in row {
                for (coeff, _) in cell {
                    *coeff = coeff.cast(ring)?;
                }
            }
        }
        Ok(out)
    }

    /// Vertex-wise matrices of the induced module map `P1 -> P0` on the path
    /// bases, after specializing the coefficients.
    pub fn f_vertex_maps(
        &self,
        a: &GentleAlgebra,
        assign: &BTreeMap<String, Rational>,
    ) -> Result<Vec<QMatrix>> {
        let p0_proj: Vec<ProjectiveModule> = self
            .p0
            .iter()
            .map(|&x| projective_module(a, x))
            .collect::<Result<_>>()?;
        let p1_proj: Vec<ProjectiveModule> = self
            .p1
            .iter()
            .map(|&x| projective_module(a, x))
            .collect::<Result<_>>()?;
        let mut maps = Vec::new();
        for y in 0..a.n_vertices() {
            let cols: usize = p1_proj.iter().map(|p| p.by_vertex[y].len()).sum();
            let rows: usize = p0_proj.iter().map(|p| p.by_vertex[y].len()).sum();
            let mut f = QMatrix::zero(rows, cols);
            let mut col = 0;
            for (s, proj1) in p1_proj.iter().enumerate() {
                for &pi in &proj1.by_vertex[y] {
                    let sigma = &proj1.paths[pi];
                    let mut row_offset = 0;
                    for (u, proj0) in p0_proj.iter().enumerate() {
                        for (coeff, rho) in &self.entries[u][s] {
                            let mut composite = rho.clone();
                            composite.extend(sigma.iter().copied());
                            if !a.path_avoids_ideal(&composite) {
                                continue;
                            }
                            let local = proj0
                                .local_index(a, &composite)
                                .expect("composite path lies in the projective basis");
                            let row = row_offset + local;
                            let c = coeff.eval_named(assign)?;
                            let v = f.get(row, col).clone() + c;
                            f.set(row, col, v);
                        }
                        row_offset += proj0.by_vertex[y].len();
                    }
                    col += 1;
                }
            }
            maps.push(f);
        }
        Ok(maps)
    }
}

/// A projective cover `P -> M` with its kernel as an explicit module.
#[derive(Debug, Clone)]
pub struct Cover {
    /// Base vertex per cover slot, in vertex order.
    pub slots: Vec<usize>,
    /// The chosen lift vector in `M(x)` per slot.
    pub lifts: Vec<Vec<Rational>>,
    /// The cover as an explicit module (path bases, slot-major).
    pub p_rep: QRep,
    /// The cover map, one matrix `P(y) -> M(y)` per vertex.
    pub pi: Vec<QMatrix>,
    /// The kernel, as an explicit module.
    pub kernel: QRep,
    /// Kernel basis columns inside `P(y)`, per vertex.
    pub kernel_embed: Vec<QMatrix>,
    /// Per-slot projectives.
    pub projs: Vec<ProjectiveModule>,
}

/// Projective cover of `M` by covering its top `M / rad M`,
/// `rad M = sum of arrow images`. The lift picks the standard basis vectors
/// complementary to the pivot coordinates of the radical (deterministic).
pub fn projective_cover(a: &GentleAlgebra, m: &QRep) -> Result<Cover> {
    let nv = a.n_vertices();
    let mut slots = Vec::new();
    let mut lifts: Vec<Vec<Rational>> = Vec::new();
    for x in 0..nv {
        let gens: Vec<Vec<Rational>> = a
            .in_arrows(x)
            .iter()
            .flat_map(|&b| {
                let mat = &m.mats[b];
                (0..mat.cols)
                    .map(|c| (0..mat.rows).map(|r| mat.get(r, c).clone()).collect())
                    .collect::<Vec<_>>()
            })
            .collect();
        // rows of `rad` span the radical at x
        let mut rad = QMatrix::zero(gens.len(), m.dims[x]);
        for (i, g) in gens.iter().enumerate() {
            for (j, v) in g.iter().enumerate() {
                rad.set(i, j, v.clone());
            }
        }
        let pivots = rad.rref();
        for k in 0..m.dims[x] {
            if !pivots.contains(&k) {
                slots.push(x);
                let mut e = vec![Rational::zero(); m.dims[x]];
                e[k] = Rational::one();
                lifts.push(e);
            }
        }
    }

    let projs: Vec<ProjectiveModule> = slots
        .iter()
        .map(|&x| projective_module(a, x))
        .collect::<Result<_>>()?;

    // the cover as a module: basis of P(y) is (slot, path into y), slot-major
    let mut dims = vec![0usize; nv];
    for p in &projs {
        for y in 0..nv {
            dims[y] += p.by_vertex[y].len();
        }
    }
    let offset = |slot: usize, y: usize| -> usize {
        projs[..slot].iter().map(|p| p.by_vertex[y].len()).sum()
    };
    let mats: Vec<QMatrix> = a
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, ar)| {
            let mut big = QMatrix::zero(dims[ar.head], dims[ar.tail]);
            for (s, proj) in projs.iter().enumerate() {
                let block = proj.to_qrep(a).mats[ai].clone();
                let ro = offset(s, ar.head);
                let co = offset(s, ar.tail);
                for i in 0..block.rows {
                    for j in 0..block.cols {
                        if !block.get(i, j).is_zero() {
                            big.set(ro + i, co + j, block.get(i, j).clone());
                        }
                    }
                }
            }
            big
        })
        .collect();
    let p_rep = QRep { dims, mats };

    // cover map: (slot, path rho) |-> M(rho) . lift_slot
    let mut pi = Vec::new();
    for y in 0..nv {
        let mut mat = QMatrix::zero(m.dims[y], p_rep.dims[y]);
        let mut col = 0;
        for (s, proj) in projs.iter().enumerate() {
            for &pidx in &proj.by_vertex[y] {
                let rho = &proj.paths[pidx];
                let action = m.path_matrix(rho, slots[s]);
                let img = action.mul_vec(&lifts[s]);
                for (r, v) in img.iter().enumerate() {
                    mat.set(r, col, v.clone());
                }
                col += 1;
            }
        }
        pi.push(mat);
    }

    // Nakayama: the cover hits a basis of the top, so it is surjective
    for y in 0..nv {
        debug_assert_eq!(pi[y].rank(), m.dims[y], "cover must be surjective");
    }

    // kernel, with inherited arrow action
    let kernel_bases: Vec<Vec<Vec<Rational>>> = (0..nv).map(|y| pi[y].right_kernel()).collect();
    let kernel_embed: Vec<QMatrix> = (0..nv)
        .map(|y| {
            let basis = &kernel_bases[y];
            QMatrix::from_fn(p_rep.dims[y], basis.len(), |r, c| basis[c][r].clone())
        })
        .collect();
    let kdims: DimVec = kernel_bases.iter().map(|b| b.len()).collect();
    let kmats: Vec<QMatrix> = a
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, ar)| {
            let mut km = QMatrix::zero(kdims[ar.head], kdims[ar.tail]);
            for c in 0..kdims[ar.tail] {
                let vec: Vec<Rational> = (0..p_rep.dims[ar.tail])
                    .map(|r| kernel_embed[ar.tail].get(r, c).clone())
                    .collect();
                let img = p_rep.mats[ai].mul_vec(&vec);
                let coords = kernel_embed[ar.head]
                    .solve(&img)
                    .expect("arrow action preserves the kernel");
                for (r, v) in coords.iter().enumerate() {
                    km.set(r, c, v.clone());
                }
            }
            km
        })
        .collect();
    let kernel = QRep {
        dims: kdims,
        mats: kmats,
    };

    Ok(Cover {
        slots,
        lifts,
        p_rep,
        pi,
        kernel,
        kernel_embed,
        projs,
    })
}

/// Minimal projective presentation of a rational module by two successive
/// projective covers. Returns the presentation together with the first
/// syzygy `K = ker(P0 -> M)`.
pub fn minimal_presentation(
    a: &GentleAlgebra,
    m: &QRep,
) -> Result<(ProjectivePresentation, QRep)> {
    let ring = PolyRing::constants();
    let c0 = projective_cover(a, m)?;
    let c1 = projective_cover(a, &c0.kernel)?;
    // express each P1 generator, a vector of K(u), inside P0(u)'s path basis
    let mut entries: Vec<Vec<PathSum>> = vec![vec![Vec::new(); c1.slots.len()]; c0.slots.len()];
    for (s, &u) in c1.slots.iter().enumerate() {
        let w_in_p0 = c0.kernel_embed[u].mul_vec(&c1.lifts[s]);
        // decode coordinates of P0(u): slot-major (slot, path) pairs
        let mut idx = 0;
        for (u0, proj0) in c0.projs.iter().enumerate() {
            for &pidx in &proj0.by_vertex[u] {
                let coeff = &w_in_p0[idx];
                if !coeff.is_zero() {
                    entries[u0][s].push((ring.constant(coeff.clone()), proj0.paths[pidx].clone()));
                }
                idx += 1;
            }
        }
    }
    let pres = ProjectivePresentation {
        ring,
        p0: c0.slots.clone(),
        p1: c1.slots.clone(),
        entries,
        minimal: true,
        p0_gvertices: None,
        p1_gvertices: None,
    };
    Ok((pres, c0.kernel))
}

/// `dim Ext^1(M, N) = dim Hom(K, N) - dim Hom(P0, N) + dim Hom(M, N)` for
/// the cover `0 -> K -> P0 -> M -> 0`; all three terms by exact solves.
pub fn ext1_dim(a: &GentleAlgebra, m: &QRep, n: &QRep) -> Result<usize> {
    if m.total_dim() == 0 {
        return Ok(0);
    }
    let c0 = projective_cover(a, m)?;
    let h_k = hom_dim(a, &c0.kernel, n);
    let h_p0 = hom_dim(a, &c0.p_rep, n);
    let h_m = hom_dim(a, m, n);
    Ok(h_k + h_m - h_p0)
}

/// `pdim M <= 1` iff the cover of the first syzygy is an isomorphism.
pub fn pdim_le1(a: &GentleAlgebra, m: &QRep) -> Result<bool> {
    let c0 = projective_cover(a, m)?;
    let c1 = projective_cover(a, &c0.kernel)?;
    Ok(c1.p_rep.total_dim() == c0.kernel.total_dim())
}

/// The explicit presentation of an up-and-down module over a regular pair
/// `(d, r)`: `P0` is indexed by the graph sources, `P1` by the graph sinks,
/// and each sink contributes the two paths `l+`, `l-` traced back to the
/// sources, with the band parameter on the `l+` branch at the band's base
/// point and `-1` on the `l-` branch.
pub fn band_presentation(
    a: &GentleAlgebra,
    d: &DimVec,
    r: &RankFn,
    eps: &SignFunction,
    basepoints: &[usize],
    lambdas: &[LambdaValue],
) -> Result<ProjectivePresentation> {
    let g = updown_graph(a, d, r, eps)?;
    let components = classify_components(a, &g);
    if components.iter().any(|c| c.kind != ComponentKind::Band) {
        return Err(Error::NotRegular(
            "the up-and-down graph has a string component".to_string(),
        ));
    }
    let bands: Vec<&GraphComponent> = components.iter().collect();
    if basepoints.len() != bands.len() || lambdas.len() != bands.len() {
        return Err(Error::MissingLambda(format!(
            "expected {} band parameters",
            bands.len()
        )));
    }
    for (i, b) in bands.iter().enumerate() {
        if !band_sinks(&g, b).contains(&basepoints[i]) {
            return Err(Error::InvalidSignFunction(format!(
                "base point for band {} must be a graph sink on it",
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

    let incoming = |v: usize| -> Vec<usize> {
        (0..g.arrows.len())
            .filter(|&e| g.arrows[e].head == v)
            .collect()
    };
    let outgoing = |v: usize| -> Vec<usize> {
        (0..g.arrows.len())
            .filter(|&e| g.arrows[e].tail == v)
            .collect()
    };

    let mut sinks: Vec<usize> = (0..g.vertices.len())
        .filter(|&v| outgoing(v).is_empty())
        .collect();
    sinks.sort_by_key(|&v| (g.vertices[v].q, g.vertices[v].level));
    let mut sources: Vec<usize> = (0..g.vertices.len())
        .filter(|&v| incoming(v).is_empty())
        .collect();
    sources.sort_by_key(|&v| (g.vertices[v].q, g.vertices[v].level));

    let source_slot: BTreeMap<usize, usize> =
        sources.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    // walk backwards from `sink` along the graph arrow `first` to a source;
    // returns the source vertex and the quiver path in source-to-sink order
    let trace = |sink: usize, first: usize| -> (usize, Path) {
        let _ = sink;
        let mut rev = vec![first];
        let mut v = g.arrows[first].tail;
        loop {
            let inc = incoming(v);
            if inc.is_empty() {
                break;
            }
            debug_assert_eq!(inc.len(), 1, "through vertex has one incoming arrow");
            rev.push(inc[0]);
            v = g.arrows[inc[0]].tail;
        }
        rev.reverse();
        (v, rev.iter().map(|&e| g.arrows[e].qa).collect())
    };

    let mut entries: Vec<Vec<PathSum>> = vec![vec![Vec::new(); sinks.len()]; sources.len()];
    for (s, &sink) in sinks.iter().enumerate() {
        let inc = incoming(sink);
        debug_assert_eq!(inc.len(), 2, "a band sink has two incoming arrows");
        let sign_of = |e: usize| {
            let ar = a.quiver().arrow(g.arrows[e].qa);
            eps.get(ar.head, ar.color)
        };
        let plus = inc
            .iter()
            .copied()
            .find(|&e| sign_of(e) == 1)
            .expect("one incoming arrow has head sign +1");
        let minus = inc
            .iter()
            .copied()
            .find(|&e| sign_of(e) == -1)
            .expect("one incoming arrow has head sign -1");
        let band_at_sink = bands
            .iter()
            .position(|b| b.gvertices.contains(&sink))
            .expect("every sink lies on a band");
        let plus_coeff = if basepoints[band_at_sink] == sink {
            lambda_polys[band_at_sink].clone()
        } else {
            ring.one()
        };
        let (src_plus, path_plus) = trace(sink, plus);
        let (src_minus, path_minus) = trace(sink, minus);
        entries[source_slot[&src_plus]][s].push((plus_coeff, path_plus));
        entries[source_slot[&src_minus]][s].push((ring.one().neg(), path_minus));
    }

    Ok(ProjectivePresentation {
        ring,
        p0: sources.iter().map(|&v| g.vertices[v].q).collect(),
        p1: sinks.iter().map(|&v| g.vertices[v].q).collect(),
        entries,
        minimal: true,
        p0_gvertices: Some(sources),
        p1_gvertices: Some(sinks),
    })
}

/// The evaluation map `P0 -> M` of a band presentation, sending the
/// generator of the slot at source `w` to the basis vector of `w`;
/// one matrix per vertex. `m` must be the up-and-down module of the same
/// graph, specialized to rationals.
pub fn band_cover_maps(
    a: &GentleAlgebra,
    g: &UpDownGraph,
    pres: &ProjectivePresentation,
    m: &QRep,
) -> Result<Vec<QMatrix>> {
    let sources = pres
        .p0_gvertices
        .as_ref()
        .ok_or_else(|| Error::Other("presentation lacks graph provenance".to_string()))?;
    let projs: Vec<ProjectiveModule> = pres
        .p0
        .iter()
        .map(|&x| projective_module(a, x))
        .collect::<Result<_>>()?;
    let mut maps = Vec::new();
    for y in 0..a.n_vertices() {
        let cols: usize = projs.iter().map(|p| p.by_vertex[y].len()).sum();
        let mut mat = QMatrix::zero(m.dims[y], cols);
        let mut col = 0;
        for (slot, proj) in projs.iter().enumerate() {
            let w = sources[slot];
            let base_level = g.vertices[w].level - 1;
            for &pidx in &proj.by_vertex[y] {
                let rho = &proj.paths[pidx];
                let action = m.path_matrix(rho, pres.p0[slot]);
                for rrow in 0..m.dims[y] {
                    mat.set(rrow, col, action.get(rrow, base_level).clone());
                }
                col += 1;
            }
        }
        maps.push(mat);
    }
    Ok(maps)
}
