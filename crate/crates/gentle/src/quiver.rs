//! Colored bound quivers and gentle algebras.
//!
//! A coloring assigns every arrow a color such that each color class is a
//! single directed path; the relation ideal is generated by the length-two
//! monochromatic paths. Construction re-derives and asserts the four gentle
//! axioms, the path property of every color class, and acyclicity.
//!
//! Composition convention: a path is a sequence `a_1, ..., a_m` applied left
//! to right (`h(a_j) = t(a_(j+1))`); as an algebra element it is written
//! right-to-left `a_m ... a_1`. A relation pair `(a, b)` therefore means the
//! composite "`a` then `b`" lies in the ideal.

use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt::Write as _;

#[derive(Debug, Clone)]
pub struct Arrow {
    pub name: String,
    pub tail: usize,
    pub head: usize,
    pub color: usize,
}

#[derive(Debug, Clone)]
pub struct ColoredQuiver {
    pub name: String,
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    colors: Vec<String>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

impl ColoredQuiver {
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn n_colors(&self) -> usize {
        self.colors.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn color_name(&self, c: usize) -> &str {
        &self.colors[c]
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow_by_name(&self, name: &str) -> Result<usize> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }
}

/// A dimension vector, indexed by vertex in file order.
pub type DimVec = Vec<usize>;
/// An integral weight, indexed by vertex in file order.
pub type Weight = Vec<i64>;
/// A path as arrow indices in application order (first applied first).
pub type Path = Vec<usize>;

#[derive(Debug, Clone)]
pub struct GentleAlgebra {
    quiver: ColoredQuiver,
    /// Composable monochromatic pairs `(a, b)` with `h(a) = t(b)`, sorted by
    /// color then by position along the color path.
    relations: Vec<(usize, usize)>,
    /// Arrows of each color in path order.
    color_paths: Vec<Vec<usize>>,
    /// Colors incident to each vertex, sorted by color name.
    incident_colors: Vec<Vec<usize>>,
}

impl GentleAlgebra {
    /// Validates the gentle axioms, the coloring, and acyclicity.
    pub fn new(quiver: ColoredQuiver) -> Result<Self> {
        check_axiom_1(&quiver)?;
        let relations_unsorted = monochromatic_pairs(&quiver);
        check_axioms_2_3(&quiver, &relations_unsorted)?;
        // axiom (4) holds structurally: the ideal is generated by the
        // length-two monochromatic paths listed above
        check_acyclic(&quiver)?;
        let color_paths = check_color_paths(&quiver)?;

        let mut relations = Vec::new();
        for path in &color_paths {
            for w in path.windows(2) {
                relations.push((w[0], w[1]));
            }
        }
        debug_assert_eq!(relations.len(), relations_unsorted.len());

        let mut incident_colors = vec![Vec::new(); quiver.n_vertices()];
        for a in &quiver.arrows {
            for v in [a.tail, a.head] {
                if !incident_colors[v].contains(&a.color) {
                    incident_colors[v].push(a.color);
                }
            }
        }
        for list in &mut incident_colors {
            list.sort_by(|&x, &y| quiver.colors[x].cmp(&quiver.colors[y]));
        }

        Ok(GentleAlgebra {
            quiver,
            relations,
            color_paths,
            incident_colors,
        })
    }

    pub fn quiver(&self) -> &ColoredQuiver {
        &self.quiver
    }

    pub fn n_vertices(&self) -> usize {
        self.quiver.n_vertices()
    }

    pub fn n_arrows(&self) -> usize {
        self.quiver.n_arrows()
    }

    /// All composable monochromatic pairs, sorted by color then position.
    pub fn relation_pairs(&self) -> &[(usize, usize)] {
        &self.relations
    }

    pub fn color_path(&self, color: usize) -> &[usize] {
        &self.color_paths[color]
    }

    pub fn color_paths(&self) -> &[Vec<usize>] {
        &self.color_paths
    }

    /// Colors incident to `v`, sorted by color name.
    pub fn colors_at(&self, v: usize) -> &[usize] {
        &self.incident_colors[v]
    }

    pub fn in_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.n_arrows())
            .filter(|&a| self.quiver.arrows[a].head == v)
            .collect()
    }

    pub fn out_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.n_arrows())
            .filter(|&a| self.quiver.arrows[a].tail == v)
            .collect()
    }

    pub fn in_arrow_of_color(&self, v: usize, color: usize) -> Option<usize> {
        self.color_paths[color]
            .iter()
            .copied()
            .find(|&a| self.quiver.arrows[a].head == v)
    }

    pub fn out_arrow_of_color(&self, v: usize, color: usize) -> Option<usize> {
        self.color_paths[color]
            .iter()
            .copied()
            .find(|&a| self.quiver.arrows[a].tail == v)
    }

    /// A path avoids the ideal iff no two consecutive arrows share a color.
    pub fn path_avoids_ideal(&self, path: &[usize]) -> bool {
        path.windows(2)
            .all(|w| self.quiver.arrows[w[0]].color != self.quiver.arrows[w[1]].color)
    }

    pub fn path_tail(&self, path: &[usize], fallback: usize) -> usize {
        path.first()
            .map(|&a| self.quiver.arrows[a].tail)
            .unwrap_or(fallback)
    }

    pub fn path_head(&self, path: &[usize], fallback: usize) -> usize {
        path.last()
            .map(|&a| self.quiver.arrows[a].head)
            .unwrap_or(fallback)
    }

    pub fn path_name(&self, path: &[usize]) -> String {
        if path.is_empty() {
            return "e".to_string();
        }
        // algebra notation composes right-to-left
        path.iter()
            .rev()
            .map(|&a| self.quiver.arrows[a].name.clone())
            .collect::<Vec<_>>()
            .join("*")
    }

    /// The Euler form, computed by chain counting: for a quadratic monomial
    /// ideal, `dim Ext^l(S_i, S_j)` is the number of length-`l` runs of
    /// consecutive arrows along a single color path from `i` to `j` (l = 0:
    /// vertices, l = 1: arrows).
    pub fn euler_form(&self, d: &DimVec, e: &DimVec) -> i64 {
        assert_eq!(d.len(), self.n_vertices());
        assert_eq!(e.len(), self.n_vertices());
        let mut total: i64 = 0;
        for v in 0..self.n_vertices() {
            total += d[v] as i64 * e[v] as i64;
        }
        for path in &self.color_paths {
            for l in 1..=path.len() {
                let sign = if l % 2 == 0 { 1 } else { -1 };
                for w in path.windows(l) {
                    let tail = self.quiver.arrows[w[0]].tail;
                    let head = self.quiver.arrows[w[l - 1]].head;
                    total += sign * d[tail] as i64 * e[head] as i64;
                }
            }
        }
        total
    }

    /// Canonical file rendering; `parse(to_text())` reproduces the structure.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "quiver {}", self.quiver.name);
        for v in &self.quiver.vertices {
            let _ = writeln!(out, "vertex {v}");
        }
        for a in &self.quiver.arrows {
            let _ = writeln!(
                out,
                "arrow {} {} {} {}",
                a.name,
                self.quiver.vertices[a.tail],
                self.quiver.vertices[a.head],
                self.quiver.colors[a.color]
            );
        }
        out
    }
}

pub fn weight_pairing(theta: &Weight, d: &DimVec) -> i64 {
    assert_eq!(theta.len(), d.len());
    theta.iter().zip(d).map(|(t, &x)| t * x as i64).sum()
}

fn monochromatic_pairs(q: &ColoredQuiver) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (a, ar) in q.arrows.iter().enumerate() {
        for (b, br) in q.arrows.iter().enumerate() {
            if ar.head == br.tail && ar.color == br.color {
                out.push((a, b));
            }
        }
    }
    out
}

fn check_axiom_1(q: &ColoredQuiver) -> Result<()> {
    for v in 0..q.n_vertices() {
        let ins: Vec<_> = q.arrows.iter().filter(|a| a.head == v).collect();
        let outs: Vec<_> = q.arrows.iter().filter(|a| a.tail == v).collect();
        if ins.len() > 2 {
            return Err(Error::GentleAxiom {
                axiom: 1,
                vertex: q.vertices[v].clone(),
                detail: format!("{} arrows end there", ins.len()),
            });
        }
        if outs.len() > 2 {
            return Err(Error::GentleAxiom {
                axiom: 1,
                vertex: q.vertices[v].clone(),
                detail: format!("{} arrows start there", outs.len()),
            });
        }
    }
    Ok(())
}

fn check_axioms_2_3(q: &ColoredQuiver, relations: &[(usize, usize)]) -> Result<()> {
    let in_ideal =
        |a: usize, b: usize| relations.iter().any(|&(x, y)| x == a && y == b);
    for (b, br) in q.arrows.iter().enumerate() {
        let followers: Vec<usize> = (0..q.n_arrows())
            .filter(|&c| q.arrows[c].tail == br.head)
            .collect();
        let predecessors: Vec<usize> = (0..q.n_arrows())
            .filter(|&a| q.arrows[a].head == br.tail)
            .collect();
        for (axiom, keep_ideal) in [(2u8, false), (3u8, true)] {
            let f: Vec<usize> = followers
                .iter()
                .copied()
                .filter(|&c| in_ideal(b, c) == keep_ideal)
                .collect();
            if f.len() > 1 {
                let kind = if keep_ideal { "relation" } else { "ideal-avoiding" };
                return Err(Error::GentleAxiom {
                    axiom,
                    vertex: q.vertices[br.head].clone(),
                    detail: format!(
                        "arrow \"{}\" has {} {} continuations ({})",
                        br.name,
                        f.len(),
                        kind,
                        f.iter()
                            .map(|&c| format!("\"{}\"", q.arrows[c].name))
                            .collect::<Vec<_>>()
                            .join(", ")
                    ),
                });
            }
            let g: Vec<usize> = predecessors
                .iter()
                .copied()
                .filter(|&a| in_ideal(a, b) == keep_ideal)
                .collect();
            if g.len() > 1 {
                let kind = if keep_ideal { "relation" } else { "ideal-avoiding" };
                return Err(Error::GentleAxiom {
                    axiom,
                    vertex: q.vertices[br.tail].clone(),
                    detail: format!(
                        "arrow \"{}\" has {} {} predecessors ({})",
                        br.name,
                        g.len(),
                        kind,
                        g.iter()
                            .map(|&a| format!("\"{}\"", q.arrows[a].name))
                            .collect::<Vec<_>>()
                            .join(", ")
                    ),
                });
            }
        }
    }
    Ok(())
}

fn check_acyclic(q: &ColoredQuiver) -> Result<()> {
    // Kahn's algorithm; any leftover vertex sits on an oriented cycle
    let n = q.n_vertices();
    let mut indeg = vec![0usize; n];
    for a in &q.arrows {
        indeg[a.head] += 1;
    }
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop() {
        seen += 1;
        for a in &q.arrows {
            if a.tail == v {
                indeg[a.head] -= 1;
                if indeg[a.head] == 0 {
                    queue.push(a.head);
                }
            }
        }
    }
    if seen < n {
        let v = (0..n).find(|&v| indeg[v] > 0).unwrap();
        return Err(Error::NotAcyclic {
            vertex: q.vertices[v].clone(),
        });
    }
    Ok(())
}

fn check_color_paths(q: &ColoredQuiver) -> Result<Vec<Vec<usize>>> {
    let mut paths = Vec::with_capacity(q.n_colors());
    for color in 0..q.n_colors() {
        let class: Vec<usize> = (0..q.n_arrows())
            .filter(|&a| q.arrows[a].color == color)
            .collect();
        let err = |detail: String| Error::ColorNotAPath {
            color: q.colors[color].clone(),
            detail,
        };
        if class.is_empty() {
            return Err(err("color class is empty".to_string()));
        }
        let mut by_tail = HashMap::new();
        for &a in &class {
            if by_tail.insert(q.arrows[a].tail, a).is_some() {
                return Err(err(format!(
                    "two arrows of the class start at vertex \"{}\"",
                    q.vertices[q.arrows[a].tail]
                )));
            }
        }
        let heads: Vec<usize> = class.iter().map(|&a| q.arrows[a].head).collect();
        let starts: Vec<usize> = class
            .iter()
            .copied()
            .filter(|&a| !heads.contains(&q.arrows[a].tail))
            .collect();
        if starts.len() != 1 {
            return Err(err(format!(
                "class does not chain into a single path ({} start arrows)",
                starts.len()
            )));
        }
        let mut path = vec![starts[0]];
        loop {
            let last = *path.last().unwrap();
            match by_tail.get(&q.arrows[last].head) {
                Some(&next) => {
                    if path.contains(&next) {
                        return Err(err("class closes a cycle".to_string()));
                    }
                    path.push(next);
                }
                None => break,
            }
        }
        if path.len() != class.len() {
            return Err(err(
                "class is disconnected; it must form one directed path".to_string(),
            ));
        }
        paths.push(path);
    }
    Ok(paths)
}

/// Parses the line-oriented quiver format:
///
/// ```text
/// quiver <name>
/// vertex <id>
/// arrow <name> <tail-id> <head-id> <color>
/// ```
///
/// `#` starts a comment; vertices must be declared before use; duplicate
/// names are errors. Vertex and arrow order is file order.
pub fn parse_quiver(text: &str) -> Result<GentleAlgebra> {
    let mut name = String::new();
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut colors: Vec<String> = Vec::new();
    let mut vertex_index = HashMap::new();
    let mut arrow_index = HashMap::new();
    let mut seen_quiver = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let syntax = |msg: String| Error::Syntax { line, msg };
        match tokens[0] {
            "quiver" => {
                if tokens.len() != 2 {
                    return Err(syntax("expected: quiver <name>".to_string()));
                }
                if seen_quiver {
                    return Err(syntax("duplicate quiver declaration".to_string()));
                }
                seen_quiver = true;
                name = tokens[1].to_string();
            }
            "vertex" => {
                if tokens.len() != 2 {
                    return Err(syntax("expected: vertex <id>".to_string()));
                }
                let id = tokens[1].to_string();
                if vertex_index.contains_key(&id) {
                    return Err(syntax(format!("duplicate vertex \"{id}\"")));
                }
                vertex_index.insert(id.clone(), vertices.len());
                vertices.push(id);
            }
            "arrow" => {
                if tokens.len() != 5 {
                    return Err(syntax(
                        "expected: arrow <name> <tail-id> <head-id> <color>".to_string(),
                    ));
                }
                let aname = tokens[1].to_string();
                if arrow_index.contains_key(&aname) {
                    return Err(syntax(format!("duplicate arrow \"{aname}\"")));
                }
                let tail = *vertex_index
                    .get(tokens[2])
                    .ok_or_else(|| syntax(format!("undeclared vertex \"{}\"", tokens[2])))?;
                let head = *vertex_index
                    .get(tokens[3])
                    .ok_or_else(|| syntax(format!("undeclared vertex \"{}\"", tokens[3])))?;
                let cname = tokens[4].to_string();
                let color = match colors.iter().position(|c| *c == cname) {
                    Some(c) => c,
                    None => {
                        colors.push(cname);
                        colors.len() - 1
                    }
                };
                arrow_index.insert(aname.clone(), arrows.len());
                arrows.push(Arrow {
                    name: aname,
                    tail,
                    head,
                    color,
                });
            }
            other => {
                return Err(syntax(format!("unknown declaration \"{other}\"")));
            }
        }
    }
    if !seen_quiver {
        return Err(Error::Syntax {
            line: 0,
            msg: "missing quiver declaration".to_string(),
        });
    }
    GentleAlgebra::new(ColoredQuiver {
        name,
        vertices,
        arrows,
        colors,
        vertex_index,
        arrow_index,
    })
}
