//! Fat graphs (spines) with pending edges.
//!
//! A dart is one end of an edge: edge `e` owns darts `2e` and `2e+1`. Each
//! vertex stores its incident darts in cyclic order. Vertices are trivalent
//! except the 1-valent "dot" endpoints of pending edges, which mark orbifold
//! points. Face traversal bounces at a dot, so a pending edge is swept twice
//! by the same face.

use serde::{Deserialize, Serialize};

pub type EdgeId = usize;
pub type Dart = usize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub label: String,
    pub pending: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexKind {
    Trivalent,
    Dot,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    /// Incident darts in cyclic order.
    pub darts: Vec<Dart>,
    pub kind: VertexKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FatGraph {
    pub edges: Vec<Edge>,
    pub vertices: Vec<Vertex>,
    pub genus: usize,
    pub holes: usize,
    pub orbifold_points: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Turn {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    Malformed(String),
    UnsupportedFamily(String),
}

impl std::fmt::Display for GraphError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphError::Malformed(s) => write!(f, "malformed graph: {}", s),
            GraphError::UnsupportedFamily(s) => write!(f, "{}", s),
        }
    }
}

impl std::error::Error for GraphError {}

impl FatGraph {
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_darts(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn edge_of(&self, d: Dart) -> EdgeId {
        d / 2
    }

    pub fn opposite(&self, d: Dart) -> Dart {
        d ^ 1
    }

    pub fn vertex_of(&self, d: Dart) -> usize {
        for (vi, v) in self.vertices.iter().enumerate() {
            if v.darts.contains(&d) {
                return vi;
            }
        }
        panic!("dart {} not attached", d)
    }

    /// Cyclic successor of a dart at its vertex.
    pub fn next_at_vertex(&self, d: Dart) -> Dart {
        let v = &self.vertices[self.vertex_of(d)];
        let i = v.darts.iter().position(|&x| x == d).unwrap();
        v.darts[(i + 1) % v.darts.len()]
    }

    /// Cyclic predecessor of a dart at its vertex.
    pub fn prev_at_vertex(&self, d: Dart) -> Dart {
        let v = &self.vertices[self.vertex_of(d)];
        let i = v.darts.iter().position(|&x| x == d).unwrap();
        v.darts[(i + v.darts.len() - 1) % v.darts.len()]
    }

    /// The dart of edge `e` attached to a trivalent vertex. For pending
    /// edges this is the non-dot end.
    pub fn trivalent_dart(&self, e: EdgeId) -> Dart {
        let d = 2 * e;
        if self.vertices[self.vertex_of(d)].kind == VertexKind::Trivalent {
            d
        } else {
            d ^ 1
        }
    }

    pub fn dot_dart(&self, e: EdgeId) -> Dart {
        assert!(self.edges[e].pending);
        self.opposite(self.trivalent_dart(e))
    }

    /// Turn type taken by a path that arrives at a vertex along `d_in`
    /// (a dart attached to that vertex) and leaves along `d_out`.
    pub fn turn(&self, d_in: Dart, d_out: Dart) -> Option<Turn> {
        if self.vertex_of(d_in) != self.vertex_of(d_out) || d_in == d_out {
            return None;
        }
        if self.prev_at_vertex(d_in) == d_out {
            Some(Turn::Left)
        } else if self.next_at_vertex(d_in) == d_out {
            Some(Turn::Right)
        } else {
            None
        }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let nd = self.num_darts();
        let mut seen = vec![0usize; nd];
        for v in &self.vertices {
            let expect = match v.kind {
                VertexKind::Trivalent => 3,
                VertexKind::Dot => 1,
            };
            if v.darts.len() != expect {
                return Err(GraphError::Malformed(format!(
                    "vertex has {} darts, expected {}",
                    v.darts.len(),
                    expect
                )));
            }
            for &d in &v.darts {
                if d >= nd {
                    return Err(GraphError::Malformed(format!("dart {} out of range", d)));
                }
                seen[d] += 1;
            }
        }
        if seen.iter().any(|&c| c != 1) {
            return Err(GraphError::Malformed(
                "every dart must appear exactly once".into(),
            ));
        }
        for (e, info) in self.edges.iter().enumerate() {
            let k0 = self.vertices[self.vertex_of(2 * e)].kind;
            let k1 = self.vertices[self.vertex_of(2 * e + 1)].kind;
            let dots = [k0, k1].iter().filter(|&&k| k == VertexKind::Dot).count();
            if info.pending && dots != 1 {
                return Err(GraphError::Malformed(format!(
                    "pending edge {} must have exactly one dot endpoint",
                    info.label
                )));
            }
            if !info.pending && dots != 0 {
                return Err(GraphError::Malformed(format!(
                    "inner edge {} touches a dot vertex",
                    info.label
                )));
            }
        }
        let dots = self
            .vertices
            .iter()
            .filter(|v| v.kind == VertexKind::Dot)
            .count();
        if dots != self.orbifold_points {
            return Err(GraphError::Malformed(format!(
                "{} dot vertices but {} declared orbifold points",
                dots, self.orbifold_points
            )));
        }
        Ok(())
    }

    /// Boundary faces as dart cycles. The traversal leaves along a dart,
    /// crosses the edge and turns to the cyclic predecessor at the far
    /// vertex; a dot vertex turns the traversal straight back.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let nd = self.num_darts();
        let mut used = vec![false; nd];
        let mut out = Vec::new();
        for start in 0..nd {
            if used[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                used[d] = true;
                cycle.push(d);
                d = self.prev_at_vertex(self.opposite(d));
                if d == start {
                    break;
                }
            }
            out.push(cycle);
        }
        out
    }

    /// Per-face edge multiplicity vectors (a pending edge appears twice in
    /// its face). These are the Casimir exponent vectors.
    pub fn boundary_components(&self) -> Vec<Vec<i64>> {
        self.faces()
            .iter()
            .map(|cycle| {
                let mut mult = vec![0i64; self.num_edges()];
                for &d in cycle {
                    mult[self.edge_of(d)] += 1;
                }
                mult
            })
            .collect()
    }

    /// Antisymmetric exchange matrix of the Weil-Petersson bracket: each
    /// trivalent vertex contributes +1 for every cyclically adjacent ordered
    /// pair of its incident edges.
    pub fn exchange_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.num_edges();
        let mut eps = vec![vec![0i64; n]; n];
        for v in &self.vertices {
            if v.kind != VertexKind::Trivalent {
                continue;
            }
            for i in 0..3 {
                let a = self.edge_of(v.darts[i]);
                let b = self.edge_of(v.darts[(i + 1) % 3]);
                if a != b {
                    eps[a][b] += 1;
                    eps[b][a] -= 1;
                }
            }
        }
        eps
    }

    pub fn edge_by_label(&self, label: &str) -> Option<EdgeId> {
        self.edges.iter().position(|e| e.label == label)
    }

    /// Expected edge count from the surface data; the builders check it.
    pub fn expected_edge_count(&self) -> i64 {
        6 * self.genus as i64 - 6 + 3 * self.holes as i64 + 2 * self.orbifold_points as i64
    }
}

/// Disc with `n` orbifold points (one hole): a caterpillar tree with pending
/// edges `Z1..Zn` and inner chain edges `Y2..Y(n-2)`.
///
/// Edge ids: `Z_i` is `i-1`; `Y_j` (j = 2..n-2) is `n + j - 2`.
///
/// The case n = 2 has no valid trivalent spine (the Teichmueller dimension
/// is 1, below any fat graph's edge count) and is rejected.
pub fn build_an_spine(n: usize) -> Result<FatGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::UnsupportedFamily(format!(
            "disc family needs n >= 3 (got {}): the two-point disc admits no trivalent spine",
            n
        )));
    }
    let inner = n - 3;
    let mut edges: Vec<Edge> = (1..=n)
        .map(|i| Edge {
            label: format!("Z{}", i),
            pending: true,
        })
        .collect();
    for j in 2..2 + inner {
        edges.push(Edge {
            label: format!("Y{}", j),
            pending: false,
        });
    }
    // dart of Z_i at its chain vertex: 2(i-1); at its dot: 2(i-1)+1
    // dart of Y_j at left vertex: 2(n+j-2); right vertex: 2(n+j-2)+1
    let zd = |i: usize| 2 * (i - 1);
    let yd_left = |j: usize| 2 * (n + j - 2);
    let yd_right = |j: usize| 2 * (n + j - 2) + 1;
    let mut vertices = Vec::new();
    if n == 3 {
        vertices.push(Vertex {
            darts: vec![zd(1), zd(2), zd(3)],
            kind: VertexKind::Trivalent,
        });
    } else {
        vertices.push(Vertex {
            darts: vec![zd(1), zd(2), yd_left(2)],
            kind: VertexKind::Trivalent,
        });
        for k in 2..=n - 3 {
            vertices.push(Vertex {
                darts: vec![yd_right(k), zd(k + 1), yd_left(k + 1)],
                kind: VertexKind::Trivalent,
            });
        }
        vertices.push(Vertex {
            darts: vec![yd_right(n - 2), zd(n - 1), zd(n)],
            kind: VertexKind::Trivalent,
        });
    }
    for i in 1..=n {
        vertices.push(Vertex {
            darts: vec![zd(i) + 1],
            kind: VertexKind::Dot,
        });
    }
    let g = FatGraph {
        edges,
        vertices,
        genus: 0,
        holes: 1,
        orbifold_points: n,
    };
    g.validate()?;
    debug_assert_eq!(g.num_edges() as i64, g.expected_edge_count());
    Ok(g)
}

/// Annulus with `n` orbifold points on one boundary (two holes): a central
/// n-cycle of inner edges `Y1..Yn` with one pending edge `Z_i` at each cycle
/// vertex. Edge ids: `Y_i` is `i-1`, `Z_i` is `n + i - 1`.
pub fn build_dn_spine(n: usize) -> Result<FatGraph, GraphError> {
    if n < 2 {
        return Err(GraphError::UnsupportedFamily(format!(
            "annulus family needs n >= 2 (got {})",
            n
        )));
    }
    let mut edges: Vec<Edge> = (1..=n)
        .map(|i| Edge {
            label: format!("Y{}", i),
            pending: false,
        })
        .collect();
    edges.extend((1..=n).map(|i| Edge {
        label: format!("Z{}", i),
        pending: true,
    }));
    // Y_i runs from cycle vertex i to vertex i+1 (1-based, wrapping):
    // dart at vertex i: 2(i-1); at vertex i+1: 2(i-1)+1.
    let y_at_tail = |i: usize| 2 * (i - 1);
    let y_at_head = |i: usize| 2 * (i - 1) + 1;
    let zd = |i: usize| 2 * (n + i - 1);
    let mut vertices = Vec::new();
    for i in 1..=n {
        let prev = if i == 1 { n } else { i - 1 };
        // cyclic order (Y_i, Y_{i-1}, Z_i) fixes the bracket signs
        vertices.push(Vertex {
            darts: vec![y_at_tail(i), y_at_head(prev), zd(i)],
            kind: VertexKind::Trivalent,
        });
    }
    for i in 1..=n {
        vertices.push(Vertex {
            darts: vec![zd(i) + 1],
            kind: VertexKind::Dot,
        });
    }
    let g = FatGraph {
        edges,
        vertices,
        genus: 0,
        holes: 2,
        orbifold_points: n,
    };
    g.validate()?;
    debug_assert_eq!(g.num_edges() as i64, g.expected_edge_count());
    Ok(g)
}

/// Torus with one hole, no orbifold points: two vertices, three edges. A
/// classic sanity case for face traversal.
pub fn build_torus_spine() -> FatGraph {
    let edges = vec![
        Edge {
            label: "A".into(),
            pending: false,
        },
        Edge {
            label: "B".into(),
            pending: false,
        },
        Edge {
            label: "C".into(),
            pending: false,
        },
    ];
    let vertices = vec![
        Vertex {
            darts: vec![0, 2, 4],
            kind: VertexKind::Trivalent,
        },
        Vertex {
            darts: vec![1, 3, 5],
            kind: VertexKind::Trivalent,
        },
    ];
    let g = FatGraph {
        edges,
        vertices,
        genus: 1,
        holes: 1,
        orbifold_points: 0,
    };
    g.validate().unwrap();
    g
}

/// Canonical encoding under dart relabeling; two graphs are structurally
/// equal iff their canonical encodings match.
pub fn canonical_encoding(g: &FatGraph) -> String {
    let nd = g.num_darts();
    let mut best: Option<String> = None;
    for start in 0..nd {
        let mut names: Vec<Option<usize>> = vec![None; nd];
        let mut next_name = 0usize;
        fn assign(d: Dart, names: &mut [Option<usize>], next_name: &mut usize) {
            if names[d].is_none() {
                names[d] = Some(*next_name);
                *next_name += 1;
            }
        }
        let mut queue = std::collections::VecDeque::new();
        assign(start, &mut names, &mut next_name);
        queue.push_back(start);
        let mut visited = vec![false; nd];
        while let Some(d) = queue.pop_front() {
            if visited[d] {
                continue;
            }
            visited[d] = true;
            for nb in [g.opposite(d), g.next_at_vertex(d)] {
                assign(nb, &mut names, &mut next_name);
                if !visited[nb] {
                    queue.push_back(nb);
                }
            }
        }
        if names.iter().any(|x| x.is_none()) {
            continue;
        }
        let mut desc: Vec<(usize, usize, usize, bool)> = (0..nd)
            .map(|d| {
                (
                    names[d].unwrap(),
                    names[g.opposite(d)].unwrap(),
                    names[g.next_at_vertex(d)].unwrap(),
                    g.edges[g.edge_of(d)].pending,
                )
            })
            .collect();
        desc.sort_unstable();
        let s = format!("{:?}", desc);
        if best.as_ref().map(|b| s < *b).unwrap_or(true) {
            best = Some(s);
        }
    }
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn an_shape() {
        let g = build_an_spine(3).unwrap();
        assert_eq!(g.num_edges(), 3);
        assert_eq!(g.faces().len(), 1);
        let g6 = build_an_spine(6).unwrap();
        assert_eq!(g6.num_edges(), 9); // 6 pending + Y2,Y3,Y4
        assert_eq!(g6.faces().len(), 1);
        assert_eq!(g6.num_edges() as i64, g6.expected_edge_count());
        assert!(build_an_spine(2).is_err());
    }

    #[test]
    fn an_single_face_doubles_pendants() {
        let g = build_an_spine(3).unwrap();
        let b = g.boundary_components();
        assert_eq!(b.len(), 1);
        for e in 0..3 {
            assert_eq!(b[0][e], 2);
        }
    }

    #[test]
    fn dn_shape_and_faces() {
        for n in 2..=5 {
            let g = build_dn_spine(n).unwrap();
            assert_eq!(g.num_edges(), 2 * n);
            assert_eq!(g.num_edges() as i64, g.expected_edge_count());
            let faces = g.boundary_components();
            assert_eq!(faces.len(), 2, "n={}", n);
            // one face sweeps only the cycle, the other sweeps the cycle
            // once and every pending edge twice
            let inner = faces
                .iter()
                .find(|f| (n..2 * n).all(|z| f[z] == 0))
                .expect("inner face");
            for y in 0..n {
                assert_eq!(inner[y], 1);
            }
            let outer = faces
                .iter()
                .find(|f| (n..2 * n).all(|z| f[z] == 2))
                .expect("outer face");
            for y in 0..n {
                assert_eq!(outer[y], 1);
            }
        }
    }

    #[test]
    fn dn_exchange_matrix_matches_annulus_relations() {
        // {Y_i, Y_{i-1}} = 1, {Z_i, Y_i} = -{Z_i, Y_{i-1}} = 1 (indices mod 4)
        let n = 4;
        let g = build_dn_spine(n).unwrap();
        let eps = g.exchange_matrix();
        let y = |i: usize| (i - 1) % n;
        let z = |i: usize| n + (i - 1) % n;
        for i in 1..=n {
            let prev = if i == 1 { n } else { i - 1 };
            assert_eq!(eps[y(i)][y(prev)], 1);
            assert_eq!(eps[z(i)][y(i)], 1);
            assert_eq!(eps[z(i)][y(prev)], -1);
        }
        for a in 0..2 * n {
            for b in 0..2 * n {
                assert_eq!(eps[a][b], -eps[b][a]);
                assert!(eps[a][b].abs() <= 2);
            }
        }
    }

    #[test]
    fn exchange_kernel_contains_casimirs() {
        for g in [
            build_an_spine(3).unwrap(),
            build_an_spine(4).unwrap(),
            build_dn_spine(4).unwrap(),
        ] {
            let eps = g.exchange_matrix();
            for c in g.boundary_components() {
                for row in &eps {
                    let dot: i64 = row.iter().zip(&c).map(|(a, b)| a * b).sum();
                    assert_eq!(dot, 0);
                }
            }
        }
    }

    #[test]
    fn torus_single_face() {
        let g = build_torus_spine();
        assert_eq!(g.faces().len(), 1);
    }

    #[test]
    fn canonical_encoding_ignores_labels() {
        let g1 = build_dn_spine(3).unwrap();
        let mut g2 = g1.clone();
        for e in g2.edges.iter_mut() {
            e.label = format!("edge-{}", e.label);
        }
        assert_eq!(canonical_encoding(&g1), canonical_encoding(&g2));
        assert_ne!(
            canonical_encoding(&g1),
            canonical_encoding(&build_dn_spine(4).unwrap())
        );
    }
}
