//! Path words on a spine and their 2x2 holonomy.
//!
//! A word is the traversal-ordered sequence of tokens: `Edge(e)` contributes
//! the edge matrix `X_e`, `TurnLeft`/`TurnRight` the turn matrices, and
//! `Invert` the half-turn matrix `F` at a dot vertex. The holonomy is the
//! product of the token matrices with the first-traversed factor rightmost,
//! and the geodesic function of a closed word is its trace.

use crate::fatgraph::{Dart, EdgeId, FatGraph, Turn, VertexKind};
use crate::kernel::{BigFloat, Field, LaurentPoly, Mat2, Rat, Ring};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Token {
    Edge(EdgeId),
    TurnRight,
    TurnLeft,
    Invert,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWord {
    /// Tokens in traversal order; interpreted cyclically when closed.
    pub tokens: Vec<Token>,
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    IllFormed(String),
    NotOnGraph(String),
}

impl std::fmt::Display for WordError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WordError::IllFormed(s) => write!(f, "ill-formed word: {}", s),
            WordError::NotOnGraph(s) => write!(f, "word does not fit the graph: {}", s),
        }
    }
}

impl std::error::Error for WordError {}

impl PathWord {
    pub fn closed(tokens: Vec<Token>) -> Self {
        PathWord {
            tokens,
            closed: true,
        }
    }

    /// Cyclic rotation placing token index `k` first.
    pub fn rotate(&self, k: usize) -> PathWord {
        assert!(self.closed);
        let n = self.tokens.len();
        let mut tokens = Vec::with_capacity(n);
        for i in 0..n {
            tokens.push(self.tokens[(k + i) % n]);
        }
        PathWord::closed(tokens)
    }

    /// Reversed traversal. The holonomy of the reversal is conjugate to the
    /// inverse up to sign, so closed-word traces are unchanged.
    pub fn reversed(&self) -> PathWord {
        let tokens = self
            .tokens
            .iter()
            .rev()
            .map(|t| match t {
                Token::TurnLeft => Token::TurnRight,
                Token::TurnRight => Token::TurnLeft,
                t => *t,
            })
            .collect();
        PathWord {
            tokens,
            closed: self.closed,
        }
    }

    pub fn edge_occurrences(&self, e: EdgeId) -> Vec<usize> {
        self.tokens
            .iter()
            .enumerate()
            .filter_map(|(i, t)| match t {
                Token::Edge(f) if *f == e => Some(i),
                _ => None,
            })
            .collect()
    }

    /// Serialize in the text format `X<edge-id> | R | L | F`, whitespace
    /// separated, in traversal order.
    pub fn to_text(&self) -> String {
        self.tokens
            .iter()
            .map(|t| match t {
                Token::Edge(e) => format!("X{}", e),
                Token::TurnRight => "R".into(),
                Token::TurnLeft => "L".into(),
                Token::Invert => "F".into(),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn from_text(s: &str) -> Result<PathWord, WordError> {
        let mut tokens = Vec::new();
        for w in s.split_whitespace() {
            let t = match w {
                "R" => Token::TurnRight,
                "L" => Token::TurnLeft,
                "F" => Token::Invert,
                _ if w.starts_with('X') => {
                    let id: usize = w[1..]
                        .parse()
                        .map_err(|_| WordError::IllFormed(format!("bad token {}", w)))?;
                    Token::Edge(id)
                }
                _ => return Err(WordError::IllFormed(format!("bad token {}", w))),
            };
            tokens.push(t);
        }
        Ok(PathWord::closed(tokens))
    }
}

/// Token matrices over any ring, given the edge value u = exp(Z/2) and its
/// inverse.
pub fn token_matrix<R: Ring>(t: Token, u: &dyn Fn(EdgeId) -> (R, R)) -> Mat2<R> {
    match t {
        Token::Edge(e) => {
            let (ue, ue_inv) = u(e);
            Mat2::new(R::zero(), ue.neg_ref(), ue_inv, R::zero())
        }
        Token::TurnRight => Mat2::new(R::one(), R::one(), R::one().neg_ref(), R::zero()),
        Token::TurnLeft => Mat2::new(R::zero(), R::one(), R::one().neg_ref(), R::one().neg_ref()),
        Token::Invert => Mat2::new(R::zero(), R::one(), R::one().neg_ref(), R::zero()),
    }
}

/// Holonomy of a word: the product of token matrices, first-traversed factor
/// rightmost.
pub fn eval_word<R: Ring>(w: &PathWord, u: &dyn Fn(EdgeId) -> (R, R)) -> Mat2<R> {
    let mut acc = Mat2::identity();
    for &t in &w.tokens {
        acc = token_matrix(t, u).mul(&acc);
    }
    acc
}

/// Symbolic holonomy over the Laurent ring in the edge variables.
pub fn eval_word_sym(w: &PathWord) -> Mat2<LaurentPoly> {
    eval_word(w, &|e| {
        (
            LaurentPoly::var_pow(e as u32, 1),
            LaurentPoly::var_pow(e as u32, -1),
        )
    })
}

/// Holonomy at a rational point `u_e = point[e] > 0`.
pub fn eval_word_rat(w: &PathWord, point: &[Rat]) -> Mat2<Rat> {
    eval_word(w, &|e| (point[e].clone(), point[e].clone().inv()))
}

/// Holonomy at a big-float point.
pub fn eval_word_float(w: &PathWord, point: &[BigFloat]) -> Mat2<BigFloat> {
    eval_word(w, &|e| (point[e].clone(), point[e].inv()))
}

/// The symbolic geodesic function (trace) of a closed word.
pub fn geodesic_poly(w: &PathWord) -> LaurentPoly {
    eval_word_sym(w).trace()
}

/// A geodesic function together with its source word.
#[derive(Clone, Debug)]
pub struct GeodesicFunction {
    pub word: PathWord,
    pub value: LaurentPoly,
}

impl GeodesicFunction {
    pub fn new(word: PathWord) -> Self {
        let value = geodesic_poly(&word);
        GeodesicFunction { word, value }
    }
}

/// Multicurve: closed words with positive multiplicities; its function is
/// the product of component functions.
#[derive(Clone, Debug, Default)]
pub struct Multicurve {
    pub components: Vec<(PathWord, u32)>,
}

impl Multicurve {
    pub fn function(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for (w, m) in &self.components {
            let g = geodesic_poly(w);
            for _ in 0..*m {
                acc = &acc * &g;
            }
        }
        acc
    }
}

/// Check a word against a graph: find a dart realization such that every
/// turn token matches the cyclic order at the shared vertex and every
/// `Invert` sits between the two passes of a pending edge at its dot.
pub fn check_word(g: &FatGraph, w: &PathWord) -> Result<Vec<Dart>, WordError> {
    let edges: Vec<(usize, EdgeId)> = w
        .tokens
        .iter()
        .enumerate()
        .filter_map(|(i, t)| match t {
            Token::Edge(e) => Some((i, *e)),
            _ => None,
        })
        .collect();
    if edges.is_empty() {
        return Err(WordError::IllFormed("no edge tokens".into()));
    }
    let first_edge = edges[0].1;
    if first_edge >= g.num_edges() {
        return Err(WordError::NotOnGraph(format!(
            "edge {} out of range",
            first_edge
        )));
    }
    'start: for start in [2 * first_edge, 2 * first_edge + 1] {
        let mut darts = vec![start];
        let n = w.tokens.len();
        // token stream must alternate Edge / connector
        for (k, &(ti, e)) in edges.iter().enumerate() {
            let d = darts[k];
            if g.edge_of(d) != e {
                continue 'start;
            }
            // connector between this edge token and the next
            let next_ti = if k + 1 < edges.len() {
                edges[k + 1].0
            } else if w.closed {
                edges[0].0 + n
            } else {
                break;
            };
            if next_ti != ti + 2 {
                return Err(WordError::IllFormed(
                    "edge tokens must alternate with single connectors".into(),
                ));
            }
            let conn = w.tokens[(ti + 1) % n];
            let arrive = g.opposite(d);
            let next_edge = if k + 1 < edges.len() {
                edges[k + 1].1
            } else {
                edges[0].1
            };
            let next_dart: Dart = match conn {
                Token::Invert => {
                    if g.vertices[g.vertex_of(arrive)].kind != VertexKind::Dot {
                        continue 'start;
                    }
                    if next_edge != e {
                        return Err(WordError::IllFormed(
                            "inversion must return along the same pending edge".into(),
                        ));
                    }
                    arrive
                }
                Token::TurnLeft | Token::TurnRight => {
                    let want = if conn == Token::TurnLeft {
                        Turn::Left
                    } else {
                        Turn::Right
                    };
                    let cand = [g.prev_at_vertex(arrive), g.next_at_vertex(arrive)];
                    match cand
                        .into_iter()
                        .find(|&c| g.edge_of(c) == next_edge && g.turn(arrive, c) == Some(want))
                    {
                        Some(c) => c,
                        None => continue 'start,
                    }
                }
                Token::Edge(_) => {
                    return Err(WordError::IllFormed("two adjacent edge tokens".into()))
                }
            };
            if k + 1 < edges.len() {
                darts.push(next_dart);
            } else if w.closed && next_dart != start {
                continue 'start;
            }
        }
        return Ok(darts);
    }
    Err(WordError::NotOnGraph(
        "no dart realization matches the turn structure".into(),
    ))
}

/// Homotopy-level description of a generator curve; words are rebuilt from
/// these on whatever spine is current.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveSpec {
    /// Disc family: encircles exactly the dots of pending edges i and j
    /// (labels as in the builders, 1-based).
    DiscPair { i: usize, j: usize },
    /// Annulus family, i != j: from dot `from` around the inner hole to dot
    /// `to`, traveling the cycle in the inner-face direction.
    AnnulusPair { from: usize, to: usize },
    /// Annulus family diagonal: encircles the inner hole and dot i.
    AnnulusDiag { i: usize },
}

/// Dart-level path step list: each dart is traversed from its own vertex to
/// the opposite end; a pending bounce is two steps through the dot.
fn darts_to_word(g: &FatGraph, path: &[Dart]) -> PathWord {
    let n = path.len();
    let mut tokens = Vec::with_capacity(2 * n);
    for (k, &d) in path.iter().enumerate() {
        tokens.push(Token::Edge(g.edge_of(d)));
        let arrive = g.opposite(d);
        let next = path[(k + 1) % n];
        if g.vertices[g.vertex_of(arrive)].kind == VertexKind::Dot {
            assert_eq!(next, arrive, "path must bounce at a dot");
            tokens.push(Token::Invert);
        } else {
            let turn = g
                .turn(arrive, next)
                .unwrap_or_else(|| panic!("illegal step {} -> {}", d, next));
            tokens.push(match turn {
                Turn::Left => Token::TurnLeft,
                Turn::Right => Token::TurnRight,
            });
        }
    }
    PathWord::closed(tokens)
}

/// Pending edge whose builder label is `Z<i>`; falls back to the i-th
/// pending edge in id order.
pub fn pendant_by_index(g: &FatGraph, i: usize) -> EdgeId {
    if let Some(e) = g.edge_by_label(&format!("Z{}", i)) {
        return e;
    }
    let mut pendants: Vec<EdgeId> = (0..g.num_edges()).filter(|&e| g.edges[e].pending).collect();
    pendants.sort_unstable();
    pendants[i - 1]
}

/// Tree path between two vertices as a dart sequence (graph restricted to
/// non-cycle edges must be a forest; here the whole graph minus pendants is
/// used, so this is only called on disc-family spines).
fn tree_path(g: &FatGraph, from_v: usize, to_v: usize) -> Vec<Dart> {
    // BFS over trivalent vertices through inner edges
    let nv = g.vertices.len();
    let mut prev: Vec<Option<Dart>> = vec![None; nv];
    let mut seen = vec![false; nv];
    let mut queue = std::collections::VecDeque::new();
    seen[from_v] = true;
    queue.push_back(from_v);
    while let Some(v) = queue.pop_front() {
        if v == to_v {
            break;
        }
        for &d in &g.vertices[v].darts {
            if g.edges[g.edge_of(d)].pending {
                continue;
            }
            let w = g.vertex_of(g.opposite(d));
            if !seen[w] {
                seen[w] = true;
                prev[w] = Some(d);
                queue.push_back(w);
            }
        }
    }
    let mut path = Vec::new();
    let mut v = to_v;
    while v != from_v {
        let d = prev[v].expect("vertices not connected by inner edges");
        path.push(d);
        v = g.vertex_of(d);
    }
    path.reverse();
    path
}

/// The inner-hole cycle of an annulus-family spine, as a dart sequence in
/// the orientation induced by the pendant-free boundary face.
pub fn annulus_cycle(g: &FatGraph) -> Vec<Dart> {
    let faces = g.faces();
    let inner = faces
        .iter()
        .find(|f| f.iter().all(|&d| !g.edges[g.edge_of(d)].pending))
        .expect("no pendant-free face: not an annulus-family spine");
    // the inner face sweeps each cycle edge once; orient the cycle against
    // the sweep so that the generator index conventions come out as in the
    // annulus bracket table
    inner.iter().rev().map(|&d| g.opposite(d)).collect()
}

/// Build the word of a generator curve on the given spine.
pub fn route_curve(g: &FatGraph, spec: CurveSpec) -> PathWord {
    match spec {
        CurveSpec::DiscPair { i, j } => {
            let ei = pendant_by_index(g, i);
            let ej = pendant_by_index(g, j);
            assert_ne!(ei, ej, "disc-family generators need two distinct dots");
            let vi = g.vertex_of(g.trivalent_dart(ei));
            let vj = g.vertex_of(g.trivalent_dart(ej));
            // bounce at dot i, walk the tree to dot j, bounce, walk back
            let di = g.trivalent_dart(ei);
            let dj = g.trivalent_dart(ej);
            let mut path = vec![di, g.opposite(di)];
            let spine = tree_path(g, vi, vj);
            path.extend_from_slice(&spine);
            path.push(dj);
            path.push(g.opposite(dj));
            for &d in spine.iter().rev() {
                path.push(g.opposite(d));
            }
            darts_to_word(g, &path)
        }
        CurveSpec::AnnulusPair { from, to } => {
            // The corridor curve: out to dot `to` along the cycle arc taken
            // in the inner-face direction, and back along the same arc. The
            // opposite index order uses the complementary arc, which is what
            // distinguishes G_ij from G_ji.
            assert_ne!(from, to);
            let ei = pendant_by_index(g, from);
            let ej = pendant_by_index(g, to);
            let cycle = annulus_cycle(g);
            let (acc_i, arc_ij) = annulus_access_and_arc(g, ei, ej, &cycle);
            let (acc_j, _) = annulus_access_and_arc(g, ej, ei, &cycle);
            let di = g.trivalent_dart(ei);
            let dj = g.trivalent_dart(ej);
            let mut path = vec![di, g.opposite(di)];
            path.extend_from_slice(&acc_i);
            path.extend_from_slice(&arc_ij);
            for &d in acc_j.iter().rev() {
                path.push(g.opposite(d));
            }
            path.push(dj);
            path.push(g.opposite(dj));
            path.extend_from_slice(&acc_j);
            for &d in arc_ij.iter().rev() {
                path.push(g.opposite(d));
            }
            for &d in acc_i.iter().rev() {
                path.push(g.opposite(d));
            }
            darts_to_word(g, &path)
        }
        CurveSpec::AnnulusDiag { i } => {
            let ei = pendant_by_index(g, i);
            let cycle = annulus_cycle(g);
            let (acc, full) = annulus_access_and_full_cycle(g, ei, &cycle);
            let di = g.trivalent_dart(ei);
            let mut path = vec![di, g.opposite(di)];
            path.extend_from_slice(&acc);
            path.extend_from_slice(&full);
            for &d in acc.iter().rev() {
                path.push(g.opposite(d));
            }
            darts_to_word(g, &path)
        }
    }
}

/// Access path from pendant `e`'s vertex to the cycle, plus the cycle arc
/// from that attachment to pendant `to`'s attachment (in cycle orientation).
fn annulus_access_and_arc(
    g: &FatGraph,
    e: EdgeId,
    to: EdgeId,
    cycle: &[Dart],
) -> (Vec<Dart>, Vec<Dart>) {
    let (acc_e, attach_e) = access_to_cycle(g, e, cycle);
    let (_, attach_to) = access_to_cycle(g, to, cycle);
    // arc along cycle orientation from attach_e to attach_to
    let k = cycle.len();
    let pos = |v: usize| -> usize {
        cycle
            .iter()
            .position(|&d| g.vertex_of(d) == v)
            .expect("attachment not on cycle")
    };
    let a = pos(attach_e);
    let b = pos(attach_to);
    let mut arc = Vec::new();
    let mut p = a;
    while p != b {
        arc.push(cycle[p]);
        p = (p + 1) % k;
    }
    (acc_e, arc)
}

fn annulus_access_and_full_cycle(
    g: &FatGraph,
    e: EdgeId,
    cycle: &[Dart],
) -> (Vec<Dart>, Vec<Dart>) {
    let (acc, attach) = access_to_cycle(g, e, cycle);
    let k = cycle.len();
    let a = cycle
        .iter()
        .position(|&d| g.vertex_of(d) == attach)
        .expect("attachment not on cycle");
    let mut full = Vec::with_capacity(k);
    for t in 0..k {
        full.push(cycle[(a + t) % k]);
    }
    (acc, full)
}

/// Shortest inner-edge path from the pendant's trivalent vertex to a vertex
/// on the cycle; returns the dart path and the attachment vertex.
fn access_to_cycle(g: &FatGraph, e: EdgeId, cycle: &[Dart]) -> (Vec<Dart>, usize) {
    let v0 = g.vertex_of(g.trivalent_dart(e));
    let cycle_vertices: Vec<usize> = cycle.iter().map(|&d| g.vertex_of(d)).collect();
    if cycle_vertices.contains(&v0) {
        return (Vec::new(), v0);
    }
    let cycle_edges: Vec<EdgeId> = cycle.iter().map(|&d| g.edge_of(d)).collect();
    // BFS avoiding pendants and cycle edges
    let nv = g.vertices.len();
    let mut prev: Vec<Option<Dart>> = vec![None; nv];
    let mut seen = vec![false; nv];
    let mut queue = std::collections::VecDeque::new();
    seen[v0] = true;
    queue.push_back(v0);
    let mut attach = None;
    'bfs: while let Some(v) = queue.pop_front() {
        for &d in &g.vertices[v].darts {
            let ed = g.edge_of(d);
            if g.edges[ed].pending || cycle_edges.contains(&ed) {
                continue;
            }
            let w = g.vertex_of(g.opposite(d));
            if !seen[w] {
                seen[w] = true;
                prev[w] = Some(d);
                if cycle_vertices.contains(&w) {
                    attach = Some(w);
                    break 'bfs;
                }
                queue.push_back(w);
            }
        }
    }
    let attach = attach.expect("pendant tree does not reach the cycle");
    let mut path = Vec::new();
    let mut v = attach;
    while v != v0 {
        let d = prev[v].unwrap();
        path.push(d);
        v = g.vertex_of(d);
    }
    path.reverse();
    (path, attach)
}

/// All generator functions of a disc-family spine with n dots: G_ij, i<j.
pub fn disc_generators(g: &FatGraph) -> BTreeMap<(usize, usize), GeodesicFunction> {
    let n = g.orbifold_points;
    let mut out = BTreeMap::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let w = route_curve(g, CurveSpec::DiscPair { i, j });
            out.insert((i, j), GeodesicFunction::new(w));
        }
    }
    out
}

/// All generator functions of an annulus-family spine with n dots:
/// G_ij for every ordered pair including the diagonal.
pub fn annulus_generators(g: &FatGraph) -> BTreeMap<(usize, usize), GeodesicFunction> {
    let n = g.orbifold_points;
    let mut out = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n {
            let spec = if i == j {
                CurveSpec::AnnulusDiag { i }
            } else {
                CurveSpec::AnnulusPair { from: i, to: j }
            };
            out.insert((i, j), GeodesicFunction::new(route_curve(g, spec)));
        }
    }
    out
}

/// 2 T_n(x/2) with integer coefficients: trace of the n-th power in terms of
/// the trace, normalized to geodesic-function scaling.
pub fn chebyshev_trace_poly(n: u32, x: &LaurentPoly) -> LaurentPoly {
    // t_0 = 2, t_1 = x, t_{k+1} = x t_k - t_{k-1}
    let mut t0 = LaurentPoly::from_int(2);
    let mut t1 = x.clone();
    if n == 0 {
        return t0;
    }
    for _ in 1..n {
        let t2 = &(x * &t1) - &t0;
        t0 = t1;
        t1 = t2;
    }
    t1
}
