//! Multigraphs with loops and parallel edges, their incidence matrices and
//! cycle matroids, and the chromatic, flow, and dichromatic polynomials.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::enumerate::{state_count, Budget};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::FqMatrix;
use crate::matroid::{char_poly, Matroid, RankOracleMatroid, RepMatroid};
use crate::poly::{BiPoly, UniPoly};
use crate::subset::{Subset, MAX_GROUND};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    /// Origin `i(e)`.
    pub tail: usize,
    /// Endpoint `f(e)`.
    pub head: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    components: usize,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Multigraph {
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>) -> Result<Multigraph> {
        if edges.len() > MAX_GROUND {
            return Err(Error::GroundSetTooLarge(edges.len()));
        }
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v) {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let mut seen = HashSet::new();
        for e in &edges {
            if !seen.insert(&e.id) {
                return Err(Error::DuplicateLabel(e.id.clone()));
            }
            for end in [e.tail, e.head] {
                if end >= vertices.len() {
                    return Err(Error::IndexOutOfRange {
                        index: end,
                        len: vertices.len(),
                    });
                }
            }
        }
        let mut g = Multigraph {
            vertices,
            edges,
            components: 0,
        };
        g.components = g.components_of(g.edge_set());
        Ok(g)
    }

    /// Vertices `1..=n`; edges `1..=m` oriented `(tail, head)` with 0-based endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Multigraph> {
        let vertices = (1..=n).map(|i| i.to_string()).collect();
        let edges = edges
            .iter()
            .enumerate()
            .map(|(k, &(tail, head))| Edge {
                id: (k + 1).to_string(),
                tail,
                head,
            })
            .collect();
        Multigraph::new(vertices, edges)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_labels(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.id.clone()).collect()
    }

    pub fn edge_set(&self) -> Subset {
        Subset::full(self.edges.len())
    }

    /// `|K(G)|`.
    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn edge_index(&self, id: &str) -> Result<usize> {
        self.edges
            .iter()
            .position(|e| e.id == id)
            .ok_or_else(|| Error::UnknownLabel(id.to_string()))
    }

    /// `|K(A)|` for the spanning subgraph `(V, A)`.
    pub fn components_of(&self, a: Subset) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        let mut count = self.vertices.len();
        for i in a.iter() {
            let e = &self.edges[i];
            let (x, y) = (find(&mut parent, e.tail), find(&mut parent, e.head));
            if x != y {
                parent[x] = y;
                count -= 1;
            }
        }
        count
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|e| e.tail == e.head)
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let e = &self.edges[edge];
        e.tail == e.head
    }

    pub fn is_isthmus(&self, edge: usize) -> bool {
        !self.is_loop(edge) && self.components_of(self.edge_set().without(edge)) > self.components
    }

    /// `G′_e`.
    pub fn delete_edge(&self, edge: usize) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.remove(edge);
        Multigraph::new(self.vertices.clone(), edges).expect("subgraph of a valid graph")
    }

    /// `G″_e`: the endpoint is merged into the origin. Contracting a loop
    /// deletes it.
    pub fn contract_edge(&self, edge: usize) -> Multigraph {
        let Edge { tail, head, .. } = self.edges[edge];
        if tail == head {
            return self.delete_edge(edge);
        }
        let relabel = |v: usize| {
            let v = if v == head { tail } else { v };
            if v > head {
                v - 1
            } else {
                v
            }
        };
        let mut vertices = self.vertices.clone();
        vertices.remove(head);
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != edge)
            .map(|(_, e)| Edge {
                id: e.id.clone(),
                tail: relabel(e.tail),
                head: relabel(e.head),
            })
            .collect();
        Multigraph::new(vertices, edges).expect("contraction of a valid graph")
    }

    /// `G/H`: contracts every edge of `a`.
    pub fn contract_edges(&self, a: Subset) -> Multigraph {
        let ids: Vec<String> = a.iter().map(|i| self.edges[i].id.clone()).collect();
        let mut g = self.clone();
        for id in ids {
            let k = g.edge_index(&id).expect("edge survives contraction");
            g = g.contract_edge(k);
        }
        g
    }

    pub fn reverse_edge(&self, edge: usize) -> Multigraph {
        let mut g = self.clone();
        let e = &mut g.edges[edge];
        std::mem::swap(&mut e.tail, &mut e.head);
        g
    }

    /// Spanning subgraph `(V, A)`.
    pub fn spanning_subgraph(&self, a: Subset) -> Multigraph {
        let edges = a.iter().map(|i| self.edges[i].clone()).collect();
        Multigraph::new(self.vertices.clone(), edges).expect("subgraph of a valid graph")
    }

    /// `ε_{ve}`: −1 at the origin, 1 at the endpoint, a zero column for a loop.
    pub fn incidence_matrix(&self, field: &Field) -> FqMatrix {
        let mut m = FqMatrix::zeros(field, self.vertices.len(), self.edges.len());
        for (j, e) in self.edges.iter().enumerate() {
            if e.tail != e.head {
                m.set(e.tail, j, &field.from_int(-1)).expect("same field");
                m.set(e.head, j, &field.one()).expect("same field");
            }
        }
        m.with_row_labels(self.vertices.clone())
            .and_then(|m| m.with_col_labels(self.edge_labels()))
            .expect("labels validated at construction")
    }

    /// The incidence matrix reduced to full row rank, labelled by edge ids.
    pub fn cycle_matroid(&self, field: &Field) -> RepMatroid {
        RepMatroid::new(self.incidence_matrix(field), Some(self.edge_labels()))
            .expect("labels validated at construction")
    }

    /// `r(A) = |V| − |K(A)|`, independent of any field.
    pub fn graphic_matroid(&self) -> RankOracleMatroid {
        let g = self.clone();
        let n = self.vertices.len();
        RankOracleMatroid::new(self.edge_labels(), move |a| n - g.components_of(a))
            .expect("labels validated at construction")
    }

    /// Proper colorings with `q` colors, by backtracking.
    pub fn count_proper_colorings(&self, q: u64, budget: Budget) -> Result<u64> {
        budget.check(state_count(q, self.vertices.len()))?;
        if self.has_loop() {
            return Ok(0);
        }
        let n = self.vertices.len();
        let mut nbrs = vec![Vec::new(); n];
        for e in &self.edges {
            let (lo, hi) = (e.tail.min(e.head), e.tail.max(e.head));
            nbrs[hi].push(lo);
        }
        let mut colors = vec![0u64; n];
        fn go(v: usize, q: u64, nbrs: &[Vec<usize>], colors: &mut [u64]) -> u64 {
            if v == colors.len() {
                return 1;
            }
            let mut total = 0;
            for c in 0..q {
                if nbrs[v].iter().all(|&u| colors[u] != c) {
                    colors[v] = c;
                    total += go(v + 1, q, nbrs, colors);
                }
            }
            total
        }
        Ok(go(0, q, &nbrs, &mut colors))
    }

    /// Nowhere-zero `Z_q`-flows by exhaustive enumeration of `{1..q-1}^E`.
    pub fn count_nowhere_zero_flows(&self, q: u64, budget: Budget) -> Result<u64> {
        if q < 2 {
            return Ok(u64::from(self.edges.is_empty()));
        }
        let m = self.edges.len();
        budget.check(state_count(q - 1, m))?;
        let mut k = vec![1u64; m];
        let mut count = 0;
        let mut net = vec![0u64; self.vertices.len()];
        loop {
            net.iter_mut().for_each(|x| *x = 0);
            for (e, &v) in self.edges.iter().zip(&k) {
                net[e.head] = (net[e.head] + v) % q;
                net[e.tail] = (net[e.tail] + q - v) % q;
            }
            if net.iter().all(|&x| x == 0) {
                count += 1;
            }
            let mut pos = m;
            loop {
                if pos == 0 {
                    return Ok(count);
                }
                pos -= 1;
                k[pos] += 1;
                if k[pos] < q {
                    break;
                }
                k[pos] = 1;
            }
        }
    }

    /// `P_G`, interpolated from coloring counts at `q = 0..=|V|`.
    pub fn chromatic_poly(&self, budget: Budget) -> Result<UniPoly> {
        let n = self.vertices.len() as u64;
        let points = (0..=n)
            .map(|q| Ok((BigInt::from(q), BigInt::from(self.count_proper_colorings(q, budget)?))))
            .collect::<Result<Vec<_>>>()?;
        UniPoly::interpolate(&points)
    }

    /// `F_G = χ_{M(G)^⊥}`.
    pub fn flow_poly(&self, budget: Budget) -> Result<UniPoly> {
        char_poly(&self.graphic_matroid().dual(), budget)
    }

    /// `Q_G(u, v) = Σ_A u^{|K(A)|} v^{|A| − |V| + |K(A)|}`.
    pub fn dichromatic_poly(&self, budget: Budget) -> Result<BiPoly> {
        budget.check(state_count(2, self.edges.len()))?;
        let n = self.vertices.len() as i32;
        let mut q = BiPoly::zero();
        for a in self.edge_set().subsets() {
            let k = self.components_of(a) as i32;
            q.add_term(BigInt::from(1), k, a.len() as i32 - n + k);
        }
        Ok(q)
    }

    /// Bad coloring polynomial in `(q, x)`: `Σ_A q^{|K(A)|} (x − 1)^{|A|}`.
    pub fn bad_coloring_poly(&self, budget: Budget) -> Result<BiPoly> {
        budget.check(state_count(2, self.edges.len()))?;
        let mut out = BiPoly::zero();
        for a in self.edge_set().subsets() {
            out.add_term(BigInt::from(1), self.components_of(a) as i32, a.len() as i32);
        }
        Ok(out.shift(0, -1))
    }

    /// Bad flow polynomial in `(q, x)`: `Σ_A q^{|A| − r(A)} (x − 1)^{|E| − |A|}`.
    pub fn bad_flow_poly(&self, budget: Budget) -> Result<BiPoly> {
        budget.check(state_count(2, self.edges.len()))?;
        let n = self.vertices.len() as i32;
        let m = self.edges.len() as i32;
        let mut out = BiPoly::zero();
        for a in self.edge_set().subsets() {
            let k = self.components_of(a) as i32;
            out.add_term(BigInt::from(1), a.len() as i32 - n + k, m - a.len() as i32);
        }
        Ok(out.shift(0, -1))
    }
}
