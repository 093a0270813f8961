//! Multigraphs and their cycle matroids.

use std::collections::VecDeque;

use crate::error::{MatroidError, Result};
use crate::gf2::Gf2Matrix;
use crate::matroid::{BinaryMatroid, ElementLabel};

/// Undirected multigraph with labeled edges; loops and parallel edges allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n_vertices: usize,
    edges: Vec<(usize, usize, ElementLabel)>,
}

impl Graph {
    pub fn new(n_vertices: usize) -> Self {
        Self {
            n_vertices,
            edges: Vec::new(),
        }
    }

    pub fn from_edges<S: AsRef<str>>(
        n_vertices: usize,
        edges: &[(usize, usize, S)],
    ) -> Result<Self> {
        let mut g = Self::new(n_vertices);
        for (u, v, l) in edges {
            g.add_edge(*u, *v, l.as_ref())?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, label: &str) -> Result<()> {
        if u >= self.n_vertices || v >= self.n_vertices {
            return Err(MatroidError::input(format!(
                "edge {label} = ({u}, {v}) has an endpoint outside 0..{}",
                self.n_vertices
            )));
        }
        let label = ElementLabel::new(label)?;
        if self.edges.iter().any(|(_, _, l)| *l == label) {
            return Err(MatroidError::input(format!(
                "duplicate edge label `{label}`"
            )));
        }
        self.edges.push((u, v, label));
        Ok(())
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[(usize, usize, ElementLabel)] {
        &self.edges
    }

    /// `K_n` on vertices `1..=n`, edges `e{u}{v}` in lexicographic order.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v, &format!("e{}{}", u + 1, v + 1))
                    .expect("fresh labels");
            }
        }
        g
    }

    /// `K_{a,b}` with sides `1..=a` and `a+1..=a+b`, edges in lexicographic order.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v, &format!("e{}{}", u + 1, v + 1))
                    .expect("fresh labels");
            }
        }
        g
    }

    /// Cycle matroid in standard form. The spanning forest is grown greedily
    /// in edge-list order; forest edges become the basis in that order.
    pub fn cycle_matroid(&self) -> BinaryMatroid {
        let mut parent: Vec<usize> = (0..self.n_vertices).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut forest = Vec::new();
        let mut others = Vec::new();
        for (k, &(u, v, _)) in self.edges.iter().enumerate() {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                forest.push(k);
            } else {
                others.push(k);
            }
        }

        // forest adjacency: (neighbor, row index of the tree edge)
        let mut adj = vec![Vec::new(); self.n_vertices];
        for (row, &k) in forest.iter().enumerate() {
            let (u, v, _) = self.edges[k];
            adj[u].push((v, row));
            adj[v].push((u, row));
        }

        let mut a = vec![vec![0u8; others.len()]; forest.len()];
        for (col, &k) in others.iter().enumerate() {
            let (u, v, _) = self.edges[k];
            for row in tree_path(&adj, u, v) {
                a[row][col] = 1;
            }
        }
        let a = if forest.is_empty() {
            Gf2Matrix::zeros(0, others.len())
        } else {
            Gf2Matrix::from_rows(&a).expect("0/1 entries")
        };
        let label = |k: &usize| self.edges[*k].2.clone();
        BinaryMatroid::from_standard_form(
            a,
            forest.iter().map(label).collect(),
            others.iter().map(label).collect(),
        )
        .expect("edge labels are distinct")
    }
}

/// Rows of the tree edges on the forest path from `from` to `to`.
fn tree_path(adj: &[Vec<(usize, usize)>], from: usize, to: usize) -> Vec<usize> {
    if from == to {
        return Vec::new();
    }
    let mut via: Vec<Option<(usize, usize)>> = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &(y, row) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                via[y] = Some((x, row));
                queue.push_back(y);
            }
        }
    }
    let mut path = Vec::new();
    let mut x = to;
    while let Some((prev, row)) = via[x] {
        path.push(row);
        x = prev;
    }
    path
}
