//! Directed communication topology and the spectral quantities the stability
//! analysis depends on.
//!
//! Weight `a_ij > 0` means information flows from node `j` to node `i`.
//! Pinning gain `g_i > 0` means node `i` receives the leader's reference
//! directly. The pinned Laplacian `L + G` is positive definite whenever the
//! leader-rooted spanning-tree condition holds, and its extreme singular
//! values bound how neighborhood errors map to regulation errors.

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("node count must be at least 1")]
    Empty,
    #[error("adjacency matrix must be {n}x{n}, got {rows}x{cols}")]
    AdjacencyShape { n: usize, rows: usize, cols: usize },
    #[error("pinning vector must have length {n}, got {len}")]
    PinningShape { n: usize, len: usize },
    #[error("self-loop weight a[{0}][{0}] must be zero")]
    SelfLoop(usize),
    #[error("edge weight a[{i}][{j}] = {w} must be finite and nonnegative")]
    BadWeight { i: usize, j: usize, w: f64 },
    #[error("pinning gain g[{i}] = {g} must be finite and nonnegative")]
    BadPinning { i: usize, g: f64 },
    #[error("edge references node {node} but the graph has {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error(
        "pinned Laplacian is numerically singular (sigma_min = {sigma_min:.3e}); \
         the graph has no leader-rooted spanning tree"
    )]
    NoSpanningTree { sigma_min: f64 },
}

/// Directed communication graph with leader pinning.
#[derive(Debug, Clone, PartialEq)]
pub struct CommGraph {
    n: usize,
    adjacency: DMatrix<f64>,
    pinning: DVector<f64>,
}

impl CommGraph {
    /// Build from a weighted edge list. Each `(from, to, w)` entry makes
    /// information flow from `from` to `to`, i.e. sets `a[to][from] = w`.
    pub fn from_edges(
        n: usize,
        edges: &[(usize, usize, f64)],
        pinning: &[f64],
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adjacency = DMatrix::zeros(n, n);
        for &(from, to, w) in edges {
            for node in [from, to] {
                if node >= n {
                    return Err(GraphError::NodeOutOfRange { node, n });
                }
            }
            adjacency[(to, from)] += w;
        }
        Self::new(adjacency, DVector::from_row_slice(pinning))
    }

    pub fn new(adjacency: DMatrix<f64>, pinning: DVector<f64>) -> Result<Self, GraphError> {
        let n = adjacency.nrows();
        let g = Self {
            n,
            adjacency,
            pinning,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.n;
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if self.adjacency.nrows() != n || self.adjacency.ncols() != n {
            return Err(GraphError::AdjacencyShape {
                n,
                rows: self.adjacency.nrows(),
                cols: self.adjacency.ncols(),
            });
        }
        if self.pinning.len() != n {
            return Err(GraphError::PinningShape {
                n,
                len: self.pinning.len(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                let w = self.adjacency[(i, j)];
                if !w.is_finite() || w < 0.0 {
                    return Err(GraphError::BadWeight { i, j, w });
                }
                if i == j && w != 0.0 {
                    return Err(GraphError::SelfLoop(i));
                }
            }
            let g = self.pinning[i];
            if !g.is_finite() || g < 0.0 {
                return Err(GraphError::BadPinning { i, g });
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacency(&self) -> &DMatrix<f64> {
        &self.adjacency
    }

    /// Edge weight for information flowing from `j` to `i`.
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.adjacency[(i, j)]
    }

    pub fn pinning(&self) -> &DVector<f64> {
        &self.pinning
    }

    pub fn pinning_gain(&self, i: usize) -> f64 {
        self.pinning[i]
    }

    /// In-degree d_i = sum_j a_ij.
    pub fn in_degree(&self, i: usize) -> f64 {
        self.adjacency.row(i).sum()
    }
}

/// Laplacian and pinned-Laplacian matrices derived from a [`CommGraph`].
#[derive(Debug, Clone, PartialEq)]
pub struct GraphMatrices {
    pub laplacian: DMatrix<f64>,
    pub pinned: DMatrix<f64>,
    pub in_degree: DVector<f64>,
}

/// L = D - A and L + G.
pub fn build_matrices(g: &CommGraph) -> Result<GraphMatrices, GraphError> {
    g.validate()?;
    let n = g.n();
    let in_degree = DVector::from_fn(n, |i, _| g.in_degree(i));
    let mut laplacian = -g.adjacency().clone();
    for i in 0..n {
        laplacian[(i, i)] = in_degree[i];
    }
    let mut pinned = laplacian.clone();
    for i in 0..n {
        pinned[(i, i)] += g.pinning_gain(i);
    }
    Ok(GraphMatrices {
        laplacian,
        pinned,
        in_degree,
    })
}

/// True iff every node is reachable from a virtual leader that feeds exactly
/// the nodes with positive pinning gain, following information flow (an edge
/// j -> i exists when a_ij > 0).
pub fn has_leader_spanning_tree(g: &CommGraph) -> bool {
    let n = g.n();
    let mut reached = vec![false; n];
    let mut frontier: Vec<usize> = (0..n).filter(|&i| g.pinning_gain(i) > 0.0).collect();
    for &i in &frontier {
        reached[i] = true;
    }
    while let Some(j) = frontier.pop() {
        for i in 0..n {
            if !reached[i] && g.weight(i, j) > 0.0 {
                reached[i] = true;
                frontier.push(i);
            }
        }
    }
    reached.iter().all(|&r| r)
}

/// Threshold below which the smallest singular value of L + G is treated as
/// structural rank deficiency rather than round-off.
pub const SIGMA_MIN_CUTOFF: f64 = 1e-12;

/// Condition ratio beta = sigma_max(L+G) / sigma_min(L+G).
///
/// L + G is nonsymmetric for a general digraph, so the ratio is taken over
/// singular values; these are what bound `||(L+G)x||` in the ultimate-bound
/// expression.
pub fn condition_ratio(g: &CommGraph) -> Result<f64, GraphError> {
    let m = build_matrices(g)?.pinned;
    let svs = m.singular_values();
    let sigma_max = svs.max();
    let sigma_min = svs.min();
    if sigma_min < SIGMA_MIN_CUTOFF {
        return Err(GraphError::NoSpanningTree { sigma_min });
    }
    Ok(sigma_max / sigma_min)
}
