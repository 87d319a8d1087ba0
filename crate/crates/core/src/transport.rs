//! Exact solver for the balanced transportation problem.
//!
//! Primal network simplex on the bipartite supply/demand graph: the basis is
//! a spanning tree of `m + n - 1` cells, node potentials price the non-basic
//! cells, and the entering cell's tree cycle is used for the pivot. Long runs
//! of degenerate pivots switch pricing to Bland's rule, which cannot cycle.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Flow {
    pub from: usize,
    pub to: usize,
    pub amount: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransportPlan {
    pub cost: f64,
    /// Basic cells of the optimal tree; zero-amount cells are omitted.
    pub flows: Vec<Flow>,
}

impl TransportPlan {
    /// Row sums and column sums of the plan.
    pub fn marginals(&self, m: usize, n: usize) -> (Vec<f64>, Vec<f64>) {
        let mut rows = vec![0.0; m];
        let mut cols = vec![0.0; n];
        for f in &self.flows {
            rows[f.from] += f.amount;
            cols[f.to] += f.amount;
        }
        (rows, cols)
    }
}

#[derive(Clone, Copy, Debug)]
struct Cell {
    i: usize,
    j: usize,
    flow: f64,
}

struct Solver<'a> {
    m: usize,
    n: usize,
    cost: &'a [f64],
    basis: Vec<Cell>,
    u: Vec<f64>,
    v: Vec<f64>,
    // Tree adjacency over nodes 0..m (rows) and m..m+n (columns): (neighbor, basis index).
    adj: Vec<Vec<(usize, usize)>>,
    parent: Vec<(usize, usize)>,
    eps: f64,
}

const NO_PARENT: (usize, usize) = (usize::MAX, usize::MAX);

impl<'a> Solver<'a> {
    fn c(&self, i: usize, j: usize) -> f64 {
        self.cost[i * self.n + j]
    }

    fn northwest_corner(&mut self, supply: &[f64], demand: &[f64]) {
        let (m, n) = (self.m, self.n);
        let mut s = supply.to_vec();
        let mut d = demand.to_vec();
        let (mut i, mut j) = (0, 0);
        loop {
            let f = s[i].min(d[j]);
            s[i] -= f;
            d[j] -= f;
            self.basis.push(Cell { i, j, flow: f });
            if i == m - 1 && j == n - 1 {
                break;
            }
            if j == n - 1 || (s[i] <= d[j] && i < m - 1) {
                i += 1;
            } else {
                j += 1;
            }
        }
        debug_assert_eq!(self.basis.len(), m + n - 1);
    }

    fn rebuild_tree(&mut self) {
        for a in &mut self.adj {
            a.clear();
        }
        for (k, c) in self.basis.iter().enumerate() {
            self.adj[c.i].push((self.m + c.j, k));
            self.adj[self.m + c.j].push((c.i, k));
        }
    }

    /// Potentials with `u[0] = 0`; also records BFS parents from row 0.
    fn compute_potentials(&mut self) -> Result<()> {
        let total = self.m + self.n;
        self.parent.iter_mut().for_each(|p| *p = NO_PARENT);
        let mut seen = vec![false; total];
        let mut queue = std::collections::VecDeque::with_capacity(total);
        seen[0] = true;
        self.u[0] = 0.0;
        queue.push_back(0);
        let mut visited = 1;
        while let Some(node) = queue.pop_front() {
            for idx in 0..self.adj[node].len() {
                let (next, k) = self.adj[node][idx];
                if seen[next] {
                    continue;
                }
                seen[next] = true;
                visited += 1;
                self.parent[next] = (node, k);
                let cell = self.basis[k];
                let c = self.c(cell.i, cell.j);
                if next >= self.m {
                    self.v[next - self.m] = c - self.u[cell.i];
                } else {
                    self.u[next] = c - self.v[cell.j];
                }
                queue.push_back(next);
            }
        }
        if visited != total {
            return Err(Error::Solver("basis is not a spanning tree".into()));
        }
        Ok(())
    }

    fn reduced(&self, i: usize, j: usize) -> f64 {
        self.c(i, j) - self.u[i] - self.v[j]
    }

    /// Most negative reduced cost (Dantzig), or the first negative one (Bland).
    fn entering(&self, bland: bool) -> Option<(usize, usize)> {
        let mut best = None;
        let mut best_r = -self.eps;
        for i in 0..self.m {
            for j in 0..self.n {
                let r = self.reduced(i, j);
                if r < best_r {
                    if bland {
                        return Some((i, j));
                    }
                    best_r = r;
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Basis indices on the tree path between two nodes, in order from `a`.
    fn tree_path(&self, a: usize, b: usize) -> Vec<usize> {
        let depth = |mut x: usize| {
            let mut d = 0;
            while self.parent[x] != NO_PARENT {
                x = self.parent[x].0;
                d += 1;
            }
            d
        };
        let (mut x, mut y) = (a, b);
        let (mut dx, mut dy) = (depth(x), depth(y));
        let mut from_a = Vec::new();
        let mut from_b = Vec::new();
        while dx > dy {
            from_a.push(self.parent[x].1);
            x = self.parent[x].0;
            dx -= 1;
        }
        while dy > dx {
            from_b.push(self.parent[y].1);
            y = self.parent[y].0;
            dy -= 1;
        }
        while x != y {
            from_a.push(self.parent[x].1);
            x = self.parent[x].0;
            from_b.push(self.parent[y].1);
            y = self.parent[y].0;
        }
        from_b.reverse();
        from_a.extend(from_b);
        from_a
    }

    /// Pivot on `(i, j)`. Returns whether the pivot was degenerate.
    fn pivot(&mut self, i: usize, j: usize, bland: bool) -> bool {
        // Cycle: (i, j) gains; the tree path from column j back to row i
        // alternates losing and gaining cells, starting with a loss.
        let path = self.tree_path(self.m + j, i);
        let mut theta = f64::INFINITY;
        let mut leave = usize::MAX;
        let key = |c: &Cell| c.i * self.n + c.j;
        for (pos, &k) in path.iter().enumerate() {
            if pos % 2 == 0 {
                let f = self.basis[k].flow;
                let better = f < theta || (bland && f == theta && key(&self.basis[k]) < key(&self.basis[leave]));
                if better {
                    theta = f;
                    leave = k;
                }
            }
        }
        for (pos, &k) in path.iter().enumerate() {
            if pos % 2 == 0 {
                self.basis[k].flow -= theta;
            } else {
                self.basis[k].flow += theta;
            }
        }
        self.basis[leave] = Cell { i, j, flow: theta };
        theta <= 0.0
    }
}

/// Minimum-cost transport of `supply` onto `demand` with row-major `cost`
/// (`supply.len()` x `demand.len()`). Both marginals must be non-negative
/// and sum to the same total.
pub fn solve(supply: &[f64], demand: &[f64], cost: &[f64]) -> Result<TransportPlan> {
    let (m, n) = (supply.len(), demand.len());
    if m == 0 || n == 0 {
        return Err(Error::Solver("empty marginal".into()));
    }
    if cost.len() != m * n {
        return Err(Error::Solver(format!("cost matrix has {} entries, expected {}", cost.len(), m * n)));
    }
    if supply.iter().chain(demand).any(|&w| !(w >= 0.0 && w.is_finite())) {
        return Err(Error::Solver("marginals must be finite and non-negative".into()));
    }
    if cost.iter().any(|c| !c.is_finite()) {
        return Err(Error::Solver("non-finite cost".into()));
    }
    let (ts, td): (f64, f64) = (supply.iter().sum(), demand.iter().sum());
    if (ts - td).abs() > 1e-9 * ts.max(td).max(1.0) {
        return Err(Error::Solver(format!("unbalanced problem: {ts} vs {td}")));
    }

    let scale = cost.iter().fold(0f64, |a, c| a.max(c.abs()));
    let mut solver = Solver {
        m,
        n,
        cost,
        basis: Vec::with_capacity(m + n - 1),
        u: vec![0.0; m],
        v: vec![0.0; n],
        adj: vec![Vec::new(); m + n],
        parent: vec![NO_PARENT; m + n],
        eps: 1e-12 * (1.0 + scale),
    };
    solver.northwest_corner(supply, demand);

    let max_iters = 10_000 + 50 * m * n;
    let mut degenerate_run = 0usize;
    let mut converged = false;
    for _ in 0..max_iters {
        solver.rebuild_tree();
        solver.compute_potentials()?;
        let bland = degenerate_run > m + n;
        let Some((i, j)) = solver.entering(bland) else {
            converged = true;
            break;
        };
        if solver.pivot(i, j, bland) {
            degenerate_run += 1;
        } else {
            degenerate_run = 0;
        }
    }
    if !converged {
        return Err(Error::Solver(format!("no optimum after {max_iters} pivots")));
    }

    let mut flows: Vec<Flow> = solver
        .basis
        .iter()
        .filter(|c| c.flow > 0.0)
        .map(|c| Flow { from: c.i, to: c.j, amount: c.flow })
        .collect();
    flows.sort_by_key(|f| (f.from, f.to));
    let cost = flows.iter().map(|f| f.amount * solver.c(f.from, f.to)).sum();
    Ok(TransportPlan { cost, flows })
}
