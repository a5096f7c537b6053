//! Independent reference implementations used only by the test suite.
//!
//! Everything here deliberately avoids the library's bitset machinery:
//! adjacency is a plain boolean matrix rebuilt from the edge list,
//! searches are brute-force enumerations, and connectivity comes from a
//! max-flow argument. Agreement with the library is therefore evidence,
//! not circularity.
#![allow(dead_code)] // each test target uses its own subset

use fanham::graph::Graph;

/// Plain adjacency matrix rebuilt from the edge list.
pub fn adj_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Whether some A of size s and disjoint B of size t exist with no
/// A-B edge. Enumerates every candidate A directly; the complement side
/// only needs counting, since any t untouched vertices form a valid B.
fn has_uncrossed_pair(n: usize, adj: &[Vec<bool>], s: usize, t: usize) -> bool {
    if s + t > n {
        return false;
    }
    for mask in 0u64..1 << n {
        if (mask.count_ones() as usize) != s {
            continue;
        }
        let mut untouched = 0usize;
        for v in 0..n {
            if mask >> v & 1 == 1 {
                continue;
            }
            if (0..n).all(|u| mask >> u & 1 == 0 || !adj[u][v]) {
                untouched += 1;
            }
        }
        if untouched >= t {
            return true;
        }
    }
    false
}

/// Smallest q >= 1 such that for some split s + t = q + 1 every disjoint
/// (s, t) vertex pair carries a crossing edge (vacuously when s + t
/// exceeds the order). Checks every split, not just s <= t.
pub fn alpha_tilde_naive(g: &Graph) -> usize {
    let n = g.n();
    let adj = adj_matrix(g);
    for q in 1..=n {
        for s in 1..=q {
            let t = q + 1 - s;
            if !has_uncrossed_pair(n, &adj, s, t) {
                return q;
            }
        }
    }
    unreachable!("q = n always has a vacuous split");
}

/// Runs `f` on every permutation of `v[k..]` (in place); stops early and
/// reports true as soon as one permutation satisfies it.
fn any_permutation(v: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == v.len() {
        return f(v);
    }
    for i in k..v.len() {
        v.swap(k, i);
        let hit = any_permutation(v, k + 1, f);
        v.swap(k, i);
        if hit {
            return true;
        }
    }
    false
}

/// Hamilton cycle existence by enumerating all orderings that start at
/// vertex 0.
pub fn hamilton_cycle_naive(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let adj = adj_matrix(g);
    let mut rest: Vec<usize> = (1..n).collect();
    any_permutation(&mut rest, 0, &mut |perm| {
        adj[0][perm[0]]
            && adj[perm[n - 2]][0]
            && perm.windows(2).all(|w| adj[w[0]][w[1]])
    })
}

/// Hamilton (x, y)-path existence by enumerating all orderings of the
/// interior vertices.
pub fn hamilton_path_between_naive(g: &Graph, x: usize, y: usize) -> bool {
    let n = g.n();
    assert!(x < n && y < n && x != y);
    if n == 2 {
        return g.has_edge(x, y);
    }
    let adj = adj_matrix(g);
    let mut mid: Vec<usize> = (0..n).filter(|&v| v != x && v != y).collect();
    any_permutation(&mut mid, 0, &mut |perm| {
        adj[x][perm[0]]
            && adj[perm[n - 3]][y]
            && perm.windows(2).all(|w| adj[w[0]][w[1]])
    })
}

/// Maximum number of internally vertex-disjoint x-y paths, via unit
/// capacities on split vertices and augmenting-path max-flow.
fn disjoint_path_count(adj: &[Vec<bool>], x: usize, y: usize) -> usize {
    let n = adj.len();
    // Node v becomes v_in = 2v, v_out = 2v + 1 with capacity 1 between
    // them; each edge becomes two directed arcs out -> in of capacity 1.
    let nodes = 2 * n;
    let mut cap = vec![vec![0i32; nodes]; nodes];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = if v == x || v == y { i32::MAX / 2 } else { 1 };
    }
    for u in 0..n {
        for v in 0..n {
            if adj[u][v] {
                cap[2 * u + 1][2 * v] = 1;
            }
        }
    }
    let (source, sink) = (2 * x + 1, 2 * y);
    let mut flow = 0usize;
    loop {
        // BFS for an augmenting path in the residual network.
        let mut prev = vec![usize::MAX; nodes];
        prev[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for v in 0..nodes {
                if prev[v] == usize::MAX && cap[u][v] > 0 {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut v = sink;
        while v != source {
            let u = prev[v];
            cap[u][v] -= 1;
            cap[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
}

/// Vertex connectivity by the max-flow form of Menger's theorem: n - 1
/// for a complete graph, otherwise the minimum disjoint-path count over
/// nonadjacent pairs. Disconnected graphs and K_1 give 0.
pub fn connectivity_naive(g: &Graph) -> usize {
    let n = g.n();
    let adj = adj_matrix(g);
    let mut best = usize::MAX;
    for x in 0..n {
        for y in x + 1..n {
            if !adj[x][y] {
                best = best.min(disjoint_path_count(&adj, x, y));
            }
        }
    }
    if best == usize::MAX {
        n.saturating_sub(1)
    } else {
        best
    }
}
