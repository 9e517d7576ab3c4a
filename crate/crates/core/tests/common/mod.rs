#![allow(dead_code)]

use gparking::{Multigraph, VertexRanking};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The worked-example graph on `{0,1,2,3}`.
pub fn g_star() -> Multigraph {
    Multigraph::from_edges(4, &[(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// Unordered vertex pairs `(i, j)` with `i <= j`, loops included.
pub fn slots(vertex_count: usize) -> Vec<(usize, usize)> {
    (0..vertex_count)
        .flat_map(|i| (i..vertex_count).map(move |j| (i, j)))
        .collect()
}

/// Every multigraph on `vertex_count` vertices with exactly `edges` edges,
/// as multisets over [`slots`].
pub fn multigraphs_with(vertex_count: usize, edges: usize) -> Vec<Multigraph> {
    let slots = slots(vertex_count);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    multisets(&slots, 0, edges, &mut chosen, &mut |list| {
        out.push(Multigraph::from_edges(vertex_count, list).unwrap());
    });
    out
}

type Emit<'a> = dyn FnMut(&[(usize, usize)]) + 'a;

fn multisets(
    slots: &[(usize, usize)],
    from: usize,
    left: usize,
    chosen: &mut Vec<(usize, usize)>,
    emit: &mut Emit<'_>,
) {
    if left == 0 {
        emit(chosen);
        return;
    }
    for k in from..slots.len() {
        chosen.push(slots[k]);
        multisets(slots, k, left - 1, chosen, emit);
        chosen.pop();
    }
}

/// Every connected multigraph on at most 4 vertices with at most 6 edges,
/// loops and parallel edges included, up to labeled form.
pub fn small_corpus() -> Vec<Multigraph> {
    let mut out = Vec::new();
    for vertex_count in 1..=4 {
        for edges in 0..=6 {
            out.extend(
                multigraphs_with(vertex_count, edges)
                    .into_iter()
                    .filter(|g| g.is_connected()),
            );
        }
    }
    out
}

/// Identity, reversal, and a cyclic shift when it differs from both.
pub fn rankings(n: usize) -> Vec<VertexRanking> {
    let mut out = vec![VertexRanking::identity(n), VertexRanking::reversal(n)];
    if n >= 3 {
        let shifted: Vec<usize> = (0..n).map(|k| (k + 1) % n + 1).collect();
        out.push(VertexRanking::from_ranks(&shifted).unwrap());
    }
    out.dedup();
    out
}

pub fn random_ranking(rng: &mut ChaCha8Rng, n: usize) -> VertexRanking {
    let mut ranks: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        ranks.swap(i, j);
    }
    VertexRanking::from_ranks(&ranks).unwrap()
}

/// `count` random connected multigraphs on `vertex_count` vertices with at
/// most `max_edges` edges: a random spanning tree plus random extra edges.
pub fn random_corpus(seed: u64, count: usize, vertex_count: usize, max_edges: usize) -> Vec<(Multigraph, VertexRanking)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let slots = slots(vertex_count);
    (0..count)
        .map(|_| {
            let mut g = Multigraph::new(vertex_count).unwrap();
            for v in 1..vertex_count {
                let p = rng.gen_range(0..v);
                g.add_edge(p, v).unwrap();
            }
            let extra = rng.gen_range(0..=max_edges - (vertex_count - 1));
            for _ in 0..extra {
                let (a, b) = slots[rng.gen_range(0..slots.len())];
                g.add_edge(a, b).unwrap();
            }
            // relabel so the tree is not always rooted along increasing labels
            let g = shuffle_labels(&g, &mut rng);
            let tau = random_ranking(&mut rng, vertex_count - 1);
            (g, tau)
        })
        .collect()
}

fn shuffle_labels(g: &Multigraph, rng: &mut ChaCha8Rng) -> Multigraph {
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    let edges: Vec<_> = g.edge_pairs().into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
    Multigraph::from_edges(n, &edges).unwrap()
}
