use super::{ExactError, ExactResult};
use crate::graph::Graph;

pub const ALPHA_MAX_N: usize = 40;

struct Mis {
    adj: Vec<u64>,
    best: u64,
    nodes: u64,
}

impl Mis {
    fn search(&mut self, candidates: u64, chosen: u64) {
        self.nodes += 1;
        if candidates == 0 {
            if chosen.count_ones() > self.best.count_ones() {
                self.best = chosen;
            }
            return;
        }
        if chosen.count_ones() + candidates.count_ones() <= self.best.count_ones() {
            return;
        }
        let (mut pick, mut pick_deg) = (0, u32::MAX);
        let (mut hub, mut hub_deg) = (0, 0);
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (self.adj[v] & candidates).count_ones();
            if d < pick_deg {
                (pick, pick_deg) = (v, d);
            }
            if d > hub_deg {
                (hub, hub_deg) = (v, d);
            }
        }
        // a vertex of degree <= 1 belongs to some maximum independent set
        if pick_deg <= 1 {
            self.search(candidates & !(self.adj[pick] | 1 << pick), chosen | 1 << pick);
            return;
        }
        self.search(candidates & !(self.adj[hub] | 1 << hub), chosen | 1 << hub);
        self.search(candidates & !(1 << hub), chosen);
    }
}

/// Exact independence number by branch and bound; `n <= 40`.
pub fn independence_number(g: &Graph) -> Result<ExactResult, ExactError> {
    let n = g.n();
    if n > ALPHA_MAX_N {
        return Err(ExactError::TooLarge {
            n,
            cap: ALPHA_MAX_N,
        });
    }
    let adj = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let mut mis = Mis {
        adj,
        best: 0,
        nodes: 0,
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    mis.search(all, 0);
    Ok(ExactResult {
        value: mis.best.count_ones() as usize,
        witness: (0..n).filter(|&v| mis.best >> v & 1 == 1).collect(),
        nodes_explored: mis.nodes,
        exhausted: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{classic, random_graph};

    fn naive_alpha(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .filter(|&mask| {
                g.edges()
                    .all(|(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0)
            })
            .map(u32::count_ones)
            .max()
            .unwrap_or(0) as usize
    }

    #[test]
    fn small_values() {
        assert_eq!(independence_number(&classic::cycle(5)).unwrap().value, 2);
        assert_eq!(
            independence_number(&classic::complete_bipartite(3, 3)).unwrap().value,
            3
        );
        assert_eq!(independence_number(&Graph::empty(0)).unwrap().value, 0);
        assert!(independence_number(&Graph::empty(41)).is_err());
    }

    #[test]
    fn matches_subset_oracle() {
        for seed in 0..200 {
            let n = 1 + (seed as usize % 12);
            let g = random_graph(n, 0.1 + (seed % 7) as f64 / 10.0, seed);
            let r = independence_number(&g).unwrap();
            assert!(g.is_independent(&r.witness));
            assert_eq!(r.value, naive_alpha(&g), "seed {seed}");
        }
    }
}
