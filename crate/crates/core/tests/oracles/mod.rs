//! Independent reference implementations used by the integration tests.
//! None of these share code paths with the library routines they check.
#![allow(dead_code)]

use std::collections::VecDeque;

use covnum::ryser::GeneralHypergraph;
use covnum::{CoverInstance, EdgeColoring};

/// Per-color BFS over an explicit edge list; ids numbered by first vertex.
pub fn flood_fill(coloring: &EdgeColoring) -> Vec<Vec<u32>> {
    let shape = coloring.shape();
    let n = shape.vertex_count();
    let edges: Vec<Vec<usize>> = shape.edges().collect();
    (1..=shape.k() as u8)
        .map(|c| {
            let mut adj = vec![Vec::new(); n];
            for (e, edge) in edges.iter().enumerate() {
                if coloring.colors()[e] == c {
                    for &a in edge {
                        for &b in edge {
                            if a != b {
                                adj[a].push(b);
                            }
                        }
                    }
                }
            }
            let mut ids = vec![0u32; n];
            let mut next = 0;
            for s in 0..n {
                if ids[s] != 0 {
                    continue;
                }
                next += 1;
                ids[s] = next;
                let mut q = VecDeque::from([s]);
                while let Some(x) = q.pop_front() {
                    for &y in &adj[x] {
                        if ids[y] == 0 {
                            ids[y] = next;
                            q.push_back(y);
                        }
                    }
                }
            }
            ids
        })
        .collect()
}

/// Smallest number of candidate sets covering everything, by enumerating
/// subfamilies in increasing size.
pub fn subset_cover(instance: &CoverInstance) -> usize {
    let c = instance.candidates();
    assert!(c.len() <= 20);
    let n = instance.vertex_count();
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let masks: Vec<u64> = c
        .iter()
        .map(|cand| cand.members.iter().fold(0, |m, &v| m | 1 << v))
        .collect();
    let mut order: Vec<u32> = (0..1u32 << c.len()).collect();
    order.sort_by_key(|s| s.count_ones());
    for s in order {
        let union = (0..c.len())
            .filter(|i| s >> i & 1 == 1)
            .fold(0, |m, i| m | masks[i]);
        if union == full {
            return s.count_ones() as usize;
        }
    }
    unreachable!()
}

/// (tau, nu) by enumerating vertex subsets and edge subsets.
pub fn subset_tau_nu(h: &GeneralHypergraph) -> (usize, usize) {
    let edges = h.edges();
    let masks: Vec<u64> = edges
        .iter()
        .map(|e| e.iter().fold(0, |m, &v| m | 1 << v))
        .collect();
    let mut nu = 0;
    for s in 0u32..1 << edges.len() {
        let mut used = 0u64;
        let mut ok = true;
        for (i, m) in masks.iter().enumerate() {
            if s >> i & 1 == 1 {
                ok &= used & m == 0;
                used |= m;
            }
        }
        if ok {
            nu = nu.max(s.count_ones() as usize);
        }
    }
    let n = h.vertex_count();
    let mut tau = usize::MAX;
    for s in 0u64..1 << n {
        if (s.count_ones() as usize) < tau && masks.iter().all(|m| m & s != 0) {
            tau = s.count_ones() as usize;
        }
    }
    (tau, nu)
}
