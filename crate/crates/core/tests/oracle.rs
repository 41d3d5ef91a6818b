//! Brute-force cross-checks that do not go through the ear-based enumerator.

use std::collections::HashSet;

use planar_euler::enumerate::canonical_code;
use planar_euler::{
    build_embedding, check_two_connected, compute_genus, enumerate_faces, enumerate_small,
    EmbeddedGraph,
};

/// Heap's algorithm over all orders of `items`.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    fn go(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            go(k - 1, a, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            a.swap(j, k - 1);
        }
    }
    let mut out = Vec::new();
    go(items.len(), &mut items.to_vec(), &mut out);
    out
}

/// Every genus-0, 2-connected labeled rotation system on exactly `n` vertices.
fn brute_force(n: usize) -> Vec<EmbeddedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        if mask.count_ones() as usize > 3 * n - 6 {
            continue;
        }
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        if adj.iter().any(|a| a.len() < 2) {
            continue;
        }
        let Ok(g) = build_embedding(n, adj.clone()) else { continue };
        if !check_two_connected(&g) {
            continue;
        }
        // cyclic orders: fix each list's first entry, permute the rest
        let choices: Vec<Vec<Vec<usize>>> = adj
            .iter()
            .map(|a| {
                permutations(&a[1..])
                    .into_iter()
                    .map(|p| std::iter::once(a[0]).chain(p).collect())
                    .collect()
            })
            .collect();
        let mut idx = vec![0; n];
        loop {
            let rot: Vec<Vec<usize>> = (0..n).map(|v| choices[v][idx[v]].clone()).collect();
            let g = build_embedding(n, rot).unwrap();
            if compute_genus(&g, &enumerate_faces(&g)) == Ok(0) {
                out.push(g);
            }
            let mut v = 0;
            while v < n {
                idx[v] += 1;
                if idx[v] < choices[v].len() {
                    break;
                }
                idx[v] = 0;
                v += 1;
            }
            if v == n {
                break;
            }
        }
    }
    out
}

#[test]
fn ear_enumeration_covers_every_labeled_embedding() {
    let e = enumerate_small(5, None).unwrap();
    let enumerated: HashSet<_> = e.maps().iter().map(canonical_code).collect();
    assert_eq!(enumerated.len(), e.maps().len(), "enumerator emitted duplicates");

    let mut brute = HashSet::new();
    for n in 3..=5 {
        for g in brute_force(n) {
            brute.insert(canonical_code(&g));
        }
    }
    assert_eq!(brute, enumerated);
}

#[test]
#[ignore = "brute force over all 6-vertex rotation systems, about 80 s"]
fn ear_enumeration_covers_six_vertices() {
    let e = enumerate_small(6, None).unwrap();
    let enumerated: HashSet<_> = e.maps().iter().map(canonical_code).collect();
    let mut brute = HashSet::new();
    for n in 3..=6 {
        for g in brute_force(n) {
            brute.insert(canonical_code(&g));
        }
    }
    assert_eq!(brute, enumerated);
}

/// Vertex-deletion definition of 2-connectivity.
fn two_connected_by_deletion(g: &EmbeddedGraph) -> bool {
    let n = g.vertex_count();
    if n < 3 {
        return false;
    }
    (0..n).all(|removed| {
        let start = if removed == 0 { 1 } else { 0 };
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &v in g.rotation(u) {
                if v != removed && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.iter().filter(|&&s| s).count() == n - 1
    })
}

#[test]
fn lowpoint_test_matches_vertex_deletion() {
    // all connected graphs on 5 labeled vertices
    let n = 5;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut checked = 0;
    for mask in 0u32..(1 << pairs.len()) {
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        if let Ok(g) = build_embedding(n, adj) {
            assert_eq!(check_two_connected(&g), two_connected_by_deletion(&g), "{mask:b}");
            checked += 1;
        }
    }
    assert_eq!(checked, 728);
}
