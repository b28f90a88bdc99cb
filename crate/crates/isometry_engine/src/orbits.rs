//! Orbit partitions of a finite set under a list of permutations.

/// Partition `{0, …, domain_size−1}` into orbits under the group generated by
/// the given permutations.
///
/// The output is deterministic and independent of generator order: each orbit
/// is sorted ascending, and orbits are listed by their smallest element.
/// Panics when a generator is not a permutation of the domain.
pub fn orbits(domain_size: usize, generators: &[Vec<usize>]) -> Vec<Vec<usize>> {
    for g in generators {
        assert_eq!(g.len(), domain_size, "generator domain mismatch");
        let mut seen = vec![false; domain_size];
        for &img in g {
            assert!(img < domain_size && !seen[img], "generator is not a permutation");
            seen[img] = true;
        }
    }
    let mut visited = vec![false; domain_size];
    let mut out = Vec::new();
    for start in 0..domain_size {
        if visited[start] {
            continue;
        }
        let mut orbit = vec![start];
        visited[start] = true;
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for g in generators {
                let y = g[x];
                if !visited[y] {
                    visited[y] = true;
                    orbit.push(y);
                    queue.push(y);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Sorted orbit sizes of a partition, ascending.
pub fn orbit_sizes(partition: &[Vec<usize>]) -> Vec<usize> {
    let mut sizes: Vec<usize> = partition.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    sizes
}
