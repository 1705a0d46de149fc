//! Brute-force enumeration oracles, kept independent of the library's own
//! computation paths (and of the enumerators inside its verify module).

/// Count partitions of `{1..n}` into exactly `k` non-empty blocks with the
/// elements `1..=r` in pairwise distinct blocks, by enumerating restricted
/// growth strings: `labels[i]` is the block of element `i+1`, and a new
/// block may only be opened with the smallest unused label.
pub fn count_partitions(n: usize, k: usize, r: usize) -> u64 {
    fn extend(labels: &mut Vec<usize>, n: usize, k: usize, r: usize, used: usize) -> u64 {
        if labels.len() == n {
            return u64::from(used == k);
        }
        let position = labels.len();
        let mut total = 0;
        for label in 0..=used {
            let opens_block = label == used;
            if opens_block && used == k {
                continue;
            }
            if position < r && labels[..position].contains(&label) {
                continue;
            }
            labels.push(label);
            total += extend(labels, n, k, r, used + usize::from(opens_block));
            labels.pop();
        }
        total
    }
    extend(&mut Vec::with_capacity(n), n, k, r, 0)
}

/// Count ordered set partitions of an `n`-set by enumerating all block
/// assignments for each block count and keeping the surjective ones.
pub fn count_ordered_partitions(n: usize) -> u64 {
    fn assign(remaining: usize, blocks: usize, map: &mut Vec<usize>, hits: &mut u64) {
        if remaining == 0 {
            let mut seen = vec![false; blocks];
            for &block in map.iter() {
                seen[block] = true;
            }
            if seen.iter().all(|&s| s) {
                *hits += 1;
            }
            return;
        }
        for block in 0..blocks {
            map.push(block);
            assign(remaining - 1, blocks, map, hits);
            map.pop();
        }
    }
    if n == 0 {
        return 1;
    }
    let mut total = 0;
    for blocks in 1..=n {
        let mut hits = 0;
        assign(n, blocks, &mut Vec::with_capacity(n), &mut hits);
        total += hits;
    }
    total
}

#[test]
fn oracles_reproduce_textbook_values() {
    // S(4,2) = 7, S(3,2) = 3, S_2(3,2) = 2, S_2(4,3) = 5
    assert_eq!(count_partitions(4, 2, 0), 7);
    assert_eq!(count_partitions(3, 2, 0), 3);
    assert_eq!(count_partitions(3, 2, 2), 2);
    assert_eq!(count_partitions(4, 3, 2), 5);
    assert_eq!(count_partitions(0, 0, 0), 1);
    // Bell numbers as row sums
    let bell: Vec<u64> = (0..=5)
        .map(|n| (0..=n).map(|k| count_partitions(n, k, 0)).sum())
        .collect();
    assert_eq!(bell, vec![1, 1, 2, 5, 15, 52]);
    assert_eq!(count_ordered_partitions(4), 75);
}
