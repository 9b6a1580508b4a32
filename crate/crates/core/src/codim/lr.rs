//! Littlewood-Richardson coefficients by counting skew tableaux whose
//! reverse reading word is a lattice word.

use alloc::vec;
use alloc::vec::Vec;

use super::partition::Partition;

/// `c^ν_{λμ}`: the number of semistandard fillings of `ν/λ` with content `μ`
/// whose right-to-left, top-to-bottom reading word is a lattice word.
pub fn littlewood_richardson(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.weight() != lambda.weight() + mu.weight() || !nu.contains(lambda) {
        return 0;
    }
    // cells in reading order: row by row, right to left
    let mut cells = Vec::new();
    for r in 0..nu.len() {
        for c in (lambda.part(r)..nu.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let rows = nu.len();
    let width = nu.part(0);
    let mut grid = vec![vec![0usize; width]; rows];
    let mut counts = vec![0usize; mu.len() + 1];
    let mut total = 0;
    fill(0, &cells, lambda, mu, &mut grid, &mut counts, &mut total);
    total
}

fn fill(
    k: usize,
    cells: &[(usize, usize)],
    lambda: &Partition,
    mu: &Partition,
    grid: &mut [Vec<usize>],
    counts: &mut [usize],
    total: &mut u64,
) {
    if k == cells.len() {
        *total += 1;
        return;
    }
    let (r, c) = cells[k];
    // weakly increasing along rows: at most the entry to the right
    let mut hi = mu.len();
    if c + 1 < grid[r].len() && grid[r][c + 1] != 0 {
        hi = hi.min(grid[r][c + 1]);
    }
    // strictly increasing down columns: more than the entry above
    let mut lo = 1;
    if r > 0 && c >= lambda.part(r - 1) {
        lo = grid[r - 1][c] + 1;
    }
    for v in lo..=hi {
        if counts[v] + 1 > mu.part(v - 1) {
            continue;
        }
        if v > 1 && counts[v] + 1 > counts[v - 1] {
            continue;
        }
        counts[v] += 1;
        grid[r][c] = v;
        fill(k + 1, cells, lambda, mu, grid, counts, total);
        grid[r][c] = 0;
        counts[v] -= 1;
    }
}
