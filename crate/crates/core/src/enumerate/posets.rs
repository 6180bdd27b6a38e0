use super::{check_order, EnumerationError};

/// Every partial order on `0..n` as a flat row-major matrix, in
/// lexicographic order of the off-diagonal cells.
pub fn enumerate_posets(n: usize) -> Result<Vec<Vec<bool>>, EnumerationError> {
    check_order(n)?;
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    // rank[i][j] = position of (i, j) in `cells`; diagonal decided up front
    let mut rank = vec![None; n * n];
    for (k, &(i, j)) in cells.iter().enumerate() {
        rank[i * n + j] = Some(k);
    }
    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
    }
    let mut out = Vec::new();
    extend(n, &cells, &rank, 0, &mut leq, &mut out);
    Ok(out)
}

fn decided(rank: &[Option<usize>], cell: usize, depth: usize) -> bool {
    rank[cell].is_none_or(|r| r <= depth)
}

/// Antisymmetry and transitivity over all triples whose cells are
/// decided and which involve the cell at `depth`.
fn consistent(
    n: usize,
    cells: &[(usize, usize)],
    rank: &[Option<usize>],
    depth: usize,
    leq: &[bool],
) -> bool {
    let (p, q) = cells[depth];
    if leq[p * n + q] && decided(rank, q * n + p, depth) && leq[q * n + p] {
        return false;
    }
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                let (ik, kj, ij) = (i * n + k, k * n + j, i * n + j);
                let touches = [ik, kj, ij].contains(&(p * n + q));
                if !touches
                    || !decided(rank, ik, depth)
                    || !decided(rank, kj, depth)
                    || !decided(rank, ij, depth)
                {
                    continue;
                }
                if leq[ik] && leq[kj] && !leq[ij] {
                    return false;
                }
            }
        }
    }
    true
}

fn extend(
    n: usize,
    cells: &[(usize, usize)],
    rank: &[Option<usize>],
    depth: usize,
    leq: &mut Vec<bool>,
    out: &mut Vec<Vec<bool>>,
) {
    if depth == cells.len() {
        out.push(leq.clone());
        return;
    }
    let (i, j) = cells[depth];
    for v in [false, true] {
        leq[i * n + j] = v;
        if consistent(n, cells, rank, depth, leq) {
            extend(n, cells, rank, depth + 1, leq, out);
        }
    }
    leq[i * n + j] = false;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::order_violations;

    fn naive(n: usize) -> Vec<Vec<bool>> {
        let off: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        let mut out = Vec::new();
        for code in 0..1u32 << off.len() {
            let mut leq = vec![false; n * n];
            for i in 0..n {
                leq[i * n + i] = true;
            }
            // first cell is the most significant bit
            for (k, &(i, j)) in off.iter().enumerate() {
                leq[i * n + j] = code >> (off.len() - 1 - k) & 1 == 1;
            }
            if order_violations(n, &leq).is_empty() {
                out.push(leq);
            }
        }
        out
    }

    #[test]
    fn small_examples() {
        assert_eq!(enumerate_posets(1).unwrap(), vec![vec![true]]);
        assert_eq!(enumerate_posets(2).unwrap().len(), 3);
    }

    #[test]
    fn matches_naive_filter() {
        for n in 1..=4 {
            assert_eq!(enumerate_posets(n).unwrap(), naive(n), "order {n}");
        }
    }

    #[test]
    fn known_labeled_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_posets(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 3, 19, 219, 4231]);
    }
}
