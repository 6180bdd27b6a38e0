//! Brute-force reference implementations working directly on the raw
//! table and order matrix, sharing no code with the library.

#![allow(dead_code)]

pub type Table = Vec<Vec<usize>>;
pub type Order = Vec<Vec<bool>>;

pub fn laws_hold(t: &Table, q: &Order) -> bool {
    let n = t.len();
    for a in 0..n {
        if !q[a][a] {
            return false;
        }
        for b in 0..n {
            if a != b && q[a][b] && q[b][a] {
                return false;
            }
            for c in 0..n {
                if t[t[a][b]][c] != t[a][t[b][c]] {
                    return false;
                }
                if q[a][b] && q[b][c] && !q[a][c] {
                    return false;
                }
                if q[a][b] && !(q[t[c][a]][t[c][b]] && q[t[a][c]][t[b][c]]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every valid (table, order) pair of order `n`, by exhaustive filtering.
pub fn ordered_semigroups(n: usize) -> Vec<(Table, Order)> {
    let cells = n * n;
    let mut out = Vec::new();
    let mut tables = Vec::new();
    for code in 0..n.pow(cells as u32) {
        let mut c = code;
        let mut t = vec![vec![0; n]; n];
        for cell in 0..cells {
            t[cell / n][cell % n] = c % n;
            c /= n;
        }
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])));
        if assoc {
            tables.push(t);
        }
    }
    for t in &tables {
        for code in 0u64..1 << cells {
            let q: Order = (0..n)
                .map(|i| (0..n).map(|j| code >> (i * n + j) & 1 == 1).collect())
                .collect();
            if laws_hold(t, &q) {
                out.push((t.clone(), q));
            }
        }
    }
    out
}

fn below_some(q: &Order, x: usize, set: &[usize]) -> bool {
    set.iter().any(|&h| q[x][h])
}

pub fn regular(t: &Table, q: &Order) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).any(|x| q[a][t[t[a][x]][a]]))
}

pub fn group_like(t: &Table, q: &Order) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).any(|x| q[a][t[x][b]]) && (0..n).any(|y| q[a][t[b][y]])))
}

pub fn left_group_like(t: &Table, q: &Order) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).any(|x| q[a][t[x][b]])))
}

/// `a ∈ (aSab]` for all `a, b`.
pub fn lgo_form(t: &Table, q: &Order) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).any(|s| q[a][t[t[t[a][s]][a]][b]])))
}

pub fn clifford(t: &Table, q: &Order) -> bool {
    let n = t.len();
    regular(t, q)
        && (0..n).all(|a| {
            (0..n).all(|b| {
                let bsa: Vec<usize> = (0..n).map(|s| t[t[b][s]][a]).collect();
                below_some(q, t[a][b], &bsa)
            })
        })
}

pub fn left_clifford(t: &Table, q: &Order) -> bool {
    let n = t.len();
    regular(t, q)
        && (0..n).all(|a| {
            (0..n).all(|b| {
                let sa: Vec<usize> = (0..n).map(|s| t[s][a]).collect();
                below_some(q, t[a][b], &sa)
            })
        })
}

pub fn zero(t: &Table, q: &Order) -> Option<usize> {
    let n = t.len();
    (0..n).find(|&z| (0..n).all(|x| q[z][x] && t[z][x] == z && t[x][z] == z))
}

fn power(t: &Table, a: usize, k: usize) -> usize {
    (1..k).fold(a, |p, _| t[p][a])
}

pub fn nil(t: &Table, q: &Order) -> bool {
    let n = t.len();
    match zero(t, q) {
        Some(z) => (0..n).all(|a| (1..=n).any(|k| power(t, a, k) == z)),
        None => false,
    }
}

/// Flags in the order regular, group like, left group like, Clifford,
/// left Clifford, nil.
pub fn flags(t: &Table, q: &Order) -> [bool; 6] {
    [
        regular(t, q),
        group_like(t, q),
        left_group_like(t, q),
        clifford(t, q),
        left_clifford(t, q),
        nil(t, q),
    ]
}

/// Two-sided ideals as sorted element lists, by scanning every subset.
pub fn ideals(t: &Table, q: &Order) -> Vec<Vec<usize>> {
    let n = t.len();
    let mut out = Vec::new();
    for mask in 1u64..1 << n {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let inside = |x: usize| mask >> x & 1 == 1;
        let absorbs = members
            .iter()
            .all(|&i| (0..n).all(|s| inside(t[s][i]) && inside(t[i][s])));
        let down = (0..n).all(|x| inside(x) || !below_some(q, x, &members));
        if absorbs && down {
            out.push(members);
        }
    }
    out
}

/// Every element has a power inside `ideal`.
pub fn powers_meet(t: &Table, ideal: &[usize]) -> bool {
    let n = t.len();
    (0..n).all(|a| (1..=n).any(|k| ideal.contains(&power(t, a, k))))
}

/// Rees factor `S/I` is nil: every element outside `I` reaches `I`
/// through its powers, computed on the collapsed table.
pub fn rees_quotient_nil(t: &Table, ideal: &[usize]) -> bool {
    let n = t.len();
    let zero = usize::MAX;
    let collapse = |x: usize| if ideal.contains(&x) { zero } else { x };
    let mul = |x: usize, y: usize| {
        if x == zero || y == zero {
            zero
        } else {
            collapse(t[x][y])
        }
    };
    (0..n).filter(|a| !ideal.contains(a)).all(|a| {
        let mut p = a;
        for _ in 0..n {
            if p == zero {
                return true;
            }
            p = mul(p, a);
        }
        p == zero
    })
}

pub fn downset(q: &Order, set: &[usize]) -> Vec<usize> {
    (0..q.len()).filter(|&x| below_some(q, x, set)).collect()
}
