//! Naive lattice counting, independent of the library: naturally labeled
//! posets on labeled points, a brute-force lattice filter, and an isomorphism
//! quotient by minimum encoding over all relabelings.

use std::collections::BTreeSet;

/// `leq[i][j]` for an order on `n` points with `0` least and `n - 1`
/// greatest.
type Order = Vec<Vec<bool>>;

pub fn count_lattices(n: usize) -> usize {
    match n {
        0 => 0,
        1 | 2 => 1,
        _ => classes(n).len(),
    }
}

fn classes(n: usize) -> BTreeSet<Vec<bool>> {
    let m = n - 2;
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let perms = permutations(m);
    let mut seen = BTreeSet::new();
    for bits in 0u64..(1u64 << pairs.len()) {
        let mut mid = vec![vec![false; m]; m];
        for i in 0..m {
            mid[i][i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            mid[i][j] = bits >> k & 1 == 1;
        }
        if !transitive(&mid) {
            continue;
        }
        let order = bounded(&mid);
        if !is_lattice(&order) {
            continue;
        }
        let canonical = perms
            .iter()
            .map(|p| encode(&mid, p))
            .min()
            .expect("at least the identity");
        seen.insert(canonical);
    }
    seen
}

fn transitive(r: &[Vec<bool>]) -> bool {
    let m = r.len();
    (0..m).all(|i| (0..m).all(|j| !r[i][j] || (0..m).all(|k| !r[j][k] || r[i][k])))
}

fn bounded(mid: &[Vec<bool>]) -> Order {
    let m = mid.len();
    let n = m + 2;
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        leq[0][i] = true;
        leq[i][n - 1] = true;
    }
    for i in 0..m {
        for j in 0..m {
            leq[i + 1][j + 1] = mid[i][j];
        }
    }
    leq
}

fn is_lattice(leq: &Order) -> bool {
    let n = leq.len();
    let greatest = |bounds: &[usize], le: &dyn Fn(usize, usize) -> bool| {
        bounds.iter().any(|&g| bounds.iter().all(|&b| le(b, g)))
    };
    for x in 0..n {
        for y in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&z| leq[z][x] && leq[z][y]).collect();
            let upper: Vec<usize> = (0..n).filter(|&z| leq[x][z] && leq[y][z]).collect();
            if !greatest(&lower, &|a, b| leq[a][b]) || !greatest(&upper, &|a, b| leq[b][a]) {
                return false;
            }
        }
    }
    true
}

fn encode(mid: &[Vec<bool>], perm: &[usize]) -> Vec<bool> {
    let m = mid.len();
    let mut out = vec![false; m * m];
    for i in 0..m {
        for j in 0..m {
            out[perm[i] * m + perm[j]] = mid[i][j];
        }
    }
    out
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(m - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, m - 1);
            out.push(q);
        }
    }
    out
}
