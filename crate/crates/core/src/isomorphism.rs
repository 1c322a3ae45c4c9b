//! Order-isomorphism search by backtracking with per-element invariant
//! pruning. Intended for small lattices (n ≤ 10 or so), where it beats the
//! bookkeeping of a canonical-labelling approach.

use crate::lattice::{Elem, FiniteLattice};

/// Local invariants preserved by any order isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementInvariant {
    pub height: usize,
    pub depth: usize,
    pub below: usize,
    pub above: usize,
    pub lower_covers: usize,
    pub upper_covers: usize,
}

pub fn element_invariants(l: &FiniteLattice) -> Vec<ElementInvariant> {
    let heights = l.heights();
    let depths = l.dual().heights();
    l.elements()
        .map(|x| ElementInvariant {
            height: heights[x],
            depth: depths[x],
            below: l.down_set(x).count_ones(..),
            above: l.up_set(x).count_ones(..),
            lower_covers: l.lower_covers(x).len(),
            upper_covers: l.upper_covers(x).len(),
        })
        .collect()
}

/// Sorted invariant multiset; equal for isomorphic lattices.
pub fn signature(l: &FiniteLattice) -> Vec<ElementInvariant> {
    let mut sig = element_invariants(l);
    sig.sort_unstable();
    sig
}

/// Returns `map` with `map[x]` the image in `b` of element `x` of `a`, if an
/// order isomorphism exists.
pub fn find_isomorphism(a: &FiniteLattice, b: &FiniteLattice) -> Option<Vec<Elem>> {
    if a.len() != b.len() {
        return None;
    }
    let inv_a = element_invariants(a);
    let inv_b = element_invariants(b);
    let mut sa = inv_a.clone();
    let mut sb = inv_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }

    let order = a.linear_extension();
    let candidates: Vec<Vec<Elem>> = order
        .iter()
        .map(|&x| b.elements().filter(|&y| inv_b[y] == inv_a[x]).collect())
        .collect();
    let mut search = Search {
        a,
        b,
        order: &order,
        candidates: &candidates,
        map: vec![usize::MAX; a.len()],
        used: vec![false; b.len()],
    };
    search.extend(0).then_some(search.map)
}

pub fn is_isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> bool {
    find_isomorphism(a, b).is_some()
}

struct Search<'a> {
    a: &'a FiniteLattice,
    b: &'a FiniteLattice,
    order: &'a [Elem],
    candidates: &'a [Vec<Elem>],
    map: Vec<Elem>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        for &y in &self.candidates[depth] {
            if self.used[y] || !self.consistent(depth, x, y) {
                continue;
            }
            self.map[x] = y;
            self.used[y] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[y] = false;
        }
        self.map[x] = usize::MAX;
        false
    }

    fn consistent(&self, depth: usize, x: Elem, y: Elem) -> bool {
        self.order[..depth].iter().all(|&u| {
            let v = self.map[u];
            self.a.leq(u, x) == self.b.leq(v, y) && self.a.leq(x, u) == self.b.leq(y, v)
        })
    }
}
