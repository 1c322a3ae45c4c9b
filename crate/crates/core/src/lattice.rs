//! Finite bounded lattices stored as order bitsets plus full meet/join tables.
//!
//! A [`FiniteLattice`] is immutable once built. Every query after
//! construction is a table lookup or a bitset scan, so the structure is cheap
//! to share across threads.

use std::borrow::Cow;
use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::error::{BoundKind, Error, Extremum, Result};

/// Dense element id in `0..n`.
pub type Elem = usize;

/// Hasse diagram input: `(lower, upper)` pairs where `upper` covers `lower`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoverRelation {
    pub pairs: Vec<(Elem, Elem)>,
}

impl CoverRelation {
    pub fn new(pairs: impl IntoIterator<Item = (Elem, Elem)>) -> Self {
        CoverRelation {
            pairs: pairs.into_iter().collect(),
        }
    }
}

impl FromIterator<(Elem, Elem)> for CoverRelation {
    fn from_iter<T: IntoIterator<Item = (Elem, Elem)>>(iter: T) -> Self {
        CoverRelation::new(iter)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    n: usize,
    // down[x] = { y : y <= x }, up[x] = { y : x <= y }
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
    meet: Vec<u32>,
    join: Vec<u32>,
    lower_covers: Vec<Vec<Elem>>,
    upper_covers: Vec<Vec<Elem>>,
    bottom: Elem,
    top: Elem,
    labels: Option<Vec<String>>,
}

impl FiniteLattice {
    /// Builds and validates a lattice from its cover relation.
    ///
    /// The transitive closure is computed here. Redundant pairs (implied by
    /// transitivity) are accepted and do not change the order.
    pub fn from_covers(n: usize, covers: &CoverRelation) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(lo, hi) in &covers.pairs {
            for id in [lo, hi] {
                if id >= n {
                    return Err(Error::OutOfRange { id, n });
                }
            }
            if lo == hi {
                return Err(Error::NotAPoset { cycle: vec![lo] });
            }
            succ[lo].push(hi);
            indegree[hi] += 1;
        }

        // Kahn's algorithm; anything left over sits on or above a cycle.
        let mut remaining = indegree.clone();
        let mut queue: VecDeque<Elem> = (0..n).filter(|&x| indegree[x] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(x) = queue.pop_front() {
            topo.push(x);
            for &y in &succ[x] {
                remaining[y] -= 1;
                if remaining[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if topo.len() < n {
            return Err(Error::NotAPoset {
                cycle: find_cycle(&succ, &remaining),
            });
        }

        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            down[x].insert(x);
        }
        for &x in &topo {
            let below = down[x].clone();
            for &y in &succ[x] {
                down[y].union_with(&below);
            }
        }
        Self::from_down_sets(down)
    }

    /// Builds a lattice from a validated order given as down-sets.
    ///
    /// Meets and joins are searched for every pair; errors name the first
    /// offending pair in lexicographic order.
    pub(crate) fn from_down_sets(down: Vec<FixedBitSet>) -> Result<Self> {
        let n = down.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let up = transpose(&down);
        let bottom = unique_extremum(&up, n).ok_or(Error::NotBounded(Extremum::Minimum))?;
        let top = unique_extremum(&down, n).ok_or(Error::NotBounded(Extremum::Maximum))?;

        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for x in 0..n {
            for y in x..n {
                let m = greatest_in(&down, &down[x], &down[y]).ok_or(Error::NotALattice {
                    pair: (x, y),
                    kind: BoundKind::Meet,
                })?;
                let j = greatest_in(&up, &up[x], &up[y]).ok_or(Error::NotALattice {
                    pair: (x, y),
                    kind: BoundKind::Join,
                })?;
                meet[x * n + y] = m as u32;
                meet[y * n + x] = m as u32;
                join[x * n + y] = j as u32;
                join[y * n + x] = j as u32;
            }
        }
        Ok(Self::assemble(down, up, meet, join, bottom, top))
    }

    /// Assembles a lattice whose order and tables are already known to be
    /// consistent (generated instances, intervals, duals).
    pub(crate) fn from_parts(
        down: Vec<FixedBitSet>,
        meet: Vec<u32>,
        join: Vec<u32>,
    ) -> Result<Self> {
        let n = down.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        debug_assert_eq!(meet.len(), n * n);
        debug_assert_eq!(join.len(), n * n);
        let up = transpose(&down);
        let bottom = unique_extremum(&up, n).ok_or(Error::NotBounded(Extremum::Minimum))?;
        let top = unique_extremum(&down, n).ok_or(Error::NotBounded(Extremum::Maximum))?;
        Ok(Self::assemble(down, up, meet, join, bottom, top))
    }

    fn assemble(
        down: Vec<FixedBitSet>,
        up: Vec<FixedBitSet>,
        meet: Vec<u32>,
        join: Vec<u32>,
        bottom: Elem,
        top: Elem,
    ) -> Self {
        let n = down.len();
        let lower_covers: Vec<Vec<Elem>> = (0..n).map(|x| maximal_strictly_below(&down, &up, x)).collect();
        let mut upper_covers = vec![Vec::new(); n];
        for (x, lows) in lower_covers.iter().enumerate() {
            for &y in lows {
                upper_covers[y].push(x);
            }
        }
        FiniteLattice {
            n,
            down,
            up,
            meet,
            join,
            lower_covers,
            upper_covers,
            bottom,
            top,
            labels: None,
        }
    }

    /// Attaches display labels. Labels never affect semantics.
    ///
    /// # Panics
    /// If the number of labels differs from the element count.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: Elem) -> Cow<'_, str> {
        match &self.labels {
            Some(labels) => Cow::Borrowed(labels[x].as_str()),
            None => Cow::Owned(x.to_string()),
        }
    }

    /// Id of the element carrying `label`, if any.
    pub fn find_label(&self, label: &str) -> Option<Elem> {
        match &self.labels {
            Some(labels) => labels.iter().position(|l| l == label),
            None => label.parse().ok().filter(|&x: &Elem| x < self.n),
        }
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.down[y].contains(x)
    }

    #[inline]
    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: Elem, y: Elem) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.n + y] as Elem
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.n + y] as Elem
    }

    /// `{ y : y <= x }` as a bitset.
    pub fn down_set(&self, x: Elem) -> &FixedBitSet {
        &self.down[x]
    }

    /// `{ y : x <= y }` as a bitset.
    pub fn up_set(&self, x: Elem) -> &FixedBitSet {
        &self.up[x]
    }

    /// Elements covered by `x`, ascending.
    pub fn lower_covers(&self, x: Elem) -> &[Elem] {
        &self.lower_covers[x]
    }

    /// Elements covering `x`, ascending.
    pub fn upper_covers(&self, x: Elem) -> &[Elem] {
        &self.upper_covers[x]
    }

    pub fn covers(&self, lower: Elem, upper: Elem) -> bool {
        self.lower_covers[upper].binary_search(&lower).is_ok()
    }

    /// The cover relation in `(lower, upper)` order, sorted.
    pub fn cover_relation(&self) -> CoverRelation {
        let mut pairs: Vec<_> = self
            .elements()
            .flat_map(|x| self.lower_covers[x].iter().map(move |&y| (y, x)))
            .collect();
        pairs.sort_unstable();
        CoverRelation { pairs }
    }

    /// Greatest lower bound of `s`; the empty meet is `top`.
    pub fn meet_of_set(&self, s: impl IntoIterator<Item = Elem>) -> Elem {
        s.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Least upper bound of `s`; the empty join is `bottom`.
    pub fn join_of_set(&self, s: impl IntoIterator<Item = Elem>) -> Elem {
        s.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn coatoms(&self) -> Vec<Elem> {
        self.lower_covers[self.top].clone()
    }

    pub fn atoms(&self) -> Vec<Elem> {
        self.upper_covers[self.bottom].clone()
    }

    /// The sublattice `[lo, hi]`, relabelled densely in ascending parent id
    /// order.
    pub fn interval(&self, lo: Elem, hi: Elem) -> Result<IntervalView> {
        for id in [lo, hi] {
            if id >= self.n {
                return Err(Error::OutOfRange { id, n: self.n });
            }
        }
        if !self.leq(lo, hi) {
            return Err(Error::NotComparable { lo, hi });
        }
        let mut members = self.up[lo].clone();
        members.intersect_with(&self.down[hi]);
        let to_parent: Vec<Elem> = members.ones().collect();
        let lattice = self.restrict(&to_parent);
        Ok(IntervalView {
            lo,
            hi,
            lattice,
            to_parent,
        })
    }

    /// Restriction to a subset closed under meet and join, given ascending.
    fn restrict(&self, members: &[Elem]) -> FiniteLattice {
        let k = members.len();
        let local = |p: Elem| members.binary_search(&p).expect("subset is a sublattice");
        let mut down = vec![FixedBitSet::with_capacity(k); k];
        let mut meet = vec![0u32; k * k];
        let mut join = vec![0u32; k * k];
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members.iter().enumerate() {
                if self.leq(y, x) {
                    down[i].insert(j);
                }
                meet[i * k + j] = local(self.meet(x, y)) as u32;
                join[i * k + j] = local(self.join(x, y)) as u32;
            }
        }
        let lattice = FiniteLattice::from_parts(down, meet, join).expect("sublattice is bounded");
        match &self.labels {
            Some(labels) => lattice.with_labels(members.iter().map(|&p| labels[p].clone()).collect()),
            None => lattice.with_labels(members.iter().map(|p| p.to_string()).collect()),
        }
    }

    /// Order-reversed lattice on the same element ids.
    pub fn dual(&self) -> FiniteLattice {
        FiniteLattice {
            n: self.n,
            down: self.up.clone(),
            up: self.down.clone(),
            meet: self.join.clone(),
            join: self.meet.clone(),
            lower_covers: self.upper_covers.clone(),
            upper_covers: self.lower_covers.clone(),
            bottom: self.top,
            top: self.bottom,
            labels: self.labels.clone(),
        }
    }

    /// Elements sorted so that `x < y` implies `x` comes first.
    pub fn linear_extension(&self) -> Vec<Elem> {
        let mut order: Vec<Elem> = self.elements().collect();
        order.sort_by_key(|&x| (self.down[x].count_ones(..), x));
        order
    }

    /// Length of the longest chain from bottom to `x`, counted in covers.
    pub fn heights(&self) -> Vec<usize> {
        let mut height = vec![0usize; self.n];
        for x in self.linear_extension() {
            height[x] = self.lower_covers[x].iter().map(|&y| height[y] + 1).max().unwrap_or(0);
        }
        height
    }

    /// Number of covers on the longest maximal chain.
    pub fn longest_chain_length(&self) -> usize {
        self.heights()[self.top]
    }

    /// Every maximal chain bottom..=top, in lexicographic order.
    pub fn maximal_chains(&self) -> Vec<Vec<Elem>> {
        let mut out = Vec::new();
        let mut path = vec![self.bottom];
        self.extend_chains(&mut path, &mut out);
        out
    }

    fn extend_chains(&self, path: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
        let last = *path.last().expect("path starts at bottom");
        if last == self.top {
            out.push(path.clone());
            return;
        }
        for &next in &self.upper_covers[last] {
            path.push(next);
            self.extend_chains(path, out);
            path.pop();
        }
    }

    /// Relabels element ids: element `x` of `self` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[Elem]) -> FiniteLattice {
        assert_eq!(perm.len(), self.n);
        let n = self.n;
        let mut inverse = vec![0; n];
        for (x, &p) in perm.iter().enumerate() {
            inverse[p] = x;
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for x in 0..n {
            for y in self.down[x].ones() {
                down[perm[x]].insert(perm[y]);
            }
            for y in 0..n {
                meet[perm[x] * n + perm[y]] = perm[self.meet(x, y)] as u32;
                join[perm[x] * n + perm[y]] = perm[self.join(x, y)] as u32;
            }
        }
        let out = FiniteLattice::from_parts(down, meet, join).expect("relabelling keeps bounds");
        match &self.labels {
            Some(labels) => out.with_labels(inverse.iter().map(|&x| labels[x].clone()).collect()),
            None => out,
        }
    }
}

/// A sublattice `[lo, hi]` together with its embedding into the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalView {
    pub lo: Elem,
    pub hi: Elem,
    pub lattice: FiniteLattice,
    to_parent: Vec<Elem>,
}

impl IntervalView {
    pub fn to_parent(&self, x: Elem) -> Elem {
        self.to_parent[x]
    }

    pub fn from_parent(&self, p: Elem) -> Option<Elem> {
        self.to_parent.binary_search(&p).ok()
    }

    pub fn embedding(&self) -> &[Elem] {
        &self.to_parent
    }
}

fn transpose(rows: &[FixedBitSet]) -> Vec<FixedBitSet> {
    let n = rows.len();
    let mut out = vec![FixedBitSet::with_capacity(n); n];
    for (x, row) in rows.iter().enumerate() {
        for y in row.ones() {
            out[y].insert(x);
        }
    }
    out
}

/// The element whose row is full: `top` for down-sets, `bottom` for up-sets.
fn unique_extremum(rows: &[FixedBitSet], n: usize) -> Option<Elem> {
    let mut found = rows.iter().enumerate().filter(|(_, r)| r.count_ones(..) == n).map(|(x, _)| x);
    let first = found.next();
    // Antisymmetry makes a second full row impossible.
    debug_assert!(found.next().is_none());
    first
}

/// Greatest element of `a ∩ b` with respect to the order encoded by `rows`
/// (down-sets give the meet, up-sets the join).
fn greatest_in(rows: &[FixedBitSet], a: &FixedBitSet, b: &FixedBitSet) -> Option<Elem> {
    let mut common = a.clone();
    common.intersect_with(b);
    let size = common.count_ones(..);
    // g is greatest iff rows[g] ⊇ common; rows[g] ⊆ common already holds.
    common.ones().find(|&g| rows[g].count_ones(..) == size)
}

fn maximal_strictly_below(down: &[FixedBitSet], up: &[FixedBitSet], x: Elem) -> Vec<Elem> {
    let strict = &down[x];
    strict
        .ones()
        .filter(|&y| y != x)
        .filter(|&y| up[y].intersection(strict).count() == 2)
        .collect()
}

fn find_cycle(succ: &[Vec<Elem>], remaining: &[usize]) -> Vec<Elem> {
    // Nodes with remaining in-degree > 0 all have a predecessor in that set;
    // walking predecessors must eventually repeat.
    let n = succ.len();
    let mut pred = vec![None; n];
    for x in 0..n {
        if remaining[x] == 0 {
            continue;
        }
        for &y in &succ[x] {
            if remaining[y] > 0 && pred[y].is_none() {
                pred[y] = Some(x);
            }
        }
    }
    let start = (0..n).find(|&x| remaining[x] > 0).expect("cycle exists");
    let mut seen = vec![false; n];
    let mut cur = start;
    while !seen[cur] {
        seen[cur] = true;
        cur = pred[cur].expect("every leftover node has a leftover predecessor");
    }
    let mut cycle = vec![cur];
    let mut walk = pred[cur].unwrap();
    while walk != cur {
        cycle.push(walk);
        walk = pred[walk].unwrap();
    }
    cycle.reverse();
    cycle
}
