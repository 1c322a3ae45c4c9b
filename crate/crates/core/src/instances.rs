//! Named finite lattices and lattices of submodules of finite `Z_n`-modules.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{Elem, FiniteLattice};
use crate::series;

/// Element cap for generated chains, diamonds and divisor lattices.
pub const MAX_GENERATED: usize = 1024;
pub const MAX_BOOLEAN_RANK: usize = 5;
pub const MAX_GROUP_ORDER: usize = 256;
/// Subgroup lattices larger than this are refused: the meet/join tables grow
/// quadratically.
pub const MAX_SUBGROUPS: usize = 4096;

fn check_size(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::SizeLimit { what, actual, limit })
    } else {
        Ok(())
    }
}

/// Builds a lattice from an order given by a predicate, with elements
/// already listed in a linear extension, and tables filled by closures.
fn tabulate(
    n: usize,
    leq: impl Fn(Elem, Elem) -> bool,
    meet: impl Fn(Elem, Elem) -> Elem,
    join: impl Fn(Elem, Elem) -> Elem,
) -> FiniteLattice {
    let mut down = vec![FixedBitSet::with_capacity(n); n];
    let mut meet_t = vec![0u32; n * n];
    let mut join_t = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            if leq(y, x) {
                down[x].insert(y);
            }
            meet_t[x * n + y] = meet(x, y) as u32;
            join_t[x * n + y] = join(x, y) as u32;
        }
    }
    FiniteLattice::from_parts(down, meet_t, join_t).expect("generated lattices are bounded")
}

/// The `k`-element chain `0 < 1 < ... < k-1`.
pub fn chain(k: usize) -> Result<FiniteLattice> {
    if k == 0 {
        return Err(Error::Empty);
    }
    check_size("chain length", k, MAX_GENERATED)?;
    Ok(tabulate(k, |x, y| x <= y, |x, y| x.min(y), |x, y| x.max(y))
        .with_labels((0..k).map(|i| i.to_string()).collect()))
}

/// Subsets of a `k`-set. Element ids are the subset bitmasks; labels list
/// the members (`a`, `b`, ...) with `0` for the empty set.
pub fn boolean(k: usize) -> Result<FiniteLattice> {
    check_size("boolean rank", k, MAX_BOOLEAN_RANK)?;
    let n = 1usize << k;
    let labels = (0..n)
        .map(|mask| {
            if mask == 0 {
                "0".to_string()
            } else {
                (0..k).filter(|i| mask & (1 << i) != 0).map(|i| (b'a' + i as u8) as char).collect()
            }
        })
        .collect();
    Ok(tabulate(n, |x, y| x & y == x, |x, y| x & y, |x, y| x | y).with_labels(labels))
}

/// `M_k`: bottom, `k` pairwise incomparable atoms, top.
pub fn diamond_m(k: usize) -> Result<FiniteLattice> {
    check_size("diamond width", k + 2, MAX_GENERATED)?;
    let n = k + 2;
    let (bottom, top) = (0, n - 1);
    let leq = move |x: Elem, y: Elem| x == y || x == bottom || y == top;
    let meet = move |x: Elem, y: Elem| {
        if leq(x, y) {
            x
        } else if leq(y, x) {
            y
        } else {
            bottom
        }
    };
    let join = move |x: Elem, y: Elem| {
        if leq(x, y) {
            y
        } else if leq(y, x) {
            x
        } else {
            top
        }
    };
    let mut labels = vec!["0".to_string()];
    labels.extend((1..=k).map(|i| format!("a{i}")));
    labels.push("1".to_string());
    Ok(tabulate(n, leq, meet, join).with_labels(labels))
}

/// N5 with ids `0, a, b, c, 1` = `0..5`: `0 < a < c < 1`, `0 < b < 1`.
pub fn pentagon() -> FiniteLattice {
    const LEQ: [[bool; 5]; 5] = [
        [true, true, true, true, true],
        [false, true, false, true, true],
        [false, false, true, false, true],
        [false, false, false, true, true],
        [false, false, false, false, true],
    ];
    let leq = |x: Elem, y: Elem| LEQ[x][y];
    let meet = |x: Elem, y: Elem| (0..5).rev().find(|&z| leq(z, x) && leq(z, y)).unwrap();
    let join = |x: Elem, y: Elem| (0..5).find(|&z| leq(x, z) && leq(y, z)).unwrap();
    tabulate(5, leq, meet, join).with_labels(["0", "a", "b", "c", "1"].map(String::from).to_vec())
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Divisors of `n` under divisibility, ascending; meet is gcd, join is lcm.
pub fn divisor_lattice(n: u64) -> Result<FiniteLattice> {
    if n == 0 {
        return Err(Error::InvalidArgument("divisor lattice needs n >= 1".into()));
    }
    let divs = divisors(n);
    check_size("number of divisors", divs.len(), MAX_GENERATED)?;
    let index = |v: u64| divs.binary_search(&v).expect("gcd/lcm of divisors divide n");
    let lattice = tabulate(
        divs.len(),
        |x, y| divs[y].is_multiple_of(divs[x]),
        |x, y| index(divs[x].gcd(&divs[y])),
        |x, y| index(divs[x].lcm(&divs[y])),
    );
    Ok(lattice.with_labels(divs.iter().map(|d| d.to_string()).collect()))
}

/// A finite module over `Z_n`, presented as `Z_{o_1} × ... × Z_{o_r}` with
/// every `o_i` dividing `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteZnModule {
    pub ring_modulus: u64,
    pub cyclic_orders: Vec<u64>,
}

impl FiniteZnModule {
    pub fn new(ring_modulus: u64, cyclic_orders: Vec<u64>) -> Result<Self> {
        if ring_modulus == 0 {
            return Err(Error::InvalidArgument("ring modulus must be positive".into()));
        }
        if let Some(&bad) = cyclic_orders.iter().find(|&&o| o == 0 || !ring_modulus.is_multiple_of(o)) {
            return Err(Error::InvalidArgument(format!(
                "cyclic order {bad} does not divide the ring modulus {ring_modulus}"
            )));
        }
        Ok(FiniteZnModule {
            ring_modulus,
            cyclic_orders,
        })
    }

    /// `Z_n` as a module over itself.
    pub fn regular(n: u64) -> Result<Self> {
        Self::new(n, vec![n])
    }

    pub fn order(&self) -> u64 {
        self.cyclic_orders.iter().product()
    }

    /// Every module `Z_{o_1} × ... × Z_{o_r}` over `Z_n` with
    /// `o_1 ≥ ... ≥ o_r > 1`, each `o_i | n`, and order at most `max_order`.
    /// The zero module is included as the empty product.
    pub fn all_over(ring_modulus: u64, max_order: u64) -> Result<Vec<FiniteZnModule>> {
        let factors: Vec<u64> = divisors(ring_modulus).into_iter().filter(|&d| d > 1).rev().collect();
        let mut out = Vec::new();
        let mut current = Vec::new();
        collect_decompositions(&factors, 0, 1, max_order, &mut current, &mut out);
        out.into_iter().map(|orders| Self::new(ring_modulus, orders)).collect()
    }
}

fn collect_decompositions(
    factors: &[u64],
    from: usize,
    order: u64,
    max_order: u64,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    out.push(current.clone());
    for (i, &f) in factors.iter().enumerate().skip(from) {
        if order * f <= max_order {
            current.push(f);
            collect_decompositions(factors, i, order * f, max_order, current, out);
            current.pop();
        }
    }
}

/// Finite abelian group `Z_{o_1} × ... × Z_{o_r}` with elements encoded in
/// mixed radix (first factor most significant).
#[derive(Debug, Clone)]
struct AbelianGroup {
    orders: Vec<u64>,
    size: usize,
    add: Vec<u16>,
}

impl AbelianGroup {
    fn new(orders: &[u64]) -> Result<Self> {
        let size = orders.iter().try_fold(1usize, |acc, &o| acc.checked_mul(o as usize)).unwrap_or(usize::MAX);
        check_size("group order", size, MAX_GROUP_ORDER)?;
        let mut group = AbelianGroup {
            orders: orders.to_vec(),
            size,
            add: Vec::new(),
        };
        let mut add = vec![0u16; size * size];
        for a in 0..size {
            let da = group.digits(a);
            for b in 0..size {
                let db = group.digits(b);
                let sum: Vec<u64> = da.iter().zip(&db).zip(&group.orders).map(|((x, y), o)| (x + y) % o).collect();
                add[a * size + b] = group.encode(&sum) as u16;
            }
        }
        group.add = add;
        Ok(group)
    }

    fn digits(&self, mut x: usize) -> Vec<u64> {
        let mut out = vec![0; self.orders.len()];
        for (i, &o) in self.orders.iter().enumerate().rev() {
            out[i] = x as u64 % o;
            x /= o as usize;
        }
        out
    }

    fn encode(&self, digits: &[u64]) -> usize {
        digits.iter().zip(&self.orders).fold(0, |acc, (&d, &o)| acc * o as usize + (d % o) as usize)
    }

    #[inline]
    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    fn scale(&self, k: u64, x: usize) -> usize {
        let d: Vec<u64> = self.digits(x).iter().zip(&self.orders).map(|(&d, &o)| (d * (k % o)) % o).collect();
        self.encode(&d)
    }

    fn label(&self, x: usize) -> String {
        let d = self.digits(x);
        if d.len() == 1 {
            d[0].to_string()
        } else {
            let parts: Vec<String> = d.iter().map(|v| v.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }

    /// `<h, g>` for a subgroup `h`: the union of cosets `h + k·g`.
    fn extend(&self, h: &FixedBitSet, g: usize) -> FixedBitSet {
        let mut out = h.clone();
        let mut shift = g;
        while !h.contains(shift) {
            for x in h.ones() {
                out.insert(self.add(x, shift));
            }
            shift = self.add(shift, g);
        }
        out
    }

    /// Subgroup generated by an arbitrary set.
    fn generated(&self, set: impl IntoIterator<Item = usize>) -> FixedBitSet {
        let mut h = FixedBitSet::with_capacity(self.size);
        h.insert(0);
        for g in set {
            if !h.contains(g) {
                h = self.extend(&h, g);
            }
        }
        h
    }
}

/// All submodules of a finite `Z_n`-module ordered by inclusion.
#[derive(Debug, Clone)]
pub struct SubmoduleLattice {
    pub module: FiniteZnModule,
    pub lattice: FiniteLattice,
    group: AbelianGroup,
    members: Vec<FixedBitSet>,
    index: HashMap<FixedBitSet, Elem>,
}

impl SubmoduleLattice {
    /// Group elements of submodule `x`, as mixed-radix indices.
    pub fn submodule_of(&self, x: Elem) -> Vec<usize> {
        self.members[x].ones().collect()
    }

    pub fn submodule_size(&self, x: Elem) -> usize {
        self.members[x].count_ones(..)
    }

    /// Submodule as tuples of residues.
    pub fn submodule_elements(&self, x: Elem) -> Vec<Vec<u64>> {
        self.members[x].ones().map(|g| self.group.digits(g)).collect()
    }

    pub fn element_label(&self, g: usize) -> String {
        self.group.label(g)
    }

    /// Lattice id of the submodule generated by the given group elements.
    pub fn generated_by(&self, elements: impl IntoIterator<Item = usize>) -> Elem {
        self.index[&self.group.generated(elements)]
    }

    pub fn is_subset(&self, x: Elem, y: Elem) -> bool {
        self.members[x].is_subset(&self.members[y])
    }

    pub fn group_order(&self) -> usize {
        self.group.size
    }
}

/// Lattice of subgroups of `Z_{o_1} × ... × Z_{o_r}`.
///
/// Subgroups are found by closing one generator at a time from the trivial
/// group, breadth first, so every subgroup is recorded with a short
/// generating list. Joins are computed by adding those generators.
pub fn subgroup_lattice_abelian(cyclic_orders: &[u64]) -> Result<SubmoduleLattice> {
    let exponent = cyclic_orders.iter().fold(1u64, |acc, &o| acc.lcm(&o.max(1)));
    if cyclic_orders.contains(&0) {
        return Err(Error::InvalidArgument("cyclic orders must be positive".into()));
    }
    let module = FiniteZnModule::new(exponent, cyclic_orders.to_vec())?;
    submodule_lattice(&module)
}

/// Lattice of `Z_n`-submodules of `module` (the same as its subgroups).
pub fn submodule_lattice(module: &FiniteZnModule) -> Result<SubmoduleLattice> {
    let group = AbelianGroup::new(&module.cyclic_orders)?;
    let size = group.size;

    let mut trivial = FixedBitSet::with_capacity(size);
    trivial.insert(0);
    let mut found = vec![trivial.clone()];
    let mut gens: Vec<Vec<usize>> = vec![Vec::new()];
    let mut index: HashMap<FixedBitSet, usize> = HashMap::from([(trivial, 0)]);
    // extend[h * size + g] = id of <h, g>
    let mut extend: Vec<u32> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(h) = queue.pop_front() {
        let mut row = vec![0u32; size];
        for g in 0..size {
            if found[h].contains(g) {
                row[g] = h as u32;
                continue;
            }
            let k = group.extend(&found[h], g);
            let id = match index.get(&k) {
                Some(&id) => id,
                None => {
                    let id = found.len();
                    check_size("number of subgroups", id + 1, MAX_SUBGROUPS)?;
                    let mut gk = gens[h].clone();
                    gk.push(g);
                    gens.push(gk);
                    index.insert(k.clone(), id);
                    found.push(k);
                    queue.push_back(id);
                    id
                }
            };
            row[g] = id as u32;
        }
        if extend.len() < found.len() * size {
            extend.resize(found.len() * size, 0);
        }
        extend[h * size..(h + 1) * size].copy_from_slice(&row);
    }

    // Relabel by (order, member list) so ids form a linear extension.
    let count = found.len();
    let keys: Vec<(usize, Vec<usize>)> = found.iter().map(|h| (h.count_ones(..), h.ones().collect())).collect();
    let mut sorted: Vec<usize> = (0..count).collect();
    sorted.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut new_id = vec![0usize; count];
    for (new, &old) in sorted.iter().enumerate() {
        new_id[old] = new;
    }

    let mut down = vec![FixedBitSet::with_capacity(count); count];
    let mut meet = vec![0u32; count * count];
    let mut join = vec![0u32; count * count];
    for a in 0..count {
        for b in a..count {
            let mut inter = found[a].clone();
            inter.intersect_with(&found[b]);
            let m = new_id[index[&inter]];
            let j = new_id[gens[b].iter().fold(a, |cur, &g| extend[cur * size + g] as usize)];
            let (na, nb) = (new_id[a], new_id[b]);
            meet[na * count + nb] = m as u32;
            meet[nb * count + na] = m as u32;
            join[na * count + nb] = j as u32;
            join[nb * count + na] = j as u32;
            if found[a].is_subset(&found[b]) {
                down[nb].insert(na);
            }
            if found[b].is_subset(&found[a]) {
                down[na].insert(nb);
            }
        }
    }

    let mut members = vec![FixedBitSet::new(); count];
    let mut labels = vec![String::new(); count];
    for old in 0..count {
        let new = new_id[old];
        labels[new] = if gens[old].is_empty() {
            "0".to_string()
        } else {
            let parts: Vec<String> = gens[old].iter().map(|&g| group.label(g)).collect();
            format!("⟨{}⟩", parts.join(","))
        };
        members[new] = found[old].clone();
    }
    let index = members.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let lattice = FiniteLattice::from_parts(down, meet, join)?.with_labels(labels);
    Ok(SubmoduleLattice {
        module: module.clone(),
        lattice,
        group,
        members,
        index,
    })
}

/// Ideals of `Z_n` ordered by inclusion, labelled `dZn` by their least
/// positive generator `d` (the zero ideal is `0`).
pub fn ideal_lattice_zn(n: u64) -> Result<SubmoduleLattice> {
    let module = FiniteZnModule::regular(n)?;
    let mut sub = submodule_lattice(&module)?;
    let labels = (0..sub.lattice.len())
        .map(|x| {
            let d = ideal_generator(&sub, x);
            if d == n {
                "0".to_string()
            } else {
                format!("{d}Z{n}")
            }
        })
        .collect();
    sub.lattice = sub.lattice.with_labels(labels);
    Ok(sub)
}

/// Least positive `d` with the ideal equal to `dZ_n` (`n` for the zero
/// ideal). Only meaningful on the regular module.
pub fn ideal_generator(ideals: &SubmoduleLattice, x: Elem) -> u64 {
    let n = ideals.module.ring_modulus;
    ideals.members[x].ones().filter(|&g| g != 0).map(|g| g as u64).min().unwrap_or(n)
}

/// Lattice element for the ideal `dZ_n` of the regular module.
pub fn ideal_for_generator(ideals: &SubmoduleLattice, d: u64) -> Elem {
    let n = ideals.module.ring_modulus;
    ideals.generated_by([(d % n) as usize])
}

/// Jacobson radical of `Z_n` by definition: the intersection of the
/// maximal ideals. Returned as its least positive generator.
pub fn jacobson_radical_zn(n: u64) -> Result<u64> {
    let ideals = ideal_lattice_zn(n)?;
    Ok(ideal_generator(&ideals, series::radical(&ideals.lattice)))
}

/// Product of the distinct primes dividing `n`.
pub fn squarefree_kernel(n: u64) -> u64 {
    distinct_prime_factors(n).iter().product()
}

/// Outcome of checking `J·N ⊆ r(N) ⊆ N` for a module `N` over `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleRadicalReport {
    pub ring_modulus: u64,
    pub cyclic_orders: Vec<u64>,
    /// `J(Z_n) = jacobson_generator · Z_n`.
    pub jacobson_generator: u64,
    pub jacobson_formula_agrees: bool,
    /// Lattice ids in the submodule lattice.
    pub jn: Elem,
    pub rn: Elem,
    pub jn_size: usize,
    pub rn_size: usize,
    pub module_size: usize,
    pub holds: bool,
}

pub fn verify_module_radical_bound(module: &FiniteZnModule) -> Result<ModuleRadicalReport> {
    let lattice = submodule_lattice(module)?;
    verify_module_radical_bound_in(&lattice)
}

/// Same as [`verify_module_radical_bound`] on a prebuilt submodule lattice.
pub fn verify_module_radical_bound_in(sub: &SubmoduleLattice) -> Result<ModuleRadicalReport> {
    let n = sub.module.ring_modulus;
    let ideals = ideal_lattice_zn(n)?;
    let j = series::radical(&ideals.lattice);
    let jacobson_generator = ideal_generator(&ideals, j);
    let jacobson: Vec<u64> = ideals.members[j].ones().map(|g| g as u64).collect();

    let module_elems = sub.lattice.top();
    let products = jacobson
        .iter()
        .flat_map(|&r| sub.members[module_elems].ones().map(move |m| (r, m)))
        .map(|(r, m)| sub.group.scale(r, m));
    let jn = sub.generated_by(products);
    let rn = series::radical(&sub.lattice);

    let jn_in_rn = sub.is_subset(jn, rn);
    let rn_in_n = sub.is_subset(rn, module_elems);
    let formula = squarefree_kernel(n);
    let jacobson_formula_agrees = jacobson_generator == formula;
    Ok(ModuleRadicalReport {
        ring_modulus: n,
        cyclic_orders: sub.module.cyclic_orders.clone(),
        jacobson_generator,
        jacobson_formula_agrees,
        jn,
        rn,
        jn_size: sub.submodule_size(jn),
        rn_size: sub.submodule_size(rn),
        module_size: sub.submodule_size(module_elems),
        holds: jn_in_rn && rn_in_n && jacobson_formula_agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isomorphism::is_isomorphic;
    use crate::properties::{is_distributive, is_modular};

    #[test]
    fn named_sizes() {
        assert_eq!(chain(2).unwrap().len(), 2);
        let b3 = boolean(3).unwrap();
        assert_eq!(b3.len(), 8);
        assert_eq!(b3.atoms().len(), 3);
        assert_eq!(b3.longest_chain_length(), 3);
        let m3 = diamond_m(3).unwrap();
        assert!(is_modular(&m3) && !is_distributive(&m3));
        assert!(!is_modular(&pentagon()));
    }

    #[test]
    fn size_limits() {
        assert!(matches!(boolean(6), Err(Error::SizeLimit { .. })));
        assert!(matches!(chain(MAX_GENERATED + 1), Err(Error::SizeLimit { .. })));
        assert!(matches!(subgroup_lattice_abelian(&[2; 9]), Err(Error::SizeLimit { .. })));
        // (Z_2)^8 has order 256 but far too many subgroups
        assert!(matches!(
            subgroup_lattice_abelian(&[2; 8]),
            Err(Error::SizeLimit {
                what: "number of subgroups",
                ..
            })
        ));
    }

    #[test]
    fn divisors_of_twelve() {
        let d = divisor_lattice(12).unwrap();
        assert_eq!(d.len(), 6);
        let labels: Vec<_> = d.coatoms().into_iter().map(|x| d.label(x).into_owned()).collect();
        assert_eq!(labels, ["4", "6"]);
        let labels: Vec<_> = d.atoms().into_iter().map(|x| d.label(x).into_owned()).collect();
        assert_eq!(labels, ["2", "3"]);
        assert_eq!(d.label(series::radical(&d)), "2");
        let iv = d.interval(d.find_label("2").unwrap(), d.top()).unwrap();
        assert!(is_isomorphic(&iv.lattice, &boolean(2).unwrap()));
    }

    #[test]
    fn divisor_lattice_edge_cases() {
        assert_eq!(divisor_lattice(1).unwrap().len(), 1);
        for (p, k) in [(2u64, 5u32), (3, 3), (7, 2)] {
            let d = divisor_lattice(p.pow(k)).unwrap();
            assert!(is_isomorphic(&d, &chain(k as usize + 1).unwrap()));
        }
        assert!(divisor_lattice(0).is_err());
    }

    #[test]
    fn cyclic_subgroup_lattices_are_chains() {
        assert!(is_isomorphic(&subgroup_lattice_abelian(&[4]).unwrap().lattice, &chain(3).unwrap()));
        assert!(is_isomorphic(&subgroup_lattice_abelian(&[8]).unwrap().lattice, &chain(4).unwrap()));
        let klein = subgroup_lattice_abelian(&[2, 2]).unwrap();
        assert!(is_isomorphic(&klein.lattice, &diamond_m(3).unwrap()));
    }

    #[test]
    fn subgroup_counts_match_closure_free_count() {
        // Independent count: every subgroup of a group this small is
        // generated by at most two elements, so enumerate <g, h> directly.
        for orders in [&[2u64, 2, 2][..], &[4, 2], &[3, 3], &[6], &[2, 4, 2]] {
            let sub = subgroup_lattice_abelian(orders).unwrap();
            let g = &sub.group;
            let mut distinct = std::collections::BTreeSet::new();
            for a in 0..g.size {
                for b in 0..g.size {
                    for c in 0..g.size {
                        let s = g.generated([a, b, c]);
                        distinct.insert(s.ones().collect::<Vec<_>>());
                    }
                }
            }
            assert_eq!(sub.lattice.len(), distinct.len(), "{orders:?}");
        }
    }

    #[test]
    fn submodule_tables_are_intersection_and_sum() {
        let sub = subgroup_lattice_abelian(&[4, 2]).unwrap();
        let l = &sub.lattice;
        for x in l.elements() {
            for y in l.elements() {
                let inter: Vec<usize> = sub.submodule_of(x).into_iter().filter(|g| sub.members[y].contains(*g)).collect();
                assert_eq!(sub.submodule_of(l.meet(x, y)), inter);
                let sums = sub
                    .submodule_of(x)
                    .into_iter()
                    .flat_map(|a| sub.submodule_of(y).into_iter().map(move |b| (a, b)))
                    .map(|(a, b)| sub.group.add(a, b));
                let mut sum: Vec<usize> = sums.collect();
                sum.sort_unstable();
                sum.dedup();
                assert_eq!(sub.submodule_of(l.join(x, y)), sum);
                assert_eq!(l.leq(x, y), sub.is_subset(x, y));
            }
        }
    }

    #[test]
    fn ideals_of_z12() {
        let ideals = ideal_lattice_zn(12).unwrap();
        let l = &ideals.lattice;
        let r = series::radical(l);
        assert_eq!(l.label(r), "6Z12");
        let coatoms: Vec<_> = l.coatoms().into_iter().map(|x| l.label(x).into_owned()).collect();
        // ids ascend by subgroup order: |3Z12| = 4 < |2Z12| = 6
        assert_eq!(coatoms, ["3Z12", "2Z12"]);
        assert!(is_isomorphic(l, &divisor_lattice(12).unwrap().dual()));
    }

    #[test]
    fn ideals_of_prime_and_trivial_rings() {
        let f = ideal_lattice_zn(7).unwrap();
        assert_eq!(f.lattice.len(), 2);
        assert_eq!(series::radical(&f.lattice), f.lattice.bottom());
        assert_eq!(ideal_lattice_zn(1).unwrap().lattice.len(), 1);
    }

    #[test]
    fn jacobson_matches_squarefree_kernel() {
        for n in 1..=60 {
            let j = jacobson_radical_zn(n).unwrap();
            assert_eq!(j, squarefree_kernel(n), "n = {n}");
        }
    }

    #[test]
    fn module_radical_examples() {
        let z4 = FiniteZnModule::regular(4).unwrap();
        let r = verify_module_radical_bound(&z4).unwrap();
        assert_eq!(r.jacobson_generator, 2);
        assert_eq!((r.jn_size, r.rn_size), (2, 2));
        assert!(r.holds);

        let z6 = FiniteZnModule::regular(6).unwrap();
        let r = verify_module_radical_bound(&z6).unwrap();
        assert_eq!(r.jacobson_generator, 6);
        assert_eq!((r.jn_size, r.rn_size), (1, 1));
        assert!(r.holds);

        let z2_over_z4 = FiniteZnModule::new(4, vec![2]).unwrap();
        let r = verify_module_radical_bound(&z2_over_z4).unwrap();
        assert_eq!((r.jn_size, r.rn_size), (1, 1));
        assert!(r.holds);
    }

    #[test]
    fn module_orders_must_divide_modulus() {
        assert!(FiniteZnModule::new(4, vec![3]).is_err());
        assert!(FiniteZnModule::new(0, vec![]).is_err());
    }
}
