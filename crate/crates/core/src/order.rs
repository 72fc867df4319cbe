//! Finite posets given by cover relations, the Tamari lattice on trees, the
//! weak Bruhat order on permutations and the Tonks projection between them.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

use crate::error::{invalid, Error, Result};
use crate::report::{first_failure, Outcome, Report};
use crate::trees::{self, wedge, Tree};

/// Default bound on leaves for Tamari posets.
pub const DEFAULT_MAX_TAMARI_LEAVES: usize = 10;
/// Default bound on the size of permutations for weak Bruhat posets.
pub const DEFAULT_MAX_PERM_SIZE: usize = 7;

/// A fixed-size set of indices.
#[derive(Clone, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite poset described by its cover relation, with the reachability
/// closure computed once at construction.
pub struct Poset<T> {
    elements: Vec<T>,
    index: HashMap<T, usize>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    rank_in_topo: Vec<usize>,
    mobius: Vec<OnceLock<Vec<(usize, i64)>>>,
}

impl<T: Clone + Eq + Hash + fmt::Debug> Poset<T> {
    /// Build from elements and a function giving the upper covers of each.
    pub fn from_covers(elements: Vec<T>, covers: impl Fn(&T) -> Vec<T>) -> Result<Self> {
        let n = elements.len();
        let mut index = HashMap::with_capacity(n);
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return invalid(format!("duplicate poset element {e:?}"));
            }
        }
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for (i, e) in elements.iter().enumerate() {
            for c in covers(e) {
                let Some(&j) = index.get(&c) else {
                    return invalid(format!("cover {c:?} of {e:?} is not an element"));
                };
                if !upper[i].contains(&j) {
                    upper[i].push(j);
                    lower[j].push(i);
                }
            }
        }
        // Kahn's algorithm gives a linear extension and rejects cycles.
        let mut indeg: Vec<usize> = lower.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(i) = queue.pop_front() {
            topo.push(i);
            for &j in &upper[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    queue.push_back(j);
                }
            }
        }
        if topo.len() != n {
            return invalid("cover relation contains a cycle");
        }
        let mut up = vec![BitSet::new(n); n];
        for &i in topo.iter().rev() {
            let mut s = BitSet::new(n);
            s.insert(i);
            for &j in &upper[i] {
                s.union_with(&up[j]);
            }
            up[i] = s;
        }
        let mut down = vec![BitSet::new(n); n];
        for (i, u) in up.iter().enumerate() {
            for j in u.iter() {
                down[j].insert(i);
            }
        }
        let mut rank_in_topo = vec![0; n];
        for (k, &i) in topo.iter().enumerate() {
            rank_in_topo[i] = k;
        }
        Ok(Poset {
            elements,
            index,
            upper,
            lower,
            up,
            down,
            rank_in_topo,
            mobius: (0..n).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &T) -> Option<usize> {
        self.index.get(e).copied()
    }

    fn idx(&self, e: &T) -> Result<usize> {
        self.index_of(e)
            .ok_or_else(|| Error::InvalidArgument(format!("{e:?} is not an element of the poset")))
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn up_set(&self, i: usize) -> &BitSet {
        &self.up[i]
    }

    pub fn down_set(&self, i: usize) -> &BitSet {
        &self.down[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn leq_elems(&self, x: &T, y: &T) -> Result<bool> {
        Ok(self.leq(self.idx(x)?, self.idx(y)?))
    }

    /// The elements `z` with `i ≤ z ≤ j`.
    pub fn interval(&self, i: usize, j: usize) -> Vec<usize> {
        self.up[i].intersection(&self.down[j]).iter().collect()
    }

    /// Greatest lower bound, if it exists.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        extremum(&self.down[i].intersection(&self.down[j]), &self.down)
    }

    /// Least upper bound, if it exists.
    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        extremum(&self.up[i].intersection(&self.up[j]), &self.up)
    }

    pub fn meet_elems(&self, x: &T, y: &T) -> Result<Option<T>> {
        Ok(self.meet(self.idx(x)?, self.idx(y)?).map(|k| self.elements[k].clone()))
    }

    pub fn join_elems(&self, x: &T, y: &T) -> Result<Option<T>> {
        Ok(self.join(self.idx(x)?, self.idx(y)?).map(|k| self.elements[k].clone()))
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.up[i].count() == self.len())
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.down[i].count() == self.len())
    }

    /// The nonzero values `μ(x, top)` for `x ≤ top`, computed on first use.
    pub fn mobius_to(&self, top: usize) -> &[(usize, i64)] {
        self.mobius[top].get_or_init(|| {
            let mut below: Vec<usize> = self.down[top].iter().collect();
            below.sort_by_key(|&x| std::cmp::Reverse(self.rank_in_topo[x]));
            let mut mu: HashMap<usize, i64> = HashMap::new();
            let mut out = Vec::new();
            for x in below {
                let v = if x == top {
                    1
                } else {
                    let s: i64 = self.up[x]
                        .intersection(&self.down[top])
                        .iter()
                        .filter(|&z| z != x)
                        .filter_map(|z| mu.get(&z))
                        .sum();
                    -s
                };
                if v != 0 {
                    mu.insert(x, v);
                    out.push((x, v));
                }
            }
            out.sort_unstable();
            out
        })
    }

    pub fn mobius(&self, x: usize, y: usize) -> i64 {
        if !self.leq(x, y) {
            return 0;
        }
        let row = self.mobius_to(y);
        row.binary_search_by_key(&x, |&(i, _)| i).map_or(0, |k| row[k].1)
    }

    pub fn mobius_elems(&self, x: &T, y: &T) -> Result<i64> {
        Ok(self.mobius(self.idx(x)?, self.idx(y)?))
    }

    /// Whether every pair has a meet and a join.
    pub fn is_lattice(&self) -> bool {
        (0..self.len()).all(|i| (i..self.len()).all(|j| self.meet(i, j).is_some() && self.join(i, j).is_some()))
    }

    /// Hasse diagram in Graphviz format, labelling vertices with `label`.
    pub fn to_dot(&self, label: impl Fn(&T) -> String) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=BT;\n");
        for (i, e) in self.elements.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{}\"];\n", label(e)));
        }
        for (i, ups) in self.upper.iter().enumerate() {
            for j in ups {
                s.push_str(&format!("  n{i} -> n{j};\n"));
            }
        }
        s.push_str("}\n");
        s
    }

    /// Hasse diagram as JSON: element labels and cover pairs by index.
    pub fn to_json(&self, label: impl Fn(&T) -> serde_json::Value) -> serde_json::Value {
        let covers: Vec<[usize; 2]> = self
            .upper
            .iter()
            .enumerate()
            .flat_map(|(i, ups)| ups.iter().map(move |&j| [i, j]))
            .collect();
        serde_json::json!({
            "elements": self.elements.iter().map(label).collect::<Vec<_>>(),
            "covers": covers,
        })
    }
}

/// The element of `candidates` whose `sets` entry contains all candidates.
fn extremum(candidates: &BitSet, sets: &[BitSet]) -> Option<usize> {
    let best = candidates.iter().max_by_key(|&z| sets[z].count())?;
    candidates.is_subset(&sets[best]).then_some(best)
}

/// Trees covering `t` in the Tamari order: one right rotation
/// `(a ⋎ b) ⋎ c → a ⋎ (b ⋎ c)` at any vertex.
pub fn tamari_covers(t: &Tree) -> Vec<Tree> {
    let mut out = Vec::new();
    if let Tree::Node(l, r) = t {
        if let Tree::Node(a, b) = &**l {
            out.push(wedge((**a).clone(), wedge((**b).clone(), (**r).clone())));
        }
        for l2 in tamari_covers(l) {
            out.push(wedge(l2, (**r).clone()));
        }
        for r2 in tamari_covers(r) {
            out.push(wedge((**l).clone(), r2));
        }
    }
    out
}

pub fn tamari_poset_with_bound(n: usize, bound: usize) -> Result<Poset<Tree>> {
    if n > bound {
        return Err(Error::ResourceLimit {
            what: "tamari leaves",
            value: n,
            limit: bound,
        });
    }
    Poset::from_covers(trees::enumerate(n)?, tamari_covers)
}

/// The Tamari lattice on trees with `n` leaves.
pub fn tamari_poset(n: usize) -> Result<Poset<Tree>> {
    tamari_poset_with_bound(n, DEFAULT_MAX_TAMARI_LEAVES)
}

/// A shared, lazily built Tamari lattice for `n` leaves.
pub fn tamari(n: usize) -> Result<Arc<Poset<Tree>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Poset<Tree>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("tamari cache poisoned").get(&n) {
        return Ok(p.clone());
    }
    let p = Arc::new(tamari_poset(n)?);
    let mut guard = cache.lock().expect("tamari cache poisoned");
    Ok(guard.entry(n).or_insert(p).clone())
}

fn same_size(t: &Tree, w: &Tree) -> Result<usize> {
    let n = t.leaves();
    if n != w.leaves() {
        return invalid(format!("trees of different sizes: {n} and {}", w.leaves()));
    }
    Ok(n)
}

pub fn tamari_leq(t: &Tree, w: &Tree) -> Result<bool> {
    tamari(same_size(t, w)?)?.leq_elems(t, w)
}

pub fn tamari_meet(t: &Tree, w: &Tree) -> Result<Tree> {
    let p = tamari(same_size(t, w)?)?;
    Ok(p.meet_elems(t, w)?.expect("Tamari order is a lattice"))
}

pub fn tamari_join(t: &Tree, w: &Tree) -> Result<Tree> {
    let p = tamari(same_size(t, w)?)?;
    Ok(p.join_elems(t, w)?.expect("Tamari order is a lattice"))
}

/// The Möbius function `μ(t, w)` of the Tamari lattice.
pub fn tamari_mobius(t: &Tree, w: &Tree) -> Result<i64> {
    tamari(same_size(t, w)?)?.mobius_elems(t, w)
}

/// A permutation in one-line notation with values `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(values: Vec<usize>) -> Result<Perm> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return invalid(format!("{values:?} is not a permutation of 1..={n}"));
            }
            seen[v] = true;
        }
        Ok(Perm(values))
    }

    pub fn identity(n: usize) -> Perm {
        Perm((1..=n).collect())
    }

    pub fn reverse(n: usize) -> Perm {
        Perm((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Perm(inv)
    }

    /// The restriction `σ^S`: standardisation of `σ` read at the positions in `S`.
    pub fn restrict(&self, positions: &[usize]) -> Result<Perm> {
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return invalid("restriction positions must be strictly increasing");
        }
        if positions.iter().any(|&p| p == 0 || p > self.len()) {
            return invalid("restriction position out of range");
        }
        standardize(&positions.iter().map(|&p| self.at(p)).collect::<Vec<_>>())
    }

    /// Upper covers in the weak Bruhat order: `τ_i σ`, swapping the values
    /// `i` and `i + 1`, whenever `i` appears before `i + 1`.
    pub fn weak_covers(&self) -> Vec<Perm> {
        let inv = self.inverse();
        (1..self.len())
            .filter(|&i| inv.at(i) < inv.at(i + 1))
            .map(|i| {
                Perm(
                    self.0
                        .iter()
                        .map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
                        .collect(),
                )
            })
            .collect()
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Replace distinct values by their ranks, e.g. `(5,3,10)` becomes `(2,1,3)`.
pub fn standardize(values: &[usize]) -> Result<Perm> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return invalid(format!("cannot standardize {values:?}: repeated values"));
    }
    Ok(Perm(
        values
            .iter()
            .map(|v| sorted.binary_search(v).expect("value is present") + 1)
            .collect(),
    ))
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Perm> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![Perm(cur.clone())];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(Perm(cur.clone()));
    }
}

pub fn weak_bruhat_poset_with_bound(n: usize, bound: usize) -> Result<Poset<Perm>> {
    if n == 0 {
        return invalid("permutations need at least one letter");
    }
    if n > bound {
        return Err(Error::ResourceLimit {
            what: "permutation size",
            value: n,
            limit: bound,
        });
    }
    Poset::from_covers(permutations(n), Perm::weak_covers)
}

/// The weak Bruhat order on permutations of `1..=n`.
pub fn weak_bruhat_poset(n: usize) -> Result<Poset<Perm>> {
    weak_bruhat_poset_with_bound(n, DEFAULT_MAX_PERM_SIZE)
}

/// The Tonks projection from permutations of `n` letters onto trees with
/// `n + 1` leaves: split at the position of the maximum and recurse.
pub fn tonks(sigma: &Perm) -> Result<Tree> {
    if sigma.is_empty() {
        return invalid("the Tonks map is defined on nonempty permutations");
    }
    Ok(tonks_word(sigma.values()))
}

fn tonks_word(values: &[usize]) -> Tree {
    let Some(k) = values.iter().enumerate().max_by_key(|(_, &v)| v).map(|(k, _)| k) else {
        return Tree::Leaf;
    };
    wedge(tonks_word(&values[..k]), tonks_word(&values[k + 1..]))
}

/// Meet/join commutativity, associativity, absorption and consistency with `≤`.
pub fn lattice_triple_holds<T: Clone + Eq + Hash + fmt::Debug>(p: &Poset<T>, a: usize, b: usize, c: usize) -> bool {
    let (Some(ab), Some(ba), Some(jab), Some(jba)) = (p.meet(a, b), p.meet(b, a), p.join(a, b), p.join(b, a)) else {
        return false;
    };
    let m = |x, y| p.meet(x, y);
    let j = |x, y| p.join(x, y);
    ab == ba
        && jab == jba
        && m(ab, c).is_some()
        && m(ab, c) == m(b, c).and_then(|bc| m(a, bc))
        && j(jab, c) == j(b, c).and_then(|bc| j(a, bc))
        && m(a, jab) == Some(a)
        && j(a, ab) == Some(a)
        && p.leq(a, b) == (ab == a)
        && p.leq(a, b) == (jab == b)
}

fn lattice_outcome<T: Clone + Eq + Hash + fmt::Debug>(p: &Poset<T>, triples: impl IntoIterator<Item = (usize, usize, usize)>) -> Outcome {
    first_failure(triples, |(a, b, c)| {
        if lattice_triple_holds(p, a, b, c) {
            Ok(())
        } else {
            Err(json!([format!("{:?}", p.element(a)), format!("{:?}", p.element(b)), format!("{:?}", p.element(c))]))
        }
    })
}

fn all_triples(len: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..len).flat_map(move |a| (0..len).flat_map(move |b| (0..len).map(move |c| (a, b, c))))
}

fn random_triples(len: usize, count: usize, seed: u64) -> Vec<(usize, usize, usize)> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count).map(|_| (rng.gen_range(0..len), rng.gen_range(0..len), rng.gen_range(0..len))).collect()
}

/// Whether Γ maps `Σ_n` onto the trees with `n + 1` leaves, preserves covers,
/// and has weak-order intervals as fibers.
pub fn tonks_fibers_are_intervals(n: usize) -> Result<bool> {
    let sb = weak_bruhat_poset(n)?;
    let tp = tamari(n + 1)?;
    let mut image = Vec::with_capacity(sb.len());
    for s in sb.elements() {
        image.push(tp.index_of(&tonks(s)?).expect("Γ lands in the trees with n + 1 leaves"));
    }
    let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); tp.len()];
    for (i, &k) in image.iter().enumerate() {
        fibers[k].push(i);
    }
    if fibers.iter().any(Vec::is_empty) {
        return Ok(false);
    }
    if !(0..sb.len()).all(|i| sb.upper_covers(i).iter().all(|&j| tp.leq(image[i], image[j]))) {
        return Ok(false);
    }
    Ok(fibers.iter_mut().all(|f| {
        let lo = f.iter().copied().find(|&a| f.iter().all(|&b| sb.leq(a, b)));
        let hi = f.iter().copied().find(|&a| f.iter().all(|&b| sb.leq(b, a)));
        let (Some(lo), Some(hi)) = (lo, hi) else { return false };
        let mut iv = sb.interval(lo, hi);
        iv.sort_unstable();
        f.sort_unstable();
        iv == *f
    }))
}

/// The trees `| ⋎ x` and `| ⋌ x` with `n` leaves.
pub fn right_comb_support(n: usize) -> Result<Vec<Tree>> {
    let leaf = Tree::Leaf;
    Ok(trees::enumerate(n - 1)?.iter().flat_map(|x| [leaf.wedge(x), trees::under(&leaf, x)]).collect())
}

/// `μ(q, 1_n) = 0` off `right_comb_support(n)`, which is closed under meets.
pub fn moebius_vanishes_off_support(n: usize) -> Result<bool> {
    if n < 2 {
        return invalid("the support family needs at least two leaves");
    }
    let p = tamari(n)?;
    let top = p.index_of(&trees::comb_right(n)?).expect("1_n is in the lattice");
    let fam = right_comb_support(n)?;
    let idx: Vec<usize> = fam.iter().map(|t| p.index_of(t).expect("same size")).collect();
    let vanishes = (0..p.len()).all(|k| idx.contains(&k) || p.mobius(k, top) == 0);
    let closed = idx.iter().all(|&a| idx.iter().all(|&b| p.meet(a, b).is_some_and(|m| idx.contains(&m))));
    Ok(vanishes && closed)
}

/// Lattice axioms, the Tonks projection and the support of `μ(−, 1_n)`.
pub fn order_laws(max_n: usize) -> Report {
    Report::run("order-laws", json!({ "max_n": max_n }), |r| {
        let max_n = max_n.min(DEFAULT_MAX_PERM_SIZE);
        for n in 1..=max_n {
            let outcome = tamari(n).map_err(|e| json!(e.to_string())).and_then(|p| {
                if n <= 5 { lattice_outcome(&p, all_triples(p.len())) } else { lattice_outcome(&p, random_triples(p.len(), 1000, n as u64)) }
            });
            let how = if n <= 5 { "all triples" } else { "1000 random triples" };
            r.add_detailed(format!("Tamari({n}) is a lattice"), outcome, Some(how.into()));
        }
        for n in 1..=max_n {
            let outcome = weak_bruhat_poset(n).map_err(|e| json!(e.to_string())).and_then(|p| {
                if n <= 4 { lattice_outcome(&p, all_triples(p.len())) } else { lattice_outcome(&p, random_triples(p.len(), 1000, 100 + n as u64)) }
            });
            let how = if n <= 4 { "all triples" } else { "1000 random triples" };
            r.add_detailed(format!("weak Bruhat({n}) is a lattice"), outcome, Some(how.into()));
        }
        r.add(
            "Tonks fibers are weak-order intervals",
            first_failure(1..=max_n.min(6), |n| match tonks_fibers_are_intervals(n) {
                Ok(true) => Ok(()),
                Ok(false) => Err(json!({ "n": n })),
                Err(e) => Err(json!(e.to_string())),
            }),
        );
        r.add(
            "μ(q, 1_n) vanishes off the meet-closed family | ⋎ x, | ⋌ x",
            first_failure(3..=max_n.min(6), |n| match moebius_vanishes_off_support(n) {
                Ok(true) => Ok(()),
                Ok(false) => Err(json!({ "n": n })),
                Err(e) => Err(json!(e.to_string())),
            }),
        );
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{comb_left, comb_right, enumerate};

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    #[test]
    fn tamari_covers_of_small_combs() {
        assert_eq!(tamari_covers(&comb_left(3).unwrap()), vec![comb_right(3).unwrap()]);
        assert!(tamari_covers(&comb_right(5).unwrap()).is_empty());
        let p = tamari_poset(4).unwrap();
        assert_eq!(p.minimum().map(|i| p.element(i).clone()), Some(comb_left(4).unwrap()));
        assert_eq!(p.maximum().map(|i| p.element(i).clone()), Some(comb_right(4).unwrap()));
    }

    #[test]
    fn bounds_and_sizes() {
        assert!(matches!(tamari_poset(11), Err(Error::ResourceLimit { .. })));
        assert!(matches!(tamari_leq(&t("(||)"), &t("|")), Err(Error::InvalidArgument(_))));
        assert!(matches!(weak_bruhat_poset(9), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn closure_matches_breadth_first_search() {
        let p = tamari_poset(5).unwrap();
        for i in 0..p.len() {
            let mut seen = vec![false; p.len()];
            let mut stack = vec![i];
            while let Some(x) = stack.pop() {
                if !seen[x] {
                    seen[x] = true;
                    stack.extend(p.upper_covers(x));
                }
            }
            for (j, &s) in seen.iter().enumerate() {
                assert_eq!(p.leq(i, j), s);
            }
        }
    }

    #[test]
    fn mobius_values() {
        assert_eq!(tamari_mobius(&comb_left(3).unwrap(), &comb_right(3).unwrap()).unwrap(), -1);
        let p = tamari_poset(5).unwrap();
        for x in 0..p.len() {
            for y in 0..p.len() {
                let right: i64 = p.interval(x, y).iter().map(|&z| p.mobius(z, y)).sum();
                let left: i64 = p.interval(x, y).iter().map(|&z| p.mobius(x, z)).sum();
                let delta = i64::from(x == y && p.leq(x, y));
                if p.leq(x, y) {
                    assert_eq!(right, delta);
                    assert_eq!(left, delta);
                } else {
                    assert_eq!(p.mobius(x, y), 0);
                }
            }
        }
    }

    #[test]
    fn mobius_of_a_boolean_lattice() {
        // subsets of {0,1,2} by inclusion: μ(A, B) = (-1)^{|B \ A|}
        let p = Poset::from_covers((0u8..8).collect(), |&s| {
            (0..3).filter(|b| s & (1 << b) == 0).map(|b| s | (1 << b)).collect()
        })
        .unwrap();
        for a in 0..8usize {
            for b in 0..8usize {
                let expected = if a & !b == 0 {
                    if (b & !a).count_ones() % 2 == 0 { 1 } else { -1 }
                } else {
                    0
                };
                assert_eq!(p.mobius_elems(&(a as u8), &(b as u8)).unwrap(), expected);
            }
        }
    }

    #[test]
    fn poset_rejects_cycles_and_strangers() {
        assert!(Poset::from_covers(vec![1, 2], |&x| vec![3 - x]).is_err());
        assert!(Poset::from_covers(vec![1], |_| vec![5]).is_err());
        let antichain = Poset::from_covers(vec![1, 2], |_| Vec::new()).unwrap();
        assert_eq!(antichain.meet(0, 1), None);
        assert!(!antichain.is_lattice());
    }

    fn check_lattice_triple<T: Clone + Eq + Hash + fmt::Debug>(p: &Poset<T>, a: usize, b: usize, c: usize) {
        let m = |x, y| p.meet(x, y).unwrap();
        let j = |x, y| p.join(x, y).unwrap();
        assert_eq!(m(a, b), m(b, a));
        assert_eq!(j(a, b), j(b, a));
        assert_eq!(m(m(a, b), c), m(a, m(b, c)));
        assert_eq!(j(j(a, b), c), j(a, j(b, c)));
        assert_eq!(m(a, j(a, b)), a);
        assert_eq!(j(a, m(a, b)), a);
        assert_eq!(p.leq(a, b), m(a, b) == a);
        assert_eq!(p.leq(a, b), j(a, b) == b);
    }

    #[test]
    fn tamari_lattice_axioms_exhaustive() {
        for n in 1..=5 {
            let p = tamari_poset(n).unwrap();
            for a in 0..p.len() {
                for b in 0..p.len() {
                    for c in 0..p.len() {
                        check_lattice_triple(&p, a, b, c);
                    }
                }
            }
        }
    }

    #[test]
    fn tamari_lattice_axioms_sampled() {
        let mut rng = StdRng::seed_from_u64(11);
        for n in 6..=7 {
            let p = tamari_poset(n).unwrap();
            for _ in 0..1000 {
                let (a, b, c) = (rng.gen_range(0..p.len()), rng.gen_range(0..p.len()), rng.gen_range(0..p.len()));
                check_lattice_triple(&p, a, b, c);
            }
        }
    }

    #[test]
    fn wedge_with_leaf_preserves_meets() {
        let leaf = Tree::Leaf;
        for n in 1..=5 {
            let xs = enumerate(n).unwrap();
            for x in &xs {
                for y in &xs {
                    let lhs = tamari_meet(&leaf.wedge(x), &leaf.wedge(y)).unwrap();
                    assert_eq!(lhs, leaf.wedge(&tamari_meet(x, y).unwrap()));
                }
            }
        }
    }

    #[test]
    fn weak_order_examples() {
        let covers = Perm::identity(3).weak_covers();
        let expected = vec![Perm::new(vec![2, 1, 3]).unwrap(), Perm::new(vec![1, 3, 2]).unwrap()];
        let mut covers_sorted = covers.clone();
        covers_sorted.sort();
        let mut expected_sorted = expected;
        expected_sorted.sort();
        assert_eq!(covers_sorted, expected_sorted);
        assert_eq!(standardize(&[5, 3, 10, 7, 4, 12]).unwrap().values(), &[3, 1, 5, 4, 2, 6]);
        assert!(standardize(&[1, 1]).is_err());
        assert!(Perm::new(vec![1, 3]).is_err());
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn lower_covers_count_inverse_descents() {
        let p = weak_bruhat_poset(4).unwrap();
        for (i, s) in p.elements().iter().enumerate() {
            let inv = s.inverse();
            let descents = (1..s.len()).filter(|&k| inv.at(k) > inv.at(k + 1)).count();
            assert_eq!(p.lower_covers(i).len(), descents);
        }
        let top = p.index_of(&Perm::reverse(4)).unwrap();
        assert_eq!(p.lower_covers(top).len(), 3);
        assert_eq!(p.maximum(), Some(top));
    }

    #[test]
    fn weak_order_is_a_lattice() {
        for n in 1..=4 {
            assert!(weak_bruhat_poset(n).unwrap().is_lattice());
        }
        let mut rng = StdRng::seed_from_u64(5);
        for n in 6..=7 {
            let p = weak_bruhat_poset(n).unwrap();
            for _ in 0..1000 {
                let (a, b, c) = (rng.gen_range(0..p.len()), rng.gen_range(0..p.len()), rng.gen_range(0..p.len()));
                check_lattice_triple(&p, a, b, c);
            }
        }
    }

    #[test]
    fn restriction_is_monotone() {
        for n in 2..=5 {
            let p = weak_bruhat_poset(n).unwrap();
            let subsets: Vec<Vec<usize>> = (1u32..(1 << n))
                .map(|m| (1..=n).filter(|&i| m >> (i - 1) & 1 == 1).collect())
                .collect();
            for i in 0..p.len() {
                for j in p.up_set(i).iter() {
                    for s in &subsets {
                        let a = p.element(i).restrict(s).unwrap();
                        let b = p.element(j).restrict(s).unwrap();
                        let q = weak_bruhat_poset(s.len()).unwrap();
                        assert!(q.leq_elems(&a, &b).unwrap(), "{a} ≤ {b} fails");
                    }
                }
            }
        }
    }

    #[test]
    fn tonks_examples() {
        assert_eq!(tonks(&Perm::identity(1)).unwrap(), t("(||)"));
        for n in 1..=6 {
            assert_eq!(tonks(&Perm::identity(n)).unwrap(), comb_left(n + 1).unwrap());
            assert_eq!(tonks(&Perm::reverse(n)).unwrap(), comb_right(n + 1).unwrap());
        }
        assert_eq!(tonks(&Perm::new(vec![1, 3, 2]).unwrap()).unwrap(), t("((||)(||))"));
        assert!(tonks(&Perm::new(vec![]).unwrap()).is_err());
    }

    #[test]
    fn tonks_is_surjective_monotone_with_interval_fibers() {
        for n in 1..=5 {
            let sb = weak_bruhat_poset(n).unwrap();
            let tp = tamari_poset(n + 1).unwrap();
            let image: Vec<usize> = sb
                .elements()
                .iter()
                .map(|s| tp.index_of(&tonks(s).unwrap()).unwrap())
                .collect();
            let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); tp.len()];
            for (i, &k) in image.iter().enumerate() {
                fibers[k].push(i);
            }
            assert!(fibers.iter().all(|f| !f.is_empty()), "not surjective for n = {n}");
            for i in 0..sb.len() {
                for &j in sb.upper_covers(i) {
                    assert!(tp.leq(image[i], image[j]));
                }
            }
            for f in &fibers {
                let lo = f.iter().copied().find(|&a| f.iter().all(|&b| sb.leq(a, b))).expect("fiber has a minimum");
                let hi = f.iter().copied().find(|&a| f.iter().all(|&b| sb.leq(b, a))).expect("fiber has a maximum");
                let mut iv = sb.interval(lo, hi);
                iv.sort_unstable();
                let mut fs = f.clone();
                fs.sort_unstable();
                assert_eq!(iv, fs);
            }
        }
    }

    #[test]
    fn comparable_graftings_are_componentwise_comparable() {
        for r in 1..=3 {
            let bases = enumerate(r).unwrap();
            for sizes in trees::compositions(6).into_iter().filter(|c| c.len() == r) {
                let pools: Vec<Vec<Tree>> = sizes.iter().map(|&m| enumerate(m).unwrap()).collect();
                let mut tuples: Vec<Vec<Tree>> = vec![Vec::new()];
                for pool in &pools {
                    tuples = tuples
                        .into_iter()
                        .flat_map(|tp| {
                            pool.iter().map(move |x| {
                                let mut v = tp.clone();
                                v.push(x.clone());
                                v
                            })
                        })
                        .collect();
                }
                for t0 in &bases {
                    for w0 in &bases {
                        for ts in &tuples {
                            for ws in &tuples {
                                let a = t0.graft_all(ts).unwrap();
                                let b = w0.graft_all(ws).unwrap();
                                if tamari_leq(&a, &b).unwrap() {
                                    assert!(tamari_leq(t0, w0).unwrap());
                                    for (x, y) in ts.iter().zip(ws) {
                                        assert!(tamari_leq(x, y).unwrap());
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn suite_passes() {
        let r = order_laws(6);
        assert!(r.passed(), "{r}");
        assert!(!lattice_triple_holds(&Poset::from_covers(vec![1, 2], |_| Vec::new()).unwrap(), 0, 1, 0));
        assert!(moebius_vanishes_off_support(1).is_err());
    }

    #[test]
    fn mobius_vanishes_off_the_two_families() {
        let leaf = Tree::Leaf;
        for n in 3..=6 {
            let p = tamari(n).unwrap();
            let top = p.index_of(&comb_right(n).unwrap()).unwrap();
            let smaller = enumerate(n - 1).unwrap();
            let fam: Vec<Tree> = smaller
                .iter()
                .flat_map(|x| [leaf.wedge(x), trees::under(&leaf, x)])
                .collect();
            for (k, q) in p.elements().iter().enumerate() {
                if !fam.contains(q) {
                    assert_eq!(p.mobius(k, top), 0, "μ({q}, 1_{n}) should vanish");
                }
            }
            // the family is closed under meets and contains the lower covers of the top
            for a in &fam {
                for b in &fam {
                    assert!(fam.contains(&tamari_meet(a, b).unwrap()));
                }
            }
            for &c in p.lower_covers(top) {
                assert!(fam.contains(p.element(c)));
            }
        }
    }
}
