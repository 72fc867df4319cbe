//! Integer relations: reflexive relations on `[n]`, stored as their
//! off-diagonal arcs, with the coproduct by prefix/suffix restriction, the
//! four block products, their shuffle versions, and the products `∗_α`.

mod checks;
mod xi;

pub use checks::{comb_operator_laws, relation_laws, xi_suite};
pub use xi::{
    lemma_vanishing_eval, rel_prim_dim, xi, xi_basis_check, xi_is_triangular, IntRelAlgebra, VanishingOutcome,
};

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bialg::{SplitBasis, Unital};
use crate::error::{invalid, Error, Result};
use crate::linalg::LinComb;

/// Largest relation size enumerated exhaustively.
pub const MAX_ENUM_SIZE: usize = 4;

/// A reflexive relation on `[n]`; the pairs `(i, i)` are implicit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntRel {
    n: usize,
    arcs: Vec<(u32, u32)>,
}

impl IntRel {
    /// Arcs are 1-based pairs `(i, j)`, `i ≠ j`; duplicates are merged.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (u32, u32)>) -> Result<IntRel> {
        let mut arcs: Vec<(u32, u32)> = arcs.into_iter().collect();
        for &(i, j) in &arcs {
            if i == 0 || j == 0 || i as usize > n || j as usize > n {
                return invalid(format!("arc ({i}, {j}) outside [{n}]"));
            }
            if i == j {
                return invalid(format!("diagonal pair ({i}, {i}) is implicit"));
            }
        }
        arcs.sort_unstable();
        arcs.dedup();
        Ok(IntRel { n, arcs })
    }

    /// The unique relation `#` of size 1.
    pub fn point() -> IntRel {
        IntRel { n: 1, arcs: Vec::new() }
    }

    /// The relation of size 0, standing for the unit.
    pub fn empty() -> IntRel {
        IntRel { n: 0, arcs: Vec::new() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn contains(&self, i: u32, j: u32) -> bool {
        (i == j && i >= 1 && i as usize <= self.n) || self.arcs.binary_search(&(i, j)).is_ok()
    }

    /// Same size and strictly fewer arcs, all shared.
    pub fn is_strict_subset(&self, other: &IntRel) -> bool {
        self.n == other.n && self.arcs.len() < other.arcs.len() && self.arcs.iter().all(|&(i, j)| other.contains(i, j))
    }

    /// `R|_S`, relabelling `S = {s_1 < … < s_k}` to `[k]`.
    pub fn restrict(&self, s: &[usize]) -> Result<IntRel> {
        let mut s = s.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.iter().any(|&x| x == 0 || x > self.n) {
            return invalid(format!("restriction set not inside [{}]", self.n));
        }
        let mut pos = vec![0u32; self.n + 1];
        for (k, &x) in s.iter().enumerate() {
            pos[x] = k as u32 + 1;
        }
        let arcs = self
            .arcs
            .iter()
            .filter_map(|&(i, j)| {
                let (a, b) = (pos[i as usize], pos[j as usize]);
                (a > 0 && b > 0).then_some((a, b))
            })
            .collect::<Vec<_>>();
        IntRel::new(s.len(), arcs)
    }

    fn range(&self, from: usize, to: usize) -> IntRel {
        let s: Vec<usize> = (from..=to).collect();
        self.restrict(&s).expect("range inside [n]")
    }

    /// `σ·R`: `(i, j) ∈ R` iff `(σ(i), σ(j)) ∈ σ·R`; `sigma[i-1] = σ(i)`.
    pub fn permute(&self, sigma: &[usize]) -> Result<IntRel> {
        if sigma.len() != self.n {
            return invalid("permutation of the wrong size");
        }
        let mut seen = vec![false; self.n + 1];
        for &x in sigma {
            if x == 0 || x > self.n || std::mem::replace(&mut seen[x], true) {
                return invalid("not a permutation");
            }
        }
        let arcs = self.arcs.iter().map(|&(i, j)| (sigma[i as usize - 1] as u32, sigma[j as usize - 1] as u32));
        IntRel::new(self.n, arcs.collect::<Vec<_>>())
    }

    fn shifted(&self, by: u32) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.arcs.iter().map(move |&(i, j)| (i + by, j + by))
    }
}

impl fmt::Display for IntRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            return f.write_str("#");
        }
        write!(f, "{}{{", self.n)?;
        for (k, (i, j)) in self.arcs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}→{j}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for IntRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct RelRepr {
    n: usize,
    arcs: Vec<(u32, u32)>,
}

impl Serialize for IntRel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RelRepr { n: self.n, arcs: self.arcs.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntRel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RelRepr::deserialize(d)?;
        IntRel::new(r.n, r.arcs).map_err(D::Error::custom)
    }
}

/// The four block products `⊔, ↑, ↓, ↕`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    Disjoint,
    Up,
    Down,
    Both,
}

impl Op {
    pub const ALL: [Op; 4] = [Op::Disjoint, Op::Up, Op::Down, Op::Both];

    pub fn symbol(self) -> char {
        match self {
            Op::Disjoint => '⊔',
            Op::Up => '↑',
            Op::Down => '↓',
            Op::Both => '↕',
        }
    }

    fn from_symbol(c: char) -> Option<Op> {
        match c {
            '⊔' | 'o' => Some(Op::Disjoint),
            '↑' | 'u' => Some(Op::Up),
            '↓' | 'd' => Some(Op::Down),
            '↕' | 'b' => Some(Op::Both),
            _ => None,
        }
    }

    fn up(self) -> bool {
        matches!(self, Op::Up | Op::Both)
    }

    fn down(self) -> bool {
        matches!(self, Op::Down | Op::Both)
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl fmt::Debug for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// `R ⋆ Q` for a block product `⋆`.
pub fn prod_basic(r: &IntRel, q: &IntRel, op: Op) -> IntRel {
    let n = r.n as u32;
    let mut arcs: Vec<(u32, u32)> = r.arcs.iter().copied().chain(q.shifted(n)).collect();
    for i in 1..=n {
        for j in n + 1..=n + q.n as u32 {
            if op.up() {
                arcs.push((i, j));
            }
            if op.down() {
                arcs.push((j, i));
            }
        }
    }
    IntRel::new(r.n + q.n, arcs).expect("arcs inside the block")
}

/// Either the disjoint union `⊔` or a word `α(1)…α(r)` with `α(r) ≠ ⊔`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlphaMap {
    Disjoint,
    Word(Vec<Op>),
}

impl AlphaMap {
    pub fn word(letters: Vec<Op>) -> Result<AlphaMap> {
        match letters.last() {
            None => invalid("an α-word needs at least one letter"),
            Some(Op::Disjoint) => invalid("the last letter of an α-word cannot be ⊔"),
            Some(_) => Ok(AlphaMap::Word(letters)),
        }
    }

    /// Drop trailing `⊔` letters; nothing left gives `⊔`.
    pub fn trimmed(mut letters: Vec<Op>) -> AlphaMap {
        while letters.last() == Some(&Op::Disjoint) {
            letters.pop();
        }
        if letters.is_empty() { AlphaMap::Disjoint } else { AlphaMap::Word(letters) }
    }

    /// `s(α)`; `s(⊔) = 0`.
    pub fn size(&self) -> usize {
        match self {
            AlphaMap::Disjoint => 0,
            AlphaMap::Word(w) => w.len(),
        }
    }

    /// `α(i)`, 1-based, with `⊔` past the end.
    pub fn letter(&self, i: usize) -> Op {
        match self {
            AlphaMap::Word(w) if i >= 1 && i <= w.len() => w[i - 1],
            _ => Op::Disjoint,
        }
    }

    /// `⊔` together with every word of size `1..=max_size`.
    pub fn all_upto(max_size: usize) -> Vec<AlphaMap> {
        let mut out = vec![AlphaMap::Disjoint];
        let mut words: Vec<Vec<Op>> = vec![Vec::new()];
        for _ in 0..max_size {
            words = words
                .into_iter()
                .flat_map(|w| {
                    Op::ALL.iter().map(move |&o| {
                        let mut w = w.clone();
                        w.push(o);
                        w
                    })
                })
                .collect();
            out.extend(words.iter().filter(|w| w.last() != Some(&Op::Disjoint)).cloned().map(AlphaMap::Word));
        }
        out
    }
}

impl fmt::Display for AlphaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaMap::Disjoint => f.write_str("⊔"),
            AlphaMap::Word(w) => w.iter().try_for_each(|o| write!(f, "{o}")),
        }
    }
}

impl fmt::Debug for AlphaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for AlphaMap {
    type Err = Error;

    /// Unicode `⊔↑↓↕` or ASCII `o u d b`; a lone `⊔` is the disjoint union.
    fn from_str(s: &str) -> Result<AlphaMap> {
        let letters = s
            .trim()
            .chars()
            .map(|c| Op::from_symbol(c).ok_or_else(|| Error::Parse(format!("bad α letter {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if letters == [Op::Disjoint] {
            return Ok(AlphaMap::Disjoint);
        }
        AlphaMap::word(letters)
    }
}

impl Serialize for AlphaMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AlphaMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

/// `R ∗_α Q`: the disjoint union plus arcs between `n` and `n + i`,
/// `1 ≤ i ≤ min(s(α), m)`, as `α(i)` prescribes.
pub fn prod_alpha(r: &IntRel, q: &IntRel, alpha: &AlphaMap) -> IntRel {
    let n = r.n as u32;
    let mut arcs: Vec<(u32, u32)> = r.arcs.iter().copied().chain(q.shifted(n)).collect();
    for i in 1..=alpha.size().min(q.n) {
        let op = alpha.letter(i);
        let j = n + i as u32;
        if op.up() {
            arcs.push((n, j));
        }
        if op.down() {
            arcs.push((j, n));
        }
    }
    IntRel::new(r.n + q.n, arcs).expect("arcs inside the block")
}

impl SplitBasis for IntRel {
    fn degree(&self) -> usize {
        self.n
    }

    /// `Σ_i R|_{[i]} ⊗ R|_{{i+1, …, n}}`.
    fn splits(&self) -> Vec<(Unital<IntRel>, Unital<IntRel>)> {
        let lift = |r: IntRel| if r.n == 0 { Unital::Unit } else { Unital::Elem(r) };
        (0..=self.n).map(|i| (lift(self.range(1, i)), lift(self.range(i + 1, self.n)))).collect()
    }
}

/// The `(n, m)`-shuffles as image lists `σ(1), …, σ(n + m)`.
pub fn shuffles(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn choose(start: usize, total: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for x in start..=total {
            if total - x + 1 < k - acc.len() {
                break;
            }
            acc.push(x);
            choose(x + 1, total, k, acc, out);
            acc.pop();
        }
    }
    let mut firsts = Vec::new();
    choose(1, n + m, n, &mut Vec::new(), &mut firsts);
    firsts
        .into_iter()
        .map(|a| {
            let rest = (1..=n + m).filter(|x| !a.contains(x));
            a.iter().copied().chain(rest).collect()
        })
        .collect()
}

/// `R ◇_⋆ Q = Σ_{σ ∈ sh(n, m)} σ·(R ⋆ Q)`.
pub fn shuffle_prod(r: &IntRel, q: &IntRel, op: Op) -> LinComb<IntRel> {
    let p = prod_basic(r, q, op);
    shuffles(r.n, q.n).iter().map(|s| (p.permute(s).expect("a shuffle is a permutation"), 1.into())).collect()
}

/// `R = # ∗_γ R|_{{2, …, n}}`, with `γ` read off the arcs at 1.
pub fn left_factor(r: &IntRel) -> Result<(AlphaMap, IntRel)> {
    if r.n < 2 {
        return invalid("left_factor needs a relation of size at least 2");
    }
    let letters = (1..r.n)
        .map(|i| {
            let j = i as u32 + 1;
            match (r.contains(1, j), r.contains(j, 1)) {
                (false, false) => Op::Disjoint,
                (true, false) => Op::Up,
                (false, true) => Op::Down,
                (true, true) => Op::Both,
            }
        })
        .collect();
    Ok((AlphaMap::trimmed(letters), r.range(2, r.n)))
}

/// The word `(α_{n-1}, …, α_1)` with `R = # ∗_{α_{n-1}} (# ∗ … (# ∗_{α_1} #))`.
pub fn canonical_word(r: &IntRel) -> Result<Vec<AlphaMap>> {
    if r.n == 0 {
        return invalid("the empty relation has no canonical word");
    }
    let mut out = Vec::with_capacity(r.n - 1);
    let mut cur = r.clone();
    while cur.n > 1 {
        let (a, rest) = left_factor(&cur)?;
        out.push(a);
        cur = rest;
    }
    Ok(out)
}

/// Inverse of [`canonical_word`].
pub fn from_canonical_word(word: &[AlphaMap]) -> IntRel {
    word.iter().rev().fold(IntRel::point(), |acc, a| prod_alpha(&IntRel::point(), &acc, a))
}

/// The maximal factorisation `R = R_1 ⊔ … ⊔ R_q`.
pub fn sqcup_factor(r: &IntRel) -> Vec<IntRel> {
    let mut cut = vec![true; r.n + 1];
    for &(i, j) in &r.arcs {
        let (lo, hi) = (i.min(j) as usize, i.max(j) as usize);
        for c in &mut cut[lo..hi] {
            *c = false;
        }
    }
    let mut out = Vec::new();
    let mut start = 1;
    for c in 1..=r.n {
        if c == r.n || cut[c] {
            out.push(r.range(start, c));
            start = c + 1;
        }
    }
    out
}

pub fn is_sqcup_irreducible(r: &IntRel) -> bool {
    r.n >= 1 && sqcup_factor(r).len() == 1
}

/// Irreducibility read off the canonical word `(α_{n-1}, …, α_1)`: every
/// `α_i = ⊔`, `1 ≤ i ≤ n-1`, has some `i < j ≤ n-1` with `s(α_j) > j - i`.
pub fn word_irreducible(word: &[AlphaMap]) -> bool {
    let n1 = word.len();
    let alpha = |i: usize| &word[n1 - i];
    (1..=n1).all(|i| *alpha(i) != AlphaMap::Disjoint || (i + 1..=n1).any(|j| alpha(j).size() > j - i))
}

/// The same criterion with the first clause read as `1 ≤ i < n-1`.
pub fn word_irreducible_literal(word: &[AlphaMap]) -> bool {
    let n1 = word.len();
    let alpha = |i: usize| &word[n1 - i];
    let clause_a = (1..n1).all(|i| *alpha(i) != AlphaMap::Disjoint);
    clause_a || word_irreducible(word)
}

/// All relations of size `n`, in order of their arc bitmask.
pub fn enumerate_rels(n: usize) -> Result<Vec<IntRel>> {
    if n > MAX_ENUM_SIZE {
        return Err(Error::ResourceLimit { what: "relation size", value: n, limit: MAX_ENUM_SIZE });
    }
    let pairs: Vec<(u32, u32)> = (1..=n as u32)
        .flat_map(|i| (1..=n as u32).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    Ok((0u64..1 << pairs.len())
        .map(|mask| {
            let arcs = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p);
            IntRel::new(n, arcs.collect::<Vec<_>>()).expect("valid arcs")
        })
        .collect())
}
