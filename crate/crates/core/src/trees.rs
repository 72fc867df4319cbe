//! Planar binary trees and their elementary operations.
//!
//! A tree with `n` leaves has `n - 1` internal vertices, numbered `1..n-1`
//! from left to right (infix order). Leaves are numbered `1..n` the same way.
//!
//! Two codecs are supported: the text form, where `|` is a leaf and `(L R)` a
//! vertex, and the Dyck form `D(|) = ""`, `D((L R)) = "1" D(L) "0" D(R)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};

/// Largest leaf count accepted by [`enumerate`].
pub const MAX_ENUM_LEAVES: usize = 14;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn leaf() -> Tree {
        Tree::Leaf
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    pub fn leaves(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn internal_nodes(&self) -> usize {
        self.leaves() - 1
    }

    /// Left and right subtrees, `None` for the leaf.
    pub fn children(&self) -> Option<(&Tree, &Tree)> {
        match self {
            Tree::Leaf => None,
            Tree::Node(l, r) => Some((l, r)),
        }
    }

    pub fn wedge(&self, other: &Tree) -> Tree {
        wedge(self.clone(), other.clone())
    }

    pub fn under(&self, other: &Tree) -> Tree {
        under(self, other)
    }

    /// Replace the `j`-th leaf (1-based) by `w`.
    pub fn graft(&self, j: usize, w: &Tree) -> Result<Tree> {
        let n = self.leaves();
        if j == 0 || j > n {
            return invalid(format!("graft position {j} outside 1..={n}"));
        }
        Ok(graft_at(self, j, w))
    }

    /// Replace leaf `i` by `ws[i-1]` for every `i`.
    pub fn graft_all(&self, ws: &[Tree]) -> Result<Tree> {
        let n = self.leaves();
        if ws.len() != n {
            return invalid(format!("graft_all needs {n} trees, got {}", ws.len()));
        }
        let mut it = ws.iter();
        Ok(substitute(self, &mut it))
    }

    pub fn dyck(&self) -> String {
        let mut s = String::with_capacity(2 * self.internal_nodes());
        self.write_dyck(&mut s);
        s
    }

    fn write_dyck(&self, s: &mut String) {
        if let Tree::Node(l, r) = self {
            s.push('1');
            l.write_dyck(s);
            s.push('0');
            r.write_dyck(s);
        }
    }

    pub fn from_dyck(word: &str) -> Result<Tree> {
        let bytes = word.as_bytes();
        let mut pos = 0;
        let t = parse_dyck(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::Parse(format!("trailing input in Dyck word {word:?}")));
        }
        Ok(t)
    }

    /// Text codec without spaces, e.g. `(|(||))`.
    pub fn compact(&self) -> String {
        self.to_string().replace(' ', "")
    }

    pub fn is_under_irreducible(&self) -> bool {
        match self {
            Tree::Leaf => true,
            Tree::Node(l, r) => l.is_under_irreducible() && r.leaves() > 1,
        }
    }

    /// The unique factorisation `t = t_1 ⋌ … ⋌ t_r` into `⋌`-irreducible trees.
    pub fn factor_under(&self) -> Vec<Tree> {
        match self {
            Tree::Leaf => vec![Tree::Leaf],
            Tree::Node(l, r) => {
                let mut fs = l.factor_under();
                if r.is_leaf() {
                    fs.push(Tree::Leaf);
                } else {
                    let last = fs.pop().expect("factorisation is never empty");
                    fs.push(wedge(last, (**r).clone()));
                }
                fs
            }
        }
    }

    /// Left children met along the right spine: `t = 1_r ∘ (t_1, …, t_{r-1}, |)`.
    pub fn right_spine(&self) -> Vec<&Tree> {
        let mut out = Vec::new();
        let mut cur = self;
        while let Tree::Node(l, r) = cur {
            out.push(&**l);
            cur = r;
        }
        out
    }

    /// Structural comparison in the order of the text codec (`(` before `|`).
    fn cmp_shape(&self, other: &Tree) -> Ordering {
        match (self, other) {
            (Tree::Leaf, Tree::Leaf) => Ordering::Equal,
            (Tree::Node(..), Tree::Leaf) => Ordering::Less,
            (Tree::Leaf, Tree::Node(..)) => Ordering::Greater,
            (Tree::Node(a, b), Tree::Node(c, d)) => a.cmp_shape(c).then_with(|| b.cmp_shape(d)),
        }
    }
}

/// Trees are ordered by leaf count, then lexicographically by text codec.
impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.leaves()
            .cmp(&other.leaves())
            .then_with(|| self.cmp_shape(other))
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => f.write_str("|"),
            Tree::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts the text codec (whitespace optional) or a non-empty Dyck word.
impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tree> {
        let s = s.trim();
        if !s.is_empty() && s.bytes().all(|b| b == b'0' || b == b'1') {
            return Tree::from_dyck(s);
        }
        let toks: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut pos = 0;
        let t = parse_text(&toks, &mut pos)?;
        if pos != toks.len() {
            return Err(Error::Parse(format!("trailing input in tree {s:?}")));
        }
        Ok(t)
    }
}

fn parse_text(toks: &[u8], pos: &mut usize) -> Result<Tree> {
    match toks.get(*pos) {
        Some(b'|') => {
            *pos += 1;
            Ok(Tree::Leaf)
        }
        Some(b'(') => {
            *pos += 1;
            let l = parse_text(toks, pos)?;
            let r = parse_text(toks, pos)?;
            if toks.get(*pos) != Some(&b')') {
                return Err(Error::Parse(format!("expected ')' at token {}", *pos)));
            }
            *pos += 1;
            Ok(wedge(l, r))
        }
        Some(c) => Err(Error::Parse(format!("unexpected character {:?}", *c as char))),
        None => Err(Error::Parse("unexpected end of tree".into())),
    }
}

fn parse_dyck(bytes: &[u8], pos: &mut usize) -> Result<Tree> {
    if bytes.get(*pos) != Some(&b'1') {
        return Ok(Tree::Leaf);
    }
    *pos += 1;
    let l = parse_dyck(bytes, pos)?;
    match bytes.get(*pos) {
        Some(b'0') => *pos += 1,
        _ => return Err(Error::Parse("unbalanced Dyck word".into())),
    }
    let r = parse_dyck(bytes, pos)?;
    Ok(wedge(l, r))
}

#[derive(Serialize, Deserialize)]
struct DyckRepr {
    dyck: String,
}

impl Serialize for Tree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DyckRepr { dyck: self.dyck() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = DyckRepr::deserialize(d)?;
        Tree::from_dyck(&r.dyck).map_err(serde::de::Error::custom)
    }
}

pub fn wedge(t: Tree, w: Tree) -> Tree {
    Tree::Node(Box::new(t), Box::new(w))
}

/// `t ⋌ w`: graft `t ⋎ |` onto the first leaf of `w`.
pub fn under(t: &Tree, w: &Tree) -> Tree {
    graft_at(w, 1, &wedge(t.clone(), Tree::Leaf))
}

fn graft_at(t: &Tree, j: usize, w: &Tree) -> Tree {
    match t {
        Tree::Leaf => w.clone(),
        Tree::Node(l, r) => {
            let a = l.leaves();
            if j <= a {
                wedge(graft_at(l, j, w), (**r).clone())
            } else {
                wedge((**l).clone(), graft_at(r, j - a, w))
            }
        }
    }
}

fn substitute<'a>(t: &Tree, ws: &mut impl Iterator<Item = &'a Tree>) -> Tree {
    match t {
        Tree::Leaf => ws.next().expect("length checked by caller").clone(),
        Tree::Node(l, r) => {
            let l = substitute(l, ws);
            let r = substitute(r, ws);
            wedge(l, r)
        }
    }
}

/// The left comb `0_n = 0_{n-1} ⋎ |`, minimum of the Tamari order.
pub fn comb_left(n: usize) -> Result<Tree> {
    if n == 0 {
        return invalid("combs need at least one leaf");
    }
    Ok((1..n).fold(Tree::Leaf, |t, _| wedge(t, Tree::Leaf)))
}

/// The right comb `1_n = | ⋎ 1_{n-1}`, maximum of the Tamari order.
pub fn comb_right(n: usize) -> Result<Tree> {
    if n == 0 {
        return invalid("combs need at least one leaf");
    }
    Ok((1..n).fold(Tree::Leaf, |t, _| wedge(Tree::Leaf, t)))
}

/// All trees with `n` leaves, sorted by text codec.
pub fn enumerate(n: usize) -> Result<Vec<Tree>> {
    if n == 0 {
        return invalid("trees have at least one leaf");
    }
    if n > MAX_ENUM_LEAVES {
        return Err(Error::ResourceLimit {
            what: "leaves",
            value: n,
            limit: MAX_ENUM_LEAVES,
        });
    }
    let mut table: Vec<Vec<Tree>> = vec![Vec::new(), vec![Tree::Leaf]];
    for m in 2..=n {
        let mut level = Vec::new();
        for k in 1..m {
            for l in &table[k] {
                for r in &table[m - k] {
                    level.push(wedge(l.clone(), r.clone()));
                }
            }
        }
        level.sort();
        table.push(level);
    }
    Ok(table.swap_remove(n))
}

/// Catalan number `C_n`.
pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

/// Compositions of `n` into positive parts, in lexicographic order.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
