//! Trees whose internal nodes carry colors from a finite set `S`: the free
//! `S`-magmatic algebra, its coproduct, and operators acting on any
//! `S`-magmatic algebra.

mod checks;
mod ops;
mod prim;

pub use checks::{colored_structure, operator_calculus};
pub use ops::{
    binary_composite, colorize, colorize_with, compose, formaelem_holds, formaelem_literal_holds,
    full_family, generatingprods_a_holds, generatingprods_b_holds, hat, hat_family, hat_family_relaxed, m_op, mhat_op,
    moebius_hat, span_closure, Operator,
};
pub use prim::{
    colored_prim_basis, colored_prim_dim, enumerate_colored, gen_in, lemma_firststep_check, structure_check,
    MAX_COLORED_BASIS, MAX_SUITE_COLORS, MAX_SUITE_DEGREE,
};

use std::fmt;
use std::marker::PhantomData;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bialg::{SplitBasis, Unital};
use crate::error::{invalid, Error, Result};
use crate::linalg::LinComb;
use crate::trees::{under, wedge, Tree};

/// A color, shown as a lowercase letter (`Color(0)` is `a`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(pub u8);

impl Color {
    pub fn name(self) -> char {
        (b'a' + self.0) as char
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Debug for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Color> {
        match s.as_bytes() {
            [c @ b'a'..=b'z'] => Ok(Color(c - b'a')),
            _ => Err(Error::Parse(format!("not a color: {s:?}"))),
        }
    }
}

impl Serialize for Color {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Color {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

/// A finite color set `{a, b, …}` with a basepoint `s•`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorSet {
    size: u8,
    base: Color,
}

impl ColorSet {
    /// `size` colors; the basepoint is the last one.
    pub fn new(size: usize) -> Result<ColorSet> {
        if size == 0 {
            return invalid("a color set needs at least one color");
        }
        ColorSet::with_base(size, Color(size as u8 - 1))
    }

    pub fn with_base(size: usize, base: Color) -> Result<ColorSet> {
        if size == 0 || size > 26 {
            return invalid(format!("color set size {size} outside 1..=26"));
        }
        if usize::from(base.0) >= size {
            return invalid(format!("basepoint {base} is not among {size} colors"));
        }
        Ok(ColorSet { size: size as u8, base })
    }

    pub fn size(&self) -> usize {
        self.size.into()
    }

    pub fn base(&self) -> Color {
        self.base
    }

    pub fn contains(&self, c: Color) -> bool {
        c.0 < self.size
    }

    pub fn colors(&self) -> Vec<Color> {
        (0..self.size).map(Color).collect()
    }

    pub fn non_base(&self) -> Vec<Color> {
        self.colors().into_iter().filter(|&c| c != self.base).collect()
    }

    /// All words of length `len`, lexicographically.
    pub fn words(&self, len: usize) -> Vec<Vec<Color>> {
        words_over(&self.colors(), len)
    }
}

pub(crate) fn words_over<C: Clone>(alphabet: &[C], len: usize) -> Vec<Vec<C>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |c| {
                    let mut w = w.clone();
                    w.push(c.clone());
                    w
                })
            })
            .collect();
    }
    out
}

/// A tree with one color per internal node, in infix order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredTree<C> {
    shape: Tree,
    colors: Vec<C>,
}

impl<C: Clone> ColoredTree<C> {
    pub fn new(shape: Tree, colors: Vec<C>) -> Result<Self> {
        if colors.len() + 1 != shape.leaves() {
            return invalid(format!(
                "a tree with {} leaves needs {} colors, got {}",
                shape.leaves(),
                shape.leaves() - 1,
                colors.len()
            ));
        }
        Ok(ColoredTree { shape, colors })
    }

    pub fn leaf() -> Self {
        ColoredTree { shape: Tree::Leaf, colors: Vec::new() }
    }

    /// Every node colored `c`.
    pub fn uniform(shape: Tree, c: C) -> Self {
        let colors = vec![c; shape.internal_nodes()];
        ColoredTree { shape, colors }
    }

    pub fn shape(&self) -> &Tree {
        &self.shape
    }

    pub fn colors(&self) -> &[C] {
        &self.colors
    }

    pub fn leaves(&self) -> usize {
        self.shape.leaves()
    }

    pub fn is_leaf(&self) -> bool {
        self.shape.is_leaf()
    }

    /// The unique decomposition `t = t^l ⋎_s t^r`.
    pub fn split(&self) -> Option<(Self, C, Self)> {
        let (l, r) = self.shape.children()?;
        let k = l.leaves();
        Some((
            ColoredTree { shape: l.clone(), colors: self.colors[..k - 1].to_vec() },
            self.colors[k - 1].clone(),
            ColoredTree { shape: r.clone(), colors: self.colors[k..].to_vec() },
        ))
    }

    /// Replace leaf `j` (1-based) by `w`.
    pub fn graft(&self, j: usize, w: &Self) -> Result<Self> {
        let shape = self.shape.graft(j, &w.shape)?;
        let mut colors = self.colors[..j - 1].to_vec();
        colors.extend(w.colors.iter().cloned());
        colors.extend(self.colors[j - 1..].iter().cloned());
        Ok(ColoredTree { shape, colors })
    }

    /// Replace every leaf `i` by `ws[i]`.
    pub fn graft_all(&self, ws: &[Self]) -> Result<Self> {
        let shapes: Vec<Tree> = ws.iter().map(|w| w.shape.clone()).collect();
        let shape = self.shape.graft_all(&shapes)?;
        let mut colors = Vec::with_capacity(shape.internal_nodes());
        for (i, w) in ws.iter().enumerate() {
            if i > 0 {
                colors.push(self.colors[i - 1].clone());
            }
            colors.extend(w.colors.iter().cloned());
        }
        Ok(ColoredTree { shape, colors })
    }
}

impl ColoredTree<Color> {
    pub fn dyck(&self) -> String {
        self.shape.dyck()
    }
}

/// `t ⋎_s w`.
pub fn cwedge<C: Clone>(t: &ColoredTree<C>, s: &C, w: &ColoredTree<C>) -> ColoredTree<C> {
    let mut colors = t.colors.clone();
    colors.push(s.clone());
    colors.extend(w.colors.iter().cloned());
    ColoredTree { shape: wedge(t.shape.clone(), w.shape.clone()), colors }
}

/// `t ⋌_s w = w ∘_1 (t ⋎_s |)`.
pub fn cunder<C: Clone>(t: &ColoredTree<C>, s: &C, w: &ColoredTree<C>) -> ColoredTree<C> {
    let mut colors = t.colors.clone();
    colors.push(s.clone());
    colors.extend(w.colors.iter().cloned());
    ColoredTree { shape: under(&t.shape, &w.shape), colors }
}

pub fn cwedge_lin<C: Clone + Ord>(
    x: &LinComb<ColoredTree<C>>,
    s: &C,
    y: &LinComb<ColoredTree<C>>,
) -> LinComb<ColoredTree<C>> {
    x.bilinear(y, |a, b| LinComb::basis(cwedge(a, s, b)))
}

pub fn cunder_lin<C: Clone + Ord>(
    x: &LinComb<ColoredTree<C>>,
    s: &C,
    y: &LinComb<ColoredTree<C>>,
) -> LinComb<ColoredTree<C>> {
    x.bilinear(y, |a, b| LinComb::basis(cunder(a, s, b)))
}

/// `x ⋎_ŝ y = x ⋎_s y − x ⋎_{s•} y`.
pub fn hat_wedge<C: Clone + Ord>(
    x: &LinComb<ColoredTree<C>>,
    s: &C,
    base: &C,
    y: &LinComb<ColoredTree<C>>,
) -> Result<LinComb<ColoredTree<C>>> {
    if s == base {
        return invalid("the hat product needs a color other than the basepoint");
    }
    Ok(cwedge_lin(x, s, y) - cwedge_lin(x, base, y))
}

impl<C: Clone + Ord> SplitBasis for ColoredTree<C> {
    fn degree(&self) -> usize {
        self.leaves()
    }

    fn splits(&self) -> Vec<(Unital<Self>, Unital<Self>)> {
        self.shape
            .splits()
            .into_iter()
            .enumerate()
            .map(|(i, (a, b))| {
                let left = a.as_elem().map(|t| ColoredTree { shape: t.clone(), colors: self.colors[..i - 1].to_vec() });
                let right = b.as_elem().map(|t| ColoredTree { shape: t.clone(), colors: self.colors[i..].to_vec() });
                (left.map_or(Unital::Unit, Unital::Elem), right.map_or(Unital::Unit, Unital::Elem))
            })
            .collect()
    }
}

impl<C: fmt::Display> fmt::Display for ColoredTree<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go<C: fmt::Display>(t: &Tree, colors: &[C], f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match t.children() {
                None => f.write_str("|"),
                Some((l, r)) => {
                    let k = l.leaves();
                    f.write_str("(")?;
                    go(l, &colors[..k - 1], f)?;
                    write!(f, " {} ", colors[k - 1])?;
                    go(r, &colors[k..], f)?;
                    f.write_str(")")
                }
            }
        }
        go(&self.shape, &self.colors, f)
    }
}

impl<C: fmt::Display> fmt::Debug for ColoredTree<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the text form, e.g. `(| a (| b |))`.
impl FromStr for ColoredTree<Color> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut pos = 0;
        let t = parse_colored(&toks, &mut pos)?;
        if pos != toks.len() {
            return Err(Error::Parse(format!("trailing input in colored tree {s:?}")));
        }
        Ok(t)
    }
}

fn parse_colored(toks: &[u8], pos: &mut usize) -> Result<ColoredTree<Color>> {
    match toks.get(*pos) {
        Some(b'|') => {
            *pos += 1;
            Ok(ColoredTree::leaf())
        }
        Some(b'(') => {
            *pos += 1;
            let l = parse_colored(toks, pos)?;
            let c = match toks.get(*pos) {
                Some(&c @ b'a'..=b'z') => Color(c - b'a'),
                _ => return Err(Error::Parse(format!("expected a color at token {}", *pos))),
            };
            *pos += 1;
            let r = parse_colored(toks, pos)?;
            if toks.get(*pos) != Some(&b')') {
                return Err(Error::Parse(format!("expected ')' at token {}", *pos)));
            }
            *pos += 1;
            Ok(cwedge(&l, &c, &r))
        }
        _ => Err(Error::Parse(format!("unexpected token at {}", *pos))),
    }
}

#[derive(Serialize, Deserialize)]
struct ColoredRepr<C> {
    dyck: String,
    colors: Vec<C>,
}

impl<C: Serialize + Clone> Serialize for ColoredTree<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ColoredRepr { dyck: self.shape.dyck(), colors: self.colors.clone() }.serialize(s)
    }
}

impl<'de, C: Deserialize<'de> + Clone> Deserialize<'de> for ColoredTree<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ColoredRepr::<C>::deserialize(d)?;
        let shape = Tree::from_dyck(&r.dyck).map_err(D::Error::custom)?;
        ColoredTree::new(shape, r.colors).map_err(D::Error::custom)
    }
}

/// A vector space with one bilinear product per color, given on a basis.
pub trait MagmaticAlgebra {
    type Color;
    type Elem: Clone + Ord;

    fn mul(&self, s: &Self::Color, x: &Self::Elem, y: &Self::Elem) -> LinComb<Self::Elem>;
}

/// The free `S`-magmatic algebra on one generator, with basis the colored trees.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeMagmatic<C>(PhantomData<C>);

impl<C> FreeMagmatic<C> {
    pub fn new() -> Self {
        FreeMagmatic(PhantomData)
    }
}

impl<C: Clone + Ord> MagmaticAlgebra for FreeMagmatic<C> {
    type Color = C;
    type Elem = ColoredTree<C>;

    fn mul(&self, s: &C, x: &ColoredTree<C>, y: &ColoredTree<C>) -> LinComb<ColoredTree<C>> {
        LinComb::basis(cwedge(x, s, y))
    }
}

/// The same space with products `x ·_s y − x ·_{s•} y`.
#[derive(Clone, Debug)]
pub struct HatAlgebra<'a, A: MagmaticAlgebra> {
    pub inner: &'a A,
    pub base: A::Color,
}

impl<A: MagmaticAlgebra> MagmaticAlgebra for HatAlgebra<'_, A> {
    type Color = A::Color;
    type Elem = A::Elem;

    fn mul(&self, s: &A::Color, x: &A::Elem, y: &A::Elem) -> LinComb<A::Elem> {
        self.inner.mul(s, x, y) - self.inner.mul(&self.base, x, y)
    }
}

/// Evaluate an operator on `args` in `alg`:
/// `(t^l ⋎_s t^r)·(x_1, …, x_n) = (t^l·(x_1, …)) ·_s (t^r·(…, x_n))`.
pub fn act<A: MagmaticAlgebra>(
    op: &LinComb<ColoredTree<A::Color>>,
    args: &[LinComb<A::Elem>],
    alg: &A,
) -> Result<LinComb<A::Elem>>
where
    A::Color: Clone + Ord,
{
    let mut out = LinComb::zero();
    for (t, c) in op.iter() {
        if t.leaves() != args.len() {
            return invalid(format!("operator of arity {} applied to {} arguments", t.leaves(), args.len()));
        }
        out.add_scaled(&eval(&t.shape, &t.colors, args, alg), c);
    }
    Ok(out)
}

fn eval<A: MagmaticAlgebra>(shape: &Tree, colors: &[A::Color], args: &[LinComb<A::Elem>], alg: &A) -> LinComb<A::Elem> {
    match shape.children() {
        None => args[0].clone(),
        Some((l, r)) => {
            let k = l.leaves();
            let x = eval(l, &colors[..k - 1], &args[..k], alg);
            let y = eval(r, &colors[k..], &args[k..], alg);
            x.bilinear(&y, |a, b| alg.mul(&colors[k - 1], a, b))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialg::{coassociativity_defect, coprod, is_primitive, unital_infinitesimal_holds};
    use crate::trees::enumerate;
    use proptest::prelude::*;

    fn ct(s: &str) -> ColoredTree<Color> {
        s.parse().unwrap()
    }

    const A: Color = Color(0);
    const B: Color = Color(1);

    fn all_colored(max_n: usize, k: usize) -> Vec<ColoredTree<Color>> {
        let set = ColorSet::new(k).unwrap();
        (1..=max_n).flat_map(|n| enumerate_colored(n, &set).unwrap()).collect()
    }

    #[test]
    fn colors_and_sets() {
        assert_eq!(A.to_string(), "a");
        assert_eq!("c".parse::<Color>().unwrap(), Color(2));
        assert!("ab".parse::<Color>().is_err());
        let s = ColorSet::new(3).unwrap();
        assert_eq!(s.base(), Color(2));
        assert_eq!(s.non_base(), vec![A, B]);
        assert_eq!(s.words(2).len(), 9);
        assert!(ColorSet::with_base(2, Color(2)).is_err());
        assert!(ColorSet::new(0).is_err());
    }

    #[test]
    fn text_and_json_round_trip() {
        let t = ct("((| a |) b (| a |))");
        assert_eq!(t.colors(), &[A, B, A]);
        assert_eq!(t.to_string(), "((| a |) b (| a |))");
        let js = serde_json::to_value(&t).unwrap();
        assert_eq!(js, serde_json::json!({"dyck": "110010", "colors": ["a", "b", "a"]}));
        let back: ColoredTree<Color> = serde_json::from_value(js).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_value::<ColoredTree<Color>>(serde_json::json!({"dyck": "10", "colors": []})).is_err());
        assert!(ColoredTree::new(Tree::Leaf, vec![A]).is_err());
    }

    #[test]
    fn wedge_of_two_leaves() {
        let l = ColoredTree::leaf();
        assert_eq!(cwedge(&l, &A, &l), ct("(| a |)"));
        assert_eq!(cunder(&ct("(| a |)"), &B, &ct("(| a |)")), ct("(((| a |) b |) a |)"));
    }

    #[test]
    fn unique_decomposition() {
        for t in all_colored(4, 2) {
            match t.split() {
                None => assert!(t.is_leaf()),
                Some((l, s, r)) => assert_eq!(cwedge(&l, &s, &r), t),
            }
        }
    }

    #[test]
    fn grafting_splices_colors() {
        let t = ct("(| a |)");
        let w = ct("(| b |)");
        assert_eq!(t.graft(1, &w).unwrap(), ct("((| b |) a |)"));
        assert_eq!(t.graft(2, &w).unwrap(), ct("(| a (| b |))"));
        let all = t.graft_all(&[w.clone(), w.clone()]).unwrap();
        assert_eq!(all, t.graft(2, &w).unwrap().graft(1, &w).unwrap());
        for x in all_colored(3, 2) {
            for y in all_colored(3, 2) {
                for s in [A, B] {
                    let via_graft = y.graft(1, &cwedge(&x, &s, &ColoredTree::leaf())).unwrap();
                    assert_eq!(cunder(&x, &s, &y), via_graft);
                }
            }
        }
    }

    #[test]
    fn coproduct_of_small_trees() {
        let l = ColoredTree::<Color>::leaf();
        let d = coprod(&LinComb::basis(l.clone()));
        let want = LinComb::basis((Unital::Unit, Unital::Elem(l.clone()))) + LinComb::basis((Unital::Elem(l.clone()), Unital::Unit));
        assert_eq!(d, want);
        let y = ct("(| a |)");
        let want = LinComb::basis((Unital::Unit, Unital::Elem(y.clone())))
            + LinComb::basis((Unital::Elem(l.clone()), Unital::Elem(l.clone())))
            + LinComb::basis((Unital::Elem(y.clone()), Unital::Unit));
        assert_eq!(coprod(&LinComb::basis(y)), want);
    }

    /// Oracle: the `i`-th split keeps the colors strictly left and right of
    /// the cut position, and the shapes come from the uncolored splits.
    #[test]
    fn splits_carry_the_color_word() {
        for t in all_colored(5, 2) {
            let n = t.leaves();
            let s = t.splits();
            let plain = t.shape().splits();
            assert_eq!(s.len(), n + 1);
            for (i, ((a, b), (pa, pb))) in s.iter().zip(plain.iter()).enumerate() {
                assert_eq!(a.as_elem().map(|x| x.shape()), pa.as_elem());
                assert_eq!(b.as_elem().map(|x| x.shape()), pb.as_elem());
                if let Some(x) = a.as_elem() {
                    assert_eq!(x.colors(), &t.colors()[..i - 1]);
                }
                if let Some(x) = b.as_elem() {
                    assert_eq!(x.colors(), &t.colors()[i..]);
                }
            }
        }
    }

    #[test]
    fn coassociative() {
        for t in all_colored(5, 2) {
            assert!(coassociativity_defect(&t).is_zero(), "{t}");
        }
    }

    #[test]
    fn unital_infinitesimal_for_every_color() {
        let small = all_colored(4, 2);
        for x in &small {
            for y in &small {
                for s in [A, B] {
                    assert!(unital_infinitesimal_holds(x, y, |a, b| LinComb::basis(cwedge(a, &s, b))), "{x} {s} {y}");
                }
            }
        }
    }

    #[test]
    fn hat_wedge_of_leaves_is_primitive() {
        let l = LinComb::basis(ColoredTree::leaf());
        let h = hat_wedge(&l, &A, &B, &l).unwrap();
        assert_eq!(h, LinComb::basis(ct("(| a |)")) - LinComb::basis(ct("(| b |)")));
        assert!(is_primitive(&h));
        assert!(hat_wedge(&l, &B, &B, &l).is_err());
    }

    #[test]
    fn hat_wedge_keeps_primitives_primitive() {
        let set = ColorSet::new(2).unwrap();
        let levels = gen_in(3, &set).unwrap();
        for x in levels.iter().flatten() {
            for y in levels.iter().flatten() {
                if x.iter().next().unwrap().0.leaves() + y.iter().next().unwrap().0.leaves() <= 5 {
                    assert!(is_primitive(&hat_wedge(x, &A, &B, y).unwrap()));
                }
            }
        }
    }

    #[test]
    fn action_basics() {
        let free = FreeMagmatic::<Color>::new();
        let x1 = LinComb::basis(ct("(| a |)"));
        let x2 = LinComb::basis(ct("(| b |)"));
        let y = LinComb::basis(ct("(| a |)"));
        assert_eq!(act(&y, &[x1.clone(), x2.clone()], &free).unwrap(), cwedge_lin(&x1, &A, &x2));
        let leaf = LinComb::basis(ColoredTree::leaf());
        assert_eq!(act(&leaf, std::slice::from_ref(&x1), &free).unwrap(), x1);
        assert!(act(&y, std::slice::from_ref(&x1), &free).is_err());
    }

    #[test]
    fn self_action_reproduces_the_element() {
        let free = FreeMagmatic::<Color>::new();
        for t in all_colored(4, 2) {
            let leaves = vec![LinComb::basis(ColoredTree::leaf()); t.leaves()];
            assert_eq!(act(&LinComb::basis(t.clone()), &leaves, &free).unwrap(), LinComb::basis(t));
        }
    }

    #[test]
    fn action_on_the_free_algebra_is_grafting() {
        let free = FreeMagmatic::<Color>::new();
        let small = all_colored(2, 2);
        for t in all_colored(3, 2) {
            let n = t.leaves();
            for ws in words_over(&small, n) {
                let args: Vec<_> = ws.iter().map(|w| LinComb::basis(w.clone())).collect();
                let got = act(&LinComb::basis(t.clone()), &args, &free).unwrap();
                assert_eq!(got, LinComb::basis(t.graft_all(&ws).unwrap()));
            }
        }
    }

    fn arb_colored(max_leaves: usize) -> impl Strategy<Value = ColoredTree<Color>> {
        (1..=max_leaves).prop_flat_map(|n| {
            let shapes = enumerate(n).unwrap();
            (0..shapes.len(), proptest::collection::vec(0u8..3, n - 1))
                .prop_map(move |(i, cs)| ColoredTree::new(shapes[i].clone(), cs.into_iter().map(Color).collect()).unwrap())
        })
    }

    proptest! {
        #[test]
        fn mixed_associativity(x in arb_colored(4), y in arb_colored(4), z in arb_colored(4), r in 0u8..3, s in 0u8..3) {
            let (r, s) = (Color(r), Color(s));
            prop_assert_eq!(cunder(&cunder(&x, &s, &y), &r, &z), cunder(&x, &s, &cunder(&y, &r, &z)));
        }

        #[test]
        fn hat_wedge_is_bilinear(x in arb_colored(3), y in arb_colored(3), z in arb_colored(3), c in -3i64..4) {
            let (x, y, z) = (LinComb::basis(x), LinComb::basis(y), LinComb::basis(z));
            let c = num_bigint::BigInt::from(c);
            let lhs = hat_wedge(&(x.scale(&c) + y.clone()), &A, &Color(2), &z).unwrap();
            let rhs = hat_wedge(&x, &A, &Color(2), &z).unwrap().scale(&c) + hat_wedge(&y, &A, &Color(2), &z).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
