//! Operators `M(s)` and `M_t(s_1, …, s_{n-1})` and the relations among them.

use num_bigint::BigInt;

use super::{act, ColorSet, ColoredTree, FreeMagmatic};
use crate::bialg::moebius_elem;
use crate::error::{invalid, Result};
use crate::linalg::{LinComb, SpanBuilder};
use crate::trees::{comb_right, compositions, enumerate, under, Tree};

/// An element of the free algebra read as an `n`-ary operator.
pub type Operator<C> = LinComb<ColoredTree<C>>;

/// Put the same color word on every tree of `m`.
pub fn colorize<C: Clone + Ord>(m: &LinComb<Tree>, colors: &[C]) -> Result<Operator<C>> {
    let mut out = LinComb::zero();
    for (t, c) in m.iter() {
        out.add_scaled(&LinComb::basis(ColoredTree::new(t.clone(), colors.to_vec())?), c);
    }
    Ok(out)
}

/// Multilinear coloring: node `i` takes the formal combination `word[i]`.
pub fn colorize_with<C: Clone + Ord>(m: &LinComb<Tree>, word: &[LinComb<C>]) -> Result<Operator<C>> {
    let mut choices: Vec<(Vec<C>, BigInt)> = vec![(Vec::new(), BigInt::from(1))];
    for w in word {
        let mut next = Vec::with_capacity(choices.len() * w.len());
        for (cs, k) in &choices {
            for (c, kc) in w.iter() {
                let mut cs = cs.clone();
                cs.push(c.clone());
                next.push((cs, k * kc));
            }
        }
        choices = next;
    }
    let mut out = LinComb::zero();
    for (cs, k) in choices {
        out.add_scaled(&colorize(m, &cs)?, &k);
    }
    Ok(out)
}

/// The formal color `ŝ = s − s•`.
pub fn hat<C: Clone + Ord>(s: &C, base: &C) -> Result<LinComb<C>> {
    if s == base {
        return invalid("ŝ needs a color other than the basepoint");
    }
    Ok(LinComb::basis(s.clone()) - LinComb::basis(base.clone()))
}

/// `M_t(s_1, …, s_{n-1})`: the Möbius element of `t` carrying the colors.
pub fn m_op<C: Clone + Ord>(t: &Tree, colors: &[C]) -> Result<Operator<C>> {
    colorize(&moebius_elem(t), colors)
}

/// `M(s) = ·_s − ·_{s•}`.
pub fn mhat_op<C: Clone + Ord>(s: &C, base: &C) -> Result<Operator<C>> {
    let y = Tree::Leaf.wedge(&Tree::Leaf);
    colorize_with(&LinComb::basis(y), &[hat(s, base)?])
}

/// Operadic composition `op ∘ (args_1, …, args_n)` on the free algebra.
pub fn compose<C: Clone + Ord>(op: &Operator<C>, args: &[Operator<C>]) -> Result<Operator<C>> {
    act(op, args, &FreeMagmatic::new())
}

/// `w(ŝ_1, …)`: the binary operators `M(s_i)` composed along the shape of `w`.
pub fn binary_composite<C: Clone + Ord>(w: &Tree, colors: &[C], base: &C) -> Result<Operator<C>> {
    if colors.len() + 1 != w.leaves() {
        return invalid("one color per internal node");
    }
    match w.children() {
        None => Ok(LinComb::basis(ColoredTree::leaf())),
        Some((l, r)) => {
            let k = l.leaves();
            let left = binary_composite(l, &colors[..k - 1], base)?;
            let right = binary_composite(r, &colors[k..], base)?;
            compose(&mhat_op(&colors[k - 1], base)?, &[left, right])
        }
    }
}

/// `M_t(ŝ_1, …, ŝ_{n-1}) = Σ_w μ(w, t) w(ŝ_1, …)`, as compositions of the `M(s_i)`.
pub fn moebius_hat<C: Clone + Ord>(t: &Tree, colors: &[C], base: &C) -> Result<Operator<C>> {
    let mut out = LinComb::zero();
    for (w, mu) in moebius_elem(t).iter() {
        out.add_scaled(&binary_composite(w, colors, base)?, mu);
    }
    Ok(out)
}

fn require_non_base<C: PartialEq>(colors: &[C], base: &C) -> Result<()> {
    if colors.iter().any(|c| c == base) {
        return invalid("every color must differ from the basepoint");
    }
    Ok(())
}

/// `M_t(ŝ)` as compositions of the `M(s_i)`, and
/// `M_t(s) = Σ_{J ⊆ [n-1]} M_t(v_J)` with `v_i = s•` on `J` and `ŝ_i` off it.
pub fn formaelem_holds<C: Clone + Ord>(t: &Tree, colors: &[C], base: &C) -> Result<bool> {
    require_non_base(colors, base)?;
    let m = moebius_elem(t);
    let hats = colors.iter().map(|s| hat(s, base)).collect::<Result<Vec<_>>>()?;
    if colorize_with(&m, &hats)? != moebius_hat(t, colors, base)? {
        return Ok(false);
    }
    let mut sum = LinComb::zero();
    for mask in 0u32..1 << colors.len() {
        let word: Vec<LinComb<C>> = (0..colors.len())
            .map(|i| if mask >> i & 1 == 1 { LinComb::basis(base.clone()) } else { hats[i].clone() })
            .collect();
        sum += colorize_with(&m, &word)?;
    }
    Ok(sum == colorize(&m, colors)?)
}

/// The expansion read with plain colors in the correction terms:
/// `M_t(s) = M_t(ŝ) + Σ_{J ≠ ∅} M_t(w_J)`, `w_i = s•` on `J` and `s_i` off it.
pub fn formaelem_literal_holds<C: Clone + Ord>(t: &Tree, colors: &[C], base: &C) -> Result<bool> {
    require_non_base(colors, base)?;
    let m = moebius_elem(t);
    let hats = colors.iter().map(|s| hat(s, base)).collect::<Result<Vec<_>>>()?;
    let mut sum = colorize_with(&m, &hats)?;
    for mask in 1u32..1 << colors.len() {
        let word: Vec<C> = (0..colors.len())
            .map(|i| if mask >> i & 1 == 1 { base.clone() } else { colors[i].clone() })
            .collect();
        sum += colorize(&m, &word)?;
    }
    Ok(sum == colorize(&m, colors)?)
}

struct Spine {
    k: usize,
    slots: Vec<Tree>,
    offsets: Vec<usize>,
}

fn spine_of(t: &Tree) -> Spine {
    let slots: Vec<Tree> = t.right_spine().into_iter().cloned().collect();
    let mut offsets = Vec::with_capacity(slots.len());
    let mut l = 0;
    for s in &slots {
        offsets.push(l);
        l += s.leaves();
    }
    Spine { k: slots.len() + 1, slots, offsets }
}

fn comb_with(k: usize, slots: &[Tree]) -> Result<Tree> {
    let mut all = slots.to_vec();
    all.push(Tree::Leaf);
    comb_right(k)?.graft_all(&all)
}

/// `M_t(s) = M_{t[i ↦ |]}(s') ∘_{l+1} M_{t_i}(s_{l+1}, …, s_{l+m_i-1})` at
/// every spine slot `i`, and `M_t(s) = M_{1_k}(spine colors) ∘ (M_{t_1}, …, M_{t_{k-1}}, |)`.
pub fn generatingprods_a_holds<C: Clone + Ord>(t: &Tree, colors: &[C]) -> Result<bool> {
    let lhs = m_op(t, colors)?;
    let n = t.leaves();
    let sp = spine_of(t);
    let leaf = LinComb::basis(ColoredTree::leaf());
    for (i, ti) in sp.slots.iter().enumerate() {
        let (l, mi) = (sp.offsets[i], ti.leaves());
        let mut slots = sp.slots.clone();
        slots[i] = Tree::Leaf;
        let reduced = comb_with(sp.k, &slots)?;
        let outer = [&colors[..l], &colors[l + mi - 1..]].concat();
        let mut args = vec![leaf.clone(); n - mi + 1];
        args[l] = m_op(ti, &colors[l..l + mi - 1])?;
        if compose(&m_op(&reduced, &outer)?, &args)? != lhs {
            return Ok(false);
        }
    }
    let mut spine_colors = Vec::with_capacity(sp.k - 1);
    let mut args = Vec::with_capacity(sp.k);
    for (i, ti) in sp.slots.iter().enumerate() {
        let (l, mi) = (sp.offsets[i], ti.leaves());
        args.push(m_op(ti, &colors[l..l + mi - 1])?);
        spine_colors.push(colors[l + mi - 1].clone());
    }
    args.push(leaf);
    Ok(compose(&m_op(&comb_right(sp.k)?, &spine_colors)?, &args)? == lhs)
}

/// For every spine slot `t_i = w_1 ⋌ w_2` with `w_1` irreducible:
/// `M_t(s) = M_{t[i ↦ | ⋌ w_2]}(s') ∘_{l+1} M_{w_1}(s_{l+1}, …, s_{l+|w_1|-1})`.
pub fn generatingprods_b_holds<C: Clone + Ord>(t: &Tree, colors: &[C]) -> Result<bool> {
    let lhs = m_op(t, colors)?;
    let n = t.leaves();
    let sp = spine_of(t);
    let leaf = LinComb::basis(ColoredTree::leaf());
    for (i, ti) in sp.slots.iter().enumerate() {
        let fs = ti.factor_under();
        if fs.len() < 2 {
            continue;
        }
        let w1 = &fs[0];
        let w2 = fs[2..].iter().fold(fs[1].clone(), |acc, f| under(&acc, f));
        let (l, h) = (sp.offsets[i], w1.leaves());
        let mut slots = sp.slots.clone();
        slots[i] = under(&Tree::Leaf, &w2);
        let outer_tree = comb_with(sp.k, &slots)?;
        let outer = [&colors[..l], &colors[l + h - 1..]].concat();
        let mut args = vec![leaf.clone(); n - h + 1];
        args[l] = m_op(w1, &colors[l..l + h - 1])?;
        if compose(&m_op(&outer_tree, &outer)?, &args)? != lhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `{M(s) : s ≠ s•}` in arity 2 and `{M_t(s) : t ⋌-irreducible}` in arity ≥ 3.
pub fn full_family(n: usize, set: &ColorSet) -> Result<Vec<Operator<super::Color>>> {
    let base = set.base();
    match n {
        0 => invalid("operators have arity at least 1"),
        1 => Ok(Vec::new()),
        2 => set.non_base().iter().map(|s| mhat_op(s, &base)).collect(),
        _ => {
            let mut out = Vec::new();
            for t in enumerate(n)?.into_iter().filter(Tree::is_under_irreducible) {
                let m = moebius_elem(&t);
                for w in set.words(n - 1) {
                    out.push(colorize(&m, &w)?);
                }
            }
            Ok(out)
        }
    }
}

/// The restricted generators: `M(s)`; `M_{1_n}(s)` with some `s_i = s•`;
/// and `M_t` for `t = 1_k ∘ (|, t_2, …, t_{k-1}, |)` with every `t_j` either `|`
/// or `| ⋌ t_j'` whose first color is `s•`, some `|t_j'| > 1`.
pub fn hat_family(n: usize, set: &ColorSet) -> Result<Vec<Operator<super::Color>>> {
    hat_family_with(n, set, 3)
}

/// `hat_family` with the last condition weakened to "some `t_j ≠ |`", which
/// admits blocks `| ⋌ |` colored `(s•)`.
pub fn hat_family_relaxed(n: usize, set: &ColorSet) -> Result<Vec<Operator<super::Color>>> {
    hat_family_with(n, set, 2)
}

fn hat_family_with(n: usize, set: &ColorSet, min_block: usize) -> Result<Vec<Operator<super::Color>>> {
    let base = set.base();
    if n <= 2 {
        return full_family(n, set);
    }
    let mut out = Vec::new();
    let comb = moebius_elem(&comb_right(n)?);
    for w in set.words(n - 1) {
        if w.contains(&base) {
            out.push(colorize(&comb, &w)?);
        }
    }
    for parts in compositions(n - 2) {
        if !parts.iter().any(|&m| m >= min_block) {
            continue;
        }
        let k = parts.len() + 2;
        let mut blocks: Vec<Vec<Tree>> = vec![vec![Tree::Leaf]];
        for &m in &parts {
            let choices = if m == 1 {
                vec![Tree::Leaf]
            } else {
                enumerate(m - 1)?.iter().map(|x| under(&Tree::Leaf, x)).collect()
            };
            blocks = blocks
                .into_iter()
                .flat_map(|b| {
                    choices.iter().map(move |c| {
                        let mut b = b.clone();
                        b.push(c.clone());
                        b
                    })
                })
                .collect();
        }
        let mut forced = Vec::new();
        let mut idx = 1;
        for &m in &parts {
            if m >= 2 {
                forced.push(idx);
            }
            idx += m;
        }
        for slots in blocks {
            let t = comb_with(k, &slots)?;
            let m = moebius_elem(&t);
            for w in set.words(n - 1) {
                if forced.iter().all(|&p| w[p] == base) {
                    out.push(colorize(&m, &w)?);
                }
            }
        }
    }
    Ok(out)
}

/// Independent spanning sets, arity by arity up to `max_n`, of all
/// composites of the generators `gens(n)` with the identity `|`.
/// Entry `n` of the result holds arity `n`; entry 0 is empty.
pub fn span_closure<C: Clone + Ord>(
    gens: impl Fn(usize) -> Result<Vec<Operator<C>>>,
    max_n: usize,
) -> Result<Vec<Vec<Operator<C>>>> {
    let mut bases: Vec<Vec<Operator<C>>> = vec![Vec::new(), vec![LinComb::basis(ColoredTree::leaf())]];
    let gen_cache: Vec<Vec<Operator<C>>> = (0..=max_n).map(|n| if n == 0 { Ok(Vec::new()) } else { gens(n) }).collect::<Result<_>>()?;
    for n in 2..=max_n {
        let mut span = SpanBuilder::new();
        let mut basis = Vec::new();
        let mut add = |v: Operator<C>| {
            if span.insert(&v) {
                basis.push(v);
            }
        };
        for g in &gen_cache[n] {
            add(g.clone());
        }
        for r in 2..n {
            for parts in compositions(n).into_iter().filter(|p| p.len() == r) {
                let mut tuples: Vec<Vec<&Operator<C>>> = vec![Vec::new()];
                for &m in &parts {
                    tuples = tuples
                        .into_iter()
                        .flat_map(|tp| {
                            bases[m].iter().map(move |x| {
                                let mut tp = tp.clone();
                                tp.push(x);
                                tp
                            })
                        })
                        .collect();
                }
                for g in &gen_cache[r] {
                    for tp in &tuples {
                        let args: Vec<Operator<C>> = tp.iter().map(|x| (*x).clone()).collect();
                        add(compose(g, &args)?);
                    }
                }
            }
        }
        bases.push(basis);
    }
    Ok(bases)
}
