//! The map Ξ from ⊔-irreducible relations to primitive elements, and the
//! comb operators `M_{1_n}` evaluated on relations.

use rand::seq::SliceRandom;
use rand::SeedableRng;

use super::{enumerate_rels, is_sqcup_irreducible, left_factor, prod_alpha, sqcup_factor, AlphaMap, IntRel};
use crate::bialg::{coprod_red, is_primitive, primitive_kernel};
use crate::colored::{act, m_op, mhat_op, MagmaticAlgebra};
use crate::error::{invalid, Result};
use crate::linalg::{IntMatrix, LinComb, SpanBuilder};
use crate::trees::{comb_left, comb_right, Tree};

/// Relations with the products `∗_α`; the color `⊔` is the basepoint.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntRelAlgebra;

impl MagmaticAlgebra for IntRelAlgebra {
    type Color = AlphaMap;
    type Elem = IntRel;

    fn mul(&self, a: &AlphaMap, x: &IntRel, y: &IntRel) -> LinComb<IntRel> {
        LinComb::basis(prod_alpha(x, y, a))
    }
}

/// `Ξ(R)` for a ⊔-irreducible `R`.
pub fn xi(r: &IntRel) -> Result<LinComb<IntRel>> {
    if !is_sqcup_irreducible(r) {
        return invalid(format!("Ξ is defined on ⊔-irreducible relations, got {r}"));
    }
    let pt = LinComb::basis(IntRel::point());
    if r.size() == 1 {
        return Ok(pt);
    }
    let (alpha, rest) = left_factor(r)?;
    if is_sqcup_irreducible(&rest) {
        return act(&mhat_op(&alpha, &AlphaMap::Disjoint)?, &[pt, xi(&rest)?], &IntRelAlgebra);
    }
    let blocks = sqcup_factor(&rest);
    let q = blocks.len();
    let shape = Tree::Leaf.wedge(&comb_left(q)?);
    let mut colors = vec![alpha];
    colors.resize(q, AlphaMap::Disjoint);
    let mut args = vec![pt];
    for b in &blocks {
        args.push(xi(b)?);
    }
    act(&m_op(&shape, &colors)?, &args, &IntRelAlgebra)
}

/// `x = R + Σ b_P P` with every `P` a strict sub-relation of `R`.
pub fn xi_is_triangular(r: &IntRel, x: &LinComb<IntRel>) -> bool {
    x.coeff(r) == 1.into() && x.support().all(|p| p == r || p.is_strict_subset(r))
}

/// `dim ker Δ^red` in degree `n`.
pub fn rel_prim_dim(n: usize) -> Result<usize> {
    let rels = enumerate_rels(n)?;
    if n <= 3 {
        return Ok(primitive_kernel(&rels).len());
    }
    let images: Vec<_> = rels.iter().map(|r| coprod_red(&LinComb::basis(r.clone()))).collect();
    let (m, _) = IntMatrix::from_columns(&images);
    Ok(rels.len() - m.rank())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiBasisSummary {
    pub size: usize,
    pub irreducibles: usize,
    pub rank: usize,
    pub prim_dim: usize,
    /// First relation whose image is not primitive or not unitriangular.
    pub bad: Option<IntRel>,
}

impl XiBasisSummary {
    pub fn passed(&self) -> bool {
        self.bad.is_none() && self.rank == self.irreducibles && self.prim_dim == self.irreducibles
    }
}

/// Images of all irreducibles of size `n` against the primitive space.
pub fn xi_basis_check(n: usize) -> Result<XiBasisSummary> {
    let irr: Vec<IntRel> = enumerate_rels(n)?.into_iter().filter(is_sqcup_irreducible).collect();
    let mut span = SpanBuilder::new();
    let mut bad = None;
    for r in &irr {
        let x = xi(r)?;
        if bad.is_none() && !(is_primitive(&x) && xi_is_triangular(r, &x)) {
            bad = Some(r.clone());
        }
        span.insert(&x);
    }
    Ok(XiBasisSummary {
        size: n,
        irreducibles: irr.len(),
        rank: span.rank(),
        prim_dim: rel_prim_dim(n)?,
        bad,
    })
}

/// Primitivity and triangularity on `samples` random irreducibles of size `n`.
pub fn xi_sample_check(n: usize, samples: usize, seed: u64) -> Result<std::result::Result<usize, IntRel>> {
    let irr: Vec<IntRel> = enumerate_rels(n)?.into_iter().filter(is_sqcup_irreducible).collect();
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let picked: Vec<&IntRel> = irr.choose_multiple(&mut rng, samples).collect();
    for r in &picked {
        let x = xi(r)?;
        if !(is_primitive(&x) && xi_is_triangular(r, &x)) {
            return Ok(Err((*r).clone()));
        }
    }
    Ok(Ok(picked.len()))
}

/// `M_{1_n}(α_{n-1}, …, α_1)(R_n, …, R_1)`, arguments listed left to right.
pub fn lemma_vanishing_eval(alphas: &[AlphaMap], rels: &[IntRel]) -> Result<LinComb<IntRel>> {
    if rels.is_empty() || alphas.len() + 1 != rels.len() {
        return invalid("need n relations and n-1 colors");
    }
    let op = m_op(&comb_right(rels.len())?, alphas)?;
    let args: Vec<_> = rels.iter().map(|r| LinComb::basis(r.clone())).collect();
    act(&op, &args, &IntRelAlgebra)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VanishingOutcome {
    /// Predicted zero and zero.
    Zero,
    /// Leading term `R_n ∗ (… ∗ R_1)` with coefficient 1, the rest strict
    /// sub-relations with coefficients `±1`.
    Leading,
    /// Predicted zero, nonzero.
    NotZero(LinComb<IntRel>),
    /// Predicted unitriangular, not.
    NotLeading(LinComb<IntRel>),
}

/// Whether some `2 ≤ i < n` has `s(α_i) ≤ |R_i|`.
pub fn lemma_vanishing_predicts_zero(alphas: &[AlphaMap], rels: &[IntRel]) -> bool {
    let n = rels.len();
    (2..n).any(|i| alphas[n - 1 - i].size() <= rels[n - i].size())
}

/// Evaluate and compare with the predicted shape.
pub fn lemma_vanishing_check(alphas: &[AlphaMap], rels: &[IntRel]) -> Result<VanishingOutcome> {
    let got = lemma_vanishing_eval(alphas, rels)?;
    let n = rels.len();
    if lemma_vanishing_predicts_zero(alphas, rels) {
        return Ok(if got.is_zero() { VanishingOutcome::Zero } else { VanishingOutcome::NotZero(got) });
    }
    let lead = (1..n).fold(rels[n - 1].clone(), |acc, i| prod_alpha(&rels[n - 1 - i], &acc, &alphas[n - 1 - i]));
    let rest_ok = got
        .iter()
        .filter(|(p, _)| **p != lead)
        .all(|(p, c)| (*c == 1.into() || *c == (-1).into()) && p.is_strict_subset(&lead));
    Ok(if got.coeff(&lead) == 1.into() && rest_ok {
        VanishingOutcome::Leading
    } else {
        VanishingOutcome::NotLeading(got)
    })
}
