//! Graded coalgebras whose coproduct cuts a basis element in every position,
//! instantiated on planar binary trees.
//!
//! A basis element `b` of degree `n` has `n + 1` splittings
//! `b = b_(1)^i ⊗ b_(2)^i`, `0 ≤ i ≤ n`, with `deg b_(1)^i = i`. The empty
//! factor is the formal unit [`Unital::Unit`].

mod checks;
mod moebius;
mod tree_coalg;

pub use checks::{coalgebra_laws, moebius_routes, primitive_checks, verify_as};
pub use moebius::{
    moebius_by_factors, moebius_comb_right, moebius_comb_right_alternating, moebius_elem,
    moebius_elem_oracle, under_splittings,
};
pub use tree_coalg::{
    coprod_of_graft, coprod_of_graft_all, cotensor_dim_check, graft_all_lin, graft_lin, prim_dim,
    primitive_basis, under_lin, under_unital, wedge_lin, wedge_unital, UTree,
};

use std::fmt;
use std::hash::Hash;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{invalid, Result};
use crate::linalg::{kernel_of_map, LinComb, Tensor2};

/// A basis element or the formal unit of degree 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Unital<T> {
    Unit,
    Elem(T),
}

impl<T> Unital<T> {
    pub fn as_elem(&self) -> Option<&T> {
        match self {
            Unital::Unit => None,
            Unital::Elem(t) => Some(t),
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Unital::Unit)
    }
}

impl<T: SplitBasis> Unital<T> {
    pub fn degree(&self) -> usize {
        self.as_elem().map_or(0, SplitBasis::degree)
    }
}

impl<T: fmt::Display> fmt::Display for Unital<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unital::Unit => f.write_str("1"),
            Unital::Elem(t) => t.fmt(f),
        }
    }
}

impl<T: Serialize> Serialize for Unital<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_elem().serialize(s)
    }
}

/// A graded basis with a deconcatenation-type coproduct.
pub trait SplitBasis: Clone + Ord {
    fn degree(&self) -> usize;

    /// The `degree() + 1` splittings, ordered by the degree of the left factor.
    fn splits(&self) -> Vec<(Unital<Self>, Unital<Self>)>;
}

pub type UTensor<B> = Tensor2<Unital<B>, Unital<B>>;

/// Tensors with any number of factors, used for iterated coproducts.
pub type TensorN<B> = LinComb<Vec<Unital<B>>>;

pub fn coprod_basis<B: SplitBasis>(b: &Unital<B>) -> UTensor<B> {
    match b {
        Unital::Unit => LinComb::basis((Unital::Unit, Unital::Unit)),
        Unital::Elem(x) => x.splits().into_iter().map(|p| (p, 1.into())).collect(),
    }
}

pub fn coprod<B: SplitBasis>(x: &LinComb<B>) -> UTensor<B> {
    x.map_linear(|b| coprod_basis(&Unital::Elem(b.clone())))
}

pub fn coprod_unital<B: SplitBasis>(x: &LinComb<Unital<B>>) -> UTensor<B> {
    x.map_linear(coprod_basis)
}

/// The reduced coproduct, dropping the two splittings with a unit factor.
pub fn coprod_red<B: SplitBasis>(x: &LinComb<B>) -> Tensor2<B, B> {
    x.map_linear(|b| {
        let s = b.splits();
        s[1..s.len() - 1]
            .iter()
            .map(|(l, r)| {
                let pair = (l.as_elem().expect("inner split").clone(), r.as_elem().expect("inner split").clone());
                (pair, 1.into())
            })
            .collect()
    })
}

/// Reduced coproduct of an element that may mention the unit; the unit
/// component must vanish.
pub fn coprod_red_unital<B: SplitBasis>(x: &LinComb<Unital<B>>) -> Result<Tensor2<B, B>> {
    if !x.coeff(&Unital::Unit).is_zero() {
        return invalid("reduced coproduct needs a zero unit component");
    }
    Ok(coprod_red(&x.map_basis(|b| b.as_elem().expect("unit filtered").clone())))
}

pub fn is_primitive<B: SplitBasis>(x: &LinComb<B>) -> bool {
    coprod_red(x).is_zero()
}

/// The iterated coproduct with `k + 1` tensor factors (`k = 1` is `Δ`).
pub fn coprod_iter<B: SplitBasis>(x: &LinComb<Unital<B>>, k: usize) -> Result<TensorN<B>> {
    if k == 0 {
        return invalid("iterated coproduct needs at least one application");
    }
    let mut cur: TensorN<B> = x.map_basis(|b| vec![b.clone()]);
    for _ in 0..k {
        cur = cur.map_linear(|word| {
            let (first, rest) = word.split_first().expect("nonempty tensor word");
            coprod_basis(first).map_basis(|(a, b)| {
                let mut w = vec![a.clone(), b.clone()];
                w.extend(rest.iter().cloned());
                w
            })
        });
    }
    Ok(cur)
}

/// `(Δ ⊗ id) Δ (b) − (id ⊗ Δ) Δ (b)`.
pub fn coassociativity_defect<B: SplitBasis>(b: &B) -> LinComb<(Unital<B>, Unital<B>, Unital<B>)> {
    let d = coprod(&LinComb::basis(b.clone()));
    let left = d.map_linear(|(x, y)| coprod_basis(x).map_basis(|(a, c)| (a.clone(), c.clone(), y.clone())));
    let right = d.map_linear(|(x, y)| coprod_basis(y).map_basis(|(a, c)| (x.clone(), a.clone(), c.clone())));
    left - right
}

/// `δ(b) = Σ_{i=0}^{n-1} b_(1)^{i+1} ⊗ b_(2)^i`: cuts sharing one leaf.
pub fn delta_basis<B: SplitBasis>(b: &B) -> Vec<(B, B)> {
    let s = b.splits();
    (0..b.degree())
        .map(|i| {
            let l = s[i + 1].0.as_elem().expect("left part of positive degree").clone();
            let r = s[i].1.as_elem().expect("right part of positive degree").clone();
            (l, r)
        })
        .collect()
}

pub fn delta<B: SplitBasis>(x: &LinComb<B>) -> Tensor2<B, B> {
    x.map_linear(|b| delta_basis(b).into_iter().map(|p| (p, 1.into())).collect())
}

pub fn delta_unital<B: SplitBasis>(x: &LinComb<Unital<B>>) -> Result<Tensor2<B, B>> {
    if x.support().any(Unital::is_unit) {
        return invalid("δ is not defined on the unit");
    }
    Ok(delta(&x.map_basis(|b| b.as_elem().expect("no unit").clone())))
}

/// Whether `Δ(x·y) = Σ x_(1) ⊗ (x_(2)·y) + Σ (x·y_(1)) ⊗ y_(2) − x ⊗ y`, for a
/// product given on basis elements and extended with `1·z = z·1 = z`.
pub fn unital_infinitesimal_holds<B: SplitBasis>(x: &B, y: &B, op: impl Fn(&B, &B) -> LinComb<B>) -> bool {
    let uop = |a: &Unital<B>, b: &Unital<B>| -> LinComb<Unital<B>> {
        match (a, b) {
            (Unital::Unit, z) | (z, Unital::Unit) => LinComb::basis(z.clone()),
            (Unital::Elem(a), Unital::Elem(b)) => op(a, b).map_basis(|z| Unital::Elem(z.clone())),
        }
    };
    let ux = Unital::Elem(x.clone());
    let uy = Unital::Elem(y.clone());
    let lhs = coprod_unital(&uop(&ux, &uy));
    let mut rhs: UTensor<B> = LinComb::zero();
    for ((a, b), c) in coprod_basis(&ux).iter() {
        rhs.add_scaled(&uop(b, &uy).map_basis(|z| (a.clone(), z.clone())), c);
    }
    for ((a, b), c) in coprod_basis(&uy).iter() {
        rhs.add_scaled(&uop(&ux, a).map_basis(|z| (z.clone(), b.clone())), c);
    }
    rhs -= &LinComb::basis((ux, uy));
    lhs == rhs
}

/// A basis of the primitive elements among `basis` (all of one degree).
pub fn primitive_kernel<B: SplitBasis + Hash>(basis: &[B]) -> Vec<LinComb<B>> {
    kernel_of_map(basis, |b| coprod_red(&LinComb::basis(b.clone())))
}
