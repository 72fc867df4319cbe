use num_bigint::BigInt;

use super::{coprod_red, primitive_kernel, SplitBasis, UTensor, Unital};
use crate::error::{invalid, Result};
use crate::linalg::LinComb;
use crate::trees::{self, catalan, compositions, under, wedge, Tree};

pub type UTree = Unital<Tree>;

/// The coproduct on trees, computed by the wedge recursion
/// `Δ(t ⋎ w) = Σ t_(1) ⊗ (t_(2) ⋎ w) + Σ (t ⋎ w_(1)) ⊗ w_(2) − t ⊗ w`,
/// where the term `t ⊗ w` produced by both sums is kept once.
impl SplitBasis for Tree {
    fn degree(&self) -> usize {
        self.leaves()
    }

    fn splits(&self) -> Vec<(UTree, UTree)> {
        match self {
            Tree::Leaf => vec![(Unital::Unit, Unital::Elem(Tree::Leaf)), (Unital::Elem(Tree::Leaf), Unital::Unit)],
            Tree::Node(l, r) => {
                let ls = l.splits();
                let rs = r.splits();
                let n = ls.len() - 1;
                let mut out = Vec::with_capacity(ls.len() + rs.len() - 1);
                for (a, b) in ls.into_iter().take(n) {
                    let b = b.as_elem().expect("right part of a proper cut").clone();
                    out.push((a, Unital::Elem(wedge(b, (**r).clone()))));
                }
                out.push((Unital::Elem((**l).clone()), Unital::Elem((**r).clone())));
                for (a, b) in rs.into_iter().skip(1) {
                    let a = a.as_elem().expect("left part of a proper cut").clone();
                    out.push((Unital::Elem(wedge((**l).clone(), a)), b));
                }
                out
            }
        }
    }
}

/// `⋎` extended to the unit by `1 ⋎ w = w` and `t ⋎ 1 = t`.
pub fn wedge_unital(a: &UTree, b: &UTree) -> UTree {
    match (a, b) {
        (Unital::Unit, x) | (x, Unital::Unit) => x.clone(),
        (Unital::Elem(x), Unital::Elem(y)) => Unital::Elem(x.wedge(y)),
    }
}

/// `⋌` extended to the unit, which is its two-sided identity.
pub fn under_unital(a: &UTree, b: &UTree) -> UTree {
    match (a, b) {
        (Unital::Unit, x) | (x, Unital::Unit) => x.clone(),
        (Unital::Elem(x), Unital::Elem(y)) => Unital::Elem(under(x, y)),
    }
}

pub fn wedge_lin(x: &LinComb<Tree>, y: &LinComb<Tree>) -> LinComb<Tree> {
    x.bilinear(y, |a, b| LinComb::basis(a.wedge(b)))
}

pub fn under_lin(x: &LinComb<Tree>, y: &LinComb<Tree>) -> LinComb<Tree> {
    x.bilinear(y, |a, b| LinComb::basis(under(a, b)))
}

/// `x ∘_j w`, extended bilinearly; every tree of `x` needs at least `j` leaves.
pub fn graft_lin(x: &LinComb<Tree>, j: usize, w: &LinComb<Tree>) -> Result<LinComb<Tree>> {
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in w.iter() {
            out.add_term(a.graft(j, b)?, ca * cb);
        }
    }
    Ok(out)
}

/// `x ∘ (w_1, …, w_n)`, extended multilinearly.
pub fn graft_all_lin(x: &LinComb<Tree>, ws: &[LinComb<Tree>]) -> Result<LinComb<Tree>> {
    let mut tuples: Vec<(Vec<&Tree>, BigInt)> = vec![(Vec::new(), BigInt::from(1))];
    for w in ws {
        let mut next = Vec::with_capacity(tuples.len() * w.len());
        for (prefix, c) in &tuples {
            for (b, cb) in w.iter() {
                let mut p = prefix.clone();
                p.push(b);
                next.push((p, c * cb));
            }
        }
        tuples = next;
    }
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (args, c) in &tuples {
            let owned: Vec<Tree> = args.iter().map(|t| (*t).clone()).collect();
            out.add_term(a.graft_all(&owned)?, ca * c);
        }
    }
    Ok(out)
}

fn graft_unital(t: &UTree, j: usize, w: &Tree) -> UTree {
    match t {
        Unital::Unit => Unital::Unit,
        Unital::Elem(t) => Unital::Elem(t.graft(j, w).expect("graft position checked")),
    }
}

fn graft_all_unital(t: &UTree, ws: &[Tree]) -> UTree {
    match t {
        Unital::Unit => Unital::Unit,
        Unital::Elem(t) => Unital::Elem(t.graft_all(ws).expect("arity checked")),
    }
}

/// Right-hand side of the formula for `Δ(t ∘_k w)`:
/// `Σ_{i<k} t_(1)^i ⊗ (t_(2)^i ∘_{k-i} w) + Σ (t_(1)^k ∘_k w̄_(1)) ⊗ (t_(2)^{k-1} ∘_1 w̄_(2))
///  + Σ_{i≥k} (t_(1)^i ∘_k w) ⊗ t_(2)^i`, with `w̄` the reduced coproduct.
pub fn coprod_of_graft(t: &Tree, k: usize, w: &Tree) -> Result<UTensor<Tree>> {
    let n = t.leaves();
    if k == 0 || k > n {
        return invalid(format!("graft position {k} outside 1..={n}"));
    }
    let s = t.splits();
    let mut out = LinComb::zero();
    for (i, (a, b)) in s.iter().enumerate().take(k) {
        out.add_term((a.clone(), graft_unital(b, k - i, w)), 1);
    }
    for ((a, b), c) in coprod_red(&LinComb::basis(w.clone())).iter() {
        let left = graft_unital(&s[k].0, k, a);
        let right = graft_unital(&s[k - 1].1, 1, b);
        out.add_term((left, right), c.clone());
    }
    for (a, b) in s.iter().skip(k) {
        out.add_term((graft_unital(a, k, w), b.clone()), 1);
    }
    Ok(out)
}

/// Right-hand side of the formula for `Δ(t ∘ (w_1, …, w_n))` in terms of the
/// splittings of `t`, its `δ`, and the reduced coproducts of the `w_j`.
pub fn coprod_of_graft_all(t: &Tree, ws: &[Tree]) -> Result<UTensor<Tree>> {
    let n = t.leaves();
    if ws.len() != n {
        return invalid(format!("graft_all needs {n} trees, got {}", ws.len()));
    }
    let s = t.splits();
    let mut out = LinComb::zero();
    for (i, (a, b)) in s.iter().enumerate() {
        out.add_term((graft_all_unital(a, &ws[..i]), graft_all_unital(b, &ws[i..])), 1);
    }
    for j in 1..=n {
        let left_shape = &s[j].0;
        let right_shape = &s[j - 1].1;
        for ((a, b), c) in coprod_red(&LinComb::basis(ws[j - 1].clone())).iter() {
            let mut left_args = ws[..j - 1].to_vec();
            left_args.push(a.clone());
            let mut right_args = vec![b.clone()];
            right_args.extend_from_slice(&ws[j..]);
            let pair = (graft_all_unital(left_shape, &left_args), graft_all_unital(right_shape, &right_args));
            out.add_term(pair, c.clone());
        }
    }
    Ok(out)
}

/// The Möbius elements of the `⋌`-irreducible trees with `n` leaves.
pub fn primitive_basis(n: usize) -> Result<Vec<LinComb<Tree>>> {
    Ok(trees::enumerate(n)?
        .into_iter()
        .filter(Tree::is_under_irreducible)
        .map(|t| super::moebius_elem(&t))
        .collect())
}

/// Dimension of the primitive elements of degree `n`, as a kernel dimension.
pub fn prim_dim(n: usize) -> Result<usize> {
    Ok(primitive_kernel(&trees::enumerate(n)?).len())
}

/// Whether `Catalan(n-1) = Σ_{compositions c of n} Π prim_dim(c_i)`.
pub fn cotensor_dim_check(n: usize, prim_dims: &[usize]) -> Result<bool> {
    if n == 0 || prim_dims.len() < n {
        return invalid("need primitive dimensions for every degree up to n");
    }
    let total: u128 = compositions(n)
        .iter()
        .map(|c| c.iter().map(|&k| prim_dims[k - 1] as u128).product::<u128>())
        .sum();
    Ok(total == catalan(n - 1))
}

#[cfg(test)]
mod tests {
    use super::super::{coassociativity_defect, coprod, coprod_basis, coprod_iter, coprod_red_unital, delta, delta_unital};
    use super::*;
    use crate::trees::enumerate;

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    fn e(s: &str) -> UTree {
        Unital::Elem(t(s))
    }

    /// Oracle: the sub-tree spanned by the leaves `lo..=hi`, with unary
    /// vertices suppressed.
    fn restrict_leaves(x: &Tree, first: usize, lo: usize, hi: usize) -> Option<Tree> {
        match x {
            Tree::Leaf => (lo..=hi).contains(&first).then_some(Tree::Leaf),
            Tree::Node(l, r) => {
                let a = restrict_leaves(l, first, lo, hi);
                let b = restrict_leaves(r, first + l.leaves(), lo, hi);
                match (a, b) {
                    (Some(a), Some(b)) => Some(wedge(a, b)),
                    (a, b) => a.or(b),
                }
            }
        }
    }

    fn to_unital(x: Option<Tree>) -> UTree {
        x.map_or(Unital::Unit, Unital::Elem)
    }

    #[test]
    fn splits_agree_with_leaf_restriction() {
        for n in 1..=7 {
            for x in enumerate(n).unwrap() {
                let s = x.splits();
                assert_eq!(s.len(), n + 1);
                for (i, (a, b)) in s.iter().enumerate() {
                    assert_eq!(*a, to_unital(restrict_leaves(&x, 1, 1, i)));
                    assert_eq!(*b, to_unital(restrict_leaves(&x, 1, i + 1, n)));
                    assert_eq!(a.degree(), i);
                    assert_eq!(b.degree(), n - i);
                }
            }
        }
    }

    #[test]
    fn wedge_recursion_literal_form() {
        for n in 1..=4 {
            for x in enumerate(n).unwrap() {
                for m in 1..=4 {
                    for y in enumerate(m).unwrap() {
                        let dx = coprod(&LinComb::basis(x.clone()));
                        let dy = coprod(&LinComb::basis(y.clone()));
                        let uy = Unital::Elem(y.clone());
                        let ux = Unital::Elem(x.clone());
                        let mut rhs = dx.map_basis(|(a, b)| (a.clone(), wedge_unital(b, &uy)));
                        rhs += dy.map_basis(|(a, b)| (wedge_unital(&ux, a), b.clone()));
                        rhs -= &LinComb::basis((ux.clone(), uy.clone()));
                        assert_eq!(coprod(&LinComb::basis(x.wedge(&y))), rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn coproduct_examples() {
        let unit = LinComb::basis(Unital::<Tree>::Unit);
        assert_eq!(coprod_basis(&Unital::<Tree>::Unit), LinComb::basis((Unital::Unit, Unital::Unit)));
        assert_eq!(super::super::coprod_unital(&unit).len(), 1);
        let leaf = coprod(&LinComb::basis(Tree::Leaf));
        let expected: UTensor<Tree> =
            LinComb::basis((Unital::Unit, e("|"))) + LinComb::basis((e("|"), Unital::Unit));
        assert_eq!(leaf, expected);
        let y = coprod(&LinComb::basis(t("(||)")));
        let expected = LinComb::basis((Unital::Unit, e("(||)")))
            + LinComb::basis((e("|"), e("|")))
            + LinComb::basis((e("(||)"), Unital::Unit));
        assert_eq!(y, expected);
        assert!(coprod_red_unital(&unit).is_err());
    }

    #[test]
    fn coassociative_and_counital() {
        for n in 1..=7 {
            for x in enumerate(n).unwrap() {
                assert!(coassociativity_defect(&x).is_zero(), "{x}");
                let d = coprod(&LinComb::basis(x.clone()));
                let left: LinComb<UTree> = d.filter(|(a, _)| a.is_unit()).map_basis(|(_, b)| b.clone());
                let right: LinComb<UTree> = d.filter(|(_, b)| b.is_unit()).map_basis(|(a, _)| a.clone());
                assert_eq!(left, LinComb::basis(Unital::Elem(x.clone())));
                assert_eq!(right, LinComb::basis(Unital::Elem(x.clone())));
            }
        }
    }

    #[test]
    fn iterated_coproduct_counts() {
        let x = LinComb::basis(Unital::Elem(t("((||)(||))")));
        // compositions of 4 into k+1 weak parts
        assert_eq!(coprod_iter(&x, 1).unwrap().len(), 5);
        assert_eq!(coprod_iter(&x, 2).unwrap().len(), 15);
        assert!(coprod_iter(&x, 0).is_err());
    }

    #[test]
    fn delta_shape() {
        let leaf = LinComb::basis(Tree::Leaf);
        assert_eq!(delta(&leaf), LinComb::basis((Tree::Leaf, Tree::Leaf)));
        for n in 1..=6 {
            for x in enumerate(n).unwrap() {
                let d = delta(&LinComb::basis(x.clone()));
                assert_eq!(d.len(), n);
                let mut degs: Vec<(usize, usize)> = d.support().map(|(a, b)| (a.leaves(), b.leaves())).collect();
                degs.sort_unstable();
                let expected: Vec<(usize, usize)> = (0..n).map(|i| (i + 1, n - i)).collect();
                assert_eq!(degs, expected);
            }
        }
        assert!(delta_unital(&LinComb::basis(Unital::<Tree>::Unit)).is_err());
    }

    #[test]
    fn graft_coproduct_formulas() {
        for n in 1..=4 {
            for x in enumerate(n).unwrap() {
                for m in 1..=3 {
                    for w in enumerate(m).unwrap() {
                        for k in 1..=n {
                            let lhs = coprod(&LinComb::basis(x.graft(k, &w).unwrap()));
                            assert_eq!(lhs, coprod_of_graft(&x, k, &w).unwrap(), "{x} ∘_{k} {w}");
                        }
                    }
                }
            }
        }
        assert!(coprod_of_graft(&Tree::Leaf, 2, &Tree::Leaf).is_err());
    }

    #[test]
    fn graft_all_coproduct_formula() {
        let pool: Vec<Tree> = (1..=3).flat_map(|m| enumerate(m).unwrap()).collect();
        for n in 1..=3 {
            for x in enumerate(n).unwrap() {
                let mut tuples: Vec<Vec<Tree>> = vec![Vec::new()];
                for _ in 0..n {
                    tuples = tuples
                        .into_iter()
                        .flat_map(|tp| {
                            pool.iter().map(move |p| {
                                let mut v = tp.clone();
                                v.push(p.clone());
                                v
                            })
                        })
                        .collect();
                }
                for ws in tuples {
                    let lhs = coprod(&LinComb::basis(x.graft_all(&ws).unwrap()));
                    assert_eq!(lhs, coprod_of_graft_all(&x, &ws).unwrap());
                }
            }
        }
    }

    #[test]
    fn linear_grafting() {
        let y = LinComb::basis(t("(||)"));
        let l = LinComb::basis(Tree::Leaf);
        let diff = &y - &l;
        let g = graft_all_lin(&y, &[diff.clone(), l.clone()]).unwrap();
        assert_eq!(g, LinComb::basis(t("((||)|)")) - LinComb::basis(t("(||)")));
        assert_eq!(graft_lin(&y, 1, &y).unwrap(), LinComb::basis(t("((||)|)")));
        assert!(graft_lin(&y, 3, &y).is_err());
        assert_eq!(wedge_lin(&l, &l), y);
        assert_eq!(under_lin(&l, &l), y);
    }

    #[test]
    fn unital_products() {
        let u = Unital::Unit;
        assert_eq!(wedge_unital(&u, &e("(||)")), e("(||)"));
        assert_eq!(under_unital(&e("|"), &u), e("|"));
        assert_eq!(under_unital(&e("|"), &e("|")), e("(||)"));
    }
}
