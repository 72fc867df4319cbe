//! Möbius elements `M_t = Σ_{w ≤ t} μ(w, t) w` of the Tamari order.

use super::tree_coalg::{graft_all_lin, under_lin, wedge_lin, UTree};
use super::Unital;
use crate::error::Result;
use crate::linalg::LinComb;
use crate::order::tamari;
use crate::trees::{comb_left, comb_right, under, Tree};

/// `M_t` straight from the Möbius function of the Tamari lattice.
pub fn moebius_elem_oracle(t: &Tree) -> Result<LinComb<Tree>> {
    let p = tamari(t.leaves())?;
    let top = p.index_of(t).expect("every tree belongs to its Tamari lattice");
    Ok(p.mobius_to(top)
        .iter()
        .map(|&(w, mu)| (p.element(w).clone(), mu.into()))
        .collect())
}

/// `M_{1_n}` by `M_{1_n} = | ⋎ M_{1_{n-1}} − | ⋌ M_{1_{n-1}}` from `M_{1_2} = (| |)`.
pub fn moebius_comb_right(n: usize) -> Result<LinComb<Tree>> {
    let first = comb_right(n)?;
    if n <= 2 {
        return Ok(LinComb::basis(first));
    }
    let leaf = LinComb::basis(Tree::Leaf);
    let prev = moebius_comb_right(n - 1)?;
    Ok(wedge_lin(&leaf, &prev) - under_lin(&leaf, &prev))
}

/// `M_{1_n} = Σ_{i=1}^{n-1} (−1)^{i-1} 0_i ⋎ M_{1_{n-i}}`.
pub fn moebius_comb_right_alternating(n: usize) -> Result<LinComb<Tree>> {
    if n == 1 {
        return Ok(LinComb::basis(Tree::Leaf));
    }
    let mut out = LinComb::zero();
    for i in 1..n {
        let term = wedge_lin(&LinComb::basis(comb_left(i)?), &moebius_comb_right(n - i)?);
        if i % 2 == 1 {
            out += term;
        } else {
            out -= term;
        }
    }
    Ok(out)
}

/// `M_t` from the right spine `t = 1_r ∘ (t_1, …, t_{r-1}, |)`:
/// `M_t = M_{1_r} ∘ (M_{t_1}, …, M_{t_{r-1}}, |)`.
pub fn moebius_elem(t: &Tree) -> LinComb<Tree> {
    let spine = t.right_spine();
    let r = spine.len() + 1;
    let comb = moebius_comb_right(r).expect("r ≥ 1");
    if spine.iter().all(|x| x.is_leaf()) {
        return comb;
    }
    let mut args: Vec<LinComb<Tree>> = spine.into_iter().map(moebius_elem).collect();
    args.push(LinComb::basis(Tree::Leaf));
    graft_all_lin(&comb, &args).expect("arity matches the spine")
}

/// `M_t = M_{t_1} ⋌ … ⋌ M_{t_k}` over the `⋌`-factorisation of `t`.
pub fn moebius_by_factors(t: &Tree) -> LinComb<Tree> {
    let fs = t.factor_under();
    let mut acc = moebius_elem(&fs[0]);
    for f in &fs[1..] {
        acc = under_lin(&acc, &moebius_elem(f));
    }
    acc
}

/// All pairs `(z_1, z_2)`, units allowed, with `z_1 ⋌ z_2 = t`.
pub fn under_splittings(t: &Tree) -> Vec<(UTree, UTree)> {
    let fs = t.factor_under();
    let prod = |part: &[Tree]| -> UTree {
        match part.split_first() {
            None => Unital::Unit,
            Some((first, rest)) => Unital::Elem(rest.iter().fold(first.clone(), |acc, f| under(&acc, f))),
        }
    };
    (0..=fs.len()).map(|k| (prod(&fs[..k]), prod(&fs[k..]))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::tamari_leq;
    use crate::trees::enumerate;

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    #[test]
    fn small_moebius_elements() {
        assert_eq!(moebius_comb_right(2).unwrap(), LinComb::basis(t("(||)")));
        let m3 = LinComb::basis(comb_right(3).unwrap()) - LinComb::basis(comb_left(3).unwrap());
        assert_eq!(moebius_comb_right(3).unwrap(), m3);
        assert_eq!(moebius_elem(&t("(|(||))")), m3);
        for n in 1..=6 {
            assert_eq!(moebius_elem(&comb_left(n).unwrap()), LinComb::basis(comb_left(n).unwrap()));
        }
    }

    #[test]
    fn routes_agree_with_the_oracle() {
        for n in 1..=7 {
            assert_eq!(moebius_comb_right(n).unwrap(), moebius_comb_right_alternating(n).unwrap());
            for x in enumerate(n).unwrap() {
                let oracle = moebius_elem_oracle(&x).unwrap();
                assert_eq!(moebius_elem(&x), oracle, "{x}");
                assert_eq!(moebius_by_factors(&x), oracle, "{x}");
            }
        }
    }

    #[test]
    fn unitriangular() {
        for n in 1..=6 {
            for x in enumerate(n).unwrap() {
                let m = moebius_elem(&x);
                assert_eq!(m.coeff(&x), 1.into());
                for w in m.support() {
                    assert!(tamari_leq(w, &x).unwrap());
                }
            }
        }
    }

    #[test]
    fn splittings_match_brute_force() {
        let small: Vec<Tree> = (1..=4).flat_map(|n| enumerate(n).unwrap()).collect();
        for x in enumerate(5).unwrap() {
            let found = under_splittings(&x);
            let inner: Vec<(UTree, UTree)> = found[1..found.len() - 1].to_vec();
            let mut brute: Vec<(UTree, UTree)> = small
                .iter()
                .flat_map(|a| small.iter().map(move |b| (a, b)))
                .filter(|(a, b)| under(a, b) == x)
                .map(|(a, b)| (Unital::Elem(a.clone()), Unital::Elem(b.clone())))
                .collect();
            brute.sort();
            let mut inner_sorted = inner;
            inner_sorted.sort();
            assert_eq!(inner_sorted, brute);
        }
        assert_eq!(under_splittings(&comb_left(3).unwrap()).len(), 4);
    }
}
