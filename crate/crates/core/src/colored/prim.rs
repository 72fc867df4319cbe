//! Primitive elements of the colored coalgebra and the generating set `I_n^S`.

use std::collections::HashSet;

use super::ops::{colorize, compose, mhat_op, Operator};
use super::{Color, ColorSet, ColoredTree};
use crate::bialg::{is_primitive, moebius_elem, primitive_kernel};
use crate::error::{invalid, Error, Result};
use crate::linalg::{span_rank, LinComb};
use crate::trees::{catalan, comb_left, compositions, enumerate, Tree};

/// Largest color set used by the exhaustive suites.
pub const MAX_SUITE_COLORS: usize = 3;
/// Largest degree used by the exhaustive suites.
pub const MAX_SUITE_DEGREE: usize = 5;
/// Largest number of colored trees enumerated in one degree.
pub const MAX_COLORED_BASIS: usize = 5000;

fn basis_size(n: usize, set: &ColorSet) -> Option<usize> {
    let k = (set.size() as u128).checked_pow(n.checked_sub(1)? as u32)?;
    usize::try_from(k.checked_mul(catalan(n - 1))?).ok()
}

/// All colored trees with `n` leaves: shapes in enumeration order, then color words.
pub fn enumerate_colored(n: usize, set: &ColorSet) -> Result<Vec<ColoredTree<Color>>> {
    if n == 0 {
        return invalid("colored trees have at least one leaf");
    }
    let size = basis_size(n, set).unwrap_or(usize::MAX);
    if size > MAX_COLORED_BASIS {
        return Err(Error::ResourceLimit { what: "colored basis size", value: size, limit: MAX_COLORED_BASIS });
    }
    let words = set.words(n - 1);
    let mut out = Vec::with_capacity(size);
    for t in enumerate(n)? {
        for w in &words {
            out.push(ColoredTree::new(t.clone(), w.clone())?);
        }
    }
    Ok(out)
}

/// A basis of the kernel of the reduced coproduct in degree `n`.
pub fn colored_prim_basis(n: usize, set: &ColorSet) -> Result<Vec<Operator<Color>>> {
    Ok(primitive_kernel(&enumerate_colored(n, set)?))
}

pub fn colored_prim_dim(n: usize, set: &ColorSet) -> Result<usize> {
    Ok(colored_prim_basis(n, set)?.len())
}

fn check_suite_bounds(n: usize, set: &ColorSet) -> Result<()> {
    if n > MAX_SUITE_DEGREE {
        return Err(Error::ResourceLimit { what: "colored degree", value: n, limit: MAX_SUITE_DEGREE });
    }
    if set.size() > MAX_SUITE_COLORS {
        return Err(Error::ResourceLimit { what: "color set size", value: set.size(), limit: MAX_SUITE_COLORS });
    }
    Ok(())
}

/// The sets `I_1^S, …, I_{max_n}^S`; entry `n` holds degree `n`, entry 0 is empty.
/// Duplicates are removed; members need not be independent.
pub fn gen_in(max_n: usize, set: &ColorSet) -> Result<Vec<Vec<Operator<Color>>>> {
    check_suite_bounds(max_n, set)?;
    let leaf = LinComb::basis(ColoredTree::leaf());
    let mut levels: Vec<Vec<Operator<Color>>> = vec![Vec::new(), vec![leaf]];
    if max_n >= 2 {
        let hats = set.non_base().iter().map(|s| mhat_op(s, &set.base())).collect::<Result<Vec<_>>>()?;
        levels.push(hats);
    }
    for n in 3..=max_n {
        let mut seen = HashSet::new();
        let mut level = Vec::new();
        let mut push = |v: Operator<Color>| {
            if !v.is_zero() && seen.insert(v.clone()) {
                level.push(v);
            }
        };
        for t in enumerate(n)?.into_iter().filter(Tree::is_under_irreducible) {
            let m = moebius_elem(&t);
            for w in set.words(n - 1) {
                push(colorize(&m, &w)?);
            }
        }
        for r in 2..n {
            for parts in compositions(n).into_iter().filter(|p| p.len() == r) {
                let mut tuples: Vec<Vec<&Operator<Color>>> = vec![Vec::new()];
                for &m in &parts {
                    tuples = tuples
                        .into_iter()
                        .flat_map(|tp| {
                            levels[m].iter().map(move |x| {
                                let mut tp = tp.clone();
                                tp.push(x);
                                tp
                            })
                        })
                        .collect();
                }
                for x in &levels[r] {
                    for tp in &tuples {
                        let args: Vec<Operator<Color>> = tp.iter().map(|w| (*w).clone()).collect();
                        push(compose(x, &args)?);
                    }
                }
            }
        }
        levels.push(level);
    }
    Ok(levels)
}

/// `Σ_{compositions (c_i) of n} Π dims[c_i]`.
fn cotensor_count(n: usize, dims: &[usize]) -> u128 {
    compositions(n)
        .iter()
        .map(|c| c.iter().map(|&m| dims[m - 1] as u128).product::<u128>())
        .sum()
}

/// Every member of `I_m^S` is primitive and spans the primitives, and
/// `|S|^{m-1} C_{m-1} = Σ_{compositions} Π dim Prim`, for all `m ≤ n`.
pub fn structure_check(n: usize, set: &ColorSet) -> Result<bool> {
    let levels = gen_in(n, set)?;
    let mut dims = Vec::with_capacity(n);
    for m in 1..=n {
        let dim = colored_prim_dim(m, set)?;
        dims.push(dim);
        if !levels[m].iter().all(is_primitive) || span_rank(&levels[m]) != dim {
            return Ok(false);
        }
        let total = basis_size(m, set).expect("bounded by the suite limits") as u128;
        if cotensor_count(m, &dims) != total {
            return Ok(false);
        }
    }
    Ok(true)
}

fn first_step_factor(k: usize, s: Color, base: Color) -> Result<Operator<Color>> {
    match k {
        1 => Ok(LinComb::basis(ColoredTree::leaf())),
        2 => mhat_op(&s, &base),
        _ => {
            let t = Tree::Leaf.wedge(&comb_left(k - 1)?);
            let mut colors = vec![base; k - 1];
            colors[0] = s;
            colorize(&moebius_elem(&t), &colors)
        }
    }
}

/// `(| ⋎ 0_n, (s, s•, …, s•)) = Σ_{j=1}^{n+1} (0_j, (s•, …)) ∘_1 (M^{n+2-j}, (s, s•, …))`.
pub fn lemma_firststep_check(n: usize, s: Color, set: &ColorSet) -> Result<bool> {
    let base = set.base();
    if s == base {
        return invalid("the first-step identity needs a color other than the basepoint");
    }
    if !set.contains(s) || n == 0 {
        return invalid("color outside the set or n = 0");
    }
    let mut colors = vec![base; n];
    colors[0] = s;
    let lhs = LinComb::basis(ColoredTree::new(Tree::Leaf.wedge(&comb_left(n)?), colors)?);
    let leaf = LinComb::basis(ColoredTree::leaf());
    let mut rhs = LinComb::zero();
    for j in 1..=n + 1 {
        let outer = LinComb::basis(ColoredTree::uniform(comb_left(j)?, base));
        let mut args = vec![leaf.clone(); j];
        args[0] = first_step_factor(n + 2 - j, s, base)?;
        rhs += compose(&outer, &args)?;
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialg::prim_dim;
    use crate::colored::cwedge;

    fn y(c: Color) -> ColoredTree<Color> {
        cwedge(&ColoredTree::leaf(), &c, &ColoredTree::leaf())
    }

    /// Oracle: `P = T / (1 + T)` for `T = Σ k^{n-1} C_{n-1} x^n`.
    fn series_dims(k: u64, max_n: usize) -> Vec<i128> {
        let t: Vec<i128> = (0..=max_n)
            .map(|n| if n == 0 { 0 } else { (k as i128).pow(n as u32 - 1) * catalan(n - 1) as i128 })
            .collect();
        let mut p = vec![0i128; max_n + 1];
        for n in 1..=max_n {
            p[n] = t[n] - (1..n).map(|i| p[i] * t[n - i]).sum::<i128>();
        }
        p[1..].to_vec()
    }

    #[test]
    fn series_oracle_values() {
        assert_eq!(series_dims(2, 5), vec![1, 1, 5, 25, 141]);
        assert_eq!(series_dims(1, 6), vec![1, 0, 1, 2, 6, 18]);
    }

    #[test]
    fn enumeration_sizes_and_bounds() {
        let s2 = ColorSet::new(2).unwrap();
        assert_eq!(enumerate_colored(4, &s2).unwrap().len(), 8 * 5);
        assert!(enumerate_colored(0, &s2).is_err());
        let s4 = ColorSet::new(4).unwrap();
        assert!(matches!(enumerate_colored(7, &s4), Err(Error::ResourceLimit { .. })));
        assert!(matches!(gen_in(6, &s2), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn one_color_gives_the_uncolored_dimensions() {
        let s1 = ColorSet::new(1).unwrap();
        for n in 1..=5 {
            assert_eq!(colored_prim_dim(n, &s1).unwrap(), prim_dim(n).unwrap());
        }
    }

    #[test]
    fn two_color_dimensions_match_the_series() {
        let s2 = ColorSet::new(2).unwrap();
        let got: Vec<i128> = (1..=4).map(|n| colored_prim_dim(n, &s2).unwrap() as i128).collect();
        assert_eq!(got, series_dims(2, 4));
        assert_eq!(colored_prim_dim(2, &s2).unwrap(), 1);
    }

    #[test]
    fn three_color_dimensions_match_the_series() {
        let s3 = ColorSet::new(3).unwrap();
        let got: Vec<i128> = (1..=4).map(|n| colored_prim_dim(n, &s3).unwrap() as i128).collect();
        assert_eq!(got, series_dims(3, 4));
    }

    #[test]
    fn small_generating_sets() {
        let s2 = ColorSet::new(2).unwrap();
        let levels = gen_in(2, &s2).unwrap();
        assert_eq!(levels[1], vec![LinComb::basis(ColoredTree::leaf())]);
        let want = LinComb::basis(y(Color(0))) - LinComb::basis(y(Color(1)));
        assert_eq!(levels[2], vec![want]);
    }

    #[test]
    fn structure_in_low_degree() {
        assert!(structure_check(4, &ColorSet::new(2).unwrap()).unwrap());
        assert!(structure_check(3, &ColorSet::new(3).unwrap()).unwrap());
        assert!(structure_check(4, &ColorSet::new(1).unwrap()).unwrap());
    }

    #[test]
    fn first_step_identity() {
        let s2 = ColorSet::new(2).unwrap();
        for n in 1..=5 {
            assert!(lemma_firststep_check(n, Color(0), &s2).unwrap(), "n = {n}");
        }
        assert!(lemma_firststep_check(2, Color(1), &s2).is_err());
    }
}
