//! Verification suites for the tree bialgebra.

use serde_json::json;

use super::tree_coalg::{coprod_of_graft, coprod_of_graft_all, under_unital, wedge_unital, UTree};
use super::{
    coassociativity_defect, coprod, delta, is_primitive, moebius_by_factors,
    moebius_comb_right, moebius_comb_right_alternating, moebius_elem, moebius_elem_oracle,
    prim_dim, primitive_basis, under_splittings, UTensor, Unital,
};
use crate::linalg::{span_rank, LinComb, Tensor2};
use crate::order::tamari;
use crate::report::{first_failure, Report};
use crate::trees::{self, comb_right, enumerate, under, Tree};

fn trees_upto(max_n: usize) -> Vec<Tree> {
    (1..=max_n).flat_map(|n| enumerate(n).expect("bounded size")).collect()
}

fn pairs_upto(total: usize) -> Vec<(Tree, Tree)> {
    let all = trees_upto(total.saturating_sub(1));
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            if a.leaves() + b.leaves() <= total {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn utree(x: &Tree) -> LinComb<UTree> {
    LinComb::basis(Unital::Elem(x.clone()))
}

fn lift(x: &LinComb<Tree>) -> LinComb<UTree> {
    x.map_basis(|t| Unital::Elem(t.clone()))
}

/// The recursive, factorised and oracle routes to `M_t` agree.
pub fn moebius_routes(max_n: usize) -> Report {
    Report::run("moebius-routes", json!({ "max_n": max_n }), |r| {
        let all = trees_upto(max_n);
        let count = all.len();
        let outcome = first_failure(&all, |t| {
            let oracle = moebius_elem_oracle(t).map_err(|e| json!({"tree": t.dyck(), "error": e.to_string()}))?;
            if moebius_elem(t) != oracle {
                return Err(json!({"tree": t.dyck(), "route": "right spine"}));
            }
            if moebius_by_factors(t) != oracle {
                return Err(json!({"tree": t.dyck(), "route": "factorisation"}));
            }
            Ok(())
        });
        r.add_detailed("recursive routes equal the Möbius oracle", outcome, Some(format!("{count} trees")));
        let combs = first_failure(1..=max_n, |n| {
            let a = moebius_comb_right(n).expect("n ≥ 1");
            let b = moebius_comb_right_alternating(n).expect("n ≥ 1");
            if a == b { Ok(()) } else { Err(json!({ "n": n })) }
        });
        r.add("alternating formula for the right comb", combs);
    })
}

/// `Δ(M_t) = Σ_{z_1 ⋌ z_2 = t} M_{z_1} ⊗ M_{z_2}` for all trees up to `max_n` leaves.
pub fn verify_as(max_n: usize) -> Report {
    Report::run("verify-as", json!({ "max_n": max_n }), |r| {
        for n in 1..=max_n {
            let xs = enumerate(n).expect("bounded size");
            let outcome = first_failure(&xs, |t| {
                let lhs = coprod(&moebius_elem(t));
                let mut rhs: UTensor<Tree> = LinComb::zero();
                for (a, b) in under_splittings(t) {
                    let ma = match &a {
                        Unital::Unit => LinComb::basis(Unital::Unit),
                        Unital::Elem(x) => lift(&moebius_elem(x)),
                    };
                    let mb = match &b {
                        Unital::Unit => LinComb::basis(Unital::Unit),
                        Unital::Elem(x) => lift(&moebius_elem(x)),
                    };
                    rhs += ma.tensor(&mb);
                }
                if lhs == rhs { Ok(()) } else { Err(json!({ "tree": t.dyck() })) }
            });
            r.add_detailed(format!("n = {n}"), outcome, Some(format!("{} trees", xs.len())));
        }
    })
}

fn check_pairs(
    pairs: &[(Tree, Tree)],
    law: impl Fn(&Tree, &Tree) -> bool,
) -> Result<(), serde_json::Value> {
    first_failure(pairs, |(a, b)| {
        if law(a, b) { Ok(()) } else { Err(json!({"left": a.dyck(), "right": b.dyck()})) }
    })
}

fn unital_infinitesimal(x: &Tree, y: &Tree, op: fn(&UTree, &UTree) -> UTree) -> bool {
    super::unital_infinitesimal_holds(x, y, |a, b| {
        let p = op(&Unital::Elem(a.clone()), &Unital::Elem(b.clone()));
        LinComb::basis(p.as_elem().expect("product of trees").clone())
    })
}

/// `δ(x·y) = Σ x_1 ⊗ (x_2·y) + Σ (x·y_1) ⊗ y_2` for `δ` and a product `·`.
fn delta_derivation(x: &Tree, y: &Tree, op: fn(&Tree, &Tree) -> Tree) -> bool {
    let lhs = delta(&LinComb::basis(op(x, y)));
    let mut rhs: Tensor2<Tree, Tree> = delta(&LinComb::basis(x.clone())).map_basis(|(a, b)| (a.clone(), op(b, y)));
    rhs += delta(&LinComb::basis(y.clone())).map_basis(|(a, b)| (op(x, a), b.clone()));
    lhs == rhs
}

/// Coassociativity, counit, the shapes of `Δ` and `δ`, the compatibility laws
/// with `⋎` and `⋌`, and the grafting formulas.
pub fn coalgebra_laws(max_n: usize) -> Report {
    Report::run("coalgebra-laws", json!({ "max_n": max_n }), |r| {
        let all = trees_upto(max_n);
        r.add(
            "coassociativity",
            first_failure(&all, |t| {
                if coassociativity_defect(t).is_zero() { Ok(()) } else { Err(json!({"tree": t.dyck()})) }
            }),
        );
        r.add(
            "counit",
            first_failure(&all, |t| {
                let d = coprod(&LinComb::basis(t.clone()));
                let left: LinComb<UTree> = d.filter(|(a, _)| a.is_unit()).map_basis(|(_, b)| b.clone());
                let right: LinComb<UTree> = d.filter(|(_, b)| b.is_unit()).map_basis(|(a, _)| a.clone());
                if left == utree(t) && right == utree(t) { Ok(()) } else { Err(json!({"tree": t.dyck()})) }
            }),
        );
        r.add(
            "Δ has n+1 summands of degrees (i, n-i)",
            first_failure(&all, |t| {
                let n = t.leaves();
                let d = coprod(&LinComb::basis(t.clone()));
                let mut degs: Vec<(usize, usize)> = d.support().map(|(a, b)| (a.degree(), b.degree())).collect();
                degs.sort_unstable();
                let want: Vec<(usize, usize)> = (0..=n).map(|i| (i, n - i)).collect();
                if degs == want { Ok(()) } else { Err(json!({"tree": t.dyck()})) }
            }),
        );
        r.add(
            "δ has n summands of degrees (i+1, n-i)",
            first_failure(&all, |t| {
                let n = t.leaves();
                let d = delta(&LinComb::basis(t.clone()));
                let mut degs: Vec<(usize, usize)> = d.support().map(|(a, b)| (a.leaves(), b.leaves())).collect();
                degs.sort_unstable();
                let want: Vec<(usize, usize)> = (0..n).map(|i| (i + 1, n - i)).collect();
                if degs == want { Ok(()) } else { Err(json!({"tree": t.dyck()})) }
            }),
        );
        let y = Tree::Leaf.wedge(&Tree::Leaf);
        let dy = coprod(&LinComb::basis(y.clone()));
        let want = LinComb::basis((Unital::Unit, Unital::Elem(y.clone())))
            + LinComb::basis((Unital::Elem(Tree::Leaf), Unital::Elem(Tree::Leaf)))
            + LinComb::basis((Unital::Elem(y.clone()), Unital::Unit));
        r.add_eq("Δ((| |)) = 1⊗Y + |⊗| + Y⊗1", dy, want);

        let mut pairs = pairs_upto(max_n.min(7));
        let each = trees_upto(max_n.min(4));
        for a in &each {
            for b in &each {
                if a.leaves() + b.leaves() > max_n.min(7) {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
        r.add(
            "unital infinitesimal law for ⋎",
            check_pairs(&pairs, |a, b| unital_infinitesimal(a, b, wedge_unital)),
        );
        r.add(
            "unital infinitesimal law for ⋌",
            check_pairs(&pairs, |a, b| unital_infinitesimal(a, b, under_unital)),
        );
        r.add("δ is a coderivation for ⋎", check_pairs(&pairs, |a, b| delta_derivation(a, b, |x, y| x.wedge(y))));
        r.add("δ is infinitesimal for ⋌", check_pairs(&pairs, |a, b| delta_derivation(a, b, under)));
        r.add(
            "δ(M_{1_n}) = |⊗M + M⊗|",
            first_failure(2..=max_n, |n| {
                let m = moebius_comb_right(n).expect("n ≥ 1");
                let leaf = LinComb::basis(Tree::Leaf);
                let want = leaf.tensor(&m) + m.tensor(&leaf);
                if delta(&m) == want { Ok(()) } else { Err(json!({ "n": n })) }
            }),
        );
        let graft_pairs = pairs_upto(max_n.min(7));
        r.add(
            "coproduct of a single grafting",
            first_failure(&graft_pairs, |(t, w)| {
                first_failure(1..=t.leaves(), |k| {
                    let lhs = coprod(&LinComb::basis(t.graft(k, w).expect("k in range")));
                    if lhs == coprod_of_graft(t, k, w).expect("k in range") {
                        Ok(())
                    } else {
                        Err(json!({"tree": t.dyck(), "k": k, "grafted": w.dyck()}))
                    }
                })
            }),
        );
        let small = trees_upto(4);
        r.add(
            "coproduct of a full grafting",
            first_failure(trees_upto(3), |t| {
                let n = t.leaves();
                let mut tuples: Vec<Vec<Tree>> = vec![Vec::new()];
                for _ in 0..n {
                    tuples = tuples
                        .into_iter()
                        .flat_map(|tp| {
                            small.iter().map(move |p| {
                                let mut v = tp.clone();
                                v.push(p.clone());
                                v
                            })
                        })
                        .collect();
                }
                let in_scope = |ws: &Vec<Tree>| {
                    ws.iter().all(|w| w.leaves() <= 3) || ws.iter().map(Tree::leaves).sum::<usize>() <= 5
                };
                first_failure(tuples.into_iter().filter(in_scope), |ws| {
                    let lhs = coprod(&LinComb::basis(t.graft_all(&ws).expect("arity")));
                    if lhs == coprod_of_graft_all(&t, &ws).expect("arity") {
                        Ok(())
                    } else {
                        Err(json!({"tree": t.dyck(), "args": ws.iter().map(Tree::dyck).collect::<Vec<_>>()}))
                    }
                })
            }),
        );
        r.add(
            "Möbius elements are unitriangular",
            first_failure(&all, |t| {
                let m = moebius_elem(t);
                let p = tamari(t.leaves()).expect("bounded size");
                let top = p.index_of(t).expect("element");
                let ok = m.coeff(t) == 1.into()
                    && m.support().all(|w| p.leq(p.index_of(w).expect("same size"), top));
                if ok { Ok(()) } else { Err(json!({"tree": t.dyck()})) }
            }),
        );
        let comb = comb_right(3).expect("n ≥ 1");
        r.add_eq(
            "M_{1_3} = 1_3 − 0_3",
            moebius_elem(&comb),
            LinComb::basis(comb) - LinComb::basis(trees::comb_left(3).expect("n ≥ 1")),
        );
    })
}

/// Primitive dimensions by kernel computation, the Möbius primitive basis,
/// and the cotensor dimension identity.
pub fn primitive_checks(max_n: usize, cotensor_max: usize) -> Report {
    Report::run("primitives", json!({ "max_n": max_n, "cotensor_max": cotensor_max }), |r| {
        let top = max_n.max(cotensor_max);
        let dims: Vec<usize> = (1..=top).map(|n| prim_dim(n).expect("bounded size")).collect();
        let irreducible: Vec<usize> = (1..=top)
            .map(|n| enumerate(n).expect("bounded size").iter().filter(|t| t.is_under_irreducible()).count())
            .collect();
        let expected = [1usize, 0, 1, 2, 6, 18];
        let k = max_n.min(expected.len());
        r.add_eq("prim_dim values", dims[..k].to_vec(), expected[..k].to_vec());
        r.add_eq("prim_dim equals the number of ⋌-irreducibles", dims.clone(), irreducible);
        r.add(
            "Möbius elements of irreducibles form a primitive basis",
            first_failure(1..=max_n, |n| {
                let basis = primitive_basis(n).expect("bounded size");
                let ok = basis.iter().all(is_primitive) && span_rank(&basis) == basis.len() && basis.len() == dims[n - 1];
                if ok { Ok(()) } else { Err(json!({ "n": n })) }
            }),
        );
        r.add(
            "cotensor dimension identity",
            first_failure(1..=cotensor_max, |n| {
                if super::cotensor_dim_check(n, &dims).expect("dims available") {
                    Ok(())
                } else {
                    Err(json!({ "n": n }))
                }
            }),
        );
    })
}
