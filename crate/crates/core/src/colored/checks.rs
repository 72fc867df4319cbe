//! Verification suites for the colored layer.

use serde_json::json;

use super::ops::{
    compose, formaelem_holds, formaelem_literal_holds, full_family, generatingprods_a_holds,
    generatingprods_b_holds, hat_family, hat_family_relaxed, m_op, span_closure,
};
use super::prim::{colored_prim_dim, enumerate_colored, gen_in, lemma_firststep_check};
use super::{cwedge, words_over, Color, ColorSet, ColoredTree};
use crate::bialg::{coassociativity_defect, is_primitive, unital_infinitesimal_holds};
use crate::linalg::{span_rank, LinComb};
use crate::report::{first_failure, Report};
use crate::trees::{catalan, compositions, comb_right, enumerate, Tree};

fn colored_upto(max_n: usize, set: &ColorSet) -> Vec<ColoredTree<Color>> {
    (1..=max_n).flat_map(|n| enumerate_colored(n, set).expect("bounded size")).collect()
}

fn ce(t: &ColoredTree<Color>) -> serde_json::Value {
    serde_json::to_value(t).expect("serializable")
}

/// Kernel dimensions, the generating sets `I_n^S`, the dimension identity and
/// the coalgebra laws of the colored trees, for `|S| = colors`.
pub fn colored_structure(max_n: usize, colors: usize) -> Report {
    Report::run("colored-structure", json!({ "max_n": max_n, "colors": colors }), |r| {
        let set = match ColorSet::new(colors) {
            Ok(s) => s,
            Err(e) => return r.add("color set", Err(json!(e.to_string()))),
        };
        let levels = match gen_in(max_n, &set) {
            Ok(l) => l,
            Err(e) => return r.add("generating sets", Err(json!(e.to_string()))),
        };
        let dims: Vec<usize> = (1..=max_n).map(|n| colored_prim_dim(n, &set).expect("bounded size")).collect();
        r.add_detailed("kernel dimensions", Ok(()), Some(format!("{dims:?}")));
        r.add(
            "every member of I_n is primitive",
            first_failure(1..=max_n, |n| {
                match levels[n].iter().find(|x| !is_primitive(x)) {
                    None => Ok(()),
                    Some(x) => Err(json!({ "n": n, "element": x })),
                }
            }),
        );
        let ranks: Vec<usize> = (1..=max_n).map(|n| span_rank(&levels[n])).collect();
        r.add_eq("rank of I_n equals the kernel dimension", ranks, dims.clone());
        r.add(
            "dimension identity |S|^{n-1} C_{n-1} = Σ Π dim Prim",
            first_failure(1..=max_n, |n| {
                let total = (colors as u128).pow(n as u32 - 1) * catalan(n - 1);
                let sum: u128 = compositions(n)
                    .iter()
                    .map(|c| c.iter().map(|&m| dims[m - 1] as u128).product::<u128>())
                    .sum();
                if sum == total { Ok(()) } else { Err(json!({ "n": n, "total": total.to_string(), "sum": sum.to_string() })) }
            }),
        );
        r.add(
            "Möbius elements of irreducibles are primitive in every coloring",
            first_failure(2..=max_n, |n| {
                first_failure(enumerate(n).expect("bounded").into_iter().filter(Tree::is_under_irreducible), |t| {
                    first_failure(set.words(n - 1), |w| {
                        if is_primitive(&m_op(&t, &w).expect("arity")) {
                            Ok(())
                        } else {
                            Err(json!({ "dyck": t.dyck(), "colors": w }))
                        }
                    })
                })
            }),
        );
        let all = colored_upto(max_n.min(5), &set);
        r.add(
            "coassociativity",
            first_failure(&all, |t| if coassociativity_defect(t).is_zero() { Ok(()) } else { Err(ce(t)) }),
        );
        let small = colored_upto(max_n.min(4), &set);
        r.add(
            "unital infinitesimal law for every ⋎_s",
            first_failure(&small, |x| {
                first_failure(&small, |y| {
                    first_failure(set.colors(), |s| {
                        if unital_infinitesimal_holds(x, y, |a, b| LinComb::basis(cwedge(a, &s, b))) {
                            Ok(())
                        } else {
                            Err(json!({ "left": ce(x), "right": ce(y), "color": s }))
                        }
                    })
                })
            }),
        );
        r.add(
            "primitive operators preserve primitives",
            first_failure(2..=max_n.min(4), |k| {
                first_failure(&levels[k], |op| {
                    let args_pool: Vec<&LinComb<ColoredTree<Color>>> = levels[1..=2].iter().flatten().collect();
                    first_failure(words_over(&args_pool, k), |args| {
                        let deg: usize = args.iter().map(|a| a.iter().next().expect("nonzero").0.leaves()).sum();
                        if deg > max_n {
                            return Ok(());
                        }
                        let args: Vec<_> = args.into_iter().cloned().collect();
                        if is_primitive(&compose(op, &args).expect("arity")) { Ok(()) } else { Err(json!({ "operator": op })) }
                    })
                })
            }),
        );
    })
}

/// The operator identities on the free algebra: the first-step identity, the
/// hat expansion, the spine relations, and equality of the spans generated
/// by the two operator families up to arity `span_max`.
pub fn operator_calculus(max_n: usize, colors: usize, span_max: usize) -> Report {
    Report::run(
        "operator-calculus",
        json!({ "max_n": max_n, "colors": colors, "span_max": span_max }),
        |r| {
            let set = match ColorSet::new(colors) {
                Ok(s) => s,
                Err(e) => return r.add("color set", Err(json!(e.to_string()))),
            };
            let base = set.base();
            r.add(
                "first-step identity",
                first_failure(1..=max_n, |n| {
                    first_failure(set.non_base(), |s| {
                        if lemma_firststep_check(n, s, &set).expect("valid input") { Ok(()) } else { Err(json!({ "n": n, "s": s })) }
                    })
                }),
            );
            let shapes: Vec<Tree> = (1..=max_n).flat_map(|n| enumerate(n).expect("bounded")).collect();
            r.add(
                "hat expansion M_t(s) = Σ_J M_t(v_J)",
                first_failure(&shapes, |t| {
                    first_failure(words_over(&set.non_base(), t.leaves() - 1), |w| {
                        if formaelem_holds(t, &w, &base).expect("non-base colors") {
                            Ok(())
                        } else {
                            Err(json!({ "dyck": t.dyck(), "colors": w }))
                        }
                    })
                }),
            );
            if let (Some(&a), true) = (set.non_base().first(), max_n >= 3) {
                let literal = formaelem_literal_holds(&comb_right(3).expect("n ≥ 1"), &[a, a], &base).expect("non-base");
                r.add_detailed(
                    "plain-color correction terms do not give the expansion",
                    if literal { Err(json!({ "dyck": "1100" })) } else { Ok(()) },
                    Some("counterexample 1_3 with colors (a, a)".into()),
                );
            }
            r.add(
                "spine relation (a)",
                first_failure(&shapes, |t| {
                    first_failure(set.words(t.leaves() - 1), |w| {
                        if generatingprods_a_holds(t, &w).expect("arity") { Ok(()) } else { Err(json!({ "dyck": t.dyck(), "colors": w })) }
                    })
                }),
            );
            r.add(
                "spine relation (b)",
                first_failure(&shapes, |t| {
                    first_failure(set.words(t.leaves() - 1), |w| {
                        if generatingprods_b_holds(t, &w).expect("arity") { Ok(()) } else { Err(json!({ "dyck": t.dyck(), "colors": w })) }
                    })
                }),
            );
            let full = span_closure(|n| full_family(n, &set), span_max);
            let strict = span_closure(|n| hat_family(n, &set), span_max);
            let relaxed = span_closure(|n| hat_family_relaxed(n, &set), span_max);
            for (name, restricted) in [
                ("the two operator families span the same space", strict),
                ("with single-node blocks admitted the families span the same space", relaxed),
            ] {
                match (&full, &restricted) {
                    (Ok(full), Ok(restricted)) => {
                        let mut ranks = Vec::new();
                        let outcome = first_failure(1..=span_max, |n| {
                            let mut both = full[n].clone();
                            both.extend(restricted[n].iter().cloned());
                            let (a, b, c) = (full[n].len(), restricted[n].len(), span_rank(&both));
                            ranks.push((a, b));
                            if a == b && b == c {
                                Ok(())
                            } else {
                                Err(json!({ "arity": n, "full": a, "restricted": b, "joint": c }))
                            }
                        });
                        r.add_detailed(name, outcome, Some(format!("(full, restricted) ranks {ranks:?}")));
                    }
                    (Err(e), _) | (_, Err(e)) => r.add(name, Err(json!(e.to_string()))),
                }
            }
        },
    )
}
