//! Verification suites for integer relations.

use serde_json::{json, Value};

use super::xi::{lemma_vanishing_check, xi_basis_check, xi_sample_check, VanishingOutcome};
use super::{
    canonical_word, enumerate_rels, from_canonical_word, is_sqcup_irreducible, prod_alpha, prod_basic, shuffle_prod,
    word_irreducible, word_irreducible_literal, AlphaMap, IntRel, Op, MAX_ENUM_SIZE,
};
use crate::bialg::{coassociativity_defect, coprod, coprod_basis, unital_infinitesimal_holds, Unital};
use crate::linalg::LinComb;
use crate::report::{first_failure, Report};

fn upto(max_n: usize) -> Vec<IntRel> {
    (1..=max_n.min(MAX_ENUM_SIZE)).flat_map(|n| enumerate_rels(n).expect("bounded size")).collect()
}

fn js<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn shuffle_unital(a: &Unital<IntRel>, b: &Unital<IntRel>, op: Op) -> LinComb<Unital<IntRel>> {
    match (a, b) {
        (Unital::Unit, z) | (z, Unital::Unit) => LinComb::basis(z.clone()),
        (Unital::Elem(x), Unital::Elem(y)) => shuffle_prod(x, y, op).map_basis(|z| Unital::Elem(z.clone())),
    }
}

/// Whether `Δ(x ◇ y) = Δ(x) ◇ Δ(y)`.
pub fn hopf_compatible(x: &IntRel, y: &IntRel, op: Op) -> bool {
    let lhs = coprod(&shuffle_prod(x, y, op));
    let dx = coprod_basis(&Unital::Elem(x.clone()));
    let dy = coprod_basis(&Unital::Elem(y.clone()));
    let rhs = dx.bilinear(&dy, |(a, b), (c, d)| {
        shuffle_unital(a, c, op).bilinear(&shuffle_unital(b, d, op), |u, v| LinComb::basis((u.clone(), v.clone())))
    });
    lhs == rhs
}

/// Whether `(R ∗_α Q) ∗_γ P = R ∗_α (Q ∗_γ P)`.
pub fn rebrackets(r: &IntRel, q: &IntRel, p: &IntRel, a: &AlphaMap, g: &AlphaMap) -> bool {
    prod_alpha(&prod_alpha(r, q, a), p, g) == prod_alpha(r, &prod_alpha(q, p, g), a)
}

/// Exact condition for [`rebrackets`]: `α` is `⊔` at every position landing in `P`.
pub fn rebrackets_predicted(q: &IntRel, p: &IntRel, a: &AlphaMap) -> bool {
    let m = q.size();
    (m + 1..=a.size().min(m + p.size())).all(|i| a.letter(i) == Op::Disjoint)
}

/// Counts, block products, coproduct laws, shuffle products, the products
/// `∗_α` and generation from `#`, on relations of size at most `max_n`.
pub fn relation_laws(max_n: usize) -> Report {
    Report::run("relation-laws", json!({ "max_n": max_n }), |r| {
        let counts: Vec<usize> = (1..=max_n.min(MAX_ENUM_SIZE))
            .map(|n| {
                let mut v = enumerate_rels(n).expect("bounded size");
                v.sort();
                v.dedup();
                v.len()
            })
            .collect();
        let formula: Vec<usize> = (1..=max_n.min(MAX_ENUM_SIZE)).map(|n| 1 << (n * (n - 1))).collect();
        r.add_eq("number of relations is 4^(n(n-1)/2)", counts, formula);

        let small = upto(2);
        let alphas = AlphaMap::all_upto(3);
        r.add(
            "block products are associative",
            first_failure(Op::ALL, |op| {
                first_failure(triples(&small), |(x, y, z)| {
                    if prod_basic(&prod_basic(x, y, op), z, op) == prod_basic(x, &prod_basic(y, z, op), op) {
                        Ok(())
                    } else {
                        Err(json!({ "op": op.to_string(), "x": js(x), "y": js(y), "z": js(z) }))
                    }
                })
            }),
        );
        let mut example = None;
        let mixed = first_failure(Op::ALL.iter().flat_map(|&a| Op::ALL.map(move |b| (a, b))), |(a, b)| {
            if a == b {
                return Ok(());
            }
            let found = triples(&small).find(|(x, y, z)| prod_basic(x, &prod_basic(y, z, b), a) != prod_basic(&prod_basic(x, y, a), z, b));
            match found {
                Some((x, y, z)) => {
                    example.get_or_insert_with(|| format!("x={x} y={y} z={z} with {a} then {b}"));
                    Ok(())
                }
                None => Err(json!({ "outer": a.to_string(), "inner": b.to_string() })),
            }
        });
        r.add_detailed("each pair of distinct block products fails mixed associativity", mixed, example);

        r.add(
            "coproduct is coassociative",
            first_failure(upto(max_n.min(3)), |x| {
                if coassociativity_defect(&x).is_zero() { Ok(()) } else { Err(js(&x)) }
            }),
        );
        r.add(
            "block products satisfy the unital infinitesimal law",
            first_failure(pairs(&small), |(x, y)| {
                first_failure(Op::ALL, |op| {
                    if unital_infinitesimal_holds(x, y, |u, v| LinComb::basis(prod_basic(u, v, op))) {
                        Ok(())
                    } else {
                        Err(json!({ "op": op.to_string(), "x": js(x), "y": js(y) }))
                    }
                })
            }),
        );
        r.add(
            "products ∗_α with s(α) ≤ 3 satisfy the unital infinitesimal law",
            first_failure(pairs(&small), |(x, y)| {
                first_failure(&alphas, |a| {
                    if unital_infinitesimal_holds(x, y, |u, v| LinComb::basis(prod_alpha(u, v, a))) {
                        Ok(())
                    } else {
                        Err(json!({ "alpha": js(a), "x": js(x), "y": js(y) }))
                    }
                })
            }),
        );
        r.add(
            "shuffle products are compatible with the coproduct",
            first_failure(pairs(&small), |(x, y)| {
                first_failure(Op::ALL, |op| {
                    if hopf_compatible(x, y, op) { Ok(()) } else { Err(json!({ "op": op.to_string(), "x": js(x), "y": js(y) })) }
                })
            }),
        );

        let rebracket_sweep = |pred: &dyn Fn(&IntRel, &IntRel, &AlphaMap) -> bool, only: &dyn Fn(&AlphaMap) -> bool| {
            first_failure(triples(&small), |(x, q, p)| {
                first_failure(alphas.iter().filter(|a| only(a)), |a| {
                    first_failure(&alphas, |g| {
                        let eq = rebrackets(x, q, p, a, g);
                        if eq == pred(q, p, a) {
                            Ok(())
                        } else {
                            Err(json!({ "R": js(x), "Q": js(q), "P": js(p), "alpha": js(a), "gamma": js(g), "equal": eq }))
                        }
                    })
                })
            })
        };
        let literal = |q: &IntRel, _: &IntRel, a: &AlphaMap| a.size() <= q.size();
        let any = |_: &AlphaMap| true;
        let no_gaps = |a: &AlphaMap| (1..=a.size()).all(|i| a.letter(i) != Op::Disjoint);
        r.add("∗_α rebrackets exactly when s(α) ≤ |Q|", rebracket_sweep(&literal, &any));
        r.add(
            "∗_α rebrackets when s(α) ≤ |Q|",
            first_failure(triples(&small), |(x, q, p)| {
                first_failure(alphas.iter().filter(|a| a.size() <= q.size()), |a| {
                    first_failure(&alphas, |g| {
                        if rebrackets(x, q, p, a, g) { Ok(()) } else { Err(json!({ "alpha": js(a), "gamma": js(g) })) }
                    })
                })
            }),
        );
        r.add("∗_α rebrackets exactly when α is ⊔ on the positions reaching P", rebracket_sweep(&rebrackets_predicted, &any));
        r.add("for α without ⊔ letters, ∗_α rebrackets exactly when s(α) ≤ |Q|", rebracket_sweep(&literal, &no_gaps));

        let gen_max = max_n.min(MAX_ENUM_SIZE);
        r.add(
            "every relation is rebuilt from # by its canonical word",
            first_failure(upto(gen_max), |x| {
                let w = canonical_word(&x).map_err(|e| json!(e.to_string()))?;
                let bounded = w.iter().enumerate().all(|(k, a)| a.size() <= w.len() - k);
                if bounded && from_canonical_word(&w) == x { Ok(()) } else { Err(js(&x)) }
            }),
        );
        r.add(
            "canonical words are unique",
            first_failure(1..=gen_max, |n| {
                let mut seen: Vec<IntRel> = canonical_words(n).iter().map(|w| from_canonical_word(w)).collect();
                let total = seen.len();
                seen.sort();
                seen.dedup();
                if seen.len() == total && total == 1 << (n * (n - 1)) { Ok(()) } else { Err(json!({ "n": n })) }
            }),
        );
        let irr_counts: Vec<usize> = (1..=gen_max)
            .map(|n| enumerate_rels(n).expect("bounded size").iter().filter(|x| is_sqcup_irreducible(x)).count())
            .collect();
        r.add_eq("⊔-irreducible counts", irr_counts, irreducible_counts(gen_max));
        let crit_max = max_n.min(3);
        r.add(
            "word criterion for ⊔-irreducibility, every α_i with i ≤ n-1",
            first_failure(upto(crit_max), |x| {
                let w = canonical_word(&x).expect("size ≥ 1");
                if word_irreducible(&w) == is_sqcup_irreducible(&x) { Ok(()) } else { Err(js(&x)) }
            }),
        );
        r.add(
            "word criterion for ⊔-irreducibility, clause (a) read as i < n-1",
            first_failure(upto(crit_max), |x| {
                let w = canonical_word(&x).expect("size ≥ 1");
                if word_irreducible_literal(&w) == is_sqcup_irreducible(&x) {
                    Ok(())
                } else {
                    Err(json!({ "relation": js(&x), "word": js(&w) }))
                }
            }),
        );
    })
}

fn pairs(xs: &[IntRel]) -> impl Iterator<Item = (&IntRel, &IntRel)> {
    xs.iter().flat_map(move |x| xs.iter().map(move |y| (x, y)))
}

fn triples(xs: &[IntRel]) -> impl Iterator<Item = (&IntRel, &IntRel, &IntRel)> {
    xs.iter().flat_map(move |x| xs.iter().flat_map(move |y| xs.iter().map(move |z| (x, y, z))))
}

/// All words `(α_{n-1}, …, α_1)` with `s(α_i) ≤ i`.
fn canonical_words(n: usize) -> Vec<Vec<AlphaMap>> {
    let mut words: Vec<Vec<AlphaMap>> = vec![Vec::new()];
    for i in (1..n).rev() {
        let choices = AlphaMap::all_upto(i);
        words = words
            .into_iter()
            .flat_map(|w| {
                choices.iter().map(move |a| {
                    let mut w = w.clone();
                    w.push(a.clone());
                    w
                })
            })
            .collect();
    }
    words
}

/// `i_n` from `t_n = Σ_k i_k t_{n-k}` with `t_n = 4^(n(n-1)/2)`.
fn irreducible_counts(max_n: usize) -> Vec<usize> {
    let t: Vec<usize> = (0..=max_n).map(|n| 1 << (n * n.saturating_sub(1))).collect();
    let mut i = vec![0usize; max_n + 1];
    for n in 1..=max_n {
        i[n] = t[n] - (1..n).map(|k| i[k] * t[n - k]).sum::<usize>();
    }
    i[1..].to_vec()
}

/// Ξ on irreducibles: exhaustive up to size `min(max_n, 3)`, `samples`
/// random irreducibles of size 4 when `max_n ≥ 4`, and the full size-4
/// basis check when `full_four` is set.
pub fn xi_suite(max_n: usize, samples: usize, full_four: bool) -> Report {
    let params = json!({ "max_n": max_n, "samples": samples, "full_four": full_four });
    Report::run("xi-basis", params, |r| {
        let mut exhaustive: Vec<usize> = (1..=max_n.min(3)).collect();
        if full_four && max_n >= 4 {
            exhaustive.push(4);
        }
        for n in exhaustive {
            match xi_basis_check(n) {
                Ok(s) => {
                    let detail = format!("{} irreducibles, rank {}, primitive dimension {}", s.irreducibles, s.rank, s.prim_dim);
                    let outcome = if s.passed() {
                        Ok(())
                    } else {
                        Err(json!({ "irreducibles": s.irreducibles, "rank": s.rank, "prim_dim": s.prim_dim, "bad": s.bad.as_ref().map(js) }))
                    };
                    r.add_detailed(format!("Ξ images form a unitriangular basis of the primitives, size {n}"), outcome, Some(detail));
                }
                Err(e) => r.add(format!("Ξ basis, size {n}"), Err(json!(e.to_string()))),
            }
        }
        if max_n >= 4 && samples > 0 {
            let outcome = match xi_sample_check(4, samples, 0x5eed) {
                Ok(Ok(_)) => Ok(()),
                Ok(Err(bad)) => Err(js(&bad)),
                Err(e) => Err(json!(e.to_string())),
            };
            r.add_detailed("Ξ images are primitive and unitriangular, sampled at size 4", outcome, Some(format!("{samples} samples")));
        }
    })
}

/// `M_{1_n}(α_{n-1}, …, α_1)` on relations: three factors over relations of
/// size ≤ 2 and `s(α) ≤ 3`, four factors over a smaller pool.
pub fn comb_operator_laws() -> Report {
    Report::run("comb-operators", json!({}), |r| {
        let small = upto(2);
        let three: Vec<(Vec<AlphaMap>, Vec<IntRel>)> = triples(&small)
            .flat_map(|(a, b, c)| {
                let alphas = AlphaMap::all_upto(3);
                let rels = vec![a.clone(), b.clone(), c.clone()];
                alphas.clone().into_iter().flat_map(move |x| {
                    let rels = rels.clone();
                    alphas.clone().into_iter().map(move |y| (vec![x.clone(), y], rels.clone()))
                })
            })
            .collect();
        comb_sweep(r, "three", &three);
        let tiny: Vec<IntRel> = upto(1).into_iter().chain(enumerate_rels(2).expect("size 2").into_iter().take(2)).collect();
        let four: Vec<(Vec<AlphaMap>, Vec<IntRel>)> = quads(&tiny)
            .into_iter()
            .flat_map(|rels| triples_of(&AlphaMap::all_upto(2)).into_iter().map(move |c| (c.to_vec(), rels.to_vec())))
            .collect();
        comb_sweep(r, "four", &four);
    })
}

fn gap_free(a: &AlphaMap) -> bool {
    (1..=a.size()).all(|i| a.letter(i) != Op::Disjoint)
}

/// The vanishing and unitriangular assertions for comb operators over `cases`.
fn comb_sweep(r: &mut Report, arity: &str, cases: &[(Vec<AlphaMap>, Vec<IntRel>)]) {
    let (mut zero, mut lead) = (0usize, 0usize);
    let mut not_zero = None;
    let mut not_lead = None;
    let mut not_lead_gap_free = None;
    for (colors, rels) in cases {
        let ce = || json!({ "colors": js(colors), "relations": js(rels) });
        match lemma_vanishing_check(colors, rels) {
            Ok(VanishingOutcome::Zero) => zero += 1,
            Ok(VanishingOutcome::Leading) => lead += 1,
            Ok(VanishingOutcome::NotZero(_)) => {
                not_zero.get_or_insert_with(ce);
            }
            Ok(VanishingOutcome::NotLeading(_)) => {
                not_lead.get_or_insert_with(ce);
                if colors.iter().all(gap_free) {
                    not_lead_gap_free.get_or_insert_with(ce);
                }
            }
            Err(e) => {
                not_zero.get_or_insert_with(|| json!(e.to_string()));
            }
        }
    }
    let out = |x: Option<Value>| x.map_or(Ok(()), Err);
    r.add_detailed(
        format!("comb operators on {arity} relations vanish when some s(α_i) ≤ |R_i|"),
        out(not_zero),
        Some(format!("{zero} zero")),
    );
    r.add_detailed(
        format!("comb operators on {arity} relations are unitriangular otherwise"),
        out(not_lead),
        Some(format!("{lead} unitriangular")),
    );
    r.add(
        format!("comb operators on {arity} relations are unitriangular otherwise, α without ⊔ letters"),
        out(not_lead_gap_free),
    );
}

fn quads(xs: &[IntRel]) -> Vec<[IntRel; 4]> {
    let mut out = Vec::new();
    for a in xs {
        for (b, c, d) in triples(xs) {
            out.push([a.clone(), b.clone(), c.clone(), d.clone()]);
        }
    }
    out
}

fn triples_of(xs: &[AlphaMap]) -> Vec<[AlphaMap; 3]> {
    let mut out = Vec::new();
    for a in xs {
        for b in xs {
            for c in xs {
                out.push([a.clone(), b.clone(), c.clone()]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducible_oracle() {
        assert_eq!(irreducible_counts(4), vec![1, 3, 57, 3963]);
    }

    #[test]
    fn rebracketing_condition() {
        let p = IntRel::point();
        let a: AlphaMap = "↑⊔↓".parse().unwrap();
        let g: AlphaMap = "↑".parse().unwrap();
        assert!(rebrackets(&p, &p, &p, &a, &g));
        assert!(a.size() > p.size());
        let b: AlphaMap = "↑↓".parse().unwrap();
        assert!(!rebrackets(&p, &p, &p, &b, &g));
    }

    #[test]
    fn suites() {
        let r = relation_laws(3);
        let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(
            failed,
            vec![
                "∗_α rebrackets exactly when s(α) ≤ |Q|",
                "word criterion for ⊔-irreducibility, clause (a) read as i < n-1"
            ],
            "{r}"
        );
        assert!(xi_suite(3, 0, false).passed());
        let x = comb_operator_laws();
        let failed: Vec<&str> = x.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, vec!["comb operators on three relations are unitriangular otherwise"], "{x}");
    }
}
