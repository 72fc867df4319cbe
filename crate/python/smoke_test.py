"""Smoke test for the magbialg_py extension."""

import json

import magbialg_py as mb


def main():
    t = mb.Tree("(|(||))")
    m = dict((str(x), c) for x, c in mb.moebius_elem(t))
    assert m == {"(|(||))": 1, "((||)|)": -1}, m
    for n in range(1, 7):
        for x in mb.enumerate_trees(n):
            assert sorted(mb.moebius_elem(x)) == sorted(mb.moebius_elem_oracle(x))
    assert [len(mb.enumerate_trees(n)) for n in range(1, 7)] == [1, 1, 2, 5, 14, 42]
    assert [mb.prim_dim(n) for n in range(1, 7)] == [1, 0, 1, 2, 6, 18]
    assert [mb.prim_dim(n, colors=2) for n in range(1, 5)] == [1, 1, 5, 25]
    assert mb.tamari_leq(mb.Tree("((||)|)"), t)
    assert mb.tamari_mobius(mb.Tree("((||)|)"), t) == -1
    assert mb.Tree.from_dyck(t.dyck()) == t

    p = mb.IntRel(1)
    up = mb.prod_basic(p, p, "↑")
    assert up.arcs == [(1, 2)]
    assert sorted(mb.xi(up)) == sorted([(mb.IntRel(2), -1), (up, 1)])
    r = mb.IntRel.from_json(json.dumps({"n": 3, "arcs": [[1, 3], [3, 2]]}))
    assert r.is_sqcup_irreducible()
    assert mb.is_primitive_rel(mb.xi(r))
    q = mb.IntRel(3, [(1, 2), (1, 3), (3, 2)])
    added = set(mb.prod_alpha(mb.IntRel(2, [(2, 1)]), q, "↑⊔↓").arcs) - {(2, 1), (3, 4), (3, 5), (5, 4)}
    assert added == {(2, 3), (5, 2)}, added
    assert sum(c for _, c in mb.shuffle_prod(p, up, "↑")) == 3
    try:
        mb.xi(mb.IntRel(2))
    except ValueError:
        pass
    else:
        raise AssertionError("reducible relation accepted")

    code, out = mb.cli(["--json", "prim-dims", "--max-n", "6"])
    assert code == 0 and json.loads(out)["dims"] == [1, 0, 1, 2, 6, 18]
    print("smoke test passed")


if __name__ == "__main__":
    main()
