from __future__ import annotations

import pytest

from slqcalc import ncgb
from slqcalc.freealg import Alphabet, NCPoly
from slqcalc.qea import uq_algebra
from slqcalc.scalars import ONE, PowerBasis

pb = PowerBasis(2)


def test_commutative_plane():
    A = Alphabet(("x", "y"))
    x, y = NCPoly.gen(A, "x"), NCPoly.gen(A, "y")
    rs = ncgb.complete([y * x - x * y], A, 4)
    assert len(rs) == 1
    ok, wit = ncgb.is_groebner([y * x - x * y], A, 4)
    assert ok and not wit
    assert ncgb.graded_dims(rs, 5) == [1, 2, 3, 4, 5, 6]


def test_empty_relations_are_groebner():
    A = Alphabet(("x", "y", "z"))
    ok, wit = ncgb.is_groebner([], A, 4)
    assert ok and not wit
    rs = ncgb.complete([], A, 4)
    assert ncgb.graded_dims(rs, 4) == [3 ** n for n in range(5)]


def classical_pbw_count_sl2(n):
    # words f^a (k|kinv)^b e^c: the Cartan block contributes 2 signs when b > 0
    return sum(
        (2 if n - a - c > 0 else 1) for a in range(n + 1) for c in range(n + 1 - a)
    )


def nilpotent_count(m):
    # monomials e1^a e12^b e2^c with a + 2b + c = m
    return sum(
        1
        for a in range(m + 1)
        for b in range(m // 2 + 1)
        for c in range(m + 1)
        if a + 2 * b + c == m
    )


def classical_pbw_count_sl3(n):
    cnt = 0
    for m1 in range(n + 1):
        for m2 in range(n + 1 - m1):
            rest = n - m1 - m2
            for b1 in range(rest + 1):
                b2 = rest - b1
                cnt += (
                    nilpotent_count(m1)
                    * nilpotent_count(m2)
                    * (2 if b1 > 0 else 1)
                    * (2 if b2 > 0 else 1)
                )
    return cnt


def test_uq_sl2_normal_monomials_match_classical():
    U = uq_algebra(2)
    assert U.normal_monomial_count(4) == [classical_pbw_count_sl2(n) for n in range(5)]


def test_uq_sl3_normal_monomials_match_classical():
    U = uq_algebra(3)
    assert U.normal_monomial_count(5) == [classical_pbw_count_sl3(n) for n in range(6)]


def test_uq_sl2_relations_are_groebner():
    U = uq_algebra(2)
    ok, wit = ncgb.is_groebner(U.relations(), U.alphabet, 6)
    assert ok, wit[:1]


def test_perturbed_relations_fail_with_witness(gamma1, gamma1_closure):
    from slqcalc.exterior import exterior_system, form_alphabet

    C, sym = gamma1, gamma1_closure
    alph = form_alphabet(C)
    pos = {lbl: alph.index("w%s" % lbl) for lbl in C.labels}
    rels = [
        NCPoly(alph, {(pos[i], pos[j]): c for (i, j), c in row.items()})
        for row in sym.span.rows.values()
    ]
    ok, wit = ncgb.is_groebner(rels, alph, 4)
    assert ok and not wit
    # perturb one two-term relation's coefficient q -> q^2
    target = None
    for idx, p in enumerate(rels):
        if len(p.terms) == 2 and pb.q(1) in p.terms.values():
            target = idx
            break
    assert target is not None
    bad = []
    for idx, p in enumerate(rels):
        if idx != target:
            bad.append(p)
            continue
        q2 = NCPoly(p.alphabet)
        for w, c in p.terms.items():
            q2.terms[w] = pb.q(2) if c == pb.q(1) else c
        bad.append(q2)
    ok2, wit2 = ncgb.is_groebner(bad, alph, 4)
    assert not ok2 and wit2
    assert not wit2[0][1].is_zero()


def test_graded_dims_requires_normal_counting():
    # one cubic rule: words avoiding "xyx"
    A = Alphabet(("x", "y"))
    x, y = NCPoly.gen(A, "x"), NCPoly.gen(A, "y")
    rs = ncgb.complete([x * y * x - x * x * y], A, 6)
    dims = ncgb.graded_dims(rs, 4)
    assert dims[0] == 1 and dims[1] == 2
    assert dims[3] == 8 - 1  # only xyx excluded


def test_resource_guard():
    A = Alphabet(("x", "y"))
    x, y = NCPoly.gen(A, "x"), NCPoly.gen(A, "y")
    with pytest.raises(ncgb.ResourceError):
        ncgb.complete([y * x - x * y - x * x], A, 8, max_rules=1)
