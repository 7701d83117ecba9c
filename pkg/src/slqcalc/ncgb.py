"""Degree-truncated noncommutative Groebner bases (Buchberger/Mora style).

Relations are oriented into rewriting rules by their leading words,
interreduced, and completed by resolving all overlap ambiguities whose
overlap word stays within a degree bound.  Every run terminates; the
result is confluent for all words up to the bound.  Also provides the
Groebner-property check with failing obstructions as witnesses, and
graded dimension counting for quotients by homogeneous rule sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .freealg import NCPoly, RewriteSystem, Word, poly_from_rule, rule_from_poly


class ResourceError(RuntimeError):
    """Completion exceeded a configured resource budget."""


@dataclass(frozen=True)
class ObstructionPair:
    """An overlap of two leading words: lhs_i ends where lhs_j begins."""

    i: int
    j: int
    overlap: Word

    def spoly_parts(self, lhs_i, lhs_j):
        k = len(lhs_i) + len(lhs_j) - len(self.overlap)
        return self.overlap[: len(lhs_i) - k], self.overlap[len(lhs_i):]


def _overlap_words(l1, l2):
    """Proper overlaps: nonempty suffix of l1 equal to a prefix of l2."""
    out = []
    for k in range(1, min(len(l1), len(l2))):
        if l1[-k:] == l2[:k]:
            out.append(l1 + l2[k:])
    return out


def interreduce(rules, alphabet, degree_cap=None):
    """Reduce each rule against the others until a stable reduced set remains."""
    polys = [poly_from_rule(l, r) for l, r in rules]
    changed = True
    while changed:
        changed = False
        polys.sort(key=lambda p: alphabet.order_key(p.leading_word()))
        idx = 0
        while idx < len(polys):
            others = polys[:idx] + polys[idx + 1:]
            if not others:
                idx += 1
                continue
            rs = RewriteSystem(alphabet, [rule_from_poly(p) for p in others])
            nf = rs.normal_form(polys[idx], degree_cap)
            if nf != polys[idx]:
                changed = True
                if nf.is_zero():
                    polys.pop(idx)
                    continue
                lw = nf.leading_word()
                polys[idx] = nf.scale(nf.terms[lw].inverse())
            idx += 1
    return [rule_from_poly(p) for p in polys]


def _coeff_size(p):
    return sum(len(c.num) + len(c.den) for c in p.terms.values())


def _scan_obstructions(rules, alphabet, degree_bound, first_only=False):
    """Reduce every overlap S-polynomial; return the nonzero normal forms.

    Obstruction pairs are processed in lexicographic order of their overlap
    words for reproducible runs.
    """
    rs = RewriteSystem(alphabet, rules)
    pairs = []
    for i, (li, _) in enumerate(rules):
        for j, (lj, _) in enumerate(rules):
            for w in _overlap_words(li, lj):
                if len(w) <= degree_bound:
                    pairs.append(ObstructionPair(i, j, w))
    pairs.sort(key=lambda ob: (len(ob.overlap), ob.overlap, ob.i, ob.j))
    found = []
    for ob in pairs:
        li, ri = rules[ob.i]
        lj, rj = rules[ob.j]
        pre, post = ob.spoly_parts(li, lj)
        left = NCPoly.monomial(alphabet, pre) * poly_from_rule(lj, rj)
        right = poly_from_rule(li, ri) * NCPoly.monomial(alphabet, post)
        nf = rs.normal_form(left - right)
        if not nf.is_zero():
            found.append((ob, nf))
            if first_only:
                return found
    return found


def complete(relations, alphabet, degree_bound, max_rules=4000, coeff_budget=400000):
    """Complete a relation list to a rewriting system, truncated at degree_bound.

    Postcondition: every overlap ambiguity whose overlap word has length at
    most ``degree_bound`` resolves to zero under the returned system, and the
    rules are interreduced with unit leading coefficients.  Terminates always:
    rule leading words live in the finite set of words of length <= bound and
    each round strictly shrinks the language of normal words.
    """
    rules = interreduce(
        [rule_from_poly(p) for p in relations if not p.is_zero()], alphabet
    )
    while True:
        found = _scan_obstructions(rules, alphabet, degree_bound)
        if not found:
            break
        fresh = []
        lws = {l for l, _ in rules}
        for _, nf in found:
            if _coeff_size(nf) > coeff_budget:
                raise ResourceError("coefficient size budget exceeded during completion")
            lw = nf.leading_word()
            if lw in lws:
                continue
            lws.add(lw)
            fresh.append(rule_from_poly(nf.scale(nf.terms[lw].inverse())))
        rules = interreduce(rules + fresh, alphabet)
        if len(rules) > max_rules:
            raise ResourceError("rule budget exceeded during completion")
    rs = RewriteSystem(alphabet, rules)
    for p in relations:
        if not rs.normal_form(p).is_zero():
            raise RuntimeError("input relation does not reduce to zero after completion")
    return rs


def is_groebner(relations, alphabet, degree_bound):
    """Check confluence of the oriented relation set up to degree_bound.

    Returns (flag, witnesses); each witness is (ObstructionPair, normal form)
    for an overlap whose S-polynomial does not reduce to zero.
    """
    rules = interreduce(
        [rule_from_poly(p) for p in relations if not p.is_zero()], alphabet
    )
    witnesses = _scan_obstructions(rules, alphabet, degree_bound)
    return not witnesses, witnesses


def graded_dims(rs, n_max):
    """Dimensions of the quotient by a homogeneous rule set, degrees 0..n_max.

    d_n counts the words of length n containing no rule's leading word as a
    subword.
    """
    lead = [lhs for lhs, _ in rs.rules]
    maxlen = max((len(l) for l in lead), default=1)
    g = len(rs.alphabet)
    dims = [1]
    frontier = [()]
    for _ in range(n_max):
        nxt = []
        for w in frontier:
            for a in range(g):
                nw = w + (a,)
                tail = nw[-maxlen:]
                if any(
                    tail[len(tail) - len(l):] == l
                    for l in lead
                    if len(l) <= len(tail)
                ):
                    continue
                nxt.append(nw)
        dims.append(len(nxt))
        frontier = nxt
    return dims
