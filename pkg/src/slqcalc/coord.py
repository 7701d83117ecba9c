"""The coordinate Hopf algebras SL_q(N).

Matrix entries u[i,j] with the standard q-commutation relations (fixed so
that ab = q ba for N = 2 and the quantum determinant is the central
grouplike element set to one), matrix coproduct, counit, antipode via
quantum cofactors, the quantum trace, and the three real forms of SL_q(2).

The monomial order refines degree by the number of diagonal letters, so the
determinant rule eliminates the main-diagonal monomial and normal forms use
the standard monomial basis (for N = 2: powers of a or d times b, c).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from . import ncgb
from .freealg import Alphabet, NCPoly, TensorPoly
from .scalars import MINUS_ONE, ONE, PowerBasis, Scalar, ZERO


def _inversions(perm):
    return sum(
        1 for x in range(len(perm)) for y in range(x + 1, len(perm)) if perm[x] > perm[y]
    )


class CoordAlgebra:
    """SL_q(N): relations, Hopf maps, quantum trace, real forms."""

    def __init__(self, N, pb, completion_bound=4, complete_system=None):
        if N < 2:
            raise ValueError("N must be at least 2")
        self.N = N
        self.pb = pb
        names, weights = [], []
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                names.append("u[%d,%d]" % (i, j))
                weights.append(1 if i == j else 0)
        self.alphabet = Alphabet(names, weights)
        self.aliases = {}
        if N == 2:
            self.aliases = {"a": "u[1,1]", "b": "u[1,2]", "c": "u[2,1]", "d": "u[2,2]"}
        if complete_system is None:
            complete_system = N <= 3
        if complete_system:
            self.system = ncgb.complete(self.relations(), self.alphabet, completion_bound)
        else:
            self.system = None
        self._antipode_table = None

    # -- generators -----------------------------------------------------------

    def gen_index(self, i, j):
        return (i - 1) * self.N + (j - 1)

    def u(self, i, j):
        return NCPoly.monomial(self.alphabet, (self.gen_index(i, j),))

    def one(self):
        return NCPoly.one(self.alphabet)

    def scalar(self, c):
        return NCPoly(self.alphabet, {(): c}) if c else NCPoly(self.alphabet)

    def gen_pos(self, g):
        """Inverse of gen_index: 1-based (row, col) of generator g."""
        return (g // self.N + 1, g % self.N + 1)

    # -- presentation -----------------------------------------------------------

    def det_q(self):
        """Quantum determinant: signed sum over permutations with (-q) weights."""
        out = NCPoly(self.alphabet)
        for perm in permutations(range(1, self.N + 1)):
            word = tuple(self.gen_index(i + 1, perm[i]) for i in range(self.N))
            out.terms[word] = (-self.pb.q(1)) ** _inversions(perm)
        return out

    def relations(self):
        q, lam = self.pb.q(1), self.pb.lam()
        rels = []
        N, u = self.N, self.u
        for i in range(1, N + 1):
            for k in range(1, N + 1):
                for l in range(k + 1, N + 1):
                    rels.append(u(i, k) * u(i, l) - (u(i, l) * u(i, k)).scale(q))
        for k in range(1, N + 1):
            for i in range(1, N + 1):
                for j in range(i + 1, N + 1):
                    rels.append(u(i, k) * u(j, k) - (u(j, k) * u(i, k)).scale(q))
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                for k in range(1, N + 1):
                    for l in range(k + 1, N + 1):
                        rels.append(u(i, l) * u(j, k) - u(j, k) * u(i, l))
                        rels.append(
                            u(i, k) * u(j, l) - u(j, l) * u(i, k) - (u(i, l) * u(j, k)).scale(lam)
                        )
        rels.append(self.det_q() - self.one())
        return rels

    def nf(self, p):
        if self.system is None:
            raise RuntimeError("no completed rewrite system for N = %d" % self.N)
        return self.system.normal_form(p)

    # -- Hopf structure -----------------------------------------------------------

    def coproduct_word(self, word):
        """Matrix coproduct on a monomial, as a list of ((left, right), coeff)."""
        N = self.N
        paths = [((), (), ONE)]
        for g in word:
            i, j = self.gen_pos(g)
            paths = [
                (l + (self.gen_index(i, m),), r + (self.gen_index(m, j),), c)
                for (l, r, c) in paths
                for m in range(1, N + 1)
            ]
        return [((l, r), c) for (l, r, c) in paths]

    def coproduct(self, p):
        out = TensorPoly(p.alphabet)
        for w, c in p.terms.items():
            for (l, r), c2 in self.coproduct_word(w):
                out._bump((l, r), c * c2)
        return out

    def counit_word(self, word):
        for g in word:
            i, j = self.gen_pos(g)
            if i != j:
                return ZERO
        return ONE

    def counit(self, p):
        total = ZERO
        for w, c in p.terms.items():
            if self.counit_word(w):
                total = total + c
        return total

    def _minor(self, rows, cols):
        out = NCPoly(self.alphabet)
        idx = list(range(len(rows)))
        for perm in permutations(idx):
            word = tuple(self.gen_index(rows[t], cols[perm[t]]) for t in idx)
            c = (-self.pb.q(1)) ** _inversions(perm)
            out.terms[word] = out.terms.get(word, ZERO) + c
        return out

    def antipode_gen(self, i, j):
        """kappa(u[i,j]) = (-q)^(i-j) * quantum minor deleting row j, column i."""
        rows = [r for r in range(1, self.N + 1) if r != j]
        cols = [c for c in range(1, self.N + 1) if c != i]
        return self._minor(rows, cols).scale((-self.pb.q(1)) ** (i - j))

    def antipode(self, p, normalize=True):
        """Antihomomorphic extension of the generator antipode."""
        if self._antipode_table is None:
            self._antipode_table = {
                g: self.antipode_gen(*self.gen_pos(g)) for g in range(self.N * self.N)
            }
        out = NCPoly(p.alphabet)
        for w, c in p.terms.items():
            acc = NCPoly(p.alphabet, {(): c})
            for g in reversed(w):
                acc = acc * self._antipode_table[g]
            out = out + acc
        if normalize and self.system is not None:
            out = self.nf(out)
        return out

    def quantum_trace(self):
        out = NCPoly(self.alphabet)
        for i in range(1, self.N + 1):
            out.terms[(self.gen_index(i, i),)] = self.pb.q(-2 * i)
        return out

    # -- real forms -----------------------------------------------------------

    def real_form(self, name):
        if self.N != 2:
            raise ValueError("real forms are provided for N = 2 only")
        q = self.pb.q(1)
        a, b, c, d = self.u(1, 1), self.u(1, 2), self.u(2, 1), self.u(2, 2)
        if name == "su2":
            return RealForm("su2", {0: d, 1: c.scale(-q), 2: b.scale(-self.pb.q(-1)), 3: a}, False)
        if name == "su11":
            return RealForm("su11", {0: d, 1: c.scale(q), 2: b.scale(self.pb.q(-1)), 3: a}, False)
        if name == "sl2r":
            return RealForm("sl2r", {0: a, 1: b, 2: c, 3: d}, True)
        raise ValueError("unknown real form %r" % name)

    def star(self, p, rf):
        """Antilinear antimultiplicative involution for the real form rf."""
        out = NCPoly(p.alphabet)
        for w, coeff in p.terms.items():
            c = coeff.subs_v_inverse() if rf.conjugate_v else coeff
            acc = NCPoly(p.alphabet, {(): c})
            for g in reversed(w):
                acc = acc * rf.images[g]
            out = out + acc
        return out


class RealForm:
    """Generator images of a *-involution plus the coefficient automorphism."""

    __slots__ = ("name", "images", "conjugate_v")

    def __init__(self, name, images, conjugate_v):
        self.name = name
        self.images = images
        self.conjugate_v = conjugate_v

    def __repr__(self):
        return "RealForm(%s)" % self.name


@lru_cache(maxsize=None)
def coord_algebra(N, L=2, completion_bound=4):
    return CoordAlgebra(N, PowerBasis(L), completion_bound)


@lru_cache(maxsize=None)
def coord_algebra_relations_only(N, L):
    return CoordAlgebra(N, PowerBasis(L), complete_system=False)
