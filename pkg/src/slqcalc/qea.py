"""The quantized enveloping algebras U_q(sl_2) and U_q(sl_3).

Generators k_i, kinv_i, e_i, f_i with the standard presentation; normal
forms come from a degree-truncated completion of the defining relations,
with generator precedence f-block < (kinv_1, k_1, kinv_2, k_2, ...) <
e-block, so normal monomials are sorted into f / Cartan / e blocks.
Coproduct and counit are the usual ones; the antipode is deliberately
not provided (nothing downstream needs it).
"""

from __future__ import annotations

from functools import lru_cache

from . import ncgb
from .freealg import Alphabet, NCPoly, TensorPoly
from .scalars import ONE, PowerBasis, Scalar, ZERO


class UqAlgebra:
    """U_q(sl_N) with completed rewriting rules and Hopf structure maps."""

    def __init__(self, N, pb, completion_bound=6):
        if N < 2:
            raise ValueError("N must be at least 2")
        self.N = N
        self.pb = pb
        names = ["f%d" % i for i in range(1, N)]
        for i in range(1, N):
            names += ["kinv%d" % i, "k%d" % i]
        names += ["e%d" % i for i in range(1, N)]
        if N == 2:
            names = ["f", "kinv", "k", "e"]
        self.alphabet = Alphabet(names)
        self.system = ncgb.complete(self.relations(), self.alphabet, completion_bound)
        self._e_cache = {}
        self._cop_cache = {}

    # -- generators ----------------------------------------------------------

    def _name(self, base, i):
        if self.N == 2:
            return base
        return "%s%d" % (base, i)

    def gen(self, base, i=1):
        return NCPoly.gen(self.alphabet, self._name(base, i))

    def e(self, i=1):
        return self.gen("e", i)

    def f(self, i=1):
        return self.gen("f", i)

    def k_power(self, i, m):
        """k_i**m as a monomial (kinv_i powers for negative m)."""
        name = self._name("k" if m >= 0 else "kinv", i)
        g = self.alphabet.index(name)
        return NCPoly.monomial(self.alphabet, (g,) * abs(m))

    def one(self):
        return NCPoly.one(self.alphabet)

    def scalar(self, c):
        return NCPoly(self.alphabet, {(): c}) if c else NCPoly(self.alphabet)

    # -- presentation ---------------------------------------------------------

    def relations(self):
        pb, N = self.pb, self.N
        q = pb.q(1)
        lam_inv = pb.lam().inverse()
        rels = []
        E, F = self.e, self.f

        def K(i, m):
            return self.k_power(i, m)

        for i in range(1, N):
            rels.append(K(i, 1) * K(i, -1) - self.one())
            rels.append(K(i, -1) * K(i, 1) - self.one())
        for i in range(1, N):
            for j in range(i + 1, N):
                for a in (K(i, 1), K(i, -1)):
                    for b in (K(j, 1), K(j, -1)):
                        rels.append(a * b - b * a)
        for i in range(1, N):
            rels.append(K(i, 1) * E(i) - E(i) * K(i, 1).scale(q))
            rels.append(K(i, -1) * E(i) - E(i) * K(i, -1).scale(pb.q(-1)))
            rels.append(K(i, 1) * F(i) - F(i) * K(i, 1).scale(pb.q(-1)))
            rels.append(K(i, -1) * F(i) - F(i) * K(i, -1).scale(q))
        for i in range(1, N):
            for j in range(1, N):
                comm = E(i) * F(j) - F(j) * E(i)
                if i == j:
                    comm = comm - (K(i, 2) - K(i, -2)).scale(lam_inv)
                rels.append(comm)
        for i in range(1, N):
            for j in range(1, N):
                if abs(i - j) == 1:
                    rels.append(K(i, 1) * E(j) - E(j) * K(i, 1).scale(pb.q_half(-1)))
                    rels.append(K(i, -1) * E(j) - E(j) * K(i, -1).scale(pb.q_half(1)))
                    rels.append(K(i, 1) * F(j) - F(j) * K(i, 1).scale(pb.q_half(1)))
                    rels.append(K(i, -1) * F(j) - F(j) * K(i, -1).scale(pb.q_half(-1)))
                    lp = pb.lam_plus()
                    rels.append(E(i) * E(i) * E(j) - (E(i) * E(j) * E(i)).scale(lp) + E(j) * E(i) * E(i))
                    rels.append(F(i) * F(i) * F(j) - (F(i) * F(j) * F(i)).scale(lp) + F(j) * F(i) * F(i))
                elif i < j:  # distance >= 2
                    rels.append(K(i, 1) * E(j) - E(j) * K(i, 1))
                    rels.append(K(i, -1) * E(j) - E(j) * K(i, -1))
                    rels.append(K(i, 1) * F(j) - F(j) * K(i, 1))
                    rels.append(K(i, -1) * F(j) - F(j) * K(i, -1))
                    rels.append(K(j, 1) * E(i) - E(i) * K(j, 1))
                    rels.append(K(j, -1) * E(i) - E(i) * K(j, -1))
                    rels.append(K(j, 1) * F(i) - F(i) * K(j, 1))
                    rels.append(K(j, -1) * F(i) - F(i) * K(j, -1))
                    rels.append(E(i) * E(j) - E(j) * E(i))
                    rels.append(F(i) * F(j) - F(j) * F(i))
        return rels

    # -- Hopf structure -------------------------------------------------------

    def nf(self, p):
        return self.system.normal_form(p)

    def _gen_coproduct(self, g):
        name = self.alphabet.names[g]
        base = name.rstrip("0123456789")
        i = int(name[len(base):]) if self.N > 2 else 1
        mono = lambda *gs: NCPoly.monomial(self.alphabet, tuple(gs))
        if base in ("k", "kinv"):
            return TensorPoly(self.alphabet, {((g,), (g,)): ONE})
        ki = self.alphabet.index(self._name("k", i))
        kinvi = self.alphabet.index(self._name("kinv", i))
        return TensorPoly(
            self.alphabet, {((ki,), (g,)): ONE, ((g,), (kinvi,)): ONE}
        )

    def coproduct(self, p, normalize=True):
        """Algebra-homomorphism extension of the generator coproducts."""
        out = TensorPoly(p.alphabet)
        for w, c in p.terms.items():
            t = self._cop_cache.get(w)
            if t is None:
                t = TensorPoly(p.alphabet, {((), ()): ONE})
                for g in w:
                    t = t * self._gen_coproduct(g)
                if normalize:
                    t = t.map_legs(lambda u: self.nf(NCPoly.monomial(p.alphabet, u)))
                self._cop_cache[w] = t
            for k2, c2 in t.terms.items():
                out._bump(k2, c * c2)
        return out

    def counit(self, p):
        names = self.alphabet.names
        total = ZERO
        for w, c in p.terms.items():
            if all(names[g].startswith("k") for g in w):
                total = total + c
        return total

    # -- pairing data ----------------------------------------------------------

    def fundamental_matrix(self, g):
        """Values of generator g on the quantum matrix entries (row, col 0-based)."""
        name = self.alphabet.names[g]
        base = name.rstrip("0123456789")
        i = int(name[len(base):]) if self.N > 2 else 1
        N, pb = self.N, self.pb
        M = [[ZERO] * N for _ in range(N)]
        if base == "e":
            M[i - 1][i] = ONE
        elif base == "f":
            M[i][i - 1] = ONE
        else:
            s = 1 if base == "k" else -1
            for n in range(N):
                if n == i - 1:
                    M[n][n] = pb.q_half(s)
                elif n == i:
                    M[n][n] = pb.q_half(-s)
                else:
                    M[n][n] = ONE
        return tuple(tuple(row) for row in M)

    def normal_monomial_count(self, max_degree):
        """Number of normal-form monomials of each degree 0..max_degree."""
        return ncgb.graded_dims(self.system, max_degree)


@lru_cache(maxsize=None)
def uq_algebra(N, L=2, completion_bound=6):
    return UqAlgebra(N, PowerBasis(L), completion_bound)
