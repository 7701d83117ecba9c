"""Linear functionals on the coordinate algebra.

Three species, all evaluated exactly over Q(v):

* :class:`UqFunctional` -- an element of U_q(sl_N) acting through the
  fundamental Hopf pairing (exact mode for N = 2, 3);
* :class:`LWordFunctional` -- a convolution word of primitive L-matrix
  entries (optionally antipode-twisted), evaluated as matrix elements of
  per-letter R-matrix value tables (any N);
* :class:`SumFunctional` -- a Scalar-weighted linear combination.

The convolution product of functionals is (gh)(x) = sum g(x_(1)) h(x_(2));
the action on the algebra is X * x = (id (x) X) Delta(x).
"""

from __future__ import annotations

from functools import lru_cache

from .coord import CoordAlgebra, coord_algebra_relations_only
from .freealg import NCPoly
from .qea import UqAlgebra
from .scalars import MINUS_ONE, ONE, PowerBasis, Scalar, ZERO


class FunctionalError(ValueError):
    pass


# ---------------------------------------------------------------------------
# R-matrix
# ---------------------------------------------------------------------------

class RMatrix:
    """The SL_q(N) R-matrix R^ with entries over Q(v), plus its inverse.

    Convention (pinned by the evaluation values of the L-functional catalog):
    R^ = q sum_i E_ii(x)E_ii + sum_{i != j} E_ji(x)E_ij + lam sum_{i<j} E_ii(x)E_jj,
    acting on basis vectors e_k(x)e_l; entry R[i][j][k][l] is the coefficient
    of e_i(x)e_j in R^(e_k(x)e_l).
    """

    __slots__ = ("N", "pb", "entries", "inverse_entries")

    def __init__(self, N, pb):
        self.N = N
        self.pb = pb
        q, lam = pb.q(1), pb.lam()
        ent = {}
        for k in range(N):
            for l in range(N):
                if k == l:
                    ent[(k, k, k, k)] = q
                else:
                    ent[(l, k, k, l)] = ONE
                    if k < l:
                        ent[(k, l, k, l)] = lam
        # Hecke relation (R - q)(R + q^{-1}) = 0 gives R^{-1} = R - lam id
        inv = dict(ent)
        for k in range(N):
            for l in range(N):
                key = (k, l, k, l)
                c = inv.get(key, ZERO) - lam
                if c:
                    inv[key] = c
                elif key in inv:
                    del inv[key]
        self.entries = ent
        self.inverse_entries = inv

    def entry(self, i, j, k, l, sign=+1):
        table = self.entries if sign > 0 else self.inverse_entries
        return table.get((i, j, k, l), ZERO)

    def _apply(self, table, vec):
        out = {}
        for (i, j, k, l), c in table.items():
            x = vec.get((k, l))
            if x:
                key = (i, j)
                acc = out.get(key, ZERO) + c * x
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return out

    def check_inverse(self):
        N = self.N
        for k in range(N):
            for l in range(N):
                v = self._apply(self.entries, {(k, l): ONE})
                v = self._apply(self.inverse_entries, v)
                if v != {(k, l): ONE}:
                    return False
        return True

    def check_hecke(self):
        """(R - q)(R + q^{-1}) = 0 on all basis vectors."""
        N, q = self.N, self.pb.q(1)
        qinv = self.pb.q(-1)
        for k in range(N):
            for l in range(N):
                v = {(k, l): ONE}
                rv = self._apply(self.entries, v)
                w = dict(rv)
                acc = w.get((k, l), ZERO) + qinv
                w[(k, l)] = acc
                out = self._apply(self.entries, w)
                for kk, c in w.items():
                    acc = out.get(kk, ZERO) - q * c
                    if acc:
                        out[kk] = acc
                    elif kk in out:
                        del out[kk]
                if any(out.values()):
                    return False
        return True

    def check_braid(self):
        """R_12 R_23 R_12 = R_23 R_12 R_23 on all of (C^N)^{(x)3}."""
        N = self.N

        def apply12(table, vec):
            out = {}
            for (i, j, k, l), c in table.items():
                for m in range(N):
                    x = vec.get((k, l, m))
                    if x:
                        key = (i, j, m)
                        acc = out.get(key, ZERO) + c * x
                        if acc:
                            out[key] = acc
                        elif key in out:
                            del out[key]
            return out

        def apply23(table, vec):
            out = {}
            for (i, j, k, l), c in table.items():
                for m in range(N):
                    x = vec.get((m, k, l))
                    if x:
                        key = (m, i, j)
                        acc = out.get(key, ZERO) + c * x
                        if acc:
                            out[key] = acc
                        elif key in out:
                            del out[key]
            return out

        E = self.entries
        for a in range(N):
            for b in range(N):
                for c in range(N):
                    v = {(a, b, c): ONE}
                    lhs = apply12(E, apply23(E, apply12(E, v)))
                    rhs = apply23(E, apply12(E, apply23(E, v)))
                    if lhs != rhs:
                        return False
        return True


@lru_cache(maxsize=None)
def rmatrix(N, L):
    return RMatrix(N, PowerBasis(L))


# ---------------------------------------------------------------------------
# primitive L-functional value tables
# ---------------------------------------------------------------------------

class LData:
    """Per-letter value matrices of the primitive L-functionals.

    ``mat(sign, twisted, g)`` is a sparse dict (r, s) -> Scalar with the value
    of l^{sign r}_s (composed with the antipode when twisted) on generator g.
    """

    def __init__(self, N, pb):
        if pb.L % (2 * N):
            raise FunctionalError(
                "L-functionals need 2N | L (got N = %d, L = %d)" % (N, pb.L)
            )
        self.N = N
        self.pb = pb
        self.coord = coord_algebra_relations_only(N, pb.L)
        self.R = rmatrix(N, pb.L)
        self._tables = {}

    def _plain_matrix(self, sign, g):
        n, m = self.coord.gen_pos(g)
        p = self.pb.p(self.N, -sign)
        out = {}
        for r in range(self.N):
            for s in range(self.N):
                c = self.R.entry(r, n - 1, m - 1, s, sign)
                if c:
                    out[(r, s)] = p * c
        return out

    def mat(self, sign, twisted, g):
        key = (sign, twisted, g)
        t = self._tables.get(key)
        if t is not None:
            return t
        if not twisted:
            t = self._plain_matrix(sign, g)
        else:
            n, m = self.coord.gen_pos(g)
            kap = self.coord.antipode(self.coord.u(n, m), normalize=False)
            out = {}
            for w, c in kap.terms.items():
                # matrix product of plain letter matrices along the word
                prod = None
                for g2 in w:
                    mg = self._plain_matrix(sign, g2)
                    if prod is None:
                        prod = dict(mg)
                    else:
                        nxt = {}
                        for (r, x), v1 in prod.items():
                            for (x2, s), v2 in mg.items():
                                if x2 == x:
                                    acc = nxt.get((r, s), ZERO) + v1 * v2
                                    if acc:
                                        nxt[(r, s)] = acc
                                    elif (r, s) in nxt:
                                        del nxt[(r, s)]
                        prod = nxt
                if prod is None:
                    prod = {(r, r): ONE for r in range(self.N)}
                for k2, v in prod.items():
                    acc = out.get(k2, ZERO) + c * v
                    if acc:
                        out[k2] = acc
                    elif k2 in out:
                        del out[k2]
            t = out
        self._tables[key] = t
        return t


@lru_cache(maxsize=None)
def ldata(N, L):
    return LData(N, PowerBasis(L))


# ---------------------------------------------------------------------------
# functional species
# ---------------------------------------------------------------------------

class UqFunctional:
    """A U_q(sl_N) element acting on SL_q(N) through the fundamental pairing."""

    __slots__ = ("uq", "coord", "elem", "_values")

    def __init__(self, uq, coord, elem):
        if uq.N != coord.N:
            raise FunctionalError("N mismatch between U_q and coordinate algebra")
        self.uq = uq
        self.coord = coord
        self.elem = uq.nf(elem)
        self._values = {}

    @property
    def n(self):
        return self.coord.N

    def _estep(self, w, i, j):
        """sum <h_(1), u^i_j> h_(2) for the monomial h = w (legs normalized)."""
        cache = self.uq._e_cache
        key = (w, i, j)
        out = cache.get(key)
        if out is not None:
            return out
        cop = self.uq.coproduct(NCPoly.monomial(self.uq.alphabet, w))
        res = NCPoly(self.uq.alphabet)
        for (lw, rw), c in cop.terms.items():
            val = self._chain(lw, i, j)
            if val:
                cv = c * val
                acc = res.terms.get(rw)
                s = acc + cv if acc is not None else cv
                if s:
                    res.terms[rw] = s
                elif acc is not None:
                    del res.terms[rw]
        cache[key] = res
        return res

    def _chain(self, w, i, j):
        """<w, u^i_j> via the fundamental representation matrices (1-based i, j)."""
        N = self.uq.N
        vec = [ZERO] * N
        vec[i - 1] = ONE
        for g in w:
            M = self.uq.fundamental_matrix(g)
            new = [ZERO] * N
            for r in range(N):
                if vec[r]:
                    for s in range(N):
                        if M[r][s]:
                            new[s] = new[s] + vec[r] * M[r][s]
            vec = new
            if not any(vec):
                return ZERO
        return vec[j - 1]

    def value_word(self, cw):
        cached = self._values.get(cw)
        if cached is not None:
            return cached
        cur = dict(self.elem.terms)
        for g in cw:
            i, j = self.coord.gen_pos(g)
            nxt = {}
            for w, c in cur.items():
                p = self._estep(w, i, j)
                for w2, c2 in p.terms.items():
                    acc = nxt.get(w2, ZERO) + c * c2
                    if acc:
                        nxt[w2] = acc
                    elif w2 in nxt:
                        del nxt[w2]
            cur = nxt
            if not cur:
                break
        total = ZERO
        names = self.uq.alphabet.names
        for w, c in cur.items():
            if all(names[g2].startswith("k") for g2 in w):
                total = total + c
        self._values[cw] = total
        return total

    def value(self, x):
        total = ZERO
        for w, c in x.terms.items():
            v = self.value_word(w)
            if v:
                total = total + c * v
        return total

    def scale(self, c):
        return UqFunctional(self.uq, self.coord, self.elem.scale(c))

    def __repr__(self):
        return "UqFunctional(%r)" % (self.elem,)


class LWordFunctional:
    """Convolution word of primitive L-matrix entries.

    Each factor is (sign, i, j, twisted) with 1-based matrix indices i, j;
    ``twisted`` composes that factor with the coordinate antipode.  The empty
    word is the counit.
    """

    __slots__ = ("ld", "factors", "_values")

    def __init__(self, ld, factors):
        self.ld = ld
        self.factors = tuple(factors)
        self._values = {}

    @property
    def n(self):
        return self.ld.N

    @property
    def coord(self):
        return self.ld.coord

    def value_word(self, cw):
        cached = self._values.get(cw)
        if cached is not None:
            return cached
        N = self.ld.N
        k = len(self.factors)
        if k == 0:
            val = ONE if self.ld.coord.counit_word(cw) else ZERO
            self._values[cw] = val
            return val
        start = tuple(
            (fi - 1) if not tw else (fj - 1) for (_, fi, fj, tw) in self.factors
        )
        state = {start: ONE}
        gen_index = self.ld.coord.gen_index
        for g in cw:
            n_s, m_s = self.ld.coord.gen_pos(g)
            # T keys: (new-running-indices-prefix, current letter lower index,
            #          old-running-indices-suffix)
            T = {}
            for r, val in state.items():
                T[((), n_s - 1, r)] = val
            for t, (sign, _fi, _fj, twisted) in enumerate(self.factors):
                T2 = {}
                for (pre, a, suf), val in T.items():
                    rt, rest = suf[0], suf[1:]
                    for b in range(N):
                        mat = self.ld.mat(sign, twisted, gen_index(a + 1, b + 1))
                        for (rr, cc), mv in mat.items():
                            if twisted:
                                if cc != rt:
                                    continue
                                newr = rr
                            else:
                                if rr != rt:
                                    continue
                                newr = cc
                            key = (pre + (newr,), b, rest)
                            acc = T2.get(key, ZERO) + val * mv
                            if acc:
                                T2[key] = acc
                            elif key in T2:
                                del T2[key]
                T = T2
            state = {}
            for (pre, last, _), val in T.items():
                if last == m_s - 1:
                    acc = state.get(pre, ZERO) + val
                    if acc:
                        state[pre] = acc
                    elif pre in state:
                        del state[pre]
            if not state:
                break
        final = tuple(
            (fj - 1) if not tw else (fi - 1) for (_, fi, fj, tw) in self.factors
        )
        total = state.get(final, ZERO)
        self._values[cw] = total
        return total

    def value(self, x):
        total = ZERO
        for w, c in x.terms.items():
            v = self.value_word(w)
            if v:
                total = total + c * v
        return total

    def __repr__(self):
        bits = []
        for sign, i, j, tw in self.factors:
            s = "l%s[%d,%d]" % ("p" if sign > 0 else "m", i, j)
            if tw:
                s = "kappa(%s)" % s
            bits.append(s)
        return "LWord(%s)" % "*".join(bits) if bits else "LWord(eps)"


class SumFunctional:
    """Scalar-weighted linear combination of functionals."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = tuple((c, f) for (c, f) in parts if c)

    @property
    def n(self):
        return self.parts[0][1].n if self.parts else 0

    @property
    def coord(self):
        return self.parts[0][1].coord

    def value_word(self, cw):
        total = ZERO
        for c, f in self.parts:
            v = f.value_word(cw)
            if v:
                total = total + c * v
        return total

    def value(self, x):
        total = ZERO
        for w, c in x.terms.items():
            v = self.value_word(w)
            if v:
                total = total + c * v
        return total

    def __repr__(self):
        return "SumFunctional(%d parts)" % len(self.parts)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def pair(h, x):
    """Evaluate the functional on a coordinate element."""
    return h.value(x)


def convolve(X, x, coord=None, normalize=True):
    """The action X * x = x_(1) <X, x_(2)>, returned normalized when possible."""
    coord = coord or X.coord
    out = NCPoly(coord.alphabet)
    for w, c in x.terms.items():
        for (l, r), c2 in coord.coproduct_word(w):
            v = X.value_word(r)
            if v:
                cv = c * c2 * v
                acc = out.terms.get(l)
                s = acc + cv if acc is not None else cv
                if s:
                    out.terms[l] = s
                elif acc is not None:
                    del out.terms[l]
    if normalize and coord.system is not None:
        out = coord.nf(out)
    return out


def functional_mul(g, h):
    """Convolution product (gh)(x) = sum g(x_(1)) h(x_(2))."""
    if isinstance(g, SumFunctional):
        return SumFunctional([(c, functional_mul(f, h)) for c, f in g.parts]) if g.parts else g
    if isinstance(h, SumFunctional):
        return SumFunctional([(c, functional_mul(g, f)) for c, f in h.parts]) if h.parts else h
    if isinstance(g, UqFunctional) and isinstance(h, UqFunctional):
        if g.uq is not h.uq:
            raise FunctionalError("functionals over different enveloping algebras")
        return UqFunctional(g.uq, g.coord, g.elem * h.elem)
    if isinstance(g, LWordFunctional) and isinstance(h, LWordFunctional):
        if g.ld is not h.ld:
            raise FunctionalError("L-functionals over different data")
        return LWordFunctional(g.ld, g.factors + h.factors)
    raise FunctionalError(
        "cannot mix %s and %s in a convolution product" % (type(g).__name__, type(h).__name__)
    )


def functional_scale(f, c):
    if isinstance(f, UqFunctional):
        return f.scale(c)
    return SumFunctional([(c, f)])


def functional_add(f, g, cf=ONE, cg=ONE):
    parts = []
    for c, x in ((cf, f), (cg, g)):
        if isinstance(x, SumFunctional):
            parts.extend((c * c2, f2) for c2, f2 in x.parts)
        else:
            parts.append((c, x))
    return SumFunctional(parts)


def l_functional(sign, i, j, N, L=None):
    """The primitive functional l^{+/- i}_j for SL_q(N); needs 2N | L."""
    L = L if L is not None else 2 * N
    return LWordFunctional(ldata(N, L), ((sign, i, j, False),))


def kappa_twist(f):
    """Compose a functional with the coordinate antipode: (f o kappa)."""
    if isinstance(f, LWordFunctional):
        flipped = []
        for sign, i, j, tw in reversed(f.factors):
            if tw:
                raise FunctionalError("double antipode twist is not supported")
            flipped.append((sign, i, j, True))
        return LWordFunctional(f.ld, tuple(flipped))
    if isinstance(f, SumFunctional):
        return SumFunctional([(c, kappa_twist(x)) for c, x in f.parts])
    return _AntipodeComposed(f)


class _AntipodeComposed:
    """Generic fallback for f o kappa (used only in cross-checks)."""

    __slots__ = ("inner",)

    def __init__(self, inner):
        self.inner = inner

    @property
    def n(self):
        return self.inner.n

    @property
    def coord(self):
        return self.inner.coord

    def value_word(self, cw):
        kap = self.coord.antipode(
            NCPoly.monomial(self.coord.alphabet, cw), normalize=False
        )
        return self.inner.value(kap)

    def value(self, x):
        total = ZERO
        for w, c in x.terms.items():
            v = self.value_word(w)
            if v:
                total = total + c * v
        return total


def value_matrix(f, coord):
    """[f(u^i_j)] over all matrix entries, 1-based indexing into a nested tuple."""
    N = coord.N
    return tuple(
        tuple(f.value_word((coord.gen_index(i, j),)) for j in range(1, N + 1))
        for i in range(1, N + 1)
    )


def annihilates_relations(f, coord):
    """Well-definedness: the functional kills every defining relation."""
    for rel in coord.relations():
        if f.value(rel):
            return False
    return True


def functionals_equal(f, g, words):
    """Evidential equality: agreement on the supplied coordinate words."""
    return all(f.value_word(w) == g.value_word(w) for w in words)


def all_words(coord, max_degree):
    out = [()]
    frontier = [()]
    ngen = coord.N * coord.N
    for _ in range(max_degree):
        frontier = [w + (g,) for w in frontier for g in range(ngen)]
        out.extend(frontier)
    return out
