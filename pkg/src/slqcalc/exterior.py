"""Higher-order structure of the catalog calculi.

From the symmetric elements S(x) of right-ideal members this module
computes: the stable invariant span S(R) (closure under right action
followed by the invariant projection), the involution sigma encoding the
quadratic relations, the quadratic rewriting system of the exterior
algebra with its graded dimensions, Maurer-Cartan differentials, the
differential on reduced forms, classical limits at v = 1, and the
two-form vanishing certificates.
"""

from __future__ import annotations

from . import ncgb
from .fodc import Calculus, CalculusError, OneForm, TwoTensor, right_ideal_generators
from .freealg import Alphabet, NCPoly, RewriteSystem
from .scalars import MINUS_ONE, ONE, Scalar, ZERO


class ShapeError(CalculusError):
    """A closure basis element is not of the recognized two/three-term shape."""


class PairSpan:
    """Row space of invariant 2-tensors with Gaussian elimination.

    Pivot = largest pair in the lexicographic extension of the label order,
    so echelon rows rewrite 'disordered' pairs into earlier ones.
    """

    def __init__(self, labels):
        self.pos = {lbl: i for i, lbl in enumerate(labels)}
        self.rows = {}

    def _key(self, pair):
        return (self.pos[pair[0]], self.pos[pair[1]])

    def reduce(self, vec):
        vec = dict(vec)
        while vec:
            piv = max(vec, key=self._key)
            row = self.rows.get(piv)
            if row is None:
                return vec
            c = vec[piv]
            for k, v in row.items():
                acc = vec.get(k, ZERO) - c * v
                if acc:
                    vec[k] = acc
                elif k in vec:
                    del vec[k]
        return vec

    def insert(self, vec):
        vec = self.reduce(vec)
        if not vec:
            return False
        piv = max(vec, key=self._key)
        inv = vec[piv].inverse()
        self.rows[piv] = {k: v * inv for k, v in vec.items()}
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    def dim(self):
        return len(self.rows)


class SymSpace:
    """The stable span S(R) plus the raw S-values of the seed generators."""

    def __init__(self, calculus, span, seeds):
        self.calculus = calculus
        self.span = span
        self.seeds = seeds  # list of (generator NCPoly, TwoTensor)

    def dim(self):
        return self.span.dim()

    def contains(self, vec):
        if isinstance(vec, TwoTensor):
            vec = vec.coeffs
        return self.span.contains(vec)

    def basis_vectors(self):
        return [dict(row) for row in self.span.rows.values()]


def _apply_action(mat, vec):
    out = {}
    for key, c in vec.items():
        row = mat.get(key)
        if not row:
            continue
        for key2, v in row.items():
            acc = out.get(key2, ZERO) + c * v
            if acc:
                out[key2] = acc
            elif key2 in out:
                del out[key2]
    return out


def closure(C, seeds=None, max_rounds=None, targets=None):
    """Iterate t -> P_inv(t u^i_j) from S(seed generators) to a stable span.

    Every seed must be a verified right-ideal member.  If ``targets`` is
    given, iteration stops early once all target vectors lie in the span.
    """
    if seeds is None:
        seeds = right_ideal_generators(C)
    for g in seeds:
        if not C.ideal_member(g):
            raise CalculusError("closure seed is not annihilated by the calculus")
    span = PairSpan(C.labels)
    raw = []
    frontier = []
    for g in seeds:
        t = C.symmetric(g, warn_offideal=False)
        raw.append((g, t))
        if span.insert(t.coeffs):
            frontier.append(dict(t.coeffs))
    mats = C.action_matrices()
    limit = max_rounds if max_rounds is not None else len(C.labels) ** 2 + 1
    rounds = 0

    def targets_met():
        return targets is not None and all(span.contains(t) for t in targets)

    while frontier and rounds < limit and not targets_met():
        rounds += 1
        new_frontier = []
        for vec in frontier:
            for mat in mats.values():
                img = _apply_action(mat, vec)
                if img and span.insert(img):
                    new_frontier.append(img)
        frontier = new_frontier
    if frontier and not targets_met() and rounds >= limit:
        raise CalculusError("closure did not stabilize within %d rounds" % limit)
    return SymSpace(C, span, raw)


# ---------------------------------------------------------------------------
# sigma
# ---------------------------------------------------------------------------

class SigmaMatrix:
    """Sparse involution on the tensor square of the invariant forms."""

    def __init__(self, labels, entries):
        self.labels = labels
        self.entries = entries  # dict[(row pair, col pair)] -> Scalar
        self._cols = {}
        for (row, col), c in entries.items():
            self._cols.setdefault(col, {})[row] = c

    def column(self, pair):
        return self._cols.get(pair, {})

    def apply(self, vec):
        out = {}
        for col, c in vec.items():
            for row, v in self.column(col).items():
                acc = out.get(row, ZERO) + c * v
                if acc:
                    out[row] = acc
                elif row in out:
                    del out[row]
        return out

    def apply_slot(self, vec3, slot):
        """Apply on legs (slot, slot+1) of a 3-tensor dict."""
        out = {}
        for key, c in vec3.items():
            pair = (key[slot], key[slot + 1])
            for (r1, r2), v in self.column(pair).items():
                nk = list(key)
                nk[slot], nk[slot + 1] = r1, r2
                nk = tuple(nk)
                acc = out.get(nk, ZERO) + c * v
                if acc:
                    out[nk] = acc
                elif nk in out:
                    del out[nk]
        return out

    def is_involution(self):
        for col in list(self._cols) + [
            (i, j) for i in self.labels for j in self.labels
        ]:
            v = self.apply(self.apply({col: ONE}))
            if v != {col: ONE}:
                return False
        return True

    def rank_minus_id(self, sign=-1):
        """rank(sigma + sign*id)."""
        span = PairSpan(self.labels)
        for i in self.labels:
            for j in self.labels:
                col = (i, j)
                vec = dict(self.column(col))
                acc = vec.get(col, ZERO) + (ONE if sign > 0 else MINUS_ONE)
                if acc:
                    vec[col] = acc
                elif col in vec:
                    del vec[col]
                span.insert(vec)
        return span.dim()


def _classify(vec, pos):
    support = sorted(vec, key=lambda p: (pos[p[0]], pos[p[1]]))
    if len(support) == 1:
        (p,) = support
        return ("square", p) if p[0] == p[1] else ("pure", p)
    if len(support) == 2:
        p, pr = support
        if p == (pr[1], pr[0]):
            i, j = (p if pos[p[0]] < pos[p[1]] else pr)
            mu = vec[(j, i)] / vec[(i, j)]
            return ("two", (i, j), mu)
        return ("other", support)
    if len(support) == 3:
        main = [p for p in support if (p[1], p[0]) in vec and p != (p[1], p[0])]
        if len(main) == 2:
            i, j = (main[0] if pos[main[0][0]] < pos[main[0][1]] else main[1])
            tail = [p for p in support if p not in main][0]
            lead = vec[(i, j)]
            return ("three", (i, j), vec[(j, i)] / lead, tail, vec[tail] / lead)
    return ("other", support)


def sigma(C, sym=None):
    """Build the involution from the computed S-shapes of the seed generators.

    Entry conventions: for a two-term element w_i(x)w_j + mu w_j(x)w_i the
    nonzero entries are sigma[(j,i),(i,j)] = mu and sigma[(i,j),(j,i)] = 1/mu;
    a three-term element with leading ordered pair (i,j), swap coefficient
    gamma and tail delta*w_n(x)w_m adds sigma[(n,m),(i,j)] = delta and the
    partner entry forced by involutivity.  Diagonal squares and pairs covered
    by a pure word carry +1 / -1.
    """
    if sym is None:
        sym = closure(C)
    pos = {lbl: i for i, lbl in enumerate(C.labels)}
    squares, pures, twos, threes = set(), set(), {}, []
    leftover = []
    for g, t in sym.seeds:
        vec = dict(t.coeffs)
        if not vec:
            continue
        kind = _classify(vec, pos)
        if kind[0] == "square":
            squares.add(kind[1])
        elif kind[0] == "pure":
            pures.add(kind[1])
        elif kind[0] == "two":
            _, pair, mu = kind
            if pair in twos and twos[pair] != mu:
                raise ShapeError("conflicting two-term coefficients on %s" % (pair,))
            twos[pair] = mu
        elif kind[0] == "three":
            threes.append(kind)
        else:
            leftover.append(vec)
    # mixed shapes (e.g. the trace generator) reduce against collected elements
    probe = PairSpan(C.labels)
    for p in squares:
        probe.insert({p: ONE})
    for (i, j), mu in twos.items():
        probe.insert({(i, j): ONE, (j, i): mu})
    for _, (i, j), gamma, tail, delta in threes:
        probe.insert({(i, j): ONE, (j, i): gamma, tail: delta})
    changed = True
    while changed and leftover:
        changed = False
        rest = []
        for vec in leftover:
            red = probe.reduce(vec)
            if not red:
                continue
            kind = _classify(red, pos)
            if kind[0] == "square":
                squares.add(kind[1])
            elif kind[0] == "pure":
                pures.add(kind[1])
            elif kind[0] == "two":
                twos.setdefault(kind[1], kind[2])
            elif kind[0] == "three":
                threes.append(kind)
            else:
                rest.append(red)
                continue
            probe.insert(red)
            changed = True
        leftover = rest
    if leftover:
        raise ShapeError("unrecognized closure element shapes: %r" % (leftover[:1],))
    # pure words can also arise as differences of a three-term and a two-term
    # element on the same main pair
    for _, (i, j), gamma, tail, delta in threes:
        mu = twos.get((i, j))
        if mu is not None and mu == gamma:
            pures.add(tail)
    entries = {}
    for lbl in C.labels:
        entries[((lbl, lbl), (lbl, lbl))] = ONE
    for p in pures:
        entries[(p, p)] = ONE
        rev = (p[1], p[0])
        entries[(rev, rev)] = MINUS_ONE
    for (i, j), mu in twos.items():
        entries[((j, i), (i, j))] = mu
        entries[((i, j), (j, i))] = mu.inverse()
    for _, (i, j), gamma, tail, delta in threes:
        mu_main = twos.get((i, j))
        if mu_main is None:
            # the three-term element also carries the swap block of its main pair
            entries[((j, i), (i, j))] = gamma
            entries[((i, j), (j, i))] = gamma.inverse()
        elif mu_main != gamma:
            raise ShapeError("inconsistent swap coefficients on pair (%s, %s)" % (i, j))
        entries[(tail, (i, j))] = entries.get((tail, (i, j)), ZERO) + delta
        if tail in pures:
            # involutivity forces the partner entry on the same (fixed) tail
            entries[(tail, (j, i))] = entries.get((tail, (j, i)), ZERO) - delta * gamma.inverse()
        else:
            tp = (tail[0], tail[1])
            mu_t = twos.get(tp)
            if mu_t is None:
                rv = (tail[1], tail[0])
                mu_r = twos.get(rv)
                if mu_r is None:
                    raise ShapeError("three-term tail %s has no partner pair" % (tail,))
                mu_t = mu_r.inverse()
            rev = (tail[1], tail[0])
            entries[(rev, (j, i))] = (
                entries.get((rev, (j, i)), ZERO) - delta * mu_t * gamma.inverse()
            )
    sg = SigmaMatrix(C.labels, {k: v for k, v in entries.items() if v})
    if not sg.is_involution():
        raise ShapeError("constructed sigma is not an involution")
    for row in sym.span.rows.values():
        img = sg.apply(row)
        if img != row:
            raise ShapeError("sigma does not fix the symmetric span")
    return sg


def sigma_relation_table(C, sg):
    """For each i != j: X_i X_j - sum sigma^{ij}_{nm} X_n X_m as a U_q element,
    decomposed over the basis functionals; returns {(i, j): {k: coeff}}."""
    from .fodc import _solve_rows

    uq = C.uq
    out = {}
    basis = {lbl: C.X[lbl].elem for lbl in C.labels}
    mono_rows = sorted({w for p in basis.values() for w in p.terms})
    cols = list(C.labels)
    for i in C.labels:
        for j in C.labels:
            if i == j:
                continue
            t = C.pair_functional(i, j).elem
            for (n, m), c in _sigma_row(sg, (i, j)).items():
                t = t - C.pair_functional(n, m).elem.scale(c)
            t = uq.nf(t)
            rows = []
            by = dict(t.terms)
            extra = [w for w in by if w not in mono_rows]
            if extra:
                raise CalculusError(
                    "relation residual for (%s,%s) is not in the functional span" % (i, j)
                )
            for m1 in mono_rows:
                coeffs = [basis[k].terms.get(m1, ZERO) for k in cols]
                rhs = {(): by[m1]} if m1 in by else {}
                rows.append((coeffs, rhs))
            sol, residual = _solve_rows(rows, len(cols))
            if residual:
                raise CalculusError("relation decomposition failed at (%s,%s)" % (i, j))
            out[(i, j)] = {
                k: sol[idx].get((), ZERO) for idx, k in enumerate(cols) if sol[idx]
            }
    return out


def _sigma_row(sg, pair):
    out = {}
    for (row, col), c in sg.entries.items():
        if row == pair:
            out[col] = c
    return out


# ---------------------------------------------------------------------------
# exterior algebra: quadratic system, dimensions, differentials
# ---------------------------------------------------------------------------

def form_alphabet(C):
    """Alphabet of basis 1-forms.

    Generator precedence is the reverse of the label order, so the leading
    word of each quadratic relation is its earlier (label-ordered) pair and
    the surviving monomials match the classical exterior algebra.
    """
    return Alphabet(tuple("w%s" % lbl for lbl in reversed(C.labels)))


def exterior_system(C, sym=None, degree_bound=4):
    """Quadratic rewriting system of the exterior algebra on the omega basis."""
    if sym is None:
        sym = closure(C)
    alph = form_alphabet(C)
    pos = {lbl: alph.index("w%s" % lbl) for lbl in C.labels}
    rels = []
    for row in sym.span.rows.values():
        p = NCPoly(alph, {(pos[i], pos[j]): c for (i, j), c in row.items()})
        rels.append(p)
    return ncgb.complete(rels, alph, degree_bound), alph


def dims(C, n_max=None, system=None):
    if system is None:
        system = exterior_system(C)
    rs, _ = system
    if n_max is None:
        n_max = len(C.labels) + 1
    return ncgb.graded_dims(rs, n_max)


def maurer_cartan(C, system=None):
    """dw_i = -w(x_(1)) ^ w(x_(2)) for the dual elements, reduced mod S(R)."""
    if system is None:
        system = exterior_system(C)
    rs, alph = system
    pos = {lbl: alph.index("w%s" % lbl) for lbl in C.labels}
    out = {}
    for lbl in C.labels:
        x = C.duals[lbl]
        p = NCPoly(alph)
        for i in C.labels:
            for j in C.labels:
                c = C.pair_value(i, j, x)
                if c:
                    w = (pos[i], pos[j])
                    acc = p.terms.get(w, ZERO) - c
                    if acc:
                        p.terms[w] = acc
                    elif w in p.terms:
                        del p.terms[w]
        out[lbl] = rs.normal_form(p)
    return out


class FormElement:
    """Reduced exterior form with coordinate coefficients kept on the left."""

    __slots__ = ("calculus", "terms")

    def __init__(self, calculus, terms=None):
        self.calculus = calculus
        self.terms = {}
        for w, c in (terms or {}).items():
            if not c.is_zero():
                self.terms[w] = c

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            if w in out:
                s = out[w] + c
                if s.is_zero():
                    del out[w]
                else:
                    out[w] = s
            else:
                out[w] = c
        return FormElement(self.calculus, out)

    def scale(self, c):
        return FormElement(self.calculus, {w: p.scale(c) for w, p in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, FormElement) and self.terms == other.terms


def push_left(C, word, poly, labels, pos=None):
    """Move a coordinate coefficient leftwards through an omega word.

    Returns dict word -> NCPoly with all coefficients on the left.
    """
    pos = pos or {lbl: i for i, lbl in enumerate(labels)}
    cur = {(): poly}
    for letter in reversed(word):
        lbl = labels[letter]
        nxt = {}
        for suffix, coeff in cur.items():
            moved = C.commutation_oneform(lbl, coeff)
            for lbl2, cf in moved.coeffs.items():
                key = (pos[lbl2],) + suffix
                if key in nxt:
                    nxt[key] = nxt[key] + cf
                else:
                    nxt[key] = cf
        cur = nxt
    return cur


class FormCalculus:
    """Differential-graded structure on reduced forms for one calculus."""

    def __init__(self, C, sym=None):
        self.C = C
        self.system = exterior_system(C, sym)
        self.rs, self.alph = self.system
        self.mc = maurer_cartan(C, self.system)
        self.pos = {lbl: self.alph.index("w%s" % lbl) for lbl in C.labels}
        self.labels = [self.alph.names[i][1:] for i in range(len(C.labels))]

    def from_oneform(self, form):
        return FormElement(
            self.C, {(self.pos[lbl],): c for lbl, c in form.coeffs.items()}
        )

    def constant(self, x):
        return FormElement(self.C, {(): x})

    def reduce(self, f):
        """Apply the quadratic rules to the omega words (coefficients ride along)."""
        out = {}
        for w, coeff in f.terms.items():
            p = self.rs.normal_form(NCPoly.monomial(self.alph, w))
            for w2, c in p.terms.items():
                add = coeff.scale(c)
                if w2 in out:
                    out[w2] = out[w2] + add
                else:
                    out[w2] = add
        if self.C.coord.system is not None:
            out = {w: self.C.coord.nf(c) for w, c in out.items()}
        return FormElement(self.C, out)

    def wedge(self, f, g):
        out = {}
        for w1, c1 in f.terms.items():
            for w2, c2 in g.terms.items():
                pushed = push_left(self.C, w1, c2, self.labels, self.pos)
                for w1b, mid in pushed.items():
                    key = w1b + w2
                    add = c1 * mid
                    if key in out:
                        out[key] = out[key] + add
                    else:
                        out[key] = add
        return self.reduce(FormElement(self.C, out))

    def d_word(self, w):
        """d of a product of basis forms, via the graded Leibniz rule."""
        total = FormElement(self.C)
        for t, letter in enumerate(w):
            mcpoly = self.mc[self.labels[letter]]
            sign = ONE if t % 2 == 0 else MINUS_ONE
            for w2, c in mcpoly.terms.items():
                key = w[:t] + w2 + w[t + 1:]
                total = total + FormElement(
                    self.C, {key: self.C.coord.one().scale(c * sign)}
                )
        return total

    def d(self, f):
        """Exterior differential of a reduced form (graded Leibniz rule)."""
        total = FormElement(self.C)
        for w, coeff in f.terms.items():
            df = self.C.differential(coeff)
            for lbl, c in df.coeffs.items():
                key = (self.pos[lbl],) + w
                total = total + FormElement(self.C, {key: c})
            dword = self.d_word(w)
            for w2, c in dword.terms.items():
                total = total + FormElement(self.C, {w2: coeff * c})
        return self.reduce(total)


def d_on_forms(C, f, fc=None):
    fc = fc or FormCalculus(C)
    return fc.d(f)


# ---------------------------------------------------------------------------
# classical limit
# ---------------------------------------------------------------------------

def classical_limit(C):
    """Specialize the structure tables at v = 1 and compare with the
    commutative/classical expectations; returns a report dict."""
    from fractions import Fraction

    coord = C.coord
    report = {"calculus": C.name, "poles": [], "commutation_trivial": True}
    N = coord.N
    for k in C.labels:
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                form = C.commutation_oneform(k, coord.u(i, j))
                for lbl, coeff in form.coeffs.items():
                    for w, c in coeff.terms.items():
                        try:
                            val = c.specialize(1)
                        except Exception as exc:  # pole at v = 1
                            report["poles"].append(((k, (i, j)), str(exc)))
                            continue
                        expect = (
                            Fraction(1)
                            if (lbl == k and w == (coord.gen_index(i, j),))
                            else Fraction(0)
                        )
                        if val != expect:
                            report["commutation_trivial"] = False
    return report


# ---------------------------------------------------------------------------
# vanishing certificates
# ---------------------------------------------------------------------------

def two_form_membership(C, pair, seeds=None):
    """Certify w_pair (x) w_pair-reverse in S(R) via a targeted closure."""
    i, j = pair
    targets = [{(i, j): ONE}, {(j, i): ONE}]
    sym = closure(C, seeds=seeds, targets=targets)
    return sym.contains(targets[0]), sym.contains(targets[1]), sym


def degree_two_ideal_seeds(C):
    """The defects of all degree-2 monomials: m - eps(m)1 - sum X_i(m) x~_i.

    Each defect is annihilated by the counit and by every basis functional by
    construction, so this is the complete degree-2 slice of the right ideal.
    """
    coord = C.coord
    one = coord.one()
    xt = {}
    for lbl in C.labels:
        d = C.duals[lbl]
        xt[lbl] = d - one.scale(coord.counit(d))
    seeds = []
    ngen = coord.N * coord.N
    for g1 in range(ngen):
        for g2 in range(ngen):
            m = NCPoly.monomial(coord.alphabet, (g1, g2))
            defect = m - one.scale(coord.counit(m))
            for lbl in C.labels:
                c = C.x_value(lbl, m)
                if c:
                    defect = defect - xt[lbl].scale(c)
            if not defect.is_zero():
                seeds.append(defect)
    return seeds


def sln_vanishing(N, r, L=None, calculus=None):
    """For SL_q(N), N >= 4: the 2-form w_1N ^ w_N1 vanishes (r = 1, 2)."""
    from .fodc import catalog

    C = calculus or catalog("sln", N=N, r=r, L=L)
    ok, report = C.lemma1_check()
    if not ok:
        raise CalculusError("stated coproduct table failed verification: %r" % (report,))
    seeds = degree_two_ideal_seeds(C)
    lbl_in, lbl_ni = "1%d" % N, "%d1" % N
    in_span, rev_in_span, sym = two_form_membership(C, (lbl_in, lbl_ni), seeds)
    return {
        "calculus": C.name,
        "mode": "evidential(%d)" % C.mode[1],
        "pair": (lbl_in, lbl_ni),
        "wedge_vanishes": in_span,
        "reverse_in_span": rev_in_span,
        "span_dim": sym.dim(),
    }


# ---------------------------------------------------------------------------
# membership reports
# ---------------------------------------------------------------------------

def lemma3_report(r, v0=None, L=2):
    """Derivation transcript for the mixed 2-form membership question on the
    SL_q(2) calculi: recomputes the displayed S-values and the chain
    P_inv(S((a - gamma_0) b) c) (or its mirrors), then decides whether the
    pure tensor w_0 (x) w_2 lies in the symmetric span.

    At a specialized value v0 with q**12 = 1 the run refuses, naming the
    guard, since the eliminations divide by cyclotomic factors of q**12 - 1.
    """
    from .fodc import catalog
    from .scalars import Scalar

    if r not in (2, 3, 4):
        raise CalculusError("the mixed 2-form report covers r = 2, 3, 4")
    C = catalog("sl2", r=r, L=L)
    pb = C.pb
    if v0 is not None:
        if pb.q(12).specialize(v0) == 1:
            return {
                "r": r,
                "refused": True,
                "guard": "q^12 - 1 vanishes at v = %s" % (v0,),
            }
    coord = C.coord
    a, b = coord.u(1, 1), coord.u(1, 2)
    c = coord.u(2, 1)
    one = coord.one()
    qm2 = pb.q(-2)
    sq = a * a - a.scale(ONE + qm2) + one.scale(qm2)
    tr = a + coord.u(2, 2).scale(qm2) - one.scale(ONE + qm2)
    S_sq = C.symmetric(sq)
    S_tr = C.symmetric(tr)
    inverted = []
    m = S_tr.coeffs[("1", "1")] / S_sq.coeffs[("1", "1")]
    inverted.append(pb.render(S_sq.coeffs[("1", "1")]))
    combined = S_tr - S_sq.scale(m)  # pure {0,2}-block vector
    from .fodc import sl2_gamma_table

    g0, g2 = sl2_gamma_table(pb, r)
    if r == 2:
        x, y = (a - one.scale(g0)) * b, c
    elif r == 3:
        x, y = (a - one.scale(g2)) * c, b
    else:
        x, y = (a - one.scale(g2)) * c, b
    S_x = C.symmetric(x)
    chain = C.symmetric_times(x, y)
    # decide membership of w0 (x) w2 in span{combined, chain}
    c1 = (combined.coeffs.get(("0", "2"), ZERO), combined.coeffs.get(("2", "0"), ZERO))
    c2 = (chain.coeffs.get(("0", "2"), ZERO), chain.coeffs.get(("2", "0"), ZERO))
    det = c1[0] * c2[1] - c1[1] * c2[0]
    member = bool(det)
    if member:
        inverted.append(pb.render(det))
    sym = closure(C)
    oracle = sym.contains({("0", "2"): ONE})
    return {
        "r": r,
        "refused": False,
        "displayed": {
            "S(a^2-(1+q^-2)a+q^-2)": {k: pb.render(v) for k, v in S_sq.coeffs.items()},
            "S(a+q^-2 d-(1+q^-2))": {k: pb.render(v) for k, v in S_tr.coeffs.items()},
            "S(generator)": {k: pb.render(v) for k, v in S_x.coeffs.items()},
            "chain": {k: pb.render(v) for k, v in chain.coeffs.items()},
            "combined": {k: pb.render(v) for k, v in combined.coeffs.items()},
        },
        "inverted_factors": inverted,
        "membership_from_displays": member,
        "membership_from_closure": oracle,
        "closure_dim": sym.dim(),
    }


def lemma4_report(alpha, beta, L=2):
    """The five S-displays on SL_q(3) with both product chains, the corrected
    chain identities, and the membership decision for w_13 (x) w_31."""
    from .fodc import catalog

    C = catalog("sl3", alpha=alpha, beta=beta, L=L)
    pb = C.pb
    u = C.coord.u
    q, qi = pb.q(1), pb.q(-1)
    S1221 = C.symmetric(u(1, 2) * u(2, 1))
    S2332 = C.symmetric(u(2, 3) * u(3, 2))
    S1331 = C.symmetric(u(1, 3) * u(3, 1))
    chain1 = C.symmetric_times(u(1, 2) * u(2, 1), u(3, 3))
    chain2 = C.symmetric_times(u(2, 3) * u(3, 2), u(1, 1))
    want1 = S1221 + S1331.scale((q - alpha) * (q - beta)) + TwoTensor(
        {("13", "31"): (ONE - q * alpha) * (beta - qi)}
    )
    want2 = S2332 + S1331.scale((qi - alpha) * (qi - beta)) + TwoTensor(
        {("31", "13"): -qi * (alpha - q) * (beta - q)}
    )
    sym = closure(C)
    return {
        "alpha": pb.render(alpha),
        "beta": pb.render(beta),
        "displays": {
            "S(u12 u21)": {k: pb.render(v) for k, v in S1221.coeffs.items()},
            "S(u23 u32)": {k: pb.render(v) for k, v in S2332.coeffs.items()},
            "S(u13 u31)": {k: pb.render(v) for k, v in S1331.coeffs.items()},
            "S(u12 u21 u33)": {k: pb.render(v) for k, v in chain1.coeffs.items()},
            "S(u23 u32 u11)": {k: pb.render(v) for k, v in chain2.coeffs.items()},
        },
        "chain1_identity": chain1 == want1,
        "chain2_identity": chain2 == want2,
        "member_13_31": sym.contains({("13", "31"): ONE}),
        "member_31_13": sym.contains({("31", "13"): ONE}),
        "closure_dim": sym.dim(),
    }
