"""Noncommutative polynomials over Q(v) in an indexed generator alphabet.

Shared substrate for the coordinate algebras, the quantized enveloping
algebras and the tensor algebra of invariant forms.  Words are tuples of
generator indices; polynomials are sparse maps word -> Scalar.  Rewriting
to normal form is driven by :class:`RewriteSystem`, whose rules strictly
decrease the monomial order (degree, then an optional per-generator weight,
then left-to-right lexicographic comparison by generator precedence).
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ONE, ZERO, MINUS_ONE, PowerBasis, Scalar, ScalarError

Word = tuple


class AlphabetError(ValueError):
    """Mismatched or malformed alphabets."""


class DegreeCapError(RuntimeError):
    """Rewriting touched a word beyond the configured degree cap."""


class Alphabet:
    """Ordered generator names; the order defines monomial precedence.

    ``weights`` is an optional secondary grading used by the monomial order
    (after total degree, before lexicographic comparison).  The coordinate
    algebras weight diagonal entries so the quantum-determinant rule
    eliminates the main-diagonal monomial.
    """

    __slots__ = ("names", "weights", "_index")

    def __init__(self, names, weights=None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise AlphabetError("generator names must be unique")
        self.names = names
        self.weights = tuple(weights) if weights is not None else (0,) * len(names)
        if len(self.weights) != len(names):
            raise AlphabetError("one weight per generator required")
        self._index = {n: i for i, n in enumerate(names)}

    def index(self, name):
        return self._index[name]

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names and self.weights == other.weights

    def __hash__(self):
        return hash((self.names, self.weights))

    def order_key(self, word):
        if any(self.weights):
            return (len(word), sum(self.weights[g] for g in word), word)
        return (len(word), 0, word)

    def word_str(self, word):
        if not word:
            return "1"
        return "*".join(self.names[g] for g in word)


class NCPoly:
    """Sparse noncommutative polynomial: map word -> nonzero Scalar."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet, terms=None):
        self.alphabet = alphabet
        self.terms = {}
        if terms:
            for w, c in terms.items() if isinstance(terms, dict) else terms:
                if c:
                    acc = self.terms.get(w)
                    c = acc + c if acc is not None else c
                    if c:
                        self.terms[w] = c
                    elif acc is not None:
                        del self.terms[w]

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, alphabet):
        return cls(alphabet)

    @classmethod
    def one(cls, alphabet):
        return cls(alphabet, {(): ONE})

    @classmethod
    def monomial(cls, alphabet, word, coeff=ONE):
        return cls(alphabet, {tuple(word): coeff})

    @classmethod
    def gen(cls, alphabet, name):
        return cls(alphabet, {(alphabet.index(name),): ONE})

    # -- ring operations ----------------------------------------------------

    def _check(self, other):
        if self.alphabet != other.alphabet:
            raise AlphabetError("operands live over different alphabets")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            acc = out.get(w)
            s = acc + c if acc is not None else c
            if s:
                out[w] = s
            elif acc is not None:
                del out[w]
        p = NCPoly(self.alphabet)
        p.terms = out
        return p

    def __neg__(self):
        p = NCPoly(self.alphabet)
        p.terms = {w: -c for w, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        self._check(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                acc = out.get(w)
                s = acc + c if acc is not None else c
                if s:
                    out[w] = s
                elif acc is not None:
                    del out[w]
        p = NCPoly(self.alphabet)
        p.terms = out
        return p

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        if not c:
            return NCPoly(self.alphabet)
        p = NCPoly(self.alphabet)
        p.terms = {w: c * x for w, x in self.terms.items()}
        return p

    def __eq__(self, other):
        return (
            isinstance(other, NCPoly)
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((len(w) for w in self.terms), default=-1)

    def leading_word(self):
        if not self.terms:
            return None
        key = self.alphabet.order_key
        return max(self.terms, key=key)

    def key(self):
        """Canonical hashable key (for caches)."""
        return tuple(sorted((w, c.key()) for w, c in self.terms.items()))

    def map_coeffs(self, f):
        p = NCPoly(self.alphabet)
        for w, c in self.terms.items():
            c2 = f(c)
            if c2:
                p.terms[w] = c2
        return p

    def reversed_words(self):
        """Reverse every word (antihomomorphism on monomials)."""
        p = NCPoly(self.alphabet)
        for w, c in self.terms.items():
            p.terms[tuple(reversed(w))] = c
        return p

    def __repr__(self):
        return "NCPoly(%s)" % render(self, PowerBasis(2))


class RewriteSystem:
    """Ordered rewriting rules lhs-word -> replacement polynomial.

    Invariant: every monomial of a replacement is strictly smaller than the
    rule's left-hand word in the alphabet's monomial order, so rewriting
    terminates; rules are stored reduced against each other with unit
    leading coefficient.
    """

    __slots__ = ("alphabet", "rules", "_by_first")

    def __init__(self, alphabet, rules):
        self.alphabet = alphabet
        key = alphabet.order_key
        self.rules = tuple(sorted(rules, key=lambda r: key(r[0])))
        for lhs, rhs in self.rules:
            for w in rhs.terms:
                if key(w) >= key(lhs):
                    raise ValueError(
                        "rule %s does not decrease the monomial order" % (lhs,)
                    )
        by_first = {}
        for lhs, rhs in self.rules:
            by_first.setdefault(lhs[0], []).append((lhs, rhs))
        for v in by_first.values():
            v.sort(key=lambda r: (len(r[0]), r[0]))
        self._by_first = by_first

    def find_match(self, word):
        """Leftmost match: (position, lhs, rhs) or None."""
        by_first = self._by_first
        n = len(word)
        for pos in range(n):
            cands = by_first.get(word[pos])
            if not cands:
                continue
            rest = n - pos
            for lhs, rhs in cands:
                m = len(lhs)
                if m <= rest and word[pos : pos + m] == lhs:
                    return pos, lhs, rhs
        return None

    def normal_form(self, p, degree_cap=None):
        """Rewrite p until no subword matches any rule's left-hand word."""
        if not isinstance(p, NCPoly) or p.alphabet != self.alphabet:
            raise AlphabetError("polynomial/system alphabet mismatch")
        key = self.alphabet.order_key
        pending = dict(p.terms)
        done = {}
        while pending:
            w = max(pending, key=key)
            c = pending.pop(w)
            if not c:
                continue
            if degree_cap is not None and len(w) > degree_cap:
                raise DegreeCapError(
                    "word of degree %d exceeds cap %d" % (len(w), degree_cap)
                )
            m = self.find_match(w)
            if m is None:
                acc = done.get(w)
                s = acc + c if acc is not None else c
                if s:
                    done[w] = s
                elif acc is not None:
                    del done[w]
                continue
            pos, lhs, rhs = m
            pre, post = w[:pos], w[pos + len(lhs):]
            for w2, c2 in rhs.terms.items():
                nw = pre + w2 + post
                acc = pending.get(nw)
                s = acc + c * c2 if acc is not None else c * c2
                if s:
                    pending[nw] = s
                elif acc is not None:
                    del pending[nw]
        out = NCPoly(self.alphabet)
        out.terms = done
        return out

    def is_normal(self, p):
        return all(self.find_match(w) is None for w in p.terms)

    def __len__(self):
        return len(self.rules)


def rule_from_poly(p):
    """Orient a nonzero polynomial into (lhs, rhs) with unit leading coefficient."""
    lw = p.leading_word()
    lc = p.terms[lw]
    rhs = NCPoly(p.alphabet)
    inv = lc.inverse()
    for w, c in p.terms.items():
        if w != lw:
            rhs.terms[w] = -(c * inv)
    return lw, rhs


def poly_from_rule(lhs, rhs):
    p = NCPoly(rhs.alphabet, dict(rhs.terms))
    p.terms[lhs] = p.terms.get(lhs, ZERO) + MINUS_ONE
    return -p


# ---------------------------------------------------------------------------
# tensor squares (used for coproducts)
# ---------------------------------------------------------------------------

class TensorPoly:
    """Element of A (x) A for a free algebra A: map (word, word) -> Scalar."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet, terms=None):
        self.alphabet = alphabet
        self.terms = {}
        if terms:
            for k, c in terms.items() if isinstance(terms, dict) else terms:
                if c:
                    self.terms[k] = self.terms.get(k, ZERO) + c
                    if not self.terms[k]:
                        del self.terms[k]

    @classmethod
    def of(cls, left, right):
        out = cls(left.alphabet)
        for w1, c1 in left.terms.items():
            for w2, c2 in right.terms.items():
                c = c1 * c2
                if c:
                    out._bump((w1, w2), c)
        return out

    def _bump(self, key, c):
        acc = self.terms.get(key)
        s = acc + c if acc is not None else c
        if s:
            self.terms[key] = s
        elif acc is not None:
            del self.terms[key]

    def __add__(self, other):
        out = TensorPoly(self.alphabet, dict(self.terms))
        for k, c in other.terms.items():
            out._bump(k, c)
        return out

    def __sub__(self, other):
        out = TensorPoly(self.alphabet, dict(self.terms))
        for k, c in other.terms.items():
            out._bump(k, -c)
        return out

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        out = TensorPoly(self.alphabet)
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                out._bump((l1 + l2, r1 + r2), c1 * c2)
        return out

    def scale(self, c):
        out = TensorPoly(self.alphabet)
        if c:
            out.terms = {k: c * x for k, x in self.terms.items()}
        return out

    def map_legs(self, f):
        """Apply a word -> NCPoly map to both legs (e.g. normalization)."""
        out = TensorPoly(self.alphabet)
        lcache = {}
        for (wl, wr), c in self.terms.items():
            pl = lcache.get(wl)
            if pl is None:
                pl = lcache[wl] = f(wl)
            pr = lcache.get(wr)
            if pr is None:
                pr = lcache[wr] = f(wr)
            for w1, c1 in pl.terms.items():
                cc = c * c1
                for w2, c2 in pr.terms.items():
                    out._bump((w1, w2), cc * c2)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, TensorPoly)
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms


# ---------------------------------------------------------------------------
# expression parser / printer
# ---------------------------------------------------------------------------

class ParseError(ValueError):
    pass


_SYMBOL_CHARS = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_[],")


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*/^()":
            tokens.append(ch)
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
            continue
        if ch in _SYMBOL_CHARS:
            j = i
            depth = 0
            while j < n and (text[j] in _SYMBOL_CHARS or (depth and text[j] in "[],")):
                if text[j] == "[":
                    depth += 1
                if text[j] == "]":
                    depth -= 1
                    j += 1
                    if depth == 0 and not (j < n and text[j] in _SYMBOL_CHARS):
                        break
                    continue
                if depth == 0 and text[j] in ",":
                    break
                j += 1
            name = text[i:j]
            if name == "lam" and text[j : j + 1] == "+":
                name, j = "lam+", j + 1
            tokens.append(("name", name))
            i = j
            continue
        raise ParseError("unexpected character %r" % ch)
    return tokens


class _Parser:
    def __init__(self, tokens, alphabet, pb, aliases):
        self.toks = tokens
        self.pos = 0
        self.alphabet = alphabet
        self.pb = pb
        self.aliases = aliases or {}

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.pos += 1
        return t

    def _scalar(self, x):
        if self.alphabet is None:
            return x
        return NCPoly(self.alphabet, {(): x}) if x else NCPoly(self.alphabet)

    def _mul(self, a, b):
        if isinstance(a, Scalar) and isinstance(b, Scalar):
            return a * b
        if isinstance(a, Scalar):
            return b.scale(a)
        if isinstance(b, Scalar):
            return a.scale(b)
        return a * b

    def parse(self):
        v = self.expr()
        if self.peek() is not None:
            raise ParseError("trailing input at token %d" % self.pos)
        return v

    def expr(self):
        t = self.peek()
        neg = False
        if t == "+" or t == "-":
            self.take()
            neg = t == "-"
        v = self.term()
        if neg:
            v = -v if isinstance(v, Scalar) else v.scale(MINUS_ONE)
        while self.peek() in ("+", "-"):
            op = self.take()
            w = self.term()
            if op == "-":
                w = -w if isinstance(w, Scalar) else w.scale(MINUS_ONE)
            v = v + w
        return v

    def term(self):
        v = self.factor()
        while True:
            t = self.peek()
            if t == "*":
                self.take()
                v = self._mul(v, self.factor())
            elif t == "/":
                self.take()
                w = self.factor()
                if not isinstance(w, Scalar):
                    if w.terms and set(w.terms) == {()}:
                        w = w.terms[()]
                    else:
                        raise ParseError("division only by scalars")
                v = self._mul(v, w.inverse())
            elif isinstance(t, tuple) or t == "(":
                # juxtaposition as multiplication is not allowed; be strict
                raise ParseError("missing operator before token %r" % (t,))
            else:
                return v

    def factor(self):
        v = self.atom()
        if self.peek() == "^":
            self.take()
            e = self.exponent()
            if isinstance(v, _QBase):
                return self._scalar(self.pb.q_frac(e.numerator, e.denominator))
            if isinstance(v, Scalar):
                if e.denominator != 1:
                    raise ParseError("fractional power of a non-q scalar")
                return v ** int(e)
            if isinstance(v, NCPoly) and set(v.terms) <= {()}:
                if e.denominator != 1:
                    raise ParseError("fractional power of a non-q scalar")
                c = v.terms.get((), ZERO)
                return self._scalar(c ** int(e))
            if e.denominator != 1 or e < 0:
                raise ParseError("generator powers must be nonnegative integers")
            out = NCPoly.one(self.alphabet) if self.alphabet else ONE
            for _ in range(int(e)):
                out = self._mul(out, v)
            return out
        if isinstance(v, _QBase):
            return self._scalar(self.pb.q(1))
        return v

    def exponent(self):
        t = self.take()
        if t == "(":
            e = self.signed_int()
            if self.peek() == "/":
                self.take()
                d = self.signed_int()
                e = Fraction(e, d)
            else:
                e = Fraction(e)
            if self.take() != ")":
                raise ParseError("expected ')' in exponent")
            return e
        if t == "-":
            t2 = self.take()
            if isinstance(t2, tuple) and t2[0] == "int":
                return Fraction(-t2[1])
            raise ParseError("bad exponent")
        if isinstance(t, tuple) and t[0] == "int":
            return Fraction(t[1])
        raise ParseError("bad exponent")

    def signed_int(self):
        t = self.take()
        if t == "-":
            t = self.take()
            return -t[1]
        return t[1]

    def atom(self):
        t = self.take()
        if t == "(":
            v = self.expr()
            if self.take() != ")":
                raise ParseError("expected ')'")
            return v
        if isinstance(t, tuple):
            kind, val = t
            if kind == "int":
                return self._scalar(Scalar.from_fraction(val))
            if kind == "name":
                name = self.aliases.get(val, val)
                if name == "q":
                    return _QBase()
                if name == "v":
                    return self._scalar(Scalar.v_power(1))
                if name == "lam":
                    return self._scalar(self.pb.lam())
                if name == "lam+":
                    return self._scalar(self.pb.lam_plus())
                if self.alphabet is not None and name in self.alphabet._index:
                    return NCPoly.gen(self.alphabet, name)
                raise ParseError("unknown symbol %r" % val)
        raise ParseError("unexpected token %r" % (t,))


class _QBase:
    """Marker for a bare q awaiting an optional exponent."""


def parse_expression(text, alphabet, pb, aliases=None):
    """Parse text into an NCPoly over ``alphabet`` (or a Scalar if None)."""
    v = _Parser(_tokenize(text), alphabet, pb, aliases).parse()
    if isinstance(v, _QBase):
        v = pb.q(1)
    if alphabet is not None and isinstance(v, Scalar):
        return NCPoly(alphabet, {(): v}) if v else NCPoly(alphabet)
    return v


def render(p, pb, names=None):
    """Print an NCPoly; terms in ascending monomial order, q-notation coefficients."""
    if not p.terms:
        return "0"
    alphabet = p.alphabet
    namelist = names or alphabet.names
    key = alphabet.order_key
    parts = []
    for w in sorted(p.terms, key=key):
        c = p.terms[w]
        cs = pb.render(c)
        ws = "*".join(namelist[g] for g in w)
        if not w:
            term = cs if _is_atomic(cs) else "(%s)" % cs
        elif cs == "1":
            term = ws
        elif cs == "-1":
            term = "-" + ws
        elif _is_atomic(cs):
            term = "%s*%s" % (cs, ws)
        else:
            term = "(%s)*%s" % (cs, ws)
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def _is_atomic(s):
    """True when the rendered coefficient needs no parentheses inside a product."""
    if s.startswith("(") and s.endswith(")"):
        return True
    depth = 0
    for i in range(len(s)):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch == " ":
            return False
    return True
