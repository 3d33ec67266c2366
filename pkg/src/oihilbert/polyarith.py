"""Exact polynomial arithmetic over Z: univariate and bivariate polynomials,
rational functions with factored denominators, and truncated series windows.

Everything is arbitrary-precision integer (or exact Fraction) arithmetic; the
pipeline contains no floating point. Bivariate terms are keyed by (s-degree,
t-degree). The canonical term order used for rendering sorts by s-degree, then
t-degree, both ascending.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd as _int_gcd

from .errors import NonDivisible, SingularAtOrigin

# Kronecker packing: coefficients ride in signed 64-bit digits of one big
# integer, so multiplication and exact division become single int ops.
# _KSAFE leaves a factor-of-two margin under the 2^63 digit boundary.
_KB = 64
_KFULL = 1 << _KB
_KMASK = _KFULL - 1
_KHALF = 1 << (_KB - 1)
_KSAFE = 1 << (_KB - 2)


class UniPoly:
    """Dense univariate integer polynomial; coefficient index = degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def const(cls, n):
        return cls((n,))

    @classmethod
    def geometric(cls, e):
        """1 + t + ... + t^e."""
        return cls((1,) * (e + 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly(tuple(c * other for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = UniPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k):
        """Multiply by t^k (k >= 0)."""
        if self.is_zero():
            return self
        return UniPoly((0,) * k + self.coeffs)

    def content(self):
        g = 0
        for c in self.coeffs:
            g = _int_gcd(g, c)
        return g

    def primitive(self):
        """Divide out the (positive) integer content; zero stays zero."""
        g = self.content()
        if g in (0, 1):
            return self
        return UniPoly(tuple(c // g for c in self.coeffs))

    def exact_div(self, other):
        """Exact quotient self / other; raises NonDivisible otherwise."""
        if other.is_zero():
            raise NonDivisible("division by zero polynomial")
        if self.is_zero():
            return UniPoly()
        rem = list(self.coeffs)
        dd = other.degree
        dl = other.lc()
        q = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            if c % dl:
                raise NonDivisible("leading coefficient does not divide")
            f = c // dl
            q[k - dd] = f
            for i, b in enumerate(other.coeffs):
                rem[k - dd + i] -= f * b
        if any(rem):
            raise NonDivisible("nonzero remainder")
        return UniPoly(q)

    def divides(self, other):
        try:
            other.exact_div(self)
            return True
        except NonDivisible:
            return False

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"


def uni_prem(f, g):
    """Pseudo-remainder of f by g over Z: lc(g)^(deg f - deg g + 1) f mod g."""
    dg = g.degree
    l = g.lc()
    r = f
    e = f.degree - dg + 1
    while not r.is_zero() and r.degree >= dg:
        k = r.degree - dg
        c = r.lc()
        r = r * l - UniPoly((0,) * k + (c,)) * g
        e -= 1
    if e > 0:
        r = r * (l ** e)
    return r


def uni_gcd(f, g):
    """Gcd over Z via the subresultant remainder sequence; positive lc."""
    if f.is_zero():
        return g if g.lc() >= 0 else -g
    if g.is_zero():
        return f if f.lc() >= 0 else -f
    cf, cg = f.content(), g.content()
    cont = _int_gcd(cf, cg)
    a, b = f.primitive(), g.primitive()
    if a.degree < b.degree:
        a, b = b, a
    gg, h = 1, 1
    while True:
        delta = a.degree - b.degree
        r = uni_prem(a, b)
        if r.is_zero():
            break
        if r.degree == 0:
            b = UniPoly.one()
            break
        a, b = b, UniPoly(tuple(c // (gg * h ** delta) for c in r.coeffs))
        gg = a.lc()
        h = h if delta == 0 else (gg ** delta) // (h ** (delta - 1))
    out = b.primitive() * cont
    return out if out.lc() >= 0 else -out


class BiPoly:
    """Sparse bivariate integer polynomial in s and t.

    Terms are a dict keyed by (s_degree, t_degree); the dict is treated as
    immutable after construction.
    """

    __slots__ = ("terms", "_key", "_packs", "_maxabs", "_degs", "_degt")

    def __init__(self, terms=None):
        d = {}
        if terms:
            for k, v in (terms.items() if isinstance(terms, dict) else terms):
                if v:
                    d[k] = d.get(k, 0) + v
                    if not d[k]:
                        del d[k]
        self.terms = d
        self._key = None
        self._packs = None
        self._maxabs = None
        self._degs = None
        self._degt = None

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        p._key = None
        p._packs = None
        p._maxabs = None
        p._degs = None
        p._degt = None
        return p

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, n):
        return cls({(0, 0): n})

    @classmethod
    def s(cls):
        return cls({(1, 0): 1})

    @classmethod
    def t(cls):
        return cls({(0, 1): 1})

    @classmethod
    def term(cls, i, j, coeff=1):
        return cls({(i, j): coeff})

    @classmethod
    def from_uni_t(cls, u):
        return cls({(0, j): c for j, c in enumerate(u.coeffs)})

    @classmethod
    def from_uni_s(cls, u):
        return cls({(j, 0): c for j, c in enumerate(u.coeffs)})

    def key(self):
        if self._key is None:
            self._key = tuple(sorted(self.terms.items()))
        return self._key

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0, 0): 1}

    def is_constant(self):
        return not self.terms or set(self.terms) == {(0, 0)}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    def __neg__(self):
        return BiPoly._raw({k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            elif k in out:
                del out[k]
        return BiPoly._raw(out)

    def __sub__(self, other):
        return self + (-other)

    def maxabs(self):
        if self._maxabs is None:
            self._maxabs = max((abs(v) for v in self.terms.values()),
                               default=0)
        return self._maxabs

    def _pack(self, width):
        """Evaluate at t = 2^64, s = 2^(64*width); a ring homomorphism, and
        injective back to terms while all coefficients stay below 2^63."""
        if self._packs is None:
            self._packs = {}
        got = self._packs.get(width)
        if got is None:
            top = self.deg_s() * width + self.deg_t()
            pos = bytearray(8 * (top + 1))
            neg = bytearray(8 * (top + 1))
            for (i, j), c in self.terms.items():
                off = 8 * (i * width + j)
                if c > 0:
                    pos[off:off + 8] = c.to_bytes(8, "little")
                else:
                    neg[off:off + 8] = (-c).to_bytes(8, "little")
            got = int.from_bytes(pos, "little") - int.from_bytes(neg, "little")
            self._packs[width] = got
        return got

    @staticmethod
    def _unpack(val, width):
        """Signed 64-bit digits back to terms; None if any digit is too
        large for the balanced representation to be trustworthy."""
        neg = val < 0
        if neg:
            val = -val
        count = (val.bit_length() + _KB - 1) // _KB + 1
        raw = val.to_bytes(8 * count, "little")
        out = {}
        carry = 0
        for idx in range(count):
            digit = int.from_bytes(raw[8 * idx:8 * idx + 8], "little") + carry
            if digit >= _KHALF:
                digit -= _KFULL
                carry = 1
            else:
                carry = 0
            if digit:
                if not -_KSAFE < digit < _KSAFE:
                    return None
                out[(idx // width, idx % width)] = -digit if neg else digit
        return out

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return BiPoly()
            return BiPoly._raw({k: v * other for k, v in self.terms.items()})
        a, b = self.terms, other.terms
        if not a or not b:
            return BiPoly()
        bound = min(len(a), len(b)) * self.maxabs() * other.maxabs()
        if bound < _KSAFE:
            width = self.deg_t() + other.deg_t() + 1
            prod = self._pack(width) * other._pack(width)
            out = BiPoly._unpack(prod, width)
            if out is not None:
                return BiPoly._raw(out)
        out = {}
        for (i, j), av in a.items():
            for (k, l), bv in b.items():
                kk = (i + k, j + l)
                w = out.get(kk, 0) + av * bv
                if w:
                    out[kk] = w
                elif kk in out:
                    del out[kk]
        return BiPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = BiPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def deg_s(self):
        if self._degs is None:
            self._degs = max((i for i, _ in self.terms), default=-1)
        return self._degs

    def deg_t(self):
        if self._degt is None:
            self._degt = max((j for _, j in self.terms), default=-1)
        return self._degt

    def coeff(self, i, j):
        return self.terms.get((i, j), 0)

    def as_s_coeffs(self):
        """Coefficients of s^k as UniPoly in t, index k."""
        d = self.deg_s()
        rows = [{} for _ in range(d + 1)]
        for (i, j), c in self.terms.items():
            rows[i][j] = c
        out = []
        for row in rows:
            jm = max(row, default=-1)
            out.append(UniPoly(tuple(row.get(j, 0) for j in range(jm + 1))))
        return out

    @classmethod
    def from_s_coeffs(cls, coeffs):
        terms = {}
        for i, u in enumerate(coeffs):
            for j, c in enumerate(u.coeffs):
                if c:
                    terms[(i, j)] = c
        return cls(terms)

    def as_uni_t(self):
        """View an s-free polynomial as UniPoly in t."""
        if self.deg_s() > 0:
            raise NonDivisible("polynomial involves s")
        jm = self.deg_t()
        return UniPoly(tuple(self.terms.get((0, j), 0) for j in range(jm + 1)))

    def eval(self, sv, tv):
        return sum(c * sv ** i * tv ** j for (i, j), c in self.terms.items())

    def subs_t(self, tv):
        """Evaluate t at an integer, returning a UniPoly in s."""
        out = {}
        for (i, j), c in self.terms.items():
            out[i] = out.get(i, 0) + c * tv ** j
        im = max(out, default=-1)
        return UniPoly(tuple(out.get(i, 0) for i in range(im + 1)))

    def exact_div(self, other):
        """Exact quotient in Z[s,t], dividing as polynomials in s over Z[t]."""
        if other.is_zero():
            raise NonDivisible("division by zero polynomial")
        if self.is_zero():
            return BiPoly()
        q = self._exact_div_packed(other)
        if q is not None:
            return q
        num = self.as_s_coeffs()
        den = other.as_s_coeffs()
        dd = len(den) - 1
        dl = den[-1]
        q = [UniPoly() for _ in range(max(len(num) - dd, 0))]
        while True:
            while num and num[-1].is_zero():
                num.pop()
            if not num:
                break
            dn = len(num) - 1
            if dn < dd:
                raise NonDivisible("nonzero remainder")
            qc = num[-1].exact_div(dl)
            q[dn - dd] = qc
            for i, dc in enumerate(den):
                num[dn - dd + i] = num[dn - dd + i] - qc * dc
        return BiPoly.from_s_coeffs(q)

    def _exact_div_packed(self, other):
        """Packed-integer division; None means fall back to long division.

        Evaluation at the packing point is a ring homomorphism, so if the
        polynomials divide exactly the packed integers do too, and a nonzero
        integer remainder rules divisibility out.  A zero remainder alone is
        not proof: the quotient only counts once its digits and the
        digit-growth bound of quotient*divisor are certified small enough
        that packing is injective on all three polynomials.
        """
        if self.maxabs() >= _KSAFE or other.maxabs() >= _KSAFE:
            return None
        dt = self.deg_t()
        if other.deg_t() > dt or other.deg_s() > self.deg_s():
            raise NonDivisible("degree too small")
        width = dt + 1
        qi, rem = divmod(self._pack(width), other._pack(width))
        if rem:
            raise NonDivisible("nonzero remainder")
        qterms = BiPoly._unpack(qi, width)
        if qterms is None:
            return None
        q = BiPoly._raw(qterms)
        if min(len(qterms), len(other.terms)) * q.maxabs() * other.maxabs() \
                >= _KSAFE:
            return None
        return q

    def try_div(self, other):
        try:
            return self.exact_div(other)
        except NonDivisible:
            return None

    def __repr__(self):
        return f"BiPoly({render_poly(self)!r})"


def _sl_content(coeffs):
    g = UniPoly()
    for u in coeffs:
        g = uni_gcd(g, u)
        if g == UniPoly.one():
            break
    return g


def _sl_prem(f, g):
    """Pseudo-remainder in s of coefficient lists over Z[t]."""
    dg = len(g) - 1
    l = g[-1]
    r = list(f)
    e = (len(f) - 1) - dg + 1
    while True:
        while r and r[-1].is_zero():
            r.pop()
        if not r or len(r) - 1 < dg:
            break
        k = (len(r) - 1) - dg
        c = r[-1]
        r = [u * l for u in r]
        for i, gc in enumerate(g):
            r[k + i] = r[k + i] - c * gc
        e -= 1
    if e > 0:
        le = l ** e
        r = [u * le for u in r]
    return r


def prem_bipoly_s(f, g):
    """Pseudo-remainder of f by g in s over Z[t]: the residue of
    lc_s(g)^e * f modulo g, with s-degree below deg_s(g)."""
    return BiPoly.from_s_coeffs(_sl_prem(f.as_s_coeffs(), g.as_s_coeffs()))


def _sign_normalize(p):
    """Flip the sign so the lowest term in canonical order is positive."""
    if p.is_zero():
        return p
    return -p if p.terms[min(p.terms)] < 0 else p


def gcd_bipoly(a, b):
    """Gcd in Z[s,t] via a subresultant remainder sequence in s over Z[t].

    The result is primitive up to the gcd of the inputs' contents; its sign
    makes the lowest term in canonical order positive.
    """
    if a.is_zero():
        return _sign_normalize(b)
    if b.is_zero():
        return _sign_normalize(a)
    fa, fb = a.as_s_coeffs(), b.as_s_coeffs()
    ca, cb = _sl_content(fa), _sl_content(fb)
    cont = uni_gcd(ca, cb)
    fa = [u.exact_div(ca) for u in fa]
    fb = [u.exact_div(cb) for u in fb]
    if len(fa) < len(fb):
        fa, fb = fb, fa
    gg, h = UniPoly.one(), UniPoly.one()
    while True:
        delta = (len(fa) - 1) - (len(fb) - 1)
        r = _sl_prem(fa, fb)
        if not r:
            break
        if len(r) == 1:
            fb = [UniPoly.one()]
            break
        div = gg * h ** delta
        fa, fb = fb, [u.exact_div(div) for u in r]
        gg = fa[-1]
        h = h if delta == 0 else (gg ** delta).exact_div(h ** (delta - 1))
    cpp = _sl_content(fb)
    fb = [u.exact_div(cpp) for u in fb]
    out = BiPoly.from_s_coeffs([u * cont for u in fb]) if cont != UniPoly.one() else BiPoly.from_s_coeffs(fb)
    return _sign_normalize(out)


class FactoredRational:
    """Rational function numerator / product of factor powers, all in Z[s,t].

    The factor list is a multiset of (base, exponent) pairs and is preserved
    through arithmetic so that shape analysis can see the pipeline's factors.
    """

    __slots__ = ("num", "factors")

    def __init__(self, num, factors=()):
        self.num = num
        fs = {}
        for base, e in factors:
            if e == 0 or base.is_one():
                continue
            k = base.key()
            if k in fs:
                fs[k] = (base, fs[k][1] + e)
            else:
                fs[k] = (base, e)
        if num.is_zero():
            fs = {}
        self.factors = tuple(sorted(fs.values(), key=lambda be: be[0].key()))

    @classmethod
    def from_poly(cls, p):
        return cls(p, ())

    @classmethod
    def zero(cls):
        return cls(BiPoly.zero(), ())

    def is_zero(self):
        return self.num.is_zero()

    def den_expanded(self):
        out = BiPoly.one()
        for base, e in self.factors:
            out = out * base ** e
        return out

    def _merge_factors(self, other):
        """Common denominator: (merged factors, my cofactor, their cofactor)."""
        mine = {b.key(): (b, e) for b, e in self.factors}
        theirs = {b.key(): (b, e) for b, e in other.factors}
        merged = []
        co_self = BiPoly.one()
        co_other = BiPoly.one()
        for k in sorted(set(mine) | set(theirs)):
            b, ea = mine.get(k, (None, 0))
            b2, eb = theirs.get(k, (None, 0))
            base = b if b is not None else b2
            e = max(ea, eb)
            merged.append((base, e))
            if e > ea:
                co_self = co_self * base ** (e - ea)
            if e > eb:
                co_other = co_other * base ** (e - eb)
        return merged, co_self, co_other

    def __add__(self, other):
        merged, cs, co = self._merge_factors(other)
        return FactoredRational(self.num * cs + other.num * co, merged)

    def __sub__(self, other):
        merged, cs, co = self._merge_factors(other)
        return FactoredRational(self.num * cs - other.num * co, merged)

    def __neg__(self):
        return FactoredRational(-self.num, self.factors)

    def mul_poly(self, p):
        return FactoredRational(self.num * p, self.factors)

    def mul_t_power(self, k):
        return self.mul_poly(BiPoly.term(0, k))

    def equals_cross_mul(self, other):
        """Exact equality as rational functions, by cross-multiplication."""
        return (self.num * other.den_expanded()) == (other.num * self.den_expanded())

    def reduce(self):
        """Cancel numerator against denominator factors.

        Whole factors are cancelled by repeated exact division; remaining
        partial overlaps are found with gcd_bipoly, splitting a factor when
        only part of it cancels. The result is reduced over Q[s,t].
        """
        num = self.num
        if num.is_zero():
            return FactoredRational.zero()
        work = [[b, e] for b, e in self.factors]
        changed = True
        while changed:
            changed = False
            for item in work:
                base, e = item
                while item[1] > 0:
                    q = num.try_div(base)
                    if q is None:
                        break
                    num = q
                    item[1] -= 1
                    changed = True
            for idx in range(len(work)):
                base, e = work[idx]
                if e <= 0 or base.is_constant():
                    continue
                g = gcd_bipoly(num, base)
                if g.is_constant():
                    continue
                num = num.exact_div(g)
                rest = base.exact_div(g)
                work[idx][1] -= 1
                if not rest.is_constant():
                    work.append([rest, 1])
                changed = True
        return FactoredRational(num, tuple((b, e) for b, e in work if e > 0))

    def __repr__(self):
        return f"FactoredRational({render_rational(self)!r})"


def _canonical_terms(p):
    return sorted(p.terms.items())


def _render_monomial(i, j, coeff):
    parts = []
    a = abs(coeff)
    if a != 1 or (i == 0 and j == 0):
        parts.append(str(a))
    if i == 1:
        parts.append("s")
    elif i > 1:
        parts.append(f"s^{i}")
    if j == 1:
        parts.append("t")
    elif j > 1:
        parts.append(f"t^{j}")
    return "*".join(parts)


def render_poly(p):
    """Canonical text form; terms ordered by s-degree then t-degree."""
    if p.is_zero():
        return "0"
    out = []
    for (i, j), c in _canonical_terms(p):
        mono = _render_monomial(i, j, c)
        if not out:
            out.append(mono if c > 0 else "-" + mono)
        else:
            out.append(("+ " if c > 0 else "- ") + mono)
    return " ".join(out)


def render_rational(r, t_prefactor=0):
    """Canonical text form `num / (f1)^e1*(f2)^e2`, factors in key order."""
    num = render_poly(r.num)
    if len(r.num.terms) > 1 and (r.factors or t_prefactor):
        num = f"({num})"
    pre = ""
    if t_prefactor:
        pre = f"t^-{t_prefactor}*" if t_prefactor > 0 else ""
    if not r.factors:
        return pre + num
    fs = []
    for base, e in r.factors:
        b = f"({render_poly(base)})"
        fs.append(b if e == 1 else f"{b}^{e}")
    return f"{pre}{num}/" + "*".join(fs)


class SeriesWindow:
    """Truncated expansion table: rows indexed by s-degree n, columns by t-degree j."""

    __slots__ = ("rows", "n_max", "j_max")

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        self.n_max = len(self.rows) - 1
        self.j_max = len(self.rows[0]) - 1 if self.rows else -1

    def __getitem__(self, nj):
        n, j = nj
        return self.rows[n][j]

    def __eq__(self, other):
        return isinstance(other, SeriesWindow) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def diff(self, other):
        out = []
        for n in range(min(self.n_max, other.n_max) + 1):
            for j in range(min(self.j_max, other.j_max) + 1):
                if self.rows[n][j] != other.rows[n][j]:
                    out.append((n, j, self.rows[n][j], other.rows[n][j]))
        return out

    def pretty(self):
        head = ["n\\j"] + [str(j) for j in range(self.j_max + 1)]
        table = [head] + [
            [str(n)] + [str(v) for v in row] for n, row in enumerate(self.rows)
        ]
        widths = [max(len(r[k]) for r in table) for k in range(len(head))]
        return "\n".join(
            "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in table
        )

    def __repr__(self):
        return f"SeriesWindow({self.n_max}, {self.j_max})"


def _trunc_mul(a, b, n_max, j_max):
    out = {}
    for (i, j), x in a.items():
        if i > n_max or j > j_max:
            continue
        for (k, l), y in b.items():
            n, m = i + k, j + l
            if n > n_max or m > j_max:
                continue
            key = (n, m)
            w = out.get(key, 0) + x * y
            if w:
                out[key] = w
            elif key in out:
                del out[key]
    return out


def _series_inverse(d, n_max, j_max):
    """Inverse of d as a power series, truncated; d must be a unit at (0,0)."""
    d00 = d.get((0, 0), 0)
    if d00 == 0:
        raise SingularAtOrigin("denominator vanishes at s = t = 0")
    rest = [(k, v) for k, v in d.items() if k != (0, 0)]
    exact_int = d00 in (1, -1)
    inv = {}
    for n in range(n_max + 1):
        for j in range(j_max + 1):
            if n == 0 and j == 0:
                inv[(0, 0)] = d00 if exact_int else Fraction(1, d00)
                continue
            acc = 0
            for (k, l), v in rest:
                if k <= n and l <= j:
                    w = inv.get((n - k, j - l), 0)
                    if w:
                        acc += v * w
            if acc:
                inv[(n, j)] = (-acc * d00) if exact_int else Fraction(-acc, d00)
    return inv


def expand_series(r, n_max, j_max, t_prefactor=0):
    """Expand a FactoredRational into a SeriesWindow of exact coefficients.

    t_prefactor k means the function is t^-k times `r`; the window reports
    coefficients of nonnegative t-degrees only.
    """
    jj = j_max + t_prefactor
    den = {(0, 0): 1}
    for base, e in r.factors:
        for _ in range(e):
            den = _trunc_mul(den, base.terms, n_max, jj)
    inv = _series_inverse(den, n_max, jj)
    w = _trunc_mul(r.num.terms, inv, n_max, jj)
    rows = []
    for n in range(n_max + 1):
        row = []
        for j in range(j_max + 1):
            v = w.get((n, j + t_prefactor), 0)
            if isinstance(v, Fraction):
                if v.denominator == 1:
                    v = int(v)
            row.append(v)
        rows.append(row)
    return SeriesWindow(rows)


def window_from_table(table):
    """Wrap a plain list-of-rows table as a SeriesWindow."""
    return SeriesWindow(table)
