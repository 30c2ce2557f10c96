"""Exact arithmetic in the field Q(a, s) of rational functions.

Values are fractions of sparse Laurent polynomials in the two variables
``a`` and ``s`` with rational coefficients.  Every Scalar is kept in a
canonical form (reduced fraction, denominator a true polynomial with
minimum exponent pair (0,0) and lexicographically-leading coefficient 1),
so equality is structural comparison.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd


class ZeroDenominator(ZeroDivisionError):
    pass


class PoleAtPoint(ArithmeticError):
    pass


class BadEvaluationPoint(ValueError):
    pass


# ---------------------------------------------------------------------------
# Laurent polynomials: dict mapping (e_a, e_s) -> Fraction, zeros never stored.
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Sparse Laurent polynomial in a and s over Q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        c = Fraction(c)
        return cls({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, e_a: int, e_s: int, c=1) -> "LaurentPoly":
        c = Fraction(c)
        return cls({(e_a, e_s): c} if c else {})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0, 0): Fraction(1)}

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.terms or not other.terms:
            return LaurentPoly({})
        if len(self.terms) > len(other.terms):
            self, other = other, self
        out = {}
        for (ea1, es1), c1 in self.terms.items():
            for (ea2, es2), c2 in other.terms.items():
                e = (ea1 + ea2, es1 + es2)
                v = out.get(e)
                if v is None:
                    out[e] = c1 * c2
                else:
                    v = v + c1 * c2
                    if v:
                        out[e] = v
                    else:
                        del out[e]
        return LaurentPoly(out)

    def scale(self, c) -> "LaurentPoly":
        c = Fraction(c)
        if not c:
            return LaurentPoly({})
        return LaurentPoly({e: q * c for e, q in self.terms.items()})

    def shift(self, d_a: int, d_s: int) -> "LaurentPoly":
        if d_a == 0 and d_s == 0:
            return self
        return LaurentPoly({(ea + d_a, es + d_s): c for (ea, es), c in self.terms.items()})

    def min_exps(self) -> tuple:
        return (min(e[0] for e in self.terms), min(e[1] for e in self.terms))

    def subs_inverse(self, flip_a: bool, flip_s: bool) -> "LaurentPoly":
        if not (flip_a or flip_s):
            return self
        fa = -1 if flip_a else 1
        fs = -1 if flip_s else 1
        return LaurentPoly({(fa * ea, fs * es): c for (ea, es), c in self.terms.items()})

    def lex_leading(self) -> tuple:
        """Greatest exponent pair in (e_a, e_s) order and its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    def evaluate(self, a0: Fraction, s0: Fraction) -> Fraction:
        total = Fraction(0)
        for (ea, es), c in self.terms.items():
            total += c * a0 ** ea * s0 ** es
        return total

    def __repr__(self):
        return f"LaurentPoly({self.terms!r})"


_ONE_POLY = LaurentPoly({(0, 0): Fraction(1)})


# ---------------------------------------------------------------------------
# Polynomial gcd over Q[a, s].
#
# gcds are computed on integer, content-free representatives; the answer is
# only needed up to a rational unit.  Polynomials with negative exponents
# never reach these helpers.
# ---------------------------------------------------------------------------

def _int_content(terms: dict) -> int:
    g = 0
    for c in terms.values():
        g = int_gcd(g, abs(c))
        if g == 1:
            return 1
    return g or 1


def _to_int_terms(poly: LaurentPoly) -> dict:
    """Integer content-free copy of the term dict (values plain ints)."""
    lcm = 1
    for c in poly.terms.values():
        d = c.denominator
        lcm = lcm * d // int_gcd(lcm, d)
    terms = {e: int(c * lcm) for e, c in poly.terms.items()}
    g = _int_content(terms)
    if g > 1:
        terms = {e: c // g for e, c in terms.items()}
    return terms


def _univar(terms: dict, var: int) -> dict:
    """Project onto one variable; caller guarantees the other is absent."""
    return {e[var]: c for e, c in terms.items()}


def _uni_prem(f: dict, g: dict) -> dict:
    """Pseudo-remainder of dense-free univariate int polys (dicts deg->int)."""
    df, dg = max(f), max(g)
    lg = g[dg]
    f = dict(f)
    while f and max(f) >= dg:
        d = max(f)
        lf = f[d]
        # f <- lg*f - lf*x^(d-dg)*g
        nf = {}
        for e, c in f.items():
            nf[e] = c * lg
        for e, c in g.items():
            ee = e + d - dg
            nf[ee] = nf.get(ee, 0) - lf * c
        f = {e: c for e, c in nf.items() if c}
    return f


def _uni_gcd(f: dict, g: dict) -> dict:
    """Primitive gcd of univariate int polys given as dicts deg->int."""
    while g:
        r = _uni_prem(f, g)
        if r:
            c = 0
            for v in r.values():
                c = int_gcd(c, abs(v))
            if c > 1:
                r = {e: v // c for e, v in r.items()}
        f, g = g, r
    c = _int_content(f)
    if c > 1:
        f = {e: v // c for e, v in f.items()}
    if f[max(f)] < 0:
        f = {e: -v for e, v in f.items()}
    return f


def _spans(terms: dict) -> tuple:
    eas = [e[0] for e in terms]
    ess = [e[1] for e in terms]
    return max(eas) - min(eas), max(ess) - min(ess)


def _by_main_var(terms: dict, main: int) -> dict:
    """Regroup as dict main_deg -> dict other_deg -> int."""
    out = {}
    for e, c in terms.items():
        out.setdefault(e[main], {})[e[1 - main]] = c
    return out


def _uni_mul(f: dict, g: dict) -> dict:
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = e1 + e2
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


def _uni_divexact(f: dict, g: dict) -> dict:
    """Exact division of univariate int polys (dicts), remainder must vanish."""
    out = {}
    f = dict(f)
    dg = max(g)
    lg = g[dg]
    while f:
        df = max(f)
        q, r = divmod(f[df], lg)
        assert r == 0 and df >= dg, "non-exact division"
        out[df - dg] = q
        for e, c in g.items():
            ee = e + df - dg
            v = f.get(ee, 0) - q * c
            if v:
                f[ee] = v
            elif ee in f:
                del f[ee]
    return out


def _bi_gcd(f: dict, g: dict, main: int) -> dict:
    """gcd of genuinely bivariate int polys, Euclid in the main variable
    with coefficients in the other variable (primitive PRS)."""

    def content(p):
        coeffs = list(p.values())
        c = coeffs[0]
        for q in coeffs[1:]:
            c = _uni_gcd(c, q)
            if c == {0: 1}:
                break
        return c

    def primitive(p):
        c = content(p)
        if c == {0: 1}:
            return p, c
        return {e: _uni_divexact(q, c) for e, q in p.items()}, c

    def prem(p, q):
        dq = max(q)
        lq = q[dq]
        p = {e: dict(v) for e, v in p.items()}
        while p and max(p) >= dq:
            dp = max(p)
            lp = p[dp]
            np_ = {e: _uni_mul(v, lq) for e, v in p.items()}
            for e, v in q.items():
                ee = e + dp - dq
                w = np_.get(ee, {})
                prod = _uni_mul(v, lp)
                for d, c in prod.items():
                    x = w.get(d, 0) - c
                    if x:
                        w[d] = x
                    elif d in w:
                        del w[d]
                if w:
                    np_[ee] = w
                elif ee in np_:
                    del np_[ee]
            p = {e: v for e, v in np_.items() if v}
        return p

    fm = _by_main_var(f, main)
    gm = _by_main_var(g, main)
    fp, fc = primitive(fm)
    gp, gc = primitive(gm)
    cont = _uni_gcd(fc, gc)
    if max(fp) < max(gp):
        fp, gp = gp, fp
    while gp:
        r = prem(fp, gp)
        if r:
            r, _ = primitive(r)
        fp, gp = gp, r
    # fp times cont, re-flattened
    out = {}
    for e, v in fp.items():
        for d, c in _uni_mul(v, cont).items():
            key = (e, d) if main == 0 else (d, e)
            out[key] = c
    return out


def _poly_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """gcd in Q[a,s] up to a rational unit; inputs must have min exps (0,0)."""
    f = _to_int_terms(p)
    g = _to_int_terms(q)
    if f == g:
        return LaurentPoly({e: Fraction(c) for e, c in f.items()})
    if len(f) == 1 or len(g) == 1:
        # a monomial shares only its monomial part, which is trivial here
        return _ONE_POLY
    fa, fs = _spans(f)
    ga, gs = _spans(g)
    if fa and ga == 0:
        # g is free of a: replace f by its content w.r.t. a
        f = _content_wrt(f, 0)
        fa, fs = _spans(f)
    elif ga and fa == 0:
        g = _content_wrt(g, 0)
        ga, gs = _spans(g)
    if fs and gs == 0:
        f = _content_wrt(f, 1)
        fa, fs = _spans(f)
    elif gs and fs == 0:
        g = _content_wrt(g, 1)
        ga, gs = _spans(g)
    if len(f) == 1 or len(g) == 1:
        return _ONE_POLY
    if fa == 0 and ga == 0:
        h = _uni_gcd(_univar(f, 1), _univar(g, 1))
        return LaurentPoly({(0, e): Fraction(c) for e, c in h.items()})
    if fs == 0 and gs == 0:
        h = _uni_gcd(_univar(f, 0), _univar(g, 0))
        return LaurentPoly({(e, 0): Fraction(c) for e, c in h.items()})
    main = 0 if min(fa, ga) <= min(fs, gs) else 1
    h = _bi_gcd(f, g, main)
    return LaurentPoly({e: Fraction(c) for e, c in h.items()})


def _content_wrt(terms: dict, var: int) -> dict:
    """Content of an int poly viewed in the variable ``var``: the gcd of its
    coefficient polynomials in the other variable, returned as flat terms."""
    groups = {}
    for e, c in terms.items():
        groups.setdefault(e[var], {})[e[1 - var]] = c
    polys = list(groups.values())
    h = polys[0]
    for p in polys[1:]:
        h = _uni_gcd(h, p)
        if h == {0: 1}:
            break
    if var == 0:
        return {(0, d): c for d, c in h.items()}
    return {(d, 0): c for d, c in h.items()}


def _poly_divexact(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Exact division in Q[a,s] by lex-ordered long division."""
    if d.is_one():
        return p
    out = {}
    rem = dict(p.terms)
    (dea, des), dlc = d.lex_leading()
    dterms = list(d.terms.items())
    while rem:
        e = max(rem)
        c = rem[e]
        qe = (e[0] - dea, e[1] - des)
        qc = c / dlc
        out[qe] = qc
        for (ea, es), dc in dterms:
            ee = (ea + qe[0], es + qe[1])
            v = rem.get(ee, Fraction(0)) - qc * dc
            if v:
                rem[ee] = v
            elif ee in rem:
                del rem[ee]
    return LaurentPoly(out)


# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------

class Scalar:
    """Canonical fraction num/den of Laurent polynomials in a and s."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentPoly, den: LaurentPoly, _normalized=False):
        if not _normalized:
            s = normalize(num, den)
            num, den = s.num, s.den
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, k) -> "Scalar":
        return cls(LaurentPoly.const(k), _ONE_POLY, _normalized=True)

    @classmethod
    def from_fraction(cls, q) -> "Scalar":
        return cls(LaurentPoly.const(q), _ONE_POLY, _normalized=True)

    @classmethod
    def monomial(cls, e_a: int, e_s: int, c=1) -> "Scalar":
        return cls(LaurentPoly.monomial(e_a, e_s, c), _ONE_POLY, _normalized=True)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den.is_one() and self.num.is_one()

    # -- ring/field operations ----------------------------------------------

    def __add__(self, other) -> "Scalar":
        other = as_scalar(other)
        if self.den == other.den:
            n = self.num + other.num
            if self.den.is_one():
                return Scalar(n, _ONE_POLY, _normalized=True)
            return normalize(n, self.den)
        return normalize(self.num * other.den + other.num * self.den,
                         self.den * other.den)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.num, self.den, _normalized=True)

    def __sub__(self, other) -> "Scalar":
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other) -> "Scalar":
        other = as_scalar(other)
        if self.den.is_one() and other.den.is_one():
            return Scalar(self.num * other.num, _ONE_POLY, _normalized=True)
        return normalize(self.num * other.num, self.den * other.den)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other) -> "Scalar":
        return self * as_scalar(other).invert()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.invert()

    def __pow__(self, k: int) -> "Scalar":
        if k == 0:
            return ONE
        base = self if k > 0 else self.invert()
        k = abs(k)
        out = base
        for _ in range(k - 1):
            out = out * base
        return out

    def invert(self) -> "Scalar":
        if self.num.is_zero():
            raise ZeroDenominator("division by the zero scalar")
        return _normalize_coprime(self.den, self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = as_scalar(other)
        return (isinstance(other, Scalar)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.num.terms.items()),
                               frozenset(self.den.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Scalar({scalar_to_text(self)})"

    def __str__(self):
        return scalar_to_text(self)


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.from_fraction(Fraction(x))
    raise TypeError(f"cannot interpret {x!r} as a Scalar")


def _normalize_coprime(num: LaurentPoly, den: LaurentPoly) -> Scalar:
    """Normalization when num and den are already coprime up to monomials."""
    if num.is_zero():
        return ZERO
    dmin = den.min_exps()
    den = den.shift(-dmin[0], -dmin[1])
    num = num.shift(-dmin[0], -dmin[1])
    _, lc = den.lex_leading()
    if lc != 1:
        c = Fraction(1) / lc
        den = den.scale(c)
        num = num.scale(c)
    return Scalar(num, den, _normalized=True)


def normalize(num: LaurentPoly, den: LaurentPoly) -> Scalar:
    """Canonical representative of num/den.

    Clears negative exponents, removes the polynomial gcd, puts the
    denominator into min-exponent (0,0), leading-coefficient-one form.
    """
    if den.is_zero():
        raise ZeroDenominator("zero denominator")
    if num.is_zero():
        return ZERO
    if den.is_one():
        return Scalar(num, _ONE_POLY, _normalized=True)
    nmin = num.min_exps()
    dmin = den.min_exps()
    npoly = num.shift(-nmin[0], -nmin[1])
    dpoly = den.shift(-dmin[0], -dmin[1])
    shift = (nmin[0] - dmin[0], nmin[1] - dmin[1])
    if len(dpoly.terms) > 1 and len(npoly.terms) > 1:
        g = _poly_gcd(npoly, dpoly)
        if not g.is_one():
            npoly = _poly_divexact(npoly, g)
            dpoly = _poly_divexact(dpoly, g)
    return _normalize_coprime(npoly.shift(*shift), dpoly)


ZERO = Scalar(LaurentPoly({}), _ONE_POLY, _normalized=True)
ONE = Scalar.from_int(1)
A = Scalar.monomial(1, 0)
S = Scalar.monomial(0, 1)


def s_power_diff(i: int) -> Scalar:
    """s^i - s^-i."""
    return Scalar(LaurentPoly({(0, i): Fraction(1), (0, -i): Fraction(-1)}),
                  _ONE_POLY, _normalized=True)


def a_power_diff(i: int) -> Scalar:
    """a^i - a^-i."""
    return Scalar(LaurentPoly({(i, 0): Fraction(1), (-i, 0): Fraction(-1)}),
                  _ONE_POLY, _normalized=True)


Z = s_power_diff(1)
UNKNOT = a_power_diff(1) / Z


def invert_vars(x: Scalar, flip_a: bool = True, flip_s: bool = True) -> Scalar:
    """Substitute a -> a^-1 and/or s -> s^-1; an involutive ring map."""
    if not (flip_a or flip_s):
        return x
    return _normalize_coprime(x.num.subs_inverse(flip_a, flip_s),
                              x.den.subs_inverse(flip_a, flip_s))


def eval_at(x: Scalar, a0, s0) -> Fraction:
    """Exact value of x at a = a0, s = s0."""
    a0 = Fraction(a0)
    s0 = Fraction(s0)
    if a0 == 0 or s0 in (0, 1, -1):
        raise BadEvaluationPoint(f"a0={a0}, s0={s0}")
    dv = x.den.evaluate(a0, s0)
    if dv == 0:
        raise PoleAtPoint(f"denominator vanishes at ({a0}, {s0})")
    return x.num.evaluate(a0, s0) / dv


# ---------------------------------------------------------------------------
# Text form.  Grammar emitted: integer-coefficient terms in a and s joined
# with + and -, `^` for (possibly negative) exponents, at most one top-level
# fraction bar, e.g. (a - a^-1)/(s - s^-1).
# ---------------------------------------------------------------------------

def _term_text(e_a: int, e_s: int, c: int) -> str:
    parts = []
    if e_a:
        parts.append("a" if e_a == 1 else f"a^{e_a}")
    if e_s:
        parts.append("s" if e_s == 1 else f"s^{e_s}")
    if not parts:
        return str(abs(c))
    if abs(c) != 1:
        parts.insert(0, str(abs(c)))
    return "*".join(parts)


def _poly_text(terms: dict) -> str:
    keys = sorted(terms, reverse=True)
    pieces = []
    for i, e in enumerate(keys):
        c = terms[e]
        t = _term_text(e[0], e[1], c)
        if i == 0:
            pieces.append(("-" if c < 0 else "") + t)
        else:
            pieces.append(("- " if c < 0 else "+ ") + t)
    return " ".join(pieces)


def scalar_to_text(x: Scalar) -> str:
    """Deterministic text form; parse_scalar inverts it."""
    if x.num.is_zero():
        return "0"
    lcm = 1
    for c in list(x.num.terms.values()) + list(x.den.terms.values()):
        d = c.denominator
        lcm = lcm * d // int_gcd(lcm, d)
    nt = {e: int(c * lcm) for e, c in x.num.terms.items()}
    dt = {e: int(c * lcm) for e, c in x.den.terms.items()}
    g = int_gcd(_int_content(nt), _int_content(dt))
    if g > 1:
        nt = {e: c // g for e, c in nt.items()}
        dt = {e: c // g for e, c in dt.items()}
    if dt == {(0, 0): 1}:
        return _poly_text(nt)
    # display shift: center the denominator exponents for readability
    eas = [e[0] for e in dt]
    ess = [e[1] for e in dt]
    da = (max(eas) + min(eas)) // 2
    ds = (max(ess) + min(ess)) // 2
    nt = {(ea - da, es - ds): c for (ea, es), c in nt.items()}
    dt = {(ea - da, es - ds): c for (ea, es), c in dt.items()}
    ntext = _poly_text(nt)
    dtext = _poly_text(dt)
    if len(nt) > 1 or ntext.startswith("-"):
        ntext = f"({ntext})"
    if len(dt) > 1:
        dtext = f"({dtext})"
    return f"{ntext}/{dtext}"


class _Tokens:
    def __init__(self, text: str):
        self.toks = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch in "+-*/^()":
                self.toks.append(ch)
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.toks.append(int(text[i:j]))
                i = j
            elif ch in "as":
                self.toks.append(ch)
                i += 1
            else:
                raise ValueError(f"bad character {ch!r} in scalar text")
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self):
        t = self.peek()
        self.pos += 1
        return t


def _parse_expr(tk: _Tokens) -> Scalar:
    x = _parse_term(tk)
    while tk.peek() in ("+", "-"):
        op = tk.next()
        y = _parse_term(tk)
        x = x + y if op == "+" else x - y
    return x


def _parse_term(tk: _Tokens) -> Scalar:
    x = _parse_factor(tk)
    while tk.peek() in ("*", "/"):
        op = tk.next()
        y = _parse_factor(tk)
        x = x * y if op == "*" else x / y
    return x


def _parse_factor(tk: _Tokens) -> Scalar:
    t = tk.peek()
    if t == "-":
        tk.next()
        return -_parse_factor(tk)
    if t == "+":
        tk.next()
        return _parse_factor(tk)
    x = _parse_base(tk)
    if tk.peek() == "^":
        tk.next()
        sign = 1
        if tk.peek() == "-":
            tk.next()
            sign = -1
        e = tk.next()
        if not isinstance(e, int):
            raise ValueError("exponent must be an integer")
        x = x ** (sign * e)
    return x


def _parse_base(tk: _Tokens) -> Scalar:
    t = tk.next()
    if t == "(":
        x = _parse_expr(tk)
        if tk.next() != ")":
            raise ValueError("unbalanced parentheses")
        return x
    if t == "a":
        return A
    if t == "s":
        return S
    if isinstance(t, int):
        return Scalar.from_int(t)
    raise ValueError(f"unexpected token {t!r}")


def parse_scalar(text: str) -> Scalar:
    tk = _Tokens(text)
    x = _parse_expr(tk)
    if tk.peek() is not None:
        raise ValueError(f"trailing input at token {tk.peek()!r}")
    return x
