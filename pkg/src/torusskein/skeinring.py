"""The positive skein ring of the solid torus on symmetric functions.

Elements are finite linear combinations of basis vectors indexed by
partitions, over the scalar field, in one of two bases:

* ``W`` -- the Schur-type basis W_lam (closures of the Hecke idempotents),
* ``P`` -- the power-sum basis, P_mu = prod_k P_(mu_k).

The two are related by the character transition p_mu = sum_lam chi^lam(mu)
s_lam and its orthogonality inverse.  The meridian and framing operators are
diagonal on W; products route through P where the index monoid is free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import (
    Partition, char_table, check_partition, content_list, parse_partition,
    partition_to_text, partitions_of, z_const,
)
from .scalars import (
    A, ONE, Scalar, UNKNOT, Z, ZERO, a_power_diff, as_scalar, parse_scalar,
    scalar_to_text, invert_vars, s_power_diff,
)

W_BASIS = "W"
P_BASIS = "P"


class DegreeZeroComponent(ValueError):
    pass


class BadIndex(ValueError):
    pass


# -- cached transition rows and products -------------------------------------

@lru_cache(maxsize=None)
def p_to_w_row(mu: Partition) -> tuple:
    """P_mu = sum over lam of chi^lam(mu) W_lam, as ((lam, int), ...)."""
    table = char_table(sum(mu)).values
    out = []
    for lam in partitions_of(sum(mu)):
        c = table[(lam, mu)]
        if c:
            out.append((lam, c))
    return tuple(out)


@lru_cache(maxsize=None)
def w_to_p_row(lam: Partition) -> tuple:
    """W_lam = sum over mu of chi^lam(mu)/z_mu P_mu, as ((mu, Fraction), ...)."""
    table = char_table(sum(lam)).values
    out = []
    for mu in partitions_of(sum(lam)):
        c = table[(lam, mu)]
        if c:
            out.append((mu, Fraction(c, z_const(mu))))
    return tuple(out)


def merge_parts(mu: Partition, nu: Partition) -> Partition:
    return tuple(sorted(mu + nu, reverse=True))


@lru_cache(maxsize=None)
def w_product_row(lam: Partition, mu: Partition) -> tuple:
    """Expansion of W_lam * W_mu in the W basis, as ((nu, Fraction), ...)."""
    acc: dict = {}
    for rho, c1 in w_to_p_row(lam):
        for eta, c2 in w_to_p_row(mu):
            key = merge_parts(rho, eta)
            acc[key] = acc.get(key, Fraction(0)) + c1 * c2
    out: dict = {}
    for key, c in acc.items():
        if not c:
            continue
        for nu, k in p_to_w_row(key):
            v = out.get(nu, Fraction(0)) + c * k
            if v:
                out[nu] = v
            elif nu in out:
                del out[nu]
    return tuple(sorted(out.items(), key=lambda t: (sum(t[0]), tuple(-p for p in t[0]))))


# -- eigenvalues and distinguished scalars ------------------------------------

@lru_cache(maxsize=None)
def content_sum(lam: Partition) -> Scalar:
    """sum over cells of s^(2*content)."""
    total = ZERO
    for c in content_list(lam):
        total = total + Scalar.monomial(0, 2 * c)
    return total


@dataclass(frozen=True)
class MeridianEigenvalue:
    """Eigenvalue of the meridian operator on W_lam."""
    lam: Partition
    value: Scalar


@lru_cache(maxsize=None)
def meridian_eigenvalue(lam: Partition) -> MeridianEigenvalue:
    return MeridianEigenvalue(lam, UNKNOT + A * Z * content_sum(lam))


@lru_cache(maxsize=None)
def framing_eigenvalue(lam: Partition) -> Scalar:
    """a^|lam| s^(2 * content sum), the full-twist eigenvalue on W_lam."""
    return Scalar.monomial(len(content_list(lam)), 2 * sum(content_list(lam)))


@lru_cache(maxsize=None)
def unknot_value_power_sum(i: int) -> Scalar:
    """Value of the i-th power sum on the zero-framed unknot."""
    return a_power_diff(i) / s_power_diff(i)


@lru_cache(maxsize=None)
def unknot_value_w(lam: Partition) -> Scalar:
    total = ZERO
    for mu, c in w_to_p_row(lam):
        term = Scalar.from_fraction(c)
        for part in mu:
            term = term * unknot_value_power_sum(part)
        total = total + term
    return total


# -- elements -----------------------------------------------------------------

class SkeinElem:
    """Finite linear combination of basis vectors, tagged with its basis."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: str, coeffs: dict, _clean=False):
        assert basis in (W_BASIS, P_BASIS)
        if not _clean:
            coeffs = {check_partition(k): as_scalar(v) for k, v in coeffs.items()
                      if not as_scalar(v).is_zero()}
        self.basis = basis
        self.coeffs = coeffs

    @classmethod
    def zero(cls, basis=W_BASIS) -> "SkeinElem":
        return cls(basis, {}, _clean=True)

    @classmethod
    def unit(cls, basis=W_BASIS) -> "SkeinElem":
        return cls(basis, {(): ONE}, _clean=True)

    @classmethod
    def w(cls, lam) -> "SkeinElem":
        return cls(W_BASIS, {check_partition(lam): ONE}, _clean=True)

    @classmethod
    def p(cls, mu) -> "SkeinElem":
        if isinstance(mu, int):
            mu = (mu,)
        return cls(P_BASIS, {check_partition(mu): ONE}, _clean=True)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees(self) -> set:
        return {sum(lam) for lam in self.coeffs}

    def __add__(self, other) -> "SkeinElem":
        other = self._coerce(other)
        x, y = match_basis(self, other)
        out = dict(x.coeffs)
        for k, v in y.coeffs.items():
            w = out.get(k)
            w = v if w is None else w + v
            if w.is_zero():
                out.pop(k, None)
            else:
                out[k] = w
        return SkeinElem(x.basis, out, _clean=True)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self) -> "SkeinElem":
        return SkeinElem(self.basis, {k: -v for k, v in self.coeffs.items()}, _clean=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, SkeinElem):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "SkeinElem":
        c = as_scalar(c)
        if c.is_zero():
            return SkeinElem.zero(self.basis)
        return SkeinElem(self.basis, {k: v * c for k, v in self.coeffs.items()},
                         _clean=True)

    def _coerce(self, other) -> "SkeinElem":
        if isinstance(other, SkeinElem):
            return other
        return SkeinElem.unit(self.basis).scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkeinElem):
            if isinstance(other, (int, Fraction, Scalar)):
                other = self._coerce(other)
            else:
                return NotImplemented
        return basis_convert(self, W_BASIS).coeffs == basis_convert(other, W_BASIS).coeffs

    def __repr__(self):
        return f"SkeinElem({elem_to_text(self)!r})"


def match_basis(x: SkeinElem, y: SkeinElem):
    if x.basis == y.basis:
        return x, y
    return x, basis_convert(y, x.basis)


def basis_convert(x: SkeinElem, target: str) -> SkeinElem:
    if x.basis == target:
        return x
    rows = p_to_w_row if target == W_BASIS else w_to_p_row
    out: dict = {}
    for key, coeff in x.coeffs.items():
        for new, c in rows(key):
            v = out.get(new)
            t = coeff * c
            v = t if v is None else v + t
            if v.is_zero():
                out.pop(new, None)
            else:
                out[new] = v
    return SkeinElem(target, out, _clean=True)


def multiply(x: SkeinElem, y: SkeinElem) -> SkeinElem:
    """Product in the skein ring, computed on power-sum indices."""
    if x.basis == P_BASIS and y.basis == P_BASIS:
        out: dict = {}
        for mu, c1 in x.coeffs.items():
            for nu, c2 in y.coeffs.items():
                key = merge_parts(mu, nu)
                v = out.get(key)
                t = c1 * c2
                v = t if v is None else v + t
                if v.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = v
        return SkeinElem(P_BASIS, out, _clean=True)
    xp = basis_convert(x, P_BASIS)
    yp = basis_convert(y, P_BASIS)
    return basis_convert(multiply(xp, yp), x.basis)


def _diagonal_w(x: SkeinElem, eigen) -> SkeinElem:
    xw = basis_convert(x, W_BASIS)
    out = {}
    for lam, c in xw.coeffs.items():
        v = c * eigen(lam)
        if not v.is_zero():
            out[lam] = v
    return SkeinElem(W_BASIS, out, _clean=True)


def meridian(x: SkeinElem) -> SkeinElem:
    """Encircle the torus by a small loop; diagonal on the W basis."""
    return _diagonal_w(x, lambda lam: meridian_eigenvalue(lam).value)


def meridian_minus_unknot_inverse(x: SkeinElem) -> SkeinElem:
    """Inverse of (meridian - unknot value), defined on positive degree."""
    xw = basis_convert(x, W_BASIS)
    if () in xw.coeffs:
        raise DegreeZeroComponent("the inverse is undefined on degree 0")
    out = {}
    for lam, c in xw.coeffs.items():
        out[lam] = c / (A * Z * content_sum(lam))
    return SkeinElem(W_BASIS, out, _clean=True)


def framing(x: SkeinElem, power: int = 1) -> SkeinElem:
    """Apply the full twist ``power`` times (negative powers allowed)."""
    if power == 0:
        return x
    return _diagonal_w(x, lambda lam: framing_eigenvalue(lam) ** power)


def mirror(x: SkeinElem) -> SkeinElem:
    """Crossing reversal: invert a and s in every coefficient, W indices fixed."""
    xw = basis_convert(x, W_BASIS)
    out = {lam: invert_vars(c) for lam, c in xw.coeffs.items()}
    return basis_convert(SkeinElem(W_BASIS, out, _clean=True), x.basis)


def unknot_eval(x: SkeinElem) -> Scalar:
    """Algebra map to the base field decorating the zero-framed unknot."""
    xp = basis_convert(x, P_BASIS)
    total = ZERO
    for mu, c in xp.coeffs.items():
        term = c
        for part in mu:
            term = term * unknot_value_power_sum(part)
        total = total + term
    return total


@lru_cache(maxsize=None)
def core_curve(m: int) -> SkeinElem:
    """The closed curve winding m times around the annulus core, in W basis.

    Computed as (meridian - unknot)/(a (s^m - s^-m)) applied to the m-th
    power sum, never hardcoded.
    """
    if m < 1:
        raise BadIndex(f"m must be >= 1, got {m}")
    x = basis_convert(SkeinElem.p(m), W_BASIS)
    out = {}
    factor = Scalar.monomial(-1, 0) / s_power_diff(m)
    for lam, c in x.coeffs.items():
        out[lam] = c * (A * Z * content_sum(lam)) * factor
    return SkeinElem(W_BASIS, out, _clean=True)


# -- text and json forms -------------------------------------------------------

def _term_sort_key(lam: Partition):
    return (sum(lam), tuple(-p for p in lam))


def elem_to_text(x: SkeinElem) -> str:
    if not x.coeffs:
        return "0"
    pieces = []
    for lam in sorted(x.coeffs, key=_term_sort_key):
        c = x.coeffs[lam]
        ct = scalar_to_text(c)
        if not lam:
            pieces.append(ct if "/" not in ct and " " not in ct else f"({ct})")
            continue
        atom = f"{x.basis}{partition_to_text(lam)}"
        if c.is_one():
            pieces.append(atom)
        elif c == -1:
            pieces.append(f"-{atom}")
        elif " " in ct or "/" in ct or ct.startswith("-"):
            pieces.append(f"({ct})*{atom}")
        else:
            pieces.append(f"{ct}*{atom}")
    return " + ".join(pieces)


def parse_elem(text: str) -> SkeinElem:
    """Parse the element grammar, e.g. '(s - s^-1)*W[1] + W[2,1]'."""
    text = text.strip()
    if text == "0":
        return SkeinElem.zero()
    terms = _split_top_level(text)
    basis = None
    coeffs: dict = {}
    for sign, chunk in terms:
        c, lam, b = _parse_elem_term(chunk)
        if b is not None:
            if basis is None:
                basis = b
            elif basis != b:
                raise ValueError("mixed W/P bases in one element")
        coeff = c if sign > 0 else -c
        coeffs[lam] = coeffs.get(lam, ZERO) + coeff
    return SkeinElem(basis or W_BASIS, coeffs)


def _split_top_level(text: str):
    terms = []
    depth = 0
    sign = 1
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and cur and cur[-1] not in "^*/(+- ":
            terms.append((sign, "".join(cur).strip()))
            sign = 1 if ch == "+" else -1
            cur = []
        else:
            cur.append(ch)
    last = "".join(cur).strip()
    if last.startswith("-"):
        sign, last = -sign, last[1:].strip()
    terms.append((sign, last))
    return terms


def _parse_elem_term(chunk: str):
    for basis in (W_BASIS, P_BASIS):
        idx = chunk.find(basis + "[")
        if idx >= 0:
            lam = parse_partition(chunk[idx + 1:])
            pre = chunk[:idx].strip()
            if pre.endswith("*"):
                pre = pre[:-1].strip()
            c = parse_scalar(pre) if pre else ONE
            return c, lam, basis
    return parse_scalar(chunk), (), None


def elem_to_json(x: SkeinElem) -> dict:
    return {
        "basis": x.basis,
        "terms": [[list(lam), scalar_to_text(x.coeffs[lam])]
                  for lam in sorted(x.coeffs, key=_term_sort_key)],
    }


def elem_from_json(data: dict) -> SkeinElem:
    coeffs = {tuple(lam): parse_scalar(ct) for lam, ct in data["terms"]}
    return SkeinElem(data["basis"], coeffs)
