"""Laurent polynomials in q with integer coefficients, and Schur expansions."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from .partitions import Partition, conjugate, partition, render_partition


class PoleError(ZeroDivisionError):
    pass


class QLaurent:
    """Immutable Laurent polynomial ``sum(coeffs[i] * q**(lo + i))``.

    Canonical form has nonzero first and last coefficients; the zero
    polynomial has ``coeffs == ()`` and ``lo == 0``.
    """

    __slots__ = ("lo", "coeffs", "_hash")

    def __init__(self, lo: int = 0, coeffs: Iterable[int] = ()):
        coeffs = list(coeffs)
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        if start == end:
            self.lo, self.coeffs = 0, ()
        else:
            self.lo, self.coeffs = lo + start, tuple(coeffs[start:end])
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QLaurent":
        return cls(exponent, (coeff,))

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> "QLaurent":
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return ZERO
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(k, 0) for k in range(lo, hi + 1)])

    @classmethod
    def coerce(cls, value: Union["QLaurent", int]) -> "QLaurent":
        if isinstance(value, QLaurent):
            return value
        return cls(0, (int(value),))

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> Iterator[Tuple[int, int]]:
        """(exponent, coefficient) pairs with nonzero coefficient, ascending."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.lo + i, c

    def __getitem__(self, exponent: int) -> int:
        i = exponent - self.lo
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = QLaurent.coerce(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self.lo == other.lo and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.lo, self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = QLaurent.coerce(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.lo - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.lo - lo + i] += c
        return QLaurent(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return QLaurent(self.lo, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = QLaurent.coerce(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return QLaurent.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return QLaurent(self.lo, [c * other for c in self.coeffs])
        if not isinstance(other, QLaurent):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        if len(other.coeffs) == 1:
            k = other.coeffs[0]
            return QLaurent(self.lo + other.lo, [c * k for c in self.coeffs])
        if len(self.coeffs) == 1:
            k = self.coeffs[0]
            return QLaurent(self.lo + other.lo, [c * k for c in other.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QLaurent(self.lo + other.lo, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.coeffs) == 1 and self.coeffs[0] in (1, -1):
                c = self.coeffs[0]
                return QLaurent(self.lo * k, (c ** (-k % 2),))
            raise ValueError("only monomials with unit coefficient are invertible")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "QLaurent":
        """Multiply by q**k."""
        if not self.coeffs:
            return self
        return QLaurent(self.lo + k, self.coeffs)

    def subst_qinv(self) -> "QLaurent":
        if not self.coeffs:
            return self
        return QLaurent(-self.hi, self.coeffs[::-1])

    def evaluate(self, q0) -> Fraction:
        q0 = Fraction(q0)
        if q0 == 0:
            if self.coeffs and self.lo < 0:
                raise PoleError(f"{self} has a pole at q=0")
            return Fraction(self[0])
        return sum((Fraction(c) * q0 ** e for e, c in self.terms()), Fraction(0))

    def to_json(self) -> dict:
        return {"lo": self.lo, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: Mapping) -> "QLaurent":
        return cls(int(data["lo"]), [int(c) for c in data["coeffs"]])

    def __repr__(self):
        return f"QLaurent({self.lo}, {list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for e, c in sorted(self.terms(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)


ZERO = QLaurent()
ONE = QLaurent(0, (1,))
Q = QLaurent(1, (1,))


def ql_add(a: QLaurent, b: QLaurent) -> QLaurent:
    return a + b


def ql_mul(a: QLaurent, b: QLaurent) -> QLaurent:
    return a * b


def ql_subst_qinv(a: QLaurent) -> QLaurent:
    return a.subst_qinv()


def ql_eval(a: QLaurent, q0) -> Fraction:
    return a.evaluate(q0)


Coefficient = Union[QLaurent, int]


class SchurExpansion:
    """Finitely supported map partition -> QLaurent with no zero entries.

    Treat instances as immutable; every operation returns a new expansion.
    Iteration follows the canonical order (reverse lexicographic on parts).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Partition, Coefficient] = None):
        clean: Dict[Partition, QLaurent] = {}
        if terms:
            for mu, w in terms.items():
                w = QLaurent.coerce(w)
                if w:
                    clean[partition(mu)] = clean.get(partition(mu), ZERO) + w
            clean = {mu: w for mu, w in clean.items() if w}
        self._terms = clean

    @classmethod
    def _wrap(cls, terms: Dict[Partition, QLaurent]) -> "SchurExpansion":
        # trusted constructor: canonical keys, nonzero values
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def schur(cls, mu: Iterable[int] = (), coeff: Coefficient = 1) -> "SchurExpansion":
        return cls({partition(mu): coeff})

    @classmethod
    def zero(cls) -> "SchurExpansion":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "SchurExpansion":
        return cls._wrap({(): ONE})

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __contains__(self, mu):
        return tuple(mu) in self._terms

    def __getitem__(self, mu) -> QLaurent:
        return self._terms.get(partition(mu), ZERO)

    def keys(self):
        return sorted(self._terms, reverse=True)

    def items(self):
        return [(mu, self._terms[mu]) for mu in self.keys()]

    def __iter__(self):
        return iter(self.keys())

    def as_dict(self) -> Dict[Partition, QLaurent]:
        return dict(self._terms)

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        acc = dict(self._terms)
        for mu, w in other._terms.items():
            _accumulate(acc, mu, w)
        return SchurExpansion._wrap(acc)

    def __neg__(self):
        return SchurExpansion._wrap({mu: -w for mu, w in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self + (-other)

    def scale(self, w: Coefficient) -> "SchurExpansion":
        w = QLaurent.coerce(w)
        if not w:
            return SchurExpansion.zero()
        return SchurExpansion._wrap({mu: v * w for mu, v in self._terms.items()})

    def __mul__(self, w):
        if isinstance(w, (int, QLaurent)):
            return self.scale(w)
        return NotImplemented

    __rmul__ = __mul__

    def map_coefficients(self, fn) -> "SchurExpansion":
        return SchurExpansion({mu: fn(w) for mu, w in self._terms.items()})

    def monomial_count(self) -> int:
        """Number of nonzero (q-power, partition) monomials."""
        return sum(1 for w in self._terms.values() for _ in w.terms())

    def to_json(self) -> list:
        return [{"partition": list(mu), "coeff": w.to_json()} for mu, w in self.items()]

    @classmethod
    def from_json(cls, data) -> "SchurExpansion":
        return cls({tuple(d["partition"]): QLaurent.from_json(d["coeff"]) for d in data})

    def __repr__(self):
        return f"SchurExpansion({{{', '.join(f'{mu!r}: {w!r}' for mu, w in self.items())}}})"

    def __str__(self):
        return render_expansion(self)


def _accumulate(acc: Dict[Partition, QLaurent], mu: Partition, w: QLaurent):
    total = acc.get(mu)
    total = w if total is None else total + w
    if total:
        acc[mu] = total
    else:
        acc.pop(mu, None)


def exp_scale_add(E: SchurExpansion, mu, w: Coefficient) -> SchurExpansion:
    acc = E.as_dict()
    _accumulate(acc, partition(mu), QLaurent.coerce(w))
    return SchurExpansion._wrap(acc)


def exp_map_conjugate(E: SchurExpansion) -> SchurExpansion:
    return SchurExpansion._wrap({conjugate(mu): w for mu, w in E.as_dict().items()})


def merge(expansions: Iterable[SchurExpansion]) -> SchurExpansion:
    acc: Dict[Partition, QLaurent] = {}
    for E in expansions:
        for mu, w in E.as_dict().items():
            _accumulate(acc, mu, w)
    return SchurExpansion._wrap(acc)


class Accumulator:
    """Mutable builder used by operator kernels and history sums."""

    __slots__ = ("terms",)

    def __init__(self):
        self.terms: Dict[Partition, QLaurent] = {}

    def add(self, mu: Partition, w: QLaurent):
        _accumulate(self.terms, mu, w)

    def freeze(self) -> SchurExpansion:
        return SchurExpansion._wrap(self.terms)


def render_term(mu: Partition, w: QLaurent) -> str:
    terms = list(w.terms())
    if len(terms) == 1:
        e, c = terms[0]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            factor = "" if mag == 1 else f"{mag} "
        else:
            var = "q" if e == 1 else f"q^{e}"
            factor = (var if mag == 1 else f"{mag}*{var}") + " "
        return f"{sign} {factor}{render_partition(mu)}"
    return f"+ ({w}) {render_partition(mu)}"


def render_expansion(E: SchurExpansion) -> str:
    if not E:
        return "0"
    return "\n".join(render_term(mu, w) for mu, w in E.items())
