"""Integer polynomials in ``q`` and formal sums of constructs."""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping

from .constructs import Construct

__all__ = [
    "QPolynomial",
    "q",
    "ZERO",
    "ONE",
    "LinearConstruct",
    "MixedHypergraphs",
    "OverlapError",
    "add",
    "total",
    "scale",
    "graft",
    "evaluate_q",
    "coefficient_sum",
]


class MixedHypergraphs(ValueError):
    pass


class OverlapError(ValueError):
    pass


class QPolynomial:
    """Sparse polynomial with integer coefficients in the variable ``q``.

    >>> (1 + q) * (1 - q)
    1 - q^2
    >>> (2 + q)(-1)
    1
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | int = 0):
        if isinstance(coeffs, int):
            c = {0: coeffs} if coeffs else {}
        else:
            c = {}
            for e, v in coeffs.items():
                e, v = int(e), int(v)
                if e < 0:
                    raise ValueError("negative exponents are not allowed")
                if v:
                    c[e] = v
        self._c = c
        self._hash = hash(frozenset(c.items()))

    @classmethod
    def _of(cls, c: dict) -> QPolynomial:
        p = cls.__new__(cls)
        p._c = c
        p._hash = hash(frozenset(c.items()))
        return p

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> QPolynomial:
        return cls._of({exponent: coeff} if coeff else {})

    @staticmethod
    def _coerce(other) -> QPolynomial | None:
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial(other)
        return None

    # -- views -------------------------------------------------------------
    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    @property
    def degree(self) -> int:
        return max(self._c, default=-1)

    def __getitem__(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_monomial(self) -> bool:
        """True for ``q^k`` with coefficient exactly one."""
        return len(self._c) == 1 and next(iter(self._c.values())) == 1

    def monomial_exponent(self) -> int | None:
        return next(iter(self._c)) if self.is_monomial() else None

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return QPolynomial._of(c)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial._of({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c: dict[int, int] = {}
        for (e1, v1), (e2, v2) in itertools.product(self._c.items(), other._c.items()):
            c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return QPolynomial._of({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return self._hash

    # -- evaluation and serialization -----------------------------------
    def eval(self, value: int) -> int:
        return sum(v * value**e for e, v in self._c.items())

    __call__ = eval

    def to_json(self) -> dict[str, int]:
        return {str(e): v for e, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, obj) -> QPolynomial:
        if isinstance(obj, int):
            return cls(obj)
        return cls({int(k): v for k, v in obj.items()})

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        out = []
        for e, v in sorted(self._c.items()):
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if mono and abs(v) == 1:
                body = mono
            elif mono:
                body = f"{abs(v)}*{mono}"
            else:
                body = str(abs(v))
            sign = "-" if v < 0 else "+"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text


ZERO = QPolynomial()
ONE = QPolynomial(1)
q = QPolynomial.monomial(1)


def _poly(c) -> QPolynomial:
    return c if isinstance(c, QPolynomial) else QPolynomial(c)


class LinearConstruct:
    """Formal sum of constructs on one carrier with ``QPolynomial`` coefficients.

    The carrier is remembered even when every term cancels, so sums stay
    type-checked.
    """

    __slots__ = ("_terms", "carrier", "_hash")

    def __init__(self, terms: Mapping[Construct, object] | Iterable[tuple[Construct, object]] = (), carrier=None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Construct, QPolynomial] = {}
        for c, coeff in items:
            if carrier is None:
                carrier = c.carrier
            elif c.carrier != carrier:
                raise MixedHypergraphs(f"{c!r} does not live on {sorted(carrier)}")
            acc[c] = acc.get(c, ZERO) + _poly(coeff)
        self._terms = {c: p for c, p in acc.items() if p}
        self.carrier = frozenset(carrier) if carrier is not None else None
        self._hash = None

    @classmethod
    def _of(cls, terms: dict, carrier) -> LinearConstruct:
        lc = cls.__new__(cls)
        lc._terms = terms
        lc.carrier = carrier
        lc._hash = None
        return lc

    @classmethod
    def of(cls, c: Construct, coeff=1) -> LinearConstruct:
        return cls._of({c: _poly(coeff)} if coeff else {}, c.carrier)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Construct]:
        return iter(self.constructs())

    def __contains__(self, c) -> bool:
        return c in self._terms

    def __getitem__(self, c: Construct) -> QPolynomial:
        return self._terms.get(c, ZERO)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def constructs(self) -> list[Construct]:
        return sorted(self._terms, key=Construct.sort_key)

    def items(self) -> list[tuple[Construct, QPolynomial]]:
        return [(c, self._terms[c]) for c in self.constructs()]

    def roots(self) -> set[frozenset]:
        return {c.root for c in self._terms}

    def is_rooted(self) -> bool:
        """All terms share a root decoration (vacuously true when empty)."""
        return len(self.roots()) <= 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearConstruct):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, LinearConstruct):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, LinearConstruct):
            return NotImplemented
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __rmul__(self, p):
        if isinstance(p, (int, QPolynomial)):
            return scale(p, self)
        return NotImplemented

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for c, p in self.items():
            if p == ONE:
                parts.append(c.notation())
            elif len(p._c) == 1:
                parts.append(f"{p!r}*{c.notation()}")
            else:
                parts.append(f"({p!r})*{c.notation()}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [{"construct": c.to_json(), "coeff": p.to_json()} for c, p in self.items()]


def _check_carriers(a: LinearConstruct, b: LinearConstruct):
    if a.carrier is not None and b.carrier is not None and a.carrier != b.carrier:
        raise MixedHypergraphs(f"cannot add sums on {sorted(a.carrier)} and {sorted(b.carrier)}")
    return a.carrier if a.carrier is not None else b.carrier


def add(a: LinearConstruct, b: LinearConstruct) -> LinearConstruct:
    carrier = _check_carriers(a, b)
    terms = dict(a._terms)
    for c, p in b._terms.items():
        s = terms.get(c, ZERO) + p
        if s:
            terms[c] = s
        else:
            terms.pop(c, None)
    return LinearConstruct._of(terms, carrier)


def total(sums: Iterable[LinearConstruct], carrier=None) -> LinearConstruct:
    """Sum of many linear constructs, accumulated in place."""
    terms: dict[Construct, QPolynomial] = {}
    for s in sums:
        if carrier is None:
            carrier = s.carrier
        elif s.carrier is not None and s.carrier != carrier:
            raise MixedHypergraphs("summands live on different carriers")
        for c, p in s._terms.items():
            terms[c] = terms.get(c, ZERO) + p
    return LinearConstruct._of({c: p for c, p in terms.items() if p}, carrier)


def scale(p, a: LinearConstruct) -> LinearConstruct:
    p = _poly(p)
    if not p:
        return LinearConstruct._of({}, a.carrier)
    terms = {c: p * v for c, v in a._terms.items()}
    return LinearConstruct._of({c: v for c, v in terms.items() if v}, a.carrier)


def _as_linear(x) -> LinearConstruct:
    return x if isinstance(x, LinearConstruct) else LinearConstruct.of(x)


def graft(x_set: Iterable, children: Iterable[LinearConstruct | Construct]) -> LinearConstruct:
    """Multilinear grafting ``X(C_1, ..., C_n)`` onto linear children."""
    root = frozenset(x_set)
    if not root:
        raise OverlapError("the root decoration must be nonempty")
    kids = [_as_linear(k) for k in children]
    seen = set(root)
    for k in kids:
        if k.carrier is None:
            raise OverlapError("children must have a known carrier")
        if seen & k.carrier:
            raise OverlapError("children and root must be pairwise disjoint")
        seen |= k.carrier
    carrier = frozenset(seen)
    deco = tuple(sorted(root))
    terms: dict[Construct, QPolynomial] = {}
    for combo in itertools.product(*(k._terms.items() for k in kids)):
        coeff = ONE
        for _, p in combo:
            coeff = coeff * p
        c = Construct.graft(deco, [t for t, _ in combo])
        terms[c] = terms.get(c, ZERO) + coeff
    return LinearConstruct._of({c: p for c, p in terms.items() if p}, carrier)


def evaluate_q(a: LinearConstruct, value: int) -> LinearConstruct:
    terms = {c: p.eval(value) for c, p in a._terms.items()}
    return LinearConstruct._of({c: QPolynomial(v) for c, v in terms.items() if v}, a.carrier)


def coefficient_sum(a: LinearConstruct) -> QPolynomial:
    s = ZERO
    for p in a._terms.values():
        s = s + p
    return s
