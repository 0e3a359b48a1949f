"""Exact commutative coefficient rings.

Three kinds of ring are supported: the integers, the residue rings Z/m and
sparse multivariate polynomial rings over either of those.  Ring *elements*
are handled as bare payloads (``int`` or :class:`Poly`) inside matrices for
speed; :class:`RingValue` wraps a payload together with its owner ring for the
scalar-level API.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import DescriptorError, NotEnumerableError, RingMismatchError

# Monomials are packed into a single int, EXP_BITS bits per variable, so that
# multiplying monomials is integer addition.
EXP_BITS = 20
_EXP_MASK = (1 << EXP_BITS) - 1
_MAX_DEGREE = _EXP_MASK


def _unpack(key: int, nvars: int) -> tuple[int, ...]:
    return tuple((key >> (EXP_BITS * i)) & _EXP_MASK for i in range(nvars))


def _pack(exps) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e > _MAX_DEGREE:
            raise ValueError(f"exponent {e} out of range")
        key |= e << (EXP_BITS * i)
    return key


def _grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


class Poly:
    """Immutable sparse polynomial with integer or residue coefficients.

    ``modulus == 0`` means integer coefficients.  Zero coefficients are never
    stored, so two equal polynomials always have identical term maps.
    """

    __slots__ = ("_terms", "modulus", "nvars", "_degbound", "_hash")

    def __init__(self, terms: dict[int, int], modulus: int, nvars: int,
                 _clean: bool = False, _degbound: int | None = None):
        if not _clean:
            if modulus:
                terms = {k: c % modulus for k, c in terms.items() if c % modulus}
            else:
                terms = {k: c for k, c in terms.items() if c}
        self._terms = terms
        self.modulus = modulus
        self.nvars = nvars
        # upper bound on the total degree, only used to guard the packing
        if _degbound is None:
            _degbound = max((sum(_unpack(k, nvars)) for k in terms), default=0)
        self._degbound = _degbound
        self._hash = None

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(_unpack(k, self.nvars)) for k in self._terms), default=-1)

    # -- construction helpers -------------------------------------------------
    @classmethod
    def constant(cls, c: int, modulus: int, nvars: int) -> "Poly":
        return cls({0: c}, modulus, nvars)

    @classmethod
    def variable(cls, i: int, modulus: int, nvars: int) -> "Poly":
        return cls({1 << (EXP_BITS * i): 1}, modulus, nvars)

    @classmethod
    def from_terms(cls, items, modulus: int, nvars: int) -> "Poly":
        terms: dict[int, int] = {}
        for exps, c in items:
            if len(exps) != nvars:
                raise ValueError("exponent vector has wrong length")
            k = _pack(exps)
            terms[k] = terms.get(k, 0) + c
        return cls(terms, modulus, nvars)

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms as ``(exponents, coefficient)`` in descending graded-lex order."""
        items = [(_unpack(k, self.nvars), c) for k, c in self._terms.items()]
        items.sort(key=lambda t: _grlex_key(t[0]), reverse=True)
        return items

    # -- arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.modulus != self.modulus or other.nvars != self.nvars:
                raise RingMismatchError("polynomials from different rings")
            return other
        if isinstance(other, int):
            return Poly.constant(other, self.modulus, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        t = dict(self._terms)
        for k, c in other._terms.items():
            t[k] = t.get(k, 0) + c
        return Poly(t, self.modulus, self.nvars, _degbound=max(self._degbound, other._degbound))

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -c for k, c in self._terms.items()}, self.modulus, self.nvars,
                    _degbound=self._degbound)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly({k: c * other for k, c in self._terms.items()}, self.modulus, self.nvars,
                        _degbound=self._degbound)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return Poly({}, self.modulus, self.nvars, _clean=True)
        deg = self._degbound + other._degbound
        if deg > _MAX_DEGREE:
            raise OverflowError("polynomial degree exceeds the packed-monomial limit")
        t: dict[int, int] = {}
        get = t.get
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                t[k] = get(k, 0) + c1 * c2
        return Poly(t, self.modulus, self.nvars, _degbound=deg)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.constant(other, self.modulus, self.nvars)
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.modulus, self.nvars) == (other.modulus, other.nvars) and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.modulus, self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.terms():
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exps) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


Payload = Union[int, Poly]


# ---------------------------------------------------------------------------
# Ring descriptors
# ---------------------------------------------------------------------------


class Ring:
    """Common interface of the ring descriptors.

    Subclasses are frozen dataclasses, so descriptors compare and hash by value.
    """

    kind: str = ""

    # payload-level operations; subclasses override where needed
    def reduce(self, x):
        return x

    def add(self, x, y):
        return self.reduce(x + y)

    def sub(self, x, y):
        return self.reduce(x - y)

    def mul(self, x, y):
        return self.reduce(x * y)

    def neg(self, x):
        return self.reduce(-x)

    def is_zero(self, x) -> bool:
        return not x

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def from_int(self, k: int):
        raise NotImplementedError

    def coerce(self, x):
        """Turn an int, RingValue or payload into a canonical payload of this ring."""
        if isinstance(x, RingValue):
            if x.owner != self:
                raise RingMismatchError(f"value from {x.owner} used in {self}")
            return x.payload
        if isinstance(x, bool):
            raise TypeError("bool is not a ring element")
        if isinstance(x, int):
            return self.from_int(x)
        return self._coerce_other(x)

    def _coerce_other(self, x):
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def __call__(self, x) -> "RingValue":
        return RingValue(self, self.coerce(x))

    # enumeration ---------------------------------------------------------
    @property
    def enumerable(self) -> bool:
        return False

    def size(self) -> int:
        raise NotImplementedError(f"{self} is not enumerable")

    def elements(self) -> Iterator:
        raise NotEnumerableError(f"{self} is not enumerable")

    # sampling --------------------------------------------------------------
    def random(self, rng: random.Random):
        raise NotImplementedError

    # serialization ---------------------------------------------------------
    def to_json(self) -> dict:
        raise NotImplementedError

    def value_to_json(self, x):
        raise NotImplementedError

    def value_from_json(self, obj):
        raise NotImplementedError

    def serialize(self, x) -> bytes:
        """Canonical byte form of a payload; equal elements give equal bytes."""
        return json.dumps(self.value_to_json(x), separators=(",", ":")).encode()

    def format(self, x) -> str:
        return str(x)


@dataclass(frozen=True)
class Integers(Ring):
    kind = "integers"

    def from_int(self, k):
        return int(k)

    def random(self, rng):
        return rng.randint(-9, 9)

    def to_json(self):
        return {"kind": "integers"}

    def value_to_json(self, x):
        return str(x)

    def value_from_json(self, obj):
        return int(obj)

    def __str__(self):
        return "int"


@dataclass(frozen=True)
class IntegersMod(Ring):
    m: int
    kind = "modular"

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 2:
            raise DescriptorError(f"modulus must be an integer >= 2, got {self.m!r}")

    def reduce(self, x):
        return x % self.m

    def from_int(self, k):
        return int(k) % self.m

    def is_zero(self, x):
        return x % self.m == 0

    @property
    def enumerable(self):
        return True

    def size(self):
        return self.m

    def elements(self):
        return iter(range(self.m))

    def random(self, rng):
        return rng.randrange(self.m)

    def to_json(self):
        return {"kind": "modular", "m": self.m}

    def value_to_json(self, x):
        return x % self.m

    def value_from_json(self, obj):
        return int(obj) % self.m

    def __str__(self):
        return f"zmod:{self.m}"


@dataclass(frozen=True)
class PolynomialRing(Ring):
    base: Ring
    num_vars: int
    degree_bound: int | None = None
    kind = "polynomial"

    def __post_init__(self):
        if isinstance(self.base, PolynomialRing):
            raise DescriptorError("polynomials over polynomial rings are not supported")
        if not isinstance(self.base, (Integers, IntegersMod)):
            raise DescriptorError(f"unsupported base ring {self.base!r}")
        if not isinstance(self.num_vars, int) or self.num_vars < 1:
            raise DescriptorError("num_vars must be >= 1")
        if self.degree_bound is not None and self.degree_bound < 0:
            raise DescriptorError("degree_bound must be non-negative")

    @property
    def modulus(self) -> int:
        return self.base.m if isinstance(self.base, IntegersMod) else 0

    def from_int(self, k):
        return Poly.constant(int(k), self.modulus, self.num_vars)

    def _coerce_other(self, x):
        if isinstance(x, Poly):
            if x.modulus != self.modulus or x.nvars != self.num_vars:
                raise RingMismatchError("polynomial from a different ring")
            return x
        return super()._coerce_other(x)

    def gen(self, i: int) -> Poly:
        """The variable x_{i+1} (0-based index)."""
        return Poly.variable(i, self.modulus, self.num_vars)

    @property
    def enumerable(self):
        return isinstance(self.base, IntegersMod) and self.degree_bound is not None

    def _monomials(self) -> list[tuple[int, ...]]:
        monos = [
            e
            for e in itertools.product(range(self.degree_bound + 1), repeat=self.num_vars)
            if sum(e) <= self.degree_bound
        ]
        monos.sort(key=_grlex_key)
        return monos

    def size(self):
        if not self.enumerable:
            raise NotEnumerableError(f"{self} is not enumerable")
        return self.base.m ** len(self._monomials())

    def elements(self):
        if not self.enumerable:
            raise NotEnumerableError(f"{self} is not enumerable (needs a modular base and a degree bound)")
        monos = self._monomials()
        for coeffs in itertools.product(range(self.base.m), repeat=len(monos)):
            yield Poly.from_terms(zip(monos, coeffs), self.modulus, self.num_vars)

    def random(self, rng):
        deg = 1 if self.degree_bound is None else min(1, self.degree_bound)
        items = [((0,) * self.num_vars, self.base.random(rng))]
        if deg >= 1:
            for i in range(self.num_vars):
                e = [0] * self.num_vars
                e[i] = 1
                items.append((tuple(e), self.base.random(rng)))
        return Poly.from_terms(items, self.modulus, self.num_vars)

    def to_json(self):
        return {
            "kind": "polynomial",
            "base": self.base.to_json(),
            "num_vars": self.num_vars,
            "degree_bound": self.degree_bound,
        }

    def value_to_json(self, x):
        return {",".join(map(str, e)): self.base.value_to_json(c) for e, c in x.terms()}

    def value_from_json(self, obj):
        if isinstance(obj, (int, str)) and not isinstance(obj, bool):
            return self.from_int(int(obj))
        items = [
            (tuple(int(s) for s in k.split(",")), int(self.base.value_from_json(c)))
            for k, c in obj.items()
        ]
        return Poly.from_terms(items, self.modulus, self.num_vars)

    def __str__(self):
        s = f"poly:{self.base}:{self.num_vars}"
        if self.degree_bound is not None:
            s += f":deg{self.degree_bound}"
        return s


ZZ = Integers()


def parse_ring(text: str) -> Ring:
    """Parse the mini-grammar ``int``, ``zmod:<m>``, ``poly:<base>:<k>[:deg<d>]``."""
    text = text.strip()
    if text in ("int", "ZZ", "integers"):
        return ZZ
    if text.startswith("zmod:"):
        try:
            m = int(text[5:])
        except ValueError:
            raise DescriptorError(f"bad modulus in {text!r}") from None
        return IntegersMod(m)
    if text.startswith("poly:"):
        parts = text[5:].split(":")
        degree_bound = None
        if parts and parts[-1].startswith("deg"):
            try:
                degree_bound = int(parts.pop()[3:])
            except ValueError:
                raise DescriptorError(f"bad degree bound in {text!r}") from None
        if len(parts) < 2:
            raise DescriptorError(f"expected poly:<base>:<k>, got {text!r}")
        try:
            k = int(parts[-1])
        except ValueError:
            raise DescriptorError(f"bad variable count in {text!r}") from None
        base = parse_ring(":".join(parts[:-1]))
        return PolynomialRing(base, k, degree_bound)
    raise DescriptorError(f"unknown ring descriptor {text!r}")


def ring_from_json(obj: dict) -> Ring:
    kind = obj.get("kind")
    if kind == "integers":
        return ZZ
    if kind == "modular":
        return IntegersMod(int(obj["m"]))
    if kind == "polynomial":
        return PolynomialRing(ring_from_json(obj["base"]), int(obj["num_vars"]), obj.get("degree_bound"))
    raise DescriptorError(f"unknown ring kind {kind!r}")


# ---------------------------------------------------------------------------
# Scalar API
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RingValue:
    """A ring element bundled with the ring it belongs to."""

    owner: Ring
    payload: object

    def _other(self, other) -> object:
        if isinstance(other, RingValue):
            if other.owner != self.owner:
                raise RingMismatchError(f"{self.owner} vs {other.owner}")
            return other.payload
        return self.owner.coerce(other)

    def __add__(self, other):
        return RingValue(self.owner, self.owner.add(self.payload, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return RingValue(self.owner, self.owner.sub(self.payload, self._other(other)))

    def __rsub__(self, other):
        return RingValue(self.owner, self.owner.sub(self._other(other), self.payload))

    def __mul__(self, other):
        return RingValue(self.owner, self.owner.mul(self.payload, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return RingValue(self.owner, self.owner.neg(self.payload))

    def __eq__(self, other):
        if isinstance(other, RingValue):
            return self.owner == other.owner and self.serialize() == other.serialize()
        if isinstance(other, int):
            return self.serialize() == self.owner.serialize(self.owner.from_int(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.owner, self.serialize()))

    def is_zero(self) -> bool:
        return self.owner.is_zero(self.payload)

    def serialize(self) -> bytes:
        return self.owner.serialize(self.payload)

    def to_json(self):
        return self.owner.value_to_json(self.payload)

    def __repr__(self):
        return f"RingValue({self.owner}, {self.payload!r})"


def ring_arith(op: str, x: RingValue, y: RingValue | None = None) -> RingValue:
    """Apply ``add``, ``sub``, ``mul`` or ``neg`` to ring values."""
    if op == "neg":
        if y is not None:
            raise TypeError("neg takes one operand")
        return -x
    if y is None:
        raise TypeError(f"{op} needs two operands")
    if x.owner != y.owner:
        raise RingMismatchError(f"{x.owner} vs {y.owner}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown ring operation {op!r}")


def enumerate_ring(ring: Ring) -> Iterator[RingValue]:
    """Yield every element of an enumerable ring once, in a fixed order."""
    if not ring.enumerable:
        raise NotEnumerableError(f"{ring} is not enumerable")
    for x in ring.elements():
        yield RingValue(ring, x)
