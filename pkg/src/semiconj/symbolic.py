"""Cycle-chain-ray types of partial injections of a countably infinite set.

A type records how many cycles and chains of each length an injection has,
plus the numbers of double rays (omega), right rays (upsilon) and left rays
(lambda). Counts live in N u {aleph_0}; chain lengths count arcs, so
``[1 2 3]`` has length 2.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import total_ordering

import numpy as np

from .errors import NotEpiElement, NotFullInjection, ParseError
from .pinj import PartialInjection, Piece, cc_type, join


@total_ordering
@dataclass(frozen=True)
class Cardinal:
    """A finite count, or aleph_0 when ``k is None``."""

    k: int | None = 0

    def __post_init__(self):
        if self.k is not None and self.k < 0:
            raise ValueError("cardinals are non-negative")

    @classmethod
    def of(cls, x) -> "Cardinal":
        if isinstance(x, Cardinal):
            return x
        if x is None or x == "w":
            return ALEPH0
        return cls(int(x))

    @property
    def is_finite(self) -> bool:
        return self.k is not None

    def __add__(self, other) -> "Cardinal":
        other = Cardinal.of(other)
        if not (self.is_finite and other.is_finite):
            return ALEPH0
        return Cardinal(self.k + other.k)

    __radd__ = __add__

    def __mul__(self, m: int) -> "Cardinal":
        if m == 0:
            return ZERO
        return self if not self.is_finite else Cardinal(self.k * m)

    __rmul__ = __mul__

    def __lt__(self, other) -> bool:
        other = Cardinal.of(other)
        if not self.is_finite:
            return False
        return not other.is_finite or self.k < other.k

    def __bool__(self):
        return self.k != 0

    def __str__(self):
        return "w" if self.k is None else str(self.k)

    __repr__ = __str__


ALEPH0 = Cardinal(None)
ZERO = Cardinal(0)


@dataclass(frozen=True)
class Spectrum:
    """Count per length: listed exceptions, ``default`` (0 or aleph_0) elsewhere."""

    exceptions: tuple = ()  # sorted (length, Cardinal), values differ from default
    default: Cardinal = ZERO

    def __post_init__(self):
        if self.default not in (ZERO, ALEPH0):
            raise ValueError("spectrum default must be 0 or w")
        ex = {}
        for length, c in self.exceptions:
            if length < 1:
                raise ValueError("lengths start at 1")
            ex[int(length)] = Cardinal.of(c)
        norm = tuple(sorted((k, c) for k, c in ex.items() if c != self.default))
        object.__setattr__(self, "exceptions", norm)

    @classmethod
    def of(cls, counts: dict | None = None, default=ZERO) -> "Spectrum":
        return cls(tuple((counts or {}).items()), Cardinal.of(default))

    def __getitem__(self, length: int) -> Cardinal:
        return dict(self.exceptions).get(length, self.default)

    @property
    def is_zero(self) -> bool:
        return not self.exceptions and self.default == ZERO

    @property
    def support_bound(self):
        """Largest length with a nonzero count; None if unbounded, 0 if empty."""
        if self.default == ALEPH0:
            return None
        return max((k for k, c in self.exceptions if c), default=0)

    def weighted_total(self) -> Cardinal:
        """Sum of length * count, i.e. the number of points moved."""
        if self.default == ALEPH0:
            return ALEPH0
        total = ZERO
        for k, c in self.exceptions:
            total = total + c * k
        return total

    def __str__(self):
        body = ",".join(f"{k}:{c}" for k, c in self.exceptions)
        return body + (";w" if self.default == ALEPH0 else "")


@dataclass(frozen=True)
class CCRType:
    cycles: Spectrum = field(default_factory=Spectrum)
    chains: Spectrum = field(default_factory=Spectrum)
    omega: Cardinal = ZERO  # double rays
    upsilon: Cardinal = ZERO  # right rays
    lambda_: Cardinal = ZERO  # left rays

    @classmethod
    def make(cls, cycles=None, chains=None, omega=0, upsilon=0, lambda_=0,
             cycles_default=0, chains_default=0) -> "CCRType":
        return cls(Spectrum.of(cycles, cycles_default), Spectrum.of(chains, chains_default),
                   Cardinal.of(omega), Cardinal.of(upsilon), Cardinal.of(lambda_))

    @property
    def has_rays(self) -> bool:
        return bool(self.omega or self.upsilon or self.lambda_)

    @property
    def is_full(self) -> bool:
        return self.chains.is_zero and not self.lambda_

    @property
    def is_finite(self) -> bool:
        return (not self.has_rays and self.cycles.default == ZERO and self.chains.default == ZERO
                and all(c.is_finite for _, c in self.cycles.exceptions + self.chains.exceptions))

    def __str__(self):
        return (f"cycles{{{self.cycles}}} chains{{{self.chains}}} "
                f"omega={self.omega} upsilon={self.upsilon} lambda={self.lambda_}")


# Literal format -------------------------------------------------------------

_LITERAL = re.compile(
    r"^\s*cycles\{(?P<cy>[^}]*)\}\s+chains\{(?P<ch>[^}]*)\}"
    r"\s+omega=(?P<om>w|\d+)\s+upsilon=(?P<up>w|\d+)\s+lambda=(?P<la>w|\d+)\s*$"
)


def _parse_spectrum(body: str) -> Spectrum:
    main, _, default = body.partition(";")
    counts = {}
    for item in filter(None, (s.strip() for s in main.split(","))):
        k, sep, c = item.partition(":")
        if not sep or not k.strip().isdigit() or not re.fullmatch(r"w|\d+", c.strip()):
            raise ParseError(f"bad spectrum entry {item!r}")
        counts[int(k)] = Cardinal.of(c.strip())
    default = default.strip() or "0"
    if default not in ("0", "w"):
        raise ParseError(f"spectrum default must be 0 or w, got {default!r}")
    try:
        return Spectrum.of(counts, default)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_type(text: str) -> CCRType:
    m = _LITERAL.match(text)
    if not m:
        raise ParseError(f"not a type literal: {text!r}")
    return CCRType(_parse_spectrum(m["cy"]), _parse_spectrum(m["ch"]),
                   Cardinal.of(m["om"]), Cardinal.of(m["up"]), Cardinal.of(m["la"]))


def format_type(t: CCRType) -> str:
    return str(t)


# Invariants -------------------------------------------------------------------

def kappa(t: CCRType) -> Cardinal:
    bound = t.chains.support_bound
    return ALEPH0 if bound is None else Cardinal(bound)


def mu(t: CCRType) -> int:
    k = kappa(t)
    if not k.is_finite or k.k < 1:
        return 0
    return max((m for m in range(1, k.k + 1) if t.chains[m] == ALEPH0), default=0)


def _lengths(t1: CCRType, t2: CCRType, which: str) -> set:
    return {k for t in (t1, t2) for k, _ in getattr(t, which).exceptions}


def c_conjugate(t1: CCRType, t2: CCRType) -> bool:
    # (1) cycle spectra, double rays and left rays agree
    if t1.cycles != t2.cycles or t1.omega != t2.omega or t1.lambda_ != t2.lambda_:
        return False
    # (2) finitely many double rays pins down the right rays
    if t1.omega.is_finite and t1.upsilon != t2.upsilon:
        return False
    # (3) finitely many left rays pins down the top of the chain spectrum
    if t1.lambda_.is_finite:
        k1, k2 = kappa(t1), kappa(t2)
        if k1 != k2:
            return False
        if k1.is_finite and k1.k >= 1:
            m = mu(t1)
            if m != mu(t2):
                return False
            if any(t1.chains[k] != t2.chains[k] for k in range(m + 1, k1.k + 1)):
                return False
    return True


@dataclass(frozen=True)
class GammaRelations:
    p: bool
    c: bool
    j: bool


def gamma_relations(t1: CCRType, t2: CCRType) -> GammaRelations:
    """p, c and J between two injections defined on the whole set."""
    for t in (t1, t2):
        if not t.is_full:
            raise NotFullInjection(f"type {t} has chains or left rays")
    same_core = t1.cycles == t2.cycles and t1.omega == t2.omega
    j = t1.upsilon == t2.upsilon
    return GammaRelations(
        p=same_core and j,
        c=same_core and t1.upsilon + t1.omega == t2.upsilon + t2.omega,
        j=j,
    )


def is_epi_element(t: CCRType) -> bool:
    return not t.has_rays and t.chains.default == ZERO


def tr_conjugate(t1: CCRType, t2: CCRType) -> bool:
    for t in (t1, t2):
        if not is_epi_element(t):
            raise NotEpiElement(f"type {t} has rays or unbounded chains")
    return t1.cycles == t2.cycles


def dom_cardinality(t: CCRType) -> Cardinal:
    total = t.cycles.weighted_total() + t.chains.weighted_total()
    return ALEPH0 if t.has_rays else total


def i_j_related(t1: CCRType, t2: CCRType) -> bool:
    return dom_cardinality(t1) == dom_cardinality(t2)


# Random generation and realization --------------------------------------------

@dataclass(frozen=True)
class TypeBounds:
    max_exceptions: int = 2
    max_length: int = 3
    max_count: int = 2
    aleph_prob: float = 0.25
    default_aleph_prob: float = 0.1


def _rand_card(rng: np.random.Generator, b: TypeBounds, zero_bias: float = 0.4) -> Cardinal:
    r = rng.random()
    if r < b.aleph_prob:
        return ALEPH0
    if r < b.aleph_prob + zero_bias * (1 - b.aleph_prob):
        return ZERO
    return Cardinal(int(rng.integers(1, b.max_count + 1)))


def _rand_spectrum(rng: np.random.Generator, b: TypeBounds) -> Spectrum:
    default = ALEPH0 if rng.random() < b.default_aleph_prob else ZERO
    counts = {}
    for _ in range(int(rng.integers(0, b.max_exceptions + 1))):
        counts[int(rng.integers(1, b.max_length + 1))] = _rand_card(rng, b, zero_bias=0.0)
    return Spectrum.of(counts, default)


def random_type(seed, bounds: TypeBounds | None = None, full_injection: bool = False) -> CCRType:
    """Deterministic per seed; ``seed`` may also be a numpy Generator."""
    b = bounds or TypeBounds()
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    cycles = _rand_spectrum(rng, b)
    chains = Spectrum() if full_injection else _rand_spectrum(rng, b)
    omega = _rand_card(rng, b)
    upsilon = _rand_card(rng, b)
    lam = ZERO if full_injection else _rand_card(rng, b)
    return CCRType(cycles, chains, omega, upsilon, lam)


def type_of(f: PartialInjection) -> CCRType:
    t = cc_type(f)
    return CCRType(Spectrum.of(dict(t.cycles)), Spectrum.of(dict(t.chains)))


def span_size(t: CCRType) -> int:
    if not t.is_finite:
        raise ValueError(f"type {t} is not finite")
    return (sum(k * c.k for k, c in t.cycles.exceptions)
            + sum((k + 1) * c.k for k, c in t.chains.exceptions))


def realize(t: CCRType, n: int | None = None) -> PartialInjection:
    """A concrete injection of this type on 0..n-1 (n defaults to the span size)."""
    size = span_size(t)
    n = size if n is None else n
    if n < size:
        raise ValueError(f"type needs {size} points, only {n} available")
    pieces = []
    nxt = 0
    for kind, spec, extra in (("cycle", t.cycles, 0), ("chain", t.chains, 1)):
        for k, c in spec.exceptions:
            for _ in range(c.k):
                pieces.append(Piece(kind, tuple(range(nxt, nxt + k + extra))))
                nxt += k + extra
    return join(n, pieces)
