"""Seeded random and exhaustive verification of the identity catalogue.

Random sweeps draw from :class:`Lcg64`, a 64-bit linear congruential
generator with Knuth's MMIX constants::

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64

seeded with ``state = seed``. ``below(n)`` advances once and returns
``((state >> 32) * n) >> 32``, i.e. the top 32 bits scaled into [0, n).
One stream is consumed identity by identity (catalogue order), case by
case, argument by argument, component by component, so a run is fixed by
(field, form, seed, cases) alone.

Sampling: rational components are integers in [-20, 20]; prime-field
components are uniform residues; ``n`` scalars exclude zero. Cases failing
an identity's precondition count as skipped and are never redrawn.

Exhaustive sweeps (prime fields only) evaluate each identity on every
argument tuple at once, as numpy batches. Identities whose domain exceeds
``cap`` tuples are listed as not enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError
from .exactfield import FieldArray, FieldSpec
from .identities import CATALOGUE, Identity
from .jsonio import form_out
from .linalg3 import Vec3
from .metric import BilinearForm

__all__ = ["Lcg64", "Tally", "SweepResult", "random_sweep", "exhaustive_sweep", "domain_size"]

_MASK64 = (1 << 64) - 1
LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407

RATIONAL_RANGE = 20
DEFAULT_CAP = 10**7
CHUNK = 1 << 17
MAX_EXAMPLES = 5
# FieldArray keeps products of residues inside int64.
_MAX_BATCH_PRIME = 2**31


class Lcg64:
    def __init__(self, seed: int):
        if seed < 0:
            raise ConfigError("seed must be a non-negative integer")
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) & _MASK64
        return self.state

    def below(self, n: int) -> int:
        return ((self.next() >> 32) * n) >> 32


@dataclass
class Tally:
    tested: int = 0
    passed: int = 0
    skipped: int = 0
    failed: int = 0

    def to_json(self) -> dict:
        return {
            "tested": self.tested,
            "passed": self.passed,
            "skipped": self.skipped,
            "failed": self.failed,
        }


@dataclass
class SweepResult:
    field: FieldSpec
    form: BilinearForm
    mode: str
    seed: int | None
    cases: int | None
    tallies: dict = field(default_factory=dict)
    not_enumerated: list = field(default_factory=list)
    examples: list = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(t.failed for t in self.tallies.values())

    def to_json(self) -> dict:
        doc = {
            "field": str(self.field),
            "form": form_out(self.form),
            "mode": self.mode,
        }
        if self.mode == "random":
            doc["seed"] = self.seed
            doc["cases"] = self.cases
        else:
            doc["not_enumerated"] = list(self.not_enumerated)
        doc["identities"] = {name: t.to_json() for name, t in self.tallies.items()}
        doc["failures"] = self.failures
        doc["failing_examples"] = list(self.examples)
        return doc


def _draw_component(rng: Lcg64, spec: FieldSpec, nonzero: bool = False):
    if spec.is_prime:
        if nonzero:
            return spec(1 + rng.below(spec.p - 1))
        return spec(rng.below(spec.p))
    if nonzero:
        k = rng.below(2 * RATIONAL_RANGE) - RATIONAL_RANGE
        return spec(k if k < 0 else k + 1)
    return spec(rng.below(2 * RATIONAL_RANGE + 1) - RATIONAL_RANGE)


def draw_args(rng: Lcg64, spec: FieldSpec, signature: str) -> list:
    args = []
    for kind in signature:
        if kind == "v":
            args.append(Vec3(*(_draw_component(rng, spec) for _ in range(3))))
        else:
            args.append(_draw_component(rng, spec, nonzero=kind == "n"))
    return args


def _describe(args) -> list:
    return [[str(c) for c in a] if isinstance(a, Vec3) else str(a) for a in args]


def random_sweep(
    spec: FieldSpec,
    B: BilinearForm,
    seed: int,
    cases: int,
    identities: tuple[Identity, ...] = CATALOGUE,
    batched: bool | None = None,
) -> SweepResult:
    """Check each identity on ``cases`` seeded random argument tuples.

    Over prime fields the drawn tuples are evaluated together as numpy
    batches (``batched=False`` forces one-at-a-time evaluation; both give
    identical results).
    """
    if cases < 1:
        raise ConfigError("cases must be at least 1")
    if batched is None:
        batched = spec.is_prime and spec.p < _MAX_BATCH_PRIME
    rng = Lcg64(seed)
    result = SweepResult(spec, B, "random", seed, cases)
    for ident in identities:
        tally = Tally()
        if batched:
            draws = [draw_args(rng, spec, ident.signature) for _ in range(cases)]
            _evaluate_batch(ident, B, _stack(spec, draws), np.arange(cases), tally, result)
        else:
            for case in range(cases):
                _evaluate_one(ident, B, draw_args(rng, spec, ident.signature), case, tally, result)
        result.tallies[ident.name] = tally
    return result


def _evaluate_one(ident, B, args, case, tally, result):
    tally.tested += 1
    if ident.pre is not None and not ident.pre(B, *args):
        tally.skipped += 1
    elif ident.law(B, *args):
        tally.passed += 1
    else:
        tally.failed += 1
        if len(result.examples) < MAX_EXAMPLES:
            result.examples.append({"identity": ident.name, "case": case, "args": _describe(args)})


def _stack(spec: FieldSpec, draws: list) -> list:
    """Turn per-case argument lists into one batch argument list."""
    args = []
    for slot in zip(*draws):
        if isinstance(slot[0], Vec3):
            args.append(Vec3(*(FieldArray(spec, [v[i].value for v in slot]) for i in range(3))))
        else:
            args.append(FieldArray(spec, [x.value for x in slot]))
    return args


def domain_size(p: int, signature: str) -> int:
    sizes = {"v": p**3, "s": p, "n": p - 1}
    total = 1
    for kind in signature:
        total *= sizes[kind]
    return total


def _decode(spec: FieldSpec, index: np.ndarray, signature: str) -> list:
    """Arguments number ``index`` in the mixed-radix enumeration of the domain.

    The first argument varies fastest; a vector index d encodes
    (d mod p, d div p mod p, d div p^2).
    """
    p = spec.p
    args = []
    rest = index
    for kind in signature:
        if kind == "v":
            digit, rest = rest % p**3, rest // p**3
            x, y, z = digit % p, (digit // p) % p, digit // (p * p)
            args.append(Vec3(FieldArray(spec, x), FieldArray(spec, y), FieldArray(spec, z)))
        elif kind == "s":
            digit, rest = rest % p, rest // p
            args.append(FieldArray(spec, digit))
        else:
            digit, rest = rest % (p - 1), rest // (p - 1)
            args.append(FieldArray(spec, digit + 1))
    return args


def _evaluate_batch(ident, B, args, index, tally, result):
    n = len(index)
    tally.tested += n
    if ident.pre is not None:
        ok = _as_mask(ident.pre(B, *args), n)
        tally.skipped += int(n - ok.sum())
        args = [a.compress(ok) for a in args]
        index = index[ok]
        n = len(index)
    if n == 0:
        return
    holds = _as_mask(ident.law(B, *args), n)
    tally.passed += int(holds.sum())
    bad = np.flatnonzero(~holds)
    tally.failed += len(bad)
    for k in bad[: max(0, MAX_EXAMPLES - len(result.examples))]:
        k = int(k)
        picked = [a[k] if isinstance(a, FieldArray) else Vec3(a.x[k], a.y[k], a.z[k]) for a in args]
        result.examples.append({"identity": ident.name, "case": int(index[k]), "args": _describe(picked)})


def _as_mask(value, n: int) -> np.ndarray:
    return np.broadcast_to(np.asarray(value, dtype=bool), (n,))


def exhaustive_sweep(
    spec: FieldSpec,
    B: BilinearForm,
    cap: int = DEFAULT_CAP,
    identities: tuple[Identity, ...] = CATALOGUE,
    chunk: int = CHUNK,
) -> SweepResult:
    if not spec.is_prime:
        raise ConfigError("exhaustive sweeps need a prime field")
    result = SweepResult(spec, B, "exhaustive", None, None)
    for ident in identities:
        size = domain_size(spec.p, ident.signature)
        if size > cap:
            result.not_enumerated.append(ident.name)
            continue
        tally = Tally()
        for start in range(0, size, chunk):
            index = np.arange(start, min(start + chunk, size), dtype=np.int64)
            args = _decode(spec, index, ident.signature)
            _evaluate_batch(ident, B, args, index, tally, result)
        result.tallies[ident.name] = tally
    return result
