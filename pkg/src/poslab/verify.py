"""Batch verification suites behind ``poslab verify``.

Each suite builds a corpus in a fixed order, evaluates every instance
(optionally in worker processes) and merges the results back in corpus
order, so reports are reproducible apart from the wall-time field.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import permutations
from typing import Iterable, Optional

from . import __version__
from .characters import class_size, character, dimension, kronecker
from .combinatorics import (Partition, count_ssyt, enumerate_standard, lr_coefficient,
                            partitions_of)
from .hive import HiveBoundary, hive_polytope, lr_nonvanishing, lr_via_hive
from .polyhedra import RationalPolytope, count_lattice_points, dilate
from .repmodules import specht_span_dimension, weyl_span_dimension
from .satip import decide_saturated_ip

SUITES = ("lr-oracle", "saturation", "satip", "characters", "modules")

CONVENTIONS = {
    "hive": "h(i,0)=partial sums of alpha; h(n-j,j)=|alpha|+partial sums of beta; "
            "h(0,j)=partial sums of gamma; obtuse pair >= acute pair on every unit rhombus",
    "lr_stretch": "all three partitions stretched",
    "kronecker_stretch": "all three partitions stretched (library convention)",
    "plethysm_stretch": "lambda and pi stretched, mu fixed",
    "quasi_polynomial_residues": "k ≡ i (mod period), i in 1..period",
}


@dataclass
class VerificationReport:
    suite: str
    instances: int = 0
    agreements: int = 0
    disagreements: list = field(default_factory=list)
    wall_time: float = 0.0
    version: str = __version__
    conventions: dict = field(default_factory=lambda: dict(CONVENTIONS))

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        return asdict(self)

    def summary(self) -> str:
        status = "OK" if self.ok else "DISAGREEMENTS"
        return (f"{self.suite}: {self.instances} instances, {self.agreements} agree, "
                f"{len(self.disagreements)} disagree [{status}] ({self.wall_time:.2f}s)")


def lr_corpus(max_size: int, max_length: int = 3, min_size: int = 1):
    """Triples ``(alpha, beta, gamma)`` with ``|gamma| = |alpha| + |beta|`` in a fixed order."""
    for N in range(min_size, max_size + 1):
        for a_size in range(N + 1):
            for a in partitions_of(a_size, max_length):
                for b in partitions_of(N - a_size, max_length):
                    for g in partitions_of(N, max_length):
                        yield (tuple(a), tuple(b), tuple(g))


def read_corpus(path: str) -> list:
    """One instance per line: ``[[alpha],[beta],[gamma]]`` or an object with those keys."""
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            data = json.loads(line)
            if isinstance(data, dict):
                data = [data["alpha"], data["beta"], data["gamma"]]
            out.append(tuple(tuple(Partition(p)) for p in data))
    return out


# Instance checkers: top level so worker processes can import them.
# Each returns None on agreement or a dict describing the disagreement.

def _check_lr_oracle(inst):
    a, b, g = inst
    t, h = lr_coefficient(a, b, g), lr_via_hive(a, b, g)
    return None if t == h else {"tableau": t, "hive": h}


def _check_saturation(inst):
    a, b, g = inst
    c, lp = lr_coefficient(a, b, g), lr_nonvanishing(a, b, g)
    return None if lp == (c > 0) else {"lr_coefficient": c, "lp_nonvanishing": lp}


def _check_satip(inst):
    a, b, g = inst
    P = hive_polytope(HiveBoundary.of(a, b, g))
    count = count_lattice_points(P)
    decided = decide_saturated_ip(P)
    return None if decided == (count > 0) else {"count": count, "decided": decided}


def _check_satip_polytope(data):
    P = RationalPolytope.from_json(data["polytope"])
    decided = decide_saturated_ip(P)
    return None if decided == data["expected"] else {"decided": decided}


def _check_character(inst):
    kind = inst[0]
    if kind == "orthogonality":
        _, lam, rho = inst
        lam, rho = Partition(lam), Partition(rho)
        n = lam.size()
        total = sum(class_size(mu) * character(lam, mu) * character(rho, mu)
                    for mu in partitions_of(n))
        expected = math.factorial(n) * (lam == rho)
        return None if total == expected else {"sum": total, "expected": expected}
    if kind == "kronecker-symmetry":
        _, a, b, g = inst
        values = {kronecker(*p) for p in permutations((a, b, g))}
        return None if len(values) == 1 else {"values": sorted(values)}
    if kind == "kronecker-dimension":
        _, a, b = inst
        n = sum(a)
        lhs = sum(kronecker(a, b, g) * dimension(g) for g in partitions_of(n))
        rhs = dimension(a) * dimension(b)
        return None if lhs == rhs else {"lhs": lhs, "rhs": rhs}
    raise ValueError(kind)


def _check_module(inst):
    kind = inst[0]
    if kind == "weyl":
        _, lam, n = inst
        got, want = weyl_span_dimension(lam, n), count_ssyt(Partition(lam), n)
    else:
        _, lam = inst
        got, want = specht_span_dimension(lam), len(enumerate_standard(lam))
    return None if got == want else {"span_rank": got, "expected": want}


def _fractional_points(max_size: int):
    """``{1/2}``-type points and their dilations, with known integer-point answers."""
    for den in range(2, max_size + 1):
        for num in range(1, den):
            if math.gcd(num, den) != 1:
                continue
            P = RationalPolytope(1, (([1], f"{num}/{den}"), ([-1], f"-{num}/{den}")))
            yield {"polytope": P.to_json(), "expected": False}
            yield {"polytope": dilate(P, den).to_json(), "expected": True}


def _suite_instances(suite: str, max_size: int, corpus: Optional[list]):
    if suite in ("lr-oracle", "saturation", "satip"):
        insts = list(corpus) if corpus is not None else list(lr_corpus(max_size))
        checker = {"lr-oracle": _check_lr_oracle, "saturation": _check_saturation,
                   "satip": _check_satip}[suite]
        pairs = [(checker, i) for i in insts]
        if suite == "satip":
            pairs += [(_check_satip_polytope, p) for p in _fractional_points(max_size)]
        return pairs
    if suite == "characters":
        pairs = []
        for n in range(1, min(max_size, 7) + 1):
            parts = [tuple(p) for p in partitions_of(n)]
            pairs += [(_check_character, ("orthogonality", l, r)) for l in parts for r in parts]
        for n in range(1, min(max_size, 6) + 1):
            parts = [tuple(p) for p in partitions_of(n)]
            pairs += [(_check_character, ("kronecker-symmetry", a, b, g))
                      for a in parts for b in parts for g in parts]
            pairs += [(_check_character, ("kronecker-dimension", a, b))
                      for a in parts for b in parts]
        return pairs
    if suite == "modules":
        pairs = []
        for s in range(1, min(max_size, 5) + 1):
            for lam in partitions_of(s):
                pairs += [(_check_module, ("weyl", tuple(lam), n)) for n in range(1, 4)]
        for s in range(1, min(max_size, 6) + 1):
            pairs += [(_check_module, ("specht", tuple(lam))) for lam in partitions_of(s)]
        return pairs
    raise ValueError(f"unknown suite {suite!r}")


def _run_pair(pair):
    checker, inst = pair
    return checker(inst)


def run_suite(suite: str, max_size: int = 8, jobs: int = 1,
              corpus: Optional[Iterable] = None) -> VerificationReport:
    start = time.perf_counter()
    pairs = _suite_instances(suite, max_size, None if corpus is None else list(corpus))
    if jobs > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_pair, pairs, chunksize=max(1, len(pairs) // (4 * jobs))))
    else:
        results = [_run_pair(p) for p in pairs]
    report = VerificationReport(suite)
    for (_, inst), res in zip(pairs, results):
        report.instances += 1
        if res is None:
            report.agreements += 1
        else:
            report.disagreements.append({"input": _echo(inst), **res})
    report.wall_time = round(time.perf_counter() - start, 3)
    return report


def _echo(inst):
    if isinstance(inst, dict):
        return inst
    return [list(x) if isinstance(x, tuple) else x for x in inst]


def run_all(max_size: int = 8, jobs: int = 1) -> list[VerificationReport]:
    return [run_suite(s, max_size, jobs) for s in SUITES]
