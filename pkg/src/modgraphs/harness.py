"""Module families and the check-suite runner.

A family string is a comma-separated list of generators:

    cyclic:LO..HI      one cyclic module Z_n for each n in the range
    product:ab<=N      Z_a x Z_b over Z_lcm(a,b) for 2 <= a <= b, a*b <= N
    vector:P^K         K copies of Z_P over the field Z_P (P prime)
    zmod:MOD[/RING]    one explicit instance, e.g. zmod:Z2xZ4/Z8

`run_suite` evaluates a selection of checks over a family and returns a
deterministic report; per-result timings are measured but only included
in the JSON when explicitly requested, so default output is byte-stable.
"""
from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass, field
from math import lcm

from .algebra import (
    MAX_LATTICE_SIZE,
    MAX_MODULE_ORDER,
    DescriptorError,
    FiniteModule,
    Submodule,
    enumerate_submodules,
    parse_descriptor,
    prime_radical,
    second_socle,
)
from .checks import CHECKS, CHECKS_BY_ID, REPORT, STRICT, CheckResult, evaluate_check
from .graphs import IDEAL_KINDS, TILDE_KINDS, GraphKind, build_graph, graph_metrics

DEFAULT_FAMILY = "cyclic:2..60,product:ab<=64,vector:2^3,vector:3^3"


class Instance:
    """One module under test, with memoized lattice, graphs, and metrics."""

    def __init__(self, module: FiniteModule, *,
                 max_order: int = MAX_MODULE_ORDER,
                 max_lattice: int = MAX_LATTICE_SIZE):
        self.module = module
        self.ring = module.ring
        self.max_order = max_order
        self.max_lattice = max_lattice
        self._lattice = None
        self._ring_lattice = None
        self._graphs = {}
        self._metrics = {}

    @property
    def descriptor(self) -> str:
        base = self.module.descriptor
        if self.ring.modulus != lcm(*self.module.invariant_factors):
            return f"{base}/{self.ring.descriptor}"
        return base

    @property
    def lattice(self):
        if self._lattice is None:
            self._lattice = enumerate_submodules(
                self.module, max_order=self.max_order, max_lattice=self.max_lattice)
        return self._lattice

    @property
    def ring_lattice(self):
        if self._ring_lattice is None:
            if self.module == self.ring.as_module():
                self._ring_lattice = self.lattice
            else:
                self._ring_lattice = self.ring.lattice(
                    max_order=self.max_order, max_lattice=self.max_lattice)
        return self._ring_lattice

    @property
    def minimals(self):
        return self.lattice.minimals()

    @property
    def maximals(self):
        return self.lattice.maximals()

    @property
    def seconds(self):
        return self.lattice.seconds()

    @property
    def primes(self):
        return self.lattice.primes()

    @property
    def sec_socle(self) -> Submodule:
        return second_socle(self.lattice.top, self.lattice)

    @property
    def radical(self) -> Submodule:
        return prime_radical(self.module, self.lattice)

    @property
    def props(self):
        return self.lattice.properties()

    def ann_ideal(self, sub: Submodule) -> Submodule:
        residues = self.lattice.annihilator_elements(sub)
        return self.ring_lattice.find(frozenset((r,) for r in residues))

    def colon_of(self, sub: Submodule) -> Submodule:
        residues = self.lattice.colon_elements(sub)
        return self.ring_lattice.find(frozenset((r,) for r in residues))

    def graph(self, kind):
        kind = GraphKind(str(kind))
        if kind not in self._graphs:
            if kind in IDEAL_KINDS:
                g = build_graph(kind, self.ring.as_module(),
                                self.ring_lattice)
            elif kind in TILDE_KINDS:
                g = build_graph(kind, self.module, self.lattice,
                                ring_lattice=self.ring_lattice)
            else:
                g = build_graph(kind, self.module, self.lattice)
            self._graphs[kind] = g
        return self._graphs[kind]

    def metrics(self, kind):
        kind = GraphKind(str(kind))
        if kind not in self._metrics:
            self._metrics[kind] = graph_metrics(self.graph(kind))
        return self._metrics[kind]

    def __repr__(self):
        return f"Instance({self.descriptor})"


_CYCLIC_RE = re.compile(r"^cyclic:([0-9]+)\.\.([0-9]+)$")
_PRODUCT_RE = re.compile(r"^product:ab<=([0-9]+)$")
_VECTOR_RE = re.compile(r"^vector:([0-9]+)\^([0-9]+)$")
_ZMOD_RE = re.compile(r"^zmod:([A-Za-z0-9x]+)(?:/([A-Za-z0-9]+))?$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _expand_item(item: str):
    m = _CYCLIC_RE.match(item)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if lo < 2 or hi < lo:
            raise DescriptorError(f"bad cyclic range in {item!r}")
        for n in range(lo, hi + 1):
            yield parse_descriptor(f"Z{n}")
        return
    m = _PRODUCT_RE.match(item)
    if m:
        cap = int(m.group(1))
        a = 2
        while a * a <= cap:
            for b in range(a, cap // a + 1):
                yield parse_descriptor(f"Z{a}xZ{b}")
            a += 1
        return
    m = _VECTOR_RE.match(item)
    if m:
        p, k = int(m.group(1)), int(m.group(2))
        if not _is_prime(p):
            raise DescriptorError(f"vector family needs a prime base, got {p}")
        if k < 1:
            raise DescriptorError(f"vector family needs a positive power in {item!r}")
        yield parse_descriptor("x".join([f"Z{p}"] * k), f"Z{p}")
        return
    m = _ZMOD_RE.match(item)
    if m:
        yield parse_descriptor(m.group(1), m.group(2))
        return
    raise DescriptorError(f"unrecognized family item {item!r}")


def generate_family(text: str, *, max_order: int = MAX_MODULE_ORDER,
                    max_lattice: int = MAX_LATTICE_SIZE) -> list[Instance]:
    """Expand a family string into instances, first occurrence wins."""
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise DescriptorError("empty family description")
    out: list[Instance] = []
    seen: set[str] = set()
    for item in items:
        for _ring, module in _expand_item(item):
            inst = Instance(module, max_order=max_order, max_lattice=max_lattice)
            if inst.descriptor not in seen:
                seen.add(inst.descriptor)
                out.append(inst)
    if not out:
        raise DescriptorError(f"family {text!r} matches no modules")
    return out


def select_checks(selection: str):
    """Resolve 'strict', 'all', or a comma list of ids, in registry order."""
    if selection == "strict":
        return [c for c in CHECKS if c.mode == STRICT]
    if selection == "all":
        return list(CHECKS)
    ids = [s.strip() for s in selection.split(",") if s.strip()]
    if not ids:
        raise DescriptorError("empty check selection")
    unknown = [i for i in ids if i not in CHECKS_BY_ID]
    if unknown:
        raise DescriptorError(f"unknown check ids: {', '.join(unknown)}")
    wanted = set(ids)
    return [c for c in CHECKS if c.id in wanted]


@dataclass
class CheckReport:
    suite: str
    family: str
    results: list[CheckResult] = field(default_factory=list)
    include_timing: bool = False

    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "findings": 0, "not_applicable": 0}
        for r in self.results:
            if r.verdict == "finding":
                counts["findings"] += 1
            else:
                counts[r.verdict] += 1
        return counts

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.verdict == "fail"]

    def findings(self) -> list[CheckResult]:
        return [r for r in self.results if r.verdict == "finding"]

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "family": self.family,
            "results": [r.as_dict(self.include_timing) for r in self.results],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"


def run_suite(family: str = DEFAULT_FAMILY, checks: str = "strict", *,
              include_timing: bool = False,
              max_order: int = MAX_MODULE_ORDER,
              max_lattice: int = MAX_LATTICE_SIZE) -> CheckReport:
    """Evaluate the selected checks over every instance of the family."""
    selected = select_checks(checks)
    instances = generate_family(family, max_order=max_order, max_lattice=max_lattice)
    report = CheckReport(suite=checks, family=family, include_timing=include_timing)
    for inst in instances:
        for check in selected:
            start = time.perf_counter()
            result = evaluate_check(check, inst)
            result.millis = round((time.perf_counter() - start) * 1000, 3)
            report.results.append(result)
    return report
