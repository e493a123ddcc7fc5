"""Rings Z_n, finite modules over them, and their submodule lattices.

A module here is a direct sum of cyclic groups Z_{d_1} x ... x Z_{d_k}
acted on by Z_n, where every d_i divides n.  Elements are residue tuples,
the action is coordinatewise multiplication.  Because the action factors
through repeated addition, every additive subgroup is a submodule, which
keeps enumeration exact and cheap at the orders we care about.

All predicates (prime, second, large, small, ...) are decided by direct
exhaustion over ring and module elements, so the results double as
machine-checked evidence rather than trusting structure theory.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd, lcm, prod
from itertools import product as _cartesian

Element = tuple[int, ...]

MAX_MODULE_ORDER = 4096
MAX_LATTICE_SIZE = 20000


class DescriptorError(ValueError):
    """Malformed module, ring, or family descriptor."""


class SizeGuardError(RuntimeError):
    """A computation would exceed the configured size guards."""


def divisors(n: int) -> list[int]:
    """All positive divisors of n in increasing order."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


_ATOM_RE = re.compile(r"^Z([0-9]+)$")


def _parse_atoms(text: str) -> tuple[int, ...]:
    parts = text.split("x")
    out = []
    for part in parts:
        m = _ATOM_RE.match(part)
        if not m:
            raise DescriptorError(f"bad descriptor atom {part!r} in {text!r}")
        value = int(m.group(1))
        if value < 2:
            raise DescriptorError(f"modulus must be at least 2, got {value} in {text!r}")
        out.append(value)
    return tuple(out)


class Ring:
    """The ring of integers modulo n.  Ideals are the subgroups dZ_n."""

    __slots__ = ("modulus", "_module", "_lattice")

    def __init__(self, modulus: int):
        if not isinstance(modulus, int) or modulus < 2:
            raise DescriptorError(f"ring modulus must be an integer >= 2, got {modulus!r}")
        self.modulus = modulus
        self._module = None
        self._lattice = None

    def elements(self) -> range:
        return range(self.modulus)

    def divisors(self) -> list[int]:
        return divisors(self.modulus)

    def as_module(self) -> "FiniteModule":
        """This ring viewed as a module over itself."""
        if self._module is None:
            self._module = FiniteModule(self, (self.modulus,))
        return self._module

    def ideal(self, d: int) -> "Submodule":
        """The ideal generated by d, i.e. gcd(d, n)Z_n."""
        return span(self.as_module(), [(d % self.modulus,)])

    def lattice(self, *, max_order: int = MAX_MODULE_ORDER,
                max_lattice: int = MAX_LATTICE_SIZE) -> "SubmoduleLattice":
        """The ideal lattice, cached after the first call."""
        if self._lattice is None:
            self._lattice = enumerate_submodules(
                self.as_module(), max_order=max_order, max_lattice=max_lattice)
        return self._lattice

    @property
    def descriptor(self) -> str:
        return f"Z{self.modulus}"

    def __eq__(self, other):
        return isinstance(other, Ring) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("Ring", self.modulus))

    def __repr__(self):
        return f"Ring(Z{self.modulus})"


class FiniteModule:
    """A finite Z_n-module given as Z_{d_1} x ... x Z_{d_k}, each d_i | n."""

    __slots__ = ("ring", "invariant_factors", "_elements", "_scaled")

    def __init__(self, ring: Ring, invariant_factors: tuple[int, ...]):
        factors = tuple(invariant_factors)
        if not factors:
            raise DescriptorError("module needs at least one invariant factor")
        for d in factors:
            if not isinstance(d, int) or d < 2:
                raise DescriptorError(f"invariant factor must be an integer >= 2, got {d!r}")
            if ring.modulus % d != 0:
                raise DescriptorError(
                    f"invariant factor {d} does not divide the ring modulus {ring.modulus}")
        self.ring = ring
        self.invariant_factors = factors
        self._elements = None
        self._scaled = {}

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return lcm(*self.invariant_factors)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def zero(self) -> Element:
        return (0,) * len(self.invariant_factors)

    def elements(self) -> tuple[Element, ...]:
        """All elements in lexicographic order."""
        if self._elements is None:
            self._elements = tuple(_cartesian(*(range(d) for d in self.invariant_factors)))
        return self._elements

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.invariant_factors))

    def scale(self, r: int, x: Element) -> Element:
        return tuple((r * a) % d for a, d in zip(x, self.invariant_factors))

    def contains(self, x) -> bool:
        return (isinstance(x, tuple) and len(x) == len(self.invariant_factors)
                and all(isinstance(a, int) and 0 <= a < d
                        for a, d in zip(x, self.invariant_factors)))

    def unit_generators(self) -> tuple[Element, ...]:
        """The standard generating set: one unit vector per component."""
        k = len(self.invariant_factors)
        return tuple(tuple(int(i == j) for j in range(k)) for i in range(k))

    def scaled_set(self, d: int) -> frozenset:
        """The image set dM, cached per scalar."""
        s = self._scaled.get(d)
        if s is None:
            s = frozenset(self.scale(d, x) for x in self.elements())
            self._scaled[d] = s
        return s

    @property
    def descriptor(self) -> str:
        return "x".join(f"Z{d}" for d in self.invariant_factors)

    def __eq__(self, other):
        return (isinstance(other, FiniteModule) and other.ring == self.ring
                and other.invariant_factors == self.invariant_factors)

    def __hash__(self):
        return hash(("FiniteModule", self.ring.modulus, self.invariant_factors))

    def __repr__(self):
        return f"FiniteModule({self.descriptor} over Z{self.ring.modulus})"


def parse_descriptor(module_text: str, ring_text: str | None = None) -> tuple[Ring, FiniteModule]:
    """Parse 'Z12' or 'Z2xZ4' into a (ring, module) pair.

    The ring defaults to Z_n for n the least common multiple of the
    invariant factors; an explicit ring must be a common multiple.
    """
    factors = _parse_atoms(module_text.strip())
    if ring_text is None:
        modulus = lcm(*factors)
    else:
        ring_atoms = _parse_atoms(ring_text.strip())
        if len(ring_atoms) != 1:
            raise DescriptorError(f"ring descriptor must be a single Z<n>, got {ring_text!r}")
        modulus = ring_atoms[0]
    ring = Ring(modulus)
    return ring, FiniteModule(ring, factors)


class Submodule:
    """A submodule, identified by its full element set.

    Equality and ordering use the sorted element list, so every
    collection of submodules has one canonical order.
    """

    __slots__ = ("module", "elements", "generators", "_key", "_labels")

    def __init__(self, module: FiniteModule, elements: frozenset, generators: tuple):
        self.module = module
        self.elements = elements
        self.generators = generators
        self._key = None
        self._labels = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_zero(self) -> bool:
        return len(self.elements) == 1

    @property
    def is_full(self) -> bool:
        return len(self.elements) == self.module.order

    @property
    def is_proper(self) -> bool:
        return not self.is_full

    def sort_key(self) -> tuple:
        if self._key is None:
            self._key = tuple(sorted(self.elements))
        return self._key

    def label(self, symbol: str = "M") -> str:
        """Short name: 0, M, dM when the set equals d*M, else generators."""
        got = self._labels.get(symbol)
        if got is not None:
            return got
        if self.is_zero:
            text = "0"
        elif self.is_full:
            text = symbol
        else:
            text = ""
            for d in divisors(self.module.exponent):
                if d >= 2 and self.module.scaled_set(d) == self.elements:
                    text = f"{d}{symbol}"
                    break
            if not text:
                text = "<" + ",".join(_format_element(g) for g in self.generators) + ">"
        self._labels[symbol] = text
        return text

    def __eq__(self, other):
        return (isinstance(other, Submodule) and other.module == self.module
                and other.elements == self.elements)

    def __hash__(self):
        return hash(self.elements)

    def __le__(self, other):
        _require_same_module(self, other)
        return self.elements <= other.elements

    def __lt__(self, other):
        _require_same_module(self, other)
        return self.elements < other.elements and self.elements != other.elements

    def __contains__(self, x):
        return x in self.elements

    def __repr__(self):
        return f"Submodule({self.label()} of {self.module.descriptor})"


def _format_element(x: Element) -> str:
    if len(x) == 1:
        return str(x[0])
    return "(" + ",".join(str(a) for a in x) + ")"


def _require_same_module(a: Submodule, b: Submodule) -> None:
    if a.module != b.module:
        raise ValueError("submodules live in different modules")


def _grow(module: FiniteModule, closed: set, g: Element) -> set:
    # Extend the subgroup `closed` by the cosets closed + k*g.  Since the
    # group is abelian the union of those cosets is already a subgroup.
    if g in closed:
        return closed
    base = tuple(closed)
    add = module.add
    step = g
    while step not in closed:
        closed.update(add(x, step) for x in base)
        step = add(step, g)
    return closed


def _closure(module: FiniteModule, gens) -> frozenset:
    closed = {module.zero}
    for g in sorted(set(gens)):
        _grow(module, closed, g)
    return frozenset(closed)


def _greedy_generators(module: FiniteModule, elements: frozenset) -> list[Element]:
    gens: list[Element] = []
    closed: set = {module.zero}
    for x in sorted(elements):
        if x not in closed:
            gens.append(x)
            _grow(module, closed, x)
    return gens


def _canonical_generators(module: FiniteModule, elements: frozenset) -> tuple[Element, ...]:
    # Greedy pick in element order, then drop anything redundant so the
    # recorded generating set is minimal by construction.
    gens = _greedy_generators(module, elements)
    pruned = list(gens)
    for g in list(gens):
        if len(pruned) == 1:
            break
        trial = [h for h in pruned if h != g]
        if _closure(module, trial) == elements:
            pruned = trial
    return tuple(pruned)


def span(module: FiniteModule, gens) -> Submodule:
    """Smallest submodule containing the given elements."""
    gens = list(gens)
    for g in gens:
        if not module.contains(g):
            raise ValueError(f"element {g!r} is not in {module.descriptor}")
    elements = _closure(module, gens)
    return Submodule(module, elements, _canonical_generators(module, elements))


def submodule_sum(n: Submodule, k: Submodule) -> Submodule:
    """N + K, the join in the submodule lattice."""
    _require_same_module(n, k)
    closed = set(n.elements)
    for g in k.generators:
        _grow(n.module, closed, g)
    elements = frozenset(closed)
    return Submodule(n.module, elements, _canonical_generators(n.module, elements))


def submodule_intersection(n: Submodule, k: Submodule) -> Submodule:
    """N intersect K, the meet in the submodule lattice."""
    _require_same_module(n, k)
    elements = n.elements & k.elements
    return Submodule(n.module, elements, _canonical_generators(n.module, elements))


def _colon_elements(n: Submodule, module: FiniteModule) -> frozenset:
    # r*M <= N holds as soon as r sends each generator of M into N,
    # because N is closed under addition and the action.
    scale = module.scale
    gens = module.unit_generators()
    members = n.elements
    return frozenset(r for r in module.ring.elements()
                     if all(scale(r, g) in members for g in gens))


def _annihilator_elements(n: Submodule) -> frozenset:
    module = n.module
    scale = module.scale
    zero = module.zero
    gens = n.generators
    return frozenset(r for r in module.ring.elements()
                     if all(scale(r, g) == zero for g in gens))


def _ideal_of(ring: Ring, residues: frozenset) -> Submodule:
    d = ring.modulus
    for r in residues:
        d = gcd(d, r)
    return ring.ideal(d)


def ideal_divisor(ideal: Submodule) -> int:
    """The divisor d with ideal = dZ_n; the zero ideal reports n."""
    n = ideal.module.ring.modulus
    d = n
    for (r,) in ideal.elements:
        d = gcd(d, r)
    return d if d > 0 else n


def colon_ideal(n: Submodule, module: FiniteModule) -> Submodule:
    """(N :_R M) = {r : r*M <= N} as an ideal of the ring."""
    if n.module != module:
        raise ValueError("submodule does not belong to the given module")
    return _ideal_of(module.ring, _colon_elements(n, module))


def annihilator(n: Submodule) -> Submodule:
    """Ann_R(N) = {r : r*N = 0} as an ideal of the ring."""
    return _ideal_of(n.module.ring, _annihilator_elements(n))


@dataclass(frozen=True)
class SubmoduleFlags:
    is_prime: bool
    is_second: bool
    is_minimal: bool
    is_maximal: bool
    is_large: bool
    is_small: bool


@dataclass(frozen=True)
class ModuleProperties:
    coreduced: bool
    reduced: bool
    multiplication: bool
    comultiplication: bool
    dac: bool
    strong_comultiplication: bool
    faithful: bool
    hollow: bool
    uniform: bool


def enumerate_submodules(module: FiniteModule, *,
                         max_order: int = MAX_MODULE_ORDER,
                         max_lattice: int = MAX_LATTICE_SIZE) -> "SubmoduleLattice":
    """Every submodule of M: cyclic spans closed under pairwise join.

    Cyclic spans are collected once per cyclic submodule (all other
    generators of the same walk are skipped), then joins are added until
    nothing new appears.  Sums of cyclic submodules exhaust the lattice.
    """
    if module.order > max_order:
        raise SizeGuardError(
            f"module order {module.order} exceeds the guard {max_order}")
    zero = module.zero
    add = module.add
    subs: set[frozenset] = {frozenset({zero})}
    seen = {zero}
    for x in module.elements():
        if x in seen:
            continue
        multiples = []
        cur = x
        while cur != zero:
            multiples.append(cur)
            cur = add(cur, x)
        m = len(multiples) + 1
        subs.add(frozenset([zero, *multiples]))
        for k in range(1, m):
            if gcd(k, m) == 1:
                seen.add(multiples[k - 1])

    gens_of = {fs: _greedy_generators(module, fs) for fs in subs}
    queue = list(subs)
    while queue:
        a = queue.pop()
        for b in list(subs):
            if a <= b or b <= a:
                continue
            joined = set(a)
            for g in gens_of[b]:
                _grow(module, joined, g)
            fs = frozenset(joined)
            if fs not in subs:
                subs.add(fs)
                if len(subs) > max_lattice:
                    raise SizeGuardError(
                        f"lattice size exceeds the guard {max_lattice}")
                gens_of[fs] = _greedy_generators(module, fs)
                queue.append(fs)

    ordered = sorted(subs, key=sorted)
    members = tuple(Submodule(module, fs, _canonical_generators(module, fs))
                    for fs in ordered)
    return SubmoduleLattice(module, members)


class SubmoduleLattice:
    """The full submodule lattice with classification flags.

    Flags are computed lazily per category and cached, each one by
    exhausting its definition over ring and module elements.
    """

    def __init__(self, module: FiniteModule, members: tuple[Submodule, ...]):
        self.module = module
        self.all = members
        self._index = {s.elements: i for i, s in enumerate(members)}
        self._zero_fs = frozenset({module.zero})
        self._second = None
        self._prime = None
        self._minimal = None
        self._maximal = None
        self._large = None
        self._small = None
        self._join: dict[tuple[int, int], int] = {}
        self._meet: dict[tuple[int, int], int] = {}
        self._colon: dict[int, frozenset] = {}
        self._ann: dict[int, frozenset] = {}
        self._props = None

    def __len__(self):
        return len(self.all)

    def __iter__(self):
        return iter(self.all)

    @property
    def zero(self) -> Submodule:
        return self.all[self._index[self._zero_fs]]

    @property
    def top(self) -> Submodule:
        for s in self.all:
            if s.is_full:
                return s
        raise AssertionError("lattice is missing the full module")

    def proper_nonzero(self) -> tuple[Submodule, ...]:
        return tuple(s for s in self.all if not s.is_zero and not s.is_full)

    def index_of(self, sub: Submodule) -> int:
        try:
            return self._index[sub.elements]
        except KeyError:
            raise ValueError(f"{sub!r} is not in this lattice") from None

    def find(self, elements: frozenset) -> Submodule:
        return self.all[self._index[frozenset(elements)]]

    def join(self, a: Submodule, b: Submodule) -> Submodule:
        i, j = sorted((self.index_of(a), self.index_of(b)))
        got = self._join.get((i, j))
        if got is None:
            got = self._index[submodule_sum(self.all[i], self.all[j]).elements]
            self._join[(i, j)] = got
        return self.all[got]

    def meet(self, a: Submodule, b: Submodule) -> Submodule:
        i, j = sorted((self.index_of(a), self.index_of(b)))
        got = self._meet.get((i, j))
        if got is None:
            got = self._index[self.all[i].elements & self.all[j].elements]
            self._meet[(i, j)] = got
        return self.all[got]

    # -- classification flags ------------------------------------------

    def colon_elements(self, sub: Submodule) -> frozenset:
        i = self.index_of(sub)
        got = self._colon.get(i)
        if got is None:
            got = _colon_elements(sub, self.module)
            self._colon[i] = got
        return got

    def annihilator_elements(self, sub: Submodule) -> frozenset:
        i = self.index_of(sub)
        got = self._ann.get(i)
        if got is None:
            got = _annihilator_elements(sub)
            self._ann[i] = got
        return got

    def _second_flags(self) -> list[bool]:
        if self._second is None:
            out = []
            scale = self.module.scale
            ring = self.module.ring.elements()
            for s in self.all:
                if s.is_zero:
                    out.append(False)
                    continue
                ok = True
                for r in ring:
                    image = frozenset(scale(r, x) for x in s.elements)
                    if image != self._zero_fs and image != s.elements:
                        ok = False
                        break
                out.append(ok)
            self._second = out
        return self._second

    def _prime_flags(self) -> list[bool]:
        if self._prime is None:
            out = []
            module = self.module
            scale = module.scale
            for s in self.all:
                if s.is_full:
                    out.append(False)
                    continue
                colon = self.colon_elements(s)
                members = s.elements
                # whether r*m lands in P depends on m only through m + P,
                # so one representative per nonzero coset suffices
                reps = []
                covered = set(members)
                for m in module.elements():
                    if m not in covered:
                        reps.append(m)
                        covered.update(module.add(m, p) for p in members)
                ok = True
                for r in module.ring.elements():
                    if r in colon:
                        continue
                    if any(scale(r, m) in members for m in reps):
                        ok = False
                        break
                out.append(ok)
            self._prime = out
        return self._prime

    def _minimal_flags(self) -> list[bool]:
        if self._minimal is None:
            candidates = [(i, s) for i, s in enumerate(self.all)
                          if not s.is_zero and not s.is_full]
            out = [False] * len(self.all)
            for i, s in candidates:
                if not any(t.elements < s.elements for j, t in candidates if j != i):
                    out[i] = True
            self._minimal = out
        return self._minimal

    def _maximal_flags(self) -> list[bool]:
        if self._maximal is None:
            candidates = [(i, s) for i, s in enumerate(self.all)
                          if not s.is_zero and not s.is_full]
            out = [False] * len(self.all)
            for i, s in candidates:
                if not any(s.elements < t.elements for j, t in candidates if j != i):
                    out[i] = True
            self._maximal = out
        return self._maximal

    def _large_flags(self) -> list[bool]:
        if self._large is None:
            nonzero = [s for s in self.all if not s.is_zero]
            out = []
            for s in self.all:
                out.append(not s.is_zero and all(
                    len(s.elements & t.elements) > 1 for t in nonzero))
            self._large = out
        return self._large

    def _small_flags(self) -> list[bool]:
        if self._small is None:
            proper = [s for s in self.all if not s.is_full]
            top = self.top
            out = []
            for s in self.all:
                if s.is_full:
                    out.append(False)
                    continue
                out.append(all(self.join(s, t) != top for t in proper))
            self._small = out
        return self._small

    def is_second(self, sub: Submodule) -> bool:
        return self._second_flags()[self.index_of(sub)]

    def is_prime(self, sub: Submodule) -> bool:
        return self._prime_flags()[self.index_of(sub)]

    def is_minimal(self, sub: Submodule) -> bool:
        return self._minimal_flags()[self.index_of(sub)]

    def is_maximal(self, sub: Submodule) -> bool:
        return self._maximal_flags()[self.index_of(sub)]

    def is_large(self, sub: Submodule) -> bool:
        return self._large_flags()[self.index_of(sub)]

    def is_small(self, sub: Submodule) -> bool:
        return self._small_flags()[self.index_of(sub)]

    def flags(self, sub: Submodule) -> SubmoduleFlags:
        i = self.index_of(sub)
        return SubmoduleFlags(
            is_prime=self._prime_flags()[i],
            is_second=self._second_flags()[i],
            is_minimal=self._minimal_flags()[i],
            is_maximal=self._maximal_flags()[i],
            is_large=self._large_flags()[i],
            is_small=self._small_flags()[i],
        )

    def seconds(self) -> tuple[Submodule, ...]:
        flags = self._second_flags()
        return tuple(s for i, s in enumerate(self.all) if flags[i])

    def primes(self) -> tuple[Submodule, ...]:
        flags = self._prime_flags()
        return tuple(s for i, s in enumerate(self.all) if flags[i])

    def minimals(self) -> tuple[Submodule, ...]:
        flags = self._minimal_flags()
        return tuple(s for i, s in enumerate(self.all) if flags[i])

    def maximals(self) -> tuple[Submodule, ...]:
        flags = self._maximal_flags()
        return tuple(s for i, s in enumerate(self.all) if flags[i])

    # -- module-level properties ---------------------------------------

    def properties(self) -> ModuleProperties:
        if self._props is None:
            self._props = self._compute_properties()
        return self._props

    def _compute_properties(self) -> ModuleProperties:
        module = self.module
        ring = module.ring
        scale = module.scale
        zero = module.zero
        elements = module.elements()

        coreduced = all(module.scaled_set(r) == module.scaled_set((r * r) % ring.modulus)
                        for r in ring.elements())

        # reduced: rM meets the elements killed by r only in zero, every r
        reduced = True
        for r in ring.elements():
            for x in module.scaled_set(r):
                if x != zero and scale(r, x) == zero:
                    reduced = False
                    break
            if not reduced:
                break

        gens = module.unit_generators()
        multiplication = True
        for s in self.all:
            d = ring.modulus
            for r in self.colon_elements(s):
                d = gcd(d, r)
            # the colon ideal is dZ_n, so its product with M is spanned by d*gens
            image = _closure(module, [scale(d, g) for g in gens])
            if image != s.elements:
                multiplication = False
                break

        comultiplication = True
        for s in self.all:
            a = ring.modulus
            for r in self.annihilator_elements(s):
                a = gcd(a, r)
            killed = frozenset(m for m in elements if scale(a, m) == zero)
            if killed != s.elements:
                comultiplication = False
                break

        dac = True
        for ideal in ring.lattice().all:
            d = ideal_divisor(ideal)
            killed = frozenset(m for m in elements if scale(d, m) == zero)
            sub = self.find(killed)
            ann = self.annihilator_elements(sub)
            if ann != frozenset(r for (r,) in ideal.elements):
                dac = False
                break

        faithful = self.annihilator_elements(self.top) == frozenset({0})
        hollow = all(self.is_small(s) for s in self.all if not s.is_full)
        uniform = all(self.is_large(s) for s in self.all if not s.is_zero)

        return ModuleProperties(
            coreduced=coreduced,
            reduced=reduced,
            multiplication=multiplication,
            comultiplication=comultiplication,
            dac=dac,
            strong_comultiplication=comultiplication and dac,
            faithful=faithful,
            hollow=hollow,
            uniform=uniform,
        )


def classify_submodule(n: Submodule, lattice: SubmoduleLattice) -> SubmoduleFlags:
    """All classification flags for one submodule."""
    return lattice.flags(n)


def second_socle(n: Submodule, lattice: SubmoduleLattice) -> Submodule:
    """Sum of all second submodules contained in N; zero if none."""
    out = lattice.zero
    for s in lattice.seconds():
        if s.elements <= n.elements:
            out = lattice.join(out, s)
    return out


def prime_radical(module: FiniteModule, lattice: SubmoduleLattice) -> Submodule:
    """Intersection of all prime submodules; the whole module if none."""
    primes = lattice.primes()
    if not primes:
        return lattice.top
    out = lattice.top
    for p in primes:
        out = lattice.meet(out, p)
    return out


def module_properties(module: FiniteModule, lattice: SubmoduleLattice) -> ModuleProperties:
    """Module-level property record (multiplication, coreduced, ...)."""
    if lattice.module != module:
        raise ValueError("lattice does not belong to the given module")
    return lattice.properties()
