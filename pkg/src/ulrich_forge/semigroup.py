"""Affine semigroup models of monomial subrings R of k[x1..xd]: membership
with certificates, gap sets, order filtration, Hilbert-Samuel function,
multiplicity, minimal generator counts, and the single face localization the
shipped examples need.

A point v of N^d stands for the monomial with exponent vector v; the semigroup
is the set of monomial exponents lying in R.  The gap set is N^d minus the
semigroup; a finite gap set certifies that S/R has finite length.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .patterns import InconclusiveError, stabilized_difference


class _NotFinite:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NOT_FINITE_WITHIN_BOUND"


NOT_FINITE_WITHIN_BOUND = _NotFinite()


class GapsNotFinite(ValueError):
    pass


@dataclass(frozen=True)
class AffineSemigroup:
    dim: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gens = []
        for g in self.generators:
            g = tuple(g)
            if len(g) != self.dim:
                raise ValueError(f"generator {g} has wrong dimension")
            if any(e < 0 for e in g):
                raise ValueError(f"generator {g} has a negative exponent")
            if all(e == 0 for e in g):
                raise ValueError("zero generator not allowed")
            gens.append(g)
        object.__setattr__(self, "generators", tuple(sorted(set(gens))))
        if not self.generators:
            raise ValueError("at least one generator required")

    @property
    def max_generator_degree(self) -> int:
        return max(sum(g) for g in self.generators)

    def __repr__(self):
        gens = ",".join(str(g) for g in self.generators)
        return f"AffineSemigroup(dim={self.dim}, {{{gens}}})"


FULL_PLANE = AffineSemigroup(2, ((1, 0), (0, 1)))


@dataclass(frozen=True)
class MembershipWitness:
    member: bool
    decomposition: tuple[tuple[int, ...], ...] | None


def _points_of_degree(s: int, dim: int):
    if dim == 1:
        yield (s,)
        return
    for first in range(s + 1):
        for rest in _points_of_degree(s - first, dim - 1):
            yield (first,) + rest


def _round_up(bound: int, step: int = 8) -> int:
    return ((bound + step - 1) // step) * step


@lru_cache(maxsize=None)
def _member_set(G: AffineSemigroup, bound: int) -> frozenset:
    """All semigroup points of total degree <= bound (degree-ascending DP)."""
    members = {(0,) * G.dim}
    for s in range(1, bound + 1):
        for v in _points_of_degree(s, G.dim):
            for g in G.generators:
                if all(a >= b for a, b in zip(v, g)):
                    if tuple(a - b for a, b in zip(v, g)) in members:
                        members.add(v)
                        break
    return frozenset(members)


def sg_member(G: AffineSemigroup, v) -> MembershipWitness:
    """Decide membership, exhibiting a generator decomposition when true.

    Decompositions have at most deg(v) parts since every generator is nonzero,
    so the bounded search is exhaustive.
    """
    v = tuple(v)
    if len(v) != G.dim:
        raise ValueError(f"point {v} has wrong dimension")
    if any(e < 0 for e in v):
        return MembershipWitness(False, None)
    deg = sum(v)
    members = _member_set(G, _round_up(deg))
    if v not in members:
        return MembershipWitness(False, None)
    decomposition = []
    current = v
    while any(current):
        for g in G.generators:
            if all(a >= b for a, b in zip(current, g)):
                rest = tuple(a - b for a, b in zip(current, g))
                if rest in members:
                    decomposition.append(g)
                    current = rest
                    break
        else:
            raise AssertionError("member without decomposition step")
    return MembershipWitness(True, tuple(decomposition))


def gap_set(G: AffineSemigroup, bound: int):
    """The finite gap set, certified by a full member shell.

    If every lattice point with degree in [bound - maxgen, bound] is a member,
    all points above the shell are members too (peel one generator off a
    decomposition of a degree-reduced neighbor), so the non-members below the
    shell are the whole gap set.  Otherwise NOT_FINITE_WITHIN_BOUND.
    """
    maxgen = G.max_generator_degree
    if bound < maxgen:
        raise ValueError(f"bound {bound} below max generator degree {maxgen}")
    members = _member_set(G, _round_up(bound))
    for s in range(bound - maxgen, bound + 1):
        for v in _points_of_degree(s, G.dim):
            if v not in members:
                return NOT_FINITE_WITHIN_BOUND
    gaps = []
    for s in range(bound - maxgen):
        for v in _points_of_degree(s, G.dim):
            if v not in members:
                gaps.append(v)
    return frozenset(gaps)


def gap_set_auto(G: AffineSemigroup, start: int | None = None, cap: int = 80):
    """gap_set with an escalating bound; raises GapsNotFinite at the cap."""
    bound = start if start is not None else 2 * G.max_generator_degree + 2
    while bound <= cap:
        gaps = gap_set(G, bound)
        if gaps is not NOT_FINITE_WITHIN_BOUND:
            return gaps
        bound *= 2
    raise GapsNotFinite(f"no finite gap set within degree bound {cap}")


@lru_cache(maxsize=None)
def _ord_table(G: AffineSemigroup, bound: int):
    """ord(v) = max number of generator parts summing to v, for members with
    total degree <= bound.  This is the max-ideal-adic order of the monomial."""
    members = _member_set(G, _round_up(bound))
    ords: dict = {(0,) * G.dim: 0}
    for s in range(1, bound + 1):
        for v in _points_of_degree(s, G.dim):
            if v not in members:
                continue
            best = 0
            for g in G.generators:
                if all(a >= b for a, b in zip(v, g)):
                    rest = tuple(a - b for a, b in zip(v, g))
                    if rest in ords:
                        best = max(best, 1 + ords[rest])
            ords[v] = best
    return ords


def ord_of(G: AffineSemigroup, v) -> int:
    witness = sg_member(G, v)
    if not witness.member:
        raise ValueError(f"{v} is not in the semigroup")
    return _ord_table(G, _round_up(sum(v)))[tuple(v)]


def hilbert_samuel(G: AffineSemigroup, t: int) -> int:
    """Length of R modulo the t-th power of its maximal ideal: the number of
    semigroup points of order below t.  ord(v) >= deg(v)/maxgen, so every such
    point has degree below t*maxgen and the count is finite."""
    if t < 0:
        raise ValueError("t must be non-negative")
    if t == 0:
        return 0
    bound = t * G.max_generator_degree
    ords = _ord_table(G, bound)
    return sum(1 for o in ords.values() if o < t)


@lru_cache(maxsize=None)
def multiplicity(G: AffineSemigroup, t_cap: int = 40, window: int = 3) -> int:
    """Multiplicity of a 2-dimensional finite-colength monomial subring, as
    the stabilized second difference of the Hilbert-Samuel function."""
    if G.dim != 2:
        raise ValueError("multiplicity is implemented for dim 2 semigroups")
    gap_set_auto(G)  # certifies the finite-colength hypothesis
    values: list[int] = []
    for t in range(1, t_cap + 1):
        values.append(hilbert_samuel(G, t))
        e = stabilized_difference(values, 2, window)
        if e is not None:
            return e
    raise InconclusiveError("Hilbert-Samuel second differences did not stabilize",
                            table=values)


def nu_max_ideal(G: AffineSemigroup) -> int:
    """Minimal number of monomial generators: semigroup elements of order
    exactly one.  Such elements are irreducible, hence among the listed
    generators."""
    ords = _ord_table(G, G.max_generator_degree)
    return sum(1 for g in G.generators if ords.get(g) == 1)


@dataclass(frozen=True)
class LocalizationResult:
    semigroup: AffineSemigroup
    inverted_units: tuple[tuple[int, ...], ...]


def localize_at_face(G: AffineSemigroup, face: str = "s") -> LocalizationResult:
    """Invert the first variable of a homogeneous 3-dimensional semigroup.

    Each generator s^a x^b y^c becomes (x/s)^b (y/s)^c up to a unit, so the
    image generator is (b, c); generators with b = c = 0 become units and are
    discarded.  Requires all generators to share one total degree, which makes
    the unit identification exact.
    """
    if face != "s":
        raise ValueError("only the first-variable face is supported")
    if G.dim != 3:
        raise ValueError("face localization expects a 3-dimensional semigroup")
    degrees = {sum(g) for g in G.generators}
    if len(degrees) != 1:
        raise ValueError("face localization requires equal-degree generators")
    images = []
    units = []
    for g in G.generators:
        b, c = g[1], g[2]
        if b == 0 and c == 0:
            units.append(g)
        else:
            images.append((b, c))
    if not images:
        raise ValueError("all generators become units")
    return LocalizationResult(AffineSemigroup(2, tuple(images)), tuple(units))


def homogeneous_hilbert_samuel(G: AffineSemigroup, t: int) -> int:
    """Hilbert-Samuel value for a semigroup whose generators share one total
    degree h: ord(v) = deg(v)/h exactly, so the count is over degrees < t*h."""
    degrees = {sum(g) for g in G.generators}
    if len(degrees) != 1:
        raise ValueError("requires equal-degree generators")
    h = degrees.pop()
    if t == 0:
        return 0
    bound = t * h - 1
    members = _member_set(G, _round_up(bound))
    return sum(1 for v in members if sum(v) <= bound)


def homogeneous_multiplicity(G: AffineSemigroup, t_cap: int = 24, window: int = 3):
    """Multiplicity via stabilized dim-th differences of the homogeneous
    Hilbert-Samuel function; returns (value, table)."""
    values: list[int] = []
    for t in range(1, t_cap + 1):
        values.append(homogeneous_hilbert_samuel(G, t))
        e = stabilized_difference(values, G.dim, window)
        if e is not None:
            return e, values
    raise InconclusiveError("Hilbert-Samuel differences did not stabilize", table=values)


def saturation_exponent(G: AffineSemigroup) -> int:
    """Least t with m_R^t * S inside R: no semigroup element of order >= t may
    sit componentwise below a gap."""
    gaps = gap_set_auto(G)
    if not gaps:
        return 1
    worst = 0
    bound = max(sum(g) for g in gaps)
    ords = _ord_table(G, _round_up(bound))
    for v, o in ords.items():
        if any(all(a <= b for a, b in zip(v, gap)) for gap in gaps):
            worst = max(worst, o)
    return worst + 1


def minimal_module_generators(points_in_support, G: AffineSemigroup, support) -> list:
    """Minimal generators over R of a monomial module with the given support
    predicate: support points w with w - g outside the support for every
    semigroup generator g."""
    out = []
    for w in points_in_support:
        if all(not support(tuple(a - b for a, b in zip(w, g))) for g in G.generators):
            out.append(w)
    return sorted(out)
