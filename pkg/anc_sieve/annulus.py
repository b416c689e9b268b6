"""Annular noncrossing permutations and their enumeration.

Labels 1..n sit clockwise on the exterior circle and n+1..n+m
counter-clockwise on the interior circle. A permutation is composed right to
left, ``(sigma * tau)(x) = sigma(tau(x))``, and the reference permutation is
``gamma(n, m) = (1,...,n)(n+1,...,n+m)``.

A permutation is a connected annular noncrossing permutation when some cycle
meets both circles and

    cycles(pi) + cycles(pi^-1 * gamma) = n + m.

The same criterion with ``n + 1`` on the right selects noncrossing
permutations of the disc.

Example:
    ```python
    from anc_sieve.annulus import AnnularPermutation, enumerate_anc, is_connected_anc

    p = AnnularPermutation.parse(2, 2, "(1,3)(2,4)")
    is_connected_anc(p)            # True
    len(enumerate_anc(2, 2))       # 18
    ```
"""
import functools
import itertools
import json
import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from joblib import Parallel, delayed

from .config import EnumerationStrategy, get_config
from .errors import (
    BoundExceeded,
    CycleNotationError,
    ParityError,
    PreconditionError,
    ProfileError,
)
from .logger import AncLogger
from .models import BijectionTuple, CycleProfile, ProfileFilter, RotationPair
from .partitions import Partition, divide, is_rearrangement, rearrangement_count

Cycle = tuple[int, ...]


@dataclass(frozen=True, order=True)
class AnnularPermutation:
    """Permutation of [n+m] with the annulus split after label n.

    Attributes:
        n: exterior circle size
        m: interior circle size (0 for a disc permutation)
        images: one-line notation, ``images[x - 1]`` is the image of x

    Permutations order by one-line notation, which is the canonical
    enumeration order.
    """
    n: int
    m: int
    images: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise PreconditionError(f"Circle sizes must be nonnegative; got n={self.n}, m={self.m}")
        if sorted(self.images) != list(range(1, self.n + self.m + 1)):
            raise PreconditionError(
                f"{self.images} is not a permutation of [1..{self.n + self.m}]"
            )

    @classmethod
    def from_cycles(cls, n: int, m: int, cycles: Iterable[Sequence[int]]) -> "AnnularPermutation":
        """Builds a permutation from cycles; omitted labels are fixed points.

        Raises:
            CycleNotationError: for labels out of range or repeated
        """
        size = n + m
        images = list(range(1, size + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for x in cycle:
                if not 1 <= x <= size:
                    raise CycleNotationError(f"Label {x} outside [1..{size}]")
                if x in seen:
                    raise CycleNotationError(f"Label {x} appears more than once")
                seen.add(x)
            for i, x in enumerate(cycle):
                images[x - 1] = cycle[(i + 1) % len(cycle)]
        return cls(n, m, tuple(images))

    @classmethod
    def parse(cls, n: int, m: int, text: str) -> "AnnularPermutation":
        """Parses cycle notation such as ``(1,3)(2,4)``, ignoring whitespace."""
        return cls.from_cycles(n, m, parse_cycle_notation(text))

    @classmethod
    def identity(cls, n: int, m: int) -> "AnnularPermutation":
        return cls(n, m, tuple(range(1, n + m + 1)))

    @property
    def size(self) -> int:
        return self.n + self.m

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def is_exterior(self, x: int) -> bool:
        return x <= self.n

    @cached_property
    def cycles(self) -> tuple[Cycle, ...]:
        """Canonical cycles: each starts at its smallest label, sorted by that label."""
        return _cycles(self.images)

    def inverse(self) -> "AnnularPermutation":
        inverse = [0] * self.size
        for x, y in enumerate(self.images, start=1):
            inverse[y - 1] = x
        return AnnularPermutation(self.n, self.m, tuple(inverse))

    def compose(self, other: "AnnularPermutation") -> "AnnularPermutation":
        """self * other, i.e. x -> self(other(x))."""
        return AnnularPermutation(
            self.n, self.m, tuple(self.images[y - 1] for y in other.images)
        )

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "cycles": [list(c) for c in self.cycles]}

    @classmethod
    def from_json(cls, data: dict) -> "AnnularPermutation":
        return cls.from_cycles(int(data["n"]), int(data["m"]), data["cycles"])

    def __str__(self) -> str:
        return "".join("(" + ",".join(str(x) for x in cycle) + ")" for cycle in self.cycles)


_CYCLE_NOTATION = re.compile(r"^(\((\d+(,\d+)*)?\))*$")


def parse_cycle_notation(text: str) -> list[Cycle]:
    """Splits ``(1,3)(2,4)`` into ``[(1, 3), (2, 4)]``.

    Raises:
        CycleNotationError: on anything that is not a sequence of parenthesized
            comma-separated labels
    """
    compact = re.sub(r"\s+", "", text)
    if not compact or _CYCLE_NOTATION.match(compact) is None:
        raise CycleNotationError(f"Cannot parse cycle notation '{text}'")
    return [
        tuple(int(x) for x in body.split(","))
        for body in re.findall(r"\(([^()]*)\)", compact)
        if body
    ]


def _cycles(images: Sequence[int]) -> tuple[Cycle, ...]:
    seen = [False] * (len(images) + 1)
    cycles = []
    for start in range(1, len(images) + 1):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = images[x - 1]
        cycles.append(tuple(cycle))
    return tuple(cycles)


def count_cycles(images: Sequence[int]) -> int:
    """Number of cycles of a permutation in one-line notation."""
    seen = [False] * (len(images) + 1)
    count = 0
    for start in range(1, len(images) + 1):
        if seen[start]:
            continue
        count += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x - 1]
    return count


def _gamma_images(n: int, m: int) -> tuple[int, ...]:
    exterior = tuple(i % n + 1 for i in range(1, n + 1))
    interior = tuple(n + i % m + 1 for i in range(1, m + 1))
    return exterior + interior


def gamma(n: int, m: int) -> AnnularPermutation:
    """The reference permutation (1,...,n)(n+1,...,n+m)."""
    if n < 1 or m < 0:
        raise ProfileError(f"gamma needs n >= 1 and m >= 0; got n={n}, m={m}")
    return AnnularPermutation(n, m, _gamma_images(n, m))


def _genus_defect_zero(images: Sequence[int], gamma_images: Sequence[int], target: int) -> bool:
    inverse = [0] * len(images)
    for x, y in enumerate(images, start=1):
        inverse[y - 1] = x
    kreweras_images = [inverse[y - 1] for y in gamma_images]
    return count_cycles(images) + count_cycles(kreweras_images) == target


def _has_connected_cycle(images: Sequence[int], n: int) -> bool:
    for cycle in _cycles(images):
        if cycle[0] <= n and any(x > n for x in cycle):
            return True
    return False


def is_clockwise_cycle(cycle: Sequence[int], n: int, m: int) -> bool:
    """True if the cycle can be drawn clockwise.

    Some rotation of the cycle word must read as a cyclic rotation of its sorted
    exterior labels followed by a cyclic rotation of its sorted interior labels.
    Cycles on one circle only need the cyclic-rotation condition; singletons
    always pass.
    """
    word = list(cycle)
    if len(word) <= 1:
        return True
    exterior_flags = [x <= n for x in word]
    if all(exterior_flags) or not any(exterior_flags):
        start = word.index(min(word))
        return _is_increasing(word[start:] + word[:start])
    # the exterior labels must form a single cyclic run
    starts = [
        i for i in range(len(word)) if exterior_flags[i] and not exterior_flags[i - 1]
    ]
    if len(starts) != 1:
        return False
    start = starts[0]
    rotated = word[start:] + word[:start]
    u = sum(exterior_flags)
    return _is_cyclic_rotation_of_sorted(rotated[:u]) and _is_cyclic_rotation_of_sorted(rotated[u:])


def _is_increasing(block: Sequence[int]) -> bool:
    return all(block[i] < block[i + 1] for i in range(len(block) - 1))


def _is_cyclic_rotation_of_sorted(block: Sequence[int]) -> bool:
    descents = sum(1 for i in range(len(block) - 1) if block[i] > block[i + 1])
    return descents == 0 or (descents == 1 and block[-1] < block[0])


def is_connected_anc(p: AnnularPermutation) -> bool:
    """True iff p is a connected (n, m)-annular noncrossing permutation."""
    if p.n < 1 or p.m < 1:
        return False
    if not _has_connected_cycle(p.images, p.n):
        return False
    return _genus_defect_zero(p.images, _gamma_images(p.n, p.m), p.n + p.m)


def _profile_unchecked(p: AnnularPermutation) -> CycleProfile:
    n, m = p.n, p.m
    alpha, beta, lam, mu = [], [], [], []
    for cycle in p.cycles:
        u = sum(1 for x in cycle if x <= n)
        v = len(cycle) - u
        if u and v:
            lam.append(u)
            mu.append(v)
        elif u:
            alpha.append(u)
        else:
            beta.append(v)
    R, S = sum(alpha), sum(beta)
    return CycleProfile.model_construct(
        n=n, m=m, c=len(lam), r=len(alpha), s=len(beta), R=R, S=S,
        alpha=_partition(alpha), beta=_partition(beta), lam=_partition(lam), mu=_partition(mu),
    )


def _partition(parts: list[int]) -> Partition:
    return Partition.model_construct(parts=tuple(sorted(parts, reverse=True)))


def profile_of(p: AnnularPermutation) -> CycleProfile:
    """The cycle-type profile (c, r, s, R, S; alpha, beta, lam, mu) of p.

    Raises:
        ProfileError: if p is not a connected annular noncrossing permutation
    """
    if not is_connected_anc(p):
        raise ProfileError(f"{p} is not a connected ({p.n},{p.m})-annular noncrossing permutation")
    return _profile_unchecked(p)


# enumeration

def _set_partitions(elements: Sequence[int]) -> Iterator[list[list[int]]]:
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for partition in _set_partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]


def _is_noncrossing(blocks: Iterable[Sequence[int]]) -> bool:
    labelled = sorted((x, b) for b, block in enumerate(blocks) for x in block)
    last = {}
    for x, b in labelled:
        last[b] = x
    stack: list[int] = []
    for x, b in labelled:
        if stack and stack[-1] == b:
            pass
        elif b in stack:
            return False
        else:
            stack.append(b)
        if last[b] == x:
            stack.pop()
    return True


def _clockwise_cycles_of_block(block: Sequence[int], n: int) -> list[Cycle]:
    exterior = sorted(x for x in block if x <= n)
    interior = sorted(x for x in block if x > n)
    if not exterior or not interior:
        return [tuple(sorted(block))]
    return [
        tuple(exterior[i:] + exterior[:i] + interior[j:] + interior[:j])
        for i in range(len(exterior))
        for j in range(len(interior))
    ]


def _images_from_cycles(size: int, cycles: Iterable[Cycle]) -> tuple[int, ...]:
    images = [0] * size
    for cycle in cycles:
        for i, x in enumerate(cycle):
            images[x - 1] = cycle[(i + 1) % len(cycle)]
    return tuple(images)


def _block_candidates(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """Permutations whose cycles are clockwise, over set partitions of [n+m].

    Set partitions whose exterior or interior traces cross are skipped: no
    permutation built on them passes the criterion.
    """
    size = n + m
    for blocks in _set_partitions(list(range(1, size + 1))):
        if not any(min(block) <= n < max(block) for block in blocks):
            continue
        exterior_trace = [[x for x in block if x <= n] for block in blocks]
        interior_trace = [[x for x in block if x > n] for block in blocks]
        if not _is_noncrossing(b for b in exterior_trace if b):
            continue
        if not _is_noncrossing(b for b in interior_trace if b):
            continue
        options = [_clockwise_cycles_of_block(block, n) for block in blocks]
        for cycles in itertools.product(*options):
            yield _images_from_cycles(size, cycles)


def _exhaustive_chunk(n: int, m: int, first_image: int) -> list[tuple[int, ...]]:
    size = n + m
    gamma_images = _gamma_images(n, m)
    rest = [x for x in range(1, size + 1) if x != first_image]
    found = []
    for tail in itertools.permutations(rest):
        images = (first_image,) + tail
        if _has_connected_cycle(images, n) and _genus_defect_zero(images, gamma_images, size):
            found.append(images)
    return found


def _check_bound(total: int) -> None:
    bound = get_config().enumeration.max_total
    if total > bound:
        raise BoundExceeded(
            f"Enumeration of size {total} exceeds the configured bound {bound} "
            "(enumeration.max_total)"
        )


@functools.lru_cache(maxsize=64)
def _catalog(n: int, m: int, strategy: EnumerationStrategy) -> tuple[tuple[AnnularPermutation, CycleProfile], ...]:
    AncLogger.debug(f"Building catalog for {n=} {m=} {strategy=}")
    if strategy == EnumerationStrategy.EXHAUSTIVE:
        workers = get_config().enumeration.workers
        chunks = Parallel(n_jobs=workers)(
            delayed(_exhaustive_chunk)(n, m, first) for first in range(1, n + m + 1)
        )
        accepted = [images for chunk in chunks for images in chunk]
    else:
        gamma_images = _gamma_images(n, m)
        accepted = [
            images for images in _block_candidates(n, m)
            if _genus_defect_zero(images, gamma_images, n + m)
        ]
    permutations = sorted(AnnularPermutation(n, m, images) for images in accepted)
    catalog = tuple((p, _profile_unchecked(p)) for p in permutations)
    AncLogger.debug(f"Catalog for ({n},{m}) has {len(catalog):,} permutations")
    return catalog


def catalog_with_profiles(
    n: int, m: int, strategy: Optional[EnumerationStrategy] = None,
) -> tuple[tuple[AnnularPermutation, CycleProfile], ...]:
    """Every connected (n, m)-annular noncrossing permutation with its profile."""
    if n < 1 or m < 1:
        raise ProfileError(f"Circle sizes must be positive; got n={n}, m={m}")
    _check_bound(n + m)
    strategy = EnumerationStrategy(strategy or get_config().enumeration.strategy)
    return _catalog(n, m, strategy)


def enumerate_anc(
    n: int,
    m: int,
    filter: Optional[ProfileFilter] = None,
    strategy: Optional[EnumerationStrategy] = None,
) -> tuple[AnnularPermutation, ...]:
    """All connected (n, m)-annular noncrossing permutations matching filter, canonically ordered.

    Raises:
        BoundExceeded: if n + m is above ``enumeration.max_total``
    """
    catalog = catalog_with_profiles(n, m, strategy)
    if filter is None or filter.is_empty():
        return tuple(p for p, _ in catalog)
    return tuple(p for p, profile in catalog if filter.matches(profile))


# rotations

def apply_rotation(rot: RotationPair, p: AnnularPermutation) -> AnnularPermutation:
    """sigma p sigma^-1, with sigma the combined label shift of rot."""
    if (rot.n, rot.m) != (p.n, p.m):
        raise PreconditionError(
            f"Rotation for ({rot.n},{rot.m}) applied to a ({p.n},{p.m}) permutation"
        )
    sigma = rot.label_map()
    images = [0] * p.size
    for x in range(1, p.size + 1):
        images[sigma[x - 1] - 1] = sigma[p.images[x - 1] - 1]
    return AnnularPermutation(p.n, p.m, tuple(images))


def all_rotation_pairs(n: int, m: int) -> list[RotationPair]:
    """Every element of the bicyclic group, ordered by (ext_shift, int_shift)."""
    return [
        RotationPair(n=n, m=m, ext_shift=k1, int_shift=k2)
        for k1 in range(n)
        for k2 in range(m)
    ]


def rotations_of_order(n: int, m: int, d: int) -> list[RotationPair]:
    """Pairs whose exterior and interior components both have order d.

    Example:
        ```python
        [str(r) for r in rotations_of_order(6, 6, 3)]
        # ['rot(2,2)', 'rot(2,4)', 'rot(4,2)', 'rot(4,4)']
        ```
    """
    if d < 1 or n % d or m % d:
        return []
    return [
        rot for rot in all_rotation_pairs(n, m)
        if rot.ext_order == d and rot.int_order == d
    ]


def rigid_rotations(n: int, m: int, d: int) -> list[RotationPair]:
    """Order-d rotations turning both circles through the same angle."""
    return [rot for rot in rotations_of_order(n, m, d) if rot.is_rigid]


def rigid_rotation(n: int, m: int, d: int, j: int = 1) -> RotationPair:
    """The j-th power of the rigid rotation by 1/d of a turn.

    Raises:
        PreconditionError: unless d divides gcd(n, m) and gcd(j, d) = 1
    """
    if d < 1 or n % d or m % d:
        raise PreconditionError(f"No annular rotation of order {d} for ({n},{m})")
    if math.gcd(j, d) != 1:
        raise PreconditionError(f"j={j} is not coprime to d={d}")
    return RotationPair(n=n, m=m, ext_shift=j * n // d, int_shift=j * m // d)


class FixedPoints(NamedTuple):
    count: int
    permutations: tuple[AnnularPermutation, ...]


def fixed_points(
    rot: RotationPair, n: int, m: int, filter: Optional[ProfileFilter] = None,
) -> FixedPoints:
    """Elements of `enumerate_anc(n, m, filter)` fixed by rot."""
    if (rot.n, rot.m) != (n, m):
        raise PreconditionError(f"Rotation for ({rot.n},{rot.m}) used on ({n},{m})")
    fixed = tuple(p for p in enumerate_anc(n, m, filter) if apply_rotation(rot, p) == p)
    return FixedPoints(len(fixed), fixed)


# type B

def half_turn(n: int, m: int) -> RotationPair:
    """The unique order-2 annular rotation of (n, m), both sizes even."""
    if n % 2 or m % 2:
        raise ParityError(f"Half turn needs even circle sizes; got n={n}, m={m}")
    return RotationPair(n=n, m=m, ext_shift=n // 2, int_shift=m // 2)


def is_type_B(p: AnnularPermutation) -> bool:
    """True iff p is invariant under the half turn of its annulus.

    Raises:
        ParityError: if either circle size is odd
    """
    return apply_rotation(half_turn(p.n, p.m), p) == p


def enumerate_anc_B(n: int, m: int, filter: Optional[ProfileFilter] = None) -> tuple[AnnularPermutation, ...]:
    """Type-B objects of anc(2n, 2m) whose halved parameters match filter."""
    doubled = filter.doubled() if filter is not None else None
    return tuple(p for p in enumerate_anc(2 * n, 2 * m, doubled) if is_type_B(p))


# matchings

def _perfect_matchings(elements: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not elements:
        yield []
        return
    first = elements[0]
    for i in range(1, len(elements)):
        partner = elements[i]
        rest = elements[1:i] + elements[i + 1:]
        for matching in _perfect_matchings(rest):
            yield [(first, partner)] + matching


def connected_pair_count(p: AnnularPermutation) -> int:
    """Number of cycles meeting both circles."""
    return sum(1 for cycle in p.cycles if cycle[0] <= p.n < max(cycle))


def enumerate_matchings(n: int, m: int) -> tuple[AnnularPermutation, ...]:
    """Connected annular noncrossing permutations made only of 2-cycles."""
    if n < 1 or m < 1 or (n - m) % 2:
        return ()
    _check_bound(n + m)
    size = n + m
    gamma_images = _gamma_images(n, m)
    found = []
    for matching in _perfect_matchings(list(range(1, size + 1))):
        if not any(a <= n < b for a, b in matching):
            continue
        images = _images_from_cycles(size, matching)
        if _genus_defect_zero(images, gamma_images, size):
            found.append(AnnularPermutation(n, m, images))
    return tuple(sorted(found))


# disc

def is_noncrossing_disc(p: AnnularPermutation) -> bool:
    """Disc criterion cycles(p) + cycles(p^-1 (1,...,N)) = N + 1, N = p.size."""
    size = p.size
    if size == 0:
        return True
    return _genus_defect_zero(p.images, _gamma_images(size, 0), size + 1)


def disc_cycle_type(p: AnnularPermutation) -> Partition:
    return _partition([len(cycle) for cycle in p.cycles])


@functools.lru_cache(maxsize=32)
def _disc_catalog(n: int) -> tuple[AnnularPermutation, ...]:
    found = []
    for blocks in _set_partitions(list(range(1, n + 1))):
        if not _is_noncrossing(blocks):
            continue
        p = AnnularPermutation(n, 0, _images_from_cycles(n, (tuple(sorted(b)) for b in blocks)))
        if is_noncrossing_disc(p):
            found.append(p)
    return tuple(sorted(found))


def enumerate_nc_disc(n: int, cycle_type: Optional[Partition] = None) -> tuple[AnnularPermutation, ...]:
    """Noncrossing permutations of [n], optionally of one cycle type, canonically ordered."""
    if n < 1:
        raise ProfileError(f"Disc size must be positive; got {n}")
    _check_bound(n)
    catalog = _disc_catalog(n)
    if cycle_type is None:
        return catalog
    return tuple(p for p in catalog if disc_cycle_type(p) == cycle_type)


def rotate_disc(p: AnnularPermutation, k: int) -> AnnularPermutation:
    """Conjugates a disc permutation by i -> i + k (mod N)."""
    size = p.size
    sigma = [(x - 1 + k) % size + 1 for x in range(1, size + 1)]
    images = [0] * size
    for x in range(1, size + 1):
        images[sigma[x - 1] - 1] = sigma[p.images[x - 1] - 1]
    return AnnularPermutation(p.n, p.m, tuple(images))


# rotation-invariance bijection

def _canonical_cycle(cycle: Sequence[int]) -> Cycle:
    start = list(cycle).index(min(cycle))
    return tuple(cycle[start:]) + tuple(cycle[:start])


def _check_bijection_preconditions(gamma_cycle: Sequence[int], p: AnnularPermutation, d: int) -> CycleProfile:
    if not is_connected_anc(p):
        raise PreconditionError(f"{p} is not a connected annular noncrossing permutation")
    if not gamma_cycle or _canonical_cycle(gamma_cycle) not in p.cycles:
        raise PreconditionError(f"{tuple(gamma_cycle)} is not a cycle of {p}")
    if not (min(gamma_cycle) <= p.n < max(gamma_cycle)):
        raise PreconditionError(f"{tuple(gamma_cycle)} is not a connected cycle")
    profile = _profile_unchecked(p)
    if d < 1 or not profile.is_divisible_by(d):
        raise PreconditionError(f"Profile {profile} is not divisible by d={d}")
    if not any(apply_rotation(rot, p) == p for rot in rotations_of_order(p.n, p.m, d)):
        raise PreconditionError(f"{p} is not fixed by any annular rotation of order {d}")
    return profile


def _run_sizes(sequence: Sequence[int], cycle_of: dict[int, int], from_left: bool) -> list[int]:
    """Sizes of the pieces cut by one parenthesis per cycle.

    With from_left a piece starts at the first occurrence of each cycle;
    otherwise a piece ends at the last occurrence of each cycle.
    """
    if from_left:
        cuts = []
        seen: set[int] = set()
        for i, x in enumerate(sequence):
            if cycle_of[x] not in seen:
                seen.add(cycle_of[x])
                cuts.append(i)
        bounds = cuts + [len(sequence)]
        return [bounds[i + 1] - bounds[i] for i in range(len(cuts))]
    last: dict[int, int] = {}
    for i, x in enumerate(sequence):
        last[cycle_of[x]] = i
    ends = sorted(last.values())
    bounds = [-1] + ends
    return [bounds[i + 1] - bounds[i] for i in range(len(ends))]


def bijection_phi(gamma_cycle: Sequence[int], p: AnnularPermutation, d: int) -> BijectionTuple:
    """Maps (connected cycle, rotation-invariant permutation) to its tuple.

    Labels are read in the order a, a+1, ..., n, 1, ..., a-1, b+1, ..., n+m,
    n+1, ..., b, where a is the cycle's first exterior label (its image of an
    interior label) and b the interior label mapped to a. Every exterior or
    interior cycle is closed at its last label in that order; R_E and R_I keep
    the closings in the first n/d exterior labels and the first m/d interior
    positions, V_E and V_I the sizes of the cycles closed there. Dropping those
    cycles, the connected cycles cut the remaining exterior labels (at each
    cycle's first label) and interior labels (after each cycle's last label)
    into runs; V_CE and V_CI are the first c/d run sizes. a and b are stored
    as ranks among the labels of connected cycles.

    Raises:
        PreconditionError: if p is not connected annular noncrossing, the cycle
            is not a connected cycle of p, the profile is not divisible by d, or
            no annular rotation of order d fixes p
    """
    profile = _check_bijection_preconditions(gamma_cycle, p, d)
    n, m = p.n, p.m
    inverse = p.inverse()
    a = next(x for x in gamma_cycle if x <= n and inverse(x) > n)
    b = inverse(a)

    exterior_order = [(a - 1 + t) % n + 1 for t in range(n)]
    interior_order = [n + (b - n + t) % m + 1 for t in range(m)]
    position = {x: i for i, x in enumerate(exterior_order + interior_order)}

    cycle_of: dict[int, int] = {}
    closers_exterior: dict[int, int] = {}
    closers_interior: dict[int, int] = {}
    for index, cycle in enumerate(p.cycles):
        for x in cycle:
            cycle_of[x] = index
        if max(cycle) <= n:
            closers_exterior[max(cycle, key=position.__getitem__)] = len(cycle)
        elif min(cycle) > n:
            closers_interior[max(cycle, key=position.__getitem__) - n] = len(cycle)

    n_hat, m_hat, c_hat = n // d, m // d, profile.c // d
    R_E = tuple(sorted(x for x in closers_exterior if x <= n_hat))
    R_I = tuple(sorted(x for x in closers_interior if x <= m_hat))

    connected = {cycle_of[x] for x in gamma_cycle}
    connected |= {
        index for index, cycle in enumerate(p.cycles) if min(cycle) <= n < max(cycle)
    }
    free_exterior = [x for x in exterior_order if cycle_of[x] in connected]
    free_interior = [x for x in interior_order if cycle_of[x] in connected]

    runs_exterior = _run_sizes(free_exterior, cycle_of, from_left=True)
    runs_interior = _run_sizes(free_interior, cycle_of, from_left=False)

    return BijectionTuple(
        a=sorted(free_exterior).index(a) + 1,
        b=sorted(free_interior).index(b) + 1,
        R_E=R_E,
        R_I=R_I,
        V_E=tuple(closers_exterior[x] for x in R_E),
        V_I=tuple(closers_interior[x] for x in R_I),
        V_CE=tuple(runs_exterior[:c_hat]),
        V_CI=tuple(runs_interior[:c_hat]),
    )


def bijection_codomain_size(profile: CycleProfile, d: int) -> int:
    """|B| = (n-R)(m-S) C(n/d, r/d) C(m/d, s/d) times the rearrangement counts of the hatted partitions."""
    if not profile.is_divisible_by(d):
        return 0
    n, m, r, s = (x // d for x in (profile.n, profile.m, profile.r, profile.s))
    return (
        (profile.n - profile.R) * (profile.m - profile.S) * math.comb(n, r) * math.comb(m, s)
        * rearrangement_count(divide(profile.alpha, d)) * rearrangement_count(divide(profile.beta, d))
        * rearrangement_count(divide(profile.lam, d)) * rearrangement_count(divide(profile.mu, d))
    )


def in_bijection_codomain(t: BijectionTuple, profile: CycleProfile, d: int) -> bool:
    """True if t satisfies every membership condition of the codomain B."""
    n_hat, m_hat = profile.n // d, profile.m // d
    return (
        1 <= t.a <= profile.n - profile.R
        and 1 <= t.b <= profile.m - profile.S
        and len(t.R_E) == profile.r // d and all(1 <= x <= n_hat for x in t.R_E)
        and len(t.R_I) == profile.s // d and all(1 <= x <= m_hat for x in t.R_I)
        and is_rearrangement(t.V_E, divide(profile.alpha, d))
        and is_rearrangement(t.V_I, divide(profile.beta, d))
        and is_rearrangement(t.V_CE, divide(profile.lam, d))
        and is_rearrangement(t.V_CI, divide(profile.mu, d))
    )


def permutations_to_json_lines(permutations: Iterable[AnnularPermutation]) -> Iterator[str]:
    """One compact JSON object per permutation."""
    for p in permutations:
        yield json.dumps(p.to_json(), separators=(",", ":"))
