"""Parameter models shared by formulas, enumeration and verification.

Classes:
    CycleProfile: the tuple (n, m; c, r, s, R, S; alpha, beta, lam, mu)
    ProfileFilter: a partial profile at one of the counting granularities
    ExponentQuadruple: the q-exponents X, Y, Z, W of a profile
    RotationPair: an element of the bicyclic rotation action
    BijectionTuple: image of a (connected cycle, permutation) pair under the
        rotation-invariance bijection
"""
import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .errors import ProfileError
from .partitions import EMPTY_PARTITION, Partition, is_divisible, multiply_multiplicities


class CycleProfile(BaseModel):
    """Cycle-type profile of a connected annular noncrossing permutation.

    Attributes:
        n: exterior circle size
        m: interior circle size
        c: number of connected cycles (meeting both circles)
        r: number of exterior cycles
        s: number of interior cycles
        R: total size of the exterior cycles
        S: total size of the interior cycles
        alpha: exterior cycle type, in Par(R, r)
        beta: interior cycle type, in Par(S, s)
        lam: connected exterior cycle type, in Par(n - R, c)
        mu: connected interior cycle type, in Par(m - S, c)
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    m: int = Field(ge=1)
    c: int = Field(ge=1)
    r: int = Field(ge=0)
    s: int = Field(ge=0)
    R: int = Field(ge=0)
    S: int = Field(ge=0)
    alpha: Partition = EMPTY_PARTITION
    beta: Partition = EMPTY_PARTITION
    lam: Partition
    mu: Partition

    @model_validator(mode="after")
    def check_partition_shapes(self) -> "CycleProfile":
        """Each partition must have the weight and length its counts imply."""
        if self.R > self.n:
            raise ValueError(f"R={self.R} exceeds n={self.n}")
        if self.S > self.m:
            raise ValueError(f"S={self.S} exceeds m={self.m}")
        for name, lam, weight, length in (
            ("alpha", self.alpha, self.R, self.r),
            ("beta", self.beta, self.S, self.s),
            ("lam", self.lam, self.n - self.R, self.c),
            ("mu", self.mu, self.m - self.S, self.c),
        ):
            if lam.weight != weight or lam.length != length:
                raise ValueError(
                    f"{name}={lam} must lie in Par({weight},{length}); "
                    f"it has weight {lam.weight} and {lam.length} parts"
                )
        return self

    def is_divisible_by(self, d: int) -> bool:
        """True when every count and every partition is divisible by d."""
        counts = (self.n, self.m, self.c, self.r, self.s, self.R, self.S)
        partitions = (self.alpha, self.beta, self.lam, self.mu)
        return all(x % d == 0 for x in counts) and all(is_divisible(p, d) for p in partitions)

    def key(self) -> tuple:
        """Hashable key, used to tally enumerations by profile."""
        return (
            self.n, self.m, self.c, self.r, self.s, self.R, self.S,
            self.alpha.parts, self.beta.parts, self.lam.parts, self.mu.parts,
        )

    def __str__(self) -> str:
        return (
            f"anc({self.n},{self.m};{self.c},{self.r},{self.s},{self.R},{self.S};"
            f"{self.alpha},{self.beta},{self.lam},{self.mu})"
        )


def make_profile(
    n: int, m: int, c: int, r: int, s: int, R: int, S: int,
    alpha: Partition, beta: Partition, lam: Partition, mu: Partition,
) -> CycleProfile:
    """Validated `CycleProfile` constructor raising ProfileError on bad input."""
    try:
        return CycleProfile(
            n=n, m=m, c=c, r=r, s=s, R=R, S=S,
            alpha=alpha, beta=beta, lam=lam, mu=mu,
        )
    except ValidationError as e:
        raise ProfileError(f"Invalid cycle profile: {_first_message(e)}") from e


def _first_message(e: ValidationError) -> str:
    error = e.errors()[0]
    location = ".".join(str(x) for x in error.get("loc", ()))
    message = error["msg"].removeprefix("Value error, ")
    return f"{location}: {message}" if location else message


class ProfileFilter(BaseModel):
    """Partial profile used to select permutations.

    Any unset field matches everything. The counting granularities are
    ``(c)``, ``(c, r, s)``, ``(c, r, s, R, S)`` and the full profile.
    """
    model_config = ConfigDict(frozen=True)

    c: Optional[int] = None
    r: Optional[int] = None
    s: Optional[int] = None
    R: Optional[int] = None
    S: Optional[int] = None
    alpha: Optional[Partition] = None
    beta: Optional[Partition] = None
    lam: Optional[Partition] = None
    mu: Optional[Partition] = None

    @classmethod
    def from_profile(cls, profile: CycleProfile) -> "ProfileFilter":
        return cls(
            c=profile.c, r=profile.r, s=profile.s, R=profile.R, S=profile.S,
            alpha=profile.alpha, beta=profile.beta, lam=profile.lam, mu=profile.mu,
        )

    def is_empty(self) -> bool:
        return all(value is None for value in self.__dict__.values())

    def matches(self, profile: CycleProfile) -> bool:
        for name in type(self).model_fields:
            wanted = getattr(self, name)
            if wanted is not None and getattr(profile, name) != wanted:
                return False
        return True

    def doubled(self) -> "ProfileFilter":
        """Filter in anc(2n, 2m) for type-B parameters.

        Counts are doubled; partitions have their multiplicities doubled, so a
        partition in Par(R, r) becomes one in Par(2R, 2r).
        """
        return ProfileFilter(
            **{
                name: None if value is None
                else multiply_multiplicities(value, 2) if isinstance(value, Partition)
                else 2 * value
                for name, value in self.__dict__.items()
            }
        )


class ExponentQuadruple(BaseModel):
    """The q-exponents of a profile.

    X = c(c-1); Y = r(c+r) + s(c+s); Z = r(n-c-R) + s(m-c-S);
    W = r(R-r) + s(S-s) + c(n-R-c) + c(m-S-c) - tau(alpha) - tau(beta) - tau(lam) - tau(mu)
    """
    model_config = ConfigDict(frozen=True)

    X: int = Field(ge=0)
    Y: int = Field(ge=0)
    Z: int = Field(ge=0)
    W: int = Field(ge=0)

    @property
    def total(self) -> int:
        return self.X + self.Y + self.Z + self.W


def _shift_order(size: int, shift: int) -> int:
    return size // math.gcd(size, shift % size)


class RotationPair(BaseModel):
    """A pair (c1, c2) of circle rotations acting by relabeling.

    c1 sends exterior label i to i + ext_shift (mod n); c2 sends interior label
    n + i to n + j with j = i - int_shift (mod m).

    Attributes:
        n: exterior circle size
        m: interior circle size
        ext_shift: exterior shift, reduced mod n
        int_shift: interior shift, reduced mod m
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    m: int = Field(ge=1)
    ext_shift: int
    int_shift: int

    @model_validator(mode="before")
    @classmethod
    def reduce_shifts(cls, data: dict) -> dict:
        if isinstance(data, dict) and data.get("n") and data.get("m"):
            data = dict(data)
            data["ext_shift"] = int(data.get("ext_shift", 0)) % int(data["n"])
            data["int_shift"] = int(data.get("int_shift", 0)) % int(data["m"])
        return data

    @property
    def ext_order(self) -> int:
        return _shift_order(self.n, self.ext_shift)

    @property
    def int_order(self) -> int:
        return _shift_order(self.m, self.int_shift)

    @property
    def order(self) -> int:
        return math.lcm(self.ext_order, self.int_order)

    @property
    def is_annular(self) -> bool:
        """An annular rotation: both components have the same order."""
        return self.ext_order == self.int_order

    @property
    def is_rigid(self) -> bool:
        """Both circles turn through the same angle: ext_shift/n = int_shift/m mod 1."""
        return (self.ext_shift * self.m - self.int_shift * self.n) % (self.n * self.m) == 0

    def label_map(self) -> tuple[int, ...]:
        """sigma as a 1-based image tuple: sigma(x) = label_map()[x - 1]."""
        exterior = tuple((i + self.ext_shift) % self.n + 1 for i in range(self.n))
        interior = tuple(
            self.n + (i - self.int_shift) % self.m + 1 for i in range(self.m)
        )
        return exterior + interior

    def __str__(self) -> str:
        return f"rot({self.ext_shift},{self.int_shift})"


class BijectionTuple(BaseModel):
    """(a, b, R^E, R^I, V^E, V^I, V^CE, V^CI) built from a connected cycle.

    Attributes:
        a: rank of the cycle's first exterior element among exterior labels
            in connected cycles, in [n - R]
        b: rank of the cycle's last interior element among interior labels in
            connected cycles, in [m - S]
        R_E: exterior labels in [n/d] closing an exterior cycle
        R_I: interior positions in [m/d] closing an interior cycle
        V_E: sizes of the cycles closed at R_E, in label order
        V_I: sizes of the cycles closed at R_I, in position order
        V_CE: first c/d connected exterior run sizes reading from a
        V_CI: first c/d connected interior run sizes reading from b + 1
    """
    model_config = ConfigDict(frozen=True)

    a: int = Field(ge=1)
    b: int = Field(ge=1)
    R_E: tuple[int, ...]
    R_I: tuple[int, ...]
    V_E: tuple[int, ...]
    V_I: tuple[int, ...]
    V_CE: tuple[int, ...]
    V_CI: tuple[int, ...]
