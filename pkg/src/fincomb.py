"""Exact combinatorics of finite ordinals.

The ordinal n is the set {1, ..., n}. Injections, permutations and partial
bijections store full image tables, 1-indexed, as tuples.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from .utils.errors import CompositionError, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Injection:
    """An injection from {1..domain_size} into {1..codomain_size}."""

    domain_size: int
    codomain_size: int
    images: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if self.domain_size < 0 or self.codomain_size < 0:
            raise ValidationError(f"Negative size in injection {self.domain_size}->{self.codomain_size}")
        if len(self.images) != self.domain_size:
            raise ValidationError(
                f"Injection needs {self.domain_size} images, got {len(self.images)}", "img"
            )
        for position, value in enumerate(self.images):
            if not 1 <= value <= self.codomain_size:
                raise ValidationError(f"Image {value} outside 1..{self.codomain_size}", f"img[{position}]")
        if len(set(self.images)) != len(self.images):
            raise ValidationError(f"Images {list(self.images)} are not pairwise distinct", "img")

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    @classmethod
    def identity(cls, n: int) -> "Injection":
        return cls(n, n, tuple(range(1, n + 1)))

    @classmethod
    def front(cls, m: int, k: int) -> "Injection":
        """The inclusion {1..m} -> {1..k} fixing every element."""
        return cls(m, k, tuple(range(1, m + 1)))

    @cached_property
    def preimage(self) -> Dict[int, int]:
        return {value: j for j, value in enumerate(self.images, start=1)}

    def is_identity(self) -> bool:
        return self.domain_size == self.codomain_size and self.images == tuple(range(1, self.domain_size + 1))

    def to_json(self) -> Dict[str, object]:
        return {"dom": self.domain_size, "cod": self.codomain_size, "img": list(self.images)}


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..degree}."""

    degree: int
    images: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, self.degree + 1)):
            raise ValidationError(f"{list(self.images)} is not a permutation of 1..{self.degree}", "img")

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, k: int) -> "Permutation":
        """The adjacent transposition (k k+1) in degree n."""
        if not 1 <= k < n:
            raise ValidationError(f"No adjacent transposition s_{k} in degree {n}")
        images = list(range(1, n + 1))
        images[k - 1], images[k] = images[k], images[k - 1]
        return cls(n, tuple(images))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.degree + 1))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other."""
        if self.degree != other.degree:
            raise CompositionError(f"Cannot compose permutations of degrees {self.degree} and {other.degree}")
        return Permutation(self.degree, tuple(self(other(j)) for j in range(1, self.degree + 1)))

    def inverse(self) -> "Permutation":
        images = [0] * self.degree
        for j, value in enumerate(self.images, start=1):
            images[value - 1] = j
        return Permutation(self.degree, tuple(images))

    def direct_sum(self, other: "Permutation") -> "Permutation":
        """Block sum: self on the first block, other shifted onto the second."""
        return Permutation(
            self.degree + other.degree,
            self.images + tuple(self.degree + value for value in other.images),
        )

    def injection(self) -> Injection:
        return Injection(self.degree, self.degree, self.images)

    def cycle_count(self) -> int:
        """Number of cycles, fixed points included."""
        seen = set()
        cycles = 0
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycles += 1
            j = start
            while j not in seen:
                seen.add(j)
                j = self(j)
        return cycles

    def adjacent_word(self) -> List[int]:
        """
        Factor into adjacent transpositions.

        Returns a word [k_1, ..., k_r] with self = s_{k_r} o ... o s_{k_1}, so that
        applying s_{k_1} first, then s_{k_2}, and so on, realizes self.
        """
        current = list(self.images)
        recorded: List[int] = []
        while True:
            for k in range(1, self.degree):
                if current[k - 1] > current[k]:
                    current[k - 1], current[k] = current[k], current[k - 1]
                    recorded.append(k)
                    break
            else:
                break
        return recorded

    def to_json(self) -> Dict[str, object]:
        return {"deg": self.degree, "img": list(self.images)}


@dataclass(frozen=True)
class PartialBijection:
    """A bijection between two finite sets of naturals, stored positionally."""

    source_elements: Tuple[int, ...]
    target_elements: Tuple[int, ...]
    images: Tuple[int, ...]

    def __post_init__(self):
        for name in ("source_elements", "target_elements", "images"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if len(self.source_elements) != len(self.target_elements):
            raise ValidationError(
                f"Partial bijection between sets of sizes {len(self.source_elements)} and {len(self.target_elements)}"
            )
        if list(self.source_elements) != sorted(set(self.source_elements)):
            raise ValidationError("Source elements must be strictly increasing", "src")
        if list(self.target_elements) != sorted(set(self.target_elements)):
            raise ValidationError("Target elements must be strictly increasing", "tgt")
        if sorted(self.images) != list(self.target_elements):
            raise ValidationError(f"{list(self.images)} is not a permutation of {list(self.target_elements)}", "img")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __len__(self) -> int:
        return len(self.source_elements)

    @cached_property
    def table(self) -> Dict[int, int]:
        return dict(zip(self.source_elements, self.images))

    @classmethod
    def empty(cls) -> "PartialBijection":
        return cls((), (), ())

    @classmethod
    def from_mapping(cls, mapping: Dict[int, int]) -> "PartialBijection":
        source = tuple(sorted(mapping))
        return cls(source, tuple(sorted(mapping.values())), tuple(mapping[x] for x in source))

    def to_json(self) -> Dict[str, object]:
        return {"src": list(self.source_elements), "tgt": list(self.target_elements), "img": list(self.images)}


def compose_injection(g: Injection, f: Injection) -> Injection:
    """g after f."""
    if f.codomain_size != g.domain_size:
        raise CompositionError(
            f"Cannot compose injection into {f.codomain_size} with injection from {g.domain_size}"
        )
    return Injection(f.domain_size, g.codomain_size, tuple(g(f(j)) for j in range(1, f.domain_size + 1)))


def sorted_complement(f: Injection) -> Tuple[int, ...]:
    """Increasing list of the elements of {1..codomain} outside the image of f."""
    image = set(f.images)
    return tuple(x for x in range(1, f.codomain_size + 1) if x not in image)


def block_shuffle(p: int, q: int) -> Permutation:
    """The permutation moving a first block of size p past a block of size q."""
    images = tuple(i + q for i in range(1, p + 1)) + tuple(i - p for i in range(p + 1, p + q + 1))
    return Permutation(p + q, images)


@lru_cache(maxsize=None)
def enumerate_injections(m: int, k: int) -> Tuple[Injection, ...]:
    """All k!/(k-m)! injections {1..m} -> {1..k}, in lexicographic order of image tables."""
    if m > k:
        return ()
    result = tuple(Injection(m, k, images) for images in itertools.permutations(range(1, k + 1), m))
    logger.debug(f"Enumerated {len(result)} injections {m} -> {k}")
    return result


@lru_cache(maxsize=None)
def enumerate_permutations(n: int) -> Tuple[Permutation, ...]:
    """All n! permutations of degree n, identity first."""
    return tuple(Permutation(n, images) for images in itertools.permutations(range(1, n + 1)))


def enumerate_bijections(source: Sequence[int], target: Sequence[int]) -> List[PartialBijection]:
    """All bijections between two increasing lists of equal length."""
    if len(source) != len(target):
        return []
    return [
        PartialBijection(tuple(source), tuple(target), images)
        for images in itertools.permutations(target)
    ]


def injection_from_json(data: Dict[str, object]) -> Injection:
    return Injection(int(data["dom"]), int(data["cod"]), tuple(data["img"]))


def permutation_from_json(data: Dict[str, object]) -> Permutation:
    return Permutation(int(data["deg"]), tuple(data["img"]))


def partial_bijection_from_json(data: Dict[str, object]) -> PartialBijection:
    return PartialBijection(tuple(data["src"]), tuple(data["tgt"]), tuple(data["img"]))


def word_product(degree: int, word: Iterable[int]) -> Permutation:
    """The product s_{w[0]} o s_{w[1]} o ... of adjacent transpositions."""
    result = Permutation.identity(degree)
    for k in word:
        result = result.compose(Permutation.transposition(degree, k))
    return result
