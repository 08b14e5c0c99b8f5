"""The finite-set base category: carriers, maps, group actions and colimits.

Every object is a finite set of string labels. Colimits are computed by
explicit quotients: a disjoint-set closure of generating relations, with the
lexicographically least member of each class as its representative.
"""

import collections
import json
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Generic, Iterable, List, Mapping, Sequence, Tuple, TypeVar

from .fincomb import Permutation
from .utils.errors import CompositionError, ValidationError
from .utils.validation import validate_label

logger = logging.getLogger(__name__)

T = TypeVar("T")


def compound_label(*parts: object) -> str:
    """Canonical label for a tuple of parts (JSON array, no whitespace)."""
    return json.dumps(list(parts), separators=(",", ":"), ensure_ascii=False)


def split_label(label: str) -> List[object]:
    return json.loads(label)


@dataclass(frozen=True)
class FinCarrier:
    """A finite set of pairwise distinct labels."""

    elements: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        for position, label in enumerate(self.elements):
            if not validate_label(label):
                raise ValidationError(f"Invalid label {label!r}", f"elements[{position}]")
        if len(set(self.elements)) != len(self.elements):
            seen = set()
            for position, label in enumerate(self.elements):
                if label in seen:
                    raise ValidationError(f"Duplicate label {label!r}", f"elements[{position}]")
                seen.add(label)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, label: object) -> bool:
        return label in self.members

    @cached_property
    def members(self) -> FrozenSet[str]:
        return frozenset(self.elements)

    @classmethod
    def point(cls, label: str = "*") -> "FinCarrier":
        return cls((label,))

    @classmethod
    def empty(cls) -> "FinCarrier":
        return cls(())

    def to_json(self) -> List[str]:
        return list(self.elements)


@dataclass(frozen=True)
class FinMap:
    """A total function between carriers, given by its table."""

    src: FinCarrier
    dst: FinCarrier
    table: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "table", dict(self.table))
        if set(self.table) != self.src.members:
            missing = [x for x in self.src.elements if x not in self.table]
            extra = sorted(set(self.table) - self.src.members)
            raise ValidationError(f"Map table is not total on its source (missing {missing}, extra {extra})", "table")
        for x, y in self.table.items():
            if y not in self.dst:
                raise ValidationError(f"Image {y!r} of {x!r} is not in the target carrier", f"table.{x}")

    def __call__(self, x: str) -> str:
        return self.table[x]

    @classmethod
    def identity(cls, carrier: FinCarrier) -> "FinMap":
        return cls(carrier, carrier, {x: x for x in carrier})

    def compose(self, other: "FinMap") -> "FinMap":
        """self after other."""
        if other.dst != self.src:
            raise CompositionError("Cannot compose maps: target and source carriers differ")
        return FinMap(other.src, self.dst, {x: self.table[other.table[x]] for x in other.src})

    def is_injective(self) -> bool:
        return len(set(self.table.values())) == len(self.table)

    def is_surjective(self) -> bool:
        return set(self.table.values()) == self.dst.members

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def is_identity(self) -> bool:
        return self.src == self.dst and all(x == y for x, y in self.table.items())

    def inverse(self) -> "FinMap":
        if not self.is_bijective():
            raise CompositionError("Only bijections have inverses")
        return FinMap(self.dst, self.src, {y: x for x, y in self.table.items()})

    def first_difference(self, other: "FinMap") -> Tuple[str, str, str]:
        """The least element where two parallel maps disagree, or an empty triple."""
        for x in sorted(self.table):
            if self.table[x] != other.table.get(x):
                return x, self.table[x], other.table.get(x)
        return ()

    def to_json(self) -> Dict[str, str]:
        return dict(sorted(self.table.items()))


# Generator keys are (factor, k): the adjacent transposition s_k of the given factor.
Generator = Tuple[int, int]


@dataclass(frozen=True)
class GroupAction:
    """
    A left action of Σ_{d_0} × Σ_{d_1} × ... on a carrier, stored on the adjacent
    transpositions of each factor.

    The Coxeter relations of every factor (involution, braid, far commutation)
    and the commutation of different factors are checked at construction, so
    evaluation on any group element is independent of the chosen word.
    """

    carrier: FinCarrier
    degrees: Tuple[int, ...]
    generators: Mapping[Generator, FinMap] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))
        object.__setattr__(self, "generators", dict(self.generators))
        expected = {(factor, k) for factor, d in enumerate(self.degrees) for k in range(1, d)}
        if set(self.generators) != expected:
            raise ValidationError(
                f"Action on degrees {list(self.degrees)} needs generators {sorted(expected)}, got {sorted(self.generators)}",
                "generators",
            )
        for key, table in self.generators.items():
            if table.src != self.carrier or table.dst != self.carrier:
                raise ValidationError(f"Generator {key} does not act on the carrier", f"generators.{key[0]}.{key[1]}")
            if not table.is_bijective():
                raise ValidationError(f"Generator {key} is not a bijection", f"generators.{key[0]}.{key[1]}")
        self._check_relations()

    def _check_relations(self) -> None:
        def word(*keys: Generator) -> FinMap:
            result = FinMap.identity(self.carrier)
            for key in keys:
                result = result.compose(self.generators[key])
            return result

        keys = sorted(self.generators)
        for a in keys:
            if not word(a, a).is_identity():
                raise ValidationError(f"Generator {a} does not square to the identity", "generators")
            for b in keys:
                if b <= a:
                    continue
                if a[0] == b[0] and b[1] == a[1] + 1:
                    if not word(a, b, a, b, a, b).is_identity():
                        raise ValidationError(f"Braid relation fails for {a}, {b}", "generators")
                elif not word(a, b, a, b).is_identity():
                    raise ValidationError(f"Generators {a} and {b} do not commute", "generators")

    @classmethod
    def trivial(cls, carrier: FinCarrier, degrees: Sequence[int]) -> "GroupAction":
        identity = FinMap.identity(carrier)
        return cls(carrier, tuple(degrees), {
            (factor, k): identity for factor, d in enumerate(degrees) for k in range(1, d)
        })

    def act(self, element: Sequence[Permutation]) -> FinMap:
        """The bijection by which a group element (one permutation per factor) acts."""
        if tuple(g.degree for g in element) != self.degrees:
            raise CompositionError(
                f"Group element of degrees {[g.degree for g in element]} cannot act on degrees {list(self.degrees)}"
            )
        key = tuple(g.images for g in element)
        cached = self._act_cache.get(key)
        if cached is not None:
            return cached
        table = {}
        for x in self.carrier:
            y = x
            for factor, g in enumerate(element):
                for k in g.adjacent_word():
                    y = self.generators[(factor, k)](y)
            table[x] = y
        result = FinMap(self.carrier, self.carrier, table)
        self._act_cache[key] = result
        return result

    def act_word(self, factor: int, word: Sequence[int]) -> FinMap:
        """Evaluate the product s_{w[0]} o s_{w[1]} o ... within one factor."""
        result = FinMap.identity(self.carrier)
        for k in word:
            result = result.compose(self.generators[(factor, k)])
        return result

    @cached_property
    def _act_cache(self) -> Dict[Tuple[Tuple[int, ...], ...], FinMap]:
        return {}

    def to_json(self) -> Dict[str, object]:
        return {
            "degrees": list(self.degrees),
            "generators": {f"{factor}.{k}": self.generators[(factor, k)].to_json() for factor, k in sorted(self.generators)},
        }


class DisjointSet(Generic[T]):
    def __init__(self):
        self.parent = {}
        self.rank = {}

    def make_set(self, e: T):
        if e in self.parent:
            return
        self.parent[e] = e
        self.rank[e] = 0

    # find with path compression
    def find(self, e: T):
        self.make_set(e)
        root = e
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[e] != root:
            self.parent[e], e = root, self.parent[e]
        return root

    # union by rank
    def union(self, x: T, y: T):
        x_root = self.find(x)
        y_root = self.find(y)
        if x_root == y_root:
            return
        if self.rank[x_root] < self.rank[y_root]:
            x_root, y_root = y_root, x_root
        self.parent[y_root] = x_root
        if self.rank[x_root] == self.rank[y_root]:
            self.rank[x_root] += 1

    def sets(self) -> List[Tuple[T, ...]]:
        """Sorted tuple-of-sorted-tuples view of the classes."""
        classes = collections.defaultdict(list)
        for e in self.parent:
            classes[self.find(e)].append(e)
        return sorted(tuple(sorted(members)) for members in classes.values())


def quotient(carrier: FinCarrier, relations: Iterable[Tuple[str, str]]) -> Tuple[FinCarrier, FinMap]:
    """
    Quotient a carrier by the equivalence relation generated by `relations`.

    Returns the carrier of classes, each labelled by its lexicographically least
    member and listed in sorted order, and the projection onto it.
    """
    classes: DisjointSet[str] = DisjointSet()
    for x in carrier:
        classes.make_set(x)
    count = 0
    for position, (x, y) in enumerate(relations):
        if x not in carrier:
            raise ValidationError(f"Unknown label {x!r} in relation", f"relations[{position}][0]")
        if y not in carrier:
            raise ValidationError(f"Unknown label {y!r} in relation", f"relations[{position}][1]")
        classes.union(x, y)
        count += 1
    representative = {}
    for members in classes.sets():
        for member in members:
            representative[member] = members[0]
    target = FinCarrier(tuple(sorted(set(representative.values()))))
    logger.debug(f"Quotient of {len(carrier)} labels by {count} relations has {len(target)} classes")
    return target, FinMap(carrier, target, representative)


def coproduct(parts: Sequence[FinCarrier], tags: Sequence[str] = None) -> Tuple[FinCarrier, List[FinMap]]:
    """Tagged disjoint union with labels "tag:elem" (tags default to the part index)."""
    if tags is None:
        tags = [str(position) for position in range(len(parts))]
    if len(tags) != len(parts) or len(set(tags)) != len(tags) or any(":" in tag for tag in tags):
        raise ValidationError("Coproduct tags must be distinct and free of ':'", "tags")
    elements = [f"{tag}:{x}" for tag, part in zip(tags, parts) for x in part]
    total = FinCarrier(tuple(elements))
    injections = [FinMap(part, total, {x: f"{tag}:{x}" for x in part}) for tag, part in zip(tags, parts)]
    return total, injections


def product(a: FinCarrier, b: FinCarrier) -> Tuple[FinCarrier, Tuple[FinMap, FinMap]]:
    """Cartesian product with compound pair labels, and its two projections."""
    pairs = [(x, y) for x in a for y in b]
    total = FinCarrier(tuple(compound_label(x, y) for x, y in pairs))
    first = FinMap(total, a, {compound_label(x, y): x for x, y in pairs})
    second = FinMap(total, b, {compound_label(x, y): y for x, y in pairs})
    return total, (first, second)


def power(carrier: FinCarrier, n: int) -> List[Tuple[str, ...]]:
    """All n-tuples of elements, in lexicographic order of positions."""
    tuples: List[Tuple[str, ...]] = [()]
    for _ in range(n):
        tuples = [t + (x,) for t in tuples for x in carrier]
    return tuples
