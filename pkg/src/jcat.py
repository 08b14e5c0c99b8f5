"""The category 𝒥.

Objects are pairs (m, n). A morphism (m, n) -> (k, l) is a triple
(phi, psi, alpha) of injections phi: m -> k, psi: n -> l and a bijection alpha
from the complement of phi(m) to the complement of psi(n). Morphisms exist only
when k - m = l - n >= 0. The tensor product is blockwise concatenation and the
symmetry is given by block shuffles.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Dict, Iterator, List, Tuple

from .fincomb import (
    Injection,
    PartialBijection,
    Permutation,
    block_shuffle,
    compose_injection,
    enumerate_bijections,
    enumerate_injections,
    enumerate_permutations,
    injection_from_json,
    sorted_complement,
)
from .utils.errors import CompositionError, ValidationError, WindowError
from .utils.report import Report

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class JObject:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValidationError(f"Object ({self.m},{self.n}) has a negative entry")

    def __str__(self) -> str:
        return f"{self.m},{self.n}"

    @property
    def difference(self) -> int:
        """The component invariant n - m."""
        return self.n - self.m

    def to_json(self) -> List[int]:
        return [self.m, self.n]


def _digits(values) -> str:
    return ".".join(str(v) for v in values)


@dataclass(frozen=True)
class JMorphism:
    src: JObject
    dst: JObject
    phi: Injection
    psi: Injection
    alpha: PartialBijection

    def __post_init__(self):
        if (self.phi.domain_size, self.phi.codomain_size) != (self.src.m, self.dst.m):
            raise ValidationError(
                f"phi must be an injection {self.src.m} -> {self.dst.m}", "phi"
            )
        if (self.psi.domain_size, self.psi.codomain_size) != (self.src.n, self.dst.n):
            raise ValidationError(
                f"psi must be an injection {self.src.n} -> {self.dst.n}", "psi"
            )
        if self.alpha.source_elements != sorted_complement(self.phi):
            raise ValidationError("alpha must be defined on the sorted complement of phi", "alpha")
        if self.alpha.target_elements != sorted_complement(self.psi):
            raise ValidationError("alpha must land on the sorted complement of psi", "alpha")

    @property
    def shift(self) -> int:
        return self.dst.m - self.src.m

    @property
    def key(self) -> str:
        """Compact canonical label, e.g. "1,1>2,2:1/2/2"."""
        return f"{self.src}>{self.dst}:{_digits(self.phi.images)}/{_digits(self.psi.images)}/{_digits(self.alpha.images)}"

    def is_identity(self) -> bool:
        return self.src == self.dst and self.phi.is_identity() and self.psi.is_identity()

    def to_json(self) -> Dict[str, object]:
        return {
            "src": self.src.to_json(),
            "dst": self.dst.to_json(),
            "phi": list(self.phi.images),
            "psi": list(self.psi.images),
            "alpha": list(self.alpha.images),
        }


def morphism_from_json(data: Dict[str, object]) -> JMorphism:
    """Decode {"src":[m,n],"dst":[k,l],"phi":[...],"psi":[...],"alpha":[...]}."""
    try:
        src = JObject(*data["src"])
        dst = JObject(*data["dst"])
        phi = injection_from_json({"dom": src.m, "cod": dst.m, "img": data["phi"]})
        psi = injection_from_json({"dom": src.n, "cod": dst.n, "img": data["psi"]})
        source = sorted_complement(phi)
        target = sorted_complement(psi)
        alpha = PartialBijection(source, target, tuple(data.get("alpha", [])))
    except (KeyError, TypeError) as e:
        raise ValidationError(f"Malformed morphism: {e}", "morphism")
    return JMorphism(src, dst, phi, psi, alpha)


def morphism_from_key(key: str) -> JMorphism:
    """Inverse of JMorphism.key."""
    try:
        objects, tables = key.split(":")
        src_text, dst_text = objects.split(">")
        parts = tables.split("/")
        if len(parts) != 3:
            raise ValueError(f"expected phi/psi/alpha, got {len(parts)} part(s)")
        values = [[int(v) for v in part.split(".")] if part else [] for part in parts]
        return morphism_from_json({
            "src": [int(v) for v in src_text.split(",")],
            "dst": [int(v) for v in dst_text.split(",")],
            "phi": values[0],
            "psi": values[1],
            "alpha": values[2],
        })
    except ValueError as e:
        raise ValidationError(f"Malformed morphism key {key!r}: {e}", "key")


def identity_j(a: JObject) -> JMorphism:
    return JMorphism(a, a, Injection.identity(a.m), Injection.identity(a.n), PartialBijection.empty())


def permutation_pair(a: Permutation, b: Permutation) -> JMorphism:
    """The automorphism (a, b, ∅) of (deg a, deg b)."""
    obj = JObject(a.degree, b.degree)
    return JMorphism(obj, obj, a.injection(), b.injection(), PartialBijection.empty())


@lru_cache(maxsize=65536)
def compose_j(g: JMorphism, f: JMorphism) -> JMorphism:
    """g after f; the composite bijection is the disjoint union of the induced ones."""
    if f.dst != g.src:
        raise CompositionError(f"Cannot compose {f.src}->{f.dst} with {g.src}->{g.dst}")
    phi = compose_injection(g.phi, f.phi)
    psi = compose_injection(g.psi, f.psi)
    beta = {}
    for x in sorted_complement(phi):
        j = g.phi.preimage.get(x)
        if j is None:
            beta[x] = g.alpha(x)
        else:
            beta[x] = g.psi(f.alpha(j))
    return JMorphism(f.src, g.dst, phi, psi, PartialBijection.from_mapping(beta))


def count_hom(src: JObject, dst: JObject) -> int:
    """k!·l!/p! when k - m = l - n = p >= 0, else 0."""
    p = dst.m - src.m
    if p < 0 or dst.n - src.n != p:
        return 0
    return factorial(dst.m) * factorial(dst.n) // factorial(p)


@lru_cache(maxsize=None)
def enumerate_hom(src: JObject, dst: JObject) -> Tuple[JMorphism, ...]:
    p = dst.m - src.m
    if p < 0 or dst.n - src.n != p:
        return ()
    result = []
    for phi in enumerate_injections(src.m, dst.m):
        source = sorted_complement(phi)
        for psi in enumerate_injections(src.n, dst.n):
            target = sorted_complement(psi)
            for alpha in enumerate_bijections(source, target):
                result.append(JMorphism(src, dst, phi, psi, alpha))
    logger.debug(f"Hom({src}; {dst}) has {len(result)} morphisms")
    return tuple(result)


def tensor_obj(a: JObject, b: JObject) -> JObject:
    return JObject(a.m + b.m, a.n + b.n)


def tensor_mor(f: JMorphism, g: JMorphism) -> JMorphism:
    """Blockwise tensor; g's parts are offset by f's target sizes."""
    k1, l1 = f.dst.m, f.dst.n
    phi = Injection(
        f.src.m + g.src.m, k1 + g.dst.m,
        f.phi.images + tuple(k1 + v for v in g.phi.images),
    )
    psi = Injection(
        f.src.n + g.src.n, l1 + g.dst.n,
        f.psi.images + tuple(l1 + v for v in g.psi.images),
    )
    beta = dict(f.alpha.table)
    for x, y in g.alpha.table.items():
        beta[k1 + x] = l1 + y
    return JMorphism(tensor_obj(f.src, g.src), tensor_obj(f.dst, g.dst), phi, psi, PartialBijection.from_mapping(beta))


def symmetry_iso(a: JObject, b: JObject) -> JMorphism:
    """The symmetry a⊗b -> b⊗a."""
    return JMorphism(
        tensor_obj(a, b), tensor_obj(b, a),
        block_shuffle(a.m, b.m).injection(),
        block_shuffle(a.n, b.n).injection(),
        PartialBijection.empty(),
    )


def standard_map(i: int, n: int, p: int) -> JMorphism:
    """Ψ_{i,n,p}: (i,n) -> (i+p,n+p), front inclusions and i+t ↦ n+t."""
    return JMorphism(
        JObject(i, n), JObject(i + p, n + p),
        Injection.front(i, i + p), Injection.front(n, n + p),
        PartialBijection(
            tuple(range(i + 1, i + p + 1)),
            tuple(range(n + 1, n + p + 1)),
            tuple(range(n + 1, n + p + 1)),
        ),
    )


def iota_embed(g: Permutation, i: int, n: int) -> Tuple[Permutation, Permutation]:
    """ι_{i,n,p}(g): identity on the first i (resp. n) elements, g on the last p."""
    return Permutation.identity(i).direct_sum(g), Permutation.identity(n).direct_sum(g)


def decompose(f: JMorphism) -> Tuple[Permutation, Permutation, int]:
    """The canonical (a, b, p) with f = (a, b) ∘ Ψ_{i,n,p}; the tail follows the sorted complement."""
    i, n, p = f.src.m, f.src.n, f.shift
    tail = sorted_complement(f.phi)
    a = Permutation(i + p, f.phi.images + tail)
    b = Permutation(n + p, f.psi.images + tuple(f.alpha(c) for c in tail))
    return a, b, p


def recompose(a: Permutation, b: Permutation, p: int) -> JMorphism:
    return compose_j(permutation_pair(a, b), standard_map(a.degree - p, b.degree - p, p))


@dataclass(frozen=True)
class Window:
    """The full subcategory of 𝒥 on objects with m <= M and n <= N."""

    M: int
    N: int

    def __post_init__(self):
        if self.M < 0 or self.N < 0:
            raise ValidationError(f"Window ({self.M},{self.N}) has a negative bound", "window")

    def __contains__(self, a: JObject) -> bool:
        return 0 <= a.m <= self.M and 0 <= a.n <= self.N

    def __str__(self) -> str:
        return f"{self.M},{self.N}"

    def objects(self) -> List[JObject]:
        return [JObject(m, n) for m in range(self.M + 1) for n in range(self.N + 1)]

    def contains_morphism(self, f: JMorphism) -> bool:
        return f.src in self and f.dst in self

    def require(self, f: JMorphism) -> None:
        if not self.contains_morphism(f):
            raise WindowError(f"Morphism {f.key} is outside the window ({self})")

    def morphisms(self) -> Iterator[JMorphism]:
        for a in self.objects():
            for b in self.objects():
                yield from enumerate_hom(a, b)

    def composable_pairs(self) -> Iterator[Tuple[JMorphism, JMorphism]]:
        """Pairs (f, g) with g ∘ f defined, in enumeration order."""
        objects = self.objects()
        for a in objects:
            for b in objects:
                for f in enumerate_hom(a, b):
                    for c in objects:
                        for g in enumerate_hom(b, c):
                            yield f, g

    def to_json(self) -> List[int]:
        return [self.M, self.N]


def check_category_axioms(window: Window) -> Report:
    """Identity laws and associativity over every composable triple in the window."""
    report = Report(check="category_axioms", details={"window": window.to_json()})
    objects = window.objects()
    for f in window.morphisms():
        report.checked += 1
        if compose_j(identity_j(f.dst), f) != f or compose_j(f, identity_j(f.src)) != f:
            report.fail(law="identity", morphism=f.key)
    for f, g in window.composable_pairs():
        gf = compose_j(g, f)
        for d in objects:
            for h in enumerate_hom(g.dst, d):
                report.checked += 1
                if compose_j(h, gf) != compose_j(compose_j(h, g), f):
                    report.fail(law="associativity", f=f.key, g=g.key, h=h.key)
    return report


def check_hom_counts(bound: int) -> Report:
    """|enumerate_hom| = count_hom for all objects with entries <= bound."""
    report = Report(check="hom_counts", details={"bound": bound})
    objects = [JObject(m, n) for m in range(bound + 1) for n in range(bound + 1)]
    for a in objects:
        for b in objects:
            report.checked += 1
            listed = enumerate_hom(a, b)
            if len(listed) != count_hom(a, b) or len(set(listed)) != len(listed):
                report.fail(src=str(a), dst=str(b), enumerated=len(listed), closed_form=count_hom(a, b))
    return report


def check_decomposition(window: Window) -> Report:
    """
    Every morphism recomposes from its canonical (a, b, p), and the valid pairs
    (a', b') are exactly (a, b) ∘ ι(g) for g ∈ Σ_p.
    """
    report = Report(check="decomposition", details={"window": window.to_json()})
    for f in window.morphisms():
        report.checked += 1
        a, b, p = decompose(f)
        if recompose(a, b, p) != f:
            report.fail(law="recomposition", morphism=f.key)
            continue
        i, n = f.src.m, f.src.n
        psi = standard_map(i, n, p)
        valid = {
            (x.images, y.images)
            for x in enumerate_permutations(i + p)
            for y in enumerate_permutations(n + p)
            if compose_j(permutation_pair(x, y), psi) == f
        }
        coset = set()
        for g in enumerate_permutations(p):
            ga, gb = iota_embed(g, i, n)
            coset.add((a.compose(ga).images, b.compose(gb).images))
        if valid != coset or len(coset) != factorial(p):
            report.fail(law="sigma_p_ambiguity", morphism=f.key, valid=len(valid), coset=len(coset))
    return report


def check_monoidal_laws(window: Window) -> Report:
    """Interchange, unit object, symmetry involution, naturality and hexagon."""
    report = Report(check="monoidal_laws", details={"window": window.to_json()})
    unit = JObject(0, 0)
    morphisms = list(window.morphisms())
    for f in morphisms:
        report.checked += 1
        if tensor_mor(identity_j(unit), f) != f or tensor_mor(f, identity_j(unit)) != f:
            report.fail(law="unit", morphism=f.key)
    pairs = list(window.composable_pairs())
    for f1, g1 in pairs:
        for f2, g2 in pairs:
            report.checked += 1
            left = tensor_mor(compose_j(g1, f1), compose_j(g2, f2))
            right = compose_j(tensor_mor(g1, g2), tensor_mor(f1, f2))
            if left != right:
                report.fail(law="interchange", f1=f1.key, g1=g1.key, f2=f2.key, g2=g2.key)
    for a in window.objects():
        for b in window.objects():
            report.checked += 1
            if not compose_j(symmetry_iso(b, a), symmetry_iso(a, b)).is_identity():
                report.fail(law="symmetry", a=str(a), b=str(b))
    for f in morphisms:
        for g in morphisms:
            report.checked += 1
            left = compose_j(tensor_mor(g, f), symmetry_iso(f.src, g.src))
            right = compose_j(symmetry_iso(f.dst, g.dst), tensor_mor(f, g))
            if left != right:
                report.fail(law="naturality", f=f.key, g=g.key)
    small = [JObject(m, n) for m in range(2) for n in range(2)]
    for a in small:
        for b in small:
            for c in small:
                report.checked += 1
                left = symmetry_iso(a, tensor_obj(b, c))
                right = compose_j(
                    tensor_mor(identity_j(b), symmetry_iso(a, c)),
                    tensor_mor(symmetry_iso(a, b), identity_j(c)),
                )
                if left != right:
                    report.fail(law="hexagon", a=str(a), b=str(b), c=str(c))
    return report


def category_dot(window: Window) -> str:
    """DOT graph of the truncated category: objects as nodes, hom counts on edges."""
    lines = ["digraph J {", "  rankdir=LR;"]
    objects = window.objects()
    for a in objects:
        lines.append(f'  "{a}" [label="({a})"];')
    for a in objects:
        for b in objects:
            count = count_hom(a, b)
            if count and a != b:
                lines.append(f'  "{a}" -> "{b}" [label="{count}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
