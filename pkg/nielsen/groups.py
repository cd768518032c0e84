"""Small finite groups as indexed multiplication tables.

Element 0 is always the identity and mult[a][b] means "a first, then b".
Three families are needed: S3, S4 and X_N = N^2:S3, the affine maps x -> sigma(x) + v
of the zero-sum module M = {(a, b, c) in (Z/N)^3 : a + b + c = 0}.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import deque
from typing import Iterable, Sequence

from common.constants import GROUP_KIND
from common.errors import HypothesisViolation

__all__: tuple[str, ...] = (
    "GroupTable",
    "build_group",
    "sym_elements",
    "S3_12",
    "S3_23",
)

log = logging.getLogger(__name__)

Entries = tuple[int, ...]


def sym_elements(n: int) -> list[tuple[int, ...]]:
    """Elements of S_n as image tuples, identity first, in itertools order."""
    return list(itertools.permutations(range(n)))


# sym3 indices of the transpositions (1 2) and (2 3), 1-based cycle notation
S3_12: int = sym_elements(3).index((1, 0, 2))
S3_23: int = sym_elements(3).index((0, 2, 1))


def _cycle_label(images: Sequence[int]) -> str:
    """1-based cycle notation, e.g. `(1 2)`, `()` for the identity."""
    seen: set[int] = set()
    parts = []
    for start in range(len(images)):
        if start in seen or images[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        point = images[start]
        while point != start:
            seen.add(point)
            cycle.append(point)
            point = images[point]
        parts.append("(" + " ".join(str(x + 1) for x in cycle) + ")")
    return "".join(parts) or "()"


class GroupTable:
    """A finite group by multiplication table, with its branch-cycle class.

    `to_s3[x]` is the image of x in S3 (as an index of the sym3 table) and
    `section[s]` a fixed admissible lift of the S3 transposition s.
    `automorphisms` are extra element maps, preserving the admissible class and
    `to_s3`, that identify tuples on top of simultaneous conjugation.
    """

    def __init__(
        self,
        kind: str,
        mult: Sequence[Sequence[int]],
        labels: Sequence[str],
        admissible: Iterable[int],
        to_s3: Sequence[int],
        section: dict[int, int],
        automorphisms: Iterable[Sequence[int]] = (),
    ):
        self.kind: str = str(kind)
        self.mult: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in mult)
        self.order: int = len(self.mult)
        self.labels: tuple[str, ...] = tuple(labels)
        self.admissible: tuple[int, ...] = tuple(sorted(set(admissible)))
        self.admissible_set: frozenset[int] = frozenset(self.admissible)
        self.to_s3: tuple[int, ...] = tuple(to_s3)
        self.section: dict[int, int] = dict(section)
        self.automorphisms: tuple[tuple[int, ...], ...] = tuple(tuple(alpha) for alpha in automorphisms)

        self.inv: tuple[int, ...] = tuple(row.index(0) for row in self.mult)
        # conj[x][a] = x^-1 a x
        self.conj: tuple[tuple[int, ...], ...] = tuple(
            tuple(self.mult[self.mult[self.inv[x]][a]][x] for a in range(self.order)) for x in range(self.order)
        )
        self.class_min: tuple[int, ...] = tuple(
            min(self.conj[x][a] for x in range(self.order)) for a in range(self.order)
        )
        # conjugators sending a to the least element of its class
        self.minimizers: tuple[tuple[int, ...], ...] = tuple(
            tuple(x for x in range(self.order) if self.conj[x][a] == self.class_min[a]) for a in range(self.order)
        )
        self._validate()

    def _validate(self) -> None:
        if any(self.mult[0][a] != a or self.mult[a][0] != a for a in range(self.order)):
            raise HypothesisViolation(f"{self.kind}: element 0 is not the identity")
        # associativity, spot-checked on a deterministic slice
        step = max(1, self.order // 12)
        for a, b, c in itertools.product(range(0, self.order, step), repeat=3):
            if self.mult[self.mult[a][b]][c] != self.mult[a][self.mult[b][c]]:
                raise HypothesisViolation(f"{self.kind}: table is not associative at {a}, {b}, {c}")
        for a in self.admissible:
            if any(self.conj[x][a] not in self.admissible_set for x in range(self.order)):
                raise HypothesisViolation(f"{self.kind}: admissible class is not closed under conjugation")
        for alpha in self.automorphisms:
            if sorted(alpha) != list(range(self.order)) or alpha[0] != 0:
                raise HypothesisViolation(f"{self.kind}: automorphism is not a bijection fixing the identity")
            pairs = itertools.product(range(0, self.order, step), repeat=2)
            if any(alpha[self.mult[a][b]] != self.mult[alpha[a]][alpha[b]] for a, b in pairs):
                raise HypothesisViolation(f"{self.kind}: automorphism does not respect the multiplication")
            if any(alpha[a] not in self.admissible_set or self.to_s3[alpha[a]] != self.to_s3[a] for a in self.admissible):
                raise HypothesisViolation(f"{self.kind}: automorphism moves the admissible class or its S3 image")

    def product(self, entries: Iterable[int]) -> int:
        result = 0
        for a in entries:
            result = self.mult[result][a]
        return result

    def conjugate(self, a: int, by: int) -> int:
        """by^-1 a by"""
        return self.conj[by][a]

    def conjugate_tuple(self, entries: Entries, by: int) -> Entries:
        return tuple(map(self.conj[by].__getitem__, entries))

    def generated_order(self, entries: Iterable[int]) -> int:
        gens = sorted(set(entries))
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.mult[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen)

    def generates(self, entries: Iterable[int]) -> bool:
        return self.generated_order(entries) == self.order

    def is_admissible(self, entries: Entries) -> bool:
        """Branch-cycle entries, product 1, generating the whole group."""
        return (
            all(a in self.admissible_set for a in entries)
            and self.product(entries) == 0
            and self.generates(entries)
        )

    def _least_conjugate(self, entries: Entries) -> Entries:
        conj = self.conj
        return min(tuple(map(conj[x].__getitem__, entries)) for x in self.minimizers[entries[0]])

    def canonical(self, entries: Entries) -> Entries:
        """Least tuple equivalent under simultaneous conjugation and the extra automorphisms.

        Only conjugators that minimise the first entry are searched.
        """
        best = self._least_conjugate(entries)
        for alpha in self.automorphisms:
            best = min(best, self._least_conjugate(tuple(map(alpha.__getitem__, entries))))
        return best

    def move(self, entries: Entries, i: int, forward: bool = True) -> Entries:
        """Hurwitz move at 1-based position i on a raw entry tuple."""
        a, b = entries[i - 1], entries[i]
        if forward:
            pair = (b, self.conj[b][a])
        else:
            pair = (self.conj[self.inv[a]][b], a)
        return entries[: i - 1] + pair + entries[i + 1 :]

    def lifts(self, s3_element: int) -> list[int]:
        """Admissible elements over the given S3 element, in index order."""
        return [a for a in self.admissible if self.to_s3[a] == s3_element]

    def label(self, entries: Iterable[int]) -> str:
        return ", ".join(self.labels[a] for a in entries)

    def __repr__(self) -> str:
        return f"<GroupTable {self.kind} order={self.order} admissible={len(self.admissible)}>"


def _sym_mult(elements: Sequence[tuple[int, ...]]) -> list[list[int]]:
    index = {p: i for i, p in enumerate(elements)}
    return [[index[tuple(q[x] for x in p)] for q in elements] for p in elements]


def _transpositions(elements: Sequence[tuple[int, ...]]) -> list[int]:
    return [i for i, p in enumerate(elements) if sum(x != y for x, y in enumerate(p)) == 2]


def _sym3() -> GroupTable:
    elements = sym_elements(3)
    admissible = _transpositions(elements)
    return GroupTable(
        kind=GROUP_KIND.SYM3,
        mult=_sym_mult(elements),
        labels=[_cycle_label(p) for p in elements],
        admissible=admissible,
        to_s3=range(len(elements)),
        section={a: a for a in admissible},
    )


def _pairing_label(a: int, b: int) -> int:
    """Label of the pairing of {0,1,2,3} that contains the pair {a, b}: the partner of 3 in it."""
    if 3 in (a, b):
        return a + b - 3
    return 3 - a - b


def _sym4() -> GroupTable:
    # S4/V4 = S3 through the action on the three pairings; label k pairs k with 3
    elements = sym_elements(4)
    s3_index = {p: i for i, p in enumerate(sym_elements(3))}
    to_s3 = [s3_index[tuple(_pairing_label(p[k], p[3]) for k in range(3))] for p in elements]
    admissible = _transpositions(elements)
    index = {p: i for i, p in enumerate(elements)}
    section = {s3_index[p]: index[p + (3,)] for p in sym_elements(3) if p + (3,) in index}
    return GroupTable(
        kind=GROUP_KIND.SYM4,
        mult=_sym_mult(elements),
        labels=[_cycle_label(p) for p in elements],
        admissible=admissible,
        to_s3=to_s3,
        section={s: a for s, a in section.items() if a in admissible},
    )


def _act(sigma: Sequence[int], vector: Sequence[int]) -> tuple[int, ...]:
    """(sigma . x)_{sigma(i)} = x_i"""
    out = [0, 0, 0]
    for i in range(3):
        out[sigma[i]] = vector[i]
    return tuple(out)


def _xn(modulus: int) -> GroupTable:
    if modulus < 2:
        raise HypothesisViolation(f"X_N needs N >= 2, got {modulus}")
    perms = sym_elements(3)
    s3_mult = _sym_mult(perms)
    vectors = [(a, b, (-a - b) % modulus) for a in range(modulus) for b in range(modulus)]
    size = len(vectors)

    def index(sigma: int, vector: Sequence[int]) -> int:
        return sigma * size + (vector[0] % modulus) * modulus + vector[1] % modulus

    mult = []
    for sigma, v in itertools.product(range(6), vectors):
        row = []
        for tau, w in itertools.product(range(6), vectors):
            moved = _act(perms[tau], v)
            row.append(index(s3_mult[sigma][tau], [moved[k] + w[k] for k in range(3)]))
        mult.append(row)

    admissible = []
    for sigma, v in itertools.product(range(6), vectors):
        if sum(x != y for x, y in enumerate(perms[sigma])) != 2:
            continue
        moved = _act(perms[sigma], v)
        if all((moved[k] + v[k]) % modulus == 0 for k in range(3)):
            admissible.append(index(sigma, v))

    labels = [f"{_cycle_label(perms[sigma])}+({a},{b},{c})" for sigma, (a, b, c) in itertools.product(range(6), vectors)]
    to_s3 = [sigma for sigma in range(6) for _ in range(size)]
    section = {sigma: sigma * size for sigma in _transpositions(perms)}
    # unit scalars on the N^2 kernel: tuples differing by one are the same cover
    automorphisms = [
        [index(sigma, [unit * x for x in v]) for sigma, v in itertools.product(range(6), vectors)]
        for unit in range(2, modulus)
        if math.gcd(unit, modulus) == 1
    ]
    return GroupTable(
        kind=f"{GROUP_KIND.XN}{modulus}",
        mult=mult,
        labels=labels,
        admissible=admissible,
        to_s3=to_s3,
        section=section,
        automorphisms=automorphisms,
    )


def build_group(kind: str, modulus: int | None = None) -> GroupTable:
    """`sym3`, `sym4`, or `xn` with a modulus (also accepted as `xn5`)."""
    if kind.startswith(GROUP_KIND.XN) and kind != GROUP_KIND.XN:
        modulus = int(kind[len(GROUP_KIND.XN) :])
        kind = GROUP_KIND.XN
    match kind:
        case GROUP_KIND.SYM3:
            table = _sym3()
        case GROUP_KIND.SYM4:
            table = _sym4()
        case GROUP_KIND.XN:
            if modulus is None:
                raise HypothesisViolation("the xn group needs a modulus N")
            table = _xn(modulus)
        case _:
            raise HypothesisViolation(f"unknown group kind {kind!r}")
    log.debug("built %r", table)
    return table
