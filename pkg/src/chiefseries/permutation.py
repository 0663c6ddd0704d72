"""Permutations of {0, ..., n-1} stored as explicit image tuples."""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence


class Permutation:
    """A bijection of {0, ..., n-1}, immutable and hashable.

    ``images[i]`` is the image of point ``i``.  Composition follows function
    application: ``(a * b)(x) == a(b(x))``.  Permutations are totally ordered
    by ``(degree, images)`` so that every element enumeration in the library
    is reproducible.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(x) for x in images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a bijection of 0..{len(imgs) - 1}: {imgs!r}")
        self.images = imgs
        self._hash = hash(imgs)

    @classmethod
    def _wrap(cls, images: tuple[int, ...]) -> "Permutation":
        # Internal fast path: images already known to be a bijection.
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._wrap(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> "Permutation":
        images = list(range(degree))
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < degree:
                    raise ValueError(f"point {point} out of range for degree {degree}")
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"repeated point in cycle {tuple(cycle)}")
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("cannot compose permutations of different degrees")
        images = self.images
        return Permutation._wrap(tuple(map(images.__getitem__, other.images)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation._wrap(tuple(inv))

    def conjugate_by(self, g: "Permutation") -> "Permutation":
        """Return g * self * g^-1."""
        return g * self * g.inverse()

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def order(self) -> int:
        power = self
        n = 1
        while not power.is_identity():
            power = power * self
            n += 1
        return n

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return (len(self.images), self.images) < (len(other.images), other.images)

    def __le__(self, other: "Permutation") -> bool:
        return (len(self.images), self.images) <= (len(other.images), other.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)!r})"

    def __str__(self) -> str:
        return self.cycle_string()


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse an image array ``[1, 0, 2]`` or cycle string ``(0 1)(2 3 4)``.

    ``()`` denotes the identity.  Raises ValueError on malformed input,
    non-bijective images, or out-of-range points.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation literal")
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"unterminated image array: {text!r}")
        body = text[1:-1].strip()
        parts = [p for p in re.split(r"[,\s]+", body) if p] if body else []
        try:
            images = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"non-integer entry in image array: {text!r}") from None
        if len(images) != degree:
            raise ValueError(
                f"image array has {len(images)} entries, expected {degree}"
            )
        return Permutation(images)
    if text.startswith("("):
        stripped = _CYCLE_RE.sub("", text)
        if stripped.strip():
            raise ValueError(f"malformed cycle string: {text!r}")
        if text.count("(") != len(_CYCLE_RE.findall(text)):
            raise ValueError(f"unbalanced parentheses in cycle string: {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(text):
            parts = [p for p in re.split(r"[,\s]+", body.strip()) if p]
            if not parts:
                continue
            try:
                cycles.append(tuple(int(p) for p in parts))
            except ValueError:
                raise ValueError(f"non-integer point in cycle string: {text!r}") from None
        return Permutation.from_cycles(cycles, degree)
    raise ValueError(f"unrecognized permutation literal: {text!r}")


def iter_permutations(degree: int) -> Iterator[Permutation]:
    """All permutations of the given degree in lexicographic order."""
    import itertools

    for images in itertools.permutations(range(degree)):
        yield Permutation._wrap(images)
