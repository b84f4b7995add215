"""Paths, walks and stacks along a braid, and the operator polynomial C.

A path starts at the bottom of a strand and follows it upward; whenever it
begins to cross over another strand it may jump down instead.  A walk is a
set J of starting strands (never strand 1), a permutation of J, and one
path per start.  C is the sum of the walk weights; the colored Jones
series is sum_n E_N(C^n), which truncates at n = (m-1)(N-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Mapping

from .braid import BraidWord, DiagramCell, NotAKnotError, is_knot_closure
from .laurent import LaurentPolynomial
from .qops import _SWAP_EXP, CrossingWord, _eval_base, nf_mul, normal_order


@dataclass(frozen=True)
class Path:
    """A single bottom-to-top traversal with its cell footprint.

    letters holds (crossing index, letter) pairs, ascending by index; a path
    picks up at most one letter per crossing.
    """

    start: int
    end: int
    footprint: tuple[DiagramCell, ...]
    letters: tuple[tuple[int, str], ...]

    @property
    def letter_map(self) -> dict[int, str]:
        return dict(self.letters)

    def cells(self) -> frozenset[DiagramCell]:
        return frozenset(self.footprint)

    def to_json(self) -> dict:
        return {
            "start": self.start,
            "end": self.end,
            "letters": {str(j): letter for j, letter in self.letters},
            "footprint": [list(cell) for cell in self.footprint],
        }


def enumerate_paths(b: BraidWord, start: int) -> list[Path]:
    """All paths from `start`, in depth-first order (jump before over)."""
    if not 1 <= start <= b.strands:
        raise ValueError(f"start strand {start} out of range")
    k = len(b)
    results: list[Path] = []

    def walk(gap: int, pos: int, cells: list[DiagramCell], letters: list):
        if gap == 0:
            results.append(
                Path(start, pos, tuple(cells), tuple(sorted(letters)))
            )
            return
        j = gap  # crossing between gap `gap` and gap `gap - 1`
        l, sign = b.letters[j - 1]
        if sign > 0:
            if pos == l:
                options = (("a", l), ("c", l + 1))
            elif pos == l + 1:
                options = (("b", l),)
            else:
                options = ((None, pos),)
        else:
            if pos == l + 1:
                options = (("a", l + 1), ("c", l))
            elif pos == l:
                options = (("b", l + 1),)
            else:
                options = ((None, pos),)
        for letter, nxt in options:
            cells.append((gap - 1, nxt))
            if letter is not None:
                letters.append((j, letter))
            walk(gap - 1, nxt, cells, letters)
            if letter is not None:
                letters.pop()
            cells.pop()

    walk(k, start, [(k, start)], [])
    return results


@dataclass(frozen=True)
class Walk:
    """A collection of paths with distinct starts (ascending) permuting J."""

    paths: tuple[Path, ...]

    def __post_init__(self):
        starts = [p.start for p in self.paths]
        if sorted(set(starts)) != starts:
            raise ValueError("walk paths must have distinct, ascending starts")
        if sorted(p.end for p in self.paths) != starts:
            raise ValueError("walk path endpoints must permute the start set")

    @property
    def J(self) -> tuple[int, ...]:
        return tuple(p.start for p in self.paths)

    @property
    def pi(self) -> dict[int, int]:
        return {p.start: p.end for p in self.paths}

    def inversions(self) -> int:
        ends = [p.end for p in self.paths]
        return sum(
            1
            for i in range(len(ends))
            for j in range(i + 1, len(ends))
            if ends[i] > ends[j]
        )

    def is_simple(self) -> bool:
        """No two paths traverse the same diagram cell."""
        seen: set[DiagramCell] = set()
        for p in self.paths:
            cells = p.cells()
            if seen & cells:
                return False
            seen |= cells
        return True

    def to_json(self) -> dict:
        return {
            "J": list(self.J),
            "pi": {str(j): e for j, e in self.pi.items()},
            "paths": [p.to_json() for p in self.paths],
        }


def enumerate_walks(b: BraidWord, simple_only: bool) -> list[Walk]:
    """All walks with nonempty J contained in {2, ..., m}.

    The empty braid word is excluded by convention; its series is the
    constant 1 (unknot normalization).
    """
    m = b.strands
    if len(b) == 0 or m < 2:
        return []
    by_pair: dict[tuple[int, int], list[Path]] = {}
    for j in range(2, m + 1):
        for path in enumerate_paths(b, j):
            if path.end >= 2:
                by_pair.setdefault((j, path.end), []).append(path)
    walks: list[Walk] = []
    candidates = range(2, m + 1)
    for size in range(1, m):
        for J in combinations(candidates, size):
            for ends in permutations(J):
                pools = [by_pair.get(pair, []) for pair in zip(J, ends)]
                if not all(pools):
                    continue
                for combo in product(*pools):
                    walk = Walk(tuple(combo))
                    if simple_only and not walk.is_simple():
                        continue
                    walks.append(walk)
    return walks


@dataclass
class OperatorMonomial:
    """A global Laurent coefficient times one crossing word per crossing."""

    coeff: LaurentPolynomial
    words: dict[int, CrossingWord]

    def __eq__(self, other):
        if not isinstance(other, OperatorMonomial):
            return NotImplemented
        mine = {j: w for j, w in self.words.items() if w.word}
        theirs = {j: w for j, w in other.words.items() if w.word}
        return self.coeff == other.coeff and mine == theirs


def walk_weight(walk: Walk, b: BraidWord) -> OperatorMonomial:
    """The weight (-1)(-q)^(|J| + inv) times the ordered path letters.

    At each crossing the letters of the paths are appended in ascending
    start order, leftmost path first.
    """
    e = len(walk.paths) + walk.inversions()
    coeff = LaurentPolynomial.term(e, (-1) ** (e + 1))
    letters: dict[int, list[str]] = {}
    for path in walk.paths:
        for j, letter in path.letters:
            letters.setdefault(j, []).append(letter)
    words = {
        j: CrossingWord(b.crossing(j)[1], "".join(parts))
        for j, parts in letters.items()
    }
    return OperatorMonomial(coeff, words)


# Canonical key of an operator monomial: a tuple of (crossing index, sign,
# s, r, d) entries sorted by crossing index, with all q-shifts folded into
# the coefficient.  This makes operator equality decidable (PBW basis per
# crossing, tensor across crossings).
CanonicalKey = tuple[tuple[int, int, int, int, int], ...]


class OperatorPolynomial:
    """A formal sum of canonical operator monomials."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[CanonicalKey, LaurentPolynomial] | None = None):
        self._terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "OperatorPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "OperatorPolynomial":
        return cls({(): LaurentPolynomial.one()})

    @classmethod
    def from_monomial(cls, mono: OperatorMonomial) -> "OperatorPolynomial":
        shift = 0
        key = []
        for j in sorted(mono.words):
            cw = mono.words[j]
            if not cw.word:
                continue
            nf = normal_order(cw)
            shift += nf.q_shift
            key.append((j, cw.sign, nf.s, nf.r, nf.d))
        return cls({tuple(key): mono.coeff.shifted(shift)})

    @property
    def terms(self) -> dict[CanonicalKey, LaurentPolynomial]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OperatorPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "OperatorPolynomial") -> "OperatorPolynomial":
        out = dict(self._terms)
        for k, c in other._terms.items():
            n = out.get(k)
            n = c if n is None else n + c
            if n:
                out[k] = n
            else:
                out.pop(k, None)
        result = OperatorPolynomial.__new__(OperatorPolynomial)
        result._terms = out
        return result

    def __sub__(self, other: "OperatorPolynomial") -> "OperatorPolynomial":
        return self + other.scaled(LaurentPolynomial.term(0, -1))

    def __mul__(self, other: "OperatorPolynomial") -> "OperatorPolynomial":
        return op_mul(self, other)

    def scaled(self, factor: LaurentPolynomial) -> "OperatorPolynomial":
        return OperatorPolynomial(
            {k: c * factor for k, c in self._terms.items()}
        )

    def to_json(self) -> list[dict]:
        dump = []
        for key in sorted(self._terms):
            dump.append(
                {
                    "coeff": self._terms[key].to_json(),
                    "crossings": [
                        {"crossing": j, "sign": sign, "b": s, "c": r, "a": d}
                        for j, sign, s, r, d in key
                    ],
                }
            )
        return dump


@lru_cache(maxsize=1 << 18)
def _merge_keys(k1: CanonicalKey, k2: CanonicalKey) -> tuple[CanonicalKey, int]:
    """Merge two canonical keys (left operand first); returns (key, q-shift)."""
    out = []
    shift = 0
    i1 = i2 = 0
    n1, n2 = len(k1), len(k2)
    while i1 < n1 and i2 < n2:
        e1, e2 = k1[i1], k2[i2]
        if e1[0] < e2[0]:
            out.append(e1)
            i1 += 1
        elif e1[0] > e2[0]:
            out.append(e2)
            i2 += 1
        else:
            j, sign, s1, r1, d1 = e1
            _, sign2, s2, r2, d2 = e2
            if sign2 != sign:
                raise ValueError(f"sign mismatch at crossing {j}")
            swap = _SWAP_EXP[sign]
            shift += (
                r1 * s2 * swap[("c", "b")]
                + d1 * s2 * swap[("a", "b")]
                + d1 * r2 * swap[("a", "c")]
            )
            out.append((j, sign, s1 + s2, r1 + r2, d1 + d2))
            i1 += 1
            i2 += 1
    out.extend(k1[i1:])
    out.extend(k2[i2:])
    return tuple(out), shift


def op_mul(p: OperatorPolynomial, q: OperatorPolynomial) -> OperatorPolynomial:
    """Bilinear product; per-crossing words concatenate, left operand first."""
    out: dict[CanonicalKey, LaurentPolynomial] = {}
    for k1, c1 in p._terms.items():
        for k2, c2 in q._terms.items():
            key, shift = _merge_keys(k1, k2)
            c = (c1 * c2).shifted(shift) if shift else c1 * c2
            n = out.get(key)
            n = c if n is None else n + c
            if n:
                out[key] = n
            else:
                out.pop(key, None)
    result = OperatorPolynomial.__new__(OperatorPolynomial)
    result._terms = out
    return result


def walk_sum_C(b: BraidWord, simple_only: bool = True) -> OperatorPolynomial:
    """The polynomial C: sum of the weights of walks with J in {2..m}."""
    total = OperatorPolynomial.zero()
    for walk in enumerate_walks(b, simple_only):
        total = total + OperatorPolynomial.from_monomial(walk_weight(walk, b))
    return total


def evaluate_monomial(mono: OperatorMonomial, N: int) -> LaurentPolynomial:
    """E_N of a single monomial: the coefficient times the per-crossing values."""
    from .qops import eval_crossing

    result = mono.coeff
    for j in sorted(mono.words):
        cw = mono.words[j]
        result = result * eval_crossing(normal_order(cw), cw.sign, N)
        if not result:
            break
    return result


def evaluate_polynomial(p: OperatorPolynomial, N: int) -> LaurentPolynomial:
    if N < 2:
        raise ValueError("color N must be at least 2")
    total = LaurentPolynomial.zero()
    for key, coeff in p._terms.items():
        value = coeff
        for _j, sign, _s, r, d in key:
            value = value * _eval_base(sign, r, d, N)
            if not value:
                break
        total = total + value
    return total


def series_terms(
    C: OperatorPolynomial, b: BraidWord, N: int, n_max: int
) -> list[LaurentPolynomial]:
    """[E_N(C^0), E_N(C^1), ..., E_N(C^n_max)]."""
    terms = [LaurentPolynomial.one()]
    power = OperatorPolynomial.one()
    for _ in range(n_max):
        power = op_mul(power, C)
        terms.append(evaluate_polynomial(power, N))
        if not power:
            terms.extend(
                LaurentPolynomial.zero() for _ in range(n_max - len(terms) + 1)
            )
            break
    return terms


def evaluate_series(
    C: OperatorPolynomial, b: BraidWord, N: int
) -> LaurentPolynomial:
    """Sum of E_N(C^n) for n = 0 .. (m-1)(N-1).

    Beyond that bound every stack reuses some bottom cell N times, so the
    evaluation vanishes (pigeonhole over the bottom cells of strands 2..m).
    """
    if not is_knot_closure(b):
        raise NotAKnotError("closure of the braid is not a knot")
    if N < 2:
        raise ValueError("color N must be at least 2")
    if len(b) == 0:
        return LaurentPolynomial.one()
    n_max = (b.strands - 1) * (N - 1)
    total = LaurentPolynomial.zero()
    for term in series_terms(C, b, N, n_max):
        total = total + term
    return total


def cancellation_pairing(b: BraidWord) -> bool:
    """Check that nonsimple walks cancel in pairs.

    Verifies that the all-walks C equals the simple-walks C canonically,
    and that the number of nonsimple walks is even.
    """
    all_walks = enumerate_walks(b, simple_only=False)
    simple = [w for w in all_walks if w.is_simple()]
    if (len(all_walks) - len(simple)) % 2 != 0:
        return False
    total_all = OperatorPolynomial.zero()
    for walk in all_walks:
        total_all = total_all + OperatorPolynomial.from_monomial(walk_weight(walk, b))
    total_simple = OperatorPolynomial.zero()
    for walk in simple:
        total_simple = total_simple + OperatorPolynomial.from_monomial(
            walk_weight(walk, b)
        )
    return total_all == total_simple
