"""Block permutation operators over digit tuples, and schedules of them.

A BlockOp is a bijection of the s^k digit tuples of length k, stored as a
dense table and numbered by its lexicographic (factorial-base) rank: index 0
is the identity and index (s^k)! - 1 is the componentwise complement.  An
OperatorSchedule is an eventually periodic sequence of BlockOps, one per
digit block, defining a single digit-permuted numeral system.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass
from functools import cached_property
from math import lcm

from .words import ParseError

MAX_TABLE = 1 << 20  # refuse dense tables beyond this many tuples


def tuple_rank(t: tuple[int, ...], s: int) -> int:
    """Lexicographic rank of a digit tuple: the base-s integer it spells."""
    r = 0
    for d in t:
        r = r * s + d
    return r


def tuple_unrank(r: int, s: int, k: int) -> tuple[int, ...]:
    """Inverse of tuple_rank."""
    out = [0] * k
    for i in range(k - 1, -1, -1):
        r, out[i] = divmod(r, s)
    return tuple(out)


def _check_size(s: int, k: int) -> int:
    if s < 2:
        raise ValueError(f"base must be >= 2, got {s}")
    if k < 1:
        raise ValueError(f"block length must be >= 1, got {k}")
    m = s ** k
    if m > MAX_TABLE:
        raise ValueError(f"table of {m} tuples exceeds the {MAX_TABLE} construction bound")
    return m


@dataclass(frozen=True)
class BlockOp:
    """A bijection of the digit tuples of length k over {0, ..., s-1}.

    ``table[j]`` is the image of the j-th tuple in lexicographic order.
    """

    s: int
    k: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        m = _check_size(self.s, self.k)
        if len(self.table) != m:
            raise ValueError(f"table must list {m} tuples, got {len(self.table)}")
        seen = [False] * m
        for t in self.table:
            if len(t) != self.k or any(not 0 <= d < self.s for d in t):
                raise ValueError(f"table entry {t} is not a length-{self.k} tuple over base {self.s}")
            r = tuple_rank(t, self.s)
            if seen[r]:
                raise ValueError("table is not a bijection: duplicate image tuple")
            seen[r] = True

    @cached_property
    def rank_map(self) -> tuple[int, ...]:
        """Image ranks: rank_map[j] = tuple_rank(table[j])."""
        return tuple(tuple_rank(t, self.s) for t in self.table)

    @cached_property
    def index(self) -> int:
        return index_of_perm(self)

    def __call__(self, t: tuple[int, ...]) -> tuple[int, ...]:
        return apply_block(self, t)

    @property
    def is_identity(self) -> bool:
        return all(r == j for j, r in enumerate(self.rank_map))

    @property
    def is_complement(self) -> bool:
        m = len(self.table)
        return all(r == m - 1 - j for j, r in enumerate(self.rank_map))

    def to_json(self) -> dict:
        # Index form is compact; fall back to the table when ranking is costly.
        if len(self.table) <= 4096:
            return {"s": self.s, "k": self.k, "index": str(self.index)}
        return {"s": self.s, "k": self.k, "table": [list(t) for t in self.table]}

    @classmethod
    def from_json(cls, obj: dict) -> "BlockOp":
        try:
            s, k = int(obj["s"]), int(obj["k"])
            if "index" in obj:
                return perm_from_index(s, k, int(obj["index"]))
            table = tuple(tuple(int(d) for d in t) for t in obj["table"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed operator object: {exc}") from exc
        return cls(s, k, table)


def identity_op(s: int, k: int) -> BlockOp:
    m = _check_size(s, k)
    return BlockOp(s, k, tuple(tuple_unrank(j, s, k) for j in range(m)))


def complement_op(s: int, k: int) -> BlockOp:
    """The componentwise complement t -> (s-1-t_1, ..., s-1-t_k)."""
    m = _check_size(s, k)
    return BlockOp(s, k, tuple(tuple_unrank(m - 1 - j, s, k) for j in range(m)))


def perm_from_index(s: int, k: int, i: int) -> BlockOp:
    """The i-th block permutation in factorial (Lehmer) numbering.

    Factorial-base digits of i are extracted by successive divisions, so
    (s^k)! itself is never materialised; the leftover quotient doubles as the
    range check.  Index 0 decodes to the identity table and (s^k)! - 1 to the
    componentwise complement (lexicographic reversal).
    """
    m = _check_size(s, k)
    if i < 0:
        raise ValueError(f"index must be nonnegative, got {i}")
    digits = []
    q = i
    for j in range(2, m + 1):
        q, d = divmod(q, j)
        digits.append(d)
    if q:
        raise ValueError(f"index {i} out of range for ({s}^{k})! permutations")
    avail = list(range(m))
    ranks = [avail.pop(c) for c in reversed(digits)] + avail
    return BlockOp(s, k, tuple(tuple_unrank(r, s, k) for r in ranks))


def index_of_perm(op: BlockOp) -> int:
    """Lexicographic rank of the permutation; inverse of perm_from_index."""
    m = len(op.table)
    idx = 0
    avail: list[int] = []
    # Process right to left counting smaller unused ranks (a reversed Lehmer walk).
    coeffs = []
    for r in reversed(op.rank_map):
        c = bisect_left(avail, r)
        insort(avail, r)
        coeffs.append(c)
    for j, c in enumerate(reversed(coeffs)):
        idx = idx * (m - j) + c
    return idx


def apply_block(op: BlockOp, t: tuple[int, ...]) -> tuple[int, ...]:
    """Image of one digit tuple under the operator."""
    if len(t) != op.k:
        raise ValueError(f"tuple length {len(t)} does not match block length {op.k}")
    if any(not 0 <= d < op.s for d in t):
        raise ValueError(f"tuple {t} has digits outside base {op.s}")
    return op.table[tuple_rank(t, op.s)]


def compose(a: BlockOp, b: BlockOp) -> BlockOp:
    """The operator t -> a(b(t))."""
    if (a.s, a.k) != (b.s, b.k):
        raise ValueError("cannot compose operators with different base or block length")
    return BlockOp(a.s, a.k, tuple(a.table[r] for r in b.rank_map))


def inverse(op: BlockOp) -> BlockOp:
    """The operator undoing op: compose(op, inverse(op)) is the identity."""
    m = len(op.table)
    inv = [None] * m
    for j, r in enumerate(op.rank_map):
        inv[r] = tuple_unrank(j, op.s, op.k)
    return BlockOp(op.s, op.k, tuple(inv))


def op_order(op: BlockOp) -> int:
    """Least t >= 1 with op^t the identity: lcm of the table's cycle lengths."""
    return lcm(*(len(c) for c in cycles(op)))


def cycles(op: BlockOp) -> list[list[int]]:
    """Cycle decomposition of the operator on tuple ranks."""
    m = len(op.table)
    seen = [False] * m
    out = []
    for start in range(m):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = op.rank_map[j]
        out.append(cyc)
    return out


@dataclass(frozen=True)
class OperatorSchedule:
    """Eventually periodic sequence of BlockOps, one per digit block."""

    s: int
    pre: tuple[BlockOp, ...]
    per: tuple[BlockOp, ...]

    def __post_init__(self) -> None:
        if not self.per:
            raise ValueError("schedule period must be nonempty")
        for op in (*self.pre, *self.per):
            if op.s != self.s:
                raise ValueError(f"operator base {op.s} does not match schedule base {self.s}")

    @classmethod
    def constant(cls, op: BlockOp) -> "OperatorSchedule":
        return cls(op.s, (), (op,))

    def op_for_block(self, n: int) -> BlockOp:
        """Operator applied to the n-th block, 1-indexed."""
        if n < 1:
            raise ValueError("blocks are 1-indexed")
        if n <= len(self.pre):
            return self.pre[n - 1]
        return self.per[(n - len(self.pre) - 1) % len(self.per)]

    @cached_property
    def pre_digits(self) -> int:
        """Digits covered by the schedule preperiod."""
        return sum(op.k for op in self.pre)

    @cached_property
    def per_digits(self) -> int:
        """Digits covered by one schedule period."""
        return sum(op.k for op in self.per)

    @cached_property
    def _pre_boundaries(self) -> frozenset[int]:
        total, out = 0, {0}
        for op in self.pre:
            total += op.k
            out.add(total)
        return frozenset(out)

    @cached_property
    def _per_boundaries(self) -> frozenset[int]:
        total, out = 0, {0}
        for op in self.per:
            total += op.k
            out.add(total % self.per_digits)
        return frozenset(out)

    def is_boundary(self, m: int) -> bool:
        """Whether digit count m is a block boundary (0 counts)."""
        if m < 0:
            return False
        if m <= self.pre_digits:
            return m in self._pre_boundaries
        return (m - self.pre_digits) % self.per_digits in self._per_boundaries

    def boundaries_upto(self, limit: int) -> list[int]:
        """Positive block boundaries <= limit, ascending."""
        out = []
        total, n = 0, 1
        while True:
            total += self.op_for_block(n).k
            if total > limit:
                return out
            out.append(total)
            n += 1

    def blocks_covering(self, ndigits: int) -> list[BlockOp]:
        """The leading blocks that tile exactly ndigits (must be a boundary)."""
        out = []
        total, n = 0, 1
        while total < ndigits:
            op = self.op_for_block(n)
            out.append(op)
            total += op.k
            n += 1
        if total != ndigits:
            raise ValueError(f"{ndigits} digits is not a block boundary of the schedule")
        return out

    def apply_prefix(self, digits: tuple[int, ...]) -> tuple[int, ...]:
        """Blockwise image of a block-aligned digit prefix."""
        out: list[int] = []
        pos = 0
        for op in self.blocks_covering(len(digits)):
            out.extend(op(tuple(digits[pos:pos + op.k])))
            pos += op.k
        return tuple(out)

    def inverse(self) -> "OperatorSchedule":
        return OperatorSchedule(self.s, tuple(inverse(op) for op in self.pre),
                                tuple(inverse(op) for op in self.per))

    @property
    def all_identity(self) -> bool:
        return all(op.is_identity for op in (*self.pre, *self.per))

    @property
    def all_complement(self) -> bool:
        return all(op.is_complement for op in (*self.pre, *self.per))

    @property
    def anchors_cofinitely(self) -> bool:
        """Whether all but finitely many blocks are identity or complement."""
        return all(op.is_identity or op.is_complement for op in self.per)

    def to_json(self) -> dict:
        return {"s": self.s, "pre": [op.to_json() for op in self.pre],
                "per": [op.to_json() for op in self.per]}

    @classmethod
    def from_json(cls, obj: dict) -> "OperatorSchedule":
        try:
            s = int(obj["s"])
            pre = tuple(BlockOp.from_json(o) for o in obj.get("pre", []))
            per = tuple(BlockOp.from_json(o) for o in obj["per"])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"malformed schedule object: {exc}") from exc
        return cls(s, pre, per)
