"""Braid words on a surface, their relator families, and the degree-zero
evaluation into the wreath product pi_1(Sigma)^n |x S_n.

Generators: ``s1 .. s{n-1}`` are the disk half-twists, while ``a_r, b_r,
z_k`` denote the fundamental-group loops carried by the first strand.  The
relator families follow the usual presentation of the surface braid group:

* ``2.i``   the two classical braid relations among the ``s_i``;
* ``2.ii``  commutation of loops with distant half-twists and with
  ``s_1``-conjugated loops (four sub-families, indexed exactly as in the
  presentation);
* ``2.iii`` the handle relation ``[a_r, s1^-1 b_r s1^-1] = s1^2`` (g > 0);
* ``2.iv``  the closed-surface relation tying the full boundary product of
  the handles to ``s1 .. s{n-2} s{n-1}^2 s{n-2} .. s1`` (p = 0 only).

The degree-zero evaluation ``wreath_image`` sends ``s_i`` to a pure strand
transposition and each loop to a bead on strand one; it annihilates every
relator, which is checked exhaustively in the tests.  ``bounded_equal`` is
a bounded breadth-first search over relator moves: sound when it answers
Equal (the move sequence is replayed and verified), inconclusive otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DimensionMismatchError,
    InvalidGeneratorError,
    ParameterError,
    SurfbraidError,
)
from .surface import (
    SurfaceParams,
    Word,
    format_word,
    free_reduce,
    inverse_word,
    parse_word,
    pi1_mul,
    pi1_normalize,
    word_sort_key,
)

BraidWord = tuple  # letters (kind, index, sign), kind in {"s", "a", "b", "z"}

BRAID_KINDS = ("s", "a", "b", "z")


def parse_braid_word(text: str, s: SurfaceParams) -> BraidWord:
    word = parse_word(text, kinds=BRAID_KINDS)
    check_braid_word(word, s)
    return word


def check_braid_word(word: BraidWord, s: SurfaceParams) -> None:
    for kind, idx, sign in word:
        if kind == "s":
            if not 1 <= idx <= s.strands - 1:
                raise InvalidGeneratorError(
                    f"s{idx} needs {idx + 1} strands but only {s.strands} present"
                )
        elif not s.pi1_letter_valid((kind, idx, sign)):
            raise InvalidGeneratorError(
                f"loop letter {format_word(((kind, idx, sign),))} does not exist "
                f"on genus {s.genus}, boundary {s.boundary}"
            )


# ---------------------------------------------------------------------------
# permutations (0-based tuples; p[i] is the image of i)
# ---------------------------------------------------------------------------


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def transposition_perm(n: int, i: int) -> tuple[int, ...]:
    """Swap of strands i and i+1 (1-based i, as in the generator s_i)."""
    if not 1 <= i <= n - 1:
        raise InvalidGeneratorError(f"transposition index {i} out of range for {n} strands")
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def compose_perms(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Left-to-right composition: (p * q)(x) = q(p(x))."""
    if len(p) != len(q):
        raise DimensionMismatchError("permutations act on different strand counts")
    return tuple(q[x] for x in p)


def invert_perm(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def perm_sign(p: tuple[int, ...]) -> int:
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def format_perm_cycles(p: tuple[int, ...]) -> str:
    """1-based cycle notation with fixed points shown, e.g. ``(1 2)(3)``."""
    seen = [False] * len(p)
    parts = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = p[j]
        parts.append("(" + " ".join(str(x) for x in cyc) + ")")
    return "".join(parts) if parts else "()"


def parse_perm_cycles(text: str, n: int) -> tuple[int, ...]:
    """Parse cycle notation like ``(1 3 2)(4)``; unlisted points stay fixed."""
    from .errors import ParseError

    text = text.strip()
    if text in ("", "()", "id"):
        return identity_perm(n)
    if text.count("(") != text.count(")") or not text.startswith("("):
        raise ParseError(f"bad cycle notation {text!r}")
    out = list(range(n))
    used = set()
    for chunk in text.strip(")").split(")"):
        chunk = chunk.lstrip("(").strip()
        if not chunk:
            raise ParseError(f"empty cycle in {text!r}")
        try:
            cyc = [int(t) for t in chunk.replace(",", " ").split()]
        except ValueError as exc:
            raise ParseError(f"bad cycle entry in {text!r}") from exc
        for x in cyc:
            if not 1 <= x <= n:
                raise ParseError(f"cycle entry {x} out of range 1..{n}")
            if x in used:
                raise ParseError(f"point {x} appears twice in {text!r}")
            used.add(x)
        for k, x in enumerate(cyc):
            out[x - 1] = cyc[(k + 1) % len(cyc)] - 1
    return tuple(out)


def strand_permutation(word: BraidWord, n: int) -> tuple[int, ...]:
    """Underlying permutation of a braid word; loop letters fix all strands."""
    p = identity_perm(n)
    for kind, idx, _ in word:
        if kind == "s":
            p = compose_perms(p, transposition_perm(n, idx))
    return p


# ---------------------------------------------------------------------------
# relators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Relator:
    """A word equal to the identity, tagged with its family label."""

    family: str
    word: BraidWord


def _s(i: int, sign: int = 1) -> tuple:
    return ("s", i, sign)


def _comm(u: BraidWord, v: BraidWord) -> BraidWord:
    return u + v + inverse_word(u) + inverse_word(v)


def _loop_letters(s: SurfaceParams) -> list[tuple]:
    out = []
    for r in range(1, s.genus + 1):
        out += [("a", r, 1), ("b", r, 1)]
    for k in range(1, s.boundary):
        out.append(("z", k, 1))
    return out


def relators(s: SurfaceParams) -> list[Relator]:
    """Every relator instance for the given parameters, freely reduced."""
    if s.strands < 2:
        raise ParameterError("the braid presentation needs at least 2 strands")
    n, g, p = s.strands, s.genus, s.boundary
    out: list[Relator] = []

    for i in range(1, n - 1):
        out.append(Relator("2.i", (
            _s(i), _s(i + 1), _s(i), _s(i + 1, -1), _s(i, -1), _s(i + 1, -1))))
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            out.append(Relator("2.i", _comm((_s(i),), (_s(j),))))

    loops = _loop_letters(s)
    for i in range(2, n):
        for gam in loops:
            out.append(Relator("2.ii", _comm((gam,), (_s(i),))))
    for gam in loops:
        out.append(Relator("2.ii", _comm(
            (gam,), (_s(1, -1), gam, _s(1, -1)))))
    for r in range(1, g + 1):
        for t in range(1, r):
            for first in (("a", r, 1), ("b", r, 1)):
                for second in (("a", t, 1), ("b", t, 1)):
                    out.append(Relator("2.ii", _comm(
                        (first,), (_s(1, -1), second, _s(1)))))
    for i in range(1, p):
        for j in range(1, i):
            out.append(Relator("2.ii", _comm(
                (("z", i, 1),), (_s(1, -1), ("z", j, 1), _s(1)))))
    for r in range(1, g + 1):
        for k in range(1, p):
            for first in (("a", r, 1), ("b", r, 1)):
                out.append(Relator("2.ii", _comm(
                    (first,), (_s(1, -1), ("z", k, 1), _s(1)))))

    for r in range(1, g + 1):
        out.append(Relator("2.iii", (_s(1, -1), _s(1, -1)) + _comm(
            (("a", r, 1),), (_s(1, -1), ("b", r, 1), _s(1, -1)))))

    if p == 0:
        handles: BraidWord = ()
        for r in range(1, g + 1):
            handles += _comm((("a", r, 1),), (("b", r, -1),))
        twist = tuple(_s(i) for i in range(1, n - 1)) + (_s(n - 1), _s(n - 1)) \
            + tuple(_s(i) for i in range(n - 2, 0, -1))
        out.append(Relator("2.iv", free_reduce(handles + inverse_word(twist))))

    return [Relator(r.family, free_reduce(r.word)) for r in out]


# ---------------------------------------------------------------------------
# degree-zero evaluation into the wreath product
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WreathElement:
    """Element (beads; perm) of pi_1(Sigma)^n |x S_n with normalized beads.

    ``beads[i]`` belongs to the strand *starting* at position ``i + 1`` and
    ``perm`` maps starting to ending positions, composing left-to-right.
    In the product the strand starting at ``i`` continues through the second
    factor as its strand ``perm(i)``:
    (g; pi)(h; rho) = (e; pi rho) with e_i = g_i * h_{pi(i)}.
    """

    surface: SurfaceParams
    beads: tuple[Word, ...]
    perm: tuple[int, ...]

    def __post_init__(self):
        n = self.surface.strands
        if len(self.beads) != n or len(self.perm) != n:
            raise DimensionMismatchError(
                f"need {n} beads and a permutation of {n} strands"
            )
        object.__setattr__(
            self, "beads",
            tuple(pi1_normalize(w, self.surface) for w in self.beads),
        )

    @classmethod
    def identity(cls, s: SurfaceParams) -> "WreathElement":
        return cls(s, ((),) * s.strands, identity_perm(s.strands))

    @property
    def is_identity(self) -> bool:
        return self.perm == identity_perm(self.surface.strands) and all(
            w == () for w in self.beads
        )

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        if self.surface != other.surface:
            raise DimensionMismatchError("wreath elements live on different surfaces")
        beads = tuple(
            pi1_mul(self.beads[i], other.beads[self.perm[i]], self.surface)
            for i in range(self.surface.strands)
        )
        return WreathElement(self.surface, beads, compose_perms(self.perm, other.perm))

    def inverse(self) -> "WreathElement":
        pinv = invert_perm(self.perm)
        beads = tuple(
            inverse_word(self.beads[pinv[j]])
            for j in range(self.surface.strands)
        )
        return WreathElement(self.surface, beads, pinv)


def wreath_image(word: BraidWord, s: SurfaceParams) -> WreathElement:
    """The evaluation sending s_i to its transposition (trivial beads) and
    each loop letter to a single bead on strand one."""
    check_braid_word(word, s)
    n = s.strands
    acc = WreathElement.identity(s)
    for kind, idx, sign in word:
        if kind == "s":
            step = WreathElement(s, ((),) * n, transposition_perm(n, idx))
        else:
            beads = (((kind, idx, sign),),) + ((),) * (n - 1)
            step = WreathElement(s, beads, identity_perm(n))
        acc = acc * step
    return acc


# ---------------------------------------------------------------------------
# bounded equality search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Move:
    """Replace ``removed`` at position ``pos`` by ``inserted`` (then reduce)."""

    pos: int
    removed: BraidWord
    inserted: BraidWord
    family: str


@dataclass(frozen=True)
class Equality:
    """Outcome of bounded_equal: Equal carries a verified move sequence."""

    status: str  # "equal" | "unknown"
    moves: tuple[Move, ...] = ()

    @property
    def is_equal(self) -> bool:
        return self.status == "equal"


def apply_move(word: BraidWord, move: Move) -> BraidWord:
    end = move.pos + len(move.removed)
    if not (0 <= move.pos <= len(word)) or word[move.pos:end] != move.removed:
        raise SurfbraidError("move does not apply at this position")
    return free_reduce(word[:move.pos] + move.inserted + word[end:])


def _move_pieces(s: SurfaceParams) -> list[tuple[BraidWord, BraidWord, str]]:
    """All (removed, inserted, family) relator moves: for each rotation r of a
    relator or its inverse and each split r = P.S, the move rewrites P into
    S^-1 (P empty gives free insertion of a relator conjugate)."""
    pieces: dict[tuple[BraidWord, BraidWord], str] = {}
    for rel in relators(s):
        for base in (rel.word, inverse_word(rel.word)):
            for r in range(len(base)):
                rot = free_reduce(base[r:] + base[:r])
                for k in range(len(rot) + 1):
                    removed, inserted = rot[:k], inverse_word(rot[k:])
                    if removed != inserted:
                        pieces.setdefault((removed, inserted), rel.family)
    out = [(rem, ins, fam) for (rem, ins), fam in pieces.items()]
    out.sort(key=lambda t: (len(t[0]), word_sort_key(t[0]), word_sort_key(t[1])))
    return out


def bounded_equal(
    u: BraidWord,
    v: BraidWord,
    s: SurfaceParams,
    depth: int,
    node_budget: int = 10**6,
) -> Equality:
    """Breadth-first search rewriting u towards v by at most ``depth`` relator
    moves.  Equal answers are replayed move by move before being returned;
    Unknown is inconclusive."""
    check_braid_word(u, s)
    check_braid_word(v, s)
    start, target = free_reduce(u), free_reduce(v)
    if start == target:
        return Equality("equal")
    pieces = _move_pieces(s)
    parents: dict[BraidWord, tuple[BraidWord, Move]] = {}
    frontier = [start]
    seen = {start}
    generated = 0

    def path_to(w: BraidWord) -> Equality:
        moves: list[Move] = []
        while w != start:
            w, mv = parents[w]
            moves.append(mv)
        moves.reverse()
        check = start
        for mv in moves:
            check = apply_move(check, mv)
        if check != target:
            raise SurfbraidError("internal error: move replay failed")
        return Equality("equal", tuple(moves))

    for _ in range(depth):
        next_frontier: list[BraidWord] = []
        for w in frontier:
            for pos in range(len(w) + 1):
                for removed, inserted, family in pieces:
                    if w[pos:pos + len(removed)] != removed:
                        continue
                    nxt = free_reduce(w[:pos] + inserted + w[pos + len(removed):])
                    if nxt in seen:
                        continue
                    generated += 1
                    seen.add(nxt)
                    parents[nxt] = (w, Move(pos, removed, inserted, family))
                    if nxt == target:
                        return path_to(nxt)
                    next_frontier.append(nxt)
                    if generated >= node_budget:
                        return Equality("unknown")
        frontier = next_frontier
        if not frontier:
            break
    return Equality("unknown")


def random_relator_rewrite(word: BraidWord, s: SurfaceParams, rng) -> tuple[BraidWord, Move]:
    """Apply one random relator move (substitution where possible, otherwise
    insertion of a full relator conjugate); returns the rewritten word."""
    pieces = _move_pieces(s)
    subs = []
    for pos in range(len(word) + 1):
        for removed, inserted, family in pieces:
            if removed and word[pos:pos + len(removed)] == removed:
                subs.append(Move(pos, removed, inserted, family))
    inserts = []
    for rel in relators(s):
        for base in (rel.word, inverse_word(rel.word)):
            for pos in range(len(word) + 1):
                inserts.append(Move(pos, (), base, rel.family))
    candidates = subs + inserts
    for _ in range(32):
        mv = candidates[rng.randrange(len(candidates))]
        rewritten = apply_move(word, mv)
        if rewritten != free_reduce(word):
            return rewritten, mv
    return apply_move(word, candidates[0]), candidates[0]
