"""Surface parameters and exact words in the fundamental group.

The fundamental group of a compact orientable surface of genus ``g`` with
``p`` boundary components is generated by handle loops ``a_1 .. a_g``,
``b_1 .. b_g`` and boundary loops ``z_1 .. z_{p-1}``.  For ``p >= 1`` the
group is free on those letters.  Closed surfaces carry a single relator,
written with the commutator convention ``[x, y] = x y x^-1 y^-1``::

    R_g = [a_1, b_1^-1] [a_2, b_2^-1] ... [a_g, b_g^-1]

Words are kept in a canonical form chosen per surface family:

* ``p >= 1``        -- free reduction (a canonical normal form),
* ``p = 0, g = 0``  -- the trivial group (no letters exist),
* ``p = 0, g = 1``  -- exponent form ``a_1^m b_1^k`` (the relator makes
  the two letters commute),
* ``p = 0, g >= 2`` -- greedy Dehn reduction over cyclic rotations of
  ``R_g`` and its inverse, followed by length-preserving half-relator
  replacements that lower the word lexicographically.

Dehn reduction decides triviality for these one-relator small-cancellation
groups: every freely reduced word representing the identity contains more
than half of some cyclic rotation of the relator, so the greedy loop sends
it to the empty word.  That triviality decision is the property the rest of
the package relies on.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass

from .errors import InvalidGeneratorError, ParameterError, ParseError

# A letter is (kind, index, sign) with kind in {"a", "b", "z"} and sign +-1.
Letter = tuple[str, int, int]
Word = tuple[Letter, ...]

_TOKEN_RE = re.compile(r"^([a-z])(\d+)(\^-1)?$")
_KIND_RANK = {"a": 0, "b": 1}


def letter(kind: str, index: int, sign: int = 1) -> Letter:
    return (kind, index, sign)


def inverse_word(word: Word) -> Word:
    return tuple((k, i, -s) for (k, i, s) in reversed(word))


def free_reduce(word) -> tuple:
    """Cancel adjacent inverse pairs; works on any (kind, index, sign) letters."""
    out: list = []
    for k, i, s in word:
        if out and out[-1][0] == k and out[-1][1] == i and out[-1][2] == -s:
            out.pop()
        else:
            out.append((k, i, s))
    return tuple(out)


def letter_sort_key(l: Letter) -> tuple:
    """Fixed order a_1 < a_1^-1 < b_1 < b_1^-1 < a_2 < ... < z_1 < ... ."""
    kind, idx, sign = l
    if kind in _KIND_RANK:
        return (0, idx, _KIND_RANK[kind], 0 if sign > 0 else 1)
    return (1, idx, 0, 0 if sign > 0 else 1)


def word_sort_key(word: Word) -> tuple:
    return (len(word), tuple(letter_sort_key(l) for l in word))


def parse_word(text: str, kinds: tuple[str, ...] = ("a", "b", "z")) -> tuple:
    """Parse a whitespace-separated word such as ``"a1 b1^-1"``; ``"1"`` or
    the empty string denote the empty word."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for tok in text.split():
        m = _TOKEN_RE.match(tok)
        if m is None:
            raise ParseError(f"bad letter token {tok!r}")
        kind, idx, inv = m.group(1), int(m.group(2)), m.group(3)
        if kind not in kinds:
            raise ParseError(f"letter kind {kind!r} not allowed here (expected one of {kinds})")
        if idx < 1:
            raise ParseError(f"letter index must be >= 1 in {tok!r}")
        out.append((kind, idx, -1 if inv else 1))
    return tuple(out)


def format_word(word) -> str:
    if not word:
        return "1"
    return " ".join(f"{k}{i}" + ("^-1" if s < 0 else "") for (k, i, s) in word)


@dataclass(frozen=True)
class SurfaceParams:
    """Genus, number of boundary components, and number of braid strands.

    Strand counts >= 1 are accepted so that the strand-indexed diagram
    algebras are available; the braid presentation itself needs n >= 2 and
    the braid-level operations enforce that separately.
    """

    genus: int
    boundary: int
    strands: int

    def __post_init__(self):
        if self.genus < 0 or self.boundary < 0:
            raise ParameterError("genus and boundary must be non-negative")
        if self.strands < 1:
            raise ParameterError("strand count must be >= 1")

    @property
    def closed(self) -> bool:
        return self.boundary == 0

    def pi1_letter_valid(self, l: Letter) -> bool:
        kind, idx, sign = l
        if sign not in (1, -1):
            return False
        if kind in ("a", "b"):
            return 1 <= idx <= self.genus
        if kind == "z":
            return 1 <= idx <= self.boundary - 1
        return False

    def pi1_letters(self) -> list[Letter]:
        """All signed generator letters, in the fixed lexicographic order."""
        out = []
        for r in range(1, self.genus + 1):
            out += [("a", r, 1), ("a", r, -1), ("b", r, 1), ("b", r, -1)]
        for k in range(1, self.boundary):
            out += [("z", k, 1), ("z", k, -1)]
        return out

    def surface_relator(self) -> Word:
        """The closed-surface relator [a_1,b_1^-1]...[a_g,b_g^-1] (p = 0 only)."""
        if not self.closed:
            raise ParameterError("the surface relator exists only for closed surfaces")
        word: list[Letter] = []
        for r in range(1, self.genus + 1):
            word += [("a", r, 1), ("b", r, -1), ("a", r, -1), ("b", r, 1)]
        return tuple(word)


def check_pi1_word(word: Word, s: SurfaceParams) -> None:
    for l in word:
        if not s.pi1_letter_valid(l):
            raise InvalidGeneratorError(
                f"letter {format_word((l,))} does not exist on genus {s.genus}, "
                f"boundary {s.boundary}"
            )


def _torus_normal_form(word: Word) -> Word:
    # closed genus one: the relator forces a_1 and b_1 to commute
    m = sum(s for (k, _, s) in word if k == "a")
    k = sum(s for (kk, _, s) in word if kk == "b")
    out: list[Letter] = []
    out += [("a", 1, 1 if m > 0 else -1)] * abs(m)
    out += [("b", 1, 1 if k > 0 else -1)] * abs(k)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _dehn_rotations(genus: int) -> tuple[tuple[Word, ...], dict]:
    """All cyclic rotations of the closed-surface relator and of its inverse,
    bucketed by first letter for fast scanning."""
    s = SurfaceParams(genus, 0, 2)
    base = s.surface_relator()
    rots = []
    for w in (base, inverse_word(base)):
        for r in range(len(w)):
            rots.append(w[r:] + w[:r])
    rots = tuple(dict.fromkeys(rots))
    by_first: dict[Letter, list[Word]] = {}
    for rot in rots:
        by_first.setdefault(rot[0], []).append(rot)
    return rots, by_first


def _match_len(word: Word, pos: int, rot: Word) -> int:
    n = min(len(word) - pos, len(rot))
    i = 0
    while i < n and word[pos + i] == rot[i]:
        i += 1
    return i


def _dehn_reduce(word: Word, genus: int) -> Word:
    """Greedy Dehn reduction: repeatedly replace any subword that matches more
    than half of a rotation of the relator by the shorter complement."""
    _, by_first = _dehn_rotations(genus)
    half = 2 * genus  # relator length is 4g
    w = free_reduce(word)
    pos = 0
    while pos < len(w):
        best = None  # (replacement_word, match_length)
        for rot in by_first.get(w[pos], ()):
            m = _match_len(w, pos, rot)
            if m > half:
                repl = inverse_word(rot[m:])
                if best is None or m > best[1] or (
                    m == best[1] and word_sort_key(repl) < word_sort_key(best[0])
                ):
                    best = (repl, m)
        if best is None:
            pos += 1
            continue
        repl, m = best
        w = free_reduce(w[:pos] + repl + w[pos + m:])
        # edits can create new matches only near the edit point
        pos = max(0, pos - 4 * genus)
    return w


def _dehn_lex_minimize(word: Word, genus: int) -> Word:
    """Half-length relator replacements that keep the length but lower the
    word in the fixed order; gives a deterministic tie-break on Dehn-reduced
    words (exact canonicity is not required downstream, triviality is)."""
    rots, _ = _dehn_rotations(genus)
    half = 2 * genus
    w = word
    improved = True
    while improved:
        improved = False
        best = None
        for pos in range(len(w)):
            for rot in rots:
                if _match_len(w, pos, rot) >= half:
                    cand = free_reduce(w[:pos] + inverse_word(rot[half:]) + w[pos + half:])
                    if word_sort_key(cand) < word_sort_key(w):
                        if best is None or word_sort_key(cand) < word_sort_key(best):
                            best = cand
        if best is not None:
            w = best
            improved = True
            if len(w) < len(word):
                w = _dehn_reduce(w, genus)
    return w


def pi1_normalize(word: Word, s: SurfaceParams) -> Word:
    """Canonical-per-scheme representative of a fundamental group word."""
    check_pi1_word(word, s)
    if not s.closed:
        return free_reduce(word)
    if s.genus == 0:
        return ()  # no letters exist on the sphere; validation already passed
    if s.genus == 1:
        return _torus_normal_form(word)
    w = _dehn_reduce(word, s.genus)
    return _dehn_lex_minimize(w, s.genus)


def pi1_mul(u: Word, v: Word, s: SurfaceParams) -> Word:
    return pi1_normalize(u + v, s)


def pi1_inv(u: Word, s: SurfaceParams) -> Word:
    return pi1_normalize(inverse_word(u), s)


def pi1_is_trivial(word: Word, s: SurfaceParams) -> bool:
    return pi1_normalize(word, s) == ()
