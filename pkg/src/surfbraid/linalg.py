"""Exact sparse linear algebra over the rationals and the integers.

Two tools live here:

* ``ExactReducer`` — an incremental fraction-free row echelon form with
  optional provenance: every stored row remembers how it arose from the
  originally inserted rows, so a successful reduction of a query vector
  yields an explicit rational certificate.  Stored rows carry integer
  entries (denominators cleared, content gcd stripped) and elimination is
  division-free, keeping the hot path in pure integer arithmetic; the
  rational bookkeeping is deferred to certificate expansion.  Column keys
  may be arbitrary hashable objects; ties are broken by first-seen order,
  which keeps results deterministic.  Every stored row's pivot is its
  least column id, so elimination always moves to strictly larger ids and
  terminates without back-substitution.

* ``elementary_divisors`` — integer Smith normal form, with a sparse
  first phase that repeatedly eliminates on entries equal to +-1 (choosing
  the entry of least fill-in) and a dense textbook phase for whatever
  remains.  Exact throughout; no floating point anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

_ZERO = Fraction(0)


class ExactReducer:
    """Incremental fraction-free row echelon form with provenance tracking.

    insert(row, tag) adds an original row; reduce(row) returns a remainder
    and the combination of original rows that was subtracted, so that
    ``row = remainder + sum(combo[tag] * original[tag])``.  Row values may
    be ints or Fractions.

    Provenance is stored lazily: each stored row keeps only its own tag,
    its integer scaling and the elimination chain (multiplier, row index)
    it went through; the tag-level combination is expanded on demand and
    memoized on the instance (stored rows are immutable), so only rows a
    successful reduction actually touches are ever paid for in memory.
    """

    def __init__(self, track_provenance: bool = True):
        self.track = track_provenance
        self.rows: list[dict] = []   # integer entries, content gcd 1, pivot > 0
        self.links: list = []        # (tag, num, scl, ((beta, idx), ...))
        self.pivots: dict = {}       # column -> row index
        self.col_ids: dict = {}      # column -> first-seen order
        self._memo: dict = {}        # row index -> tag combination

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _col_id(self, col) -> int:
        cid = self.col_ids.get(col)
        if cid is None:
            cid = len(self.col_ids)
            self.col_ids[col] = cid
        return cid

    @staticmethod
    def _to_int_row(row: dict) -> tuple[dict, int]:
        """Clear denominators: returns (int_row, den) with int_row = den * row."""
        den = 1
        for v in row.values():
            if isinstance(v, Fraction):
                den = den * v.denominator // math.gcd(den, v.denominator)
        out: dict = {}
        for c, v in row.items():
            iv = int(v * den)
            if iv:
                out[c] = iv
        return out, den

    def _eliminate(self, work: dict) -> tuple[int, list]:
        """Division-free elimination against the stored pivot rows; mutates
        ``work`` into the scaled remainder and returns (alpha, chain) with

            alpha * input = work + sum(beta * rows[idx] for beta, idx in chain).

        Stored rows only contain columns with ids >= their pivot's id, so
        the least eliminable column id strictly increases and the loop
        terminates."""
        alpha = 1
        chain: list[list] = []
        pivots, col_ids, rows = self.pivots, self.col_ids, self.rows
        while work:
            best_col = best_id = None
            for col in work:
                i = pivots.get(col)
                if i is None:
                    continue
                cid = col_ids[col]
                if best_id is None or cid < best_id:
                    best_col, best_id = col, cid
            if best_col is None:
                break
            i = pivots[best_col]
            row = rows[i]
            p = row[best_col]
            f = work[best_col]
            g = math.gcd(f, p)
            m_work = p // g
            m_row = f // g
            if m_work != 1:
                for c in work:
                    work[c] *= m_work
                alpha *= m_work
                for entry in chain:
                    entry[0] *= m_work
            for c, v in row.items():
                nv = work.get(c, 0) - m_row * v
                if nv:
                    work[c] = nv
                else:
                    work.pop(c, None)
            chain.append([m_row, i])
        return alpha, chain

    def _expand(self, chain, scale: int) -> dict:
        """Tag-level combination sum(beta / scale * E(idx)) for a chain,
        where E(idx) expands stored row idx over original tags; memoized
        per stored row, expanded iteratively."""
        memo = self._memo
        stack = [idx for _, idx in chain]
        while stack:
            idx = stack[-1]
            if idx in memo:
                stack.pop()
                continue
            tag, num, scl, sub = self.links[idx]
            missing = [j for _, j in sub if j not in memo]
            if missing:
                stack.extend(missing)
                continue
            stack.pop()
            combo = {tag: Fraction(num, scl)}
            for beta, j in sub:
                coef = Fraction(beta, scl)
                for t, v in memo[j].items():
                    nv = combo.get(t, _ZERO) - coef * v
                    if nv:
                        combo[t] = nv
                    else:
                        combo.pop(t, None)
            memo[idx] = combo
        total: dict = {}
        for beta, idx in chain:
            coef = Fraction(beta, scale)
            for t, v in memo[idx].items():
                nv = total.get(t, _ZERO) + coef * v
                if nv:
                    total[t] = nv
                else:
                    total.pop(t, None)
        return total

    def reduce(self, row: dict, combo_if_nonzero: bool = False) -> tuple[dict, dict]:
        """Remainder of ``row`` modulo the span, plus the combination used.

        By default the combination is only expanded when the remainder is
        zero (a membership), which is the only case callers act on it;
        pass ``combo_if_nonzero`` to force expansion either way.
        """
        work, den = self._to_int_row(row)
        for c in work:
            self._col_id(c)
        alpha, chain = self._eliminate(work)
        scale = alpha * den
        combo = {}
        if self.track and (not work or combo_if_nonzero):
            combo = self._expand(chain, scale)
        if work and scale != 1:
            work = {c: Fraction(v, scale) for c, v in work.items()}
        return work, combo

    def insert(self, row: dict, tag=None) -> bool:
        """Add an original row; returns True iff it enlarged the span."""
        work, den = self._to_int_row(row)
        for c in work:
            self._col_id(c)
        alpha, chain = self._eliminate(work)
        if not work:
            return False
        pivot = min(work, key=self.col_ids.__getitem__)
        g = 0
        for v in work.values():
            g = math.gcd(g, v)
        if work[pivot] < 0:
            g = -g
        if g != 1:
            work = {c: v // g for c, v in work.items()}
        idx = len(self.rows)
        self.rows.append(work)
        # stored = (alpha * den * row - sum(beta * rows)) / g
        self.links.append(
            (tag, alpha * den, g, tuple((b, j) for b, j in chain))
            if self.track else None
        )
        self.pivots[pivot] = idx
        return True


def span_rank(rows) -> int:
    """Rank of a collection of sparse rows (no provenance kept)."""
    red = ExactReducer(track_provenance=False)
    for row in rows:
        red.insert(row)
    return red.rank


# ---------------------------------------------------------------------------
# integer Smith normal form
# ---------------------------------------------------------------------------


def elementary_divisors(rows) -> list[int]:
    """Elementary divisors (including 1s) of the integer matrix whose rows
    are the given sparse ``{column: int}`` maps."""
    work: dict[int, dict] = {}
    col_rows: dict = {}
    for i, row in enumerate(rows):
        r = {c: int(v) for c, v in row.items() if v}
        if r:
            work[i] = r
            for c in r:
                col_rows.setdefault(c, set()).add(i)

    divisors: list[int] = []

    # sparse phase: eliminate on +-1 entries, least fill-in first
    while True:
        best = None  # (fill, row, col)
        for i, row in work.items():
            for c, v in row.items():
                if v in (1, -1):
                    fill = (len(row) - 1) * (len(col_rows[c]) - 1)
                    if best is None or fill < best[0]:
                        best = (fill, i, c)
                        if fill == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, i, c = best
        piv_row = work.pop(i)
        piv = piv_row[c]
        for cc in piv_row:
            col_rows[cc].discard(i)
        for j in list(col_rows.get(c, ())):
            row_j = work[j]
            q = row_j[c] * piv  # piv is +-1 so this clears the column exactly
            for cc, v in piv_row.items():
                nv = row_j.get(cc, 0) - q * v
                if nv:
                    row_j[cc] = nv
                    col_rows.setdefault(cc, set()).add(j)
                else:
                    if row_j.pop(cc, None) is not None:
                        col_rows[cc].discard(j)
            if not row_j:
                del work[j]
        col_rows.pop(c, None)
        divisors.append(1)

    if not work:
        return divisors

    # dense phase on the residue
    cols = sorted({c for row in work.values() for c in row}, key=repr)
    col_index = {c: k for k, c in enumerate(cols)}
    mat = []
    for row in work.values():
        dense = [0] * len(cols)
        for c, v in row.items():
            dense[col_index[c]] = v
        mat.append(dense)
    divisors.extend(_dense_smith(mat))
    return divisors


def _dense_smith(mat: list[list[int]]) -> list[int]:
    m = [row[:] for row in mat]
    divs: list[int] = []
    while m and m[0]:
        best = None
        for i, row in enumerate(m):
            for j, v in enumerate(row):
                if v and (best is None or abs(v) < abs(best[2])):
                    best = (i, j, v)
        if best is None:
            break
        i0, j0, _ = best
        m[0], m[i0] = m[i0], m[0]
        for row in m:
            row[0], row[j0] = row[j0], row[0]
        while True:
            p = m[0][0]
            restart = False
            for i in range(1, len(m)):
                if m[i][0] % p:
                    q = m[i][0] // p
                    for j in range(len(m[0])):
                        m[i][j] -= q * m[0][j]
                    m[0], m[i] = m[i], m[0]
                    restart = True
                    break
            if restart:
                continue
            for j in range(1, len(m[0])):
                if m[0][j] % p:
                    q = m[0][j] // p
                    for i in range(len(m)):
                        m[i][j] -= q * m[i][0]
                    for row in m:
                        row[0], row[j] = row[j], row[0]
                    restart = True
                    break
            if not restart:
                break
        p = m[0][0]
        for i in range(1, len(m)):
            if m[i][0]:
                q = m[i][0] // p
                for j in range(len(m[0])):
                    m[i][j] -= q * m[0][j]
        for j in range(1, len(m[0])):
            if m[0][j]:
                q = m[0][j] // p
                for i in range(len(m)):
                    m[i][j] -= q * m[i][0]
        offender = None
        for i in range(1, len(m)):
            for j in range(1, len(m[0])):
                if m[i][j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(len(m[0])):
                m[0][j] += m[offender][j]
            continue
        divs.append(abs(p))
        m = [row[1:] for row in m[1:]]
    return divs
