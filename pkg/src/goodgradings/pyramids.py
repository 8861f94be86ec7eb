"""Pyramid combinatorics for nilpotent elements.

gl pyramids are stacks of centered-or-shifted rows, one per Jordan block,
ordered by merging the two partitions.  Orthosymplectic pyramids are the
centrally symmetric diagrams with skew-rows for odd-multiplicity parts;
both realize a nilpotent e and a diagonal grading element h.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix, rank
from .partitions import (NotOrthosymplectic, SuperPartition, cp_dq,
                         is_orthosymplectic, multiplicities, psi_merge)
from .superalgebra import (EVEN, ODD, is_member_osp, sigma_coefficient,
                           superbracket)


class SizeMismatch(ValueError):
    pass


class LengthMismatch(ValueError):
    pass


class MembershipFailure(ValueError):
    pass


# ---------------------------------------------------------------------------
# gl pyramids


@dataclass(frozen=True)
class Pyramid:
    """Rows bottom-up: (length, parity tag '+'/'-', leftmost x-coordinate).

    Box x-coordinates in a row of length r starting at f are
    f, f+2, ..., f + 2(r-1).
    """

    rows: tuple  # of (length, tag, f)

    def __post_init__(self):
        rows = tuple((int(r), t, int(f)) for r, t, f in self.rows)
        object.__setattr__(self, "rows", rows)
        prev = None
        for r, t, f in rows:
            l = f + 2 * (r - 1)
            if prev is not None:
                pr, pf, pl = prev
                if not (r <= pr and pf <= f and l <= pl):
                    raise ValueError("rows not nested")
            prev = (r, f, l)
        if rows:
            r0, _, f0 = rows[0]
            if f0 != -(r0 - 1):
                raise ValueError("bottom row not centered")

    @property
    def m(self):
        return sum(r for r, t, f in self.rows if t == "+")

    @property
    def n(self):
        return sum(r for r, t, f in self.rows if t == "-")

    def boxes(self):
        """(x, y, parity, label) per box; labels 1..m even then m+1..m+n odd,
        assigned rows bottom-up, boxes left-to-right."""
        out = []
        next_even = 1
        next_odd = self.m + 1
        for y, (r, tag, f) in enumerate(self.rows, start=1):
            for i in range(r):
                if tag == "+":
                    label = next_even
                    next_even += 1
                else:
                    label = next_odd
                    next_odd += 1
                out.append((f + 2 * i, y, tag, label))
        return out

    def to_json(self):
        return {"rows": [{"len": r, "parity": t, "f": f}
                         for r, t, f in self.rows]}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple((row["len"], row["parity"], row["f"])
                         for row in obj["rows"]))


def enumerate_pyr(sp):
    """All pyramids for the orbit (p, q): every integer row-shift choice
    satisfying the nesting inequalities."""
    merged = psi_merge(sp)
    if not merged:
        return [Pyramid(())]
    lengths = [r for r, _ in merged]
    f1 = -(lengths[0] - 1)
    choices = []
    for j in range(1, len(lengths)):
        gap = lengths[j - 1] - lengths[j]
        choices.append(range(0, 2 * gap + 1))
    out = []
    for offsets in itertools.product(*choices):
        fs = [f1]
        for off in offsets:
            fs.append(fs[-1] + off)
        out.append(Pyramid(tuple((r, t, f)
                                 for (r, t), f in zip(merged, fs))))
    return out


def dynkin_pyramid_gl(sp):
    """The centered (symmetric) pyramid: every row has f = -(r-1)."""
    merged = psi_merge(sp)
    return Pyramid(tuple((r, t, -(r - 1)) for r, t in merged))


def realize_pyramid(P, R):
    """(e, h) in gl(m|n) from a pyramid: h = diag of box x-coordinates,
    e steps each box to its right neighbor (degree 2)."""
    if R.kind != "gl" or P.m != R.m or P.n != R.odd_dim:
        raise SizeMismatch("pyramid size (%d|%d) vs realization (%d|%d)"
                           % (P.m, P.n, R.m, R.odd_dim))
    boxes = P.boxes()
    h = R.diagonal({label: x for x, y, t, label in boxes})
    by_pos = {(x, y): label for x, y, t, label in boxes}
    emat = Matrix.zero(R.size, R.size)
    for x, y, t, label in boxes:
        right = by_pos.get((x + 2, y))
        if right is not None:
            emat[R.index(right), R.index(label)] = Fraction(1)
    return R.element(emat), h


# ---------------------------------------------------------------------------
# orthosymplectic pyramids


@dataclass
class OspPyramid:
    """Centrally symmetric pyramid.

    rows: list of dicts {"y", "kind", "part", "parity", "cols"} where kind is
    one of zeroth / even / odd / even_skew / odd_skew, covering the upper half
    (y >= 0); the lower half is the central mirror.  boxes: (x, y, parity,
    label) with mirror boxes labeled by negation and the origin labeled 0.
    """

    sp: SuperPartition
    rows: list
    boxes: list

    @property
    def m(self):
        return self.sp.m

    @property
    def n2(self):
        """dim V1 = sum of q."""
        return self.sp.n

    def to_json(self):
        return {"boxes": [{"x": x, "y": y, "parity": t, "label": lab}
                          for x, y, t, lab in self.boxes]}


def _centered_cols(r):
    return list(range(1 - r, r, 2))


def dynkin_pyramid_osp(sp):
    """Build the orthosymplectic Dynkin pyramid for an orthosymplectic (p|q).

    Zeroth row from the largest odd-multiplicity part of p when m is odd;
    remaining odd-multiplicity parts of p pair into even skew-rows; even
    multiplicities give centered rows; a q-part with odd multiplicity gives
    an odd skew-row.  The lower half is the central mirror image.
    """
    if not is_orthosymplectic(sp):
        raise NotOrthosymplectic(f"{sp} is not orthosymplectic")
    m = sp.m
    p_mult = dict(multiplicities(sp.p))
    q_mult = dict(multiplicities(sp.q))

    rows = []
    if m % 2 == 1:
        rk = max(v for v, c in p_mult.items() if c % 2 == 1)
        p_mult[rk] -= 1
        rows.append({"y": 0, "kind": "zeroth", "part": rk, "parity": "+",
                     "cols": _centered_cols(rk)})

    odd_mult_parts = sorted((v for v, c in p_mult.items() if c % 2 == 1),
                            reverse=True)
    assert len(odd_mult_parts) % 2 == 0
    pairs = {}  # c_i -> d_i
    for i in range(0, len(odd_mult_parts), 2):
        c, d = odd_mult_parts[i], odd_mult_parts[i + 1]
        pairs[c] = d
        p_mult[c] -= 1
        p_mult[d] -= 1

    upper = []  # row specs above the axis, in bottom-up emission order
    values = sorted(set(p_mult) | set(q_mult), reverse=True)
    for v in values:
        if v in pairs:
            c, d = v, pairs[v]
            upper.append({"kind": "even_skew", "part": (c, d), "parity": "+",
                          "cols": list(range(1 - d, c, 2))})
        cnt = p_mult.get(v, 0)
        assert cnt % 2 == 0
        for _ in range(cnt // 2):
            upper.append({"kind": "even", "part": v, "parity": "+",
                          "cols": _centered_cols(v)})
        qcnt = q_mult.get(v, 0)
        if qcnt % 2 == 1:
            assert v % 2 == 0
            upper.append({"kind": "odd_skew", "part": v, "parity": "-",
                          "cols": list(range(1, v, 2))})
        for _ in range(qcnt // 2):
            upper.append({"kind": "odd", "part": v, "parity": "-",
                          "cols": _centered_cols(v)})

    for j, spec in enumerate(upper, start=1):
        spec["y"] = 2 * j if m % 2 == 1 else 2 * j - 1
        rows.append(spec)

    # assign labels: upper half (y > 0, or y = 0 and x > 0), rows bottom-up,
    # boxes left-to-right; even boxes 1..k, odd boxes k+1..k+n; mirrors negate
    boxes = []
    next_even = [1]
    next_odd = [sp.m // 2 + 1]

    def take(parity):
        ctr = next_even if parity == "+" else next_odd
        lab = ctr[0]
        ctr[0] += 1
        return lab

    for spec in sorted(rows, key=lambda s: s["y"]):
        y = spec["y"]
        for x in spec["cols"]:
            if y > 0 or (y == 0 and x > 0):
                lab = take(spec["parity"])
                boxes.append((x, y, spec["parity"], lab))
                if not (x == 0 and y == 0):
                    boxes.append((-x, -y, spec["parity"], -lab))
            elif y == 0 and x == 0:
                boxes.append((0, 0, spec["parity"], 0))
    total = m + sp.n
    assert len(boxes) == total, (len(boxes), total)
    return OspPyramid(sp, rows, boxes)


def _osp_connections(P):
    """Pairs (a, b) of box labels with a term E_{a,b} in e (a two columns
    right of b), including the skew-row crossings to the mirror rows."""
    pos = {}
    for x, y, t, lab in P.boxes:
        pos[(x, y)] = lab
    conns = []
    seen_rows = []
    for spec in P.rows:
        y = spec["y"]
        cols = spec["cols"]
        mirror_cols = [-x for x in cols]
        for x in cols:
            if (x + 2, y) in pos and x + 2 in cols:
                conns.append((pos[(x + 2, y)], pos[(x, y)]))
        if y != 0:
            for x in mirror_cols:
                if (x + 2, -y) in pos and x + 2 in mirror_cols:
                    conns.append((pos[(x + 2, -y)], pos[(x, -y)]))
        if spec["kind"] == "even_skew":
            # crossings between the skew row and its mirror at columns
            # 0 -> 2 and -2 -> 0
            conns.append((pos[(2, y)], pos[(0, -y)]))
            conns.append((pos[(0, y)], pos[(-2, -y)]))
        elif spec["kind"] == "odd_skew":
            conns.append((pos[(1, y)], pos[(-1, -y)]))
    return conns


def _restricted_jordan_type(mat, indices):
    """Jordan type of a nilpotent matrix restricted to a coordinate block."""
    sub = Matrix.zero(len(indices), len(indices))
    for a, i in enumerate(indices):
        for b, j in enumerate(indices):
            sub[a, b] = mat[i, j]
    ranks = []
    power = Matrix.identity(len(indices))
    while True:
        r = rank(power)
        ranks.append(r)
        if r == 0:
            break
        power = power @ sub
    # ranks[k] = rank(sub^k); the differences form the conjugate partition
    from .partitions import dual_partition
    dual = tuple(ranks[k - 1] - ranks[k] for k in range(1, len(ranks)))
    return dual_partition(dual)


def jordan_type(R, e):
    """Jordan type of an even nilpotent element on (V0, V1)."""
    ev = list(range(R.m))
    od = list(range(R.m, R.size))
    return (_restricted_jordan_type(e.matrix, ev),
            _restricted_jordan_type(e.matrix, od))


def realize_osp_pyramid(P, R):
    """(e, h) in osp(m|2n) from an orthosymplectic pyramid."""
    if R.kind != "osp" or P.m != R.m or P.n2 != R.odd_dim:
        raise SizeMismatch("pyramid (%d|%d) vs realization (%d|%d)"
                           % (P.m, P.n2, R.m, R.odd_dim))
    h = R.diagonal({lab: x for x, y, t, lab in P.boxes})
    conns = _osp_connections(P)
    emat = Matrix.zero(R.size, R.size)
    for a, b in conns:
        emat[R.index(a), R.index(b)] = sigma_coefficient(R, a, b)
    if not is_member_osp(R, emat, EVEN):
        emat = _resolve_signs(R, conns)
    e = R.element(emat)
    if not is_member_osp(R, emat, EVEN):
        raise MembershipFailure("no sign resolution lands e in osp")
    jt = jordan_type(R, e)
    if jt != (P.sp.p, P.sp.q):
        raise MembershipFailure("Jordan type %s != %s" % (jt, (P.sp.p, P.sp.q)))
    comm = superbracket(h, e) - e.scale(2)
    assert comm.is_zero(), "[h,e] != 2e"
    return e, h


def _resolve_signs(R, conns):
    """Fallback: solve the membership equations on the connection support."""
    from .linalg import kernel_basis
    support = sorted({(R.index(a), R.index(b)) for a, b in conns})
    pos_index = {ab: t for t, ab in enumerate(support)}
    G = R.phi
    s = R.size
    rows = []
    for b in range(s):
        for c in range(s):
            row = [Fraction(0)] * len(support)
            hit = False
            for a in range(s):
                if G[a, c] and (a, b) in pos_index:
                    row[pos_index[(a, b)]] += G[a, c]
                    hit = True
                if G[b, a] and (a, c) in pos_index:
                    row[pos_index[(a, c)]] += G[b, a]
                    hit = True
            if hit:
                rows.append(row)
    kern = kernel_basis(Matrix.from_rows(rows))
    for vec in kern:
        if all(v != 0 for v in vec):
            emat = Matrix.zero(s, s)
            for t, (a, b) in enumerate(support):
                emat[a, b] = vec[t]
            return emat
    raise MembershipFailure("membership system has no full-support solution")


def shift_matrix(R, P, s, t):
    """Diagonal z(s, t): s_i on the upper full row of the i-th C(p) part
    (descending), -s_i on its mirror; likewise t_j on D(q) rows."""
    cp, dq = cp_dq(P.sp)
    if len(s) != len(cp) or len(t) != len(dq):
        raise LengthMismatch("need %d s-values and %d t-values"
                             % (len(cp), len(dq)))
    label_rows = _upper_row_labels(P)
    diag = {}
    for part, val in list(zip(cp, s)) + list(zip(dq, t)):
        kind = "even" if part in cp else "odd"
        matches = [labs for (k, pv), labs in label_rows.items()
                   if k == kind and pv == part]
        assert len(matches) == 1, (part, matches)
        for lab in matches[0]:
            diag[lab] = Fraction(val)
            diag[-lab] = -Fraction(val)
    return R.diagonal(diag)


def _upper_row_labels(P):
    """Labels of each upper-half full row, keyed by (kind, part); only rows
    that can carry a shift (multiplicity-2 parts) are unambiguous."""
    by_pos = {(x, y): lab for x, y, t, lab in P.boxes}
    out = {}
    for spec in P.rows:
        if spec["y"] <= 0 or spec["kind"] not in ("even", "odd"):
            continue
        labs = [by_pos[(x, spec["y"])] for x in spec["cols"]]
        key = (spec["kind"], spec["part"])
        if key in out:
            out[key] = None  # ambiguous: multiplicity > 2, never shift-carrying
        else:
            out[key] = labs
    return {k: v for k, v in out.items() if v is not None}


# ---------------------------------------------------------------------------
# rendering


def render(P):
    """ASCII picture: one line per row, top-down, parity marks at the box
    x-coordinates."""
    if isinstance(P, Pyramid):
        rows = [(y, t, [f + 2 * i for i in range(r)])
                for y, (r, t, f) in enumerate(P.rows, start=1)]
        all_boxes = [(x, y, t) for y, t, cols in rows for x in cols]
    else:
        all_boxes = [(x, y, t) for x, y, t, lab in P.boxes]
    if not all_boxes:
        return ""
    xmin = min(x for x, y, t in all_boxes)
    ys = sorted({y for x, y, t in all_boxes}, reverse=True)
    lines = []
    for y in ys:
        marks = {x: t for x, yy, t in all_boxes if yy == y}
        width = max(marks) - xmin + 1
        line = [" "] * (2 * width)
        for x, t in marks.items():
            line[2 * (x - xmin)] = t
        lines.append("".join(line).rstrip())
    return "\n".join(lines)
