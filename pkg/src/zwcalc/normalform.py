"""Canonical normal forms and syntactic normalization.

A state on ``n`` wires normalizes to an ordered list of rows
``(coefficient, connection word)``: one row per basis amplitude, rows
sorted lexicographically by word, no zero coefficients, no duplicate
words.  Diagrammatically a row is a labelled white node wired to the
outputs it touches; at dimension 2 the word is a bit vector saying which
outputs, and for qudits the letters are wire multiplicities.

Maps normalize through their fully bent state: every input is transposed
to an output with a cup, so a map ``k -> m`` becomes a state on ``k + m``
wires whose word is the input word followed by the output word.
:class:`MapNormalForm` remembers the split.

``normalize`` never consults the interpreter.  It recurses over the term
with hardcoded normal forms for the generators, pairing rows for tensor
products, and filtering rows on equal letters for wire pluggings; the
test suite checks it against :func:`zwcalc.semantics.interpret`, which
walks a completely different path.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ring as _ring
from .ring import RingDescriptor, RingElement, UnsupportedOperationError
from . import term as _term
from .term import ArityError, Gen, Generator, Par, Seq, Term, _Empty
from .semantics import SparseMap, make_map

Row = tuple[RingElement, str]


@dataclass(frozen=True)
class PreNormalForm:
    """Rows without canonicity: duplicate or zero rows are allowed, and a
    letter may exceed the wire multiplicity a single output supports."""

    d: int
    n: int
    rows: tuple[Row, ...]

    def __post_init__(self):
        for _, word in self.rows:
            if len(word) != self.n:
                raise ArityError(f"row word {word!r} is not {self.n} letters")


@dataclass(frozen=True)
class NormalForm:
    d: int
    n: int
    rows: tuple[Row, ...]

    def __post_init__(self):
        words = [w for _, w in self.rows]
        if any(len(w) != self.n for w in words):
            raise ArityError("row word of the wrong length")
        if words != sorted(words) or len(set(words)) != len(words):
            raise ArityError("rows must be sorted with distinct words")
        if any(int(c) >= self.d for w in words for c in w):
            raise ArityError(f"connection letters must be below d={self.d}")

    def is_zero(self) -> bool:
        return not self.rows


def canonicalize(p: PreNormalForm | NormalForm) -> NormalForm:
    """Merge duplicate words, drop zero rows, drop rows whose letters the
    dimension cannot support, and sort."""
    acc: dict[str, RingElement] = {}
    for coeff, word in p.rows:
        if any(int(c) >= p.d for c in word):
            continue
        acc[word] = acc[word] + coeff if word in acc else coeff
    rows = tuple(
        (v, w) for w, v in sorted(acc.items()) if not v.is_zero()
    )
    return NormalForm(p.d, p.n, rows)


def nf_of_state(m: SparseMap) -> NormalForm:
    if m.n_in != 0:
        raise ArityError("nf_of_state needs a state (no inputs)")
    return canonicalize(PreNormalForm(
        m.d, m.n_out, tuple((v, w) for (w, _), v in m.entries.items())))


def nf_tensor(a: NormalForm, b: NormalForm) -> NormalForm:
    """All pairwise products; an empty operand absorbs everything."""
    if a.d != b.d:
        raise ArityError("tensor of normal forms at different dimensions")
    rows = tuple(
        (ca * cb, wa + wb) for ca, wa in a.rows for cb, wb in b.rows
    )
    return canonicalize(PreNormalForm(a.d, a.n + b.n, rows))


def nf_trace(a: NormalForm, j: int, k: int) -> NormalForm:
    """Plug outputs j and k into each other: keep rows with equal letters
    there, then delete both coordinates."""
    if j == k or not (0 <= j < a.n) or not (0 <= k < a.n):
        raise ArityError(f"bad trace indices ({j}, {k}) for {a.n} outputs")
    lo, hi = min(j, k), max(j, k)
    rows = tuple(
        (c, w[:lo] + w[lo + 1:hi] + w[hi + 1:])
        for c, w in a.rows if w[j] == w[k]
    )
    return canonicalize(PreNormalForm(a.d, a.n - 2, rows))


def nf_negate(a: NormalForm, j: int) -> NormalForm:
    """Complement the connections of output j to the white nodes."""
    if a.d != 2:
        raise UnsupportedOperationError("negation is a d = 2 operation")
    if not 0 <= j < a.n:
        raise ArityError(f"output {j} out of range")
    flip = {"0": "1", "1": "0"}
    rows = tuple((c, w[:j] + flip[w[j]] + w[j + 1:]) for c, w in a.rows)
    return canonicalize(PreNormalForm(a.d, a.n, rows))


def nf_permute(a: NormalForm, perm: list[int]) -> NormalForm:
    """Send coordinate i to position perm[i] in every word."""
    if sorted(perm) != list(range(a.n)):
        raise ArityError(f"{perm!r} is not a permutation of {a.n} coordinates")
    rows = []
    for c, w in a.rows:
        out = [""] * a.n
        for i, ch in enumerate(w):
            out[perm[i]] = ch
        rows.append((c, "".join(out)))
    return canonicalize(PreNormalForm(a.d, a.n, tuple(rows)))


@dataclass(frozen=True)
class MapNormalForm:
    """Normal form of a map: the bent state plus the arity split.

    Words are input word followed by output word, so row ``(c, u + v)``
    states that the map sends ``|u>`` to ``c |v>`` plus other rows.
    """

    n_in: int
    n_out: int
    nf: NormalForm

    def __post_init__(self):
        if self.nf.n != self.n_in + self.n_out:
            raise ArityError("bent state width does not match the arity split")

    def to_sparse(self, ring: RingDescriptor, d: int = 2) -> SparseMap:
        entries = {
            (w[self.n_in:], w[:self.n_in]): c for c, w in self.nf.rows
        }
        return make_map(ring, d, self.n_in, self.n_out, entries)


def generator_nf(g: Generator, ring: RingDescriptor) -> MapNormalForm:
    """Hardcoded dimension-2 normal forms of the generators, as bent
    states.  Transposing any wires of a spider leaves its bent state
    unchanged, so one table per spider covers every transpose."""
    one = _ring.one(ring)
    kind = g.kind
    if kind == "id":
        rows = [(one, "00"), (one, "11")]
    elif kind in ("cup", "cap"):
        rows = [(one, "00"), (one, "11")]
    elif kind == "swap":
        rows = [(one, "0000"), (one, "0110"), (one, "1001"), (one, "1111")]
    elif kind in ("x", "xinv"):
        rows = [(one, "0000"), (one, "0110"), (one, "1001"), (-one, "1111")]
    elif kind == "w":
        width = g.n_in + g.n_out
        rows = [(one, "0" * i + "1" + "0" * (width - 1 - i)) for i in range(width)]
    elif kind == "z":
        width = g.n_in + g.n_out
        if g.label.ring != ring:
            raise _ring.RingMismatchError(
                f"label {g.label} does not live in {ring}")
        rows = [(one, "0" * width), (g.label, "1" * width)]
    elif kind == "ket":
        if g.level > 1:
            raise ArityError(f"ket({g.level}) needs dimension > {g.level}")
        rows = [(one, str(g.level))]
    else:
        raise ArityError(f"unknown generator {kind!r}")
    nf = canonicalize(PreNormalForm(2, g.n_in + g.n_out, tuple(rows)))
    return MapNormalForm(g.n_in, g.n_out, nf)


def normalize(t: Term, ring: RingDescriptor) -> MapNormalForm:
    """Rewrite a dimension-2 term to its canonical normal form by
    structural recursion, without evaluating it."""
    if not ring.exact:
        raise UnsupportedOperationError("normalize runs over exact rings")
    if isinstance(t, _Empty):
        return MapNormalForm(0, 0, NormalForm(2, 0, ((_ring.one(ring), ""),)))
    if isinstance(t, Gen):
        return generator_nf(t.gen, ring)
    if isinstance(t, Par):
        a = normalize(t.left, ring)
        b = normalize(t.right, ring)
        joint = nf_tensor(a.nf, b.nf)
        # words are u_a v_a u_b v_b; interleave to u_a u_b v_a v_b
        perm = (list(range(a.n_in))
                + list(range(a.n_in + b.n_in, a.n_in + b.n_in + a.n_out))
                + list(range(a.n_in, a.n_in + b.n_in))
                + list(range(a.n_in + b.n_in + a.n_out, joint.n)))
        return MapNormalForm(a.n_in + b.n_in, a.n_out + b.n_out,
                             nf_permute(joint, perm))
    if isinstance(t, Seq):
        factors = _term.seq_factors(t)
        acc = normalize(factors[0], ring)
        for f in factors[1:]:
            acc = _plug(acc, normalize(f, ring))
        return acc
    raise ArityError(f"not a term: {t!r}")


def _plug(a: MapNormalForm, b: MapNormalForm) -> MapNormalForm:
    """Sequential composition on normal forms: tensor followed by tracing
    each middle pair keeps exactly the row pairs whose middle words agree
    letterwise, so join on the middle words directly instead of
    materialising the rejected pairs."""
    if a.n_out != b.n_in:
        raise ArityError("middle arity mismatch")
    by_mid: dict[str, list[Row]] = {}
    for c, w in b.nf.rows:
        by_mid.setdefault(w[:b.n_in], []).append((c, w[b.n_in:]))
    rows = []
    for c, w in a.nf.rows:
        for c2, v in by_mid.get(w[a.n_in:], ()):
            rows.append((c * c2, w[:a.n_in] + v))
    nf = canonicalize(PreNormalForm(2, a.n_in + b.n_out, tuple(rows)))
    return MapNormalForm(a.n_in, b.n_out, nf)


def nf_to_term(a: NormalForm | PreNormalForm) -> Term:
    """Build the canonical diagram of a dimension-2 state normal form.

    A bottom W spider fans one wire to each labelled white node; each
    white node sends one wire per connection (letters above 1 become
    parallel wires) through a crossing network to the merge node of the
    corresponding output.
    """
    if a.d != 2:
        raise UnsupportedOperationError("nf_to_term builds d = 2 diagrams")
    rows = a.rows
    n = a.n
    if not rows:
        zero_scalar = _term.wspider(0, 2) >> _term.CAP
        return _term.par_all([zero_scalar] + [_term.w_monoid(0)] * n)
    m = len(rows)
    bottom = _term.wspider(0, m)
    whites = []
    origin = []  # (row index, output index) per wire, origin-major order
    for i, (coeff, word) in enumerate(rows):
        fan = sum(int(c) for c in word)
        whites.append(_term.zspider(1, fan, coeff))
        for j, c in enumerate(word):
            origin.extend([(i, j)] * int(c))
    target = sorted(range(len(origin)), key=lambda p: (origin[p][1], origin[p][0]))
    perm = [0] * len(origin)
    for pos, p in enumerate(target):
        perm[p] = pos
    merges = []
    for j in range(n):
        k_j = sum(int(word[j]) for _, word in rows)
        merges.append(_term.w_monoid(k_j))
    t = bottom >> _term.par_all(whites)
    t = t >> _term.crossing_perm(perm)
    return t >> _term.par_all(merges)


def to_json_dict(a: NormalForm) -> dict:
    return {
        "n": a.n,
        "d": a.d,
        "rows": [{"v": _ring.format_literal(c), "w": w} for c, w in a.rows],
    }


def from_json_dict(data: dict, ring: RingDescriptor) -> NormalForm:
    rows = tuple(
        (_ring.parse_literal(ring, r["v"]), r["w"]) for r in data["rows"]
    )
    return canonicalize(PreNormalForm(data["d"], data["n"], rows))
