"""Interpretation of terms as sparse linear maps.

A term with ``k`` inputs and ``m`` outputs denotes a linear map between
tensor powers of the d-dimensional generator object.  We store it as a
mapping from ``(output word, input word)`` pairs to nonzero coefficients,
with words written over the digits ``0 .. d-1``.  Sequential composition
contracts over the shared middle word; parallel composition concatenates
words and multiplies coefficients.  Nothing is ever densified, so states
with few amplitudes stay small no matter how many wires they live on.

Exact rings interpret at dimension 2 (the qubit tables below); the
approximate complex ring switches to the anyonic qudit tables provided by
:mod:`zwcalc.qudit`.

Qubit generator table (words are bit strings, weight = number of 1s):

* ``id, swap, cup, cap``: the usual wire maps, cup = |00> + |11>;
* ``x``: |b1 b2> to (-1)^(b1 b2) |b2 b1>;
* ``w(k, m)``: entry 1 on each (input, output) pair of total weight 1;
* ``z(k, m)[r]``: entry 1 on the all-zero pair, r on the all-one pair;
* ``ket(l)``: the basis state |l>.

Maps are immutable once built; evaluation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from . import ring as _ring
from .ring import RingDescriptor, RingElement, UnsupportedOperationError
from . import term as _term
from .term import ArityError, Gen, Par, Seq, Term, _Empty

Word = str
Key = tuple[Word, Word]  # (output word, input word)


@dataclass(frozen=True)
class SparseMap:
    ring: RingDescriptor
    d: int
    n_in: int
    n_out: int
    entries: Mapping[Key, RingElement] = field(default_factory=dict)

    def __post_init__(self):
        for (out_w, in_w) in self.entries:
            if len(out_w) != self.n_out or len(in_w) != self.n_in:
                raise ArityError(
                    f"entry ({out_w!r}, {in_w!r}) does not fit arity "
                    f"({self.n_in}, {self.n_out})")

    def is_zero(self) -> bool:
        return not self.entries

    def scalar(self) -> RingElement:
        """The value of a (0, 0) map."""
        if (self.n_in, self.n_out) != (0, 0):
            raise ArityError("not a scalar map")
        return self.entries.get(("", ""), _ring.zero(self.ring))


def _clean(ring: RingDescriptor, entries: dict) -> dict:
    zero = _ring.zero(ring)
    return {k: v for k, v in entries.items() if not _ring.ring_equal(v, zero)}


def make_map(ring, d, n_in, n_out, entries) -> SparseMap:
    return SparseMap(ring, d, n_in, n_out, _clean(ring, dict(entries)))


def _qubit_generator_entries(g, ring) -> tuple[int, int, dict]:
    one = _ring.one(ring)
    kind = g.kind
    if kind == "id":
        return 1, 1, {("0", "0"): one, ("1", "1"): one}
    if kind == "swap":
        return 2, 2, {(b2 + b1, b1 + b2): one for b1 in "01" for b2 in "01"}
    if kind in ("x", "xinv"):
        ent = {}
        for b1 in "01":
            for b2 in "01":
                v = -one if b1 == b2 == "1" else one
                ent[(b2 + b1, b1 + b2)] = v
        return 2, 2, ent
    if kind == "cup":
        return 0, 2, {("00", ""): one, ("11", ""): one}
    if kind == "cap":
        return 2, 0, {("", "00"): one, ("", "11"): one}
    if kind == "w":
        k, m = g.n_in, g.n_out
        ent = {}
        for pos in range(k + m):
            word = "0" * pos + "1" + "0" * (k + m - 1 - pos)
            ent[(word[k:], word[:k])] = one
        return k, m, ent
    if kind == "z":
        k, m = g.n_in, g.n_out
        ent = {("0" * m, "0" * k): one}
        key = ("1" * m, "1" * k)
        ent[key] = ent.get(key, _ring.zero(ring)) + g.label
        return k, m, _clean(ring, ent)
    if kind == "ket":
        if g.level > 1:
            raise ArityError(f"ket({g.level}) needs dimension > {g.level}")
        return 0, 1, {(str(g.level), ""): one}
    raise ArityError(f"unknown generator {kind!r}")


def _compose(f: SparseMap, g: SparseMap) -> SparseMap:
    """f then g, contracting over the shared middle word."""
    if f.n_out != g.n_in:
        raise ArityError(f"cannot compose {f.n_out} outputs with {g.n_in} inputs")
    by_mid: dict[Word, list] = {}
    for (b, u), v in f.entries.items():
        by_mid.setdefault(b, []).append((u, v))
    acc: dict[Key, RingElement] = {}
    for (w, b), gv in g.entries.items():
        for u, fv in by_mid.get(b, ()):
            key = (w, u)
            prod = gv * fv
            if key in acc:
                acc[key] = acc[key] + prod
            else:
                acc[key] = prod
    return SparseMap(f.ring, f.d, f.n_in, g.n_out, _clean(f.ring, acc))


def _tensor(f: SparseMap, g: SparseMap) -> SparseMap:
    acc: dict[Key, RingElement] = {}
    for (w1, u1), v1 in f.entries.items():
        for (w2, u2), v2 in g.entries.items():
            acc[(w1 + w2, u1 + u2)] = v1 * v2
    return SparseMap(f.ring, f.d, f.n_in + g.n_in, f.n_out + g.n_out,
                     _clean(f.ring, acc))


def _apply_blocks(a: SparseMap, blocks: list[SparseMap]) -> SparseMap:
    """Compose ``a`` with a parallel layer of blocks without ever building
    the layer's own map; wide identity padding stays free this way."""
    n_out = sum(b.n_out for b in blocks)
    indexes = []
    for b in blocks:
        by_in: dict[Word, list] = {}
        for (w, u), v in b.entries.items():
            by_in.setdefault(u, []).append((w, v))
        indexes.append(by_in)
    acc: dict[Key, RingElement] = {}
    for (mid, u), base in a.entries.items():
        partial = [("", base)]
        pos = 0
        for b, by_in in zip(blocks, indexes):
            seg = mid[pos:pos + b.n_in]
            pos += b.n_in
            matches = by_in.get(seg)
            if not matches:
                partial = []
                break
            partial = [(w + bw, v * bv) for w, v in partial for bw, bv in matches]
        for w, v in partial:
            key = (w, u)
            acc[key] = acc[key] + v if key in acc else v
    return SparseMap(a.ring, a.d, a.n_in, n_out, _clean(a.ring, acc))


def interpret(t: Term, ring: RingDescriptor, d: int = 2) -> SparseMap:
    """Evaluate a term to its sparse map over ``ring`` at dimension ``d``.

    Exact rings require d = 2; the qudit tables (any d >= 2) require the
    approximate complex ring.
    """
    if d < 2:
        raise ArityError("dimension must be >= 2")
    if d > 2 and ring.kind != _ring.COMPLEX_APPROX:
        raise UnsupportedOperationError(
            "dimensions above 2 need the approximate complex ring")
    qudit_path = ring.kind == _ring.COMPLEX_APPROX

    def go(u: Term) -> SparseMap:
        if isinstance(u, _Empty):
            return SparseMap(ring, d, 0, 0, {("", ""): _ring.one(ring)})
        if isinstance(u, Gen):
            if qudit_path:
                from . import qudit  # deferred: qudit builds on this module

                n_in, n_out, ent = qudit.generator_entries(u.gen, ring, d)
            else:
                if u.gen.label is not None and u.gen.label.ring != ring:
                    raise _ring.RingMismatchError(
                        f"label {u.gen.label} does not live in {ring}")
                n_in, n_out, ent = _qubit_generator_entries(u.gen, ring)
            return SparseMap(ring, d, n_in, n_out, ent)
        if isinstance(u, Seq):
            # peel sequential factors iteratively and apply each parallel
            # layer blockwise to the running map, so that wide layers of
            # small blocks never materialise their own maps
            factors = _term.seq_factors(u)
            acc = go(factors[0])
            for f in factors[1:]:
                if isinstance(f, Par):
                    acc = _apply_blocks(acc, [go(b) for b in _term.par_factors(f)])
                else:
                    acc = _compose(acc, go(f))
            return acc
        if isinstance(u, Par):
            return _tensor(go(u.left), go(u.right))
        raise ArityError(f"not a term: {u!r}")

    return go(t)


def map_equal(a: SparseMap, b: SparseMap) -> bool:
    """Entrywise equality, missing entries counting as zero."""
    if a.ring != b.ring:
        raise _ring.RingMismatchError(f"maps over {a.ring} and {b.ring}")
    if a.d != b.d or (a.n_in, a.n_out) != (b.n_in, b.n_out):
        return False
    zero = _ring.zero(a.ring)
    for key in a.entries.keys() | b.entries.keys():
        if not _ring.ring_equal(a.entries.get(key, zero), b.entries.get(key, zero)):
            return False
    return True


def first_difference(a: SparseMap, b: SparseMap):
    """The smallest (out, in) key where the two maps differ, or None."""
    if a.d != b.d or (a.n_in, a.n_out) != (b.n_in, b.n_out):
        return ("<arity>", "<arity>", f"{a.n_in}->{a.n_out}", f"{b.n_in}->{b.n_out}")
    zero = _ring.zero(a.ring)
    for key in sorted(a.entries.keys() | b.entries.keys()):
        va, vb = a.entries.get(key, zero), b.entries.get(key, zero)
        if not _ring.ring_equal(va, vb):
            return (key[0], key[1], str(va), str(vb))
    return None


def dagger(a: SparseMap) -> SparseMap:
    """Adjoint: swap input/output words and conjugate every coefficient."""
    ent = {(u, w): _ring.conjugate(v) for (w, u), v in a.entries.items()}
    return SparseMap(a.ring, a.d, a.n_out, a.n_in, ent)


def parity_class(a: SparseMap) -> str:
    """Classify a dimension-2 map by the parity of weight(out) - weight(in)
    over its entries: 'even', 'odd', 'mixed', or 'zero'."""
    if a.d != 2:
        raise UnsupportedOperationError("parity grading is defined at d = 2")
    seen = set()
    for (w, u) in a.entries:
        seen.add((w.count("1") - u.count("1")) % 2)
    if not seen:
        return "zero"
    if seen == {0}:
        return "even"
    if seen == {1}:
        return "odd"
    return "mixed"


def to_json_dict(a: SparseMap) -> dict:
    entries = [
        {"out": w, "in": u, "v": _ring.format_literal(v)}
        for (w, u), v in sorted(a.entries.items())
    ]
    return {"d": a.d, "in": a.n_in, "out": a.n_out, "entries": entries}


def from_json_dict(data: dict, ring: RingDescriptor) -> SparseMap:
    entries = {
        (e["out"], e["in"]): _ring.parse_literal(ring, e["v"])
        for e in data["entries"]
    }
    return make_map(ring, data["d"], data["in"], data["out"], entries)
