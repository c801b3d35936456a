"""Anyonic generalisation to d-level systems, with q-arithmetic.

Everything here is driven by ``q = exp(2 pi i / d)``, a primitive d-th
root of unity.  The deformed integers ``[n] = 1 + q + ... + q^(n-1)``
vanish at ``n = d``, which truncates the particle ladder to d levels.

Generator matrices (levels ``j, k, n`` run over ``0 .. d-1``):

* crossing      ``x: |k>|j> -> q^(jk) |j>|k>`` and its inverse;
* split         ``w: |n> -> sum_k binom(n, k)_q^(1/2) |k>|n-k>``;
* counit        ``v: |0> -> 1``, other levels to 0;
* merge         the transpose of ``w`` in the fixed basis;
* antipode      ``|n> -> (-1)^n q^(n(n-1)/2) |n>``;
* copy          ``|n> -> sqrt([n]!) |n>|n>`` and the matching discard
  ``sum_k 1/sqrt([k]!) <k|``.

Square roots always take the principal branch.  All checks are numeric,
within the tolerance carried by :class:`QParams`; exactness is not
available because the coefficients mix roots of unity with real radicals.

With d = 2 the split/merge pair specialises to the familiar qubit
beam-splitter comonoid and its transpose.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import ring as _ring
from .ring import RingDescriptor
from . import term as _term
from .term import ArityError, Generator, Term
from .semantics import SparseMap
from .normalform import NormalForm, PreNormalForm, canonicalize


class QuditError(Exception):
    pass


@dataclass(frozen=True)
class QParams:
    d: int
    tolerance: float = 1e-9

    def __post_init__(self):
        if self.d < 2:
            raise QuditError("dimension must be >= 2")
        if not self.tolerance > 0:
            raise QuditError("tolerance must be positive")
        q = self.q
        if abs(q ** self.d - 1) > self.tolerance:
            raise QuditError("q is not a d-th root of unity")
        for k in range(1, self.d):
            if abs(q ** k - 1) <= self.tolerance:
                raise QuditError("q is not primitive")

    @property
    def q(self) -> complex:
        return cmath.exp(2j * cmath.pi / self.d)

    def ring(self) -> RingDescriptor:
        return _ring.C(self.tolerance)


def _q_int(q: complex, n: int) -> complex:
    return sum(q ** k for k in range(n))


def _q_factorial(q: complex, n: int) -> complex:
    out = 1 + 0j
    for k in range(1, n + 1):
        out *= _q_int(q, k)
    return out


def _q_binom(q: complex, n: int, k: int) -> complex:
    """Product form binom(n, k) = prod_l [n-k+l]/[l]; safe wherever the
    denominator q-integers are nonzero (always for k below the order of q)."""
    if k < 0 or k > n:
        raise QuditError(f"binomial index k={k} outside 0..{n}")
    out = 1 + 0j
    for l in range(1, k + 1):
        out *= _q_int(q, n - k + l) / _q_int(q, l)
    return out


def q_int(n: int, p: QParams) -> complex:
    return _q_int(p.q, n)


def q_factorial(n: int, p: QParams) -> complex:
    return _q_factorial(p.q, n)


def q_binom(n: int, k: int, p: QParams) -> complex:
    return _q_binom(p.q, n, k)


@dataclass(frozen=True)
class QBinomialTable:
    """Cached q-integers, factorials, binomials and their principal square
    roots for all levels below d."""

    p: QParams

    @property
    def ints(self):
        return _table(self.p)[0]

    @property
    def factorials(self):
        return _table(self.p)[1]

    @property
    def binomials(self):
        return _table(self.p)[2]

    @property
    def sqrt_binomials(self):
        return _table(self.p)[3]

    @property
    def sqrt_factorials(self):
        return _table(self.p)[4]


@lru_cache(maxsize=None)
def _table(p: QParams):
    d, q = p.d, p.q
    ints = [_q_int(q, n) for n in range(d + 1)]
    facts = [_q_factorial(q, n) for n in range(d + 1)]
    binom = [[_q_binom(q, n, k) for k in range(n + 1)] for n in range(d)]
    sqrt_binom = [[cmath.sqrt(v) for v in row] for row in binom]
    sqrt_fact = [cmath.sqrt(v) for v in facts[:d]]
    return ints, facts, binom, sqrt_binom, sqrt_fact


def check_q_vandermonde(p: QParams, n: int, j: int, k: int) -> bool:
    """binom(n,k) = sum_i q^((j-i)(k-i)) binom(j,i) binom(n-j,k-i),
    evaluated numerically on both sides."""
    if not (0 <= j <= n and 0 <= k <= n and n < p.d):
        raise QuditError("need j, k <= n < d")
    q = p.q
    lhs = _q_binom(q, n, k)
    rhs = 0j
    for i in range(k + 1):
        if i > j or k - i > n - j:
            continue
        rhs += q ** ((j - i) * (k - i)) * _q_binom(q, j, i) * _q_binom(q, n - j, k - i)
    return abs(lhs - rhs) <= p.tolerance


def classical_vandermonde(n: int, j: int, k: int) -> bool:
    """The q = 1 case, checked in exact integer arithmetic."""
    lhs = math.comb(n, k)
    rhs = sum(math.comb(j, i) * math.comb(n - j, k - i)
              for i in range(min(j, k) + 1) if k - i <= n - j)
    return lhs == rhs


# ---------------------------------------------------------------------------
# dense generator matrices (numpy, basis index = big-endian digit word)


def x_matrix(p: QParams) -> np.ndarray:
    d, q = p.d, p.q
    out = np.zeros((d * d, d * d), dtype=complex)
    for k in range(d):
        for j in range(d):
            out[j * d + k, k * d + j] = q ** (j * k)
    return out


def xinv_matrix(p: QParams) -> np.ndarray:
    return x_matrix(p).conj().T


def w_matrix(p: QParams) -> np.ndarray:
    d = p.d
    sq = QBinomialTable(p).sqrt_binomials
    out = np.zeros((d * d, d), dtype=complex)
    for n in range(d):
        for k in range(n + 1):
            out[k * d + (n - k), n] += sq[n][k]
    return out


def merge_matrix(p: QParams) -> np.ndarray:
    d = p.d
    sq = QBinomialTable(p).sqrt_binomials
    out = np.zeros((d, d * d), dtype=complex)
    for k in range(d):
        for j in range(d - k):
            out[k + j, k * d + j] = sq[k + j][k]
    return out


def counit_effect(p: QParams) -> np.ndarray:
    out = np.zeros((1, p.d), dtype=complex)
    out[0, 0] = 1
    return out


def antipode_matrix(p: QParams) -> np.ndarray:
    d, q = p.d, p.q
    return np.diag([(-1) ** n * q ** (n * (n - 1) // 2) for n in range(d)])


def copy_matrix(p: QParams) -> np.ndarray:
    d = p.d
    c = QBinomialTable(p).sqrt_factorials
    out = np.zeros((d * d, d), dtype=complex)
    for n in range(d):
        out[n * d + n, n] = c[n]
    return out


def white_discard_effect(p: QParams) -> np.ndarray:
    c = QBinomialTable(p).sqrt_factorials
    out = np.zeros((1, p.d), dtype=complex)
    for k in range(p.d):
        out[0, k] = 1 / c[k]
    return out


def creation_matrix(p: QParams) -> np.ndarray:
    d = p.d
    ints = QBinomialTable(p).ints
    out = np.zeros((d, d), dtype=complex)
    for n in range(d - 1):
        out[n + 1, n] = cmath.sqrt(ints[n + 1])
    return out


def annihilation_matrix(p: QParams) -> np.ndarray:
    # transpose in the fixed basis: the same sqrt([n]) coefficients
    return creation_matrix(p).T


def dense_to_sparse(arr: np.ndarray, n_in: int, n_out: int, p: QParams) -> SparseMap:
    ring = p.ring()
    d = p.d
    entries = {}
    rows, cols = arr.shape
    for r in range(rows):
        for c in range(cols):
            v = complex(arr[r, c])
            if abs(v) > p.tolerance:
                out_w = _index_to_word(r, n_out, d)
                in_w = _index_to_word(c, n_in, d)
                entries[(out_w, in_w)] = _ring.complex_value(ring, v)
    return SparseMap(ring, d, n_in, n_out, entries)


def _index_to_word(idx: int, length: int, d: int) -> str:
    digits = []
    for _ in range(length):
        digits.append(str(idx % d))
        idx //= d
    return "".join(reversed(digits))


def qudit_matrix(g: Generator | Term, p: QParams) -> SparseMap:
    """The sparse matrix of one generator at dimension d."""
    if isinstance(g, _term.Gen):
        g = g.gen
    n_in, n_out, entries = generator_entries(g, p.ring(), p.d)
    return SparseMap(p.ring(), p.d, n_in, n_out, entries)


def _bounded_words(length: int, max_sum: int, d: int):
    """All digit words of the given length with digit sum <= max_sum."""
    if length == 0:
        yield ""
        return
    for first in range(min(d - 1, max_sum) + 1):
        for rest in _bounded_words(length - 1, max_sum - first, d):
            yield str(first) + rest


def _tree_coeff(word: str, p: QParams) -> complex:
    """Coefficient of a split/merge tree leg pattern: the product of
    binomial square roots along the partial sums."""
    sq = QBinomialTable(p).sqrt_binomials
    total = 0
    coeff = 1 + 0j
    for ch in word:
        lvl = int(ch)
        total += lvl
        if total >= p.d:
            return 0j
        coeff *= sq[total][lvl]
    return coeff


def generator_entries(g: Generator, ring: RingDescriptor, d: int):
    """Sparse entries of a generator on the qudit path.

    W spiders are split/merge trees: ``w(k, m)`` with ``k >= 1`` merges k
    wires and splits the result m ways; ``w(0, m)`` is the m-fold split
    of the one-particle state.  Z spiders scale the diagonal:
    ``z(k, m)[u]`` has entry ``c_l^(k+m-2) u^l`` on level l, with
    ``c_l = sqrt([l]!)``.
    """
    p = QParams(d, tolerance=ring.tolerance)
    one = _ring.one(ring)
    kind = g.kind
    if kind == "id":
        return 1, 1, {(w, w): one for w in map(str, range(d))}
    if kind == "swap":
        return 2, 2, {
            (b + a, a + b): one for a in map(str, range(d)) for b in map(str, range(d))
        }
    if kind in ("x", "xinv"):
        q = p.q if kind == "x" else p.q.conjugate()
        ent = {}
        for k in range(d):
            for j in range(d):
                ent[(f"{j}{k}", f"{k}{j}")] = _ring.complex_value(ring, q ** (j * k))
        return 2, 2, ent
    if kind == "cup":
        return 0, 2, {(f"{j}{j}", ""): one for j in range(d)}
    if kind == "cap":
        return 2, 0, {("", f"{j}{j}"): one for j in range(d)}
    if kind == "ket":
        if not 0 <= g.level < d:
            raise ArityError(f"ket({g.level}) out of range for d={d}")
        return 0, 1, {(str(g.level), ""): one}
    if kind == "w":
        k, m = g.n_in, g.n_out
        ent = {}
        if k == 0:
            for out_w in _bounded_words(m, 1, d):
                if sum(int(c) for c in out_w) == 1:
                    ent[(out_w, "")] = _ring.complex_value(ring, _tree_coeff(out_w, p))
        else:
            for in_w in _bounded_words(k, d - 1, d):
                a = _tree_coeff(in_w, p)
                if abs(a) <= p.tolerance:
                    continue
                s = sum(int(c) for c in in_w)
                for out_w in _bounded_words(m, s, d):
                    if sum(int(c) for c in out_w) != s:
                        continue
                    b = _tree_coeff(out_w, p)
                    v = a * b
                    if abs(v) > p.tolerance:
                        ent[(out_w, in_w)] = _ring.complex_value(ring, v)
        return k, m, ent
    if kind == "z":
        k, m = g.n_in, g.n_out
        if g.label.ring != ring:
            raise _ring.RingMismatchError(f"label {g.label} does not live in {ring}")
        lam = complex(g.label.value)
        c = QBinomialTable(p).sqrt_factorials
        ent = {}
        for l in range(d):
            v = c[l] ** (k + m - 2) * lam ** l
            if abs(v) > p.tolerance:
                ent[(str(l) * m, str(l) * k)] = _ring.complex_value(ring, v)
        return k, m, ent
    raise ArityError(f"unknown generator {kind!r}")


def antipode_term(d: int) -> Term:
    """The antipode as a diagram: the strand crosses a split-off copy of
    the top level, which is then merged back and post-selected."""
    side = _term.ket(d - 1, d) >> _term.wspider(1, 2)
    t = _term.ID @ side
    t = t >> (_term.X @ _term.ID)
    t = t >> (_term.ID @ _term.wspider(2, 1))
    return t >> (_term.ID @ _term.bra(d - 1, d))


# ---------------------------------------------------------------------------
# law checks


@dataclass(frozen=True)
class QuditCheckReport:
    name: str
    d: int
    passed: bool
    max_error: float
    detail: str = ""

    def __str__(self):
        flag = "pass" if self.passed else "FAIL"
        return f"{self.name} d={self.d}: {flag} (max error {self.max_error:.3g}) {self.detail}".rstrip()


def check_bialgebra(p: QParams, w_override: np.ndarray | None = None) -> QuditCheckReport:
    """Split and merge satisfy the bialgebra square with the crossing as
    braiding; also re-checks the underlying binomial identity directly."""
    d, q = p.d, p.q
    W = w_matrix(p) if w_override is None else w_override
    M = W.T if w_override is not None else merge_matrix(p)  # transpose in the fixed basis
    Id = np.eye(d)
    lhs = np.kron(M, M) @ np.kron(np.kron(Id, x_matrix(p)), Id) @ np.kron(W, W)
    rhs = W @ M
    err = float(np.max(np.abs(lhs - rhs)))
    detail = ""
    if w_override is None:
        worst = 0.0
        for n in range(d):
            for j in range(n + 1):
                for k in range(n + 1):
                    l2 = cmath.sqrt(_q_binom(q, n, j)) * cmath.sqrt(_q_binom(q, n, k))
                    r2 = sum(
                        q ** ((k - i) * (j - i))
                        * cmath.sqrt(_q_binom(q, j, i))
                        * cmath.sqrt(_q_binom(q, n - j, k - i))
                        * cmath.sqrt(_q_binom(q, k, i))
                        * cmath.sqrt(_q_binom(q, n - k, j - i))
                        for i in range(k + 1)
                        if i <= j and k - i <= n - j and j - i <= n - k
                    )
                    worst = max(worst, abs(l2 - r2))
        err = max(err, worst)
        detail = f"coefficient identity error {worst:.3g}"
    return QuditCheckReport("bialgebra", d, err <= p.tolerance, err, detail)


def check_commutation(p: QParams, bosonic_levels: int = 8) -> QuditCheckReport:
    """a a+ = 1 + q a+ a at the deformation q, and the flat q = 1 ladder
    commutator on a truncated space away from the cut-off."""
    d, q = p.d, p.q
    a = annihilation_matrix(p)
    adag = creation_matrix(p)
    err = float(np.max(np.abs(a @ adag - (np.eye(d) + q * (adag @ a)))))
    # bosonic truncation: sqrt(n+1) ladder, checked below the boundary
    n = bosonic_levels
    ad1 = np.zeros((n, n))
    for lvl in range(n - 1):
        ad1[lvl + 1, lvl] = math.sqrt(lvl + 1)
    comm = ad1.T @ ad1 - ad1 @ ad1.T  # a a+ - a+ a on the truncated space
    boso_err = float(np.max(np.abs((comm - np.eye(n))[: n - 1, : n - 1])))
    err = max(err, boso_err)
    return QuditCheckReport(
        "commutation", d, err <= p.tolerance, err,
        f"bosonic truncation error {boso_err:.3g}")


def check_antipode(p: QParams) -> QuditCheckReport:
    """The antipode closes the Hopf loop: merge (t x id) split = unit counit."""
    W = w_matrix(p)
    M = merge_matrix(p)
    t = antipode_matrix(p)
    h = M @ np.kron(t, np.eye(p.d)) @ W
    expected = np.zeros((p.d, p.d))
    expected[0, 0] = 1
    err = float(np.max(np.abs(h - expected)))
    return QuditCheckReport("antipode-hopf", p.d, err <= p.tolerance, err)


def qudit_universal_nf(state: SparseMap, p: QParams) -> tuple[Term, NormalForm]:
    """Rebuild a state as the canonical diagram: a one-particle source
    split between labelled white nodes, each wired to the outputs with
    one wire per level, everything merged at the top.

    Merging k parallel particles yields sqrt([k]!) |k> up to the branch
    cuts of the square roots, so the label of row i is its amplitude
    divided by the merge tree's actual coefficient for each leg bundle
    (the principal-root product, which may differ from sqrt([k_ij]!) by
    a sign once the binomial arguments wrap past pi).
    """
    if state.n_in != 0:
        raise ArityError("universal construction takes a state")
    if state.d != p.d or state.ring.kind != _ring.COMPLEX_APPROX:
        raise QuditError("state must live over the complex ring at dimension d")
    ring = p.ring()
    n = state.n_out
    rows = [
        (complex(v.value), w)
        for (w, _), v in sorted(state.entries.items())
        if abs(complex(v.value)) > p.tolerance
    ]
    if not rows:
        absorbing = _term.ket(1, p.d) >> _term.wspider(1, 0)
        t = _term.par_all([absorbing] + [_term.ket(0, p.d)] * n)
        return t, NormalForm(p.d, n, ())
    m = len(rows)
    bottom = _term.ket(1, p.d) >> _term.wspider(1, m)
    whites = []
    origin = []
    for i, (amp, word) in enumerate(rows):
        adjusted = amp
        for ch in word:
            if int(ch):
                adjusted /= _tree_coeff("1" * int(ch), p)
        fan = sum(int(ch) for ch in word)
        whites.append(_term.zspider(1, fan, _ring.complex_value(ring, adjusted)))
        for j, ch in enumerate(word):
            origin.extend([(i, j)] * int(ch))
    target = sorted(range(len(origin)), key=lambda q_: (origin[q_][1], origin[q_][0]))
    perm = [0] * len(origin)
    for pos, q_ in enumerate(target):
        perm[q_] = pos
    merges = []
    for j in range(n):
        k_j = sum(int(word[j]) for _, word in rows)
        merges.append(_term.wspider(k_j, 1) if k_j else _term.ket(0, p.d))
    t = bottom >> _term.par_all(whites)
    t = t >> _term.crossing_perm(perm)
    t = t >> _term.par_all(merges)
    nf = canonicalize(PreNormalForm(
        p.d, n, tuple((_ring.complex_value(ring, a), w) for a, w in rows)))
    return t, nf
