"""Shared test machinery: an independent dense evaluator and random terms.

The dense oracle re-derives every generator matrix from scratch with
numpy object arrays over plain Python ints, and composes with matmul and
kron.  It shares no code with the package's sparse interpreter, so
agreement between the two is meaningful.  Capped at 4 total wires
(2^4 x 2^4 = 256 entries, comfortably below the 4096-entry budget).
"""

from __future__ import annotations

import random

import numpy as np

from zwcalc import ring as zring
from zwcalc import term as zterm
from zwcalc.term import Gen, Par, Seq, Term, _Empty


def _kron(a, b):
    return np.kron(a, b)


def _gen_matrix(g, ring):
    one = zring.one(ring)
    zero = zring.zero(ring)

    def mat(rows, cols):
        m = np.empty((rows, cols), dtype=object)
        m[:] = zero
        return m

    if g.kind == "id":
        m = mat(2, 2)
        m[0, 0] = m[1, 1] = one
        return m
    if g.kind == "swap":
        m = mat(4, 4)
        for b1 in range(2):
            for b2 in range(2):
                m[b2 * 2 + b1, b1 * 2 + b2] = one
        return m
    if g.kind in ("x", "xinv"):
        m = mat(4, 4)
        for b1 in range(2):
            for b2 in range(2):
                m[b2 * 2 + b1, b1 * 2 + b2] = -one if b1 == b2 == 1 else one
        return m
    if g.kind == "cup":
        m = mat(4, 1)
        m[0b00, 0] = m[0b11, 0] = one
        return m
    if g.kind == "cap":
        m = mat(1, 4)
        m[0, 0b00] = m[0, 0b11] = one
        return m
    if g.kind == "w":
        k, n = g.n_in, g.n_out
        m = mat(2 ** n, 2 ** k)
        for u in range(2 ** k):
            for v in range(2 ** n):
                if bin(u).count("1") + bin(v).count("1") == 1:
                    m[v, u] = one
        return m
    if g.kind == "z":
        k, n = g.n_in, g.n_out
        m = mat(2 ** n, 2 ** k)
        m[0, 0] = m[0, 0] + one
        m[2 ** n - 1, 2 ** k - 1] = m[2 ** n - 1, 2 ** k - 1] + g.label
        return m
    if g.kind == "ket":
        m = mat(2, 1)
        m[g.level, 0] = one
        return m
    raise AssertionError(g.kind)


def dense_evaluate(t: Term, ring) -> np.ndarray:
    """Dense matrix of a d=2 term, 2^n_out x 2^n_in, object entries."""
    if isinstance(t, _Empty):
        m = np.empty((1, 1), dtype=object)
        m[0, 0] = zring.one(ring)
        return m
    if isinstance(t, Gen):
        return _gen_matrix(t.gen, ring)
    if isinstance(t, Seq):
        return dense_evaluate(t.then, ring) @ dense_evaluate(t.first, ring)
    if isinstance(t, Par):
        return _kron(dense_evaluate(t.left, ring), dense_evaluate(t.right, ring))
    raise AssertionError(t)


def sparse_to_dense(m, ring) -> np.ndarray:
    out = np.empty((2 ** m.n_out, 2 ** m.n_in), dtype=object)
    out[:] = zring.zero(ring)
    for (w, u), v in m.entries.items():
        r = int(w, 2) if w else 0
        c = int(u, 2) if u else 0
        out[r, c] = v
    return out


def dense_equal(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    return all(
        zring.ring_equal(a[i, j], b[i, j])
        for i in range(a.shape[0]) for j in range(a.shape[1])
    )


# --- random well-arity terms ------------------------------------------------

WIRE_POOL = ("id", "swap", "cup", "cap", "x")
EVEN_POOL = WIRE_POOL + ("delta2", "mu2", "delta0", "mu0")
PURE_POOL = WIRE_POOL + ("w12", "w21", "w11", "w02", "w20", "w03", "w10", "w01")
FULL_POOL = PURE_POOL + ("z11", "z12", "z21", "z02", "z10", "z13", "ket0", "ket1")


def _pick_gadget(name, rng, labels):
    if name == "id":
        return zterm.ID
    if name == "swap":
        return zterm.SWAP
    if name == "cup":
        return zterm.CUP
    if name == "cap":
        return zterm.CAP
    if name == "x":
        return zterm.X
    if name == "delta2":
        return zterm.w_comonoid(2)
    if name == "mu2":
        return zterm.w_monoid(2)
    if name == "delta0":
        return zterm.w_comonoid(0)
    if name == "mu0":
        return zterm.w_monoid(0)
    if name.startswith("ket"):
        return zterm.ket(int(name[3]))
    if name.startswith("w"):
        return zterm.wspider(int(name[1]), int(name[2]))
    if name.startswith("z"):
        return zterm.zspider(int(name[1]), int(name[2]), rng.choice(labels))
    raise AssertionError(name)


def random_term(rng: random.Random, labels, pool=FULL_POOL,
                max_generators: int = 8, max_wires: int = 4) -> Term:
    """A random well-aritied composite: layered circuit, every layer a
    parallel row of pool gadgets whose inputs tile the current width."""
    budget = rng.randint(1, max_generators)

    def layer(width):
        row, used, out_w = [], 0, 0
        while used < width:
            fits = [n for n in pool
                    if _arity(n)[0] >= 1 and _arity(n)[0] <= width - used
                    and out_w + _arity(n)[1] <= max_wires + 2]
            name = rng.choice(fits)
            row.append(name)
            used += _arity(name)[0]
            out_w += _arity(name)[1]
        return row

    def _arity(name):
        probe = _pick_gadget(name, random.Random(0), labels)
        return probe.n_in, probe.n_out

    starters = [n for n in pool if _arity(n)[0] == 0]
    width = rng.randint(0, max_wires)
    if width == 0:
        t = _pick_gadget(rng.choice(starters or ["cup"]), rng, labels)
    else:
        t = zterm.par_all([_pick_gadget(n, rng, labels) for n in layer(width)])
    count = 1
    while count < budget and t.n_out > 0 and rng.random() < 0.8:
        row = layer(t.n_out)
        t = t >> zterm.par_all([_pick_gadget(n, rng, labels) for n in row])
        count += len(row)
    return t
