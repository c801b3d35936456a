"""Catalogue of the calculus's equations, checked against the interpreter.

Every axiom and derived rule is materialised as a pair of closed terms at
concrete arities and labels.  Parameterised families (spider fusion, the
bialgebra squares, ...) are enumerated over small bounds.  A rule's two
sides are built as term-grammar strings first and parsed back, so the
whole catalogue can be dumped to a plain text file and audited line by
line; see :func:`write_catalog`.

``check_rule`` evaluates both sides with the sparse interpreter and
reports the first differing matrix entry on failure.  For rules that
hold only under extra relations in the coefficient ring (none in the
base catalogue) the checker is ring-sensitive by construction.

Naming follows the calculus: ``adj`` the snake equations, ``com`` the
commutativity of cup and cap, ``rei`` the Reidemeister moves of the
crossing, ``nat`` naturality/sliding rules, ``cut``/``tr``/``sym`` spider
fusion, self-trace and leg exchange, ``ba`` the bialgebra squares,
``ant`` the crossing/negation anticommutation, ``inv``/``id``/``rng``
the unit laws, ``loop``/``lp`` white-black loop collapse, ``ph`` kink
sliding, ``unx`` crossing removal over copied wires, and the derived
``xnat``, ``aut``, ``sum``, ``crossminus`` and ``hopf``.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import ring as _ring
from .ring import RingDescriptor, RingElement
from . import term as _term
from .term import Term, parse, render
from .semantics import first_difference, interpret, map_equal


@dataclass(frozen=True)
class RuleInstance:
    name: str
    params: str
    lhs: Term
    rhs: Term
    lhs_text: str
    rhs_text: str

    def __post_init__(self):
        if (self.lhs.n_in, self.lhs.n_out) != (self.rhs.n_in, self.rhs.n_out):
            raise _term.ArityError(
                f"rule {self.name}[{self.params}] sides have different arities")


@dataclass(frozen=True)
class RuleReport:
    name: str
    params: str
    passed: bool
    witness: tuple | None = None

    def __str__(self):
        if self.passed:
            return f"{self.name:<12} {self.params:<24} pass"
        out_w, in_w, lv, rv = self.witness
        return (f"{self.name:<12} {self.params:<24} FAIL at (out={out_w!r}, "
                f"in={in_w!r}): {lv} vs {rv}")


@dataclass(frozen=True)
class RuleBounds:
    max_spider_arity: int = 4
    max_nm: int = 3
    label_samples: tuple[str, ...] = ("0", "1", "-1", "2", "-2", "i", "1+i")


DEFAULT_BOUNDS = RuleBounds()


def labels_for(ring: RingDescriptor, bounds: RuleBounds) -> list[RingElement]:
    out = []
    for text in bounds.label_samples:
        try:
            out.append(_ring.parse_literal(ring, text))
        except _ring.RingError:
            continue  # imaginary samples do not exist over the integers
    return out


# --- term builders ---------------------------------------------------------

def _lit(r: RingElement) -> str:
    return _ring.format_literal(r)


def _wires(n: int) -> Term:
    return _term.identity(n)


def _delta(m: int) -> Term:
    return _term.w_comonoid(m)


def _mu(n: int) -> Term:
    return _term.w_monoid(n)


def _zc(m: int, r: RingElement) -> Term:
    return _term.zspider(1, m, r)


_ONE_SCALAR = "z(0,1)[1] ; w(1,0)"  # the empty diagram written in the grammar


def _shuffle(n: int, m: int) -> Term:
    """Route n groups of m wires to m groups of n, one crossing per pair."""
    perm = [j * n + i for i in range(n) for j in range(m)]
    return _term.crossing_perm(perm)


def _bipartite(bottom: list[Term], m: int, top: list[Term]) -> Term:
    n = len(bottom)
    t = _term.par_all(bottom) if bottom else _term.EMPTY
    t = t >> _shuffle(n, m) if n and m else t
    top_t = _term.par_all(top) if top else _term.EMPTY
    if n == 0:
        return top_t
    if m == 0:
        return t
    return t >> top_t


def _rule(name: str, params: str, lhs: Term | str, rhs: Term | str,
          ring: RingDescriptor) -> RuleInstance:
    lhs_text = lhs if isinstance(lhs, str) else render(lhs)
    rhs_text = rhs if isinstance(rhs, str) else render(rhs)
    return RuleInstance(name, params,
                        parse(lhs_text, ring), parse(rhs_text, ring),
                        lhs_text, rhs_text)


# --- the catalogue ---------------------------------------------------------

def _fixed_rules(ring: RingDescriptor) -> list[RuleInstance]:
    tw = _term.twist()
    out = [
        _rule("adj_L", "", (_term.ID @ _term.CUP) >> (_term.CAP @ _term.ID),
              _term.ID, ring),
        _rule("adj_R", "", (_term.CUP @ _term.ID) >> (_term.ID @ _term.CAP),
              _term.ID, ring),
        _rule("com_co", "", _term.CUP >> _term.SWAP, _term.CUP, ring),
        _rule("com", "", _term.SWAP >> _term.CAP, _term.CAP, ring),
        _rule("rei_x_1", "",
              (_term.ID @ _term.CUP) >> (_term.X @ _term.ID) >> (_term.ID @ _term.CAP),
              (_term.CUP @ _term.ID) >> (_term.ID @ _term.X) >> (_term.CAP @ _term.ID),
              ring),
        _rule("rei_x_2", "", _term.X >> _term.X, _term.ID @ _term.ID, ring),
        _rule("rei_x_3", "",
              (_term.X @ _term.ID) >> (_term.ID @ _term.X) >> (_term.X @ _term.ID),
              (_term.ID @ _term.X) >> (_term.X @ _term.ID) >> (_term.ID @ _term.X),
              ring),
        _rule("nat_x_eta", "",
              (_term.CUP @ _term.ID) >> (_term.ID @ _term.X) >> (_term.X @ _term.ID),
              _term.ID @ _term.CUP, ring),
        _rule("nat_x_eps", "", _term.CAP @ _term.ID,
              (_term.ID @ _term.X) >> (_term.X @ _term.ID) >> (_term.ID @ _term.CAP),
              ring),
        _rule("nat_x_w", "",
              (_delta(2) @ _term.ID) >> (_term.ID @ _term.X) >> (_term.X @ _term.ID),
              _term.X >> (_term.ID @ _delta(2)), ring),
        _rule("inv", "", _term.negate() >> _term.negate(), _term.ID, ring),
        _rule("ant_x_n", "", (_term.negate() @ _term.ID) >> _term.X,
              _term.X >> (tw @ _term.negate()), ring),
        _rule("frm", "", tw >> tw, _term.ID, ring),
        _rule("id", "", _term.zspider(1, 1, _ring.one(ring)), _term.ID, ring),
        _rule("rng_1", "", _term.zspider(1, 1, _ring.one(ring)), _term.ID, ring),
        _rule("rng_-1", "", _term.zspider(1, 1, -_ring.one(ring)), tw, ring),
        _rule("ph", "",
              _zc(2, _ring.one(ring)) >> (tw @ _term.ID),
              tw >> _zc(2, _ring.one(ring)), ring),
        _rule("nat_c_n", "",
              _zc(2, _ring.one(ring)) >> (_term.negate() @ _term.negate()),
              _term.negate() >> _zc(2, _ring.one(ring)), ring),
    ]
    return out


def _join(a: Term, leg_a: int, b: Term, through_tick: bool) -> Term:
    """Plug the last output of a into the first output of b, optionally
    through a binary node; a and b are states."""
    mid = _term.negate() if through_tick else _term.ID
    t = a @ b
    t = t >> _term.par_all([_wires(leg_a - 1), mid, _wires(b.n_out)])
    return t >> _term.par_all([_wires(leg_a - 1), _term.CAP, _wires(b.n_out - 1)])


def axiom_instances(bounds: RuleBounds = DEFAULT_BOUNDS,
                    ring: RingDescriptor | None = None) -> list[RuleInstance]:
    """One instance per axiom per admissible parameter tuple."""
    ring = _ring.Qi() if ring is None else ring
    labels = labels_for(ring, bounds)
    two = _ring.from_int(ring, 2)
    three = _ring.from_int(ring, 3)
    arities = range(1, bounds.max_spider_arity + 1)
    nms = range(0, bounds.max_nm + 1)
    out = _fixed_rules(ring)

    for a in arities:
        for b in arities:
            rhs = (_term.wspider(0, a + b - 2) if a + b > 2
                   else parse("w(0,2) ; cap", ring))  # the zero scalar
            out.append(_rule("cut_w", f"a={a},b={b}",
                             _join(_term.wspider(0, a), a, _term.wspider(0, b), True),
                             rhs, ring))
    for n in range(0, bounds.max_spider_arity - 1):
        out.append(_rule("tr_w", f"n={n}",
                         _term.wspider(0, n + 2) >> _term.par_all([_wires(n), _term.CAP]),
                         _term.wspider(0, n) if n
                         else _term.parse("w(0,2) ; cap", ring), ring))
    for n in range(2, bounds.max_spider_arity + 1):
        w_n = _term.wspider(0, n)
        rest = _wires(n - 2)
        out.append(_rule("sym_w", f"n={n}", w_n >> _term.par_all([_term.SWAP, rest]),
                         w_n, ring))
        out.append(_rule("sym_w_x", f"n={n}", w_n >> _term.par_all([_term.X, rest]),
                         w_n, ring))
    for n in nms:
        for m in nms:
            lhs = _bipartite([_delta(m) for _ in range(n)], m,
                             [_mu(n) for _ in range(m)])
            rhs = _term.wspider(n, 1) >> _term.wspider(1, m)
            if (n, m) == (0, 0):
                lhs, rhs = _ONE_SCALAR, "w(0,1) ; w(1,0)"
            out.append(_rule("ba_w", f"n={n},m={m}", lhs, rhs, ring))

    cut_z_pairs = [(r, s) for r in labels for s in labels]
    for a in arities:
        for b in arities:
            pairs = cut_z_pairs if (a, b) == (2, 2) else [(two, three)]
            for r, s in pairs:
                if a + b == 2:
                    # scalar fusion: z_1^r plugged into z_1^s gives 1 + rs
                    rhs = parse(f"z(0,2)[{_lit(r * s)}] ; cap", ring)
                else:
                    rhs = _term.zspider(0, a + b - 2, r * s)
                out.append(_rule(
                    "cut_z", f"a={a},b={b},r={_lit(r)},s={_lit(s)}",
                    _join(_term.zspider(0, a, r), a, _term.zspider(0, b, s), False),
                    rhs, ring))
    for n in range(0, bounds.max_spider_arity - 1):
        for r in labels:
            lhs = _term.zspider(0, n + 2, r) >> _term.par_all([_wires(n), _term.CAP])
            rhs = (_term.zspider(0, n, r) if n
                   else _term.parse(f"z(0,2)[{_lit(r)}] ; cap", ring))
            out.append(_rule("tr_z", f"n={n},r={_lit(r)}", lhs, rhs, ring))
    for n in range(2, bounds.max_spider_arity + 1):
        for r in labels:
            z_n = _term.zspider(0, n, r)
            out.append(_rule("sym_z", f"n={n},r={_lit(r)}",
                             z_n >> _term.par_all([_term.SWAP, _wires(n - 2)]),
                             z_n, ring))

    for n in nms:
        for m in range(1, bounds.max_nm + 1):
            rs = labels if (n, m) == (2, 2) else [three]
            for r in rs:
                lhs = _bipartite([_zc(m, r) for _ in range(n)], m,
                                 [_mu(n) for _ in range(m)])
                rhs = _mu(n) >> _zc(m, r)
                out.append(_rule("ba_zw", f"n={n},m={m},r={_lit(r)}",
                                 lhs, rhs, ring))
    for r in labels:
        out.append(_rule("loop", f"r={_lit(r)}",
                         _zc(2, r) >> _mu(2), _delta(0) >> _mu(0), ring))
    for r in labels:
        for s in labels:
            out.append(_rule(
                "unx", f"r={_lit(r)},s={_lit(s)}",
                _delta(2) >> (_zc(2, r) @ _zc(2, s))
                >> _term.par_all([_term.ID, _term.X, _term.ID]),
                _delta(2) >> (_zc(2, r) @ _zc(2, s))
                >> _term.par_all([_term.ID, _term.SWAP, _term.ID]), ring))
    for r in labels:
        for s in labels:
            out.append(_rule(
                "rng_+", f"r={_lit(r)},s={_lit(s)}",
                _delta(2) >> (_term.zspider(1, 1, r) @ _term.zspider(1, 1, s)) >> _mu(2),
                _term.zspider(1, 1, r + s), ring))
    return out


def derived_instances(bounds: RuleBounds = DEFAULT_BOUNDS,
                      ring: RingDescriptor | None = None) -> list[RuleInstance]:
    """Instances of the derived rules; the checker treats them like axioms."""
    ring = _ring.Qi() if ring is None else ring
    labels = labels_for(ring, bounds)
    one = _ring.one(ring)
    out = []
    for n in range(0, bounds.max_nm + 1):
        rot = list(range(1, n + 1)) + [0]
        lhs = (_delta(n) @ _term.ID) >> _term.crossing_perm(rot)
        rhs = _term.X >> (_term.ID @ _delta(n))
        out.append(_rule("xnat", f"n={n}", lhs, rhs, ring))
    for n in range(0, bounds.max_nm + 1):
        negs = _term.par_all([_term.negate()] * n)
        lhs = _zc(n, one) >> negs if n else _zc(0, one)
        rhs = _term.negate() >> _zc(n, one)
        out.append(_rule("aut", f"n={n}", lhs, rhs, ring))
    for n in range(2, bounds.max_spider_arity + 1):
        for r in labels:
            out.append(_rule("lp", f"n={n},r={_lit(r)}",
                             _zc(n, r) >> _mu(n), _delta(0) >> _mu(0), ring))
    sum_tuples = [(), *((r,) for r in labels)]
    pool = labels * 3
    sum_tuples += [tuple(pool[:2]), tuple(pool[1:3]), tuple(pool[2:5:2]),
                   tuple(pool[:3])]
    for rs in sum_tuples:
        n = len(rs)
        mids = _term.par_all([_term.zspider(1, 1, r) for r in rs])
        lhs = _delta(n) >> mids >> _mu(n) if n else _delta(0) >> _mu(0)
        total = _ring.zero(ring)
        for r in rs:
            total = total + r
        rhs = _term.zspider(1, 1, total)
        out.append(_rule("sum", "rs=" + ",".join(_lit(r) for r in rs), lhs, rhs, ring))
    for r in labels:
        out.append(_rule("crossminus", f"r={_lit(r)}",
                         _zc(2, r) >> _term.X, _zc(2, -r), ring))
    out.append(_rule("hopf", "",
                     _delta(2) >> (_term.ID @ _term.twist()) >> _mu(2),
                     _delta(0) >> _mu(0), ring))
    out.extend(_lemma_schema_instances(ring))
    # the generalized bialgebra squares are derivable as well as axiomatic
    for inst in axiom_instances(RuleBounds(bounds.max_spider_arity, bounds.max_nm,
                                           bounds.label_samples[:4]), ring):
        if inst.name in ("ba_w", "ba_zw"):
            out.append(RuleInstance("d_" + inst.name, inst.params, inst.lhs,
                                    inst.rhs, inst.lhs_text, inst.rhs_text))
    return out


def _lemma_schema_instances(ring: RingDescriptor) -> list[RuleInstance]:
    """Negation, trace and absorption, stated on concrete small diagrams
    via the canonical-form builders."""
    from . import normalform as _nf

    one = _ring.one(ring)
    two = _ring.from_int(ring, 2)
    m_two = -two
    sample = _nf.canonicalize(_nf.PreNormalForm(2, 3, (
        (one, "000"), (two, "011"), (m_two, "110"), (one, "111"))))
    out = []
    for j in range(3):
        lhs = _nf.nf_to_term(sample) >> _term.par_all(
            [_wires(j), _term.negate(), _wires(2 - j)])
        rhs = _nf.nf_to_term(_nf.nf_negate(sample, j))
        out.append(_rule("negation", f"j={j}", lhs, rhs, ring))
    for j, k in [(0, 1), (0, 2), (1, 2)]:
        plug = _term.par_all([_wires(j), _term.CAP, _wires(1)]) if (j, k) == (0, 1) \
            else _term.par_all([_wires(1), _term.CAP]) if (j, k) == (1, 2) \
            else (_term.par_all([_term.ID, _term.SWAP])
                  >> _term.par_all([_term.CAP, _term.ID]))
        lhs = _nf.nf_to_term(sample) >> plug
        rhs = _nf.nf_to_term(_nf.nf_trace(sample, j, k))
        out.append(_rule("trace", f"j={j},k={k}", lhs, rhs, ring))
    empty2 = _nf.NormalForm(2, 2, ())
    other = _nf.canonicalize(_nf.PreNormalForm(2, 1, ((one, "0"), (two, "1"))))
    out.append(_rule(
        "absorption", "",
        _term.par(_nf.nf_to_term(empty2), _nf.nf_to_term(other)),
        _nf.nf_to_term(_nf.NormalForm(2, 3, ())), ring))
    return out


def check_rule(r: RuleInstance, desc: RingDescriptor, d: int = 2) -> RuleReport:
    try:
        lhs = interpret(r.lhs, desc, d)
        rhs = interpret(r.rhs, desc, d)
    except Exception as exc:  # report evaluation failures, do not raise
        return RuleReport(r.name, r.params, False,
                          ("<error>", "<error>", type(exc).__name__, str(exc)))
    if map_equal(lhs, rhs):
        return RuleReport(r.name, r.params, True)
    return RuleReport(r.name, r.params, False, first_difference(lhs, rhs))


def check_all(instances, desc: RingDescriptor, d: int = 2) -> list[RuleReport]:
    reports = [check_rule(r, desc, d) for r in instances]
    reports.sort(key=lambda rep: (rep.name, rep.params))
    return reports


def mutate(r: RuleInstance) -> RuleInstance:
    """Negative control: damage the left side with a stray binary node."""
    if r.lhs.n_out >= 1:
        lhs = r.lhs >> _term.par_all([_term.negate(), _wires(r.lhs.n_out - 1)])
    elif r.lhs.n_in >= 1:
        lhs = _term.par_all([_term.negate(), _wires(r.lhs.n_in - 1)]) >> r.lhs
    else:
        flip = parse("z(0,1)[-1] ; w(1,0)", _ring.Qi())  # the scalar -1
        lhs = r.lhs @ flip
    return RuleInstance("mut_" + r.name, r.params, lhs, r.rhs,
                        render(lhs), r.rhs_text)


# --- catalogue file --------------------------------------------------------

def write_catalog(path: str | Path, bounds: RuleBounds = DEFAULT_BOUNDS,
                  ring: RingDescriptor | None = None) -> None:
    ring = _ring.Qi() if ring is None else ring
    lines = []
    for inst in axiom_instances(bounds, ring) + derived_instances(bounds, ring):
        lines.append(f"{inst.name} | {inst.params} | {inst.lhs_text} | {inst.rhs_text}")
    Path(path).write_text("\n".join(lines) + "\n")


def load_catalog(path: str | Path, ring: RingDescriptor | None = None) -> list[RuleInstance]:
    ring = _ring.Qi() if ring is None else ring
    out = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 4:
            raise ValueError(f"{path}:{lineno}: expected 4 fields")
        name, params, lhs_text, rhs_text = parts
        out.append(RuleInstance(name, params, parse(lhs_text, ring),
                                parse(rhs_text, ring), lhs_text, rhs_text))
    return out


DEFAULT_CATALOG = Path(__file__).with_name("rules_default.txt")
