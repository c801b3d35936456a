"""Canonical normal forms: every diagram rewrites to a sorted list of
(coefficient, connection word) rows, and semantically equal diagrams
rewrite to the same rows.

The normalizer never calls the interpreter; agreement between the two is
the desk-scale version of completeness.
"""

import random

from zwcalc import ring, term
from zwcalc.normalform import nf_of_state, nf_to_term, normalize
from zwcalc.semantics import interpret, make_map, map_equal

Z = ring.Z()


def show(nf):
    return [(str(c), w) for c, w in nf.rows]


# Two very different-looking presentations of the same state.
a = term.parse("w(0,2) ; (w(1,1) * id)", Z)          # W state, one leg negated
b = term.parse("cup", Z)                              # the bent wire
print("normalize(a):", show(normalize(a, Z).nf))
print("normalize(b):", show(normalize(b, Z).nf))
print("identical rows:", normalize(a, Z).nf == normalize(b, Z).nf)

# The antipode loop collapses to the |0><0| projector.
hopf = term.parse(
    "(w(1,1) ; w(1,2)) ; (id * z(1,1)[-1]) ; (w(2,1) ; w(1,1))", Z)
print("\nantipode loop:", show(normalize(hopf, Z).nf),
      "== z(1,1)[0]:", normalize(hopf, Z) == normalize(term.parse("z(1,1)[0]", Z), Z))

# Maps normalize through their fully bent state; the crossing picks up a
# sign on the all-ones row.
print("\ncrossing, bent:", show(normalize(term.X, Z).nf))

# Round trip: any sparse state is the interpretation of its canonical
# diagram.
rng = random.Random(1)
entries = {("".join(rng.choice("01") for _ in range(3)), ""):
           ring.from_int(Z, rng.randint(-5, 5)) for _ in range(4)}
v = make_map(Z, 2, 0, 3, entries)
nf = nf_of_state(v)
rebuilt = interpret(nf_to_term(nf), Z)
print("\nstate rows:    ", show(nf))
print("canonical term:", term.render(nf_to_term(nf)))
print("round trip:    ", map_equal(rebuilt, v))

# What makes this a decision procedure: on arbitrary terms, syntactic
# normalization agrees with the interpreter, entry for entry.
pool = [term.parse(s, Z) for s in (
    "x ; (w(1,2) * id)", "cup * z(0,1)[2]", "w(0,2) ; x ; cap",
    "(z(1,2)[-1] * id) ; (id * cap)")]
agree = all(
    map_equal(normalize(t, Z).to_sparse(Z), interpret(t, Z)) for t in pool)
print("\nnormalize vs interpret on assorted terms:", agree)
