"""Small builders for writing letter-labelled instances in tests."""
from fractions import Fraction

from twistbialg import graphs, setcomp, topology
from twistbialg.lincomb import LinComb

# One summary line per acceptance criterion, printed at the end of the pytest session.
ACCEPTANCE_LINES: dict[str, str] = {}


def comp(*blocks):
    """comp("A", "BC") is the set composition ({A}, {B, C})."""
    return setcomp.make([list(b) for b in blocks])


def lc(*terms):
    """lc((coeff, key), ...) or lc(key, ...) with coefficient 1."""
    pairs = []
    for t in terms:
        if isinstance(t, tuple) and len(t) == 2 and isinstance(t[0], (int, Fraction)):
            pairs.append((t[1], t[0]))
        else:
            pairs.append((t, 1))
    return LinComb(pairs)


def graph(blocks, edges=()):
    """graph(["A", "B"], ["AB"]): edges are given by the first label of each endpoint block."""
    bl = [list(b) for b in blocks]
    where = {b[0]: i for i, b in enumerate(bl)}
    return graphs.make(bl, [(where[e[0]], where[e[1]]) for e in edges])


def top(classes, relations=()):
    """top(["A", "B"], ["AB"]) is A < B; relations name classes by their first label."""
    cl = [list(c) for c in classes]
    where = {c[0]: i for i, c in enumerate(cl)}
    return topology.make(cl, [(where[r[0]], where[r[1]]) for r in relations])
