#!/usr/bin/env python3
"""Writes the bundled model files. Run from any directory."""

import itertools
import json
import os
from fractions import Fraction

HERE = os.path.dirname(os.path.abspath(__file__))


def s(x):
    """Scalar string for an int, Fraction or (re, im) pair."""
    if isinstance(x, tuple):
        re, im = (Fraction(v) for v in x)
        if im == 0:
            return s(re)
        ims = str(im) + "*i"
        return ims if re == 0 else str(re) + "+" + ims
    return str(Fraction(x))


def mat(rows):
    return [[s(x) for x in row] for row in rows]


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def dump(value, indent=0):
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(value, list) and all(not isinstance(v, (list, dict)) for v in value):
        return json.dumps(value, separators=(", ", ": "))
    if isinstance(value, list):
        return "[\n" + ",\n".join(inner + dump(v, indent + 1) for v in value) + "\n" + pad + "]"
    if isinstance(value, dict):
        items = [inner + json.dumps(k) + ": " + dump(v, indent + 1) for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}" if items else "{}"
    return json.dumps(value)


def write(path, doc):
    full = os.path.join(HERE, path)
    os.makedirs(os.path.dirname(full), exist_ok=True)
    with open(full, "w") as f:
        f.write(dump(doc) + "\n")


def bracket(p, i, q, j, out):
    return {"p": p, "i": i, "q": q, "j": j, "out": [[k, s(c)] for k, c in out]}


def heis(**extra):
    doc = {
        "name": "heis",
        "dims": [0, 2, 1],
        "labels": [[], ["e1", "e2"], ["f"]],
        "differential": [mat(zeros(2, 0)), mat(zeros(1, 2))],
        "bracket": [bracket(1, 0, 1, 1, [(0, 1)])],
    }
    doc.update(extra)
    return doc


def element(*blocks):
    return [mat(b) for b in blocks]


def main():
    write("abelian.model", {
        "name": "abelian",
        "dims": [1, 3, 2],
        "labels": [["a"], ["e1", "e2", "e3"], ["f1", "f2"]],
        "differential": [mat([[1], [0], [0]]), mat([[0, 1, 0], [0, 0, 0]])],
        "bracket": [],
    })

    write("heis.model", heis())

    write("witheq.model", {
        "name": "witheq",
        "dims": [1, 2, 0],
        "labels": [["a"], ["e1", "e2"], []],
        "differential": [mat([[1], [0]]), mat(zeros(0, 2))],
        "bracket": [],
    })

    swap = element([], [[0, 1], [1, 0]], [[1]])
    write("heis-swap.model", heis(name="heis-swap", group={"finite": {"generators": [swap]}}))

    write("heis-torus.model", heis(name="heis-torus", group={"torus": {"rank": 1, "weights": [[], [[1], [-1]], [[0]]]}}))

    bad = element([], [[0, 1], [1, 0]], [[-1]])
    write("heis-badaction.model", heis(name="heis-badaction", group={"finite": {"generators": [bad]}}))

    u1 = {"dim": 1, "structure": [], "rep": [element([], [[(0, 1), 0], [0, (0, -1)]], [[0]])]}
    write("u1.model", heis(name="u1", lie_algebra=u1))

    zero_rep = {"dim": 1, "structure": [], "rep": [element([], zeros(2, 2), [[0]])]}
    write("heis-zero-rep.model", heis(name="heis-zero-rep", lie_algebra=zero_rep))

    # so(3) acting on a 3-dimensional degree-1 space with [e_i, e_j] = delta_ij g
    eps = {}
    for perm, sign in (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1), ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1)):
        eps[perm] = sign
    gens = []
    for a in range(3):
        L = [[-eps.get((a, b, c), 0) for c in range(3)] for b in range(3)]
        gens.append(element([], L, [[0]]))
    so3_structure = [
        {"a": 0, "b": 1, "out": [[2, "1"]]},
        {"a": 0, "b": 2, "out": [[1, "-1"]]},
        {"a": 1, "b": 2, "out": [[0, "1"]]},
    ]
    so3 = {
        "name": "so3",
        "dims": [0, 3, 1],
        "labels": [[], ["e1", "e2", "e3"], ["g"]],
        "differential": [mat(zeros(3, 0)), mat(zeros(1, 3))],
        "bracket": [bracket(1, i, 1, i, [(0, 1)]) for i in range(3)],
        "lie_algebra": {"dim": 3, "structure": so3_structure, "rep": gens},
    }
    write("so3.model", so3)
    broken = json.loads(json.dumps(so3))
    broken["name"] = "so3-broken"
    broken["lie_algebra"]["structure"][0]["out"] = [[2, "2"]]
    write("so3-broken.model", broken)

    # S3 permuting e1, e2, e3 with [e_i, e_j] = f_k for {i, j, k} = {1, 2, 3}
    def third(i, j):
        return 3 - i - j

    s3_bracket = [bracket(1, i, 1, j, [(third(i, j), 1)]) for i in range(3) for j in range(i + 1, 3)]

    def perm_matrix(perm):
        m = zeros(3, 3)
        for i, pi in enumerate(perm):
            m[pi][i] = 1
        return m

    # f_k = [e_i, e_j] is moved like e_k
    transposition = perm_matrix((1, 0, 2))
    cycle = perm_matrix((1, 2, 0))
    write("s3.model", {
        "name": "s3",
        "dims": [0, 3, 3],
        "labels": [[], ["e1", "e2", "e3"], ["f1", "f2", "f3"]],
        "differential": [mat(zeros(3, 0)), mat(zeros(3, 3))],
        "bracket": s3_bracket,
        "group": {"finite": {"generators": [element([], transposition, transposition), element([], cycle, cycle)]}},
    })

    write("massey.model", {
        "name": "massey",
        "dims": [0, 3, 2],
        "labels": [[], ["x", "y", "c"], ["f", "g"]],
        "differential": [mat(zeros(3, 0)), mat([[0, 0, 1], [0, 0, 0]])],
        "bracket": [bracket(1, 0, 1, 0, [(0, 1)]), bracket(1, 0, 1, 2, [(1, 1)])],
    })

    write_iwasawa()

    flip = element([[1]], [[1, 1], [0, -1]], [])
    write("witheq-flip.model", {
        "name": "witheq-flip",
        "dims": [1, 2, 0],
        "labels": [["a"], ["e1", "e2"], []],
        "differential": [mat([[1], [0]]), mat(zeros(0, 2))],
        "bracket": [],
        "group": {"finite": {"generators": [flip]}},
    })

    write_broken()
    write_lemma31()


def write_iwasawa():
    """Invariant (0,q)-forms with values in the holomorphic tangent bundle of the Iwasawa manifold."""
    forms = [list(c) for p in range(4) for c in itertools.combinations((1, 2, 3), p)]
    by_degree = [[f for f in forms if len(f) == p] for p in range(4)]

    def wedge(a, b):
        if set(a) & set(b):
            return 0, None
        seq = list(a) + list(b)
        sign = 1
        for i in range(len(seq)):
            for j in range(i + 1, len(seq)):
                if seq[i] > seq[j]:
                    sign = -sign
        return sign, sorted(seq)

    def dbar(form):
        # dbar w3 = -w1 ^ w2, extended as a graded derivation
        out = {}
        for pos, k in enumerate(form):
            if k != 3:
                continue
            rest_before, rest_after = form[:pos], form[pos + 1:]
            sign = (-1) ** pos * -1
            sg, w = wedge(rest_before, [1, 2])
            if not sg:
                continue
            sg2, w = wedge(w, rest_after)
            if not sg2:
                continue
            out[tuple(w)] = out.get(tuple(w), 0) + sign * sg * sg2
        return out

    lie = {(0, 1): (2, 1), (1, 0): (2, -1)}

    def index(form, a):
        return by_degree[len(form)].index(list(form)) * 3 + a

    def label(form, a):
        return ("w" + "".join(map(str, form)) if form else "") + "Z" + str(a + 1)

    dims = [3 * len(f) for f in by_degree]
    labels = [[label(f, a) for f in by_degree[p] for a in range(3)] for p in range(4)]
    differential = []
    for p in range(3):
        m = zeros(dims[p + 1], dims[p])
        for f in by_degree[p]:
            for target, c in dbar(f).items():
                for a in range(3):
                    m[index(target, a)][index(f, a)] += c
        differential.append(mat(m))

    entries = []
    for p in range(4):
        for q in range(p, 4 - p):
            for fi in by_degree[p]:
                for fj in by_degree[q]:
                    sg, w = wedge(fi, fj)
                    if not sg:
                        continue
                    for a in range(3):
                        for b in range(3):
                            if (a, b) not in lie:
                                continue
                            i, j = index(fi, a), index(fj, b)
                            if p == q and i > j:
                                continue
                            c, coeff = lie[(a, b)]
                            entries.append(bracket(p, i, q, j, [(index(w, c), sg * coeff)]))

    doc = {
        "name": "iwasawa",
        "dims": dims,
        "labels": labels,
        "differential": differential,
        "bracket": entries,
    }
    write("iwasawa.model", doc)

    # sigma: w1 -> w2, w2 -> -w1, w3 -> w3 on forms; tau: Z1 -> Z2, Z2 -> -Z1, Z3 -> Z3 on vectors
    sigma = {1: (2, 1), 2: (1, -1), 3: (3, 1)}
    tau = [[0, -1, 0], [1, 0, 0], [0, 0, 1]]
    blocks = []
    for p in range(4):
        m = zeros(dims[p], dims[p])
        for f in by_degree[p]:
            image = [sigma[k][0] for k in f]
            sign = 1
            for k in f:
                sign *= sigma[k][1]
            sg, w = wedge([], image)
            for a in range(3):
                for b in range(3):
                    if tau[b][a]:
                        m[index(w, b)][index(f, a)] += sign * sg * tau[b][a]
        blocks.append(mat(m))
    diag = []
    for p in range(4):
        diag.append(mat([[(1 + (i % 3) + (i // 3) if i == j else 0) for j in range(dims[p])] for i in range(dims[p])]))
    doc = dict(doc)
    doc["name"] = "iwasawa-z4"
    doc["metric"] = diag
    doc["group"] = {"finite": {"generators": [blocks]}}
    write("iwasawa-z4.model", doc)


def write_broken():
    write("broken/heis-leibniz.model", {
        "name": "heis-leibniz",
        "dims": [1, 2, 1],
        "labels": [["a"], ["e1", "e2"], ["f"]],
        "differential": [mat([[1], [0]]), mat(zeros(1, 2))],
        "bracket": [bracket(1, 0, 1, 1, [(0, 1)])],
    })
    write("broken/dsq.model", {
        "name": "dsq",
        "dims": [1, 1, 1],
        "labels": [["a"], ["e"], ["f"]],
        "differential": [mat([[1]]), mat([[1]])],
        "bracket": [],
    })
    write("broken/jacobi.model", {
        "name": "jacobi",
        "dims": [3],
        "labels": [["x", "y", "z"]],
        "differential": [],
        "bracket": [bracket(0, 0, 0, 1, [(1, 1)]), bracket(0, 0, 0, 2, [(2, 1)]), bracket(0, 1, 0, 2, [(0, 1)])],
    })
    write("broken/antisym.model", {
        "name": "antisym",
        "dims": [2, 2, 1],
        "labels": [["a", "b"], ["e1", "e2"], ["f"]],
        "differential": [mat(zeros(2, 2)), mat(zeros(1, 2))],
        "bracket": [bracket(0, 0, 0, 0, [(1, 1)]), bracket(1, 0, 1, 1, [(0, 1)])],
    })
    bad = heis(name="bad-scalar")
    bad["bracket"][0]["out"][0][1] = "1//2"
    write("broken/bad-scalar.model", bad)
    shape = heis(name="bad-shape")
    shape["differential"][1] = [["0", "0", "0"]]
    write("broken/bad-shape.model", shape)
    with open(os.path.join(HERE, "broken/bad-json.model"), "w") as f:
        f.write('{\n  "dims": [0, 2, 1],\n  "differential": [[], [["0", "0"]]\n}\n')


def write_lemma31():
    J0 = [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]]
    m = [[Fraction(1, 2), 0], [0, Fraction(1, 3)]]
    write("lemma31/identity.lemma31", {"instances": [
        {"label": "trivial", "J": mat(J0), "phi": mat(identity(4)), "m": mat(zeros(2, 2)), "n": mat(zeros(2, 2))},
        # phi = J acts as i on V^{1,0} and -i on V^{0,1}, so n = -m
        {"label": "phi-is-J", "J": mat(J0), "phi": mat(J0), "m": mat(m), "n": mat([[-x for x in r] for r in m])},
    ]})
    write("lemma31/counterexample.lemma31", {
        "label": "H1-only",
        "J": mat(J0),
        "phi": mat(identity(4)),
        "m": mat(zeros(2, 2)),
        "n": mat([[Fraction(1, 2), 0], [0, 0]]),
    })
    write("lemma31/bad-j.lemma31", {
        "label": "not-a-complex-structure",
        "J": mat(identity(2)),
        "phi": mat(identity(2)),
        "m": mat(zeros(1, 1)),
        "n": mat(zeros(1, 1)),
    })


if __name__ == "__main__":
    main()
