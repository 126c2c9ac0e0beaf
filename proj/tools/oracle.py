#!/usr/bin/env python3
"""Independent cross-check oracle for the built-in corpus.

Recomputes, from first principles and in exact arithmetic, the facts frozen
into src/corpus.cpp: cell counts, purity, codimension-one connectivity,
reduced homology, the local-homology stratification, and the Koszulity
verdict of the local-homology criterion. The implementation is deliberately
separate from the C++ library (different language, different elimination
strategy) so that agreement between the two is meaningful evidence.

Usage: python3 tools/oracle.py [entry ...]     (no args = whole corpus)
"""

import json
import sys
from fractions import Fraction

# --------------------------------------------------------------------------
# Signed union-find over simplex faces.


def sort_parity(seq):
    """Parity (0/1) of the permutation that sorts seq ascending."""
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv ^= 1
    return inv


class SignedUF:
    """Union-find tracking orientation parity relative to the root."""

    def __init__(self):
        self.parent = {}
        self.rel = {}
        self.order = {}  # creation index; the oldest element roots its class

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.rel[x] = 0
            self.order[x] = len(self.order)

    def find(self, x):
        if self.parent[x] == x:
            return x, 0
        root, p = self.find(self.parent[x])
        self.parent[x] = root
        self.rel[x] = (self.rel[x] + p) & 1
        return root, self.rel[x]

    def union(self, x, y, parity):
        """Declare parity(x vs y); False on an orientation conflict."""
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            return (px ^ py) == parity
        q = px ^ py ^ parity  # parity between the two roots
        if self.order[rx] < self.order[ry]:
            self.parent[ry] = rx
            self.rel[ry] = q
        else:
            self.parent[rx] = ry
            self.rel[rx] = q
        return True


# --------------------------------------------------------------------------
# Glued-simplicial builder (mirrors the documented format semantics).


def build_glued(simplices, identifications):
    for s in simplices:
        assert len(set(s)) == len(s), f"repeated name in {s}"
        assert all(n and "." not in n for n in s), f"bad name in {s}"

    uf = SignedUF()
    insts = []
    for si, s in enumerate(simplices):
        n = len(s)
        masks = sorted(range(1, 1 << n), key=lambda m: (bin(m).count("1"), m))
        for m in masks:
            pos = tuple(i for i in range(n) if m >> i & 1)
            key = (si, pos)
            uf.add(key)
            insts.append(key)

    # Faces spanned by equal literal name sets coincide automatically.
    first_by_names = {}
    for key in insts:
        si, pos = key
        names = tuple(simplices[si][i] for i in pos)
        k = tuple(sorted(names))
        p = sort_parity(names)
        if k in first_by_names:
            k0, p0 = first_by_names[k]
            assert uf.union(k0, key, p0 ^ p), f"auto-merge conflict at {k}"
        else:
            first_by_names[k] = (key, p)

    def resolve(names):
        for si, s in enumerate(simplices):
            if all(n in s for n in names):
                pos = [s.index(n) for n in names]
                return (si, tuple(sorted(pos))), sort_parity(pos)
        raise AssertionError(f"no simplex has a face with vertices {names}")

    for t1, t2 in identifications:
        assert len(t1) == len(t2), "identification length mismatch"
        assert len(set(t1)) == len(t1) and len(set(t2)) == len(t2)
        L = len(t1)
        for m in range(1, 1 << L):
            sub1 = [t1[i] for i in range(L) if m >> i & 1]
            sub2 = [t2[i] for i in range(L) if m >> i & 1]
            k1, p1 = resolve(sub1)
            k2, p2 = resolve(sub2)
            assert uf.union(k1, k2, p1 ^ p2), f"conflict gluing {sub1}~{sub2}"

    for si, s in enumerate(simplices):
        roots = [uf.find((si, (i,)))[0] for i in range(len(s))]
        assert len(set(roots)) == len(roots), f"simplex {si} collapses"

    classes = {}
    for key in insts:
        r, _ = uf.find(key)
        classes.setdefault(r, []).append(key)
    roots = sorted(classes, key=lambda r: (len(r[1]), uf.order[r]))
    index = {r: i for i, r in enumerate(roots)}

    cells = []
    for r in roots:
        si, pos = r
        cid = ".".join(simplices[si][i] for i in pos)
        bnd = {}
        if len(pos) > 1:
            for j in range(len(pos)):
                child = (si, pos[:j] + pos[j + 1 :])
                cr, cp = uf.find(child)
                coef = (1 if j % 2 == 0 else -1) * (1 if cp == 0 else -1)
                assert index[cr] not in bnd, f"face repeated under {cid}"
                bnd[index[cr]] = coef
        cells.append({"id": cid, "dim": len(pos) - 1, "bnd": bnd})
    assert len({c["id"] for c in cells}) == len(cells), "duplicate ids"
    return cells


def build_raw(records):
    index = {r["id"]: i for i, r in enumerate(records)}
    cells = []
    for r in records:
        bnd = {}
        for fid, sign in r.get("boundary", []):
            assert index[fid] not in bnd
            bnd[index[fid]] = sign
        cells.append({"id": r["id"], "dim": r["dim"], "bnd": bnd})
    return cells


def check_complex(cells):
    for c in cells:
        acc = {}
        for f, cf in c["bnd"].items():
            assert cells[f]["dim"] == c["dim"] - 1, f"dim skip under {c['id']}"
            assert cf in (1, -1), f"bad sign under {c['id']}"
            for g, cg in cells[f]["bnd"].items():
                acc[g] = acc.get(g, 0) + cf * cg
        assert all(v == 0 for v in acc.values()), f"dd != 0 at {c['id']}"
        if c["dim"] == 1:
            assert sum(c["bnd"].values()) == 0, f"edge signs at {c['id']}"


# --------------------------------------------------------------------------
# Exact linear algebra and homology.


def rank_matrix(rows, p):
    """Row rank; rows are {col: int}. p=None means Q, else the prime field."""
    pivots = {}
    rank = 0
    for r in rows:
        if p is None:
            row = {c: Fraction(v) for c, v in r.items() if v}
        else:
            row = {c: v % p for c, v in r.items() if v % p}
        while row:
            c = min(row)
            if c in pivots:
                factor = row.pop(c)
                for cc, vv in pivots[c].items():
                    if cc == c:
                        continue
                    nv = row.get(cc, 0) - factor * vv
                    if p is not None:
                        nv %= p
                    if nv:
                        row[cc] = nv
                    else:
                        row.pop(cc, None)
            else:
                inv = 1 / row[c] if p is None else pow(row[c], p - 2, p)
                row = {cc: vv * inv if p is None else vv * inv % p
                       for cc, vv in row.items()}
                pivots[c] = row
                rank += 1
                break
    return rank


def homology(cells, p=None, keep=None, reduced=False):
    """Chain homology dims in degrees 0..dim; keep != None restricts to the
    given cell indices (the relative complex modulo everything else)."""
    D = max((c["dim"] for c in cells), default=-1)
    if keep is None:
        keep = set(range(len(cells)))
    nk = [0] * (D + 2)
    for i in keep:
        nk[cells[i]["dim"]] += 1
    ranks = [0] * (D + 2)
    for k in range(1, D + 1):
        rows = [{f: cf for f, cf in cells[i]["bnd"].items() if f in keep}
                for i in keep if cells[i]["dim"] == k]
        ranks[k] = rank_matrix(rows, p)
    h = []
    for k in range(D + 1):
        v = nk[k] - ranks[k] - ranks[k + 1]
        if k == 0 and reduced and nk[0] > 0:
            v -= 1
        h.append(v)
    return h


def closures(cells):
    cl = [None] * len(cells)
    for i in sorted(range(len(cells)), key=lambda i: cells[i]["dim"]):
        s = {i}
        for f in cells[i]["bnd"]:
            s |= cl[f]
        cl[i] = s
    return cl


def stratify(cells, p=None):
    """cell index -> stratum (min k with nonzero local H_k, minus 1)."""
    cl = closures(cells)
    D = max(c["dim"] for c in cells)
    out = {}
    for c in range(len(cells)):
        star = {x for x in range(len(cells)) if c in cl[x]}
        h = homology(cells, p=p, keep=star)
        out[c] = next((k - 1 for k in range(D + 1) if h[k] != 0), None)
    return out


def is_pure(cells, cl):
    D = max(c["dim"] for c in cells)
    covered = set()
    for t in range(len(cells)):
        if cells[t]["dim"] == D:
            covered |= cl[t]
    return len(covered) == len(cells)


def codim1_connected(cells):
    D = max(c["dim"] for c in cells)
    if D == 0:
        return len(cells) <= 1
    nodes = [i for i in range(len(cells)) if cells[i]["dim"] in (D, D - 1)]
    parent = {i: i for i in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in nodes:
        if cells[t]["dim"] == D:
            for f in cells[t]["bnd"]:
                a, b = find(t), find(f)
                if a != b:
                    parent[a] = b
    return len({find(x) for x in nodes}) <= 1


# --------------------------------------------------------------------------
# Corpus entry specifications (shared input data; computations independent).

E = {}

for d in range(5):
    E[f"simplex{d}"] = {"simplices": [[f"v{i}" for i in range(d + 1)]],
                        "identifications": []}

E["sphere0"] = {"simplices": [["v0"], ["v1"]], "identifications": []}
for d in range(1, 4):
    verts = [f"v{i}" for i in range(d + 2)]
    E[f"sphere{d}"] = {
        "simplices": [[v for j, v in enumerate(verts) if j != drop]
                      for drop in range(len(verts) - 1, -1, -1)],
        "identifications": [],
    }

E["y_double3cell"] = {
    "simplices": [["v0", "v1", "v2", "v3"], ["v0", "v1", "v2", "v4"]],
    "identifications": [],
}

E["wedge3intervals"] = {
    "simplices": [["c", "t1"], ["c", "t2"], ["c", "t3"]],
    "identifications": [],
}

E["s1_bad"] = {
    "simplices": [["v0", "v1", "v2", "v3"], ["w0", "w1", "w2", "w3"]],
    "identifications": [
        (["v0", "v1", "v2"], ["w0", "w1", "w2"]),
        (["v0", "v3"], ["w0", "w3"]),
    ],
}

E["s1_bad_4d"] = {
    "simplices": [["v0", "v1", "v2", "v3", "v4"],
                  ["w0", "w1", "w2", "w3", "w4"]],
    "identifications": [
        (["v0", "v1", "v2", "v3"], ["w0", "w1", "w2", "w3"]),
        (["v0", "v4"], ["w0", "w4"]),
    ],
}

E["s2_bad"] = {
    "simplices": [["v0", "v1", "v2", "v3", "v4"],
                  ["w0", "w1", "w2", "w3", "w4"]],
    "identifications": [
        (["v0", "v1", "v2", "v3"], ["w0", "w1", "w2", "w3"]),
        (["v0", "v1", "v4"], ["w0", "w1", "w4"]),
    ],
}

_s2w_open = {
    "simplices": [["a", "d", "e"], ["b", "d", "e"], ["c", "d", "e"],
                  ["u0", "u1", "u2", "u3", "u4"],
                  ["v0", "v1", "v2", "v3", "v4"],
                  ["w0", "w1", "w2", "w3", "w4"]],
    "identifications": [
        (["u0", "u1", "u2"], ["e", "d", "a"]),
        (["u0", "u1", "u3"], ["e", "d", "c"]),
        (["v0", "v1", "v2"], ["e", "d", "c"]),
        (["v0", "v1", "v3"], ["e", "d", "b"]),
        (["w0", "w1", "w2"], ["e", "d", "b"]),
        (["w0", "w1", "w3"], ["e", "d", "a"]),
    ],
}
E["s2_worse_open"] = _s2w_open
E["s2_worse"] = {
    "simplices": _s2w_open["simplices"] + [["x0", "x1", "x2", "x3", "x4"]],
    "identifications": _s2w_open["identifications"] + [
        (["x0", "x1", "x2", "x3"], ["u1", "u2", "u3", "u4"]),
        (["x0", "x2", "x3", "x4"], ["v1", "v2", "v3", "v4"]),
        (["x0", "x1", "x3", "x4"], ["w1", "w3", "w2", "w4"]),
    ],
}

E["nonpure_flag"] = {
    "records": [
        {"id": "p", "dim": 0}, {"id": "q", "dim": 0}, {"id": "r", "dim": 0},
        {"id": "s", "dim": 0},
        {"id": "p.q", "dim": 1, "boundary": [["p", -1], ["q", 1]]},
        {"id": "p.r", "dim": 1, "boundary": [["p", -1], ["r", 1]]},
        {"id": "q.r", "dim": 1, "boundary": [["q", -1], ["r", 1]]},
        {"id": "p.s", "dim": 1, "boundary": [["p", -1], ["s", 1]]},
        {"id": "p.q.r", "dim": 2,
         "boundary": [["p.q", 1], ["q.r", 1], ["p.r", -1]]},
    ],
}

# --------------------------------------------------------------------------


def report(name):
    spec = E[name]
    if "records" in spec:
        cells = build_raw(spec["records"])
    else:
        cells = build_glued(spec["simplices"], spec["identifications"])
    check_complex(cells)

    D = max(c["dim"] for c in cells)
    counts = [0] * (D + 1)
    for c in cells:
        counts[c["dim"]] += 1
    euler = sum((-1) ** k * counts[k] for k in range(D + 1))
    cl = closures(cells)
    pure = is_pure(cells, cl)
    codim1 = codim1_connected(cells) if pure else None

    rh_q = homology(cells, p=None, reduced=True)
    rh_2 = homology(cells, p=2, reduced=True)
    assert rh_q == rh_2, f"{name}: torsion? Q={rh_q} GF2={rh_2}"
    strat_q = stratify(cells, p=None)
    strat_2 = stratify(cells, p=2)
    assert strat_q == strat_2, f"{name}: field-dependent strata"

    strata = {}
    for i, s in strat_q.items():
        if s is not None:
            strata.setdefault(s, []).append(i)
    strata_out = {
        k: [cells[i]["id"] for i in
            sorted(v, key=lambda i: (cells[i]["dim"], cells[i]["id"]))]
        for k, v in sorted(strata.items())
    }

    if not pure or not codim1:
        verdict = "hypothesis-fail"
    else:
        ok = all(rh_q[i] == 0 for i in range(D))
        ok = ok and all(s is None or s > D - 2 or s < 0
                        for s in strat_q.values())
        verdict = bool(ok)

    # Euler characteristic must match the alternating sum of reduced Betti
    # numbers plus one (the complexes here are nonempty).
    assert euler == 1 + sum((-1) ** k * rh_q[k] for k in range(D + 1)), name
    return {
        "name": name, "dimension": D, "counts": counts, "euler": euler,
        "pure": pure, "codim1": codim1, "reduced_homology": rh_q,
        "strata": strata_out, "koszul_local_homology": verdict,
    }


def main():
    names = sys.argv[1:] or list(E)
    for n in names:
        print(json.dumps(report(n), indent=1))


if __name__ == "__main__":
    main()
