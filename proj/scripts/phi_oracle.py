#!/usr/bin/env python3
"""Brute-force phi_T dimension of a monomial algebra from path combinatorics.

A module q*A for a path q is determined by the end vertex of q and the set of
paths r with q*r nonzero. Syzygies follow the monomial rules: the kernel of
e_t*A -> q*A is the direct sum of p*A over the minimal paths p with q*p = 0,
and the syzygy of a simple S_v is the sum of a*A over the arrows a leaving v.
"""

import argparse
import sys

from sympy import Matrix


def parse_algebra(path):
    vertices, arrows, relations = [], {}, []
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            kw, _, rest = line.partition(" ")
            if kw == "vertices":
                vertices = rest.split()
            elif kw == "arrow":
                name, _, ends = rest.partition(":")
                src, _, tgt = ends.partition("->")
                arrows[name.strip()] = (src.strip(), tgt.strip())
            elif kw == "relation":
                terms = rest.replace(" ", "")
                if any(ch in terms for ch in "+-") or terms[0].isdigit():
                    sys.exit(f"{path}: not a monomial relation: {rest}")
                relations.append(tuple(terms.split("*")))
    return vertices, arrows, relations


class Monomial:
    def __init__(self, vertices, arrows, relations):
        self.vertices = vertices
        self.arrows = arrows
        self.relations = relations
        self.paths = {v: self._paths_from(v) for v in vertices}

    def end(self, start, path):
        return self.arrows[path[-1]][1] if path else start

    def nonzero(self, path):
        for rel in self.relations:
            n = len(rel)
            for i in range(len(path) - n + 1):
                if tuple(path[i:i + n]) == rel:
                    return False
        return True

    def _paths_from(self, v):
        out, frontier = [()], [()]
        while frontier:
            nxt = []
            for p in frontier:
                here = self.end(v, p)
                for a, (s, _) in self.arrows.items():
                    if s == here and self.nonzero(p + (a,)):
                        nxt.append(p + (a,))
            if len(out) + len(nxt) > 10000:
                sys.exit("algebra is not finite dimensional")
            out += nxt
            frontier = nxt
        return out

    def module_of_path(self, start, path):
        t = self.end(start, path)
        return (t, frozenset(r for r in self.paths[t] if self.nonzero(path + r)))

    def simple(self, v):
        return (v, frozenset([()]))

    def is_projective(self, mod):
        t, cont = mod
        return len(cont) == len(self.paths[t])

    def syzygy(self, mod):
        t, cont = mod
        parts = []
        for p in self.paths[t]:
            if p and p not in cont and p[:-1] in cont:
                parts.append(self.module_of_path(t, p))
        return parts


def closure(alg):
    nodes, index, edges = [], {}, []
    queue = []

    def add(mod):
        if mod not in index:
            index[mod] = len(nodes)
            nodes.append(mod)
            edges.append(None)
            queue.append(mod)
        return index[mod]

    for v in alg.vertices:
        s = alg.simple(v)
        if not alg.is_projective(s):
            add(s)
    while queue:
        mod = queue.pop(0)
        i = index[mod]
        mult = {}
        for part in alg.syzygy(mod):
            if alg.is_projective(part):
                continue
            j = add(part)
            mult[j] = mult.get(j, 0) + 1
        edges[i] = mult
    return nodes, edges


def describe(alg, mod):
    t, cont = mod
    return f"{t}:{{{','.join('*'.join(r) if r else 'e' for r in sorted(cont, key=len))}}}"


def phi_t(alg):
    nodes, edges = closure(alg)
    n = len(nodes)
    lattice = Matrix.zeros(n, n)
    for j, mult in enumerate(edges):
        for i, m in mult.items():
            lattice[i, j] = m
    ranks, w = [], Matrix.eye(n)
    for _ in range(n + 3):
        ranks.append(w.rank())
        w = lattice * w
    last = len(ranks) - 1
    value = last
    while value > 0 and ranks[value - 1] == ranks[last]:
        value -= 1
    return nodes, ranks[:value + 2], value


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("algebras", nargs="+")
    args = ap.parse_args()
    for path in args.algebras:
        alg = Monomial(*parse_algebra(path))
        nodes, ranks, value = phi_t(alg)
        name = path.rsplit("/", 1)[-1].rsplit(".", 1)[0]
        print(f"{name} nodes {len(nodes)} ranks {' '.join(map(str, ranks))} phi_T {value}")
        for mod in nodes:
            print(f"  {describe(alg, mod)}")


if __name__ == "__main__":
    main()
