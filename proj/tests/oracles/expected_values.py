# Copyright 2026 The hypafib Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent brute-force oracle for the frozen expected values in the C++ tests.

Everything here is computed from first principles with plain Python
integers/strings and mpmath; nothing is shared with the C++ code path.
Run: python3 tests/oracles/expected_values.py
"""
from fractions import Fraction
import mpmath

mpmath.mp.dps = 60


def fib4q(q, i):
    w = ["1", "0"]
    for j in range(2, i + 1):
        e = q - 4 if j % 2 == 0 else 1
        w.append(w[j - 1] * e + w[j - 2])
    return w[i]


def biperiodic_word(a, b, i):
    w = ["1", "0", "0" * (a - 1) + "1"]
    for j in range(3, i + 1):
        e = a if j % 2 == 0 else b
        w.append(w[j - 1] * e + w[j - 2])
    return w[i]


def bfs_triangle(q, nmax):
    """Build the {4,q} triangle by explicit vertex/edge enumeration and count
    shortest paths by BFS layers over the edge list."""
    kinds = [["base"]]
    edges = []  # ((row,k) -> (row+1,k'))
    for n in range(nmax):
        row = kinds[n]
        child = []
        if n == 0:
            child = ["W", "W"]
            edges += [((0, 0), (1, 0)), ((0, 0), (1, 1))]
        else:
            m = len(row)
            # walk parents; shared child between each adjacent pair
            child.append("W")
            edges.append(((n, 0), (n + 1, 0)))
            for j in range(m - 1):
                # own children of parent j (except wingers)
                if 0 < j:
                    own = q - 4 if row[j] == "A" else q - 3
                    for _ in range(own):
                        edges.append(((n, j), (n + 1, len(child))))
                        child.append("B")
                edges.append(((n, j), (n + 1, len(child))))
                edges.append(((n, j + 1), (n + 1, len(child))))
                child.append("A")
            edges.append(((n, m - 1), (n + 1, len(child))))
            child.append("W")
        kinds.append(child)
    count = {(0, 0): 1}
    for (u, v) in edges:
        pass
    adj = {}
    for (u, v) in edges:
        adj.setdefault(u, []).append(v)
    frontier = [(0, 0)]
    dist = {(0, 0): 0}
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj.get(u, []):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    count[v] = 0
                    nxt.append(v)
                if dist[v] == dist[u] + 1:
                    count[v] += count[u]
        frontier = nxt
    return kinds, edges, count


def main():
    print("f7", fib4q(5, 7), fib4q(5, 7).count("0"), fib4q(5, 7).count("1"))
    print("f4[6]", fib4q(6, 4), fib4q(6, 4).count("0"))
    print("biperiodic (1,2,3)", biperiodic_word(1, 2, 3))
    print("biperiodic (1,1,5)", biperiodic_word(1, 1, 5))
    print("biperiodic (3,2,2)", biperiodic_word(3, 2, 2))
    print("01+f5[6]", "01" + fib4q(6, 5), ("01" + fib4q(6, 5))[::-1] == "01" + fib4q(6, 5))
    for q in (5, 6):
        kinds, edges, count = bfs_triangle(q, 5)
        for n in range(6):
            print(q, n, "".join("B" if k != "A" else "A" for k in kinds[n]),
                  [count[(n, k)] for k in range(len(kinds[n]))])
    kinds, edges, count = bfs_triangle(6, 5)
    print("q6 n5 nodes", sum(len(r) for r in kinds), "edges", len(edges))
    print("q6 sizes", [len(r) for r in kinds])
    kinds, edges, count = bfs_triangle(5, 2)
    print("q5 n2 nodes", sum(len(r) for r in kinds), "edges", len(edges))
    for q in (5, 6, 7, 8, 9, 10):
        s = mpmath.sqrt(q * (q - 4))
        r0 = (q - 4 + s) / (2 * (q - 4))
        r1 = (q - 2 + s) / 2
        al_s = mpmath.mpf(-1) / 2 + (q - 2) * s / (2 * q * (q - 4))
        al_a = mpmath.mpf(2 - q) / 2 + (q * q - 4 * q + 2) * s / (2 * q * (q - 4))
        al_b = mpmath.mpf(q - 3) / 2 + (1 - q) * s / (2 * q)
        # digit counts by direct definition recurrence (independent of the library's d-recurrences)
        d = [(1, 0, 1), (1, 1, 0)]
        for j in range(2, 26):
            e = q - 4 if j % 2 == 0 else 1
            d.append(tuple(e * x + y for x, y in zip(d[j - 1], d[j - 2])))
        e0 = abs(mpmath.mpf(d[25][0]) / d[25][1] - r0)
        e1 = abs(mpmath.mpf(d[25][0]) / d[25][2] - r1)
        print(q, "r0", mpmath.nstr(r0, 15), "r1", mpmath.nstr(r1, 15),
              "alphas", mpmath.nstr(al_s, 12), mpmath.nstr(al_a, 12), mpmath.nstr(al_b, 12),
              "as/ab-r0", mpmath.nstr(al_s / al_b - r0, 5), "as/aa-r1", mpmath.nstr(al_s / al_a - r1, 5),
              "gap25", mpmath.nstr(e0, 5), mpmath.nstr(e1, 5))
    # u values
    for q, n in ((7, 3), (6, 4), (5, 5)):
        u = [None, 0, 1]
        for j in range(3, n + 1):
            u.append((q - 2) * u[-1] - u[-2])
        print("u", q, n, u[n])
    s = [1, 2, 3, 6]
    for j in range(4, 6):
        s.append(5 * s[-1] - 5 * s[-2] + s[-3])
    print("s q6", s)
    print("f7 len", len(fib4q(5, 7)), "r0(10^6)-1", mpmath.nstr((10**6 - 4 + mpmath.sqrt(10**6 * (10**6 - 4))) / (2 * (10**6 - 4)) - 1, 8))
    print("table3 check")
    for q in (5, 6, 7, 8):
        print(q, fib4q(q, 15)[:56])


main()
