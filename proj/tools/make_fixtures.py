#!/usr/bin/env python3
"""Regenerates the JSON/text fixtures under tests/fixtures."""
import itertools
import json
import os
import sys

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "tests", "fixtures")

# Six triangular petals in disjoint angular sectors around the origin.
PETALS = [((3, 1), (3, 2)), ((1, 3), (2, 3)), ((-1, 3), (-2, 3)),
          ((-3, 1), (-3, 2)), ((-3, -1), (-3, -2)), ((1, -3), (2, -3))]


def petal_loop(word, dim=2):
    lift = (lambda p, z: list(p) + [z]) if dim == 3 else (lambda p, z: list(p))
    origin = [0] * dim
    v = [origin]
    for letter in word:
        p, q = PETALS[abs(letter) - 1]
        a, b = (p, q) if letter > 0 else (q, p)
        k = abs(letter)
        v += [lift(a, k % 2), lift(b, (k + 1) % 2), origin]
    return v


def loop_json(vertices):
    dim = len(vertices[0])
    return {"dim": dim, "basepoint": [str(c) for c in vertices[0]],
            "vertices": [[str(c) for c in p] for p in vertices]}


def concat(*paths):
    out = list(paths[0])
    for p in paths[1:]:
        out += p[1:]
    return out


def rev(p):
    return list(reversed(p))


SQUARE = [[0, 0], [2, 0], [2, 2], [0, 2], [0, 0]]
KITE = [[0, 0], [3, 1], [1, 3], [0, 0]]
TRIANGLE = [[0, 0], [1, 0], [0, 1], [0, 0]]
FIGURE_EIGHT = [[0, 0], [2, 2], [2, 0], [0, 2], [0, 0]]
SPUR = [[0, 0], [2, 0], [2, 1], [2, 0], [0, 0]]


def commutator(a, b):
    return a + b + [-x for x in reversed(a)] + [-x for x in reversed(b)]


ACCEPTANCE = [
    ("commutator", petal_loop([1, 2, -1, -2])),
    ("backtrack", petal_loop([1, -1])),
    ("single", petal_loop([1])),
    ("square", petal_loop([1, 1])),
    ("product", petal_loop([1, 2])),
    ("conjugate", petal_loop([1, 2, -1])),
    ("triple_cycle", petal_loop([1, 2, 3, -1, -2, -3])),
    ("double_commutator", petal_loop(commutator(commutator([1], [2]), commutator([3], [4])))),
    ("cancelling_commutators", petal_loop(commutator([1], [2]) + commutator([2], [1]))),
    ("squared_conjugation", petal_loop([1, 1, 2, -1, -1, -2])),
    ("unbalanced", petal_loop([1, 2, 1, -2, -1, -2])),
    ("squared_commutator_variant", petal_loop([1, 2, 2, -1, -2, -2])),
    ("three_product", petal_loop([1, 2, 3])),
    ("balanced_mix", petal_loop([1, -2, 1, 2, -1, -1])),
    ("commutator_3d", petal_loop([3, 1, -3, -1], dim=3)),
    ("commutator_3d_b", petal_loop([1, 2, -1, -2], dim=3)),
    ("six_cycle", petal_loop([1, 2, 3, 4, 5, 6, -1, -2, -3, -4, -5, -6])),
    ("six_product", petal_loop([1, 2, 3, 4, 5, 6])),
    ("commutator_squared", petal_loop(commutator([1], [2]) * 2)),
    ("commutator_times_generator", petal_loop([1, 2, -1, -2, 3])),
    ("figure_eight", FIGURE_EIGHT),
    ("triangle_twice", concat(TRIANGLE, TRIANGLE)),
    ("spur", SPUR),
    ("crossing_commutator", concat(SQUARE, KITE, rev(SQUARE), rev(KITE))),
    ("crossing_balanced", concat(SQUARE, KITE, SQUARE, rev(KITE), rev(SQUARE), rev(SQUARE))),
    ("crossing_product", concat(SQUARE, KITE)),
    ("three_cycle_3d", petal_loop([1, 2, 3, -2, -1, -3], dim=3)),
    ("unbalanced_b", petal_loop([1, 2, 1, -2])),
    ("conjugated_inverse", petal_loop([2, -1, -2, 1])),
    ("nested_backtrack", petal_loop([1, 2, 3, -3, -2, -1])),
]


def perm_table(perms):
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms[0])
    return [[index[tuple(a[b[i]] for i in range(n))] for b in perms] for a in perms]


def parity(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]) % 2


def table_text(name, rows):
    return f"# {name}\n{len(rows)}\n" + "".join(" ".join(map(str, r)) + "\n" for r in rows)


def write(rel, content):
    path = os.path.join(ROOT, rel)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as f:
        f.write(content if isinstance(content, str) else json.dumps(content, indent=2) + "\n")


def main():
    write("loops/triangle.json", loop_json(TRIANGLE))
    write("loops/figure_eight.json", loop_json(FIGURE_EIGHT))
    write("loops/spur.json", loop_json(SPUR))
    write("loops/commutator.json", loop_json(petal_loop([1, 2, -1, -2])))
    write("loops/twice_around.json", loop_json(concat(TRIANGLE, TRIANGLE)))
    write("loops/bad_not_closed.json", {"dim": 2, "basepoint": ["0", "0"],
                                        "vertices": [["0", "0"], ["1", "0"], ["1", "1"]]})
    for i, (name, v) in enumerate(ACCEPTANCE, 1):
        write(f"acceptance/{i:02d}_{name}.json", loop_json(v))
    write("words/cancel.json", "[1,1,-1]\n")
    write("words/empty.json", "[]\n")
    write("words/reduced.json", "[2,3,-1]\n")
    write("words/bad.json", "[1,0]\n")
    s3 = sorted(itertools.permutations(range(3)))
    write("tables/s3.txt", table_text("S3", perm_table(s3)))
    a5 = [p for p in sorted(itertools.permutations(range(5))) if parity(p) == 0]
    write("tables/a5.txt", table_text("A5", perm_table(a5)))
    write("connections/zero_so3.json", {"group": "so3", "dim": 2, "terms": []})
    return 0


if __name__ == "__main__":
    sys.exit(main())
