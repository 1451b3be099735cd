"""Regenerates the golden JSON files from first principles.

S(n) is sorted by the lexicographic rule on (i_1, i_2, ...); the S(2..4)
orders and the n <= 3 expansion formulas are transcribed as literals and
checked against / used directly.
"""
import functools
import itertools
import json
import pathlib
import re

HERE = pathlib.Path(__file__).parent

LISTED = {
    2: "() < (1) < (0) < (1,0)",
    3: "() < (2) < (1) < (2,1) < (0) < (2,0) < (1,0) < (2,1,0)",
    4: "() < (3) < (2) < (3,2) < (1) < (3,1) < (2,1) < (3,2,1) < (0) < (3,0) < (2,0)"
       " < (3,2,0) < (1,0) < (3,1,0) < (2,1,0) < (3,2,1,0)",
}

FORMULAS = [
    "F_{(0)(1)}(x_1, y_1) = [s_0x_1, s_1y_1]{~}[s_1y_1, s_1x_1]",
    "F_{(1,0)(2)}(x_1, y_2) = [s_1s_0x_1, s_2y_2]{~}[s_2y_2, s_2s_{0}x_1]",
    "F_{(2,0)(1)}(x_1, y_2) = [s_2s_0x_1, s_1y_2]{~}[s_1y_2, s_2s_1x_1]{~}[s_2s_1x_1, s_2y_2]{~}[s_2y_2, s_2s_0x_1]",
    "F_{(0)(2,1)}(x_2, y_1) = [s_0x_2, s_2s_1y_1]{~}[s_2s_1y_1, s_1x_2]{~}[s_2x_2, s_2s_1y_1]",
    "F_{(0)(1)}(x_2, y_2) = [s_0x_2, s_1y_2]{~}[s_1y_2, s_1x_2]{~}[s_2x_2, s_2y_2]",
    "F_{(0)(2)}(x_2, y_2) = [s_0x_2, s_2y_2]",
    "F_{(1)(2)}(x_2, y_2) = [s_1x_2, s_2y_2]{~}[s_2y_2, s_2x_2]",
]


def cmp(a, b):
    """a, b are tuples stored high-to-low; compare from i_1 upward."""
    ra, rb = a[::-1], b[::-1]
    for x, y in zip(ra, rb):
        if x != y:
            return 1 if x < y else -1
    return (len(ra) > len(rb)) - (len(ra) < len(rb))


def S(n):
    out = []
    for l in range(n + 1):
        for c in itertools.combinations(range(n), l):
            out.append(tuple(sorted(c, reverse=True)))
    return sorted(out, key=functools.cmp_to_key(cmp))


def fmt(t):
    return "(" + ",".join(map(str, t)) + ")"


def P(n):
    s = S(n)
    rank = {t: i for i, t in enumerate(s)}
    pairs = [(a, b) for a in s for b in s
             if a and b and not set(a) & set(b) and cmp(b, a) < 0]
    return sorted(pairs, key=lambda p: (rank[p[0]], rank[p[1]]))


def atom(text):
    m = re.fullmatch(r"((?:s_\d)*)([xy])_(\d)", text)
    ops = [int(d) for d in re.findall(r"s_(\d)", m.group(1))]
    return {"dim": int(m.group(3)), "s": ops, "var": m.group(2)}


def parse_formula(f):
    f = re.sub(r"_\{(\d)\}", r"_\1", f)
    head, body = f.split(" = ")
    m = re.fullmatch(r"F_\{\(([\d,]*)\)\(([\d,]*)\)\}\(.*\)", head)
    alpha = [int(d) for d in m.group(1).split(",")]
    beta = [int(d) for d in m.group(2).split(",")]
    factors = []
    for left, right in re.findall(r"\[([^,\]]+), ([^\]]+)\]", body):
        factors.append({"left": atom(left), "right": atom(right)})
    return alpha, beta, {"alpha": alpha, "beta": beta, "factors": factors, "latex": f}


def level(expansion):
    left = expansion["factors"][0]["left"]
    return left["dim"] + len(left["s"])


def write(name, doc):
    doc = {"schema": 1, **doc}
    (HERE / name).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def main():
    for n, listed in LISTED.items():
        assert " < ".join(map(fmt, S(n))) == listed, n
    for n in range(1, 5):
        s = S(n)
        assert len(s) == 2 ** n
        write(f"sposet_{n}.json", {"n": n, "size": len(s), "order": [list(t) for t in s]})
        write(f"pairs_{n}.json", {"n": n, "pairs": [{"alpha": list(a), "beta": list(b)} for a, b in P(n)]})
    parsed = [parse_formula(f) for f in FORMULAS]
    for n in range(1, 4):
        by_pair = {(tuple(a), tuple(b)): e for a, b, e in parsed if level(e) == n}
        order = [by_pair[(a, b)] for a, b in P(n)]
        assert len(order) == len(by_pair)
        write(f"expand_{n}.json", {"n": n, "expansions": order})


if __name__ == "__main__":
    main()
