#!/usr/bin/env python3
"""Writes data/f_identities.tsv: printed values of the map f on concrete spaces.

Each row: id, g, n, p, q, divisor, expected, predicate, printed, claim.
The Knudsen pair is (p, q).  Unless a statement fixes the markings, p, q are
n-1, n, the named sets are drawn from [n-2] and psi_r uses r = 1.  Instances
whose expected value puts weight on an undefined middle coordinate
(g even, n odd, e_{g/2}) are not written.
"""

import argparse
import itertools
import pathlib
from fractions import Fraction


def fmt_set(s):
    return "{" + ",".join(str(k) for k in sorted(s)) + "}"


def delta(a, s):
    return f"delta[{a},{fmt_set(s)}]"


def kappa_plus(*terms):
    return " + ".join(["kappa", *terms])


def image(coeffs):
    parts = []
    for label, c in coeffs.items():
        c = Fraction(c)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = label if mag == 1 else f"{mag} {label}"
        parts.append((sign, body))
    if not parts:
        return "0"
    text = ("- " if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def e(*pairs):
    return {f"e_{k}": Fraction(v) for k, v in pairs}


def sgn(k):
    return 1 if k % 2 == 0 else -1


def nonempty_subsets(items, max_size=None):
    items = list(items)
    top = len(items) if max_size is None else min(max_size, len(items))
    for r in range(1, top + 1):
        for c in itertools.combinations(items, r):
            yield frozenset(c)


class Corpus:
    def __init__(self):
        self.rows = []
        self.seen = set()

    def add(self, family, g, n, p, q, divisor, expected, predicate, printed, claim):
        if isinstance(expected, dict):
            if g % 2 == 0 and n % 2 == 1 and expected.get(f"e_{g // 2}", 0) != 0:
                return
            expected = image(expected)
        key = (g, n, p, q, divisor)
        if key in self.seen:
            return
        self.seen.add(key)
        rid = f"{family}-g{g}n{n}-{len([r for r in self.rows if r[0].startswith(family + '-')]) + 1}"
        self.rows.append((rid, g, n, p, q, divisor, expected, predicate, printed, claim))


def knudsen_f5():
    return "F5[0,0]({1},{2})"


def knudsen_f6(g, j):
    a, b = min(j, g - j), max(j, g - j)
    return f"F6[0,0,{a},{b}]({{1}}|{{2}}|{{}}|{{}})"


def type3_genus2(c):
    claim = "nef divisors contracting F3[0]([n]) on genus 2 map onto V"
    d = kappa_plus(delta(1, set()), delta(2, set()))
    c.add("f3-genus2", 2, 2, 1, 2, d, f"2 {knudsen_f5()}", "n=2", "f(D_2) = 2 F_5", claim)
    c.add("f3-genus2", 2, 2, 1, 2, "psi_1", f"{knudsen_f5()} + {knudsen_f6(2, 1)}", "n=2",
          "f(psi_1) = F_5 + F_6", claim)
    for n in range(3, 9):
        if n % 2 == 1:
            c.add("f3-genus2", 2, n, n - 1, n, "psi_1", e((0, -1)), "n>2 and n odd", "f(psi_1) = -e_0", claim)
        else:
            c.add("f3-genus2", 2, n, n - 1, n, d, e((0, -2), (1, -1)), "n>2 and n even",
                  "f(D_n) = -2e_0 - e_1", claim)
            c.add("f3-genus2", 2, n, n - 1, n, "psi_1", e((0, -1)), "n>2 and n even", "f(psi_1) = -e_0", claim)


def type3_genus3(c):
    claim = "nef divisors contracting F3[1]([n]) on genus 3 map onto V"
    d = kappa_plus(delta(2, set()))
    c.add("f3-genus3", 3, 2, 1, 2, d, knudsen_f5(), "n=2", "f(D_2) = F_5", claim)
    c.add("f3-genus3", 3, 2, 1, 2, "psi_1", f"{knudsen_f5()} + {knudsen_f6(3, 1)}", "n=2",
          "f(psi_1) = F_5 + F_6", claim)
    for n in range(3, 9):
        c.add("f3-genus3", 3, n, n - 1, n, d, e((0, -1), (1, sgn(n + 1))), "n>2",
              "f(D_n) = -e_0 + (-1)^{n+1} e_1", claim)
        c.add("f3-genus3", 3, n, n - 1, n, "psi_1", e((0, -1)), "n>2", "f(psi_1) = -e_0", claim)


def f31n(c):
    claim = "nef divisors contracting F3[1]([n]) map onto V"
    for g in range(3, 8):
        h = g // 2
        full2 = {1, 2}
        d1 = kappa_plus(delta(1, full2))
        tail = [knudsen_f6(g, j) for j in range(2, h + 1)]
        c.add("f31n", g, 2, 1, 2, "psi_1", " + ".join(knudsen_f6(g, j) for j in range(1, h + 1)), "n=2",
              "f(psi_1) = sum_{j=1}^{floor(g/2)} F_6^{0,0,j,g-j}", claim)
        c.add("f31n", g, 2, 1, 2, d1, " + ".join(tail) or "0", "n=2",
              "f(D_1) = sum_{j=2}^{floor(g/2)} F_6^{0,0,j,g-j}", claim)
        for i in range(2, h + 1):
            di = kappa_plus(delta(1, full2), delta(i, {1}))
            rhs = " + ".join(t for t in tail if t != knudsen_f6(g, i))
            c.add("f31n", g, 2, 1, 2, di, rhs or "0", "n=2 and 2<=i<=floor(g/2)",
                  "f(D_i) = sum_{j=2}^{floor(g/2)} F_6^{0,0,j,g-j} - F_6^{0,0,i,g-i}", claim)
        for n in range(3, 7):
            if g % 2 == 0 and n % 2 == 1:
                continue
            full = set(range(1, n + 1))
            pred = "n>2 and (g odd or n even)"
            c.add("f31n", g, n, n - 1, n, "psi_1", e((0, -1)), pred, "f(psi_1) = -e_0", claim)
            c.add("f31n", g, n, n - 1, n, kappa_plus(delta(1, full)), e((0, -1), (1, sgn(n + 1))), pred,
                  "f(D_1) = -e_0 + (-1)^{n+1} e_1", claim)
            for i in range(2, h + 1):
                c.add("f31n", g, n, n - 1, n, kappa_plus(delta(1, full), delta(i, {1})),
                      e((0, -1), (1, sgn(n + 1)), (i, 1)), pred + " and 2<=i<=floor(g/2)",
                      "f(D_i) = -e_0 + (-1)^{n+1} e_1 + e_i", claim)


def ext3(c):
    claim = "F5[0,0]({p},{q,r}) and F6[0,0,i,g-i]({p},{q,r},{},{}) on three markings: divisors map onto V for the pair q,r"
    for g in range(2, 8):
        c.add("ext3", g, 3, 2, 3, "psi_3", e((0, -1)), "n=3", "f(psi_r) = -e_0", claim)
        for j in range(1, g):
            if 2 * j >= g:
                continue
            d = kappa_plus(delta(0, {2, 3}), delta(j, {1}), delta(g - j, set()))
            c.add("ext3", g, 3, 2, 3, d, e((0, -2), (j, -2)), "n=3 and 0<j<g/2",
                  "f(D_j) = -2e_0 - 2e_j", claim)


def extn(c):
    claim = "F5[0,0]({p},{q,r}) and F6[0,0,i,g-i]({p},{q,r},I,J): divisors map onto V for the pair r,s"
    for g in range(2, 7):
        for n in range(4, 7):
            rest = set(range(4, n + 1))
            d0 = kappa_plus(delta(0, {2, 3}))
            c.add("extn", g, n, 3, 4, d0, e((0, -2)), "n>=4", "f(D_0) = -2e_0", claim)
            for j in range(1, g // 2 + 1):
                d = kappa_plus(delta(0, {2, 3}), delta(j, {1}), delta(g - j, rest))
                c.add("extn", g, n, 3, 4, d, e((0, -2), (j, 2)), "n>=4 and 1<=j<=g/2",
                      "f(D_j) = -2e_0 + 2e_j", claim)


def knutype(c):
    claim = "Knudsen-type F-curves with |I|+|J|>=4: divisors map onto V for the pair p,q"
    for g in range(2, 7):
        for n in range(4, 7):
            c.add("knudsen-type", g, n, 1, 2, "psi_3", e((0, -1)), "n>=4", "f(psi_r) = -e_0", claim)
            for m in range(4, n + 1):
                J = set(range(2, m + 1))
                for j in range(1, g // 2 + 1):
                    d = kappa_plus(delta(0, J), delta(j, {1, 3}))
                    c.add("knudsen-type", g, n, 1, 2, d, e((0, sgn(len(J) + 1) - 1), (j, -1)),
                          "I={p}, q,r in J, 1<=j<=g/2", "f(D_j) = ((-1)^{|J|+1} - 1) e_0 - e_j", claim)


def genus2(c):
    claim = "divisors contracting F5[0,1](I,J) on genus 2 map onto V"
    for n in range(4, 8):
        p, q = n - 1, n
        c.add("genus2", 2, n, p, q, "psi_1", e((0, -1)), "n>=4", "f(psi_r) = -e_0", claim)
        for J in nonempty_subsets(range(1, n - 1), 2):
            c.add("genus2", 2, n, p, q, kappa_plus(delta(1, J)), e((0, -1), (1, sgn(len(J) + 1))), "J nonempty",
                  "f(kappa + delta_{1,J}) = -e_0 + (-1)^{|J|+1} e_1", claim)
        c.add("genus2", 2, n, p, q, kappa_plus(delta(1, set()), delta(2, set())), e((0, -2), (1, -1)), "J empty",
              "f(kappa + delta_{1,{}} + delta_{2,{}}) = -2e_0 - e_1", claim)


def genus3(c):
    claim = "divisors contracting the remaining type 5 F-curves on genus 3 map onto V"
    for n in range(4, 8):
        p, q = n - 1, n
        c.add("genus3", 3, n, p, q, "psi_1", e((0, -1)), "n>=4", "f(psi_r) = -e_0", claim)
        for J in nonempty_subsets(range(1, n - 1), 2):
            c.add("genus3", 3, n, p, q, kappa_plus(delta(1, J)), e((0, -1), (1, sgn(len(J) + 1))), "J nonempty",
                  "f(kappa + delta_{1,J}) = -e_0 + (-1)^{|J|+1} e_1", claim)
        d = kappa_plus("2/3 " + delta(1, set()), "1/3 " + delta(2, set()))
        c.add("genus3", 3, n, p, q, d, e((0, -1), (1, Fraction(-1, 3) + sgn(n - 1) * Fraction(2, 3))),
              "I = J = {}", "f(kappa + 2/3 delta_{1,{}} + 1/3 delta_{2,{}}) = -e_0 + (-1/3 + (-1)^{n-1} 2/3) e_1",
              claim)
        for J in [frozenset()] + list(nonempty_subsets(range(1, n - 1), 2)):
            c.add("genus3", 3, n, p, q, kappa_plus(delta(2, J)), e((0, -1), (1, sgn(n - len(J) + 1))),
                  "J any", "f(kappa + delta_{2,J}) = -e_0 + (-1)^{|J^c|+1} e_1", claim)


def case6_pair(I, n):
    """p, q as chosen for F5[0,2](I,J): from I when |I|>=3, p in I and q outside when |I|=2, else outside I."""
    I = sorted(I)
    out = [k for k in range(1, n + 1) if k not in I]
    if len(I) >= 3:
        return I[-2], I[-1]
    if len(I) == 2:
        return I[-1], out[-1]
    return out[-2], out[-1]


def genus4(c):
    claim = "divisors contracting the remaining type 5 and type 6 F-curves on genus 4 map onto V"
    none = frozenset()
    for n in range(4, 8):
        p, q = n - 1, n
        named = range(1, n - 1)
        full = set(range(1, n + 1))
        odd = sgn(n + 1) - 1
        c.add("genus4", 4, n, p, q, "psi_1", e((0, -1)), "n>=4", "f(psi_r) = -e_0", claim)
        for J in [none] + list(nonempty_subsets(named, 2)):
            c.add("genus4", 4, n, p, q, kappa_plus(delta(1, J)), e((0, -1), (1, sgn(len(J) + 1))), "J any",
                  "f(kappa + delta_{1,J}) = -e_0 + (-1)^{|J|+1} e_1", claim)
            c.add("genus4", 4, n, p, q, kappa_plus(delta(2, J)), e((0, -1), (2, sgn(len(J) + 1))), "J any",
                  "f(kappa + delta_{2,J}) = -e_0 + (-1)^{|J|+1} e_2", claim)
        all_four = kappa_plus(*(delta(i, none) for i in range(1, 5)))
        c.add("genus4", 4, n, p, q, all_four, e((0, odd), (1, odd), (2, -1)), "n>=4",
              "f(kappa + sum_{i=1}^4 delta_{i,{}}) = ((-1)^{n+1} - 1) e_0 + ((-1)^{n+1} - 1) e_1 - e_2", claim)
        two_four = kappa_plus(delta(2, none), delta(4, none))
        c.add("genus4", 4, n, p, q, two_four, e((0, odd), (2, -1)), "n>=4",
              "f(kappa + delta_{2,{}} + delta_{4,{}}) = ((-1)^{n+1} - 1) e_0 - e_2", claim)

        # F6[0,1,1,2](I,J,K,L)
        for I in nonempty_subsets(named, 2):
            rest = [k for k in named if k not in I]
            for L in nonempty_subsets(rest, 2):
                for i in sorted(I):
                    c.add("genus4-f6", 4, n, p, q, kappa_plus(delta(0, I), delta(1, L | {i})),
                          e((0, sgn(len(I) + 1) - 1), (1, sgn(len(L)))), "i in I",
                          "f(kappa + delta_{0,I} + delta_{1,L+i}) = ((-1)^{|I|+1} - 1) e_0 + (-1)^{|L|} e_1", claim)
            for J in nonempty_subsets(rest, 2):
                for j in sorted(J):
                    c.add("genus4-f6", 4, n, p, q, kappa_plus(delta(2, J), delta(1, I | {j})),
                          e((0, -1), (1, sgn(len(I))), (2, sgn(len(J) + 1))), "j in J",
                          "f(kappa + delta_{2,J} + delta_{1,I+j}) = -e_0 + (-1)^{|I|} e_1 + (-1)^{|J|+1} e_2", claim)

        # F5[0,3](I,J)
        for I in nonempty_subsets(named, 2):
            rest = [k for k in named if k not in I]
            for J in [none] + list(nonempty_subsets(rest, 2)):
                Jc = full - J
                c.add("genus4-f5-03", 4, n, p, q, kappa_plus(delta(3, J)), e((0, -1), (1, sgn(len(Jc) + 1))),
                      "I nonempty", "f(kappa + delta_{3,J}) = -e_0 + (-1)^{|J^c|+1} e_1", claim)
                if not J and n % 2 == 0:
                    c.add("genus4-f5-03", 4, n, p, q, all_four, e((0, -2), (1, -2), (2, -1)), "J empty and n even",
                          "f(D_2) = -2e_0 - 2e_1 - e_2", claim)
                if len(J) >= 2:
                    j = min(J)
                    c.add("genus4-f5-03", 4, n, p, q,
                          kappa_plus(delta(1, {j}), delta(2, J - {j}), delta(3, J)),
                          e((0, -1), (1, 1 + sgn(len(Jc) + 1)), (2, sgn(len(J)))), "|J|>=2, j in J",
                          "f(D_2) = -e_0 + (1 + (-1)^{|J^c|+1}) e_1 + (-1)^{|J|} e_2", claim)
                if len(J) == 1 and len(I) >= 2:
                    i = min(I)
                    c.add("genus4-f5-03", 4, n, p, q, kappa_plus(delta(0, I), delta(2, {i} | J)),
                          e((0, sgn(len(I) + 1) - 1), (2, -1)), "J={j}, |I|>=2, i in I",
                          "f(D_2) = ((-1)^{|I|+1} - 1) e_0 - e_2", claim)
                if len(J) == 1 and len(I) == 1:
                    c.add("genus4-f5-03", 4, n, p, q, kappa_plus(delta(1, Jc), delta(2, full - I)),
                          e((0, -1), (1, sgn(len(Jc) + 1)), (2, sgn(len(I) + 1))), "I={i}, J={j}",
                          "f(D_2) = -e_0 + (-1)^{|J^c|+1} e_1 + (-1)^{|I|+1} e_2", claim)

        # F5[0,2](I,J), markings chosen as described for this case
        for I in nonempty_subsets(range(1, n + 1), 3):
            if I == full:
                continue
            pp, qq = case6_pair(I, n)
            rest = [k for k in range(1, n + 1) if k not in I]
            for J in nonempty_subsets(rest, 2):
                if len(J) >= 2:
                    j = min(J)
                    c.add("genus4-f5-02", 4, n, pp, qq, kappa_plus(delta(2, J), delta(1, I | {j})),
                          e((0, -1), (1, sgn(len(I))), (2, sgn(len(J) + 1))), "|J|>=2, j in J",
                          "f(kappa + delta_{2,J} + delta_{1,I+j}) = -e_0 + (-1)^{|I|} e_1 + (-1)^{|J|+1} e_2",
                          claim)
                if len(I) == 1 and len(J) == 1:
                    c.add("genus4-f5-02", 4, n, pp, qq, kappa_plus(delta(2, J), delta(3, I)),
                          e((0, -1), (1, sgn(n)), (2, 1)), "I={i}, J={j}",
                          "f(kappa + delta_{2,{j}} + delta_{3,{i}}) = -e_0 + (-1)^n e_1 + e_2", claim)
            if len(I) == 1:
                (i,) = I
                d = f"kappa - 1/2 psi_{i} + 1/2 {delta(2, none)} + 1/2 {delta(4, none)} + 1/2 {delta(1, I)}"
                c.add("genus4-f5-02", 4, n, pp, qq, d,
                      e((0, Fraction(sgn(n + 1), 2) - Fraction(1, 2)), (1, Fraction(1, 2)), (2, Fraction(-1, 2))),
                      "I={i}, J empty",
                      "f(D) = (1/2 (-1)^{n+1} - 1/2) e_0 + 1/2 e_1 - 1/2 e_2", claim)

        # F5[2,1](I,J)
        c.add("genus4-f5-21", 4, n, p, q, f"kappa + 1/2 {delta(1, none)} + 1/2 {delta(2, none)}",
              e((0, -1), (1, Fraction(-1, 2)), (2, Fraction(-1, 2))), "n>=4",
              "f(kappa + 1/2 delta_{1,{}} + 1/2 delta_{2,{}}) = -e_0 - 1/2 e_1 - 1/2 e_2", claim)
        for I in nonempty_subsets(named, 2):
            i = min(I)
            for j in [k for k in named if k not in I][:1]:
                c.add("genus4-f5-21", 4, n, p, q, kappa_plus(delta(2, I), delta(1, {i, j})),
                      e((0, -1), (1, -1), (2, sgn(len(I) + 1))), "J empty, i in I, j not in I",
                      "f(kappa + delta_{2,I} + delta_{1,{i,j}}) = -e_0 - e_1 + (-1)^{|I|+1} e_2", claim)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "f_identities.tsv"))
    args = ap.parse_args()
    c = Corpus()
    for fam in (type3_genus2, type3_genus3, f31n, ext3, extn, knutype, genus2, genus3, genus4):
        fam(c)
    with open(args.out, "w") as fh:
        fh.write("id\tg\tn\tp\tq\tdivisor\texpected\tpredicate\tprinted\tclaim\n")
        for row in c.rows:
            fh.write("\t".join(str(x) for x in row) + "\n")
    print(f"{args.out}: {len(c.rows)} rows")


if __name__ == "__main__":
    main()
