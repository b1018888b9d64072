"""Direct simulation of the shift-then-punch dynamics for A = {n : nu2(n) even} plus {0}.

Keeps the current point as an explicit 0/1 array that is shifted left by one
at every step, then overwrites its dyadic prefix of length 2^min(nuA, nu2(n))
with the indicator of A. Prints the covering gap of each level set
L(l) = {n : punch length >= 2^l} on [1, steps], plus facts about the surviving
set B = {n : alpha_n(0) = 1} and its depth-16 return set. The printed values
are frozen in the acceptance suite.
"""

import numpy as np

E = 1 << 15
STEPS = 1 << 13
DEPTH = 16


def nu2(n):
    return (n & -n).bit_length() - 1


def covering_gap(members, lo, hi):
    """Smallest N with every length-N interval of [lo, hi) meeting `members`."""
    inside = [m for m in members if lo <= m < hi]
    if not inside:
        return None
    longest = inside[0] - lo
    for x, y in zip(inside, inside[1:]):
        longest = max(longest, y - x - 1)
    longest = max(longest, hi - 1 - inside[-1])
    return longest + 1


def main():
    a = np.zeros(E, dtype=bool)
    a[0] = True
    for n in range(1, E):
        a[n] = nu2(n) % 2 == 0
    alpha = a.copy()
    punch = {}
    b = [0]
    for n in range(1, STEPS + 1):
        alpha = alpha[1:]
        bad = a[: len(alpha)] & ~alpha
        hit = np.flatnonzero(bad)
        v = nu2(n)
        if hit.size == 0:
            k = v
        elif hit[0] == 0:
            k = None
        else:
            k = min(int(hit[0]).bit_length() - 1, v)
        if k is not None:
            alpha[: 1 << k] = a[: 1 << k]
        punch[n] = k
        if alpha[0]:
            b.append(n)
    for level in range(5):
        members = [n for n in range(1, STEPS + 1) if punch[n] is not None and punch[n] >= level]
        print("L%d size=%d covering_gap=%s" % (level, len(members), covering_gap(members, 1, STEPS + 1)))
    print("B size=%d subset_of_A=%s" % (len(b), all(a[m] for m in b)))
    x = np.zeros(STEPS + 1, dtype=bool)
    x[b] = True
    returns = [m for m in range(1, STEPS + 1 - DEPTH) if all(x[m + i] == x[i] for i in range(DEPTH + 1))]
    print("returns depth=%d size=%d covering_gap=%s" % (DEPTH, len(returns),
                                                        covering_gap(returns, 1, STEPS + 1 - DEPTH)))


if __name__ == "__main__":
    main()
