from math import comb
def pbm(rows, w):
    out = "P1\n%d %d\n" % (w, len(rows))
    for r in rows:
        s = "".join("1" if b else "0" for b in r)
        for k in range(0, len(s), 70):
            out += s[k:k+70] + "\n"
    return out
# a1 pyramid, pattern [1], generations 0..=32, centered, 1 px per cell
n, j, G = 101, 50, 32
rows = []
for t in range(G + 1):
    r = [False] * n
    ind = t // 2
    for i in range(n - t):
        k = j - i
        if 0 <= k <= t and comb(t, k) % 2 == 1:
            r[ind + i] = True
    rows.append(r)
open("a1_pattern1_gen32.pbm", "w").write(pbm(rows, n))
# rule 90 from a centered impulse, 16 generations, width 33
T = 16; W = 2 * T + 1; c = T
rows = []
for t in range(T + 1):
    rows.append([(t + d) % 2 == 0 and abs(d) <= t and comb(t, (t + d) // 2) % 2 == 1 for d in range(-c, W - c)])
open("rule90_impulse_gen16.pbm", "w").write(pbm(rows, W))
