#!/usr/bin/env python3
"""Reference CAS adapter for `quintic verify --cas-cmd`, backed by PARI/GP through cypari2.

Reads {"n": n} on stdin and writes {"h_k5": .., "type": [a, b], "rank_ambiguous": r} on stdout,
where the numbers describe the 5-part of the class group of Q(n^(1/5), zeta_5).

Class groups are computed under GRH (bnfinit without bnfcertify).

    quintic verify --fixtures data/table1.json --cas-cmd "python3 tools/cas_adapter_pari.py"
"""

import json
import sys

import cypari2


def five_part(d: int) -> int:
    out = 1
    while d % 5 == 0:
        d //= 5
        out *= 5
    return out


# gp side: field variable y so that polcyclo(5) in x can be solved over it
GP_SETUP = [r"""
quintic_sigma(K) = {
  my(z = nfroots(K, polcyclo(5))[1], G = nfgaloisconj(K));
  for (i = 1, #G,
    my(s = G[i], t = s, k = 1);
    if (nfgaloisapply(K, s, z) != z, next);
    while (t != y, t = nfgaloisapply(K, s, t); k++);
    if (k == 5, return(s)));
  error("no relative automorphism of order 5");
}
""", r"""
quintic_cl(n) = {
  my(K = bnfinit(subst(polredbest(polcompositum(x^5 - n, polcyclo(5))[1]), x, y), 1));
  my(s = quintic_sigma(K), g = K.gen);
  [K.cyc, vector(#g, j, bnfisprincipal(K, idealdiv(K, nfgaloisapply(K, s, g[j]), g[j]), 0))];
}
"""]


def invariants(n: int) -> dict:
    pari = cypari2.Pari()
    pari.allocatemem(1 << 28, 1 << 32, silent=True)  # grows on demand up to 4 GiB
    for definition in GP_SETUP:
        pari(" ".join(definition.split()))
    cyc_gp, cols_gp = pari(f"quintic_cl({n})")
    cyc = [int(d) for d in cyc_gp]
    cols = [[int(e) for e in c] for c in cols_gp]  # column j: class of σ(g_j)/g_j
    parts = sorted((five_part(d) for d in cyc), reverse=True)
    h5 = 1
    for p in parts:
        h5 *= p
    group_type = (parts + [1, 1])[:2]

    # elements of order dividing 5 in Cl, then those fixed by σ
    steps = [d // 5 if d % 5 == 0 else None for d in cyc]
    support = [j for j, s in enumerate(steps) if s is not None]
    fixed = 0
    for code in range(5 ** len(support)):
        x = [0] * len(cyc)
        for j in support:
            x[j] = (code % 5) * steps[j]
            code //= 5
        image = [sum(cols[j][i] * x[j] for j in range(len(cyc))) % cyc[i] for i in range(len(cyc))]
        fixed += not any(image)
    rank = 0
    while fixed > 1:
        fixed //= 5
        rank += 1
    return {"h_k5": h5, "type": group_type, "rank_ambiguous": rank}


def main() -> int:
    request = json.loads(sys.stdin.readline())
    n = int(request["n"])
    if n < 2:
        print(f"n must be at least 2, got {n}", file=sys.stderr)
        return 2
    sys.stdout.write(json.dumps(invariants(n)) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
