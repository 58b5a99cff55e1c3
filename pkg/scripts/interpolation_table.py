"""Show how H_lam(n,k) moves from {n k} at lam=0 to L(n,k) at lam=1.

    python3 scripts/interpolation_table.py --n 6 --lambdas 0,1/4,1/2,3/4,1
"""

import argparse
from dataclasses import dataclass

from hetstir import triangles as tr
from hetstir.ring import format_lampoly, format_rat, parse_rat


@dataclass
class Config:
    n: int = 6
    lambdas: tuple = ("0", "1/4", "1/2", "3/4", "1")


def run(cfg: Config) -> str:
    lams = [parse_rat(s) for s in cfg.lambdas]
    H = tr.het2(cfg.n)
    head = ["k", "H(n,k)"] + [f"lam={format_rat(l)}" for l in lams]
    table = [head]
    for k in range(cfg.n + 1):
        v = H[cfg.n, k]
        table.append([str(k), format_lampoly(v)] + [format_rat(v.eval(l)) for l in lams])
    widths = [max(len(r[i]) for r in table) for i in range(len(head))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in table)


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--lambdas", default=",".join(Config.lambdas))
    a = ap.parse_args()
    print(run(Config(a.n, tuple(a.lambdas.split(",")))))
