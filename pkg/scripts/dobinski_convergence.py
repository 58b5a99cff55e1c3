"""Terms needed by the certified Dobinski sum, and its actual error.

    python3 scripts/dobinski_convergence.py --n-max 10 --tol 1e-9
"""

import argparse
from dataclasses import dataclass

from hetstir import bellpoly as bp
from hetstir import triangles as tr
from hetstir.suites import DOBINSKI_LAM, DOBINSKI_X


@dataclass
class Config:
    n_max: int = 10
    tol: float = 1e-9


def run(cfg: Config):
    H = tr.het2(cfg.n_max)
    rows = []
    for n in range(cfg.n_max + 1):
        poly = bp.het_bell(n, H)
        for x0 in DOBINSKI_X:
            for lam0 in DOBINSKI_LAM:
                exact = poly.eval(x0, lam0)
                res = bp.dobinski(n, x0, lam0, cfg.tol)
                rows.append((n, x0, lam0, float(exact), res.terms, res.bound, res.error_against(exact)))
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--tol", type=float, default=Config.tol)
    a = ap.parse_args()
    print(f"{'n':>3} {'x':>4} {'lam':>4} {'value':>16} {'terms':>6} {'bound':>10} {'error':>10}")
    for n, x0, lam0, val, terms, bound, err in run(Config(a.n_max, a.tol)):
        print(f"{n:>3} {str(x0):>4} {str(lam0):>4} {val:>16.6f} {terms:>6} {bound:>10.2e} {err:>10.2e}")


if __name__ == "__main__":
    main()
