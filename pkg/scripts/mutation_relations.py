"""Coxeter relations and quotient-map equivariance for the mutation tables."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from combquot import birational as bir


@dataclass
class Config:
    cases: list[tuple[int, int]] = field(default_factory=lambda: [(3, 1), (4, 1), (4, 2),
                                                                  (5, 1), (5, 2), (6, 2)])
    mode: str = "symbolic"
    seed: int = 0


def main(cfg: Config) -> None:
    for n, k in cfg.cases:
        t0 = time.perf_counter()
        maps = [bir.mutation_map(n, k, i) for i in range(1, n + 1)]
        cox = bir.verify_coxeter(maps, mode=cfg.mode, seed=cfg.seed)
        eq = bir.verify_equivariance(n, k, mode=cfg.mode, seed=cfg.seed)
        bases = [bir.base_locus_components(m) for m in maps]
        print(f"(n,k)=({n},{k}) coxeter={cox.holds} equivariance={eq.holds} "
              f"base loci={bases} [{time.perf_counter() - t0:.2f}s, {cfg.mode}]")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--mode", choices=["symbolic", "eval"], default="symbolic")
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    main(Config(mode=a.mode, seed=a.seed))
