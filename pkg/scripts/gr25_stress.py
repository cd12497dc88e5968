"""Quotient fan of the Gr(2,5) Bruhat chart plus its (P^2)^2 GIT models.

Pinned regression values: 30 rays, 108 maximal cones, complete, not simplicial.
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from combquot.acceptance import git_models
from combquot.catalog import ChartSpec, chart_weights, product_fan, projective_space_fan
from combquot.polyhedral import fan_report, is_coarsening
from combquot.quotients import quotient_fan

PINNED = {"ray_count": 30, "max_cone_count": 108, "is_complete": True, "is_simplicial": False}


@dataclass
class Config:
    n: int = 5
    k: int = 2
    search_models: bool = True


def main(cfg: Config) -> dict:
    ws = chart_weights(ChartSpec("grassmann", cfg.n, cfg.k))
    t0 = time.perf_counter()
    fan = quotient_fan(ws)
    out = {"config": asdict(cfg), "seconds": round(time.perf_counter() - t0, 2),
           "report": fan_report(fan).to_json()}
    if (cfg.n, cfg.k) == (5, 2):
        out["pinned_ok"] = all(out["report"][key] == val for key, val in PINNED.items())
    if cfg.search_models:
        target = product_fan([projective_space_fan(2)] * 2) if (cfg.n, cfg.k) == (5, 2) \
            else projective_space_fan(fan.rank)
        models = git_models(ws, target)
        out["models"] = [{"v": list(v), "coarsens": is_coarsening(g, fan)} for v, g in models]
    return out


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--no-models", action="store_true")
    a = ap.parse_args()
    print(json.dumps(main(Config(a.n, a.k, not a.no_models)), indent=2, sort_keys=True))
