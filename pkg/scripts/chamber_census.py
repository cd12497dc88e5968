"""GIT chamber counts and fan types for every catalog chart up to a size bound."""
from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from combquot.acceptance import catalog_specs
from combquot.catalog import chart_weights, identify
from combquot.quotients import git_chambers, git_quotient_fan, quotient_fan


@dataclass
class Config:
    max_coordinates: int = 9
    identify_models: bool = True


def main(cfg: Config) -> None:
    print(f"{'chart':<28}{'N':>3}{'rays':>6}{'cones':>7}{'chambers':>10}  models")
    for spec in catalog_specs():
        ws = chart_weights(spec)
        if ws.n_coords > cfg.max_coordinates:
            continue
        t0 = time.perf_counter()
        fan = quotient_fan(ws)
        cc = git_chambers(ws)
        kinds = Counter()
        if cfg.identify_models:
            for v in cc.representatives:
                g = git_quotient_fan(ws, v)
                kinds[identify(g)["identified"] or f"{len(g.rays)} rays"] += 1
        name = f"{spec.family}(n={spec.n},k={spec.k},c={spec.copies})"
        print(f"{name:<28}{ws.n_coords:>3}{len(fan.rays):>6}{len(fan.max_cones):>7}"
              f"{len(cc.chambers):>10}  {dict(kinds)}  [{time.perf_counter() - t0:.1f}s]")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-coordinates", type=int, default=9)
    ap.add_argument("--no-identify", action="store_true")
    a = ap.parse_args()
    main(Config(a.max_coordinates, not a.no_identify))
