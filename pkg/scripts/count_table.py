"""Table of generator, commutator and box relation counts for the interval presentation."""

import argparse
import json
from dataclasses import asdict, dataclass
from math import comb

from purebraid.presentation import box_relations, commutator_relations, enumerate_generators


@dataclass
class Config:
    n_min: int = 1
    n_max: int = 10
    as_json: bool = False


def count_rows(cfg: Config) -> list[dict]:
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        rows.append({
            "n": n,
            "generators": len(enumerate_generators(n)),
            "commutator": len(commutator_relations(n)),
            "box": len(box_relations(n)),
            "binom(n+2,5)": comb(n + 2, 5),
        })
    return rows


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=Config.n_min)
    parser.add_argument("--n-max", type=int, default=Config.n_max)
    parser.add_argument("--json", dest="as_json", action="store_true")
    cfg = Config(**vars(parser.parse_args(argv)))
    rows = count_rows(cfg)
    if cfg.as_json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    cols = list(rows[0])
    print("  ".join(f"{c:>12}" for c in cols))
    for r in rows:
        print("  ".join(f"{r[c]:>12}" for c in cols))


if __name__ == "__main__":
    main()
