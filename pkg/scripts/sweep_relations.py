"""Verify every relation family against the Garside oracle over a range of ranks, with timings."""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from purebraid import catalog, presentation


@dataclass
class Config:
    n_max: int = 6
    phi_n_max: int = 5
    jobs: int = 1
    lemmas: list[str] = field(default_factory=lambda: sorted(catalog.FAMILIES))


def sweep(cfg: Config) -> list[dict]:
    runs = []

    def timed(label, n, fn):
        t0 = time.perf_counter()
        rep = fn()
        runs.append({"family": label, "n": n, "total": rep.total, "failed": rep.failed,
                     "seconds": round(time.perf_counter() - t0, 4)})

    for n in range(1, cfg.n_max + 1):
        timed("relations", n, lambda: presentation.verify_relations(n, jobs=cfg.jobs))
        timed("generation", n, lambda: presentation.verify_generation(n, jobs=cfg.jobs))
        timed("witnesses", n, lambda: presentation.verify_witnesses(n, jobs=cfg.jobs))
        if n <= cfg.phi_n_max:
            timed("phi", n, lambda: presentation.verify_phi_well_defined(n, jobs=cfg.jobs))
    for name in cfg.lemmas:
        timed(f"lemma:{name}", cfg.n_max, lambda: catalog.sweep_identity(name, cfg.n_max))
    return runs


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=Config.n_max)
    parser.add_argument("--phi-n-max", type=int, default=Config.phi_n_max)
    parser.add_argument("--jobs", type=int, default=Config.jobs)
    cfg = Config(**vars(parser.parse_args(argv)))
    runs = sweep(cfg)
    print(json.dumps({"config": asdict(cfg), "runs": runs,
                      "failed": sum(r["failed"] for r in runs)}, indent=2))
    return 1 if any(r["failed"] for r in runs) else 0


if __name__ == "__main__":
    raise SystemExit(main())
