"""Abelianization rank of the pure dihedral Artin group against the rank spanned by the wall monodromies."""

import argparse
from dataclasses import dataclass

from purebraid.dihedral import abelianization_rank, k_subgroup_rank, reidemeister_schreier


@dataclass
class Config:
    n_min: int = 2
    n_max: int = 12


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=Config.n_min)
    parser.add_argument("--n-max", type=int, default=Config.n_max)
    cfg = Config(**vars(parser.parse_args(argv)))
    print(f"{'n':>3} {'index':>6} {'gens':>5} {'ab rank':>8} {'torsion':>8} {'K rank':>7}  K proper")
    for n in range(cfg.n_min, cfg.n_max + 1):
        p = reidemeister_schreier(n)
        ab = abelianization_rank(p)
        k = k_subgroup_rank(n)
        print(f"{n:>3} {p.index:>6} {p.generator_count:>5} {ab.rank:>8} "
              f"{str(ab.torsion or '-'):>8} {k.rank:>7}  {'yes' if k.proper else 'no'}")


if __name__ == "__main__":
    main()
