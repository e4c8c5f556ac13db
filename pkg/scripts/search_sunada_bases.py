"""Random search for small bases whose Sunada pair is told apart by H1 or by cup nullity.

    python scripts/search_sunada_bases.py --trials 2000 --seed 1
"""
import argparse
import random

from foxcup.sunada import Subgroup, find_epimorphisms, semidirect_zn, sunada_pipeline
from foxcup.words import Presentation, Word


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--generators", type=int, default=3)
    ap.add_argument("--max-relators", type=int, default=3)
    ap.add_argument("--max-length", type=int, default=10)
    ap.add_argument("--cup-only", action="store_true", help="report only cup-distinguished pairs")
    args = ap.parse_args()

    G = semidirect_zn(8)
    H1 = Subgroup(G, [G.index_of(x) for x in [(1, 0), (3, 0), (5, 0), (7, 0)]])
    H2 = Subgroup(G, [G.index_of(x) for x in [(1, 0), (3, 4), (5, 4), (7, 0)]])
    rng = random.Random(args.seed)
    n = args.generators
    tried = hits = 0
    for _ in range(args.trials):
        rels = tuple(
            Word(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(rng.randint(4, args.max_length)))
            for _ in range(rng.randint(1, args.max_relators))
        )
        P = Presentation(n, rels)
        phi = find_epimorphisms(P, G, max_results=1)
        if not phi:
            continue
        tried += 1
        r = sunada_pipeline(P, G, H1, H2, phi=phi[0])
        if r.cup_distinguishes or (r.homology_distinguishes and not args.cup_only):
            hits += 1
            print(P)
            print("   H1:", " | ".join(h.render() for h in r.homology))
            print("   cup (b, dimH2, rank, nullity):", " | ".join(
                f"({c.b}, {c.dim_h2}, {c.rank}, {c.nullity})" for c in r.cup))
    print(f"{tried} bases surject onto {G!r}; {hits} distinguished pairs")


if __name__ == "__main__":
    main()
