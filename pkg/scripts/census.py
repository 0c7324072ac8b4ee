#!/usr/bin/env python3
"""Census of signed posets at small rank.

Enumerates every signed poset on [n], tallies sizes, isomorphism classes,
natural labelings, and Gorenstein order polytopes, and prints one table per
rank.  n = 3 takes a couple of minutes because of the Gorenstein column.

    python3 scripts/census.py --max-n 2
    python3 scripts/census.py --max-n 3 --json out.json
"""

import argparse
import json
import sys
import time
from collections import Counter
from dataclasses import dataclass, field

sys.path.insert(0, "src")

from signedposets.catalog import canonical_form, iter_signed_posets, naturally_labeled_count
from signedposets.gorenstein import is_gorenstein
from signedposets.jordan import jordan_holder


@dataclass
class CensusConfig:
    max_n: int = 2
    force: bool = False
    gorenstein: bool = True
    json_path: str | None = None


@dataclass
class RankCensus:
    n: int
    total: int = 0
    by_size: Counter = field(default_factory=Counter)
    classes: set = field(default_factory=set)
    natural: int = 0
    gorenstein: int = 0
    jh_sizes: Counter = field(default_factory=Counter)
    elapsed: float = 0.0

    def to_json_dict(self):
        return {
            "n": self.n,
            "total": self.total,
            "by_size": {str(k): v for k, v in sorted(self.by_size.items())},
            "isomorphism_classes": len(self.classes),
            "naturally_labeled": self.natural,
            "gorenstein": self.gorenstein,
            "jh_size_histogram": {str(k): v for k, v in sorted(self.jh_sizes.items())},
            "elapsed_s": round(self.elapsed, 2),
        }


def census_rank(n: int, config: CensusConfig) -> RankCensus:
    out = RankCensus(n)
    start = time.monotonic()
    for p in iter_signed_posets(n, force=config.force):
        out.total += 1
        out.by_size[len(p.roots)] += 1
        out.classes.add(canonical_form(p))
        out.jh_sizes[len(jordan_holder(p))] += 1
        if config.gorenstein and is_gorenstein(p):
            out.gorenstein += 1
    out.natural = naturally_labeled_count(n, force=config.force)
    out.elapsed = time.monotonic() - start
    return out


def print_rank(c: RankCensus) -> None:
    print(f"\nn = {c.n}  ({c.elapsed:.1f}s)")
    print(f"  signed posets          {c.total}")
    print(f"  isomorphism classes    {len(c.classes)}")
    print(f"  naturally labeled      {c.natural}")
    print(f"  Gorenstein O_P         {c.gorenstein}")
    sizes = "  ".join(f"{k}:{v}" for k, v in sorted(c.by_size.items()))
    print(f"  posets by |P|          {sizes}")
    jh = "  ".join(f"{k}:{v}" for k, v in sorted(c.jh_sizes.items()))
    print(f"  posets by |JH|         {jh}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=2)
    parser.add_argument("--force", action="store_true", help="allow n >= 4")
    parser.add_argument("--no-gorenstein", action="store_true",
                        help="skip the (slow) Gorenstein column")
    parser.add_argument("--json", dest="json_path", default=None,
                        help="also dump the tables to this JSON file")
    args = parser.parse_args()
    config = CensusConfig(args.max_n, args.force, not args.no_gorenstein,
                          args.json_path)

    tables = []
    for n in range(1, config.max_n + 1):
        c = census_rank(n, config)
        print_rank(c)
        tables.append(c.to_json_dict())

    if config.json_path:
        with open(config.json_path, "w", encoding="utf-8") as handle:
            json.dump({"schema": 1, "census": tables}, handle, indent=2)
        print(f"\nwrote {config.json_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
