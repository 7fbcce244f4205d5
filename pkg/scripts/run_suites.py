"""Run every verification suite for several seeds and print a timing table.

    python scripts/run_suites.py 0 1 2
"""

import sys

from residua.checks import all_suites


def main(seeds):
    failed = False
    for seed in seeds:
        for r in all_suites(seed):
            failed |= not r.ok
            print(f"seed {seed:>6}  {r.name:<22} {r.cases:>6} cases  "
                  f"{len(r.failures):>3} failures  {r.seconds:6.2f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main([int(s) for s in sys.argv[1:]] or [0]))
