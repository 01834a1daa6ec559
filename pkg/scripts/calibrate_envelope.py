"""
Recalibrate the asymptotic residual envelope.

Runs the exact block computations of tests/fixtures/asymptotic_envelope.json,
takes the largest |residual| * n / log2(n) over both kinds and block lengths,
multiplies it by the fixture's margin and rounds up to a quarter. The result
is written back as "constant"; copy it to ASYMPTOTIC_ENVELOPE in
softguess/config.py.

Usage:
    python scripts/calibrate_envelope.py [--dry-run]
"""

import argparse
import json
import logging
import math
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))

from softguess.asymptotics.expansion import expansion_table  # noqa: E402
from softguess.core.parser import parse_pmf_spec  # noqa: E402

FIXTURE = ROOT / "tests" / "fixtures" / "asymptotic_envelope.json"

logger = logging.getLogger("SOFTGUESS.calibrate")


def calibrate(fixture: dict) -> float:
    base = parse_pmf_spec(fixture["source"])
    worst = 0.0
    for kind in fixture["kinds"]:
        reports = expansion_table(base, fixture["ns"], fixture["rho"], fixture["D"],
                                  fixture["eps"], kind)
        for r in reports:
            ratio = abs(r.residual) * r.n / math.log2(r.n)
            logger.info("%s n=%d residual=%.6g ratio=%.4f", kind, r.n, r.residual, ratio)
            worst = max(worst, ratio)
    return math.ceil(4.0 * fixture["margin"] * worst) / 4.0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    parser.add_argument("--dry-run", action="store_true", help="Print the constant only")
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO, format='[%(levelname)s] %(message)s')

    fixture = json.loads(FIXTURE.read_text(encoding='utf-8'))
    constant = calibrate(fixture)
    print(f"envelope constant: {constant}")
    if not args.dry_run:
        fixture["constant"] = constant
        FIXTURE.write_text(json.dumps(fixture, indent=2) + "\n", encoding='utf-8')
    return 0


if __name__ == "__main__":
    sys.exit(main())
