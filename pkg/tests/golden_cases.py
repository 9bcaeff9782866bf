"""Commands whose output is pinned byte for byte under tests/golden.

Run ``python -m tests.golden_cases`` from the repository root to regenerate
after an intentional change in output.
"""

from pathlib import Path

GOLDEN_DIR = Path(__file__).parent / "golden"

SAMPLE_ARGS = ["sample", "--dist", "bml", "--alpha", "2", "--beta", "3", "--p", "0.5", "--n", "5", "--seed", "42"]
SIMULATE_ARGS = ["simulate", "--n-list", "1,10,50", "--k", "200", "--alpha", "1", "--beta", "2",
                 "--p", "0.5", "--seed", "42"]

CASES = {
    "sample_bml_n5_seed42.txt": SAMPLE_ARGS,
    "simulate_k200_seed42.csv": SIMULATE_ARGS,
}


def regenerate():
    from genlap.cli import main

    for name, args in CASES.items():
        code = main([*args, "--output", str(GOLDEN_DIR / name)])
        if code != 0:
            raise SystemExit(f"{name}: exit {code}")


if __name__ == "__main__":
    regenerate()
