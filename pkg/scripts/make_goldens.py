"""Rewrite the plot-spec JSON goldens used by tests/test_visualization.py."""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from test_visualization import GOLDENS, _all_specs, golden_frame  # noqa: E402


def main() -> None:
    GOLDENS.mkdir(exist_ok=True)
    for spec in _all_specs(golden_frame()):
        path = GOLDENS / f"{spec.kind}_{spec.column}.json"
        path.write_text(spec.to_json(), encoding="utf-8")
        print(path.relative_to(ROOT))


if __name__ == "__main__":
    main()
