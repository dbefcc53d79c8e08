"""Write the standard catalog entries as canonical .nlie files (rational constants)."""

import argparse
from pathlib import Path

from nlie.catalog import STANDARD_NAMES, build
from nlie.fileformat import serialize
from nlie.linalg import Field


def file_name(name: str) -> str:
    return name.replace(":", "-").replace("+", "_plus_") + ".nlie"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=Path(__file__).resolve().parent.parent / "data", type=Path)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name in STANDARD_NAMES:
        path = args.out / file_name(name)
        path.write_text(serialize(build(name, Field.rationals())), encoding="utf-8")
        print(path)


if __name__ == "__main__":
    main()
