"""Regenerate the bundled OEIS fixtures from locally computed counts.

Run from the repository root: ``python scripts/make_fixtures.py``.
"""

from pathlib import Path

from fusscat.catalan import catalan, fuss_catalan, super_catalan

TERMS = 25
OUT = Path(__file__).resolve().parent.parent / "src" / "fusscat" / "data" / "oeis"

SEQUENCES = {
    "A000108": [catalan(k) for k in range(TERMS)],
    "A001764": [fuss_catalan(3, k) for k in range(TERMS)],
    "A002293": [fuss_catalan(4, k) for k in range(TERMS)],
    "A001003": [super_catalan(n) for n in range(TERMS)],
}


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for ident, terms in SEQUENCES.items():
        (OUT / f"{ident}.txt").write_text(f"{ident}\n{','.join(map(str, terms))}\n", encoding="utf-8")
        print(OUT / f"{ident}.txt")


if __name__ == "__main__":
    main()
