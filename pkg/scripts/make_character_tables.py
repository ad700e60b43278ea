"""Write the character-table fixtures under src/etmaps/data/chartabs.

Values are transcribed from the standard tables; irrational entries are
expanded to 40 significant digits.  Every table is revalidated by
orthogonality when loaded, so a transcription slip fails loudly.
"""

from decimal import Decimal, getcontext
import json
from pathlib import Path

getcontext().prec = 45

OUT = Path(__file__).resolve().parents[1] / "src" / "etmaps" / "data" / "chartabs"


def num(x):
    return format(+x, ".40g") if isinstance(x, Decimal) else str(x)


def c(re, im=0):
    return {"re": num(Decimal(re) if not isinstance(re, Decimal) else re),
            "im": num(Decimal(im) if not isinstance(im, Decimal) else im)}


half = Decimal(1) / 2
r5, r7, r11, r2 = (Decimal(k).sqrt() for k in (5, 7, 11, 2))

# b_n = (-1 + sqrt(-n)) / 2 for n = 7, 11; b5 = (-1 + sqrt 5) / 2
b7, b7c = c(-half, r7 / 2), c(-half, -r7 / 2)
b11, b11c = c(-half, r11 / 2), c(-half, -r11 / 2)
b5, b5c = (-1 + r5) / 2, (-1 - r5) / 2
i2, i2c = c(0, r2), c(0, -r2)


def row(*vals):
    return [v if isinstance(v, dict) else c(v) for v in vals]


def classes(*spec):
    return [{"label": lab, "size": size, "element_order": order} for lab, size, order in spec]


TABLES = {
    "A5": {
        "group": "A5", "order": 60,
        "classes": classes(("1A", 1, 1), ("2A", 15, 2), ("3A", 20, 3), ("5A", 12, 5), ("5B", 12, 5)),
        "characters": [
            row(1, 1, 1, 1, 1),
            row(3, -1, 0, -b5c, -b5),
            row(3, -1, 0, -b5, -b5c),
            row(4, 0, 1, -1, -1),
            row(5, 1, -1, 0, 0),
        ],
    },
    "L2_7": {
        "group": "L2(7)", "order": 168,
        "classes": classes(("1A", 1, 1), ("2A", 21, 2), ("3A", 56, 3), ("4A", 42, 4), ("7A", 24, 7), ("7B", 24, 7)),
        "characters": [
            row(1, 1, 1, 1, 1, 1),
            row(3, -1, 0, 1, b7, b7c),
            row(3, -1, 0, 1, b7c, b7),
            row(6, 2, 0, 0, -1, -1),
            row(7, -1, 1, -1, 0, 0),
            row(8, 0, -1, 0, 1, 1),
        ],
    },
    "A6": {
        "group": "A6", "order": 360,
        "classes": classes(("1A", 1, 1), ("2A", 45, 2), ("3A", 40, 3), ("3B", 40, 3), ("4A", 90, 4),
                           ("5A", 72, 5), ("5B", 72, 5)),
        "characters": [
            row(1, 1, 1, 1, 1, 1, 1),
            row(5, 1, 2, -1, -1, 0, 0),
            row(5, 1, -1, 2, -1, 0, 0),
            row(8, 0, -1, -1, 0, -b5, -b5c),
            row(8, 0, -1, -1, 0, -b5c, -b5),
            row(9, 1, 0, 0, 1, -1, -1),
            row(10, -2, 1, 1, 0, 0, 0),
        ],
    },
    "M11": {
        "group": "M11", "order": 7920,
        "classes": classes(("1A", 1, 1), ("2A", 165, 2), ("3A", 440, 3), ("4A", 990, 4), ("5A", 1584, 5),
                           ("6A", 1320, 6), ("8A", 990, 8), ("8B", 990, 8), ("11A", 720, 11), ("11B", 720, 11)),
        "characters": [
            row(1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
            row(10, 2, 1, 2, 0, -1, 0, 0, -1, -1),
            row(10, -2, 1, 0, 0, 1, i2, i2c, -1, -1),
            row(10, -2, 1, 0, 0, 1, i2c, i2, -1, -1),
            row(11, 3, 2, -1, 1, 0, -1, -1, 0, 0),
            row(16, 0, -2, 0, 1, 0, 0, 0, b11, b11c),
            row(16, 0, -2, 0, 1, 0, 0, 0, b11c, b11),
            row(44, 4, -1, 0, -1, 1, 0, 0, 0, 0),
            row(45, -3, 0, 1, 0, 0, -1, -1, 1, 1),
            row(55, -1, 1, -1, 0, -1, 1, 1, 0, 0),
        ],
    },
    "M22": {
        "group": "M22", "order": 443520,
        "classes": classes(("1A", 1, 1), ("2A", 1155, 2), ("3A", 12320, 3), ("4A", 13860, 4), ("4B", 27720, 4),
                           ("5A", 88704, 5), ("6A", 36960, 6), ("7A", 63360, 7), ("7B", 63360, 7),
                           ("8A", 55440, 8), ("11A", 40320, 11), ("11B", 40320, 11)),
        "characters": [
            row(1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
            row(21, 5, 3, 1, 1, 1, -1, 0, 0, -1, -1, -1),
            row(45, -3, 0, 1, 1, 0, 0, b7, b7c, -1, 1, 1),
            row(45, -3, 0, 1, 1, 0, 0, b7c, b7, -1, 1, 1),
            row(55, 7, 1, 3, -1, 0, 1, -1, -1, 1, 0, 0),
            row(99, 3, 0, 3, -1, -1, 0, 1, 1, -1, 0, 0),
            row(154, 10, 1, -2, 2, -1, 1, 0, 0, 0, 0, 0),
            row(210, 2, 3, -2, -2, 0, -1, 0, 0, 0, 1, 1),
            row(231, 7, -3, -1, -1, 1, 1, 0, 0, -1, 0, 0),
            row(280, -8, 1, 0, 0, 0, 1, 0, 0, 0, b11, b11c),
            row(280, -8, 1, 0, 0, 0, 1, 0, 0, 0, b11c, b11),
            row(385, 1, -2, 1, 1, 0, -2, 0, 0, 1, 0, 0),
        ],
    },
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, doc in TABLES.items():
        (OUT / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")
        print("wrote", name)


if __name__ == "__main__":
    main()
