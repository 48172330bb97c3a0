"""Search padding counts for the printed two-column PDF417 'Super!' symbol.

The printed symbol lists 16 codewords: descriptor 8, the six byte-mode
codewords, one more data cell, and eight further values of which only the
last four are labelled as correction codewords (364, 620, 420, 729). This
script tries 0-5 padding codewords (value 900) at levels 1 and 2, with the
descriptor either fixed at 8 or counting the padding, and reports which
combination reproduces the printed values.

Usage: python scripts/reconcile_super_symbol.py [--write docs/super_symbol_reconciliation.md]
"""
import argparse
import sys

from dna2dbc.ecc import EccConfig, Ring, correction_codewords

BYTE_CWS = [924, 139, 776, 318, 439, 485]
LABELLED = [364, 620, 420, 729]
UNLABELLED = [65, 482, 393, 214]


def search():
    rows = []
    for level in (1, 2):
        cfg = EccConfig(level, Ring.MOD929)
        for pad in range(6):
            for descriptor in sorted({8, 7 + pad}):
                data = [descriptor] + BYTE_CWS + [900] * pad
                parity = correction_codewords(data, cfg)
                rows.append((level, pad, descriptor, parity))
    return rows


def report():
    lines = [
        "# Reconciling the printed 'Super!' PDF417 symbol",
        "",
        "Generated by `python scripts/reconcile_super_symbol.py --write docs/super_symbol_reconciliation.md`.",
        "",
        "Printed cells: `8, 924, 139, 776, 318, 439, 485, 900, 65, 482, 393, 214, 364, 620, 420, 729`;",
        "the last four are labelled C03..C00.",
        "",
        "| level | pad CWs | descriptor | computed parity | last 4 match | all 8 printed match |",
        "|---|---|---|---|---|---|",
    ]
    hits_last4, hits_all = [], []
    for level, pad, descriptor, parity in search():
        last4 = parity[-4:] == LABELLED
        full = parity == UNLABELLED + LABELLED
        if last4:
            hits_last4.append((level, pad, descriptor))
        if full:
            hits_all.append((level, pad, descriptor))
        lines.append(
            f"| {level} | {pad} | {descriptor} | {', '.join(map(str, parity))} | "
            f"{'yes' if last4 else 'no'} | {'yes' if full else 'no'} |"
        )
    lines += ["", "## Outcome", ""]
    level1 = [h for h in hits_last4 if h[0] == 1]
    lines.append(
        "Level 1 (4 parity codewords): "
        + ("reproduced by " + ", ".join(f"pad={p}, descriptor={d}" for _, p, d in level1)
           if level1 else "no padding count 0-5 reproduces 364, 620, 420, 729.")
    )
    level2 = [h for h in hits_all if h[0] == 2]
    lines.append("")
    lines.append(
        "Level 2 (8 parity codewords): "
        + ("pad=%d, descriptor=%d reproduces all eight trailing cells "
           "(65, 482, 393, 214, 364, 620, 420, 729)." % level2[0][1:]
           if level2 else "no match.")
    )
    lines += [
        "",
        "The printed symbol is therefore a level-2 symbol: descriptor 8 (itself, six data",
        "codewords, one 900 pad) followed by eight correction codewords, 16 cells in 8 rows",
        "of 2. It is published as level 1, which does not fit the 16-cell geometry; the",
        "unlabelled values are the first four of the eight level-2 correction codewords.",
        "",
    ]
    return "\n".join(lines), bool(level2)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--write", help="write the markdown report to this path")
    args = parser.parse_args(argv)
    text, matched = report()
    if args.write:
        with open(args.write, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return 0 if matched else 1


if __name__ == "__main__":
    sys.exit(main())
