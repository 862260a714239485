"""
Command-line entry point: `render <figure_id> <input_csv> <output_image>`.

fig1 is a static schematic with no data input; pass `-` for its CSV slot.
Exit codes: 0 success, 1 any error (usage, schema, or I/O).
"""

import sys

from .render import FIGURE_IDS, FigureSpec, render

USAGE = (
    "usage: render <figure_id> <input_csv> <output_image>\n"
    f"  figure_id: one of {', '.join(FIGURE_IDS)}\n"
    "  input_csv: CSV emitted by the warptunnel CLI ('-' for fig1)\n"
)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    if len(argv) != 3:
        sys.stderr.write(USAGE)
        return 1
    figure_id, input_csv, output_image = argv
    spec = FigureSpec(figure_id=figure_id,
                      input_csv=None if input_csv == "-" else input_csv,
                      output_image=output_image)
    try:
        render(spec)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
