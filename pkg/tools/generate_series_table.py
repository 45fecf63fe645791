"""Regenerate src/se3tangent/_series_table.py from the exact kernel series."""

from pathlib import Path

from se3tangent.kernels import series_table_source

target = Path(__file__).resolve().parents[1] / "src" / "se3tangent" / "_series_table.py"
target.write_text(series_table_source())
print(target)
