import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from archcat import fixtures as fx  # noqa: E402
from archcat.thin import to_category  # noqa: E402

CATEGORIES = {
    "PAIR": fx.PAIR,
    "LOOP1": fx.LOOP1,
    "Z3": fx.Z3,
    "IDEMPOTENT": fx.IDEMPOTENT,
    "PARALLEL": fx.PARALLEL,
    "ISO2": fx.ISO2,
    "EMPTY": fx.EMPTY,
    "CHAIN3": to_category(fx.CHAIN3_PRE),
    "DISC2": to_category(fx.DISC2_PRE),
    "INDISC2": to_category(fx.INDISC2_PRE),
    "SINGLE": to_category(fx.SINGLE_PRE),
}


@pytest.fixture
def write_json(tmp_path):
    def write(name, doc):
        path = tmp_path / name
        path.write_text(json.dumps(doc), encoding="utf-8")
        return str(path)

    return write


ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {detail}")
