import json
import os
import subprocess
import sys
from pathlib import Path

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

ROOT = Path(__file__).resolve().parents[2]
SCHEMA_DIR = Path(os.environ.get("MODCAT_SCHEMA_DIR", ROOT / "schema"))
CLI = os.environ.get("MODCAT_CLI", str(ROOT / "build" / "modcat"))

build_path = os.environ.get("MODCAT_BUILD_PYTHONPATH")
if build_path:
    sys.path.insert(0, build_path)


def _registry():
    resources = []
    for p in SCHEMA_DIR.glob("*.schema.json"):
        resources.append((p.name, Resource.from_contents(json.loads(p.read_text()))))
    return Registry().with_resources(resources)


REGISTRY = _registry()


def validate(name, doc):
    schema = json.loads((SCHEMA_DIR / name).read_text())
    Draft202012Validator(schema, registry=REGISTRY).validate(doc)


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


@pytest.fixture(scope="module")
def core():
    return pytest.importorskip("modcat")


def test_cli_malle_json_matches_schema():
    p = run("malle", "--n", "1", "--d", "3")
    assert p.returncode == 0, p.stderr
    doc = json.loads(p.stdout)
    validate("modular_datum.schema.json", doc)
    assert len(doc["labels"]) == 3
    assert doc["T"][2] == {"conductor": 3, "coeffs": ["-1", "-1"]}


def test_cli_verify_reports(tmp_path):
    out = tmp_path / "report.json"
    p = run("verify", "main", "--n", "2", "--d", "4", "--out", str(out))
    assert p.returncode == 0, p.stderr
    doc = json.loads(out.read_text())
    validate("report.schema.json", doc)
    assert doc["passed"] is True
    meta = json.loads(Path(str(out) + ".meta.json").read_text())
    assert "seconds" in meta


def test_cli_fusion_matches_schema():
    p = run("fusion", "--n", "1", "--d", "4", "--check", "cuntz")
    assert p.returncode == 0, p.stderr
    validate("report.schema.json", json.loads(p.stdout))


def test_cli_usage_errors():
    p = run("malle", "--n", "3", "--d", "3")
    assert p.returncode == 1
    assert "d >= n+1 required" in p.stderr
    assert run("verify", "nonsense").returncode == 1


def test_cli_csv_layout():
    p = run("malle", "--n", "1", "--d", "3", "--format", "csv")
    lines = p.stdout.splitlines()
    assert lines[0] == "f_index,g_index,conductor,coeffs"
    assert len(lines) == 1 + 9 + 3


def test_module_datum(core):
    doc = core.malle_datum(1, 3)
    validate("modular_datum.schema.json", doc)
    assert core.symbol_count(2, 5) == 50


def test_module_quantum(core):
    doc = core.quantum_datum("A", 1, 3)
    validate("modular_datum.schema.json", doc)
    assert len(doc["labels"]) == 6


def test_module_fusion(core):
    ring = core.fusion_ring(1, 4)
    validate("fusion.schema.json", ring)
    assert min(e["N"] for e in ring["N"]) < 0


def test_module_checks(core):
    for target, args in [("cyclic3", ()), ("g27", ()), ("g24", ()), ("main", (1, 4)), ("cuntz", (2, 4))]:
        doc = core.verify(target, *args)
        validate("report.schema.json", doc)
        assert doc["passed"], target
    with pytest.raises(ValueError):
        core.malle_datum(3, 3)
    with pytest.raises(ValueError):
        core.verify("unknown")
