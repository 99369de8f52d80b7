"""Driving the engine through its file / CLI / HTTP interfaces.

Everything in the package is reachable without writing Python: spaces
are described by a small JSON schema, the command line wraps the
suitability check and CSV exports, and a stateless HTTP server exposes
the same pipeline for interactive front ends.
"""

import json
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from ecpsplines.cli import main as cli
from ecpsplines.server import create_app

SPEC = {
    "interval": [0.0, 2.0],
    "knots": [1.0],
    "sections": [{"tokens": ["1", "x", "x^2", "x^3"]}],
    "connections": [[[1, 0, 0, 0],
                     [0, 1, 0, 0],
                     [0, 0, 1, 0],
                     [0, -3.9, 0, 1]]],
    "sweep": {"path": "connections/0/entries/3/1",
              "from": -6.0, "to": 0.0, "steps": 7},
}

with tempfile.TemporaryDirectory() as tmp:
    spec_path = Path(tmp) / "space.json"
    spec_path.write_text(json.dumps(SPEC))

    print("=== ecpsplines check (exit code 0 = suitable, 1 = not) ===")
    code = cli(["check", str(spec_path), "--report", "text"])
    print(f"exit code: {code}")

    print()
    print("=== ecpsplines sweep over one matrix entry ===")
    cli(["sweep", str(spec_path)])

    print()
    print("=== CSV exports ===")
    cli(["basis", str(spec_path), "--grid", "50", "--out", tmp])
    cli(["weights", str(spec_path), "--grid", "50", "--out", tmp])

print()
print("=== the same pipeline over HTTP ===")
client = TestClient(create_app())
body = {**SPEC, "seq": 1}
report = client.post("/api/check", json=body).json()
print("POST /api/check ->", json.dumps(
    {k: report[k] for k in ("suitable", "m", "k", "seq")}))

body["control"] = [[0, 0], [1, 1], [2, -1], [3, 0]]
body["samples"] = 10
curve = client.post("/api/curve", json=body).json()
print(f"POST /api/curve -> {len(curve['t'])} samples, "
      f"endpoints {curve['points'][0]} .. {curve['points'][-1]}")

catalog = client.get("/api/catalog").json()
print("GET /api/catalog -> tokens:", ", ".join(catalog["tokens"]))
