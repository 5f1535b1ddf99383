#!/usr/bin/env python3
"""Record live API exchanges as test fixtures.

The frontend tests replay these recordings through a scripted fetch mock,
so they exercise the real server payload shapes without a running server.
Regenerate after any API change:

    python3 frontend/scripts/gen_fixtures.py
"""

import json
import os

from fastapi.testclient import TestClient

from silt.api import create_app

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "test", "fixtures")


def record(client, script, method, path, body=None):
    if method == "POST":
        res = client.post(path, json=body) if body is not None \
            else client.post(path)
    else:
        res = client.get(path)
    script.append({
        "method": method,
        "path": path,
        "body": body,
        "status": res.status_code,
        "response": res.json(),
    })
    return res.json()


def main():
    os.makedirs(OUT, exist_ok=True)
    client = TestClient(create_app())

    # The scripted round-trip the UI test replays click by click:
    # start A2 m=1, mutate at P2 (index 1) left, undo, then mutate twice
    # so the second mutation leaves the window.
    script = []
    record(client, script, "GET", "/api/v1/instances")
    created = record(client, script, "POST", "/api/v1/sessions",
                     {"quiver": "A2", "m": 1, "start": None})
    sid = created["id"]
    record(client, script, "GET", f"/api/v1/sessions/{sid}")
    record(client, script, "POST", f"/api/v1/sessions/{sid}/mutate",
           {"index": 1, "dir": "left"})
    record(client, script, "GET", f"/api/v1/sessions/{sid}")
    record(client, script, "POST", f"/api/v1/sessions/{sid}/undo")
    record(client, script, "GET", f"/api/v1/sessions/{sid}")
    record(client, script, "POST", f"/api/v1/sessions/{sid}/mutate",
           {"index": 1, "dir": "left"})
    record(client, script, "GET", f"/api/v1/sessions/{sid}")
    record(client, script, "POST", f"/api/v1/sessions/{sid}/mutate",
           {"index": 1, "dir": "left"})
    record(client, script, "GET", f"/api/v1/sessions/{sid}")
    with open(os.path.join(OUT, "roundtrip.json"), "w") as fh:
        json.dump(script, fh, indent=2, sort_keys=True)
        fh.write("\n")

    # Standalone payload samples for render/client unit tests.
    samples = {}
    samples["instances"] = client.get("/api/v1/instances").json()
    fresh = client.post("/api/v1/sessions",
                        json={"quiver": "A2", "m": 1, "start": None}).json()
    samples["fresh_state"] = client.get(
        f"/api/v1/sessions/{fresh['id']}").json()
    # shifted-projective object: its endomorphism algebra has no arrows,
    # so the quiver renders as disconnected vertices
    block = client.post(
        "/api/v1/sessions",
        json={"quiver": "A2", "m": 1, "start": "P2,P1[1]"}).json()
    samples["block_state"] = client.get(
        f"/api/v1/sessions/{block['id']}").json()
    bad = client.post("/api/v1/sessions",
                      json={"quiver": "A2", "m": 1, "start": "P1,P1"})
    samples["bad_start_error"] = {"status": bad.status_code,
                                  "response": bad.json()}
    with open(os.path.join(OUT, "states.json"), "w") as fh:
        json.dump(samples, fh, indent=2, sort_keys=True)
        fh.write("\n")

    print(f"wrote {OUT}/roundtrip.json ({len(script)} exchanges)")
    print(f"wrote {OUT}/states.json ({len(samples)} samples)")


if __name__ == "__main__":
    main()
