"""Labeling service walkthrough: run the HTTP API, label points, read back.

Starts the service on an ephemeral port against a tiny dataset, walks the
typical analyst loop over plain HTTP, then shuts down.  The browser UI in
frontend/ talks to exactly these endpoints.

Run:  python demos/06_labeling_service.py
"""

import http.client
import json
import threading
from pathlib import Path

from modepick.datagen import generate_dataset
from modepick.service import create_server

out_dir = Path(__file__).parent / "out"
ds_dir = out_dir / "demo_service"
if not (ds_dir / "manifest.json").exists():
    generate_dataset(6, "pseudo_real", seed=31, out_dir=ds_dir, overwrite=True)

server = create_server(ds_dir, port=0, label_store=out_dir / "demo_labels.ndjson")
threading.Thread(target=server.serve_forever, daemon=True).start()
port = server.server_address[1]
print(f"service on 127.0.0.1:{port}")


def call(method, path, body=None):
    conn = http.client.HTTPConnection("127.0.0.1", port, timeout=10)
    conn.request(method, path, body=json.dumps(body) if body else None)
    resp = conn.getresponse()
    doc = json.loads(resp.read())
    conn.close()
    return resp.status, doc


status, listing = call("GET", "/api/curvesets?page=0&page_size=10")
print(f"curvesets: {[item['pair_id'] for item in listing['items']]}")

pid = listing["items"][0]["pair_id"]
status, detail = call("GET", f"/api/curvesets/{pid}")
print(f"{pid}: {len(detail['points'])} points at revision {detail['revision']}")

status, result = call("PUT", f"/api/curvesets/{pid}/labels", {
    "revision": detail["revision"],
    "author": "demo",
    "edits": [{"index": 0, "label": 1}, {"index": 1, "label": 1}, {"index": 2, "label": 0}],
})
print(f"label write -> HTTP {status}, new revision {result['revision']}")

status, result = call("PUT", f"/api/curvesets/{pid}/labels", {
    "revision": 0, "edits": [{"index": 0, "label": 2}],
})
print(f"stale write -> HTTP {status} (current revision {result.get('current_revision')})")

status, detail = call("GET", f"/api/curvesets/{pid}")
print(f"labels now: {detail['current_labels'][:5]} ...")

server.shutdown()
print("done; labels persisted in", out_dir / "demo_labels.ndjson")
