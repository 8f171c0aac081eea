"""Record service responses and CLI outputs for the explorer's test double.

Run from the repository root:  python3 frontend/scripts/make_fixtures.py

The explorer tests drive SessionState against these recordings, then check
that replaying the exported script through the CLI lands on the same graph
and that the invariant panel shows the CLI's compare values byte-for-byte.
"""

from __future__ import annotations

import json
import pathlib
import sys

REPO = pathlib.Path(__file__).resolve().parents[2]
sys.path.insert(0, str(REPO / "src"))

from brauerlab import catalog                      # noqa: E402
from brauerlab.jsonio import dumps, graph_from_json, graph_to_json  # noqa: E402
from brauerlab.kauer import admissible_moves       # noqa: E402
from brauerlab.ribbon import are_isomorphic        # noqa: E402
from brauerlab.service import handle               # noqa: E402

OUT = REPO / "frontend" / "test" / "fixtures"
OUT.mkdir(parents=True, exist_ok=True)

log = []


def call(path: str, body):
    status, doc = handle(path, body)
    assert status == 200, (path, doc)
    log.append({"path": path, "request": body, "response": doc})
    return doc


graph_doc = graph_to_json(catalog.bga4())
call("/graph/validate", graph_doc)
initial_report = call("/algebra/build", graph_doc)

script = []
current = graph_doc
preferred = ["1", "2", "3"]
for step, edge in enumerate(preferred, start=1):
    g = graph_from_json(current)
    moves = admissible_moves(g, g.graph.edge_named(edge))
    assert moves, f"no admissible move at {edge} on step {step}"
    move = moves[0].to_json()
    # edge by its display name: the same spec the explorer sends and exports
    spec = {"edge": edge, "directions": move["directions"]}
    response = call("/kauer/apply", {"graph": current, "move": spec})
    script.append(spec)
    current = response["graph"]

(OUT / "service_log.json").write_text(dumps(log))
(OUT / "initial_graph.json").write_text(dumps(graph_doc))
(OUT / "script.json").write_text(dumps(script))
(OUT / "session_final_graph.json").write_text(dumps(current))

# CLI replay of the exported script must land on the very same graph
from brauerlab.cli import main as cli_main         # noqa: E402
import contextlib                                   # noqa: E402
import io                                           # noqa: E402

script_path = OUT / "script.json"
buf = io.StringIO()
with contextlib.redirect_stdout(buf):
    code = cli_main(["kauer", str(REPO / "fixtures" / "bga4.json"),
                     "--script", str(script_path)])
assert code == 0
cli_graph = json.loads(buf.getvalue())
(OUT / "cli_final_graph.json").write_text(dumps(cli_graph))
assert cli_graph == current
ok, _ = are_isomorphic(graph_from_json(cli_graph), graph_from_json(current))
assert ok

buf = io.StringIO()
final_path = OUT / "session_final_graph.json"
with contextlib.redirect_stdout(buf):
    code = cli_main(["compare", str(final_path), str(final_path)])
assert code == 0
(OUT / "cli_compare.json").write_text(buf.getvalue())

print("explorer fixtures written to", OUT)
