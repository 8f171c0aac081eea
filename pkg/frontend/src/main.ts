// DOM wiring: load a graph, click an edge, pick one of its admissible moves,
// watch the invariant panel update; undo pops history; export downloads the
// move script in the CLI's replay format.

import { computeLayout, Layout } from "./layout.js";
import { compareRows, projectiveLines, reportRows } from "./panel.js";
import { draw, hitTestEdge } from "./render.js";
import { ServiceError, HttpService } from "./service.js";
import { SessionState } from "./session.js";
import { GraphDoc, MoveDoc, edgeName } from "./types.js";

const serviceUrl = (window as { BRAUERLAB_URL?: string }).BRAUERLAB_URL
  ?? "http://127.0.0.1:8642";
const service = new HttpService(serviceUrl);
const session = new SessionState(service);

const canvas = document.getElementById("graph") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const panel = document.getElementById("panel")!;
const movesBox = document.getElementById("moves")!;
const status = document.getElementById("status")!;
const fileInput = document.getElementById("file") as HTMLInputElement;

let layout: Layout | null = null;
let selected: string | null = null;

function refresh(): void {
  if (!session.latestReport) return;
  layout = computeLayout(session.graph, canvas.width, canvas.height);
  draw(ctx, session.graph, layout, selected);
  const rows = reportRows(session.latestReport)
    .map((r) => `<tr><td>${r.label}</td><td><code>${r.value}</code></td></tr>`)
    .join("");
  const loewy = projectiveLines(session.latestReport)
    .map((line) => `<div><code>${line}</code></div>`).join("");
  panel.innerHTML = `<table>${rows}</table>${loewy}`;
  status.textContent = `${session.moveCount} move(s) applied`;
}

async function loadDoc(doc: GraphDoc): Promise<void> {
  try {
    await session.load(doc);
    selected = null;
    movesBox.innerHTML = "";
    refresh();
  } catch (err) {
    status.textContent = err instanceof ServiceError
      ? `${err.body.error}: ${err.body.message}` : String(err);
  }
}

async function selectEdge(name: string): Promise<void> {
  selected = name;
  refresh();
  const { moves } = await service.admissible(session.graph, name);
  movesBox.innerHTML = "";
  if (!moves.length) {
    movesBox.textContent = "no admissible move: a labeled edge lies in the path";
    return;
  }
  for (const move of moves) {
    const button = document.createElement("button");
    button.textContent = `${edgeName(move.edge)}: ${move.directions.join("/")}`;
    button.onclick = () => applyMove(move);
    movesBox.appendChild(button);
  }
}

async function applyMove(move: MoveDoc): Promise<void> {
  try {
    await session.applyMove({ edge: move.edge, directions: move.directions });
    selected = null;
    movesBox.innerHTML = "";
    refresh();
  } catch (err) {
    status.textContent = String(err);
  }
}

canvas.addEventListener("click", (event) => {
  if (!layout) return;
  const rect = canvas.getBoundingClientRect();
  const hit = hitTestEdge(layout, event.clientX - rect.left, event.clientY - rect.top);
  if (hit) void selectEdge(hit);
});

document.getElementById("undo")!.addEventListener("click", () => {
  if (session.undo()) {
    selected = null;
    movesBox.innerHTML = "";
    refresh();
  }
});

document.getElementById("export")!.addEventListener("click", () => {
  const blob = new Blob([JSON.stringify(session.exportScript(), null, 2)],
                        { type: "application/json" });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = "moves.json";
  a.click();
});

document.getElementById("verify")!.addEventListener("click", async () => {
  status.textContent = (await session.verifyReplay())
    ? "replay check: history reproduces the shown graph"
    : "replay check FAILED";
});

document.getElementById("compare")!.addEventListener("click", async () => {
  const doc = session.graph;
  const cmp = await service.compare(doc, doc);
  panel.innerHTML += compareRows(cmp)
    .map((r) => `<div>${r.label}: <code>${r.value}</code></div>`).join("");
});

fileInput.addEventListener("change", async () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  void loadDoc(JSON.parse(await file.text()) as GraphDoc);
});
