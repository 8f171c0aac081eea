// Canvas drawing of a laid-out labeled ribbon graph: labeled edges dashed,
// multiplicities as vertex badges, the selected edge highlighted.

import { Layout } from "./layout.js";
import { GraphDoc } from "./types.js";

export function draw(ctx: CanvasRenderingContext2D, doc: GraphDoc, layout: Layout,
                     selected: string | null): void {
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
  ctx.lineWidth = 2;
  ctx.font = "12px sans-serif";
  for (const path of layout.edges) {
    ctx.beginPath();
    ctx.setLineDash(path.labeled ? [7, 5] : []);
    ctx.strokeStyle = path.name === selected ? "#d9480f" : "#343a40";
    ctx.moveTo(path.from.x, path.from.y);
    if (path.loop) {
      const c = path.control;
      ctx.bezierCurveTo(c.x - 25, c.y - 25, c.x + 25, c.y + 25,
                        path.to.x, path.to.y);
    } else {
      ctx.quadraticCurveTo(path.control.x, path.control.y, path.to.x, path.to.y);
    }
    ctx.stroke();
    ctx.setLineDash([]);
    ctx.fillStyle = "#495057";
    ctx.fillText(path.name, path.control.x + 4, path.control.y - 4);
  }
  for (const v of doc.vertices) {
    const p = layout.vertices[v.id];
    ctx.beginPath();
    ctx.fillStyle = "#1c7ed6";
    ctx.arc(p.x, p.y, 6, 0, 2 * Math.PI);
    ctx.fill();
    ctx.fillStyle = "#212529";
    const badge = v.multiplicity > 1 ? `${v.id} (m=${v.multiplicity})` : v.id;
    ctx.fillText(badge, p.x + 8, p.y - 8);
  }
}

export function hitTestEdge(layout: Layout, x: number, y: number,
                            tolerance = 12): string | null {
  let best: { name: string; d: number } | null = null;
  for (const path of layout.edges) {
    for (let t = 0; t <= 1; t += 0.05) {
      const px = (1 - t) * (1 - t) * path.from.x + 2 * (1 - t) * t * path.control.x
        + t * t * path.to.x;
      const py = (1 - t) * (1 - t) * path.from.y + 2 * (1 - t) * t * path.control.y
        + t * t * path.to.y;
      const d = Math.hypot(px - x, py - y);
      if (d < tolerance && (!best || d < best.d)) {
        best = { name: path.name, d };
      }
    }
  }
  return best ? best.name : null;
}
