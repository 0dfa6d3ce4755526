// SVG/DOM applier for a Scene. Browser-only; everything testable lives in
// scene.ts and state.ts.

import type { Scene } from "./scene.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface Handlers {
  onVertexClick(vertex: number): void;
  onCrumbClick(nodeId: number): void;
}

function svgEl(name: string, attrs: Record<string, string>): SVGElement {
  const el = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) el.setAttribute(key, value);
  return el;
}

export function renderScene(root: HTMLElement, scene: Scene, handlers: Handlers): void {
  root.replaceChildren();

  const badgeBar = document.createElement("div");
  badgeBar.className = "badges";
  for (const [name, on] of [["acyclic", scene.badges.acyclic],
                            ["admissible", scene.badges.admissible]] as const) {
    const badge = document.createElement("span");
    badge.className = `badge ${on ? "on" : "off"}`;
    badge.textContent = `${name}: ${on ? "yes" : "no"}`;
    badgeBar.appendChild(badge);
  }
  if (scene.busy) {
    const busy = document.createElement("span");
    busy.className = "badge busy";
    busy.textContent = "working...";
    badgeBar.appendChild(busy);
  }
  root.appendChild(badgeBar);

  const crumbBar = document.createElement("div");
  crumbBar.className = "breadcrumb";
  scene.breadcrumb.forEach((entry, idx) => {
    if (idx > 0) crumbBar.appendChild(document.createTextNode(" > "));
    const link = document.createElement("a");
    link.textContent = entry.label;
    link.href = "#";
    if (entry.current) link.className = "current";
    link.addEventListener("click", (ev) => {
      ev.preventDefault();
      handlers.onCrumbClick(entry.id);
    });
    crumbBar.appendChild(link);
  });
  root.appendChild(crumbBar);

  const svg = svgEl("svg", {
    width: String(scene.width),
    height: String(scene.height),
    viewBox: `0 0 ${scene.width} ${scene.height}`,
  });
  const defs = svgEl("defs", {});
  const marker = svgEl("marker", {
    id: "arrowhead", markerWidth: "8", markerHeight: "8",
    refX: "7", refY: "3", orient: "auto",
  });
  marker.appendChild(svgEl("path", { d: "M0,0 L7,3 L0,6 Z", fill: "#444" }));
  defs.appendChild(marker);
  svg.appendChild(defs);

  const radius = 16;
  for (const edge of scene.edges) {
    const from = scene.nodes[edge.from]!;
    const to = scene.nodes[edge.to]!;
    const dx = to.x - from.x;
    const dy = to.y - from.y;
    const len = Math.max(Math.hypot(dx, dy), 0.01);
    const nx = -dy / len;
    const ny = dx / len;
    const gap = 7 * edge.offset;
    const sx = from.x + (dx / len) * radius + nx * gap;
    const sy = from.y + (dy / len) * radius + ny * gap;
    const tx = to.x - (dx / len) * (radius + 4) + nx * gap;
    const ty = to.y - (dy / len) * (radius + 4) + ny * gap;
    svg.appendChild(svgEl("line", {
      x1: String(sx), y1: String(sy), x2: String(tx), y2: String(ty),
      stroke: "#444", "stroke-width": "1.5", "marker-end": "url(#arrowhead)",
    }));
  }
  for (const node of scene.nodes) {
    const group = svgEl("g", { class: "vertex", "data-vertex": String(node.id) });
    const circle = svgEl("circle", {
      cx: String(node.x), cy: String(node.y), r: String(radius),
      fill: "#e8eefc", stroke: "#2b4a91", "stroke-width": "1.5",
    });
    const text = svgEl("text", {
      x: String(node.x), y: String(node.y + 4),
      "text-anchor": "middle", "font-size": "12",
    });
    text.textContent = node.label;
    group.appendChild(circle);
    group.appendChild(text);
    group.addEventListener("click", () => handlers.onVertexClick(node.id));
    svg.appendChild(group);
  }
  root.appendChild(svg);

  if (scene.searchVerdict) {
    const verdict = document.createElement("div");
    verdict.className = "verdict";
    verdict.textContent = scene.searchVerdict;
    root.appendChild(verdict);
  }
  if (scene.error) {
    const toast = document.createElement("div");
    toast.className = "toast";
    toast.textContent = scene.error;
    root.appendChild(toast);
  }

  const rawPanel = document.createElement("pre");
  rawPanel.className = "raw-json";
  rawPanel.textContent = scene.rawJson;
  root.appendChild(rawPanel);

  if (scene.report) {
    const heading = document.createElement("div");
    heading.className = "report-title";
    heading.textContent = scene.report.title;
    root.appendChild(heading);
    const panel = document.createElement("pre");
    panel.className = "raw-json report";
    panel.textContent = scene.report.raw;
    root.appendChild(panel);
  }
}
