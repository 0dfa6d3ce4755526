// Pure scene construction: session state in, drawable description out.
// The DOM layer translates this one-to-one into SVG; tests exercise the
// scene, which carries everything user-visible.

import { badges, breadcrumb, currentNode, SessionState } from "./state.js";
import { forceLayout, Point } from "./layout.js";

export interface SceneNode {
  id: number;
  label: string;
  x: number;
  y: number;
}

export interface SceneEdge {
  from: number;
  to: number;
  // perpendicular offset slot for parallel arrows: ..., -1, 0, 1, ...
  offset: number;
}

export interface Scene {
  width: number;
  height: number;
  nodes: SceneNode[];
  edges: SceneEdge[];
  badges: { acyclic: boolean; admissible: boolean };
  breadcrumb: { id: number; label: string; current: boolean }[];
  rawJson: string;
  searchVerdict: string | null;
  report: { title: string; raw: string } | null;
  error: string | null;
  busy: boolean;
}

export function buildScene(state: SessionState, width = 640, height = 480): Scene {
  const node = currentNode(state);
  const quiver = node.doc.quiver;
  const positions: Point[] = forceLayout(quiver, width, height);
  const nodes: SceneNode[] = quiver.vertices.map((label, i) => ({
    id: i,
    label,
    x: positions[i]!.x,
    y: positions[i]!.y,
  }));
  const edges: SceneEdge[] = [];
  for (const [i, j, mult] of quiver.arrows) {
    for (let copy = 0; copy < mult; copy++) {
      edges.push({ from: i, to: j, offset: copy - (mult - 1) / 2 });
    }
  }
  const crumb = breadcrumb(state).map((entry) => ({
    ...entry,
    current: entry.id === state.cursor,
  }));
  return {
    width,
    height,
    nodes,
    edges,
    badges: badges(state),
    breadcrumb: crumb,
    rawJson: node.raw,
    searchVerdict: state.lastSearch ? state.lastSearch.doc.verdict : null,
    report: state.report,
    error: state.error,
    busy: state.busy,
  };
}
