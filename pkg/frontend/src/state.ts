// Session state: a navigable history *tree* of service responses.
//
// Mutation exploration branches, so history is a tree with a cursor, not a
// stack: every click appends a child of the cursor node, and any node can
// be revisited and re-explored without losing the rest of the tree.  Each
// node stores the raw response text so the displayed JSON is the service
// response byte for byte.

import type { QuiverDoc, SearchDoc } from "./types.js";

export interface HistoryNode {
  id: number;
  parent: number | null;
  vertex: number | null; // vertex mutated to reach this node (null at the root)
  raw: string;
  doc: QuiverDoc;
}

export interface SearchReport {
  raw: string;
  doc: SearchDoc;
}

export interface ServiceReport {
  title: string;
  raw: string; // model dump JSON or AR-quiver DOT, verbatim
}

export interface SessionState {
  nodes: HistoryNode[];
  cursor: number;
  lastSearch: SearchReport | null;
  report: ServiceReport | null;
  error: string | null;
  busy: boolean;
}

export function createSession(raw: string): SessionState {
  const doc = JSON.parse(raw) as QuiverDoc;
  return {
    nodes: [{ id: 0, parent: null, vertex: null, raw, doc }],
    cursor: 0,
    lastSearch: null,
    report: null,
    error: null,
    busy: false,
  };
}

export function currentNode(state: SessionState): HistoryNode {
  const node = state.nodes[state.cursor];
  if (!node) throw new Error(`cursor ${state.cursor} points at no node`);
  return node;
}

export function badges(state: SessionState): { acyclic: boolean; admissible: boolean } {
  const doc = currentNode(state).doc;
  return { acyclic: doc.acyclic, admissible: doc.admissible };
}

// Append the service response for "mutate current at vertex" under the
// cursor and move the cursor there.
export function applyMutationResponse(
  state: SessionState,
  vertex: number,
  raw: string,
): SessionState {
  const doc = JSON.parse(raw) as QuiverDoc;
  const node: HistoryNode = {
    id: state.nodes.length,
    parent: state.cursor,
    vertex,
    raw,
    doc,
  };
  return {
    ...state,
    nodes: [...state.nodes, node],
    cursor: node.id,
    error: null,
  };
}

export function navigateTo(state: SessionState, nodeId: number): SessionState {
  if (nodeId < 0 || nodeId >= state.nodes.length) {
    throw new Error(`history node ${nodeId} does not exist`);
  }
  return { ...state, cursor: nodeId, error: null };
}

export function withSearch(state: SessionState, raw: string): SessionState {
  return { ...state, lastSearch: { raw, doc: JSON.parse(raw) as SearchDoc }, error: null };
}

export function withReport(state: SessionState, title: string, raw: string): SessionState {
  return { ...state, report: { title, raw }, error: null };
}

export function withError(state: SessionState, message: string): SessionState {
  // a failed request leaves the mathematical state untouched
  return { ...state, error: message };
}

export function withBusy(state: SessionState, busy: boolean): SessionState {
  return { ...state, busy };
}

// Vertices mutated along the root -> node path; replaying them through the
// service reproduces the node's quiver (tested against recorded responses).
export function pathFromRoot(state: SessionState, nodeId?: number): number[] {
  let node = state.nodes[nodeId ?? state.cursor];
  const word: number[] = [];
  while (node && node.parent !== null) {
    word.push(node.vertex as number);
    node = state.nodes[node.parent];
  }
  return word.reverse();
}

export function breadcrumb(state: SessionState): { id: number; label: string }[] {
  const ids: number[] = [];
  let node: HistoryNode | undefined = currentNode(state);
  while (node) {
    ids.push(node.id);
    node = node.parent === null ? undefined : state.nodes[node.parent];
  }
  ids.reverse();
  return ids.map((id) => {
    const entry = state.nodes[id]!;
    const vertexLabel =
      entry.vertex === null
        ? "seed"
        : `mu ${entry.doc.quiver.vertices[entry.vertex] ?? entry.vertex}`;
    return { id, label: vertexLabel };
  });
}

export function childrenOf(state: SessionState, nodeId: number): HistoryNode[] {
  return state.nodes.filter((n) => n.parent === nodeId);
}
