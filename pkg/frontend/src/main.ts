// Browser wiring: one session per tab, one in-flight request at a time.

import { ServiceClient } from "./api.js";
import { renderScene } from "./dom.js";
import { buildScene } from "./scene.js";
import {
  SessionState,
  applyMutationResponse,
  createSession,
  currentNode,
  navigateTo,
  withBusy,
  withError,
  withReport,
  withSearch,
} from "./state.js";

const SEEDS = [
  "a2-linear", "a3-linear", "a5-preprojective", "d4-preprojective",
  "a6-alternating", "kronecker3", "cycle3",
];

const MODELS = [
  "a1-cluster", "a2-cluster", "a3-cluster", "a4-cluster", "a5-cluster",
  "a6-cluster", "a3-cluster3", "a6-tau4",
];

function apiBase(): string {
  const param = new URLSearchParams(window.location.search).get("api");
  return param ?? "";
}

const client = new ServiceClient(apiBase(), (url, init) => window.fetch(url, init));

let state: SessionState | null = null;

function redraw(): void {
  const root = document.getElementById("app");
  if (!root || !state) return;
  renderScene(root, buildScene(state), {
    onVertexClick: (vertex) => void mutateAt(vertex),
    onCrumbClick: (nodeId) => {
      if (!state || state.busy) return;
      state = navigateTo(state, nodeId);
      redraw();
    },
  });
}

async function loadSeed(name: string): Promise<void> {
  const result = await client.loadSeed(name);
  if (result.kind === "ok") {
    state = createSession(result.raw);
  } else if (result.kind === "error") {
    state = state ? withError(state, result.message) : null;
    if (!state) window.alert(result.message);
  }
  redraw();
}

async function mutateAt(vertex: number): Promise<void> {
  if (!state || state.busy) return;
  if (!currentNode(state).doc.admissible) {
    state = withError(state, "quiver is not mutation-admissible");
    redraw();
    return;
  }
  state = withBusy(state, true);
  redraw();
  const result = await client.mutate(currentNode(state).doc.quiver, vertex);
  state = withBusy(state, false);
  if (result.kind === "ok") {
    state = applyMutationResponse(state, vertex, result.raw);
  } else if (result.kind === "error") {
    state = withError(state, result.message);
  }
  redraw();
}

async function searchAcyclic(): Promise<void> {
  if (!state || state.busy) return;
  state = withBusy(state, true);
  redraw();
  const result = await client.searchAcyclic(currentNode(state).doc.quiver);
  state = withBusy(state, false);
  if (result.kind === "ok") {
    state = withSearch(state, result.raw);
  } else if (result.kind === "error") {
    state = withError(state, result.message);
  }
  redraw();
}

async function showReport(kind: "model" | "ar", name: string): Promise<void> {
  if (!state || state.busy) return;
  state = withBusy(state, true);
  redraw();
  const result = kind === "model"
    ? await client.loadModel(name)
    : await client.loadModelArDot(name);
  state = withBusy(state, false);
  if (result.kind === "ok") {
    const title = kind === "model" ? `model ${name}` : `AR quiver of ${name} (DOT)`;
    state = withReport(state, title, result.raw);
  } else if (result.kind === "error") {
    state = withError(state, result.message);
  }
  redraw();
}

function boot(): void {
  const select = document.getElementById("seed-select") as HTMLSelectElement;
  for (const seed of SEEDS) {
    const option = document.createElement("option");
    option.value = seed;
    option.textContent = seed;
    select.appendChild(option);
  }
  select.value = "a3-linear";
  select.addEventListener("change", () => void loadSeed(select.value));
  const searchButton = document.getElementById("search-acyclic") as HTMLButtonElement;
  searchButton.addEventListener("click", () => void searchAcyclic());

  const modelSelect = document.getElementById("model-select") as HTMLSelectElement;
  for (const model of MODELS) {
    const option = document.createElement("option");
    option.value = model;
    option.textContent = model;
    modelSelect.appendChild(option);
  }
  const modelButton = document.getElementById("view-model") as HTMLButtonElement;
  modelButton.addEventListener("click", () => void showReport("model", modelSelect.value));
  const arButton = document.getElementById("view-ar") as HTMLButtonElement;
  arButton.addEventListener("click", () => void showReport("ar", modelSelect.value));

  void loadSeed(select.value);
}

boot();
