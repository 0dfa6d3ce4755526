import { describe, expect, it } from "vitest";

import {
  applyMutationResponse,
  badges,
  breadcrumb,
  childrenOf,
  createSession,
  currentNode,
  navigateTo,
  pathFromRoot,
  withError,
  withSearch,
} from "../src/state.js";
import { fixture } from "./fixtures.js";

const seedRaw = fixture("seed-a3-linear.json");
const cycleRaw = fixture("mutate-a3-vertex1.json");
const backRaw = fixture("mutate-cycle3-vertex1.json");

describe("session state", () => {
  it("starts at the seed with badges from the service document", () => {
    const state = createSession(seedRaw);
    expect(currentNode(state).raw).toBe(seedRaw);
    expect(badges(state)).toEqual({ acyclic: true, admissible: true });
  });

  it("appends mutations under the cursor and moves there", () => {
    let state = createSession(seedRaw);
    state = applyMutationResponse(state, 1, cycleRaw);
    expect(state.cursor).toBe(1);
    expect(currentNode(state).raw).toBe(cycleRaw);
    expect(badges(state).acyclic).toBe(false);
    expect(pathFromRoot(state)).toEqual([1]);
  });

  it("records the involution as depth-2 history with equal endpoints", () => {
    let state = createSession(seedRaw);
    state = applyMutationResponse(state, 1, cycleRaw);
    state = applyMutationResponse(state, 1, backRaw);
    expect(pathFromRoot(state)).toEqual([1, 1]);
    expect(currentNode(state).raw).toBe(state.nodes[0]!.raw);
  });

  it("navigates losslessly: any node can be revisited and re-explored", () => {
    let state = createSession(seedRaw);
    state = applyMutationResponse(state, 1, cycleRaw);
    state = navigateTo(state, 0);
    expect(currentNode(state).raw).toBe(seedRaw);
    // branch from the root; the old child is still there
    state = applyMutationResponse(state, 1, cycleRaw);
    expect(childrenOf(state, 0).length).toBe(2);
    state = navigateTo(state, 1);
    expect(currentNode(state).raw).toBe(cycleRaw);
  });

  it("rejects navigation to nonexistent nodes", () => {
    const state = createSession(seedRaw);
    expect(() => navigateTo(state, 5)).toThrow();
  });

  it("keeps the mathematical state untouched on errors", () => {
    let state = createSession(seedRaw);
    const before = currentNode(state).raw;
    state = withError(state, "service unreachable");
    expect(state.error).toBe("service unreachable");
    expect(currentNode(state).raw).toBe(before);
  });

  it("builds a breadcrumb from root to cursor", () => {
    let state = createSession(seedRaw);
    state = applyMutationResponse(state, 1, cycleRaw);
    const crumb = breadcrumb(state);
    expect(crumb.length).toBe(2);
    expect(crumb[0]!.label).toBe("seed");
    expect(crumb[1]!.label).toContain("2"); // vertex label of index 1
  });

  it("stores search reports verbatim", () => {
    let state = createSession(cycleRaw);
    const searchRaw = fixture("search-cycle3.json");
    state = withSearch(state, searchRaw);
    expect(state.lastSearch!.raw).toBe(searchRaw);
    expect(state.lastSearch!.doc.found).toBe(true);
  });
});
