import { beforeEach, describe, expect, it } from "vitest";

import type { EndoSummary, FullState } from "../src/api.js";
import { toViewState } from "../src/model.js";
import {
  buildSkeleton,
  clearError,
  renderInstances,
  renderQuiver,
  renderView,
  showError,
  type Refs,
} from "../src/render.js";
import { loadFixture, type ScriptEntry } from "./helpers.js";

const states = loadFixture<{
  instances: { instances: { label: string; vertices: number }[] };
  fresh_state: FullState;
  block_state: FullState;
}>("states.json");
const roundtrip = loadFixture<ScriptEntry[]>("roundtrip.json");

let refs: Refs;

beforeEach(() => {
  document.body.innerHTML = '<div id="app"></div>';
  refs = buildSkeleton(document.getElementById("app")!);
});

describe("skeleton", () => {
  it("starts with banner and badge hidden and undo disabled", () => {
    expect(refs.banner.classList.contains("hidden")).toBe(true);
    expect(refs.badge.classList.contains("hidden")).toBe(true);
    expect(refs.undoBtn.disabled).toBe(true);
  });

  it("fills the instance picker", () => {
    renderInstances(refs, states.instances.instances);
    const options = [...refs.instanceSelect.options];
    expect(options).toHaveLength(5);
    expect(options[0]!.value).toBe("A2");
  });
});

describe("renderView", () => {
  it("renders chips and a one-arrow quiver for the regular start", () => {
    renderView(refs, toViewState(states.fresh_state));
    const chips = [...refs.chips.querySelectorAll("button.chip")];
    expect(chips.map((c) => c.textContent)).toEqual(["(P1, 0)", "(P2, 0)"]);
    expect(refs.quiver.querySelectorAll("line.quiver-arrow")).toHaveLength(1);
    expect(refs.quiver.querySelectorAll("g.quiver-node")).toHaveLength(2);
    expect(refs.badge.classList.contains("hidden")).toBe(true);
    expect(refs.undoBtn.disabled).toBe(true);
    expect(refs.moves.querySelectorAll("li")).toHaveLength(4);
    expect(refs.acyclicFlag.textContent).toBe("quiver acyclic");
  });

  it("renders a block-diagonal algebra as disconnected vertices", () => {
    renderView(refs, toViewState(states.block_state));
    expect(refs.quiver.querySelectorAll("line.quiver-arrow")).toHaveLength(0);
    expect(refs.quiver.querySelectorAll("g.quiver-node")).toHaveLength(2);
  });

  it("shows the badge when the object leaves the window", () => {
    const outside = roundtrip[roundtrip.length - 1]!.response as FullState;
    expect(outside.in_window).toBe(false);
    renderView(refs, toViewState(outside));
    expect(refs.badge.classList.contains("hidden")).toBe(false);
    const names = [...refs.chips.querySelectorAll("button.chip")]
      .map((c) => (c as HTMLElement).dataset.name);
    expect(names).toContain("S1[1]");
    expect(refs.undoBtn.disabled).toBe(false);
  });

  it("renders the Cartan matrix table", () => {
    renderView(refs, toViewState(states.fresh_state));
    const rows = [...refs.cartan.querySelectorAll("tr")];
    expect(rows).toHaveLength(3);
    const cells = [...rows[1]!.querySelectorAll("td")]
      .map((td) => td.textContent);
    expect(cells).toEqual(
      states.fresh_state.endo.cartan[0]!.map((v) => String(v)));
  });
});

describe("renderQuiver", () => {
  it("labels arrow multiplicities greater than one", () => {
    const endo: EndoSummary = {
      summands: ["P1", "P2"], dim: 4,
      cartan: [[1, 2], [0, 1]], arrows: [[0, 0], [2, 0]], acyclic: true,
    };
    renderQuiver(refs.quiver, endo);
    const labels = [...refs.quiver.querySelectorAll("text.arrow-multiplicity")];
    expect(labels.map((t) => t.textContent)).toEqual(["x2"]);
  });

  it("places vertices in columns keyed by shift", () => {
    const endo: EndoSummary = {
      summands: ["P1", "S1[1]"], dim: 2,
      cartan: [[1, 0], [0, 1]], arrows: [[0, 0], [0, 0]], acyclic: true,
    };
    renderQuiver(refs.quiver, endo);
    const xs = [...refs.quiver.querySelectorAll("g.quiver-node circle")]
      .map((c) => Number(c.getAttribute("cx")));
    expect(xs[1]).toBeGreaterThan(xs[0]!);
  });
});

describe("error banner", () => {
  it("shows and clears", () => {
    showError(refs, "bad-quiver: no such label");
    expect(refs.banner.classList.contains("hidden")).toBe(false);
    expect(refs.banner.textContent).toMatch(/bad-quiver/);
    clearError(refs);
    expect(refs.banner.classList.contains("hidden")).toBe(true);
  });
});
