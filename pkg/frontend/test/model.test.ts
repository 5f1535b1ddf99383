import { describe, expect, it } from "vitest";

import type { FullState } from "../src/api.js";
import { RequestGate, nameShift, shiftName, toViewState } from "../src/model.js";
import { loadFixture } from "./helpers.js";

const states = loadFixture<{ fresh_state: FullState }>("states.json");

describe("toViewState", () => {
  it("mirrors the server state into chips and flags", () => {
    const view = toViewState(states.fresh_state);
    expect(view.chips.map((c) => c.label)).toEqual(["(P1, 0)", "(P2, 0)"]);
    expect(view.chips.map((c) => c.name)).toEqual(["P1", "P2"]);
    expect(view.inWindow).toBe(true);
    expect(view.historyLength).toBe(0);
    expect(view.moves).toHaveLength(4);
    expect(view.triangle).toBeNull();
  });

  it("throws on malformed payloads", () => {
    expect(() => toViewState({} as FullState)).toThrow(TypeError);
    const noEndo = { ...states.fresh_state, endo: null };
    expect(() => toViewState(noEndo as unknown as FullState)).toThrow();
  });
});

describe("name helpers", () => {
  it("parses shifts out of canonical names", () => {
    expect(nameShift("P1")).toBe(0);
    expect(nameShift("S1[2]")).toBe(2);
    expect(nameShift("S1[-1]")).toBe(-1);
  });

  it("shifts names by one for the triangle tail", () => {
    expect(shiftName("P2")).toBe("P2[1]");
    expect(shiftName("S1[1]")).toBe("S1[2]");
    expect(shiftName("S1[-1]")).toBe("S1");
  });
});

describe("RequestGate", () => {
  it("allows one in-flight request and discards stale settles", () => {
    const gate = new RequestGate();
    const t1 = gate.begin();
    expect(t1).not.toBeNull();
    expect(gate.busy).toBe(true);
    expect(gate.begin()).toBeNull();
    expect(gate.settle(t1!)).toBe(true);
    expect(gate.busy).toBe(false);

    const t2 = gate.begin();
    expect(gate.settle(999)).toBe(false);
    expect(gate.busy).toBe(true);
    expect(gate.settle(t2!)).toBe(true);
  });
});
