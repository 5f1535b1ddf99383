/** Scripted round-trip against recorded server exchanges: start an A2
 *  session, mutate at P2, undo, then mutate twice to leave the window. */

import { beforeEach, describe, expect, it } from "vitest";

import { SiltClient } from "../src/api.js";
import { boot, type Controller } from "../src/main.js";
import { loadFixture, scriptedFetch, type ScriptEntry } from "./helpers.js";

const script = loadFixture<ScriptEntry[]>("roundtrip.json");
const states = loadFixture<{
  bad_start_error: { status: number; response: unknown };
}>("states.json");

function chipLabels(c: Controller): (string | null)[] {
  return [...c.refs.chips.querySelectorAll("button.chip")]
    .map((b) => b.textContent);
}

function arrowCount(c: Controller): number {
  return c.refs.quiver.querySelectorAll("line.quiver-arrow").length;
}

function badgeVisible(c: Controller): boolean {
  return !c.refs.badge.classList.contains("hidden");
}

let root: HTMLElement;

beforeEach(() => {
  document.body.innerHTML = '<div id="app" data-test-mount="1"></div>';
  root = document.getElementById("app")!;
});

describe("explorer round-trip", () => {
  it("mutates, undoes, and flags leaving the window", async () => {
    const { fetch, remaining } = scriptedFetch(script);
    const controller = boot(root, new SiltClient("/api/v1", fetch));
    await controller.pending;
    expect(controller.refs.instanceSelect.value).toBe("A2");

    controller.refs.startBtn.click();
    await controller.pending;
    expect(chipLabels(controller)).toEqual(["(P1, 0)", "(P2, 0)"]);
    expect(controller.refs.undoBtn.disabled).toBe(true);

    // P2 left: chips become {P1, S1} and the quiver keeps one arrow
    const chips = controller.refs.chips.querySelectorAll("button.chip");
    (chips[1] as HTMLButtonElement).click();
    await controller.pending;
    expect(chipLabels(controller)).toEqual(["(P1, 0)", "(S1, 0)"]);
    expect(arrowCount(controller)).toBe(1);
    expect(controller.refs.triangle.textContent)
      .toBe("P2 -> (P1) -> S1 -> P2[1]");
    expect(badgeVisible(controller)).toBe(false);
    expect(controller.refs.undoBtn.disabled).toBe(false);

    // undo restores the start object
    controller.refs.undoBtn.click();
    await controller.pending;
    expect(chipLabels(controller)).toEqual(["(P1, 0)", "(P2, 0)"]);
    expect(controller.refs.undoBtn.disabled).toBe(true);

    // redo the first mutation, then mutate the new summand: the second
    // mutation leaves the window and the badge appears
    (controller.refs.chips
      .querySelectorAll("button.chip")[1] as HTMLButtonElement).click();
    await controller.pending;
    expect(badgeVisible(controller)).toBe(false);

    (controller.refs.chips
      .querySelectorAll("button.chip")[1] as HTMLButtonElement).click();
    await controller.pending;
    expect(chipLabels(controller)).toEqual(["(P1, 0)", "(S1, 1)"]);
    expect(badgeVisible(controller)).toBe(true);
    expect(controller.refs.history.querySelectorAll("li")).toHaveLength(2);

    expect(remaining()).toBe(0);
  });

  it("surfaces API errors in the banner and keeps the view", async () => {
    const { fetch } = scriptedFetch([
      script[0]!,
      {
        method: "POST", path: "/api/v1/sessions",
        body: { quiver: "A2", m: 1, start: null },
        status: states.bad_start_error.status,
        response: states.bad_start_error.response,
      },
    ]);
    const controller = boot(root, new SiltClient("/api/v1", fetch));
    await controller.pending;

    controller.refs.startBtn.click();
    await controller.pending;
    expect(controller.refs.banner.classList.contains("hidden")).toBe(false);
    expect(controller.refs.banner.textContent).toMatch(/bad-start/);
    expect(chipLabels(controller)).toEqual([]);
  });
});
