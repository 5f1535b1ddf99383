import { describe, expect, it } from "vitest";

import {
  ApiClientError,
  SiltClient,
  type FullState,
  type Instance,
  type SessionState,
} from "../src/api.js";
import { loadFixture, makeResponse, scriptedFetch,
  type ScriptEntry } from "./helpers.js";

const roundtrip = loadFixture<ScriptEntry[]>("roundtrip.json");
const states = loadFixture<{
  instances: { instances: Instance[] };
  fresh_state: FullState;
  block_state: FullState;
  bad_start_error: { status: number; response: unknown };
}>("states.json");

describe("SiltClient", () => {
  it("lists instances", async () => {
    const { fetch, remaining } = scriptedFetch([{
      method: "GET", path: "/api/v1/instances", body: null,
      status: 200, response: states.instances,
    }]);
    const client = new SiltClient("/api/v1", fetch);
    const doc = await client.instances();
    expect(doc.instances.map((i) => i.label)).toContain("A2");
    expect(remaining()).toBe(0);
  });

  it("creates a session with the default start object", async () => {
    const { fetch } = scriptedFetch(roundtrip.slice(1, 2));
    const client = new SiltClient("/api/v1", fetch);
    const state: SessionState = await client.createSession("A2", 1);
    expect(state.id).toBe("s1");
    expect(state.object).toBe("{P1, P2}");
    expect(state.summands.map((s) => s.name)).toEqual(["P1", "P2"]);
    expect(state.in_window).toBe(true);
  });

  it("maps API errors to ApiClientError with code and status", async () => {
    const { fetch } = scriptedFetch([{
      method: "POST", path: "/api/v1/sessions",
      body: { quiver: "A2", m: 1, start: null },
      status: states.bad_start_error.status,
      response: states.bad_start_error.response,
    }]);
    const client = new SiltClient("/api/v1", fetch);
    const err = await client.createSession("A2", 1).catch((e) => e);
    expect(err).toBeInstanceOf(ApiClientError);
    expect(err.status).toBe(422);
    expect(err.code).toBe("bad-start");
    expect(err.message).toMatch(/not silting/);
  });

  it("rejects non-JSON payloads", async () => {
    const client = new SiltClient("/api/v1",
      async () => makeResponse(200, null, "<html>oops"));
    const err = await client.instances().catch((e) => e);
    expect(err).toBeInstanceOf(ApiClientError);
    expect(err.code).toBe("bad-payload");
  });

  it("mutate returns the exchange triangle alongside the state", async () => {
    const { fetch } = scriptedFetch(roundtrip.slice(3, 4));
    const client = new SiltClient("/api/v1", fetch);
    const res = await client.mutate("s1", 1, "left");
    expect(res.object).toBe("{P1, S1}");
    expect(res.triangle).toEqual({
      direction: "left", left: "P2", mid: ["P1"], right: "S1",
      removed: "P2", added: "S1",
    });
  });
});
