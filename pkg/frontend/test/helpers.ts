/** Scripted fetch mock: replays recorded API exchanges in order and fails
 *  loudly on any deviation, so the tests pin the exact request sequence. */

import { readFileSync } from "node:fs";
import { join } from "node:path";

import type { FetchLike, FetchResponse } from "../src/api.js";

export interface ScriptEntry {
  method: string;
  path: string;
  body: unknown;
  status: number;
  response: unknown;
}

export function loadFixture<T>(name: string): T {
  // vitest runs with cwd = frontend/; import.meta.url is unusable under jsdom
  const path = join(process.cwd(), "test", "fixtures", name);
  return JSON.parse(readFileSync(path, "utf8")) as T;
}

export function makeResponse(status: number, payload: unknown,
                             raw?: string): FetchResponse {
  return {
    ok: status >= 200 && status < 300,
    status,
    statusText: String(status),
    text: async () => raw ?? JSON.stringify(payload),
  };
}

/** Key-order-independent JSON rendering, for body comparison. */
function canon(x: unknown): string {
  if (Array.isArray(x)) {
    return "[" + x.map(canon).join(",") + "]";
  }
  if (x !== null && typeof x === "object") {
    const entries = Object.entries(x as Record<string, unknown>)
      .sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0));
    return "{" +
      entries.map(([k, v]) => `${JSON.stringify(k)}:${canon(v)}`).join(",") +
      "}";
  }
  return JSON.stringify(x);
}

export function scriptedFetch(script: ScriptEntry[]): {
  fetch: FetchLike;
  remaining: () => number;
} {
  const queue = [...script];
  const fetch: FetchLike = async (path, init) => {
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(init.body) : null;
    const expected = queue.shift();
    if (!expected) {
      throw new Error(`unexpected request: ${method} ${path}`);
    }
    const sameBody = canon(body) === canon(expected.body);
    if (method !== expected.method || path !== expected.path || !sameBody) {
      throw new Error(
        `request mismatch:\n  got  ${method} ${path} ${JSON.stringify(body)}` +
        `\n  want ${expected.method} ${expected.path} ` +
        JSON.stringify(expected.body));
    }
    return makeResponse(expected.status, expected.response);
  };
  return { fetch, remaining: () => queue.length };
}
