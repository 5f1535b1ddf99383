/** Page controller: wires the skeleton to the API client.
 *
 * All mutations are optimistic only in chrome (spinner); the view is always
 * re-rendered from the authoritative server state. One mutation may be in
 * flight at a time and stale responses are dropped.
 */

import { ApiClientError, SiltClient, type Triangle } from "./api.js";
import { RequestGate, toViewState } from "./model.js";
import {
  buildSkeleton,
  clearError,
  renderInstances,
  renderView,
  setBusy,
  showError,
  type Refs,
} from "./render.js";

export class Controller {
  readonly refs: Refs;
  private readonly client: SiltClient;
  private readonly gate = new RequestGate();
  private sessionId: string | null = null;
  private lastTriangle: Triangle | null = null;
  /** Last begun action; tests await this after firing a DOM event. */
  pending: Promise<void> = Promise.resolve();

  constructor(root: HTMLElement, client: SiltClient) {
    this.client = client;
    this.refs = buildSkeleton(root);
    this.refs.startBtn.addEventListener("click", () => {
      this.pending = this.start();
    });
    this.refs.undoBtn.addEventListener("click", () => {
      this.pending = this.undo();
    });
    this.refs.chips.addEventListener("click", (ev) => {
      const btn = (ev.target as HTMLElement).closest("button.chip");
      if (btn instanceof HTMLButtonElement && btn.dataset.index) {
        this.pending = this.mutate(Number(btn.dataset.index));
      }
    });
  }

  async init(): Promise<void> {
    try {
      const doc = await this.client.instances();
      renderInstances(this.refs, doc.instances);
    } catch (err) {
      this.fail(err);
    }
  }

  private direction(): string {
    return this.refs.dirRight.checked ? "right" : "left";
  }

  private fail(err: unknown): void {
    const msg = err instanceof ApiClientError
      ? `${err.code}: ${err.message}`
      : err instanceof Error ? err.message : String(err);
    showError(this.refs, msg);
  }

  /** Re-render from the authoritative server state. */
  private async refresh(): Promise<void> {
    if (!this.sessionId) {
      return;
    }
    const state = await this.client.getSession(this.sessionId);
    renderView(this.refs, toViewState(state, this.lastTriangle));
  }

  async start(): Promise<void> {
    const token = this.gate.begin();
    if (token === null) {
      return;
    }
    clearError(this.refs);
    setBusy(this.refs, true);
    try {
      const quiver = this.refs.instanceSelect.value;
      const m = Number(this.refs.mInput.value);
      const state = await this.client.createSession(quiver, m);
      if (!this.gate.settle(token)) {
        return;
      }
      this.sessionId = state.id;
      this.lastTriangle = null;
      await this.refresh();
    } catch (err) {
      this.gate.settle(token);
      this.fail(err);
    } finally {
      setBusy(this.refs, false);
    }
  }

  async mutate(index: number): Promise<void> {
    if (!this.sessionId) {
      return;
    }
    const token = this.gate.begin();
    if (token === null) {
      return;
    }
    clearError(this.refs);
    setBusy(this.refs, true);
    try {
      const res = await this.client.mutate(this.sessionId, index,
        this.direction());
      if (!this.gate.settle(token)) {
        return;
      }
      this.lastTriangle = res.triangle;
      await this.refresh();
    } catch (err) {
      this.gate.settle(token);
      this.fail(err);
    } finally {
      setBusy(this.refs, false);
    }
  }

  async undo(): Promise<void> {
    if (!this.sessionId) {
      return;
    }
    const token = this.gate.begin();
    if (token === null) {
      return;
    }
    clearError(this.refs);
    setBusy(this.refs, true);
    try {
      await this.client.undo(this.sessionId);
      if (!this.gate.settle(token)) {
        return;
      }
      this.lastTriangle = null;
      await this.refresh();
    } catch (err) {
      this.gate.settle(token);
      this.fail(err);
    } finally {
      setBusy(this.refs, false);
    }
  }
}

export function boot(root: HTMLElement, client?: SiltClient): Controller {
  const controller = new Controller(root, client ?? new SiltClient());
  controller.pending = controller.init();
  return controller;
}

if (typeof document !== "undefined") {
  const mount = document.getElementById("app");
  // only self-boot on the real page; tests mount explicitly
  if (mount && !mount.dataset.testMount) {
    boot(mount);
  }
}
