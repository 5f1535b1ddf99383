/** DOM construction and rendering. Pure view code: every displayed value
 *  comes from the server payload carried in the ViewState. */

import type { EndoSummary, Instance, Move } from "./api.js";
import { nameShift, shiftName, type ViewState } from "./model.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface Refs {
  root: HTMLElement;
  instanceSelect: HTMLSelectElement;
  mInput: HTMLInputElement;
  startBtn: HTMLButtonElement;
  banner: HTMLElement;
  spinner: HTMLElement;
  objectLabel: HTMLElement;
  badge: HTMLElement;
  acyclicFlag: HTMLElement;
  chips: HTMLElement;
  dirLeft: HTMLInputElement;
  dirRight: HTMLInputElement;
  triangle: HTMLElement;
  quiver: SVGSVGElement;
  cartan: HTMLElement;
  moves: HTMLElement;
  history: HTMLElement;
  undoBtn: HTMLButtonElement;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

/** Build the static page skeleton under `root` and return element refs.
 *  index.html ships only an empty mount point so tests and the real page
 *  share this exact structure. */
export function buildSkeleton(root: HTMLElement): Refs {
  root.textContent = "";

  const header = el("header");
  header.appendChild(el("h1", "", "silting mutation explorer"));

  const controls = el("div", "controls");
  const instanceSelect = el("select");
  instanceSelect.id = "instance";
  const mInput = el("input") as HTMLInputElement;
  mInput.id = "window-size";
  mInput.type = "number";
  mInput.min = "1";
  mInput.value = "1";
  const startBtn = el("button", "", "start session");
  startBtn.id = "start";
  const dirLeft = el("input") as HTMLInputElement;
  dirLeft.type = "radio";
  dirLeft.name = "dir";
  dirLeft.value = "left";
  dirLeft.checked = true;
  const dirRight = el("input") as HTMLInputElement;
  dirRight.type = "radio";
  dirRight.name = "dir";
  dirRight.value = "right";
  const leftLabel = el("label", "", "left");
  leftLabel.prepend(dirLeft);
  const rightLabel = el("label", "", "right");
  rightLabel.prepend(dirRight);
  controls.append(instanceSelect, mInput, startBtn, leftLabel, rightLabel);
  header.appendChild(controls);

  const banner = el("div", "banner hidden");
  banner.setAttribute("role", "alert");
  const spinner = el("div", "spinner hidden", "working...");

  const stateSection = el("section", "state");
  const objectLabel = el("div", "object-label");
  const badge = el("span", "badge hidden", "outside window");
  const acyclicFlag = el("span", "acyclic-flag");
  const chips = el("div", "chips");
  const triangle = el("div", "triangle");
  stateSection.append(objectLabel, badge, acyclicFlag, chips, triangle);

  const quiverSection = el("section", "quiver");
  quiverSection.appendChild(el("h2", "", "endomorphism quiver"));
  const quiver = document.createElementNS(SVG_NS, "svg");
  quiver.setAttribute("width", "480");
  quiver.setAttribute("height", "260");
  quiverSection.appendChild(quiver);
  const cartan = el("div", "cartan");
  quiverSection.appendChild(cartan);

  const movesSection = el("section", "moves-section");
  movesSection.appendChild(el("h2", "", "available mutations"));
  const moves = el("ul", "moves");
  movesSection.appendChild(moves);

  const historySection = el("section", "history-section");
  historySection.appendChild(el("h2", "", "history"));
  const history = el("ol", "history");
  const undoBtn = el("button", "", "undo");
  undoBtn.id = "undo";
  undoBtn.disabled = true;
  historySection.append(history, undoBtn);

  root.append(header, banner, spinner, stateSection, quiverSection,
    movesSection, historySection);

  return {
    root, instanceSelect, mInput, startBtn, banner, spinner, objectLabel,
    badge, acyclicFlag, chips, dirLeft, dirRight, triangle, quiver, cartan,
    moves, history, undoBtn,
  };
}

export function renderInstances(refs: Refs, instances: Instance[]): void {
  refs.instanceSelect.textContent = "";
  for (const inst of instances) {
    const opt = document.createElement("option");
    opt.value = inst.label;
    opt.textContent = `${inst.label} (${inst.vertices} vertices)`;
    refs.instanceSelect.appendChild(opt);
  }
}

export function showError(refs: Refs, message: string): void {
  refs.banner.textContent = message;
  refs.banner.classList.remove("hidden");
}

export function clearError(refs: Refs): void {
  refs.banner.textContent = "";
  refs.banner.classList.add("hidden");
}

export function setBusy(refs: Refs, busy: boolean): void {
  refs.spinner.classList.toggle("hidden", !busy);
  for (const chip of refs.chips.querySelectorAll("button")) {
    (chip as HTMLButtonElement).disabled = busy;
  }
}

function renderTriangleText(view: ViewState): string {
  const tri = view.triangle;
  if (!tri) {
    return "";
  }
  const mid = tri.mid.length ? `(${tri.mid.join(" + ")})` : "0";
  return `${tri.left} -> ${mid} -> ${tri.right} -> ${shiftName(tri.left)}`;
}

/** Layered layout keyed by shift: one column per degree, so successive
 *  renders of a mutation keep vertices in stable places. */
function quiverLayout(endo: EndoSummary): Map<number, [number, number]> {
  const shifts = [...new Set(endo.summands.map(nameShift))].sort(
    (a, b) => a - b);
  const col = new Map(shifts.map((s, i) => [s, i] as const));
  const rowFill = new Map<number, number>();
  const pos = new Map<number, [number, number]>();
  endo.summands.forEach((name, idx) => {
    const c = col.get(nameShift(name)) ?? 0;
    const r = rowFill.get(c) ?? 0;
    rowFill.set(c, r + 1);
    pos.set(idx, [60 + c * 150, 50 + r * 80]);
  });
  return pos;
}

export function renderQuiver(svg: SVGSVGElement, endo: EndoSummary): void {
  svg.textContent = "";
  const defs = document.createElementNS(SVG_NS, "defs");
  const marker = document.createElementNS(SVG_NS, "marker");
  marker.setAttribute("id", "arrowhead");
  marker.setAttribute("markerWidth", "8");
  marker.setAttribute("markerHeight", "8");
  marker.setAttribute("refX", "7");
  marker.setAttribute("refY", "3");
  marker.setAttribute("orient", "auto");
  const tip = document.createElementNS(SVG_NS, "path");
  tip.setAttribute("d", "M0,0 L7,3 L0,6 Z");
  marker.appendChild(tip);
  defs.appendChild(marker);
  svg.appendChild(defs);

  const pos = quiverLayout(endo);
  const n = endo.summands.length;
  for (let a = 0; a < n; a++) {
    for (let b = 0; b < n; b++) {
      const count = endo.arrows[a]?.[b] ?? 0;
      if (count === 0 || a === b) {
        continue;
      }
      const [x1, y1] = pos.get(a)!;
      const [x2, y2] = pos.get(b)!;
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("class", "quiver-arrow");
      line.setAttribute("x1", String(x1));
      line.setAttribute("y1", String(y1));
      line.setAttribute("x2", String(x2));
      line.setAttribute("y2", String(y2));
      line.setAttribute("stroke", "black");
      line.setAttribute("marker-end", "url(#arrowhead)");
      svg.appendChild(line);
      if (count > 1) {
        const label = document.createElementNS(SVG_NS, "text");
        label.setAttribute("class", "arrow-multiplicity");
        label.setAttribute("x", String((x1 + x2) / 2));
        label.setAttribute("y", String((y1 + y2) / 2 - 6));
        label.textContent = `x${count}`;
        svg.appendChild(label);
      }
    }
  }
  endo.summands.forEach((name, idx) => {
    const [x, y] = pos.get(idx)!;
    const g = document.createElementNS(SVG_NS, "g");
    g.setAttribute("class", "quiver-node");
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(x));
    circle.setAttribute("cy", String(y));
    circle.setAttribute("r", "22");
    circle.setAttribute("fill", "white");
    circle.setAttribute("stroke", "black");
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(x));
    label.setAttribute("y", String(y + 4));
    label.setAttribute("text-anchor", "middle");
    label.textContent = name;
    g.append(circle, label);
    svg.appendChild(g);
  });
}

export function renderCartan(container: HTMLElement, endo: EndoSummary): void {
  container.textContent = "";
  const table = el("table", "cartan-table");
  const head = el("tr");
  head.appendChild(el("th", "", ""));
  for (const name of endo.summands) {
    head.appendChild(el("th", "", name));
  }
  table.appendChild(head);
  endo.cartan.forEach((row, b) => {
    const tr = el("tr");
    tr.appendChild(el("th", "", endo.summands[b] ?? ""));
    for (const v of row) {
      tr.appendChild(el("td", "", String(v)));
    }
    table.appendChild(tr);
  });
  container.appendChild(table);
}

function moveText(mv: Move): string {
  if (mv.error || mv.target === null) {
    return `${mv.dir} at ${mv.summand}: unavailable`;
  }
  const target = `{${mv.target.join(", ")}}`;
  const suffix = mv.in_window === false ? "  [outside window]" : "";
  return `${mv.dir} at ${mv.summand} -> ${target}${suffix}`;
}

export function renderView(refs: Refs, view: ViewState): void {
  refs.objectLabel.textContent =
    `${view.quiver}  window size ${view.m}  current ${view.object}`;
  refs.badge.classList.toggle("hidden", view.inWindow);

  refs.chips.textContent = "";
  for (const chip of view.chips) {
    const btn = el("button", "chip", chip.label);
    btn.dataset.index = String(chip.index);
    btn.dataset.name = chip.name;
    refs.chips.appendChild(btn);
  }

  refs.triangle.textContent = renderTriangleText(view);
  refs.acyclicFlag.textContent =
    view.endo.acyclic ? "quiver acyclic" : "quiver has a cycle";

  renderQuiver(refs.quiver, view.endo);
  renderCartan(refs.cartan, view.endo);

  refs.moves.textContent = "";
  for (const mv of view.moves) {
    refs.moves.appendChild(el("li", "move", moveText(mv)));
  }

  refs.history.textContent = "";
  for (const h of view.history) {
    refs.history.appendChild(
      el("li", "step", `${h.dir}: ${h.removed} -> ${h.added}`));
  }
  refs.undoBtn.disabled = view.historyLength === 0;
}
