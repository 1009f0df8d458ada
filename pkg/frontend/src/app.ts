// DOM glue: binds the headless session to the page controls.

import { AtlasClient, type ComplexPair } from "./api.js";
import { ExplorerSession } from "./session.js";

const UNIFORMIZER_FAMILIES: Record<string, [string, string, string]> = {
  QFT3: ["QFT3", "QFT3_012", "QFT3_021"],
  QFT3_012: ["QFT3", "QFT3_012", "QFT3_021"],
  QFT3_021: ["QFT3", "QFT3_012", "QFT3_021"],
  U1: ["U1", "U2", "U3"],
  U2: ["U1", "U2", "U3"],
  U3: ["U1", "U2", "U3"],
  U4: ["U4", "U5", "U6"],
  U5: ["U4", "U5", "U6"],
  U6: ["U4", "U5", "U6"],
};

const el = <T extends HTMLElement>(id: string): T => {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
};

export class App {
  private session: ExplorerSession;

  constructor(baseUrl: string) {
    this.session = new ExplorerSession(new AtlasClient(baseUrl));
  }

  async start(): Promise<void> {
    el<HTMLSelectElement>("radix").addEventListener("change", () => void this.reset());
    el<HTMLSelectElement>("initial").addEventListener("change", () => void this.reset());
    el<HTMLButtonElement>("apply").addEventListener("click", () => void this.apply());
    el<HTMLButtonElement>("apply-custom").addEventListener("click", () => void this.applyCustom());
    el<HTMLButtonElement>("undo").addEventListener("click", () => {
      this.session.undo();
      this.paint();
    });
    el<HTMLButtonElement>("redo").addEventListener("click", () => {
      this.session.redo();
      this.paint();
    });
    el<HTMLButtonElement>("compare").addEventListener("click", () => void this.compare());
    el<HTMLButtonElement>("dismiss").addEventListener("click", () => {
      this.session.dismissBanner();
      this.paint();
    });
    el<HTMLSelectElement>("gate").addEventListener("change", () => this.paint());

    const fragment = window.location.hash.slice(1);
    if (fragment) {
      await this.session.restore(fragment);
      this.refreshControls();
    } else {
      await this.reset();
    }
    this.paint();
  }

  private radix(): number {
    return Number(el<HTMLSelectElement>("radix").value);
  }

  private async reset(): Promise<void> {
    const radix = this.radix();
    const initial = el<HTMLSelectElement>("initial");
    const count = initial.options.length;
    if (count !== radix) {
      initial.innerHTML = Array.from(
        { length: radix },
        (_, j) => `<option value="${j}">basis ${j}</option>`,
      ).join("");
    }
    await this.session.init(radix, Number(initial.value || 0));
    this.refreshControls();
    this.paint();
  }

  private refreshControls(): void {
    const gateSelect = el<HTMLSelectElement>("gate");
    gateSelect.innerHTML = this.session.catalogGates
      .map((g) => `<option value="${g.name}">${g.name}</option>`)
      .join("");
    const grid = el<HTMLTextAreaElement>("custom-matrix");
    grid.placeholder = `custom ${this.radix()}×${this.radix()} matrix, row-major re,im pairs`;
  }

  private async apply(): Promise<void> {
    await this.session.applyGate(el<HTMLSelectElement>("gate").value);
    this.paint();
  }

  private async applyCustom(): Promise<void> {
    const raw = el<HTMLTextAreaElement>("custom-matrix").value;
    const d = this.radix();
    const values = raw.split(",").map((v) => Number(v.trim()));
    const matrix: ComplexPair[][] = [];
    for (let i = 0; i < d; i++) {
      const row: ComplexPair[] = [];
      for (let j = 0; j < d; j++) {
        const k = 2 * (i * d + j);
        row.push([values[k] ?? 0, values[k + 1] ?? 0]);
      }
      matrix.push(row);
    }
    await this.session.applyCustomGate(matrix);
    this.paint();
  }

  private async compare(): Promise<void> {
    const name = el<HTMLSelectElement>("gate").value;
    const family = UNIFORMIZER_FAMILIES[name];
    if (!family) return;
    await this.session.compareUniformizers(family);
    this.paint();
  }

  private paint(): void {
    const vm = this.session.viewModel();
    el("simplex-panel").innerHTML = vm.simplexSvg;
    el("fiber-panel").innerHTML = vm.fiberSvg;
    const badge = el("badge");
    badge.textContent = vm.radix === 4 ? vm.badge.text : "";
    badge.style.background = vm.radix === 4 ? vm.badge.color : "transparent";
    el("badge-detail").textContent = vm.radix === 4 ? vm.badge.detail : "";
    el("steps").textContent = vm.stepLabels
      .map((label, i) => (i === vm.cursor ? `[${label}]` : label))
      .join(" → ");
    el<HTMLButtonElement>("undo").disabled = !vm.canUndo || vm.busy;
    el<HTMLButtonElement>("redo").disabled = !vm.canRedo || vm.busy;
    el<HTMLButtonElement>("apply").disabled = vm.busy;
    const gate = el<HTMLSelectElement>("gate").value;
    el<HTMLButtonElement>("compare").disabled =
      vm.busy || !(gate in UNIFORMIZER_FAMILIES) || !this.session.canCompare(gate);
    const banner = el("banner");
    banner.style.display = vm.banner ? "block" : "none";
    el("banner-text").textContent = vm.banner ?? "";
    window.location.hash = vm.shareFragment;
  }
}
