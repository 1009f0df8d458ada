// Headless explorer session: the full interaction logic without the DOM.
//
// The DOM layer (app.ts) binds controls to these methods and paints the
// view model after every change; tests drive the same methods against a
// mocked transport.  All displayed quantities originate from service
// responses held in the trajectory.

import {
  AtlasClient,
  basisState,
  type ComplexPair,
  type GateJson,
  type Notation,
  type StepRequest,
  type ToricPointJson,
} from "./api.js";
import {
  Trajectory,
  decodeShare,
  encodeShare,
  replay,
  stepFromResponse,
  type ShareState,
} from "./trajectory.js";
import {
  badgeFor,
  renderFiberPanel,
  renderSimplexPanel,
  type BadgeView,
  type FiberMark,
} from "./views.js";

export interface ViewModel {
  radix: number;
  stepLabels: string[];
  cursor: number;
  badge: BadgeView;
  simplexSvg: string;
  fiberSvg: string;
  banner: string | null;
  busy: boolean;
  canUndo: boolean;
  canRedo: boolean;
  shareFragment: string;
}

const OVERLAY_COLORS = ["#b03030", "#3060b0", "#309060"];

export class ExplorerSession {
  private trajectory: Trajectory | null = null;
  private gates: GateJson[] = [];
  private radix = 3;
  private initial: ComplexPair[] = basisState(3, 0);
  private busy = false;
  private banner: string | null = null;
  private overlays: FiberMark[] = [];
  private overlayBase: ToricPointJson | null = null;
  notation: Notation = "math";
  tolClass = 1e-9;

  constructor(private readonly client: AtlasClient) {}

  get isBusy(): boolean {
    return this.busy;
  }

  get catalogGates(): GateJson[] {
    return this.gates;
  }

  gate(name: string): GateJson | undefined {
    return this.gates.find((g) => g.name === name);
  }

  /** A gate can feed the uniformizer-comparison overlay only if the
   * catalog tagged it as uniformizing (service-owned knowledge). */
  canCompare(name: string): boolean {
    return this.radix === 3 && (this.gate(name)?.tags.includes("uniformizer") ?? false);
  }

  private request(state: ComplexPair[], gateName?: string, custom?: ComplexPair[][]): StepRequest {
    return {
      state,
      ...(gateName !== undefined ? { gate_name: gateName } : {}),
      ...(custom !== undefined ? { custom_matrix: custom } : {}),
      notation: this.notation,
      tol_class: this.tolClass,
    };
  }

  /** Start over at a basis state; the initial decomposition and report
   * come from an identity step so the UI never derives them locally. */
  async init(radix: number, basisIndex = 0): Promise<void> {
    this.radix = radix;
    this.initial = basisState(radix, basisIndex);
    this.overlays = [];
    this.overlayBase = null;
    this.banner = null;
    const [catalog, response] = await Promise.all([
      this.client.catalog(radix),
      this.client.step(this.request(this.initial, "I")),
    ]);
    this.gates = catalog.gates;
    this.trajectory = new Trajectory(stepFromResponse(`|${basisIndex}>`, response));
  }

  private requireTrajectory(): Trajectory {
    if (!this.trajectory) throw new Error("session not initialized");
    return this.trajectory;
  }

  async applyGate(gateName: string): Promise<boolean> {
    return this.applyRequest(this.request(this.requireTrajectory().current.state, gateName), gateName);
  }

  async applyCustomGate(matrix: ComplexPair[][], label = "custom"): Promise<boolean> {
    return this.applyRequest(
      this.request(this.requireTrajectory().current.state, undefined, matrix),
      label,
    );
  }

  /** One in-flight step at a time; failures leave the trajectory alone
   * and surface as a dismissible banner. */
  private async applyRequest(request: StepRequest, label: string): Promise<boolean> {
    if (this.busy) return false;
    const trajectory = this.requireTrajectory();
    this.busy = true;
    try {
      const response = await this.client.step(request);
      trajectory.push(stepFromResponse(label, response, request));
      this.overlays = [];
      this.overlayBase = null;
      this.banner = null;
      return true;
    } catch (err) {
      this.banner = err instanceof Error ? err.message : String(err);
      return false;
    } finally {
      this.busy = false;
    }
  }

  undo(): boolean {
    const moved = this.requireTrajectory().undo();
    if (moved) {
      this.overlays = [];
      this.overlayBase = null;
    }
    return moved;
  }

  redo(): boolean {
    const moved = this.requireTrajectory().redo();
    if (moved) {
      this.overlays = [];
      this.overlayBase = null;
    }
    return moved;
  }

  dismissBanner(): void {
    this.banner = null;
  }

  /**
   * Overlay the basis-image triangles of a uniformizer family in the
   * barycenter fiber: for every gate in the family, the images of the
   * three basis states, stepping through the family shows the 2π/3
   * rotation.  Family = the chosen gate and its two listed companions.
   */
  async compareUniformizers(family: [string, string, string]): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    try {
      const marks: FiberMark[] = [];
      let base: ToricPointJson | null = null;
      for (const [slot, name] of family.entries()) {
        if (!this.canCompare(name)) throw new Error(`${name} is not a radix-3 uniformizer`);
        for (let j = 0; j < 3; j++) {
          const response = await this.client.step(this.request(basisState(3, j), name));
          base = base ?? response.toric_point;
          const axes = [1, 2];
          marks.push({
            phases: axes.map((i) => response.toric_point.phases[i]),
            color: OVERLAY_COLORS[slot],
            label: `${name}|${j}>`,
          });
        }
      }
      this.overlays = marks;
      this.overlayBase = base;
      this.banner = null;
    } catch (err) {
      this.banner = err instanceof Error ? err.message : String(err);
    } finally {
      this.busy = false;
    }
  }

  shareFragment(): string {
    const trajectory = this.requireTrajectory();
    const share: ShareState = {
      radix: this.radix,
      initial: this.initial,
      initialLabel: trajectory.visible[0].label,
      requests: trajectory.requestLog(),
    };
    return encodeShare(share);
  }

  /** Rebuild a session from a share fragment by replaying its log. */
  async restore(fragment: string): Promise<void> {
    this.overlayBase = null;
    const share = decodeShare(fragment);
    this.radix = share.radix;
    this.initial = share.initial;
    const [catalog, response] = await Promise.all([
      this.client.catalog(share.radix),
      this.client.step(this.request(share.initial, "I")),
    ]);
    this.gates = catalog.gates;
    const initialStep = stepFromResponse(share.initialLabel, response);
    this.trajectory = await replay(initialStep, share.requests, (r) => this.client.step(r));
    this.overlays = [];
  }

  snapshot(): unknown {
    return this.requireTrajectory().snapshot();
  }

  viewModel(): ViewModel {
    const trajectory = this.requireTrajectory();
    const current = trajectory.current;
    const visited = trajectory.visible.map((s) => s.toricPoint.convex);
    return {
      radix: this.radix,
      stepLabels: trajectory.visible.map((s) => s.label),
      cursor: trajectory.cursor,
      badge: badgeFor(current.report, current.minDistance),
      simplexSvg: renderSimplexPanel(this.radix, visited),
      fiberSvg: this.overlayBase
        ? renderFiberPanel(this.overlayBase, this.overlays, 360, 320, false)
        : renderFiberPanel(current.toricPoint, this.overlays),
      banner: this.banner,
      busy: this.busy,
      canUndo: trajectory.canUndo,
      canRedo: trajectory.canRedo,
      shareFragment: this.shareFragment(),
    };
  }
}
