/** Canvas rendering of the simulation window.
 *
 * The view draws server frames only, linearly interpolating between the two
 * most recent ones for smoothness; it never advances the simulation itself.
 */

import { hudState } from "./hud.js";
import type { StateFrame } from "./types.js";

export interface WorldGeometry {
    width: number;
    height: number;
    padXMin: number;
    padXMax: number;
    droneWidth: number;
    droneHeight: number;
}

export const DEFAULT_GEOMETRY: WorldGeometry = {
    width: 1250,
    height: 600,
    padXMin: 650,
    padXMax: 850,
    droneWidth: 40,
    droneHeight: 25,
};

/** Linear interpolation between consecutive server frames. */
export function interpolateFrames(
    prev: StateFrame,
    next: StateFrame,
    alpha: number,
): Pick<StateFrame, "x" | "y" | "phi" | "speed"> {
    const a = Math.min(1, Math.max(0, alpha));
    return {
        x: prev.x + (next.x - prev.x) * a,
        y: prev.y + (next.y - prev.y) * a,
        phi: prev.phi + (next.phi - prev.phi) * a,
        speed: prev.speed + (next.speed - prev.speed) * a,
    };
}

export class GameView {
    private readonly ctx: CanvasRenderingContext2D;

    constructor(
        canvas: HTMLCanvasElement,
        private readonly geometry: WorldGeometry = DEFAULT_GEOMETRY,
    ) {
        canvas.width = geometry.width;
        canvas.height = geometry.height;
        const ctx = canvas.getContext("2d");
        if (ctx === null) {
            throw new Error("canvas 2d context unavailable");
        }
        this.ctx = ctx;
    }

    render(prev: StateFrame | null, next: StateFrame, alpha: number): void {
        const g = this.geometry;
        const view = prev === null ? next : { ...next, ...interpolateFrames(prev, next, alpha) };
        const ctx = this.ctx;

        ctx.fillStyle = "#ffffff";
        ctx.fillRect(0, 0, g.width, g.height);
        ctx.strokeStyle = "#000000";
        ctx.lineWidth = 2;
        ctx.strokeRect(1, 1, g.width - 2, g.height - 2);

        // landing pad on the floor
        ctx.fillStyle = "#000000";
        ctx.fillRect(g.padXMin, g.height - 8, g.padXMax - g.padXMin, 8);

        // drone: a rotated box around its center (world y points up)
        const cx = view.x + g.droneWidth / 2;
        const cy = g.height - (view.y + g.droneHeight / 2);
        ctx.save();
        ctx.translate(cx, cy);
        ctx.rotate((view.phi * Math.PI) / 180);
        ctx.fillStyle = "#222222";
        ctx.fillRect(-g.droneWidth / 2, -g.droneHeight / 2, g.droneWidth, g.droneHeight);
        ctx.restore();

        // HUD in the top-left corner
        ctx.fillStyle = "#cc0000";
        ctx.font = "16px monospace";
        ctx.fillText(hudState(view), 12, 24);
    }
}
