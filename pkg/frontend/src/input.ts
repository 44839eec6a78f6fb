/** Keyboard control mapping: W/S drive throttle up/down, A/D rotate. */

import type { InputFrame } from "./types.js";

export type ControlAction = "throttle-up" | "throttle-down" | "rotate-left" | "rotate-right";

export const KEY_BINDINGS: Readonly<Record<string, ControlAction>> = {
    w: "throttle-up",
    s: "throttle-down",
    a: "rotate-left",
    d: "rotate-right",
};

/** Which control actions are currently held. */
export interface KeyState {
    throttleUp: boolean;
    throttleDown: boolean;
    rotateLeft: boolean;
    rotateRight: boolean;
}

export function initialKeyState(): KeyState {
    return { throttleUp: false, throttleDown: false, rotateLeft: false, rotateRight: false };
}

/**
 * Apply one key event to the held-key state. Unbound keys are no-ops;
 * bindings are case-insensitive.
 */
export function mapKeyEvent(key: string, pressed: boolean, state: KeyState): KeyState {
    const action = KEY_BINDINGS[key.toLowerCase()];
    if (action === undefined) {
        return state;
    }
    const next = { ...state };
    switch (action) {
        case "throttle-up":
            next.throttleUp = pressed;
            break;
        case "throttle-down":
            next.throttleDown = pressed;
            break;
        case "rotate-left":
            next.rotateLeft = pressed;
            break;
        case "rotate-right":
            next.rotateRight = pressed;
            break;
    }
    return next;
}

/** Attitude command from the held keys; opposing keys cancel out. */
export function attitudeOf(state: KeyState): -1 | 0 | 1 {
    if (state.rotateLeft === state.rotateRight) {
        return 0;
    }
    return state.rotateLeft ? -1 : 1;
}

const THROTTLE_RAMP = 2.0; // per second while W or S is held
const THROTTLE_DECAY = 1.5; // per second toward zero when neither is held

/**
 * Held-to-increase throttle with decay: W ramps it up, S ramps it down, and
 * releasing both lets it bleed back toward zero.
 */
export class ThrottleController {
    value = 0;

    tick(state: KeyState, dt: number): number {
        if (state.throttleUp && !state.throttleDown) {
            this.value += THROTTLE_RAMP * dt;
        } else if (state.throttleDown && !state.throttleUp) {
            this.value -= THROTTLE_RAMP * dt;
        } else {
            const decay = THROTTLE_DECAY * dt;
            this.value = this.value > 0 ? Math.max(0, this.value - decay) : Math.min(0, this.value + decay);
        }
        this.value = Math.min(1, Math.max(0, this.value));
        return this.value;
    }
}

/** The 50 Hz input frame for the current key state. */
export function controlFrame(t: number, throttle: number, state: KeyState): InputFrame {
    return { t, throttle, attitude: attitudeOf(state) };
}
