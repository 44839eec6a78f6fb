/** The red status text: live velocity and rotation angle. */

export interface HudFrame {
    speed: number;
    phi: number;
}

export function hudState(frame: HudFrame): string {
    return `${frame.speed.toFixed(1)} m/s, ${frame.phi.toFixed(1)}°`;
}
