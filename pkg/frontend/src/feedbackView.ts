/** Condition-specific presentation of a feedback payload. */

import type { Condition, FeedbackPayload } from "./types.js";

export type FeedbackViewModel =
    | { kind: "table"; rows: Array<[string, string]> }
    | { kind: "paragraph"; text: string }
    | { kind: "image+paragraph"; imageSvg: string; text: string };

export class PayloadShapeError extends Error {}

/**
 * Baseline renders a stats table, Text a paragraph, Multimodal the image on
 * the left with the paragraph beside it. A payload whose shape does not
 * match the session condition is rejected.
 */
export function feedbackView(payload: FeedbackPayload, condition: Condition): FeedbackViewModel {
    if (payload.condition !== condition) {
        throw new PayloadShapeError(
            `payload is for condition ${payload.condition}, session is ${condition}`,
        );
    }
    if (condition === "Baseline") {
        if (payload.summary === undefined || payload.text !== undefined || payload.image_svg !== undefined) {
            throw new PayloadShapeError("baseline payload must carry summary stats only");
        }
        const s = payload.summary;
        return {
            kind: "table",
            rows: [
                ["Outcome", s.outcome],
                ["Score", `${s.score} / 100`],
                ["Final speed", `${s.final_speed.toFixed(1)} m/s`],
                ["Final angle", `${s.final_angle.toFixed(1)}°`],
                ["Duration", `${s.duration.toFixed(1)} s`],
            ],
        };
    }
    if (condition === "Text") {
        if (payload.text === undefined || payload.image_svg !== undefined || payload.summary !== undefined) {
            throw new PayloadShapeError("text payload must carry the paragraph only");
        }
        return { kind: "paragraph", text: payload.text };
    }
    if (payload.text === undefined || payload.image_svg === undefined) {
        throw new PayloadShapeError("multimodal payload must carry both text and image");
    }
    return { kind: "image+paragraph", imageSvg: payload.image_svg, text: payload.text };
}
