import { describe, expect, it } from "vitest";

import { feedbackView, PayloadShapeError } from "../src/feedbackView.js";
import type { FeedbackPayload, SummaryStats } from "../src/types.js";

const SUMMARY: SummaryStats = {
    outcome: "Safe",
    score: 47,
    final_speed: 2.7,
    final_angle: 0.0,
    duration: 42.8,
};

function payload(overrides: Partial<FeedbackPayload>): FeedbackPayload {
    return { session: "S0001", trial: 1, condition: "Baseline", ...overrides };
}

describe("feedbackView", () => {
    it("baseline payload renders a stats table", () => {
        const model = feedbackView(payload({ summary: SUMMARY }), "Baseline");
        expect(model.kind).toBe("table");
        if (model.kind !== "table") return;
        expect(model.rows).toContainEqual(["Outcome", "Safe"]);
        expect(model.rows).toContainEqual(["Score", "47 / 100"]);
        expect(model.rows).toContainEqual(["Final speed", "2.7 m/s"]);
        expect(model.rows).toContainEqual(["Duration", "42.8 s"]);
    });

    it("text payload renders a paragraph", () => {
        const model = feedbackView(
            payload({ condition: "Text", text: "Nice flying on this attempt." }),
            "Text",
        );
        expect(model).toEqual({ kind: "paragraph", text: "Nice flying on this attempt." });
    });

    it("multimodal payload renders image beside paragraph", () => {
        const model = feedbackView(
            payload({ condition: "Multimodal", text: "Look at the circle.", image_svg: "<svg/>" }),
            "Multimodal",
        );
        expect(model).toEqual({
            kind: "image+paragraph",
            imageSvg: "<svg/>",
            text: "Look at the circle.",
        });
    });

    it("rejects a text payload that carries an image", () => {
        const bad = payload({ condition: "Text", text: "hello", image_svg: "<svg/>" });
        expect(() => feedbackView(bad, "Text")).toThrow(PayloadShapeError);
    });

    it("rejects a baseline payload with generated text", () => {
        const bad = payload({ summary: SUMMARY, text: "should not be here" });
        expect(() => feedbackView(bad, "Baseline")).toThrow(PayloadShapeError);
    });

    it("rejects a multimodal payload missing its image", () => {
        const bad = payload({ condition: "Multimodal", text: "where is the picture" });
        expect(() => feedbackView(bad, "Multimodal")).toThrow(PayloadShapeError);
    });

    it("rejects a payload for a different condition", () => {
        const bad = payload({ condition: "Text", text: "hello" });
        expect(() => feedbackView(bad, "Multimodal")).toThrow(PayloadShapeError);
    });
});
