import { describe, expect, it } from "vitest";

import {
    ExitSurveyForm,
    IncompleteSurveyError,
    SurveyForm,
    TRIAL_SURVEY_ITEMS,
} from "../src/survey.js";

describe("TRIAL_SURVEY_ITEMS", () => {
    it("covers the five feedback dimensions with endpoint labels", () => {
        expect(TRIAL_SURVEY_ITEMS.map((i) => i.key)).toEqual([
            "motivation",
            "manageable",
            "actionable",
            "timely",
            "reflection",
        ]);
        for (const item of TRIAL_SURVEY_ITEMS) {
            expect(item.prompt.length).toBeGreaterThan(0);
            expect(item.lowLabel.length).toBeGreaterThan(0);
            expect(item.highLabel.length).toBeGreaterThan(0);
        }
    });
});

describe("SurveyForm", () => {
    it("blocks submission until every item is answered", () => {
        const form = new SurveyForm();
        expect(form.isComplete()).toBe(false);
        expect(() => form.toSubmission()).toThrow(IncompleteSurveyError);

        form.setRating("motivation", 4);
        form.setRating("manageable", 3);
        form.setRating("actionable", 4);
        form.setRating("timely", 2);
        expect(form.isComplete()).toBe(false);
        expect(() => form.toSubmission()).toThrow(IncompleteSurveyError);

        form.setRating("reflection", 5);
        expect(form.isComplete()).toBe(true);
        expect(form.toSubmission()).toEqual({
            motivation: 4,
            manageable: 3,
            actionable: 4,
            timely: 2,
            reflection: 5,
        });
    });

    it("only accepts integer ratings in 1..5", () => {
        const form = new SurveyForm();
        expect(() => form.setRating("motivation", 0)).toThrow(RangeError);
        expect(() => form.setRating("motivation", 6)).toThrow(RangeError);
        expect(() => form.setRating("motivation", 3.5)).toThrow(RangeError);
        form.setRating("motivation", 1);
        form.setRating("motivation", 5); // re-rating is allowed
        expect(form.rating("motivation")).toBe(5);
    });

    it("rejects unknown items", () => {
        const form = new SurveyForm();
        expect(() => form.setRating("vibes" as never, 3)).toThrow(/unknown survey item/);
    });
});

describe("ExitSurveyForm", () => {
    function filled(): ExitSurveyForm {
        const form = new ExitSurveyForm();
        form.genderIdentity = "non-binary";
        form.age = 29;
        form.droneExperience = "none";
        form.videoGameFrequency = "weekly";
        form.setHelpfulness(4);
        form.strategy = "aimed for slower finals";
        return form;
    }

    it("gates on the required fields", () => {
        const form = new ExitSurveyForm();
        expect(form.isComplete()).toBe(false);
        expect(() => form.toSubmission()).toThrow(IncompleteSurveyError);
        expect(filled().isComplete()).toBe(true);
    });

    it("builds the submission body", () => {
        expect(filled().toSubmission()).toEqual({
            gender_identity: "non-binary",
            age: 29,
            drone_experience: "none",
            video_game_frequency: "weekly",
            helpfulness: 4,
            strategy: "aimed for slower finals",
        });
    });

    it("bounds the helpfulness rating", () => {
        const form = new ExitSurveyForm();
        expect(() => form.setHelpfulness(0)).toThrow(RangeError);
        expect(() => form.setHelpfulness(6)).toThrow(RangeError);
    });

    it("the strategy text is optional", () => {
        const form = filled();
        form.strategy = "";
        expect(form.isComplete()).toBe(true);
    });
});
