/** Per-trial and exit survey forms; submission is gated on completeness. */

import type { ExitSurveyData, SurveyRatings } from "./types.js";

export interface SurveyItem {
    key: keyof SurveyRatings;
    prompt: string;
    lowLabel: string;
    highLabel: string;
}

export const TRIAL_SURVEY_ITEMS: readonly SurveyItem[] = [
    {
        key: "motivation",
        prompt: "The feedback motivated me to do better in future trials.",
        lowLabel: "Strongly disagree",
        highLabel: "Strongly agree",
    },
    {
        key: "manageable",
        prompt: "How much information did the feedback give?",
        lowLabel: "Much too little",
        highLabel: "Much too much",
    },
    {
        key: "actionable",
        prompt: "The feedback suggestions were actionable.",
        lowLabel: "Strongly disagree",
        highLabel: "Strongly agree",
    },
    {
        key: "timely",
        prompt: "How often was the feedback presented?",
        lowLabel: "Much too infrequent",
        highLabel: "Much too often",
    },
    {
        key: "reflection",
        prompt: "The feedback prompted me to reflect on my performance.",
        lowLabel: "Strongly disagree",
        highLabel: "Strongly agree",
    },
] as const;

export class IncompleteSurveyError extends Error {}

export class SurveyForm {
    private readonly ratings = new Map<keyof SurveyRatings, number>();

    setRating(key: keyof SurveyRatings, value: number): void {
        if (!TRIAL_SURVEY_ITEMS.some((item) => item.key === key)) {
            throw new Error(`unknown survey item ${String(key)}`);
        }
        if (!Number.isInteger(value) || value < 1 || value > 5) {
            throw new RangeError(`rating must be an integer in 1..5, got ${value}`);
        }
        this.ratings.set(key, value);
    }

    rating(key: keyof SurveyRatings): number | undefined {
        return this.ratings.get(key);
    }

    isComplete(): boolean {
        return TRIAL_SURVEY_ITEMS.every((item) => this.ratings.has(item.key));
    }

    /** The submission body; refuses to build one while any item is blank. */
    toSubmission(): SurveyRatings {
        if (!this.isComplete()) {
            const missing = TRIAL_SURVEY_ITEMS.filter((i) => !this.ratings.has(i.key)).map((i) => i.key);
            throw new IncompleteSurveyError(`unanswered items: ${missing.join(", ")}`);
        }
        return {
            motivation: this.ratings.get("motivation")!,
            manageable: this.ratings.get("manageable")!,
            actionable: this.ratings.get("actionable")!,
            timely: this.ratings.get("timely")!,
            reflection: this.ratings.get("reflection")!,
        };
    }
}

export class ExitSurveyForm {
    genderIdentity = "";
    age: number | null = null;
    droneExperience = "";
    videoGameFrequency = "";
    helpfulness: number | null = null;
    strategy = "";

    setHelpfulness(value: number): void {
        if (!Number.isInteger(value) || value < 1 || value > 5) {
            throw new RangeError(`helpfulness must be an integer in 1..5, got ${value}`);
        }
        this.helpfulness = value;
    }

    isComplete(): boolean {
        return (
            this.genderIdentity !== "" &&
            this.age !== null &&
            this.droneExperience !== "" &&
            this.videoGameFrequency !== "" &&
            this.helpfulness !== null
        );
    }

    toSubmission(): ExitSurveyData {
        if (!this.isComplete()) {
            throw new IncompleteSurveyError("exit survey has unanswered fields");
        }
        return {
            gender_identity: this.genderIdentity,
            age: this.age!,
            drone_experience: this.droneExperience,
            video_game_frequency: this.videoGameFrequency,
            helpfulness: this.helpfulness!,
            strategy: this.strategy,
        };
    }
}
