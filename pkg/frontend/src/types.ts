/** Wire types for the session service API. */

export type Condition = "Baseline" | "Text" | "Multimodal";
export type Outcome = "Safe" | "Unsafe" | "Crash";

export interface SessionCreated {
    id: string;
    condition: Condition;
    created_at: number;
}

/** One client control frame; the only thing the client ever sends in-trial. */
export interface InputFrame {
    t: number;
    throttle: number;
    attitude: -1 | 0 | 1;
}

/** Authoritative simulation state echoed by the server per input frame. */
export interface StateFrame {
    trial: number;
    t: number;
    x: number;
    y: number;
    vx: number;
    vy: number;
    phi: number;
    speed: number;
    terminated: boolean;
    outcome: Outcome | null;
}

export interface SummaryStats {
    outcome: Outcome;
    score: number;
    final_speed: number;
    final_angle: number;
    duration: number;
}

export interface FeedbackPayload {
    session: string;
    trial: number;
    condition: Condition;
    summary?: SummaryStats;
    text?: string;
    image_svg?: string;
}

export interface SurveyRatings {
    motivation: number;
    manageable: number;
    actionable: number;
    timely: number;
    reflection: number;
}

export interface ExitSurveyData {
    gender_identity: string;
    age: number;
    drone_experience: string;
    video_game_frequency: string;
    helpfulness: number;
    strategy: string;
}
